//! Gaussian rationals ℚ(i), the exact scalars of the complexification.

use crate::rational::{format_rational, Rational};
use num::{One, Zero};
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_real(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn render(&self) -> String {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => format_rational(&self.re),
            (true, false) => format!("{}i", format_rational(&self.im)),
            (false, false) => {
                if self.im > Rational::zero() {
                    format!("{}+{}i", format_rational(&self.re), format_rational(&self.im))
                } else {
                    format!("{}{}i", format_rational(&self.re), format_rational(&self.im))
                }
            }
        }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational {
            re: Rational::one(),
            im: Rational::zero(),
        }
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for GaussianRational {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let n = rhs.norm_sq();
        assert!(!n.is_zero(), "division by zero Gaussian rational");
        let conj = rhs.conj();
        let prod = self * conj;
        GaussianRational {
            re: prod.re / n.clone(),
            im: prod.im / n,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn field_identities() {
        let a = GaussianRational::new(rat(1, 2), rat(-3, 1));
        let b = GaussianRational::new(rat(2, 5), rat(7, 3));
        let prod = a.clone() * b.clone();
        let back = prod / b.clone();
        assert_eq!(back, a);
        assert_eq!(a.clone().conj().conj(), a);
        // conjugation is multiplicative
        let lhs = (a.clone() * b.clone()).conj();
        assert_eq!(lhs, a.conj() * b.conj());
        // i² = −1
        assert_eq!(
            GaussianRational::i() * GaussianRational::i(),
            -GaussianRational::one()
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(GaussianRational::new(rat(2, 1), rat(1, 1)).render(), "2+1i");
        assert_eq!(GaussianRational::new(rat(0, 1), rat(-1, 2)).render(), "-1/2i");
        assert_eq!(GaussianRational::from_real(rat(-3, 4)).render(), "-3/4");
    }
}
