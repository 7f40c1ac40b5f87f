//! Ordinary and twisted Lie-algebra cohomology by exact rank computation,
//! plus the solver for the potential equation `d_θψ = Ω`.

use crate::algebra::{LieAlgebra, Vector};
use crate::exterior::{basis_tuples, ce_differential, operator_matrix, twisted_differential, KForm};
use crate::linalg::{rank_bareiss, Mat};
use crate::rational::Rational;
use num::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CohomologyError {
    #[error("twist form is not closed: dθ ≠ 0")]
    ThetaNotClosed,
    #[error("degree {0} outside 0..=dim ({1})")]
    DegreeOutOfRange(usize, usize),
    #[error("right-hand side is not d_θ-closed")]
    RhsNotClosed,
    #[error("no potential exists: the twisted class of Ω is nonzero")]
    NoSolution,
}

/// One degree of the (possibly twisted) cochain complex: the differential
/// arriving from degree−1 and the one leaving to degree+1, with the tuple
/// labels of the degree-p coordinate basis.
pub struct CochainComplexSlice {
    pub degree: usize,
    pub matrix_in: Mat<Rational>,
    pub matrix_out: Mat<Rational>,
    pub basis_labels: Vec<Vec<usize>>,
}

fn differential_matrix(
    g: &LieAlgebra,
    theta: Option<&KForm>,
    p: usize,
) -> Result<Mat<Rational>, CohomologyError> {
    let dim = g.dim();
    match theta {
        None => Ok(operator_matrix(dim, p, p + 1, |f| ce_differential(g, f))),
        Some(th) => {
            if !ce_differential(g, th).is_zero() {
                return Err(CohomologyError::ThetaNotClosed);
            }
            Ok(operator_matrix(dim, p, p + 1, |f| {
                twisted_differential(g, th, f).expect("theta closed")
            }))
        }
    }
}

/// Assembles the two differentials around degree `p`.
pub fn slice(
    g: &LieAlgebra,
    theta: Option<&KForm>,
    p: usize,
) -> Result<CochainComplexSlice, CohomologyError> {
    let dim = g.dim();
    if p > dim {
        return Err(CohomologyError::DegreeOutOfRange(p, dim));
    }
    let matrix_in = if p == 0 {
        Mat::zeros(basis_tuples(dim, 0).len(), 0)
    } else {
        differential_matrix(g, theta, p - 1)?
    };
    let matrix_out = differential_matrix(g, theta, p)?;
    Ok(CochainComplexSlice {
        degree: p,
        matrix_in,
        matrix_out,
        basis_labels: basis_tuples(dim, p),
    })
}

/// Ordinary Betti number `dim ker d_p − rank d_{p−1}`, exact.
pub fn betti(g: &LieAlgebra, p: usize) -> usize {
    let s = slice(g, None, p).expect("untwisted slice");
    let n_p = s.basis_labels.len();
    let kernel = n_p - rank_bareiss(&s.matrix_out);
    kernel - rank_bareiss(&s.matrix_in)
}

/// Twisted Betti number for a closed twist θ, exact.
pub fn twisted_betti(g: &LieAlgebra, theta: &KForm, p: usize) -> Result<usize, CohomologyError> {
    let s = slice(g, Some(theta), p)?;
    let n_p = s.basis_labels.len();
    let kernel = n_p - rank_bareiss(&s.matrix_out);
    Ok(kernel - rank_bareiss(&s.matrix_in))
}

/// How the potential returned by `solve_potential` was pinned down along
/// its θ-line of solutions.
#[derive(Debug, Clone, PartialEq)]
pub enum Normalization {
    /// Shifted so that ψ(t) = 0 for the designated central element t
    /// (the unique echelon solution of θ(t) = 1 in the center).
    CenterNormalized { t: Vector },
    /// No central t with θ(t) ≠ 0 exists; this is the raw echelon solution
    /// with free variables zero.
    RawEchelon,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Potential {
    pub psi: KForm,
    pub normalization: Normalization,
}

/// Solves `d_θψ = Ω` for a 1-form ψ. When the twisted H¹ vanishes the
/// solution set is the affine line ψ + ℝθ; the returned representative has
/// ψ(t) = 0 for a designated central t whenever θ is nonzero on the center.
pub fn solve_potential(
    g: &LieAlgebra,
    theta: &KForm,
    omega: &KForm,
) -> Result<Potential, CohomologyError> {
    assert_eq!(omega.degree(), 2, "potential solve expects a 2-form");
    if !ce_differential(g, theta).is_zero() {
        return Err(CohomologyError::ThetaNotClosed);
    }
    if !twisted_differential(g, theta, omega)
        .expect("theta closed")
        .is_zero()
    {
        return Err(CohomologyError::RhsNotClosed);
    }
    let dim = g.dim();
    let d1 = differential_matrix(g, Some(theta), 1)?;
    let rhs = omega.coords();
    let psi_coords = d1.solve(&rhs).ok_or(CohomologyError::NoSolution)?;
    let mut psi = KForm::from_coords(dim, 1, &psi_coords);

    // Designated central t with θ(t) = 1, when available.
    let center = g.center();
    let theta_on_center: Vec<Rational> = center
        .basis()
        .iter()
        .map(|b| theta.eval(std::slice::from_ref(b)).expect("1-form eval"))
        .collect();
    if center.dim() > 0 && theta_on_center.iter().any(|c| !c.is_zero()) {
        let m = Mat::from_rows(vec![theta_on_center]);
        let sol = m.solve(&[Rational::one()]).expect("theta nonzero on center");
        let mut t = Vector::zero(dim);
        for (b, c) in center.basis().iter().zip(&sol) {
            t = t.add(&b.scale(c));
        }
        // ψ_c = ψ − (ψ(t)/θ(t)) θ has ψ_c(t) = 0; here θ(t) = 1.
        let c_shift = psi.eval(std::slice::from_ref(&t)).expect("1-form eval");
        psi = psi.sub(&theta.scale(&c_shift));
        Ok(Potential {
            psi,
            normalization: Normalization::CenterNormalized { t },
        })
    } else {
        Ok(Potential {
            psi,
            normalization: Normalization::RawEchelon,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exterior::KForm;
    use crate::rational::{rat, rat_int};

    fn u2() -> LieAlgebra {
        catalog::builtin("u2").unwrap().algebra
    }

    #[test]
    fn betti_of_u2() {
        let g = u2();
        assert_eq!(betti(&g, 0), 1);
        assert_eq!(betti(&g, 1), 1);
    }

    #[test]
    fn betti_of_abelian_is_binomial() {
        let n = 4;
        let ab = LieAlgebra::abelian((1..=n).map(|i| format!("E{i}")).collect());
        let binom = [1usize, 4, 6, 4, 1];
        for (p, expected) in binom.iter().enumerate() {
            assert_eq!(betti(&ab, p), *expected);
        }
    }

    #[test]
    fn twisted_betti_vanishes_on_u2() {
        let g = u2();
        let t = KForm::dual(4, 0);
        for p in 0..=4 {
            assert_eq!(twisted_betti(&g, &t, p).unwrap(), 0, "degree {p}");
        }
    }

    #[test]
    fn twisted_betti_with_zero_twist_is_betti() {
        let g = u2();
        let zero = KForm::zero(4, 1);
        assert_eq!(twisted_betti(&g, &zero, 0).unwrap(), 1);
        for p in 0..=4 {
            assert_eq!(twisted_betti(&g, &zero, p).unwrap(), betti(&g, p));
        }
    }

    #[test]
    fn twisted_betti_vanishes_on_r_sl2() {
        let g = catalog::builtin("r_sl2").unwrap().algebra;
        let w = KForm::dual(4, 0);
        for p in 0..=4 {
            assert_eq!(twisted_betti(&g, &w, p).unwrap(), 0, "degree {p}");
        }
    }

    #[test]
    fn non_closed_twist_is_rejected() {
        let g = u2();
        let x = KForm::dual(4, 1);
        assert!(matches!(
            twisted_betti(&g, &x, 1),
            Err(CohomologyError::ThetaNotClosed)
        ));
    }

    #[test]
    fn complex_slices_compose_to_zero() {
        let g = u2();
        let t = KForm::dual(4, 0);
        for theta in [None, Some(&t)] {
            for p in 0..=4usize {
                let s = slice(&g, theta, p).unwrap();
                assert!(s.matrix_out.matmul(&s.matrix_in).is_zero_matrix());
            }
        }
    }

    #[test]
    fn solve_potential_on_u2() {
        let g = u2();
        let t = KForm::dual(4, 0);
        let c = rat_int(3);
        let phi = KForm::dual(4, 1).scale(&(rat_int(1) / c.clone()));
        let omega = ce_differential(&g, &phi).sub(&t.wedge(&phi).unwrap());
        let p = solve_potential(&g, &t, &omega).unwrap();
        // solution line is φ + ℝθ; the normalized pick has ψ(T) = 0
        assert_eq!(
            twisted_differential(&g, &t, &p.psi).unwrap(),
            omega
        );
        assert_eq!(p.psi, phi);
        assert!(matches!(p.normalization, Normalization::CenterNormalized { .. }));
    }

    #[test]
    fn solve_potential_zero_rhs() {
        let g = u2();
        let t = KForm::dual(4, 0);
        let p = solve_potential(&g, &t, &KForm::zero(4, 2)).unwrap();
        assert!(p.psi.is_zero());
    }

    #[test]
    fn solve_potential_recovers_example2_psi() {
        let entry = catalog::builtin("r_sl2").unwrap();
        let g = entry.algebra;
        let s = &entry.structures[1];
        let p = solve_potential(&g, &s.theta, &s.omega).unwrap();
        assert_eq!(
            twisted_differential(&g, &s.theta, &p.psi).unwrap(),
            s.omega
        );
        // ψ = (20/9) y + (25/9) z up to a θ-multiple; normalization kills
        // the w-component
        assert_eq!(p.psi.coeff(&[2]), rat(20, 9));
        assert_eq!(p.psi.coeff(&[3]), rat(25, 9));
        assert_eq!(p.psi.coeff(&[0]), rat_int(0));
        assert_eq!(p.psi.coeff(&[1]), rat_int(0));
    }
}
