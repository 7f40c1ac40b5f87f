//! Sparse multivariate polynomials over the rationals.
//!
//! Just enough machinery for the adjoint characteristic polynomial: the rank
//! of a semisimple algebra is the lowest λ-power whose coefficient, as a
//! polynomial in the generic element's coordinates, does not vanish
//! identically. Variable 0 is reserved for λ; variables 1..=n are the
//! coordinates.

use crate::rational::Rational;
use num::Zero;
use std::collections::BTreeMap;

/// Exponent vector keyed monomial map. Zero polynomials have an empty map.
#[derive(Debug, Clone, PartialEq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn variable(nvars: usize, idx: usize, coeff: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !coeff.is_zero() {
            let mut exp = vec![0u32; nvars];
            exp[idx] = 1;
            p.terms.insert(exp, coeff);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, exp: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert(exp, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    /// Collects the coefficient of `var^power` as a polynomial in the
    /// remaining variables (exponent of `var` zeroed out).
    pub fn coefficient_of(&self, var: usize, power: u32) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == power {
                let mut reduced = e.clone();
                reduced[var] = 0;
                out.insert(reduced, c.clone());
            }
        }
        out
    }
}

/// Determinant of a square matrix of polynomials, by dynamic programming
/// over column subsets (Laplace expansion along successive rows).
pub fn det_poly(entries: &[Vec<MPoly>]) -> MPoly {
    let n = entries.len();
    if n == 0 {
        return MPoly::constant(0, crate::rational::rat_int(1));
    }
    let nvars = entries[0][0].nvars;
    debug_assert!(entries.iter().all(|r| r.len() == n));
    // state: column mask of already-used columns after processing |mask| rows
    let mut table: Vec<Option<MPoly>> = vec![None; 1 << n];
    table[0] = Some(MPoly::constant(nvars, crate::rational::rat_int(1)));
    for mask in 0usize..(1 << n) {
        let Some(acc) = table[mask].clone() else {
            continue;
        };
        if acc.is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == n {
            continue;
        }
        let mut used_before = 0u32;
        for col in 0..n {
            if mask & (1 << col) != 0 {
                used_before ^= 1;
                continue;
            }
            // parity of the permutation contribution: row index plus the
            // inversion count against already-used columns
            let sign = (row as u32 + used_before) & 1;
            let entry = &entries[row][col];
            if !entry.is_zero() {
                let mut term = acc.mul(entry);
                if sign == 1 {
                    term = term.neg();
                }
                let next = mask | (1 << col);
                table[next] = Some(match table[next].take() {
                    Some(existing) => existing.add(&term),
                    None => term,
                });
            }
        }
    }
    table[(1 << n) - 1]
        .take()
        .unwrap_or_else(|| MPoly::zero(nvars))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    #[test]
    fn det_of_symbolic_2x2() {
        // | λ   v1 |
        // | v1  λ  |  =  λ² − v1²
        let nv = 2;
        let lam = MPoly::variable(nv, 0, rat_int(1));
        let v1 = MPoly::variable(nv, 1, rat_int(1));
        let det = det_poly(&[vec![lam.clone(), v1.clone()], vec![v1.clone(), lam.clone()]]);
        let expected = lam.mul(&lam).add(&v1.mul(&v1).neg());
        assert_eq!(det, expected);
        assert!(det.coefficient_of(0, 1).is_zero());
        assert!(!det.coefficient_of(0, 2).is_zero());
        assert!(!det.coefficient_of(0, 0).is_zero());
    }

    #[test]
    fn det_matches_numeric() {
        let nv = 1;
        let c = |v: i64| MPoly::constant(nv, rat_int(v));
        let det = det_poly(&[
            vec![c(2), c(1), c(0)],
            vec![c(1), c(3), c(-1)],
            vec![c(0), c(-1), c(4)],
        ]);
        assert_eq!(det, c(18));
    }
}
