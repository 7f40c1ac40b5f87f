//! Finite-dimensional real Lie algebras over exact rationals.
//!
//! An algebra is its structure constants: a sparse map `(i, j) → [e_i, e_j]`
//! for `i < j`, so antisymmetry holds by construction and the Jacobi
//! identity is an explicit, exhaustively checkable property. The canonical
//! subobjects used elsewhere (center, derived ideal, centralizers, the
//! reductive split 𝔤 = 𝔱 ⊕ 𝔰) are all exact kernel or span computations.

use crate::linalg::{det_bareiss, rank_bareiss, row_span_basis, Mat};
use crate::mpoly::{det_poly, MPoly};
use crate::rational::{format_rational, rat_int, Rational};
use num::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("subspace is not closed under the bracket")]
    NotClosed,
    #[error("not reductive: {0}")]
    NotReductive(String),
    #[error("not semisimple: Killing form is degenerate")]
    NotSemisimple,
    #[error("{0}")]
    Invalid(String),
}

/// Element of an algebra, as coordinates in the defining basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    pub coords: Vec<Rational>,
}

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Vector {
            coords: vec![Rational::zero(); dim],
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coords[i] = Rational::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector {
            coords: coords.iter().map(|&c| rat_int(c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        Vector {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        self.scale(&-Rational::one())
    }

    /// `Some(c)` iff `self == c * other` with `other ≠ 0`.
    pub fn scalar_multiple_of(&self, other: &Vector) -> Option<Rational> {
        if other.is_zero() {
            return None;
        }
        let k = other.coords.iter().position(|c| !c.is_zero())?;
        let ratio = &self.coords[k] / &other.coords[k];
        if self == &other.scale(&ratio) {
            Some(ratio)
        } else {
            None
        }
    }

    /// Renders as a combination of named basis vectors, e.g. "T - 2/3 X".
    pub fn render(&self, names: &[String]) -> String {
        let mut out = String::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.clone();
            if out.is_empty() {
                if mag < Rational::zero() {
                    out.push_str("-");
                }
            } else if mag < Rational::zero() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let abs = if mag < Rational::zero() { -mag } else { mag };
            if abs.is_one() {
                out.push_str(&names[i]);
            } else {
                out.push_str(&format!("{} {}", format_rational(&abs), names[i]));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Linear subspace with a cached reduced row-echelon basis. The echelon
/// basis is canonical, so equality compares spans, not generator lists.
#[derive(Debug, Clone)]
pub struct Subspace {
    ambient_dim: usize,
    generators: Vec<Vector>,
    echelon: Vec<Vector>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.echelon == other.echelon
    }
}

impl Eq for Subspace {}

impl Subspace {
    pub fn from_generators(ambient_dim: usize, generators: Vec<Vector>) -> Self {
        for g in &generators {
            assert_eq!(g.dim(), ambient_dim, "generator dimension mismatch");
        }
        let rows = row_span_basis(generators.iter().map(|g| g.coords.clone()).collect());
        let echelon = rows.into_iter().map(|coords| Vector { coords }).collect();
        Subspace {
            ambient_dim,
            generators,
            echelon,
        }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self::from_generators(ambient_dim, Vec::new())
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::from_generators(
            ambient_dim,
            (0..ambient_dim).map(|i| Vector::basis(ambient_dim, i)).collect(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.echelon.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.echelon
    }

    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    pub fn contains(&self, v: &Vector) -> bool {
        if v.is_zero() {
            return true;
        }
        let mut rows: Vec<Vec<Rational>> =
            self.echelon.iter().map(|e| e.coords.clone()).collect();
        rows.push(v.coords.clone());
        row_span_basis(rows).len() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut gens: Vec<Vector> = self.echelon.clone();
        gens.extend(other.echelon.iter().cloned());
        Subspace::from_generators(self.ambient_dim, gens)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // x ∈ A∩B iff x = Aα = Bβ; kernel of [A | -B] read off through A.
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient_dim);
        }
        let mut cols: Vec<Vec<Rational>> = Vec::new();
        for b in &self.echelon {
            cols.push(b.coords.clone());
        }
        for b in &other.echelon {
            cols.push(b.coords.iter().map(|c| -c).collect());
        }
        let m = Mat::from_columns(cols);
        let gens = m
            .kernel_basis()
            .into_iter()
            .map(|k| {
                let mut v = Vector::zero(self.ambient_dim);
                for (i, b) in self.echelon.iter().enumerate() {
                    v = v.add(&b.scale(&k[i]));
                }
                v
            })
            .collect();
        Subspace::from_generators(self.ambient_dim, gens)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the span.
    pub fn coordinates_of(&self, v: &Vector) -> Option<Vec<Rational>> {
        let m = Mat::from_columns(self.echelon.iter().map(|b| b.coords.clone()).collect());
        m.solve(&v.coords)
    }
}

/// Verdict of the exhaustive Jacobi scan.
#[derive(Debug, Clone, PartialEq)]
pub enum JacobiVerdict {
    Ok,
    Violation {
        i: usize,
        j: usize,
        k: usize,
        residual: Vector,
    },
}

/// Structure constants of a real Lie algebra in a fixed basis.
#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebra {
    dim: usize,
    basis_names: Vec<String>,
    /// `(i, j) → [e_i, e_j]` for `i < j`; absent keys mean zero brackets.
    structure: BTreeMap<(usize, usize), Vec<Rational>>,
}

impl LieAlgebra {
    pub fn new(
        basis_names: Vec<String>,
        structure: BTreeMap<(usize, usize), Vec<Rational>>,
    ) -> Result<Self, AlgebraError> {
        let dim = basis_names.len();
        if dim == 0 {
            return Err(AlgebraError::Invalid("empty basis".into()));
        }
        for ((i, j), c) in &structure {
            if *i >= *j || *j >= dim {
                return Err(AlgebraError::Invalid(format!(
                    "bracket key ({i},{j}) out of order or out of range"
                )));
            }
            if c.len() != dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: dim,
                    got: c.len(),
                });
            }
        }
        Ok(LieAlgebra {
            dim,
            basis_names,
            structure,
        })
    }

    pub fn abelian(names: Vec<String>) -> Self {
        Self::new(names, BTreeMap::new()).expect("abelian algebra")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis_names.iter().position(|n| n == name)
    }

    pub fn structure(&self) -> &BTreeMap<(usize, usize), Vec<Rational>> {
        &self.structure
    }

    /// `[e_i, e_j]` for arbitrary index order.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        if i == j {
            return Vector::zero(self.dim);
        }
        let (a, b, flip) = if i < j { (i, j, false) } else { (j, i, true) };
        match self.structure.get(&(a, b)) {
            None => Vector::zero(self.dim),
            Some(c) => {
                let v = Vector { coords: c.clone() };
                if flip {
                    v.neg()
                } else {
                    v
                }
            }
        }
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, a: &Vector, b: &Vector) -> Vector {
        assert_eq!(a.dim(), self.dim, "bracket: lhs dimension mismatch");
        assert_eq!(b.dim(), self.dim, "bracket: rhs dimension mismatch");
        let mut out = Vector::zero(self.dim);
        for ((i, j), c) in &self.structure {
            let coef = &a.coords[*i] * &b.coords[*j] - &a.coords[*j] * &b.coords[*i];
            if coef.is_zero() {
                continue;
            }
            for (k, ck) in c.iter().enumerate() {
                if !ck.is_zero() {
                    out.coords[k] += &coef * ck;
                }
            }
        }
        out
    }

    /// Matrix of `ad v = [v, ·]` acting on coordinate columns.
    pub fn adjoint(&self, v: &Vector) -> Mat<Rational> {
        let cols = (0..self.dim)
            .map(|j| self.bracket(v, &Vector::basis(self.dim, j)).coords)
            .collect();
        Mat::from_columns(cols)
    }

    /// Exhaustive Jacobi scan over basis triples, first violation wins.
    pub fn check_jacobi(&self) -> JacobiVerdict {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let ei = Vector::basis(self.dim, i);
                    let ej = Vector::basis(self.dim, j);
                    let ek = Vector::basis(self.dim, k);
                    let cyc = self
                        .bracket(&self.bracket(&ei, &ej), &ek)
                        .add(&self.bracket(&self.bracket(&ej, &ek), &ei))
                        .add(&self.bracket(&self.bracket(&ek, &ei), &ej));
                    if !cyc.is_zero() {
                        return JacobiVerdict::Violation {
                            i,
                            j,
                            k,
                            residual: cyc,
                        };
                    }
                }
            }
        }
        JacobiVerdict::Ok
    }

    /// Center: kernel of the stacked adjoint matrix.
    pub fn center(&self) -> Subspace {
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        // v central iff [v, e_j] = 0 for all j; each bracket contributes
        // dim linear equations in v.
        for j in 0..self.dim {
            for k in 0..self.dim {
                let row: Vec<Rational> = (0..self.dim)
                    .map(|i| {
                        self.bracket_basis(i, j).coords[k].clone()
                    })
                    .collect();
                rows.push(row);
            }
        }
        let m = Mat::from_rows(rows);
        let gens = m
            .kernel_basis()
            .into_iter()
            .map(|coords| Vector { coords })
            .collect();
        Subspace::from_generators(self.dim, gens)
    }

    /// Derived ideal 𝔰 = [𝔤, 𝔤]: span of all basis brackets.
    pub fn derived_ideal(&self) -> Subspace {
        let gens = self
            .structure
            .keys()
            .map(|&(i, j)| self.bracket_basis(i, j))
            .collect();
        Subspace::from_generators(self.dim, gens)
    }

    /// Centralizer of `v`: kernel of `ad v`.
    pub fn centralizer(&self, v: &Vector) -> Subspace {
        let gens = self
            .adjoint(v)
            .kernel_basis()
            .into_iter()
            .map(|coords| Vector { coords })
            .collect();
        Subspace::from_generators(self.dim, gens)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let b = s.basis();
        for (i, u) in b.iter().enumerate() {
            for v in b.iter().skip(i + 1) {
                if !s.contains(&self.bracket(u, v)) {
                    return false;
                }
            }
        }
        true
    }

    /// The algebra induced on a bracket-closed subspace, in its echelon
    /// basis. Basis names record the combination in the ambient basis.
    pub fn restrict(&self, s: &Subspace) -> Result<LieAlgebra, AlgebraError> {
        if !self.is_subalgebra(s) {
            return Err(AlgebraError::NotClosed);
        }
        let b = s.basis();
        let k = b.len();
        if k == 0 {
            return Err(AlgebraError::Invalid(
                "cannot restrict to the zero subspace".into(),
            ));
        }
        let mut structure = BTreeMap::new();
        for i in 0..k {
            for j in (i + 1)..k {
                let w = self.bracket(&b[i], &b[j]);
                let coords = s
                    .coordinates_of(&w)
                    .ok_or(AlgebraError::NotClosed)?;
                if coords.iter().any(|c| !c.is_zero()) {
                    structure.insert((i, j), coords);
                }
            }
        }
        let names = b
            .iter()
            .map(|v| v.render(&self.basis_names))
            .collect();
        LieAlgebra::new(names, structure)
    }

    /// Killing form matrix κ(e_i, e_j) = tr(ad e_i ∘ ad e_j).
    pub fn killing_matrix(&self) -> Mat<Rational> {
        let ads: Vec<Mat<Rational>> = (0..self.dim)
            .map(|i| self.adjoint(&Vector::basis(self.dim, i)))
            .collect();
        let mut k = Mat::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let prod = ads[i].matmul(&ads[j]);
                let mut tr = Rational::zero();
                for d in 0..self.dim {
                    tr += prod.get(d, d).clone();
                }
                k.set(i, j, tr.clone());
                k.set(j, i, tr);
            }
        }
        k
    }

    pub fn killing_nondegenerate(&self) -> bool {
        !det_bareiss(&self.killing_matrix()).is_zero()
    }

    /// Reductive split 𝔤 = 𝔱 ⊕ 𝔰 with 𝔱 the center, 𝔰 the derived ideal,
    /// and the Killing form of 𝔰 nondegenerate.
    pub fn reductive_split(&self) -> Result<ReductiveSplit, AlgebraError> {
        let t = self.center();
        let s = self.derived_ideal();
        if t.dim() + s.dim() != self.dim {
            return Err(AlgebraError::NotReductive(format!(
                "dim center ({}) + dim derived ideal ({}) ≠ dim 𝔤 ({})",
                t.dim(),
                s.dim(),
                self.dim
            )));
        }
        if t.intersect(&s).dim() != 0 {
            return Err(AlgebraError::NotReductive(
                "center and derived ideal overlap".into(),
            ));
        }
        let derived = if s.dim() > 0 {
            let alg = self.restrict(&s)?;
            if !alg.killing_nondegenerate() {
                return Err(AlgebraError::NotReductive(
                    "Killing form of the derived ideal is degenerate".into(),
                ));
            }
            Some(alg)
        } else {
            None
        };
        Ok(ReductiveSplit {
            t,
            s,
            derived_algebra: derived,
        })
    }

    /// Change of basis: column `i` of `p` holds the new basis vector `f_i`
    /// in old coordinates.
    pub fn change_basis(&self, p: &Mat<Rational>) -> Result<LieAlgebra, AlgebraError> {
        assert_eq!(p.nrows(), self.dim);
        assert_eq!(p.ncols(), self.dim);
        if det_bareiss(p).is_zero() {
            return Err(AlgebraError::Invalid("singular change of basis".into()));
        }
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| Vector { coords: p.col(j) })
            .collect();
        let full = Subspace::from_generators(self.dim, cols.clone());
        // Solve P x = w for each bracket image.
        let pm = Mat::from_columns(cols.iter().map(|c| c.coords.clone()).collect());
        let _ = full;
        let mut structure = BTreeMap::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let w = self.bracket(&cols[i], &cols[j]);
                let coords = pm
                    .solve(&w.coords)
                    .ok_or_else(|| AlgebraError::Invalid("basis solve failed".into()))?;
                if coords.iter().any(|c| !c.is_zero()) {
                    structure.insert((i, j), coords);
                }
            }
        }
        let names = (0..self.dim).map(|i| format!("f{}", i + 1)).collect();
        LieAlgebra::new(names, structure)
    }

    /// Rank data for a semisimple algebra: a sampling upper bound paired
    /// with an exact lower bound from the symbolic adjoint characteristic
    /// polynomial. The two agree on every catalog algebra, certifying the
    /// rank outright.
    pub fn rank_estimate(&self, config: &RankConfig) -> Result<RankEstimate, AlgebraError> {
        if !self.killing_nondegenerate() {
            return Err(AlgebraError::NotSemisimple);
        }
        let mut upper = self.dim;
        let mut witness = Vector::zero(self.dim);
        let consider = |v: &Vector, upper: &mut usize, witness: &mut Vector| {
            if v.is_zero() {
                return;
            }
            let d = self.centralizer(v).dim();
            if d < *upper {
                *upper = d;
                *witness = v.clone();
            }
        };
        // Deterministic samples: basis vectors, then pairwise sums.
        for i in 0..self.dim {
            consider(&Vector::basis(self.dim, i), &mut upper, &mut witness);
        }
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let v = Vector::basis(self.dim, i).add(&Vector::basis(self.dim, j));
                consider(&v, &mut upper, &mut witness);
            }
        }
        let mut rng = StdRng::seed_from_u64(config.seed);
        for _ in 0..config.random_samples {
            let coords = (0..self.dim)
                .map(|_| {
                    let n = rng.gen_range(-9i64..=9);
                    let d = rng.gen_range(1i64..=4);
                    crate::rational::rat(n, d)
                })
                .collect();
            consider(&Vector { coords }, &mut upper, &mut witness);
        }
        let lower = self.rank_lower_bound_certified();
        Ok(RankEstimate {
            upper_bound: upper,
            certified_lower_bound: lower,
            witness,
        })
    }

    /// Exact rank lower bound: the smallest `l` such that the coefficient
    /// of λ^l in det(λI − ad v), as a polynomial in the coordinates of the
    /// generic element v, is not identically zero. Every centralizer has
    /// dimension at least this value, and a regular sample attains it.
    fn rank_lower_bound_certified(&self) -> usize {
        let n = self.dim;
        let nvars = n + 1; // var 0 = λ, vars 1..=n = coordinates of v
        let mut entries = vec![vec![MPoly::zero(nvars); n]; n];
        for (r, row) in entries.iter_mut().enumerate() {
            row[r] = MPoly::variable(nvars, 0, rat_int(1));
        }
        // ad(v) = Σ_i v_i ad(e_i); subtract entrywise.
        for i in 0..n {
            let ad = self.adjoint(&Vector::basis(n, i));
            for r in 0..n {
                for c in 0..n {
                    let coef = ad.get(r, c);
                    if !coef.is_zero() {
                        let term = MPoly::variable(nvars, i + 1, -coef.clone());
                        entries[r][c] = entries[r][c].add(&term);
                    }
                }
            }
        }
        let charpoly = det_poly(&entries);
        for l in 0..=n {
            if !charpoly.coefficient_of(0, l as u32).is_zero() {
                return l;
            }
        }
        n
    }
}

/// Result of `reductive_split`.
#[derive(Debug, Clone)]
pub struct ReductiveSplit {
    pub t: Subspace,
    pub s: Subspace,
    /// The derived ideal as an algebra in its own echelon basis
    /// (`None` when 𝔰 = 0).
    pub derived_algebra: Option<LieAlgebra>,
}

/// Sampling configuration for `rank_estimate`. The fixed default seed keeps
/// runs reproducible; adding samples can only lower the upper bound.
#[derive(Debug, Clone)]
pub struct RankConfig {
    pub random_samples: usize,
    pub seed: u64,
}

impl Default for RankConfig {
    fn default() -> Self {
        RankConfig {
            random_samples: 16,
            seed: 0x5eed,
        }
    }
}

/// Rank verdict: `upper_bound` is the minimum centralizer dimension over
/// the sample set (a heuristic upper bound, exact on certified-regular
/// samples); `certified_lower_bound` is exact. Equality certifies the rank.
#[derive(Debug, Clone, PartialEq)]
pub struct RankEstimate {
    pub upper_bound: usize,
    pub certified_lower_bound: usize,
    pub witness: Vector,
}

impl RankEstimate {
    pub fn certified(&self) -> bool {
        self.upper_bound == self.certified_lower_bound
    }
}

/// Helper assertion used across tests: rank of a matrix built from the
/// adjoint of `v` restricted to nothing in particular, kept here so callers
/// can cross-check `centralizer` against a plain rank computation.
pub fn centralizer_dim_by_rank(g: &LieAlgebra, v: &Vector) -> usize {
    g.dim() - rank_bareiss(&g.adjoint(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::rat;

    fn u2() -> LieAlgebra {
        catalog::builtin("u2").unwrap().algebra
    }

    fn r_sl2() -> LieAlgebra {
        catalog::builtin("r_sl2").unwrap().algebra
    }

    #[test]
    fn bracket_on_basis_matches_structure() {
        let g = u2();
        let x = Vector::basis(4, 1);
        let y = Vector::basis(4, 2);
        let z = Vector::basis(4, 3);
        assert_eq!(g.bracket(&x, &y), z);
        assert_eq!(g.bracket(&y, &z), x);
        assert_eq!(g.bracket(&z, &x), y);
        assert_eq!(g.bracket(&x, &x), Vector::zero(4));
        // Example-2 brackets: [Z, Y] = −X
        let h = r_sl2();
        let xv = Vector::basis(4, 1);
        assert_eq!(
            h.bracket(&Vector::basis(4, 3), &Vector::basis(4, 2)),
            xv.neg()
        );
    }

    #[test]
    fn jacobi_holds_on_u2_and_abelian() {
        assert_eq!(u2().check_jacobi(), JacobiVerdict::Ok);
        let ab = LieAlgebra::abelian(vec!["A".into(), "B".into(), "C".into()]);
        assert_eq!(ab.check_jacobi(), JacobiVerdict::Ok);
    }

    #[test]
    fn jacobi_violation_is_reported_with_residual() {
        // u(2) with [X,Y] replaced by Z + Y genuinely breaks Jacobi:
        // the cyclic sum on (X,Y,Z) picks up [Y,Z] = X.
        let mut structure = BTreeMap::new();
        let dim = 4;
        let mut c = vec![Rational::zero(); dim];
        c[3] = rat_int(1);
        c[2] = rat_int(1);
        structure.insert((1, 2), c);
        let mut cx = vec![Rational::zero(); dim];
        cx[1] = rat_int(1);
        structure.insert((2, 3), cx);
        let mut cy = vec![Rational::zero(); dim];
        cy[2] = rat_int(-1);
        structure.insert((1, 3), cy); // [X,Z] = −Y
        let names = ["T", "X", "Y", "Z"].map(String::from).to_vec();
        let g = LieAlgebra::new(names, structure).unwrap();
        match g.check_jacobi() {
            JacobiVerdict::Violation { i, j, k, residual } => {
                assert_eq!((i, j, k), (1, 2, 3));
                assert_eq!(residual, Vector::basis(4, 1));
            }
            JacobiVerdict::Ok => panic!("expected a Jacobi violation"),
        }
    }

    #[test]
    fn center_of_u2_is_t() {
        let g = u2();
        let c = g.center();
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&Vector::basis(4, 0)));
    }

    #[test]
    fn center_of_abelian_is_everything() {
        let ab = LieAlgebra::abelian((1..=4).map(|i| format!("E{i}")).collect());
        assert_eq!(ab.center().dim(), 4);
    }

    #[test]
    fn center_of_r2_su2_has_rank_two() {
        let g = catalog::builtin("r2_su2").unwrap().algebra;
        assert_eq!(g.center().dim(), 2);
    }

    #[test]
    fn derived_ideals() {
        let g = u2();
        let s = g.derived_ideal();
        assert_eq!(s.dim(), 3);
        for i in 1..4 {
            assert!(s.contains(&Vector::basis(4, i)));
        }
        assert!(!s.contains(&Vector::basis(4, 0)));

        let ab = LieAlgebra::abelian(vec!["A".into(), "B".into()]);
        assert_eq!(ab.derived_ideal().dim(), 0);

        let h = r_sl2();
        let sh = h.derived_ideal();
        assert_eq!(sh.dim(), 3);
        assert!(!sh.contains(&Vector::basis(4, 0)));
    }

    #[test]
    fn center_and_derived_are_ideals() {
        for name in catalog::names() {
            let g = catalog::builtin(name).unwrap().algebra;
            for ideal in [g.center(), g.derived_ideal()] {
                for i in 0..g.dim() {
                    for b in ideal.basis() {
                        let w = g.bracket(&Vector::basis(g.dim(), i), b);
                        assert!(ideal.contains(&w), "{name}: not an ideal");
                    }
                }
            }
        }
    }

    #[test]
    fn reductive_split_cases() {
        let g = u2();
        let split = g.reductive_split().unwrap();
        assert_eq!(split.t.dim(), 1);
        assert_eq!(split.s.dim(), 3);
        assert_eq!(split.t.dim() + split.s.dim(), g.dim());
        // [t, 𝔤] = 0
        for b in split.t.basis() {
            for i in 0..g.dim() {
                assert!(g.bracket(b, &Vector::basis(g.dim(), i)).is_zero());
            }
        }

        let heis = catalog::builtin("heisenberg3").unwrap().algebra;
        assert!(matches!(
            heis.reductive_split(),
            Err(AlgebraError::NotReductive(_))
        ));

        let ab = LieAlgebra::abelian(vec!["A".into(), "B".into()]);
        let split = ab.reductive_split().unwrap();
        assert_eq!(split.t.dim(), 2);
        assert_eq!(split.s.dim(), 0);
    }

    #[test]
    fn centralizers() {
        let g = u2();
        let x = Vector::basis(4, 1);
        let c = g.centralizer(&x);
        assert_eq!(c.dim(), 2);
        assert!(c.contains(&Vector::basis(4, 0)));
        assert!(c.contains(&x));

        let su2 = g.restrict(&g.derived_ideal()).unwrap();
        let cx = su2.centralizer(&Vector::basis(3, 0));
        assert_eq!(cx.dim(), 1);
        assert!(cx.contains(&Vector::basis(3, 0)));

        let ab = LieAlgebra::abelian(vec!["A".into(), "B".into()]);
        assert_eq!(ab.centralizer(&Vector::basis(2, 0)).dim(), 2);
    }

    #[test]
    fn rank_estimates() {
        let cfg = RankConfig::default();
        let u2 = u2();
        let su2 = u2.restrict(&u2.derived_ideal()).unwrap();
        let est = su2.rank_estimate(&cfg).unwrap();
        assert_eq!(est.upper_bound, 1);
        assert!(est.certified());

        let rsl2 = r_sl2();
        let sl2 = rsl2.restrict(&rsl2.derived_ideal()).unwrap();
        let est = sl2.rank_estimate(&cfg).unwrap();
        assert_eq!(est.upper_bound, 1);
        assert!(est.certified());

        let g7 = catalog::builtin("r_su2su2").unwrap().algebra;
        let s6 = g7.restrict(&g7.derived_ideal()).unwrap();
        let est = s6.rank_estimate(&cfg).unwrap();
        assert_eq!(est.upper_bound, 2);
        assert_eq!(est.certified_lower_bound, 2);
        assert!(est.certified());

        let heis = catalog::builtin("heisenberg3").unwrap().algebra;
        assert!(matches!(
            heis.rank_estimate(&cfg),
            Err(AlgebraError::NotSemisimple)
        ));
    }

    #[test]
    fn rank_estimate_is_monotone_in_samples() {
        let g7 = catalog::builtin("r_su2su2").unwrap().algebra;
        let s6 = g7.restrict(&g7.derived_ideal()).unwrap();
        let mut prev = usize::MAX;
        for n in [0, 2, 8, 16, 32] {
            let cfg = RankConfig {
                random_samples: n,
                seed: RankConfig::default().seed,
            };
            let est = s6.rank_estimate(&cfg).unwrap();
            assert!(est.upper_bound <= prev);
            prev = est.upper_bound;
        }
    }

    #[test]
    fn subspace_operations() {
        let a = Subspace::from_generators(
            3,
            vec![Vector::from_ints(&[1, 0, 0]), Vector::from_ints(&[0, 1, 0])],
        );
        let b = Subspace::from_generators(
            3,
            vec![Vector::from_ints(&[0, 1, 0]), Vector::from_ints(&[0, 0, 1])],
        );
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&Vector::from_ints(&[0, 1, 0])));
        assert_eq!(a.sum(&b).dim(), 3);
        assert!(a.contains(&Vector::from_ints(&[2, -3, 0])));
        assert!(!a.contains(&Vector::from_ints(&[0, 0, 1])));
    }

    #[test]
    fn vector_render_and_ratio() {
        let names: Vec<String> = ["T", "X"].map(String::from).to_vec();
        let v = Vector {
            coords: vec![rat_int(1), rat(-2, 3)],
        };
        assert_eq!(v.render(&names), "T - 2/3 X");
        let w = v.scale(&rat(-3, 1));
        assert_eq!(w.scalar_multiple_of(&v), Some(rat(-3, 1)));
        assert_eq!(Vector::zero(2).render(&names), "0");
    }
}
