//! Alternating forms on a Lie algebra and the operators that act on them.
//!
//! Coefficients are keyed by strictly increasing index tuples, so a
//! coefficient map is a canonical form and map equality is form equality.
//! Evaluation follows the determinant convention: the wedge of dual basis
//! forms pairs to 1 against the matching basis tuple,
//! `(e_{i_1}* ∧ … ∧ e_{i_k}*)(e_{i_1}, …, e_{i_k}) = 1`.
//!
//! The coboundary operator here is the trivial-coefficient specialization
//! (only the double-bracket sum survives); the rank-one twist lives entirely
//! in `twisted_differential`, `d_θ f = −θ∧f + df`.

use crate::algebra::{LieAlgebra, Vector};
use crate::linalg::Mat;
use crate::rational::{format_rational, parse_rational, Rational};
use num::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExteriorError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("arity mismatch: degree {degree} form applied to {got} vectors")]
    ArityMismatch { degree: usize, got: usize },
    #[error("interior product into a degree-0 form")]
    InteriorIntoScalar,
    #[error("twist form is not closed: dθ ≠ 0")]
    ThetaNotClosed,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Alternating k-linear form with exact rational coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct KForm {
    dim: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, Rational>,
}

/// Sorts `indices` ascending, returning the permutation sign, or `None` if
/// an index repeats.
pub fn sort_with_sign(indices: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut v = indices.to_vec();
    let mut sign = 1i32;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, sign))
    }
}

/// Strictly increasing k-tuples from {0, …, dim−1} in lexicographic order.
pub fn basis_tuples(dim: usize, k: usize) -> Vec<Vec<usize>> {
    if k > dim {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // advance combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] != i + dim - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        current[i] += 1;
        for j in (i + 1)..k {
            current[j] = current[j - 1] + 1;
        }
        if k == 0 {
            return out;
        }
    }
}

impl KForm {
    pub fn zero(dim: usize, degree: usize) -> Self {
        KForm {
            dim,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// Degree-0 form holding a single scalar.
    pub fn scalar(dim: usize, value: Rational) -> Self {
        let mut f = Self::zero(dim, 0);
        if !value.is_zero() {
            f.coeffs.insert(Vec::new(), value);
        }
        f
    }

    /// The dual basis 1-form `e_i*`.
    pub fn dual(dim: usize, i: usize) -> Self {
        assert!(i < dim);
        let mut f = Self::zero(dim, 1);
        f.coeffs.insert(vec![i], Rational::one());
        f
    }

    /// Builds a form from (tuple, coefficient) terms; tuples may arrive in
    /// any order and are canonicalized with the according sign.
    pub fn from_terms(
        dim: usize,
        degree: usize,
        terms: Vec<(Vec<usize>, Rational)>,
    ) -> Result<Self, ExteriorError> {
        let mut f = Self::zero(dim, degree);
        for (tuple, c) in terms {
            if tuple.len() != degree {
                return Err(ExteriorError::ArityMismatch {
                    degree,
                    got: tuple.len(),
                });
            }
            if tuple.iter().any(|&i| i >= dim) {
                return Err(ExteriorError::DimensionMismatch(dim, dim));
            }
            let Some((sorted, sign)) = sort_with_sign(&tuple) else {
                continue; // repeated index: the term is zero
            };
            let mut add = c;
            if sign < 0 {
                add = -add;
            }
            f.add_coeff(sorted, add);
        }
        Ok(f)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.coeffs.iter()
    }

    /// Coefficient of a strictly increasing tuple (zero when absent).
    pub fn coeff(&self, tuple: &[usize]) -> Rational {
        self.coeffs.get(tuple).cloned().unwrap_or_else(Rational::zero)
    }

    /// Signed coefficient lookup for an arbitrary tuple.
    pub fn coeff_signed(&self, tuple: &[usize]) -> Rational {
        match sort_with_sign(tuple) {
            None => Rational::zero(),
            Some((sorted, sign)) => {
                let c = self.coeff(&sorted);
                if sign < 0 {
                    -c
                } else {
                    c
                }
            }
        }
    }

    fn add_coeff(&mut self, tuple: Vec<usize>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(tuple) {
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

    pub fn add(&self, other: &KForm) -> KForm {
        assert_eq!(self.degree, other.degree, "degree mismatch in add");
        assert_eq!(self.dim, other.dim, "dimension mismatch in add");
        let mut out = self.clone();
        for (t, c) in &other.coeffs {
            out.add_coeff(t.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &KForm) -> KForm {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> KForm {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> KForm {
        let mut out = KForm::zero(self.dim, self.degree);
        if c.is_zero() {
            return out;
        }
        for (t, v) in &self.coeffs {
            out.coeffs.insert(t.clone(), v * c);
        }
        out
    }

    /// Graded-commutative associative wedge product.
    pub fn wedge(&self, other: &KForm) -> Result<KForm, ExteriorError> {
        if self.dim != other.dim {
            return Err(ExteriorError::DimensionMismatch(self.dim, other.dim));
        }
        let degree = self.degree + other.degree;
        let mut out = KForm::zero(self.dim, degree);
        if degree > self.dim {
            return Ok(out);
        }
        for (ta, ca) in &self.coeffs {
            for (tb, cb) in &other.coeffs {
                let mut joined = ta.clone();
                joined.extend_from_slice(tb);
                if let Some((sorted, sign)) = sort_with_sign(&joined) {
                    let mut c = ca * cb;
                    if sign < 0 {
                        c = -c;
                    }
                    out.add_coeff(sorted, c);
                }
            }
        }
        Ok(out)
    }

    /// Multilinear alternating evaluation, determinant convention.
    pub fn eval(&self, args: &[Vector]) -> Result<Rational, ExteriorError> {
        if args.len() != self.degree {
            return Err(ExteriorError::ArityMismatch {
                degree: self.degree,
                got: args.len(),
            });
        }
        for a in args {
            if a.dim() != self.dim {
                return Err(ExteriorError::DimensionMismatch(self.dim, a.dim()));
            }
        }
        if self.degree == 0 {
            return Ok(self.coeff(&[]));
        }
        let mut total = Rational::zero();
        for (tuple, c) in &self.coeffs {
            // det of the k×k matrix (args_j)_{tuple_i}
            let k = self.degree;
            let sub = Mat::from_rows(
                (0..k)
                    .map(|r| {
                        (0..k)
                            .map(|cidx| args[cidx].coords[tuple[r]].clone())
                            .collect()
                    })
                    .collect(),
            );
            let d = crate::linalg::det_bareiss(&sub);
            if !d.is_zero() {
                total += c * &d;
            }
        }
        Ok(total)
    }

    /// Coordinates with respect to `basis_tuples(dim, degree)`.
    pub fn coords(&self) -> Vec<Rational> {
        basis_tuples(self.dim, self.degree)
            .into_iter()
            .map(|t| self.coeff(&t))
            .collect()
    }

    pub fn from_coords(dim: usize, degree: usize, coords: &[Rational]) -> Self {
        let tuples = basis_tuples(dim, degree);
        assert_eq!(tuples.len(), coords.len(), "coordinate length mismatch");
        let mut f = KForm::zero(dim, degree);
        for (t, c) in tuples.into_iter().zip(coords) {
            if !c.is_zero() {
                f.coeffs.insert(t, c.clone());
            }
        }
        f
    }

    /// Canonical text rendering, e.g. "-1/2 t^x + 1 y^z"; "0" when zero.
    /// `names` are the basis vector names; dual forms print lowercased.
    pub fn render(&self, names: &[String]) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let dual: Vec<String> = names.iter().map(|n| n.to_lowercase()).collect();
        let mut out = String::new();
        for (tuple, c) in &self.coeffs {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let label = if tuple.is_empty() {
                String::new()
            } else {
                tuple
                    .iter()
                    .map(|&i| dual[i].as_str())
                    .collect::<Vec<_>>()
                    .join("^")
            };
            if label.is_empty() {
                out.push_str(&format_rational(&abs));
            } else {
                out.push_str(&format!("{} {}", format_rational(&abs), label));
            }
        }
        out
    }

    /// Parses the canonical rendering back into a form. Terms look like
    /// `-1/2 t^x`, `y^z`, `+ 3 w`; the degree is inferred and must be
    /// uniform across terms.
    pub fn parse(src: &str, names: &[String]) -> Result<KForm, ExteriorError> {
        let dim = names.len();
        let dual: Vec<String> = names.iter().map(|n| n.to_lowercase()).collect();
        let src = src.trim();
        if src == "0" {
            return Ok(KForm::zero(dim, 1));
        }
        // split into signed chunks
        let normalized = src.replace(" - ", " + -");
        let chunks: Vec<&str> = normalized.split(" + ").collect();
        let mut terms: Vec<(Vec<usize>, Rational)> = Vec::new();
        let mut degree: Option<usize> = None;
        for chunk in chunks {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let (coeff_str, label) = match chunk.rsplit_once(' ') {
                Some((c, l)) => (c.trim(), l.trim()),
                None => ("1", chunk),
            };
            let (coeff_str, label) = if label
                .chars()
                .all(|ch| ch.is_ascii_digit() || ch == '/' || ch == '-')
            {
                // pure scalar term (degree 0)
                (chunk, "")
            } else {
                (coeff_str, label)
            };
            let mut coeff = if coeff_str.is_empty() || coeff_str == "-" {
                if coeff_str == "-" {
                    -Rational::one()
                } else {
                    Rational::one()
                }
            } else {
                parse_rational(coeff_str).map_err(ExteriorError::Parse)?
            };
            let tuple: Vec<usize> = if label.is_empty() {
                Vec::new()
            } else {
                label
                    .split('^')
                    .map(|part| {
                        let part = part.trim();
                        let (part, neg) = match part.strip_prefix('-') {
                            Some(rest) => (rest, true),
                            None => (part, false),
                        };
                        if neg {
                            coeff = -coeff.clone();
                        }
                        dual.iter()
                            .position(|d| d == &part.to_lowercase())
                            .ok_or_else(|| {
                                ExteriorError::Parse(format!("unknown form name {part:?}"))
                            })
                    })
                    .collect::<Result<_, _>>()?
            };
            match degree {
                None => degree = Some(tuple.len()),
                Some(d) if d != tuple.len() => {
                    return Err(ExteriorError::Parse(
                        "mixed degrees in form literal".to_string(),
                    ))
                }
                _ => {}
            }
            terms.push((tuple, coeff));
        }
        let degree = degree.ok_or_else(|| ExteriorError::Parse("empty form".to_string()))?;
        KForm::from_terms(dim, degree, terms)
    }
}

/// Chevalley–Eilenberg differential with trivial coefficients:
/// `(df)(x_0,…,x_p) = Σ_{j<k} (−1)^{j+k} f([x_j,x_k], x_0,…,ĵ,…,k̂,…)`.
pub fn ce_differential(g: &LieAlgebra, f: &KForm) -> KForm {
    assert_eq!(g.dim(), f.dim(), "form/algebra dimension mismatch");
    let dim = g.dim();
    let p = f.degree();
    let mut out = KForm::zero(dim, p + 1);
    if p + 1 > dim || f.is_zero() {
        return out;
    }
    for tuple in basis_tuples(dim, p + 1) {
        let mut val = Rational::zero();
        for j in 0..tuple.len() {
            for k in (j + 1)..tuple.len() {
                let bracket = g.bracket_basis(tuple[j], tuple[k]);
                if bracket.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = tuple
                    .iter()
                    .enumerate()
                    .filter(|(idx, _)| *idx != j && *idx != k)
                    .map(|(_, &v)| v)
                    .collect();
                let sign = if (j + k) % 2 == 0 { 1 } else { -1 };
                for (m, bm) in bracket.coords.iter().enumerate() {
                    if bm.is_zero() {
                        continue;
                    }
                    let mut full = Vec::with_capacity(p);
                    full.push(m);
                    full.extend_from_slice(&rest);
                    let c = f.coeff_signed(&full);
                    if !c.is_zero() {
                        let term = bm * &c;
                        if sign > 0 {
                            val += term;
                        } else {
                            val -= term;
                        }
                    }
                }
            }
        }
        if !val.is_zero() {
            out.coeffs.insert(tuple, val);
        }
    }
    out
}

/// Algebraic Lie derivative (the cochain module action with trivial
/// coefficients): `(L_v f)(x_1,…,x_p) = −Σ_i f(x_1,…,[v,x_i],…,x_p)`.
pub fn lie_derivative(g: &LieAlgebra, v: &Vector, f: &KForm) -> KForm {
    assert_eq!(g.dim(), f.dim());
    let dim = g.dim();
    let p = f.degree();
    let mut out = KForm::zero(dim, p);
    if p == 0 {
        return out;
    }
    for tuple in basis_tuples(dim, p) {
        let mut val = Rational::zero();
        for slot in 0..p {
            let w = g.bracket(v, &Vector::basis(dim, tuple[slot]));
            if w.is_zero() {
                continue;
            }
            for (m, wm) in w.coords.iter().enumerate() {
                if wm.is_zero() {
                    continue;
                }
                let mut replaced = tuple.clone();
                replaced[slot] = m;
                let c = f.coeff_signed(&replaced);
                if !c.is_zero() {
                    val -= wm * &c;
                }
            }
        }
        if !val.is_zero() {
            out.coeffs.insert(tuple, val);
        }
    }
    out
}

/// Interior product `(ι_v f)(x_1,…,x_{k−1}) = f(v, x_1, …)`.
pub fn interior(v: &Vector, f: &KForm) -> Result<KForm, ExteriorError> {
    if f.degree() == 0 {
        return Err(ExteriorError::InteriorIntoScalar);
    }
    if v.dim() != f.dim() {
        return Err(ExteriorError::DimensionMismatch(f.dim(), v.dim()));
    }
    let mut out = KForm::zero(f.dim(), f.degree() - 1);
    for tuple in basis_tuples(f.dim(), f.degree() - 1) {
        let mut val = Rational::zero();
        for (m, vm) in v.coords.iter().enumerate() {
            if vm.is_zero() {
                continue;
            }
            let mut full = Vec::with_capacity(f.degree());
            full.push(m);
            full.extend_from_slice(&tuple);
            let c = f.coeff_signed(&full);
            if !c.is_zero() {
                val += vm * &c;
            }
        }
        if !val.is_zero() {
            out.coeffs.insert(tuple, val);
        }
    }
    Ok(out)
}

/// Twisted differential `d_θ f = −θ∧f + df`; requires dθ = 0.
pub fn twisted_differential(
    g: &LieAlgebra,
    theta: &KForm,
    f: &KForm,
) -> Result<KForm, ExteriorError> {
    assert_eq!(theta.degree(), 1, "twist must be a 1-form");
    if !ce_differential(g, theta).is_zero() {
        return Err(ExteriorError::ThetaNotClosed);
    }
    let wedge = theta.wedge(f)?;
    Ok(ce_differential(g, f).sub(&wedge))
}

/// Matrix of a degree-homogeneous linear operator on forms, in the
/// `basis_tuples` coordinates.
pub fn operator_matrix(
    dim: usize,
    degree_in: usize,
    degree_out: usize,
    op: impl Fn(&KForm) -> KForm,
) -> Mat<Rational> {
    let tuples_in = basis_tuples(dim, degree_in);
    let tuples_out = basis_tuples(dim, degree_out);
    let mut cols = Vec::with_capacity(tuples_in.len());
    for t in &tuples_in {
        let mut f = KForm::zero(dim, degree_in);
        f.coeffs.insert(t.clone(), Rational::one());
        let image = op(&f);
        assert_eq!(image.degree(), degree_out, "operator changed degree");
        cols.push(
            tuples_out
                .iter()
                .map(|s| image.coeff(s))
                .collect::<Vec<_>>(),
        );
    }
    if tuples_in.is_empty() {
        return Mat::zeros(tuples_out.len(), 0);
    }
    Mat::from_columns(cols)
}
