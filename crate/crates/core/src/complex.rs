//! Invariant complex structures: J endomorphisms, integrability via the
//! Nijenhuis tensor, and the correspondence with complex subalgebras of the
//! complexification over Gaussian rationals.
//!
//! Convention: `subalgebra_from_j` returns the eigenspace
//! `h = {v + iJv : v ∈ 𝔤} = ker(J_ℂ + i·id)`, so J acts on h as
//! multiplication by −i and on h̄ as +i. With this orientation the
//! 𝔲(2) family `j_delta` pairs with `⟨T + δU, V⟩` (plus branch) and
//! `⟨T + δU, W⟩` (minus branch), where `U = iX`, `V = (Z − iY)/2`,
//! `W = −(Z + iY)/2`.

use crate::algebra::{LieAlgebra, Vector};
use crate::gaussian::GaussianRational;
use crate::linalg::{row_span_basis, Mat};
use crate::rational::{rat_int, Rational};
use num::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ComplexError {
    #[error("family parameter c = 0 degenerates J_δ")]
    DegenerateParameter,
    #[error("J² ≠ −I")]
    NotComplexStructure,
    #[error("not integrable: N(e_{i}, e_{j}) ≠ 0 with residual {witness}")]
    NotIntegrable { i: usize, j: usize, witness: String },
    #[error("subalgebra is not transverse to its conjugate: h ∩ h̄ ≠ 0")]
    NotTransverse,
    #[error("generators are not closed under the bracket")]
    NotClosed,
    #[error("normal-form reduction requires an irrational rescale ({0})")]
    RequiresIrrationalRescale(String),
    #[error("expected the u(2) basis T, X, Y, Z with [X,Y]=Z, [Y,Z]=X, [Z,X]=Y")]
    NotU2,
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
}

/// Linear map 𝔤 → 𝔤 acting on coordinate columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Endomorphism {
    pub matrix: Mat<Rational>,
}

impl Endomorphism {
    pub fn new(matrix: Mat<Rational>) -> Self {
        assert_eq!(matrix.nrows(), matrix.ncols(), "endomorphism must be square");
        Endomorphism { matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        Vector {
            coords: self.matrix.apply(&v.coords),
        }
    }

    pub fn compose(&self, other: &Endomorphism) -> Endomorphism {
        Endomorphism::new(self.matrix.matmul(&other.matrix))
    }

    /// J² = −I, checked exactly.
    pub fn squares_to_minus_identity(&self) -> bool {
        let sq = self.matrix.matmul(&self.matrix);
        let minus_i = Mat::identity(self.dim()).scale(&-Rational::one());
        sq == minus_i
    }

    /// `[ad v, J] = 0`.
    pub fn commutes_with_ad(&self, g: &LieAlgebra, v: &Vector) -> bool {
        let ad = g.adjoint(v);
        ad.matmul(&self.matrix) == self.matrix.matmul(&ad)
    }
}

/// `ok` iff J² = −I exactly.
pub fn is_complex_structure(_g: &LieAlgebra, j: &Endomorphism) -> bool {
    j.squares_to_minus_identity()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn label(&self) -> &'static str {
        match self {
            Branch::Plus => "+",
            Branch::Minus => "-",
        }
    }
}

/// The 𝔲(2) family in the basis (T, X, Y, Z):
/// `J(T − dX) = cX, J(cX) = −(T − dX), JY = ±Z, JZ = ∓Y`, equivalently
/// `JT = −(d/c)T + ((c²+d²)/c)X` and `JX = −(1/c)T + (d/c)X`.
pub fn j_delta(c: &Rational, d: &Rational, branch: Branch) -> Result<Endomorphism, ComplexError> {
    if c.is_zero() {
        return Err(ComplexError::DegenerateParameter);
    }
    let mut m = Mat::zeros(4, 4);
    let c2d2 = c * c + d * d;
    m.set(0, 0, -(d / c));
    m.set(1, 0, &c2d2 / c);
    m.set(0, 1, -(Rational::one() / c.clone()));
    m.set(1, 1, d / c);
    match branch {
        Branch::Plus => {
            m.set(3, 2, Rational::one());
            m.set(2, 3, -Rational::one());
        }
        Branch::Minus => {
            m.set(3, 2, -Rational::one());
            m.set(2, 3, Rational::one());
        }
    }
    Ok(Endomorphism::new(m))
}

/// Nijenhuis tensor `N(a,b) = [Ja,Jb] − [a,b] − J[Ja,b] − J[a,Jb]`.
pub fn nijenhuis(g: &LieAlgebra, j: &Endomorphism, a: &Vector, b: &Vector) -> Vector {
    let ja = j.apply(a);
    let jb = j.apply(b);
    g.bracket(&ja, &jb)
        .sub(&g.bracket(a, b))
        .sub(&j.apply(&g.bracket(&ja, b)))
        .sub(&j.apply(&g.bracket(a, &jb)))
}

/// First basis pair with nonvanishing Nijenhuis tensor, if any.
pub fn nijenhuis_witness(g: &LieAlgebra, j: &Endomorphism) -> Option<(usize, usize, Vector)> {
    let n = g.dim();
    for i in 0..n {
        for k in (i + 1)..n {
            let w = nijenhuis(g, j, &Vector::basis(n, i), &Vector::basis(n, k));
            if !w.is_zero() {
                return Some((i, k, w));
            }
        }
    }
    None
}

/// Vector in 𝔤_ℂ, as Gaussian-rational coordinates in the real basis.
pub type CVector = Vec<GaussianRational>;

pub fn cvec_conj(v: &CVector) -> CVector {
    v.iter().map(GaussianRational::conj).collect()
}

pub fn cvec_is_zero(v: &CVector) -> bool {
    v.iter().all(Zero::is_zero)
}

fn cvec_real_part(v: &CVector) -> Vector {
    Vector {
        coords: v.iter().map(|c| c.re.clone()).collect(),
    }
}

fn cvec_imag_part(v: &CVector) -> Vector {
    Vector {
        coords: v.iter().map(|c| c.im.clone()).collect(),
    }
}

fn cvec_from_parts(re: &Vector, im: &Vector) -> CVector {
    re.coords
        .iter()
        .zip(&im.coords)
        .map(|(r, i)| GaussianRational::new(r.clone(), i.clone()))
        .collect()
}

/// Bilinear extension of the bracket to 𝔤_ℂ.
pub fn complex_bracket(g: &LieAlgebra, a: &CVector, b: &CVector) -> CVector {
    let (ar, ai) = (cvec_real_part(a), cvec_imag_part(a));
    let (br, bi) = (cvec_real_part(b), cvec_imag_part(b));
    let re = g.bracket(&ar, &br).sub(&g.bracket(&ai, &bi));
    let im = g.bracket(&ar, &bi).add(&g.bracket(&ai, &br));
    cvec_from_parts(&re, &im)
}

/// Complex subalgebra h ⊂ 𝔤_ℂ with a canonical echelon basis; equality
/// compares spans.
#[derive(Debug, Clone)]
pub struct ComplexSubalgebra {
    ambient_dim: usize,
    generators: Vec<CVector>,
    echelon: Vec<CVector>,
}

impl PartialEq for ComplexSubalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.echelon == other.echelon
    }
}

impl ComplexSubalgebra {
    pub fn from_generators(ambient_dim: usize, generators: Vec<CVector>) -> Self {
        for g in &generators {
            assert_eq!(g.len(), ambient_dim);
        }
        let echelon = row_span_basis(generators.clone());
        ComplexSubalgebra {
            ambient_dim,
            generators,
            echelon,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.echelon.len()
    }

    pub fn echelon_basis(&self) -> &[CVector] {
        &self.echelon
    }

    pub fn conjugate(&self) -> ComplexSubalgebra {
        ComplexSubalgebra::from_generators(
            self.ambient_dim,
            self.echelon.iter().map(|v| cvec_conj(v)).collect(),
        )
    }

    pub fn contains(&self, v: &CVector) -> bool {
        if cvec_is_zero(v) {
            return true;
        }
        let mut rows = self.echelon.clone();
        rows.push(v.clone());
        row_span_basis(rows).len() == self.dim()
    }

    pub fn is_bracket_closed(&self, g: &LieAlgebra) -> bool {
        self.bracket_closure_witness(g).is_none()
    }

    /// First echelon-basis pair whose bracket leaves the span.
    pub fn bracket_closure_witness(&self, g: &LieAlgebra) -> Option<(usize, usize)> {
        for i in 0..self.echelon.len() {
            for j in (i + 1)..self.echelon.len() {
                let w = complex_bracket(g, &self.echelon[i], &self.echelon[j]);
                if !self.contains(&w) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// dim(h ∩ h̄) = 0, i.e. h ⊕ h̄ = 𝔤_ℂ when dim h = dim 𝔤 / 2.
    pub fn transverse_to_conjugate(&self) -> bool {
        let mut rows = self.echelon.clone();
        rows.extend(self.conjugate().echelon.iter().cloned());
        row_span_basis(rows).len() == 2 * self.dim()
    }

    fn intersect(&self, other: &ComplexSubalgebra) -> Vec<CVector> {
        if self.dim() == 0 || other.dim() == 0 {
            return Vec::new();
        }
        let mut cols: Vec<CVector> = self.echelon.clone();
        for b in &other.echelon {
            cols.push(b.iter().map(|c| -c.clone()).collect());
        }
        let m = Mat::from_columns(cols);
        m.kernel_basis()
            .into_iter()
            .map(|k| {
                let mut v = vec![GaussianRational::zero(); self.ambient_dim];
                for (idx, b) in self.echelon.iter().enumerate() {
                    for (vc, bc) in v.iter_mut().zip(b) {
                        *vc = vc.clone() + k[idx].clone() * bc.clone();
                    }
                }
                v
            })
            .collect()
    }
}

/// The subalgebra attached to an integrable J: the span of `v + iJv`.
/// Certified on return: complex dimension dim 𝔤 / 2, bracket-closed, and
/// transverse to its conjugate.
pub fn subalgebra_from_j(
    g: &LieAlgebra,
    j: &Endomorphism,
) -> Result<ComplexSubalgebra, ComplexError> {
    if !j.squares_to_minus_identity() {
        return Err(ComplexError::NotComplexStructure);
    }
    if let Some((i, k, w)) = nijenhuis_witness(g, j) {
        return Err(ComplexError::NotIntegrable {
            i,
            j: k,
            witness: w.render(g.basis_names()),
        });
    }
    let n = g.dim();
    let gens: Vec<CVector> = (0..n)
        .map(|k| {
            let v = Vector::basis(n, k);
            let jv = j.apply(&v);
            cvec_from_parts(&v, &jv)
        })
        .collect();
    let h = ComplexSubalgebra::from_generators(n, gens);
    debug_assert_eq!(h.dim(), n / 2);
    if let Some((a, b)) = h.bracket_closure_witness(g) {
        // cannot happen once the Nijenhuis tensor vanishes; kept as a hard
        // certificate of the correspondence
        return Err(ComplexError::NotIntegrable {
            i: a,
            j: b,
            witness: "eigenspace bracket left the span".to_string(),
        });
    }
    if !h.transverse_to_conjugate() {
        return Err(ComplexError::NotTransverse);
    }
    Ok(h)
}

/// Inverse of `subalgebra_from_j`: the real endomorphism acting as −i on h
/// and +i on h̄.
pub fn j_from_subalgebra(
    g: &LieAlgebra,
    h: &ComplexSubalgebra,
) -> Result<Endomorphism, ComplexError> {
    let n = g.dim();
    if 2 * h.dim() != n || !h.transverse_to_conjugate() {
        return Err(ComplexError::NotTransverse);
    }
    if !h.is_bracket_closed(g) {
        return Err(ComplexError::NotClosed);
    }
    // Solve e_k = p + q with p ∈ h, q ∈ h̄, set J e_k = −i p + i q.
    let mut cols: Vec<CVector> = h.echelon_basis().to_vec();
    let conj = h.conjugate();
    cols.extend(conj.echelon_basis().iter().cloned());
    let basis_mat = Mat::from_columns(cols);
    let mut j_cols: Vec<Vec<Rational>> = Vec::with_capacity(n);
    for k in 0..n {
        let mut e = vec![GaussianRational::zero(); n];
        e[k] = GaussianRational::one();
        let alpha = basis_mat
            .solve(&e)
            .ok_or(ComplexError::NotTransverse)?;
        let mut image = vec![GaussianRational::zero(); n];
        let minus_i = -GaussianRational::i();
        let plus_i = GaussianRational::i();
        for (idx, coef) in alpha.iter().enumerate() {
            let (vecs, factor) = if idx < h.dim() {
                (h.echelon_basis(), minus_i.clone())
            } else {
                (conj.echelon_basis(), plus_i.clone())
            };
            let b = &vecs[idx % h.dim()];
            for (ic, bc) in image.iter_mut().zip(b) {
                *ic = ic.clone() + factor.clone() * coef.clone() * bc.clone();
            }
        }
        if image.iter().any(|c| !c.is_real()) {
            return Err(ComplexError::Inconsistent(
                "reconstructed J is not real".to_string(),
            ));
        }
        j_cols.push(image.into_iter().map(|c| c.re).collect());
    }
    Ok(Endomorphism::new(Mat::from_columns(j_cols)))
}

/// Outcome of the normal-form reduction on 𝔲(2): the family parameter, the
/// branch, and a real automorphism `A` with `J = A · J_{δ,branch} · A⁻¹`.
#[derive(Debug, Clone)]
pub struct NormalForm {
    pub delta: GaussianRational,
    pub branch: Branch,
    pub automorphism: Mat<Rational>,
}

fn is_u2_catalog_basis(g: &LieAlgebra) -> bool {
    if g.dim() != 4 {
        return false;
    }
    let e = |i: usize| Vector::basis(4, i);
    g.bracket(&e(1), &e(2)) == e(3)
        && g.bracket(&e(2), &e(3)) == e(1)
        && g.bracket(&e(3), &e(1)) == e(2)
        && g.bracket(&e(0), &e(1)).is_zero()
        && g.bracket(&e(0), &e(2)).is_zero()
        && g.bracket(&e(0), &e(3)).is_zero()
}

fn u_coeff(v: &CVector) -> GaussianRational {
    // U = iX, so the U-coordinate of a vector is −i · (X-coordinate).
    -GaussianRational::i() * v[1].clone()
}

fn v_coeff(v: &CVector) -> GaussianRational {
    // V-coordinate: i·Y-coordinate + Z-coordinate.
    GaussianRational::i() * v[2].clone() + v[3].clone()
}

fn w_coeff(v: &CVector) -> GaussianRational {
    // W-coordinate: i·Y-coordinate − Z-coordinate.
    GaussianRational::i() * v[2].clone() - v[3].clone()
}

fn scale_cvec(v: &CVector, c: &GaussianRational) -> CVector {
    v.iter().map(|x| x.clone() * c.clone()).collect()
}

/// Reduces an integrable J on the 𝔲(2) catalog basis to the `j_delta`
/// normal form, returning the certifying automorphism, or reports that the
/// rescale step would require an irrational square root.
pub fn reduce_to_normal_form(
    g: &LieAlgebra,
    j: &Endomorphism,
) -> Result<NormalForm, ComplexError> {
    if !is_u2_catalog_basis(g) {
        return Err(ComplexError::NotU2);
    }
    let h = subalgebra_from_j(g, j)?;
    let (delta, branch, auto) = reduce_subalgebra(g, &h)?;
    let c = delta.re.clone();
    let d = delta.im.clone();
    if c.is_zero() {
        return Err(ComplexError::Inconsistent(
            "normal form has Re δ = 0, conflicting with transversality".to_string(),
        ));
    }
    let j_norm = j_delta(&c, &d, branch)?;
    // Certify A · J_norm · A⁻¹ = J.
    let lhs = auto.matmul(&j_norm.matrix);
    let rhs = j.matrix.matmul(&auto);
    if lhs != rhs {
        return Err(ComplexError::Inconsistent(
            "automorphism does not conjugate the normal form to the input".to_string(),
        ));
    }
    Ok(NormalForm {
        delta,
        branch,
        automorphism: auto,
    })
}

fn reduce_subalgebra(
    g: &LieAlgebra,
    h: &ComplexSubalgebra,
) -> Result<(GaussianRational, Branch, Mat<Rational>), ComplexError> {
    // b = complexified span{X, Y, Z}; h ∩ b is one-dimensional.
    let mut b_gens = Vec::new();
    for k in 1..4usize {
        let mut v = vec![GaussianRational::zero(); 4];
        v[k] = GaussianRational::one();
        b_gens.push(v);
    }
    let b = ComplexSubalgebra::from_generators(4, b_gens);
    let meet = h.intersect(&b);
    if meet.len() != 1 {
        return Err(ComplexError::Inconsistent(format!(
            "dim(h ∩ b) = {}, expected 1",
            meet.len()
        )));
    }
    let r = meet[0].clone();
    let p = u_coeff(&r);

    if p.is_zero() {
        // already a normal form: extract δ and the branch
        let (delta, branch) = extract_delta_branch(h, &r)?;
        return Ok((delta, branch, Mat::identity(4)));
    }

    // rescale R so its U-coefficient is 1
    let r = scale_cvec(&r, &(GaussianRational::one() / p));

    // Q: the line c ∩ c̄ (c = projection of h along T), pinned by Q̄ = −Q.
    let proj = |v: &CVector| -> CVector {
        let mut w = v.clone();
        w[0] = GaussianRational::zero();
        w
    };
    let c_sub = ComplexSubalgebra::from_generators(
        4,
        h.echelon_basis().iter().map(proj).collect(),
    );
    let c_conj = c_sub.conjugate();
    let line = c_sub.intersect(&c_conj);
    if line.len() != 1 {
        return Err(ComplexError::Inconsistent(format!(
            "dim(c ∩ c̄) = {}, expected 1",
            line.len()
        )));
    }
    let q0 = line[0].clone();
    // Q = (s + it) Q₀ with Re((s + it) q) = 0 coordinatewise.
    let mut rows = Vec::new();
    for coord in &q0 {
        rows.push(vec![coord.re.clone(), -coord.im.clone()]);
    }
    let m = Mat::from_rows(rows);
    let kernel = m.kernel_basis();
    let lam = kernel
        .first()
        .ok_or_else(|| ComplexError::Inconsistent("no antireal vector in c ∩ c̄".to_string()))?;
    let lambda = GaussianRational::new(lam[0].clone(), lam[1].clone());
    let q = scale_cvec(&q0, &lambda);
    if cvec_is_zero(&q) {
        return Err(ComplexError::Inconsistent("Q vanished".to_string()));
    }
    debug_assert!(q.iter().zip(cvec_conj(&q)).all(|(a, b)| (a.clone() + b).is_zero()));

    // [Q, R] = ηR with η rational (η real is forced; verified below).
    let qr = complex_bracket(g, &q, &r);
    let pivot = r
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| ComplexError::Inconsistent("R vanished".to_string()))?;
    let eta = qr[pivot].clone() / r[pivot].clone();
    if qr != scale_cvec(&r, &eta) {
        return Err(ComplexError::Inconsistent(
            "[Q,R] is not a multiple of R".to_string(),
        ));
    }
    if !eta.is_real() || eta.is_zero() {
        return Err(ComplexError::Inconsistent(format!(
            "eigenvalue η = {} of ad Q is not a nonzero real",
            eta.render()
        )));
    }
    let eta = eta.re;

    // a (U-part of Q) and |b|² from the V-part; η² = a² + |b|² certifies.
    let a = u_coeff(&q);
    if !a.is_real() {
        return Err(ComplexError::Inconsistent("a is not real".to_string()));
    }
    let bq = v_coeff(&q);
    let b_norm_sq = bq.norm_sq();
    if &eta * &eta != &a.re * &a.re + &b_norm_sq {
        return Err(ComplexError::Inconsistent(
            "η² ≠ a² + |b|²".to_string(),
        ));
    }
    let Some(b_abs) = crate::rational::rational_sqrt(&b_norm_sq) else {
        return Err(ComplexError::RequiresIrrationalRescale(format!(
            "|b|² = {} is not a rational square",
            crate::rational::format_rational(&b_norm_sq)
        )));
    };
    if b_abs.is_zero() {
        return Err(ComplexError::Inconsistent(
            "b = 0 with a U-bearing R contradicts transversality".to_string(),
        ));
    }

    // φ: T↦T, U↦Q/η, V↦(|b|/2η)R, W↦−(|b|/2η)R̄, expressed on X, Y, Z.
    let scale = GaussianRational::from_real(&b_abs / (rat_int(2) * eta.clone()));
    let phi_u = scale_cvec(&q, &GaussianRational::from_real(Rational::one() / eta.clone()));
    let phi_v = scale_cvec(&r, &scale);
    let phi_w = scale_cvec(&cvec_conj(&r), &-scale);
    // X = −iU, Y = i(V + W), Z = V − W
    let minus_i = -GaussianRational::i();
    let phi_x = scale_cvec(&phi_u, &minus_i);
    let phi_y: CVector = phi_v
        .iter()
        .zip(&phi_w)
        .map(|(v, w)| GaussianRational::i() * (v.clone() + w.clone()))
        .collect();
    let phi_z: CVector = phi_v
        .iter()
        .zip(&phi_w)
        .map(|(v, w)| v.clone() - w.clone())
        .collect();
    let mut t_col = vec![GaussianRational::zero(); 4];
    t_col[0] = GaussianRational::one();
    let mut cols_real = Vec::new();
    for col in [t_col, phi_x, phi_y, phi_z] {
        if col.iter().any(|c| !c.is_real()) {
            return Err(ComplexError::Inconsistent(
                "automorphism is not conjugation-preserving".to_string(),
            ));
        }
        cols_real.push(col.into_iter().map(|c| c.re).collect::<Vec<_>>());
    }
    let auto = Mat::from_columns(cols_real);
    if !is_automorphism(g, &auto) {
        return Err(ComplexError::Inconsistent(
            "rescaled map fails the automorphism check".to_string(),
        ));
    }

    // transport h through φ⁻¹ and extract from the resulting normal form
    let inv = invert(&auto).ok_or_else(|| {
        ComplexError::Inconsistent("automorphism is singular".to_string())
    })?;
    let h0 = ComplexSubalgebra::from_generators(
        4,
        h.echelon_basis()
            .iter()
            .map(|v| apply_real_matrix_c(&inv, v))
            .collect(),
    );
    let meet0 = h0.intersect(&b);
    if meet0.len() != 1 {
        return Err(ComplexError::Inconsistent(
            "transported subalgebra lost its b-line".to_string(),
        ));
    }
    let (delta, branch) = extract_delta_branch(&h0, &meet0[0])?;
    Ok((delta, branch, auto))
}

fn extract_delta_branch(
    h: &ComplexSubalgebra,
    r: &CVector,
) -> Result<(GaussianRational, Branch), ComplexError> {
    let rv = v_coeff(r);
    let rw = w_coeff(r);
    let branch = match (rv.is_zero(), rw.is_zero()) {
        (false, true) => Branch::Plus,
        (true, false) => Branch::Minus,
        _ => {
            return Err(ComplexError::Inconsistent(
                "h ∩ b is neither the V-line nor the W-line".to_string(),
            ))
        }
    };
    // lift: the element of h with nonzero T-coordinate, reduced against R
    let lift = h
        .echelon_basis()
        .iter()
        .find(|v| !v[0].is_zero())
        .ok_or_else(|| ComplexError::Inconsistent("no T-bearing generator".to_string()))?;
    let t_coeff = lift[0].clone();
    let scaled = scale_cvec(lift, &(GaussianRational::one() / t_coeff));
    // remove any residual R-component so the generator is T + δU + 0·R
    let delta = u_coeff(&scaled);
    // verify the generator really is T + δU modulo R
    let mut check = scaled.clone();
    // subtract δ·U (U = iX → coordinates (0, i, 0, 0))
    check[1] = check[1].clone() - delta.clone() * GaussianRational::i();
    check[0] = check[0].clone() - GaussianRational::one();
    if !cvec_is_zero(&check) {
        // residual must be a multiple of R
        let pivot = r.iter().position(|c| !c.is_zero()).unwrap();
        let ratio = check[pivot].clone() / r[pivot].clone();
        if check != scale_cvec(r, &ratio) {
            return Err(ComplexError::Inconsistent(
                "T-bearing generator is not T + δU modulo the b-line".to_string(),
            ));
        }
    }
    Ok((delta, branch))
}

fn apply_real_matrix_c(m: &Mat<Rational>, v: &CVector) -> CVector {
    let re = m.apply(&cvec_real_part(v).coords);
    let im = m.apply(&cvec_imag_part(v).coords);
    re.into_iter()
        .zip(im)
        .map(|(r, i)| GaussianRational::new(r, i))
        .collect()
}

fn is_automorphism(g: &LieAlgebra, m: &Mat<Rational>) -> bool {
    let n = g.dim();
    if crate::linalg::det_bareiss(m).is_zero() {
        return false;
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let lhs = Vector {
                coords: m.apply(&g.bracket_basis(i, j).coords),
            };
            let a = Vector { coords: m.col(i) };
            let b = Vector { coords: m.col(j) };
            if g.bracket(&a, &b) != lhs {
                return false;
            }
        }
    }
    true
}

fn invert(m: &Mat<Rational>) -> Option<Mat<Rational>> {
    let n = m.nrows();
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[k] = Rational::one();
        cols.push(m.solve(&e)?);
    }
    Some(Mat::from_columns(cols))
}
