//! Built-in algebras and structures, plus JSON ingestion of user algebras.
//!
//! The file schema keeps every rational as a string "p/q" so exactness
//! survives serialization. Brackets are name-referenced; duplicate
//! unordered pairs are accepted only when the restatement is antisymmetric-
//! consistent.

use crate::algebra::{JacobiVerdict, LieAlgebra, Subspace, Vector};
use crate::complex::{j_delta, Branch, Endomorphism};
use crate::exterior::KForm;
use crate::lck::CosetPresentation;
use crate::linalg::Mat;
use crate::rational::{format_rational, parse_rational, rat, rat_int, Rational};
use num::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown builtin algebra {0:?}")]
    UnknownName(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("Jacobi violation at ({i}, {j}, {k}): cyclic sum = {residual}")]
    JacobiViolation {
        i: String,
        j: String,
        k: String,
        residual: String,
    },
}

/// Expected engine verdicts, regression-locked in CI.
#[derive(Debug, Clone, PartialEq)]
pub struct Expected {
    pub lck: bool,
    pub vaisman: Option<bool>,
    pub lee_field: Option<Vector>,
}

/// A complex structure with its compatible 2-form and Lee form.
#[derive(Debug, Clone)]
pub struct Structure {
    pub j: Endomorphism,
    pub omega: KForm,
    pub theta: KForm,
    pub expected: Expected,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: LieAlgebra,
    pub presentations: Vec<CosetPresentation>,
    pub structures: Vec<Structure>,
}

pub fn names() -> &'static [&'static str] {
    &[
        "u2",
        "r_sl2",
        "r2_su2",
        "r_su2su2",
        "abelian4",
        "heisenberg3",
        "r_u2_mod_u1",
    ]
}

fn structure_map(
    dim: usize,
    entries: &[(usize, usize, &[(usize, Rational)])],
) -> BTreeMap<(usize, usize), Vec<Rational>> {
    let mut map = BTreeMap::new();
    for (i, j, terms) in entries {
        let mut v = vec![Rational::zero(); dim];
        for (k, c) in terms.iter() {
            v[*k] = c.clone();
        }
        map.insert((*i, *j), v);
    }
    map
}

fn su2_block(offset: usize, dim: usize) -> Vec<((usize, usize), Vec<Rational>)> {
    // [X,Y] = Z, [Y,Z] = X, [Z,X] = Y on indices offset..offset+3
    let (x, y, z) = (offset, offset + 1, offset + 2);
    let unit = |k: usize, sign: i64| {
        let mut v = vec![Rational::zero(); dim];
        v[k] = rat_int(sign);
        v
    };
    vec![
        ((x, y), unit(z, 1)),
        ((y, z), unit(x, 1)),
        ((x, z), unit(y, -1)),
    ]
}

fn u2_algebra() -> LieAlgebra {
    let names = ["T", "X", "Y", "Z"].map(String::from).to_vec();
    let structure = su2_block(1, 4).into_iter().collect();
    LieAlgebra::new(names, structure).expect("u2")
}

fn r_sl2_algebra() -> LieAlgebra {
    // [X,Y] = −Z, [Z,X] = Y, [Z,Y] = −X; W central
    let names = ["W", "X", "Y", "Z"].map(String::from).to_vec();
    let terms: &[(usize, usize, &[(usize, Rational)])] = &[
        (1, 2, &[(3, rat_int(-1))]),
        (1, 3, &[(2, rat_int(-1))]),
        (2, 3, &[(1, rat_int(1))]),
    ];
    LieAlgebra::new(names, structure_map(4, terms)).expect("r_sl2")
}

fn r2_su2_algebra() -> LieAlgebra {
    let names = ["T1", "T2", "X", "Y", "Z"].map(String::from).to_vec();
    let structure = su2_block(2, 5).into_iter().collect();
    LieAlgebra::new(names, structure).expect("r2_su2")
}

fn r_su2su2_algebra() -> LieAlgebra {
    let names = ["T", "X1", "Y1", "Z1", "X2", "Y2", "Z2"]
        .map(String::from)
        .to_vec();
    let mut structure: BTreeMap<(usize, usize), Vec<Rational>> =
        su2_block(1, 7).into_iter().collect();
    structure.extend(su2_block(4, 7));
    LieAlgebra::new(names, structure).expect("r_su2su2")
}

fn abelian4_algebra() -> LieAlgebra {
    LieAlgebra::abelian(["E1", "E2", "E3", "E4"].map(String::from).to_vec())
}

fn heisenberg3_algebra() -> LieAlgebra {
    let names = ["X", "Y", "Z"].map(String::from).to_vec();
    let terms: &[(usize, usize, &[(usize, Rational)])] = &[(0, 1, &[(2, rat_int(1))])];
    LieAlgebra::new(names, structure_map(3, terms)).expect("heisenberg3")
}

fn r_u2_mod_u1_algebra() -> LieAlgebra {
    // ℝ ⊕ 𝔲(2) in the basis (T, X, Y, Z, W) with W = (S − X)/2 for the
    // central S of 𝔲(2): su(2) on X, Y, Z; T central; ad W = −(1/2) ad X.
    let names = ["T", "X", "Y", "Z", "W"].map(String::from).to_vec();
    let mut structure: BTreeMap<(usize, usize), Vec<Rational>> =
        su2_block(1, 5).into_iter().collect();
    let mut yw = vec![Rational::zero(); 5];
    yw[3] = rat(1, 2); // [Y, W] = (1/2) Z
    structure.insert((2, 4), yw);
    let mut zw = vec![Rational::zero(); 5];
    zw[2] = rat(-1, 2); // [Z, W] = −(1/2) Y
    structure.insert((3, 4), zw);
    LieAlgebra::new(names, structure).expect("r_u2_mod_u1")
}

/// The 𝔲(2) grid structure for δ = c + id: the plus branch carries
/// Ω = −(1/c)(t∧x + y∧z) with Lee form t and Lee field T − dX; the minus
/// branch is positive definite with the y∧z sign flipped, which forces the
/// Lee form −t and Lee field −(T − dX).
pub fn u2_structure(c: &Rational, d: &Rational, branch: Branch) -> Structure {
    let j = j_delta(c, d, branch).expect("c ≠ 0");
    let inv = Rational::one() / c.clone();
    let t = KForm::dual(4, 0);
    let tx = t.wedge(&KForm::dual(4, 1)).expect("wedge");
    let yz = KForm::dual(4, 2).wedge(&KForm::dual(4, 3)).expect("wedge");
    let (omega, theta, xi) = match branch {
        Branch::Plus => (
            tx.scale(&-inv.clone()).add(&yz.scale(&-inv)),
            t,
            Vector {
                coords: vec![Rational::one(), -d.clone(), Rational::zero(), Rational::zero()],
            },
        ),
        Branch::Minus => (
            tx.scale(&-inv.clone()).add(&yz.scale(&inv)),
            t.neg(),
            Vector {
                coords: vec![-Rational::one(), d.clone(), Rational::zero(), Rational::zero()],
            },
        ),
    };
    Structure {
        j,
        omega,
        theta,
        expected: Expected {
            lck: true,
            vaisman: Some(true),
            lee_field: Some(xi),
        },
    }
}

/// The Example-2 family Ω_ψ = −w∧ψ + dψ with ψ = c·y + b·z. The metric is
/// positive definite exactly when b > |c| and b > 0; the Lee field is
/// (bW + cX)/(b² − c²), and it fails the Killing condition whenever c ≠ 0.
pub fn r_sl2_psi_structure(b: &Rational, c: &Rational) -> Structure {
    let g_dim = 4;
    let w = KForm::dual(g_dim, 0);
    let y = KForm::dual(g_dim, 2);
    let z = KForm::dual(g_dim, 3);
    let psi = y.scale(c).add(&z.scale(b));
    let g = r_sl2_algebra();
    let omega = crate::exterior::ce_differential(&g, &psi).sub(&w.wedge(&psi).expect("wedge"));
    let denom = b * b - c * c;
    let lee = if denom.is_zero() {
        None
    } else {
        Some(Vector {
            coords: vec![b / &denom, c / &denom, Rational::zero(), Rational::zero()],
        })
    };
    Structure {
        j: r_sl2_j(),
        omega,
        theta: w,
        expected: Expected {
            lck: true,
            vaisman: Some(c.is_zero()),
            lee_field: lee,
        },
    }
}

fn r_sl2_j() -> Endomorphism {
    // JY = X, JX = −Y, JW = Z, JZ = −W
    let mut m = Mat::zeros(4, 4);
    m.set(3, 0, rat_int(1));
    m.set(2, 1, rat_int(-1));
    m.set(1, 2, rat_int(1));
    m.set(0, 3, rat_int(-1));
    Endomorphism::new(m)
}

/// Transport of the 𝔲(2) grid structure onto ℝ ⊕ 𝔲(2) with isotropy
/// span{W}: J extends by JW = 0 and the forms carry no w-component.
pub fn r_u2_mod_u1_structure(c: &Rational, d: &Rational, branch: Branch) -> Structure {
    let small = u2_structure(c, d, branch);
    let mut jm = Mat::zeros(5, 5);
    for i in 0..4 {
        for k in 0..4 {
            jm.set(i, k, small.j.matrix.get(i, k).clone());
        }
    }
    let lift = |f: &KForm| {
        let terms: Vec<(Vec<usize>, Rational)> = f
            .terms()
            .map(|(t, cf)| (t.clone(), cf.clone()))
            .collect();
        KForm::from_terms(5, f.degree(), terms).expect("lift")
    };
    let mut xi5 = vec![Rational::zero(); 5];
    for (slot, c) in xi5
        .iter_mut()
        .zip(&small.expected.lee_field.as_ref().expect("grid ξ").coords)
    {
        *slot = c.clone();
    }
    Structure {
        j: Endomorphism::new(jm),
        omega: lift(&small.omega),
        theta: lift(&small.theta),
        expected: Expected {
            lck: true,
            vaisman: Some(true),
            lee_field: Some(Vector { coords: xi5 }),
        },
    }
}

pub fn builtin(name: &str) -> Result<CatalogEntry, CatalogError> {
    let entry = match name {
        "u2" => CatalogEntry {
            name: name.to_string(),
            algebra: u2_algebra(),
            presentations: Vec::new(),
            structures: vec![
                u2_structure(&rat_int(1), &rat_int(0), Branch::Plus),
                u2_structure(&rat_int(1), &rat_int(0), Branch::Minus),
                u2_structure(&rat_int(2), &rat_int(1), Branch::Plus),
            ],
        },
        "r_sl2" => CatalogEntry {
            name: name.to_string(),
            algebra: r_sl2_algebra(),
            presentations: Vec::new(),
            structures: vec![
                // Ω = z∧w + x∧y: Vaisman with central Lee field W
                Structure {
                    j: r_sl2_j(),
                    omega: KForm::dual(4, 3)
                        .wedge(&KForm::dual(4, 0))
                        .expect("wedge")
                        .add(&KForm::dual(4, 1).wedge(&KForm::dual(4, 2)).expect("wedge")),
                    theta: KForm::dual(4, 0),
                    expected: Expected {
                        lck: true,
                        vaisman: Some(true),
                        lee_field: Some(Vector::basis(4, 0)),
                    },
                },
                // Ω_ψ at the rational witness of b² − c² = b
                r_sl2_psi_structure(&rat(25, 9), &rat(20, 9)),
            ],
        },
        "r2_su2" => CatalogEntry {
            name: name.to_string(),
            algebra: r2_su2_algebra(),
            presentations: Vec::new(),
            structures: Vec::new(),
        },
        "r_su2su2" => CatalogEntry {
            name: name.to_string(),
            algebra: r_su2su2_algebra(),
            presentations: Vec::new(),
            structures: Vec::new(),
        },
        "abelian4" => CatalogEntry {
            name: name.to_string(),
            algebra: abelian4_algebra(),
            presentations: Vec::new(),
            structures: Vec::new(),
        },
        "heisenberg3" => CatalogEntry {
            name: name.to_string(),
            algebra: heisenberg3_algebra(),
            presentations: Vec::new(),
            structures: Vec::new(),
        },
        "r_u2_mod_u1" => {
            let algebra = r_u2_mod_u1_algebra();
            let h_sub = Subspace::from_generators(5, vec![Vector::basis(5, 4)]);
            let m_sub = Subspace::from_generators(
                5,
                (0..4).map(|i| Vector::basis(5, i)).collect(),
            );
            CatalogEntry {
                name: name.to_string(),
                algebra,
                presentations: vec![CosetPresentation { h_sub, m_sub }],
                structures: vec![
                    r_u2_mod_u1_structure(&rat_int(1), &rat_int(0), Branch::Plus),
                    r_u2_mod_u1_structure(&rat_int(2), &rat_int(1), Branch::Plus),
                ],
            }
        }
        other => return Err(CatalogError::UnknownName(other.to_string())),
    };
    debug_assert_eq!(entry.algebra.check_jacobi(), JacobiVerdict::Ok);
    Ok(entry)
}

// ---------------------------------------------------------------------------
// JSON schema

#[derive(Debug, Serialize, Deserialize)]
struct RawCatalog {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    basis: Vec<String>,
    brackets: Vec<RawBracket>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    presentations: Vec<RawPresentation>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    structures: Vec<RawStructure>,
}

#[derive(Debug, Serialize, Deserialize)]
struct RawBracket {
    lhs: String,
    rhs: String,
    result: BTreeMap<String, String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct RawPresentation {
    h: Vec<Vec<String>>,
    m: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct RawStructure {
    #[serde(rename = "J")]
    j: Vec<Vec<String>>,
    omega: Vec<RawTerm>,
    theta: Vec<RawTerm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    expected: Option<RawExpected>,
}

#[derive(Debug, Serialize, Deserialize)]
struct RawTerm {
    indices: Vec<String>,
    coeff: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct RawExpected {
    lck: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vaisman: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lee_field: Option<Vec<String>>,
}

fn parse_rat_field(s: &str, field: &str) -> Result<Rational, CatalogError> {
    parse_rational(s).map_err(|e| CatalogError::Parse(format!("{field}: {e}")))
}

fn resolve_name(basis: &[String], name: &str, field: &str) -> Result<usize, CatalogError> {
    basis
        .iter()
        .position(|b| b == name)
        .ok_or_else(|| CatalogError::Schema(format!("{field}: unknown basis name {name:?}")))
}

fn resolve_dual(basis: &[String], name: &str, field: &str) -> Result<usize, CatalogError> {
    basis
        .iter()
        .position(|b| b.to_lowercase() == name.to_lowercase())
        .ok_or_else(|| CatalogError::Schema(format!("{field}: unknown form name {name:?}")))
}

fn parse_form(
    basis: &[String],
    terms: &[RawTerm],
    degree: usize,
    field: &str,
) -> Result<KForm, CatalogError> {
    let mut parsed = Vec::new();
    for (idx, term) in terms.iter().enumerate() {
        let loc = format!("{field}[{idx}]");
        if term.indices.len() != degree {
            return Err(CatalogError::Schema(format!(
                "{loc}: expected {degree} indices, got {}",
                term.indices.len()
            )));
        }
        let tuple = term
            .indices
            .iter()
            .map(|n| resolve_dual(basis, n, &loc))
            .collect::<Result<Vec<_>, _>>()?;
        let coeff = parse_rat_field(&term.coeff, &format!("{loc}.coeff"))?;
        parsed.push((tuple, coeff));
    }
    KForm::from_terms(basis.len(), degree, parsed)
        .map_err(|e| CatalogError::Schema(format!("{field}: {e}")))
}

fn render_form(f: &KForm, basis: &[String]) -> Vec<RawTerm> {
    f.terms()
        .map(|(tuple, coeff)| RawTerm {
            indices: tuple.iter().map(|&i| basis[i].to_lowercase()).collect(),
            coeff: format_rational(coeff),
        })
        .collect()
}

fn parse_vectors(
    rows: &[Vec<String>],
    dim: usize,
    field: &str,
) -> Result<Vec<Vector>, CatalogError> {
    rows.iter()
        .enumerate()
        .map(|(idx, row)| {
            let loc = format!("{field}[{idx}]");
            if row.len() != dim {
                return Err(CatalogError::Schema(format!(
                    "{loc}: expected {dim} coordinates, got {}",
                    row.len()
                )));
            }
            let coords = row
                .iter()
                .map(|s| parse_rat_field(s, &loc))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Vector { coords })
        })
        .collect()
}

fn render_vectors(vectors: &[Vector]) -> Vec<Vec<String>> {
    vectors
        .iter()
        .map(|v| v.coords.iter().map(format_rational).collect())
        .collect()
}

fn convert(raw: RawCatalog, fallback_name: &str) -> Result<CatalogEntry, CatalogError> {
    let basis = raw.basis.clone();
    let dim = basis.len();
    if dim == 0 {
        return Err(CatalogError::Schema("empty basis".to_string()));
    }
    for (i, a) in basis.iter().enumerate() {
        if basis[i + 1..].contains(a) {
            return Err(CatalogError::Schema(format!("duplicate basis name {a:?}")));
        }
    }
    let mut structure: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
    for (idx, bracket) in raw.brackets.iter().enumerate() {
        let loc = format!("brackets[{idx}]");
        let li = resolve_name(&basis, &bracket.lhs, &loc)?;
        let ri = resolve_name(&basis, &bracket.rhs, &loc)?;
        if li == ri {
            return Err(CatalogError::Schema(format!(
                "{loc}: bracket [{}, {}] of a vector with itself",
                bracket.lhs, bracket.rhs
            )));
        }
        let mut result = vec![Rational::zero(); dim];
        for (name, value) in &bracket.result {
            let k = resolve_name(&basis, name, &format!("{loc}.result"))?;
            result[k] = parse_rat_field(value, &format!("{loc}.result.{name}"))?;
        }
        let (key, value) = if li < ri {
            ((li, ri), result)
        } else {
            ((ri, li), result.into_iter().map(|c| -c).collect())
        };
        if let Some(existing) = structure.get(&key) {
            if existing != &value {
                return Err(CatalogError::Schema(format!(
                    "{loc}: duplicate unordered pair ({}, {}) with inconsistent sign",
                    basis[key.0], basis[key.1]
                )));
            }
        } else if value.iter().any(|c| !c.is_zero()) {
            structure.insert(key, value);
        }
    }
    let algebra = LieAlgebra::new(basis.clone(), structure)
        .map_err(|e| CatalogError::Schema(e.to_string()))?;
    if let JacobiVerdict::Violation { i, j, k, residual } = algebra.check_jacobi() {
        return Err(CatalogError::JacobiViolation {
            i: basis[i].clone(),
            j: basis[j].clone(),
            k: basis[k].clone(),
            residual: residual.render(&basis),
        });
    }

    let mut presentations = Vec::new();
    for (idx, pres) in raw.presentations.iter().enumerate() {
        let loc = format!("presentations[{idx}]");
        let h = parse_vectors(&pres.h, dim, &format!("{loc}.h"))?;
        let m = parse_vectors(&pres.m, dim, &format!("{loc}.m"))?;
        presentations.push(CosetPresentation {
            h_sub: Subspace::from_generators(dim, h),
            m_sub: Subspace::from_generators(dim, m),
        });
    }

    let mut structures = Vec::new();
    for (idx, s) in raw.structures.iter().enumerate() {
        let loc = format!("structures[{idx}]");
        if s.j.len() != dim || s.j.iter().any(|row| row.len() != dim) {
            return Err(CatalogError::Schema(format!(
                "{loc}.J: expected a {dim}×{dim} matrix"
            )));
        }
        let mut jm = Mat::zeros(dim, dim);
        for (r, row) in s.j.iter().enumerate() {
            for (c, entry) in row.iter().enumerate() {
                jm.set(r, c, parse_rat_field(entry, &format!("{loc}.J[{r}][{c}]"))?);
            }
        }
        let omega = parse_form(&basis, &s.omega, 2, &format!("{loc}.omega"))?;
        let theta = parse_form(&basis, &s.theta, 1, &format!("{loc}.theta"))?;
        let expected = match &s.expected {
            None => Expected {
                lck: true,
                vaisman: None,
                lee_field: None,
            },
            Some(raw_exp) => Expected {
                lck: raw_exp.lck,
                vaisman: raw_exp.vaisman,
                lee_field: raw_exp
                    .lee_field
                    .as_ref()
                    .map(|row| {
                        parse_vectors(
                            std::slice::from_ref(row),
                            dim,
                            &format!("{loc}.expected.lee_field"),
                        )
                        .map(|mut v| v.remove(0))
                    })
                    .transpose()?,
            },
        };
        structures.push(Structure {
            j: Endomorphism::new(jm),
            omega,
            theta,
            expected,
        });
    }

    Ok(CatalogEntry {
        name: raw.name.unwrap_or_else(|| fallback_name.to_string()),
        algebra,
        presentations,
        structures,
    })
}

fn to_raw(entry: &CatalogEntry) -> RawCatalog {
    let basis = entry.algebra.basis_names().to_vec();
    let brackets = entry
        .algebra
        .structure()
        .iter()
        .map(|((i, j), coeffs)| RawBracket {
            lhs: basis[*i].clone(),
            rhs: basis[*j].clone(),
            result: coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (basis[k].clone(), format_rational(c)))
                .collect(),
        })
        .collect();
    let presentations = entry
        .presentations
        .iter()
        .map(|p| RawPresentation {
            h: render_vectors(p.h_sub.basis()),
            m: render_vectors(p.m_sub.basis()),
        })
        .collect();
    let structures = entry
        .structures
        .iter()
        .map(|s| RawStructure {
            j: (0..s.j.dim())
                .map(|r| {
                    (0..s.j.dim())
                        .map(|c| format_rational(s.j.matrix.get(r, c)))
                        .collect()
                })
                .collect(),
            omega: render_form(&s.omega, &basis),
            theta: render_form(&s.theta, &basis),
            expected: Some(RawExpected {
                lck: s.expected.lck,
                vaisman: s.expected.vaisman,
                lee_field: s
                    .expected
                    .lee_field
                    .as_ref()
                    .map(|v| v.coords.iter().map(format_rational).collect()),
            }),
        })
        .collect();
    RawCatalog {
        name: Some(entry.name.clone()),
        basis,
        brackets,
        presentations,
        structures,
    }
}

/// Parses a catalog document from JSON text.
pub fn load_str(src: &str, fallback_name: &str) -> Result<CatalogEntry, CatalogError> {
    let raw: RawCatalog = serde_json::from_str(src).map_err(|e| {
        CatalogError::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
    })?;
    convert(raw, fallback_name)
}

/// Loads a catalog document from a file path.
pub fn load(path: &std::path::Path) -> Result<CatalogEntry, CatalogError> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| CatalogError::Parse(format!("{}: {e}", path.display())))?;
    let fallback = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("algebra");
    load_str(&src, fallback)
}

/// Canonical JSON rendering of a catalog entry.
pub fn save_string(entry: &CatalogEntry) -> String {
    let mut out = serde_json::to_string_pretty(&to_raw(entry)).expect("serializable");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lck::{certify, vaisman_residual};

    #[test]
    fn all_builtins_pass_jacobi() {
        for name in names() {
            let entry = builtin(name).unwrap();
            assert_eq!(entry.algebra.check_jacobi(), JacobiVerdict::Ok, "{name}");
        }
        assert!(matches!(
            builtin("nope"),
            Err(CatalogError::UnknownName(_))
        ));
    }

    #[test]
    fn expected_verdicts_are_reproduced() {
        for name in names() {
            let entry = builtin(name).unwrap();
            if !entry.presentations.is_empty() {
                continue; // coset entries certify through homogeneous_checks
            }
            for (idx, s) in entry.structures.iter().enumerate() {
                let outcome = certify(&entry.algebra, &s.j, &s.omega, Some(&s.theta));
                let cert = outcome
                    .certificate
                    .unwrap_or_else(|| panic!("{name}#{idx}: expected a certificate"));
                assert_eq!(cert.vaisman, s.expected.vaisman.unwrap(), "{name}#{idx}");
                if let Some(xi) = &s.expected.lee_field {
                    assert_eq!(&cert.lee_field, xi, "{name}#{idx}");
                }
            }
        }
    }

    #[test]
    fn psi_family_vaisman_only_at_c_zero() {
        let g = builtin("r_sl2").unwrap().algebra;
        // c = 0 specializes to a Vaisman structure (central Lee field)
        let s0 = r_sl2_psi_structure(&rat_int(1), &rat_int(0));
        let out = certify(&g, &s0.j, &s0.omega, Some(&s0.theta));
        let cert = out.certificate.unwrap();
        assert!(cert.vaisman);
        assert!(vaisman_residual(&g, &cert.metric, &cert.lee_field, None).is_none());
    }

    #[test]
    fn shipped_files_match_builtins() {
        let data_dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
        for name in names() {
            let path = data_dir.join(format!("{name}.json"));
            let loaded = load(&path).unwrap_or_else(|e| panic!("{name}: {e}"));
            let built = builtin(name).unwrap();
            assert_eq!(loaded.algebra, built.algebra, "{name}: algebra mismatch");
            assert_eq!(
                loaded.structures.len(),
                built.structures.len(),
                "{name}: structure count"
            );
            for (a, b) in loaded.structures.iter().zip(&built.structures) {
                assert_eq!(a.j, b.j, "{name}: J");
                assert_eq!(a.omega, b.omega, "{name}: omega");
                assert_eq!(a.theta, b.theta, "{name}: theta");
                assert_eq!(a.expected, b.expected, "{name}: expected");
            }
            assert_eq!(loaded.presentations.len(), built.presentations.len());
            for (a, b) in loaded.presentations.iter().zip(&built.presentations) {
                assert_eq!(a, b, "{name}: presentation");
            }
            // save(load(f)) is field-identical
            let resaved = save_string(&loaded);
            let original = std::fs::read_to_string(&path).unwrap();
            let v1: serde_json::Value = serde_json::from_str(&resaved).unwrap();
            let v2: serde_json::Value = serde_json::from_str(&original).unwrap();
            assert_eq!(v1, v2, "{name}: save/load round trip");
        }
    }

    #[test]
    fn inconsistent_duplicate_bracket_is_schema_error() {
        let src = r#"{
            "basis": ["X", "Y", "Z"],
            "brackets": [
                {"lhs": "X", "rhs": "Y", "result": {"Z": "1"}},
                {"lhs": "Y", "rhs": "X", "result": {"Z": "1"}}
            ]
        }"#;
        match load_str(src, "bad") {
            Err(CatalogError::Schema(msg)) => {
                assert!(msg.contains("inconsistent"), "{msg}");
            }
            other => panic!("expected schema error, got {other:?}"),
        }
        // the antisymmetric restatement is accepted
        let ok = r#"{
            "basis": ["X", "Y", "Z"],
            "brackets": [
                {"lhs": "X", "rhs": "Y", "result": {"Z": "1"}},
                {"lhs": "Y", "rhs": "X", "result": {"Z": "-1"}}
            ]
        }"#;
        assert!(load_str(ok, "heis").is_ok());
    }

    #[test]
    fn jacobi_violation_reported_with_triple() {
        let src = r#"{
            "basis": ["X", "Y", "Z"],
            "brackets": [
                {"lhs": "X", "rhs": "Y", "result": {"Z": "1", "Y": "1"}},
                {"lhs": "Y", "rhs": "Z", "result": {"X": "1"}},
                {"lhs": "Z", "rhs": "X", "result": {"Y": "1"}}
            ]
        }"#;
        match load_str(src, "bad") {
            Err(CatalogError::JacobiViolation { i, j, k, .. }) => {
                assert_eq!((i.as_str(), j.as_str(), k.as_str()), ("X", "Y", "Z"));
            }
            other => panic!("expected Jacobi violation, got {other:?}"),
        }
    }

    #[test]
    fn malformed_rational_is_parse_error() {
        let src = r#"{
            "basis": ["X", "Y"],
            "brackets": [{"lhs": "X", "rhs": "Y", "result": {"X": "1/0"}}]
        }"#;
        assert!(matches!(load_str(src, "bad"), Err(CatalogError::Parse(_))));
    }

    /// Regenerates the shipped data files from the builtins. Run manually:
    /// `cargo test -p lck-core regenerate_shipped_data -- --ignored`
    #[test]
    #[ignore = "writes into data/; run manually after changing builtins"]
    fn regenerate_shipped_data() {
        let data_dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
        std::fs::create_dir_all(&data_dir).unwrap();
        for name in names() {
            let entry = builtin(name).unwrap();
            let path = data_dir.join(format!("{name}.json"));
            std::fs::write(&path, save_string(&entry)).unwrap();
        }
    }
}
