//! Randomized invariant suites over the catalog algebras, fixed seeds,
//! exact equality on every case.

use lck_core::algebra::{LieAlgebra, RankConfig, Vector};
use lck_core::catalog;
use lck_core::cohomology::{betti, solve_potential, twisted_betti};
use lck_core::exterior::{basis_tuples, ce_differential, lie_derivative, twisted_differential, KForm};
use lck_core::lck::average_form;
use lck_core::linalg::Mat;
use lck_core::rational::{rat_int, Rational};
use num::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn rand_rat(rng: &mut StdRng) -> Rational {
    let n = rng.gen_range(-6i64..=6);
    let d = rng.gen_range(1i64..=4);
    lck_core::rational::rat(n, d)
}

fn rand_vector(rng: &mut StdRng, dim: usize) -> Vector {
    Vector {
        coords: (0..dim).map(|_| rand_rat(rng)).collect(),
    }
}

fn rand_form(rng: &mut StdRng, dim: usize, degree: usize) -> KForm {
    let coords: Vec<Rational> = basis_tuples(dim, degree)
        .iter()
        .map(|_| rand_rat(rng))
        .collect();
    KForm::from_coords(dim, degree, &coords)
}

fn catalog_algebras() -> Vec<LieAlgebra> {
    catalog::names()
        .iter()
        .map(|n| catalog::builtin(n).unwrap().algebra)
        .collect()
}

#[test]
fn bracket_bilinear_antisymmetric_random() {
    let mut rng = StdRng::seed_from_u64(101);
    for g in catalog_algebras() {
        let n = g.dim();
        for _ in 0..1000 {
            let a = rand_vector(&mut rng, n);
            let b = rand_vector(&mut rng, n);
            let c = rand_vector(&mut rng, n);
            let s = rand_rat(&mut rng);
            // antisymmetry
            assert_eq!(g.bracket(&a, &b), g.bracket(&b, &a).neg());
            // bilinearity in the first slot
            let lhs = g.bracket(&a.scale(&s).add(&c), &b);
            let rhs = g.bracket(&a, &b).scale(&s).add(&g.bracket(&c, &b));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn eval_reproduces_coefficients_random() {
    let mut rng = StdRng::seed_from_u64(202);
    for g in catalog_algebras() {
        let n = g.dim();
        for degree in 0..=n.min(4) {
            for _ in 0..20 {
                let f = rand_form(&mut rng, n, degree);
                for tuple in basis_tuples(n, degree) {
                    let args: Vec<Vector> =
                        tuple.iter().map(|&i| Vector::basis(n, i)).collect();
                    assert_eq!(f.eval(&args).unwrap(), f.coeff(&tuple));
                }
            }
        }
    }
}

#[test]
fn betti_is_basis_independent() {
    let mut rng = StdRng::seed_from_u64(303);
    for g in catalog_algebras() {
        let n = g.dim();
        // random invertible rational change of basis
        let p = loop {
            let mut m = Mat::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    m.set(i, j, rand_rat(&mut rng));
                }
            }
            if !lck_core::linalg::det_bareiss(&m).is_zero() {
                break m;
            }
        };
        let g2 = g.change_basis(&p).unwrap();
        for k in 0..=n {
            assert_eq!(betti(&g, k), betti(&g2, k), "degree {k}");
        }
    }
}

#[test]
fn hochschild_serre_vanishing_on_reductive_catalog() {
    let mut rng = StdRng::seed_from_u64(404);
    for name in catalog::names() {
        let g = catalog::builtin(name).unwrap().algebra;
        if g.reductive_split().is_err() {
            continue;
        }
        let n = g.dim();
        // the center-dual at the form level is the annihilator of 𝔰,
        // which is exactly the space of closed 1-forms
        let closed: Vec<KForm> = lck_core::exterior::operator_matrix(n, 1, 2, |f| {
            ce_differential(&g, f)
        })
        .kernel_basis()
        .into_iter()
        .map(|coords| KForm::from_coords(n, 1, &coords))
        .collect();
        for _ in 0..6 {
            let mut combo = KForm::zero(n, 1);
            for t in &closed {
                combo = combo.add(&t.scale(&rand_rat(&mut rng)));
            }
            if combo.is_zero() {
                continue;
            }
            for p in 0..=n {
                assert_eq!(
                    twisted_betti(&g, &combo, p).unwrap(),
                    0,
                    "{name}: θ = {}, degree {p}",
                    combo.render(g.basis_names())
                );
            }
        }
    }
}

#[test]
fn solve_potential_always_satisfies_equation() {
    let mut rng = StdRng::seed_from_u64(505);
    for name in ["u2", "r_sl2"] {
        let g = catalog::builtin(name).unwrap().algebra;
        let n = g.dim();
        let theta = KForm::dual(n, 0); // central dual, closed on both
        for _ in 0..100 {
            // any d_θ-exact 2-form is solvable; build one from a random ψ
            let psi = rand_form(&mut rng, n, 1);
            let omega = twisted_differential(&g, &theta, &psi).unwrap();
            let p = solve_potential(&g, &theta, &omega).unwrap();
            assert_eq!(
                twisted_differential(&g, &theta, &p.psi).unwrap(),
                omega,
                "{name}"
            );
        }
    }
}

#[test]
fn averaging_commutes_with_differentials() {
    let mut rng = StdRng::seed_from_u64(606);
    let g = catalog::builtin("u2").unwrap().algebra;
    let x = Vector::basis(4, 1);
    let theta = KForm::dual(4, 0); // L_X θ = 0
    for degree in 0..=3usize {
        for _ in 0..50 {
            let f = rand_form(&mut rng, 4, degree);
            let a_then_d = ce_differential(&g, &average_form(&g, &x, &f).unwrap());
            let d_then_a = average_form(&g, &x, &ce_differential(&g, &f)).unwrap();
            assert_eq!(a_then_d, d_then_a);
            let a_then_dt =
                twisted_differential(&g, &theta, &average_form(&g, &x, &f).unwrap()).unwrap();
            let dt_then_a =
                average_form(&g, &x, &twisted_differential(&g, &theta, &f).unwrap()).unwrap();
            assert_eq!(a_then_dt, dt_then_a);
        }
    }
}

#[test]
fn averaging_fixes_invariant_forms() {
    let mut rng = StdRng::seed_from_u64(707);
    let g = catalog::builtin("u2").unwrap().algebra;
    let x = Vector::basis(4, 1);
    for degree in 0..=4usize {
        for _ in 0..50 {
            let f = rand_form(&mut rng, 4, degree);
            let avg = average_form(&g, &x, &f).unwrap();
            assert!(lie_derivative(&g, &x, &avg).is_zero());
            if lie_derivative(&g, &x, &f).is_zero() {
                assert_eq!(avg, f);
            }
        }
    }
}

#[test]
fn rank_estimate_prefix_monotone_and_center_ideals() {
    // adding samples never increases the estimate
    let g7 = catalog::builtin("r_su2su2").unwrap().algebra;
    let s = g7.restrict(&g7.derived_ideal()).unwrap();
    let mut prev = usize::MAX;
    for n in [0usize, 1, 4, 16, 64] {
        let est = s
            .rank_estimate(&RankConfig {
                random_samples: n,
                seed: 9,
            })
            .unwrap();
        assert!(est.upper_bound <= prev);
        prev = est.upper_bound;
    }
    // center and derived ideal are ideals in every catalog algebra
    for g in catalog_algebras() {
        for ideal in [g.center(), g.derived_ideal()] {
            for i in 0..g.dim() {
                for b in ideal.basis() {
                    assert!(ideal.contains(&g.bracket(&Vector::basis(g.dim(), i), b)));
                }
            }
        }
    }
}

#[test]
fn reductive_split_dimensions_and_central_brackets() {
    for g in catalog_algebras() {
        if let Ok(split) = g.reductive_split() {
            assert_eq!(split.t.dim() + split.s.dim(), g.dim());
            for b in split.t.basis() {
                for i in 0..g.dim() {
                    assert!(g.bracket(b, &Vector::basis(g.dim(), i)).is_zero());
                }
            }
        }
    }
}

#[test]
fn form_render_parse_round_trip_random() {
    let mut rng = StdRng::seed_from_u64(808);
    for g in catalog_algebras() {
        let n = g.dim();
        let names = g.basis_names().to_vec();
        for degree in 1..=n.min(3) {
            for _ in 0..25 {
                let f = rand_form(&mut rng, n, degree);
                if f.is_zero() {
                    continue;
                }
                let text = f.render(&names);
                let back = KForm::parse(&text, &names).unwrap();
                assert_eq!(back, f, "text {text:?}");
            }
        }
    }
}

#[test]
fn catalog_metrics_pin_all_invariants() {
    // every certificate satisfies the advertised exact identities
    for name in catalog::names() {
        let entry = catalog::builtin(name).unwrap();
        if !entry.presentations.is_empty() {
            continue;
        }
        for s in &entry.structures {
            let outcome = lck_core::lck::certify(&entry.algebra, &s.j, &s.omega, Some(&s.theta));
            let cert = outcome.certificate.expect("certificate");
            let g = &entry.algebra;
            let n = g.dim();
            // dΩ = θ∧Ω
            assert_eq!(
                ce_differential(g, &cert.omega),
                cert.theta.wedge(&cert.omega).unwrap()
            );
            // dθ = 0
            assert!(ce_differential(g, &cert.theta).is_zero());
            // Ω(Ja, Jb) = Ω(a, b) on basis pairs
            for i in 0..n {
                for k in 0..n {
                    let a = Vector::basis(n, i);
                    let b = Vector::basis(n, k);
                    assert_eq!(
                        cert.omega
                            .eval(&[cert.j.apply(&a), cert.j.apply(&b)])
                            .unwrap(),
                        cert.omega.eval(&[a, b]).unwrap()
                    );
                }
            }
            // h(ξ, e_i) = θ(e_i), η = Jξ
            for i in 0..n {
                let e = Vector::basis(n, i);
                let hv = cert.metric.entries.apply(&e.coords);
                let pair: Rational = cert
                    .lee_field
                    .coords
                    .iter()
                    .zip(&hv)
                    .map(|(a, b)| a * b)
                    .fold(Rational::zero(), |acc, v| acc + v);
                assert_eq!(pair, cert.theta.eval(std::slice::from_ref(&e)).unwrap());
            }
            assert_eq!(cert.reeb_field, cert.j.apply(&cert.lee_field));
            // positive minors
            for m in lck_core::linalg::leading_principal_minors(&cert.metric.entries) {
                assert!(m > rat_int(0));
            }
        }
    }
}
