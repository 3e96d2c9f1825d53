//! Anchored self-check suite: closed-form values and identities evaluated on
//! fixed inputs. Cheap enough to run before trusting a build.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::apps;
use crate::ineq::{self, TolerancePolicy};
use crate::linalg::ComplexMatrix;
use crate::norms::{
    direct_sum_schatten, max_unimodular_norm, numerical_radius, operator_norm,
    orthonormal_pair_sum, schatten_norm, spectral_radius, SchattenP,
};

use super::gen;

#[derive(Debug, Clone)]
pub struct SelfCheckItem {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn item(name: &str, pass: bool, detail: String) -> SelfCheckItem {
    SelfCheckItem {
        name: name.to_string(),
        pass,
        detail,
    }
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

/// Runs the anchor suite and returns one pass/fail item per anchor.
pub fn selfcheck() -> Vec<SelfCheckItem> {
    let mut items = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e1f);
    let policy = TolerancePolicy::default();

    // radius anchors on the nilpotent shift
    for n in 2..=6usize {
        let expected = (std::f64::consts::PI / (n as f64 + 1.0)).cos();
        let got = numerical_radius(&gen::gen_nilpotent(n), 1e-9)
            .map(|e| e.value)
            .unwrap_or(f64::NAN);
        items.push(item(
            &format!("radius-shift-{n}"),
            close(got, expected, 1e-8),
            format!("w(J_{n}) = {got:.10}, expected {expected:.10}"),
        ));
    }

    // normal matrices: w = r = ‖A‖
    match gen::gen_normal(5, &mut rng) {
        Ok(a) => {
            let w = numerical_radius(&a, 1e-9).map(|e| e.value).unwrap_or(f64::NAN);
            let r = spectral_radius(&a).unwrap_or(f64::NAN);
            let norm = operator_norm(&a).unwrap_or(f64::NAN);
            items.push(item(
                "radius-normal-coincidence",
                close(w, r, 1e-8) && close(w, norm, 1e-8),
                format!("w = {w:.10}, r = {r:.10}, ‖A‖ = {norm:.10}"),
            ));
        }
        Err(e) => items.push(item("radius-normal-coincidence", false, e.to_string())),
    }

    // direct-sum norm identities against explicit assembly
    {
        let a = gen::gen_ginibre(3, &mut rng);
        let b = gen::gen_ginibre(2, &mut rng);
        let asm = a.direct_sum(&b);
        let mut pass = true;
        let mut detail = String::new();
        for &p in &[
            SchattenP::Finite(1.0),
            SchattenP::Finite(2.0),
            SchattenP::Finite(3.0),
            SchattenP::Infinity,
        ] {
            let formula = direct_sum_schatten(
                schatten_norm(&a, p).unwrap_or(f64::NAN),
                schatten_norm(&b, p).unwrap_or(f64::NAN),
                p,
            );
            let direct = schatten_norm(&asm, p).unwrap_or(f64::NAN);
            if !close(formula, direct, 1e-10) {
                pass = false;
                detail = format!("p = {p}: formula {formula:.12} vs assembled {direct:.12}");
                break;
            }
        }
        items.push(item(
            "direct-sum-norms",
            pass,
            if pass { "matches explicit assembly".into() } else { detail },
        ));

        // antidiagonal embedding carries the same norms
        let zero_tl = ComplexMatrix::zeros(3, 2);
        let zero_br = ComplexMatrix::zeros(2, 3);
        let anti = ComplexMatrix::block2x2(&zero_tl, &a, &b, &zero_br);
        let pass = match anti {
            Ok(anti) => [1.0, 2.0, 3.0].iter().all(|&pv| {
                let p = SchattenP::Finite(pv);
                close(
                    schatten_norm(&anti, p).unwrap_or(f64::NAN),
                    schatten_norm(&asm, p).unwrap_or(f64::NAN),
                    1e-10,
                )
            }),
            Err(_) => false,
        };
        items.push(item(
            "antidiagonal-embedding",
            pass,
            "‖[[0,A],[B,0]]‖_p = ‖A⊕B‖_p".into(),
        ));
    }

    // unitary invariance of the Schatten family, quasi-norm included
    {
        let a = gen::gen_ginibre(4, &mut rng);
        let pass = (|| -> Option<bool> {
            let u = gen::gen_unitary(4, &mut rng).ok()?;
            let v = gen::gen_unitary(4, &mut rng).ok()?;
            let rotated = &(&u * &a) * &v;
            for &pv in &[0.5, 1.0, 2.0, 3.0] {
                let p = SchattenP::Finite(pv);
                if !close(
                    schatten_norm(&rotated, p).ok()?,
                    schatten_norm(&a, p).ok()?,
                    1e-8,
                ) {
                    return Some(false);
                }
            }
            Some(close(
                operator_norm(&rotated).ok()?,
                operator_norm(&a).ok()?,
                1e-8,
            ))
        })()
        .unwrap_or(false);
        items.push(item("unitary-invariance", pass, "‖UAV‖_p = ‖A‖_p".into()));
    }

    // singular vectors attain the variational sum
    {
        let a = gen::gen_ginibre(4, &mut rng);
        let pass = (|| -> Option<bool> {
            let svd = a.svd(true).ok()?;
            let p = SchattenP::Finite(2.0);
            let attained =
                orthonormal_pair_sum(&a, &svd.right?, &svd.left?, p).ok()?;
            Some(close(attained, schatten_norm(&a, p).ok()?, 1e-8))
        })()
        .unwrap_or(false);
        items.push(item(
            "variational-sum-attained",
            pass,
            "singular vectors reach ‖A‖_p".into(),
        ));
    }

    // Penrose identities
    {
        let a = gen::gen_fixed_rank(4, 2, &mut rng);
        let pass = a
            .and_then(|a| {
                let p = a.pseudoinverse()?;
                let tol = 1e-8 * a.frobenius_norm().max(1.0);
                Ok((&(&a * &p) * &a).approx_eq(&a, tol)
                    && (&(&p * &a) * &p).approx_eq(&p, tol)
                    && (&a * &p).adjoint().approx_eq(&(&a * &p), tol)
                    && (&p * &a).adjoint().approx_eq(&(&p * &a), tol))
            })
            .unwrap_or(false);
        items.push(item(
            "penrose-identities",
            pass,
            "AA†A = A, A†AA† = A†, both products Hermitian".into(),
        ));
    }

    // Schur basis consistency
    {
        let a = gen::gen_ginibre(5, &mut rng);
        let pass = (|| -> Option<bool> {
            let schur = a.schur(true).ok()?;
            let q = schur.basis?;
            let scale = a.frobenius_norm().max(1.0);
            Some((0..5).all(|k| {
                (a.sandwich(&q, k, &q, k) - schur.values[k]).norm() <= 1e-8 * scale
            }))
        })()
        .unwrap_or(false);
        items.push(item(
            "schur-basis-diagonal",
            pass,
            "⟨Aqₖ, qₖ⟩ matches the eigenvalue listing".into(),
        ));
    }

    // equality instances of the product bounds
    {
        let a = gen::gen_ginibre(4, &mut rng);
        let pass = ineq::check_agm(&a, &a, SchattenP::Finite(2.0), &policy)
            .map(|r| r.holds && r.slack.abs() <= 1e-8 * r.rhs.max(1.0))
            .unwrap_or(false);
        items.push(item("agm-equality-at-b-eq-a", pass, "‖AA*‖₂ = ½‖2A*A‖₂".into()));

        let j2 = gen::gen_nilpotent(2);
        let pass = ineq::check_numrad_bounds(&j2, &[(0.0, 0.0)], &policy)
            .map(|rs| {
                rs.iter().any(|r| {
                    r.check_id == "thm-numrad-kit3"
                        && r.holds
                        && r.slack.abs() <= 1e-8
                        && (r.lhs - 0.5).abs() <= 1e-8
                })
            })
            .unwrap_or(false);
        items.push(item(
            "nilpotent-kit3-equality",
            pass,
            "w(J₂) = ½ = ½‖J₂‖ + ½‖J₂²‖^{1/2}".into(),
        ));
    }

    // parallelism: positive multiples reach the sum, shift/adjoint does not
    {
        let a = gen::gen_ginibre(3, &mut rng);
        let b = a.scale(Complex64::from_polar(2.0, 0.7));
        let pass = max_unimodular_norm(&a, &b, 1e-9)
            .ok()
            .zip(operator_norm(&a).ok())
            .map(|(m, na)| close(m.value, 3.0 * na, 1e-8))
            .unwrap_or(false);
        items.push(item(
            "parallel-multiple",
            pass,
            "max_θ ‖A + e^{iθ}·2e^{0.7i}A‖ = 3‖A‖".into(),
        ));

        let j3 = gen::gen_nilpotent(3);
        let pass = max_unimodular_norm(&j3, &j3.adjoint(), 1e-9)
            .map(|m| close(m.value, std::f64::consts::SQRT_2, 1e-8))
            .unwrap_or(false);
        items.push(item(
            "shift-adjoint-gap",
            pass,
            "max_θ ‖J₃ + e^{iθ}J₃*‖ = √2 < 2".into(),
        ));
    }

    // polynomial anchors
    {
        let poly = |coeffs: &[(f64, f64)]| {
            apps::Polynomial::new(coeffs.iter().map(|&(re, im)| Complex64::new(re, im)).collect())
                .expect("valid polynomial")
        };
        let quad = apps::zero_sum_bound(&poly(&[(1.0, 0.0), (0.0, 0.0)]));
        let pass = quad
            .as_ref()
            .map(|r| close(r.zero_sum, 2.0, 1e-9) && close(r.bound, 2.0, 1e-12))
            .unwrap_or(false);
        items.push(item("poly-z2-plus-1", pass, "zero sum 2 = bound 2".into()));

        let cubic = apps::zero_sum_bound(&poly(&[(-1.0, 0.0), (0.0, 0.0), (0.0, 0.0)]));
        let pass = cubic
            .as_ref()
            .map(|r| close(r.zero_sum, 3.0, 1e-9) && close(r.bound, 3.0, 1e-12))
            .unwrap_or(false);
        items.push(item("poly-z3-minus-1", pass, "zero sum 3 = bound 3".into()));
    }

    // graph anchors
    {
        let star = apps::load_graph("4\n0 1\n0 2\n0 3\n").and_then(|g| apps::energy_report(&g));
        let pass = star
            .as_ref()
            .map(|r| {
                close(r.energy, 2.0 * 3f64.sqrt(), 1e-9)
                    && r.rank == 2
                    && close(r.bound_rank, r.energy, 1e-9)
                    && close(r.bound_mcclelland, 24f64.sqrt(), 1e-12)
            })
            .unwrap_or(false);
        items.push(item(
            "graph-star-energy",
            pass,
            "E(K_{1,3}) = 2√3 = √(2m·rank) < √(2mn)".into(),
        ));

        let k4 = apps::load_graph("4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
            .and_then(|g| apps::energy_report(&g));
        let pass = k4
            .as_ref()
            .map(|r| close(r.energy, 6.0, 1e-9) && r.rank == 4)
            .unwrap_or(false);
        items.push(item("graph-k4-energy", pass, "E(K₄) = 6, full rank".into()));
    }

    items
}
