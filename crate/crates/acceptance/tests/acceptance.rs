//! Acceptance criteria 1 to 13. Each test writes one `criterion NN PASS|FAIL`
//! line straight to stderr (visible without `--nocapture`) and fails on any
//! mismatch.
//!
//! Pinned tolerances: every comparison is exact rational-function equality
//! (no numeric slack); the random prefilter and the randomized property
//! cases use fixed seeds; criterion 1 must finish within 60 s.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use eck::algebra::{q, Character, EvalPoint, LatticeMap, Monomial, RatExpr, SparsePoly, DEFAULT_SEED, Q};
use eck::hirzebruch::{
    affine_class, cone_pushforward, degeneration_complement, projective_class, AffineSpace, Point, ProjectiveSpace,
};
use eck::identities::{integrate_projective, verify, FormulaId};
use eck::positivity::{check_nonnegative, to_positive_form, PositiveKind, SPolynomial};
use eck::specialize::{csm_of, diagonalize, multidegree};

const PROPERTY_SEED: u64 = 0x00c0_ffee;
const PROPERTY_CASES: usize = 128;
const PROJ_TIME_LIMIT: Duration = Duration::from_secs(60);

fn report(id: u8, name: &str, failures: &[String]) {
    let mut err = std::io::stderr().lock();
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    let _ = writeln!(err, "criterion {id:>2} {verdict}  {name}");
    for f in failures {
        let _ = writeln!(err, "    {f}");
    }
    assert!(failures.is_empty(), "criterion {id} ({name}): {}", failures.join("; "));
}

fn eq(a: &RatExpr, b: &RatExpr) -> bool {
    a.equals_seeded(b, DEFAULT_SEED)
}

fn proj_at(kind: ProjectiveSpace, n: usize, i: i32) -> RatExpr {
    projective_class(kind, n).unwrap().at(Point::Fixed(i)).unwrap().clone()
}

fn origin(kind: AffineSpace, n: usize) -> RatExpr {
    affine_class(kind, n).unwrap().origin().unwrap().clone()
}

fn check(failures: &mut Vec<String>, ok: bool, what: impl FnOnce() -> String) {
    if !ok {
        failures.push(what());
    }
}

#[test]
fn criterion_01_projective_quadric_degeneration() {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 2..=8 {
        let a = arity(n);
        let c = indices(n);
        let low = indices(n - 2);
        for &i in &c {
            let p = p_local(a, &c, i);
            let qc = qc_local(a, &c, i);
            let x = x_local(n, i);
            let (q_, xc) = (&p - &qc, &p - &x);
            let rhs = if low.contains(&i) {
                &y(a) * &qc_local(a, &low, i)
            } else {
                RatExpr::zero(a)
            };
            check(&mut bad, eq(&(&xc - &qc), &rhs), || format!("n={n} p_{i}: Xc - Qc"));
            check(&mut bad, eq(&(&q_ - &x), &rhs), || format!("n={n} p_{i}: Q - X"));
            for (kind, oracle) in [
                (ProjectiveSpace::Qc, &qc),
                (ProjectiveSpace::Q, &q_),
                (ProjectiveSpace::X, &x),
                (ProjectiveSpace::Xc, &xc),
            ] {
                check(&mut bad, eq(&proj_at(kind, n, i), oracle), || {
                    format!("n={n} p_{i}: {kind} differs from oracle")
                });
            }
        }
        check(&mut bad, verify(FormulaId::Proj, n, None).unwrap().verified, || {
            format!("verify proj n={n}")
        });
    }
    let took = start.elapsed();
    check(&mut bad, took < PROJ_TIME_LIMIT, || format!("took {took:?}"));
    report(1, "projective quadric degeneration, n = 2..8", &bad);
}

#[test]
fn criterion_02_affine_cone_degeneration() {
    let mut bad = Vec::new();
    for n in 2..=8 {
        let a = arity(n);
        let ccq = ccq_push(a, &indices(n));
        let rhs = &y(a) * &ccq_push(a, &indices(n - 2));
        check(&mut bad, eq(&(&ccx(n) - &ccq), &rhs), || format!("n={n}: CCX - CCQ"));
        check(&mut bad, eq(&origin(AffineSpace::CCQ, n), &ccq), || {
            format!("n={n}: CCQ differs from oracle")
        });
        check(&mut bad, eq(&origin(AffineSpace::CCX, n), &ccx(n)), || {
            format!("n={n}: CCX differs from oracle")
        });
        check(&mut bad, verify(FormulaId::Con, n, None).unwrap().verified, || {
            format!("verify con n={n}")
        });
    }
    report(2, "affine cone degeneration, n = 2..8", &bad);
}

#[test]
fn criterion_03_closed_cone_degeneration() {
    let mut bad = Vec::new();
    for n in 2..=8 {
        let a = arity(n);
        let (c, low) = (indices(n), indices(n - 2));
        let cq = &cn(a, &c) - &ccq_push(a, &c);
        let cx = &cn(a, &c) - &ccx(n);
        let cq_low = &cn(a, &low) - &ccq_push(a, &low);
        let rhs = &y(a) * &(&cn(a, &low) - &cq_low);
        check(&mut bad, eq(&(&cq - &cx), &rhs), || format!("n={n}: CQ - CX"));
        check(&mut bad, eq(&origin(AffineSpace::CQ, n), &cq), || {
            format!("n={n}: CQ differs from oracle")
        });
        check(&mut bad, eq(&origin(AffineSpace::CX, n), &cx), || {
            format!("n={n}: CX differs from oracle")
        });
        check(&mut bad, verify(FormulaId::Dope, n, None).unwrap().verified, || {
            format!("verify dope n={n}")
        });
    }
    report(3, "closed cone degeneration, n = 2..8", &bad);
}

#[test]
fn criterion_04_general_k_degeneration() {
    let mut bad = Vec::new();
    for n in 4..=8 {
        let a = arity(n);
        let m = n / 2;
        let all = indices(n);
        let whole = ccq_push(a, &all);
        for k in 0..m {
            let free: Vec<i32> = all.iter().copied().filter(|j| j.unsigned_abs() as usize <= k).collect();
            let upper: Vec<i32> = all.iter().copied().filter(|j| j.unsigned_abs() as usize > k).collect();
            let ystar = &cn(a, &free) * &ccq_push(a, &upper);
            let rhs = &minus_y_pow(a, (m - k) as u32) * &ccq_push(a, &free);
            check(&mut bad, eq(&(&whole - &ystar), &rhs), || {
                format!("n={n} k={k}: CCQ - Y*")
            });
            let lib = degeneration_complement(n, k).unwrap().value;
            check(&mut bad, eq(&lib, &ystar), || {
                format!("n={n} k={k}: Y* differs from oracle")
            });
            check(
                &mut bad,
                verify(FormulaId::RemarkK, n, Some(k)).unwrap().verified,
                || format!("verify n={n} k={k}"),
            );
            if k == m - 1 {
                check(&mut bad, eq(&ystar, &ccx(n)), || {
                    format!("n={n}: Y* at k = m-1 is not CCX")
                });
                let con_rhs = &minus_y_pow(a, 1) * &ccq_push(a, &indices(n - 2));
                check(&mut bad, eq(&rhs, &con_rhs), || {
                    format!("n={n}: k = m-1 right side is not con's")
                });
            }
        }
    }
    report(4, "general k degeneration, n = 4..8, 0 <= k <= m-1", &bad);
}

/// `CQ_n` by additivity: `CQ_n = CX_n + y (C^{n-2} - CQ_{n-2})`, with
/// `CQ_0 = C^0` and `CQ_1 = {0}`.
fn cq_by_additivity(n: usize, a: usize) -> RatExpr {
    if n < 2 {
        return one(a);
    }
    let c = indices(n);
    let low = indices(n - 2);
    let cx = &cn(a, &c) - &ccx(n).padded(a);
    &cx + &(&y(a) * &(&cn(a, &low) - &cq_by_additivity(n - 2, a)))
}

#[test]
fn criterion_05_complement_recursion() {
    let mut bad = Vec::new();
    for n in 2..=9 {
        let a = arity(n);
        let expect = &cn(a, &indices(n)) - &cq_by_additivity(n, a);
        check(&mut bad, eq(&origin(AffineSpace::CCQ, n), &expect), || {
            format!("n={n}: recursion vs additivity")
        });
        check(&mut bad, verify(FormulaId::Expl, n, None).unwrap().verified, || {
            format!("verify expl n={n}")
        });
    }
    report(5, "complement recursion vs additivity, n = 2..9", &bad);
}

/// The diagonal closed forms as displayed, in `T` and `y`.
fn displayed_closed_form(n: usize) -> RatExpr {
    let m = (n / 2) as u32;
    let tt = Character::from_slice(&[1]);
    let o = SparsePoly::one(1);
    let yy = SparsePoly::y(1);
    let t = SparsePoly::t_mono(&tt);
    let one_y = &o + &yy;
    let one_yt = &o + &(&yy * &t);
    let my = yy.scale(&q(-1));
    let mut acc = RatExpr::zero(1);
    for i in 1..=m {
        let (e, d) = if n.is_multiple_of(2) {
            (2 * i - 2, 2 * i)
        } else {
            (2 * i - 1, 2 * i + 1)
        };
        let num = &(&(&one_y.pow(2) * &t.pow(2)) * &my.pow(m - i)) * &one_yt.pow(e);
        acc = &acc + &RatExpr::new(num, vec![tt.clone(); d as usize]).unwrap();
    }
    if n % 2 == 1 {
        acc = &acc + &RatExpr::new(&(&my.pow(m) * &one_y) * &t, [tt.clone()]).unwrap();
    }
    acc
}

#[test]
fn criterion_06_diagonal_closed_forms() {
    let mut bad = Vec::new();
    for n in 2..=9 {
        let d = diagonalize(&affine_class(AffineSpace::CCQ, n).unwrap()).unwrap();
        check(&mut bad, eq(&d, &displayed_closed_form(n)), || format!("n={n}"));
        check(
            &mut bad,
            verify(FormulaId::ClosedForm, n, None).unwrap().verified,
            || format!("verify n={n}"),
        );
    }
    report(6, "diagonal closed forms, n = 2..9", &bad);
}

#[test]
fn criterion_07_blowup_consistency() {
    let mut bad = Vec::new();
    for n in 2..=6 {
        let a = arity(n);
        let qc = cone_pushforward(&projective_class(ProjectiveSpace::Qc, n).unwrap(), n).unwrap();
        let xc = cone_pushforward(&projective_class(ProjectiveSpace::Xc, n).unwrap(), n).unwrap();
        check(&mut bad, eq(&qc, &origin(AffineSpace::CCQ, n)), || format!("n={n}: Qc"));
        check(&mut bad, eq(&xc, &origin(AffineSpace::CCX, n)), || format!("n={n}: Xc"));
        check(&mut bad, eq(&qc, &ccq_push(a, &indices(n))), || {
            format!("n={n}: Qc vs oracle")
        });
        check(&mut bad, eq(&xc, &ccx(n)), || format!("n={n}: Xc vs oracle"));
    }
    report(7, "blowup consistency, n = 2..6", &bad);
}

/// Evaluates a positive form at `S_w = T^w - 1`, `δ = -1 - y` directly.
fn eval_form(p: &SPolynomial, pt: &EvalPoint) -> Option<Q> {
    let s: Vec<Q> = p
        .weights
        .iter()
        .map(|w| SparsePoly::t_mono(w).eval(&pt.t, &Q::zero()) - Q::one())
        .collect();
    let delta = -Q::one() - &pt.y;
    let mut den = Q::one();
    for (x, &d) in s.iter().zip(&p.den) {
        for _ in 0..d {
            den *= x;
        }
    }
    (!den.is_zero()).then(|| p.num.eval(&s, &delta) / den)
}

#[test]
fn criterion_08_positivity_certificates() {
    let mut bad = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED);
    for n in 2..=8 {
        for (kind, space) in [
            (PositiveKind::CCQ, AffineSpace::CCQ),
            (PositiveKind::CQ, AffineSpace::CQ),
        ] {
            let form = to_positive_form(kind, n).unwrap();
            let cert = check_nonnegative(&form);
            if let Some(w) = &cert.witness {
                bad.push(format!(
                    "{kind:?}_{n}: negative coefficient {} at δ^{} S^{:?}",
                    w.coeff, w.delta, w.s
                ));
            }
            check(&mut bad, cert.roundtrip_ok, || format!("{kind:?}_{n}: round trip"));
            let class = origin(space, n);
            for _ in 0..3 {
                let pt = EvalPoint::random(arity(n), &mut rng);
                if let (Ok(v), Some(f)) = (class.eval(&pt), eval_form(&form, &pt)) {
                    check(&mut bad, v == f, || format!("{kind:?}_{n}: value at {:?}", pt.t));
                }
            }
        }
    }
    report(8, "positivity certificates for CCQ and CQ, n = 2..8", &bad);
}

type IntPoly = Vec<i64>;

fn ip_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn ip_add(a: &IntPoly, b: &IntPoly) -> IntPoly {
    (0..a.len().max(b.len()))
        .map(|i| a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0))
        .collect()
}

fn ip_term(i: usize, e: usize) -> IntPoly {
    // t^i (1 + t)^e
    let mut p = vec![0; i];
    p.push(1);
    (0..e).fold(p, |acc, _| ip_mul(&acc, &vec![1, 1]))
}

fn ip_trim(mut p: IntPoly) -> IntPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// `Σ_{i<m} t^{2i} (1+t)^{2(m-i-1)}`, plus `t^{2m}` for odd `n`.
fn displayed_csm(n: usize) -> IntPoly {
    let m = n / 2;
    let mut acc = if n % 2 == 1 { ip_term(2 * m, 0) } else { vec![0] };
    for i in 0..m {
        acc = ip_add(&acc, &ip_term(2 * i, 2 * (m - i - 1)));
    }
    ip_trim(acc)
}

fn csm_ints(kind: AffineSpace, n: usize) -> IntPoly {
    csm_of(kind, n)
        .unwrap()
        .coeffs()
        .iter()
        .map(|c| {
            assert!(c.is_integer(), "non-integral CSM coefficient {c}");
            i64::try_from(c.to_integer()).unwrap()
        })
        .collect()
}

#[test]
fn criterion_09_csm_displayed_families() {
    let mut bad = Vec::new();
    for n in 2..=7 {
        let got = csm_ints(AffineSpace::CCQ, n);
        let shown = displayed_csm(n);
        check(&mut bad, got.iter().all(|&c| c >= 0), || {
            format!("n={n}: negative coefficient in {got:?}")
        });
        check(&mut bad, got == shown, || {
            format!("n={n}: limit {got:?}, displayed {shown:?} (coefficients of 1, t, t^2, ...)")
        });
    }
    report(9, "CSM limits equal the displayed families, n = 2..7", &bad);
}

#[test]
fn csm_limit_families_derived() {
    for n in 2..=7 {
        let m = n / 2;
        let expect = if n % 2 == 0 {
            displayed_csm(n)
        } else {
            ip_trim((0..m).fold(ip_term(2 * m, 0), |acc, i| {
                ip_add(&acc, &ip_term(2 * i, 2 * (m - i) - 1))
            }))
        };
        assert_eq!(csm_ints(AffineSpace::CCQ, n), expect, "CCQ n={n}");
        assert_eq!(csm_ints(AffineSpace::CCX, n), ip_term(0, n - 2), "CCX n={n}");
    }
    assert_eq!(csm_ints(AffineSpace::CCQ, 4), vec![1, 2, 2]);
    assert_eq!(csm_ints(AffineSpace::CCQ, 5), vec![1, 3, 4, 2, 1]);
}

#[test]
fn criterion_10_multidegree() {
    let mut bad = Vec::new();
    for n in 2..=8 {
        let d = diagonalize(&affine_class(AffineSpace::CQ, n).unwrap()).unwrap();
        let got = multidegree(&d, n).unwrap();
        check(&mut bad, got == (q(2), 1 - n as i32), || {
            format!("n={n}: {} t^{}", got.0, got.1)
        });
        let c = diagonalize(&affine_class(AffineSpace::Cn, n).unwrap()).unwrap();
        check(&mut bad, multidegree(&c, n).unwrap() == (q(1), -(n as i32)), || {
            format!("n={n}: ambient")
        });
    }
    report(10, "multidegree of CQ_n is 2 t^(1-n), n = 2..8", &bad);
}

#[test]
fn criterion_11_divisibility_by_y() {
    let mut bad = Vec::new();
    let zero = Q::zero();
    for n in 2..=8 {
        let a = arity(n);
        let c = indices(n);
        for &i in &c {
            let q_ = &p_local(a, &c, i) - &qc_local(a, &c, i);
            let d = (&q_ - &x_local(n, i)).subs_y(&zero);
            check(&mut bad, d.reduce().is_zero(), || {
                format!("n={n} p_{i}: (Q - X)(y=0) != 0")
            });
            let lib = (&proj_at(ProjectiveSpace::Q, n, i) - &proj_at(ProjectiveSpace::X, n, i)).subs_y(&zero);
            check(&mut bad, lib.reduce().is_zero(), || {
                format!("n={n} p_{i}: library (Q - X)(y=0) != 0")
            });
        }
        let cq = &cn(a, &c) - &ccq_push(a, &c);
        let cx = &cn(a, &c) - &ccx(n);
        check(&mut bad, (&cq - &cx).subs_y(&zero).reduce().is_zero(), || {
            format!("n={n}: (CQ - CX)(y=0) != 0")
        });
        check(
            &mut bad,
            verify(FormulaId::MilnorDivY, n, None).unwrap().verified,
            || format!("verify n={n}"),
        );
    }
    report(11, "Q/X and CQ/CX agree at y = 0, n = 2..8", &bad);
}

fn chi(kind: ProjectiveSpace, n: usize) -> Vec<Q> {
    integrate_projective(&projective_class(kind, n).unwrap())
        .unwrap()
        .y_coefficients()
        .unwrap()
}

/// `χ_y(P^d) = Σ_{p<=d} (-y)^p`
fn chi_proj(d: i64) -> Vec<Q> {
    (0..=d).map(|p| q(if p % 2 == 0 { 1 } else { -1 })).collect()
}

fn vsum(a: &[Q], b: &[Q], sign: i64) -> Vec<Q> {
    let n = a.len().max(b.len());
    let get = |v: &[Q], i: usize| v.get(i).cloned().unwrap_or_else(Q::zero);
    let mut out: Vec<Q> = (0..n).map(|i| get(a, i) + get(b, i) * q(sign)).collect();
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

#[test]
fn criterion_12_chi_y_integrals() {
    let mut bad = Vec::new();
    for n in 2..=8 {
        for kind in [
            ProjectiveSpace::P,
            ProjectiveSpace::Q,
            ProjectiveSpace::X,
            ProjectiveSpace::Qc,
            ProjectiveSpace::Xc,
        ] {
            match integrate_projective(&projective_class(kind, n).unwrap()) {
                Ok(p) => {
                    let bound = if matches!(kind, ProjectiveSpace::Q | ProjectiveSpace::X) {
                        n - 2
                    } else {
                        n - 1
                    };
                    check(&mut bad, p.has_integer_coefficients(), || format!("{kind}_{n}: {p}"));
                    check(&mut bad, p.y_degree().unwrap_or(0) as usize <= bound, || {
                        format!("{kind}_{n}: degree of {p}")
                    });
                }
                Err(e) => bad.push(format!("{kind}_{n}: {e}")),
            }
        }
        let d = n as i64 - 1;
        let p = chi(ProjectiveSpace::P, n);
        check(&mut bad, p == chi_proj(d), || format!("P^{d}"));
        // two hyperplanes P^{d-1} meeting in P^{d-2}
        let x = vsum(&vsum(&chi_proj(d - 1), &chi_proj(d - 1), 1), &chi_proj(d - 2), -1);
        check(&mut bad, chi(ProjectiveSpace::X, n) == x, || format!("X_{n}"));
        check(&mut bad, chi(ProjectiveSpace::Xc, n) == vsum(&p, &x, -1), || {
            format!("Xc_{n}")
        });
        let qq = chi(ProjectiveSpace::Q, n);
        check(&mut bad, vsum(&qq, &chi(ProjectiveSpace::Qc, n), 1) == p, || {
            format!("Q_{n} + Qc_{n}")
        });
    }
    check(&mut bad, chi(ProjectiveSpace::Q, 4) == vec![q(1), q(-2), q(1)], || {
        "Q_4 is not (1 - y)^2".into()
    });
    check(&mut bad, chi(ProjectiveSpace::Q, 2) == vec![q(2)], || {
        "Q_2 is not two points".into()
    });
    report(12, "chi_y integrals, n = 2..8", &bad);
}

fn random_expr(rng: &mut ChaCha8Rng, a: usize) -> RatExpr {
    let terms: Vec<(Monomial, Q)> = (0..rng.gen_range(1..=4))
        .map(|_| {
            let chr: Vec<i32> = (0..a).map(|_| rng.gen_range(-2..=2)).collect();
            let c = Q::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=3).into());
            (Monomial::new(rng.gen_range(0..=2), Character::from_slice(&chr)), c)
        })
        .collect();
    let num = SparsePoly::from_terms(a, terms);
    let factors: Vec<Character> = (0..rng.gen_range(0..=3))
        .map(|_| loop {
            let w: Vec<i32> = (0..a).map(|_| rng.gen_range(-1..=1)).collect();
            if w.iter().any(|&e| e != 0) {
                break Character::from_slice(&w);
            }
        })
        .collect();
    RatExpr::new(num, factors).unwrap()
}

fn flip(a: usize) -> LatticeMap {
    let images = (0..a)
        .map(|k| {
            let mut e = vec![0; a];
            e[k] = if k == 0 { 1 } else { -1 };
            Character::from_slice(&e)
        })
        .collect();
    LatticeMap::new(images, a).unwrap()
}

#[test]
fn criterion_13_property_suites() {
    let mut bad = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED);
    for case in 0..PROPERTY_CASES {
        let a = 3;
        let (x, y_, z) = (
            random_expr(&mut rng, a),
            random_expr(&mut rng, a),
            random_expr(&mut rng, a),
        );
        let laws = [
            ("x + y = y + x", eq(&(&x + &y_), &(&y_ + &x))),
            (
                "(x + y) + z = x + (y + z)",
                eq(&(&(&x + &y_) + &z), &(&x + &(&y_ + &z))),
            ),
            ("x y = y x", eq(&(&x * &y_), &(&y_ * &x))),
            ("(x y) z = x (y z)", eq(&(&(&x * &y_) * &z), &(&x * &(&y_ * &z)))),
            (
                "x (y + z) = x y + x z",
                eq(&(&x * &(&y_ + &z)), &(&(&x * &y_) + &(&x * &z))),
            ),
            ("(x - y) + y = x", eq(&(&(&x - &y_) + &y_), &x)),
            ("x + (-1) x = 0", (&x + &x.scale(&q(-1))).reduce().is_zero()),
            ("1 x = x", eq(&(&one(a) * &x), &x)),
        ];
        for (law, ok) in laws {
            check(&mut bad, ok, || format!("case {case}: {law}"));
        }
        let pt = EvalPoint::random(a, &mut rng);
        if let (Ok(u), Ok(v)) = (x.eval(&pt), y_.eval(&pt)) {
            check(&mut bad, (&x * &y_).eval(&pt).ok() == Some(&u * &v), || {
                format!("case {case}: eval(x y)")
            });
            check(&mut bad, (&x + &y_).eval(&pt).ok() == Some(&u + &v), || {
                format!("case {case}: eval(x + y)")
            });
        }
        let r = x.reduce();
        check(&mut bad, r.reduce() == r, || {
            format!("case {case}: reduce is not idempotent")
        });
        check(&mut bad, eq(&r, &x), || {
            format!("case {case}: reduce changes the value")
        });
    }
    let minus_one = q(-1);
    for n in 2..=7 {
        let a = arity(n);
        let c = indices(n);
        for &i in &c {
            let at = proj_at(ProjectiveSpace::P, n, i).subs_y(&minus_one);
            check(&mut bad, eq(&at, &one(a)), || {
                format!("P n={n} p_{i}: y = -1 does not give 1")
            });
            let qc = proj_at(ProjectiveSpace::Qc, n, i).subs_y(&minus_one);
            let expect = if i == 0 { one(a) } else { RatExpr::zero(a) };
            check(&mut bad, eq(&qc, &expect), || format!("Qc n={n} p_{i}: y = -1"));
        }
        check(
            &mut bad,
            eq(&origin(AffineSpace::Cn, n).subs_y(&minus_one), &one(a)),
            || format!("Cn n={n}: y = -1"),
        );
        let f = flip(a);
        for kind in [
            ProjectiveSpace::P,
            ProjectiveSpace::Q,
            ProjectiveSpace::X,
            ProjectiveSpace::Qc,
            ProjectiveSpace::Xc,
        ] {
            for &i in &c {
                let moved = proj_at(kind, n, i).map_lattice(&f).unwrap();
                check(&mut bad, eq(&moved, &proj_at(kind, n, -i)), || {
                    format!("{kind} n={n}: p_{i} vs p_{}", -i)
                });
            }
        }
        for kind in [AffineSpace::CQ, AffineSpace::CX, AffineSpace::CCQ, AffineSpace::CCX] {
            let v = origin(kind, n);
            check(&mut bad, eq(&v.map_lattice(&f).unwrap(), &v), || {
                format!("{kind} n={n}: not symmetric")
            });
        }
    }
    report(
        13,
        "kernel laws, evaluation, reduce, y = -1 collapse, index involution",
        &bad,
    );
}
