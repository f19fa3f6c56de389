//! Acceptance criteria 1–9, one test and one printed PASS/FAIL line each.
//! Every comparison is exact.

use std::collections::BTreeMap;

use quadpoisson::catalog::{dhc_catalog, params};
use quadpoisson::cohomology::{
    casimirs, class_rank, d_powers_are_casimirs, preferred_classes, r_cohomology_direct, stabilizer_classes_nonbounding,
};
use quadpoisson::koszul::OperatorTuple;
use quadpoisson::scalar::{int, rat};
use quadpoisson::spectrum::{diagonal_spectrum, joint_spectrum, k_r, spectrum_formula, triangularize_frame};
use quadpoisson::suites::{classification_suite, homotopy_suite, les_suite, minors_suite, spectrum_suite};
use quadpoisson::{GPoly, HomPoly, MultiIndex, MultiVec, QMultiVec, QPoly, Rational, Scalar};

fn verdict(n: usize, title: &str, failures: &[String]) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {n}: {status} — {title}");
    for f in failures {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {n} failed: {failures:#?}");
}

fn poly(d: usize, terms: &[(Rational, [i32; 3])]) -> QPoly {
    // terms with a negative exponent are dropped
    HomPoly::from_terms(
        3,
        d,
        terms.iter().filter(|(_, e)| e.iter().all(|&x| x >= 0)).map(|(c, e)| (MultiIndex::new(e), c.clone())),
    )
}

fn compare_table(lambda: &QMultiVec, expected: impl Fn(usize, usize) -> usize, failures: &mut Vec<String>) {
    for p in 0..=3 {
        for d in 0..=9 {
            let got = r_cohomology_direct(lambda, p, d).dim;
            let want = expected(p, d);
            if got != want {
                failures.push(format!("(p, d) = ({p}, {d}): computed {got}, expected {want}"));
            }
        }
    }
}

#[test]
fn criterion_1_lambda3_table() {
    let e = dhc_catalog(3, &params([("a", int(1))])).unwrap();
    let mut failures = Vec::new();
    compare_table(
        &e.lambda,
        |p, d| match (p, d) {
            (0, 0) | (3, 0) | (3, 3) => 1,
            (1, 1) | (2, 2) => 3,
            _ => 0,
        },
        &mut failures,
    );
    verdict(1, "Λ3 (a=1) table of dim LH^{p,d}(R), d ≤ 9", &failures);
}

/// `C₁ʳ` as printed; `fixed` replaces the `xyʳ ∂23` term by `xzʳ ∂23`.
fn c1(a: &Rational, r: i32, fixed: bool) -> QMultiVec {
    let ri = r as i64;
    let d = (r + 1) as usize;
    let t23 = if fixed { [1, 0, r] } else { [1, r, 0] };
    MultiVec::bivector3(
        poly(d, &[(int(9) * a * a, t23), (a * rat(3 * ri - 1, ri + 1), [0, 0, r + 1])]),
        poly(d, &[(a.clone(), [0, 1, r])]),
        poly(d, &[(-a.clone(), [1, 0, r]), (-a * int(ri), [0, 2, r - 1])]),
    )
}

fn c2(a: &Rational, r: i32) -> QMultiVec {
    let ri = r as i64;
    let d = (r + 1) as usize;
    MultiVec::bivector3(
        poly(
            d,
            &[
                (int(9) * a * a, [1, 2, r - 2]),
                (a * rat(-9, ri), [1, 0, r]),
                (a * rat(3 * (ri - 3), ri - 1), [0, 2, r - 1]),
                (rat(-3 * (ri - 1), ri * (ri + 1)), [0, 0, r + 1]),
            ],
        ),
        poly(d, &[(a * rat(6, ri - 1), [1, 1, r - 1]), (-a.clone(), [0, 3, r - 2]), (rat(-1, ri), [0, 1, r])]),
        poly(d, &[(-a * int(ri - 2), [0, 4, r - 3]), (int(1), [0, 2, r - 1])]),
    )
}

#[test]
fn criterion_2_lambda9_table() {
    let a = int(1);
    let e = dhc_catalog(9, &params([("a", a.clone())])).unwrap();
    let mut failures = Vec::new();
    compare_table(
        &e.lambda,
        |p, d| match (p, d) {
            (0, 0) => 1,
            (1, 1) => 3,
            (3, _) => 1,
            (2, 0) | (2, 1) | (2, 3) => 1,
            (2, 2) => 4,
            (2, _) => 2,
            _ => 0,
        },
        &mut failures,
    );
    // printed representatives of H^2 in coefficient degrees 4..6
    for r in 3..=5 {
        let (p1, f1, q2) = (c1(&a, r, false), c1(&a, r, true), c2(&a, r));
        let closed = |c: &QMultiVec| e.lambda.schouten(c).is_zero();
        if !closed(&p1) {
            failures.push(format!(
                "d={}: printed C1 is not a cocycle (with x z^r in place of x y^r: cocycle = {})",
                r + 1,
                closed(&f1)
            ));
        }
        if !closed(&q2) {
            failures.push(format!("d={}: printed C2 is not a cocycle", r + 1));
        }
        let pair = if closed(&p1) { vec![p1.clone(), q2.clone()] } else { vec![f1.clone(), q2.clone()] };
        match class_rank(&e.lambda, &pair) {
            Ok(2) => {}
            Ok(k) => failures.push(format!("d={}: classes of C1, C2 span rank {k}, not 2", r + 1)),
            Err(err) => failures.push(format!("d={}: {err}", r + 1)),
        }
    }
    verdict(2, "Λ9 (a=1) table and printed representatives C1, C2", &failures);
}

#[test]
fn criterion_3_example_rotation() {
    let s = dhc_catalog(2, &params([("a", int(1)), ("b", int(0))])).unwrap().certificate.unwrap();
    let mut failures = Vec::new();
    if let Err(err) = triangularize_frame(&s) {
        failures.push(format!("triangularization over Q(i): {err}"));
    }
    let x2y2 = QPoly::from_ints(&[(&[2, 0, 0], 1), (&[0, 2, 0], 1)]);
    let z = QPoly::var(3, 2);
    for t in 1..=2usize {
        let r = 3 * t;
        match joint_spectrum(&s, r) {
            Ok(sp) => {
                let kr = k_r(&s, &sp.triangularization, r);
                let i = t as i64 - 1;
                if kr != vec![vec![i, i, i]] {
                    failures.push(format!("K_{r} = {kr:?}"));
                }
                if sp.mu != 1 || sp.s() != 1 {
                    failures.push(format!("r={r}: μ = {}, s = {}", sp.mu, sp.s()));
                }
                let expect: GPoly = (&x2y2.pow(t) * &z.pow(t)).map(quadpoisson::Gaussian::from_rational);
                let lines = sp.kernel_polys(3);
                if !(lines.len() == 1 && lines[0].len() == 1 && lines[0][0].is_proportional_to(&expect)) {
                    failures.push(format!("r={r}: kernel is not spanned by (x²+y²)^t z^t"));
                }
            }
            Err(err) => failures.push(format!("r={r}: {err}")),
        }
    }
    let tri = triangularize_frame(&s).unwrap();
    for r in 0..=9 {
        let empty = k_r(&s, &tri, r).is_empty();
        let acyclic = OperatorTuple::new(s.shifted_ops(r)).unwrap().cohomology().is_acyclic();
        if empty != acyclic || empty != (r % 3 != 0) {
            failures.push(format!("r={r}: K_r empty = {empty}, KH acyclic = {acyclic}"));
        }
    }
    verdict(3, "rotation example (Λ2, a=1, b=0)", &failures);
}

#[test]
fn criterion_4_example_nilpotent() {
    let s = dhc_catalog(3, &params([("a", int(0))])).unwrap().certificate.unwrap();
    let mut failures = Vec::new();
    match joint_spectrum(&s, 3) {
        Ok(sp) => {
            if sp.mu != 3 || sp.s() != 3 {
                failures.push(format!("μ = {}, s = {}", sp.mu, sp.s()));
            }
            let expect: Vec<GPoly> = [[2, 0, 1], [1, 1, 1], [0, 2, 1]]
                .iter()
                .map(|e| GPoly::monomial(MultiIndex::new(e), quadpoisson::Gaussian::new(int(1), int(0))))
                .collect();
            let lines = sp.kernel_polys(3);
            let ok = lines.len() == 3
                && lines.iter().zip(&expect).all(|(lv, want)| lv.len() == 1 && lv[0].is_proportional_to(want));
            if !ok {
                failures.push(format!("kernel lines {:?}", lines.iter().map(|lv| lv.iter().map(|p| p.to_literal()).collect::<Vec<_>>()).collect::<Vec<_>>()));
            }
        }
        Err(err) => failures.push(err.to_string()),
    }
    verdict(4, "nilpotent example (Λ3, a=0, r=3)", &failures);
}

#[test]
fn criterion_5_classification() {
    let rep = classification_suite().unwrap();
    let failures: Vec<String> = rep.checks.iter().filter(|c| !c.pass).map(|c| format!("{} {}", c.name, c.detail)).collect();
    verdict(5, "classification suite (two parameter choices per class)", &failures);
}

#[test]
fn criterion_6_minor_identities() {
    let rep = minors_suite(20, &[2, 3, 4]);
    let failures: Vec<String> = rep.checks.iter().filter(|c| !c.pass).map(|c| format!("{} {}", c.name, c.detail)).collect();
    verdict(6, "minor identities and det L = D^{n-1}, n = 2, 3, 4", &failures);
}

#[test]
fn criterion_7_structural_properties() {
    let mut failures = Vec::new();
    for rep in [homotopy_suite(10, 8), spectrum_suite().unwrap(), les_suite(9).unwrap()] {
        failures.extend(rep.checks.iter().filter(|c| !c.pass).map(|c| format!("{}: {} {}", rep.suite, c.name, c.detail)));
    }
    verdict(7, "∂² = 0, homotopy identities, towers, exact sequence, complements, assemble = direct", &failures);
}

#[test]
fn criterion_8_joint_spectrum_formula() {
    let mut failures = Vec::new();
    let cases: [(usize, BTreeMap<String, Rational>); 3] = [
        (2, params([("a", int(1)), ("b", int(0))])),
        (3, params([("a", int(1))])),
        (9, params([("a", int(1))])),
    ];
    for (i, ps) in cases {
        let s = dhc_catalog(i, &ps).unwrap().certificate.unwrap();
        for r in 0..=6 {
            match joint_spectrum(&s, r) {
                Ok(sp) => {
                    if spectrum_formula(&s, &sp.triangularization, r) != diagonal_spectrum(&sp.ops) {
                        failures.push(format!("Λ{i} r={r}: diagonal spectrum differs from αBI"));
                    }
                }
                Err(err) => failures.push(format!("Λ{i} r={r}: {err}")),
            }
        }
    }
    verdict(8, "diagonal spectrum = {αBI} for Λ2, Λ3, Λ9, r ≤ 6", &failures);
}

#[test]
fn criterion_9_cohomological_phenomena() {
    let mut failures = Vec::new();
    for i in [3usize, 9] {
        let e = dhc_catalog(i, &params([("a", int(1))])).unwrap();
        if !stabilizer_classes_nonbounding(&e.lambda) {
            failures.push(format!("Λ{i}: stabilizer elements are not independent nonbounding 1-cocycles"));
        }
        for p in 0..=3 {
            for d in p..=p + 3 {
                let (cands, rank) = preferred_classes(&e.lambda, p, d);
                let not_closed = cands.iter().filter(|c| !c.is_cocycle).count();
                if not_closed > 0 {
                    failures.push(format!("Λ{i} (p, d) = ({p}, {d}): {not_closed} of Cas ⊗ ∧^p 𝔤 are not cocycles"));
                }
                let nonbounding = cands.iter().filter(|c| c.nonbounding).count();
                println!("    Λ{i} (p, d) = ({p}, {d}): {} candidates, {nonbounding} nonbounding, class rank {rank}", cands.len());
            }
        }
    }
    // K-exact SRMI instance: Λ1 with a = b = c has all δ_i = 0
    let s = dhc_catalog(1, &params([("a", int(1)), ("b", int(1)), ("c", int(1))])).unwrap().certificate.unwrap();
    if !s.is_k_exact() {
        failures.push("Λ1 (a=b=c=1) is not K-exact".into());
    }
    if !d_powers_are_casimirs(&s, 3) {
        failures.push("D^p is not a Casimir for some p ≤ 3".into());
    }
    let d3 = s.frame().d().clone();
    if !casimirs(s.lambda(), 3).iter().any(|f| f.is_proportional_to(&d3)) {
        failures.push("D missing from the degree-3 Casimirs".into());
    }
    verdict(9, "stabilizer classes, Cas ⊗ ∧𝔤 candidates, D^p Casimirs", &failures);
}
