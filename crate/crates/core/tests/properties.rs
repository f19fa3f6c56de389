use std::collections::BTreeMap;

use proptest::prelude::*;

use quadpoisson::catalog::dhc_catalog;
use quadpoisson::cohomology::Engine;
use quadpoisson::koszul::OperatorTuple;
use quadpoisson::multivector::lp_coboundary;
use quadpoisson::poly::{divides, monomial_count};
use quadpoisson::{Gaussian, MonomialBasis, MultiVecBasis, QMatrix, QMultiVec, QPoly, Rational, Scalar};

fn q(v: i64) -> Rational {
    Rational::from_i64(v)
}

fn poly_from(n: usize, d: usize, coeffs: &[i64]) -> QPoly {
    let basis = MonomialBasis::new(n, d);
    let c: Vec<Rational> = coeffs.iter().take(basis.len()).map(|&v| q(v)).collect();
    QPoly::from_coords(&basis, &c)
}

fn mv_from(n: usize, p: usize, d: usize, coeffs: &[i64]) -> QMultiVec {
    let basis = MultiVecBasis::new(n, p, d);
    let c: Vec<Rational> = coeffs.iter().cycle().take(basis.len()).map(|&v| q(v)).collect();
    basis.from_coords(&c)
}

fn matrix_from(n: usize, entries: &[i64]) -> QMatrix {
    QMatrix::from_fn(n, n, |i, j| q(entries[i * n + j]))
}

fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        q(1)
    } else {
        q(-1)
    }
}

fn coeffs(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn linear_vector_fields_are_derivations(
        a in coeffs(monomial_count(3, 2)),
        b in coeffs(monomial_count(3, 1)),
        y in coeffs(9),
    ) {
        let p = poly_from(3, 2, &a);
        let r = poly_from(3, 1, &b);
        let y = matrix_from(3, &y);
        let lhs = (&p * &r).apply_linvf(&y);
        let rhs = &(&p.apply_linvf(&y) * &r) + &(&p * &r.apply_linvf(&y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exact_division_round_trips(a in coeffs(monomial_count(3, 2)), b in coeffs(monomial_count(3, 2))) {
        let d = poly_from(3, 2, &a);
        prop_assume!(!d.is_zero());
        let t = poly_from(3, 2, &b);
        prop_assert_eq!(divides(&d, &(&d * &t)).unwrap(), t.clone());
        // adding a nonzero multiple of a variable not divisible by d breaks divisibility
        let off = &(&d * &t) + &QPoly::var(3, 0).pow(4);
        if divides(&d, &off).is_ok() {
            let quotient = divides(&d, &off).unwrap();
            prop_assert_eq!(&d * &quotient, off);
        }
    }

    #[test]
    fn schouten_graded_antisymmetry(
        p in 0usize..=3, qd in 0usize..=3, dp in 0usize..=2, dq in 0usize..=2,
        a in coeffs(64), b in coeffs(64),
    ) {
        let x = mv_from(3, p, dp, &a);
        let y = mv_from(3, qd, dq, &b);
        let lhs = x.schouten(&y);
        let e = (p + 1) * (qd + 1);
        let rhs = y.schouten(&x).scale(&sign(e)).neg();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn schouten_jacobi(
        ps in prop::array::uniform3(0usize..=2),
        a in coeffs(18), b in coeffs(18), c in coeffs(18),
    ) {
        let [p, qd, r] = ps;
        let x = mv_from(3, p, 1, &a);
        let y = mv_from(3, qd, 1, &b);
        let z = mv_from(3, r, 1, &c);
        let pm = |k: usize| k + 1; // (k − 1) mod 2
        let t1 = x.schouten(&y.schouten(&z)).scale(&sign(pm(p) * pm(r)));
        let t2 = y.schouten(&z.schouten(&x)).scale(&sign(pm(qd) * pm(p)));
        let t3 = z.schouten(&x.schouten(&y)).scale(&sign(pm(r) * pm(qd)));
        prop_assert!(t1.add(&t2).add(&t3).is_zero());
    }

    #[test]
    fn koszul_divergence_squares_to_zero(p in 0usize..=3, d in 0usize..=3, a in coeffs(64)) {
        let x = mv_from(3, p, d, &a);
        prop_assert!(x.koszul_div().koszul_div().is_zero());
    }

    #[test]
    fn bracket_from_divergence(
        p in 0usize..=3, qd in 0usize..=3, dp in 0usize..=2, dq in 0usize..=2,
        a in coeffs(64), b in coeffs(64),
    ) {
        let x = mv_from(3, p, dp, &a);
        let y = mv_from(3, qd, dq, &b);
        let rhs = |s: Rational| {
            x.wedge(&y)
                .koszul_div()
                .scale(&s)
                .sub(&x.koszul_div().wedge(&y))
                .sub(&x.wedge(&y.koszul_div()).scale(&s))
        };
        prop_assert_eq!(x.schouten(&y), rhs(sign(qd)));
        if p % 2 == qd % 2 {
            prop_assert_eq!(x.schouten(&y), rhs(sign(p)));
        }
    }

    #[test]
    fn complexified_koszul_dimensions_agree(v1 in coeffs(3), v2 in coeffs(3), conj in coeffs(9), r in 0usize..=3) {
        // commuting pair: simultaneously diagonal up to a rational change of basis
        let mut c = matrix_from(3, &conj);
        for i in 0..3 {
            c[(i, i)] = q(7);
        }
        let ci = c.inverse().expect("diagonally dominant");
        let diag = |v: &[i64]| QMatrix::from_fn(3, 3, |i, j| if i == j { q(v[i]) } else { q(0) });
        let a1 = c.mul(&diag(&v1)).mul(&ci);
        let a2 = c.mul(&diag(&v2)).mul(&ci);
        let basis = MonomialBasis::new(3, r);
        let ops: Vec<QMatrix> = [a1, a2]
            .iter()
            .map(|a| quadpoisson::frame::linvf_matrix(a, &basis))
            .collect();
        let t = OperatorTuple::new(ops).unwrap();
        let g = t.map(Gaussian::from_rational);
        prop_assert_eq!(t.homology_dims(), g.homology_dims());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn real_cochains_form_a_subcomplex(
        which in prop::sample::select(vec![2usize, 3, 6, 9]),
        p in 0usize..=2,
        d in 0usize..=6,
        a in coeffs(256),
    ) {
        let mut params = BTreeMap::new();
        if which == 3 || which == 6 {
            params.insert("a".to_string(), q(2));
        }
        let entry = dhc_catalog(which, &params).unwrap();
        let s = entry.certificate.clone().unwrap();
        let e = Engine::new(s);
        let c = mv_from(3, p, d, &a);
        let lhs = e.inject(&lp_coboundary(e.lambda(), &c).unwrap());
        let rhs = e.p_coboundary(&e.inject(&c));
        prop_assert_eq!(lhs.coords(3), rhs.coords(3));
        // the injection is inverted exactly on its image
        prop_assert_eq!(e.is_real(&e.inject(&c)), Some(c.clone()));
    }
}
