//! Named property suites: `spectrum`, `minors`, `homotopy`, `classification`,
//! `les`. Each returns a list of named checks; random inputs use fixed seeds.

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::catalog::{dhc_catalog, params, CATALOG_SIZE};
use crate::cohomology::{ComplementOrder, Engine};
use crate::error::Error;
use crate::grassmann::GrassmannBasis;
use crate::koszul::{homotopy_check, OperatorTuple};
use crate::linalg::Matrix;
use crate::minors::{MinorTables, PolyMatrix};
use crate::multivector::{bracket_matrix, MultiVec};
use crate::poly::HomPoly;
use crate::scalar::{int, rat, Rational};
use crate::spectrum::{
    complement_kernel_check, diagonal_spectrum, joint_spectrum, kernel_tower_general, spectrum_formula,
};

pub const SUITES: [&str; 5] = ["spectrum", "minors", "homotopy", "classification", "les"];

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport { suite: suite.to_string(), checks: Vec::new() }
    }

    fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), pass, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn run_suite(name: &str) -> Result<SuiteReport, Error> {
    match name {
        "spectrum" => spectrum_suite(),
        "minors" => Ok(minors_suite(20, &[2, 3, 4])),
        "homotopy" => Ok(homotopy_suite(10, 8)),
        "classification" => classification_suite(),
        "les" => les_suite(9),
        _ => Err(Error::UnknownSuite(name.to_string())),
    }
}

/// Spectrum formula against the diagonals for Λ₂, Λ₃, Λ₉ at `r ≤ 6`, kernel
/// towers (multiplicity = Σ kernel dims, checked inside the tower
/// construction) and the supplementary-kernel criterion.
pub fn spectrum_suite() -> Result<SuiteReport, Error> {
    let mut rep = SuiteReport::new("spectrum");
    let cases = [
        (2usize, params([("a", int(1)), ("b", int(0))])),
        (3, params([("a", int(0))])),
        (3, params([("a", int(1))])),
        (9, params([("a", int(1))])),
    ];
    for (i, ps) in cases {
        let s = dhc_catalog(i, &ps)?.certificate.expect("SRMI class");
        for r in 0..=6 {
            let label = format!("{} r={r}", entry_label(i, &ps));
            match joint_spectrum(&s, r) {
                Ok(sp) => {
                    let formula = spectrum_formula(&s, &sp.triangularization, r) == diagonal_spectrum(&sp.ops);
                    rep.push(format!("{label}: spectrum = {{αBI}}"), formula, "");
                    let general = kernel_tower_general(&s.shifted_ops(r));
                    rep.push(
                        format!("{label}: μ = Σ dim ker"),
                        sp.mu == sp.tower.kernel_dims().iter().sum::<usize>() && general.mu == sp.mu,
                        format!("μ = {}, dims = {:?}", sp.mu, sp.tower.kernel_dims()),
                    );
                    let supp = complement_kernel_check(&s.shifted_ops(r));
                    rep.push(format!("{label}: supplementary-kernel criterion"), supp.is_ok(), format!("{supp:?}"));
                }
                Err(e) => rep.push(format!("{label}: tower"), false, e.to_string()),
            }
        }
    }
    Ok(rep)
}

fn entry_label(i: usize, ps: &BTreeMap<String, Rational>) -> String {
    let kv: Vec<String> = crate::report::literal_params(ps).iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("Λ{i} {}", kv.join(","))
}

fn random_rational(rng: &mut StdRng) -> Rational {
    rat(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

/// Both minor identities (all tuple lengths) and `det L = D^{n−1}` for random
/// rational matrices, plus linear matrices from random linear forms.
pub fn minors_suite(count: usize, sizes: &[usize]) -> SuiteReport {
    let mut rep = SuiteReport::new("minors");
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    for &n in sizes {
        let mut ok = 0;
        for _ in 0..count {
            let entries = (0..n)
                .map(|_| (0..n).map(|_| HomPoly::constant(n, random_rational(&mut rng))).collect())
                .collect();
            let t = MinorTables::new(PolyMatrix::new(entries));
            if (0..=n).all(|m| t.verify_minor_identity(m)) && t.verify_det() {
                ok += 1;
            }
        }
        rep.push(format!("n={n}: {count} random rational matrices"), ok == count, format!("{ok}/{count}"));
        if n <= 3 {
            let entries = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            HomPoly::from_terms(
                                n,
                                1,
                                (0..n).map(|v| (crate::poly::MultiIndex::unit(n, v), int(rng.gen_range(-3..=3)))),
                            )
                        })
                        .collect()
                })
                .collect();
            let t = MinorTables::new(PolyMatrix::new(entries));
            rep.push(format!("n={n}: random matrix of linear forms"), (0..=n).all(|m| t.verify_minor_identity(m)) && t.verify_det(), "");
        }
    }
    rep
}

fn random_matrix(rng: &mut StdRng, n: usize) -> Matrix<Rational> {
    Matrix::from_rows((0..n).map(|_| (0..n).map(|_| int(rng.gen_range(-3..=3))).collect()).collect())
}

/// The Koszul homotopy identity for random operator pairs (sizes up to
/// `max_dim`), and the Grassmann relations `e i + i e = δ id` for `n ≤ 5`.
pub fn homotopy_suite(count: usize, max_dim: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("homotopy");
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    for t in 0..count {
        let n = rng.gen_range(1..=3);
        let dim = rng.gen_range(1..=max_dim);
        let x = OperatorTuple::unchecked((0..n).map(|_| random_matrix(&mut rng, dim)).collect()).unwrap();
        let y = OperatorTuple::unchecked((0..n).map(|_| random_matrix(&mut rng, dim)).collect()).unwrap();
        rep.push(format!("pair {t} (n={n}, N={dim})"), homotopy_check(&x, &y), "");
    }
    for n in 1..=5 {
        rep.push(format!("Grassmann relations n={n}"), GrassmannBasis::new(n).check_anticommutation::<Rational>(), "");
    }
    rep
}

/// Two parameter choices per class.
pub fn classification_params() -> Vec<(usize, BTreeMap<String, Rational>)> {
    vec![
        (1, params([("a", int(1)), ("b", int(2)), ("c", int(3))])),
        (1, params([("a", rat(-1, 2)), ("b", int(0)), ("c", int(5))])),
        (2, params([("a", int(1)), ("b", int(0))])),
        (2, params([("a", rat(2, 3)), ("b", int(-1))])),
        (3, params([("a", int(1))])),
        (3, params([("a", int(0))])),
        (4, params([("a", int(1)), ("b", int(1))])),
        (4, params([("a", int(0)), ("b", int(2))])),
        (5, params([("a", int(1))])),
        (5, params([("a", rat(1, 3))])),
        (6, params([("a", int(1))])),
        (6, params([("a", int(-2))])),
        (7, params([("a", int(1)), ("b", int(1)), ("c", int(1))])),
        (7, params([("a", int(0)), ("b", int(2)), ("c", rat(-1, 2))])),
        (8, params([("a", int(1)), ("b", int(0)), ("s", int(1))])),
        (8, params([("a", int(0)), ("b", int(2)), ("s", int(-1))])),
        (9, params([("a", int(1))])),
        (9, params([("a", rat(-2, 5))])),
        (10, params([("a", int(1))])),
        (10, params([("a", int(0))])),
        (11, params([("b", int(1)), ("c", int(1))])),
        (11, params([("b", rat(1, 2)), ("c", int(-3))])),
        (12, params([("b", int(1)), ("c", int(1))])),
        (12, params([("b", int(2)), ("c", rat(1, 2))])),
        (13, params([("a", int(1)), ("b", int(1)), ("c", int(1))])),
        (13, params([("a", int(2)), ("b", int(0)), ("c", int(-1))])),
    ]
}

/// Expected stabilizer dimensions where the classification prints them.
pub fn printed_stabilizer_dim(index: usize) -> Option<usize> {
    match index {
        4 | 8 | 10 => Some(2),
        11..=13 => Some(3),
        _ => None,
    }
}

/// The quadratic twist `(y² − 2xz) ∂23` of Λ₁₀ and its printed curl.
pub fn lambda10_twist_curl() -> (MultiVec<Rational>, MultiVec<Rational>) {
    let x = |i: usize| HomPoly::<Rational>::var(3, i);
    let f = &(&x(1) * &x(1)) - &(&x(0) * &x(2)).scale(&int(2));
    let twist = MultiVec::term(&[1, 2], f);
    let expect = MultiVec::term(&[1], x(0).scale(&int(-2))).add(&MultiVec::term(&[2], x(1).scale(&int(-2))));
    (twist, expect)
}

/// Every catalog entry at two parameter choices: the fatal checks of
/// `DhcEntry::verify` (Poisson, exact decomposition, compatible Poisson
/// twist, certificate), then the printed stabilizer dimension and spans.
pub fn classification_suite() -> Result<SuiteReport, Error> {
    let mut rep = SuiteReport::new("classification");
    for (i, ps) in classification_params() {
        let label = entry_label(i, &ps);
        match dhc_catalog(i, &ps) {
            Ok(e) => {
                rep.push(format!("{label}: Poisson, decomposition, twist"), true, "");
                let pc = e.printed_checks();
                if let Some(d) = printed_stabilizer_dim(i) {
                    rep.push(format!("{label}: dim 𝔤_Λ = {d}"), pc.stabilizer_dim == d, format!("computed {}", pc.stabilizer_dim));
                }
                if let Some(m) = pc.stabilizer_matches {
                    rep.push(format!("{label}: printed stabilizer span"), m, "");
                }
                if let Some(m) = pc.j2_matches {
                    rep.push(format!("{label}: printed J² span"), m, "");
                }
            }
            Err(err) => rep.push(format!("{label}: entry"), false, err.to_string()),
        }
    }
    let (twist, expect) = lambda10_twist_curl();
    rep.push("curl of the Λ10 twist = −2x∂2 − 2y∂3", twist.curl() == expect, "");
    Ok(rep)
}

/// `∂_Λ² = 0` on every catalog structure for cochains of coefficient degree
/// `d ≤ 3`.
pub fn coboundary_squares_to_zero(lambda: &MultiVec<Rational>, d_max: usize) -> bool {
    let n = lambda.n();
    (0..n.saturating_sub(1)).all(|p| (0..=d_max).all(|d| bracket_matrix(lambda, p + 1, d + 1).mul(&bracket_matrix(lambda, p, d)).is_zero()))
}

/// Exact-sequence bookkeeping for Λ₃ and Λ₉ (a = 1) at every `r ≤ r_max`,
/// complement independence for Λ₃ at `r ≤ 6`, and `∂_Λ² = 0` on the catalog.
pub fn les_suite(r_max: usize) -> Result<SuiteReport, Error> {
    let mut rep = SuiteReport::new("les");
    for i in [3usize, 9] {
        let e = Engine::new(dhc_catalog(i, &params([("a", int(1))]))?.certificate.expect("SRMI class"));
        for r in 0..=r_max {
            let a = e.slice(r, ComplementOrder::Forward)?;
            rep.push(format!("Λ{i} r={r}: exactness ranks"), a.les_exact, "");
            rep.push(format!("Λ{i} r={r}: alternating sum"), a.alternating_zero, "");
            rep.push(format!("Λ{i} r={r}: sub-complex"), a.subcomplex, "");
            rep.push(format!("Λ{i} r={r}: assemble = direct"), a.assemble_matches(), format!("{:?} vs {:?}", a.assembled, a.dim_r));
            if i == 3 && r <= 6 {
                let b = e.slice(r, ComplementOrder::Reversed)?;
                rep.push(format!("Λ3 r={r}: 𝓢-dims independent of complement"), a.dim_s == b.dim_s, "");
            }
        }
    }
    for i in 1..=CATALOG_SIZE {
        let e = dhc_catalog(i, &BTreeMap::new())?;
        rep.push(format!("Λ{i}: ∂_Λ² = 0 (d ≤ 3)"), coboundary_squares_to_zero(&e.lambda, 3), "");
    }
    Ok(rep)
}
