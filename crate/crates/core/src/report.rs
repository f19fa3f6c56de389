//! Machine-readable reports. All orders are fixed (by bidegree, then by
//! basis order), so reports are byte-deterministic for a given input.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cohomology::{p_degree, r_cohomology_direct, ComplementOrder, Engine};
use crate::error::Error;
use crate::frame::SrmiStructure;
use crate::linalg::Matrix;
use crate::multivector::MultiVec;
use crate::scalar::{Rational, Scalar};
use crate::spectrum::{complement_kernel_check, diagonal_spectrum, joint_spectrum, k_r, spectrum_formula};

#[derive(Clone, Debug, Serialize)]
pub struct SliceChecks {
    pub les: bool,
    pub assemble: bool,
    pub subcomplex: bool,
    pub complement_independent: bool,
}

/// One 𝓟-bidegree `(p, r)`.
#[derive(Clone, Debug, Serialize)]
pub struct SliceReport {
    pub p: usize,
    pub r: usize,
    /// Coefficient degree of the 𝓡-slice, `d = r − n + p`, when nonnegative.
    pub d: Option<usize>,
    #[serde(rename = "dim_R")]
    pub dim_r: usize,
    #[serde(rename = "dim_P")]
    pub dim_p: usize,
    #[serde(rename = "dim_S")]
    pub dim_s: usize,
    pub rank_i: usize,
    pub rank_p_s: usize,
    pub rank_phi: usize,
    #[serde(rename = "reps_R")]
    pub reps_r: Vec<MultiVec<Rational>>,
    pub checks: SliceChecks,
}

/// `LH^{p,d}(𝓡)` by wedge and coefficient degree, from the direct path.
#[derive(Clone, Debug, Serialize)]
pub struct RealEntry {
    pub p: usize,
    pub d: usize,
    pub dim: usize,
    pub reps: Vec<MultiVec<Rational>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CohomologyReport {
    pub structure: String,
    pub params: BTreeMap<String, String>,
    pub r_max: usize,
    pub slices: Vec<SliceReport>,
    pub real_table: Vec<RealEntry>,
}

impl CohomologyReport {
    pub fn all_checks_pass(&self) -> bool {
        self.slices.iter().all(|s| s.checks.les && s.checks.assemble && s.checks.subcomplex && s.checks.complement_independent)
    }

    /// `dim LH^{p,d}(𝓡)` from the real table.
    pub fn real_dim(&self, p: usize, d: usize) -> Option<usize> {
        self.real_table.iter().find(|e| e.p == p && e.d == d).map(|e| e.dim)
    }
}

pub fn literal_params(params: &BTreeMap<String, Rational>) -> BTreeMap<String, String> {
    params.iter().map(|(k, v)| (k.clone(), v.to_literal())).collect()
}

/// Direct 𝓡-cohomology for every `p` and every `d ≤ d_max`.
pub fn real_table(lambda: &MultiVec<Rational>, d_max: usize) -> Vec<RealEntry> {
    let n = lambda.n();
    let mut out = Vec::new();
    for p in 0..=n {
        for d in 0..=d_max {
            let c = r_cohomology_direct(lambda, p, d);
            out.push(RealEntry { p, d, dim: c.dim, reps: c.reps });
        }
    }
    out
}

/// Full report: the exact-sequence slices for `r ≤ r_max` (SRMI structures
/// only) and the direct real table for `d ≤ r_max`.
pub fn cohomology_report(
    label: &str,
    params: &BTreeMap<String, Rational>,
    lambda: &MultiVec<Rational>,
    srmi: Option<&SrmiStructure<Rational>>,
    r_max: usize,
) -> Result<CohomologyReport, Error> {
    let n = lambda.n();
    let mut slices = Vec::new();
    if let Some(s) = srmi {
        let engine = Engine::new(s.clone());
        for r in 0..=r_max {
            let a = engine.slice(r, ComplementOrder::Forward)?;
            let b = engine.slice(r, ComplementOrder::Reversed)?;
            for p in 0..=n {
                slices.push(SliceReport {
                    p,
                    r,
                    d: crate::cohomology::r_degree(n, p, r),
                    dim_r: a.dim_r[p],
                    dim_p: a.dim_p[p],
                    dim_s: a.dim_s[p],
                    rank_i: a.rank_i[p],
                    rank_p_s: a.rank_ps[p],
                    rank_phi: a.rank_phi[p],
                    reps_r: a.reps_r[p].clone(),
                    checks: SliceChecks {
                        les: a.les_exact && a.alternating_zero,
                        assemble: a.assembled[p] == a.dim_r[p],
                        subcomplex: a.subcomplex,
                        complement_independent: a.dim_s == b.dim_s,
                    },
                });
            }
        }
        // the slice path and the direct path must agree wherever both exist
        for sl in &slices {
            if let Some(d) = sl.d {
                let direct = r_cohomology_direct(lambda, sl.p, d).dim;
                if direct != sl.dim_r {
                    return Err(Error::ExactnessViolation(format!(
                        "direct dim {direct} vs slice dim {} at (p, d) = ({}, {d})",
                        sl.dim_r, sl.p
                    )));
                }
                debug_assert_eq!(p_degree(n, sl.p, d), sl.r);
            }
        }
    }
    Ok(CohomologyReport {
        structure: label.to_string(),
        params: literal_params(params),
        r_max,
        slices,
        real_table: real_table(lambda, r_max),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumPoint {
    pub point: Vec<String>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumJson {
    pub structure: String,
    pub params: BTreeMap<String, String>,
    pub r: usize,
    pub u: Vec<Vec<String>>,
    pub b: Vec<Vec<Vec<String>>>,
    pub spectrum: Vec<SpectrumPoint>,
    pub formula_matches: bool,
    pub k_r: Vec<Vec<i64>>,
    pub mu: usize,
    pub s: usize,
    pub kernel_dims: Vec<usize>,
    /// Kernel lines in canonical coordinates, level by level.
    pub kernel_lines: Vec<Vec<BTreeMap<String, String>>>,
    pub supplementary_kernels: bool,
}

fn matrix_literal<S: Scalar>(m: &Matrix<S>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(Scalar::to_literal).collect()).collect()
}

pub fn spectrum_report(
    label: &str,
    params: &BTreeMap<String, Rational>,
    s: &SrmiStructure<Rational>,
    r: usize,
) -> Result<SpectrumJson, Error> {
    let rep = joint_spectrum(s, r)?;
    let tri = &rep.triangularization;
    let formula_matches = spectrum_formula(s, tri, r) == diagonal_spectrum(&rep.ops);
    let supplementary_kernels = complement_kernel_check(&s.shifted_ops(r))?;
    Ok(SpectrumJson {
        structure: label.to_string(),
        params: literal_params(params),
        r,
        u: matrix_literal(&tri.u),
        b: tri.b.iter().map(matrix_literal).collect(),
        spectrum: rep
            .spectrum
            .iter()
            .map(|(pt, m)| SpectrumPoint { point: pt.iter().map(Scalar::to_literal).collect(), multiplicity: *m })
            .collect(),
        formula_matches,
        k_r: k_r(s, tri, r),
        mu: rep.mu,
        s: rep.s(),
        kernel_dims: rep.tower.kernel_dims(),
        kernel_lines: rep.kernel_polys(s.n()).iter().map(|lv| lv.iter().map(|p| p.to_literal()).collect()).collect(),
        supplementary_kernels,
    })
}
