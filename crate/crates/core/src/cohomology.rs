//! Poisson cohomology of SRMI structures: the real cochains 𝓡 (∂-frame), the
//! potential cochains 𝓟 (numerators over `D` in the Y-frame), a complement 𝓢,
//! the long exact sequence tying them together, and the direct 𝓡 oracle.
//!
//! An 𝓡-cochain of wedge degree `p` and coefficient degree `d` sits at
//! 𝓟-bidegree `(p, r)` with `r = d + n − p`. 𝓟-coordinates use the Koszul
//! tensor order `tuple_index * dim E_r + monomial_index`.

use rayon::prelude::*;

use crate::error::Error;
use crate::frame::{j_field, stabilizer, SrmiStructure};
use crate::grassmann::tuples;
use crate::koszul::{KoszulCohomology, OperatorTuple};
use crate::linalg::{extend_independent, span_rank, Matrix};
use crate::multivector::{bracket_matrix, MultiVec, MultiVecBasis};
use crate::poly::{divides, HomPoly, MonomialBasis};
use crate::scalar::Scalar;

/// `D^{-1} Σ_𝐤 P^𝐤 Y_𝐤` with numerators of degree `r`, indexed by the
/// increasing `p`-tuples in lexicographic order.
#[derive(Clone, Debug, PartialEq)]
pub struct PCochain<S: Scalar> {
    pub p: usize,
    pub r: usize,
    pub numerators: Vec<HomPoly<S>>,
}

impl<S: Scalar> PCochain<S> {
    pub fn zero(n: usize, p: usize, r: usize) -> Self {
        PCochain { p, r, numerators: vec![HomPoly::zero(n, r); tuples(n, p).len()] }
    }

    pub fn is_zero(&self) -> bool {
        self.numerators.iter().all(HomPoly::is_zero)
    }

    pub fn coords(&self, n: usize) -> Vec<S> {
        let basis = MonomialBasis::new(n, self.r);
        self.numerators.iter().flat_map(|f| f.coords(&basis)).collect()
    }

    pub fn from_coords(n: usize, p: usize, r: usize, v: &[S]) -> Self {
        let basis = MonomialBasis::new(n, r);
        let numerators = v.chunks(basis.len().max(1)).take(tuples(n, p).len()).map(|c| HomPoly::from_coords(&basis, c)).collect();
        let mut out = PCochain { p, r, numerators };
        if basis.is_empty() {
            out = PCochain::zero(n, p, r);
        }
        out
    }
}

/// `r = d + n − p`.
pub fn p_degree(n: usize, p: usize, d: usize) -> usize {
    d + n - p
}

/// Coefficient degree `d = r − n + p` of the 𝓡-slice at `(p, r)`, if any.
pub fn r_degree(n: usize, p: usize, r: usize) -> Option<usize> {
    (r + p).checked_sub(n)
}

/// An SRMI structure with its minor tables arranged for the 𝓡 ↪ 𝓟 embedding.
pub struct Engine<S: Scalar> {
    s: SrmiStructure<S>,
    n: usize,
    tuples: Vec<Vec<Vec<usize>>>,
    // fwd[p][k][i] = (−1)^{|𝐢|+|𝐤|} · minor of ℓ without rows 𝐤 and columns 𝐢
    fwd: Vec<Vec<Vec<HomPoly<S>>>>,
    // back[p][k][i] = minor of ℓ on rows 𝐤 and columns 𝐢
    back: Vec<Vec<Vec<HomPoly<S>>>>,
}

impl<S: Scalar> Engine<S> {
    pub fn new(s: SrmiStructure<S>) -> Self {
        let n = s.n();
        let ell = &s.frame().minors().ell;
        let tuples: Vec<Vec<Vec<usize>>> = (0..=n).map(|p| tuples(n, p)).collect();
        let (fwd, back) = (0..=n)
            .map(|p| {
                let ts = &tuples[p];
                let fwd = ts
                    .iter()
                    .map(|k| {
                        ts.iter()
                            .map(|i| {
                                let m = ell.complementary_minor(k, i);
                                let sign: usize = k.iter().sum::<usize>() + i.iter().sum::<usize>();
                                if sign.is_multiple_of(2) {
                                    m
                                } else {
                                    -&m
                                }
                            })
                            .collect()
                    })
                    .collect();
                let back = ts.iter().map(|k| ts.iter().map(|i| ell.minor(k, i)).collect()).collect();
                (fwd, back)
            })
            .unzip();
        Engine { s, n, tuples, fwd, back }
    }

    pub fn structure(&self) -> &SrmiStructure<S> {
        &self.s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &MultiVec<S> {
        self.s.lambda()
    }

    /// Dimension of `𝓟^{pr} = E_r ⊗ ∧^p`.
    pub fn p_dim(&self, p: usize, r: usize) -> usize {
        self.tuples[p].len() * MonomialBasis::new(self.n, r).len()
    }

    /// Dimension of `𝓡^{pr}`.
    pub fn r_dim(&self, p: usize, r: usize) -> usize {
        r_degree(self.n, p, r).map_or(0, |d| MultiVecBasis::new(self.n, p, d).len())
    }

    /// `C = Σ ς^𝐢 ∂_𝐢 ↦ D^{-1} Σ_𝐤 (Σ_𝐢 (−1)^{|𝐢|+|𝐤|} L_{𝐤𝐢} ς^𝐢) Y_𝐤`.
    pub fn inject(&self, c: &MultiVec<S>) -> PCochain<S> {
        let p = c.p();
        let r = p_degree(self.n, p, c.degree());
        let ts = &self.tuples[p];
        let numerators = (0..ts.len())
            .map(|k| {
                let mut acc = HomPoly::zero(self.n, r);
                for (i, t) in ts.iter().enumerate() {
                    let s = c.coeff(t);
                    if !s.is_zero() {
                        acc = &acc + &(&self.fwd[p][k][i] * &s);
                    }
                }
                acc
            })
            .collect();
        PCochain { p, r, numerators }
    }

    /// Whether every `Σ_𝐤 L^{𝐤𝐢} P^𝐤` is divisible by `D`; the quotients are
    /// the ∂-frame coefficients of the real cochain.
    pub fn is_real(&self, c: &PCochain<S>) -> Option<MultiVec<S>> {
        let p = c.p;
        let d = r_degree(self.n, p, c.r)?;
        let ts = &self.tuples[p];
        let mut out = MultiVec::zero(self.n, p, d);
        for (i, t) in ts.iter().enumerate() {
            let mut acc = HomPoly::zero(self.n, c.r + p);
            for (k, f) in c.numerators.iter().enumerate() {
                if !f.is_zero() {
                    acc = &acc + &(&self.back[p][k][i] * f);
                }
            }
            let q = divides(self.s.frame().d(), &acc).ok()?;
            out = out.add(&MultiVec::term(t, q.with_degree(d)));
        }
        Some(out)
    }

    /// `Σ_𝐤 P^𝐤 Y_𝐤` expanded in the ∂-frame (`D` times the cochain).
    pub fn expand(&self, c: &PCochain<S>) -> MultiVec<S> {
        let mut out = MultiVec::zero(self.n, c.p, c.r + c.p);
        for (k, f) in c.numerators.iter().enumerate() {
            if !f.is_zero() {
                out = out.add(&self.s.frame().wedge_fields(&self.tuples[c.p][k]).mul_poly(f));
            }
        }
        out
    }

    pub fn koszul(&self, r: usize) -> OperatorTuple<S> {
        OperatorTuple::unchecked(self.s.shifted_ops(r)).expect("operators share E_r")
    }

    /// `Σ_{𝐤,i} (X_i − δ_i)(P^𝐤) Y_i ∧ Y_𝐤`.
    pub fn p_coboundary(&self, c: &PCochain<S>) -> PCochain<S> {
        if c.p >= self.n {
            return PCochain::zero(self.n, self.n, c.r);
        }
        let v = self.koszul(c.r).cochain_matrix(c.p).mul_vec(&c.coords(self.n));
        PCochain::from_coords(self.n, c.p + 1, c.r, &v)
    }

    /// Matrix of the injection `𝓡^{pr} → 𝓟^{pr}` on the monomial basis.
    pub fn injection_matrix(&self, p: usize, r: usize) -> Matrix<S> {
        let len = self.p_dim(p, r);
        let Some(d) = r_degree(self.n, p, r) else {
            return Matrix::zeros(len, 0);
        };
        let basis = MultiVecBasis::new(self.n, p, d);
        let cols: Vec<Vec<S>> = (0..basis.len()).into_par_iter().map(|i| self.inject(&basis.element(i)).coords(self.n)).collect();
        Matrix::from_cols(len, &cols)
    }

    /// Koszul cohomology of `X⃗_δ` on `E_r`, i.e. the 𝓟-cohomology at every
    /// `p` for this `r`.
    pub fn p_cohomology(&self, r: usize) -> KoszulCohomology<S> {
        self.koszul(r).cohomology()
    }

    /// Choice of complement `𝓢^{pr}` of `i(𝓡^{pr})` spanned by coordinate vectors.
    pub fn complement(&self, p: usize, r: usize, order: ComplementOrder) -> Complement<S> {
        Complement::new(self.injection_matrix(p, r), order)
    }

    /// The three complexes and the long exact sequence at fixed `r`.
    pub fn slice(&self, r: usize, order: ComplementOrder) -> Result<RSlice<S>, Error> {
        compute_slice(self, r, order)
    }
}

/// Coordinate order in which complement pivots are chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplementOrder {
    Forward,
    Reversed,
}

/// `𝓟^{pr} = i(𝓡^{pr}) ⊕ 𝓢^{pr}`, with `𝓢^{pr}` spanned by the coordinates
/// not used as pivots of the injected real basis.
#[derive(Clone, Debug)]
pub struct Complement<S: Scalar> {
    inj: Matrix<S>,
    pivots: Vec<usize>,
    free: Vec<usize>,
    pivot_inv: Matrix<S>,
}

impl<S: Scalar> Complement<S> {
    pub fn new(inj: Matrix<S>, order: ComplementOrder) -> Self {
        let len = inj.rows();
        let perm: Vec<usize> = match order {
            ComplementOrder::Forward => (0..len).collect(),
            ComplementOrder::Reversed => (0..len).rev().collect(),
        };
        let all_cols: Vec<usize> = (0..inj.cols()).collect();
        let rref = inj.submatrix(&perm, &all_cols).transpose().rref();
        let mut pivots: Vec<usize> = rref.pivots.iter().map(|&c| perm[c]).collect();
        pivots.sort_unstable();
        assert_eq!(pivots.len(), inj.cols(), "injection must be injective");
        let free = (0..len).filter(|i| !pivots.contains(i)).collect();
        let pivot_inv = inj.submatrix(&pivots, &all_cols).inverse().expect("pivot block is invertible");
        Complement { inj, pivots, free, pivot_inv }
    }

    pub fn dim_r(&self) -> usize {
        self.pivots.len()
    }

    pub fn dim_s(&self) -> usize {
        self.free.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn free(&self) -> &[usize] {
        &self.free
    }

    /// 𝓡-coordinates of the 𝓡-component of `v`.
    pub fn project_r(&self, v: &[S]) -> Vec<S> {
        let vp: Vec<S> = self.pivots.iter().map(|&i| v[i].clone()).collect();
        self.pivot_inv.mul_vec(&vp)
    }

    /// 𝓢-coordinates of the 𝓢-component of `v`.
    pub fn project_s(&self, v: &[S]) -> Vec<S> {
        let c = self.project_r(v);
        let rv = self.inj.mul_vec(&c);
        self.free.iter().map(|&i| v[i].clone() - rv[i].clone()).collect()
    }

    /// 𝓟-vector of an 𝓢-coordinate vector.
    pub fn embed_s(&self, s: &[S]) -> Vec<S> {
        let mut v = vec![S::zero(); self.inj.rows()];
        for (&i, x) in self.free.iter().zip(s) {
            v[i] = x.clone();
        }
        v
    }
}

/// Cohomology of a finite complex at one spot: cocycles of `next`, modulo
/// the image of `prev`.
#[derive(Clone, Debug)]
struct Spot<S: Scalar> {
    len: usize,
    cocycles: Vec<Vec<S>>,
    boundaries: Vec<Vec<S>>,
    boundary_rank: usize,
}

impl<S: Scalar> Spot<S> {
    fn new(len: usize, prev: Option<&Matrix<S>>, next: Option<&Matrix<S>>) -> Self {
        let cocycles = match next {
            Some(m) if m.rows() > 0 => m.kernel(),
            _ => identity_vectors(len),
        };
        let boundaries = prev.map_or_else(Vec::new, Matrix::columns);
        let boundary_rank = span_rank(len, &boundaries);
        Spot { len, cocycles, boundaries, boundary_rank }
    }

    fn dim(&self) -> usize {
        self.cocycles.len() - self.boundary_rank
    }

    fn reps(&self) -> Vec<Vec<S>> {
        extend_independent(self.len, &self.boundaries, &self.cocycles)
    }

    /// Rank of the map induced on cohomology by `f` into this spot.
    fn induced_rank(&self, images: &[Vec<S>]) -> usize {
        let mut all = self.boundaries.clone();
        all.extend_from_slice(images);
        span_rank(self.len, &all) - self.boundary_rank
    }
}

fn identity_vectors<S: Scalar>(len: usize) -> Vec<Vec<S>> {
    (0..len).map(|i| (0..len).map(|j| if i == j { S::one() } else { S::zero() }).collect()).collect()
}

/// Dimensions and maps of the three complexes at fixed `r`, indexed by `p`.
#[derive(Clone, Debug)]
pub struct RSlice<S: Scalar> {
    pub r: usize,
    pub dim_r: Vec<usize>,
    pub dim_p: Vec<usize>,
    pub dim_s: Vec<usize>,
    /// Ranks of `i♯^p`, `(p_𝓢)♯^p` and `φ♯^p: LH^{pr}(𝓢) → LH^{p+1,r}(𝓡)`.
    pub rank_i: Vec<usize>,
    pub rank_ps: Vec<usize>,
    pub rank_phi: Vec<usize>,
    /// `dim LH^{pr}(𝓡)` from the exactness bookkeeping.
    pub assembled: Vec<usize>,
    /// 𝓡-cohomology representatives (∂-frame), direct computation.
    pub reps_r: Vec<Vec<MultiVec<S>>>,
    /// 𝓟-cohomology representatives.
    pub reps_p: Vec<Vec<PCochain<S>>>,
    /// The LES is exact at every spot.
    pub les_exact: bool,
    /// Alternating sum of `dim 𝓡 − dim 𝓟 + dim 𝓢` vanishes.
    pub alternating_zero: bool,
    /// `i ∘ ∂_Λ = 𝒦 ∘ i` on every 𝓡-slice.
    pub subcomplex: bool,
}

impl<S: Scalar> RSlice<S> {
    pub fn assemble_matches(&self) -> bool {
        self.assembled == self.dim_r
    }

    pub fn checks_pass(&self) -> bool {
        self.les_exact && self.alternating_zero && self.subcomplex && self.assemble_matches()
    }
}

/// Matrix of `∂_Λ` from `𝓡^{pr}` to `𝓡^{p+1,r}`.
fn r_differential<S: Scalar>(e: &Engine<S>, p: usize, r: usize) -> Matrix<S> {
    let rows = e.r_dim(p + 1, r);
    match r_degree(e.n, p, r) {
        Some(d) => bracket_matrix(e.lambda(), p, d),
        None => Matrix::zeros(rows, 0),
    }
}

fn compute_slice<S: Scalar>(e: &Engine<S>, r: usize, order: ComplementOrder) -> Result<RSlice<S>, Error> {
    let n = e.n;
    let kosz = e.koszul(r);
    let ps: Vec<usize> = (0..=n).collect();
    let inj: Vec<Matrix<S>> = ps.par_iter().map(|&p| e.injection_matrix(p, r)).collect();
    let comps: Vec<Complement<S>> = inj.iter().map(|j| Complement::new(j.clone(), order)).collect();
    let kmat: Vec<Matrix<S>> = ps.par_iter().map(|&p| kosz.cochain_matrix(p)).collect();
    let rmat: Vec<Matrix<S>> = ps.par_iter().map(|&p| r_differential(e, p, r)).collect();

    // ∂̃ = p_𝓢 ∘ 𝒦 on 𝓢 and φ = p_𝓡 ∘ 𝒦 from 𝓢
    let (smat, phimat): (Vec<Matrix<S>>, Vec<Matrix<S>>) = ps
        .par_iter()
        .map(|&p| {
            let src = &comps[p];
            let imgs: Vec<Vec<S>> = src
                .free()
                .iter()
                .map(|&i| {
                    let mut v = vec![S::zero(); kmat[p].cols()];
                    v[i] = S::one();
                    kmat[p].mul_vec(&v)
                })
                .collect();
            if p == n {
                return (Matrix::zeros(0, src.dim_s()), Matrix::zeros(0, src.dim_s()));
            }
            let tgt = &comps[p + 1];
            let s_cols: Vec<Vec<S>> = imgs.iter().map(|v| tgt.project_s(v)).collect();
            let r_cols: Vec<Vec<S>> = imgs.iter().map(|v| tgt.project_r(v)).collect();
            (Matrix::from_cols(tgt.dim_s(), &s_cols), Matrix::from_cols(tgt.dim_r(), &r_cols))
        })
        .unzip();

    let subcomplex = (0..n).all(|p| kmat[p].mul(&inj[p]) == inj[p + 1].mul(&rmat[p]));

    let spot = |p: usize, mats: &[Matrix<S>], len: usize| -> Spot<S> {
        let prev = if p == 0 { None } else { Some(&mats[p - 1]) };
        let next = if p == n { None } else { Some(&mats[p]) };
        Spot::new(len, prev, next)
    };
    let r_spots: Vec<Spot<S>> = ps.par_iter().map(|&p| spot(p, &rmat, inj[p].cols())).collect();
    let p_spots: Vec<Spot<S>> = ps.par_iter().map(|&p| spot(p, &kmat, inj[p].rows())).collect();
    let s_spots: Vec<Spot<S>> = ps.par_iter().map(|&p| spot(p, &smat, comps[p].dim_s())).collect();

    let rank_i: Vec<usize> = ps
        .iter()
        .map(|&p| {
            let imgs: Vec<Vec<S>> = r_spots[p].cocycles.iter().map(|c| inj[p].mul_vec(c)).collect();
            p_spots[p].induced_rank(&imgs)
        })
        .collect();
    let rank_ps: Vec<usize> = ps
        .iter()
        .map(|&p| {
            let imgs: Vec<Vec<S>> = p_spots[p].cocycles.iter().map(|c| comps[p].project_s(c)).collect();
            s_spots[p].induced_rank(&imgs)
        })
        .collect();
    let rank_phi: Vec<usize> = ps
        .iter()
        .map(|&p| {
            if p == n {
                return 0;
            }
            let imgs: Vec<Vec<S>> = s_spots[p].cocycles.iter().map(|c| phimat[p].mul_vec(c)).collect();
            r_spots[p + 1].induced_rank(&imgs)
        })
        .collect();

    let dim_r: Vec<usize> = r_spots.iter().map(Spot::dim).collect();
    let dim_p: Vec<usize> = p_spots.iter().map(Spot::dim).collect();
    let dim_s: Vec<usize> = s_spots.iter().map(Spot::dim).collect();
    let phi_before = |p: usize| if p == 0 { 0 } else { rank_phi[p - 1] };

    let les_exact = ps.iter().all(|&p| {
        dim_r[p] - rank_i[p] == phi_before(p) && dim_p[p] - rank_ps[p] == rank_i[p] && dim_s[p] - rank_phi[p] == rank_ps[p]
    });
    let alt: i64 = ps
        .iter()
        .map(|&p| {
            let v = dim_r[p] as i64 - dim_p[p] as i64 + dim_s[p] as i64;
            if p % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .sum();
    let assembled: Vec<usize> = ps
        .iter()
        .map(|&p| (phi_before(p) + dim_p[p] + rank_phi[p]) as i64 - dim_s[p] as i64)
        .map(|v| usize::try_from(v).unwrap_or(usize::MAX))
        .collect();

    let reps_r: Vec<Vec<MultiVec<S>>> = ps
        .iter()
        .map(|&p| match r_degree(n, p, r) {
            Some(d) => {
                let basis = MultiVecBasis::new(n, p, d);
                r_spots[p].reps().iter().map(|v| basis.from_coords(v)).collect()
            }
            None => Vec::new(),
        })
        .collect();
    let reps_p: Vec<Vec<PCochain<S>>> =
        ps.iter().map(|&p| p_spots[p].reps().iter().map(|v| PCochain::from_coords(n, p, r, v)).collect()).collect();

    Ok(RSlice {
        r,
        dim_r,
        dim_p,
        dim_s,
        rank_i,
        rank_ps,
        rank_phi,
        assembled,
        reps_r,
        reps_p,
        les_exact,
        alternating_zero: alt == 0,
        subcomplex,
    })
}

/// `dim LH^{p,d}(𝓡)` of the slice with coefficient degree `d`, directly from
/// the LP coboundary, with ∂-frame representatives.
#[derive(Clone, Debug)]
pub struct DirectCohomology<S: Scalar> {
    pub p: usize,
    pub d: usize,
    pub dim: usize,
    pub reps: Vec<MultiVec<S>>,
}

pub fn r_cohomology_direct<S: Scalar>(lambda: &MultiVec<S>, p: usize, d: usize) -> DirectCohomology<S> {
    let n = lambda.n();
    let basis = MultiVecBasis::new(n, p, d);
    let prev = (p > 0 && d > 0).then(|| bracket_matrix(lambda, p - 1, d - 1));
    let next = (p < n).then(|| bracket_matrix(lambda, p, d));
    let spot = Spot::new(basis.len(), prev.as_ref(), next.as_ref());
    let reps = spot.reps().iter().map(|v| basis.from_coords(v)).collect();
    DirectCohomology { p, d, dim: spot.dim(), reps }
}

/// Rank of the span of the classes of the given cocycles in `LH^{p,d}`;
/// fails with `NotACocycle` if one of them is not closed.
pub fn class_rank<S: Scalar>(lambda: &MultiVec<S>, cocycles: &[MultiVec<S>]) -> Result<usize, Error> {
    let Some(first) = cocycles.first() else { return Ok(0) };
    let (n, p, d) = (lambda.n(), first.p(), first.degree());
    let basis = MultiVecBasis::new(n, p, d);
    for c in cocycles {
        if c.p() != p || c.degree() != d {
            return Err(Error::DimensionMismatch("cocycles of different bidegrees".into()));
        }
        if !lambda.schouten(c).is_zero() {
            return Err(Error::NotACocycle);
        }
    }
    let prev = (p > 0 && d > 0).then(|| bracket_matrix(lambda, p - 1, d - 1));
    let spot = Spot::new(basis.len(), prev.as_ref(), None);
    let imgs: Vec<Vec<S>> = cocycles.iter().map(|c| basis.coords(c)).collect();
    Ok(spot.induced_rank(&imgs))
}

/// Casimirs of coefficient degree `d`: `ker ∂_Λ` on functions.
pub fn casimirs<S: Scalar>(lambda: &MultiVec<S>, d: usize) -> Vec<HomPoly<S>> {
    let basis = MonomialBasis::new(lambda.n(), d);
    bracket_matrix(lambda, 0, d).kernel().iter().map(|v| HomPoly::from_coords(&basis, v)).collect()
}

/// A preferred candidate `f · J(a_{j1}) ∧ ... ∧ J(a_{jp})`.
#[derive(Clone, Debug)]
pub struct PreferredClass<S: Scalar> {
    pub casimir: HomPoly<S>,
    pub stabilizer_indices: Vec<usize>,
    pub cochain: MultiVec<S>,
    pub is_cocycle: bool,
    pub nonbounding: bool,
}

/// Candidates `Cas ⊗ ∧^p 𝔤_Λ` of coefficient degree `d`, with their status;
/// also returns the rank of their span in `LH^{p,d}`.
pub fn preferred_classes<S: Scalar>(lambda: &MultiVec<S>, p: usize, d: usize) -> (Vec<PreferredClass<S>>, usize) {
    let n = lambda.n();
    let Some(cas_deg) = d.checked_sub(p) else { return (Vec::new(), 0) };
    let stab = stabilizer(lambda);
    let fields: Vec<MultiVec<S>> = stab.iter().map(j_field).collect();
    let prev = (p > 0 && d > 0).then(|| bracket_matrix(lambda, p - 1, d - 1));
    let basis = MultiVecBasis::new(n, p, d);
    let spot = Spot::new(basis.len(), prev.as_ref(), None);
    let mut out = Vec::new();
    for f in casimirs(lambda, cas_deg) {
        for idx in tuples(fields.len(), p) {
            let w = idx.iter().fold(MultiVec::function(f.clone()), |acc, &j| acc.wedge(&fields[j]));
            if w.is_zero() {
                continue;
            }
            let w = w.with_degree(d);
            let is_cocycle = lambda.schouten(&w).is_zero();
            let nonbounding = is_cocycle && spot.induced_rank(&[basis.coords(&w)]) == 1;
            out.push(PreferredClass { casimir: f.clone(), stabilizer_indices: idx, cochain: w, is_cocycle, nonbounding });
        }
    }
    let cocycles: Vec<Vec<S>> = out.iter().filter(|c| c.is_cocycle).map(|c| basis.coords(&c.cochain)).collect();
    let rank = spot.induced_rank(&cocycles);
    (out, rank)
}

/// Whether every stabilizer field `J a` is a cocycle and the stabilizer injects
/// into `LH^{1,1}`.
pub fn stabilizer_classes_nonbounding<S: Scalar>(lambda: &MultiVec<S>) -> bool {
    let fields: Vec<MultiVec<S>> = stabilizer(lambda).iter().map(j_field).collect();
    match class_rank(lambda, &fields) {
        Ok(rank) => rank == fields.len(),
        Err(_) => false,
    }
}

/// Whether `D^p` is a Casimir for `p = 1..=max_power`.
pub fn d_powers_are_casimirs<S: Scalar>(s: &SrmiStructure<S>, max_power: usize) -> bool {
    let d = s.frame().d();
    (1..=max_power).all(|p| s.lambda().schouten(&MultiVec::function(d.pow(p))).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{dhc_catalog, params};
    use crate::scalar::{int, Rational};

    fn engine(i: usize, ps: std::collections::BTreeMap<String, Rational>) -> Engine<Rational> {
        Engine::new(dhc_catalog(i, &ps).unwrap().certificate.unwrap())
    }

    #[test]
    fn injection_round_trips() {
        let e = engine(3, params([("a", int(1))]));
        let one = MultiVec::function(HomPoly::one(3));
        let c = e.inject(&one);
        assert_eq!(c.numerators[0], e.structure().frame().d().clone());
        assert_eq!(e.is_real(&c), Some(one));
        for p in 0..=3 {
            for el in MultiVecBasis::new(3, p, 1).elements::<Rational>() {
                let c = e.inject(&el);
                assert_eq!(e.expand(&c), el.mul_poly(e.structure().frame().d()));
                assert_eq!(e.is_real(&c), Some(el));
            }
        }
    }

    #[test]
    fn d_is_a_p_cocycle() {
        let e = engine(3, params([("a", int(1))]));
        let c = PCochain { p: 0, r: 3, numerators: vec![e.structure().frame().d().clone()] };
        assert!(e.p_coboundary(&c).is_zero());
    }

    #[test]
    fn slice_checks_for_lambda3() {
        let e = engine(3, params([("a", int(1))]));
        for r in 0..=4 {
            let a = e.slice(r, ComplementOrder::Forward).unwrap();
            let b = e.slice(r, ComplementOrder::Reversed).unwrap();
            assert!(a.checks_pass(), "r = {r}: {a:?}");
            assert_eq!(a.dim_s, b.dim_s);
        }
    }
}
