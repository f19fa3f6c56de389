//! Joint spectra of the operators `X_j − δ_j` over Q(i): simultaneous
//! triangularization of the frame, the induced triangular operators on the
//! monomial basis `𝔷^β`, kernel towers and multiplicities, and reduction of
//! Koszul cocycles onto the tower span.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::frame::SrmiStructure;
use crate::grassmann::binomial;
use crate::koszul::OperatorTuple;
use crate::linalg::{extend_independent, Matrix};
use crate::poly::{HomPoly, MonomialBasis};
use crate::scalar::{Gaussian, Rational, Scalar};

type G = Gaussian;
type GInt = Complex<BigInt>;

// ---------------------------------------------------------------------------
// Roots in Q(i)

fn gnorm(z: &GInt) -> BigInt {
    &z.re * &z.re + &z.im * &z.im
}

fn gdivides(d: &GInt, w: &GInt) -> bool {
    let n = gnorm(d);
    let p = w * d.conj();
    p.re.is_multiple_of(&n) && p.im.is_multiple_of(&n)
}

/// Positive divisors of `n`, by trial division. Fails when `n` does not fit
/// in 128 bits or keeps a cofactor too large to certify as prime.
fn int_divisors(n: &BigInt) -> Result<Vec<u128>, Error> {
    const TRIAL: u128 = 1_000_000;
    let mut m = n.abs().to_u128().ok_or(Error::TriangularizationFailed)?;
    let mut factors: Vec<(u128, u32)> = Vec::new();
    let mut d = 2u128;
    while d <= TRIAL && d * d <= m {
        let mut e = 0;
        while m % d == 0 {
            m /= d;
            e += 1;
        }
        if e > 0 {
            factors.push((d, e));
        }
        d += 1;
    }
    if m > 1 {
        if m > TRIAL * TRIAL {
            return Err(Error::TriangularizationFailed);
        }
        factors.push((m, 1));
    }
    let mut divs = vec![1u128];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for &d in &divs {
            let mut q = d;
            for _ in 0..=e {
                next.push(q);
                q *= p;
            }
        }
        divs = next;
    }
    divs.sort_unstable();
    Ok(divs)
}

/// Gaussian integers `u + v i` with `u > 0, v ≥ 0` and `u² + v² = m` (one per
/// class of associates).
fn two_squares(m: u128) -> Vec<GInt> {
    let mut out = Vec::new();
    let mut u = 1u128;
    while u * u <= m {
        let rest = m - u * u;
        let v = rest.sqrt();
        if v * v == rest {
            out.push(Complex::new(BigInt::from(u), BigInt::from(v)));
        }
        u += 1;
    }
    out
}

/// Divisors of a nonzero Gaussian integer, one per class of associates.
fn gaussian_divisors(w: &GInt) -> Result<Vec<GInt>, Error> {
    let mut out = Vec::new();
    for m in int_divisors(&gnorm(w))? {
        out.extend(two_squares(m).into_iter().filter(|d| gdivides(d, w)));
    }
    Ok(out)
}

fn to_gaussian(z: &GInt) -> G {
    Complex::new(BigRational::from_integer(z.re.clone()), BigRational::from_integer(z.im.clone()))
}

fn eval(coeffs: &[G], t: &G) -> G {
    coeffs.iter().rev().fold(G::zero(), |acc, c| acc * t.clone() + c.clone())
}

fn root_order(a: &G, b: &G) -> std::cmp::Ordering {
    a.re.cmp(&b.re).then_with(|| b.im.cmp(&a.im))
}

/// Distinct roots in Q(i) of the polynomial with the given coefficients
/// (lowest degree first), ordered by ascending real part, then descending
/// imaginary part. Uses the rational root theorem over Z[i].
pub fn gaussian_roots(coeffs: &[G]) -> Result<Vec<G>, Error> {
    let mut c: Vec<G> = coeffs.to_vec();
    while c.len() > 1 && c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    let mut roots = Vec::new();
    if c.len() > 1 && c[0].is_zero() {
        roots.push(G::zero());
        while c[0].is_zero() {
            c.remove(0);
        }
    }
    if c.len() > 1 {
        let mut l = BigInt::one();
        for z in &c {
            l = l.lcm(z.re.denom()).lcm(z.im.denom());
        }
        let scale = BigRational::from_integer(l);
        let ints: Vec<GInt> = c
            .iter()
            .map(|z| Complex::new((&z.re * &scale).to_integer(), (&z.im * &scale).to_integer()))
            .collect();
        let nums = gaussian_divisors(&ints[0])?;
        let dens = gaussian_divisors(ints.last().unwrap())?;
        let units = [
            Complex::new(BigInt::one(), BigInt::zero()),
            Complex::new(BigInt::zero(), BigInt::one()),
            Complex::new(-BigInt::one(), BigInt::zero()),
            Complex::new(BigInt::zero(), -BigInt::one()),
        ];
        for p in &nums {
            for u in &units {
                let num = to_gaussian(&(p * u));
                for q in &dens {
                    let t = num.clone() / to_gaussian(q);
                    if !roots.contains(&t) && eval(&c, &t).is_zero() {
                        roots.push(t);
                    }
                }
            }
        }
    }
    roots.sort_by(root_order);
    Ok(roots)
}

// ---------------------------------------------------------------------------
// Simultaneous triangularization

/// `U` with every `U⁻¹ a_j U` upper-triangular.
#[derive(Clone, Debug)]
pub struct Triangularization {
    pub u: Matrix<G>,
    pub u_inv: Matrix<G>,
    pub b: Vec<Matrix<G>>,
}

impl Triangularization {
    /// `B_{jk} = b_j^{kk}`.
    pub fn diag_matrix(&self) -> Matrix<G> {
        let n = self.b.len();
        Matrix::from_fn(n, self.u.rows(), |j, k| self.b[j][(k, k)].clone())
    }
}

/// Matrix `R` of `A` restricted to the invariant column span of `w`: `A w = w R`.
fn restrict<S: Scalar>(a: &Matrix<S>, w: &Matrix<S>) -> Matrix<S> {
    let aw = a.mul(w);
    let cols: Vec<Vec<S>> = (0..w.cols())
        .map(|j| w.solve(&aw.column(j)).expect("subspace is invariant"))
        .collect();
    Matrix::from_cols(w.cols(), &cols)
}

fn mat_pow<S: Scalar>(a: &Matrix<S>, k: usize) -> Matrix<S> {
    (0..k).fold(Matrix::identity(a.rows()), |acc, _| acc.mul(a))
}

/// Splits the column span of `w` into joint generalized eigenspaces of
/// `mats[k..]`.
fn joint_blocks(mats: &[Matrix<G>], w: Matrix<G>, k: usize, lams: Vec<G>, out: &mut Vec<(Vec<G>, Matrix<G>)>) -> Result<(), Error> {
    if k == mats.len() {
        out.push((lams, w));
        return Ok(());
    }
    let d = w.cols();
    let r = restrict(&mats[k], &w);
    let mut total = 0;
    for lam in gaussian_roots(&r.char_poly())? {
        let ker = mat_pow(&r.shift(&lam), d).kernel();
        total += ker.len();
        let w2 = w.mul(&Matrix::from_cols(d, &ker));
        let mut l2 = lams.clone();
        l2.push(lam);
        joint_blocks(mats, w2, k + 1, l2, out)?;
    }
    if total != d {
        return Err(Error::TriangularizationFailed);
    }
    Ok(())
}

/// Basis of a joint generalized eigenspace adapted to the flag
/// `V_1 ⊂ V_2 ⊂ ...`, `V_{i+1} = {v : (A_k − λ_k) v ∈ V_i ∀k}`.
fn flag_basis(mats: &[Matrix<G>], lams: &[G], w: &Matrix<G>) -> Result<Vec<Vec<G>>, Error> {
    let e = w.cols();
    let nil: Vec<Matrix<G>> = mats.iter().zip(lams).map(|(a, l)| restrict(a, w).shift(l)).collect();
    let mut basis: Vec<Vec<G>> = Vec::new();
    while basis.len() < e {
        let ann = if basis.is_empty() {
            Matrix::identity(e)
        } else {
            Matrix::from_rows(Matrix::from_rows(basis.clone()).kernel())
        };
        let stacked = nil.iter().map(|n| ann.mul(n)).reduce(|acc, m| acc.vstack(&m)).unwrap();
        let fresh = extend_independent(e, &basis, &stacked.kernel());
        if fresh.is_empty() {
            return Err(Error::TriangularizationFailed);
        }
        basis.extend(fresh);
    }
    Ok(basis.iter().map(|v| w.mul_vec(v)).collect())
}

/// Simultaneously triangularizes commuting matrices over Q(i). Already
/// upper-triangular families keep `U = id`; lower-triangular families use
/// the reversal permutation.
pub fn simultaneous_triangularize(mats: &[Matrix<G>]) -> Result<Triangularization, Error> {
    let n = mats.first().map_or(0, Matrix::rows);
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            if !mats[i].commutator(&mats[j]).is_zero() {
                return Err(Error::NonCommuting(i + 1, j + 1));
            }
        }
    }
    let u = if mats.iter().all(Matrix::is_upper_triangular) {
        Matrix::identity(n)
    } else if mats.iter().all(Matrix::is_lower_triangular) {
        Matrix::from_fn(n, n, |i, j| if i + j + 1 == n { G::one() } else { G::zero() })
    } else {
        let mut blocks = Vec::new();
        joint_blocks(mats, Matrix::identity(n), 0, Vec::new(), &mut blocks)?;
        let mut cols = Vec::with_capacity(n);
        for (lams, w) in &blocks {
            cols.extend(flag_basis(mats, lams, w)?);
        }
        Matrix::from_cols(n, &cols)
    };
    let u_inv = u.inverse().ok_or(Error::TriangularizationFailed)?;
    let b: Vec<Matrix<G>> = mats.iter().map(|a| u_inv.mul(a).mul(&u)).collect();
    if !b.iter().all(Matrix::is_upper_triangular) {
        return Err(Error::NotTriangular);
    }
    Ok(Triangularization { u, u_inv, b })
}

pub fn complexify(q: &Rational) -> G {
    G::from_rational(q)
}

/// Triangularization of the frame matrices of an SRMI structure.
pub fn triangularize_frame(s: &SrmiStructure<Rational>) -> Result<Triangularization, Error> {
    let mats: Vec<Matrix<G>> = s.frame().mats().iter().map(|a| a.map(complexify)).collect();
    simultaneous_triangularize(&mats)
}

// ---------------------------------------------------------------------------
// Induced operators and joint spectrum

/// Matrices of `(X_j − δ_j)` on `E_r^C` in the basis `𝔷^β` (ascending lex),
/// built from the triangular data: diagonal `Σ_{k,m} α^{jk} b_k^{mm}(β_m − 1)`,
/// and `Σ_k α^{jk} b_k^{mp} β_m` at `𝔷^{β−e_m+e_p}` for `m < p`.
pub fn induced_triangular_ops(s: &SrmiStructure<Rational>, tri: &Triangularization, r: usize) -> Vec<Matrix<G>> {
    let n = s.n();
    let basis = MonomialBasis::new(n, r);
    let alpha = s.alpha().map(complexify);
    // c_j = Σ_k α^{jk} b_k
    let c: Vec<Matrix<G>> = (0..n)
        .map(|j| (0..n).fold(Matrix::zeros(n, n), |acc, k| acc.add(&tri.b[k].scale(&alpha[(j, k)]))))
        .collect();
    c.iter()
        .map(|cj| {
            let mut t = Matrix::zeros(basis.len(), basis.len());
            for (col, beta) in basis.monomials().iter().enumerate() {
                let mut diag = G::zero();
                for m in 0..n {
                    diag += cj[(m, m)].clone() * G::from_i64(beta.get(m) as i64 - 1);
                }
                t[(col, col)] = diag;
                for m in 0..n {
                    if beta.get(m) == 0 {
                        continue;
                    }
                    for p in m + 1..n {
                        let v = &cj[(m, p)];
                        if v.is_zero() {
                            continue;
                        }
                        let row = basis.position(&beta.shifted(m, p)).unwrap();
                        t[(row, col)] = t[(row, col)].clone() + v.clone() * G::from_i64(beta.get(m) as i64);
                    }
                }
            }
            t
        })
        .collect()
}

/// The same matrices by conjugating the action on canonical monomials:
/// `𝔷^β ↦ P(x) = 𝔷^β(U⁻¹x)`, apply `X_j − δ_j`, substitute back `x = U𝔷`.
pub fn induced_ops_by_substitution(s: &SrmiStructure<Rational>, tri: &Triangularization, r: usize) -> Vec<Matrix<G>> {
    let n = s.n();
    let basis = MonomialBasis::new(n, r);
    let xs: Vec<Matrix<G>> = s.x().iter().map(|m| m.map(complexify)).collect();
    let deltas: Vec<G> = s.delta().iter().map(complexify).collect();
    xs.iter()
        .zip(&deltas)
        .map(|(x, d)| {
            let cols: Vec<Vec<G>> = basis
                .monomials()
                .iter()
                .map(|beta| {
                    let p = HomPoly::monomial(beta.clone(), G::one()).substitute_linear(&tri.u_inv);
                    let mut img = p.apply_linvf(x);
                    img.add_scaled(&p, &-d.clone());
                    img.substitute_linear(&tri.u).coords(&basis)
                })
                .collect();
            Matrix::from_cols(basis.len(), &cols)
        })
        .collect()
}

/// Diagonal `n`-tuples of triangular operators, with multiplicities.
pub fn diagonal_spectrum(ops: &[Matrix<G>]) -> BTreeMap<Vec<String>, (Vec<G>, usize)> {
    let len = ops.first().map_or(0, Matrix::rows);
    let mut out: BTreeMap<Vec<String>, (Vec<G>, usize)> = BTreeMap::new();
    for q in 0..len {
        let point: Vec<G> = ops.iter().map(|t| t[(q, q)].clone()).collect();
        let key = point.iter().map(Scalar::to_literal).collect();
        out.entry(key).or_insert((point, 0)).1 += 1;
    }
    out
}

/// `{αBI : I ∈ (N ∪ {−1})^n, |I| = r − n}` with multiplicities counted over
/// the index vectors `I = β − 1`.
pub fn spectrum_formula(s: &SrmiStructure<Rational>, tri: &Triangularization, r: usize) -> BTreeMap<Vec<String>, (Vec<G>, usize)> {
    let n = s.n();
    let ab = s.alpha().map(complexify).mul(&tri.diag_matrix());
    let mut out: BTreeMap<Vec<String>, (Vec<G>, usize)> = BTreeMap::new();
    for beta in MonomialBasis::new(n, r).monomials() {
        let i: Vec<G> = (0..n).map(|m| G::from_i64(beta.get(m) as i64 - 1)).collect();
        let point = ab.mul_vec(&i);
        let key = point.iter().map(Scalar::to_literal).collect();
        out.entry(key).or_insert((point, 0)).1 += 1;
    }
    out
}

/// `K_r = {I ∈ ker(αB) : I ∈ (N ∪ {−1})^n, |I| = r − n}`.
pub fn k_r(s: &SrmiStructure<Rational>, tri: &Triangularization, r: usize) -> Vec<Vec<i64>> {
    let n = s.n();
    let ab = s.alpha().map(complexify).mul(&tri.diag_matrix());
    MonomialBasis::new(n, r)
        .monomials()
        .iter()
        .map(|beta| (0..n).map(|m| beta.get(m) as i64 - 1).collect::<Vec<i64>>())
        .filter(|i| ab.mul_vec(&i.iter().map(|&v| G::from_i64(v)).collect::<Vec<_>>()).iter().all(Zero::is_zero))
        .collect()
}

/// Joint-spectrum diagnostics at degree `r`.
#[derive(Clone, Debug)]
pub struct SpectrumReport {
    pub r: usize,
    pub triangularization: Triangularization,
    pub ops: Vec<Matrix<G>>,
    pub spectrum: Vec<(Vec<G>, usize)>,
    pub mu: usize,
    pub tower: KernelTower<G>,
}

impl SpectrumReport {
    pub fn s(&self) -> usize {
        self.tower.s()
    }

    /// Kernel lines of the tower, as polynomials in the canonical coordinates.
    pub fn kernel_polys(&self, n: usize) -> Vec<Vec<HomPoly<G>>> {
        let basis = MonomialBasis::new(n, self.r);
        self.tower
            .kernels
            .iter()
            .map(|level| {
                level
                    .iter()
                    .map(|v| HomPoly::from_coords(&basis, v).substitute_linear(&self.triangularization.u_inv))
                    .collect()
            })
            .collect()
    }
}

/// Triangularizes the frame, builds the induced operators from the triangular
/// data (checked against the substitution oracle), reads the spectrum off the
/// diagonals and computes the kernel tower at `0⃗`.
pub fn joint_spectrum(s: &SrmiStructure<Rational>, r: usize) -> Result<SpectrumReport, Error> {
    let tri = triangularize_frame(s)?;
    let ops = induced_triangular_ops(s, &tri, r);
    if ops != induced_ops_by_substitution(s, &tri, r) {
        return Err(Error::ExactnessViolation("induced operators disagree with the substitution oracle".into()));
    }
    let spectrum: Vec<(Vec<G>, usize)> = diagonal_spectrum(&ops).into_values().collect();
    let tower = kernel_tower(&ops)?;
    Ok(SpectrumReport { r, mu: tower.mu, triangularization: tri, ops, spectrum, tower })
}

// ---------------------------------------------------------------------------
// Kernel towers

/// Joint kernels of successively reduced operators at `0⃗`, lifted to the
/// original space.
#[derive(Clone, Debug)]
pub struct KernelTower<S: Scalar> {
    pub kernels: Vec<Vec<Vec<S>>>,
    pub reduced: Vec<Vec<Matrix<S>>>,
    pub mu: usize,
}

impl<S: Scalar> KernelTower<S> {
    pub fn s(&self) -> usize {
        self.kernels.len()
    }

    pub fn kernel_dims(&self) -> Vec<usize> {
        self.kernels.iter().map(Vec::len).collect()
    }

    /// All lifted kernel vectors, spanning the space housing the cohomology.
    pub fn span(&self) -> Vec<Vec<S>> {
        self.kernels.iter().flatten().cloned().collect()
    }
}

fn joint_kernel<S: Scalar>(ops: &[Matrix<S>]) -> Vec<Vec<S>> {
    ops.iter().cloned().reduce(|acc, m| acc.vstack(&m)).map_or_else(Vec::new, |m| m.kernel())
}

fn zero_lines<S: Scalar>(ops: &[Matrix<S>]) -> Vec<usize> {
    let len = ops.first().map_or(0, Matrix::rows);
    (0..len).filter(|&q| ops.iter().all(|t| t[(q, q)].is_zero())).collect()
}

/// Kernel basis in echelon form by highest nonzero index: each vector is 1 at
/// its highest index, and no other vector is nonzero there.
fn echelon_from_top<S: Scalar>(kernel: &[Vec<S>], len: usize) -> Vec<(usize, Vec<S>)> {
    let rev: Vec<Vec<S>> = kernel.iter().map(|v| v.iter().rev().cloned().collect()).collect();
    let rref = Matrix::from_rows(rev).rref();
    rref.pivots
        .iter()
        .enumerate()
        .map(|(row, &p)| (len - 1 - p, rref.matrix.row(row).iter().rev().cloned().collect()))
        .collect()
}

/// Kernel tower of upper-triangular commuting operators at `0⃗`, following the
/// basis-replacement procedure: the kernel vectors' top indices must sit on
/// `0⃗`-lines, the reduced operators must stay upper-triangular, and the
/// multiplicity must equal the sum of the kernel dimensions.
pub fn kernel_tower<S: Scalar>(ops: &[Matrix<S>]) -> Result<KernelTower<S>, Error> {
    if !ops.iter().all(Matrix::is_upper_triangular) {
        return Err(Error::NotTriangular);
    }
    let len = ops.first().map_or(0, Matrix::rows);
    let mu = zero_lines(ops).len();
    let mut current: Vec<Matrix<S>> = ops.to_vec();
    let mut lift = Matrix::<S>::identity(len);
    let mut kernels = Vec::new();
    let mut reduced = Vec::new();
    let mut remaining = mu;
    loop {
        let m = lift.cols();
        let kernel = joint_kernel(&current);
        if kernel.is_empty() {
            break;
        }
        let ech = echelon_from_top(&kernel, m);
        let zl = zero_lines(&current);
        if ech.iter().any(|(q, _)| !zl.contains(q)) {
            return Err(Error::ExactnessViolation("kernel top index off the 0-lines".into()));
        }
        let tops: Vec<usize> = ech.iter().map(|(q, _)| *q).collect();
        let mut cols: Vec<Vec<S>> = ech.iter().map(|(_, v)| v.clone()).collect();
        for i in (0..m).filter(|i| !tops.contains(i)) {
            let mut e = vec![S::zero(); m];
            e[i] = S::one();
            cols.push(e);
        }
        let d = ech.len();
        let p = Matrix::from_cols(m, &cols);
        let p_inv = p.inverse().expect("basis replacement is invertible");
        let rest: Vec<usize> = (d..m).collect();
        let all: Vec<usize> = (0..m).collect();
        let mut next = Vec::with_capacity(current.len());
        for t in &current {
            let tp = p_inv.mul(t).mul(&p);
            if (0..d).any(|j| (0..m).any(|i| !tp[(i, j)].is_zero())) {
                return Err(Error::ExactnessViolation("kernel columns do not vanish".into()));
            }
            let block = tp.submatrix(&rest, &rest);
            if !block.is_upper_triangular() {
                return Err(Error::NotTriangular);
            }
            next.push(block);
        }
        kernels.push(cols[..d].iter().map(|v| lift.mul_vec(v)).collect());
        lift = lift.mul(&p.submatrix(&all, &rest));
        remaining -= d;
        if zero_lines(&next).len() != remaining {
            return Err(Error::ExactnessViolation("0-lines not preserved by the reduction".into()));
        }
        reduced.push(next.clone());
        current = next;
    }
    if remaining != 0 {
        return Err(Error::ExactnessViolation(format!(
            "multiplicity {mu} differs from the tower dimension {}",
            mu - remaining
        )));
    }
    Ok(KernelTower { kernels, reduced, mu })
}

/// Kernel tower of arbitrary commuting operators at `0⃗`, using standard-vector
/// complements; `mu` is the total tower dimension.
pub fn kernel_tower_general<S: Scalar>(ops: &[Matrix<S>]) -> KernelTower<S> {
    let len = ops.first().map_or(0, Matrix::rows);
    let mut current: Vec<Matrix<S>> = ops.to_vec();
    let mut lift = Matrix::<S>::identity(len);
    let mut kernels = Vec::new();
    let mut reduced = Vec::new();
    loop {
        let m = lift.cols();
        let kernel = joint_kernel(&current);
        if kernel.is_empty() {
            break;
        }
        let d = kernel.len();
        let std: Vec<Vec<S>> = (0..m)
            .map(|i| (0..m).map(|j| if i == j { S::one() } else { S::zero() }).collect())
            .collect();
        let mut cols = kernel.clone();
        cols.extend(extend_independent(m, &kernel, &std));
        let p = Matrix::from_cols(m, &cols);
        let p_inv = p.inverse().expect("extended basis is invertible");
        let rest: Vec<usize> = (d..m).collect();
        let all: Vec<usize> = (0..m).collect();
        let next: Vec<Matrix<S>> = current.iter().map(|t| p_inv.mul(t).mul(&p).submatrix(&rest, &rest)).collect();
        kernels.push(kernel.iter().map(|v| lift.mul_vec(v)).collect());
        lift = lift.mul(&p.submatrix(&all, &rest));
        reduced.push(next.clone());
        current = next;
    }
    let mu = kernels.iter().map(Vec::len).sum();
    KernelTower { kernels, reduced, mu }
}

/// Whether `ker X_ℓ ⊕ im X_ℓ = E` for every operator. When it holds, the
/// tower height must be at most 1; a taller tower is an exactness violation.
pub fn complement_kernel_check<S: Scalar>(ops: &[Matrix<S>]) -> Result<bool, Error> {
    let supplementary = ops.iter().all(|a| a.rank() == a.mul(a).rank());
    if supplementary && kernel_tower_general(ops).s() > 1 {
        return Err(Error::ExactnessViolation("supplementary kernels but tower height above 1".into()));
    }
    Ok(supplementary)
}

/// Replaces a Koszul `p`-cocycle by a cohomologous one supported on
/// `(tower span) ⊗ ∧^p`, by solving `C = 𝒦B + (tower part)`.
pub fn reduce_cocycle<S: Scalar>(ops: &OperatorTuple<S>, tower: &KernelTower<S>, p: usize, c: &[S]) -> Result<Vec<S>, Error> {
    let len = ops.space_dim(p);
    if c.len() != len {
        return Err(Error::DimensionMismatch(format!("cochain has length {}, expected {len}", c.len())));
    }
    if !ops.cochain_matrix(p).mul_vec(c).iter().all(Zero::is_zero) {
        return Err(Error::NotACocycle);
    }
    let dim = ops.dim();
    let span = tower.span();
    let mut incl_cols = Vec::with_capacity(span.len() * binomial(ops.n(), p));
    for u in 0..binomial(ops.n(), p) {
        for t in &span {
            let mut v = vec![S::zero(); len];
            v[u * dim..(u + 1) * dim].clone_from_slice(t);
            incl_cols.push(v);
        }
    }
    let incl = Matrix::from_cols(len, &incl_cols);
    let coboundary = if p == 0 { Matrix::zeros(len, 0) } else { ops.cochain_matrix(p - 1) };
    let sol = coboundary
        .hstack(&incl)
        .solve(c)
        .ok_or_else(|| Error::ExactnessViolation("cocycle not reducible onto the tower span".into()))?;
    Ok(incl.mul_vec(&sol[coboundary.cols()..]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gaussian, imag_unit, int, rat};

    fn gi(re: i64, im: i64) -> G {
        gaussian(int(re), int(im))
    }

    #[test]
    fn roots_of_t2_plus_1_and_rational_roots() {
        // t² + 1
        let r = gaussian_roots(&[gi(1, 0), gi(0, 0), gi(1, 0)]).unwrap();
        assert_eq!(r, vec![imag_unit(), -imag_unit()]);
        // 2t² − 3t + 1 = (2t − 1)(t − 1), times t
        let r = gaussian_roots(&[gi(0, 0), gi(1, 0), gi(-3, 0), gi(2, 0)]).unwrap();
        assert_eq!(r, vec![gi(0, 0), G::from_rational(&rat(1, 2)), gi(1, 0)]);
        // t² − 2 has no root in Q(i)
        assert!(gaussian_roots(&[gi(-2, 0), gi(0, 0), gi(1, 0)]).unwrap().is_empty());
    }

    #[test]
    fn rotation_pair_is_diagonalized() {
        let mut a = Matrix::<G>::zeros(2, 2);
        a[(0, 1)] = gi(-1, 0);
        a[(1, 0)] = gi(1, 0);
        let t = simultaneous_triangularize(&[Matrix::identity(2), a]).unwrap();
        assert!(t.b[1].is_lower_triangular() && t.b[1].is_upper_triangular());
    }

    #[test]
    fn jordan_tower() {
        let mut j = Matrix::<Rational>::zeros(3, 3);
        j[(0, 1)] = int(1);
        j[(1, 2)] = int(1);
        let tower = kernel_tower(std::slice::from_ref(&j)).unwrap();
        assert_eq!(tower.kernel_dims(), vec![1, 1, 1]);
        assert_eq!(tower.mu, 3);
        assert!(!complement_kernel_check(&[j]).unwrap());
    }
}
