//! Commuting linear frames and the strongly r-matrix induced structures they
//! carry.

use crate::error::Error;
use crate::linalg::{span_rank, Matrix};
use crate::minors::{MinorTables, PolyMatrix};
use crate::multivector::{MultiVec, MultiVecBasis};
use crate::poly::{HomPoly, MonomialBasis, MultiIndex};
use crate::scalar::Scalar;

/// `n` commuting linear vector fields `Y_j = Σ a_j[m][p] x_p ∂_m` with
/// `Y_1 ∧ ... ∧ Y_n ≠ 0`.
#[derive(Clone)]
pub struct LinFrame<S> {
    n: usize,
    mats: Vec<Matrix<S>>,
    minors: MinorTables<S>,
    divs: Vec<S>,
}

impl<S: Scalar> LinFrame<S> {
    pub fn new(mats: Vec<Matrix<S>>) -> Result<Self, Error> {
        let n = mats.len();
        if n == 0 || mats.iter().any(|a| a.rows() != n || a.cols() != n) {
            return Err(Error::DimensionMismatch(format!("need {n} square matrices of size {n}")));
        }
        for i in 0..n {
            for j in i + 1..n {
                if !mats[i].commutator(&mats[j]).is_zero() {
                    return Err(Error::NonCommuting(i + 1, j + 1));
                }
            }
        }
        // ℓ_{ir}: coefficient of ∂_r in Y_i
        let ell = PolyMatrix::new(
            mats.iter()
                .map(|a| {
                    (0..n)
                        .map(|r| HomPoly::from_terms(n, 1, (0..n).map(|p| (MultiIndex::unit(n, p), a[(r, p)].clone()))))
                        .collect()
                })
                .collect(),
        );
        let minors = MinorTables::new(ell);
        if minors.d.is_zero() {
            return Err(Error::DegenerateFrame);
        }
        let divs: Vec<S> = mats.iter().map(|a| a.diagonal().into_iter().fold(S::zero(), |s, v| s + v)).collect();
        for (i, a) in mats.iter().enumerate() {
            if minors.d.apply_linvf(a) != minors.d.scale(&divs[i]) {
                return Err(Error::JointEigenvector(i + 1));
            }
        }
        Ok(LinFrame { n, mats, minors, divs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mats(&self) -> &[Matrix<S>] {
        &self.mats
    }

    /// `D = det ℓ`.
    pub fn d(&self) -> &HomPoly<S> {
        &self.minors.d
    }

    pub fn divs(&self) -> &[S] {
        &self.divs
    }

    pub fn minors(&self) -> &MinorTables<S> {
        &self.minors
    }

    pub fn field(&self, i: usize) -> MultiVec<S> {
        MultiVec::linear_field(&self.mats[i])
    }

    /// `Y_{k1} ∧ ... ∧ Y_{kp}` in the ∂-frame.
    pub fn wedge_fields(&self, k: &[usize]) -> MultiVec<S> {
        let mut acc = MultiVec::function(HomPoly::one(self.n));
        for &i in k {
            acc = acc.wedge(&self.field(i));
        }
        acc
    }

    /// The joint eigenspace `{P ∈ E_r : Y_i P = (div Y_i) P ∀ i}`.
    pub fn joint_eigenspace(&self, r: usize) -> Vec<HomPoly<S>> {
        let basis = MonomialBasis::new(self.n, r);
        let blocks: Vec<Matrix<S>> = self
            .mats
            .iter()
            .zip(&self.divs)
            .map(|(a, div)| linvf_matrix(a, &basis).shift(div))
            .collect();
        let stacked = blocks.iter().skip(1).fold(blocks[0].clone(), |acc, b| acc.vstack(b));
        stacked.kernel().iter().map(|v| HomPoly::from_coords(&basis, v)).collect()
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T + Copy) -> Result<LinFrame<T>, Error> {
        LinFrame::new(self.mats.iter().map(|a| a.map(f)).collect())
    }
}

/// Matrix of `P ↦ Y P` on `E_r` in the ascending monomial basis.
pub fn linvf_matrix<S: Scalar>(a: &Matrix<S>, basis: &MonomialBasis) -> Matrix<S> {
    let cols: Vec<Vec<S>> = basis
        .monomials()
        .iter()
        .map(|m| HomPoly::monomial(m.clone(), S::one()).apply_linvf(a).coords(basis))
        .collect();
    Matrix::from_cols(basis.len(), &cols)
}

/// `Λ = Σ_{i<j} α^{ij} Y_i ∧ Y_j` in the ∂-frame.
pub fn expand_srmi<S: Scalar>(alpha: &Matrix<S>, frame: &LinFrame<S>) -> MultiVec<S> {
    let n = frame.n();
    let mut out = MultiVec::zero(n, 2, 2);
    for i in 0..n {
        for j in i + 1..n {
            let c = &alpha[(i, j)];
            if !c.is_zero() {
                out = out.add(&frame.wedge_fields(&[i, j]).scale(c));
            }
        }
    }
    out
}

/// A skew matrix `α` together with a commuting frame.
#[derive(Clone)]
pub struct SrmiStructure<S> {
    frame: LinFrame<S>,
    alpha: Matrix<S>,
    lambda: MultiVec<S>,
    x: Vec<Matrix<S>>,
    delta: Vec<S>,
}

impl<S: Scalar> SrmiStructure<S> {
    pub fn new(alpha: Matrix<S>, frame: LinFrame<S>) -> Result<Self, Error> {
        let n = frame.n();
        if alpha.rows() != n || alpha.cols() != n {
            return Err(Error::DimensionMismatch("alpha must be n x n".into()));
        }
        if alpha.add(&alpha.transpose()) != Matrix::zeros(n, n) {
            return Err(Error::NotSkew);
        }
        let lambda = expand_srmi(&alpha, &frame);
        if !lambda.is_poisson() {
            return Err(Error::NotPoisson);
        }
        let x: Vec<Matrix<S>> = (0..n)
            .map(|i| {
                (0..n).fold(Matrix::zeros(n, n), |acc, j| acc.add(&frame.mats()[j].scale(&alpha[(i, j)])))
            })
            .collect();
        let delta = x.iter().map(|m| m.diagonal().into_iter().fold(S::zero(), |s, v| s + v)).collect();
        Ok(SrmiStructure { frame, alpha, lambda, x, delta })
    }

    pub fn n(&self) -> usize {
        self.frame.n()
    }

    pub fn frame(&self) -> &LinFrame<S> {
        &self.frame
    }

    pub fn alpha(&self) -> &Matrix<S> {
        &self.alpha
    }

    pub fn lambda(&self) -> &MultiVec<S> {
        &self.lambda
    }

    /// Matrices of `X_i = Σ_j α^{ij} Y_j`.
    pub fn x(&self) -> &[Matrix<S>] {
        &self.x
    }

    /// `δ_i = div X_i`.
    pub fn delta(&self) -> &[S] {
        &self.delta
    }

    pub fn is_k_exact(&self) -> bool {
        self.delta.iter().all(|d| d.is_zero())
    }

    /// The operators `X_i − δ_i id` on `E_r`.
    pub fn shifted_ops(&self, r: usize) -> Vec<Matrix<S>> {
        let basis = MonomialBasis::new(self.n(), r);
        self.x.iter().zip(&self.delta).map(|(x, d)| linvf_matrix(x, &basis).shift(d)).collect()
    }

    /// The operators `X_i` on `E_r`.
    pub fn ops(&self, r: usize) -> Vec<Matrix<S>> {
        let basis = MonomialBasis::new(self.n(), r);
        self.x.iter().map(|x| linvf_matrix(x, &basis)).collect()
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T + Copy) -> Result<SrmiStructure<T>, Error> {
        SrmiStructure::new(self.alpha.map(f), self.frame.map(f)?)
    }

    /// `K(Λ) = Σ_i δ_i Y_i` against the curl computed from the ∂-frame.
    pub fn curl_formula_check(&self) -> bool {
        let n = self.n();
        let formula = (0..n).fold(MultiVec::zero(n, 1, 1), |acc, i| acc.add(&self.frame.field(i).scale(&self.delta[i])));
        self.lambda.curl() == formula
    }
}

/// Linear vector field `J a = Σ a[m][p] x_p ∂_m`.
pub fn j_field<S: Scalar>(a: &Matrix<S>) -> MultiVec<S> {
    MultiVec::linear_field(a)
}

/// Basis of `𝔤_Λ = {a ∈ gl(n) : [Λ, J a] = 0}`.
pub fn stabilizer<S: Scalar>(lambda: &MultiVec<S>) -> Vec<Matrix<S>> {
    let n = lambda.n();
    let units: Vec<Matrix<S>> = (0..n * n)
        .map(|e| {
            let mut a = Matrix::zeros(n, n);
            a[(e / n, e % n)] = S::one();
            a
        })
        .collect();
    if lambda.is_zero() {
        return units;
    }
    let tgt = MultiVecBasis::new(n, 2, lambda.degree());
    let cols: Vec<Vec<S>> = units.iter().map(|a| tgt.coords(&lambda.schouten(&j_field(a)))).collect();
    Matrix::from_cols(tgt.len(), &cols)
        .kernel()
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
        .collect()
}

/// Quadratic bivectors `J a ∧ J b` over pairs of the given basis.
pub fn j2_image<S: Scalar>(stab: &[Matrix<S>]) -> Vec<MultiVec<S>> {
    let mut out = Vec::new();
    for i in 0..stab.len() {
        for j in i + 1..stab.len() {
            out.push(j_field(&stab[i]).wedge(&j_field(&stab[j])));
        }
    }
    out
}

/// Whether `Λ` lies in `J²(𝔤_Λ ∧ 𝔤_Λ)`.
pub fn j2_image_membership<S: Scalar>(lambda: &MultiVec<S>, stab: &[Matrix<S>]) -> bool {
    let n = lambda.n();
    let basis = MultiVecBasis::new(n, 2, 2);
    let image: Vec<Vec<S>> = j2_image(stab).iter().map(|m| basis.coords(&m.clone().with_degree(2))).collect();
    let r0 = span_rank(basis.len(), &image);
    let mut with = image;
    with.push(basis.coords(&lambda.clone().with_degree(2)));
    span_rank(basis.len(), &with) == r0
}

/// Whether two lists of vectors span the same space.
pub fn same_span<S: Scalar>(len: usize, a: &[Vec<S>], b: &[Vec<S>]) -> bool {
    let ra = span_rank(len, a);
    let rb = span_rank(len, b);
    let both: Vec<Vec<S>> = a.iter().chain(b).cloned().collect();
    ra == rb && span_rank(len, &both) == ra
}

/// Flattened matrices, for span comparisons of stabilizer bases.
pub fn flatten<S: Scalar>(mats: &[Matrix<S>]) -> Vec<Vec<S>> {
    mats.iter().map(|m| (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()).collect()
}



impl<S: Scalar> std::fmt::Debug for LinFrame<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LinFrame").field("mats", &self.mats).field("divs", &self.divs).finish()
    }
}

impl<S: Scalar> std::fmt::Debug for SrmiStructure<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SrmiStructure").field("alpha", &self.alpha).field("lambda", &self.lambda).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    fn diag_frame() -> LinFrame<Rational> {
        let e = |i: usize| {
            let mut a = Matrix::zeros(3, 3);
            a[(i, i)] = int(1);
            a
        };
        LinFrame::new(vec![e(0), e(1), e(2)]).unwrap()
    }

    #[test]
    fn diagonal_frame() {
        let f = diag_frame();
        let xyz = HomPoly::from_ints(&[(&[1, 1, 1], 1)]);
        assert_eq!(f.d(), &xyz);
        assert_eq!(f.divs(), &[int(1), int(1), int(1)]);
        let eig = f.joint_eigenspace(3);
        assert_eq!(eig.len(), 1);
        assert!(eig[0].is_proportional_to(&xyz));
    }

    #[test]
    fn degenerate_and_noncommuting_frames() {
        let mut a = Matrix::zeros(3, 3);
        a[(0, 0)] = int(1);
        let b = Matrix::identity(3);
        assert_eq!(LinFrame::new(vec![a.clone(), a.clone(), b]).unwrap_err(), Error::DegenerateFrame);
        let mut c = Matrix::zeros(3, 3);
        c[(0, 1)] = int(1);
        assert_eq!(LinFrame::new(vec![a, c, Matrix::identity(3)]).unwrap_err(), Error::NonCommuting(1, 2));
    }

    #[test]
    fn stabilizer_of_zero_is_everything() {
        let z = MultiVec::<Rational>::zero(3, 2, 2);
        assert_eq!(stabilizer(&z).len(), 9);
    }

    #[test]
    fn lambda1_is_srmi_and_curl_matches() {
        let mut alpha = Matrix::zeros(3, 3);
        for (i, j) in [(1, 2), (2, 0), (0, 1)] {
            alpha[(i, j)] = int(1);
            alpha[(j, i)] = int(-1);
        }
        let s = SrmiStructure::new(alpha, diag_frame()).unwrap();
        assert!(s.lambda().is_poisson());
        assert!(s.curl_formula_check());
        assert!(s.is_k_exact());
        let stab = stabilizer(s.lambda());
        assert!(j2_image_membership(s.lambda(), &stab));
    }
}
