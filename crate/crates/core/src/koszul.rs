//! Koszul chain and cochain complexes of a tuple of commuting operators on a
//! finite-dimensional space `E`, in the tensor basis
//! `tuple_index * dim E + basis_index` of `E ⊗ ∧^p`.

use rayon::prelude::*;

use crate::error::Error;
use crate::grassmann::{binomial, kron_signed, GrassmannBasis};
use crate::linalg::{extend_independent, Matrix};
use crate::scalar::Scalar;

/// `n` operators on a common space of dimension `dim`.
#[derive(Clone, Debug)]
pub struct OperatorTuple<S: Scalar> {
    ops: Vec<Matrix<S>>,
    dim: usize,
    grass: GrassmannBasis,
}

impl<S: Scalar> OperatorTuple<S> {
    /// A tuple of pairwise commuting operators.
    pub fn new(ops: Vec<Matrix<S>>) -> Result<Self, Error> {
        let t = Self::unchecked(ops)?;
        if !t.is_commuting() {
            return Err(Error::OperatorsNotCommuting);
        }
        Ok(t)
    }

    /// A tuple without the commutation check (for homotopy identities, which
    /// hold unconditionally).
    pub fn unchecked(ops: Vec<Matrix<S>>) -> Result<Self, Error> {
        let dim = ops.first().map_or(0, Matrix::rows);
        if ops.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch("operators must be square of one common size".into()));
        }
        let grass = GrassmannBasis::new(ops.len());
        Ok(OperatorTuple { ops, dim, grass })
    }

    pub fn is_commuting(&self) -> bool {
        (0..self.n()).all(|j| (j + 1..self.n()).all(|k| self.ops[j].commutator(&self.ops[k]).is_zero()))
    }

    pub fn n(&self) -> usize {
        self.ops.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ops(&self) -> &[Matrix<S>] {
        &self.ops
    }

    pub fn grassmann(&self) -> &GrassmannBasis {
        &self.grass
    }

    /// `X⃗_λ = (X_1 − λ_1, ..., X_n − λ_n)`.
    pub fn shifted(&self, lambda: &[S]) -> Self {
        assert_eq!(lambda.len(), self.n());
        OperatorTuple {
            ops: self.ops.iter().zip(lambda).map(|(x, l)| x.shift(l)).collect(),
            dim: self.dim,
            grass: self.grass.clone(),
        }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T + Copy) -> OperatorTuple<T> {
        OperatorTuple { ops: self.ops.iter().map(|m| m.map(f)).collect(), dim: self.dim, grass: self.grass.clone() }
    }

    /// Dimension of `E ⊗ ∧^p`.
    pub fn space_dim(&self, p: usize) -> usize {
        self.dim * binomial(self.n(), p)
    }

    /// `𝒦 = Σ X_k ⊗ e_{η_k}: E ⊗ ∧^p → E ⊗ ∧^{p+1}`.
    pub fn cochain_matrix(&self, p: usize) -> Matrix<S> {
        let mut out = Matrix::zeros(self.space_dim(p + 1), self.space_dim(p));
        if p < self.n() {
            for (k, x) in self.ops.iter().enumerate() {
                kron_signed(x, &self.grass.creation(k, p), &mut out);
            }
        }
        out
    }

    /// `κ = Σ X_k ⊗ i_{h_k}: E ⊗ ∧^p → E ⊗ ∧^{p−1}`.
    pub fn chain_matrix(&self, p: usize) -> Matrix<S> {
        let rows = if p == 0 { 0 } else { self.space_dim(p - 1) };
        let mut out = Matrix::zeros(rows, self.space_dim(p));
        if p > 0 {
            for (k, x) in self.ops.iter().enumerate() {
                kron_signed(x, &self.grass.annihilation(k, p), &mut out);
            }
        }
        out
    }

    /// Koszul cohomology dimensions and representatives for `p = 0..=n`.
    pub fn cohomology(&self) -> KoszulCohomology<S> {
        let n = self.n();
        let cochain: Vec<Matrix<S>> = (0..=n).into_par_iter().map(|p| self.cochain_matrix(p)).collect();
        let reps: Vec<Vec<Vec<S>>> = (0..=n)
            .into_par_iter()
            .map(|p| {
                let len = self.space_dim(p);
                let kernel = cochain[p].kernel();
                let image = if p == 0 { Vec::new() } else { cochain[p - 1].columns() };
                extend_independent(len, &image, &kernel)
            })
            .collect();
        KoszulCohomology { dims: reps.iter().map(Vec::len).collect(), reps }
    }

    /// Koszul homology dimensions for `p = 0..=n`.
    pub fn homology_dims(&self) -> Vec<usize> {
        let n = self.n();
        let ranks: Vec<usize> = (0..=n + 1)
            .map(|p| if p == 0 || p > n { 0 } else { self.chain_matrix(p).rank() })
            .collect();
        (0..=n).map(|p| self.space_dim(p) - ranks[p] - ranks[p + 1]).collect()
    }
}

/// Cohomology of a Koszul cochain complex: for each `p`, cocycles forming a
/// basis of a complement of the coboundaries inside the cocycles.
#[derive(Clone, Debug, PartialEq)]
pub struct KoszulCohomology<S> {
    pub dims: Vec<usize>,
    pub reps: Vec<Vec<Vec<S>>>,
}

impl<S> KoszulCohomology<S> {
    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }
}

/// Checks `𝒦_X κ_Y + κ_Y 𝒦_X = (Σ_l Y_l X_l) ⊗ id + Σ_{l,k} [X_l, Y_k] ⊗ e_{η_l} i_{h_k}`
/// on every `E ⊗ ∧^p`.
pub fn homotopy_check<S: Scalar>(x: &OperatorTuple<S>, y: &OperatorTuple<S>) -> bool {
    assert_eq!(x.n(), y.n());
    assert_eq!(x.dim(), y.dim());
    let n = x.n();
    let g = x.grassmann();
    let first = (0..n).fold(Matrix::zeros(x.dim(), x.dim()), |acc, l| acc.add(&y.ops()[l].mul(&x.ops()[l])));
    (0..=n).into_par_iter().all(|p| {
        let len = x.space_dim(p);
        let mut lhs = Matrix::zeros(len, len);
        if p > 0 {
            lhs = lhs.add(&x.cochain_matrix(p - 1).mul(&y.chain_matrix(p)));
        }
        if p < n {
            lhs = lhs.add(&y.chain_matrix(p + 1).mul(&x.cochain_matrix(p)));
        }
        let mut rhs = Matrix::<S>::identity(g.dim(p)).kron(&first);
        if p > 0 {
            for l in 0..n {
                for k in 0..n {
                    let c = x.ops()[l].commutator(&y.ops()[k]);
                    if c.is_zero() {
                        continue;
                    }
                    let ei: Matrix<S> = g.creation(l, p - 1).to_matrix().mul(&g.annihilation(k, p).to_matrix());
                    rhs = rhs.add(&ei.kron(&c));
                }
            }
        }
        lhs == rhs
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    fn diag(v: &[i64]) -> Matrix<Rational> {
        Matrix::from_fn(v.len(), v.len(), |i, j| if i == j { int(v[i]) } else { int(0) })
    }

    #[test]
    fn differentials_square_to_zero() {
        let t = OperatorTuple::new(vec![diag(&[0, 1, 2]), diag(&[1, 0, 3]), diag(&[0, 0, 1])]).unwrap();
        for p in 0..3 {
            assert!(t.cochain_matrix(p + 1).mul(&t.cochain_matrix(p)).is_zero());
        }
        for p in 2..=3 {
            assert!(t.chain_matrix(p - 1).mul(&t.chain_matrix(p)).is_zero());
        }
    }

    #[test]
    fn joint_zero_eigenvector_gives_exterior_algebra() {
        // only e_1 has joint eigenvalue zero: cohomology is one copy of ∧
        let t = OperatorTuple::new(vec![diag(&[0, 1, 2]), diag(&[0, 0, 3])]).unwrap();
        assert_eq!(t.cohomology().dims, vec![1, 2, 1]);
        assert_eq!(t.homology_dims(), vec![1, 2, 1]);
        let off = t.shifted(&[int(5), int(5)]);
        assert!(off.cohomology().is_acyclic());
    }

    #[test]
    fn nilpotent_jordan_block() {
        // single 3x3 Jordan block at 0, n = 1: ker = 1, coker = 1
        let mut j = Matrix::<Rational>::zeros(3, 3);
        j[(0, 1)] = int(1);
        j[(1, 2)] = int(1);
        let t = OperatorTuple::new(vec![j]).unwrap();
        assert_eq!(t.cohomology().dims, vec![1, 1]);
    }

    #[test]
    fn non_commuting_rejected() {
        let mut a = Matrix::<Rational>::zeros(2, 2);
        a[(0, 1)] = int(1);
        let b = a.transpose();
        assert_eq!(OperatorTuple::new(vec![a, b]).unwrap_err(), Error::OperatorsNotCommuting);
    }
}
