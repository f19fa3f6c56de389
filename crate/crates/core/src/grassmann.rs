//! Grassmann algebra on `n` generators: tuple bases, creation and
//! annihilation operators.

use std::collections::HashMap;

use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Increasing `p`-tuples of `0..n`, in lexicographic order.
pub fn tuples(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < p - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p <= n {
        rec(0, n, p, &mut Vec::with_capacity(p), &mut out);
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Ordered basis of `∧^p` with reverse lookup.
#[derive(Clone, Debug)]
pub struct TupleIndex {
    tuples: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl TupleIndex {
    pub fn new(n: usize, p: usize) -> Self {
        let tuples = tuples(n, p);
        let index = tuples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        TupleIndex { tuples, index }
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn position(&self, t: &[usize]) -> Option<usize> {
        self.index.get(t).copied()
    }
}

/// Signed partial permutation `∧^p → ∧^q`: for each source tuple, the target
/// tuple index and sign, or `None` when the image vanishes.
#[derive(Clone, Debug)]
pub struct SignedMap {
    pub src_len: usize,
    pub tgt_len: usize,
    pub entries: Vec<Option<(usize, i8)>>,
}

impl SignedMap {
    pub fn to_matrix<S: Scalar>(&self) -> Matrix<S> {
        let mut m = Matrix::zeros(self.tgt_len, self.src_len);
        for (j, e) in self.entries.iter().enumerate() {
            if let Some((i, s)) = e {
                m[(*i, j)] = S::from_i64(*s as i64);
            }
        }
        m
    }
}

/// Grassmann algebra `∧⟨η_1..η_n⟩` with all degree bases.
#[derive(Clone, Debug)]
pub struct GrassmannBasis {
    n: usize,
    degrees: Vec<TupleIndex>,
}

impl GrassmannBasis {
    pub fn new(n: usize) -> Self {
        GrassmannBasis { n, degrees: (0..=n).map(|p| TupleIndex::new(n, p)).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self, p: usize) -> &TupleIndex {
        &self.degrees[p]
    }

    pub fn dim(&self, p: usize) -> usize {
        self.degrees.get(p).map_or(0, TupleIndex::len)
    }

    /// `e_{η_k}: ω ↦ η_k ∧ ω` on `∧^p`.
    pub fn creation(&self, k: usize, p: usize) -> SignedMap {
        let tgt_len = self.dim(p + 1);
        let entries = self.degrees[p]
            .tuples()
            .iter()
            .map(|t| {
                if t.contains(&k) {
                    return None;
                }
                let before = t.iter().filter(|&&j| j < k).count();
                let mut u = t.clone();
                u.insert(before, k);
                let sign = if before % 2 == 0 { 1 } else { -1 };
                Some((self.degrees[p + 1].position(&u).unwrap(), sign))
            })
            .collect();
        SignedMap { src_len: self.dim(p), tgt_len, entries }
    }

    /// `i_{h_k}` (contraction with the dual generator) on `∧^p`.
    pub fn annihilation(&self, k: usize, p: usize) -> SignedMap {
        let tgt_len = if p == 0 { 0 } else { self.dim(p - 1) };
        let entries = self.degrees[p]
            .tuples()
            .iter()
            .map(|t| {
                let pos = t.iter().position(|&j| j == k)?;
                let u: Vec<usize> = t.iter().copied().filter(|&j| j != k).collect();
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                Some((self.degrees[p - 1].position(&u).unwrap(), sign))
            })
            .collect();
        SignedMap { src_len: self.dim(p), tgt_len, entries }
    }

    /// Checks `e_{η_l} i_{h_k} + i_{h_k} e_{η_l} = δ_{kl} id` on every `∧^p`.
    pub fn check_anticommutation<S: Scalar>(&self) -> bool {
        for p in 0..=self.n {
            let id = Matrix::<S>::identity(self.dim(p));
            for k in 0..self.n {
                for l in 0..self.n {
                    let mut sum = Matrix::<S>::zeros(self.dim(p), self.dim(p));
                    if p >= 1 {
                        let i_k = self.annihilation(k, p).to_matrix::<S>();
                        let e_l = self.creation(l, p - 1).to_matrix::<S>();
                        sum = sum.add(&e_l.mul(&i_k));
                    }
                    if p < self.n {
                        let e_l = self.creation(l, p).to_matrix::<S>();
                        let i_k = self.annihilation(k, p + 1).to_matrix::<S>();
                        sum = sum.add(&i_k.mul(&e_l));
                    }
                    let expect = if k == l { id.clone() } else { Matrix::zeros(self.dim(p), self.dim(p)) };
                    if sum != expect {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// `A ⊗ G` in the tensor basis `tuple_index * N + basis_index`.
pub fn kron_signed<S: Scalar>(a: &Matrix<S>, g: &SignedMap, out: &mut Matrix<S>) {
    let n = a.rows();
    for (t, e) in g.entries.iter().enumerate() {
        let Some((u, s)) = e else { continue };
        let sign = S::from_i64(*s as i64);
        for i in 0..n {
            for j in 0..a.cols() {
                let v = &a[(i, j)];
                if !num_traits::Zero::is_zero(v) {
                    let cur = out[(u * n + i, t * a.cols() + j)].clone();
                    out[(u * n + i, t * a.cols() + j)] = cur + sign.clone() * v.clone();
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn tuple_counts() {
        for n in 0..6 {
            for p in 0..=n {
                assert_eq!(tuples(n, p).len(), binomial(n, p));
            }
        }
        assert_eq!(tuples(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn creation_signs() {
        let g = GrassmannBasis::new(3);
        // η_1 ∧ η_0 = −η_0 ∧ η_1
        let e1 = g.creation(1, 1);
        assert_eq!(e1.entries[0], Some((0, -1)));
        assert_eq!(e1.entries[1], None);
    }

    #[test]
    fn anticommutation_small() {
        for n in 1..=4 {
            assert!(GrassmannBasis::new(n).check_anticommutation::<Rational>());
        }
    }
}
