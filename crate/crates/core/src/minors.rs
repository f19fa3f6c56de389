//! Minors of polynomial matrices and the determinant identities relating the
//! minors of `ℓ`, of its minor matrix `L`, and of `L`'s own minor matrix.

use crate::grassmann::tuples;
use crate::poly::HomPoly;
use crate::scalar::Scalar;

/// Square matrix with polynomial entries.
#[derive(Clone, PartialEq)]
pub struct PolyMatrix<S> {
    n: usize,
    vars: usize,
    entries: Vec<Vec<HomPoly<S>>>,
}

fn complement(n: usize, t: &[usize]) -> Vec<usize> {
    (0..n).filter(|i| !t.contains(i)).collect()
}

impl<S: Scalar> PolyMatrix<S> {
    pub fn new(entries: Vec<Vec<HomPoly<S>>>) -> Self {
        let n = entries.len();
        assert!(n > 0 && entries.iter().all(|r| r.len() == n), "matrix must be square");
        let vars = entries[0][0].n();
        PolyMatrix { n, vars, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &HomPoly<S> {
        &self.entries[i][j]
    }

    /// Minor at the intersection of `rows` and `cols` (equal lengths);
    /// the empty minor is 1.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> HomPoly<S> {
        assert_eq!(rows.len(), cols.len());
        if rows.is_empty() {
            return HomPoly::one(self.vars);
        }
        if rows.len() == 1 {
            return self.entries[rows[0]][cols[0]].clone();
        }
        // Laplace expansion along the first row
        let r0 = rows[0];
        let rest: Vec<usize> = rows[1..].to_vec();
        let mut acc: Option<HomPoly<S>> = None;
        for (pos, &c) in cols.iter().enumerate() {
            let e = &self.entries[r0][c];
            if e.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&j| j != c).collect();
            let m = self.minor(&rest, &sub_cols);
            if m.is_zero() {
                continue;
            }
            let mut t = e * &m;
            if pos % 2 == 1 {
                t = -&t;
            }
            acc = Some(match acc {
                None => t,
                Some(a) => &a + &t,
            });
        }
        acc.unwrap_or_else(|| {
            let deg: usize = rows.iter().zip(cols).map(|(&r, &c)| self.entries[r][c].degree()).sum();
            HomPoly::zero(self.vars, deg)
        })
    }

    /// Minor obtained by deleting `rows` and `cols`.
    pub fn complementary_minor(&self, rows: &[usize], cols: &[usize]) -> HomPoly<S> {
        self.minor(&complement(self.n, rows), &complement(self.n, cols))
    }

    pub fn det(&self) -> HomPoly<S> {
        let all: Vec<usize> = (0..self.n).collect();
        self.minor(&all, &all)
    }

    /// Matrix of maximal minors: entry `(i, j)` deletes row `i` and column `j`.
    pub fn minor_matrix(&self) -> Self {
        let entries = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.complementary_minor(&[i], &[j])).collect())
            .collect();
        PolyMatrix { n: self.n, vars: self.vars, entries }
    }

    /// Algebraic (signed) maximal minors, `(−1)^{i+j} L_{ij}`.
    pub fn cofactor_matrix(&self) -> Self {
        let l = self.minor_matrix();
        let entries = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| if (i + j) % 2 == 0 { l.entries[i][j].clone() } else { -&l.entries[i][j] })
                    .collect()
            })
            .collect();
        PolyMatrix { n: self.n, vars: self.vars, entries }
    }
}

/// Minor tables of a linear matrix `ℓ`: `L`, the algebraic minors, and the
/// minor matrix `𝓛` of `L`.
#[derive(Clone)]
pub struct MinorTables<S> {
    pub ell: PolyMatrix<S>,
    pub l: PolyMatrix<S>,
    pub lbold: PolyMatrix<S>,
    pub d: HomPoly<S>,
}

impl<S: Scalar> MinorTables<S> {
    pub fn new(ell: PolyMatrix<S>) -> Self {
        let l = ell.minor_matrix();
        let lbold = ell.cofactor_matrix();
        let d = ell.det();
        MinorTables { ell, l, lbold, d }
    }

    /// `L_{ij}` over tuples: minor of `ℓ` deleting lines `i` and columns `j`.
    pub fn lower(&self, i: &[usize], j: &[usize]) -> HomPoly<S> {
        self.ell.complementary_minor(i, j)
    }

    /// `L^{ij}`: minor of `ℓ` at lines `i`, columns `j`.
    pub fn upper(&self, i: &[usize], j: &[usize]) -> HomPoly<S> {
        self.ell.minor(i, j)
    }

    /// `𝓛_{ij}`: minor of `L` deleting lines `i` and columns `j`.
    pub fn script_lower(&self, i: &[usize], j: &[usize]) -> HomPoly<S> {
        self.l.complementary_minor(i, j)
    }

    /// `𝓛^{ij}`: minor of `L` at lines `i`, columns `j`.
    pub fn script_upper(&self, i: &[usize], j: &[usize]) -> HomPoly<S> {
        self.l.minor(i, j)
    }

    /// Checks `𝓛_{ij} = D^{n−m−1} L^{ij}` and `𝓛^{ij} = D^{m−1} L_{ij}` for all
    /// tuples of length `m`. At `m = 0` only the first identity applies and at
    /// `m = n` only the second; both reduce to `det L = D^{n−1}`.
    pub fn verify_minor_identity(&self, m: usize) -> bool {
        let n = self.ell.size();
        if m > n {
            return false;
        }
        let ts = tuples(n, m);
        for i in &ts {
            for j in &ts {
                if m < n {
                    let lhs = self.script_lower(i, j);
                    let rhs = &self.d.pow(n - m - 1) * &self.upper(i, j);
                    if lhs != rhs {
                        return false;
                    }
                }
                if m >= 1 {
                    let lhs = self.script_upper(i, j);
                    let rhs = &self.d.pow(m - 1) * &self.lower(i, j);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `det L = D^{n−1}`.
    pub fn verify_det(&self) -> bool {
        let n = self.ell.size();
        let lhs = self.l.det();
        let rhs = self.d.pow(n - 1);
        lhs == rhs
    }
}



impl<S: Scalar> std::fmt::Debug for PolyMatrix<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PolyMatrix").field("n", &self.n).field("entries", &self.entries).finish()
    }
}

impl<S: Scalar> std::fmt::Debug for MinorTables<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MinorTables").field("ell", &self.ell).field("d", &self.d).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    type Q = HomPoly<Rational>;

    fn lin(c: [i64; 3]) -> Q {
        Q::from_terms(3, 1, (0..3).map(|i| (crate::poly::MultiIndex::unit(3, i), int(c[i]))))
    }

    #[test]
    fn rotation_frame_minors() {
        // Y1 = x∂1 + y∂2, Y2 = −y∂1 + x∂2, Y3 = z∂3
        let ell = PolyMatrix::new(vec![
            vec![lin([1, 0, 0]), lin([0, 1, 0]), lin([0, 0, 0])],
            vec![lin([0, -1, 0]), lin([1, 0, 0]), lin([0, 0, 0])],
            vec![lin([0, 0, 0]), lin([0, 0, 0]), lin([0, 0, 1])],
        ]);
        let t = MinorTables::new(ell);
        let x2y2 = &lin([1, 0, 0]).pow(2) + &lin([0, 1, 0]).pow(2);
        assert_eq!(t.d, &x2y2 * &lin([0, 0, 1]));
        assert!(t.verify_det());
        for m in 0..=3 {
            assert!(t.verify_minor_identity(m), "m = {m}");
        }
    }
}
