//! Polyvector fields with polynomial coefficients in the canonical ∂-frame.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{Serialize, SerializeSeq, SerializeStruct, Serializer};

use crate::error::Error;
use crate::grassmann::{tuples, TupleIndex};
use crate::linalg::Matrix;
use crate::poly::{HomPoly, MonomialBasis};
use crate::scalar::Scalar;

/// Strictly increasing 0-based index tuple `k1 < ... < kp`.
pub type Tuple = Vec<usize>;

/// A `p`-vector field whose coefficients are homogeneous of degree `degree`.
#[derive(Clone)]
pub struct MultiVec<S> {
    n: usize,
    p: usize,
    degree: usize,
    coeffs: BTreeMap<Tuple, HomPoly<S>>,
}

impl<S: PartialEq> PartialEq for MultiVec<S> {
    fn eq(&self, other: &Self) -> bool {
        // every zero is the same zero, whatever shape it was built with
        self.n == other.n
            && self.coeffs == other.coeffs
            && (self.coeffs.is_empty() || (self.p == other.p && self.degree == other.degree))
    }
}

/// Sorts `idx` in place and returns the permutation sign, or `None` when an
/// index repeats.
pub fn sort_with_sign(idx: &mut [usize]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

impl<S: Scalar> MultiVec<S> {
    pub fn zero(n: usize, p: usize, degree: usize) -> Self {
        assert!(p <= n, "wedge degree exceeds dimension");
        MultiVec { n, p, degree, coeffs: BTreeMap::new() }
    }

    pub fn function(f: HomPoly<S>) -> Self {
        let mut m = Self::zero(f.n(), 0, f.degree());
        m.add_term(Vec::new(), &f, 1);
        m
    }

    /// `f ∂_{i1} ∧ ... ∧ ∂_{ip}` for arbitrary (possibly unsorted) indices.
    pub fn term(indices: &[usize], f: HomPoly<S>) -> Self {
        let mut idx = indices.to_vec();
        let mut m = Self::zero(f.n(), idx.len(), f.degree());
        if let Some(sign) = sort_with_sign(&mut idx) {
            m.add_term(idx, &f, sign);
        }
        m
    }

    /// The linear vector field `Σ a[m][p] x_p ∂_m`.
    pub fn linear_field(a: &Matrix<S>) -> Self {
        let n = a.rows();
        let mut m = Self::zero(n, 1, 1);
        for row in 0..n {
            let f = HomPoly::from_terms(
                n,
                1,
                (0..n).map(|p| (crate::poly::MultiIndex::unit(n, p), a[(row, p)].clone())),
            );
            m.add_term(vec![row], &f, 1);
        }
        m
    }

    /// A 3D bivector from its components on `∂23, ∂31, ∂12`.
    pub fn bivector3(b23: HomPoly<S>, b31: HomPoly<S>, b12: HomPoly<S>) -> Self {
        let d = [&b23, &b31, &b12].iter().find(|b| !b.is_zero()).map_or(b23.degree(), |b| b.degree());
        let mut m = Self::zero(3, 2, d);
        m.add_term(vec![1, 2], &b23, 1);
        m.add_term(vec![0, 2], &b31, -1);
        m.add_term(vec![0, 1], &b12, 1);
        m
    }

    /// Function-induced bivector `Π_f = ∂1f ∂23 + ∂2f ∂31 + ∂3f ∂12` in dimension 3.
    pub fn pi_f(f: &HomPoly<S>) -> Self {
        assert_eq!(f.n(), 3, "Π_f is defined in dimension 3");
        Self::bivector3(f.partial(0), f.partial(1), f.partial(2))
    }

    fn add_term(&mut self, key: Tuple, f: &HomPoly<S>, sign: i32) {
        if f.is_zero() {
            return;
        }
        assert_eq!(key.len(), self.p);
        if self.coeffs.is_empty() {
            self.degree = f.degree();
        }
        let c = if sign > 0 { S::one() } else { -S::one() };
        let entry = self.coeffs.entry(key.clone()).or_insert_with(|| HomPoly::zero(f.n(), f.degree()));
        entry.add_scaled(f, &c);
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Wedge degree.
    pub fn p(&self) -> usize {
        self.p
    }

    /// Coefficient degree.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, key: &[usize]) -> HomPoly<S> {
        self.coeffs.get(key).cloned().unwrap_or_else(|| HomPoly::zero(self.n, self.degree))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tuple, &HomPoly<S>)> {
        self.coeffs.iter()
    }

    pub fn with_degree(mut self, degree: usize) -> Self {
        assert!(self.is_zero() || self.degree == degree);
        self.degree = degree;
        self
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    fn combine(&self, other: &Self, sign: i32) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        if other.is_zero() {
            return self.clone();
        }
        let mut out = self.clone();
        if out.is_zero() {
            out.p = other.p;
            out.degree = other.degree;
        }
        assert!(self.is_zero() || self.p == other.p, "shape mismatch");
        for (k, f) in &other.coeffs {
            out.add_term(k.clone(), f, sign);
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.n, self.p, self.degree);
        for (k, f) in &self.coeffs {
            out.add_term(k.clone(), &f.scale(c), 1);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    pub fn mul_poly(&self, f: &HomPoly<S>) -> Self {
        let mut out = Self::zero(self.n, self.p, self.degree + f.degree());
        for (k, g) in &self.coeffs {
            out.add_term(k.clone(), &(g * f), 1);
        }
        out
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T + Copy) -> MultiVec<T> {
        let mut out = MultiVec::zero(self.n, self.p, self.degree);
        for (k, g) in &self.coeffs {
            out.add_term(k.clone(), &g.map(f), 1);
        }
        out
    }

    pub fn wedge(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let p = self.p + other.p;
        if p > self.n {
            return Self::zero(self.n, 0, 0);
        }
        let mut out = Self::zero(self.n, p, self.degree + other.degree);
        for (a, f) in &self.coeffs {
            for (b, g) in &other.coeffs {
                let mut idx: Vec<usize> = a.iter().chain(b).copied().collect();
                if let Some(sign) = sort_with_sign(&mut idx) {
                    out.add_term(idx, &(f * g), sign);
                }
            }
        }
        out
    }

    fn partial_x(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n, self.p, self.degree.saturating_sub(1));
        for (k, f) in &self.coeffs {
            out.add_term(k.clone(), &f.partial(i), 1);
        }
        out
    }

    /// Right derivative with respect to the odd variable `ξ_i = ∂_i`.
    fn partial_xi(&self, i: usize) -> Self {
        assert!(self.p >= 1);
        let mut out = Self::zero(self.n, self.p - 1, self.degree);
        for (k, f) in &self.coeffs {
            if let Some(pos) = k.iter().position(|&j| j == i) {
                let sign = if (self.p - 1 - pos).is_multiple_of(2) { 1 } else { -1 };
                let rest: Tuple = k.iter().copied().filter(|&j| j != i).collect();
                out.add_term(rest, f, sign);
            }
        }
        out
    }

    /// Schouten–Nijenhuis bracket, expanded as a biderivation:
    /// `[A,B] = Σ_i ∂A/∂ξ_i ∧ ∂B/∂x_i − (−1)^{(a−1)(b−1)} ∂B/∂ξ_i ∧ ∂A/∂x_i`.
    ///
    /// With this convention `[X, f] = X(f)` for a vector field `X`.
    pub fn schouten(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let (a, b) = (self.p, other.p);
        let degree = (self.degree + other.degree).saturating_sub(1);
        if a + b == 0 || a + b - 1 > n {
            return Self::zero(n, 0, degree);
        }
        let mut out = Self::zero(n, a + b - 1, degree);
        // (−1)^{(a−1)(b−1)} is −1 exactly when both degrees are even
        let swap_sign = if a % 2 == 0 && b % 2 == 0 { -1 } else { 1 };
        for i in 0..n {
            if a >= 1 {
                let t = self.partial_xi(i).wedge(&other.partial_x(i));
                out = out.add(&t.with_degree_of(&out));
            }
            if b >= 1 {
                let t = other.partial_xi(i).wedge(&self.partial_x(i));
                let t = t.with_degree_of(&out);
                out = if swap_sign > 0 { out.sub(&t) } else { out.add(&t) };
            }
        }
        out
    }

    fn with_degree_of(self, other: &Self) -> Self {
        if self.is_zero() {
            Self::zero(other.n, other.p, other.degree)
        } else {
            self
        }
    }

    /// Koszul divergence `δ = φ⁻¹ ∘ d ∘ φ` for the standard volume form:
    /// `δ(f ∂_K) = Σ_i (−1)^{p−i} ∂_{k_i} f ∂_{K∖k_i}`.
    pub fn koszul_div(&self) -> Self {
        if self.p == 0 {
            return Self::zero(self.n, 0, self.degree.saturating_sub(1));
        }
        let mut out = Self::zero(self.n, self.p - 1, self.degree.saturating_sub(1));
        for (k, f) in &self.coeffs {
            for (pos, &ki) in k.iter().enumerate() {
                let sign = if (self.p - 1 - pos).is_multiple_of(2) { 1 } else { -1 };
                let rest: Tuple = k.iter().copied().filter(|&j| j != ki).collect();
                out.add_term(rest, &f.partial(ki), sign);
            }
        }
        out
    }

    /// Curl vector field `K(Λ) = δ(Λ)` of a bivector.
    pub fn curl(&self) -> Self {
        assert_eq!(self.p, 2, "curl is defined for bivectors");
        self.koszul_div()
    }

    pub fn is_poisson(&self) -> bool {
        self.p == 2 && self.schouten(self).is_zero()
    }

    pub fn is_k_exact(&self) -> bool {
        self.curl().is_zero()
    }

    /// A linear Liouville field `X` with `Λ = [Λ, X]`, when one exists.
    pub fn lp_exact_witness(&self) -> Option<Self> {
        assert_eq!(self.p, 2);
        let n = self.n;
        let basis = MultiVecBasis::new(n, 2, self.degree);
        let fields: Vec<Matrix<S>> = (0..n * n)
            .map(|e| {
                let mut a = Matrix::zeros(n, n);
                a[(e / n, e % n)] = S::one();
                a
            })
            .collect();
        let cols: Vec<Vec<S>> =
            fields.iter().map(|a| basis.coords(&self.schouten(&Self::linear_field(a)))).collect();
        let sol = Matrix::from_cols(basis.len(), &cols).solve(&basis.coords(self))?;
        let a = Matrix::from_fn(n, n, |i, j| sol[i * n + j].clone());
        Some(Self::linear_field(&a))
    }

    pub fn to_records(&self) -> Vec<(Vec<usize>, BTreeMap<String, String>)> {
        self.coeffs.iter().map(|(k, f)| (k.iter().map(|i| i + 1).collect(), f.to_literal())).collect()
    }

    /// Builds a multivector from 1-based `(indices, literal)` records.
    pub fn from_records(n: usize, p: usize, records: &[(Vec<usize>, BTreeMap<String, String>)]) -> Result<Self, Error> {
        let mut out = Self::zero(n, p, 0);
        for (idx, lit) in records {
            if idx.len() != p || idx.iter().any(|&i| i == 0 || i > n) {
                return Err(Error::Parse(format!("bad index tuple {idx:?} for n = {n}, p = {p}")));
            }
            let f = HomPoly::from_literal(n, lit)?;
            if !out.is_zero() && !f.is_zero() && f.degree() != out.degree {
                return Err(Error::Parse("multivector coefficients of different degrees".into()));
            }
            let zero_based: Vec<usize> = idx.iter().map(|i| i - 1).collect();
            out = out.add(&Self::term(&zero_based, f));
        }
        Ok(out)
    }
}

/// Poisson-checked coboundary `∂_Λ C = [Λ, C]`.
pub fn lp_coboundary<S: Scalar>(lambda: &MultiVec<S>, c: &MultiVec<S>) -> Result<MultiVec<S>, Error> {
    if !lambda.is_poisson() {
        return Err(Error::NotPoisson);
    }
    Ok(lambda.schouten(c))
}

/// Coordinates of the slice of `p`-vectors with coefficient degree `d`:
/// tuple-major, then ascending monomials.
#[derive(Clone, Debug)]
pub struct MultiVecBasis {
    n: usize,
    p: usize,
    monos: MonomialBasis,
    tuples: TupleIndex,
}

impl MultiVecBasis {
    pub fn new(n: usize, p: usize, d: usize) -> Self {
        MultiVecBasis { n, p, monos: MonomialBasis::new(n, d), tuples: TupleIndex::new(n, p) }
    }

    pub fn len(&self) -> usize {
        self.monos.len() * self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.monos.degree()
    }

    pub fn monomials(&self) -> &MonomialBasis {
        &self.monos
    }

    pub fn element<S: Scalar>(&self, idx: usize) -> MultiVec<S> {
        let nm = self.monos.len();
        let t = &self.tuples.tuples()[idx / nm];
        let m = self.monos.monomials()[idx % nm].clone();
        MultiVec::term(t, HomPoly::monomial(m, S::one()))
    }

    pub fn elements<S: Scalar>(&self) -> Vec<MultiVec<S>> {
        (0..self.len()).map(|i| self.element(i)).collect()
    }

    pub fn coords<S: Scalar>(&self, m: &MultiVec<S>) -> Vec<S> {
        assert_eq!((m.n(), m.p()), (self.n, self.p), "shape mismatch");
        let nm = self.monos.len();
        let mut v = vec![S::zero(); self.len()];
        for (k, f) in m.terms() {
            let t = self.tuples.position(k).expect("tuple outside basis");
            for (mono, c) in f.terms() {
                let j = self.monos.position(mono).expect("monomial degree mismatch");
                v[t * nm + j] = c.clone();
            }
        }
        v
    }

    pub fn from_coords<S: Scalar>(&self, v: &[S]) -> MultiVec<S> {
        assert_eq!(v.len(), self.len());
        let nm = self.monos.len();
        let mut out = MultiVec::zero(self.n, self.p, self.monos.degree());
        for (t, key) in self.tuples.tuples().iter().enumerate() {
            let f = HomPoly::from_coords(&self.monos, &v[t * nm..(t + 1) * nm]);
            out.add_term(key.clone(), &f, 1);
        }
        out
    }
}

/// Matrix of `C ↦ [Λ, C]` from `p`-vectors of degree `d` to `(p+1)`-vectors
/// of degree `d + deg Λ − 1`.
pub fn bracket_matrix<S: Scalar>(lambda: &MultiVec<S>, p: usize, d: usize) -> Matrix<S> {
    let n = lambda.n();
    let src = MultiVecBasis::new(n, p, d);
    let q = p + lambda.p() - 1;
    let tgt_len = if q <= n { MultiVecBasis::new(n, q, d + lambda.degree() - 1).len() } else { 0 };
    if q > n || src.is_empty() {
        return Matrix::zeros(tgt_len, src.len());
    }
    let tgt = MultiVecBasis::new(n, q, d + lambda.degree() - 1);
    let cols: Vec<Vec<S>> = {
        use rayon::prelude::*;
        (0..src.len()).into_par_iter().map(|i| tgt.coords(&lambda.schouten(&src.element(i)))).collect()
    };
    Matrix::from_cols(tgt.len(), &cols)
}

impl<S: Scalar> fmt::Display for MultiVec<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(k, g)| {
                if k.is_empty() {
                    return format!("{g}");
                }
                let d: String = if self.n <= 4 {
                    let digits: String = k.iter().map(|i| (i + 1).to_string()).collect();
                    format!("∂{digits}")
                } else {
                    k.iter().map(|&i| format!("∂{}", i + 1)).collect::<Vec<_>>().join("∧")
                };
                format!("({g}) {d}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<S: Scalar> fmt::Debug for MultiVec<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiVec[n={}, p={}, d={}]({})", self.n, self.p, self.degree, self)
    }
}

struct Record<'a, S: Scalar>(&'a Tuple, &'a HomPoly<S>);

impl<S: Scalar> Serialize for Record<'_, S> {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
        let mut st = serializer.serialize_struct("Record", 2)?;
        let idx: Vec<usize> = self.0.iter().map(|i| i + 1).collect();
        st.serialize_field("indices", &idx)?;
        st.serialize_field("poly", self.1)?;
        st.end()
    }
}

impl<S: Scalar> Serialize for MultiVec<S> {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for (k, f) in &self.coeffs {
            seq.serialize_element(&Record(k, f))?;
        }
        seq.end()
    }
}

/// All increasing tuples, re-exported for callers that only need the list.
pub fn index_tuples(n: usize, p: usize) -> Vec<Tuple> {
    tuples(n, p)
}

impl<S: Scalar> MultiVec<S> {
    /// Leading scalar used when comparing lines of multivectors.
    pub fn is_multiple_of(&self, other: &Self) -> bool {
        let Some((k, f)) = self.coeffs.iter().next() else {
            return other.is_zero();
        };
        let g = other.coeff(k);
        if g.is_zero() {
            return false;
        }
        let (m, c) = f.terms().next().expect("nonzero coefficient");
        let cg = g.coeff(m);
        if cg.is_zero() {
            return false;
        }
        other.scale(&(c.clone() / cg)) == *self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    type Q = HomPoly<Rational>;
    type MV = MultiVec<Rational>;

    fn x(i: usize) -> Q {
        Q::var(3, i)
    }

    fn d(i: usize) -> MV {
        MV::term(&[i], Q::one(3))
    }

    #[test]
    fn wedge_basics() {
        let w = d(1).wedge(&d(2));
        assert_eq!(w, MV::term(&[1, 2], Q::one(3)));
        assert!(d(0).wedge(&d(0)).is_zero());
        let a = MV::term(&[0], x(0));
        let b = MV::term(&[1], x(1));
        assert_eq!(a.wedge(&b), MV::term(&[0, 1], &x(0) * &x(1)));
        assert_eq!(b.wedge(&a), MV::term(&[0, 1], &x(0) * &x(1)).neg());
    }

    #[test]
    fn bracket_conventions() {
        let f = &(&x(0) * &x(0)) * &x(1);
        let xf = MV::term(&[0], &x(0) * &x(1));
        // [X, f] = X(f)
        let lhs = xf.schouten(&MV::function(f.clone()));
        assert_eq!(lhs, MV::function(&(&x(0) * &x(1)) * &f.partial(0)));
        // [∂12, f] = −∂1f ∂2 + ∂2f ∂1
        let b = MV::term(&[0, 1], Q::one(3)).schouten(&MV::function(f.clone()));
        let expect = MV::term(&[1], f.partial(0)).neg().add(&MV::term(&[0], f.partial(1)));
        assert_eq!(b, expect);
        let g = MV::function(x(2));
        assert!(MV::function(f).schouten(&g).is_zero());
    }

    #[test]
    fn curl_of_the_lambda10_twist() {
        let f = &(&x(1) * &x(1)) - &(&x(0) * &x(2)).scale(&int(2));
        let l = MV::term(&[1, 2], f);
        let k = l.curl();
        let expect = MV::term(&[1], x(0).scale(&int(-2))).add(&MV::term(&[2], x(1).scale(&int(-2))));
        assert_eq!(k, expect);
        assert!(l.is_poisson());
        assert!(!l.is_k_exact());
    }

    #[test]
    fn divergence_of_vector_field() {
        let v = MV::term(&[0], &x(0) * &x(1)).add(&MV::term(&[2], &x(2) * &x(2)));
        let div = &x(1) + &x(2).scale(&int(2));
        assert_eq!(v.koszul_div(), MV::function(div));
        assert!(MV::term(&[0, 1], Q::one(3)).koszul_div().is_zero());
    }

    #[test]
    fn pi_z3_is_k_exact_poisson() {
        let p = MV::pi_f(&x(2).pow(3).scale(&Rational::new(1.into(), 3.into())));
        assert_eq!(p, MV::term(&[0, 1], &x(2) * &x(2)));
        assert!(p.is_poisson());
        assert!(p.is_k_exact());
    }

    #[test]
    fn basis_coordinates_round_trip() {
        let b = MultiVecBasis::new(3, 2, 2);
        assert_eq!(b.len(), 18);
        let m = MV::bivector3(&x(0) * &x(1), &x(2) * &x(2), (&x(1) * &x(1)).scale(&int(-3)));
        assert_eq!(b.from_coords(&b.coords(&m)), m);
    }
}
