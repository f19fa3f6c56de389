//! Multi-indices and homogeneous polynomials.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use serde::ser::{Serialize, SerializeMap, Serializer};
use smallvec::SmallVec;

use crate::error::Error;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Exponent vector. Entries are non-negative for monomials; spectrum index
/// sets also use `-1`.
///
/// The derived order compares exponent tuples lexicographically, which for
/// monomials is the lex order with `x1 > x2 > ... > xn`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MultiIndex {
    exps: SmallVec<[i32; 4]>,
    degree: i32,
}

impl MultiIndex {
    pub fn new(exps: &[i32]) -> Self {
        MultiIndex { exps: SmallVec::from_slice(exps), degree: exps.iter().sum() }
    }

    pub fn zero(n: usize) -> Self {
        MultiIndex { exps: SmallVec::from_elem(0, n), degree: 0 }
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut m = Self::zero(n);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[i32] {
        &self.exps
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn get(&self, i: usize) -> i32 {
        self.exps[i]
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n(), other.n());
        MultiIndex {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    /// `self - e_from + e_to`.
    pub fn shifted(&self, from: usize, to: usize) -> Self {
        let mut m = self.clone();
        m.exps[from] -= 1;
        m.exps[to] += 1;
        m
    }

    pub fn bump(&self, i: usize, by: i32) -> Self {
        let mut m = self.clone();
        m.exps[i] += by;
        m.degree += by;
        m
    }

    /// `"e1,e2,...,en"`, the key format of polynomial literals.
    pub fn to_key(&self) -> String {
        self.exps.iter().map(i32::to_string).collect::<Vec<_>>().join(",")
    }

    pub fn from_key(key: &str) -> Result<Self, Error> {
        let exps: Result<Vec<i32>, _> = key.split(',').map(|s| s.trim().parse::<i32>()).collect();
        exps.map(|e| Self::new(&e)).map_err(|_| Error::Parse(format!("bad exponent key `{key}`")))
    }
}

/// All exponent vectors of length `n` and total degree `r`, ascending.
pub fn monomial_basis(n: usize, r: usize) -> Vec<MultiIndex> {
    fn rec(n: usize, left: i32, prefix: &mut Vec<i32>, out: &mut Vec<MultiIndex>) {
        if prefix.len() + 1 == n {
            prefix.push(left);
            out.push(MultiIndex::new(prefix));
            prefix.pop();
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            rec(n, left - e, prefix, out);
            prefix.pop();
        }
    }
    assert!(n >= 1, "dimension must be positive");
    let mut out = Vec::new();
    rec(n, r as i32, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Number of monomials of degree `r` in `n` variables.
pub fn monomial_count(n: usize, r: usize) -> usize {
    // C(r + n - 1, n - 1)
    let mut c: usize = 1;
    for i in 0..n - 1 {
        c = c * (r + 1 + i) / (i + 1);
    }
    c
}

/// An indexed monomial basis of `E_r`.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    n: usize,
    r: usize,
    monomials: Vec<MultiIndex>,
    index: HashMap<MultiIndex, usize>,
}

impl MonomialBasis {
    pub fn new(n: usize, r: usize) -> Self {
        let monomials = monomial_basis(n, r);
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        MonomialBasis { n, r, monomials, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[MultiIndex] {
        &self.monomials
    }

    pub fn position(&self, m: &MultiIndex) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// A homogeneous polynomial of degree `degree` in `n` variables.
///
/// Equality ignores the degree label of the zero polynomial.
#[derive(Clone)]
pub struct HomPoly<S> {
    n: usize,
    degree: usize,
    terms: BTreeMap<MultiIndex, S>,
}

impl<S: PartialEq> PartialEq for HomPoly<S> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.terms == other.terms
            && (self.degree == other.degree || self.terms.is_empty())
    }
}

impl<S: Scalar> HomPoly<S> {
    pub fn zero(n: usize, degree: usize) -> Self {
        HomPoly { n, degree, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: S) -> Self {
        Self::monomial(MultiIndex::zero(n), c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, S::one())
    }

    /// The coordinate function `x_i` (0-based).
    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(MultiIndex::unit(n, i), S::one())
    }

    pub fn monomial(m: MultiIndex, c: S) -> Self {
        assert!(m.exps().iter().all(|&e| e >= 0), "negative exponent in monomial");
        let mut p = Self::zero(m.n(), m.degree() as usize);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(n: usize, degree: usize, terms: impl IntoIterator<Item = (MultiIndex, S)>) -> Self {
        let mut p = Self::zero(n, degree);
        for (m, c) in terms {
            assert_eq!(m.degree() as usize, degree, "inhomogeneous term");
            p.add_term(m, c);
        }
        p
    }

    /// Polynomial with integer coefficients on the given exponent tuples.
    pub fn from_ints(terms: &[(&[i32], i64)]) -> Self {
        let n = terms.first().map(|(e, _)| e.len()).expect("at least one term");
        let degree = terms[0].0.iter().sum::<i32>() as usize;
        Self::from_terms(n, degree, terms.iter().map(|(e, c)| (MultiIndex::new(e), S::from_i64(*c))))
    }

    fn add_term(&mut self, m: MultiIndex, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let sum = std::mem::replace(v, S::zero()) + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &S)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &MultiIndex) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    /// Re-labels the degree of a zero polynomial; no-op otherwise.
    pub fn with_degree(mut self, degree: usize) -> Self {
        assert!(self.is_zero() || self.degree == degree, "cannot relabel degree of a nonzero polynomial");
        self.degree = degree;
        self
    }

    fn joint_degree(&self, other: &Self) -> usize {
        assert_eq!(self.n, other.n, "dimension mismatch");
        if self.is_zero() {
            other.degree
        } else if other.is_zero() {
            self.degree
        } else {
            assert_eq!(self.degree, other.degree, "adding polynomials of different degrees");
            self.degree
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.n, self.degree);
        }
        HomPoly {
            n: self.n,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.clone() * c.clone())).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &S) {
        self.degree = self.joint_degree(other);
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v.clone() * c.clone());
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `∂P/∂x_i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n, self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            let e = m.get(i);
            if e > 0 {
                out.add_term(m.bump(i, -1), c.clone() * S::from_i64(e as i64));
            }
        }
        out
    }

    /// `x_i P`.
    pub fn mul_var(&self, i: usize) -> Self {
        HomPoly {
            n: self.n,
            degree: self.degree + 1,
            terms: self.terms.iter().map(|(m, c)| (m.bump(i, 1), c.clone())).collect(),
        }
    }

    /// Action of the linear vector field `Σ y[m][p] x_p ∂_m`.
    pub fn apply_linvf(&self, y: &Matrix<S>) -> Self {
        assert_eq!(y.rows(), self.n);
        assert_eq!(y.cols(), self.n);
        let mut out = Self::zero(self.n, self.degree);
        for (beta, c) in &self.terms {
            for m in 0..self.n {
                let e = beta.get(m);
                if e == 0 {
                    continue;
                }
                let ce = c.clone() * S::from_i64(e as i64);
                for p in 0..self.n {
                    let a = &y[(m, p)];
                    if !a.is_zero() {
                        out.add_term(beta.shifted(m, p), ce.clone() * a.clone());
                    }
                }
            }
        }
        out
    }

    /// `Q(x) = P(Mx)`.
    pub fn substitute_linear(&self, m: &Matrix<S>) -> Self {
        assert_eq!(m.rows(), self.n);
        let k = m.cols();
        let forms: Vec<HomPoly<S>> = (0..self.n)
            .map(|j| {
                Self::from_terms(k, 1, (0..k).map(|p| (MultiIndex::unit(k, p), m[(j, p)].clone())))
            })
            .collect();
        let mut powers: Vec<Vec<HomPoly<S>>> = forms.iter().map(|f| vec![HomPoly::one(k), f.clone()]).collect();
        let mut out = HomPoly::zero(k, self.degree);
        for (beta, c) in &self.terms {
            let mut prod = HomPoly::constant(k, c.clone());
            for j in 0..self.n {
                let e = beta.get(j) as usize;
                while powers[j].len() <= e {
                    let next = powers[j].last().unwrap() * &forms[j];
                    powers[j].push(next);
                }
                if e > 0 {
                    prod = &prod * &powers[j][e];
                }
            }
            out.add_scaled(&prod, &S::one());
        }
        out.with_degree(self.degree)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> HomPoly<T> {
        let mut out = HomPoly::zero(self.n, self.degree);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Coordinates in the ascending monomial basis of `E_degree`.
    pub fn coords(&self, basis: &MonomialBasis) -> Vec<S> {
        assert!(self.is_zero() || basis.degree() == self.degree, "basis degree mismatch");
        let mut v = vec![S::zero(); basis.len()];
        for (m, c) in &self.terms {
            v[basis.position(m).expect("monomial outside basis")] = c.clone();
        }
        v
    }

    pub fn from_coords(basis: &MonomialBasis, coords: &[S]) -> Self {
        assert_eq!(coords.len(), basis.len());
        let mut p = Self::zero(basis.n(), basis.degree());
        for (m, c) in basis.monomials().iter().zip(coords) {
            if !c.is_zero() {
                p.terms.insert(m.clone(), c.clone());
            }
        }
        p
    }

    /// Exact quotient `self / d`, found by solving the linear system for the
    /// coefficients of a candidate quotient.
    pub fn div_exact(&self, d: &Self) -> Result<Self, Error> {
        divides(d, self)
    }

    /// Literal form: exponent keys mapped to scalar strings.
    pub fn to_literal(&self) -> BTreeMap<String, String> {
        self.terms.iter().map(|(m, c)| (m.to_key(), c.to_literal())).collect()
    }

    pub fn from_literal(n: usize, lit: &BTreeMap<String, String>) -> Result<Self, Error> {
        let mut degree = None;
        let mut out = Self::zero(n, 0);
        for (k, v) in lit {
            let m = MultiIndex::from_key(k)?;
            if m.n() != n || m.exps().iter().any(|&e| e < 0) {
                return Err(Error::Parse(format!("exponent key `{k}` invalid for n = {n}")));
            }
            match degree {
                None => degree = Some(m.degree() as usize),
                Some(d) if d as i32 != m.degree() => {
                    return Err(Error::Parse("inhomogeneous polynomial literal".into()))
                }
                _ => {}
            }
            out.degree = m.degree() as usize;
            out.add_term(m, S::parse_literal(v)?);
        }
        Ok(out)
    }
}

/// Exact division `q / d`.
pub fn divides<S: Scalar>(d: &HomPoly<S>, q: &HomPoly<S>) -> Result<HomPoly<S>, Error> {
    if d.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    assert_eq!(d.n(), q.n(), "dimension mismatch");
    if q.is_zero() {
        return Ok(HomPoly::zero(q.n(), q.degree().saturating_sub(d.degree())));
    }
    if q.degree() < d.degree() {
        return Err(Error::NotDivisible);
    }
    let n = q.n();
    let tb = MonomialBasis::new(n, q.degree() - d.degree());
    let qb = MonomialBasis::new(n, q.degree());
    let cols: Vec<Vec<S>> =
        tb.monomials().iter().map(|m| (d * &HomPoly::monomial(m.clone(), S::one())).coords(&qb)).collect();
    let a = Matrix::from_cols(qb.len(), &cols);
    a.solve(&q.coords(&qb)).map(|t| HomPoly::from_coords(&tb, &t)).ok_or(Error::NotDivisible)
}

impl<S: Scalar> Add for &HomPoly<S> {
    type Output = HomPoly<S>;
    fn add(self, rhs: Self) -> HomPoly<S> {
        let mut out = self.clone();
        out.add_scaled(rhs, &S::one());
        out
    }
}

impl<S: Scalar> Sub for &HomPoly<S> {
    type Output = HomPoly<S>;
    fn sub(self, rhs: Self) -> HomPoly<S> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-S::one());
        out
    }
}

impl<S: Scalar> Neg for &HomPoly<S> {
    type Output = HomPoly<S>;
    fn neg(self) -> HomPoly<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> Mul for &HomPoly<S> {
    type Output = HomPoly<S>;
    fn mul(self, rhs: Self) -> HomPoly<S> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let mut out = HomPoly::zero(self.n, self.degree + rhs.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.add(b), ca.clone() * cb.clone());
            }
        }
        out
    }
}

fn var_name(n: usize, i: usize) -> String {
    const SHORT: [&str; 4] = ["x", "y", "z", "w"];
    if n <= 4 {
        SHORT[i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

impl<S: Scalar> fmt::Display for HomPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest monomial first, the conventional reading order
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut mono = Vec::new();
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => mono.push(var_name(self.n, i)),
                    _ => mono.push(format!("{}^{}", var_name(self.n, i), e)),
                }
            }
            let lit = c.to_literal();
            let (neg, body) = match lit.strip_prefix('-') {
                Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
                _ => (false, lit.clone()),
            };
            let body = if body.contains(['+', '-', ' ']) { format!("({body})") } else { body };
            let sep = match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            write!(f, "{sep}")?;
            if mono.is_empty() {
                write!(f, "{body}")?;
            } else if body == "1" {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{body}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for HomPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomPoly[n={}, r={}]({})", self.n, self.degree, self)
    }
}

impl<S: Scalar> Serialize for HomPoly<S> {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            map.serialize_entry(&m.to_key(), &c.to_literal())?;
        }
        map.end()
    }
}

impl<S: Scalar> HomPoly<S> {
    /// True when the polynomial is a nonzero constant multiple of `other`.
    pub fn is_proportional_to(&self, other: &Self) -> bool {
        let (Some((m, c)), false) = (self.terms.iter().next(), other.is_zero()) else {
            return false;
        };
        let c2 = other.coeff(m);
        if c2.is_zero() {
            return false;
        }
        other.scale(&(c.clone() / c2)) == *self
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0 && self.coeff(&MultiIndex::zero(self.n)).is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat, Rational};

    type Q = HomPoly<Rational>;

    fn x(i: usize) -> Q {
        Q::var(3, i)
    }

    #[test]
    fn basis_order_and_counts() {
        let b = monomial_basis(3, 2);
        let keys: Vec<String> = b.iter().map(MultiIndex::to_key).collect();
        assert_eq!(keys, ["0,0,2", "0,1,1", "0,2,0", "1,0,1", "1,1,0", "2,0,0"]);
        assert_eq!(monomial_basis(3, 0).len(), 1);
        assert_eq!(monomial_basis(3, 10).len(), 66);
        for n in 1..5 {
            for r in 0..6 {
                let b = monomial_basis(n, r);
                assert_eq!(b.len(), monomial_count(n, r));
                assert!(b.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn euler_field_scales_by_degree() {
        let p = &(&x(0) * &x(1)) + &(&x(2) * &x(2)).scale(&rat(-3, 2));
        let e = Matrix::identity(3);
        assert_eq!(p.apply_linvf(&e), p.scale(&int(2)));
    }

    #[test]
    fn linvf_on_monomial() {
        // z ∂_z applied to xyz
        let mut y = Matrix::zeros(3, 3);
        y[(2, 2)] = int(1);
        let p = &(&x(0) * &x(1)) * &x(2);
        assert_eq!(p.apply_linvf(&y), p);
    }

    #[test]
    fn exact_division() {
        let q2 = &(&x(0) * &x(0)) + &(&x(1) * &x(1));
        let d = &q2 * &x(2);
        let q = &d * &d;
        assert_eq!(divides(&d, &q).unwrap(), d);
        let x4 = x(0).pow(4);
        assert_eq!(divides(&d, &x4), Err(Error::NotDivisible));
        assert!(divides(&d, &Q::zero(3, 5)).unwrap().is_zero());
        assert_eq!(divides(&Q::zero(3, 1), &x4), Err(Error::ZeroDivisor));
    }

    #[test]
    fn substitution_composes() {
        let p = &(&x(0) * &x(1)) + &x(2).pow(2);
        let m = Matrix::from_rows(vec![
            vec![int(1), int(2), int(0)],
            vec![int(0), int(1), int(0)],
            vec![int(3), int(0), int(1)],
        ]);
        // (x + 2y) y + (3x + z)^2
        let expect = &(&(&x(0) + &x(1).scale(&int(2))) * &x(1)) + &(&x(0).scale(&int(3)) + &x(2)).pow(2);
        assert_eq!(p.substitute_linear(&m), expect);
    }

    #[test]
    fn literal_round_trip() {
        let p = &x(0).pow(2).scale(&rat(1, 3)) - &(&x(1) * &x(2));
        let lit = p.to_literal();
        assert_eq!(Q::from_literal(3, &lit).unwrap(), p);
        assert_eq!(p.to_string(), "1/3*x^2 - y*z");
    }
}
