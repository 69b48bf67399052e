//! Exact sparse multivariate and dense univariate polynomial arithmetic over
//! any `FieldDescriptor`, plus evaluation and invertible linear substitution.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::fields::{FieldDescriptor, FieldElement};

/// Total-degree cap; poly_pow and poly_arith error past this instead of
/// letting the chain's exponential degree growth run away.
pub const MAX_TOTAL_DEGREE: u64 = 1 << 20;

/// Exponent vector with graded-lexicographic order (total degree first, then
/// lexicographic on exponents). BTreeMap iteration is ascending; printing
/// iterates in reverse to put the highest term first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial. No stored coefficient is zero; the zero
/// polynomial has an empty term map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    field: FieldDescriptor,
    nvars: usize,
    terms: BTreeMap<Monomial, FieldElement>,
}

/// A point of k^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub coords: Vec<FieldElement>,
}

impl MultiPoly {
    pub fn zero(field: FieldDescriptor, nvars: usize) -> Self {
        MultiPoly {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: FieldDescriptor, nvars: usize, c: FieldElement) -> Self {
        let mut p = Self::zero(field, nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial(vec![0; nvars]), c);
        }
        p
    }

    pub fn one(field: FieldDescriptor, nvars: usize) -> Self {
        let one = field.one();
        Self::constant(field, nvars, one)
    }

    /// The variable X_j (zero-based).
    pub fn variable(field: FieldDescriptor, nvars: usize, j: usize) -> Self {
        assert!(j < nvars);
        let mut exps = vec![0u32; nvars];
        exps[j] = 1;
        let mut p = Self::zero(field.clone(), nvars);
        p.terms.insert(Monomial(exps), field.one());
        p
    }

    pub fn from_terms(
        field: FieldDescriptor,
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, FieldElement)>,
    ) -> Result<Self> {
        let mut p = Self::zero(field, nvars);
        for (exps, coeff) in terms {
            if exps.len() != nvars {
                return Err(Error::ArityMismatch);
            }
            p.add_term(Monomial(exps), coeff)?;
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: FieldElement) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        if m.total_degree() > MAX_TOTAL_DEGREE {
            return Err(Error::DegreeOverflow(m.total_degree()));
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(existing) => {
                let sum = self.field.add(&existing, &c)?;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exps: &[u32]) -> FieldElement {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), self.field.neg(c)?)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.field.clone(), self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let exps: Vec<u32> = ma
                    .0
                    .iter()
                    .zip(&mb.0)
                    .map(|(&x, &y)| x.checked_add(y))
                    .collect::<Option<_>>()
                    .ok_or(Error::DegreeOverflow(u64::MAX))?;
                out.add_term(Monomial(exps), self.field.mul(ca, cb)?)?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Self> {
        let mut out = Self::zero(self.field.clone(), self.nvars);
        for (m, coeff) in &self.terms {
            out.add_term(m.clone(), self.field.mul(coeff, c)?)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Result<Self> {
        let minus_one = self.field.from_int(-1);
        self.scale(&minus_one)
    }

    /// f^e by repeated squaring; f^0 = 1.
    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut base = self.clone();
        let mut e = e;
        let mut acc = Self::one(self.field.clone(), self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Total degree; -1 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.total_degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    /// Degree in variable j; -1 for the zero polynomial.
    pub fn degree_in(&self, j: usize) -> i64 {
        self.terms
            .keys()
            .map(|m| m.0[j] as i64)
            .max()
            .unwrap_or(-1)
    }

    /// Exact value at a point.
    pub fn eval(&self, a: &Point) -> Result<FieldElement> {
        if a.coords.len() != self.nvars {
            return Err(Error::ArityMismatch);
        }
        // per-variable power tables up to the max exponent seen
        let mut max_exp = vec![0u32; self.nvars];
        for m in self.terms.keys() {
            for (j, &e) in m.0.iter().enumerate() {
                max_exp[j] = max_exp[j].max(e);
            }
        }
        let mut powers: Vec<Vec<FieldElement>> = Vec::with_capacity(self.nvars);
        for (coord, &exp) in a.coords.iter().zip(&max_exp) {
            let mut table = vec![self.field.one()];
            for _ in 0..exp {
                let next = self.field.mul(table.last().unwrap(), coord)?;
                table.push(next);
            }
            powers.push(table);
        }
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (j, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = self.field.mul(&term, &powers[j][e as usize])?;
                }
            }
            acc = self.field.add(&acc, &term)?;
        }
        Ok(acc)
    }

    /// The degree-d homogeneous part.
    pub fn homogeneous_part(&self, d: u64) -> Self {
        let mut out = Self::zero(self.field.clone(), self.nvars);
        for (m, c) in &self.terms {
            if m.total_degree() == d {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// f with each X_j replaced by the j-th linear form of the transform.
    pub fn substitute_linear(&self, t: &LinearTransform) -> Result<Self> {
        if t.nvars() != self.nvars {
            return Err(Error::ArityMismatch);
        }
        if t.field != self.field {
            return Err(Error::FieldMismatch);
        }
        if !t.is_invertible()? {
            return Err(Error::SingularTransform);
        }
        let forms: Vec<MultiPoly> = (0..self.nvars)
            .map(|j| t.linear_form(j))
            .collect::<Result<_>>()?;
        let mut out = Self::zero(self.field.clone(), self.nvars);
        // cache powers of each form per exponent actually used
        let mut power_cache: Vec<BTreeMap<u32, MultiPoly>> = vec![BTreeMap::new(); self.nvars];
        for (m, c) in &self.terms {
            let mut term = Self::constant(self.field.clone(), self.nvars, c.clone());
            for (j, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !power_cache[j].contains_key(&e) {
                    let p = forms[j].pow(e)?;
                    power_cache[j].insert(e, p);
                }
                term = term.mul(&power_cache[j][&e])?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Set the listed variables to given constants, keeping the rest; the
    /// result still has nvars variables.
    pub fn substitute_constants(&self, values: &[(usize, FieldElement)]) -> Result<Self> {
        let mut out = Self::zero(self.field.clone(), self.nvars);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = m.0.clone();
            for (j, v) in values {
                for _ in 0..exps[*j] {
                    coeff = self.field.mul(&coeff, v)?;
                }
                exps[*j] = 0;
            }
            out.add_term(Monomial(exps), coeff)?;
        }
        Ok(out)
    }
}

/// The spec-level entry points over MultiPoly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(f: &MultiPoly, g: &MultiPoly, op: PolyOp) -> Result<MultiPoly> {
    match op {
        PolyOp::Add => f.add(g),
        PolyOp::Sub => f.sub(g),
        PolyOp::Mul => f.mul(g),
    }
}

/// Dense univariate polynomial, constant term first, leading coefficient
/// nonzero unless zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    field: FieldDescriptor,
    coeffs: Vec<FieldElement>,
}

impl UniPoly {
    pub fn new(field: FieldDescriptor, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn zero(field: FieldDescriptor) -> Self {
        UniPoly {
            field,
            coeffs: vec![],
        }
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    /// Constant term first.
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn eval(&self, t: &FieldElement) -> Result<FieldElement> {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.field.add(&self.field.mul(&acc, t)?, c)?;
        }
        Ok(acc)
    }

    /// All roots in the coefficient field: exhaustive over finite fields,
    /// rational-root test over Q on the cleared-denominator integer form.
    pub fn roots(&self) -> Result<Vec<FieldElement>> {
        match &self.field {
            FieldDescriptor::Rationals => self.rational_roots(),
            _ => {
                let mut out = vec![];
                for t in self.field.enumerate()? {
                    if self.eval(&t)?.is_zero() {
                        out.push(t);
                    }
                }
                Ok(out)
            }
        }
    }

    fn rational_roots(&self) -> Result<Vec<FieldElement>> {
        if self.is_zero() {
            // the zero polynomial vanishes everywhere; report no finite list
            return Err(Error::InfiniteField);
        }
        // clear denominators to integer coefficients
        let mut lcm = BigInt::from(1);
        for c in &self.coeffs {
            if let FieldElement::Rational(q) = c {
                lcm = lcm.lcm(q.denom());
            }
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| match c {
                FieldElement::Rational(q) => q.numer() * (&lcm / q.denom()),
                _ => unreachable!(),
            })
            .collect();
        let mut roots = vec![];
        // strip the power of T: zero constant terms give the root 0
        let first_nonzero = ints.iter().position(|c| !c.is_zero()).unwrap();
        if first_nonzero > 0 {
            roots.push(self.field.zero());
        }
        let stripped = &ints[first_nonzero..];
        if stripped.len() > 1 {
            let constant = stripped[0].abs();
            let leading = stripped.last().unwrap().abs();
            for num in divisors(&constant) {
                for den in divisors(&leading) {
                    for sign in [1i64, -1] {
                        let cand = self.field.from_ratio(&(&num * sign), &den)?;
                        if self.eval(&cand)?.is_zero() && !roots.contains(&cand) {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
        Ok(roots)
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return vec![];
    }
    let mut small = vec![];
    let mut large = vec![];
    let root = n.sqrt();
    let mut d = BigInt::from(1);
    while d <= root {
        if (n % &d).is_zero() {
            small.push(d.clone());
            let q = n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Invertible linear change of variables with translation: X_j is replaced by
/// sum_i matrix[j][i] X_i + offset[j].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearTransform {
    field: FieldDescriptor,
    pub matrix: Vec<Vec<FieldElement>>,
    pub offset: Vec<FieldElement>,
}

impl LinearTransform {
    pub fn new(
        field: FieldDescriptor,
        matrix: Vec<Vec<FieldElement>>,
        offset: Vec<FieldElement>,
    ) -> Self {
        LinearTransform {
            field,
            matrix,
            offset,
        }
    }

    pub fn identity(field: FieldDescriptor, nvars: usize) -> Self {
        let matrix = (0..nvars)
            .map(|i| {
                (0..nvars)
                    .map(|j| if i == j { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        let offset = vec![field.zero(); nvars];
        LinearTransform {
            field,
            matrix,
            offset,
        }
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.matrix.len()
    }

    fn linear_form(&self, j: usize) -> Result<MultiPoly> {
        let n = self.nvars();
        let mut p = MultiPoly::constant(self.field.clone(), n, self.offset[j].clone());
        for (i, c) in self.matrix[j].iter().enumerate() {
            if !c.is_zero() {
                let v = MultiPoly::variable(self.field.clone(), n, i).scale(c)?;
                p = p.add(&v)?;
            }
        }
        Ok(p)
    }

    /// Gaussian elimination over the field.
    pub fn is_invertible(&self) -> Result<bool> {
        Ok(self.inverse_matrix()?.is_some())
    }

    fn inverse_matrix(&self) -> Result<Option<Vec<Vec<FieldElement>>>> {
        let n = self.nvars();
        let k = &self.field;
        let mut a = self.matrix.clone();
        let mut inv = LinearTransform::identity(k.clone(), n).matrix;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero());
            let pivot = match pivot {
                Some(r) => r,
                None => return Ok(None),
            };
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let scale = k.inv(&a[col][col])?;
            for j in 0..n {
                a[col][j] = k.mul(&a[col][j], &scale)?;
                inv[col][j] = k.mul(&inv[col][j], &scale)?;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for j in 0..n {
                    let t = k.mul(&factor, &a[col][j])?;
                    a[r][j] = k.sub(&a[r][j], &t)?;
                    let t = k.mul(&factor, &inv[col][j])?;
                    inv[r][j] = k.sub(&inv[r][j], &t)?;
                }
            }
        }
        Ok(Some(inv))
    }

    /// The inverse change of variables: X maps to M^{-1}(X - b).
    pub fn inverse(&self) -> Result<LinearTransform> {
        let inv = self.inverse_matrix()?.ok_or(Error::SingularTransform)?;
        let k = &self.field;
        let n = self.nvars();
        let mut offset = vec![k.zero(); n];
        for (j, row) in inv.iter().enumerate() {
            let mut acc = k.zero();
            for (i, c) in row.iter().enumerate() {
                acc = k.add(&acc, &k.mul(c, &self.offset[i])?)?;
            }
            offset[j] = k.neg(&acc)?;
        }
        Ok(LinearTransform {
            field: k.clone(),
            matrix: inv,
            offset,
        })
    }

    /// Apply the substitution map to a point: coordinate j of the image is
    /// the j-th linear form evaluated at the point.
    pub fn apply_point(&self, a: &Point) -> Result<Point> {
        let k = &self.field;
        let mut coords = vec![];
        for j in 0..self.nvars() {
            let mut acc = self.offset[j].clone();
            for (i, c) in self.matrix[j].iter().enumerate() {
                acc = k.add(&acc, &k.mul(c, &a.coords[i])?)?;
            }
            coords.push(acc);
        }
        Ok(Point { coords })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldDescriptor {
        FieldDescriptor::rationals()
    }

    fn f(p: u64) -> FieldDescriptor {
        FieldDescriptor::prime(p).unwrap()
    }

    fn var(k: &FieldDescriptor, n: usize, j: usize) -> MultiPoly {
        MultiPoly::variable(k.clone(), n, j)
    }

    #[test]
    fn difference_of_squares() {
        let k = q();
        let x = var(&k, 2, 0);
        let y = var(&k, 2, 1);
        let prod = x.add(&y).unwrap().mul(&x.sub(&y).unwrap()).unwrap();
        let expect = x.pow(2).unwrap().sub(&y.pow(2).unwrap()).unwrap();
        assert_eq!(prod, expect);
    }

    #[test]
    fn additive_inverse_cancels() {
        let k = q();
        let x = var(&k, 2, 0);
        let y = var(&k, 2, 1);
        let s = x.add(&y).unwrap();
        assert!(s.add(&s.neg().unwrap()).unwrap().is_zero());
    }

    #[test]
    fn frobenius_over_f2() {
        let k = f(2);
        let x = var(&k, 2, 0);
        let y = var(&k, 2, 1);
        let sq = x.add(&y).unwrap().pow(2).unwrap();
        let expect = x.pow(2).unwrap().add(&y.pow(2).unwrap()).unwrap();
        assert_eq!(sq, expect);
    }

    #[test]
    fn pow_examples() {
        let k = f(3);
        let x = var(&k, 1, 0);
        assert_eq!(x.pow(0).unwrap(), MultiPoly::one(k.clone(), 1));
        let p = x.add(&MultiPoly::one(k.clone(), 1)).unwrap().pow(2).unwrap();
        // x^2 + 2x + 1
        assert_eq!(p.coefficient(&[2]), k.from_int(1));
        assert_eq!(p.coefficient(&[1]), k.from_int(2));
        assert_eq!(p.coefficient(&[0]), k.from_int(1));
        assert!(MultiPoly::zero(k, 1).pow(3).unwrap().is_zero());
    }

    #[test]
    fn eval_examples() {
        let k5 = f(5);
        let x = var(&k5, 2, 0);
        let y = var(&k5, 2, 1);
        let p = x.pow(2).unwrap().add(&y.pow(2).unwrap()).unwrap();
        let at = |a: i64, b: i64| Point {
            coords: vec![k5.from_int(a), k5.from_int(b)],
        };
        assert!(p.eval(&at(0, 0)).unwrap().is_zero());
        assert!(p.eval(&at(1, 2)).unwrap().is_zero()); // 1 + 4 = 5
        let kq = q();
        let x = var(&kq, 2, 0);
        let y = var(&kq, 2, 1);
        let s = x.add(&y).unwrap();
        let half = kq
            .from_ratio(&BigInt::from(1), &BigInt::from(2))
            .unwrap();
        let third = kq
            .from_ratio(&BigInt::from(1), &BigInt::from(3))
            .unwrap();
        let val = s
            .eval(&Point {
                coords: vec![half, third],
            })
            .unwrap();
        assert_eq!(
            val,
            kq.from_ratio(&BigInt::from(5), &BigInt::from(6)).unwrap()
        );
    }

    #[test]
    fn degrees() {
        let k = q();
        let x = var(&k, 2, 0);
        let y = var(&k, 2, 1);
        let p = x.pow(2).unwrap().mul(&y).unwrap().add(&y).unwrap();
        assert_eq!(p.degree(), 3);
        assert_eq!(p.degree_in(1), 1);
        assert_eq!(MultiPoly::zero(k, 2).degree(), -1);
    }

    #[test]
    fn shear_substitution() {
        // f = xy, x -> x + y over F_3 gives xy + y^2
        let k = f(3);
        let x = var(&k, 2, 0);
        let y = var(&k, 2, 1);
        let p = x.mul(&y).unwrap();
        let mut t = LinearTransform::identity(k.clone(), 2);
        t.matrix[0][1] = k.one();
        let g = p.substitute_linear(&t).unwrap();
        let expect = x.mul(&y).unwrap().add(&y.pow(2).unwrap()).unwrap();
        assert_eq!(g, expect);
    }

    #[test]
    fn substitution_roundtrip() {
        let k = f(5);
        let x = var(&k, 2, 0);
        let y = var(&k, 2, 1);
        let p = x
            .pow(2)
            .unwrap()
            .add(&x.mul(&y).unwrap())
            .unwrap()
            .add(&MultiPoly::one(k.clone(), 2))
            .unwrap();
        let mut t = LinearTransform::identity(k.clone(), 2);
        t.matrix[0][1] = k.from_int(3);
        t.offset[1] = k.from_int(2);
        let g = p.substitute_linear(&t).unwrap();
        let back = g.substitute_linear(&t.inverse().unwrap()).unwrap();
        assert_eq!(back, p);
        // identity is a no-op
        let id = LinearTransform::identity(k.clone(), 2);
        assert_eq!(p.substitute_linear(&id).unwrap(), p);
    }

    #[test]
    fn singular_transform_rejected() {
        let k = f(3);
        let x = var(&k, 2, 0);
        let t = LinearTransform::new(
            k.clone(),
            vec![
                vec![k.one(), k.one()],
                vec![k.one(), k.one()],
            ],
            vec![k.zero(), k.zero()],
        );
        assert_eq!(x.substitute_linear(&t), Err(Error::SingularTransform));
    }

    #[test]
    fn uni_roots_finite() {
        let k5 = f(5);
        let t2p1 = UniPoly::new(
            k5.clone(),
            vec![k5.from_int(1), k5.from_int(0), k5.from_int(1)],
        );
        assert_eq!(
            t2p1.roots().unwrap(),
            vec![k5.from_int(2), k5.from_int(3)]
        );
        let k3 = f(3);
        let t2p1 = UniPoly::new(
            k3.clone(),
            vec![k3.from_int(1), k3.from_int(0), k3.from_int(1)],
        );
        assert!(t2p1.roots().unwrap().is_empty());
    }

    #[test]
    fn uni_roots_rational() {
        let k = q();
        // T^2 - 2: candidates ±1, ±2 all fail
        let p = UniPoly::new(
            k.clone(),
            vec![k.from_int(-2), k.from_int(0), k.from_int(1)],
        );
        assert!(p.roots().unwrap().is_empty());
        // 2T^2 - T - 1 = (2T + 1)(T - 1): roots 1 and -1/2
        let p = UniPoly::new(
            k.clone(),
            vec![k.from_int(-1), k.from_int(-1), k.from_int(2)],
        );
        let roots = p.roots().unwrap();
        assert!(roots.contains(&k.from_int(1)));
        assert!(roots
            .contains(&k.from_ratio(&BigInt::from(-1), &BigInt::from(2)).unwrap()));
        assert_eq!(roots.len(), 2);
        // T^3: root 0 only
        let p = UniPoly::new(
            k.clone(),
            vec![k.zero(), k.zero(), k.zero(), k.from_int(1)],
        );
        assert_eq!(p.roots().unwrap(), vec![k.zero()]);
    }

    #[test]
    fn degree_additive_under_mul() {
        let k = f(7);
        let x = var(&k, 2, 0);
        let y = var(&k, 2, 1);
        let a = x.pow(2).unwrap().add(&y).unwrap();
        let b = y.pow(3).unwrap().add(&MultiPoly::one(k.clone(), 2)).unwrap();
        assert_eq!(a.mul(&b).unwrap().degree(), a.degree() + b.degree());
    }
}
