//! Exact arithmetic for the coefficient field: prime fields F_p, extension
//! fields F_{p^k} = F_p[T]/(m), and the rationals Q with arbitrary-precision
//! integers. All operations are pure and all values are canonical; floating
//! point never appears.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Enumeration cap: fields larger than this refuse to enumerate.
pub const MAX_ENUMERABLE_FIELD: u64 = 4096;

/// Characteristic cap for prime fields.
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

/// Which field is in play and how to compute in it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldDescriptor {
    Prime {
        p: u64,
    },
    Extension {
        p: u64,
        degree: usize,
        /// Dense, constant term first, monic of length degree + 1.
        modulus: Arc<Vec<u64>>,
    },
    Rationals,
}

/// An element of some field, stored in canonical form: reduced residue,
/// modulus-reduced coefficient vector (constant term first, length = degree),
/// or reduced fraction with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Prime(u64),
    Ext(Vec<u64>),
    Rational(BigRational),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

// ---- residue arithmetic mod p (p < 2^31, so products fit in u64) ----

fn madd(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

fn msub(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b) % p
}

fn mmul(a: u64, b: u64, p: u64) -> u64 {
    (a * b) % p
}

fn minv(a: u64, p: u64) -> Result<u64> {
    if a == 0 {
        return Err(Error::DivisionByZero);
    }
    // extended Euclid on signed ints
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    Ok(t0.rem_euclid(p as i64) as u64)
}

// ---- dense univariate polynomials over F_p, constant term first ----

fn fp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = madd(x, y, p);
    }
    fp_trim(&mut out);
    out
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = msub(x, y, p);
    }
    fp_trim(&mut out);
    out
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = madd(out[i + j], mmul(x, y, p), p);
        }
    }
    fp_trim(&mut out);
    out
}

/// Remainder of a by b; b need not be monic.
fn fp_rem(a: &[u64], b: &[u64], p: u64) -> Result<Vec<u64>> {
    let mut r = a.to_vec();
    fp_trim(&mut r);
    let mut bb = b.to_vec();
    fp_trim(&mut bb);
    if bb.is_empty() {
        return Err(Error::DivisionByZero);
    }
    let lead_inv = minv(*bb.last().unwrap(), p)?;
    while r.len() >= bb.len() {
        let shift = r.len() - bb.len();
        let factor = mmul(*r.last().unwrap(), lead_inv, p);
        for (i, &c) in bb.iter().enumerate() {
            r[shift + i] = msub(r[shift + i], mmul(factor, c, p), p);
        }
        fp_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    Ok(r)
}

fn fp_eval(a: &[u64], t: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in a.iter().rev() {
        acc = madd(mmul(acc, t, p), c, p);
    }
    acc
}

/// Inverse of a modulo the monic modulus m, via extended Euclid in F_p[T].
fn fp_modinv(a: &[u64], m: &[u64], p: u64) -> Result<Vec<u64>> {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    fp_trim(&mut r1);
    if r1.is_empty() {
        return Err(Error::DivisionByZero);
    }
    let mut t0: Vec<u64> = vec![];
    let mut t1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        // quotient of r0 by r1
        let mut q = vec![0u64; r0.len().saturating_sub(r1.len()) + 1];
        let mut rem = r0.clone();
        let lead_inv = minv(*r1.last().unwrap(), p)?;
        while rem.len() >= r1.len() && !rem.is_empty() {
            let shift = rem.len() - r1.len();
            let factor = mmul(*rem.last().unwrap(), lead_inv, p);
            q[shift] = madd(q[shift], factor, p);
            for (i, &c) in r1.iter().enumerate() {
                rem[shift + i] = msub(rem[shift + i], mmul(factor, c, p), p);
            }
            fp_trim(&mut rem);
        }
        fp_trim(&mut q);
        let new_t = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = rem;
        t0 = t1;
        t1 = new_t;
    }
    // r0 is the gcd; it must be a nonzero constant since m is irreducible
    debug_assert_eq!(r0.len(), 1);
    let scale = minv(r0[0], p)?;
    let mut out = t0.iter().map(|&c| mmul(c, scale, p)).collect::<Vec<_>>();
    fp_trim(&mut out);
    Ok(out)
}

/// Irreducibility over F_p: no roots (degree-1 factors), and for degree >= 4
/// no monic factor of degree 2..=degree/2 by trial division.
fn fp_irreducible(m: &[u64], p: u64) -> Result<bool> {
    let degree = m.len() - 1;
    for t in 0..p {
        if fp_eval(m, t, p) == 0 {
            return Ok(false);
        }
    }
    for d in 2..=degree / 2 {
        // all monic polynomials of degree d
        let mut counter = vec![0u64; d];
        loop {
            let mut cand = counter.clone();
            cand.push(1);
            if fp_rem(m, &cand, p)?.is_empty() {
                return Ok(false);
            }
            // increment, constant term fastest
            let mut i = 0;
            loop {
                if i == d {
                    break;
                }
                counter[i] += 1;
                if counter[i] < p {
                    break;
                }
                counter[i] = 0;
                i += 1;
            }
            if i == d {
                break;
            }
        }
    }
    Ok(true)
}

impl FieldDescriptor {
    /// The prime field F_p.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= MAX_CHARACTERISTIC || !is_prime(p) {
            return Err(Error::CompositeCharacteristic(p));
        }
        Ok(FieldDescriptor::Prime { p })
    }

    /// The extension field F_{p^k}. When no modulus is supplied, the
    /// lexicographically first monic irreducible of degree k is used
    /// (coefficients scanned with the constant term varying fastest).
    pub fn extension(p: u64, degree: usize, modulus: Option<Vec<u64>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::CompositeCharacteristic(p));
        }
        if degree < 2 {
            return Err(Error::ReducibleModulus { p });
        }
        let size = (p as u128).checked_pow(degree as u32);
        match size {
            Some(s) if s <= MAX_ENUMERABLE_FIELD as u128 => {}
            Some(s) => {
                return Err(Error::FieldTooLarge {
                    size: s as u64,
                    cap: MAX_ENUMERABLE_FIELD,
                })
            }
            None => {
                return Err(Error::FieldTooLarge {
                    size: u64::MAX,
                    cap: MAX_ENUMERABLE_FIELD,
                })
            }
        }
        let modulus = match modulus {
            Some(mut m) => {
                fp_trim(&mut m);
                if m.len() != degree + 1 || *m.last().unwrap() != 1 {
                    return Err(Error::ReducibleModulus { p });
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::ReducibleModulus { p });
                }
                if !fp_irreducible(&m, p)? {
                    return Err(Error::ReducibleModulus { p });
                }
                m
            }
            None => Self::find_irreducible(p, degree)?,
        };
        Ok(FieldDescriptor::Extension {
            p,
            degree,
            modulus: Arc::new(modulus),
        })
    }

    pub fn rationals() -> Self {
        FieldDescriptor::Rationals
    }

    fn find_irreducible(p: u64, degree: usize) -> Result<Vec<u64>> {
        // lexicographic over (a_{d-1}, ..., a_1, a_0), constant term fastest
        let mut counter = vec![0u64; degree];
        loop {
            let mut cand = counter.clone();
            cand.push(1);
            if fp_irreducible(&cand, p)? {
                return Ok(cand);
            }
            let mut i = 0;
            loop {
                if i == degree {
                    break;
                }
                counter[i] += 1;
                if counter[i] < p {
                    break;
                }
                counter[i] = 0;
                i += 1;
            }
            if i == degree {
                return Err(Error::NoModulusFound { p, degree });
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, FieldDescriptor::Rationals)
    }

    /// Number of elements, or None for Q.
    pub fn size(&self) -> Option<u64> {
        match self {
            FieldDescriptor::Prime { p } => Some(*p),
            FieldDescriptor::Extension { p, degree, .. } => Some(p.pow(*degree as u32)),
            FieldDescriptor::Rationals => None,
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Prime { p } | FieldDescriptor::Extension { p, .. } => *p,
            FieldDescriptor::Rationals => 0,
        }
    }

    pub fn zero(&self) -> FieldElement {
        match self {
            FieldDescriptor::Prime { .. } => FieldElement::Prime(0),
            FieldDescriptor::Extension { .. } => FieldElement::Ext(vec![]),
            FieldDescriptor::Rationals => FieldElement::Rational(BigRational::zero()),
        }
    }

    pub fn one(&self) -> FieldElement {
        match self {
            FieldDescriptor::Prime { .. } => FieldElement::Prime(1),
            FieldDescriptor::Extension { .. } => FieldElement::Ext(vec![1]),
            FieldDescriptor::Rationals => FieldElement::Rational(BigRational::one()),
        }
    }

    /// Embed a machine integer.
    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match self {
            FieldDescriptor::Prime { p } => {
                let r = n.mod_floor_u64(*p);
                FieldElement::Prime(r)
            }
            FieldDescriptor::Extension { p, .. } => {
                let r = n.mod_floor_u64(*p);
                let mut v = vec![r];
                fp_trim(&mut v);
                FieldElement::Ext(v)
            }
            FieldDescriptor::Rationals => {
                FieldElement::Rational(BigRational::from_integer(n.clone()))
            }
        }
    }

    /// Embed a rational; only meaningful over Q.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<FieldElement> {
        match self {
            FieldDescriptor::Rationals => {
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(FieldElement::Rational(BigRational::new(
                    num.clone(),
                    den.clone(),
                )))
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    /// Decode an extension element from its base-p integer code
    /// sum_i c_i p^i; identity on residues for prime fields.
    pub fn from_code(&self, code: u64) -> Result<FieldElement> {
        match self {
            FieldDescriptor::Prime { p } => Ok(FieldElement::Prime(code % p)),
            FieldDescriptor::Extension { p, degree, .. } => {
                let mut c = code % p.pow(*degree as u32);
                let mut v = vec![];
                while c > 0 {
                    v.push(c % p);
                    c /= p;
                }
                Ok(FieldElement::Ext(v))
            }
            FieldDescriptor::Rationals => Err(Error::InfiniteField),
        }
    }

    /// Base-p integer code of a finite-field element.
    pub fn to_code(&self, a: &FieldElement) -> Result<u64> {
        self.check_member(a)?;
        match (self, a) {
            (FieldDescriptor::Prime { .. }, FieldElement::Prime(r)) => Ok(*r),
            (FieldDescriptor::Extension { p, .. }, FieldElement::Ext(v)) => {
                let mut code = 0u64;
                for &c in v.iter().rev() {
                    code = code * p + c;
                }
                Ok(code)
            }
            _ => Err(Error::InfiniteField),
        }
    }

    fn check_member(&self, a: &FieldElement) -> Result<()> {
        let ok = match (self, a) {
            (FieldDescriptor::Prime { p }, FieldElement::Prime(r)) => r < p,
            (FieldDescriptor::Extension { p, degree, .. }, FieldElement::Ext(v)) => {
                v.len() <= *degree && v.iter().all(|&c| c < *p) && v.last() != Some(&0)
            }
            (FieldDescriptor::Rationals, FieldElement::Rational(_)) => true,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check_member(a)?;
        self.check_member(b)?;
        Ok(match (self, a, b) {
            (FieldDescriptor::Prime { p }, FieldElement::Prime(x), FieldElement::Prime(y)) => {
                FieldElement::Prime(madd(*x, *y, *p))
            }
            (FieldDescriptor::Extension { p, .. }, FieldElement::Ext(x), FieldElement::Ext(y)) => {
                FieldElement::Ext(fp_add(x, y, *p))
            }
            (_, FieldElement::Rational(x), FieldElement::Rational(y)) => {
                FieldElement::Rational(x + y)
            }
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check_member(a)?;
        self.check_member(b)?;
        Ok(match (self, a, b) {
            (FieldDescriptor::Prime { p }, FieldElement::Prime(x), FieldElement::Prime(y)) => {
                FieldElement::Prime(msub(*x, *y, *p))
            }
            (FieldDescriptor::Extension { p, .. }, FieldElement::Ext(x), FieldElement::Ext(y)) => {
                FieldElement::Ext(fp_sub(x, y, *p))
            }
            (_, FieldElement::Rational(x), FieldElement::Rational(y)) => {
                FieldElement::Rational(x - y)
            }
            _ => unreachable!(),
        })
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check_member(a)?;
        self.check_member(b)?;
        Ok(match (self, a, b) {
            (FieldDescriptor::Prime { p }, FieldElement::Prime(x), FieldElement::Prime(y)) => {
                FieldElement::Prime(mmul(*x, *y, *p))
            }
            (
                FieldDescriptor::Extension { p, modulus, .. },
                FieldElement::Ext(x),
                FieldElement::Ext(y),
            ) => {
                let prod = fp_mul(x, y, *p);
                FieldElement::Ext(fp_rem(&prod, modulus, *p)?)
            }
            (_, FieldElement::Rational(x), FieldElement::Rational(y)) => {
                FieldElement::Rational(x * y)
            }
            _ => unreachable!(),
        })
    }

    pub fn neg(&self, a: &FieldElement) -> Result<FieldElement> {
        self.sub(&self.zero(), a)
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        self.check_member(a)?;
        match (self, a) {
            (FieldDescriptor::Prime { p }, FieldElement::Prime(x)) => {
                Ok(FieldElement::Prime(minv(*x, *p)?))
            }
            (FieldDescriptor::Extension { p, modulus, .. }, FieldElement::Ext(x)) => {
                let inv = fp_modinv(x, modulus, *p)?;
                Ok(FieldElement::Ext(fp_rem(&inv, modulus, *p)?))
            }
            (_, FieldElement::Rational(x)) => {
                if x.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(FieldElement::Rational(x.recip()))
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        let bi = self.inv(b)?;
        self.mul(a, &bi)
    }

    /// Every element exactly once in canonical order: residue order for F_p,
    /// base-p code order for F_{p^k}.
    pub fn enumerate(&self) -> Result<Vec<FieldElement>> {
        let size = self.size().ok_or(Error::InfiniteField)?;
        if size > MAX_ENUMERABLE_FIELD {
            return Err(Error::FieldTooLarge {
                size,
                cap: MAX_ENUMERABLE_FIELD,
            });
        }
        (0..size).map(|c| self.from_code(c)).collect()
    }

    pub fn format_element(&self, a: &FieldElement) -> String {
        match a {
            FieldElement::Prime(r) => r.to_string(),
            FieldElement::Ext(_) => self.to_code(a).map(|c| c.to_string()).unwrap_or_default(),
            FieldElement::Rational(q) => {
                if q.is_integer() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

/// The spec-level arithmetic entry point; `b` is ignored for neg and inv.
pub fn field_arith(
    k: &FieldDescriptor,
    a: &FieldElement,
    b: Option<&FieldElement>,
    op: ArithOp,
) -> Result<FieldElement> {
    let need_b = || b.ok_or(Error::FieldMismatch);
    match op {
        ArithOp::Add => k.add(a, need_b()?),
        ArithOp::Sub => k.sub(a, need_b()?),
        ArithOp::Mul => k.mul(a, need_b()?),
        ArithOp::Div => k.div(a, need_b()?),
        ArithOp::Neg => k.neg(a),
        ArithOp::Inv => k.inv(a),
    }
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Prime(r) => *r == 0,
            FieldElement::Ext(v) => v.is_empty(),
            FieldElement::Rational(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Prime(r) => *r == 1,
            FieldElement::Ext(v) => v == &[1],
            FieldElement::Rational(q) => q.is_one(),
        }
    }

    /// Negative rationals print with a sign; finite-field residues never do.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_negative(),
            _ => false,
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Prime { p } => write!(f, "F{p}"),
            FieldDescriptor::Extension { p, degree, .. } => write!(f, "F{p}^{degree}"),
            FieldDescriptor::Rationals => write!(f, "Q"),
        }
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        use num_integer::Integer;
        let m = self.mod_floor(&BigInt::from(p));
        let (_, digits) = m.to_u64_digits();
        digits.first().copied().unwrap_or(0)
    }
}
