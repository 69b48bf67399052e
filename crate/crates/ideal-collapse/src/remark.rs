//! Monicization by a shear X_i -> X_i + c_i X_n followed by specialization
//! of the leading variables to zero and univariate root search. Over a
//! finite field the specialized polynomial may legitimately have no roots;
//! that outcome is reported as an empty list, not worked around.

use crate::error::{Error, Result};
use crate::fields::{FieldDescriptor, FieldElement};
use crate::polys::{LinearTransform, MultiPoly, Point, UniPoly};

/// A certified change of coordinates making the input monic in the last
/// variable after scaling by a unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonicizationResult {
    pub original: MultiPoly,
    pub transform: LinearTransform,
    pub transformed: MultiPoly,
    /// The unit the sheared polynomial was multiplied by.
    pub scaling: FieldElement,
    pub monic_degree: usize,
}

/// Shear candidates (c_1, ..., c_{n-1}). Finite fields walk the full grid in
/// canonical enumeration order; Q walks non-negative integer tuples in
/// graded order, where some tuple with entries <= deg f always works.
fn shear_candidates(k: &FieldDescriptor, len: usize, degree: u64) -> Result<Vec<Vec<FieldElement>>> {
    if len == 0 {
        return Ok(vec![vec![]]);
    }
    match k {
        FieldDescriptor::Rationals => {
            let bound = degree + 1; // entries in 0..=degree suffice
            let mut out = vec![];
            let mut idx = vec![0u64; len];
            loop {
                out.push(idx.iter().map(|&i| k.from_int(i as i64)).collect());
                let mut j = len;
                loop {
                    if j == 0 {
                        return Ok(sort_graded(out));
                    }
                    j -= 1;
                    idx[j] += 1;
                    if idx[j] < bound {
                        break;
                    }
                    idx[j] = 0;
                }
            }
        }
        _ => {
            let elems = k.enumerate()?;
            let mut out = vec![];
            let mut idx = vec![0usize; len];
            loop {
                out.push(idx.iter().map(|&i| elems[i].clone()).collect());
                let mut j = len;
                loop {
                    if j == 0 {
                        return Ok(out);
                    }
                    j -= 1;
                    idx[j] += 1;
                    if idx[j] < elems.len() {
                        break;
                    }
                    idx[j] = 0;
                }
            }
        }
    }
}

fn sort_graded(mut tuples: Vec<Vec<FieldElement>>) -> Vec<Vec<FieldElement>> {
    // graded order on the integer codes; ties broken lexicographically,
    // which is stable because these are non-negative integer embeddings
    let key = |t: &Vec<FieldElement>| -> (u64, Vec<u64>) {
        let codes: Vec<u64> = t
            .iter()
            .map(|e| match e {
                FieldElement::Rational(q) => {
                    use num_traits::ToPrimitive;
                    q.numer().to_u64().unwrap_or(0)
                }
                _ => 0,
            })
            .collect();
        (codes.iter().sum(), codes)
    };
    tuples.sort_by_key(key);
    tuples
}

/// Find a shear making f monic in X_n: the degree-d homogeneous part of f
/// must not vanish at (c_1, ..., c_{n-1}, 1).
pub fn monicize(f: &MultiPoly) -> Result<MonicizationResult> {
    let d = f.degree();
    if d <= 0 {
        return Err(Error::ConstantInput);
    }
    let k = f.field().clone();
    let n = f.nvars();
    let top = f.homogeneous_part(d as u64);
    for cand in shear_candidates(&k, n - 1, d as u64)? {
        let mut probe = cand.clone();
        probe.push(k.one());
        let lead = top.eval(&Point { coords: probe })?;
        if lead.is_zero() {
            continue;
        }
        let mut transform = LinearTransform::identity(k.clone(), n);
        for (i, c) in cand.iter().enumerate() {
            transform.matrix[i][n - 1] = c.clone();
        }
        let sheared = f.substitute_linear(&transform)?;
        let scaling = k.inv(&lead)?;
        let transformed = sheared.scale(&scaling)?;
        debug_assert_eq!(transformed.degree_in(n - 1), d);
        debug_assert!(transformed.coefficient(&monomial_xn(n, d as u32)).is_one());
        return Ok(MonicizationResult {
            original: f.clone(),
            transform,
            transformed,
            scaling,
            monic_degree: d as usize,
        });
    }
    Err(Error::NoMonicizerFound)
}

fn monomial_xn(n: usize, d: u32) -> Vec<u32> {
    let mut e = vec![0u32; n];
    e[n - 1] = d;
    e
}

/// Set X_1 = ... = X_{n-1} = 0 in the monic form, solve the resulting monic
/// univariate polynomial in X_n over the finite field, and map each root back
/// to a zero of the original polynomial in the original coordinates.
pub fn specialize_and_solve(m: &MonicizationResult) -> Result<Vec<Point>> {
    let k = m.transformed.field().clone();
    if !k.is_finite() {
        return Err(Error::InfiniteField);
    }
    let n = m.transformed.nvars();
    let zeros: Vec<(usize, FieldElement)> = (0..n - 1).map(|j| (j, k.zero())).collect();
    let specialized = m.transformed.substitute_constants(&zeros)?;
    let mut coeffs = vec![k.zero(); m.monic_degree + 1];
    for (mono, c) in specialized.terms() {
        coeffs[mono.0[n - 1] as usize] = c.clone();
    }
    let uni = UniPoly::new(k.clone(), coeffs);
    debug_assert!(uni.is_monic());
    let mut out = vec![];
    for root in uni.roots()? {
        let mut coords = vec![k.zero(); n];
        coords[n - 1] = root;
        // transformed(p) = scaling * f(M(p)), so M(p) kills the original f
        let original_point = m.transform.apply_point(&Point { coords })?;
        debug_assert!(m.original.eval(&original_point)?.is_zero());
        out.push(original_point);
    }
    Ok(out)
}
