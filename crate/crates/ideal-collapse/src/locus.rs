//! Ground-truth zero-locus oracle: exhaustive enumeration of V(I) over
//! finite fields, sampled pointwise equivalence over Q, and emptiness
//! decisions.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fields::{FieldDescriptor, FieldElement};
use crate::polys::{MultiPoly, Point};

/// Default enumeration cap; the CLI can override it through
/// IDEAL_COLLAPSE_MAX_POINTS.
pub const DEFAULT_MAX_POINTS: u64 = 10_000_000;

/// Default seed for rational sampling.
pub const DEFAULT_SAMPLE_SEED: u64 = 0xC0FFEE;

const SAMPLE_COUNT: usize = 1000;
const SAMPLE_HEIGHT: i64 = 100;

/// A finitely presented ideal: variable names plus generators over one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSystem {
    pub field: FieldDescriptor,
    pub var_names: Vec<String>,
    pub generators: Vec<MultiPoly>,
}

impl IdealSystem {
    pub fn new(
        field: FieldDescriptor,
        var_names: Vec<String>,
        generators: Vec<MultiPoly>,
    ) -> Result<Self> {
        let nvars = var_names.len();
        for (i, a) in var_names.iter().enumerate() {
            if var_names[i + 1..].contains(a) {
                return Err(Error::DuplicateVariableName(a.clone()));
            }
        }
        for g in &generators {
            if *g.field() != field {
                return Err(Error::FieldMismatch);
            }
            if g.nvars() != nvars {
                return Err(Error::ArityMismatch);
            }
        }
        Ok(IdealSystem {
            field,
            var_names,
            generators,
        })
    }

    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocusMode {
    Exhaustive {
        field_size: u64,
        points_searched: u64,
    },
    Sampled {
        sample_count: usize,
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Emptiness {
    Empty,
    NonEmpty,
    UnknownSampled,
}

/// Points where the given polynomials all vanish: every one of them for
/// exhaustive mode, the witnesses found for sampled mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroLocusReport {
    pub mode: LocusMode,
    pub points: Vec<Point>,
    pub empty: Emptiness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquivalenceVerdict {
    Equivalent,
    CounterexamplePoint(Point),
    UnknownSampled,
}

/// Iterate k^n in canonical order (mixed-radix over the field enumeration).
pub struct PointGrid {
    elems: Vec<FieldElement>,
    idx: Vec<usize>,
    done: bool,
}

impl PointGrid {
    pub fn new(k: &FieldDescriptor, nvars: usize) -> Result<Self> {
        Ok(PointGrid {
            elems: k.enumerate()?,
            idx: vec![0; nvars],
            done: false,
        })
    }
}

impl Iterator for PointGrid {
    type Item = Point;

    fn next(&mut self) -> Option<Point> {
        if self.done {
            return None;
        }
        let point = Point {
            coords: self.idx.iter().map(|&i| self.elems[i].clone()).collect(),
        };
        // odometer, last coordinate fastest
        let mut j = self.idx.len();
        loop {
            if j == 0 {
                self.done = true;
                break;
            }
            j -= 1;
            self.idx[j] += 1;
            if self.idx[j] < self.elems.len() {
                break;
            }
            self.idx[j] = 0;
        }
        if self.idx.is_empty() {
            self.done = true;
        }
        Some(point)
    }
}

fn grid_size(k: &FieldDescriptor, nvars: usize) -> Result<u64> {
    let q = k.size().ok_or(Error::InfiniteField)?;
    (q as u128)
        .checked_pow(nvars as u32)
        .filter(|&s| s <= u64::MAX as u128)
        .map(|s| s as u64)
        .ok_or(Error::SearchSpaceTooLarge {
            size: u64::MAX,
            cap: DEFAULT_MAX_POINTS,
        })
}

fn check_cap(k: &FieldDescriptor, nvars: usize, cap: u64) -> Result<u64> {
    let size = grid_size(k, nvars)?;
    if size > cap {
        return Err(Error::SearchSpaceTooLarge { size, cap });
    }
    Ok(size)
}

fn vanishes_on_all(polys: &[MultiPoly], a: &Point) -> Result<bool> {
    for p in polys {
        if !p.eval(a)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustively list the common zeros over a finite field, in canonical
/// enumeration order.
pub fn enumerate_zero_locus(
    polys: &[MultiPoly],
    k: &FieldDescriptor,
    nvars: usize,
) -> Result<ZeroLocusReport> {
    enumerate_zero_locus_capped(polys, k, nvars, DEFAULT_MAX_POINTS)
}

pub fn enumerate_zero_locus_capped(
    polys: &[MultiPoly],
    k: &FieldDescriptor,
    nvars: usize,
    cap: u64,
) -> Result<ZeroLocusReport> {
    let size = check_cap(k, nvars, cap)?;
    for p in polys {
        if p.field() != k {
            return Err(Error::FieldMismatch);
        }
        if p.nvars() != nvars {
            return Err(Error::ArityMismatch);
        }
    }
    let mut points = vec![];
    for a in PointGrid::new(k, nvars)? {
        if vanishes_on_all(polys, &a)? {
            points.push(a);
        }
    }
    let empty = if points.is_empty() {
        Emptiness::Empty
    } else {
        Emptiness::NonEmpty
    };
    Ok(ZeroLocusReport {
        mode: LocusMode::Exhaustive {
            field_size: k.size().unwrap(),
            points_searched: size,
        },
        points,
        empty,
    })
}

/// The sample set over Q: the origin, the standard basis points, then
/// seeded random rational points of bounded height.
pub fn rational_sample_points(nvars: usize, seed: u64) -> Vec<Point> {
    let q = FieldDescriptor::rationals();
    let mut points = vec![Point {
        coords: vec![q.zero(); nvars],
    }];
    for j in 0..nvars {
        let mut coords = vec![q.zero(); nvars];
        coords[j] = q.one();
        points.push(Point { coords });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLE_COUNT {
        let coords = (0..nvars)
            .map(|_| {
                let num = rng.gen_range(-SAMPLE_HEIGHT..=SAMPLE_HEIGHT);
                let den = rng.gen_range(1..=SAMPLE_HEIGHT);
                q.from_ratio(&BigInt::from(num), &BigInt::from(den))
                    .unwrap()
            })
            .collect();
        points.push(Point { coords });
    }
    points
}

/// Does Z(collapsed) equal the intersection of the generators' zero sets?
/// Exhaustive over finite fields; pointwise-sampled over Q, where agreement
/// on every tested point yields UnknownSampled rather than a universal claim.
pub fn verify_equivalence(
    system: &IdealSystem,
    collapsed: &MultiPoly,
) -> Result<EquivalenceVerdict> {
    verify_equivalence_with(system, collapsed, DEFAULT_SAMPLE_SEED, DEFAULT_MAX_POINTS)
}

pub fn verify_equivalence_with(
    system: &IdealSystem,
    collapsed: &MultiPoly,
    seed: u64,
    cap: u64,
) -> Result<EquivalenceVerdict> {
    if *collapsed.field() != system.field {
        return Err(Error::FieldMismatch);
    }
    if collapsed.nvars() != system.nvars() {
        return Err(Error::ArityMismatch);
    }
    let points: Box<dyn Iterator<Item = Point>> = if system.field.is_finite() {
        check_cap(&system.field, system.nvars(), cap)?;
        Box::new(PointGrid::new(&system.field, system.nvars())?)
    } else {
        Box::new(rational_sample_points(system.nvars(), seed).into_iter())
    };
    for a in points {
        let lhs = collapsed.eval(&a)?.is_zero();
        let rhs = vanishes_on_all(&system.generators, &a)?;
        if lhs != rhs {
            return Ok(EquivalenceVerdict::CounterexamplePoint(a));
        }
    }
    if system.field.is_finite() {
        Ok(EquivalenceVerdict::Equivalent)
    } else {
        Ok(EquivalenceVerdict::UnknownSampled)
    }
}

/// Is V(I) empty? Exact over finite fields (early exit at the first common
/// zero); over Q a found zero settles NonEmpty and silence is UnknownSampled.
pub fn is_empty(system: &IdealSystem) -> Result<Emptiness> {
    is_empty_capped(system, DEFAULT_MAX_POINTS)
}

pub fn is_empty_capped(system: &IdealSystem, cap: u64) -> Result<Emptiness> {
    if system.field.is_finite() {
        check_cap(&system.field, system.nvars(), cap)?;
        for a in PointGrid::new(&system.field, system.nvars())? {
            if vanishes_on_all(&system.generators, &a)? {
                return Ok(Emptiness::NonEmpty);
            }
        }
        Ok(Emptiness::Empty)
    } else {
        for a in rational_sample_points(system.nvars(), DEFAULT_SAMPLE_SEED) {
            if vanishes_on_all(&system.generators, &a)? {
                return Ok(Emptiness::NonEmpty);
            }
        }
        Ok(Emptiness::UnknownSampled)
    }
}
