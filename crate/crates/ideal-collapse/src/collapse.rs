//! The core construction: combine two polynomials into one whose zero locus
//! is the intersection of theirs, carrying an explicit cofactor certificate,
//! and fold a whole generator list into a single collapsed polynomial.

use crate::error::{Error, Result};
use crate::locus::IdealSystem;
use crate::polys::MultiPoly;
use crate::witness::WitnessPoly;

/// Emit a warning record once a step's result degree passes this.
pub const DEGREE_WARN_THRESHOLD: i64 = 1 << 12;

/// P(f1, f2) together with cofactors A, B such that A*f1 + B*f2 = P, an
/// exact polynomial identity exhibiting membership in (f1, f2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombineCertificate {
    pub f1: MultiPoly,
    pub f2: MultiPoly,
    pub result: MultiPoly,
    pub cofactor_a: MultiPoly,
    pub cofactor_b: MultiPoly,
    pub witness: WitnessPoly,
}

/// Output of folding a generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainResult {
    pub collapsed: MultiPoly,
    pub steps: Vec<CombineCertificate>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Copy, Debug)]
pub struct CollapseConfig {
    /// Re-verify every certificate by expansion at construction time.
    pub paranoid: bool,
}

impl Default for CollapseConfig {
    fn default() -> Self {
        CollapseConfig { paranoid: true }
    }
}

/// P(f1, f2) = sum_{i=0}^{n} a_i f1^{n-i} f2^i with a_0 = 1, n the witness
/// degree. Vanishes at a point exactly when both operands do, because a
/// common nonzero value would hand l(T) a root f1(a)/f2(a).
pub fn combine_pair(
    w: &WitnessPoly,
    f1: &MultiPoly,
    f2: &MultiPoly,
) -> Result<CombineCertificate> {
    combine_pair_with(w, f1, f2, &CollapseConfig::default())
}

pub fn combine_pair_with(
    w: &WitnessPoly,
    f1: &MultiPoly,
    f2: &MultiPoly,
    config: &CollapseConfig,
) -> Result<CombineCertificate> {
    if f1.field() != f2.field() || w.field() != f1.field() {
        return Err(Error::FieldMismatch);
    }
    if f1.nvars() != f2.nvars() {
        return Err(Error::ArityMismatch);
    }
    let field = f1.field().clone();
    let nvars = f1.nvars();
    let n = w.degree();

    let mut f1_pows = Vec::with_capacity(n + 1);
    let mut f2_pows = Vec::with_capacity(n + 1);
    for i in 0..=n {
        f1_pows.push(f1.pow(i as u32)?);
        f2_pows.push(f2.pow(i as u32)?);
    }

    let mut result = MultiPoly::zero(field.clone(), nvars);
    for i in 0..=n {
        let term = f1_pows[n - i].mul(&f2_pows[i])?.scale(&w.coefficient(i))?;
        result = result.add(&term)?;
    }

    // A = sum_{i=0}^{n-1} a_i f1^{n-1-i} f2^i, B = a_n f2^{n-1}:
    // A*f1 + B*f2 telescopes to the full sum.
    let mut cofactor_a = MultiPoly::zero(field.clone(), nvars);
    for i in 0..n {
        let term = f1_pows[n - 1 - i]
            .mul(&f2_pows[i])?
            .scale(&w.coefficient(i))?;
        cofactor_a = cofactor_a.add(&term)?;
    }
    let cofactor_b = f2_pows[n - 1].scale(&w.coefficient(n))?;

    let cert = CombineCertificate {
        f1: f1.clone(),
        f2: f2.clone(),
        result,
        cofactor_a,
        cofactor_b,
        witness: w.clone(),
    };
    if config.paranoid && !verify_certificate(&cert, f1, f2)? {
        // arithmetic regression; the identity holds by construction
        return Err(Error::FieldMismatch);
    }
    Ok(cert)
}

/// Check A*f1 + B*f2 = result by exact expansion.
pub fn verify_certificate(
    c: &CombineCertificate,
    f1: &MultiPoly,
    f2: &MultiPoly,
) -> Result<bool> {
    let lhs = c.cofactor_a.mul(f1)?.add(&c.cofactor_b.mul(f2)?)?;
    Ok(lhs == c.result)
}

/// Left fold over the generators: p_1 = P(f_1, f_2), then
/// p_i = P(f_{i+1}, p_{i-1}). No generators collapse to the zero polynomial
/// (it vanishes everywhere, as V of the zero ideal demands); a single
/// generator is returned unchanged.
pub fn collapse_chain(w: &WitnessPoly, system: &IdealSystem) -> Result<ChainResult> {
    collapse_chain_with(w, system, &CollapseConfig::default())
}

pub fn collapse_chain_with(
    w: &WitnessPoly,
    system: &IdealSystem,
    config: &CollapseConfig,
) -> Result<ChainResult> {
    if system.field != *w.field() {
        return Err(Error::FieldMismatch);
    }
    let nvars = system.nvars();
    let gens = &system.generators;
    if gens.is_empty() {
        return Ok(ChainResult {
            collapsed: MultiPoly::zero(system.field.clone(), nvars),
            steps: vec![],
            warnings: vec![],
        });
    }
    let mut acc = gens[0].clone();
    let mut steps = vec![];
    let mut warnings = vec![];
    for (i, g) in gens.iter().enumerate().skip(1) {
        // later generator takes the f1 slot, accumulator the f2 slot
        let cert = combine_pair_with(w, g, &acc, config)?;
        acc = cert.result.clone();
        if acc.degree() > DEGREE_WARN_THRESHOLD {
            warnings.push(format!(
                "step {} reached total degree {}, past the {} warning threshold",
                i,
                acc.degree(),
                DEGREE_WARN_THRESHOLD
            ));
        }
        steps.push(cert);
    }
    Ok(ChainResult {
        collapsed: acc,
        steps,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::FieldDescriptor;
    use crate::polys::Point;
    use crate::witness::find_rootfree;

    fn var(k: &FieldDescriptor, n: usize, j: usize) -> MultiPoly {
        MultiPoly::variable(k.clone(), n, j)
    }

    fn system(k: &FieldDescriptor, names: &[&str], gens: Vec<MultiPoly>) -> IdealSystem {
        IdealSystem::new(
            k.clone(),
            names.iter().map(|s| s.to_string()).collect(),
            gens,
        )
        .unwrap()
    }

    #[test]
    fn sum_of_squares_over_q() {
        let k = FieldDescriptor::rationals();
        let w = find_rootfree(&k, 4).unwrap(); // T^2 + 1
        let x = var(&k, 2, 0);
        let y = var(&k, 2, 1);
        let cert = combine_pair(&w, &x, &y).unwrap();
        let expect = x.pow(2).unwrap().add(&y.pow(2).unwrap()).unwrap();
        assert_eq!(cert.result, expect);
        assert_eq!(cert.cofactor_a, x);
        assert_eq!(cert.cofactor_b, y);
        assert!(verify_certificate(&cert, &x, &y).unwrap());
    }

    #[test]
    fn zero_second_operand() {
        let k = FieldDescriptor::rationals();
        let w = find_rootfree(&k, 4).unwrap();
        let x = var(&k, 2, 0);
        let zero = MultiPoly::zero(k.clone(), 2);
        let cert = combine_pair(&w, &x, &zero).unwrap();
        assert_eq!(cert.result, x.pow(2).unwrap());
    }

    #[test]
    fn combine_over_f2() {
        // w = T^2+T+1, f1 = x+y, f2 = xy:
        // (x+y)^2 + (x+y)xy + (xy)^2 = x^2 + y^2 + x^2y + xy^2 + x^2y^2
        let k = FieldDescriptor::prime(2).unwrap();
        let w = find_rootfree(&k, 4).unwrap();
        let x = var(&k, 2, 0);
        let y = var(&k, 2, 1);
        let f1 = x.add(&y).unwrap();
        let f2 = x.mul(&y).unwrap();
        let cert = combine_pair(&w, &f1, &f2).unwrap();
        let expect = MultiPoly::from_terms(
            k.clone(),
            2,
            vec![
                (vec![2, 0], k.one()),
                (vec![0, 2], k.one()),
                (vec![2, 1], k.one()),
                (vec![1, 2], k.one()),
                (vec![2, 2], k.one()),
            ],
        )
        .unwrap();
        assert_eq!(cert.result, expect);
    }

    #[test]
    fn tampered_certificate_fails() {
        let k = FieldDescriptor::rationals();
        let w = find_rootfree(&k, 4).unwrap();
        let x = var(&k, 2, 0);
        let y = var(&k, 2, 1);
        let mut cert = combine_pair(&w, &x, &y).unwrap();
        cert.cofactor_a = x.add(&MultiPoly::one(k.clone(), 2)).unwrap();
        assert!(!verify_certificate(&cert, &x, &y).unwrap());
    }

    #[test]
    fn chain_over_f3() {
        // [x+y, x-y] with T^2+1 collapses to 2x^2 + 2y^2
        let k = FieldDescriptor::prime(3).unwrap();
        let w = find_rootfree(&k, 4).unwrap();
        let x = var(&k, 2, 0);
        let y = var(&k, 2, 1);
        let gens = vec![x.add(&y).unwrap(), x.sub(&y).unwrap()];
        let sys = system(&k, &["x", "y"], gens);
        let chain = collapse_chain(&w, &sys).unwrap();
        let expect = MultiPoly::from_terms(
            k.clone(),
            2,
            vec![(vec![2, 0], k.from_int(2)), (vec![0, 2], k.from_int(2))],
        )
        .unwrap();
        assert_eq!(chain.collapsed, expect);
        assert_eq!(chain.steps.len(), 1);
    }

    #[test]
    fn single_and_empty_systems() {
        let k = FieldDescriptor::rationals();
        let w = find_rootfree(&k, 4).unwrap();
        let x = var(&k, 1, 0);
        let sys = system(&k, &["x"], vec![x.pow(2).unwrap()]);
        let chain = collapse_chain(&w, &sys).unwrap();
        assert_eq!(chain.collapsed, x.pow(2).unwrap());
        assert!(chain.steps.is_empty());

        let empty = system(&k, &["x"], vec![]);
        let chain = collapse_chain(&w, &empty).unwrap();
        assert!(chain.collapsed.is_zero());
    }

    #[test]
    fn three_generators_over_q() {
        let k = FieldDescriptor::rationals();
        let w = find_rootfree(&k, 4).unwrap();
        let x = var(&k, 3, 0);
        let y = var(&k, 3, 1);
        let z = var(&k, 3, 2);
        let sys = system(&k, &["x", "y", "z"], vec![x.clone(), y, z]);
        let chain = collapse_chain(&w, &sys).unwrap();
        assert_eq!(chain.collapsed.degree(), 4);
        // only the origin should kill it among a few probes
        let origin = Point {
            coords: vec![k.zero(), k.zero(), k.zero()],
        };
        assert!(chain.collapsed.eval(&origin).unwrap().is_zero());
        for probe in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (-2, 3, 5)] {
            let p = Point {
                coords: vec![
                    k.from_int(probe.0),
                    k.from_int(probe.1),
                    k.from_int(probe.2),
                ],
            };
            assert!(!chain.collapsed.eval(&p).unwrap().is_zero());
        }
    }

    #[test]
    fn master_invariant_exhaustive_small() {
        // every point of F_3^2 for a couple of systems
        let k = FieldDescriptor::prime(3).unwrap();
        let w = find_rootfree(&k, 4).unwrap();
        let x = var(&k, 2, 0);
        let y = var(&k, 2, 1);
        let cases = vec![
            vec![x.add(&y).unwrap(), x.sub(&y).unwrap()],
            vec![x.pow(2).unwrap(), y.clone()],
            vec![
                x.mul(&y).unwrap(),
                x.add(&MultiPoly::one(k.clone(), 2)).unwrap(),
                y.sub(&MultiPoly::one(k.clone(), 2)).unwrap(),
            ],
        ];
        for gens in cases {
            let sys = system(&k, &["x", "y"], gens.clone());
            let chain = collapse_chain(&w, &sys).unwrap();
            for a in 0..3i64 {
                for b in 0..3i64 {
                    let pt = Point {
                        coords: vec![k.from_int(a), k.from_int(b)],
                    };
                    let all_vanish = gens.iter().all(|g| g.eval(&pt).unwrap().is_zero());
                    assert_eq!(chain.collapsed.eval(&pt).unwrap().is_zero(), all_vanish);
                }
            }
        }
    }

    #[test]
    fn degree_bound_holds() {
        let k = FieldDescriptor::prime(5).unwrap();
        let w = find_rootfree(&k, 4).unwrap();
        let x = var(&k, 2, 0);
        let y = var(&k, 2, 1);
        let f1 = x.pow(2).unwrap().add(&y).unwrap();
        let f2 = y.pow(2).unwrap().sub(&x).unwrap();
        let cert = combine_pair(&w, &f1, &f2).unwrap();
        let n = w.degree() as i64;
        assert!(cert.result.degree() <= n * f1.degree().max(f2.degree()));
    }
}
