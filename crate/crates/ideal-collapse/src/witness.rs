//! Discovery and certification of the monic non-constant root-free
//! polynomial l(T) = T^n + a_1 T^{n-1} + ... + a_n that drives the whole
//! combination construction.

use crate::error::{Error, Result};
use crate::fields::{FieldDescriptor, FieldElement};
use crate::polys::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Every element of the finite field was tried.
    ExhaustiveCheck,
    /// Rational-root test on the cleared-denominator form.
    RationalRootTest,
    /// Supplied by the caller; re-verified where the field permits.
    UserAssertion,
}

/// A monic non-constant univariate polynomial certified root-free over its
/// field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPoly {
    pub poly: UniPoly,
    pub certificate: Certificate,
}

impl WitnessPoly {
    pub fn degree(&self) -> usize {
        self.poly.degree() as usize
    }

    /// Coefficient a_i of l(T) = T^n + a_1 T^{n-1} + ... + a_n, with a_0 = 1.
    pub fn coefficient(&self, i: usize) -> FieldElement {
        let n = self.degree();
        debug_assert!(i <= n);
        self.poly.coeffs()[n - i].clone()
    }

    pub fn field(&self) -> &FieldDescriptor {
        self.poly.field()
    }

    /// Wrap a user-supplied witness; the root check reruns whenever the
    /// field supports it.
    pub fn from_user(poly: UniPoly) -> Result<Self> {
        if poly.degree() < 1 || !poly.is_monic() {
            return Err(Error::NoWitnessFound { max_degree: 0 });
        }
        let w = WitnessPoly {
            poly,
            certificate: Certificate::UserAssertion,
        };
        if !w.poly.roots()?.is_empty() {
            return Err(Error::NoWitnessFound { max_degree: 0 });
        }
        Ok(w)
    }
}

/// Deterministic search for a root-free monic polynomial over k.
///
/// Finite fields: scan degrees 2, 3, ..., max_degree; within a degree, scan
/// coefficient tuples (a_1, ..., a_d) in canonical enumeration order with a_d
/// varying fastest. Degree 2 always suffices for a finite field. Over Q the
/// fixed choice is T^2 + 1.
pub fn find_rootfree(k: &FieldDescriptor, max_degree: usize) -> Result<WitnessPoly> {
    if max_degree < 2 {
        return Err(Error::InvalidDegreeBound(max_degree));
    }
    match k {
        FieldDescriptor::Rationals => {
            let poly = UniPoly::new(
                k.clone(),
                vec![k.one(), k.zero(), k.one()], // T^2 + 1
            );
            debug_assert!(poly.roots()?.is_empty());
            Ok(WitnessPoly {
                poly,
                certificate: Certificate::RationalRootTest,
            })
        }
        _ => {
            let elems = k.enumerate()?;
            for degree in 2..=max_degree {
                let mut idx = vec![0usize; degree]; // idx[0] = a_1, ..., idx[degree-1] = a_degree
                loop {
                    // coeffs constant-term first: a_d, a_{d-1}, ..., a_1, 1
                    let mut coeffs: Vec<FieldElement> =
                        idx.iter().rev().map(|&i| elems[i].clone()).collect();
                    coeffs.push(k.one());
                    let cand = UniPoly::new(k.clone(), coeffs);
                    if cand.roots()?.is_empty() {
                        return Ok(WitnessPoly {
                            poly: cand,
                            certificate: Certificate::ExhaustiveCheck,
                        });
                    }
                    // increment with the last coefficient a_d fastest
                    let mut i = degree;
                    loop {
                        if i == 0 {
                            break;
                        }
                        i -= 1;
                        idx[i] += 1;
                        if idx[i] < elems.len() {
                            break;
                        }
                        idx[i] = 0;
                        if i == 0 {
                            i = usize::MAX;
                            break;
                        }
                    }
                    if i == usize::MAX {
                        break;
                    }
                }
            }
            Err(Error::NoWitnessFound { max_degree })
        }
    }
}

/// Recompute root-freeness from scratch rather than trusting the stored
/// certificate.
pub fn certify_rootfree(w: &WitnessPoly, k: &FieldDescriptor) -> Result<bool> {
    if w.field() != k {
        return Err(Error::FieldMismatch);
    }
    Ok(w.poly.roots()?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldDescriptor {
        FieldDescriptor::prime(p).unwrap()
    }

    fn coeff_ints(w: &WitnessPoly) -> Vec<FieldElement> {
        w.poly.coeffs().to_vec()
    }

    #[test]
    fn f2_witness_is_t2_t_1() {
        let k = f(2);
        let w = find_rootfree(&k, 6).unwrap();
        assert_eq!(
            coeff_ints(&w),
            vec![k.from_int(1), k.from_int(1), k.from_int(1)]
        );
        assert_eq!(w.certificate, Certificate::ExhaustiveCheck);
    }

    #[test]
    fn f5_witness_is_t2_plus_2() {
        // search order hits T^2, T^2+1, T^2+2; the first two have roots
        let k = f(5);
        let w = find_rootfree(&k, 6).unwrap();
        assert_eq!(
            coeff_ints(&w),
            vec![k.from_int(2), k.from_int(0), k.from_int(1)]
        );
    }

    #[test]
    fn q_witness_is_t2_plus_1() {
        let k = FieldDescriptor::rationals();
        let w = find_rootfree(&k, 6).unwrap();
        assert_eq!(
            coeff_ints(&w),
            vec![k.from_int(1), k.from_int(0), k.from_int(1)]
        );
        assert_eq!(w.certificate, Certificate::RationalRootTest);
    }

    #[test]
    fn certify_examples() {
        let k3 = f(3);
        let k5 = f(5);
        let t2p1 = |k: &FieldDescriptor| {
            WitnessPoly {
                poly: UniPoly::new(k.clone(), vec![k.from_int(1), k.zero(), k.one()]),
                certificate: Certificate::UserAssertion,
            }
        };
        assert!(certify_rootfree(&t2p1(&k3), &k3).unwrap());
        assert!(!certify_rootfree(&t2p1(&k5), &k5).unwrap()); // 2^2 = 4 = -1
        let q = FieldDescriptor::rationals();
        assert!(certify_rootfree(&t2p1(&q), &q).unwrap());
        assert_eq!(certify_rootfree(&t2p1(&k3), &k5), Err(Error::FieldMismatch));
    }

    #[test]
    fn invalid_bound() {
        assert_eq!(
            find_rootfree(&f(3), 1),
            Err(Error::InvalidDegreeBound(1))
        );
    }

    #[test]
    fn degree_two_suffices_up_to_49() {
        for k in [
            f(2),
            f(3),
            f(5),
            f(7),
            f(11),
            f(13),
            f(17),
            f(19),
            f(23),
            f(29),
            f(31),
            f(37),
            f(41),
            f(43),
            f(47),
            FieldDescriptor::extension(2, 2, None).unwrap(),
            FieldDescriptor::extension(2, 3, None).unwrap(),
            FieldDescriptor::extension(2, 4, None).unwrap(),
            FieldDescriptor::extension(2, 5, None).unwrap(),
            FieldDescriptor::extension(3, 2, None).unwrap(),
            FieldDescriptor::extension(3, 3, None).unwrap(),
            FieldDescriptor::extension(5, 2, None).unwrap(),
            FieldDescriptor::extension(7, 2, None).unwrap(),
        ] {
            let w = find_rootfree(&k, 8).unwrap();
            assert_eq!(w.degree(), 2, "field {k}");
            assert!(w.poly.is_monic());
            assert!(certify_rootfree(&w, &k).unwrap());
            // determinism
            assert_eq!(find_rootfree(&k, 8).unwrap(), w);
        }
    }
}
