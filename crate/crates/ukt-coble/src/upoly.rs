//! Fast homogeneous polynomials in the eight second-order theta constants:
//! exponent vectors are packed into a single `u64` (one byte per variable)
//! and coefficients are 128-bit integers with overflow checks. This keeps
//! the degree-28 coefficient expansions, whose intermediates reach ~10⁵
//! terms, orders of magnitude faster than generic rational arithmetic.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use ukt_core::poly::{SparsePoly, VarTable};
use ukt_core::ring::QQ;
use ukt_core::UktError;

/// Packs an 8-variable exponent vector into a u64, one byte per variable.
pub fn pack(e: &[u8; 8]) -> u64 {
    u64::from_le_bytes(*e)
}

/// Inverse of [`pack`].
pub fn unpack(key: u64) -> [u8; 8] {
    key.to_le_bytes()
}

/// A sparse polynomial in 8 variables with `i128` coefficients. Exponent
/// addition is plain `u64` addition, which is carry-free as long as every
/// individual exponent stays below 256 (here degrees never exceed 32).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UPoly {
    terms: HashMap<u64, i128>,
}

impl UPoly {
    pub fn zero() -> UPoly {
        UPoly { terms: HashMap::new() }
    }

    pub fn constant(c: i128) -> UPoly {
        let mut p = UPoly::zero();
        p.add_term(0, c);
        p
    }

    pub fn monomial(e: &[u8; 8], c: i128) -> UPoly {
        let mut p = UPoly::zero();
        p.add_term(pack(e), c);
        p
    }

    pub fn add_term(&mut self, key: u64, c: i128) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(key).or_insert(0);
        *slot = slot.checked_add(c).expect("coefficient overflow");
        if *slot == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u64, &i128)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, *c);
        }
        out
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.checked_neg().expect("coefficient overflow"));
        }
        out
    }

    pub fn neg(&self) -> UPoly {
        let mut out = UPoly::zero();
        for (k, c) in &self.terms {
            out.add_term(*k, -c);
        }
        out
    }

    pub fn scale(&self, c: i128) -> UPoly {
        let mut out = UPoly::zero();
        for (k, v) in &self.terms {
            out.add_term(*k, v.checked_mul(c).expect("coefficient overflow"));
        }
        out
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        let mut out = UPoly::zero();
        // iterate over the smaller factor in the outer loop
        let (a, b) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                out.add_term(ka + kb, ca.checked_mul(*cb).expect("coefficient overflow"));
            }
        }
        out
    }

    /// Exact division by an integer; errors if any coefficient resists.
    pub fn div_exact(&self, d: i128) -> Result<UPoly, UktError> {
        let mut out = UPoly::zero();
        for (k, c) in &self.terms {
            if c % d != 0 {
                return Err(UktError::Consistency(format!(
                    "coefficient {c} is not divisible by {d}"
                )));
            }
            out.add_term(*k, c / d);
        }
        Ok(out)
    }

    /// Total degree of every monomial if the polynomial is homogeneous.
    pub fn homogeneous_degree(&self) -> Result<u32, UktError> {
        let mut deg: Option<u32> = None;
        for k in self.terms.keys() {
            let d = unpack(*k).iter().map(|&e| e as u32).sum();
            match deg {
                None => deg = Some(d),
                Some(existing) if existing != d => {
                    return Err(UktError::Consistency(format!(
                        "polynomial is not homogeneous: degrees {existing} and {d}"
                    )))
                }
                _ => {}
            }
        }
        deg.ok_or_else(|| UktError::Consistency("zero polynomial has no degree".into()))
    }

    /// Conversion from a small-integer rational sparse polynomial.
    pub fn from_sparse(poly: &SparsePoly<QQ>) -> Result<UPoly, UktError> {
        if poly.vars().len() != 8 {
            return Err(UktError::Dimension("expected 8 variables".into()));
        }
        let mut out = UPoly::zero();
        for (m, c) in poly.terms() {
            if !c.denom().is_one() {
                return Err(UktError::Consistency("non-integer coefficient".into()));
            }
            let v = c
                .numer()
                .to_i128()
                .ok_or_else(|| UktError::Consistency("coefficient exceeds i128".into()))?;
            let mut e = [0u8; 8];
            e.copy_from_slice(m);
            out.add_term(pack(&e), v);
        }
        Ok(out)
    }

    /// Conversion to a rational sparse polynomial over the given 8-variable
    /// table, with an optional denominator.
    pub fn to_sparse(&self, vars: std::sync::Arc<VarTable>, denom: i128) -> SparsePoly<QQ> {
        let mut out = SparsePoly::zero(QQ, vars);
        let d = BigRational::from_integer(denom.into());
        for (k, c) in &self.terms {
            let e = unpack(*k).to_vec().into_boxed_slice();
            let q = BigRational::from_integer((*c).into()) / d.clone();
            out.add_term(e, q);
        }
        out
    }

    /// Largest absolute coefficient (for sanity diagnostics).
    pub fn max_coeff(&self) -> i128 {
        self.terms.values().map(|c| c.abs()).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_roundtrip_and_carry_free_addition() {
        let a = [1u8, 2, 3, 4, 5, 6, 7, 8];
        let b = [8u8, 7, 6, 5, 4, 3, 2, 1];
        let sum = pack(&a) + pack(&b);
        assert_eq!(unpack(sum), [9u8; 8]);
        assert_eq!(unpack(pack(&a)), a);
    }

    #[test]
    fn multiplication_and_exact_division() {
        let p = UPoly::monomial(&[1, 0, 0, 0, 0, 0, 0, 0], 2)
            .add(&UPoly::monomial(&[0, 1, 0, 0, 0, 0, 0, 0], -2));
        let sq = p.mul(&p);
        assert_eq!(sq.num_terms(), 3);
        let half = sq.div_exact(4).unwrap();
        assert_eq!(half.max_coeff(), 2);
        assert!(sq.div_exact(8).is_err());
        assert_eq!(sq.homogeneous_degree().unwrap(), 2);
    }
}
