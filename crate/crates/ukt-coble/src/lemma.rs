//! The explicit bidegree-(16,4) generator f of the universal Kummer ideal:
//! it has the Coble-quartic shape in x, with degree-16 u-coefficients. Six
//! of the nonzero coefficients are printed products of quadratic and
//! quartic factors; the seventh, t₁₀₀, is a signed sum of eight orbit sums
//! under the order-1344 coordinate-permutation group.

use std::collections::HashMap;

use ukt_core::poly::{orbit_sum, SparsePoly};
use ukt_core::ring::QQ;
use ukt_core::satake::{satake_group_generators, satake_vars};
use ukt_core::UktError;

use crate::coeffs::assemble_quartic_shape;
use crate::upoly::UPoly;

/// Degree-2 form Σ c_i·u_{a_i}u_{b_i} from (coefficient, index, index) triples.
fn pairs(terms: &[(i128, usize, usize)]) -> UPoly {
    let mut p = UPoly::zero();
    for &(c, a, b) in terms {
        let mut e = [0u8; 8];
        e[a] += 1;
        e[b] += 1;
        p = p.add(&UPoly::monomial(&e, c));
    }
    p
}

/// Degree-4 form from (coefficient, exponent-vector) pairs.
fn quartic(terms: &[(i128, [u8; 8])]) -> UPoly {
    let mut p = UPoly::zero();
    for &(c, e) in terms {
        p = p.add(&UPoly::monomial(&e, c));
    }
    p
}

fn product(factors: &[UPoly]) -> UPoly {
    factors.iter().fold(UPoly::constant(1), |acc, f| acc.mul(f))
}

// Index shorthand: u-variables are numbered by the binary value of σ,
// u000 = 0, …, u111 = 7.

/// The four sign patterns (+,+), (+,−), (−,+), (−,−) applied to the last
/// two products of a four-term quadratic form a ± b ± c ∓∓ d; used for the
/// degree-8 "norm" factors common to all printed coefficients.
fn four_sign_product(a: (usize, usize), b: (usize, usize), c: (usize, usize), d: (usize, usize), signs: [[i128; 3]; 4]) -> UPoly {
    let factors: Vec<UPoly> = signs
        .iter()
        .map(|s| pairs(&[(1, a.0, a.1), (s[0], b.0, b.1), (s[1], c.0, c.1), (s[2], d.0, d.1)]))
        .collect();
    product(&factors)
}

fn s010_u() -> UPoly {
    // (u0u3 + u1u2 − u4u7 − u5u6)(u0u3 + u1u2 + u4u7 + u5u6)
    // (u0u3 − u1u2 + u4u7 − u5u6)(u0u3 − u1u2 − u4u7 + u5u6)
    // (u0u2u5u7 − u1u3u4u6)(u0u2u4u6 − u1u3u5u7)
    let head = four_sign_product(
        (0, 3),
        (1, 2),
        (4, 7),
        (5, 6),
        [[1, -1, -1], [1, 1, 1], [-1, 1, -1], [-1, -1, 1]],
    );
    let q1 = quartic(&[(1, [1, 0, 1, 0, 0, 1, 0, 1]), (-1, [0, 1, 0, 1, 1, 0, 1, 0])]);
    let q2 = quartic(&[(1, [1, 0, 1, 0, 1, 0, 1, 0]), (-1, [0, 1, 0, 1, 0, 1, 0, 1])]);
    product(&[head, q1, q2])
}

fn s011_u() -> UPoly {
    let head = four_sign_product(
        (0, 2),
        (1, 3),
        (4, 6),
        (5, 7),
        [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]],
    );
    let q1 = quartic(&[(1, [1, 0, 0, 1, 1, 0, 0, 1]), (-1, [0, 1, 1, 0, 0, 1, 1, 0])]);
    let q2 = quartic(&[(1, [1, 0, 0, 1, 0, 1, 1, 0]), (-1, [0, 1, 1, 0, 1, 0, 0, 1])]);
    product(&[head, q1, q2]).neg()
}

fn t001_u() -> UPoly {
    let head = four_sign_product(
        (0, 3),
        (1, 2),
        (4, 7),
        (5, 6),
        [[-1, -1, 1], [-1, 1, -1], [1, 1, 1], [1, -1, -1]],
    );
    let q1 = quartic(&[(1, [1, 0, 1, 0, 0, 1, 0, 1]), (-1, [0, 1, 0, 1, 1, 0, 1, 0])]);
    let q2 = quartic(&[
        (1, [2, 0, 2, 0, 0, 0, 0, 0]),
        (-1, [0, 2, 0, 2, 0, 0, 0, 0]),
        (1, [0, 0, 0, 0, 2, 0, 2, 0]),
        (-1, [0, 0, 0, 0, 0, 2, 0, 2]),
    ]);
    product(&[head, q1, q2]).neg()
}

fn t011_u() -> UPoly {
    let head = four_sign_product(
        (0, 2),
        (1, 3),
        (4, 6),
        (5, 7),
        [[-1, -1, 1], [-1, 1, -1], [1, -1, -1], [1, 1, 1]],
    );
    let q1 = quartic(&[(1, [1, 0, 0, 1, 0, 1, 1, 0]), (-1, [0, 1, 1, 0, 1, 0, 0, 1])]);
    let q2 = quartic(&[
        (1, [2, 0, 0, 2, 0, 0, 0, 0]),
        (-1, [0, 2, 2, 0, 0, 0, 0, 0]),
        (1, [0, 0, 0, 0, 2, 0, 0, 2]),
        (-1, [0, 0, 0, 0, 0, 2, 2, 0]),
    ]);
    product(&[head, q1, q2])
}

fn t101_u() -> UPoly {
    let head = four_sign_product(
        (0, 3),
        (1, 2),
        (4, 7),
        (5, 6),
        [[1, 1, 1], [-1, 1, -1], [1, -1, -1], [-1, -1, 1]],
    );
    let q1 = quartic(&[(1, [1, 0, 1, 0, 1, 0, 1, 0]), (-1, [0, 1, 0, 1, 0, 1, 0, 1])]);
    let q2 = quartic(&[
        (1, [2, 0, 2, 0, 0, 0, 0, 0]),
        (-1, [0, 2, 0, 2, 0, 0, 0, 0]),
        (-1, [0, 0, 0, 0, 2, 0, 2, 0]),
        (1, [0, 0, 0, 0, 0, 2, 0, 2]),
    ]);
    product(&[head, q1, q2]).neg()
}

fn t111_u() -> UPoly {
    let head = four_sign_product(
        (0, 2),
        (1, 3),
        (4, 6),
        (5, 7),
        [[-1, 1, -1], [-1, -1, 1], [1, 1, 1], [1, -1, -1]],
    );
    let q1 = quartic(&[(1, [1, 0, 0, 1, 1, 0, 0, 1]), (-1, [0, 1, 1, 0, 0, 1, 1, 0])]);
    let q2 = quartic(&[
        (1, [2, 0, 0, 2, 0, 0, 0, 0]),
        (-1, [0, 2, 2, 0, 0, 0, 0, 0]),
        (-1, [0, 0, 0, 0, 2, 0, 0, 2]),
        (1, [0, 0, 0, 0, 0, 2, 2, 0]),
    ]);
    product(&[head, q1, q2])
}

/// t₁₀₀ as a signed combination of orbit sums under the order-1344 group of
/// coordinate permutations; each bracket's orbit size is asserted.
fn t100_u() -> Result<UPoly, UktError> {
    let gens = satake_group_generators();
    let vars = satake_vars();
    let data: [(i128, [u8; 8], usize); 8] = [
        (1, [4, 0, 4, 0, 4, 0, 0, 4], 4),
        (1, [6, 0, 2, 4, 2, 0, 2, 0], 16),
        (2, [4, 2, 2, 4, 2, 0, 0, 2], 12),
        (-1, [4, 0, 0, 4, 4, 0, 4, 0], 4),
        (-1, [6, 0, 4, 2, 2, 0, 0, 2], 16),
        (-2, [4, 2, 4, 2, 2, 0, 2, 0], 12),
        (4, [5, 1, 5, 1, 1, 1, 1, 1], 4),
        (-4, [5, 1, 1, 5, 1, 1, 1, 1], 4),
    ];
    let mut t = UPoly::zero();
    for (coeff, seed, expected) in data {
        let (sum, size) = orbit_sum(QQ, vars.clone(), &gens, &seed)?;
        if size != expected {
            return Err(UktError::Consistency(format!(
                "orbit of {seed:?} has size {size}, expected {expected}"
            )));
        }
        t = t.add(&UPoly::from_sparse(&sum)?.scale(coeff));
    }
    if t.num_terms() != 72 {
        return Err(UktError::Consistency(format!(
            "t100 has {} terms, expected 72",
            t.num_terms()
        )));
    }
    Ok(t)
}

/// The seven nonzero degree-16 u-coefficients of f, keyed like the
/// Coble-quartic coefficients.
pub fn lemma_coeffs_u() -> Result<HashMap<String, UPoly>, UktError> {
    let mut map = HashMap::new();
    map.insert("s010".to_string(), s010_u());
    map.insert("s011".to_string(), s011_u());
    map.insert("t001".to_string(), t001_u());
    map.insert("t011".to_string(), t011_u());
    map.insert("t101".to_string(), t101_u());
    map.insert("t111".to_string(), t111_u());
    map.insert("t100".to_string(), t100_u()?);
    for (name, p) in &map {
        if p.homogeneous_degree()? != 16 {
            return Err(UktError::Consistency(format!(
                "lemma coefficient {name} is not of degree 16"
            )));
        }
    }
    Ok(map)
}

/// The bidegree-(16,4) Kummer-ideal generator with 1168 monomials, over the
/// combined (u, x) variable table.
pub fn lemma_f() -> Result<SparsePoly<QQ>, UktError> {
    let coeffs = lemma_coeffs_u()?;
    let f = assemble_quartic_shape(&coeffs, 1)?;
    if f.num_terms() != 1168 {
        return Err(UktError::Consistency(format!(
            "generator has {} terms, expected 1168",
            f.num_terms()
        )));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t100_has_72_terms() {
        assert_eq!(t100_u().unwrap().num_terms(), 72);
    }

    #[test]
    fn generator_has_1168_monomials() {
        let f = lemma_f().unwrap();
        assert_eq!(f.num_terms(), 1168);
        // bidegree (16,4): u-part degree 16, x-part degree 4
        for (m, _) in f.terms() {
            let ud: u32 = m[..8].iter().map(|&e| e as u32).sum();
            let xd: u32 = m[8..].iter().map(|&e| e as u32).sum();
            assert_eq!((ud, xd), (16, 4));
        }
    }
}
