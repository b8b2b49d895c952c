//! The degree-16 Satake hypersurface in the eight second-order theta
//! constants: construction as a sum of orbit sums under the order-1344
//! coordinate-permutation group, its Fourier–Jacobi degeneration to the
//! genus-2 determinant, the 36 even quadrics, and the Torelli-boundary
//! (Segre) singularity check.

use std::sync::Arc;

use crate::error::UktError;
use crate::kummer2::universal_kummer_det;
use crate::perm::{Perm, StabChain};
use crate::poly::{orbit_sum, SparsePoly, VarTable};
use crate::ring::{Ring, QQ};

type P = SparsePoly<QQ>;

/// Variable order u000, u001, …, u111 (index = binary).
pub fn satake_vars() -> Arc<VarTable> {
    VarTable::new(["u000", "u001", "u010", "u011", "u100", "u101", "u110", "u111"])
}

/// The four transpositions generating the order-1344 group G of coordinate
/// permutations, as maps on variable indices.
pub fn satake_group_generators() -> Vec<Vec<usize>> {
    let swap2 = |a: usize, b: usize, c: usize, d: usize| {
        let mut g: Vec<usize> = (0..8).collect();
        g.swap(a, b);
        g.swap(c, d);
        g
    };
    vec![
        swap2(0b001, 0b010, 0b101, 0b110),
        swap2(0b010, 0b100, 0b011, 0b101),
        swap2(0b000, 0b001, 0b010, 0b011),
        swap2(0b100, 0b101, 0b110, 0b111),
    ]
}

/// Order of G as a permutation group on the eight coordinates.
pub fn satake_group_order() -> u64 {
    let gens: Vec<Perm> = satake_group_generators()
        .into_iter()
        .map(Perm::from_map)
        .collect();
    StabChain::new(8, &gens).order()
}

/// The eight orbit-sum building blocks: (coefficient, seed exponents,
/// expected orbit size).
pub fn satake_orbit_data() -> [(i64, [u8; 8], usize); 8] {
    [
        (1, [4, 4, 4, 0, 4, 0, 0, 0], 56),
        (-2, [9, 1, 1, 1, 1, 1, 1, 1], 8),
        (2, [4, 4, 2, 2, 2, 2, 0, 0], 84),
        (1, [8, 2, 2, 0, 2, 0, 0, 2], 56),
        (-1, [6, 4, 2, 0, 2, 0, 2, 0], 224),
        (4, [5, 5, 1, 1, 1, 1, 1, 1], 28),
        (-16, [3, 3, 3, 3, 1, 1, 1, 1], 14),
        (72, [2, 2, 2, 2, 2, 2, 2, 2], 1),
    ]
}

/// The 471-term Satake polynomial, together with the eight orbit sizes.
pub fn satake_poly() -> Result<(P, Vec<usize>), UktError> {
    let vars = satake_vars();
    let gens = satake_group_generators();
    let mut poly = SparsePoly::zero(QQ, vars.clone());
    let mut sizes = Vec::with_capacity(8);
    for (coeff, seed, expected) in satake_orbit_data() {
        let (sum, size) = orbit_sum(QQ, vars.clone(), &gens, &seed)?;
        if size != expected {
            return Err(UktError::Consistency(format!(
                "orbit of {seed:?} has size {size}, expected {expected}"
            )));
        }
        sizes.push(size);
        poly = poly.add(&sum.scale(&QQ.from_i64(coeff)));
    }
    if poly.num_terms() != 471 {
        return Err(UktError::Consistency(format!(
            "Satake polynomial has {} terms, expected 471",
            poly.num_terms()
        )));
    }
    Ok((poly, sizes))
}

/// Degenerate the Satake polynomial with u_{0ab} ↦ u_{ab} and
/// u_{1ab} ↦ 2q·x_{ab}: the q⁰–q³ and q⁵–q⁷ components vanish and the q⁴
/// component is exactly −1 times the genus-2 determinant (the sign is an
/// artifact of the determinant's row order; both generate the same
/// principal ideal, and the −1 is pinned down here as part of the check).
pub fn fourier_jacobi_check() -> Result<(), UktError> {
    let (s, _) = satake_poly()?;
    let target = VarTable::new(["q", "u00", "u01", "u10", "u11", "x00", "x01", "x10", "x11"]);
    let mono = |exps: [u8; 9], c: i64| {
        SparsePoly::monomial(QQ, target.clone(), &exps, QQ.from_i64(c))
    };
    let mut images = Vec::with_capacity(8);
    for ab in 0..4u8 {
        let mut e = [0u8; 9];
        e[1 + ab as usize] = 1;
        images.push(mono(e, 1)); // u_{0ab} ↦ u_{ab}
    }
    for ab in 0..4u8 {
        let mut e = [0u8; 9];
        e[0] = 1;
        e[5 + ab as usize] = 1;
        images.push(mono(e, 2)); // u_{1ab} ↦ 2q·x_{ab}
    }
    let expanded = s.substitute(&images)?;
    // split by q-degree, dropping the q variable
    let mut components: std::collections::BTreeMap<u8, P> = std::collections::BTreeMap::new();
    for (m, c) in expanded.terms() {
        let k = m[0];
        let rest: Box<[u8]> = m[1..].to_vec().into_boxed_slice();
        components
            .entry(k)
            .or_insert_with(|| SparsePoly::zero(QQ, kummer_table()))
            .add_term(rest, c.clone());
    }
    for k in 0..8u8 {
        let comp = components.get(&k);
        match (k, comp) {
            (4, Some(c)) => {
                if !c.add(&universal_kummer_det()).is_zero() {
                    return Err(UktError::Consistency(
                        "q⁴ component differs from ±(genus-2 determinant)".into(),
                    ));
                }
            }
            (4, None) => {
                return Err(UktError::Consistency("q⁴ component missing".into()));
            }
            (_, Some(c)) if !c.is_zero() => {
                return Err(UktError::Consistency(format!(
                    "unexpected nonzero q^{k} component"
                )));
            }
            _ => {}
        }
    }
    Ok(())
}

fn kummer_table() -> Arc<VarTable> {
    crate::kummer2::kummer_vars()
}

/// All even theta characteristics (ε, ε′) ∈ F₂³×F₂³ with ε·ε′ = 0.
pub fn even_characteristics() -> Vec<(u8, u8)> {
    let dot = |x: u8, y: u8| ((x & y).count_ones() & 1) as u8;
    let mut out = Vec::new();
    for eps in 0..8u8 {
        for epsp in 0..8u8 {
            if dot(eps, epsp) == 0 {
                out.push((eps, epsp));
            }
        }
    }
    out
}

/// The quadric Σ_σ (−1)^{σ·ε′} u_σ u_{σ+ε} attached to an even
/// characteristic; it equals the square of the corresponding first-order
/// theta constant.
pub fn theta_square_quadric(eps: u8, epsp: u8) -> Result<P, UktError> {
    let dot = |x: u8, y: u8| ((x & y).count_ones() & 1) as u8;
    if dot(eps, epsp) != 0 {
        return Err(UktError::Domain(
            "odd characteristic: theta constant vanishes identically".into(),
        ));
    }
    let vars = satake_vars();
    let mut q = SparsePoly::zero(QQ, vars.clone());
    for sigma in 0..8u8 {
        let mut e = [0u8; 8];
        e[sigma as usize] += 1;
        e[(sigma ^ eps) as usize] += 1;
        let sign = if dot(sigma, epsp) == 0 { 1 } else { -1 };
        q = q.add(&SparsePoly::monomial(QQ, vars.clone(), &e, QQ.from_i64(sign)));
    }
    Ok(q)
}

/// The 36 distinct even quadrics, keyed by characteristic.
pub fn hyperelliptic_quadrics() -> Result<Vec<((u8, u8), P)>, UktError> {
    let mut out = Vec::new();
    for (eps, epsp) in even_characteristics() {
        out.push(((eps, epsp), theta_square_quadric(eps, epsp)?));
    }
    if out.len() != 36 {
        return Err(UktError::Consistency(format!(
            "{} even characteristics, expected 36",
            out.len()
        )));
    }
    Ok(out)
}

/// Check that the Satake polynomial is singular along the Segre component
/// of the Torelli boundary: with u_{0ab} = λ·v_{ab}, u_{1ab} = μ·v_{ab},
/// every partial ∂𝒮/∂u_σ vanishes identically in (λ, μ, v).
pub fn torelli_boundary_check() -> Result<(), UktError> {
    let (s, _) = satake_poly()?;
    let target = VarTable::new(["l", "m", "v00", "v01", "v10", "v11"]);
    let mut images = Vec::with_capacity(8);
    for sigma in 0..8usize {
        let mut e = [0u8; 6];
        e[if sigma < 4 { 0 } else { 1 }] = 1;
        e[2 + (sigma & 3)] = 1;
        images.push(SparsePoly::monomial(QQ, target.clone(), &e, QQ.from_i64(1)));
    }
    if !s.substitute(&images)?.is_zero() {
        return Err(UktError::Consistency(
            "Satake polynomial does not vanish on the Segre component".into(),
        ));
    }
    for sigma in 0..8usize {
        if !s.derivative(sigma).substitute(&images)?.is_zero() {
            return Err(UktError::Consistency(format!(
                "partial derivative {sigma} does not vanish on the Segre component"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{eval_fp, random_points};
    use crate::ring::Fp;

    #[test]
    fn group_order_is_1344() {
        assert_eq!(satake_group_order(), 1344);
    }

    #[test]
    fn polynomial_shape() {
        let (s, sizes) = satake_poly().unwrap();
        assert_eq!(s.num_terms(), 471);
        assert_eq!(sizes, vec![56, 8, 84, 56, 224, 28, 14, 1]);
        assert!(s.is_homogeneous_of_degree(16));
        assert_eq!(s.coeff(&[2; 8]), QQ.from_i64(72));
    }

    #[test]
    fn invariance_under_generators() {
        let (s, _) = satake_poly().unwrap();
        let ones = vec![QQ.from_i64(1); 8];
        for g in satake_group_generators() {
            assert!(s.apply_scaled_permutation(&g, &ones).sub(&s).is_zero());
        }
    }

    #[test]
    fn fourier_jacobi_degeneration() {
        // every monomial's degree in the u₁** block lies in {4, 8, 12, 16}
        let (s, _) = satake_poly().unwrap();
        for (m, _) in s.terms() {
            let d: u32 = m[4..].iter().map(|&e| e as u32).sum();
            assert!(matches!(d, 4 | 8 | 12 | 16), "u1-degree {d}");
        }
        fourier_jacobi_check().unwrap();
    }

    #[test]
    fn even_quadrics() {
        let quadrics = hyperelliptic_quadrics().unwrap();
        assert_eq!(quadrics.len(), 36);
        // (0,0) is the sum of squares
        let sum_sq = &quadrics.iter().find(|((e, ep), _)| *e == 0 && *ep == 0).unwrap().1;
        let vars = satake_vars();
        let mut want = SparsePoly::zero(QQ, vars.clone());
        for i in 0..8 {
            let mut e = [0u8; 8];
            e[i] = 2;
            want = want.add(&SparsePoly::monomial(QQ, vars.clone(), &e, QQ.from_i64(1)));
        }
        assert!(sum_sq.sub(&want).is_zero());
        // pairwise distinct
        let keys: std::collections::BTreeSet<String> =
            quadrics.iter().map(|(_, q)| q.serialize()).collect();
        assert_eq!(keys.len(), 36);
        // odd characteristics are rejected
        assert!(theta_square_quadric(0b001, 0b001).is_err());
    }

    #[test]
    fn torelli_boundary() {
        torelli_boundary_check().unwrap();
        // a random non-Segre point leaves some partial nonzero
        let (s, _) = satake_poly().unwrap();
        let fp = Fp::new(1000033, false).unwrap();
        let pt = random_points(fp.p, 8, 1, 13)[0].clone();
        let witness = (0..8)
            .map(|i| eval_fp(&s.derivative(i).to_fp(&fp).unwrap(), &pt))
            .any(|v| v != 0);
        assert!(witness);
    }
}
