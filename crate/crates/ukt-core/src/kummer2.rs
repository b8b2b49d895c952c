//! The universal Kummer surface in genus 2: the 5×5 determinantal quartic
//! over ℙ³×ℙ³, its 16₆ node configuration, the Segre cubic relation among
//! the 4×4 minors, and the product-of-elliptic-curves locus.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::UktError;
use crate::poly::{SparsePoly, VarTable};
use crate::ring::{Ring, QQ};

/// Variable order: u00 u01 u10 u11 x00 x01 x10 x11.
pub fn kummer_vars() -> Arc<VarTable> {
    VarTable::new(["u00", "u01", "u10", "u11", "x00", "x01", "x10", "x11"])
}

type P = SparsePoly<QQ>;

fn mono(vars: &Arc<VarTable>, exps: [u8; 8], c: i64) -> P {
    SparsePoly::monomial(QQ, vars.clone(), &exps, QQ.from_i64(c))
}

/// The 5×5 matrix whose determinant (divided by 16) cuts out the surface:
/// first row the five symmetric quartic monomial types in x, rows 2–5 the
/// x-gradient of the first row evaluated at u.
pub fn kummer_matrix() -> Vec<Vec<P>> {
    let v = kummer_vars();
    // index helpers: u00=0 u01=1 u10=2 u11=3, x00=4 x01=5 x10=6 x11=7
    let xq = |a: usize, b: usize, c: usize, d: usize| {
        let mut e = [0u8; 8];
        e[4 + a] += 1;
        e[4 + b] += 1;
        e[4 + c] += 1;
        e[4 + d] += 1;
        e
    };
    let row1 = vec![
        mono(&v, xq(0, 0, 0, 0), 1)
            .add(&mono(&v, xq(1, 1, 1, 1), 1))
            .add(&mono(&v, xq(2, 2, 2, 2), 1))
            .add(&mono(&v, xq(3, 3, 3, 3), 1)),
        mono(&v, xq(0, 0, 1, 1), 1).add(&mono(&v, xq(2, 2, 3, 3), 1)),
        mono(&v, xq(0, 0, 2, 2), 1).add(&mono(&v, xq(1, 1, 3, 3), 1)),
        mono(&v, xq(0, 0, 3, 3), 1).add(&mono(&v, xq(1, 1, 2, 2), 1)),
        mono(&v, xq(0, 1, 2, 3), 1),
    ];
    let uq = |a: usize, b: usize, c: usize, k: i64| {
        let mut e = [0u8; 8];
        e[a] += 1;
        e[b] += 1;
        e[c] += 1;
        mono(&v, e, k)
    };
    // gradient rows: ∂/∂x_s of row 1, with x ↦ u
    let grad_row = |s: usize| {
        let others: Vec<usize> = (0..4).filter(|&t| t != s).collect();
        let (o1, o2, o3) = (others[0], others[1], others[2]);
        // pairing partner of s for each of the three pair columns
        let partner = |col: usize| s ^ col; // 00↔01 via bit pattern on (row,col) bits
        vec![
            uq(s, s, s, 4),
            uq(s, partner(1), partner(1), 2),
            uq(s, partner(2), partner(2), 2),
            uq(s, partner(3), partner(3), 2),
            uq(o1, o2, o3, 1),
        ]
    };
    let mut m = vec![row1];
    for s in 0..4 {
        m.push(grad_row(s));
    }
    m
}

/// Determinant of a square matrix of polynomials by Laplace expansion.
pub fn det_poly(m: &[Vec<P>]) -> P {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = SparsePoly::zero(QQ, m[0][0].vars().clone());
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let sub: Vec<Vec<P>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&det_poly(&sub));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// The five signed 4×4 minors of rows 2–5 (the expansion coefficients of
/// the determinant along its first row), in column order: r, s01, s10,
/// s11, t. Each is homogeneous of degree 12 in u.
pub fn row_minors() -> Vec<P> {
    let m = kummer_matrix();
    (0..5)
        .map(|j| {
            let sub: Vec<Vec<P>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j)
                        .map(|(_, e)| e.clone())
                        .collect()
                })
                .collect();
            let d = det_poly(&sub);
            if j % 2 == 0 {
                d
            } else {
                d.neg()
            }
        })
        .collect()
}

/// The full determinant of the 5×5 matrix (before dividing by 16).
pub fn universal_kummer_det() -> P {
    det_poly(&kummer_matrix())
}

/// The 16 node coordinate 4-tuples: linear forms in u read off as the
/// x-coefficients of the entries of the structured 4×4 matrix product.
pub fn nodes() -> Vec<[P; 4]> {
    let v = kummer_vars();
    let lin = |i: usize, sign: i64| {
        let mut e = [0u8; 8];
        e[i] = 1;
        mono(&v, e, sign)
    };
    // left factor: entries ±u_k, as (index, sign)
    let umat: [[(usize, i64); 4]; 4] = [
        [(0, 1), (2, 1), (1, 1), (3, 1)],
        [(3, 1), (1, -1), (2, 1), (0, -1)],
        [(1, 1), (3, 1), (0, -1), (2, -1)],
        [(2, -1), (0, 1), (3, 1), (1, -1)],
    ];
    // right factor: entries ±x_k, as (index, sign); x00..x11 = 0..3 here
    let xmat: [[(usize, i64); 4]; 4] = [
        [(0, 1), (3, 1), (1, -1), (2, 1)],
        [(2, 1), (1, 1), (3, 1), (0, -1)],
        [(1, 1), (2, -1), (0, 1), (3, 1)],
        [(3, 1), (0, -1), (2, -1), (1, -1)],
    ];
    let mut out = Vec::with_capacity(16);
    for i in 0..4 {
        for j in 0..4 {
            // coefficient of x_b in Σ_k u_{i,k}·x_{k,j}
            let mut coeffs: [P; 4] = std::array::from_fn(|_| SparsePoly::zero(QQ, v.clone()));
            for k in 0..4 {
                let (ui, us) = umat[i][k];
                let (xb, xs) = xmat[k][j];
                coeffs[xb] = coeffs[xb].add(&lin(ui, us * xs));
            }
            out.push(coeffs);
        }
    }
    out
}

/// Substitute a node 4-tuple for (x00,x01,x10,x11) in a polynomial.
fn substitute_x(poly: &P, node: &[P; 4]) -> Result<P, UktError> {
    let v = kummer_vars();
    let mut images: Vec<P> = (0..4).map(|i| SparsePoly::var(QQ, v.clone(), i)).collect();
    images.extend(node.iter().cloned());
    poly.substitute(&images)
}

/// Check that each of the 16 nodes annihilates the full x-gradient of the
/// determinant, identically as polynomials in u.
pub fn nodes_and_singularity_check() -> Result<(), UktError> {
    let det = universal_kummer_det();
    let grads: Vec<P> = (4..8).map(|i| det.derivative(i)).collect();
    for (idx, node) in nodes().iter().enumerate() {
        for g in &grads {
            let r = substitute_x(g, node)?;
            if !r.is_zero() {
                return Err(UktError::Consistency(format!(
                    "node {idx} leaves a nonzero gradient residual"
                )));
            }
        }
    }
    Ok(())
}

/// Expand the Segre cubic relation among the five minors; returns the
/// (expected zero) polynomial 16r³ + rt² + 4(s01·s10·s11 − r·Σs²).
pub fn segre_cubic_residual() -> P {
    let m = row_minors();
    let (r, s01, s10, s11, t) = (&m[0], &m[1], &m[2], &m[3], &m[4]);
    let four = QQ.from_i64(4);
    let sixteen = QQ.from_i64(16);
    let sum_sq = s01.mul(s01).add(&s10.mul(s10)).add(&s11.mul(s11));
    r.pow(3)
        .scale(&sixteen)
        .add(&r.mul(&t.mul(t)))
        .add(&s01.mul(s10).mul(s11).sub(&r.mul(&sum_sq)).scale(&four))
}

/// Normalize an integral-content polynomial: primitive, first sorted
/// coefficient positive. Used to compare factors up to sign and scale.
fn normalize_primitive(p: &P) -> P {
    let mut content = BigInt::zero();
    let mut lead: Option<BigRational> = None;
    for (_, c) in p.sorted_terms() {
        assert!(c.denom().is_one(), "expected integral coefficients");
        content = content.gcd(c.numer());
        if lead.is_none() {
            lead = Some(c.clone());
        }
    }
    let lead = lead.expect("nonzero polynomial");
    if lead.numer().is_negative() {
        content = -content;
    }
    p.scale(&BigRational::from_integer(content).recip())
}

/// The ten quadrics whose product vanishes exactly when the abelian
/// surface degenerates to a product of elliptic curves.
pub fn product_locus_reference() -> Vec<P> {
    let v = kummer_vars();
    let qm = |pairs: &[([u8; 4], i64)]| {
        let mut p = SparsePoly::zero(QQ, v.clone());
        for (e, c) in pairs {
            let mut exps = [0u8; 8];
            exps[..4].copy_from_slice(e);
            p = p.add(&mono(&v, exps, *c));
        }
        p
    };
    vec![
        qm(&[([1, 0, 0, 1], 1), ([0, 1, 1, 0], 1)]),
        qm(&[([1, 1, 0, 0], 1), ([0, 0, 1, 1], 1)]),
        qm(&[([1, 0, 1, 0], 1), ([0, 1, 0, 1], 1)]),
        qm(&[([1, 0, 1, 0], 1), ([0, 1, 0, 1], -1)]),
        qm(&[([1, 0, 0, 1], 1), ([0, 1, 1, 0], -1)]),
        qm(&[([2, 0, 0, 0], 1), ([0, 2, 0, 0], 1), ([0, 0, 2, 0], -1), ([0, 0, 0, 2], -1)]),
        qm(&[([2, 0, 0, 0], 1), ([0, 2, 0, 0], -1), ([0, 0, 2, 0], 1), ([0, 0, 0, 2], -1)]),
        qm(&[([1, 1, 0, 0], 1), ([0, 0, 1, 1], -1)]),
        qm(&[([2, 0, 0, 0], 1), ([0, 2, 0, 0], -1), ([0, 0, 2, 0], -1), ([0, 0, 0, 2], 1)]),
        qm(&[([2, 0, 0, 0], 1), ([0, 2, 0, 0], 1), ([0, 0, 2, 0], 1), ([0, 0, 0, 2], 1)]),
    ]
}

/// Substitute x ↦ u in the node-matrix entries and return the distinct
/// nonzero entries, normalized up to sign and scale.
pub fn product_locus_factors() -> Result<Vec<P>, UktError> {
    let v = kummer_vars();
    let u_images: Vec<P> = (0..4).map(|i| SparsePoly::var(QQ, v.clone(), i)).collect();
    let mut set = std::collections::BTreeSet::new();
    for node in nodes() {
        // entry(u, x ↦ u) = Σ_b node_b(u)·u_b
        let mut entry = SparsePoly::zero(QQ, v.clone());
        for (b, c) in node.iter().enumerate() {
            entry = entry.add(&c.mul(&u_images[b]));
        }
        if !entry.is_zero() {
            set.insert(normalize_primitive(&entry).serialize());
        }
    }
    let expected: std::collections::BTreeSet<String> = product_locus_reference()
        .iter()
        .map(|f| normalize_primitive(f).serialize())
        .collect();
    if set != expected {
        return Err(UktError::Consistency(format!(
            "product-locus factors mismatch: got {} distinct entries",
            set.len()
        )));
    }
    product_locus_reference()
        .iter()
        .map(|f| Ok(normalize_primitive(f)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::random_points;
    use crate::ring::Fp;

    #[test]
    fn det_bidegree_and_integrality() {
        let det = universal_kummer_det();
        assert!(det.is_homogeneous_of_degree(16));
        // bidegree (12,4): every term has u-degree 12 and x-degree 4
        for (m, _) in det.terms() {
            let du: u32 = m[..4].iter().map(|&e| e as u32).sum();
            let dx: u32 = m[4..].iter().map(|&e| e as u32).sum();
            assert_eq!((du, dx), (12, 4));
        }
        // divisible by 16 over the integers
        let sixteenth = QQ.from_i64(16).recip();
        for (_, c) in det.scale(&sixteenth).terms() {
            assert!(c.denom().is_one(), "det/16 not integral");
        }
    }

    #[test]
    fn first_row_cofactors() {
        let det = universal_kummer_det();
        let minors = row_minors();
        for m in &minors {
            assert!(m.is_homogeneous_of_degree(12));
        }
        // coefficient of x00⁴ in det equals the first signed minor
        let mut rebuilt = SparsePoly::zero(QQ, kummer_vars().clone());
        let row1 = &kummer_matrix()[0];
        for (c, m) in row1.iter().zip(minors.iter()) {
            rebuilt = rebuilt.add(&c.mul(m));
        }
        assert!(rebuilt.sub(&det).is_zero());
    }

    #[test]
    fn determinant_vanishes_at_x_equals_u() {
        let v = kummer_vars();
        let mut images: Vec<P> = (0..4).map(|i| SparsePoly::var(QQ, v.clone(), i)).collect();
        images.extend((0..4).map(|i| SparsePoly::var(QQ, v.clone(), i)));
        let det = universal_kummer_det();
        assert!(det.substitute(&images).unwrap().is_zero());
    }

    #[test]
    fn all_sixteen_nodes_are_singular_points() {
        nodes_and_singularity_check().unwrap();
    }

    #[test]
    fn node_list_contains_printed_examples_and_is_projectively_distinct() {
        let nds = nodes();
        assert_eq!(nds.len(), 16);
        let v = kummer_vars();
        let lin = |i: usize, s: i64| {
            let mut e = [0u8; 8];
            e[i] = 1;
            mono(&v, e, s)
        };
        let matches = |node: &[P; 4], want: &[P; 4]| {
            node.iter().zip(want).all(|(a, b)| a.sub(b).is_zero())
                || node.iter().zip(want).all(|(a, b)| a.add(b).is_zero())
        };
        let diag: [P; 4] = [lin(0, 1), lin(1, 1), lin(2, 1), lin(3, 1)];
        let second: [P; 4] = [lin(0, 1), lin(1, -1), lin(2, 1), lin(3, -1)];
        assert!(nds.iter().any(|n| matches(n, &diag)));
        assert!(nds.iter().any(|n| matches(n, &second)));
        // The 16 nodes are exactly the half-period translates of the
        // diagonal: coordinates σ ↦ (−1)^{b·σ} u_{σ+a} for (a,b) ∈ F₂²×F₂².
        let dot = |x: usize, y: usize| ((x & y).count_ones() & 1) as i64;
        for a in 0..4usize {
            for b in 0..4usize {
                let want: [P; 4] =
                    std::array::from_fn(|s| lin(s ^ a, if dot(b, s) == 0 { 1 } else { -1 }));
                assert!(
                    nds.iter().any(|n| matches(n, &want)),
                    "translate ({a},{b}) missing"
                );
            }
        }
        // pairwise projectively distinct at a random rational point
        let pt = random_points(1000033, 4, 1, 7)[0].clone();
        let evals: Vec<Vec<BigRational>> = nds
            .iter()
            .map(|n| {
                n.iter()
                    .map(|c| {
                        let full: Vec<BigRational> = pt
                            .iter()
                            .map(|&x| BigRational::from_integer((x as i64).into()))
                            .chain((0..4).map(|_| BigRational::zero()))
                            .collect();
                        c.eval(&full).unwrap()
                    })
                    .collect()
            })
            .collect();
        for i in 0..16 {
            for j in (i + 1)..16 {
                let proportional = (0..4).all(|a| {
                    (0..4).all(|b| &evals[i][a] * &evals[j][b] == &evals[i][b] * &evals[j][a])
                });
                assert!(!proportional, "nodes {i},{j} coincide projectively");
            }
        }
    }

    #[test]
    fn perturbed_point_is_not_singular() {
        let v = kummer_vars();
        let det = universal_kummer_det();
        let two_u11 = SparsePoly::var(QQ, v.clone(), 3).scale(&QQ.from_i64(2));
        let bad: [P; 4] = [
            SparsePoly::var(QQ, v.clone(), 0),
            SparsePoly::var(QQ, v.clone(), 1),
            SparsePoly::var(QQ, v.clone(), 2),
            two_u11,
        ];
        let residuals: Vec<P> = (4..8)
            .map(|i| substitute_x(&det.derivative(i), &bad).unwrap())
            .collect();
        assert!(residuals.iter().any(|r| !r.is_zero()));
        // and the nonzero residual really is nonzero at a random point mod p
        let fp = Fp::new(1000033, false).unwrap();
        let pt = {
            let mut q = random_points(fp.p, 4, 1, 11)[0].clone();
            q.extend([0, 0, 0, 0]);
            q
        };
        let witness = residuals
            .iter()
            .filter(|r| !r.is_zero())
            .map(|r| crate::linalg::eval_fp(&r.to_fp(&fp).unwrap(), &pt))
            .any(|v| v != 0);
        assert!(witness);
    }

    #[test]
    fn segre_cubic_holds_symbolically() {
        // cheap evaluation pre-check mod p at 50 points
        let fp = Fp::new(1000033, false).unwrap();
        let minors: Vec<_> = row_minors().iter().map(|m| m.to_fp(&fp).unwrap()).collect();
        for pt in random_points(fp.p, 8, 50, 3) {
            let ev: Vec<u64> = minors.iter().map(|m| crate::linalg::eval_fp(m, &pt)).collect();
            let (r, s01, s10, s11, t) = (ev[0], ev[1], ev[2], ev[3], ev[4]);
            let p = fp.p;
            let cube = r * r % p * r % p;
            let sum_sq = (s01 * s01 + s10 * s10 % p + s11 * s11 % p) % p;
            let val = (16 * cube % p + r * (t * t % p) % p
                + 4 * ((s01 * s10 % p * s11 % p + p * p - r * sum_sq % p) % p) % p)
                % p;
            assert_eq!(val % p, 0);
        }
        // full symbolic expansion
        assert!(segre_cubic_residual().is_zero());
    }

    #[test]
    fn product_locus_has_the_ten_printed_factors() {
        let factors = product_locus_factors().unwrap();
        assert_eq!(factors.len(), 10);
        let v = kummer_vars();
        let f1 = mono(&v, [1, 0, 0, 1, 0, 0, 0, 0], 1).add(&mono(&v, [0, 1, 1, 0, 0, 0, 0, 0], 1));
        let f10 = mono(&v, [2, 0, 0, 0, 0, 0, 0, 0], 1)
            .add(&mono(&v, [0, 2, 0, 0, 0, 0, 0, 0], 1))
            .add(&mono(&v, [0, 0, 2, 0, 0, 0, 0, 0], 1))
            .add(&mono(&v, [0, 0, 0, 2, 0, 0, 0, 0], 1));
        assert!(factors.iter().any(|f| f.sub(&f1).is_zero()));
        assert!(factors.iter().any(|f| f.sub(&f10).is_zero()));
    }
}
