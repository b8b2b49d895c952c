//! The Sp₆(F₂) substitution orbit of the bidegree-(16,4) generator f.
//!
//! The two standard generators μ′ and ν′ act on both coordinate blocks by
//! the same 8×8 matrix (μ′ needs i = √−1, so the prime must be ≡ 1 mod 4).
//! Orbit elements f∘α are identified by projective fingerprints: the vector
//! of values of f at a fixed list of random (u, x) points mod p, normalized
//! by the first nonzero entry. A breadth-first search over words in μ′, ν′
//! enumerates the orbit; the span of the orbit is measured as the rank of
//! the orbit × sample-points evaluation matrix over ℤ/p.

use std::collections::{HashMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ukt_core::gf2::invariant_quartics;
use ukt_core::linalg::FpMatrix;
use ukt_core::ring::Fp;
use ukt_core::UktError;

use crate::lemma::lemma_coeffs_u;
use crate::upoly::unpack;

type Mat = [[u64; 8]; 8];

fn mat_mul(fp: &Fp, a: &Mat, b: &Mat) -> Mat {
    let p = fp.p;
    let mut c = [[0u64; 8]; 8];
    for i in 0..8 {
        for k in 0..8 {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..8 {
                c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
            }
        }
    }
    c
}

fn mat_vec(fp: &Fp, m: &Mat, v: &[u64; 8]) -> [u64; 8] {
    let p = fp.p;
    let mut out = [0u64; 8];
    for i in 0..8 {
        let mut acc = 0u64;
        for j in 0..8 {
            acc = (acc + m[i][j] * v[j]) % p;
        }
        out[i] = acc;
    }
    out
}

fn identity() -> Mat {
    let mut m = [[0u64; 8]; 8];
    for i in 0..8 {
        m[i][i] = 1;
    }
    m
}

/// μ′: a000…a011 fixed; a100↔a101 and a110↔a111 swapped with factor i.
fn mu_matrix(fp: &Fp) -> Result<Mat, UktError> {
    let i = fp
        .i_root
        .ok_or_else(|| UktError::Config("prime must be ≡ 1 mod 4 (need √−1)".into()))?;
    let mut m = [[0u64; 8]; 8];
    for s in 0..4 {
        m[s][s] = 1;
    }
    m[4][5] = i;
    m[5][4] = i;
    m[6][7] = i;
    m[7][6] = i;
    Ok(m)
}

/// ν′: a_{2k} ↦ a_{σ(k)} + a_{σ(k)+100}, a_{2k+1} ↦ a_{σ(k)} − a_{σ(k)+100}.
fn nu_matrix(fp: &Fp) -> Mat {
    let p = fp.p;
    let mut m = [[0u64; 8]; 8];
    // row index = image variable; columns: a000 a001 a010 a011 a100 a101 a110 a111
    let rows: [(usize, usize, bool); 8] = [
        (0, 4, false), // a000 ↦ a000 + a100
        (0, 4, true),  // a001 ↦ a000 − a100
        (1, 5, false), // a010 ↦ a001 + a101
        (1, 5, true),  // a011 ↦ a001 − a101
        (2, 6, false), // a100 ↦ a010 + a110
        (2, 6, true),  // a101 ↦ a010 − a110
        (3, 7, false), // a110 ↦ a011 + a111
        (3, 7, true),  // a111 ↦ a011 − a111
    ];
    for (i, &(a, b, minus)) in rows.iter().enumerate() {
        m[i][a] = 1;
        m[i][b] = if minus { p - 1 } else { 1 };
    }
    m
}

/// γ₁(A) for the cyclic shift A·(σ₁,σ₂,σ₃) = (σ₂,σ₃,σ₁): a_σ ↦ a_{Aσ}.
fn gamma1_cycle_matrix() -> Mat {
    let mut m = [[0u64; 8]; 8];
    for s in 0..8usize {
        let (s1, s2, s3) = ((s >> 2) & 1, (s >> 1) & 1, s & 1);
        let image = (s2 << 2) | (s3 << 1) | s1;
        m[s][image] = 1;
    }
    m
}

/// f reduced mod p, organized as (u-coefficient terms, x-support) per
/// nonzero Coble-shape coefficient, for fast evaluation.
struct FModP {
    parts: Vec<(Vec<(u64, [u8; 8])>, Vec<[u8; 8]>)>,
}

impl FModP {
    fn new(fp: &Fp) -> Result<FModP, UktError> {
        let coeffs = lemma_coeffs_u()?;
        let supports: HashMap<String, Vec<[u8; 8]>> = invariant_quartics().into_iter().collect();
        let p = fp.p as i128;
        let mut parts = Vec::new();
        for (name, poly) in &coeffs {
            let terms: Vec<(u64, [u8; 8])> = poly
                .terms()
                .map(|(k, c)| ((c.rem_euclid(p)) as u64, unpack(*k)))
                .collect();
            let support = supports
                .get(name)
                .ok_or_else(|| UktError::Consistency(format!("no x-support named {name}")))?
                .clone();
            parts.push((terms, support));
        }
        Ok(FModP { parts })
    }

    /// Evaluates f at (u, x), both vectors already transformed.
    fn eval(&self, fp: &Fp, u: &[u64; 8], x: &[u64; 8]) -> u64 {
        let p = fp.p;
        // power tables: u-degrees ≤ 16, x-degrees ≤ 4
        let mut upow = [[1u64; 17]; 8];
        for v in 0..8 {
            for e in 1..17 {
                upow[v][e] = upow[v][e - 1] * u[v] % p;
            }
        }
        let mut xpow = [[1u64; 5]; 8];
        for v in 0..8 {
            for e in 1..5 {
                xpow[v][e] = xpow[v][e - 1] * x[v] % p;
            }
        }
        let mut total = 0u64;
        for (terms, support) in &self.parts {
            let mut cval = 0u64;
            for (c, e) in terms {
                let mut m = *c;
                for v in 0..8 {
                    if e[v] > 0 {
                        m = m * upow[v][e[v] as usize] % p;
                    }
                }
                cval = (cval + m) % p;
            }
            if cval == 0 {
                continue;
            }
            let mut xval = 0u64;
            for e in support {
                let mut m = 1u64;
                for v in 0..8 {
                    if e[v] > 0 {
                        m = m * xpow[v][e[v] as usize] % p;
                    }
                }
                xval = (xval + m) % p;
            }
            total = (total + cval * xval) % p;
        }
        total
    }
}

fn random_block(rng: &mut ChaCha8Rng, p: u64) -> ([u64; 8], [u64; 8]) {
    let mut u = [0u64; 8];
    let mut x = [0u64; 8];
    for i in 0..8 {
        u[i] = rng.gen_range(1..p);
        x[i] = rng.gen_range(1..p);
    }
    (u, x)
}

/// Fingerprint of f∘α: values at the fixed points, normalized projectively.
fn fingerprint(
    fp: &Fp,
    f: &FModP,
    m: &Mat,
    points: &[([u64; 8], [u64; 8])],
) -> Result<Vec<u64>, UktError> {
    let mut vals: Vec<u64> = points
        .iter()
        .map(|(u, x)| f.eval(fp, &mat_vec(fp, m, u), &mat_vec(fp, m, x)))
        .collect();
    let lead = vals
        .iter()
        .copied()
        .find(|&v| v != 0)
        .ok_or_else(|| UktError::Consistency("fingerprint vanished at all points".into()))?;
    let inv = fp.pow(lead, fp.p - 2);
    for v in &mut vals {
        *v = *v * inv % fp.p;
    }
    Ok(vals)
}

/// Result of the orbit enumeration.
pub struct OrbitReport {
    pub orbit_size: usize,
    pub rank: usize,
    pub stabilizer_fixes_f: bool,
    pub stabilizer_order: u32,
}

/// Enumerates the Sp₆(F₂)-orbit of f by fingerprint BFS over words in
/// μ′, ν′; computes the rank of the orbit evaluation matrix at `n_rank`
/// random points; and checks that the order-3 element ν′·γ₁(A) fixes f.
pub fn sp6_orbit_and_rank(p: u64, seed: u64, n_rank: usize) -> Result<OrbitReport, UktError> {
    let fp = Fp::new(p, true)?;
    let f = FModP::new(&fp)?;
    let mu = mu_matrix(&fp)?;
    let nu = nu_matrix(&fp);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fps_points: Vec<([u64; 8], [u64; 8])> = (0..6).map(|_| random_block(&mut rng, p)).collect();

    let mut seen: HashMap<Vec<u64>, Mat> = HashMap::new();
    let mut queue = VecDeque::new();
    let id = identity();
    let id_print = fingerprint(&fp, &f, &id, &fps_points)?;
    seen.insert(id_print.clone(), id);
    queue.push_back(id);
    while let Some(m) = queue.pop_front() {
        for g in [&mu, &nu] {
            let next = mat_mul(&fp, &m, g);
            let print = fingerprint(&fp, &f, &next, &fps_points)?;
            if !seen.contains_key(&print) {
                seen.insert(print, next);
                queue.push_back(next);
            }
        }
    }
    let orbit_size = seen.len();
    if orbit_size != 945 {
        return Err(UktError::Consistency(format!(
            "orbit fingerprint count {orbit_size}, expected 945 (collision or group error)"
        )));
    }

    // rank of the 945 × n_rank evaluation matrix
    let rank_points: Vec<([u64; 8], [u64; 8])> =
        (0..n_rank).map(|_| random_block(&mut rng, p)).collect();
    let mut matrix = FpMatrix::new(p, n_rank);
    for m in seen.values() {
        let row: Vec<u64> = rank_points
            .iter()
            .map(|(u, x)| f.eval(&fp, &mat_vec(&fp, m, u), &mat_vec(&fp, m, x)))
            .collect();
        matrix.push_row(row);
    }
    let rank = matrix.rank();

    // the printed stabilizer element ν′·γ₁(A), of projective order 3
    let stab = mat_mul(&fp, &nu, &gamma1_cycle_matrix());
    let stab_print = fingerprint(&fp, &f, &stab, &fps_points)?;
    let stabilizer_fixes_f = stab_print == id_print;
    let mut order = 0u32;
    let mut power = identity();
    for k in 1..=6u32 {
        power = mat_mul(&fp, &power, &stab);
        if is_scalar(&power) {
            order = k;
            break;
        }
    }

    Ok(OrbitReport {
        orbit_size,
        rank,
        stabilizer_fixes_f,
        stabilizer_order: order,
    })
}

fn is_scalar(m: &Mat) -> bool {
    let d = m[0][0];
    if d == 0 {
        return false;
    }
    for i in 0..8 {
        for j in 0..8 {
            if (i == j && m[i][j] != d) || (i != j && m[i][j] != 0) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_matrices_are_invertible() {
        let fp = Fp::new(1000033, true).unwrap();
        let mu = mu_matrix(&fp).unwrap();
        // μ′ has projective order dividing 8 (i⁴ = 1 and the swap squares in)
        let mut m = identity();
        for _ in 0..8 {
            m = mat_mul(&fp, &m, &mu);
        }
        assert!(is_scalar(&m));
    }

    #[test]
    fn orbit_census_and_rank() {
        let report = sp6_orbit_and_rank(1000033, 42, 960).unwrap();
        assert_eq!(report.orbit_size, 945);
        assert_eq!(report.rank, 882);
        assert!(report.stabilizer_fixes_f);
        assert_eq!(report.stabilizer_order, 3);
    }
}
