//! Random sampling of the universal Kummer threefold: draws well-conditioned
//! Riemann matrices, evaluates the eight second-order theta constants u and
//! the eight second-order theta functions x, and exports samples as JSON
//! with hex-encoded mantissas for regression pinning.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rug::ops::CompleteRound;
use rug::{Complex, Float};
use serde::Serialize;

use crate::theta::{second_order, RiemannMatrix};
use ukt_core::UktError;

/// One point of the universal Kummer threefold: the moduli coordinates u
/// (theta constants), the fiber coordinates x (theta functions at z), and
/// the (τ, z) they came from.
#[derive(Clone, Debug)]
pub struct UniversalKummerSample {
    pub u: Vec<Complex>,
    pub x: Vec<Complex>,
    pub tau: RiemannMatrix,
    pub z: Vec<Complex>,
}

/// Draws a random τ = A + i(QᵀQ + I/2) with symmetric A. The Q entries are
/// kept small so that the Gershgorin bound on Im τ stays comfortably
/// positive, which keeps lattice sums short.
pub fn random_riemann_matrix(
    g: usize,
    rng: &mut ChaCha8Rng,
    prec: u32,
) -> Result<RiemannMatrix, UktError> {
    let mut a = vec![vec![0f64; g]; g];
    for i in 0..g {
        for j in 0..=i {
            let v = rng.gen_range(-0.5..0.5);
            a[i][j] = v;
            a[j][i] = v;
        }
    }
    let mut q = vec![vec![0f64; g]; g];
    for row in q.iter_mut() {
        for v in row.iter_mut() {
            *v = rng.gen_range(-0.15..0.15);
        }
    }
    let mut tau = Vec::with_capacity(g);
    for i in 0..g {
        let mut row = Vec::with_capacity(g);
        for j in 0..g {
            let mut im = if i == j { 0.5 } else { 0.0 };
            for k in 0..g {
                im += q[k][i] * q[k][j];
            }
            row.push(Complex::with_val(prec, (a[i][j], im)));
        }
        tau.push(row);
    }
    RiemannMatrix::new(tau, prec)
}

/// A random argument vector with moderate imaginary part.
pub fn random_z(g: usize, rng: &mut ChaCha8Rng, prec: u32) -> Vec<Complex> {
    (0..g)
        .map(|_| {
            Complex::with_val(prec, (rng.gen_range(-0.5..0.5), rng.gen_range(-0.2..0.2)))
        })
        .collect()
}

/// σ as a binary vector, most significant bit first, matching the
/// lexicographic coordinate order u000, u001, …, u111.
pub fn sigma_bits(g: usize, k: usize) -> Vec<u8> {
    (0..g).map(|i| ((k >> (g - 1 - i)) & 1) as u8).collect()
}

/// Deterministic universal-Kummer samples in genus 3: for each draw,
/// u_σ = Θ₂[σ](τ; 0) and x_σ = Θ₂[σ](τ; z).
pub fn sample_universal_kummer(
    seed: u64,
    count: usize,
    prec: u32,
    tol: &Float,
) -> Result<Vec<UniversalKummerSample>, UktError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = 3usize;
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let tau = random_riemann_matrix(g, &mut rng, prec)?;
        let z = random_z(g, &mut rng, prec);
        let zero = vec![Complex::with_val(prec, 0); g];
        let mut u = Vec::with_capacity(8);
        let mut x = Vec::with_capacity(8);
        for k in 0..8usize {
            let sigma = sigma_bits(g, k);
            u.push(second_order(&sigma, &tau, &zero, tol)?);
            x.push(second_order(&sigma, &tau, &z, tol)?);
        }
        out.push(UniversalKummerSample { u, x, tau, z });
    }
    Ok(out)
}

#[derive(Serialize)]
struct ComplexJson {
    re: String,
    im: String,
}

#[derive(Serialize)]
struct SampleJson {
    u: Vec<ComplexJson>,
    x: Vec<ComplexJson>,
    tau: Vec<Vec<ComplexJson>>,
    z: Vec<ComplexJson>,
    precision: u32,
}

fn hex_float(f: &Float) -> String {
    // hex mantissa with binary exponent, loss-free at the stated precision
    f.to_string_radix(16, None)
}

fn complex_json(c: &Complex, prec: u32) -> ComplexJson {
    ComplexJson {
        re: hex_float(&Float::with_val(prec, c.real())),
        im: hex_float(&Float::with_val(prec, c.imag())),
    }
}

/// JSON export with hex-encoded mantissas.
pub fn samples_to_json(samples: &[UniversalKummerSample]) -> Result<String, UktError> {
    let rows: Vec<SampleJson> = samples
        .iter()
        .map(|s| {
            let prec = s.tau.prec();
            SampleJson {
                u: s.u.iter().map(|c| complex_json(c, prec)).collect(),
                x: s.x.iter().map(|c| complex_json(c, prec)).collect(),
                tau: s
                    .tau
                    .entries()
                    .iter()
                    .map(|row| row.iter().map(|c| complex_json(c, prec)).collect())
                    .collect(),
                z: s.z.iter().map(|c| complex_json(c, prec)).collect(),
                precision: prec,
            }
        })
        .collect();
    serde_json::to_string_pretty(&rows)
        .map_err(|e| UktError::Consistency(format!("sample serialization failed: {e}")))
}

/// Scale of a coordinate vector: the largest absolute value, used to
/// normalize residuals of homogeneous identities.
pub fn scale_of(values: &[Complex], prec: u32) -> Float {
    let mut best = Float::with_val(prec, 0);
    for v in values {
        let a = v.clone().abs();
        let a = Float::with_val(prec, a.real());
        if a > best {
            best = a;
        }
    }
    best
}

/// |a - b| as a Float.
pub fn abs_diff(a: &Complex, b: &Complex, prec: u32) -> Float {
    let d = (a - b).complete((prec, prec)).abs();
    Float::with_val(prec, d.real())
}
