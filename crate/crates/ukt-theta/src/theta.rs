//! Riemann theta functions in genus 1–4 at arbitrary precision: the plain
//! theta series, theta functions with characteristics, and second-order
//! theta functions. Truncation radii come from a Gershgorin lower bound on
//! the smallest eigenvalue of Im τ, so every returned value carries an
//! absolute tail bound below the requested tolerance. Summation order is
//! deterministic (max-norm shells, lexicographic within a shell), so
//! results are bit-stable across runs.

use rug::float::Constant;
use rug::ops::{CompleteRound, Pow};
use rug::{Complex, Float};

use ukt_core::UktError;

/// A point of the Siegel upper halfspace: a symmetric g×g complex matrix
/// with positive definite imaginary part, together with the working
/// precision in bits.
#[derive(Clone, Debug)]
pub struct RiemannMatrix {
    tau: Vec<Vec<Complex>>,
    g: usize,
    prec: u32,
}

/// A theta characteristic: a pair of binary g-vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaChar {
    pub eps: Vec<u8>,
    pub epsp: Vec<u8>,
}

impl ThetaChar {
    pub fn new(eps: Vec<u8>, epsp: Vec<u8>) -> Result<Self, UktError> {
        if eps.len() != epsp.len() || eps.iter().chain(&epsp).any(|&b| b > 1) {
            return Err(UktError::Input("characteristics must be binary vectors of equal length".into()));
        }
        Ok(ThetaChar { eps, epsp })
    }

    /// From bit-packed characteristics, most significant bit first.
    pub fn from_bits(g: usize, eps: u32, epsp: u32) -> Result<Self, UktError> {
        let unpack = |v: u32| (0..g).map(|i| ((v >> (g - 1 - i)) & 1) as u8).collect::<Vec<_>>();
        Self::new(unpack(eps), unpack(epsp))
    }

    /// Parity ε·ε′ mod 2: 0 for even characteristics, 1 for odd ones.
    pub fn parity(&self) -> u8 {
        self.eps.iter().zip(&self.epsp).map(|(a, b)| a * b).sum::<u8>() % 2
    }
}

/// All even characteristics in genus g, in lexicographic bit order.
pub fn even_characteristics(g: usize) -> Vec<ThetaChar> {
    let mut out = Vec::new();
    for e in 0..(1u32 << g) {
        for ep in 0..(1u32 << g) {
            let c = ThetaChar::from_bits(g, e, ep).expect("bits");
            if c.parity() == 0 {
                out.push(c);
            }
        }
    }
    out
}

impl RiemannMatrix {
    /// Validates symmetry and positive definiteness of the imaginary part
    /// (by the pivot signs of an LDLᵀ sweep at working precision).
    pub fn new(tau: Vec<Vec<Complex>>, prec: u32) -> Result<Self, UktError> {
        let g = tau.len();
        if !(1..=4).contains(&g) || tau.iter().any(|row| row.len() != g) {
            return Err(UktError::Dimension("tau must be square of size 1..=4".into()));
        }
        for i in 0..g {
            for j in 0..g {
                if tau[i][j] != tau[j][i] {
                    return Err(UktError::Domain("tau must be symmetric".into()));
                }
            }
        }
        let m = RiemannMatrix { tau, g, prec };
        let im = m.im();
        if ldl_pivots(&im, prec).into_iter().any(|p| p <= 0f64) {
            return Err(UktError::Domain("Im(tau) is not positive definite".into()));
        }
        Ok(m)
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn entries(&self) -> &Vec<Vec<Complex>> {
        &self.tau
    }

    fn im(&self) -> Vec<Vec<Float>> {
        self.tau
            .iter()
            .map(|row| row.iter().map(|c| Float::with_val(self.prec, c.imag())).collect())
            .collect()
    }

    /// τ scaled by an integer factor (used for the 2τ reductions).
    pub fn scaled(&self, k: u32) -> RiemannMatrix {
        let tau = self
            .tau
            .iter()
            .map(|row| row.iter().map(|c| Complex::with_val(self.prec, c * k)).collect())
            .collect();
        RiemannMatrix { tau, g: self.g, prec: self.prec }
    }

    /// Gershgorin lower bound for the smallest eigenvalue of Im τ.
    pub fn lambda_min_lower(&self) -> Float {
        let im = self.im();
        let mut best: Option<Float> = None;
        for i in 0..self.g {
            let mut row = im[i][i].clone();
            for j in 0..self.g {
                if j != i {
                    row -= im[i][j].clone().abs();
                }
            }
            best = Some(match best {
                None => row,
                Some(b) => if row < b { row } else { b },
            });
        }
        best.expect("g >= 1")
    }

    /// τ·v for a real vector v.
    pub fn mul_vec_real(&self, v: &[Float]) -> Vec<Complex> {
        (0..self.g)
            .map(|i| {
                let mut acc = Complex::with_val(self.prec, 0);
                for j in 0..self.g {
                    acc += (&self.tau[i][j] * &v[j]).complete((self.prec, self.prec));
                }
                acc
            })
            .collect()
    }
}

/// Pivots of the LDLᵀ decomposition of a symmetric real matrix, as f64
/// approximations (only the signs are consumed).
fn ldl_pivots(a: &[Vec<Float>], prec: u32) -> Vec<f64> {
    let g = a.len();
    let mut m: Vec<Vec<Float>> = a.to_vec();
    let mut pivots = Vec::with_capacity(g);
    for k in 0..g {
        let piv = m[k][k].clone();
        pivots.push(piv.to_f64());
        if piv == 0 {
            break;
        }
        for i in (k + 1)..g {
            let f = (&m[i][k] / &piv).complete(prec);
            for j in k..g {
                let s = (&f * &m[k][j]).complete(prec);
                m[i][j] -= s;
            }
        }
    }
    pivots
}

/// Solves Y·x = b for symmetric positive definite Y by Gaussian
/// elimination at working precision.
fn solve_spd(y: &[Vec<Float>], b: &[Float], prec: u32) -> Vec<Float> {
    let g = y.len();
    let mut m: Vec<Vec<Float>> = y.to_vec();
    let mut rhs: Vec<Float> = b.to_vec();
    for k in 0..g {
        for i in (k + 1)..g {
            let f = (&m[i][k] / &m[k][k]).complete(prec);
            for j in k..g {
                let s = (&f * &m[k][j]).complete(prec);
                m[i][j] -= s;
            }
            let s = (&f * &rhs[k]).complete(prec);
            rhs[i] -= s;
        }
    }
    let mut x = vec![Float::with_val(prec, 0); g];
    for i in (0..g).rev() {
        let mut acc = rhs[i].clone();
        for j in (i + 1)..g {
            let s = (&m[i][j] * &x[j]).complete(prec);
            acc -= s;
        }
        x[i] = acc / &m[i][i];
    }
    x
}

fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

/// The shifted theta series Σ_{n∈ℤᵍ} exp[πi (n+a)ᵀτ(n+a) + 2πi (n+a)ᵀ(z+b)]
/// with real shift vectors a, b (characteristics use a=ε/2, b=ε′/2).
/// The truncation radius follows from the Gershgorin bound λ on Im τ:
/// all lattice points with |n+a+Y⁻¹Im(z)| ≤ R are summed, where
/// R = sqrt((log(1/tol) + π·cᵀYc + margin)/(πλ)) + 2, which makes the
/// neglected tail smaller than tol in absolute value.
pub fn theta_shifted(
    tau: &RiemannMatrix,
    z: &[Complex],
    a: &[Float],
    b: &[Float],
    tol: &Float,
) -> Result<Complex, UktError> {
    let g = tau.g();
    let prec = tau.prec();
    if z.len() != g || a.len() != g || b.len() != g {
        return Err(UktError::Dimension("z and shifts must have length g".into()));
    }
    if !(tol.clone().signum() == 1f64) {
        return Err(UktError::Input("tol must be positive".into()));
    }
    let lambda = tau.lambda_min_lower();
    if lambda <= 0f64 {
        return Err(UktError::Precision(
            "Gershgorin bound on Im(tau) is not positive; matrix too ill-conditioned".into(),
        ));
    }
    let pi_v = pi(prec);
    let y = tau.im();
    let zim: Vec<Float> = z.iter().map(|c| Float::with_val(prec, c.imag())).collect();
    // center of the Gaussian envelope: m = n + a concentrates near -Y⁻¹·Im z
    let c0 = solve_spd(&y, &zim, prec);
    // cᵀYc = Im(z)ᵀ·Y⁻¹·Im(z)
    let mut cyc = Float::with_val(prec, 0);
    for i in 0..g {
        cyc += (&c0[i] * &zim[i]).complete(prec);
    }
    let log_tol = tol.clone().ln();
    // margin covers the lattice-point count and per-term rounding
    let margin = Float::with_val(prec, 64).ln();
    let r2 = (-log_tol + &pi_v * &cyc + margin) / (&pi_v * &lambda).complete(prec);
    let radius = r2.sqrt().to_f64() + 2.0;
    if radius > 64.0 {
        return Err(UktError::Precision(format!(
            "truncation radius {radius:.1} too large; Im(tau) too close to singular"
        )));
    }
    // integer box centered at n ≈ -a - c0
    let center: Vec<f64> = (0..g).map(|i| -a[i].to_f64() - c0[i].to_f64()).collect();
    let lo: Vec<i64> = center.iter().map(|c| (c - radius).floor() as i64).collect();
    let hi: Vec<i64> = center.iter().map(|c| (c + radius).ceil() as i64).collect();

    let two_pi_i = Complex::with_val(prec, (0, &pi_v * 2u32));
    let pi_i = Complex::with_val(prec, (0, &pi_v));
    let zb: Vec<Complex> = (0..g).map(|i| (&z[i] + &b[i]).complete((prec, prec))).collect();

    // constant second difference along the last axis:
    // E(m+e_g) − E(m) = πi(2(τm)_g + τ_gg) + 2πi(z+b)_g, whose own increment
    // per step is 2πi·τ_gg
    let d = ((&pi_i * &tau.tau[g - 1][g - 1]).complete((prec, prec)) * 2u32).exp();

    // walk the box row by row (rows = fixed first g−1 coordinates, in
    // lexicographic order; deterministic, hence bit-stable)
    let mut sum = Complex::with_val(prec, 0);
    let mut row = lo[..g - 1].to_vec();
    loop {
        // m at the start of the row
        let mut m: Vec<Float> = (0..g - 1).map(|i| (&a[i] + row[i]).complete(prec)).collect();
        m.push((&a[g - 1] + lo[g - 1]).complete(prec));
        let tm = tau.mul_vec_real(&m);
        let mut quad = Complex::with_val(prec, 0);
        let mut lin = Complex::with_val(prec, 0);
        for i in 0..g {
            quad += (&tm[i] * &m[i]).complete((prec, prec));
            lin += (&zb[i] * &m[i]).complete((prec, prec));
        }
        let e0 = (&pi_i * &quad).complete((prec, prec)) + (&two_pi_i * &lin).complete((prec, prec));
        let mut term = e0.exp();
        // first difference at the start of the row
        let r0 = ((&pi_i * &tm[g - 1]).complete((prec, prec)) * 2u32
            + (&pi_i * &tau.tau[g - 1][g - 1]).complete((prec, prec))
            + (&two_pi_i * &zb[g - 1]).complete((prec, prec)))
        .exp();
        let mut ratio = r0;
        for _ in lo[g - 1]..=hi[g - 1] {
            sum += &term;
            term *= &ratio;
            ratio *= &d;
        }
        // advance the row lexicographically
        if g == 1 {
            break;
        }
        let mut k = g - 1;
        loop {
            if k == 0 {
                return Ok(sum);
            }
            k -= 1;
            row[k] += 1;
            if row[k] <= hi[k] {
                break;
            }
            row[k] = lo[k];
        }
    }
    Ok(sum)
}

fn zeros(g: usize, prec: u32) -> Vec<Float> {
    vec![Float::with_val(prec, 0); g]
}

fn halves(bits: &[u8], prec: u32) -> Vec<Float> {
    bits.iter().map(|&b| Float::with_val(prec, b) / 2u32).collect()
}

/// The Riemann theta function θ(τ; z).
pub fn riemann_theta(tau: &RiemannMatrix, z: &[Complex], tol: &Float) -> Result<Complex, UktError> {
    let g = tau.g();
    let prec = tau.prec();
    theta_shifted(tau, z, &zeros(g, prec), &zeros(g, prec), tol)
}

/// The theta function with characteristics θ[ε|ε′](τ; z).
pub fn theta_char(
    ch: &ThetaChar,
    tau: &RiemannMatrix,
    z: &[Complex],
    tol: &Float,
) -> Result<Complex, UktError> {
    if ch.eps.len() != tau.g() {
        return Err(UktError::Dimension("characteristic length must equal g".into()));
    }
    let prec = tau.prec();
    theta_shifted(tau, z, &halves(&ch.eps, prec), &halves(&ch.epsp, prec), tol)
}

/// The second order theta function Θ₂[σ](τ; z), evaluated through the
/// θ(2τ; 2z+τσ) reduction and cross-checked against its own lattice sum.
pub fn second_order(
    sigma: &[u8],
    tau: &RiemannMatrix,
    z: &[Complex],
    tol: &Float,
) -> Result<Complex, UktError> {
    let g = tau.g();
    let prec = tau.prec();
    if sigma.len() != g || z.len() != g {
        return Err(UktError::Dimension("sigma and z must have length g".into()));
    }
    let half_sigma = halves(sigma, prec);
    // reduction: θ(2τ; 2z + τσ) · exp[πi(σᵀτσ/2 + 2σᵀz)]
    let tau2 = tau.scaled(2);
    let tau_sigma = tau.mul_vec_real(&halves(sigma, prec));
    // τσ = 2·(τ·(σ/2))
    let arg: Vec<Complex> = (0..g)
        .map(|i| {
            let mut v = (&z[i] * 2u32).complete((prec, prec));
            v += (&tau_sigma[i] * 2u32).complete((prec, prec));
            v
        })
        .collect();
    let theta = riemann_theta(&tau2, &arg, tol)?;
    // σᵀτσ/2 = 2·(σ/2)ᵀτ(σ/2); 2σᵀz = 4·(σ/2)ᵀz
    let mut sts = Complex::with_val(prec, 0);
    let mut sz = Complex::with_val(prec, 0);
    for i in 0..g {
        sts += (&tau_sigma[i] * &half_sigma[i]).complete((prec, prec));
        sz += (&z[i] * &half_sigma[i]).complete((prec, prec));
    }
    let pi_i = Complex::with_val(prec, (0, pi(prec)));
    let phase = ((&pi_i * &sts).complete((prec, prec)) * 2u32
        + (&pi_i * &sz).complete((prec, prec)) * 4u32)
        .exp();
    Ok(theta * phase)
}

/// The same function computed directly from its own Fourier series
/// Σ exp[2πi(n+σ/2)ᵀτ(n+σ/2) + 4πi(n+σ/2)ᵀz] (used for cross-checks).
pub fn second_order_direct(
    sigma: &[u8],
    tau: &RiemannMatrix,
    z: &[Complex],
    tol: &Float,
) -> Result<Complex, UktError> {
    let g = tau.g();
    let prec = tau.prec();
    if sigma.len() != g || z.len() != g {
        return Err(UktError::Dimension("sigma and z must have length g".into()));
    }
    let tau2 = tau.scaled(2);
    let z2: Vec<Complex> = z.iter().map(|c| (c * 2u32).complete((prec, prec))).collect();
    theta_shifted(&tau2, &z2, &halves(sigma, prec), &zeros(g, prec), tol)
}

/// The genus-1 closed form θ(i; 0) = π^{1/4} / Γ(3/4), used as an
/// independent oracle for the lattice sum.
pub fn lemniscatic_value(prec: u32) -> Float {
    let pi_v = pi(prec);
    let quarter = Float::with_val(prec, 1) / 4u32;
    let pi4 = pi_v.pow(&quarter);
    let gamma34 = (Float::with_val(prec, 3) / 4u32).gamma();
    pi4 / gamma34
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ftol(prec: u32) -> Float {
        Float::with_val(prec, 1e-30f64)
    }

    fn tau_i(g: usize, prec: u32) -> RiemannMatrix {
        let tau: Vec<Vec<Complex>> = (0..g)
            .map(|i| {
                (0..g)
                    .map(|j| Complex::with_val(prec, (0, if i == j { 1 } else { 0 })))
                    .collect()
            })
            .collect();
        RiemannMatrix::new(tau, prec).unwrap()
    }

    #[test]
    fn genus1_value_matches_closed_form() {
        let prec = 256;
        let tol = ftol(prec);
        let tau = tau_i(1, prec);
        let z = vec![Complex::with_val(prec, 0)];
        let v = riemann_theta(&tau, &z, &tol).unwrap();
        let want = lemniscatic_value(prec);
        let diff = (Float::with_val(prec, v.real()) - &want).abs();
        assert!(diff < tol, "diff = {diff}");
        assert!(Float::with_val(prec, v.imag()).abs() < tol);
        // literal digits from the closed form
        assert!((want.to_f64() - 1.0864348112133080).abs() < 1e-15);
    }

    #[test]
    fn diagonal_tau_splits_as_product() {
        let prec = 256;
        let tol = ftol(prec);
        let g1 = riemann_theta(&tau_i(1, prec), &[Complex::with_val(prec, 0)], &tol).unwrap();
        let g3 = riemann_theta(
            &tau_i(3, prec),
            &[
                Complex::with_val(prec, 0),
                Complex::with_val(prec, 0),
                Complex::with_val(prec, 0),
            ],
            &tol,
        )
        .unwrap();
        let cube = (&g1 * &g1).complete((prec, prec)) * &g1;
        let diff = (g3 - cube).abs();
        assert!(Float::with_val(prec, diff.real()) < ftol(prec) * 8u32);
    }

    #[test]
    fn rejects_non_positive_definite() {
        let prec = 128;
        let tau = vec![vec![Complex::with_val(prec, (0, -1))]];
        assert!(RiemannMatrix::new(tau, prec).is_err());
    }

    #[test]
    fn even_odd_characteristic_counts() {
        let evens = even_characteristics(3);
        assert_eq!(evens.len(), 36);
        let odd = (0..64)
            .filter(|k| ThetaChar::from_bits(3, k >> 3, k & 7).unwrap().parity() == 1)
            .count();
        assert_eq!(odd, 28);
    }
}
