//! Numerical verification that the exact Coble-quartic coefficients and the
//! bidegree-(16,4) generator actually vanish on the universal Kummer
//! threefold: both polynomials, all eight x-partials of the quartic, and
//! the Satake hypersurface are evaluated at high precision on sampled
//! theta points, and the first-order-theta product formulas are
//! cross-checked against their u-polynomial counterparts.

use rug::ops::CompleteRound;
use rug::{Complex, Float, Integer};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ukt_core::gf2::invariant_quartics;
use ukt_core::satake::satake_poly;
use ukt_core::UktError;

use ukt_theta::check::{eval_poly_complex, normalized_poly_residual};
use ukt_theta::sample::{sample_universal_kummer, UniversalKummerSample};
use ukt_theta::theta::{theta_char, ThetaChar};

use crate::coeffs::{coble_coeffs_u, pi_t0_in_u};
use crate::lemma::lemma_coeffs_u;
use crate::upoly::{unpack, UPoly};

/// A quartic of Coble shape prepared for evaluation: integer u-coefficient
/// terms together with the x-support of each coefficient.
struct ShapeEval {
    parts: Vec<(Vec<(Integer, [u8; 8])>, Vec<[u8; 8]>)>,
}

impl ShapeEval {
    fn new<'a>(coeffs: impl Iterator<Item = (&'a str, &'a UPoly)>) -> Result<ShapeEval, UktError> {
        let supports: std::collections::HashMap<String, Vec<[u8; 8]>> =
            invariant_quartics().into_iter().collect();
        let mut parts = Vec::new();
        for (name, poly) in coeffs {
            let terms: Vec<(Integer, [u8; 8])> = poly
                .terms()
                .map(|(k, c)| (Integer::from(*c), unpack(*k)))
                .collect();
            let support = supports
                .get(name)
                .ok_or_else(|| UktError::Consistency(format!("no x-support named {name}")))?
                .clone();
            parts.push((terms, support));
        }
        Ok(ShapeEval { parts })
    }

    /// Values of the u-coefficients at `u`, with each coefficient's largest
    /// term magnitude.
    fn coeff_values(&self, u: &[Complex], prec: u32) -> Vec<(Complex, Float)> {
        let upow = power_table(u, 29, prec);
        self.parts
            .iter()
            .map(|(terms, _)| {
                let mut val = Complex::with_val(prec, 0);
                let mut scale = Float::with_val(prec, 0);
                for (c, e) in terms {
                    let mut term = Complex::with_val(prec, c);
                    for v in 0..8 {
                        if e[v] > 0 {
                            term *= &upow[v][e[v] as usize];
                        }
                    }
                    let mag = Float::with_val(prec, term.clone().abs().real());
                    if mag > scale {
                        scale = mag;
                    }
                    val += term;
                }
                (val, scale)
            })
            .collect()
    }

    /// Normalized residuals of the quartic itself and of its eight
    /// x-partials at (u, x): |value| / (largest contributing term).
    fn residuals(&self, u: &[Complex], x: &[Complex], prec: u32) -> (Float, Float) {
        let cvals = self.coeff_values(u, prec);
        let xpow = power_table(x, 5, prec);
        let mut f_val = Complex::with_val(prec, 0);
        let mut f_scale = Float::with_val(prec, 0);
        let mut d_val = vec![Complex::with_val(prec, 0); 8];
        let mut d_scale = vec![Float::with_val(prec, 0); 8];
        for ((_, support), (cval, cscale)) in self.parts.iter().zip(&cvals) {
            for m in support {
                let mut mono = Complex::with_val(prec, 1);
                for v in 0..8 {
                    if m[v] > 0 {
                        mono *= &xpow[v][m[v] as usize];
                    }
                }
                let term = (cval * &mono).complete((prec, prec));
                let mag = Float::with_val(prec, mono.abs().real()) * cscale;
                if mag > f_scale {
                    f_scale = mag.clone();
                }
                f_val += term;
                for v in 0..8 {
                    if m[v] == 0 {
                        continue;
                    }
                    // derivative monomial: drop one power of x_v
                    let mut dm = Complex::with_val(prec, m[v] as u32);
                    for w in 0..8 {
                        let e = if w == v { m[w] - 1 } else { m[w] };
                        if e > 0 {
                            dm *= &xpow[w][e as usize];
                        }
                    }
                    let dmag = Float::with_val(prec, dm.clone().abs().real()) * cscale;
                    if dmag > d_scale[v] {
                        d_scale[v] = dmag;
                    }
                    d_val[v] += cval * dm;
                }
            }
        }
        let f_res = Float::with_val(prec, f_val.abs().real()) / f_scale;
        let mut worst = Float::with_val(prec, 0);
        for v in 0..8 {
            let r = Float::with_val(prec, d_val[v].clone().abs().real()) / &d_scale[v];
            if r > worst {
                worst = r;
            }
        }
        (f_res, worst)
    }
}

fn power_table(point: &[Complex], max_exp: usize, prec: u32) -> Vec<Vec<Complex>> {
    point
        .iter()
        .map(|z| {
            let mut row = vec![Complex::with_val(prec, 1)];
            for e in 1..max_exp {
                let next = row[e - 1].clone() * z;
                row.push(next);
            }
            row
        })
        .collect()
}

fn dot(a: u8, b: u8) -> u8 {
    ((a & b).count_ones() & 1) as u8
}

/// First-order theta constants T_{ε′} = θ[0|ε′](τ; 0) for a sample.
fn t_constants(sample: &UniversalKummerSample, tol: &Float) -> Result<Vec<Complex>, UktError> {
    let prec = sample.tau.prec();
    let zero = vec![Complex::with_val(prec, 0); 3];
    (0..8u32)
        .map(|e| {
            let ch = ThetaChar::from_bits(3, 0, e)?;
            theta_char(&ch, &sample.tau, &zero, tol)
        })
        .collect()
}

fn prod_over(t: &[Complex], set: impl Iterator<Item = u8>, prec: u32) -> Complex {
    let mut acc = Complex::with_val(prec, 1);
    for e in set {
        acc *= &t[e as usize];
    }
    acc
}

fn rel_diff(a: &Complex, b: &Complex, prec: u32) -> Float {
    let diff = Float::with_val(prec, (a - b).complete((prec, prec)).abs().real());
    let mut scale = Float::with_val(prec, a.clone().abs().real());
    let sb = Float::with_val(prec, b.clone().abs().real());
    if sb > scale {
        scale = sb;
    }
    diff / scale
}

/// Worst residuals observed across the sampled points.
#[derive(Clone, Debug)]
pub struct NumericReport {
    pub max_coble_residual: f64,
    pub max_partial_residual: f64,
    pub max_satake_residual: f64,
    pub max_lemma_residual: f64,
    pub max_pi_residual: f64,
    pub max_ratio_residual: f64,
    pub negative_control_residual: f64,
}

/// Evaluates the vanishing checks on `count` universal-Kummer samples at
/// the given precision. All residuals are normalized by the largest
/// contributing term; the negative control replaces x by a random point
/// and must come out large.
pub fn coble_numeric_checks(seed: u64, count: usize, prec: u32) -> Result<NumericReport, UktError> {
    let series_tol = Float::with_val(prec, 1e-45f64);
    let samples = sample_universal_kummer(seed, count, prec, &series_tol)?;

    let coeffs = coble_coeffs_u()?;
    let coble_eval = ShapeEval::new(coeffs.iter())?;
    let lemma_coeffs = lemma_coeffs_u()?;
    let lemma_eval = ShapeEval::new(lemma_coeffs.iter().map(|(n, p)| (n.as_str(), p)))?;
    let (satake, _) = satake_poly()?;
    let pi_poly = pi_t0_in_u()?;

    let idx_r = coeffs.iter().position(|(n, _)| n == "r").unwrap();
    let idx_s010 = coeffs.iter().position(|(n, _)| n == "s010").unwrap();

    let mut report = NumericReport {
        max_coble_residual: 0.0,
        max_partial_residual: 0.0,
        max_satake_residual: 0.0,
        max_lemma_residual: 0.0,
        max_pi_residual: 0.0,
        max_ratio_residual: 0.0,
        negative_control_residual: f64::INFINITY,
    };
    let mut bump = |slot: &mut f64, v: Float| {
        let v = v.to_f64();
        if v > *slot {
            *slot = v;
        }
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
    for sample in &samples {
        let (f_res, d_res) = coble_eval.residuals(&sample.u, &sample.x, prec);
        bump(&mut report.max_coble_residual, f_res);
        bump(&mut report.max_partial_residual, d_res);

        let (l_res, _) = lemma_eval.residuals(&sample.u, &sample.x, prec);
        bump(&mut report.max_lemma_residual, l_res);

        let s_res = normalized_poly_residual(&satake, &sample.u, prec)?;
        bump(&mut report.max_satake_residual, s_res);

        // Π product formula: the degree-8 u-polynomial equals ∏_{ε′}T_{ε′}
        let t = t_constants(sample, &series_tol)?;
        let (pi_val, _) = eval_poly_complex(&pi_poly, &sample.u, prec)?;
        let pi_target = prod_over(&t, 0..8, prec);
        bump(&mut report.max_pi_residual, rel_diff(&pi_val, &pi_target, prec));

        // ratio r/s010 from the first-order-theta product formulas
        let d_eps = |eps: u8| {
            let p_in = prod_over(&t, (0..8).filter(|&e| dot(eps, e) == 0), prec);
            let p_out = prod_over(&t, (0..8).filter(|&e| dot(eps, e) == 1), prec);
            p_in - p_out
        };
        let mut r_t = Complex::with_val(prec, 1);
        for eps in 1..8u8 {
            r_t *= d_eps(eps);
        }
        let sigma = 0b010u8;
        let mut s_t = prod_over(&t, (0..8).filter(|&e| dot(sigma, e) == 0), prec)
            + prod_over(&t, (0..8).filter(|&e| dot(sigma, e) == 1), prec);
        s_t *= Complex::with_val(prec, -2);
        for eps in 1..8u8 {
            if eps != sigma {
                s_t *= d_eps(eps);
            }
        }
        let cvals = coble_eval.coeff_values(&sample.u, prec);
        let ratio_u = (&cvals[idx_r].0 / &cvals[idx_s010].0).complete((prec, prec));
        let ratio_t = r_t / s_t;
        bump(&mut report.max_ratio_residual, rel_diff(&ratio_u, &ratio_t, prec));
    }

    // negative control: a random non-Kummer x must give a large residual
    let sample = &samples[0];
    let fake_x: Vec<Complex> = (0..8)
        .map(|_| Complex::with_val(prec, (rng.gen_range(-1.0..1.0f64), rng.gen_range(-1.0..1.0f64))))
        .collect();
    let (neg_res, _) = coble_eval.residuals(&sample.u, &fake_x, prec);
    report.negative_control_residual = neg_res.to_f64();

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vanishing_on_samples() {
        let report = coble_numeric_checks(7, 3, 256).unwrap();
        assert!(report.max_coble_residual < 1e-25, "F: {}", report.max_coble_residual);
        assert!(report.max_partial_residual < 1e-25, "dF: {}", report.max_partial_residual);
        assert!(report.max_satake_residual < 1e-25, "S: {}", report.max_satake_residual);
        assert!(report.max_lemma_residual < 1e-25, "f: {}", report.max_lemma_residual);
        assert!(report.max_pi_residual < 1e-25, "pi: {}", report.max_pi_residual);
        assert!(report.max_ratio_residual < 1e-25, "ratio: {}", report.max_ratio_residual);
        assert!(report.negative_control_residual > 1e-6);
    }
}
