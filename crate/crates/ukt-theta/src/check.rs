//! Numerical verification of the transcendental identities: the quasi-
//! periodicity functional equation, parity, second-order reductions, the
//! addition theorem and its inversion, the doubled-argument and theta-square
//! links between the (u, x) coordinates and first-order theta values,
//! vanishing of the Satake polynomial on theta constants, and the genus-4
//! quartic theta-constant relation. All residuals are normalized by the
//! largest participating term, so they are invariant under global rescaling.

use std::str::FromStr;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::ops::CompleteRound;
use rug::{Complex, Float};

use crate::sample::{random_riemann_matrix, random_z, sigma_bits, UniversalKummerSample};
use crate::theta::{riemann_theta, second_order, second_order_direct, theta_char, ThetaChar};
use ukt_core::poly::SparsePoly;
use ukt_core::ring::QQ;
use ukt_core::UktError;

fn qq_to_float(r: &BigRational, prec: u32) -> Float {
    let q = rug::Rational::from_str(&r.to_string()).expect("rational literal");
    Float::with_val(prec, q)
}

/// Evaluates a rational sparse polynomial at a complex point, returning the
/// value together with the largest absolute term (the normalization scale).
pub fn eval_poly_complex(
    poly: &SparsePoly<QQ>,
    point: &[Complex],
    prec: u32,
) -> Result<(Complex, Float), UktError> {
    if point.len() != poly.vars().len() {
        return Err(UktError::Dimension("point length must match variable count".into()));
    }
    let mut value = Complex::with_val(prec, 0);
    let mut scale = Float::with_val(prec, 0);
    for (m, c) in poly.terms() {
        let mut term = Complex::with_val(prec, qq_to_float(c, prec));
        for (i, &e) in m.iter().enumerate() {
            for _ in 0..e {
                term *= &point[i];
            }
        }
        let mag = Float::with_val(prec, term.clone().abs().real());
        if mag > scale {
            scale = mag;
        }
        value += term;
    }
    Ok((value, scale))
}

/// |P(point)| / max_term |term|: the residual of a polynomial identity,
/// normalized by its largest term so cancellation quality is what is
/// measured, not the size of the point.
pub fn normalized_poly_residual(
    poly: &SparsePoly<QQ>,
    point: &[Complex],
    prec: u32,
) -> Result<Float, UktError> {
    let (value, scale) = eval_poly_complex(poly, point, prec)?;
    if scale == 0 {
        return Err(UktError::Domain("all terms vanish; residual undefined".into()));
    }
    Ok(Float::with_val(prec, value.abs().real()) / scale)
}

fn cabs(c: &Complex, prec: u32) -> Float {
    Float::with_val(prec, c.clone().abs().real())
}

/// |lhs − rhs| / max(|lhs|, |rhs|, floor): relative residual with a floor
/// that keeps identities whose two sides vanish together meaningful.
fn rel_residual(lhs: &Complex, rhs: &Complex, floor: &Float, prec: u32) -> Float {
    let diff = cabs(&(lhs - rhs).complete((prec, prec)), prec);
    let mut scale = cabs(lhs, prec);
    let r = cabs(rhs, prec);
    if r > scale {
        scale = r;
    }
    if *floor > scale {
        scale = floor.clone();
    }
    diff / scale
}

/// One named identity with its worst observed residual.
#[derive(Clone, Debug)]
pub struct IdentityResidual {
    pub name: String,
    pub residual: f64,
}

fn record(out: &mut Vec<IdentityResidual>, name: &str, r: Float) {
    let r = r.to_f64();
    if let Some(entry) = out.iter_mut().find(|e| e.name == name) {
        if r > entry.residual {
            entry.residual = r;
        }
    } else {
        out.push(IdentityResidual { name: name.to_string(), residual: r });
    }
}

fn pi_i(prec: u32) -> Complex {
    Complex::with_val(prec, (0, Float::with_val(prec, rug::float::Constant::Pi)))
}

/// Runs the full identity suite on universal-Kummer samples and returns the
/// maximal normalized residual per identity across all samples.
pub fn identity_suite(
    samples: &[UniversalKummerSample],
    seed: u64,
    tol: &Float,
) -> Result<Vec<IdentityResidual>, UktError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1de2_17);
    let mut out: Vec<IdentityResidual> = Vec::new();
    let satake = ukt_core::satake::satake_poly()?.0;
    let quadrics = ukt_core::satake::hyperelliptic_quadrics()?;
    for sample in samples {
        let tau = &sample.tau;
        let g = tau.g();
        let prec = tau.prec();
        let z = &sample.z;
        let zero = vec![Complex::with_val(prec, 0); g];
        let floor = Float::with_val(prec, 1e-8f64);
        let ipi = pi_i(prec);

        // quasi-periodicity: θ(τ; z+a+τb) = θ(τ; z)·exp[2πi(−bᵀz − bᵀτb/2)]
        let av: Vec<i64> = (0..g).map(|_| rng.gen_range(-2i64..=2)).collect();
        let bv: Vec<i64> = (0..g).map(|_| rng.gen_range(-2i64..=2)).collect();
        let bf: Vec<Float> = bv.iter().map(|&v| Float::with_val(prec, v)).collect();
        let tau_b = tau.mul_vec_real(&bf);
        let shifted: Vec<Complex> = (0..g)
            .map(|i| {
                let mut v = z[i].clone();
                v += av[i];
                v += &tau_b[i];
                v
            })
            .collect();
        let lhs = riemann_theta(tau, &shifted, tol)?;
        let base = riemann_theta(tau, z, tol)?;
        let mut btz = Complex::with_val(prec, 0);
        let mut btb = Complex::with_val(prec, 0);
        for i in 0..g {
            btz += (&z[i] * &bf[i]).complete((prec, prec));
            btb += (&tau_b[i] * &bf[i]).complete((prec, prec));
        }
        let expo = ((&ipi * &btz).complete((prec, prec)) * -2i32
            - (&ipi * &btb).complete((prec, prec)))
        .exp();
        let rhs = base * expo;
        record(&mut out, "functional_equation", rel_residual(&lhs, &rhs, &floor, prec));

        // parity θ[ε|ε′](−z) = (−1)^{ε·ε′} θ[ε|ε′](z), plus vanishing of odd
        // characteristics at z = 0
        for _ in 0..4 {
            let ch = ThetaChar::from_bits(g, rng.gen_range(0u32..8), rng.gen_range(0u32..8))?;
            let neg_z: Vec<Complex> = z.iter().map(|c| (-c).complete((prec, prec))).collect();
            let v_minus = theta_char(&ch, tau, &neg_z, tol)?;
            let v_plus = theta_char(&ch, tau, z, tol)?;
            let signed = if ch.parity() == 0 {
                v_plus.clone()
            } else {
                (-&v_plus).complete((prec, prec))
            };
            record(&mut out, "parity", rel_residual(&v_minus, &signed, &floor, prec));
            if ch.parity() == 1 {
                let at_zero = theta_char(&ch, tau, &zero, tol)?;
                record(&mut out, "odd_vanishing", cabs(&at_zero, prec));
            }
        }

        // the reduction path Θ₂[σ](τ;z) = θ(2τ; 2z+τσ)·phase against the
        // direct Fourier series of the second-order function
        for (k, val) in sample.x.iter().enumerate() {
            let sigma = sigma_bits(g, k);
            let direct = second_order_direct(&sigma, tau, z, tol)?;
            record(&mut out, "second_order_series", rel_residual(val, &direct, &floor, prec));
        }

        // addition theorem at a fresh w:
        // θ[ε|ε′](z+w)θ[ε|ε′](z−w) = Σ_σ (−1)^{σ·ε′} Θ₂[σ](w)·Θ₂[σ+ε](z)
        let w = random_z(g, &mut rng, prec);
        let eps_bits = rng.gen_range(0u32..8);
        let epsp_bits = rng.gen_range(0u32..8);
        let ch = ThetaChar::from_bits(g, eps_bits, epsp_bits)?;
        let zw_plus: Vec<Complex> =
            (0..g).map(|i| (&z[i] + &w[i]).complete((prec, prec))).collect();
        let zw_minus: Vec<Complex> =
            (0..g).map(|i| (&z[i] - &w[i]).complete((prec, prec))).collect();
        let lhs = theta_char(&ch, tau, &zw_plus, tol)? * theta_char(&ch, tau, &zw_minus, tol)?;
        let mut rhs = Complex::with_val(prec, 0);
        for s in 0..(1usize << g) {
            let sign = ((s as u32) & epsp_bits).count_ones() % 2;
            let t1 = second_order(&sigma_bits(g, s), tau, &w, tol)?;
            let t2 = second_order(&sigma_bits(g, s ^ eps_bits as usize), tau, z, tol)?;
            let prod = t1 * t2;
            if sign == 0 {
                rhs += prod;
            } else {
                rhs -= prod;
            }
        }
        record(&mut out, "addition_theorem", rel_residual(&lhs, &rhs, &floor, prec));

        // its inversion:
        // 8·Θ₂[σ](w)·Θ₂[σ+ε](z) = Σ_{ε′} (−1)^{σ·ε′} θ[ε|ε′](z+w)θ[ε|ε′](z−w)
        let sig_bits = rng.gen_range(0u32..8);
        let lhs = (second_order(&sigma_bits(g, sig_bits as usize), tau, &w, tol)?
            * second_order(&sigma_bits(g, (sig_bits ^ eps_bits) as usize), tau, z, tol)?)
            * 8u32;
        let mut rhs = Complex::with_val(prec, 0);
        for ep in 0..(1u32 << g) {
            let sign = (sig_bits & ep).count_ones() % 2;
            let chv = ThetaChar::from_bits(g, eps_bits, ep)?;
            let prod =
                theta_char(&chv, tau, &zw_plus, tol)? * theta_char(&chv, tau, &zw_minus, tol)?;
            if sign == 0 {
                rhs += prod;
            } else {
                rhs -= prod;
            }
        }
        record(&mut out, "addition_inversion", rel_residual(&lhs, &rhs, &floor, prec));

        // doubled argument:
        // θ[ε|ε′](τ;2z)·θ[ε|ε′](τ;0) = Σ_σ (−1)^{σ·ε′} x_σ x_{σ+ε}
        let z2: Vec<Complex> = z.iter().map(|c| (c * 2u32).complete((prec, prec))).collect();
        let lhs = theta_char(&ch, tau, &z2, tol)? * theta_char(&ch, tau, &zero, tol)?;
        let mut rhs = Complex::with_val(prec, 0);
        for s in 0..(1usize << g) {
            let sign = ((s as u32) & epsp_bits).count_ones() % 2;
            let prod = (&sample.x[s] * &sample.x[s ^ eps_bits as usize]).complete((prec, prec));
            if sign == 0 {
                rhs += prod;
            } else {
                rhs -= prod;
            }
        }
        record(&mut out, "doubled_argument", rel_residual(&lhs, &rhs, &floor, prec));

        // theta squares: θ[ε|ε′](τ;z)² = Σ_σ (−1)^{σ·ε′} u_σ x_{σ+ε}
        let tv = theta_char(&ch, tau, z, tol)?;
        let lhs = (&tv * &tv).complete((prec, prec));
        let mut rhs = Complex::with_val(prec, 0);
        for s in 0..(1usize << g) {
            let sign = ((s as u32) & epsp_bits).count_ones() % 2;
            let prod = (&sample.u[s] * &sample.x[s ^ eps_bits as usize]).complete((prec, prec));
            if sign == 0 {
                rhs += prod;
            } else {
                rhs -= prod;
            }
        }
        record(&mut out, "theta_squares", rel_residual(&lhs, &rhs, &floor, prec));

        // squared first-order theta constants as quadrics in u
        for ((e, ep), quadric) in quadrics.iter().take(6) {
            let chv = ThetaChar::from_bits(g, *e as u32, *ep as u32)?;
            let tc = theta_char(&chv, tau, &zero, tol)?;
            let lhs = (&tc * &tc).complete((prec, prec));
            let (rhs, scale) = eval_poly_complex(quadric, &sample.u, prec)?;
            let fl = if scale > floor { scale } else { floor.clone() };
            record(&mut out, "even_quadrics", rel_residual(&lhs, &rhs, &fl, prec));
        }

        // the degree-16 Satake hypersurface vanishes on theta constants
        record(&mut out, "satake_vanishing", normalized_poly_residual(&satake, &sample.u, prec)?);
    }
    Ok(out)
}

/// The genus-4 quartic theta-constant relation: an alternating sum of four
/// 4-term products of first-order theta constants that vanishes identically
/// on the Siegel upper halfspace of genus 4. Returns the maximal normalized
/// residual over `count` random τ.
pub fn genus4_relation_check(
    seed: u64,
    count: usize,
    prec: u32,
    tol: &Float,
) -> Result<f64, UktError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    let chars: [(u32, [u32; 4], i32); 4] = [
        (0b0010, [0b0001, 0b1001, 0b0101, 0b1101], 1),
        (0b0011, [0b0011, 0b1011, 0b0111, 0b1111], -1),
        (0b0010, [0b0000, 0b1000, 0b0100, 0b1100], -1),
        (0b0011, [0b0000, 0b1000, 0b0100, 0b1100], 1),
    ];
    let mut worst = 0f64;
    for _ in 0..count {
        let tau = random_riemann_matrix(4, &mut rng, prec)?;
        let zero = vec![Complex::with_val(prec, 0); 4];
        let mut sum = Complex::with_val(prec, 0);
        let mut scale = Float::with_val(prec, 0);
        for (eps, epsps, sgn) in &chars {
            let mut prod = Complex::with_val(prec, 1);
            for ep in epsps {
                let ch = ThetaChar::from_bits(4, *eps, *ep)?;
                prod *= theta_char(&ch, &tau, &zero, tol)?;
            }
            let mag = cabs(&prod, prec);
            if mag > scale {
                scale = mag;
            }
            if *sgn > 0 {
                sum += prod;
            } else {
                sum -= prod;
            }
        }
        let res = (cabs(&sum, prec) / scale).to_f64();
        if res > worst {
            worst = res;
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::sample_universal_kummer;

    #[test]
    fn identity_suite_small() {
        let prec = 256;
        let tol = Float::with_val(prec, 1e-40f64);
        let samples = sample_universal_kummer(7, 2, prec, &tol).unwrap();
        let residuals = identity_suite(&samples, 7, &tol).unwrap();
        assert!(residuals.len() >= 9);
        for r in &residuals {
            assert!(r.residual < 1e-30, "{} residual {}", r.name, r.residual);
        }
    }

    #[test]
    fn genus4_relation_small() {
        let prec = 192;
        let tol = Float::with_val(prec, 1e-36f64);
        let worst = genus4_relation_check(11, 2, prec, &tol).unwrap();
        assert!(worst < 1e-30, "worst residual {worst}");
    }

    #[test]
    fn polynomial_evaluation_normalizes() {
        let vars = ukt_core::poly::VarTable::new(["a", "b"]);
        let mut poly = SparsePoly::zero(QQ, vars);
        poly.add_term(vec![2, 0].into_boxed_slice(), ukt_core::ring::Ring::from_i64(&QQ, 1));
        poly.add_term(vec![0, 2].into_boxed_slice(), ukt_core::ring::Ring::from_i64(&QQ, -1));
        let prec = 128;
        let pt = vec![Complex::with_val(prec, 3), Complex::with_val(prec, 3)];
        let r = normalized_poly_residual(&poly, &pt, prec).unwrap();
        assert!(r < Float::with_val(prec, 1e-30f64));
        let pt2 = vec![Complex::with_val(prec, 3), Complex::with_val(prec, 2)];
        let r2 = normalized_poly_residual(&poly, &pt2, prec).unwrap();
        assert!(r2 > Float::with_val(prec, 0.4));
    }
}
