//! The fifteen degree-28 coefficients r(u), s_σ(u), t_σ(u) of the universal
//! Coble quartic, expressed in the eight second-order theta constants u_σ.
//!
//! Construction: each coefficient is first written as a polynomial in the
//! eight first-order theta constants T_{ε′} = θ[0|ε′](τ;0) — products of the
//! binomials D_ε = ∏_{ε′∈ε⊥}T_{ε′} − ∏_{ε′∉ε⊥}T_{ε′} — then expanded.
//! Every monomial of the expansion has uniform exponent parity, so it is
//! either a monomial in the squares T² or the product Π = ∏_{ε′}T_{ε′}
//! times such a monomial. The addition formula turns each T² into a
//! quadric in u, and Riemann's theta relation turns 2Π into a degree-8
//! u-polynomial (the same polynomial for every choice of ε ≠ 0, which is
//! asserted). Everything stays in integer arithmetic; the single division
//! by 2 in r is checked to be exact.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use ukt_core::gf2::invariant_quartics;
use ukt_core::poly::{SparsePoly, VarTable};
use ukt_core::ring::QQ;
use ukt_core::satake::{satake_vars, theta_square_quadric};
use ukt_core::UktError;

use crate::upoly::{pack, unpack, UPoly};

/// Names of the fifteen coefficients in canonical order.
pub const COEFF_NAMES: [&str; 15] = [
    "r", "s001", "s010", "s011", "s100", "s101", "s110", "s111", "t001", "t010", "t011", "t100",
    "t101", "t110", "t111",
];

fn dot(a: u8, b: u8) -> u8 {
    ((a & b).count_ones() & 1) as u8
}

/// ε′ with ε·ε′ = 0, in increasing order.
fn perp(eps: u8) -> Vec<u8> {
    (0..8u8).filter(|&e| dot(eps, e) == 0).collect()
}

fn non_perp(eps: u8) -> Vec<u8> {
    (0..8u8).filter(|&e| dot(eps, e) == 1).collect()
}

/// Square-free monomial in the T symbols indexed by the given set.
fn t_monomial(set: &[u8]) -> UPoly {
    let mut e = [0u8; 8];
    for &i in set {
        e[i as usize] = 1;
    }
    UPoly::monomial(&e, 1)
}

/// D_ε = ∏_{ε′∈ε⊥}T_{ε′} − ∏_{ε′∉ε⊥}T_{ε′} as a binomial in the T symbols.
fn d_eps_t(eps: u8) -> UPoly {
    t_monomial(&perp(eps)).sub(&t_monomial(&non_perp(eps)))
}

/// Splits a T-polynomial into (even, odd) parts: `even` collects monomials
/// with all exponents even (exponents halved, now counting T² symbols);
/// `odd` collects monomials with all exponents odd (Π divided out, the
/// remaining even exponents halved). Mixed parity is an error.
fn parity_split(p: &UPoly) -> Result<(UPoly, UPoly), UktError> {
    let mut even = UPoly::zero();
    let mut odd = UPoly::zero();
    for (k, c) in p.terms() {
        let e = unpack(*k);
        if e.iter().all(|&x| x % 2 == 0) {
            let h: Vec<u8> = e.iter().map(|&x| x / 2).collect();
            even.add_term(pack(&h.try_into().unwrap()), *c);
        } else if e.iter().all(|&x| x % 2 == 1) {
            let h: Vec<u8> = e.iter().map(|&x| (x - 1) / 2).collect();
            odd.add_term(pack(&h.try_into().unwrap()), *c);
        } else {
            return Err(UktError::Consistency(
                "T-expansion produced a mixed-parity monomial".into(),
            ));
        }
    }
    Ok((even, odd))
}

/// The quadric (T^ε_{ε′})² = Σ_σ (−1)^{σ·ε′} u_σ u_{σ+ε} as an integer
/// u-polynomial (off-diagonal entries carry coefficient ±2 when ε ≠ 0).
fn quadric_u(eps: u8, epsp: u8) -> UPoly {
    let mut q = UPoly::zero();
    for sigma in 0..8u8 {
        let mut e = [0u8; 8];
        e[sigma as usize] += 1;
        e[(sigma ^ eps) as usize] += 1;
        let sign = if dot(sigma, epsp) == 0 { 1 } else { -1 };
        q.add_term(pack(&e), sign);
    }
    q
}

/// Substitutes the quadrics for the T² symbols: each monomial of `tsq`
/// (exponents counting T² symbols) becomes the corresponding product of
/// the eight ε = 0 quadrics. Powers of each quadric are memoized.
fn subst_squares(tsq: &UPoly, l: &[UPoly; 8]) -> UPoly {
    let mut pows: Vec<Vec<UPoly>> = (0..8).map(|_| vec![UPoly::constant(1)]).collect();
    let mut pow = |i: usize, e: usize, pows: &mut Vec<Vec<UPoly>>| -> UPoly {
        while pows[i].len() <= e {
            let next = pows[i].last().unwrap().mul(&l[i]);
            pows[i].push(next);
        }
        pows[i][e].clone()
    };
    let mut out = UPoly::zero();
    for (k, c) in tsq.terms() {
        let e = unpack(*k);
        let mut prod = UPoly::constant(*c);
        for i in 0..8 {
            if e[i] > 0 {
                prod = prod.mul(&pow(i, e[i] as usize, &mut pows));
            }
        }
        out = out.add(&prod);
    }
    out
}

fn l_forms() -> [UPoly; 8] {
    std::array::from_fn(|i| quadric_u(0, i as u8))
}

/// 2·∏_{ε′}T_{ε′} as a degree-8 u-polynomial, via the squared Riemann
/// relation ∏_{∈}(T⁰)² + ∏_{∉}(T⁰)² − ∏_{ε′∈ε⊥}(T^ε_{ε′})². All seven
/// choices of ε ≠ 0 must give the same polynomial.
fn p2_u() -> Result<UPoly, UktError> {
    let l = l_forms();
    let mut result: Option<UPoly> = None;
    for eps in 1..8u8 {
        let mut cand = UPoly::constant(1);
        for &e in &perp(eps) {
            cand = cand.mul(&l[e as usize]);
        }
        let mut out_part = UPoly::constant(1);
        for &e in &non_perp(eps) {
            out_part = out_part.mul(&l[e as usize]);
        }
        let mut q_part = UPoly::constant(1);
        for &e in &perp(eps) {
            q_part = q_part.mul(&quadric_u(eps, e));
        }
        cand = cand.add(&out_part).sub(&q_part);
        match &result {
            None => result = Some(cand),
            Some(r) => {
                if *r != cand {
                    return Err(UktError::Consistency(format!(
                        "Riemann-relation product depends on the choice ε = {eps:03b}"
                    )));
                }
            }
        }
    }
    Ok(result.unwrap())
}

/// W_σ, the degree-4 factor of t_σ, built as q(ε,0)·q(ε,σ) − q(ε,a)·q(ε,b)
/// where {a, b} = ε⊥ \ {0, σ}. The three admissible ε ∈ σ⊥ \ {0} must give
/// the same u-polynomial.
fn w_sigma_u(sigma: u8) -> Result<UPoly, UktError> {
    let mut result: Option<UPoly> = None;
    for eps in 1..8u8 {
        if dot(eps, sigma) != 0 {
            continue;
        }
        let rest: Vec<u8> = perp(eps).into_iter().filter(|&e| e != 0 && e != sigma).collect();
        if rest.len() != 2 || rest[0] ^ rest[1] != sigma {
            return Err(UktError::Consistency("unexpected coset structure in ε⊥".into()));
        }
        let cand = quadric_u(eps, 0)
            .mul(&quadric_u(eps, sigma))
            .sub(&quadric_u(eps, rest[0]).mul(&quadric_u(eps, rest[1])));
        match &result {
            None => result = Some(cand),
            Some(r) => {
                if *r != cand {
                    return Err(UktError::Consistency(format!(
                        "W_{sigma:03b} depends on the pairing choice"
                    )));
                }
            }
        }
    }
    result.ok_or_else(|| UktError::Domain("σ must be nonzero".into()))
}

/// The fifteen integer coefficient polynomials, keyed in [`COEFF_NAMES`]
/// order, plus the shared degree-8 polynomial equal to 2·∏T.
pub struct CobleCoeffs {
    coeffs: Vec<(String, UPoly)>,
    p2: UPoly,
}

impl CobleCoeffs {
    pub fn get(&self, name: &str) -> Result<&UPoly, UktError> {
        self.coeffs
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, p)| p)
            .ok_or_else(|| UktError::Input(format!("unknown coefficient {name}")))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &UPoly)> {
        self.coeffs.iter().map(|(n, p)| (n.as_str(), p))
    }

    /// 2·∏_{ε′}T⁰_{ε′} in u (degree 8).
    pub fn p2(&self) -> &UPoly {
        &self.p2
    }
}

fn build_coeffs() -> Result<CobleCoeffs, UktError> {
    let l = l_forms();
    let p2 = p2_u()?;
    let p2_sq = p2.mul(&p2);
    let mut coeffs: Vec<(String, UPoly)> = Vec::with_capacity(15);

    // r = ∏_{ε≠0} D_ε; the odd part carries Π = p2/2, so the division by 2
    // must be exact.
    let mut prod_t = UPoly::constant(1);
    for eps in 1..8u8 {
        prod_t = prod_t.mul(&d_eps_t(eps));
    }
    let (a, b) = parity_split(&prod_t)?;
    let r = subst_squares(&a, &l).add(&p2.mul(&subst_squares(&b, &l)).div_exact(2)?);
    expect_terms("r", &r, 5360)?;
    coeffs.push(("r".into(), r));

    // s_σ = −2·(∏_{∈σ⊥}T + ∏_{∉}T)·∏_{ε∉{0,σ}}D_ε = −(2A + p2·B).
    for sigma in 1..8u8 {
        let mut expr = t_monomial(&perp(sigma)).add(&t_monomial(&non_perp(sigma)));
        for eps in 1..8u8 {
            if eps != sigma {
                expr = expr.mul(&d_eps_t(eps));
            }
        }
        let (a, b) = parity_split(&expr)?;
        let s = subst_squares(&a, &l)
            .scale(2)
            .add(&p2.mul(&subst_squares(&b, &l)))
            .neg();
        let name = format!("s{sigma:03b}");
        let expected = if sigma.count_ones() == 2 { 7880 } else { 7564 };
        expect_terms(&name, &s, expected)?;
        coeffs.push((name, s));
    }

    // t_σ = 8·Π·∏_{ε∉σ⊥}D_ε·W_σ = (4·p2·E + 2·p2²·O)·W_σ.
    for sigma in 1..8u8 {
        let mut expr = UPoly::constant(1);
        for eps in 1..8u8 {
            if dot(eps, sigma) == 1 {
                expr = expr.mul(&d_eps_t(eps));
            }
        }
        let (e_part, o_part) = parity_split(&expr)?;
        let base = p2
            .mul(&subst_squares(&e_part, &l))
            .scale(4)
            .add(&p2_sq.mul(&subst_squares(&o_part, &l)).scale(2));
        let t = base.mul(&w_sigma_u(sigma)?);
        let name = format!("t{sigma:03b}");
        expect_terms(&name, &t, 8114)?;
        coeffs.push((name, t));
    }

    coeffs.sort_by(|(a, _), (b, _)| {
        let rank = |n: &str| COEFF_NAMES.iter().position(|x| x == &n).unwrap();
        rank(a).cmp(&rank(b))
    });
    Ok(CobleCoeffs { coeffs, p2 })
}

fn expect_terms(name: &str, p: &UPoly, expected: usize) -> Result<(), UktError> {
    if p.num_terms() != expected {
        return Err(UktError::Consistency(format!(
            "coefficient {name} has {} terms, expected {expected}",
            p.num_terms()
        )));
    }
    p.homogeneous_degree().and_then(|d| {
        if d == 28 {
            Ok(())
        } else {
            Err(UktError::Consistency(format!(
                "coefficient {name} has degree {d}, expected 28"
            )))
        }
    })
}

static COEFFS: OnceLock<Result<CobleCoeffs, String>> = OnceLock::new();

/// The cached fifteen degree-28 coefficient polynomials in u.
pub fn coble_coeffs_u() -> Result<&'static CobleCoeffs, UktError> {
    COEFFS
        .get_or_init(|| build_coeffs().map_err(|e| e.to_string()))
        .as_ref()
        .map_err(|e| UktError::Consistency(e.clone()))
}

/// The quadric attached to an even characteristic, as a rational polynomial
/// over the standard u-variable table.
pub fn t_square_to_u(eps: u8, epsp: u8) -> Result<SparsePoly<QQ>, UktError> {
    theta_square_quadric(eps, epsp)
}

/// ∏_{ε′}T⁰_{ε′} as a degree-8 rational polynomial in u (half of the
/// canonical integer polynomial 2Π).
pub fn pi_t0_in_u() -> Result<SparsePoly<QQ>, UktError> {
    Ok(coble_coeffs_u()?.p2().to_sparse(satake_vars(), 2))
}

/// Variable table u000..u111, x000..x111 for bihomogeneous polynomials.
pub fn ux_vars() -> Arc<VarTable> {
    let mut names = Vec::with_capacity(16);
    for pre in ["u", "x"] {
        for s in 0..8u32 {
            names.push(format!("{pre}{}{}{}", (s >> 2) & 1, (s >> 1) & 1, s & 1));
        }
    }
    VarTable::new(names)
}

/// Assembles a bihomogeneous polynomial of the Coble-quartic shape from
/// fifteen u-coefficients (given with a common denominator).
pub fn assemble_quartic_shape(
    coeffs: &HashMap<String, UPoly>,
    denom: i128,
) -> Result<SparsePoly<QQ>, UktError> {
    use num_rational::BigRational;
    let vars = ux_vars();
    let mut f = SparsePoly::zero(QQ, vars.clone());
    let d = BigRational::from_integer(denom.into());
    for (name, support) in invariant_quartics() {
        let Some(c) = coeffs.get(&name) else { continue };
        for (k, v) in c.terms() {
            let ue = unpack(*k);
            for xm in &support {
                let mut e = [0u8; 16];
                e[..8].copy_from_slice(&ue);
                e[8..].copy_from_slice(xm);
                let q = BigRational::from_integer((*v).into()) / d.clone();
                f.add_term(e.to_vec().into_boxed_slice(), q);
            }
        }
    }
    Ok(f)
}

/// The universal Coble quartic F(u; x): bidegree (28,4), 372060 terms.
pub fn coble_f() -> Result<SparsePoly<QQ>, UktError> {
    let coeffs = coble_coeffs_u()?;
    let map: HashMap<String, UPoly> =
        coeffs.iter().map(|(n, p)| (n.to_string(), p.clone())).collect();
    let f = assemble_quartic_shape(&map, 1)?;
    if f.num_terms() != 372060 {
        return Err(UktError::Consistency(format!(
            "universal Coble quartic has {} terms, expected 372060",
            f.num_terms()
        )));
    }
    Ok(f)
}

/// The Morley linear form 6r + Σ_σ s_σ in the u-coefficients: a degree-28
/// polynomial with 59256 terms whose vanishing characterizes Lüroth
/// quartics among plane quartics.
pub fn morley_invariant() -> Result<SparsePoly<QQ>, UktError> {
    let coeffs = coble_coeffs_u()?;
    let mut m = coeffs.get("r")?.scale(6);
    for sigma in 1..8u8 {
        m = m.add(coeffs.get(&format!("s{sigma:03b}"))?);
    }
    if m.num_terms() != 59256 {
        return Err(UktError::Consistency(format!(
            "Morley invariant has {} terms, expected 59256",
            m.num_terms()
        )));
    }
    if m.homogeneous_degree()? != 28 {
        return Err(UktError::Consistency("Morley invariant is not of degree 28".into()));
    }
    Ok(m.to_sparse(satake_vars(), 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_product_is_canonical_and_degree_8() {
        let p2 = p2_u().unwrap();
        assert_eq!(p2.homogeneous_degree().unwrap(), 8);
        // sanity: symmetric under u_σ ↦ u_{σ+δ} for every shift δ
        for delta in 1..8u8 {
            let mut shifted = UPoly::zero();
            for (k, c) in p2.terms() {
                let e = unpack(*k);
                let mut f = [0u8; 8];
                for s in 0..8usize {
                    f[s ^ delta as usize] = e[s];
                }
                shifted.add_term(pack(&f), *c);
            }
            assert_eq!(shifted, p2);
        }
    }

    #[test]
    fn w_factors_are_canonical() {
        for sigma in 1..8u8 {
            let w = w_sigma_u(sigma).unwrap();
            assert_eq!(w.homogeneous_degree().unwrap(), 4);
        }
    }

    #[test]
    fn coefficient_term_counts() {
        let c = coble_coeffs_u().unwrap();
        assert_eq!(c.get("r").unwrap().num_terms(), 5360);
        assert_eq!(c.get("s001").unwrap().num_terms(), 7564);
        assert_eq!(c.get("s011").unwrap().num_terms(), 7880);
        assert_eq!(c.get("t100").unwrap().num_terms(), 8114);
        // term-count identity for the assembled quartic
        assert_eq!(8 * 5360 + 4 * (4 * 7564 + 3 * 7880) + 2 * 7 * 8114, 372060);
    }

    #[test]
    fn universal_coble_quartic_term_count() {
        let f = coble_f().unwrap();
        assert_eq!(f.num_terms(), 372060);
    }

    #[test]
    fn morley_invariant_term_count() {
        let m = morley_invariant().unwrap();
        assert_eq!(m.num_terms(), 59256);
    }
}
