//! The degree-7 polynomial parametrization γ : ℙ⁶ ⇢ ℙ¹⁴ of the Göpel
//! variety in the coordinates (r : s₀₀₁ : … : s₁₁₁ : t₀₀₁ : … : t₁₁₁).
//!
//! The r and s polynomials are generated structurally (a product of three
//! coordinates times the quartic Σc⁴ − 2Σc²c² in the complementary four);
//! the seven t polynomials are transcribed term lists. Both are validated
//! by the exact Weyl equivariance γ(g·c) = M_g·γ(c) for the generators
//! μ, ν, which pins every coefficient.

use std::sync::{Arc, OnceLock};

use num_rational::BigRational;
use num_traits::Zero;

use crate::e7::{mu, nu};
use crate::error::UktError;
use crate::linalg::solve_exact;
use crate::poly::{SparsePoly, VarTable};
use crate::ring::{Ring, QQ};

type P = SparsePoly<QQ>;

/// Variable table c₁, …, c₇.
pub fn gamma_vars() -> Arc<VarTable> {
    VarTable::new(["c1", "c2", "c3", "c4", "c5", "c6", "c7"])
}

/// The 15 coordinate names of ℙ¹⁴, in the canonical order used everywhere
/// (r first, then s by binary index, then t by binary index).
pub const GAMMA_KEYS: [&str; 15] = [
    "r", "s001", "s010", "s011", "s100", "s101", "s110", "s111", "t001", "t010", "t011",
    "t100", "t101", "t110", "t111",
];

/// Parse a signed term list like `-2c1^2c3^2c5^2+c4^4` into a polynomial.
fn parse_terms(s: &str, vars: &Arc<VarTable>) -> Result<P, UktError> {
    let mut poly = SparsePoly::zero(QQ, vars.clone());
    let bytes: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut i = 0usize;
    while i < bytes.len() {
        let mut sign = 1i64;
        while i < bytes.len() && (bytes[i] == '+' || bytes[i] == '-') {
            if bytes[i] == '-' {
                sign = -sign;
            }
            i += 1;
        }
        if i >= bytes.len() {
            return Err(UktError::Parse("dangling sign in term list".into()));
        }
        let mut coeff = 0i64;
        let mut saw_digit = false;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            coeff = coeff * 10 + bytes[i].to_digit(10).unwrap() as i64;
            saw_digit = true;
            i += 1;
        }
        if !saw_digit {
            coeff = 1;
        }
        let mut exps = vec![0u8; vars.len()];
        let mut saw_var = false;
        while i < bytes.len() && bytes[i] == 'c' {
            i += 1;
            if i >= bytes.len() || !bytes[i].is_ascii_digit() {
                return Err(UktError::Parse("variable without index".into()));
            }
            let idx = bytes[i].to_digit(10).unwrap() as usize;
            if idx == 0 || idx > vars.len() {
                return Err(UktError::Parse(format!("variable index {idx} out of range")));
            }
            i += 1;
            let mut e = 1u8;
            if i < bytes.len() && bytes[i] == '^' {
                i += 1;
                let mut v = 0u32;
                let mut saw = false;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    v = v * 10 + bytes[i].to_digit(10).unwrap();
                    saw = true;
                    i += 1;
                }
                if !saw || v == 0 || v > u8::MAX as u32 {
                    return Err(UktError::Parse("bad exponent".into()));
                }
                e = v as u8;
            }
            exps[idx - 1] += e;
            saw_var = true;
        }
        if !saw_digit && !saw_var {
            return Err(UktError::Parse(format!("unparsed input near position {i}")));
        }
        poly.add_term(exps.into_boxed_slice(), QQ.from_i64(sign * coeff));
    }
    Ok(poly)
}

/// Σ_{a∈S} c_a⁴ − 2 Σ_{a<b∈S} c_a²c_b² for a four-element index set
/// (1-based indices).
fn quartic_block(set: [usize; 4], vars: &Arc<VarTable>) -> P {
    let mut q = SparsePoly::zero(QQ, vars.clone());
    for (pos, &a) in set.iter().enumerate() {
        let mut e = vec![0u8; 7];
        e[a - 1] = 4;
        q.add_term(e.into_boxed_slice(), QQ.from_i64(1));
        for &b in &set[pos + 1..] {
            let mut e = vec![0u8; 7];
            e[a - 1] = 2;
            e[b - 1] = 2;
            q.add_term(e.into_boxed_slice(), QQ.from_i64(-2));
        }
    }
    q
}

/// c_i·c_j·c_k as a monomial (1-based indices), with sign.
fn triple(sign: i64, idx: [usize; 3], vars: &Arc<VarTable>) -> P {
    let mut e = vec![0u8; 7];
    for &a in &idx {
        e[a - 1] += 1;
    }
    SparsePoly::monomial(QQ, vars.clone(), &e, QQ.from_i64(sign))
}

/// Term lists of the seven degree-6 factors of t₀₀₁, …, t₁₁₁ (the t
/// polynomial is c_i times this factor; the pairs below give the
/// multiplier index i and the factor).
fn t_data() -> [(&'static str, usize, &'static str); 7] {
    [
        ("t100", 3,
         "-c1^4c2^2+c1^2c2^4+c1^4c4^2-c2^4c4^2-c1^2c4^4+c2^2c4^4+2c1^2c2^2c5^2+c2^4c5^2-2c1^2c4^2c5^2\
          -c4^4c5^2-c2^2c5^4+c4^2c5^4-c1^4c6^2-2c1^2c2^2c6^2+2c2^2c4^2c6^2+c4^4c6^2+2c1^2c5^2c6^2-2c2^2c5^2c6^2\
          -c5^4c6^2+c1^2c6^4-c4^2c6^4+c5^2c6^4+c1^4c7^2-c2^4c7^2+2c1^2c4^2c7^2-2c2^2c4^2c7^2-2c1^2c5^2c7^2\
          +2c4^2c5^2c7^2+c5^4c7^2+2c2^2c6^2c7^2-2c4^2c6^2c7^2-c6^4c7^2-c1^2c7^4+c2^2c7^4-c5^2c7^4+c6^2c7^4"),
        ("t010", 2,
         "-c1^4c3^2+c1^2c3^4+c1^4c4^2-c3^4c4^2-c1^2c4^4+c3^2c4^4+c1^4c5^2-c3^4c5^2+2c1^2c4^2c5^2-2c3^2c4^2c5^2\
          -c1^2c5^4+c3^2c5^4-c1^4c6^2-2c1^2c3^2c6^2+2c3^2c4^2c6^2+c4^4c6^2+2c3^2c5^2c6^2-2c4^2c5^2c6^2\
          +c5^4c6^2+c1^2c6^4-c4^2c6^4-c5^2c6^4+2c1^2c3^2c7^2+c3^4c7^2-2c1^2c4^2c7^2-c4^4c7^2-2c1^2c5^2c7^2\
          +2c4^2c5^2c7^2-c5^4c7^2+2c1^2c6^2c7^2-2c3^2c6^2c7^2+c6^4c7^2-c3^2c7^4+c4^2c7^4+c5^2c7^4-c6^2c7^4"),
        ("t101", 5,
         "-c1^4c2^2+c1^2c2^4+2c1^2c2^2c3^2+c2^4c3^2-c2^2c3^4-c1^4c4^2-2c1^2c2^2c4^2+2c1^2c3^2c4^2-2c2^2c3^2c4^2\
          -c3^4c4^2+c1^2c4^4+c3^2c4^4+c1^4c6^2-c2^4c6^2-2c1^2c3^2c6^2+c3^4c6^2+2c2^2c4^2c6^2-c4^4c6^2\
          -c1^2c6^4+c2^2c6^4-c3^2c6^4+c4^2c6^4+c1^4c7^2-c2^4c7^2-2c1^2c3^2c7^2+c3^4c7^2+2c2^2c4^2c7^2\
          -c4^4c7^2+2c1^2c6^2c7^2-2c2^2c6^2c7^2+2c3^2c6^2c7^2-2c4^2c6^2c7^2-c1^2c7^4+c2^2c7^4-c3^2c7^4+c4^2c7^4"),
        ("t001", 1,
         "-c2^4c3^2+c2^2c3^4+c2^4c4^2-c3^4c4^2-c2^2c4^4+c3^2c4^4-c2^4c5^2-2c2^2c3^2c5^2+2c3^2c4^2c5^2+c4^4c5^2\
          +c2^2c5^4-c4^2c5^4+c2^4c6^2-c3^4c6^2+2c2^2c4^2c6^2-2c3^2c4^2c6^2+2c3^2c5^2c6^2-2c4^2c5^2c6^2-c5^4c6^2\
          -c2^2c6^4+c3^2c6^4+c5^2c6^4+2c2^2c3^2c7^2+c3^4c7^2-2c2^2c4^2c7^2-c4^4c7^2+2c2^2c5^2c7^2\
          -2c3^2c5^2c7^2+c5^4c7^2-2c2^2c6^2c7^2+2c4^2c6^2c7^2-c6^4c7^2-c3^2c7^4+c4^2c7^4-c5^2c7^4+c6^2c7^4"),
        ("t110", 6,
         "-c1^4c2^2+c1^2c2^4-c1^4c3^2-2c1^2c2^2c3^2+c1^2c3^4+2c1^2c2^2c4^2+c2^4c4^2+2c1^2c3^2c4^2\
          -2c2^2c3^2c4^2+c3^4c4^2-c2^2c4^4-c3^2c4^4+c1^4c5^2-c2^4c5^2+2c2^2c3^2c5^2-c3^4c5^2-2c1^2c4^2c5^2+c4^4c5^2\
          -c1^2c5^4+c2^2c5^4+c3^2c5^4-c4^2c5^4+c1^4c7^2-c2^4c7^2+2c2^2c3^2c7^2-c3^4c7^2-2c1^2c4^2c7^2+c4^4c7^2\
          +2c1^2c5^2c7^2-2c2^2c5^2c7^2-2c3^2c5^2c7^2+2c4^2c5^2c7^2-c1^2c7^4+c2^2c7^4+c3^2c7^4-c4^2c7^4"),
        ("t011", 7,
         "-c1^4c3^2+2c1^2c2^2c3^2-c2^4c3^2+c1^2c3^4+c2^2c3^4-c1^4c4^2+2c1^2c2^2c4^2-c2^4c4^2-2c1^2c3^2c4^2\
          -2c2^2c3^2c4^2+c1^2c4^4+c2^2c4^4+c1^4c5^2-2c1^2c2^2c5^2+c2^4c5^2-c3^4c5^2+2c3^2c4^2c5^2-c4^4c5^2-c1^2c5^4\
          -c2^2c5^4+c3^2c5^4+c4^2c5^4+c1^4c6^2-2c1^2c2^2c6^2+c2^4c6^2-c3^4c6^2+2c3^2c4^2c6^2-c4^4c6^2+2c1^2c5^2c6^2\
          +2c2^2c5^2c6^2-2c3^2c5^2c6^2-2c4^2c5^2c6^2-c1^2c6^4-c2^2c6^4+c3^2c6^4+c4^2c6^4"),
        ("t111", 4,
         "-c1^4c2^2+c1^2c2^4+c1^4c3^2-c2^4c3^2-c1^2c3^4+c2^2c3^4-c1^4c5^2-2c1^2c2^2c5^2+2c2^2c3^2c5^2+c3^4c5^2\
          +c1^2c5^4-c3^2c5^4+2c1^2c2^2c6^2+c2^4c6^2-2c1^2c3^2c6^2-c3^4c6^2+2c1^2c5^2c6^2-2c2^2c5^2c6^2+c5^4c6^2\
          -c2^2c6^4+c3^2c6^4-c5^2c6^4+c1^4c7^2-c2^4c7^2+2c1^2c3^2c7^2-2c2^2c3^2c7^2+2c2^2c5^2c7^2-2c3^2c5^2c7^2\
          -c5^4c7^2-2c1^2c6^2c7^2+2c3^2c6^2c7^2+c6^4c7^2-c1^2c7^4+c2^2c7^4+c5^2c7^4-c6^2c7^4"),
    ]
}

/// Sign, coordinate triple, and complementary quartic block of each s.
/// Component keys use the subscript convention of the Coble quartic's
/// invariant-quartic labels (σ₁ is the first Schrödinger index); the
/// parametrization is often written with the reversed bit order, so the
/// keys here are the bit-reversed counterparts of that layout. The
/// Coble-label convention is the one under which the restriction cubics of
/// the Göpel ideal vanish on the parametrization.
fn s_data() -> [(&'static str, i64, [usize; 3], [usize; 4]); 7] {
    [
        ("s100", 1, [1, 2, 7], [3, 4, 5, 6]),
        ("s010", -1, [1, 3, 5], [2, 4, 6, 7]),
        ("s110", 1, [1, 4, 6], [2, 3, 5, 7]),
        ("s001", -1, [2, 3, 6], [1, 4, 5, 7]),
        ("s101", 1, [2, 4, 5], [1, 3, 6, 7]),
        ("s011", -1, [3, 4, 7], [1, 2, 5, 6]),
        ("s111", 1, [5, 6, 7], [1, 2, 3, 4]),
    ]
}

fn build_gamma() -> Result<Vec<P>, UktError> {
    let vars = gamma_vars();
    let mut by_key: std::collections::HashMap<&str, P> = Default::default();
    by_key.insert("r", triple(4, [1, 2, 3], &vars).mul(&triple(1, [4, 5, 6], &vars)).mul(
        &SparsePoly::var(QQ, vars.clone(), 6),
    ));
    for (key, sign, idx, comp) in s_data() {
        by_key.insert(key, triple(sign, idx, &vars).mul(&quartic_block(comp, &vars)));
    }
    for (key, mult, body) in t_data() {
        let factor = parse_terms(body, &vars)?;
        if factor.num_terms() != 36 {
            return Err(UktError::Consistency(format!(
                "{key} factor has {} terms, expected 36",
                factor.num_terms()
            )));
        }
        by_key.insert(key, SparsePoly::var(QQ, vars.clone(), mult - 1).mul(&factor));
    }
    let mut out = Vec::with_capacity(15);
    for key in GAMMA_KEYS {
        let p = by_key.remove(key).expect("all 15 keys built");
        if !p.is_homogeneous_of_degree(7) {
            return Err(UktError::Consistency(format!("{key} is not homogeneous of degree 7")));
        }
        out.push(p);
    }
    Ok(out)
}

/// The 15 parametrization polynomials, in [`GAMMA_KEYS`] order.
pub fn gamma_polys() -> &'static [P] {
    static CACHE: OnceLock<Vec<P>> = OnceLock::new();
    CACHE.get_or_init(|| build_gamma().expect("transcribed parametrization is well-formed"))
}

/// Evaluate γ at a rational point of ℙ⁶ (affine representative).
pub fn gamma_eval(c: &[BigRational]) -> Result<Vec<BigRational>, UktError> {
    gamma_polys().iter().map(|p| p.eval(c)).collect()
}

/// Compose each γ_k with the linear change of coordinates `g` on c-space
/// (γ_k(g·c) as a polynomial in c).
pub fn gamma_compose(g: &[Vec<BigRational>]) -> Result<Vec<P>, UktError> {
    let vars = gamma_vars();
    let images: Vec<P> = (0..7)
        .map(|i| {
            let mut p = SparsePoly::zero(QQ, vars.clone());
            for j in 0..7 {
                if !g[i][j].is_zero() {
                    let mut e = vec![0u8; 7];
                    e[j] = 1;
                    p.add_term(e.into_boxed_slice(), g[i][j].clone());
                }
            }
            p
        })
        .collect();
    gamma_polys().iter().map(|p| p.substitute(&images)).collect()
}

/// Solve the exact 15×15 matrix M_g with γ(g·c) = M_g·γ(c). Errors if the
/// composed polynomials leave the span of γ (which would expose a
/// transcription mistake).
pub fn equivariance_matrix(g: &[Vec<BigRational>]) -> Result<Vec<Vec<BigRational>>, UktError> {
    let composed = gamma_compose(g)?;
    let basis = gamma_polys();
    // Index the union of monomial supports.
    let mut monos: std::collections::BTreeSet<Vec<u8>> = Default::default();
    for p in basis.iter().chain(composed.iter()) {
        for (m, _) in p.terms() {
            monos.insert(m.to_vec());
        }
    }
    let monos: Vec<Vec<u8>> = monos.into_iter().collect();
    let a: Vec<Vec<BigRational>> = monos
        .iter()
        .map(|m| basis.iter().map(|p| p.coeff(m)).collect())
        .collect();
    let mut rows = Vec::with_capacity(15);
    for (k, comp) in composed.iter().enumerate() {
        let b: Vec<BigRational> = monos.iter().map(|m| comp.coeff(m)).collect();
        let x = solve_exact(&a, &b).ok_or_else(|| {
            UktError::Consistency(format!(
                "γ_{} composed with the generator is not in the span of γ",
                GAMMA_KEYS[k]
            ))
        })?;
        rows.push(x);
    }
    Ok(rows)
}

/// The equivariance matrices for the Weyl generators μ and ν.
pub fn weyl_matrices() -> Result<(Vec<Vec<BigRational>>, Vec<Vec<BigRational>>), UktError> {
    static CACHE: OnceLock<(Vec<Vec<BigRational>>, Vec<Vec<BigRational>>)> = OnceLock::new();
    if let Some(v) = CACHE.get() {
        return Ok(v.clone());
    }
    let m_mu = equivariance_matrix(&mu())?;
    let m_nu = equivariance_matrix(&nu())?;
    let _ = CACHE.set((m_mu.clone(), m_nu.clone()));
    Ok((m_mu, m_nu))
}

/// Compose γ with the substitution c = C·d, yielding 15 degree-7
/// polynomials in d₁, …, d₇.
pub fn gamma_in_d() -> Result<Vec<P>, UktError> {
    let c = crate::e7::c_in_terms_of_d();
    let rows: Vec<Vec<BigRational>> = c
        .iter()
        .map(|row| row.iter().map(|&v| BigRational::from_integer(v.into())).collect())
        .collect();
    let composed = gamma_compose(&rows)?;
    // relabel the variables: the result is a polynomial in d, not c
    let dvars = VarTable::new(["d1", "d2", "d3", "d4", "d5", "d6", "d7"]);
    Ok(composed
        .into_iter()
        .map(|p| {
            let mut q = SparsePoly::zero(QQ, dvars.clone());
            for (m, coeff) in p.terms() {
                q.add_term(m.clone(), coeff.clone());
            }
            q
        })
        .collect())
}

/// Check that γ vanishes identically (all 15 coordinates) on a linear
/// subspace of c-space given by a rational basis of the subspace.
pub fn vanishes_on_subspace(basis: &[Vec<BigRational>]) -> Result<bool, UktError> {
    let vars = gamma_vars();
    let dim = basis.len();
    let params = VarTable::new((0..dim).map(|i| format!("a{i}")));
    let images: Vec<P> = (0..7)
        .map(|i| {
            let mut p = SparsePoly::zero(QQ, params.clone());
            for (k, v) in basis.iter().enumerate() {
                if !v[i].is_zero() {
                    let mut e = vec![0u8; dim];
                    e[k] = 1;
                    p.add_term(e.into_boxed_slice(), v[i].clone());
                }
            }
            p
        })
        .collect();
    let _ = vars;
    for p in gamma_polys() {
        if !p.substitute(&images)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn shape_and_examples() {
        let polys = gamma_polys();
        assert_eq!(polys.len(), 15);
        // r = 4c₁c₂c₃c₄c₅c₆c₇
        assert_eq!(polys[0].num_terms(), 1);
        assert_eq!(polys[0].coeff(&[1; 7]), q(4));
        // each s has 10 terms (monomial times the 10-term quartic block),
        // each t has 36
        for (k, p) in polys.iter().enumerate() {
            let key = GAMMA_KEYS[k];
            match key.chars().next().unwrap() {
                'r' => assert_eq!(p.num_terms(), 1),
                's' => assert_eq!(p.num_terms(), 10, "{key}"),
                't' => assert_eq!(p.num_terms(), 36, "{key}"),
                _ => unreachable!(),
            }
            assert!(p.is_homogeneous_of_degree(7));
        }
        // spot coefficients: s001 = −c₂c₃c₆·(c₁⁴ − 2c₁²c₄² + …),
        // t100 = c₃·(−c₁⁴c₂² + … + c₆²c₇⁴)
        let s001 = &polys[1];
        assert_eq!(s001.coeff(&[4, 1, 1, 0, 0, 1, 0]), q(-1));
        assert_eq!(s001.coeff(&[2, 1, 1, 2, 0, 1, 0]), q(2));
        let t100 = &polys[11];
        assert_eq!(t100.coeff(&[4, 2, 1, 0, 0, 0, 0]), q(-1));
        assert_eq!(t100.coeff(&[0, 0, 1, 0, 0, 2, 4]), q(1));
    }

    #[test]
    fn weyl_equivariance_exact() {
        let (m_mu, m_nu) = weyl_matrices().unwrap();
        // the solves succeeded, so γ∘μ and γ∘ν lie in the span of γ; verify
        // the matrices reproduce the compositions exactly
        for (g, m) in [(mu(), &m_mu), (nu(), &m_nu)] {
            let composed = gamma_compose(&g).unwrap();
            let basis = gamma_polys();
            for k in 0..15 {
                let mut rhs = SparsePoly::zero(QQ, gamma_vars());
                for l in 0..15 {
                    rhs = rhs.add(&basis[l].scale(&m[k][l]));
                }
                assert!(composed[k].sub(&rhs).is_zero(), "row {k}");
            }
        }
        // both matrices are invertible (the group acts by isomorphisms)
        let rank_mu = crate::linalg::rank_rational(m_mu.clone());
        let rank_nu = crate::linalg::rank_rational(m_nu.clone());
        assert_eq!((rank_mu, rank_nu), (15, 15));
    }

    #[test]
    fn gamma_components_linearly_independent() {
        let mut monos: std::collections::BTreeSet<Vec<u8>> = Default::default();
        for p in gamma_polys() {
            for (m, _) in p.terms() {
                monos.insert(m.to_vec());
            }
        }
        let monos: Vec<Vec<u8>> = monos.into_iter().collect();
        let rows: Vec<Vec<BigRational>> = gamma_polys()
            .iter()
            .map(|p| monos.iter().map(|m| p.coeff(m)).collect())
            .collect();
        assert_eq!(crate::linalg::rank_rational(rows), 15);
    }

    #[test]
    fn vanishes_on_indeterminacy_flats() {
        // D₄ flat: c₁ = c₄ = c₅ = c₇ = 0 (basis e₂, e₃, e₆)
        let e = |i: usize| {
            let mut v = vec![BigRational::zero(); 7];
            v[i] = BigRational::one();
            v
        };
        assert!(vanishes_on_subspace(&[e(1), e(2), e(5)]).unwrap());
        // A₅ flat: c₅ = c₆ = c₇ = 0, c₂ = c₄, c₁ = −c₄
        let mut v1 = vec![BigRational::zero(); 7];
        v1[0] = q(-1);
        v1[1] = q(1);
        v1[3] = q(1);
        assert!(vanishes_on_subspace(&[v1, e(2)]).unwrap());
        // generic point: γ ≠ 0, in fact all 15 coordinates nonzero
        let pt: Vec<BigRational> = [3, 5, 7, 11, 13, 17, 19].iter().map(|&n| q(n)).collect();
        let img = gamma_eval(&pt).unwrap();
        assert!(img.iter().all(|v| !v.is_zero()));
    }

    #[test]
    fn gamma_in_d_vanishes_on_d_system_flat() {
        // the D₄ flat in d-coordinates: d₁=d₂=d₃=α, d₅=−α−d₄, d₇=−α−d₆
        let gd = gamma_in_d().unwrap();
        let params = VarTable::new(["al", "d4", "d6"]);
        let lin = |coeffs: [i64; 3]| {
            let mut p = SparsePoly::zero(QQ, params.clone());
            for (k, &v) in coeffs.iter().enumerate() {
                if v != 0 {
                    let mut e = [0u8; 3];
                    e[k] = 1;
                    p.add_term(Box::new(e), q(v));
                }
            }
            p
        };
        let images = vec![
            lin([1, 0, 0]),  // d1 = α
            lin([1, 0, 0]),  // d2 = α
            lin([1, 0, 0]),  // d3 = α
            lin([0, 1, 0]),  // d4 free
            lin([-1, -1, 0]), // d5 = −α−d4
            lin([0, 0, 1]),  // d6 free
            lin([-1, 0, -1]), // d7 = −α−d6
        ];
        for p in &gd {
            assert!(p.substitute(&images).unwrap().is_zero());
        }
    }
}
