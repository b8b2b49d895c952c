//! The 135×15 transformation matrix expressing each Göpel product (a
//! product of seven line forms in d) as an integer linear combination of
//! the 15 parametrization polynomials composed with the substitution
//! c = C·d. Rows are solved by exact linear algebra on monomial
//! coefficients and re-verified symbolically, so the result is an exact
//! polynomial identity, not a sampled one.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::UktError;
use crate::gopel::gamma::GAMMA_KEYS;
use crate::gopel::products::gopel_data;
use crate::linalg::rref_rational;
use crate::poly::SparsePoly;
use crate::ring::QQ;

type P = SparsePoly<QQ>;

/// The transformation matrix: `rows[l][k]` is the coefficient of the k-th
/// coordinate (order [`GAMMA_KEYS`]) in the l-th Göpel coordinate (order
/// [`crate::gf2::lagrangians()`]). The matrix satisfies the exact
/// polynomial identity rows·γ(C·d) = `scalar`·products(d): both sides are
/// only defined projectively, and the matrix is normalized so that the
/// Fano row f₁₂₃₄₆₅₇ equals its reference integer vector
/// (−4, −2, …, −2, −1, …, −1), which makes every row integral.
pub struct TransformationMatrix {
    pub rows: Vec<Vec<BigInt>>,
    pub scalar: BigRational,
}

fn invert_15(b: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = b.len();
    let mut aug: Vec<Vec<BigRational>> = b
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { BigRational::one() } else { BigRational::zero() });
            }
            r
        })
        .collect();
    let pivots = rref_rational(&mut aug);
    if pivots != (0..n).collect::<Vec<_>>() {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// γ composed with the branch-fixed substitution. The parametrization is a
/// 24-to-1 cover of its image, and composing the substitution c = C·d with
/// a Weyl element changes the composition by a deck transformation. The
/// integer transformation rows below match their reference vectors on the
/// branch obtained by additionally swapping c₁↔c₂ and c₅↔c₆ and negating
/// c₄, c₅ and c₆; this is fixed here once and verified against both
/// reference rows.
fn branch_basis() -> Result<Vec<P>, UktError> {
    let c = crate::e7::c_in_terms_of_d();
    let relabel = [1usize, 0, 2, 3, 5, 4, 6]; // (1 2)(5 6) on the c-indices
    let flips = [1i64, 1, 1, -1, -1, -1, 1];
    let rows: Vec<Vec<BigRational>> = (0..7)
        .map(|i| {
            let flip = flips[i];
            c[relabel[i]]
                .iter()
                .map(|&v| BigRational::from_integer((flip * v).into()))
                .collect()
        })
        .collect();
    let composed = crate::gopel::gamma::gamma_compose(&rows)?;
    let dvars = crate::gopel::products::d_vars();
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

fn build() -> Result<TransformationMatrix, UktError> {
    let basis = branch_basis()?;
    let products = &gopel_data().products;
    // pick 15 monomials on which the basis coefficients are invertible
    let mut monos: std::collections::BTreeSet<Vec<u8>> = Default::default();
    for p in &basis {
        for (m, _) in p.terms() {
            monos.insert(m.to_vec());
        }
    }
    let monos: Vec<Vec<u8>> = monos.into_iter().collect();
    let mut selected: Vec<Vec<u8>> = Vec::new();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for m in &monos {
        if rows.len() == 15 {
            break;
        }
        let row: Vec<BigRational> = basis.iter().map(|p| p.coeff(m)).collect();
        let mut trial = rows.clone();
        trial.push(row.clone());
        if crate::linalg::rank_rational(trial) == rows.len() + 1 {
            rows.push(row);
            selected.push(m.clone());
        }
    }
    if rows.len() != 15 {
        return Err(UktError::Consistency(
            "parametrization coefficients do not have full rank".into(),
        ));
    }
    let inv = invert_15(&rows)
        .ok_or_else(|| UktError::Consistency("selected coefficient block is singular".into()))?;
    let mut solved: Vec<Vec<BigRational>> = Vec::with_capacity(135);
    for (l, prod) in products.iter().enumerate() {
        let v: Vec<BigRational> = selected.iter().map(|m| prod.coeff(m)).collect();
        let x: Vec<BigRational> = inv
            .iter()
            .map(|row| row.iter().zip(v.iter()).map(|(a, b)| a * b).sum())
            .collect();
        // verify the full polynomial identity, not just the selected block
        let mut rhs = SparsePoly::zero(QQ, basis[0].vars().clone());
        for (k, coeff) in x.iter().enumerate() {
            rhs = rhs.add(&basis[k].scale(coeff));
        }
        if !prod.sub(&rhs).is_zero() {
            return Err(UktError::Consistency(format!(
                "product {l} is not in the span of the parametrization"
            )));
        }
        solved.push(x);
    }
    // projective normalization: one global scalar fixed by the f₁₂₃₄₆₅₇ row
    let reference = crate::gopel::products::label_index(
        &crate::gopel::products::GopelLabel::parse("f1234657")?,
    )?;
    let ref_first = &solved[reference][0];
    if ref_first.is_zero() {
        return Err(UktError::Consistency("reference row has no r-coefficient".into()));
    }
    let scalar = ref_first / BigRational::from_integer((-4).into());
    let mut out = Vec::with_capacity(135);
    for (l, x) in solved.iter().enumerate() {
        let ints: Option<Vec<BigInt>> = x
            .iter()
            .map(|c| {
                let s = c / &scalar;
                s.denom().is_one().then(|| s.numer().clone())
            })
            .collect();
        out.push(ints.ok_or_else(|| {
            UktError::Consistency(format!("row {l} has a non-integer coefficient"))
        })?);
    }
    // rows·γ = (1/scalar)·products, i.e. rows·γ(C·d) = scalar⁻¹ … record
    // the factor with products on the right-hand side
    let scalar = scalar.recip();
    Ok(TransformationMatrix { rows: out, scalar })
}

/// The exact transformation matrix (computed once, then cached).
pub fn transformation_matrix() -> Result<&'static TransformationMatrix, UktError> {
    static CACHE: OnceLock<TransformationMatrix> = OnceLock::new();
    if let Some(m) = CACHE.get() {
        return Ok(m);
    }
    let m = build()?;
    let _ = CACHE.set(m);
    Ok(CACHE.get().unwrap())
}

/// Full consistency check: every row verified symbolically during
/// construction; here the two reference rows are compared against their
/// known integer coefficient vectors.
pub fn transformation_check() -> Result<(), UktError> {
    let m = transformation_matrix()?;
    let row_of = |label: &str| -> Result<Vec<i64>, UktError> {
        let lab = crate::gopel::products::GopelLabel::parse(label)?;
        let idx = crate::gopel::products::label_index(&lab)?;
        Ok(m.rows[idx]
            .iter()
            .map(|v| i64::try_from(v).expect("small entry"))
            .collect())
    };
    let r1 = row_of("f1234657")?;
    let want1: Vec<i64> = vec![-4, -2, -2, -2, -2, -2, -2, -2, -1, -1, -1, -1, -1, -1, -1];
    if r1 != want1 {
        return Err(UktError::Consistency(format!("unexpected first reference row {r1:?}")));
    }
    // −8r − 4s001 − 4s100 − 4s101 − 2t010 in GAMMA_KEYS order
    let r2 = row_of("f1237654")?;
    let mut want2 = vec![0i64; 15];
    for (key, v) in [("r", -8i64), ("s001", -4), ("s100", -4), ("s101", -4), ("t010", -2)] {
        let k = GAMMA_KEYS.iter().position(|&n| n == key).unwrap();
        want2[k] = v;
    }
    if r2 != want2 {
        return Err(UktError::Consistency(format!("unexpected second reference row {r2:?}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gopel::gamma::gamma_eval;
    use crate::gopel::products::d_vars;
    use num_traits::ToPrimitive;

    #[test]
    fn matrix_shape_and_reference_rows() {
        let m = transformation_matrix().unwrap();
        assert_eq!(m.rows.len(), 135);
        assert!(m.rows.iter().all(|r| r.len() == 15));
        transformation_check().unwrap();
    }

    #[test]
    fn rows_satisfy_trinomials() {
        // the 315 linear trinomials, rewritten through the matrix, vanish
        let m = transformation_matrix().unwrap();
        let trins = crate::gopel::products::trinomials().unwrap();
        for t in &trins {
            for k in 0..15 {
                let sum: BigInt = t
                    .lags
                    .iter()
                    .zip(t.signs.iter())
                    .map(|(&l, &s)| &m.rows[l][k] * BigInt::from(s))
                    .sum();
                assert!(sum.is_zero());
            }
        }
    }

    #[test]
    fn evaluation_agrees_with_products() {
        // M·γ(C·d) = products(d) exactly at a random rational point
        let m = transformation_matrix().unwrap();
        let c_of_d = crate::e7::c_in_terms_of_d();
        let d: Vec<BigRational> = [2i64, 3, 5, 7, 11, 13, 17]
            .iter()
            .map(|&n| BigRational::from_integer(n.into()))
            .collect();
        // the branch-fixing substitution (see branch_basis)
        let relabel = [1usize, 0, 2, 3, 5, 4, 6];
        let flips = [1i64, 1, 1, -1, -1, -1, 1];
        let c: Vec<BigRational> = (0..7)
            .map(|i| {
                let s: BigRational = c_of_d[relabel[i]]
                    .iter()
                    .zip(d.iter())
                    .map(|(&a, b)| BigRational::from_integer(a.into()) * b)
                    .sum();
                s * BigRational::from_integer(flips[i].into())
            })
            .collect();
        let g = gamma_eval(&c).unwrap();
        let products = &gopel_data().products;
        let _ = d_vars();
        for (l, prod) in products.iter().enumerate() {
            let want = prod.eval(&d).unwrap() * &m.scalar;
            let got: BigRational = m.rows[l]
                .iter()
                .zip(g.iter())
                .map(|(a, b)| BigRational::from_integer(a.clone()) * b)
                .sum();
            assert_eq!(got, want, "row {l}");
        }
        // the normalization scalar is a single projective constant (2⁷ on
        // the branch fixed in branch_basis)
        assert_eq!(m.scalar, BigRational::from_integer(128.into()));
        let _ = 0f64.to_f64();
    }

    #[test]
    fn matrix_has_rank_15() {
        let m = transformation_matrix().unwrap();
        let rows: Vec<Vec<BigRational>> = m
            .rows
            .iter()
            .map(|r| r.iter().map(|v| BigRational::from_integer(v.clone())).collect())
            .collect();
        assert_eq!(crate::linalg::rank_rational(rows), 15);
    }
}
