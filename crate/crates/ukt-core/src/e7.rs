//! The E₇ reflection arrangement in two coordinate systems, the Weyl
//! generators μ and ν, the c↔d coordinate change, and the order of the
//! induced permutation group on the 63 hyperplanes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::UktError;
use crate::perm::{Perm, StabChain};

/// Coordinate system tag for linear forms on the reflection representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum System {
    C,
    D,
}

/// A nonzero linear form in seven variables, stored normalized: integral,
/// primitive, first nonzero coefficient positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    pub coeffs: Vec<BigInt>,
    pub system: System,
}

impl LinearForm {
    pub fn new(coeffs: &[BigRational], system: System) -> Result<LinearForm, UktError> {
        if coeffs.len() != 7 {
            return Err(UktError::Dimension("linear form needs 7 coefficients".into()));
        }
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(UktError::Domain("zero linear form".into()));
        }
        // Clear denominators, divide by content, fix the sign.
        let mut lcm = BigInt::one();
        for c in coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        let first = ints.iter().find(|v| !v.is_zero()).unwrap();
        if first.is_negative() {
            content = -content;
        }
        for v in ints.iter_mut() {
            *v = &*v / &content;
        }
        Ok(LinearForm { coeffs: ints, system })
    }

    fn from_ints(ints: &[i64], system: System) -> LinearForm {
        let coeffs: Vec<BigRational> = ints
            .iter()
            .map(|&v| BigRational::from_integer(v.into()))
            .collect();
        LinearForm::new(&coeffs, system).expect("nonzero")
    }

    pub fn rational_coeffs(&self) -> Vec<BigRational> {
        self.coeffs
            .iter()
            .map(|v| BigRational::from_integer(v.clone()))
            .collect()
    }
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn qh(num: i64) -> BigRational {
    BigRational::new(num.into(), 2.into())
}

/// The generator μ of the Weyl group, acting on c-coordinates.
pub fn mu() -> Vec<Vec<BigRational>> {
    [
        [0, 0, 0, 0, 1, 0, 0],
        [0, 1, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, -1],
        [1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, -1, 0, 0, 0],
    ]
    .iter()
    .map(|row| row.iter().map(|&v| q(v)).collect())
    .collect()
}

/// The generator ν of the Weyl group, acting on c-coordinates.
pub fn nu() -> Vec<Vec<BigRational>> {
    let rows: [[BigRational; 7]; 7] = [
        [q(0), q(-1), q(0), q(0), q(0), q(0), q(0)],
        [q(0), q(0), q(-1), q(0), q(0), q(0), q(0)],
        [qh(1), q(0), q(0), qh(1), qh(-1), q(0), qh(1)],
        [qh(1), q(0), q(0), qh(1), qh(1), q(0), qh(-1)],
        [qh(1), q(0), q(0), qh(-1), qh(1), q(0), qh(1)],
        [qh(1), q(0), q(0), qh(-1), qh(-1), q(0), qh(-1)],
        [q(0), q(0), q(0), q(0), q(0), q(-1), q(0)],
    ];
    rows.iter().map(|row| row.to_vec()).collect()
}

/// Matrix–vector product over ℚ.
pub fn mat_vec(m: &[Vec<BigRational>], v: &[BigRational]) -> Vec<BigRational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Matrix transpose over ℚ.
pub fn transpose(m: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = m.len();
    let k = m[0].len();
    (0..k)
        .map(|j| (0..n).map(|i| m[i][j].clone()).collect())
        .collect()
}

/// Matrix product over ℚ.
pub fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let bt = transpose(b);
    a.iter()
        .map(|row| {
            bt.iter()
                .map(|col| row.iter().zip(col).map(|(x, y)| x * y).sum())
                .collect()
        })
        .collect()
}

/// Whether `m` is orthogonal for the standard form Σcᵢ² (mᵀm = I).
pub fn is_orthogonal(m: &[Vec<BigRational>]) -> bool {
    let prod = mat_mul(&transpose(m), m);
    prod.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
    })
}

/// The c-coordinates of each cᵢ in terms of d (rows of the substitution).
pub fn c_in_terms_of_d() -> [[i64; 7]; 7] {
    // c_i = Σ_j C[i][j]·d_j; each right-hand side is a triple d_a+d_b+d_c.
    [
        [0, 1, 0, 1, 1, 0, 0],
        [1, 0, 0, 1, 0, 0, 1],
        [0, 1, 1, 0, 0, 0, 1],
        [1, 0, 1, 0, 1, 0, 0],
        [1, 1, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1, 1, 1],
        [0, 0, 1, 1, 0, 1, 0],
    ]
}

/// Rewrite a c-system form as a d-system form via the linear substitution.
pub fn c_to_d(form: &LinearForm) -> Result<LinearForm, UktError> {
    if form.system != System::C {
        return Err(UktError::Input("expected a c-system form".into()));
    }
    let c = c_in_terms_of_d();
    // f(c) = w·c with c = C·d, so the d-coefficients are Cᵀ·w.
    let mut d_coeffs = vec![BigRational::zero(); 7];
    for (i, w) in form.rational_coeffs().iter().enumerate() {
        for j in 0..7 {
            d_coeffs[j] += &q(c[i][j]) * w;
        }
    }
    LinearForm::new(&d_coeffs, System::D)
}

/// The 63 hyperplanes of the arrangement, as normalized forms, sorted.
///
/// The c-system is computed as the orbit of the form c₇ under ⟨μ, ν⟩
/// (forms transform by the matrices themselves, which are orthogonal).
/// The d-system is listed directly: 21 differences dᵢ−dⱼ, 35 triple sums
/// dᵢ+dⱼ+dₖ, and 7 six-fold sums (the normalized dᵢ − Σd forms).
pub fn arrangement(system: System) -> Result<Vec<LinearForm>, UktError> {
    match system {
        System::C => {
            let gens = [mu(), nu()];
            let mut start = vec![BigRational::zero(); 7];
            start[6] = BigRational::one();
            let seed = LinearForm::new(&start, System::C)?;
            let mut seen = std::collections::BTreeSet::new();
            seen.insert(seed.clone());
            let mut queue = vec![seed];
            while let Some(f) = queue.pop() {
                for g in &gens {
                    let image = mat_vec(g, &f.rational_coeffs());
                    let nf = LinearForm::new(&image, System::C)?;
                    if seen.insert(nf.clone()) {
                        queue.push(nf);
                    }
                }
            }
            if seen.len() != 63 {
                return Err(UktError::Consistency(format!(
                    "c-arrangement orbit closed at {} forms, expected 63",
                    seen.len()
                )));
            }
            Ok(seen.into_iter().collect())
        }
        System::D => {
            let mut forms = std::collections::BTreeSet::new();
            for i in 0..7 {
                for j in (i + 1)..7 {
                    let mut v = [0i64; 7];
                    v[i] = 1;
                    v[j] = -1;
                    forms.insert(LinearForm::from_ints(&v, System::D));
                    for k in (j + 1)..7 {
                        let mut w = [0i64; 7];
                        w[i] = 1;
                        w[j] = 1;
                        w[k] = 1;
                        forms.insert(LinearForm::from_ints(&w, System::D));
                    }
                }
            }
            for i in 0..7 {
                // d_i − (d_1+…+d_7), normalized
                let mut v = [-1i64; 7];
                v[i] = 0;
                forms.insert(LinearForm::from_ints(&v, System::D));
            }
            if forms.len() != 63 {
                return Err(UktError::Consistency(format!(
                    "d-arrangement has {} forms, expected 63",
                    forms.len()
                )));
            }
            Ok(forms.into_iter().collect())
        }
    }
}

/// Permutation induced on the sorted 63-form list by an orthogonal matrix.
pub fn hyperplane_permutation(
    m: &[Vec<BigRational>],
    forms: &[LinearForm],
) -> Result<Perm, UktError> {
    let mut map = Vec::with_capacity(forms.len());
    for f in forms {
        let image = mat_vec(m, &f.rational_coeffs());
        let nf = LinearForm::new(&image, System::C)?;
        let idx = forms
            .binary_search(&nf)
            .map_err(|_| UktError::Consistency("image form not in arrangement".into()))?;
        map.push(idx);
    }
    Ok(Perm::from_map(map))
}

/// Order of the group generated by μ and ν acting on the 63 hyperplanes.
pub fn group_order() -> Result<u64, UktError> {
    let forms = arrangement(System::C)?;
    let pmu = hyperplane_permutation(&mu(), &forms)?;
    let pnu = hyperplane_permutation(&nu(), &forms)?;
    Ok(StabChain::new(forms.len(), &[pmu, pnu]).order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::enumerate_group;

    #[test]
    fn generators_are_orthogonal() {
        assert!(is_orthogonal(&mu()));
        assert!(is_orthogonal(&nu()));
    }

    #[test]
    fn c_arrangement_has_coordinate_hyperplanes() {
        let forms = arrangement(System::C).unwrap();
        assert_eq!(forms.len(), 63);
        for i in 0..7 {
            let mut v = [0i64; 7];
            v[i] = 1;
            assert!(forms.contains(&LinearForm::from_ints(&v, System::C)));
        }
    }

    #[test]
    fn d_arrangement_census() {
        let forms = arrangement(System::D).unwrap();
        assert_eq!(forms.len(), 63);
        let mut diffs = 0;
        let mut triples = 0;
        let mut sixes = 0;
        for f in &forms {
            let nz = f.coeffs.iter().filter(|c| !c.is_zero()).count();
            match nz {
                2 => diffs += 1,
                3 => triples += 1,
                6 => sixes += 1,
                _ => panic!("unexpected support size {nz}"),
            }
        }
        assert_eq!((diffs, triples, sixes), (21, 35, 7));
        assert!(forms.contains(&LinearForm::from_ints(&[1, 1, 0, 1, 0, 0, 0], System::D)));
    }

    #[test]
    fn substitution_rows_form_fano_configuration() {
        // The supports of the seven triples d_a+d_b+d_c behave like the
        // lines of a Fano plane: any two lines meet in exactly one point
        // and every point lies on exactly three lines.
        let rows = c_in_terms_of_d();
        for i in 0..7 {
            for j in (i + 1)..7 {
                let common = (0..7).filter(|&k| rows[i][k] == 1 && rows[j][k] == 1).count();
                assert_eq!(common, 1, "rows {i},{j}");
            }
        }
        for k in 0..7 {
            let on = (0..7).filter(|&i| rows[i][k] == 1).count();
            assert_eq!(on, 3, "point {k}");
        }
    }

    #[test]
    fn c_to_d_is_bijective_on_the_arrangement() {
        let c_forms = arrangement(System::C).unwrap();
        let d_forms = arrangement(System::D).unwrap();
        let mapped: std::collections::BTreeSet<LinearForm> =
            c_forms.iter().map(|f| c_to_d(f).unwrap()).collect();
        assert_eq!(mapped.len(), 63);
        assert_eq!(mapped, d_forms.iter().cloned().collect());
        // Spot check: the form c₁ maps to d₂+d₄+d₅.
        let c1 = LinearForm::from_ints(&[1, 0, 0, 0, 0, 0, 0], System::C);
        assert_eq!(
            c_to_d(&c1).unwrap(),
            LinearForm::from_ints(&[0, 1, 0, 1, 1, 0, 0], System::D)
        );
    }

    #[test]
    fn group_order_is_1451520() {
        assert_eq!(group_order().unwrap(), 1451520);
    }

    #[test]
    fn generators_permute_forms_up_to_sign() {
        let forms = arrangement(System::C).unwrap();
        // hyperplane_permutation already normalizes (i.e. works up to sign);
        // check the induced maps really are permutations of order > 1.
        let pmu = hyperplane_permutation(&mu(), &forms).unwrap();
        let pnu = hyperplane_permutation(&nu(), &forms).unwrap();
        assert!(!pmu.is_identity());
        assert!(!pnu.is_identity());
        // A tiny subgroup sanity check: ⟨μ⟩ alone is small.
        let sub = enumerate_group(&[pmu], 1000).unwrap();
        assert!(sub > 1 && sub < 100);
    }
}
