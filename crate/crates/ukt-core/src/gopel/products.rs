//! The 135 Göpel products of seven linear forms in d₁, …, d₇, indexed by
//! the Lagrangians of (𝔽₂)⁶ via Cayley's table; the 63×135 incidence
//! matrix of the underlying monomial map; the induced Weyl permutations of
//! lines and Lagrangians; the 315 linear trinomials; and the binomial
//! relations with their orbit decomposition.
//!
//! Conventions. Each nonzero vector v ∈ (𝔽₂)⁶ is a "line" with a linear
//! form: x_i = d_i − (d₁+…+d₇) for singleton labels, x_{ij} = d_i − d_j
//! (i < j) for pairs, x_{ijk} = d_i + d_j + d_k for triples. The canonical
//! product of a Lagrangian multiplies its seven line forms with these
//! canonical signs. Written labels f_{p₁…p₇} (Fano) and g_{q p₁…p₆}
//! (Pascal) fix their own signs: a pair factor is d_{pᵢ} − d_{pⱼ} in
//! written order, so permuted labels can differ by a sign.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use num_rational::BigRational;
use num_traits::Zero;

use crate::e7::{c_in_terms_of_d, mat_vec, mu, nu, LinearForm, System};
use crate::error::UktError;
use crate::gf2::{cayley, isotropic_subspaces, lagrangians, CayleyLabel, IsotropicSubspace};
use crate::linalg::{rank_rational, solve_exact, FpMatrix};
use crate::perm::Perm;
use crate::poly::{SparsePoly, VarTable};
use crate::ring::{Ring, QQ};

type P = SparsePoly<QQ>;

/// Variable table d₁, …, d₇.
pub fn d_vars() -> Arc<VarTable> {
    static CACHE: OnceLock<Arc<VarTable>> = OnceLock::new();
    CACHE
        .get_or_init(|| VarTable::new(["d1", "d2", "d3", "d4", "d5", "d6", "d7"]))
        .clone()
}

/// The canonical linear form of a Cayley label (see module docs).
pub fn label_form(label: &CayleyLabel) -> P {
    let vars = d_vars();
    let mut p = SparsePoly::zero(QQ, vars.clone());
    let unit = |i: u8, c: i64| {
        let mut e = [0u8; 7];
        e[(i - 1) as usize] = 1;
        (Box::new(e) as Box<[u8]>, QQ.from_i64(c))
    };
    match *label {
        CayleyLabel::Pair(i, 8) => {
            for j in 1..=7u8 {
                let (m, c) = unit(j, if j == i { 0 } else { -1 });
                p.add_term(m, c);
            }
        }
        CayleyLabel::Pair(i, j) => {
            let (m, c) = unit(i, 1);
            p.add_term(m, c);
            let (m, c) = unit(j, -1);
            p.add_term(m, c);
        }
        CayleyLabel::Triple(i, j, k) => {
            for t in [i, j, k] {
                let (m, c) = unit(t, 1);
                p.add_term(m, c);
            }
        }
    }
    p
}

/// The canonical line form of a nonzero vector v ∈ (𝔽₂)⁶.
pub fn line_form(v: u8) -> Result<P, UktError> {
    let label = cayley().from_vector[v as usize]
        .ok_or_else(|| UktError::Input(format!("{v} is not a nonzero 6-bit vector")))?;
    Ok(label_form(&label))
}

/// Canonical product of the seven line forms of a Lagrangian.
fn canonical_product(l: &IsotropicSubspace) -> Result<P, UktError> {
    let mut p = SparsePoly::constant(QQ, d_vars(), QQ.one());
    for &v in &l.vectors {
        p = p.mul(&line_form(v)?);
    }
    Ok(p)
}

/// Written Göpel label: a Fano label f_{p₁…p₇} or a Pascal label
/// g_{q p₁…p₆}, each a permutation of {1, …, 7}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GopelLabel {
    Fano([u8; 7]),
    Pascal(u8, [u8; 6]),
}

impl GopelLabel {
    pub fn parse(s: &str) -> Result<GopelLabel, UktError> {
        let bad = || UktError::Parse(format!("bad Göpel label `{s}`"));
        let mut chars = s.chars();
        let kind = chars.next().ok_or_else(bad)?;
        let digits: Vec<u8> = chars
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad))
            .collect::<Result<_, _>>()?;
        let mut sorted = digits.clone();
        sorted.sort_unstable();
        if sorted != [1, 2, 3, 4, 5, 6, 7] {
            return Err(bad());
        }
        match kind {
            'f' => Ok(GopelLabel::Fano(digits.try_into().unwrap())),
            'g' => Ok(GopelLabel::Pascal(
                digits[0],
                digits[1..].to_vec().try_into().unwrap(),
            )),
            _ => Err(bad()),
        }
    }

    /// The seven Cayley labels of the configuration, with pair factors in
    /// the written order (first, second) — this carries the label's sign.
    pub fn factors(&self) -> Vec<CayleyLabel> {
        match *self {
            GopelLabel::Fano(p) => (0..7)
                .map(|i| {
                    let mut t = [p[i], p[(i + 1) % 7], p[(i + 3) % 7]];
                    t.sort_unstable();
                    CayleyLabel::Triple(t[0], t[1], t[2])
                })
                .collect(),
            GopelLabel::Pascal(q, ps) => {
                let mut out = vec![CayleyLabel::Pair(q, 8)];
                for k in 0..3 {
                    let (a, b) = (ps[2 * k], ps[2 * k + 1]);
                    out.push(CayleyLabel::Pair(a, b)); // written order, signed
                    let mut t = [q, a, b];
                    t.sort_unstable();
                    out.push(CayleyLabel::Triple(t[0], t[1], t[2]));
                }
                out
            }
        }
    }

    /// The seven (𝔽₂)⁶ vectors of the configuration.
    pub fn vectors(&self) -> Vec<u8> {
        let c = cayley();
        let mut vs: Vec<u8> = self
            .factors()
            .iter()
            .map(|lab| {
                let canon = match *lab {
                    CayleyLabel::Pair(a, b) if a > b => CayleyLabel::Pair(b, a),
                    other => other,
                };
                c.to_vector[&canon]
            })
            .collect();
        vs.sort_unstable();
        vs
    }

    /// The product of the written factors (with the label's sign).
    pub fn product(&self) -> P {
        let mut p = SparsePoly::constant(QQ, d_vars(), QQ.one());
        for lab in self.factors() {
            let f = match lab {
                CayleyLabel::Pair(a, b) if a != 8 && b != 8 && a > b => {
                    label_form(&CayleyLabel::Pair(b, a)).neg()
                }
                other => label_form(&other),
            };
            p = p.mul(&f);
        }
        p
    }
}

/// Precomputed Göpel data: products, index maps, and Weyl permutations.
pub struct GopelData {
    /// Canonical products, parallel to [`lagrangians()`].
    pub products: Vec<P>,
    /// Lagrangian index by sorted vector list.
    pub lag_index: HashMap<Vec<u8>, usize>,
    /// Permutations of the 63 lines (index v−1) induced by μ and ν.
    pub line_mu: Perm,
    pub line_nu: Perm,
    /// Permutations of the 135 Lagrangians induced by μ and ν.
    pub lag_mu: Perm,
    pub lag_nu: Perm,
}

/// The c-system hyperplane form of each line v = 1, …, 63 (index v−1):
/// the d-form transported through the substitution c = C·d.
fn line_c_forms() -> Result<Vec<LinearForm>, UktError> {
    let c = c_in_terms_of_d();
    // Cᵀ·w_c = w_d, so solve with the transposed substitution matrix.
    let ct: Vec<Vec<BigRational>> = (0..7)
        .map(|i| (0..7).map(|j| BigRational::from_integer(c[j][i].into())).collect())
        .collect();
    let mut out = Vec::with_capacity(63);
    for v in 1..64u8 {
        let form = line_form(v)?;
        let mut w_d = vec![BigRational::zero(); 7];
        for (m, coeff) in form.terms() {
            let i = m.iter().position(|&e| e == 1).unwrap();
            w_d[i] = coeff.clone();
        }
        let w_c = solve_exact(&ct, &w_d)
            .ok_or_else(|| UktError::Consistency("substitution matrix is singular".into()))?;
        out.push(LinearForm::new(&w_c, System::C)?);
    }
    Ok(out)
}

fn line_permutation(g: &[Vec<BigRational>], forms: &[LinearForm]) -> Result<Perm, UktError> {
    let index: HashMap<&LinearForm, usize> =
        forms.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut map = Vec::with_capacity(63);
    for f in forms {
        let image = LinearForm::new(&mat_vec(g, &f.rational_coeffs()), System::C)?;
        let idx = *index
            .get(&image)
            .ok_or_else(|| UktError::Consistency("line image not in the arrangement".into()))?;
        map.push(idx);
    }
    Ok(Perm::from_map(map))
}

fn lagrangian_permutation(
    line_perm: &Perm,
    lag_index: &HashMap<Vec<u8>, usize>,
) -> Result<Perm, UktError> {
    let mut map = Vec::with_capacity(135);
    for l in lagrangians() {
        let mut image: Vec<u8> = l
            .vectors
            .iter()
            .map(|&v| (line_perm.apply((v - 1) as usize) + 1) as u8)
            .collect();
        image.sort_unstable();
        let idx = *lag_index.get(&image).ok_or_else(|| {
            UktError::Consistency("Lagrangian image is not a Lagrangian".into())
        })?;
        map.push(idx);
    }
    Ok(Perm::from_map(map))
}

fn build_gopel_data() -> Result<GopelData, UktError> {
    let lags = lagrangians();
    let products: Vec<P> = lags
        .iter()
        .map(canonical_product)
        .collect::<Result<_, _>>()?;
    let lag_index: HashMap<Vec<u8>, usize> = lags
        .iter()
        .enumerate()
        .map(|(i, l)| (l.vectors.clone(), i))
        .collect();
    let c_forms = line_c_forms()?;
    let line_mu = line_permutation(&mu(), &c_forms)?;
    let line_nu = line_permutation(&nu(), &c_forms)?;
    let lag_mu = lagrangian_permutation(&line_mu, &lag_index)?;
    let lag_nu = lagrangian_permutation(&line_nu, &lag_index)?;
    Ok(GopelData {
        products,
        lag_index,
        line_mu,
        line_nu,
        lag_mu,
        lag_nu,
    })
}

pub fn gopel_data() -> &'static GopelData {
    static CACHE: OnceLock<GopelData> = OnceLock::new();
    CACHE.get_or_init(|| build_gopel_data().expect("Göpel construction is consistent"))
}

/// Lagrangian index of a written label.
pub fn label_index(label: &GopelLabel) -> Result<usize, UktError> {
    gopel_data()
        .lag_index
        .get(&label.vectors())
        .copied()
        .ok_or_else(|| UktError::Consistency("label does not span a Lagrangian".into()))
}

/// The 63×135 incidence matrix: rows = lines (v = 1..63), columns =
/// Lagrangians; entry 1 when the line lies in the Lagrangian.
pub fn incidence_matrix() -> Vec<Vec<u8>> {
    let lags = lagrangians();
    (1..64u8)
        .map(|v| lags.iter().map(|l| u8::from(l.contains(v))).collect())
        .collect()
}

/// Rank of the incidence matrix over ℚ and over 𝔽₂.
pub fn incidence_rank() -> (usize, usize) {
    let a = incidence_matrix();
    let rows_q: Vec<Vec<BigRational>> = a
        .iter()
        .map(|r| r.iter().map(|&e| BigRational::from_integer(e.into())).collect())
        .collect();
    let rank_q = rank_rational(rows_q);
    // 𝔽₂ rank with 135-bit rows packed into u64 words
    let mut rows2: Vec<[u64; 3]> = a
        .iter()
        .map(|r| {
            let mut w = [0u64; 3];
            for (j, &e) in r.iter().enumerate() {
                if e == 1 {
                    w[j / 64] |= 1 << (j % 64);
                }
            }
            w
        })
        .collect();
    let mut rank2 = 0usize;
    for col in 0..135 {
        let (word, bit) = (col / 64, 1u64 << (col % 64));
        let Some(pi) = (rank2..rows2.len()).find(|&i| rows2[i][word] & bit != 0) else {
            continue;
        };
        rows2.swap(rank2, pi);
        let pivot = rows2[rank2];
        for (i, row) in rows2.iter_mut().enumerate() {
            if i != rank2 && row[word] & bit != 0 {
                for k in 0..3 {
                    row[k] ^= pivot[k];
                }
            }
        }
        rank2 += 1;
    }
    (rank_q, rank2)
}

/// A linear trinomial: the three Lagrangians through one isotropic plane
/// and signs with Σ signs[i]·product[lags[i]] = 0 identically (the first
/// sign is normalized to +1).
#[derive(Clone, Debug)]
pub struct Trinomial {
    pub lags: [usize; 3],
    pub signs: [i64; 3],
}

/// Compute and symbolically verify all 315 trinomials.
pub fn trinomials() -> Result<Vec<Trinomial>, UktError> {
    let data = gopel_data();
    let lags = lagrangians();
    // exact product values at a generic rational point, to pre-select signs
    let pt: Vec<BigRational> = [3i64, 5, 7, 11, 13, 17, 19]
        .iter()
        .map(|&n| BigRational::from_integer(n.into()))
        .collect();
    let values: Vec<BigRational> = data
        .products
        .iter()
        .map(|p| p.eval(&pt))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::with_capacity(315);
    for plane in isotropic_subspaces(2) {
        let triple: Vec<usize> = lags
            .iter()
            .enumerate()
            .filter(|(_, l)| plane.vectors.iter().all(|&v| l.contains(v)))
            .map(|(i, _)| i)
            .collect();
        let [a, b, c]: [usize; 3] = triple
            .try_into()
            .map_err(|_| UktError::Consistency("plane not in exactly 3 Lagrangians".into()))?;
        let mut found = None;
        for s2 in [1i64, -1] {
            for s3 in [1i64, -1] {
                let v = &values[a]
                    + BigRational::from_integer(s2.into()) * &values[b]
                    + BigRational::from_integer(s3.into()) * &values[c];
                if !v.is_zero() {
                    continue;
                }
                let sum = data.products[a]
                    .add(&data.products[b].scale(&QQ.from_i64(s2)))
                    .add(&data.products[c].scale(&QQ.from_i64(s3)));
                if sum.is_zero() {
                    if found.is_some() {
                        return Err(UktError::Consistency(
                            "two sign patterns verify the same trinomial".into(),
                        ));
                    }
                    found = Some((s2, s3));
                }
            }
        }
        let (s2, s3) = found.ok_or_else(|| {
            UktError::Consistency("no sign pattern makes the trinomial vanish".into())
        })?;
        out.push(Trinomial {
            lags: [a, b, c],
            signs: [1, s2, s3],
        });
    }
    Ok(out)
}

/// Rank over ℤ/p of the 315×135 trinomial coefficient matrix.
pub fn trinomial_rank(trins: &[Trinomial], p: u64) -> usize {
    let mut m = FpMatrix::new(p, 135);
    for t in trins {
        let mut row = vec![0u64; 135];
        for (lag, s) in t.lags.iter().zip(t.signs.iter()) {
            row[*lag] = if *s >= 0 { *s as u64 } else { p - (-*s) as u64 };
        }
        m.push_row(row);
    }
    m.rank()
}

/// A binomial relation, stored canonically as an unordered pair of sorted
/// Lagrangian index multisets.
pub type Binomial = (Vec<usize>, Vec<usize>);

pub fn canon_binomial(mut a: Vec<usize>, mut b: Vec<usize>) -> Binomial {
    a.sort_unstable();
    b.sort_unstable();
    if b < a {
        std::mem::swap(&mut a, &mut b);
    }
    (a, b)
}

/// The 𝒜-degree of a product of Göpel coordinates: the line-incidence
/// multiset (63-vector of multiplicities).
pub fn a_degree(lag_ids: &[usize]) -> [u32; 63] {
    let lags = lagrangians();
    let mut deg = [0u32; 63];
    for &i in lag_ids {
        for &v in &lags[i].vectors {
            deg[(v - 1) as usize] += 1;
        }
    }
    deg
}

/// Whether a binomial is 𝒜-homogeneous (both monomials map to the same
/// monomial in the line variables).
pub fn binomial_balanced(b: &Binomial) -> bool {
    a_degree(&b.0) == a_degree(&b.1)
}

/// Orbit size of a binomial under the Weyl permutations of Lagrangians.
pub fn binomial_orbit_size(seed: &Binomial) -> usize {
    let data = gopel_data();
    let gens = [&data.lag_mu, &data.lag_nu];
    let apply = |b: &Binomial, g: &Perm| {
        canon_binomial(
            b.0.iter().map(|&i| g.apply(i)).collect(),
            b.1.iter().map(|&i| g.apply(i)).collect(),
        )
    };
    let mut seen = std::collections::HashSet::new();
    seen.insert(seed.clone());
    let mut frontier = vec![seed.clone()];
    while let Some(b) = frontier.pop() {
        for g in gens {
            let im = apply(&b, g);
            if seen.insert(im.clone()) {
                frontier.push(im);
            }
        }
    }
    seen.len()
}

/// A printed binomial: two lists of written labels whose signed products
/// agree identically.
pub struct LabeledBinomial {
    pub lhs: Vec<GopelLabel>,
    pub rhs: Vec<GopelLabel>,
}

impl LabeledBinomial {
    pub fn parse(lhs: &[&str], rhs: &[&str]) -> Result<LabeledBinomial, UktError> {
        Ok(LabeledBinomial {
            lhs: lhs.iter().map(|s| GopelLabel::parse(s)).collect::<Result<_, _>>()?,
            rhs: rhs.iter().map(|s| GopelLabel::parse(s)).collect::<Result<_, _>>()?,
        })
    }

    pub fn index_binomial(&self) -> Result<Binomial, UktError> {
        Ok(canon_binomial(
            self.lhs.iter().map(label_index).collect::<Result<_, _>>()?,
            self.rhs.iter().map(label_index).collect::<Result<_, _>>()?,
        ))
    }

    /// Exact identity check: both sides are signed monomials in the 63
    /// line forms, so 𝒜-balance plus equality at one generic point (where
    /// the value is nonzero) proves the polynomial identity.
    pub fn verify(&self) -> Result<(), UktError> {
        let b = self.index_binomial()?;
        if !binomial_balanced(&b) {
            return Err(UktError::Consistency("binomial is not 𝒜-homogeneous".into()));
        }
        let pt: Vec<BigRational> = [3i64, 5, 7, 11, 13, 17, 19]
            .iter()
            .map(|&n| BigRational::from_integer(n.into()))
            .collect();
        let side = |labels: &[GopelLabel]| -> Result<BigRational, UktError> {
            let mut acc = BigRational::from_integer(1.into());
            for lab in labels {
                acc *= lab.product().eval(&pt)?;
            }
            Ok(acc)
        };
        let (l, r) = (side(&self.lhs)?, side(&self.rhs)?);
        if l.is_zero() || l != r {
            return Err(UktError::Consistency(
                "binomial sides disagree at the test point".into(),
            ));
        }
        Ok(())
    }
}

/// The printed binomial representatives: the cubic orbit (630), the two
/// quartic orbits (945 and 11340), and the indispensable degree-5 and
/// degree-6 binomials.
pub fn binomial_representatives() -> Result<Vec<(&'static str, LabeledBinomial)>, UktError> {
    Ok(vec![
        (
            "cubic-630",
            LabeledBinomial::parse(
                &["g5132467", "g6123457", "f1235746"],
                &["f1236745", "g5123467", "g6132457"],
            )?,
        ),
        (
            "quartic-945",
            LabeledBinomial::parse(
                &["f1234567", "f1234675", "g1243657", "g2143756"],
                &["f1234576", "f1234765", "g1243756", "g2143657"],
            )?,
        ),
        (
            "quartic-11340",
            LabeledBinomial::parse(
                &["f1234576", "f1234765", "f1235647", "f1236457"],
                &["f1234675", "f1234756", "f1235467", "f1236547"],
            )?,
        ),
        (
            "quintic-indispensable",
            LabeledBinomial::parse(
                &["f1234576", "g2163745", "g4132657", "g6142537", "g7132456"],
                &["f1236574", "g2143756", "g4162537", "g6132457", "g7132645"],
            )?,
        ),
        (
            "sextic-indispensable",
            LabeledBinomial::parse(
                &["f1234576", "f1243657", "g2153467", "g3152746", "g4162537", "g6123547"],
                &["f1236475", "f1243576", "g2153746", "g3162547", "g4123567", "g6152734"],
            )?,
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn printed_products() {
        // f₁₂₃₄₅₆₇ is the product of the seven Fano triple forms
        let f = GopelLabel::parse("f1234567").unwrap();
        let mut want = SparsePoly::constant(QQ, d_vars(), QQ.one());
        for t in [[1, 2, 4], [1, 3, 7], [1, 5, 6], [2, 3, 5], [2, 6, 7], [3, 4, 6], [4, 5, 7]] {
            want = want.mul(&label_form(&CayleyLabel::Triple(t[0], t[1], t[2])));
        }
        assert!(f.product().sub(&want).is_zero());
        // g₇₁₂₃₄₅₆ = (d₁+d₂+d₇)(d₃+d₄+d₇)(d₅+d₆+d₇)(d₁−d₂)(d₃−d₄)(d₅−d₆)(−d₁−…−d₆)
        let g = GopelLabel::parse("g7123456").unwrap();
        let mut want = label_form(&CayleyLabel::Pair(7, 8));
        for t in [[1u8, 2, 7], [3, 4, 7], [5, 6, 7]] {
            want = want.mul(&label_form(&CayleyLabel::Triple(t[0], t[1], t[2])));
        }
        for pr in [[1u8, 2], [3, 4], [5, 6]] {
            want = want.mul(&label_form(&CayleyLabel::Pair(pr[0], pr[1])));
        }
        assert!(g.product().sub(&want).is_zero());
        // relabelings: equal or sign-flipped as printed
        let same = GopelLabel::parse("f2345671").unwrap();
        assert!(f.product().sub(&same.product()).is_zero());
        let same_g = GopelLabel::parse("g7345612").unwrap();
        assert!(g.product().sub(&same_g.product()).is_zero());
        let flipped = GopelLabel::parse("g7213456").unwrap();
        assert!(g.product().add(&flipped.product()).is_zero());
    }

    #[test]
    fn labels_cover_all_lagrangians() {
        // the canonical product of a label's Lagrangian is ± the written one
        let data = gopel_data();
        let f = GopelLabel::parse("f1234567").unwrap();
        let idx = label_index(&f).unwrap();
        assert!(data.products[idx].sub(&f.product()).is_zero());
        let g = GopelLabel::parse("g7123456").unwrap();
        let gi = label_index(&g).unwrap();
        let canon = &data.products[gi];
        let prod = g.product();
        assert!(canon.sub(&prod).is_zero() || canon.add(&prod).is_zero());
        // every product is homogeneous of degree 7 with squarefree support
        for p in &data.products {
            assert!(p.is_homogeneous_of_degree(7));
        }
    }

    #[test]
    fn incidence_census_and_rank() {
        let a = incidence_matrix();
        assert_eq!(a.len(), 63);
        for row in &a {
            assert_eq!(row.iter().map(|&e| e as usize).sum::<usize>(), 15);
        }
        for j in 0..135 {
            let col: usize = a.iter().map(|r| r[j] as usize).sum();
            assert_eq!(col, 7);
        }
        assert_eq!(incidence_rank(), (36, 36));
    }

    #[test]
    fn weyl_permutations_are_linear_on_lines() {
        let data = gopel_data();
        for perm in [&data.line_mu, &data.line_nu] {
            let img = |v: u8| (perm.apply((v - 1) as usize) + 1) as u8;
            for v in 1..64u8 {
                for w in 1..64u8 {
                    if v != w && (v ^ w) != 0 {
                        assert_eq!(img(v) ^ img(w), img(v ^ w));
                    }
                }
            }
        }
        assert!(!data.lag_mu.is_identity());
        assert!(!data.lag_nu.is_identity());
    }

    #[test]
    fn trinomials_vanish_and_span_120() {
        let trins = trinomials().unwrap();
        assert_eq!(trins.len(), 315);
        assert_eq!(trinomial_rank(&trins, 1000033), 120);
        // printed examples: membership with matching signs up to the
        // canonical-product normalization (each product is ± the labeled one)
        let ex = [
            ["g3124567", "g3124657", "g3124756"],
            ["g1234567", "f1243765", "f1243675"],
            ["g5123467", "g6123457", "g7123456"],
        ];
        for labels in ex {
            let idx: Vec<usize> = labels
                .iter()
                .map(|s| label_index(&GopelLabel::parse(s).unwrap()).unwrap())
                .collect();
            let mut sorted = idx.clone();
            sorted.sort_unstable();
            assert!(
                trins.iter().any(|t| {
                    let mut l = t.lags.to_vec();
                    l.sort_unstable();
                    l == sorted
                }),
                "{labels:?}"
            );
            // the printed alternating-sign combination vanishes identically
            let sum = GopelLabel::parse(labels[0])
                .unwrap()
                .product()
                .sub(&GopelLabel::parse(labels[1]).unwrap().product())
                .add(&GopelLabel::parse(labels[2]).unwrap().product());
            assert!(sum.is_zero(), "{labels:?}");
        }
    }

    #[test]
    fn binomials_balanced_verified_and_orbit_sizes() {
        let reps = binomial_representatives().unwrap();
        for (name, rep) in &reps {
            rep.verify().unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        let orbit = |name: &str| {
            let rep = reps.iter().find(|(n, _)| *n == name).unwrap();
            binomial_orbit_size(&rep.1.index_binomial().unwrap())
        };
        assert_eq!(orbit("cubic-630"), 630);
        assert_eq!(orbit("quartic-945"), 945);
        assert_eq!(orbit("quartic-11340"), 11340);
    }

    #[test]
    fn plane_class_representatives_lie_in_three_lagrangians() {
        // the three printed plane classes, as Cayley label sets
        let planes = [["12", "123", "38"], ["123", "145", "167"], ["12", "34", "567"]];
        let c = cayley();
        let lags = lagrangians();
        for p in planes {
            let vs: Vec<u8> = p
                .iter()
                .map(|s| c.to_vector[&CayleyLabel::parse(s).unwrap()])
                .collect();
            // the three vectors close under addition (a plane minus zero)
            assert_eq!(vs[0] ^ vs[1], vs[2]);
            let n = lags
                .iter()
                .filter(|l| vs.iter().all(|&v| l.contains(v)))
                .count();
            assert_eq!(n, 3, "{p:?}");
        }
        let _ = q(0);
    }
}
