//! The symplectic vector space (𝔽₂)⁶: pairing, isotropic subspaces,
//! Cayley's bijection with the positive roots of E₇, Heisenberg operators on
//! the eight Schrödinger coordinates, and the 15 Heisenberg-invariant
//! quartic supports.
//!
//! Vectors are packed into a `u8`: bit `j` (j = 0..5) holds coordinate
//! `x_{j+1}`. A half-period `delta` splits as `(b | a)`: the first three
//! coordinates give the sign character `b`, the last three the index
//! translation `a`, so the projective involution acts by
//! `x_σ ↦ (−1)^{b·σ} x_{σ+a}`.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::UktError;
use crate::ring::Gauss;

/// Symplectic pairing x₁y₄+x₂y₅+x₃y₆+x₄y₁+x₅y₂+x₆y₃ mod 2.
pub fn pairing(x: u8, y: u8) -> u8 {
    let a = (x & 0b111) & (y >> 3);
    let b = (x >> 3) & (y & 0b111);
    ((a.count_ones() + b.count_ones()) % 2) as u8
}

/// All 63 nonzero vectors.
pub fn nonzero_vectors() -> impl Iterator<Item = u8> {
    1u8..64
}

/// An isotropic subspace, stored as its full sorted list of nonzero vectors
/// (a canonical representation: equality is structural).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsotropicSubspace {
    pub vectors: Vec<u8>,
}

impl IsotropicSubspace {
    pub fn dim(&self) -> u32 {
        (self.vectors.len() + 1).trailing_zeros()
    }

    pub fn contains(&self, v: u8) -> bool {
        self.vectors.binary_search(&v).is_ok()
    }
}

fn span(gens: &[u8]) -> Vec<u8> {
    let mut set = vec![0u8];
    for &g in gens {
        let cur = set.clone();
        for v in cur {
            let w = v ^ g;
            if !set.contains(&w) {
                set.push(w);
            }
        }
    }
    let mut nz: Vec<u8> = set.into_iter().filter(|&v| v != 0).collect();
    nz.sort_unstable();
    nz
}

/// Enumerate all isotropic subspaces of the given dimension (1, 2 or 3).
pub fn isotropic_subspaces(dim: u32) -> Vec<IsotropicSubspace> {
    assert!((1..=3).contains(&dim));
    let mut out: Vec<IsotropicSubspace> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let extend = |base: &[u8], out: &mut Vec<IsotropicSubspace>,
                      seen: &mut std::collections::HashSet<Vec<u8>>| {
        for v in nonzero_vectors() {
            if base.contains(&v) {
                continue;
            }
            if base.iter().any(|&w| pairing(v, w) == 1) {
                continue;
            }
            let mut gens = base.to_vec();
            gens.push(v);
            let vectors = span(&gens);
            // doubling the subspace: 2·(old nonzero count + 1) − 1
            if vectors.len() != 2 * (base.len() + 1) - 1 {
                continue; // v was already in the span
            }
            if seen.insert(vectors.clone()) {
                out.push(IsotropicSubspace { vectors });
            }
        }
    };
    match dim {
        1 => {
            for v in nonzero_vectors() {
                out.push(IsotropicSubspace { vectors: vec![v] });
            }
        }
        2 => {
            extend(&[], &mut out, &mut seen);
            let lines = std::mem::take(&mut out);
            // restart: build from each line
            for line in lines {
                extend(&line.vectors, &mut out, &mut seen);
            }
        }
        3 => {
            for plane in isotropic_subspaces(2) {
                extend(&plane.vectors, &mut out, &mut seen);
            }
        }
        _ => unreachable!(),
    }
    out
}

/// The 135 Lagrangians (maximal isotropic subspaces).
pub fn lagrangians() -> &'static [IsotropicSubspace] {
    static CACHE: OnceLock<Vec<IsotropicSubspace>> = OnceLock::new();
    CACHE.get_or_init(|| isotropic_subspaces(3))
}

/// A Cayley label: a pair in {1..8} or a triple in {1..7}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CayleyLabel {
    Pair(u8, u8),
    Triple(u8, u8, u8),
}

impl CayleyLabel {
    pub fn parse(s: &str) -> Result<CayleyLabel, UktError> {
        let ds: Vec<u8> = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| UktError::Parse(format!("bad Cayley label `{s}`")))
            })
            .collect::<Result<_, _>>()?;
        let mut sorted = ds.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != ds.len() || sorted.iter().any(|&d| d == 0 || d > 8) {
            return Err(UktError::Parse(format!("bad Cayley label `{s}`")));
        }
        match sorted.as_slice() {
            [i, j] => Ok(CayleyLabel::Pair(*i, *j)),
            [i, j, k] if *k <= 7 => Ok(CayleyLabel::Triple(*i, *j, *k)),
            _ => Err(UktError::Parse(format!("bad Cayley label `{s}`"))),
        }
    }

    /// Digits of the label with 8 erased: size 1, 2 or 3 subset of {1..7}.
    pub fn support7(&self) -> Vec<u8> {
        match *self {
            CayleyLabel::Pair(i, 8) => vec![i],
            CayleyLabel::Pair(i, j) => vec![i, j],
            CayleyLabel::Triple(i, j, k) => vec![i, j, k],
        }
    }

    /// The positive root in ℝ⁸, scaled by 2 to stay integral.
    pub fn root2(&self) -> [i64; 8] {
        let mut r = [0i64; 8];
        match *self {
            CayleyLabel::Pair(i, 8) => {
                r[7] = 2;
                r[(i - 1) as usize] = -2;
            }
            CayleyLabel::Pair(i, j) => {
                r[(i - 1) as usize] = 2;
                r[(j - 1) as usize] = -2;
            }
            CayleyLabel::Triple(i, j, k) => {
                r[7] = 1;
                for t in 0..7 {
                    r[t] = -1;
                }
                for d in [i, j, k] {
                    r[(d - 1) as usize] = 1;
                }
            }
        }
        r
    }
}

impl fmt::Display for CayleyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CayleyLabel::Pair(i, j) => write!(f, "{i}{j}"),
            CayleyLabel::Triple(i, j, k) => write!(f, "{i}{j}{k}"),
        }
    }
}

/// Cayley's table: rows = first three coordinates, columns = last three,
/// both in the order 000,100,010,110,001,101,011,111.
const CAYLEY_ROWS: [[&str; 8]; 8] = [
    ["", "236", "345", "137", "467", "156", "124", "257"],
    ["237", "67", "136", "12", "157", "48", "256", "35"],
    ["245", "127", "23", "68", "134", "357", "15", "47"],
    ["126", "13", "78", "145", "356", "25", "46", "234"],
    ["567", "146", "125", "247", "45", "17", "38", "26"],
    ["147", "58", "246", "34", "16", "123", "27", "367"],
    ["135", "347", "14", "57", "28", "36", "167", "456"],
    ["346", "24", "56", "235", "37", "267", "457", "18"],
];

/// Both directions of the bijection label ↔ nonzero vector.
pub struct Cayley {
    pub to_vector: HashMap<CayleyLabel, u8>,
    pub from_vector: [Option<CayleyLabel>; 64],
}

pub fn cayley() -> &'static Cayley {
    static CACHE: OnceLock<Cayley> = OnceLock::new();
    CACHE.get_or_init(|| {
        // header order 000,100,010,110,001,101,011,111 as (x1,x2,x3) etc.
        let hdr: [u8; 8] = [0b000, 0b001, 0b010, 0b011, 0b100, 0b101, 0b110, 0b111];
        // hdr[i] packs the printed triple (t1,t2,t3) as bits t1=bit0,t2=bit1,t3=bit2
        let printed: [(u8, u8, u8); 8] = [
            (0, 0, 0),
            (1, 0, 0),
            (0, 1, 0),
            (1, 1, 0),
            (0, 0, 1),
            (1, 0, 1),
            (0, 1, 1),
            (1, 1, 1),
        ];
        let _ = hdr;
        let mut to_vector = HashMap::new();
        let mut from_vector = [None; 64];
        for (ri, row) in CAYLEY_ROWS.iter().enumerate() {
            for (ci, cell) in row.iter().enumerate() {
                if cell.is_empty() {
                    continue;
                }
                let (x1, x2, x3) = printed[ri];
                let (x4, x5, x6) = printed[ci];
                let v = x1 | (x2 << 1) | (x3 << 2) | (x4 << 3) | (x5 << 4) | (x6 << 5);
                let label = CayleyLabel::parse(cell).expect("table label");
                to_vector.insert(label, v);
                from_vector[v as usize] = Some(label);
            }
        }
        assert_eq!(to_vector.len(), 63);
        Cayley {
            to_vector,
            from_vector,
        }
    })
}

/// A signed coordinate permutation of the 8 Schrödinger coordinates:
/// `x_σ ↦ sign[σ] · x_{perm[σ]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPerm8 {
    pub perm: [usize; 8],
    pub sign: [i8; 8],
}

impl SignedPerm8 {
    pub fn compose(&self, then: &SignedPerm8) -> SignedPerm8 {
        // (then ∘ self): x_σ ↦ self.sign[σ]·x_{self.perm[σ]} ↦ …
        let mut perm = [0usize; 8];
        let mut sign = [0i8; 8];
        for s in 0..8 {
            perm[s] = then.perm[self.perm[s]];
            sign[s] = self.sign[s] * then.sign[self.perm[s]];
        }
        SignedPerm8 { perm, sign }
    }
}

/// The Heisenberg operator for a half-period `delta = (b | a)` (sign bits
/// first, translation bits last): `x_σ ↦ (−1)^{b·σ} x_{σ+a}`.
pub fn heisenberg_operator(delta: u8) -> SignedPerm8 {
    let b = (delta & 0b111) as usize;
    let a = ((delta >> 3) & 0b111) as usize;
    let mut perm = [0usize; 8];
    let mut sign = [0i8; 8];
    for s in 0..8 {
        perm[s] = s ^ a;
        sign[s] = if ((s & b).count_ones()) % 2 == 0 { 1 } else { -1 };
    }
    SignedPerm8 { perm, sign }
}

/// The six Heisenberg generators: three index shifts, three sign flips.
pub fn heisenberg_generators() -> Vec<SignedPerm8> {
    // translations by (1,0,0),(0,1,0),(0,0,1) and the matching sign flips;
    // σ is packed with σ₁ as the high bit (coordinate index i in x_{ijk}).
    let mut out = Vec::new();
    for bit in [4u8, 2, 1] {
        out.push(heisenberg_operator((bit as u8) << 3));
    }
    for bit in [4u8, 2, 1] {
        out.push(heisenberg_operator(bit));
    }
    out
}

/// Gaussian-rational basis vectors of the two 4-dimensional projective fixed
/// spaces (H⁺, H⁻) of the involution attached to a nonzero half-period.
///
/// Eigenvalues are ±1 when b·a = 0 and ±i otherwise; "H⁺" is the eigenspace
/// of +1 resp. +i (the ± labeling is immaterial downstream).
pub fn heisenberg_fixed_spaces(
    delta: u8,
) -> Result<(Vec<Vec<Gauss>>, Vec<Vec<Gauss>>), UktError> {
    if delta == 0 || delta > 63 {
        return Err(UktError::Input("delta must be a nonzero 6-bit vector".into()));
    }
    let b = (delta & 0b111) as usize;
    let a = ((delta >> 3) & 0b111) as usize;
    let zero = || Gauss::from_re(BigRational::zero());
    let one = || Gauss::from_re(BigRational::one());
    let i_unit = || Gauss {
        re: BigRational::zero(),
        im: BigRational::one(),
    };
    let gneg = |g: &Gauss| Gauss {
        re: -&g.re,
        im: -&g.im,
    };
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    if a == 0 {
        for s in 0..8usize {
            let mut v = vec![zero(); 8];
            v[s] = one();
            if (s & b).count_ones() % 2 == 0 {
                plus.push(v);
            } else {
                minus.push(v);
            }
        }
    } else {
        // λ² = (−1)^{b·a}
        let odd = (a & b).count_ones() % 2 == 1;
        let lambda_plus = if odd { i_unit() } else { one() };
        for s in 0..8usize {
            if s > (s ^ a) {
                continue; // one representative per {σ, σ+a} coset
            }
            let bsign = if (s & b).count_ones() % 2 == 0 { 1i64 } else { -1 };
            for (lam, bucket) in [
                (lambda_plus.clone(), &mut plus),
                (gneg(&lambda_plus), &mut minus),
            ] {
                let mut v = vec![zero(); 8];
                v[s] = one();
                // x_{σ+a} = λ·(−1)^{b·σ}
                let mut w = lam;
                if bsign < 0 {
                    w = gneg(&w);
                }
                v[s ^ a] = w;
                bucket.push(v);
            }
        }
    }
    debug_assert_eq!(plus.len(), 4);
    debug_assert_eq!(minus.len(), 4);
    Ok((plus, minus))
}

/// The 15 Heisenberg-invariant quartic supports in the 8 Schrödinger
/// coordinates, keyed "r", "s001", …, "t111". Each support is a list of
/// exponent vectors of length 8 (σ index = 4σ₁+2σ₂+σ₃).
pub fn invariant_quartics() -> Vec<(String, Vec<[u8; 8]>)> {
    let mut out = Vec::new();
    // r: the eight fourth powers
    let mut r = Vec::new();
    for s in 0..8usize {
        let mut m = [0u8; 8];
        m[s] = 4;
        r.push(m);
    }
    r.sort_unstable();
    out.push(("r".to_string(), r));
    let name = |pre: &str, v: usize| format!("{pre}{}{}{}", (v >> 2) & 1, (v >> 1) & 1, v & 1);
    // s_v: the four affine lines parallel to v, i.e. {σ, σ+v} squared
    for v in 1..8usize {
        let mut lines = Vec::new();
        for s in 0..8usize {
            if s < s ^ v {
                let mut m = [0u8; 8];
                m[s] = 2;
                m[s ^ v] = 2;
                lines.push(m);
            }
        }
        lines.sort_unstable();
        out.push((name("s", v), lines));
    }
    // t_v: the two affine planes perpendicular to v (dot product 0 resp. 1)
    for v in 1..8usize {
        let mut planes = Vec::new();
        for c in 0..2usize {
            let mut m = [0u8; 8];
            for s in 0..8usize {
                if (s & v).count_ones() as usize % 2 == c {
                    m[s] = 1;
                }
            }
            planes.push(m);
        }
        planes.sort_unstable();
        out.push((name("t", v), planes));
    }
    // canonical ordering: r, s001..s111, t001..t111
    out.sort_by(|(a, _), (b, _)| {
        let rank = |n: &str| match n.chars().next().unwrap() {
            'r' => 0,
            's' => 1,
            _ => 2,
        };
        (rank(a), a.clone()).cmp(&(rank(b), b.clone()))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_alternating_and_example() {
        for x in 0..64u8 {
            assert_eq!(pairing(x, x), 0);
        }
        // e1 = bit0, e4 = bit3
        assert_eq!(pairing(0b000001, 0b001000), 1);
        // (0,0,1,1,1,0)·(1,1,1,1,0,0) = x4y1 + x5y2 = 0; cross-checked by
        // the root orthogonality test below (247 ⊥ 24 in ℝ⁸).
        assert_eq!(pairing(0b011100, 0b001111), 0);
    }

    #[test]
    fn isotropic_counts() {
        assert_eq!(isotropic_subspaces(1).len(), 63);
        assert_eq!(isotropic_subspaces(2).len(), 315);
        assert_eq!(lagrangians().len(), 135);
    }

    #[test]
    fn planes_in_three_lagrangians() {
        let lags = lagrangians();
        for plane in isotropic_subspaces(2) {
            let n = lags
                .iter()
                .filter(|l| plane.vectors.iter().all(|&v| l.contains(v)))
                .count();
            assert_eq!(n, 3);
        }
    }

    #[test]
    fn cayley_examples() {
        let c = cayley();
        let v236 = c.to_vector[&CayleyLabel::parse("236").unwrap()];
        assert_eq!(v236, 0b001000); // (0,0,0,1,0,0)
        let v247 = c.to_vector[&CayleyLabel::parse("247").unwrap()];
        assert_eq!(v247, 0b011100); // (0,0,1,1,1,0)
        let v24 = c.to_vector[&CayleyLabel::parse("24").unwrap()];
        assert_eq!(v24, 0b001111); // (1,1,1,1,0,0)
    }

    #[test]
    fn cayley_orthogonality_all_pairs() {
        // perpendicular roots in ℝ⁸ ⟺ symplectic pairing 0: 1953 pairs
        let c = cayley();
        let labels: Vec<_> = c.to_vector.keys().copied().collect();
        let mut checked = 0;
        for i in 0..labels.len() {
            for j in (i + 1)..labels.len() {
                let (la, lb) = (labels[i], labels[j]);
                let dot: i64 = la
                    .root2()
                    .iter()
                    .zip(lb.root2().iter())
                    .map(|(x, y)| x * y)
                    .sum();
                let perp = dot == 0;
                let sympl = pairing(c.to_vector[&la], c.to_vector[&lb]) == 0;
                assert_eq!(perp, sympl, "{la} vs {lb}");
                checked += 1;
            }
        }
        assert_eq!(checked, 1953);
    }

    #[test]
    fn fano_pascal_census() {
        let c = cayley();
        let mut fano = 0;
        let mut pascal = 0;
        for l in lagrangians() {
            let all_triples = l
                .vectors
                .iter()
                .all(|&v| matches!(c.from_vector[v as usize].unwrap(), CayleyLabel::Triple(..)));
            if all_triples {
                fano += 1;
            } else {
                pascal += 1;
            }
        }
        assert_eq!(fano, 30);
        assert_eq!(pascal, 105);
    }

    #[test]
    fn heisenberg_involution_up_to_sign() {
        for delta in 1..64u8 {
            let u = heisenberg_operator(delta);
            let u2 = u.compose(&u);
            assert_eq!(u2.perm, [0, 1, 2, 3, 4, 5, 6, 7]);
            let s = u2.sign[0];
            assert!(u2.sign.iter().all(|&x| x == s));
        }
    }

    #[test]
    fn generators_commute_up_to_sign() {
        let gens = heisenberg_generators();
        for a in &gens {
            for b in &gens {
                let ab = a.compose(b);
                let ba = b.compose(a);
                assert_eq!(ab.perm, ba.perm);
                let ratio: Vec<i8> = ab
                    .sign
                    .iter()
                    .zip(ba.sign.iter())
                    .map(|(x, y)| x * y)
                    .collect();
                let r = ratio[0];
                assert!(ratio.iter().all(|&x| x == r));
            }
        }
    }

    #[test]
    fn fixed_space_examples() {
        // delta = (1,0,0|0,0,0): sign flip on σ₁ ⇒ coordinate spans
        let (plus, minus) = heisenberg_fixed_spaces(0b100).unwrap();
        assert_eq!(plus.len(), 4);
        assert_eq!(minus.len(), 4);
        for v in &plus {
            for s in 4..8 {
                assert!(v[s].re.is_zero() && v[s].im.is_zero());
            }
        }
        // delta = (0,0,0|1,0,0): translation ⇒ eigenvectors x_{0jk} ± x_{1jk}
        let (plus, _minus) = heisenberg_fixed_spaces(0b100 << 3).unwrap();
        for v in &plus {
            let support: Vec<usize> = (0..8).filter(|&s| !v[s].re.is_zero()).collect();
            assert_eq!(support.len(), 2);
            assert_eq!(support[0] ^ support[1], 4);
        }
    }

    #[test]
    fn quartic_supports_match_displayed_lists() {
        let q = invariant_quartics();
        assert_eq!(q.len(), 15);
        let get = |n: &str| &q.iter().find(|(k, _)| k == n).unwrap().1;
        // s001 = {x000²x001², x010²x011², x100²x101², x110²x111²}
        let s001 = get("s001");
        let mut expect = vec![
            [2, 2, 0, 0, 0, 0, 0, 0],
            [0, 0, 2, 2, 0, 0, 0, 0],
            [0, 0, 0, 0, 2, 2, 0, 0],
            [0, 0, 0, 0, 0, 0, 2, 2],
        ];
        expect.sort_unstable();
        assert_eq!(s001.clone(), expect);
        // t100 = {x000x001x010x011, x100x101x110x111}
        let t100 = get("t100");
        let mut expect = vec![[1, 1, 1, 1, 0, 0, 0, 0], [0, 0, 0, 0, 1, 1, 1, 1]];
        expect.sort_unstable();
        assert_eq!(t100.clone(), expect);
        // every support fixed (as a set) by all six Heisenberg generators
        for (_, support) in &q {
            for g in heisenberg_generators() {
                let mut mapped: Vec<[u8; 8]> = support
                    .iter()
                    .map(|m| {
                        let mut out = [0u8; 8];
                        for s in 0..8 {
                            out[g.perm[s]] = m[s];
                        }
                        out
                    })
                    .collect();
                mapped.sort_unstable();
                assert_eq!(&mapped, support);
            }
        }
    }
}
