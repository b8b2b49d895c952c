//! Coefficient rings for exact polynomial arithmetic.
//!
//! Three rings are supported, matching the needs of the verification suites:
//!
//! * [`QQ`] — arbitrary-precision rationals, used for every symbolic identity;
//! * [`QI`] — Gaussian rationals ℚ(i), used where substitutions introduce a
//!   square root of −1 symbolically;
//! * [`Fp`] — the prime field ℤ/p with an optional adjoined `i_root`
//!   (requires p ≡ 1 mod 4), used for randomized rank and orbit work.
//!
//! Rings are small context objects (the prime lives in the ring, not in the
//! element), so elements stay cheap: an `Fp` element is a bare `u64`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::UktError;

/// A commutative ring with enough structure for sparse-polynomial work.
pub trait Ring: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for non-units.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// The adjoined square root of −1, when the ring has one.
    fn imag_unit(&self) -> Option<Self::Elem>;
    /// Parse a coefficient in the canonical text form (`7`, `-3`, `22/7`).
    fn parse_elem(&self, s: &str) -> Result<Self::Elem, UktError>;
    /// Canonical text form; must round-trip through [`Ring::parse_elem`].
    fn elem_string(&self, a: &Self::Elem) -> String;
}

/// The rationals ℚ with `BigRational` elements.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QQ;

fn parse_rational(s: &str) -> Result<BigRational, UktError> {
    let bad = || UktError::Parse(format!("invalid rational coefficient `{s}`"));
    if let Some((n, d)) = s.split_once('/') {
        let num: BigInt = n.parse().map_err(|_| bad())?;
        let den: BigInt = d.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(num, den))
    } else {
        let num: BigInt = s.parse().map_err(|_| bad())?;
        Ok(BigRational::from_integer(num))
    }
}

fn rational_string(a: &BigRational) -> String {
    if a.denom().is_one() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

impl Ring for QQ {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }
    fn imag_unit(&self) -> Option<BigRational> {
        None
    }
    fn parse_elem(&self, s: &str) -> Result<BigRational, UktError> {
        parse_rational(s)
    }
    fn elem_string(&self, a: &BigRational) -> String {
        rational_string(a)
    }
}

/// A Gaussian rational a + b·i.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gauss {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gauss {
    pub fn from_re(re: BigRational) -> Self {
        Gauss {
            re,
            im: BigRational::zero(),
        }
    }
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

/// The Gaussian rationals ℚ(i).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QI;

impl Ring for QI {
    type Elem = Gauss;

    fn zero(&self) -> Gauss {
        Gauss::from_re(BigRational::zero())
    }
    fn one(&self) -> Gauss {
        Gauss::from_re(BigRational::one())
    }
    fn is_zero(&self, a: &Gauss) -> bool {
        a.re.is_zero() && a.im.is_zero()
    }
    fn add(&self, a: &Gauss, b: &Gauss) -> Gauss {
        Gauss {
            re: &a.re + &b.re,
            im: &a.im + &b.im,
        }
    }
    fn sub(&self, a: &Gauss, b: &Gauss) -> Gauss {
        Gauss {
            re: &a.re - &b.re,
            im: &a.im - &b.im,
        }
    }
    fn neg(&self, a: &Gauss) -> Gauss {
        Gauss {
            re: -&a.re,
            im: -&a.im,
        }
    }
    fn mul(&self, a: &Gauss, b: &Gauss) -> Gauss {
        Gauss {
            re: &a.re * &b.re - &a.im * &b.im,
            im: &a.re * &b.im + &a.im * &b.re,
        }
    }
    fn inv(&self, a: &Gauss) -> Option<Gauss> {
        let n = &a.re * &a.re + &a.im * &a.im;
        if n.is_zero() {
            return None;
        }
        Some(Gauss {
            re: &a.re / &n,
            im: -&a.im / &n,
        })
    }
    fn from_i64(&self, n: i64) -> Gauss {
        Gauss::from_re(BigRational::from_integer(n.into()))
    }
    fn imag_unit(&self) -> Option<Gauss> {
        Some(Gauss {
            re: BigRational::zero(),
            im: BigRational::one(),
        })
    }
    fn parse_elem(&self, s: &str) -> Result<Gauss, UktError> {
        // Canonical form `re` or `re;im` (imaginary part after a semicolon).
        if let Some((re, im)) = s.split_once(';') {
            Ok(Gauss {
                re: parse_rational(re)?,
                im: parse_rational(im)?,
            })
        } else {
            Ok(Gauss::from_re(parse_rational(s)?))
        }
    }
    fn elem_string(&self, a: &Gauss) -> String {
        if a.im.is_zero() {
            rational_string(&a.re)
        } else {
            format!("{};{}", rational_string(&a.re), rational_string(&a.im))
        }
    }
}

/// Reduce a rational to ℤ/p; fails only if the denominator is divisible by p.
pub fn rational_mod_p(a: &BigRational, fp: &Fp) -> Result<u64, UktError> {
    let p = BigInt::from(fp.p);
    let num = ((a.numer() % &p) + &p) % &p;
    let den = ((a.denom() % &p) + &p) % &p;
    let num: u64 = num.try_into().expect("reduced residue fits u64");
    let den: u64 = den.try_into().expect("reduced residue fits u64");
    let inv = fp
        .inv(&den)
        .ok_or_else(|| UktError::Config(format!("denominator divisible by p={}", fp.p)))?;
    Ok(fp.mul(&num, &inv))
}

/// The prime field ℤ/p, optionally with a designated square root of −1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
    pub i_root: Option<u64>,
}

impl Fp {
    /// Build a field configuration, validating primality and `i_root² = −1`.
    pub fn new(p: u64, with_i: bool) -> Result<Fp, UktError> {
        if p < 2 || !is_prime_u64(p) {
            return Err(UktError::Config(format!("{p} is not prime")));
        }
        if p >= 1 << 31 {
            // keeps products comfortably inside u64 / f64-exact range
            return Err(UktError::Config(format!("prime {p} too large (need < 2^31)")));
        }
        let i_root = if with_i {
            if p % 4 != 1 {
                return Err(UktError::Config(format!(
                    "p = {p} ≢ 1 (mod 4): no square root of -1"
                )));
            }
            Some(sqrt_minus_one(p))
        } else {
            None
        };
        Ok(Fp { p, i_root })
    }

    pub fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        acc
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    // Deterministic Miller-Rabin for u64 with the standard witness set.
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = 1u128;
        let mut base = a as u128 % n as u128;
        let mut e = d;
        while e > 0 {
            if e & 1 == 1 {
                x = x * base % n as u128;
            }
            base = base * base % n as u128;
            e >>= 1;
        }
        if x == 1 || x == (n - 1) as u128 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n as u128;
            if x == (n - 1) as u128 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn sqrt_minus_one(p: u64) -> u64 {
    // For a quadratic non-residue a, a^((p-1)/4) squares to -1.
    let fp = Fp { p, i_root: None };
    for a in 2..p {
        if fp.pow(a, (p - 1) / 2) == p - 1 {
            let r = fp.pow(a, (p - 1) / 4);
            debug_assert_eq!(r * r % p, p - 1);
            return r;
        }
    }
    unreachable!("every prime ≡ 1 mod 4 has a non-residue")
}

impl Ring for Fp {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| self.pow(*a, self.p - 2))
    }
    fn from_i64(&self, n: i64) -> u64 {
        let r = n.rem_euclid(self.p as i64);
        r as u64
    }
    fn imag_unit(&self) -> Option<u64> {
        self.i_root
    }
    fn parse_elem(&self, s: &str) -> Result<u64, UktError> {
        let q = parse_rational(s)?;
        rational_mod_p(&q, self)
    }
    fn elem_string(&self, a: &u64) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_i_root_squares_to_minus_one() {
        let fp = Fp::new(1000033, true).unwrap();
        let i = fp.i_root.unwrap();
        assert_eq!(fp.mul(&i, &i), fp.p - 1);
    }

    #[test]
    fn fp_rejects_bad_modulus() {
        assert!(Fp::new(1000035, false).is_err()); // composite
        assert!(Fp::new(1000003, true).is_err()); // 3 mod 4
    }

    #[test]
    fn rational_reduction_mod_p() {
        let fp = Fp::new(101, false).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        let r = rational_mod_p(&half, &fp).unwrap();
        assert_eq!(fp.mul(&r, &2), 1);
    }

    #[test]
    fn gauss_arithmetic() {
        let qi = QI;
        let i = qi.imag_unit().unwrap();
        let m1 = qi.mul(&i, &i);
        assert_eq!(m1, qi.from_i64(-1));
        let inv = qi.inv(&i).unwrap();
        assert_eq!(qi.mul(&i, &inv), qi.one());
    }

    #[test]
    fn coeff_round_trip() {
        let qq = QQ;
        for s in ["7", "-3", "22/7", "-5/9"] {
            let e = qq.parse_elem(s).unwrap();
            assert_eq!(qq.elem_string(&e), s);
        }
    }
}
