//! 2-adic number theory: valuations, modular exponentiation, the
//! congruence lemmas that drive the monomial orbit counts, and the
//! cyclotomic criterion for when every field automorphism can act.
//!
//! The ambient facts: `5` generates the kernel of `ℤ/2^n^× → ℤ/4^×`, and
//! the valuation of `1 - 5^ℓ` is exactly `2 + v2(ℓ)` (lifting the
//! exponent). The lemmas pin down when `m(1 ± 5^ℓ)` can hit `2^(n-1)`
//! modulo `2^n`, which is precisely the sign bookkeeping done by the orbit
//! engine in [`crate::dualizing`].

use crate::{Error, Result};

/// 2-adic valuation of a nonzero integer.
///
/// ```
/// assert_eq!(ro2::two_adic::v2(-624).unwrap(), 4);
/// assert!(ro2::two_adic::v2(0).is_err());
/// ```
pub fn v2(x: i128) -> Result<u32> {
    if x == 0 {
        return Err(Error::ZeroValuation);
    }
    Ok(x.trailing_zeros())
}

/// `base^exp mod modulus` by square-and-multiply (`modulus >= 1`; the
/// intermediate products go through `u128`, so any `u64` modulus is safe).
pub fn mod_pow(base: u64, exp: u64, modulus: u64) -> u64 {
    assert!(modulus >= 1, "modulus must be positive");
    let m = modulus as u128;
    let mut acc: u128 = 1 % m;
    let mut b = base as u128 % m;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc as u64
}

/// `v2(1 - 5^ℓ)` for `ℓ >= 1`, computed without big integers: the
/// valuation is the largest `v` with `5^ℓ ≡ 1 mod 2^v`, found by raising
/// the modulus until the congruence first fails.
///
/// ```
/// // 1 - 5^4 = -624 = -2^4 · 39.
/// assert_eq!(ro2::two_adic::v2_one_minus_5_pow(4).unwrap(), 4);
/// ```
pub fn v2_one_minus_5_pow(ell: u64) -> Result<u32> {
    if ell == 0 {
        return Err(Error::ZeroValuation);
    }
    let mut v = 2; // 5^ℓ ≡ 1 mod 4 always
    while v < 120 && mod_pow(5, ell, 1u64 << (v + 1)) == 1 {
        v += 1;
    }
    Ok(v)
}

/// Which congruence lemma to evaluate; `B` and `C` carry their instance
/// parameters `(ℓ, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaPart {
    /// `5^(2^(n-3)) ≡ 1 + 2^(n-1) mod 2^n`, for `n >= 3`.
    A,
    /// `m(1 + 5^ℓ) ≡ 2^(n-1) mod 2^n`, for `n >= 3`, `0 <= ℓ < 2^(n-2)`,
    /// `0 <= m <= 2^(n-2)`; holds iff `m = 2^(n-2)`.
    B { ell: u64, mult: u64 },
    /// `m(1 - 5^ℓ) ≡ 2^(n-1) mod 2^n`, for `n >= 4`, `1 <= ℓ < 2^(n-2)`,
    /// `0 <= m <= 2^(n-v2(ℓ)-3)`; holds iff `m = 2^(n-v2(ℓ)-3)`.
    C { ell: u64, mult: u64 },
}

/// Evaluates one congruence instance exactly (the "iff" form of parts B
/// and C is a statement over the whole parameter range; tests sweep it).
///
/// ```
/// use ro2::two_adic::{lemma_check, LemmaPart};
/// assert!(lemma_check(5, LemmaPart::A).unwrap());
/// assert!(lemma_check(5, LemmaPart::C { ell: 2, mult: 2 }).unwrap());
/// assert!(!lemma_check(5, LemmaPart::C { ell: 2, mult: 1 }).unwrap());
/// ```
pub fn lemma_check(n: u32, part: LemmaPart) -> Result<bool> {
    let range_err = |what: String| Error::LemmaRange { what };
    if n > 62 {
        return Err(range_err(format!("n = {n} too large for exact u64 moduli")));
    }
    match part {
        LemmaPart::A => {
            if n < 3 {
                return Err(range_err(format!("part (a) needs n >= 3, got {n}")));
            }
            let modulus = 1u64 << n;
            Ok(mod_pow(5, 1 << (n - 3), modulus) == (1 + (1 << (n - 1))) % modulus)
        }
        LemmaPart::B { ell, mult } => {
            if n < 3 {
                return Err(range_err(format!("part (b) needs n >= 3, got {n}")));
            }
            if ell >= 1 << (n - 2) {
                return Err(range_err(format!("part (b) needs ell < 2^(n-2), got {ell}")));
            }
            if mult > 1 << (n - 2) {
                return Err(range_err(format!("part (b) needs m <= 2^(n-2), got {mult}")));
            }
            let modulus = 1u64 << n;
            let factor = (1 + mod_pow(5, ell, modulus)) % modulus;
            Ok((mult as u128 * factor as u128) % modulus as u128 == 1 << (n - 1))
        }
        LemmaPart::C { ell, mult } => {
            if n < 4 {
                return Err(range_err(format!("part (c) needs n >= 4, got {n}")));
            }
            if ell == 0 || ell >= 1 << (n - 2) {
                return Err(range_err(format!("part (c) needs 1 <= ell < 2^(n-2), got {ell}")));
            }
            let v = v2(ell as i128)?;
            if v + 3 > n || mult > 1 << (n - v - 3) {
                return Err(range_err(format!(
                    "part (c) needs m <= 2^(n-v2(ell)-3), got m = {mult}, ell = {ell}"
                )));
            }
            let modulus = 1u64 << n;
            let factor = (modulus + 1 - mod_pow(5, ell, modulus)) % modulus;
            Ok((mult as u128 * factor as u128) % modulus as u128 == 1 << (n - 1))
        }
    }
}

/// Exact arithmetic in `ℤ[x] / (x^(2^(n-1)) + 1)`, the ring of integers of
/// the `2^n`-th cyclotomic field with `x` the chosen primitive root of
/// unity. For `n = 1` the relation degenerates to `x = -1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicInt {
    n: u32,
    coeffs: Vec<i128>,
}

impl CyclotomicInt {
    /// Reduces an arbitrary polynomial in `x` by `x^(2^(n-1)) = -1`.
    pub fn new(n: u32, poly: &[i128]) -> Result<CyclotomicInt> {
        if !(1..=20).contains(&n) {
            return Err(Error::ExponentRange { n, min: 1, max: 20 });
        }
        let d = 1usize << (n - 1);
        let mut coeffs = vec![0i128; d];
        for (idx, &c) in poly.iter().enumerate() {
            if (idx / d).is_multiple_of(2) {
                coeffs[idx % d] += c;
            } else {
                coeffs[idx % d] -= c;
            }
        }
        Ok(CyclotomicInt { n, coeffs })
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn mul(&self, other: &CyclotomicInt) -> Result<CyclotomicInt> {
        if self.n != other.n {
            return Err(Error::GroupMismatch { expected: self.n, found: other.n });
        }
        let d = self.coeffs.len();
        let mut prod = vec![0i128; 2 * d];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        CyclotomicInt::new(self.n, &prod)
    }

    /// `Some((sign, j))` when the element is exactly `±x^j`.
    pub fn as_signed_power(&self) -> Option<(i8, u32)> {
        let mut hit = None;
        for (j, &c) in self.coeffs.iter().enumerate() {
            match c {
                0 => {}
                1 | -1 if hit.is_none() => hit = Some((c as i8, j as u32)),
                _ => return None,
            }
        }
        hit
    }
}

/// Whether `1 + ζ + ζ²` is a root of unity in `ℤ[ζ_{2^n}]`, decided
/// exactly: the only roots of unity there are `±ζ^j`, so reduce
/// `1 + x + x²` and compare. True exactly for `n ∈ {1, 2}`
/// (`n = 1`: `1 - 1 + 1 = 1`; `n = 2`: `1 + i - 1 = i`).
///
/// ```
/// assert!(ro2::two_adic::cyclotomic_obstruction(2).unwrap());
/// assert!(!ro2::two_adic::cyclotomic_obstruction(3).unwrap());
/// ```
pub fn cyclotomic_obstruction(n: u32) -> Result<bool> {
    Ok(CyclotomicInt::new(n, &[1, 1, 1])?.as_signed_power().is_some())
}

/// Degree over `𝔽_2` of the smallest field on which the *full*
/// automorphism group of the height-`h` formal group can act, when such a
/// field exists at all: `h` for `n = 1`, `2h` for `n = 2`, and none once
/// `n >= 3` (where `h = 2^(n-1) m`, `m` odd). The cutoff is exactly the
/// cyclotomic criterion above.
pub fn all_autos_field_degree(n: u32, m: u64) -> Result<Option<u128>> {
    if !(1..=62).contains(&n) {
        return Err(Error::ExponentRange { n, min: 1, max: 62 });
    }
    if m == 0 || m.is_multiple_of(2) {
        return Err(Error::OddPartRequired { m });
    }
    let h = (1u128 << (n - 1)) * m as u128;
    Ok(match n {
        1 => Some(h),
        2 => Some(2 * h),
        _ => None,
    })
}
