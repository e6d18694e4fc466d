//! The dualizing representation of a height-`h` Lubin-Tate spectrum at
//! `p = 2`, for subgroups `C_{2^n}` of the units acting by conjugation
//! (`h = 2^(n-1)·m` with `m` odd).
//!
//! The relative dualizing module has a monomial basis indexed by the
//! Galois-twisted group ring of the automorphisms: basis vectors
//! `ζ^j · e_φ` with `φ = τ^i ψ^ℓ` ranging over the mod-2 Galois-type
//! factors and `j` over `0..2^(n-1)` (together with `m²` copies carried by
//! the odd part, which the action never mixes). Conjugation by the chosen
//! generator `ζ` sends `ζ^j e_φ` to `ζ^(j+c) e_φ` with step constant
//! `c = 1 + (-1)^(i+1) 5^ℓ`, and `ζ^(2^(n-1)) = -1` turns index
//! wrap-around into a sign. So the generator acts by a signed permutation;
//! each orbit of length `d` with return sign `ε` spans a cyclic module
//! `ℝ[x]/(x^d - ε)`, and summing their representation classes gives the
//! whole thing. The result collapses to the closed form
//! `2^(n-1) m² (ρ - Ind_{C_2} σ)`.

use std::collections::BTreeMap;

use crate::rep::{Group, VirtualRep};
use crate::two_adic::mod_pow;
use crate::{Error, Result};

/// Exponent cap for the orbit engine; the basis walk is `O(4^n)` and
/// larger groups have no use here.
pub const MAX_ORBIT_EXPONENT: u32 = 12;

/// Index of a monomial basis line: the Galois factor `τ^i ψ^ℓ` and the
/// root-of-unity power `j`, with `i ∈ {0,1}`, `0 <= ℓ < 2^(n-2)`,
/// `0 <= j < 2^(n-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaloisIndex {
    pub i: u8,
    pub ell: u64,
    pub j: u64,
}

/// One orbit class of the signed permutation: `count` orbits of length
/// `d` whose accumulated sign on first return is `eps`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitType {
    pub d: u64,
    pub eps: i32,
    pub count: u128,
}

fn check_n_m(n: u32, m: u64) -> Result<()> {
    if !(2..=MAX_ORBIT_EXPONENT).contains(&n) {
        return Err(Error::ExponentRange { n, min: 2, max: MAX_ORBIT_EXPONENT });
    }
    check_m(m)
}

fn check_m(m: u64) -> Result<()> {
    if m == 0 || m.is_multiple_of(2) {
        return Err(Error::OddPartRequired { m });
    }
    if m >= 1 << 31 {
        return Err(Error::Overflow { what: format!("odd part m = {m} (m² leaves u64)") });
    }
    Ok(())
}

/// The step constant `c ≡ 1 + (-1)^(i+1) 5^ℓ mod 2^n` of the basis line
/// `(i, ℓ)`: conjugation by the generator sends `ζ^j e_φ ↦ ζ^(j+c) e_φ`.
pub fn step_constant(n: u32, i: u8, ell: u64) -> Result<u64> {
    if !(2..=62).contains(&n) {
        return Err(Error::ExponentRange { n, min: 2, max: 62 });
    }
    if i > 1 {
        return Err(Error::LemmaRange { what: format!("Galois index i = {i}, need 0 or 1") });
    }
    if ell >= 1 << (n - 2) {
        return Err(Error::LemmaRange { what: format!("Galois index ell = {ell} >= 2^(n-2)") });
    }
    let modulus = 1u64 << n;
    let five = mod_pow(5, ell, modulus);
    Ok(if i == 1 { (1 + five) % modulus } else { (modulus + 1 - five) % modulus })
}

/// Decomposes the conjugation action into signed-permutation orbits by
/// walking every basis line `(i, ℓ)` under `j ↦ j + c`, reducing exponents
/// mod `2^n` with `ζ^(2^(n-1)) = -1` as a sign. Orbit counts carry the
/// `m²` multiplicity of the (untouched) odd part. Sorted by `(d, eps)`
/// with `+1` first.
///
/// ```
/// use ro2::dualizing::orbit_types;
/// let types = orbit_types(3, 1).unwrap();
/// let flat: Vec<(u64, i32, u128)> = types.iter().map(|t| (t.d, t.eps, t.count)).collect();
/// assert_eq!(flat, vec![(1, 1, 4), (1, -1, 4), (2, -1, 4)]);
/// ```
pub fn orbit_types(n: u32, m: u64) -> Result<Vec<OrbitType>> {
    check_n_m(n, m)?;
    let modulus = 1u64 << n;
    let half = 1u64 << (n - 1);
    let mult = (m as u128) * (m as u128);
    let mut counts: BTreeMap<(u64, i32), u128> = BTreeMap::new();
    for i in 0..2u8 {
        for ell in 0..1u64 << (n - 2) {
            let c = step_constant(n, i, ell)?;
            let mut visited = vec![false; half as usize];
            for j0 in 0..half {
                if visited[j0 as usize] {
                    continue;
                }
                visited[j0 as usize] = true;
                let mut j = j0;
                let mut d = 0u64;
                let mut eps = 1i32;
                loop {
                    let raw = (j + c) % modulus;
                    d += 1;
                    j = if raw >= half {
                        eps = -eps;
                        raw - half
                    } else {
                        raw
                    };
                    if j == j0 {
                        break;
                    }
                    visited[j as usize] = true;
                }
                *counts.entry((d, eps)).or_insert(0) += mult;
            }
        }
    }
    let mut out: Vec<OrbitType> =
        counts.into_iter().map(|((d, eps), count)| OrbitType { d, eps, count }).collect();
    out.sort_by_key(|t| (t.d, std::cmp::Reverse(t.eps)));
    Ok(out)
}

/// The `C_{2^n}`-representation carried by one orbit span
/// `ℝ[x]/(x^d - eps)`, where the group generator acts as multiplication
/// by `x` (`d = 2^t`, `d | 2^(n-1)`).
///
/// For `eps = -1` the eigenvalues are the primitive `2d`-th roots of
/// unity: `σ` when `d = 1`, else `(d/2)·λ_{n-t-1}`. For `eps = +1` the
/// ring splits off `x^(d/2) = ±1` factors recursively, bottoming out at
/// the trivial representation.
///
/// ```
/// use ro2::dualizing::cyclic_module_rep;
/// assert_eq!(cyclic_module_rep(3, 2, -1).unwrap().to_string(), "λ1 @C8");
/// assert_eq!(cyclic_module_rep(3, 4, 1).unwrap().to_string(), "1 + σ + λ1 @C8");
/// ```
pub fn cyclic_module_rep(n: u32, d: u64, eps: i32) -> Result<VirtualRep> {
    let group = Group::new(n)?;
    if !d.is_power_of_two() || d > 1 << (n - 1) {
        return Err(Error::LemmaRange {
            what: format!("orbit length d = {d} must be a power of two dividing 2^(n-1)"),
        });
    }
    if eps != 1 && eps != -1 {
        return Err(Error::LemmaRange { what: format!("orbit sign eps = {eps}, need ±1") });
    }
    let t = d.trailing_zeros();
    if eps == -1 {
        if t == 0 {
            Ok(VirtualRep::sigma(group))
        } else {
            Ok(VirtualRep::lambda(group, n - t - 1)? * (d as i128 / 2))
        }
    } else if d == 1 {
        Ok(VirtualRep::trivial(group))
    } else {
        Ok(cyclic_module_rep(n, d / 2, 1)? + cyclic_module_rep(n, d / 2, -1)?)
    }
}

/// The dualizing representation at height `h = 2^(n-1) m`: the sum of the
/// orbit classes, an honest representation of dimension `h²`. For `n = 1`
/// the action is trivial and the answer is `h²` trivial summands.
///
/// ```
/// use ro2::dualizing::dualizing_rep;
/// assert_eq!(dualizing_rep(3, 1).unwrap().to_string(), "4 + 4σ + 4λ1 @C8");
/// assert_eq!(dualizing_rep(1, 1).unwrap().to_string(), "1 @C2");
/// ```
pub fn dualizing_rep(n: u32, m: u64) -> Result<VirtualRep> {
    if n == 1 {
        check_m(m)?;
        let h2 = (m as i128) * (m as i128);
        return Ok(VirtualRep::trivial(Group::new(1)?) * h2);
    }
    let mut acc = VirtualRep::zero(Group::new(n)?);
    for t in orbit_types(n, m)? {
        acc = acc + cyclic_module_rep(n, t.d, t.eps)? * (t.count as i128);
    }
    Ok(acc)
}

/// The closed form `2^(n-1) m² (ρ - Ind_{C_2}^{C_{2^n}} σ)`, which
/// [`dualizing_rep`] must reproduce coefficient for coefficient.
///
/// ```
/// use ro2::dualizing::{closed_form, dualizing_rep};
/// assert_eq!(closed_form(4, 1).unwrap().to_string(), "8 + 8σ + 16λ1 + 8λ2 @C16");
/// assert_eq!(closed_form(3, 5).unwrap(), dualizing_rep(3, 5).unwrap());
/// ```
pub fn closed_form(n: u32, m: u64) -> Result<VirtualRep> {
    let group = Group::new(n)?;
    check_m(m)?;
    let scale = (1i128 << (n - 1)) * (m as i128) * (m as i128);
    let ind_sigma = VirtualRep::sigma(Group::new(1)?).induce(n)?;
    Ok((VirtualRep::regular(group) - ind_sigma) * scale)
}
