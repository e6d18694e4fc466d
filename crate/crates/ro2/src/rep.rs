//! Virtual representations of the cyclic 2-groups `C_{2^n}`.
//!
//! Coefficients live over the irreducible basis `1, σ, λ_0, …, λ_{n-2}`:
//! the trivial character, the sign character, and the 2-dimensional
//! rotations, where `λ_i` is rotation by `2π / 2^(n-i)`. The would-be
//! rotation `λ_{n-1}` is rotation by `π`, which is `σ ⊕ σ`; the canonical
//! form folds it away as `2σ`. Everything is 2-complete: rotations by any
//! odd multiple of `2π / 2^(n-i)` are identified with `λ_i`, which is what
//! makes restriction and induction below close up over this basis.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::{Error, Result};

/// Largest supported group exponent. Exponents beyond this have no use in
/// the computations here and only invite overflow in `2^n` bookkeeping.
pub const MAX_EXPONENT: u32 = 24;

/// The cyclic group `C_{2^n}` of order `2^n`, carried around as its
/// exponent `n >= 1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Group {
    n: u32,
}

impl Group {
    pub fn new(n: u32) -> Result<Group> {
        if !(1..=MAX_EXPONENT).contains(&n) {
            return Err(Error::ExponentRange { n, min: 1, max: MAX_EXPONENT });
        }
        Ok(Group { n })
    }

    /// The exponent `n` of `|G| = 2^n`.
    pub fn n(self) -> u32 {
        self.n
    }

    pub fn order(self) -> u64 {
        1u64 << self.n
    }

    /// Number of 2-dimensional irreducibles, `n - 1`.
    pub fn lambda_count(self) -> usize {
        (self.n - 1) as usize
    }

    /// The subgroup `C_{2^r}`, for `1 <= r <= n`.
    pub fn subgroup(self, r: u32) -> Result<Group> {
        if r < 1 || r > self.n {
            return Err(Error::SubgroupRange { r, n: self.n });
        }
        Ok(Group { n: r })
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.order())
    }
}

/// An element of the real representation ring `RO(C_{2^n})` (2-completed),
/// i.e. an integer vector over `1, σ, λ_0, …, λ_{n-2}` in canonical form.
///
/// ```
/// use ro2::{Group, VirtualRep};
///
/// let c8 = Group::new(3).unwrap();
/// // An index-(n-1) lambda slot folds to 2σ on construction.
/// let v = VirtualRep::new(c8, 1, 0, &[0, 0, 3]).unwrap();
/// assert_eq!(v, VirtualRep::new(c8, 1, 6, &[0, 0]).unwrap());
/// assert_eq!(v.dim(), 7);
/// assert_eq!(v.to_string(), "1 + 6σ @C8");
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VirtualRep {
    group: Group,
    triv: i128,
    sign: i128,
    lambda: Vec<i128>,
}

impl VirtualRep {
    /// Builds a representation from raw coefficients and canonicalizes.
    ///
    /// `lambda` may have any length up to `n`; a final index-`(n-1)` entry
    /// is rotation by `π` and is folded into the sign coefficient as `2σ`.
    /// Shorter slices are padded with zeros.
    pub fn new(group: Group, triv: i128, sign: i128, lambda: &[i128]) -> Result<VirtualRep> {
        let n = group.n as usize;
        if lambda.len() > n {
            return Err(Error::LambdaIndex { i: lambda.len() as u32 - 1, n: group.n });
        }
        let mut lam = vec![0i128; n - 1];
        let mut sign = sign;
        for (i, &c) in lambda.iter().enumerate() {
            if i == n - 1 {
                sign = add(sign, mul(2, c));
            } else {
                lam[i] = c;
            }
        }
        Ok(VirtualRep { group, triv, sign, lambda: lam })
    }

    pub fn zero(group: Group) -> VirtualRep {
        VirtualRep { group, triv: 0, sign: 0, lambda: vec![0; group.lambda_count()] }
    }

    pub fn trivial(group: Group) -> VirtualRep {
        let mut v = VirtualRep::zero(group);
        v.triv = 1;
        v
    }

    pub fn sigma(group: Group) -> VirtualRep {
        let mut v = VirtualRep::zero(group);
        v.sign = 1;
        v
    }

    /// The 2-dimensional rotation `λ_i`, for `0 <= i <= n-2`.
    pub fn lambda(group: Group, i: u32) -> Result<VirtualRep> {
        if i as usize >= group.lambda_count() {
            return Err(Error::LambdaIndex { i, n: group.n });
        }
        let mut v = VirtualRep::zero(group);
        v.lambda[i as usize] = 1;
        Ok(v)
    }

    /// The regular representation
    /// `ρ = 1 + σ + Σ_{i=0}^{n-2} 2^(n-2-i) λ_i`, of dimension `2^n`.
    ///
    /// ```
    /// use ro2::{Group, VirtualRep};
    /// let rho = VirtualRep::regular(Group::new(3).unwrap());
    /// assert_eq!(rho.to_string(), "1 + σ + 2λ0 + λ1 @C8");
    /// assert_eq!(rho.dim(), 8);
    /// ```
    pub fn regular(group: Group) -> VirtualRep {
        let n = group.n;
        let mut v = VirtualRep::zero(group);
        v.triv = 1;
        v.sign = 1;
        for i in 0..group.lambda_count() {
            v.lambda[i] = 1i128 << (n as usize - 2 - i);
        }
        v
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn triv_coeff(&self) -> i128 {
        self.triv
    }

    pub fn sign_coeff(&self) -> i128 {
        self.sign
    }

    pub fn lambda_coeffs(&self) -> &[i128] {
        &self.lambda
    }

    pub fn is_zero(&self) -> bool {
        self.triv == 0 && self.sign == 0 && self.lambda.iter().all(|&c| c == 0)
    }

    /// Virtual dimension: `triv + sign + 2·Σ lambda`.
    pub fn dim(&self) -> i128 {
        let mut d = add(self.triv, self.sign);
        for &c in &self.lambda {
            d = add(d, mul(2, c));
        }
        d
    }

    /// Coefficient vector `(triv, sign, λ_0, …, λ_{n-2})`, the basis order
    /// used by the lattice solver.
    pub fn coeff_vec(&self) -> Vec<i128> {
        let mut v = Vec::with_capacity(2 + self.lambda.len());
        v.push(self.triv);
        v.push(self.sign);
        v.extend_from_slice(&self.lambda);
        v
    }

    /// Inverse of [`coeff_vec`](Self::coeff_vec).
    pub fn from_coeff_vec(group: Group, v: &[i128]) -> Result<VirtualRep> {
        if v.len() != group.lambda_count() + 2 {
            return Err(Error::LambdaIndex { i: v.len() as u32, n: group.n });
        }
        VirtualRep::new(group, v[0], v[1], &v[2..])
    }

    /// Restriction to the subgroup `C_{2^r}`, generated by `γ^(2^(n-r))`.
    ///
    /// The generator of the subgroup sees: the trivial character as itself;
    /// `σ` as itself when `r = n` and as trivial otherwise; `λ_i` as
    /// rotation by `2π / 2^(r-i)`, which is `λ_i` for `i <= r-2`, is `2σ`
    /// for `i = r-1`, and is `2·trivial` once the rotation closes up
    /// (`i >= r`). Restriction preserves virtual dimension.
    ///
    /// ```
    /// use ro2::{Group, VirtualRep};
    /// let c8 = Group::new(3).unwrap();
    /// let rho = VirtualRep::regular(c8);
    /// assert_eq!(rho.restrict(2).unwrap().to_string(), "2 + 2σ + 2λ0 @C4");
    /// ```
    pub fn restrict(&self, r: u32) -> Result<VirtualRep> {
        let sub = self.group.subgroup(r)?;
        let mut out = VirtualRep::zero(sub);
        out.triv = self.triv;
        if r == self.group.n {
            out.sign = self.sign;
        } else {
            out.triv = add(out.triv, self.sign);
        }
        for (i, &c) in self.lambda.iter().enumerate() {
            let i = i as u32;
            if i + 2 <= r {
                out.lambda[i as usize] = add(out.lambda[i as usize], c);
            } else if i + 1 == r {
                out.sign = add(out.sign, mul(2, c));
            } else {
                out.triv = add(out.triv, mul(2, c));
            }
        }
        Ok(out)
    }

    /// Induction up to `C_{2^n}` from the current group `C_{2^r}`,
    /// 2-completed; multiplies virtual dimension by `2^(n-r)`.
    ///
    /// On irreducibles:
    /// `Ind 1 = 1 + σ + Σ_{i=0}^{n-r-2} 2^(n-r-2-i) λ_{r+i}` (the
    /// permutation representation of the coset space),
    /// `Ind σ = 2^(n-r-1) λ_{r-1}` (read `λ_{n-1}` as `2σ` when `r = n`),
    /// and `Ind λ_i = 2^(n-r) λ_i`, every rotation landing on the single
    /// 2-complete class of its order.
    ///
    /// ```
    /// use ro2::{Group, VirtualRep};
    /// let c4 = Group::new(2).unwrap();
    /// let sigma4 = VirtualRep::sigma(c4);
    /// assert_eq!(sigma4.induce(3).unwrap().to_string(), "λ1 @C8");
    /// ```
    pub fn induce(&self, n: u32) -> Result<VirtualRep> {
        let r = self.group.n;
        let big = Group::new(n)?;
        if r > n {
            return Err(Error::SubgroupRange { r, n });
        }
        if r == n {
            return Ok(self.clone());
        }
        let mut out = VirtualRep::zero(big);
        // Ind of the trivial character: inflation of the regular
        // representation of the quotient C_{2^(n-r)}.
        out.triv = self.triv;
        out.sign = self.triv;
        for i in 0..(n - r - 1) {
            let idx = (r + i) as usize;
            out.lambda[idx] = add(out.lambda[idx], mul(self.triv, 1i128 << (n - r - 2 - i)));
        }
        // Ind of sigma.
        if r >= 1 {
            let idx = (r - 1) as usize;
            out.lambda[idx] = add(out.lambda[idx], mul(self.sign, 1i128 << (n - r - 1)));
        }
        // Ind of each rotation.
        for (i, &c) in self.lambda.iter().enumerate() {
            out.lambda[i] = add(out.lambda[i], mul(c, 1i128 << (n - r)));
        }
        Ok(out)
    }

    /// Whether the determinant character is trivial, i.e. whether an honest
    /// representation with these coefficients lands in `SO`. Each `σ`
    /// contributes determinant `-1` and everything else `+1`, so this is
    /// just the parity of the sign coefficient.
    pub fn is_classically_orientable(&self) -> bool {
        self.sign % 2 == 0
    }

    /// Renders in the canonical grammar; `ascii` swaps `σ, λ` for `s, l`.
    pub fn render(&self, ascii: bool) -> String {
        let (sig, lam) = if ascii { ("s", "l") } else { ("σ", "λ") };
        let mut terms: Vec<(i128, String)> = Vec::new();
        if self.triv != 0 {
            terms.push((self.triv, String::new()));
        }
        if self.sign != 0 {
            terms.push((self.sign, sig.to_string()));
        }
        for (i, &c) in self.lambda.iter().enumerate() {
            if c != 0 {
                terms.push((c, format!("{lam}{i}")));
            }
        }
        let mut out = String::new();
        if terms.is_empty() {
            out.push('0');
        }
        for (k, (c, sym)) in terms.iter().enumerate() {
            if k == 0 {
                if *c < 0 {
                    out.push('-');
                }
            } else if *c < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.unsigned_abs();
            if mag != 1 || sym.is_empty() {
                out.push_str(&mag.to_string());
            }
            out.push_str(sym);
        }
        out.push_str(&format!(" @C{}", self.group.order()));
        out
    }

    fn check_same_group(&self, other: &VirtualRep) {
        assert!(
            self.group == other.group,
            "cross-group arithmetic is forbidden: {} vs {}",
            self.group,
            other.group
        );
    }
}

fn add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("coefficient overflow")
}

fn mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("coefficient overflow")
}

impl Add for VirtualRep {
    type Output = VirtualRep;
    fn add(self, rhs: VirtualRep) -> VirtualRep {
        &self + &rhs
    }
}

impl Add for &VirtualRep {
    type Output = VirtualRep;
    fn add(self, rhs: &VirtualRep) -> VirtualRep {
        self.check_same_group(rhs);
        let mut out = self.clone();
        out.triv = add(out.triv, rhs.triv);
        out.sign = add(out.sign, rhs.sign);
        for (a, &b) in out.lambda.iter_mut().zip(&rhs.lambda) {
            *a = add(*a, b);
        }
        out
    }
}

impl Neg for VirtualRep {
    type Output = VirtualRep;
    fn neg(mut self) -> VirtualRep {
        self.triv = -self.triv;
        self.sign = -self.sign;
        for c in &mut self.lambda {
            *c = -*c;
        }
        self
    }
}

impl Sub for VirtualRep {
    type Output = VirtualRep;
    fn sub(self, rhs: VirtualRep) -> VirtualRep {
        &self - &rhs
    }
}

impl Sub for &VirtualRep {
    type Output = VirtualRep;
    fn sub(self, rhs: &VirtualRep) -> VirtualRep {
        self + &(-rhs.clone())
    }
}

impl Mul<i128> for VirtualRep {
    type Output = VirtualRep;
    fn mul(mut self, k: i128) -> VirtualRep {
        self.triv = mul(self.triv, k);
        self.sign = mul(self.sign, k);
        for c in &mut self.lambda {
            *c = mul(*c, k);
        }
        self
    }
}

impl Mul<VirtualRep> for i128 {
    type Output = VirtualRep;
    fn mul(self, v: VirtualRep) -> VirtualRep {
        v * self
    }
}

impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// Parses the canonical grammar, e.g. `100 - 12σ - 32λ0 - 12λ1 @C8`.
/// Accepts the ascii aliases `s`/`l0` and a unicode minus, and tolerates
/// missing spaces; an index-`(n-1)` lambda term folds to `2σ` exactly as
/// in [`VirtualRep::new`].
impl FromStr for VirtualRep {
    type Err = Error;

    fn from_str(s: &str) -> Result<VirtualRep> {
        let err = |msg: &str| Error::Parse(format!("{msg} in {s:?}"));
        let at = s.rfind("@C").ok_or_else(|| err("missing @C group tag"))?;
        let order: u64 = s[at + 2..].trim().parse().map_err(|_| err("bad group order after @C"))?;
        if order < 2 || !order.is_power_of_two() {
            return Err(err("group order must be a power of two >= 2"));
        }
        let group = Group::new(order.trailing_zeros())?;

        let body: Vec<char> = s[..at].chars().collect();
        let mut pos = 0usize;
        let skip_ws = |pos: &mut usize| {
            while *pos < body.len() && body[*pos].is_whitespace() {
                *pos += 1;
            }
        };
        let mut triv = 0i128;
        let mut sign = 0i128;
        let mut lambda = vec![0i128; group.n() as usize];
        let mut any = false;
        loop {
            skip_ws(&mut pos);
            if pos >= body.len() {
                break;
            }
            let neg = match body[pos] {
                '+' => false,
                '-' | '−' => true,
                _ if !any => false,
                _ => return Err(err("expected + or - between terms")),
            };
            if matches!(body[pos], '+' | '-' | '−') {
                pos += 1;
            }
            skip_ws(&mut pos);
            let digit_start = pos;
            while pos < body.len() && body[pos].is_ascii_digit() {
                pos += 1;
            }
            let digits = &body[digit_start..pos];
            let mut mag: Option<i128> = if digits.is_empty() {
                None
            } else {
                let txt: String = digits.iter().collect();
                Some(txt.parse().map_err(|_| err("coefficient out of range"))?)
            };
            skip_ws(&mut pos);
            if pos < body.len() && matches!(body[pos], '·' | '*') {
                pos += 1;
                skip_ws(&mut pos);
            }
            let slot: &mut i128 = match body.get(pos).copied() {
                Some('σ') | Some('s') => {
                    pos += 1;
                    &mut sign
                }
                Some('λ') | Some('l') => {
                    pos += 1;
                    let idx_start = pos;
                    while pos < body.len() && body[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if idx_start == pos {
                        return Err(err("lambda needs an index"));
                    }
                    let txt: String = body[idx_start..pos].iter().collect();
                    let i: usize = txt.parse().map_err(|_| err("bad lambda index"))?;
                    if i >= lambda.len() {
                        return Err(Error::LambdaIndex { i: i as u32, n: group.n() });
                    }
                    &mut lambda[i]
                }
                _ => {
                    if mag.is_none() {
                        return Err(err("expected a term"));
                    }
                    &mut triv
                }
            };
            let mag = mag.take().unwrap_or(1);
            *slot = slot
                .checked_add(if neg { -mag } else { mag })
                .ok_or_else(|| err("coefficient out of range"))?;
            any = true;
        }
        if !any {
            return Err(err("empty representation"));
        }
        VirtualRep::new(group, triv, sign, &lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: u32) -> Group {
        Group::new(n).unwrap()
    }

    #[test]
    fn canonical_form_folds_top_lambda() {
        // (n=3; 0, 1, [2, 0, 5]) -> 0, 11, [2, 0]
        let v = VirtualRep::new(g(3), 0, 1, &[2, 0, 5]).unwrap();
        assert_eq!(v, VirtualRep::new(g(3), 0, 11, &[2, 0]).unwrap());
        // (n=2; 1, 1, [1]) is already canonical.
        let w = VirtualRep::new(g(2), 1, 1, &[1]).unwrap();
        assert_eq!(w.coeff_vec(), vec![1, 1, 1]);
        // n=1: the lone lambda slot is rotation by π over C_2.
        let u = VirtualRep::new(g(1), 0, 0, &[3]).unwrap();
        assert_eq!(u, VirtualRep::new(g(1), 0, 6, &[]).unwrap());
    }

    #[test]
    fn normalization_is_idempotent() {
        let v = VirtualRep::new(g(4), 7, -3, &[1, -2, 9, 4]).unwrap();
        let w = VirtualRep::new(g(4), v.triv_coeff(), v.sign_coeff(), v.lambda_coeffs()).unwrap();
        assert_eq!(v, w);
    }

    #[test]
    fn dim_of_regular_is_group_order() {
        for n in 1..=8 {
            assert_eq!(VirtualRep::regular(g(n)).dim(), 1i128 << n);
        }
        // dim(1 - σ) = 0, dim(λ_0) = 2.
        let c4 = g(2);
        assert_eq!((VirtualRep::trivial(c4) - VirtualRep::sigma(c4)).dim(), 0);
        assert_eq!(VirtualRep::lambda(c4, 0).unwrap().dim(), 2);
    }

    #[test]
    fn restrict_of_regular() {
        // Res^{C8}_{C4} ρ_8 = 2 ρ_4, and down to C_2: 4 ρ_2.
        let rho8 = VirtualRep::regular(g(3));
        assert_eq!(rho8.restrict(2).unwrap(), VirtualRep::regular(g(2)) * 2);
        assert_eq!(rho8.restrict(1).unwrap(), VirtualRep::regular(g(1)) * 4);
        // σ dies on proper subgroups.
        let sig = VirtualRep::sigma(g(3));
        assert_eq!(sig.restrict(3).unwrap(), sig);
        assert_eq!(sig.restrict(2).unwrap(), VirtualRep::trivial(g(2)));
        // λ_0 over C8 restricted to C4 is the order-4 rotation λ_0 again;
        // λ_1 restricted to C4 becomes rotation by π.
        let l0 = VirtualRep::lambda(g(3), 0).unwrap();
        assert_eq!(l0.restrict(2).unwrap(), VirtualRep::lambda(g(2), 0).unwrap());
        let l1 = VirtualRep::lambda(g(3), 1).unwrap();
        assert_eq!(l1.restrict(2).unwrap(), VirtualRep::sigma(g(2)) * 2);
        assert_eq!(l0.restrict(1).unwrap(), VirtualRep::sigma(g(1)) * 2);
        assert_eq!(l1.restrict(1).unwrap(), VirtualRep::trivial(g(1)) * 2);
    }

    #[test]
    fn induce_on_irreducibles() {
        // Ind_{C2}^{C8} 1 = 1 + σ + λ_1.
        let one = VirtualRep::trivial(g(1));
        assert_eq!(one.induce(3).unwrap().to_string(), "1 + σ + λ1 @C8");
        // Ind_{C2}^{C8} σ_2 = 2λ_0.
        let s2 = VirtualRep::sigma(g(1));
        assert_eq!(s2.induce(3).unwrap().to_string(), "2λ0 @C8");
        // Ind_{C4}^{C8} σ_4 = λ_1, Ind_{C4}^{C8} λ_0 = 2λ_0.
        assert_eq!(VirtualRep::sigma(g(2)).induce(3).unwrap().to_string(), "λ1 @C8");
        let l0 = VirtualRep::lambda(g(2), 0).unwrap();
        assert_eq!(l0.induce(3).unwrap().to_string(), "2λ0 @C8");
        // Ind to the same group is the identity.
        assert_eq!(l0.induce(2).unwrap(), l0);
        // Ind_{C2}^{C4} σ_2 = λ_0 (the π/2-rotation).
        assert_eq!(VirtualRep::sigma(g(1)).induce(2).unwrap().to_string(), "λ0 @C4");
    }

    #[test]
    fn orientability_is_sign_parity() {
        let v = VirtualRep::new(g(2), 5, 2, &[9]).unwrap();
        assert!(v.is_classically_orientable());
        let w = VirtualRep::new(g(2), 5, 3, &[9]).unwrap();
        assert!(!w.is_classically_orientable());
    }

    #[test]
    fn render_and_parse_round_trip() {
        let v = VirtualRep::new(g(3), 100, -12, &[-32, -12]).unwrap();
        assert_eq!(v.to_string(), "100 - 12σ - 32λ0 - 12λ1 @C8");
        assert_eq!(v.render(true), "100 - 12s - 32l0 - 12l1 @C8");
        assert_eq!(v.to_string().parse::<VirtualRep>().unwrap(), v);
        assert_eq!(v.render(true).parse::<VirtualRep>().unwrap(), v);

        assert_eq!(VirtualRep::zero(g(2)).to_string(), "0 @C4");
        assert_eq!("0 @C4".parse::<VirtualRep>().unwrap(), VirtualRep::zero(g(2)));
        assert_eq!(
            "-σ + λ0 @C4".parse::<VirtualRep>().unwrap(),
            VirtualRep::new(g(2), 0, -1, &[1]).unwrap()
        );
        // Compact spacing and the unicode minus both parse.
        assert_eq!(
            "100−12σ−32λ0−12λ1 @C8".parse::<VirtualRep>().unwrap(),
            VirtualRep::new(g(3), 100, -12, &[-32, -12]).unwrap()
        );

        assert!("1 + σ".parse::<VirtualRep>().is_err());
        assert!("1 + λ9 @C4".parse::<VirtualRep>().is_err());
        assert!("@C4".parse::<VirtualRep>().is_err());
        assert!("1 + 2 ++ σ @C4".parse::<VirtualRep>().is_err());
    }

    #[test]
    #[should_panic(expected = "cross-group arithmetic")]
    fn cross_group_addition_panics() {
        let _ = VirtualRep::trivial(g(2)) + VirtualRep::trivial(g(3));
    }
}
