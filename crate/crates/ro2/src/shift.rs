//! Duality shifts. At each height the dualizing class is, up to recorded
//! periodicities, an integer suspension; this module solves for that
//! integer. The question is affine-lattice membership: find `s` with
//! `s·1 + V` in the span of the ledger, where `V` is the dualizing class
//! restricted to the working group. The answer, when it exists, is a
//! congruence class `base mod modulus`, and every reported base carries a
//! certificate over the ledger entries.

use crate::dualizing;
use crate::lattice;
use crate::ledger::Ledger;
use crate::rep::{Group, VirtualRep};
use crate::{Error, Result};

/// A solved shift: the congruence class `base + modulus·ℤ` together with
/// ledger coefficients witnessing `base·1 + V = Σ aᵢ·entryᵢ`. The base is
/// the representative of least absolute value, ties broken positive.
/// `modulus = 0` means the solution is unique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftSolution {
    base: i128,
    modulus: i128,
    certificate: Vec<i128>,
}

impl ShiftSolution {
    pub fn base(&self) -> i128 {
        self.base
    }

    pub fn modulus(&self) -> i128 {
        self.modulus
    }

    pub fn certificate(&self) -> &[i128] {
        &self.certificate
    }

    /// Whether `s` lies in the solved congruence class.
    pub fn congruent(&self, s: i128) -> bool {
        if self.modulus == 0 {
            s == self.base
        } else {
            (s - self.base) % self.modulus == 0
        }
    }
}

fn least_abs_mod(s0: i128, p: i128) -> i128 {
    if p == 0 {
        return s0;
    }
    let r = s0.rem_euclid(p);
    if 2 * r <= p {
        r
    } else {
        r - p
    }
}

/// The representative of the solution class nearest to `anchor`, ties
/// toward the larger value.
///
/// ```
/// use ro2::shift::{duality_shift, rebase};
/// let s = duality_shift(2, 2).unwrap().solution().cloned().unwrap();
/// assert_eq!((s.base(), s.modulus()), (12, 32));
/// assert_eq!(rebase(&s, 100), 108);
/// assert_eq!(rebase(&s, 0), 12);
/// ```
pub fn rebase(solution: &ShiftSolution, anchor: i128) -> i128 {
    let p = solution.modulus;
    if p == 0 {
        return solution.base;
    }
    let r = (anchor - solution.base).rem_euclid(p);
    if 2 * r >= p {
        anchor - r + p
    } else {
        anchor - r
    }
}

/// Solves `s·1 + v ∈ span(ledger)` for integer `s`. `None` when no
/// integer works; otherwise the full congruence class with a verified
/// certificate for its base.
pub fn solve_shift(v: &VirtualRep, ledger: &Ledger) -> Result<Option<ShiftSolution>> {
    if v.group() != ledger.group() {
        return Err(Error::GroupMismatch { expected: ledger.g(), found: v.group().n() });
    }
    let gens = ledger.generator_matrix();
    let Some((s0, p)) = lattice::solve_affine(&gens, &v.coeff_vec(), 0) else {
        return Ok(None);
    };
    let base = least_abs_mod(s0, p);
    let shifted = v.clone() + VirtualRep::trivial(v.group()) * base;
    let certificate = ledger.contains(&shifted)?.expect("solved base must lie in the ledger span");
    Ok(Some(ShiftSolution { base, modulus: p, certificate }))
}

/// The shift question at `(h, g)`, solved against the standard ledger:
/// which integer stands in for the height-`h` dualizing class over
/// `C_{2^g}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftReport {
    h: u64,
    g: u32,
    rep: VirtualRep,
    solution: Option<ShiftSolution>,
}

impl ShiftReport {
    pub fn h(&self) -> u64 {
        self.h
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    /// The restricted dualizing class `V` the shift was solved against.
    pub fn rep(&self) -> &VirtualRep {
        &self.rep
    }

    pub fn solution(&self) -> Option<&ShiftSolution> {
        self.solution.as_ref()
    }

    /// Whether the solved base agrees with the level-1 answer
    /// `s ≡ -h² (mod 2^(h+2))`. `None` when there is nothing to compare.
    pub fn c2_consistent(&self) -> Option<bool> {
        let sol = self.solution.as_ref()?;
        congruence_check(sol.base, self.h, 1).ok()
    }
}

fn split_height(h: u64) -> (u32, u64) {
    let t = h.trailing_zeros();
    (t + 1, h >> t)
}

/// The dualizing class of height `h` seen over `C_{2^g}`: computed over
/// its native group `C_{2^n}` with `2^(n-1) || h`, then restricted.
pub fn restricted_dualizing_rep(h: u64, g: u32) -> Result<VirtualRep> {
    if h == 0 || !h.is_multiple_of(1u64 << (g - 1)) {
        return Err(Error::HeightNotDivisible { h, g });
    }
    let (n, m) = split_height(h);
    dualizing::dualizing_rep(n, m)?.restrict(g)
}

/// Solves the shift question at `(h, g)` against the standard ledger.
/// Requires `2^(g-1) | h`. A report with no solution is an answer, not an
/// error: at `(8, 3)` the λ-coordinates force a parity contradiction and
/// no integer shift exists over that ledger.
///
/// ```
/// use ro2::shift::duality_shift;
/// let r = duality_shift(4, 3).unwrap();
/// assert_eq!(r.rep().to_string(), "4 + 4σ + 4λ1 @C8");
/// let s = r.solution().unwrap();
/// assert_eq!((s.base(), s.modulus()), (112, 256));
/// assert_eq!(s.certificate(), &[16, 0, 0, 0, 1]);
/// assert!(duality_shift(8, 3).unwrap().solution().is_none());
/// ```
pub fn duality_shift(h: u64, g: u32) -> Result<ShiftReport> {
    let ledger = Ledger::standard(h, g)?;
    let rep = restricted_dualizing_rep(h, g)?;
    let solution = solve_shift(&rep, &ledger)?;
    Ok(ShiftReport { h, g, rep, solution })
}

/// Whether `s` satisfies the level-`r` shift congruence at height `h`.
/// Errors when that level has no shift to compare against.
///
/// ```
/// use ro2::shift::congruence_check;
/// assert!(congruence_check(112, 4, 2).unwrap());  // 112 ≡ -16 (mod 128)
/// assert!(congruence_check(112, 4, 1).unwrap());  // 112 ≡ -16 (mod 64)
/// assert!(!congruence_check(100, 4, 2).unwrap());
/// ```
pub fn congruence_check(s: i128, h: u64, r: u32) -> Result<bool> {
    let report = duality_shift(h, r)?;
    let sol = report.solution().ok_or(Error::NoShiftAtLevel { h, g: r })?;
    Ok(sol.congruent(s))
}

/// A candidate reading of the dualizing class as `ℓ` copies of `ρ`:
/// the zero-dimensional difference `W = s·1 + V - ℓ·ρ` with
/// `s = ℓ·2^g - h²`, and its orientation descriptor when it has one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    ell: u64,
    shift: i128,
    rep: VirtualRep,
    descriptor: Option<VirtualRep>,
}

impl Candidate {
    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn shift(&self) -> i128 {
        self.shift
    }

    pub fn rep(&self) -> &VirtualRep {
        &self.rep
    }

    pub fn descriptor(&self) -> Option<&VirtualRep> {
        self.descriptor.as_ref()
    }
}

/// Enumerates candidates for `ℓ` in `0..=ell_max`. For `g >= 2` only the
/// `ℓ` whose shift satisfies the level-`(g-1)` congruence survive; at
/// `g = 1` every `ℓ` does.
///
/// ```
/// use ro2::shift::{candidate_reps, descriptor_name};
/// let cs = candidate_reps(4, 3, 16).unwrap();
/// assert_eq!(cs.len(), 2);
/// assert_eq!((cs[0].ell(), cs[0].shift()), (0, -16));
/// assert!(cs[0].descriptor().is_none());
/// assert_eq!((cs[1].ell(), cs[1].shift()), (16, 112));
/// assert_eq!(cs[1].rep().to_string(), "100 - 12σ - 32λ0 - 12λ1 @C8");
/// let d = cs[1].descriptor().unwrap();
/// assert_eq!(descriptor_name(d, false), "u_{12σ+32λ0+12λ1}");
/// ```
pub fn candidate_reps(h: u64, g: u32, ell_max: u64) -> Result<Vec<Candidate>> {
    let group = Group::new(g)?;
    let v = restricted_dualizing_rep(h, g)?;
    let rho = VirtualRep::regular(group);
    let filter = if g >= 2 {
        let report = duality_shift(h, g - 1)?;
        let sol = report.solution().cloned().ok_or(Error::NoShiftAtLevel { h, g: g - 1 })?;
        Some(sol)
    } else {
        None
    };
    let h2 = (h as i128) * (h as i128);
    let mut out = Vec::new();
    for ell in 0..=ell_max {
        let s = ((ell as i128) << g) - h2;
        if let Some(sol) = &filter {
            if !sol.congruent(s) {
                continue;
            }
        }
        let w = v.clone() + VirtualRep::trivial(group) * s - rho.clone() * (ell as i128);
        let descriptor = orientation_descriptor(&w)?;
        out.push(Candidate { ell, shift: s, rep: w, descriptor });
    }
    Ok(out)
}

/// Reads a zero-dimensional class as `dim(V)·1 - V` for an actual
/// representation `V` with no trivial summand and an even σ-multiplicity,
/// the shape for which an orientation class `u_V` exists. `None` when the
/// class is not of that shape, an error when its dimension is not zero.
///
/// ```
/// use ro2::shift::orientation_descriptor;
/// use ro2::VirtualRep;
/// let p: VirtualRep = "10 - 2σ - 4λ0 @C4".parse().unwrap();
/// let v = orientation_descriptor(&p).unwrap().unwrap();
/// assert_eq!(v.to_string(), "2σ + 4λ0 @C4");
/// let q: VirtualRep = "-1 + σ @C4".parse().unwrap();
/// assert!(orientation_descriptor(&q).unwrap().is_none());
/// ```
pub fn orientation_descriptor(p: &VirtualRep) -> Result<Option<VirtualRep>> {
    let d = p.dim();
    if d != 0 {
        return Err(Error::DimensionNonZero { dim: d });
    }
    let sign = -p.sign_coeff();
    if sign < 0 || sign % 2 != 0 {
        return Ok(None);
    }
    let mut lambda = Vec::new();
    for &c in p.lambda_coeffs() {
        if c > 0 {
            return Ok(None);
        }
        lambda.push(-c);
    }
    Ok(Some(VirtualRep::new(p.group(), 0, sign, &lambda)?))
}

/// The conventional name for the orientation class of `v`:
/// `u_{...}` with the representation written compactly.
pub fn descriptor_name(v: &VirtualRep, ascii: bool) -> String {
    format!("u_{{{}}}", compact(v, ascii))
}

fn compact(v: &VirtualRep, ascii: bool) -> String {
    let (sigma, lambda) = if ascii { ("s", "l") } else { ("σ", "λ") };
    let mut terms: Vec<(i128, String)> = Vec::new();
    if v.triv_coeff() != 0 {
        terms.push((v.triv_coeff(), String::new()));
    }
    if v.sign_coeff() != 0 {
        terms.push((v.sign_coeff(), sigma.to_string()));
    }
    for (i, &c) in v.lambda_coeffs().iter().enumerate() {
        if c != 0 {
            terms.push((c, format!("{lambda}{i}")));
        }
    }
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (c, sym)) in terms.iter().enumerate() {
        let mag = c.unsigned_abs();
        if *c < 0 {
            out.push('-');
        } else if k > 0 {
            out.push('+');
        }
        if mag != 1 || sym.is_empty() {
            out.push_str(&mag.to_string());
        }
        out.push_str(sym);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solved(h: u64, g: u32) -> ShiftSolution {
        duality_shift(h, g)
            .unwrap()
            .solution()
            .cloned()
            .unwrap_or_else(|| panic!("({h},{g}) should have a shift"))
    }

    #[test]
    fn shifts_at_level_one_are_minus_h_squared() {
        for h in [1u64, 2, 3, 4, 5, 8] {
            let s = solved(h, 1);
            let h2 = (h * h) as i128;
            assert_eq!(s.base(), least_abs_mod(-h2, s.modulus()), "h={h}");
            assert!(s.congruent(-h2), "h={h}");
            assert_eq!(s.modulus(), 1i128 << (h + 2), "h={h}");
        }
        assert_eq!((solved(1, 1).base(), solved(1, 1).modulus()), (-1, 8));
        assert_eq!((solved(2, 1).base(), solved(2, 1).modulus()), (-4, 16));
    }

    #[test]
    fn shifts_at_higher_levels() {
        assert_eq!((solved(2, 2).base(), solved(2, 2).modulus()), (12, 32));
        assert_eq!((solved(4, 2).base(), solved(4, 2).modulus()), (-16, 128));
        assert_eq!((solved(8, 2).base(), solved(8, 2).modulus()), (-64, 2048));
        assert_eq!((solved(4, 3).base(), solved(4, 3).modulus()), (112, 256));
    }

    #[test]
    fn height_eight_level_three_has_no_shift() {
        let r = duality_shift(8, 3).unwrap();
        assert_eq!(r.rep().to_string(), "16 + 16σ + 16λ1 @C8");
        assert!(r.solution().is_none());
        assert!(r.c2_consistent().is_none());
        assert!(matches!(congruence_check(0, 8, 3), Err(Error::NoShiftAtLevel { h: 8, g: 3 })));
    }

    #[test]
    fn certificates_recombine() {
        let ledger = Ledger::standard(2, 2).unwrap();
        let s = solved(2, 2);
        assert_eq!(s.certificate(), &[4, 0, 0, 1]);
        let target = duality_shift(2, 2).unwrap().rep().clone()
            + VirtualRep::trivial(ledger.group()) * s.base();
        assert_eq!(ledger.recombine(s.certificate()), target);

        let s = solved(4, 2);
        assert_eq!(s.certificate(), &[0, -1, 0, 0]);
    }

    #[test]
    fn level_one_consistency_of_solved_bases() {
        for (h, g) in [(2u64, 2u32), (4, 2), (8, 2), (4, 3)] {
            assert_eq!(duality_shift(h, g).unwrap().c2_consistent(), Some(true), "({h},{g})");
        }
    }

    #[test]
    fn least_abs_normalization() {
        assert_eq!(least_abs_mod(12, 32), 12);
        assert_eq!(least_abs_mod(112, 128), -16);
        assert_eq!(least_abs_mod(-100, 32), -4);
        // Exact half goes positive.
        assert_eq!(least_abs_mod(16, 32), 16);
        assert_eq!(least_abs_mod(-16, 32), 16);
        // Unique solutions pass through.
        assert_eq!(least_abs_mod(-7, 0), -7);
    }

    #[test]
    fn rebase_ties_go_up() {
        let s = ShiftSolution { base: 12, modulus: 32, certificate: vec![] };
        assert_eq!(rebase(&s, 92), 108);
        assert_eq!(rebase(&s, 91), 76);
        assert_eq!(rebase(&s, -100), -84);
    }

    #[test]
    fn candidates_at_height_two() {
        let cs = candidate_reps(2, 2, 8).unwrap();
        let ells: Vec<u64> = cs.iter().map(Candidate::ell).collect();
        assert_eq!(ells, vec![0, 4, 8]);
        assert_eq!(cs[1].shift(), 12);
        assert_eq!(cs[1].rep().to_string(), "10 - 2σ - 4λ0 @C4");
        let d = cs[1].descriptor().unwrap();
        assert_eq!(descriptor_name(d, false), "u_{2σ+4λ0}");
        assert_eq!(descriptor_name(d, true), "u_{2s+4l0}");
    }

    #[test]
    fn descriptor_shapes() {
        let g = Group::new(2).unwrap();
        assert!(matches!(
            orientation_descriptor(&VirtualRep::trivial(g)),
            Err(Error::DimensionNonZero { dim: 1 })
        ));
        // Odd σ-multiplicity is not orientable.
        let p = VirtualRep::new(g, 1, -1, &[]).unwrap();
        assert!(orientation_descriptor(&p).unwrap().is_none());
        // A λ on the wrong side.
        let p = VirtualRep::new(g, -2, 0, &[1]).unwrap();
        assert!(orientation_descriptor(&p).unwrap().is_none());
        // Zero has the empty descriptor.
        let v = orientation_descriptor(&VirtualRep::zero(g)).unwrap().unwrap();
        assert!(v.is_zero());
        assert_eq!(descriptor_name(&v, false), "u_{0}");
    }

    #[test]
    fn compact_rendering() {
        let g = Group::new(3).unwrap();
        let v = VirtualRep::new(g, 0, 12, &[32, 12]).unwrap();
        assert_eq!(compact(&v, false), "12σ+32λ0+12λ1");
        let w = VirtualRep::new(g, 3, -1, &[0, 2]).unwrap();
        assert_eq!(compact(&w, false), "3-σ+2λ1");
    }

    #[test]
    fn mismatched_groups_are_rejected() {
        let ledger = Ledger::standard(2, 2).unwrap();
        let v = VirtualRep::trivial(Group::new(3).unwrap());
        assert!(solve_shift(&v, &ledger).is_err());
    }
}
