//! Periodicity ledgers: the bookkeeping of classes `P` for which
//! multiplication is known to be invertible on the relevant homotopy fixed
//! points, so that suspensions by `P` can be traded freely. Each entry
//! records its virtual representation and a provenance tag; the set of
//! entries spans an integer lattice inside the coefficient space of
//! `RO(C_{2^g})`, and the questions downstream (integer periodicity,
//! shifts) are lattice membership questions over the basis
//! `(1, σ, λ_0, …, λ_{g-2})`.

use std::fmt;

use crate::lattice;
use crate::rep::{Group, VirtualRep};
use crate::{Error, Result};

/// Where a ledger entry comes from. The standard generators are the
/// regular representation, the σ-type classes at each level, and the
/// handful of special low-height classes; inductions of entries from a
/// proper subgroup level are tagged separately so results depending on
/// them can be told apart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// The regular representation `ρ`.
    Rho,
    /// The class `2^(h/2^(r-1)+1) (1 - σ)` over `C_{2^r}`.
    Sigma { r: u32 },
    /// A named special class (an orientation-class unit).
    SpecialClass { name: String },
    /// Induced (normed) up from the level-`r` subgroup.
    InducedFrom { r: u32 },
    /// Restricted down from the level-`g` overgroup.
    RestrictedFrom { g: u32 },
}

impl Provenance {
    pub fn render(&self, ascii: bool) -> String {
        let swap = |s: &str| {
            if ascii {
                s.replace('σ', "s").replace('λ', "l")
            } else {
                s.to_string()
            }
        };
        match self {
            Provenance::Rho => "rho".to_string(),
            Provenance::Sigma { r } => format!("sigma(r={r})"),
            Provenance::SpecialClass { name } => format!("special({})", swap(name)),
            Provenance::InducedFrom { r } => format!("induced(r={r})"),
            Provenance::RestrictedFrom { g } => format!("restricted(g={g})"),
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// One recorded periodicity: a virtual representation together with the
/// provenance of the invertibility claim. Invertibility itself is an input
/// here, not something this crate proves; the tag is the citation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Periodicity {
    rep: VirtualRep,
    provenance: Provenance,
}

impl Periodicity {
    pub fn new(rep: VirtualRep, provenance: Provenance) -> Periodicity {
        Periodicity { rep, provenance }
    }

    pub fn rep(&self) -> &VirtualRep {
        &self.rep
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }
}

/// The σ-type periodicity at height `h` over `C_{2^r}`:
/// `2^(h/2^(r-1)+1) (1 - σ)`, defined when `2^(r-1) | h`.
///
/// ```
/// use ro2::ledger::sigma_periodicity;
/// assert_eq!(sigma_periodicity(2, 2).unwrap().rep().to_string(), "4 - 4σ @C4");
/// assert_eq!(sigma_periodicity(8, 1).unwrap().rep().to_string(), "512 - 512σ @C2");
/// ```
pub fn sigma_periodicity(h: u64, r: u32) -> Result<Periodicity> {
    let group = Group::new(r)?;
    if h == 0 || (r >= 1 && !h.is_multiple_of(1 << (r - 1))) {
        return Err(Error::HeightNotDivisible { h, g: r });
    }
    let e = h / (1u64 << (r - 1)) + 1;
    if e >= 127 {
        return Err(Error::Overflow { what: format!("sigma periodicity coefficient 2^{e}") });
    }
    let c = 1i128 << e;
    Ok(Periodicity::new(VirtualRep::new(group, c, -c, &[])?, Provenance::Sigma { r }))
}

/// The known special classes, by `(h, g)`: the extra invertible
/// orientation-class units at heights 2 and 4 over `C_4` and `C_8`.
/// Everything else has none (as far as recorded here).
///
/// ```
/// use ro2::ledger::special_class;
/// let p = special_class(2, 2).unwrap();
/// assert_eq!(p.rep().to_string(), "10 - 2σ - 4λ0 @C4");
/// assert!(special_class(8, 2).is_none());
/// ```
pub fn special_class(h: u64, g: u32) -> Option<Periodicity> {
    let (group, coeffs): (Group, &[i128]) = match (h, g) {
        (2, 2) => (Group::new(2).unwrap(), &[10, -2, -4]),
        (4, 2) => (Group::new(2).unwrap(), &[36, -4, -16]),
        (4, 3) => (Group::new(3).unwrap(), &[100, -12, -32, -12]),
        _ => return None,
    };
    let rep = VirtualRep::from_coeff_vec(group, coeffs).unwrap();
    let unit = crate::shift::orientation_descriptor(&rep)
        .ok()
        .flatten()
        .map(|v| crate::shift::descriptor_name(&v, false))
        .expect("special classes are orientation classes by construction");
    Some(Periodicity::new(rep, Provenance::SpecialClass { name: unit }))
}

/// Plain induction of a periodicity up to `C_{2^g}` (the norm of the
/// underlying unit). Inducing to the entry's own group is the identity
/// and keeps its provenance; a proper induction is re-tagged with the
/// source level.
///
/// ```
/// use ro2::ledger::{induce_periodicity, sigma_periodicity};
/// let ind = induce_periodicity(&sigma_periodicity(2, 1).unwrap(), 2).unwrap();
/// assert_eq!(ind.rep().to_string(), "8 + 8σ - 8λ0 @C4");
/// assert_eq!(ind.provenance().render(false), "induced(r=1)");
/// ```
pub fn induce_periodicity(p: &Periodicity, g: u32) -> Result<Periodicity> {
    let r = p.rep.group().n();
    if r == g {
        return Ok(p.clone());
    }
    Ok(Periodicity::new(p.rep.induce(g)?, Provenance::InducedFrom { r }))
}

/// A height's ledger over `C_{2^g}`: the ordered list of recorded
/// periodicities whose integer span answers shift questions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ledger {
    h: u64,
    g: u32,
    entries: Vec<Periodicity>,
}

impl Ledger {
    /// The standard ledger at `(h, g)`: `ρ`, the σ-type classes of every
    /// level `r <= g` induced up (listed `r = g` down to `r = 1`), and the
    /// special class when there is one. Defined when `2^(g-1) | h`.
    ///
    /// ```
    /// use ro2::ledger::Ledger;
    /// let l = Ledger::standard(4, 3).unwrap();
    /// let reps: Vec<String> = l.entries().iter().map(|p| p.rep().to_string()).collect();
    /// assert_eq!(reps, vec![
    ///     "1 + σ + 2λ0 + λ1 @C8",
    ///     "4 - 4σ @C8",
    ///     "8 + 8σ - 8λ1 @C8",
    ///     "32 + 32σ - 64λ0 + 32λ1 @C8",
    ///     "100 - 12σ - 32λ0 - 12λ1 @C8",
    /// ]);
    /// ```
    pub fn standard(h: u64, g: u32) -> Result<Ledger> {
        let group = Group::new(g)?;
        if h == 0 || !h.is_multiple_of(1 << (g - 1)) {
            return Err(Error::HeightNotDivisible { h, g });
        }
        let mut entries = vec![Periodicity::new(VirtualRep::regular(group), Provenance::Rho)];
        for r in (1..=g).rev() {
            entries.push(induce_periodicity(&sigma_periodicity(h, r)?, g)?);
        }
        entries.extend(special_class(h, g));
        Ok(Ledger { h, g, entries })
    }

    /// A ledger from hand-picked entries (all over `C_{2^g}`).
    pub fn from_entries(h: u64, g: u32, entries: Vec<Periodicity>) -> Result<Ledger> {
        let group = Group::new(g)?;
        if h == 0 || !h.is_multiple_of(1 << (g - 1)) {
            return Err(Error::HeightNotDivisible { h, g });
        }
        for p in &entries {
            if p.rep.group() != group {
                return Err(Error::GroupMismatch { expected: g, found: p.rep.group().n() });
            }
        }
        Ok(Ledger { h, g, entries })
    }

    pub fn h(&self) -> u64 {
        self.h
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn group(&self) -> Group {
        Group::new(self.g).unwrap()
    }

    pub fn entries(&self) -> &[Periodicity] {
        &self.entries
    }

    /// Generator rows over the coefficient basis `(1, σ, λ_0, …)`.
    pub fn generator_matrix(&self) -> Vec<Vec<i128>> {
        self.entries.iter().map(|p| p.rep.coeff_vec()).collect()
    }

    /// Integer-lattice membership with certificate: coefficients `a` with
    /// `Σ aᵢ·entryᵢ = v`, re-verified by recombination before returning.
    ///
    /// ```
    /// use ro2::ledger::Ledger;
    /// use ro2::VirtualRep;
    /// let l = Ledger::standard(2, 2).unwrap();
    /// let v: VirtualRep = "14 + 2σ @C4".parse().unwrap();
    /// let cert = l.contains(&v).unwrap().unwrap();
    /// assert_eq!(cert, vec![4, 0, 0, 1]); // 4·ρ + special
    /// ```
    pub fn contains(&self, v: &VirtualRep) -> Result<Option<Vec<i128>>> {
        if v.group() != self.group() {
            return Err(Error::GroupMismatch { expected: self.g, found: v.group().n() });
        }
        let gens = self.generator_matrix();
        let Some(cert) = lattice::Hnf::new(&gens).solve(&v.coeff_vec()) else {
            return Ok(None);
        };
        assert_eq!(&self.recombine(&cert), v, "certificate failed recombination");
        Ok(Some(cert))
    }

    /// `Σ aᵢ·entryᵢ` for a coefficient vector over the entries.
    pub fn recombine(&self, coeffs: &[i128]) -> VirtualRep {
        assert_eq!(coeffs.len(), self.entries.len(), "certificate length mismatch");
        let mut acc = VirtualRep::zero(self.group());
        for (p, &a) in self.entries.iter().zip(coeffs) {
            acc = acc + p.rep.clone() * a;
        }
        acc
    }

    /// The smallest positive `k` with `k`·(trivial) in the span: the
    /// integer periodicity of the ledger.
    ///
    /// ```
    /// use ro2::ledger::Ledger;
    /// assert_eq!(Ledger::standard(2, 2).unwrap().integer_periodicity(), Some(32));
    /// assert_eq!(Ledger::standard(8, 2).unwrap().integer_periodicity(), Some(2048));
    /// ```
    pub fn integer_periodicity(&self) -> Option<i128> {
        lattice::axis_intersection(&self.generator_matrix(), 0)
    }
}
