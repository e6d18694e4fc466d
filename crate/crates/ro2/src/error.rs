use thiserror::Error;

/// Errors for domain violations. Every operation in this crate is total on
/// its stated domain; anything outside it comes back as one of these rather
/// than a panic, so callers (the CLI in particular) can report cleanly.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A group exponent outside the supported range.
    #[error("group exponent n = {n} out of range (need {min} <= n <= {max})")]
    ExponentRange { n: u32, min: u32, max: u32 },

    /// The odd part `m` of a height must be odd and positive.
    #[error("m = {m} must be odd and positive")]
    OddPartRequired { m: u64 },

    /// A subgroup exponent outside `1..=n`.
    #[error("subgroup exponent r = {r} out of range for C_{{2^{n}}}")]
    SubgroupRange { r: u32, n: u32 },

    /// Arithmetic between representations of different groups.
    #[error("group mismatch: C_{{2^{expected}}} vs C_{{2^{found}}}")]
    GroupMismatch { expected: u32, found: u32 },

    /// A rotation index outside `0..=n-2` (or a coefficient slice too long).
    #[error("lambda index {i} out of range for C_{{2^{n}}}")]
    LambdaIndex { i: u32, n: u32 },

    /// Heights must be divisible by the order of the subgroup lattice level:
    /// `2^(g-1) | h`.
    #[error("height h = {h} is not divisible by 2^{}, so C_{{2^{g}}} does not act", g - 1)]
    HeightNotDivisible { h: u64, g: u32 },

    /// Lemma parameters outside their stated ranges.
    #[error("lemma parameter out of range: {what}")]
    LemmaRange { what: String },

    /// The 2-adic valuation of zero is undefined.
    #[error("2-adic valuation of 0 is undefined")]
    ZeroValuation,

    /// An operation that requires virtual dimension zero got something else.
    #[error("virtual dimension is {dim}, expected 0")]
    DimensionNonZero { dim: i128 },

    /// A shift was requested relative to a level whose ledger admits none.
    #[error("no integer shift derivable from the ledger at h = {h}, g = {g}")]
    NoShiftAtLevel { h: u64, g: u32 },

    /// A coefficient left the exactly-representable i128 range.
    #[error("coefficient overflow: {what} does not fit in 128 bits")]
    Overflow { what: String },

    /// Malformed input to the representation parser.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
