use thiserror::Error;

/// Everything that can go wrong across the crate: rejected inputs, range
/// gates on the exhaustive sweeps, and internal consistency violations that
/// are surfaced rather than silently absorbed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[non_exhaustive]
pub enum Error {
    /// A preference list with zero cars was supplied.
    #[error("preference list must contain at least one car")]
    EmptyPreferenceList,

    /// A preference entry was outside `1..=n`. Cars are numbered from 1.
    #[error("car {car} prefers spot {value}, which is outside 1..={n}")]
    PreferenceOutOfRange { car: usize, value: usize, n: usize },

    /// `n` fell outside the range an operation supports.
    #[error("n = {n} is outside the supported range {min}..={max}")]
    SizeOutOfRange { n: usize, min: usize, max: usize },

    /// `n` fell below the smallest size for which a quantity is defined.
    #[error("n = {n} is below the smallest supported size {min}")]
    SizeBelowMin { n: usize, min: usize },

    /// A rank range pointed past the end of the enumeration.
    #[error("rank range {start}..{end} exceeds the {total} lists of length {n}")]
    RankRangeOutOfBounds {
        start: u64,
        end: u64,
        total: u64,
        n: usize,
    },

    /// Two sort keys compared equal; positions are 0-based input indices.
    #[error("duplicate sort keys at positions {first} and {second}")]
    DuplicateKeys { first: usize, second: usize },

    /// The input slice was not a permutation of `1..=n`.
    #[error("input is not a permutation of 1..={n}")]
    NotAPermutation { n: usize },

    /// The binomial identity is only stated for `2 <= i <= n`.
    #[error("identity requires 2 <= i <= n, got i = {i} with n = {n}")]
    IdentityIndexOutOfRange { i: usize, n: usize },

    /// `n! * Q_n` did not reduce to an integer; the arithmetic is broken.
    #[error("n! * Q_n did not reduce to an integer at n = {n}")]
    NonIntegralTotal { n: usize },

    /// Lists with `n - 1` lucky cars must repeat exactly one value; the
    /// sweep found `count` lists that do not, so the split into
    /// competing/non-competing classes would be meaningless.
    #[error(
        "{count} lists with n - 1 lucky cars lack the exactly-one-duplicate \
         shape at n = {n}"
    )]
    DuplicateShapeViolation { n: usize, count: u64 },
}
