use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must satisfy 2 <= n <= 2^63 - 1, got {0}")]
    InvalidModulus(u64),

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("cannot factorize {0}: need n >= 2")]
    FactorizeBelowTwo(u64),

    #[error("{value} is not a vertex of the zero-divisor graph of Z_{n}")]
    NotAVertex { n: u64, value: u64 },

    #[error("({a}, {b}) is not an edge of the zero-divisor graph of Z_{n}")]
    NotAnEdge { n: u64, a: u64, b: u64 },

    /// The prime-distance formula only covers distinct primes p, q dividing
    /// n with n > p*q.
    #[error("prime distance formula does not apply to (n={n}, p={p}, q={q}): {reason}")]
    PrimeDistanceNotApplicable {
        n: u64,
        p: u64,
        q: u64,
        reason: &'static str,
    },

    #[error("n = {n} exceeds the oracle cap of {cap}; use the theorem engine or raise the cap")]
    OracleCapExceeded { n: u64, cap: u64 },

    #[error("zero-divisor graph of Z_{n} is disconnected")]
    Disconnected { n: u64 },

    #[error("invalid range [{min}, {max}]: need 2 <= min <= max")]
    InvalidRange { min: u64, max: u64 },

    #[error("unknown check kind `{0}`")]
    UnknownCheck(String),
}
