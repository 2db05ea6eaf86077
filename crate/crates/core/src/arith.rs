//! Exact integer and modular arithmetic over `u64`.
//!
//! Everything here is a pure function. Moduli are capped at `2^63 - 1` so
//! that products always fit in a single `u128` widening multiply.

use std::fmt;

use crate::error::{Error, Result};

/// Largest modulus accepted by [`Modulus::new`].
pub const MAX_MODULUS: u64 = (1 << 63) - 1;

/// Greatest common divisor. `gcd(0, 0)` is rejected.
pub fn gcd(x: u64, y: u64) -> Result<u64> {
    if x == 0 && y == 0 {
        return Err(Error::GcdOfZeros);
    }
    Ok(gcd_or_zero(x, y))
}

/// Binary gcd with the convention `gcd(0, 0) = 0`.
pub(crate) fn gcd_or_zero(mut x: u64, mut y: u64) -> u64 {
    if x == 0 {
        return y;
    }
    if y == 0 {
        return x;
    }
    let shift = (x | y).trailing_zeros();
    x >>= x.trailing_zeros();
    loop {
        y >>= y.trailing_zeros();
        if x > y {
            std::mem::swap(&mut x, &mut y);
        }
        y -= x;
        if y == 0 {
            return x << shift;
        }
    }
}

/// `(a * b) mod n` without intermediate overflow.
#[inline]
pub fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    debug_assert!(n > 0);
    ((a as u128 * b as u128) % n as u128) as u64
}

pub fn powmod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, n);
        }
        base = mulmod(base, base, n);
        exp >>= 1;
    }
    acc
}

// These twelve bases make Miller-Rabin exact for every n < 3.3 * 10^24.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality test, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Canonical prime factorization: primes strictly increasing, exponents >= 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Number of distinct prime divisors.
    pub fn distinct_primes(&self) -> usize {
        self.factors.len()
    }

    /// Multiplies the factorization back out. Saturates at `u64::MAX`.
    pub fn product(&self) -> u64 {
        self.factors
            .iter()
            .try_fold(1u64, |acc, &(p, e)| {
                (0..e).try_fold(acc, |acc, _| acc.checked_mul(p))
            })
            .unwrap_or(u64::MAX)
    }

    /// Euler's totient of the factored number.
    pub fn totient(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| (p - 1) * p.pow(e - 1))
            .product()
    }

    pub fn is_prime(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }

    /// `Some(p)` when the factored number is a power of the single prime `p`.
    pub fn prime_power_base(&self) -> Option<(u64, u32)> {
        match self.factors.as_slice() {
            [(p, e)] => Some((*p, *e)),
            _ => None,
        }
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

const TRIAL_BOUND: u64 = 1000;

/// Factors `n >= 2`: trial division by small numbers, then Miller-Rabin and
/// Brent's variant of Pollard rho on whatever is left.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n < 2 {
        return Err(Error::FactorizeBelowTwo(n));
    }
    let mut primes = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p <= TRIAL_BOUND && p * p <= m {
        while m.is_multiple_of(p) {
            primes.push(p);
            m /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        split_large(m, &mut primes);
    }
    primes.sort_unstable();

    let mut factors: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization { factors })
}

fn split_large(m: u64, out: &mut Vec<u64>) {
    if m == 1 {
        return;
    }
    if is_prime(m) {
        out.push(m);
        return;
    }
    let d = pollard_brent(m);
    split_large(d, out);
    split_large(m / d, out);
}

/// Returns a nontrivial divisor of the odd composite `n`.
fn pollard_brent(n: u64) -> u64 {
    const BATCH: u64 = 128;
    let absdiff = |a: u64, b: u64| a.max(b) - a.min(b);

    for c in 1u64.. {
        let step = |x: u64| ((x as u128 * x as u128 + c as u128) % n as u128) as u64;
        let mut y = 2u64;
        let mut x = y;
        let mut ys = y;
        let mut g = 1u64;
        let mut r = 1u64;
        let mut q = 1u64;

        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = step(y);
                    q = mulmod(q, absdiff(x, y), n);
                }
                g = gcd_or_zero(q, n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            // Batched product hit zero; back up and retry one step at a time.
            loop {
                ys = step(ys);
                g = gcd_or_zero(absdiff(x, ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("pollard rho exhausted every increment")
}

/// A validated modulus `2 <= n <= 2^63 - 1` with its factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Modulus {
    n: u64,
    factorization: Factorization,
}

impl Modulus {
    pub fn new(n: u64) -> Result<Self> {
        if !(2..=MAX_MODULUS).contains(&n) {
            return Err(Error::InvalidModulus(n));
        }
        Ok(Modulus {
            n,
            factorization: factorize(n)?,
        })
    }

    #[inline]
    pub fn value(&self) -> u64 {
        self.n
    }

    pub fn factorization(&self) -> &Factorization {
        &self.factorization
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factorization.primes()
    }

    pub fn is_prime(&self) -> bool {
        self.factorization.is_prime()
    }

    /// `gcd(x, n)`; `gcd(0, n) = n`.
    #[inline]
    pub fn gcd_with(&self, x: u64) -> u64 {
        gcd_or_zero(x % self.n, self.n)
    }
}

/// `ann(x) = { y in [0, n) : x * y = 0 mod n }`, ascending, including 0.
///
/// These are exactly the `d` multiples of `n / d` with `d = gcd(x, n)`.
/// `x` is reduced mod `n` first.
pub fn annihilator(n: u64, x: u64) -> Vec<u64> {
    assert!(n > 0, "modulus must be positive");
    let d = gcd_or_zero(x % n, n);
    let step = n / d;
    (0..d).map(|k| k * step).collect()
}

/// All `x in [0, n)` with `a*x + b = 0 (mod n)`, ascending.
///
/// Empty iff `gcd(a, n)` does not divide `b`; otherwise exactly `gcd(a, n)`
/// solutions spaced `n / gcd(a, n)` apart.
pub fn solve_linear_congruence(a: i64, b: i64, n: u64) -> Vec<u64> {
    assert!(n > 0, "modulus must be positive");
    let a = (a as i128).rem_euclid(n as i128) as u64;
    // a*x = -b (mod n)
    let rhs = (-(b as i128)).rem_euclid(n as i128) as u64;
    let d = gcd_or_zero(a, n);
    if !rhs.is_multiple_of(d) {
        return Vec::new();
    }
    let step = n / d;
    let x0 = if step == 1 {
        0
    } else {
        let inv = mod_inverse(a / d, step).expect("a/d is a unit mod n/d");
        mulmod(inv, rhs / d, step)
    };
    (0..d).map(|k| x0 + k * step).collect()
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(m as i128) as u64)
}
