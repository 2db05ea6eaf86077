//! Shared inputs for the criterion benchmarks.

use zdg_core::arith::is_prime;

/// Deterministic composite moduli spread over `[lo, lo + count * stride)`.
pub fn composite_moduli(lo: u64, count: usize, stride: u64) -> Vec<u64> {
    (0..count as u64)
        .map(|i| lo + i * stride)
        .map(|mut n| {
            while is_prime(n) {
                n += 1;
            }
            n
        })
        .collect()
}

/// Smallest prime divisor's cofactor: a vertex present in every composite graph.
pub fn sample_vertex(n: u64) -> u64 {
    let m = zdg_core::Modulus::new(n).expect("valid modulus");
    let p = m.primes().next().expect("n >= 2");
    n / p
}
