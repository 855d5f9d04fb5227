//! Elementary arithmetic shared by every other module: gcd, modular
//! inverse, divisor counts, the Moebius function, primitive roots and a
//! deterministic primality check.
//!
//! Everything here is a pure function on machine integers; all the
//! desk-scale moduli in this crate are far below the ranges where trial
//! division or 128-bit intermediates become a problem.

use crate::error::{Error, Result};

/// A residue class value together with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Residue {
    pub value: u64,
    pub modulus: u64,
}

impl Residue {
    pub fn new(value: u64, modulus: u64) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        Residue { value: value % modulus, modulus }
    }
}

/// Greatest common divisor with the gcd(0,0) = 0 convention.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// gcd for signed arguments (absolute values).
pub fn gcd_i(a: i64, b: i64) -> u64 {
    gcd(a.unsigned_abs(), b.unsigned_abs())
}

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b).
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Inverse of `a` mod `m`, m >= 2.
pub fn mod_inverse(a: i64, m: u64) -> Result<Residue> {
    assert!(m >= 2, "modulus must be >= 2");
    let am = (a.rem_euclid(m as i64)) as i128;
    let (g, x, _) = ext_gcd(am, m as i128);
    if g != 1 {
        return Err(Error::NotInvertible { a, modulus: m });
    }
    let inv = x.rem_euclid(m as i128) as u64;
    Ok(Residue::new(inv, m))
}

/// a^e mod m with 128-bit intermediates.
pub fn pow_mod(a: u64, mut e: u64, m: u64) -> u64 {
    let mut base = (a % m) as u128;
    let m128 = m as u128;
    let mut acc: u128 = 1 % m128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m128;
        }
        base = base * base % m128;
        e >>= 1;
    }
    acc as u64
}

/// Number of positive divisors of n >= 1.
pub fn divisor_count(n: u64) -> u64 {
    assert!(n >= 1);
    let mut n = n;
    let mut count = 1u64;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0u64;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            count *= e + 1;
        }
        d += 1;
    }
    if n > 1 {
        count *= 2;
    }
    count
}

/// All positive divisors of n, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Moebius function mu(n) in {-1, 0, 1}.
pub fn moebius(n: u64) -> i32 {
    assert!(n >= 1);
    let mut n = n;
    let mut primes = 0u32;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            primes += 1;
        }
        d += 1;
    }
    if n > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Euler totient phi(n).
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut n = n;
    let mut result = n;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            while n % d == 0 {
                n /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Deterministic primality by trial division. Intended for the small
/// moduli this crate works with; no probabilistic machinery.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Smallest primitive root g >= 2 of an odd prime p.
///
/// Deterministic so that character tables indexed by (p, j) are
/// reproducible run to run.
pub fn primitive_root(p: u64) -> Result<u64> {
    if !is_prime(p) || p < 3 {
        return Err(Error::NotPrime(p));
    }
    let phi = p - 1;
    // distinct prime factors of p-1
    let mut factors = Vec::new();
    let mut m = phi;
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    for g in 2..p {
        if factors.iter().all(|&f| pow_mod(g, phi / f, p) != 1) {
            return Ok(g);
        }
    }
    unreachable!("every prime has a primitive root");
}

/// Primes up to and including `limit`, by sieve.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2usize;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

/// Divisor-count table d(1..=n) by sieve, for bulk consumers.
pub fn divisor_count_table(n: usize) -> Vec<u64> {
    let mut table = vec![0u64; n + 1];
    for d in 1..=n {
        let mut m = d;
        while m <= n {
            table[m] += 1;
            m += d;
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(35, 64), 1);
        assert_eq!(gcd(0, 0), 0);
    }

    #[test]
    fn mod_inverse_basics() {
        assert_eq!(mod_inverse(1, 97).unwrap().value, 1);
        assert_eq!(mod_inverse(3, 7).unwrap().value, 5);
        assert_eq!(
            mod_inverse(4, 6),
            Err(Error::NotInvertible { a: 4, modulus: 6 })
        );
    }

    #[test]
    fn mod_inverse_sweep() {
        // a * mod_inverse(a, m) == 1 (mod m) for coprime pairs, m <= 1e4.
        for m in (2..10_000u64).step_by(101) {
            for a in 1..m.min(60) {
                if gcd(a, m) == 1 {
                    let inv = mod_inverse(a as i64, m).unwrap().value;
                    assert_eq!(a as u128 * inv as u128 % m as u128, 1);
                }
            }
        }
    }

    #[test]
    fn divisor_count_basics() {
        assert_eq!(divisor_count(1), 1);
        assert_eq!(divisor_count(12), 6);
        for p in [2u64, 3, 5, 97, 9973] {
            assert_eq!(divisor_count(p), 2);
        }
    }

    #[test]
    fn divisor_count_multiplicative() {
        // d(mn) = d(m) d(n) for coprime m, n with mn <= 1e4 (exhaustive).
        let table = divisor_count_table(10_000);
        for m in 1..=10_000u64 {
            for n in 1..=(10_000 / m) {
                if gcd(m, n) == 1 {
                    assert_eq!(table[(m * n) as usize], table[m as usize] * table[n as usize]);
                }
            }
        }
    }

    #[test]
    fn moebius_basics() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(30), -1);
        assert_eq!(moebius(12), 0);
    }

    #[test]
    fn moebius_sum_identity() {
        // sum_{d|n} mu(d) = [n == 1] for all n <= 1e4.
        for n in 1..=10_000u64 {
            let s: i32 = divisors(n).iter().map(|&d| moebius(d)).sum();
            assert_eq!(s, if n == 1 { 1 } else { 0 }, "n = {}", n);
        }
    }

    #[test]
    fn primitive_root_basics() {
        assert_eq!(primitive_root(3).unwrap(), 2);
        assert_eq!(primitive_root(7).unwrap(), 3);
        assert_eq!(primitive_root(8), Err(Error::NotPrime(8)));
    }

    #[test]
    fn primitive_root_generates() {
        for p in [5u64, 13, 101, 997] {
            let g = primitive_root(p).unwrap();
            let mut seen = vec![false; p as usize];
            let mut x = 1u64;
            for _ in 0..p - 1 {
                x = x * g % p;
                seen[x as usize] = true;
            }
            assert_eq!(seen.iter().filter(|&&b| b).count() as u64, p - 1);
        }
    }

    #[test]
    fn totient_agrees_with_definition() {
        for n in 1..500u64 {
            let direct = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
            assert_eq!(euler_phi(n), direct);
        }
    }

    #[test]
    fn divisor_table_matches_pointwise() {
        let t = divisor_count_table(2000);
        for n in 1..=2000u64 {
            assert_eq!(t[n as usize], divisor_count(n));
        }
    }
}
