//! Dirichlet characters mod an odd prime p, their Gauss sums, Kloosterman
//! sums with the Weil-bound diagnostic, and the composite character sum
//! arising in the major-arc analysis together with its closed form
//!
//!   C(n, M, q) = S(M, n * pbar^2; q) * conj(chi)(-n * qbar^2) * tau(chi),
//!
//! where pbar inverts p mod q and qbar inverts q mod p. The brute-force
//! double sum and the closed form are kept as independent routes and
//! compared term by term in the test suites.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::ntheory::{divisor_count, euler_phi, gcd, is_prime, mod_inverse, primitive_root};
use crate::util::e_ratio;

/// Value table of one Dirichlet character mod a prime.
#[derive(Debug, Clone)]
pub struct CharTable {
    /// Odd prime modulus.
    pub p: u64,
    /// Character index: chi(g^k) = e(j k / (p-1)) for the fixed
    /// primitive root g. j = 0 is the trivial character.
    pub j: u64,
    /// Smallest primitive root mod p.
    pub g: u64,
    /// values[r] = chi(r) for r in [0, p); values[0] = 0.
    pub values: Vec<Complex64>,
    /// tau(chi) = sum_b chi(b) e(b/p).
    pub gauss: Complex64,
}

impl CharTable {
    pub fn is_trivial(&self) -> bool {
        self.j == 0
    }

    /// chi at any integer, reduced mod p.
    pub fn chi(&self, n: i64) -> Complex64 {
        self.values[n.rem_euclid(self.p as i64) as usize]
    }

    /// conj(chi) at any integer.
    pub fn chi_bar(&self, n: i64) -> Complex64 {
        self.chi(n).conj()
    }
}

/// Build the full value table of the character with index j mod p.
///
/// Deterministic for fixed (p, j): the primitive root is the smallest
/// one, so the same index always names the same character.
pub fn build_char(p: u64, j: u64) -> Result<CharTable> {
    if !is_prime(p) || p < 3 {
        return Err(Error::NotPrime(p));
    }
    if j >= p - 1 {
        return Err(Error::OutOfRange(format!(
            "character index {} outside [0, {})",
            j,
            p - 1
        )));
    }
    let g = primitive_root(p)?;
    let mut values = vec![Complex64::new(0.0, 0.0); p as usize];
    let mut x = 1u64;
    for k in 0..p - 1 {
        values[x as usize] = e_ratio((j * k % (p - 1)) as i64, p - 1);
        x = x * g % p;
    }
    let mut gauss = Complex64::new(0.0, 0.0);
    for b in 1..p {
        gauss += values[b as usize] * e_ratio(b as i64, p);
    }
    Ok(CharTable { p, j, g, values, gauss })
}

/// tau(chi) for a nontrivial character; |tau| = sqrt(p).
pub fn gauss_sum(chi: &CharTable) -> Result<Complex64> {
    if chi.is_trivial() {
        return Err(Error::TrivialCharacter);
    }
    Ok(chi.gauss)
}

/// Discrepancy |chi(n) - (1/tau(conj chi)) sum_b conj(chi)(b) e(bn/p)|
/// of the additive-character expansion of chi.
pub fn char_fourier_check(chi: &CharTable, n: i64) -> Result<f64> {
    if chi.is_trivial() {
        return Err(Error::TrivialCharacter);
    }
    let p = chi.p;
    let mut tau_bar = Complex64::new(0.0, 0.0);
    let mut expansion = Complex64::new(0.0, 0.0);
    for b in 1..p {
        let cb = chi.values[b as usize].conj();
        tau_bar += cb * e_ratio(b as i64, p);
        expansion += cb * e_ratio((b as i128 * n as i128).rem_euclid(p as i128) as i64, p);
    }
    Ok((chi.chi(n) - expansion / tau_bar).norm())
}

/// Kloosterman sum S(a, b; q) = sum over invertible x mod q of
/// e((a x + b xbar)/q). Real by the x <-> -x pairing; the imaginary
/// part is checked against 1e-10 and discarded. S(a, b; 1) = 1 by
/// convention so the q = 1 reduction of the closed form is seamless.
pub fn kloosterman(a: i64, b: i64, q: u64) -> f64 {
    assert!(q >= 1);
    if q == 1 {
        return 1.0;
    }
    let aq = a.rem_euclid(q as i64) as u64;
    let bq = b.rem_euclid(q as i64) as u64;
    let mut s = Complex64::new(0.0, 0.0);
    for x in 1..q {
        if gcd(x, q) != 1 {
            continue;
        }
        let xbar = mod_inverse(x as i64, q).expect("unit is invertible").value;
        let phase = ((aq as u128 * x as u128 + bq as u128 * xbar as u128) % q as u128) as i64;
        s += e_ratio(phase, q);
    }
    assert!(
        s.im.abs() <= 1e-10,
        "Kloosterman sum S({},{};{}) has imaginary part {}",
        a,
        b,
        q,
        s.im
    );
    s.re
}

/// |S(a, b; q)| / (d(q) sqrt(q) sqrt(gcd(a, b, q))); the Weil bound
/// asserts this is at most 1.
pub fn weil_ratio(a: i64, b: i64, q: u64) -> f64 {
    let s = kloosterman(a, b, q).abs();
    let g = gcd(gcd(a.unsigned_abs(), b.unsigned_abs()), q);
    let g = if g == 0 { q } else { g };
    s / (divisor_count(q) as f64 * (q as f64).sqrt() * (g as f64).sqrt())
}

fn check_charsum_args(q: u64, chi: &CharTable) -> Result<()> {
    if q < 1 {
        return Err(Error::BadParameters("q must be >= 1".into()));
    }
    if gcd(q, chi.p) != 1 {
        return Err(Error::ModuliNotCoprime { q, p: chi.p });
    }
    if chi.is_trivial() {
        return Err(Error::TrivialCharacter);
    }
    Ok(())
}

/// Direct double-sum evaluation of the composite character sum
///
///   C = sum*_{a mod q} e(M a / q)
///       sum_{b mod p} conj(chi)(b) e(-cbar n / (p q)),  c = b q - a p.
///
/// Terms with p | b vanish through conj(chi)(0) = 0, and for the rest
/// (c, pq) = 1, so cbar is well defined.
pub fn charsum_brute(n: u64, m_sum: u64, q: u64, chi: &CharTable) -> Result<Complex64> {
    check_charsum_args(q, chi)?;
    let p = chi.p;
    let pq = p * q;
    let mut total = Complex64::new(0.0, 0.0);
    for a in 1..=q {
        if gcd(a, q) != 1 {
            continue;
        }
        let outer = e_ratio((m_sum % q) as i64 * a as i64, q);
        let mut inner = Complex64::new(0.0, 0.0);
        for b in 1..p {
            let c = (b as i128 * q as i128 - a as i128 * p as i128).rem_euclid(pq as i128) as i64;
            let cbar = mod_inverse(c, pq)?.value;
            let phase = (cbar as i128 * n as i128).rem_euclid(pq as i128) as i64;
            inner += chi.values[b as usize].conj() * e_ratio(-phase, pq);
        }
        total += outer * inner;
    }
    Ok(total)
}

/// Closed form of the same sum:
/// S(M, n pbar^2; q) * conj(chi)(-n qbar^2) * tau(chi).
pub fn charsum_closed(n: u64, m_sum: u64, q: u64, chi: &CharTable) -> Result<Complex64> {
    check_charsum_args(q, chi)?;
    let p = chi.p;
    let kl = if q == 1 {
        1.0
    } else {
        let pbar = mod_inverse(p as i64, q)?.value;
        let b = (n as u128 * pbar as u128 % q as u128 * pbar as u128 % q as u128) as i64;
        kloosterman(m_sum as i64, b, q)
    };
    let qbar = mod_inverse(q as i64, p)?.value;
    let arg = -((n as i128 * qbar as i128 % p as i128 * qbar as i128) % p as i128) as i64;
    Ok(kl * chi.chi_bar(arg) * chi.gauss)
}

/// |C| / (sqrt(p) d(q) sqrt(q) sqrt(gcd(n, q))); the major-arc bound
/// asserts <= 1, with gcd(M, n, q) majorized by gcd(n, q).
pub fn charsum_bound_ratio(n: u64, m_sum: u64, q: u64, chi: &CharTable) -> Result<f64> {
    let c = charsum_closed(n, m_sum, q, chi)?;
    let g = gcd(n, q);
    let g = if g == 0 { q } else { g };
    let denom =
        (chi.p as f64).sqrt() * divisor_count(q) as f64 * (q as f64).sqrt() * (g as f64).sqrt();
    Ok(c.norm() / denom)
}

/// Total measure-phi(q) weighted count of coprime residues, exposed for
/// arc bookkeeping.
pub fn unit_count(q: u64) -> u64 {
    euler_phi(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_mod_3() {
        let chi = build_char(3, 1).unwrap();
        assert!((chi.chi(1) - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        assert!((chi.chi(2) - Complex64::new(-1.0, 0.0)).norm() < 1e-14);
        // tau = e(1/3) - e(2/3) = i sqrt(3)
        let tau = gauss_sum(&chi).unwrap();
        assert!((tau - Complex64::new(0.0, 3f64.sqrt())).norm() < 1e-12);
    }

    #[test]
    fn quadratic_char_mod_5() {
        let chi = build_char(5, 2).unwrap();
        assert!((chi.chi(4) - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        assert!((chi.chi(2) - Complex64::new(-1.0, 0.0)).norm() < 1e-14);
        assert!((chi.chi(3) - Complex64::new(-1.0, 0.0)).norm() < 1e-14);
        // Classical evaluation: tau = sqrt(5), real and positive.
        let tau = gauss_sum(&chi).unwrap();
        assert!((tau - Complex64::new(5f64.sqrt(), 0.0)).norm() < 1e-12);
    }

    #[test]
    fn trivial_character_flagged() {
        let chi = build_char(7, 0).unwrap();
        assert!(chi.is_trivial());
        assert_eq!(gauss_sum(&chi).unwrap_err(), Error::TrivialCharacter);
        assert_eq!(char_fourier_check(&chi, 1).unwrap_err(), Error::TrivialCharacter);
    }

    #[test]
    fn gauss_modulus_sweep() {
        for p in crate::ntheory::primes_up_to(101) {
            if p < 3 {
                continue;
            }
            for j in 1..p - 1 {
                let chi = build_char(p, j).unwrap();
                let tau = gauss_sum(&chi).unwrap();
                assert!(
                    (tau.norm() - (p as f64).sqrt()).abs() <= 1e-10,
                    "p={} j={}",
                    p,
                    j
                );
                // tau(chi) * conj(tau(chi)) = p
                assert!((tau * tau.conj() - Complex64::new(p as f64, 0.0)).norm() <= 1e-9);
            }
        }
    }

    #[test]
    fn multiplicativity_exhaustive() {
        for p in crate::ntheory::primes_up_to(101) {
            if p < 3 {
                continue;
            }
            for j in 0..p - 1 {
                let chi = build_char(p, j).unwrap();
                for m in 0..p {
                    for n in 0..p {
                        let prod = chi.values[(m * n % p) as usize];
                        let split = chi.values[m as usize] * chi.values[n as usize];
                        assert!((prod - split).norm() < 1e-12, "p={} j={} m={} n={}", p, j, m, n);
                    }
                }
            }
        }
    }

    #[test]
    fn fourier_expansion_sweeps() {
        for p in [5u64, 13] {
            for j in 1..p - 1 {
                let chi = build_char(p, j).unwrap();
                for n in 0..p as i64 {
                    assert!(char_fourier_check(&chi, n).unwrap() <= 1e-10);
                }
            }
        }
    }

    #[test]
    fn kloosterman_values() {
        assert_eq!(kloosterman(1, 1, 1), 1.0);
        assert!((kloosterman(1, 1, 2) - 1.0).abs() < 1e-12);
        assert!((kloosterman(1, 1, 3) + 1.0).abs() < 1e-12);
    }

    #[test]
    fn kloosterman_symmetry() {
        for q in 1..=50u64 {
            for a in 0..q.min(20) {
                for b in 0..q.min(20) {
                    let s1 = kloosterman(a as i64, b as i64, q);
                    let s2 = kloosterman(b as i64, a as i64, q);
                    assert!((s1 - s2).abs() < 1e-9, "q={} a={} b={}", q, a, b);
                }
            }
        }
    }

    #[test]
    fn weil_ratio_examples() {
        let r = weil_ratio(1, 1, 3);
        assert!((r - 1.0 / (2.0 * 3f64.sqrt())).abs() < 1e-12);
        // Degenerate Ramanujan case: S(0,0;q) = phi(q).
        for q in 1..=60u64 {
            assert!(weil_ratio(0, 0, q) <= 1.0 + 1e-12, "q={}", q);
        }
    }

    #[test]
    fn charsum_brute_equals_closed_spot() {
        let chi = build_char(5, 2).unwrap();
        let b = charsum_brute(1, 1, 2, &chi).unwrap();
        let c = charsum_closed(1, 1, 2, &chi).unwrap();
        assert!((b - c).norm() <= 1e-10);
        // This particular case evaluates to sqrt(5).
        assert!((b - Complex64::new(5f64.sqrt(), 0.0)).norm() < 1e-10);
    }

    #[test]
    fn charsum_q1_reduction() {
        let chi = build_char(7, 2).unwrap();
        for n in 1..14u64 {
            let b = charsum_brute(n, 3, 1, &chi).unwrap();
            let c = charsum_closed(n, 3, 1, &chi).unwrap();
            assert!((b - c).norm() <= 1e-10, "n={}", n);
            let direct = chi.chi_bar(-(n as i64)) * chi.gauss;
            assert!((c - direct).norm() <= 1e-10);
        }
    }

    #[test]
    fn charsum_vanishes_on_multiples_of_p() {
        let chi = build_char(5, 1).unwrap();
        for q in [1u64, 2, 3, 4, 6] {
            let b = charsum_brute(10, 7, q, &chi).unwrap();
            let c = charsum_closed(10, 7, q, &chi).unwrap();
            assert!(b.norm() <= 1e-10, "q={}", q);
            assert!(c.norm() <= 1e-12, "q={}", q);
        }
    }

    #[test]
    fn charsum_grid_small() {
        for p in [5u64, 7] {
            for j in 1..p - 1 {
                let chi = build_char(p, j).unwrap();
                for q in 1..=8u64 {
                    if gcd(q, p) != 1 {
                        continue;
                    }
                    for n in 1..=10u64 {
                        for m in 1..=5u64 {
                            let b = charsum_brute(n, m, q, &chi).unwrap();
                            let c = charsum_closed(n, m, q, &chi).unwrap();
                            assert!(
                                (b - c).norm() <= 1e-10,
                                "p={} j={} q={} n={} m={}",
                                p,
                                j,
                                q,
                                n,
                                m
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn charsum_bound_ratio_holds() {
        let chi = build_char(13, 1).unwrap();
        for q in 1..=20u64 {
            for n in 1..=30u64 {
                let r = charsum_bound_ratio(n, 7, q, &chi).unwrap();
                assert!(r <= 1.0 + 1e-12, "q={} n={} ratio={}", q, n, r);
            }
        }
    }

    #[test]
    fn charsum_rejects_bad_moduli() {
        let chi = build_char(5, 1).unwrap();
        assert_eq!(
            charsum_brute(1, 1, 10, &chi).unwrap_err(),
            Error::ModuliNotCoprime { q: 10, p: 5 }
        );
    }
}
