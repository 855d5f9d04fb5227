//! Fourier coefficients of the weight-12 level-1 cusp form: exact integer
//! coefficients tau(n), normalized eigenvalues lambda(n) = tau(n) / n^{11/2},
//! and the coefficient properties downstream modules rely on (Hecke
//! multiplicativity, the divisor-function bound, mean-square growth,
//! short-interval sums).
//!
//! The integer coefficients are computed from the sparse pentagonal-number
//! expansion of prod (1 - q^n), folded 24 times with checked 128-bit
//! arithmetic. tau(n) grows like n^{11/2} d(n), which stays far below the
//! i128 range for every table size this crate accepts; any overflow is
//! caught by the checked ops rather than wrapping.

use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::ntheory::{divisor_count_table, divisors, gcd, moebius};
use crate::util::least_squares;

/// Hard cap on coefficient table length. Keeps the checked-i128
/// convolution comfortably inside its overflow margin and bounds memory.
pub const MAX_TAU_N: usize = 1 << 18;

/// Integer coefficients a(n) and normalized eigenvalues lambda(n) of a
/// holomorphic cusp form, 1-indexed (entry 0 is unused).
#[derive(Debug, Clone)]
pub struct FormTable {
    /// Even weight kappa (12 for the discriminant form).
    pub weight: u32,
    /// Exact integer coefficients; empty for synthetic tables built with
    /// [`FormTable::from_lambda`].
    pub a: Vec<i128>,
    /// lambda(n) = a(n) * n^{-(kappa-1)/2}.
    pub lambda: Vec<f64>,
}

/// Sparse pentagonal expansion of prod_{n>=1} (1 - q^n) up to degree
/// `max_deg`: pairs (exponent k(3k-1)/2, sign (-1)^k) for k != 0, sorted
/// by exponent. The k = 0 term (exponent 0, sign +1) is implicit.
fn pentagonal_terms(max_deg: usize) -> Vec<(usize, i8)> {
    let mut terms = Vec::new();
    let mut k: i64 = 1;
    loop {
        let g1 = k * (3 * k - 1) / 2;
        let g2 = k * (3 * k + 1) / 2;
        let sign = if k % 2 == 0 { 1i8 } else { -1i8 };
        let mut any = false;
        if (g1 as usize) <= max_deg {
            terms.push((g1 as usize, sign));
            any = true;
        }
        if (g2 as usize) <= max_deg {
            terms.push((g2 as usize, sign));
            any = true;
        }
        if !any {
            break;
        }
        k += 1;
    }
    terms.sort_unstable();
    terms
}

fn overflow() -> Error {
    Error::ResourceLimit("i128 overflow in coefficient convolution".into())
}

/// One in-place fold with the sparse pentagonal series. Descending index
/// order lets the buffer serve as both input and output.
fn fold_pentagonal(dense: &mut [i128], terms: &[(usize, i8)]) -> Result<()> {
    for j in (0..dense.len()).rev() {
        let mut acc = dense[j];
        for &(g, sign) in terms {
            if g > j {
                break;
            }
            let v = dense[j - g];
            acc = if sign > 0 {
                acc.checked_add(v).ok_or_else(overflow)?
            } else {
                acc.checked_sub(v).ok_or_else(overflow)?
            };
        }
        dense[j] = acc;
    }
    Ok(())
}

/// tau(1..=n_max) as exact integers; the returned vector is 1-indexed
/// with length n_max + 1 and a zero placeholder at index 0.
///
/// tau(n) is the coefficient of q^{n-1} in prod (1 - q^n)^24, so the
/// series is folded 24 times and shifted by one at the end.
pub fn delta_coefficients(n_max: usize) -> Result<Vec<i128>> {
    if n_max < 1 {
        return Err(Error::OutOfRange("need n_max >= 1".into()));
    }
    if n_max > MAX_TAU_N {
        return Err(Error::ResourceLimit(format!(
            "tau table length {} exceeds cap {}",
            n_max, MAX_TAU_N
        )));
    }
    let deg = n_max - 1;
    let terms = pentagonal_terms(deg);
    let mut dense = vec![0i128; deg + 1];
    dense[0] = 1;
    for _ in 0..24 {
        fold_pentagonal(&mut dense, &terms)?;
    }
    let mut tau = vec![0i128; n_max + 1];
    tau[1..].copy_from_slice(&dense);
    Ok(tau)
}

/// Truncated product of two power series with checked arithmetic.
fn poly_mul_trunc(a: &[i128], b: &[i128], len: usize) -> Result<Vec<i128>> {
    let mut out = vec![0i128; len];
    for (i, &ai) in a.iter().enumerate().take(len) {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate().take(len - i) {
            if bj == 0 {
                continue;
            }
            let prod = ai.checked_mul(bj).ok_or_else(overflow)?;
            out[i + j] = out[i + j].checked_add(prod).ok_or_else(overflow)?;
        }
    }
    Ok(out)
}

/// Independent construction of tau by repeated squaring of the dense
/// eta series: E^24 = ((E^2)^2)^2 squared once more times E^8. Slower
/// than the sparse fold; used to cross-check it.
pub fn delta_coefficients_by_squaring(n_max: usize) -> Result<Vec<i128>> {
    if n_max < 1 {
        return Err(Error::OutOfRange("need n_max >= 1".into()));
    }
    if n_max > MAX_TAU_N {
        return Err(Error::ResourceLimit(format!(
            "tau table length {} exceeds cap {}",
            n_max, MAX_TAU_N
        )));
    }
    let deg = n_max - 1;
    let len = deg + 1;
    let mut e1 = vec![0i128; len];
    e1[0] = 1;
    let terms = pentagonal_terms(deg);
    for &(g, sign) in &terms {
        e1[g] = sign as i128;
    }
    let e2 = poly_mul_trunc(&e1, &e1, len)?;
    let e4 = poly_mul_trunc(&e2, &e2, len)?;
    let e8 = poly_mul_trunc(&e4, &e4, len)?;
    let e16 = poly_mul_trunc(&e8, &e8, len)?;
    let e24 = poly_mul_trunc(&e16, &e8, len)?;
    let mut tau = vec![0i128; n_max + 1];
    tau[1..].copy_from_slice(&e24);
    Ok(tau)
}

/// Normalize integer coefficients into a [`FormTable`]:
/// lambda(n) = a(n) * n^{-(kappa-1)/2}.
pub fn normalize(a: Vec<i128>, weight: u32) -> Result<FormTable> {
    if a.len() < 2 {
        return Err(Error::OutOfRange("coefficient sequence is empty".into()));
    }
    if a[1] != 1 {
        return Err(Error::BadLeadingCoefficient(a[1]));
    }
    let exp = -((weight as f64 - 1.0) / 2.0);
    let mut lambda = vec![0.0f64; a.len()];
    for n in 1..a.len() {
        lambda[n] = (a[n] as f64) * (n as f64).powf(exp);
    }
    Ok(FormTable { weight, a, lambda })
}

impl FormTable {
    /// The weight-12 table with coefficients up to n_max.
    pub fn build(n_max: usize) -> Result<Self> {
        normalize(delta_coefficients(n_max)?, 12)
    }

    /// Synthetic table from given eigenvalues (1-indexed starting at
    /// lambda(1)); integer coefficients unavailable. Used for
    /// diagnostics like the lambda == 1 stub.
    pub fn from_lambda(weight: u32, lambda_from_1: Vec<f64>) -> Self {
        let mut lambda = vec![0.0];
        lambda.extend(lambda_from_1);
        FormTable { weight, a: Vec::new(), lambda }
    }

    /// Largest n covered by the table.
    pub fn n_max(&self) -> usize {
        self.lambda.len().saturating_sub(1)
    }

    pub fn lambda(&self, n: usize) -> f64 {
        self.lambda[n]
    }

    /// |lambda(mn) - sum_{d | (m,n)} mu(d) lambda(m/d) lambda(n/d)|.
    pub fn hecke_residual(&self, m: usize, n: usize) -> Result<f64> {
        if m < 1 || n < 1 || m * n > self.n_max() {
            return Err(Error::OutOfRange(format!(
                "hecke_residual({}, {}) outside table of length {}",
                m,
                n,
                self.n_max()
            )));
        }
        let mut rhs = 0.0f64;
        for d in divisors(gcd(m as u64, n as u64)) {
            let d = d as usize;
            rhs += moebius(d as u64) as f64 * self.lambda[m / d] * self.lambda[n / d];
        }
        Ok((self.lambda[m * n] - rhs).abs())
    }

    /// Exact-integer Hecke residual on the a-sequence:
    /// a(mn) - sum_{d | (m,n)} mu(d) d^{kappa-1} a(m/d) a(n/d).
    pub fn hecke_residual_int(&self, m: usize, n: usize) -> Result<i128> {
        if self.a.is_empty() {
            return Err(Error::OutOfRange(
                "integer residual unavailable on a synthetic table".into(),
            ));
        }
        if m < 1 || n < 1 || m * n >= self.a.len() {
            return Err(Error::OutOfRange(format!(
                "hecke_residual_int({}, {}) outside table",
                m, n
            )));
        }
        let mut rhs: i128 = 0;
        for d in divisors(gcd(m as u64, n as u64)) {
            let mu = moebius(d) as i128;
            if mu == 0 {
                continue;
            }
            let dpow = (d as i128)
                .checked_pow(self.weight - 1)
                .ok_or_else(overflow)?;
            let term = self.a[m / d as usize]
                .checked_mul(self.a[n / d as usize])
                .and_then(|t| t.checked_mul(dpow))
                .and_then(|t| t.checked_mul(mu))
                .ok_or_else(overflow)?;
            rhs = rhs.checked_add(term).ok_or_else(overflow)?;
        }
        self.a[m * n].checked_sub(rhs).ok_or_else(overflow)
    }

    /// max_{n <= N} |lambda(n)| / d(n). The divisor bound asserts <= 1.
    pub fn deligne_max_ratio(&self) -> f64 {
        let n = self.n_max();
        let d = divisor_count_table(n);
        let mut max = 0.0f64;
        for i in 1..=n {
            let r = self.lambda[i].abs() / d[i] as f64;
            if r > max {
                max = r;
            }
        }
        max
    }

    /// Least-squares slope of log sum_{n<=X} lambda(n)^2 against log X
    /// over the given grid of X values.
    pub fn rankin_selberg_slope(&self, grid: &[usize]) -> Result<f64> {
        if grid.len() < 3 {
            return Err(Error::DegenerateGrid(grid.len()));
        }
        let n = self.n_max();
        let mut pts = Vec::with_capacity(grid.len());
        let mut acc = 0.0f64;
        let mut next = 1usize;
        let mut sorted = grid.to_vec();
        sorted.sort_unstable();
        for &x in &sorted {
            if x > n {
                return Err(Error::OutOfRange(format!(
                    "grid point {} beyond table length {}",
                    x, n
                )));
            }
            while next <= x {
                acc += self.lambda[next] * self.lambda[next];
                next += 1;
            }
            if acc <= 0.0 {
                return Err(Error::NonpositiveMagnitude(acc));
            }
            pts.push(((x as f64).ln(), acc.ln()));
        }
        let (slope, _, _) = least_squares(&pts);
        Ok(slope)
    }

    /// sum_{x < n <= x+y} |lambda(n)|.
    pub fn short_interval_sum(&self, x: usize, y: usize) -> Result<f64> {
        if x + y > self.n_max() {
            return Err(Error::OutOfRange(format!(
                "interval ({}, {}] beyond table length {}",
                x,
                x + y,
                self.n_max()
            )));
        }
        Ok(self.lambda[x + 1..=x + y].iter().map(|l| l.abs()).sum())
    }
}

/// Write tau(1..=N) to a text cache, one integer per line; line number
/// equals n.
pub fn write_tau_cache<P: AsRef<Path>>(path: P, tau: &[i128]) -> Result<()> {
    let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
    for &v in &tau[1..] {
        writeln!(f, "{}", v)?;
    }
    Ok(())
}

/// Read a tau cache written by [`write_tau_cache`]; returns the 1-indexed
/// vector (placeholder 0 at index 0).
pub fn read_tau_cache<P: AsRef<Path>>(path: P) -> Result<Vec<i128>> {
    let f = BufReader::new(std::fs::File::open(path)?);
    let mut tau = vec![0i128];
    for (i, line) in f.lines().enumerate() {
        let line = line?;
        let v: i128 = line
            .trim()
            .parse()
            .map_err(|_| Error::Io(format!("bad integer on line {}", i + 1)))?;
        tau.push(v);
    }
    if tau.len() < 2 || tau[1] != 1 {
        return Err(Error::BadLeadingCoefficient(*tau.get(1).unwrap_or(&0)));
    }
    Ok(tau)
}
