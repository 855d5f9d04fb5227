//! Representation counts r_ell(n) = #{(m_1, ..., m_ell) in Z^ell :
//! m_1^2 + ... + m_ell^2 = n}, both as a series truncated at n <= N and
//! in the box-constrained variant |m_i| <= floor(sqrt(X)) whose counts
//! are exactly the coefficients of the ell-th power of the quadratic
//! exponential sum.
//!
//! Counts are built by folding the one-variable sequence (1 at 0, 2 at
//! each square) with checked 64-bit arithmetic; the support of one
//! variable has only ~sqrt(N) nonzero entries, so the direct fold is
//! O(N sqrt(N)) per power and no transform is needed at desk scale.

use crate::error::{Error, Result};
use crate::ntheory::divisors;

/// Cap on the number of squares.
pub const MAX_ELL: u32 = 16;
/// Cap on the support length of a counts vector.
pub const MAX_SUPPORT: usize = 1 << 23;

/// Counts of representations by `ell` squares.
#[derive(Debug, Clone)]
pub struct ThetaCounts {
    pub ell: u32,
    /// counts[n] = number of representations of n.
    pub counts: Vec<u64>,
    /// True when the series was cut at a requested length rather than
    /// carrying its full support.
    pub truncated: bool,
    /// Box bound M on each coordinate, when box-constrained.
    pub box_bound: Option<u64>,
}

impl ThetaCounts {
    /// Largest index stored.
    pub fn n_max(&self) -> usize {
        self.counts.len() - 1
    }

    /// Total mass sum_n counts[n]; for a box build this is (2M+1)^ell.
    pub fn total_mass(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }
}

/// floor(sqrt(x)) for nonnegative real x, exact on integer squares.
pub fn sqrt_floor(x: f64) -> u64 {
    assert!(x >= 0.0);
    let mut m = x.sqrt().floor() as u64;
    while (m as f64) * (m as f64) > x {
        m -= 1;
    }
    while ((m + 1) as f64) * ((m + 1) as f64) <= x {
        m += 1;
    }
    m
}

fn overflow() -> Error {
    Error::ResourceLimit("u64 overflow in theta convolution".into())
}

/// Fold `dense` once with the one-square sequence restricted to
/// coordinates |m| <= m_bound, writing a buffer of length `out_len`.
fn fold_one_square(dense: &[u64], m_bound: u64, out_len: usize) -> Result<Vec<u64>> {
    let mut out = vec![0u64; out_len];
    for (j, &c) in dense.iter().enumerate() {
        if c == 0 || j >= out_len {
            continue;
        }
        out[j] = out[j].checked_add(c).ok_or_else(overflow)?;
        let mut m = 1u64;
        while m <= m_bound {
            let idx = j + (m * m) as usize;
            if idx >= out_len {
                break;
            }
            let add = c.checked_mul(2).ok_or_else(overflow)?;
            out[idx] = out[idx].checked_add(add).ok_or_else(overflow)?;
            m += 1;
        }
    }
    Ok(out)
}

/// r_ell(0..=n_max) by (ell-1)-fold convolution of the one-square
/// sequence, truncated at n_max.
pub fn r_ell(ell: u32, n_max: usize) -> Result<ThetaCounts> {
    if ell < 1 || ell > MAX_ELL {
        return Err(Error::OutOfRange(format!("ell = {} outside [1, {}]", ell, MAX_ELL)));
    }
    if n_max + 1 > MAX_SUPPORT {
        return Err(Error::ResourceLimit(format!(
            "support {} exceeds cap {}",
            n_max + 1,
            MAX_SUPPORT
        )));
    }
    let m_bound = sqrt_floor(n_max as f64);
    let len = n_max + 1;
    let mut dense = vec![0u64; len];
    dense[0] = 1;
    for m in 1..=m_bound {
        let idx = (m * m) as usize;
        if idx < len {
            dense[idx] = 2;
        }
    }
    for _ in 1..ell {
        dense = fold_one_square(&dense, m_bound, len)?;
    }
    Ok(ThetaCounts { ell, counts: dense, truncated: true, box_bound: None })
}

/// Box-constrained counts with every |m_i| <= floor(sqrt(X)), carrying
/// the full support [0, ell * M^2]. These are exactly the coefficients
/// of the ell-th power of the truncated quadratic sum F.
pub fn r_ell_box(ell: u32, x: f64) -> Result<ThetaCounts> {
    if ell < 1 || ell > MAX_ELL {
        return Err(Error::OutOfRange(format!("ell = {} outside [1, {}]", ell, MAX_ELL)));
    }
    if x < 1.0 {
        return Err(Error::OutOfRange(format!("box parameter X = {} < 1", x)));
    }
    let m = sqrt_floor(x);
    let m2 = (m * m) as usize;
    let final_len = ell as usize * m2 + 1;
    if final_len > MAX_SUPPORT {
        return Err(Error::ResourceLimit(format!(
            "support {} exceeds cap {}",
            final_len, MAX_SUPPORT
        )));
    }
    let mut dense = vec![0u64; m2 + 1];
    dense[0] = 1;
    for k in 1..=m {
        dense[(k * k) as usize] = 2;
    }
    for fold in 1..ell {
        let len = (fold as usize + 1) * m2 + 1;
        dense = fold_one_square(&dense, m, len)?;
    }
    Ok(ThetaCounts { ell, counts: dense, truncated: false, box_bound: Some(m) })
}

/// Exact r_2(n) for n >= 1 through the divisor formula
/// r_2(n) = 4 * sum_{d | n} chi(d), chi the nontrivial character mod 4.
/// Independent of the convolution path; used to cross-check it.
pub fn r2_oracle(n: u64) -> u64 {
    assert!(n >= 1);
    let mut s: i64 = 0;
    for d in divisors(n) {
        match d % 4 {
            1 => s += 1,
            3 => s -= 1,
            _ => {}
        }
    }
    debug_assert!(s >= 0);
    (4 * s) as u64
}

/// Least-squares slope of log(max_{n<=X} r_ell(n)) against log X over
/// dyadic X <= n_max. The size bound predicts slope <= ell/2 - 1 + o(1).
pub fn r_bound_slope(ell: u32, n_max: usize) -> Result<f64> {
    if n_max < 100 {
        return Err(Error::OutOfRange(format!("need n_max >= 100, got {}", n_max)));
    }
    let counts = r_ell(ell, n_max)?;
    let mut grid = Vec::new();
    let mut x = 64usize;
    while x <= n_max {
        grid.push(x);
        x *= 2;
    }
    if grid.len() < 3 {
        return Err(Error::DegenerateGrid(grid.len()));
    }
    let mut pts = Vec::with_capacity(grid.len());
    let mut running_max = 0u64;
    let mut next = 0usize;
    for &x in &grid {
        while next <= x {
            running_max = running_max.max(counts.counts[next]);
            next += 1;
        }
        pts.push(((x as f64).ln(), (running_max as f64).ln()));
    }
    let (slope, _, _) = crate::util::least_squares(&pts);
    Ok(slope)
}
