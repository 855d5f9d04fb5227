//! Small shared numeric helpers.

use num_complex::Complex64;
use std::f64::consts::TAU;

/// The additive character e(x) = exp(2*pi*i*x).
///
/// The argument is reduced mod 1 before the polar evaluation so that
/// large rational phases (k*a/q with k in the tens of thousands) keep
/// full precision.
#[inline]
pub fn e_unit(x: f64) -> Complex64 {
    let frac = x - x.floor();
    Complex64::from_polar(1.0, TAU * frac)
}

/// e(num/den) for integer phases, reduced exactly before going to floats.
#[inline]
pub fn e_ratio(num: i64, den: u64) -> Complex64 {
    let d = den as i64;
    let r = num.rem_euclid(d);
    Complex64::from_polar(1.0, TAU * (r as f64) / (den as f64))
}

/// Ordinary least squares y = slope * x + intercept.
///
/// Returns (slope, intercept, residual_rms). Caller guarantees >= 2 points.
pub fn least_squares(points: &[(f64, f64)]) -> (f64, f64, f64) {
    let n = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    let denom = n * sxx - sx * sx;
    let slope = (n * sxy - sx * sy) / denom;
    let intercept = (sy - slope * sx) / n;
    let ss: f64 = points
        .iter()
        .map(|&(x, y)| {
            let r = y - slope * x - intercept;
            r * r
        })
        .sum();
    (slope, intercept, (ss / n).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_unit_quarter_turn() {
        let z = e_unit(0.25);
        assert!((z.re).abs() < 1e-15);
        assert!((z.im - 1.0).abs() < 1e-15);
    }

    #[test]
    fn e_unit_periodic() {
        let a = e_unit(-7.0 + 0.3);
        let b = e_unit(0.3);
        assert!((a - b).norm() < 1e-12);
    }

    #[test]
    fn e_ratio_matches_e_unit() {
        for den in 1..=23u64 {
            for num in -50..50i64 {
                let a = e_ratio(num, den);
                let b = e_unit(num as f64 / den as f64);
                assert!((a - b).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn least_squares_exact_line() {
        let pts: Vec<(f64, f64)> = (0..8).map(|i| (i as f64, 3.0 * i as f64 - 1.0)).collect();
        let (s, c, r) = least_squares(&pts);
        assert!((s - 3.0).abs() < 1e-12);
        assert!((c + 1.0).abs() < 1e-12);
        assert!(r < 1e-12);
    }
}
