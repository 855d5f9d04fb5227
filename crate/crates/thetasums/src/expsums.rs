//! The two generating sums of the circle-method identity — the quadratic
//! exponential sum F(alpha) over |m| <= sqrt(X) and the coefficient sum
//! G(alpha) twisted by a character and a smooth dyadic weight — together
//! with the plateau weight itself, a finite trigonometric-polynomial
//! type with exact interval integration, Weyl-bound diagnostics, and the
//! fourth-moment count behind Hua's lemma.

use num_complex::Complex64;

use crate::characters::CharTable;
use crate::error::{Error, Result};
use crate::forms::FormTable;
use crate::theta::{r_ell_box, sqrt_floor};
use crate::util::e_unit;

/// Smooth plateau weight: 0 outside [1/2, 1], 1 on
/// [1/2 + 1/(8 delta), 1 - 1/(8 delta)], C-infinity glue on the two
/// transition windows of width 1/(8 delta).
#[derive(Debug, Clone, Copy)]
pub struct SmoothWeight {
    pub delta: f64,
}

/// The standard smooth step: 0 at t <= 0, 1 at t >= 1.
fn smooth_step(t: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    if t >= 1.0 {
        return 1.0;
    }
    let a = (-1.0 / t).exp();
    let b = (-1.0 / (1.0 - t)).exp();
    a / (a + b)
}

impl SmoothWeight {
    pub fn new(delta: f64) -> Result<Self> {
        if !(delta >= 1.0) {
            return Err(Error::BadDelta(delta));
        }
        Ok(SmoothWeight { delta })
    }

    /// Transition width 1/(8 delta).
    pub fn transition(&self) -> f64 {
        1.0 / (8.0 * self.delta)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let h = self.transition();
        if x <= 0.5 || x >= 1.0 {
            0.0
        } else if x < 0.5 + h {
            smooth_step((x - 0.5) / h)
        } else if x > 1.0 - h {
            smooth_step((1.0 - x) / h)
        } else {
            1.0
        }
    }

    /// Approximate sup-norm of the j-th derivative (j in 1..=3) by
    /// central finite differences over the transition windows. Used to
    /// record the constants C_j = sup|w^(j)| / delta^j.
    pub fn derivative_sup(&self, j: u32) -> f64 {
        assert!((1..=3).contains(&j));
        let h_tr = self.transition();
        let step = h_tr * 1.5e-3;
        let mut sup = 0.0f64;
        let mut probe = |x: f64| {
            let d = match j {
                1 => (self.eval(x + step) - self.eval(x - step)) / (2.0 * step),
                2 => {
                    (self.eval(x + step) - 2.0 * self.eval(x) + self.eval(x - step))
                        / (step * step)
                }
                _ => {
                    (self.eval(x + 2.0 * step) - 2.0 * self.eval(x + step)
                        + 2.0 * self.eval(x - step)
                        - self.eval(x - 2.0 * step))
                        / (2.0 * step * step * step)
                }
            };
            if d.abs() > sup {
                sup = d.abs();
            }
        };
        let samples = 2000;
        for i in 0..=samples {
            let t = i as f64 / samples as f64;
            probe(0.5 + t * h_tr);
            probe(1.0 - h_tr + t * h_tr);
        }
        sup
    }
}

/// Finite complex coefficient sequence over an integer frequency
/// window [lo, lo + coeffs.len()).
#[derive(Debug, Clone)]
pub struct TrigPoly {
    pub lo: i64,
    pub coeffs: Vec<Complex64>,
}

impl TrigPoly {
    pub fn new(lo: i64, coeffs: Vec<Complex64>) -> Self {
        TrigPoly { lo, coeffs }
    }

    /// Highest frequency stored (inclusive).
    pub fn hi(&self) -> i64 {
        self.lo + self.coeffs.len() as i64 - 1
    }

    /// Coefficient at frequency k (0 outside the window).
    pub fn coeff(&self, k: i64) -> Complex64 {
        if k < self.lo || k > self.hi() {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[(k - self.lo) as usize]
        }
    }

    /// Pointwise value sum_k c_k e(k alpha).
    pub fn eval(&self, alpha: f64) -> Complex64 {
        let mut s = Complex64::new(0.0, 0.0);
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c.re == 0.0 && c.im == 0.0 {
                continue;
            }
            let k = (self.lo + i as i64) as f64;
            s += c * e_unit(k * alpha);
        }
        s
    }

    /// Exact integral over [u, v]: the k = 0 coefficient contributes
    /// (v - u) c_0, every other frequency contributes
    /// c_k sin(pi k (v-u)) / (pi k) * e(k (u+v)/2).
    pub fn integral(&self, u: f64, v: f64) -> Complex64 {
        let mut s = Complex64::new(0.0, 0.0);
        let width = v - u;
        let mid = (u + v) / 2.0;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c.re == 0.0 && c.im == 0.0 {
                continue;
            }
            let k = self.lo + i as i64;
            if k == 0 {
                s += c * width;
            } else {
                let kf = k as f64;
                let amp = (std::f64::consts::PI * kf * width).sin() / (std::f64::consts::PI * kf);
                s += c * amp * e_unit(kf * mid);
            }
        }
        s
    }

    /// Full product polynomial (direct convolution).
    pub fn mul(&self, other: &TrigPoly) -> TrigPoly {
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.re == 0.0 && a.im == 0.0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TrigPoly { lo: self.lo + other.lo, coeffs: out }
    }
}

/// F(alpha) = sum_{|m| <= sqrt(X)} e(alpha m^2), evaluated directly.
pub fn f_eval(alpha: f64, x: f64) -> Complex64 {
    let m_max = sqrt_floor(x);
    let mut s = Complex64::new(1.0, 0.0);
    for m in 1..=m_max {
        s += 2.0 * e_unit(alpha * (m * m) as f64);
    }
    s
}

/// F as a trig polynomial: integer coefficients r_1-box on frequencies
/// [0, M^2].
pub fn f_coeffs(x: f64) -> TrigPoly {
    let m = sqrt_floor(x);
    let mut coeffs = vec![Complex64::new(0.0, 0.0); (m * m) as usize + 1];
    coeffs[0] = Complex64::new(1.0, 0.0);
    for k in 1..=m {
        coeffs[(k * k) as usize] = Complex64::new(2.0, 0.0);
    }
    TrigPoly { lo: 0, coeffs }
}

/// Integer support window (X/2, X] of the weighted coefficient sum.
pub fn g_support(x: f64) -> (usize, usize) {
    let n_lo = (x / 2.0).floor() as usize + 1;
    let n_hi = x.floor() as usize;
    (n_lo, n_hi)
}

/// G(alpha) = sum_n lambda(n) chi(n) e(-alpha n) w(n/X), direct sum
/// over the weight support (X/2, X].
pub fn g_eval(
    alpha: f64,
    x: f64,
    table: &FormTable,
    chi: &CharTable,
    w: &SmoothWeight,
) -> Result<Complex64> {
    let (n_lo, n_hi) = g_support(x);
    if n_hi > table.n_max() {
        return Err(Error::TableTooShort { need: n_hi, have: table.n_max() });
    }
    let mut s = Complex64::new(0.0, 0.0);
    for n in n_lo..=n_hi {
        let wv = w.eval(n as f64 / x);
        if wv == 0.0 {
            continue;
        }
        s += table.lambda(n) * wv * chi.chi(n as i64) * e_unit(-(n as f64) * alpha);
    }
    Ok(s)
}

/// Coefficient form of G: frequency -n carries lambda(n) chi(n) w(n/X).
pub fn g_coeffs(
    x: f64,
    table: &FormTable,
    chi: &CharTable,
    w: &SmoothWeight,
) -> Result<TrigPoly> {
    let (n_lo, n_hi) = g_support(x);
    if n_hi > table.n_max() {
        return Err(Error::TableTooShort { need: n_hi, have: table.n_max() });
    }
    if n_hi < n_lo {
        return Ok(TrigPoly::new(0, vec![Complex64::new(0.0, 0.0)]));
    }
    let len = n_hi - n_lo + 1;
    let lo = -(n_hi as i64);
    let mut coeffs = vec![Complex64::new(0.0, 0.0); len];
    for n in n_lo..=n_hi {
        let idx = (n_hi - n) as usize;
        // frequency lo + idx = -n
        coeffs[idx] = table.lambda(n) * w.eval(n as f64 / x) * chi.chi(n as i64);
    }
    Ok(TrigPoly { lo, coeffs })
}

/// |F(alpha)| divided by the Weyl envelope
/// X^{1/2} (1/q + X^{-1/2} + q/X)^{1/2}. Recorded as a diagnostic: the
/// inequality carries an unspecified X^epsilon.
pub fn weyl_ratio(alpha: f64, q: u64, x: f64) -> f64 {
    let f = f_eval(alpha, x).norm();
    let env = x.sqrt() * (1.0 / q as f64 + x.powf(-0.5) + q as f64 / x).sqrt();
    f / env
}

/// Exact number of solutions of m1^2 + m2^2 = m3^2 + m4^2 with all
/// |m_i| <= sqrt(X); equals the fourth moment of F over [0, 1] by
/// Parseval, computed as sum_n (box r_2(n))^2.
pub fn hua_count(x: f64) -> Result<u64> {
    if x < 1.0 {
        // box radius 0: only the all-zero tuple
        return Ok(1);
    }
    let box2 = r_ell_box(2, x)?;
    let mut total: u128 = 0;
    for &c in &box2.counts {
        total += (c as u128) * (c as u128);
    }
    total
        .try_into()
        .map_err(|_| Error::ResourceLimit("hua count exceeds u64".into()))
}

/// Riemann-sum quadrature of |F|^4 on the uniform grid of 8 M^2 + 1
/// points. Exact for the trig polynomial |F|^4 (bandwidth 4 M^2), so it
/// reproduces `hua_count` up to rounding.
pub fn hua_quadrature(x: f64) -> f64 {
    let m = sqrt_floor(x);
    let k = (8 * m * m + 1) as usize;
    let mut s = 0.0f64;
    for t in 0..k {
        let alpha = t as f64 / k as f64;
        s += f_eval(alpha, x).norm().powi(4);
    }
    s / k as f64
}
