//! Truncated formal power series with exact rational coefficients, enough
//! for the generating-function route to the Scasimir coefficients.

use num_traits::{One, Zero};

use crate::scalar::{fact, Rat};

/// Polynomial in `u` truncated at degree `trunc` (inclusive), with exact
/// coefficients. Binary operations require equal truncation orders.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries {
    trunc: usize,
    coeff: Vec<Rat>,
}

impl PowerSeries {
    pub fn zero(trunc: usize) -> Self {
        PowerSeries {
            trunc,
            coeff: vec![Rat::zero(); trunc + 1],
        }
    }

    pub fn from_coeffs(trunc: usize, mut coeff: Vec<Rat>) -> Self {
        coeff.resize(trunc + 1, Rat::zero());
        PowerSeries { trunc, coeff }
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// Coefficient of `u^k` (zero beyond the truncation order).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeff.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        assert_eq!(self.trunc, other.trunc, "mismatched truncation orders");
        let coeff = self
            .coeff
            .iter()
            .zip(&other.coeff)
            .map(|(a, b)| a + b)
            .collect();
        PowerSeries {
            trunc: self.trunc,
            coeff,
        }
    }

    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        assert_eq!(self.trunc, other.trunc, "mismatched truncation orders");
        let mut out = PowerSeries::zero(self.trunc);
        for (i, a) in self.coeff.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeff.iter().enumerate() {
                if i + j > self.trunc {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                out.coeff[i + j] += a * b;
            }
        }
        out
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    /// Uses `c_0 = 1/a_0`, `c_k = -(1/a_0) Σ_{i=1..k} a_i c_{k-i}`.
    pub fn recip(&self) -> PowerSeries {
        let a0 = self.coeff(0);
        assert!(!a0.is_zero(), "cannot invert a series with zero constant term");
        let inv_a0 = a0.recip();
        let mut out = PowerSeries::zero(self.trunc);
        out.coeff[0] = inv_a0.clone();
        for k in 1..=self.trunc {
            let mut s = Rat::zero();
            for i in 1..=k {
                let a = self.coeff(i);
                if a.is_zero() {
                    continue;
                }
                s += a * out.coeff[k - i].clone();
            }
            out.coeff[k] = -(&inv_a0 * s);
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> PowerSeries {
        let mut base = self.clone();
        let mut acc = PowerSeries::from_coeffs(self.trunc, vec![Rat::one()]);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// `sinh(u)/u = Σ_m u^(2m) / (2m+1)!` to the given truncation order.
pub fn sinh_over_u(trunc: usize) -> PowerSeries {
    let mut s = PowerSeries::zero(trunc);
    let mut m = 0usize;
    while 2 * m <= trunc {
        s.coeff[2 * m] = Rat::new(1.into(), fact(2 * m as u64 + 1));
        m += 1;
    }
    s
}

/// `u/sinh(u)` as the exact reciprocal of [`sinh_over_u`].
pub fn u_over_sinh(trunc: usize) -> PowerSeries {
    sinh_over_u(trunc).recip()
}
