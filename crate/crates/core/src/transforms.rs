//! Truncated power series over the rationals, free cumulants, and the
//! inversion identities satisfied by the moment series of `T*T` and of its
//! finite-N analogues.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quasinil::{stn_moment, ttn_moment, tstt_moment};

/// `Σ_{i<len} a_i z^i`, with every operation truncated to the same length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Series {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        Series { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Series::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(len: usize) -> Self {
        Series::new(vec![BigRational::zero(); len])
    }

    pub fn one(len: usize) -> Self {
        Series::monomial(0, len)
    }

    /// `z^k`, or zero if `k ≥ len`.
    pub fn monomial(k: usize, len: usize) -> Self {
        let mut s = Series::zero(len);
        if k < len {
            s.coeffs[k] = BigRational::one();
        }
        s
    }

    /// `1/(1−z)`.
    pub fn geometric(len: usize) -> Self {
        Series::new(vec![BigRational::one(); len])
    }

    /// The number of coefficients kept.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `z^i`, zero beyond the truncation.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn truncated(&self, len: usize) -> Self {
        Series::new((0..len).map(|i| self.coeff(i)).collect())
    }

    pub fn add(&self, other: &Series) -> Series {
        let len = self.len().min(other.len());
        Series::new((0..len).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect())
    }

    pub fn sub(&self, other: &Series) -> Series {
        let len = self.len().min(other.len());
        Series::new((0..len).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect())
    }

    pub fn scale(&self, c: &BigRational) -> Series {
        Series::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Series) -> Series {
        let len = self.len().min(other.len());
        let mut out = vec![BigRational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                out[i + j] += a * b;
            }
        }
        Series::new(out)
    }

    pub fn pow(&self, k: u32) -> Series {
        (0..k).fold(Series::one(self.len()), |acc, _| acc.mul(self))
    }

    /// `1/f`; needs `f₀ ≠ 0`.
    pub fn recip(&self) -> Result<Series> {
        let len = self.len();
        let f0 = self.coeff(0);
        if f0.is_zero() {
            return Err(Error::domain("series with zero constant term has no reciprocal"));
        }
        let inv0 = f0.recip();
        let mut out = vec![BigRational::zero(); len];
        if len > 0 {
            out[0] = inv0.clone();
        }
        for n in 1..len {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &out[n - k];
            }
            out[n] = -acc * &inv0;
        }
        Ok(Series::new(out))
    }

    /// `f(z)/z`, dropping the constant term.
    pub fn shift_down(&self) -> Series {
        Series::new(self.coeffs.iter().skip(1).cloned().collect())
    }

    /// `z·f(z)`, keeping the length.
    pub fn shift_up(&self) -> Series {
        let mut v = vec![BigRational::zero()];
        v.extend(self.coeffs.iter().take(self.len().saturating_sub(1)).cloned());
        Series::new(v)
    }

    /// `f(g(z))`; needs `g₀ = 0`.
    pub fn compose(&self, g: &Series) -> Result<Series> {
        if !g.coeff(0).is_zero() {
            return Err(Error::domain("inner series of a composition must vanish at 0"));
        }
        let len = self.len().min(g.len());
        let g = g.truncated(len);
        let mut out = Series::zero(len);
        for c in self.coeffs.iter().take(len).rev() {
            out = out.mul(&g);
            out.coeffs[0] += c;
        }
        Ok(out)
    }

    /// The compositional inverse `g` with `f(g(z)) = z`, by Lagrange
    /// inversion `[z^n]g = (1/n)[w^{n−1}](w/f(w))^n`. Needs `f₀ = 0`, `f₁ ≠ 0`.
    pub fn revert(&self) -> Result<Series> {
        if !self.coeff(0).is_zero() || self.coeff(1).is_zero() {
            return Err(Error::domain("reversion needs f₀ = 0 and f₁ ≠ 0"));
        }
        let len = self.len();
        let h = self.shift_down().recip()?;
        let mut out = vec![BigRational::zero(); len];
        let mut power = Series::one(h.len());
        for (n, slot) in out.iter_mut().enumerate().skip(1) {
            power = power.mul(&h);
            *slot = power.coeff(n - 1) / int(n as i64);
        }
        Ok(Series::new(out))
    }

    /// `exp(f)`; needs `f₀ = 0`.
    pub fn exp(&self) -> Result<Series> {
        if !self.coeff(0).is_zero() {
            return Err(Error::domain("exp needs a vanishing constant term"));
        }
        let len = self.len();
        let mut out = Series::zero(len);
        let mut term = Series::one(len);
        for j in 0..len {
            out = out.add(&term);
            term = term.mul(self).scale(&BigRational::new(BigInt::one(), BigInt::from(j + 1)));
        }
        Ok(out)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// `M(z) = 1 + Σ m_j z^j` with `len` coefficients.
fn moment_series(moments: &[BigRational], len: usize) -> Series {
    let mut c = vec![BigRational::one()];
    c.extend((1..len).map(|j| moments.get(j).cloned().unwrap_or_else(BigRational::zero)));
    Series::new(c)
}

/// Free cumulants from moments. Index `n` of the input holds `m_n`; index
/// 0 is ignored (`m₀ = 1`). Uses `m_n = Σ_{s=1}^n κ_s [z^{n−s}] M(z)^s`.
pub fn moments_to_free_cumulants(m: &Series) -> Series {
    let len = m.len();
    let big_m = moment_series(m.coeffs(), len);
    let mut powers = vec![Series::one(len)];
    let mut kappa = vec![BigRational::zero(); len];
    for n in 1..len {
        powers.push(powers[n - 1].mul(&big_m));
        let mut acc = m.coeff(n);
        for s in 1..n {
            acc -= &kappa[s] * powers[s].coeff(n - s);
        }
        kappa[n] = acc;
    }
    Series::new(kappa)
}

/// Moments from free cumulants, inverting [`moments_to_free_cumulants`].
pub fn free_cumulants_to_moments(kappa: &Series) -> Series {
    let len = kappa.len();
    let mut m = vec![BigRational::zero(); len];
    for n in 1..len {
        // M^s only needs m_1..m_{n-1} up to degree n−s
        let big_m = moment_series(&m, len);
        let mut acc = kappa.coeff(n);
        let mut power = big_m.clone();
        for s in 1..n {
            acc += kappa.coeff(s) * power.coeff(n - s);
            power = power.mul(&big_m);
        }
        m[n] = acc;
    }
    Series::new(m)
}

/// `R(z) = Σ_{n≥0} κ_{n+1} z^n` of a moment sequence, with `order + 1`
/// coefficients.
pub fn r_series_from_moments(m: &Series, order: usize) -> Series {
    moments_to_free_cumulants(&m.truncated(order + 2)).shift_down().truncated(order + 1)
}

/// The sequence `(0, f(1), f(2), …, f(len−1))`.
fn moments_from(f: impl Fn(u32) -> BigRational, len: usize) -> Series {
    let mut v = vec![BigRational::zero()];
    v.extend((1..len).map(|p| f(p as u32)));
    Series::new(v)
}

/// Taylor coefficients of `−1/((1−z)log(1−z)) − 1/z` through `z^order`.
pub fn r_transform_closed_form(order: usize) -> Series {
    let len = order + 2;
    // −log(1−z)/z = Σ z^n/(n+1)
    let h = Series::new((0..len).map(|n| BigRational::new(BigInt::one(), BigInt::from(n + 1))).collect());
    let one_minus_z = Series::one(len).sub(&Series::monomial(1, len));
    let g = one_minus_z.mul(&h).recip().expect("constant term is 1");
    g.sub(&Series::one(len)).shift_down().truncated(order + 1)
}

/// The R-series of `τ((T*T)^p) = p^p/(p+1)!`.
pub fn tstt_r_series(order: usize) -> Series {
    r_series_from_moments(&moments_from(tstt_moment, order + 2), order)
}

/// `t / (1 − Σ_{p≥0} a(p) t^{p+1})` with `len` coefficients.
fn k_like(a: impl Fn(u32) -> BigRational, len: usize) -> Series {
    let mut denom = Series::one(len);
    for p in 0..len.saturating_sub(1) {
        denom.coeffs[p + 1] -= a(p as u32);
    }
    denom.recip().expect("constant term is 1").shift_up()
}

fn binomial_rational(top: &BigRational, j: usize) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..j {
        acc = acc * (top - int(i as i64)) / int(i as i64 + 1);
    }
    acc
}

/// `z(1+z/N)^{−N}` with `order + 1` coefficients.
pub fn kn_inverse_closed_form(n: u32, order: usize) -> Series {
    binomial_shift(-(n as i64), n, order, 1)
}

/// `z(1−z/N)^N` with `order + 1` coefficients.
pub fn ln_inverse_closed_form(n: u32, order: usize) -> Series {
    binomial_shift(n as i64, n, order, -1)
}

/// `z(1 + sign·z/N)^e`.
fn binomial_shift(e: i64, n: u32, order: usize, sign: i64) -> Series {
    let mut v = vec![BigRational::zero(); order + 1];
    let step = BigRational::new(BigInt::from(sign), BigInt::from(n));
    let mut step_pow = BigRational::one();
    for j in 0..order {
        v[j + 1] = binomial_rational(&int(e), j) * &step_pow;
        step_pow *= &step;
    }
    Series::new(v)
}

/// `K_N(t) = t/(1 − Σ α_N(p) t^{p+1})` with `α_N(p)` the moments of `S_N*S_N`.
pub fn kn_series(n: u32, order: usize) -> Series {
    k_like(|p| stn_moment(n, p), order + 1)
}

/// `L_N(t) = t/(1 − Σ β_N(p) t^{p+1})` with `β_N(p)` the moments of `T_N*T_N`.
pub fn ln_series(n: u32, order: usize) -> Series {
    k_like(|p| ttn_moment(n, p), order + 1)
}

/// `L(t) = t/(1 − Σ γ(p) t^{p+1})` with `γ(p) = p^p/(p+1)!`.
pub fn l_limit_series(order: usize) -> Series {
    k_like(tstt_moment, order + 1)
}

/// Whether the reversion of `K_N` equals `z(1+z/N)^{−N}` through `z^order`.
pub fn kn_inverse_check(n: u32, order: usize) -> bool {
    kn_series(n, order).revert().is_ok_and(|inv| inv == kn_inverse_closed_form(n, order))
}

/// Whether the reversion of `L_N` equals `z(1−z/N)^N` through `z^order`.
pub fn ln_inverse_check(n: u32, order: usize) -> bool {
    ln_series(n, order).revert().is_ok_and(|inv| inv == ln_inverse_closed_form(n, order))
}

/// `z·e^{−z}` through `z^order`, built with [`Series::exp`].
pub fn l_inverse_closed_form(order: usize) -> Series {
    let len = order + 1;
    let minus_z = Series::monomial(1, len).scale(&int(-1));
    minus_z.exp().expect("vanishes at 0").shift_up()
}

/// Whether the reversion of `L` equals `z e^{−z}` through `z^order`.
pub fn l_limit_inverse_check(order: usize) -> bool {
    l_limit_series(order).revert().is_ok_and(|inv| inv == l_inverse_closed_form(order))
}

/// Whether `R_{ν_N}(z) = R_{μ_N}(z) + 1/(N(1−z))` through `z^order`, where
/// `ν_N` and `μ_N` are the laws of `T_N*T_N` and `S_N*S_N`.
pub fn finite_n_r_relation_check(n: u32, order: usize) -> bool {
    if n == 0 {
        return false;
    }
    let r_nu = r_series_from_moments(&moments_from(|p| ttn_moment(n, p), order + 2), order);
    let r_mu = r_series_from_moments(&moments_from(|p| stn_moment(n, p), order + 2), order);
    let poisson = Series::geometric(order + 1).scale(&BigRational::new(BigInt::one(), BigInt::from(n)));
    r_nu == r_mu.add(&poisson)
}
