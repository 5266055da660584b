//! The law of `T*T` for the quasi-nilpotent DT operator: a density on
//! `(0, e)` given parametrically by `x = ρ(v) = (sin v/v)·e^{v cot v}` and
//! `φ(ρ(v)) = (1/π)·sin v·e^{−v cot v}` for `v ∈ (0, π)`.

use std::f64::consts::{E, PI};

use crate::error::{Error, Result};

/// Largest moment order [`density_moment`] accepts by default.
pub const DEFAULT_MAX_MOMENT: u32 = 8;

/// Cutoff kept away from both ends of `(0, π)` when integrating.
const V_CUTOFF: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityPoint {
    pub x: f64,
    pub phi: f64,
    /// The parameter with `ρ(v) = x`.
    pub v: f64,
}

/// `ρ(v)`, continued by `ρ(0) = e`. Strictly decreasing from `e` to 0.
pub fn rho(v: f64) -> Result<f64> {
    if !(0.0..PI).contains(&v) {
        return Err(Error::domain(format!("ρ is defined for v in [0, π), got {v}")));
    }
    if v == 0.0 {
        return Ok(E);
    }
    Ok(rho_unchecked(v))
}

fn rho_unchecked(v: f64) -> f64 {
    (v.sin() / v) * (v / v.tan()).exp()
}

/// `(1/π)·sin v·e^{−v cot v}`, the density at `x = ρ(v)`.
fn phi_of_v(v: f64) -> f64 {
    v.sin() * (-v / v.tan()).exp() / PI
}

/// Solves `ρ(v) = x` by bisection, run to full precision in `v` so that
/// small `x` are resolved in relative terms as well.
pub fn invert_rho(x: f64) -> Result<f64> {
    if !(x > 0.0 && x < E) {
        return Err(Error::domain(format!("x must lie in (0, e), got {x}")));
    }
    let tol = 1e-13 * E;
    let (mut lo, mut hi) = (0.0f64, PI);
    let mut mid = 0.5 * (lo + hi);
    for _ in 0..200 {
        mid = 0.5 * (lo + hi);
        let r = rho_unchecked(mid);
        if r == x || hi - lo <= f64::EPSILON * mid {
            break;
        }
        if r > x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if (rho_unchecked(mid) - x).abs() > tol {
        return Err(Error::Numeric(format!("bisection for ρ(v) = {x} did not converge")));
    }
    Ok(mid)
}

/// The density `φ(x)` of the law of `T*T`.
pub fn phi_at(x: f64) -> Result<f64> {
    invert_rho(x).map(phi_of_v)
}

pub fn density_point(x: f64) -> Result<DensityPoint> {
    let v = invert_rho(x)?;
    Ok(DensityPoint { x, phi: phi_of_v(v), v })
}

/// `points` equispaced abscissae strictly inside `(0, e)` with their densities.
pub fn density_grid(points: usize) -> Result<Vec<DensityPoint>> {
    (1..=points)
        .map(|i| density_point(E * i as f64 / (points + 1) as f64))
        .collect()
}

/// `−ρ(v)^p φ(ρ(v)) ρ′(v)`, rewritten with the logarithmic derivative of ρ
/// as `ρ(v)^p ((v − sin v)² + 2v sin v (1 − cos v)) / (π v²)`.
fn moment_integrand(v: f64, p: u32) -> f64 {
    let s = v.sin();
    let one_minus_cos = 2.0 * (0.5 * v).sin().powi(2);
    let d = v - s;
    let weight = (d * d + 2.0 * v * s * one_minus_cos) / (PI * v * v);
    if p == 0 {
        weight
    } else {
        rho_unchecked(v).powi(p as i32) * weight
    }
}

pub fn density_moment(p: u32) -> Result<f64> {
    density_moment_with_cap(p, DEFAULT_MAX_MOMENT)
}

/// `∫₀^e x^p φ(x) dx`, integrated in the parameter `v`.
pub fn density_moment_with_cap(p: u32, cap: u32) -> Result<f64> {
    if p > cap {
        return Err(Error::CapExceeded {
            what: "density moment order",
            got: p as usize,
            cap: cap as usize,
        });
    }
    let f = |v: f64| moment_integrand(v, p);
    let body = adaptive_gauss_kronrod(&f, V_CUTOFF, PI - V_CUTOFF, 1e-13)?;
    // near 0 the integrand is e^p v²/π; near π it tends to 1/π for p = 0 and 0 otherwise
    let left = E.powi(p as i32) * V_CUTOFF.powi(3) / (3.0 * PI);
    let right = if p == 0 { V_CUTOFF / PI } else { 0.0 };
    Ok(body + left + right)
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// 15-point Kronrod estimate and its difference from the embedded 7-point
/// Gauss rule.
fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for i in 0..7 {
        let dx = h * XGK[i];
        let pair = f(c - dx) + f(c + dx);
        kronrod += WGK[i] * pair;
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }
    (kronrod * h, ((kronrod - gauss) * h).abs())
}

/// Globally adaptive bisection: keeps splitting the interval with the
/// largest error estimate until the total estimate is below `tol`.
pub fn adaptive_gauss_kronrod(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    let (v, e) = gk15(f, a, b);
    let mut parts = vec![(a, b, v, e)];
    for _ in 0..10_000 {
        let total_err: f64 = parts.iter().map(|p| p.3).sum();
        if total_err <= tol {
            return Ok(parts.iter().map(|p| p.2).sum());
        }
        let worst = parts
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .map(|(i, _)| i)
            .expect("at least one part");
        let (lo, hi, _, _) = parts.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        let (v1, e1) = gk15(f, lo, mid);
        let (v2, e2) = gk15(f, mid, hi);
        parts.push((lo, mid, v1, e1));
        parts.push((mid, hi, v2, e2));
    }
    Err(Error::Numeric("adaptive quadrature did not reach tolerance".into()))
}
