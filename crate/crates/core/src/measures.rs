//! Planar probability measures, seen only through their mixed moments
//! `M_μ(r,s) = ∫ λ^r λ̄^s dμ(λ)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::value::{parse_rational, MomentValue};

#[derive(Clone, Debug, PartialEq)]
pub struct Atom {
    pub location: MomentValue,
    pub weight: MomentValue,
}

#[derive(Clone, Debug, PartialEq)]
pub enum MeasureModel {
    Atomic(Vec<Atom>),
    /// Uniform on the disk of radius `√radius_sq` centered at 0.
    UniformDisk { radius_sq: MomentValue },
    /// Uniform on the annulus `√(c−1) ≤ |λ| ≤ √c`.
    UniformAnnulus { c: MomentValue },
    /// Uniform on the solid ellipse `x²/(4a⁴) + y²/(4b⁴) ≤ 1/(a²+b²)`.
    UniformEllipse { a: MomentValue, b: MomentValue },
    /// Moments given directly; `r + s` may not exceed `max_degree`.
    MomentTable {
        max_degree: u32,
        entries: BTreeMap<(u32, u32), MomentValue>,
    },
    /// Push-forward under `λ ↦ factor·λ`.
    Scaled { base: Box<MeasureModel>, factor: MomentValue },
    /// Push-forward under complex conjugation.
    Conjugate(Box<MeasureModel>),
}

impl MeasureModel {
    pub fn delta(w: MomentValue) -> Self {
        MeasureModel::Atomic(vec![Atom {
            location: w,
            weight: MomentValue::one(),
        }])
    }

    pub fn delta0() -> Self {
        Self::delta(MomentValue::zero())
    }

    pub fn atomic(atoms: Vec<Atom>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::domain("atomic measure needs at least one atom"));
        }
        let mut total = MomentValue::zero();
        for a in &atoms {
            if !a.weight.is_real() || a.weight.to_complex64().re <= 0.0 {
                return Err(Error::domain(format!("atom weight {} is not positive", a.weight)));
            }
            total += &a.weight;
        }
        let ok = match total.as_real_rational() {
            Some(t) => t.is_one(),
            None => (total.to_complex64().re - 1.0).abs() < 1e-12,
        };
        if !ok {
            return Err(Error::domain(format!("atom weights sum to {total}, not 1")));
        }
        Ok(MeasureModel::Atomic(atoms))
    }

    pub fn uniform_disk(radius: MomentValue) -> Result<Self> {
        require_positive(&radius, "disk radius")?;
        Ok(MeasureModel::UniformDisk {
            radius_sq: &radius * &radius,
        })
    }

    pub fn uniform_annulus(c: MomentValue) -> Result<Self> {
        if !c.is_real() || c.to_complex64().re < 1.0 {
            return Err(Error::domain(format!("annulus parameter c = {c} must be real and ≥ 1")));
        }
        Ok(MeasureModel::UniformAnnulus { c })
    }

    pub fn uniform_ellipse(a: MomentValue, b: MomentValue) -> Result<Self> {
        require_positive(&a, "ellipse parameter a")?;
        require_positive(&b, "ellipse parameter b")?;
        Ok(MeasureModel::UniformEllipse { a, b })
    }

    /// Missing entries are filled from `M(r,s) = conj M(s,r)`; `M(0,0)`
    /// defaults to 1 and must equal 1 if given.
    pub fn moment_table(max_degree: u32, entries: BTreeMap<(u32, u32), MomentValue>) -> Result<Self> {
        for (&(r, s), v) in &entries {
            if r + s > max_degree {
                return Err(Error::TableDegree { r, s, max_degree });
            }
            if (r, s) == (0, 0) && v != &MomentValue::one() && v.to_complex64() != num_complex::Complex64::new(1.0, 0.0) {
                return Err(Error::domain("M(0,0) must be 1"));
            }
        }
        Ok(MeasureModel::MomentTable { max_degree, entries })
    }

    pub fn mixed_moment(&self, r: u32, s: u32) -> Result<MomentValue> {
        mixed_moment(self, r, s)
    }

    /// The push-forward under `λ ↦ factor·λ`.
    pub fn scale(&self, factor: &MomentValue) -> Result<MeasureModel> {
        if factor.is_zero() {
            return Err(Error::domain("scaling factor must be nonzero"));
        }
        Ok(match self {
            MeasureModel::Atomic(atoms) => MeasureModel::Atomic(
                atoms
                    .iter()
                    .map(|a| Atom {
                        location: &a.location * factor,
                        weight: a.weight.clone(),
                    })
                    .collect(),
            ),
            MeasureModel::UniformDisk { radius_sq } => MeasureModel::UniformDisk {
                radius_sq: radius_sq * &factor.norm_sqr(),
            },
            MeasureModel::Scaled { base, factor: f } => MeasureModel::Scaled {
                base: base.clone(),
                factor: f * factor,
            },
            other => MeasureModel::Scaled {
                base: Box::new(other.clone()),
                factor: factor.clone(),
            },
        })
    }

    /// The push-forward under complex conjugation.
    pub fn conjugate(&self) -> MeasureModel {
        match self {
            MeasureModel::Atomic(atoms) => MeasureModel::Atomic(
                atoms
                    .iter()
                    .map(|a| Atom {
                        location: a.location.conj(),
                        weight: a.weight.clone(),
                    })
                    .collect(),
            ),
            // symmetric under reflection in the real axis
            MeasureModel::UniformDisk { .. } | MeasureModel::UniformAnnulus { .. } | MeasureModel::UniformEllipse { .. } => {
                self.clone()
            }
            MeasureModel::MomentTable { max_degree, entries } => MeasureModel::MomentTable {
                max_degree: *max_degree,
                entries: entries.iter().map(|(&(r, s), v)| ((s, r), v.clone())).collect(),
            },
            MeasureModel::Scaled { base, factor } => MeasureModel::Scaled {
                base: Box::new(base.conjugate()),
                factor: factor.conj(),
            },
            MeasureModel::Conjugate(inner) => (**inner).clone(),
        }
    }

    /// Whether every parameter is exact.
    pub fn is_exact(&self) -> bool {
        match self {
            MeasureModel::Atomic(atoms) => atoms.iter().all(|a| a.location.is_exact() && a.weight.is_exact()),
            MeasureModel::UniformDisk { radius_sq } => radius_sq.is_exact(),
            MeasureModel::UniformAnnulus { c } => c.is_exact(),
            MeasureModel::UniformEllipse { a, b } => a.is_exact() && b.is_exact(),
            MeasureModel::MomentTable { entries, .. } => entries.values().all(MomentValue::is_exact),
            MeasureModel::Scaled { base, factor } => base.is_exact() && factor.is_exact(),
            MeasureModel::Conjugate(inner) => inner.is_exact(),
        }
    }

    /// A string identifying the measure, used as a cache key.
    pub fn fingerprint(&self) -> String {
        format!("{self:?}")
    }

    /// Parses the shorthand forms `delta0`, `delta:<re>,<im>`, `disk:<R>`,
    /// `annulus:<c>`, `ellipse:<a>,<b>`, or a JSON object.
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if spec.starts_with('{') {
            let v: Value = serde_json::from_str(spec).map_err(|e| Error::parse(format!("measure JSON: {e}")))?;
            return Self::from_json(&v);
        }
        let (kind, args) = spec.split_once(':').unwrap_or((spec, ""));
        let nums = || -> Result<Vec<MomentValue>> {
            args.split(',')
                .map(|a| parse_rational(a).map(MomentValue::from_rational))
                .collect()
        };
        match kind {
            "delta0" if args.is_empty() => Ok(Self::delta0()),
            "delta" => {
                let v = nums()?;
                let (re, im) = match v.as_slice() {
                    [re] => (re.clone(), MomentValue::zero()),
                    [re, im] => (re.clone(), im.clone()),
                    _ => return Err(Error::parse("delta:<re>,<im> takes one or two numbers")),
                };
                Ok(Self::delta(complex_from_parts(&re, &im)))
            }
            "disk" => match nums()?.as_slice() {
                [r] => Self::uniform_disk(r.clone()),
                _ => Err(Error::parse("disk:<R> takes one number")),
            },
            "annulus" => match nums()?.as_slice() {
                [c] => Self::uniform_annulus(c.clone()),
                _ => Err(Error::parse("annulus:<c> takes one number")),
            },
            "ellipse" => match nums()?.as_slice() {
                [a, b] => Self::uniform_ellipse(a.clone(), b.clone()),
                _ => Err(Error::parse("ellipse:<a>,<b> takes two numbers")),
            },
            _ => Err(Error::parse(format!("unknown measure {spec:?}"))),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let spec: MeasureJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::parse(format!("measure JSON: {e}")))?;
        match spec {
            MeasureJson::Atomic { atoms } => {
                let atoms = atoms
                    .into_iter()
                    .map(|a| {
                        let re = json_number(&a.re)?;
                        let im = json_number(&a.im)?;
                        Ok(Atom {
                            location: MomentValue::complex_rational(re, im),
                            weight: MomentValue::from_rational(json_number(&a.w)?),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Self::atomic(atoms)
            }
            MeasureJson::Disk { radius } => Self::uniform_disk(json_number(&radius)?.into()),
            MeasureJson::Annulus { c } => Self::uniform_annulus(json_number(&c)?.into()),
            MeasureJson::Ellipse { a, b } => Self::uniform_ellipse(json_number(&a)?.into(), json_number(&b)?.into()),
            MeasureJson::Table { max_degree, entries } => {
                let mut map = BTreeMap::new();
                for e in entries {
                    let value = MomentValue::complex_rational(json_number(&e.re)?, json_number(&e.im)?);
                    map.insert((e.r, e.s), value);
                }
                Self::moment_table(max_degree, map)
            }
        }
    }
}

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum MeasureJson {
    Atomic { atoms: Vec<AtomJson> },
    Disk { radius: Value },
    Annulus { c: Value },
    Ellipse { a: Value, b: Value },
    Table { max_degree: u32, entries: Vec<TableEntryJson> },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AtomJson {
    #[serde(default = "zero_json")]
    re: Value,
    #[serde(default = "zero_json")]
    im: Value,
    w: Value,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableEntryJson {
    r: u32,
    s: u32,
    #[serde(default = "zero_json")]
    re: Value,
    #[serde(default = "zero_json")]
    im: Value,
}

fn zero_json() -> Value {
    Value::from(0)
}

/// JSON numbers and `"p/q"` strings both read as exact rationals.
fn json_number(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => parse_rational(&n.to_string()),
        other => Err(Error::parse(format!("expected a number or \"p/q\" string, got {other}"))),
    }
}

fn complex_from_parts(re: &MomentValue, im: &MomentValue) -> MomentValue {
    match (re.as_real_rational(), im.as_real_rational()) {
        (Some(r), Some(i)) => MomentValue::complex_rational(r, i),
        _ => MomentValue::from_complex64(num_complex::Complex64::new(
            re.to_complex64().re,
            im.to_complex64().re,
        )),
    }
}

fn require_positive(v: &MomentValue, what: &str) -> Result<()> {
    let ok = match v.as_real_rational() {
        Some(r) => r.is_positive(),
        None => v.is_real() && v.to_complex64().re > 0.0,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::domain(format!("{what} must be a positive real, got {v}")))
    }
}

pub fn mixed_moment(mu: &MeasureModel, r: u32, s: u32) -> Result<MomentValue> {
    match mu {
        MeasureModel::Atomic(atoms) => {
            let mut total = MomentValue::zero();
            for a in atoms {
                let term = &(&a.location.pow(r) * &a.location.conj().pow(s)) * &a.weight;
                total += &term;
            }
            Ok(total)
        }
        MeasureModel::UniformDisk { radius_sq } => {
            if r != s {
                return Ok(MomentValue::zero());
            }
            Ok(&radius_sq.pow(r) * &MomentValue::ratio(1, r as i64 + 1))
        }
        MeasureModel::UniformAnnulus { c } => {
            if r != s {
                return Ok(MomentValue::zero());
            }
            let inner = c - &MomentValue::one();
            let diff = c.pow(r + 1) - inner.pow(r + 1);
            Ok(&diff * &MomentValue::ratio(1, r as i64 + 1))
        }
        MeasureModel::UniformEllipse { a, b } => ellipse_mixed_moment(a, b, r, s),
        MeasureModel::MomentTable { max_degree, entries } => {
            if r + s > *max_degree {
                return Err(Error::TableDegree {
                    r,
                    s,
                    max_degree: *max_degree,
                });
            }
            if (r, s) == (0, 0) {
                return Ok(MomentValue::one());
            }
            if let Some(v) = entries.get(&(r, s)) {
                return Ok(v.clone());
            }
            entries
                .get(&(s, r))
                .map(MomentValue::conj)
                .ok_or_else(|| Error::domain(format!("moment table has no entry for ({r},{s})")))
        }
        MeasureModel::Scaled { base, factor } => {
            let m = mixed_moment(base, r, s)?;
            Ok(&(&factor.pow(r) * &factor.conj().pow(s)) * &m)
        }
        MeasureModel::Conjugate(inner) => mixed_moment(inner, s, r),
    }
}

/// Mixed moments of the uniform measure on the ellipse
/// `x²/(4a⁴) + y²/(4b⁴) ≤ 1/(a²+b²)`.
///
/// The ellipse is the image of the unit disk under `z ↦ αz + βz̄` with
/// `α = √(a²+b²)` and `β = (a²−b²)/√(a²+b²)`. Expanding both binomials
/// against the disk moments `E[z^m z̄^m] = 1/(m+1)` leaves only terms in
/// which `α` and `β` appear as `(a²+b²)^j (a²−b²)^q` with integer `j`, so
/// the result is exact whenever `a` and `b` are.
pub fn ellipse_mixed_moment(a: &MomentValue, b: &MomentValue, r: u32, s: u32) -> Result<MomentValue> {
    require_positive(a, "ellipse parameter a")?;
    require_positive(b, "ellipse parameter b")?;
    if (r + s) % 2 == 1 {
        return Ok(MomentValue::zero());
    }
    let a2 = a * a;
    let b2 = b * b;
    let q = &a2 + &b2;
    let d = &a2 - &b2;
    let q_inv = q.recip()?;
    let (r_i, s_i) = (r as i64, s as i64);
    let mut total = MomentValue::zero();
    for i in 0..=r_i {
        // 2i − 2j = r − s
        let twice_j = 2 * i - (r_i - s_i);
        if twice_j % 2 != 0 {
            continue;
        }
        let j = twice_j / 2;
        if j < 0 || j > s_i {
            continue;
        }
        let m = i + s_i - j;
        let alpha_pow = i + j;
        let beta_pow = r_i + s_i - alpha_pow;
        let half = (alpha_pow - beta_pow) / 2;
        let q_part = if half >= 0 { q.pow(half as u32) } else { q_inv.pow((-half) as u32) };
        let coeff = BigRational::from_integer(binomial(r, i as u32) * binomial(s, j as u32))
            / BigRational::from_integer(BigInt::from(m + 1));
        let term = &(&q_part * &d.pow(beta_pow as u32)) * &MomentValue::from_rational(coeff);
        total += &term;
    }
    Ok(total)
}

pub(crate) fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn rat(n: i64, d: i64) -> MomentValue {
        MomentValue::ratio(n, d)
    }

    #[test]
    fn delta0_moments_vanish() {
        let mu = MeasureModel::delta0();
        assert_eq!(mu.mixed_moment(0, 0).unwrap(), MomentValue::one());
        for (r, s) in [(1, 0), (0, 1), (2, 3), (1, 1)] {
            assert!(mu.mixed_moment(r, s).unwrap().is_zero());
        }
    }

    #[test]
    fn disk_rule() {
        let mu = MeasureModel::uniform_disk(MomentValue::one()).unwrap();
        assert_eq!(mu.mixed_moment(1, 1).unwrap(), rat(1, 2));
        assert_eq!(mu.mixed_moment(3, 3).unwrap(), rat(1, 4));
        assert!(mu.mixed_moment(2, 1).unwrap().is_zero());
        let big = MeasureModel::uniform_disk(rat(3, 2)).unwrap();
        assert_eq!(big.mixed_moment(2, 2).unwrap(), rat(81, 16 * 3));
    }

    #[test]
    fn disk_rule_matches_polar_quadrature() {
        // midpoint rule in polar coordinates for M(r,r) of the radius-1 disk
        let steps = 200_000;
        for r in 0..4 {
            let h = 1.0 / steps as f64;
            let integral: f64 = (0..steps)
                .map(|i| {
                    let rho = (i as f64 + 0.5) * h;
                    rho.powi(2 * r) * 2.0 * rho * h
                })
                .sum();
            let exact = MeasureModel::uniform_disk(MomentValue::one())
                .unwrap()
                .mixed_moment(r as u32, r as u32)
                .unwrap()
                .to_complex64()
                .re;
            assert!((integral - exact).abs() < 1e-8, "r={r}: {integral} vs {exact}");
        }
    }

    #[test]
    fn annulus_rule() {
        let c = rat(3, 2);
        let mu = MeasureModel::uniform_annulus(c.clone()).unwrap();
        for p in 0..5u32 {
            let expected = &(c.pow(p + 1) - rat(1, 2).pow(p + 1)) * &rat(1, p as i64 + 1);
            assert_eq!(mu.mixed_moment(p, p).unwrap(), expected);
        }
        assert!(mu.mixed_moment(2, 0).unwrap().is_zero());
        assert!(MeasureModel::uniform_annulus(rat(1, 2)).is_err());
    }

    #[test]
    fn ellipse_circle_case_reduces_to_disk() {
        let a = rat(1, 3);
        let ell = MeasureModel::uniform_ellipse(a.clone(), a.clone()).unwrap();
        // radius a√2, so R² = 2a²
        let disk = MeasureModel::UniformDisk {
            radius_sq: &rat(2, 1) * &(&a * &a),
        };
        for r in 0..5 {
            for s in 0..5 {
                assert_eq!(ell.mixed_moment(r, s).unwrap(), disk.mixed_moment(r, s).unwrap(), "({r},{s})");
            }
        }
    }

    #[test]
    fn ellipse_odd_and_first_moments_vanish() {
        let ell = MeasureModel::uniform_ellipse(rat(1, 1), rat(1, 2)).unwrap();
        assert!(ell.mixed_moment(1, 0).unwrap().is_zero());
        assert!(ell.mixed_moment(2, 1).unwrap().is_zero());
    }

    #[test]
    fn ellipse_second_moment_matches_grid_quadrature() {
        // a = 1, b = 1/2: semi-axes 2a²/√(a²+b²) and 2b²/√(a²+b²)
        let (a, b) = (1.0f64, 0.5f64);
        let s = (a * a + b * b).sqrt();
        let (ax, ay) = (2.0 * a * a / s, 2.0 * b * b / s);
        let n = 1500;
        let (mut mass, mut m20, mut m11) = (0.0, Complex64::new(0.0, 0.0), 0.0);
        for i in 0..n {
            for j in 0..n {
                let x = -ax + (i as f64 + 0.5) * 2.0 * ax / n as f64;
                let y = -ay + (j as f64 + 0.5) * 2.0 * ay / n as f64;
                if (x / ax).powi(2) + (y / ay).powi(2) <= 1.0 {
                    let z = Complex64::new(x, y);
                    mass += 1.0;
                    m20 += z * z;
                    m11 += z.norm_sqr();
                }
            }
        }
        let ell = MeasureModel::uniform_ellipse(rat(1, 1), rat(1, 2)).unwrap();
        let exact20 = ell.mixed_moment(2, 0).unwrap();
        let exact11 = ell.mixed_moment(1, 1).unwrap();
        assert!(exact20.is_exact());
        // (ax² − ay²)/4 and (ax² + ay²)/4
        assert_eq!(exact20, rat(3, 4));
        assert_eq!(exact11, rat(17, 20));
        assert!(((m20 / mass).re - 0.75).abs() < 2e-3);
        assert!((m11 / mass - 0.85).abs() < 2e-3);
    }

    #[test]
    fn scale_and_conjugate() {
        let w = MomentValue::complex_rational(BigRational::one(), BigRational::new(2.into(), 1.into()));
        let lambda = MomentValue::complex_rational(BigRational::zero(), BigRational::one());
        let scaled = MeasureModel::delta(w.clone()).scale(&lambda).unwrap();
        assert_eq!(scaled, MeasureModel::delta(&w * &lambda));

        let disk = MeasureModel::uniform_disk(MomentValue::one()).unwrap();
        assert_eq!(disk.conjugate(), disk);
        let doubled = disk.scale(&MomentValue::from_int(2)).unwrap();
        assert_eq!(doubled.mixed_moment(1, 1).unwrap(), MomentValue::from_int(2));
        assert!(disk.scale(&MomentValue::zero()).is_err());

        let ann = MeasureModel::uniform_annulus(rat(2, 1)).unwrap();
        let sc = ann.scale(&lambda).unwrap();
        assert_eq!(sc.mixed_moment(1, 1).unwrap(), ann.mixed_moment(1, 1).unwrap());
        let conj = MeasureModel::delta(w.clone()).conjugate();
        assert_eq!(conj, MeasureModel::delta(w.conj()));
    }

    #[test]
    fn table_lookup_and_degree() {
        let mut entries = BTreeMap::new();
        entries.insert((1, 0), MomentValue::complex_rational(BigRational::zero(), BigRational::one()));
        let t = MeasureModel::moment_table(2, entries).unwrap();
        assert_eq!(
            t.mixed_moment(0, 1).unwrap(),
            MomentValue::complex_rational(BigRational::zero(), -BigRational::one())
        );
        assert!(matches!(t.mixed_moment(2, 1), Err(Error::TableDegree { .. })));
        assert!(t.mixed_moment(1, 1).is_err());
    }

    #[test]
    fn atomic_weights_must_sum_to_one() {
        let atoms = vec![
            Atom {
                location: MomentValue::one(),
                weight: rat(1, 2),
            },
            Atom {
                location: MomentValue::zero(),
                weight: rat(1, 3),
            },
        ];
        assert!(MeasureModel::atomic(atoms).is_err());
    }

    #[test]
    fn parse_shorthands_and_json() {
        assert_eq!(MeasureModel::parse("delta0").unwrap(), MeasureModel::delta0());
        assert_eq!(
            MeasureModel::parse("disk:1").unwrap(),
            MeasureModel::uniform_disk(MomentValue::one()).unwrap()
        );
        assert_eq!(
            MeasureModel::parse("annulus:3/2").unwrap(),
            MeasureModel::uniform_annulus(rat(3, 2)).unwrap()
        );
        assert_eq!(
            MeasureModel::parse("delta:0,1/2").unwrap(),
            MeasureModel::delta(MomentValue::complex_rational(BigRational::zero(), BigRational::new(1.into(), 2.into())))
        );
        assert_eq!(
            MeasureModel::parse("ellipse:1,1/2").unwrap(),
            MeasureModel::uniform_ellipse(MomentValue::one(), rat(1, 2)).unwrap()
        );
        let json = r#"{"type":"atomic","atoms":[{"re":1,"im":0,"w":"1/2"},{"re":"-1","im":0,"w":"1/2"}]}"#;
        let mu = MeasureModel::parse(json).unwrap();
        assert_eq!(mu.mixed_moment(2, 0).unwrap(), MomentValue::one());
        assert!(mu.mixed_moment(1, 0).unwrap().is_zero());
        let table = r#"{"type":"table","max_degree":2,"entries":[{"r":1,"s":1,"re":"1/3"}]}"#;
        assert_eq!(MeasureModel::parse(table).unwrap().mixed_moment(1, 1).unwrap(), rat(1, 3));
        assert!(MeasureModel::parse("blob:3").is_err());
        assert!(MeasureModel::parse(r#"{"type":"disk"}"#).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(10, 0), BigInt::one());
    }
}
