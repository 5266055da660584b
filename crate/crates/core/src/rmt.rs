//! Seeded random-matrix Monte Carlo for the finite-n models behind DT
//! operators.
//!
//! Every trial draws from its own ChaCha8 stream: the generator is seeded
//! from the run's 64-bit seed and the stream id is the trial index, so any
//! single trial can be reproduced in isolation. Real normals come from the
//! ziggurat sampler of `rand_distr::StandardNormal`; a complex `N(0,σ²)`
//! entry has independent real and imaginary parts of variance `σ²/2`.

use std::collections::HashMap;
use std::f64::consts::PI;

use ndarray::{Array2, Zip};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::measures::MeasureModel;
use crate::moments::DtLetter;
use crate::ncpair::{Letter, StarWord};
use crate::value::MomentValue;

pub type CMatrix = Array2<Complex64>;

/// Largest matrix size accepted by default.
pub const DEFAULT_SIZE_CAP: usize = 2048;

#[derive(Clone, Debug, PartialEq)]
pub enum ModelKind {
    /// Strictly upper triangular, entries complex `N(0, σ²)`.
    Utgrm { n: usize, sigma2: f64 },
    /// Self-adjoint; complex `N(0, σ²)` off the diagonal, real `N(0, σ²)` on it.
    Sgrm { n: usize, sigma2: f64 },
    /// Diagonal with i.i.d. entries drawn from μ.
    DiagIid { mu: Box<MeasureModel>, n: usize },
    DiagDeterministic { entries: Vec<Complex64> },
    /// `cos θ·H₁ + i sin θ·H₂` with independent `SGRM(n, 1/n)` factors.
    Elliptic { theta: f64, n: usize },
}

impl ModelKind {
    pub fn size(&self) -> usize {
        match self {
            ModelKind::Utgrm { n, .. }
            | ModelKind::Sgrm { n, .. }
            | ModelKind::DiagIid { n, .. }
            | ModelKind::Elliptic { n, .. } => *n,
            ModelKind::DiagDeterministic { entries } => entries.len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RandomMatrixModel {
    pub kind: ModelKind,
    pub seed: u64,
}

/// The generator for one trial.
pub fn trial_rng(seed: u64, trial_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial_index);
    rng
}

impl RandomMatrixModel {
    pub fn new(kind: ModelKind, seed: u64) -> Self {
        RandomMatrixModel { kind, seed }
    }

    /// The matrix of trial `trial_index`; reproducible from `(seed, trial_index)`.
    pub fn sample(&self, trial_index: u64) -> Result<CMatrix> {
        check_size(self.kind.size())?;
        sample_kind(&self.kind, &mut trial_rng(self.seed, trial_index))
    }
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("matrix size must be at least 1"));
    }
    if n > DEFAULT_SIZE_CAP {
        return Err(Error::CapExceeded {
            what: "matrix size",
            got: n,
            cap: DEFAULT_SIZE_CAP,
        });
    }
    Ok(())
}

fn complex_normal(rng: &mut ChaCha8Rng, sigma2: f64) -> Complex64 {
    let s = (sigma2 / 2.0).sqrt();
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(s * re, s * im)
}

pub fn sample_kind(kind: &ModelKind, rng: &mut ChaCha8Rng) -> Result<CMatrix> {
    Ok(match kind {
        ModelKind::Utgrm { n, sigma2 } => utgrm(*n, *sigma2, rng),
        ModelKind::Sgrm { n, sigma2 } => sgrm(*n, *sigma2, rng),
        ModelKind::DiagIid { mu, n } => {
            let sampler = PointSampler::new(mu)?;
            let d: Vec<Complex64> = (0..*n).map(|_| sampler.draw(rng)).collect();
            Array2::from_diag(&ndarray::Array1::from(d))
        }
        ModelKind::DiagDeterministic { entries } => Array2::from_diag(&ndarray::Array1::from(entries.clone())),
        ModelKind::Elliptic { theta, n } => {
            let h1 = sgrm(*n, 1.0 / *n as f64, rng);
            let h2 = sgrm(*n, 1.0 / *n as f64, rng);
            let (c, s) = (theta.cos(), theta.sin());
            let is = Complex64::new(0.0, s);
            Zip::from(&h1).and(&h2).map_collect(|&a, &b| a * c + b * is)
        }
    })
}

fn utgrm(n: usize, sigma2: f64, rng: &mut ChaCha8Rng) -> CMatrix {
    let mut t = Array2::zeros((n, n));
    for i in 0..n {
        for j in i + 1..n {
            t[[i, j]] = complex_normal(rng, sigma2);
        }
    }
    t
}

fn sgrm(n: usize, sigma2: f64, rng: &mut ChaCha8Rng) -> CMatrix {
    let mut h = Array2::zeros((n, n));
    let sd = sigma2.sqrt();
    for i in 0..n {
        let d: f64 = rng.sample(StandardNormal);
        h[[i, i]] = Complex64::new(sd * d, 0.0);
        for j in i + 1..n {
            let z = complex_normal(rng, sigma2);
            h[[i, j]] = z;
            h[[j, i]] = z.conj();
        }
    }
    h
}

/// Draws points of the plane from a measure model.
enum PointSampler {
    Atomic { cumulative: Vec<f64>, points: Vec<Complex64> },
    Disk { radius: f64 },
    Annulus { c: f64 },
    Ellipse { semi_re: f64, semi_im: f64 },
    Scaled(Box<PointSampler>, Complex64),
    Conjugate(Box<PointSampler>),
}

impl PointSampler {
    fn new(mu: &MeasureModel) -> Result<Self> {
        Ok(match mu {
            MeasureModel::Atomic(atoms) => {
                let mut acc = 0.0;
                let mut cumulative = Vec::new();
                for a in atoms {
                    acc += a.weight.to_complex64().re;
                    cumulative.push(acc);
                }
                PointSampler::Atomic {
                    cumulative,
                    points: atoms.iter().map(|a| a.location.to_complex64()).collect(),
                }
            }
            MeasureModel::UniformDisk { radius_sq } => PointSampler::Disk {
                radius: radius_sq.to_complex64().re.sqrt(),
            },
            MeasureModel::UniformAnnulus { c } => PointSampler::Annulus {
                c: c.to_complex64().re,
            },
            MeasureModel::UniformEllipse { a, b } => {
                let (a, b) = (a.to_complex64().re, b.to_complex64().re);
                let h = (a * a + b * b).sqrt();
                PointSampler::Ellipse {
                    semi_re: 2.0 * a * a / h,
                    semi_im: 2.0 * b * b / h,
                }
            }
            MeasureModel::Scaled { base, factor } => {
                PointSampler::Scaled(Box::new(PointSampler::new(base)?), factor.to_complex64())
            }
            MeasureModel::Conjugate(inner) => PointSampler::Conjugate(Box::new(PointSampler::new(inner)?)),
            MeasureModel::MomentTable { .. } => {
                return Err(Error::domain("a moment table cannot be sampled"));
            }
        })
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> Complex64 {
        match self {
            PointSampler::Atomic { cumulative, points } => {
                let total = *cumulative.last().expect("atomic measure has atoms");
                let u: f64 = rng.random::<f64>() * total;
                let i = cumulative.partition_point(|&c| c <= u).min(points.len() - 1);
                points[i]
            }
            PointSampler::Disk { radius } => {
                let r = radius * rng.random::<f64>().sqrt();
                Complex64::from_polar(r, 2.0 * PI * rng.random::<f64>())
            }
            PointSampler::Annulus { c } => {
                // r² is uniform on [c − 1, c]
                let r2 = c - 1.0 + rng.random::<f64>();
                Complex64::from_polar(r2.sqrt(), 2.0 * PI * rng.random::<f64>())
            }
            PointSampler::Ellipse { semi_re, semi_im } => loop {
                let x = semi_re * (2.0 * rng.random::<f64>() - 1.0);
                let y = semi_im * (2.0 * rng.random::<f64>() - 1.0);
                if (x / semi_re).powi(2) + (y / semi_im).powi(2) <= 1.0 {
                    break Complex64::new(x, y);
                }
            },
            PointSampler::Scaled(base, f) => base.draw(rng) * f,
            PointSampler::Conjugate(inner) => inner.draw(rng).conj(),
        }
    }
}

/// Mean and standard error of per-trial normalized traces.
#[derive(Clone, Debug, PartialEq)]
pub struct Estimate {
    pub mean: Complex64,
    /// Sample standard deviation over `√trials`, the larger of the real and
    /// imaginary parts.
    pub stderr: f64,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Estimate {
    fn from_samples(samples: &[Complex64], n: usize, seed: u64) -> Self {
        let t = samples.len() as f64;
        let mean = samples.iter().sum::<Complex64>() / t;
        let var_re = samples.iter().map(|z| (z.re - mean.re).powi(2)).sum::<f64>() / (t - 1.0);
        let var_im = samples.iter().map(|z| (z.im - mean.im).powi(2)).sum::<f64>() / (t - 1.0);
        Estimate {
            mean,
            stderr: var_re.max(var_im).sqrt() / t.sqrt(),
            n,
            trials: samples.len(),
            seed,
        }
    }

    /// Whether `target` lies within `k` standard errors plus `slack`.
    pub fn agrees_with(&self, target: Complex64, k: f64, slack: f64) -> bool {
        (self.mean - target).norm() <= k * self.stderr + slack
    }
}

/// A letter over a family of generator matrices: `(index, adjoint?)`.
pub type GenLetter = (usize, bool);

fn adjoint(m: &CMatrix) -> CMatrix {
    m.t().mapv(|z| z.conj())
}

fn adjoint_word(w: &[GenLetter]) -> Vec<GenLetter> {
    w.iter().rev().map(|&(g, a)| (g, !a)).collect()
}

/// Products of words over the generators, memoized within a trial. The
/// product of a word whose adjoint is already known is the adjoint of
/// that product.
struct ProductCache<'a> {
    gens: &'a [CMatrix],
    gen_adjoints: Vec<CMatrix>,
    products: HashMap<Vec<GenLetter>, CMatrix>,
}

impl<'a> ProductCache<'a> {
    fn new(gens: &'a [CMatrix]) -> Self {
        ProductCache {
            gens,
            gen_adjoints: gens.iter().map(adjoint).collect(),
            products: HashMap::new(),
        }
    }

    fn letter(&self, (g, a): GenLetter) -> &CMatrix {
        if a {
            &self.gen_adjoints[g]
        } else {
            &self.gens[g]
        }
    }

    fn ensure(&mut self, w: &[GenLetter]) {
        if w.len() < 2 || self.products.contains_key(w) {
            return;
        }
        let adj = adjoint_word(w);
        if let Some(p) = self.products.get(&adj) {
            let m = adjoint(p);
            self.products.insert(w.to_vec(), m);
            return;
        }
        let (head, last) = w.split_at(w.len() - 1);
        self.ensure(head);
        let m = self.get(head).dot(self.letter(last[0]));
        self.products.insert(w.to_vec(), m);
    }

    fn get(&self, w: &[GenLetter]) -> &CMatrix {
        if w.len() == 1 {
            self.letter(w[0])
        } else {
            &self.products[w]
        }
    }

    /// `tr(W)/n`, as `Σ_{ij} A_{ij} B_{ji} / n` for `W = A·B` split in half.
    fn normalized_trace(&mut self, w: &[GenLetter]) -> Complex64 {
        let n = self.gens[0].nrows() as f64;
        if w.is_empty() {
            return Complex64::new(1.0, 0.0);
        }
        if w.len() == 1 {
            return self.letter(w[0]).diag().sum() / n;
        }
        let (a, b) = w.split_at(w.len().div_ceil(2));
        self.ensure(a);
        self.ensure(b);
        let (a, b) = (self.get(a), self.get(b));
        let mut acc = Complex64::new(0.0, 0.0);
        Zip::from(a).and(&b.t()).for_each(|&x, &y| acc += x * y);
        acc / n
    }
}

/// Estimates `τ_n` of each word over generators drawn fresh every trial.
pub fn estimate_batch(
    generators: impl Fn(&mut ChaCha8Rng) -> Result<Vec<CMatrix>>,
    words: &[Vec<GenLetter>],
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<Estimate>> {
    check_size(n)?;
    if trials < 2 {
        return Err(Error::domain("at least two trials are needed for a standard error"));
    }
    let mut samples = vec![Vec::with_capacity(trials); words.len()];
    for t in 0..trials {
        let mut rng = trial_rng(seed, t as u64);
        let gens = generators(&mut rng)?;
        let mut cache = ProductCache::new(&gens);
        for (w, out) in words.iter().zip(samples.iter_mut()) {
            out.push(cache.normalized_trace(w));
        }
    }
    Ok(samples.iter().map(|s| Estimate::from_samples(s, n, seed)).collect())
}

fn star_letters(eps: &StarWord) -> Vec<GenLetter> {
    eps.letters().iter().map(|&l| (0, l == Letter::Star)).collect()
}

/// What to estimate: a word in `D`, `D*`, `T`, `T*` with `D` drawn from μ,
/// or a word in `Z = D + cT`.
#[derive(Clone, Debug, PartialEq)]
pub enum McWord {
    Dt { letters: Vec<DtLetter>, mu: MeasureModel },
    Z { eps: StarWord, mu: MeasureModel, c: f64 },
}

/// `T_n` from `UTGRM(n, 1/n)`.
fn t_matrix(n: usize, rng: &mut ChaCha8Rng) -> CMatrix {
    utgrm(n, 1.0 / n as f64, rng)
}

pub fn estimate_word_moment(spec: &McWord, n: usize, trials: usize, seed: u64) -> Result<Estimate> {
    let est = match spec {
        McWord::Dt { letters, mu } => {
            let sampler = PointSampler::new(mu)?;
            let word: Vec<GenLetter> = letters
                .iter()
                .map(|l| match l {
                    DtLetter::D => (0, false),
                    DtLetter::DStar => (0, true),
                    DtLetter::T => (1, false),
                    DtLetter::TStar => (1, true),
                })
                .collect();
            let gens = |rng: &mut ChaCha8Rng| {
                let d: Vec<Complex64> = (0..n).map(|_| sampler.draw(rng)).collect();
                let t = t_matrix(n, rng);
                Ok(vec![Array2::from_diag(&ndarray::Array1::from(d)), t])
            };
            estimate_batch(gens, &[word], n, trials, seed)?
        }
        McWord::Z { eps, mu, c } => {
            let sampler = PointSampler::new(mu)?;
            let gens = |rng: &mut ChaCha8Rng| {
                let d: Vec<Complex64> = (0..n).map(|_| sampler.draw(rng)).collect();
                Ok(vec![z_matrix(&d, *c, t_matrix(n, rng))])
            };
            estimate_batch(gens, &[star_letters(eps)], n, trials, seed)?
        }
    };
    Ok(est.into_iter().next().expect("one word"))
}

/// `D + cT` for diagonal entries `d`.
fn z_matrix(d: &[Complex64], c: f64, t: CMatrix) -> CMatrix {
    let mut z = t * Complex64::new(c, 0.0);
    for (i, &x) in d.iter().enumerate() {
        z[[i, i]] += x;
    }
    z
}

/// Estimates of many pure T-words from the same `UTGRM(n, 1/n)` draws.
pub fn estimate_t_words(words: &[StarWord], n: usize, trials: usize, seed: u64) -> Result<Vec<Estimate>> {
    let encoded: Vec<Vec<GenLetter>> = words.iter().map(star_letters).collect();
    estimate_batch(|rng| Ok(vec![t_matrix(n, rng)]), &encoded, n, trials, seed)
}

/// Estimates an ε-word in `Y_θ = cos θ·H₁ + i sin θ·H₂`.
pub fn estimate_elliptic_moment(theta: f64, eps: &StarWord, n: usize, trials: usize, seed: u64) -> Result<Estimate> {
    if !(theta > 0.0 && theta < PI / 2.0) {
        return Err(Error::domain("θ must lie in (0, π/2)"));
    }
    let kind = ModelKind::Elliptic { theta, n };
    let est = estimate_batch(|rng| Ok(vec![sample_kind(&kind, rng)?]), &[star_letters(eps)], n, trials, seed)?;
    Ok(est.into_iter().next().expect("one word"))
}

/// The parameters `(a, b) = (cos θ, sin θ)` and `c_{a,b} = 2ab/√(a²+b²)` of
/// the DT element that `Y_θ` converges to, with `μ = ν_{a,b}`.
pub fn elliptic_target_params(theta: f64) -> Result<(MeasureModel, f64)> {
    let (a, b) = (theta.cos(), theta.sin());
    let mu = MeasureModel::uniform_ellipse(MomentValue::from_f64(a), MomentValue::from_f64(b))?;
    Ok((mu, 2.0 * a * b / (a * a + b * b).sqrt()))
}

/// Estimates an ε-word in `D_n + cT_n` with a fixed diagonal whose `i`-th
/// entry (0-based) is `entries(i, n)`.
pub fn deterministic_diagonal_run(
    entries: &dyn Fn(usize, usize) -> Complex64,
    c: f64,
    eps: &StarWord,
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<Estimate> {
    let d: Vec<Complex64> = (0..n).map(|i| entries(i, n)).collect();
    let est = estimate_batch(
        |rng| Ok(vec![z_matrix(&d, c, t_matrix(n, rng))]),
        &[star_letters(eps)],
        n,
        trials,
        seed,
    )?;
    Ok(est.into_iter().next().expect("one word"))
}

/// A Monte Carlo result next to its limit value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct McRecord {
    pub word: String,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub mean_re: f64,
    pub mean_im: f64,
    pub stderr: f64,
    pub target_re: f64,
    pub target_im: f64,
}

impl McRecord {
    pub fn new(word: impl Into<String>, est: &Estimate, target: Complex64) -> Self {
        McRecord {
            word: word.into(),
            n: est.n,
            trials: est.trials,
            seed: est.seed,
            mean_re: est.mean.re,
            mean_im: est.mean.im,
            stderr: est.stderr,
            target_re: target.re,
            target_im: target.im,
        }
    }
}
