//! Limit *-moments of words in `D`, `D*`, `T`, `T*` and of `Z = D + cT`.
//!
//! Every moment is a sum over the non-crossing pairings of the T-slots that
//! match each `T` with a `T*`. A pairing contributes its linear-extension
//! count times the product, over the vertices of its quotient tree, of the
//! mixed moment of μ collected from the D-blocks sitting at that vertex.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::linext::{count_linear_extensions_with_cap, TreePoset};
use crate::measures::MeasureModel;
use crate::ncpair::{enumerate_compatible_ncp, quotient_graph, Letter, StarWord};
use crate::value::MomentValue;

/// Longest Z-word expanded by default.
pub const DEFAULT_Z_WORD_CAP: usize = 16;

/// One compatible non-crossing pairing, reduced to what the weights need.
#[derive(Clone, Debug)]
pub struct PairingTerm {
    /// Quotient vertex of each k-gon vertex, indexed `0..n_vertices`.
    pub classes: Vec<usize>,
    pub n_vertices: usize,
    pub nto: BigUint,
}

fn term_cache() -> &'static Mutex<HashMap<StarWord, Arc<Vec<PairingTerm>>>> {
    static CACHE: OnceLock<Mutex<HashMap<StarWord, Arc<Vec<PairingTerm>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The compatible non-crossing pairings of `eps` with their quotient
/// classes and NTO counts. Cached per star-word.
pub fn pairing_terms(eps: &StarWord) -> Arc<Vec<PairingTerm>> {
    if let Some(hit) = term_cache().lock().unwrap().get(eps) {
        return hit.clone();
    }
    let terms: Vec<PairingTerm> = enumerate_compatible_ncp(eps)
        .iter()
        .map(|sigma| {
            let q = quotient_graph(sigma, eps).expect("enumerated pairings are compatible");
            let poset = TreePoset::new(q.vertex_count(), q.covers()).expect("non-crossing quotient is a tree");
            let nto = count_linear_extensions_with_cap(&poset, 63).expect("vertex count within 63");
            PairingTerm {
                classes: q.compact_classes(),
                n_vertices: q.vertex_count(),
                nto,
            }
        })
        .collect();
    let terms = Arc::new(terms);
    term_cache().lock().unwrap().entry(eps.clone()).or_insert(terms).clone()
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn integer(n: BigUint) -> MomentValue {
    MomentValue::from_rational(BigRational::from_integer(BigInt::from(n)))
}

/// `τ(T^{ε(1)}⋯T^{ε(k)})` for the quasi-nilpotent DT operator: the NTO sum
/// over compatible non-crossing pairings divided by `(k/2+1)!`.
pub fn t_word_moment(eps: &StarWord) -> MomentValue {
    let terms = pairing_terms(eps);
    if terms.is_empty() {
        return MomentValue::zero();
    }
    let total: BigUint = terms.iter().map(|t| &t.nto).sum();
    MomentValue::from_rational(BigRational::new(
        BigInt::from(total),
        factorial(eps.len() / 2 + 1),
    ))
}

/// A letter of a word in `D`, `D*`, `T`, `T*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DtLetter {
    D,
    DStar,
    T,
    TStar,
}

/// `D(a₁,b₁)T^{ε(1)}D(a₂,b₂)T^{ε(2)}⋯D(a_k,b_k)T^{ε(k)}`, where
/// `D(a,b) = D^a (D*)^b`.
///
/// Block `j` is the one immediately before slot `j`. A word with no T-slots
/// holds a single block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DTWord {
    blocks: Vec<(u32, u32)>,
    slots: StarWord,
}

impl DTWord {
    pub fn new(blocks: Vec<(u32, u32)>, slots: StarWord) -> Result<Self> {
        let expected = slots.len().max(1);
        if blocks.len() != expected {
            return Err(Error::domain(format!(
                "{} D-blocks given for {} T-slots",
                blocks.len(),
                slots.len()
            )));
        }
        Ok(DTWord { blocks, slots })
    }

    pub fn pure_t(slots: StarWord) -> Self {
        let blocks = vec![(0, 0); slots.len().max(1)];
        DTWord { blocks, slots }
    }

    pub fn pure_d(a: u32, b: u32) -> Self {
        DTWord {
            blocks: vec![(a, b)],
            slots: StarWord::empty(),
        }
    }

    /// Merges runs of D-letters into blocks. Letters after the last T-slot
    /// wrap around to the first block, which the trace allows.
    pub fn from_letters(letters: &[DtLetter]) -> Self {
        let mut blocks = Vec::new();
        let mut slots = Vec::new();
        let mut pending = (0u32, 0u32);
        for &l in letters {
            match l {
                DtLetter::D => pending.0 += 1,
                DtLetter::DStar => pending.1 += 1,
                DtLetter::T | DtLetter::TStar => {
                    blocks.push(pending);
                    pending = (0, 0);
                    slots.push(if l == DtLetter::T { Letter::One } else { Letter::Star });
                }
            }
        }
        if blocks.is_empty() {
            blocks.push(pending);
        } else {
            blocks[0].0 += pending.0;
            blocks[0].1 += pending.1;
        }
        DTWord {
            blocks,
            slots: StarWord::new(slots),
        }
    }

    pub fn blocks(&self) -> &[(u32, u32)] {
        &self.blocks
    }

    pub fn slots(&self) -> &StarWord {
        &self.slots
    }

    fn has_d(&self) -> bool {
        self.blocks.iter().any(|&(a, b)| a + b > 0)
    }
}

impl fmt::Display for DTWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut tokens = Vec::new();
        for (j, &(a, b)) in self.blocks.iter().enumerate() {
            tokens.extend(std::iter::repeat_n("D", a as usize));
            tokens.extend(std::iter::repeat_n("D*", b as usize));
            if let Some(l) = self.slots.letters().get(j) {
                tokens.push(if *l == Letter::One { "T" } else { "T*" });
            }
        }
        if tokens.is_empty() {
            return f.write_str("1");
        }
        f.write_str(&tokens.join(" "))
    }
}

/// `τ` of a DT-word in the DT(μ,c) element with `c = 1`.
pub fn dt_word_moment(w: &DTWord, mu: &MeasureModel) -> Result<MomentValue> {
    if w.slots.is_empty() {
        let (a, b) = w.blocks[0];
        return mu.mixed_moment(a, b);
    }
    if !w.has_d() {
        return Ok(t_word_moment(&w.slots));
    }
    let terms = pairing_terms(&w.slots);
    let mut moments: HashMap<(u32, u32), MomentValue> = HashMap::new();
    let mut total = MomentValue::zero();
    for term in terms.iter() {
        let mut rs = vec![(0u32, 0u32); term.n_vertices];
        for (j, &v) in term.classes.iter().enumerate() {
            rs[v].0 += w.blocks[j].0;
            rs[v].1 += w.blocks[j].1;
        }
        let mut weight = integer(term.nto.clone());
        for key in rs {
            let m = match moments.get(&key) {
                Some(m) => m.clone(),
                None => {
                    let m = mu.mixed_moment(key.0, key.1)?;
                    moments.insert(key, m.clone());
                    m
                }
            };
            weight *= &m;
            if weight.is_zero() {
                break;
            }
        }
        total += &weight;
    }
    let norm = MomentValue::from_rational(BigRational::from_integer(factorial(w.slots.len() / 2 + 1)));
    &total / &norm
}

/// The scale `c` of a DT(μ,c) element, held through `c²` so that scaling by
/// `|λ|` stays exact for Gaussian rationals `λ`.
#[derive(Clone, Debug, PartialEq)]
pub struct DtScale {
    c_squared: MomentValue,
}

impl DtScale {
    pub fn new(c: &MomentValue) -> Result<Self> {
        if !c.is_real() || c.to_complex64().re < 0.0 {
            return Err(Error::domain("the scale c must be a nonnegative real"));
        }
        Ok(DtScale { c_squared: c * c })
    }

    pub fn from_c_squared(c_squared: MomentValue) -> Result<Self> {
        if !c_squared.is_real() || c_squared.to_complex64().re < 0.0 {
            return Err(Error::domain("c² must be a nonnegative real"));
        }
        Ok(DtScale { c_squared })
    }

    pub fn one() -> Self {
        DtScale {
            c_squared: MomentValue::one(),
        }
    }

    pub fn c_squared(&self) -> &MomentValue {
        &self.c_squared
    }

    /// `c` itself; exact when `c²` is a rational square.
    pub fn c(&self) -> MomentValue {
        self.c_squared.sqrt_real().expect("c² is a nonnegative real")
    }
}

/// A word `Z^{ε(1)}⋯Z^{ε(k)}` in `Z = D + cT`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZWord {
    pub eps: StarWord,
    pub scale: DtScale,
}

impl ZWord {
    pub fn new(eps: StarWord, scale: DtScale) -> Self {
        ZWord { eps, scale }
    }
}

/// Keyed on (least rotation, `c²`, measure fingerprint).
type ZCache = Mutex<HashMap<(StarWord, String, String), MomentValue>>;

fn z_cache() -> &'static ZCache {
    static CACHE: OnceLock<ZCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub fn z_word_moment(zw: &ZWord, mu: &MeasureModel) -> Result<MomentValue> {
    z_word_moment_with_cap(zw, mu, DEFAULT_Z_WORD_CAP)
}

/// Expands every `Z^ε` into `D^ε + c·T^ε` and sums the `2^k` DT-words.
/// Words are first rotated to their least cyclic representative.
pub fn z_word_moment_with_cap(zw: &ZWord, mu: &MeasureModel, cap: usize) -> Result<MomentValue> {
    let k = zw.eps.len();
    if k > cap {
        return Err(Error::CapExceeded {
            what: "Z-word length",
            got: k,
            cap,
        });
    }
    let canonical = zw.eps.least_rotation();
    let c2 = zw.scale.c_squared();
    let key = (canonical.clone(), format!("{c2:?}"), mu.fingerprint());
    if let Some(hit) = z_cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let value = expand_z_word(&canonical, c2, mu)?;
    z_cache().lock().unwrap().entry(key).or_insert(value.clone());
    Ok(value)
}

fn expand_z_word(eps: &StarWord, c2: &MomentValue, mu: &MeasureModel) -> Result<MomentValue> {
    let letters = eps.letters();
    let k = letters.len();
    let mut total = MomentValue::zero();
    let mut c_powers: Vec<MomentValue> = vec![MomentValue::one()];
    for mask in 0u32..(1u32 << k) {
        let t_count = mask.count_ones() as usize;
        if t_count % 2 == 1 || (t_count > 0 && c2.is_zero()) {
            continue;
        }
        let ones = (0..k)
            .filter(|&i| mask >> i & 1 == 1 && letters[i] == Letter::One)
            .count();
        if 2 * ones != t_count {
            continue;
        }
        let dt: Vec<DtLetter> = (0..k)
            .map(|i| match (mask >> i & 1 == 1, letters[i]) {
                (false, Letter::One) => DtLetter::D,
                (false, Letter::Star) => DtLetter::DStar,
                (true, Letter::One) => DtLetter::T,
                (true, Letter::Star) => DtLetter::TStar,
            })
            .collect();
        let m = dt_word_moment(&DTWord::from_letters(&dt), mu)?;
        if m.is_zero() {
            continue;
        }
        while c_powers.len() <= t_count / 2 {
            let next = c_powers.last().unwrap() * c2;
            c_powers.push(next);
        }
        total += &(&m * &c_powers[t_count / 2]);
    }
    Ok(total)
}

/// `λz` for `z` a DT(μ,c) element is DT(μ∘λ⁻¹, |λ|c).
pub fn scaled_dt(mu: &MeasureModel, scale: &DtScale, lambda: &MomentValue) -> Result<(MeasureModel, DtScale)> {
    let mu = mu.scale(lambda)?;
    let c2 = scale.c_squared() * &lambda.norm_sqr();
    Ok((mu, DtScale { c_squared: c2 }))
}

/// `z*` for `z` a DT(μ,c) element is DT(μ̄, c).
pub fn adjoint_dt(mu: &MeasureModel, scale: &DtScale) -> (MeasureModel, DtScale) {
    (mu.conjugate(), scale.clone())
}

/// Parses whitespace-separated tokens `Z`/`Z*` into a star-word.
pub fn parse_z_tokens(s: &str) -> Result<StarWord> {
    s.split_whitespace()
        .map(|t| match t {
            "Z" => Ok(Letter::One),
            "Z*" => Ok(Letter::Star),
            other => Err(Error::parse(format!("expected Z or Z*, found {other:?}"))),
        })
        .collect::<Result<Vec<_>>>()
        .map(StarWord::new)
}

impl FromStr for DTWord {
    type Err = Error;

    /// Whitespace-separated tokens from `D`, `D*`, `T`, `T*`.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .map(|t| match t {
                "D" => Ok(DtLetter::D),
                "D*" => Ok(DtLetter::DStar),
                "T" => Ok(DtLetter::T),
                "T*" => Ok(DtLetter::TStar),
                other => Err(Error::parse(format!("expected D, D*, T or T*, found {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DTWord::from_letters(&letters))
    }
}
