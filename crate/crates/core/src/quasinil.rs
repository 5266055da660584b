//! The quasi-nilpotent DT(δ₀,1) operator `T`: the moment recursion for
//! `M(k₁,ℓ₁,…,k_n,ℓ_n) = τ((T*)^{k₁}T^{ℓ₁}⋯(T*)^{k_n}T^{ℓ_n})`, the moments of
//! `T*T` and of its finite-N analogues, and the conjecture
//! `τ(((T*)^k T^k)^n) = n^{nk}/(nk+1)!`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ncpair::{Letter, StarWord};

/// Largest `n·k` the conjecture checker runs the recursion for by default.
pub const DEFAULT_CONJECTURE_CAP: u32 = 12;

/// An alternating exponent tuple `(k₁,ℓ₁,…,k_n,ℓ_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AltExponentSeq(Vec<u32>);

impl AltExponentSeq {
    pub fn new(seq: Vec<u32>) -> Result<Self> {
        if seq.len() % 2 == 1 {
            return Err(Error::domain("an alternating exponent tuple has even length"));
        }
        Ok(AltExponentSeq(seq))
    }

    pub fn empty() -> Self {
        AltExponentSeq(Vec::new())
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `m = k₁+⋯+k_n`, the number of `T*` letters.
    pub fn star_degree(&self) -> u32 {
        self.0.iter().step_by(2).sum()
    }

    pub fn t_degree(&self) -> u32 {
        self.0.iter().skip(1).step_by(2).sum()
    }

    /// The word `(T*)^{k₁}T^{ℓ₁}⋯` as a star-word.
    pub fn star_word(&self) -> StarWord {
        StarWord::new(letters_of(&self.0))
    }

    /// `((T*)^k T^k)` repeated `n` times.
    pub fn repeated(k: u32, n: usize) -> Self {
        AltExponentSeq([k, k].repeat(n))
    }
}

impl fmt::Display for AltExponentSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "M({})", parts.join(","))
    }
}

/// Result of reducing a tuple by the symmetries of `M`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Canonical {
    /// Unequal numbers of `T` and `T*`: the moment vanishes.
    Zero,
    /// The least representative; all entries positive, empty for `τ(1)`.
    Seq(AltExponentSeq),
}

fn letters_of(seq: &[u32]) -> Vec<Letter> {
    let mut out = Vec::new();
    for (i, &e) in seq.iter().enumerate() {
        let l = if i % 2 == 0 { Letter::Star } else { Letter::One };
        out.extend(std::iter::repeat_n(l, e as usize));
    }
    out
}

/// Reads a cyclic word back into exponents, starting at a run of `T*`.
fn canonical_of_letters(letters: &[Letter]) -> Canonical {
    if letters.is_empty() {
        return Canonical::Seq(AltExponentSeq::empty());
    }
    let stars = letters.iter().filter(|&&l| l == Letter::Star).count();
    if 2 * stars != letters.len() {
        return Canonical::Zero;
    }
    let k = letters.len();
    let start = (0..k)
        .find(|&i| letters[i] == Letter::Star && letters[(i + k - 1) % k] == Letter::One)
        .expect("balanced nonempty word has a T* run");
    let mut runs: Vec<u32> = Vec::new();
    let mut prev = None;
    for i in 0..k {
        let l = letters[(start + i) % k];
        if Some(l) == prev {
            *runs.last_mut().unwrap() += 1;
        } else {
            runs.push(1);
            prev = Some(l);
        }
    }
    Canonical::Seq(AltExponentSeq(least_dihedral(&runs)))
}

/// Least tuple over all rotations of `runs` and of its reversal. Rotating
/// by one entry swaps the roles of `T` and `T*`, and reversal is the
/// adjoint; both leave `M` unchanged.
fn least_dihedral(runs: &[u32]) -> Vec<u32> {
    let n = runs.len();
    let mut rev = runs.to_vec();
    rev.reverse();
    let mut best = runs.to_vec();
    for base in [runs.to_vec(), rev] {
        for r in 0..n {
            let mut cand = base.clone();
            cand.rotate_left(r);
            if cand < best {
                best = cand;
            }
        }
    }
    best
}

/// Reduces a tuple by merging zero exponents, vanishing on unequal degrees,
/// and choosing the least representative under rotation and reversal.
pub fn canonicalize(seq: &AltExponentSeq) -> Canonical {
    canonical_of_letters(&letters_of(&seq.0))
}

fn memo() -> &'static Mutex<HashMap<Vec<u32>, BigRational>> {
    static MEMO: OnceLock<Mutex<HashMap<Vec<u32>, BigRational>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `M(k₁,ℓ₁,…,k_n,ℓ_n)` via the recursion over subsets
/// `{j(1)<⋯<j(r)} ⊆ {1,…,n}`.
pub fn m_recursive(seq: &AltExponentSeq) -> BigRational {
    match canonicalize(seq) {
        Canonical::Zero => BigRational::zero(),
        Canonical::Seq(s) => m_canonical(&s.0),
    }
}

fn m_of_letters(letters: &[Letter]) -> BigRational {
    match canonical_of_letters(letters) {
        Canonical::Zero => BigRational::zero(),
        Canonical::Seq(s) => m_canonical(&s.0),
    }
}

fn push_run(out: &mut Vec<Letter>, l: Letter, e: u32) {
    out.extend(std::iter::repeat_n(l, e as usize));
}

fn m_canonical(seq: &[u32]) -> BigRational {
    if seq.is_empty() {
        return BigRational::one();
    }
    if let Some(v) = memo().lock().unwrap().get(seq) {
        return v.clone();
    }
    let n = seq.len() / 2;
    let kk = |i: usize| seq[2 * i];
    let ll = |i: usize| seq[2 * i + 1];
    let m: u32 = (0..n).map(kk).sum();

    let mut total = BigRational::zero();
    for mask in 1u32..(1u32 << n) {
        let js: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let r = js.len();

        // T^{ℓ_{j(r)}-1} (T*)^{k}T^{ℓ} for the indices after j(r), cyclically,
        // up to j(1), then (T*)^{k_{j(1)}-1}
        let mut outer = Vec::new();
        push_run(&mut outer, Letter::One, ll(js[r - 1]) - 1);
        let mut idx = (js[r - 1] + 1) % n;
        while idx != js[0] {
            push_run(&mut outer, Letter::Star, kk(idx));
            push_run(&mut outer, Letter::One, ll(idx));
            idx = (idx + 1) % n;
        }
        push_run(&mut outer, Letter::Star, kk(js[0]) - 1);
        let mut term = m_of_letters(&outer);

        for pair in js.windows(2) {
            if term.is_zero() {
                break;
            }
            let (a, b) = (pair[0], pair[1]);
            let mut inner = Vec::new();
            push_run(&mut inner, Letter::One, ll(a) - 1);
            for idx in a + 1..b {
                push_run(&mut inner, Letter::Star, kk(idx));
                push_run(&mut inner, Letter::One, ll(idx));
            }
            push_run(&mut inner, Letter::Star, kk(b) - 1);
            term *= m_of_letters(&inner);
        }
        total += term;
    }
    let value = total / BigRational::from_integer(BigInt::from(m + 1));
    memo().lock().unwrap().entry(seq.to_vec()).or_insert(value.clone());
    value
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn big(n: u32) -> BigInt {
    BigInt::from(n)
}

/// `τ((T*T)^p) = p^p/(p+1)!`.
pub fn tstt_moment(p: u32) -> BigRational {
    BigRational::new(big(p).pow(p), factorial(p + 1))
}

pub fn catalan(p: u32) -> BigRational {
    BigRational::new(factorial(2 * p), factorial(p) * factorial(p + 1))
}

/// `n^{nk}/(nk+1)!`.
pub fn conjecture_value(k: u32, n: u32) -> BigRational {
    BigRational::new(big(n).pow(n * k), factorial(n * k + 1))
}

/// Compares the recursion on `((T*)^k T^k)^n` with [`conjecture_value`].
pub fn conjecture_check(k: u32, n: u32) -> Result<bool> {
    conjecture_check_with_cap(k, n, DEFAULT_CONJECTURE_CAP)
}

pub fn conjecture_check_with_cap(k: u32, n: u32, cap: u32) -> Result<bool> {
    if k == 0 || n == 0 {
        return Err(Error::domain("k and n must be positive"));
    }
    if n * k > cap {
        return Err(Error::CapExceeded {
            what: "conjecture degree n·k",
            got: (n * k) as usize,
            cap: cap as usize,
        });
    }
    let seq = AltExponentSeq::repeated(k, n as usize);
    Ok(m_recursive(&seq) == conjecture_value(k, n))
}

/// `∏_{i=1}^p (p + sign·i/N) / (p+1)!`.
fn finite_n_moment(n: u32, p: u32, sign: i64) -> BigRational {
    let nn = BigInt::from(n);
    let mut num = BigRational::one();
    for i in 1..=p {
        let term = BigRational::from_integer(big(p)) + BigRational::new(BigInt::from(sign * i as i64), nn.clone());
        num *= term;
    }
    num / BigRational::from_integer(factorial(p + 1))
}

/// `τ((S_N*S_N)^p) = (p−1/N)(p−2/N)⋯(p−p/N)/(p+1)!`.
pub fn stn_moment(n: u32, p: u32) -> BigRational {
    finite_n_moment(n, p, -1)
}

/// `τ((T_N*T_N)^p) = (p+1/N)(p+2/N)⋯(p+p/N)/(p+1)!`.
pub fn ttn_moment(n: u32, p: u32) -> BigRational {
    finite_n_moment(n, p, 1)
}

/// All canonical tuples with `2m ≤ max_total_degree` letters, including
/// the empty tuple, in increasing order.
pub fn canonical_sequences(max_total_degree: usize) -> Vec<AltExponentSeq> {
    let mut out = BTreeSet::new();
    for len in (0..=max_total_degree).step_by(2) {
        for bits in 0u32..(1u32 << len) {
            if bits.count_ones() as usize * 2 != len {
                continue;
            }
            let letters: Vec<Letter> = (0..len)
                .map(|i| if bits >> i & 1 == 1 { Letter::Star } else { Letter::One })
                .collect();
            if let Canonical::Seq(s) = canonical_of_letters(&letters) {
                out.insert((s.0.iter().sum::<u32>(), s));
            }
        }
    }
    out.into_iter().map(|(_, s)| s).collect()
}
