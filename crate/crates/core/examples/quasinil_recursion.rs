// The recursion for `M(k₁,ℓ₁,…) = τ((T*)^{k₁}T^{ℓ₁}⋯)`, checked against the
// pairing formula and against the conjectured `n^{nk}/(nk+1)!`.

use dtmoment::moments::t_word_moment;
use dtmoment::quasinil::{canonical_sequences, conjecture_check, conjecture_value, m_recursive, AltExponentSeq};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let seqs = canonical_sequences(8);
    for s in seqs.iter().filter(|s| !s.is_empty()) {
        let rec = m_recursive(s);
        let pairings = t_word_moment(&s.star_word());
        println!("{s} = {rec}");
        if pairings.as_real_rational() != Some(rec) {
            return Err(format!("{s}: recursion and pairing formula disagree").into());
        }
    }
    println!("{} canonical tuples of degree ≤ 8 agree with the pairing formula", seqs.len());

    for n in 1..=3u32 {
        for k in 1..=3u32 {
            let seq = AltExponentSeq::repeated(k, n as usize);
            println!(
                "n = {n}, k = {k}: {} vs {} -> {}",
                m_recursive(&seq),
                conjecture_value(k, n),
                conjecture_check(k, n)?
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
