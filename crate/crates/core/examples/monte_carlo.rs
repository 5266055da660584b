// Seeded random-matrix estimates next to their exact limits.

use dtmoment::measures::MeasureModel;
use dtmoment::moments::{t_word_moment, z_word_moment, DtScale, ZWord};
use dtmoment::ncpair::StarWord;
use dtmoment::rmt::{estimate_elliptic_moment, estimate_t_words, estimate_word_moment, McRecord, McWord};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (n, trials, seed) = (64, 40, 7);
    let words: Vec<StarWord> = ["1*", "*1", "*1*1", "**11", "11**", "1*1*1*"]
        .iter()
        .map(|w| w.parse())
        .collect::<Result<_, _>>()?;
    for (w, est) in words.iter().zip(estimate_t_words(&words, n, trials, seed)?) {
        let rec = McRecord::new(w.to_string(), &est, t_word_moment(w).to_complex64());
        println!("{}", serde_json::to_string(&rec)?);
    }

    let mu = MeasureModel::parse("disk:1")?;
    let eps: StarWord = "*1*1".parse()?;
    let est = estimate_word_moment(&McWord::Z { eps: eps.clone(), mu: mu.clone(), c: 1.0 }, n, trials, seed)?;
    let target = z_word_moment(&ZWord::new(eps, DtScale::one()), &mu)?;
    println!("circular (Z*Z)^2: {:.4} ± {:.4}, limit {target}", est.mean.re, est.stderr);

    let est = estimate_elliptic_moment(std::f64::consts::FRAC_PI_4, &"*1".parse()?, n, trials, seed)?;
    println!("elliptic θ = π/4, Y*Y: {:.4} ± {:.4}, limit 1", est.mean.re, est.stderr);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
