// DT elements that are R-diagonal: the circular element (uniform disk) and
// the circular free Poisson elements (uniform annulus).

use dtmoment::measures::MeasureModel;
use dtmoment::moments::{z_word_moment, DtScale, ZWord};
use dtmoment::ncpair::{Letter, StarWord};
use dtmoment::MomentValue;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let disk = MeasureModel::uniform_disk(MomentValue::one())?;
    let catalan: Vec<String> = (1..=5)
        .map(|p| z_word_moment(&ZWord::new(StarWord::alternating(p), DtScale::one()), &disk).map(|v| v.to_string()))
        .collect::<Result<_, _>>()?;
    println!("circular: tau((Z*Z)^p), p = 1..5: {}", catalan.join(", "));

    for c in ["1", "3/2", "2"] {
        let mu = MeasureModel::parse(&format!("annulus:{c}"))?;
        let mut row = Vec::new();
        for a in 0..=3 {
            for b in 0..=3 {
                let eps = StarWord::new([vec![Letter::One; a], vec![Letter::Star; b]].concat());
                row.push(format!("{}", z_word_moment(&ZWord::new(eps, DtScale::one()), &mu)?));
            }
        }
        println!("annulus c = {c}: tau(Z^a Z*^b), a, b ≤ 3: [{}]", row.join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
