// Exact moments of the quasi-nilpotent DT operator `T` for words in `T`, `T*`.

use dtmoment::moments::t_word_moment;
use dtmoment::ncpair::StarWord;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for p in 1..=8 {
        let v = t_word_moment(&StarWord::alternating(p));
        println!("tau((T*T)^{p}) = {v}");
    }
    for w in ["1*", "**11", "*1*1", "1*1*", "11**", "11", "*11*"] {
        let eps: StarWord = w.parse()?;
        println!("tau({eps}) = {}", t_word_moment(&eps));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
