// Drives the `dtmoment` command line in-process and collects its output.

use dtmoment::cli::run;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let commands: [&[&str]; 4] = [
        &["moment", "--word", "T* T T* T"],
        &["moment", "--word", "Z* Z", "--measure", "annulus:2", "--format", "csv"],
        &["conjecture", "--n-range", "1..2", "--k-range", "1..3", "--format", "csv"],
        &["moment", "--word", "Z Z Z Z Z Z*", "--max-degree", "4"],
    ];
    for args in commands {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("dtmoment").chain(args.iter().copied()), &mut out, &mut err);
        println!("$ dtmoment {}\n{}{}[exit {code}]", args.join(" "), String::from_utf8(out)?, String::from_utf8(err)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
