mod nto_quotient_tree {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/nto_quotient_tree.rs"));
}
mod t_word_moments {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/t_word_moments.rs"));
}
mod dt_words {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/dt_words.rs"));
}
mod circular_and_annulus {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/circular_and_annulus.rs"));
}
mod quasinil_recursion {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/quasinil_recursion.rs"));
}
mod r_transform {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/r_transform.rs"));
}
mod density {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/density.rs"));
}
mod monte_carlo {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/monte_carlo.rs"));
}
mod command_line {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/command_line.rs"));
}

#[test]
fn nto_quotient_tree_runs() {
    nto_quotient_tree::run_example().expect("nto example should run");
}

#[test]
fn t_word_moments_runs() {
    t_word_moments::run_example().expect("t-word example should run");
}

#[test]
fn dt_words_runs() {
    dt_words::run_example().expect("dt-word example should run");
}

#[test]
fn circular_and_annulus_runs() {
    circular_and_annulus::run_example().expect("circular example should run");
}

#[test]
fn quasinil_recursion_runs() {
    quasinil_recursion::run_example().expect("recursion example should run");
}

#[test]
fn r_transform_runs() {
    r_transform::run_example().expect("r-transform example should run");
}

#[test]
fn density_runs() {
    density::run_example().expect("density example should run");
}

#[test]
fn monte_carlo_runs() {
    monte_carlo::run_example().expect("monte carlo example should run");
}

#[test]
fn command_line_runs() {
    command_line::run_example().expect("command line example should run");
}
