// Folds a 10-gon along a non-crossing pairing, prints the oriented
// quotient tree, and counts the total orders extending its arrows.

use dtmoment::linext::{count_linear_extensions, nto, TreePoset};
use dtmoment::ncpair::{enumerate_compatible_ncp, quotient_graph, Pairing, StarWord};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let eps: StarWord = "*1*1*11*1*".parse()?;
    let sigma = Pairing::new(10, [(1, 6), (2, 3), (4, 5), (7, 10), (8, 9)])?;
    let q = quotient_graph(&sigma, &eps)?;
    println!("word {eps}, pairing {:?}", sigma.pairs());
    println!("quotient: {} vertices, {} edges, tree = {}", q.vertex_count(), q.edge_count(), q.is_tree());
    for (lo, hi) in q.covers() {
        println!("  w{} < w{}", lo + 1, hi + 1);
    }
    let poset = TreePoset::new(q.vertex_count(), q.covers())?;
    let count = count_linear_extensions(&poset)?;
    println!("NTO = {count}");
    if count != nto(&sigma, &eps)? || count != 52u32.into() {
        return Err("unexpected NTO".into());
    }

    let all = enumerate_compatible_ncp(&eps);
    let total: u64 = all.iter().map(|s| u64::try_from(nto(s, &eps).unwrap()).unwrap()).sum();
    println!("{} compatible non-crossing pairings, NTO sum {total}", all.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
