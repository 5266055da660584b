//! Counting total orders of a tree's vertices that extend its arrows.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ncpair::{quotient_graph, Pairing, StarWord, UnionFind};

pub const DEFAULT_VERTEX_CAP: usize = 24;

/// A partial order whose Hasse diagram is an oriented tree.
///
/// A cover `(a, b)` means `a` lies below `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreePoset {
    n_vertices: usize,
    covers: Vec<(usize, usize)>,
}

impl TreePoset {
    pub fn new(n_vertices: usize, covers: Vec<(usize, usize)>) -> Result<Self> {
        if n_vertices == 0 {
            return Err(Error::domain("a tree poset needs at least one vertex"));
        }
        if covers.len() + 1 != n_vertices {
            return Err(Error::domain(format!(
                "{} covers on {n_vertices} vertices cannot form a tree",
                covers.len()
            )));
        }
        let mut uf = UnionFind::new(n_vertices);
        for &(a, b) in &covers {
            if a >= n_vertices || b >= n_vertices {
                return Err(Error::domain(format!("cover ({a},{b}) out of range")));
            }
            if !uf.union(a, b) {
                return Err(Error::domain("covers contain a cycle"));
            }
        }
        Ok(TreePoset { n_vertices, covers })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// The same tree with every arrow reversed.
    pub fn dual(&self) -> TreePoset {
        TreePoset {
            n_vertices: self.n_vertices,
            covers: self.covers.iter().map(|&(a, b)| (b, a)).collect(),
        }
    }
}

pub fn count_linear_extensions(p: &TreePoset) -> Result<BigUint> {
    count_linear_extensions_with_cap(p, DEFAULT_VERTEX_CAP)
}

/// Dynamic programming over down-sets: the number of ways to finish an
/// order from a placed down-set `S` is the sum over minimal unplaced
/// vertices `v` of the count from `S ∪ {v}`.
pub fn count_linear_extensions_with_cap(p: &TreePoset, cap: usize) -> Result<BigUint> {
    let n = p.n_vertices;
    if n > cap {
        return Err(Error::CapExceeded {
            what: "tree poset vertex count",
            got: n,
            cap,
        });
    }
    if n > 63 {
        return Err(Error::CapExceeded {
            what: "tree poset vertex count",
            got: n,
            cap: 63,
        });
    }
    let mut below = vec![0u64; n];
    for &(a, b) in &p.covers {
        below[b] |= 1 << a;
    }
    let full: u64 = (1u64 << n) - 1;
    let mut memo: HashMap<u64, BigUint> = HashMap::new();
    Ok(extensions_from(0, full, &below, &mut memo))
}

fn extensions_from(placed: u64, full: u64, below: &[u64], memo: &mut HashMap<u64, BigUint>) -> BigUint {
    if placed == full {
        return BigUint::one();
    }
    if let Some(v) = memo.get(&placed) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for (v, &req) in below.iter().enumerate() {
        let bit = 1u64 << v;
        if placed & bit == 0 && req & !placed == 0 {
            total += extensions_from(placed | bit, full, below, memo);
        }
    }
    memo.insert(placed, total.clone());
    total
}

/// NTO(σ; ε): zero for crossing σ, otherwise the number of linear
/// extensions of the quotient tree's arrow relation.
pub fn nto(sigma: &Pairing, eps: &StarWord) -> Result<BigUint> {
    let q = quotient_graph(sigma, eps)?;
    if !sigma.is_noncrossing() {
        return Ok(BigUint::zero());
    }
    let poset = TreePoset::new(q.vertex_count(), q.covers())?;
    count_linear_extensions(&poset)
}
