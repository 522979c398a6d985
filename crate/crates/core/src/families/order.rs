//! Posets and their order polytopes, including the two named families: the
//! ordinal sums of two-element antichains (h* = (1+z)^k) and the
//! one-minimal-element posets whose order polytopes have Ehrhart polynomial
//! `sum_(i=1)^(t+1) i^k`.

use num_bigint::BigInt;

use crate::engine::HStarVector;
use crate::error::{Error, Result};
use crate::polytope::HPolytope;
use crate::rational::binomial;

/// Finite poset given by cover relations on elements `0..n`.
#[derive(Clone, Debug)]
pub struct Poset {
    pub n: usize,
    pub covers: Vec<(usize, usize)>, // (a, b) meaning a is covered by b
}

impl Poset {
    pub fn new(n: usize, covers: Vec<(usize, usize)>) -> Result<Self> {
        for &(a, b) in &covers {
            if a >= n || b >= n || a == b {
                return Err(Error::invalid(format!("bad cover relation ({}, {})", a, b)));
            }
        }
        let p = Poset { n, covers };
        if p.topological_order().is_none() {
            return Err(Error::invalid("cover digraph has a cycle"));
        }
        Ok(p)
    }

    fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.n];
        for &(_, b) in &self.covers {
            indeg[b] += 1;
        }
        let mut queue: Vec<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = queue.pop() {
            order.push(v);
            for &(a, b) in &self.covers {
                if a == v {
                    indeg[b] -= 1;
                    if indeg[b] == 0 {
                        queue.push(b);
                    }
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    /// Reflexive-transitive order relation derived from the covers.
    pub fn le_matrix(&self) -> Vec<Vec<bool>> {
        let mut le = vec![vec![false; self.n]; self.n];
        for v in 0..self.n {
            le[v][v] = true;
        }
        for &(a, b) in &self.covers {
            le[a][b] = true;
        }
        // transitive closure
        for k in 0..self.n {
            for i in 0..self.n {
                if le[i][k] {
                    for j in 0..self.n {
                        if le[k][j] {
                            le[i][j] = true;
                        }
                    }
                }
            }
        }
        le
    }
}

/// Order polytope: `0 <= x_a <= 1` with `x_a <= x_b` whenever `a` is covered
/// by `b` (transitivity supplies the rest).
pub fn order_polytope(p: &Poset) -> HPolytope {
    let mut ineqs = Vec::new();
    for v in 0..p.n {
        let mut row = vec![0i64; p.n];
        row[v] = 1;
        ineqs.push((row.clone(), 1));
        row[v] = -1;
        ineqs.push((row, 0));
    }
    for &(a, b) in &p.covers {
        let mut row = vec![0i64; p.n];
        row[a] = 1;
        row[b] = -1;
        ineqs.push((row, 0));
    }
    HPolytope::new(p.n, ineqs, vec![]).expect("rows match dimension")
}

/// Chain `0 < 1 < ... < n-1`.
pub fn chain_poset(n: usize) -> Poset {
    Poset::new(n, (1..n).map(|i| (i - 1, i)).collect()).expect("chain covers are acyclic")
}

/// Ordinal sum of `k` two-element antichains: elements `(i, j)` with
/// `i < 2`, `j < k` indexed as `2j + i`; every element of level `j` is
/// covered by both elements of level `j + 1`.
pub fn antichain_ordinal_sum(k: usize) -> Poset {
    let mut covers = Vec::new();
    for j in 0..k.saturating_sub(1) {
        for i in 0..2 {
            for i2 in 0..2 {
                covers.push((2 * j + i, 2 * (j + 1) + i2));
            }
        }
    }
    Poset::new(2 * k, covers).expect("levels are acyclic")
}

/// One minimal element covered by `k` others.
pub fn fan_poset(k: usize) -> Poset {
    Poset::new(k + 1, (1..=k).map(|i| (0, i)).collect()).expect("a fan is acyclic")
}

/// h*-vector of the order polytope of [`antichain_ordinal_sum`]: the
/// binomial row of `(1+z)^k`, padded to dimension `2k`.
pub fn order_pk_hstar(k: usize) -> HStarVector {
    let kk = BigInt::from(k as i64);
    let mut entries: Vec<BigInt> = (0..=k).map(|i| binomial(&kk, i)).collect();
    entries.resize(2 * k + 1, BigInt::from(0));
    HStarVector::new(entries).expect("binomial row")
}
