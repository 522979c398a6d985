//! Littlewood-Richardson coefficients via hive counting, and stretched-LR
//! value tables with exact polynomial fitting.
//!
//! A hive of size `n` is a triangular array `a_(i,j)`, `0 <= i, j, i+j <= n`,
//! of nonnegative integers whose border is pinned by three partitions —
//! `a_(j,0) - a_(j-1,0) = nu_j` down the left edge,
//! `a_(0,j) - a_(0,j-1) = lambda_j` along the top edge,
//! `a_(j,n-j) - a_(j-1,n-j+1) = mu_j` along the remaining edge — and whose
//! every rhombus `{a, b, c, d}` (two triangles glued along `b, c`) satisfies
//! `b + c >= a + d`. The number of such hives is the LR coefficient
//! `c_(lambda, mu)^nu`, independent of `n` once `n` covers all three
//! partition lengths.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{interpolate, Poly};
use crate::rational::{rat_int, Rat};

/// Weakly decreasing list of nonnegative integers, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition(Vec<i64>);

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::invalid("partition parts must be nonnegative"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("partition parts must weakly decrease"));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|lambda|`, the sum of the parts.
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Part at index `i` (zero beyond the length).
    pub fn part(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The stretched partition `t * lambda`.
    pub fn scale(&self, t: i64) -> Partition {
        assert!(t >= 0);
        Partition(self.0.iter().map(|&p| p * t).collect())
    }
}

/// `c_(lambda, mu)^nu` by hive enumeration at the minimal admissible size.
pub fn hive_count(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    let n = lambda.len().max(mu.len()).max(nu.len());
    hive_count_sized(lambda, mu, nu, n).expect("minimal size is admissible")
}

/// Hive count at an explicit size `n >= max part count`; the result is
/// independent of `n` (size stability).
pub fn hive_count_sized(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
) -> Result<BigInt> {
    if n < lambda.len().max(mu.len()).max(nu.len()) {
        return Err(Error::invalid("hive size must cover all partition lengths"));
    }
    if nu.size() != lambda.size() + mu.size() {
        return Ok(BigInt::zero());
    }
    let instance = HiveInstance::new(lambda, mu, nu, n);
    Ok(instance.count())
}

/// `c_(t lambda, t mu)^(t nu)` for `t = 1..=t_max`.
pub fn stretched_values(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    t_max: i64,
) -> Vec<BigInt> {
    (1..=t_max)
        .map(|t| hive_count(&lambda.scale(t), &mu.scale(t), &nu.scale(t)))
        .collect()
}

/// Number of interior hive entries at the minimal size; an upper bound on
/// the dimension of the hive polytope and the default fitting degree.
pub fn default_degree_bound(lambda: &Partition, mu: &Partition, nu: &Partition) -> usize {
    let n = lambda.len().max(mu.len()).max(nu.len());
    if n < 2 {
        return 0;
    }
    (n - 1) * (n - 2) / 2 // count of (i, j) with i, j >= 1 and i + j <= n - 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FitResult {
    /// Interpolant through `(0, 1), (1, c_1), ..., (bound, c_bound)` that
    /// also matched two held-out stretched values.
    Fit(Poly),
    /// Validation failed: the degree bound was too small (or the counting
    /// function is not a polynomial on this input).
    NoFit,
}

/// Fit a polynomial to the stretched values with `f(0) = 1`, validating on
/// two extra points before accepting.
pub fn stretched_fit(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    degree_bound: usize,
) -> FitResult {
    let values = stretched_values(lambda, mu, nu, degree_bound as i64 + 2);
    let mut nodes = vec![(0i64, rat_int(1))];
    for (i, v) in values.iter().take(degree_bound).enumerate() {
        nodes.push((i as i64 + 1, Rat::from_integer(v.clone())));
    }
    let fit = interpolate(&nodes).expect("distinct nodes");
    for t in (degree_bound + 1)..=(degree_bound + 2) {
        if fit.eval_int(t as i64) != Rat::from_integer(values[t - 1].clone()) {
            return FitResult::NoFit;
        }
    }
    FitResult::Fit(fit)
}

// ---------------------------------------------------------------------------
// hive enumeration
// ---------------------------------------------------------------------------

/// `b + c >= a + d` over flat entry indices.
#[derive(Clone, Copy)]
struct Rhombus {
    b: usize,
    c: usize,
    a: usize,
    d: usize,
}

struct HiveInstance {
    /// Entry values; border pre-filled, interior `None` until placed.
    values: Vec<Option<i64>>,
    /// Interior entries in row-major fill order.
    fill_order: Vec<usize>,
    /// Constraints keyed by the fill-order position of their last-placed
    /// interior participant.
    deferred: Vec<Vec<Rhombus>>,
    /// Constraints among border entries only, checked once.
    border_ok: bool,
}

impl HiveInstance {
    fn new(lambda: &Partition, mu: &Partition, nu: &Partition, n: usize) -> Self {
        let side = n + 1;
        let idx = |i: usize, j: usize| i * side + j;
        let mut values: Vec<Option<i64>> = vec![None; side * side];

        values[idx(0, 0)] = Some(0);
        for j in 1..=n {
            values[idx(j, 0)] = Some(values[idx(j - 1, 0)].unwrap() + nu.part(j - 1));
            values[idx(0, j)] = Some(values[idx(0, j - 1)].unwrap() + lambda.part(j - 1));
        }
        for j in 1..n {
            values[idx(j, n - j)] =
                Some(values[idx(j - 1, n - j + 1)].unwrap() + mu.part(j - 1));
        }
        // the mu chain would end at a_(n,0); consistency there is exactly
        // |nu| = |lambda| + |mu|, which the caller has already ensured

        let mut fill_order = Vec::new();
        let mut rank = vec![usize::MAX; side * side];
        for i in 1..n {
            for j in 1..n {
                if i + j < n {
                    rank[idx(i, j)] = fill_order.len();
                    fill_order.push(idx(i, j));
                }
            }
        }

        let mut deferred: Vec<Vec<Rhombus>> = vec![Vec::new(); fill_order.len()];
        let mut border_ok = true;
        let mut add = |r: Rhombus, values: &Vec<Option<i64>>| {
            let last = [r.b, r.c, r.a, r.d]
                .into_iter()
                .filter(|&p| rank[p] != usize::MAX)
                .max_by_key(|&p| rank[p]);
            match last {
                Some(p) => deferred[rank[p]].push(r),
                None => {
                    // all four on the border
                    let v = |p: usize| values[p].unwrap();
                    if v(r.b) + v(r.c) < v(r.a) + v(r.d) {
                        border_ok = false;
                    }
                }
            }
        };
        for i in 0..n.saturating_sub(1) {
            for j in 0..n.saturating_sub(1) {
                if i + j + 2 > n {
                    continue;
                }
                // upright rhombus
                add(
                    Rhombus {
                        b: idx(i + 1, j),
                        c: idx(i, j + 1),
                        a: idx(i, j),
                        d: idx(i + 1, j + 1),
                    },
                    &values,
                );
                // leaning left
                add(
                    Rhombus {
                        b: idx(i + 1, j),
                        c: idx(i + 1, j + 1),
                        a: idx(i, j + 1),
                        d: idx(i + 2, j),
                    },
                    &values,
                );
                // leaning right
                add(
                    Rhombus {
                        b: idx(i, j + 1),
                        c: idx(i + 1, j + 1),
                        a: idx(i + 1, j),
                        d: idx(i, j + 2),
                    },
                    &values,
                );
            }
        }

        HiveInstance { values, fill_order, deferred, border_ok }
    }

    fn count(mut self) -> BigInt {
        if !self.border_ok {
            return BigInt::zero();
        }
        let fill_order = std::mem::take(&mut self.fill_order);
        let deferred = std::mem::take(&mut self.deferred);
        count_rec(&mut self.values, &fill_order, &deferred, 0)
    }
}

fn count_rec(
    values: &mut Vec<Option<i64>>,
    fill_order: &[usize],
    deferred: &[Vec<Rhombus>],
    pos: usize,
) -> BigInt {
    if pos == fill_order.len() {
        return BigInt::from(1);
    }
    let entry = fill_order[pos];
    // intersect the feasible interval over every constraint whose other
    // three participants are already placed
    let mut lo = 0i64; // hive entries are nonnegative integers
    let mut hi = i64::MAX;
    for r in &deferred[pos] {
        let v = |p: usize| values[p];
        let (vb, vc, va, vd) = (v(r.b), v(r.c), v(r.a), v(r.d));
        if entry == r.b {
            lo = lo.max(va.unwrap() + vd.unwrap() - vc.unwrap());
        } else if entry == r.c {
            lo = lo.max(va.unwrap() + vd.unwrap() - vb.unwrap());
        } else if entry == r.a {
            hi = hi.min(vb.unwrap() + vc.unwrap() - vd.unwrap());
        } else {
            debug_assert_eq!(entry, r.d);
            hi = hi.min(vb.unwrap() + vc.unwrap() - va.unwrap());
        }
    }
    if hi == i64::MAX {
        // every interior entry is bounded above by an upright rhombus whose
        // other corners precede it in row-major order
        unreachable!("interior hive entries are always bounded above");
    }
    let mut total = BigInt::zero();
    for v in lo..=hi {
        values[entry] = Some(v);
        total += count_rec(values, fill_order, deferred, pos + 1);
    }
    values[entry] = None;
    total
}
