//! Formula-vs-oracle verification suites, one per registered family. Each
//! check compares a catalogued closed form against the counting engine with
//! zero tolerance; randomized instances are drawn from a seeded generator so
//! failures reproduce exactly.

use anyhow::{bail, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ehrhart_core::engine::{ehrhart_poly, hstar_from_ehrhart};
use ehrhart_core::families;
use ehrhart_core::poly::power_sum_poly;
use ehrhart_core::polytope::{Polytope, VPolytope};
use ehrhart_core::positivity::hstar_palindromic;
use ehrhart_core::rational::Rat;

pub struct VerifyOptions {
    pub max_dim: usize,
    pub trials: usize,
    pub seed: u64,
}

pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> CheckResult {
    CheckResult { name: name.into(), pass, detail: detail.into() }
}

pub fn run_family(family: &str, opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    match family {
        "cube" => closed_form_suite("cube", opts.max_dim, |d| {
            let (h, p) = families::unit_cube(d);
            (Polytope::H(h), p)
        }),
        "simplex" => closed_form_suite("simplex", opts.max_dim, |d| {
            let (h, p) = families::standard_simplex(d);
            (Polytope::H(h), p)
        }),
        "cross" => closed_form_suite("cross", opts.max_dim.min(4), |d| {
            let (h, p, _) = families::cross_polytope(d);
            (Polytope::H(h), p)
        }),
        "pitman-stanley" => {
            let mut out = Vec::new();
            for _ in 0..opts.trials {
                let d = rng.gen_range(1..=opts.max_dim.min(4));
                let a: Vec<i64> = (0..d).map(|_| rng.gen_range(0..=2)).collect();
                let (h, formula) = families::pitman_stanley(&a);
                let oracle = ehrhart_poly(&Polytope::H(h))?;
                out.push(check(
                    format!("pitman-stanley a={:?}", a),
                    formula == oracle,
                    format!("formula {} vs oracle {}", formula, oracle),
                ));
            }
            Ok(out)
        }
        "flow" => {
            let mut out = Vec::new();
            for d in 1..=opts.max_dim.min(3) {
                let g = families::FlowGraph::pitman_stanley_graph(d);
                let a: Vec<i64> = (0..d).map(|i| 1 + (i as i64) % 2).collect();
                let f = families::flow_polytope(&g, &a)?;
                let oracle = ehrhart_poly(&Polytope::H(f))?;
                let formula = families::lidskii_ehrhart(&g, &a)?;
                out.push(check(
                    format!("flow G_{}^PS a={:?}", d, a),
                    formula == oracle,
                    format!("formula {} vs oracle {}", formula, oracle),
                ));
            }
            let k4 = families::FlowGraph::complete(4);
            for a in [[1i64, 0, 0], [1, 1, 1], [2, 1, 0], [0, 1, 2]] {
                let f = families::flow_polytope(&k4, &a)?;
                let oracle = ehrhart_poly(&Polytope::H(f))?;
                let formula = families::lidskii_ehrhart(&k4, &a)?;
                out.push(check(
                    format!("flow K4 a={:?}", a),
                    formula == oracle,
                    format!("formula {} vs oracle {}", formula, oracle),
                ));
            }
            Ok(out)
        }
        "order" => {
            let mut out = Vec::new();
            for k in 1..=opts.max_dim.min(4) {
                let q = families::order_polytope(&families::fan_poset(k));
                let oracle = ehrhart_poly(&Polytope::H(q))?;
                out.push(check(
                    format!("order O(Q_{})", k),
                    oracle == power_sum_poly(k),
                    format!("oracle {}", oracle),
                ));
            }
            for k in 1..=opts.max_dim.min(3).div_euclid(1).min(2) {
                let p = families::order_polytope(&families::antichain_ordinal_sum(k));
                let poly = ehrhart_poly(&Polytope::H(p))?;
                let h = hstar_from_ehrhart(&poly, 2 * k)?;
                out.push(check(
                    format!("order O(P_{}) h*", k),
                    h == families::order_pk_hstar(k),
                    format!("h* {:?}", h.entries()),
                ));
            }
            Ok(out)
        }
        "zonotope" => {
            let mut out = Vec::new();
            for trial in 0..opts.trials {
                let n = rng.gen_range(1..=5);
                let gens: Vec<Vec<i64>> = (0..n)
                    .map(|_| (0..3).map(|_| rng.gen_range(-2..=2)).collect())
                    .collect();
                if gens.iter().all(|g| g.iter().all(|&c| c == 0)) {
                    continue; // the origin alone is not a zonotope generator set
                }
                let formula = families::zonotope_coeffs(&gens);
                let oracle = ehrhart_poly(&Polytope::V(families::zonotope_vrep(&gens)))?;
                out.push(check(
                    format!("zonotope trial {} gens={:?}", trial, gens),
                    formula == oracle,
                    format!("formula {} vs oracle {}", formula, oracle),
                ));
            }
            Ok(out)
        }
        "permutohedron" => {
            let mut out = Vec::new();
            for d in 1..=opts.max_dim.min(3) {
                let formula = families::zonotope_coeffs(&families::root_generators(d));
                let oracle = ehrhart_poly(&Polytope::V(families::regular_permutohedron(d)))?;
                out.push(check(
                    format!("permutohedron d={}", d),
                    formula == oracle,
                    format!("formula {} vs oracle {}", formula, oracle),
                ));
            }
            Ok(out)
        }
        "typey" => {
            let mut out = Vec::new();
            for trial in 0..opts.trials {
                let d = rng.gen_range(1..=opts.max_dim.min(3));
                let c = rng.gen_range(1..=3usize);
                let mut neighborhoods = vec![(0..=d).collect::<Vec<_>>()];
                for _ in 1..c {
                    let mut nb: Vec<usize> =
                        (0..=d).filter(|_| rng.gen_bool(0.6)).collect();
                    if nb.is_empty() {
                        nb.push(rng.gen_range(0..=d));
                    }
                    neighborhoods.push(nb);
                }
                let g = families::BipartiteGraph::new(d + 1, neighborhoods)?;
                let y: Vec<i64> = (0..c).map(|_| rng.gen_range(0..=2)).collect();
                let formula = families::typey_ehrhart(&g, &y)?;
                let oracle = ehrhart_poly(&Polytope::V(families::typey_vrep(&g, &y)?))?;
                out.push(check(
                    format!("typey trial {} y={:?}", trial, y),
                    formula == oracle,
                    format!("formula {} vs oracle {}", formula, oracle),
                ));
            }
            Ok(out)
        }
        "delta1q" => {
            let mut out = Vec::new();
            for trial in 0..opts.trials {
                let d = rng.gen_range(1..=opts.max_dim.min(4));
                let q: Vec<i64> = (0..d).map(|_| rng.gen_range(1..=5)).collect();
                let (v, hstar, reflexive) = families::delta_1q(&q)?;
                let poly = ehrhart_poly(&Polytope::V(v))?;
                let engine_h = hstar_from_ehrhart(&poly, d)?;
                out.push(check(
                    format!("delta1q trial {} q={:?}", trial, q),
                    hstar == engine_h,
                    format!("formula h* {:?} vs engine {:?}", hstar.entries(), engine_h.entries()),
                ));
                let palindromic_test = hstar_palindromic(&hstar) && hstar.degree() == d;
                out.push(check(
                    format!("delta1q reflexivity q={:?}", q),
                    reflexive == palindromic_test,
                    format!("divisibility {} vs palindromic+degree {}", reflexive, palindromic_test),
                ));
            }
            Ok(out)
        }
        "genzonotope" => {
            let mut out = Vec::new();
            for trial in 0..opts.trials {
                let dim = rng.gen_range(1..=3usize);
                let n = rng.gen_range(1..=3usize);
                let gens: Vec<Vec<i64>> = (0..n)
                    .map(|_| (0..dim).map(|_| rng.gen_range(-2..=2)).collect())
                    .collect();
                let mut pts = vec![vec![0i64; dim]];
                for _ in 0..dim {
                    pts.push((0..dim).map(|_| rng.gen_range(0..=2)).collect());
                }
                let p = VPolytope::from_integer_points(dim, &pts)?;
                let formula = families::gen_zonotope_ehrhart(&p, &gens)?;
                let mut pass = true;
                let mut detail = String::new();
                for t in 0..=3i64 {
                    let z = families::zonotope_vrep(&gens).dilate(t);
                    let sum = p.minkowski_sum(&z)?;
                    let count = ehrhart_core::engine::count_points(&Polytope::V(sum), 1)?;
                    if Rat::from_integer(count.clone()) != formula.eval_int(t) {
                        pass = false;
                        detail = format!("t={}: formula {} vs count {}", t, formula.eval_int(t), count);
                        break;
                    }
                }
                out.push(check(format!("genzonotope trial {}", trial), pass, detail));
            }
            Ok(out)
        }
        "hive" => {
            let mut out = Vec::new();
            for trial in 0..opts.trials {
                let (l, m, n) = random_triple(&mut rng);
                let c = ehrhart_core::hives::hive_count(&l, &m, &n);
                let sym = ehrhart_core::hives::hive_count(&m, &l, &n);
                out.push(check(
                    format!("hive symmetry trial {}", trial),
                    c == sym,
                    format!("c={} vs swapped {}", c, sym),
                ));
                let n_min = l.len().max(m.len()).max(n.len());
                let stable = ehrhart_core::hives::hive_count_sized(&l, &m, &n, n_min + 1)?;
                out.push(check(
                    format!("hive size-stability trial {}", trial),
                    c == stable,
                    format!("c={} vs size+1 {}", c, stable),
                ));
            }
            Ok(out)
        }
        other => bail!(
            "no verification suite for `{}`; known: cube simplex cross pitman-stanley \
             flow order zonotope permutohedron typey delta1q genzonotope hive",
            other
        ),
    }
}

fn closed_form_suite(
    name: &str,
    max_dim: usize,
    f: impl Fn(usize) -> (Polytope, ehrhart_core::poly::Poly),
) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for d in 1..=max_dim.max(1) {
        let (p, formula) = f(d);
        let oracle = ehrhart_poly(&p)?;
        out.push(check(
            format!("{} d={}", name, d),
            formula == oracle,
            format!("formula {} vs oracle {}", formula, oracle),
        ));
    }
    Ok(out)
}

fn random_triple(rng: &mut ChaCha8Rng) -> (
    ehrhart_core::hives::Partition,
    ehrhart_core::hives::Partition,
    ehrhart_core::hives::Partition,
) {
    use ehrhart_core::hives::Partition;
    let total = rng.gen_range(2..=8i64);
    let l_size = rng.gen_range(1..=total - 1);
    let lambda = random_partition(rng, l_size);
    let mu = random_partition(rng, total - l_size);
    let nu = random_partition(rng, total);
    (
        Partition::new(lambda).unwrap(),
        Partition::new(mu).unwrap(),
        Partition::new(nu).unwrap(),
    )
}

fn random_partition(rng: &mut ChaCha8Rng, size: i64) -> Vec<i64> {
    let mut remaining = size;
    let mut parts = Vec::new();
    let mut cap = size;
    while remaining > 0 {
        let p = rng.gen_range(1..=remaining.min(cap));
        parts.push(p);
        cap = p;
        remaining -= p;
    }
    parts
}
