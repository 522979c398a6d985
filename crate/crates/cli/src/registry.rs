//! Named polytope families addressable from the command line: each entry
//! yields a polytope plus, when a closed form is catalogued, its Ehrhart
//! polynomial and h*-vector.

use anyhow::{anyhow, bail, Context, Result};

use ehrhart_core::engine::{ehrhart_poly, hstar_from_ehrhart, HStarVector};
use ehrhart_core::families;
use ehrhart_core::poly::{power_sum_poly, Poly};
use ehrhart_core::polytope::{HPolytope, Polytope};

pub struct FamilyInstance {
    /// Canonical `name-params` label used in reports.
    pub label: String,
    pub body: Polytope,
    /// Catalogued closed-form Ehrhart polynomial, when one exists.
    pub closed_form: Option<Poly>,
    /// Catalogued h*-vector, when one exists.
    pub known_hstar: Option<HStarVector>,
    /// Facet-irredundant H-form for interior counting, when distinct from
    /// `body`.
    pub interior_hform: Option<HPolytope>,
}

impl FamilyInstance {
    fn new(label: String, body: Polytope) -> Self {
        FamilyInstance {
            label,
            body,
            closed_form: None,
            known_hstar: None,
            interior_hform: None,
        }
    }

    /// The exact Ehrhart polynomial: the catalogued closed form when
    /// available, otherwise interpolation through the counting engine.
    pub fn ehrhart(&self) -> Result<Poly> {
        match &self.closed_form {
            Some(p) => Ok(p.clone()),
            None => Ok(ehrhart_poly(&self.body)?),
        }
    }

    pub fn hstar(&self) -> Result<HStarVector> {
        if let Some(h) = &self.known_hstar {
            return Ok(h.clone());
        }
        let p = self.ehrhart()?;
        let d = p.degree().context("zero polynomial")?;
        Ok(hstar_from_ehrhart(&p, d)?)
    }
}

fn int_param(params: &[String], idx: usize, what: &str) -> Result<i64> {
    let raw = params
        .get(idx)
        .ok_or_else(|| anyhow!("missing parameter {} ({})", idx + 1, what))?;
    raw.parse()
        .map_err(|_| anyhow!("parameter {} ({}) must be an integer, got `{}`", idx + 1, what, raw))
}

fn int_list_param(params: &[String], idx: usize, what: &str) -> Result<Vec<i64>> {
    let raw = params
        .get(idx)
        .ok_or_else(|| anyhow!("missing parameter {} ({})", idx + 1, what))?;
    raw.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| anyhow!("{} must be a comma-separated integer list, got `{}`", what, raw))
        })
        .collect()
}

fn expect_params(name: &str, params: &[String], n: usize) -> Result<()> {
    if params.len() != n {
        bail!("family `{}` takes {} parameter(s), got {}", name, n, params.len());
    }
    Ok(())
}

/// Resolve a family name with its parameters.
pub fn build(name: &str, params: &[String]) -> Result<FamilyInstance> {
    // keep labels CSV-safe: parameter separators never collide with the
    // report's cell and list separators
    let label = if params.is_empty() {
        name.to_string()
    } else {
        format!("{}-{}", name, params.join("-")).replace(',', ".").replace(';', "+")
    };
    match name {
        "cube" => {
            expect_params(name, params, 1)?;
            let d = usize::try_from(int_param(params, 0, "dimension")?)?;
            let (h, p) = families::unit_cube(d.max(1));
            let mut fam = FamilyInstance::new(label, Polytope::H(h));
            fam.closed_form = Some(p);
            Ok(fam)
        }
        "simplex" => {
            expect_params(name, params, 1)?;
            let d = usize::try_from(int_param(params, 0, "dimension")?)?;
            let (h, p) = families::standard_simplex(d.max(1));
            let mut fam = FamilyInstance::new(label, Polytope::H(h));
            fam.closed_form = Some(p);
            Ok(fam)
        }
        "cross" => {
            expect_params(name, params, 1)?;
            let d = usize::try_from(int_param(params, 0, "dimension")?)?;
            let (h, p, hstar) = families::cross_polytope(d.max(1));
            let mut fam = FamilyInstance::new(label, Polytope::H(h));
            fam.closed_form = Some(p);
            fam.known_hstar = Some(hstar);
            Ok(fam)
        }
        "reeve" => {
            expect_params(name, params, 1)?;
            let m = int_param(params, 0, "m")?;
            if m < 1 {
                bail!("reeve needs m >= 1");
            }
            let (v, p) = families::reeve(m);
            let mut fam = FamilyInstance::new(label, Polytope::V(v));
            fam.closed_form = Some(p);
            fam.interior_hform = Some(families::reeve_hform(m));
            Ok(fam)
        }
        "permutohedron" => {
            expect_params(name, params, 1)?;
            let d = usize::try_from(int_param(params, 0, "dimension")?)?;
            if d == 0 || d > 4 {
                bail!("permutohedron supports 1 <= d <= 4 at desk scale");
            }
            let v = families::regular_permutohedron(d);
            let mut fam = FamilyInstance::new(label, Polytope::V(v));
            fam.closed_form = Some(families::zonotope_coeffs(&families::root_generators(d)));
            Ok(fam)
        }
        "pitman-stanley" => {
            expect_params(name, params, 1)?;
            let a = int_list_param(params, 0, "netflow vector")?;
            if a.iter().any(|&x| x < 0) {
                bail!("pitman-stanley entries must be nonnegative");
            }
            let (h, p) = families::pitman_stanley(&a);
            let mut fam = FamilyInstance::new(label, Polytope::H(h));
            fam.closed_form = Some(p);
            Ok(fam)
        }
        "birkhoff" => {
            expect_params(name, params, 1)?;
            let n = usize::try_from(int_param(params, 0, "n")?)?;
            if n == 0 {
                bail!("birkhoff needs n >= 1");
            }
            Ok(FamilyInstance::new(label, Polytope::H(families::birkhoff(n))))
        }
        "cry" => {
            expect_params(name, params, 1)?;
            let n = usize::try_from(int_param(params, 0, "n")?)?;
            Ok(FamilyInstance::new(label, Polytope::H(families::cry(n)?)))
        }
        "tesler" => {
            expect_params(name, params, 1)?;
            let n = usize::try_from(int_param(params, 0, "n")?)?;
            Ok(FamilyInstance::new(label, Polytope::H(families::tesler(n)?)))
        }
        "order-p" => {
            expect_params(name, params, 1)?;
            let k = usize::try_from(int_param(params, 0, "k")?)?;
            if k == 0 {
                bail!("order-p needs k >= 1");
            }
            let h = families::order_polytope(&families::antichain_ordinal_sum(k));
            let mut fam = FamilyInstance::new(label, Polytope::H(h));
            fam.known_hstar = Some(families::order_pk_hstar(k));
            Ok(fam)
        }
        "order-q" => {
            expect_params(name, params, 1)?;
            let k = usize::try_from(int_param(params, 0, "k")?)?;
            if k == 0 {
                bail!("order-q needs k >= 1");
            }
            let h = families::order_polytope(&families::fan_poset(k));
            let mut fam = FamilyInstance::new(label, Polytope::H(h));
            fam.closed_form = Some(power_sum_poly(k));
            Ok(fam)
        }
        "delta1q" => {
            expect_params(name, params, 1)?;
            let q = int_list_param(params, 0, "q vector")?;
            let (v, hstar, _) = families::delta_1q(&q)?;
            let mut fam = FamilyInstance::new(label, Polytope::V(v));
            fam.known_hstar = Some(hstar);
            Ok(fam)
        }
        "payne" => {
            expect_params(name, params, 3)?;
            let (r, s, k) = (
                int_param(params, 0, "r")?,
                int_param(params, 1, "s")?,
                int_param(params, 2, "k")?,
            );
            let q = families::payne(r, s, k)?;
            let (v, hstar, _) = families::delta_1q(&q)?;
            let mut fam = FamilyInstance::new(label, Polytope::V(v));
            fam.known_hstar = Some(hstar);
            Ok(fam)
        }
        "base-r" => {
            expect_params(name, params, 2)?;
            let r = int_param(params, 0, "r")?;
            let d = usize::try_from(int_param(params, 1, "dimension")?)?;
            match families::base_r_simplex(r, d)? {
                families::BaseRSimplex::StandardSimplex => {
                    let (h, p) = families::standard_simplex(d);
                    let mut fam = FamilyInstance::new(label, Polytope::H(h));
                    fam.closed_form = Some(p);
                    Ok(fam)
                }
                families::BaseRSimplex::Q(q) => {
                    let (v, hstar, _) = families::delta_1q(&q)?;
                    let mut fam = FamilyInstance::new(label, Polytope::V(v));
                    fam.known_hstar = Some(hstar);
                    Ok(fam)
                }
            }
        }
        "cyclic" => {
            if params.len() != 2 {
                bail!("cyclic takes the dimension and a comma-separated parameter list");
            }
            let d = usize::try_from(int_param(params, 0, "dimension")?)?;
            let u = int_list_param(params, 1, "moment-curve parameters")?;
            let v = families::cyclic_polytope(d, &u)?;
            Ok(FamilyInstance::new(label, Polytope::V(v)))
        }
        "zonotope" => {
            expect_params(name, params, 1)?;
            let gens = parse_generator_list(&params[0])?;
            let v = families::zonotope_vrep(&gens);
            let mut fam = FamilyInstance::new(label, Polytope::V(v));
            fam.closed_form = Some(families::zonotope_coeffs(&gens));
            Ok(fam)
        }
        "sign-pattern" => {
            expect_params(name, params, 2)?;
            let m = int_param(params, 0, "m")?;
            let d = usize::try_from(int_param(params, 1, "dimension")?)?;
            let (h, p) = families::sign_pattern_product(m, d)?;
            let mut fam = FamilyInstance::new(label, Polytope::H(h));
            fam.closed_form = Some(p);
            Ok(fam)
        }
        "mink-1" => {
            expect_params(name, params, 0)?;
            let (p, q, poly) = families::mink1();
            let sum = p.minkowski_sum(&q)?;
            let mut fam = FamilyInstance::new(label, Polytope::V(sum));
            fam.closed_form = Some(poly);
            Ok(fam)
        }
        "mink-2" => {
            expect_params(name, params, 0)?;
            let (p, q, _, poly) = families::mink2();
            let sum = p.minkowski_sum(&q)?;
            let mut fam = FamilyInstance::new(label, Polytope::V(sum));
            fam.closed_form = Some(poly);
            Ok(fam)
        }
        "smooth-reflexive-9" => {
            expect_params(name, params, 0)?;
            let (h, poly) = families::smooth_reflexive_9();
            let mut fam = FamilyInstance::new(label, Polytope::H(h.clone()));
            fam.closed_form = Some(poly);
            fam.interior_hform = Some(h);
            Ok(fam)
        }
        other => bail!(
            "unknown family `{}`; known: cube simplex cross reeve permutohedron \
             pitman-stanley birkhoff cry tesler order-p order-q delta1q payne base-r \
             cyclic zonotope sign-pattern mink-1 mink-2 smooth-reflexive-9",
            other
        ),
    }
}

fn parse_generator_list(raw: &str) -> Result<Vec<Vec<i64>>> {
    let gens: Vec<Vec<i64>> = raw
        .split(';')
        .map(|chunk| {
            chunk
                .split(',')
                .map(|s| s.trim().parse().map_err(|_| anyhow!("bad generator list `{}`", raw)))
                .collect()
        })
        .collect::<Result<_>>()?;
    if gens.is_empty() || gens.iter().any(|g| g.len() != gens[0].len()) {
        bail!("generators must be nonempty and of equal length");
    }
    Ok(gens)
}
