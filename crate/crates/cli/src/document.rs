//! On-disk polytope documents: UTF-8 JSON with integer inequality systems or
//! rational-string point lists. Rationals serialize as `p/q` (or a bare
//! integer), always in lowest terms with a positive denominator.

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use ehrhart_core::polytope::{HPolytope, Polytope, VPolytope};
use ehrhart_core::rational::{format_rat, parse_rat};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RowDoc {
    pub a: Vec<i64>,
    pub b: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDocument {
    pub kind: String,
    pub ambient_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inequalities: Option<Vec<RowDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equalities: Option<Vec<RowDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Vec<String>>>,
}

impl PolytopeDocument {
    pub fn from_polytope(p: &Polytope) -> Self {
        match p {
            Polytope::H(h) => PolytopeDocument {
                kind: "H".into(),
                ambient_dim: h.dim,
                inequalities: Some(
                    h.inequalities
                        .iter()
                        .map(|(a, b)| RowDoc { a: a.clone(), b: *b })
                        .collect(),
                ),
                equalities: Some(
                    h.equalities
                        .iter()
                        .map(|(a, b)| RowDoc { a: a.clone(), b: *b })
                        .collect(),
                ),
                points: None,
            },
            Polytope::V(v) => PolytopeDocument {
                kind: "V".into(),
                ambient_dim: v.dim,
                inequalities: None,
                equalities: None,
                points: Some(
                    v.points
                        .iter()
                        .map(|pt| pt.iter().map(format_rat).collect())
                        .collect(),
                ),
            },
        }
    }

    pub fn into_polytope(self) -> Result<Polytope> {
        match self.kind.as_str() {
            "H" => {
                if self.points.is_some() {
                    bail!("an H document must not carry points");
                }
                let ineqs = self
                    .inequalities
                    .context("an H document needs an `inequalities` field")?
                    .into_iter()
                    .map(|r| (r.a, r.b))
                    .collect();
                let eqs = self
                    .equalities
                    .context("an H document needs an `equalities` field (may be empty)")?
                    .into_iter()
                    .map(|r| (r.a, r.b))
                    .collect();
                Ok(Polytope::H(HPolytope::new(self.ambient_dim, ineqs, eqs)?))
            }
            "V" => {
                if self.inequalities.is_some() || self.equalities.is_some() {
                    bail!("a V document must not carry inequality fields");
                }
                let points = self
                    .points
                    .context("a V document needs a `points` field")?
                    .into_iter()
                    .map(|pt| pt.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Polytope::V(VPolytope::new(self.ambient_dim, points)?))
            }
            other => bail!("unknown polytope kind `{}` (expected \"H\" or \"V\")", other),
        }
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("malformed document {}", path.display()))
    }

    pub fn save(&self, path: &std::path::Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self)?;
        std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?;
        Ok(())
    }
}
