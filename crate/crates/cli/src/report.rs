//! CSV report rows: one line of analysis per catalog entry. The schema is
//! versioned by the leading comment line; cells that hold lists use `;` as
//! the inner separator so no CSV quoting is ever needed.

use anyhow::{Context, Result};

use ehrhart_core::engine::HStarVector;
use ehrhart_core::poly::Poly;
use ehrhart_core::positivity::{analyze, AnalysisReport};
use ehrhart_core::rational::format_rat;

use crate::registry::FamilyInstance;

pub const REPORT_VERSION_LINE: &str = "# ehrhart report v1";
pub const REPORT_HEADER: &str = "source,dimension,degree,coefficients,sign_pattern,\
ehrhart_positive,hstar,reflexive,gorenstein_s,palindromic,unimodal,nrpr";

pub struct ReportRow {
    pub source: String,
    pub dimension: usize,
    pub poly: Poly,
    pub hstar: HStarVector,
    pub analysis: AnalysisReport,
}

impl ReportRow {
    pub fn for_family(fam: &FamilyInstance) -> Result<Self> {
        let poly = fam.ehrhart()?;
        let hstar = fam.hstar()?;
        let analysis = analyze(&poly, &hstar)?;
        Ok(ReportRow {
            source: fam.label.clone(),
            dimension: hstar.dim(),
            poly,
            hstar,
            analysis,
        })
    }

    pub fn to_csv_line(&self) -> String {
        let coeffs: Vec<String> = (0..=self.poly.degree().unwrap_or(0))
            .map(|i| format_rat(&self.poly.coeff(i)))
            .collect();
        let hstar: Vec<String> = self.hstar.entries().iter().map(|e| e.to_string()).collect();
        let signs: String = self
            .analysis
            .sign_pattern
            .iter()
            .map(|s| s.symbol())
            .collect();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.source,
            self.dimension,
            self.poly.degree().unwrap_or(0),
            coeffs.join(";"),
            signs,
            self.analysis.ehrhart_positive,
            hstar.join(";"),
            self.analysis.reflexive,
            self.analysis
                .gorenstein_s
                .map(|s| s.to_string())
                .unwrap_or_default(),
            self.analysis.hstar_palindromic,
            self.analysis.hstar_unimodal,
            match self.analysis.nrpr {
                Some(true) => "true",
                Some(false) => "false",
                None => "unknown",
            },
        )
    }
}

pub struct SuiteEntry {
    pub family: &'static str,
    pub params: Vec<String>,
    /// Report label when it differs from the default family label.
    pub alias: Option<&'static str>,
}

fn entry(family: &'static str, params: &[&str], alias: Option<&'static str>) -> SuiteEntry {
    SuiteEntry {
        family,
        params: params.iter().map(|s| s.to_string()).collect(),
        alias,
    }
}

/// Families included in each suite, in report order.
pub fn suite_entries(suite: &str) -> Result<Vec<SuiteEntry>> {
    let counterexamples = || {
        vec![
            entry("reeve", &["13"], None),
            entry("order-q", &["20"], Some("stanley-order-20")),
            entry("smooth-reflexive-9", &[], None),
            entry("mink-1", &[], None),
            entry("mink-2", &[], None),
        ]
    };
    match suite {
        "counterexamples" => Ok(counterexamples()),
        "full" => {
            let mut entries = vec![
                entry("cube", &["3"], None),
                entry("simplex", &["3"], None),
                entry("cross", &["3"], None),
                entry("pitman-stanley", &["1,1,1"], None),
                entry("permutohedron", &["3"], None),
                entry("cry", &["3"], None),
                entry("tesler", &["3"], None),
                entry("order-p", &["2"], None),
                entry("order-q", &["3"], None),
                entry("delta1q", &["1,1,1"], None),
                entry("payne", &["0", "3", "2"], None),
                entry("zonotope", &["1,0,0;0,1,0;1,1,1"], None),
                entry("birkhoff", &["3"], None),
            ];
            entries.extend(counterexamples());
            Ok(entries)
        }
        other => anyhow::bail!("unknown suite `{}` (expected `full` or `counterexamples`)", other),
    }
}

pub fn write_report(suite: &str, out: &std::path::Path) -> Result<usize> {
    let entries = suite_entries(suite)?;
    let mut lines = vec![REPORT_VERSION_LINE.to_string(), REPORT_HEADER.to_string()];
    for e in &entries {
        let fam = crate::registry::build(e.family, &e.params)?;
        let mut row = ReportRow::for_family(&fam)
            .with_context(|| format!("analysis failed for {}", fam.label))?;
        if let Some(alias) = e.alias {
            row.source = alias.to_string();
        }
        lines.push(row.to_csv_line());
    }
    let text = lines.join("\n") + "\n";
    std::fs::write(out, text).with_context(|| format!("cannot write {}", out.display()))?;
    Ok(entries.len())
}
