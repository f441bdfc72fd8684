//! Running a job and rendering its results.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use funcech::abelian::{CoefficientGroup, LimitReport, Variance};
use funcech::cech::{
    compact_beta_check, eta, functional_limit, pair_sequence_check, triple_sequence_check, ClassicalTable, CoverSystem,
    Eta, Verdict,
};
use funcech::fixtures::{catalog, lookup};

use crate::error::CliError;
use crate::job::{element_region, ChainSpec, JobSpec, RequestSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeResult {
    pub degree: usize,
    pub group: String,
    pub stabilized: bool,
    pub stable_window: usize,
    /// The group at each stage, coarse to fine.
    pub stages: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictResult {
    pub check: String,
    pub passed: bool,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl From<Verdict> for VerdictResult {
    fn from(v: Verdict) -> Self {
        Self {
            check: v.check,
            passed: v.passed,
            failures: v.failures,
            notes: v.notes,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "request", rename_all = "snake_case")]
pub enum RequestResult {
    Homology {
        groups: Vec<DegreeResult>,
    },
    Cohomology {
        groups: Vec<DegreeResult>,
    },
    Eta {
        value: i64,
        stabilized: bool,
        dimension_bound: Option<usize>,
    },
    Check {
        verdict: VerdictResult,
    },
    Skipped {
        what: String,
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub space: String,
    pub compact: bool,
    pub coefficients: String,
    pub window: usize,
    pub degrees: [usize; 2],
    /// `[total simplices, subcomplex simplices]` per stage.
    pub nerve_sizes: Vec<[usize; 2]>,
    pub results: Vec<RequestResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results
            .iter()
            .all(|r| !matches!(r, RequestResult::Check { verdict } if !verdict.passed))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let compact = if self.compact {
            "compact"
        } else {
            "not compact; β-comparison unavailable"
        };
        let _ = writeln!(out, "space: {} ({compact})", self.space);
        let _ = writeln!(out, "coefficients: {}", self.coefficients);
        let sizes: Vec<String> = self.nerve_sizes.iter().map(|[t, s]| format!("{t}/{s}")).collect();
        let _ = writeln!(
            out,
            "stages: {} (nerve simplices total/sub: {})",
            sizes.len(),
            sizes.join(", ")
        );
        for r in &self.results {
            match r {
                RequestResult::Homology { groups } | RequestResult::Cohomology { groups } => {
                    let sep = if matches!(r, RequestResult::Homology { .. }) {
                        "_"
                    } else {
                        "^"
                    };
                    for g in groups {
                        let flag = if g.stabilized { "stabilized" } else { "not stabilized" };
                        let _ = writeln!(out, "H{sep}{} = {} ({flag})", g.degree, g.group);
                    }
                }
                RequestResult::Eta {
                    value,
                    stabilized,
                    dimension_bound,
                } => {
                    let bound = dimension_bound.map_or("none".to_string(), |d| d.to_string());
                    let flag = if *stabilized { "" } else { ", not stabilized" };
                    let _ = writeln!(out, "eta = {value} (nerve dimension bound {bound}{flag})");
                }
                RequestResult::Check { verdict } => {
                    let status = if verdict.passed { "pass" } else { "FAIL" };
                    let _ = writeln!(out, "{}: {status}", verdict.check);
                    for f in &verdict.failures {
                        let _ = writeln!(out, "  - {f}");
                    }
                    for n in &verdict.notes {
                        let _ = writeln!(out, "  note: {n}");
                    }
                }
                RequestResult::Skipped { what, reason } => {
                    let _ = writeln!(out, "{what}: skipped ({reason})");
                }
            }
        }
        out
    }
}

fn degree_result(n: usize, r: LimitReport) -> DegreeResult {
    DegreeResult {
        degree: n,
        group: r.limit_group.to_string(),
        stabilized: r.stabilized,
        stable_window: r.stable_window,
        stages: r.stage_groups.iter().map(ToString::to_string).collect(),
    }
}

fn limits(
    sys: &CoverSystem,
    g: &CoefficientGroup,
    lo: usize,
    hi: usize,
    v: Variance,
) -> Result<Vec<DegreeResult>, CliError> {
    (lo..=hi)
        .map(|n| Ok(degree_result(n, functional_limit(sys, g, n, v)?)))
        .collect()
}

fn fixture_table(job: &JobSpec) -> Option<ClassicalTable> {
    match &job.cover_chain {
        ChainSpec::Fixture { name, .. } => lookup(name).ok()?.table,
        ChainSpec::Standard { space, .. } => lookup(space).ok()?.table,
        ChainSpec::Explicit { .. } => None,
    }
}

pub fn run(job: &JobSpec) -> Result<Report, CliError> {
    let sys = job.system()?;
    let g = job.coefficient_group()?;
    let (lo, hi) = job.degrees()?;
    let mut results = Vec::new();
    for request in &job.requests {
        let result = match request {
            RequestSpec::Homology => RequestResult::Homology {
                groups: limits(&sys, &g, lo, hi, Variance::Homology)?,
            },
            RequestSpec::Cohomology => RequestResult::Cohomology {
                groups: limits(&sys, &g, lo, hi, Variance::Cohomology)?,
            },
            RequestSpec::Eta => {
                let e = eta(&sys, &g)?;
                let (value, stabilized) = match e.eta {
                    Eta::Value(v) => (v, true),
                    Eta::BoundedUnknown { value, .. } => (value, false),
                };
                RequestResult::Eta {
                    value,
                    stabilized,
                    dimension_bound: e.dimension_bound,
                }
            }
            RequestSpec::PairSequence => RequestResult::Check {
                verdict: pair_sequence_check(&sys, &g, lo, hi)?.into(),
            },
            RequestSpec::TripleSequence { inner } => {
                let b = element_region(sys.space(), inner)?;
                RequestResult::Check {
                    verdict: triple_sequence_check(&sys, &b, &g, lo, hi)?.into(),
                }
            }
            RequestSpec::CompactCheck => match fixture_table(job) {
                _ if !sys.space().is_compact() => RequestResult::Skipped {
                    what: "compact comparison".into(),
                    reason: "space is not compact; β-comparison unavailable".into(),
                },
                Some(table) => RequestResult::Check {
                    verdict: compact_beta_check(&sys, &g, lo, hi, &table)?.into(),
                },
                None => RequestResult::Skipped {
                    what: "compact comparison".into(),
                    reason: "no expected-group table for this space".into(),
                },
            },
        };
        results.push(result);
    }
    Ok(Report {
        space: sys.space().label().to_string(),
        compact: sys.space().is_compact(),
        coefficients: g.to_string(),
        window: sys.window(),
        degrees: [lo, hi],
        nerve_sizes: sys.nerves().iter().map(|p| [p.total().len(), p.sub().len()]).collect(),
        results,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureEntry {
    pub name: String,
    pub description: String,
    pub compact: bool,
    pub source: String,
    /// Integral homology of the pair by degree, when registered.
    pub relative: Option<Vec<String>>,
    pub absolute: Option<Vec<String>>,
}

pub fn list_fixtures() -> Vec<FixtureEntry> {
    catalog()
        .into_iter()
        .map(|f| {
            let render = |gs: &[funcech::abelian::FgAbGroup]| gs.iter().map(ToString::to_string).collect();
            FixtureEntry {
                name: f.name.to_string(),
                description: f.description.to_string(),
                compact: f.compact,
                source: f.source.to_string(),
                relative: f.table.as_ref().map(|t| render(&t.relative)),
                absolute: f.table.as_ref().map(|t| render(&t.absolute)),
            }
        })
        .collect()
}

pub fn fixtures_text(entries: &[FixtureEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        let compact = if e.compact { "compact" } else { "not compact" };
        let table = match (&e.relative, &e.absolute) {
            (Some(rel), Some(abs)) if rel != abs => {
                format!("H_* = [{}], absolute [{}]", rel.join(", "), abs.join(", "))
            }
            (Some(rel), _) => format!("H_* = [{}]", rel.join(", ")),
            _ => "no table".to_string(),
        };
        let _ = writeln!(out, "{:<18} {compact:<12} source: {:<18} {table}", e.name, e.source);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use funcech::abelian::FgAbGroup;

    fn circle_job() -> JobSpec {
        JobSpec::parse(
            r#"{"cover_chain": {"standard": {"space": "circle", "depth": 3}}, "requests": ["homology", "eta"]}"#,
        )
        .unwrap()
    }

    #[test]
    fn circle_h1() {
        let report = run(&circle_job()).unwrap();
        assert!(report.to_text().contains("H_1 = Z (stabilized)"));
        assert!(report.to_text().contains("eta = 1"));
    }

    #[test]
    fn json_round_trip_preserves_groups() {
        let report = run(&JobSpec::for_fixture("projective_plane").unwrap()).unwrap();
        let text = serde_json::to_string(&report).unwrap();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        for r in &back.results {
            if let RequestResult::Homology { groups } | RequestResult::Cohomology { groups } = r {
                for g in groups {
                    let parsed: FgAbGroup = g.group.parse().unwrap();
                    assert_eq!(parsed.to_string(), g.group);
                }
            }
        }
    }

    #[test]
    fn runs_are_deterministic() {
        let a = serde_json::to_string(&run(&circle_job()).unwrap()).unwrap();
        let b = serde_json::to_string(&run(&circle_job()).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn catalog_lists_six_or_more() {
        let entries = list_fixtures();
        assert!(entries.len() >= 6);
        assert!(entries.iter().all(|e| !e.source.is_empty()));
    }
}
