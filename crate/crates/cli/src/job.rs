//! The JSON job format and its translation into cover systems.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use funcech::abelian::{CoefficientGroup, FgAbGroup};
use funcech::backends::{circle_region, q, standard_chain, Interval, RatBox, Region, Space, StandardSpace};
use funcech::cech::{CoverSystem, DEFAULT_WINDOW};
use funcech::cover::Cover;
use funcech::fixtures::{lookup, DEFAULT_DEPTH};

use crate::error::CliError;

/// An exact rational `[numerator, denominator]`.
pub type Rational = [i64; 2];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntervalSpec {
    pub lo: Rational,
    pub hi: Rational,
    #[serde(default)]
    pub lo_closed: bool,
    #[serde(default)]
    pub hi_closed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SpaceSpec {
    Boxes {
        #[serde(default = "default_label")]
        label: String,
        dimension: usize,
        total: Vec<Vec<IntervalSpec>>,
        #[serde(default)]
        sub: Vec<Vec<IntervalSpec>>,
    },
    Circle {
        #[serde(default = "default_label")]
        label: String,
        /// Lifted arcs; `[0, 1/4]` and `[3/4, 5/4]` are both fine.
        #[serde(default)]
        sub: Vec<IntervalSpec>,
    },
    Finite {
        #[serde(default = "default_label")]
        label: String,
        points: usize,
        #[serde(default)]
        sub: Vec<usize>,
    },
}

fn default_label() -> String {
    "space".to_string()
}

/// One cover element, read according to the kind of the space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementSpec {
    Points(Vec<usize>),
    Arcs(Vec<IntervalSpec>),
    Boxes(Vec<Vec<IntervalSpec>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ChainSpec {
    Standard {
        space: String,
        depth: usize,
    },
    Fixture {
        name: String,
        #[serde(default)]
        depth: Option<usize>,
    },
    /// Explicit stages, coarse to fine. Without projections each fine
    /// element goes to the first coarse element containing it.
    Explicit {
        stages: Vec<Vec<ElementSpec>>,
        #[serde(default)]
        projections: Option<Vec<Vec<usize>>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum RequestSpec {
    Homology,
    Cohomology,
    Eta,
    PairSequence,
    /// The triple `(X, A, B)` with `B` given as one element-style region.
    TripleSequence {
        inner: ElementSpec,
    },
    CompactCheck,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsSpec {
    #[serde(default)]
    pub window: Option<usize>,
    #[serde(default)]
    pub degrees: Option<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    #[serde(default)]
    pub space: Option<SpaceSpec>,
    pub cover_chain: ChainSpec,
    #[serde(default = "default_coefficients")]
    pub coefficients: String,
    #[serde(default = "default_requests")]
    pub requests: Vec<RequestSpec>,
    #[serde(default)]
    pub options: OptionsSpec,
}

fn default_coefficients() -> String {
    "Z".to_string()
}

fn default_requests() -> Vec<RequestSpec> {
    vec![RequestSpec::Homology, RequestSpec::Cohomology]
}

impl JobSpec {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text =
            std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e.to_string()))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| CliError::Parse {
            path: e.path().to_string(),
            message: e.inner().to_string(),
        })
    }

    /// The bundled fixture with every request that applies to it.
    pub fn for_fixture(name: &str) -> Result<Self, CliError> {
        let fixture = lookup(name)?;
        let mut requests = vec![
            RequestSpec::Homology,
            RequestSpec::Cohomology,
            RequestSpec::Eta,
            RequestSpec::PairSequence,
        ];
        if fixture.compact && fixture.table.is_some() {
            requests.push(RequestSpec::CompactCheck);
        }
        Ok(Self {
            space: None,
            cover_chain: ChainSpec::Fixture {
                name: name.to_string(),
                depth: None,
            },
            coefficients: default_coefficients(),
            requests,
            options: OptionsSpec::default(),
        })
    }

    pub fn coefficient_group(&self) -> Result<CoefficientGroup, CliError> {
        let g: FgAbGroup = self.coefficients.parse()?;
        Ok(CoefficientGroup::new(g))
    }

    pub fn window(&self) -> usize {
        self.options.window.unwrap_or(DEFAULT_WINDOW)
    }

    pub fn degrees(&self) -> Result<(usize, usize), CliError> {
        let [lo, hi] = self.options.degrees.unwrap_or([0, 2]);
        if lo > hi {
            return Err(CliError::Input(format!("degree range {lo}..{hi} is empty")));
        }
        Ok((lo, hi))
    }

    pub fn system(&self) -> Result<CoverSystem, CliError> {
        let sys = match (&self.cover_chain, &self.space) {
            (ChainSpec::Standard { space, depth }, None) => standard_chain(space.parse::<StandardSpace>()?, *depth)?,
            (ChainSpec::Fixture { name, depth }, None) => lookup(name)?.system(depth.unwrap_or(DEFAULT_DEPTH))?,
            (ChainSpec::Explicit { stages, projections }, Some(space)) => {
                let space = Arc::new(build_space(space)?);
                let covers = stages
                    .iter()
                    .enumerate()
                    .map(|(j, elements)| {
                        let regions = elements
                            .iter()
                            .map(|e| element_region(&space, e))
                            .collect::<Result<Vec<_>, _>>()?;
                        Ok(Cover::new(format!("stage {j}"), space.clone(), regions)?)
                    })
                    .collect::<Result<Vec<_>, CliError>>()?;
                match projections {
                    Some(p) => CoverSystem::new(covers, p.clone())?,
                    None => CoverSystem::first_fit(covers)?,
                }
            }
            (ChainSpec::Explicit { .. }, None) => {
                return Err(CliError::Input("an explicit cover chain needs a `space`".into()))
            }
            (_, Some(_)) => return Err(CliError::Input("`space` is only read for explicit cover chains".into())),
        };
        Ok(sys.with_window(self.window()))
    }
}

fn rational(r: &Rational) -> Result<funcech::backends::Q, CliError> {
    if r[1] == 0 {
        return Err(CliError::Input(format!(
            "rational {}/{} has a zero denominator",
            r[0], r[1]
        )));
    }
    Ok(q(r[0], r[1]))
}

fn interval(i: &IntervalSpec) -> Result<Interval, CliError> {
    Ok(Interval::new(
        rational(&i.lo)?,
        rational(&i.hi)?,
        i.lo_closed,
        i.hi_closed,
    ))
}

fn rat_box(sides: &[IntervalSpec]) -> Result<RatBox, CliError> {
    Ok(RatBox::new(sides.iter().map(interval).collect::<Result<_, _>>()?))
}

fn build_space(s: &SpaceSpec) -> Result<Space, CliError> {
    Ok(match s {
        SpaceSpec::Boxes {
            label,
            dimension,
            total,
            sub,
        } => Space::boxes(
            label.clone(),
            *dimension,
            total.iter().map(|b| rat_box(b)).collect::<Result<_, _>>()?,
            sub.iter().map(|b| rat_box(b)).collect::<Result<_, _>>()?,
        )?,
        SpaceSpec::Circle { label, sub } => {
            Space::circle(label.clone(), sub.iter().map(interval).collect::<Result<_, _>>()?)?
        }
        SpaceSpec::Finite { label, points, sub } => Space::finite(label.clone(), *points, sub.iter().copied())?,
    })
}

/// Reads an element in the shape its space expects. An empty list is an
/// empty element of any kind.
pub fn element_region(space: &Space, e: &ElementSpec) -> Result<Region, CliError> {
    let empty = || space.total().empty_like();
    match (space.total(), e) {
        (_, ElementSpec::Points(p)) if p.is_empty() => Ok(empty()),
        (Region::Points(_), ElementSpec::Points(p)) => Ok(Region::points(p.iter().copied())),
        (Region::Boxes(_), ElementSpec::Arcs(arcs)) if space.is_circle() => Ok(circle_region(
            &arcs.iter().map(interval).collect::<Result<Vec<_>, _>>()?,
        )),
        (Region::Boxes(_), ElementSpec::Boxes(boxes)) if !space.is_circle() => Ok(Region::boxes(
            boxes.iter().map(|b| rat_box(b)).collect::<Result<Vec<_>, _>>()?,
        )),
        _ => Err(CliError::Input(format!(
            "element {e:?} does not fit a {:?} space",
            space.kind()
        ))),
    }
}
