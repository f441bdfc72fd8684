//! Standard refinement chains on the bundled spaces.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::geometry::{q, Interval, RatBox};
use super::region::Region;
use super::space::{circle_region, Space};
use crate::cech::CoverSystem;
use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::simplicial::{Complex, Simplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StandardSpace {
    Circle,
    Interval,
    Point,
    IntervalPair,
}

impl StandardSpace {
    pub const ALL: [StandardSpace; 4] = [
        StandardSpace::Circle,
        StandardSpace::Interval,
        StandardSpace::Point,
        StandardSpace::IntervalPair,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StandardSpace::Circle => "circle",
            StandardSpace::Interval => "interval",
            StandardSpace::Point => "point",
            StandardSpace::IntervalPair => "interval_pair",
        }
    }
}

impl fmt::Display for StandardSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StandardSpace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StandardSpace::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown standard space `{s}`")))
    }
}

fn halving(depth: usize, size: impl Fn(usize) -> usize) -> Vec<Vec<usize>> {
    (1..depth).map(|j| (0..size(j)).map(|k| k / 2).collect()).collect()
}

fn check_depth(depth: usize) -> Result<()> {
    if depth == 0 {
        return Err(Error::InvalidInput("a chain needs depth at least 1".into()));
    }
    Ok(())
}

/// The standard chain of `depth` covers on one of the bundled spaces.
///
/// * circle: `3·2^j` open arcs `(k/M, k/M + 5/(4M))`, projections `k ↦ ⌊k/2⌋`;
/// * interval: `2^j + 1` pieces `((i-1)h, (i+1)h) ∩ [0, 1]` with `h = 2^-j`;
/// * point: the singleton cover repeated;
/// * interval_pair: the interval chain on `([0, 1], {0, 1})`.
pub fn standard_chain(space: StandardSpace, depth: usize) -> Result<CoverSystem> {
    check_depth(depth)?;
    match space {
        StandardSpace::Circle => circle_chain(Arc::new(Space::circle("circle", Vec::new())?), depth),
        StandardSpace::Interval => interval_chain(unit_interval("interval", false)?, depth),
        StandardSpace::IntervalPair => interval_chain(unit_interval("interval_pair", true)?, depth),
        StandardSpace::Point => {
            let s = Arc::new(Space::finite("point", 1, [])?);
            constant_chain(Cover::new("point", s, vec![Region::points([0])])?, depth)
        }
    }
}

fn unit_interval(label: &str, endpoints: bool) -> Result<Arc<Space>> {
    let total = vec![RatBox::new(vec![Interval::closed(q(0, 1), q(1, 1))])];
    let sub = if endpoints {
        vec![
            RatBox::new(vec![Interval::point(q(0, 1))]),
            RatBox::new(vec![Interval::point(q(1, 1))]),
        ]
    } else {
        Vec::new()
    };
    Ok(Arc::new(Space::boxes(label, 1, total, sub)?))
}

fn interval_pieces(j: usize) -> Vec<Interval> {
    let d = 1i64 << j;
    (0..=d).map(|i| Interval::open(q(i - 1, d), q(i + 1, d))).collect()
}

fn interval_chain(space: Arc<Space>, depth: usize) -> Result<CoverSystem> {
    let covers = (0..depth)
        .map(|j| {
            let elements = interval_pieces(j)
                .into_iter()
                .map(|i| Region::boxes([RatBox::new(vec![i])]))
                .collect();
            Cover::new(format!("{}/{j}", space.label()), space.clone(), elements)
        })
        .collect::<Result<Vec<_>>>()?;
    CoverSystem::new(covers, halving(depth, |j| (1 << j) + 1))
}

fn circle_arcs(j: usize) -> Vec<Region> {
    let m = 3 * (1i64 << j);
    (0..m)
        .map(|k| circle_region(&[Interval::open(q(k, m), q(4 * k + 5, 4 * m))]))
        .collect()
}

fn circle_chain(space: Arc<Space>, depth: usize) -> Result<CoverSystem> {
    let covers = (0..depth)
        .map(|j| Cover::new(format!("{}/{j}", space.label()), space.clone(), circle_arcs(j)))
        .collect::<Result<Vec<_>>>()?;
    CoverSystem::new(covers, halving(depth, |j| 3 << j))
}

fn constant_chain(cover: Cover, depth: usize) -> Result<CoverSystem> {
    let identity: Vec<usize> = (0..cover.len()).collect();
    CoverSystem::new(vec![cover; depth], vec![identity; depth - 1])
}

/// The open interval `(0, 1)`, covered like the closed one. Not compact.
pub fn open_interval_chain(depth: usize) -> Result<CoverSystem> {
    check_depth(depth)?;
    let total = vec![RatBox::new(vec![Interval::open(q(0, 1), q(1, 1))])];
    interval_chain(Arc::new(Space::boxes("open_interval", 1, total, Vec::new())?), depth)
}

/// The unit square with product covers of the interval pieces.
pub fn square_chain(depth: usize) -> Result<CoverSystem> {
    check_depth(depth)?;
    let side = Interval::closed(q(0, 1), q(1, 1));
    let space = Arc::new(Space::boxes(
        "square",
        2,
        vec![RatBox::new(vec![side.clone(), side])],
        Vec::new(),
    )?);
    let mut covers = Vec::new();
    let mut projections = Vec::new();
    for j in 0..depth {
        let pieces = interval_pieces(j);
        let n = pieces.len();
        let elements = (0..n * n)
            .map(|k| Region::boxes([RatBox::new(vec![pieces[k / n].clone(), pieces[k % n].clone()])]))
            .collect();
        covers.push(Cover::new(format!("square/{j}"), space.clone(), elements)?);
        if j > 0 {
            let coarse = (1 << (j - 1)) + 1;
            projections.push((0..n * n).map(|k| (k / n / 2) * coarse + (k % n) / 2).collect());
        }
    }
    CoverSystem::new(covers, projections)
}

/// The circle chain on the pair `(S¹, [0, 1/4])`.
pub fn circle_arc_chain(depth: usize) -> Result<CoverSystem> {
    check_depth(depth)?;
    let space = Space::circle("circle_arc", vec![Interval::closed(q(0, 1), q(1, 4))])?;
    circle_chain(Arc::new(space), depth)
}

/// A pure complex realized as a finite space: one point per facet, and for
/// each vertex the element of facets containing it. The nerve of this cover
/// is the complex itself, relabeled by vertex order.
pub fn complex_chain(label: &str, complex: &Complex, depth: usize) -> Result<CoverSystem> {
    check_depth(depth)?;
    let facets = facets(complex);
    let space = Arc::new(Space::finite(label, facets.len(), [])?);
    let elements = complex
        .vertices()
        .into_iter()
        .map(|v| {
            Region::points(
                facets
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| f.vertices().contains(&v))
                    .map(|(i, _)| i),
            )
        })
        .collect();
    constant_chain(Cover::new(label, space, elements)?, depth)
}

fn facets(complex: &Complex) -> Vec<Simplex> {
    let top = complex.dimension().unwrap_or(0);
    complex
        .iter()
        .filter(|s| {
            s.dim() == top
                || complex
                    .simplices(s.dim() + 1)
                    .iter()
                    .all(|t| !s.vertices().iter().all(|v| t.vertices().contains(v)))
        })
        .cloned()
        .collect()
}
