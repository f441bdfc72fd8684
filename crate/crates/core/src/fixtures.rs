//! The bundled catalog: spaces with standard chains, their expected integral
//! homology where the space is compact, and a few maps between them.

use std::sync::Arc;

use crate::abelian::FgAbGroup;
use crate::backends::{
    circle_arc_chain, complex_chain, open_interval_chain, q, square_chain, standard_chain, Interval, MapHandle,
    MapKind, Point, RatBox, Space, StandardSpace,
};
use crate::cech::{ClassicalTable, CoverSystem};
use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::simplicial::Complex;

/// Depth used when a caller does not ask for one.
pub const DEFAULT_DEPTH: usize = 3;

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub compact: bool,
    /// Where the expected groups come from.
    pub source: &'static str,
    /// Integral homology of the pair and of the total space; `None` when no
    /// comparison is available.
    pub table: Option<ClassicalTable>,
    build: fn(usize) -> Result<CoverSystem>,
}

impl Fixture {
    pub fn system(&self, depth: usize) -> Result<CoverSystem> {
        (self.build)(depth)
    }

    pub fn has_pair(&self) -> bool {
        self.table.as_ref().is_some_and(|t| t.relative != t.absolute)
    }
}

fn z(rank: usize) -> FgAbGroup {
    FgAbGroup::free(rank)
}

fn zero() -> FgAbGroup {
    FgAbGroup::trivial()
}

fn table(relative: Vec<FgAbGroup>, absolute: Vec<FgAbGroup>) -> Option<ClassicalTable> {
    Some(ClassicalTable { relative, absolute })
}

/// Ten triangles on six vertices; the minimal triangulation.
pub fn projective_plane_complex() -> Complex {
    Complex::closure([
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 6, 2],
        [2, 3, 5],
        [3, 4, 6],
        [4, 5, 2],
        [5, 6, 3],
        [6, 2, 4],
    ])
}

/// Two vertices joined by three paths (one direct, two through a middle
/// vertex): a graph with two independent cycles.
pub fn wedge_complex() -> Complex {
    Complex::closure([[0, 1], [0, 2], [1, 2], [0, 3], [1, 3]])
}

fn empty_chain(depth: usize) -> Result<CoverSystem> {
    let space = Arc::new(Space::finite("empty", 0, [])?);
    let cover = Cover::new("empty", space, Vec::new())?;
    CoverSystem::new(vec![cover; depth.max(1)], vec![Vec::new(); depth.max(1) - 1])
}

pub fn catalog() -> Vec<Fixture> {
    vec![
        Fixture {
            name: "point",
            description: "single point, singleton cover at every stage",
            compact: true,
            source: "singleton",
            table: table(vec![z(1)], vec![z(1)]),
            build: |d| standard_chain(StandardSpace::Point, d),
        },
        Fixture {
            name: "interval",
            description: "[0, 1] with 2^j + 1 overlapping pieces",
            compact: true,
            source: "contractible",
            table: table(vec![z(1)], vec![z(1)]),
            build: |d| standard_chain(StandardSpace::Interval, d),
        },
        Fixture {
            name: "circle",
            description: "R/Z with 3·2^j open arcs",
            compact: true,
            source: "hollow polygon",
            table: table(vec![z(1), z(1)], vec![z(1), z(1)]),
            build: |d| standard_chain(StandardSpace::Circle, d),
        },
        Fixture {
            name: "interval_pair",
            description: "([0, 1], {0, 1}) with the interval chain",
            compact: true,
            source: "relative interval",
            table: table(vec![zero(), z(1)], vec![z(1)]),
            build: |d| standard_chain(StandardSpace::IntervalPair, d),
        },
        Fixture {
            name: "projective_plane",
            description: "finite model whose nerve is the 6-vertex projective plane",
            compact: true,
            source: "explicit nerve",
            table: table(vec![z(1), FgAbGroup::cyclic(2)], vec![z(1), FgAbGroup::cyclic(2)]),
            build: |d| complex_chain("projective_plane", &projective_plane_complex(), d),
        },
        Fixture {
            name: "wedge",
            description: "finite model with 5 points and 4 elements, nerve a graph with two cycles",
            compact: true,
            source: "explicit nerve",
            table: table(vec![z(1), z(2)], vec![z(1), z(2)]),
            build: |d| complex_chain("wedge", &wedge_complex(), d),
        },
        Fixture {
            name: "circle_arc",
            description: "(R/Z, [0, 1/4]) with the circle chain",
            compact: true,
            source: "relative circle",
            table: table(vec![zero(), z(1)], vec![z(1), z(1)]),
            build: circle_arc_chain,
        },
        Fixture {
            name: "square",
            description: "[0, 1]^2 with product covers",
            compact: true,
            source: "contractible",
            table: table(vec![z(1)], vec![z(1)]),
            build: square_chain,
        },
        Fixture {
            name: "empty",
            description: "the empty space",
            compact: true,
            source: "empty",
            table: table(Vec::new(), Vec::new()),
            build: empty_chain,
        },
        Fixture {
            name: "open_interval",
            description: "(0, 1), not compact",
            compact: false,
            source: "none",
            table: None,
            build: open_interval_chain,
        },
    ]
}

pub fn lookup(name: &str) -> Result<Fixture> {
    catalog()
        .into_iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::InvalidInput(format!("unknown fixture `{name}`")))
}

/// A map of pairs with a chain on its target and a chain on its source
/// fine enough for the induced maps.
#[derive(Clone, Debug)]
pub struct MapFixture {
    pub name: &'static str,
    pub map: MapHandle,
    pub source: CoverSystem,
    pub target: CoverSystem,
}

fn pulled(name: &'static str, map: MapHandle, target: CoverSystem) -> Result<MapFixture> {
    let source = CoverSystem::pullback(&map, &target)?;
    Ok(MapFixture {
        name,
        map,
        source,
        target,
    })
}

pub fn map_fixtures(depth: usize) -> Result<Vec<MapFixture>> {
    let circle = standard_chain(StandardSpace::Circle, depth)?;
    let pair = standard_chain(StandardSpace::IntervalPair, depth)?;
    let s = circle.space().clone();
    let p = pair.space().clone();
    let winding = MapHandle::new(s.clone(), s.clone(), MapKind::Winding(2))?;
    let point = Arc::new(Space::finite("point", 1, [])?);
    let basepoint = MapHandle::new(point, s.clone(), MapKind::Constant(Point::Turn(q(0, 1))))?;
    let flip = MapHandle::new(
        p.clone(),
        p.clone(),
        MapKind::Affine {
            scale: vec![q(-1, 1)],
            shift: vec![q(1, 1)],
        },
    )?;
    let ends = vec![
        RatBox::new(vec![Interval::point(q(0, 1))]),
        RatBox::new(vec![Interval::point(q(1, 1))]),
    ];
    let endpoints = Arc::new(Space::boxes("endpoints", 1, ends.clone(), ends)?);
    let inclusion = MapHandle::new(endpoints, p.clone(), MapKind::Inclusion)?;
    Ok(vec![
        pulled("identity", MapHandle::identity(s), circle.clone())?,
        pulled("winding", winding, circle.clone())?,
        pulled("basepoint", basepoint, circle)?,
        pulled("flip", flip, pair.clone())?,
        pulled("endpoints", inclusion, pair)?,
    ])
}
