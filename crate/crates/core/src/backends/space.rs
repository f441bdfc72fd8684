use std::fmt;

use super::geometry::{full_turn, wrap, Interval, RatBox, Q};
use super::region::Region;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpaceKind {
    /// Finite unions of boxes in `Q^dimension`.
    Boxes { dimension: usize },
    /// The circle `R/Z`, parametrized by turns.
    Circle,
    /// An explicit finite point set `{0, …, points - 1}`.
    Finite { points: usize },
}

/// A space pair `(X, A)` for one of the exact backends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Space {
    label: String,
    kind: SpaceKind,
    total: Region,
    sub: Region,
    compact: bool,
}

impl Space {
    pub fn new(label: impl Into<String>, kind: SpaceKind, total: Region, sub: Region) -> Result<Self> {
        let label = label.into();
        check_kind(kind, &total)?;
        check_kind(kind, &sub)?;
        if !sub.is_subset_of(&total) {
            return Err(Error::Geometry(format!(
                "subspace of `{label}` is not contained in the space"
            )));
        }
        let compact = match kind {
            SpaceKind::Boxes { .. } => total.closure().is_subset_of(&total),
            SpaceKind::Circle | SpaceKind::Finite { .. } => true,
        };
        Ok(Self {
            label,
            kind,
            total,
            sub,
            compact,
        })
    }

    /// A union of boxes in `Q^dimension` with a subspace of the same kind.
    pub fn boxes(label: impl Into<String>, dimension: usize, total: Vec<RatBox>, sub: Vec<RatBox>) -> Result<Self> {
        Self::new(
            label,
            SpaceKind::Boxes { dimension },
            Region::boxes(total),
            Region::boxes(sub),
        )
    }

    /// The circle with a subspace given by lifted arcs (and degenerate arcs for points).
    pub fn circle(label: impl Into<String>, sub: Vec<Interval>) -> Result<Self> {
        let total = Region::boxes([RatBox::new(vec![full_turn()])]);
        Self::new(label, SpaceKind::Circle, total, circle_region(&sub))
    }

    pub fn finite(label: impl Into<String>, points: usize, sub: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::new(
            label,
            SpaceKind::Finite { points },
            Region::points(0..points),
            Region::points(sub),
        )
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn total(&self) -> &Region {
        &self.total
    }

    pub fn sub(&self) -> &Region {
        &self.sub
    }

    /// Closed and bounded, hence compact. Circles and finite spaces always are.
    pub fn is_compact(&self) -> bool {
        self.compact
    }

    pub fn is_circle(&self) -> bool {
        self.kind == SpaceKind::Circle
    }

    pub fn is_empty(&self) -> bool {
        self.total.is_empty()
    }

    /// The same space with a different distinguished subspace.
    pub fn with_sub(&self, sub: Region) -> Result<Space> {
        Space::new(self.label.clone(), self.kind, self.total.clone(), sub)
    }

    /// `(X, ∅)`
    pub fn absolute(&self) -> Space {
        Space {
            sub: self.sub.empty_like(),
            ..self.clone()
        }
    }

    /// The subspace as a space in its own right, with `inner` as its subspace.
    pub fn subspace(&self, inner: Region) -> Result<Space> {
        if !inner.is_subset_of(&self.sub) {
            return Err(Error::Geometry(
                "inner subspace is not contained in the subspace".into(),
            ));
        }
        let mut s = Space::new(format!("{} (subspace)", self.label), self.kind, self.sub.clone(), inner)?;
        if self.kind == SpaceKind::Circle {
            // a subspace of the circle is compact exactly when it is closed
            s.compact = circle_closed(&self.sub);
        }
        Ok(s)
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)
    }
}

fn check_kind(kind: SpaceKind, r: &Region) -> Result<()> {
    let ok = match (kind, r) {
        (SpaceKind::Boxes { dimension }, Region::Boxes(b)) => b.iter().all(|b| b.dimension() == dimension),
        (SpaceKind::Circle, Region::Boxes(b)) => b.iter().all(|b| {
            b.dimension() == 1 && b.0[0].lo >= Q::from_integer(0.into()) && b.0[0].hi <= Q::from_integer(1.into())
        }),
        (SpaceKind::Finite { points }, Region::Points(p)) => p.iter().all(|&i| i < points),
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Geometry(format!("region does not belong to a {kind:?} space")))
    }
}

/// A circle subset from lifted arcs.
pub fn circle_region(arcs: &[Interval]) -> Region {
    Region::boxes(arcs.iter().flat_map(wrap).map(|i| RatBox::new(vec![i])))
}

/// Whether a circle subset is closed: its closure, taken in the lifted
/// line and wrapped back, adds no points.
fn circle_closed(r: &Region) -> bool {
    let Region::Boxes(b) = r else { return true };
    let closure = circle_region(&b.iter().map(|b| b.0[0].closure()).collect::<Vec<_>>());
    closure.is_subset_of(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backends::geometry::q;

    #[test]
    fn compactness_is_decided_exactly() {
        let closed = Space::boxes(
            "I",
            1,
            vec![RatBox::new(vec![Interval::closed(q(0, 1), q(1, 1))])],
            vec![],
        );
        assert!(closed.unwrap().is_compact());
        let split = Space::boxes(
            "I",
            1,
            vec![
                RatBox::new(vec![Interval::new(q(0, 1), q(1, 2), true, false)]),
                RatBox::new(vec![Interval::closed(q(1, 2), q(1, 1))]),
            ],
            vec![],
        );
        assert!(split.unwrap().is_compact());
        let open = Space::boxes(
            "J",
            1,
            vec![RatBox::new(vec![Interval::open(q(0, 1), q(1, 1))])],
            vec![],
        );
        assert!(!open.unwrap().is_compact());
    }

    #[test]
    fn subspace_must_sit_inside() {
        let bad = Space::boxes(
            "I",
            1,
            vec![RatBox::new(vec![Interval::closed(q(0, 1), q(1, 1))])],
            vec![RatBox::new(vec![Interval::point(q(2, 1))])],
        );
        assert!(matches!(bad, Err(Error::Geometry(_))));
    }

    #[test]
    fn circle_subspaces() {
        let s = Space::circle("S", vec![Interval::closed(q(0, 1), q(1, 4))]).unwrap();
        assert!(s.subspace(s.sub().empty_like()).unwrap().is_compact());
        let s = Space::circle("S", vec![Interval::open(q(0, 1), q(1, 4))]).unwrap();
        assert!(!s.subspace(s.sub().empty_like()).unwrap().is_compact());
    }
}
