//! Continuous maps between backend spaces, given by exact preimage rules.

use std::sync::Arc;

use num_traits::Zero;

use super::geometry::{wrap, Interval, Point, RatBox, Q};
use super::region::Region;
use super::space::{Space, SpaceKind};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapKind {
    Identity,
    /// The source is a subset of the target.
    Inclusion,
    /// `x ↦ scale·x + shift` axis by axis on box spaces.
    Affine {
        scale: Vec<Q>,
        shift: Vec<Q>,
    },
    /// `t ↦ t + turn` on the circle.
    Rotation(Q),
    /// `t ↦ degree·t` on the circle.
    Winding(u32),
    Constant(Point),
    /// `i ↦ images[i]` between finite spaces.
    Finite(Vec<usize>),
    /// Applied first to last.
    Composite(Vec<MapHandle>),
}

/// A map of pairs `f : (X, A) -> (Y, B)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapHandle {
    source: Arc<Space>,
    target: Arc<Space>,
    kind: MapKind,
}

impl MapHandle {
    pub fn new(source: Arc<Space>, target: Arc<Space>, kind: MapKind) -> Result<Self> {
        check_support(&kind, source.kind(), target.kind())?;
        let f = Self { source, target, kind };
        if !f.source.total().is_subset_of(&f.preimage(f.target.total())) {
            return Err(Error::Geometry(format!(
                "map does not send `{}` into `{}`",
                f.source.label(),
                f.target.label()
            )));
        }
        f.check_pair(f.source.sub(), f.target.sub())?;
        Ok(f)
    }

    pub fn identity(space: Arc<Space>) -> Self {
        Self {
            source: space.clone(),
            target: space,
            kind: MapKind::Identity,
        }
    }

    pub fn source(&self) -> &Arc<Space> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Space> {
        &self.target
    }

    pub fn kind(&self) -> &MapKind {
        &self.kind
    }

    /// Checks that `f(a) ⊆ b`.
    pub fn check_pair(&self, a: &Region, b: &Region) -> Result<()> {
        if a.is_subset_of(&self.preimage(b)) {
            Ok(())
        } else {
            Err(Error::Geometry(
                "map does not send the subspace into the target subspace".into(),
            ))
        }
    }

    /// `f^{-1}(r)`, always inside the source space.
    pub fn preimage(&self, r: &Region) -> Region {
        self.source.total().intersect(&pull(&self.kind, r, self.source.total()))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &MapHandle) -> Result<MapHandle> {
        if !inner.target.total().same_set(self.source.total()) {
            return Err(Error::NonComposable("inner target differs from outer source".into()));
        }
        let mut kinds = match &inner.kind {
            MapKind::Composite(k) => k.clone(),
            _ => vec![inner.clone()],
        };
        match &self.kind {
            MapKind::Composite(k) => kinds.extend(k.iter().cloned()),
            _ => kinds.push(self.clone()),
        }
        MapHandle::new(inner.source.clone(), self.target.clone(), MapKind::Composite(kinds))
    }

    /// The same map between other pairs with the same underlying spaces
    /// (or their subspaces, for restrictions).
    pub fn between(&self, source: Arc<Space>, target: Arc<Space>) -> Result<MapHandle> {
        MapHandle::new(source, target, self.kind.clone())
    }
}

fn check_support(kind: &MapKind, source: SpaceKind, target: SpaceKind) -> Result<()> {
    let unsupported = |why: &str| Err(Error::UnsupportedMap(why.to_string()));
    match kind {
        MapKind::Identity | MapKind::Inclusion => {
            if source == target || matches!((source, target), (SpaceKind::Finite { .. }, SpaceKind::Finite { .. })) {
                Ok(())
            } else {
                unsupported("identity and inclusion need spaces of the same kind")
            }
        }
        MapKind::Affine { scale, shift } => match (source, target) {
            (SpaceKind::Boxes { dimension: a }, SpaceKind::Boxes { dimension: b })
                if a == b && scale.len() == a && shift.len() == a =>
            {
                if scale.iter().any(Zero::is_zero) {
                    unsupported("affine maps need nonzero scale factors")
                } else {
                    Ok(())
                }
            }
            _ => unsupported("affine maps act on box spaces of matching dimension"),
        },
        MapKind::Rotation(_) | MapKind::Winding(_) => {
            if source == SpaceKind::Circle && target == SpaceKind::Circle {
                if matches!(kind, MapKind::Winding(0)) {
                    unsupported("winding degree must be positive")
                } else {
                    Ok(())
                }
            } else {
                unsupported("rotations and windings act on the circle")
            }
        }
        MapKind::Constant(p) => match (p, target) {
            (Point::Coords(x), SpaceKind::Boxes { dimension }) if x.len() == dimension => Ok(()),
            (Point::Turn(_), SpaceKind::Circle) => Ok(()),
            (Point::Finite(i), SpaceKind::Finite { points }) if *i < points => Ok(()),
            _ => unsupported("constant value is not a point of the target"),
        },
        MapKind::Finite(images) => match (source, target) {
            (SpaceKind::Finite { points: a }, SpaceKind::Finite { points: b })
                if images.len() == a && images.iter().all(|&i| i < b) =>
            {
                Ok(())
            }
            _ => unsupported("finite maps need one image point per source point"),
        },
        MapKind::Composite(kinds) => {
            if kinds.is_empty() {
                unsupported("empty composite")
            } else {
                Ok(())
            }
        }
    }
}

fn map_pieces(r: &Region, f: impl Fn(&Interval) -> Vec<Interval>) -> Region {
    match r {
        Region::Boxes(b) => Region::boxes(b.iter().flat_map(|b| f(&b.0[0])).map(|i| RatBox::new(vec![i]))),
        Region::Points(_) => r.empty_like(),
    }
}

fn pull(kind: &MapKind, r: &Region, source_total: &Region) -> Region {
    match kind {
        MapKind::Identity | MapKind::Inclusion => match (r, source_total) {
            (Region::Boxes(_), Region::Boxes(_)) | (Region::Points(_), Region::Points(_)) => r.clone(),
            _ => source_total.empty_like(),
        },
        MapKind::Affine { scale, shift } => match r {
            Region::Boxes(b) => Region::boxes(b.iter().map(|b| {
                RatBox::new(
                    b.0.iter()
                        .enumerate()
                        .map(|(k, i)| i.translate(&-&shift[k]).scale(&(Q::from_integer(1.into()) / &scale[k])))
                        .collect(),
                )
            })),
            Region::Points(_) => r.empty_like(),
        },
        MapKind::Rotation(t) => map_pieces(r, |i| wrap(&i.translate(&-t))),
        MapKind::Winding(d) => {
            let inv = Q::new(1.into(), (*d).into());
            map_pieces(r, |i| {
                (0..*d)
                    .map(|j| i.translate(&Q::from_integer(j.into())).scale(&inv))
                    .collect()
            })
        }
        MapKind::Constant(p) => {
            if r.contains_point(p) {
                source_total.clone()
            } else {
                source_total.empty_like()
            }
        }
        MapKind::Finite(images) => match r {
            Region::Points(s) => Region::points((0..images.len()).filter(|&i| s.contains(&images[i]))),
            Region::Boxes(_) => source_total.empty_like(),
        },
        MapKind::Composite(maps) => maps.iter().rev().fold(r.clone(), |acc, f| f.preimage(&acc)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backends::geometry::q;
    use crate::backends::space::circle_region;

    fn circle() -> Arc<Space> {
        Arc::new(Space::circle("S", vec![]).unwrap())
    }

    #[test]
    fn winding_preimage_of_arc() {
        let w = MapHandle::new(circle(), circle(), MapKind::Winding(2)).unwrap();
        let arc = circle_region(&[Interval::open(q(0, 1), q(5, 12))]);
        let pre = w.preimage(&arc);
        let expected = circle_region(&[Interval::open(q(0, 1), q(5, 24)), Interval::open(q(1, 2), q(17, 24))]);
        assert!(pre.same_set(&expected));
        assert_eq!(pre.components(true).len(), 2);
    }

    #[test]
    fn rotation_wraps() {
        let r = MapHandle::new(circle(), circle(), MapKind::Rotation(q(1, 2))).unwrap();
        let arc = circle_region(&[Interval::open(q(0, 1), q(3, 4))]);
        let expected = circle_region(&[Interval::open(q(1, 2), q(5, 4))]);
        assert!(r.preimage(&arc).same_set(&expected));
    }

    #[test]
    fn affine_flip_of_interval_pair() {
        let unit = RatBox::new(vec![Interval::closed(q(0, 1), q(1, 1))]);
        let ends = vec![
            RatBox::new(vec![Interval::point(q(0, 1))]),
            RatBox::new(vec![Interval::point(q(1, 1))]),
        ];
        let x = Arc::new(Space::boxes("I", 1, vec![unit], ends).unwrap());
        let flip = MapKind::Affine {
            scale: vec![q(-1, 1)],
            shift: vec![q(1, 1)],
        };
        let f = MapHandle::new(x.clone(), x.clone(), flip).unwrap();
        let left = Region::boxes([RatBox::new(vec![Interval::new(q(0, 1), q(1, 3), true, false)])]);
        let pre = f.preimage(&left);
        assert!(pre.same_set(&Region::boxes([RatBox::new(vec![Interval::new(
            q(2, 3),
            q(1, 1),
            false,
            true
        )])])));
        let shrink = MapKind::Affine {
            scale: vec![q(2, 1)],
            shift: vec![q(0, 1)],
        };
        assert!(matches!(MapHandle::new(x.clone(), x, shrink), Err(Error::Geometry(_))));
    }

    #[test]
    fn unsupported_kinds() {
        let p = Arc::new(Space::finite("p", 1, []).unwrap());
        assert!(matches!(
            MapHandle::new(p.clone(), p, MapKind::Winding(2)),
            Err(Error::UnsupportedMap(_))
        ));
    }

    #[test]
    fn constant_into_circle_and_composition() {
        let p = Arc::new(Space::finite("p", 1, []).unwrap());
        let c = MapHandle::new(p, circle(), MapKind::Constant(Point::Turn(q(1, 8)))).unwrap();
        let arc = circle_region(&[Interval::open(q(0, 1), q(1, 4))]);
        assert_eq!(c.preimage(&arc), Region::points([0]));
        let w = MapHandle::new(circle(), circle(), MapKind::Winding(3)).unwrap();
        let wc = w.compose(&c).unwrap();
        // 3/8 lies outside (0, 1/4)
        assert!(wc.preimage(&arc).is_empty());
        let late = circle_region(&[Interval::open(q(1, 4), q(1, 2))]);
        assert_eq!(wc.preimage(&late), Region::points([0]));
    }
}
