//! Finite unions of boxes or of points, with exact set predicates.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::geometry::{frac, Interval, Point, RatBox, Q};

/// A subset of a backend space.
///
/// Circle subsets are unions of 1-dimensional boxes inside `[0, 1)`, where
/// `1` is glued to `0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    Boxes(Vec<RatBox>),
    Points(BTreeSet<usize>),
}

impl Region {
    pub fn boxes(boxes: impl IntoIterator<Item = RatBox>) -> Self {
        Region::Boxes(boxes.into_iter().filter(|b| !b.is_empty()).collect())
    }

    pub fn points(points: impl IntoIterator<Item = usize>) -> Self {
        Region::Points(points.into_iter().collect())
    }

    /// An empty region of the same kind.
    pub fn empty_like(&self) -> Self {
        match self {
            Region::Boxes(_) => Region::Boxes(Vec::new()),
            Region::Points(_) => Region::Points(BTreeSet::new()),
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            Region::Boxes(b) => b.iter().all(RatBox::is_empty),
            Region::Points(p) => p.is_empty(),
        }
    }

    pub fn intersect(&self, other: &Region) -> Region {
        match (self, other) {
            (Region::Boxes(a), Region::Boxes(b)) => {
                Region::boxes(a.iter().flat_map(|x| b.iter().map(move |y| x.intersect(y))))
            }
            (Region::Points(a), Region::Points(b)) => Region::Points(a & b),
            _ => self.empty_like(),
        }
    }

    pub fn union(&self, other: &Region) -> Region {
        match (self, other) {
            (Region::Boxes(a), Region::Boxes(b)) => Region::boxes(a.iter().chain(b).cloned()),
            (Region::Points(a), Region::Points(b)) => Region::Points(a | b),
            _ => self.clone(),
        }
    }

    /// Exact `self ⊆ other`.
    ///
    /// Box membership only changes at box endpoints, so it is enough to test
    /// every point of the grid built from all endpoints and the midpoints
    /// between consecutive endpoints.
    pub fn is_subset_of(&self, other: &Region) -> bool {
        match (self, other) {
            (Region::Points(a), Region::Points(b)) => a.is_subset(b),
            (Region::Boxes(a), Region::Boxes(b)) => a.iter().all(|x| box_within(x, b)),
            _ => self.is_empty(),
        }
    }

    pub fn same_set(&self, other: &Region) -> bool {
        self.is_subset_of(other) && other.is_subset_of(self)
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        match (self, p) {
            (Region::Boxes(b), Point::Coords(x)) => b.iter().any(|b| b.contains(x)),
            (Region::Boxes(b), Point::Turn(t)) => {
                let x = [frac(t)];
                b.iter().any(|b| b.contains(&x))
            }
            (Region::Points(s), Point::Finite(i)) => s.contains(i),
            _ => false,
        }
    }

    /// Topological closure; only meaningful for box regions in `Q^n`.
    pub fn closure(&self) -> Region {
        match self {
            Region::Boxes(b) => Region::boxes(b.iter().map(RatBox::closure)),
            Region::Points(_) => self.clone(),
        }
    }

    /// Connected components. Point regions are treated as one piece each
    /// time, since finite spaces here carry no topology beyond their covers.
    pub fn components(&self, circle: bool) -> Vec<Region> {
        let Region::Boxes(boxes) = self else {
            return if self.is_empty() {
                Vec::new()
            } else {
                vec![self.clone()]
            };
        };
        let boxes: Vec<&RatBox> = boxes.iter().filter(|b| !b.is_empty()).collect();
        let mut parent: Vec<usize> = (0..boxes.len()).collect();
        fn find(parent: &mut [usize], i: usize) -> usize {
            let mut r = i;
            while parent[r] != r {
                r = parent[r];
            }
            parent[i] = r;
            r
        }
        for i in 0..boxes.len() {
            for j in i + 1..boxes.len() {
                if touching(boxes[i], boxes[j], circle) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
        let mut groups: Vec<(usize, Vec<RatBox>)> = Vec::new();
        for (i, b) in boxes.iter().enumerate() {
            let r = find(&mut parent, i);
            match groups.iter_mut().find(|(k, _)| *k == r) {
                Some((_, g)) => g.push((*b).clone()),
                None => groups.push((r, vec![(*b).clone()])),
            }
        }
        groups.into_iter().map(|(_, g)| Region::Boxes(g)).collect()
    }
}

/// Whether the union of two convex boxes is connected; on the circle the
/// ends of `[0, 1)` are glued.
fn touching(a: &RatBox, b: &RatBox, circle: bool) -> bool {
    if !a.closure().intersect(b).is_empty() || !a.intersect(&b.closure()).is_empty() {
        return true;
    }
    if !circle {
        return false;
    }
    let (x, y) = (&a.0[0], &b.0[0]);
    let reaches_one = |i: &Interval| i.hi == Q::one();
    let holds_zero = |i: &Interval| i.contains(&Q::zero());
    (reaches_one(x) && holds_zero(y)) || (reaches_one(y) && holds_zero(x))
}

fn box_within(x: &RatBox, cover: &[RatBox]) -> bool {
    if x.is_empty() {
        return true;
    }
    let relevant: Vec<&RatBox> = cover.iter().filter(|b| !b.intersect(x).is_empty()).collect();
    let axes: Vec<Vec<Q>> = (0..x.dimension())
        .map(|k| {
            let side = &x.0[k];
            let mut ends: Vec<Q> = vec![side.lo.clone(), side.hi.clone()];
            for b in &relevant {
                for e in [&b.0[k].lo, &b.0[k].hi] {
                    if *e >= side.lo && *e <= side.hi {
                        ends.push(e.clone());
                    }
                }
            }
            ends.sort();
            ends.dedup();
            let mut samples = Vec::with_capacity(2 * ends.len());
            for (i, e) in ends.iter().enumerate() {
                samples.push(e.clone());
                if let Some(next) = ends.get(i + 1) {
                    samples.push((e + next) / Q::from_integer(2.into()));
                }
            }
            samples.retain(|s| side.contains(s));
            samples
        })
        .collect();
    if axes.iter().any(Vec::is_empty) {
        return true;
    }
    let mut idx = vec![0usize; axes.len()];
    loop {
        let p: Vec<Q> = idx.iter().enumerate().map(|(k, &i)| axes[k][i].clone()).collect();
        if !relevant.iter().any(|b| b.contains(&p)) {
            return false;
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return true;
            }
            idx[k] += 1;
            if idx[k] < axes[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}
