//! Exact rational intervals, boxes and points.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

/// `n / d` as an exact rational.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// A real interval with independently open or closed ends.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Q,
    pub hi: Q,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub fn new(lo: Q, hi: Q, lo_closed: bool, hi_closed: bool) -> Self {
        Self {
            lo,
            hi,
            lo_closed,
            hi_closed,
        }
    }

    pub fn open(lo: Q, hi: Q) -> Self {
        Self::new(lo, hi, false, false)
    }

    pub fn closed(lo: Q, hi: Q) -> Self {
        Self::new(lo, hi, true, true)
    }

    pub fn point(x: Q) -> Self {
        Self::closed(x.clone(), x)
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi || (self.lo == self.hi && !(self.lo_closed && self.hi_closed))
    }

    pub fn contains(&self, x: &Q) -> bool {
        let above = *x > self.lo || (*x == self.lo && self.lo_closed);
        let below = *x < self.hi || (*x == self.hi && self.hi_closed);
        above && below
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        let (lo, lo_closed) = match self.lo.cmp(&other.lo) {
            std::cmp::Ordering::Greater => (self.lo.clone(), self.lo_closed),
            std::cmp::Ordering::Less => (other.lo.clone(), other.lo_closed),
            std::cmp::Ordering::Equal => (self.lo.clone(), self.lo_closed && other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.cmp(&other.hi) {
            std::cmp::Ordering::Less => (self.hi.clone(), self.hi_closed),
            std::cmp::Ordering::Greater => (other.hi.clone(), other.hi_closed),
            std::cmp::Ordering::Equal => (self.hi.clone(), self.hi_closed && other.hi_closed),
        };
        Interval {
            lo,
            hi,
            lo_closed,
            hi_closed,
        }
    }

    pub fn closure(&self) -> Interval {
        Interval::closed(self.lo.clone(), self.hi.clone())
    }

    pub fn length(&self) -> Q {
        &self.hi - &self.lo
    }

    pub fn translate(&self, t: &Q) -> Interval {
        Interval::new(&self.lo + t, &self.hi + t, self.lo_closed, self.hi_closed)
    }

    /// Image under `x ↦ a·x`; a negative factor swaps the ends.
    pub fn scale(&self, a: &Q) -> Interval {
        if a.is_negative() {
            Interval::new(&self.hi * a, &self.lo * a, self.hi_closed, self.lo_closed)
        } else {
            Interval::new(&self.lo * a, &self.hi * a, self.lo_closed, self.hi_closed)
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi && self.lo_closed && self.hi_closed {
            return write!(f, "{{{}}}", self.lo);
        }
        let open = if self.lo_closed { '[' } else { '(' };
        let close = if self.hi_closed { ']' } else { ')' };
        write!(f, "{open}{}, {}{close}", self.lo, self.hi)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Product of intervals, one per axis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatBox(pub Vec<Interval>);

impl RatBox {
    pub fn new(sides: Vec<Interval>) -> Self {
        Self(sides)
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn sides(&self) -> &[Interval] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().any(Interval::is_empty)
    }

    pub fn contains(&self, p: &[Q]) -> bool {
        self.0.len() == p.len() && self.0.iter().zip(p).all(|(i, x)| i.contains(x))
    }

    pub fn intersect(&self, other: &RatBox) -> RatBox {
        RatBox(self.0.iter().zip(&other.0).map(|(a, b)| a.intersect(b)).collect())
    }

    pub fn closure(&self) -> RatBox {
        RatBox(self.0.iter().map(Interval::closure).collect())
    }
}

impl fmt::Debug for RatBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " x ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// A point of one of the backend spaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Point {
    Coords(Vec<Q>),
    /// A point of the circle in turns; reduced mod 1 on use.
    Turn(Q),
    Finite(usize),
}

/// `x mod 1` in `[0, 1)`.
pub fn frac(x: &Q) -> Q {
    x - x.floor()
}

/// A lifted circle interval as pieces of `[0, 1)`.
pub fn wrap(i: &Interval) -> Vec<Interval> {
    if i.is_empty() {
        return Vec::new();
    }
    let one = Q::one();
    if i.length() > one {
        return vec![full_turn()];
    }
    let shift = -i.lo.floor();
    let i = i.translate(&shift);
    if i.hi < one {
        return vec![i];
    }
    let mut out = vec![Interval::new(i.lo.clone(), one.clone(), i.lo_closed, false)];
    if i.hi == one {
        if i.hi_closed {
            out.push(Interval::point(Q::zero()));
        }
    } else {
        out.push(Interval::new(Q::zero(), &i.hi - &one, true, i.hi_closed));
    }
    out.retain(|p| !p.is_empty());
    out
}

/// The circle as the piece `[0, 1)`.
pub fn full_turn() -> Interval {
    Interval::new(Q::zero(), Q::one(), true, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_intersection() {
        let a = Interval::new(q(0, 1), q(3, 5), true, false);
        let b = Interval::new(q(2, 5), q(1, 1), false, true);
        let c = a.intersect(&b);
        assert_eq!(c, Interval::open(q(2, 5), q(3, 5)));
        assert!(!c.is_empty());
        let touching = Interval::open(q(0, 1), q(1, 2)).intersect(&Interval::open(q(1, 2), q(1, 1)));
        assert!(touching.is_empty());
        let closed = Interval::closed(q(0, 1), q(1, 2)).intersect(&Interval::closed(q(1, 2), q(1, 1)));
        assert_eq!(closed, Interval::point(q(1, 2)));
    }

    #[test]
    fn wrapping() {
        let w = wrap(&Interval::open(q(2, 3), q(13, 12)));
        assert_eq!(
            w,
            vec![
                Interval::open(q(2, 3), q(1, 1)),
                Interval::new(q(0, 1), q(1, 12), true, false)
            ]
        );
        let w = wrap(&Interval::new(q(-1, 4), q(0, 1), false, true));
        assert_eq!(w, vec![Interval::open(q(3, 4), q(1, 1)), Interval::point(q(0, 1))]);
        assert_eq!(
            wrap(&Interval::open(q(1, 3), q(1, 2))),
            vec![Interval::open(q(1, 3), q(1, 2))]
        );
    }

    #[test]
    fn negative_scale_swaps_flags() {
        let i = Interval::new(q(0, 1), q(1, 2), true, false).scale(&q(-2, 1));
        assert_eq!(i, Interval::new(q(-1, 1), q(0, 1), false, true));
    }
}
