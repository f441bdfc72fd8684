//! Finite covers over intersection oracles, their nerves, refinements,
//! trace covers on subspaces and pullback covers along maps.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::backends::{MapHandle, Region, Space, SpaceKind};
use crate::error::{Error, Result};
use crate::simplicial::{Complex, Simplex, SimplicialMap, SimplicialPair};

/// Carrier queries on index sets of cover elements.
///
/// Implementations must be monotone: if `nonempty(s)` is false then it is
/// false for every superset, `meets_sub(s)` implies `nonempty(s)`, and
/// `meets_sub` is monotone in the same way.
pub trait SpaceOracle {
    fn element_count(&self) -> usize;
    /// Whether the carrier `∩_{v ∈ s} U_v` is nonempty.
    fn nonempty(&self, indices: &[usize]) -> bool;
    /// Whether the carrier meets the distinguished subspace.
    fn meets_sub(&self, indices: &[usize]) -> bool;
}

/// A finite cover of a backend space, elements in index order.
#[derive(Clone, PartialEq, Eq)]
pub struct Cover {
    id: String,
    space: Arc<Space>,
    elements: Vec<Region>,
}

impl Cover {
    /// Clips each element to the space and certifies that the elements
    /// cover it.
    pub fn new(id: impl Into<String>, space: Arc<Space>, elements: Vec<Region>) -> Result<Self> {
        let id = id.into();
        let elements: Vec<Region> = elements.iter().map(|e| e.intersect(space.total())).collect();
        if let Some(k) = elements.iter().position(Region::is_empty) {
            return Err(Error::NotACover(format!("element {k} of `{id}` misses the space")));
        }
        let union = elements.iter().fold(space.total().empty_like(), |acc, e| acc.union(e));
        if !space.total().is_subset_of(&union) {
            return Err(Error::NotACover(format!(
                "elements of `{id}` leave part of `{space}` uncovered"
            )));
        }
        Ok(Self { id, space, elements })
    }

    /// For elements that are already clipped and known to cover.
    pub(crate) fn from_parts(id: String, space: Arc<Space>, elements: Vec<Region>) -> Self {
        Self { id, space, elements }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn space(&self) -> &Arc<Space> {
        &self.space
    }

    pub fn elements(&self) -> &[Region] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn carrier(&self, indices: &[usize]) -> Region {
        indices
            .iter()
            .fold(self.space.total().clone(), |acc, &i| acc.intersect(&self.elements[i]))
    }

    /// The same elements regarded as a cover of a pair with the same total space.
    pub fn with_space(&self, space: Arc<Space>) -> Result<Cover> {
        if !space.total().same_set(self.space.total()) {
            return Err(Error::Geometry("re-homing a cover needs the same total space".into()));
        }
        Ok(Cover {
            id: self.id.clone(),
            space,
            elements: self.elements.clone(),
        })
    }

    /// Indices of elements of `coarse` containing element `i` of `self`.
    pub fn containers(&self, i: usize, coarse: &Cover) -> Vec<usize> {
        (0..coarse.len())
            .filter(|&j| self.elements[i].is_subset_of(&coarse.elements[j]))
            .collect()
    }

    pub fn nerve(&self) -> Result<SimplicialPair> {
        nerve(self)
    }
}

impl fmt::Debug for Cover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Cover")
            .field("id", &self.id)
            .field("space", &self.space.label())
            .field("elements", &self.elements)
            .finish()
    }
}

impl SpaceOracle for Cover {
    fn element_count(&self) -> usize {
        self.elements.len()
    }

    fn nonempty(&self, indices: &[usize]) -> bool {
        !self.carrier(indices).is_empty()
    }

    fn meets_sub(&self, indices: &[usize]) -> bool {
        !self.carrier(indices).intersect(self.space.sub()).is_empty()
    }
}

fn closed_family(family: &BTreeSet<Simplex>) -> Result<()> {
    for s in family {
        for (face, _) in s.boundary() {
            if !family.contains(&face) {
                return Err(Error::OracleViolation(s.vertices().to_vec()));
            }
        }
    }
    Ok(())
}

fn assemble(total: BTreeSet<Simplex>, sub: BTreeSet<Simplex>) -> Result<SimplicialPair> {
    closed_family(&total)?;
    closed_family(&sub)?;
    let total = Complex::from_family(total).expect("closed family");
    let sub = Complex::from_family(sub).expect("closed family");
    SimplicialPair::new(total, sub).map_err(|e| match e {
        Error::NotSubcomplex(s) => Error::OracleViolation(s),
        e => e,
    })
}

/// The nerve pair `(X_α, A_α)`, enumerated depth first; supersets of empty
/// carriers are never queried.
pub fn nerve(oracle: &dyn SpaceOracle) -> Result<SimplicialPair> {
    fn extend(
        oracle: &dyn SpaceOracle,
        s: &mut Vec<usize>,
        total: &mut BTreeSet<Simplex>,
        sub: &mut BTreeSet<Simplex>,
    ) {
        let start = s.last().map_or(0, |v| v + 1);
        for v in start..oracle.element_count() {
            s.push(v);
            if oracle.nonempty(s) {
                total.insert(Simplex::new(s.iter().copied()));
                if oracle.meets_sub(s) {
                    sub.insert(Simplex::new(s.iter().copied()));
                }
                extend(oracle, s, total, sub);
            }
            s.pop();
        }
    }
    let mut total = BTreeSet::new();
    let mut sub = BTreeSet::new();
    extend(oracle, &mut Vec::new(), &mut total, &mut sub);
    assemble(total, sub)
}

/// Largest cover the exhaustive enumeration accepts.
pub const EXHAUSTIVE_LIMIT: usize = 20;

/// The nerve pair from all `2^n - 1` nonempty index sets.
pub fn exhaustive_nerve(oracle: &dyn SpaceOracle) -> Result<SimplicialPair> {
    let n = oracle.element_count();
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::InvalidInput(format!("{n} elements exceed the exhaustive limit")));
    }
    let mut total = BTreeSet::new();
    let mut sub = BTreeSet::new();
    for mask in 1u32..(1u32 << n) {
        let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let here = oracle.nonempty(&s);
        let meets = oracle.meets_sub(&s);
        if meets && !here {
            return Err(Error::OracleViolation(s));
        }
        if here {
            total.insert(Simplex::new(s.iter().copied()));
        }
        if meets {
            sub.insert(Simplex::new(s));
        }
    }
    assemble(total, sub)
}

/// `coarse ≤ fine` together with a chosen projection `V_fine -> V_coarse`.
#[derive(Clone, Debug)]
pub struct Refinement {
    pub coarse: Arc<Cover>,
    pub fine: Arc<Cover>,
    pub projection: Vec<usize>,
}

impl Refinement {
    pub fn new(coarse: Arc<Cover>, fine: Arc<Cover>, projection: Vec<usize>) -> Self {
        Self {
            coarse,
            fine,
            projection,
        }
    }

    /// The refinement with the first containing element for every fine element.
    pub fn first_fit(coarse: Arc<Cover>, fine: Arc<Cover>) -> Result<Self> {
        let mut projection = Vec::with_capacity(fine.len());
        let mut missing = Vec::new();
        for i in 0..fine.len() {
            match fine.containers(i, &coarse).first() {
                Some(&j) => projection.push(j),
                None => {
                    missing.push(i);
                    projection.push(0);
                }
            }
        }
        if !missing.is_empty() {
            return Err(Error::InvalidRefinement(missing));
        }
        Ok(Self {
            coarse,
            fine,
            projection,
        })
    }

    /// Fine indices whose element is not inside its projected coarse element.
    pub fn violations(&self) -> Vec<usize> {
        let same_space = self.coarse.space.total().same_set(self.fine.space.total())
            && self.coarse.space.sub().same_set(self.fine.space.sub());
        if !same_space || self.projection.len() != self.fine.len() {
            return (0..self.fine.len()).collect();
        }
        (0..self.fine.len())
            .filter(|&i| {
                let j = self.projection[i];
                j >= self.coarse.len() || !self.fine.elements[i].is_subset_of(&self.coarse.elements[j])
            })
            .collect()
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    pub fn projection_map(&self) -> Result<SimplicialMap> {
        let bad = self.violations();
        if !bad.is_empty() {
            return Err(Error::InvalidRefinement(bad));
        }
        projection_between(self.fine.nerve()?, self.coarse.nerve()?, &self.projection)
    }
}

pub fn validate_refinement(r: &Refinement) -> bool {
    r.is_valid()
}

pub fn projection_map(r: &Refinement) -> Result<SimplicialMap> {
    r.projection_map()
}

/// The vertex map `projection` between two already computed nerves.
pub(crate) fn projection_between(
    fine: SimplicialPair,
    coarse: SimplicialPair,
    projection: &[usize],
) -> Result<SimplicialMap> {
    SimplicialMap::from_fn(fine, coarse, |v| projection[v])
}

/// `{U_v ∩ A}` with empty traces dropped.
#[derive(Clone, Debug)]
pub struct TraceCover {
    pub cover: Cover,
    /// `retained[k]` is the index in the original cover of trace element `k`.
    pub retained: Vec<usize>,
}

/// The trace of `c` on its subspace `A`, as a cover of the pair `(A, inner)`.
pub fn trace_cover(c: &Cover, inner: &Region) -> Result<TraceCover> {
    let space = Arc::new(c.space.subspace(inner.clone())?);
    let mut elements = Vec::new();
    let mut retained = Vec::new();
    for (v, e) in c.elements.iter().enumerate() {
        let t = e.intersect(c.space.sub());
        if !t.is_empty() {
            elements.push(t);
            retained.push(v);
        }
    }
    let cover = Cover::from_parts(format!("{} on subspace", c.id), space, elements);
    Ok(TraceCover { cover, retained })
}

/// `{f^{-1}(U_v)}` split into connected components, empty ones dropped.
#[derive(Clone, Debug)]
pub struct PulledBack {
    pub cover: Cover,
    /// `origin[k]` is the element of the target cover that element `k` comes from.
    pub origin: Vec<usize>,
    /// `k ↦ origin[k]` between the nerves.
    pub map: SimplicialMap,
}

pub fn pullback_cover(f: &MapHandle, c: &Cover) -> Result<PulledBack> {
    if !f.target().total().same_set(c.space.total()) {
        return Err(Error::Geometry("cover does not live on the target of the map".into()));
    }
    let circle = f.source().kind() == SpaceKind::Circle;
    let mut elements = Vec::new();
    let mut origin = Vec::new();
    for (v, e) in c.elements.iter().enumerate() {
        for part in f.preimage(e).components(circle) {
            elements.push(part);
            origin.push(v);
        }
    }
    let cover = Cover::from_parts(format!("{} pulled back", c.id), f.source().clone(), elements);
    let target_nerve = c.nerve()?;
    let map = projection_between(cover.nerve()?, target_nerve, &origin).map_err(|e| match e {
        Error::NotSimplicial(_) | Error::NotPairMap(_) => {
            Error::Geometry("map does not send the source pair into the cover's pair".into())
        }
        e => e,
    })?;
    Ok(PulledBack { cover, origin, map })
}
