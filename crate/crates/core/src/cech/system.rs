use std::sync::Arc;

use crate::backends::{MapHandle, Region, Space};
use crate::cover::{projection_between, pullback_cover, trace_cover, Cover, Refinement};
use crate::error::{Error, Result};
use crate::simplicial::{SimplicialMap, SimplicialPair};

/// Number of trailing isomorphism rungs required to call a limit stabilized.
pub const DEFAULT_WINDOW: usize = 2;

/// A finite refinement chain of covers of one space pair, coarse to fine,
/// with validated projections and precomputed nerves.
#[derive(Clone, Debug)]
pub struct CoverSystem {
    space: Arc<Space>,
    stages: Vec<Arc<Cover>>,
    projections: Vec<Vec<usize>>,
    nerves: Vec<SimplicialPair>,
    bonding: Vec<SimplicialMap>,
    window: usize,
}

impl CoverSystem {
    /// `projections[i]` maps the elements of stage `i + 1` into stage `i`.
    pub fn new(stages: Vec<Cover>, projections: Vec<Vec<usize>>) -> Result<Self> {
        let Some(first) = stages.first() else {
            return Err(Error::InvalidInput("a cover system needs at least one cover".into()));
        };
        let space = first.space().clone();
        if projections.len() + 1 != stages.len() {
            return Err(Error::InvalidInput(format!(
                "{} projections for {} covers",
                projections.len(),
                stages.len()
            )));
        }
        for c in &stages[1..] {
            let same = Arc::ptr_eq(c.space(), &space)
                || (c.space().total().same_set(space.total()) && c.space().sub().same_set(space.sub()));
            if !same {
                return Err(Error::Geometry(format!(
                    "cover `{}` lives on a different space",
                    c.id()
                )));
            }
        }
        let stages: Vec<Arc<Cover>> = stages.into_iter().map(Arc::new).collect();
        for (i, p) in projections.iter().enumerate() {
            let r = Refinement::new(stages[i].clone(), stages[i + 1].clone(), p.clone());
            let bad = r.violations();
            if !bad.is_empty() {
                return Err(Error::InvalidRefinement(bad));
            }
        }
        let nerves = stages.iter().map(|c| c.nerve()).collect::<Result<Vec<_>>>()?;
        let bonding = projections
            .iter()
            .enumerate()
            .map(|(i, p)| projection_between(nerves[i + 1].clone(), nerves[i].clone(), p))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            space,
            stages,
            projections,
            nerves,
            bonding,
            window: super::DEFAULT_WINDOW,
        })
    }

    /// A chain whose projections are found by searching for containing elements.
    pub fn first_fit(stages: Vec<Cover>) -> Result<Self> {
        let arcs: Vec<Arc<Cover>> = stages.iter().cloned().map(Arc::new).collect();
        let projections = arcs
            .windows(2)
            .map(|w| Refinement::first_fit(w[0].clone(), w[1].clone()).map(|r| r.projection))
            .collect::<Result<Vec<_>>>()?;
        Self::new(stages, projections)
    }

    pub fn with_window(mut self, window: usize) -> Self {
        self.window = window;
        self
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn space(&self) -> &Arc<Space> {
        &self.space
    }

    pub fn depth(&self) -> usize {
        self.stages.len()
    }

    pub fn stages(&self) -> &[Arc<Cover>] {
        &self.stages
    }

    pub fn stage(&self, i: usize) -> &Arc<Cover> {
        &self.stages[i]
    }

    pub fn finest(&self) -> &Arc<Cover> {
        self.stages.last().expect("nonempty chain")
    }

    pub fn nerves(&self) -> &[SimplicialPair] {
        &self.nerves
    }

    pub fn nerve(&self, i: usize) -> &SimplicialPair {
        &self.nerves[i]
    }

    pub fn finest_nerve(&self) -> &SimplicialPair {
        self.nerves.last().expect("nonempty chain")
    }

    pub fn projections(&self) -> &[Vec<usize>] {
        &self.projections
    }

    /// The simplicial projection from stage `i + 1` to stage `i`.
    pub fn bonding_map(&self, i: usize) -> &SimplicialMap {
        &self.bonding[i]
    }

    /// Largest nerve dimension along the chain.
    pub fn max_dimension(&self) -> Option<usize> {
        self.nerves.iter().filter_map(|n| n.total().dimension()).max()
    }

    /// The same covers on `(X, sub)`.
    pub fn with_sub(&self, sub: Region) -> Result<CoverSystem> {
        let space = Arc::new(self.space.with_sub(sub)?);
        self.rehome(space)
    }

    /// The same covers on `(X, ∅)`.
    pub fn absolute(&self) -> CoverSystem {
        self.rehome(Arc::new(self.space.absolute())).expect("same total space")
    }

    fn rehome(&self, space: Arc<Space>) -> Result<CoverSystem> {
        let stages = self
            .stages
            .iter()
            .map(|c| c.with_space(space.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(CoverSystem::new(stages, self.projections.clone())?.with_window(self.window))
    }

    /// Traces on the subspace `A`, as a system on the pair `(A, inner)`.
    ///
    /// The nerve of each trace cover is checked to coincide with the
    /// subcomplex `A_α` under the retained-index relabeling.
    pub fn trace(&self, inner: &Region) -> Result<TraceSystem> {
        let traces = self
            .stages
            .iter()
            .map(|c| trace_cover(c, inner))
            .collect::<Result<Vec<_>>>()?;
        let mut projections = Vec::new();
        for j in 0..self.projections.len() {
            let coarse = &traces[j].retained;
            let p = traces[j + 1]
                .retained
                .iter()
                .map(|&v| {
                    let w = self.projections[j][v];
                    coarse
                        .binary_search(&w)
                        .map_err(|_| Error::Geometry("trace projection leaves the subspace".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            projections.push(p);
        }
        let retained: Vec<Vec<usize>> = traces.iter().map(|t| t.retained.clone()).collect();
        let system =
            CoverSystem::new(traces.into_iter().map(|t| t.cover).collect(), projections)?.with_window(self.window);
        for (j, r) in retained.iter().enumerate() {
            let relabeled = system.nerve(j).total().relabel(|k| r[k]);
            if &relabeled != self.nerve(j).sub() {
                return Err(Error::Geometry(format!(
                    "trace nerve at stage {j} differs from the subcomplex"
                )));
            }
        }
        Ok(TraceSystem { system, retained })
    }

    /// The split pullback of every stage of `target` along `f`, as a system
    /// on the source of `f`.
    pub fn pullback(f: &MapHandle, target: &CoverSystem) -> Result<CoverSystem> {
        let covers = target
            .stages
            .iter()
            .map(|c| pullback_cover(f, c).map(|p| p.cover))
            .collect::<Result<Vec<_>>>()?;
        Ok(CoverSystem::first_fit(covers)?.with_window(target.window))
    }
}

/// A trace system together with the retained indices per stage.
#[derive(Clone, Debug)]
pub struct TraceSystem {
    pub system: CoverSystem,
    pub retained: Vec<Vec<usize>>,
}

impl TraceSystem {
    /// `φ_α` at stage `j`: the trace nerve onto `(A_α, ∅)`.
    pub fn identification(&self, parent: &CoverSystem, j: usize) -> Result<SimplicialMap> {
        let r = &self.retained[j];
        SimplicialMap::from_fn(self.system.nerve(j).total_pair(), parent.nerve(j).sub_pair(), |k| r[k])
    }
}
