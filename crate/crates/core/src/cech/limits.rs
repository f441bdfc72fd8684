use crate::abelian::{finite_chain_limit, CoefficientGroup, Direction, FgAbGroup, GroupHom, LimitReport, Variance};
use crate::backends::MapHandle;
use crate::error::{Error, Result};
use crate::simplicial::{cohomology, connecting_delta, homology, SimplicialMap};

use super::system::{CoverSystem, TraceSystem};

fn stage_group(sys: &CoverSystem, g: &CoefficientGroup, n: usize, variance: Variance, j: usize) -> Result<FgAbGroup> {
    match variance {
        Variance::Homology => homology(sys.nerve(j), g, n),
        Variance::Cohomology => cohomology(sys.nerve(j), g, n),
    }
}

fn limit(sys: &CoverSystem, g: &CoefficientGroup, n: usize, variance: Variance) -> Result<LimitReport> {
    let groups = (0..sys.depth())
        .map(|j| stage_group(sys, g, n, variance, j))
        .collect::<Result<Vec<_>>>()?;
    let maps = (0..sys.depth() - 1)
        .map(|i| sys.bonding_map(i).induced(g, n, variance))
        .collect::<Result<Vec<_>>>()?;
    let direction = match variance {
        Variance::Homology => Direction::Inverse,
        Variance::Cohomology => Direction::Direct,
    };
    finite_chain_limit(groups, maps, direction, sys.window())
}

/// `lim← H_n(X_α, A_α; G)` along the chain.
pub fn functional_homology(sys: &CoverSystem, g: &CoefficientGroup, n: usize) -> Result<LimitReport> {
    limit(sys, g, n, Variance::Homology)
}

/// `lim→ H^n(X_α, A_α; G)` along the chain.
pub fn functional_cohomology(sys: &CoverSystem, g: &CoefficientGroup, n: usize) -> Result<LimitReport> {
    limit(sys, g, n, Variance::Cohomology)
}

pub fn functional_limit(sys: &CoverSystem, g: &CoefficientGroup, n: usize, variance: Variance) -> Result<LimitReport> {
    limit(sys, g, n, variance)
}

/// The stage-`j` map of an inverse ladder `maps[j]` (homology) or a direct
/// one (cohomology) must agree with its neighbour through the bonding map.
fn check_ladder(
    target: &CoverSystem,
    g: &CoefficientGroup,
    n: usize,
    variance: Variance,
    maps: &[GroupHom],
) -> Result<()> {
    for j in 0..maps.len() - 1 {
        let p = target.bonding_map(j).induced(g, n, variance)?;
        let (lhs, rhs) = match variance {
            Variance::Homology => (p.compose(&maps[j + 1])?, maps[j].clone()),
            Variance::Cohomology => (maps[j + 1].compose(&p)?, maps[j].clone()),
        };
        if lhs != rhs {
            return Err(Error::LadderBroken { rung: j, degree: n });
        }
    }
    Ok(())
}

/// The map on limits induced by `f`, with `source` as the chain on the
/// domain. Each finest source element is sent to a target element whose
/// preimage contains it; the ladder with the target bonding maps is
/// checked at every rung.
pub fn induced_limit_map_from(
    f: &MapHandle,
    source: &CoverSystem,
    target: &CoverSystem,
    g: &CoefficientGroup,
    n: usize,
    variance: Variance,
) -> Result<GroupHom> {
    if !f.source().total().same_set(source.space().total()) || !f.target().total().same_set(target.space().total()) {
        return Err(Error::Geometry(
            "map endpoints differ from the cover systems' spaces".into(),
        ));
    }
    f.check_pair(source.space().sub(), target.space().sub())?;
    let fine = source.finest();
    let mut maps = Vec::with_capacity(target.depth());
    for j in 0..target.depth() {
        let preimages: Vec<_> = target.stage(j).elements().iter().map(|e| f.preimage(e)).collect();
        let mut vertex_map = Vec::with_capacity(fine.len());
        let mut missing = Vec::new();
        for (v, e) in fine.elements().iter().enumerate() {
            match preimages.iter().position(|p| e.is_subset_of(p)) {
                Some(w) => vertex_map.push(w),
                None => {
                    missing.push(v);
                    vertex_map.push(0);
                }
            }
        }
        if !missing.is_empty() {
            return Err(Error::InvalidRefinement(missing));
        }
        let s = SimplicialMap::from_fn(source.finest_nerve().clone(), target.nerve(j).clone(), |v| {
            vertex_map[v]
        })?;
        maps.push(s.induced(g, n, variance)?);
    }
    check_ladder(target, g, n, variance, &maps)?;
    Ok(maps.pop().expect("nonempty chain"))
}

/// The induced map with the split pullback of `target` as the source chain.
pub fn induced_limit_map(
    f: &MapHandle,
    target: &CoverSystem,
    g: &CoefficientGroup,
    n: usize,
    variance: Variance,
) -> Result<GroupHom> {
    let source = CoverSystem::pullback(f, target)?;
    induced_limit_map_from(f, &source, target, g, n, variance)
}

/// Stagewise connecting maps through the trace identification:
/// `∂ = φ_*^{-1} ∘ ∂_α : H_n(X_α, A_α) -> H_{n-1}(T_α)` and
/// `δ = δ_α ∘ (φ^*)^{-1} : H^{n-1}(T_α) -> H^n(X_α, A_α)`.
fn stage_connecting(
    sys: &CoverSystem,
    traces: &TraceSystem,
    g: &CoefficientGroup,
    n: usize,
    variance: Variance,
    j: usize,
) -> Result<GroupHom> {
    let d = connecting_delta(sys.nerve(j), g, n, variance)?;
    if n == 0 {
        return Ok(d);
    }
    let phi = traces.identification(sys, j)?.induced(g, n - 1, variance)?;
    let phi_inv = phi.inverse()?;
    match variance {
        Variance::Homology => phi_inv.compose(&d),
        Variance::Cohomology => d.compose(&phi_inv),
    }
}

/// The connecting map at the limit, with the trace system of `A` standing
/// in for the limit groups of `A`; the rectangle with the bonding maps is
/// checked at every rung.
pub fn limit_connecting(sys: &CoverSystem, g: &CoefficientGroup, n: usize, variance: Variance) -> Result<GroupHom> {
    let empty = sys.space().sub().empty_like();
    let traces = sys.trace(&empty)?;
    limit_connecting_with(sys, &traces, g, n, variance)
}

pub(crate) fn limit_connecting_with(
    sys: &CoverSystem,
    traces: &TraceSystem,
    g: &CoefficientGroup,
    n: usize,
    variance: Variance,
) -> Result<GroupHom> {
    let maps = (0..sys.depth())
        .map(|j| stage_connecting(sys, traces, g, n, variance, j))
        .collect::<Result<Vec<_>>>()?;
    if n > 0 {
        for j in 0..maps.len() - 1 {
            let p = sys.bonding_map(j).induced(g, n, variance)?;
            let pt = traces.system.bonding_map(j).induced(g, n - 1, variance)?;
            let (lhs, rhs) = match variance {
                Variance::Homology => (pt.compose(&maps[j + 1])?, maps[j].compose(&p)?),
                Variance::Cohomology => (maps[j + 1].compose(&pt)?, p.compose(&maps[j])?),
            };
            if lhs != rhs {
                return Err(Error::RectangleBroken { rung: j, degree: n });
            }
        }
    }
    Ok(maps.into_iter().last().expect("nonempty chain"))
}
