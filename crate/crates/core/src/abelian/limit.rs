//! Limits of finite chains of groups.
//!
//! A finite chain has a maximum, so both the inverse limit and the direct
//! limit are attained at the finest stage. What a finite computation can say
//! about the infinite system it approximates is only whether the trailing
//! bonding maps have become isomorphisms.

use super::group::FgAbGroup;
use super::hom::GroupHom;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Bonding maps run fine to coarse: `maps[i] : groups[i+1] -> groups[i]`.
    Inverse,
    /// Bonding maps run coarse to fine: `maps[i] : groups[i] -> groups[i+1]`.
    Direct,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitReport {
    pub limit_group: FgAbGroup,
    pub stage_groups: Vec<FgAbGroup>,
    pub stage_maps: Vec<GroupHom>,
    pub stabilized: bool,
    /// Number of trailing bonding maps that are isomorphisms.
    pub stable_window: usize,
    pub direction: Direction,
}

pub fn finite_chain_limit(
    groups: Vec<FgAbGroup>,
    maps: Vec<GroupHom>,
    direction: Direction,
    window: usize,
) -> Result<LimitReport> {
    if window == 0 {
        return Err(Error::InvalidInput("stabilization window must be at least 1".into()));
    }
    let Some(limit_group) = groups.last().cloned() else {
        return Err(Error::ShapeMismatch("a chain needs at least one stage".into()));
    };
    if maps.len() + 1 != groups.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} bonding maps for {} stages",
            maps.len(),
            groups.len()
        )));
    }
    for (i, m) in maps.iter().enumerate() {
        let (src, tgt) = match direction {
            Direction::Inverse => (&groups[i + 1], &groups[i]),
            Direction::Direct => (&groups[i], &groups[i + 1]),
        };
        if m.source() != src || m.target() != tgt {
            return Err(Error::ShapeMismatch(format!(
                "bonding map {i} is {} -> {}, expected {src} -> {tgt}",
                m.source(),
                m.target()
            )));
        }
    }
    let stable_window = maps.iter().rev().take_while(|m| m.is_isomorphism()).count();
    Ok(LimitReport {
        limit_group,
        stage_groups: groups,
        stage_maps: maps,
        stabilized: stable_window >= window,
        stable_window,
        direction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::IntMatrix;

    fn z() -> FgAbGroup {
        FgAbGroup::free(1)
    }

    #[test]
    fn identity_chain_stabilizes() {
        let id = GroupHom::identity(&z());
        let r = finite_chain_limit(vec![z(), z(), z()], vec![id.clone(), id], Direction::Inverse, 2).unwrap();
        assert_eq!(r.limit_group, z());
        assert!(r.stabilized);
        assert_eq!(r.stable_window, 2);
    }

    #[test]
    fn doubling_does_not_stabilize() {
        let two = GroupHom::new(z(), z(), IntMatrix::from_rows(&[[2]])).unwrap();
        let r = finite_chain_limit(vec![z(), z()], vec![two], Direction::Direct, 1).unwrap();
        assert_eq!(r.limit_group, z());
        assert!(!r.stabilized);
    }

    #[test]
    fn endpoint_mismatch() {
        let h = GroupHom::zero(&z(), &FgAbGroup::cyclic(2));
        let err = finite_chain_limit(vec![z(), z()], vec![h], Direction::Direct, 1).unwrap_err();
        assert!(matches!(err, Error::ShapeMismatch(_)));
    }
}
