use crate::abelian::{CoefficientGroup, LimitReport};
use crate::error::Result;

use super::checks::{pair_sequence_check, Verdict};
use super::limits::{functional_cohomology, functional_homology};
use super::system::CoverSystem;

/// Everything the command-line tool prints for one space and one coefficient group.
#[derive(Clone, Debug)]
pub struct SystemReport {
    pub space: String,
    pub compact: bool,
    pub coefficients: CoefficientGroup,
    /// `(total simplices, sub simplices)` per stage.
    pub nerve_sizes: Vec<(usize, usize)>,
    pub homology: Vec<(usize, LimitReport)>,
    pub cohomology: Vec<(usize, LimitReport)>,
    pub verdicts: Vec<Verdict>,
}

pub fn system_report(sys: &CoverSystem, g: &CoefficientGroup, lo: usize, hi: usize) -> Result<SystemReport> {
    let nerve_sizes = sys.nerves().iter().map(|p| (p.total().len(), p.sub().len())).collect();
    let homology = (lo..=hi)
        .map(|n| Ok((n, functional_homology(sys, g, n)?)))
        .collect::<Result<_>>()?;
    let cohomology = (lo..=hi)
        .map(|n| Ok((n, functional_cohomology(sys, g, n)?)))
        .collect::<Result<_>>()?;
    let verdicts = vec![pair_sequence_check(sys, g, lo, hi)?];
    Ok(SystemReport {
        space: sys.space().label().to_string(),
        compact: sys.space().is_compact(),
        coefficients: g.clone(),
        nerve_sizes,
        homology,
        cohomology,
        verdicts,
    })
}
