//! Connecting homomorphisms and the long exact sequence of a pair.

use std::fmt;

use super::chains::{signed_matrix, Part};
use super::complex::SimplicialPair;
use crate::abelian::{exact_at, CoefficientGroup, FgAbGroup, GroupHom, IntMatrix, Variance};
use crate::error::Result;

/// A homomorphism tagged with a human-readable name such as `i_1` or `δ^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledHom {
    pub label: String,
    pub hom: GroupHom,
}

impl LabeledHom {
    pub fn new(label: impl Into<String>, hom: GroupHom) -> Self {
        Self {
            label: label.into(),
            hom,
        }
    }
}

impl fmt::Display for LabeledHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.label, self.hom.source(), self.hom.target())
    }
}

/// Verdict at the group between two consecutive maps of a sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlotCheck {
    /// Label of the map entering the slot.
    pub incoming: String,
    /// Label of the map leaving the slot.
    pub outgoing: String,
    pub group: FgAbGroup,
    pub composable: bool,
    pub exact: bool,
}

/// Checks `im = ker` at every interior slot.
pub fn check_sequence(maps: &[LabeledHom]) -> Vec<SlotCheck> {
    maps.windows(2)
        .map(|w| {
            let (f, g) = (&w[0].hom, &w[1].hom);
            let composable = f.target() == g.source();
            let exact = composable && exact_at(f, g).unwrap_or(false);
            SlotCheck {
                incoming: w[0].label.clone(),
                outgoing: w[1].label.clone(),
                group: f.target().clone(),
                composable,
                exact,
            }
        })
        .collect()
}

pub fn is_exact(maps: &[LabeledHom]) -> bool {
    check_sequence(maps).iter().all(|s| s.exact)
}

/// `C_n(X, A) -> C_{n-1}(A)`: lift a relative chain and take its boundary.
fn lifted_boundary(pair: &SimplicialPair, n: usize) -> IntMatrix {
    if n == 0 {
        return IntMatrix::zeros(0, pair.basis(Part::Relative, 0).len());
    }
    signed_matrix(&pair.basis(Part::Sub, n - 1), &pair.basis(Part::Relative, n), |s| {
        s.boundary()
    })
}

fn inclusion(pair: &SimplicialPair, n: usize) -> IntMatrix {
    signed_matrix(&pair.basis(Part::Total, n), &pair.basis(Part::Sub, n), |s| {
        vec![(s.clone(), 1)]
    })
}

fn projection(pair: &SimplicialPair, n: usize) -> IntMatrix {
    signed_matrix(&pair.basis(Part::Relative, n), &pair.basis(Part::Total, n), |s| {
        vec![(s.clone(), 1)]
    })
}

/// Induced map between two parts from a degree-`n` chain map `from -> to`.
fn part_map(
    pair: &SimplicialPair,
    coefficients: &CoefficientGroup,
    (from, from_deg): (Part, usize),
    (to, to_deg): (Part, usize),
    chain: &IntMatrix,
    variance: Variance,
) -> Result<GroupHom> {
    let s = pair.subquotient(from, coefficients, from_deg, variance)?;
    let t = pair.subquotient(to, coefficients, to_deg, variance)?;
    match variance {
        Variance::Homology => s.induced(&t, &coefficients.tensor(chain)),
        Variance::Cohomology => t.induced(&s, &coefficients.tensor(&chain.transpose())),
    }
}

/// `∂ : H_n(X, A) -> H_{n-1}(A)`, or `δ : H^{n-1}(A) -> H^n(X, A)`.
/// For `n = 0` the far group is taken to be trivial.
pub fn connecting_delta(
    pair: &SimplicialPair,
    coefficients: &CoefficientGroup,
    n: usize,
    variance: Variance,
) -> Result<GroupHom> {
    if n == 0 {
        let rel = pair.subquotient(Part::Relative, coefficients, 0, variance)?;
        let trivial = FgAbGroup::trivial();
        return Ok(match variance {
            Variance::Homology => GroupHom::zero(rel.group(), &trivial),
            Variance::Cohomology => GroupHom::zero(&trivial, rel.group()),
        });
    }
    part_map(
        pair,
        coefficients,
        (Part::Relative, n),
        (Part::Sub, n - 1),
        &lifted_boundary(pair, n),
        variance,
    )
}

/// `i_*` (or `i^*`) in degree `n`.
pub fn inclusion_map(
    pair: &SimplicialPair,
    coefficients: &CoefficientGroup,
    n: usize,
    variance: Variance,
) -> Result<GroupHom> {
    part_map(
        pair,
        coefficients,
        (Part::Sub, n),
        (Part::Total, n),
        &inclusion(pair, n),
        variance,
    )
}

/// `j_*` (or `j^*`) in degree `n`.
pub fn projection_map(
    pair: &SimplicialPair,
    coefficients: &CoefficientGroup,
    n: usize,
    variance: Variance,
) -> Result<GroupHom> {
    part_map(
        pair,
        coefficients,
        (Part::Total, n),
        (Part::Relative, n),
        &projection(pair, n),
        variance,
    )
}

/// The long exact sequence over degrees `lo..=hi`, in the order the maps compose.
///
/// Homology runs `∂_{hi+1}, i_hi, j_hi, ∂_hi, …, i_lo, j_lo, ∂_lo`;
/// cohomology runs `δ^lo, j^lo, i^lo, δ^{lo+1}, …, j^hi, i^hi, δ^{hi+1}`.
pub fn pair_long_sequence(
    pair: &SimplicialPair,
    coefficients: &CoefficientGroup,
    lo: usize,
    hi: usize,
    variance: Variance,
) -> Result<Vec<LabeledHom>> {
    let mut out = Vec::new();
    match variance {
        Variance::Homology => {
            out.push(LabeledHom::new(
                format!("∂_{}", hi + 1),
                connecting_delta(pair, coefficients, hi + 1, variance)?,
            ));
            for n in (lo..=hi).rev() {
                out.push(LabeledHom::new(
                    format!("i_{n}"),
                    inclusion_map(pair, coefficients, n, variance)?,
                ));
                out.push(LabeledHom::new(
                    format!("j_{n}"),
                    projection_map(pair, coefficients, n, variance)?,
                ));
                out.push(LabeledHom::new(
                    format!("∂_{n}"),
                    connecting_delta(pair, coefficients, n, variance)?,
                ));
            }
        }
        Variance::Cohomology => {
            out.push(LabeledHom::new(
                format!("δ^{lo}"),
                connecting_delta(pair, coefficients, lo, variance)?,
            ));
            for n in lo..=hi {
                out.push(LabeledHom::new(
                    format!("j^{n}"),
                    projection_map(pair, coefficients, n, variance)?,
                ));
                out.push(LabeledHom::new(
                    format!("i^{n}"),
                    inclusion_map(pair, coefficients, n, variance)?,
                ));
                out.push(LabeledHom::new(
                    format!("δ^{}", n + 1),
                    connecting_delta(pair, coefficients, n + 1, variance)?,
                ));
            }
        }
    }
    Ok(out)
}
