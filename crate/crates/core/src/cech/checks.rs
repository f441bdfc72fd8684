use std::fmt;

use crate::abelian::{
    cohomology_with_coefficients, homology_with_coefficients, CoefficientGroup, FgAbGroup, GroupHom, Variance,
};
use crate::backends::{MapHandle, Region};
use crate::cover::{exhaustive_nerve, EXHAUSTIVE_LIMIT};
use crate::error::{Error, Result};
use crate::simplicial::{
    check_sequence, cohomology, homology, inclusion_map, projection_map, LabeledHom, SimplicialMap, SlotCheck,
};

use super::limits::{functional_cohomology, functional_limit, induced_limit_map_from, limit_connecting_with};
use super::system::{CoverSystem, TraceSystem};

/// Outcome of a checker, with a witness for every failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub check: String,
    pub passed: bool,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Verdict {
    fn new(check: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            passed: true,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn fail(&mut self, witness: String) {
        self.passed = false;
        self.failures.push(witness);
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, if self.passed { "pass" } else { "FAIL" })?;
        for w in &self.failures {
            write!(f, "\n  - {w}")?;
        }
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        Ok(())
    }
}

fn witness(slot: &SlotCheck) -> String {
    format!(
        "slot {} -> [{}] -> {}: composable = {}, exact = {}",
        slot.incoming, slot.group, slot.outgoing, slot.composable, slot.exact
    )
}

fn trivial_to(g: &FgAbGroup) -> GroupHom {
    GroupHom::zero(&FgAbGroup::trivial(), g)
}

/// The limit-level sequence of the pair `(X, A)` over degrees `lo..=hi`,
/// evaluated at the finest stage, with `A` represented by its trace system.
pub fn limit_pair_sequence(
    sys: &CoverSystem,
    g: &CoefficientGroup,
    lo: usize,
    hi: usize,
    variance: Variance,
) -> Result<Vec<LabeledHom>> {
    let traces = sys.trace(&sys.space().sub().empty_like())?;
    let last = sys.depth() - 1;
    let pair = sys.finest_nerve();
    let phi = traces.identification(sys, last)?;
    let mut out = Vec::new();
    let connecting = |n: usize| limit_connecting_with(sys, &traces, g, n, variance);
    match variance {
        Variance::Homology => {
            out.push(LabeledHom::new(format!("∂_{}", hi + 1), connecting(hi + 1)?));
            for n in (lo..=hi).rev() {
                let i = inclusion_map(pair, g, n, variance)?.compose(&phi.induced(g, n, variance)?)?;
                out.push(LabeledHom::new(format!("i_{n}"), i));
                out.push(LabeledHom::new(format!("j_{n}"), projection_map(pair, g, n, variance)?));
                out.push(LabeledHom::new(format!("∂_{n}"), connecting(n)?));
            }
        }
        Variance::Cohomology => {
            out.push(LabeledHom::new(format!("δ^{lo}"), connecting(lo)?));
            for n in lo..=hi {
                out.push(LabeledHom::new(format!("j^{n}"), projection_map(pair, g, n, variance)?));
                let i = phi
                    .induced(g, n, variance)?
                    .compose(&inclusion_map(pair, g, n, variance)?)?;
                out.push(LabeledHom::new(format!("i^{n}"), i));
                out.push(LabeledHom::new(format!("δ^{}", n + 1), connecting(n + 1)?));
            }
        }
    }
    Ok(out)
}

/// Homology sequence of order 2 and exact cohomology sequence at every slot.
pub fn pair_sequence_check(sys: &CoverSystem, g: &CoefficientGroup, lo: usize, hi: usize) -> Result<Verdict> {
    let mut v = Verdict::new(format!("pair sequence, degrees {lo}..{hi}, G = {}", g.group()));
    let homology_slots = check_sequence(&limit_pair_sequence(sys, g, lo, hi, Variance::Homology)?);
    let mut all_exact = true;
    for w in limit_pair_sequence(sys, g, lo, hi, Variance::Homology)?.windows(2) {
        let composite = w[1].hom.compose(&w[0].hom)?;
        if !composite.is_zero() {
            v.fail(format!("homology: {} ∘ {} is not zero", w[1].label, w[0].label));
        }
    }
    for s in &homology_slots {
        all_exact &= s.exact;
    }
    if all_exact {
        v.notes
            .push("homology sequence also exact (finite-chain artifact, not implied in general)".into());
    }
    for s in check_sequence(&limit_pair_sequence(sys, g, lo, hi, Variance::Cohomology)?) {
        if !s.exact {
            v.fail(format!("cohomology: {}", witness(&s)));
        }
    }
    Ok(v)
}

/// The cohomology sequence of the triple `(X, A, B)` at the finest stage:
/// `δ̄^{lo}, j̄^{lo}, ī^{lo}, δ̄^{lo+1}, …, j̄^{hi}, ī^{hi}, δ̄^{hi+1}`.
pub fn limit_triple_sequence(
    sys: &CoverSystem,
    b: &Region,
    g: &CoefficientGroup,
    lo: usize,
    hi: usize,
) -> Result<Vec<LabeledHom>> {
    let variance = Variance::Cohomology;
    let last = sys.depth() - 1;
    let xa = sys.finest_nerve().clone();
    let xb_sys = sys.with_sub(b.clone())?;
    let xb = xb_sys.finest_nerve().clone();
    let ab: TraceSystem = sys.trace(b)?;
    let a_abs: TraceSystem = sys.trace(&b.empty_like())?;
    let t = ab.system.finest_nerve().clone();
    let retained = ab.retained[last].clone();

    let j_bar = SimplicialMap::from_fn(xb.clone(), xa.clone(), |v| v)?;
    let i_bar = SimplicialMap::from_fn(t.clone(), xb, |k| retained[k])?;
    let delta_bar = |n: usize| -> Result<GroupHom> {
        if n == 0 {
            let target = cohomology(&xa, g, 0)?;
            return Ok(trivial_to(&target));
        }
        let j2 = projection_map(&t, g, n - 1, variance)?;
        let delta = limit_connecting_with(sys, &a_abs, g, n, variance)?;
        delta.compose(&j2)
    };
    let mut out = vec![LabeledHom::new(format!("δ̄^{lo}"), delta_bar(lo)?)];
    for n in lo..=hi {
        out.push(LabeledHom::new(format!("j̄^{n}"), j_bar.induced(g, n, variance)?));
        out.push(LabeledHom::new(format!("ī^{n}"), i_bar.induced(g, n, variance)?));
        out.push(LabeledHom::new(format!("δ̄^{}", n + 1), delta_bar(n + 1)?));
    }
    Ok(out)
}

pub fn triple_sequence_check(
    sys: &CoverSystem,
    b: &Region,
    g: &CoefficientGroup,
    lo: usize,
    hi: usize,
) -> Result<Verdict> {
    let mut v = Verdict::new(format!("triple sequence, degrees {lo}..{hi}, G = {}", g.group()));
    for s in check_sequence(&limit_triple_sequence(sys, b, g, lo, hi)?) {
        if !s.exact {
            v.fail(witness(&s));
        }
    }
    Ok(v)
}

/// `∂ ∘ f_* = (f|_A)_* ∘ ∂` and `f^* ∘ δ = δ ∘ (f|_A)^*` in degree `n`.
pub fn naturality_check(
    f: &MapHandle,
    source: &CoverSystem,
    target: &CoverSystem,
    g: &CoefficientGroup,
    n: usize,
) -> Result<Verdict> {
    let mut v = Verdict::new(format!("naturality in degree {n}, G = {}", g.group()));
    if n == 0 {
        v.notes.push("connecting maps out of degree 0 vanish".into());
        return Ok(v);
    }
    let ts = source.trace(&source.space().sub().empty_like())?;
    let tt = target.trace(&target.space().sub().empty_like())?;
    let restricted = f.between(ts.system.space().clone(), tt.system.space().clone())?;
    for variance in [Variance::Homology, Variance::Cohomology] {
        let f_pair = induced_limit_map_from(f, source, target, g, n, variance)?;
        let f_sub = induced_limit_map_from(&restricted, &ts.system, &tt.system, g, n - 1, variance)?;
        let d_source = limit_connecting_with(source, &ts, g, n, variance)?;
        let d_target = limit_connecting_with(target, &tt, g, n, variance)?;
        let (lhs, rhs) = match variance {
            Variance::Homology => (d_target.compose(&f_pair)?, f_sub.compose(&d_source)?),
            Variance::Cohomology => (f_pair.compose(&d_target)?, d_source.compose(&f_sub)?),
        };
        if lhs != rhs {
            v.fail(format!(
                "{variance:?} rectangle: {:?} vs {:?}",
                lhs.matrix(),
                rhs.matrix()
            ));
        }
    }
    Ok(v)
}

/// The coefficient of cyclicity relative to a chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Eta {
    /// `-1` for the empty space, otherwise the top degree with a nonzero limit.
    Value(i64),
    /// Some limit in degrees `value..=bound` has not stabilized.
    BoundedUnknown { value: i64, bound: usize },
}

impl fmt::Display for Eta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eta::Value(v) => write!(f, "{v}"),
            Eta::BoundedUnknown { value, bound } => write!(f, "{value} (unstabilized; at most {bound})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaReport {
    pub eta: Eta,
    /// Maximal nerve dimension; cohomology above it vanishes at every stage.
    pub dimension_bound: Option<usize>,
    /// `(m, Ĥ^m, stabilized)` for the degrees that were computed, top down.
    pub groups: Vec<(usize, FgAbGroup, bool)>,
}

pub fn eta(sys: &CoverSystem, g: &CoefficientGroup) -> Result<EtaReport> {
    if g.is_trivial() {
        return Err(Error::TrivialCoefficients);
    }
    let sys = sys.absolute();
    let Some(bound) = sys.max_dimension() else {
        return Ok(EtaReport {
            eta: Eta::Value(-1),
            dimension_bound: None,
            groups: Vec::new(),
        });
    };
    let mut groups = Vec::new();
    let mut stable = true;
    for m in (0..=bound).rev() {
        let r = functional_cohomology(&sys, g, m)?;
        stable &= r.stabilized;
        groups.push((m, r.limit_group.clone(), r.stabilized));
        if !r.limit_group.is_trivial() {
            let value = m as i64;
            let eta = if stable {
                Eta::Value(value)
            } else {
                Eta::BoundedUnknown { value, bound }
            };
            return Ok(EtaReport {
                eta,
                dimension_bound: Some(bound),
                groups,
            });
        }
    }
    let eta = if stable {
        Eta::Value(0)
    } else {
        Eta::BoundedUnknown { value: 0, bound }
    };
    Ok(EtaReport {
        eta,
        dimension_bound: Some(bound),
        groups,
    })
}

/// Integral homology of a compact pair `(X, A)` and of `X`, indexed by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalTable {
    pub relative: Vec<FgAbGroup>,
    pub absolute: Vec<FgAbGroup>,
}

impl ClassicalTable {
    pub fn homology(&self, g: &CoefficientGroup, n: usize) -> FgAbGroup {
        homology_with_coefficients(&self.relative, g, n)
    }

    pub fn cohomology(&self, g: &CoefficientGroup, n: usize) -> FgAbGroup {
        cohomology_with_coefficients(&self.relative, g, n)
    }

    /// Top degree with nonzero absolute cohomology, `-1` if none.
    pub fn eta(&self, g: &CoefficientGroup) -> i64 {
        let top = self.absolute.len() + 1;
        (0..=top)
            .rev()
            .find(|&m| !cohomology_with_coefficients(&self.absolute, g, m).is_trivial())
            .map_or(-1, |m| m as i64)
    }
}

/// On a compact space `βX = X`, so the limits must equal the classical
/// groups. Each stabilized limit is compared against the registered table
/// and against the nerve of the finest cover alone, enumerated exhaustively.
pub fn compact_beta_check(
    sys: &CoverSystem,
    g: &CoefficientGroup,
    lo: usize,
    hi: usize,
    table: &ClassicalTable,
) -> Result<Verdict> {
    let space = sys.space();
    if !space.is_compact() {
        return Err(Error::NotCompact(space.label().to_string()));
    }
    let mut v = Verdict::new(format!("compact comparison, degrees {lo}..{hi}, G = {}", g.group()));
    let finest = sys.finest();
    let single = if finest.len() <= EXHAUSTIVE_LIMIT {
        exhaustive_nerve(finest.as_ref())?
    } else {
        v.notes
            .push("finest cover too large for exhaustive enumeration; pruned nerve used".into());
        finest.nerve()?
    };
    for n in lo..=hi {
        for variance in [Variance::Homology, Variance::Cohomology] {
            let r = functional_limit(sys, g, n, variance)?;
            let (expected, oracle) = match variance {
                Variance::Homology => (table.homology(g, n), homology(&single, g, n)?),
                Variance::Cohomology => (table.cohomology(g, n), cohomology(&single, g, n)?),
            };
            let name = match variance {
                Variance::Homology => format!("H_{n}"),
                Variance::Cohomology => format!("H^{n}"),
            };
            if !r.stabilized {
                v.fail(format!("{name}: limit {} not stabilized", r.limit_group));
            }
            if r.limit_group != expected {
                v.fail(format!(
                    "{name}: computed {} but the table gives {expected}",
                    r.limit_group
                ));
            }
            if r.limit_group != oracle {
                v.fail(format!(
                    "{name}: computed {} but the single fine cover gives {oracle}",
                    r.limit_group
                ));
            }
        }
    }
    let e = eta(sys, g)?;
    let expected = table.eta(g);
    if e.eta != Eta::Value(expected) {
        v.fail(format!("eta: computed {} but the table gives {expected}", e.eta));
    }
    Ok(v)
}
