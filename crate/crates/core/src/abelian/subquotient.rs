//! Homology of composable integer maps with coefficients, carried with
//! explicit coordinates so that induced maps can be read off.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::group::{CoefficientGroup, FgAbGroup};
use super::hom::GroupHom;
use super::lattice::Lattice;
use super::matrix::IntMatrix;
use super::smith::smith_normal_form;
use crate::error::{Error, Result};

/// `ker(out) / (im(in) + relations)` inside `Z^n / diag(moduli)`.
///
/// Canonical generators are realized by representative vectors in `Z^n`;
/// `coordinates` maps any cycle back onto them.
#[derive(Clone, Debug)]
pub struct Subquotient {
    moduli: Vec<BigInt>,
    cycles: Lattice,
    to_smith: IntMatrix,
    // (row of `to_smith`, order) per canonical generator
    picks: Vec<(usize, BigInt)>,
    representatives: Vec<Vec<BigInt>>,
    group: FgAbGroup,
}

impl Subquotient {
    /// `out` maps into `Z^m / diag(out_moduli)`; `incoming` maps into the
    /// ambient `Z^n / diag(moduli)`.
    pub fn new(moduli: Vec<BigInt>, out: &IntMatrix, out_moduli: &[BigInt], incoming: &IntMatrix) -> Result<Self> {
        let n = moduli.len();
        if out.cols() != n || incoming.rows() != n {
            return Err(Error::ShapeMismatch(format!(
                "outgoing map has {} columns and incoming map {} rows for an ambient of rank {n}",
                out.cols(),
                incoming.rows()
            )));
        }
        let cycles = Lattice::preimage(out, out_moduli);
        let k = cycles.rank();

        let mut relation_cols = Vec::new();
        for c in 0..incoming.cols() {
            let col = incoming.column(c);
            let x = cycles
                .solve(&col)
                .ok_or_else(|| Error::NonComposable(format!("column {c} of the incoming map is not a cycle")))?;
            relation_cols.push(x);
        }
        for (i, q) in moduli.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let mut e = vec![BigInt::zero(); n];
            e[i] = q.clone();
            let x = cycles
                .solve(&e)
                .ok_or_else(|| Error::NonComposable("coefficient relations are not cycles".to_string()))?;
            relation_cols.push(x);
        }
        let relations = IntMatrix::from_columns(k, &relation_cols);
        let f = smith_normal_form(&relations);
        let diag = f.diagonal();

        let mut free = Vec::new();
        let mut torsion = Vec::new();
        for i in 0..k {
            let d = diag.get(i).cloned().unwrap_or_default();
            if d.is_zero() {
                free.push((i, d));
            } else if !d.is_one() {
                torsion.push((i, d));
            }
        }
        let picks: Vec<(usize, BigInt)> = free.into_iter().chain(torsion).collect();
        let representatives = picks
            .iter()
            .map(|&(i, _)| cycles.basis().mul_vec(&f.u_inv.column(i)))
            .collect();
        let group = FgAbGroup::new(0, picks.iter().map(|(_, d)| d.clone()).collect());
        debug_assert_eq!(group.generator_count(), picks.len());
        Ok(Self {
            moduli,
            cycles,
            to_smith: f.u,
            picks,
            representatives,
            group,
        })
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn ambient_rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn moduli(&self) -> &[BigInt] {
        &self.moduli
    }

    pub fn representative(&self, generator: usize) -> &[BigInt] {
        &self.representatives[generator]
    }

    /// Canonical coordinates of the class of `v`, or `None` if `v` is not a cycle.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let x = self.cycles.solve(v)?;
        let y = self.to_smith.mul_vec(&x);
        let mut out: Vec<BigInt> = self.picks.iter().map(|(i, _)| y[*i].clone()).collect();
        super::hom::reduce_coordinates(&self.group, &mut out);
        Some(out)
    }

    pub fn is_cycle(&self, v: &[BigInt]) -> bool {
        self.cycles.contains(v)
    }

    /// The homomorphism induced by an ambient-level integer map sending
    /// cycles of `self` to cycles of `target`.
    pub fn induced(&self, target: &Subquotient, map: &IntMatrix) -> Result<GroupHom> {
        if map.cols() != self.ambient_rank() || map.rows() != target.ambient_rank() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} map between ambients of rank {} and {}",
                map.rows(),
                map.cols(),
                self.ambient_rank(),
                target.ambient_rank()
            )));
        }
        let mut columns = Vec::with_capacity(self.picks.len());
        for rep in &self.representatives {
            let image = map.mul_vec(rep);
            let c = target
                .coordinates(&image)
                .ok_or_else(|| Error::InvalidHom("map sends a cycle outside the target cycles".to_string()))?;
            columns.push(c);
        }
        GroupHom::new(
            self.group.clone(),
            target.group.clone(),
            IntMatrix::from_columns(target.group.generator_count(), &columns),
        )
    }
}

/// Whether homology or cohomology is being taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variance {
    Homology,
    Cohomology,
}

/// A bounded chain complex of free abelian groups: `boundaries[n]` is
/// `∂_n : C_n -> C_{n-1}` for `n >= 1`; `∂_0` is the zero map into nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    /// `ranks[n]` is the rank of `C_n`; `boundaries[k]` is `∂_{k+1}`.
    pub fn new(ranks: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self> {
        if boundaries.len() + 1 != ranks.len().max(1) {
            return Err(Error::ShapeMismatch(format!(
                "{} boundary maps for {} chain groups",
                boundaries.len(),
                ranks.len()
            )));
        }
        let mut full = vec![IntMatrix::zeros(0, ranks.first().copied().unwrap_or(0))];
        for (k, d) in boundaries.into_iter().enumerate() {
            if d.rows() != ranks[k] || d.cols() != ranks[k + 1] {
                return Err(Error::ShapeMismatch(format!("∂_{} has the wrong shape", k + 1)));
            }
            full.push(d);
        }
        for n in 1..full.len().saturating_sub(1) {
            if !(&full[n] * &full[n + 1]).is_zero() {
                return Err(Error::NonComposable(format!("∂_{n} ∘ ∂_{} != 0", n + 1)));
            }
        }
        Ok(Self {
            ranks,
            boundaries: full,
        })
    }

    pub fn rank(&self, n: usize) -> usize {
        self.ranks.get(n).copied().unwrap_or(0)
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.ranks.iter().rposition(|&r| r > 0)
    }

    /// `∂_n`, with correctly shaped empty matrices outside the stored range.
    pub fn boundary(&self, n: usize) -> IntMatrix {
        if n == 0 {
            return IntMatrix::zeros(0, self.rank(0));
        }
        match self.boundaries.get(n) {
            Some(d) => d.clone(),
            None => IntMatrix::zeros(self.rank(n - 1), self.rank(n)),
        }
    }

    /// Coboundary `δ^n : C^n -> C^{n+1}`, the transpose of `∂_{n+1}`.
    pub fn coboundary(&self, n: usize) -> IntMatrix {
        self.boundary(n + 1).transpose()
    }

    /// The (co)homology group in degree `n` with its coordinates.
    pub fn subquotient(&self, coefficients: &CoefficientGroup, n: usize, variance: Variance) -> Result<Subquotient> {
        let (out, incoming) = match variance {
            Variance::Homology => (self.boundary(n), self.boundary(n + 1)),
            Variance::Cohomology => {
                let incoming = if n == 0 {
                    IntMatrix::zeros(self.rank(0), 0)
                } else {
                    self.coboundary(n - 1)
                };
                (self.coboundary(n), incoming)
            }
        };
        Subquotient::new(
            coefficients.chain_moduli(self.rank(n)),
            &coefficients.tensor(&out),
            &coefficients.chain_moduli(out.rows()),
            &coefficients.tensor(&incoming),
        )
    }
}

fn check_composable(d_in: &IntMatrix, d_out: &IntMatrix) -> Result<()> {
    if d_out.cols() != d_in.rows() {
        return Err(Error::NonComposable(format!(
            "outgoing map has {} columns but incoming map has {} rows",
            d_out.cols(),
            d_in.rows()
        )));
    }
    if !(d_out * d_in).is_zero() {
        return Err(Error::NonComposable("outgoing ∘ incoming != 0".to_string()));
    }
    Ok(())
}

/// `ker(d_out ⊗ 1_G) / im(d_in ⊗ 1_G)`, computed one cyclic summand of `G`
/// at a time and summed.
pub fn homology_from_boundaries(
    d_in: &IntMatrix,
    d_out: &IntMatrix,
    coefficients: &CoefficientGroup,
) -> Result<FgAbGroup> {
    check_composable(d_in, d_out)?;
    let n = d_out.cols();
    let mut total = FgAbGroup::trivial();
    for q in coefficients.summand_moduli() {
        let sq = Subquotient::new(vec![q.clone(); n], d_out, &vec![q.clone(); d_out.rows()], d_in)?;
        total = total.direct_sum(sq.group());
    }
    Ok(total)
}

/// `ker δ_out / im δ_in` on `G`-valued cochains; the coboundaries are the
/// transposes of the boundary maps.
pub fn cohomology_from_coboundaries(
    delta_out: &IntMatrix,
    delta_in: &IntMatrix,
    coefficients: &CoefficientGroup,
) -> Result<FgAbGroup> {
    homology_from_boundaries(delta_in, delta_out, coefficients)
}

fn check_chain_map(
    chain_map: &[IntMatrix],
    source: &ChainComplex,
    target: &ChainComplex,
    degrees: impl Iterator<Item = usize>,
) -> Result<()> {
    let component = |k: usize| -> IntMatrix {
        chain_map
            .get(k)
            .cloned()
            .unwrap_or_else(|| IntMatrix::zeros(target.rank(k), source.rank(k)))
    };
    for k in degrees {
        let f = component(k);
        if f.rows() != target.rank(k) || f.cols() != source.rank(k) {
            return Err(Error::ShapeMismatch(format!(
                "chain map component {k} has the wrong shape"
            )));
        }
        if k == 0 {
            continue;
        }
        let lhs = &component(k - 1) * &source.boundary(k);
        let rhs = &target.boundary(k) * &f;
        if lhs != rhs {
            return Err(Error::NotAChainMap { degree: k });
        }
    }
    Ok(())
}

/// The map `H_n(source; G) -> H_n(target; G)` induced by a degreewise chain
/// map (`chain_map[k] : C_k(source) -> C_k(target)`).
pub fn induced_on_homology(
    chain_map: &[IntMatrix],
    source: &ChainComplex,
    target: &ChainComplex,
    coefficients: &CoefficientGroup,
    n: usize,
) -> Result<GroupHom> {
    check_chain_map(chain_map, source, target, n..=n + 1)?;
    let fn_ = chain_map
        .get(n)
        .cloned()
        .unwrap_or_else(|| IntMatrix::zeros(target.rank(n), source.rank(n)));
    let s = source.subquotient(coefficients, n, Variance::Homology)?;
    let t = target.subquotient(coefficients, n, Variance::Homology)?;
    s.induced(&t, &coefficients.tensor(&fn_))
}

/// The map `H^n(target; G) -> H^n(source; G)` induced by the same chain map.
pub fn induced_on_cohomology(
    chain_map: &[IntMatrix],
    source: &ChainComplex,
    target: &ChainComplex,
    coefficients: &CoefficientGroup,
    n: usize,
) -> Result<GroupHom> {
    check_chain_map(chain_map, source, target, n.saturating_sub(1)..=n + 1)?;
    let fn_ = chain_map
        .get(n)
        .cloned()
        .unwrap_or_else(|| IntMatrix::zeros(target.rank(n), source.rank(n)));
    let s = target.subquotient(coefficients, n, Variance::Cohomology)?;
    let t = source.subquotient(coefficients, n, Variance::Cohomology)?;
    s.induced(&t, &coefficients.tensor(&fn_.transpose()))
}
