//! Homomorphisms between canonical groups, and exactness tests.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::group::FgAbGroup;
use super::lattice::{solve_integer, Lattice};
use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// A homomorphism on canonical generators: column `j` holds the image of
/// source generator `j` in target coordinates. Torsion rows are kept reduced
/// into `[0, d)`, so equality of values is equality modulo target relations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupHom {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntMatrix,
}

impl GroupHom {
    pub fn new(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != target.generator_count() || matrix.cols() != source.generator_count() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix for a map {} -> {}",
                matrix.rows(),
                matrix.cols(),
                source,
                target
            )));
        }
        let target_orders = target.orders();
        for (j, d) in source.orders().iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            for (i, t) in target_orders.iter().enumerate() {
                let x = matrix.get(i, j) * d;
                let ok = if t.is_zero() { x.is_zero() } else { x.is_multiple_of(t) };
                if !ok {
                    return Err(Error::InvalidHom(format!(
                        "generator {j} of order {d} maps to an element not killed by {d}"
                    )));
                }
            }
        }
        let mut hom = Self { source, target, matrix };
        hom.reduce();
        Ok(hom)
    }

    fn reduce(&mut self) {
        let free = self.target.free_rank();
        for (k, d) in self.target.invariant_factors().iter().enumerate() {
            let r = free + k;
            for c in 0..self.matrix.cols() {
                let x = self.matrix.get(r, c).mod_floor(d);
                self.matrix.set(r, c, x);
            }
        }
    }

    pub fn identity(g: &FgAbGroup) -> Self {
        let n = g.generator_count();
        Self {
            source: g.clone(),
            target: g.clone(),
            matrix: IntMatrix::identity(n),
        }
    }

    pub fn zero(source: &FgAbGroup, target: &FgAbGroup) -> Self {
        Self {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(target.generator_count(), source.generator_count()),
        }
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Image of a source element given in canonical coordinates.
    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        let mut y = self.matrix.mul_vec(x);
        reduce_coordinates(&self.target, &mut y);
        y
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GroupHom) -> Result<GroupHom> {
        if inner.target != self.source {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.source, self.target, inner.source, inner.target
            )));
        }
        let mut hom = Self {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix * &inner.matrix,
        };
        hom.reduce();
        Ok(hom)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Preimage of the target relations: the kernel, lifted to `Z^a`.
    pub fn kernel_lattice(&self) -> Lattice {
        Lattice::preimage(&self.matrix, &self.target.orders())
    }

    /// Image plus target relations, as a lattice in `Z^b`.
    pub fn image_lattice(&self) -> Lattice {
        let rel = Lattice::diagonal(&self.target.orders());
        Lattice::span(&self.matrix).sum(&rel)
    }

    pub fn kernel(&self) -> FgAbGroup {
        let k = self.kernel_lattice();
        let rel = Lattice::diagonal(&self.source.orders());
        let coords: Vec<Vec<BigInt>> = (0..rel.rank())
            .map(|c| k.solve(&rel.basis().column(c)).expect("relations lie in the kernel"))
            .collect();
        FgAbGroup::from_presentation(&IntMatrix::from_columns(k.rank(), &coords))
    }

    pub fn image(&self) -> FgAbGroup {
        FgAbGroup::from_presentation(self.kernel_lattice().basis())
    }

    pub fn cokernel(&self) -> FgAbGroup {
        FgAbGroup::from_presentation(self.image_lattice().basis())
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_lattice().same_as(&Lattice::diagonal(&self.source.orders()))
    }

    pub fn is_surjective(&self) -> bool {
        self.image_lattice().is_full()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source == self.target && self.is_injective() && self.is_surjective()
    }

    pub fn inverse(&self) -> Result<GroupHom> {
        if !self.is_isomorphism() {
            return Err(Error::NotInvertible);
        }
        let n = self.target.generator_count();
        let rel = IntMatrix::diagonal(&self.target.orders());
        let system = self.matrix.hstack(&rel);
        let mut columns = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![BigInt::zero(); n];
            e[j] = BigInt::one();
            let z = solve_integer(&system, &e).ok_or(Error::NotInvertible)?;
            columns.push(z[..self.source.generator_count()].to_vec());
        }
        GroupHom::new(
            self.target.clone(),
            self.source.clone(),
            IntMatrix::from_columns(self.source.generator_count(), &columns),
        )
    }
}

/// Reduces torsion coordinates of an element of `g` into `[0, d)`.
pub fn reduce_coordinates(g: &FgAbGroup, x: &mut [BigInt]) {
    let free = g.free_rank();
    for (k, d) in g.invariant_factors().iter().enumerate() {
        x[free + k] = x[free + k].mod_floor(d);
    }
}

/// Whether `ker g = im f` for `A --f--> B --g--> C`.
pub fn exact_at(f: &GroupHom, g: &GroupHom) -> Result<bool> {
    check_composable(f, g)?;
    Ok(f.image_lattice().same_as(&g.kernel_lattice()))
}

/// Whether `g ∘ f = 0`.
pub fn composite_is_zero(f: &GroupHom, g: &GroupHom) -> Result<bool> {
    check_composable(f, g)?;
    Ok(g.compose(f)?.is_zero())
}

fn check_composable(f: &GroupHom, g: &GroupHom) -> Result<()> {
    if f.target != g.source {
        return Err(Error::ShapeMismatch(format!(
            "sequence slot mismatch: {} vs {}",
            f.target, g.source
        )));
    }
    Ok(())
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupHom({} -> {}, {})", self.source, self.target, self.matrix)
    }
}
