//! Sublattices of `Z^n`: kernels, spans, membership and exact solving.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::matrix::IntMatrix;
use super::smith::{smith_normal_form, SmithForm};

/// Basis of the integer kernel `{x : m x = 0}`, one column per basis vector.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let f = smith_normal_form(m);
    let rank = f.rank();
    let cols: Vec<usize> = (rank..m.cols()).collect();
    f.v.select_cols(&cols)
}

/// Some integer solution of `a x = b`, if one exists.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let f = smith_normal_form(a);
    let ub = f.u.mul_vec(b);
    let d = f.diagonal();
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, x) in ub.iter().enumerate() {
        match d.get(i) {
            Some(di) if !di.is_zero() => {
                let (q, rem) = x.div_rem(di);
                if !rem.is_zero() {
                    return None;
                }
                y[i] = q;
            }
            _ if !x.is_zero() => return None,
            _ => {}
        }
    }
    Some(f.v.mul_vec(&y))
}

/// A sublattice of `Z^n` stored by a basis (full column rank) together with
/// the Smith form of that basis, which answers membership and coordinate
/// queries.
#[derive(Clone, Debug)]
pub struct Lattice {
    ambient: usize,
    basis: IntMatrix,
    smith: SmithForm,
}

impl Lattice {
    /// The lattice spanned by the columns of `generators` (an `n x k` matrix).
    pub fn span(generators: &IntMatrix) -> Self {
        let n = generators.rows();
        let f = smith_normal_form(generators);
        let d = f.diagonal();
        let rank = f.rank();
        let mut basis = IntMatrix::zeros(n, rank);
        for (c, dc) in d.iter().take(rank).enumerate() {
            for r in 0..n {
                let x = f.u_inv.get(r, c);
                if !x.is_zero() {
                    basis.set(r, c, x * dc);
                }
            }
        }
        Self::from_basis(basis)
    }

    pub fn full(n: usize) -> Self {
        Self::from_basis(IntMatrix::identity(n))
    }

    /// `basis` must have linearly independent columns.
    fn from_basis(basis: IntMatrix) -> Self {
        let smith = smith_normal_form(&basis);
        debug_assert_eq!(smith.rank(), basis.cols());
        Self {
            ambient: basis.rows(),
            basis,
            smith,
        }
    }

    /// The lattice `diag(moduli) Z^n`; a zero modulus contributes nothing.
    pub fn diagonal(moduli: &[BigInt]) -> Self {
        let n = moduli.len();
        let gens: Vec<Vec<BigInt>> = moduli
            .iter()
            .enumerate()
            .filter(|(_, m)| !m.is_zero())
            .map(|(i, m)| {
                let mut v = vec![BigInt::zero(); n];
                v[i] = m.clone();
                v
            })
            .collect();
        Self::span(&IntMatrix::from_columns(n, &gens))
    }

    /// `{x in Z^c : m x in diag(target_moduli) Z^r}`.
    pub fn preimage(m: &IntMatrix, target_moduli: &[BigInt]) -> Self {
        assert_eq!(m.rows(), target_moduli.len(), "moduli length mismatch");
        let (r, c) = (m.rows(), m.cols());
        if r == 0 {
            return Self::full(c);
        }
        let torsion_rows: Vec<usize> = (0..r).filter(|&i| !target_moduli[i].is_zero()).collect();
        let mut aug = IntMatrix::zeros(r, c + torsion_rows.len());
        for i in 0..r {
            for j in 0..c {
                aug.set(i, j, m.get(i, j).clone());
            }
        }
        for (k, &i) in torsion_rows.iter().enumerate() {
            aug.set(i, c + k, -target_moduli[i].clone());
        }
        let ker = kernel_basis(&aug);
        let rows: Vec<usize> = (0..c).collect();
        Self::span(&ker.select_rows(&rows))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// Coordinates `x` with `basis * x = v`, if `v` lies in the lattice.
    pub fn solve(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let uv = self.smith.u.mul_vec(v);
        let d = self.smith.diagonal();
        let k = self.rank();
        let mut y = Vec::with_capacity(k);
        for (i, x) in uv.iter().enumerate() {
            if i < k {
                let (q, rem) = x.div_rem(&d[i]);
                if !rem.is_zero() {
                    return None;
                }
                y.push(q);
            } else if !x.is_zero() {
                return None;
            }
        }
        Some(self.smith.v.mul_vec(&y))
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.solve(v).is_some()
    }

    pub fn is_sublattice_of(&self, other: &Lattice) -> bool {
        self.ambient == other.ambient && (0..self.rank()).all(|c| other.contains(&self.basis.column(c)))
    }

    pub fn same_as(&self, other: &Lattice) -> bool {
        self.rank() == other.rank() && self.is_sublattice_of(other) && other.is_sublattice_of(self)
    }

    /// Sum of two sublattices of the same ambient space.
    pub fn sum(&self, other: &Lattice) -> Lattice {
        Lattice::span(&self.basis.hstack(&other.basis))
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient && self.smith.diagonal().iter().all(|d| d == &BigInt::from(1))
    }
}
