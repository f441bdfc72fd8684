//! Oriented chain complexes of pairs and their (co)homology.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::complex::{Simplex, SimplicialPair};
use crate::abelian::{
    cohomology_from_coboundaries, homology_from_boundaries, ChainComplex, CoefficientGroup, FgAbGroup, IntMatrix,
    Subquotient, Variance,
};
use crate::error::Result;

/// Which chain complex of a pair `(X, A)`: `C(X)`, `C(A)` or `C(X)/C(A)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Part {
    Total,
    Sub,
    Relative,
}

/// Bases of oriented simplices per degree with the boundary matrices in them.
#[derive(Clone, Debug)]
pub struct ChainComplexRep {
    pub bases: Vec<Vec<Simplex>>,
    pub complex: ChainComplex,
}

impl ChainComplexRep {
    pub fn basis(&self, n: usize) -> &[Simplex] {
        self.bases.get(n).map_or(&[], Vec::as_slice)
    }
}

impl SimplicialPair {
    pub fn basis(&self, part: Part, n: usize) -> Vec<Simplex> {
        match part {
            Part::Total => self.total().simplices(n).to_vec(),
            Part::Sub => self.sub().simplices(n).to_vec(),
            Part::Relative => self
                .total()
                .simplices(n)
                .iter()
                .filter(|s| !self.sub().contains(s))
                .cloned()
                .collect(),
        }
    }

    pub fn chain_complex(&self, part: Part) -> ChainComplexRep {
        let top = match part {
            Part::Sub => self.sub().dimension(),
            _ => self.total().dimension(),
        };
        let Some(top) = top else {
            return ChainComplexRep {
                bases: Vec::new(),
                complex: ChainComplex::new(Vec::new(), Vec::new()).expect("empty complex"),
            };
        };
        let bases: Vec<Vec<Simplex>> = (0..=top).map(|n| self.basis(part, n)).collect();
        let boundaries = (1..=top)
            .map(|n| signed_matrix(&bases[n - 1], &bases[n], |s| s.boundary()))
            .collect();
        let ranks = bases.iter().map(Vec::len).collect();
        let complex = ChainComplex::new(ranks, boundaries).expect("oriented boundary squares to zero");
        ChainComplexRep { bases, complex }
    }

    /// The (co)homology group of one part in degree `n`, with coordinates.
    pub fn subquotient(
        &self,
        part: Part,
        coefficients: &CoefficientGroup,
        n: usize,
        variance: Variance,
    ) -> Result<Subquotient> {
        self.chain_complex(part).complex.subquotient(coefficients, n, variance)
    }
}

/// Matrix of a linear map given on basis simplices by signed images;
/// images outside `rows` are dropped (they vanish in the quotient).
pub(crate) fn signed_matrix(
    rows: &[Simplex],
    cols: &[Simplex],
    image: impl Fn(&Simplex) -> Vec<(Simplex, i64)>,
) -> IntMatrix {
    let row_index: HashMap<&Simplex, usize> = rows.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (c, s) in cols.iter().enumerate() {
        for (t, sign) in image(s) {
            if let Some(&r) = row_index.get(&t) {
                let v = m.get(r, c) + BigInt::from(sign);
                m.set(r, c, v);
            }
        }
    }
    m
}

/// `C(X)/C(A)` with bases the simplices of `X` not in `A`.
pub fn relative_chain_complex(pair: &SimplicialPair) -> ChainComplexRep {
    pair.chain_complex(Part::Relative)
}

pub fn homology(pair: &SimplicialPair, coefficients: &CoefficientGroup, n: usize) -> Result<FgAbGroup> {
    let rep = relative_chain_complex(pair);
    homology_from_boundaries(&rep.complex.boundary(n + 1), &rep.complex.boundary(n), coefficients)
}

pub fn cohomology(pair: &SimplicialPair, coefficients: &CoefficientGroup, n: usize) -> Result<FgAbGroup> {
    let rep = relative_chain_complex(pair);
    let delta_in = if n == 0 {
        IntMatrix::zeros(rep.complex.rank(0), 0)
    } else {
        rep.complex.coboundary(n - 1)
    };
    cohomology_from_coboundaries(&rep.complex.coboundary(n), &delta_in, coefficients)
}
