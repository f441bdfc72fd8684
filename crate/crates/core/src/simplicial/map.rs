use std::collections::BTreeMap;

use super::chains::{signed_matrix, Part};
use super::complex::{Simplex, SimplicialPair, Vertex};
use crate::abelian::{CoefficientGroup, GroupHom, IntMatrix, Variance};
use crate::error::{Error, Result};

/// A vertex map between pairs that sends simplices to simplices and the
/// source subcomplex into the target subcomplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    source: SimplicialPair,
    target: SimplicialPair,
    vertex_map: BTreeMap<Vertex, Vertex>,
}

impl SimplicialMap {
    pub fn new(source: SimplicialPair, target: SimplicialPair, vertex_map: BTreeMap<Vertex, Vertex>) -> Result<Self> {
        for v in source.total().vertices() {
            if !vertex_map.contains_key(&v) {
                return Err(Error::InvalidInput(format!("vertex {v} has no image")));
            }
        }
        let map = Self {
            source,
            target,
            vertex_map,
        };
        for s in map.source.total().iter() {
            let image = map.image(s);
            if !map.target.total().contains(&image) {
                return Err(Error::NotSimplicial(s.vertices().to_vec()));
            }
        }
        for s in map.source.sub().iter() {
            if !map.target.sub().contains(&map.image(s)) {
                return Err(Error::NotPairMap(s.vertices().to_vec()));
            }
        }
        Ok(map)
    }

    pub fn from_fn(source: SimplicialPair, target: SimplicialPair, f: impl Fn(Vertex) -> Vertex) -> Result<Self> {
        let vertex_map = source.total().vertices().into_iter().map(|v| (v, f(v))).collect();
        Self::new(source, target, vertex_map)
    }

    pub fn identity(pair: SimplicialPair) -> Self {
        let vertex_map = pair.total().vertices().into_iter().map(|v| (v, v)).collect();
        Self {
            source: pair.clone(),
            target: pair,
            vertex_map,
        }
    }

    pub fn source(&self) -> &SimplicialPair {
        &self.source
    }

    pub fn target(&self) -> &SimplicialPair {
        &self.target
    }

    pub fn vertex_map(&self) -> &BTreeMap<Vertex, Vertex> {
        &self.vertex_map
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.vertex_map[&v]
    }

    /// The image simplex (possibly of lower dimension).
    pub fn image(&self, s: &Simplex) -> Simplex {
        Simplex::new(s.vertices().iter().map(|&v| self.apply(v)))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &SimplicialMap) -> Result<SimplicialMap> {
        if inner.target != self.source {
            return Err(Error::NonComposable("inner target differs from outer source".into()));
        }
        let vertex_map = inner.vertex_map.iter().map(|(&v, &w)| (v, self.apply(w))).collect();
        Ok(Self {
            source: inner.source.clone(),
            target: self.target.clone(),
            vertex_map,
        })
    }

    /// Oriented image of a simplex: the sign of the sorting permutation, or
    /// nothing when two vertices collide.
    pub fn oriented_image(&self, s: &Simplex) -> Option<(Simplex, i64)> {
        let mut image: Vec<Vertex> = s.vertices().iter().map(|&v| self.apply(v)).collect();
        let mut sign = 1;
        // insertion sort, counting transpositions
        for i in 1..image.len() {
            let mut j = i;
            while j > 0 && image[j - 1] > image[j] {
                image.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if image.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((Simplex::new(image), sign))
    }

    /// The chain map in degree `n` on one part of the pairs.
    pub fn chain_matrix(&self, part: Part, n: usize) -> IntMatrix {
        signed_matrix(&self.target.basis(part, n), &self.source.basis(part, n), |s| {
            self.oriented_image(s).into_iter().collect()
        })
    }

    /// The induced map on relative (co)homology.
    pub fn induced(&self, coefficients: &CoefficientGroup, n: usize, variance: Variance) -> Result<GroupHom> {
        self.induced_on(Part::Relative, coefficients, n, variance)
    }

    /// The induced map on the (co)homology of one part.
    pub fn induced_on(
        &self,
        part: Part,
        coefficients: &CoefficientGroup,
        n: usize,
        variance: Variance,
    ) -> Result<GroupHom> {
        let s = self.source.subquotient(part, coefficients, n, variance)?;
        let t = self.target.subquotient(part, coefficients, n, variance)?;
        let f = self.chain_matrix(part, n);
        match variance {
            Variance::Homology => s.induced(&t, &coefficients.tensor(&f)),
            Variance::Cohomology => t.induced(&s, &coefficients.tensor(&f.transpose())),
        }
    }
}

/// Whether `f(s) ∪ g(s)` is a simplex for every source simplex, within the
/// target subcomplex whenever `s` lies in the source subcomplex.
pub fn contiguous(f: &SimplicialMap, g: &SimplicialMap) -> bool {
    if f.source != g.source || f.target != g.target {
        return false;
    }
    let union = |s: &Simplex| f.image(s).union(&g.image(s));
    f.source.total().iter().all(|s| f.target.total().contains(&union(s)))
        && f.source.sub().iter().all(|s| f.target.sub().contains(&union(s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::FgAbGroup;
    use crate::simplicial::Complex;
    use num_bigint::BigInt;

    fn cycle(n: usize) -> Complex {
        Complex::closure((0..n).map(|i| vec![i, (i + 1) % n]))
    }

    fn z() -> CoefficientGroup {
        CoefficientGroup::integers()
    }

    #[test]
    fn identity_induces_identity() {
        let p = SimplicialPair::new(cycle(4), Complex::closure([[0]])).unwrap();
        let id = SimplicialMap::identity(p);
        for v in [Variance::Homology, Variance::Cohomology] {
            for n in 0..3 {
                let h = id.induced(&z(), n, v).unwrap();
                assert_eq!(h, GroupHom::identity(h.source()));
            }
        }
    }

    #[test]
    fn edge_collapse_on_h0() {
        let src = SimplicialPair::absolute(Complex::closure([[0, 1]]));
        let tgt = SimplicialPair::absolute(Complex::closure([[0]]));
        let f = SimplicialMap::from_fn(src, tgt, |_| 0).unwrap();
        let h = f.induced(&z(), 0, Variance::Homology).unwrap();
        assert!(h.is_isomorphism());
        assert_eq!(h.matrix(), &IntMatrix::from_rows(&[[1]]));
        assert!(f.chain_matrix(Part::Total, 1).is_zero());
    }

    #[test]
    fn winding_hexagon_onto_triangle() {
        let src = SimplicialPair::absolute(cycle(6));
        let tgt = SimplicialPair::absolute(cycle(3));
        let f = SimplicialMap::from_fn(src, tgt, |k| k % 3).unwrap();
        let h = f.induced(&z(), 1, Variance::Homology).unwrap();
        assert_eq!(h.source(), &FgAbGroup::free(1));
        let m = h.matrix().get(0, 0).clone();
        assert!(m == BigInt::from(2) || m == BigInt::from(-2));
        let c = f.induced(&z(), 1, Variance::Cohomology).unwrap();
        assert_eq!(c.matrix().get(0, 0) * c.matrix().get(0, 0), BigInt::from(4));
    }

    #[test]
    fn rejects_non_simplicial_and_non_pair_maps() {
        let src = SimplicialPair::absolute(Complex::closure([[0, 1]]));
        let tgt = SimplicialPair::absolute(Complex::closure([[0], [1]]));
        assert!(matches!(
            SimplicialMap::from_fn(src, tgt, |v| v),
            Err(Error::NotSimplicial(_))
        ));
        let src = SimplicialPair::new(Complex::closure([[0, 1]]), Complex::closure([[1]])).unwrap();
        let tgt = SimplicialPair::new(Complex::closure([[0, 1]]), Complex::closure([[0]])).unwrap();
        assert!(matches!(
            SimplicialMap::from_fn(src, tgt, |v| v),
            Err(Error::NotPairMap(_))
        ));
    }

    #[test]
    fn contiguity() {
        let src = SimplicialPair::absolute(Complex::closure([[0], [1]]));
        let tgt = SimplicialPair::absolute(Complex::closure([vec![0, 1], vec![2]]));
        let f = SimplicialMap::from_fn(src.clone(), tgt.clone(), |_| 0).unwrap();
        let g = SimplicialMap::from_fn(src.clone(), tgt.clone(), |_| 1).unwrap();
        let h = SimplicialMap::from_fn(src, tgt, |_| 2).unwrap();
        assert!(contiguous(&f, &f));
        assert!(contiguous(&f, &g));
        assert!(!contiguous(&f, &h));
    }

    #[test]
    fn shifted_projections_are_contiguous_and_agree() {
        let src = SimplicialPair::absolute(cycle(6));
        let tgt = SimplicialPair::absolute(cycle(3));
        let f = SimplicialMap::from_fn(src.clone(), tgt.clone(), |k| k / 2).unwrap();
        let g = SimplicialMap::from_fn(src, tgt, |k| if k == 1 { 1 } else { k / 2 }).unwrap();
        assert!(contiguous(&f, &g));
        for n in 0..2 {
            assert_eq!(
                f.induced(&z(), n, Variance::Homology).unwrap(),
                g.induced(&z(), n, Variance::Homology).unwrap()
            );
        }
    }

    #[test]
    fn composition_is_functorial() {
        let a = SimplicialPair::absolute(cycle(12));
        let b = SimplicialPair::absolute(cycle(6));
        let c = SimplicialPair::absolute(cycle(3));
        let f = SimplicialMap::from_fn(a, b.clone(), |k| k % 6).unwrap();
        let g = SimplicialMap::from_fn(b, c, |k| k % 3).unwrap();
        let gf = g.compose(&f).unwrap();
        let g6 = CoefficientGroup::cyclic(6);
        let lhs = gf.induced(&g6, 1, Variance::Homology).unwrap();
        let rhs = g
            .induced(&g6, 1, Variance::Homology)
            .unwrap()
            .compose(&f.induced(&g6, 1, Variance::Homology).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
        let lhs = gf.induced(&z(), 1, Variance::Cohomology).unwrap();
        let rhs = f
            .induced(&z(), 1, Variance::Cohomology)
            .unwrap()
            .compose(&g.induced(&z(), 1, Variance::Cohomology).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}
