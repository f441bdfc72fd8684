//! Abstract simplicial complexes and pairs, oriented chains with
//! coefficients, simplicial maps, contiguity and connecting homomorphisms.

mod chains;
mod complex;
mod map;
mod ordered;
mod sequence;

pub use chains::{cohomology, homology, relative_chain_complex, ChainComplexRep, Part};
pub use complex::{boundary_matrix, Complex, Simplex, SimplicialPair, Vertex};
pub use map::{contiguous, SimplicialMap};
pub use ordered::{ordered_homology, ORDERED_BASIS_LIMIT};
pub use sequence::{
    check_sequence, connecting_delta, inclusion_map, is_exact, pair_long_sequence, projection_map, LabeledHom,
    SlotCheck,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::{CoefficientGroup, FgAbGroup, Variance};

    pub(crate) fn rp2() -> Complex {
        Complex::closure([
            [1, 2, 3],
            [1, 3, 4],
            [1, 4, 5],
            [1, 5, 6],
            [1, 6, 2],
            [2, 3, 5],
            [3, 4, 6],
            [4, 5, 2],
            [5, 6, 3],
            [6, 2, 4],
        ])
    }

    #[test]
    fn projective_plane() {
        let p = SimplicialPair::absolute(rp2());
        let z = CoefficientGroup::integers();
        assert_eq!(p.total().euler_characteristic(), 1);
        assert_eq!(homology(&p, &z, 0).unwrap(), FgAbGroup::free(1));
        assert_eq!(homology(&p, &z, 1).unwrap(), FgAbGroup::cyclic(2));
        assert!(homology(&p, &z, 2).unwrap().is_trivial());
        assert_eq!(cohomology(&p, &z, 2).unwrap(), FgAbGroup::cyclic(2));
        assert!(cohomology(&p, &z, 1).unwrap().is_trivial());
        let z2 = CoefficientGroup::cyclic(2);
        assert_eq!(homology(&p, &z2, 2).unwrap(), FgAbGroup::cyclic(2));
    }

    #[test]
    fn projective_plane_with_edge_is_exact() {
        let p = SimplicialPair::new(rp2(), Complex::closure([[1, 2]])).unwrap();
        let z2 = CoefficientGroup::cyclic(2);
        for v in [Variance::Homology, Variance::Cohomology] {
            assert!(is_exact(&pair_long_sequence(&p, &z2, 0, 2, v).unwrap()));
        }
    }

    #[test]
    fn euler_characteristic_over_prime_fields() {
        let k = rp2();
        for q in [2u64, 3, 5] {
            let g = CoefficientGroup::cyclic(q);
            let p = SimplicialPair::absolute(k.clone());
            let chi: i64 = (0..=2)
                .map(|n| {
                    let h = homology(&p, &g, n).unwrap();
                    let sign = if n % 2 == 0 { 1 } else { -1 };
                    sign * h.generator_count() as i64
                })
                .sum();
            assert_eq!(chi, k.euler_characteristic());
        }
    }
}
