//! Cover systems and their functional (co)homology: limit groups along a
//! refinement chain, induced maps, connecting maps, sequence checkers and the
//! coefficient of cyclicity.

mod checks;
mod limits;
mod report;
mod system;

pub use checks::{
    compact_beta_check, eta, limit_pair_sequence, limit_triple_sequence, naturality_check, pair_sequence_check,
    triple_sequence_check, ClassicalTable, Eta, EtaReport, Verdict,
};
pub use limits::{
    functional_cohomology, functional_homology, functional_limit, induced_limit_map, induced_limit_map_from,
    limit_connecting,
};
pub use report::{system_report, SystemReport};
pub use system::{CoverSystem, TraceSystem, DEFAULT_WINDOW};

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::abelian::{CoefficientGroup, FgAbGroup, GroupHom, Variance};
    use crate::backends::{q, standard_chain, Interval, MapHandle, MapKind, RatBox, Region, StandardSpace};
    use crate::error::Error;
    use crate::fixtures::{lookup, map_fixtures};

    fn z() -> CoefficientGroup {
        CoefficientGroup::integers()
    }

    fn chain(kind: StandardSpace) -> CoverSystem {
        standard_chain(kind, 3).unwrap()
    }

    fn endpoint(x: i64) -> Region {
        Region::boxes([RatBox::new(vec![Interval::point(q(x, 1))])])
    }

    #[test]
    fn point_groups_are_the_coefficients() {
        let sys = chain(StandardSpace::Point);
        let g = CoefficientGroup::cyclic(6);
        let r = functional_homology(&sys, &g, 0).unwrap();
        assert_eq!(r.limit_group, FgAbGroup::cyclic(6));
        assert!(r.stabilized);
        assert_eq!(
            functional_cohomology(&sys, &g, 0).unwrap().limit_group,
            FgAbGroup::cyclic(6)
        );
        for n in 1..=4 {
            assert!(functional_homology(&sys, &g, n).unwrap().limit_group.is_trivial());
        }
    }

    #[test]
    fn circle_limits() {
        let sys = chain(StandardSpace::Circle);
        let h1 = functional_homology(&sys, &z(), 1).unwrap();
        assert_eq!(h1.limit_group, FgAbGroup::free(1));
        assert!(h1.stabilized);
        assert!(functional_homology(&sys, &z(), 2).unwrap().limit_group.is_trivial());
        let c1 = functional_cohomology(&sys, &z(), 1).unwrap();
        assert_eq!(c1.limit_group, FgAbGroup::free(1));
        assert!(c1.stabilized);
    }

    #[test]
    fn interval_has_no_first_cohomology() {
        let sys = chain(StandardSpace::Interval);
        assert!(functional_cohomology(&sys, &z(), 1).unwrap().limit_group.is_trivial());
    }

    #[test]
    fn appending_a_stage_keeps_stabilized_groups() {
        let short = standard_chain(StandardSpace::Circle, 3).unwrap();
        let long = standard_chain(StandardSpace::Circle, 4).unwrap();
        for n in 0..3 {
            for v in [Variance::Homology, Variance::Cohomology] {
                let a = functional_limit(&short, &z(), n, v).unwrap();
                let b = functional_limit(&long, &z(), n, v).unwrap();
                assert!(a.stabilized && b.stabilized);
                assert_eq!(a.limit_group, b.limit_group);
            }
        }
    }

    #[test]
    fn identity_induces_identity() {
        let sys = chain(StandardSpace::Circle);
        let id = MapHandle::identity(sys.space().clone());
        for v in [Variance::Homology, Variance::Cohomology] {
            let h = induced_limit_map_from(&id, &sys, &sys, &z(), 1, v).unwrap();
            assert_eq!(h, GroupHom::identity(h.source()));
        }
    }

    #[test]
    fn winding_multiplies_by_two() {
        let sys = chain(StandardSpace::Circle);
        let w = MapHandle::new(sys.space().clone(), sys.space().clone(), MapKind::Winding(2)).unwrap();
        for v in [Variance::Homology, Variance::Cohomology] {
            let h = induced_limit_map(&w, &sys, &z(), 1, v).unwrap();
            let m = h.matrix().get(0, 0).clone();
            assert!(m == BigInt::from(2) || m == BigInt::from(-2), "{m}");
        }
    }

    #[test]
    fn winding_composition_laws() {
        let target = chain(StandardSpace::Circle);
        let s = target.space().clone();
        let f = MapHandle::new(s.clone(), s.clone(), MapKind::Winding(2)).unwrap();
        let g = MapHandle::new(s.clone(), s, MapKind::Winding(3)).unwrap();
        let middle = CoverSystem::pullback(&g, &target).unwrap();
        let source = CoverSystem::pullback(&f, &middle).unwrap();
        let gf = g.compose(&f).unwrap();
        for n in 0..2 {
            let fh = induced_limit_map_from(&f, &source, &middle, &z(), n, Variance::Homology).unwrap();
            let gh = induced_limit_map_from(&g, &middle, &target, &z(), n, Variance::Homology).unwrap();
            let both = induced_limit_map_from(&gf, &source, &target, &z(), n, Variance::Homology).unwrap();
            assert_eq!(both, gh.compose(&fh).unwrap());
            let fc = induced_limit_map_from(&f, &source, &middle, &z(), n, Variance::Cohomology).unwrap();
            let gc = induced_limit_map_from(&g, &middle, &target, &z(), n, Variance::Cohomology).unwrap();
            let both = induced_limit_map_from(&gf, &source, &target, &z(), n, Variance::Cohomology).unwrap();
            assert_eq!(both, fc.compose(&gc).unwrap());
        }
    }

    #[test]
    fn basepoint_is_an_isomorphism_on_h0() {
        let m = map_fixtures(3)
            .unwrap()
            .into_iter()
            .find(|m| m.name == "basepoint")
            .unwrap();
        let h = induced_limit_map_from(&m.map, &m.source, &m.target, &z(), 0, Variance::Homology).unwrap();
        assert!(h.is_isomorphism());
    }

    #[test]
    fn interval_pair_connecting_map() {
        let sys = chain(StandardSpace::IntervalPair);
        let d = limit_connecting(&sys, &z(), 1, Variance::Homology).unwrap();
        assert_eq!(d.source(), &FgAbGroup::free(1));
        assert_eq!(d.target(), &FgAbGroup::free(2));
        let col = [d.matrix().get(0, 0).clone(), d.matrix().get(1, 0).clone()];
        assert_eq!(&col[0] + &col[1], BigInt::from(0));
        assert_eq!(&col[0] * &col[0], BigInt::from(1));
    }

    #[test]
    fn connecting_map_vanishes_without_a_subspace() {
        let sys = chain(StandardSpace::Circle);
        for v in [Variance::Homology, Variance::Cohomology] {
            assert!(limit_connecting(&sys, &z(), 1, v).unwrap().is_zero());
        }
        let point = chain(StandardSpace::Point);
        let full = point.with_sub(point.space().total().clone()).unwrap();
        assert!(limit_connecting(&full, &z(), 1, Variance::Homology).unwrap().is_zero());
    }

    #[test]
    fn pair_sequences() {
        let v = pair_sequence_check(&chain(StandardSpace::IntervalPair), &z(), 0, 2).unwrap();
        assert!(v.passed, "{v}");
        assert!(v.notes.iter().any(|n| n.contains("finite-chain artifact")));
        let arc = lookup("circle_arc").unwrap().system(3).unwrap();
        let v = pair_sequence_check(&arc, &CoefficientGroup::cyclic(2), 0, 2).unwrap();
        assert!(v.passed, "{v}");
        let v = pair_sequence_check(&chain(StandardSpace::Circle), &z(), 0, 2).unwrap();
        assert!(v.passed, "{v}");
    }

    #[test]
    fn triple_sequences() {
        let sys = chain(StandardSpace::IntervalPair);
        for g in [z(), CoefficientGroup::cyclic(2)] {
            let v = triple_sequence_check(&sys, &endpoint(0), &g, 0, 2).unwrap();
            assert!(v.passed, "{v}");
        }
        let none = endpoint(0).empty_like();
        let v = triple_sequence_check(&sys, &none, &z(), 0, 2).unwrap();
        assert!(v.passed, "{v}");
        let all = sys.space().sub().clone();
        let seq = limit_triple_sequence(&sys, &all, &z(), 0, 2).unwrap();
        for m in seq.iter().filter(|m| m.label.starts_with("ī")) {
            assert!(m.hom.target().is_trivial());
        }
        assert!(triple_sequence_check(&sys, &all, &z(), 0, 2).unwrap().passed);
    }

    #[test]
    fn naturality_on_map_fixtures() {
        for m in map_fixtures(3).unwrap() {
            for g in [z(), CoefficientGroup::cyclic(2)] {
                for n in 0..3 {
                    let v = naturality_check(&m.map, &m.source, &m.target, &g, n).unwrap();
                    assert!(v.passed, "{}: {v}", m.name);
                }
            }
        }
    }

    #[test]
    fn eta_values() {
        let value = |name: &str, g: &CoefficientGroup| eta(&lookup(name).unwrap().system(3).unwrap(), g).unwrap().eta;
        assert_eq!(value("circle", &z()), Eta::Value(1));
        assert_eq!(value("interval", &z()), Eta::Value(0));
        assert_eq!(value("empty", &z()), Eta::Value(-1));
        for g in [z(), CoefficientGroup::cyclic(2), CoefficientGroup::cyclic(6)] {
            assert_eq!(value("point", &g), Eta::Value(0));
        }
        assert_eq!(value("projective_plane", &CoefficientGroup::cyclic(2)), Eta::Value(2));
        assert_eq!(value("projective_plane", &CoefficientGroup::cyclic(3)), Eta::Value(0));
        let trivial = CoefficientGroup::new(FgAbGroup::trivial());
        assert_eq!(
            eta(&chain(StandardSpace::Point), &trivial),
            Err(Error::TrivialCoefficients)
        );
    }

    #[test]
    fn eta_is_stable_under_deepening() {
        for depth in 3..6 {
            let sys = standard_chain(StandardSpace::Circle, depth).unwrap();
            assert_eq!(eta(&sys, &z()).unwrap().eta, Eta::Value(1));
        }
    }

    #[test]
    fn report_for_the_circle() {
        let r = system_report(&chain(StandardSpace::Circle), &z(), 0, 2).unwrap();
        assert_eq!(r.nerve_sizes, vec![(6, 0), (12, 0), (24, 0)]);
        assert_eq!(r.homology[1].1.limit_group, FgAbGroup::free(1));
        assert!(r.verdicts.iter().all(|v| v.passed));
    }
}
