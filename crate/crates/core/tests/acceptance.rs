//! One test per acceptance criterion. Each prints a single pass/fail line
//! before asserting, so `cargo test --test acceptance -- --nocapture` reads
//! as a checklist.

use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use funcech::abelian::{smith_normal_form, CoefficientGroup, FgAbGroup, IntMatrix, Variance};
use funcech::backends::{circle_region, q, Interval, RatBox, Region, Space};
use funcech::cech::{
    compact_beta_check, eta, functional_cohomology, functional_homology, functional_limit, induced_limit_map_from,
    naturality_check, pair_sequence_check, triple_sequence_check, CoverSystem, Eta,
};
use funcech::cover::{exhaustive_nerve, trace_cover, Cover, Refinement};
use funcech::fixtures::{catalog, lookup, map_fixtures, projective_plane_complex, DEFAULT_DEPTH};
use funcech::simplicial::{cohomology, contiguous, homology, ordered_homology, Complex, Simplex, SimplicialPair};

fn conclude(id: u32, title: &str, failures: &[String], elapsed: Duration, budget: Option<Duration>) {
    let mut failures = failures.to_vec();
    if let Some(b) = budget {
        if elapsed > b {
            failures.push(format!("took {elapsed:?}, budget {b:?}"));
        }
    }
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {id} [{title}]: {status} ({} ms)", elapsed.as_millis());
    for f in &failures {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {id} failed: {failures:#?}");
}

fn z() -> CoefficientGroup {
    CoefficientGroup::integers()
}

fn test_groups() -> [CoefficientGroup; 3] {
    [z(), CoefficientGroup::cyclic(2), CoefficientGroup::cyclic(6)]
}

fn system(name: &str) -> CoverSystem {
    lookup(name).unwrap().system(DEFAULT_DEPTH).unwrap()
}

#[test]
fn criterion_1_point_groups() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let sys = system("point");
    let groups = [
        FgAbGroup::free(1),
        FgAbGroup::cyclic(2),
        FgAbGroup::cyclic(6),
        FgAbGroup::free(1).direct_sum(&FgAbGroup::cyclic(2)),
    ];
    for g in groups {
        let cg = CoefficientGroup::new(g.clone());
        for n in 0..=4 {
            let expected = if n == 0 { g.clone() } else { FgAbGroup::trivial() };
            let h = functional_homology(&sys, &cg, n).unwrap().limit_group;
            let c = functional_cohomology(&sys, &cg, n).unwrap().limit_group;
            if h != expected || c != expected {
                failures.push(format!(
                    "G = {g}, n = {n}: homology {h}, cohomology {c}, expected {expected}"
                ));
            }
        }
    }
    conclude(
        1,
        "point system",
        &failures,
        start.elapsed(),
        Some(Duration::from_secs(1)),
    );
}

#[test]
fn criterion_2_compact_comparison() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut expect = |name: &str, n: usize, variance: Variance, group: FgAbGroup| {
        let r = functional_limit(&system(name), &z(), n, variance).unwrap();
        if r.limit_group != group || !r.stabilized {
            failures.push(format!(
                "{name} {variance:?} {n}: {} (stabilized {}), expected {group}",
                r.limit_group, r.stabilized
            ));
        }
    };
    expect("circle", 1, Variance::Homology, FgAbGroup::free(1));
    expect("circle", 1, Variance::Cohomology, FgAbGroup::free(1));
    expect("circle", 0, Variance::Homology, FgAbGroup::free(1));
    expect("interval", 0, Variance::Homology, FgAbGroup::free(1));
    for n in 1..=3 {
        expect("interval", n, Variance::Homology, FgAbGroup::trivial());
    }
    expect("interval_pair", 1, Variance::Homology, FgAbGroup::free(1));
    expect("wedge", 1, Variance::Homology, FgAbGroup::free(2));
    for name in ["circle", "interval", "interval_pair", "wedge"] {
        let f = lookup(name).unwrap();
        let v = compact_beta_check(&system(name), &z(), 0, 2, f.table.as_ref().unwrap()).unwrap();
        if !v.passed {
            failures.push(format!("{name}: {v}"));
        }
    }
    conclude(
        2,
        "compact comparison",
        &failures,
        start.elapsed(),
        Some(Duration::from_secs(10)),
    );
}

#[test]
fn criterion_3_eta() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut expect = |name: &str, g: &CoefficientGroup, value: i64| {
        let e = eta(&system(name), g).unwrap().eta;
        if e != Eta::Value(value) {
            failures.push(format!("eta({name}, {}) = {e}, expected {value}", g.group()));
        }
    };
    expect("circle", &z(), 1);
    for g in test_groups() {
        expect("point", &g, 0);
        expect("empty", &g, -1);
    }
    expect(
        "point",
        &CoefficientGroup::new(FgAbGroup::new(1, vec![BigInt::from(2)])),
        0,
    );
    expect("interval", &z(), 0);
    conclude(3, "coefficient of cyclicity", &failures, start.elapsed(), None);
}

#[test]
fn criterion_4_pair_sequences() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for f in catalog() {
        let sys = f.system(DEFAULT_DEPTH).unwrap();
        for g in test_groups() {
            let v = pair_sequence_check(&sys, &g, 0, 3).unwrap();
            if !v.passed {
                failures.push(format!("{}: {v}", f.name));
            }
        }
    }
    conclude(4, "pair sequences", &failures, start.elapsed(), None);
}

#[test]
fn criterion_5_triple_sequence() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let sys = system("interval_pair");
    let b = Region::boxes([RatBox::new(vec![Interval::point(q(0, 1))])]);
    for g in [z(), CoefficientGroup::cyclic(2)] {
        let v = triple_sequence_check(&sys, &b, &g, 0, 2).unwrap();
        if !v.passed {
            failures.push(v.to_string());
        }
    }
    conclude(5, "triple sequence", &failures, start.elapsed(), None);
}

/// Coarse pieces `(c_k, c_{k+1} + eps)` and fine pieces over a superset of
/// the cuts with a smaller overhang, so every fine piece has a container and
/// many have two.
fn random_configuration(rng: &mut ChaCha8Rng, circle: bool) -> (Cover, Cover) {
    let space = if circle {
        Arc::new(Space::circle("circle", Vec::new()).unwrap())
    } else {
        let total = vec![RatBox::new(vec![Interval::closed(q(0, 1), q(1, 1))])];
        Arc::new(Space::boxes("interval", 1, total, Vec::new()).unwrap())
    };
    let mut coarse_cuts: Vec<i64> = Vec::new();
    let count = rng.gen_range(3..=5);
    while coarse_cuts.len() < count {
        let c = 4 * rng.gen_range(0..12);
        if !coarse_cuts.contains(&c) {
            coarse_cuts.push(c);
        }
    }
    coarse_cuts.sort_unstable();
    let mut fine_cuts = coarse_cuts.clone();
    for _ in 0..rng.gen_range(4..=10) {
        let c = rng.gen_range(0..48);
        if !fine_cuts.contains(&c) {
            fine_cuts.push(c);
        }
    }
    fine_cuts.sort_unstable();
    let pieces = |cuts: &[i64], eps: i64| -> Vec<Region> {
        if circle {
            (0..cuts.len())
                .map(|k| {
                    let lo = cuts[k];
                    let hi = if k + 1 < cuts.len() { cuts[k + 1] } else { cuts[0] + 48 };
                    circle_region(&[Interval::open(q(lo, 48), q(hi * 4 + eps, 192))])
                })
                .collect()
        } else {
            let mut ends: Vec<i64> = cuts.to_vec();
            if ends[0] != 0 {
                ends.insert(0, 0);
            }
            ends.push(48);
            ends.windows(2)
                .map(|w| {
                    let i = Interval::open(q(w[0] * 4 - eps, 192), q(w[1] * 4 + eps, 192));
                    Region::boxes([RatBox::new(vec![i])])
                })
                .collect()
        }
    };
    let coarse = Cover::new("coarse", space.clone(), pieces(&coarse_cuts, 8)).unwrap();
    let fine = Cover::new("fine", space, pieces(&fine_cuts, 2)).unwrap();
    (coarse, fine)
}

#[test]
fn criterion_6_projection_independence() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut configurations = 0;
    let mut with_choice = 0;
    for round in 0..60 {
        let circle = round % 2 == 0;
        let (coarse, fine) = random_configuration(&mut rng, circle);
        let (coarse, fine) = (Arc::new(coarse), Arc::new(fine));
        let containers: Vec<Vec<usize>> = (0..fine.len()).map(|i| fine.containers(i, &coarse)).collect();
        if containers.iter().any(Vec::is_empty) {
            failures.push(format!("round {round}: a fine piece has no container"));
            continue;
        }
        if containers.iter().any(|c| c.len() > 1) {
            with_choice += 1;
        }
        let pick =
            |rng: &mut ChaCha8Rng| -> Vec<usize> { containers.iter().map(|c| c[rng.gen_range(0..c.len())]).collect() };
        let p = Refinement::new(coarse.clone(), fine.clone(), pick(&mut rng))
            .projection_map()
            .unwrap();
        let p2 = Refinement::new(coarse.clone(), fine.clone(), pick(&mut rng))
            .projection_map()
            .unwrap();
        configurations += 1;
        if !contiguous(&p, &p2) {
            failures.push(format!("round {round}: projections are not contiguous"));
            continue;
        }
        for g in [z(), CoefficientGroup::cyclic(2)] {
            for n in 0..=1 {
                for v in [Variance::Homology, Variance::Cohomology] {
                    if p.induced(&g, n, v).unwrap() != p2.induced(&g, n, v).unwrap() {
                        failures.push(format!("round {round}: {v:?} {n} over {} differs", g.group()));
                    }
                }
            }
        }
    }
    if configurations < 50 {
        failures.push(format!("only {configurations} configurations"));
    }
    if with_choice < 25 {
        failures.push(format!(
            "only {with_choice} configurations offered a choice of projection"
        ));
    }
    conclude(6, "projection independence", &failures, start.elapsed(), None);
}

#[test]
fn criterion_7_functoriality() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for f in catalog() {
        let sys = f.system(3).unwrap();
        let direct = Refinement::first_fit(sys.stage(0).clone(), sys.stage(2).clone())
            .unwrap()
            .projection_map()
            .unwrap();
        for g in [z(), CoefficientGroup::cyclic(2)] {
            for n in 0..=2 {
                let outer = sys.bonding_map(0);
                let inner = sys.bonding_map(1);
                let h = |m: &funcech::simplicial::SimplicialMap, v| m.induced(&g, n, v).unwrap();
                let hom = h(outer, Variance::Homology)
                    .compose(&h(inner, Variance::Homology))
                    .unwrap();
                let coh = h(inner, Variance::Cohomology)
                    .compose(&h(outer, Variance::Cohomology))
                    .unwrap();
                if h(&direct, Variance::Homology) != hom || h(&direct, Variance::Cohomology) != coh {
                    failures.push(format!("{}: degree {n} over {}", f.name, g.group()));
                }
            }
        }
    }
    let maps = map_fixtures(3).unwrap();
    let get = |name: &str| maps.iter().find(|m| m.name == name).unwrap();
    let winding = get("winding");
    let basepoint = get("basepoint");
    let target = &winding.target;
    // winding after winding, and winding after the basepoint inclusion
    for inner in [&winding.map, &basepoint.map] {
        let outer = &winding.map;
        let middle = CoverSystem::pullback(outer, target).unwrap();
        let source = CoverSystem::pullback(inner, &middle).unwrap();
        let both = outer.compose(inner).unwrap();
        for g in [z(), CoefficientGroup::cyclic(2)] {
            for n in 0..=1 {
                for v in [Variance::Homology, Variance::Cohomology] {
                    let fi = induced_limit_map_from(inner, &source, &middle, &g, n, v).unwrap();
                    let fo = induced_limit_map_from(outer, &middle, target, &g, n, v).unwrap();
                    let fb = induced_limit_map_from(&both, &source, target, &g, n, v).unwrap();
                    let composite = match v {
                        Variance::Homology => fo.compose(&fi).unwrap(),
                        Variance::Cohomology => fi.compose(&fo).unwrap(),
                    };
                    if fb != composite {
                        failures.push(format!("composite with {:?}, {v:?} {n}", inner.kind()));
                    }
                }
            }
        }
    }
    for m in &maps {
        for g in [z(), CoefficientGroup::cyclic(2)] {
            for n in 0..=2 {
                let v = naturality_check(&m.map, &m.source, &m.target, &g, n).unwrap();
                if !v.passed {
                    failures.push(format!("{}: {v}", m.name));
                }
            }
        }
    }
    conclude(7, "functoriality and naturality", &failures, start.elapsed(), None);
}

fn det_i128(m: &[Vec<i128>]) -> i128 {
    // fraction-free Bareiss elimination
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn snf_failures(m: &IntMatrix, raw: &[Vec<i128>]) -> Vec<String> {
    let mut out = Vec::new();
    let f = smith_normal_form(m);
    if &(&f.u * m) * &f.v != f.s {
        out.push("S != UMV".into());
    }
    if !f.u.determinant().abs().is_one() || !f.v.determinant().abs().is_one() {
        out.push("transforms not unimodular".into());
    }
    let d = f.diagonal();
    for r in 0..f.s.rows() {
        for c in 0..f.s.cols() {
            if r != c && !f.s.get(r, c).is_zero() {
                out.push(format!("off-diagonal entry at ({r}, {c})"));
            }
        }
    }
    if d.iter().any(Signed::is_negative) {
        out.push("negative invariant factor".into());
    }
    for w in d.windows(2) {
        if !w[0].is_zero() && !(&w[1] % &w[0]).is_zero() || w[0].is_zero() && !w[1].is_zero() {
            out.push(format!("{} does not divide {}", w[0], w[1]));
        }
    }
    let (rows, cols) = (m.rows(), m.cols());
    let mut product = BigInt::one();
    for k in 1..=rows.min(cols) {
        product *= &d[k - 1];
        let mut g = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| raw[r][c]).collect()).collect();
                g = g.gcd(&det_i128(&minor));
            }
        }
        if product != BigInt::from(g) {
            out.push(format!("minor gcd {g} of order {k} differs from {product}"));
        }
    }
    out
}

/// Every complex on the vertex set `0..v` with at most `budget` simplices
/// that uses all of its vertices.
fn small_complexes(budget: usize) -> Vec<Complex> {
    fn go(candidates: &[Simplex], i: usize, chosen: &mut Vec<Simplex>, budget: usize, out: &mut Vec<Complex>) {
        if i == candidates.len() {
            out.push(Complex::from_family(chosen.clone()).unwrap());
            return;
        }
        go(candidates, i + 1, chosen, budget, out);
        let s = &candidates[i];
        let faces_present = s.boundary().iter().all(|(f, _)| chosen.contains(f));
        if chosen.len() < budget && faces_present {
            chosen.push(s.clone());
            go(candidates, i + 1, chosen, budget, out);
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    for v in 1..=budget {
        let mut candidates = Vec::new();
        for k in 2..=v.min(4) {
            candidates.extend(subsets(v, k).into_iter().map(Simplex::new));
        }
        candidates.sort_by_key(Simplex::dim);
        let mut chosen: Vec<Simplex> = (0..v).map(Simplex::vertex).collect();
        go(&candidates, 0, &mut chosen, budget, &mut out);
    }
    out
}

#[test]
fn criterion_8_algebra_substrate() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for trial in 0..1000 {
        let rows = rng.gen_range(1..=8);
        let cols = rng.gen_range(1..=8);
        let raw: Vec<Vec<i128>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(-20..=20)).collect())
            .collect();
        let m = IntMatrix::from_fn(rows, cols, |r, c| BigInt::from(raw[r][c]));
        for f in snf_failures(&m, &raw) {
            failures.push(format!("matrix {trial}: {f}"));
        }
    }
    let complexes = small_complexes(8);
    for k in &complexes {
        let p = SimplicialPair::absolute(k.clone());
        for g in test_groups() {
            for n in 0..=2 {
                let oriented = homology(&p, &g, n).unwrap();
                let ordered = ordered_homology(&p, &g, n).unwrap();
                if oriented != ordered {
                    failures.push(format!("{k:?} over {}: degree {n}: {oriented} vs {ordered}", g.group()));
                }
            }
        }
    }
    let rp2 = SimplicialPair::absolute(projective_plane_complex());
    if homology(&rp2, &z(), 1).unwrap() != FgAbGroup::cyclic(2) {
        failures.push("projective plane H_1 is not Z/2".into());
    }
    if cohomology(&rp2, &z(), 2).unwrap() != FgAbGroup::cyclic(2) {
        failures.push("projective plane H^2 is not Z/2".into());
    }
    let sys = system("projective_plane");
    if functional_homology(&sys, &z(), 1).unwrap().limit_group != FgAbGroup::cyclic(2)
        || functional_cohomology(&sys, &z(), 2).unwrap().limit_group != FgAbGroup::cyclic(2)
    {
        failures.push("projective plane system limits are wrong".into());
    }
    println!("    {} complexes with at most 8 simplices", complexes.len());
    conclude(
        8,
        "algebra substrate",
        &failures,
        start.elapsed(),
        Some(Duration::from_secs(60)),
    );
}

#[test]
fn criterion_9_nerve_enumeration() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut covers: Vec<Cover> = Vec::new();
    for f in catalog() {
        let sys = f.system(DEFAULT_DEPTH).unwrap();
        for c in sys.stages() {
            covers.push(c.as_ref().clone());
            if !c.space().sub().is_empty() {
                covers.push(trace_cover(c, &c.space().sub().empty_like()).unwrap().cover);
            }
        }
    }
    for m in map_fixtures(DEFAULT_DEPTH).unwrap() {
        covers.extend(m.source.stages().iter().map(|c| c.as_ref().clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for round in 0..40 {
        let (coarse, fine) = random_configuration(&mut rng, round % 2 == 0);
        covers.push(coarse);
        covers.push(fine);
    }
    let mut checked = 0;
    for c in covers.iter().filter(|c| c.len() <= 12) {
        checked += 1;
        if c.nerve().unwrap() != exhaustive_nerve(c).unwrap() {
            failures.push(format!("cover `{}` ({} elements)", c.id(), c.len()));
        }
    }
    println!("    {checked} covers compared");
    conclude(9, "nerve enumeration", &failures, start.elapsed(), None);
}
