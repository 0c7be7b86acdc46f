//! Structural invariants of the tilde-coordinate algebra, checked
//! exhaustively on the small corpus (m <= 6) and on randomized graphs,
//! weights, and vectors up to m = 10.

mod common;

use std::collections::BTreeMap;

use common::checks;
use graphalg::{
    filtration_hilbert, filtration_hilbert_monomial, hilbert_from_tutte, moebius_transform,
    project_with, sample_generic_weights, score_census, total_dimension, zeta_transform,
    AlgebraContext, CensusMode, EdgePartition, Graph, HilbertVariant, Mode, Rational, TildeVector,
    WeightAssignment,
};
use proptest::prelude::*;

fn rat(n: i64) -> Rational {
    checks::rat(n)
}

// Strategy: a connected-or-not multigraph with 2..=6 vertices and
// 1..=max_m loopless edges, plus nonzero mixed-sign weights.
fn arb_weighted_graph(max_m: usize) -> impl Strategy<Value = (Graph, WeightAssignment)> {
    (2usize..=6).prop_flat_map(move |n| {
        let edge = (0..n, 0..n - 1).prop_map(move |(u, w)| {
            let v = if w >= u { w + 1 } else { w };
            (u, v)
        });
        let weight = (prop_oneof![(-9i64..=-1), (1i64..=9)], 1i64..=3)
            .prop_map(|(num, den)| checks::ratio(num, den));
        (
            prop::collection::vec(edge, 1..=max_m),
            prop::collection::vec(weight, max_m),
        )
            .prop_map(move |(pairs, weights)| {
                let m = pairs.len();
                let graph = Graph::new(n, pairs);
                let q = weights[..m].to_vec();
                (graph, WeightAssignment { q })
            })
    })
}

// --- zeta / Moebius inversion ---

#[test]
fn transforms_invert_exhaustively_small() {
    checks::check_transform_inversion_small();
}

proptest! {
    #[test]
    fn transforms_invert_random(m in 0usize..=10, seeds in prop::collection::vec(-50i64..=50, 1024)) {
        let dim = 1usize << m;
        let mut coords: Vec<Rational> = seeds[..dim].iter().map(|&s| rat(s)).collect();
        let original = coords.clone();
        zeta_transform(&mut coords, m);
        moebius_transform(&mut coords, m);
        prop_assert_eq!(coords, original);
    }
}

// --- the Hadamard law: tilde coordinates diagonalize the product ---

#[test]
fn hadamard_law_exhaustive_small() {
    for c in common::corpus_up_to(6) {
        let ctx = checks::varied_ctx(&c.graph);
        checks::check_hadamard_law(&ctx, c.name);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn hadamard_law_random((g, w) in arb_weighted_graph(10),
                           terms_a in prop::collection::vec((0u32..1024, -5i64..=5), 1..4),
                           terms_b in prop::collection::vec((0u32..1024, -5i64..=5), 1..4)) {
        let ctx = AlgebraContext::<Rational>::new(&g, &w, ()).unwrap();
        let dim = ctx.dim() as u32;
        let gather = |terms: &[(u32, i64)]| {
            let mut map: BTreeMap<u32, Rational> = BTreeMap::new();
            for &(mask, c) in terms {
                *map.entry(mask % dim).or_insert_with(|| rat(0)) += rat(c);
            }
            map.retain(|_, c| *c != rat(0));
            map
        };
        let a = gather(&terms_a);
        let b = gather(&terms_b);
        let lhs = ctx
            .to_tilde(&checks::monomials_to_alpha(&ctx, &a))
            .product(&ctx.to_tilde(&checks::monomials_to_alpha(&ctx, &b)));
        prop_assert_eq!(
            checks::alpha_to_monomials(&ctx, &ctx.from_tilde(&lhs)),
            checks::monomial_product(&ctx, &a, &b)
        );
    }
}

// --- generators: two formulas and the zero sum ---

#[test]
fn generator_formulas_agree_exhaustive_small() {
    for c in common::corpus_up_to(6) {
        let ctx = checks::varied_ctx(&c.graph);
        checks::check_generators(&ctx, c.name);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn generator_formulas_agree_random((g, w) in arb_weighted_graph(10)) {
        let ctx = AlgebraContext::<Rational>::new(&g, &w, ()).unwrap();
        let mut total = TildeVector::zeros(ctx.dim());
        for i in 0..g.vertex_count() {
            let x = ctx.generator(i);
            prop_assert_eq!(x, &checks::generator_by_edge_sum(&ctx, i));
            prop_assert_eq!(x, &checks::generator_by_score(&ctx, i));
            total = total.add(x);
        }
        prop_assert!(total.is_zero());
    }
}

// --- cut elements: support pattern and projection kernels ---

#[test]
fn cut_elements_match_pattern_exhaustive() {
    for c in common::corpus_up_to(8) {
        let ctx = checks::varied_ctx(&c.graph);
        checks::check_cut_elements(&ctx, c.name);
    }
}

#[test]
fn projections_annihilate_cut_elements() {
    for c in common::corpus_up_to(8) {
        if !c.connected {
            continue;
        }
        let ctx = checks::varied_ctx(&c.graph);
        checks::check_projection_kernels(&ctx, c.name);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn projections_annihilate_cut_elements_random((g, w) in arb_weighted_graph(10)) {
        prop_assume!(g.is_connected());
        let ctx = AlgebraContext::<Rational>::new(&g, &w, ()).unwrap();
        let n = g.vertex_count();
        let full = (1u32 << n) - 1;
        let keep = ctx.projection_keep(Mode::Trees { root: 0 }).unwrap();
        for subset in (1u32..full).filter(|s| s & 1 == 1) {
            prop_assert!(project_with(&ctx.cut_element(subset), &keep).is_zero());
        }
        let keep = ctx.projection_keep(Mode::Internal).unwrap();
        for subset in 1u32..full {
            prop_assert!(project_with(&ctx.cut_element(subset), &keep).is_zero());
        }
    }
}

// --- dimensions: filtration rank equals the score census ---

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn dimension_matches_census_random((g, w) in arb_weighted_graph(8)) {
        let ctx = AlgebraContext::<Rational>::new(&g, &w, ()).unwrap();
        let external = total_dimension(&ctx, Mode::External).unwrap();
        let census = score_census::<Rational>(&g, &w.q, CensusMode::All).unwrap();
        prop_assert_eq!(external, census.count());
        if g.is_connected() {
            let trees = total_dimension(&ctx, Mode::Trees { root: 0 }).unwrap();
            let rooted = score_census::<Rational>(&g, &w.q, CensusMode::RootConnected { root: 0 }).unwrap();
            prop_assert_eq!(trees, rooted.count());
            let internal = total_dimension(&ctx, Mode::Internal).unwrap();
            let strong = score_census::<Rational>(&g, &w.q, CensusMode::StronglyConnected).unwrap();
            prop_assert_eq!(internal, strong.count());
        }
    }
}

#[test]
fn external_dimension_invariant_under_sign_flips() {
    for c in common::corpus_up_to(6) {
        let base = checks::varied_weights(c.graph.edge_count());
        let dim = {
            let ctx = AlgebraContext::<Rational>::new(&c.graph, &base, ()).unwrap();
            total_dimension(&ctx, Mode::External).unwrap()
        };
        for e in 0..c.graph.edge_count() {
            let mut flipped = base.clone();
            flipped.q[e] = -flipped.q[e].clone();
            let ctx = AlgebraContext::<Rational>::new(&c.graph, &flipped, ()).unwrap();
            assert_eq!(
                total_dimension(&ctx, Mode::External).unwrap(),
                dim,
                "{} edge {e}",
                c.name
            );
        }
    }
}

// --- equal-weight Hilbert series match the activity specialization ---

#[test]
fn equal_weight_hilbert_matches_specialization() {
    for c in common::corpus_up_to(6) {
        for q in [rat(1), rat(-2)] {
            let w = WeightAssignment::constant(c.graph.edge_count(), q);
            let ctx = AlgebraContext::<Rational>::new(&c.graph, &w, ()).unwrap();
            let external = filtration_hilbert(&ctx, Mode::External).unwrap();
            assert_eq!(
                external.hilbert,
                hilbert_from_tutte(&c.graph, HilbertVariant::External).unwrap(),
                "{} external",
                c.name
            );
            if c.connected {
                let trees = filtration_hilbert(&ctx, Mode::Trees { root: 0 }).unwrap();
                assert_eq!(
                    trees.hilbert,
                    hilbert_from_tutte(&c.graph, HilbertVariant::Trees).unwrap(),
                    "{} trees",
                    c.name
                );
                let internal = filtration_hilbert(&ctx, Mode::Internal).unwrap();
                assert_eq!(
                    internal.hilbert,
                    hilbert_from_tutte(&c.graph, HilbertVariant::Internal).unwrap(),
                    "{} internal",
                    c.name
                );
            }
        }
    }
}

// --- the square-free monomial route agrees with tilde coordinates ---

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn monomial_route_agrees_random((g, w) in arb_weighted_graph(7)) {
        let ctx = AlgebraContext::<Rational>::new(&g, &w, ()).unwrap();
        let tilde = filtration_hilbert(&ctx, Mode::External).unwrap();
        let monomial = filtration_hilbert_monomial::<Rational>(&g, &w, &()).unwrap();
        prop_assert_eq!(tilde.dims, monomial.dims);
        prop_assert_eq!(tilde.hilbert, monomial.hilbert);
    }
}

// --- unit-weight census equals the forest count on the whole corpus ---

#[test]
fn unit_census_counts_forests() {
    for c in common::corpus() {
        let unit = WeightAssignment::unit(c.graph.edge_count());
        let census = score_census::<Rational>(&c.graph, &unit.q, CensusMode::All).unwrap();
        let forests = c.graph.enumerate_forests(20).unwrap();
        assert_eq!(census.count() as u64, forests, "{}", c.name);
    }
}

// --- sign flips: full census invariant, restricted censuses are not ---

// Recorded example found by search over the small corpus: three parallel
// edges with weights (1, 2, 3). Flipping the sign of edge 2 keeps the
// all-orientations census at 7 but grows the restricted censuses, because
// the restricted orientation classes are not closed under reversing a
// single edge. The quotient dimensions still track their censuses.
#[test]
fn sign_flip_changes_restricted_census_on_recorded_example() {
    let g = Graph::new(2, vec![(0, 1), (0, 1), (0, 1)]);
    let base = vec![rat(1), rat(2), rat(3)];
    let flipped = vec![rat(1), rat(2), rat(-3)];

    let count = |w: &[Rational], mode| score_census(&g, w, mode).unwrap().count();
    assert_eq!(count(&base, CensusMode::All), 7);
    assert_eq!(count(&flipped, CensusMode::All), 7);
    assert_eq!(count(&base, CensusMode::RootConnected { root: 0 }), 6);
    assert_eq!(count(&flipped, CensusMode::RootConnected { root: 0 }), 7);
    assert_eq!(count(&base, CensusMode::StronglyConnected), 5);
    assert_eq!(count(&flipped, CensusMode::StronglyConnected), 6);

    let w = WeightAssignment { q: flipped };
    let ctx = AlgebraContext::<Rational>::new(&g, &w, ()).unwrap();
    assert_eq!(total_dimension(&ctx, Mode::Trees { root: 0 }).unwrap(), 7);
    assert_eq!(total_dimension(&ctx, Mode::Internal).unwrap(), 6);
}

// --- the one-off distinguished edge is a label, not extra structure ---

#[test]
fn one_off_distinguished_edge_choice_is_immaterial() {
    for n in [3usize, 4] {
        let g = Graph::complete(n);
        let m = g.edge_count();
        let mut rows = Vec::new();
        for distinguished in [m - 1, 0] {
            let partition = EdgePartition::one_off(m, distinguished);
            let sampled = sample_generic_weights(&g, &partition, 7).unwrap();
            let ctx = AlgebraContext::<Rational>::new(&g, &sampled.weights, ()).unwrap();
            rows.push(filtration_hilbert(&ctx, Mode::External).unwrap().hilbert);
        }
        assert_eq!(rows[0], rows[1], "K_{n}");
    }
}
