//! Exhaustive small-scale invariant checks shared by the properties and
//! acceptance suites. Each function panics with context on violation.

use std::collections::BTreeMap;

use graphalg::{
    moebius_transform, project_with, zeta_transform, AlgebraContext, Graph, Mode,
    Orientation, Rational, TildeVector, WeightAssignment,
};

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Deterministic nonzero weights with mixed signs and fractions.
pub fn varied_weights(m: usize) -> WeightAssignment {
    let q = (0..m)
        .map(|e| match e % 4 {
            0 => rat(e as i64 + 1),
            1 => rat(-(e as i64 + 2)),
            2 => ratio(e as i64 + 1, 3),
            _ => ratio(-(e as i64 + 5), 2),
        })
        .collect();
    WeightAssignment { q }
}

pub fn varied_ctx(g: &Graph) -> AlgebraContext<Rational> {
    let w = varied_weights(g.edge_count());
    AlgebraContext::new(g, &w, ()).unwrap()
}

/// Zeta then Moebius (and the reverse) are mutually inverse on every
/// basis vector and a mixed vector, for all m <= 6.
pub fn check_transform_inversion_small() {
    for m in 0..=6usize {
        let dim = 1usize << m;
        for s in 0..dim {
            let mut coords = vec![rat(0); dim];
            coords[s] = rat(1);
            let original = coords.clone();
            zeta_transform(&mut coords, m);
            moebius_transform(&mut coords, m);
            assert_eq!(coords, original, "m={m} basis {s}");
        }
        let mut coords: Vec<Rational> = (0..dim).map(|i| ratio(i as i64 * 7 - 3, 5)).collect();
        let original = coords.clone();
        moebius_transform(&mut coords, m);
        zeta_transform(&mut coords, m);
        assert_eq!(coords, original, "m={m} mixed vector");
    }
}

/// Product of the weights over one edge subset.
pub fn class_weight(ctx: &AlgebraContext<Rational>, mask: u32) -> Rational {
    let mut out = rat(1);
    let mut rest = mask;
    while rest != 0 {
        let e = rest.trailing_zeros() as usize;
        out *= ctx.weights()[e].clone();
        rest &= rest - 1;
    }
    out
}

/// The tilde basis rescales each monomial by its weight product:
/// u_A = class_weight(A) * alpha_A.
pub fn monomials_to_alpha(
    ctx: &AlgebraContext<Rational>,
    monomials: &BTreeMap<u32, Rational>,
) -> BTreeMap<u32, Rational> {
    monomials
        .iter()
        .map(|(&mask, c)| (mask, c.clone() * class_weight(ctx, mask)))
        .collect()
}

pub fn alpha_to_monomials(
    ctx: &AlgebraContext<Rational>,
    alpha: &BTreeMap<u32, Rational>,
) -> BTreeMap<u32, Rational> {
    alpha
        .iter()
        .map(|(&mask, c)| (mask, c.clone() / class_weight(ctx, mask)))
        .collect()
}

/// Product in the u-monomial basis: u_A u_B = (prod of q_e over A
/// intersect B) u_(A union B), extended bilinearly, straight from the
/// defining relations u_e^2 = q_e u_e.
pub fn monomial_product(
    ctx: &AlgebraContext<Rational>,
    a: &BTreeMap<u32, Rational>,
    b: &BTreeMap<u32, Rational>,
) -> BTreeMap<u32, Rational> {
    let mut out: BTreeMap<u32, Rational> = BTreeMap::new();
    for (&ma, ca) in a {
        for (&mb, cb) in b {
            let mut coeff = ca.clone() * cb.clone();
            let mut shared = ma & mb;
            while shared != 0 {
                let e = shared.trailing_zeros() as usize;
                coeff *= ctx.weights()[e].clone();
                shared &= shared - 1;
            }
            let entry = out.entry(ma | mb).or_insert_with(|| rat(0));
            *entry += coeff;
        }
    }
    out.retain(|_, c| *c != rat(0));
    out
}

/// Coordinatewise tilde products reproduce the defining relations on
/// every pair of monomials of `g` under the given context.
pub fn check_hadamard_law(ctx: &AlgebraContext<Rational>, name: &str) {
    let dim = ctx.dim() as u32;
    for ma in 0..dim {
        for mb in 0..dim {
            let a = BTreeMap::from([(ma, rat(1))]);
            let b = BTreeMap::from([(mb, rat(1))]);
            let lhs = ctx
                .to_tilde(&monomials_to_alpha(ctx, &a))
                .product(&ctx.to_tilde(&monomials_to_alpha(ctx, &b)));
            let expected = monomial_product(ctx, &a, &b);
            assert_eq!(
                alpha_to_monomials(ctx, &ctx.from_tilde(&lhs)),
                expected,
                "{name}: u_{ma} * u_{mb}"
            );
        }
    }
}

/// Edge-sum form: coordinate E' sums signed weights of incident edges
/// inside E'.
pub fn generator_by_edge_sum(ctx: &AlgebraContext<Rational>, i: usize) -> TildeVector<Rational> {
    let g = ctx.graph();
    let coords = (0..ctx.dim())
        .map(|mask| {
            let mut acc = rat(0);
            for (idx, e) in g.edges().iter().enumerate() {
                if mask >> idx & 1 == 1 && e.sign_at(i) != 0 {
                    acc += rat(e.sign_at(i) as i64) * ctx.weights()[idx].clone();
                }
            }
            acc
        })
        .collect();
    TildeVector { coords }
}

/// Orientation form: coordinate E' is the score of vertex i under the
/// orientation encoded by E', shifted so the empty set maps to zero.
pub fn generator_by_score(ctx: &AlgebraContext<Rational>, i: usize) -> TildeVector<Rational> {
    let g = ctx.graph();
    let empty_score = g.score_vector(ctx.weights(), Orientation(0))[i].clone();
    let coords = (0..ctx.dim())
        .map(|mask| {
            g.score_vector(ctx.weights(), Orientation(mask as u32))[i].clone() - empty_score.clone()
        })
        .collect();
    TildeVector { coords }
}

/// Both generator formulas agree with the context and sum to zero.
pub fn check_generators(ctx: &AlgebraContext<Rational>, name: &str) {
    let mut total = TildeVector::zeros(ctx.dim());
    for i in 0..ctx.graph().vertex_count() {
        let x = ctx.generator(i);
        assert_eq!(x, &generator_by_edge_sum(ctx, i), "{name} X_{i} edge sum");
        assert_eq!(x, &generator_by_score(ctx, i), "{name} X_{i} score");
        total = total.add(x);
    }
    assert!(total.is_zero(), "{name}: sum of generators");
}

/// Independent expansion of f_I = prod over cut edges of u_e (smaller
/// endpoint inside I) or u_e - q_e (larger endpoint inside I), written
/// in tilde coordinates: the coordinate at E' is nonzero only when E'
/// meets the cut exactly in the smaller-inside edges.
pub fn cut_element_by_pattern(
    ctx: &AlgebraContext<Rational>,
    subset: u32,
) -> TildeVector<Rational> {
    let g = ctx.graph();
    let inside = |v: usize| subset >> v & 1 == 1;
    let mut smaller_mask = 0usize;
    let mut larger_mask = 0usize;
    for (idx, e) in g.edges().iter().enumerate() {
        if inside(e.lo()) != inside(e.hi()) {
            if inside(e.lo()) {
                smaller_mask |= 1 << idx;
            } else {
                larger_mask |= 1 << idx;
            }
        }
    }
    let cut = smaller_mask | larger_mask;
    let mut scalar = rat(1);
    for idx in 0..g.edge_count() {
        if smaller_mask >> idx & 1 == 1 {
            scalar *= ctx.weights()[idx].clone();
        } else if larger_mask >> idx & 1 == 1 {
            scalar *= -ctx.weights()[idx].clone();
        }
    }
    let coords = (0..ctx.dim())
        .map(|mask| {
            if mask & cut == smaller_mask {
                scalar.clone()
            } else {
                rat(0)
            }
        })
        .collect();
    TildeVector { coords }
}

/// Every cut element matches its support-pattern expansion.
pub fn check_cut_elements(ctx: &AlgebraContext<Rational>, name: &str) {
    let n = ctx.graph().vertex_count();
    for subset in 1u32..(1 << n) {
        assert_eq!(
            ctx.cut_element(subset),
            cut_element_by_pattern(ctx, subset),
            "{name} I={subset:b}"
        );
    }
}

/// Tree and internal projections kill the corresponding cut elements.
/// Requires a connected graph.
pub fn check_projection_kernels(ctx: &AlgebraContext<Rational>, name: &str) {
    let n = ctx.graph().vertex_count();
    let full = (1u32 << n) - 1;
    for root in 0..n.min(2) {
        let keep = ctx.projection_keep(Mode::Trees { root }).unwrap();
        for subset in 1u32..full {
            if subset >> root & 1 == 1 {
                let projected = project_with(&ctx.cut_element(subset), &keep);
                assert!(projected.is_zero(), "{name} trees root {root} I={subset:b}");
            }
        }
    }
    let keep = ctx.projection_keep(Mode::Internal).unwrap();
    for subset in 1u32..full {
        let projected = project_with(&ctx.cut_element(subset), &keep);
        assert!(projected.is_zero(), "{name} internal I={subset:b}");
    }
}
