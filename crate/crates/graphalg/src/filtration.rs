//! The exact-rank filtration engine.
//!
//! F_0 spans the unit; F_k adds every product of a generator with an
//! element of F_{k-1}. Ranks are tracked incrementally: each round
//! multiplies only the directions that were new in the previous round,
//! which spans the same space because generator times an old direction
//! already landed in an earlier F. The first round with no rank growth
//! proves the span is closed under every generator, so the filtration
//! has stabilized; the recorded dimension increments are the Hilbert
//! polynomial coefficients.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use num_traits::Zero;

use crate::algebra::{project_with, AlgebraContext, Mode, TildeVector};
use crate::census::{score_census, CensusMode};
use crate::graph::{EdgePartition, Graph, WeightAssignment, MAX_EDGES};
use crate::rank::RankStore;
use crate::scalar::{Rational, Scalar};
use crate::tutte::HilbertPolynomial;

/// Dimensions of the filtration steps and the resulting Hilbert data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationResult {
    /// dim F_0, dim F_1, ... including one repeated final value showing
    /// stabilization. A zero algebra yields [0].
    pub dims: Vec<usize>,
    /// Coefficient k is dim F_k - dim F_{k-1}.
    pub hilbert: HilbertPolynomial,
    pub total_dim: usize,
}

/// Work bound for the optional full-closure audit after stabilization.
const CLOSURE_AUDIT_BUDGET: u128 = 200_000_000;

fn hilbert_from_dims(dims: &[usize]) -> HilbertPolynomial {
    let mut coeffs = vec![dims[0] as i64];
    for k in 1..dims.len() {
        coeffs.push(dims[k] as i64 - dims[k - 1] as i64);
    }
    HilbertPolynomial::from_coeffs(coeffs)
}

/// Linear action of one generator on dense coordinate vectors.
type GeneratorAction<'a, S> = Box<dyn Fn(&[S]) -> Vec<S> + 'a>;

/// Runs the filtration from `unit` under the given generator actions.
/// `ambient` is the dimension of the coordinate subspace everything
/// lives in; reaching it proves closure without another round.
fn run_filtration<S: Scalar>(
    ambient: usize,
    unit: Vec<S>,
    apply: &[GeneratorAction<'_, S>],
) -> FiltrationResult {
    let dim = unit.len();
    let mut store = S::RankStore::new(dim);
    let mut new_reps: Vec<Vec<S>> = Vec::new();
    if let Some(idx) = store.insert(unit) {
        new_reps.push(store.representative(idx));
    }
    let mut dims = vec![store.rank()];
    if store.rank() == 0 {
        return FiltrationResult {
            dims,
            hilbert: HilbertPolynomial::zero(),
            total_dim: 0,
        };
    }
    loop {
        if store.rank() >= ambient {
            dims.push(store.rank());
            break;
        }
        let mut next_reps = Vec::new();
        'round: for rep in &new_reps {
            for gen in apply {
                if let Some(idx) = store.insert(gen(rep)) {
                    next_reps.push(store.representative(idx));
                    if store.rank() >= ambient {
                        break 'round;
                    }
                }
            }
        }
        dims.push(store.rank());
        if next_reps.is_empty() {
            break;
        }
        if store.rank() >= ambient {
            dims.push(store.rank());
            break;
        }
        new_reps = next_reps;
    }
    audit_closure(&mut store, apply, dim);
    debug_assert!(dims.windows(2).all(|w| w[0] <= w[1]));
    FiltrationResult {
        hilbert: hilbert_from_dims(&dims),
        total_dim: store.rank(),
        dims,
    }
}

/// Re-multiplies the entire stabilized basis by every generator and
/// asserts zero growth, when the arithmetic volume is affordable. The
/// stabilization argument makes growth impossible; this is a defense
/// against engine bugs, not a mathematical necessity.
fn audit_closure<S: Scalar>(
    store: &mut S::RankStore,
    apply: &[GeneratorAction<'_, S>],
    dim: usize,
) {
    let rank = store.rank();
    let cost = (rank as u128)
        .saturating_mul(rank as u128)
        .saturating_mul(apply.len() as u128)
        .saturating_mul(dim as u128);
    if cost > CLOSURE_AUDIT_BUDGET {
        return;
    }
    let reps: Vec<Vec<S>> = (0..rank).map(|i| store.representative(i)).collect();
    for rep in &reps {
        for gen in apply {
            assert!(
                store.insert(gen(rep)).is_none(),
                "stabilized filtration grew under a generator"
            );
        }
    }
}

/// Hilbert polynomial of the subalgebra generated by the X_i, in the
/// quotient selected by `mode`.
pub fn filtration_hilbert<S: Scalar>(
    ctx: &AlgebraContext<S>,
    mode: Mode,
) -> Result<FiltrationResult, crate::Error> {
    let keep = ctx.projection_keep(mode)?;
    let ambient = keep.iter().filter(|&&k| k).count();
    let unit = project_with(&ctx.unit(), &keep);
    let gens: Vec<TildeVector<S>> = (0..ctx.generator_count())
        .map(|i| project_with(ctx.generator(i), &keep))
        .collect();
    let apply: Vec<GeneratorAction<'_, S>> = gens
        .iter()
        .map(|g| {
            Box::new(move |v: &[S]| {
                v.iter()
                    .zip(&g.coords)
                    .map(|(a, b)| a.clone() * b.clone())
                    .collect()
            }) as GeneratorAction<'_, S>
        })
        .collect();
    Ok(run_filtration::<S>(ambient, unit.coords, &apply))
}

/// Total dimension via the filtration.
pub fn total_dimension<S: Scalar>(
    ctx: &AlgebraContext<S>,
    mode: Mode,
) -> Result<usize, crate::Error> {
    Ok(filtration_hilbert(ctx, mode)?.total_dim)
}

/// Filtration over the square-free monomial basis instead of tilde
/// coordinates. Multiplication by an edge variable follows
/// u_e * u_F = q_e u_F (e in F) or u_{F + e}, which never divides by a
/// weight, so zero weights are allowed. Only the full algebra is
/// supported; the quotient projections live in tilde coordinates.
pub fn filtration_hilbert_monomial<S: Scalar>(
    graph: &Graph,
    weights: &WeightAssignment,
    cfg: &S::Config,
) -> Result<FiltrationResult, crate::Error> {
    let m = graph.edge_count();
    assert_eq!(weights.len(), m);
    if m > MAX_EDGES {
        return Err(crate::Error::CapExceeded {
            what: "monomial basis edge count",
            needed: m,
            cap: MAX_EDGES,
        });
    }
    let q = weights.to_scalars::<S>(cfg)?;
    let dim = 1usize << m;
    let mut unit = vec![S::zero(); dim];
    unit[0] = S::one();

    let apply: Vec<GeneratorAction<'_, S>> = (0..graph.vertex_count())
        .map(|i| {
            let incident: Vec<(usize, i8)> = graph
                .edges()
                .iter()
                .enumerate()
                .filter_map(|(idx, e)| {
                    let s = e.sign_at(i);
                    (s != 0).then_some((idx, s))
                })
                .collect();
            let q = q.clone();
            Box::new(move |v: &[S]| {
                let mut out = vec![S::zero(); v.len()];
                for (mask, slot) in out.iter_mut().enumerate() {
                    let mut acc = S::zero();
                    for &(e, sign) in &incident {
                        if mask >> e & 1 == 0 {
                            continue;
                        }
                        let term =
                            q[e].clone() * v[mask].clone() + v[mask ^ (1 << e)].clone();
                        if sign > 0 {
                            acc += term;
                        } else {
                            acc -= term;
                        }
                    }
                    *slot = acc;
                }
                out
            }) as GeneratorAction<'_, S>
        })
        .collect();
    Ok(run_filtration::<S>(dim, unit, &apply))
}

/// Minimal annihilating polynomial of X.t, as its sorted root list:
/// the polynomial is the product of (x - r) over the distinct tilde
/// coordinates r of X.t.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Annihilator<S> {
    pub roots: Vec<S>,
}

impl<S: Scalar> Annihilator<S> {
    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    /// Monic expansion, constant term first.
    pub fn coefficients(&self) -> Vec<S> {
        let mut coeffs = vec![S::one()];
        for r in &self.roots {
            let mut next = vec![S::zero(); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k + 1] += c.clone();
                next[k] -= r.clone() * c.clone();
            }
            coeffs = next;
        }
        coeffs
    }
}

impl<S: Scalar> std::fmt::Display for Annihilator<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.roots.is_empty() {
            return write!(f, "1");
        }
        for r in &self.roots {
            if r.is_zero() {
                write!(f, "x")?;
            } else if *r < S::zero() {
                write!(f, "(x + {})", -r.clone())?;
            } else {
                write!(f, "(x - {r})")?;
            }
        }
        Ok(())
    }
}

/// Builds the annihilator of X.t = sum of t_i X_i, verifies that it
/// kills the element coordinatewise, and that dropping any root leaves
/// a nonzero element.
pub fn min_annihilating_polynomial<S: Scalar>(
    ctx: &AlgebraContext<S>,
    t: &[S],
) -> Result<Annihilator<S>, crate::Error> {
    if t.len() != ctx.graph().vertex_count() {
        return Err(crate::Error::BadInput(format!(
            "expected {} coefficients, got {}",
            ctx.graph().vertex_count(),
            t.len()
        )));
    }
    let mut element = TildeVector::zeros(ctx.dim());
    for (i, ti) in t.iter().enumerate() {
        element = element.add(&ctx.generator(i).scale(ti));
    }
    let mut roots: Vec<S> = element.coords.clone();
    roots.sort();
    roots.dedup();

    for c in &element.coords {
        let mut value = S::one();
        for r in &roots {
            value *= c.clone() - r.clone();
        }
        if !value.is_zero() {
            return Err(crate::Error::Internal(
                "annihilator failed to kill a coordinate".into(),
            ));
        }
    }
    for (j, dropped) in roots.iter().enumerate() {
        // The product without (x - dropped) evaluates at the coordinate
        // equal to `dropped` to a product of nonzero differences; verify
        // that witness coordinate numerically.
        let mut value = S::one();
        for (k, r) in roots.iter().enumerate() {
            if k != j {
                value *= dropped.clone() - r.clone();
            }
        }
        if value.is_zero() {
            return Err(crate::Error::Internal(
                "dropping a root still annihilated the element".into(),
            ));
        }
    }
    Ok(Annihilator { roots })
}

/// Outcome of checking the cut-product relations at one Hecke weight.
#[derive(Clone, Debug)]
pub struct HeckeReport {
    pub mode: Mode,
    pub q: Rational,
    pub subsets_checked: usize,
    /// Vertex-subset bitmasks whose relation did not vanish.
    pub failures: Vec<u32>,
}

impl HeckeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl std::fmt::Display for HeckeReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "mode {} q={}: {} subsets checked, ",
            self.mode.name(),
            self.q,
            self.subsets_checked
        )?;
        if self.failures.is_empty() {
            write!(f, "all relations hold")
        } else {
            let sets: Vec<String> = self
                .failures
                .iter()
                .map(|&s| {
                    let verts: Vec<String> = (0..32)
                        .filter(|i| s >> i & 1 == 1)
                        .map(|i| (i + 1).to_string())
                        .collect();
                    format!("{{{}}}", verts.join(","))
                })
                .collect();
            write!(f, "FAILED at {}", sets.join(" "))
        }
    }
}

/// Verifies the defining cut relations of the Hecke specialization: for
/// each vertex subset I in the mode's domain, the product over k of
/// (sum of X_i over I, minus qk) vanishes, with k ranging over
/// -d_in..=d_out for the full algebra, dropping the top end for the
/// tree quotient and both ends for the internal quotient. Here d_in
/// counts crossing edges whose larger endpoint is in I and d_out those
/// whose smaller endpoint is.
pub fn verify_hecke_relations<S: Scalar>(
    g: &Graph,
    q: &Rational,
    mode: Mode,
    cfg: &S::Config,
) -> Result<HeckeReport, crate::Error> {
    if q.is_zero() {
        return Err(crate::Error::BadInput(
            "Hecke weight must be nonzero".into(),
        ));
    }
    let n = g.vertex_count();
    if n > 16 {
        return Err(crate::Error::CapExceeded {
            what: "vertex subset iteration",
            needed: n,
            cap: 16,
        });
    }
    let weights = WeightAssignment::constant(g.edge_count(), q.clone());
    let ctx = AlgebraContext::<S>::new(g, &weights, cfg.clone())?;
    let keep = ctx.projection_keep(mode)?;
    let unit = project_with(&ctx.unit(), &keep);
    let gens: Vec<TildeVector<S>> = (0..n)
        .map(|i| project_with(ctx.generator(i), &keep))
        .collect();
    let qs = ctx.scalar_from_rational(q)?;

    let full = (1u32 << n) - 1;
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for subset in 1..=full {
        match mode {
            Mode::External => {}
            Mode::Trees { root } => {
                if subset >> root & 1 == 0 || subset == full {
                    continue;
                }
            }
            Mode::Internal => {
                if subset == full {
                    continue;
                }
            }
        }
        let cut = g.cut_data(subset);
        let (lo, hi) = match mode {
            Mode::External => (-(cut.larger_inside as i64), cut.smaller_inside as i64),
            Mode::Trees { .. } => (
                -(cut.larger_inside as i64),
                cut.smaller_inside as i64 - 1,
            ),
            Mode::Internal => (
                1 - cut.larger_inside as i64,
                cut.smaller_inside as i64 - 1,
            ),
        };
        let mut sum = TildeVector::zeros(ctx.dim());
        for (i, x) in gens.iter().enumerate() {
            if subset >> i & 1 == 1 {
                sum = sum.add(x);
            }
        }
        let mut product = unit.clone();
        for k in lo..=hi {
            let kq = qs.clone() * ctx.scalar_from_i64(k);
            product = product.product(&sum.sub(&unit.scale(&kq)));
        }
        checked += 1;
        if !product.is_zero() {
            failures.push(subset);
        }
    }
    Ok(HeckeReport {
        mode,
        q: q.clone(),
        subsets_checked: checked,
        failures,
    })
}

/// One sampled weight per partition class, validated operationally: two
/// independent samples from the same range must produce the same score
/// census count, else the range escalates.
#[derive(Clone, Debug)]
pub struct SampledWeights {
    pub weights: WeightAssignment,
    /// Distinct score vectors at the accepted sample.
    pub census_count: usize,
    pub attempts: usize,
}

pub fn sample_generic_weights(
    g: &Graph,
    partition: &EdgePartition,
    seed: u64,
) -> Result<SampledWeights, crate::Error> {
    let m = g.edge_count();
    partition.validate(m)?;
    if m == 0 {
        return Ok(SampledWeights {
            weights: WeightAssignment { q: Vec::new() },
            census_count: 1,
            attempts: 0,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last_pair = (0usize, 0usize);
    for (attempt, range) in [1_000_000i64, 1_000_000_000, 1_000_000_000_000]
        .into_iter()
        .enumerate()
    {
        let a = draw_assignment(g, partition, &mut rng, range);
        let b = draw_assignment(g, partition, &mut rng, range);
        let ca = score_census(g, &a.q, CensusMode::All)?.count();
        let cb = score_census(g, &b.q, CensusMode::All)?.count();
        if ca == cb {
            return Ok(SampledWeights {
                weights: a,
                census_count: ca,
                attempts: attempt + 1,
            });
        }
        last_pair = (ca, cb);
    }
    Err(crate::Error::GenericityFailed {
        dim_a: last_pair.0,
        dim_b: last_pair.1,
    })
}

/// Distinct positive integer values per class, one shared value inside
/// each class.
fn draw_assignment(
    g: &Graph,
    partition: &EdgePartition,
    rng: &mut ChaCha8Rng,
    range: i64,
) -> WeightAssignment {
    let mut values: Vec<i64> = Vec::with_capacity(partition.class_count());
    while values.len() < partition.class_count() {
        let v = rng.gen_range(2..=range);
        if !values.contains(&v) {
            values.push(v);
        }
    }
    let mut q = vec![Rational::from_integer(0.into()); g.edge_count()];
    for (class, &value) in partition.classes.iter().zip(&values) {
        for (e, slot) in q.iter_mut().enumerate() {
            if class >> e & 1 == 1 {
                *slot = Rational::from_integer(value.into());
            }
        }
    }
    WeightAssignment { q }
}
