//! The weighted edge-subset algebra in tilde coordinates.
//!
//! With all weights nonzero, the algebra generated by idempotent-like
//! edge variables u_e with u_e^2 = q_e u_e splits over the basis of
//! scaled square-free monomials indexed by edge subsets. In the
//! transformed ("tilde") coordinates obtained by a subset-sum zeta
//! transform, addition and multiplication are both coordinatewise, with
//! the all-ones vector as unit. Every element is simply a function on
//! orientations, one coordinate per edge-subset mask.
//!
//! The vertex generators X_i, cut elements f_I, and the tree/internal
//! quotients (realized as coordinate projections) all live here.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::graph::{Graph, Orientation, WeightAssignment};
use crate::scalar::{Rational, Scalar};

/// Hard cap on edge count for dense tilde vectors.
pub const MAX_TILDE_EDGES: usize = crate::graph::MAX_EDGES;

/// Which algebra the computation runs in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// The full algebra generated by the X_i.
    External,
    /// Quotient by the cut ideal at subsets containing `root`.
    Trees { root: usize },
    /// Quotient by the cut ideal at all proper subsets.
    Internal,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::External => "external",
            Mode::Trees { .. } => "trees",
            Mode::Internal => "internal",
        }
    }
}

/// Dense element of the algebra in tilde coordinates: one scalar per
/// edge-subset mask, index = mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TildeVector<S> {
    pub coords: Vec<S>,
}

impl<S: Scalar> TildeVector<S> {
    pub fn zeros(dim: usize) -> Self {
        TildeVector {
            coords: vec![S::zero(); dim],
        }
    }

    pub fn ones(dim: usize) -> Self {
        TildeVector {
            coords: vec![S::one(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Coordinatewise product: the algebra multiplication.
    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        TildeVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() * b.clone())
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        TildeVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        TildeVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        TildeVector {
            coords: self.coords.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Subtracts c from every coordinate: self - c * unit.
    pub fn sub_scalar(&self, c: &S) -> Self {
        TildeVector {
            coords: self.coords.iter().map(|a| a.clone() - c.clone()).collect(),
        }
    }
}

/// In-place subset-sum (zeta) transform: out[mask] = sum over submasks.
pub fn zeta_transform<S: Scalar>(coords: &mut [S], m: usize) {
    debug_assert_eq!(coords.len(), 1 << m);
    for bit in 0..m {
        let step = 1usize << bit;
        for mask in 0..coords.len() {
            if mask & step != 0 {
                let lower = coords[mask ^ step].clone();
                coords[mask] += lower;
            }
        }
    }
}

/// In-place inverse (Moebius) transform of `zeta_transform`.
pub fn moebius_transform<S: Scalar>(coords: &mut [S], m: usize) {
    debug_assert_eq!(coords.len(), 1 << m);
    for bit in 0..m {
        let step = 1usize << bit;
        for mask in 0..coords.len() {
            if mask & step != 0 {
                let lower = coords[mask ^ step].clone();
                coords[mask] -= lower;
            }
        }
    }
}

/// Precomputed context: graph, weights in the scalar field, and the
/// generators X_i in tilde coordinates.
pub struct AlgebraContext<S: Scalar> {
    graph: Graph,
    weights: Vec<S>,
    rational_weights: WeightAssignment,
    cfg: S::Config,
    generators: Vec<TildeVector<S>>,
}

impl<S: Scalar> AlgebraContext<S> {
    /// Builds the context. All weights must be nonzero: the tilde basis
    /// rescales each edge variable by its weight.
    pub fn new(
        graph: &Graph,
        weights: &WeightAssignment,
        cfg: S::Config,
    ) -> Result<Self, crate::Error> {
        let m = graph.edge_count();
        assert_eq!(weights.len(), m);
        if m > MAX_TILDE_EDGES {
            return Err(crate::Error::CapExceeded {
                what: "tilde coordinate edge count",
                needed: m,
                cap: MAX_TILDE_EDGES,
            });
        }
        if let Some(edge) = weights.q.iter().position(Zero::is_zero) {
            return Err(crate::Error::ZeroWeight { edge });
        }
        let scalars = weights.to_scalars::<S>(&cfg)?;
        if let Some(edge) = scalars.iter().position(Zero::is_zero) {
            // Nonzero rationals can still vanish in a prime field.
            return Err(crate::Error::ZeroWeight { edge });
        }
        let mut ctx = AlgebraContext {
            graph: graph.clone(),
            weights: scalars,
            rational_weights: weights.clone(),
            cfg,
            generators: Vec::new(),
        };
        ctx.generators = (0..graph.vertex_count())
            .map(|i| ctx.build_generator(i))
            .collect();
        Ok(ctx)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weights(&self) -> &[S] {
        &self.weights
    }

    pub fn rational_weights(&self) -> &WeightAssignment {
        &self.rational_weights
    }

    pub fn config(&self) -> &S::Config {
        &self.cfg
    }

    pub fn dim(&self) -> usize {
        1usize << self.graph.edge_count()
    }

    pub fn unit(&self) -> TildeVector<S> {
        TildeVector::ones(self.dim())
    }

    pub fn scalar_from_rational(&self, value: &Rational) -> Result<S, crate::Error> {
        S::from_rational(value, &self.cfg).map_err(crate::Error::Scalar)
    }

    pub fn scalar_from_i64(&self, value: i64) -> S {
        S::from_rational(&Rational::from_integer(value.into()), &self.cfg)
            .expect("integers embed into every scalar field")
    }

    /// The generator X_i in tilde coordinates.
    pub fn generator(&self, i: usize) -> &TildeVector<S> {
        &self.generators[i]
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// Computes X_i two ways and checks they agree: the direct signed
    /// subset sum, and the score-vector form (head-weight sum at i over
    /// each orientation, minus the constant sum of weights at edges
    /// where i is the larger endpoint).
    fn build_generator(&self, i: usize) -> TildeVector<S> {
        let m = self.graph.edge_count();
        let dim = 1usize << m;
        let incident: Vec<(usize, i8)> = self
            .graph
            .edges()
            .iter()
            .enumerate()
            .filter_map(|(idx, e)| {
                let s = e.sign_at(i);
                (s != 0).then_some((idx, s))
            })
            .collect();
        let mut coords = Vec::with_capacity(dim);
        for mask in 0..dim {
            let mut acc = S::zero();
            for &(idx, sign) in &incident {
                if mask >> idx & 1 == 1 {
                    if sign > 0 {
                        acc += self.weights[idx].clone();
                    } else {
                        acc -= self.weights[idx].clone();
                    }
                }
            }
            coords.push(acc);
        }
        let direct = TildeVector { coords };

        let mut offset = S::zero();
        for &(idx, sign) in &incident {
            if sign < 0 {
                offset += self.weights[idx].clone();
            }
        }
        for mask in 0..dim {
            let mut head_sum = S::zero();
            for &(idx, _) in &incident {
                let e = self.graph.edge(idx);
                if Orientation(mask as u32).head(e, idx) == i {
                    head_sum += self.weights[idx].clone();
                }
            }
            assert!(
                direct.coords[mask] == head_sum - offset.clone(),
                "generator formulas disagree at vertex {i}, mask {mask:b}"
            );
        }
        direct
    }

    /// Embeds a sparse element given by coefficients over the scaled
    /// square-free monomial basis (alpha basis) into tilde coordinates.
    pub fn to_tilde(&self, alpha: &BTreeMap<u32, S>) -> TildeVector<S> {
        let mut coords = vec![S::zero(); self.dim()];
        for (&mask, c) in alpha {
            coords[mask as usize] = c.clone();
        }
        zeta_transform(&mut coords, self.graph.edge_count());
        TildeVector { coords }
    }

    /// Recovers the alpha-basis coefficients, dropping zeros.
    pub fn from_tilde(&self, v: &TildeVector<S>) -> BTreeMap<u32, S> {
        let mut coords = v.coords.clone();
        moebius_transform(&mut coords, self.graph.edge_count());
        coords
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mask, c)| (mask as u32, c))
            .collect()
    }

    /// The edge variable u_e in tilde coordinates: q_e on masks
    /// containing e, zero elsewhere.
    pub fn edge_variable(&self, e: usize) -> TildeVector<S> {
        let dim = self.dim();
        let mut coords = Vec::with_capacity(dim);
        for mask in 0..dim {
            if mask >> e & 1 == 1 {
                coords.push(self.weights[e].clone());
            } else {
                coords.push(S::zero());
            }
        }
        TildeVector { coords }
    }

    /// The cut element f_I for a vertex subset I (bitmask): the product
    /// of u_e over crossing edges with smaller endpoint inside I and of
    /// (u_e - q_e) over crossing edges with larger endpoint inside I.
    ///
    /// Its support is checked against the closed form: a single scalar on
    /// exactly the masks that contain all crossing edges of the first
    /// kind and none of the second (the orientations pointing the whole
    /// cut into I).
    pub fn cut_element(&self, subset: u32) -> TildeVector<S> {
        let inside = |v: usize| subset >> v & 1 == 1;
        let mut smaller_inside = Vec::new();
        let mut larger_inside = Vec::new();
        for (idx, e) in self.graph.edges().iter().enumerate() {
            if inside(e.u) == inside(e.v) {
                continue;
            }
            if inside(e.lo()) {
                smaller_inside.push(idx);
            } else {
                larger_inside.push(idx);
            }
        }
        let mut f = self.unit();
        for &e in &smaller_inside {
            f = f.product(&self.edge_variable(e));
        }
        for &e in &larger_inside {
            let factor = self.edge_variable(e).sub_scalar(&self.weights[e]);
            f = f.product(&factor);
        }

        let mut scalar = S::one();
        for &e in &smaller_inside {
            scalar *= self.weights[e].clone();
        }
        for &e in &larger_inside {
            scalar *= -self.weights[e].clone();
        }
        let need: u32 = smaller_inside.iter().map(|&e| 1u32 << e).sum();
        let cut: u32 = need + larger_inside.iter().map(|&e| 1u32 << e).sum::<u32>();
        for mask in 0..self.dim() {
            let expect = if mask as u32 & cut == need {
                scalar.clone()
            } else {
                S::zero()
            };
            assert!(
                f.coords[mask] == expect,
                "cut element support mismatch at mask {mask:b}"
            );
        }
        f
    }

    /// Coordinate masks surviving the quotient projection for a mode.
    ///
    /// External keeps everything. Trees keeps the masks whose orientation
    /// reaches every vertex from the root: the cut elements f_I over
    /// proper subsets I containing the root are supported exactly on the
    /// orientations with some such cut pointing entirely into I, i.e. on
    /// the orientations that do not reach all of the complement from the
    /// root. Internal keeps the strongly connected orientations by the
    /// same argument over all proper subsets.
    pub fn projection_keep(&self, mode: Mode) -> Result<Vec<bool>, crate::Error> {
        let g = &self.graph;
        match mode {
            Mode::External => Ok(vec![true; self.dim()]),
            Mode::Trees { root } => {
                if root >= g.vertex_count() {
                    return Err(crate::Error::BadInput(format!(
                        "root {} out of range 1..={}",
                        root + 1,
                        g.vertex_count()
                    )));
                }
                if !g.is_connected() {
                    return Err(crate::Error::Disconnected);
                }
                Ok((0..self.dim())
                    .map(|mask| g.reaches_all_forward(Orientation(mask as u32), root))
                    .collect())
            }
            Mode::Internal => {
                if !g.is_connected() {
                    return Err(crate::Error::Disconnected);
                }
                Ok((0..self.dim())
                    .map(|mask| g.is_strongly_connected(Orientation(mask as u32)))
                    .collect())
            }
        }
    }

    /// Projects onto the quotient algebra for a mode by zeroing the
    /// coordinates outside the kept mask set.
    pub fn project_quotient(
        &self,
        v: &TildeVector<S>,
        mode: Mode,
    ) -> Result<TildeVector<S>, crate::Error> {
        let keep = self.projection_keep(mode)?;
        Ok(project_with(v, &keep))
    }
}

/// Zeroes the coordinates not kept.
pub fn project_with<S: Scalar>(v: &TildeVector<S>, keep: &[bool]) -> TildeVector<S> {
    assert_eq!(v.dim(), keep.len());
    TildeVector {
        coords: v
            .coords
            .iter()
            .zip(keep)
            .map(|(c, &k)| if k { c.clone() } else { S::zero() })
            .collect(),
    }
}
