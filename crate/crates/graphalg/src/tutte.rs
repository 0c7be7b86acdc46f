//! Tutte polynomials by deletion-contraction, an independent subset-rank
//! oracle, and Hilbert polynomials obtained from Tutte specializations.

use std::collections::HashMap;
use std::fmt;

use crate::graph::Graph;

/// Polynomial in x and y with integer coefficients, keyed by exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BivariatePolynomial {
    coeffs: HashMap<(u32, u32), i64>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut p = Self::default();
        p.add_term(0, 0, c);
        p
    }

    pub fn term(x: u32, y: u32, c: i64) -> Self {
        let mut p = Self::default();
        p.add_term(x, y, c);
        p
    }

    pub fn add_term(&mut self, x: u32, y: u32, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.coeffs.entry((x, y)).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.coeffs.remove(&(x, y));
        }
    }

    pub fn coefficient(&self, x: u32, y: u32) -> i64 {
        self.coeffs.get(&(x, y)).copied().unwrap_or(0)
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (&(x, y), &c) in &other.coeffs {
            self.add_term(x, y, c);
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (&(ax, ay), &ac) in &self.coeffs {
            for (&(bx, by), &bc) in &other.coeffs {
                out.add_term(ax + bx, ay + by, ac * bc);
            }
        }
        out
    }

    /// Multiplies by x^dx y^dy.
    pub fn shift(&self, dx: u32, dy: u32) -> Self {
        let mut out = Self::default();
        for (&(x, y), &c) in &self.coeffs {
            out.add_term(x + dx, y + dy, c);
        }
        out
    }

    pub fn eval(&self, x: i64, y: i64) -> i64 {
        self.coeffs
            .iter()
            .map(|(&(a, b), &c)| c * x.pow(a) * y.pow(b))
            .sum()
    }

    /// Terms in descending graded reverse-lexicographic order.
    pub fn terms_grevlex(&self) -> Vec<(u32, u32, i64)> {
        let mut terms: Vec<(u32, u32, i64)> = self
            .coeffs
            .iter()
            .map(|(&(x, y), &c)| (x, y, c))
            .collect();
        terms.sort_by(|a, b| (b.0 + b.1, a.1).cmp(&(a.0 + a.1, b.1)));
        terms
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_x_degree(&self) -> u32 {
        self.coeffs.keys().map(|&(x, _)| x).max().unwrap_or(0)
    }

    pub fn max_y_degree(&self) -> u32 {
        self.coeffs.keys().map(|&(_, y)| y).max().unwrap_or(0)
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms_grevlex();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, &(x, y, c)) in terms.iter().enumerate() {
            let magnitude = c.unsigned_abs();
            if idx == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = magnitude == 1 && (x, y) != (0, 0);
            if !unit_coeff {
                write!(f, "{magnitude}")?;
            }
            let mut sep = if unit_coeff { "" } else { "*" };
            for (name, pow) in [("x", x), ("y", y)] {
                if pow >= 1 {
                    write!(f, "{sep}{name}")?;
                    if pow > 1 {
                        write!(f, "^{pow}")?;
                    }
                    sep = "*";
                }
            }
        }
        Ok(())
    }
}

/// Polynomial in t with nonnegative integer coefficients, indexed by
/// degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HilbertPolynomial {
    pub coeffs: Vec<i64>,
}

impl HilbertPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        HilbertPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        HilbertPolynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at t = 1: the total dimension.
    pub fn total(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Space-separated coefficient row, constant term first.
    pub fn row(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let strs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strs.join(" ")
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut wrote = false;
        for (deg, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            wrote = true;
            match (deg, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, c) => write!(f, "{c}*t")?,
                (d, 1) => write!(f, "t^{d}")?,
                (d, c) => write!(f, "{c}*t^{d}")?,
            }
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Hilbert specialization selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HilbertVariant {
    External,
    Trees,
    Internal,
}

impl HilbertVariant {
    pub fn name(&self) -> &'static str {
        match self {
            HilbertVariant::External => "external",
            HilbertVariant::Trees => "trees",
            HilbertVariant::Internal => "internal",
        }
    }
}

// ==== deletion-contraction ====

/// Working multigraph for the recursion: vertex count plus sorted edge
/// pairs. Loops appear as (v, v).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    fn from_graph(g: &Graph) -> Self {
        MultiGraph {
            n: g.vertex_count(),
            edges: g
                .edges()
                .iter()
                .map(|e| (e.lo(), e.hi()))
                .collect(),
        }
    }

    fn delete(&self, idx: usize) -> MultiGraph {
        let mut edges = self.edges.clone();
        edges.remove(idx);
        MultiGraph { n: self.n, edges }
    }

    /// Contracts edge idx: its endpoints merge, other edges are renamed,
    /// parallel copies become loops.
    fn contract(&self, idx: usize) -> MultiGraph {
        let (a, b) = self.edges[idx];
        debug_assert!(a != b);
        let rename = |v: usize| {
            let v = if v == b { a } else { v };
            if v > b {
                v - 1
            } else {
                v
            }
        };
        let mut edges = Vec::with_capacity(self.edges.len() - 1);
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if i == idx {
                continue;
            }
            let (u, v) = (rename(u), rename(v));
            edges.push((u.min(v), u.max(v)));
        }
        MultiGraph {
            n: self.n - 1,
            edges,
        }
    }

    /// True if u and v stay connected after removing edge idx.
    fn connected_without(&self, idx: usize) -> bool {
        let (a, b) = self.edges[idx];
        let mut seen = vec![false; self.n];
        let mut stack = vec![a];
        seen[a] = true;
        while let Some(u) = stack.pop() {
            if u == b {
                return true;
            }
            for (i, &(x, y)) in self.edges.iter().enumerate() {
                if i == idx {
                    continue;
                }
                let w = if x == u {
                    y
                } else if y == u {
                    x
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }

    /// Cheap sound memo key: relabels vertices by degree-refined color
    /// classes and returns the sorted edge multiset. Equal keys imply
    /// isomorphic graphs because the key carries the whole edge list;
    /// refinement quality only affects the hit rate.
    fn canonical_key(&self) -> MultiGraph {
        let mut colors: Vec<u64> = vec![0; self.n];
        let mut degree = vec![0u64; self.n];
        let mut loops = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            if u == v {
                loops[u] += 1;
            } else {
                degree[u] += 1;
                degree[v] += 1;
            }
        }
        for v in 0..self.n {
            colors[v] = degree[v] << 16 | loops[v];
        }
        for _ in 0..self.n.min(8) {
            let mut next: Vec<u64> = Vec::with_capacity(self.n);
            for v in 0..self.n {
                let mut neighbor_colors: Vec<u64> = self
                    .edges
                    .iter()
                    .filter_map(|&(a, b)| {
                        if a == v && b != v {
                            Some(colors[b])
                        } else if b == v && a != v {
                            Some(colors[a])
                        } else {
                            None
                        }
                    })
                    .collect();
                neighbor_colors.sort_unstable();
                let mut h: u64 = colors[v].wrapping_mul(0x9E3779B97F4A7C15);
                for c in neighbor_colors {
                    h = h.rotate_left(7).wrapping_mul(31).wrapping_add(c);
                }
                next.push(h);
            }
            if next == colors {
                break;
            }
            colors = next;
        }
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (colors[v], v));
        let mut rank = vec![0usize; self.n];
        for (pos, &v) in order.iter().enumerate() {
            rank[v] = pos;
        }
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (u, v) = (rank[u], rank[v]);
                (u.min(v), u.max(v))
            })
            .collect();
        edges.sort_unstable();
        MultiGraph { n: self.n, edges }
    }
}

fn tutte_rec(g: &MultiGraph, memo: &mut HashMap<MultiGraph, BivariatePolynomial>) -> BivariatePolynomial {
    let mut loops = 0u32;
    let mut working = Vec::with_capacity(g.edges.len());
    for &(u, v) in &g.edges {
        if u == v {
            loops += 1;
        } else {
            working.push((u, v));
        }
    }
    let core = MultiGraph {
        n: g.n,
        edges: working,
    };
    // Last-indexed ordinary (non-bridge) edge drives the branch.
    let pick = (0..core.edges.len())
        .rev()
        .find(|&idx| core.connected_without(idx));
    let base = match pick {
        None => BivariatePolynomial::term(core.edges.len() as u32, 0, 1),
        Some(idx) => {
            let key = core.canonical_key();
            if let Some(hit) = memo.get(&key) {
                hit.clone()
            } else {
                let mut result = tutte_rec(&core.delete(idx), memo);
                result.add_assign(&tutte_rec(&core.contract(idx), memo));
                memo.insert(key, result.clone());
                result
            }
        }
    };
    base.shift(0, loops)
}

/// Tutte polynomial via memoized deletion-contraction.
pub fn tutte_polynomial(g: &Graph) -> BivariatePolynomial {
    let mut memo = HashMap::new();
    tutte_rec(&MultiGraph::from_graph(g), &mut memo)
}

/// Independent Tutte oracle: the subset expansion over edge ranks,
/// summing (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A)) over all edge subsets.
pub fn tutte_rank_nullity_oracle(g: &Graph, cap: usize) -> Result<BivariatePolynomial, crate::Error> {
    let m = g.edge_count();
    if m > cap {
        return Err(crate::Error::CapExceeded {
            what: "rank-nullity oracle edge count",
            needed: m,
            cap,
        });
    }
    let n = g.vertex_count();
    let rank_of = |subset: u32| -> usize {
        let mut parent: Vec<usize> = (0..n).collect();
        let mut components = n;
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (idx, e) in g.edges().iter().enumerate() {
            if subset >> idx & 1 == 1 {
                let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
                if a != b {
                    parent[a] = b;
                    components -= 1;
                }
            }
        }
        n - components
    };
    let full_rank = rank_of(crate::graph::mask_of_width(m));
    // (x-1)^a and (y-1)^b expanded once per exponent.
    let mut x_pows = vec![BivariatePolynomial::constant(1)];
    let mut y_pows = vec![BivariatePolynomial::constant(1)];
    let x_minus_1 = {
        let mut p = BivariatePolynomial::term(1, 0, 1);
        p.add_term(0, 0, -1);
        p
    };
    let y_minus_1 = {
        let mut p = BivariatePolynomial::term(0, 1, 1);
        p.add_term(0, 0, -1);
        p
    };
    for k in 1..=m {
        x_pows.push(x_pows[k - 1].mul(&x_minus_1));
        y_pows.push(y_pows[k - 1].mul(&y_minus_1));
    }
    let mut counts: HashMap<(usize, usize), i64> = HashMap::new();
    for subset in 0..=crate::graph::mask_of_width(m) {
        let r = rank_of(subset);
        *counts
            .entry((full_rank - r, subset.count_ones() as usize - r))
            .or_insert(0) += 1;
        if m == 0 {
            break;
        }
    }
    let mut total = BivariatePolynomial::zero();
    for ((a, b), c) in counts {
        let mut part = x_pows[a].mul(&y_pows[b]);
        part = part.mul(&BivariatePolynomial::constant(c));
        total.add_assign(&part);
    }
    Ok(total)
}

/// Hilbert polynomial from a Tutte specialization: substitutes
/// x -> 1+t (external), 1 (trees) or 0 (internal) and y -> 1/t, then
/// multiplies by t^(m - n + c) to clear the Laurent part.
pub fn hilbert_from_tutte(g: &Graph, variant: HilbertVariant) -> Result<HilbertPolynomial, crate::Error> {
    if variant != HilbertVariant::External && !g.is_connected() {
        return Err(crate::Error::Disconnected);
    }
    let tutte = tutte_polynomial(g);
    hilbert_from_tutte_polynomial(g, &tutte, variant)
}

/// Same specialization, from an already computed Tutte polynomial.
pub fn hilbert_from_tutte_polynomial(
    g: &Graph,
    tutte: &BivariatePolynomial,
    variant: HilbertVariant,
) -> Result<HilbertPolynomial, crate::Error> {
    let nullity = g.edge_count() + g.component_count() - g.vertex_count();
    let mut coeffs: Vec<i64> = Vec::new();
    let mut bump = |deg: usize, c: i64| {
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, 0);
        }
        coeffs[deg] += c;
    };
    for (&(i, j), &c) in tutte.coeffs.iter() {
        let j = j as usize;
        if j > nullity {
            return Err(crate::Error::Internal(format!(
                "Tutte term y^{j} exceeds nullity {nullity}; negative power would survive"
            )));
        }
        let shift = nullity - j;
        match variant {
            HilbertVariant::External => {
                // (1+t)^i expands through binomials.
                let mut binom: i64 = 1;
                for k in 0..=i as usize {
                    bump(shift + k, c * binom);
                    binom = binom * (i as i64 - k as i64) / (k as i64 + 1);
                }
            }
            HilbertVariant::Trees => bump(shift, c),
            HilbertVariant::Internal => {
                if i == 0 {
                    bump(shift, c);
                }
            }
        }
    }
    let poly = HilbertPolynomial::from_coeffs(coeffs);
    if poly.coeffs.iter().any(|&c| c < 0) {
        return Err(crate::Error::Internal(format!(
            "negative Hilbert coefficient in {}",
            poly.row()
        )));
    }
    Ok(poly)
}
