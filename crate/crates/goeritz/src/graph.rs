//! Signed multigraphs with optional rotation systems: deletion and
//! contraction, Thistlethwaite's polynomial `τ`, Goeritz matrices of bond
//! matroids via vertex stars, and realization of arbitrary symmetric
//! matrices.
//!
//! Matroids are never represented abstractly. Every matroid-level statement
//! is transported to graphs through the bond/cycle dictionary: deletion in
//! `B(Γ)` is contraction in `Γ`, a coloop of `B(Γ)` is a loop of `Γ`, and
//! `τ[M] = τ[M*]` under the opposite-sign convention for dual colorings.

use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::matrix::SymmetricIntMatrix;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// A half-edge: one end of an edge. `end` is 0 for the `u` side, 1 for the
/// `v` side.
pub type Dart = (usize, u8);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: i8,
}

/// An undirected multigraph with loops, parallel edges, and edge signs ±1.
/// Edge ids are positions in the edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedMultigraph {
    vertex_count: usize,
    edges: Vec<Edge>,
    /// Per-vertex cyclic order of incident half-edges; present only when the
    /// graph carries an embedding (required by the medial construction).
    rotation: Option<Vec<Vec<Dart>>>,
}

/// Classification of an edge for the deletion/contraction recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeClass {
    Loop,
    Bridge,
    Ordinary,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }
    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        self.parent[ra] = rb;
        ra != rb
    }
}

impl SignedMultigraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize, i8)>) -> Result<Self, Error> {
        let edges: Vec<Edge> = edges
            .into_iter()
            .map(|(u, v, sign)| Edge { u, v, sign })
            .collect();
        for e in &edges {
            if e.u >= vertex_count || e.v >= vertex_count {
                return Err(Error::BadGraph(format!(
                    "edge ({}, {}) exceeds vertex count {}",
                    e.u, e.v, vertex_count
                )));
            }
            if e.sign != 1 && e.sign != -1 {
                return Err(Error::BadGraph(format!("edge sign {} is not ±1", e.sign)));
            }
        }
        Ok(SignedMultigraph { vertex_count, edges, rotation: None })
    }

    /// Attach a rotation system. Each half-edge must appear exactly once, at
    /// the vertex it is incident to.
    pub fn with_rotation(mut self, rotation: Vec<Vec<Dart>>) -> Result<Self, Error> {
        if rotation.len() != self.vertex_count {
            return Err(Error::BadGraph(format!(
                "rotation lists {} vertices, graph has {}",
                rotation.len(),
                self.vertex_count
            )));
        }
        let mut seen = vec![[false; 2]; self.edges.len()];
        for (v, darts) in rotation.iter().enumerate() {
            for &(e, end) in darts {
                let edge = self
                    .edges
                    .get(e)
                    .ok_or(Error::BadGraph(format!("rotation names missing edge {}", e)))?;
                if end > 1 {
                    return Err(Error::BadGraph(format!("half-edge end {} is not 0 or 1", end)));
                }
                let home = if end == 0 { edge.u } else { edge.v };
                if home != v {
                    return Err(Error::BadGraph(format!(
                        "half-edge ({}, {}) listed at vertex {} but belongs to {}",
                        e, end, v, home
                    )));
                }
                if seen[e][end as usize] {
                    return Err(Error::BadGraph(format!(
                        "half-edge ({}, {}) appears twice in rotation",
                        e, end
                    )));
                }
                seen[e][end as usize] = true;
            }
        }
        if !seen.iter().all(|s| s[0] && s[1]) {
            return Err(Error::BadGraph("rotation omits a half-edge".into()));
        }
        self.rotation = Some(rotation);
        Ok(self)
    }

    /// Canonical rotation: at every vertex, incident half-edges sorted by
    /// `(edge id, end)`.
    pub fn with_sorted_rotation(self) -> Self {
        let mut rotation = vec![vec![]; self.vertex_count];
        for (id, e) in self.edges.iter().enumerate() {
            rotation[e.u].push((id, 0u8));
            rotation[e.v].push((id, 1u8));
        }
        SignedMultigraph { rotation: Some(rotation), ..self }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Result<&Edge, Error> {
        self.edges.get(e).ok_or(Error::BadEdge(e))
    }

    pub fn rotation(&self) -> Option<&Vec<Vec<Dart>>> {
        self.rotation.as_ref()
    }

    /// Edge multiset with endpoints normalized `u ≤ v`, sorted. Two graphs on
    /// the same vertex set are equal as signed multigraphs iff these agree.
    pub fn edge_multiset(&self) -> Vec<(usize, usize, i8)> {
        let mut out: Vec<_> = self
            .edges
            .iter()
            .map(|e| (e.u.min(e.v), e.u.max(e.v), e.sign))
            .collect();
        out.sort_unstable();
        out
    }

    fn components_uf(&self) -> UnionFind {
        let mut uf = UnionFind::new(self.vertex_count);
        for e in &self.edges {
            uf.union(e.u, e.v);
        }
        uf
    }

    /// Connected components as sorted vertex lists; isolated vertices count.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = self.components_uf();
        let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
        for v in 0..self.vertex_count {
            by_root.entry(uf.find(v)).or_default().push(v);
        }
        let mut comps: Vec<Vec<usize>> = by_root.into_values().collect();
        comps.sort_by_key(|c| c[0]);
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count <= 1 || self.components().len() == 1
    }

    /// The induced subgraph on `vertices` (sorted ascending), relabeled
    /// `0..k`. Only edges with both endpoints inside are kept, in order.
    fn induced(&self, vertices: &[usize]) -> SignedMultigraph {
        let mut index = HashMap::new();
        for (i, &v) in vertices.iter().enumerate() {
            index.insert(v, i);
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index.contains_key(&e.u) && index.contains_key(&e.v))
            .map(|e| Edge { u: index[&e.u], v: index[&e.v], sign: e.sign })
            .collect();
        SignedMultigraph { vertex_count: vertices.len(), edges, rotation: None }
    }

    /// Classify an edge as loop, bridge, or ordinary. A bridge is an edge
    /// whose removal increases the component count.
    pub fn classify_edge(&self, e: usize) -> Result<EdgeClass, Error> {
        let edge = *self.edge(e)?;
        if edge.u == edge.v {
            return Ok(EdgeClass::Loop);
        }
        let mut uf = UnionFind::new(self.vertex_count);
        for (id, other) in self.edges.iter().enumerate() {
            if id != e {
                uf.union(other.u, other.v);
            }
        }
        if uf.find(edge.u) == uf.find(edge.v) {
            Ok(EdgeClass::Ordinary)
        } else {
            Ok(EdgeClass::Bridge)
        }
    }

    /// Delete an edge. The rotation, if any, is dropped.
    pub fn delete_edge(&self, e: usize) -> Result<SignedMultigraph, Error> {
        self.edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(SignedMultigraph { vertex_count: self.vertex_count, edges, rotation: None })
    }

    /// Contract a non-loop edge: remove it and merge its endpoints. The
    /// larger vertex id is relabeled into the smaller; parallel edges and
    /// new loops may appear; signs are preserved.
    pub fn contract_edge(&self, e: usize) -> Result<SignedMultigraph, Error> {
        let edge = *self.edge(e)?;
        if edge.u == edge.v {
            return Err(Error::ContractLoop(e));
        }
        let keep = edge.u.min(edge.v);
        let gone = edge.u.max(edge.v);
        let relabel = |v: usize| {
            if v == gone {
                keep
            } else if v > gone {
                v - 1
            } else {
                v
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(id, _)| id != e)
            .map(|(_, o)| Edge { u: relabel(o.u), v: relabel(o.v), sign: o.sign })
            .collect();
        Ok(SignedMultigraph { vertex_count: self.vertex_count - 1, edges, rotation: None })
    }

    /// Delete several edges at once (ids into `self`).
    pub fn without_edges(&self, remove: &[usize]) -> SignedMultigraph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(id, _)| !remove.contains(id))
            .map(|(_, e)| *e)
            .collect();
        SignedMultigraph { vertex_count: self.vertex_count, edges, rotation: None }
    }

    /// Contract every edge in `bundle` (all joining the same two distinct
    /// vertices): merge the endpoints once and drop the bundle.
    pub fn contract_bundle(&self, bundle: &[usize]) -> Result<SignedMultigraph, Error> {
        let first = *self.edge(bundle[0])?;
        if first.u == first.v {
            return Err(Error::ContractLoop(bundle[0]));
        }
        let deleted = self.without_edges(&bundle[1..]);
        // The id of bundle[0] shifts by the number of removed lower ids.
        let shift = bundle[1..].iter().filter(|&&id| id < bundle[0]).count();
        deleted.contract_edge(bundle[0] - shift)
    }

    /// Loop-sign counts transported from bond-matroid coloops:
    /// `ι₊` counts loops with sign −1, `ι₋` loops with sign +1 (the dual
    /// matroid carries the opposite coloring).
    pub fn coloop_signs(&self) -> (usize, usize) {
        let mut plus = 0;
        let mut minus = 0;
        for e in &self.edges {
            if e.u == e.v {
                if e.sign == -1 {
                    plus += 1;
                } else {
                    minus += 1;
                }
            }
        }
        (plus, minus)
    }
}

/// JSON form `{"vertices": n, "edges": [[u, v, s], ...], "rotation": ...}`.
/// Edge ids are list positions; the rotation is optional, one cyclic list of
/// `[edge, end]` half-edges per vertex.
#[derive(Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: Vec<(usize, usize, i8)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rotation: Option<Vec<Vec<(usize, u8)>>>,
}

impl SignedMultigraph {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let parsed: GraphJson =
            serde_json::from_str(text).map_err(|e| Error::BadInput(e.to_string()))?;
        let g = SignedMultigraph::new(parsed.vertices, parsed.edges)?;
        match parsed.rotation {
            Some(r) => g.with_rotation(r),
            None => Ok(g),
        }
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.vertex_count,
            edges: self.edges.iter().map(|e| (e.u, e.v, e.sign)).collect(),
            rotation: self.rotation.clone(),
        }
    }
}

/// Tiny deterministic PRNG (SplitMix64) used wherever a seeded random choice
/// is part of the public API.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..n` (n > 0).
    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

enum EdgeRule {
    /// Smallest ordinary edge id, else smallest loop/bridge id.
    Deterministic,
    Random(SplitMix64),
}

struct TauEvaluator {
    memo: HashMap<(usize, Vec<(usize, usize, i8)>), LaurentPoly>,
    rule: EdgeRule,
}

impl TauEvaluator {
    fn eval(&mut self, g: &SignedMultigraph) -> LaurentPoly {
        let key = (g.vertex_count(), g.edge_multiset());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let result = self.eval_uncached(g);
        self.memo.insert(key, result.clone());
        result
    }

    fn eval_uncached(&mut self, g: &SignedMultigraph) -> LaurentPoly {
        let comps = g.components();
        if comps.len() > 1 {
            // Split rule: k components contribute (-A^-2 - A^2)^(k-1) times
            // the product of the component values. Isolated vertices count.
            let mut acc = LaurentPoly::circle().pow(comps.len() as u32 - 1);
            for comp in &comps {
                acc = &acc * &self.eval(&g.induced(comp));
            }
            return acc;
        }
        if g.edge_count() == 0 {
            return LaurentPoly::one();
        }
        let e = match &mut self.rule {
            EdgeRule::Deterministic => {
                let mut chosen = None;
                for id in 0..g.edge_count() {
                    if g.classify_edge(id).unwrap() == EdgeClass::Ordinary {
                        chosen = Some(id);
                        break;
                    }
                }
                chosen.unwrap_or(0)
            }
            EdgeRule::Random(rng) => rng.below(g.edge_count()),
        };
        let edge = *g.edge(e).unwrap();
        match g.classify_edge(e).unwrap() {
            EdgeClass::Ordinary => {
                let contracted = self.eval(&g.contract_edge(e).unwrap());
                let deleted = self.eval(&g.delete_edge(e).unwrap());
                if edge.sign > 0 {
                    &contracted.mul_monomial(1, 1) + &deleted.mul_monomial(1, -1)
                } else {
                    &contracted.mul_monomial(1, -1) + &deleted.mul_monomial(1, 1)
                }
            }
            // A loop of Γ is a coloop of B(Γ) with the opposite sign; in the
            // cycle matroid it is simply a loop. Deleting it realizes M∖e.
            EdgeClass::Loop => {
                let rest = self.eval(&g.delete_edge(e).unwrap());
                &LaurentPoly::neg_a_pow(3 * edge.sign as i64) * &rest
            }
            // For a bridge, matroid deletion equals contraction; contracting
            // keeps the graph connected, so no spurious split factor appears.
            EdgeClass::Bridge => {
                let rest = self.eval(&g.contract_edge(e).unwrap());
                &LaurentPoly::neg_a_pow(-3 * edge.sign as i64) * &rest
            }
        }
    }
}

/// Thistlethwaite's polynomial `τ[Γ]` of a signed multigraph, with the
/// split-component rule `τ[Γ₁ ⊔ … ⊔ Γ_k] = (-A^-2 - A^2)^(k-1) Π τ[Γ_i]`.
pub fn tau(g: &SignedMultigraph) -> LaurentPoly {
    TauEvaluator { memo: HashMap::new(), rule: EdgeRule::Deterministic }.eval(g)
}

/// `τ[Γ]` with a seeded random admissible edge choice at every step; always
/// equals [`tau`].
pub fn tau_random_order(g: &SignedMultigraph, seed: u64) -> LaurentPoly {
    TauEvaluator { memo: HashMap::new(), rule: EdgeRule::Random(SplitMix64::new(seed)) }.eval(g)
}

/// Goeritz matrix of the bond matroid `B(Γ)` in the vertex-star 2-basis of
/// the non-base vertices, with the dual-coloring convention folded in:
/// for distinct non-base `v_i, v_j` the entry is `+Σ σ(e)` over non-loop
/// edges joining them, and the diagonal is `-Σ σ(e)` over non-loop edges at
/// `v_i`. Rows and columns are ordered by vertex id, skipping the base.
pub fn goeritz_from_graph(g: &SignedMultigraph, base: usize) -> Result<SymmetricIntMatrix, Error> {
    if base >= g.vertex_count() {
        return Err(Error::IndexOutOfRange { index: base, dim: g.vertex_count() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let verts: Vec<usize> = (0..g.vertex_count()).filter(|&v| v != base).collect();
    let index: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let m = verts.len();
    let mut rows = vec![vec![0i64; m]; m];
    for e in g.edges() {
        if e.u == e.v {
            continue;
        }
        let s = e.sign as i64;
        match (index.get(&e.u), index.get(&e.v)) {
            (Some(&i), Some(&j)) => {
                rows[i][j] += s;
                rows[j][i] += s;
                rows[i][i] -= s;
                rows[j][j] -= s;
            }
            (Some(&i), None) | (None, Some(&i)) => {
                rows[i][i] -= s;
            }
            (None, None) => unreachable!("non-loop edge with both ends at base"),
        }
    }
    SymmetricIntMatrix::from_rows(&rows)
}

/// Realize a symmetric integer matrix as the Goeritz matrix of a signed
/// graph's bond matroid: `goeritz_from_graph(graph_from_matrix(G), 0) == G`.
///
/// Vertices are `v_0..v_m`. Between non-base `v_i, v_j` sit `|g_ij|`
/// parallel edges of sign `sgn(g_ij)`; between `v_0` and `v_j` sit `|s_j|`
/// edges of sign `sgn(s_j)` where `s_j` is minus the `j`-th row sum. A pair
/// of opposite-signed edges is added only where needed for connectivity. No
/// loops are ever created, so the realization has no bond-matroid coloops.
/// The result carries the canonical sorted rotation, ready for the medial
/// construction.
pub fn graph_from_matrix(g: &SymmetricIntMatrix) -> SignedMultigraph {
    let m = g.dim();
    let mut edges: Vec<(usize, usize, i8)> = vec![];
    let weight = |i: usize, j: usize| -> i64 {
        // vertices are 1-based relative to matrix indices
        if i == 0 {
            -(0..m).map(|k| g.get(j - 1, k)).sum::<i64>()
        } else {
            g.get(i - 1, j - 1)
        }
    };
    let mut uf = UnionFind::new(m + 1);
    for i in 0..=m {
        for j in (i + 1)..=m {
            let w = weight(i, j);
            let sign = if w >= 0 { 1i8 } else { -1i8 };
            for _ in 0..w.abs() {
                edges.push((i, j, sign));
                uf.union(i, j);
            }
        }
    }
    // Connect leftover pieces with one positive and one negative edge per
    // missing link; these cancel in every Goeritz sum.
    for i in 0..=m {
        for j in (i + 1)..=m {
            if uf.find(i) != uf.find(j) {
                edges.push((i, j, 1));
                edges.push((i, j, -1));
                uf.union(i, j);
            }
        }
    }
    SignedMultigraph::new(m + 1, edges)
        .expect("realization endpoints are in range")
        .with_sorted_rotation()
}
