//! Diagram-level invariants: Tait graphs, Goeritz matrices, writhe data,
//! crossing types and Euler numbers, the state-sum bracket, Jones, `ν`, and
//! determinant sets.

use super::embedding::{checkerboard, Embedding, Shading};
use super::Diagram;
use crate::error::Error;
use crate::graph::{tau, SignedMultigraph};
use crate::laurent::{HalfTLaurent, LaurentPoly};
use crate::matrix::{EulerNumber, SymmetricIntMatrix};
use num_bigint::BigInt;
use num_traits::Signed;
use std::collections::HashMap;

/// A Tait graph together with its face/crossing provenance.
///
/// Vertex `i` is the black face `vertex_faces[i]`; edge `c` comes from
/// crossing `c`.
#[derive(Debug, Clone)]
pub struct TaitGraph {
    pub graph: SignedMultigraph,
    pub vertex_faces: Vec<usize>,
}

/// The Tait graph of a shading: one vertex per black face, one signed edge
/// per crossing joining its two black-quadrant faces, with the rotation
/// induced by the embedding.
pub fn tait_graph(d: &Diagram, emb: &Embedding, s: &Shading) -> TaitGraph {
    let vertex_faces = s.black_faces();
    let index: HashMap<usize, usize> =
        vertex_faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut edges = vec![];
    for c in 0..d.crossing_count() {
        let (q1, q2) = s.black_quadrants(d, emb, c);
        let f1 = emb.face_at_corner(d, c, q1);
        let f2 = emb.face_at_corner(d, c, q2);
        edges.push((index[&f1], index[&f2], s.crossing_sign(d, emb, c)));
    }
    let graph = SignedMultigraph::new(vertex_faces.len(), edges)
        .expect("tait endpoints are black faces");
    // Rotation: around each black face, crossings appear in boundary-walk
    // order; the corner's quadrant tells which end of the edge sits here.
    let mut rotation: Vec<Vec<(usize, u8)>> = vec![vec![]; vertex_faces.len()];
    for (vi, &f) in vertex_faces.iter().enumerate() {
        for (c, q) in emb.walk_corners(d, f) {
            let (q1, _q2) = s.black_quadrants(d, emb, c);
            let end = if q == q1 { 0 } else { 1 };
            rotation[vi].push((c, end));
        }
    }
    let graph = graph
        .with_rotation(rotation)
        .expect("induced rotation covers each half-edge once");
    TaitGraph { graph, vertex_faces }
}

/// Goeritz matrix over an explicitly ordered list of white regions.
///
/// `regions` must enumerate all white faces but one (the implicit base), in
/// the desired row order.
pub fn goeritz_with_regions(
    d: &Diagram,
    emb: &Embedding,
    s: &Shading,
    regions: &[usize],
) -> Result<SymmetricIntMatrix, Error> {
    let whites = s.white_faces();
    for &r in regions {
        if !whites.contains(&r) {
            return Err(Error::BadRegion(r));
        }
    }
    let mut distinct = regions.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != regions.len() || regions.len() + 1 != whites.len() {
        return Err(Error::BadRegion(regions.len()));
    }
    // Unreduced matrix over all white faces, then restrict.
    let windex: HashMap<usize, usize> = whites.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let m = whites.len();
    let mut full = vec![vec![0i64; m]; m];
    for c in 0..d.crossing_count() {
        let (b1, _) = s.black_quadrants(d, emb, c);
        let (w1, w2) = if b1 == 1 { (0, 2) } else { (1, 3) };
        let f1 = emb.face_at_corner(d, c, w1);
        let f2 = emb.face_at_corner(d, c, w2);
        if f1 == f2 {
            continue; // nugatory: undetected by the Goeritz matrix
        }
        let (i, j) = (windex[&f1], windex[&f2]);
        let sig = s.crossing_sign(d, emb, c) as i64;
        full[i][j] -= sig;
        full[j][i] -= sig;
        full[i][i] += sig;
        full[j][j] += sig;
    }
    let rows: Vec<Vec<i64>> = regions
        .iter()
        .map(|&ri| {
            regions
                .iter()
                .map(|&rj| full[windex[&ri]][windex[&rj]])
                .collect()
        })
        .collect();
    SymmetricIntMatrix::from_rows(&rows)
}

/// Goeritz matrix of a shading with respect to a base white region; the
/// remaining white regions are ordered by face id.
pub fn goeritz_from_diagram(
    d: &Diagram,
    emb: &Embedding,
    s: &Shading,
    base_region: usize,
) -> Result<SymmetricIntMatrix, Error> {
    if base_region >= emb.face_count() || s.is_black(base_region) {
        return Err(Error::BadRegion(base_region));
    }
    let regions: Vec<usize> = s
        .white_faces()
        .into_iter()
        .filter(|&f| f != base_region)
        .collect();
    goeritz_with_regions(d, emb, s, &regions)
}

/// Verify that the surface Goeritz matrix of a shading equals the Goeritz
/// matrix of the opposite shading's Tait graph (the bond-matroid route),
/// with base region and vertex orderings matched.
pub fn goeritz_from_graph_route_check(
    d: &Diagram,
    emb: &Embedding,
    s: &Shading,
    base_region: usize,
) -> Result<bool, Error> {
    let via_surface = goeritz_from_diagram(d, emb, s, base_region)?;
    let dual = tait_graph(d, emb, &s.complement());
    // Vertices of the dual Tait graph are the white faces of `s`, in face
    // order, so the base vertex is the base region's position.
    let base_vertex = dual
        .vertex_faces
        .iter()
        .position(|&f| f == base_region)
        .ok_or(Error::BadRegion(base_region))?;
    let via_graph = crate::graph::goeritz_from_graph(&dual.graph, base_vertex)?;
    Ok(via_surface == via_graph)
}

/// Default base region: the face left of arc 1 when white, else the lowest
/// white face id.
pub fn default_base(d: &Diagram, emb: &Embedding, s: &Shading) -> usize {
    let left = emb.left_face_of_arc(d, 1);
    if !s.is_black(left) {
        left
    } else {
        s.white_faces()[0]
    }
}

/// Writhe data of a diagram with respect to a shading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WritheData {
    /// Total writhe `Σ ε(c)`.
    pub w: i64,
    /// Writhe summed over the shading's nugatory crossings only.
    pub w0: i64,
    pub signs: Vec<i8>,
    pub nugatory: Vec<bool>,
}

pub fn writhe_data(d: &Diagram, emb: &Embedding, s: &Shading) -> WritheData {
    let signs: Vec<i8> = (0..d.crossing_count()).map(|c| d.crossing_sign(c)).collect();
    let nugatory: Vec<bool> = (0..d.crossing_count())
        .map(|c| s.is_nugatory(d, emb, c))
        .collect();
    let w = signs.iter().map(|&e| e as i64).sum();
    let w0 = signs
        .iter()
        .zip(&nugatory)
        .filter(|(_, &n)| n)
        .map(|(&e, _)| e as i64)
        .sum();
    WritheData { w, w0, signs, nugatory }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossingType {
    I,
    II,
}

/// Classify each crossing as type I or II for the shading and compute the
/// signed Euler number of the checkerboard surface.
///
/// A crossing is type I exactly when the quadrant between its two outgoing
/// half-edges is unshaded, which amounts to `ε(c) = -σ(c)`; the Euler
/// number is twice the signed count of type II crossings (sign calibrated
/// against the Jones normalization).
pub fn crossing_types_and_euler(
    d: &Diagram,
    emb: &Embedding,
    s: &Shading,
) -> (Vec<CrossingType>, EulerNumber) {
    let mut types = vec![];
    let mut e = 0i64;
    for c in 0..d.crossing_count() {
        let eps = d.crossing_sign(c);
        let sig = s.crossing_sign(d, emb, c);
        if eps == -sig {
            types.push(CrossingType::I);
        } else {
            types.push(CrossingType::II);
            e += 2 * sig as i64;
        }
    }
    (types, EulerNumber(e))
}

/// The Kauffman bracket by brute-force state sum over all `2^n` smoothings.
///
/// The A-smoothing of a crossing joins slot 0 to slot 1 and slot 2 to
/// slot 3 (merging the quadrants swept from the over-strand); the
/// B-smoothing joins 1–2 and 3–0. Only defined for diagrams in the sphere.
pub fn bracket_state_sum(d: &Diagram, emb: &Embedding) -> Result<LaurentPoly, Error> {
    if emb.genus() > 0 {
        return Err(Error::PositiveGenus(emb.genus()));
    }
    let n = d.crossing_count();
    let total_darts = 4 * n;
    // Precompute the dart gluings contributed by the arcs.
    let mut arc_pairs = vec![];
    for a in 1..=d.arc_count() {
        let [(c1, s1), (c2, s2)] = d.arc_slots(a);
        arc_pairs.push((4 * c1 + s1 as usize, 4 * c2 + s2 as usize));
    }
    let mut acc = LaurentPoly::zero();
    let delta = LaurentPoly::circle();
    for state in 0u64..(1u64 << n) {
        let mut parent: Vec<usize> = (0..total_darts).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(parent, a), find(parent, b));
            parent[ra] = rb;
        };
        for &(x, y) in &arc_pairs {
            union(&mut parent, x, y);
        }
        let mut exponent = 0i64;
        for c in 0..n {
            let base = 4 * c;
            if state >> c & 1 == 0 {
                exponent += 1; // A-smoothing
                union(&mut parent, base, base + 1);
                union(&mut parent, base + 2, base + 3);
            } else {
                exponent -= 1; // B-smoothing
                union(&mut parent, base + 1, base + 2);
                union(&mut parent, base + 3, base);
            }
        }
        let mut loops = 0u32;
        for x in 0..total_darts {
            if find(&mut parent, x) == x {
                loops += 1;
            }
        }
        acc = &acc + &delta.pow(loops - 1).mul_monomial(1, exponent);
    }
    Ok(acc)
}

/// Jones polynomial via the state-sum bracket and writhe normalization.
pub fn jones(d: &Diagram, emb: &Embedding) -> Result<HalfTLaurent, Error> {
    let bracket = bracket_state_sum(d, emb)?;
    let normalized = &LaurentPoly::neg_a_pow(-3 * d.writhe()) * &bracket;
    normalized.substitute_half_t()
}

/// The polynomial `ν` of a shading: writhe-normalized `τ` of its Tait
/// graph, as an element of `ℤ[t^±1/2]`. At genus 0 this equals the Jones
/// polynomial; the unordered pair over both shadings is a link invariant.
pub fn nu(d: &Diagram, emb: &Embedding, s: &Shading) -> Result<HalfTLaurent, Error> {
    let t = tait_graph(d, emb, s);
    let normalized = &LaurentPoly::neg_a_pow(-3 * d.writhe()) * &tau(&t.graph);
    normalized.substitute_half_t()
}

/// The determinant data of a checkerboard-colorable diagram.
#[derive(Debug, Clone)]
pub struct DeterminantSet {
    /// `{|det G|, |det G'|}` sorted ascending.
    pub values: [BigInt; 2],
    /// `|det G_s|` per shading index.
    pub det_by_shading: [BigInt; 2],
    /// `|ν_s(-1)|` per shading index.
    pub nu_modulus_by_shading: [BigInt; 2],
    /// Chromatic duality: `|ν_s(-1)| == |det G_{1-s}|` for both shadings.
    pub pairing_ok: bool,
}

/// Determinant set `{|det G|, |det G'|}` of the two shadings, cross-checked
/// against `|ν(-1)|` of the opposite Tait graph.
pub fn determinant_set(d: &Diagram, emb: &Embedding) -> Result<DeterminantSet, Error> {
    let (s0, s1) = checkerboard(d, emb)?;
    let mut dets = vec![];
    let mut nus = vec![];
    for s in [&s0, &s1] {
        let base = default_base(d, emb, s);
        let g = goeritz_from_diagram(d, emb, s, base)?;
        dets.push(g.determinant().abs());
        let v = nu(d, emb, s)?;
        nus.push(v.eval_minus_one().modulus_if_integer());
    }
    let pairing_ok = nus[0].as_ref() == Some(&dets[1]) && nus[1].as_ref() == Some(&dets[0]);
    let nu_mods: Vec<BigInt> = nus
        .into_iter()
        .map(|m| m.unwrap_or_else(|| BigInt::from(-1)))
        .collect();
    let mut values = [dets[0].clone(), dets[1].clone()];
    values.sort();
    Ok(DeterminantSet {
        values,
        det_by_shading: [dets[0].clone(), dets[1].clone()],
        nu_modulus_by_shading: [nu_mods[0].clone(), nu_mods[1].clone()],
        pairing_ok,
    })
}
