//! The medial construction: from an embedded signed multigraph to a link
//! diagram whose Tait graph it is.
//!
//! The graph is fattened into a ribbon surface and a half-twist is inserted
//! in each edge band, twisting by the edge sign; the boundary projects to a
//! diagram with one crossing per edge. The black faces of the resulting
//! checkerboard coloring are the vertex disks.

use super::Diagram;
use crate::error::Error;
use crate::graph::SignedMultigraph;

/// Result of the medial construction: the diagram plus the provenance data
/// identifying each graph vertex's disk face.
#[derive(Debug, Clone)]
pub struct MedialDiagram {
    pub diagram: Diagram,
    /// Crossing `e` realizes edge `e` of the input graph.
    pub crossing_of_edge: Vec<usize>,
    /// A `(crossing, quadrant)` corner lying in the disk face of vertex `v`.
    pub disk_corner_of_vertex: Vec<(usize, u8)>,
}

// Strand ends at the crossing of edge e: L/R side of each half-edge.
fn left(e: usize, end: u8) -> usize {
    4 * e + 2 * end as usize
}
fn right(e: usize, end: u8) -> usize {
    4 * e + 2 * end as usize + 1
}

/// Build the medial diagram of a connected graph with a rotation system.
pub fn medial(g: &SignedMultigraph) -> Result<MedialDiagram, Error> {
    let rotation = g.rotation().ok_or(Error::NoRotation)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let n = g.edge_count();

    // Corner segments around each vertex: right(d_i) — left(d_{i+1}).
    // These are the arcs of the diagram; `segment_at_end[x]` locates the
    // unique segment endpoint occupying strand end x.
    let mut segments: Vec<(usize, usize)> = vec![];
    let mut segment_at_end: Vec<usize> = vec![usize::MAX; 4 * n];
    for darts in rotation {
        let k = darts.len();
        for i in 0..k {
            let (e1, end1) = darts[i];
            let (e2, end2) = darts[(i + 1) % k];
            let from = right(e1, end1);
            let to = left(e2, end2);
            segment_at_end[from] = segments.len();
            segment_at_end[to] = segments.len();
            segments.push((from, to));
        }
    }
    debug_assert!(segment_at_end.iter().all(|&s| s != usize::MAX));

    // Within the crossing of edge e the two strands connect like sides of a
    // half-twisted band: left-to-left and right-to-right.
    let strand_partner = |x: usize| -> usize {
        let e = x / 4;
        let rem = x % 4;
        4 * e + (rem + 2) % 4
    };

    // Trace the boundary curves, labeling segments with consecutive arc
    // numbers per component.
    let mut arc_of_segment: Vec<usize> = vec![0; segments.len()];
    let mut head_end_of_segment: Vec<usize> = vec![usize::MAX; segments.len()];
    let mut next_arc = 1usize;
    for start_seg in 0..segments.len() {
        if arc_of_segment[start_seg] != 0 {
            continue;
        }
        // Traverse the starting segment from its `from` endpoint to `to`.
        let mut seg = start_seg;
        let mut head = segments[start_seg].1;
        loop {
            arc_of_segment[seg] = next_arc;
            head_end_of_segment[seg] = head;
            next_arc += 1;
            // Pass through the crossing at the head end.
            let out = strand_partner(head);
            let next_seg = segment_at_end[out];
            let (from, to) = segments[next_seg];
            let next_head = if from == out { to } else { from };
            if next_seg == start_seg {
                break;
            }
            seg = next_seg;
            head = next_head;
        }
    }

    // Emit one crossing per edge. Counterclockwise end order around the
    // crossing of edge e (darts d0 at u, d1 at v):
    //   [right(d1), left(d0), right(d0), left(d1)]
    // For sign +1 the over-strand is the left–left diagonal, for -1 the
    // right–right one; the record starts at the incoming under end.
    let mut code: Vec<[usize; 4]> = Vec::with_capacity(n);
    let mut rotation_applied = vec![0usize; n];
    for (e, edge) in g.edges().iter().enumerate() {
        let ccw = [right(e, 1), left(e, 0), right(e, 0), left(e, 1)];
        let under_positions: [usize; 2] = if edge.sign > 0 { [0, 2] } else { [1, 3] };
        let is_head = |x: usize| head_end_of_segment[segment_at_end[x]] == x;
        let under_in_pos = under_positions
            .into_iter()
            .find(|&p| is_head(ccw[p]))
            .expect("one under end is incoming");
        rotation_applied[e] = under_in_pos;
        let mut record = [0usize; 4];
        for k in 0..4 {
            let end = ccw[(k + under_in_pos) % 4];
            record[k] = arc_of_segment[segment_at_end[end]];
        }
        code.push(record);
    }
    let diagram = Diagram::new(code)?;

    // The disk corner of vertex u, via its first rotation dart (e, end):
    // the quadrant between left(e, end) and right(e, end), which sits at
    // pre-rotation position 1 for end 0 and position 3 for end 1.
    let mut disk_corner_of_vertex = Vec::with_capacity(g.vertex_count());
    for darts in rotation {
        let &(e, end) = darts
            .first()
            .expect("connected graph with an edge has no bare vertex");
        let pre = if end == 0 { 1u8 } else { 3u8 };
        let q = (pre as i64 - rotation_applied[e] as i64).rem_euclid(4) as u8;
        disk_corner_of_vertex.push((e, q));
    }

    Ok(MedialDiagram {
        diagram,
        crossing_of_edge: (0..n).collect(),
        disk_corner_of_vertex,
    })
}

#[cfg(test)]
mod tests {
    use super::super::embedding::{checkerboard, Embedding};
    use super::super::invariants::{bracket_state_sum, tait_graph};
    use super::*;
    use crate::graph::tau;
    use crate::laurent::LaurentPoly;

    fn medial_of(n: usize, edges: &[(usize, usize, i8)]) -> MedialDiagram {
        let g = SignedMultigraph::new(n, edges.to_vec())
            .unwrap()
            .with_sorted_rotation();
        medial(&g).unwrap()
    }

    #[test]
    fn positive_loop_gives_positive_kink() {
        let m = medial_of(1, &[(0, 0, 1)]);
        let d = &m.diagram;
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.writhe(), 1);
        let emb = Embedding::new(d);
        assert_eq!(emb.genus(), 0);
        assert_eq!(
            bracket_state_sum(d, &emb).unwrap(),
            LaurentPoly::monomial(-1, 3)
        );
    }

    #[test]
    fn theta_gives_trefoil() {
        // Planar embedding of the theta graph: the cyclic order of the
        // parallel bands reverses at the far vertex.
        let g = SignedMultigraph::new(2, vec![(0, 1, 1), (0, 1, 1), (0, 1, 1)])
            .unwrap()
            .with_rotation(vec![
                vec![(0, 0), (1, 0), (2, 0)],
                vec![(2, 1), (1, 1), (0, 1)],
            ])
            .unwrap();
        let m = medial(&g).unwrap();
        let d = &m.diagram;
        let emb = Embedding::new(d);
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(emb.genus(), 0);
        assert_eq!(
            bracket_state_sum(d, &emb).unwrap(),
            LaurentPoly::from_terms(&[(7, 1), (3, -1), (-5, -1)])
        );
    }

    #[test]
    fn sorted_rotation_of_theta_is_toroidal() {
        // The same-order rotation at both endpoints embeds the theta graph
        // in the torus; the medial still round-trips, on that surface.
        let m = medial_of(2, &[(0, 1, 1), (0, 1, 1), (0, 1, 1)]);
        let emb = Embedding::new(&m.diagram);
        assert_eq!(emb.genus(), 1);
    }

    #[test]
    fn interleaved_loops_give_genus_one() {
        let g = SignedMultigraph::new(1, vec![(0, 0, 1), (0, 0, 1)])
            .unwrap()
            .with_rotation(vec![vec![(0, 0), (1, 0), (0, 1), (1, 1)]])
            .unwrap();
        let m = medial(&g).unwrap();
        let emb = Embedding::new(&m.diagram);
        assert_eq!(m.diagram.crossing_count(), 2);
        assert_eq!(emb.face_count(), 2);
        assert_eq!(emb.genus(), 1);
    }

    #[test]
    fn medial_errors() {
        let no_rot = SignedMultigraph::new(1, vec![(0, 0, 1)]).unwrap();
        assert_eq!(medial(&no_rot).err(), Some(Error::NoRotation));
        let split = SignedMultigraph::new(2, vec![(0, 0, 1)])
            .unwrap()
            .with_sorted_rotation();
        assert_eq!(medial(&split).err(), Some(Error::Disconnected));
        let bare = SignedMultigraph::new(1, vec![]).unwrap().with_sorted_rotation();
        assert_eq!(medial(&bare).err(), Some(Error::EmptyGraph));
    }

    #[test]
    fn tait_round_trip_on_small_graphs() {
        let cases: Vec<(usize, Vec<(usize, usize, i8)>)> = vec![
            (1, vec![(0, 0, 1)]),
            (1, vec![(0, 0, -1)]),
            (2, vec![(0, 1, 1), (0, 1, 1), (0, 1, 1)]),
            (2, vec![(0, 1, 1), (0, 1, -1), (0, 1, 1)]),
            (3, vec![(0, 1, 1), (1, 2, -1), (0, 2, 1)]),
            (3, vec![(0, 1, 1), (1, 2, -1), (0, 2, 1), (1, 1, -1)]),
        ];
        for (n, edges) in cases {
            let g = SignedMultigraph::new(n, edges.clone())
                .unwrap()
                .with_sorted_rotation();
            let m = medial(&g).unwrap();
            let emb = Embedding::new(&m.diagram);
            let (s0, s1) = checkerboard(&m.diagram, &emb).unwrap();
            // The black shading is the one whose faces are the vertex disks.
            let disk0 = emb.face_at_corner(
                &m.diagram,
                m.disk_corner_of_vertex[0].0,
                m.disk_corner_of_vertex[0].1,
            );
            let black = if s0.is_black(disk0) { &s0 } else { &s1 };
            let t = tait_graph(&m.diagram, &emb, black);
            assert_eq!(t.graph.vertex_count(), n, "edges {:?}", edges);
            // Vertex bijection via disk faces, then exact multiset equality.
            let mut relabel = vec![usize::MAX; n];
            for (v, &(c, q)) in m.disk_corner_of_vertex.iter().enumerate() {
                let f = emb.face_at_corner(&m.diagram, c, q);
                let idx = t
                    .vertex_faces
                    .iter()
                    .position(|&vf| vf == f)
                    .expect("disk face is a tait vertex");
                relabel[idx] = v;
            }
            let mapped: Vec<(usize, usize, i8)> = t
                .graph
                .edges()
                .iter()
                .map(|e| {
                    let (a, b) = (relabel[e.u], relabel[e.v]);
                    (a.min(b), a.max(b), e.sign)
                })
                .collect();
            let mut mapped = mapped;
            mapped.sort_unstable();
            assert_eq!(mapped, g.edge_multiset(), "edges {:?}", edges);
            // And the bracket agrees with τ of the graph (genus 0 cases).
            if emb.genus() == 0 {
                assert_eq!(bracket_state_sum(&m.diagram, &emb).unwrap(), tau(&g));
            }
        }
    }
}
