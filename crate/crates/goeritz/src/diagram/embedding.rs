//! Faces, genus, and checkerboard shadings of a diagram's rotation system.

use super::Diagram;
use crate::error::Error;

/// One face of the embedded 4-valent graph.
///
/// `darts` is the boundary walk: dart `4c + s` means the walk leaves
/// crossing `c` along slot `s`. `corners` lists the `(crossing, quadrant)`
/// sectors the face occupies, sorted; quadrant `q` sits between slots `q`
/// and `q+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<usize>,
    pub corners: Vec<(usize, u8)>,
    pub arcs: Vec<usize>,
}

/// The face structure of a diagram: computed once, used by every
/// surface-level operation.
#[derive(Debug, Clone)]
pub struct Embedding {
    faces: Vec<Face>,
    face_of_dart: Vec<usize>,
    genus: usize,
}

fn opposite(d: &Diagram, dart: usize) -> usize {
    let (c, s) = (dart / 4, (dart % 4) as u8);
    let a = d.crossings()[c].ends[s as usize];
    let [p, q] = d.arc_slots(a);
    let (oc, os) = if p == (c, s) { q } else { p };
    4 * oc + os as usize
}

fn rotate(dart: usize) -> usize {
    4 * (dart / 4) + (dart % 4 + 1) % 4
}

impl Embedding {
    /// Trace all faces of the rotation system and compute the genus from
    /// `χ = crossings - arcs + faces`.
    pub fn new(d: &Diagram) -> Self {
        let n = d.crossing_count();
        let total = 4 * n;
        let mut face_of_dart = vec![usize::MAX; total];
        let mut orbits: Vec<Vec<usize>> = vec![];
        for start in 0..total {
            if face_of_dart[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut orbit = vec![];
            let mut dart = start;
            loop {
                face_of_dart[dart] = id;
                orbit.push(dart);
                dart = rotate(opposite(d, dart));
                if dart == start {
                    break;
                }
            }
            orbits.push(orbit);
        }
        let mut faces: Vec<Face> = orbits
            .into_iter()
            .map(|darts| {
                let mut corners: Vec<(usize, u8)> = darts
                    .iter()
                    .map(|&dd| {
                        let opp = opposite(d, dd);
                        (opp / 4, (opp % 4) as u8)
                    })
                    .collect();
                corners.sort_unstable();
                let mut arcs: Vec<usize> = darts
                    .iter()
                    .map(|&dd| d.crossings()[dd / 4].ends[dd % 4])
                    .collect();
                arcs.sort_unstable();
                Face { darts, corners, arcs }
            })
            .collect();
        // Canonical face order: by boundary arcs, then by corners. Distinct
        // faces have disjoint corner sets, so the order is total.
        let mut order: Vec<usize> = (0..faces.len()).collect();
        order.sort_by(|&a, &b| {
            faces[a]
                .arcs
                .cmp(&faces[b].arcs)
                .then_with(|| faces[a].corners.cmp(&faces[b].corners))
        });
        let mut relabel = vec![0; faces.len()];
        for (new, &old) in order.iter().enumerate() {
            relabel[old] = new;
        }
        for f in &mut face_of_dart {
            *f = relabel[*f];
        }
        let mut sorted = vec![
            Face { darts: vec![], corners: vec![], arcs: vec![] };
            faces.len()
        ];
        for (old, face) in faces.drain(..).enumerate() {
            sorted[relabel[old]] = face;
        }

        let f = sorted.len() as i64;
        let chi = n as i64 - 2 * n as i64 + f;
        debug_assert!(chi <= 2 && chi % 2 == 0);
        let genus = ((2 - chi) / 2) as usize;
        Embedding { faces: sorted, face_of_dart, genus }
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Face on the side of the dart `4c + s` (the walk that leaves `c` by
    /// slot `s` runs along that side of the arc).
    pub fn face_of_dart(&self, dart: usize) -> usize {
        self.face_of_dart[dart]
    }

    /// Face occupying quadrant `q` of crossing `c`.
    pub fn face_at_corner(&self, d: &Diagram, c: usize, q: u8) -> usize {
        self.face_of_dart[opposite(d, 4 * c + q as usize)]
    }

    /// The two faces on either side of arc `a`.
    pub fn faces_of_arc(&self, d: &Diagram, a: usize) -> (usize, usize) {
        let [(c1, s1), (c2, s2)] = d.arc_slots(a);
        (
            self.face_of_dart[4 * c1 + s1 as usize],
            self.face_of_dart[4 * c2 + s2 as usize],
        )
    }

    /// The face to the left of arc `a`, looking along its orientation.
    pub fn left_face_of_arc(&self, d: &Diagram, a: usize) -> usize {
        let (c, s) = d.tail_of(a);
        self.face_at_corner(d, c, s)
    }

    /// Corners of face `f` in boundary-walk order (one per boundary dart).
    pub fn walk_corners(&self, d: &Diagram, f: usize) -> Vec<(usize, u8)> {
        self.faces[f]
            .darts
            .iter()
            .map(|&dart| {
                let opp = opposite(d, dart);
                (opp / 4, (opp % 4) as u8)
            })
            .collect()
    }
}

/// A checkerboard shading: a 2-coloring of the faces. The shaded (black)
/// faces form the checkerboard surface the shading denotes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shading {
    black: Vec<bool>,
}

impl Shading {
    pub fn is_black(&self, face: usize) -> bool {
        self.black[face]
    }

    pub fn black_faces(&self) -> Vec<usize> {
        (0..self.black.len()).filter(|&f| self.black[f]).collect()
    }

    pub fn white_faces(&self) -> Vec<usize> {
        (0..self.black.len()).filter(|&f| !self.black[f]).collect()
    }

    pub fn complement(&self) -> Shading {
        Shading { black: self.black.iter().map(|&b| !b).collect() }
    }

    /// The two quadrants of crossing `c` this shading blackens: `(1, 3)` or
    /// `(0, 2)`.
    pub fn black_quadrants(&self, d: &Diagram, emb: &Embedding, c: usize) -> (u8, u8) {
        if self.black[emb.face_at_corner(d, c, 1)] {
            (1, 3)
        } else {
            (0, 2)
        }
    }

    /// Goeritz/Tait sign of crossing `c` for this shading: +1 when the
    /// shaded quadrant pair is the one swept from the over-strand, i.e. the
    /// `{1, 3}` pair.
    pub fn crossing_sign(&self, d: &Diagram, emb: &Embedding, c: usize) -> i8 {
        if self.black[emb.face_at_corner(d, c, 1)] {
            1
        } else {
            -1
        }
    }

    /// A crossing is nugatory for this shading's surface exactly when its
    /// two white quadrants lie in the same region.
    pub fn is_nugatory(&self, d: &Diagram, emb: &Embedding, c: usize) -> bool {
        let (b1, _) = self.black_quadrants(d, emb, c);
        let (w1, w2) = if b1 == 1 { (0, 2) } else { (1, 3) };
        emb.face_at_corner(d, c, w1) == emb.face_at_corner(d, c, w2)
    }
}

/// The two complementary checkerboard shadings, or an error when the
/// face-adjacency graph has an odd cycle (impossible at genus 0).
///
/// Deterministic: the face containing arc 1 on its left is white in the
/// first returned shading.
pub fn checkerboard(d: &Diagram, emb: &Embedding) -> Result<(Shading, Shading), Error> {
    let f = emb.face_count();
    let mut color: Vec<Option<bool>> = vec![None; f];
    let seed = emb.left_face_of_arc(d, 1);
    color[seed] = Some(false); // white
    let mut stack = vec![seed];
    while let Some(face) = stack.pop() {
        let c = color[face].unwrap();
        for a in 1..=d.arc_count() {
            let (f1, f2) = emb.faces_of_arc(d, a);
            let other = if f1 == face {
                f2
            } else if f2 == face {
                f1
            } else {
                continue;
            };
            match color[other] {
                None => {
                    color[other] = Some(!c);
                    stack.push(other);
                }
                Some(oc) if oc == c => return Err(Error::NotCheckerboardColorable),
                _ => {}
            }
        }
    }
    // A connected diagram has a connected face-adjacency graph.
    debug_assert!(color.iter().all(|c| c.is_some()));
    let first = Shading { black: color.iter().map(|c| c.unwrap()).collect() };
    let second = first.complement();
    Ok((first, second))
}
