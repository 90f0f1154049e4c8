//! Reidemeister I and II move generation on PD diagrams.
//!
//! Both moves produce a diagram of the same link in the same ambient
//! surface: R1 inserts a kink on an arc, R2 pushes one arc over another
//! across a face they both bound.

use super::embedding::Embedding;
use super::Diagram;
use crate::error::Error;

/// Which side of the strand the R1 kink bulges to, relative to the
/// direction of travel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum R1Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// Insert a kink of the given writhe sign on the arc.
    R1 { arc: usize, side: R1Side, sign: i8 },
    /// Push `over_arc` across `face` over `under_arc`; both arcs must lie
    /// on the face's boundary.
    R2 { face: usize, over_arc: usize, under_arc: usize },
}

/// Renumber every label strictly greater than `threshold` upward by `by`.
fn shift_labels(code: &mut [[usize; 4]], threshold: usize, by: usize) {
    for record in code.iter_mut() {
        for slot in record.iter_mut() {
            if *slot > threshold {
                *slot += by;
            }
        }
    }
}

fn apply_r1(d: &Diagram, arc: usize, side: R1Side, sign: i8) -> Result<Diagram, Error> {
    if arc == 0 || arc > d.arc_count() {
        return Err(Error::BadMoveSite(format!("arc {} does not exist", arc)));
    }
    let head = d.head_of(arc);
    let mut code = d.pd_code();
    shift_labels(&mut code, arc, 2);
    // The strand now runs arc → arc+1 (kink loop) → arc+2; the old head
    // slot receives the final piece.
    code[head.0][head.1 as usize] = arc + 2;
    let x = arc;
    let kink = match (side, sign) {
        (R1Side::Left, 1) => [x, x + 2, x + 1, x + 1],
        (R1Side::Right, -1) => [x, x + 1, x + 1, x + 2],
        (R1Side::Right, 1) => [x + 1, x + 1, x + 2, x],
        (R1Side::Left, -1) => [x + 1, x, x + 2, x + 1],
        _ => return Err(Error::BadMoveSite(format!("kink sign {} is not ±1", sign))),
    };
    code.push(kink);
    Diagram::new(code)
}

fn apply_r2(
    d: &Diagram,
    emb: &Embedding,
    face: usize,
    over: usize,
    under: usize,
) -> Result<Diagram, Error> {
    if face >= emb.face_count() {
        return Err(Error::BadMoveSite(format!("face {} does not exist", face)));
    }
    if over == under {
        return Err(Error::BadMoveSite("the two arcs must be distinct".into()));
    }
    for a in [over, under] {
        if a == 0 || a > d.arc_count() {
            return Err(Error::BadMoveSite(format!("arc {} does not exist", a)));
        }
    }
    // Locate each arc's traversal in the face's boundary walk and record
    // whether the walk runs along or against the arc's orientation.
    let orient_on_face = |a: usize| -> Option<bool> {
        emb.faces()[face].darts.iter().find_map(|&dart| {
            let (c, s) = (dart / 4, (dart % 4) as u8);
            if d.crossings()[c].ends[s as usize] != a {
                return None;
            }
            Some(d.tail_of(a) == (c, s))
        })
    };
    let o_a = orient_on_face(over)
        .ok_or_else(|| Error::BadMoveSite(format!("arc {} is not on face {}", over, face)))?;
    let o_b = orient_on_face(under)
        .ok_or_else(|| Error::BadMoveSite(format!("arc {} is not on face {}", under, face)))?;

    let lo = over.min(under);
    let hi = over.max(under);
    let mut code = d.pd_code();
    let head_a = d.head_of(over);
    let head_b = d.head_of(under);
    for record in code.iter_mut() {
        for slot in record.iter_mut() {
            let mut v = *slot;
            if v > lo {
                v += 2;
            }
            if *slot > hi {
                v += 2;
            }
            *slot = v;
        }
    }
    let pa = if over < under { over } else { over + 2 };
    let pb = if under < over { under } else { under + 2 };
    code[head_a.0][head_a.1 as usize] = pa + 2;
    code[head_b.0][head_b.1 as usize] = pb + 2;

    // Model: the face is a disk whose boundary walk traverses `over` along
    // the top right-to-left and `under` along the bottom left-to-right. The
    // finger dips at the right crossing and returns at the left one;
    // counterclockwise end order at both crossings is [W, S, E, N] with the
    // over-strand on the S–N diagonal.
    let (tip_a, first_a, last_a) = (pa + 1, pa, pa + 2);
    let (mid_b, first_b, last_b) = (pb + 1, pb, pb + 2);
    let right_cross = [
        mid_b,                              // toward the left crossing
        if o_a { first_a } else { last_a },
        if o_b { last_b } else { first_b },
        tip_a,
    ];
    let left_cross = [
        if o_b { first_b } else { last_b },
        if o_a { last_a } else { first_a },
        mid_b,                              // toward the right crossing
        tip_a,
    ];
    // Start each record at the incoming under end: W when the under arc
    // runs with the walk, E against it.
    let rotate = |ends: [usize; 4], start: usize| -> [usize; 4] {
        [
            ends[start],
            ends[(start + 1) % 4],
            ends[(start + 2) % 4],
            ends[(start + 3) % 4],
        ]
    };
    let start = if o_b { 0 } else { 2 };
    code.push(rotate(right_cross, start));
    code.push(rotate(left_cross, start));
    Diagram::new(code)
}

/// Apply a Reidemeister move, yielding a diagram of the same link in the
/// same surface.
pub fn apply_move(d: &Diagram, emb: &Embedding, m: &Move) -> Result<Diagram, Error> {
    match *m {
        Move::R1 { arc, side, sign } => apply_r1(d, arc, side, sign),
        Move::R2 { face, over_arc, under_arc } => apply_r2(d, emb, face, over_arc, under_arc),
    }
}
