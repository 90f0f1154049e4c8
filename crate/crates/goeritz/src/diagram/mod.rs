//! PD-coded link diagrams in closed orientable surfaces.
//!
//! A crossing record lists its four arc labels in counterclockwise cyclic
//! order starting at the incoming under-strand; that cyclic order *is* the
//! rotation system, so the diagram determines its ambient surface. Arc
//! labels `1..2n` each appear exactly twice, numbered consecutively along
//! each component, which fixes the orientation.

mod embedding;
mod invariants;
mod medial;
mod moves;

pub use embedding::{checkerboard, Embedding, Face, Shading};
pub use invariants::{
    bracket_state_sum, crossing_types_and_euler, default_base, determinant_set,
    goeritz_from_diagram, goeritz_from_graph_route_check, goeritz_with_regions, jones, nu,
    tait_graph, writhe_data, CrossingType, DeterminantSet, TaitGraph, WritheData,
};
pub use medial::{medial, MedialDiagram};
pub use moves::{apply_move, Move, R1Side};

use crate::error::Error;
use serde::{Deserialize, Serialize};

/// One crossing: four arc labels counterclockwise from the incoming
/// under-strand. Slots 0 and 2 are the under-strand (in, out); slots 1 and
/// 3 carry the over-strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub ends: [usize; 4],
}

/// A validated link diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    /// For each arc `a` (1-based), the two `(crossing, slot)` occurrences.
    arc_slots: Vec<[(usize, u8); 2]>,
    /// Successor arc along the orientation.
    succ: Vec<usize>,
    /// Where each arc terminates (its head) and originates (its tail).
    head: Vec<(usize, u8)>,
    tail: Vec<(usize, u8)>,
    /// `true` when the over-strand of crossing `c` runs slot 3 → slot 1.
    over_in_at_3: Vec<bool>,
    /// Arcs of each component, in traversal order starting at the smallest.
    components: Vec<Vec<usize>>,
}

impl Diagram {
    /// Validate and index a PD code.
    pub fn new(code: Vec<[usize; 4]>) -> Result<Self, Error> {
        if code.is_empty() {
            return Err(Error::BadArcLabels("diagram has no crossings".into()));
        }
        let n = code.len();
        let arc_max = 2 * n;
        let mut occurrences: Vec<Vec<(usize, u8)>> = vec![vec![]; arc_max + 1];
        for (c, record) in code.iter().enumerate() {
            for (s, &a) in record.iter().enumerate() {
                if a == 0 || a > arc_max {
                    return Err(Error::BadArcLabels(format!(
                        "arc label {} outside 1..{}",
                        a, arc_max
                    )));
                }
                occurrences[a].push((c, s as u8));
            }
        }
        let mut arc_slots = Vec::with_capacity(arc_max);
        for a in 1..=arc_max {
            match occurrences[a].as_slice() {
                [p, q] => arc_slots.push([*p, *q]),
                other => {
                    return Err(Error::BadArcLabels(format!(
                        "arc {} appears {} times, expected 2",
                        a,
                        other.len()
                    )))
                }
            }
        }
        let crossings: Vec<Crossing> = code.iter().map(|&ends| Crossing { ends }).collect();

        // Orientation: assign each arc a head (where it enters a crossing)
        // and a tail (where it leaves one). Under-strands are forced; the
        // over-strand direction is propagated, falling back on consecutive
        // numbering where both choices stay locally available.
        let mut head: Vec<Option<(usize, u8)>> = vec![None; arc_max + 1];
        let mut tail: Vec<Option<(usize, u8)>> = vec![None; arc_max + 1];
        let mut succ: Vec<Option<usize>> = vec![None; arc_max + 1];
        let assign = |head_arc: usize,
                          hpos: (usize, u8),
                          tail_arc: usize,
                          tpos: (usize, u8),
                          head: &mut Vec<Option<(usize, u8)>>,
                          tail: &mut Vec<Option<(usize, u8)>>,
                          succ: &mut Vec<Option<usize>>|
         -> Result<(), Error> {
            if head[head_arc].is_some() {
                return Err(Error::BadNumbering(format!(
                    "arc {} enters two crossings",
                    head_arc
                )));
            }
            if tail[tail_arc].is_some() {
                return Err(Error::BadNumbering(format!(
                    "arc {} leaves two crossings",
                    tail_arc
                )));
            }
            head[head_arc] = Some(hpos);
            tail[tail_arc] = Some(tpos);
            succ[head_arc] = Some(tail_arc);
            Ok(())
        };
        for (c, record) in code.iter().enumerate() {
            assign(
                record[0],
                (c, 0),
                record[2],
                (c, 2),
                &mut head,
                &mut tail,
                &mut succ,
            )?;
        }
        let mut over_in_at_3: Vec<Option<bool>> = vec![None; n];
        let mut progress = true;
        while progress {
            progress = false;
            for (c, record) in code.iter().enumerate() {
                if over_in_at_3[c].is_some() {
                    continue;
                }
                let (x, y) = (record[1], record[3]);
                // option A: over runs 1 → 3 (x enters, y leaves)
                let a_ok = head[x].is_none() && tail[y].is_none();
                // option B: over runs 3 → 1 (y enters, x leaves)
                let b_ok = head[y].is_none() && tail[x].is_none();
                let choice = match (a_ok, b_ok) {
                    (true, true) => continue, // still ambiguous
                    (true, false) => false,
                    (false, true) => true,
                    (false, false) => {
                        return Err(Error::BadNumbering(format!(
                            "over-strand of crossing {} admits no consistent direction",
                            c
                        )))
                    }
                };
                let (hin, hout) = if choice { (y, x) } else { (x, y) };
                let (hs, ts) = if choice { (3u8, 1u8) } else { (1u8, 3u8) };
                assign(hin, (c, hs), hout, (c, ts), &mut head, &mut tail, &mut succ)?;
                over_in_at_3[c] = Some(choice);
                progress = true;
            }
            if !progress {
                // Resolve one still-ambiguous crossing by numbering and
                // re-propagate: consecutive labels flow forward; otherwise
                // the larger label wraps to the smaller.
                if let Some(c) = (0..n).find(|&c| over_in_at_3[c].is_none()) {
                    let (x, y) = (code[c][1], code[c][3]);
                    let choice = if x == y || y == x + 1 {
                        false // degenerate or consecutive: 1 → 3
                    } else if x == y + 1 {
                        true // 3 → 1
                    } else {
                        // non-consecutive: this passage is the wrap, which
                        // runs from the component's largest label to its
                        // smallest
                        y > x
                    };
                    let (hin, hout) = if choice { (y, x) } else { (x, y) };
                    let (hs, ts) = if choice { (3u8, 1u8) } else { (1u8, 3u8) };
                    assign(hin, (c, hs), hout, (c, ts), &mut head, &mut tail, &mut succ)?;
                    over_in_at_3[c] = Some(choice);
                    progress = true;
                }
            }
        }

        let succ: Vec<usize> = (0..=arc_max)
            .map(|a| if a == 0 { 0 } else { succ[a].unwrap() })
            .collect();
        let head: Vec<(usize, u8)> = (1..=arc_max).map(|a| head[a].unwrap()).collect();
        let tail: Vec<(usize, u8)> = (1..=arc_max).map(|a| tail[a].unwrap()).collect();
        let over_in_at_3: Vec<bool> = over_in_at_3.into_iter().map(|o| o.unwrap()).collect();

        // Trace components; each must be numbered consecutively with a
        // single wrap from its largest arc back to its smallest.
        let mut seen = vec![false; arc_max + 1];
        let mut components = vec![];
        for start in 1..=arc_max {
            if seen[start] {
                continue;
            }
            let mut comp = vec![];
            let mut a = start;
            loop {
                if seen[a] {
                    return Err(Error::BadNumbering(format!(
                        "arc {} revisited while tracing a component",
                        a
                    )));
                }
                seen[a] = true;
                comp.push(a);
                a = succ[a];
                if a == start {
                    break;
                }
            }
            let lo = *comp.iter().min().unwrap();
            let hi = *comp.iter().max().unwrap();
            if hi - lo + 1 != comp.len() {
                return Err(Error::BadNumbering(format!(
                    "component starting at arc {} is not consecutively numbered",
                    start
                )));
            }
            for w in comp.windows(2) {
                if w[1] != w[0] + 1 {
                    return Err(Error::BadNumbering(format!(
                        "arc {} is followed by {}, expected {}",
                        w[0],
                        w[1],
                        w[0] + 1
                    )));
                }
            }
            components.push(comp);
        }

        // Connectivity of the underlying 4-valent graph.
        let mut reached = vec![false; n];
        let mut stack = vec![0usize];
        reached[0] = true;
        while let Some(c) = stack.pop() {
            for &a in &code[c] {
                for &(c2, _) in &arc_slots[a - 1] {
                    if !reached[c2] {
                        reached[c2] = true;
                        stack.push(c2);
                    }
                }
            }
        }
        if !reached.iter().all(|&r| r) {
            return Err(Error::SplitDiagram);
        }

        Ok(Diagram {
            crossings,
            arc_slots,
            succ,
            head,
            tail,
            over_in_at_3,
            components,
        })
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// The arc following `a` along its component.
    pub fn successor(&self, a: usize) -> usize {
        self.succ[a]
    }

    /// Where arc `a` terminates.
    pub fn head_of(&self, a: usize) -> (usize, u8) {
        self.head[a - 1]
    }

    /// Where arc `a` originates.
    pub fn tail_of(&self, a: usize) -> (usize, u8) {
        self.tail[a - 1]
    }

    /// Both `(crossing, slot)` occurrences of arc `a`.
    pub fn arc_slots(&self, a: usize) -> [(usize, u8); 2] {
        self.arc_slots[a - 1]
    }

    /// True when the over-strand of crossing `c` runs slot 3 → slot 1.
    pub fn over_enters_at_3(&self, c: usize) -> bool {
        self.over_in_at_3[c]
    }

    /// Writhe sign of crossing `c`: +1 exactly when the over-strand enters
    /// at slot 3.
    pub fn crossing_sign(&self, c: usize) -> i8 {
        if self.over_in_at_3[c] {
            1
        } else {
            -1
        }
    }

    /// Total writhe.
    pub fn writhe(&self) -> i64 {
        (0..self.crossing_count())
            .map(|c| self.crossing_sign(c) as i64)
            .sum()
    }

    pub fn pd_code(&self) -> Vec<[usize; 4]> {
        self.crossings.iter().map(|c| c.ends).collect()
    }
}

/// JSON form `{"pd": [[a, b, c, d], ...]}`.
#[derive(Serialize, Deserialize)]
pub struct PdJson {
    pub pd: Vec<[usize; 4]>,
}

impl Diagram {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let parsed: PdJson =
            serde_json::from_str(text).map_err(|e| Error::BadInput(e.to_string()))?;
        Diagram::new(parsed.pd)
    }

    pub fn to_json(&self) -> PdJson {
        PdJson { pd: self.pd_code() }
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::Diagram;

    pub fn trefoil() -> Diagram {
        Diagram::new(vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap()
    }

    pub fn kink() -> Diagram {
        Diagram::new(vec![[1, 2, 2, 1]]).unwrap()
    }

    pub fn positive_kink() -> Diagram {
        Diagram::new(vec![[1, 1, 2, 2]]).unwrap()
    }

    pub fn figure_eight() -> Diagram {
        Diagram::new(vec![[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]]).unwrap()
    }

    pub fn hopf() -> Diagram {
        Diagram::new(vec![[1, 4, 2, 3], [4, 1, 3, 2]]).unwrap()
    }

    pub fn five_two() -> Diagram {
        Diagram::new(vec![
            [1, 4, 2, 5],
            [3, 8, 4, 9],
            [5, 10, 6, 1],
            [9, 6, 10, 7],
            [7, 2, 8, 3],
        ])
        .unwrap()
    }

    pub fn nugatory_sum() -> Diagram {
        Diagram::new(vec![[1, 4, 2, 5], [3, 8, 4, 1], [5, 2, 6, 3], [6, 8, 7, 7]]).unwrap()
    }

    pub fn torus_medial() -> Diagram {
        Diagram::new(vec![[4, 1, 3, 2], [2, 4, 1, 3]]).unwrap()
    }

    pub fn torus_noncolorable() -> Diagram {
        Diagram::new(vec![[1, 3, 2, 4], [2, 4, 3, 1]]).unwrap()
    }
}
