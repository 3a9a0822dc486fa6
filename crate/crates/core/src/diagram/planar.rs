use super::DiagramError;

/// Half-edge id: slot `s` of crossing `c` is `4 * c + s`.
///
/// Slots are numbered counterclockwise around each crossing. The same id
/// also names the corner lying between slot `s` and slot `s + 1`.
pub type Dart = usize;

pub(crate) fn dart(crossing: usize, slot: usize) -> Dart {
    4 * crossing + slot
}

pub(crate) fn crossing_of(d: Dart) -> usize {
    d / 4
}

pub(crate) fn slot_of(d: Dart) -> usize {
    d % 4
}

/// Rotates `d` by `k` quarter turns counterclockwise around its crossing.
pub(crate) fn rotate(d: Dart, k: usize) -> Dart {
    4 * (d / 4) + (d % 4 + k) % 4
}

/// Which pair of opposite slots carries the over-strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OverPair {
    /// Slots 0 and 2.
    Even,
    /// Slots 1 and 3.
    Odd,
}

impl OverPair {
    pub fn contains(self, slot: usize) -> bool {
        match self {
            OverPair::Even => slot % 2 == 0,
            OverPair::Odd => slot % 2 == 1,
        }
    }

    /// Lowest slot of the pair.
    pub fn first_slot(self) -> usize {
        match self {
            OverPair::Even => 0,
            OverPair::Odd => 1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            OverPair::Even => OverPair::Odd,
            OverPair::Odd => OverPair::Even,
        }
    }
}

/// A 4-valent planar diagram stored as a rotation system.
///
/// Crossing-free circles are only counted. A diagram with both crossings
/// and free circles is split and has no face structure here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    over: Vec<OverPair>,
    partner: Vec<Dart>,
    free_loops: usize,
    outer: Option<Dart>,
}

/// Face structure of a connected diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceMap {
    face_of_corner: Vec<usize>,
    faces: Vec<Vec<Dart>>,
    face_count: usize,
}

impl FaceMap {
    pub fn face_count(&self) -> usize {
        self.face_count
    }

    pub fn face_of_corner(&self, corner: Dart) -> usize {
        self.face_of_corner[corner]
    }

    /// Corners of `face` in walk order, starting from its lowest corner.
    pub fn corners(&self, face: usize) -> &[Dart] {
        self.faces.get(face).map(Vec::as_slice).unwrap_or(&[])
    }
}

impl PlanarDiagram {
    /// Assembles a diagram from its rotation data.
    ///
    /// `partner` must be a fixed-point-free involution on `0..4 * over.len()`.
    /// `outer` names a corner of the unbounded face; `None` picks corner 0.
    pub fn from_parts(
        over: Vec<OverPair>,
        partner: Vec<Dart>,
        free_loops: usize,
        outer: Option<Dart>,
    ) -> Result<Self, DiagramError> {
        let n = 4 * over.len();
        if partner.len() != n {
            return Err(DiagramError::BadPairing(format!(
                "{} darts but {} partners",
                n,
                partner.len()
            )));
        }
        for (d, &p) in partner.iter().enumerate() {
            if p >= n || p == d || partner[p] != d {
                return Err(DiagramError::BadPairing(format!(
                    "dart {d} is paired with {p}"
                )));
            }
        }
        if let Some(o) = outer {
            if o >= n {
                return Err(DiagramError::BadPairing(format!("outer corner {o} out of range")));
            }
        }
        let outer = if n == 0 { None } else { outer.or(Some(0)) };
        Ok(Self {
            over,
            partner,
            free_loops,
            outer,
        })
    }

    /// The crossingless diagram of the unknot.
    pub fn unknot() -> Self {
        Self {
            over: Vec::new(),
            partner: Vec::new(),
            free_loops: 1,
            outer: None,
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.over.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn over(&self, crossing: usize) -> OverPair {
        self.over[crossing]
    }

    pub fn partner(&self, d: Dart) -> Dart {
        self.partner[d]
    }

    pub(crate) fn partners(&self) -> &[Dart] {
        &self.partner
    }

    pub(crate) fn over_pairs(&self) -> &[OverPair] {
        &self.over
    }

    /// Corner designated as lying in the unbounded face.
    pub fn outer_corner(&self) -> Option<Dart> {
        self.outer
    }

    pub fn with_outer_corner(mut self, corner: Dart) -> Self {
        assert!(corner < self.partner.len());
        self.outer = Some(corner);
        self
    }

    pub fn edge_count(&self) -> usize {
        self.partner.len() / 2 + self.free_loops
    }

    /// Traces the strands. Each cycle lists the darts through which the
    /// traversal enters a crossing, starting from the lowest unvisited dart.
    pub fn strand_cycles(&self) -> Vec<Vec<Dart>> {
        let n = self.partner.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut d = start;
            loop {
                let out = rotate(d, 2);
                seen[d] = true;
                seen[out] = true;
                cycle.push(d);
                d = self.partner[out];
                if d == start {
                    break;
                }
                assert!(!seen[d], "strand trace revisited dart {d}");
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn component_count(&self) -> usize {
        self.strand_cycles().len() + self.free_loops
    }

    /// Walks the faces of the rotation system.
    ///
    /// Faces are numbered by their lowest corner, so face 0 holds corner 0.
    /// Fails unless the diagram is connected and `V - E + F = 2`.
    pub fn faces(&self) -> Result<FaceMap, DiagramError> {
        let v = self.crossing_count();
        if v == 0 {
            return Ok(FaceMap {
                face_of_corner: Vec::new(),
                faces: Vec::new(),
                face_count: self.free_loops + 1,
            });
        }
        if self.free_loops > 0 {
            return Err(DiagramError::Split);
        }
        let n = self.partner.len();
        let mut face_of_corner = vec![usize::MAX; n];
        let mut faces = Vec::new();
        for start in 0..n {
            if face_of_corner[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut corners = Vec::new();
            let mut c = start;
            loop {
                face_of_corner[c] = id;
                corners.push(c);
                c = self.partner[rotate(c, 1)];
                if c == start {
                    break;
                }
            }
            faces.push(corners);
        }
        if faces.len() != v + 2 {
            return Err(DiagramError::NotPlanar {
                crossings: v,
                faces: faces.len(),
            });
        }
        let face_count = faces.len();
        Ok(FaceMap {
            face_of_corner,
            faces,
            face_count,
        })
    }

    /// Mirror image: every crossing switched.
    pub fn crossing_switched(&self) -> Self {
        Self {
            over: self.over.iter().map(|o| o.flipped()).collect(),
            ..self.clone()
        }
    }
}
