use std::collections::VecDeque;

use super::orient::OrientedDiagram;
use super::planar::{dart, rotate, FaceMap, PlanarDiagram};
use super::DiagramError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn other(self) -> Self {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// Checkerboard coloring with the white faces listed as `X_0 … X_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDiagram {
    diagram: PlanarDiagram,
    faces: FaceMap,
    colors: Vec<Color>,
    white: Vec<usize>,
}

impl ColoredDiagram {
    pub fn diagram(&self) -> &PlanarDiagram {
        &self.diagram
    }

    pub fn faces(&self) -> &FaceMap {
        &self.faces
    }

    pub fn face_color(&self, face: usize) -> Color {
        self.colors[face]
    }

    /// Face ids of the white regions in increasing order; `X_0` comes first.
    pub fn white_faces(&self) -> &[usize] {
        &self.white
    }

    pub fn corner_color(&self, corner: usize) -> Color {
        self.colors[self.faces.face_of_corner(corner)]
    }

    /// The opposite coloring. The exterior turns white.
    pub fn swapped(&self) -> Self {
        let colors: Vec<Color> = self.colors.iter().map(|c| c.other()).collect();
        let white = white_list(&colors);
        Self {
            diagram: self.diagram.clone(),
            faces: self.faces.clone(),
            colors,
            white,
        }
    }

    /// `η(C)`: `+1` when the corners swept by turning the over-strand
    /// clockwise are white.
    pub fn eta(&self, crossing: usize) -> i64 {
        let o = self.diagram.over(crossing).first_slot();
        match self.corner_color(dart(crossing, (o + 3) % 4)) {
            Color::White => 1,
            Color::Black => -1,
        }
    }

    /// The two white corners of `crossing`, as face ids.
    pub fn white_faces_at(&self, crossing: usize) -> (usize, usize) {
        let s = if self.corner_color(dart(crossing, 0)) == Color::White {
            0
        } else {
            1
        };
        (
            self.faces.face_of_corner(dart(crossing, s)),
            self.faces.face_of_corner(dart(crossing, s + 2)),
        )
    }
}

fn white_list(colors: &[Color]) -> Vec<usize> {
    colors
        .iter()
        .enumerate()
        .filter(|(_, c)| **c == Color::White)
        .map(|(i, _)| i)
        .collect()
}

/// Two-colors the faces with the unbounded face black.
pub fn checkerboard(diagram: &PlanarDiagram) -> Result<ColoredDiagram, DiagramError> {
    let faces = diagram.faces()?;
    let n = faces.face_count();
    if diagram.crossing_count() == 0 {
        // Nested circles alternate colors outward from the exterior.
        let colors: Vec<Color> = (0..n)
            .map(|i| if i % 2 == 0 { Color::Black } else { Color::White })
            .collect();
        let white = white_list(&colors);
        return Ok(ColoredDiagram {
            diagram: diagram.clone(),
            faces,
            colors,
            white,
        });
    }
    // Faces on the two sides of a slot must differ.
    let mut adjacent = vec![Vec::new(); n];
    for d in 0..4 * diagram.crossing_count() {
        let a = faces.face_of_corner(d);
        let b = faces.face_of_corner(rotate(d, 3));
        adjacent[a].push(b);
        adjacent[b].push(a);
    }
    let outer = faces.face_of_corner(diagram.outer_corner().unwrap_or(0));
    let mut colors: Vec<Option<Color>> = vec![None; n];
    colors[outer] = Some(Color::Black);
    let mut queue = VecDeque::from([outer]);
    while let Some(f) = queue.pop_front() {
        let want = colors[f].expect("queued faces are colored").other();
        for &g in &adjacent[f] {
            match colors[g] {
                None => {
                    colors[g] = Some(want);
                    queue.push_back(g);
                }
                Some(c) if c != want => return Err(DiagramError::NotCheckerboard),
                Some(_) => {}
            }
        }
    }
    let colors = colors
        .into_iter()
        .map(|c| c.ok_or(DiagramError::NotCheckerboard))
        .collect::<Result<Vec<_>, _>>()?;
    let white = white_list(&colors);
    Ok(ColoredDiagram {
        diagram: diagram.clone(),
        faces,
        colors,
        white,
    })
}

/// Orientation class of a crossing, ignoring over and under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrossingKind {
    /// The oriented smoothing joins the two black corners.
    TypeI,
    /// The oriented smoothing joins the two white corners.
    TypeII,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingInfo {
    pub eta: i64,
    pub kind: CrossingKind,
    pub sign: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingStats {
    pub crossings: Vec<CrossingInfo>,
}

impl CrossingStats {
    /// `μ_I`, the sum of `η` over type I crossings.
    pub fn mu_one(&self) -> i64 {
        self.sum_eta(CrossingKind::TypeI)
    }

    /// `μ_II`, the sum of `η` over type II crossings.
    pub fn mu_two(&self) -> i64 {
        self.sum_eta(CrossingKind::TypeII)
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign).sum()
    }

    fn sum_eta(&self, kind: CrossingKind) -> i64 {
        self.crossings
            .iter()
            .filter(|c| c.kind == kind)
            .map(|c| c.eta)
            .sum()
    }
}

/// Classifies every crossing by `η`, orientation type and sign.
///
/// The oriented smoothing merges the corner between the two incoming darts
/// with the corner between the two outgoing ones. A crossing is type II when
/// those merged corners are black.
pub fn crossing_stats(oriented: &OrientedDiagram, colored: &ColoredDiagram) -> CrossingStats {
    assert_eq!(
        oriented.diagram(),
        colored.diagram(),
        "orientation and coloring must describe one diagram"
    );
    let crossings = (0..oriented.crossing_count())
        .map(|c| {
            let u = oriented.under_in(c);
            let v = oriented.over_in(c);
            let between_incoming = if (u + 1) % 4 == v { u } else { v };
            let kind = match colored.corner_color(dart(c, between_incoming)) {
                Color::Black => CrossingKind::TypeII,
                Color::White => CrossingKind::TypeI,
            };
            CrossingInfo {
                eta: colored.eta(c),
                kind,
                sign: oriented.sign(c),
            }
        })
        .collect();
    CrossingStats { crossings }
}
