use super::planar::{crossing_of, dart, rotate, slot_of, Dart, PlanarDiagram};
use super::DiagramError;

/// A knot diagram with a direction on every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedDiagram {
    diagram: PlanarDiagram,
    incoming: Vec<bool>,
}

impl OrientedDiagram {
    /// Checks that each crossing has one incoming dart per strand and that
    /// every edge runs from an outgoing dart into an incoming one.
    pub fn new(diagram: PlanarDiagram, incoming: Vec<bool>) -> Result<Self, DiagramError> {
        if incoming.len() != diagram.partners().len() {
            return Err(DiagramError::InconsistentOrientation(
                "orientation length mismatch".into(),
            ));
        }
        for d in 0..incoming.len() {
            if incoming[d] == incoming[rotate(d, 2)] {
                return Err(DiagramError::InconsistentOrientation(format!(
                    "crossing {} slot {} and its opposite agree",
                    crossing_of(d),
                    slot_of(d)
                )));
            }
            if incoming[d] == incoming[diagram.partner(d)] {
                return Err(DiagramError::InconsistentOrientation(format!(
                    "edge at crossing {} slot {} is not directed",
                    crossing_of(d),
                    slot_of(d)
                )));
            }
        }
        let components = diagram.component_count();
        if components != 1 {
            return Err(DiagramError::LinkNotKnot { components });
        }
        Ok(Self { diagram, incoming })
    }

    pub fn diagram(&self) -> &PlanarDiagram {
        &self.diagram
    }

    pub fn into_diagram(self) -> PlanarDiagram {
        self.diagram
    }

    pub fn is_incoming(&self, d: Dart) -> bool {
        self.incoming[d]
    }

    pub fn crossing_count(&self) -> usize {
        self.diagram.crossing_count()
    }

    /// Slot at which the under-strand enters `crossing`.
    pub fn under_in(&self, crossing: usize) -> usize {
        let over = self.diagram.over(crossing);
        (0..4)
            .find(|&s| !over.contains(s) && self.incoming[dart(crossing, s)])
            .expect("oriented crossing has an incoming under dart")
    }

    /// Slot at which the over-strand enters `crossing`.
    pub fn over_in(&self, crossing: usize) -> usize {
        let over = self.diagram.over(crossing);
        (0..4)
            .find(|&s| over.contains(s) && self.incoming[dart(crossing, s)])
            .expect("oriented crossing has an incoming over dart")
    }

    /// `+1` when the under-strand direction is the over-strand direction
    /// turned a quarter counterclockwise, `-1` otherwise.
    pub fn sign(&self, crossing: usize) -> i64 {
        let under_out = (self.under_in(crossing) + 2) % 4;
        let over_out = (self.over_in(crossing) + 2) % 4;
        if under_out == (over_out + 1) % 4 {
            1
        } else {
            -1
        }
    }

    pub fn writhe(&self) -> i64 {
        (0..self.crossing_count()).map(|c| self.sign(c)).sum()
    }

    /// Reverses every edge.
    pub fn reversed(&self) -> Self {
        Self {
            diagram: self.diagram.clone(),
            incoming: self.incoming.iter().map(|b| !b).collect(),
        }
    }

    /// Mirror image by switching every crossing, same orientation.
    pub fn crossing_switched(&self) -> Self {
        Self {
            diagram: self.diagram.crossing_switched(),
            incoming: self.incoming.clone(),
        }
    }
}

/// Orients a knot diagram by tracing the strand that enters crossing 0
/// through slot 0.
pub fn orient(diagram: &PlanarDiagram) -> Result<OrientedDiagram, DiagramError> {
    let components = diagram.component_count();
    if components != 1 {
        return Err(DiagramError::LinkNotKnot { components });
    }
    let n = diagram.partners().len();
    let mut incoming = vec![false; n];
    if let Some(cycle) = diagram.strand_cycles().first() {
        for &d in cycle {
            incoming[d] = true;
        }
    }
    OrientedDiagram::new(diagram.clone(), incoming)
}
