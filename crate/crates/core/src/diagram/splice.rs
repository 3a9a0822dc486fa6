use super::orient::OrientedDiagram;
use super::planar::{rotate, Dart, PlanarDiagram};
use super::DiagramError;

/// The first edge met walking the unbounded face, as `(outgoing, incoming)`.
fn outer_edge(o: &OrientedDiagram) -> Result<(Dart, Dart), DiagramError> {
    let d = o.diagram();
    let faces = d.faces()?;
    let outer = faces.face_of_corner(d.outer_corner().unwrap_or(0));
    let corner = faces.corners(outer)[0];
    let a = rotate(corner, 1);
    let b = d.partner(a);
    Ok(if o.is_incoming(a) { (b, a) } else { (a, b) })
}

/// Connected sum of two oriented knot diagrams.
///
/// Cuts the first outer edge of each diagram and rejoins the four ends so
/// that orientations agree. Crossings of `second` are renumbered after those
/// of `first`, and the unbounded face of `first` stays unbounded.
pub fn splice_connected_sum(
    first: &OrientedDiagram,
    second: &OrientedDiagram,
) -> Result<OrientedDiagram, DiagramError> {
    if second.crossing_count() == 0 {
        return Ok(first.clone());
    }
    if first.crossing_count() == 0 {
        return Ok(second.clone());
    }
    let (out1, in1) = outer_edge(first)?;
    let (out2, in2) = outer_edge(second)?;
    let shift = 4 * first.crossing_count();
    let (out2, in2) = (out2 + shift, in2 + shift);

    let d1 = first.diagram();
    let d2 = second.diagram();
    let mut over = d1.over_pairs().to_vec();
    over.extend_from_slice(d2.over_pairs());
    let mut partner = d1.partners().to_vec();
    partner.extend(d2.partners().iter().map(|&p| p + shift));
    partner[out1] = in2;
    partner[in2] = out1;
    partner[out2] = in1;
    partner[in1] = out2;
    let incoming: Vec<bool> = (0..shift)
        .map(|x| first.is_incoming(x))
        .chain((0..4 * second.crossing_count()).map(|x| second.is_incoming(x)))
        .collect();

    let diagram = PlanarDiagram::from_parts(over, partner, 0, d1.outer_corner())?;
    diagram.faces()?;
    OrientedDiagram::new(diagram, incoming)
}
