use crate::braidkit::BraidWord;

use super::planar::{dart, Dart, OverPair, PlanarDiagram};

// Slot layout of a braid crossing, counterclockwise from the lower left.
const SW: usize = 0;
const SE: usize = 1;
const NE: usize = 2;
const NW: usize = 3;

#[derive(Debug, Clone, Copy)]
enum End {
    Dart(Dart),
    Cup(usize),
}

struct Builder {
    partner: Vec<Dart>,
    cup_pending: Vec<Option<Dart>>,
    free_loops: usize,
}

impl Builder {
    fn join_dart(&mut self, end: End, d: Dart) {
        match end {
            End::Dart(e) => {
                self.partner[e] = d;
                self.partner[d] = e;
            }
            End::Cup(j) => match self.cup_pending[j].take() {
                Some(e) => {
                    self.partner[e] = d;
                    self.partner[d] = e;
                }
                None => self.cup_pending[j] = Some(d),
            },
        }
    }

    fn join(&mut self, a: End, b: End) {
        match (a, b) {
            (End::Dart(d), other) | (other, End::Dart(d)) => self.join_dart(other, d),
            // Both ends of one untouched cup meet at its cap.
            (End::Cup(_), End::Cup(_)) => self.free_loops += 1,
        }
    }
}

/// Plat closure of a braid on `2N` strands.
///
/// Strands sit at positions `1..=2N` with the word read bottom to top; cups
/// and caps join positions `2j-1, 2j`. The letter `σ_i` is drawn with the
/// strand entering from position `i + 1` at the bottom passing over, so
/// `σ_2^3` closes up to the left-handed trefoil. One
/// crossing per letter, numbered in word order.
pub fn plat_closure(braid: &BraidWord) -> PlanarDiagram {
    let strands = braid.strands();
    let letters = braid.letters();
    let mut b = Builder {
        partner: vec![usize::MAX; 4 * letters.len()],
        cup_pending: vec![None; strands / 2],
        free_loops: 0,
    };
    let mut ends: Vec<End> = (0..strands).map(|p| End::Cup(p / 2)).collect();
    let mut over = Vec::with_capacity(letters.len());
    for (c, letter) in letters.iter().enumerate() {
        let left = letter.generator - 1;
        b.join_dart(ends[left], dart(c, SW));
        b.join_dart(ends[left + 1], dart(c, SE));
        ends[left] = End::Dart(dart(c, NW));
        ends[left + 1] = End::Dart(dart(c, NE));
        over.push(if letter.positive {
            OverPair::Odd
        } else {
            OverPair::Even
        });
    }
    for j in 0..strands / 2 {
        b.join(ends[2 * j], ends[2 * j + 1]);
    }
    let outer = outer_corner(braid);
    PlanarDiagram::from_parts(over, b.partner, b.free_loops, outer)
        .expect("plat closure produces a valid pairing")
}

/// A corner of the unbounded face.
///
/// With two strands it is the left side of any crossing. Otherwise it is the
/// gap between positions 2 and 3 below the first crossing touching them.
fn outer_corner(braid: &BraidWord) -> Option<Dart> {
    let letters = braid.letters();
    if braid.strands() == 2 {
        return (!letters.is_empty()).then(|| dart(0, NW));
    }
    letters
        .iter()
        .enumerate()
        .find(|(_, l)| l.generator <= 3)
        .map(|(c, l)| match l.generator {
            1 => dart(c, SE),
            2 => dart(c, SW),
            _ => dart(c, NW),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braidkit::ConwayNotation;

    fn conway_plat(v: &[i64]) -> PlanarDiagram {
        plat_closure(&ConwayNotation::new(v.to_vec()).unwrap().to_braid().unwrap())
    }

    #[test]
    fn trefoil_plat() {
        let d = conway_plat(&[3]);
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.faces().unwrap().face_count(), 5);
        assert_eq!(d.component_count(), 1);
    }

    #[test]
    fn empty_words() {
        let d = plat_closure(&BraidWord::empty(2).unwrap());
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.faces().unwrap().face_count(), 2);
        assert_eq!(d.component_count(), 1);
        let d = plat_closure(&BraidWord::empty(4).unwrap());
        assert_eq!(d.component_count(), 2);
    }

    #[test]
    fn figure_eight_plat() {
        let d = conway_plat(&[2, 1, 1]);
        assert_eq!(d.crossing_count(), 4);
        assert_eq!(d.faces().unwrap().face_count(), 6);
        assert_eq!(d.component_count(), 1);
    }

    #[test]
    fn twist_region_faces() {
        // The exterior only touches the top and bottom crossings.
        let d = conway_plat(&[3]);
        let f = d.faces().unwrap();
        let outer = f.face_of_corner(d.outer_corner().unwrap());
        assert_eq!(f.corners(outer).len(), 2);
        // The two bigons inside the twist.
        let bigons = (0..f.face_count()).filter(|&i| i != outer && f.corners(i).len() == 2).count();
        assert_eq!(bigons, 2);
        // Side regions left and right of the twist touch all three crossings.
        let sides = (0..f.face_count()).filter(|&i| f.corners(i).len() == 3).count();
        assert_eq!(sides, 2);
    }

    #[test]
    fn every_conway_plat_is_planar() {
        for v in [vec![1], vec![2, 2, 2], vec![3, 1, 1, 1, 2], vec![-1, -4, -2]] {
            let d = conway_plat(&v);
            let n = d.crossing_count();
            assert_eq!(d.faces().unwrap().face_count(), n + 2, "{v:?}");
        }
    }
}
