//! PD-code text format.
//!
//! One crossing per line, `Xp a,b,c,d` for a positive crossing and
//! `Xm a,b,c,d` for a negative one. Edge labels are positive integers listed
//! counterclockwise starting at the incoming under-strand. Blank lines and
//! `#` comments are ignored.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::orient::OrientedDiagram;
use super::planar::{dart, rotate, Dart, OverPair, PlanarDiagram};
use super::DiagramError;

fn malformed(line: usize, message: impl Into<String>) -> DiagramError {
    DiagramError::MalformedPd {
        line,
        message: message.into(),
    }
}

/// Parses PD text into an oriented knot diagram.
///
/// The unbounded face is taken to be the face of corner 0. An empty file is
/// the crossingless unknot.
pub fn parse_pd(text: &str) -> Result<OrientedDiagram, DiagramError> {
    let mut over = Vec::new();
    let mut incoming = Vec::new();
    let mut first_seen: HashMap<u64, (usize, Dart)> = HashMap::new();
    let mut partner: Vec<Dart> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (positive, rest) = if let Some(r) = line.strip_prefix("Xp") {
            (true, r)
        } else if let Some(r) = line.strip_prefix("Xm") {
            (false, r)
        } else {
            return Err(malformed(lineno, "expected `Xp` or `Xm`"));
        };
        if !rest.starts_with(char::is_whitespace) {
            return Err(malformed(lineno, "expected whitespace after the crossing tag"));
        }
        let labels = rest
            .split(',')
            .map(|t| {
                let t = t.trim();
                match t.parse::<u64>() {
                    Ok(v) if v > 0 => Ok(v),
                    _ => Err(malformed(lineno, format!("bad edge label {t:?}"))),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        if labels.len() != 4 {
            return Err(malformed(lineno, format!("expected 4 labels, got {}", labels.len())));
        }
        let c = over.len();
        over.push(OverPair::Odd);
        // Under enters at slot 0; the over-strand enters at slot 3 when
        // positive and at slot 1 when negative.
        let over_in = if positive { 3 } else { 1 };
        for s in 0..4 {
            incoming.push(s == 0 || s == over_in);
            partner.push(usize::MAX);
        }
        for (s, &label) in labels.iter().enumerate() {
            let d = dart(c, s);
            match first_seen.get(&label).copied() {
                None => {
                    first_seen.insert(label, (lineno, d));
                }
                Some((_, e)) if partner[e] != usize::MAX => {
                    return Err(malformed(lineno, format!("edge {label} appears more than twice")));
                }
                Some((_, e)) => {
                    partner[e] = d;
                    partner[d] = e;
                }
            }
        }
    }
    if let Some((label, (line, _))) = first_seen
        .iter()
        .filter(|(_, (_, d))| partner[*d] == usize::MAX)
        .min_by_key(|(_, (line, _))| *line)
    {
        return Err(malformed(*line, format!("edge {label} appears only once")));
    }
    if over.is_empty() {
        return OrientedDiagram::new(PlanarDiagram::unknot(), Vec::new());
    }
    let diagram = PlanarDiagram::from_parts(over, partner, 0, None)?;
    diagram.faces()?;
    OrientedDiagram::new(diagram, incoming).map_err(|e| match e {
        DiagramError::InconsistentOrientation(m) => malformed(0, m),
        other => other,
    })
}

/// Writes an oriented knot diagram as PD text.
///
/// Edges are labelled `1..=2n` along the orientation, starting with the
/// edge entering the lowest-numbered incoming dart.
pub fn write_pd(oriented: &OrientedDiagram) -> String {
    let d = oriented.diagram();
    let n = d.crossing_count();
    let mut out = format!("# PD code, {n} crossings\n");
    if n == 0 {
        return out;
    }
    let mut label = vec![0u64; 4 * n];
    let start = (0..4 * n)
        .find(|&x| oriented.is_incoming(x))
        .expect("oriented diagram has incoming darts");
    let mut x = start;
    let mut k = 1;
    loop {
        label[x] = k;
        label[d.partner(x)] = k;
        k += 1;
        x = d.partner(rotate(x, 2));
        if x == start {
            break;
        }
    }
    for c in 0..n {
        let u = oriented.under_in(c);
        let tag = if oriented.sign(c) > 0 { "Xp" } else { "Xm" };
        let labels: Vec<String> = (0..4)
            .map(|i| label[dart(c, (u + i) % 4)].to_string())
            .collect();
        let _ = writeln!(out, "{tag} {}", labels.join(","));
    }
    out
}
