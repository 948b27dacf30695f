//! Immutable point sets, text/JSON serialization, and general-position
//! validators.
//!
//! Text format: line 1 is `<d> <n>`, followed by `n` lines of `d`
//! whitespace-separated rationals (`a`, `-a`, `a/b` or an exact decimal
//! literal). Lines starting with `#` are comments. A JSON mirror
//! `{dim, points: [[...]], label}` with string coordinates is also supported.

use std::collections::HashSet;
use std::sync::OnceLock;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{affine_rank, Point};
use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Debug, Clone)]
pub struct PointSet {
    dim: usize,
    points: Vec<Point>,
    label: Option<String>,
    general: OnceLock<bool>,
    strongly_general: OnceLock<bool>,
}

impl PartialEq for PointSet {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.points == other.points && self.label == other.label
    }
}
impl Eq for PointSet {}

impl PointSet {
    /// Builds a point set, rejecting dimension mismatches and duplicates.
    pub fn new(dim: usize, points: Vec<Point>, label: Option<String>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("dimension must be positive".into()));
        }
        let mut seen = HashSet::new();
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.dim(),
                });
            }
            if !seen.insert(p.coords().to_vec()) {
                return Err(Error::InvalidArgument(format!("duplicate point {p:?}")));
            }
        }
        Ok(PointSet {
            dim,
            points,
            label,
            general: OnceLock::new(),
            strongly_general: OnceLock::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn subset(&self, indices: &[usize]) -> Vec<Point> {
        indices.iter().map(|&i| self.points[i].clone()).collect()
    }

    /// The projection dropping the last coordinate. Errors for 1-dimensional
    /// sets or when the projection collapses two points.
    pub fn project_drop_last(&self) -> Result<PointSet> {
        if self.dim < 2 {
            return Err(Error::InvalidArgument(
                "cannot project a 1-dimensional set".into(),
            ));
        }
        let projected: Vec<Point> = self.points.iter().map(|p| p.project()).collect();
        PointSet::new(self.dim - 1, projected, self.label.clone())
    }

    /// General position: for every k = 1..d-1, no k+2 points lie in an affine
    /// k-dimensional subspace. Cached after the first call.
    pub fn is_general_position(&self) -> bool {
        *self
            .general
            .get_or_init(|| find_general_position_violation(&self.points, self.dim).is_none())
    }

    /// Strongly general position: general position, and no (i+1)-tuple spans
    /// an affine subspace parallel to the span of the last d-i coordinate
    /// axes, for every i = 1..d-1. In particular all first coordinates are
    /// distinct.
    pub fn is_strongly_general_position(&self) -> bool {
        *self.strongly_general.get_or_init(|| {
            if !self.is_general_position() {
                return false;
            }
            for i in 1..self.dim {
                // (i+1)-tuple parallel to the trailing axes iff the projection
                // to the first i coordinates is affinely dependent.
                for tuple in (0..self.points.len()).combinations(i + 1) {
                    let projected: Vec<Point> = tuple
                        .iter()
                        .map(|&j| Point::new(self.points[j].coords()[..i].to_vec()))
                        .collect();
                    if affine_rank(&projected) + 1 != projected.len() {
                        return false;
                    }
                }
            }
            true
        })
    }
}

/// Returns a witness tuple violating general position, if any.
pub(crate) fn find_general_position_violation(points: &[Point], dim: usize) -> Option<Vec<usize>> {
    for size in 3..=(dim + 1).min(points.len()) {
        for tuple in (0..points.len()).combinations(size) {
            let pts: Vec<Point> = tuple.iter().map(|&i| points[i].clone()).collect();
            if affine_rank(&pts) + 1 != pts.len() {
                return Some(tuple);
            }
        }
    }
    None
}

/// Parses the text format described in the module docs.
pub fn parse_pointset(text: &str) -> Result<PointSet> {
    let mut header: Option<(usize, usize)> = None;
    let mut points: Vec<Point> = Vec::new();
    let mut dim = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match header {
            None => {
                let mut it = line.split_whitespace();
                let d: usize = it
                    .next()
                    .ok_or_else(|| Error::Parse {
                        line: line_no,
                        msg: "missing dimension in header".into(),
                    })?
                    .parse()
                    .map_err(|_| Error::Parse {
                        line: line_no,
                        msg: "malformed dimension in header".into(),
                    })?;
                let n: usize = it
                    .next()
                    .ok_or_else(|| Error::Parse {
                        line: line_no,
                        msg: "missing point count in header".into(),
                    })?
                    .parse()
                    .map_err(|_| Error::Parse {
                        line: line_no,
                        msg: "malformed point count in header".into(),
                    })?;
                if it.next().is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "trailing tokens in header".into(),
                    });
                }
                if d == 0 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "dimension must be positive".into(),
                    });
                }
                header = Some((d, n));
                dim = d;
            }
            Some((d, n)) => {
                if points.len() == n {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("more than the declared {n} points"),
                    });
                }
                let coords: Vec<Rational> = line
                    .split_whitespace()
                    .map(|tok| {
                        parse_rational(tok).map_err(|msg| Error::Parse { line: line_no, msg })
                    })
                    .collect::<Result<_>>()?;
                if coords.len() != d {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("wrong coordinate count: expected {d}, got {}", coords.len()),
                    });
                }
                points.push(Point::new(coords));
            }
        }
    }
    let (_, n) = header.ok_or_else(|| Error::Parse {
        line: 1,
        msg: "missing header".into(),
    })?;
    if points.len() != n {
        return Err(Error::Parse {
            line: text.lines().count() + 1,
            msg: format!("expected {n} points, got {}", points.len()),
        });
    }
    PointSet::new(dim, points, None)
}

/// Serializes in the text format; parse(serialize(s)) is the identity.
pub fn serialize_pointset(set: &PointSet) -> String {
    let mut out = format!("{} {}\n", set.dim(), set.len());
    for p in set.points() {
        let row: Vec<String> = p.coords().iter().map(format_rational).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
struct JsonPointSet {
    dim: usize,
    points: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

pub fn pointset_to_json(set: &PointSet) -> String {
    let mirror = JsonPointSet {
        dim: set.dim(),
        points: set
            .points()
            .iter()
            .map(|p| p.coords().iter().map(format_rational).collect())
            .collect(),
        label: set.label().map(str::to_owned),
    };
    serde_json::to_string_pretty(&mirror).expect("serializable")
}

pub fn pointset_from_json(text: &str) -> Result<PointSet> {
    let mirror: JsonPointSet = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    let points: Vec<Point> = mirror
        .points
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let coords: Vec<Rational> = row
                .iter()
                .map(|tok| parse_rational(tok).map_err(|msg| Error::Parse { line: i + 1, msg }))
                .collect::<Result<_>>()?;
            if coords.len() != mirror.dim {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!(
                        "wrong coordinate count: expected {}, got {}",
                        mirror.dim,
                        coords.len()
                    ),
                });
            }
            Ok(Point::new(coords))
        })
        .collect::<Result<_>>()?;
    PointSet::new(mirror.dim, points, mirror.label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn pt(coords: &[i64]) -> Point {
        Point::new(coords.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn parses_triangle() {
        let s = parse_pointset("2 3\n0 0\n1 0\n0 1\n").unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.len(), 3);
        assert_eq!(s.point(2), &pt(&[0, 1]));
    }

    #[test]
    fn parses_rationals_exactly() {
        let s = parse_pointset("2 2\n1/3 2/3\n1 1\n").unwrap();
        assert_eq!(s.point(0).coord(0), &crate::rational::rat(1, 3));
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_pointset("2 3\n0 0\n1\n0 1\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn comments_and_blank_lines_skipped() {
        let s = parse_pointset("# triangle\n2 3\n\n0 0\n# interior\n1 0\n0 1\n").unwrap();
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn round_trip_text_and_json() {
        let text = "2 3\n1/3 2/3\n1 1\n-5 7/2\n";
        let s = parse_pointset(text).unwrap();
        assert_eq!(serialize_pointset(&s), text);
        let back = pointset_from_json(&pointset_to_json(&s)).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn rejects_duplicates() {
        assert!(PointSet::new(2, vec![pt(&[0, 0]), pt(&[0, 0])], None).is_err());
    }

    #[test]
    fn general_position_planar() {
        let collinear =
            PointSet::new(2, vec![pt(&[0, 0]), pt(&[1, 1]), pt(&[2, 2]), pt(&[0, 5])], None)
                .unwrap();
        assert!(!collinear.is_general_position());
        let triangle = PointSet::new(2, vec![pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1])], None).unwrap();
        assert!(triangle.is_general_position());
    }

    #[test]
    fn general_position_coplanar_3d() {
        // four coplanar points among a 3d set
        let s = PointSet::new(
            3,
            vec![
                pt(&[0, 0, 0]),
                pt(&[1, 0, 0]),
                pt(&[0, 1, 0]),
                pt(&[1, 1, 0]),
                pt(&[0, 0, 1]),
            ],
            None,
        )
        .unwrap();
        assert!(!s.is_general_position());
    }

    #[test]
    fn strongly_general_position() {
        let vertical = PointSet::new(2, vec![pt(&[0, 0]), pt(&[0, 1]), pt(&[1, 3])], None).unwrap();
        assert!(!vertical.is_strongly_general_position());
        let ok = PointSet::new(2, vec![pt(&[0, 0]), pt(&[1, 2]), pt(&[2, 1])], None).unwrap();
        assert!(ok.is_strongly_general_position());
        let collinear =
            PointSet::new(2, vec![pt(&[0, 0]), pt(&[1, 1]), pt(&[2, 2])], None).unwrap();
        assert!(!collinear.is_strongly_general_position());
    }

    #[test]
    fn strong_gp_implies_gp_and_projects() {
        let s = PointSet::new(
            3,
            vec![pt(&[0, 0, 0]), pt(&[1, 2, 5]), pt(&[2, 1, 1]), pt(&[3, 5, 2])],
            None,
        )
        .unwrap();
        assert!(s.is_strongly_general_position());
        assert!(s.is_general_position());
        let p = s.project_drop_last().unwrap();
        assert!(p.is_strongly_general_position());
    }
}
