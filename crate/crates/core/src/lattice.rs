//! Lattice polygons: validation, seed-file parsing, and canonicalization
//! modulo translations, the 24 orientation-preserving cube rotations,
//! cyclic re-indexing, and traversal reversal.
//!
//! Mirrors (determinant -1 isometries) are deliberately not identified:
//! a polygon and its coordinate mirror get distinct canonical keys.

use crate::geom::{self, is_unit_axis, proper_rotations, rotations_to_minus_x, Dir, IVec3};
use std::fmt;

/// Embedded closed curve of unit axis edges in the cubic lattice.
///
/// Vertices are cyclically ordered; the closing edge (last vertex back to
/// the first) is subject to the same unit-edge rule as every other edge.
/// The lattice length equals the vertex count and the edge count.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LatticePolygon {
    vertices: Vec<IVec3>,
}

/// Validation failures for candidate vertex lists.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum PolygonError {
    #[error("polygon needs at least 4 vertices, got {0}")]
    TooShort(usize),
    #[error("polygon length must be even, got {0}")]
    OddLength(usize),
    #[error("edge {index} from {from:?} to {to:?} is not a unit axis step")]
    NonUnitEdge { index: usize, from: IVec3, to: IVec3 },
    #[error("vertex {vertex:?} appears at positions {first} and {second}")]
    DuplicateVertex {
        vertex: IVec3,
        first: usize,
        second: usize,
    },
    #[error("edges {index} and {} backtrack", .index + 1)]
    Backtrack { index: usize },
}

/// Seed-file parse failures, with 1-based line numbers.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected 3 integers, got {count} tokens")]
    WrongArity { line: usize, count: usize },
    #[error("line {line}: invalid integer {token:?}")]
    BadToken { line: usize, token: String },
    #[error(transparent)]
    Invalid(#[from] PolygonError),
}

impl LatticePolygon {
    /// Validates a cyclic vertex list.
    pub fn new(vertices: Vec<IVec3>) -> Result<Self, PolygonError> {
        let n = vertices.len();
        if n < 4 {
            return Err(PolygonError::TooShort(n));
        }
        if n % 2 != 0 {
            return Err(PolygonError::OddLength(n));
        }
        for i in 0..n {
            let from = vertices[i];
            let to = vertices[(i + 1) % n];
            if !is_unit_axis(geom::sub(to, from)) {
                return Err(PolygonError::NonUnitEdge { index: i, from, to });
            }
        }
        let mut seen: std::collections::HashMap<IVec3, usize> =
            std::collections::HashMap::with_capacity(n);
        for (i, v) in vertices.iter().enumerate() {
            if let Some(&first) = seen.get(v) {
                return Err(PolygonError::DuplicateVertex {
                    vertex: *v,
                    first,
                    second: i,
                });
            }
            seen.insert(*v, i);
        }
        // implied by distinctness for unit edges; asserted anyway
        for i in 0..n {
            let d1 = geom::sub(vertices[(i + 1) % n], vertices[i]);
            let d2 = geom::sub(vertices[(i + 2) % n], vertices[(i + 1) % n]);
            if d1 == geom::neg(d2) {
                return Err(PolygonError::Backtrack { index: i });
            }
        }
        Ok(LatticePolygon { vertices })
    }

    /// Parses seed-file content: one vertex per line as three
    /// whitespace-separated integers; `#` starts a comment; blank lines
    /// are ignored.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut vertices = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let tokens: Vec<&str> = content.split_whitespace().collect();
            if tokens.len() != 3 {
                return Err(ParseError::WrongArity {
                    line,
                    count: tokens.len(),
                });
            }
            let mut v = [0i32; 3];
            for (k, t) in tokens.iter().enumerate() {
                v[k] = t.parse().map_err(|_| ParseError::BadToken {
                    line,
                    token: t.to_string(),
                })?;
            }
            vertices.push(v);
        }
        Ok(LatticePolygon::new(vertices)?)
    }

    /// Serializes to the seed-file format (parse's exact inverse).
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            out.push_str(&format!("{} {} {}\n", v[0], v[1], v[2]));
        }
        out
    }

    /// Lattice length: number of vertices = number of unit edges.
    /// A validated polygon is never empty.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[IVec3] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> IVec3 {
        self.vertices[i % self.vertices.len()]
    }

    /// Edge vector from vertex `i` to vertex `i+1` (cyclically).
    pub fn edge_dir(&self, i: usize) -> IVec3 {
        let n = self.vertices.len();
        geom::sub(self.vertices[(i + 1) % n], self.vertices[i % n])
    }

    /// Image under a lattice isometry (rotation then translation).
    /// Accepts any signed permutation, so tests can also build mirrors.
    pub fn transformed(&self, rot: geom::Rotation, translation: IVec3) -> LatticePolygon {
        let vertices = self
            .vertices
            .iter()
            .map(|v| geom::add(rot.apply(*v), translation))
            .collect();
        LatticePolygon { vertices }
    }

    /// Coordinate mirror (negated x); not identified by canonicalization.
    pub fn mirrored(&self) -> LatticePolygon {
        let vertices = self
            .vertices
            .iter()
            .map(|v| [-v[0], v[1], v[2]])
            .collect();
        LatticePolygon { vertices }
    }

    /// Same curve starting at vertex `k`.
    pub fn cycled(&self, k: usize) -> LatticePolygon {
        let n = self.vertices.len();
        let vertices = (0..n).map(|i| self.vertices[(i + k) % n]).collect();
        LatticePolygon { vertices }
    }

    /// Same point set traversed in the opposite direction.
    pub fn reversed(&self) -> LatticePolygon {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        LatticePolygon { vertices }
    }

    /// Canonical key of the isometry class (see [`CanonicalKey`]).
    pub fn canonical_key(&self) -> CanonicalKey {
        let mut scratch = CanonScratch::default();
        canonical_key_of(&self.vertices, &mut scratch)
    }

    /// Internal constructor for vertex lists already known valid.
    pub(crate) fn from_valid(vertices: Vec<IVec3>) -> LatticePolygon {
        debug_assert!(LatticePolygon::new(vertices.clone()).is_ok());
        LatticePolygon { vertices }
    }
}

impl fmt::Display for LatticePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "polygon(l={})", self.len())
    }
}

/// Identifier of a polygon's class modulo translations, the 24 proper
/// rotations, cyclic shift, and traversal reversal.
///
/// The key is the lexicographically minimal vertex stream over the whole
/// identification group, flattened to integers, after translating the
/// stream's first vertex to the origin. Because each group element maps
/// valid polygons to valid polygons, the key itself decodes back into the
/// class's canonical representative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalKey(Box<[i16]>);

impl CanonicalKey {
    /// Lattice length of the underlying class.
    pub fn level(&self) -> usize {
        self.0.len() / 3
    }

    /// Decodes the canonical representative.
    pub fn to_polygon(&self) -> LatticePolygon {
        let vertices: Vec<IVec3> = self
            .0
            .chunks_exact(3)
            .map(|c| [c[0] as i32, c[1] as i32, c[2] as i32])
            .collect();
        LatticePolygon::from_valid(vertices)
    }

    pub fn as_ints(&self) -> &[i16] {
        &self.0
    }
}

/// Serialization: the flattened decimal integer stream joined by single
/// commas. Bit-exact across platforms.
impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for CanonicalKey {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let ints: Result<Vec<i16>, _> = s.split(',').map(|t| t.trim().parse::<i16>()).collect();
        let ints = ints.map_err(|e| format!("bad canonical key: {e}"))?;
        if ints.is_empty() || ints.len() % 3 != 0 {
            return Err(format!("bad canonical key length {}", ints.len()));
        }
        Ok(CanonicalKey(ints.into_boxed_slice()))
    }
}

/// Candidate traversal inside the canonicalization search: a rotation
/// index, a starting vertex, and a traversal direction.
#[derive(Clone, Copy)]
struct Cand {
    rot: u8,
    rev: bool,
    start: u16,
}

/// Reusable buffers for [`canonical_key_of`]; one per worker thread.
#[derive(Default)]
pub struct CanonScratch {
    live: Vec<Cand>,
    next: Vec<Cand>,
}

/// Canonical key of a valid vertex list.
///
/// The minimal stream is found by synchronized elimination: all `8n`
/// traversals whose first step can map to `(-1,0,0)` are advanced one
/// stream position at a time, keeping only those that attain the
/// position-wise minimum. Almost all inputs collapse to a single survivor
/// within a few positions.
pub fn canonical_key_of(vertices: &[IVec3], scratch: &mut CanonScratch) -> CanonicalKey {
    let n = vertices.len();
    debug_assert!(n >= 4);
    let rots = proper_rotations();
    let to_minus_x = rotations_to_minus_x();

    let live = &mut scratch.live;
    let next = &mut scratch.next;
    live.clear();

    // Position 1 of any minimal stream is (-1,0,0): seed the live set with
    // exactly the traversals achieving it.
    for start in 0..n {
        let fwd = geom::sub(vertices[(start + 1) % n], vertices[start]);
        let d = Dir::from_vector(fwd).expect("unit edge");
        for r in to_minus_x[d.index()] {
            live.push(Cand {
                rot: r,
                rev: false,
                start: start as u16,
            });
        }
        let bwd = geom::sub(vertices[(start + n - 1) % n], vertices[start]);
        let d = Dir::from_vector(bwd).expect("unit edge");
        for r in to_minus_x[d.index()] {
            live.push(Cand {
                rot: r,
                rev: true,
                start: start as u16,
            });
        }
    }

    let elem = |c: &Cand, k: usize| -> IVec3 {
        let s = c.start as usize;
        let idx = if c.rev {
            // s - k mod n
            let k = k % n;
            if s >= k {
                s - k
            } else {
                s + n - k
            }
        } else {
            let idx = s + k;
            if idx >= n {
                idx - n
            } else {
                idx
            }
        };
        rots[c.rot as usize].apply(geom::sub(vertices[idx], vertices[c.start as usize]))
    };

    for k in 2..n {
        if live.len() == 1 {
            break;
        }
        let mut min = elem(&live[0], k);
        next.clear();
        next.push(live[0]);
        for c in live.iter().skip(1) {
            let e = elem(c, k);
            if e < min {
                min = e;
                next.clear();
                next.push(*c);
            } else if e == min {
                next.push(*c);
            }
        }
        std::mem::swap(live, next);
    }

    let winner = live[0];
    let mut key = Vec::with_capacity(3 * n);
    for k in 0..n {
        let e = elem(&winner, k);
        for comp in e {
            debug_assert!(i16::try_from(comp).is_ok(), "coordinate overflow in key");
            key.push(comp as i16);
        }
    }
    CanonicalKey(key.into_boxed_slice())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::proper_rotations;

    pub fn unit_square() -> LatticePolygon {
        LatticePolygon::new(vec![[0, 0, 0], [1, 0, 0], [1, 1, 0], [0, 1, 0]]).unwrap()
    }

    pub fn rect_1x2() -> LatticePolygon {
        LatticePolygon::new(vec![
            [0, 0, 0],
            [1, 0, 0],
            [2, 0, 0],
            [2, 1, 0],
            [1, 1, 0],
            [0, 1, 0],
        ])
        .unwrap()
    }

    pub fn trefoil() -> LatticePolygon {
        LatticePolygon::parse(include_str!("../tests/data/trefoil24.txt")).unwrap()
    }

    #[test]
    fn parse_unit_square() {
        let p = LatticePolygon::parse("0 0 0\n1 0 0\n1 1 0\n0 1 0\n").unwrap();
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn parse_trefoil_seed() {
        let p = trefoil();
        assert_eq!(p.len(), 24);
        assert_eq!(p.vertex(0), [1, -1, 1]);
    }

    #[test]
    fn parse_rejects_non_unit_closing_edge() {
        let err = LatticePolygon::parse("0 0 0\n1 0 0\n1 1 0\n0 2 0\n").unwrap_err();
        assert!(matches!(
            err,
            ParseError::Invalid(PolygonError::NonUnitEdge { .. })
        ));
    }

    #[test]
    fn parse_rejects_bad_tokens_with_line_numbers() {
        let err = LatticePolygon::parse("0 0 0\n1 0 q\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::BadToken {
                line: 2,
                token: "q".into()
            }
        );
        let err = LatticePolygon::parse("# c\n\n0 0\n").unwrap_err();
        assert_eq!(err, ParseError::WrongArity { line: 3, count: 2 });
    }

    #[test]
    fn validation_rejects_short_duplicate_odd() {
        assert!(matches!(
            LatticePolygon::new(vec![[0, 0, 0], [1, 0, 0]]),
            Err(PolygonError::TooShort(2))
        ));
        assert!(matches!(
            LatticePolygon::new(vec![
                [0, 0, 0],
                [1, 0, 0],
                [1, 1, 0],
                [1, 0, 0],
                [0, 0, 0],
                [0, 1, 0]
            ]),
            Err(PolygonError::DuplicateVertex { .. })
        ));
        assert!(matches!(
            LatticePolygon::new(vec![
                [0, 0, 0],
                [1, 0, 0],
                [1, 1, 0],
                [1, 1, 1],
                [1, 1, 0]
            ]),
            Err(PolygonError::OddLength(5))
        ));
    }

    #[test]
    fn serialize_parse_roundtrip() {
        let p = trefoil();
        let q = LatticePolygon::parse(&p.serialize()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn canonical_key_invariant_under_group() {
        let p = trefoil();
        let base = p.canonical_key();
        let rots = proper_rotations();
        for (i, r) in rots.iter().enumerate() {
            let g = p
                .transformed(*r, [5 - i as i32, -3, 2 * i as i32])
                .cycled(i % p.len());
            assert_eq!(g.canonical_key(), base);
            assert_eq!(g.reversed().canonical_key(), base);
        }
    }

    #[test]
    fn canonical_key_idempotent() {
        for p in [unit_square(), rect_1x2(), trefoil()] {
            let key = p.canonical_key();
            let rep = key.to_polygon();
            assert_eq!(rep.canonical_key(), key);
        }
    }

    #[test]
    fn canonical_key_separates_square_and_rectangle() {
        assert_ne!(unit_square().canonical_key(), rect_1x2().canonical_key());
    }

    #[test]
    fn mirror_of_trefoil_gets_distinct_key() {
        let p = trefoil();
        assert_ne!(p.canonical_key(), p.mirrored().canonical_key());
        // sanity: the square is achiral, so its mirror shares the key
        let s = unit_square();
        assert_eq!(s.canonical_key(), s.mirrored().canonical_key());
    }

    #[test]
    fn key_display_roundtrip() {
        let key = trefoil().canonical_key();
        let parsed: CanonicalKey = key.to_string().parse().unwrap();
        assert_eq!(parsed, key);
        assert!(key.to_string().starts_with("0,0,0,-1,0,0"));
    }
}
