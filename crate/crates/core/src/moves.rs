//! Elementary local moves on lattice polygons: the length +2 plaquette
//! detour, its inverse (-2), and the length-preserving corner flip.
//!
//! Enumeration order is fixed (edge index, then the direction order of
//! [`Dir::ALL`]) so that every downstream search is reproducible.

use crate::geom::{self, Dir, IVec3};
use crate::lattice::LatticePolygon;
use std::collections::HashSet;
use std::fmt;

/// Move family, named by its effect on the lattice length.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MoveKind {
    Plus2,
    Minus2,
    Zero,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::Plus2 => "plus2",
            MoveKind::Minus2 => "minus2",
            MoveKind::Zero => "zero",
        })
    }
}

impl std::str::FromStr for MoveKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plus2" => Ok(MoveKind::Plus2),
            "minus2" => Ok(MoveKind::Minus2),
            "zero" => Ok(MoveKind::Zero),
            other => Err(format!("unknown move kind {other:?}")),
        }
    }
}

/// A move applied at a specific edge of a specific polygon.
///
/// - `Plus2` at edge `i` with direction `e`: the edge `u -> u+d` is
///   replaced by the detour `u -> u+e -> u+d+e -> u+d`, `e` perpendicular
///   to `d`.
/// - `Minus2` at edge `i`: edges `i, i+1, i+2` with vectors `(d, e, -d)`
///   collapse to the single edge `e`; `direction` records `e`.
/// - `Zero` at edge `i`: the corner `u -> u+d1 -> u+d1+d2` is re-routed
///   through `u+d2`; `direction` records `d2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct MoveDescriptor {
    pub kind: MoveKind,
    pub edge_index: usize,
    pub direction: Dir,
}

/// Serializes as `kind:edge_index:direction`, e.g. `plus2:5:+y`.
impl fmt::Display for MoveDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.kind, self.edge_index, self.direction)
    }
}

impl std::str::FromStr for MoveDescriptor {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("expected kind:edge:direction, got {s:?}"));
        }
        Ok(MoveDescriptor {
            kind: parts[0].parse()?,
            edge_index: parts[1]
                .parse()
                .map_err(|_| format!("bad edge index {:?}", parts[1]))?,
            direction: parts[2].parse()?,
        })
    }
}

/// Replay failures for recorded moves.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("edge index {index} out of range for length {len}")]
    EdgeOutOfRange { index: usize, len: usize },
    #[error("move {descriptor} does not apply at its edge")]
    NotApplicable { descriptor: String },
    #[error("move produces an invalid polygon: {0}")]
    Invalid(#[from] crate::lattice::PolygonError),
}

/// All embedded +2 plaquette detours of `p`, in deterministic order.
///
/// For each edge `u -> u+d` and each unit `e` perpendicular to `d`, the
/// detour is emitted iff both new vertices `u+e` and `u+d+e` are absent
/// from `p`; absence alone guarantees the child is a valid polygon.
pub fn enumerate_plus2(p: &LatticePolygon) -> Vec<(MoveDescriptor, LatticePolygon)> {
    let occupied: HashSet<IVec3> = p.vertices().iter().copied().collect();
    let mut out = Vec::new();
    for i in 0..p.len() {
        let d = p.edge_dir(i);
        let dir_d = Dir::from_vector(d).expect("unit edge");
        for e in Dir::ALL {
            if !e.perpendicular_to(dir_d) {
                continue;
            }
            let u = p.vertex(i);
            let a = geom::add(u, e.vector());
            let b = geom::add(a, d);
            if occupied.contains(&a) || occupied.contains(&b) {
                continue;
            }
            let mut vertices = Vec::with_capacity(p.len() + 2);
            vertices.extend_from_slice(&p.vertices()[..=i]);
            vertices.push(a);
            vertices.push(b);
            vertices.extend_from_slice(&p.vertices()[i + 1..]);
            out.push((
                MoveDescriptor {
                    kind: MoveKind::Plus2,
                    edge_index: i,
                    direction: e,
                },
                LatticePolygon::from_valid(vertices),
            ));
        }
    }
    out
}

/// All -2 moves of `p`: every run of three consecutive edges with vectors
/// `(d, e, -d)` collapses to the single edge `e`. Requires length >= 6.
pub fn enumerate_minus2(p: &LatticePolygon) -> Vec<(MoveDescriptor, LatticePolygon)> {
    let n = p.len();
    let mut out = Vec::new();
    if n < 6 {
        return out;
    }
    for i in 0..n {
        let d = p.edge_dir(i);
        let e = p.edge_dir(i + 1);
        let back = p.edge_dir(i + 2);
        if back != geom::neg(d) {
            continue;
        }
        debug_assert_eq!(geom::dot(d, e), 0);
        // drop vertices i+1 and i+2
        let mut vertices = Vec::with_capacity(n - 2);
        for k in 0..n {
            if k == (i + 1) % n || k == (i + 2) % n {
                continue;
            }
            vertices.push(p.vertex(k));
        }
        match LatticePolygon::new(vertices) {
            Ok(q) => out.push((
                MoveDescriptor {
                    kind: MoveKind::Minus2,
                    edge_index: i,
                    direction: Dir::from_vector(e).expect("unit edge"),
                },
                q,
            )),
            Err(_) => continue,
        }
    }
    out
}

/// All corner flips of `p`: each pair of consecutive perpendicular edges
/// `u -> u+d1 -> u+d1+d2` re-routed as `u -> u+d2 -> u+d1+d2`, emitted iff
/// the new intermediate vertex is absent from `p`.
pub fn enumerate_zero(p: &LatticePolygon) -> Vec<(MoveDescriptor, LatticePolygon)> {
    let occupied: HashSet<IVec3> = p.vertices().iter().copied().collect();
    let n = p.len();
    let mut out = Vec::new();
    for i in 0..n {
        let d1 = p.edge_dir(i);
        let d2 = p.edge_dir(i + 1);
        if geom::dot(d1, d2) != 0 {
            continue;
        }
        let u = p.vertex(i);
        let w = geom::add(u, d2);
        if occupied.contains(&w) {
            continue;
        }
        let mut vertices = p.vertices().to_vec();
        vertices[(i + 1) % n] = w;
        out.push((
            MoveDescriptor {
                kind: MoveKind::Zero,
                edge_index: i,
                direction: Dir::from_vector(d2).expect("unit edge"),
            },
            LatticePolygon::from_valid(vertices),
        ));
    }
    out
}

/// All moves of every kind, in the order plus2, minus2, zero.
pub fn enumerate_all(p: &LatticePolygon) -> Vec<(MoveDescriptor, LatticePolygon)> {
    let mut out = enumerate_plus2(p);
    out.extend(enumerate_minus2(p));
    out.extend(enumerate_zero(p));
    out
}

/// Replays a recorded move on a concrete polygon, validating that it
/// applies literally at the recorded edge.
pub fn apply(p: &LatticePolygon, m: &MoveDescriptor) -> Result<LatticePolygon, MoveError> {
    let n = p.len();
    if m.edge_index >= n {
        return Err(MoveError::EdgeOutOfRange {
            index: m.edge_index,
            len: n,
        });
    }
    let i = m.edge_index;
    let not_applicable = || MoveError::NotApplicable {
        descriptor: m.to_string(),
    };
    match m.kind {
        MoveKind::Plus2 => {
            let d = p.edge_dir(i);
            let dir_d = Dir::from_vector(d).expect("unit edge");
            if !m.direction.perpendicular_to(dir_d) {
                return Err(not_applicable());
            }
            let u = p.vertex(i);
            let a = geom::add(u, m.direction.vector());
            let b = geom::add(a, d);
            let mut vertices = Vec::with_capacity(n + 2);
            vertices.extend_from_slice(&p.vertices()[..=i]);
            vertices.push(a);
            vertices.push(b);
            vertices.extend_from_slice(&p.vertices()[i + 1..]);
            Ok(LatticePolygon::new(vertices)?)
        }
        MoveKind::Minus2 => {
            let d = p.edge_dir(i);
            let e = p.edge_dir(i + 1);
            if p.edge_dir(i + 2) != geom::neg(d) || e != m.direction.vector() {
                return Err(not_applicable());
            }
            let mut vertices = Vec::with_capacity(n - 2);
            for k in 0..n {
                if k == (i + 1) % n || k == (i + 2) % n {
                    continue;
                }
                vertices.push(p.vertex(k));
            }
            Ok(LatticePolygon::new(vertices)?)
        }
        MoveKind::Zero => {
            let d1 = p.edge_dir(i);
            let d2 = p.edge_dir(i + 1);
            if geom::dot(d1, d2) != 0 || d2 != m.direction.vector() {
                return Err(not_applicable());
            }
            let mut vertices = p.vertices().to_vec();
            vertices[(i + 1) % n] = geom::add(p.vertex(i), d2);
            Ok(LatticePolygon::new(vertices)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> LatticePolygon {
        LatticePolygon::new(vec![[0, 0, 0], [1, 0, 0], [1, 1, 0], [0, 1, 0]]).unwrap()
    }

    fn rect_1x2() -> LatticePolygon {
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

    fn trefoil() -> LatticePolygon {
        LatticePolygon::parse(include_str!("../tests/data/trefoil24.txt")).unwrap()
    }

    /// Brute-force oracle: all 16 raw detour candidates of the square,
    /// validated only by vertex distinctness.
    #[test]
    fn square_has_12_embedded_detours_of_16_raw() {
        let p = unit_square();
        let mut raw = 0;
        let mut embedded = 0;
        for i in 0..4 {
            let d = Dir::from_vector(p.edge_dir(i)).unwrap();
            for e in Dir::ALL {
                if !e.perpendicular_to(d) {
                    continue;
                }
                raw += 1;
                let a = geom::add(p.vertex(i), e.vector());
                let b = geom::add(a, p.edge_dir(i));
                if !p.vertices().contains(&a) && !p.vertices().contains(&b) {
                    embedded += 1;
                }
            }
        }
        assert_eq!(raw, 16);
        assert_eq!(embedded, 12);
        assert_eq!(enumerate_plus2(&p).len(), 12);
    }

    #[test]
    fn plus2_children_gain_two_edges_and_validate() {
        for p in [unit_square(), rect_1x2(), trefoil()] {
            for (m, q) in enumerate_plus2(&p) {
                assert_eq!(q.len(), p.len() + 2);
                assert_eq!(apply(&p, &m).unwrap(), q);
                LatticePolygon::new(q.vertices().to_vec()).unwrap();
            }
        }
    }

    #[test]
    fn trefoil_detour_of_table_row() {
        // the detour replacing (0,2,1)->(-1,2,1) with the +y plaquette
        let p = trefoil();
        let found = enumerate_plus2(&p).into_iter().find(|(m, _)| {
            m.edge_index == 4 && m.direction == Dir::from_vector([0, 1, 0]).unwrap()
        });
        let (_, q) = found.expect("detour at edge 4, +y");
        assert_eq!(q.len(), 26);
        assert_eq!(&q.vertices()[4..8], &[[0, 2, 1], [0, 3, 1], [-1, 3, 1], [-1, 2, 1]]);
    }

    #[test]
    fn rectangle_has_two_minus2_results() {
        let results = enumerate_minus2(&rect_1x2());
        assert_eq!(results.len(), 2);
        let squares: Vec<_> = results
            .iter()
            .map(|(_, q)| q.canonical_key())
            .collect();
        assert_eq!(squares[0], squares[1]);
        assert_eq!(squares[0], unit_square().canonical_key());
        // distinct move sites, one per short end
        assert_ne!(results[0].0.edge_index, results[1].0.edge_index);
    }

    #[test]
    fn square_has_no_minus2() {
        assert!(enumerate_minus2(&unit_square()).is_empty());
    }

    #[test]
    fn minus2_inverts_plus2_up_to_key() {
        for p in [unit_square(), rect_1x2(), trefoil()] {
            let key = p.canonical_key();
            for (_, q) in enumerate_plus2(&p) {
                let recovered = enumerate_minus2(&q)
                    .into_iter()
                    .any(|(_, r)| r.canonical_key() == key);
                assert!(recovered, "no inverse found at l={}", p.len());
            }
        }
    }

    #[test]
    fn zero_moves_on_small_rectangles_are_empty() {
        assert!(enumerate_zero(&unit_square()).is_empty());
        assert!(enumerate_zero(&rect_1x2()).is_empty());
    }

    #[test]
    fn zero_moves_on_detour_polygon_are_valid_and_nonempty() {
        let p = trefoil();
        let (_, detour) = enumerate_plus2(&p)
            .into_iter()
            .find(|(m, _)| {
                m.edge_index == 4 && m.direction == Dir::from_vector([0, 1, 0]).unwrap()
            })
            .unwrap();
        let flips = enumerate_zero(&detour);
        assert!(!flips.is_empty());
        for (m, q) in flips {
            assert_eq!(q.len(), 26);
            assert_eq!(apply(&detour, &m).unwrap(), q);
            LatticePolygon::new(q.vertices().to_vec()).unwrap();
        }
    }

    #[test]
    fn zero_moves_are_self_inverse_up_to_key() {
        let p = trefoil();
        let (_, detour) = enumerate_plus2(&p).into_iter().next().unwrap();
        let key = detour.canonical_key();
        for (_, q) in enumerate_zero(&detour) {
            let back = enumerate_zero(&q)
                .into_iter()
                .any(|(_, r)| r.canonical_key() == key);
            assert!(back);
        }
    }

    #[test]
    fn descriptor_serialization_roundtrip() {
        let m = MoveDescriptor {
            kind: MoveKind::Plus2,
            edge_index: 5,
            direction: "+y".parse().unwrap(),
        };
        assert_eq!(m.to_string(), "plus2:5:+y");
        assert_eq!(m.to_string().parse::<MoveDescriptor>().unwrap(), m);
    }
}
