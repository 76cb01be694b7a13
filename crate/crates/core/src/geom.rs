//! Small integer and floating-point vector helpers shared by all modules.

use std::fmt;
use std::sync::LazyLock;

/// Integer lattice point or displacement.
pub type IVec3 = [i32; 3];

/// Floating-point 3-vector used by the smoothed-curve modules.
pub type Vec3 = [f64; 3];

pub fn add(a: IVec3, b: IVec3) -> IVec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub fn sub(a: IVec3, b: IVec3) -> IVec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub fn neg(a: IVec3) -> IVec3 {
    [-a[0], -a[1], -a[2]]
}

pub fn dot(a: IVec3, b: IVec3) -> i64 {
    a[0] as i64 * b[0] as i64 + a[1] as i64 * b[1] as i64 + a[2] as i64 * b[2] as i64
}

pub fn norm2(a: IVec3) -> i64 {
    dot(a, a)
}

/// True iff `a` is one of the six unit axis vectors.
pub fn is_unit_axis(a: IVec3) -> bool {
    norm2(a) == 1
}

pub fn vadd(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub fn vsub(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub fn vscale(a: Vec3, s: f64) -> Vec3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

pub fn vdot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn vnorm(a: Vec3) -> f64 {
    vdot(a, a).sqrt()
}

pub fn vdist(a: Vec3, b: Vec3) -> f64 {
    vnorm(vsub(a, b))
}

pub fn to_vec3(a: IVec3) -> Vec3 {
    [a[0] as f64, a[1] as f64, a[2] as f64]
}

/// One of the six unit axis directions, encoded `+x,-x,+y,-y,+z,-z`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Dir(u8);

impl Dir {
    /// Fixed enumeration order used everywhere a deterministic direction
    /// sweep is required.
    pub const ALL: [Dir; 6] = [Dir(0), Dir(1), Dir(2), Dir(3), Dir(4), Dir(5)];

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn vector(self) -> IVec3 {
        const V: [IVec3; 6] = [
            [1, 0, 0],
            [-1, 0, 0],
            [0, 1, 0],
            [0, -1, 0],
            [0, 0, 1],
            [0, 0, -1],
        ];
        V[self.0 as usize]
    }

    pub fn from_vector(v: IVec3) -> Option<Dir> {
        Dir::ALL.into_iter().find(|d| d.vector() == v)
    }

    pub fn opposite(self) -> Dir {
        Dir(self.0 ^ 1)
    }

    /// True iff the two directions are perpendicular axis vectors.
    pub fn perpendicular_to(self, other: Dir) -> bool {
        self.0 >> 1 != other.0 >> 1
    }
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 6] = ["+x", "-x", "+y", "-y", "+z", "-z"];
        f.write_str(NAMES[self.0 as usize])
    }
}

impl std::str::FromStr for Dir {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        const NAMES: [&str; 6] = ["+x", "-x", "+y", "-y", "+z", "-z"];
        NAMES
            .iter()
            .position(|n| *n == s)
            .map(|i| Dir(i as u8))
            .ok_or_else(|| format!("unknown direction {s:?}"))
    }
}

/// Orientation-preserving lattice rotation, stored as a signed
/// permutation: `(R v)[i] = sign[i] * v[perm[i]]`.
#[derive(Clone, Copy, Debug)]
pub struct Rotation {
    perm: [u8; 3],
    sign: [i32; 3],
}

impl Rotation {
    pub const IDENTITY: Rotation = Rotation {
        perm: [0, 1, 2],
        sign: [1, 1, 1],
    };

    pub fn apply(self, v: IVec3) -> IVec3 {
        [
            self.sign[0] * v[self.perm[0] as usize],
            self.sign[1] * v[self.perm[1] as usize],
            self.sign[2] * v[self.perm[2] as usize],
        ]
    }

    fn determinant(self) -> i32 {
        let p = self.perm;
        // parity of the permutation times product of signs
        let parity = if (p[0], p[1], p[2]) == (0, 1, 2)
            || (p[0], p[1], p[2]) == (1, 2, 0)
            || (p[0], p[1], p[2]) == (2, 0, 1)
        {
            1
        } else {
            -1
        };
        parity * self.sign[0] * self.sign[1] * self.sign[2]
    }
}

/// The 24 rotations of the orientation-preserving cubic isometry group.
pub fn proper_rotations() -> &'static [Rotation; 24] {
    static ROTS: LazyLock<[Rotation; 24]> = LazyLock::new(|| {
        let mut out = Vec::with_capacity(24);
        let perms: [[u8; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for perm in perms {
            for bits in 0..8u8 {
                let sign = [
                    if bits & 1 == 0 { 1 } else { -1 },
                    if bits & 2 == 0 { 1 } else { -1 },
                    if bits & 4 == 0 { 1 } else { -1 },
                ];
                let r = Rotation { perm, sign };
                if r.determinant() == 1 {
                    out.push(r);
                }
            }
        }
        out.try_into().expect("24 proper rotations")
    });
    &ROTS
}

/// For each direction index, the four rotations sending that direction to
/// `(-1,0,0)`, as indices into [`proper_rotations`]. This is the seed of
/// the canonicalization pruning: the lexicographically minimal vertex
/// stream always starts with the minimal unit vector.
pub fn rotations_to_minus_x() -> &'static [[u8; 4]; 6] {
    static TABLE: LazyLock<[[u8; 4]; 6]> = LazyLock::new(|| {
        let rots = proper_rotations();
        let mut table = [[0u8; 4]; 6];
        for (di, d) in Dir::ALL.iter().enumerate() {
            let mut hits = Vec::with_capacity(4);
            for (ri, r) in rots.iter().enumerate() {
                if r.apply(d.vector()) == [-1, 0, 0] {
                    hits.push(ri as u8);
                }
            }
            table[di] = hits.try_into().expect("4 rotations per direction");
        }
        table
    });
    &TABLE
}
