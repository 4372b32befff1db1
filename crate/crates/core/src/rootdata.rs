//! The A2 root system in epsilon coordinates, the convex order on positive
//! roots, fundamental-weight bookkeeping and the six cotangent letters.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::Serialize;
use thiserror::Error;

use crate::ncpoly::Alphabet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("{0} is not a positive root")]
    NotPositive(Root),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
}

/// Integer vector `(a1, a2, a3)` with zero coordinate sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root(pub [i32; 3]);

impl Root {
    pub const ZERO: Root = Root([0, 0, 0]);
    pub const ALPHA1: Root = Root([1, -1, 0]);
    pub const ALPHA2: Root = Root([0, 1, -1]);
    pub const ALPHA12: Root = Root([1, 0, -1]);

    /// Builds `x*alpha1 + y*alpha2`.
    pub fn from_simple(x: i32, y: i32) -> Root {
        Root([x, y - x, -y])
    }

    /// Coordinates `(x, y)` with `self = x*alpha1 + y*alpha2`.
    pub fn simple_coords(self) -> (i32, i32) {
        (self.0[0], -self.0[2])
    }

    pub fn is_zero(self) -> bool {
        self == Root::ZERO
    }

    pub fn to_weight(self) -> Weight {
        let (x, y) = self.simple_coords();
        Weight::new(2 * x - y, -x + 2 * y)
    }
}

/// The vector `epsilon_k` for `k` in 1..=3. Not a root; used for the diagonal
/// right action.
pub fn epsilon(k: usize) -> [i32; 3] {
    let mut v = [0; 3];
    v[k - 1] = 1;
    v
}

impl Add for Root {
    type Output = Root;
    fn add(self, o: Root) -> Root {
        Root([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl Sub for Root {
    type Output = Root;
    fn sub(self, o: Root) -> Root {
        self + (-o)
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root([-self.0[0], -self.0[1], -self.0[2]])
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y) = self.simple_coords();
        if x == 0 && y == 0 {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (c, name) in [(x, "a1"), (y, "a2")] {
            if c == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push_str(if c > 0 { "+" } else { "-" });
            } else if c < 0 {
                out.push('-');
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(name);
        }
        f.write_str(&out)
    }
}

pub fn inner_product(b: Root, g: Root) -> i32 {
    b.0.iter().zip(g.0.iter()).map(|(x, y)| x * y).sum()
}

/// Pairing of a root with `epsilon_k`.
pub fn pair_epsilon(b: Root, k: usize) -> i32 {
    b.0[k - 1]
}

pub fn is_root(v: Root) -> bool {
    let mut s = v.0;
    s.sort();
    s == [-1, 0, 1]
}

/// Positive roots in convex order.
pub const POSITIVE_ROOTS: [Root; 3] = [Root::ALPHA2, Root::ALPHA12, Root::ALPHA1];

pub fn convex_compare(b: Root, g: Root) -> Result<Ordering, RootError> {
    let pos = |r: Root| POSITIVE_ROOTS.iter().position(|&p| p == r).ok_or(RootError::NotPositive(r));
    Ok(pos(b)?.cmp(&pos(g)?))
}

/// Fundamental-weight coordinates `m1*w1 + m2*w2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct Weight {
    pub m1: i32,
    pub m2: i32,
}

impl Weight {
    pub const ZERO: Weight = Weight { m1: 0, m2: 0 };

    pub fn new(m1: i32, m2: i32) -> Self {
        Weight { m1, m2 }
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight::new(self.m1 + o.m1, self.m2 + o.m2)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m1, self.m2)
    }
}

/// Weight of the matrix coefficient `u_ij`; depends only on the column `j`.
pub fn column_weight(j: usize) -> Weight {
    match j {
        1 => Weight::new(-1, 0),
        2 => Weight::new(1, -1),
        3 => Weight::new(0, 1),
        _ => panic!("column index {j} out of range"),
    }
}

/// Generators of the cotangent space, listed by alphabet rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Letter {
    F2,
    F12,
    F1,
    E2,
    E12,
    E1,
}

impl Letter {
    pub const ALL: [Letter; 6] = [Letter::F2, Letter::F12, Letter::F1, Letter::E2, Letter::E12, Letter::E1];

    pub fn rank(self) -> u8 {
        self as u8
    }

    pub fn from_rank(r: u8) -> Letter {
        Letter::ALL[r as usize]
    }

    pub fn name(self) -> &'static str {
        match self {
            Letter::F2 => "f2",
            Letter::F12 => "f12",
            Letter::F1 => "f1",
            Letter::E2 => "e2",
            Letter::E12 => "e12",
            Letter::E1 => "e1",
        }
    }

    pub fn parse(s: &str) -> Result<Letter, RootError> {
        Letter::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| RootError::UnknownLetter(s.to_string()))
    }

    pub fn is_e(self) -> bool {
        matches!(self, Letter::E2 | Letter::E12 | Letter::E1)
    }

    /// The positive root `gamma` of `e_gamma` or `f_gamma`.
    pub fn root(self) -> Root {
        match self {
            Letter::F2 | Letter::E2 => Root::ALPHA2,
            Letter::F12 | Letter::E12 => Root::ALPHA12,
            Letter::F1 | Letter::E1 => Root::ALPHA1,
        }
    }

    pub fn e(root: Root) -> Letter {
        match root {
            Root::ALPHA2 => Letter::E2,
            Root::ALPHA12 => Letter::E12,
            Root::ALPHA1 => Letter::E1,
            _ => panic!("{root} is not a positive root"),
        }
    }

    pub fn f(root: Root) -> Letter {
        Letter::e(root).star()
    }

    pub fn star(self) -> Letter {
        match self {
            Letter::F2 => Letter::E2,
            Letter::F12 => Letter::E12,
            Letter::F1 => Letter::E1,
            Letter::E2 => Letter::F2,
            Letter::E12 => Letter::F12,
            Letter::E1 => Letter::F1,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The six-letter alphabet of the exterior algebra, in rank order.
pub fn cotangent_alphabet() -> Alphabet {
    Alphabet::new(Letter::ALL.iter().map(|l| l.name())).expect("distinct letter names")
}

/// `e_gamma -> gamma`, `f_gamma -> -gamma`.
pub fn generator_weight(l: Letter) -> Root {
    if l.is_e() {
        l.root()
    } else {
        -l.root()
    }
}

pub fn word_weight(letters: &[u8]) -> Root {
    letters.iter().fold(Root::ZERO, |acc, &r| acc + generator_weight(Letter::from_rank(r)))
}

/// Row and column order of the root-sum table.
pub const TABLE_ROOTS: [Root; 6] = [
    Root::ALPHA1,
    Root::ALPHA2,
    Root::ALPHA12,
    Root([-1, 1, 0]),
    Root([0, -1, 1]),
    Root([-1, 0, 1]),
];

/// Sums `row + column` in simple-root coordinates, flagged when the sum is
/// again a root. Transcribed by hand.
pub const ROOT_SUM_TABLE: [[(i32, i32, bool); 6]; 6] = [
    [(2, 0, false), (1, 1, true), (2, 1, false), (0, 0, false), (1, -1, false), (0, -1, true)],
    [(1, 1, true), (0, 2, false), (1, 2, false), (-1, 1, false), (0, 0, false), (-1, 0, true)],
    [(2, 1, false), (1, 2, false), (2, 2, false), (0, 1, true), (1, 0, true), (0, 0, false)],
    [(0, 0, false), (-1, 1, false), (0, 1, true), (-2, 0, false), (-1, -1, true), (-2, -1, false)],
    [(1, -1, false), (0, 0, false), (1, 0, true), (-1, -1, true), (0, -2, false), (-1, -2, false)],
    [(0, -1, true), (-1, 0, true), (0, 0, false), (-2, -1, false), (-1, -2, false), (-2, -2, false)],
];

/// Recomputes the root-sum table from the root system.
pub fn root_sum_table() -> [[(i32, i32, bool); 6]; 6] {
    let mut t = [[(0, 0, false); 6]; 6];
    for (i, &a) in TABLE_ROOTS.iter().enumerate() {
        for (j, &b) in TABLE_ROOTS.iter().enumerate() {
            let s = a + b;
            let (x, y) = s.simple_coords();
            t[i][j] = (x, y, is_root(s));
        }
    }
    t
}
