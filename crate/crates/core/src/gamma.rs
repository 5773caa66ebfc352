//! The binary dihedral group of order 12,
//! `⟨a, b | a^6 = 1, b^2 = a^3, ab = ba^{-1}⟩`,
//! with normal-form arithmetic.
//!
//! Elements are written `a^i b^j` with `0 <= i <= 5`, `0 <= j <= 1`; the
//! rewrite rules are `b a^k = a^{6-k} b` and `b^2 = a^3`.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GammaError {
    #[error("cannot parse {0:?} as a group element")]
    Parse(String),
}

/// Element `a^i b^j` of the binary dihedral group of order 12.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GammaElement {
    i: u8,
    j: u8,
}

/// The full 12x12 multiplication table, indexed by [`GammaElement::index`].
static TABLE: [[u8; 12]; 12] = build_table();

const fn mul_raw(x: (u8, u8), y: (u8, u8)) -> (u8, u8) {
    let (i1, j1) = x;
    let (i2, j2) = y;
    let (mut i, mut j);
    if j1 == 0 {
        i = (i1 + i2) % 6;
        j = j2;
    } else {
        // b a^k = a^{6-k} b
        i = (i1 + 6 - i2) % 6;
        j = 1 + j2;
    }
    if j == 2 {
        i = (i + 3) % 6;
        j = 0;
    }
    (i, j)
}

const fn build_table() -> [[u8; 12]; 12] {
    let mut t = [[0u8; 12]; 12];
    let mut x = 0;
    while x < 12 {
        let mut y = 0;
        while y < 12 {
            let (i, j) = mul_raw(((x % 6) as u8, (x / 6) as u8), ((y % 6) as u8, (y / 6) as u8));
            t[x][y] = i + 6 * j;
            y += 1;
        }
        x += 1;
    }
    t
}

impl GammaElement {
    pub const IDENTITY: GammaElement = GammaElement { i: 0, j: 0 };
    pub const A: GammaElement = GammaElement { i: 1, j: 0 };
    pub const B: GammaElement = GammaElement { i: 0, j: 1 };

    /// `a^i b^j` for arbitrary exponents, reduced to normal form using
    /// `a^6 = 1`, `b^2 = a^3`.
    pub fn ab(i: i64, j: i64) -> GammaElement {
        let i = i.rem_euclid(6) as u8;
        let jr = j.rem_euclid(4);
        // b^2 = a^3, b^3 = a^3 b, b^4 = 1
        let (extra, j) = match jr {
            0 => (0, 0),
            1 => (0, 1),
            2 => (3, 0),
            _ => (3, 1),
        };
        GammaElement { i: (i + extra) % 6, j }
    }

    pub fn exponents(self) -> (u8, u8) {
        (self.i, self.j)
    }

    /// Index in `0..12`, equal to `i + 6 j`. Used for permutation
    /// representations and table lookups.
    pub fn index(self) -> usize {
        self.i as usize + 6 * self.j as usize
    }

    pub fn from_index(k: usize) -> GammaElement {
        assert!(k < 12);
        GammaElement { i: (k % 6) as u8, j: (k / 6) as u8 }
    }

    pub fn all() -> impl Iterator<Item = GammaElement> {
        (0..12).map(GammaElement::from_index)
    }

    pub fn multiply(self, other: GammaElement) -> GammaElement {
        GammaElement::from_index(TABLE[self.index()][other.index()] as usize)
    }

    pub fn inverse(self) -> GammaElement {
        GammaElement::all()
            .find(|&y| self.multiply(y) == GammaElement::IDENTITY)
            .expect("every element has an inverse")
    }

    /// Least `k >= 1` with `x^k = e`.
    pub fn element_order(self) -> usize {
        let mut acc = self;
        let mut k = 1;
        while acc != GammaElement::IDENTITY {
            acc = acc.multiply(self);
            k += 1;
        }
        k
    }

    pub fn is_identity(self) -> bool {
        self == GammaElement::IDENTITY
    }

    /// String form "e", "a^i", "b" or "a^i b".
    pub fn name(self) -> String {
        match (self.i, self.j) {
            (0, 0) => "e".to_string(),
            (i, 0) => format!("a^{i}"),
            (0, _) => "b".to_string(),
            (i, _) => format!("a^{i} b"),
        }
    }

    pub fn parse(s: &str) -> Result<GammaElement, GammaError> {
        let t = s.trim().replace(' ', "");
        if t == "e" || t == "1" {
            return Ok(GammaElement::IDENTITY);
        }
        let (i, rest) = if let Some(r) = t.strip_prefix("a^") {
            let digits: String = r.chars().take_while(|c| c.is_ascii_digit()).collect();
            let i: u8 = digits.parse().map_err(|_| GammaError::Parse(s.to_string()))?;
            (i, &r[digits.len()..])
        } else if let Some(r) = t.strip_prefix('a') {
            (1, r)
        } else {
            (0, t.as_str())
        };
        match rest {
            "" => Ok(GammaElement::ab(i as i64, 0)),
            "b" => Ok(GammaElement::ab(i as i64, 1)),
            _ => Err(GammaError::Parse(s.to_string())),
        }
    }
}

impl fmt::Debug for GammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for GammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}
