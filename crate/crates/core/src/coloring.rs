use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::{RadoError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

/// A total red/blue coloring of `[n] = {1, ..., n}`. Blue is the complement of red.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring", into = "RawColoring")]
pub struct Coloring {
    n: usize,
    red: BitSet,
}

impl Coloring {
    /// The coloring of `[0]`.
    pub fn empty() -> Self {
        Self {
            n: 0,
            red: BitSet::default(),
        }
    }

    pub fn new(n: usize, red: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set = BitSet::with_len(n + 1);
        for x in red {
            if x == 0 || x > n {
                return Err(RadoError::MalformedColoring(format!(
                    "red element {x} outside [1, {n}]"
                )));
            }
            set.insert(x);
        }
        Ok(Self { n, red: set })
    }

    pub fn all(n: usize, color: Color) -> Self {
        match color {
            Color::Red => Self::new(n, 1..=n).expect("in range"),
            Color::Blue => Self::new(n, []).expect("in range"),
        }
    }

    /// Builds a coloring from explicit colors of `1, 2, ..., colors.len()`.
    pub fn from_colors(colors: &[Color]) -> Self {
        let red = colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == Color::Red)
            .map(|(i, _)| i + 1);
        Self::new(colors.len(), red).expect("in range")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Color of `x`, or `None` outside `[n]`.
    pub fn color_of(&self, x: u64) -> Option<Color> {
        let x = usize::try_from(x).ok()?;
        if x == 0 || x > self.n {
            None
        } else if self.red.contains(x) {
            Some(Color::Red)
        } else {
            Some(Color::Blue)
        }
    }

    pub fn red(&self) -> Vec<usize> {
        self.red.iter().collect()
    }

    pub fn blue(&self) -> Vec<usize> {
        (1..=self.n).filter(|&x| !self.red.contains(x)).collect()
    }

    /// Elements of one color class, ascending.
    pub fn class(&self, color: Color) -> Vec<usize> {
        match color {
            Color::Red => self.red(),
            Color::Blue => self.blue(),
        }
    }

    pub fn colors(&self) -> Vec<Color> {
        (1..=self.n)
            .map(|x| self.color_of(x as u64).expect("in range"))
            .collect()
    }

    /// Exchanges red and blue.
    pub fn swapped(&self) -> Self {
        Self::new(self.n, self.blue()).expect("in range")
    }

    /// Restriction to `[k]`, `k <= n`.
    pub fn prefix(&self, k: usize) -> Self {
        let k = k.min(self.n);
        Self::new(k, self.red.iter().take_while(|&x| x <= k)).expect("in range")
    }

    /// Appends `n + 1` with the given color.
    pub fn extended(&self, color: Color) -> Self {
        let mut next = self.clone();
        next.n += 1;
        if color == Color::Red {
            next.red.insert(next.n);
        }
        next
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_set = |v: Vec<usize>| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "[{}]: R={{{}}} B={{{}}}",
            self.n,
            fmt_set(self.red()),
            fmt_set(self.blue())
        )
    }
}

#[derive(Serialize, Deserialize)]
struct RawColoring {
    n: usize,
    red: Vec<usize>,
}

impl TryFrom<RawColoring> for Coloring {
    type Error = RadoError;

    fn try_from(raw: RawColoring) -> Result<Self> {
        Coloring::new(raw.n, raw.red)
    }
}

impl From<Coloring> for RawColoring {
    fn from(c: Coloring) -> Self {
        RawColoring {
            n: c.n,
            red: c.red(),
        }
    }
}
