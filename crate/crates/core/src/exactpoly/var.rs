//! Variables and their fixed total order.

use std::fmt;

use crate::subset::SubsetIndex;

/// Named variables outside the indexed universes.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Named {
    X,
    Y,
    Z,
    W,
    T,
    ZElim,
}

impl Named {
    const ALL: [Named; 6] = [Named::X, Named::Y, Named::Z, Named::W, Named::T, Named::ZElim];

    pub fn name(self) -> &'static str {
        match self {
            Named::X => "x",
            Named::Y => "y",
            Named::Z => "z",
            Named::W => "w",
            Named::T => "t",
            Named::ZElim => "z_elim",
        }
    }
}

/// The universe a variable belongs to.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Universe {
    /// Principal-minor coordinates `A_I`.
    A,
    /// Cycle-sum coordinates `C_I`.
    C,
    /// Matrix entries `x_ij`.
    X,
    /// Entries `a_ijkl` of a 2x2x2x2 table.
    T,
    Named,
}

const TAG_SHIFT: u16 = 12;
const IDX_MASK: u16 = (1 << TAG_SHIFT) - 1;

/// A variable, packed into 16 bits: a universe tag and an index.
///
/// The numeric order of the packed value is the fixed variable order: the
/// smallest value is the "largest" variable in the term order. Within `A`
/// and `C` the index is the canonical subset rank, within `X` it is
/// `8 (i - 1) + (j - 1)`, within `T` it is the binary value of `ijkl`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u16);

impl Var {
    fn pack(u: Universe, idx: u16) -> Self {
        let tag = match u {
            Universe::A => 0,
            Universe::C => 1,
            Universe::X => 2,
            Universe::T => 3,
            Universe::Named => 4,
        };
        Var((tag << TAG_SHIFT) | idx)
    }

    pub fn a(s: SubsetIndex) -> Self {
        Self::pack(Universe::A, s.rank() as u16)
    }

    pub fn c(s: SubsetIndex) -> Self {
        Self::pack(Universe::C, s.rank() as u16)
    }

    /// Matrix entry `x_ij`, 1-based indices.
    pub fn x(i: usize, j: usize) -> Self {
        assert!((1..=8).contains(&i) && (1..=8).contains(&j));
        Self::pack(Universe::X, ((i - 1) * 8 + (j - 1)) as u16)
    }

    /// Table entry `a_ijkl` addressed by its binary value `8i + 4j + 2k + l`.
    pub fn t(bits: u8) -> Self {
        assert!(bits < 16);
        Self::pack(Universe::T, bits as u16)
    }

    pub fn named(n: Named) -> Self {
        Self::pack(Universe::Named, n as u16)
    }

    pub fn raw(self) -> u16 {
        self.0
    }

    pub fn universe(self) -> Universe {
        match self.0 >> TAG_SHIFT {
            0 => Universe::A,
            1 => Universe::C,
            2 => Universe::X,
            3 => Universe::T,
            _ => Universe::Named,
        }
    }

    fn index(self) -> u16 {
        self.0 & IDX_MASK
    }

    /// The subset of an `A` or `C` variable.
    pub fn subset(self) -> Option<SubsetIndex> {
        match self.universe() {
            Universe::A | Universe::C => Some(SubsetIndex::from_rank(self.index() as u8)),
            _ => None,
        }
    }

    /// The (row, column) of an `X` variable, 1-based.
    pub fn entry(self) -> Option<(usize, usize)> {
        (self.universe() == Universe::X).then(|| {
            let k = self.index() as usize;
            (k / 8 + 1, k % 8 + 1)
        })
    }

    pub fn table_bits(self) -> Option<u8> {
        (self.universe() == Universe::T).then(|| self.index() as u8)
    }

    pub fn named_kind(self) -> Option<Named> {
        (self.universe() == Universe::Named).then(|| Named::ALL[self.index() as usize])
    }

    /// Parses the textual forms produced by `Display`.
    pub fn parse(s: &str) -> Option<Self> {
        fn braced(s: &str, prefix: &str) -> Option<String> {
            let rest = s.strip_prefix(prefix)?;
            let inner = rest.strip_prefix('{')?.strip_suffix('}')?;
            Some(inner.to_string())
        }
        if let Some(inner) = braced(s, "A_") {
            return SubsetIndex::parse_digits(&inner).map(Var::a);
        }
        if let Some(inner) = braced(s, "C_") {
            return SubsetIndex::parse_digits(&inner).map(Var::c);
        }
        if let Some(inner) = braced(s, "x_") {
            let d: Vec<usize> = inner.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>()?;
            if d.len() != 2 || !(1..=8).contains(&d[0]) || !(1..=8).contains(&d[1]) {
                return None;
            }
            return Some(Var::x(d[0], d[1]));
        }
        if let Some(inner) = braced(s, "a_") {
            if inner.len() != 4 || !inner.chars().all(|c| c == '0' || c == '1') {
                return None;
            }
            return u8::from_str_radix(&inner, 2).ok().map(Var::t);
        }
        Named::ALL.iter().find(|n| n.name() == s).map(|n| Var::named(*n))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.universe() {
            Universe::A => write!(f, "A_{{{}}}", self.subset().unwrap().digits()),
            Universe::C => write!(f, "C_{{{}}}", self.subset().unwrap().digits()),
            Universe::X => {
                let (i, j) = self.entry().unwrap();
                write!(f, "x_{{{i}{j}}}")
            }
            Universe::T => write!(f, "a_{{{:04b}}}", self.index()),
            Universe::Named => write!(f, "{}", self.named_kind().unwrap().name()),
        }
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand: `A_I` from a digit string, e.g. `avar("12")`.
pub fn avar(digits: &str) -> Var {
    Var::a(SubsetIndex::parse_digits(digits).expect("bad subset digits"))
}

/// Shorthand: `C_I` from a digit string.
pub fn cvar(digits: &str) -> Var {
    Var::c(SubsetIndex::parse_digits(digits).expect("bad subset digits"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_parse_roundtrip() {
        let vars = [
            avar(""),
            avar("1234"),
            cvar("13"),
            Var::x(2, 3),
            Var::t(0b0110),
            Var::named(Named::ZElim),
        ];
        for v in vars {
            assert_eq!(Var::parse(&v.to_string()), Some(v), "{v}");
        }
    }

    #[test]
    fn order_within_universe() {
        assert!(avar("") < avar("1"));
        assert!(avar("4") < avar("12"));
        assert!(avar("34") < avar("123"));
        assert!(Var::x(1, 2) < Var::x(2, 1));
        assert!(avar("1234") < cvar(""));
    }
}
