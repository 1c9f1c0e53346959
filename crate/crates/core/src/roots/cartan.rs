use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::{QMatrix, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// An irreducible crystallographic Cartan type such as `B3` or `E6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 2,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn coxeter_number(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n + 1,
            Family::B | Family::C => 2 * n,
            Family::D => 2 * n - 2,
            Family::E => match n {
                6 => 12,
                7 => 18,
                _ => 30,
            },
            Family::F => 12,
            Family::G => 6,
        }
    }

    /// Exponents in weakly increasing order.
    pub fn exponents(self) -> Vec<usize> {
        let n = self.rank;
        let mut e = match self.family {
            Family::A => (1..=n).collect(),
            Family::B | Family::C => (0..n).map(|i| 2 * i + 1).collect(),
            Family::D => {
                let mut e: Vec<usize> = (0..n - 1).map(|i| 2 * i + 1).collect();
                e.push(n - 1);
                e
            }
            Family::E => match n {
                6 => vec![1, 4, 5, 7, 8, 11],
                7 => vec![1, 5, 7, 9, 11, 13, 17],
                _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
            },
            Family::F => vec![1, 5, 7, 11],
            Family::G => vec![1, 5],
        };
        e.sort_unstable();
        e
    }

    /// Symmetric Gram matrix of the simple roots in Bourbaki numbering.
    ///
    /// Long roots of the simply-laced and B/C/F families have squared length
    /// 2; the remaining lengths are chosen so that every entry is rational.
    pub fn gram(self) -> QMatrix {
        let n = self.rank;
        let int = |k: i64| Rational::from_integer(k.into());
        let half = || Rational::new((-1).into(), 2.into());
        let mut g = QMatrix::zeros(n, n);
        let link = |g: &mut QMatrix, i: usize, j: usize, v: Rational| {
            g.set(i, j, v.clone());
            g.set(j, i, v);
        };
        match self.family {
            Family::A => {
                for i in 0..n {
                    g.set(i, i, int(2));
                }
                for i in 1..n {
                    link(&mut g, i - 1, i, int(-1));
                }
            }
            Family::B => {
                for i in 0..n {
                    g.set(i, i, int(if i + 1 == n { 1 } else { 2 }));
                }
                for i in 1..n {
                    link(&mut g, i - 1, i, int(-1));
                }
            }
            Family::C => {
                for i in 0..n {
                    g.set(i, i, int(if i + 1 == n { 2 } else { 1 }));
                }
                for i in 1..n {
                    let v = if i + 1 == n { int(-1) } else { half() };
                    link(&mut g, i - 1, i, v);
                }
            }
            Family::D => {
                for i in 0..n {
                    g.set(i, i, int(2));
                }
                if n >= 3 {
                    for i in 1..n - 1 {
                        link(&mut g, i - 1, i, int(-1));
                    }
                    link(&mut g, n - 3, n - 1, int(-1));
                }
            }
            Family::E => {
                // 1 - 3 - 4 - 5 - 6 (- 7 - 8), with 2 attached to 4
                for i in 0..n {
                    g.set(i, i, int(2));
                }
                link(&mut g, 0, 2, int(-1));
                link(&mut g, 1, 3, int(-1));
                for i in 3..n {
                    link(&mut g, i - 1, i, int(-1));
                }
            }
            Family::F => {
                g.set(0, 0, int(2));
                g.set(1, 1, int(2));
                g.set(2, 2, int(1));
                g.set(3, 3, int(1));
                link(&mut g, 0, 1, int(-1));
                link(&mut g, 1, 2, int(-1));
                link(&mut g, 2, 3, half());
            }
            Family::G => {
                g.set(0, 0, int(2));
                g.set(1, 1, int(6));
                link(&mut g, 0, 1, int(-3));
            }
        }
        g
    }

    /// Identifies a connected Cartan type from its rank, number of positive
    /// roots and squared simple-root lengths.
    pub(crate) fn classify(rank: usize, positive_roots: usize, lengths: &[Rational]) -> Result<Self> {
        let n = rank;
        let unknown = || Error::Invariant(format!("unrecognised root system: rank {n}, {positive_roots} positive roots"));
        let max = lengths.iter().max().cloned().unwrap_or_else(Rational::one);
        let short = lengths.iter().filter(|l| **l != max).count();
        let family = if short == 0 {
            if positive_roots == n * (n + 1) / 2 {
                Family::A
            } else if n >= 4 && positive_roots == n * (n - 1) {
                Family::D
            } else if matches!((n, positive_roots), (6, 36) | (7, 63) | (8, 120)) {
                Family::E
            } else {
                return Err(unknown());
            }
        } else if n == 2 && positive_roots == 6 {
            Family::G
        } else if n == 4 && positive_roots == 24 {
            Family::F
        } else if positive_roots == n * n {
            if short == 1 {
                Family::B
            } else {
                Family::C
            }
        } else {
            return Err(unknown());
        };
        CartanType::new(family, n)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = || Error::Parse {
            what: "Cartan type",
            input: s.to_string(),
        };
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars.next().and_then(Family::from_letter).ok_or_else(parse_err)?;
        let rank: usize = chars.as_str().parse().map_err(|_| parse_err())?;
        CartanType::new(family, rank)
    }
}

/// A possibly reducible root system given as a list of Cartan types, written
/// `A2`, `B3`, `A1xA2`, ... (case-insensitive).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootSystemSpec {
    components: Vec<CartanType>,
}

impl RootSystemSpec {
    pub fn new(components: Vec<CartanType>) -> Self {
        RootSystemSpec { components }
    }

    pub fn components(&self) -> &[CartanType] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank()).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }
}

impl FromStr for RootSystemSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::Parse {
                what: "root system",
                input: s.to_string(),
            });
        }
        let components = s
            .split(['x', 'X', '*'])
            .map(str::parse)
            .collect::<Result<Vec<_>>>()?;
        Ok(RootSystemSpec { components })
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{c}")?;
        }
        if self.components.is_empty() {
            f.write_str("0")?;
        }
        Ok(())
    }
}

pub(crate) fn is_zero_entry(g: &QMatrix, i: usize, j: usize) -> bool {
    g.get(i, j).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_products_case_insensitively() {
        let spec: RootSystemSpec = "a1Xb3".parse().unwrap();
        assert_eq!(spec.to_string(), "A1xB3");
        assert_eq!(spec.rank(), 4);
        assert!("Q9".parse::<RootSystemSpec>().is_err());
        assert!("".parse::<RootSystemSpec>().is_err());
        assert!("A".parse::<RootSystemSpec>().is_err());
        assert!(matches!("E9".parse::<RootSystemSpec>(), Err(Error::InvalidRank { .. })));
        assert!("B1".parse::<RootSystemSpec>().is_err());
        assert!("F3".parse::<RootSystemSpec>().is_err());
        assert!("A0".parse::<RootSystemSpec>().is_err());
    }

    #[test]
    fn exponents_sum_to_positive_root_count() {
        for s in ["A1", "A4", "B3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let t: CartanType = s.parse().unwrap();
            let e = t.exponents();
            assert_eq!(e.len(), t.rank());
            // ∑ e_i = N = nh/2
            assert_eq!(e.iter().sum::<usize>() * 2, t.rank() * t.coxeter_number(), "{s}");
            // e_i + e_{n+1-i} = h
            for (a, b) in e.iter().zip(e.iter().rev()) {
                assert_eq!(a + b, t.coxeter_number(), "{s}");
            }
        }
    }

    #[test]
    fn gram_matrices_are_symmetric() {
        for s in ["A3", "B3", "C3", "D4", "E6", "F4", "G2"] {
            let g = s.parse::<CartanType>().unwrap().gram();
            assert_eq!(g, g.transpose(), "{s}");
        }
    }
}
