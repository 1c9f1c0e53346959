use std::fmt::Write;

use crate::error::{Error, Result};
use crate::roots::{ColoredRoot, RootId, RootSystem};

/// A finite set of colored almost positive roots.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    members: Vec<ColoredRoot>,
}

impl Face {
    pub fn new(members: impl IntoIterator<Item = ColoredRoot>) -> Self {
        let mut members: Vec<ColoredRoot> = members.into_iter().collect();
        members.sort();
        members.dedup();
        Face { members }
    }

    pub fn empty() -> Self {
        Face::default()
    }

    pub fn members(&self) -> &[ColoredRoot] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: &ColoredRoot) -> bool {
        self.members.binary_search(v).is_ok()
    }

    /// Number of colored positive roots.
    pub fn positive_count(&self) -> usize {
        self.members.iter().filter(|v| v.is_positive()).count()
    }

    /// Number of negative simple roots.
    pub fn negative_count(&self) -> usize {
        self.len() - self.positive_count()
    }

    pub fn without(&self, v: &ColoredRoot) -> Face {
        Face {
            members: self.members.iter().filter(|x| *x != v).copied().collect(),
        }
    }

    pub fn union(&self, other: &Face) -> Face {
        Face::new(self.members.iter().chain(&other.members).copied())
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        self.members.iter().all(|v| other.contains(v))
    }

    pub fn validate(&self, rs: &RootSystem, m: u32) -> Result<()> {
        self.members.iter().try_for_each(|v| v.validate(rs, m))
    }

    /// Members sorted by `≺`, colors ascending within a root.
    pub fn ordered(&self, rs: &RootSystem) -> Vec<ColoredRoot> {
        let mut out = self.members.clone();
        out.sort_by_key(|v| (rs.position(v.root(rs)).unwrap_or(usize::MAX), v.color()));
        out
    }

    /// Parses `+i@c` (positive root with ρ-index `i`, color `c`) and `-j`
    /// (negative simple `σ_j`) tokens separated by commas.
    pub fn parse(rs: &RootSystem, m: u32, text: &str) -> Result<Face> {
        let bad = || Error::Parse {
            what: "face",
            input: text.to_string(),
        };
        let mut members = Vec::new();
        for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let v = if let Some(rest) = token.strip_prefix('+') {
                let (i, c) = rest.split_once('@').ok_or_else(bad)?;
                let i: usize = i.trim().parse().map_err(|_| bad())?;
                let c: u32 = c.trim().parse().map_err(|_| bad())?;
                if i == 0 || i > rs.num_positive() {
                    return Err(bad());
                }
                ColoredRoot::positive(RootId(i - 1), c)
            } else if let Some(rest) = token.strip_prefix('-') {
                let j: usize = rest.trim().parse().map_err(|_| bad())?;
                if j == 0 || j > rs.rank() {
                    return Err(bad());
                }
                ColoredRoot::negative(j - 1)
            } else {
                return Err(bad());
            };
            v.validate(rs, m)?;
            members.push(v);
        }
        Ok(Face::new(members))
    }

    /// Inverse of [`Face::parse`], listing members in `≺` order.
    pub fn format(&self, rs: &RootSystem) -> String {
        let mut s = String::new();
        for (k, v) in self.ordered(rs).iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            match *v {
                ColoredRoot::Positive { root, color } => {
                    write!(s, "+{}@{}", root.0 + 1, color).unwrap();
                }
                ColoredRoot::NegativeSimple { simple } => write!(s, "-{}", simple + 1).unwrap(),
            }
        }
        s
    }
}

impl FromIterator<ColoredRoot> for Face {
    fn from_iter<I: IntoIterator<Item = ColoredRoot>>(iter: I) -> Self {
        Face::new(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        let rs: RootSystem = "A2".parse().unwrap();
        let f = Face::parse(&rs, 2, "+3@2, +2@1").unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.format(&rs), "+2@1,+3@2");
        assert_eq!(Face::parse(&rs, 2, "").unwrap(), Face::empty());
        let g = Face::parse(&rs, 1, "-2,+1@1").unwrap();
        assert_eq!(g.negative_count(), 1);
        assert_eq!(g.format(&rs), "-2,+1@1");
        for bad in ["+4@1", "+1", "x", "-3", "-0", "+1@x"] {
            assert!(matches!(Face::parse(&rs, 2, bad), Err(Error::Parse { .. })), "{bad}");
        }
        assert_eq!(
            Face::parse(&rs, 2, "+1@3"),
            Err(Error::ColorOutOfRange { color: 3, m: 2 })
        );
    }
}
