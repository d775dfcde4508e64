//! Inclusive `A..B` ranges and the `(p, q, r)` grids built from them.

use std::fmt;
use std::str::FromStr;

use realsing_core::FamilyParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub lo: u64,
    pub hi: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanError(String);

impl fmt::Display for SpanError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "expected an inclusive range A..B with A <= B, got {:?}", self.0)
    }
}

impl std::error::Error for SpanError {}

impl FromStr for Span {
    type Err = SpanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SpanError(s.to_owned());
        let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
        let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        Ok(Span { lo, hi })
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl Span {
    pub fn iter(self) -> impl Iterator<Item = u64> {
        self.lo..=self.hi
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Grid {
    pub p: Span,
    pub q: Span,
    pub r: Span,
}

impl Grid {
    /// Valid triples in lexicographic order, and the number of grid points
    /// that were skipped because they violate a precondition.
    pub fn triples(&self) -> (Vec<FamilyParams>, usize) {
        let mut valid = Vec::new();
        let mut skipped = 0;
        for p in self.p.iter() {
            for q in self.q.iter() {
                for r in self.r.iter() {
                    match FamilyParams::new(p, q, r) {
                        Ok(fp) => valid.push(fp),
                        Err(_) => skipped += 1,
                    }
                }
            }
        }
        (valid, skipped)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_spans() {
        assert_eq!("2..12".parse::<Span>(), Ok(Span { lo: 2, hi: 12 }));
        assert_eq!("7..7".parse::<Span>(), Ok(Span { lo: 7, hi: 7 }));
        for bad in ["2-12", "12..2", "..4", "a..b", "3", ""] {
            assert!(bad.parse::<Span>().is_err(), "{bad}");
        }
    }

    #[test]
    fn triples_skip_invalid() {
        let g = Grid {
            p: "1..4".parse().unwrap(),
            q: "2..4".parse().unwrap(),
            r: "2..3".parse().unwrap(),
        };
        let (valid, skipped) = g.triples();
        assert_eq!(valid.len() + skipped, 4 * 3 * 2);
        // coprime pairs with p, q >= 2: (2,3), (3,2), (3,4), (4,3)
        assert_eq!(valid.len(), 4 * 2);
        let firsts: Vec<(String, String, String)> = valid
            .iter()
            .map(|f| (f.p.to_string(), f.q.to_string(), f.r.to_string()))
            .take(3)
            .collect();
        assert_eq!(firsts[0], ("2".into(), "3".into(), "2".into()));
        assert_eq!(firsts[2], ("3".into(), "2".into(), "2".into()));
    }
}
