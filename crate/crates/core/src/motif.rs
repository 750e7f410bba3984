//! Motifs: strings over {0, 1, *} ordered componentwise by 0 < *, 1 < *.
//!
//! A motif stands for the set of binary words obtained by substituting bits
//! for its stars (its *variety*). The componentwise order mirrors variety
//! containment, and componentwise addition makes motifs of a fixed length a
//! commutative monoid.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use crate::code::{Code, Word};
use crate::error::{Error, Result};

/// One motif entry: a fixed bit or a free position.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Trit {
    /// Fixed 0.
    Zero,
    /// Fixed 1.
    One,
    /// Free position; both bits are substituted.
    Star,
}

impl Trit {
    /// The character used in text form.
    #[must_use]
    pub fn to_char(self) -> char {
        match self {
            Trit::Zero => '0',
            Trit::One => '1',
            Trit::Star => '*',
        }
    }

    /// Inverse of [`Trit::to_char`].
    pub fn from_char(c: char) -> Result<Self> {
        match c {
            '0' => Ok(Trit::Zero),
            '1' => Ok(Trit::One),
            '*' => Ok(Trit::Star),
            other => Err(Error::Parse(format!("invalid motif symbol '{other}'"))),
        }
    }
}

/// A string over {0, 1, *}.
///
/// The derived `Ord` is the canonical output order: position by position with
/// 0 < 1 < *. The order of the motif lattice itself is [`Motif::leq`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Motif {
    trits: Vec<Trit>,
}

impl Motif {
    /// Wraps a trit string.
    #[must_use]
    pub fn new(trits: Vec<Trit>) -> Self {
        Motif { trits }
    }

    /// The all-stars motif of length `len`, the top of the order.
    #[must_use]
    pub fn all_stars(len: usize) -> Self {
        Motif {
            trits: vec![Trit::Star; len],
        }
    }

    /// The motif with the same fixed bits as `word` and no stars.
    #[must_use]
    pub fn from_word(word: &Word) -> Self {
        let trits = (0..word.len())
            .map(|p| if word.bit(p) { Trit::One } else { Trit::Zero })
            .collect();
        Motif { trits }
    }

    /// Number of positions.
    #[must_use]
    pub fn len(&self) -> usize {
        self.trits.len()
    }

    /// True for the (degenerate) length-0 motif.
    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.trits.is_empty()
    }

    /// Entry at 0-based position `p`.
    #[must_use]
    pub fn get(&self, p: usize) -> Trit {
        self.trits[p]
    }

    /// The entries as a slice.
    #[must_use]
    pub fn trits(&self) -> &[Trit] {
        &self.trits
    }

    /// Number of star entries.
    #[must_use]
    pub fn star_count(&self) -> usize {
        self.trits.iter().filter(|t| **t == Trit::Star).count()
    }

    /// 0-based positions carrying a star.
    #[must_use]
    pub fn star_positions(&self) -> Vec<usize> {
        (0..self.len()).filter(|&p| self.trits[p] == Trit::Star).collect()
    }

    /// True when every entry is a star.
    #[must_use]
    pub fn is_all_stars(&self) -> bool {
        self.trits.iter().all(|t| *t == Trit::Star)
    }

    /// True when no entry is a star, i.e. the motif is a single word.
    #[must_use]
    pub fn is_word(&self) -> bool {
        self.star_count() == 0
    }

    /// The word with the motif's fixed bits, if it has no stars.
    #[must_use]
    pub fn as_word(&self) -> Option<Word> {
        if !self.is_word() {
            return None;
        }
        let mut w = Word::zero(self.len());
        for (p, t) in self.trits.iter().enumerate() {
            if *t == Trit::One {
                w = w.with_bit(p, true);
            }
        }
        Some(w)
    }

    /// Componentwise order: `self <= other` with 0 < * and 1 < * in each slot.
    ///
    /// Equivalent to `self.variety()` being contained in `other.variety()`.
    ///
    /// # Panics
    /// When the lengths differ.
    #[must_use]
    pub fn leq(&self, other: &Motif) -> bool {
        assert_eq!(self.len(), other.len(), "motif lengths differ");
        self.trits
            .iter()
            .zip(&other.trits)
            .all(|(a, b)| *b == Trit::Star || a == b)
    }

    /// Swaps fixed 0s and 1s, leaving stars in place.
    #[must_use]
    pub fn bar(&self) -> Motif {
        let trits = self
            .trits
            .iter()
            .map(|t| match t {
                Trit::Zero => Trit::One,
                Trit::One => Trit::Zero,
                Trit::Star => Trit::Star,
            })
            .collect();
        Motif { trits }
    }

    /// True when some position fixes opposite bits in the two motifs.
    ///
    /// Disjoint motifs have disjoint varieties, and the sum of two motifs has
    /// a 1 entry exactly when they are disjoint.
    ///
    /// # Panics
    /// When the lengths differ.
    #[must_use]
    pub fn is_disjoint(&self, other: &Motif) -> bool {
        assert_eq!(self.len(), other.len(), "motif lengths differ");
        self.trits.iter().zip(&other.trits).any(|(a, b)| {
            matches!(
                (a, b),
                (Trit::Zero, Trit::One) | (Trit::One, Trit::Zero)
            )
        })
    }

    /// Iterates over the variety: every word obtained by substituting bits
    /// for the stars.
    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        let stars = self.star_positions();
        let mut base = Word::zero(self.len());
        for (p, t) in self.trits.iter().enumerate() {
            if *t == Trit::One {
                base = base.with_bit(p, true);
            }
        }
        (0u32..1u32 << stars.len()).map(move |mask| {
            let mut w = base;
            for (k, &p) in stars.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    w = w.with_bit(p, true);
                }
            }
            w
        })
    }

    /// The variety as a code.
    #[must_use]
    pub fn variety(&self) -> Code {
        Code::from_iter(self.len(), self.words())
    }

    /// True when the variety is contained in `code`.
    ///
    /// # Panics
    /// When the lengths differ.
    #[must_use]
    pub fn is_motif_of(&self, code: &Code) -> bool {
        assert_eq!(self.len(), code.len(), "motif and code lengths differ");
        // A variety of 2^s words cannot fit in a smaller code.
        let s = self.star_count();
        if s >= usize::BITS as usize || 1usize << s > code.card() {
            return false;
        }
        self.words().all(|w| code.contains(&w))
    }

    /// Parses text form: one symbol per position, optional `|` at the middle
    /// of an even-length motif.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, bar_at) = strip_middle_bar(s)?;
        if body.is_empty() {
            return Err(Error::Parse("empty motif".into()));
        }
        let trits: Vec<Trit> = body.chars().map(Trit::from_char).collect::<Result<_>>()?;
        if let Some(at) = bar_at {
            if !trits.len().is_multiple_of(2) || at != trits.len() / 2 {
                return Err(Error::Parse(format!(
                    "separator '|' must sit at the middle of an even-length motif: {s}"
                )));
            }
        }
        Ok(Motif { trits })
    }

    /// Text form with a `|` separator after the first half; for motifs living
    /// in a doubled space.
    #[must_use]
    pub fn to_doubled_string(&self) -> String {
        debug_assert!(self.len().is_multiple_of(2), "doubled rendering needs even length");
        let half = self.len() / 2;
        let mut out = String::with_capacity(self.len() + 1);
        for (p, t) in self.trits.iter().enumerate() {
            if p == half {
                out.push('|');
            }
            out.push(t.to_char());
        }
        out
    }
}

/// Removes a single `|` from `s` and reports its character position.
pub(crate) fn strip_middle_bar(s: &str) -> Result<(String, Option<usize>)> {
    let mut body = String::with_capacity(s.len());
    let mut bar_at = None;
    for c in s.chars() {
        if c == '|' {
            if bar_at.is_some() {
                return Err(Error::Parse(format!("more than one '|' in {s}")));
            }
            bar_at = Some(body.len());
        } else {
            body.push(c);
        }
    }
    Ok((body, bar_at))
}

impl Add<&Motif> for &Motif {
    type Output = Motif;

    /// Componentwise monoid addition: 0+0 = 0, 0+1 = 1, 1+1 = 0, and any
    /// entry added to * gives *.
    ///
    /// # Panics
    /// When the lengths differ.
    fn add(self, other: &Motif) -> Motif {
        assert_eq!(self.len(), other.len(), "motif lengths differ");
        let trits = self
            .trits
            .iter()
            .zip(&other.trits)
            .map(|(a, b)| match (a, b) {
                (Trit::Star, _) | (_, Trit::Star) => Trit::Star,
                (a, b) if a == b => Trit::Zero,
                _ => Trit::One,
            })
            .collect();
        Motif { trits }
    }
}

impl fmt::Display for Motif {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.trits {
            write!(f, "{}", t.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Motif {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Motif({self})")
    }
}

impl FromStr for Motif {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Motif::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Motif {
        Motif::parse(s).unwrap()
    }

    #[test]
    fn test_parse_and_display() {
        assert_eq!(m("01*").to_string(), "01*");
        assert_eq!(m("*0|0*").to_string(), "*00*");
        assert_eq!(m("*00*").to_doubled_string(), "*0|0*");
        assert!(Motif::parse("").is_err());
        assert!(Motif::parse("01x").is_err());
        assert!(Motif::parse("0|1*").is_err()); // separator off-middle
        assert!(Motif::parse("0|1|01").is_err());
    }

    #[test]
    fn test_leq() {
        assert!(m("111").leq(&m("1*1")));
        assert!(!m("1*1").leq(&m("111")));
        assert!(m("010").leq(&m("***")));
        assert!(!m("0*0").leq(&m("00*")));
        assert!(m("01").leq(&m("01")));
    }

    #[test]
    #[should_panic(expected = "lengths differ")]
    fn test_leq_length_mismatch() {
        let _ = m("01").leq(&m("011"));
    }

    #[test]
    fn test_add() {
        assert_eq!(&m("*00") + &m("*01"), m("*01"));
        assert_eq!(&m("11") + &m("11"), m("00"));
        assert_eq!(&m("0*") + &m("10"), m("1*"));
        assert_eq!(&m("101") + &m("000"), m("101"));
    }

    #[test]
    fn test_disjoint_iff_sum_has_one() {
        let motifs = ["*00", "1*1", "0*0", "***", "010"].map(m);
        for a in &motifs {
            for b in &motifs {
                let sum = a + b;
                let has_one = sum.trits().contains(&Trit::One);
                assert_eq!(a.is_disjoint(b), has_one, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn test_is_disjoint() {
        assert!(m("*00").is_disjoint(&m("1*1")));
        assert!(m("10").is_disjoint(&m("0*")));
        assert!(!m("*00").is_disjoint(&m("0*0")));
        assert!(!m("**").is_disjoint(&m("01")));
    }

    #[test]
    fn test_bar() {
        assert_eq!(m("01*").bar(), m("10*"));
        assert_eq!(m("***").bar(), m("***"));
        assert_eq!(m("01*").bar().bar(), m("01*"));
    }

    #[test]
    fn test_variety() {
        let v = m("*00*").variety();
        let want: Code = Code::parse(4, "0000\n1000\n0001\n1001").unwrap();
        assert_eq!(v, want);
        assert_eq!(m("101").variety().card(), 1);
        assert_eq!(m("***").variety().card(), 8);
    }

    #[test]
    fn test_variety_containment_matches_leq() {
        // Order/variety adjunction, exhaustive at length 3.
        let all: Vec<Motif> = crate::code::all_motifs(3).collect();
        for a in &all {
            for b in &all {
                let varieties = a.variety().is_subset(&b.variety());
                assert_eq!(a.leq(b), varieties, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn test_is_motif_of() {
        let c = Code::parse(3, "000\n001\n011\n111").unwrap();
        assert!(m("00*").is_motif_of(&c));
        assert!(m("*11").is_motif_of(&c));
        assert!(!m("0*0").is_motif_of(&c));
        assert!(!m("***").is_motif_of(&c));
    }

    #[test]
    fn test_canonical_order() {
        let mut v = ["0*1", "00*", "*11", "000"].map(m).to_vec();
        v.sort();
        let want = ["000", "00*", "0*1", "*11"].map(m).to_vec();
        assert_eq!(v, want);
    }
}
