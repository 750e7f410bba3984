//! Partial motifs and deactivated codes.
//!
//! Deactivating a set of coordinates replaces every entry there with an
//! inactive mark (written `u` in text form) that compares only with itself.
//! A deactivated code is equivalent to the code on the remaining coordinates,
//! which is how its maximal partial motifs are computed.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::code::{Code, Word};
use crate::error::{Error, Result};
use crate::motif::{strip_middle_bar, Motif, Trit};

/// One partial-motif entry. The derived order is the canonical output order
/// 0 < 1 < * < u, not the lattice order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum PartialSym {
    /// Fixed 0.
    Zero,
    /// Fixed 1.
    One,
    /// Free position.
    Star,
    /// Deactivated position; comparable only with itself.
    Inactive,
}

impl PartialSym {
    /// The character used in text form (`u` marks an inactive position).
    #[must_use]
    pub fn to_char(self) -> char {
        match self {
            PartialSym::Zero => '0',
            PartialSym::One => '1',
            PartialSym::Star => '*',
            PartialSym::Inactive => 'u',
        }
    }

    /// Inverse of [`PartialSym::to_char`]; `†` is accepted as a synonym of `u`.
    pub fn from_char(c: char) -> Result<Self> {
        match c {
            '0' => Ok(PartialSym::Zero),
            '1' => Ok(PartialSym::One),
            '*' => Ok(PartialSym::Star),
            'u' | '†' => Ok(PartialSym::Inactive),
            other => Err(Error::Parse(format!("invalid partial motif symbol '{other}'"))),
        }
    }

    fn from_trit(t: Trit) -> Self {
        match t {
            Trit::Zero => PartialSym::Zero,
            Trit::One => PartialSym::One,
            Trit::Star => PartialSym::Star,
        }
    }
}

/// A string over {0, 1, *, u}.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialMotif {
    syms: Vec<PartialSym>,
}

impl PartialMotif {
    /// Wraps a symbol string.
    #[must_use]
    pub fn new(syms: Vec<PartialSym>) -> Self {
        PartialMotif { syms }
    }

    /// Lifts an ordinary motif (no inactive positions).
    #[must_use]
    pub fn from_motif(m: &Motif) -> Self {
        PartialMotif {
            syms: m.trits().iter().map(|t| PartialSym::from_trit(*t)).collect(),
        }
    }

    /// Number of positions.
    #[must_use]
    pub fn len(&self) -> usize {
        self.syms.len()
    }

    /// True for the (degenerate) length-0 partial motif.
    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.syms.is_empty()
    }

    /// Entry at 0-based position `p`.
    #[must_use]
    pub fn get(&self, p: usize) -> PartialSym {
        self.syms[p]
    }

    /// The entries as a slice.
    #[must_use]
    pub fn syms(&self) -> &[PartialSym] {
        &self.syms
    }

    /// The 1-based inactive positions.
    #[must_use]
    pub fn inactive_positions(&self) -> BTreeSet<usize> {
        (0..self.len())
            .filter(|&p| self.syms[p] == PartialSym::Inactive)
            .map(|p| p + 1)
            .collect()
    }

    /// True when no entry is a star, i.e. the motif is a single partial word.
    #[must_use]
    pub fn is_partial_word(&self) -> bool {
        self.syms.iter().all(|s| *s != PartialSym::Star)
    }

    /// Componentwise order: stars dominate fixed bits; inactive marks are
    /// comparable only with themselves.
    ///
    /// # Panics
    /// When the lengths differ.
    #[must_use]
    pub fn leq(&self, other: &PartialMotif) -> bool {
        assert_eq!(self.len(), other.len(), "partial motif lengths differ");
        self.syms.iter().zip(&other.syms).all(|(a, b)| {
            a == b
                || (*b == PartialSym::Star
                    && matches!(a, PartialSym::Zero | PartialSym::One))
        })
    }

    /// Iterates over the variety: stars are substituted, fixed bits and
    /// inactive marks stay.
    pub fn partial_words(&self) -> impl Iterator<Item = PartialMotif> + '_ {
        let stars: Vec<usize> = (0..self.len())
            .filter(|&p| self.syms[p] == PartialSym::Star)
            .collect();
        (0u32..1u32 << stars.len()).map(move |mask| {
            let mut syms = self.syms.clone();
            for (k, &p) in stars.iter().enumerate() {
                syms[p] = if mask >> k & 1 == 1 {
                    PartialSym::One
                } else {
                    PartialSym::Zero
                };
            }
            PartialMotif { syms }
        })
    }

    /// True when the variety is contained in the partial code.
    ///
    /// The motif's inactive positions must agree with the code's.
    pub fn is_par_mot_of(&self, code: &PartialCode) -> Result<bool> {
        if self.len() != code.len() {
            return Err(Error::LengthMismatch { expected: code.len(), found: self.len() });
        }
        let mine = self.inactive_positions();
        if mine != *code.inactive() {
            return Err(Error::InactiveMismatch {
                motif_inactive: format_set(&mine),
                code_inactive: format_set(code.inactive()),
            });
        }
        Ok(self.partial_words().all(|w| code.contains(&w)))
    }

    /// Parses text form; accepts an optional `|` at the middle of an
    /// even-length motif and `†` as a synonym of `u`.
    pub fn parse(s: &str) -> Result<Self> {
        let (body, bar_at) = strip_middle_bar(s.trim())?;
        if body.is_empty() {
            return Err(Error::Parse("empty partial motif".into()));
        }
        let syms: Vec<PartialSym> =
            body.chars().map(PartialSym::from_char).collect::<Result<_>>()?;
        if let Some(at) = bar_at {
            if !syms.len().is_multiple_of(2) || at != syms.len() / 2 {
                return Err(Error::Parse(format!(
                    "separator '|' must sit at the middle of an even-length motif: {s}"
                )));
            }
        }
        Ok(PartialMotif { syms })
    }
}

impl fmt::Display for PartialMotif {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.syms {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PartialMotif {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartialMotif({self})")
    }
}

impl FromStr for PartialMotif {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PartialMotif::parse(s)
    }
}

fn format_set(s: &BTreeSet<usize>) -> String {
    let items: Vec<String> = s.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// A code with a fixed set of deactivated coordinates: partial words with
/// inactive marks exactly there.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialCode {
    len: usize,
    inactive: BTreeSet<usize>,
    words: BTreeSet<PartialMotif>,
}

impl PartialCode {
    /// Validates and builds a partial code over 1-based `inactive` positions.
    pub fn new(
        len: usize,
        inactive: BTreeSet<usize>,
        words: Vec<PartialMotif>,
    ) -> Result<Self> {
        for &i in &inactive {
            if i == 0 || i > len {
                return Err(Error::IndexOutOfRange { index: i, len });
            }
        }
        for w in &words {
            if w.len() != len {
                return Err(Error::LengthMismatch { expected: len, found: w.len() });
            }
            if !w.is_partial_word() {
                return Err(Error::Parse(format!("not a partial word: {w}")));
            }
            if w.inactive_positions() != inactive {
                return Err(Error::InactiveMismatch {
                    motif_inactive: format_set(&w.inactive_positions()),
                    code_inactive: format_set(&inactive),
                });
            }
        }
        Ok(PartialCode { len, inactive, words: words.into_iter().collect() })
    }

    /// Ambient length (active and inactive positions together).
    #[must_use]
    pub fn len(&self) -> usize {
        self.len
    }

    /// True when the partial code has no words.
    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Number of partial words.
    #[must_use]
    pub fn card(&self) -> usize {
        self.words.len()
    }

    /// The 1-based deactivated positions.
    #[must_use]
    pub fn inactive(&self) -> &BTreeSet<usize> {
        &self.inactive
    }

    /// Membership test.
    #[must_use]
    pub fn contains(&self, w: &PartialMotif) -> bool {
        self.words.contains(w)
    }

    /// The partial words in canonical order.
    pub fn words(&self) -> impl Iterator<Item = &PartialMotif> + '_ {
        self.words.iter()
    }

    /// The maximal partial motifs, via the code on the active coordinates.
    pub fn max_par_mot(&self) -> Result<Vec<PartialMotif>> {
        let active: Vec<usize> = (0..self.len)
            .filter(|p| !self.inactive.contains(&(p + 1)))
            .collect();
        // Project each partial word onto the active coordinates.
        let projected = Code::from_iter(
            active.len(),
            self.words.iter().map(|w| {
                let mut word = Word::zero(active.len());
                for (k, &p) in active.iter().enumerate() {
                    if w.get(p) == PartialSym::One {
                        word = word.with_bit(k, true);
                    }
                }
                word
            }),
        );
        let motifs = projected.max_mot()?;
        // Re-insert the inactive marks.
        Ok(motifs
            .into_iter()
            .map(|m| {
                let mut syms = vec![PartialSym::Inactive; self.len];
                for (k, &p) in active.iter().enumerate() {
                    syms[p] = PartialSym::from_trit(m.get(k));
                }
                PartialMotif::new(syms)
            })
            .collect())
    }
}

impl Code {
    /// Replaces the 1-based coordinates in `idx` with inactive marks.
    pub fn deactivate(&self, idx: &BTreeSet<usize>) -> Result<PartialCode> {
        for &i in idx {
            if i == 0 || i > self.len() {
                return Err(Error::IndexOutOfRange { index: i, len: self.len() });
            }
        }
        let words = self
            .words()
            .map(|w| {
                let syms = (0..self.len())
                    .map(|p| {
                        if idx.contains(&(p + 1)) {
                            PartialSym::Inactive
                        } else if w.bit(p) {
                            PartialSym::One
                        } else {
                            PartialSym::Zero
                        }
                    })
                    .collect();
                PartialMotif::new(syms)
            })
            .collect();
        PartialCode::new(self.len(), idx.clone(), words)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(s: &str) -> PartialMotif {
        PartialMotif::parse(s).unwrap()
    }

    fn idx(items: &[usize]) -> BTreeSet<usize> {
        items.iter().copied().collect()
    }

    fn sample_code() -> Code {
        Code::parse(3, "000\n100\n110\n011").unwrap()
    }

    #[test]
    fn test_parse_and_display() {
        assert_eq!(pm("0u*").to_string(), "0u*");
        assert_eq!(PartialMotif::parse("0†*").unwrap(), pm("0u*"));
        assert!(PartialMotif::parse("0x*").is_err());
        assert!(PartialMotif::parse("").is_err());
    }

    #[test]
    fn test_deactivate() {
        let p = sample_code().deactivate(&idx(&[2])).unwrap();
        // 100 and 110 collapse to the same partial word.
        assert_eq!(p.card(), 3);
        assert!(p.contains(&pm("0u0")));
        assert!(p.contains(&pm("1u0")));
        assert!(p.contains(&pm("0u1")));
        assert!(sample_code().deactivate(&idx(&[4])).is_err());
        assert!(sample_code().deactivate(&idx(&[0])).is_err());
        // Deactivating nothing keeps the words as-is.
        let p0 = sample_code().deactivate(&idx(&[])).unwrap();
        assert_eq!(p0.card(), 4);
        assert!(p0.contains(&pm("110")));
    }

    #[test]
    fn test_max_par_mot() {
        let p = sample_code().deactivate(&idx(&[2])).unwrap();
        assert_eq!(p.max_par_mot().unwrap(), vec![pm("0u*"), pm("*u0")]);
        // All coordinates inactive: one all-inactive motif survives.
        let all = sample_code().deactivate(&idx(&[1, 2, 3])).unwrap();
        assert_eq!(all.max_par_mot().unwrap(), vec![pm("uuu")]);
        let none = Code::empty(3).deactivate(&idx(&[2])).unwrap();
        assert_eq!(none.max_par_mot().unwrap(), Vec::<PartialMotif>::new());
    }

    #[test]
    fn test_is_par_mot_of() {
        let p = sample_code().deactivate(&idx(&[2])).unwrap();
        assert!(pm("*u0").is_par_mot_of(&p).unwrap());
        assert!(pm("0u*").is_par_mot_of(&p).unwrap());
        assert!(!pm("*u*").is_par_mot_of(&p).unwrap());
        assert!(!pm("1u1").is_par_mot_of(&p).unwrap());
        // Mismatched inactive sets are an error, not `false`.
        assert!(matches!(
            pm("u0*").is_par_mot_of(&p),
            Err(Error::InactiveMismatch { .. })
        ));
        assert!(pm("*u").is_par_mot_of(&p).is_err());
    }

    #[test]
    fn test_leq_with_inactive() {
        assert!(pm("0u0").leq(&pm("*u0")));
        assert!(!pm("0u0").leq(&pm("**0"))); // u is not below *
        assert!(pm("uuu").leq(&pm("uuu")));
        assert!(!pm("000").leq(&pm("0u0")));
    }

    #[test]
    fn test_partial_code_validation() {
        // Words must carry the inactive marks exactly on the inactive set.
        assert!(PartialCode::new(3, idx(&[2]), vec![pm("00u")]).is_err());
        assert!(PartialCode::new(3, idx(&[2]), vec![pm("0u*")]).is_err());
        assert!(PartialCode::new(3, idx(&[2]), vec![pm("0u0")]).is_ok());
    }
}
