//! Binary words, codes, and the maximal-motif machinery.
//!
//! A code is a finite set of equal-length binary words. Its maximal motifs
//! form an antichain whose varieties cover the code exactly; the maximal
//! motifs of the complement are recovered from them by a minimal-transversal
//! search rather than by scanning the whole motif space.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::motif::{strip_middle_bar, Motif, Trit};

/// Cap on `3^len` motif enumeration on the main path.
pub const MOTIF_ENUM_CAP: usize = 12;
/// Cap on `2^len` ambient-space enumeration (complements, evaluation).
pub const AMBIENT_ENUM_CAP: usize = 20;
/// Longest representable word; doubled spaces over the motif cap stay inside it.
pub const MAX_WORD_LEN: usize = 24;

/// A binary word, packed most-significant-bit first so that the derived
/// order agrees with string order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    len: u8,
    bits: u32,
}

impl Word {
    /// The all-zero word.
    #[must_use]
    pub fn zero(len: usize) -> Self {
        assert!(len <= MAX_WORD_LEN, "word length {len} above desk scale");
        Word { len: len as u8, bits: 0 }
    }

    /// Builds a word from its integer value, bit `len-1` first.
    #[must_use]
    pub fn from_bits(len: usize, bits: u32) -> Self {
        assert!(len <= MAX_WORD_LEN, "word length {len} above desk scale");
        assert!(len == 32 || bits < 1 << len, "value {bits} too wide for length {len}");
        Word { len: len as u8, bits }
    }

    /// Number of positions.
    #[must_use]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    /// True for the empty (length-0) word.
    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The bit at 0-based position `p` (leftmost position is 0).
    #[must_use]
    pub fn bit(&self, p: usize) -> bool {
        assert!(p < self.len(), "position {p} out of range");
        self.bits >> (self.len() - 1 - p) & 1 == 1
    }

    /// Copy with the bit at 0-based position `p` set to `v`.
    #[must_use]
    pub fn with_bit(&self, p: usize, v: bool) -> Self {
        assert!(p < self.len(), "position {p} out of range");
        let mask = 1 << (self.len() - 1 - p);
        Word {
            len: self.len,
            bits: if v { self.bits | mask } else { self.bits & !mask },
        }
    }

    /// The word's integer value (leftmost position most significant).
    #[must_use]
    pub fn value(&self) -> u32 {
        self.bits
    }

    /// The word with every bit flipped.
    #[must_use]
    pub fn flipped(&self) -> Self {
        let mask = ((1u64 << self.len) - 1) as u32;
        Word { len: self.len, bits: !self.bits & mask }
    }

    /// Parses a binary word; a `|` at the middle of an even-length word is
    /// accepted and ignored.
    pub fn parse(s: &str) -> Result<Self> {
        let (body, bar_at) = strip_middle_bar(s.trim())?;
        if body.is_empty() {
            return Err(Error::Parse("empty word".into()));
        }
        if body.len() > MAX_WORD_LEN {
            return Err(Error::OverCap {
                len: body.len(),
                cap: MAX_WORD_LEN,
                what: "word length",
            });
        }
        if let Some(at) = bar_at {
            if !body.len().is_multiple_of(2) || at != body.len() / 2 {
                return Err(Error::Parse(format!(
                    "separator '|' must sit at the middle of an even-length word: {s}"
                )));
            }
        }
        let mut w = Word::zero(body.len());
        for (p, c) in body.chars().enumerate() {
            match c {
                '0' => {}
                '1' => w = w.with_bit(p, true),
                other => return Err(Error::Parse(format!("invalid word symbol '{other}'"))),
            }
        }
        Ok(w)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in 0..self.len() {
            write!(f, "{}", if self.bit(p) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// A finite set of equal-length binary words.
#[derive(Clone, PartialEq, Eq)]
pub struct Code {
    len: usize,
    words: BTreeSet<Word>,
}

impl Code {
    /// The empty code in the length-`len` ambient space.
    #[must_use]
    pub fn empty(len: usize) -> Self {
        Code { len, words: BTreeSet::new() }
    }

    /// Collects words, deduplicating; every word must have length `len`.
    ///
    /// # Panics
    /// When a word has the wrong length.
    pub fn from_iter<I: IntoIterator<Item = Word>>(len: usize, words: I) -> Self {
        let words: BTreeSet<Word> = words
            .into_iter()
            .inspect(|w| assert_eq!(w.len(), len, "word length differs from code length"))
            .collect();
        Code { len, words }
    }

    /// Builds a code, reporting (rather than panicking on) ragged lengths.
    pub fn new(len: usize, words: Vec<Word>) -> Result<Self> {
        for w in &words {
            if w.len() != len {
                return Err(Error::LengthMismatch { expected: len, found: w.len() });
            }
        }
        Ok(Self::from_iter(len, words))
    }

    /// Every word of the ambient space.
    pub fn full(len: usize) -> Result<Self> {
        if len > AMBIENT_ENUM_CAP {
            return Err(Error::OverCap { len, cap: AMBIENT_ENUM_CAP, what: "ambient space enumeration" });
        }
        Ok(Code::from_iter(len, (0..1u32 << len).map(|b| Word::from_bits(len, b))))
    }

    /// Ambient word length.
    #[must_use]
    pub fn len(&self) -> usize {
        self.len
    }

    /// Number of words.
    #[must_use]
    pub fn card(&self) -> usize {
        self.words.len()
    }

    /// True when the code has no words.
    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// True when the code is the whole ambient space.
    #[must_use]
    pub fn is_full(&self) -> bool {
        self.len < usize::BITS as usize && self.card() == 1 << self.len
    }

    /// Membership test.
    #[must_use]
    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    /// The words in sorted order.
    pub fn words(&self) -> impl Iterator<Item = &Word> + '_ {
        self.words.iter()
    }

    /// Adds a word.
    ///
    /// # Panics
    /// When the word length differs from the code length.
    pub fn insert(&mut self, w: Word) {
        assert_eq!(w.len(), self.len, "word length differs from code length");
        self.words.insert(w);
    }

    /// True when every word of `self` lies in `other`.
    #[must_use]
    pub fn is_subset(&self, other: &Code) -> bool {
        self.words.is_subset(&other.words)
    }

    /// True when the two codes share no word.
    #[must_use]
    pub fn is_disjoint_from(&self, other: &Code) -> bool {
        self.words.is_disjoint(&other.words)
    }

    /// The set complement within the ambient space.
    pub fn complement(&self) -> Result<Code> {
        if self.len > AMBIENT_ENUM_CAP {
            return Err(Error::OverCap { len: self.len, cap: AMBIENT_ENUM_CAP, what: "ambient space enumeration" });
        }
        let words = (0..1u32 << self.len)
            .map(|b| Word::from_bits(self.len, b))
            .filter(|w| !self.contains(w));
        Ok(Code::from_iter(self.len, words))
    }

    /// The code with every bit of every word flipped.
    #[must_use]
    pub fn flipped(&self) -> Code {
        Code::from_iter(self.len, self.words.iter().map(Word::flipped))
    }

    /// The maximal motifs: the antichain of motifs of the code whose
    /// varieties jointly cover it.
    ///
    /// Enumerates motifs by descending star count, keeping a candidate when
    /// it is not below an already-kept motif and its variety fits in the
    /// code. Same-star-count motifs are incomparable unless equal, so the
    /// sweep keeps exactly the maximal ones.
    pub fn max_mot(&self) -> Result<Vec<Motif>> {
        let n = self.len;
        if n > MOTIF_ENUM_CAP {
            return Err(Error::OverCap { len: n, cap: MOTIF_ENUM_CAP, what: "maximal motif enumeration" });
        }
        if self.is_empty() {
            return Ok(Vec::new());
        }
        let mut kept: Vec<Motif> = Vec::new();
        for s in (0..=n).rev() {
            // A variety of 2^s words cannot fit in a smaller code.
            if 1usize << s > self.card() {
                continue;
            }
            for stars in (0..n).combinations(s) {
                let fixed: Vec<usize> = (0..n).filter(|p| !stars.contains(p)).collect();
                for mask in 0u32..1 << fixed.len() {
                    let mut trits = vec![Trit::Star; n];
                    for (k, &p) in fixed.iter().enumerate() {
                        trits[p] = if mask >> k & 1 == 1 { Trit::One } else { Trit::Zero };
                    }
                    let cand = Motif::new(trits);
                    if kept.iter().any(|kept_m| cand.leq(kept_m)) {
                        continue;
                    }
                    if cand.is_motif_of(self) {
                        kept.push(cand);
                    }
                }
            }
        }
        kept.sort();
        Ok(kept)
    }

    /// Parses a code file body: one word per line, `#` starts a comment,
    /// blank lines are skipped, duplicates are deduplicated.
    pub fn parse(len: usize, text: &str) -> Result<Self> {
        Self::parse_with_hint(text, Some(len))
    }

    /// Like [`Code::parse`], inferring the length from the first word. An
    /// empty body needs `expected` to fix the ambient space.
    pub fn parse_with_hint(text: &str, expected: Option<usize>) -> Result<Self> {
        let mut words: Vec<Word> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(at) => &raw[..at],
                None => raw,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let w = Word::parse(line)
                .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
            words.push(w);
        }
        let len = match (words.first(), expected) {
            (Some(w), _) => w.len(),
            (None, Some(n)) => n,
            (None, None) => {
                return Err(Error::Parse(
                    "empty code: ambient length unknown (supply --n)".into(),
                ))
            }
        };
        if let Some(n) = expected {
            if n != len {
                return Err(Error::LengthMismatch { expected: n, found: len });
            }
        }
        for w in &words {
            if w.len() != len {
                return Err(Error::LengthMismatch { expected: len, found: w.len() });
            }
        }
        Ok(Code::from_iter(len, words))
    }

    /// One word per line, sorted.
    #[must_use]
    pub fn to_text(&self) -> String {
        self.words.iter().map(|w| w.to_string()).join("\n")
    }

    /// The code as a fixed-width lowercase hex rendering of the bitset whose
    /// bit `i` marks the word with integer value `i`.
    #[must_use]
    pub fn hex_bitset(&self) -> String {
        assert!(self.len <= 16, "bitset rendering above desk scale");
        let nibbles = std::cmp::max(1, (1usize << self.len) / 4);
        let mut out = vec![0u8; nibbles];
        for w in &self.words {
            let i = w.value() as usize;
            out[nibbles - 1 - i / 4] |= 1 << (i % 4);
        }
        out.iter().map(|n| char::from_digit(*n as u32, 16).unwrap()).collect()
    }
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code(n={}, {{", self.len)?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "}})")
    }
}

/// Every motif of length `len` in canonical order (3^len of them).
pub fn all_motifs(len: usize) -> impl Iterator<Item = Motif> {
    let total = 3u64.pow(len as u32);
    (0..total).map(move |mut k| {
        let mut trits = vec![Trit::Zero; len];
        for p in (0..len).rev() {
            trits[p] = match k % 3 {
                0 => Trit::Zero,
                1 => Trit::One,
                _ => Trit::Star,
            };
            k /= 3;
        }
        Motif::new(trits)
    })
}

/// The maximal motifs of the complement, computed from the maximal motifs of
/// the code itself.
///
/// A motif lies in the complement's motif set exactly when it is disjoint
/// from every motif of `motifs`; the maximal ones correspond to minimal
/// consistent flip assignments, found by a depth-first transversal search
/// with critical-edge pruning: every chosen flip must keep an edge only it
/// covers, so completed assignments are minimal by construction.
pub fn max_mot_complement(len: usize, motifs: &[Motif]) -> Result<Vec<Motif>> {
    for m in motifs {
        if m.len() != len {
            return Err(Error::LengthMismatch { expected: len, found: m.len() });
        }
    }
    for (i, a) in motifs.iter().enumerate() {
        for (j, b) in motifs.iter().enumerate() {
            if i != j && a.leq(b) {
                return Err(Error::NotAntichain { low: a.to_string(), high: b.to_string() });
            }
        }
    }
    // No motifs: the code is empty, its complement is everything.
    if motifs.is_empty() {
        return Ok(vec![Motif::all_stars(len)]);
    }
    // The all-stars motif covers everything, leaving an empty complement.
    if motifs.iter().any(Motif::is_all_stars) {
        return Ok(Vec::new());
    }
    let mut edges: Vec<Vec<(usize, Trit)>> = motifs
        .iter()
        .map(|m| {
            (0..len)
                .filter_map(|p| match m.get(p) {
                    Trit::Zero => Some((p, Trit::One)),
                    Trit::One => Some((p, Trit::Zero)),
                    Trit::Star => None,
                })
                .collect()
        })
        .collect();
    // Small edges first: fewer branches near the root.
    edges.sort_by_key(Vec::len);
    let mut occurs = vec![Vec::new(); 2 * len];
    for (e, edge) in edges.iter().enumerate() {
        for &(p, t) in edge {
            occurs[flip_slot(p, t)].push(e);
        }
    }
    let edge_count = edges.len();
    let mut search = Transversal {
        edges,
        occurs,
        assign: vec![None; len],
        cand: vec![true; 2 * len],
        chosen: Vec::new(),
        crit: Vec::new(),
        cover: vec![0; edge_count],
        owner: vec![0; edge_count],
        uncov: (0..edge_count).collect(),
        edge_pos: (0..edge_count).collect(),
        emitted: Vec::new(),
    };
    search.run();
    let mut out: Vec<Motif> = search
        .emitted
        .iter()
        .map(|picks| {
            let mut trits = vec![Trit::Star; len];
            for &(p, t) in picks {
                trits[p] = t;
            }
            Motif::new(trits)
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

fn flip_slot(p: usize, t: Trit) -> usize {
    2 * p + usize::from(t == Trit::One)
}

/// Depth-first search for minimal consistent flip assignments.
///
/// Each chosen flip keeps the list of edges it alone covers; a choice that
/// empties that list for any earlier flip cannot extend to a minimal
/// assignment and is cut immediately.  Flips tried at a branch point are
/// withdrawn from the candidate pool until their subtree finishes, so each
/// minimal assignment is reached through exactly one choice order.
struct Transversal {
    edges: Vec<Vec<(usize, Trit)>>,
    /// Edge indices containing each flip, indexed by `flip_slot`.
    occurs: Vec<Vec<usize>>,
    assign: Vec<Option<Trit>>,
    /// Flips still available to later choices, indexed by `flip_slot`.
    cand: Vec<bool>,
    chosen: Vec<(usize, Trit)>,
    /// crit[i] = edges currently covered only by chosen[i].
    crit: Vec<Vec<usize>>,
    /// Per edge, how many chosen flips cover it.
    cover: Vec<usize>,
    /// Index into `chosen` of the unique coverer, valid while cover == 1.
    owner: Vec<usize>,
    /// Uncovered edge indices, unordered; positions tracked in `edge_pos`.
    uncov: Vec<usize>,
    edge_pos: Vec<usize>,
    emitted: Vec<Vec<(usize, Trit)>>,
}

impl Transversal {
    fn available(&self, p: usize, t: Trit) -> bool {
        self.cand[flip_slot(p, t)] && self.assign[p].is_none()
    }

    fn uncov_remove(&mut self, e: usize) {
        let pos = self.edge_pos[e];
        self.uncov.swap_remove(pos);
        if let Some(&moved) = self.uncov.get(pos) {
            self.edge_pos[moved] = pos;
        }
    }

    fn run(&mut self) {
        if self.uncov.is_empty() {
            // Every edge covered, every flip still critical somewhere.
            self.emitted.push(self.chosen.clone());
            return;
        }
        // Branch on the uncovered edge with the fewest available flips; an
        // edge with none makes the whole branch a dead end.
        let mut branch_edge = usize::MAX;
        let mut branch_width = usize::MAX;
        for ui in 0..self.uncov.len() {
            let e = self.uncov[ui];
            let width = self.edges[e]
                .iter()
                .filter(|&&(p, t)| self.available(p, t))
                .count();
            if width == 0 {
                return;
            }
            if width < branch_width {
                branch_width = width;
                branch_edge = e;
            }
        }
        let branch: Vec<(usize, Trit)> = self.edges[branch_edge]
            .iter()
            .copied()
            .filter(|&(p, t)| self.available(p, t))
            .collect();
        for &(p, t) in &branch {
            self.cand[flip_slot(p, t)] = false;
        }
        for &(p, t) in &branch {
            // Cover this flip's edges, stealing criticality from earlier
            // flips; a singly covered edge sits in its owner's crit list.
            let mut fresh = Vec::new();
            let mut stolen = Vec::new();
            for o in 0..self.occurs[flip_slot(p, t)].len() {
                let e = self.occurs[flip_slot(p, t)][o];
                match self.cover[e] {
                    0 => {
                        fresh.push(e);
                        self.owner[e] = self.chosen.len();
                        self.uncov_remove(e);
                    }
                    1 => {
                        let ci = self.owner[e];
                        let pos = self.crit[ci]
                            .iter()
                            .position(|&x| x == e)
                            .expect("singly covered edge must be critical");
                        self.crit[ci].swap_remove(pos);
                        stolen.push((ci, e));
                    }
                    _ => {}
                }
                self.cover[e] += 1;
            }
            if self.crit.iter().all(|cr| !cr.is_empty()) {
                self.assign[p] = Some(t);
                self.chosen.push((p, t));
                self.crit.push(fresh);
                self.run();
                self.crit.pop();
                self.chosen.pop();
                self.assign[p] = None;
            }
            for o in 0..self.occurs[flip_slot(p, t)].len() {
                let e = self.occurs[flip_slot(p, t)][o];
                self.cover[e] -= 1;
                if self.cover[e] == 0 {
                    self.edge_pos[e] = self.uncov.len();
                    self.uncov.push(e);
                }
            }
            for (ci, e) in stolen {
                self.crit[ci].push(e);
            }
            // Re-admitting only after the subtree keeps assignments unique:
            // any set using this flip and a later sibling was found here.
            self.cand[flip_slot(p, t)] = true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Motif {
        Motif::parse(s).unwrap()
    }

    fn code(n: usize, text: &str) -> Code {
        Code::parse(n, text).unwrap()
    }

    #[test]
    fn test_word_parse_and_order() {
        let w = Word::parse("100").unwrap();
        assert_eq!(w.to_string(), "100");
        assert!(w.bit(0) && !w.bit(1) && !w.bit(2));
        assert_eq!(w.value(), 4);
        assert_eq!(Word::parse("10|01").unwrap().to_string(), "1001");
        assert!(Word::parse("1*0").is_err());
        assert!(Word::parse("").is_err());
        let mut v = [Word::parse("110").unwrap(), Word::parse("011").unwrap()];
        v.sort();
        assert_eq!(v[0].to_string(), "011");
        assert_eq!(Word::parse("011").unwrap().flipped().to_string(), "100");
    }

    #[test]
    fn test_code_parse() {
        let c = Code::parse(3, "# a comment\n000\n001 # trailing\n\n001\n").unwrap();
        assert_eq!(c.card(), 2); // duplicate dropped
        assert!(c.contains(&Word::parse("001").unwrap()));
        assert!(Code::parse(3, "000\n01").is_err());
        assert!(Code::parse_with_hint("", None).is_err());
        assert_eq!(Code::parse_with_hint("", Some(4)).unwrap().len(), 4);
        assert_eq!(Code::parse_with_hint("101\n000", None).unwrap().len(), 3);
    }

    #[test]
    fn test_complement() {
        let c = code(2, "10");
        let cc = c.complement().unwrap();
        assert_eq!(cc, code(2, "00\n01\n11"));
        assert!(Code::full(2).unwrap().complement().unwrap().is_empty());
        assert!(Code::empty(2).complement().unwrap().is_full());
    }

    #[test]
    fn test_max_mot_cover_example() {
        let c = code(3, "000\n001\n011\n111");
        let got = c.max_mot().unwrap();
        assert_eq!(got, vec![m("00*"), m("0*1"), m("*11")]);
    }

    #[test]
    fn test_max_mot_edges() {
        assert_eq!(Code::empty(3).max_mot().unwrap(), Vec::<Motif>::new());
        assert_eq!(Code::full(2).unwrap().max_mot().unwrap(), vec![m("**")]);
        assert_eq!(code(2, "10").max_mot().unwrap(), vec![m("10")]);
        // Degenerate length-0 space: the empty word is its own motif.
        let point = Code::from_iter(0, [Word::zero(0)]);
        assert_eq!(point.max_mot().unwrap(), vec![Motif::new(vec![])]);
    }

    #[test]
    fn test_max_mot_cap() {
        let c = Code::empty(13);
        assert!(matches!(c.max_mot(), Err(Error::OverCap { .. })));
    }

    #[test]
    fn test_max_mot_complement_small() {
        assert_eq!(
            max_mot_complement(2, &[m("10")]).unwrap(),
            vec![m("0*"), m("*1")]
        );
        assert_eq!(max_mot_complement(2, &[m("**")]).unwrap(), Vec::<Motif>::new());
        assert_eq!(max_mot_complement(2, &[]).unwrap(), vec![m("**")]);
        // Two opposite words force the two mixed words.
        assert_eq!(
            max_mot_complement(2, &[m("00"), m("11")]).unwrap(),
            vec![m("01"), m("10")]
        );
    }

    #[test]
    fn test_max_mot_complement_six_element_case() {
        let motifs = [m("*00***"), m("**00**"), m("0***00")];
        let got = max_mot_complement(6, &motifs).unwrap();
        let want: Vec<Motif> = ["11*1**", "1*1***", "*1*11*", "*1*1*1", "**1*1*", "**1**1"]
            .map(m)
            .to_vec();
        let mut want = want;
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn test_max_mot_complement_rejects_non_antichain() {
        let err = max_mot_complement(3, &[m("111"), m("1*1")]).unwrap_err();
        assert!(matches!(err, Error::NotAntichain { .. }));
        // A repeated motif is itself a comparable pair.
        assert!(max_mot_complement(2, &[m("0*"), m("0*")]).is_err());
    }

    #[test]
    fn test_max_mot_complement_matches_direct_computation() {
        // Cross-check against max_mot of the actual complement.
        for bits in [0usize, 1, 0b1010, 0b0110, 0b1111, 0b1000, 0b0111] {
            let words = (0..4u32).filter(|i| bits >> i & 1 == 1).map(|i| Word::from_bits(2, i));
            let c = Code::from_iter(2, words);
            let via_transversal = max_mot_complement(2, &c.max_mot().unwrap()).unwrap();
            let direct = c.complement().unwrap().max_mot().unwrap();
            assert_eq!(via_transversal, direct, "code {c:?}");
        }
    }

    #[test]
    fn test_hex_bitset() {
        assert_eq!(code(3, "000").hex_bitset(), "01");
        assert_eq!(code(3, "111").hex_bitset(), "80");
        assert_eq!(Code::full(2).unwrap().hex_bitset(), "f");
        assert_eq!(Code::empty(4).hex_bitset(), "0000");
    }

    #[test]
    fn test_all_motifs() {
        let all: Vec<Motif> = all_motifs(2).collect();
        assert_eq!(all.len(), 9);
        assert!(all.windows(2).all(|w| w[0] < w[1]), "canonically sorted");
        assert_eq!(all[0], m("00"));
        assert_eq!(all[8], m("**"));
    }
}
