//! Pseudo-monomials, canonical forms, and motivic primes.
//!
//! Every code has an ideal of pseudo-monomials vanishing on it. Its canonical
//! form lists the divisibility-minimal members, one indicator per maximal
//! motif of the complement; its minimal primes are the motivic primes of the
//! maximal motifs of the code itself, and they intersect to the ideal — the
//! unique irredundant primary decomposition.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::code::{max_mot_complement, Code, Word, MOTIF_ENUM_CAP};
use crate::error::{Error, Result};
use crate::motif::{Motif, Trit};

/// The ambient polynomial ring: `n` plain variables, or `2n` variables
/// rendered `X1..Xn, Y1..Yn` when doubled.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VariableSpace {
    n: usize,
    doubled: bool,
}

impl VariableSpace {
    /// The space on `X1..Xn`.
    #[must_use]
    pub fn plain(n: usize) -> Self {
        VariableSpace { n, doubled: false }
    }

    /// The space on `X1..Xn, Y1..Yn`.
    #[must_use]
    pub fn doubled(n: usize) -> Self {
        VariableSpace { n, doubled: true }
    }

    /// Base number of coordinates.
    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    /// True for a doubled space.
    #[must_use]
    pub fn is_doubled(&self) -> bool {
        self.doubled
    }

    /// Number of variables (`n`, or `2n` when doubled).
    #[must_use]
    pub fn dim(&self) -> usize {
        if self.doubled {
            2 * self.n
        } else {
            self.n
        }
    }

    /// Name of the 1-based variable `index`.
    #[must_use]
    pub fn var_name(&self, index: usize) -> String {
        debug_assert!(index >= 1 && index <= self.dim(), "variable index out of range");
        if self.doubled && index > self.n {
            format!("Y{}", index - self.n)
        } else {
            format!("X{index}")
        }
    }

    fn describe(&self) -> String {
        if self.doubled {
            format!("doubled n={}", self.n)
        } else {
            format!("plain n={}", self.n)
        }
    }
}

/// Raises a space-mismatch error for `left` vs `right`.
fn space_mismatch(left: VariableSpace, right: VariableSpace) -> Error {
    Error::SpaceMismatch { left: left.describe(), right: right.describe() }
}

/// A product of distinct plain factors `Xi` and complemented factors
/// `(1-Xj)` over disjoint index sets; the constant `1` is the empty product.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PseudoMonomial {
    space: VariableSpace,
    sigma: BTreeSet<usize>,
    tau: BTreeSet<usize>,
}

impl PseudoMonomial {
    /// Builds a pseudo-monomial from 1-based plain (`sigma`) and complemented
    /// (`tau`) variable indices.
    pub fn new(
        space: VariableSpace,
        sigma: BTreeSet<usize>,
        tau: BTreeSet<usize>,
    ) -> Result<Self> {
        for &i in sigma.iter().chain(&tau) {
            if i == 0 || i > space.dim() {
                return Err(Error::IndexOutOfRange { index: i, len: space.dim() });
            }
        }
        if let Some(&i) = sigma.intersection(&tau).next() {
            return Err(Error::OverlappingFactors { index: i });
        }
        Ok(PseudoMonomial { space, sigma, tau })
    }

    /// The constant 1 (empty product).
    #[must_use]
    pub fn one(space: VariableSpace) -> Self {
        PseudoMonomial { space, sigma: BTreeSet::new(), tau: BTreeSet::new() }
    }

    /// The ambient space.
    #[must_use]
    pub fn space(&self) -> VariableSpace {
        self.space
    }

    /// 1-based indices of plain factors.
    #[must_use]
    pub fn sigma(&self) -> &BTreeSet<usize> {
        &self.sigma
    }

    /// 1-based indices of complemented factors.
    #[must_use]
    pub fn tau(&self) -> &BTreeSet<usize> {
        &self.tau
    }

    /// Number of factors.
    #[must_use]
    pub fn degree(&self) -> usize {
        self.sigma.len() + self.tau.len()
    }

    /// True for the constant 1.
    #[must_use]
    pub fn is_one(&self) -> bool {
        self.sigma.is_empty() && self.tau.is_empty()
    }

    /// Factorwise divisibility: both factor sets contained in `other`'s.
    ///
    /// Equivalent to `other(w) = 1` implying `self(w) = 1` over all words.
    ///
    /// # Panics
    /// When the spaces differ.
    #[must_use]
    pub fn divides(&self, other: &PseudoMonomial) -> bool {
        assert_eq!(self.space, other.space, "pseudo-monomial spaces differ");
        self.sigma.is_subset(&other.sigma) && self.tau.is_subset(&other.tau)
    }

    /// Evaluates at a word: 1 exactly when every plain factor sees a 1 and
    /// every complemented factor sees a 0.
    ///
    /// # Panics
    /// When the word length differs from the space dimension.
    #[must_use]
    pub fn eval(&self, w: &Word) -> bool {
        assert_eq!(w.len(), self.space.dim(), "word length differs from space dimension");
        self.sigma.iter().all(|&i| w.bit(i - 1)) && self.tau.iter().all(|&i| !w.bit(i - 1))
    }

    /// Text form: factors ascending by index (all `X` before all `Y`), `1`
    /// for the empty product.
    #[must_use]
    pub fn term_string(&self) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut out = String::new();
        for i in 1..=self.space.dim() {
            if self.sigma.contains(&i) {
                out.push_str(&self.space.var_name(i));
            } else if self.tau.contains(&i) {
                out.push_str(&format!("(1-{})", self.space.var_name(i)));
            }
        }
        out
    }

    /// Parses the term grammar: a concatenation of factors `Xk`, `Yk`,
    /// `(1-Xk)`, `(1-Yk)`, or the constant `1`. Repeated factors collapse
    /// (squarefree); a variable in both plain and complemented form is an
    /// error.
    pub fn parse(space: VariableSpace, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty term".into()));
        }
        if s == "1" {
            return Ok(Self::one(space));
        }
        let mut sigma = BTreeSet::new();
        let mut tau = BTreeSet::new();
        let mut chars = s.chars().peekable();
        while let Some(&c) = chars.peek() {
            let complemented = match c {
                '(' => {
                    chars.next();
                    for want in ['1', '-'] {
                        if chars.next() != Some(want) {
                            return Err(Error::Parse(format!("malformed factor in {s}")));
                        }
                    }
                    true
                }
                _ => false,
            };
            let letter = chars
                .next()
                .ok_or_else(|| Error::Parse(format!("malformed factor in {s}")))?;
            if letter != 'X' && letter != 'Y' {
                return Err(Error::Parse(format!(
                    "expected variable X or Y, found '{letter}' in {s}"
                )));
            }
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            let k: usize = digits
                .parse()
                .map_err(|_| Error::Parse(format!("missing variable index in {s}")))?;
            if complemented && chars.next() != Some(')') {
                return Err(Error::Parse(format!("unclosed factor in {s}")));
            }
            let index = if letter == 'Y' {
                if !space.is_doubled() {
                    return Err(Error::Parse(format!(
                        "variable Y{k} needs a doubled space"
                    )));
                }
                if k == 0 || k > space.n() {
                    return Err(Error::IndexOutOfRange { index: k, len: space.n() });
                }
                space.n() + k
            } else {
                if k == 0 || k > space.n() {
                    return Err(Error::IndexOutOfRange { index: k, len: space.n() });
                }
                k
            };
            if complemented {
                tau.insert(index);
            } else {
                sigma.insert(index);
            }
        }
        Self::new(space, sigma, tau)
    }
}

impl fmt::Display for PseudoMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.term_string())
    }
}

impl fmt::Debug for PseudoMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PseudoMonomial({})", self.term_string())
    }
}

/// The indicator pseudo-monomial of a motif: plain factors at its 1s,
/// complemented factors at its 0s. Evaluates to 1 exactly on the variety.
///
/// # Panics
/// When the motif length differs from the space dimension.
#[must_use]
pub fn lagrange(a: &Motif, space: VariableSpace) -> PseudoMonomial {
    assert_eq!(a.len(), space.dim(), "motif length differs from space dimension");
    let mut sigma = BTreeSet::new();
    let mut tau = BTreeSet::new();
    for p in 0..a.len() {
        match a.get(p) {
            Trit::One => {
                sigma.insert(p + 1);
            }
            Trit::Zero => {
                tau.insert(p + 1);
            }
            Trit::Star => {}
        }
    }
    PseudoMonomial { space, sigma, tau }
}

/// A canonical form: the divisibility-minimal pseudo-monomials of an ideal,
/// stored sorted by text form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CanonicalForm {
    space: VariableSpace,
    terms: Vec<PseudoMonomial>,
}

impl CanonicalForm {
    /// Sorts and deduplicates `terms`.
    ///
    /// # Panics
    /// When a term lives in a different space.
    #[must_use]
    pub fn new(space: VariableSpace, terms: Vec<PseudoMonomial>) -> Self {
        for t in &terms {
            assert_eq!(t.space(), space, "canonical form term in the wrong space");
        }
        let mut terms = terms;
        terms.sort_by_key(PseudoMonomial::term_string);
        terms.dedup();
        CanonicalForm { space, terms }
    }

    /// The ambient space.
    #[must_use]
    pub fn space(&self) -> VariableSpace {
        self.space
    }

    /// The terms, sorted by text form.
    #[must_use]
    pub fn terms(&self) -> &[PseudoMonomial] {
        &self.terms
    }

    /// Number of terms.
    #[must_use]
    pub fn card(&self) -> usize {
        self.terms.len()
    }

    /// True for the canonical form of the zero ideal.
    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Membership test.
    #[must_use]
    pub fn contains(&self, t: &PseudoMonomial) -> bool {
        self.terms.iter().any(|u| u == t)
    }

    /// True when every term of `self` appears in `other`.
    #[must_use]
    pub fn is_subset_of(&self, other: &CanonicalForm) -> bool {
        self.terms.iter().all(|t| other.contains(t))
    }

    /// Ideal membership for a pseudo-monomial: some term divides it.
    /// Agrees with "vanishes on every word of the underlying code".
    ///
    /// # Panics
    /// When `f` lives in a different space.
    #[must_use]
    pub fn ideal_contains(&self, f: &PseudoMonomial) -> bool {
        assert_eq!(f.space(), self.space, "pseudo-monomial in the wrong space");
        self.terms.iter().any(|t| t.divides(f))
    }

    /// One term per line, sorted.
    #[must_use]
    pub fn to_text(&self) -> String {
        self.terms.iter().map(PseudoMonomial::term_string).join("\n")
    }
}

/// The canonical form of the code's ideal: indicators of the maximal motifs
/// of the complement. The empty code yields `{1}`, the full code `{}`.
pub fn neural_ideal_cf(code: &Code, space: VariableSpace) -> Result<CanonicalForm> {
    if code.len() != space.dim() {
        return Err(Error::LengthMismatch { expected: space.dim(), found: code.len() });
    }
    let motifs = code.max_mot()?;
    let comp = max_mot_complement(code.len(), &motifs)?;
    Ok(CanonicalForm::new(
        space,
        comp.iter().map(|a| lagrange(a, space)).collect(),
    ))
}

/// The canonical form of the ideal generated by arbitrary pseudo-monomials:
/// cut out the vanishing set by evaluation, then read off its canonical form.
pub fn cf_of_pm_ideal(space: VariableSpace, gens: &[PseudoMonomial]) -> Result<CanonicalForm> {
    let dim = space.dim();
    if dim > MOTIF_ENUM_CAP {
        return Err(Error::OverCap { len: dim, cap: MOTIF_ENUM_CAP, what: "canonical form computation" });
    }
    for g in gens {
        if g.space() != space {
            return Err(space_mismatch(g.space(), space));
        }
    }
    let words = (0..1u32 << dim)
        .map(|b| Word::from_bits(dim, b))
        .filter(|w| gens.iter().all(|g| !g.eval(w)));
    let vanishing = Code::from_iter(dim, words);
    neural_ideal_cf(&vanishing, space)
}

/// The common vanishing set of the code's canonical form; always returns the
/// code itself, computed the long way around.
pub fn variety_of_neural_ideal(code: &Code, space: VariableSpace) -> Result<Code> {
    let cf = neural_ideal_cf(code, space)?;
    let words = (0..1u32 << code.len())
        .map(|b| Word::from_bits(code.len(), b))
        .filter(|w| cf.terms().iter().all(|g| !g.eval(w)));
    Ok(Code::from_iter(code.len(), words))
}

/// The prime ideal attached to a motif: plain variables at its 0s,
/// complemented variables at its 1s (each rendered as a degree-1 generator).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MotivicPrime {
    space: VariableSpace,
    motif: Motif,
}

impl MotivicPrime {
    /// The ambient space.
    #[must_use]
    pub fn space(&self) -> VariableSpace {
        self.space
    }

    /// The motif the prime is attached to.
    #[must_use]
    pub fn motif(&self) -> &Motif {
        &self.motif
    }

    /// The degree-1 generators, ascending by variable index.
    #[must_use]
    pub fn generators(&self) -> Vec<PseudoMonomial> {
        let mut gens = Vec::new();
        for p in 0..self.motif.len() {
            let (sigma, tau): (BTreeSet<usize>, BTreeSet<usize>) = match self.motif.get(p) {
                Trit::Zero => ([p + 1].into(), BTreeSet::new()),
                Trit::One => (BTreeSet::new(), [p + 1].into()),
                Trit::Star => continue,
            };
            gens.push(PseudoMonomial { space: self.space, sigma, tau });
        }
        gens
    }

    /// Generator text forms, ascending by variable index.
    #[must_use]
    pub fn generator_strings(&self) -> Vec<String> {
        self.generators().iter().map(PseudoMonomial::term_string).collect()
    }
}

impl fmt::Display for MotivicPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator_strings().join(", "))
    }
}

/// The motivic prime of a motif.
///
/// # Panics
/// When the motif length differs from the space dimension.
#[must_use]
pub fn motivic_prime(a: &Motif, space: VariableSpace) -> MotivicPrime {
    assert_eq!(a.len(), space.dim(), "motif length differs from space dimension");
    MotivicPrime { space, motif: a.clone() }
}

/// True when the motif's prime contains the code's ideal — equivalently,
/// when the motif's variety sits inside the code.
///
/// # Panics
/// When the lengths differ.
#[must_use]
pub fn prime_contains_neural_ideal(a: &Motif, code: &Code) -> bool {
    a.is_motif_of(code)
}

/// The minimal primes of the code's ideal: the motivic primes of its maximal
/// motifs, sorted by motif.
pub fn min_primes(code: &Code, space: VariableSpace) -> Result<Vec<MotivicPrime>> {
    if code.len() != space.dim() {
        return Err(Error::LengthMismatch { expected: space.dim(), found: code.len() });
    }
    Ok(code
        .max_mot()?
        .into_iter()
        .map(|m| MotivicPrime { space, motif: m })
        .collect())
}

/// The unique irredundant primary decomposition: the minimal primes, whose
/// intersection is the code's ideal. Undefined for the empty code (its ideal
/// is the whole ring).
pub fn primary_decomposition(code: &Code, space: VariableSpace) -> Result<Vec<MotivicPrime>> {
    if code.is_empty() {
        return Err(Error::EmptyCode);
    }
    min_primes(code, space)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Motif {
        Motif::parse(s).unwrap()
    }

    fn pm(space: VariableSpace, s: &str) -> PseudoMonomial {
        PseudoMonomial::parse(space, s).unwrap()
    }

    #[test]
    fn test_lagrange() {
        let s4 = VariableSpace::plain(4);
        assert_eq!(lagrange(&m("11*0"), s4).term_string(), "X1X2(1-X4)");
        assert_eq!(lagrange(&m("****"), s4).term_string(), "1");
        let d2 = VariableSpace::doubled(2);
        assert_eq!(lagrange(&m("*1*0"), d2).term_string(), "X2(1-Y2)");
    }

    #[test]
    fn test_eval() {
        let s2 = VariableSpace::plain(2);
        let x2 = pm(s2, "X2");
        assert!(!x2.eval(&Word::parse("10").unwrap()));
        assert!(x2.eval(&Word::parse("01").unwrap()));
        let f = pm(s2, "X1(1-X2)");
        assert!(f.eval(&Word::parse("10").unwrap()));
        assert!(!f.eval(&Word::parse("11").unwrap()));
        assert!(PseudoMonomial::one(s2).eval(&Word::parse("00").unwrap()));
    }

    #[test]
    fn test_divides() {
        let s3 = VariableSpace::plain(3);
        assert!(pm(s3, "X1").divides(&pm(s3, "X1(1-X2)")));
        assert!(!pm(s3, "X2").divides(&pm(s3, "X1(1-X2)")));
        assert!(pm(s3, "1").divides(&pm(s3, "X3")));
        assert!(pm(s3, "X1(1-X2)").divides(&pm(s3, "X1(1-X2)")));
    }

    #[test]
    fn test_parse_terms() {
        let d3 = VariableSpace::doubled(3);
        let f = pm(d3, "X1X3(1-Y2)");
        assert_eq!(f.sigma().iter().copied().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(f.tau().iter().copied().collect::<Vec<_>>(), vec![5]);
        assert_eq!(f.term_string(), "X1X3(1-Y2)");
        let s2 = VariableSpace::plain(2);
        assert!(PseudoMonomial::parse(s2, "Y1").is_err());
        assert!(PseudoMonomial::parse(s2, "X3").is_err());
        assert!(PseudoMonomial::parse(s2, "X1(1-X1)").is_err());
        assert!(PseudoMonomial::parse(s2, "X1(1-X2").is_err());
        assert!(PseudoMonomial::parse(s2, "").is_err());
        assert_eq!(pm(s2, "X1X1").term_string(), "X1"); // squarefree collapse
        assert_eq!(pm(s2, "1").degree(), 0);
    }

    #[test]
    fn test_neural_ideal_cf_cover_example() {
        let c = Code::parse(3, "000\n001\n011\n111").unwrap();
        let cf = neural_ideal_cf(&c, VariableSpace::plain(3)).unwrap();
        assert_eq!(cf.to_text(), "X1(1-X2)\nX1(1-X3)\nX2(1-X3)");
    }

    #[test]
    fn test_neural_ideal_cf_edges() {
        let s2 = VariableSpace::plain(2);
        let empty = neural_ideal_cf(&Code::empty(2), s2).unwrap();
        assert_eq!(empty.to_text(), "1");
        let full = neural_ideal_cf(&Code::full(2).unwrap(), s2).unwrap();
        assert!(full.is_empty());
        let single = neural_ideal_cf(&Code::parse(2, "10").unwrap(), s2).unwrap();
        assert_eq!(single.to_text(), "(1-X1)\nX2");
    }

    #[test]
    fn test_ideal_contains_matches_vanishing() {
        let c = Code::parse(3, "000\n001\n011\n111").unwrap();
        let s3 = VariableSpace::plain(3);
        let cf = neural_ideal_cf(&c, s3).unwrap();
        assert!(cf.ideal_contains(&pm(s3, "X1X2(1-X3)")));
        assert!(cf.ideal_contains(&pm(s3, "X1(1-X2)(1-X3)")));
        assert!(!cf.ideal_contains(&pm(s3, "X1")));
        assert!(!cf.ideal_contains(&pm(s3, "(1-X3)")));
        // Divisibility route vs evaluation route, all terms over two variables.
        let s2 = VariableSpace::plain(2);
        let code = Code::parse(2, "10\n01").unwrap();
        let cf2 = neural_ideal_cf(&code, s2).unwrap();
        for sigma in [vec![], vec![1], vec![2], vec![1, 2]] {
            for tau in [vec![], vec![1], vec![2], vec![1, 2]] {
                if sigma.iter().any(|i| tau.contains(i)) {
                    continue;
                }
                let f = PseudoMonomial::new(
                    s2,
                    sigma.iter().copied().collect(),
                    tau.iter().copied().collect(),
                )
                .unwrap();
                let vanishes = code.words().all(|w| !f.eval(w));
                assert_eq!(cf2.ideal_contains(&f), vanishes, "term {f}");
            }
        }
    }

    #[test]
    fn test_cf_of_pm_ideal_round_trip() {
        let s3 = VariableSpace::plain(3);
        let gens = vec![pm(s3, "X1(1-X2)"), pm(s3, "X2(1-X3)")];
        let cf = cf_of_pm_ideal(s3, &gens).unwrap();
        assert_eq!(cf.to_text(), "X1(1-X2)\nX1(1-X3)\nX2(1-X3)");
        // The zero ideal cuts out everything; the unit ideal nothing.
        assert!(cf_of_pm_ideal(s3, &[]).unwrap().is_empty());
        let unit = cf_of_pm_ideal(s3, &[PseudoMonomial::one(s3)]).unwrap();
        assert_eq!(unit.to_text(), "1");
    }

    #[test]
    fn test_variety_of_neural_ideal_is_identity() {
        let c = Code::parse(3, "000\n101\n110").unwrap();
        assert_eq!(variety_of_neural_ideal(&c, VariableSpace::plain(3)).unwrap(), c);
        let e = Code::empty(3);
        assert_eq!(variety_of_neural_ideal(&e, VariableSpace::plain(3)).unwrap(), e);
    }

    #[test]
    fn test_motivic_prime() {
        let s2 = VariableSpace::plain(2);
        let p = motivic_prime(&m("10"), s2);
        assert_eq!(p.to_string(), "((1-X1), X2)");
        assert_eq!(p.generator_strings(), vec!["(1-X1)", "X2"]);
        let top = motivic_prime(&m("**"), s2);
        assert_eq!(top.to_string(), "()");
        assert!(top.generators().is_empty());
    }

    #[test]
    fn test_prime_contains_neural_ideal() {
        let c = Code::parse(3, "000\n001\n011\n111").unwrap();
        assert!(prime_contains_neural_ideal(&m("00*"), &c));
        assert!(prime_contains_neural_ideal(&m("001"), &c));
        assert!(!prime_contains_neural_ideal(&m("0*0"), &c));
        assert!(!prime_contains_neural_ideal(&m("***"), &c));
    }

    #[test]
    fn test_min_primes_and_decomposition() {
        let c = Code::parse(3, "000\n001\n011\n111").unwrap();
        let s3 = VariableSpace::plain(3);
        let primes = min_primes(&c, s3).unwrap();
        let rendered: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
        assert_eq!(rendered, vec!["(X1, X2)", "(X1, (1-X3))", "((1-X2), (1-X3))"]);
        assert_eq!(primary_decomposition(&c, s3).unwrap(), primes);
        assert!(matches!(
            primary_decomposition(&Code::empty(3), s3),
            Err(Error::EmptyCode)
        ));
        // The full code's ideal is the zero ideal: one prime, no generators.
        let full = primary_decomposition(&Code::full(2).unwrap(), VariableSpace::plain(2)).unwrap();
        assert_eq!(full.len(), 1);
        assert!(full[0].generators().is_empty());
    }

    #[test]
    fn test_min_primes_reverse_inclusion() {
        // Larger motifs give smaller primes: the antichain of maximal motifs
        // maps to an antichain of primes.
        let c = Code::parse(3, "000\n001\n011\n111").unwrap();
        let primes = min_primes(&c, VariableSpace::plain(3)).unwrap();
        for a in &primes {
            for b in &primes {
                if a != b {
                    // No generator set contains another.
                    let ga: BTreeSet<String> = a.generator_strings().into_iter().collect();
                    let gb: BTreeSet<String> = b.generator_strings().into_iter().collect();
                    assert!(!ga.is_subset(&gb));
                }
            }
        }
    }
}
