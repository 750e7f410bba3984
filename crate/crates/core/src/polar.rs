//! Polarization into a doubled variable space.
//!
//! Polarizing replaces each complemented factor `(1-Xj)` with a fresh
//! variable `Yj`, turning pseudo-monomials into squarefree monomials. On the
//! combinatorial side every motif doubles into a polar motif (entries 0 and
//! star only), codes polarize as the union of the doubled varieties, and the
//! *formal* polarization realizes the polarized ideal exactly as the ideal
//! of a (generally larger) code on the doubled coordinates.

use std::collections::BTreeSet;

use crate::code::{max_mot_complement, Code, Word, AMBIENT_ENUM_CAP};
use crate::error::{Error, Result};
use crate::ideal::{
    lagrange, motivic_prime, neural_ideal_cf, CanonicalForm, MotivicPrime, PseudoMonomial,
    VariableSpace,
};
use crate::motif::{Motif, Trit};
use crate::partial::{PartialMotif, PartialSym};

/// Polarizes a motif of length `n` into a polar motif of length `2n`:
/// per position, 0 becomes (0,*), 1 becomes (*,0), * becomes (*,*).
#[must_use]
pub fn polarize_motif(a: &Motif) -> Motif {
    let n = a.len();
    let mut trits = vec![Trit::Star; 2 * n];
    for p in 0..n {
        match a.get(p) {
            Trit::Zero => trits[p] = Trit::Zero,
            Trit::One => trits[n + p] = Trit::Zero,
            Trit::Star => {}
        }
    }
    Motif::new(trits)
}

/// Inverts [`polarize_motif`]: pairs (0,*) -> 0, (*,0) -> 1, (*,*) -> *.
pub fn depolarize_motif(b: &Motif) -> Result<Motif> {
    if !b.len().is_multiple_of(2) {
        return Err(Error::OddLength { len: b.len() });
    }
    let n = b.len() / 2;
    let mut trits = Vec::with_capacity(n);
    for p in 0..n {
        let pair = (b.get(p), b.get(n + p));
        trits.push(match pair {
            (Trit::Zero, Trit::Star) => Trit::Zero,
            (Trit::Star, Trit::Zero) => Trit::One,
            (Trit::Star, Trit::Star) => Trit::Star,
            _ => {
                return Err(Error::NotPolarizationImage {
                    motif: b.to_string(),
                    pair: p + 1,
                })
            }
        });
    }
    Ok(Motif::new(trits))
}

/// The motif `bar(bar(b)^p)`: flip, polarize, flip. Its indicator is the
/// polarized indicator of `b`, and these motifs cut out the formal
/// polarization.
#[must_use]
pub fn bar_polarize_motif(b: &Motif) -> Motif {
    polarize_motif(&b.bar()).bar()
}

/// Polarizes a pseudo-monomial into a squarefree monomial: each complemented
/// factor `(1-Xj)` becomes the plain factor `Yj`.
pub fn polarize_pm(f: &PseudoMonomial) -> Result<PseudoMonomial> {
    if f.space().is_doubled() {
        return Err(Error::AlreadyDoubled);
    }
    let n = f.space().n();
    let sigma: BTreeSet<usize> = f
        .sigma()
        .iter()
        .copied()
        .chain(f.tau().iter().map(|&j| n + j))
        .collect();
    PseudoMonomial::new(VariableSpace::doubled(n), sigma, BTreeSet::new())
}

/// The polarized code: the union of the varieties of the polarized maximal
/// motifs. Its maximal motifs are exactly those polarized motifs.
pub fn polarize_code(code: &Code) -> Result<Code> {
    let doubled = checked_doubled_len(code)?;
    let mut out = Code::empty(doubled);
    for a in code.max_mot()? {
        for w in polarize_motif(&a).words() {
            out.insert(w);
        }
    }
    Ok(out)
}

/// The polarized maximal motifs, in canonical order.
pub fn max_mot_polarized(code: &Code) -> Result<Vec<Motif>> {
    let mut out: Vec<Motif> = code.max_mot()?.iter().map(polarize_motif).collect();
    out.sort();
    Ok(out)
}

/// The maximal motifs of the complement of the polarized code, via the
/// transversal search (never by scanning the doubled motif space).
pub fn max_mot_complement_polarized(code: &Code) -> Result<Vec<Motif>> {
    max_mot_complement(2 * code.len(), &max_mot_polarized(code)?)
}

/// The canonical form of the polarized code's ideal: indicators of
/// [`max_mot_complement_polarized`]. Contains [`cf_polarized_ideal`].
pub fn cf_of_polarized_code(code: &Code) -> Result<CanonicalForm> {
    let space = VariableSpace::doubled(code.len());
    let terms = max_mot_complement_polarized(code)?
        .iter()
        .map(|a| lagrange(a, space))
        .collect();
    Ok(CanonicalForm::new(space, terms))
}

/// The polarized canonical form of the code's ideal: polarize each canonical
/// generator. This is the canonical form of the polarized ideal.
pub fn cf_polarized_ideal(code: &Code) -> Result<CanonicalForm> {
    let space = VariableSpace::plain(code.len());
    let cf = neural_ideal_cf(code, space)?;
    let terms: Vec<PseudoMonomial> =
        cf.terms().iter().map(polarize_pm).collect::<Result<_>>()?;
    Ok(CanonicalForm::new(VariableSpace::doubled(code.len()), terms))
}

/// The maximal motifs of the complement of the formal polarization: flip,
/// polarize, flip the maximal motifs of the complement.
pub fn max_mot_formal_complement(code: &Code) -> Result<Vec<Motif>> {
    let comp = code.complement()?;
    let mut out: Vec<Motif> = comp.max_mot()?.iter().map(bar_polarize_motif).collect();
    out.sort();
    Ok(out)
}

/// The canonical form of the formal polarization's ideal: indicators of
/// [`max_mot_formal_complement`]. Equals [`cf_polarized_ideal`].
pub fn cf_formal_polarized(code: &Code) -> Result<CanonicalForm> {
    let space = VariableSpace::doubled(code.len());
    let terms = max_mot_formal_complement(code)?
        .iter()
        .map(|a| lagrange(a, space))
        .collect();
    Ok(CanonicalForm::new(space, terms))
}

/// The formal polarization: the doubled-space code whose ideal is the
/// polarized ideal. Contains the polarized code, often properly.
pub fn formal_polarize(code: &Code) -> Result<Code> {
    let doubled = checked_doubled_len(code)?;
    // Union of the varieties cut out by the flipped-polarized-flipped
    // complement motifs, then complement once in the doubled space.
    let mut covered = vec![false; 1 << doubled];
    for b in max_mot_formal_complement(code)? {
        for w in b.words() {
            covered[w.value() as usize] = true;
        }
    }
    let words = (0..1u32 << doubled)
        .filter(|&v| !covered[v as usize])
        .map(|v| Word::from_bits(doubled, v));
    Ok(Code::from_iter(doubled, words))
}

/// The maximal motifs of the formal polarization, via the transversal search.
pub fn max_mot_formal_polarized(code: &Code) -> Result<Vec<Motif>> {
    max_mot_complement(2 * code.len(), &max_mot_formal_complement(code)?)
}

/// The minimal primes of the polarized code's ideal: polarize the motifs of
/// the minimal primes. A subset of [`min_primes_formal_polarized`].
pub fn min_primes_polarized(code: &Code) -> Result<Vec<MotivicPrime>> {
    let space = VariableSpace::doubled(code.len());
    Ok(max_mot_polarized(code)?
        .iter()
        .map(|m| motivic_prime(m, space))
        .collect())
}

/// The minimal primes of the formal polarization's ideal.
pub fn min_primes_formal_polarized(code: &Code) -> Result<Vec<MotivicPrime>> {
    let space = VariableSpace::doubled(code.len());
    Ok(max_mot_formal_polarized(code)?
        .iter()
        .map(|m| motivic_prime(m, space))
        .collect())
}

/// Polarizes a partial motif; inactive marks double into inactive pairs.
#[must_use]
pub fn polarize_partial_motif(a: &PartialMotif) -> PartialMotif {
    let n = a.len();
    let mut syms = vec![PartialSym::Star; 2 * n];
    for p in 0..n {
        match a.get(p) {
            PartialSym::Zero => syms[p] = PartialSym::Zero,
            PartialSym::One => syms[n + p] = PartialSym::Zero,
            PartialSym::Star => {}
            PartialSym::Inactive => {
                syms[p] = PartialSym::Inactive;
                syms[n + p] = PartialSym::Inactive;
            }
        }
    }
    PartialMotif::new(syms)
}

/// Inverts [`polarize_partial_motif`].
pub fn depolarize_partial_motif(b: &PartialMotif) -> Result<PartialMotif> {
    if !b.len().is_multiple_of(2) {
        return Err(Error::OddLength { len: b.len() });
    }
    let n = b.len() / 2;
    let mut syms = Vec::with_capacity(n);
    for p in 0..n {
        let pair = (b.get(p), b.get(n + p));
        syms.push(match pair {
            (PartialSym::Zero, PartialSym::Star) => PartialSym::Zero,
            (PartialSym::Star, PartialSym::Zero) => PartialSym::One,
            (PartialSym::Star, PartialSym::Star) => PartialSym::Star,
            (PartialSym::Inactive, PartialSym::Inactive) => PartialSym::Inactive,
            _ => {
                return Err(Error::NotPolarizationImage {
                    motif: b.to_string(),
                    pair: p + 1,
                })
            }
        });
    }
    Ok(PartialMotif::new(syms))
}

/// Outcome of the deactivation criterion for one doubled-space motif.
#[derive(Clone, Debug)]
pub struct GjsCheck {
    /// Whether the motif's prime contains the formal polarization's ideal.
    pub holds: bool,
    /// The 1-based deactivated coordinates of the base code.
    pub inactive: BTreeSet<usize>,
    /// The depolarized partial motif that was tested.
    pub partial_motif: PartialMotif,
}

/// Decides whether the motivic prime of a doubled-space motif `c` contains
/// the ideal of the formal polarization of `code` — without building the
/// formal polarization.
///
/// Stars out the 1s of `c`, deactivates the coordinates whose pair is fixed
/// to (0,0), depolarizes, and tests the resulting partial motif against the
/// correspondingly deactivated code.
pub fn gjs_check(c: &Motif, code: &Code) -> Result<GjsCheck> {
    if !c.len().is_multiple_of(2) {
        return Err(Error::OddLength { len: c.len() });
    }
    if c.len() != 2 * code.len() {
        return Err(Error::LengthMismatch { expected: 2 * code.len(), found: c.len() });
    }
    let n = code.len();
    // Primes ignore the 1s: p_c = p_a for a = c with 1s starred.
    let a: Vec<Trit> = c
        .trits()
        .iter()
        .map(|t| if *t == Trit::One { Trit::Star } else { *t })
        .collect();
    let inactive: BTreeSet<usize> = (0..n)
        .filter(|&i| a[i] == Trit::Zero && a[n + i] == Trit::Zero)
        .map(|i| i + 1)
        .collect();
    let mut syms: Vec<PartialSym> = a
        .iter()
        .map(|t| match t {
            Trit::Zero => PartialSym::Zero,
            Trit::One => PartialSym::One,
            Trit::Star => PartialSym::Star,
        })
        .collect();
    for &i in &inactive {
        syms[i - 1] = PartialSym::Inactive;
        syms[n + i - 1] = PartialSym::Inactive;
    }
    let partial = depolarize_partial_motif(&PartialMotif::new(syms))?;
    let deactivated = code.deactivate(&inactive)?;
    let holds = partial.is_par_mot_of(&deactivated)?;
    Ok(GjsCheck { holds, inactive, partial_motif: partial })
}

/// Boolean form of [`gjs_check`].
pub fn gjs_prime_test(c: &Motif, code: &Code) -> Result<bool> {
    Ok(gjs_check(c, code)?.holds)
}

/// Doubled length with the ambient-enumeration cap applied.
fn checked_doubled_len(code: &Code) -> Result<usize> {
    let doubled = 2 * code.len();
    if doubled > AMBIENT_ENUM_CAP {
        return Err(Error::OverCap {
            len: doubled,
            cap: AMBIENT_ENUM_CAP,
            what: "doubled-space code construction",
        });
    }
    Ok(doubled)
}
