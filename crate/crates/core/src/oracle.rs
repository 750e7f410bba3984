//! Brute-force reference implementations.
//!
//! Everything here scans a whole space — all `3^n` motifs, all `3^n`
//! pseudo-monomials, all `2^dim` words — and exists only to cross-check the
//! fast paths. Caps are hard errors, never silent truncation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::{all_motifs, Code, Word};
use crate::error::{Error, Result};
use crate::ideal::{CanonicalForm, PseudoMonomial, VariableSpace};
use crate::motif::Motif;
use crate::polar::{formal_polarize, gjs_prime_test};

/// Cap on `3^len` scans in the oracle.
pub const ORACLE_MOTIF_CAP: usize = 10;
/// Cap on `2^dim` scans in the oracle.
pub const ORACLE_AMBIENT_CAP: usize = 20;
/// Cap on the base length for the doubled-motif criterion scan.
pub const GJS_SCAN_CAP: usize = 4;

/// Maximal motifs by full scan: filter all `3^n` motifs down to those whose
/// variety fits in the code, then keep the maximal ones.
pub fn brute_max_mot(code: &Code) -> Result<Vec<Motif>> {
    if code.len() > ORACLE_MOTIF_CAP {
        return Err(Error::OverCap {
            len: code.len(),
            cap: ORACLE_MOTIF_CAP,
            what: "oracle motif scan",
        });
    }
    let mut mots: Vec<Motif> = all_motifs(code.len())
        .filter(|a| a.is_motif_of(code))
        .collect();
    // Maximality sweep from the star-rich end; anything below a kept motif
    // is not maximal.
    mots.sort_by_key(|a| std::cmp::Reverse(a.star_count()));
    let mut kept: Vec<Motif> = Vec::new();
    for a in mots {
        if !kept.iter().any(|k| a.leq(k)) {
            kept.push(a);
        }
    }
    kept.sort();
    Ok(kept)
}

/// Canonical form by full scan: all `3^n` pseudo-monomials vanishing on the
/// code, pruned to the divisibility-minimal ones.
pub fn brute_cf(code: &Code, space: VariableSpace) -> Result<CanonicalForm> {
    if code.len() != space.dim() {
        return Err(Error::LengthMismatch { expected: space.dim(), found: code.len() });
    }
    if code.len() > ORACLE_MOTIF_CAP {
        return Err(Error::OverCap {
            len: code.len(),
            cap: ORACLE_MOTIF_CAP,
            what: "oracle pseudo-monomial scan",
        });
    }
    let dim = space.dim();
    let mut vanishing: Vec<PseudoMonomial> = Vec::new();
    // Ternary odometer: digit 0 skips the variable, 1 takes the plain
    // factor, 2 the complemented one.
    for mut k in 0..3u64.pow(dim as u32) {
        let mut sigma = std::collections::BTreeSet::new();
        let mut tau = std::collections::BTreeSet::new();
        for i in 1..=dim {
            match k % 3 {
                1 => {
                    sigma.insert(i);
                }
                2 => {
                    tau.insert(i);
                }
                _ => {}
            }
            k /= 3;
        }
        let f = PseudoMonomial::new(space, sigma, tau).expect("disjoint by construction");
        if code.words().all(|w| !f.eval(w)) {
            vanishing.push(f);
        }
    }
    // Minimality sweep by ascending degree: a proper divisor has smaller
    // degree, so every non-minimal term meets a kept divisor.
    vanishing.sort_by_key(PseudoMonomial::degree);
    let mut kept: Vec<PseudoMonomial> = Vec::new();
    for f in vanishing {
        if !kept.iter().any(|g| g.divides(&f)) {
            kept.push(f);
        }
    }
    Ok(CanonicalForm::new(space, kept))
}

/// Vanishing set by full scan: all words annihilating every generator.
pub fn brute_variety(space: VariableSpace, gens: &[PseudoMonomial]) -> Result<Code> {
    let dim = space.dim();
    if dim > ORACLE_AMBIENT_CAP {
        return Err(Error::OverCap { len: dim, cap: ORACLE_AMBIENT_CAP, what: "oracle word scan" });
    }
    for g in gens {
        if g.space() != space {
            return Err(Error::SpaceMismatch {
                left: format!("{:?}", g.space()),
                right: format!("{space:?}"),
            });
        }
    }
    let words = (0..1u32 << dim)
        .map(|b| Word::from_bits(dim, b))
        .filter(|w| gens.iter().all(|g| !g.eval(w)));
    Ok(Code::from_iter(dim, words))
}

/// Result of scanning every doubled-space motif of a code through both the
/// deactivation criterion and direct prime containment.
#[derive(Clone, Debug)]
pub struct GjsScan {
    /// Motifs scanned (`3^(2n)`).
    pub checked: u64,
    /// One line per disagreement, in scan order.
    pub disagreements: Vec<String>,
}

/// Scans all `3^(2n)` doubled-space motifs, comparing the deactivation
/// criterion against prime containment on the formal polarization.
pub fn brute_gjs_scan(code: &Code) -> Result<GjsScan> {
    if code.len() > GJS_SCAN_CAP {
        return Err(Error::OverCap {
            len: code.len(),
            cap: GJS_SCAN_CAP,
            what: "doubled-motif criterion scan",
        });
    }
    let formal = formal_polarize(code)?;
    let mut checked = 0;
    let mut disagreements = Vec::new();
    for c in all_motifs(2 * code.len()) {
        checked += 1;
        let fast = gjs_prime_test(&c, code)?;
        let direct = c.is_motif_of(&formal);
        if fast != direct {
            disagreements.push(format!(
                "CODE {} MOTIF {} fast={fast} oracle={direct}",
                code.hex_bitset(),
                c.to_doubled_string(),
            ));
        }
    }
    Ok(GjsScan { checked, disagreements })
}

/// A random code: each word of the ambient space is included independently
/// with probability `density`.
pub fn random_code<R: Rng>(n: usize, density: f64, rng: &mut R) -> Code {
    let words = (0..1u32 << n)
        .map(|b| Word::from_bits(n, b))
        .filter(|_| rng.gen::<f64>() < density);
    Code::from_iter(n, words)
}

/// `count` seeded random codes of length `n`, cycling through inclusion
/// densities 0.25, 0.5, 0.75. Fully determined by `seed`.
pub fn seeded_codes(n: usize, count: usize, seed: u64) -> Vec<Code> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let densities = [0.25, 0.5, 0.75];
    (0..count)
        .map(|i| random_code(n, densities[i % densities.len()], &mut rng))
        .collect()
}

/// Every code on `n` coordinates, by ascending word-set bitmask. There are
/// `2^(2^n)` of them; keep `n` tiny.
pub fn exhaustive_codes(n: usize) -> Vec<Code> {
    assert!(n <= 3, "exhaustive code family above desk scale");
    let space = 1u32 << n;
    (0u64..1 << space)
        .map(|mask| {
            let words = (0..space)
                .filter(|&v| mask >> v & 1 == 1)
                .map(|v| Word::from_bits(n, v));
            Code::from_iter(n, words)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::max_mot_complement;
    use crate::ideal::neural_ideal_cf;

    fn code(n: usize, text: &str) -> Code {
        Code::parse(n, text).unwrap()
    }

    #[test]
    fn test_brute_max_mot_matches_fast_path() {
        for c in exhaustive_codes(2) {
            assert_eq!(brute_max_mot(&c).unwrap(), c.max_mot().unwrap(), "{c:?}");
        }
        let c = code(3, "000\n001\n011\n111");
        assert_eq!(brute_max_mot(&c).unwrap(), c.max_mot().unwrap());
    }

    #[test]
    fn test_brute_cf_matches_fast_path() {
        let s3 = VariableSpace::plain(3);
        let c = code(3, "000\n001\n011\n111");
        assert_eq!(brute_cf(&c, s3).unwrap(), neural_ideal_cf(&c, s3).unwrap());
        let s2 = VariableSpace::plain(2);
        for c in exhaustive_codes(2) {
            assert_eq!(brute_cf(&c, s2).unwrap(), neural_ideal_cf(&c, s2).unwrap(), "{c:?}");
        }
    }

    #[test]
    fn test_brute_variety_inverts_cf() {
        let s3 = VariableSpace::plain(3);
        let c = code(3, "000\n101\n110");
        let cf = neural_ideal_cf(&c, s3).unwrap();
        assert_eq!(brute_variety(s3, cf.terms()).unwrap(), c);
        // The unit ideal cuts out nothing; the zero ideal everything.
        let one = PseudoMonomial::one(s3);
        assert!(brute_variety(s3, &[one]).unwrap().is_empty());
        assert!(brute_variety(s3, &[]).unwrap().is_full());
    }

    #[test]
    fn test_brute_gjs_scan_clean() {
        let c = code(2, "00\n10");
        let scan = brute_gjs_scan(&c).unwrap();
        assert_eq!(scan.checked, 81);
        assert!(scan.disagreements.is_empty());
        assert!(brute_gjs_scan(&Code::empty(5)).is_err());
    }

    #[test]
    fn test_caps_are_hard_errors() {
        assert!(matches!(brute_max_mot(&Code::empty(11)), Err(Error::OverCap { .. })));
        let s11 = VariableSpace::plain(11);
        assert!(matches!(brute_cf(&Code::empty(11), s11), Err(Error::OverCap { .. })));
        let s21 = VariableSpace::plain(21);
        assert!(matches!(brute_variety(s21, &[]), Err(Error::OverCap { .. })));
    }

    #[test]
    fn test_seeded_codes_are_reproducible() {
        let a = seeded_codes(4, 6, 42);
        let b = seeded_codes(4, 6, 42);
        assert_eq!(a, b);
        let c = seeded_codes(4, 6, 43);
        assert_ne!(a, c);
        assert_eq!(a.len(), 6);
        assert!(a.iter().all(|code| code.len() == 4));
    }

    #[test]
    fn test_exhaustive_codes() {
        let all = exhaustive_codes(2);
        assert_eq!(all.len(), 16);
        assert!(all[0].is_empty());
        assert!(all[15].is_full());
    }

    #[test]
    fn test_transversal_against_oracle_on_all_small_codes() {
        // The complement's maximal motifs via the transversal search agree
        // with a direct scan of the complement, for every length-3 code.
        for c in exhaustive_codes(3) {
            let fast = max_mot_complement(3, &c.max_mot().unwrap()).unwrap();
            let slow = brute_max_mot(&c.complement().unwrap()).unwrap();
            assert_eq!(fast, slow, "{c:?}");
        }
    }
}
