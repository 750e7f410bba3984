//! Bundled property suites.
//!
//! Each suite runs a fixed list of named checks over a supplied code family
//! and returns per-check tallies. The checks cross-validate the fast paths
//! against the brute-force oracles and against each other; sizes above a
//! sub-check's scan budget fall back to transversal-based equivalents so the
//! suites stay usable on every family the caps admit.

use std::collections::BTreeSet;

use crate::code::{all_motifs, max_mot_complement, Code, Word};
use crate::error::Result;
use crate::ideal::{
    cf_of_pm_ideal, lagrange, min_primes, motivic_prime, neural_ideal_cf,
    prime_contains_neural_ideal, primary_decomposition, variety_of_neural_ideal, CanonicalForm,
    MotivicPrime, PseudoMonomial, VariableSpace,
};
use crate::motif::{Motif, Trit};
use crate::oracle::{
    brute_cf, brute_gjs_scan, brute_max_mot, brute_variety, GJS_SCAN_CAP, ORACLE_MOTIF_CAP,
};
use crate::partial::{PartialCode, PartialMotif, PartialSym};
use crate::polar::{
    bar_polarize_motif, cf_formal_polarized, cf_of_polarized_code, cf_polarized_ideal,
    depolarize_motif, formal_polarize, max_mot_formal_polarized, max_mot_polarized,
    min_primes_formal_polarized, min_primes_polarized, polarize_code, polarize_motif, polarize_pm,
};

/// How many failure descriptions a check keeps.
const SAMPLE_LIMIT: usize = 8;
/// Largest base length for full doubled-side enumerations inside the suite.
const DIRECT_DOUBLED: usize = 4;
/// Largest length for exhaustive single-side motif scans inside the suite.
const SMALL_SCAN: usize = 4;
/// Largest length for exhaustive pseudo-monomial membership audits.
const MEMBERSHIP_EXHAUSTIVE: usize = 5;
/// Largest length for the pair-transfer checks.
const PAIR_CAP: usize = 6;

/// Tally of one named property over a run.
#[derive(Clone, Debug)]
pub struct Check {
    /// What was checked.
    pub name: &'static str,
    /// Cases examined.
    pub checked: u64,
    /// Cases that failed.
    pub failures: u64,
    /// Descriptions of the first few failures.
    pub samples: Vec<String>,
}

impl Check {
    /// An empty tally.
    #[must_use]
    pub fn new(name: &'static str) -> Self {
        Check { name, checked: 0, failures: 0, samples: Vec::new() }
    }

    /// Records one case; `describe` is only rendered on failure.
    pub fn expect<F: FnOnce() -> String>(&mut self, ok: bool, describe: F) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.samples.len() < SAMPLE_LIMIT {
                self.samples.push(describe());
            }
        }
    }

    /// True when no case failed.
    #[must_use]
    pub fn is_ok(&self) -> bool {
        self.failures == 0
    }

    /// One-line report: status, name, tallies, first failure if any.
    #[must_use]
    pub fn summary(&self) -> String {
        if self.is_ok() {
            format!("ok   {} ({} cases)", self.name, self.checked)
        } else {
            let first = self.samples.first().map_or("", String::as_str);
            format!("FAIL {} ({} of {} cases; e.g. {})", self.name, self.failures, self.checked, first)
        }
    }
}

/// True when every check passed.
#[must_use]
pub fn all_ok(checks: &[Check]) -> bool {
    checks.iter().all(Check::is_ok)
}

/// Motif and pseudo-monomial laws at fixed small lengths; independent of any
/// code family.
pub fn motif_suite() -> Result<Vec<Check>> {
    let mut order = Check::new("motif/order-matches-variety");
    let mut monoid = Check::new("motif/addition-monoid");
    let mut disjoint = Check::new("motif/disjoint-iff-one-component");
    let mut starring = Check::new("motif/starring-summand-keeps-ones");
    let mut bar_inv = Check::new("motif/bar-involution");
    let mut order_pol = Check::new("motif/order-transfers-to-polarization");
    let mut dis_pol = Check::new("motif/disjointness-transfers-to-polarization");
    let mut indicator = Check::new("motif/indicator-polarizes-as-flip");
    let mut depol = Check::new("motif/depolarize-inverts");
    let mut pm_div = Check::new("pm/divides-matches-evaluation");

    let has_one = |m: &Motif| m.trits().contains(&Trit::One);
    for len in 1..=SMALL_SCAN {
        let motifs: Vec<Motif> = all_motifs(len).collect();
        let varieties: Vec<Code> = motifs.iter().map(Motif::variety).collect();
        let polarized: Vec<Motif> = motifs.iter().map(polarize_motif).collect();
        let zero = Motif::from_word(&Word::zero(len));
        for (i, a) in motifs.iter().enumerate() {
            monoid.expect(&(a + &zero) == a && &(&zero + a) == a, || format!("identity at {a}"));
            bar_inv.expect(a.bar().bar() == *a, || format!("{a}"));
            for (j, b) in motifs.iter().enumerate() {
                let sum = a + b;
                order.expect(
                    a.leq(b) == varieties[i].is_subset(&varieties[j]),
                    || format!("{a} vs {b}"),
                );
                monoid.expect(sum == b + a, || format!("{a}+{b} not commutative"));
                disjoint.expect(
                    a.is_disjoint(b) == has_one(&sum)
                        && a.is_disjoint(b) == varieties[i].is_disjoint_from(&varieties[j]),
                    || format!("{a} vs {b}"),
                );
                order_pol.expect(
                    a.leq(b) == polarized[i].leq(&polarized[j]),
                    || format!("{a} vs {b}"),
                );
                dis_pol.expect(
                    a.is_disjoint(b) == polarized[i].is_disjoint(&bar_polarize_motif(b)),
                    || format!("{a} vs {b}"),
                );
                if has_one(&sum) {
                    for bp in motifs.iter().filter(|x| x.leq(b)) {
                        starring.expect(has_one(&(a + bp)), || format!("{a}+{bp} (under {b})"));
                    }
                }
                for c in &motifs {
                    monoid.expect(&sum + c == a + &(b + c), || format!("({a}+{b})+{c}"));
                }
            }
        }
    }

    for len in 1..=6 {
        let space = VariableSpace::plain(len);
        let dspace = VariableSpace::doubled(len);
        for a in all_motifs(len) {
            let lifted = polarize_pm(&lagrange(&a, space))?;
            indicator.expect(
                lifted == lagrange(&bar_polarize_motif(&a), dspace),
                || format!("{a}"),
            );
            let round = depolarize_motif(&polarize_motif(&a));
            depol.expect(round.is_ok_and(|d| d == a), || format!("{a}"));
        }
    }

    for n in 1..=SMALL_SCAN {
        let space = VariableSpace::plain(n);
        let pms = all_pms(space);
        let words: Vec<Word> = (0..1u32 << n).map(|b| Word::from_bits(n, b)).collect();
        for f in &pms {
            for g in &pms {
                let implied = words.iter().all(|w| !g.eval(w) || f.eval(w));
                pm_div.expect(f.divides(g) == implied, || format!("{f} vs {g}"));
            }
        }
    }

    Ok(vec![
        order, monoid, disjoint, starring, bar_inv, order_pol, dis_pol, indicator, depol, pm_div,
    ])
}

/// Code-level laws over a family.
#[allow(clippy::too_many_lines)]
pub fn code_suite(codes: &[Code]) -> Result<Vec<Check>> {
    let mut mm_law = Check::new("max-mot/antichain-cover");
    let mut mm_comp = Check::new("max-mot/complement-transversal");
    let mut cf_cut = Check::new("cf/vanishes-on-code-cuts-rest");
    let mut cf_anti = Check::new("cf/divisibility-antichain");
    let mut cf_idem = Check::new("cf/idempotent");
    let mut cf_member = Check::new("cf/membership-routes-agree");
    let mut cf_recut = Check::new("cf/evaluation-recovers-code");
    let mut pr_rev = Check::new("primes/reverse-antichain");
    let mut pr_dom = Check::new("primes/containment-matches-domination");
    let mut p_mm = Check::new("polar/max-mot-transfer");
    let mut p_mot = Check::new("polar/motifs-transfer");
    let mut p_sub = Check::new("polar/code-inside-formal");
    let mut p_cf = Check::new("polar/cf-chain");
    let mut p_mono = Check::new("polar/cf-plain-monomials");
    let mut p_pr = Check::new("polar/min-prime-chain");
    let mut p_dec = Check::new("polar/decomposition-elementwise");
    let mut part_rt = Check::new("partial/deactivation-roundtrip");

    for c in codes {
        let n = c.len();
        let space = VariableSpace::plain(n);
        let dspace = VariableSpace::doubled(n);
        let tag = || format!("n={n} code {}", c.hex_bitset());

        let mm = c.max_mot()?;
        let mut cover = Code::empty(n);
        let mut law_ok = true;
        for (i, a) in mm.iter().enumerate() {
            law_ok &= a.is_motif_of(c);
            law_ok &= mm[i + 1..].iter().all(|b| !a.leq(b) && !b.leq(a));
            for w in a.words() {
                cover.insert(w);
            }
        }
        mm_law.expect(law_ok && cover == *c, tag);

        let comp = c.complement()?;
        mm_comp.expect(max_mot_complement(n, &mm)? == comp.max_mot()?, tag);

        let cf = neural_ideal_cf(c, space)?;
        let cut_ok = (0..1u32 << n).all(|b| {
            let w = Word::from_bits(n, b);
            cf.terms().iter().any(|t| t.eval(&w)) == !c.contains(&w)
        });
        cf_cut.expect(cut_ok, tag);

        let anti_ok = cf.terms().iter().enumerate().all(|(i, f)| {
            cf.terms().iter().enumerate().all(|(j, g)| i == j || !f.divides(g))
        });
        cf_anti.expect(anti_ok, tag);
        cf_idem.expect(cf_of_pm_ideal(space, cf.terms())? == cf, tag);

        // Membership by divisibility against membership by evaluation.
        let vanishes = |f: &PseudoMonomial| c.words().all(|w| !f.eval(w));
        let mut member_ok = cf.terms().iter().all(|f| cf.ideal_contains(f) && vanishes(f));
        member_ok &= mm.iter().all(|s| !cf.ideal_contains(&lagrange(s, space)));
        if n <= MEMBERSHIP_EXHAUSTIVE {
            member_ok &= all_pms(space).iter().all(|f| cf.ideal_contains(f) == vanishes(f));
        }
        cf_member.expect(member_ok, tag);

        cf_recut.expect(variety_of_neural_ideal(c, space)? == *c, tag);

        // Larger motifs give smaller primes, so generator sets never nest.
        let primes = min_primes(c, space)?;
        let gens: Vec<BTreeSet<String>> = primes
            .iter()
            .map(|p| p.generator_strings().into_iter().collect())
            .collect();
        let rev_ok = gens.iter().enumerate().all(|(i, ga)| {
            gens.iter().enumerate().all(|(j, gb)| i == j || !ga.is_subset(gb))
        });
        pr_rev.expect(rev_ok, tag);

        if n <= SMALL_SCAN {
            let dom_ok = all_motifs(n)
                .all(|a| prime_contains_neural_ideal(&a, c) == mm.iter().any(|b| a.leq(b)));
            pr_dom.expect(dom_ok, tag);
        }

        let cp = polarize_code(c)?;
        let fp = formal_polarize(c)?;

        // Polarizing the maximal motifs yields the polarized code's maximal
        // motifs: antichain, transversal round trip, and (small sizes) the
        // brute scan agree.
        let pol = max_mot_polarized(c)?;
        let mut trans_ok = pol
            .iter()
            .enumerate()
            .all(|(i, a)| pol[i + 1..].iter().all(|b| !a.leq(b) && !b.leq(a)));
        trans_ok &= max_mot_complement(2 * n, &max_mot_complement(2 * n, &pol)?)? == pol;
        if 2 * n <= ORACLE_MOTIF_CAP {
            trans_ok &= brute_max_mot(&cp)? == pol;
        }
        p_mm.expect(trans_ok, tag);

        if n <= SMALL_SCAN {
            let mot_ok = all_motifs(n)
                .filter(|a| a.is_motif_of(c))
                .all(|a| polarize_motif(&a).is_motif_of(&cp));
            p_mot.expect(mot_ok, tag);
        }

        p_sub.expect(cp.is_subset(&fp), tag);

        // Canonical-form chain: both doubled routes agree, survive the
        // transversal round trip, match the direct computation at small
        // sizes, and sit inside the polarized code's canonical form.
        let polar_cf = cf_polarized_ideal(c)?;
        let mut chain_ok = polar_cf == cf_formal_polarized(c)?;
        let back: Vec<PseudoMonomial> = max_mot_complement(2 * n, &max_mot_formal_polarized(c)?)?
            .iter()
            .map(|b| lagrange(b, dspace))
            .collect();
        chain_ok &= CanonicalForm::new(dspace, back) == polar_cf;
        if n <= DIRECT_DOUBLED {
            chain_ok &= neural_ideal_cf(&fp, dspace)? == polar_cf;
        }
        let big = cf_of_polarized_code(c)?;
        chain_ok &= polar_cf.is_subset_of(&big);
        p_cf.expect(chain_ok, tag);

        p_mono.expect(big.terms().iter().all(|t| t.tau().is_empty()), tag);

        let p_polar = min_primes_polarized(c)?;
        let p_formal = min_primes_formal_polarized(c)?;
        let mut pchain_ok = p_polar.iter().all(|p| p_formal.contains(p));
        if n <= DIRECT_DOUBLED {
            pchain_ok &= min_primes(&cp, dspace)? == p_polar;
        }
        p_pr.expect(pchain_ok, tag);

        if !c.is_empty() {
            // The doubled decomposition is the polarized decomposition,
            // element by element, and stays irredundant.
            let mut from_base: Vec<MotivicPrime> = primary_decomposition(c, space)?
                .iter()
                .map(|p| motivic_prime(&polarize_motif(p.motif()), dspace))
                .collect();
            from_base.sort();
            let mut dec_ok = from_base == p_polar;
            dec_ok &= from_base.iter().enumerate().all(|(i, p)| {
                from_base[i + 1..]
                    .iter()
                    .all(|q| !p.motif().leq(q.motif()) && !q.motif().leq(p.motif()))
            });
            if n <= DIRECT_DOUBLED {
                dec_ok &= primary_decomposition(&cp, dspace)? == p_polar;
            }
            p_dec.expect(dec_ok, tag);
        }

        if n <= SMALL_SCAN {
            let mut idx_sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
            idx_sets.extend((1..=n).map(|i| BTreeSet::from([i])));
            if n >= 2 {
                idx_sets.push(BTreeSet::from([1, 2]));
            }
            for idx in idx_sets {
                let p = c.deactivate(&idx)?;
                part_rt.expect(
                    p.max_par_mot()? == brute_max_par_mot(&p)?,
                    || format!("n={n} code {} idx {idx:?}", c.hex_bitset()),
                );
            }
        }
    }

    Ok(vec![
        mm_law, mm_comp, cf_cut, cf_anti, cf_idem, cf_member, cf_recut, pr_rev, pr_dom, p_mm,
        p_mot, p_sub, p_cf, p_mono, p_pr, p_dec, part_rt,
    ])
}

/// Inclusion-transfer law on pairs drawn from the family: a code sits in a
/// complement exactly when its flip-polarized image sits in the polarized
/// complement.
pub fn pair_suite(codes: &[Code]) -> Result<Vec<Check>> {
    let mut chk = Check::new("pairs/complement-inclusion-transfers");
    for (i, c) in codes.iter().enumerate() {
        let n = c.len();
        if n > PAIR_CAP {
            continue;
        }
        let comp = c.complement()?;
        let cp_comp = polarize_code(c)?.complement()?;
        let mut partners = vec![comp.clone()];
        if let Some(d) = codes[i + 1..].iter().find(|d| d.len() == n) {
            partners.push(d.clone());
        }
        for d in partners {
            let lhs = d.is_subset(&comp);
            let rhs = bar_polarized_code(&d)?.is_subset(&cp_comp);
            chk.expect(
                lhs == rhs,
                || format!("n={n} c={} d={}", c.hex_bitset(), d.hex_bitset()),
            );
        }
    }
    Ok(vec![chk])
}

/// Full doubled-motif criterion scans for every family member within the
/// scan cap; larger codes are skipped.
pub fn gjs_suite(codes: &[Code]) -> Result<Vec<Check>> {
    let mut chk = Check::new("gjs/criterion-matches-containment");
    for c in codes {
        if c.len() > GJS_SCAN_CAP {
            continue;
        }
        let scan = brute_gjs_scan(c)?;
        chk.checked += scan.checked;
        for line in scan.disagreements {
            chk.failures += 1;
            if chk.samples.len() < SAMPLE_LIMIT {
                chk.samples.push(line);
            }
        }
    }
    Ok(vec![chk])
}

/// Brute-force oracles against the fast paths; codes over the oracle cap are
/// skipped.
pub fn oracle_suite(codes: &[Code]) -> Result<Vec<Check>> {
    let mut omm = Check::new("oracle/max-mot-agrees");
    let mut ocf = Check::new("oracle/cf-agrees");
    let mut ova = Check::new("oracle/cf-variety-roundtrip");
    for c in codes {
        let n = c.len();
        if n > ORACLE_MOTIF_CAP {
            continue;
        }
        let tag = || format!("n={n} code {}", c.hex_bitset());
        let space = VariableSpace::plain(n);
        omm.expect(brute_max_mot(c)? == c.max_mot()?, tag);
        let cf = neural_ideal_cf(c, space)?;
        ocf.expect(brute_cf(c, space)? == cf, tag);
        ova.expect(brute_variety(space, cf.terms())? == *c, tag);
    }
    Ok(vec![omm, ocf, ova])
}

/// Everything: motif laws once, then the code, pair, and oracle suites over
/// the family. The doubled-motif criterion scan is separate ([`gjs_suite`])
/// because of its cost.
pub fn full_suite(codes: &[Code]) -> Result<Vec<Check>> {
    let mut checks = motif_suite()?;
    checks.extend(code_suite(codes)?);
    checks.extend(pair_suite(codes)?);
    checks.extend(oracle_suite(codes)?);
    Ok(checks)
}

/// Every pseudo-monomial of the space: each variable absent, plain, or
/// complemented.
fn all_pms(space: VariableSpace) -> Vec<PseudoMonomial> {
    let dim = space.dim();
    let mut out = Vec::with_capacity(3usize.pow(dim as u32));
    for mut k in 0..3u64.pow(dim as u32) {
        let mut sigma = BTreeSet::new();
        let mut tau = BTreeSet::new();
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
        out.push(PseudoMonomial::new(space, sigma, tau).expect("disjoint by construction"));
    }
    out
}

/// Union of the flip-polarize-flip varieties of a code's maximal motifs.
fn bar_polarized_code(d: &Code) -> Result<Code> {
    let mut out = Code::empty(2 * d.len());
    for b in d.max_mot()? {
        for w in bar_polarize_motif(&b).words() {
            out.insert(w);
        }
    }
    Ok(out)
}

/// Maximal partial motifs by scanning every candidate with the right
/// inactive set.
fn brute_max_par_mot(p: &PartialCode) -> Result<Vec<PartialMotif>> {
    let n = p.len();
    let active: Vec<usize> = (0..n).filter(|i| !p.inactive().contains(&(i + 1))).collect();
    let mut members: Vec<PartialMotif> = Vec::new();
    for pat in all_motifs(active.len()) {
        let mut syms = vec![PartialSym::Inactive; n];
        for (k, &pos) in active.iter().enumerate() {
            syms[pos] = match pat.get(k) {
                Trit::Zero => PartialSym::Zero,
                Trit::One => PartialSym::One,
                Trit::Star => PartialSym::Star,
            };
        }
        let cand = PartialMotif::new(syms);
        if cand.is_par_mot_of(p)? {
            members.push(cand);
        }
    }
    let mut maximal: Vec<PartialMotif> = Vec::new();
    for a in &members {
        if members.iter().all(|b| a == b || !a.leq(b)) {
            maximal.push(a.clone());
        }
    }
    maximal.sort();
    Ok(maximal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{exhaustive_codes, seeded_codes};

    #[test]
    fn test_check_tallies() {
        let mut chk = Check::new("sample");
        chk.expect(true, || unreachable!());
        chk.expect(false, || "broken case".to_string());
        assert_eq!(chk.checked, 2);
        assert_eq!(chk.failures, 1);
        assert!(!chk.is_ok());
        assert!(chk.summary().contains("FAIL sample"));
        assert!(chk.summary().contains("broken case"));
        assert!(!all_ok(&[chk]));
    }

    #[test]
    fn test_motif_suite_passes() {
        let checks = motif_suite().unwrap();
        for chk in &checks {
            assert!(chk.is_ok(), "{}", chk.summary());
            assert!(chk.checked > 0, "{} ran nothing", chk.name);
        }
    }

    #[test]
    fn test_full_suite_exhaustive_small() {
        let checks = full_suite(&exhaustive_codes(2)).unwrap();
        for chk in &checks {
            assert!(chk.is_ok(), "{}", chk.summary());
        }
    }

    #[test]
    fn test_code_suite_seeded() {
        let codes = seeded_codes(4, 6, 42);
        let checks = code_suite(&codes).unwrap();
        for chk in &checks {
            assert!(chk.is_ok(), "{}", chk.summary());
        }
    }

    #[test]
    fn test_gjs_suite_scans() {
        let codes = vec![Code::parse(2, "10").unwrap()];
        let checks = gjs_suite(&codes).unwrap();
        assert_eq!(checks[0].checked, 81);
        assert!(checks[0].is_ok());
        // Codes over the scan cap are skipped, not errors.
        let big = vec![Code::empty(5)];
        assert_eq!(gjs_suite(&big).unwrap()[0].checked, 0);
    }

    #[test]
    fn test_brute_max_par_mot_matches() {
        let c = Code::parse(3, "000\n100\n110\n011").unwrap();
        let idx = BTreeSet::from([2]);
        let p = c.deactivate(&idx).unwrap();
        assert_eq!(brute_max_par_mot(&p).unwrap(), p.max_par_mot().unwrap());
    }
}
