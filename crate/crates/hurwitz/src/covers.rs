//! Ramification profiles, monodromy tuples and the enumeration of cover
//! sets.
//!
//! A degree-`d` cover of the line branched at four points is encoded by its
//! monodromy tuple `(γ1, γ2, γ3, γ4)` in `S_d`: the entries have prescribed
//! cycle types, multiply to the identity (right factor first) and generate a
//! transitive group. Two tuples describe isomorphic covers exactly when they
//! are simultaneously conjugate, so the enumeration works with one canonical
//! representative per conjugation class.

use std::collections::HashSet;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{compose_into, conjugate_into, is_transitive, CycleType, Permutation};
use crate::rational::{integer, ratio, Rational};

/// Centralizer sizes beyond this are refused by the enumeration entry points;
/// canonicalization enumerates the full centralizer of the anchor class.
const CENTRALIZER_CAP: u64 = 4_000_000;

/// The four prescribed conjugacy classes `(c1, c2, c3, c4)` over the branch
/// points, all of one degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RamificationProfile {
    degree: usize,
    classes: [CycleType; 4],
}

impl RamificationProfile {
    pub fn new(classes: [CycleType; 4]) -> Result<RamificationProfile> {
        let degree = classes[0].degree();
        for c in &classes {
            if c.degree() != degree {
                return Err(Error::DegreeMismatch(c.degree(), degree));
            }
        }
        Ok(RamificationProfile { degree, classes })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn classes(&self) -> &[CycleType; 4] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &CycleType {
        &self.classes[i]
    }

    /// Total ramification `Σ_i (d - k_i)` is even iff covers can exist; the
    /// product of the four classes' signs must be even.
    pub fn parity_ok(&self) -> bool {
        let total_cycles: usize = self.classes.iter().map(CycleType::num_parts).sum();
        total_cycles.is_multiple_of(2)
    }

    /// Genus of connected covers with this profile, by Riemann–Hurwitz:
    /// `g = d + 1 - (k1 + k2 + k3 + k4) / 2`. Negative output means the
    /// profile admits no cover.
    pub fn genus(&self) -> Result<i64> {
        if !self.parity_ok() {
            return Err(Error::OddParity);
        }
        let total_cycles: usize = self.classes.iter().map(CycleType::num_parts).sum();
        Ok(self.degree as i64 + 1 - (total_cycles as i64) / 2)
    }

    /// `d - Σ_i Σ_j 1/a_{i,j}`, the ramification correction entering the
    /// Hodge degree.
    pub fn ramification_defect(&self) -> Rational {
        let mut sum = integer(self.degree as i64);
        for class in &self.classes {
            for &part in class.parts() {
                sum -= ratio(1, part as i64);
            }
        }
        sum
    }
}

/// A monodromy tuple `(γ1, γ2, γ3, γ4)`: product is the identity (right
/// factor acts first) and the generated subgroup is transitive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MonodromyTuple {
    entries: [Permutation; 4],
}

impl MonodromyTuple {
    pub fn new(entries: [Permutation; 4]) -> Result<MonodromyTuple> {
        let degree = entries[0].degree();
        for e in &entries {
            if e.degree() != degree {
                return Err(Error::DegreeMismatch(e.degree(), degree));
            }
        }
        let product = entries[0].compose(&entries[1].compose(&entries[2].compose(&entries[3])));
        if !product.is_identity() {
            return Err(Error::ProductNotIdentity);
        }
        let gens: [&Permutation; 4] = [&entries[0], &entries[1], &entries[2], &entries[3]];
        if !is_transitive(&gens, degree) {
            return Err(Error::NotTransitive);
        }
        Ok(MonodromyTuple { entries })
    }

    /// Internal constructor for tuples produced by operations that preserve
    /// validity (braid moves, conjugation, the enumeration scan). Full
    /// re-validation lives in the test suites; this is a hot path.
    pub(crate) fn from_entries_unchecked(entries: [Permutation; 4]) -> MonodromyTuple {
        debug_assert!(entries.iter().all(|e| e.degree() == entries[0].degree()));
        MonodromyTuple { entries }
    }

    pub fn degree(&self) -> usize {
        self.entries[0].degree()
    }

    pub fn entries(&self) -> &[Permutation; 4] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &Permutation {
        &self.entries[i]
    }

    pub fn cycle_types(&self) -> [CycleType; 4] {
        [
            self.entries[0].cycle_type(),
            self.entries[1].cycle_type(),
            self.entries[2].cycle_type(),
            self.entries[3].cycle_type(),
        ]
    }

    /// The profile this tuple realizes.
    pub fn profile(&self) -> RamificationProfile {
        RamificationProfile::new(self.cycle_types()).expect("entries share a degree")
    }

    pub fn matches_profile(&self, profile: &RamificationProfile) -> bool {
        self.degree() == profile.degree()
            && self
                .entries
                .iter()
                .zip(profile.classes())
                .all(|(e, c)| &e.cycle_type() == c)
    }

    /// Entry-wise conjugation `τ (γ1, .., γ4) τ⁻¹`.
    pub fn conjugated_by(&self, tau: &Permutation) -> MonodromyTuple {
        MonodromyTuple {
            entries: [
                self.entries[0].conjugate_by(tau),
                self.entries[1].conjugate_by(tau),
                self.entries[2].conjugate_by(tau),
                self.entries[3].conjugate_by(tau),
            ],
        }
    }

    /// The canonical representative of this tuple's simultaneous-conjugation
    /// class. See [`Canonicalizer`] for the construction; the form is
    /// idempotent and two tuples are equivalent iff their canonical forms are
    /// equal.
    pub fn canonical_form(&self) -> MonodromyTuple {
        let canon = Canonicalizer::new(&self.cycle_types(), None).expect("no cap supplied");
        canon.canonical_form(self)
    }

    /// Simultaneous-conjugation equivalence.
    pub fn is_equivalent_to(&self, other: &MonodromyTuple) -> bool {
        self.degree() == other.degree() && self.canonical_form() == other.canonical_form()
    }
}

/// Canonical-form machinery shared across a whole profile.
///
/// The anchored entry is the position whose cycle type has the smallest
/// centralizer (ties resolved by position); every conjugator sending that
/// entry to its class representative is the representative's centralizer
/// composed with one fixed solution, so the canonical form is the
/// lexicographic minimum of the conjugated tuples over that coset. Anchoring
/// is a function of the cycle types alone, hence constant on conjugation
/// classes and across a profile. Building one of these costs a centralizer
/// enumeration; reuse it when canonicalizing many tuples of one profile.
pub struct Canonicalizer {
    anchor: usize,
    rep: Permutation,
    centralizer: Vec<Permutation>,
}

impl Canonicalizer {
    pub fn for_profile(profile: &RamificationProfile) -> Result<Canonicalizer> {
        Canonicalizer::new(profile.classes(), None)
    }

    pub(crate) fn new(types: &[CycleType; 4], cap: Option<u64>) -> Result<Canonicalizer> {
        let anchor = (0..4)
            .min_by_key(|&i| (types[i].centralizer_order(), i))
            .expect("four entries");
        let order = types[anchor].centralizer_order();
        let cap = cap.unwrap_or(CENTRALIZER_CAP);
        if order > BigUint::from(cap) {
            return Err(Error::BudgetExceeded {
                estimate: format!("centralizer of size {order}"),
                budget: cap.to_string(),
            });
        }
        Ok(Canonicalizer {
            anchor,
            rep: types[anchor].canonical_representative(),
            centralizer: types[anchor].centralizer_of_representative(),
        })
    }

    /// Canonical representative of the class of `tuple`, whose entry cycle
    /// types must match the profile this canonicalizer was built for.
    pub fn canonical_form(&self, tuple: &MonodromyTuple) -> MonodromyTuple {
        use std::cmp::Ordering;
        let d = tuple.degree();
        let tau0 = conjugator_onto(tuple.entry(self.anchor), &self.rep);
        let mut tau = vec![0u8; d];
        let mut best: [Vec<u8>; 4] = [vec![0u8; d], vec![0u8; d], vec![0u8; d], vec![0u8; d]];
        let mut scratch: [Vec<u8>; 4] = best.clone();
        let mut have_best = false;
        for z in &self.centralizer {
            compose_into(z.raw_images(), tau0.raw_images(), &mut tau);
            // Compare entry by entry while conjugating, bailing out as soon
            // as the candidate is strictly worse than the best so far.
            let mut verdict = Ordering::Equal;
            for k in 0..4 {
                conjugate_into(tuple.entries()[k].raw_images(), &tau, &mut scratch[k]);
                if have_best && verdict == Ordering::Equal {
                    verdict = scratch[k].cmp(&best[k]);
                    if verdict == Ordering::Greater {
                        break;
                    }
                }
            }
            if !have_best || verdict == Ordering::Less {
                std::mem::swap(&mut best, &mut scratch);
                have_best = true;
            }
        }
        MonodromyTuple::from_entries_unchecked(best.map(Permutation::from_raw))
    }
}

/// One permutation `τ` with `τ p τ⁻¹ = rep`, built by matching cycles of `p`
/// (sorted by length, then smallest point) onto the representative's blocks.
fn conjugator_onto(p: &Permutation, rep: &Permutation) -> Permutation {
    debug_assert_eq!(p.cycle_type(), rep.cycle_type());
    let d = p.degree();
    let mut cycles = p.cycles();
    cycles.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    let mut images = vec![0u8; d];
    let mut start = 0usize;
    for cycle in cycles {
        for (j, &x) in cycle.iter().enumerate() {
            images[x - 1] = (start + j + 1) as u8;
        }
        start += cycle.len();
    }
    let tau = Permutation::from_raw(images);
    debug_assert_eq!(&p.conjugate_by(&tau), rep);
    tau
}

/// The enumerated classes of a profile: one canonical representative per
/// equivalence class, sorted, so `count` is `N_d(c)`.
#[derive(Clone, Debug)]
pub struct CoverSet {
    profile: RamificationProfile,
    representatives: Vec<MonodromyTuple>,
}

impl CoverSet {
    pub fn profile(&self) -> &RamificationProfile {
        &self.profile
    }

    pub fn representatives(&self) -> &[MonodromyTuple] {
        &self.representatives
    }

    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}

#[derive(Clone, Debug, Default)]
pub struct EnumerationOptions {
    /// Split the scan over the second entry's class across threads. Results
    /// are identical either way.
    pub parallel: bool,
    /// Refuse scans whose candidate-pair count `|c2| · |c3|` exceeds this.
    pub pair_budget: Option<u64>,
}

/// Enumerate `Cov_d(c)` with default options.
pub fn enumerate_covers(profile: &RamificationProfile) -> Result<CoverSet> {
    enumerate_covers_with(profile, &EnumerationOptions::default())
}

/// Enumerate all equivalence classes of monodromy tuples with the given
/// profile: fix `γ1` as the class representative of `c1`, scan `γ2 ∈ c2` and
/// `γ3 ∈ c3`, solve `γ4 = (γ1 γ2 γ3)⁻¹`, keep the candidates whose `γ4` lands
/// in `c4` and whose group is transitive, and deduplicate by canonical form.
/// Infeasible profiles yield an empty set, not an error.
pub fn enumerate_covers_with(
    profile: &RamificationProfile,
    options: &EnumerationOptions,
) -> Result<CoverSet> {
    let empty = |profile: &RamificationProfile| CoverSet {
        profile: profile.clone(),
        representatives: Vec::new(),
    };
    if !profile.parity_ok() {
        return Ok(empty(profile));
    }
    if profile.genus().expect("parity checked") < 0 {
        return Ok(empty(profile));
    }
    if let Some(budget) = options.pair_budget {
        let pairs = profile.class(1).class_size() * profile.class(2).class_size();
        if pairs > BigUint::from(budget) {
            return Err(Error::BudgetExceeded {
                estimate: format!("{pairs} candidate pairs"),
                budget: budget.to_string(),
            });
        }
    }

    let canon = Canonicalizer::new(profile.classes(), None)?;
    let g1 = profile.class(0).canonical_representative();
    let c2_members = profile.class(1).class_members();
    let c3_members = profile.class(2).class_members();

    let scan_one = |g2: &Permutation| -> HashSet<MonodromyTuple> {
        let mut found = HashSet::new();
        let d = profile.degree();
        let g12 = g1.compose(g2);
        let mut product = vec![0u8; d];
        let mut counts = vec![0usize; d + 1];
        let mut target_counts = vec![0usize; d + 1];
        for &part in profile.class(3).parts() {
            target_counts[part] += 1;
        }
        for g3 in &c3_members {
            compose_into(g12.raw_images(), g3.raw_images(), &mut product);
            if !cycle_counts_match(&product, &mut counts, &target_counts) {
                continue;
            }
            if !is_transitive(&[&g1, g2, g3], d) {
                continue;
            }
            let g4 = Permutation::from_raw(invert_raw(&product));
            let tuple =
                MonodromyTuple::from_entries_unchecked([g1.clone(), g2.clone(), g3.clone(), g4]);
            found.insert(canon.canonical_form(&tuple));
        }
        found
    };

    let classes: HashSet<MonodromyTuple> = if options.parallel {
        c2_members
            .par_iter()
            .fold(HashSet::new, |mut acc, g2| {
                acc.extend(scan_one(g2));
                acc
            })
            .reduce(HashSet::new, |mut a, b| {
                a.extend(b);
                a
            })
    } else {
        let mut acc = HashSet::new();
        for g2 in &c2_members {
            acc.extend(scan_one(g2));
        }
        acc
    };

    let mut representatives: Vec<MonodromyTuple> = classes.into_iter().collect();
    representatives.sort();
    Ok(CoverSet {
        profile: profile.clone(),
        representatives,
    })
}

/// Cycle-length census of `p` compared against a target census, allocation
/// free. `counts` is scratch of length `d + 1` and is cleaned up before
/// returning.
fn cycle_counts_match(p: &[u8], counts: &mut [usize], target: &[usize]) -> bool {
    let d = p.len();
    let mut seen = 0u64;
    for start in 0..d {
        if seen & (1u64 << start) != 0 {
            continue;
        }
        let mut len = 0usize;
        let mut x = start;
        loop {
            seen |= 1u64 << x;
            len += 1;
            x = p[x] as usize - 1;
            if x == start {
                break;
            }
        }
        counts[len] += 1;
    }
    let ok = counts[..=d] == target[..=d];
    counts[..=d].fill(0);
    ok
}

fn invert_raw(p: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; p.len()];
    for (i, &y) in p.iter().enumerate() {
        inv[y as usize - 1] = (i + 1) as u8;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::orbits_under;
    use crate::text::{parse_monodromy_tuple, parse_profile};
    use proptest::prelude::*;

    fn tuple(text: &str, degree: usize) -> MonodromyTuple {
        parse_monodromy_tuple(text, degree).unwrap()
    }

    #[test]
    fn genus_from_profile() {
        let p = parse_profile("4|4|3,1|3,1", 4).unwrap();
        assert_eq!(p.genus().unwrap(), 2);
        for d in [3usize, 5, 7] {
            let all = format!("{d}|{d}|{d}|{d}");
            let p = parse_profile(&all, d).unwrap();
            assert_eq!(p.genus().unwrap(), d as i64 - 1);
        }
        let elliptic = parse_profile("2|2|2|2", 2).unwrap();
        assert_eq!(elliptic.genus().unwrap(), 1);
        // One transposition over a single branch point: odd parity.
        let odd = parse_profile("2|1,1|1,1|1,1", 2).unwrap();
        assert!(matches!(odd.genus(), Err(Error::OddParity)));
    }

    #[test]
    fn tuple_validation() {
        assert!(parse_monodromy_tuple("(1 2);(1 2);(1 2);(1 2)", 2).is_ok());
        // Product is not the identity.
        assert!(matches!(
            parse_monodromy_tuple("(1 2);(1 2);(1 2);id", 2),
            Err(Error::ProductNotIdentity)
        ));
        // Valid product but intransitive.
        assert!(matches!(
            parse_monodromy_tuple("(1 2);(1 2);id;id", 3),
            Err(Error::NotTransitive)
        ));
    }

    #[test]
    fn canonical_form_is_idempotent_and_class_invariant() {
        let r = tuple("(1 2 3 4);(1 4 3 2);(1 2 3);(1 3 2)", 4);
        let c = r.canonical_form();
        assert_eq!(c.canonical_form(), c);
        // Every conjugate lands on the same form.
        for images in permutations_of(4) {
            let tau = Permutation::from_images(images).unwrap();
            assert_eq!(r.conjugated_by(&tau).canonical_form(), c);
        }
        // Same, exhaustively over S_5 for a degree-5 tuple.
        let r5 = tuple("(1 2 3 4 5);(1 5 4 3 2);(1 2 3 4 5);(1 5 4 3 2)", 5);
        let c5 = r5.canonical_form();
        assert_eq!(c5.canonical_form(), c5);
        for images in permutations_of(5) {
            let tau = Permutation::from_images(images).unwrap();
            assert_eq!(r5.conjugated_by(&tau).canonical_form(), c5);
        }
    }

    #[test]
    fn canonical_form_of_first_example_tuple_keeps_leading_four_cycle() {
        let r = tuple("(1 2 3 4);(1 4 3 2);(1 2 3);(1 3 2)", 4);
        let c = r.canonical_form();
        assert_eq!(c.entry(0).to_string(), "(1 2 3 4)");
    }

    #[test]
    fn equivalence_by_brute_force_conjugation() {
        // Oracle: scan every conjugator.
        let r = tuple("(1 2 3 4);(1 4 3 2);(1 2 3);(1 3 2)", 4);
        let s = tuple("(1 2 3 4);(1 4 3 2);(1 3 2);(1 2 3)", 4);
        let brute = |a: &MonodromyTuple, b: &MonodromyTuple| {
            permutations_of(4).into_iter().any(|images| {
                let tau = Permutation::from_images(images).unwrap();
                &a.conjugated_by(&tau) == b
            })
        };
        assert!(!brute(&r, &s));
        assert!(!r.is_equivalent_to(&s));
        let conj = r.conjugated_by(&Permutation::from_cycles(4, &[vec![2, 4, 3]]).unwrap());
        assert!(brute(&r, &conj));
        assert!(r.is_equivalent_to(&conj));
        assert!(r.is_equivalent_to(&r));
    }

    #[test]
    fn enumerates_degree_two_double_covers() {
        let profile = parse_profile("2|2|2|2", 2).unwrap();
        let covers = enumerate_covers(&profile).unwrap();
        assert_eq!(covers.count(), 1);
        assert_eq!(
            covers.representatives()[0],
            tuple("(1 2);(1 2);(1 2);(1 2)", 2)
        );
    }

    #[test]
    fn degree_four_mixed_profile_has_eight_classes() {
        // Frozen against the pairwise-conjugation oracle: the six-element
        // family plus a second pair of classes.
        let profile = parse_profile("4|4|3,1|3,1", 4).unwrap();
        let covers = enumerate_covers(&profile).unwrap();
        assert_eq!(covers.count(), 8);
        assert_eq!(covers.count(), brute_force_count(&profile));
        for text in [
            "(1 2 3 4);(1 4 3 2);(1 2 3);(1 3 2)",
            "(1 2 3 4);(1 4 3 2);(1 3 2);(1 2 3)",
            "(1 2 3 4);(1 3 2 4);(1 2 3);(2 4 3)",
            "(1 2 3 4);(1 3 2 4);(1 3 4);(1 2 3)",
            "(1 2 3 4);(1 3 2 4);(2 4 3);(1 3 4)",
            "(1 2 3 4);(1 2 3 4);(1 2 3);(1 2 4)",
        ] {
            let member = tuple(text, 4).canonical_form();
            assert!(covers.representatives().contains(&member), "missing {text}");
        }
    }

    #[test]
    fn enumerates_cyclic_triple_covers() {
        let profile = parse_profile("3|3|3|3", 3).unwrap();
        let covers = enumerate_covers(&profile).unwrap();
        let target = tuple("(1 2 3);(1 3 2);(1 2 3);(1 3 2)", 3).canonical_form();
        assert!(covers.representatives().contains(&target));
    }

    #[test]
    fn infeasible_profiles_yield_empty_sets() {
        let odd = parse_profile("2|1,1|1,1|1,1", 2).unwrap();
        assert!(enumerate_covers(&odd).unwrap().is_empty());
        // Negative formula genus.
        let neg = parse_profile("1,1,1|1,1,1|1,1,1|1,1,1", 3).unwrap();
        assert!(enumerate_covers(&neg).unwrap().is_empty());
    }

    #[test]
    fn enumeration_agrees_with_raw_brute_force_on_small_profiles() {
        // Oracle: same scan, but deduplicated by pairwise conjugation tests
        // instead of canonical forms. Exhaustive over every profile up to
        // degree 4, plus selected degree-5 profiles.
        for degree in 1..=4usize {
            let types = CycleType::all_of_degree(degree);
            for c1 in &types {
                for c2 in &types {
                    for c3 in &types {
                        for c4 in &types {
                            let profile = RamificationProfile::new([
                                c1.clone(),
                                c2.clone(),
                                c3.clone(),
                                c4.clone(),
                            ])
                            .unwrap();
                            let fast = enumerate_covers(&profile).unwrap();
                            let raw = brute_force_count(&profile);
                            assert_eq!(
                                fast.count(),
                                raw,
                                "profile {c1}|{c2}|{c3}|{c4} at degree {degree}"
                            );
                        }
                    }
                }
            }
        }
        for (text, degree) in [
            ("5|5|5|5", 5usize),
            ("3,2|2,2,1|2,2,1|2,1,1,1", 5),
            ("4,1|3,2|2,2,1|5", 5),
        ] {
            let profile = parse_profile(text, degree).unwrap();
            let fast = enumerate_covers(&profile).unwrap();
            let raw = brute_force_count(&profile);
            assert_eq!(fast.count(), raw, "profile {text}");
        }
    }

    #[test]
    fn parallel_enumeration_matches_sequential() {
        let profile = parse_profile("4|4|3,1|3,1", 4).unwrap();
        let seq = enumerate_covers(&profile).unwrap();
        let par = enumerate_covers_with(
            &profile,
            &EnumerationOptions {
                parallel: true,
                pair_budget: None,
            },
        )
        .unwrap();
        assert_eq!(seq.representatives(), par.representatives());
    }

    #[test]
    fn pair_budget_is_enforced() {
        let profile = parse_profile("4|4|3,1|3,1", 4).unwrap();
        let res = enumerate_covers_with(
            &profile,
            &EnumerationOptions {
                parallel: false,
                pair_budget: Some(10),
            },
        );
        assert!(matches!(res, Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn enumerated_tuples_satisfy_all_invariants() {
        let profile = parse_profile("4|4|3,1|3,1", 4).unwrap();
        let covers = enumerate_covers(&profile).unwrap();
        for rep in covers.representatives() {
            assert!(rep.matches_profile(&profile));
            // Re-validate through the public constructor.
            assert!(MonodromyTuple::new(rep.entries().clone()).is_ok());
            assert_eq!(&rep.canonical_form(), rep);
            let gens = rep.entries().clone();
            assert_eq!(orbits_under(&gens, 4).unwrap().len(), 1);
        }
    }

    /// All image tables of `S_d`, for oracle scans.
    fn permutations_of(d: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut items: Vec<usize> = (1..=d).collect();
        heap_recurse(&mut items, d, &mut out);
        out
    }

    fn heap_recurse(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap_recurse(items, k - 1, out);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }

    fn brute_force_count(profile: &RamificationProfile) -> usize {
        let d = profile.degree();
        let g1 = profile.class(0).canonical_representative();
        let mut raw: Vec<MonodromyTuple> = Vec::new();
        for g2 in profile.class(1).class_members() {
            for g3 in profile.class(2).class_members() {
                let p = g1.compose(&g2).compose(&g3);
                let g4 = p.inverse();
                if &g4.cycle_type() != profile.class(3) {
                    continue;
                }
                if let Ok(t) = MonodromyTuple::new([g1.clone(), g2.clone(), g3.clone(), g4]) {
                    raw.push(t);
                }
            }
        }
        let taus: Vec<Permutation> = permutations_of(d)
            .into_iter()
            .map(|v| Permutation::from_images(v).unwrap())
            .collect();
        let mut classes: Vec<MonodromyTuple> = Vec::new();
        'outer: for t in raw {
            for class_rep in &classes {
                if taus.iter().any(|tau| &t.conjugated_by(tau) == class_rep) {
                    continue 'outer;
                }
            }
            classes.push(t);
        }
        classes.len()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn canonical_form_kills_conjugation(seed in 0u64..10_000) {
            // A deterministic pseudo-random transitive tuple of degree 5.
            let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1);
            let mut rand_perm = || {
                let mut images: Vec<usize> = (1..=5).collect();
                for i in (1..5).rev() {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    let j = (state >> 33) as usize % (i + 1);
                    images.swap(i, j);
                }
                Permutation::from_images(images).unwrap()
            };
            let g1 = rand_perm();
            let g2 = rand_perm();
            let g3 = rand_perm();
            let g4 = g1.compose(&g2.compose(&g3)).inverse();
            if let Ok(t) = MonodromyTuple::new([g1, g2, g3, g4]) {
                let tau = rand_perm();
                prop_assert_eq!(
                    t.conjugated_by(&tau).canonical_form(),
                    t.canonical_form()
                );
            }
        }
    }
}
