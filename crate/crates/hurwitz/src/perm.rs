//! Permutations of `{1, .., d}` and cycle-structure utilities.
//!
//! Points are 1-based throughout, matching ordinary cycle notation such as
//! `(1 2 3)(4)`. The composition convention is fixed once and for all:
//! `p.compose(&q)` applies `q` first and then `p`, so a product written
//! `γ1 γ2 γ3 γ4` acts with `γ4` first. Every other module relies on this
//! convention.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Hard cap on permutation degree. Orbit computations use one machine word
/// per point set, so the cap keeps them in a single `u64`.
pub const DEGREE_CAP: usize = 64;

fn check_degree(degree: usize) -> Result<()> {
    if degree == 0 || degree > DEGREE_CAP {
        return Err(Error::DegreeOutOfRange(degree));
    }
    Ok(())
}

/// A permutation of the points `{1, .., d}`, stored by its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    /// `images[i]` is the image of the point `i + 1`; values are 1-based.
    images: Vec<u8>,
}

impl Permutation {
    /// The identity on `{1, .., degree}`.
    pub fn identity(degree: usize) -> Permutation {
        assert!(
            (1..=DEGREE_CAP).contains(&degree),
            "degree {degree} out of range"
        );
        Permutation {
            images: (1..=degree as u8).collect(),
        }
    }

    /// Build from a 1-based image table: `images[i]` is the image of `i + 1`.
    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        check_degree(images.len())?;
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &y in &images {
            if y == 0 || y > degree {
                return Err(Error::InvalidPermutation(format!(
                    "image {y} out of range 1..={degree}"
                )));
            }
            if seen[y - 1] {
                return Err(Error::InvalidPermutation(format!("image {y} repeated")));
            }
            seen[y - 1] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|y| y as u8).collect(),
        })
    }

    /// Build from disjoint cycles on `{1, .., degree}`; unlisted points are
    /// fixed. Cycles of length 1 are allowed and redundant.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Permutation> {
        check_degree(degree)?;
        let mut images: Vec<u8> = (1..=degree as u8).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for &x in cycle {
                if x == 0 || x > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} out of range 1..={degree}"
                    )));
                }
                if touched[x - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} appears in two cycles"
                    )));
                }
                touched[x - 1] = true;
            }
            for (i, &x) in cycle.iter().enumerate() {
                let y = cycle[(i + 1) % cycle.len()];
                images[x - 1] = y as u8;
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_raw(images: Vec<u8>) -> Permutation {
        debug_assert!({
            let mut sorted: Vec<u8> = images.clone();
            sorted.sort_unstable();
            sorted == (1..=images.len() as u8).collect::<Vec<u8>>()
        });
        Permutation { images }
    }

    pub(crate) fn raw_images(&self) -> &[u8] {
        &self.images
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        assert!(x >= 1 && x <= self.degree(), "point {x} out of range");
        self.images[x - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &y)| y as usize == i + 1)
    }

    /// Composition with `other` acting first: `(self ∘ other)(x) = self(other(x))`.
    ///
    /// Panics if the degrees differ; callers that accept untrusted input
    /// validate degrees when constructing the permutations.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            other.degree(),
            "cannot compose permutations of different degrees"
        );
        let mut images = vec![0u8; self.degree()];
        compose_into(&self.images, &other.images, &mut images);
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (i, &y) in self.images.iter().enumerate() {
            images[y as usize - 1] = (i + 1) as u8;
        }
        Permutation { images }
    }

    /// The conjugate `t · self · t⁻¹` (under the composition convention above).
    /// Conjugation relabels points: it maps the cycle `(x y ..)` to
    /// `(t(x) t(y) ..)`, so the cycle type is preserved.
    pub fn conjugate_by(&self, t: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            t.degree(),
            "cannot conjugate permutations of different degrees"
        );
        let mut images = vec![0u8; self.degree()];
        conjugate_into(&self.images, &t.images, &mut images);
        Permutation { images }
    }

    /// `self` raised to an integer power (negative powers via the inverse).
    pub fn power(&self, exponent: i64) -> Permutation {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut result = Permutation::identity(self.degree());
        for _ in 0..exponent.unsigned_abs() {
            result = base.compose(&result);
        }
        result
    }

    /// All cycles, including fixed points, each starting at its smallest
    /// point, ordered by smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut cycles = Vec::new();
        for start in 1..=d {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            loop {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.images[x - 1] as usize;
                if x == start {
                    break;
                }
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut parts: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<Vec<usize>> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

// Debug defers to Display; cycle notation reads much better than raw image
// tables in test failures.
impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `out[i] = p[q[i] - 1]`: apply `q` first, then `p`. All slices 1-based images.
pub(crate) fn compose_into(p: &[u8], q: &[u8], out: &mut [u8]) {
    for (o, &qi) in out.iter_mut().zip(q.iter()) {
        *o = p[qi as usize - 1];
    }
}

/// `out = t · p · t⁻¹`, i.e. `out[t(x)] = t(p(x))`.
pub(crate) fn conjugate_into(p: &[u8], t: &[u8], out: &mut [u8]) {
    for (i, &ti) in t.iter().enumerate() {
        out[ti as usize - 1] = t[p[i] as usize - 1];
    }
}

/// A conjugacy class of `S_d`: the multiset of cycle lengths, stored weakly
/// decreasing. Fixed points are explicit parts of size 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(parts: Vec<usize>) -> Result<CycleType> {
        if parts.is_empty() {
            return Err(Error::InvalidCycleType("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidCycleType("zero-length part".into()));
        }
        let degree: usize = parts.iter().sum();
        check_degree(degree)?;
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { parts })
    }

    /// Parts in weakly decreasing order.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of cycles, fixed points included.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// The deterministic class representative: consecutive blocks, longest
    /// cycles first. `(3,1)` maps to `(1 2 3)(4)`.
    pub fn canonical_representative(&self) -> Permutation {
        let degree = self.degree();
        let mut images: Vec<u8> = (1..=degree as u8).collect();
        let mut start = 0usize;
        for &len in &self.parts {
            for j in 0..len {
                images[start + j] = (start + (j + 1) % len + 1) as u8;
            }
            start += len;
        }
        Permutation { images }
    }

    /// Order of the centralizer of any member: `Π_ℓ ℓ^{m_ℓ} · m_ℓ!` over the
    /// distinct cycle lengths with multiplicities.
    pub fn centralizer_order(&self) -> BigUint {
        let mut order = BigUint::one();
        for (len, mult) in self.length_multiplicities() {
            for _ in 0..mult {
                order *= BigUint::from(len);
            }
            for k in 2..=mult {
                order *= BigUint::from(k);
            }
        }
        order
    }

    /// Size of the conjugacy class: `d! / |centralizer|`.
    pub fn class_size(&self) -> BigUint {
        let mut fact = BigUint::one();
        for k in 2..=self.degree() {
            fact *= BigUint::from(k);
        }
        fact / self.centralizer_order()
    }

    /// Every permutation of this cycle type, in a deterministic order.
    ///
    /// Cycles are rooted at the smallest point not yet used, which generates
    /// each class member exactly once.
    pub fn class_members(&self) -> Vec<Permutation> {
        let degree = self.degree();
        let mut lengths: Vec<(usize, usize)> = self.length_multiplicities();
        let mut images = vec![0u8; degree];
        let mut used = vec![false; degree];
        let mut out = Vec::new();
        build_members(degree, &mut lengths, &mut images, &mut used, &mut out);
        out
    }

    /// All members of the centralizer of [`Self::canonical_representative`].
    /// The size is [`Self::centralizer_order`]; callers guard against huge
    /// classes before asking for the full list.
    pub(crate) fn centralizer_of_representative(&self) -> Vec<Permutation> {
        let degree = self.degree();
        // Runs of equal-length blocks, with block start offsets.
        let mut runs: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut start = 0usize;
        for &len in &self.parts {
            match runs.last_mut() {
                Some((l, starts)) if *l == len => starts.push(start),
                _ => runs.push((len, vec![start])),
            }
            start += len;
        }
        let mut out = Vec::new();
        let mut images: Vec<u8> = vec![0; degree];
        fill_centralizer(&runs, 0, &mut images, &mut out);
        out
    }

    fn length_multiplicities(&self) -> Vec<(usize, usize)> {
        let mut lengths: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match lengths.last_mut() {
                Some((len, mult)) if *len == p => *mult += 1,
                _ => lengths.push((p, 1)),
            }
        }
        lengths
    }

    /// All cycle types of a given degree (partitions, in decreasing
    /// lexicographic order).
    pub fn all_of_degree(degree: usize) -> Vec<CycleType> {
        fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<CycleType>) {
            if remaining == 0 {
                out.push(CycleType {
                    parts: prefix.clone(),
                });
                return;
            }
            for next in (1..=remaining.min(max)).rev() {
                prefix.push(next);
                rec(remaining - next, next, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(degree, degree, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn build_members(
    degree: usize,
    lengths: &mut Vec<(usize, usize)>,
    images: &mut Vec<u8>,
    used: &mut Vec<bool>,
    out: &mut Vec<Permutation>,
) {
    let Some(leader) = (0..degree).find(|&i| !used[i]) else {
        out.push(Permutation {
            images: images.clone(),
        });
        return;
    };
    for idx in 0..lengths.len() {
        if lengths[idx].1 == 0 {
            continue;
        }
        let len = lengths[idx].0;
        lengths[idx].1 -= 1;
        used[leader] = true;
        extend_cycle(degree, leader, leader, len - 1, lengths, images, used, out);
        used[leader] = false;
        lengths[idx].1 += 1;
    }
}

#[allow(clippy::too_many_arguments)]
fn extend_cycle(
    degree: usize,
    start: usize,
    prev: usize,
    remaining: usize,
    lengths: &mut Vec<(usize, usize)>,
    images: &mut Vec<u8>,
    used: &mut Vec<bool>,
    out: &mut Vec<Permutation>,
) {
    if remaining == 0 {
        images[prev] = (start + 1) as u8;
        build_members(degree, lengths, images, used, out);
        return;
    }
    for next in 0..degree {
        if used[next] {
            continue;
        }
        used[next] = true;
        images[prev] = (next + 1) as u8;
        extend_cycle(
            degree,
            start,
            next,
            remaining - 1,
            lengths,
            images,
            used,
            out,
        );
        used[next] = false;
    }
}

fn fill_centralizer(
    runs: &[(usize, Vec<usize>)],
    run_idx: usize,
    images: &mut Vec<u8>,
    out: &mut Vec<Permutation>,
) {
    if run_idx == runs.len() {
        out.push(Permutation {
            images: images.clone(),
        });
        return;
    }
    let (len, starts) = &runs[run_idx];
    let m = starts.len();
    // Assignment of source blocks to target blocks plus a rotation offset per
    // source block; every such map commutes with the canonical representative.
    let mut target_used = vec![false; m];
    fn assign(
        len: usize,
        starts: &[usize],
        source: usize,
        target_used: &mut Vec<bool>,
        images: &mut Vec<u8>,
        rest: &mut dyn FnMut(&mut Vec<u8>),
    ) {
        if source == starts.len() {
            rest(images);
            return;
        }
        for target in 0..starts.len() {
            if target_used[target] {
                continue;
            }
            target_used[target] = true;
            for offset in 0..len {
                for j in 0..len {
                    images[starts[source] + j] = (starts[target] + (j + offset) % len + 1) as u8;
                }
                assign(len, starts, source + 1, target_used, images, rest);
            }
            target_used[target] = false;
        }
    }
    assign(*len, starts, 0, &mut target_used, images, &mut |images| {
        fill_centralizer(runs, run_idx + 1, images, out);
    });
}

/// Orbits of `{1, .., degree}` under the subgroup generated by `generators`,
/// as a sorted partition. An empty generator list yields singletons.
pub fn orbits_under(generators: &[Permutation], degree: usize) -> Result<Vec<Vec<usize>>> {
    check_degree(degree)?;
    for g in generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch(g.degree(), degree));
        }
    }
    let mut seen = vec![false; degree];
    let mut orbits = Vec::new();
    for start in 1..=degree {
        if seen[start - 1] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start - 1] = true;
        let mut frontier = vec![start];
        while let Some(x) = frontier.pop() {
            for g in generators {
                let y = g.images[x - 1] as usize;
                if !seen[y - 1] {
                    seen[y - 1] = true;
                    orbit.push(y);
                    frontier.push(y);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// Fast transitivity test over `{1, .., degree}` using a closure bitmask.
pub(crate) fn is_transitive(generators: &[&Permutation], degree: usize) -> bool {
    debug_assert!((1..=DEGREE_CAP).contains(&degree));
    let full: u64 = if degree == 64 {
        u64::MAX
    } else {
        (1u64 << degree) - 1
    };
    let mut seen: u64 = 1;
    let mut stack = [0usize; DEGREE_CAP];
    let mut top = 0usize;
    stack[top] = 0;
    top += 1;
    while top > 0 {
        top -= 1;
        let x = stack[top];
        for g in generators {
            let y = g.images[x] as usize - 1;
            if seen & (1u64 << y) == 0 {
                seen |= 1u64 << y;
                stack[top] = y;
                top += 1;
            }
        }
        if seen == full {
            return true;
        }
    }
    seen == full
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cycle(degree: usize, points: &[usize]) -> Permutation {
        Permutation::from_cycles(degree, &[points.to_vec()]).unwrap()
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let p = cycle(3, &[1, 2, 3]);
        let q = Permutation::identity(3);
        assert_eq!(p.compose(&q), p);
        let r = cycle(3, &[1, 3, 2]);
        assert!(p.compose(&r).is_identity());
    }

    #[test]
    fn product_convention_matches_tuple_relation() {
        // For ((1 2 3 4), (1 2 3 4), (1 2 3), (1 2 4)) the four-fold product
        // with the right factor acting first is the identity, while the
        // left-first reading is not. This pins down the convention.
        let g1 = cycle(4, &[1, 2, 3, 4]);
        let g2 = cycle(4, &[1, 2, 3, 4]);
        let g3 = cycle(4, &[1, 2, 3]);
        let g4 = cycle(4, &[1, 2, 4]);
        let right_first = g1.compose(&g2.compose(&g3.compose(&g4)));
        assert!(right_first.is_identity());
        let left_first = g4.compose(&g3.compose(&g2.compose(&g1)));
        assert!(!left_first.is_identity());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Permutation::identity(5).inverse(), Permutation::identity(5));
        assert_eq!(cycle(4, &[1, 2, 3, 4]).inverse(), cycle(4, &[1, 4, 3, 2]));
        let invol = Permutation::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(invol.inverse(), invol);
    }

    #[test]
    fn conjugation_relabels_points() {
        let p = cycle(3, &[1, 2]);
        assert_eq!(p.conjugate_by(&Permutation::identity(3)), p);
        let t = cycle(3, &[2, 3]);
        assert_eq!(p.conjugate_by(&t), cycle(3, &[1, 3]));
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(Permutation::identity(4).cycle_type().parts(), &[1, 1, 1, 1]);
        assert_eq!(cycle(4, &[1, 2, 4]).cycle_type().parts(), &[3, 1]);
        // (1 2 3) · (1 2 4) (right factor first) has type (2, 2).
        let p = cycle(4, &[1, 2, 3]).compose(&cycle(4, &[1, 2, 4]));
        assert_eq!(p.cycle_type().parts(), &[2, 2]);
    }

    #[test]
    fn orbit_examples() {
        let four = cycle(4, &[1, 2, 3, 4]);
        assert_eq!(orbits_under(&[four], 4).unwrap(), vec![vec![1, 2, 3, 4]]);
        let three = cycle(4, &[1, 2, 3]);
        assert_eq!(
            orbits_under(&[three], 4).unwrap(),
            vec![vec![1, 2, 3], vec![4]]
        );
        assert_eq!(
            orbits_under(&[], 3).unwrap(),
            vec![vec![1], vec![2], vec![3]]
        );
    }

    #[test]
    fn orbits_match_naive_reachability() {
        // Independent oracle: saturate reachable sets by repeated application.
        let gens = vec![
            Permutation::from_cycles(6, &[vec![1, 2], vec![3, 4]]).unwrap(),
            cycle(6, &[2, 3]),
        ];
        let orbits = orbits_under(&gens, 6).unwrap();
        for start in 1..=6usize {
            let mut set = vec![start];
            loop {
                let mut grew = false;
                for &x in set.clone().iter() {
                    for g in &gens {
                        let y = g.apply(x);
                        if !set.contains(&y) {
                            set.push(y);
                            grew = true;
                        }
                    }
                }
                if !grew {
                    break;
                }
            }
            set.sort_unstable();
            let containing = orbits.iter().find(|o| o.contains(&start)).unwrap();
            assert_eq!(&set, containing);
        }
    }

    #[test]
    fn canonical_representative_examples() {
        let t4 = CycleType::new(vec![4]).unwrap();
        assert_eq!(t4.canonical_representative(), cycle(4, &[1, 2, 3, 4]));
        let t31 = CycleType::new(vec![3, 1]).unwrap();
        assert_eq!(t31.canonical_representative(), cycle(4, &[1, 2, 3]));
        let t22 = CycleType::new(vec![2, 2]).unwrap();
        assert_eq!(
            t22.canonical_representative(),
            Permutation::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap()
        );
    }

    #[test]
    fn class_members_are_exactly_the_conjugacy_class() {
        for parts in [vec![2, 2], vec![3, 1], vec![4], vec![2, 1, 1]] {
            let ct = CycleType::new(parts).unwrap();
            let members = ct.class_members();
            assert_eq!(
                BigUint::from(members.len()),
                ct.class_size(),
                "class size mismatch for {ct}"
            );
            let mut sorted = members.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), members.len(), "duplicate member for {ct}");
            for m in &members {
                assert_eq!(m.cycle_type(), ct);
            }
        }
    }

    #[test]
    fn centralizer_members_commute_with_representative() {
        for parts in [vec![2, 2], vec![3, 1], vec![2, 2, 1], vec![3, 3]] {
            let ct = CycleType::new(parts).unwrap();
            let rep = ct.canonical_representative();
            let members = ct.centralizer_of_representative();
            assert_eq!(BigUint::from(members.len()), ct.centralizer_order());
            let mut sorted = members.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), members.len());
            for z in &members {
                assert_eq!(z.compose(&rep), rep.compose(z), "does not centralize");
            }
        }
    }

    #[test]
    fn partitions_of_small_degrees() {
        assert_eq!(CycleType::all_of_degree(4).len(), 5);
        assert_eq!(CycleType::all_of_degree(6).len(), 11);
    }

    #[test]
    fn degree_cap_is_enforced() {
        assert!(Permutation::from_images((1..=DEGREE_CAP).collect()).is_ok());
        assert!(matches!(
            Permutation::from_images((1..=DEGREE_CAP + 1).collect()),
            Err(Error::DegreeOutOfRange(_))
        ));
        assert!(matches!(
            CycleType::new(vec![DEGREE_CAP + 1]),
            Err(Error::DegreeOutOfRange(_))
        ));
        assert!(matches!(
            Permutation::from_images(vec![]),
            Err(Error::DegreeOutOfRange(0))
        ));
    }

    #[test]
    fn display_uses_cycle_notation() {
        assert_eq!(Permutation::identity(4).to_string(), "id");
        assert_eq!(cycle(4, &[1, 2, 3, 4]).to_string(), "(1 2 3 4)");
        let p = Permutation::from_cycles(6, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.to_string(), "(1 2)(3 4)");
    }

    fn arb_permutation(max_degree: usize) -> impl Strategy<Value = Permutation> {
        (1..=max_degree).prop_flat_map(|d| {
            Just((1..=d).collect::<Vec<usize>>())
                .prop_shuffle()
                .prop_map(|images| Permutation::from_images(images).unwrap())
        })
    }

    fn arb_pair(max_degree: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
        (1..=max_degree).prop_flat_map(|d| {
            let one = Just((1..=d).collect::<Vec<usize>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_images(v).unwrap());
            let two = Just((1..=d).collect::<Vec<usize>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_images(v).unwrap());
            (one, two)
        })
    }

    proptest! {
        #[test]
        fn compose_is_associative((p, q) in arb_pair(10), r_seed in 0u64..1000) {
            let d = p.degree();
            // Derive a third permutation deterministically from the seed.
            let mut images: Vec<usize> = (1..=d).collect();
            let mut state = r_seed;
            for i in (1..d).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                images.swap(i, j);
            }
            let r = Permutation::from_images(images).unwrap();
            prop_assert_eq!(p.compose(&q).compose(&r), p.compose(&q.compose(&r)));
            let id = Permutation::identity(d);
            prop_assert_eq!(p.compose(&id), p.clone());
            prop_assert_eq!(id.compose(&p), p);
        }

        #[test]
        fn conjugation_preserves_cycle_type((p, t) in arb_pair(8)) {
            prop_assert_eq!(p.conjugate_by(&t).cycle_type(), p.cycle_type());
        }

        #[test]
        fn inverse_is_two_sided(p in arb_permutation(10)) {
            prop_assert!(p.compose(&p.inverse()).is_identity());
            prop_assert!(p.inverse().compose(&p).is_identity());
        }
    }
}
