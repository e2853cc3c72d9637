//! The two moves of the moving branch point around the fixed ones, and the
//! orbit decomposition they induce on a cover set.
//!
//! Dragging the fourth branch point around the third (respectively around
//! the second and third together) rewrites a tuple as
//!
//! ```text
//! g1: (γ1, γ2, γ4⁻¹ γ3 γ4, (γ3 γ4)⁻¹ γ4 (γ3 γ4))
//! g2: (γ1, γ4⁻¹ γ2 γ4, γ4⁻¹ γ3 γ4, (γ2 γ3 γ4)⁻¹ γ4 (γ2 γ3 γ4))
//! ```
//!
//! Both moves preserve the profile, the product relation and transitivity,
//! and descend to the set of equivalence classes; the orbits are in
//! bijection with the irreducible components of the Hurwitz space.

use std::collections::{HashSet, VecDeque};

use crate::covers::{Canonicalizer, CoverSet, MonodromyTuple, RamificationProfile};
use crate::error::Result;

/// First braid move.
pub fn act_g1(tuple: &MonodromyTuple) -> MonodromyTuple {
    let [g1, g2, g3, g4] = tuple.entries();
    let g34 = g3.compose(g4);
    let new3 = g3.conjugate_by(&g4.inverse());
    let new4 = g4.conjugate_by(&g34.inverse());
    MonodromyTuple::from_entries_unchecked([g1.clone(), g2.clone(), new3, new4])
}

/// Second braid move.
pub fn act_g2(tuple: &MonodromyTuple) -> MonodromyTuple {
    let [g1, g2, g3, g4] = tuple.entries();
    let g4_inv = g4.inverse();
    let g234 = g2.compose(&g3.compose(g4));
    let new2 = g2.conjugate_by(&g4_inv);
    let new3 = g3.conjugate_by(&g4_inv);
    let new4 = g4.conjugate_by(&g234.inverse());
    MonodromyTuple::from_entries_unchecked([g1.clone(), new2, new3, new4])
}

/// A braid orbit: canonical representatives, sorted, closed under both moves.
#[derive(Clone, Debug)]
pub struct Orbit {
    profile: RamificationProfile,
    members: Vec<MonodromyTuple>,
}

impl Orbit {
    pub fn profile(&self) -> &RamificationProfile {
        &self.profile
    }

    pub fn members(&self) -> &[MonodromyTuple] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

fn close_under_moves(canon: &Canonicalizer, start: MonodromyTuple) -> Vec<MonodromyTuple> {
    let mut visited: HashSet<MonodromyTuple> = HashSet::new();
    let mut queue: VecDeque<MonodromyTuple> = VecDeque::new();
    visited.insert(start.clone());
    queue.push_back(start);
    while let Some(current) = queue.pop_front() {
        for image in [act_g1(&current), act_g2(&current)] {
            let form = canon.canonical_form(&image);
            if visited.insert(form.clone()) {
                queue.push_back(form);
            }
        }
    }
    let mut members: Vec<MonodromyTuple> = visited.into_iter().collect();
    members.sort();
    members
}

/// The orbit generated by one tuple (forward closure; the moves permute the
/// finite cover set, so inverses are not needed).
pub fn orbit_of(seed: &MonodromyTuple) -> Result<Orbit> {
    let types = seed.cycle_types();
    let canon = Canonicalizer::new(&types, None)?;
    let profile = RamificationProfile::new(types)?;
    let members = close_under_moves(&canon, canon.canonical_form(seed));
    Ok(Orbit { profile, members })
}

/// Partition a cover set into braid orbits. Orbit members and the orbit list
/// itself are ordered by smallest canonical tuple, so the output is
/// independent of traversal order; the orbit sizes sum to `N_d(c)`.
pub fn orbit_decompose(covers: &CoverSet) -> Result<Vec<Orbit>> {
    let canon = Canonicalizer::new(covers.profile().classes(), None)?;
    let mut assigned: HashSet<MonodromyTuple> = HashSet::new();
    let mut orbits = Vec::new();
    for rep in covers.representatives() {
        if assigned.contains(rep) {
            continue;
        }
        let members = close_under_moves(&canon, rep.clone());
        for m in &members {
            assigned.insert(m.clone());
        }
        orbits.push(Orbit {
            profile: covers.profile().clone(),
            members,
        });
    }
    debug_assert_eq!(
        orbits.iter().map(Orbit::size).sum::<usize>(),
        covers.count()
    );
    Ok(orbits)
}
