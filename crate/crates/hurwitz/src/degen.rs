//! Boundary admissible covers and their weighted node counts.
//!
//! When the moving branch point collides with the fixed point `p_j`, the base
//! line degenerates into two lines joined at a node and the cover degenerates
//! with it. The combinatorics of the limit is fully determined by the
//! monodromy tuple: the node permutation's cycles are the nodes of the
//! covering curve (a cycle of length `a` is a node at which the cover looks
//! like `(x, y) → (x^a, y^a)`, weighted `1/a`), and the two sides split into
//! connected components whose genera come from Riemann–Hurwitz over three
//! branch points.
//!
//! Stabilization contracts unstable rational components of the limit curve.
//! A genus-0 component carrying a single node (a rational tail) is deleted
//! and its node maps to a smooth point: that node keeps its `1/a` weight in
//! `δ'` but drops out of `δ`. A genus-0 component carrying exactly two nodes
//! is contracted onto its neighbours; both its nodes map to the resulting
//! stable node and keep full weight in both counts.

use crate::covers::MonodromyTuple;
use crate::error::{Error, Result};
use crate::perm::{orbits_under, Permutation};
use crate::rational::{ratio, zero, Rational};

/// Which fixed branch point the moving point collides with.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Direction {
    One,
    Two,
    Three,
}

impl Direction {
    pub const ALL: [Direction; 3] = [Direction::One, Direction::Two, Direction::Three];

    pub fn index(self) -> usize {
        match self {
            Direction::One => 1,
            Direction::Two => 2,
            Direction::Three => 3,
        }
    }

    pub fn from_index(index: usize) -> Result<Direction> {
        match index {
            1 => Ok(Direction::One),
            2 => Ok(Direction::Two),
            3 => Ok(Direction::Three),
            _ => Err(Error::Internal(format!(
                "direction must be 1, 2 or 3, got {index}"
            ))),
        }
    }
}

/// The permutation around the node of the degenerate base: its cycles are the
/// nodes of the covering curve.
pub fn node_permutation(tuple: &MonodromyTuple, direction: Direction) -> Permutation {
    let [_, g2, g3, g4] = tuple.entries();
    match direction {
        Direction::Three => g3.compose(g4),
        Direction::One => g2.compose(g3),
        Direction::Two => g2.compose(g4),
    }
}

/// The two three-point monodromy triples obtained by splitting the four
/// branch points across the degenerate base. Each triple has product
/// identity, and the third entries of the two sides are mutually inverse.
pub fn side_tuples(
    tuple: &MonodromyTuple,
    direction: Direction,
) -> ([Permutation; 3], [Permutation; 3]) {
    let [g1, g2, g3, g4] = tuple.entries();
    match direction {
        // p4 → p3: side A keeps {p1, p2}, side B keeps {p3, p4}.
        Direction::Three => {
            let a3 = g1.compose(g2).inverse();
            let b3 = g3.compose(g4).inverse();
            ([g1.clone(), g2.clone(), a3], [g3.clone(), g4.clone(), b3])
        }
        // p4 → p1: side A keeps {p2, p3}, side B keeps {p4, p1}.
        Direction::One => {
            let a3 = g2.compose(g3).inverse();
            let b3 = g4.compose(g1).inverse();
            ([g2.clone(), g3.clone(), a3], [g4.clone(), g1.clone(), b3])
        }
        // p4 → p2: side A keeps {p2, p4}, side B keeps {p3, p1}; the half
        // twist moving p4 past p3 replaces γ3 with its γ4-conjugate.
        Direction::Two => {
            let a3 = g2.compose(g4).inverse();
            let twisted = g3.conjugate_by(&g4.inverse());
            let b3 = twisted.compose(g1).inverse();
            ([g2.clone(), g4.clone(), a3], [twisted, g1.clone(), b3])
        }
    }
}

/// A node of the degenerate covering curve: one cycle of the node
/// permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeRecord {
    /// The letters moved through this node's cycle (sorted, 1-based).
    pub support: Vec<usize>,
    /// Cycle length `a`: the local model is `(x, y) → (x^a, y^a)`.
    pub multiplicity: usize,
    /// Whether the node maps to a node of the stabilized curve.
    pub survives: bool,
}

impl NodeRecord {
    /// Orbifold weight `1/a`.
    pub fn weight(&self) -> Rational {
        ratio(1, self.multiplicity as i64)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    A,
    B,
}

/// A connected component of the degenerate covering curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentRecord {
    pub side: Side,
    /// Letters of the sheets forming the component (sorted, 1-based).
    pub letters: Vec<usize>,
    pub genus: i64,
    pub node_count: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DegenWarnings {
    /// The total arithmetic genus is below 2, where boundary-class language
    /// on the moduli of stable curves is only formal.
    pub genus_below_two: bool,
    /// Stabilization contracted a chain of two or more rational bridges;
    /// every chain node keeps weight, but no worked example pins this down.
    pub bridge_chain: bool,
}

/// Full record of one boundary admissible cover.
#[derive(Clone, Debug)]
pub struct DegenerationReport {
    pub tuple: MonodromyTuple,
    pub direction: Direction,
    pub node_permutation: Permutation,
    pub nodes: Vec<NodeRecord>,
    pub components: Vec<ComponentRecord>,
    /// `Σ survives(q) / a(q)` over the nodes.
    pub delta: Rational,
    /// `Σ 1 / a(q)` over the nodes.
    pub delta_prime: Rational,
    pub arithmetic_genus: i64,
    pub warnings: DegenWarnings,
}

impl DegenerationReport {
    /// Connectivity of the dual graph (components as vertices, nodes as
    /// edges), recomputed from the stored records.
    pub fn dual_graph_connected(&self) -> bool {
        let n = self.components.len();
        if n == 0 {
            return false;
        }
        let mut adjacency = vec![Vec::new(); n];
        for node in &self.nodes {
            let a = self.component_index(Side::A, node.support[0]);
            let b = self.component_index(Side::B, node.support[0]);
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn component_index(&self, side: Side, letter: usize) -> usize {
        self.components
            .iter()
            .position(|c| c.side == side && c.letters.binary_search(&letter).is_ok())
            .expect("every letter lies in a component on each side")
    }
}

/// Genus of each connected piece of a three-point cover by Riemann–Hurwitz:
/// `2g - 2 + 2 deg = Σ (deg - #cycles)` over the three restricted
/// permutations.
fn side_components(
    triple: &[Permutation; 3],
    degree: usize,
    side: Side,
) -> Result<Vec<ComponentRecord>> {
    let orbits = orbits_under(&triple[..2], degree)?;
    let mut components = Vec::with_capacity(orbits.len());
    for letters in orbits {
        let deg = letters.len() as i64;
        let mut ramification = 0i64;
        for perm in triple {
            ramification += deg - restricted_cycle_count(perm, &letters) as i64;
        }
        if ramification % 2 != 0 {
            return Err(Error::Internal(
                "odd ramification on a side component".into(),
            ));
        }
        let genus = ramification / 2 - deg + 1;
        if genus < 0 {
            return Err(Error::Internal(
                "negative Riemann-Hurwitz genus on a side component".into(),
            ));
        }
        components.push(ComponentRecord {
            side,
            letters,
            genus,
            node_count: 0,
        });
    }
    Ok(components)
}

/// Number of cycles of `perm` on an invariant sorted subset of letters.
fn restricted_cycle_count(perm: &Permutation, letters: &[usize]) -> usize {
    let mut seen = vec![false; letters.len()];
    let mut count = 0usize;
    for (i, &start) in letters.iter().enumerate() {
        if seen[i] {
            continue;
        }
        count += 1;
        let mut x = start;
        loop {
            let idx = letters.binary_search(&x).expect("subset is invariant");
            if seen[idx] {
                break;
            }
            seen[idx] = true;
            x = perm.apply(x);
        }
    }
    count
}

struct StabEdge {
    a: usize,
    b: usize,
    nodes: Vec<usize>,
    alive: bool,
}

/// Construct the degenerate admissible cover in the given direction.
pub fn degenerate(tuple: &MonodromyTuple, direction: Direction) -> Result<DegenerationReport> {
    let degree = tuple.degree();
    let node_perm = node_permutation(tuple, direction);
    let (side_a, side_b) = side_tuples(tuple, direction);

    let mut components = side_components(&side_a, degree, Side::A)?;
    let split = components.len();
    components.extend(side_components(&side_b, degree, Side::B)?);

    let mut nodes: Vec<NodeRecord> = node_perm
        .cycles()
        .into_iter()
        .map(|support| NodeRecord {
            multiplicity: support.len(),
            support,
            survives: true,
        })
        .collect();

    // Dual graph: vertices are components, one edge per node joining the
    // side-A and side-B components containing its support.
    let mut edges: Vec<StabEdge> = Vec::with_capacity(nodes.len());
    for (idx, node) in nodes.iter().enumerate() {
        let letter = node.support[0];
        let a = components[..split]
            .iter()
            .position(|c| c.letters.binary_search(&letter).is_ok())
            .ok_or_else(|| Error::Internal("node support missing from side A".into()))?;
        let b = split
            + components[split..]
                .iter()
                .position(|c| c.letters.binary_search(&letter).is_ok())
                .ok_or_else(|| Error::Internal("node support missing from side B".into()))?;
        edges.push(StabEdge {
            a,
            b,
            nodes: vec![idx],
            alive: true,
        });
    }
    for e in &edges {
        components[e.a].node_count += 1;
        components[e.b].node_count += 1;
    }

    let arithmetic_genus = components.iter().map(|c| c.genus).sum::<i64>() + nodes.len() as i64
        - components.len() as i64
        + 1;

    // Stabilization. Rational tails first (their nodes map to smooth
    // points), then rational bridges (contract, keeping both nodes on the
    // merged stable node). Bridge contraction never changes vertex degrees,
    // so no new tails can appear once the first phase is exhausted; the loop
    // re-checks anyway.
    let mut vert_alive = vec![true; components.len()];
    let mut bridge_chain = false;
    loop {
        let endpoint_degree = |v: usize, edges: &[StabEdge]| -> usize {
            edges
                .iter()
                .filter(|e| e.alive)
                .map(|e| (e.a == v) as usize + (e.b == v) as usize)
                .sum()
        };
        let tail = (0..components.len()).find(|&v| {
            vert_alive[v] && components[v].genus == 0 && endpoint_degree(v, &edges) == 1
        });
        if let Some(v) = tail {
            let e = edges
                .iter()
                .position(|e| e.alive && (e.a == v || e.b == v))
                .expect("degree-one vertex has a live edge");
            for &n in &edges[e].nodes {
                nodes[n].survives = false;
            }
            edges[e].alive = false;
            vert_alive[v] = false;
            continue;
        }
        let bridge = (0..components.len()).find(|&v| {
            if !vert_alive[v] || components[v].genus != 0 || endpoint_degree(v, &edges) != 2 {
                return false;
            }
            // Two endpoints on two distinct edges (a self-loop vertex is not
            // a bridge).
            edges
                .iter()
                .filter(|e| e.alive && (e.a == v || e.b == v))
                .count()
                == 2
        });
        let Some(v) = bridge else { break };
        let incident: Vec<usize> = (0..edges.len())
            .filter(|&i| edges[i].alive && (edges[i].a == v || edges[i].b == v))
            .collect();
        let [e1, e2] = incident.as_slice() else {
            unreachable!("bridge has exactly two live edges")
        };
        if edges[*e1].nodes.len() > 1 || edges[*e2].nodes.len() > 1 {
            bridge_chain = true;
        }
        let other = |i: usize| {
            if edges[i].a == v {
                edges[i].b
            } else {
                edges[i].a
            }
        };
        let merged = StabEdge {
            a: other(*e1),
            b: other(*e2),
            nodes: edges[*e1]
                .nodes
                .iter()
                .chain(edges[*e2].nodes.iter())
                .copied()
                .collect(),
            alive: true,
        };
        edges[*e1].alive = false;
        edges[*e2].alive = false;
        vert_alive[v] = false;
        edges.push(merged);
    }

    let mut delta = zero();
    let mut delta_prime = zero();
    for node in &nodes {
        delta_prime += node.weight();
        if node.survives {
            delta += node.weight();
        }
    }

    Ok(DegenerationReport {
        tuple: tuple.clone(),
        direction,
        node_permutation: node_perm,
        nodes,
        components,
        delta,
        delta_prime,
        arithmetic_genus,
        warnings: DegenWarnings {
            genus_below_two: arithmetic_genus < 2,
            bridge_chain,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, ratio};
    use crate::text::parse_monodromy_tuple;

    fn tuple(text: &str, degree: usize) -> MonodromyTuple {
        parse_monodromy_tuple(text, degree).unwrap()
    }

    #[test]
    fn node_permutations_of_the_degree_four_family() {
        let r1 = tuple("(1 2 3 4);(1 4 3 2);(1 2 3);(1 3 2)", 4);
        assert!(node_permutation(&r1, Direction::Three).is_identity());
        let r6 = tuple("(1 2 3 4);(1 2 3 4);(1 2 3);(1 2 4)", 4);
        assert_eq!(
            node_permutation(&r6, Direction::Three).to_string(),
            "(1 3)(2 4)"
        );
    }

    #[test]
    fn cyclic_inverse_pair_node_permutations() {
        // (γ, γ⁻¹, γ, γ⁻¹) of odd degree: colliding with p2 composes the even
        // entries, a single d-cycle.
        for d in [3usize, 5, 7] {
            let gamma: Vec<usize> = (1..=d).collect();
            let g = Permutation::from_cycles(d, &[gamma]).unwrap();
            let r = MonodromyTuple::new([g.clone(), g.inverse(), g.clone(), g.inverse()]).unwrap();
            assert!(node_permutation(&r, Direction::Three).is_identity());
            assert!(node_permutation(&r, Direction::One).is_identity());
            let two = node_permutation(&r, Direction::Two);
            assert_eq!(two, g.power(-2));
            assert_eq!(two.cycle_type().parts(), &[d]);
        }
    }

    #[test]
    fn side_triples_have_product_identity_and_inverse_thirds() {
        let r = tuple("(1 2 3 4);(1 2 3 4);(1 2 3);(1 2 4)", 4);
        for direction in Direction::ALL {
            let (a, b) = side_tuples(&r, direction);
            for side in [&a, &b] {
                let product = side[0].compose(&side[1].compose(&side[2]));
                assert!(product.is_identity(), "direction {direction:?}");
            }
            assert_eq!(a[2].inverse(), b[2], "direction {direction:?}");
        }
    }

    #[test]
    fn rational_tail_drops_from_delta() {
        // Around the first family member, colliding p4 with p3 produces four
        // unramified nodes; the sheet fixed by both γ3 and γ4 forms a
        // rational tail whose node maps to a smooth point.
        let r1 = tuple("(1 2 3 4);(1 4 3 2);(1 2 3);(1 3 2)", 4);
        let report = degenerate(&r1, Direction::Three).unwrap();
        assert_eq!(report.nodes.len(), 4);
        assert!(report.nodes.iter().all(|n| n.multiplicity == 1));
        assert_eq!(report.delta_prime, integer(4));
        assert_eq!(report.delta, integer(3));
        assert_eq!(report.arithmetic_genus, 2);
        assert!(report.dual_graph_connected());
        let genus_a: Vec<i64> = report
            .components
            .iter()
            .filter(|c| c.side == Side::A)
            .map(|c| c.genus)
            .collect();
        assert_eq!(genus_a, vec![0]);
        let side_b: Vec<(i64, usize)> = report
            .components
            .iter()
            .filter(|c| c.side == Side::B)
            .map(|c| (c.genus, c.node_count))
            .collect();
        assert_eq!(side_b, vec![(0, 3), (0, 1)]);
    }

    #[test]
    fn bridge_keeps_both_nodes() {
        // The third family member: one triple node and one simple node; the
        // side-B sheet is a rational bridge between two points of the
        // genus-one side-A component.
        let r3 = tuple("(1 2 3 4);(1 3 2 4);(1 2 3);(2 4 3)", 4);
        let report = degenerate(&r3, Direction::Three).unwrap();
        let mut supports: Vec<Vec<usize>> =
            report.nodes.iter().map(|n| n.support.clone()).collect();
        supports.sort();
        assert_eq!(supports, vec![vec![1, 2, 4], vec![3]]);
        assert!(report.nodes.iter().all(|n| n.survives));
        assert_eq!(report.delta, ratio(4, 3));
        assert_eq!(report.delta_prime, ratio(4, 3));
        assert_eq!(report.arithmetic_genus, 2);
        assert!(!report.warnings.bridge_chain);
    }

    #[test]
    fn odd_degree_inverse_pair_weights() {
        for d in [3i64, 5, 7] {
            let gamma: Vec<usize> = (1..=d as usize).collect();
            let g = Permutation::from_cycles(d as usize, &[gamma]).unwrap();
            let r = MonodromyTuple::new([g.clone(), g.inverse(), g.clone(), g.inverse()]).unwrap();
            let three = degenerate(&r, Direction::Three).unwrap();
            assert_eq!(three.delta, integer(d));
            assert_eq!(three.delta_prime, integer(d));
            let one = degenerate(&r, Direction::One).unwrap();
            assert_eq!(one.delta, integer(d));
            let two = degenerate(&r, Direction::Two).unwrap();
            assert_eq!(two.delta, ratio(1, d));
            assert_eq!(two.delta_prime, ratio(1, d));
            // Both sides of the single-node degeneration have genus (d-1)/2.
            let genera: Vec<i64> = two.components.iter().map(|c| c.genus).collect();
            assert_eq!(genera, vec![(d - 1) / 2, (d - 1) / 2]);
            for report in [&three, &one, &two] {
                assert_eq!(report.arithmetic_genus, d - 1);
                assert!(report.dual_graph_connected());
            }
        }
    }

    #[test]
    fn double_cover_bridge_contraction() {
        // Two rational components joined at two unramified nodes: an elliptic
        // degeneration. One side contracts onto the other; both nodes stay.
        let r = tuple("(1 2);(1 2);(1 2);(1 2)", 2);
        let report = degenerate(&r, Direction::Three).unwrap();
        assert_eq!(report.nodes.len(), 2);
        assert!(report.nodes.iter().all(|n| n.survives));
        assert_eq!(report.delta, integer(2));
        assert_eq!(report.arithmetic_genus, 1);
        assert!(report.warnings.genus_below_two);
        assert!(!report.warnings.bridge_chain);
    }

    #[test]
    fn side_triple_identities_on_random_tuples() {
        // The displayed side tuples multiply to the identity and their third
        // entries are mutually inverse, for any valid tuple; exercised on
        // seeded pseudo-random tuples of degree up to 8.
        let mut state = 0x1234_5678_9abc_def0u64;
        let mut next = |modulus: usize| {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 33) as usize % modulus
        };
        let mut checked = 0usize;
        while checked < 200 {
            let d = 2 + next(7);
            let mut rand_perm = || {
                let mut images: Vec<usize> = (1..=d).collect();
                for i in (1..d).rev() {
                    let j = next(i + 1);
                    images.swap(i, j);
                }
                Permutation::from_images(images).unwrap()
            };
            let g1 = rand_perm();
            let g2 = rand_perm();
            let g3 = rand_perm();
            let g4 = g1.compose(&g2.compose(&g3)).inverse();
            let Ok(t) = MonodromyTuple::new([g1, g2, g3, g4]) else {
                continue;
            };
            for direction in Direction::ALL {
                let (a, b) = side_tuples(&t, direction);
                for side in [&a, &b] {
                    assert!(side[0].compose(&side[1].compose(&side[2])).is_identity());
                }
                assert_eq!(a[2].inverse(), b[2]);
                // The node permutation is one of the two third entries.
                let node = node_permutation(&t, direction);
                assert!(node == a[2] || node == b[2] || node == a[2].inverse());
            }
            checked += 1;
        }
    }

    #[test]
    fn delta_never_exceeds_delta_prime() {
        let tuples = [
            tuple("(1 2 3 4);(1 4 3 2);(1 2 3);(1 3 2)", 4),
            tuple("(1 2 3 4);(1 2 3 4);(1 2 3);(1 2 4)", 4),
            tuple("(1 2 3 4);(1 3 2 4);(1 2 3);(2 4 3)", 4),
        ];
        for t in &tuples {
            for direction in Direction::ALL {
                let report = degenerate(t, direction).unwrap();
                assert!(report.delta <= report.delta_prime);
                assert_eq!(report.arithmetic_genus, 2);
                let deg_a: usize = report
                    .components
                    .iter()
                    .filter(|c| c.side == Side::A)
                    .map(|c| c.letters.len())
                    .sum();
                let deg_b: usize = report
                    .components
                    .iter()
                    .filter(|c| c.side == Side::B)
                    .map(|c| c.letters.len())
                    .sum();
                assert_eq!(deg_a, 4);
                assert_eq!(deg_b, 4);
            }
        }
    }
}
