//! Enumeration of the Borel subalgebras containing a fixed Cartan subalgebra.

use std::collections::{BTreeSet, VecDeque};

use super::cartan::CartanData;
use crate::linalg::RealSubspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Borel {
    /// Positive system, as sorted root indices.
    pub positive: Vec<usize>,
    pub subspace: RealSubspace,
}

/// Positive-system members that are not the sum of two members.
pub fn simple_roots(cartan: &CartanData, positive: &[usize]) -> Vec<usize> {
    let set: BTreeSet<usize> = positive.iter().copied().collect();
    positive
        .iter()
        .copied()
        .filter(|&a| {
            !positive.iter().any(|&b| {
                let d = cartan.sum(a, cartan.negative(b));
                d.is_some_and(|d| set.contains(&d))
            })
        })
        .collect()
}

/// One Borel `cartan_part ⊕ ⊕_{α ∈ P} g^α` per positive system `P` of `roots`.
///
/// `roots` must be closed under negation. Positive systems are reached from the
/// lexicographic one by simple reflections in breadth-first order, so the
/// output order is deterministic and its length is the order of the Weyl group.
pub fn enumerate_borels(cartan: &CartanData, roots: &[usize], cartan_part: &RealSubspace) -> Vec<Borel> {
    let start: Vec<usize> = cartan.lex_positive(roots);
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    let mut out = Vec::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(pos) = queue.pop_front() {
        for a in simple_roots(cartan, &pos) {
            let mut next: Vec<usize> = pos.iter().copied().filter(|&b| b != a).collect();
            next.push(cartan.negative(a));
            next.sort_unstable();
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        let subspace = cartan_part.sum(&cartan.span_roots(&pos));
        out.push(Borel { positive: pos, subspace });
    }
    out
}
