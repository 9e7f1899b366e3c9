//! Subgroups as element-index sets within a parent group.

use super::{BitSet, Group};
use std::collections::HashSet;

/// A subgroup of a parent [`Group`], stored as a member bitset.
///
/// Always contains index 0 and is closed under product and inverse; the
/// constructors here guarantee it. Ordered by (size, ascending member list),
/// which is the canonical order used everywhere reports are emitted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: BitSet,
    order: usize,
}

impl Subgroup {
    pub(crate) fn from_parts(members: BitSet, order: usize) -> Self {
        debug_assert_eq!(members.count(), order);
        debug_assert!(members.contains(0));
        Subgroup { members, order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn member_indices(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset_of(&other.members)
    }

    /// True when some member generates the whole subgroup.
    pub fn is_cyclic_in(&self, parent: &Group) -> bool {
        self.members
            .iter()
            .any(|m| parent.element_order(m) == self.order as u64)
    }

    pub fn is_whole_group(&self, parent: &Group) -> bool {
        self.order == parent.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// All distinct cyclic subgroups `⟨g⟩`, including the trivial one,
/// in canonical order.
pub fn cyclic_subgroups(group: &Group) -> Vec<Subgroup> {
    let n = group.order();
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut out: Vec<Subgroup> = Vec::new();
    for g in 0..n {
        let mut members = BitSet::new(n);
        let mut count = 0usize;
        let mut x = g;
        loop {
            members.insert(x);
            count += 1;
            x = group.mul(x, g);
            if x == g {
                break;
            }
        }
        debug_assert_eq!(count as u64, group.element_order(g));
        if seen.insert(members.clone()) {
            out.push(Subgroup::from_parts(members, count));
        }
    }
    out.sort();
    out
}

/// `gHg⁻¹ = H` for every generator `g` of the parent, which suffices because
/// the normalizer is a subgroup.
pub fn is_normal(group: &Group, subgroup: &Subgroup) -> bool {
    group.generators().iter().all(|&g| {
        subgroup
            .members()
            .iter()
            .all(|h| subgroup.contains(group.conjugate(g, h)))
    })
}
