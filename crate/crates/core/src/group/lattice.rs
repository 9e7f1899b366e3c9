//! Full subgroup lattice by join-closure from cyclic atoms.
//!
//! Every subgroup is the join of its cyclic subgroups, so closing the set of
//! cyclic subgroups under pairwise join with atoms reaches every subgroup.
//! Joins are computed by table closure with an early exit: the join order is
//! a multiple of lcm(|H|, |C|) dividing |G|, so once a partial closure
//! outgrows the largest proper candidate order the join must be G itself.

use super::subgroup::{cyclic_subgroups, is_normal, Subgroup};
use super::{BitSet, Caps, Group};
use crate::numtheory;
use std::collections::HashMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    /// Group order above the lattice cap; enumeration not attempted.
    OrderAboveCap { order: usize, cap: usize },
    /// Enumeration aborted after finding more subgroups than the count cap.
    TooManySubgroups { partial_count: usize, cap: usize },
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::OrderAboveCap { order, cap } => {
                write!(f, "group order {order} exceeds the lattice cap {cap}")
            }
            LatticeError::TooManySubgroups { partial_count, cap } => write!(
                f,
                "subgroup count exceeded cap {cap} ({partial_count} found so far)"
            ),
        }
    }
}

impl std::error::Error for LatticeError {}

/// The complete subgroup lattice of one group, in canonical
/// (size, member-list) order, with per-subgroup flags.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    normal: Vec<bool>,
    cyclic: Vec<bool>,
    maximal: Vec<bool>,
}

impl SubgroupLattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn is_normal(&self, idx: usize) -> bool {
        self.normal[idx]
    }

    pub fn is_cyclic(&self, idx: usize) -> bool {
        self.cyclic[idx]
    }

    pub fn is_maximal(&self, idx: usize) -> bool {
        self.maximal[idx]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Subgroup> {
        self.subgroups.iter()
    }
}

/// Join `⟨H ∪ C⟩` of a subgroup with a cyclic atom generated by `gen`.
/// Returns `None` when the join is the whole group.
fn join_with_atom(
    group: &Group,
    sub: &Subgroup,
    atom_order: usize,
    gen: usize,
) -> Option<(BitSet, usize)> {
    let n = group.order();
    let base = numtheory::lcm(sub.order() as u64, atom_order as u64) as usize;
    if base == n {
        return None;
    }
    // Largest proper divisor of n that the join order could be.
    let stop = numtheory::divisors(n as u64)
        .into_iter()
        .map(|d| d as usize)
        .filter(|&d| d < n && d % base == 0)
        .max()?;
    let mut seed = sub.members().to_vec();
    seed.push(gen);
    let (members, inset) = group.closure(&seed, stop)?;
    Some((inset, members.len()))
}

/// Enumerate every subgroup of `group`.
///
/// Seeds with the cyclic subgroups and repeatedly joins known subgroups with
/// atoms not already contained in them until nothing new appears.
pub fn all_subgroups(group: &Group, caps: &Caps) -> Result<SubgroupLattice, LatticeError> {
    let n = group.order();
    if n > caps.lattice {
        return Err(LatticeError::OrderAboveCap {
            order: n,
            cap: caps.lattice,
        });
    }

    let atoms = cyclic_subgroups(group);
    // One generator per atom is enough for joins.
    let atom_gens: Vec<usize> = atoms
        .iter()
        .map(|a| {
            a.members()
                .iter()
                .find(|&m| group.element_order(m) == a.order() as u64)
                .expect("a cyclic subgroup has a generator")
        })
        .collect();

    let mut known: HashMap<BitSet, usize> = HashMap::new();
    let mut subs: Vec<Subgroup> = Vec::new();
    let mut whole_seen = false;
    for a in &atoms {
        known.insert(a.members().clone(), subs.len());
        whole_seen |= a.order() == n;
        subs.push(a.clone());
    }

    let mut queue: Vec<usize> = (0..subs.len()).collect();
    while let Some(si) = queue.pop() {
        for (ai, atom) in atoms.iter().enumerate() {
            let sub = &subs[si];
            if atom.order() >= n || atom.is_subgroup_of(sub) {
                continue;
            }
            let joined = match join_with_atom(group, sub, atom.order(), atom_gens[ai]) {
                Some((members, order)) => Subgroup::from_parts(members, order),
                None => {
                    whole_seen = true;
                    continue;
                }
            };
            if !known.contains_key(joined.members()) {
                if subs.len() >= caps.subgroup_count {
                    return Err(LatticeError::TooManySubgroups {
                        partial_count: subs.len(),
                        cap: caps.subgroup_count,
                    });
                }
                known.insert(joined.members().clone(), subs.len());
                queue.push(subs.len());
                subs.push(joined);
            }
        }
    }

    if whole_seen && !known.contains_key(&BitSet::from_members(n, 0..n)) {
        let whole = Subgroup::from_parts(BitSet::from_members(n, 0..n), n);
        subs.push(whole);
    }
    subs.sort();

    let normal: Vec<bool> = subs.iter().map(|s| is_normal(group, s)).collect();
    let cyclic: Vec<bool> = subs.iter().map(|s| s.is_cyclic_in(group)).collect();
    // H is maximal iff proper and not contained in any other proper subgroup.
    let maximal: Vec<bool> = subs
        .iter()
        .enumerate()
        .map(|(i, h)| {
            h.order() < n
                && !subs.iter().enumerate().any(|(j, k)| {
                    j != i && k.order() < n && k.order() > h.order() && h.is_subgroup_of(k)
                })
        })
        .collect();

    Ok(SubgroupLattice {
        subgroups: subs,
        normal,
        cyclic,
        maximal,
    })
}

/// Proper subgroups with nothing strictly between them and the whole group.
pub fn maximal_subgroups(lattice: &SubgroupLattice) -> Vec<&Subgroup> {
    lattice
        .subgroups
        .iter()
        .enumerate()
        .filter(|&(i, _)| lattice.maximal[i])
        .map(|(_, s)| s)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors;

    fn lattice_of(g: &Group) -> SubgroupLattice {
        all_subgroups(g, &Caps::default()).unwrap()
    }

    #[test]
    fn z6_has_one_subgroup_per_divisor() {
        let z6 = constructors::cyclic(6, &Default::default()).unwrap();
        assert_eq!(lattice_of(&z6).len(), 4);
    }

    #[test]
    fn a4_has_ten_subgroups() {
        let a4 = constructors::alternating(4, &Default::default()).unwrap();
        assert_eq!(lattice_of(&a4).len(), 10);
    }

    #[test]
    fn a5_has_fifty_nine_subgroups() {
        let a5 = constructors::alternating(5, &Default::default()).unwrap();
        assert_eq!(lattice_of(&a5).len(), 59);
    }

    #[test]
    fn maximal_subgroups_of_z6_and_s3() {
        let z6 = constructors::cyclic(6, &Default::default()).unwrap();
        let lat = lattice_of(&z6);
        let maxes = maximal_subgroups(&lat);
        let mut orders: Vec<usize> = maxes.iter().map(|s| s.order()).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![2, 3]);

        let s3 = constructors::symmetric(3, &Default::default()).unwrap();
        let lat = lattice_of(&s3);
        let mut orders: Vec<usize> = maximal_subgroups(&lat).iter().map(|s| s.order()).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![2, 2, 2, 3]);
    }

    #[test]
    fn a4_maximal_subgroups_are_v4_and_four_z3() {
        let a4 = constructors::alternating(4, &Default::default()).unwrap();
        let lat = lattice_of(&a4);
        let mut orders: Vec<usize> = maximal_subgroups(&lat).iter().map(|s| s.order()).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![3, 3, 3, 3, 4]);
    }

    #[test]
    fn order_above_cap_is_an_error() {
        let a5 = constructors::alternating(5, &Default::default()).unwrap();
        let caps = Caps {
            lattice: 50,
            ..Caps::default()
        };
        assert!(matches!(
            all_subgroups(&a5, &caps),
            Err(LatticeError::OrderAboveCap { order: 60, cap: 50 })
        ));
    }

    #[test]
    fn subgroup_count_cap_reports_partial() {
        let a5 = constructors::alternating(5, &Default::default()).unwrap();
        let caps = Caps {
            subgroup_count: 10,
            ..Caps::default()
        };
        match all_subgroups(&a5, &caps) {
            Err(LatticeError::TooManySubgroups {
                partial_count,
                cap: 10,
            }) => {
                assert!(partial_count >= 10)
            }
            other => panic!("expected count cap error, got {other:?}"),
        }
    }

    #[test]
    fn lattice_closed_under_intersection_and_join() {
        for g in [
            constructors::symmetric(4, &Default::default()).unwrap(),
            constructors::dihedral(6, &Default::default()).unwrap(),
            constructors::alternating(4, &Default::default()).unwrap(),
        ] {
            let lat = lattice_of(&g);
            let members: std::collections::HashSet<BitSet> =
                lat.iter().map(|s| s.members().clone()).collect();
            for (i, h) in lat.iter().enumerate() {
                for k in lat.subgroups().iter().skip(i) {
                    let meet = h.members().intersection(k.members());
                    assert!(
                        members.contains(&meet),
                        "{}: missing intersection",
                        g.name()
                    );
                    let mut seed = h.member_indices();
                    seed.extend(k.member_indices());
                    let join = g.generated_subgroup(&seed);
                    assert!(
                        members.contains(join.members()),
                        "{}: missing join",
                        g.name()
                    );
                }
            }
        }
    }

    #[test]
    fn lagrange_on_every_lattice_entry() {
        for g in [
            constructors::symmetric(4, &Default::default()).unwrap(),
            constructors::generalized_quaternion(16, &Default::default()).unwrap(),
        ] {
            for s in lattice_of(&g).iter() {
                assert_eq!(g.order() % s.order(), 0);
            }
        }
    }
}
