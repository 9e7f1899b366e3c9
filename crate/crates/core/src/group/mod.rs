//! Finite groups as materialized multiplication tables.
//!
//! A [`Group`] stores the full `n × n` product table over element indices
//! `0..n`, with index 0 the identity. One table representation backs every
//! construction route (permutation closure, matrix groups, semidirect
//! products, ingested files), so lattice enumeration and classifiers never
//! care where a group came from.

mod bitset;
mod classify;
mod iso;
mod lattice;
mod subgroup;

pub use bitset::BitSet;
pub use classify::{
    is_nilpotent, is_solvable, is_supersolvable, is_supersolvable_by_cyclic_series,
    is_supersolvable_with_lattice, sylow_is_cyclic_or_generalized_quaternion, sylow_subgroup,
    SylowShape,
};
pub use iso::{is_isomorphic, IsomorphismCapExceeded};
pub use lattice::{all_subgroups, maximal_subgroups, LatticeError, SubgroupLattice};
pub use subgroup::{cyclic_subgroups, is_normal, Subgroup};

use crate::numtheory;
use std::collections::HashMap;
use std::fmt;

/// Construction-time caps, operator-tunable everywhere they matter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest group order a constructor may materialize.
    pub order: usize,
    /// Largest order for which the subgroup lattice is enumerated.
    pub lattice: usize,
    /// Abort lattice enumeration past this many subgroups.
    pub subgroup_count: usize,
    /// Largest order for which isomorphism testing is attempted.
    pub isomorphism: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            order: 20_000,
            lattice: 2_000,
            subgroup_count: 1_000_000,
            isomorphism: 2_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    /// Generator closure or a product construction outgrew the order cap.
    OrderCapExceeded { reached: usize, cap: usize },
    /// A generator image array is not a bijection of `0..degree`.
    InvalidPermutation { detail: String },
    /// A supplied table violates the group axioms.
    InvalidTable { detail: String },
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::OrderCapExceeded { reached, cap } => {
                write!(f, "group order reached {reached}, exceeding the cap {cap}")
            }
            GroupError::InvalidPermutation { detail } => {
                write!(f, "invalid permutation: {detail}")
            }
            GroupError::InvalidTable { detail } => write!(f, "invalid table: {detail}"),
        }
    }
}

impl std::error::Error for GroupError {}

/// A finite group on element indices `0..order`, index 0 the identity.
#[derive(Clone)]
pub struct Group {
    order: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
    element_orders: Vec<u64>,
    generators: Vec<usize>,
    name: String,
    element_labels: Option<Vec<String>>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

impl Group {
    /// Build and validate a group from a raw table.
    ///
    /// Checks identity behaviour, that rows and columns are permutations,
    /// inverse consistency, and associativity: exhaustively for order ≤ 256,
    /// on 10^4 deterministic pseudo-random triples above that.
    pub fn from_table(
        name: impl Into<String>,
        table: Vec<u16>,
        cap: usize,
    ) -> Result<Group, GroupError> {
        let name = name.into();
        let order = (table.len() as f64).sqrt().round() as usize;
        if order * order != table.len() || order == 0 {
            return Err(GroupError::InvalidTable {
                detail: format!("table length {} is not a positive square", table.len()),
            });
        }
        if order > cap {
            return Err(GroupError::OrderCapExceeded {
                reached: order,
                cap,
            });
        }
        if order > u16::MAX as usize {
            return Err(GroupError::InvalidTable {
                detail: format!("order {order} exceeds the table index width"),
            });
        }
        let at = |i: usize, j: usize| table[i * order + j] as usize;
        for k in table.iter() {
            if (*k as usize) >= order {
                return Err(GroupError::InvalidTable {
                    detail: format!("entry {k} out of range"),
                });
            }
        }
        for i in 0..order {
            if at(0, i) != i || at(i, 0) != i {
                return Err(GroupError::InvalidTable {
                    detail: "index 0 is not a two-sided identity".into(),
                });
            }
        }
        // Latin square: every row and column is a permutation.
        let mut seen_row = vec![false; order];
        let mut seen_col = vec![false; order];
        for i in 0..order {
            seen_row.iter_mut().for_each(|b| *b = false);
            seen_col.iter_mut().for_each(|b| *b = false);
            for j in 0..order {
                let r = at(i, j);
                let c = at(j, i);
                if seen_row[r] || seen_col[c] {
                    return Err(GroupError::InvalidTable {
                        detail: format!("row or column {i} repeats an element"),
                    });
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
        }
        let mut inverse = vec![0u16; order];
        for i in 0..order {
            let mut found = None;
            for j in 0..order {
                if at(i, j) == 0 {
                    found = Some(j);
                    break;
                }
            }
            let j = found.ok_or_else(|| GroupError::InvalidTable {
                detail: format!("element {i} has no right inverse"),
            })?;
            if at(j, i) != 0 {
                return Err(GroupError::InvalidTable {
                    detail: format!("element {i} has no two-sided inverse"),
                });
            }
            inverse[i] = j as u16;
        }
        let check = |a: usize, b: usize, c: usize| at(at(a, b), c) == at(a, at(b, c));
        if order <= 256 {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        if !check(a, b, c) {
                            return Err(GroupError::InvalidTable {
                                detail: format!("associativity fails at ({a},{b},{c})"),
                            });
                        }
                    }
                }
            }
        } else {
            // Deterministic LCG so the same input always checks the same triples.
            let mut state = 0x9e3779b97f4a7c15u64 ^ (order as u64);
            let mut next = move || {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                (state >> 33) as usize
            };
            for _ in 0..10_000 {
                let (a, b, c) = (next() % order, next() % order, next() % order);
                if !check(a, b, c) {
                    return Err(GroupError::InvalidTable {
                        detail: format!("associativity fails at ({a},{b},{c})"),
                    });
                }
            }
        }

        let mut g = Group {
            order,
            table,
            inverse,
            element_orders: Vec::new(),
            generators: Vec::new(),
            name,
            element_labels: None,
        };
        g.element_orders = (0..order).map(|i| g.compute_element_order(i)).collect();
        g.generators = g.greedy_generating_set();
        Ok(g)
    }

    /// Closure of permutation generators under composition, materialized as
    /// a table. Image arrays are 0-indexed; `gens[k][i]` is where generator
    /// `k` sends point `i`.
    pub fn from_generators(
        degree: usize,
        gens: &[Vec<usize>],
        name: impl Into<String>,
        cap: usize,
    ) -> Result<Group, GroupError> {
        for (k, g) in gens.iter().enumerate() {
            if g.len() != degree {
                return Err(GroupError::InvalidPermutation {
                    detail: format!("generator {k} has {} images, expected {degree}", g.len()),
                });
            }
            let mut seen = vec![false; degree];
            for &img in g {
                if img >= degree || seen[img] {
                    return Err(GroupError::InvalidPermutation {
                        detail: format!("generator {k} is not a bijection of 0..{degree}"),
                    });
                }
                seen[img] = true;
            }
        }

        let identity: Vec<usize> = (0..degree).collect();
        let mut elements: Vec<Vec<usize>> = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut frontier = 0;
        while frontier < elements.len() {
            let current = elements[frontier].clone();
            for g in gens {
                // right multiplication: (current ∘ g)(i) = current[g[i]]
                let product: Vec<usize> = (0..degree).map(|i| current[g[i]]).collect();
                if !index.contains_key(&product) {
                    if elements.len() >= cap {
                        return Err(GroupError::OrderCapExceeded {
                            reached: elements.len() + 1,
                            cap,
                        });
                    }
                    index.insert(product.clone(), elements.len());
                    elements.push(product);
                }
            }
            frontier += 1;
        }

        let n = elements.len();
        let mut table = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                let product: Vec<usize> =
                    (0..degree).map(|p| elements[i][elements[j][p]]).collect();
                table[i * n + j] = index[&product] as u16;
            }
        }
        Group::from_table(name, table, cap)
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn element_labels(&self) -> Option<&[String]> {
        self.element_labels.as_deref()
    }

    pub fn set_element_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.order);
        self.element_labels = Some(labels);
    }

    /// A small generating set found greedily at construction.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Multiplicative order of element `i`.
    pub fn element_order(&self, i: usize) -> u64 {
        self.element_orders[i]
    }

    pub fn element_orders(&self) -> &[u64] {
        &self.element_orders
    }

    fn compute_element_order(&self, i: usize) -> u64 {
        let mut x = i;
        let mut k = 1u64;
        while x != 0 {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    /// lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        self.element_orders
            .iter()
            .fold(1u64, |acc, &o| numtheory::lcm(acc, o))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.element_orders.contains(&(self.order as u64))
    }

    /// Closure of `seed` under products. Returns `None` if the closure grows
    /// past `stop_above` (caller knows the result must then be a larger
    /// subgroup, usually the whole group).
    pub fn closure(&self, seed: &[usize], stop_above: usize) -> Option<(Vec<usize>, BitSet)> {
        let mut members: Vec<usize> = Vec::new();
        let mut inset = BitSet::new(self.order);
        if !inset.contains(0) {
            inset.insert(0);
            members.push(0);
        }
        for &s in seed {
            if !inset.contains(s) {
                inset.insert(s);
                members.push(s);
            }
        }
        if members.len() > stop_above {
            return None;
        }
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for j in 0..=i {
                let y = members[j];
                for p in [self.mul(x, y), self.mul(y, x)] {
                    if !inset.contains(p) {
                        inset.insert(p);
                        members.push(p);
                        if members.len() > stop_above {
                            return None;
                        }
                    }
                }
            }
            i += 1;
        }
        Some((members, inset))
    }

    /// The subgroup generated by `seed`.
    pub fn generated_subgroup(&self, seed: &[usize]) -> Subgroup {
        let (members, inset) = self
            .closure(seed, self.order)
            .expect("closure bounded by the group order");
        Subgroup::from_parts(inset, members.len())
    }

    fn greedy_generating_set(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut closed = BitSet::new(self.order);
        closed.insert(0);
        let mut count = 1;
        while count < self.order {
            let next = (0..self.order)
                .find(|&i| !closed.contains(i))
                .expect("closure incomplete implies a missing element");
            gens.push(next);
            let (members, inset) = self
                .closure(&gens, self.order)
                .expect("closure bounded by the group order");
            count = members.len();
            closed = inset;
        }
        gens
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&x| {
                self.generators
                    .iter()
                    .all(|&g| self.mul(x, g) == self.mul(g, x))
            })
            .collect()
    }

    /// Sizes of the conjugacy classes, sorted ascending.
    pub fn conjugacy_class_sizes(&self) -> Vec<usize> {
        let mut assigned = vec![false; self.order];
        let mut sizes = Vec::new();
        for start in 0..self.order {
            if assigned[start] {
                continue;
            }
            let mut orbit = vec![start];
            assigned[start] = true;
            let mut i = 0;
            while i < orbit.len() {
                let x = orbit[i];
                for &g in &self.generators {
                    let y = self.conjugate(g, x);
                    if !assigned[y] {
                        assigned[y] = true;
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            sizes.push(orbit.len());
        }
        sizes.sort_unstable();
        sizes
    }

    /// Quotient by a normal subgroup; elements are cosets indexed by their
    /// least representative, with the coset of the identity at index 0.
    pub fn quotient(&self, normal: &Subgroup) -> Group {
        debug_assert!(is_normal(self, normal));
        let n_members = normal.members().to_vec();
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps: Vec<usize> = Vec::new();
        for g in 0..self.order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for &n in &n_members {
                coset_of[self.mul(g, n)] = id;
            }
        }
        let q = reps.len();
        let mut table = vec![0u16; q * q];
        for (a, &ra) in reps.iter().enumerate() {
            for (b, &rb) in reps.iter().enumerate() {
                table[a * q + b] = coset_of[self.mul(ra, rb)] as u16;
            }
        }
        Group::from_table(
            format!("{}/N{}", self.name, normal.order()),
            table,
            self.order,
        )
        .expect("quotient of a valid group by a normal subgroup is a valid group")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn s3() -> Group {
        Group::from_generators(3, &[vec![1, 2, 0], vec![1, 0, 2]], "S3", 20_000).unwrap()
    }

    #[test]
    fn s3_from_generators() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.element_order(0), 1);
        let orders: Vec<u64> = g.element_orders().to_vec();
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 3);
        assert_eq!(orders.iter().filter(|&&o| o == 3).count(), 2);
    }

    #[test]
    fn z4_from_single_cycle() {
        let g = Group::from_generators(4, &[vec![1, 2, 3, 0]], "Z4", 20_000).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_cyclic());
        assert!(g.is_abelian());
    }

    #[test]
    fn a5_from_three_cycles() {
        let gens = vec![
            vec![1, 2, 0, 3, 4],
            vec![0, 2, 3, 1, 4],
            vec![0, 1, 3, 4, 2],
        ];
        let g = Group::from_generators(5, &gens, "A5", 20_000).unwrap();
        assert_eq!(g.order(), 60);
        assert!(!g.is_abelian());
    }

    #[test]
    fn bad_permutation_rejected() {
        let err = Group::from_generators(3, &[vec![1, 1, 2]], "bad", 100).unwrap_err();
        assert!(matches!(err, GroupError::InvalidPermutation { .. }));
    }

    #[test]
    fn order_cap_enforced() {
        let err = Group::from_generators(
            5,
            &[
                vec![1, 2, 0, 3, 4],
                vec![1, 0, 2, 3, 4],
                vec![0, 1, 2, 4, 3],
                vec![4, 1, 2, 3, 0],
            ],
            "S5",
            30,
        )
        .unwrap_err();
        assert!(matches!(err, GroupError::OrderCapExceeded { .. }));
    }

    #[test]
    fn broken_table_rejected() {
        // 2x2 table where 1*1 = 1 breaks the Latin square property.
        let err = Group::from_table("bad", vec![0, 1, 1, 1], 100).unwrap_err();
        assert!(matches!(err, GroupError::InvalidTable { .. }));
    }

    #[test]
    fn inverse_and_conjugation() {
        let g = s3();
        for i in 0..g.order() {
            assert_eq!(g.mul(i, g.inv(i)), 0);
            assert_eq!(g.mul(g.inv(i), i), 0);
        }
        // conjugation preserves element order
        for i in 0..g.order() {
            for x in 0..g.order() {
                assert_eq!(g.element_order(g.conjugate(i, x)), g.element_order(x));
            }
        }
    }

    #[test]
    fn greedy_generators_generate() {
        let g = s3();
        let gens = g.generators().to_vec();
        let sub = g.generated_subgroup(&gens);
        assert_eq!(sub.order(), g.order());
    }

    #[test]
    fn quotient_of_s3_by_rotation_subgroup() {
        let g = s3();
        let rot = (0..g.order()).find(|&i| g.element_order(i) == 3).unwrap();
        let n = g.generated_subgroup(&[rot]);
        assert!(is_normal(&g, &n));
        let q = g.quotient(&n);
        assert_eq!(q.order(), 2);
        assert!(q.is_cyclic());
    }

    #[test]
    fn conjugacy_classes_of_s3() {
        assert_eq!(s3().conjugacy_class_sizes(), vec![1, 2, 3]);
    }
}
