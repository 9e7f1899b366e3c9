//! Structure classifiers: solvability, nilpotency, supersolvability,
//! and Sylow subgroup construction.

use super::lattice::{maximal_subgroups, LatticeError, SubgroupLattice};
use super::subgroup::{is_normal, Subgroup};
use super::{Caps, Group};
use crate::numtheory::is_prime;

/// Subgroup generated by all commutators `[x, y]` with `x, y` in `sub`.
fn derived_subgroup(group: &Group, sub: &Subgroup) -> Subgroup {
    let members = sub.member_indices();
    let mut seed = Vec::new();
    for &x in &members {
        for &y in &members {
            let c = group.mul(group.mul(group.inv(x), group.inv(y)), group.mul(x, y));
            seed.push(c);
        }
    }
    group.generated_subgroup(&seed)
}

/// `[G, sub]`: generated by `[g, x]` over all `g` in the group, `x` in `sub`.
fn commutator_with_group(group: &Group, sub: &Subgroup) -> Subgroup {
    let members = sub.member_indices();
    let mut seed = Vec::new();
    for g in 0..group.order() {
        for &x in &members {
            let c = group.mul(group.mul(group.inv(g), group.inv(x)), group.mul(g, x));
            seed.push(c);
        }
    }
    group.generated_subgroup(&seed)
}

/// Derived series reaches the trivial subgroup.
pub fn is_solvable(group: &Group) -> bool {
    let mut current = group.generated_subgroup(&(0..group.order()).collect::<Vec<_>>());
    loop {
        if current.is_trivial() {
            return true;
        }
        let next = derived_subgroup(group, &current);
        if next.order() == current.order() {
            return false;
        }
        current = next;
    }
}

/// Lower central series `γ₁ = G, γ_{k+1} = [G, γ_k]` reaches the trivial
/// subgroup.
pub fn is_nilpotent(group: &Group) -> bool {
    let mut current = group.generated_subgroup(&(0..group.order()).collect::<Vec<_>>());
    loop {
        if current.is_trivial() {
            return true;
        }
        let next = commutator_with_group(group, &current);
        if next.order() == current.order() {
            return false;
        }
        current = next;
    }
}

/// Huppert's criterion on a precomputed lattice: solvable and every maximal
/// subgroup of prime index.
pub fn is_supersolvable_with_lattice(group: &Group, lattice: &SubgroupLattice) -> bool {
    if !is_solvable(group) {
        return false;
    }
    maximal_subgroups(lattice)
        .iter()
        .all(|m| is_prime((group.order() / m.order()) as u64))
}

/// Huppert's criterion, enumerating the lattice first.
pub fn is_supersolvable(group: &Group, caps: &Caps) -> Result<bool, LatticeError> {
    let lattice = super::lattice::all_subgroups(group, caps)?;
    Ok(is_supersolvable_with_lattice(group, &lattice))
}

/// Independent supersolvability test: peel off normal subgroups of prime
/// order and recurse on the quotient. Supersolvability passes to quotients,
/// so any greedy choice is conclusive; no lattice needed.
pub fn is_supersolvable_by_cyclic_series(group: &Group) -> bool {
    if group.order() == 1 {
        return true;
    }
    let mut tried = std::collections::HashSet::new();
    for x in 1..group.order() {
        if !is_prime(group.element_order(x)) {
            continue;
        }
        let sub = group.generated_subgroup(&[x]);
        if !tried.insert(sub.members().clone()) {
            continue;
        }
        if is_normal(group, &sub) {
            return is_supersolvable_by_cyclic_series(&group.quotient(&sub));
        }
    }
    false
}

/// A Sylow `p`-subgroup, grown from a `p`-element by repeatedly adjoining
/// normalizing `p`-elements. Panics if `p` does not divide the group order.
pub fn sylow_subgroup(group: &Group, p: u64) -> Subgroup {
    let n = group.order() as u64;
    assert!(p >= 2 && n % p == 0, "p must divide the group order");
    let target = {
        let mut t = 1u64;
        let mut m = n;
        while m % p == 0 {
            t *= p;
            m /= p;
        }
        t as usize
    };

    // p-parts of all elements: g^(o(g)/p^a) has order exactly p^a.
    let mut p_elements: Vec<usize> = Vec::new();
    for g in 0..group.order() {
        let o = group.element_order(g);
        let mut ppart = 1u64;
        let mut m = o;
        while m % p == 0 {
            ppart *= p;
            m /= p;
        }
        if ppart > 1 {
            let mut x = 0usize;
            for _ in 0..(o / ppart) {
                x = group.mul(x, g);
            }
            p_elements.push(x);
        }
    }

    let first = *p_elements
        .first()
        .expect("Cauchy: an element of order p exists");
    let mut sylow = group.generated_subgroup(&[first]);
    while sylow.order() < target {
        let next = p_elements
            .iter()
            .copied()
            .find(|&x| {
                !sylow.contains(x)
                    && sylow
                        .members()
                        .iter()
                        .all(|h| sylow.contains(group.conjugate(x, h)))
            })
            .expect("a p-subgroup below Sylow order is normalized by an outside p-element");
        let mut seed = sylow.member_indices();
        seed.push(next);
        sylow = group.generated_subgroup(&seed);
    }
    debug_assert_eq!(sylow.order(), target);
    sylow
}

/// Shape flags of the Sylow `p`-subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SylowShape {
    pub cyclic: bool,
    pub generalized_quaternion: bool,
}

/// Cyclic iff some member has full order; generalized quaternion iff `p = 2`,
/// order at least 8, a unique involution, non-cyclic, and a cyclic subgroup
/// of index 2 (witnessed by an element of order `|S|/2`).
pub fn sylow_is_cyclic_or_generalized_quaternion(group: &Group, p: u64) -> SylowShape {
    let sylow = sylow_subgroup(group, p);
    let size = sylow.order() as u64;
    let cyclic = sylow.is_cyclic_in(group);
    let generalized_quaternion = p == 2 && size >= 8 && !cyclic && {
        let involutions = sylow
            .members()
            .iter()
            .filter(|&m| group.element_order(m) == 2)
            .count();
        involutions == 1
            && sylow
                .members()
                .iter()
                .any(|m| group.element_order(m) == size / 2)
    };
    SylowShape {
        cyclic,
        generalized_quaternion,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors;
    use crate::group::all_subgroups;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn solvability_examples() {
        assert!(is_solvable(&constructors::symmetric(4, &caps()).unwrap()));
        assert!(!is_solvable(
            &constructors::alternating(5, &caps()).unwrap()
        ));
        assert!(is_solvable(&constructors::cyclic(30, &caps()).unwrap()));
    }

    #[test]
    fn nilpotency_examples() {
        assert!(!is_nilpotent(&constructors::symmetric(3, &caps()).unwrap()));
        assert!(is_nilpotent(
            &constructors::generalized_quaternion(8, &caps()).unwrap()
        ));
        assert!(is_nilpotent(&constructors::cyclic(6, &caps()).unwrap()));
    }

    #[test]
    fn supersolvability_examples() {
        let a4 = constructors::alternating(4, &caps()).unwrap();
        assert!(!is_supersolvable(&a4, &caps()).unwrap());
        let s3 = constructors::symmetric(3, &caps()).unwrap();
        assert!(is_supersolvable(&s3, &caps()).unwrap());
        let d4 = constructors::dihedral(4, &caps()).unwrap();
        assert!(is_supersolvable(&d4, &caps()).unwrap());
    }

    #[test]
    fn huppert_agrees_with_cyclic_series_peeling() {
        let zoo: Vec<Group> = vec![
            constructors::symmetric(3, &caps()).unwrap(),
            constructors::symmetric(4, &caps()).unwrap(),
            constructors::alternating(4, &caps()).unwrap(),
            constructors::alternating(5, &caps()).unwrap(),
            constructors::dihedral(4, &caps()).unwrap(),
            constructors::dihedral(6, &caps()).unwrap(),
            constructors::generalized_quaternion(8, &caps()).unwrap(),
            constructors::generalized_quaternion(16, &caps()).unwrap(),
            constructors::cyclic(24, &caps()).unwrap(),
            constructors::semidirect_cyclic(
                &constructors::SemidirectSpec::new(7, 3, 2).unwrap(),
                &caps(),
            )
            .unwrap(),
            constructors::semidirect_cyclic(
                &constructors::SemidirectSpec::new(5, 4, 2).unwrap(),
                &caps(),
            )
            .unwrap(),
        ];
        for g in &zoo {
            assert!(g.order() <= 200);
            let huppert = is_supersolvable(g, &caps()).unwrap();
            let peeled = is_supersolvable_by_cyclic_series(g);
            assert_eq!(huppert, peeled, "disagreement on {}", g.name());
        }
    }

    #[test]
    fn classifier_chain_on_zoo() {
        for g in [
            constructors::symmetric(4, &caps()).unwrap(),
            constructors::alternating(5, &caps()).unwrap(),
            constructors::dihedral(5, &caps()).unwrap(),
            constructors::cyclic(12, &caps()).unwrap(),
        ] {
            let nil = is_nilpotent(&g);
            let sup = is_supersolvable(&g, &caps()).unwrap();
            let sol = is_solvable(&g);
            assert!(
                !nil || sup,
                "{}: nilpotent must imply supersolvable",
                g.name()
            );
            assert!(
                !sup || sol,
                "{}: supersolvable must imply solvable",
                g.name()
            );
        }
    }

    #[test]
    fn sylow_subgroup_examples() {
        let s3 = constructors::symmetric(3, &caps()).unwrap();
        assert_eq!(sylow_subgroup(&s3, 3).order(), 3);

        let s4 = constructors::symmetric(4, &caps()).unwrap();
        let syl2 = sylow_subgroup(&s4, 2);
        assert_eq!(syl2.order(), 8);
        // brute-force: it really is a subgroup of order 8 in the lattice
        let lat = all_subgroups(&s4, &caps()).unwrap();
        assert!(lat.iter().any(|s| s.members() == syl2.members()));

        let a5 = constructors::alternating(5, &caps()).unwrap();
        let syl5 = sylow_subgroup(&a5, 5);
        assert_eq!(syl5.order(), 5);
        assert!(syl5.is_cyclic_in(&a5));
    }

    #[test]
    fn sylow_shape_examples() {
        let s3 = constructors::symmetric(3, &caps()).unwrap();
        let shape = sylow_is_cyclic_or_generalized_quaternion(&s3, 3);
        assert_eq!((shape.cyclic, shape.generalized_quaternion), (true, false));

        let q8 = constructors::generalized_quaternion(8, &caps()).unwrap();
        let shape = sylow_is_cyclic_or_generalized_quaternion(&q8, 2);
        assert_eq!((shape.cyclic, shape.generalized_quaternion), (false, true));

        let a4 = constructors::alternating(4, &caps()).unwrap();
        let shape = sylow_is_cyclic_or_generalized_quaternion(&a4, 2);
        assert_eq!((shape.cyclic, shape.generalized_quaternion), (false, false));

        // Z8 is cyclic, so the unique involution must not make it quaternion.
        let z8 = constructors::cyclic(8, &caps()).unwrap();
        let shape = sylow_is_cyclic_or_generalized_quaternion(&z8, 2);
        assert_eq!((shape.cyclic, shape.generalized_quaternion), (true, false));
    }
}
