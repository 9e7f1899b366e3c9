//! Every group of squarefree order up to isomorphism.
//!
//! A group of squarefree order has all Sylow subgroups cyclic, hence is
//! `Z_a ⋊_r Z_b` with `ab = n` and `gcd(a, b) = 1`. Enumerating all coprime
//! splittings and all admissible actions therefore covers everything; a
//! certified isomorphism test collapses the duplicates.

use super::{semidirect_cyclic, ConstructError, SemidirectSpec};
use crate::group::{is_isomorphic, Caps, Group};
use crate::numtheory::{divisors, gcd, is_squarefree};

/// All groups of squarefree order `n`, as (parameters, group) pairs in
/// deterministic order with the unique abelian member first.
pub fn squarefree_groups_with_specs(
    n: u64,
    caps: &Caps,
) -> Result<Vec<(SemidirectSpec, Group)>, ConstructError> {
    if !is_squarefree(n) {
        return Err(ConstructError::NotSquarefree { n });
    }

    // The cyclic member, Z_n itself, written as Z_n ⋊ Z_1.
    let abelian = SemidirectSpec::new(n, 1, 1)?;
    let mut kept: Vec<(SemidirectSpec, Group)> =
        vec![(abelian, semidirect_cyclic(&abelian, caps)?)];
    if n == 1 {
        return Ok(kept);
    }

    for a in divisors(n) {
        if a <= 1 || a == n {
            continue;
        }
        let b = n / a;
        debug_assert_eq!(gcd(a, b), 1, "squarefree n splits coprimely");
        for r in 2..a {
            let Ok(spec) = SemidirectSpec::new(a, b, r) else {
                continue;
            };
            debug_assert!(spec.action_order() > 1);
            let candidate = semidirect_cyclic(&spec, caps)?;
            let mut duplicate = false;
            for (_, existing) in &kept {
                if is_isomorphic(&candidate, existing, caps)? {
                    duplicate = true;
                    break;
                }
            }
            if !duplicate {
                kept.push((spec, candidate));
            }
        }
    }
    Ok(kept)
}

/// All groups of squarefree order `n` up to isomorphism.
pub fn squarefree_groups(n: u64, caps: &Caps) -> Result<Vec<Group>, ConstructError> {
    Ok(squarefree_groups_with_specs(n, caps)?
        .into_iter()
        .map(|(_, g)| g)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{cyclic, symmetric};

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn order_6_has_two_groups() {
        let groups = squarefree_groups(6, &caps()).unwrap();
        assert_eq!(groups.len(), 2);
        let z6 = cyclic(6, &caps()).unwrap();
        let s3 = symmetric(3, &caps()).unwrap();
        assert!(is_isomorphic(&groups[0], &z6, &caps()).unwrap());
        assert!(is_isomorphic(&groups[1], &s3, &caps()).unwrap());
    }

    #[test]
    fn order_15_has_only_z15() {
        let groups = squarefree_groups(15, &caps()).unwrap();
        assert_eq!(groups.len(), 1);
        assert!(groups[0].is_cyclic());
    }

    #[test]
    fn order_30_has_four_groups() {
        let groups = squarefree_groups(30, &caps()).unwrap();
        assert_eq!(groups.len(), 4);
        // pairwise non-isomorphic by construction; make it explicit
        for i in 0..groups.len() {
            for j in 0..i {
                assert!(!is_isomorphic(&groups[i], &groups[j], &caps()).unwrap());
            }
        }
    }

    #[test]
    fn exactly_one_abelian_member() {
        for n in [1u64, 2, 6, 15, 30, 42, 105, 210] {
            let groups = squarefree_groups(n, &caps()).unwrap();
            let abelian = groups.iter().filter(|g| g.is_abelian()).count();
            assert_eq!(abelian, 1, "n={n}");
            assert!(groups[0].is_abelian());
            assert!(groups[0].is_cyclic());
        }
    }

    #[test]
    fn nonsquarefree_rejected() {
        assert!(matches!(
            squarefree_groups(12, &caps()),
            Err(ConstructError::NotSquarefree { n: 12 })
        ));
    }

    #[test]
    fn classical_counts_for_small_orders() {
        // number of groups of each squarefree order
        for (n, count) in [(1, 1), (2, 1), (10, 2), (21, 2), (42, 6), (66, 4), (105, 2)] {
            assert_eq!(
                squarefree_groups(n, &caps()).unwrap().len(),
                count,
                "order {n}"
            );
        }
    }
}
