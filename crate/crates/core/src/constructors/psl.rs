//! SL(2,q) and PSL(2,q) as multiplication-table groups over GF(q).

use super::gf::GfTable;
use super::ConstructError;
use crate::group::{Caps, Group, GroupError};
use crate::numtheory::prime_power_decompose;
use std::collections::HashMap;

type Mat = [u16; 4];

fn mat_mul(gf: &GfTable, x: &Mat, y: &Mat) -> Mat {
    let m = |i: usize| x[i] as usize;
    let n = |i: usize| y[i] as usize;
    [
        gf.add(gf.mul(m(0), n(0)), gf.mul(m(1), n(2))) as u16,
        gf.add(gf.mul(m(0), n(1)), gf.mul(m(1), n(3))) as u16,
        gf.add(gf.mul(m(2), n(0)), gf.mul(m(3), n(2))) as u16,
        gf.add(gf.mul(m(2), n(1)), gf.mul(m(3), n(3))) as u16,
    ]
}

fn neg_mat(gf: &GfTable, m: &Mat) -> Mat {
    [
        gf.neg(m[0] as usize) as u16,
        gf.neg(m[1] as usize) as u16,
        gf.neg(m[2] as usize) as u16,
        gf.neg(m[3] as usize) as u16,
    ]
}

/// Lexicographically least of `{A, -A}`: the canonical PSL representative.
fn canonical(gf: &GfTable, m: &Mat) -> Mat {
    let n = neg_mat(gf, m);
    if *m <= n {
        *m
    } else {
        n
    }
}

fn det_one_matrices(gf: &GfTable) -> Vec<Mat> {
    let q = gf.size();
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    if gf.sub(gf.mul(a, d), gf.mul(b, c)) == 1 {
                        out.push([a as u16, b as u16, c as u16, d as u16]);
                    }
                }
            }
        }
    }
    out
}

fn build_from_reps(
    name: String,
    gf: &GfTable,
    mut reps: Vec<Mat>,
    quotiented: bool,
    caps: &Caps,
) -> Result<Group, ConstructError> {
    let identity: Mat = [1, 0, 0, 1];
    reps.sort_unstable();
    reps.dedup();
    let pos = reps
        .iter()
        .position(|m| {
            *m == if quotiented {
                canonical(gf, &identity)
            } else {
                identity
            }
        })
        .expect("identity is in the element list");
    reps.swap(0, pos);

    let n = reps.len();
    if n > caps.order {
        return Err(ConstructError::Group(GroupError::OrderCapExceeded {
            reached: n,
            cap: caps.order,
        }));
    }
    let index: HashMap<Mat, usize> = reps.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut table = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut prod = mat_mul(gf, &reps[i], &reps[j]);
            if quotiented {
                prod = canonical(gf, &prod);
            }
            table[i * n + j] = index[&prod] as u16;
        }
    }
    Ok(Group::from_table(name, table, caps.order)?)
}

/// `SL(2,q)`: 2×2 matrices of determinant 1 over GF(q). Order `q(q²-1)`.
pub fn sl2(q: u64, caps: &Caps) -> Result<Group, ConstructError> {
    if prime_power_decompose(q).is_none() {
        return Err(ConstructError::NotPrimePower { q });
    }
    let expected = (q * (q * q - 1)) as usize;
    if expected > caps.order {
        return Err(ConstructError::Group(GroupError::OrderCapExceeded {
            reached: expected,
            cap: caps.order,
        }));
    }
    let gf = GfTable::new(q)?;
    let mats = det_one_matrices(&gf);
    debug_assert_eq!(mats.len(), expected);
    build_from_reps(format!("SL(2,{q})"), &gf, mats, false, caps)
}

/// `PSL(2,q) = SL(2,q)/{±I}` on canonical class representatives.
/// Order `q(q²-1)/gcd(2, q-1)`. Needs `q ≥ 3`.
pub fn psl2(q: u64, caps: &Caps) -> Result<Group, ConstructError> {
    if prime_power_decompose(q).is_none() {
        return Err(ConstructError::NotPrimePower { q });
    }
    if q < 3 {
        return Err(ConstructError::Domain {
            detail: format!("PSL(2,q) supported for prime powers q >= 3, got {q}"),
        });
    }
    let half = if q % 2 == 0 { 1 } else { 2 };
    let expected = (q * (q * q - 1) / half) as usize;
    if expected > caps.order {
        return Err(ConstructError::Group(GroupError::OrderCapExceeded {
            reached: expected,
            cap: caps.order,
        }));
    }
    let gf = GfTable::new(q)?;
    let reps: Vec<Mat> = det_one_matrices(&gf)
        .iter()
        .map(|m| canonical(&gf, m))
        .collect();
    let g = build_from_reps(format!("PSL(2,{q})"), &gf, reps, true, caps)?;
    debug_assert_eq!(g.order(), expected);
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::alternating;
    use crate::group::is_isomorphic;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn orders_match_the_formula() {
        for q in [3u64, 4, 5, 7, 8, 9] {
            let half = if q % 2 == 0 { 1 } else { 2 };
            let g = psl2(q, &caps()).unwrap();
            assert_eq!(g.order() as u64, q * (q * q - 1) / half, "PSL(2,{q})");
        }
        assert_eq!(sl2(3, &caps()).unwrap().order(), 24);
        assert_eq!(sl2(5, &caps()).unwrap().order(), 120);
    }

    #[test]
    fn psl2_7_has_order_168() {
        assert_eq!(psl2(7, &caps()).unwrap().order(), 168);
    }

    #[test]
    fn psl2_5_is_a5() {
        let g = psl2(5, &caps()).unwrap();
        let a5 = alternating(5, &caps()).unwrap();
        assert!(is_isomorphic(&g, &a5, &caps()).unwrap());
    }

    #[test]
    fn psl2_4_is_a5_too() {
        let g = psl2(4, &caps()).unwrap();
        assert_eq!(g.order(), 60);
        let a5 = alternating(5, &caps()).unwrap();
        assert!(is_isomorphic(&g, &a5, &caps()).unwrap());
    }

    #[test]
    fn psl2_3_is_a4() {
        let g = psl2(3, &caps()).unwrap();
        let a4 = alternating(4, &caps()).unwrap();
        assert!(is_isomorphic(&g, &a4, &caps()).unwrap());
    }

    #[test]
    fn rejects_non_prime_powers_and_tiny_q() {
        assert!(matches!(
            psl2(6, &caps()),
            Err(ConstructError::NotPrimePower { q: 6 })
        ));
        assert!(psl2(2, &caps()).is_err());
        assert!(sl2(2, &caps()).is_ok());
    }

    #[test]
    fn order_cap_respected() {
        let tiny = Caps {
            order: 100,
            ..Caps::default()
        };
        assert!(matches!(
            psl2(7, &tiny),
            Err(ConstructError::Group(GroupError::OrderCapExceeded { .. }))
        ));
    }
}
