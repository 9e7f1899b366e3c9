//! The counted invariants: cyc(G) by two independent routes, sub(G),
//! involution counts, order sequences with (strong) domination, the
//! closed-form semidirect prediction, and the per-group record bundle.

mod flow;

use crate::group::{
    all_subgroups, cyclic_subgroups, is_supersolvable_with_lattice,
    sylow_is_cyclic_or_generalized_quaternion, Caps, Group, LatticeError,
};
use crate::numtheory::{divisors, euler_phi, factorize, lcm, prime_power_decompose, Rational};
use flow::FlowNetwork;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantError {
    /// Order sequences of different totals cannot be compared.
    SizeMismatch { left: u64, right: u64 },
    /// The φ-sum came out non-integral: the table is corrupt.
    NonIntegralPhiSum { group: String, sum: String },
    /// The two cyc routes disagreed: the engine is inconsistent.
    OracleMismatch {
        group: String,
        phi_sum: u64,
        enumeration: u64,
    },
    /// The involution formula only covers odd q.
    EvenCharacteristic { q: u64 },
}

impl fmt::Display for InvariantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantError::SizeMismatch { left, right } => {
                write!(
                    f,
                    "order sequences have different totals: {left} vs {right}"
                )
            }
            InvariantError::NonIntegralPhiSum { group, sum } => {
                write!(f, "phi-sum of {group} is non-integral ({sum})")
            }
            InvariantError::OracleMismatch {
                group,
                phi_sum,
                enumeration,
            } => write!(
                f,
                "cyc routes disagree on {group}: phi-sum {phi_sum}, enumeration {enumeration}"
            ),
            InvariantError::EvenCharacteristic { q } => {
                write!(f, "involution formula needs odd q, got {q}")
            }
        }
    }
}

impl std::error::Error for InvariantError {}

/// The multiset of element orders, as an order → multiplicity map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSequence {
    counts: BTreeMap<u64, u64>,
    total: u64,
}

impl OrderSequence {
    pub fn of(group: &Group) -> Self {
        let mut counts = BTreeMap::new();
        for &o in group.element_orders() {
            *counts.entry(o).or_insert(0) += 1;
        }
        OrderSequence {
            counts,
            total: group.order() as u64,
        }
    }

    /// Order sequence of `Z_{m₁} × Z_{m₂} × ...` computed arithmetically:
    /// `Z_m` has φ(d) elements of order `d` per divisor, and orders of pairs
    /// are lcms. No group is materialized.
    pub fn of_cyclic_product(moduli: &[u64]) -> Self {
        let mut counts: BTreeMap<u64, u64> = BTreeMap::from([(1, 1)]);
        for &m in moduli {
            let mut next: BTreeMap<u64, u64> = BTreeMap::new();
            for (&d1, &c1) in &counts {
                for d2 in divisors(m) {
                    *next.entry(lcm(d1, d2)).or_insert(0) += c1 * euler_phi(d2);
                }
            }
            counts = next;
        }
        let total = counts.values().sum();
        OrderSequence { counts, total }
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn count_of(&self, order: u64) -> u64 {
        self.counts.get(&order).copied().unwrap_or(0)
    }
}

/// `cyc(G) = Σ_{g∈G} 1/φ(o(g))`, accumulated exactly; the sum must land on
/// an integer or the table is broken.
pub fn cyc_by_phi_sum(group: &Group) -> Result<u64, InvariantError> {
    let os = OrderSequence::of(group);
    let mut sum = Rational::ZERO;
    for (&order, &count) in os.counts() {
        sum = sum.add(&Rational::new(count as i128, euler_phi(order) as i128));
    }
    match sum.as_integer() {
        Some(v) if v >= 0 => Ok(v as u64),
        _ => Err(InvariantError::NonIntegralPhiSum {
            group: group.name().to_string(),
            sum: sum.to_string(),
        }),
    }
}

/// `cyc(G)` by listing the distinct subgroups `⟨g⟩`.
pub fn cyc_by_enumeration(group: &Group) -> u64 {
    cyclic_subgroups(group).len() as u64
}

/// `sub(G)` from the full lattice.
pub fn sub_count(group: &Group, caps: &Caps) -> Result<u64, LatticeError> {
    Ok(all_subgroups(group, caps)?.len() as u64)
}

/// Elements of order exactly 2.
pub fn involution_count(group: &Group) -> u64 {
    group.element_orders().iter().filter(|&&o| o == 2).count() as u64
}

/// Involutions of PSL(2,q) for odd prime powers:
/// `q(q+1)/2` when `q ≡ 1 (mod 4)`, `q(q-1)/2` when `q ≡ 3 (mod 4)`.
pub fn psl2_involution_formula(q: u64) -> Result<u64, InvariantError> {
    match prime_power_decompose(q) {
        Some((p, _)) if p != 2 && q >= 3 => Ok(if q % 4 == 1 {
            q * (q + 1) / 2
        } else {
            q * (q - 1) / 2
        }),
        _ => Err(InvariantError::EvenCharacteristic { q }),
    }
}

/// Closed-form `cyc(Z_{p_t} ⋊ Z_m) = p_t·2^{t-1} - (p_t-2)·2^{t-1-π(k)}`
/// for squarefree `m` with `t-1` prime factors and an action of order `k`.
pub fn predicted_cyc_semidirect(p_t: u64, t: u32, pi_k: u32) -> u64 {
    assert!(p_t >= 3 && p_t % 2 == 1, "p_t must be an odd prime");
    assert!(t >= 2, "the formula needs at least two primes");
    assert!(
        (1..=t - 1).contains(&pi_k),
        "π(k) must lie in 1..=t-1, got {pi_k} for t={t}"
    );
    p_t * (1 << (t - 1)) - (p_t - 2) * (1 << (t - 1 - pi_k))
}

/// Pointwise comparison of the ascending order sequences: every slot of `a`
/// at least the matching slot of `b`.
pub fn dominates(a: &OrderSequence, b: &OrderSequence) -> Result<bool, InvariantError> {
    if a.total != b.total {
        return Err(InvariantError::SizeMismatch {
            left: a.total,
            right: b.total,
        });
    }
    let mut ia = a.counts.iter();
    let mut ib = b.counts.iter();
    let (mut ca, mut cb) = (ia.next(), ib.next());
    let (mut ra, mut rb) = (0u64, 0u64);
    loop {
        match (ca, cb) {
            (None, None) => return Ok(true),
            (Some((&da, &na)), Some((&db, &nb))) => {
                if da < db {
                    return Ok(false);
                }
                let run = (na - ra).min(nb - rb);
                ra += run;
                rb += run;
                if ra == na {
                    ca = ia.next();
                    ra = 0;
                }
                if rb == nb {
                    cb = ib.next();
                    rb = 0;
                }
            }
            _ => unreachable!("equal totals exhaust together"),
        }
    }
}

/// Strong domination: a perfect assignment sending each slot of `a` (order
/// `d`) to a slot of `b` whose order divides `d`. Decided by max flow over
/// the order classes rather than the elements.
pub fn strongly_dominates(a: &OrderSequence, b: &OrderSequence) -> Result<bool, InvariantError> {
    if a.total != b.total {
        return Err(InvariantError::SizeMismatch {
            left: a.total,
            right: b.total,
        });
    }
    let a_classes: Vec<(u64, u64)> = a.counts.iter().map(|(&d, &c)| (d, c)).collect();
    let b_classes: Vec<(u64, u64)> = b.counts.iter().map(|(&d, &c)| (d, c)).collect();
    let (na, nb) = (a_classes.len(), b_classes.len());
    let mut net = FlowNetwork::new(na + nb + 2);
    let source = na + nb;
    let sink = na + nb + 1;
    for (i, &(_, c)) in a_classes.iter().enumerate() {
        net.add_edge(source, i, c);
    }
    for (j, &(_, c)) in b_classes.iter().enumerate() {
        net.add_edge(na + j, sink, c);
    }
    for (i, &(da, _)) in a_classes.iter().enumerate() {
        for (j, &(db, _)) in b_classes.iter().enumerate() {
            if da % db == 0 {
                net.add_edge(i, na + j, u64::MAX / 4);
            }
        }
    }
    Ok(net.max_flow(source, sink) == a.total)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SylowFlags {
    pub p: u64,
    pub cyclic: bool,
    pub generalized_quaternion: bool,
}

/// Everything the verifier wants to know about one group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub name: String,
    pub order: u64,
    /// π(|G|); 0 for the trivial group.
    pub t: u32,
    pub cyc: u64,
    /// None when the lattice was skipped or capped.
    pub sub: Option<u64>,
    pub is_cyclic: bool,
    pub nilpotent: bool,
    /// Huppert's criterion needs the lattice; None when unavailable.
    pub supersolvable: Option<bool>,
    pub solvable: bool,
    pub sylow: Vec<SylowFlags>,
}

impl InvariantRecord {
    /// Flat key-value view for table/CSV emission.
    pub fn rows(&self) -> Vec<(&'static str, String)> {
        let fmt_opt_u = |v: Option<u64>| v.map_or("-".to_string(), |x| x.to_string());
        let fmt_opt_b = |v: Option<bool>| v.map_or("-".to_string(), |x| x.to_string());
        vec![
            ("name", self.name.clone()),
            ("order", self.order.to_string()),
            ("t", self.t.to_string()),
            ("cyc", self.cyc.to_string()),
            ("sub", fmt_opt_u(self.sub)),
            ("cyclic", self.is_cyclic.to_string()),
            ("nilpotent", self.nilpotent.to_string()),
            ("supersolvable", fmt_opt_b(self.supersolvable)),
            ("solvable", self.solvable.to_string()),
            (
                "sylow",
                self.sylow
                    .iter()
                    .map(|s| {
                        let shape = if s.cyclic {
                            "cyclic"
                        } else if s.generalized_quaternion {
                            "genquat"
                        } else {
                            "other"
                        };
                        format!("{}:{}", s.p, shape)
                    })
                    .collect::<Vec<_>>()
                    .join(" "),
            ),
        ]
    }
}

/// Bundle the invariants of one group. `cyc` is always computed both ways
/// and cross-checked; a mismatch is a hard error. Lattice-dependent fields
/// degrade to `None` when `with_lattice` is off or a cap bites.
pub fn invariant_record(
    group: &Group,
    caps: &Caps,
    with_lattice: bool,
) -> Result<InvariantRecord, InvariantError> {
    let phi_sum = cyc_by_phi_sum(group)?;
    let enumeration = cyc_by_enumeration(group);
    if phi_sum != enumeration {
        return Err(InvariantError::OracleMismatch {
            group: group.name().to_string(),
            phi_sum,
            enumeration,
        });
    }

    let order = group.order() as u64;
    let lattice = if with_lattice {
        all_subgroups(group, caps).ok()
    } else {
        None
    };
    let sub = lattice.as_ref().map(|l| l.len() as u64);
    let supersolvable = lattice
        .as_ref()
        .map(|l| is_supersolvable_with_lattice(group, l));

    let sylow = factorize(order)
        .pairs()
        .iter()
        .map(|&(p, _)| {
            let shape = sylow_is_cyclic_or_generalized_quaternion(group, p);
            SylowFlags {
                p,
                cyclic: shape.cyclic,
                generalized_quaternion: shape.generalized_quaternion,
            }
        })
        .collect();

    Ok(InvariantRecord {
        name: group.name().to_string(),
        order,
        t: factorize(order).distinct_primes(),
        cyc: phi_sum,
        sub,
        is_cyclic: group.is_cyclic(),
        nilpotent: crate::group::is_nilpotent(group),
        supersolvable,
        solvable: crate::group::is_solvable(group),
        sylow,
    })
}
