//! The claim catalog: published numeric figures for specific groups,
//! compared against computed values. Two discrepancies are known and
//! expected; anything else deviating is a failure.

use super::report::{VerdictReport, Violation};
use crate::constructors;
use crate::group::Caps;
use crate::invariants::{cyc_by_enumeration, sub_count};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Quantity {
    Cyc,
    Sub,
}

struct Claim {
    id: &'static str,
    description: &'static str,
    spec: &'static str,
    quantity: Quantity,
    claimed: u64,
    /// true when the computed value is known to differ from the claim.
    expect_discrepancy: bool,
}

const CLAIMS: &[Claim] = &[
    Claim {
        id: "S3-cyc",
        description: "S3 has 5 cyclic subgroups",
        spec: "S(3)",
        quantity: Quantity::Cyc,
        claimed: 5,
        expect_discrepancy: false,
    },
    Claim {
        id: "S3-sub",
        description: "S3 has 6 subgroups",
        spec: "S(3)",
        quantity: Quantity::Sub,
        claimed: 6,
        expect_discrepancy: false,
    },
    Claim {
        id: "A4-cyc",
        description: "A4 has 8 cyclic subgroups",
        spec: "A(4)",
        quantity: Quantity::Cyc,
        claimed: 8,
        expect_discrepancy: false,
    },
    Claim {
        id: "A4-sub",
        description: "A4 has 10 subgroups",
        spec: "A(4)",
        quantity: Quantity::Sub,
        claimed: 10,
        expect_discrepancy: false,
    },
    Claim {
        id: "A5-sub",
        description: "A5 has 59 subgroups",
        spec: "A(5)",
        quantity: Quantity::Sub,
        claimed: 59,
        expect_discrepancy: false,
    },
    // The claimed "cyclic subgroup" figures for PSL(2,3) and PSL(2,5) are
    // their total subgroup counts; the cyclic counts are 8 and 32.
    Claim {
        id: "PSL(2,3)-cyc",
        description: "PSL(2,3) has 10 cyclic subgroups",
        spec: "PSL(2,3)",
        quantity: Quantity::Cyc,
        claimed: 10,
        expect_discrepancy: true,
    },
    Claim {
        id: "PSL(2,5)-cyc",
        description: "PSL(2,5) has 59 cyclic subgroups",
        spec: "PSL(2,5)",
        quantity: Quantity::Cyc,
        claimed: 59,
        expect_discrepancy: true,
    },
    // The claimed subgroup count of the t=3 supersolvability witness uses
    // exponent t-2; coprime multiplicativity gives 5*2^(t-1) = 20.
    Claim {
        id: "A4xZ5-sub-witness",
        description: "the t=3 witness A4 x Z5 has 5*2^(t-2) = 10 subgroups",
        spec: "A(4) x Z(5)",
        quantity: Quantity::Sub,
        claimed: 10,
        expect_discrepancy: true,
    },
];

/// Compare every catalogued claim against the engine and flag exactly the
/// expected discrepancies.
pub fn errata_report(caps: &Caps) -> VerdictReport {
    let mut violations = Vec::new();
    let mut lines = Vec::new();
    for claim in CLAIMS {
        let computed = match constructors::group_from_spec(claim.spec, caps) {
            Ok(group) => match claim.quantity {
                Quantity::Cyc => Ok(cyc_by_enumeration(&group)),
                Quantity::Sub => sub_count(&group, caps).map_err(|e| e.to_string()),
            },
            Err(e) => Err(e.to_string()),
        };
        let computed = match computed {
            Ok(v) => v,
            Err(e) => {
                violations.push(Violation {
                    group: claim.id.to_string(),
                    detail: format!("could not evaluate claim: {e}"),
                });
                continue;
            }
        };
        let agrees = computed == claim.claimed;
        lines.push(format!(
            "{}: \"{}\" -> computed {}{}",
            claim.id,
            claim.description,
            computed,
            if agrees {
                ", agrees".to_string()
            } else {
                format!(", DISCREPANT (claimed {})", claim.claimed)
            }
        ));
        if agrees == claim.expect_discrepancy {
            violations.push(Violation {
                group: claim.id.to_string(),
                detail: if agrees {
                    format!("expected a discrepancy but computed {computed} matches the claim")
                } else {
                    format!("claimed {} but computed {computed}", claim.claimed)
                },
            });
        }
    }
    VerdictReport::new(
        "ERRATA",
        CLAIMS.len() as u64,
        CLAIMS.len() as u64,
        violations,
        lines.join("; "),
    )
}

/// Claim ids the catalog expects to be discrepant.
pub fn expected_discrepancy_ids() -> Vec<&'static str> {
    CLAIMS
        .iter()
        .filter(|c| c.expect_discrepancy)
        .map(|c| c.id)
        .collect()
}
