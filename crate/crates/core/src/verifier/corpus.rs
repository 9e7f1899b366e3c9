//! Corpus assembly: a deterministic, bounded, enumerated-by-construction
//! collection of groups with their invariant records.

use crate::constructors::{self, group_from_spec, load_group_file, SemidirectSpec};
use crate::group::{all_subgroups, Caps, Group, SubgroupLattice};
use crate::invariants::{invariant_record, InvariantError, InvariantRecord, OrderSequence};
use rayon::prelude::*;
use std::path::PathBuf;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct CorpusConfig {
    /// Order bound for enumerated families (explicit spec_list and ingested
    /// groups bypass it).
    pub max_order: u64,
    /// Lattices (hence sub counts) are computed only up to this order.
    pub sub_max_order: u64,
    /// Squarefree enumeration runs over squarefree n up to this bound.
    pub squarefree_max: u64,
    pub include_squarefree: bool,
    /// Extra groups by spec string, e.g. `"PSL(2,13)"`.
    pub spec_list: Vec<String>,
    /// Generator files to ingest.
    pub ingest_paths: Vec<PathBuf>,
    /// Sharpness witnesses are built for t in this range.
    pub witness_t_min: u32,
    pub witness_t_max: u32,
    pub caps: Caps,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            max_order: 660,
            sub_max_order: 500,
            squarefree_max: 300,
            include_squarefree: true,
            spec_list: vec!["PSL(2,13)".to_string()],
            ingest_paths: Vec::new(),
            witness_t_min: 2,
            witness_t_max: 4,
            caps: Caps::default(),
        }
    }
}

impl CorpusConfig {
    /// Scale the default corpus to a smaller order bound.
    pub fn with_max_order(max_order: u64) -> Self {
        let mut cfg = CorpusConfig::default();
        cfg.max_order = max_order;
        cfg.sub_max_order = cfg.sub_max_order.min(max_order);
        cfg.squarefree_max = cfg.squarefree_max.min(max_order);
        if max_order < 660 {
            cfg.spec_list.clear();
        }
        cfg
    }
}

/// One corpus member: the group, its semidirect parameters when it was built
/// as `Z_a ⋊ Z_b`, its record, and cached derived data for the checks.
pub struct CorpusEntry {
    pub group: Arc<Group>,
    pub semidirect: Option<SemidirectSpec>,
    pub record: InvariantRecord,
    pub order_sequence: OrderSequence,
    pub lattice: Option<SubgroupLattice>,
}

pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
    /// Per-group construction problems, collected rather than fatal.
    pub build_issues: Vec<String>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn builtin_families(
    cfg: &CorpusConfig,
    issues: &mut Vec<String>,
) -> Vec<(Group, Option<SemidirectSpec>)> {
    let caps = &cfg.caps;
    let max = cfg.max_order;
    let mut out: Vec<(Group, Option<SemidirectSpec>)> = Vec::new();
    let mut push = |result: Result<Group, constructors::ConstructError>,
                    sd: Option<SemidirectSpec>,
                    issues: &mut Vec<String>| {
        match result {
            Ok(g) => {
                if g.order() as u64 <= max {
                    out.push((g, sd));
                }
            }
            Err(e) => issues.push(format!("builtin family: {e}")),
        }
    };

    for n in 2..=60.min(max) {
        push(constructors::cyclic(n, caps), None, issues);
    }
    for n in 3..=6u64 {
        push(constructors::symmetric(n, caps), None, issues);
        push(constructors::alternating(n, caps), None, issues);
    }
    for n in 3..=15u64 {
        push(constructors::dihedral(n, caps), None, issues);
    }
    for m in [8u64, 16, 32, 64] {
        push(constructors::generalized_quaternion(m, caps), None, issues);
    }
    for q in [3u64, 4, 5, 7, 8, 9, 11, 13] {
        let half = if q % 2 == 0 { 1 } else { 2 };
        if q * (q * q - 1) / half <= max {
            push(constructors::psl2(q, caps), None, issues);
        }
    }
    // Semidirect samples: two coprime Frobenius-type actions and one
    // non-coprime case so the coprimality filter is exercised.
    for (a, b, r) in [(7u64, 3, 2), (5, 4, 2), (9, 6, 2)] {
        match SemidirectSpec::new(a, b, r) {
            Ok(spec) => push(
                constructors::semidirect_cyclic(&spec, caps),
                Some(spec),
                issues,
            ),
            Err(e) => issues.push(format!("semidirect sample: {e}")),
        }
    }
    out
}

/// Assemble the corpus in deterministic (order, name) order and compute a
/// record per entry, in parallel across groups.
pub fn build_corpus(cfg: &CorpusConfig) -> Result<Corpus, InvariantError> {
    let mut issues: Vec<String> = Vec::new();
    let mut raw: Vec<(Group, Option<SemidirectSpec>)> = Vec::new();

    for spec in &cfg.spec_list {
        match group_from_spec(spec, &cfg.caps) {
            Ok(g) => raw.push((g, None)),
            Err(e) => issues.push(format!("spec '{spec}': {e}")),
        }
    }
    for path in &cfg.ingest_paths {
        match load_group_file(path, &cfg.caps) {
            Ok(g) => raw.push((g, None)),
            Err(e) => issues.push(format!("ingest '{}': {e}", path.display())),
        }
    }
    if cfg.include_squarefree {
        for n in 1..=cfg.squarefree_max.min(cfg.max_order) {
            if !crate::numtheory::is_squarefree(n) {
                continue;
            }
            match constructors::squarefree_groups_with_specs(n, &cfg.caps) {
                Ok(groups) => raw.extend(groups.into_iter().map(|(spec, g)| (g, Some(spec)))),
                Err(e) => issues.push(format!("squarefree order {n}: {e}")),
            }
        }
    }
    raw.extend(builtin_families(cfg, &mut issues));

    raw.sort_by(|(a, _), (b, _)| {
        (a.order(), a.name().to_string()).cmp(&(b.order(), b.name().to_string()))
    });
    raw.dedup_by(|(a, _), (b, _)| a.order() == b.order() && a.name() == b.name());

    let lattice_limit = cfg.sub_max_order.min(cfg.caps.lattice as u64);
    let entries: Result<Vec<CorpusEntry>, InvariantError> = raw
        .into_par_iter()
        .map(|(group, semidirect)| {
            let with_lattice = (group.order() as u64) <= lattice_limit;
            let record = invariant_record(&group, &cfg.caps, with_lattice)?;
            let lattice = if with_lattice {
                all_subgroups(&group, &cfg.caps).ok()
            } else {
                None
            };
            let order_sequence = OrderSequence::of(&group);
            Ok(CorpusEntry {
                group: Arc::new(group),
                semidirect,
                record,
                order_sequence,
                lattice,
            })
        })
        .collect();

    Ok(Corpus {
        entries: entries?,
        build_issues: issues,
    })
}
