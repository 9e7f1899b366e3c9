//! The verification harness: build a corpus, run every check, emit verdicts.
//!
//! Reports are deterministic for a fixed [`CorpusConfig`] regardless of the
//! worker count: the corpus is sorted, per-group work is independent, and
//! results are collected in corpus order.

mod checks;
mod corpus;
mod errata;
mod report;
mod sharpness;

pub use checks::{
    check_amiri_domination, check_extension_domination, check_nilpotency_cyc, check_nilpotency_sub,
    check_product_inequality, check_richards, check_solvable_sub, check_supersolvable_cyc,
    check_supersolvable_divisor_criterion, check_supersolvable_sub, prop_classifier_chain,
    prop_coprime_multiplicativity, prop_lagrange, prop_lattice_closure, prop_oracle_equivalence,
    prop_strong_domination_cyc, scan_conjecture, verify_eq31, verify_involution_lemma,
    verify_prime_inequalities, EQ31_PRODUCT_LIMIT, LEM28_Q_LIST, LEM29_Q_MAX,
};
pub use corpus::{build_corpus, Corpus, CorpusConfig, CorpusEntry};
pub use errata::{errata_report, expected_discrepancy_ids};
pub use report::{CheckStatus, VerdictReport, Violation};
pub use sharpness::{check_sharpness, sharpness_witness, WitnessKind};

use crate::invariants::InvariantError;

/// Run `f` inside a rayon pool of `jobs` threads (0 = all available).
pub fn with_worker_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("worker pool")
        .install(f)
}

/// The full theorem/lemma/sharpness/property suite over one corpus.
pub fn run_theorem_suite(corpus: &Corpus, cfg: &CorpusConfig) -> Vec<VerdictReport> {
    let caps = &cfg.caps;
    let mut reports = vec![
        checks::check_richards(corpus),
        checks::check_product_inequality(corpus),
        checks::check_amiri_domination(corpus),
        checks::check_extension_domination(corpus),
        checks::check_nilpotency_cyc(corpus),
        checks::check_nilpotency_sub(corpus),
        checks::check_supersolvable_divisor_criterion(corpus),
        checks::check_supersolvable_cyc(corpus),
        checks::check_supersolvable_sub(corpus),
        checks::check_solvable_sub(corpus),
        checks::verify_involution_lemma(checks::LEM28_Q_LIST, caps),
        checks::verify_prime_inequalities(checks::LEM29_Q_MAX),
        checks::verify_eq31(checks::EQ31_PRODUCT_LIMIT, caps),
    ];
    for kind in WitnessKind::ALL {
        reports.push(sharpness::check_sharpness(
            kind,
            cfg.witness_t_min,
            cfg.witness_t_max,
            caps,
        ));
    }
    reports.extend([
        checks::prop_oracle_equivalence(corpus),
        checks::prop_lagrange(corpus),
        checks::prop_lattice_closure(corpus),
        checks::prop_classifier_chain(corpus),
        checks::prop_strong_domination_cyc(corpus),
        checks::prop_coprime_multiplicativity(corpus, caps),
    ]);
    reports
}

/// Corpus build plus the whole suite, on `jobs` workers.
pub fn run_verification(
    cfg: &CorpusConfig,
    jobs: usize,
) -> Result<(Corpus, Vec<VerdictReport>), InvariantError> {
    with_worker_pool(jobs, || {
        let corpus = build_corpus(cfg)?;
        let reports = run_theorem_suite(&corpus, cfg);
        Ok((corpus, reports))
    })
}

/// Corpus build plus the conjecture scanner only.
pub fn run_conjecture_scan(
    cfg: &CorpusConfig,
    jobs: usize,
) -> Result<(Corpus, VerdictReport), InvariantError> {
    with_worker_pool(jobs, || {
        let corpus = build_corpus(cfg)?;
        let report = checks::scan_conjecture(&corpus);
        Ok((corpus, report))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinism_across_worker_counts() {
        let cfg = CorpusConfig::with_max_order(30);
        let (_, one) = run_verification(&cfg, 1).unwrap();
        let (_, four) = run_verification(&cfg, 4).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn suite_passes_at_order_60() {
        let cfg = CorpusConfig::with_max_order(60);
        let (corpus, reports) = run_verification(&cfg, 0).unwrap();
        assert!(corpus.build_issues.is_empty(), "{:?}", corpus.build_issues);
        for r in &reports {
            assert_ne!(
                r.status,
                CheckStatus::Fail,
                "{}: {:?}",
                r.check_id,
                r.violations.first()
            );
        }
        // sub-based theorem checks must actually fire at this size
        for id in [
            "THM-3.1", "THM-3.2", "THM-4.1", "THM-4.2", "THM-4.5", "THM-5.3",
        ] {
            let r = reports.iter().find(|r| r.check_id == id).unwrap();
            assert_eq!(
                r.status,
                CheckStatus::Pass,
                "{id} unexpectedly {:?}",
                r.status
            );
        }
    }
}
