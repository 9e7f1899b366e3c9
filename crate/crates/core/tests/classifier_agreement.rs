//! Supersolvability agreement over a whole corpus: Huppert's
//! maximal-subgroup criterion must match the independent normal-series
//! peeling test on every group of order up to 200.

use group_census::group::{is_supersolvable_by_cyclic_series, is_supersolvable_with_lattice};
use group_census::verifier::{build_corpus, CorpusConfig};

#[test]
fn huppert_matches_peeling_up_to_order_200() {
    let cfg = CorpusConfig::with_max_order(200);
    let corpus = build_corpus(&cfg).unwrap();
    assert!(
        corpus.len() > 200,
        "corpus should be substantial, got {}",
        corpus.len()
    );
    let mut checked = 0;
    for e in &corpus.entries {
        let Some(lattice) = &e.lattice else { continue };
        let huppert = is_supersolvable_with_lattice(&e.group, lattice);
        let peeled = is_supersolvable_by_cyclic_series(&e.group);
        assert_eq!(
            huppert, peeled,
            "{} (order {})",
            e.record.name, e.record.order
        );
        assert_eq!(e.record.supersolvable, Some(huppert));
        checked += 1;
    }
    assert_eq!(
        checked,
        corpus.len(),
        "every group of order <= 200 has a lattice"
    );
}
