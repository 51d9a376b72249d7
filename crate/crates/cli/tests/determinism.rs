use berge_forge::verify::Verifier;
use berge_forge_core::search::SearchConfig;

/// Reports without their timings.
fn outcomes(seed: u64, ids: &[u8], config: SearchConfig) -> Vec<(u8, bool, String)> {
    let mut v = Verifier::new(seed).with_config(config);
    ids.iter()
        .map(|&id| {
            let r = v.run(id);
            (r.criterion, r.passed, r.detail)
        })
        .collect()
}

#[test]
fn same_seed_same_reports() {
    let ids = [3, 4, 6, 7];
    let a = outcomes(11, &ids, SearchConfig::default());
    let b = outcomes(11, &ids, SearchConfig::default());
    assert_eq!(a, b);
    assert!(a.iter().all(|r| r.1), "{a:?}");
    let c = outcomes(12, &ids, SearchConfig::default());
    assert_ne!(a, c);
}

#[test]
fn search_criteria_do_not_depend_on_threads() {
    let ids = [5, 9];
    let one = outcomes(0, &ids, SearchConfig::default());
    let four = outcomes(0, &ids, SearchConfig { threads: 4, split_depth: 4, ..SearchConfig::default() });
    assert_eq!(one, four);
}
