use compact_span_cli::experiment::{run_suite, ExperimentRecord, SuiteConfig};
use compact_span::ExtractionOptions;

fn ba(attach: usize) -> Vec<ExperimentRecord> {
    let config = SuiteConfig {
        n_min: 20,
        n_max: 60,
        attach_min: attach,
        attach_max: attach,
        extraction: ExtractionOptions::fast(),
        ..SuiteConfig::ba(30, 5)
    };
    run_suite(&config).unwrap()
}

fn mean_gap(rows: &[ExperimentRecord]) -> f64 {
    rows.iter().map(|r| r.c_lcst.unwrap() - r.c_mcst.unwrap()).sum::<f64>() / rows.len() as f64
}

#[test]
fn er_suite_orders_mcst_below_lcst() {
    let rows = run_suite(&SuiteConfig { extraction: ExtractionOptions::fast(), ..SuiteConfig::er(30, 2) }).unwrap();
    assert_eq!(rows.len(), 30);
    for r in &rows {
        assert!(r.is_ok(), "{}", r.error);
        assert!(r.c_mcst.unwrap() <= r.c_lcst.unwrap());
    }
}

/// With one attachment edge per vertex a BA graph is already a tree, so
/// every extracted tree is the graph itself and the gap is zero. Denser BA
/// graphs leave room between the two extremes, and the gap grows with the
/// attachment count rather than shrinking.
#[test]
fn ba_gap_by_attachment_count() {
    let (one, two, three) = (ba(1), ba(2), ba(3));
    assert!(one.iter().all(|r| r.c_graph == r.c_mcst && r.c_mcst == r.c_lcst));
    assert!(two.iter().all(|r| r.c_lcst.unwrap() > r.c_mcst.unwrap()));
    let gaps = [mean_gap(&one), mean_gap(&two), mean_gap(&three)];
    println!("mean LCST-MCST gap by attachment count 1..=3: {gaps:?}");
    assert_eq!(gaps[0], 0.0);
    assert!(gaps[1] > 0.0 && gaps[2] > 0.0);
}
