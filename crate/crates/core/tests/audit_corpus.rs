use std::time::Instant;

use graded_core::audit::{self, AuditOptions, AuditStatus, Theorem};

#[test]
fn every_audit_passes_on_the_default_corpus() {
    let corpus = audit::default_corpus();
    let opts = AuditOptions::default();
    let start = Instant::now();
    let results = audit::audit_many(&corpus, &Theorem::ALL, &opts).unwrap();
    for r in &results {
        println!(
            "{:<20} checked {:>5} skipped {:>5} {:?} {:?}",
            r.theorem.id(),
            r.checked,
            r.skipped,
            r.status,
            r.notes
        );
    }
    println!("elapsed {:?}", start.elapsed());
    for r in &results {
        if let AuditStatus::Counterexample(c) = &r.status {
            let ring = &corpus.iter().find(|x| x.name == c.ring).unwrap().ring;
            assert!(audit::replay_counterexample(ring, r.theorem, c, &opts).unwrap());
        }
        assert!(r.passed(), "{} failed: {:?}", r.theorem, r.status);
        assert!(r.checked > 0, "{} checked nothing", r.theorem);
    }
}
