//! Precision and recall of the packaged thresholds on the bundled
//! synthetic corpus, per refactoring type.

use std::collections::BTreeSet;
use std::path::Path;

use refdetect::calibration::{evaluate_corpus, Counts, load_corpus, load_manifest, MatchMode};
use refdetect::{RelationshipType, ThresholdConfig};

fn main() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus/synthetic/manifest.toml");
    let entries = load_manifest(&manifest).expect("manifest loads");
    let corpus = load_corpus(&entries);
    for f in &corpus.failures {
        eprintln!("skipped: {f}");
    }

    let supported: BTreeSet<_> = RelationshipType::REFACTORINGS.into_iter().collect();
    let report = evaluate_corpus(&corpus.pairs, &ThresholdConfig::packaged(), &supported, MatchMode::Strict);

    let ratio = |x: Option<f64>| x.map_or("n/a".to_string(), |v| format!("{v:.3}"));
    let row = |name: &str, c: &Counts| {
        println!(
            "{:<18} {:>3} {:>3} {:>3} {:>9} {:>7}",
            name,
            c.tp,
            c.fp,
            c.fn_,
            ratio(c.precision()),
            ratio(c.recall())
        )
    };
    println!("{:<18} {:>3} {:>3} {:>3} {:>9} {:>7}", "type", "TP", "FP", "FN", "precision", "recall");
    for (kind, c) in &report.per_type {
        row(kind.name(), c);
    }
    row("overall", &report.overall);
}
