//! Sweeps thresholds over the bundled synthetic corpus and prints the
//! resulting configuration.

use std::path::Path;

use refdetect::calibration::{calibrate_all, default_grid, load_corpus, load_manifest, CalibrationOptions};
use refdetect::ThresholdConfig;

fn main() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus/synthetic/manifest.toml");
    let corpus = load_corpus(&load_manifest(&manifest).expect("manifest loads"));

    let calibration = calibrate_all(
        &corpus.pairs,
        &default_grid(),
        &ThresholdConfig::packaged(),
        CalibrationOptions::default(),
    )
    .expect("every type is covered");

    for t in &calibration.types {
        let chosen = t.chosen.map(|i| &t.sweep[i]);
        let f1 = chosen.map_or(0.0, |p| p.f1());
        println!(
            "{:<18} instances={:<2} τ={:.1} F1={f1:.3}",
            t.kind.name(),
            t.instances,
            calibration.config.get(t.kind)
        );
    }
    println!();
    print!("{}", calibration.config.to_file_string());
}
