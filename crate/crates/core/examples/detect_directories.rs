//! Detects refactorings between two source directories.
//!
//!     cargo run --example detect_directories [BEFORE_DIR AFTER_DIR]
//!
//! Without arguments, one of the bundled fixtures is used.

use std::path::PathBuf;

use refdetect::{load_directory_pair, AnalyzedPair, ThresholdConfig};

fn main() {
    let args: Vec<PathBuf> = std::env::args_os().skip(1).map(PathBuf::from).collect();
    let (before, after) = match args.as_slice() {
        [b, a] => (b.clone(), a.clone()),
        _ => {
            let fixture = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus/synthetic/extract-supertype-2");
            (fixture.join("before"), fixture.join("after"))
        }
    };
    let pair = match load_directory_pair(&before, &after) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    };
    println!("{} changed files before, {} after", pair.before_files.len(), pair.after_files.len());

    let analyzed = AnalyzedPair::new(&pair);
    for e in &analyzed.errors {
        eprintln!("warning: {e}");
    }
    for r in analyzed.refactorings(&ThresholdConfig::packaged()) {
        println!("{:<18} {} -> {} ({:.3})", r.kind.name(), r.before, r.after, r.similarity);
    }
}
