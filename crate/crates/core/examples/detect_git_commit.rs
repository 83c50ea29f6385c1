//! Detects refactorings introduced by one commit, or by every commit in a
//! range.
//!
//!     cargo run --example detect_git_commit -- REPO [COMMIT | A..B]

use std::path::PathBuf;

use refdetect::{list_commits, load_commit_pair, AnalyzedPair, RepoError, ThresholdConfig};

fn main() -> Result<(), RepoError> {
    let mut args = std::env::args().skip(1);
    let repo = PathBuf::from(args.next().unwrap_or_else(|| ".".into()));
    let rev = args.next().unwrap_or_else(|| "HEAD".into());
    let commits = if rev.contains("..") { list_commits(&repo, &rev)? } else { vec![rev] };

    let config = ThresholdConfig::packaged();
    for commit in commits {
        let pair = match load_commit_pair(&repo, &commit) {
            Ok(p) => p,
            Err(RepoError::MergeCommitSkipped(sha)) => {
                println!("{sha}: merge commit, skipped");
                continue;
            }
            Err(e) => return Err(e),
        };
        let found = AnalyzedPair::new(&pair).refactorings(&config);
        println!("{}: {} files changed, {} refactorings", &pair.label[..12], pair.after_files.len(), found.len());
        for r in found {
            println!("    {:<18} {} -> {}", r.kind.name(), r.before, r.after);
        }
    }
    Ok(())
}
