//! Loading revision pairs from git commits or from two directories.
//!
//! Only `.java` files that were added, removed or edited between the two
//! revisions are loaded. Git access shells out to the `git` executable.

use std::collections::BTreeMap;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use thiserror::Error;
use walkdir::WalkDir;

use crate::source_model::SourceFile;

pub const SOURCE_EXTENSION: &str = "java";

#[derive(Debug, Error)]
pub enum RepoError {
    #[error("not a git repository: {0}")]
    RepoNotFound(PathBuf),
    #[error("unknown commit `{0}`")]
    UnknownCommit(String),
    #[error("commit {0} is a merge commit; merge commits are not analyzed")]
    MergeCommitSkipped(String),
    #[error("bad revision range `{0}`")]
    BadRange(String),
    #[error("path not found: {0}")]
    PathNotFound(PathBuf),
    #[error("git {args}: {message}")]
    Git { args: String, message: String },
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// Changed source files of two revisions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RevisionPair {
    pub label: String,
    pub before_files: Vec<SourceFile>,
    pub after_files: Vec<SourceFile>,
}

impl RevisionPair {
    pub fn is_empty(&self) -> bool {
        self.before_files.is_empty() && self.after_files.is_empty()
    }
}

fn is_source(path: &str) -> bool {
    Path::new(path)
        .extension()
        .is_some_and(|e| e == SOURCE_EXTENSION)
}

fn normalize_newlines(text: String) -> String {
    if text.contains('\r') {
        text.replace("\r\n", "\n").replace('\r', "\n")
    } else {
        text
    }
}

fn decode(bytes: Vec<u8>) -> String {
    let text = match String::from_utf8(bytes) {
        Ok(s) => s,
        Err(e) => String::from_utf8_lossy(e.as_bytes()).into_owned(),
    };
    normalize_newlines(text)
}

// ---------------------------------------------------------------------------
// directories

/// Files whose relative path exists on one side only or whose bytes differ.
pub fn load_directory_pair(dir_before: &Path, dir_after: &Path) -> Result<RevisionPair, RepoError> {
    let before = read_tree(dir_before)?;
    let after = read_tree(dir_after)?;
    let mut before_files = Vec::new();
    let mut after_files = Vec::new();
    for (path, bytes) in &before {
        if after.get(path) != Some(bytes) {
            before_files.push(SourceFile::new(path.clone(), decode(bytes.clone())));
        }
    }
    for (path, bytes) in &after {
        if before.get(path) != Some(bytes) {
            after_files.push(SourceFile::new(path.clone(), decode(bytes.clone())));
        }
    }
    Ok(RevisionPair {
        label: format!("{}..{}", dir_label(dir_before), dir_label(dir_after)),
        before_files,
        after_files,
    })
}

fn dir_label(dir: &Path) -> String {
    dir.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| dir.display().to_string())
}

fn read_tree(root: &Path) -> Result<BTreeMap<String, Vec<u8>>, RepoError> {
    if !root.is_dir() {
        return Err(RepoError::PathNotFound(root.to_path_buf()));
    }
    let mut files = BTreeMap::new();
    for entry in WalkDir::new(root).sort_by_file_name() {
        let entry = entry.map_err(|e| RepoError::Io {
            path: root.to_path_buf(),
            source: e.into(),
        })?;
        if !entry.file_type().is_file() {
            continue;
        }
        let rel = entry
            .path()
            .strip_prefix(root)
            .expect("walkdir yields paths under root")
            .components()
            .map(|c| c.as_os_str().to_string_lossy())
            .collect::<Vec<_>>()
            .join("/");
        if !is_source(&rel) {
            continue;
        }
        let bytes = std::fs::read(entry.path()).map_err(|source| RepoError::Io {
            path: entry.path().to_path_buf(),
            source,
        })?;
        files.insert(rel, bytes);
    }
    Ok(files)
}

// ---------------------------------------------------------------------------
// git

fn git(repo: &Path, args: &[&str]) -> Result<Vec<u8>, RepoError> {
    let output = Command::new("git")
        .arg("-C")
        .arg(repo)
        .args(args)
        .output()
        .map_err(|source| RepoError::Io {
            path: PathBuf::from("git"),
            source,
        })?;
    if output.status.success() {
        Ok(output.stdout)
    } else {
        Err(RepoError::Git {
            args: args.join(" "),
            message: String::from_utf8_lossy(&output.stderr).trim().to_string(),
        })
    }
}

fn git_text(repo: &Path, args: &[&str]) -> Result<String, RepoError> {
    Ok(String::from_utf8_lossy(&git(repo, args)?).into_owned())
}

fn ensure_repo(repo: &Path) -> Result<(), RepoError> {
    if !repo.is_dir() {
        return Err(RepoError::RepoNotFound(repo.to_path_buf()));
    }
    git(repo, &["rev-parse", "--git-dir"])
        .map(|_| ())
        .map_err(|_| RepoError::RepoNotFound(repo.to_path_buf()))
}

fn resolve_commit(repo: &Path, commit: &str) -> Result<String, RepoError> {
    if commit.starts_with('-') {
        return Err(RepoError::UnknownCommit(commit.to_string()));
    }
    let spec = format!("{commit}^{{commit}}");
    git_text(repo, &["rev-parse", "--verify", "--quiet", &spec])
        .map(|s| s.trim().to_string())
        .map_err(|_| RepoError::UnknownCommit(commit.to_string()))
}

/// Before side from the parent tree, after side from the commit tree,
/// restricted to source files whose blob changed. A root commit has an
/// empty before side.
pub fn load_commit_pair(repo: &Path, commit: &str) -> Result<RevisionPair, RepoError> {
    ensure_repo(repo)?;
    let sha = resolve_commit(repo, commit)?;
    let line = git_text(repo, &["rev-list", "--parents", "-n", "1", &sha])?;
    let mut ids = line.split_whitespace().skip(1);
    let parent = ids.next().map(str::to_string);
    if ids.next().is_some() {
        return Err(RepoError::MergeCommitSkipped(sha));
    }

    let mut args = vec!["diff-tree", "-r", "-z", "--no-renames", "--name-only"];
    match &parent {
        Some(p) => args.push(p),
        None => args.push("--root"),
    }
    args.push(&sha);
    let raw = git(repo, &args)?;
    let mut paths: Vec<String> = raw
        .split(|&b| b == 0)
        .filter(|p| !p.is_empty())
        .map(|p| String::from_utf8_lossy(p).into_owned())
        .filter(|p| is_source(p))
        .collect();
    paths.sort();
    paths.dedup();

    let before_files = match &parent {
        Some(p) => read_blobs(repo, p, &paths)?,
        None => Vec::new(),
    };
    let after_files = read_blobs(repo, &sha, &paths)?;
    Ok(RevisionPair {
        label: sha,
        before_files,
        after_files,
    })
}

/// Reads `rev:path` for each path with one `git cat-file --batch` process.
/// Missing paths (added/removed files) are left out.
fn read_blobs(repo: &Path, rev: &str, paths: &[String]) -> Result<Vec<SourceFile>, RepoError> {
    if paths.is_empty() {
        return Ok(Vec::new());
    }
    let io_err = |source| RepoError::Io {
        path: PathBuf::from("git cat-file"),
        source,
    };
    let mut child = Command::new("git")
        .arg("-C")
        .arg(repo)
        .args(["cat-file", "--batch"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .map_err(io_err)?;
    let mut requests = String::new();
    for p in paths {
        requests.push_str(rev);
        requests.push(':');
        requests.push_str(p);
        requests.push('\n');
    }
    let mut stdin = child.stdin.take().expect("piped stdin");
    let writer = std::thread::spawn(move || stdin.write_all(requests.as_bytes()));

    let mut reader = BufReader::new(child.stdout.take().expect("piped stdout"));
    let mut files = Vec::new();
    for p in paths {
        let mut header = String::new();
        reader.read_line(&mut header).map_err(io_err)?;
        let header = header.trim_end();
        if header.ends_with(" missing") || header.ends_with(" ambiguous") {
            continue;
        }
        let size: usize = header
            .rsplit(' ')
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| RepoError::Git {
                args: "cat-file --batch".into(),
                message: format!("unexpected header `{header}`"),
            })?;
        let mut content = vec![0u8; size + 1];
        reader.read_exact(&mut content).map_err(io_err)?;
        content.pop();
        files.push(SourceFile::new(p.clone(), decode(content)));
    }
    writer
        .join()
        .expect("writer thread")
        .map_err(io_err)?;
    child.wait().map_err(io_err)?;
    Ok(files)
}

/// Non-merge commits in `range` (any `git rev-list` range expression),
/// oldest first.
pub fn list_commits(repo: &Path, range: &str) -> Result<Vec<String>, RepoError> {
    ensure_repo(repo)?;
    if range.trim().is_empty() || range.starts_with('-') {
        return Err(RepoError::BadRange(range.to_string()));
    }
    let out = git_text(
        repo,
        &["rev-list", "--reverse", "--topo-order", "--no-merges", range, "--"],
    )
    .map_err(|_| RepoError::BadRange(range.to_string()))?;
    Ok(out.lines().map(str::to_string).collect())
}
