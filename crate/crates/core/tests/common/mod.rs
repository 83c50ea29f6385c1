#![allow(dead_code)]

pub mod planted;

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;
use std::process::Command;

use refdetect::engine::{resolve_conflicts, CandidateTriple};
use refdetect::RelationshipType;
use refdetect::source_model::{EntityId, TokenMultiset};

// ---------------------------------------------------------------------------
// brute-force similarity, written directly from the definitions

/// idf(t) = log10(1 + N / n_t) over every multiset in `corpus`.
pub fn bf_idf(corpus: &[&TokenMultiset]) -> BTreeMap<String, f64> {
    let n = corpus.len() as f64;
    let mut df: BTreeMap<String, usize> = BTreeMap::new();
    for e in corpus {
        for (t, _) in e.iter() {
            *df.entry(t.to_string()).or_default() += 1;
        }
    }
    df.into_iter()
        .map(|(t, d)| (t, (1.0 + n / d as f64).log10()))
        .collect()
}

fn bf_weight(e: &TokenMultiset, t: &str, idf: &BTreeMap<String, f64>) -> f64 {
    e.count(t) as f64 * idf.get(t).copied().unwrap_or(0.0)
}

fn union_tokens(a: &TokenMultiset, b: &TokenMultiset) -> BTreeSet<String> {
    a.iter().chain(b.iter()).map(|(t, _)| t.to_string()).collect()
}

pub fn bf_sim(a: &TokenMultiset, b: &TokenMultiset, idf: &BTreeMap<String, f64>) -> f64 {
    let (mut num, mut den) = (0.0, 0.0);
    for t in union_tokens(a, b) {
        let (wa, wb) = (bf_weight(a, &t, idf), bf_weight(b, &t, idf));
        num += wa.min(wb);
        den += wa.max(wb);
    }
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}

/// `None` when `a` carries no weight.
pub fn bf_sim_u(a: &TokenMultiset, b: &TokenMultiset, idf: &BTreeMap<String, f64>) -> Option<f64> {
    let (mut num, mut den) = (0.0, 0.0);
    for t in union_tokens(a, b) {
        let (wa, wb) = (bf_weight(a, &t, idf), bf_weight(b, &t, idf));
        num += wa.min(wb);
        den += wa;
    }
    (den > 0.0).then(|| num / den)
}

// ---------------------------------------------------------------------------
// conflict resolution reference

/// Checks the partial-matching invariant and greedy maximality of `accepted`
/// against the full candidate list.
pub fn check_partial_matching(candidates: &[CandidateTriple], accepted: &[(EntityId, EntityId, f64)]) -> Result<(), String> {
    let mut befores = BTreeSet::new();
    let mut afters = BTreeSet::new();
    for (b, a, _) in accepted {
        if !befores.insert(b.clone()) {
            return Err(format!("{b} matched twice"));
        }
        if !afters.insert(a.clone()) {
            return Err(format!("{a} matched twice"));
        }
    }
    for (b, a, s) in accepted {
        if !candidates.iter().any(|c| &c.before == b && &c.after == a && c.score == *s) {
            return Err(format!("accepted ({b}, {a}, {s}) is not a candidate"));
        }
    }
    // Every rejected candidate is blocked by an accepted one that comes no
    // later in candidate order.
    for c in candidates {
        let taken = accepted.iter().any(|(b, a, _)| *b == c.before && *a == c.after);
        if taken {
            continue;
        }
        let blocked = accepted.iter().any(|(b, a, s)| {
            (*b == c.before || *a == c.after)
                && precedes((b, a, *s), (&c.before, &c.after, c.score))
        });
        if !blocked {
            return Err(format!("({}, {}, {}) was rejected without a better conflicting match", c.before, c.after, c.score));
        }
    }
    Ok(())
}

/// Candidate order: higher score first, then before id, then after id.
fn precedes(x: (&EntityId, &EntityId, f64), y: (&EntityId, &EntityId, f64)) -> bool {
    x.2 > y.2 || (x.2 == y.2 && (x.0, x.1) <= (y.0, y.1))
}

/// Builds candidates from `(before, after, score/10)` triples (duplicate
/// pairs dropped), resolves them and checks the partial-matching invariant
/// and independence from input order.
pub fn check_candidate_set(raw: &[(usize, usize, u32)]) -> Result<(), String> {
    let mut seen = BTreeSet::new();
    let cands: Vec<CandidateTriple> = raw
        .iter()
        .filter(|(b, a, _)| seen.insert((*b, *a)))
        .map(|&(b, a, s)| {
            CandidateTriple::new(
                EntityId::method("B", &format!("m{b}"), &[]),
                EntityId::method("A", &format!("m{a}"), &[]),
                f64::from(s) / 10.0,
            )
        })
        .collect();
    let first = resolve_conflicts(RelationshipType::MoveMethod, cands.clone());
    let accepted: Vec<_> = first.iter().map(|r| (r.before.clone(), r.after.clone(), r.similarity)).collect();
    check_partial_matching(&cands, &accepted)?;
    let mut reversed = cands.clone();
    reversed.reverse();
    let mut rotated = cands.clone();
    if !rotated.is_empty() {
        let k = raw.len() / 2 % rotated.len();
        rotated.rotate_left(k);
    }
    for other in [reversed, rotated] {
        if resolve_conflicts(RelationshipType::MoveMethod, other) != first {
            return Err("result depends on candidate order".into());
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// files, git, cli

pub fn write_tree(root: &Path, files: &[(&str, &str)]) {
    for (rel, text) in files {
        let p = root.join(rel);
        fs::create_dir_all(p.parent().unwrap()).unwrap();
        fs::write(p, text).unwrap();
    }
}

pub fn git(dir: &Path, args: &[&str]) -> String {
    let out = Command::new("git")
        .arg("-C")
        .arg(dir)
        .args(["-c", "user.name=Fixture", "-c", "user.email=fixture@example.com", "-c", "commit.gpgsign=false"])
        .args(args)
        .env("GIT_AUTHOR_DATE", "2024-01-01T00:00:00Z")
        .env("GIT_COMMITTER_DATE", "2024-01-01T00:00:00Z")
        .output()
        .expect("git runs");
    assert!(
        out.status.success(),
        "git {args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap().trim().to_string()
}

pub fn init_repo(dir: &Path) {
    git(dir, &["init", "-q", "-b", "main"]);
}

/// Stages everything and commits; returns the new commit id.
pub fn commit_all(dir: &Path, message: &str) -> String {
    git(dir, &["add", "-A"]);
    git(dir, &["commit", "-q", "--allow-empty", "-m", message]);
    git(dir, &["rev-parse", "HEAD"])
}

pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_cli(args: &[&str]) -> CliOutput {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("refdetect").chain(args.iter().copied());
    let code = refdetect::cli::run(argv, &mut out, &mut err);
    CliOutput {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

pub fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

// ---------------------------------------------------------------------------
// generated code base

/// Source of one generated class with `methods` methods of ~8 lines each.
pub fn generated_class(pkg: &str, name: &str, methods: usize, seed: usize) -> String {
    let mut s = format!("package {pkg};\n\nimport java.util.ArrayList;\nimport java.util.List;\n\npublic class {name} {{\n");
    s.push_str(&format!("    private final List<Integer> values = new ArrayList<>();\n    private int total{seed};\n    private String label = \"{name}\";\n\n"));
    for m in 0..methods {
        let k = seed * 31 + m * 7;
        s.push_str(&format!(
            "    public int compute{m}(int x, int y) {{\n\
             \x20       int acc = x * {a} + y;\n\
             \x20       for (int i = 0; i < {b}; i++) {{\n\
             \x20           acc += values.size() > i ? values.get(i) : i % {c};\n\
             \x20       }}\n\
             \x20       total{seed} += acc;\n\
             \x20       label = label + \"-{m}\";\n\
             \x20       return acc - {d};\n\
             \x20   }}\n\n",
            a = k % 13 + 1,
            b = k % 11 + 2,
            c = k % 5 + 2,
            d = k % 17,
        ));
    }
    s.push_str("}\n");
    s
}

/// Count of source lines in `text`.
pub fn loc(text: &str) -> usize {
    text.lines().filter(|l| !l.trim().is_empty()).count()
}

// ---------------------------------------------------------------------------
// similarity properties

/// Compares the library's `sim`/`sim_u` with the brute-force definitions on
/// one case and checks symmetry, reflexivity, bounds and subset saturation.
/// `extra` are further corpus entities that only influence idf.
pub fn check_similarity_case(a: &TokenMultiset, b: &TokenMultiset, extra: &[TokenMultiset]) -> Result<(), String> {
    use refdetect::similarity::{sim, sim_u, WeightIndex};

    let mut corpus: Vec<&TokenMultiset> = vec![a, b];
    corpus.extend(extra.iter());
    let index = WeightIndex::build(corpus.iter().copied()).map_err(|e| e.to_string())?;
    let idf = bf_idf(&corpus);

    let s_ab = sim(a, b, &index).value();
    let s_ba = sim(b, a, &index).value();
    let expected = bf_sim(a, b, &idf);
    if (s_ab - expected).abs() > 1e-12 {
        return Err(format!("sim {s_ab} != brute force {expected}"));
    }
    if (s_ab - s_ba).abs() > 1e-15 {
        return Err(format!("sim not symmetric: {s_ab} vs {s_ba}"));
    }
    if !(0.0..=1.0).contains(&s_ab) {
        return Err(format!("sim {s_ab} out of [0,1]"));
    }
    for (x, y) in [(a, b), (b, a)] {
        match (sim_u(x, y, &index), bf_sim_u(x, y, &idf)) {
            (Ok(s), Some(e)) => {
                let s = s.value();
                if (s - e).abs() > 1e-12 {
                    return Err(format!("sim_u {s} != brute force {e}"));
                }
                if !(0.0..=1.0).contains(&s) {
                    return Err(format!("sim_u {s} out of [0,1]"));
                }
                if x.is_subset_of(y) && (s - 1.0).abs() > 1e-12 {
                    return Err(format!("subset sim_u is {s}, not 1"));
                }
            }
            (Err(_), None) => {}
            (got, want) => return Err(format!("sim_u definedness differs: {got:?} vs {want:?}")),
        }
    }
    for x in [a, b] {
        let self_sim = sim(x, x, &index).value();
        let want = if x.is_empty() { 0.0 } else { 1.0 };
        if (self_sim - want).abs() > 1e-12 {
            return Err(format!("sim(x, x) = {self_sim}"));
        }
    }
    Ok(())
}

/// Multiset over the alphabet `t0..t9` from per-token multiplicities.
pub fn multiset(counts: &[u32]) -> TokenMultiset {
    TokenMultiset::from_counts(counts.iter().enumerate().map(|(i, &c)| (format!("t{i}"), c)))
}
