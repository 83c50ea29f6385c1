//! Source model: parses the files of one revision into types, methods and
//! fields with their token multisets and outgoing references.

mod java;
pub mod lexer;
mod model;
mod multiset;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use thiserror::Error;

pub use model::{
    CallDescriptor, CodeEntity, CodeModel, EntityId, EntityIdx, EntityKind, TypeFlavor,
};
pub use multiset::TokenMultiset;

use model::FieldRef;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{path}:{line}: {reason}")]
pub struct ParseError {
    pub path: String,
    pub line: u32,
    pub reason: String,
}

impl ParseError {
    pub fn new(path: &str, line: u32, reason: impl Into<String>) -> Self {
        ParseError {
            path: path.to_string(),
            line,
            reason: reason.into(),
        }
    }
}

/// One source file of a revision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceFile {
    pub path: String,
    pub text: String,
}

impl SourceFile {
    pub fn new(path: impl Into<String>, text: impl Into<String>) -> Self {
        SourceFile {
            path: path.into(),
            text: text.into(),
        }
    }
}

/// Result of parsing a revision. Files that failed to parse contribute no
/// entities and are listed in `errors`.
#[derive(Debug, Clone)]
pub struct ParsedSources {
    pub model: CodeModel,
    pub errors: Vec<ParseError>,
}

/// Tokenizes a body: identifiers, keywords, literals and operators.
pub fn tokenize_body(body_text: &str) -> TokenMultiset {
    tokenize_body_with_diagnostics(body_text).0
}

/// Like [`tokenize_body`], also returning how many characters were skipped.
pub fn tokenize_body_with_diagnostics(body_text: &str) -> (TokenMultiset, usize) {
    let lexed = lexer::lex(body_text);
    (TokenMultiset::from_tokens(&lexed.tokens), lexed.skipped)
}

/// Parses a set of files into one model, then gives every field its
/// virtual body and every method its resolved field accesses.
pub fn parse_source_set(files: &[SourceFile], revision_label: &str) -> ParsedSources {
    let mut results: Vec<(usize, Result<Vec<CodeEntity>, ParseError>)> = files
        .par_iter()
        .enumerate()
        .map(|(i, f)| (i, java::parse_file(&f.path, &f.text)))
        .collect();
    results.sort_by_key(|(i, _)| *i);

    let mut entities = Vec::new();
    let mut errors = Vec::new();
    for (_, r) in results {
        match r {
            Ok(es) => entities.extend(es),
            Err(e) => errors.push(e),
        }
    }
    let (mut model, dups) = CodeModel::new(revision_label, entities);
    for d in dups {
        errors.push(ParseError::new(
            &d.source_file,
            d.line,
            format!("duplicate declaration of {}", d.id.descriptor()),
        ));
    }
    resolve_field_accesses(&mut model);
    errors.sort_by(|a, b| (&a.path, a.line).cmp(&(&b.path, b.line)));
    ParsedSources { model, errors }
}

/// Tokens of every statement, anywhere in `model`, that reads or writes
/// `field`. Each accessing statement contributes its multiset once.
pub fn build_field_virtual_body(field: &CodeEntity, model: &CodeModel) -> TokenMultiset {
    let mut body = TokenMultiset::new();
    let Some(field_idx) = model.index_of(&field.id) else {
        return body;
    };
    let resolver = FieldResolver::new(model);
    for (m_idx, method) in model.of_kind(EntityKind::Method) {
        let Some(stmts) = method.body.as_ref().map(|b| &b.statements) else {
            continue;
        };
        let owner = model.container_of(m_idx);
        for stmt in stmts {
            if resolver.accessed_fields(owner, &stmt.refs).contains(&field_idx) {
                body.add(&stmt.tokens);
            }
        }
    }
    body
}

fn resolve_field_accesses(model: &mut CodeModel) {
    let resolver = FieldResolver::new(model);
    let mut bodies: BTreeMap<EntityIdx, TokenMultiset> = BTreeMap::new();
    let mut accesses: BTreeMap<EntityIdx, BTreeSet<String>> = BTreeMap::new();
    for (m_idx, method) in model.of_kind(EntityKind::Method) {
        let Some(stmts) = method.body.as_ref().map(|b| &b.statements) else {
            continue;
        };
        let owner = model.container_of(m_idx);
        for stmt in stmts {
            for f in resolver.accessed_fields(owner, &stmt.refs) {
                bodies.entry(f).or_default().add(&stmt.tokens);
                accesses
                    .entry(m_idx)
                    .or_default()
                    .insert(model.entity(f).name.clone());
            }
        }
    }
    let entities = model.entities_mut();
    for (idx, body) in bodies {
        entities[idx].tokens = body;
    }
    for (idx, names) in accesses {
        entities[idx].field_accesses = names;
    }
}

struct FieldResolver<'m> {
    model: &'m CodeModel,
    /// field name -> all fields with that name
    by_name: HashMap<&'m str, Vec<EntityIdx>>,
    /// type -> its own fields by name
    declared: HashMap<EntityIdx, HashMap<&'m str, EntityIdx>>,
}

impl<'m> FieldResolver<'m> {
    fn new(model: &'m CodeModel) -> Self {
        let mut by_name: HashMap<&str, Vec<EntityIdx>> = HashMap::new();
        let mut declared: HashMap<EntityIdx, HashMap<&str, EntityIdx>> = HashMap::new();
        for (f_idx, f) in model.of_kind(EntityKind::Field) {
            by_name.entry(f.name.as_str()).or_default().push(f_idx);
            if let Some(t) = model.container_of(f_idx) {
                declared.entry(t).or_default().insert(f.name.as_str(), f_idx);
            }
        }
        FieldResolver {
            model,
            by_name,
            declared,
        }
    }

    /// Nearest declaration of `name` visible from `ty`: the type itself,
    /// then its supertypes breadth-first.
    fn resolve(&self, ty: EntityIdx, name: &str) -> Option<EntityIdx> {
        let mut queue = std::collections::VecDeque::from([ty]);
        let mut seen = BTreeSet::from([ty]);
        while let Some(t) = queue.pop_front() {
            if let Some(&f) = self.declared.get(&t).and_then(|d| d.get(name)) {
                return Some(f);
            }
            for sup in &self.model.entity(t).supertypes {
                for &s in self.model.types_named(sup) {
                    if seen.insert(s) {
                        queue.push_back(s);
                    }
                }
            }
        }
        None
    }

    fn accessed_fields(&self, owner: Option<EntityIdx>, refs: &[FieldRef]) -> BTreeSet<EntityIdx> {
        let mut out = BTreeSet::new();
        for r in refs {
            match r {
                FieldRef::Bare(name) | FieldRef::This(name) => {
                    if let Some(f) = owner.and_then(|t| self.resolve(t, name)) {
                        out.insert(f);
                    }
                }
                FieldRef::Qualified(name) => {
                    if let Some(fs) = self.by_name.get(name.as_str()) {
                        out.extend(fs.iter().copied());
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(path: &str, text: &str) -> ParsedSources {
        parse_source_set(&[SourceFile::new(path, text)], "rev")
    }

    #[test]
    fn empty_input_gives_empty_model() {
        let parsed = parse_source_set(&[], "empty");
        assert!(parsed.model.is_empty());
        assert!(parsed.errors.is_empty());
        assert_eq!(parsed.model.revision_label, "empty");
    }

    #[test]
    fn tokenize_examples() {
        let min = tokenize_body("if (x < y) { return x; } else { return y; }");
        assert_eq!(min.count("y"), 2);
        assert_eq!(min.count("return"), 2);
        let power = tokenize_body("return Math.pow(x, y);");
        assert_eq!(power.count("if"), 0);
        assert!(tokenize_body("").is_empty());
        assert!(tokenize_body("  // only a comment\n").is_empty());
        let (_, skipped) = tokenize_body_with_diagnostics("a # b");
        assert_eq!(skipped, 1);
    }

    // Hand trace of the fixture:
    //   getTotal: one statement `return total`            -> {return:1, total:1}
    //   add:      `total = total + x`, `count++`           -> total stmt {total:2, =:1, +:1, x:1}
    //   reset:    `int total = 0`, `this.count = total`    -> local shadows `total`; count stmt
    const COUNTER: &str = "package acc;
public class Counter {
    private int total;
    private int count;
    public int getTotal() {
        return total;
    }
    public void add(int x) {
        total = total + x;
        count++;
    }
    public void reset() {
        int total = 0;
        this.count = total;
    }
}
";

    #[test]
    fn field_accesses_and_virtual_bodies_match_hand_trace() {
        let parsed = one("acc/Counter.java", COUNTER);
        assert!(parsed.errors.is_empty(), "{:?}", parsed.errors);
        let m = &parsed.model;
        let get = m
            .get(&EntityId::method("acc.Counter", "getTotal", &[]))
            .unwrap();
        assert_eq!(get.field_accesses, BTreeSet::from(["total".to_string()]));
        let reset = m.get(&EntityId::method("acc.Counter", "reset", &[])).unwrap();
        assert_eq!(reset.field_accesses, BTreeSet::from(["count".to_string()]));

        let total = m.get(&EntityId::field("acc.Counter", "total")).unwrap();
        let expected =
            TokenMultiset::from_counts([("return", 1), ("total", 3), ("=", 1), ("+", 1), ("x", 1)]);
        assert_eq!(total.tokens, expected);

        let count = m.get(&EntityId::field("acc.Counter", "count")).unwrap();
        let expected =
            TokenMultiset::from_counts([("count", 2), ("++", 1), ("this", 1), ("=", 1), ("total", 1)]);
        assert_eq!(count.tokens, expected);
        assert_eq!(build_field_virtual_body(count, m), count.tokens);
    }

    #[test]
    fn getter_virtual_body() {
        let parsed = one(
            "T.java",
            "class T { int total; int getTotal() { return total; } }",
        );
        let f = parsed.model.get(&EntityId::field("T", "total")).unwrap();
        let expected: TokenMultiset = ["return", "total"].into_iter().collect();
        assert_eq!(f.tokens, expected);
    }

    #[test]
    fn unused_field_has_empty_body() {
        let parsed = one("T.java", "class T { int unused = 3; void f() { int y = 1; } }");
        let f = parsed.model.get(&EntityId::field("T", "unused")).unwrap();
        assert!(f.tokens.is_empty());
    }

    #[test]
    fn two_statements_sum_their_tokens() {
        let parsed = one(
            "T.java",
            "class T { int v; void a(int x) { v = x; } void b(int x) { v += x * x; } }",
        );
        let f = parsed.model.get(&EntityId::field("T", "v")).unwrap();
        assert_eq!(f.tokens.count("x"), 3);
        assert_eq!(f.tokens.count("v"), 2);
    }

    #[test]
    fn inherited_field_resolves_through_subtypes() {
        let parsed = parse_source_set(
            &[
                SourceFile::new("Base.java", "class Base { protected int size; }"),
                SourceFile::new("Sub.java", "class Sub extends Base { int grow() { return size + 1; } }"),
            ],
            "rev",
        );
        let f = parsed.model.get(&EntityId::field("Base", "size")).unwrap();
        assert_eq!(f.tokens.count("size"), 1);
        assert_eq!(f.tokens.count("1"), 1);
    }

    #[test]
    fn failing_file_is_excluded_and_reported() {
        let parsed = parse_source_set(
            &[
                SourceFile::new("Good.java", "class Good { void f() {} }"),
                SourceFile::new("Bad.java", "class Bad { void f( }"),
            ],
            "rev",
        );
        assert_eq!(parsed.errors.len(), 1);
        assert_eq!(parsed.errors[0].path, "Bad.java");
        assert_eq!(parsed.model.len(), 2);
        assert!(parsed.model.entities().iter().all(|e| e.source_file == "Good.java"));
    }

    #[test]
    fn duplicate_types_are_reported() {
        let parsed = parse_source_set(
            &[
                SourceFile::new("a/A.java", "class A { }"),
                SourceFile::new("b/A.java", "class A { }"),
            ],
            "rev",
        );
        assert_eq!(parsed.model.len(), 1);
        assert_eq!(parsed.errors.len(), 1);
    }
}
