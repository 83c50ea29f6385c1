//! Declaration-level parser for a Java subset.
//!
//! Only declarations are parsed structurally (package, types, fields,
//! methods, constructors). Method bodies are kept as token streams, split
//! into statements at `;` and block braces.

use std::collections::BTreeSet;

use super::lexer::{lex, Token, TokenKind};
use super::model::{
    CallDescriptor, CodeEntity, EntityId, FieldRef, MethodBody, Statement, TypeFlavor,
};
use super::multiset::TokenMultiset;
use super::ParseError;

const MODIFIERS: &[&str] = &[
    "public",
    "protected",
    "private",
    "static",
    "final",
    "abstract",
    "native",
    "synchronized",
    "transient",
    "volatile",
    "strictfp",
    "default",
];

const PRIMITIVES: &[&str] = &[
    "boolean", "byte", "char", "short", "int", "long", "float", "double", "void",
];

/// Parses one file into its entities. Field token multisets are left empty.
pub(crate) fn parse_file(path: &str, text: &str) -> Result<Vec<CodeEntity>, ParseError> {
    let lexed = lex(text);
    if let Some(line) = lexed.unterminated {
        return Err(ParseError::new(path, line, "unterminated comment or literal"));
    }
    let mut parser = Parser {
        path,
        toks: &lexed.tokens,
        pos: 0,
        package: String::new(),
        out: Vec::new(),
    };
    parser.compilation_unit()?;
    Ok(parser.out)
}

struct Parser<'a> {
    path: &'a str,
    toks: &'a [Token],
    pos: usize,
    package: String,
    out: Vec<CodeEntity>,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn tok(&self, i: usize) -> Option<&'a Token> {
        self.toks.get(i)
    }

    fn cur(&self) -> Option<&'a Token> {
        self.tok(self.pos)
    }

    fn line(&self) -> u32 {
        self.cur()
            .or_else(|| self.toks.last())
            .map(|t| t.line)
            .unwrap_or(1)
    }

    fn err<T>(&self, reason: impl Into<String>) -> PResult<T> {
        Err(ParseError::new(self.path, self.line(), reason))
    }

    fn unexpected<T>(&self, what: &str) -> PResult<T> {
        match self.cur() {
            Some(t) => self.err(format!("expected {what}, found `{}`", t.text)),
            None => self.err(format!("expected {what}, found end of file")),
        }
    }

    fn at_punct(&self, p: &str) -> bool {
        self.cur().is_some_and(|t| t.is_punct(p))
    }

    fn at_op(&self, op: &str) -> bool {
        self.cur().is_some_and(|t| t.is_op(op))
    }

    fn at_keyword(&self, kw: &str) -> bool {
        self.cur().is_some_and(|t| t.is_keyword(kw))
    }

    fn expect_punct(&mut self, p: &str) -> PResult<()> {
        if self.at_punct(p) {
            self.pos += 1;
            Ok(())
        } else {
            self.unexpected(&format!("`{p}`"))
        }
    }

    fn ident(&mut self) -> PResult<String> {
        match self.cur() {
            Some(t) if t.is_ident() => {
                self.pos += 1;
                Ok(t.text.clone())
            }
            _ => self.unexpected("identifier"),
        }
    }

    fn qualified_name(&mut self) -> PResult<String> {
        let mut name = self.ident()?;
        while self.at_punct(".") && self.tok(self.pos + 1).is_some_and(|t| t.is_ident()) {
            self.pos += 1;
            name.push('.');
            name.push_str(&self.ident()?);
        }
        Ok(name)
    }

    fn skip_to_semicolon(&mut self) -> PResult<()> {
        while let Some(t) = self.cur() {
            self.pos += 1;
            if t.is_punct(";") {
                return Ok(());
            }
        }
        self.err("missing `;`")
    }

    /// Index of the bracket closing the one at `open`.
    fn matching(&self, open: usize, left: &str, right: &str) -> PResult<usize> {
        let mut depth = 0usize;
        for i in open..self.toks.len() {
            let t = &self.toks[i];
            if t.is_punct(left) {
                depth += 1;
            } else if t.is_punct(right) {
                depth -= 1;
                if depth == 0 {
                    return Ok(i);
                }
            }
        }
        Err(ParseError::new(
            self.path,
            self.toks[open].line,
            format!("unbalanced `{left}`"),
        ))
    }

    fn skip_balanced(&mut self, left: &str, right: &str) -> PResult<()> {
        let close = self.matching(self.pos, left, right)?;
        self.pos = close + 1;
        Ok(())
    }

    /// Skips `<...>` starting at the current `<`.
    fn skip_angles(&mut self) -> PResult<()> {
        let start_line = self.line();
        let mut depth: i32 = 0;
        while let Some(t) = self.cur() {
            if t.kind == TokenKind::Operator {
                match t.text.as_str() {
                    "<" => depth += 1,
                    ">" => depth -= 1,
                    ">>" => depth -= 2,
                    ">>>" => depth -= 3,
                    _ => {}
                }
            } else if t.is_punct("{") || t.is_punct(";") {
                break;
            }
            self.pos += 1;
            if depth <= 0 {
                return Ok(());
            }
        }
        Err(ParseError::new(self.path, start_line, "unbalanced `<`"))
    }

    fn skip_annotation(&mut self) -> PResult<()> {
        // at `@`
        self.pos += 1;
        self.qualified_name()?;
        if self.at_punct("(") {
            self.skip_balanced("(", ")")?;
        }
        Ok(())
    }

    fn at_annotation(&self) -> bool {
        self.at_op("@") && self.tok(self.pos + 1).is_some_and(|t| t.is_ident())
    }

    fn skip_modifiers(&mut self) -> PResult<()> {
        loop {
            if self.at_annotation() {
                self.skip_annotation()?;
            } else if self
                .cur()
                .is_some_and(|t| t.kind == TokenKind::Keyword && MODIFIERS.contains(&t.text.as_str()))
            {
                // `default` as a switch label never reaches here: bodies are skipped.
                self.pos += 1;
            } else if self
                .cur()
                .is_some_and(|t| t.is_ident() && (t.text == "sealed" || t.text == "non"))
                && self.tok(self.pos + 1).is_some_and(|t| {
                    t.is_ident() || t.kind == TokenKind::Keyword || t.is_op("-")
                })
            {
                // `sealed`, `non-sealed`
                self.pos += 1;
                if self.at_op("-") {
                    self.pos += 2;
                }
            } else {
                return Ok(());
            }
        }
    }

    fn compilation_unit(&mut self) -> PResult<()> {
        self.skip_modifiers()?;
        if self.at_keyword("package") {
            self.pos += 1;
            self.package = self.qualified_name()?;
            self.expect_punct(";")?;
        }
        while self.cur().is_some() {
            if self.at_keyword("import") {
                self.skip_to_semicolon()?;
            } else if self.at_punct(";") {
                self.pos += 1;
            } else {
                self.skip_modifiers()?;
                self.type_declaration(None)?;
            }
        }
        Ok(())
    }

    fn at_type_keyword(&self) -> bool {
        self.at_keyword("class")
            || self.at_keyword("interface")
            || self.at_keyword("enum")
            || (self.at_op("@") && self.tok(self.pos + 1).is_some_and(|t| t.is_keyword("interface")))
            || (self.cur().is_some_and(|t| t.is_ident() && t.text == "record")
                && self.tok(self.pos + 1).is_some_and(|t| t.is_ident()))
    }

    /// Parses a type declaration at the current keyword. Enums and
    /// annotation types are skipped without creating entities.
    fn type_declaration(&mut self, container: Option<&EntityId>) -> PResult<()> {
        let line = self.line();
        if self.at_keyword("enum") || self.at_op("@") {
            while !self.at_punct("{") {
                if self.cur().is_none() {
                    return self.unexpected("`{`");
                }
                self.pos += 1;
            }
            return self.skip_balanced("{", "}");
        }
        let flavor = if self.at_keyword("class") {
            TypeFlavor::Class
        } else if self.at_keyword("interface") {
            TypeFlavor::Interface
        } else if self.cur().is_some_and(|t| t.text == "record") {
            return self.err("record declarations are not supported");
        } else {
            return self.unexpected("type declaration");
        };
        self.pos += 1;
        let name = self.ident()?;
        if self.at_op("<") {
            self.skip_angles()?;
        }
        let mut supertypes = BTreeSet::new();
        loop {
            if self.at_keyword("extends") || self.at_keyword("implements") {
                self.pos += 1;
                loop {
                    supertypes.insert(self.type_ref()?);
                    if self.at_punct(",") {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
            } else if self.cur().is_some_and(|t| t.is_ident() && t.text == "permits") {
                self.pos += 1;
                while !self.at_punct("{") && self.cur().is_some() {
                    self.pos += 1;
                }
            } else {
                break;
            }
        }
        if !self.at_punct("{") {
            return self.unexpected("`{`");
        }
        let open = self.pos;
        let close = self.matching(open, "{", "}")?;

        let qualified = match container {
            Some(c) => format!("{}.{}", c.qualified_name, name),
            None if self.package.is_empty() => name.clone(),
            None => format!("{}.{}", self.package, name),
        };
        let id = EntityId::type_id(qualified);
        self.out.push(CodeEntity {
            id: id.clone(),
            container: container.cloned(),
            tokens: TokenMultiset::from_tokens(&self.toks[open + 1..close]),
            calls: BTreeSet::new(),
            field_accesses: BTreeSet::new(),
            supertypes,
            source_file: self.path.to_string(),
            package: self.package.clone(),
            name: name.clone(),
            params: Vec::new(),
            is_constructor: false,
            has_body: true,
            flavor: Some(flavor),
            line,
            body: None,
        });

        self.pos = open + 1;
        while self.pos < close {
            self.member(&id, &name)?;
        }
        if self.pos != close {
            return self.err("member declaration overruns type body");
        }
        self.pos = close + 1;
        Ok(())
    }

    /// Parses a type reference and returns its simple name with array
    /// suffixes, e.g. `java.util.List<String>[]` -> `List[]`.
    fn type_ref(&mut self) -> PResult<String> {
        while self.at_annotation() {
            self.skip_annotation()?;
        }
        let mut simple = match self.cur() {
            Some(t) if t.kind == TokenKind::Keyword && PRIMITIVES.contains(&t.text.as_str()) => {
                self.pos += 1;
                t.text.clone()
            }
            Some(t) if t.is_ident() => {
                let mut last = self.ident()?;
                loop {
                    if self.at_op("<") {
                        self.skip_angles()?;
                    }
                    if self.at_punct(".") && self.tok(self.pos + 1).is_some_and(|t| t.is_ident()) {
                        self.pos += 1;
                        last = self.ident()?;
                    } else {
                        break;
                    }
                }
                last
            }
            _ => return self.unexpected("type"),
        };
        self.array_dims(&mut simple);
        Ok(simple)
    }

    fn array_dims(&mut self, simple: &mut String) {
        while self.at_op("[") && self.tok(self.pos + 1).is_some_and(|t| t.is_op("]")) {
            self.pos += 2;
            simple.push_str("[]");
        }
    }

    fn member(&mut self, owner: &EntityId, owner_name: &str) -> PResult<()> {
        if self.at_punct(";") {
            self.pos += 1;
            return Ok(());
        }
        if self.at_punct("{") {
            return self.skip_balanced("{", "}");
        }
        if self.at_keyword("static") && self.tok(self.pos + 1).is_some_and(|t| t.is_punct("{")) {
            self.pos += 1;
            return self.skip_balanced("{", "}");
        }
        let start = self.pos;
        let line = self.line();
        self.skip_modifiers()?;
        let is_abstract = self.toks[start..self.pos]
            .iter()
            .any(|t| t.is_keyword("abstract"));
        if self.at_type_keyword() {
            return self.type_declaration(Some(owner));
        }
        if self.at_op("<") {
            self.skip_angles()?;
        }
        let is_ctor = self.cur().is_some_and(|t| t.is_ident() && t.text == owner_name)
            && self.tok(self.pos + 1).is_some_and(|t| t.is_punct("("));
        if is_ctor {
            self.pos += 1;
            return self.method_rest(owner, owner_name, true, false, line);
        }
        self.type_ref()?;
        let name = self.ident()?;
        if self.at_punct("(") {
            return self.method_rest(owner, &name, false, is_abstract, line);
        }
        self.field_declarators(owner, name, line)
    }

    fn method_rest(
        &mut self,
        owner: &EntityId,
        name: &str,
        is_ctor: bool,
        is_abstract: bool,
        line: u32,
    ) -> PResult<()> {
        let open = self.pos;
        let close = self.matching(open, "(", ")")?;
        let (params, param_names) = self.parameters(open + 1, close)?;
        self.pos = close + 1;
        let mut dims = String::new();
        self.array_dims(&mut dims);
        if self.at_keyword("throws") {
            self.pos += 1;
            loop {
                self.type_ref()?;
                if self.at_punct(",") {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        let id = EntityId::method(&owner.qualified_name, name, &params);
        let mut entity = CodeEntity {
            id,
            container: Some(owner.clone()),
            tokens: TokenMultiset::new(),
            calls: BTreeSet::new(),
            field_accesses: BTreeSet::new(),
            supertypes: BTreeSet::new(),
            source_file: self.path.to_string(),
            package: self.package.clone(),
            name: name.to_string(),
            params,
            is_constructor: is_ctor,
            has_body: false,
            flavor: None,
            line,
            body: None,
        };
        if self.at_punct("{") {
            let body_open = self.pos;
            let body_close = self.matching(body_open, "{", "}")?;
            let body = &self.toks[body_open + 1..body_close];
            entity.tokens = TokenMultiset::from_tokens(body);
            entity.calls = calls_in(body);
            entity.body = Some(analyze_body(body, &param_names));
            entity.has_body = true;
            self.pos = body_close + 1;
        } else if self.at_keyword("default") {
            // annotation element default value
            self.skip_to_semicolon()?;
        } else if self.at_punct(";") {
            self.pos += 1;
        } else {
            return self.unexpected("method body or `;`");
        }
        if is_abstract && entity.has_body {
            return Err(ParseError::new(self.path, line, "abstract method with a body"));
        }
        self.out.push(entity);
        Ok(())
    }

    /// Parameter type simple names and parameter names between `(` and `)`.
    fn parameters(&mut self, from: usize, to: usize) -> PResult<(Vec<String>, Vec<String>)> {
        let mut types = Vec::new();
        let mut names = Vec::new();
        self.pos = from;
        while self.pos < to {
            self.skip_modifiers()?;
            let mut ty = self.type_ref()?;
            if self.at_op("...") {
                self.pos += 1;
                ty.push_str("[]");
            }
            if self.at_keyword("this") {
                // receiver parameter
                self.pos += 1;
            } else {
                let name = self.ident()?;
                self.array_dims(&mut ty);
                names.push(name);
                types.push(ty);
            }
            if self.pos < to {
                self.expect_punct(",")?;
            }
        }
        if self.pos != to {
            return self.err("malformed parameter list");
        }
        Ok((types, names))
    }

    fn field_declarators(&mut self, owner: &EntityId, first: String, line: u32) -> PResult<()> {
        let mut name = first;
        loop {
            let mut dims = String::new();
            self.array_dims(&mut dims);
            self.out.push(CodeEntity {
                id: EntityId::field(&owner.qualified_name, &name),
                container: Some(owner.clone()),
                tokens: TokenMultiset::new(),
                calls: BTreeSet::new(),
                field_accesses: BTreeSet::new(),
                supertypes: BTreeSet::new(),
                source_file: self.path.to_string(),
                package: self.package.clone(),
                name: name.clone(),
                params: Vec::new(),
                is_constructor: false,
                has_body: false,
                flavor: None,
                line,
                body: None,
            });
            if self.at_op("=") {
                self.pos += 1;
                self.skip_initializer()?;
            }
            if self.at_punct(";") {
                self.pos += 1;
                return Ok(());
            }
            if self.at_punct(",") {
                self.pos += 1;
                name = self.ident()?;
                continue;
            }
            return self.unexpected("`;` after field declaration");
        }
    }

    /// Skips a field initializer, stopping before the `;` or the `,` that
    /// starts the next declarator.
    fn skip_initializer(&mut self) -> PResult<()> {
        let mut depth = 0i32;
        while let Some(t) = self.cur() {
            match (t.kind, t.text.as_str()) {
                (TokenKind::Punct, "(" | "{") | (TokenKind::Operator, "[") => depth += 1,
                (TokenKind::Punct, ")" | "}") | (TokenKind::Operator, "]") => {
                    depth -= 1;
                    if depth < 0 {
                        return self.unexpected("field initializer");
                    }
                }
                (TokenKind::Punct, ";") if depth == 0 => return Ok(()),
                (TokenKind::Punct, ",") if depth == 0 && self.next_declarator_follows() => {
                    return Ok(())
                }
                _ => {}
            }
            self.pos += 1;
        }
        self.err("unterminated field initializer")
    }

    /// At a `,`: does `ident (= | , | ; | [)` follow?
    fn next_declarator_follows(&self) -> bool {
        self.tok(self.pos + 1).is_some_and(|t| t.is_ident())
            && self.tok(self.pos + 2).is_some_and(|t| {
                t.is_op("=") || t.is_punct(",") || t.is_punct(";") || t.is_op("[")
            })
    }
}

fn is_primitive(t: &Token) -> bool {
    t.kind == TokenKind::Keyword && PRIMITIVES.contains(&t.text.as_str())
}

/// Identifiers that look like local declarations: `Type name` followed by
/// `= ; : , )`.
fn local_names(body: &[Token]) -> BTreeSet<String> {
    let mut locals = BTreeSet::new();
    for i in 1..body.len() {
        let t = &body[i];
        if !t.is_ident() {
            continue;
        }
        let declares = body.get(i + 1).is_some_and(|n| {
            n.is_op("=") || n.is_punct(";") || n.is_op(":") || n.is_punct(",") || n.is_punct(")")
        });
        if !declares {
            continue;
        }
        let prev = &body[i - 1];
        let typed = if prev.is_ident() || is_primitive(prev) {
            // `a.b c` cannot occur; `x.y` has `.` before `y`, not an ident
            true
        } else if prev.is_op("]") {
            i >= 2 && body[i - 2].is_op("[")
        } else if prev.is_op(">") || prev.is_op(">>") || prev.is_op(">>>") {
            closes_generic_type(body, i - 1)
        } else {
            false
        };
        if typed {
            locals.insert(t.text.clone());
        }
    }
    locals
}

/// Walks back from a closing `>` and checks the bracketed span looks like
/// generic type arguments attached to an identifier.
fn closes_generic_type(body: &[Token], close: usize) -> bool {
    let mut depth: i32 = 0;
    let mut i = close as isize;
    while i >= 0 {
        let t = &body[i as usize];
        match (t.kind, t.text.as_str()) {
            (TokenKind::Operator, ">") => depth += 1,
            (TokenKind::Operator, ">>") => depth += 2,
            (TokenKind::Operator, ">>>") => depth += 3,
            (TokenKind::Operator, "<") => {
                depth -= 1;
                if depth == 0 {
                    return i > 0 && body[i as usize - 1].is_ident();
                }
            }
            (TokenKind::Ident, _)
            | (TokenKind::Punct, "," | ".")
            | (TokenKind::Operator, "?" | "[" | "]" | "&")
            | (TokenKind::Keyword, "extends" | "super") => {}
            (TokenKind::Keyword, _) if is_primitive(t) => {}
            _ => return false,
        }
        i -= 1;
    }
    false
}

fn analyze_body(body: &[Token], params: &[String]) -> MethodBody {
    let mut locals = local_names(body);
    locals.extend(params.iter().cloned());
    let mut statements = Vec::new();
    let mut start = 0;
    for i in 0..=body.len() {
        let boundary = i == body.len()
            || body[i].is_punct(";")
            || body[i].is_punct("{")
            || body[i].is_punct("}");
        if !boundary {
            continue;
        }
        if i > start {
            let stmt = &body[start..i];
            statements.push(Statement {
                tokens: TokenMultiset::from_tokens(stmt),
                refs: field_refs(stmt, &locals),
            });
        }
        start = i + 1;
    }
    MethodBody { statements }
}

fn field_refs(stmt: &[Token], locals: &BTreeSet<String>) -> Vec<FieldRef> {
    let mut refs = Vec::new();
    for (i, t) in stmt.iter().enumerate() {
        if !t.is_ident() {
            continue;
        }
        let next_is_call = stmt.get(i + 1).is_some_and(|n| n.is_punct("("));
        if next_is_call {
            continue;
        }
        let prev = i.checked_sub(1).map(|p| &stmt[p]);
        match prev {
            Some(p) if p.is_punct(".") => {
                let receiver_this = i >= 2 && stmt[i - 2].is_keyword("this") && {
                    // `Outer.this.f` is not `this.f` of the current type
                    !(i >= 3 && stmt[i - 3].is_punct("."))
                };
                if receiver_this {
                    refs.push(FieldRef::This(t.text.clone()));
                } else {
                    refs.push(FieldRef::Qualified(t.text.clone()));
                }
            }
            Some(p) if p.is_keyword("new") => {}
            _ => {
                if !locals.contains(&t.text) {
                    refs.push(FieldRef::Bare(t.text.clone()));
                }
            }
        }
    }
    refs.sort();
    refs.dedup();
    refs
}

/// Syntactic call sites: an identifier followed by an argument list.
pub(crate) fn calls_in(body: &[Token]) -> BTreeSet<CallDescriptor> {
    let mut calls = BTreeSet::new();
    for i in 0..body.len() {
        let t = &body[i];
        if !t.is_ident() || !body.get(i + 1).is_some_and(|n| n.is_punct("(")) {
            continue;
        }
        if i > 0 && body[i - 1].is_keyword("new") {
            continue;
        }
        calls.insert(CallDescriptor {
            name: t.text.clone(),
            arg_count: argument_count(&body[i + 1..]),
        });
    }
    calls
}

/// Counts top-level arguments in a token slice starting at `(`.
fn argument_count(from_paren: &[Token]) -> usize {
    let mut depth = 0i32;
    let mut commas = 0;
    let mut any = false;
    for t in from_paren {
        match (t.kind, t.text.as_str()) {
            (TokenKind::Punct, "(" | "{") | (TokenKind::Operator, "[") => {
                depth += 1;
                if depth > 1 {
                    any = true;
                }
            }
            (TokenKind::Punct, ")" | "}") | (TokenKind::Operator, "]") => {
                depth -= 1;
                if depth == 0 {
                    break;
                }
            }
            (TokenKind::Punct, ",") if depth == 1 => commas += 1,
            _ => any = true,
        }
    }
    if any || commas > 0 {
        commas + 1
    } else {
        0
    }
}
