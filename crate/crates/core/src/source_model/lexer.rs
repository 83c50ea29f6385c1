//! A small Java lexer.
//!
//! Produces identifiers, keywords, literals, operators and structural
//! punctuation. Comments and whitespace are dropped. Characters that do not
//! start any known token are skipped and counted in [`Lexed::skipped`].

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Ident,
    Keyword,
    Literal,
    Operator,
    /// `{ } ( ) ; , .`, never part of a token multiset.
    Punct,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    /// 1-based source line.
    pub line: u32,
}

impl Token {
    pub fn is(&self, kind: TokenKind, text: &str) -> bool {
        self.kind == kind && self.text == text
    }

    pub fn is_punct(&self, text: &str) -> bool {
        self.is(TokenKind::Punct, text)
    }

    pub fn is_op(&self, text: &str) -> bool {
        self.is(TokenKind::Operator, text)
    }

    pub fn is_keyword(&self, text: &str) -> bool {
        self.is(TokenKind::Keyword, text)
    }

    pub fn is_ident(&self) -> bool {
        self.kind == TokenKind::Ident
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

#[derive(Debug, Clone, Default)]
pub struct Lexed {
    pub tokens: Vec<Token>,
    /// Number of characters that could not be lexed.
    pub skipped: usize,
    /// Set when a block comment, string or char literal runs to end of input.
    pub unterminated: Option<u32>,
}

pub const KEYWORDS: &[&str] = &[
    "abstract",
    "assert",
    "boolean",
    "break",
    "byte",
    "case",
    "catch",
    "char",
    "class",
    "const",
    "continue",
    "default",
    "do",
    "double",
    "else",
    "enum",
    "extends",
    "final",
    "finally",
    "float",
    "for",
    "goto",
    "if",
    "implements",
    "import",
    "instanceof",
    "int",
    "interface",
    "long",
    "native",
    "new",
    "package",
    "private",
    "protected",
    "public",
    "return",
    "short",
    "static",
    "strictfp",
    "super",
    "switch",
    "synchronized",
    "this",
    "throw",
    "throws",
    "transient",
    "try",
    "void",
    "volatile",
    "while",
];

const LITERAL_WORDS: &[&str] = &["true", "false", "null"];

// Longest first so that maximal munch works with a linear scan.
const OPERATORS: &[&str] = &[
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=",
    ">=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>", "+", "-", "*", "/", "%",
    "=", "<", ">", "!", "~", "?", ":", "&", "|", "^", "@", "[", "]",
];

const PUNCT: &[char] = &['{', '}', '(', ')', ';', ',', '.'];

pub fn is_keyword(word: &str) -> bool {
    KEYWORDS.binary_search(&word).is_ok()
}

pub fn lex(source: &str) -> Lexed {
    Lexer::new(source).run()
}

struct Lexer<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    line: u32,
    out: Lexed,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src,
            bytes: src.as_bytes(),
            pos: 0,
            line: 1,
            out: Lexed::default(),
        }
    }

    fn peek(&self, offset: usize) -> Option<u8> {
        self.bytes.get(self.pos + offset).copied()
    }

    fn push(&mut self, kind: TokenKind, start: usize, line: u32) {
        self.out.tokens.push(Token {
            kind,
            text: self.src[start..self.pos].to_string(),
            line,
        });
    }

    fn bump_char(&mut self) -> Option<char> {
        let c = self.src[self.pos..].chars().next()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
        }
        Some(c)
    }

    fn run(mut self) -> Lexed {
        while self.pos < self.bytes.len() {
            let start = self.pos;
            let line = self.line;
            let c = self.src[self.pos..].chars().next().unwrap();

            if c.is_whitespace() {
                self.bump_char();
            } else if c == '/' && self.peek(1) == Some(b'/') {
                while let Some(b) = self.peek(0) {
                    if b == b'\n' {
                        break;
                    }
                    self.pos += 1;
                }
            } else if c == '/' && self.peek(1) == Some(b'*') {
                self.pos += 2;
                let mut closed = false;
                while self.pos < self.bytes.len() {
                    if self.peek(0) == Some(b'*') && self.peek(1) == Some(b'/') {
                        self.pos += 2;
                        closed = true;
                        break;
                    }
                    self.bump_char();
                }
                if !closed {
                    self.out.unterminated.get_or_insert(line);
                }
            } else if c == '"' {
                self.string_literal(line);
                self.push(TokenKind::Literal, start, line);
            } else if c == '\'' {
                self.quoted(b'\'', line);
                self.push(TokenKind::Literal, start, line);
            } else if c.is_ascii_digit()
                || (c == '.' && self.peek(1).is_some_and(|b| b.is_ascii_digit()))
            {
                self.number();
                self.push(TokenKind::Literal, start, line);
            } else if is_ident_start(c) {
                while let Some(ch) = self.src[self.pos..].chars().next() {
                    if !is_ident_part(ch) {
                        break;
                    }
                    self.pos += ch.len_utf8();
                }
                let word = &self.src[start..self.pos];
                let kind = if is_keyword(word) {
                    TokenKind::Keyword
                } else if LITERAL_WORDS.contains(&word) {
                    TokenKind::Literal
                } else {
                    TokenKind::Ident
                };
                self.push(kind, start, line);
            } else if let Some(op) = OPERATORS
                .iter()
                .find(|op| self.src[self.pos..].starts_with(**op))
            {
                self.pos += op.len();
                self.push(TokenKind::Operator, start, line);
            } else if PUNCT.contains(&c) {
                self.pos += 1;
                self.push(TokenKind::Punct, start, line);
            } else {
                self.bump_char();
                self.out.skipped += 1;
            }
        }
        self.out
    }

    fn string_literal(&mut self, line: u32) {
        if self.src[self.pos..].starts_with("\"\"\"") {
            // text block
            self.pos += 3;
            while self.pos < self.bytes.len() {
                if self.peek(0) == Some(b'\\') {
                    self.pos += 1;
                    self.bump_char();
                    continue;
                }
                if self.src[self.pos..].starts_with("\"\"\"") {
                    self.pos += 3;
                    return;
                }
                self.bump_char();
            }
            self.out.unterminated.get_or_insert(line);
        } else {
            self.quoted(b'"', line);
        }
    }

    fn quoted(&mut self, quote: u8, line: u32) {
        self.pos += 1;
        while let Some(b) = self.peek(0) {
            match b {
                b'\\' => {
                    self.pos += 1;
                    if self.pos < self.bytes.len() {
                        self.bump_char();
                    }
                }
                b'\n' => break,
                b if b == quote => {
                    self.pos += 1;
                    return;
                }
                _ => {
                    self.bump_char();
                }
            }
        }
        self.out.unterminated.get_or_insert(line);
    }

    fn number(&mut self) {
        let hex = self.peek(0) == Some(b'0') && matches!(self.peek(1), Some(b'x' | b'X'));
        if hex {
            self.pos += 2;
        }
        while let Some(b) = self.peek(0) {
            let more = b.is_ascii_alphanumeric()
                || b == b'_'
                || (b == b'.' && self.peek(1).is_some_and(|n| n.is_ascii_digit()))
                || (!hex
                    && matches!(b, b'+' | b'-')
                    && matches!(self.bytes.get(self.pos - 1), Some(b'e' | b'E')));
            if !more {
                break;
            }
            self.pos += 1;
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_' || c == '$'
}

fn is_ident_part(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '$'
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(src: &str) -> Vec<(TokenKind, String)> {
        lex(src)
            .tokens
            .into_iter()
            .map(|t| (t.kind, t.text))
            .collect()
    }

    #[test]
    fn keyword_table_is_sorted() {
        let mut sorted = KEYWORDS.to_vec();
        sorted.sort_unstable();
        assert_eq!(sorted, KEYWORDS);
    }

    #[test]
    fn classifies_tokens() {
        let toks = texts("if (x >= 10) return this.y; // done");
        use TokenKind::*;
        assert_eq!(
            toks,
            vec![
                (Keyword, "if".into()),
                (Punct, "(".into()),
                (Ident, "x".into()),
                (Operator, ">=".into()),
                (Literal, "10".into()),
                (Punct, ")".into()),
                (Keyword, "return".into()),
                (Keyword, "this".into()),
                (Punct, ".".into()),
                (Ident, "y".into()),
                (Punct, ";".into()),
            ]
        );
    }

    #[test]
    fn literals_and_comments() {
        let toks = texts("s = \"a // not a comment\" + 'c' /* gone */ + 1.5e-3f + 0xFFL + null;");
        let lits: Vec<_> = toks
            .iter()
            .filter(|(k, _)| *k == TokenKind::Literal)
            .map(|(_, t)| t.as_str())
            .collect();
        assert_eq!(lits, ["\"a // not a comment\"", "'c'", "1.5e-3f", "0xFFL", "null"]);
    }

    #[test]
    fn line_numbers_track_newlines() {
        let lexed = lex("a\n/* x\ny */ b\n\"s\" c");
        let lines: Vec<_> = lexed.tokens.iter().map(|t| t.line).collect();
        assert_eq!(lines, [1, 3, 4, 4]);
    }

    #[test]
    fn unknown_characters_are_counted() {
        let lexed = lex("a # b \\ c");
        assert_eq!(lexed.skipped, 2);
        assert_eq!(lexed.tokens.len(), 3);
    }

    #[test]
    fn unterminated_comment_is_flagged() {
        assert_eq!(lex("a /* never closed").unterminated, Some(1));
        assert_eq!(lex("x;\n\"open").unterminated, Some(2));
        assert_eq!(lex("ok").unterminated, None);
    }

    #[test]
    fn maximal_munch_operators() {
        let toks = texts("a >>>= b -> c :: d ... e");
        let ops: Vec<_> = toks
            .iter()
            .filter(|(k, _)| *k == TokenKind::Operator)
            .map(|(_, t)| t.as_str())
            .collect();
        assert_eq!(ops, [">>>=", "->", "::", "..."]);
    }
}
