//! Offside-rule tokenizer.
//!
//! Produces a lossless token stream: every token records the whitespace that
//! precedes it (`trivia`), so concatenating `trivia + text` over all tokens
//! gives back the input byte for byte. INDENT and DEDENT are synthesized from
//! leading whitespace of lines that carry code; blank lines and comment-only
//! lines never change the indentation level.

use serde::{Deserialize, Serialize};

use super::diagnostic::Diagnostic;
use super::span::SourceSpan;

pub const KEYWORDS: &[&str] = &[
    "FUNCTION", "END", "IF", "THEN", "ELSE", "WHILE", "DO", "FOR", "EACH", "FROM", "TO", "STEP", "IN",
    "RETURN", "SET", "INPUT", "OUTPUT", "AND", "OR", "NOT", "MOD",
];

/// Keyword that opens a natural-language step line.
pub const PROSE_MARKER: &str = "DO:";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TokenKind {
    Keyword,
    Identifier,
    IntLiteral,
    FloatLiteral,
    StringLiteral,
    BoolLiteral,
    Operator,
    Newline,
    Indent,
    Dedent,
    Comment,
    /// Free text following `DO:`.
    Prose,
    Eof,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub kind: TokenKind,
    /// Exact source slice.
    pub text: String,
    /// Whitespace between the previous token and this one.
    pub trivia: String,
    pub span: SourceSpan,
}

impl Token {
    pub fn is(&self, kind: TokenKind, text: &str) -> bool {
        self.kind == kind && self.text == text
    }

    pub fn is_keyword(&self, text: &str) -> bool {
        self.is(TokenKind::Keyword, text)
    }

    pub fn is_op(&self, text: &str) -> bool {
        self.is(TokenKind::Operator, text)
    }
}

#[derive(Debug, Clone)]
pub struct LexOptions {
    pub tab_width: usize,
}

impl Default for LexOptions {
    fn default() -> Self {
        LexOptions { tab_width: 4 }
    }
}

pub fn is_keyword(word: &str) -> bool {
    KEYWORDS.contains(&word)
}

pub fn tokenize(text: &str) -> Result<Vec<Token>, Vec<Diagnostic>> {
    tokenize_with(text, &LexOptions::default())
}

pub fn tokenize_with(text: &str, options: &LexOptions) -> Result<Vec<Token>, Vec<Diagnostic>> {
    let mut lexer = Lexer { options, tokens: Vec::new(), diagnostics: Vec::new(), indents: vec![0] };
    let mut line_no = 0u32;
    let mut eof_trivia = String::new();
    let mut eof_line = 1u32;
    for raw in text.split_inclusive('\n') {
        line_no += 1;
        let has_newline = raw.ends_with('\n');
        let chars: Vec<char> = raw.trim_end_matches('\n').chars().collect();
        eof_line = if has_newline { line_no + 1 } else { line_no };
        if let Some(rest) = lexer.line(line_no, &chars, has_newline) {
            eof_trivia = rest;
        }
    }
    let eof_span = SourceSpan::point(eof_line, 1);
    while lexer.indents.len() > 1 {
        lexer.indents.pop();
        lexer.push(TokenKind::Dedent, "", "", eof_span);
    }
    lexer.push(TokenKind::Eof, "", &eof_trivia, eof_span);
    if lexer.diagnostics.is_empty() {
        Ok(lexer.tokens)
    } else {
        Err(lexer.diagnostics)
    }
}

/// Inverse of [`tokenize`]: concatenates trivia and text.
pub fn reconstruct(tokens: &[Token]) -> String {
    let mut out = String::new();
    for token in tokens {
        out.push_str(&token.trivia);
        out.push_str(&token.text);
    }
    out
}

struct Lexer<'o> {
    options: &'o LexOptions,
    tokens: Vec<Token>,
    diagnostics: Vec<Diagnostic>,
    indents: Vec<usize>,
}

fn collect(chars: &[char]) -> String {
    chars.iter().collect()
}

fn col(index: usize) -> u32 {
    index as u32 + 1
}

impl Lexer<'_> {
    fn push(&mut self, kind: TokenKind, text: &str, trivia: &str, span: SourceSpan) {
        self.tokens.push(Token { kind, text: text.to_string(), trivia: trivia.to_string(), span });
    }

    /// Lexes one physical line (without its `\n`). Returns trailing
    /// whitespace that must be attached to EOF when there is no newline.
    fn line(&mut self, line: u32, chars: &[char], has_newline: bool) -> Option<String> {
        let indent_end = chars.iter().position(|c| *c != ' ' && *c != '\t').unwrap_or(chars.len());
        let body_end = chars.iter().rposition(|c| !c.is_whitespace()).map_or(indent_end, |p| p + 1).max(indent_end);

        if indent_end == chars.len() || body_end == indent_end {
            // blank line
            let trivia = collect(chars);
            if has_newline {
                self.push(TokenKind::Newline, "\n", &trivia, SourceSpan::new(line, col(chars.len()), line, col(chars.len()) + 1));
                return None;
            }
            return Some(trivia);
        }

        let indentation = collect(&chars[..indent_end]);
        let comment_line = chars[indent_end..].starts_with(&['/', '/']);
        if !comment_line {
            self.indentation(line, &chars[..indent_end]);
        }
        self.scan(line, chars, indent_end, body_end, indentation);

        let trailing = collect(&chars[body_end..]);
        if has_newline {
            self.push(TokenKind::Newline, "\n", &trailing, SourceSpan::new(line, col(chars.len()), line, col(chars.len()) + 1));
        } else {
            self.push(TokenKind::Newline, "", &trailing, SourceSpan::point(line, col(chars.len())));
        }
        None
    }

    fn indentation(&mut self, line: u32, leading: &[char]) {
        let tab = self.options.tab_width.max(1);
        let width = leading.iter().fold(0usize, |w, c| if *c == '\t' { (w / tab + 1) * tab } else { w + 1 });
        let at = SourceSpan::point(line, col(leading.len()));
        let top = *self.indents.last().unwrap();
        if width > top {
            self.indents.push(width);
            self.push(TokenKind::Indent, "", "", at);
        } else if width < top {
            while *self.indents.last().unwrap() > width {
                self.indents.pop();
                self.push(TokenKind::Dedent, "", "", at);
            }
            if *self.indents.last().unwrap() != width {
                self.diagnostics.push(Diagnostic::error(
                    "L004.inconsistent-dedent",
                    format!("dedent to width {width} matches no enclosing indentation level"),
                    SourceSpan::new(line, 1, line, col(leading.len())),
                ));
                // resynchronise on the offending width
                self.indents.push(width);
            }
        }
    }

    fn scan(&mut self, line: u32, chars: &[char], start: usize, end: usize, mut trivia: String) {
        let mut i = start;
        let mut first = true;
        while i < end {
            let c = chars[i];
            if c == ' ' || c == '\t' || c == '\r' {
                trivia.push(c);
                i += 1;
                continue;
            }
            let begin = i;
            let span_to = |j: usize| SourceSpan::new(line, col(begin), line, col(j));

            if first && chars[i..end].starts_with(&['D', 'O', ':']) {
                i += 3;
                self.push(TokenKind::Keyword, PROSE_MARKER, &trivia, span_to(i));
                let lead_end = (i..end).find(|&j| chars[j] != ' ' && chars[j] != '\t').unwrap_or(end);
                let prose_trivia = collect(&chars[i..lead_end]);
                let text = collect(&chars[lead_end..end]);
                self.push(TokenKind::Prose, &text, &prose_trivia, SourceSpan::new(line, col(lead_end), line, col(end)));
                return;
            }
            first = false;

            if chars[i..end].starts_with(&['/', '/']) {
                let text = collect(&chars[i..end]);
                self.push(TokenKind::Comment, &text, &trivia, span_to(end));
                return;
            }

            let kind;
            if c == '"' {
                i = self.string(line, chars, i, end);
                kind = TokenKind::StringLiteral;
            } else if c.is_ascii_digit() {
                let (next, is_float) = number_end(chars, i, end);
                i = next;
                kind = if is_float { TokenKind::FloatLiteral } else { TokenKind::IntLiteral };
                let text = collect(&chars[begin..i]);
                let in_range = if is_float {
                    text.parse::<f64>().map(f64::is_finite).unwrap_or(false)
                } else {
                    text.parse::<i64>().is_ok()
                };
                if !in_range {
                    self.diagnostics.push(Diagnostic::error(
                        "L005.bad-number",
                        format!("numeric literal `{text}` is out of range"),
                        span_to(i),
                    ));
                }
            } else if c.is_ascii_alphabetic() || c == '_' {
                while i < end && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word = collect(&chars[begin..i]);
                kind = if word == "TRUE" || word == "FALSE" {
                    TokenKind::BoolLiteral
                } else if is_keyword(&word) {
                    TokenKind::Keyword
                } else {
                    TokenKind::Identifier
                };
            } else if let Some(len) = operator_len(&chars[i..end]) {
                i += len;
                kind = TokenKind::Operator;
            } else {
                self.diagnostics.push(Diagnostic::error(
                    "L001.unexpected-char",
                    format!("unexpected character {c:?}"),
                    span_to(i + 1),
                ));
                i += 1;
                continue;
            }
            let text = collect(&chars[begin..i]);
            self.push(kind, &text, &trivia, span_to(i));
            trivia.clear();
        }
    }

    /// Returns the index just past the literal.
    fn string(&mut self, line: u32, chars: &[char], start: usize, end: usize) -> usize {
        let mut i = start + 1;
        while i < end {
            match chars[i] {
                '"' => return i + 1,
                '\\' => {
                    match chars.get(i + 1) {
                        Some('\\' | '"' | 'n' | 't' | 'r') => {}
                        other => self.diagnostics.push(Diagnostic::error(
                            "L003.bad-escape",
                            format!("unknown escape sequence \\{}", other.map(|c| c.to_string()).unwrap_or_default()),
                            SourceSpan::new(line, col(i), line, col(i + 2)),
                        )),
                    }
                    i += 2;
                }
                _ => i += 1,
            }
        }
        self.diagnostics.push(Diagnostic::error(
            "L002.unterminated-string",
            "unterminated string literal",
            SourceSpan::new(line, col(start), line, col(end)),
        ));
        end
    }
}

fn number_end(chars: &[char], start: usize, end: usize) -> (usize, bool) {
    let digits = |mut i: usize| {
        while i < end && chars[i].is_ascii_digit() {
            i += 1;
        }
        i
    };
    let mut i = digits(start);
    let mut is_float = false;
    if i + 1 < end && chars[i] == '.' && chars[i + 1].is_ascii_digit() {
        i = digits(i + 1);
        is_float = true;
    }
    if i < end && (chars[i] == 'e' || chars[i] == 'E') {
        let mut j = i + 1;
        if j < end && (chars[j] == '+' || chars[j] == '-') {
            j += 1;
        }
        if j < end && chars[j].is_ascii_digit() {
            i = digits(j);
            is_float = true;
        }
    }
    (i, is_float)
}

fn operator_len(rest: &[char]) -> Option<usize> {
    const TWO: &[[char; 2]] = &[['=', '='], ['!', '='], ['<', '='], ['>', '=']];
    if rest.len() >= 2 && TWO.iter().any(|op| rest[..2] == op[..]) {
        return Some(2);
    }
    match rest[0] {
        '+' | '-' | '*' | '/' | '<' | '>' | '=' | '(' | ')' | '[' | ']' | ',' | ':' | '≠' | '≤' | '≥' => Some(1),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn kinds(text: &str) -> Vec<(TokenKind, String)> {
        tokenize(text).unwrap().into_iter().map(|t| (t.kind, t.text)).collect()
    }

    #[test]
    fn minimal_statement() {
        use TokenKind::*;
        let got: Vec<_> = kinds("SET x TO 1").into_iter().filter(|(k, _)| *k != Newline).collect();
        assert_eq!(
            got,
            vec![
                (Keyword, "SET".into()),
                (Identifier, "x".into()),
                (Keyword, "TO".into()),
                (IntLiteral, "1".into()),
                (Eof, "".into())
            ]
        );
    }

    #[test]
    fn empty_input_is_just_eof() {
        assert_eq!(kinds(""), vec![(TokenKind::Eof, String::new())]);
    }

    #[test]
    fn dangling_operator_is_not_a_lex_error() {
        let tokens = tokenize("IF a >\n").unwrap();
        assert!(tokens.iter().any(|t| t.is_op(">")));
    }

    #[test]
    fn indent_and_dedent_are_synthesized() {
        let src = "FUNCTION f()\n    IF x THEN\n        RETURN 1\n    END IF\nEND FUNCTION\n";
        let tokens = tokenize(src).unwrap();
        let indents = tokens.iter().filter(|t| t.kind == TokenKind::Indent).count();
        let dedents = tokens.iter().filter(|t| t.kind == TokenKind::Dedent).count();
        assert_eq!((indents, dedents), (2, 2));
    }

    #[test]
    fn tabs_count_as_configured_width() {
        let src = "FUNCTION f()\n\tRETURN 1\n    RETURN 2\nEND FUNCTION\n";
        assert!(tokenize(src).is_ok());
        let narrow = LexOptions { tab_width: 2 };
        assert!(tokenize_with(src, &narrow).is_ok());
        let tokens = tokenize_with(src, &narrow).unwrap();
        // with width 2 the second body line is deeper than the first
        assert_eq!(tokens.iter().filter(|t| t.kind == TokenKind::Indent).count(), 2);
    }

    #[test]
    fn inconsistent_dedent_is_reported_with_span() {
        let src = "FUNCTION f()\n    IF x THEN\n        RETURN 1\n  RETURN 2\nEND FUNCTION\n";
        let diags = tokenize(src).unwrap_err();
        assert_eq!(diags[0].rule_id, "L004.inconsistent-dedent");
        assert_eq!(diags[0].span.start_line, 4);
    }

    #[test]
    fn unterminated_string() {
        let diags = tokenize("OUTPUT \"abc\n").unwrap_err();
        assert_eq!(diags[0].rule_id, "L002.unterminated-string");
        assert_eq!((diags[0].span.start_line, diags[0].span.start_col), (1, 8));
    }

    #[test]
    fn prose_keeps_quotes_and_slashes() {
        let tokens = tokenize("DO: don't sort // yet \"x").unwrap();
        assert!(tokens[0].is_keyword(PROSE_MARKER));
        assert_eq!(tokens[1].kind, TokenKind::Prose);
        assert_eq!(tokens[1].text, "don't sort // yet \"x");
    }

    #[test]
    fn comment_lines_do_not_change_indentation() {
        let src = "FUNCTION f()\n    SET a TO 1\n// flush-left note\n    RETURN a\nEND FUNCTION\n";
        let tokens = tokenize(src).unwrap();
        assert_eq!(tokens.iter().filter(|t| t.kind == TokenKind::Dedent).count(), 1);
    }

    #[test]
    fn unicode_comparison_operators() {
        let tokens = tokenize("IF a ≤ b AND c ≠ d THEN").unwrap();
        assert!(tokens.iter().any(|t| t.is_op("≤")));
        assert!(tokens.iter().any(|t| t.is_op("≠")));
    }

    #[test]
    fn crlf_is_trivia() {
        let src = "SET x TO 1\r\nOUTPUT x\r\n";
        let tokens = tokenize(src).unwrap();
        assert_eq!(reconstruct(&tokens), src);
        assert!(tokens.iter().all(|t| !t.text.contains('\r')));
    }

    #[test]
    fn numbers() {
        let tokens = tokenize("1 2.5 1e-05 3.0E+2 7").unwrap();
        let k: Vec<_> = tokens.iter().take(6).map(|t| (t.kind, t.text.as_str())).collect();
        assert_eq!(k[0], (TokenKind::IntLiteral, "1"));
        assert_eq!(k[1], (TokenKind::FloatLiteral, "2.5"));
        assert_eq!(k[2], (TokenKind::FloatLiteral, "1e-05"));
        assert_eq!(k[3], (TokenKind::FloatLiteral, "3.0E+2"));
        assert_eq!(k[4], (TokenKind::IntLiteral, "7"));
        assert!(tokenize("99999999999999999999").is_err());
        assert!(tokenize("7.").is_err(), "a trailing dot is not part of a number");
    }

    proptest! {
        #[test]
        fn lexing_is_lossless(src in "[ \t\r\nA-Za-z0-9_+*/<>=(),\\[\\]\"-]{0,80}") {
            if let Ok(tokens) = tokenize(&src) {
                prop_assert_eq!(reconstruct(&tokens), src);
            }
        }

        #[test]
        fn lexing_never_panics(src in "\\PC{0,60}") {
            let _ = tokenize(&src);
        }
    }
}
