//! Tolerant structural Java scanner.
//!
//! Extracts member-level code segments (methods, constructors, interfaces,
//! enums) for oracle judgment, and declaration signatures (class headers,
//! method headers, field declarations) for query expansion. The scanner
//! tracks braces and recognizes declaration headers rather than parsing a
//! full grammar, so it survives arbitrary real-world Java; when the brace
//! structure itself is broken it degrades to a single whole-file segment.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

use crate::text::{self, TokenStream};
use crate::types::SourceDocument;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SegmentKind {
    Method,
    Constructor,
    Interface,
    Enum,
    FallbackWholeFile,
}

/// One judgeable unit of a source document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSegment {
    pub doc_id: String,
    pub kind: SegmentKind,
    pub name: String,
    pub body_text: String,
    pub start_line: u32,
    pub end_line: u32,
}

/// Declaration headers of one document, one normalized line each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureSet {
    pub doc_id: String,
    pub signatures: Vec<String>,
}

#[derive(Debug, Clone, Copy)]
pub struct SegmenterConfig {
    /// Character budget per segment; longer bodies are cut at the budget and
    /// given a trailing marker line.
    pub max_segment_chars: usize,
}

impl Default for SegmenterConfig {
    fn default() -> Self {
        Self { max_segment_chars: 24_000 }
    }
}

/// Splits a document into member-level segments.
///
/// Methods, constructors, interface declarations, and enum declarations each
/// become one segment; nested members produce their own segments. A file
/// whose brace structure cannot be followed — or that yields no members at
/// all — becomes a single whole-file fallback segment, so every document
/// stays eligible for oracle judgment.
pub fn segment_document(doc: &SourceDocument, cfg: &SegmenterConfig) -> Vec<CodeSegment> {
    let fallback = |cfg: &SegmenterConfig| {
        let name = file_stem(&doc.path);
        alloc::vec![CodeSegment {
            doc_id: doc.doc_id.clone(),
            kind: SegmentKind::FallbackWholeFile,
            name,
            body_text: truncate_body(&doc.content, cfg.max_segment_chars),
            start_line: 1,
            end_line: doc.content.lines().count().max(1) as u32,
        }]
    };

    match scan(&doc.content) {
        Err(_) => fallback(cfg),
        Ok(units) if units.segments.is_empty() => fallback(cfg),
        Ok(units) => {
            let lines = LineTable::new(&doc.content);
            units
                .segments
                .into_iter()
                .map(|seg| CodeSegment {
                    doc_id: doc.doc_id.clone(),
                    kind: seg.kind,
                    name: seg.name,
                    body_text: truncate_body(
                        &doc.content[seg.start..seg.end],
                        cfg.max_segment_chars,
                    ),
                    start_line: lines.line_of(seg.start),
                    end_line: lines.line_of(seg.end.saturating_sub(1)),
                })
                .collect()
        }
    }
}

/// Collects class, method, and field declaration headers: no bodies, no
/// initializers, no comments, annotations stripped. Parse failure yields an
/// empty set, never an error.
pub fn extract_signatures(doc: &SourceDocument) -> SignatureSet {
    let signatures = match scan(&doc.content) {
        Ok(units) => units.signatures,
        Err(_) => Vec::new(),
    };
    SignatureSet { doc_id: doc.doc_id.clone(), signatures }
}

/// One preprocessed phrase per signature (code flag on); empty phrases drop.
pub fn signatures_to_phrases(sig: &SignatureSet) -> Vec<TokenStream> {
    sig.signatures
        .iter()
        .map(|s| text::preprocess(s, true))
        .filter(|p| !p.is_empty())
        .collect()
}

fn file_stem(path: &str) -> String {
    let name = path.rsplit('/').next().unwrap_or(path);
    name.split('.').next().unwrap_or(name).to_string()
}

fn truncate_body(body: &str, budget: usize) -> String {
    if body.chars().count() <= budget {
        return body.to_string();
    }
    let cut: String = body.chars().take(budget).collect();
    cut + "\n// [segment truncated]"
}

struct LineTable {
    starts: Vec<usize>,
}

impl LineTable {
    fn new(src: &str) -> Self {
        let mut starts = alloc::vec![0usize];
        for (i, b) in src.bytes().enumerate() {
            if b == b'\n' {
                starts.push(i + 1);
            }
        }
        Self { starts }
    }

    fn line_of(&self, byte_off: usize) -> u32 {
        self.starts.partition_point(|&s| s <= byte_off) as u32
    }
}

// ── scanner internals ──────────────────────────────────────────────────

#[derive(Debug)]
struct RawSegment {
    kind: SegmentKind,
    name: String,
    start: usize,
    end: usize, // exclusive byte offset just past the closing brace
}

struct ScanOut {
    segments: Vec<RawSegment>,
    signatures: Vec<String>,
}

struct ParseFailure;

/// Comments and string/char literals blanked to spaces (newlines kept), with
/// each retained char paired with its byte offset in the original text.
fn sanitize(src: &str) -> Vec<(usize, char)> {
    #[derive(PartialEq)]
    enum State {
        Code,
        LineComment,
        BlockComment,
        Str,
        Chr,
        TextBlock,
    }
    let mut out = Vec::with_capacity(src.len());
    let mut state = State::Code;
    let mut chars = src.char_indices().peekable();
    let mut escaped = false;

    while let Some((off, c)) = chars.next() {
        let next = chars.peek().map(|&(_, n)| n);
        match state {
            State::Code => match c {
                '/' if next == Some('/') => {
                    state = State::LineComment;
                    out.push((off, ' '));
                }
                '/' if next == Some('*') => {
                    state = State::BlockComment;
                    out.push((off, ' '));
                }
                '"' => {
                    // Peek two ahead for a text block opener.
                    let mut look = chars.clone();
                    let two = (look.next().map(|(_, a)| a), look.next().map(|(_, b)| b));
                    if two == (Some('"'), Some('"')) {
                        chars.next();
                        chars.next();
                        state = State::TextBlock;
                    } else {
                        state = State::Str;
                    }
                    out.push((off, ' '));
                    escaped = false;
                }
                '\'' => {
                    state = State::Chr;
                    out.push((off, ' '));
                    escaped = false;
                }
                _ => out.push((off, c)),
            },
            State::LineComment => {
                if c == '\n' {
                    state = State::Code;
                    out.push((off, '\n'));
                } else {
                    out.push((off, ' '));
                }
            }
            State::BlockComment => {
                if c == '*' && next == Some('/') {
                    chars.next();
                    state = State::Code;
                    out.push((off, ' '));
                } else {
                    out.push((off, if c == '\n' { '\n' } else { ' ' }));
                }
            }
            State::Str | State::Chr => {
                let terminator = if state == State::Str { '"' } else { '\'' };
                if escaped {
                    escaped = false;
                    out.push((off, ' '));
                } else if c == '\\' {
                    escaped = true;
                    out.push((off, ' '));
                } else if c == terminator {
                    state = State::Code;
                    out.push((off, ' '));
                } else if c == '\n' {
                    // Plain literals cannot span lines; recover.
                    state = State::Code;
                    out.push((off, '\n'));
                } else {
                    out.push((off, ' '));
                }
            }
            State::TextBlock => {
                if c == '"' {
                    let mut look = chars.clone();
                    let two = (look.next().map(|(_, a)| a), look.next().map(|(_, b)| b));
                    if two == (Some('"'), Some('"')) {
                        chars.next();
                        chars.next();
                        state = State::Code;
                    }
                    out.push((off, ' '));
                } else {
                    out.push((off, if c == '\n' { '\n' } else { ' ' }));
                }
            }
        }
    }
    out
}

#[derive(Default, Clone)]
struct Header {
    text: String,
    start: Option<usize>,
    paren_depth: u32,
}

impl Header {
    fn reset(&mut self) {
        self.text.clear();
        self.start = None;
        self.paren_depth = 0;
    }

    fn push(&mut self, off: usize, c: char) {
        if c == '(' {
            self.paren_depth += 1;
        } else if c == ')' {
            self.paren_depth = self.paren_depth.saturating_sub(1);
        }
        if self.start.is_none() && !c.is_whitespace() {
            self.start = Some(off);
        }
        self.text.push(c);
    }
}

enum Frame {
    Type { is_segment: Option<SegmentKind>, name: String, seg_start: usize },
    Method { ctor: bool, name: String, seg_start: usize },
    Anonymous { resume: Option<Header> },
}

/// Statement keywords that take a parenthesized clause before their block.
const PAREN_CONTROL: &[&str] =
    &["assert", "catch", "for", "if", "return", "super", "switch", "synchronized", "this", "throw", "while"];

/// Statement keywords that open a block with no parentheses.
const BARE_CONTROL: &[&str] = &["case", "default", "do", "else", "finally", "static", "try"];

fn scan(src: &str) -> Result<ScanOut, ParseFailure> {
    let chars = sanitize(src);
    let mut frames: Vec<Frame> = Vec::new();
    let mut header = Header::default();
    let mut segments: Vec<RawSegment> = Vec::new();
    let mut signatures: Vec<String> = Vec::new();

    for &(off, c) in &chars {
        match c {
            '{' => {
                if header.paren_depth > 0 {
                    // Brace inside an open parenthesis (annotation array
                    // value, lambda argument): suspend the header and resume
                    // it when this block closes.
                    let saved = core::mem::take(&mut header);
                    frames.push(Frame::Anonymous { resume: Some(saved) });
                } else {
                    let frame = classify(&header, &frames, off, &mut signatures);
                    frames.push(frame);
                    header.reset();
                }
            }
            '}' => match frames.pop() {
                None => return Err(ParseFailure),
                Some(Frame::Method { ctor, name, seg_start }) => {
                    let kind =
                        if ctor { SegmentKind::Constructor } else { SegmentKind::Method };
                    segments.push(RawSegment {
                        kind,
                        name,
                        start: seg_start,
                        end: off + 1,
                    });
                    header.reset();
                }
                Some(Frame::Type { is_segment, name, seg_start }) => {
                    if let Some(kind) = is_segment {
                        segments.push(RawSegment { kind, name, start: seg_start, end: off + 1 });
                    }
                    header.reset();
                }
                Some(Frame::Anonymous { resume }) => match resume {
                    Some(saved) => header = saved,
                    None => header.reset(),
                },
            },
            ';' if header.paren_depth == 0 => {
                flush_statement(&header, &frames, &mut signatures);
                header.reset();
            }
            _ => header.push(off, c),
        }
    }

    if frames.is_empty() {
        segments.sort_by_key(|s| s.start);
        Ok(ScanOut { segments, signatures })
    } else {
        Err(ParseFailure)
    }
}

fn classify(
    header: &Header,
    frames: &[Frame],
    brace_off: usize,
    signatures: &mut Vec<String>,
) -> Frame {
    let seg_start = header.start.unwrap_or(brace_off);
    let stripped = strip_annotations(&header.text);
    let trimmed = stripped.trim();
    if trimmed.is_empty() {
        return Frame::Anonymous { resume: None };
    }
    let toks = word_tokens(trimmed);
    if toks.is_empty() {
        return Frame::Anonymous { resume: None };
    }

    if let Some((kind, name)) = detect_reserved_type(&toks) {
        signatures.push(normalize_ws(trimmed));
        return Frame::Type { is_segment: kind, name, seg_start };
    }
    if trimmed.contains("->") {
        return Frame::Anonymous { resume: None };
    }
    if trimmed.contains('=') {
        // A field whose initializer opens a brace (array/anonymous class).
        if directly_in_type(frames) {
            let prefix = trimmed.split('=').next().unwrap_or("");
            let sig = normalize_ws(prefix);
            if !sig.is_empty() {
                signatures.push(sig);
            }
        }
        return Frame::Anonymous { resume: None };
    }
    if is_control_header(trimmed, &toks) {
        return Frame::Anonymous { resume: None };
    }
    if let Some(name) = detect_record(trimmed) {
        signatures.push(normalize_ws(trimmed));
        return Frame::Type { is_segment: None, name, seg_start };
    }
    if let Some(name) = ident_before_paren(trimmed) {
        signatures.push(normalize_ws(&cut_at_param_close(trimmed)));
        let ctor = nearest_type_name(frames).is_some_and(|t| t == name);
        return Frame::Method { ctor, name, seg_start };
    }
    Frame::Anonymous { resume: None }
}

fn flush_statement(header: &Header, frames: &[Frame], signatures: &mut Vec<String>) {
    if !directly_in_type(frames) {
        return;
    }
    let stripped = strip_annotations(&header.text);
    let trimmed = stripped.trim();
    if trimmed.is_empty() {
        return;
    }
    let decl = trimmed.split('=').next().unwrap_or("").trim();
    if decl.is_empty() {
        return;
    }
    let sig = if decl.contains('(') {
        // Abstract/interface method declaration.
        normalize_ws(&cut_at_param_close(decl))
    } else {
        normalize_ws(decl)
    };
    if !sig.is_empty() {
        signatures.push(sig);
    }
}

fn directly_in_type(frames: &[Frame]) -> bool {
    matches!(frames.last(), Some(Frame::Type { .. }))
}

fn nearest_type_name(frames: &[Frame]) -> Option<&str> {
    frames.iter().rev().find_map(|f| match f {
        Frame::Type { name, .. } => Some(name.as_str()),
        _ => None,
    })
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '$'
}

fn word_tokens(s: &str) -> Vec<&str> {
    s.split(|c: char| !is_ident_char(c)).filter(|t| !t.is_empty()).collect()
}

/// class / interface / enum / @interface declarations. The keyword must be
/// followed by an identifier so `Foo.class` literals do not count. Returns
/// the segment kind (None for plain classes, which are containers only).
fn detect_reserved_type(toks: &[&str]) -> Option<(Option<SegmentKind>, String)> {
    for (i, tok) in toks.iter().enumerate() {
        let kind = match *tok {
            "class" => Some(None),
            "interface" => Some(Some(SegmentKind::Interface)),
            "enum" => Some(Some(SegmentKind::Enum)),
            _ => None,
        };
        if let Some(seg) = kind {
            if let Some(name) = toks.get(i + 1) {
                if !name.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                    return Some((seg, (*name).to_string()));
                }
            }
        }
    }
    None
}

/// `record Name(` headers. `record` is a contextual keyword, so require the
/// literal shape: the word, an identifier, then a parameter list or the
/// body brace.
fn detect_record(s: &str) -> Option<String> {
    let mut rest = s;
    while let Some(pos) = rest.find("record") {
        let before_ok = rest[..pos].chars().next_back().is_none_or(|c| !is_ident_char(c));
        let after = &rest[pos + "record".len()..];
        let after_ok = after.chars().next().is_none_or(|c| !is_ident_char(c));
        if before_ok && after_ok {
            let after = after.trim_start();
            let name: String = after.chars().take_while(|&c| is_ident_char(c)).collect();
            if !name.is_empty() && !name.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                let tail = after[name.len()..].trim_start();
                if tail.is_empty() || tail.starts_with('(') {
                    return Some(name);
                }
            }
        }
        rest = &rest[pos + "record".len()..];
    }
    None
}

fn is_control_header(s: &str, toks: &[&str]) -> bool {
    if toks.iter().any(|t| *t == "new") {
        return true;
    }
    if BARE_CONTROL.contains(&toks[0]) {
        return true;
    }
    if let Some(paren) = s.find('(') {
        let before: String = s[..paren]
            .chars()
            .rev()
            .skip_while(|c| c.is_whitespace())
            .take_while(|&c| is_ident_char(c))
            .collect();
        let tok: String = before.chars().rev().collect();
        return PAREN_CONTROL.contains(&tok.as_str());
    }
    false
}

fn ident_before_paren(s: &str) -> Option<String> {
    let paren = s.find('(')?;
    let name: String = s[..paren]
        .chars()
        .rev()
        .skip_while(|c| c.is_whitespace())
        .take_while(|&c| is_ident_char(c))
        .collect();
    if name.is_empty() || name.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    Some(name.chars().rev().collect())
}

/// Header text up to and including the `)` closing the first parameter
/// list; drops `throws` clauses and anything after.
fn cut_at_param_close(s: &str) -> String {
    let Some(open) = s.find('(') else { return s.to_string() };
    let mut depth = 0u32;
    for (i, c) in s[open..].char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return s[..open + i + 1].to_string();
                }
            }
            _ => {}
        }
    }
    s.to_string()
}

/// Removes `@Annotation` and `@Annotation(...)` uses; `@interface` (an
/// annotation type declaration) is kept.
fn strip_annotations(s: &str) -> String {
    let chars: Vec<char> = s.chars().collect();
    let mut out = String::with_capacity(s.len());
    let mut i = 0;
    while i < chars.len() {
        if chars[i] == '@' {
            let mut j = i + 1;
            while j < chars.len() && chars[j].is_whitespace() {
                j += 1;
            }
            let word_start = j;
            while j < chars.len() && (is_ident_char(chars[j]) || chars[j] == '.') {
                j += 1;
            }
            let word: String = chars[word_start..j].iter().collect();
            if word == "interface" {
                out.push_str("@interface");
                i = j;
                continue;
            }
            // Skip an optional argument list.
            let mut k = j;
            while k < chars.len() && chars[k].is_whitespace() {
                k += 1;
            }
            if k < chars.len() && chars[k] == '(' {
                let mut depth = 0u32;
                while k < chars.len() {
                    match chars[k] {
                        '(' => depth += 1,
                        ')' => {
                            depth -= 1;
                            if depth == 0 {
                                k += 1;
                                break;
                            }
                        }
                        _ => {}
                    }
                    k += 1;
                }
                i = k;
            } else {
                i = j;
            }
            out.push(' ');
        } else {
            out.push(chars[i]);
            i += 1;
        }
    }
    out
}

fn normalize_ws(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut in_ws = true;
    for c in s.chars() {
        if c.is_whitespace() {
            if !in_ws {
                out.push(' ');
                in_ws = true;
            }
        } else {
            out.push(c);
            in_ws = false;
        }
    }
    while out.ends_with(' ') {
        out.pop();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn doc(content: &str) -> SourceDocument {
        SourceDocument {
            doc_id: "d1".to_string(),
            path: "pkg/Sample.java".to_string(),
            system: "sys".to_string(),
            version: "1.0".to_string(),
            content: content.to_string(),
        }
    }

    fn segs(content: &str) -> Vec<CodeSegment> {
        segment_document(&doc(content), &SegmenterConfig::default())
    }

    const TWO_METHODS_ONE_CTOR: &str = r#"
public class Account {
    private int balance;

    public Account(int initial) {
        this.balance = initial;
    }

    public void deposit(int amount) {
        balance += amount;
    }

    public int getBalance() {
        return balance;
    }
}
"#;

    #[test]
    fn counts_methods_and_constructors() {
        let s = segs(TWO_METHODS_ONE_CTOR);
        assert_eq!(s.len(), 3);
        let kinds: Vec<SegmentKind> = s.iter().map(|x| x.kind).collect();
        assert_eq!(
            kinds,
            vec![SegmentKind::Constructor, SegmentKind::Method, SegmentKind::Method]
        );
        assert_eq!(s[0].name, "Account");
        assert_eq!(s[1].name, "deposit");
    }

    #[test]
    fn interface_only_file_yields_one_interface_segment() {
        let s = segs("interface I { void f(); }");
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].kind, SegmentKind::Interface);
        assert_eq!(s[0].name, "I");
        assert!(s[0].body_text.contains("void f();"));
    }

    #[test]
    fn unbalanced_braces_fall_back_to_whole_file() {
        let s = segs("class Broken { void f() { if (x) { }");
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].kind, SegmentKind::FallbackWholeFile);
        assert_eq!(s[0].start_line, 1);
        assert_eq!(s[0].name, "Sample");
    }

    #[test]
    fn memberless_file_falls_back_to_whole_file() {
        let s = segs("class Holder { int x; }");
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].kind, SegmentKind::FallbackWholeFile);
    }

    #[test]
    fn enum_segment_includes_body_and_nested_method() {
        let src = r#"
public enum Mode {
    ON, OFF;

    public boolean active() {
        return this == ON;
    }
}
"#;
        let s = segs(src);
        assert_eq!(s.len(), 2);
        assert_eq!(s[0].kind, SegmentKind::Enum);
        assert!(s[0].body_text.contains("active"));
        assert_eq!(s[1].kind, SegmentKind::Method);
        assert_eq!(s[1].name, "active");
    }

    #[test]
    fn braces_in_comments_and_strings_are_ignored() {
        let src = r#"
class C {
    // a stray { in a comment
    /* and } another { here */
    String s = "{{{";
    char c = '}';

    void go() {
        log("}}");
    }
}
"#;
        let s = segs(src);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].name, "go");
        assert_eq!(s[0].kind, SegmentKind::Method);
    }

    #[test]
    fn anonymous_class_methods_become_segments() {
        let src = r#"
class C {
    void start() {
        Runnable r = new Runnable() {
            public void run() {
                work();
            }
        };
        r.run();
    }
}
"#;
        let s = segs(src);
        let names: Vec<&str> = s.iter().map(|x| x.name.as_str()).collect();
        assert_eq!(names, vec!["start", "run"]);
        // run() nests inside start()'s span.
        assert!(s[0].start_line < s[1].start_line && s[1].end_line <= s[0].end_line);
    }

    #[test]
    fn control_flow_blocks_are_not_segments() {
        let src = r#"
class C {
    int f(int n) {
        for (int i = 0; i < n; i++) {
            if (i % 2 == 0) {
                n += i;
            } else {
                n -= i;
            }
        }
        while (n > 10) { n /= 2; }
        switch (n) {
            case 1: { n = 0; break; }
            default: { }
        }
        try {
            g();
        } catch (Exception e) {
            return -1;
        } finally {
            h();
        }
        synchronized (this) { n++; }
        do { n--; } while (n > 0);
        return n;
    }
}
"#;
        let s = segs(src);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].name, "f");
    }

    #[test]
    fn line_numbers_are_one_based_and_inclusive() {
        let src = "class C {\n    void f() {\n        int x = 1;\n    }\n}\n";
        let s = segs(src);
        assert_eq!(s.len(), 1);
        assert_eq!((s[0].start_line, s[0].end_line), (2, 4));
        assert_eq!(s[0].body_text, "void f() {\n        int x = 1;\n    }");
    }

    #[test]
    fn nested_class_members_get_their_own_segments() {
        let src = r#"
class Outer {
    void outerMethod() { }

    static class Inner {
        Inner() { }
        void innerMethod() { }
    }
}
"#;
        let s = segs(src);
        let names: Vec<&str> = s.iter().map(|x| x.name.as_str()).collect();
        assert_eq!(names, vec!["outerMethod", "Inner", "innerMethod"]);
        assert_eq!(s[1].kind, SegmentKind::Constructor);
    }

    #[test]
    fn long_segment_is_truncated_with_marker() {
        let body: String = core::iter::repeat("x += 1; ").take(100).collect();
        let src = alloc::format!("class C {{ void f() {{ {body} }} }}");
        let cfg = SegmenterConfig { max_segment_chars: 40 };
        let s = segment_document(&doc(&src), &cfg);
        assert_eq!(s.len(), 1);
        assert!(s[0].body_text.chars().count() <= 40 + "\n// [segment truncated]".len());
        assert!(s[0].body_text.ends_with("// [segment truncated]"));
    }

    #[test]
    fn concatenated_segments_keep_every_method_body() {
        let s = segs(TWO_METHODS_ONE_CTOR);
        for body in ["this.balance = initial;", "balance += amount;", "return balance;"] {
            assert!(s.iter().any(|x| x.body_text.contains(body)), "missing {body}");
        }
    }

    #[test]
    fn signature_extraction_matches_declaration_headers() {
        let sig = extract_signatures(&doc("class Foo { int bar; void baz(String s){ bar = 1; } }"));
        assert_eq!(sig.signatures, vec!["class Foo", "int bar", "void baz(String s)"]);
    }

    #[test]
    fn field_initializers_are_dropped() {
        let sig = extract_signatures(&doc("class C { int x = 5; int[] a = {1, 2}; }"));
        assert_eq!(sig.signatures, vec!["class C", "int x", "int[] a"]);
    }

    #[test]
    fn parse_failure_means_empty_signatures() {
        let sig = extract_signatures(&doc("class Broken { void f() {"));
        assert!(sig.signatures.is_empty());
    }

    #[test]
    fn annotations_are_stripped_from_signatures() {
        let src = r#"
@Deprecated
public class Svc {
    @Inject private Engine engine;
    @Override
    @SuppressWarnings("all")
    public void start(@Nullable String name) { }
}
"#;
        let sig = extract_signatures(&doc(src));
        assert_eq!(
            sig.signatures,
            vec![
                "public class Svc",
                "private Engine engine",
                "public void start( String name)"
            ]
        );
    }

    #[test]
    fn interface_method_declarations_become_signatures() {
        let sig = extract_signatures(&doc(
            "interface Store { int size(); void put(String k, Object v) throws IOException; }",
        ));
        assert_eq!(
            sig.signatures,
            vec!["interface Store", "int size()", "void put(String k, Object v)"]
        );
    }

    #[test]
    fn throws_clause_is_cut_from_method_signatures() {
        let sig = extract_signatures(&doc(
            "class C { void f(int a) throws IOException { } }",
        ));
        assert_eq!(sig.signatures, vec!["class C", "void f(int a)"]);
    }

    #[test]
    fn phrases_drop_keywords_and_short_tokens() {
        let sig = SignatureSet {
            doc_id: "d1".to_string(),
            signatures: vec!["void fetchResource(HttpClient c)".to_string()],
        };
        let phrases = signatures_to_phrases(&sig);
        assert_eq!(phrases.len(), 1);
        assert_eq!(phrases[0].tokens(), ["fetch", "resource", "http", "client"]);
    }

    #[test]
    fn phrases_of_class_header() {
        let sig = SignatureSet {
            doc_id: "d1".to_string(),
            signatures: vec!["class Foo".to_string()],
        };
        let phrases = signatures_to_phrases(&sig);
        assert_eq!(phrases.len(), 1);
        assert_eq!(phrases[0].tokens(), ["foo"]);
    }

    #[test]
    fn phrases_of_empty_set_is_empty() {
        let sig = SignatureSet { doc_id: "d1".to_string(), signatures: vec![] };
        assert!(signatures_to_phrases(&sig).is_empty());
    }

    #[test]
    fn generic_and_static_members_parse() {
        let src = r#"
public class Box<T> {
    private static final Map<String, List<T>> CACHE = new HashMap<>();

    static {
        CACHE.clear();
    }

    public <R> R map(Function<T, R> fn) {
        return fn.apply(value());
    }
}
"#;
        let s = segs(src);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].name, "map");
        let sig = extract_signatures(&doc(src));
        assert!(sig.signatures.contains(&"public class Box<T>".to_string()));
        assert!(sig
            .signatures
            .contains(&"private static final Map<String, List<T>> CACHE".to_string()));
    }

    #[test]
    fn lambdas_inside_method_bodies_do_not_create_segments() {
        let src = r#"
class C {
    void f(List<String> xs) {
        xs.forEach(x -> {
            sink(x);
        });
        Runnable r = () -> { tick(); };
        r.run();
    }
}
"#;
        let s = segs(src);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].name, "f");
    }
}
