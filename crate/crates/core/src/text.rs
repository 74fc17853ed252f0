//! Shared text preprocessing for documents, queries, and signatures.
//!
//! One pipeline is applied uniformly everywhere text is turned into terms:
//! split on non-alphanumerics, split camel-case humps and letter/digit
//! boundaries, lowercase, drop stop words (plus Java keywords when the
//! `code` flag is set), and drop single-character tokens.

use alloc::string::String;
use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

/// Identifies the bundled stop list so results can be tied to a resource
/// revision. Bump when either word list changes.
pub const STOPLIST_VERSION: &str = "english-java-v1";

/// The bundled English stop list (the Lucene/Elasticsearch default set).
pub const ENGLISH_STOP_WORDS: &[&str] = &[
    "a", "an", "and", "are", "as", "at", "be", "but", "by", "for", "if", "in", "into", "is", "it",
    "no", "not", "of", "on", "or", "such", "that", "the", "their", "then", "there", "these",
    "they", "this", "to", "was", "will", "with",
];

/// Java reserved words and literals, dropped when preprocessing code text.
pub const JAVA_KEYWORDS: &[&str] = &[
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class", "const",
    "continue", "default", "do", "double", "else", "enum", "extends", "false", "final", "finally",
    "float", "for", "goto", "if", "implements", "import", "instanceof", "int", "interface",
    "long", "native", "new", "null", "package", "private", "protected", "public", "return",
    "short", "static", "strictfp", "super", "switch", "synchronized", "this", "throw", "throws",
    "transient", "true", "try", "void", "volatile", "while",
];

fn is_stop_word(token: &str) -> bool {
    ENGLISH_STOP_WORDS.binary_search(&token).is_ok()
}

fn is_java_keyword(token: &str) -> bool {
    JAVA_KEYWORDS.binary_search(&token).is_ok()
}

/// An ordered list of lowercase terms produced by [`preprocess`].
///
/// Tokens contain only `[a-z0-9]`, are at least two characters long, and are
/// never stop words.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TokenStream {
    tokens: Vec<String>,
}

impl TokenStream {
    /// Wraps already-normalized terms. Callers must only pass tokens that
    /// came out of [`preprocess`] (or an empty list).
    pub fn from_tokens(tokens: Vec<String>) -> Self {
        Self { tokens }
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn iter(&self) -> core::slice::Iter<'_, String> {
        self.tokens.iter()
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Space-joined token text, the inverse direction of [`preprocess`].
    pub fn join(&self) -> String {
        self.tokens.join(" ")
    }

    pub fn into_tokens(self) -> Vec<String> {
        self.tokens
    }
}

impl<'a> IntoIterator for &'a TokenStream {
    type Item = &'a String;
    type IntoIter = core::slice::Iter<'a, String>;

    fn into_iter(self) -> Self::IntoIter {
        self.tokens.iter()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum CharClass {
    Lower,
    Upper,
    Digit,
}

impl CharClass {
    fn of(c: char) -> Option<Self> {
        if c.is_ascii_lowercase() {
            Some(Self::Lower)
        } else if c.is_ascii_uppercase() {
            Some(Self::Upper)
        } else if c.is_ascii_digit() {
            Some(Self::Digit)
        } else {
            None
        }
    }
}

/// Splits one alphanumeric word on camel humps, acronym runs, and
/// letter/digit boundaries. `XMLHttpRequest2` -> `[XML, Http, Request, 2]`.
fn split_word(word: &str, out: &mut Vec<String>) {
    let chars: Vec<char> = word.chars().collect();
    let mut start = 0;
    for i in 1..chars.len() {
        let prev = CharClass::of(chars[i - 1]).expect("alphanumeric run");
        let cur = CharClass::of(chars[i]).expect("alphanumeric run");
        let boundary = match (prev, cur) {
            (CharClass::Lower, CharClass::Upper) => true,
            (CharClass::Digit, CharClass::Lower | CharClass::Upper) => true,
            (CharClass::Lower | CharClass::Upper, CharClass::Digit) => true,
            // End of an acronym run: HTTPServer -> HTTP | Server.
            (CharClass::Upper, CharClass::Upper) => {
                matches!(chars.get(i + 1).copied().map(CharClass::of), Some(Some(CharClass::Lower)))
            }
            _ => false,
        };
        if boundary {
            out.push(chars[start..i].iter().collect());
            start = i;
        }
    }
    out.push(chars[start..].iter().collect());
}

/// Turns raw text into a stream of normalized terms.
///
/// When `code` is set, Java keywords are dropped in addition to the English
/// stop list. Order is preserved; empty input yields an empty stream.
pub fn preprocess(text: &str, code: bool) -> TokenStream {
    let mut pieces: Vec<String> = Vec::new();
    let mut run = String::new();
    for c in text.chars() {
        if c.is_ascii_alphanumeric() {
            run.push(c);
        } else if !run.is_empty() {
            split_word(&run, &mut pieces);
            run.clear();
        }
    }
    if !run.is_empty() {
        split_word(&run, &mut pieces);
    }

    let tokens = pieces
        .into_iter()
        .map(|p| p.to_ascii_lowercase())
        .filter(|t| t.len() >= 2)
        .filter(|t| !is_stop_word(t))
        .filter(|t| !code || !is_java_keyword(t))
        .collect();
    TokenStream { tokens }
}
