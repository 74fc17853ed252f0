//! Domain types shared across the pipeline.

use alloc::collections::BTreeSet;
use alloc::string::String;
use serde::{Deserialize, Serialize};

/// A single source file inside a versioned snapshot of a system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceDocument {
    /// Opaque unique id, derived from (system, version, path).
    pub doc_id: String,
    /// Repo-relative file path with `/` separators.
    pub path: String,
    pub system: String,
    pub version: String,
    /// Full file text. Non-empty for every indexed document.
    pub content: String,
}

/// A bug report used as a query, with ground-truth fixed files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BugReport {
    pub bug_id: String,
    pub system: String,
    pub version: String,
    pub title: String,
    #[serde(default)]
    pub description: String,
    /// Repo-relative paths of the files changed by the fix.
    pub fixed_files: BTreeSet<String>,
}

impl BugReport {
    /// The raw query text: title and description joined by a blank line.
    pub fn query_text(&self) -> String {
        if self.description.is_empty() {
            self.title.clone()
        } else {
            let mut s = String::with_capacity(self.title.len() + self.description.len() + 2);
            s.push_str(&self.title);
            s.push_str("\n\n");
            s.push_str(&self.description);
            s
        }
    }
}
