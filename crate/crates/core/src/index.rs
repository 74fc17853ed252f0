//! Inverted index with Okapi BM25 scoring and filtered top-K retrieval.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use serde::{Deserialize, Serialize};

use crate::text::{self, TokenStream};
use crate::types::SourceDocument;

/// BM25 free parameters. The defaults are the stock Lucene values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bm25Params {
    pub k1: f64,
    pub b: f64,
}

impl Default for Bm25Params {
    fn default() -> Self {
        Self { k1: 1.2, b: 0.75 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocMeta {
    pub doc_id: String,
    pub system: String,
    pub version: String,
    pub path: String,
}

/// A term's occurrence in one document: (internal doc index, term frequency).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Posting {
    pub doc: u32,
    pub tf: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub enum IndexError {
    /// No documents survived preprocessing.
    EmptyCorpus,
    UnknownDoc(String),
    EmptyQuery,
}

impl fmt::Display for IndexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptyCorpus => write!(f, "no indexable documents (empty corpus)"),
            Self::UnknownDoc(id) => write!(f, "unknown doc_id: {id}"),
            Self::EmptyQuery => write!(f, "query has no tokens"),
        }
    }
}

impl core::error::Error for IndexError {}

/// A retrieval request: preprocessed tokens, optional exact filters, and the
/// number of results to return.
#[derive(Debug, Clone)]
pub struct Query {
    pub tokens: TokenStream,
    pub system_filter: Option<String>,
    pub version_filter: Option<String>,
    pub k: usize,
}

impl Query {
    pub fn new(tokens: TokenStream, k: usize) -> Self {
        Self { tokens, system_filter: None, version_filter: None, k }
    }

    pub fn with_filters(mut self, system: &str, version: &str) -> Self {
        self.system_filter = Some(String::from(system));
        self.version_filter = Some(String::from(version));
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchHit {
    pub doc_id: String,
    pub path: String,
    pub score: f64,
}

/// Term -> postings store with per-document lengths and corpus statistics.
///
/// Documents are ordered internally by (system, version, path), so the built
/// index — and anything serialized from it — does not depend on input order.
/// After build the index is immutable and safe to share across threads.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InvertedIndex {
    params: Bm25Params,
    postings: BTreeMap<String, Vec<Posting>>,
    doc_lengths: Vec<u32>,
    doc_meta: Vec<DocMeta>,
    doc_index: BTreeMap<String, u32>,
    avg_doc_length: f64,
    /// Paths of documents rejected because preprocessing left no tokens.
    skipped: Vec<String>,
}

impl InvertedIndex {
    /// Builds the index, preprocessing content with the code flag on.
    ///
    /// Documents whose token stream comes out empty are skipped and recorded
    /// in [`InvertedIndex::skipped_paths`]; an index must end up with at
    /// least one document.
    pub fn build(docs: &[SourceDocument], params: Bm25Params) -> Result<Self, IndexError> {
        let mut ordered: Vec<&SourceDocument> = docs.iter().collect();
        ordered.sort_by(|a, b| {
            (&a.system, &a.version, &a.path).cmp(&(&b.system, &b.version, &b.path))
        });

        let mut postings: BTreeMap<String, Vec<Posting>> = BTreeMap::new();
        let mut doc_lengths = Vec::new();
        let mut doc_meta = Vec::new();
        let mut doc_index = BTreeMap::new();
        let mut skipped = Vec::new();

        for doc in ordered {
            let tokens = text::preprocess(&doc.content, true);
            if tokens.is_empty() {
                skipped.push(doc.path.clone());
                continue;
            }
            let idx = doc_meta.len() as u32;
            let mut tf: BTreeMap<&str, u32> = BTreeMap::new();
            for t in tokens.iter() {
                *tf.entry(t.as_str()).or_insert(0) += 1;
            }
            for (term, count) in tf {
                postings
                    .entry(String::from(term))
                    .or_default()
                    .push(Posting { doc: idx, tf: count });
            }
            doc_lengths.push(tokens.len() as u32);
            doc_index.insert(doc.doc_id.clone(), idx);
            doc_meta.push(DocMeta {
                doc_id: doc.doc_id.clone(),
                system: doc.system.clone(),
                version: doc.version.clone(),
                path: doc.path.clone(),
            });
        }

        if doc_meta.is_empty() {
            return Err(IndexError::EmptyCorpus);
        }
        let avg_doc_length =
            doc_lengths.iter().map(|&l| l as f64).sum::<f64>() / doc_lengths.len() as f64;

        Ok(Self { params, postings, doc_lengths, doc_meta, doc_index, avg_doc_length, skipped })
    }

    pub fn doc_count(&self) -> usize {
        self.doc_meta.len()
    }

    pub fn avg_doc_length(&self) -> f64 {
        self.avg_doc_length
    }

    pub fn params(&self) -> Bm25Params {
        self.params
    }

    /// Paths rejected at build time for having no indexable tokens.
    pub fn skipped_paths(&self) -> &[String] {
        &self.skipped
    }

    pub fn meta(&self, doc_id: &str) -> Option<&DocMeta> {
        self.doc_index.get(doc_id).map(|&i| &self.doc_meta[i as usize])
    }

    pub fn contains(&self, doc_id: &str) -> bool {
        self.doc_index.contains_key(doc_id)
    }

    /// All document metadata in internal (system, version, path) order.
    pub fn documents(&self) -> &[DocMeta] {
        &self.doc_meta
    }

    fn idf(&self, term: &str) -> f64 {
        let df = self.postings.get(term).map_or(0, Vec::len) as f64;
        if df == 0.0 {
            return 0.0;
        }
        let n = self.doc_count() as f64;
        libm::log(1.0 + (n - df + 0.5) / (df + 0.5)).max(0.0)
    }

    fn tf_weight(&self, tf: u32, doc: u32) -> f64 {
        let Bm25Params { k1, b } = self.params;
        let tf = tf as f64;
        let len = self.doc_lengths[doc as usize] as f64;
        tf * (k1 + 1.0) / (tf + k1 * (1.0 - b + b * len / self.avg_doc_length))
    }

    fn tf_in(&self, term: &str, doc: u32) -> u32 {
        self.postings
            .get(term)
            .and_then(|p| p.binary_search_by_key(&doc, |e| e.doc).ok().map(|i| p[i].tf))
            .unwrap_or(0)
    }

    /// Okapi BM25 score of one document against the query tokens.
    ///
    /// The sum runs over query tokens with multiplicity, so repeating a
    /// token scales its contribution.
    pub fn bm25_score(&self, query: &TokenStream, doc_id: &str) -> Result<f64, IndexError> {
        let &doc = self
            .doc_index
            .get(doc_id)
            .ok_or_else(|| IndexError::UnknownDoc(String::from(doc_id)))?;
        let mut score = 0.0;
        for term in query.iter() {
            let tf = self.tf_in(term, doc);
            if tf > 0 {
                score += self.idf(term) * self.tf_weight(tf, doc);
            }
        }
        Ok(score)
    }

    fn passes_filters(&self, doc: u32, query: &Query) -> bool {
        let meta = &self.doc_meta[doc as usize];
        query.system_filter.as_ref().is_none_or(|s| *s == meta.system)
            && query.version_filter.as_ref().is_none_or(|v| *v == meta.version)
    }

    /// Top-K retrieval: BM25 over documents passing the filters, descending
    /// score, ties broken by ascending path then doc_id. Documents scoring
    /// zero (no query term matches) are excluded.
    pub fn search(&self, query: &Query) -> Result<Vec<SearchHit>, IndexError> {
        if query.tokens.is_empty() {
            return Err(IndexError::EmptyQuery);
        }

        // Query-term multiplicities; scoring walks each term's postings once.
        let mut counts: BTreeMap<&str, u32> = BTreeMap::new();
        for t in query.tokens.iter() {
            *counts.entry(t.as_str()).or_insert(0) += 1;
        }

        let mut scores: BTreeMap<u32, f64> = BTreeMap::new();
        for (term, qtf) in counts {
            let Some(postings) = self.postings.get(term) else { continue };
            let idf = self.idf(term);
            for p in postings {
                if !self.passes_filters(p.doc, query) {
                    continue;
                }
                *scores.entry(p.doc).or_insert(0.0) +=
                    qtf as f64 * idf * self.tf_weight(p.tf, p.doc);
            }
        }

        let mut hits: Vec<(u32, f64)> =
            scores.into_iter().filter(|&(_, s)| s > 0.0).collect();
        hits.sort_by(|a, b| {
            b.1.total_cmp(&a.1).then_with(|| {
                let ma = &self.doc_meta[a.0 as usize];
                let mb = &self.doc_meta[b.0 as usize];
                ma.path.cmp(&mb.path).then_with(|| ma.doc_id.cmp(&mb.doc_id))
            })
        });
        hits.truncate(query.k);

        Ok(hits
            .into_iter()
            .map(|(doc, score)| {
                let meta = &self.doc_meta[doc as usize];
                SearchHit { doc_id: meta.doc_id.clone(), path: meta.path.clone(), score }
            })
            .collect())
    }
}
