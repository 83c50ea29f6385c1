//! TF-IDF token weights and weighted-Jaccard similarity.
//!
//! The weight of token `t` for entity `e` is `m_e(t) * idf(t)` with
//! `idf(t) = log10(1 + |E| / n_t)`, where `n_t` counts the entities whose
//! multiset contains `t`. Two indexes are derived from the weights:
//!
//! * [`sim`]: `Σ min(w1, w2) / Σ max(w1, w2)` (symmetric)
//! * [`sim_u`]: `Σ min(w1, w2) / Σ w1` (containment of the first entity in
//!   the second)
//!
//! Sums run over the token union in ascending token order.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::source_model::TokenMultiset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimilarityError {
    #[error("cannot build a weight index over an empty corpus")]
    EmptyCorpus,
    #[error("containment similarity is undefined for an empty first entity")]
    EmptyNumeratorBasis,
}

/// A similarity value in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct SimilarityScore(f64);

impl SimilarityScore {
    pub const ZERO: SimilarityScore = SimilarityScore(0.0);
    pub const ONE: SimilarityScore = SimilarityScore(1.0);

    pub fn value(self) -> f64 {
        self.0
    }
}

impl From<SimilarityScore> for f64 {
    fn from(s: SimilarityScore) -> f64 {
        s.0
    }
}

/// Corpus-wide document frequencies and idf values.
#[derive(Debug, Clone)]
pub struct WeightIndex {
    entity_count: usize,
    tokens: BTreeMap<String, TokenStats>,
}

#[derive(Debug, Clone, Copy)]
struct TokenStats {
    /// Position in ascending token order.
    rank: u32,
    doc_frequency: usize,
    idf: f64,
}

/// Sparse weight vector in ascending token order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct WeightedTokens {
    entries: Vec<(u32, f64)>,
}

impl WeightedTokens {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all weights.
    pub fn mass(&self) -> f64 {
        self.entries.iter().map(|&(_, w)| w).sum()
    }
}

impl WeightIndex {
    /// Builds the index from the token multisets of a corpus of entities.
    pub fn build<'a, I>(corpus: I) -> Result<Self, SimilarityError>
    where
        I: IntoIterator<Item = &'a TokenMultiset>,
    {
        let mut entity_count = 0usize;
        let mut df: BTreeMap<String, usize> = BTreeMap::new();
        for set in corpus {
            entity_count += 1;
            for (t, _) in set.iter() {
                match df.get_mut(t) {
                    Some(n) => *n += 1,
                    None => {
                        df.insert(t.to_string(), 1);
                    }
                }
            }
        }
        if entity_count == 0 {
            return Err(SimilarityError::EmptyCorpus);
        }
        let tokens = df
            .into_iter()
            .enumerate()
            .map(|(rank, (t, n))| {
                let idf = (1.0 + entity_count as f64 / n as f64).log10();
                (
                    t,
                    TokenStats {
                        rank: rank as u32,
                        doc_frequency: n,
                        idf,
                    },
                )
            })
            .collect();
        Ok(WeightIndex {
            entity_count,
            tokens,
        })
    }

    /// `|E|`
    pub fn entity_count(&self) -> usize {
        self.entity_count
    }

    /// `n_t`, zero for tokens outside the corpus.
    pub fn doc_frequency(&self, token: &str) -> usize {
        self.tokens.get(token).map_or(0, |s| s.doc_frequency)
    }

    /// `idf(t)`, or `None` for tokens outside the corpus.
    pub fn idf(&self, token: &str) -> Option<f64> {
        self.tokens.get(token).map(|s| s.idf)
    }

    /// `w(e, t) = m_e(t) * idf(t)`. Tokens outside the corpus weigh 0.
    pub fn weight(&self, tokens: &TokenMultiset, token: &str) -> f64 {
        match (tokens.count(token), self.tokens.get(token)) {
            (0, _) | (_, None) => 0.0,
            (m, Some(s)) => f64::from(m) * s.idf,
        }
    }

    /// Weight vector of a multiset, for repeated comparisons.
    pub fn weigh(&self, tokens: &TokenMultiset) -> WeightedTokens {
        let entries = tokens
            .iter()
            .filter_map(|(t, m)| self.tokens.get(t).map(|s| (s.rank, f64::from(m) * s.idf)))
            .collect();
        WeightedTokens { entries }
    }
}

/// Weighted Jaccard similarity; 0 when both multisets are empty.
pub fn sim(a: &TokenMultiset, b: &TokenMultiset, index: &WeightIndex) -> SimilarityScore {
    sim_weighted(&index.weigh(a), &index.weigh(b))
}

/// Containment similarity of `a` in `b`.
pub fn sim_u(
    a: &TokenMultiset,
    b: &TokenMultiset,
    index: &WeightIndex,
) -> Result<SimilarityScore, SimilarityError> {
    sim_u_weighted(&index.weigh(a), &index.weigh(b))
}

pub fn sim_weighted(a: &WeightedTokens, b: &WeightedTokens) -> SimilarityScore {
    let (mut num, mut den) = (0.0, 0.0);
    merge(a, b, |wa, wb| {
        num += wa.min(wb);
        den += wa.max(wb);
    });
    if den == 0.0 {
        SimilarityScore::ZERO
    } else {
        SimilarityScore(num / den)
    }
}

pub fn sim_u_weighted(
    a: &WeightedTokens,
    b: &WeightedTokens,
) -> Result<SimilarityScore, SimilarityError> {
    let (mut num, mut den) = (0.0, 0.0);
    merge(a, b, |wa, wb| {
        num += wa.min(wb);
        den += wa;
    });
    if den == 0.0 {
        Err(SimilarityError::EmptyNumeratorBasis)
    } else {
        Ok(SimilarityScore(num / den))
    }
}

/// Visits the token union in ascending order with both weights.
fn merge(a: &WeightedTokens, b: &WeightedTokens, mut visit: impl FnMut(f64, f64)) {
    let (xs, ys) = (&a.entries, &b.entries);
    let (mut i, mut j) = (0, 0);
    while i < xs.len() || j < ys.len() {
        match (xs.get(i), ys.get(j)) {
            (Some(&(ta, wa)), Some(&(tb, wb))) if ta == tb => {
                visit(wa, wb);
                i += 1;
                j += 1;
            }
            (Some(&(ta, wa)), Some(&(tb, _))) if ta < tb => {
                visit(wa, 0.0);
                i += 1;
            }
            (Some(&(_, wa)), None) => {
                visit(wa, 0.0);
                i += 1;
            }
            (_, Some(&(_, wb))) => {
                visit(0.0, wb);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
}
