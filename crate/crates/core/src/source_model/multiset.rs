use std::collections::BTreeMap;

use serde::Serialize;

use super::lexer::{Token, TokenKind};

/// A bag of tokens: each token maps to its multiplicity (always ≥ 1).
///
/// Backed by a `BTreeMap` so iteration is in ascending token order, which
/// fixes the summation order used by the similarity functions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct TokenMultiset {
    counts: BTreeMap<String, u32>,
}

impl TokenMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// Counts every non-punctuation token.
    pub fn from_tokens<'a, I>(tokens: I) -> Self
    where
        I: IntoIterator<Item = &'a Token>,
    {
        let mut set = Self::new();
        for tok in tokens {
            if tok.kind != TokenKind::Punct {
                set.insert(&tok.text);
            }
        }
        set
    }

    pub fn insert(&mut self, token: &str) {
        self.insert_n(token, 1);
    }

    pub fn insert_n(&mut self, token: &str, n: u32) {
        if n == 0 {
            return;
        }
        match self.counts.get_mut(token) {
            Some(c) => *c += n,
            None => {
                self.counts.insert(token.to_string(), n);
            }
        }
    }

    /// Multiplicity of `token`, zero when absent.
    pub fn count(&self, token: &str) -> u32 {
        self.counts.get(token).copied().unwrap_or(0)
    }

    pub fn contains(&self, token: &str) -> bool {
        self.counts.contains_key(token)
    }

    /// Sum of all multiplicities.
    pub fn total(&self) -> u64 {
        self.counts.values().map(|&c| u64::from(c)).sum()
    }

    /// Number of distinct tokens.
    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Tokens in ascending order with their multiplicities.
    pub fn iter(&self) -> impl Iterator<Item = (&str, u32)> + '_ {
        self.counts.iter().map(|(t, &c)| (t.as_str(), c))
    }

    /// Multiset sum: multiplicities are added.
    pub fn add(&mut self, other: &TokenMultiset) {
        for (t, c) in other.iter() {
            self.insert_n(t, c);
        }
    }

    /// Builds a multiset from `(token, multiplicity)` pairs.
    pub fn from_counts<S: AsRef<str>>(counts: impl IntoIterator<Item = (S, u32)>) -> Self {
        let mut set = Self::new();
        for (t, n) in counts {
            set.insert_n(t.as_ref(), n);
        }
        set
    }

    /// `true` when every multiplicity here is ≤ the one in `other`.
    pub fn is_subset_of(&self, other: &TokenMultiset) -> bool {
        self.iter().all(|(t, c)| c <= other.count(t))
    }
}

impl<S: AsRef<str>> FromIterator<S> for TokenMultiset {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        let mut set = Self::new();
        for t in iter {
            set.insert(t.as_ref());
        }
        set
    }
}
