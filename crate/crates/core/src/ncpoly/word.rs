//! Words in the free monoid on a presentation's generators.

use alloc::vec::Vec;
use core::cmp::Ordering;

/// Index of a generator within a presentation's generator list.
///
/// For matrix-shaped presentations on n² generators the index is row-major:
/// the generator in row i, column j (1-based) has index (i-1)·n + (j-1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenId(pub u16);

/// A word in the free monoid; the empty word is the unit.
///
/// `Ord` is degree-lexicographic: shorter words first, ties broken by the
/// generator index sequence. This order is a total well-order on each degree
/// and is compatible with concatenation on both sides, which is what the
/// Groebner engine requires of its term order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u16>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(g: GenId) -> Self {
        Word(alloc::vec![g.0])
    }

    pub fn from_ids<I: IntoIterator<Item = GenId>>(ids: I) -> Self {
        Word(ids.into_iter().map(|g| g.0).collect())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn gens(&self) -> impl DoubleEndedIterator<Item = GenId> + ExactSizeIterator + '_ {
        self.0.iter().map(|&i| GenId(i))
    }

    pub fn gen_at(&self, pos: usize) -> GenId {
        GenId(self.0[pos])
    }

    pub fn as_slice(&self) -> &[u16] {
        &self.0
    }

    /// True when `pat` occurs at exactly position `pos`.
    pub fn matches_at(&self, pos: usize, pat: &Word) -> bool {
        pos + pat.0.len() <= self.0.len() && self.0[pos..pos + pat.0.len()] == pat.0[..]
    }

    /// Largest generator index occurring, if any. Used to validate a word
    /// against a presentation's generator count.
    pub fn max_gen_index(&self) -> Option<u16> {
        self.0.iter().copied().max()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        let mut v = self.0.clone();
        v.reverse();
        Word(v)
    }

    pub fn subword(&self, start: usize, len: usize) -> Word {
        Word(self.0[start..start + len].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    pub fn suffix_from(&self, start: usize) -> Word {
        Word(self.0[start..].to_vec())
    }

    /// Leftmost occurrence of `pat` as a contiguous subword.
    pub fn find(&self, pat: &Word) -> Option<usize> {
        if pat.0.is_empty() {
            return Some(0);
        }
        if pat.0.len() > self.0.len() {
            return None;
        }
        (0..=self.0.len() - pat.0.len()).find(|&s| self.0[s..s + pat.0.len()] == pat.0[..])
    }

    pub fn contains(&self, pat: &Word) -> bool {
        self.find(pat).is_some()
    }

    /// True when a proper suffix of `self` of length `k` equals the prefix of
    /// `other` of length `k`. Used to enumerate overlap obstructions.
    pub fn suffix_matches_prefix(&self, other: &Word, k: usize) -> bool {
        debug_assert!(k >= 1 && k <= self.0.len() && k <= other.0.len());
        self.0[self.0.len() - k..] == other.0[..k]
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The degree-lexicographic comparison, exposed by name.
pub fn deglex_compare(a: &Word, b: &Word) -> Ordering {
    a.cmp(b)
}
