//! Lyndon decomposition of a substring by iterated minimal-suffix and
//! suffix-power queries: the last factor's word is the minimal suffix of the
//! remaining prefix, and its exponent is the largest power of that word
//! ending there. One minimal-suffix query is spent per distinct factor.

use crate::esa::EnhancedIndex;
use crate::min_suffix::MinSuffixIndex;

/// One factor `w^exponent` of a Lyndon decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LyndonFactor {
    /// Position of the first copy of the word.
    pub start: usize,
    /// Length of the Lyndon word `w`.
    pub word_len: usize,
    /// Repetition count, >= 1.
    pub exponent: usize,
}

pub(crate) fn decompose(
    esa: &EnhancedIndex,
    ms: &MinSuffixIndex,
    i: usize,
    j: usize,
) -> Vec<LyndonFactor> {
    let mut factors = Vec::new();
    let mut end = j;
    while end >= i {
        let (start, len) = ms.query(esa, i, end).0;
        let exponent = esa.pow_suffix_unchecked((start, end), (i, end));
        debug_assert!(exponent >= 1);
        factors.push(LyndonFactor { start: end + 1 - exponent * len, word_len: len, exponent });
        end -= exponent * len;
    }
    factors.reverse();
    factors
}
