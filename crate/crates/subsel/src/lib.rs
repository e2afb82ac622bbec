//! Substring suffix queries over a preprocessed text.
//!
//! Given a text `T` of length `n`, [`SubstringIndex`] preprocesses `T` into
//! linear-space structures that answer, for any substring `T[i..j]`:
//!
//! - the lexicographically **minimal** non-empty suffix,
//! - the lexicographically **maximal** suffix,
//! - the **k-th smallest** suffix,
//! - the **Lyndon decomposition**,
//! - **prefix-suffix queries** (all borders of a substring pair, reported as
//!   arithmetic progressions).
//!
//! Positions are 1-based inclusive throughout, so `T[i..j]` runs from
//! position `i` to position `j`, and letters compare in unsigned byte order.
//!
//! ```
//! use subsel::SubstringIndex;
//!
//! let ix = SubstringIndex::build(b"banana".to_vec(), 1).unwrap();
//! assert_eq!(ix.min_suffix(1, 6).unwrap(), (6, 1));      // "a"
//! assert_eq!(ix.select(1, 6, 2).unwrap(), (4, 3));       // "ana"
//! let factors = ix.lyndon_decomposition(1, 6).unwrap();  // b . (an)^2 . a
//! assert_eq!(factors.len(), 3);
//! ```
//!
//! Everything is immutable after construction; queries are pure reads and can
//! run from any number of threads.

pub mod error;
pub mod esa;
pub mod format;
pub mod index;
pub mod lyndon;
pub mod max_suffix;
pub mod min_suffix;
pub mod oracle;
pub mod prefix_suffix;
pub mod selection;
pub mod text;
pub mod wavelet;

mod rmq;
mod sa;

pub use error::{Error, Result};
pub use esa::EnhancedIndex;
pub use index::SubstringIndex;
pub use lyndon::LyndonFactor;
pub use max_suffix::MaxSuffixIndex;
pub use min_suffix::MinSuffixIndex;
pub use prefix_suffix::Progression;
pub use text::Text;
pub use wavelet::RankGrid;
