use crate::error::{Error, Result};

/// Largest supported text length.
pub const MAX_TEXT_LEN: usize = (1 << 31) - 1;

/// Immutable byte text addressed by 1-based inclusive positions, so that
/// `T[i..j]` denotes the substring from position `i` to position `j`.
/// Letters compare in unsigned byte order.
#[derive(Clone, PartialEq, Eq)]
pub struct Text {
    bytes: Vec<u8>,
}

impl Text {
    pub fn new(bytes: Vec<u8>) -> Result<Self> {
        if bytes.is_empty() {
            return Err(Error::EmptyText);
        }
        if bytes.len() > MAX_TEXT_LEN {
            return Err(Error::TextTooLong(bytes.len()));
        }
        Ok(Text { bytes })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Letter at 1-based position `pos`.
    #[inline]
    pub fn byte(&self, pos: usize) -> u8 {
        self.bytes[pos - 1]
    }

    /// Bytes of `T[i..j]`, 1-based inclusive.
    #[inline]
    pub fn slice(&self, i: usize, j: usize) -> &[u8] {
        &self.bytes[i - 1..j]
    }

    #[inline]
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Validates a 1-based inclusive position range.
    pub fn check_range(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || i > j || j > self.len() {
            return Err(Error::BadRange { i, j, n: self.len() });
        }
        Ok(())
    }

    /// Validates a single 1-based position.
    pub fn check_pos(&self, p: usize) -> Result<()> {
        if p == 0 || p > self.len() {
            return Err(Error::BadRange { i: p, j: p, n: self.len() });
        }
        Ok(())
    }
}

impl std::fmt::Debug for Text {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Text({} bytes)", self.bytes.len())
    }
}
