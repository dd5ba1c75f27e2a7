use serde::{Deserialize, Serialize};

/// 1-based source region. `end_*` points just past the last character.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SourceSpan {
    pub start_line: u32,
    pub start_col: u32,
    pub end_line: u32,
    pub end_col: u32,
}

impl Default for SourceSpan {
    fn default() -> Self {
        SourceSpan { start_line: 1, start_col: 1, end_line: 1, end_col: 1 }
    }
}

impl SourceSpan {
    pub fn new(start_line: u32, start_col: u32, end_line: u32, end_col: u32) -> Self {
        SourceSpan { start_line, start_col, end_line, end_col }
    }

    pub fn point(line: u32, col: u32) -> Self {
        SourceSpan::new(line, col, line, col)
    }

    /// Smallest span covering both.
    pub fn to(self, other: SourceSpan) -> SourceSpan {
        let (start_line, start_col) =
            (self.start_line, self.start_col).min((other.start_line, other.start_col));
        let (end_line, end_col) = (self.end_line, self.end_col).max((other.end_line, other.end_col));
        SourceSpan { start_line, start_col, end_line, end_col }
    }

    pub fn is_valid(&self) -> bool {
        self.start_line >= 1
            && self.start_col >= 1
            && self.end_line >= 1
            && self.end_col >= 1
            && (self.start_line, self.start_col) <= (self.end_line, self.end_col)
    }
}

impl std::fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.start_line, self.start_col)
    }
}
