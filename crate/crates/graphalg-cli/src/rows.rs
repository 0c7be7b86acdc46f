//! Machine-readable output: one record per line, whitespace-separated
//! tokens, `#` comment lines and blank lines ignored. Records emitted by
//! the CLI round-trip through [`Rows::parse`].

use std::fmt;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Rows {
    records: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowsParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for RowsParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl Rows {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends one record. Tokens must be nonempty and free of
    /// whitespace so the line stays unambiguous.
    pub fn push<I, T>(&mut self, tokens: I)
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let record: Vec<String> = tokens.into_iter().map(Into::into).collect();
        assert!(!record.is_empty(), "empty record");
        for tok in &record {
            assert!(
                !tok.is_empty() && !tok.chars().any(char::is_whitespace),
                "bad row token {tok:?}"
            );
        }
        self.records.push(record);
    }

    pub fn records(&self) -> &[Vec<String>] {
        &self.records
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        for record in &self.records {
            out.push_str(&record.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, RowsParseError> {
        let mut rows = Rows::new();
        for (idx, line) in text.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let record: Vec<String> =
                trimmed.split_whitespace().map(str::to_owned).collect();
            if record.is_empty() {
                return Err(RowsParseError {
                    line: idx + 1,
                    message: "empty record".into(),
                });
            }
            rows.records.push(record);
        }
        Ok(rows)
    }
}
