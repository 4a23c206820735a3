use std::fmt::Write as _;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableaux::Move;

use super::basis::{DegreeSummary, MarkovBasis, MoveClass};
use super::verify::VerifyReport;

pub const BASIS_SCHEMA: &str = "sn-markov-basis/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisFile {
    pub schema: String,
    pub n: usize,
    pub max_degree: usize,
    pub degrees: Vec<DegreeSummary>,
    pub classes: Vec<MoveClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub moves: Option<Vec<Move>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerifyReport>,
}

impl BasisFile {
    pub fn new(basis: &MarkovBasis, classes_only: bool, verification: Option<VerifyReport>) -> Self {
        BasisFile {
            schema: BASIS_SCHEMA.to_string(),
            n: basis.n,
            max_degree: basis.max_degree,
            degrees: basis.degrees.clone(),
            classes: basis.classes.clone(),
            moves: if classes_only { None } else { Some(basis.expanded_moves()) },
            verification,
        }
    }

    pub fn into_basis(self) -> MarkovBasis {
        MarkovBasis {
            n: self.n,
            max_degree: self.max_degree,
            degrees: self.degrees,
            classes: self.classes,
            moves: self.moves,
        }
    }

    pub fn write<W: Write>(&self, w: W) -> Result<()> {
        serde_json::to_writer_pretty(w, self).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn read<R: Read>(r: R) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_reader(r).map_err(|e| Error::Format(e.to_string()))?;
        match value.get("schema").and_then(|s| s.as_str()) {
            Some(BASIS_SCHEMA) => {}
            other => return Err(Error::Schema(other.unwrap_or("<missing>").to_string())),
        }
        let file: BasisFile = serde_json::from_value(value).map_err(|e| Error::Format(e.to_string()))?;
        if file.classes.iter().any(|c| c.representative.n() != file.n)
            || file.moves.iter().flatten().any(|m| m.n() != file.n)
        {
            return Err(Error::Format(format!("moves do not all have degree {}", file.n)));
        }
        Ok(file)
    }
}

/// Class list as two-tableau blocks with the number of squares each serves.
pub fn render_classes(basis: &MarkovBasis) -> String {
    let mut out = String::new();
    for (k, c) in basis.classes.iter().enumerate() {
        let m = &c.representative;
        let _ = writeln!(out, "class {} (degree {}, {} moves, orbit {})", k + 1, c.degree, c.fiber_count, c.orbit_size);
        for (r, (a, b)) in m.plus().rows().iter().zip(m.minus().rows()).enumerate() {
            let sep = if r == m.degree() / 2 { '-' } else { ' ' };
            let _ = writeln!(out, "  {a}  {sep}  {b}");
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basisgen::compute_markov_basis;

    #[test]
    fn round_trip() {
        let basis = compute_markov_basis(4, Some(3)).unwrap();
        for classes_only in [false, true] {
            let file = BasisFile::new(&basis, classes_only, None);
            let mut buf = Vec::new();
            file.write(&mut buf).unwrap();
            let back = BasisFile::read(buf.as_slice()).unwrap();
            assert_eq!(back, file);
            let b = back.into_basis();
            assert_eq!(b.expanded_moves(), basis.expanded_moves());
        }
    }

    #[test]
    fn unknown_schema_rejected() {
        let basis = compute_markov_basis(3, None).unwrap();
        let mut file = BasisFile::new(&basis, true, None);
        file.schema = "sn-markov-basis/99".into();
        let mut buf = Vec::new();
        file.write(&mut buf).unwrap();
        assert!(matches!(BasisFile::read(buf.as_slice()), Err(Error::Schema(_))));
        assert!(matches!(BasisFile::read(&b"{}"[..]), Err(Error::Schema(_))));
    }

    #[test]
    fn text_layout() {
        let basis = compute_markov_basis(3, None).unwrap();
        let text = render_classes(&basis);
        assert!(text.contains("123  -  132") || text.contains("123     132"));
        assert_eq!(text.lines().filter(|l| l.starts_with("  ")).count(), 3);
    }
}
