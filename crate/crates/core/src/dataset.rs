//! Ranking data sets: `ranking,count` CSV files and the embedded APA election.

use std::collections::HashSet;
use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::reptheory::RankFunction;
use crate::symgroup::Permutation;

const APA_CSV: &str = include_str!("../data/apa.csv");

/// Voters in the embedded APA election.
pub const APA_TOTAL: u64 = 5738;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dataset {
    pub name: String,
    pub source: String,
    pub n: usize,
    pub records: Vec<(Permutation, u64)>,
}

impl Dataset {
    pub fn from_csv<R: Read>(reader: R, name: &str, source: &str) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let header = rdr.headers().map_err(|e| Error::Dataset { line: 1, message: e.to_string() })?;
        if header.len() != 2 || &header[0] != "ranking" || &header[1] != "count" {
            return Err(Error::Dataset { line: 1, message: "header must be \"ranking,count\"".into() });
        }
        let mut records = Vec::new();
        let mut seen = HashSet::new();
        let mut n = None;
        for row in rdr.records() {
            let row = row.map_err(|e| Error::Dataset {
                line: e.position().map_or(0, |p| p.line() as usize),
                message: e.to_string(),
            })?;
            let line = row.position().map_or(0, |p| p.line() as usize);
            let err = |message: String| Error::Dataset { line, message };
            if row.len() != 2 {
                return Err(err(format!("expected 2 fields, found {}", row.len())));
            }
            let p: Permutation = row[0].parse().map_err(|e: Error| err(e.to_string()))?;
            let count: i64 = row[1].parse().map_err(|_| err(format!("count {:?} is not an integer", &row[1])))?;
            if count < 0 {
                return Err(err(format!("negative count {count}")));
            }
            match n {
                None => n = Some(p.degree()),
                Some(m) if m != p.degree() => {
                    return Err(err(format!("ranking {p} has {} items, expected {m}", p.degree())))
                }
                _ => {}
            }
            if !seen.insert(p) {
                return Err(err(format!("duplicate ranking {p}")));
            }
            records.push((p, count as u64));
        }
        let n = n.ok_or(Error::EmptyData)?;
        Ok(Dataset { name: name.to_string(), source: source.to_string(), n, records })
    }

    /// The APA presidential election ballots: 5 candidates, 5738 complete rankings.
    pub fn apa() -> Self {
        Self::from_csv(APA_CSV.as_bytes(), "apa", "builtin").expect("embedded data is valid")
    }

    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "apa" => Some(Self::apa()),
            _ => None,
        }
    }

    /// A builtin name or a CSV path.
    pub fn load(spec: &str) -> Result<Self> {
        if let Some(d) = Self::builtin(spec) {
            return Ok(d);
        }
        let path = Path::new(spec);
        let file = std::fs::File::open(path).map_err(|e| Error::Format(format!("{spec}: {e}")))?;
        let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or(spec);
        Self::from_csv(file, name, spec)
    }

    pub fn from_rank_function(name: &str, f: &RankFunction) -> Self {
        Dataset { name: name.to_string(), source: "generated".into(), n: f.n(), records: f.iter().collect() }
    }

    pub fn total(&self) -> u64 {
        self.records.iter().map(|(_, c)| c).sum()
    }

    pub fn to_rank_function(&self) -> RankFunction {
        RankFunction::from_pairs(self.n, self.records.iter().copied()).expect("records share one degree")
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(w);
        let io = |e: csv::Error| Error::Format(e.to_string());
        wtr.write_record(["ranking", "count"]).map_err(io)?;
        for (p, c) in &self.records {
            wtr.write_record([p.to_string(), c.to_string()]).map_err(io)?;
        }
        wtr.flush().map_err(|e| Error::Format(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<Dataset> {
        Dataset::from_csv(text.as_bytes(), "t", "test")
    }

    #[test]
    fn apa_records() {
        let d = Dataset::apa();
        assert_eq!(d.n, 5);
        assert_eq!(d.records.len(), 120);
        assert_eq!(d.total(), APA_TOTAL);
        assert_eq!(d.records[0], ("54321".parse().unwrap(), 29));
        let f = d.to_rank_function();
        assert_eq!(f.get(&"23154".parse().unwrap()), 186);
    }

    #[test]
    fn errors_name_the_line() {
        let e = parse("ranking,count\n123,4\n122,1\n").unwrap_err();
        assert!(matches!(e, Error::Dataset { line: 3, .. }), "{e:?}");
        let e = parse("ranking,count\n123,-2\n").unwrap_err();
        assert!(matches!(e, Error::Dataset { line: 2, .. }));
        let e = parse("ranking,count\n123,1\n231,1\n123,5\n").unwrap_err();
        assert!(matches!(e, Error::Dataset { line: 4, .. }));
        let e = parse("ranking,count\n54321,1\n54322,1\n").unwrap_err();
        assert!(e.to_string().starts_with("line 3"));
        assert!(parse("rank,n\n123,1\n").is_err());
        assert!(parse("ranking,count\n123,1\n1234,1\n").is_err());
        assert_eq!(parse("ranking,count\n"), Err(Error::EmptyData));
    }

    #[test]
    fn csv_round_trip() {
        let d = Dataset::apa();
        let mut buf = Vec::new();
        d.write_csv(&mut buf).unwrap();
        let back = Dataset::from_csv(buf.as_slice(), "apa", "builtin").unwrap();
        assert_eq!(back, d);
    }
}
