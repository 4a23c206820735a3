use std::io::{self, Write};

use serde::ser::{Serialize, SerializeMap, SerializeStruct, Serializer};

use crate::symgroup::Partition;

use super::ChainSample;

struct Lengths<'a>(&'a [(Partition, f64)]);

impl Serialize for Lengths<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (lam, v) in self.0 {
            map.serialize_entry(&lam.to_string(), v)?;
        }
        map.end()
    }
}

impl Serialize for ChainSample {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ChainSample", 2)?;
        st.serialize_field("step", &self.step)?;
        st.serialize_field("lengths", &Lengths(&self.lengths))?;
        st.end()
    }
}

/// One JSON object per line: `{"step":k,"lengths":{"5":v,"4,1":v,...}}`.
pub fn write_samples_jsonl<W: Write>(mut w: W, samples: &[ChainSample]) -> io::Result<()> {
    for s in samples {
        serde_json::to_writer(&mut w, s)?;
        writeln!(w)?;
    }
    Ok(())
}

/// Per-partition means, in partition order.
pub fn mean_lengths(samples: &[ChainSample]) -> Vec<(Partition, f64)> {
    let Some(first) = samples.first() else {
        return Vec::new();
    };
    first
        .lengths
        .iter()
        .enumerate()
        .map(|(k, (lam, _))| {
            let s: f64 = samples.iter().map(|x| x.lengths[k].1).sum();
            (lam.clone(), s / samples.len() as f64)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HistogramBin {
    pub low: f64,
    pub high: f64,
    pub count: usize,
}

/// `bins` equal-width bins spanning the observed range; the top edge is closed.
pub fn histogram(values: &[f64], bins: usize) -> Vec<HistogramBin> {
    if values.is_empty() || bins == 0 {
        return Vec::new();
    }
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let width = if hi > lo { (hi - lo) / bins as f64 } else { 1.0 };
    let mut out: Vec<HistogramBin> = (0..bins)
        .map(|k| HistogramBin { low: lo + k as f64 * width, high: lo + (k + 1) as f64 * width, count: 0 })
        .collect();
    for &v in values {
        let k = (((v - lo) / width) as usize).min(bins - 1);
        out[k].count += 1;
    }
    out
}

pub fn write_histogram_csv<W: Write>(mut w: W, bins: &[HistogramBin]) -> io::Result<()> {
    writeln!(w, "bin_low,bin_high,count")?;
    for b in bins {
        writeln!(w, "{},{},{}", b.low, b.high, b.count)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn histogram_covers_all_values() {
        let v: Vec<f64> = (0..100).map(|k| k as f64 * 0.37).collect();
        let h = histogram(&v, 20);
        assert_eq!(h.len(), 20);
        assert_eq!(h.iter().map(|b| b.count).sum::<usize>(), 100);
        assert_eq!(h[0].low, 0.0);
        assert!((h[19].high - 99.0 * 0.37).abs() < 1e-9);
        let flat = histogram(&[3.0, 3.0], 20);
        assert_eq!(flat[0].count, 2);
    }

    #[test]
    fn jsonl_shape() {
        let s = ChainSample { step: 10, lengths: vec![("2".parse().unwrap(), 1.5), ("1,1".parse().unwrap(), 0.0)] };
        let mut buf = Vec::new();
        write_samples_jsonl(&mut buf, &[s]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "{\"step\":10,\"lengths\":{\"2\":1.5,\"1,1\":0.0}}\n");
    }
}
