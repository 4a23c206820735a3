use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{check_degree, Error, Result};
use crate::symgroup::{enumerate_sn, Permutation, MAX_DEGREE};
use crate::tableaux::Tableau;

/// Highest degree a minimal generator of the S_n toric ideal can have.
pub fn degree_bound(n: usize) -> Result<usize> {
    check_degree(n, 2, usize::MAX)?;
    Ok(if n > 3 { n - 1 } else { n })
}

/// `M[i][j]` counts the positions where row `i` of `S` and row `j` of `T` hold the same item.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AgreementMatrix {
    pub entries: Vec<Vec<u32>>,
}

impl AgreementMatrix {
    pub fn total(&self) -> u64 {
        self.entries.iter().flatten().map(|&v| v as u64).sum()
    }

    pub fn max(&self) -> u32 {
        self.entries.iter().flatten().copied().max().unwrap_or(0)
    }
}

pub fn agreement_matrix(s: &Tableau, t: &Tableau) -> Result<AgreementMatrix> {
    if s.n() != t.n() {
        return Err(Error::MismatchedDegree { left: s.n(), right: t.n() });
    }
    if s.sum()? != t.sum()? {
        return Err(Error::MismatchedSums);
    }
    let entries = s
        .rows()
        .iter()
        .map(|a| t.rows().iter().map(|b| a.agreements(b) as u32).collect())
        .collect();
    Ok(AgreementMatrix { entries })
}

/// Permutations of n, joined when they disagree in every position.
#[derive(Debug, Clone)]
pub struct DerangementGraph {
    pub vertices: Vec<Permutation>,
    pub adjacency: Vec<Vec<usize>>,
}

impl DerangementGraph {
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }
}

pub fn derangement_graph(n: usize) -> Result<DerangementGraph> {
    check_degree(n, 2, MAX_DEGREE)?;
    let vertices = enumerate_sn(n)?;
    let adjacency = vertices
        .iter()
        .map(|p| {
            vertices.iter().enumerate().filter(|(_, q)| p.disjoint_from(q)).map(|(k, _)| k).collect()
        })
        .collect();
    Ok(DerangementGraph { vertices, adjacency })
}

pub fn is_connected(g: &DerangementGraph) -> bool {
    let len = g.vertices.len();
    if len == 0 {
        return true;
    }
    let mut seen = vec![false; len];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        for &w in &g.adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    reached == len
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        assert_eq!(degree_bound(3).unwrap(), 3);
        assert_eq!(degree_bound(5).unwrap(), 4);
        assert_eq!(degree_bound(6).unwrap(), 5);
        assert!(degree_bound(1).is_err());
    }

    #[test]
    fn single_row_agreement() {
        let t = Tableau::parse_rows(&["2413"]).unwrap();
        let m = agreement_matrix(&t, &t).unwrap();
        assert_eq!(m.entries, vec![vec![4]]);
    }

    #[test]
    fn latin_squares_agree_in_n_squared_cells() {
        let s = Tableau::parse_rows(&["123", "231", "312"]).unwrap();
        let t = Tableau::parse_rows(&["132", "213", "321"]).unwrap();
        let m = agreement_matrix(&s, &t).unwrap();
        assert_eq!(m.total(), 9);
        assert!(agreement_matrix(&s, &Tableau::parse_rows(&["123", "123", "123"]).unwrap()).is_err());
    }

    #[test]
    fn small_graphs() {
        let g2 = derangement_graph(2).unwrap();
        assert_eq!(g2.edge_count(), 1);
        assert!(is_connected(&g2));
        // two triangles
        let g3 = derangement_graph(3).unwrap();
        assert_eq!(g3.edge_count(), 6);
        assert!(!is_connected(&g3));
        assert!(is_connected(&derangement_graph(4).unwrap()));
    }
}
