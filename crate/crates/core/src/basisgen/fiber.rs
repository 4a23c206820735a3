use std::collections::HashMap;

use crate::symgroup::Permutation;
use crate::tableaux::{MagicSquare, Move, Tableau};

/// Every tableau summing to `b`, each once, in increasing order.
///
/// Rows are chosen in nondecreasing lexicographic order and each is built
/// position by position against the residual square, so any cell that would go
/// negative is cut immediately. A branch also dies when the residual still
/// needs an item in position 1 that is smaller than the first item of the last
/// row, since no later row can supply it.
pub fn enumerate_fiber(b: &MagicSquare) -> Vec<Tableau> {
    let n = b.n();
    let mut search = FiberSearch {
        n,
        residual: b.entries().to_vec(),
        rows: Vec::with_capacity(b.line_sum() as usize),
        out: Vec::new(),
    };
    if b.line_sum() > 0 {
        search.next_row(b.line_sum() as usize);
    }
    search.out
}

struct FiberSearch {
    n: usize,
    residual: Vec<u32>,
    rows: Vec<Permutation>,
    out: Vec<Tableau>,
}

impl FiberSearch {
    fn next_row(&mut self, remaining: usize) {
        if remaining == 0 {
            self.out.push(Tableau::from_sorted_unchecked(self.n, self.rows.clone()));
            return;
        }
        let mut last = [0u8; 8];
        let tight = match self.rows.last() {
            Some(p) => {
                last[..self.n].copy_from_slice(p.images());
                let first = last[0] as usize;
                if (0..first).any(|i| self.residual[i * self.n] > 0) {
                    return;
                }
                true
            }
            None => false,
        };
        let mut cur = [0u8; 8];
        self.place(0, tight, &last, &mut cur, 0, remaining);
    }

    fn place(&mut self, j: usize, tight: bool, last: &[u8; 8], cur: &mut [u8; 8], used: u16, remaining: usize) {
        let n = self.n;
        if j == n {
            let p = Permutation::from_images_unchecked(&cur[..n]);
            for (c, &i) in cur[..n].iter().enumerate() {
                self.residual[i as usize * n + c] -= 1;
            }
            self.rows.push(p);
            self.next_row(remaining - 1);
            self.rows.pop();
            for (c, &i) in cur[..n].iter().enumerate() {
                self.residual[i as usize * n + c] += 1;
            }
            return;
        }
        let lo = if tight { last[j] as usize } else { 0 };
        for i in lo..n {
            if used & (1 << i) != 0 || self.residual[i * n + j] == 0 {
                continue;
            }
            cur[j] = i as u8;
            self.place(j + 1, tight && i == lo, last, cur, used | (1 << i), remaining);
        }
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(len: usize) -> Self {
        UnionFind { parent: (0..len).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root so components come out in fiber order
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    /// Classes as sorted index lists, ordered by their smallest member.
    pub(crate) fn classes(mut self) -> Vec<Vec<usize>> {
        let len = self.parent.len();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..len {
            let r = self.find(x);
            let k = *slot.entry(r).or_insert_with(|| {
                out.push(Vec::new());
                out.len() - 1
            });
            out[k].push(x);
        }
        out
    }
}

/// Components of a fiber under all moves of lower degree, assuming those moves
/// already connect every lower-degree fiber: two tableaux are joined exactly
/// when a chain of them shares rows pairwise.
pub(crate) fn share_row_components(fiber: &[Tableau]) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(fiber.len());
    let mut first_with: HashMap<Permutation, usize> = HashMap::new();
    for (k, t) in fiber.iter().enumerate() {
        for r in t.rows() {
            match first_with.get(r) {
                Some(&other) => uf.union(other, k),
                None => {
                    first_with.insert(*r, k);
                }
            }
        }
    }
    uf.classes()
}

/// Moves looked up by one of their sides.
pub struct MoveIndex {
    partners: HashMap<Tableau, Vec<Tableau>>,
    degrees: Vec<usize>,
}

impl MoveIndex {
    pub fn new<'a, I: IntoIterator<Item = &'a Move>>(moves: I) -> Self {
        let mut partners: HashMap<Tableau, Vec<Tableau>> = HashMap::new();
        let mut degrees = Vec::new();
        for m in moves {
            partners.entry(m.plus().clone()).or_default().push(m.minus().clone());
            partners.entry(m.minus().clone()).or_default().push(m.plus().clone());
            degrees.push(m.degree());
        }
        degrees.sort_unstable();
        degrees.dedup();
        MoveIndex { partners, degrees }
    }

    pub fn len(&self) -> usize {
        self.partners.values().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.partners.is_empty()
    }

    /// Tableaux reachable from `t` by one move.
    pub fn neighbors(&self, t: &Tableau) -> Vec<Tableau> {
        let mut out = Vec::new();
        for &k in &self.degrees {
            if k > t.degree() {
                break;
            }
            for sub in sub_multisets(t, k) {
                if let Some(ps) = self.partners.get(&sub) {
                    let rest = t.difference(&sub).expect("sub-multiset");
                    out.extend(ps.iter().map(|p| rest.union(p)));
                }
            }
        }
        out
    }

    pub fn components(&self, fiber: &[Tableau]) -> Vec<Vec<usize>> {
        let pos: HashMap<&Tableau, usize> = fiber.iter().enumerate().map(|(k, t)| (t, k)).collect();
        let mut uf = UnionFind::new(fiber.len());
        for (k, t) in fiber.iter().enumerate() {
            for u in self.neighbors(t) {
                if let Some(&l) = pos.get(&u) {
                    uf.union(k, l);
                }
            }
        }
        uf.classes()
    }
}

/// Distinct sub-multisets of size `k`.
fn sub_multisets(t: &Tableau, k: usize) -> Vec<Tableau> {
    fn go(rows: &[Permutation], start: usize, k: usize, cur: &mut Vec<Permutation>, out: &mut Vec<Vec<Permutation>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let mut i = start;
        while i < rows.len() {
            if rows.len() - i < k - cur.len() {
                break;
            }
            cur.push(rows[i]);
            go(rows, i + 1, k, cur, out);
            cur.pop();
            let r = rows[i];
            while i < rows.len() && rows[i] == r {
                i += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(t.rows(), 0, k, &mut Vec::with_capacity(k), &mut out);
    out.into_iter().map(|rows| Tableau::from_sorted_unchecked(t.n(), rows)).collect()
}

/// Tableaux of one fiber with an edge wherever a single available move (either
/// sign) turns one into the other.
#[derive(Debug, Clone)]
pub struct FiberGraph {
    pub square: MagicSquare,
    pub vertices: Vec<Tableau>,
    pub edges: Vec<(usize, usize)>,
}

impl FiberGraph {
    pub fn build(b: &MagicSquare, available: &[Move]) -> Self {
        let vertices = enumerate_fiber(b);
        let index = MoveIndex::new(available);
        let pos: HashMap<&Tableau, usize> = vertices.iter().enumerate().map(|(k, t)| (t, k)).collect();
        let mut edges = Vec::new();
        for (k, t) in vertices.iter().enumerate() {
            for u in index.neighbors(t) {
                let l = pos[&u];
                if k < l {
                    edges.push((k, l));
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        FiberGraph { square: b.clone(), vertices, edges }
    }

    pub fn components(&self) -> Vec<Vec<Tableau>> {
        let mut uf = UnionFind::new(self.vertices.len());
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        uf.classes()
            .into_iter()
            .map(|c| c.into_iter().map(|k| self.vertices[k].clone()).collect())
            .collect()
    }
}

/// Connected components of the fiber over `b` under `available`.
pub fn fiber_components(b: &MagicSquare, available: &[Move]) -> Vec<Vec<Tableau>> {
    FiberGraph::build(b, available).components()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::enumerate_sn;

    #[test]
    fn permutation_fiber_is_a_point() {
        for p in enumerate_sn(4).unwrap() {
            let f = enumerate_fiber(&MagicSquare::permutation(&p));
            assert_eq!(f.len(), 1);
            assert_eq!(f[0].rows(), &[p]);
        }
    }

    #[test]
    fn latin_fiber() {
        let f = enumerate_fiber(&MagicSquare::all_ones(3));
        assert_eq!(f.len(), 2);
        assert_eq!(fiber_components(&MagicSquare::all_ones(3), &[]).len(), 2);
        let m = Move::new(f[0].clone(), f[1].clone()).unwrap();
        assert_eq!(fiber_components(&MagicSquare::all_ones(3), &[m]).len(), 1);
    }

    #[test]
    fn output_is_sorted_and_distinct() {
        let b = Tableau::parse_rows(&["12345", "21354", "34512", "45123"]).unwrap().sum().unwrap();
        let f = enumerate_fiber(&b);
        assert!(f.windows(2).all(|w| w[0] < w[1]));
        assert!(f.iter().all(|t| t.sum().unwrap() == b));
    }

    #[test]
    fn block_diagonal_degree_two() {
        // k blocks of size two on the diagonal: 2^(k-1) tableaux
        for k in 2..=4usize {
            let n = 2 * k;
            let mut rows = vec![vec![0u32; n]; n];
            for blk in 0..k {
                for i in 0..2 {
                    for j in 0..2 {
                        rows[2 * blk + i][2 * blk + j] = 1;
                    }
                }
            }
            let b = MagicSquare::from_rows(&rows).unwrap();
            assert_eq!(enumerate_fiber(&b).len(), 1 << (k - 1));
        }
    }

    #[test]
    fn sub_multisets_skip_duplicates() {
        let t = Tableau::parse_rows(&["123", "123", "231"]).unwrap();
        assert_eq!(sub_multisets(&t, 2).len(), 2);
        assert_eq!(sub_multisets(&t, 1).len(), 2);
        assert_eq!(sub_multisets(&t, 3).len(), 1);
    }

    #[test]
    fn share_row_matches_explicit_degree_two_moves() {
        // in degree three, sharing a row is the same as being joined by a degree-two move
        let b = Tableau::parse_rows(&["1234", "2143", "3412"]).unwrap().sum().unwrap();
        let fiber = enumerate_fiber(&b);
        let s4 = enumerate_sn(4).unwrap();
        let mut deg2 = Vec::new();
        for (a, p) in s4.iter().enumerate() {
            for q in &s4[a..] {
                let sq = MagicSquare::permutation(p).plus_permutation(q);
                let f = enumerate_fiber(&sq);
                for t in &f[1..] {
                    deg2.push(Move::new(f[0].clone(), t.clone()).unwrap());
                }
            }
        }
        let explicit = MoveIndex::new(&deg2).components(&fiber);
        assert_eq!(explicit, share_row_components(&fiber));
    }
}
