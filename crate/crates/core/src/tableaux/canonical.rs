//! Canonical representatives of S_n × S_n orbits.
//!
//! Squares are ordered by the key `(row signatures, entries read row by row)`,
//! where the signature of a row is its entries sorted in decreasing order. The
//! canonical square is the orbit element with the smallest key. Its rows are
//! sorted by signature, so only row orders that respect that sort are tried.
//! For a fixed row order the best column order sorts the columns as words
//! read top to bottom, and the top `d` rows of the result depend only on the
//! first `d` rows placed. A partial order whose top rows already compare
//! greater than the best found so far is abandoned.
//!
//! Moves are ordered by `(square key, plus, minus)`.

use std::cmp::Ordering;

use crate::symgroup::{factorial, Permutation};

use super::{MagicSquare, Move, Symmetry};

/// The canonical square of an orbit together with every group element that
/// carries the input onto it (a coset of the input's stabilizer).
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub square: MagicSquare,
    pub transporters: Vec<Symmetry>,
}

fn row_signature(b: &MagicSquare, i: usize) -> u128 {
    let n = b.n();
    let mut row: Vec<u32> = (0..n).map(|j| b.get(i, j)).collect();
    row.sort_unstable_by(|a, b| b.cmp(a));
    row.iter().fold(0u128, |acc, &v| (acc << 16) | v as u128)
}

/// Key of a square in its current orientation; the brute-force order.
fn square_key(b: &MagicSquare) -> (Vec<u128>, Vec<u32>) {
    let n = b.n();
    let sigs = (0..n).map(|i| row_signature(b, i)).collect();
    (sigs, b.entries().to_vec())
}

/// Top `depth` rows, row by row, of the matrix whose columns are `sorted`.
fn top_rows(sorted: &[u128], depth: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(depth * sorted.len());
    for r in 0..depth {
        let shift = 16 * (depth - 1 - r);
        out.extend(sorted.iter().map(|&w| ((w >> shift) & 0xffff) as u32));
    }
    out
}

struct Search<'a> {
    b: &'a MagicSquare,
    n: usize,
    /// row indices sorted by signature, with group ids
    group_of_slot: Vec<usize>,
    group_rows: Vec<Vec<usize>>,
    used: Vec<bool>,
    order: Vec<usize>,
    best: Option<Vec<u32>>,
    best_words: Vec<u128>,
    best_orders: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn compare_with_best(&self, top: &[u32]) -> Ordering {
        match &self.best {
            None => Ordering::Less,
            Some(best) => top.cmp(&best[..top.len()]),
        }
    }

    fn run(&mut self, depth: usize, words: Vec<u128>) {
        if depth > 0 {
            let mut sorted = words.clone();
            sorted.sort_unstable();
            let top = top_rows(&sorted, depth);
            match self.compare_with_best(&top) {
                Ordering::Greater => return,
                Ordering::Less if depth == self.n => {
                    self.best = Some(top);
                    self.best_words = sorted;
                    self.best_orders.clear();
                    self.best_orders.push(self.order.clone());
                    return;
                }
                Ordering::Equal if depth == self.n => {
                    self.best_orders.push(self.order.clone());
                    return;
                }
                _ => {}
            }
        }
        let g = self.group_of_slot[depth];
        for k in 0..self.group_rows[g].len() {
            let i = self.group_rows[g][k];
            if self.used[i] {
                continue;
            }
            self.used[i] = true;
            self.order.push(i);
            let next: Vec<u128> =
                words.iter().enumerate().map(|(j, &w)| (w << 16) | self.b.get(i, j) as u128).collect();
            self.run(depth + 1, next);
            self.order.pop();
            self.used[i] = false;
        }
    }
}

/// Best row orders and the resulting sorted column words.
fn search(b: &MagicSquare) -> (Vec<u128>, Vec<Vec<usize>>) {
    let n = b.n();
    let sigs: Vec<u128> = (0..n).map(|i| row_signature(b, i)).collect();
    let mut rows: Vec<usize> = (0..n).collect();
    rows.sort_by_key(|&i| (sigs[i], i));
    let mut group_rows: Vec<Vec<usize>> = Vec::new();
    let mut group_of_slot = Vec::with_capacity(n);
    for (k, &i) in rows.iter().enumerate() {
        if k == 0 || sigs[rows[k - 1]] != sigs[i] {
            group_rows.push(Vec::new());
        }
        group_rows.last_mut().unwrap().push(i);
        group_of_slot.push(group_rows.len() - 1);
    }
    let mut s = Search {
        b,
        n,
        group_of_slot,
        group_rows,
        used: vec![false; n],
        order: Vec::with_capacity(n),
        best: None,
        best_words: Vec::new(),
        best_orders: Vec::new(),
    };
    s.run(0, vec![0; n]);
    (s.best_words, s.best_orders)
}

fn words_to_square(n: usize, words: &[u128], line_sum: u32) -> MagicSquare {
    let mut entries = vec![0u32; n * n];
    for (j, &w) in words.iter().enumerate() {
        for i in 0..n {
            entries[i * n + j] = ((w >> (16 * (n - 1 - i))) & 0xffff) as u32;
        }
    }
    MagicSquare::from_parts_unchecked(n, entries, line_sum)
}

/// All bijections `positions` with `sorted[positions(j)] == words[j]`.
fn column_matchings(words: &[u128], sorted: &[u128]) -> Vec<Vec<u8>> {
    let n = words.len();
    let mut out = Vec::new();
    let mut assign = vec![0u8; n];
    let mut taken = vec![false; n];
    fn go(j: usize, words: &[u128], sorted: &[u128], assign: &mut Vec<u8>, taken: &mut Vec<bool>, out: &mut Vec<Vec<u8>>) {
        if j == words.len() {
            out.push(assign.clone());
            return;
        }
        for k in 0..sorted.len() {
            if !taken[k] && sorted[k] == words[j] {
                taken[k] = true;
                assign[j] = k as u8;
                go(j + 1, words, sorted, assign, taken, out);
                taken[k] = false;
            }
        }
    }
    go(0, words, sorted, &mut assign, &mut taken, &mut out);
    out
}

pub fn canonical_form(b: &MagicSquare) -> CanonicalForm {
    let n = b.n();
    let (best, orders) = search(b);
    let mut transporters = Vec::new();
    for order in &orders {
        let mut labels = [0u8; 8];
        for (r, &i) in order.iter().enumerate() {
            labels[i] = r as u8;
        }
        let labels = Permutation::from_images_unchecked(&labels[..n]);
        let words: Vec<u128> = (0..n)
            .map(|j| order.iter().fold(0u128, |acc, &i| (acc << 16) | b.get(i, j) as u128))
            .collect();
        for positions in column_matchings(&words, &best) {
            transporters.push(Symmetry { positions: Permutation::from_images_unchecked(&positions), labels });
        }
    }
    CanonicalForm { square: words_to_square(n, &best, b.line_sum()), transporters }
}

pub fn canonical_square(b: &MagicSquare) -> MagicSquare {
    let (best, _) = search(b);
    words_to_square(b.n(), &best, b.line_sum())
}

/// Group elements fixing `b`.
pub fn stabilizer(b: &MagicSquare) -> Vec<Symmetry> {
    let cf = canonical_form(b);
    let back = cf.transporters[0].inverse();
    cf.transporters.iter().map(|t| back.compose(t).expect("same degree")).collect()
}

pub fn square_orbit_size(b: &MagicSquare) -> u64 {
    let g = factorial(b.n()) as u64;
    g * g / canonical_form(b).transporters.len() as u64
}

/// Canonical move and the size of its stabilizer.
pub(crate) fn canonical_move_and_stabilizer(m: &Move) -> (Move, usize) {
    let cf = canonical_form(&m.square());
    let mut best: Option<Move> = None;
    let mut count = 0;
    for g in &cf.transporters {
        let image = m.act_unchecked(g);
        match best.as_ref().map(|b| image.cmp(b)) {
            Some(Ordering::Greater) => {}
            Some(Ordering::Equal) => count += 1,
            _ => {
                best = Some(image);
                count = 1;
            }
        }
    }
    (best.expect("transporters are nonempty"), count)
}

pub fn canonical_move(m: &Move) -> Move {
    canonical_move_and_stabilizer(m).0
}

/// Size of the S_n × S_n orbit of a move (moves identified with their negations).
pub fn orbit_size(m: &Move) -> u64 {
    let g = factorial(m.n()) as u64;
    g * g / canonical_move_and_stabilizer(m).1 as u64
}

/// Minimum over all (n!)² group elements; a test oracle.
pub fn brute_force_canonical_square(b: &MagicSquare) -> MagicSquare {
    Symmetry::all(b.n())
        .expect("valid degree")
        .iter()
        .map(|g| g.act_on_square(b))
        .min_by(|x, y| square_key(x).cmp(&square_key(y)))
        .expect("group is nonempty")
}

/// Minimum over all (n!)² group elements; a test oracle.
pub fn brute_force_canonical_move(m: &Move) -> Move {
    Symmetry::all(m.n())
        .expect("valid degree")
        .iter()
        .map(|g| m.act_unchecked(g))
        .min_by(|x, y| (square_key(&x.square()), x).cmp(&(square_key(&y.square()), y)))
        .expect("group is nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::enumerate_sn;
    use crate::tableaux::{SymmetryAction, Tableau};
    use rand::seq::IndexedRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_square(n: usize, d: usize, rng: &mut ChaCha8Rng) -> MagicSquare {
        let sn = enumerate_sn(n).unwrap();
        let rows: Vec<Permutation> = (0..d).map(|_| *sn.choose(rng).unwrap()).collect();
        Tableau::new(rows).unwrap().sum().unwrap()
    }

    #[test]
    fn fast_matches_brute_force_on_s4() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for d in 1..=5 {
            for _ in 0..20 {
                let b = random_square(4, d, &mut rng);
                let cf = canonical_form(&b);
                assert_eq!(cf.square, brute_force_canonical_square(&b));
                for t in &cf.transporters {
                    assert_eq!(b.act(t).unwrap(), cf.square);
                }
                let exhaustive = Symmetry::all(4)
                    .unwrap()
                    .iter()
                    .filter(|g| b.act(g).unwrap() == cf.square)
                    .count();
                assert_eq!(cf.transporters.len(), exhaustive);
            }
        }
    }

    #[test]
    fn canonical_is_orbit_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let all = Symmetry::all(5).unwrap();
        for _ in 0..20 {
            let b = random_square(5, 3, &mut rng);
            let c = canonical_square(&b);
            let g = all.choose(&mut rng).unwrap();
            assert_eq!(canonical_square(&b.act(g).unwrap()), c);
            assert_eq!(canonical_square(&c), c);
        }
    }

    #[test]
    fn all_ones_is_canonical_and_fully_symmetric() {
        let ones = MagicSquare::all_ones(4);
        assert_eq!(canonical_square(&ones), ones);
        assert_eq!(square_orbit_size(&ones), 1);
        assert_eq!(stabilizer(&ones).len(), 576);
    }

    #[test]
    fn permutation_matrices_form_one_orbit() {
        let id = MagicSquare::permutation(&Permutation::identity(5));
        assert_eq!(square_orbit_size(&id), 120);
        for p in enumerate_sn(5).unwrap() {
            assert_eq!(canonical_square(&MagicSquare::permutation(&p)), canonical_square(&id));
        }
    }

    #[test]
    fn move_canonical_form_matches_brute_force() {
        let m = Move::parse(&["1234", "2143"], &["1243", "2134"]).unwrap();
        assert_eq!(canonical_move(&m), brute_force_canonical_move(&m));
        let l = Move::parse(&["123", "231", "312"], &["132", "213", "321"]).unwrap();
        assert_eq!(canonical_move(&l), brute_force_canonical_move(&l));
        assert_eq!(orbit_size(&l), 1);
    }

    #[test]
    fn known_s5_orbit_sizes() {
        let m = Move::parse(&["53412", "54321"], &["53421", "54312"]).unwrap();
        assert_eq!(orbit_size(&m), 450);
        let m = Move::parse(&["54123", "54231", "54312"], &["54132", "54213", "54321"]).unwrap();
        assert_eq!(orbit_size(&m), 200);
        // the square has 1440 images but its stabilizer moves this move around
        let m = Move::parse(&["34521", "45312", "52143"], &["35142", "42513", "54321"]).unwrap();
        assert_eq!(square_orbit_size(&m.square()), 1440);
        assert_eq!(orbit_size(&m), 7200);
    }
}
