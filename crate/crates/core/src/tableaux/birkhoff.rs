use crate::symgroup::Permutation;

use super::{MagicSquare, Tableau};

/// A permutation supported on the positive cells of `b`, found by augmenting
/// paths (Kuhn) with positions and items scanned in increasing order.
pub fn perfect_matching(b: &MagicSquare) -> Option<Permutation> {
    let n = b.n();
    // item_at[j] = item matched to position j; pos_of[i] = position matched to item i
    let mut item_at = [usize::MAX; 8];
    let mut pos_of = [usize::MAX; 8];
    for j in 0..n {
        let mut seen = [false; 8];
        if !augment(b, j, &mut seen, &mut item_at, &mut pos_of) {
            return None;
        }
    }
    let images: Vec<u8> = item_at[..n].iter().map(|&i| i as u8).collect();
    Some(Permutation::from_images_unchecked(&images))
}

fn augment(
    b: &MagicSquare,
    j: usize,
    seen: &mut [bool; 8],
    item_at: &mut [usize; 8],
    pos_of: &mut [usize; 8],
) -> bool {
    for i in 0..b.n() {
        if b.get(i, j) == 0 || seen[i] {
            continue;
        }
        seen[i] = true;
        if pos_of[i] == usize::MAX || augment(b, pos_of[i], seen, item_at, pos_of) {
            item_at[j] = i;
            pos_of[i] = j;
            return true;
        }
    }
    false
}

/// Writes `b` as a sum of `line_sum` permutation matrices by repeatedly
/// peeling off a perfect matching of the support.
pub fn birkhoff_decompose(b: &MagicSquare) -> Tableau {
    let mut rest = b.clone();
    let mut rows = Vec::with_capacity(b.line_sum() as usize);
    while rest.line_sum() > 0 {
        // Hall's condition holds for every nonzero magic square
        let p = perfect_matching(&rest).expect("magic square support has a perfect matching");
        rest.remove_permutation(&p);
        rows.push(p);
    }
    Tableau::from_unsorted_unchecked(b.n(), rows)
}
