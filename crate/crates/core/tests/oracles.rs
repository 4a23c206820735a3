//! Independent recomputations of the representation-theoretic quantities.

use nalgebra::DMatrix;
use sn_markov::reptheory::{
    character_table, fourier_transform, isotypic_projection, projection_lengths, RankFunction, SymmetricGroup,
};
use sn_markov::symgroup::{enumerate_sn, partitions_of};
use sn_markov::{Dataset, Partition, Permutation, Rational};

fn fixed_points(g: &Permutation) -> i64 {
    (0..g.degree()).filter(|&j| g.image(j) == j).count() as i64
}

fn fixed_pairs(g: &Permutation) -> i64 {
    let n = g.degree();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            let (x, y) = (g.image(a), g.image(b));
            if (x == a && y == b) || (x == b && y == a) {
                count += 1;
            }
        }
    }
    count
}

fn sign(g: &Permutation) -> i64 {
    let n = g.degree();
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for s in 0..n {
        if !seen[s] {
            cycles += 1;
            let mut j = s;
            while !seen[j] {
                seen[j] = true;
                j = g.image(j);
            }
        }
    }
    if (n - cycles) % 2 == 0 { 1 } else { -1 }
}

/// S_4 characters from permutation modules: M^(3,1) = S^4 + S^(3,1) and
/// M^(2,2) = S^4 + S^(3,1) + S^(2,2), then twists by the sign.
fn s4_character(lambda: &[usize], g: &Permutation) -> i64 {
    let (fix, pairs, sgn) = (fixed_points(g), fixed_pairs(g), sign(g));
    match lambda {
        [4] => 1,
        [3, 1] => fix - 1,
        [2, 2] => pairs - fix,
        [2, 1, 1] => sgn * (fix - 1),
        [1, 1, 1, 1] => sgn,
        _ => unreachable!(),
    }
}

fn sample_function(n: usize, seed: u64) -> RankFunction {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let counts = (0..sn_markov::symgroup::factorial(n)).map(|_| rng.random_range(0..6u64)).collect();
    RankFunction::from_dense(n, counts).unwrap()
}

#[test]
fn s4_characters_match_module_oracle() {
    let table = character_table(4).unwrap();
    for lam in partitions_of(4).unwrap() {
        for g in enumerate_sn(4).unwrap() {
            let got = table.value(&lam, &g.cycle_type()).unwrap();
            assert_eq!(got, s4_character(lam.parts(), &g), "{lam} at {g}");
        }
    }
}

/// Matrix of `f ↦ (d/n!) Σ_h χ(h) f(g h)` on the group algebra of S_4.
fn projection_matrix(lambda: &Partition) -> DMatrix<f64> {
    let group = SymmetricGroup::get(4).unwrap();
    let elems = group.elements();
    let d = lambda.dimension() as f64;
    DMatrix::from_fn(24, 24, |g, k| {
        // (P f)(g) picks f(k) with coefficient χ(g⁻¹ k)
        let h = elems[g].inverse().compose(&elems[k]).unwrap();
        d / 24.0 * s4_character(lambda.parts(), &h) as f64
    })
}

#[test]
fn isotypic_projectors_are_orthogonal_idempotents() {
    let mut total = DMatrix::<f64>::zeros(24, 24);
    for lam in partitions_of(4).unwrap() {
        let p = projection_matrix(&lam);
        assert!((&p * &p - &p).abs().max() < 1e-12);
        assert!((&p - p.transpose()).abs().max() < 1e-12);
        let d = lam.dimension() as f64;
        assert!((p.trace() - d * d).abs() < 1e-9);
        let eig = p.clone().symmetric_eigen();
        assert!(eig.eigenvalues.iter().all(|&x| x.abs() < 1e-9 || (x - 1.0).abs() < 1e-9));
        total += p;
    }
    assert!((total - DMatrix::<f64>::identity(24, 24)).abs().max() < 1e-12);
}

#[test]
fn projections_match_matrix_oracle() {
    let f = sample_function(4, 11);
    let v = DMatrix::from_iterator(24, 1, f.counts().iter().map(|&c| c as f64));
    let lengths: Vec<(Partition, f64)> = projection_lengths(&f).unwrap();
    for (lam, length) in lengths {
        let expect = &projection_matrix(&lam) * &v;
        let got = isotypic_projection::<f64>(&f, &lam).unwrap();
        for (a, b) in got.values().iter().zip(expect.iter()) {
            assert!((a - b).abs() < 1e-9);
        }
        assert!((expect.norm_squared() / 24.0 - length).abs() < 1e-9);
    }
}

#[test]
fn inversion_recovers_the_data_exactly() {
    let f = Dataset::apa().to_rank_function();
    let mut sum = vec![Rational::from_integer(0); 120];
    for lam in partitions_of(5).unwrap() {
        let q = isotypic_projection::<Rational>(&f, &lam).unwrap();
        for (s, x) in sum.iter_mut().zip(q.values()) {
            *s += x;
        }
    }
    for (s, &c) in sum.iter().zip(f.counts()) {
        assert_eq!(*s, Rational::from_integer(c as i128));
    }
}

#[test]
fn parseval_on_apa() {
    let f = Dataset::apa().to_rank_function();
    let lengths: Vec<(Partition, Rational)> = projection_lengths(&f).unwrap();
    let total: Rational = lengths.iter().map(|(_, v)| *v).sum();
    let norm: i128 = f.counts().iter().map(|&c| (c * c) as i128).sum();
    assert_eq!(total, Rational::new(norm, 120));
    // the trivial component is N²/(n!)², with N = 5738
    assert_eq!(lengths[0].1, Rational::new(5738 * 5738, 14400));
}

#[test]
fn fourier_transform_matches_matrix_sum() {
    let f = sample_function(4, 5);
    let mut m = DMatrix::<f64>::zeros(4, 4);
    for (g, c) in f.iter() {
        let rho = DMatrix::from_fn(4, 4, |i, j| if g.image(j) == i { 1.0 } else { 0.0 });
        m += rho * c as f64;
    }
    let t = fourier_transform(&f);
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(t.get(i, j) as f64, m[(i, j)]);
        }
    }
}
