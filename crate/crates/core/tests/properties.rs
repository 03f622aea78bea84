//! Linear-algebra invariants checked against independent oracles.
//!
//! The naive textbook elimination here is deliberately separate from the
//! library's kernel: it works on dense rational rows with no pivoting
//! strategy, content reduction or sparsity, and serves as the rank oracle.

use num_traits::Zero;
use proptest::prelude::*;

use leibniz_core::matrix::Matrix;
use leibniz_core::sample::Sampler;
use leibniz_core::scalar::{frac, int, unit_vec, zero_vec, Scalar};
use leibniz_core::subspace::Subspace;

/// Rank by plain Gaussian elimination, no frills.
fn naive_rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let p = m[rank][c].clone();
        for r in rank + 1..m.len() {
            if !m[r][c].is_zero() {
                let f = &m[r][c] / &p;
                for j in c..cols {
                    let v = &m[r][j] - &f * &m[rank][j];
                    m[r][j] = v;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn sampled_matrix(seed: u64, rows: usize, cols: usize) -> Matrix {
    let mut rng = Sampler::new(seed);
    Matrix::from_rows(rng.rational_matrix(rows, cols))
}

#[test]
fn random_6x9_rank_matches_naive_oracle() {
    for seed in 0..20 {
        let m = sampled_matrix(seed, 6, 9);
        let (_, rank, _) = m.rref();
        assert_eq!(rank, naive_rank(&m.row_vecs()), "seed {seed}");
    }
}

#[test]
fn nullspace_of_trivial_matrices() {
    assert_eq!(Matrix::zero(3, 3).nullspace().dim(), 3);
    assert_eq!(Matrix::identity(3).nullspace().dim(), 0);
    let row = Matrix::from_rows(vec![vec![int(1), int(1)]]);
    let ns = row.nullspace();
    assert_eq!(ns.dim(), 1);
    assert!(ns.contains(&[int(1), int(-1)]));
}

#[test]
fn jordan_blocks_recovered_after_conjugation() {
    // build block-diagonal nilpotent matrices with known shapes and hide
    // them behind a random similarity
    let shapes: [&[usize]; 4] = [&[3, 2, 1], &[4, 1, 1], &[2, 2, 2], &[5, 1]];
    for (i, shape) in shapes.iter().enumerate() {
        let n: usize = shape.iter().sum();
        let mut j = Matrix::zero(n, n);
        let mut offset = 0;
        for &s in shape.iter() {
            for r in 0..s - 1 {
                j.set(offset + r, offset + r + 1, int(1));
            }
            offset += s;
        }
        let mut rng = Sampler::new(100 + i as u64);
        let p = rng.invertible_matrix(n);
        let conj = p.inverse().unwrap().mul(&j).unwrap().mul(&p).unwrap();
        assert_eq!(conj.jordan_blocks_nilpotent().unwrap(), shape.to_vec());
    }
}

#[test]
fn jordan_blocks_match_kernel_chain_oracle() {
    // independent route: number of blocks of size >= j equals
    // dim ker(M^j) - dim ker(M^{j-1})
    for seed in 0..10 {
        let mut rng = Sampler::new(seed);
        let n = 5;
        // random strictly upper-triangular matrix: always nilpotent
        let mut m = Matrix::zero(n, n);
        for r in 0..n {
            for c in r + 1..n {
                m.set(r, c, rng.rational());
            }
        }
        let blocks = m.jordan_blocks_nilpotent().unwrap();
        let mut kernel_dims = vec![0usize];
        let mut p = Matrix::identity(n);
        loop {
            p = p.mul(&m).unwrap();
            kernel_dims.push(p.nullspace().dim());
            if *kernel_dims.last().unwrap() == n {
                break;
            }
        }
        for j in 1..kernel_dims.len() {
            let at_least_j = kernel_dims[j] - kernel_dims[j - 1];
            assert_eq!(blocks.iter().filter(|&&s| s >= j).count(), at_least_j);
        }
    }
}

#[test]
fn reruns_are_bit_identical() {
    let m = sampled_matrix(42, 7, 11);
    let first = m.rref();
    for _ in 0..3 {
        let again = sampled_matrix(42, 7, 11).rref();
        assert_eq!(first.0, again.0);
        assert_eq!(first.2, again.2);
    }
}

// ---- proptest strategies ----

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn matrix_strategy(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(scalar_strategy(), r * c).prop_map(move |data| {
            Matrix::from_fn(r, c, |i, j| data[i * c + j].clone())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rref_is_idempotent(m in matrix_strategy(6, 7)) {
        let (r1, rank1, piv1) = m.rref();
        let (r2, rank2, piv2) = r1.rref();
        prop_assert_eq!(r1, r2);
        prop_assert_eq!(rank1, rank2);
        prop_assert_eq!(piv1, piv2);
    }

    #[test]
    fn rank_nullity_holds(m in matrix_strategy(6, 7)) {
        prop_assert_eq!(m.nullspace().dim() + m.rank(), m.cols());
    }

    #[test]
    fn nullspace_vectors_are_killed(m in matrix_strategy(5, 6)) {
        let ns = m.nullspace();
        for r in 0..ns.dim() {
            let v = ns.basis().row(r);
            let image = m.transpose().apply(v).unwrap();
            prop_assert!(image.iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn rank_agrees_with_naive_elimination(m in matrix_strategy(6, 8)) {
        prop_assert_eq!(m.rank(), naive_rank(&m.row_vecs()));
    }

    #[test]
    fn grassmann_identity(
        rows_s in proptest::collection::vec(proptest::collection::vec(scalar_strategy(), 12), 1..5),
        rows_t in proptest::collection::vec(proptest::collection::vec(scalar_strategy(), 12), 1..5),
    ) {
        let s = Subspace::from_spanning(12, &rows_s);
        let t = Subspace::from_spanning(12, &rows_t);
        let sum = s.sum(&t).unwrap();
        let inter = s.intersection(&t).unwrap();
        prop_assert_eq!(sum.dim() + inter.dim(), s.dim() + t.dim());
        prop_assert!(sum.contains_subspace(&s));
        prop_assert!(s.contains_subspace(&inter));
    }

    #[test]
    fn scalar_strings_round_trip(p in -100i64..=100, q in 1i64..=40) {
        let v = frac(p, q);
        let s = leibniz_core::scalar::format_scalar(&v);
        prop_assert_eq!(leibniz_core::scalar::parse_scalar(&s).unwrap(), v);
    }

    #[test]
    fn subspace_reduce_is_projection(
        rows in proptest::collection::vec(proptest::collection::vec(scalar_strategy(), 6), 1..4),
        v in proptest::collection::vec(scalar_strategy(), 6),
    ) {
        let s = Subspace::from_spanning(6, &rows);
        let r = s.reduce(&v);
        // reducing twice changes nothing, and v - r lies in the span
        let rr = s.reduce(&r);
        prop_assert_eq!(&rr, &r);
        let mut diff = v.clone();
        for i in 0..6 {
            diff[i] = &diff[i] - &r[i];
        }
        prop_assert!(s.contains(&diff));
    }
}

#[test]
fn nullspace_kills_exactly() {
    // exactness spot check: a system with awkward fractions
    let m = Matrix::from_rows(vec![
        vec![frac(1, 3), frac(2, 7), frac(-5, 11)],
        vec![frac(3, 13), frac(-1, 17), frac(7, 19)],
    ]);
    let ns = m.nullspace();
    assert_eq!(ns.dim(), 1);
    let v = ns.basis().row(0);
    let image = m.transpose().apply(v).unwrap();
    assert!(image.iter().all(|c| c.is_zero()));
    // zero vector sanity
    assert!(ns.contains(&zero_vec(3)));
    assert!(!ns.contains(&unit_vec(3, 0)));
}
