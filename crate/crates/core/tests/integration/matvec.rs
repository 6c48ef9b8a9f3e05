use heatcg::{approx_eq, CrsMatrix, DenseMatrix, FloatCompareSpec, LinalgError, Vector};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::common;

#[test]
fn matrix_vector_multiplication() {
    // Arrange
    let matrix =
        DenseMatrix::from_rows(&[[1.0, 2.0, 3.0], [4.0, 5.0, 6.0], [7.0, 8.0, 9.0]]).unwrap();
    let vector = Vector::from([6.0, -2.0, 6.0]);

    // Act
    let result = matrix.matvec(&vector).unwrap();

    // Assert
    assert_eq!(result.as_slice(), &[20.0, 50.0, 80.0]);
}

#[test]
fn sparse_matrix_vector_multiplication() {
    let matrix =
        DenseMatrix::from_rows(&[[1.0, 2.0, 3.0], [4.0, 5.0, 6.0], [7.0, 8.0, 9.0]]).unwrap();
    let result = CrsMatrix::from_dense(&matrix)
        .matvec(&Vector::from([6.0, -2.0, 6.0]))
        .unwrap();
    assert_eq!(result.as_slice(), &[20.0, 50.0, 80.0]);
}

#[test]
fn matvec_dimension_mismatch() {
    let m = DenseMatrix::<f64>::zeros(2, 3);
    let err = m.matvec(&Vector::zeros(2)).unwrap_err();
    assert_eq!(err, LinalgError::MatVecMismatch { cols: 3, len: 2 });
    assert!(CrsMatrix::from_dense(&m).matvec(&Vector::zeros(2)).is_err());
}

#[test]
fn sparse_dense_agree_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..50 {
        let a = common::random_sparse(10, 10, 0.3, &mut rng);
        let x = common::random_vec(10, &mut rng);
        let dense = DenseMatrix::from_rows(&a).unwrap();
        let v = Vector::new(x.clone());
        let d = dense.matvec(&v).unwrap();
        let s = CrsMatrix::from_dense(&dense).matvec(&v).unwrap();
        assert!(common::bitwise_eq(d.as_slice(), s.as_slice()));
        let naive = common::naive_matvec(&a, &x);
        for (p, q) in d.iter().zip(&naive) {
            assert!((p - q).abs() <= 1e-12 * (1.0 + q.abs()));
        }
    }
}

fn system() -> impl Strategy<Value = (Vec<f64>, usize, usize, Vec<f64>, Vec<f64>)> {
    (1usize..12, 1usize..12).prop_flat_map(|(r, c)| {
        (
            prop::collection::vec(-1.0f64..=1.0, r * c),
            Just(r),
            Just(c),
            prop::collection::vec(-1.0f64..=1.0, c),
            prop::collection::vec(-1.0f64..=1.0, c),
        )
    })
}

proptest! {
    #[test]
    fn matvec_is_linear((entries, r, c, u, v) in system()) {
        let m = DenseMatrix::from_row_major(r, c, entries).unwrap();
        let (u, v) = (Vector::new(u), Vector::new(v));
        let lhs = m.matvec(&u.try_add(&v).unwrap()).unwrap();
        let rhs = m.matvec(&u).unwrap().try_add(&m.matvec(&v).unwrap()).unwrap();
        let spec = FloatCompareSpec::double(64.0).unwrap();
        // near exact cancellation the relative test has no headroom, so an
        // absolute bound of the same size backs it up
        let abs_bound = 64.0 * f64::EPSILON * c as f64;
        for (a, b) in lhs.iter().zip(rhs.iter()) {
            prop_assert!(approx_eq(*a, *b, spec).unwrap() || (a - b).abs() <= abs_bound, "{} vs {}", a, b);
        }
    }

    #[test]
    fn sparse_dense_bitwise((entries, r, c, v, _w) in system(), mask in prop::collection::vec(prop::bool::weighted(0.3), 144)) {
        let entries: Vec<f64> = entries.iter().zip(mask.iter().cycle()).map(|(&e, &keep)| if keep { e } else { 0.0 }).collect();
        let m = DenseMatrix::from_row_major(r, c, entries).unwrap();
        let v = Vector::new(v);
        let d = m.matvec(&v).unwrap();
        let s = CrsMatrix::from_dense(&m).matvec(&v).unwrap();
        prop_assert!(common::bitwise_eq(d.as_slice(), s.as_slice()));
    }
}
