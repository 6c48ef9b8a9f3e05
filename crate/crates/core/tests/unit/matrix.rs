use heatcg::{CrsMatrix, DenseMatrix, LinalgError};
use proptest::prelude::*;

#[test]
fn set_matrix_values() {
    let mut m = DenseMatrix::zeros(2, 3);
    m[(0, 2)] = 5.0;
    m.set(1, 0, -1.0).unwrap();
    assert_eq!(m.entries(), &[0.0, 0.0, 5.0, -1.0, 0.0, 0.0]);
    assert_eq!(
        m.set(2, 0, 1.0),
        Err(LinalgError::EntryOutOfRange {
            row: 2,
            col: 0,
            rows: 2,
            cols: 3
        })
    );
}

#[test]
fn scalar_matrix_multiplication() {
    let m = DenseMatrix::from_rows(&[[1.0, 2.0], [3.0, 4.0]]).unwrap();
    let s = m.scale(2.0).unwrap();
    assert_eq!(
        s,
        DenseMatrix::from_rows(&[[2.0, 4.0], [6.0, 8.0]]).unwrap()
    );
    assert_eq!(m.scale(0.0).unwrap(), DenseMatrix::zeros(2, 2));
}

#[test]
fn crs_from_dense_layout() {
    let d = DenseMatrix::from_rows(&[[1.0, 0.0, 2.0], [0.0, 0.0, 3.0], [4.0, 5.0, 0.0]]).unwrap();
    let c = CrsMatrix::from_dense(&d);
    assert_eq!(c.values(), &[1.0, 2.0, 3.0, 4.0, 5.0]);
    assert_eq!(c.col_indices(), &[0, 2, 2, 0, 1]);
    assert_eq!(c.row_ptr(), &[0, 2, 3, 5]);
}

#[test]
#[should_panic(expected = "out of range")]
fn matrix_index_out_of_range() {
    let m = DenseMatrix::<f64>::identity(2);
    let _ = m[(2, 2)];
}

fn dense() -> impl Strategy<Value = DenseMatrix<f64>> {
    (0usize..8, 0usize..8).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop_oneof![3 => Just(0.0), 2 => -5.0f64..5.0], r * c)
            .prop_map(move |e| DenseMatrix::from_row_major(r, c, e).unwrap())
    })
}

proptest! {
    #[test]
    fn crs_structure_invariants(m in dense()) {
        let c = CrsMatrix::from_dense(&m);
        let ptr = c.row_ptr();
        prop_assert_eq!(ptr.len(), m.rows() + 1);
        prop_assert_eq!(ptr[0], 0);
        prop_assert_eq!(ptr[m.rows()], c.nnz());
        prop_assert!(ptr.windows(2).all(|w| w[0] <= w[1]));
        for w in ptr.windows(2) {
            let idx = &c.col_indices()[w[0]..w[1]];
            prop_assert!(idx.windows(2).all(|p| p[0] < p[1]));
            prop_assert!(idx.iter().all(|&j| j < m.cols()));
        }
        prop_assert!(c.values().iter().all(|&v| v != 0.0));
        prop_assert_eq!(c.to_dense(), m);
        prop_assert!(CrsMatrix::from_parts(
            c.rows(), c.cols(), c.values().to_vec(), c.col_indices().to_vec(), ptr.to_vec()
        ).is_ok());
    }
}
