//! `x_{i,j}` from the accelerated series against direct quadrature over the
//! simplex `0 < t₁ < t₂ < 1`.

use klein_volume::specfun::{x_ij, x_ij_by_quadrature, SeriesPolicy};

fn main() {
    let policy = SeriesPolicy::default();
    for (i, j) in [(1, 2), (2, 3), (3, 1), (2, 1), (3, 2), (1, 3)] {
        let s = x_ij(i, j, &policy).unwrap();
        let q = x_ij_by_quadrature(i, j, 1e-10).unwrap();
        println!(
            "x{i}{j}: series {:.14} ({}), quadrature {:.14}, diff {:+.1e}",
            s.value.value,
            s.series.method,
            q.value,
            s.value.value - q.value
        );
    }
}
