use super::CycElem;

/// Determinant of a 3×3 matrix over ℚ(ζ₇) by cofactor expansion along the
/// first row.
pub fn det3(m: &[[CycElem; 3]; 3]) -> CycElem {
    let minor = |c1: usize, c2: usize| &(&m[1][c1] * &m[2][c2]) - &(&m[1][c2] * &m[2][c1]);
    let mut d = &m[0][0] * &minor(1, 2);
    d -= &(&m[0][1] * &minor(0, 2));
    d += &(&m[0][2] * &minor(0, 1));
    d
}
