//! Small dense determinants over any commutative ring.

use super::field::Ring;

/// Determinant by cofactor expansion along the first row; fine for small orders.
pub fn determinant<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut acc = R::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<R>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| v.clone()).collect()).collect();
        let term = m[0][j].clone() * determinant(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, UniPoly};
    use num_rational::BigRational;
    use num_traits::One;

    #[test]
    fn two_by_two() {
        let m: Vec<Vec<BigRational>> = vec![vec![rat(2), rat(1)], vec![rat(1), rat(3)]];
        assert_eq!(determinant(&m), rat(5));
    }

    #[test]
    fn polynomial_entries_and_empty() {
        let t = UniPoly::var();
        let one = UniPoly::one();
        let m = vec![vec![t.clone(), one.clone()], vec![one.clone(), t.clone()]];
        assert_eq!(determinant(&m), UniPoly::from_ints(&[-1, 0, 1]));
        assert_eq!(determinant::<BigRational>(&[]), rat(1));
    }
}
