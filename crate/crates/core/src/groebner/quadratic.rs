use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyring::{rational, Coeff, Polynomial};

/// Symmetric Gram matrix of a quadratic form, indexed by ring variables.
pub fn gram_matrix(f: &Polynomial) -> Result<Vec<Vec<Coeff>>> {
    if f.is_zero() || !f.is_homogeneous() || f.total_degree() != Some(2) {
        return Err(Error::NotQuadratic(f.to_string()));
    }
    let n = f.ring().nvars();
    let mut g = vec![vec![Coeff::zero(); n]; n];
    let half = rational(1, 2);
    for (m, c) in f.terms() {
        let vars: Vec<usize> =
            m.exponents().iter().enumerate().flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize)).collect();
        let (i, j) = (vars[0], vars[1]);
        if i == j {
            g[i][i] = c.clone();
        } else {
            g[i][j] = c * &half;
            g[j][i] = c * &half;
        }
    }
    Ok(g)
}

/// Rank of a matrix over the rationals.
pub fn matrix_rank(mut rows: Vec<Vec<Coeff>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, p);
        let inv = Coeff::one() / &rows[rank][col];
        for r in 0..rows.len() {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] * &inv;
            let pivot = rows[rank].clone();
            for (x, p) in rows[r].iter_mut().zip(&pivot).skip(col) {
                *x -= &factor * p;
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of a homogeneous quadratic form.
pub fn quadratic_rank(f: &Polynomial) -> Result<usize> {
    Ok(matrix_rank(gram_matrix(f)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, Ring};

    #[test]
    fn ranks() {
        let r = Ring::grevlex(&["a", "b", "c", "d", "e"]).unwrap();
        let rank = |s: &str| quadratic_rank(&parse_polynomial(s, &r).unwrap()).unwrap();
        assert_eq!(rank("b*e - c*d"), 4);
        assert_eq!(rank("a^2"), 1);
        assert_eq!(rank("a^2 + 2*a*b + b^2"), 1);
        assert_eq!(rank("a*b"), 2);
        assert_eq!(rank("a^2 + b^2 + c^2"), 3);
    }

    #[test]
    fn rejects_non_quadratic() {
        let r = Ring::grevlex(&["a", "b"]).unwrap();
        for s in ["a", "a^3", "a^2 + b", "0"] {
            let f = parse_polynomial(s, &r).unwrap();
            assert!(matches!(quadratic_rank(&f), Err(Error::NotQuadratic(_))));
        }
    }
}
