//! Exact dense linear algebra over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_vec(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_int(a: &[i64], b: &[Q]) -> Q {
    let mut acc = Q::zero();
    for (&x, y) in a.iter().zip(b) {
        match x {
            0 => {}
            1 => acc += y,
            -1 => acc -= y,
            _ => acc += y * q(x),
        }
    }
    acc
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (head, tail) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&mut a[i], &b[0])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&mut b[0], &a[r])
                };
                for (x, y) in head.iter_mut().zip(tail.iter()) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Solves the square system `a x = b`; `None` when `a` is singular.
pub fn solve_square(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

/// Fraction-free Bareiss solve for an integer matrix with rational right-hand
/// side. Returns `None` when the matrix is singular.
pub fn solve_integer(a: &[Vec<i64>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.len();
    // clear denominators of the right-hand side
    let lcm = b
        .iter()
        .fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r: Vec<BigInt> = row.iter().map(|&x| BigInt::from(x)).collect();
            r.push((rhs * Q::from_integer(lcm.clone())).to_integer());
            r
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero())?;
        m.swap(k, p);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    // back substitution on the upper-triangular integer system
    let mut x = vec![Q::zero(); n];
    for i in (0..n).rev() {
        let mut s = Q::from_integer(m[i][n].clone());
        for j in i + 1..n {
            s -= Q::from_integer(m[i][j].clone()) * &x[j];
        }
        x[i] = s / Q::from_integer(m[i][i].clone());
    }
    let scale = Q::from_integer(lcm);
    Some(x.into_iter().map(|v| v / &scale).collect())
}

/// Basis of the right null space `{x : rows x = 0}`.
pub fn nullspace(rows: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Affine dimension of a point set (`-1` encoded as `None` for the empty set).
pub fn affine_rank(points: &[Vec<Q>]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let diffs: Vec<Vec<Q>> = rest
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    Some(rank(&diffs))
}

/// Formats a rational as `"num/den"`, or `"num"` when integral.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => Some(Q::from_integer(s.parse().ok()?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_small_systems() {
        let a = vec![q_vec(&[2, 1]), q_vec(&[1, 3])];
        let x = solve_square(&a, &q_vec(&[3, 5])).unwrap();
        assert_eq!(x, vec![Q::new(4.into(), 5.into()), Q::new(7.into(), 5.into())]);
        let y = solve_integer(&[vec![2, 1], vec![1, 3]], &q_vec(&[3, 5])).unwrap();
        assert_eq!(x, y);
        assert!(solve_integer(&[vec![1, 2], vec![2, 4]], &q_vec(&[1, 1])).is_none());
        assert!(solve_square(&[q_vec(&[1, 2]), q_vec(&[2, 4])], &q_vec(&[1, 1])).is_none());
    }

    #[test]
    fn bareiss_needs_pivoting() {
        let a = vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]];
        let b = vec![Q::new(1.into(), 2.into()), q(1), q(2)];
        let x = solve_integer(&a, &b).unwrap();
        for (row, rhs) in a.iter().zip(&b) {
            assert_eq!(&dot_int(row, &x), rhs);
        }
    }

    #[test]
    fn null_space_and_rank() {
        let rows = vec![q_vec(&[1, 1, 0]), q_vec(&[0, 1, 1])];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        for r in &rows {
            assert!(dot(r, &ns[0]).is_zero());
        }
        assert_eq!(rank(&rows), 2);
        assert_eq!(affine_rank(&[q_vec(&[0, 0]), q_vec(&[1, 1]), q_vec(&[2, 2])]), Some(1));
    }

    #[test]
    fn rational_strings() {
        assert_eq!(fmt_q(&Q::new(6.into(), 4.into())), "3/2");
        assert_eq!(fmt_q(&q(-2)), "-2");
        assert_eq!(parse_q("3/2"), Some(Q::new(3.into(), 2.into())));
        assert_eq!(parse_q("1/0"), None);
    }
}
