//! Integer-lattice arithmetic: multi-indices, small integer matrices,
//! Hermite normal form, and canonical reduction mod a sublattice.

use crate::error::{Error, Result};

/// Multi-index in Z^d.
pub type MultiIndex = Vec<i64>;

/// All multi-indices with sup-norm at most `k`, in lexicographic order.
pub fn cube_indices(d: usize, k: i64) -> Vec<MultiIndex> {
    assert!(k >= 0);
    let side = (2 * k + 1) as usize;
    let count = side.pow(d as u32);
    let mut out = Vec::with_capacity(count);
    let mut idx = vec![-k; d];
    for _ in 0..count {
        out.push(idx.clone());
        for axis in (0..d).rev() {
            if idx[axis] < k {
                idx[axis] += 1;
                break;
            }
            idx[axis] = -k;
        }
    }
    out
}

pub fn sup_norm(k: &[i64]) -> i64 {
    k.iter().map(|x| x.abs()).max().unwrap_or(0)
}

/// Dense d x d integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    d: usize,
    a: Vec<i64>,
}

impl IntMatrix {
    pub fn new(d: usize, a: Vec<i64>) -> Self {
        assert_eq!(a.len(), d * d);
        IntMatrix { d, a }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let d = rows.len();
        let mut a = Vec::with_capacity(d * d);
        for r in rows {
            assert_eq!(r.len(), d);
            a.extend_from_slice(r);
        }
        IntMatrix { d, a }
    }

    pub fn identity(d: usize) -> Self {
        let mut m = IntMatrix {
            d,
            a: vec![0; d * d],
        };
        for i in 0..d {
            m.set(i, i, 1);
        }
        m
    }

    pub fn scalar(d: usize, n: i64) -> Self {
        let mut m = IntMatrix::identity(d);
        for i in 0..d {
            m.set(i, i, n);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.d + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.a[i * self.d + j] = v;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix {
            d: self.d,
            a: vec![0; self.d * self.d],
        };
        for i in 0..self.d {
            for j in 0..self.d {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.d, rhs.d);
        let mut out = IntMatrix {
            d: self.d,
            a: vec![0; self.d * self.d],
        };
        for i in 0..self.d {
            for j in 0..self.d {
                let mut s = 0i64;
                for k in 0..self.d {
                    s += self.get(i, k) * rhs.get(k, j);
                }
                out.set(i, j, s);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i64]) -> MultiIndex {
        assert_eq!(v.len(), self.d);
        (0..self.d)
            .map(|i| (0..self.d).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> i64 {
        let d = self.d;
        let mut m: Vec<i128> = self.a.iter().map(|&x| x as i128).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..d {
            if m[k * d + k] == 0 {
                let Some(p) = (k + 1..d).find(|&r| m[r * d + k] != 0) else {
                    return 0;
                };
                for j in 0..d {
                    m.swap(k * d + j, p * d + j);
                }
                sign = -sign;
            }
            for i in k + 1..d {
                for j in k + 1..d {
                    m[i * d + j] =
                        (m[i * d + j] * m[k * d + k] - m[i * d + k] * m[k * d + j]) / prev;
                }
                m[i * d + k] = 0;
            }
            prev = m[k * d + k];
        }
        (sign * m[(d - 1) * d + (d - 1)]) as i64
    }

    /// Adjugate matrix: adj(M) * M = det(M) * I.
    pub fn adjugate(&self) -> IntMatrix {
        let d = self.d;
        if d == 1 {
            return IntMatrix::identity(1);
        }
        let mut adj = IntMatrix {
            d,
            a: vec![0; d * d],
        };
        for i in 0..d {
            for j in 0..d {
                let minor = self.minor(i, j);
                let cof = minor.det() * if (i + j) % 2 == 0 { 1 } else { -1 };
                adj.set(j, i, cof);
            }
        }
        adj
    }

    fn minor(&self, row: usize, col: usize) -> IntMatrix {
        let d = self.d;
        let mut a = Vec::with_capacity((d - 1) * (d - 1));
        for i in 0..d {
            if i == row {
                continue;
            }
            for j in 0..d {
                if j == col {
                    continue;
                }
                a.push(self.get(i, j));
            }
        }
        IntMatrix { d: d - 1, a }
    }

    /// Solve M x = v over the rationals; returns Some(x) only when x is integral.
    pub fn solve_integral(&self, v: &[i64]) -> Option<MultiIndex> {
        let det = self.det();
        if det == 0 {
            return None;
        }
        let adj = self.adjugate();
        let w = adj.mul_vec(v);
        let mut x = Vec::with_capacity(self.d);
        for c in w {
            if c % det != 0 {
                return None;
            }
            x.push(c / det);
        }
        Some(x)
    }
}

/// Column-style Hermite normal form H = M U with U unimodular.
///
/// H is lower triangular with positive diagonal and, in each row, the
/// entries left of the diagonal reduced into [0, h_ii).
pub fn hermite_normal_form(m: &IntMatrix) -> Result<IntMatrix> {
    if m.det() == 0 {
        return Err(Error::SingularMatrix);
    }
    let d = m.dim();
    let mut h = m.clone();
    for i in 0..d {
        // Clear row i to the right of column i by gcd column operations.
        loop {
            let mut pivot: Option<usize> = None;
            for j in i..d {
                if h.get(i, j) != 0 {
                    pivot = match pivot {
                        Some(p) if h.get(i, p).abs() <= h.get(i, j).abs() => Some(p),
                        _ => Some(j),
                    };
                }
            }
            let p = pivot.expect("nonsingular matrix has a pivot in every row");
            if p != i {
                for r in 0..d {
                    let tmp = h.get(r, i);
                    h.set(r, i, h.get(r, p));
                    h.set(r, p, tmp);
                }
            }
            let piv = h.get(i, i);
            let mut done = true;
            for j in i + 1..d {
                let q = div_floor(h.get(i, j), piv);
                if q != 0 {
                    for r in 0..d {
                        let v = h.get(r, j) - q * h.get(r, i);
                        h.set(r, j, v);
                    }
                }
                if h.get(i, j) != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(i, i) < 0 {
            for r in 0..d {
                h.set(r, i, -h.get(r, i));
            }
        }
        // Reduce entries left of the diagonal in row i.
        for j in 0..i {
            let q = div_floor(h.get(i, j), h.get(i, i));
            if q != 0 {
                for r in 0..d {
                    let v = h.get(r, j) - q * h.get(r, i);
                    h.set(r, j, v);
                }
            }
        }
    }
    Ok(h)
}

/// Canonical representative of x mod H Z^d for lower-triangular H.
pub fn reduce_mod_hnf(h: &IntMatrix, x: &[i64]) -> MultiIndex {
    let d = h.dim();
    let mut r = x.to_vec();
    for i in 0..d {
        let q = div_floor(r[i], h.get(i, i));
        if q != 0 {
            for row in i..d {
                r[row] -= q * h.get(row, i);
            }
        }
    }
    r
}

#[inline]
pub fn div_floor(a: i64, b: i64) -> i64 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_order_is_lexicographic() {
        let idx = cube_indices(2, 1);
        assert_eq!(idx.len(), 9);
        assert_eq!(idx[0], vec![-1, -1]);
        assert_eq!(idx[1], vec![-1, 0]);
        assert_eq!(idx[8], vec![1, 1]);
        let mut sorted = idx.clone();
        sorted.sort();
        assert_eq!(idx, sorted);
    }

    #[test]
    fn det_and_adjugate() {
        let m = IntMatrix::from_rows(&[vec![1, 1], vec![-1, 1]]);
        assert_eq!(m.det(), 2);
        let adj = m.adjugate();
        let prod = adj.mul(&m);
        assert_eq!(prod, IntMatrix::scalar(2, 2));

        let m3 = IntMatrix::from_rows(&[vec![2, 1, 0], vec![0, 3, 1], vec![1, 0, 2]]);
        assert_eq!(m3.det(), 13);
        assert_eq!(m3.adjugate().mul(&m3), IntMatrix::scalar(3, 13));
    }

    #[test]
    fn hnf_is_triangular_with_det_preserved() {
        let cases = vec![
            IntMatrix::from_rows(&[vec![1, 1], vec![-1, 1]]),
            IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]),
            IntMatrix::from_rows(&[vec![4, 2], vec![1, 3]]),
            IntMatrix::from_rows(&[vec![2, 1, 1], vec![0, 1, 3], vec![1, 1, 2]]),
        ];
        for m in cases {
            let h = hermite_normal_form(&m).unwrap();
            assert_eq!(h.det().abs(), m.det().abs());
            for i in 0..m.dim() {
                assert!(h.get(i, i) > 0);
                for j in i + 1..m.dim() {
                    assert_eq!(h.get(i, j), 0, "upper part must vanish");
                }
                for j in 0..i {
                    assert!(h.get(i, j) >= 0 && h.get(i, j) < h.get(i, i));
                }
            }
        }
    }

    #[test]
    fn reduce_mod_hnf_is_idempotent_and_congruent() {
        let m = IntMatrix::from_rows(&[vec![1, 1], vec![-1, 1]]);
        let h = hermite_normal_form(&m).unwrap();
        for x0 in -4..4i64 {
            for x1 in -4..4i64 {
                let r = reduce_mod_hnf(&h, &[x0, x1]);
                let rr = reduce_mod_hnf(&h, &r);
                assert_eq!(r, rr);
                let diff = vec![x0 - r[0], x1 - r[1]];
                assert!(m.solve_integral(&diff).is_some(), "difference not in lattice");
            }
        }
    }

    #[test]
    fn div_floor_matches_mathematical_floor() {
        assert_eq!(div_floor(7, 2), 3);
        assert_eq!(div_floor(-7, 2), -4);
        assert_eq!(div_floor(7, -2), -4);
        assert_eq!(div_floor(-7, -2), 3);
        assert_eq!(div_floor(6, 3), 2);
        assert_eq!(div_floor(-6, 3), -2);
    }
}
