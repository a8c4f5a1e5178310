//! Exact integer linear algebra: fraction-free determinants, Smith normal
//! form invariants, and multilinear determinant interpolation for symbolic
//! matrices whose variables each occupy a single entry.

use crate::poly::{Monomial, SparsePoly};
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Fraction-free Bareiss determinant. Consumes the matrix. Intermediate
/// entries are minors of the input, so they stay Hadamard-bounded.
pub fn bareiss_det<C: Scalar>(mut m: Vec<Vec<C>>) -> C {
    let n = m.len();
    if n == 0 {
        return C::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut sign = false;
    let mut prev = C::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return C::zero();
            };
            m.swap(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num / prev.clone();
            }
            m[i][k] = C::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// Invariant factors of an integer matrix (Smith normal form diagonal),
/// nonnegative, zeros trailing. Small matrices only.
pub fn smith_invariant_factors(mut m: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut factors = Vec::new();
    let mut top = 0usize;
    let mut left = 0usize;
    while top < rows && left < cols {
        // Find a pivot of minimal absolute value.
        let mut pivot: Option<(usize, usize)> = None;
        for i in top..rows {
            for j in left..cols {
                if m[i][j] != 0
                    && pivot.map_or(true, |(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(top, pi);
        for row in m.iter_mut() {
            row.swap(left, pj);
        }
        // Reduce the pivot row/column; restart if a smaller remainder shows up.
        let mut clean = true;
        for i in top + 1..rows {
            let q = m[i][left].div_euclid(m[top][left]);
            if q != 0 {
                for j in left..cols {
                    m[i][j] -= q * m[top][j];
                }
            }
            if m[i][left] != 0 {
                clean = false;
            }
        }
        for j in left + 1..cols {
            let q = m[top][j].div_euclid(m[top][left]);
            if q != 0 {
                for i in top..rows {
                    m[i][j] -= q * m[i][left];
                }
            }
            if m[top][j] != 0 {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // Pivot must divide the rest of the block; fold a violation in.
        let p = m[top][left];
        let mut fixed = true;
        'scan: for i in top + 1..rows {
            for j in left + 1..cols {
                if m[i][j] % p != 0 {
                    for jj in left..cols {
                        let add = m[i][jj];
                        m[top][jj] += add;
                    }
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if !fixed {
            continue;
        }
        factors.push(p.abs());
        top += 1;
        left += 1;
    }
    factors
}

/// One entry of a symbolic matrix: zero, a small integer, or a single
/// variable (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Entry {
    Zero,
    Int(i8),
    Var(usize),
}

/// A dense matrix over the `0 / ±c / α_v` alphabet. Minors of such matrices
/// are multilinear whenever every variable occurs in exactly one entry,
/// which is enforced at interpolation time.
#[derive(Debug, Clone)]
pub struct SymbolicMatrix {
    pub size: usize,
    pub entries: Vec<Entry>,
    pub nvars: usize,
}

impl SymbolicMatrix {
    pub fn new(size: usize, nvars: usize) -> Self {
        SymbolicMatrix {
            size,
            entries: vec![Entry::Zero; size * size],
            nvars,
        }
    }

    pub fn set(&mut self, i: usize, j: usize, e: Entry) {
        self.entries[i * self.size + j] = e;
    }

    pub fn get(&self, i: usize, j: usize) -> Entry {
        self.entries[i * self.size + j]
    }

    /// Remove rows `rows` and columns `cols` (0-based, sorted or not).
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> SymbolicMatrix {
        let keep_r: Vec<usize> = (0..self.size).filter(|r| !rows.contains(r)).collect();
        let keep_c: Vec<usize> = (0..self.size).filter(|c| !cols.contains(c)).collect();
        assert_eq!(keep_r.len(), keep_c.len(), "minor must stay square");
        let mut out = SymbolicMatrix::new(keep_r.len(), self.nvars);
        for (i, &r) in keep_r.iter().enumerate() {
            for (j, &c) in keep_c.iter().enumerate() {
                out.set(i, j, self.get(r, c));
            }
        }
        out
    }

    /// Substitute zero for a set of variables.
    pub fn zero_vars(&self, vars: &[usize]) -> SymbolicMatrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            if let Entry::Var(v) = e {
                if vars.contains(v) {
                    *e = Entry::Zero;
                }
            }
        }
        out
    }

    /// Exact symbolic determinant by evaluation over the 0/1 grid followed
    /// by Möbius inversion on the subset lattice. Valid because every
    /// variable occupies exactly one entry, making the determinant
    /// multilinear; that occupancy is checked here.
    pub fn det_multilinear<C: Scalar>(&self) -> Result<SparsePoly<C>> {
        let mut present: Vec<usize> = Vec::new();
        let mut seen = vec![0u32; self.nvars];
        for e in &self.entries {
            match e {
                Entry::Zero => {}
                Entry::Int(c) => {
                    if c.abs() > 1 {
                        return Err(Error::BadEntry);
                    }
                }
                Entry::Var(v) => {
                    if *v >= self.nvars {
                        return Err(Error::BadEntry);
                    }
                    seen[*v] += 1;
                    if seen[*v] > 1 {
                        return Err(Error::BadEntry);
                    }
                    if seen[*v] == 1 {
                        present.push(*v);
                    }
                }
            }
        }
        present.sort_unstable();
        let k = present.len();
        assert!(k <= 24, "grid interpolation limited to 24 variables");
        let mut grid = vec![0i128; 1usize << k];
        let mut slot = vec![usize::MAX; self.nvars];
        for (s, &v) in present.iter().enumerate() {
            slot[v] = s;
        }
        let mut base = vec![vec![0i128; self.size]; self.size];
        for mask in 0..(1usize << k) {
            for i in 0..self.size {
                for j in 0..self.size {
                    base[i][j] = match self.get(i, j) {
                        Entry::Zero => 0,
                        Entry::Int(c) => c as i128,
                        Entry::Var(v) => ((mask >> slot[v]) & 1) as i128,
                    };
                }
            }
            grid[mask] = bareiss_det(base.clone());
        }
        // In-place Möbius inversion: coefficient of the monomial Π_{s∈S} α_s.
        for b in 0..k {
            for mask in 0..(1usize << k) {
                if mask & (1 << b) != 0 {
                    grid[mask] -= grid[mask ^ (1 << b)];
                }
            }
        }
        let mut poly = SparsePoly::zero(self.nvars);
        for (mask, c) in grid.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let mut exps = vec![0u8; self.nvars];
            for (s, &v) in present.iter().enumerate() {
                if mask & (1 << s) != 0 {
                    exps[v] = 1;
                }
            }
            poly.add_term(Monomial::new(exps), C::from_wide(*c));
        }
        Ok(poly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_small() {
        let m = vec![vec![1i64, 2], vec![3, 4]];
        assert_eq!(bareiss_det(m), -2);
        let id3 = vec![vec![1i64, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(bareiss_det(id3), 1);
        let sing = vec![vec![1i64, 2], vec![2, 4]];
        assert_eq!(bareiss_det(sing), 0);
    }

    #[test]
    fn bareiss_needs_pivot_swap() {
        let m = vec![vec![0i64, 1], vec![1, 0]];
        assert_eq!(bareiss_det(m), -1);
    }

    #[test]
    fn bareiss_bigint() {
        use num_bigint::BigInt;
        let m = vec![
            vec![BigInt::from(2), BigInt::from(0)],
            vec![BigInt::from(7), BigInt::from(3)],
        ];
        assert_eq!(bareiss_det(m), BigInt::from(6));
    }

    #[test]
    fn smith_unimodular_has_unit_factors() {
        let m = vec![vec![1i128, 0, 1], vec![0, 1, 1]];
        assert_eq!(smith_invariant_factors(m), vec![1, 1]);
    }

    #[test]
    fn smith_detects_non_primitive_lattice() {
        let m = vec![vec![2i128, 0], vec![0, 2]];
        assert_eq!(smith_invariant_factors(m), vec![2, 2]);
        let m2 = vec![vec![2i128, 4], vec![0, 0]];
        assert_eq!(smith_invariant_factors(m2), vec![2]);
    }

    #[test]
    fn det_multilinear_diagonal() {
        // det diag(a0, a1) = a0*a1
        let mut m = SymbolicMatrix::new(2, 2);
        m.set(0, 0, Entry::Var(0));
        m.set(1, 1, Entry::Var(1));
        let p: SparsePoly<i64> = m.det_multilinear().unwrap();
        assert_eq!(p.to_canonical_string(), "+1*a1*a2");
    }

    #[test]
    fn det_multilinear_mixed() {
        // det [[a0, 1], [-1, a1]] = a0*a1 + 1
        let mut m = SymbolicMatrix::new(2, 2);
        m.set(0, 0, Entry::Var(0));
        m.set(0, 1, Entry::Int(1));
        m.set(1, 0, Entry::Int(-1));
        m.set(1, 1, Entry::Var(1));
        let p: SparsePoly<i64> = m.det_multilinear().unwrap();
        assert_eq!(p.to_canonical_string(), "+1*a1*a2 +1");
    }

    #[test]
    fn det_multilinear_zero_matrix() {
        let m = SymbolicMatrix::new(3, 0);
        let p: SparsePoly<i64> = m.det_multilinear().unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn det_multilinear_rejects_repeated_var() {
        let mut m = SymbolicMatrix::new(2, 1);
        m.set(0, 0, Entry::Var(0));
        m.set(1, 1, Entry::Var(0));
        assert!(matches!(
            m.det_multilinear::<i64>(),
            Err(Error::BadEntry)
        ));
    }
}
