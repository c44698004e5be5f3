//! Exact rational linear algebra over graded bases.
//!
//! Kernels, images, quotients and membership solving for the homology
//! engine. Everything is computed by plain rational Gaussian elimination
//! with the pivot chosen as the first nonzero entry in column order, so
//! results are deterministic and exactly reproducible. Bases of
//! subspaces are kept in reduced row echelon form.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar: arbitrary-precision, always in lowest terms,
/// positive denominator. `num::BigRational` maintains both invariants.
pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses a decimal-integer fraction `p/q` or `p`.
pub fn parse_rat(s: &str) -> Result<Rat, LinAlgError> {
    let s = s.trim();
    let mk_err = || LinAlgError::BadCoefficient(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| mk_err())?;
    let q: BigInt = den.parse().map_err(|_| mk_err())?;
    if q.is_zero() {
        return Err(mk_err());
    }
    Ok(Rat::new(p, q))
}

/// Renders in the same `p/q` / `p` syntax accepted by [`parse_rat`].
pub fn render_rat(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("coefficient `{0}` is not a rational p/q")]
    BadCoefficient(String),
    #[error("dimension mismatch: vector has length {got}, ambient dimension is {want}")]
    DimensionMismatch { got: usize, want: usize },
    #[error("matrix entry ({row},{col}) out of range {rows}x{cols}")]
    EntryOutOfRange { row: usize, col: usize, rows: usize, cols: usize },
    #[error("subspace is not contained in the claimed ambient space: {0}")]
    NotASubspace(String),
}

/// Sparse rational matrix. No duplicate coordinates and no stored zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rat>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Adds `value` to the entry at `(row, col)`, dropping it if the sum
    /// is zero. Insertion order never affects the result.
    pub fn add(&mut self, row: usize, col: usize, value: Rat) -> Result<(), LinAlgError> {
        if row >= self.rows || col >= self.cols {
            return Err(LinAlgError::EntryOutOfRange { row, col, rows: self.rows, cols: self.cols });
        }
        if value.is_zero() {
            return Ok(());
        }
        let slot = self.entries.entry((row, col)).or_insert_with(Rat::zero);
        *slot += value;
        if slot.is_zero() {
            self.entries.remove(&(row, col));
        }
        Ok(())
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rat)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rat]) -> Result<Vec<Rat>, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::DimensionMismatch { got: v.len(), want: self.cols });
        }
        let mut out = vec![Rat::zero(); self.rows];
        for (&(r, c), val) in &self.entries {
            if !v[c].is_zero() {
                out[r] += val * &v[c];
            }
        }
        Ok(out)
    }

    /// Rows as sparse maps, for the elimination routines.
    fn sparse_rows(&self) -> Vec<BTreeMap<usize, Rat>> {
        let mut rows = vec![BTreeMap::new(); self.rows];
        for (&(r, c), v) in &self.entries {
            rows[r].insert(c, v.clone());
        }
        rows
    }

    fn column_vectors(&self) -> Vec<Vec<Rat>> {
        let mut cols = vec![vec![Rat::zero(); self.rows]; self.cols];
        for (&(r, c), v) in &self.entries {
            cols[c][r] = v.clone();
        }
        cols
    }
}

/// A subspace of Q^n given by a basis in reduced row echelon form with
/// strictly increasing pivots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    vectors: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn empty(ambient: usize) -> Self {
        SubspaceBasis { ambient, vectors: Vec::new(), pivots: Vec::new() }
    }

    /// Builds the span of arbitrary vectors, reducing to RREF.
    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<Rat>>) -> Result<Self, LinAlgError> {
        let mut basis = SubspaceBasis::empty(ambient);
        for v in vectors {
            basis.insert(v)?;
        }
        Ok(basis)
    }

    pub fn ambient_dimension(&self) -> usize {
        self.ambient
    }

    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<Rat>] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis; the remainder is `v` minus its
    /// projection to the span along the pivot coordinates.
    pub fn reduce(&self, v: &[Rat]) -> Result<Vec<Rat>, LinAlgError> {
        if v.len() != self.ambient {
            return Err(LinAlgError::DimensionMismatch { got: v.len(), want: self.ambient });
        }
        let mut w = v.to_vec();
        for (vec, &p) in self.vectors.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let c = w[p].clone();
                for (wi, bi) in w.iter_mut().zip(vec) {
                    *wi -= &c * bi;
                }
            }
        }
        Ok(w)
    }

    /// Inserts a vector into the spanning set; returns true if it was
    /// independent of the current basis.
    pub fn insert(&mut self, v: Vec<Rat>) -> Result<bool, LinAlgError> {
        let mut w = self.reduce(&v)?;
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = w[p].clone();
        for x in w.iter_mut() {
            *x /= &inv;
        }
        // Back-substitute to keep the stored basis fully reduced.
        for (vec, _) in self.vectors.iter_mut().zip(&self.pivots) {
            if !vec[p].is_zero() {
                let c = vec[p].clone();
                for (vi, wi) in vec.iter_mut().zip(&w) {
                    *vi -= &c * wi;
                }
            }
        }
        let at = self.pivots.iter().position(|&q| q > p).unwrap_or(self.pivots.len());
        self.pivots.insert(at, p);
        self.vectors.insert(at, w);
        Ok(true)
    }

    pub fn contains(&self, v: &[Rat]) -> Result<bool, LinAlgError> {
        Ok(self.reduce(v)?.iter().all(|x| x.is_zero()))
    }

    /// Exact membership solving: coefficients of `v` in this basis, or
    /// `None` when `v` is outside the span.
    pub fn solve_membership(&self, v: &[Rat]) -> Result<Option<Vec<Rat>>, LinAlgError> {
        if v.len() != self.ambient {
            return Err(LinAlgError::DimensionMismatch { got: v.len(), want: self.ambient });
        }
        let mut w = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.vectors.len());
        for (vec, &p) in self.vectors.iter().zip(&self.pivots) {
            let c = w[p].clone();
            if !c.is_zero() {
                for (wi, bi) in w.iter_mut().zip(vec) {
                    *wi -= &c * bi;
                }
            }
            coeffs.push(c);
        }
        if w.iter().all(|x| x.is_zero()) {
            Ok(Some(coeffs))
        } else {
            Ok(None)
        }
    }
}

/// Basis of `{v : Mv = 0}` in reduced row echelon form.
///
/// Free coordinates are filled in increasing column order, so the output
/// is independent of entry insertion order.
pub fn kernel_basis(m: &SparseMatrix) -> SubspaceBasis {
    let mut rows = m.sparse_rows();
    // pivot_of_col[c] = row index that eliminates column c
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut pivot_rows: Vec<usize> = Vec::new();
    let mut used = vec![false; rows.len()];
    for c in 0..m.cols {
        // first unused row with a nonzero entry in column c
        let Some(r) = (0..rows.len()).find(|&r| !used[r] && rows[r].contains_key(&c)) else {
            continue;
        };
        let inv = rows[r][&c].clone().recip();
        let row_r: BTreeMap<usize, Rat> =
            rows[r].iter().map(|(&k, v)| (k, v * &inv)).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || !row.contains_key(&c) {
                continue;
            }
            let factor = row[&c].clone();
            for (&k, v) in &row_r {
                let slot = row.entry(k).or_insert_with(Rat::zero);
                *slot -= &factor * v;
                if slot.is_zero() {
                    row.remove(&k);
                }
            }
        }
        rows[r] = row_r;
        used[r] = true;
        pivot_cols.push(c);
        pivot_rows.push(r);
    }
    let mut basis = SubspaceBasis::empty(m.cols);
    for c in 0..m.cols {
        if pivot_cols.contains(&c) {
            continue;
        }
        let mut v = vec![Rat::zero(); m.cols];
        v[c] = Rat::from_integer(BigInt::from(1));
        for (&pc, &pr) in pivot_cols.iter().zip(&pivot_rows) {
            if let Some(x) = rows[pr].get(&c) {
                v[pc] = -x.clone();
            }
        }
        basis
            .insert(v)
            .expect("kernel vectors have ambient length by construction");
    }
    basis
}

/// Basis of the column space of `M`.
pub fn image_basis(m: &SparseMatrix) -> SubspaceBasis {
    let mut basis = SubspaceBasis::empty(m.rows);
    for col in m.column_vectors() {
        basis.insert(col).expect("columns have ambient length");
    }
    basis
}

/// Exact coefficients of `v` in the span of `s`, or `None`.
pub fn solve_membership(v: &[Rat], s: &SubspaceBasis) -> Result<Option<Vec<Rat>>, LinAlgError> {
    s.solve_membership(v)
}

/// dim A - dim B for subspaces BSUBSETA; rejects B !SUBSET A, which signals a
/// broken chain complex upstream.
pub fn quotient_dimension(a: &SubspaceBasis, b: &SubspaceBasis) -> Result<usize, LinAlgError> {
    if a.ambient_dimension() != b.ambient_dimension() {
        return Err(LinAlgError::DimensionMismatch {
            got: b.ambient_dimension(),
            want: a.ambient_dimension(),
        });
    }
    for v in b.vectors() {
        if !a.contains(v)? {
            return Err(LinAlgError::NotASubspace(format!(
                "vector with pivot {} lies outside the ambient subspace",
                v.iter().position(|x| !x.is_zero()).unwrap_or(0)
            )));
        }
    }
    Ok(a.dimension() - b.dimension())
}

/// Solves `Mx = v` exactly; returns a particular solution or `None`.
pub fn solve_linear(m: &SparseMatrix, v: &[Rat]) -> Result<Option<Vec<Rat>>, LinAlgError> {
    if v.len() != m.rows {
        return Err(LinAlgError::DimensionMismatch { got: v.len(), want: m.rows });
    }
    // Row-reduce the augmented system [M | v] over sparse rows.
    let mut rows = m.sparse_rows();
    let mut rhs: Vec<Rat> = v.to_vec();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (col, row)
    let mut used = vec![false; rows.len()];
    for c in 0..m.cols {
        let Some(r) = (0..rows.len()).find(|&r| !used[r] && rows[r].contains_key(&c)) else {
            continue;
        };
        let inv = rows[r][&c].clone().recip();
        let row_r: BTreeMap<usize, Rat> = rows[r].iter().map(|(&k, x)| (k, x * &inv)).collect();
        let rhs_r = &rhs[r] * &inv;
        for i in 0..rows.len() {
            if i == r || !rows[i].contains_key(&c) {
                continue;
            }
            let factor = rows[i][&c].clone();
            for (&k, x) in &row_r {
                let slot = rows[i].entry(k).or_insert_with(Rat::zero);
                *slot -= &factor * x;
                if slot.is_zero() {
                    rows[i].remove(&k);
                }
            }
            let sub = &factor * &rhs_r;
            rhs[i] -= sub;
        }
        rows[r] = row_r;
        rhs[r] = rhs_r;
        used[r] = true;
        pivots.push((c, r));
    }
    // Inconsistent if a zero row has nonzero right-hand side.
    for (i, row) in rows.iter().enumerate() {
        if row.is_empty() && !rhs[i].is_zero() {
            return Ok(None);
        }
    }
    let mut x = vec![Rat::zero(); m.cols];
    for &(c, r) in &pivots {
        x[c] = rhs[r].clone();
    }
    Ok(Some(x))
}

/// Expresses `v` in a given list of independent vectors (not necessarily
/// echelon); returns the exact coefficient vector or `None`.
pub fn express_in(v: &[Rat], vectors: &[Vec<Rat>]) -> Result<Option<Vec<Rat>>, LinAlgError> {
    let ambient = v.len();
    let mut m = SparseMatrix::new(ambient, vectors.len());
    for (j, w) in vectors.iter().enumerate() {
        if w.len() != ambient {
            return Err(LinAlgError::DimensionMismatch { got: w.len(), want: ambient });
        }
        for (i, x) in w.iter().enumerate() {
            if !x.is_zero() {
                m.add(i, j, x.clone())?;
            }
        }
    }
    solve_linear(&m, v)
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn scale_sign(r: &Rat, negative: bool) -> Rat {
    if negative {
        -r.clone()
    } else {
        r.clone()
    }
}

#[allow(dead_code)]
fn abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: usize, cols: usize, data: &[(usize, usize, i64)]) -> SparseMatrix {
        let mut out = SparseMatrix::new(rows, cols);
        for &(r, c, v) in data {
            out.add(r, c, rat_int(v)).unwrap();
        }
        out
    }

    #[test]
    fn kernel_of_zero_map() {
        let k = kernel_basis(&m(1, 1, &[]));
        assert_eq!(k.dimension(), 1);
        assert_eq!(k.vectors()[0], vec![rat_int(1)]);
    }

    #[test]
    fn kernel_of_injective_map() {
        let k = kernel_basis(&m(1, 1, &[(0, 0, 5)]));
        assert_eq!(k.dimension(), 0);
    }

    #[test]
    fn kernel_two_by_three() {
        // rows (1,1,0),(0,1,1): kernel spanned by (1,-1,1)
        let k = kernel_basis(&m(2, 3, &[(0, 0, 1), (0, 1, 1), (1, 1, 1), (1, 2, 1)]));
        assert_eq!(k.dimension(), 1);
        let v = &k.vectors()[0];
        let t = v[0].clone();
        assert!(!t.is_zero());
        assert_eq!(v[1], -t.clone());
        assert_eq!(v[2], t);
    }

    #[test]
    fn membership_examples() {
        let s = SubspaceBasis::span(3, vec![vec![rat_int(1), rat_int(-1), rat_int(1)]]).unwrap();
        let zero = vec![Rat::zero(); 3];
        assert_eq!(solve_membership(&zero, &s).unwrap(), Some(vec![Rat::zero()]));
        let v = vec![rat_int(2), rat_int(-2), rat_int(2)];
        assert_eq!(solve_membership(&v, &s).unwrap(), Some(vec![rat_int(2)]));
        let w = vec![rat_int(1), rat_int(0), rat_int(0)];
        assert_eq!(solve_membership(&w, &s).unwrap(), None);
        let short = vec![rat_int(1)];
        assert!(matches!(
            solve_membership(&short, &s),
            Err(LinAlgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn membership_reconstructs_exactly() {
        let s = SubspaceBasis::span(
            3,
            vec![
                vec![rat_int(2), rat_int(4), rat_int(0)],
                vec![rat_int(0), rat_int(3), rat_int(9)],
            ],
        )
        .unwrap();
        let v = vec![rat_int(1), rat_int(5), rat_int(9)];
        let c = solve_membership(&v, &s).unwrap().unwrap();
        let mut back = vec![Rat::zero(); 3];
        for (ci, b) in c.iter().zip(s.vectors()) {
            for (bi, vi) in b.iter().zip(back.iter_mut()) {
                *vi += ci * bi;
            }
        }
        assert_eq!(back, v);
    }

    #[test]
    fn quotient_dimensions() {
        let a = SubspaceBasis::span(
            2,
            vec![vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(1)]],
        )
        .unwrap();
        assert_eq!(quotient_dimension(&a, &a).unwrap(), 0);
        let b = SubspaceBasis::span(2, vec![vec![rat_int(1), rat_int(1)]]).unwrap();
        assert_eq!(quotient_dimension(&a, &b).unwrap(), 1);
        let full = kernel_basis(&m(3, 3, &[]));
        assert_eq!(quotient_dimension(&full, &SubspaceBasis::empty(3)).unwrap(), 3);
        // not a subspace: complex is broken upstream
        let c = SubspaceBasis::span(2, vec![vec![rat_int(1), rat_int(2)]]).unwrap();
        assert!(matches!(quotient_dimension(&b, &c), Err(LinAlgError::NotASubspace(_))));
    }

    #[test]
    fn rank_nullity_and_insertion_order() {
        let data = [
            (0usize, 0usize, 2i64),
            (0, 2, -1),
            (1, 1, 3),
            (1, 2, 3),
            (2, 0, 2),
            (2, 1, 3),
            (2, 2, 2),
        ];
        let a = m(3, 4, &data);
        let mut rev = SparseMatrix::new(3, 4);
        for &(r, c, v) in data.iter().rev() {
            rev.add(r, c, rat_int(v)).unwrap();
        }
        assert_eq!(a, rev);
        let k = kernel_basis(&a);
        let im = image_basis(&a);
        assert_eq!(k.dimension() + im.dimension(), a.cols());
        for v in k.vectors() {
            assert!(is_zero_vec(&a.apply(v).unwrap()));
        }
    }

    #[test]
    fn solve_linear_witness() {
        let a = m(2, 2, &[(0, 0, 1), (0, 1, 2), (1, 0, 3), (1, 1, 4)]);
        let v = vec![rat_int(5), rat_int(11)];
        let x = solve_linear(&a, &v).unwrap().unwrap();
        assert_eq!(a.apply(&x).unwrap(), v);
        let b = m(2, 1, &[(0, 0, 1), (1, 0, 1)]);
        assert_eq!(solve_linear(&b, &[rat_int(1), rat_int(2)]).unwrap(), None);
    }

    #[test]
    fn parse_and_render_rationals() {
        assert_eq!(parse_rat("1/3").unwrap(), Rat::new(BigInt::from(1), BigInt::from(3)));
        assert_eq!(parse_rat("-4").unwrap(), rat_int(-4));
        assert_eq!(parse_rat(" 6/4 ").unwrap(), Rat::new(BigInt::from(3), BigInt::from(2)));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert_eq!(render_rat(&Rat::new(BigInt::from(-1), BigInt::from(3))), "-1/3");
        assert_eq!(render_rat(&rat_int(7)), "7");
    }
}
