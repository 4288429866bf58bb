//! Dense exact vectors and matrices.
//!
//! Subspaces are handled through canonical bases: [`row_basis`] returns the
//! non-zero rows of the reduced row echelon form and [`nullspace`] derives its
//! basis from that same form, so equal subspaces always produce identical
//! bases and subspace equality is plain `==`.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector<S> {
    entries: Vec<S>,
}

impl<S: Scalar> Vector<S> {
    pub fn new(entries: Vec<S>) -> Self {
        Self { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self { entries: vec![S::zero(); dim] }
    }

    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[index] = S::one();
        v
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| S::from_int(v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<S> {
        self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, S> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn dot(&self, other: &Self) -> S {
        debug_assert_eq!(self.dim(), other.dim());
        self.entries.iter().zip(&other.entries).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self::new(self.entries.iter().zip(&other.entries).map(|(a, b)| a.clone() + b.clone()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self::new(self.entries.iter().zip(&other.entries).map(|(a, b)| a.clone() - b.clone()).collect())
    }

    pub fn scale(&self, factor: &S) -> Self {
        Self::new(self.entries.iter().map(|a| a.clone() * factor.clone()).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.entries.iter().map(|a| -a.clone()).collect())
    }

    /// Positive rescaling to a primitive integer vector.
    pub fn primitive(&self) -> Self {
        self.scale(&S::primitive_factor(&self.entries))
    }

    /// True when `other = t * self` for some `t > 0`.
    pub fn same_ray(&self, other: &Self) -> bool {
        !self.is_zero() && !other.is_zero() && self.primitive() == other.primitive()
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Self::new(entries)
    }
}

impl<S> Index<usize> for Vector<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.entries[i]
    }
}

impl<S> IndexMut<usize> for Vector<S> {
    fn index_mut(&mut self, i: usize) -> &mut S {
        &mut self.entries[i]
    }
}

impl<S: Scalar> FromIterator<S> for Vector<S> {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

/// Comma-separated entries, e.g. `1,-1/2,0`.
impl<S: fmt::Display> fmt::Display for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl<S: fmt::Debug> fmt::Debug for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.entries).finish()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: Vec<Vector<S>>,
    ncols: usize,
}

impl<S: Scalar> Matrix<S> {
    /// Builds a matrix from rows; every row must have `ncols` entries.
    pub fn from_rows(rows: Vec<Vector<S>>, ncols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.dim() != ncols) {
            return Err(Error::DimensionMismatch { expected: ncols, found: bad.dim() });
        }
        Ok(Self { rows, ncols })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vector<S>>, ncols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.dim() == ncols));
        Self { rows, ncols }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| Vector::from_ints(r)).collect();
        Self::from_rows(rows, ncols).expect("ragged integer matrix")
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self { rows: vec![Vector::zeros(ncols); nrows], ncols }
    }

    pub fn identity(n: usize) -> Self {
        Self { rows: (0..n).map(|i| Vector::unit(n, i)).collect(), ncols: n }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vector<S>], nrows: usize) -> Self {
        Self::from_rows_unchecked(columns.to_vec(), nrows).transpose()
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vector<S>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vector<S>> {
        self.rows
    }

    pub fn row(&self, i: usize) -> &Vector<S> {
        &self.rows[i]
    }

    pub fn column(&self, j: usize) -> Vector<S> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vector::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.ncols).map(|j| self.column(j)).collect();
        Self { rows, ncols: self.nrows() }
    }

    pub fn mul_vec(&self, v: &Vector<S>) -> Vector<S> {
        debug_assert_eq!(v.dim(), self.ncols);
        self.rows.iter().map(|r| r.dot(v)).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ncols, other.nrows());
        let cols: Vec<Vector<S>> = (0..other.ncols).map(|j| other.column(j)).collect();
        let rows = self.rows.iter().map(|r| cols.iter().map(|c| r.dot(c)).collect()).collect();
        Self { rows, ncols: other.ncols }
    }

    pub fn add(&self, other: &Self) -> Self {
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a.add(b)).collect();
        Self { rows, ncols: self.ncols }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a.sub(b)).collect();
        Self { rows, ncols: self.ncols }
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ncols, other.ncols);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Self { rows, ncols: self.ncols }
    }

    pub fn select_rows(&self, indices: &[usize]) -> Self {
        Self { rows: indices.iter().map(|&i| self.rows[i].clone()).collect(), ncols: self.ncols }
    }

    pub fn is_idempotent(&self) -> bool {
        self.is_square() && self.mul(self) == *self
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.rows).finish()
    }
}

/// Rows separated by `;`, e.g. `1,0;0,1`.
impl<S: fmt::Display> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Rank over the field by fraction-free (Bareiss) elimination. Rows are first
/// scaled to primitive integer vectors so every intermediate is integral.
pub fn rank<S: Scalar>(m: &Matrix<S>) -> usize {
    let mut a: Vec<Vec<S>> = m.rows.iter().map(|r| r.primitive().into_entries()).collect();
    let nrows = a.len();
    let ncols = m.ncols;
    let mut prev = S::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in (r + 1)..nrows {
            for j in (c + 1)..ncols {
                let v = (a[r][c].clone() * a[i][j].clone() - a[i][c].clone() * a[r][j].clone()) / prev.clone();
                a[i][j] = v;
            }
            a[i][c] = S::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Rank of a list of vectors of dimension `dim`.
pub fn rank_of<S: Scalar>(vectors: &[Vector<S>], dim: usize) -> usize {
    rank(&Matrix::from_rows_unchecked(vectors.to_vec(), dim))
}

/// Reduced row echelon form. Returns the reduced rows (zero rows dropped) and
/// the pivot column of each.
pub fn rref<S: Scalar>(m: &Matrix<S>) -> (Vec<Vector<S>>, Vec<usize>) {
    let mut a: Vec<Vector<S>> = m.rows.clone();
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = S::one() / a[r][c].clone();
        a[r] = a[r].scale(&inv);
        for i in 0..nrows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                a[i] = a[i].sub(&a[r].scale(&f));
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Canonical basis of the row space: the non-zero RREF rows.
pub fn row_basis<S: Scalar>(vectors: &[Vector<S>], dim: usize) -> Matrix<S> {
    let (rows, _) = rref(&Matrix::from_rows_unchecked(vectors.to_vec(), dim));
    Matrix::from_rows_unchecked(rows, dim)
}

/// Canonical basis of `{x : M x = 0}`.
///
/// One basis vector per free column `f` of the RREF: `x_f = 1`, the pivot
/// variables solve the system and the other free variables are zero; the
/// result is then scaled to a primitive integer vector.
pub fn nullspace<S: Scalar>(m: &Matrix<S>) -> Matrix<S> {
    let n = m.ncols;
    let (rows, pivots) = rref(m);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for f in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = Vector::zeros(n);
        v[f] = S::one();
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = -row[f].clone();
        }
        basis.push(v.primitive());
    }
    Matrix::from_rows_unchecked(basis, n)
}

/// Solves `M x = b`. Returns `None` when the system is inconsistent, otherwise
/// the solution whose free variables (in column order) are zero.
pub fn solve<S: Scalar>(m: &Matrix<S>, b: &Vector<S>) -> Result<Option<Vector<S>>> {
    if b.dim() != m.nrows() {
        return Err(Error::DimensionMismatch { expected: m.nrows(), found: b.dim() });
    }
    let n = m.ncols;
    let augmented: Vec<Vector<S>> =
        m.rows.iter().zip(b.iter()).map(|(r, bi)| r.concat(&Vector::new(vec![bi.clone()]))).collect();
    let (rows, pivots) = rref(&Matrix::from_rows_unchecked(augmented, n + 1));
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = Vector::zeros(n);
    for (row, &p) in rows.iter().zip(&pivots) {
        x[p] = row[n].clone();
    }
    Ok(Some(x))
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse<S: Scalar>(m: &Matrix<S>) -> Option<Matrix<S>> {
    if !m.is_square() {
        return None;
    }
    let n = m.ncols;
    let augmented: Vec<Vector<S>> = m.rows.iter().enumerate().map(|(i, r)| r.concat(&Vector::unit(n, i))).collect();
    let (rows, pivots) = rref(&Matrix::from_rows_unchecked(augmented, 2 * n));
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let inv = rows.iter().map(|r| Vector::new(r.entries()[n..].to_vec())).collect();
    Some(Matrix::from_rows_unchecked(inv, n))
}

/// True when `v` lies in the span of `basis`.
pub fn in_span<S: Scalar>(basis: &Matrix<S>, v: &Vector<S>) -> bool {
    if v.is_zero() {
        return true;
    }
    let ann = nullspace(basis);
    ann.rows().iter().all(|a| a.dot(v).is_zero())
}

/// Canonical basis of `span(a) ∩ span(b)`.
pub fn subspace_intersection<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    let ann = nullspace(a).stack(&nullspace(b));
    row_basis(nullspace(&ann).rows(), a.ncols())
}

/// Canonical basis of `span(a) + span(b)`.
pub fn subspace_sum<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    row_basis(a.stack(b).rows(), a.ncols())
}

/// Subspace equality of two spans.
pub fn same_span<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> bool {
    row_basis(a.rows(), a.ncols()) == row_basis(b.rows(), b.ncols())
}

/// `span(a) ⊆ span(b)`.
pub fn span_contains<S: Scalar>(b: &Matrix<S>, a: &Matrix<S>) -> bool {
    let ann = nullspace(b);
    a.rows().iter().all(|v| ann.rows().iter().all(|h| h.dot(v).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn m(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_ints(rows)
    }

    fn v(x: &[i64]) -> Vector<Rat> {
        Vector::from_ints(x)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::<Rat>::identity(2)), 2);
        assert_eq!(rank(&Matrix::<Rat>::zeros(3, 3)), 0);
        let four_ray = m(&[&[1, 0, 1], &[0, 1, 1], &[-1, 0, 1], &[0, -1, 1]]);
        assert_eq!(rank(&four_ray), 3);
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn rank_handles_fractions() {
        let a = Matrix::from_rows(
            vec![
                Vector::new(vec![Rat::from_frac(1, 2), Rat::from_frac(1, 3)]),
                Vector::new(vec![Rat::from_frac(3, 2), Rat::from_int(1)]),
            ],
            2,
        )
        .unwrap();
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn solve_examples() {
        let b = v(&[3, -2]);
        assert_eq!(solve(&Matrix::identity(2), &b).unwrap(), Some(b.clone()));
        assert_eq!(solve(&m(&[&[1, 0], &[1, 0]]), &v(&[1, 2])).unwrap(), None);
        assert!(matches!(solve(&Matrix::<Rat>::identity(2), &v(&[1])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn solve_four_ray_facet_system_is_inconsistent() {
        // f12(g)=0, f23(g)=0, f34(g)=2, f41(g)=0
        let f = m(&[&[-1, -1, 1], &[1, -1, 1], &[1, 1, 1], &[-1, 1, 1]]);
        assert_eq!(solve(&f, &v(&[0, 0, 2, 0])).unwrap(), None);
    }

    #[test]
    fn nullspace_examples() {
        let ns = nullspace(&m(&[&[0, 0, 1]]));
        assert_eq!(ns.rows(), &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let ns = nullspace(&m(&[&[-1, -1, 1], &[1, 1, 1]]));
        assert_eq!(ns.nrows(), 1);
        assert!(ns.row(0).same_ray(&v(&[1, -1, 0])) || ns.row(0).same_ray(&v(&[-1, 1, 0])));
        assert_eq!(nullspace(&Matrix::<Rat>::identity(3)).nrows(), 0);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn subspace_operations() {
        let a = m(&[&[1, 0, 0], &[0, 1, 0]]);
        let b = m(&[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(subspace_intersection(&a, &b), row_basis(&[v(&[0, 1, 0])], 3));
        assert_eq!(subspace_sum(&a, &b), Matrix::identity(3));
        assert!(span_contains(&a, &m(&[&[2, 3, 0]])));
        assert!(!span_contains(&a, &m(&[&[0, 0, 1]])));
        assert!(in_span(&a, &v(&[5, -1, 0])));
        assert!(same_span(&a, &m(&[&[1, 1, 0], &[1, -1, 0]])));
    }
}
