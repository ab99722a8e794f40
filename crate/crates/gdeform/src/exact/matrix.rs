//! Dense matrices and incremental reduced row echelon spans over an exact
//! field.
//!
//! `RowSpace` is the workhorse: rows are inserted one at a time, the basis is
//! kept in reduced row echelon form with deterministic pivoting (leftmost
//! nonzero column, first arriving row wins), and membership / rank / kernel
//! queries read straight off the pivot structure. Rows are sparse since
//! tensor-shift rows of graded ideals carry only a handful of nonzero
//! entries.

use std::collections::BTreeMap;
use std::fmt;

use super::cyclotomic::CycScalar;
use super::scalar::Field;

/// Sparse vector: sorted `(index, value)` pairs, zero values never stored.
#[derive(Clone, PartialEq)]
pub struct SparseVec<F: Field> {
    entries: Vec<(usize, F)>,
}

impl<F: Field> SparseVec<F> {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn from_entries(mut entries: Vec<(usize, F)>) -> Self {
        entries.retain(|(_, v)| !v.is_zero());
        entries.sort_by_key(|(i, _)| *i);
        let mut merged: Vec<(usize, F)> = Vec::with_capacity(entries.len());
        for (i, v) in entries {
            match merged.last_mut() {
                Some((j, acc)) if *j == i => {
                    *acc = acc.add_ref(&v);
                }
                _ => merged.push((i, v)),
            }
        }
        merged.retain(|(_, v)| !v.is_zero());
        SparseVec { entries: merged }
    }

    pub fn from_dense(dense: &[F]) -> Self {
        SparseVec {
            entries: dense
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn unit(index: usize) -> Self {
        SparseVec {
            entries: vec![(index, F::one())],
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<F> {
        let mut out = vec![F::zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, F)] {
        &self.entries
    }

    pub fn leading(&self) -> Option<(usize, &F)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn get(&self, index: usize) -> Option<&F> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (*i, v.mul_ref(c)))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v.neg_ref())).collect(),
        }
    }

    /// `self + c * other`, merging sorted entry lists.
    pub fn axpy(&self, c: &F, other: &Self) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = self.entries.iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, _)), Some((ib, _))) if ia < ib => {
                    let (i, v) = a.next().unwrap();
                    out.push((*i, v.clone()));
                }
                (Some((ia, _)), Some((ib, _))) if ia > ib => {
                    let (i, v) = b.next().unwrap();
                    out.push((*i, c.mul_ref(v)));
                }
                (Some(_), Some(_)) => {
                    let (i, va) = a.next().unwrap();
                    let (_, vb) = b.next().unwrap();
                    let s = va.add_ref(&c.mul_ref(vb));
                    if !s.is_zero() {
                        out.push((*i, s));
                    }
                }
                (Some(_), None) => {
                    let (i, v) = a.next().unwrap();
                    out.push((*i, v.clone()));
                }
                (None, Some(_)) => {
                    let (i, v) = b.next().unwrap();
                    out.push((*i, c.mul_ref(v)));
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> Self {
        SparseVec::from_entries(self.entries.iter().map(|(i, v)| (f(*i), v.clone())).collect())
    }
}

impl<F: Field> fmt::Debug for SparseVec<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, v)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}: {}", i, v)?;
        }
        write!(f, "}}")
    }
}

/// Incrementally maintained reduced row echelon basis of a row span.
#[derive(Clone)]
pub struct RowSpace<F: Field> {
    ncols: usize,
    rows: Vec<SparseVec<F>>,          // each row: leading coefficient 1 at its pivot
    pivot_to_row: BTreeMap<usize, usize>, // pivot column -> row index
}

impl<F: Field> RowSpace<F> {
    pub fn new(ncols: usize) -> Self {
        RowSpace {
            ncols,
            rows: Vec::new(),
            pivot_to_row: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<F>] {
        &self.rows
    }

    /// Pivot columns in ascending order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivot_to_row.keys().copied().collect()
    }

    /// Columns without a pivot.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols)
            .filter(|c| !self.pivot_to_row.contains_key(c))
            .collect()
    }

    /// Fully reduce a vector against the basis.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut cur = v.clone();
        // RREF rows have support {pivot} ∪ free columns, so eliminating one
        // pivot never reintroduces another: a single sweep suffices, but the
        // sweep must revisit because axpy rewrites the entry list.
        loop {
            let mut hit = None;
            for (i, val) in cur.entries.iter() {
                if let Some(row_idx) = self.pivot_to_row.get(i) {
                    hit = Some((*row_idx, val.clone()));
                    break;
                }
            }
            match hit {
                None => return cur,
                Some((row_idx, val)) => {
                    cur = cur.axpy(&val.neg_ref(), &self.rows[row_idx]);
                }
            }
        }
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Insert a row. Returns the new pivot column if the rank grew.
    pub fn insert(&mut self, v: SparseVec<F>) -> Option<usize> {
        let mut red = self.reduce(&v);
        let (pivot, lead) = match red.leading() {
            None => return None,
            Some((p, l)) => (p, l.clone()),
        };
        let inv = lead.inv_ref().expect("nonzero leading entry");
        red = red.scale(&inv);
        // back-eliminate the new pivot from existing rows
        for row in self.rows.iter_mut() {
            if let Some(c) = row.get(pivot).cloned() {
                *row = row.axpy(&c.neg_ref(), &red);
            }
        }
        self.rows.push(red);
        self.pivot_to_row.insert(pivot, self.rows.len() - 1);
        Some(pivot)
    }

    /// Coordinates of a vector known to lie in the span: for RREF bases this
    /// is just the values at the pivot columns. Returns `None` if the vector
    /// is not in the span.
    pub fn coordinates(&self, v: &SparseVec<F>) -> Option<Vec<F>> {
        let mut coords = vec![F::zero(); self.rows.len()];
        let mut residual = v.clone();
        loop {
            let mut hit = None;
            for (i, val) in residual.entries.iter() {
                if let Some(row_idx) = self.pivot_to_row.get(i) {
                    hit = Some((*row_idx, val.clone()));
                    break;
                }
            }
            match hit {
                None => break,
                Some((row_idx, val)) => {
                    coords[row_idx] = val.clone();
                    residual = residual.axpy(&val.neg_ref(), &self.rows[row_idx]);
                }
            }
        }
        if residual.is_zero() {
            Some(coords)
        } else {
            None
        }
    }

    /// Basis of the right kernel of the matrix whose row span this is.
    pub fn kernel_basis(&self) -> Vec<SparseVec<F>> {
        let mut out = Vec::new();
        for free in self.free_columns() {
            let mut entries = vec![(free, F::one())];
            for row in &self.rows {
                if let Some(c) = row.get(free) {
                    let pivot = row.leading().unwrap().0;
                    entries.push((pivot, c.neg_ref()));
                }
            }
            out.push(SparseVec::from_entries(entries));
        }
        out
    }

    /// Rows in deterministic order: sorted by pivot column.
    pub fn sorted_rows(&self) -> Vec<&SparseVec<F>> {
        self.pivot_to_row.values().map(|&i| &self.rows[i]).collect()
    }
}

/// Dense exact matrix.
#[derive(Clone, PartialEq)]
pub struct ExactMatrix<F: Field = CycScalar> {
    rows: usize,
    cols: usize,
    data: Vec<F>, // row-major
}

impl<F: Field> ExactMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut F {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out: ExactMatrix<F> = ExactMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = a.mul_ref(b);
                    let cur = out.at(i, j).add_ref(&t);
                    *out.at_mut(i, j) = cur;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for j in 0..self.cols {
                    let a = self.at(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc.add_ref(&a.mul_ref(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        ExactMatrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn scale(&self, c: &F) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v.mul_ref(c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = ExactMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.at(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        *out.at_mut(i * other.rows + k, j * other.cols + l) = a.mul_ref(b);
                    }
                }
            }
        }
        out
    }

    /// Gauss-Jordan inverse; `None` for singular matrices.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv: ExactMatrix<F> = ExactMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.at(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    let tmp = a.at(pivot, j).clone();
                    *a.at_mut(pivot, j) = a.at(col, j).clone();
                    *a.at_mut(col, j) = tmp;
                    let tmp = inv.at(pivot, j).clone();
                    *inv.at_mut(pivot, j) = inv.at(col, j).clone();
                    *inv.at_mut(col, j) = tmp;
                }
            }
            let p = a.at(col, col).clone();
            let pinv = p.inv_ref()?;
            for j in 0..n {
                *a.at_mut(col, j) = a.at(col, j).mul_ref(&pinv);
                *inv.at_mut(col, j) = inv.at(col, j).mul_ref(&pinv);
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for j in 0..n {
                    let t = a.at(col, j).mul_ref(&factor);
                    *a.at_mut(r, j) = a.at(r, j).sub_ref(&t);
                    let t = inv.at(col, j).mul_ref(&factor);
                    *inv.at_mut(r, j) = inv.at(r, j).sub_ref(&t);
                }
            }
        }
        Some(inv)
    }

    pub fn row_space(&self) -> RowSpace<F> {
        let mut space = RowSpace::new(self.cols);
        for i in 0..self.rows {
            space.insert(SparseVec::from_dense(self.row(i)));
        }
        space
    }

    pub fn rank(&self) -> usize {
        self.row_space().rank()
    }
}

impl<F: Field> fmt::Debug for ExactMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| format!("{}", v)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Any solution of `M x = rhs`, or `None` when inconsistent.
pub fn solve_linear<F: Field>(m: &ExactMatrix<F>, rhs: &[F]) -> Option<Vec<F>> {
    assert_eq!(m.nrows(), rhs.len());
    let n = m.ncols();
    // augmented row space; a pivot in the last column means inconsistency
    let mut space = RowSpace::new(n + 1);
    for i in 0..m.nrows() {
        let mut row: Vec<F> = m.row(i).to_vec();
        row.push(rhs[i].clone());
        space.insert(SparseVec::from_dense(&row));
    }
    if space.pivot_columns().contains(&n) {
        return None;
    }
    // free variables set to zero; pivots read off the augmented column
    let mut x = vec![F::zero(); n];
    for row in space.rows() {
        let (pivot, _) = row.leading().unwrap();
        if let Some(c) = row.get(n) {
            x[pivot] = c.clone();
        }
    }
    Some(x)
}

/// Exact rank and a basis of the right kernel.
///
/// Elimination is dense-row Gauss-Jordan with deterministic pivots (leftmost
/// nonzero column, earliest row). The empty matrix has rank 0 and full
/// kernel.
pub fn matrix_rank_kernel<F: Field>(m: &ExactMatrix<F>) -> (usize, Vec<Vec<F>>) {
    let space = m.row_space();
    let rank = space.rank();
    let kernel = space
        .kernel_basis()
        .into_iter()
        .map(|v| v.to_dense(m.ncols()))
        .collect();
    (rank, kernel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::cyclotomic::CycScalar;
    use proptest::prelude::*;

    fn c(n: i64) -> CycScalar {
        CycScalar::from_int(n)
    }

    #[test]
    fn identity_rank_and_empty_kernel() {
        let m: ExactMatrix<CycScalar> = ExactMatrix::identity(2);
        let (rank, kernel) = matrix_rank_kernel(&m);
        assert_eq!(rank, 2);
        assert!(kernel.is_empty());
    }

    #[test]
    fn empty_matrix_rank_zero() {
        let m: ExactMatrix<CycScalar> = ExactMatrix::zeros(0, 0);
        let (rank, kernel) = matrix_rank_kernel(&m);
        assert_eq!(rank, 0);
        assert!(kernel.is_empty());
    }

    #[test]
    fn commutator_row_in_degree_two() {
        // the relation xy - yx inside the 4-dimensional degree-2 tensor space,
        // over the word basis xx, xy, yx, yy
        let m = ExactMatrix::from_rows(vec![vec![c(0), c(1), c(-1), c(0)]]);
        let (rank, kernel) = matrix_rank_kernel(&m);
        assert_eq!(rank, 1);
        assert_eq!(kernel.len(), 3);
        for v in &kernel {
            let img = m.apply(v);
            assert!(img.iter().all(|x| x.is_zero()));
        }
    }

    /// Words of length `k` over an alphabet of `n` letters, as indices.
    fn words(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..k {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..n).map(move |l| {
                        let mut w2 = w.clone();
                        w2.push(l);
                        w2
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn degree_three_collision_matrix_of_commutative_plane() {
        // rows: (xy - yx)⊗x, (xy - yx)⊗y, x⊗(xy - yx), y⊗(xy - yx) inside
        // the 8-dimensional cube of C<x,y>
        let idx = |w: &[usize]| w[0] * 4 + w[1] * 2 + w[2];
        let mut rows = Vec::new();
        for side in 0..2 {
            for letter in 0..2 {
                let mut row = vec![c(0); 8];
                let (a, b) = (0usize, 1usize); // x, y
                if side == 0 {
                    row[idx(&[a, b, letter])] = c(1);
                    row[idx(&[b, a, letter])] = c(-1);
                } else {
                    row[idx(&[letter, a, b])] = c(1);
                    row[idx(&[letter, b, a])] = c(-1);
                }
                rows.push(row);
            }
        }
        let m = ExactMatrix::from_rows(rows);
        let (rank, _) = matrix_rank_kernel(&m);
        // oracle: the quotient is the commutative ring, whose degree-3 piece
        // is spanned by the multisets of size 3 in two letters
        let mut monomials = std::collections::BTreeSet::new();
        for w in words(2, 3) {
            let mut s = w.clone();
            s.sort();
            monomials.insert(s);
        }
        let expected_rank = 8 - monomials.len();
        assert_eq!(monomials.len(), 4);
        assert_eq!(rank, expected_rank);
    }

    #[test]
    fn coordinates_and_contains() {
        let mut space: RowSpace<CycScalar> = RowSpace::new(3);
        space.insert(SparseVec::from_dense(&[c(1), c(1), c(0)]));
        space.insert(SparseVec::from_dense(&[c(0), c(1), c(1)]));
        let v = SparseVec::from_dense(&[c(2), c(3), c(1)]);
        assert!(space.contains(&v));
        let coords = space.coordinates(&v).unwrap();
        assert_eq!(coords.len(), 2);
        let w = SparseVec::from_dense(&[c(1), c(0), c(1)]);
        assert!(!space.contains(&w));
        assert!(space.coordinates(&w).is_none());
    }

    fn arb_matrix(max_dim: usize) -> impl Strategy<Value = ExactMatrix<CycScalar>> {
        (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, cdim)| {
            proptest::collection::vec(-3i64..4, r * cdim).prop_map(move |vals| {
                ExactMatrix::from_fn(r, cdim, |i, j| c(vals[i * cdim + j]))
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_plus_kernel_dim_is_cols(m in arb_matrix(5)) {
            let (rank, kernel) = matrix_rank_kernel(&m);
            prop_assert_eq!(rank + kernel.len(), m.ncols());
            prop_assert!(rank <= m.nrows().min(m.ncols()));
            for v in &kernel {
                let img = m.apply(v);
                prop_assert!(img.iter().all(|x| x.is_zero()));
            }
        }

        #[test]
        fn inverse_roundtrip(m in arb_matrix(4)) {
            if m.nrows() == m.ncols() {
                if let Some(inv) = m.inverse() {
                    prop_assert_eq!(m.mul(&inv), ExactMatrix::identity(m.nrows()));
                }
            }
        }
    }
}
