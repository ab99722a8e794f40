//! Word indexing for tensor powers and the action of a matrix power
//! `g ⊗ g ⊗ … ⊗ g` on sparse tensors.
//!
//! The monomial basis of `V^{⊗k}` is the set of length-`k` words over the
//! basis of `V`, ordered lexicographically with the leftmost letter most
//! significant: the word `(i_1, …, i_k)` has index `Σ i_j · d^{k-j}`.

use super::cyclotomic::CycScalar;
use super::matrix::{ExactMatrix, SparseVec};
use super::scalar::Field;

pub fn word_to_index(word: &[usize], dim: usize) -> usize {
    word.iter().fold(0, |acc, &l| acc * dim + l)
}

pub fn index_to_word(mut index: usize, dim: usize, len: usize) -> Vec<usize> {
    let mut word = vec![0; len];
    for slot in (0..len).rev() {
        word[slot] = index % dim;
        index /= dim;
    }
    word
}

/// `dim^k`, guarded against overflow at desk scale.
pub fn tensor_dim(dim: usize, k: usize) -> usize {
    let mut out: usize = 1;
    for _ in 0..k {
        out = out.checked_mul(dim).expect("tensor dimension overflow");
    }
    out
}

/// Nonzero column entries of a matrix, precomputed for tensor application.
pub struct ColumnSupport {
    dim: usize,
    cols: Vec<Vec<(usize, CycScalar)>>,
    monomial: bool,
}

impl ColumnSupport {
    pub fn new(m: &ExactMatrix<CycScalar>) -> Self {
        assert_eq!(m.nrows(), m.ncols());
        let dim = m.ncols();
        let mut cols = Vec::with_capacity(dim);
        for j in 0..dim {
            let mut col = Vec::new();
            for i in 0..dim {
                if !m.at(i, j).is_zero() {
                    col.push((i, m.at(i, j).clone()));
                }
            }
            col.sort_by_key(|(i, _)| *i);
            cols.push(col);
        }
        let monomial = cols.iter().all(|c| c.len() == 1);
        ColumnSupport { dim, cols, monomial }
    }

    pub fn is_monomial(&self) -> bool {
        self.monomial
    }

    /// Apply `g^{⊗k}` to a sparse tensor of degree `k`.
    pub fn apply_tensor(&self, v: &SparseVec<CycScalar>, k: usize) -> SparseVec<CycScalar> {
        let mut out: Vec<(usize, CycScalar)> = Vec::new();
        for (idx, coeff) in v.entries() {
            let word = index_to_word(*idx, self.dim, k);
            if self.monomial {
                let mut target = 0usize;
                let mut c = coeff.clone();
                for &letter in &word {
                    let (row, val) = &self.cols[letter][0];
                    target = target * self.dim + row;
                    if !val.is_one() {
                        c = c.mul(val);
                    }
                }
                out.push((target, c));
            } else {
                // expand the product of column supports
                let mut partial: Vec<(usize, CycScalar)> = vec![(0, coeff.clone())];
                for &letter in &word {
                    let mut next = Vec::with_capacity(partial.len() * self.cols[letter].len());
                    for (tgt, c) in &partial {
                        for (row, val) in &self.cols[letter] {
                            next.push((tgt * self.dim + row, c.mul(val)));
                        }
                    }
                    partial = next;
                }
                out.extend(partial);
            }
        }
        SparseVec::from_entries(out)
    }
}

/// Apply `m_1 ⊗ m_2 ⊗ … ⊗ m_k` to a sparse tensor, one (square, same-size)
/// matrix per slot.
pub fn apply_slotwise(
    mats: &[&ExactMatrix<CycScalar>],
    v: &SparseVec<CycScalar>,
    dim: usize,
) -> SparseVec<CycScalar> {
    let k = mats.len();
    let mut out: Vec<(usize, CycScalar)> = Vec::new();
    for (idx, coeff) in v.entries() {
        let word = index_to_word(*idx, dim, k);
        let mut partial: Vec<(usize, CycScalar)> = vec![(0, coeff.clone())];
        for (slot, &letter) in word.iter().enumerate() {
            let m = mats[slot];
            let mut next = Vec::new();
            for (tgt, c) in &partial {
                for row in 0..dim {
                    let val = m.at(row, letter);
                    if val.is_zero() {
                        continue;
                    }
                    next.push((tgt * dim + row, c.mul(val)));
                }
            }
            partial = next;
        }
        out.extend(partial);
    }
    SparseVec::from_entries(out)
}

/// Apply `a ⊗ b` on a sparse element of `U ⊗ W` where `a` acts on the left
/// factor (dimension `du`) and `b` on the right (dimension `dw`). Indices are
/// `u * dw + w`.
pub fn apply_pair<F: Field>(
    a: &ExactMatrix<F>,
    b: &ExactMatrix<F>,
    v: &SparseVec<F>,
) -> SparseVec<F> {
    let dw = b.ncols();
    let mut out = Vec::new();
    for (idx, coeff) in v.entries() {
        let u = idx / dw;
        let w = idx % dw;
        for i in 0..a.nrows() {
            let av = a.at(i, u);
            if av.is_zero() {
                continue;
            }
            for j in 0..b.nrows() {
                let bv = b.at(j, w);
                if bv.is_zero() {
                    continue;
                }
                out.push((i * dw + j, coeff.mul_ref(&av.mul_ref(bv))));
            }
        }
    }
    SparseVec::from_entries(out)
}
