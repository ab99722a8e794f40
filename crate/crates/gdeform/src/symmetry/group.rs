//! Finite matrix groups: enumeration, multiplication lookup, conjugacy
//! classes.
//!
//! A group is given by invertible generator matrices over a common cyclotomic
//! field and enumerated by breadth-first closure. Elements are matrices of
//! the defining representation, so faithfulness is automatic.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::Error;
use crate::exact::cyclotomic::{lcm_u64, Rat};
use crate::exact::{CycScalar, ExactMatrix};
use crate::Result;

/// Default bound on the breadth-first closure.
pub const DEFAULT_ELEMENT_CAP: usize = 10_000;

#[derive(PartialEq, Eq, Hash)]
struct MatrixKey(Vec<Rat>);

fn key_of(m: &ExactMatrix<CycScalar>, conductor: u64) -> MatrixKey {
    let mut flat = Vec::with_capacity(m.nrows() * m.ncols());
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            flat.extend(m.at(i, j).coeffs_at(conductor));
        }
    }
    MatrixKey(flat)
}

pub struct FiniteGroupData {
    conductor: u64,
    dim: usize,
    generators: Vec<ExactMatrix<CycScalar>>,
    elements: Vec<ExactMatrix<CycScalar>>,
    index: HashMap<MatrixKey, usize>,
    /// BFS tree: element = parent * generator. The identity has no parent.
    parent: Vec<Option<(usize, usize)>>,
    generator_elements: Vec<usize>,
    inverses: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl std::fmt::Debug for FiniteGroupData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FiniteGroupData(order {}, dim {}, {} classes)",
            self.order(),
            self.dim,
            self.classes.len()
        )
    }
}

/// Breadth-first closure of the generators, with conjugacy classes.
pub fn enumerate_group(
    generators: Vec<ExactMatrix<CycScalar>>,
    cap: usize,
) -> Result<Arc<FiniteGroupData>> {
    assert!(!generators.is_empty(), "need at least one generator");
    let dim = generators[0].nrows();
    for g in &generators {
        assert_eq!(g.nrows(), dim);
        assert_eq!(g.ncols(), dim);
    }
    let mut conductor = 1u64;
    for g in &generators {
        for i in 0..dim {
            for j in 0..dim {
                conductor = lcm_u64(conductor, g.at(i, j).conductor());
            }
        }
    }
    for g in &generators {
        if g.inverse().is_none() {
            return Err(Error::NotInvertible);
        }
    }

    let identity = ExactMatrix::identity(dim);
    let mut elements = vec![identity.clone()];
    let mut parent: Vec<Option<(usize, usize)>> = vec![None];
    let mut index = HashMap::new();
    index.insert(key_of(&identity, conductor), 0usize);

    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &e in &frontier {
            for (j, g) in generators.iter().enumerate() {
                let prod = elements[e].mul(g);
                let key = key_of(&prod, conductor);
                if !index.contains_key(&key) {
                    if elements.len() >= cap {
                        return Err(Error::GroupCapExceeded { cap });
                    }
                    index.insert(key, elements.len());
                    parent.push(Some((e, j)));
                    next.push(elements.len());
                    elements.push(prod);
                }
            }
        }
        frontier = next;
    }

    let generator_elements: Vec<usize> = generators
        .iter()
        .map(|g| index[&key_of(g, conductor)])
        .collect();

    let inverses: Vec<usize> = elements
        .iter()
        .map(|e| {
            let inv = e.inverse().expect("group element is invertible");
            index[&key_of(&inv, conductor)]
        })
        .collect();

    // conjugacy classes: orbit closure under conjugation by the generators
    let order = elements.len();
    let mut class_of = vec![usize::MAX; order];
    let mut classes = Vec::new();
    let mul = |a: usize, b: usize, elements: &Vec<ExactMatrix<CycScalar>>, index: &HashMap<MatrixKey, usize>| {
        index[&key_of(&elements[a].mul(&elements[b]), conductor)]
    };
    for start in 0..order {
        if class_of[start] != usize::MAX {
            continue;
        }
        let cls = classes.len();
        let mut orbit = vec![start];
        class_of[start] = cls;
        let mut queue = vec![start];
        while let Some(x) = queue.pop() {
            for (j, _) in generators.iter().enumerate() {
                let g = generator_elements[j];
                let gx = mul(g, x, &elements, &index);
                let conj = mul(gx, inverses[g], &elements, &index);
                if class_of[conj] == usize::MAX {
                    class_of[conj] = cls;
                    orbit.push(conj);
                    queue.push(conj);
                }
            }
        }
        orbit.sort();
        classes.push(orbit);
    }

    Ok(Arc::new(FiniteGroupData {
        conductor,
        dim,
        generators,
        elements,
        index,
        parent,
        generator_elements,
        inverses,
        classes,
        class_of,
    }))
}

impl FiniteGroupData {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn generators(&self) -> &[ExactMatrix<CycScalar>] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn element(&self, i: usize) -> &ExactMatrix<CycScalar> {
        &self.elements[i]
    }

    pub fn index_of(&self, m: &ExactMatrix<CycScalar>) -> Option<usize> {
        self.index.get(&key_of(m, self.conductor)).copied()
    }

    pub fn contains(&self, m: &ExactMatrix<CycScalar>) -> bool {
        self.index_of(m).is_some()
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        let m = self.elements[a].mul(&self.elements[b]);
        self.index[&key_of(&m, self.conductor)]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn generator_element(&self, j: usize) -> usize {
        self.generator_elements[j]
    }

    /// Generator word for an element, following the BFS tree.
    pub fn word(&self, mut e: usize) -> Vec<usize> {
        let mut out = Vec::new();
        while let Some((p, g)) = self.parent[e] {
            out.push(g);
            e = p;
        }
        out.reverse();
        out
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, e: usize) -> usize {
        self.class_of[e]
    }

    /// Smallest element index in the class, used as its representative.
    pub fn class_representative(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    /// Class of the inverses of a class.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.class_of[self.inverses[self.class_representative(c)]]
    }
}

/// 0/1 permutation matrix sending basis vector `i` to `perm[i]`.
pub fn permutation_matrix(perm: &[usize]) -> ExactMatrix<CycScalar> {
    let n = perm.len();
    let mut m = ExactMatrix::zeros(n, n);
    for (i, &pi) in perm.iter().enumerate() {
        *m.at_mut(pi, i) = CycScalar::one();
    }
    m
}
