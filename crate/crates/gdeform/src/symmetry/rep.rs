//! Representations with two backends, and their characters.
//!
//! The matrix backend assigns an invertible matrix to each group generator;
//! the weight backend represents a diagonalizable symmetry (a formal torus
//! `𝕋_k`) by the multiset of integer weight vectors of a basis of eigenlines.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use crate::error::Error;
use crate::exact::{CycScalar, ExactMatrix};
use crate::Result;

use super::group::FiniteGroupData;

#[derive(Clone)]
pub struct MatrixRep {
    pub label: String,
    group: Arc<FiniteGroupData>,
    images: Vec<ExactMatrix<CycScalar>>,
    class_images: Arc<OnceLock<Vec<ExactMatrix<CycScalar>>>>,
}

#[derive(Clone, Debug)]
pub struct WeightRep {
    pub label: String,
    rank: usize,
    weights: Vec<Vec<i64>>,
}

#[derive(Clone)]
pub enum Representation {
    Matrix(MatrixRep),
    Weight(WeightRep),
}

impl std::fmt::Debug for Representation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Representation::Matrix(m) => {
                write!(f, "MatrixRep({}, dim {})", m.label, m.dim())
            }
            Representation::Weight(w) => {
                write!(f, "WeightRep({}, weights {:?})", w.label, w.weights)
            }
        }
    }
}

impl MatrixRep {
    /// Wrap generator images without the homomorphism check; used for
    /// representations obtained from validated ones by functorial
    /// constructions.
    pub fn new_unchecked(
        group: Arc<FiniteGroupData>,
        images: Vec<ExactMatrix<CycScalar>>,
        label: impl Into<String>,
    ) -> Self {
        assert_eq!(images.len(), group.num_generators());
        MatrixRep {
            label: label.into(),
            group,
            images,
            class_images: Arc::new(OnceLock::new()),
        }
    }

    /// Wrap and verify that the generator images induce a homomorphism on
    /// the enumerated group.
    pub fn new(
        group: Arc<FiniteGroupData>,
        images: Vec<ExactMatrix<CycScalar>>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if images.len() != group.num_generators() {
            return Err(Error::GeneratorCountMismatch {
                got: images.len(),
                want: group.num_generators(),
            });
        }
        let rep = MatrixRep::new_unchecked(group, images, label);
        rep.validate()?;
        Ok(rep)
    }

    /// Homomorphism check by enumeration: consistency of the image map over
    /// every (element, generator) edge of the Cayley graph.
    pub fn validate(&self) -> Result<()> {
        let g = &self.group;
        let all = self.all_images();
        for e in 0..g.order() {
            for j in 0..g.num_generators() {
                let target = g.product(e, g.generator_element(j));
                if all[target] != all[e].mul(&self.images[j]) {
                    return Err(Error::NotHomomorphism);
                }
            }
        }
        Ok(())
    }

    fn all_images(&self) -> Vec<ExactMatrix<CycScalar>> {
        let g = &self.group;
        let mut out = vec![ExactMatrix::identity(self.dim()); g.order()];
        // BFS order guarantees parents come first
        for e in 1..g.order() {
            let mut m = ExactMatrix::identity(self.dim());
            for j in g.word(e) {
                m = m.mul(&self.images[j]);
            }
            out[e] = m;
        }
        out
    }

    pub fn group(&self) -> &Arc<FiniteGroupData> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.images.first().map_or(0, |m| m.nrows())
    }

    pub fn generator_images(&self) -> &[ExactMatrix<CycScalar>] {
        &self.images
    }

    /// Image of an arbitrary element, by word evaluation.
    pub fn image_of_element(&self, e: usize) -> ExactMatrix<CycScalar> {
        let mut m = ExactMatrix::identity(self.dim());
        for j in self.group.word(e) {
            m = m.mul(&self.images[j]);
        }
        m
    }

    /// Images of the class representatives, cached.
    pub fn class_images(&self) -> &[ExactMatrix<CycScalar>] {
        self.class_images.get_or_init(|| {
            (0..self.group.num_classes())
                .map(|c| self.image_of_element(self.group.class_representative(c)))
                .collect()
        })
    }

    pub fn character(&self) -> Character {
        let values = self
            .class_images()
            .iter()
            .map(|m| {
                let mut tr = CycScalar::zero();
                for i in 0..m.nrows() {
                    tr = tr.add(m.at(i, i));
                }
                tr
            })
            .collect();
        Character::Classes { values }
    }
}

impl WeightRep {
    pub fn new(rank: usize, weights: Vec<Vec<i64>>, label: impl Into<String>) -> Self {
        assert!(weights.iter().all(|w| w.len() == rank));
        WeightRep {
            label: label.into(),
            rank,
            weights,
        }
    }

    /// Single character `χ_a`.
    pub fn character_rep(rank: usize, weight: Vec<i64>, label: impl Into<String>) -> Self {
        WeightRep::new(rank, vec![weight], label)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn character(&self) -> Character {
        let mut multiset = BTreeMap::new();
        for w in &self.weights {
            *multiset.entry(w.clone()).or_insert(0) += 1;
        }
        Character::Weights { multiset }
    }
}

impl Representation {
    pub fn dim(&self) -> usize {
        match self {
            Representation::Matrix(m) => m.dim(),
            Representation::Weight(w) => w.dim(),
        }
    }

    pub fn label(&self) -> &str {
        match self {
            Representation::Matrix(m) => &m.label,
            Representation::Weight(w) => &w.label,
        }
    }

    pub fn as_matrix(&self) -> Option<&MatrixRep> {
        match self {
            Representation::Matrix(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_weight(&self) -> Option<&WeightRep> {
        match self {
            Representation::Weight(w) => Some(w),
            _ => None,
        }
    }

    pub fn character(&self) -> Character {
        match self {
            Representation::Matrix(m) => m.character(),
            Representation::Weight(w) => w.character(),
        }
    }

    fn same_group(a: &MatrixRep, b: &MatrixRep) -> Result<()> {
        if Arc::ptr_eq(&a.group, &b.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn tensor(&self, other: &Self) -> Result<Representation> {
        match (self, other) {
            (Representation::Matrix(a), Representation::Matrix(b)) => {
                Representation::same_group(a, b)?;
                let images = a
                    .images
                    .iter()
                    .zip(&b.images)
                    .map(|(x, y)| x.kron(y))
                    .collect();
                Ok(Representation::Matrix(MatrixRep::new_unchecked(
                    a.group.clone(),
                    images,
                    format!("{}⊗{}", a.label, b.label),
                )))
            }
            (Representation::Weight(a), Representation::Weight(b)) => {
                assert_eq!(a.rank, b.rank);
                let mut weights = Vec::with_capacity(a.dim() * b.dim());
                for wa in &a.weights {
                    for wb in &b.weights {
                        weights.push(wa.iter().zip(wb).map(|(x, y)| x + y).collect());
                    }
                }
                Ok(Representation::Weight(WeightRep::new(
                    a.rank,
                    weights,
                    format!("{}⊗{}", a.label, b.label),
                )))
            }
            _ => Err(Error::BackendMismatch),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Representation> {
        match (self, other) {
            (Representation::Matrix(a), Representation::Matrix(b)) => {
                Representation::same_group(a, b)?;
                let da = a.dim();
                let db = b.dim();
                let images = a
                    .images
                    .iter()
                    .zip(&b.images)
                    .map(|(x, y)| {
                        ExactMatrix::from_fn(da + db, da + db, |i, j| {
                            if i < da && j < da {
                                x.at(i, j).clone()
                            } else if i >= da && j >= da {
                                y.at(i - da, j - da).clone()
                            } else {
                                CycScalar::zero()
                            }
                        })
                    })
                    .collect();
                Ok(Representation::Matrix(MatrixRep::new_unchecked(
                    a.group.clone(),
                    images,
                    format!("{}⊕{}", a.label, b.label),
                )))
            }
            (Representation::Weight(a), Representation::Weight(b)) => {
                assert_eq!(a.rank, b.rank);
                let mut weights = a.weights.clone();
                weights.extend(b.weights.clone());
                Ok(Representation::Weight(WeightRep::new(
                    a.rank,
                    weights,
                    format!("{}⊕{}", a.label, b.label),
                )))
            }
            _ => Err(Error::BackendMismatch),
        }
    }

    /// Exterior square, on the basis `e_i ∧ e_j`, `i < j`.
    pub fn wedge2(&self) -> Result<Representation> {
        match self {
            Representation::Matrix(a) => {
                let d = a.dim();
                let pairs: Vec<(usize, usize)> = (0..d)
                    .flat_map(|i| ((i + 1)..d).map(move |j| (i, j)))
                    .collect();
                let images = a
                    .images
                    .iter()
                    .map(|g| {
                        ExactMatrix::from_fn(pairs.len(), pairs.len(), |r, c| {
                            let (k, l) = pairs[r];
                            let (i, j) = pairs[c];
                            // coefficient of e_k ∧ e_l in (g e_i) ∧ (g e_j)
                            g.at(k, i)
                                .mul(g.at(l, j))
                                .sub(&g.at(l, i).mul(g.at(k, j)))
                        })
                    })
                    .collect();
                Ok(Representation::Matrix(MatrixRep::new_unchecked(
                    a.group.clone(),
                    images,
                    format!("Λ²{}", a.label),
                )))
            }
            Representation::Weight(a) => {
                let mut weights = Vec::new();
                for i in 0..a.weights.len() {
                    for j in (i + 1)..a.weights.len() {
                        weights.push(
                            a.weights[i]
                                .iter()
                                .zip(&a.weights[j])
                                .map(|(x, y)| x + y)
                                .collect(),
                        );
                    }
                }
                Ok(Representation::Weight(WeightRep::new(
                    a.rank,
                    weights,
                    format!("Λ²{}", a.label),
                )))
            }
        }
    }

    /// Symmetric square, on the basis `e_i e_j`, `i ≤ j`.
    pub fn sym2(&self) -> Result<Representation> {
        match self {
            Representation::Matrix(a) => {
                let d = a.dim();
                let pairs: Vec<(usize, usize)> = (0..d)
                    .flat_map(|i| (i..d).map(move |j| (i, j)))
                    .collect();
                let images = a
                    .images
                    .iter()
                    .map(|g| {
                        ExactMatrix::from_fn(pairs.len(), pairs.len(), |r, c| {
                            let (k, l) = pairs[r];
                            let (i, j) = pairs[c];
                            // coefficient of e_k e_l (k ≤ l) in (g e_i)(g e_j)
                            if k == l {
                                g.at(k, i).mul(g.at(k, j))
                            } else {
                                g.at(k, i)
                                    .mul(g.at(l, j))
                                    .add(&g.at(l, i).mul(g.at(k, j)))
                            }
                        })
                    })
                    .collect();
                Ok(Representation::Matrix(MatrixRep::new_unchecked(
                    a.group.clone(),
                    images,
                    format!("Sym²{}", a.label),
                )))
            }
            Representation::Weight(a) => {
                let mut weights = Vec::new();
                for i in 0..a.weights.len() {
                    for j in i..a.weights.len() {
                        weights.push(
                            a.weights[i]
                                .iter()
                                .zip(&a.weights[j])
                                .map(|(x, y)| x + y)
                                .collect(),
                        );
                    }
                }
                Ok(Representation::Weight(WeightRep::new(
                    a.rank,
                    weights,
                    format!("Sym²{}", a.label),
                )))
            }
        }
    }

    pub fn dual(&self) -> Result<Representation> {
        match self {
            Representation::Matrix(a) => {
                let images = a
                    .images
                    .iter()
                    .map(|g| {
                        g.inverse()
                            .expect("group generator is invertible")
                            .transpose()
                    })
                    .collect();
                Ok(Representation::Matrix(MatrixRep::new_unchecked(
                    a.group.clone(),
                    images,
                    format!("{}*", a.label),
                )))
            }
            Representation::Weight(a) => {
                let weights = a
                    .weights
                    .iter()
                    .map(|w| w.iter().map(|x| -x).collect())
                    .collect();
                Ok(Representation::Weight(WeightRep::new(
                    a.rank,
                    weights,
                    format!("{}*", a.label),
                )))
            }
        }
    }

    /// `k`-th tensor power.
    pub fn tensor_power(&self, k: usize) -> Result<Representation> {
        let mut acc = match self {
            Representation::Matrix(a) => Representation::Matrix(MatrixRep::new_unchecked(
                a.group.clone(),
                vec![ExactMatrix::identity(1); a.images.len()],
                "1",
            )),
            Representation::Weight(a) => {
                Representation::Weight(WeightRep::new(a.rank, vec![vec![0; a.rank]], "1"))
            }
        };
        for _ in 0..k {
            acc = acc.tensor(self)?;
        }
        Ok(acc)
    }
}

/// Character of a representation: exact values on conjugacy-class
/// representatives (matrix backend) or a weight multiset (weight backend).
#[derive(Clone, PartialEq, Debug)]
pub enum Character {
    Classes { values: Vec<CycScalar> },
    Weights { multiset: BTreeMap<Vec<i64>, usize> },
}

impl Character {
    /// Dimension: the value at the identity class (which is class 0), or the
    /// multiset size.
    pub fn degree(&self) -> CycScalar {
        match self {
            Character::Classes { values } => values[0].clone(),
            Character::Weights { multiset } => {
                CycScalar::from_int(multiset.values().sum::<usize>() as i64)
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Character> {
        match (self, other) {
            (Character::Classes { values: a }, Character::Classes { values: b }) => {
                assert_eq!(a.len(), b.len());
                Ok(Character::Classes {
                    values: a.iter().zip(b).map(|(x, y)| x.add(y)).collect(),
                })
            }
            (Character::Weights { multiset: a }, Character::Weights { multiset: b }) => {
                let mut out = a.clone();
                for (w, n) in b {
                    *out.entry(w.clone()).or_insert(0) += n;
                }
                Ok(Character::Weights { multiset: out })
            }
            _ => Err(Error::BackendMismatch),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Character> {
        match (self, other) {
            (Character::Classes { values: a }, Character::Classes { values: b }) => {
                assert_eq!(a.len(), b.len());
                Ok(Character::Classes {
                    values: a.iter().zip(b).map(|(x, y)| x.sub(y)).collect(),
                })
            }
            (Character::Weights { multiset: a }, Character::Weights { multiset: b }) => {
                let mut out = a.clone();
                for (w, n) in b {
                    let entry = out.entry(w.clone()).or_insert(0);
                    assert!(*entry >= *n, "weight multiset subtraction went negative");
                    *entry -= n;
                    if *entry == 0 {
                        out.remove(w);
                    }
                }
                Ok(Character::Weights { multiset: out })
            }
            _ => Err(Error::BackendMismatch),
        }
    }

    /// Character of the `k`-th tensor power: pointwise power of class values,
    /// or `k`-fold sumset of the weight multiset.
    pub fn tensor_power(&self, k: usize) -> Character {
        match self {
            Character::Classes { values } => Character::Classes {
                values: values.iter().map(|v| v.pow(k as i64)).collect(),
            },
            Character::Weights { multiset } => {
                let rank = multiset.keys().next().map_or(0, |w| w.len());
                let mut acc: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
                acc.insert(vec![0; rank], 1);
                for _ in 0..k {
                    let mut next = BTreeMap::new();
                    for (wa, na) in &acc {
                        for (wb, nb) in multiset {
                            let sum: Vec<i64> = wa.iter().zip(wb).map(|(x, y)| x + y).collect();
                            *next.entry(sum).or_insert(0) += na * nb;
                        }
                    }
                    acc = next;
                }
                Character::Weights { multiset: acc }
            }
        }
    }
}

/// `(1/|G|) Σ_g χ_A(g) χ_B(g⁻¹)`, summed over classes. The result must be a
/// non-negative integer; panics otherwise (it is a structural invariant).
pub fn character_inner_product(group: &FiniteGroupData, a: &Character, b: &Character) -> usize {
    let (va, vb) = match (a, b) {
        (Character::Classes { values: va }, Character::Classes { values: vb }) => (va, vb),
        _ => panic!("character inner product needs class-function characters"),
    };
    let mut acc = CycScalar::zero();
    for c in 0..group.num_classes() {
        let size = CycScalar::from_int(group.class_size(c) as i64);
        let term = va[c].mul(&vb[group.inverse_class(c)]);
        acc = acc.add(&size.mul(&term));
    }
    let order = CycScalar::from_int(group.order() as i64);
    let val = acc.mul(&order.inv().unwrap());
    let r = val
        .as_rational()
        .expect("character inner product is rational");
    assert!(
        r.is_integer() && !num_traits::Signed::is_negative(&r),
        "character inner product {} is not a non-negative integer",
        r
    );
    use num_traits::ToPrimitive;
    r.to_integer().to_usize().expect("inner product fits usize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::group::{enumerate_group, permutation_matrix, DEFAULT_ELEMENT_CAP};

    fn perm_rep_s3() -> Representation {
        let gens = vec![permutation_matrix(&[1, 0, 2]), permutation_matrix(&[1, 2, 0])];
        let group = enumerate_group(gens.clone(), DEFAULT_ELEMENT_CAP).unwrap();
        Representation::Matrix(MatrixRep::new(group, gens, "V").unwrap())
    }

    #[test]
    fn wedge2_of_permutation_rep_has_dim_3() {
        let v = perm_rep_s3();
        let w = v.wedge2().unwrap();
        assert_eq!(w.dim(), 3);
        // character degree matches
        assert_eq!(w.character().degree(), CycScalar::from_int(3));
    }

    #[test]
    fn weight_backend_tensor_and_wedge() {
        let v = Representation::Weight(WeightRep::new(
            2,
            vec![vec![1, 0], vec![0, 1]],
            "χ_{e1}⊕χ_{e2}",
        ));
        let t = v.tensor(&v).unwrap();
        let w = t.as_weight().unwrap();
        let mut ws = w.weights().to_vec();
        ws.sort();
        assert_eq!(
            ws,
            vec![vec![0, 2], vec![1, 1], vec![1, 1], vec![2, 0]]
        );
        let wedge = v.wedge2().unwrap();
        assert_eq!(wedge.as_weight().unwrap().weights(), &[vec![1, 1]]);
    }

    #[test]
    fn dual_character_values_are_inverse_traces() {
        // Schrödinger representation of the Heisenberg group H_3
        let w = CycScalar::zeta(3);
        let shift = permutation_matrix(&[2, 0, 1]);
        let diag = ExactMatrix::from_fn(3, 3, |i, j| {
            if i == j {
                w.pow(i as i64)
            } else {
                CycScalar::zero()
            }
        });
        let group = enumerate_group(vec![shift.clone(), diag.clone()], DEFAULT_ELEMENT_CAP).unwrap();
        let v = MatrixRep::new(group.clone(), vec![shift, diag], "V").unwrap();
        let dual = Representation::Matrix(v.clone()).dual().unwrap();
        let dual = dual.as_matrix().unwrap();
        // trace comparison over all 27 elements: χ_dual(g) = χ(g^{-1})
        for e in 0..group.order() {
            let tr = |m: &ExactMatrix<CycScalar>| {
                let mut acc = CycScalar::zero();
                for i in 0..3 {
                    acc = acc.add(m.at(i, i));
                }
                acc
            };
            let lhs = tr(&dual.image_of_element(e));
            let rhs = tr(&v.image_of_element(group.inverse(e)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn homomorphism_check_rejects_garbage() {
        let gens = vec![permutation_matrix(&[1, 0, 2]), permutation_matrix(&[1, 2, 0])];
        let group = enumerate_group(gens, DEFAULT_ELEMENT_CAP).unwrap();
        // wrong image for the transposition: order mismatch
        let bad = vec![permutation_matrix(&[1, 2, 0]), permutation_matrix(&[1, 2, 0])];
        assert!(MatrixRep::new(group, bad, "bad").is_err());
    }
}
