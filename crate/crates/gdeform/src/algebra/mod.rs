//! Graded algebra presentations `T(V)/(R)` and degree-by-degree computation
//! of ideal spans, Hilbert functions, and graded characters.
//!
//! The degree-`k` piece of the two-sided ideal is computed by pure linear
//! algebra: it is spanned by `V ⊗ I_{k-1}` together with `R_j ⊗ V^{⊗(k-j)}`
//! over all relation degrees `j`, accumulated in an incremental reduced row
//! echelon span over the word basis of `V^{⊗k}`.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::exact::tensor::{index_to_word, tensor_dim, word_to_index, ColumnSupport};
use crate::exact::{CycScalar, MultiPoly, RowSpace, SparseVec};
use crate::symmetry::{Character, Representation};
use crate::Result;

pub const DEFAULT_CUTOFF: usize = 5;
pub const DEFAULT_COLUMN_CAP: usize = 20_000;

/// A graded algebra presentation: generators, an optional symmetry on the
/// degree-1 part, and homogeneous relation subspaces given by exact
/// coefficient vectors over the word basis (leftmost letter most
/// significant).
#[derive(Clone)]
pub struct Presentation {
    gen_names: Vec<String>,
    symmetry: Option<Representation>,
    relations: BTreeMap<usize, Vec<SparseVec<CycScalar>>>,
    cutoff: usize,
    column_cap: usize,
}

impl std::fmt::Debug for Presentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Presentation(gens {:?}, relation degrees {:?})",
            self.gen_names,
            self.relations.keys().collect::<Vec<_>>()
        )
    }
}

impl Presentation {
    pub fn new(
        gen_names: Vec<String>,
        symmetry: Option<Representation>,
        relations: Vec<(usize, Vec<SparseVec<CycScalar>>)>,
        cutoff: usize,
    ) -> Result<Self> {
        let dim = gen_names.len();
        if let Some(rep) = &symmetry {
            assert_eq!(rep.dim(), dim, "symmetry dimension must match generators");
        }
        let mut map: BTreeMap<usize, Vec<SparseVec<CycScalar>>> = BTreeMap::new();
        for (degree, basis) in relations {
            assert!(degree >= 2, "relations live in degree >= 2");
            map.entry(degree).or_default().extend(basis);
        }
        // linear independence of each relation basis
        for (&degree, basis) in &map {
            let ncols = tensor_dim(dim, degree);
            let mut space = RowSpace::new(ncols);
            for (i, v) in basis.iter().enumerate() {
                if let Some((lead, _)) = v.leading() {
                    if lead >= ncols {
                        return Err(Error::RelationLength {
                            got: lead + 1,
                            want: ncols,
                        });
                    }
                }
                if space.insert(v.clone()).is_none() {
                    return Err(Error::RankDeficient {
                        rank: i,
                        want: basis.len(),
                    });
                }
            }
        }
        Ok(Presentation {
            gen_names,
            symmetry,
            relations: map,
            cutoff,
            column_cap: default_column_cap(),
        })
    }

    pub fn with_column_cap(mut self, cap: usize) -> Self {
        self.column_cap = cap;
        self
    }

    pub fn dim(&self) -> usize {
        self.gen_names.len()
    }

    pub fn gen_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn symmetry(&self) -> Option<&Representation> {
        self.symmetry.as_ref()
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn relations(&self) -> &BTreeMap<usize, Vec<SparseVec<CycScalar>>> {
        &self.relations
    }

    pub fn relation_degrees(&self) -> Vec<usize> {
        self.relations.keys().copied().collect()
    }

    pub fn is_quadratic(&self) -> Result<()> {
        for (&d, _) in &self.relations {
            if d != 2 {
                return Err(Error::NotQuadratic { degree: d });
            }
        }
        Ok(())
    }

    /// Row space of the degree-`d` relation basis.
    pub fn relation_span(&self, d: usize) -> RowSpace<CycScalar> {
        let mut space = RowSpace::new(tensor_dim(self.dim(), d));
        for v in self.relations.get(&d).into_iter().flatten() {
            space.insert(v.clone());
        }
        space
    }

    fn check_degree(&self, k: usize) -> Result<usize> {
        if k > self.cutoff {
            return Err(Error::DegreeBeyondCutoff {
                degree: k,
                cutoff: self.cutoff,
            });
        }
        let cols = tensor_dim(self.dim(), k);
        if cols > self.column_cap {
            return Err(Error::ColumnCapExceeded {
                cols,
                cap: self.column_cap,
            });
        }
        Ok(cols)
    }
}

/// Column cap, overridable through `G_DEFORM_MAX_COLS`.
pub fn default_column_cap() -> usize {
    std::env::var("G_DEFORM_MAX_COLS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_COLUMN_CAP)
}

/// Ideal spans per degree, `0 ..= max_degree`.
pub struct IdealTower {
    spans: Vec<RowSpace<CycScalar>>,
}

impl IdealTower {
    pub fn max_degree(&self) -> usize {
        self.spans.len() - 1
    }

    pub fn span(&self, k: usize) -> &RowSpace<CycScalar> {
        &self.spans[k]
    }
}

/// Degree-by-degree ideal spans up to `max_degree`.
pub fn ideal_tower(p: &Presentation, max_degree: usize) -> Result<IdealTower> {
    let dim = p.dim();
    let mut spans: Vec<RowSpace<CycScalar>> = Vec::with_capacity(max_degree + 1);
    for k in 0..=max_degree {
        let cols = p.check_degree(k)?;
        let mut space = RowSpace::new(cols);
        if k >= 2 {
            // V ⊗ I_{k-1}
            let stride = tensor_dim(dim, k - 1);
            for letter in 0..dim {
                for row in spans[k - 1].sorted_rows() {
                    space.insert(row.map_indices(|i| letter * stride + i));
                }
            }
            // R_j ⊗ V^{⊗(k-j)}
            for (&j, basis) in &p.relations {
                if j > k {
                    continue;
                }
                let right = tensor_dim(dim, k - j);
                for rel in basis {
                    for w in 0..right {
                        space.insert(rel.map_indices(|i| i * right + w));
                    }
                }
            }
        }
        spans.push(space);
    }
    Ok(IdealTower { spans })
}

/// Degree-`k` piece of the two-sided ideal `(R)`, as a reduced basis.
pub fn ideal_degree_span(p: &Presentation, k: usize) -> Result<RowSpace<CycScalar>> {
    let tower = ideal_tower(p, k)?;
    Ok(tower.spans.into_iter().nth(k).unwrap())
}

/// `dim A_0 … dim A_K`.
pub fn hilbert_function(p: &Presentation, max_degree: usize) -> Result<Vec<usize>> {
    let tower = ideal_tower(p, max_degree)?;
    Ok(hilbert_from_tower(p, &tower))
}

pub fn hilbert_from_tower(p: &Presentation, tower: &IdealTower) -> Vec<usize> {
    (0..=tower.max_degree())
        .map(|k| tensor_dim(p.dim(), k) - tower.span(k).rank())
        .collect()
}

#[derive(Clone, Debug)]
pub struct DegreeReport {
    pub degree: usize,
    pub ideal_dim: usize,
    pub algebra_dim: usize,
    pub character: Option<Character>,
}

/// Weight of a homogeneous tensor, from the weight backend of the symmetry.
fn weight_of_row(row: &SparseVec<CycScalar>, weights: &[Vec<i64>], k: usize) -> Vec<i64> {
    let dim = weights.len();
    let rank = weights.first().map_or(0, |w| w.len());
    let mut result: Option<Vec<i64>> = None;
    for (idx, _) in row.entries() {
        let word = index_to_word(*idx, dim, k);
        let mut w = vec![0i64; rank];
        for &letter in &word {
            for (i, x) in weights[letter].iter().enumerate() {
                w[i] += x;
            }
        }
        match &result {
            None => result = Some(w),
            Some(prev) => assert_eq!(
                prev, &w,
                "ideal row is not weight homogeneous; presentation is not torus stable"
            ),
        }
    }
    result.expect("nonzero row")
}

/// Character of a G-stable subspace of `V^{⊗k}`, by tracing the class
/// representatives on a reduced basis.
pub fn span_character(rep: &Representation, span: &RowSpace<CycScalar>, k: usize) -> Character {
    match rep {
        Representation::Matrix(m) => {
            let classes = m.class_images();
            let mut values = Vec::with_capacity(classes.len());
            for g in classes {
                let support = ColumnSupport::new(g);
                let mut trace = CycScalar::zero();
                for row in span.rows() {
                    let pivot = row.leading().expect("basis row is nonzero").0;
                    let image = support.apply_tensor(row, k);
                    if let Some(c) = image.get(pivot) {
                        trace = trace.add(c);
                    }
                }
                values.push(trace);
            }
            Character::Classes { values }
        }
        Representation::Weight(wrep) => {
            let mut multiset = BTreeMap::new();
            for row in span.rows() {
                let w = weight_of_row(row, wrep.weights(), k);
                *multiset.entry(w).or_insert(0usize) += 1;
            }
            Character::Weights { multiset }
        }
    }
}

/// Character of `A_k`: the character of `V^{⊗k}` minus the character of the
/// ideal span. Relation stability is checked first (it implies stability of
/// every ideal degree piece, since the group acts diagonally on shifts).
pub fn degree_character(p: &Presentation, tower: &IdealTower, k: usize) -> Result<Character> {
    let rep = p.symmetry().ok_or(Error::NoGroupAttached)?;
    let stability = is_g_stable(p)?;
    if let Some(v) = stability.violation {
        return Err(Error::NotGStable {
            generator: v.generator,
            degree: v.degree,
            relation: v.relation,
        });
    }
    let full = rep.character().tensor_power(k);
    full.sub(&span_character(rep, tower.span(k), k))
}

/// Full per-degree report.
pub fn degree_report(p: &Presentation, tower: &IdealTower, k: usize) -> Result<DegreeReport> {
    let ideal_dim = tower.span(k).rank();
    let algebra_dim = tensor_dim(p.dim(), k) - ideal_dim;
    let character = if p.symmetry().is_some() {
        Some(degree_character(p, tower, k)?)
    } else {
        None
    };
    if let Some(chi) = &character {
        assert_eq!(
            chi.degree(),
            CycScalar::from_int(algebra_dim as i64),
            "character degree must equal the algebra dimension"
        );
    }
    Ok(DegreeReport {
        degree: k,
        ideal_dim,
        algebra_dim,
        character,
    })
}

#[derive(Clone, Debug)]
pub struct StabilityViolation {
    pub generator: usize,
    pub degree: usize,
    pub relation: usize,
}

#[derive(Clone, Debug)]
pub struct Stability {
    pub stable: bool,
    pub violation: Option<StabilityViolation>,
}

/// Check that every relation space is invariant under every group generator
/// acting diagonally on tensor factors; returns the first violating pair.
pub fn is_g_stable(p: &Presentation) -> Result<Stability> {
    let rep = p.symmetry().ok_or(Error::NoGroupAttached)?;
    match rep {
        Representation::Matrix(m) => {
            for (&degree, basis) in p.relations() {
                let span = p.relation_span(degree);
                for (gi, g) in m.generator_images().iter().enumerate() {
                    let support = ColumnSupport::new(g);
                    for (ri, rel) in basis.iter().enumerate() {
                        let moved = support.apply_tensor(rel, degree);
                        if !span.contains(&moved) {
                            return Ok(Stability {
                                stable: false,
                                violation: Some(StabilityViolation {
                                    generator: gi,
                                    degree,
                                    relation: ri,
                                }),
                            });
                        }
                    }
                }
            }
            Ok(Stability {
                stable: true,
                violation: None,
            })
        }
        Representation::Weight(wrep) => {
            // torus stability: every weight component of every relation
            // stays inside the relation span
            let dim = wrep.weights().len();
            let rank = wrep.rank();
            for (&degree, basis) in p.relations() {
                let span = p.relation_span(degree);
                for (ri, rel) in basis.iter().enumerate() {
                    let mut components: BTreeMap<Vec<i64>, Vec<(usize, CycScalar)>> =
                        BTreeMap::new();
                    for (idx, coeff) in rel.entries() {
                        let word = index_to_word(*idx, dim, degree);
                        let mut w = vec![0i64; rank];
                        for &letter in &word {
                            for (i, x) in wrep.weights()[letter].iter().enumerate() {
                                w[i] += x;
                            }
                        }
                        components.entry(w).or_default().push((*idx, coeff.clone()));
                    }
                    for piece in components.into_values() {
                        if !span.contains(&SparseVec::from_entries(piece)) {
                            return Ok(Stability {
                                stable: false,
                                violation: Some(StabilityViolation {
                                    generator: 0,
                                    degree,
                                    relation: ri,
                                }),
                            });
                        }
                    }
                }
            }
            Ok(Stability {
                stable: true,
                violation: None,
            })
        }
    }
}

/// Substitute commuting scalar variables for the generators in every
/// relation: the polynomial system cutting out the scheme of 1-dimensional
/// representations. Zero polynomials are dropped.
pub fn onedim_locus(p: &Presentation) -> Result<Vec<MultiPoly>> {
    p.is_quadratic()?;
    let vars: Vec<String> = p.gen_names().to_vec();
    let dim = p.dim();
    let mut out: Vec<MultiPoly> = Vec::new();
    for rel in p.relations().get(&2).into_iter().flatten() {
        let mut poly = MultiPoly::zero(vars.clone());
        for (idx, c) in rel.entries() {
            let word = index_to_word(*idx, dim, 2);
            let mut exps = vec![0u32; dim];
            exps[word[0]] += 1;
            exps[word[1]] += 1;
            poly.add_term(&exps, c);
        }
        if poly.is_zero() {
            continue;
        }
        let n = poly.normalized();
        if !out.contains(&n) {
            out.push(n);
        }
    }
    out.sort_by_key(|p| format!("{}", p));
    Ok(out)
}

/// Convenience: a relation vector from `(coefficient, word)` pairs.
pub fn relation(dim: usize, terms: &[(CycScalar, &[usize])]) -> SparseVec<CycScalar> {
    SparseVec::from_entries(
        terms
            .iter()
            .map(|(c, w)| {
                debug_assert!(w.iter().all(|&l| l < dim));
                (word_to_index(w, dim), c.clone())
            })
            .collect(),
    )
}

/// The commutative polynomial presentation on a symmetry's degree-1 part:
/// `T(V)/(V ∧ V)`, relations `x_i ⊗ x_j - x_j ⊗ x_i` for `i < j`.
pub fn polynomial_presentation(
    gen_names: Vec<String>,
    symmetry: Option<Representation>,
    cutoff: usize,
) -> Result<Presentation> {
    let dim = gen_names.len();
    let mut basis = Vec::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            basis.push(relation(
                dim,
                &[(CycScalar::one(), &[i, j]), (CycScalar::from_int(-1), &[j, i])],
            ));
        }
    }
    Presentation::new(gen_names, symmetry, vec![(2, basis)], cutoff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::{
        enumerate_group, permutation_matrix, MatrixRep, WeightRep, DEFAULT_ELEMENT_CAP,
    };

    fn c(n: i64) -> CycScalar {
        CycScalar::from_int(n)
    }

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn commutative_plane_ideal_dims() {
        let p = polynomial_presentation(names(&["x", "y"]), None, 5).unwrap();
        assert_eq!(ideal_degree_span(&p, 2).unwrap().rank(), 1);
        let span3 = ideal_degree_span(&p, 3).unwrap();
        assert_eq!(span3.rank(), 4);
        // dim A_3 = 8 - 4 = 4, the number of degree-3 monomials in two variables
        assert_eq!(hilbert_function(&p, 3).unwrap(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn polynomial_ring_in_three_variables() {
        let p = polynomial_presentation(names(&["x", "y", "z"]), None, 5).unwrap();
        assert_eq!(hilbert_function(&p, 4).unwrap(), vec![1, 3, 6, 10, 15]);
    }

    #[test]
    fn quantum_plane_has_polynomial_hilbert_function() {
        // a·xy - b·yx with generic exact a, b
        let a = CycScalar::from_ratio(3, 2);
        let b = CycScalar::from_int(5);
        let rel = relation(2, &[(a, &[0, 1]), (b.neg(), &[1, 0])]);
        let p = Presentation::new(names(&["x", "y"]), None, vec![(2, vec![rel])], 5).unwrap();
        assert_eq!(hilbert_function(&p, 4).unwrap(), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn squares_only_presentation_counts_square_free_words() {
        // x², y², z²: dim A_3 counts length-3 words with no adjacent repeat
        let rels: Vec<SparseVec<CycScalar>> =
            (0..3).map(|i| relation(3, &[(c(1), &[i, i])])).collect();
        let p = Presentation::new(names(&["x", "y", "z"]), None, vec![(2, rels)], 5).unwrap();
        assert_eq!(hilbert_function(&p, 3).unwrap(), vec![1, 3, 6, 12]);
    }

    #[test]
    fn differential_case_dim_a3_matches_pbw_oracle() {
        // xy - yx, xt - tx - y², yt - ty - x²
        let rels = vec![
            relation(3, &[(c(1), &[0, 1]), (c(-1), &[1, 0])]),
            relation(3, &[(c(1), &[0, 2]), (c(-1), &[2, 0]), (c(-1), &[1, 1])]),
            relation(3, &[(c(1), &[1, 2]), (c(-1), &[2, 1]), (c(-1), &[0, 0])]),
        ];
        let p = Presentation::new(names(&["x", "y", "t"]), None, vec![(2, rels)], 5).unwrap();
        let h = hilbert_function(&p, 3).unwrap();
        // oracle: ordered monomials x^a y^b t^c of total degree 3
        let mut count = 0;
        for a in 0..=3usize {
            for _b in 0..=3 - a {
                count += 1;
            }
        }
        assert_eq!(count, 10);
        assert_eq!(h, vec![1, 3, 6, 10]);
    }

    #[test]
    fn monotone_ideal_growth() {
        let p = polynomial_presentation(names(&["x", "y", "z"]), None, 5).unwrap();
        let tower = ideal_tower(&p, 4).unwrap();
        let dim = p.dim();
        for k in 2..4 {
            let lower = tower.span(k);
            let upper = tower.span(k + 1);
            let stride = tensor_dim(dim, k);
            for row in lower.rows() {
                for letter in 0..dim {
                    let left = row.map_indices(|i| letter * stride + i);
                    assert!(upper.contains(&left));
                    let right = row.map_indices(|i| i * dim + letter);
                    assert!(upper.contains(&right));
                }
            }
        }
    }

    fn s3_perm_rep() -> Representation {
        let gens = vec![permutation_matrix(&[1, 0, 2]), permutation_matrix(&[1, 2, 0])];
        let group = enumerate_group(gens.clone(), DEFAULT_ELEMENT_CAP).unwrap();
        Representation::Matrix(MatrixRep::new(group, gens, "V").unwrap())
    }

    #[test]
    fn wedge_relations_are_always_stable() {
        let p = polynomial_presentation(names(&["x", "y", "z"]), Some(s3_perm_rep()), 4).unwrap();
        let st = is_g_stable(&p).unwrap();
        assert!(st.stable);
    }

    #[test]
    fn torus_stability_handles_inhomogeneous_bases() {
        let v = Representation::Weight(WeightRep::new(2, vec![vec![1, 0], vec![0, 1]], "V"));
        // span{x1x2 + x1x1, x1x2 - x1x1} is stable although neither basis
        // vector is weight homogeneous
        let r1 = relation(2, &[(c(1), &[0, 1]), (c(1), &[0, 0])]);
        let r2 = relation(2, &[(c(1), &[0, 1]), (c(-1), &[0, 0])]);
        let p = Presentation::new(names(&["x1", "x2"]), Some(v.clone()), vec![(2, vec![r1, r2])], 4)
            .unwrap();
        assert!(is_g_stable(&p).unwrap().stable);
        // a lone inhomogeneous relation is not
        let r = relation(2, &[(c(1), &[0, 1]), (c(1), &[0, 0])]);
        let q =
            Presentation::new(names(&["x1", "x2"]), Some(v), vec![(2, vec![r])], 4).unwrap();
        assert!(!is_g_stable(&q).unwrap().stable);
    }

    #[test]
    fn lone_xy_relation_is_not_s2_stable() {
        let swap = permutation_matrix(&[1, 0]);
        let group = enumerate_group(vec![swap.clone()], DEFAULT_ELEMENT_CAP).unwrap();
        let rep = Representation::Matrix(MatrixRep::new(group, vec![swap], "V").unwrap());
        let rel = relation(2, &[(c(1), &[0, 1])]);
        let p = Presentation::new(names(&["x", "y"]), Some(rep), vec![(2, vec![rel])], 4).unwrap();
        let st = is_g_stable(&p).unwrap();
        assert!(!st.stable);
        let v = st.violation.unwrap();
        assert_eq!((v.generator, v.degree, v.relation), (0, 2, 0));
    }

    #[test]
    fn quantum_plane_degree_characters() {
        let v = Representation::Weight(WeightRep::new(2, vec![vec![1, 0], vec![0, 1]], "V"));
        let rel = relation(2, &[(c(2), &[0, 1]), (c(-3), &[1, 0])]);
        let p = Presentation::new(names(&["x1", "x2"]), Some(v), vec![(2, vec![rel])], 5).unwrap();
        let tower = ideal_tower(&p, 2).unwrap();
        let chi = degree_character(&p, &tower, 2).unwrap();
        match chi {
            Character::Weights { multiset } => {
                let expected: BTreeMap<Vec<i64>, usize> =
                    [(vec![2, 0], 1), (vec![1, 1], 1), (vec![0, 2], 1)]
                        .into_iter()
                        .collect();
                assert_eq!(multiset, expected);
            }
            _ => panic!("weight character expected"),
        }
        // degree 0 is the trivial character
        let chi0 = degree_character(&p, &tower, 0).unwrap();
        assert_eq!(chi0.degree(), c(1));
    }

    #[test]
    fn character_degree_equals_algebra_dim_matrix_backend() {
        let p = polynomial_presentation(names(&["x", "y", "z"]), Some(s3_perm_rep()), 4).unwrap();
        let tower = ideal_tower(&p, 3).unwrap();
        for k in 0..=3 {
            let report = degree_report(&p, &tower, k).unwrap();
            assert_eq!(report.algebra_dim, [1, 3, 6, 10][k]);
        }
    }

    #[test]
    fn degree_character_refuses_unstable_presentations() {
        let swap = permutation_matrix(&[1, 0]);
        let group = enumerate_group(vec![swap.clone()], DEFAULT_ELEMENT_CAP).unwrap();
        let rep = Representation::Matrix(MatrixRep::new(group, vec![swap], "V").unwrap());
        let rel = relation(2, &[(c(1), &[0, 1])]);
        let p = Presentation::new(names(&["x", "y"]), Some(rep), vec![(2, vec![rel])], 4).unwrap();
        let tower = ideal_tower(&p, 2).unwrap();
        assert!(matches!(
            degree_character(&p, &tower, 2),
            Err(Error::NotGStable { .. })
        ));
    }

    #[test]
    fn onedim_locus_of_commutative_ring_is_empty() {
        let p = polynomial_presentation(names(&["x", "y", "z"]), None, 4).unwrap();
        assert!(onedim_locus(&p).unwrap().is_empty());
    }

    #[test]
    fn onedim_locus_of_differential_model() {
        let rels = vec![
            relation(3, &[(c(1), &[0, 1]), (c(-1), &[1, 0])]),
            relation(3, &[(c(1), &[0, 2]), (c(-1), &[2, 0]), (c(-1), &[1, 1])]),
            relation(3, &[(c(1), &[1, 2]), (c(-1), &[2, 1]), (c(-1), &[0, 0])]),
        ];
        let p = Presentation::new(names(&["x", "y", "t"]), None, vec![(2, rels)], 4).unwrap();
        let locus = onedim_locus(&p).unwrap();
        // commutators vanish; the two differential relations leave x², y²
        assert_eq!(locus.len(), 2);
        let vars = names(&["x", "y", "t"]);
        let x = MultiPoly::variable(vars.clone(), 0);
        let y = MultiPoly::variable(vars.clone(), 1);
        assert!(locus.contains(&x.mul(&x).normalized()));
        assert!(locus.contains(&y.mul(&y).normalized()));
    }

    #[test]
    fn dependent_relation_basis_is_rejected() {
        let r = relation(2, &[(c(1), &[0, 1]), (c(-1), &[1, 0])]);
        let twice = r.scale(&c(2));
        assert!(
            Presentation::new(names(&["x", "y"]), None, vec![(2, vec![r, twice])], 4).is_err()
        );
    }

    #[test]
    fn cutoff_and_cap_are_enforced() {
        let p = polynomial_presentation(names(&["x", "y"]), None, 3).unwrap();
        assert!(matches!(
            hilbert_function(&p, 4),
            Err(Error::DegreeBeyondCutoff { .. })
        ));
        let p = polynomial_presentation(names(&["x", "y", "z"]), None, 20)
            .unwrap()
            .with_column_cap(100);
        assert!(matches!(
            hilbert_function(&p, 5),
            Err(Error::ColumnCapExceeded { .. })
        ));
    }
}
