//! Multiplicity ledgers, Grassmannian embedding spaces, and the passage
//! between deformation points and presentations.
//!
//! For a G-stable presentation `A = T(V)/(R)` and a list of pairwise
//! non-isomorphic absolutely irreducible simples, the ledger records per
//! degree `k` and simple `S_i` the multiplicities `a` (in `V^{⊗k}`), `e`
//! (in `A_k`), and `f = a - e` (in the relation ideal). A deformation point
//! selects, per simple with `f > 0`, an `f×a` full-rank coefficient matrix in
//! reduced row echelon form; its rows combine the Schur basis of
//! `Hom_G(S_i, V^{⊗k})` into an embedded relation subspace.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use crate::algebra::{degree_character, ideal_tower, Presentation};
use crate::error::Error;
use crate::exact::tensor::tensor_dim;
use crate::exact::{CycScalar, ExactMatrix, RowSpace, SparseVec};
use crate::symmetry::{multiplicity_of_character, Representation, WeightRep};
use crate::Result;

#[derive(Clone, Debug)]
pub struct LedgerRow {
    pub simple: usize,
    pub a: usize,
    pub e: usize,
    pub f: usize,
}

pub struct Ledger {
    base: Presentation,
    simples: Vec<Representation>,
    rows: BTreeMap<usize, Vec<LedgerRow>>,
    schur_cache: Mutex<HashMap<(usize, usize), Vec<ExactMatrix<CycScalar>>>>,
}

impl fmt::Debug for Ledger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ledger(degrees {:?})", self.rows.keys().collect::<Vec<_>>())
    }
}

/// Multiplicities `a`, `e`, `f` per degree and simple, with consistency sums
/// asserted. For the weight backend an empty `simples` list means "every
/// weight that occurs".
pub fn build_ledger(
    base: &Presentation,
    simples: &[Representation],
    max_degree: usize,
) -> Result<Ledger> {
    let rep = base.symmetry().ok_or(Error::NoGroupAttached)?;
    let mut simples: Vec<Representation> = simples.to_vec();
    if simples.is_empty() {
        if let Representation::Weight(w) = rep {
            // auto list: every weight occurring in V^{⊗k}, k ≤ max_degree
            let mut seen = std::collections::BTreeSet::new();
            let mut acc = vec![vec![0i64; w.rank()]];
            for _ in 0..max_degree {
                let mut next = Vec::new();
                for cur in &acc {
                    for wt in w.weights() {
                        let s: Vec<i64> = cur.iter().zip(wt).map(|(x, y)| x + y).collect();
                        next.push(s);
                    }
                }
                acc = next;
                for s in &acc {
                    seen.insert(s.clone());
                }
            }
            simples = seen
                .into_iter()
                .map(|wt| {
                    let label = format!(
                        "chi_({})",
                        wt.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                    );
                    Representation::Weight(WeightRep::character_rep(w.rank(), wt, label))
                })
                .collect();
        }
    }

    let group = match rep {
        Representation::Matrix(m) => Some(m.group().as_ref()),
        Representation::Weight(_) => None,
    };
    let chi_v = rep.character();
    let tower = ideal_tower(base, max_degree)?;

    let mut rows = BTreeMap::new();
    for k in 2..=max_degree {
        let full = chi_v.tensor_power(k);
        let quotient = degree_character(base, &tower, k)?;
        let mut degree_rows = Vec::new();
        let mut dim_sum = 0usize;
        let mut f_sum = 0usize;
        for (idx, s) in simples.iter().enumerate() {
            let a = multiplicity_of_character(s, &full, group)?;
            let e = multiplicity_of_character(s, &quotient, group)?;
            assert!(e <= a, "quotient multiplicity exceeds ambient multiplicity");
            let f = a - e;
            dim_sum += s.dim() * a;
            f_sum += s.dim() * f;
            degree_rows.push(LedgerRow {
                simple: idx,
                a,
                e,
                f,
            });
        }
        let want = tensor_dim(base.dim(), k);
        if dim_sum != want {
            return Err(Error::SimplesIncomplete {
                degree: k,
                got: dim_sum,
                want,
            });
        }
        assert_eq!(
            f_sum,
            tower.span(k).rank(),
            "ledger f-multiplicities must account for the ideal dimension at degree {}",
            k
        );
        rows.insert(k, degree_rows);
    }

    Ok(Ledger {
        base: base.clone(),
        simples,
        rows,
        schur_cache: Mutex::new(HashMap::new()),
    })
}

impl Ledger {
    pub fn base(&self) -> &Presentation {
        &self.base
    }

    pub fn simples(&self) -> &[Representation] {
        &self.simples
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    pub fn rows_at(&self, degree: usize) -> &[LedgerRow] {
        &self.rows[&degree]
    }

    /// Basis of `Hom_G(S_i, V^{⊗k})`, cached per `(degree, simple)`. Each
    /// basis element is a `(dim V)^k × dim S_i` matrix.
    pub fn schur_basis(&self, degree: usize, simple: usize) -> Result<Vec<ExactMatrix<CycScalar>>> {
        if let Some(hit) = self
            .schur_cache
            .lock()
            .unwrap()
            .get(&(degree, simple))
            .cloned()
        {
            return Ok(hit);
        }
        let rep = self.base.symmetry().unwrap();
        let basis = match (&self.simples[simple], rep) {
            (Representation::Matrix(s), Representation::Matrix(_)) => {
                let power = rep.tensor_power(degree)?;
                let power = power.as_matrix().unwrap();
                crate::symmetry::intertwiner_basis(
                    s.generator_images(),
                    power.generator_images(),
                )
            }
            (Representation::Weight(s), Representation::Weight(v)) => {
                // columns at the words of the right weight
                let target = &s.weights()[0];
                let dim = v.dim();
                let n = tensor_dim(dim, degree);
                let mut out = Vec::new();
                for idx in 0..n {
                    let word = crate::exact::tensor::index_to_word(idx, dim, degree);
                    let mut w = vec![0i64; v.rank()];
                    for &letter in &word {
                        for (i, x) in v.weights()[letter].iter().enumerate() {
                            w[i] += x;
                        }
                    }
                    if &w == target {
                        let mut m = ExactMatrix::zeros(n, 1);
                        *m.at_mut(idx, 0) = CycScalar::one();
                        out.push(m);
                    }
                }
                out
            }
            _ => return Err(Error::BackendMismatch),
        };
        let expected_a = self.rows[&degree][simple].a;
        assert_eq!(
            basis.len(),
            expected_a,
            "Schur basis size must equal the ledger multiplicity"
        );
        self.schur_cache
            .lock()
            .unwrap()
            .insert((degree, simple), basis.clone());
        Ok(basis)
    }
}

/// A point of the deformation parameter space: per degree and per simple
/// with `f > 0`, a full-rank `f×a` coefficient matrix in reduced row echelon
/// form (the canonical Grassmannian representative).
#[derive(Clone, PartialEq)]
pub struct DeformPoint {
    pub blocks: BTreeMap<usize, Vec<PointBlock>>,
}

#[derive(Clone, PartialEq)]
pub struct PointBlock {
    pub simple: usize,
    pub label: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<CycScalar>>,
}

impl fmt::Debug for PointBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}x{}[", self.label, self.rows, self.cols)?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|c| format!("{}", c)).collect();
            write!(f, "({})", cells.join(","))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for DeformPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DeformPoint{:?}", self.blocks)
    }
}

impl PointBlock {
    /// Canonicalize a full-rank coefficient matrix to reduced row echelon
    /// form.
    pub fn new(
        simple: usize,
        label: String,
        matrix: Vec<Vec<CycScalar>>,
        cols: usize,
    ) -> Result<Self> {
        let want = matrix.len();
        let mut space = RowSpace::new(cols);
        for row in &matrix {
            assert_eq!(row.len(), cols);
            space.insert(SparseVec::from_dense(row));
        }
        if space.rank() != want {
            return Err(Error::RankDeficient {
                rank: space.rank(),
                want,
            });
        }
        let entries: Vec<Vec<CycScalar>> = space
            .sorted_rows()
            .into_iter()
            .map(|r| r.to_dense(cols))
            .collect();
        Ok(PointBlock {
            simple,
            label,
            rows: want,
            cols,
            entries,
        })
    }

    /// Plücker coordinates: the `f×f` minors over column subsets in
    /// lexicographic order. For reports; equality testing uses the echelon
    /// form itself.
    pub fn pluecker(&self) -> Vec<CycScalar> {
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                if cur.len() == k {
                    out.push(cur.clone());
                    return;
                }
                for i in start..n {
                    cur.push(i);
                    rec(i + 1, n, k, cur, out);
                    cur.pop();
                }
            }
            let mut out = Vec::new();
            rec(0, n, k, &mut Vec::new(), &mut out);
            out
        }
        fn det(m: &[Vec<CycScalar>]) -> CycScalar {
            let n = m.len();
            if n == 0 {
                return CycScalar::one();
            }
            if n == 1 {
                return m[0][0].clone();
            }
            let mut acc = CycScalar::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<CycScalar>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][j].mul(&det(&minor));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
        subsets(self.cols, self.rows)
            .into_iter()
            .map(|cols| {
                let sub: Vec<Vec<CycScalar>> = self
                    .entries
                    .iter()
                    .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
                    .collect();
                det(&sub)
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct GrassFactor {
    pub degree: usize,
    pub simple_label: String,
    pub f: usize,
    pub a: usize,
}

impl GrassFactor {
    pub fn dim(&self) -> usize {
        self.f * (self.a - self.f)
    }
}

#[derive(Clone, Debug)]
pub struct EmbeddingSpace {
    pub factors: Vec<GrassFactor>,
    pub total_dim: usize,
}

impl fmt::Display for EmbeddingSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "point (empty product, dim 0)");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|g| format!("Grass({},{})[{} deg {}]", g.f, g.a, g.simple_label, g.degree))
            .collect();
        write!(f, "{} (dim {})", parts.join(" x "), self.total_dim)
    }
}

/// The Grassmannian factors `Grass(f, a)` with `f > 0`, and the total
/// dimension `Σ f(a-f)`.
pub fn embedding_space(ledger: &Ledger, degrees: &[usize]) -> EmbeddingSpace {
    let mut factors = Vec::new();
    for &d in degrees {
        for row in ledger.rows_at(d) {
            if row.f > 0 {
                factors.push(GrassFactor {
                    degree: d,
                    simple_label: ledger.simples()[row.simple].label().to_string(),
                    f: row.f,
                    a: row.a,
                });
            }
        }
    }
    let total_dim = factors.iter().map(|g| g.dim()).sum();
    EmbeddingSpace { factors, total_dim }
}

/// Relation vectors selected by one point block: the images of the maps
/// `Σ_j c_j · (j-th Schur basis map)` over the block's rows.
fn block_relations(
    ledger: &Ledger,
    degree: usize,
    block: &PointBlock,
) -> Result<Vec<SparseVec<CycScalar>>> {
    let schur = ledger.schur_basis(degree, block.simple)?;
    assert_eq!(block.cols, schur.len(), "coefficient width must equal a");
    let s_dim = ledger.simples()[block.simple].dim();
    let n = tensor_dim(ledger.base().dim(), degree);
    let mut out = Vec::new();
    for coeffs in &block.entries {
        for s in 0..s_dim {
            // column s of Σ_j c_j m_j
            let mut dense = vec![CycScalar::zero(); n];
            for (j, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for r in 0..n {
                    let v = schur[j].at(r, s);
                    if !v.is_zero() {
                        dense[r] = dense[r].add(&c.mul(v));
                    }
                }
            }
            let vec = SparseVec::from_dense(&dense);
            if !vec.is_zero() {
                out.push(vec);
            }
        }
    }
    Ok(out)
}

/// Build the presentation selected by a deformation point. The result is
/// G-stable by construction; this is asserted.
pub fn point_to_presentation(ledger: &Ledger, point: &DeformPoint) -> Result<Presentation> {
    let mut relations = Vec::new();
    for (&degree, blocks) in &point.blocks {
        let mut basis = Vec::new();
        for block in blocks {
            let expected_f = ledger.rows_at(degree)[block.simple].f;
            if block.rows != expected_f {
                return Err(Error::ProfileMismatch {
                    degree,
                    label: block.label.clone(),
                    got: block.rows,
                    want: expected_f,
                });
            }
            basis.extend(block_relations(ledger, degree, block)?);
        }
        relations.push((degree, basis));
    }
    let p = Presentation::new(
        ledger.base().gen_names().to_vec(),
        ledger.base().symmetry().cloned(),
        relations,
        ledger.base().cutoff(),
    )?;
    let stability = crate::algebra::is_g_stable(&p)?;
    assert!(
        stability.stable,
        "point_to_presentation produced a non-stable relation space"
    );
    Ok(p)
}

/// Canonicalize a presentation's relation spaces into a deformation point:
/// for each simple, the coefficient vectors `c` with `im(Σ c_j m_j) ⊆ R_k`,
/// in reduced row echelon form.
pub fn canonical_point(ledger: &Ledger, p: &Presentation) -> Result<DeformPoint> {
    let mut blocks = BTreeMap::new();
    for &degree in p.relations().keys() {
        if !ledger.rows.contains_key(&degree) {
            return Err(Error::DegreeBeyondCutoff {
                degree,
                cutoff: ledger.degrees().last().copied().unwrap_or(0),
            });
        }
        let span = p.relation_span(degree);
        let mut degree_blocks = Vec::new();
        let mut accounted = 0usize;
        for row in ledger.rows_at(degree) {
            if row.a == 0 {
                continue;
            }
            let schur = ledger.schur_basis(degree, row.simple)?;
            let s_dim = ledger.simples()[row.simple].dim();
            // residuals of each Schur column modulo the relation span are
            // linear in the coefficients c_j
            let mut eqs: RowSpace<CycScalar> = RowSpace::new(row.a);
            let mut residuals: Vec<Vec<SparseVec<CycScalar>>> = Vec::new();
            for m in schur.iter() {
                let mut cols = Vec::new();
                for s in 0..s_dim {
                    let col: Vec<CycScalar> = (0..m.nrows()).map(|r| m.at(r, s).clone()).collect();
                    cols.push(span.reduce(&SparseVec::from_dense(&col)));
                }
                residuals.push(cols);
            }
            // for each basis vector s and residual coordinate, one equation
            for s in 0..s_dim {
                let mut coords: std::collections::BTreeSet<usize> = std::collections::BTreeSet::new();
                for res in &residuals {
                    for (i, _) in res[s].entries() {
                        coords.insert(*i);
                    }
                }
                for &coord in &coords {
                    let entries: Vec<(usize, CycScalar)> = residuals
                        .iter()
                        .enumerate()
                        .filter_map(|(j, res)| {
                            res[s].get(coord).map(|v| (j, v.clone()))
                        })
                        .collect();
                    eqs.insert(SparseVec::from_entries(entries));
                }
            }
            let kernel = eqs.kernel_basis();
            if kernel.len() != row.f {
                return Err(Error::ProfileMismatch {
                    degree,
                    label: ledger.simples()[row.simple].label().to_string(),
                    got: kernel.len(),
                    want: row.f,
                });
            }
            if row.f == 0 {
                continue;
            }
            let matrix: Vec<Vec<CycScalar>> =
                kernel.iter().map(|v| v.to_dense(row.a)).collect();
            let block = PointBlock::new(
                row.simple,
                ledger.simples()[row.simple].label().to_string(),
                matrix,
                row.a,
            )?;
            accounted += s_dim * row.f;
            degree_blocks.push(block);
        }
        assert_eq!(
            accounted,
            span.rank(),
            "blocks must account for the whole relation space at degree {}",
            degree
        );
        blocks.insert(degree, degree_blocks);
    }
    Ok(DeformPoint { blocks })
}

#[derive(Clone, Debug)]
pub enum VkViolation {
    DimensionMismatch {
        degree: usize,
        got: usize,
        want: usize,
    },
    ShiftEscapes {
        from_degree: usize,
        to_degree: usize,
        relation: usize,
        left: usize,
    },
}

#[derive(Clone, Debug)]
pub struct VkReport {
    pub ok: bool,
    pub violation: Option<VkViolation>,
}

/// Closure condition for membership in the degree-`k` deformation variety:
/// every shift `V^{⊗l} ⊗ P_i ⊗ V^{⊗(j-i-l)}` of a lower subspace is
/// contained in the higher one, for every pair of supplied degrees. Optional
/// expected dimensions (from a ledger profile) are checked first.
pub fn vk_membership(
    dim: usize,
    spans: &[(usize, RowSpace<CycScalar>)],
    expected_dims: Option<&BTreeMap<usize, usize>>,
) -> VkReport {
    if let Some(expected) = expected_dims {
        for (degree, span) in spans {
            if let Some(&want) = expected.get(degree) {
                if span.rank() != want {
                    return VkReport {
                        ok: false,
                        violation: Some(VkViolation::DimensionMismatch {
                            degree: *degree,
                            got: span.rank(),
                            want,
                        }),
                    };
                }
            }
        }
    }
    for (i_idx, (di, pi)) in spans.iter().enumerate() {
        for (dj, pj) in spans.iter().skip(i_idx + 1) {
            let (di, dj) = (*di, *dj);
            if di >= dj {
                continue;
            }
            let gap = dj - di;
            for l in 0..=gap {
                let r = gap - l;
                let left_count = tensor_dim(dim, l);
                let right_count = tensor_dim(dim, r);
                let mid = tensor_dim(dim, di);
                for left in 0..left_count {
                    for right in 0..right_count {
                        for (ri, row) in pi.rows().iter().enumerate() {
                            let shifted = row
                                .map_indices(|w| (left * mid + w) * right_count + right);
                            if !pj.contains(&shifted) {
                                return VkReport {
                                    ok: false,
                                    violation: Some(VkViolation::ShiftEscapes {
                                        from_degree: di,
                                        to_degree: dj,
                                        relation: ri,
                                        left: l,
                                    }),
                                };
                            }
                        }
                    }
                }
            }
        }
    }
    VkReport {
        ok: true,
        violation: None,
    }
}
