//! Irrep-free parametrization: the family of embedded images of a G-stable
//! subspace `K ⊂ V^{⊗k}`, through its equivariant Hom space.
//!
//! When `End_G(K)` is the scalars, distinct points of `ℙ(Hom_G(K, V^{⊗k}))`
//! with injective representatives give distinct subspaces, so the family is
//! reported as a projective space with explicit coordinates. Otherwise the
//! raw Hom basis is returned and the quotient is left to the caller.

use crate::error::Error;
use crate::exact::tensor::{tensor_dim, ColumnSupport};
use crate::exact::{CycScalar, ExactMatrix, RowSpace, SparseVec};
use crate::symmetry::{intertwiner_basis, Representation};
use crate::Result;

#[derive(Clone, Debug)]
pub enum FamilyShape {
    /// `ℙ^n` with coordinates the Hom-basis coefficients.
    Projective(usize),
    /// `End_G(K)` is not scalar; only the raw basis is meaningful.
    Raw,
}

pub struct HomFamily {
    /// Basis of `Hom_G(K, V^{⊗k})`; each map is `(dim V)^k × dim K`, in the
    /// coordinates of the supplied basis of `K`.
    pub hom_basis: Vec<ExactMatrix<CycScalar>>,
    pub end_dim: usize,
    pub shape: FamilyShape,
}

impl HomFamily {
    pub fn hom_dim(&self) -> usize {
        self.hom_basis.len()
    }

    /// The subspace selected by a coefficient vector: the image of
    /// `Σ c_j m_j`.
    pub fn subspace(&self, coeffs: &[CycScalar]) -> RowSpace<CycScalar> {
        assert_eq!(coeffs.len(), self.hom_basis.len());
        let n = self.hom_basis.first().map_or(0, |m| m.nrows());
        let k_dim = self.hom_basis.first().map_or(0, |m| m.ncols());
        let mut space = RowSpace::new(n);
        for s in 0..k_dim {
            let mut dense = vec![CycScalar::zero(); n];
            for (j, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for r in 0..n {
                    let v = self.hom_basis[j].at(r, s);
                    if !v.is_zero() {
                        dense[r] = dense[r].add(&c.mul(v));
                    }
                }
            }
            space.insert(SparseVec::from_dense(&dense));
        }
        space
    }
}

/// Hom family of a G-stable subspace `K ⊂ V^{⊗k}` given by a basis of
/// vectors. Matrix backend only.
pub fn hom_family(
    rep: &Representation,
    k: usize,
    k_basis: &[SparseVec<CycScalar>],
) -> Result<HomFamily> {
    let m = rep.as_matrix().ok_or(Error::BackendMismatch)?;
    let dim = rep.dim();
    let n = tensor_dim(dim, k);

    let mut span = RowSpace::new(n);
    for v in k_basis {
        span.insert(v.clone());
    }
    // insertion order, so that `coordinates` indexes align with the basis
    let basis_rows: Vec<SparseVec<CycScalar>> = span.rows().to_vec();
    let k_dim = basis_rows.len();

    // stability check and the restricted generator action on K
    let mut k_gens = Vec::new();
    for g in m.generator_images() {
        let support = ColumnSupport::new(g);
        let mut action = ExactMatrix::zeros(k_dim, k_dim);
        for (c, row) in basis_rows.iter().enumerate() {
            let moved = support.apply_tensor(row, k);
            let coords = span.coordinates(&moved).ok_or(Error::NotGStable {
                generator: 0,
                degree: k,
                relation: c,
            })?;
            for (r, v) in coords.into_iter().enumerate() {
                *action.at_mut(r, c) = v;
            }
        }
        k_gens.push(action);
    }

    let power = rep.tensor_power(k)?;
    let power_gens = power.as_matrix().unwrap().generator_images().to_vec();
    let hom_basis = intertwiner_basis(&k_gens, &power_gens);
    let end_dim = intertwiner_basis(&k_gens, &k_gens).len();

    // the inclusion is equivariant, so it must lie in the span of the basis
    let mut flat_space = RowSpace::new(n * k_dim);
    for b in &hom_basis {
        let mut dense = Vec::with_capacity(n * k_dim);
        for r in 0..n {
            for c in 0..k_dim {
                dense.push(b.at(r, c).clone());
            }
        }
        flat_space.insert(SparseVec::from_dense(&dense));
    }
    let mut inclusion = vec![CycScalar::zero(); n * k_dim];
    for (c, row) in basis_rows.iter().enumerate() {
        for (idx, v) in row.entries() {
            inclusion[idx * k_dim + c] = v.clone();
        }
    }
    assert!(
        flat_space.contains(&SparseVec::from_dense(&inclusion)),
        "the identity inclusion must lie in the Hom span"
    );

    let shape = if end_dim == 1 {
        FamilyShape::Projective(hom_basis.len().saturating_sub(1))
    } else {
        FamilyShape::Raw
    };
    Ok(HomFamily {
        hom_basis,
        end_dim,
        shape,
    })
}
