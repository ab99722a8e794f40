//! JSON file schemas and the exact scalar text syntax.
//!
//! Scalars are written as rationals `p/q` or as polynomials in `w`, where `w`
//! denotes `ζ_m` for the conductor declared by the enclosing file:
//! `"2"`, `"-1/3"`, `"w"`, `"1 + 2*w - 1/3*w^2"`. Matrices are row-major
//! arrays of scalar strings. All schemas carry a `schema` version tag.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::Presentation;
use crate::deform::{DeformPoint, PointBlock};
use crate::error::Error;
use crate::exact::cyclotomic::euler_phi;
use crate::exact::{CycScalar, Rat, SparseVec};
use crate::symmetry::{
    enumerate_group, FiniteGroupData, MatrixRep, Representation, WeightRep, DEFAULT_ELEMENT_CAP,
};
use crate::exact::ExactMatrix;
use crate::Result;

// ---- scalar text syntax ----

fn parse_rational(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(n))
    }
}

/// Parse one term: an optional rational coefficient, optionally times a
/// power of `w`. Returns (power, coefficient).
fn parse_term(term: &str) -> Option<(usize, Rat)> {
    let term = term.trim().replace(' ', "");
    if term.is_empty() {
        return None;
    }
    if let Some(idx) = term.find('w') {
        let coeff_part = term[..idx].trim_end_matches('*');
        let coeff = if coeff_part.is_empty() {
            Rat::from_integer(BigInt::from(1))
        } else {
            parse_rational(coeff_part)?
        };
        let rest = &term[idx + 1..];
        let power = if rest.is_empty() {
            1usize
        } else {
            rest.strip_prefix('^')?.parse().ok()?
        };
        Some((power, coeff))
    } else {
        Some((0, parse_rational(&term)?))
    }
}

/// Parse an exact scalar at the given conductor.
pub fn parse_scalar(text: &str, conductor: u64) -> Result<CycScalar> {
    let err = |msg: &str| Error::ScalarParse {
        literal: text.to_string(),
        message: msg.to_string(),
    };
    let mut acc = CycScalar::zero();
    let zeta = CycScalar::zeta(conductor);
    // split into signed terms
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut sign = false;
    for (i, ch) in text.chars().enumerate() {
        match ch {
            '+' | '-' if !cur.trim().is_empty() && !cur.trim_end().ends_with(['^', '*', '/']) => {
                terms.push((sign, std::mem::take(&mut cur)));
                sign = ch == '-';
            }
            '-' if i == 0 || cur.trim().is_empty() => {
                // leading sign of the first term
                if cur.trim().is_empty() && terms.is_empty() && !sign {
                    sign = true;
                } else {
                    cur.push(ch);
                }
            }
            _ => cur.push(ch),
        }
    }
    if !cur.trim().is_empty() {
        terms.push((sign, cur));
    }
    if terms.is_empty() {
        return Err(err("empty scalar"));
    }
    for (negative, body) in terms {
        let (power, coeff) = parse_term(&body).ok_or_else(|| err("malformed term"))?;
        if power > 0 && conductor == 1 {
            return Err(err("w used with conductor 1"));
        }
        let coeff = if negative { -coeff } else { coeff };
        let term = zeta.pow(power as i64).scale(&coeff);
        acc = acc.add(&term);
    }
    Ok(acc)
}

fn fmt_rat(r: &Rat) -> String {
    use num_traits::One;
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Render a scalar on the power basis of the given conductor, in the syntax
/// accepted by `parse_scalar`.
pub fn scalar_to_string(c: &CycScalar, conductor: u64) -> String {
    use num_traits::{One, Signed};
    let coeffs = c.coeffs_at(conductor);
    let mut parts: Vec<String> = Vec::new();
    for (j, r) in coeffs.iter().enumerate() {
        if r.is_zero() {
            continue;
        }
        let mag = r.abs();
        let neg = r.is_negative();
        let body = match j {
            0 => fmt_rat(&mag),
            _ => {
                let var = if j == 1 { "w".to_string() } else { format!("w^{}", j) };
                if mag.is_one() {
                    var
                } else {
                    format!("{}*{}", fmt_rat(&mag), var)
                }
            }
        };
        if parts.is_empty() {
            parts.push(if neg { format!("-{}", body) } else { body });
        } else {
            parts.push(format!("{} {}", if neg { "-" } else { "+" }, body));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" ")
    }
}

// ---- file schemas ----

pub type MatrixData = Vec<Vec<String>>;

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct GroupFile {
    pub schema: String, // "group-v1"
    pub conductor: u64,
    pub generators: Vec<MatrixData>,
    #[serde(default)]
    pub element_cap: Option<usize>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct RepFile {
    pub schema: String, // "rep-v1"
    pub backend: String, // "matrix" | "weight"
    #[serde(default)]
    pub label: Option<String>,
    #[serde(default)]
    pub conductor: Option<u64>,
    #[serde(default)]
    pub generator_images: Option<Vec<MatrixData>>,
    #[serde(default)]
    pub rank: Option<usize>,
    #[serde(default)]
    pub weights: Option<Vec<Vec<i64>>>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct RelationData {
    pub degree: usize,
    /// Coefficient vectors over the word basis of `V^{⊗degree}`, leftmost
    /// letter most significant.
    pub vectors: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct PresentationFile {
    pub schema: String, // "presentation-v1"
    pub generators: Vec<String>,
    pub conductor: u64,
    #[serde(default = "default_cutoff")]
    pub cutoff: usize,
    pub relations: Vec<RelationData>,
}

fn default_cutoff() -> usize {
    crate::algebra::DEFAULT_CUTOFF
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct PointBlockData {
    pub simple_label: String,
    pub rows: usize,
    pub cols: usize,
    pub matrix: MatrixData,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct PointDegreeData {
    pub degree: usize,
    pub blocks: Vec<PointBlockData>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct DeformPointFile {
    pub schema: String, // "deformpoint-v1"
    pub conductor: u64,
    pub degrees: Vec<PointDegreeData>,
}

fn schema_err(context: &str, message: impl Into<String>) -> Error {
    Error::Schema {
        context: context.to_string(),
        message: message.into(),
    }
}

fn parse_matrix(data: &MatrixData, conductor: u64, context: &str) -> Result<ExactMatrix<CycScalar>> {
    let rows = data.len();
    let cols = data.first().map_or(0, |r| r.len());
    if data.iter().any(|r| r.len() != cols) {
        return Err(schema_err(context, "ragged matrix rows"));
    }
    let mut m = ExactMatrix::zeros(rows, cols);
    for (i, row) in data.iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            *m.at_mut(i, j) = parse_scalar(cell, conductor)?;
        }
    }
    Ok(m)
}

pub fn matrix_to_data(m: &ExactMatrix<CycScalar>, conductor: u64) -> MatrixData {
    (0..m.nrows())
        .map(|i| {
            (0..m.ncols())
                .map(|j| scalar_to_string(m.at(i, j), conductor))
                .collect()
        })
        .collect()
}

pub fn load_group(path: &Path) -> Result<std::sync::Arc<FiniteGroupData>> {
    let text = std::fs::read_to_string(path)?;
    let file: GroupFile = serde_json::from_str(&text)?;
    group_from_file(&file)
}

pub fn group_from_file(file: &GroupFile) -> Result<std::sync::Arc<FiniteGroupData>> {
    if file.schema != "group-v1" {
        return Err(schema_err("group file", format!("unknown schema {}", file.schema)));
    }
    if euler_phi(file.conductor) == 0 {
        return Err(schema_err("group file", "bad conductor"));
    }
    let gens: Result<Vec<_>> = file
        .generators
        .iter()
        .map(|g| parse_matrix(g, file.conductor, "group generator"))
        .collect();
    enumerate_group(gens?, file.element_cap.unwrap_or(DEFAULT_ELEMENT_CAP))
}

/// Load a representation; matrix-backend files validate the homomorphism
/// property against the supplied group.
pub fn rep_from_file(
    file: &RepFile,
    group: Option<&std::sync::Arc<FiniteGroupData>>,
) -> Result<Representation> {
    if file.schema != "rep-v1" {
        return Err(schema_err("rep file", format!("unknown schema {}", file.schema)));
    }
    let label = file.label.clone().unwrap_or_else(|| "V".to_string());
    match file.backend.as_str() {
        "matrix" => {
            let group = group.ok_or_else(|| schema_err("rep file", "matrix backend needs a group"))?;
            let conductor = file
                .conductor
                .ok_or_else(|| schema_err("rep file", "matrix backend needs a conductor"))?;
            let images = file
                .generator_images
                .as_ref()
                .ok_or_else(|| schema_err("rep file", "matrix backend needs generator_images"))?;
            let mats: Result<Vec<_>> = images
                .iter()
                .map(|m| parse_matrix(m, conductor, "generator image"))
                .collect();
            Ok(Representation::Matrix(MatrixRep::new(
                group.clone(),
                mats?,
                label,
            )?))
        }
        "weight" => {
            let rank = file
                .rank
                .ok_or_else(|| schema_err("rep file", "weight backend needs a rank"))?;
            let weights = file
                .weights
                .clone()
                .ok_or_else(|| schema_err("rep file", "weight backend needs weights"))?;
            if weights.iter().any(|w| w.len() != rank) {
                return Err(schema_err("rep file", "weight vector length != rank"));
            }
            Ok(Representation::Weight(WeightRep::new(rank, weights, label)))
        }
        other => Err(schema_err("rep file", format!("unknown backend {}", other))),
    }
}

pub fn load_rep(
    path: &Path,
    group: Option<&std::sync::Arc<FiniteGroupData>>,
) -> Result<Representation> {
    let text = std::fs::read_to_string(path)?;
    let file: RepFile = serde_json::from_str(&text)?;
    rep_from_file(&file, group)
}

pub fn presentation_from_file(
    file: &PresentationFile,
    symmetry: Option<Representation>,
) -> Result<Presentation> {
    if file.schema != "presentation-v1" {
        return Err(schema_err(
            "presentation file",
            format!("unknown schema {}", file.schema),
        ));
    }
    let dim = file.generators.len();
    let mut relations = Vec::new();
    for rel in &file.relations {
        let want = crate::exact::tensor::tensor_dim(dim, rel.degree);
        let mut basis = Vec::new();
        for vec in &rel.vectors {
            if vec.len() != want {
                return Err(Error::RelationLength {
                    got: vec.len(),
                    want,
                });
            }
            let dense: Result<Vec<CycScalar>> = vec
                .iter()
                .map(|s| parse_scalar(s, file.conductor))
                .collect();
            basis.push(SparseVec::from_dense(&dense?));
        }
        relations.push((rel.degree, basis));
    }
    Presentation::new(file.generators.clone(), symmetry, relations, file.cutoff)
}

pub fn load_presentation(path: &Path, symmetry: Option<Representation>) -> Result<Presentation> {
    let text = std::fs::read_to_string(path)?;
    let file: PresentationFile = serde_json::from_str(&text)?;
    presentation_from_file(&file, symmetry)
}

pub fn presentation_to_file(p: &Presentation, conductor: u64) -> PresentationFile {
    let dim = p.dim();
    let relations = p
        .relations()
        .iter()
        .map(|(&degree, basis)| RelationData {
            degree,
            vectors: basis
                .iter()
                .map(|v| {
                    v.to_dense(crate::exact::tensor::tensor_dim(dim, degree))
                        .iter()
                        .map(|c| scalar_to_string(c, conductor))
                        .collect()
                })
                .collect(),
        })
        .collect();
    PresentationFile {
        schema: "presentation-v1".into(),
        generators: p.gen_names().to_vec(),
        conductor,
        cutoff: p.cutoff(),
        relations,
    }
}

pub fn point_to_file(point: &DeformPoint, conductor: u64) -> DeformPointFile {
    let degrees = point
        .blocks
        .iter()
        .map(|(&degree, blocks)| PointDegreeData {
            degree,
            blocks: blocks
                .iter()
                .map(|b| PointBlockData {
                    simple_label: b.label.clone(),
                    rows: b.rows,
                    cols: b.cols,
                    matrix: b
                        .entries
                        .iter()
                        .map(|row| row.iter().map(|c| scalar_to_string(c, conductor)).collect())
                        .collect(),
                })
                .collect(),
        })
        .collect();
    DeformPointFile {
        schema: "deformpoint-v1".into(),
        conductor,
        degrees,
    }
}

/// Rebuild a deformation point against a known simples list (labels must
/// match ledger simples).
pub fn point_from_file(
    file: &DeformPointFile,
    simple_index_of: impl Fn(&str) -> Option<usize>,
) -> Result<DeformPoint> {
    if file.schema != "deformpoint-v1" {
        return Err(schema_err(
            "deformpoint file",
            format!("unknown schema {}", file.schema),
        ));
    }
    let mut blocks = BTreeMap::new();
    for d in &file.degrees {
        let mut out = Vec::new();
        for b in &d.blocks {
            let simple = simple_index_of(&b.simple_label).ok_or_else(|| {
                schema_err("deformpoint file", format!("unknown simple {}", b.simple_label))
            })?;
            let mut matrix = Vec::new();
            for row in &b.matrix {
                let parsed: Result<Vec<CycScalar>> = row
                    .iter()
                    .map(|s| parse_scalar(s, file.conductor))
                    .collect();
                matrix.push(parsed?);
            }
            out.push(PointBlock::new(simple, b.simple_label.clone(), matrix, b.cols)?);
        }
        blocks.insert(d.degree, out);
    }
    Ok(DeformPoint { blocks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_round_trips() {
        for (text, conductor) in [
            ("0", 1u64),
            ("5", 1),
            ("-2/3", 1),
            ("w", 3),
            ("1 + 2*w", 3),
            ("-1/2 + w^2", 5),
            ("2*w^3 - w", 12),
        ] {
            let v = parse_scalar(text, conductor).unwrap();
            let s = scalar_to_string(&v, conductor);
            let v2 = parse_scalar(&s, conductor).unwrap();
            assert_eq!(v, v2, "round trip of {:?} via {:?}", text, s);
        }
    }

    #[test]
    fn scalar_parse_understands_roots_of_unity() {
        // 1 + w + w^2 = 0 at conductor 3
        let v = parse_scalar("1 + w + w^2", 3).unwrap();
        assert!(v.is_zero());
        let m1 = parse_scalar("w^2", 4).unwrap();
        assert_eq!(m1, CycScalar::from_int(-1));
    }

    #[test]
    fn bad_scalars_are_rejected() {
        assert!(parse_scalar("", 1).is_err());
        assert!(parse_scalar("q", 3).is_err());
        assert!(parse_scalar("w", 1).is_err());
        assert!(parse_scalar("1/0", 1).is_err());
    }

    #[test]
    fn group_file_round_trip() {
        let file = GroupFile {
            schema: "group-v1".into(),
            conductor: 3,
            generators: vec![
                vec![
                    vec!["0".into(), "1".into(), "0".into()],
                    vec!["0".into(), "0".into(), "1".into()],
                    vec!["1".into(), "0".into(), "0".into()],
                ],
                vec![
                    vec!["1".into(), "0".into(), "0".into()],
                    vec!["0".into(), "w".into(), "0".into()],
                    vec!["0".into(), "0".into(), "w^2".into()],
                ],
            ],
            element_cap: None,
        };
        let group = group_from_file(&file).unwrap();
        assert_eq!(group.order(), 27);
    }

    #[test]
    fn presentation_file_round_trip() {
        let p = crate::algebra::polynomial_presentation(
            vec!["x".into(), "y".into()],
            None,
            4,
        )
        .unwrap();
        let file = presentation_to_file(&p, 1);
        let back = presentation_from_file(&file, None).unwrap();
        assert_eq!(back.gen_names(), p.gen_names());
        let span = p.relation_span(2);
        for row in back.relation_span(2).rows() {
            assert!(span.contains(row));
        }
    }

    #[test]
    fn deformpoint_file_round_trip() {
        use crate::deform::{DeformPoint, PointBlock};
        let w = CycScalar::zeta(3);
        let block = PointBlock::new(
            0,
            "chi_(1,1)".into(),
            vec![vec![CycScalar::one(), w.clone()]],
            2,
        )
        .unwrap();
        let point = DeformPoint {
            blocks: [(2usize, vec![block])].into_iter().collect(),
        };
        let file = point_to_file(&point, 3);
        let back = point_from_file(&file, |label| (label == "chi_(1,1)").then_some(0)).unwrap();
        assert_eq!(back, point);
        assert!(point_from_file(&file, |_| None).is_err());
    }

    #[test]
    fn presentation_file_rejects_bad_lengths() {
        let file = PresentationFile {
            schema: "presentation-v1".into(),
            generators: vec!["x".into(), "y".into()],
            conductor: 1,
            cutoff: 4,
            relations: vec![RelationData {
                degree: 2,
                vectors: vec![vec!["1".into(); 3]],
            }],
        };
        assert!(matches!(
            presentation_from_file(&file, None),
            Err(Error::RelationLength { got: 3, want: 4 })
        ));
    }
}
