//! Multiplicity tables for a representation's tensor powers and the ledger
//! of its polynomial ring.

use crate::algebra::polynomial_presentation;
use crate::deform::{build_ledger, embedding_space};
use crate::exact::tensor::tensor_dim;
use crate::symmetry::{multiplicity_of_character, Character, Representation};
use crate::Result;

use super::report::{Provenance, Report};
use super::character_string;

/// Decomposition table of `V^{⊗k}`, `Λ²V`, `Sym²V`, plus the degree-2 ledger
/// of `ℂ[V]` when an irrep list is available.
pub fn cmd_decompose(
    rep: &Representation,
    irreps: &[Representation],
    degree: usize,
) -> Result<Report> {
    let mut report = Report::new("decompose");
    report.meta("dim", rep.dim().to_string());
    report.meta("degree", degree.to_string());

    let chi = rep.character();
    let power = chi.tensor_power(degree);
    let wedge = rep.wedge2()?.character();
    let sym = rep.sym2()?.character();

    match rep {
        Representation::Matrix(m) => {
            let group = m.group();
            let mut total = 0usize;
            {
                let s = report.section("multiplicities");
                for simple in irreps {
                    let a = multiplicity_of_character(simple, &power, Some(group))?;
                    let w = multiplicity_of_character(simple, &wedge, Some(group))?;
                    let sy = multiplicity_of_character(simple, &sym, Some(group))?;
                    total += simple.dim() * a;
                    s.row(
                        simple.label(),
                        format!("V^{{⊗{}}}: {}, wedge: {}, sym: {}", degree, a, w, sy),
                    );
                }
            }
            report.verdict_eq(
                "multiplicities_exhaust_tensor_power",
                tensor_dim(rep.dim(), degree),
                total,
                Provenance::Definition,
            );
        }
        Representation::Weight(_) => {
            let s = report.section("weights");
            if let Character::Weights { multiset } = &power {
                for (w, count) in multiset {
                    s.row(format!("{:?}", w), count);
                }
            }
            s.row("wedge", character_string(&wedge));
            s.row("sym", character_string(&sym));
        }
    }

    // ledger of the polynomial ring
    let names: Vec<String> = (0..rep.dim()).map(|i| format!("x{}", i)).collect();
    let poly = polynomial_presentation(names, Some(rep.clone()), degree.max(2))?;
    let ledger = build_ledger(&poly, irreps, degree.max(2))?;
    {
        let s = report.section("polynomial_ledger");
        for d in ledger.degrees() {
            let rows: Vec<String> = ledger
                .rows_at(d)
                .iter()
                .filter(|r| r.a > 0)
                .map(|r| {
                    format!(
                        "{}: a={} e={} f={}",
                        ledger.simples()[r.simple].label(),
                        r.a,
                        r.e,
                        r.f
                    )
                })
                .collect();
            s.row(format!("degree {}", d), rows.join("; "));
        }
        let emb = embedding_space(&ledger, &ledger.degrees());
        s.row("embedding", format!("{}", emb));
    }

    Ok(report)
}
