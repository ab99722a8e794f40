//! Twisting the polynomial plane by an order-8 Heisenberg symmetry: the
//! twist by the diagonal generator has the same Hilbert function but a
//! different degree-2 relation character, so the two algebras are not
//! isomorphic as graded modules over the group.

use crate::algebra::{hilbert_function, polynomial_presentation, span_character};
use crate::deform::twist;
use crate::symmetry::heisenberg;
use crate::Result;

use super::report::{Provenance, Report};
use super::character_string;

pub fn run_heisenberg_twist(cutoff: usize) -> Result<Report> {
    let mut report = Report::new("heisenberg_twist");
    report.meta("group", "Heisenberg group of order 8");
    report.meta("cutoff", cutoff.to_string());

    let built = heisenberg(2)?;
    report.verdict_eq("group_order", 8usize, built.group.order(), Provenance::Literature);

    let v = built.natural.clone();
    let p = polynomial_presentation(vec!["x".into(), "y".into()], Some(v.clone()), cutoff)?;

    let character_of = |label: &str| -> crate::symmetry::Character {
        built
            .irreps
            .iter()
            .find(|r| r.label() == label)
            .expect("irrep label present")
            .character()
    };

    let rep = p.symmetry().unwrap();
    let base_char = span_character(rep, &p.relation_span(2), 2);
    {
        let s = report.section("relation_characters");
        s.row("base (xy - yx)", character_string(&base_char));
    }
    let chi11 = character_of("chi_1,1");
    report.verdict(
        "base_relation_character_is_chi_1_1",
        "chi_1,1",
        character_string(&base_char),
        Provenance::Literature,
        base_char == chi11,
    );

    // twist by the diagonal generator e2 = diag(1, -1)
    let e2 = v.as_matrix().unwrap().generator_images()[1].clone();
    let twisted = twist(&p, &e2)?;
    let twisted_char = span_character(
        twisted.symmetry().unwrap(),
        &twisted.relation_span(2),
        2,
    );
    {
        let s = report.sections.last_mut().unwrap();
        s.row("twist by e2 (xy + yx)", character_string(&twisted_char));
    }
    let chi01 = character_of("chi_0,1");
    report.verdict(
        "twisted_relation_character_is_chi_0_1",
        "chi_0,1",
        character_string(&twisted_char),
        Provenance::Literature,
        twisted_char == chi01,
    );

    let h_base = hilbert_function(&p, cutoff)?;
    let h_twist = hilbert_function(&twisted, cutoff)?;
    report.verdict_eq(
        "twist_preserves_hilbert",
        format!("{:?}", h_base),
        format!("{:?}", h_twist),
        Provenance::Definition,
    );

    let not_isomorphic = base_char != twisted_char;
    report.verdict(
        "twist_changes_graded_module_structure",
        "degree-2 relation characters differ",
        if not_isomorphic { "differ" } else { "equal" },
        Provenance::Literature,
        not_isomorphic,
    );

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heisenberg_twist_study_passes() {
        let report = run_heisenberg_twist(4).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }
}
