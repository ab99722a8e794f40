//! Case-study pipelines wiring the library together, with structured
//! pass/fail reports.

pub mod clifford;
pub mod decompose;
pub mod heisenberg;
pub mod quantum;
pub mod report;
pub mod snp1;

pub use decompose::cmd_decompose;
pub use report::{report_diff, DiffEntry, Provenance, Report, Section, Verdict};

use crate::error::Error;
use crate::exact::CycScalar;
use crate::symmetry::Character;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Study {
    Snp1,
    Clifford,
    Quantum,
    HeisenbergTwist,
}

impl std::str::FromStr for Study {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "snp1" => Ok(Study::Snp1),
            "clifford" => Ok(Study::Clifford),
            "quantum" => Ok(Study::Quantum),
            "heisenberg_twist" => Ok(Study::HeisenbergTwist),
            other => Err(Error::Schema {
                context: "study".into(),
                message: format!("unknown study {:?}", other),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stratum {
    Skew,
    Differential,
    FullPlane,
}

impl std::str::FromStr for Stratum {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "skew" => Ok(Stratum::Skew),
            "differential" => Ok(Stratum::Differential),
            "full_plane" => Ok(Stratum::FullPlane),
            other => Err(Error::Schema {
                context: "stratum".into(),
                message: format!("unknown stratum {:?}", other),
            }),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CaseStudyConfig {
    pub study: Study,
    pub n: usize,
    pub stratum: Stratum,
    pub params: Vec<CycScalar>,
    pub cutoff: usize,
    pub samples: usize,
}

impl Default for CaseStudyConfig {
    fn default() -> Self {
        CaseStudyConfig {
            study: Study::Quantum,
            n: 2,
            stratum: Stratum::Differential,
            params: Vec::new(),
            cutoff: crate::algebra::DEFAULT_CUTOFF,
            samples: 50,
        }
    }
}

/// Run a case study end to end and produce its report.
pub fn cmd_casestudy(config: &CaseStudyConfig) -> Result<Report> {
    assert!(config.cutoff >= 2, "cutoff must be at least 2");
    match config.study {
        Study::Quantum => quantum::run_quantum(&config.params, config.cutoff, config.samples),
        Study::Clifford => clifford::run_clifford(&config.params, config.cutoff, config.samples),
        Study::HeisenbergTwist => heisenberg::run_heisenberg_twist(config.cutoff),
        Study::Snp1 => snp1::run_snp1(
            config.n,
            config.stratum,
            &config.params,
            config.cutoff,
            config.samples,
        ),
    }
}

/// Human-readable character rendering for reports.
pub fn character_string(chi: &Character) -> String {
    match chi {
        Character::Classes { values } => {
            let parts: Vec<String> = values.iter().map(|v| format!("{}", v)).collect();
            format!("[{}]", parts.join(", "))
        }
        Character::Weights { multiset } => {
            if multiset.is_empty() {
                return "0".into();
            }
            let parts: Vec<String> = multiset
                .iter()
                .map(|(w, count)| {
                    let ws: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                    if *count == 1 {
                        format!("chi_({})", ws.join(","))
                    } else {
                        format!("{}*chi_({})", count, ws.join(","))
                    }
                })
                .collect();
            parts.join(" + ")
        }
    }
}
