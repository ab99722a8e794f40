//! Command-line interface: run case studies, decompose representations,
//! compute Hilbert functions and point schemes, and diff reports.
//!
//! Group and representation arguments accept either a JSON file path or a
//! builtin spec: `sym:N` (symmetric group with its irreps), `perm:N`
//! (permutation representation only), `heisenberg:N`, `dihedral:N`.
//! Reports are deterministic; the exit code is nonzero iff any verdict
//! fails.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use gdeform::algebra::{degree_report, ideal_tower, is_g_stable};
use gdeform::casestudy::{
    character_string, cmd_casestudy, cmd_decompose, report_diff, CaseStudyConfig, Report, Stratum,
    Study,
};
use gdeform::deform::{build_ledger, canonical_point, embedding_space};
use gdeform::exact::CycScalar;
use gdeform::io;
use gdeform::pointscheme::{multilinearize, point_variety};
use gdeform::symmetry::{builtin_reps, BuiltinFamily, FiniteGroupData, Representation};

#[derive(Parser)]
#[command(
    name = "gdeform",
    version,
    about = "exact equivariant deformations of graded algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Output format: text or json.
    #[arg(long, default_value = "text")]
    format: String,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity table of V^{⊗k}, Λ²V, Sym²V and the polynomial ledger.
    Decompose {
        /// Group: JSON path or builtin spec (sym:N, heisenberg:N, dihedral:N).
        #[arg(long)]
        group: String,
        /// Representation: JSON path, or "natural" for the builtin's own.
        #[arg(long, default_value = "natural")]
        rep: String,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Ledger, embedding space, and canonical point of a presentation.
    Deform {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "natural")]
        rep: String,
        /// Presentation JSON (symmetry attached from --group/--rep).
        #[arg(long)]
        presentation: PathBuf,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Hilbert function and per-degree reports of a presentation.
    Hilbert {
        #[arg(long)]
        presentation: PathBuf,
        /// Optional symmetry for graded characters.
        #[arg(long)]
        group: Option<String>,
        #[arg(long, default_value = "natural")]
        rep: String,
        #[arg(long)]
        cutoff: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Point-scheme equations of a quadratic presentation.
    Pointscheme {
        #[arg(long)]
        presentation: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a built-in case study end to end.
    Casestudy {
        /// snp1 | clifford | quantum | heisenberg_twist
        #[arg(long)]
        study: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// skew | differential | full_plane
        #[arg(long, default_value = "differential")]
        stratum: String,
        /// Comma-separated exact scalars ("w" = ζ_m at --conductor).
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, default_value_t = 5)]
        cutoff: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Conductor used to parse --params (3 covers the studies here).
        #[arg(long, default_value_t = 3)]
        conductor: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Field-wise diff of two report files. Exit code 1 when they differ.
    Diff { left: PathBuf, right: PathBuf },
}

struct GroupContext {
    group: Arc<FiniteGroupData>,
    natural: Representation,
    irreps: Vec<Representation>,
}

fn load_builtin(spec: &str) -> gdeform::Result<GroupContext> {
    let (family, param) = spec.split_once(':').ok_or_else(|| gdeform::Error::Schema {
        context: "group spec".into(),
        message: format!("expected family:N, got {:?}", spec),
    })?;
    let parse = |s: &str| -> gdeform::Result<usize> {
        s.parse().map_err(|_| gdeform::Error::Schema {
            context: "group spec".into(),
            message: format!("bad parameter {:?}", s),
        })
    };
    let family = match family {
        "sym" => BuiltinFamily::SymmetricGroupIrreps(parse(param)?),
        "perm" => BuiltinFamily::PermutationRep(parse(param)?),
        "heisenberg" => BuiltinFamily::Heisenberg(parse(param)? as u64),
        "dihedral" => BuiltinFamily::Dihedral(parse(param)? as u64),
        other => {
            return Err(gdeform::Error::Schema {
                context: "group spec".into(),
                message: format!("unknown builtin family {:?}", other),
            })
        }
    };
    let built = builtin_reps(family)?;
    Ok(GroupContext {
        group: built.group,
        natural: built.natural,
        irreps: built.irreps,
    })
}

fn load_group_and_rep(group_spec: &str, rep_spec: &str) -> gdeform::Result<GroupContext> {
    if !group_spec.contains(':') {
        // file path: the rep must also come from a file
        let group = io::load_group(&PathBuf::from(group_spec))?;
        if rep_spec == "natural" {
            return Err(gdeform::Error::Schema {
                context: "rep spec".into(),
                message: "file-based groups need an explicit --rep file".into(),
            });
        }
        let natural = io::load_rep(&PathBuf::from(rep_spec), Some(&group))?;
        return Ok(GroupContext {
            group,
            natural,
            irreps: Vec::new(),
        });
    }
    let mut ctx = load_builtin(group_spec)?;
    if rep_spec != "natural" {
        ctx.natural = io::load_rep(&PathBuf::from(rep_spec), Some(&ctx.group))?;
    }
    Ok(ctx)
}

fn parse_params(text: &str, conductor: u64) -> gdeform::Result<Vec<CycScalar>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|part| io::parse_scalar(part.trim(), conductor))
        .collect()
}

fn emit(report: &Report, output: &OutputArgs) -> gdeform::Result<()> {
    let body = match output.format.as_str() {
        "json" => report.to_json(),
        _ => report.render_text(),
    };
    match &output.out {
        Some(path) => std::fs::write(path, body)?,
        None => print!("{}", body),
    }
    Ok(())
}

fn run() -> gdeform::Result<bool> {
    let cli = Cli::parse();
    match cli.command {
        Command::Decompose {
            group,
            rep,
            degree,
            output,
        } => {
            let ctx = load_group_and_rep(&group, &rep)?;
            let report = cmd_decompose(&ctx.natural, &ctx.irreps, degree)?;
            emit(&report, &output)?;
            Ok(report.passed())
        }
        Command::Deform {
            group,
            rep,
            presentation,
            degree,
            output,
        } => {
            let ctx = load_group_and_rep(&group, &rep)?;
            let p = io::load_presentation(&presentation, Some(ctx.natural.clone()))?;
            let ledger = build_ledger(&p, &ctx.irreps, degree.max(2))?;
            let mut report = Report::new("deform");
            report.meta("degree", degree.to_string());
            let emb = embedding_space(&ledger, &ledger.degrees());
            {
                let s = report.section("embedding_space");
                s.row("factors", format!("{}", emb));
            }
            let point = canonical_point(&ledger, &p)?;
            {
                let s = report.section("canonical_point");
                for (d, blocks) in &point.blocks {
                    for b in blocks {
                        s.row(format!("degree {} {}", d, b.label), format!("{:?}", b));
                        let pluecker: Vec<String> =
                            b.pluecker().iter().map(|c| format!("{}", c)).collect();
                        s.row(
                            format!("degree {} {} pluecker", d, b.label),
                            format!("[{}]", pluecker.join(" : ")),
                        );
                    }
                }
            }
            let st = is_g_stable(&p)?;
            report.verdict(
                "presentation_is_stable",
                "stable",
                if st.stable { "stable" } else { "unstable" },
                gdeform::casestudy::Provenance::Definition,
                st.stable,
            );
            emit(&report, &output)?;
            Ok(report.passed())
        }
        Command::Hilbert {
            presentation,
            group,
            rep,
            cutoff,
            output,
        } => {
            let symmetry = match group {
                Some(g) => Some(load_group_and_rep(&g, &rep)?.natural),
                None => None,
            };
            let p = io::load_presentation(&presentation, symmetry)?;
            let max = cutoff.unwrap_or_else(|| p.cutoff());
            let tower = ideal_tower(&p, max)?;
            let mut report = Report::new("hilbert");
            report.meta("cutoff", max.to_string());
            let h = gdeform::algebra::hilbert_from_tower(&p, &tower);
            {
                let s = report.section("hilbert");
                s.row("dims", format!("{:?}", h));
            }
            if p.symmetry().is_some() {
                let s = report.section("characters");
                for k in 0..=max {
                    let dr = degree_report(&p, &tower, k)?;
                    if let Some(chi) = dr.character {
                        s.row(format!("degree {}", k), character_string(&chi));
                    }
                }
            }
            emit(&report, &output)?;
            Ok(true)
        }
        Command::Pointscheme {
            presentation,
            output,
        } => {
            let p = io::load_presentation(&presentation, None)?;
            let m = multilinearize(&p)?;
            let v = point_variety(&m)?;
            let mut report = Report::new("pointscheme");
            report.meta("relations", m.rows().to_string());
            report.meta("generators", m.cols().to_string());
            {
                let s = report.section("equations");
                if v.whole_space {
                    s.row("variety", format!("all of P^{}", m.cols() - 1));
                } else {
                    for (i, eq) in v.equations.iter().enumerate() {
                        s.row(format!("eq {}", i), format!("{}", eq));
                    }
                }
            }
            emit(&report, &output)?;
            Ok(true)
        }
        Command::Casestudy {
            study,
            n,
            stratum,
            params,
            cutoff,
            samples,
            conductor,
            output,
        } => {
            let config = CaseStudyConfig {
                study: Study::from_str(&study)?,
                n,
                stratum: Stratum::from_str(&stratum)?,
                params: parse_params(&params, conductor)?,
                cutoff,
                samples,
            };
            let report = cmd_casestudy(&config)?;
            emit(&report, &output)?;
            Ok(report.passed())
        }
        Command::Diff { left, right } => {
            let a: Report = serde_json::from_str(&std::fs::read_to_string(left)?)?;
            let b: Report = serde_json::from_str(&std::fs::read_to_string(right)?)?;
            let entries = report_diff(&a, &b)?;
            for e in &entries {
                println!("{}: {} | {}", e.path, e.left, e.right);
            }
            if entries.is_empty() {
                println!("reports are identical");
            }
            Ok(entries.is_empty())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
