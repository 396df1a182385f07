use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ydhopf::examples::{
    build_adjoint, build_en, build_group_rb_linearization, build_suzuki, build_sweedler, build_trivial,
    conjugation_inversion_rb, cyclic_group, group_algebra, restricted_enveloping, sweedler_hopf, symmetric_group_s3,
    trivial_action_rb,
};
use ydhopf::format::{Structure, StructureFile};
use ydhopf::report::CheckReport;
use ydhopf::suite::{derive, full_suite, parse_axioms, restrict, Target};
use ydhopf::ydpost::{extract_post_lie, is_pre_hopf};
use ydhopf::{FieldSpec, Scalar};

#[derive(Parser)]
#[command(name = "ydhopf", version, about = "Exact checks for post-Hopf, brace, matched-pair and Rota-Baxter structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Machine,
}

#[derive(Args)]
struct CheckArgs {
    path: PathBuf,
    /// Require the file to declare this kind.
    #[arg(long)]
    kind: Option<String>,
    /// Require the file to be over this field.
    #[arg(long)]
    field: Option<FieldSpec>,
    /// Comma-separated axiom ids to keep.
    #[arg(long)]
    axioms: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    report: ReportFormat,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full suite for the file's kind.
    Check(CheckArgs),
    /// Like `check`, with a summary of derived properties before the report.
    Report(CheckArgs),
    /// Apply a construction and write the resulting structure file.
    Derive {
        path: PathBuf,
        /// subadjacent, brace, posthopf, matchedpair, rb_l, post_m, post_r, sk or postlie
        target: Target,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a built-in example.
    Example {
        #[command(subcommand)]
        name: ExampleName,
        #[arg(long, global = true)]
        field: Option<FieldSpec>,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ExampleName {
    /// Sweedler transmutation with parameter k.
    Sweedler {
        #[arg(long, default_value = "1")]
        k: String,
    },
    /// E(n) with a symmetric matrix written as rows "a,b;c,d".
    En {
        #[arg(long)]
        n: usize,
        #[arg(long = "A")]
        a: String,
    },
    Suzuki {
        #[arg(long, default_value = "1")]
        alpha: String,
        #[arg(long, default_value = "1")]
        beta: String,
    },
    /// Adjoint action of a Hopf algebra read from a file.
    Adjoint {
        #[arg(long)]
        from: PathBuf,
    },
    Trivial,
    /// S3 with R = inversion relative to conjugation, linearized.
    S3,
    /// Sweedler's four-dimensional Hopf algebra.
    H4,
    /// Group algebra of C<n> or S3.
    Group {
        #[arg(long)]
        name: String,
    },
    /// Restricted enveloping algebra of [s,t] = t in characteristic p.
    Restricted {
        #[arg(long, default_value_t = 3)]
        p: u64,
    },
    /// Group RB operator on C<n> or S3 with trivial action and R = id, or S3 inversion.
    GroupRb {
        #[arg(long)]
        name: String,
    },
}

/// Exit 2: the input could not be used.
struct InputError(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.into())
    }
}

type CliResult = Result<ExitCode, InputError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(a) => check(&a, false),
        Command::Report(a) => check(&a, true),
        Command::Derive { path, target, out } => derive_cmd(&path, target, out.as_deref()),
        Command::Example { name, field, out } => example(name, field.unwrap_or(FieldSpec::RATIONALS), out.as_deref()),
    };
    match result {
        Ok(code) => code,
        Err(InputError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<StructureFile, InputError> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(StructureFile::parse(&text).with_context(|| format!("in {}", path.display()))?)
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), InputError> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn exit_for(report: &CheckReport) -> ExitCode {
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn check(a: &CheckArgs, summary: bool) -> CliResult {
    let file = load(&a.path)?;
    if let Some(k) = &a.kind {
        if k != file.structure.kind() {
            return Err(anyhow!("kind mismatch: expected {k}, file declares {}", file.structure.kind()).into());
        }
    }
    if let Some(f) = a.field {
        if f != file.field {
            return Err(anyhow!("field mismatch: expected {f}, file declares {}", file.field).into());
        }
    }
    let ids = a.axioms.as_deref().map(parse_axioms).transpose()?;
    let mut report = full_suite(&file.structure);
    if let Some(ids) = &ids {
        report = restrict(report, ids);
    }
    let mut text = String::new();
    if summary {
        text.push_str(&describe(&file));
    }
    text.push_str(&match a.report {
        ReportFormat::Text => report.to_text(),
        ReportFormat::Machine => report.to_machine(),
    });
    write_out(a.out.as_deref(), &text)?;
    Ok(exit_for(&report))
}

fn describe(file: &StructureFile) -> String {
    let mut lines = vec![format!("kind {}", file.structure.kind()), format!("field {}", file.field)];
    for (k, v) in &file.params {
        lines.push(format!("param {k} {v}"));
    }
    match &file.structure {
        Structure::Algebra(a) => lines.push(format!("dim {}", a.dim())),
        Structure::Hopf(h) => {
            lines.push(format!("dim {}", h.dim()));
            lines.push(format!("cocommutative {}", h.coalgebra.is_cocommutative()));
        }
        Structure::YdPost(s) => {
            lines.push(format!("dim {}", s.dim()));
            lines.push(format!("beta {}", if s.beta.is_some() { "supplied" } else { "solved" }));
            if let Ok(b) = is_pre_hopf(s) {
                lines.push(format!("braided-commutative {b}"));
            }
            if let Ok(p) = extract_post_lie(s) {
                lines.push(format!("primitives {}", p.dim));
            }
        }
        Structure::YdBrace(b) => lines.push(format!("dim {}", b.dim())),
        Structure::MatchedPair(mp) => lines.push(format!("dim {}", mp.hopf.dim())),
        Structure::RelRb(r) => {
            lines.push(format!("dim H {} K {}", r.dim_h(), r.dim_k()));
            if let Ok(inv) = r.r_inverse() {
                lines.push(format!("invertible {}", inv.is_some()));
            }
        }
        Structure::GroupRb(g) => lines.push(format!("order G {} H {}", g.g_mul.len(), g.h_mul.len())),
        Structure::LieRb(l) => lines.push(format!("dim g {} h {}", l.g_bracket.len(), l.h_bracket.len())),
        Structure::PostLie(p) => lines.push(format!("dim {}", p.dim)),
    }
    let mut s = lines.join("\n");
    s.push_str("\n\n");
    s
}

fn derive_cmd(path: &Path, target: Target, out: Option<&Path>) -> CliResult {
    let file = load(path)?;
    let report = full_suite(&file.structure);
    if !report.passed() {
        eprint!("{}", report.to_text());
        eprintln!("error: source structure fails its suite");
        return Ok(ExitCode::from(1));
    }
    let derived = derive(&file, target)?;
    write_out(out, &derived.emit())?;
    Ok(ExitCode::SUCCESS)
}

fn scalar(text: &str, field: FieldSpec) -> Result<Scalar, InputError> {
    Ok(Scalar::parse(text.trim(), field)?)
}

fn matrix(text: &str, field: FieldSpec) -> Result<Vec<Vec<Scalar>>, InputError> {
    text.split(';').map(|row| row.split(',').map(|c| scalar(c, field)).collect()).collect()
}

fn group_table(name: &str) -> Result<(Vec<Vec<usize>>, Vec<String>), InputError> {
    if name.eq_ignore_ascii_case("s3") {
        return Ok(symmetric_group_s3());
    }
    let n = name
        .strip_prefix(['c', 'C'])
        .and_then(|n| n.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .ok_or_else(|| anyhow!("unknown group `{name}`, expected C<n> or S3"))?;
    Ok(cyclic_group(n))
}

fn example(name: ExampleName, field: FieldSpec, out: Option<&Path>) -> CliResult {
    let structure = match name {
        ExampleName::Sweedler { k } => Structure::YdPost(build_sweedler(scalar(&k, field)?, field)?),
        ExampleName::En { n, a } => {
            let a = matrix(&a, field)?;
            if a.len() != n {
                return Err(anyhow!("matrix has {} rows, expected {n}", a.len()).into());
            }
            Structure::YdPost(build_en(n, &a, field)?)
        }
        ExampleName::Suzuki { alpha, beta } => {
            Structure::YdPost(build_suzuki(scalar(&alpha, field)?, scalar(&beta, field)?, field)?)
        }
        ExampleName::Adjoint { from } => {
            let src = load(&from)?;
            let Structure::Hopf(h) = &src.structure else {
                return Err(anyhow!("{} is a {} file, expected hopf", from.display(), src.structure.kind()).into());
            };
            Structure::YdPost(build_adjoint(h)?)
        }
        ExampleName::Trivial => Structure::YdPost(build_trivial(field)?),
        ExampleName::S3 => {
            let (t, l) = symmetric_group_s3();
            Structure::YdPost(build_group_rb_linearization(&conjugation_inversion_rb(&t, &l), field)?)
        }
        ExampleName::H4 => Structure::Hopf(sweedler_hopf(field)),
        ExampleName::Group { name } => {
            let (t, l) = group_table(&name)?;
            Structure::Hopf(group_algebra(&t, l, field)?)
        }
        ExampleName::Restricted { p } => {
            let h = restricted_enveloping(p)?;
            let f = h.field();
            return finish_example(StructureFile::new(f, Structure::Hopf(h)), out);
        }
        ExampleName::GroupRb { name } => {
            let (t, l) = group_table(&name)?;
            let g = if name.eq_ignore_ascii_case("s3") { conjugation_inversion_rb(&t, &l) } else { trivial_action_rb(&t, &l) };
            Structure::GroupRb(g)
        }
    };
    finish_example(StructureFile::new(field, structure), out)
}

fn finish_example(file: StructureFile, out: Option<&Path>) -> CliResult {
    let report = full_suite(&file.structure);
    if !report.passed() {
        eprint!("{}", report.to_text());
        return Ok(ExitCode::from(1));
    }
    write_out(out, &file.emit())?;
    Ok(ExitCode::SUCCESS)
}
