//! Command-line front end.
//!
//! Exit codes: 0 success or pass, 1 negative membership or failed
//! verification, 2 parse or usage error, 3 engine error.

use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::groebner::{buchberger, GroebnerBasis, Ideal};
use crate::parser::{parse_polynomial, RingFile};
use crate::poly::{Degree, Polynomial, Rational, RingContext};
use crate::quotient::{rank, PointNormalization, QuotientRing};
use crate::spindomain::{self, builtin, Component, GraphType, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ENGINE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "spinring",
    version,
    about = "Exact graded-ring workbench for genus-2 spin moduli"
)]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BuiltinTag {
    Even,
    Odd,
}

impl From<BuiltinTag> for Component {
    fn from(t: BuiltinTag) -> Self {
        match t {
            BuiltinTag::Even => Component::Even,
            BuiltinTag::Odd => Component::Odd,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ComponentArg {
    Even,
    Odd,
    All,
}

#[derive(Debug, Args)]
struct Source {
    /// Ring file to load
    file: Option<String>,
    /// Use a built-in presentation instead of a file
    #[arg(long, value_enum)]
    builtin: Option<BuiltinTag>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the reduced Gröbner basis
    Gb {
        #[command(flatten)]
        source: Source,
    },
    /// Normal form of an expression
    Nf {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        expr: String,
    },
    /// Ideal membership test
    Member {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        expr: String,
    },
    /// Graded dimensions of the quotient
    Hilbert {
        #[command(flatten)]
        source: Source,
    },
    /// Integral of a top-degree class
    Integrate {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        expr: String,
        /// Point normalization "WITNESS=VALUE"
        #[arg(long)]
        point: Option<String>,
    },
    /// Multiplication matrix of a class and its rank
    Lefschetz {
        #[command(flatten)]
        source: Source,
        #[arg(long = "class")]
        class: String,
        #[arg(long = "from-degree")]
        from_degree: u32,
    },
    /// Run the verification suite
    Verify {
        #[arg(long, value_enum, default_value_t = ComponentArg::All)]
        component: ComponentArg,
    },
    /// List the stratum catalog
    Strata {
        #[arg(long)]
        graph: Option<String>,
        #[arg(long, value_enum)]
        component: Option<BuiltinTag>,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn with_code(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        let line = message
            .to_string()
            .lines()
            .next()
            .unwrap_or("")
            .trim()
            .to_string();
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {line}\n"),
        }
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::UnknownGraphType(_) | Error::InvalidRing(_) => EXIT_USAGE,
        _ => EXIT_ENGINE,
    }
}

fn fail(e: Error) -> Outcome {
    Outcome::fail(error_code(&e), e)
}

struct Loaded {
    ctx: Arc<RingContext>,
    ideal: Ideal,
    component: Option<Component>,
}

fn load(source: &Source) -> Result<Loaded, Outcome> {
    match (&source.file, source.builtin) {
        (Some(_), Some(_)) => Err(Outcome::fail(
            EXIT_USAGE,
            "give either a ring file or --builtin, not both",
        )),
        (None, None) => Err(Outcome::fail(
            EXIT_USAGE,
            "no input: give a ring file or --builtin even|odd",
        )),
        (None, Some(tag)) => {
            let p = builtin(tag.into());
            Ok(Loaded {
                ctx: p.context().clone(),
                ideal: p.ideal(),
                component: Some(tag.into()),
            })
        }
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Outcome::fail(EXIT_USAGE, format!("cannot read {path}: {e}")))?;
            let file = RingFile::parse(&text)
                .map_err(|e| Outcome::fail(EXIT_USAGE, format!("{path}: {e}")))?;
            let ideal = file.ideal();
            Ok(Loaded {
                ctx: file.context,
                ideal,
                component: None,
            })
        }
    }
}

fn groebner(l: &Loaded) -> Result<GroebnerBasis, Outcome> {
    if l.ideal.generators().is_empty() {
        return Err(fail(Error::EmptyIdeal));
    }
    buchberger(&l.ideal).map_err(fail)
}

fn quotient(l: &Loaded) -> Result<QuotientRing, Outcome> {
    QuotientRing::build(groebner(l)?).map_err(fail)
}

fn expr(text: &str, ctx: &Arc<RingContext>) -> Result<Polynomial, Outcome> {
    parse_polynomial(text, ctx).map_err(|e| fail(e.into()))
}

fn parse_point(arg: &str, ctx: &Arc<RingContext>) -> Result<(Polynomial, Rational), Outcome> {
    let Some((w, v)) = arg.split_once('=') else {
        return Err(Outcome::fail(EXIT_USAGE, "--point expects WITNESS=VALUE"));
    };
    let witness = expr(w.trim(), ctx)?;
    let value: Rational = v.trim().parse().map_err(|_| {
        Outcome::fail(
            EXIT_USAGE,
            format!("--point value {:?} is not a rational number", v.trim()),
        )
    })?;
    Ok((witness, value))
}

fn grading_note() -> &'static str {
    "# grading: ring degree k = H^{2k}"
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(e.to_string()),
                _ => {
                    let rendered = e.to_string();
                    let first = rendered.lines().next().unwrap_or("usage error");
                    Outcome::fail(EXIT_USAGE, first.trim_start_matches("error: "))
                }
            };
        }
    };
    match execute(&cli) {
        Ok(o) | Err(o) => o,
    }
}

fn execute(cli: &Cli) -> Result<Outcome, Outcome> {
    let json_out = cli.format == Format::Json;
    match &cli.command {
        Command::Gb { source } => {
            let l = load(source)?;
            let gb = groebner(&l)?;
            if json_out {
                let elems: Vec<String> = gb.elements().iter().map(ToString::to_string).collect();
                let v = json!({
                    "schema_version": SCHEMA_VERSION,
                    "vars": l.ctx.names(),
                    "order": l.ctx.order().keyword(),
                    "basis": elems,
                });
                return Ok(Outcome::ok(format!(
                    "{}\n",
                    serde_json::to_string_pretty(&v).unwrap()
                )));
            }
            let mut s = String::new();
            for g in gb.elements() {
                let _ = writeln!(s, "{g}");
            }
            Ok(Outcome::ok(s))
        }
        Command::Nf { source, expr: e } => {
            let l = load(source)?;
            let f = expr(e, &l.ctx)?;
            let nf = groebner(&l)?.reduce(&f);
            if json_out {
                let v = json!({ "schema_version": SCHEMA_VERSION, "expr": f.to_string(), "normal_form": nf.to_string() });
                return Ok(Outcome::ok(format!(
                    "{}\n",
                    serde_json::to_string_pretty(&v).unwrap()
                )));
            }
            Ok(Outcome::ok(format!("{nf}\n")))
        }
        Command::Member { source, expr: e } => {
            let l = load(source)?;
            let f = expr(e, &l.ctx)?;
            let member =
                f.is_zero() || (!l.ideal.generators().is_empty() && groebner(&l)?.contains(&f));
            let code = if member { EXIT_OK } else { EXIT_NEGATIVE };
            if json_out {
                let v = json!({ "schema_version": SCHEMA_VERSION, "expr": f.to_string(), "member": member });
                return Ok(Outcome::with_code(
                    code,
                    format!("{}\n", serde_json::to_string_pretty(&v).unwrap()),
                ));
            }
            Ok(Outcome::with_code(
                code,
                if member {
                    "yes\n".into()
                } else {
                    "no\n".into()
                },
            ))
        }
        Command::Hilbert { source } => {
            let l = load(source)?;
            let q = quotient(&l)?;
            let h = q.hilbert_function();
            if json_out {
                let v = json!({ "schema_version": SCHEMA_VERSION, "hilbert": h, "dimension": q.dimension() });
                return Ok(Outcome::ok(format!(
                    "{}\n",
                    serde_json::to_string_pretty(&v).unwrap()
                )));
            }
            let line: Vec<String> = h.iter().map(usize::to_string).collect();
            Ok(Outcome::ok(format!("{}\n", line.join(" "))))
        }
        Command::Integrate {
            source,
            expr: e,
            point,
        } => {
            let l = load(source)?;
            let q = quotient(&l)?;
            let (witness, value) = match (point, l.component) {
                (Some(arg), _) => parse_point(arg, &l.ctx)?,
                (None, Some(c)) => {
                    let p = builtin(c);
                    (p.point_witness.clone(), p.point_value.clone())
                }
                (None, None) => {
                    return Err(Outcome::fail(
                        EXIT_USAGE,
                        "integrate on a ring file needs --point WITNESS=VALUE",
                    ))
                }
            };
            let norm = PointNormalization::new(&q, witness, value).map_err(fail)?;
            let f = expr(e, &l.ctx)?;
            let v = q.integrate(&f, &norm).map_err(fail)?;
            if json_out {
                let j = json!({
                    "schema_version": SCHEMA_VERSION,
                    "expr": f.to_string(),
                    "witness": norm.witness().to_string(),
                    "witness_value": norm.value().to_string(),
                    "integral": v.to_string(),
                });
                return Ok(Outcome::ok(format!(
                    "{}\n",
                    serde_json::to_string_pretty(&j).unwrap()
                )));
            }
            Ok(Outcome::ok(format!("{v}\n")))
        }
        Command::Lefschetz {
            source,
            class,
            from_degree,
        } => {
            let l = load(source)?;
            let q = quotient(&l)?;
            let c = expr(class, &l.ctx)?;
            let m = q.multiplication_matrix(&c, *from_degree).map_err(fail)?;
            let r = rank(&m);
            let shift = match c.weighted_degree() {
                Degree::Homogeneous(d) => d,
                _ => 0,
            };
            let rows: Vec<Vec<String>> = m
                .iter()
                .map(|row| row.iter().map(ToString::to_string).collect())
                .collect();
            let fmt_basis = |d: u32| -> Vec<String> {
                q.basis(d)
                    .iter()
                    .map(|b| l.ctx.format_monomial(b))
                    .collect()
            };
            if json_out {
                let j = json!({
                    "schema_version": SCHEMA_VERSION,
                    "class": c.to_string(),
                    "from_degree": from_degree,
                    "to_degree": from_degree + shift,
                    "source_basis": fmt_basis(*from_degree),
                    "target_basis": fmt_basis(from_degree + shift),
                    "matrix": rows,
                    "rank": r,
                });
                return Ok(Outcome::ok(format!(
                    "{}\n",
                    serde_json::to_string_pretty(&j).unwrap()
                )));
            }
            let mut s = String::new();
            let _ = writeln!(s, "{}", grading_note());
            let _ = writeln!(s, "# columns: {}", fmt_basis(*from_degree).join(" "));
            let _ = writeln!(s, "# rows: {}", fmt_basis(from_degree + shift).join(" "));
            for row in &rows {
                let _ = writeln!(s, "[{}]", row.join(" "));
            }
            let _ = writeln!(s, "rank {r}");
            Ok(Outcome::ok(s))
        }
        Command::Verify { component } => {
            let report = match component {
                ComponentArg::Even => spindomain::verify(Component::Even),
                ComponentArg::Odd => spindomain::verify(Component::Odd),
                ComponentArg::All => spindomain::verify_all(),
            };
            let code = if report.passed() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            };
            let body = if json_out {
                report.to_json()
            } else {
                report.to_string()
            };
            Ok(Outcome::with_code(code, format!("{body}\n")))
        }
        Command::Strata { graph, component } => {
            let graph = match graph {
                Some(g) => Some(g.parse::<GraphType>().map_err(fail)?),
                None => None,
            };
            let list = spindomain::strata(graph, component.map(Into::into));
            if json_out {
                let j = json!({ "schema_version": SCHEMA_VERSION, "strata": list });
                return Ok(Outcome::ok(format!(
                    "{}\n",
                    serde_json::to_string_pretty(&j).unwrap()
                )));
            }
            let mut s = String::new();
            for st in &list {
                let flag = if st.identification_open {
                    "  [identification with its A/B partner open]"
                } else {
                    ""
                };
                let _ = writeln!(
                    s,
                    "{}  {:<4} {:<4} dim {}  {}{flag}",
                    st.graph,
                    st.name,
                    st.component.name(),
                    st.dimension,
                    st.description
                );
            }
            let _ = writeln!(s, "{} strata", list.len());
            Ok(Outcome::ok(s))
        }
    }
}
