//! Command-line interface.
//!
//! Exit codes: 0 success, 2 parse or validation error, 3 capacity error,
//! 4 oracle/engine mismatch.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};
use linkoid_quiver::torus::{compare_with_engine, OracleReport, QuiverShape};
use linkoid_quiver::{
    add_r1_kink, build_quiver, counting_invariant, counting_matrix, dihedral, enumerate_colorings,
    in_degree_polynomial, in_degree_polynomial_matrix, torus_linkoid, trivial_quandle, validate_quandle,
    Chirality, LinkoidDiagram, PointedQuandle, Quandle,
};

use crate::formats::{
    parse_basepoints, parse_endos, parse_linkoid, parse_quandle, parse_quandle_table, serialize_linkoid,
    serialize_quandle,
};
use crate::render;
use crate::{Error, Result};

pub const EXIT_ORACLE_MISMATCH: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "linkoid", version, about = "Pointed quandle invariants of linkoid diagrams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a quandle table against the quandle axioms.
    ValidateQuandle {
        file: String,
    },
    /// Generate linkoid or quandle files.
    #[command(subcommand)]
    Gen(Gen),
    /// List all colorings as JSON.
    Colorings(Pointed),
    /// Number of colorings.
    Count(Pointed),
    /// Counting matrix of a 1-linkoid.
    CountMatrix(Unpointed),
    /// Coloring quiver as JSON or DOT.
    Quiver {
        #[command(flatten)]
        input: Pointed,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
        /// File listing endomorphism image arrays, one per line.
        #[arg(long)]
        endos: Option<String>,
    },
    /// In-degree quiver polynomial.
    IndegPoly {
        #[command(flatten)]
        input: Pointed,
        #[arg(long)]
        endos: Option<String>,
    },
    /// Full in-degree quiver polynomial matrix of a 1-linkoid.
    IndegMatrix(Unpointed),
    /// Compare closed-form predictions for T(p,2) over Z_n with the engine.
    Oracle {
        #[arg(short)]
        p: usize,
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        y: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum Gen {
    /// The T(p,2)-type 1-linkoid.
    Torus {
        #[arg(short)]
        p: usize,
        /// Add a Reidemeister I kink: ARC over_first|under_first.
        #[arg(long, num_args = 2, value_names = ["ARC", "CHIRALITY"])]
        kink: Option<Vec<String>>,
    },
    /// Dihedral quandle table of order N.
    Dihedral { n: usize },
    /// Trivial quandle table of order N.
    Trivial { n: usize },
}

#[derive(Debug, Args)]
pub struct Unpointed {
    /// Quandle file (`-` for stdin).
    #[arg(short = 'q', long = "quandle")]
    pub quandle: String,
    /// Linkoid file (`-` for stdin).
    #[arg(short = 'l', long = "linkoid")]
    pub linkoid: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct Pointed {
    #[arg(short = 'q', long = "quandle")]
    pub quandle: String,
    #[arg(short = 'l', long = "linkoid")]
    pub linkoid: String,
    /// Comma-separated basepoints, two per open component.
    #[arg(long)]
    pub base: String,
}

/// Reads files, with `-` meaning the provided stdin. Stdin is consumed once.
struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Inputs<'_> {
    fn read(&mut self, path: &str) -> Result<String> {
        if path == "-" {
            if self.stdin_used {
                return Err(Error::Usage("stdin can only be used for one input".into()));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|source| Error::Io { path: "<stdin>".into(), source })?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.into(), source })
        }
    }

    fn quandle(&mut self, path: &str) -> Result<Quandle> {
        parse_quandle(&self.read(path)?)
    }

    fn linkoid(&mut self, path: &str) -> Result<LinkoidDiagram> {
        parse_linkoid(&self.read(path)?)
    }

    fn pointed(&mut self, p: &Pointed) -> Result<(LinkoidDiagram, PointedQuandle)> {
        let q = self.quandle(&p.quandle)?;
        let d = self.linkoid(&p.linkoid)?;
        let pq = PointedQuandle::new(q, parse_basepoints(&p.base)?)?;
        Ok((d, pq))
    }
}

/// Parses `argv` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut inputs = Inputs { stdin, stdin_used: false };
    match execute(cli.command, &mut inputs) {
        Ok((text, code)) => {
            let _ = stdout.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, inputs: &mut Inputs<'_>) -> Result<(String, i32)> {
    let ok = |s: String| Ok((s, 0));
    match command {
        Command::ValidateQuandle { file } => {
            let table = parse_quandle_table(&inputs.read(&file)?)?;
            let report = validate_quandle(&table)?;
            if report.is_valid() {
                return ok("valid\n".into());
            }
            let mut out = format!("invalid: {} violation(s)\n", report.violations.len());
            for v in &report.violations {
                let names: &[&str] = match v.witness.len() {
                    3 => &["x", "y", "z"],
                    _ if v.axiom == linkoid_quiver::Axiom::RightInvertibility => &["y"],
                    _ => &["x"],
                };
                let parts: Vec<String> =
                    names.iter().zip(&v.witness).map(|(n, w)| format!("{n}={w}")).collect();
                out.push_str(&format!("{}: {}\n", v.axiom, parts.join(" ")));
            }
            Ok((out, 2))
        }
        Command::Gen(Gen::Torus { p, kink }) => {
            let mut d = torus_linkoid(p)?;
            if let Some(args) = kink {
                let arc: usize = args[0]
                    .parse()
                    .map_err(|_| Error::Usage(format!("invalid kink arc `{}`", args[0])))?;
                let chirality: Chirality = args[1].parse()?;
                d = add_r1_kink(&d, arc, chirality)?;
            }
            ok(serialize_linkoid(&d))
        }
        Command::Gen(Gen::Dihedral { n }) => ok(serialize_quandle(&dihedral(n)?)),
        Command::Gen(Gen::Trivial { n }) => ok(serialize_quandle(&trivial_quandle(n)?)),
        Command::Colorings(p) => {
            let (d, pq) = inputs.pointed(&p)?;
            ok(render::colorings_json(&enumerate_colorings(&d, &pq)?) + "\n")
        }
        Command::Count(p) => {
            let (d, pq) = inputs.pointed(&p)?;
            ok(format!("{}\n", counting_invariant(&d, &pq)?))
        }
        Command::CountMatrix(u) => {
            let q = inputs.quandle(&u.quandle)?;
            let d = inputs.linkoid(&u.linkoid)?;
            let m = counting_matrix(&d, &q)?;
            ok(if u.json { render::matrix_json(&m) + "\n" } else { render::matrix_grid(&m) })
        }
        Command::Quiver { input, dot, json: _, endos } => {
            let (d, pq) = inputs.pointed(&input)?;
            let subset = match endos {
                Some(path) => Some(parse_endos(&inputs.read(&path)?, pq.order())?),
                None => None,
            };
            let quiver = build_quiver(&d, &pq, subset.as_deref())?;
            if dot {
                let labels: Vec<String> = quiver
                    .colorings
                    .iter()
                    .map(|c| c.images.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
                    .collect();
                ok(render::to_dot(&quiver.graph, Some(&labels)))
            } else {
                ok(render::graph_json(&quiver.graph, &quiver.colorings) + "\n")
            }
        }
        Command::IndegPoly { input, endos } => {
            let (d, pq) = inputs.pointed(&input)?;
            let subset = match endos {
                Some(path) => Some(parse_endos(&inputs.read(&path)?, pq.order())?),
                None => None,
            };
            let quiver = build_quiver(&d, &pq, subset.as_deref())?;
            ok(format!("{}\n", in_degree_polynomial(&quiver.graph)))
        }
        Command::IndegMatrix(u) => {
            let q = inputs.quandle(&u.quandle)?;
            let d = inputs.linkoid(&u.linkoid)?;
            let m = in_degree_polynomial_matrix(&d, &q, None)?;
            ok(if u.json { render::polynomial_matrix_json(&m) + "\n" } else { render::polynomial_matrix_grid(&m) })
        }
        Command::Oracle { p, n, y } => {
            if p == 0 || n == 0 {
                return Err(Error::Usage("p and n must be at least 1".into()));
            }
            if y >= n {
                return Err(Error::Usage(format!("y must lie in 0..{n}")));
            }
            let report = compare_with_engine(p, n, y)?;
            Ok((oracle_text(&report), oracle_exit_code(&report)))
        }
    }
}

fn oracle_exit_code(report: &OracleReport) -> i32 {
    if report.agrees() {
        0
    } else {
        EXIT_ORACLE_MISMATCH
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "match"
    } else {
        "MISMATCH"
    }
}

fn oracle_text(r: &OracleReport) -> String {
    let t = r.prediction;
    let mut out = format!("p={} n={} y={} c={} d={}\n", t.p, t.n, t.y, t.c, t.d);
    let opt = |v: Option<String>| v.unwrap_or_else(|| "unspecified".into());
    out.push_str(&format!(
        "count: predicted {} engine {} {}\n",
        opt(r.count.predicted.map(|c| c.to_string())),
        r.count.engine,
        verdict(r.count.agrees())
    ));
    if let Some(m) = &r.mismatched_count {
        out.push_str(&format!(
            "count at ({},{}): predicted {} engine {} {}\n",
            t.y,
            (t.y + 1) % t.n,
            opt(m.predicted.map(|c| c.to_string())),
            m.engine,
            verdict(m.agrees())
        ));
    }
    out.push_str(&format!(
        "colorings: {} predicted, {} found {}\n",
        r.colorings.predicted.as_ref().map_or(0, Vec::len),
        r.colorings.engine.len(),
        verdict(r.colorings.agrees())
    ));
    out.push_str(&format!(
        "endomorphisms: {} predicted, {} found {}\n",
        r.endos.predicted.as_ref().map_or(0, Vec::len),
        r.endos.engine.len(),
        verdict(r.endos.agrees())
    ));
    let shape = match r.shape {
        QuiverShape::K1n { n } => format!("K_{{1,{n}}}"),
        QuiverShape::JoinPrimeC { c, d, n } => format!("K_{{{},{d}}} join_{d} K_{{1,{n}}}", c - 1),
        QuiverShape::Unspecified => "unspecified".into(),
    };
    let iso = match r.shape_isomorphic {
        Some(b) => verdict(b),
        None => "not checked",
    };
    out.push_str(&format!("quiver: {shape} {iso}\n"));
    out.push_str(&format!(
        "in-degree polynomial: predicted {} engine {} {}\n",
        opt(r.polynomial.predicted.as_ref().map(ToString::to_string)),
        r.polynomial.engine,
        verdict(r.polynomial.agrees())
    ));
    out.push_str(&format!(
        "counting matrix: predicted {}*I_{} {}\n",
        t.c,
        t.n,
        verdict(r.counting_matrix.agrees())
    ));
    out.push_str(if r.agrees() { "verdict: agree\n" } else { "verdict: MISMATCH\n" });
    out
}
