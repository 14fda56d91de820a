//! Command-line front end. `run` is the whole program minus process exit, so
//! tests can drive it with argument vectors and in-memory streams.

use std::collections::BTreeMap;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::cartan::AlgebraId;
use crate::crystal::{bfs_graph, check_axioms, AxiomViolation};
use crate::geom::{self, schubert};
use crate::omega::{classify_f, omega, verify_iso};
use crate::perfect::{enumerate, BElt, Context};
use crate::trop::{oracle_check, parse_named, simplify, ud, ExprError, PosExpr};
use crate::ud::{self as udc, XPoint};

#[derive(Parser, Debug)]
#[command(name = "ultracrystal", version, about = "G2(1) perfect crystals, their ultra-discretization, and checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Op {
    E,
    F,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Side {
    /// `B_l` (with --level) or `B_∞`
    B,
    /// the ultra-discretized crystal on ℤ⁶
    X,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the elements of B_l in lexicographic order of 3b.
    Enumerate {
        #[arg(long)]
        level: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Crystal graph of B_l, or the ball around 0 in ℤ⁶ reached by BFS.
    Graph {
        #[arg(long, value_enum, default_value = "b")]
        side: Side,
        #[arg(long)]
        level: Option<i64>,
        /// node cap for the unbounded side
        #[arg(long, default_value_t = 200)]
        max_nodes: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Apply ẽ_i or f̃_i to one element.
    Apply {
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..3))]
        index: u8,
        #[arg(long, value_enum, default_value = "b")]
        side: Side,
        /// omit for B_∞
        #[arg(long)]
        level: Option<i64>,
        /// six comma-separated coordinates; b-side accepts thirds like -2/3
        #[arg(long, allow_hyphen_values = true)]
        coords: String,
    },
    /// Exhaustive check that Ω is a crystal isomorphism on [-r, r]^6.
    VerifyIso {
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(i64).range(1..))]
        radius: i64,
    },
    /// Crystal axioms on B_1, B_2, a B_∞ grid and a ℤ⁶ grid.
    VerifyAxioms {
        /// check only this B_l
        #[arg(long)]
        level: Option<i64>,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(i64).range(1..))]
        radius: i64,
    },
    /// Geometric crystal axioms and the generic Schubert formulas, sampled.
    VerifyGeom {
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// ℤ-action, tropical braid relations and crystal shifts on ℤ⁶.
    VerifyUd {
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(i64).range(1..))]
        radius: i64,
        /// exponents m, n range over [-span, span]
        #[arg(long, default_value_t = 2)]
        span: i64,
    },
    /// Subtraction-free expressions and their tropicalization.
    Trop {
        #[command(subcommand)]
        cmd: TropCommand,
    },
}

#[derive(Args, Debug)]
struct Source {
    /// expression file (`name = expr` lines or a bare expression); stdin if absent
    #[arg(long)]
    file: Option<std::path::PathBuf>,
    /// definition to use from a multi-definition file (default: the last)
    #[arg(long)]
    name: Option<String>,
}

#[derive(Subcommand, Debug)]
enum TropCommand {
    Parse {
        #[command(flatten)]
        src: Source,
    },
    Eval {
        #[command(flatten)]
        src: Source,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    Simplify {
        #[command(flatten)]
        src: Source,
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    Oracle {
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the generated operator tables as Rust source.
    Freeze,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Verify(String),
}

type Outcome = Result<String, Failure>;

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn report<T: Serialize>(v: &T, pass: bool) -> Outcome {
    let s = to_json(v);
    if pass {
        Ok(s)
    } else {
        Err(Failure::Verify(s))
    }
}

fn context(level: Option<i64>) -> Context {
    level.map_or(Context::Limit, Context::Level)
}

fn parse_thirds(s: &str) -> Result<[i64; 6], Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 6 {
        return Err(Failure::Usage(format!("expected 6 coordinates, got {}", parts.len())));
    }
    let mut t = [0; 6];
    for (k, p) in parts.iter().enumerate() {
        let (n, d) = match p.split_once('/') {
            Some((n, d)) => (n.parse::<i64>().map_err(usage)?, d.parse::<i64>().map_err(usage)?),
            None => (p.parse::<i64>().map_err(usage)?, 1),
        };
        if d <= 0 || (3 * n) % d != 0 {
            return Err(Failure::Usage(format!("coordinate {p} is not a multiple of 1/3")));
        }
        t[k] = 3 * n / d;
    }
    Ok(t)
}

fn parse_ints(s: &str) -> Result<[i64; 6], Failure> {
    let v: Vec<i64> = s.split(',').map(|p| p.trim().parse::<i64>()).collect::<Result<_, _>>().map_err(usage)?;
    v.try_into().map_err(|v: Vec<i64>| Failure::Usage(format!("expected 6 coordinates, got {}", v.len())))
}

fn parse_bindings(s: &str) -> Result<BTreeMap<String, i64>, Failure> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let (k, v) = p.split_once('=').ok_or_else(|| Failure::Usage(format!("binding {p} is not v=int")))?;
            Ok((k.trim().to_string(), v.trim().parse::<i64>().map_err(usage)?))
        })
        .collect()
}

fn load(src: &Source, stdin: &mut dyn Read) -> Result<PosExpr, Failure> {
    let text = match &src.file {
        Some(p) => std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(usage)?;
            s
        }
    };
    let defs = parse_named(&text).map_err(|e: ExprError| Failure::Usage(e.to_string()))?;
    let pick = match &src.name {
        Some(n) => defs.iter().find(|(k, _)| k == n).ok_or_else(|| Failure::Usage(format!("no definition {n}")))?,
        None => defs.last().ok_or_else(|| Failure::Usage("empty input".into()))?,
    };
    Ok(pick.1.clone())
}

#[derive(Serialize)]
struct AxiomTarget {
    name: String,
    elements: usize,
    violations: Vec<AxiomViolation>,
}

fn limit_grid(radius: i64) -> Vec<BElt> {
    let side = 2 * radius + 1;
    (0..side.pow(6))
        .filter_map(|mut k| {
            let mut t = [0; 6];
            for v in t.iter_mut() {
                *v = k % side - radius;
                k /= side;
            }
            BElt::limit(t).ok()
        })
        .collect()
}

fn x_grid(radius: i64) -> Vec<XPoint> {
    use rayon::prelude::*;
    crate::omega::cube(radius).collect()
}

fn axioms(level: Option<i64>, radius: i64) -> Outcome {
    let all = [0, 1, 2];
    let mut targets = Vec::new();
    let levels: Vec<i64> = level.map_or(vec![1, 2], |l| vec![l]);
    for l in levels {
        let b = enumerate(l).map_err(usage)?;
        targets.push(AxiomTarget { name: format!("B_{l}"), elements: b.len(), violations: check_axioms(AlgebraId::G2_1, &b, &all) });
    }
    if level.is_none() {
        let b = limit_grid(3 * radius);
        targets.push(AxiomTarget { name: "B_inf".into(), elements: b.len(), violations: check_axioms(AlgebraId::G2_1, &b, &all) });
        let x = x_grid(radius);
        targets.push(AxiomTarget { name: "X".into(), elements: x.len(), violations: check_axioms(AlgebraId::G2_1, &x, &all) });
    }
    let pass = targets.iter().all(|t| t.violations.is_empty());
    report(&json!({ "targets": targets, "pass": pass }), pass)
}

fn apply(op: Op, i: usize, side: Side, level: Option<i64>, coords: &str) -> Outcome {
    match side {
        Side::B => {
            let b = BElt::new(parse_thirds(coords)?, context(level)).map_err(usage)?;
            let r = match op {
                Op::F => b.try_f(i),
                Op::E => b.try_e(i),
            }
            .map_err(usage)?;
            let v = json!({
                "input": b.to_string(),
                "result": r.map(|r| r.to_string()),
                "t": r.map(|r| r.t()),
            });
            Ok(to_json(&v))
        }
        Side::X => {
            if level.is_some() {
                return Err(Failure::Usage("--level applies to the b side only".into()));
            }
            let p = XPoint::new(parse_ints(coords)?);
            let n = if op == Op::F { -1 } else { 1 };
            let q = udc::act(i, n, &p);
            let v = json!({
                "input": p.x,
                "result": q.x,
                "omega": omega(&q).to_string(),
                "case": if i == 0 && op == Op::F { classify_f(&p).ok().map(|c| c.to_string()) } else { None },
            });
            Ok(to_json(&v))
        }
    }
}

fn graph(side: Side, level: Option<i64>, max_nodes: usize, format: Format) -> Outcome {
    let g = match side {
        Side::B => {
            let l = level.ok_or_else(|| Failure::Usage("graph --side b needs --level".into()))?;
            let all = enumerate(l).map_err(usage)?;
            bfs_graph(&all, &[0, 1, 2], all.len())
        }
        Side::X => bfs_graph(&[XPoint::ZERO], &[0, 1, 2], max_nodes.max(1)),
    };
    Ok(match format {
        Format::Dot => g.to_dot(),
        _ => to_json(&g),
    })
}

fn trop(cmd: TropCommand, stdin: &mut dyn Read) -> Outcome {
    match cmd {
        TropCommand::Parse { src } => {
            let e = load(&src, stdin)?;
            let v = json!({
                "expr": e.to_string(),
                "variables": e.variables(),
                "summands": e.summands().len(),
            });
            Ok(to_json(&v))
        }
        TropCommand::Eval { src, at } => {
            let e = load(&src, stdin)?;
            let v = ud(&e).eval(&parse_bindings(&at)?).map_err(usage)?;
            Ok(format!("{v}\n"))
        }
        TropCommand::Simplify { src, at, format } => {
            let e = load(&src, stdin)?;
            let mut t = ud(&e);
            for (k, v) in parse_bindings(at.as_deref().unwrap_or(""))? {
                t = t.specialize(&k, v);
            }
            let s = simplify(&t);
            Ok(match format {
                Format::Json => to_json(&s),
                _ => format!("{s}\n"),
            })
        }
        TropCommand::Oracle { src, samples, seed } => {
            let e = load(&src, stdin)?;
            let rep = oracle_check(&e, &ud(&e), samples, seed).map_err(usage)?;
            report(&rep, rep.pass)
        }
        TropCommand::Freeze => Ok(udc::render_tables()),
    }
}

fn dispatch(cmd: Command, stdin: &mut dyn Read) -> Outcome {
    match cmd {
        Command::Enumerate { level, format } => {
            let all = enumerate(level).map_err(usage)?;
            Ok(match format {
                Format::Text => all.iter().map(|b| format!("{b}\n")).collect(),
                Format::Dot => return Err(Failure::Usage("enumerate has no dot output".into())),
                Format::Json => to_json(&all),
            })
        }
        Command::Graph { side, level, max_nodes, format } => graph(side, level, max_nodes, format),
        Command::Apply { op, index, side, level, coords } => apply(op, index as usize, side, level, &coords),
        Command::VerifyIso { radius } => {
            let rep = verify_iso(radius);
            report(&rep, rep.pass)
        }
        Command::VerifyAxioms { level, radius } => axioms(level, radius),
        Command::VerifyGeom { samples, seed } => {
            let ax = geom::axioms_check(samples as usize, seed);
            let sc = schubert::cross_check(samples as usize, seed);
            let pass = ax.pass && sc.pass;
            report(&json!({ "axioms": ax, "schubert": sc, "pass": pass }), pass)
        }
        Command::VerifyUd { radius, span } => {
            let rep = udc::verify_ud(radius, span);
            report(&rep, rep.pass)
        }
        Command::Trop { cmd } => trop(cmd, stdin),
    }
}

/// Runs the program; returns the exit status (0 ok, 1 verification failed,
/// 2 usage error).
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match dispatch(cli.cmd, stdin) {
        Ok(s) => {
            let _ = out.write_all(s.as_bytes());
            0
        }
        Err(Failure::Verify(s)) => {
            let _ = out.write_all(s.as_bytes());
            1
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut stdin = input.as_bytes();
        let code = run(std::iter::once("ultracrystal").chain(args.iter().copied()), &mut stdin, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn enumerate_level_one() {
        let (code, out, _) = go(&["enumerate", "--level", "1"], "");
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 15);
        assert_eq!(v[0]["t"], json!([0, 0, 0, 0, 0, 0]));
        let (_, text, _) = go(&["enumerate", "--level", "1", "--format", "text"], "");
        assert_eq!(text.lines().count(), 15);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(go(&["enumerate"], "").0, 2);
        assert_eq!(go(&["enumerate", "--level", "0"], "").0, 2);
        assert_eq!(go(&["verify-iso", "--radius", "0"], "").0, 2);
        assert_eq!(go(&["apply", "--op", "f", "--index", "3", "--coords", "0,0,0,0,0,0"], "").0, 2);
        assert_eq!(go(&["apply", "--op", "f", "--index", "0", "--coords", "1/2,0,0,0,0,0"], "").0, 2);
        assert_eq!(go(&["trop", "parse"], "x0 - x1").0, 2);
        assert_eq!(go(&["--help"], "").0, 0);
    }

    #[test]
    fn apply_both_sides() {
        let (code, out, _) = go(&["apply", "--op", "f", "--index", "1", "--coords", "0,0,0,0,0,0"], "");
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["t"], json!([-3, 3, 0, 0, 0, 0]));
        let (_, out, _) = go(&["apply", "--op", "f", "--index", "0", "--side", "x", "--coords", "0,0,0,0,0,0"], "");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"], json!([1, 1, 3, 2, 3, 1]));
        assert_eq!(v["case"], json!("f1"));
        // at the top of B_1, f_0 of (1,0,0,0,0,0) leaves the crystal
        let (_, out, _) = go(&["apply", "--op", "f", "--index", "0", "--level", "1", "--coords", "1,0,0,0,0,0"], "");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!(v["result"].is_null());
    }

    #[test]
    fn trop_commands() {
        let (code, out, _) = go(&["trop", "eval", "--at", "x0=2,x1=1,x2=5,c=-1"], "c*x0/x1 + x2");
        assert_eq!((code, out.as_str()), (0, "5\n"));
        let (code, out, _) = go(&["trop", "simplify", "--at", "c=-1"], "c*x + x^2 + 1");
        assert_eq!(code, 0);
        assert_eq!(out, "max(0, 2*x)\n");
        let (code, _, _) = go(&["trop", "oracle", "--samples", "10"], "(x + y)/(x*y + 1)");
        assert_eq!(code, 0);
        let (_, out, _) = go(&["trop", "parse"], "a = x + y\nb = a*a");
        assert!(out.contains("\"summands\": 1"));
    }

    #[test]
    fn deterministic_output() {
        let a = go(&["verify-geom", "--samples", "2", "--seed", "7"], "");
        let b = go(&["verify-geom", "--samples", "2", "--seed", "7"], "");
        assert_eq!(a.0, 0);
        assert_eq!(a, b);
    }

    #[test]
    fn graphs() {
        let (_, dot, _) = go(&["graph", "--level", "1", "--format", "dot"], "");
        assert!(dot.starts_with("digraph crystal {"));
        assert!(dot.contains("b=("));
        let (_, js, _) = go(&["graph", "--side", "x", "--max-nodes", "20"], "");
        let v: serde_json::Value = serde_json::from_str(&js).unwrap();
        assert_eq!(v["truncated"], json!(true));
    }
}
