use clap::{Args, Parser, Subcommand};
use grid_torus::adjunction::classify_bw3;
use grid_torus::algebra::rational::{fmt as rfmt, parse as rparse, Rational};
use grid_torus::families::*;
use grid_torus::grid::dot::to_dot;
use grid_torus::grid::{
    bandwidth, is_nef, minimal_edges, mu_adjoint, mu_canonical, validate, GridData,
};
use grid_torus::grid::{BUNDLE_ADJOINT, BUNDLE_L, BUNDLE_MINUS_K};
use grid_torus::localization::{euler_char_torus, solve_bw3_a, verify_bw3_identity};
use grid_torus::verify::{CriterionResult, CRITERIA};
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_FAILURE: u8 = 1;
const EXIT_JSON: u8 = 2;
const EXIT_VIOLATIONS: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "grid-torus",
    version,
    about = "Grid data of polarized varieties with torus actions"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write the grid data of a family as JSON.
    Build {
        #[command(subcommand)]
        family: Family,
        /// Output file; stdout when absent.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Check structural consistency.
    Validate(GridIn),
    /// Print max mu - min mu of a bundle.
    Bandwidth {
        #[command(flatten)]
        input: GridIn,
        #[arg(long, default_value = BUNDLE_L, allow_hyphen_values = true)]
        bundle: String,
    },
    /// Test a bundle for nefness on the orbit edges.
    NefCheck {
        #[command(flatten)]
        input: GridIn,
        #[command(flatten)]
        bundle: BundleSel,
        /// Test only on the transitively reduced edge set.
        #[arg(long)]
        minimal: bool,
    },
    /// Euler characteristic of the m-th power of a bundle by localization.
    Chi {
        #[command(flatten)]
        input: GridIn,
        #[command(flatten)]
        bundle: BundleSel,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// Solve the bandwidth-3 isolated-point identity for a.
    Identity {
        #[arg(long)]
        n: u32,
        /// Check this value instead of solving.
        #[arg(long)]
        a: Option<u64>,
    },
    /// Run the bandwidth-3 classification filter.
    Classify(GridIn),
    /// Print adjoint-variety tables as CSV.
    Table {
        #[command(subcommand)]
        which: TableKind,
    },
    /// Render the orbit graph in DOT with one rank per mu level.
    ExportDot {
        #[command(flatten)]
        input: GridIn,
        #[arg(long, default_value = BUNDLE_L, allow_hyphen_values = true)]
        bundle: String,
    },
    /// Run the acceptance suite.
    Verify,
}

#[derive(Args)]
struct GridIn {
    /// Grid JSON file; `-` or absent reads stdin.
    #[arg(long)]
    grid: Option<PathBuf>,
}

#[derive(Args)]
struct BundleSel {
    /// `L`, `-K` or `K+tauL`; the last two are derived when absent.
    #[arg(long, default_value = BUNDLE_L, allow_hyphen_values = true)]
    bundle: String,
    /// Value of tau for `K+tauL`, as `p/q`; defaults to n.
    #[arg(long, value_parser = parse_rational)]
    tau: Option<Rational>,
}

#[derive(Subcommand)]
enum Family {
    /// Scroll over P^1 with a splitting of the bundle.
    Scroll {
        #[arg(long)]
        n: u32,
        /// Splitting degrees, e.g. 1,1,1,1,3.
        #[arg(long)]
        split: String,
    },
    /// Quadric bundle over P^1, n >= 4.
    QuadricBundle {
        #[arg(long)]
        n: u32,
    },
    /// P^1xP^1xP^1 with the diagonal action.
    P1cubed,
    /// The Lagrangian Grassmannian of Sp_6.
    Sp6,
    /// P^1xP^1xP^1 with the full rank-3 torus.
    CubeTorus,
    /// Projective space from weight blocks `a:k,...` (weight a, k coordinates).
    Projective {
        #[arg(long)]
        weights: String,
    },
    /// Quadric Q^n with the full torus.
    Quadric {
        #[arg(long)]
        n: u32,
    },
    /// Adjoint variety of SO_m with the rank-2 torus.
    SoAdjoint {
        #[arg(long)]
        m: u32,
    },
    /// Bandwidth-3 slice X_i of the SO_m adjoint variety.
    SoSlice {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 0)]
        i: i64,
    },
}

#[derive(Subcommand)]
enum TableKind {
    /// Rows for SO_m read off the builder; `--m 6..12` or `--m 10`.
    SoAdjoint {
        #[arg(long, value_parser = parse_range)]
        m: (u32, u32),
    },
    /// Rows for Sp_{2n+2}.
    Sp {
        #[arg(long, value_parser = parse_range)]
        n: (u32, u32),
    },
    /// Rows for SL_{n+2}.
    Sl {
        #[arg(long, value_parser = parse_range)]
        n: (u32, u32),
    },
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    rparse(s).ok_or_else(|| format!("`{s}` is not a rational p/q"))
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let num = |x: &str| x.trim().parse::<u32>().map_err(|e| format!("`{x}`: {e}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => match b.strip_prefix('=') {
            Some(b) => (num(a)?, num(b)?),
            None => (num(a)?, num(b)?),
        },
        None => (num(s)?, num(s)?),
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

/// A failure carrying its exit status.
struct Fail(u8, String);

impl From<grid_torus::Error> for Fail {
    fn from(e: grid_torus::Error) -> Self {
        Fail(EXIT_FAILURE, e.to_string())
    }
}

impl From<std::io::Error> for Fail {
    fn from(e: std::io::Error) -> Self {
        Fail(EXIT_FAILURE, e.to_string())
    }
}

fn read_input(p: &Option<PathBuf>) -> Result<String, Fail> {
    let mut s = String::new();
    match p {
        Some(p) if p.as_os_str() != "-" => {
            s = std::fs::read_to_string(p)
                .map_err(|e| Fail(EXIT_FAILURE, format!("{}: {e}", p.display())))?
        }
        _ => {
            std::io::stdin().read_to_string(&mut s)?;
        }
    }
    Ok(s)
}

fn parse_grid(s: &str) -> Result<GridData, Fail> {
    let de = &mut serde_json::Deserializer::from_str(s);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        Fail(
            EXIT_JSON,
            format!("malformed grid JSON at `{path}`: {}", e.into_inner()),
        )
    })
}

/// Parsed and validated input grid.
fn load(input: &GridIn) -> Result<GridData, Fail> {
    let g = parse_grid(&read_input(&input.grid)?)?;
    let v = validate(&g);
    if !v.is_empty() {
        let list: Vec<String> = v.iter().map(|x| format!("  {x}")).collect();
        return Err(Fail(
            EXIT_VIOLATIONS,
            format!("{} violation(s):\n{}", v.len(), list.join("\n")),
        ));
    }
    Ok(g)
}

/// The grid with the selected bundle present, and that bundle's name.
fn with_bundle(g: GridData, sel: &BundleSel) -> Result<(GridData, String), Fail> {
    if g.has_bundle(&sel.bundle) {
        return Ok((g, sel.bundle.clone()));
    }
    match sel.bundle.as_str() {
        BUNDLE_MINUS_K => Ok((mu_canonical(&g)?, sel.bundle.clone())),
        BUNDLE_ADJOINT => {
            let tau = sel
                .tau
                .clone()
                .unwrap_or_else(|| Rational::from_integer(g.n.into()));
            let k = if g.has_bundle(BUNDLE_MINUS_K) {
                g
            } else {
                mu_canonical(&g)?
            };
            Ok((mu_adjoint(&k, &tau)?, sel.bundle.clone()))
        }
        b => Err(Fail(
            EXIT_FAILURE,
            format!("bundle `{b}` is not stored in the grid"),
        )),
    }
}

fn build(f: &Family) -> Result<GridData, Fail> {
    Ok(match f {
        Family::Scroll { n, split } => {
            let (dn, sp) =
                ScrollSplit::parse_degrees(split).map_err(|e| Fail(EXIT_USAGE, e.to_string()))?;
            if dn != *n {
                return Err(Fail(
                    EXIT_USAGE,
                    format!(
                        "split {split} has {dn} + 1 degrees, expected n + 1 = {}",
                        n + 1
                    ),
                ));
            }
            build_scroll(*n, sp)?
        }
        Family::QuadricBundle { n } => build_quadric_bundle(*n)?,
        Family::P1cubed => build_p1cubed(),
        Family::Sp6 => build_sp6(),
        Family::CubeTorus => build_cube_torus(),
        Family::Projective { weights } => {
            let mut blocks = Vec::new();
            for part in weights.split(',') {
                let (a, k) = part.split_once(':').unwrap_or((part, "1"));
                let a = a
                    .trim()
                    .parse::<i64>()
                    .map_err(|e| Fail(EXIT_USAGE, format!("weight `{a}`: {e}")))?;
                let k = k
                    .trim()
                    .parse::<u32>()
                    .map_err(|e| Fail(EXIT_USAGE, format!("block size `{k}`: {e}")))?;
                blocks.push((a, k));
            }
            build_projective_space(&blocks)?
        }
        Family::Quadric { n } => build_quadric_full_torus(*n)?,
        Family::SoAdjoint { m } => build_so_adjoint(*m)?,
        Family::SoSlice { m, i } => so_slice(*m, *i)?,
    })
}

fn table(which: &TableKind) -> Result<String, Fail> {
    let mut out = vec![TableRow::CSV_HEADER.to_string()];
    match which {
        TableKind::SoAdjoint { m: (a, b) } => {
            for m in *a..=*b {
                out.push(so_table_from_builder(m)?.to_csv());
            }
        }
        TableKind::Sp { n: (a, b) } | TableKind::Sl { n: (a, b) } => {
            let fam = if matches!(which, TableKind::Sp { .. }) {
                GroupFamily::Sp
            } else {
                GroupFamily::SL
            };
            for n in *a..=*b {
                out.push(adjoint_table_row(fam, n)?.to_csv());
            }
        }
    }
    Ok(out.join("\n") + "\n")
}

fn verify() -> (String, bool) {
    let results: Vec<CriterionResult> = std::thread::scope(|s| {
        let handles: Vec<_> = CRITERIA
            .iter()
            .map(|&(id, name, f)| {
                s.spawn(move || {
                    let r = f();
                    CriterionResult {
                        id,
                        name,
                        passed: r.is_ok(),
                        detail: r.unwrap_or_else(|e| e),
                    }
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("criterion panicked"))
            .collect()
    });
    let mut out = String::new();
    for r in &results {
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "criterion {:>2} {verdict} {}: {}\n",
            r.id, r.name, r.detail
        ));
    }
    let passed = results.iter().filter(|r| r.passed).count();
    out.push_str(&format!("{passed}/{} criteria passed\n", results.len()));
    (out, passed == results.len())
}

fn run(cli: Cli) -> Result<(String, u8), Fail> {
    let text = match cli.cmd {
        Cmd::Build { family, output } => {
            let json = build(&family)?.to_json();
            if let Some(p) = output {
                std::fs::write(&p, json)
                    .map_err(|e| Fail(EXIT_FAILURE, format!("{}: {e}", p.display())))?;
                String::new()
            } else {
                json
            }
        }
        Cmd::Validate(input) => {
            let g = load(&input)?;
            format!(
                "ok: {} components, {} edges\n",
                g.components.len(),
                g.edges.len()
            )
        }
        Cmd::Bandwidth { input, bundle } => {
            format!("{}\n", rfmt(&bandwidth(&load(&input)?, &bundle)?))
        }
        Cmd::NefCheck {
            input,
            bundle,
            minimal,
        } => {
            let (g, b) = with_bundle(load(&input)?, &bundle)?;
            let nef = if minimal {
                if !g.flags.edges_complete {
                    return Err(grid_torus::Error::EdgesIncomplete.into());
                }
                grid_torus::grid::ops::nef_on_edges(&g, &minimal_edges(&g), &b)?
            } else {
                is_nef(&g, &b)?
            };
            format!("{b}: {}\n", if nef { "nef" } else { "not nef" })
        }
        Cmd::Chi { input, bundle, m } => {
            let (g, b) = with_bundle(load(&input)?, &bundle)?;
            let chi = euler_char_torus(&g, &b, m)?;
            let shown = chi
                .as_laurent_polynomial()
                .map(|p| p.to_string())
                .unwrap_or_else(|| chi.to_string());
            format!("chi = {shown}\nchi(1) = {}\n", rfmt(&chi.eval_at_one()?))
        }
        Cmd::Identity { n, a } => match a {
            Some(a) => format!(
                "a = {a}: {}\n",
                if verify_bw3_identity(n, a) {
                    "holds"
                } else {
                    "fails"
                }
            ),
            None => match solve_bw3_a(n) {
                Some(a) => format!("a = {a}\n"),
                None => "no solution\n".to_string(),
            },
        },
        Cmd::Classify(input) => format!("{}", classify_bw3(&load(&input)?)),
        Cmd::Table { which } => table(&which)?,
        Cmd::ExportDot { input, bundle } => to_dot(&load(&input)?, &bundle),
        Cmd::Verify => {
            let (out, ok) = verify();
            return Ok((out, if ok { 0 } else { EXIT_FAILURE }));
        }
    };
    Ok((text, 0))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((text, code)) => {
            let mut out = std::io::stdout().lock();
            if out
                .write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .is_err()
            {
                return ExitCode::from(EXIT_FAILURE);
            }
            ExitCode::from(code)
        }
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
