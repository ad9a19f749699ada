//! The command line front end.
//!
//! [`run`] never touches the process streams; it returns what to print and
//! the exit status, so the binary and the tests share one code path.
//! Exit status: 0 success, 1 domain error or verification failure, 2 usage.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::coxeter::{CoxCoset, CoxWord, CoxeterGroup, ReflSide};
use crate::error::{Error, Result};
use crate::geometry::{export_ball, ExportEdge, ExportFormat, ExportVertex, GraphExport, WallId};
use crate::oracle::finite::MatrixRep;
use crate::oracle::verify::{self, InstanceReport};
use crate::oracle::{enumerate_ball, integral_tits_rep, DEFAULT_CAP};
use crate::parabolic::{ParabolicDesc, SectorRef};
use crate::presentation::{parse_spec, GenSet, Spec, SpecError};
use crate::words::GraphProduct;

#[derive(Debug, Parser)]
#[command(name = "parabolics", version, about = "Parabolic subgroups of graph products and Coxeter groups")]
struct Cli {
    /// Group specification file.
    #[arg(long, global = true)]
    spec: Option<PathBuf>,
    /// Largest exponent used for infinite-order generators in balls and
    /// random elements.
    #[arg(long, global = true, default_value_t = 2)]
    exp_bound: i64,
    #[command(subcommand)]
    command: TopCommand,
}

#[derive(Debug, Subcommand)]
enum TopCommand {
    #[command(flatten)]
    Op(Command),
    /// Run a command with the Coxeter engine.
    Cox {
        #[command(subcommand)]
        command: Command,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Canonical normal form of a word.
    Normalize { word: String },
    /// Product of two words.
    Mul { w1: String, w2: String },
    /// Inverse of a word.
    Inv { word: String },
    /// Gallery distance to the identity.
    Len { word: String },
    /// Gallery distance between two chambers.
    Dist { w1: String, w2: String },
    /// Left (or right) descents.
    Descents {
        word: String,
        #[arg(long)]
        right: bool,
    },
    /// Projection of a chamber onto the sector base·Σ_types.
    Project {
        #[arg(long)]
        base: String,
        #[arg(long)]
        types: String,
        x: String,
    },
    /// Walls separating two chambers.
    Walls { w1: String, w2: String },
    /// Dial of a chamber with respect to the wall `<type>,<rep>`.
    Dial {
        #[arg(long)]
        wall: String,
        x: String,
    },
    /// Intersection of two parabolic subgroups `<conjugator>,<types>`.
    Intersect {
        #[arg(long)]
        p1: String,
        #[arg(long)]
        p2: String,
    },
    /// Projection of the sector gamma·Σ_J onto Σ_I.
    Cplus {
        #[arg(long = "types-i")]
        types_i: String,
        #[arg(long)]
        gamma: String,
        #[arg(long = "types-j")]
        types_j: String,
    },
    /// Decide whether a set of chambers (one word per line) is a sector ball.
    Recognize {
        #[arg(long)]
        chambers: PathBuf,
    },
    /// Check the intersection theorem against the brute-force oracle.
    Verify {
        #[arg(long, default_value_t = 3)]
        radius: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Lines `<I> <gamma> <J>` to check instead of random instances.
        #[arg(long)]
        instances: Option<PathBuf>,
    },
    /// Print the chamber graph on a ball.
    ExportBall {
        #[arg(long)]
        radius: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        /// Mark dials of the wall `<type>,<rep>`.
        #[arg(long)]
        wall: Option<String>,
    },
}

/// What a run prints and its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

struct Context {
    label: String,
    exp_bound: i64,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let Some(path) = cli.spec.clone() else {
        return Outcome {
            code: 2,
            stdout: String::new(),
            stderr: "error[USAGE]: --spec <file> is required\n".to_string(),
        };
    };
    match execute(&cli, &path) {
        Ok((stdout, ok)) => Outcome {
            code: if ok { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error[{}]: {e}\n", e.code()),
        },
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn execute(cli: &Cli, path: &Path) -> Result<(String, bool)> {
    let spec = parse_spec(&read(path)?)?;
    let ctx = Context {
        label: path
            .file_stem()
            .map_or_else(|| "spec".to_string(), |s| s.to_string_lossy().into_owned()),
        exp_bound: cli.exp_bound,
    };
    match (&cli.command, spec) {
        (TopCommand::Cox { command }, Spec::Coxeter(c)) => cox(&ctx, &CoxeterGroup::new(c), command),
        (TopCommand::Cox { command }, Spec::Graph(g)) => {
            if !g.is_right_angled_coxeter() {
                return Err(SpecError::WrongKind { expected: "Coxeter or right-angled" }.into());
            }
            cox(&ctx, &CoxeterGroup::new(g.underlying_coxeter()), command)
        }
        (TopCommand::Op(command), Spec::Coxeter(c)) => cox(&ctx, &CoxeterGroup::new(c), command),
        (TopCommand::Op(command), Spec::Graph(g)) => graph(&ctx, &GraphProduct::new(g), command),
    }
}

/// Splits `<word>,<rest>` at the first comma.
fn split_pair(text: &str) -> Result<(&str, &str)> {
    text.split_once(',')
        .ok_or_else(|| Error::WordSyntax(format!("expected `<word>,<...>`, got `{text}`")))
}

fn summary(out: &mut String, reports: &[InstanceReport]) -> bool {
    for r in reports {
        writeln!(out, "{}", r.line).unwrap();
    }
    let failures = reports.iter().filter(|r| !r.ok).count();
    writeln!(out, "SUMMARY instances={} failures={failures}", reports.len()).unwrap();
    failures == 0
}

fn graph(ctx: &Context, gp: &GraphProduct, command: &Command) -> Result<(String, bool)> {
    let spec = gp.spec();
    let el = |w: &str| gp.parse_element(w);
    let mut out = String::new();
    match command {
        Command::Normalize { word } => writeln!(out, "{}", gp.format(&el(word)?)),
        Command::Mul { w1, w2 } => writeln!(out, "{}", gp.format(&gp.multiply(&el(w1)?, &el(w2)?)?)),
        Command::Inv { word } => writeln!(out, "{}", gp.format(&gp.invert(&el(word)?))),
        Command::Len { word } => writeln!(out, "{}", el(word)?.syllable_length()),
        Command::Dist { w1, w2 } => writeln!(out, "{}", gp.distance(&el(w1)?, &el(w2)?)?),
        Command::Descents { word, right } => {
            let x = el(word)?;
            let d = if *right { gp.right_descents(&x) } else { gp.left_descents(&x) };
            let parts: Vec<String> = d.into_iter().map(|s| gp.format_syllable(s)).collect();
            writeln!(out, "{{{}}}", parts.join(","))
        }
        Command::Project { base, types, x } => {
            let sector = SectorRef::new(gp, &el(base)?, spec.parse_set(types)?);
            writeln!(out, "{}", gp.format(&gp.project_to_sector(&el(x)?, &sector)?))
        }
        Command::Walls { w1, w2 } => {
            for wall in gp.separating_walls(&el(w1)?, &el(w2)?)? {
                writeln!(out, "wall type={} rep={}", spec.name(wall.ty()), gp.format_compact(wall.rep())).unwrap();
            }
            Ok(())
        }
        Command::Dial { wall, x } => {
            let wall = parse_wall(gp, wall)?;
            writeln!(out, "{}", gp.dial_index(&wall, &el(x)?)?.0)
        }
        Command::Intersect { p1, p2 } => {
            let parse = |text: &str| -> Result<ParabolicDesc> {
                let (conj, types) = split_pair(text)?;
                Ok(ParabolicDesc::new(gp, &el(conj)?, spec.parse_set(types)?))
            };
            let p = gp.intersect_parabolics(&parse(p1)?, &parse(p2)?)?;
            writeln!(
                out,
                "conjugator={} types={}",
                gp.format_compact(p.conjugator()),
                spec.format_set(p.types())
            )
        }
        Command::Cplus { types_i, gamma, types_j } => {
            let s = gp.c_plus(spec.parse_set(types_i)?, &el(gamma)?, spec.parse_set(types_j)?)?;
            writeln!(out, "base={} types={}", gp.format_compact(s.base()), spec.format_set(s.types()))
        }
        Command::Recognize { chambers } => {
            let text = read(chambers)?;
            let set = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .filter(|l| !l.is_empty())
                .map(el)
                .collect::<Result<Vec<_>>>()?;
            match gp.sector_recognize(&set)? {
                Some((s, r)) => writeln!(
                    out,
                    "sector base={} types={} radius={r}",
                    gp.format_compact(s.base()),
                    spec.format_set(s.types())
                ),
                None => writeln!(out, "none"),
            }
        }
        Command::Verify { radius, trials, seed, instances } => {
            let insts = match instances {
                Some(file) => verify::parse_instances(gp, &read(file)?)?,
                None => {
                    let mut rng = verify::seeded_rng(*seed);
                    (0..*trials)
                        .map(|_| verify::random_instance(gp, 3, ctx.exp_bound, &mut rng))
                        .collect::<Result<Vec<_>>>()?
                }
            };
            let reports = insts
                .iter()
                .map(|inst| verify::verify_instance(gp, &ctx.label, inst, *radius, ctx.exp_bound, DEFAULT_CAP))
                .collect::<Result<Vec<_>>>()?;
            let ok = summary(&mut out, &reports);
            return Ok((out, ok));
        }
        Command::ExportBall { radius, format, wall } => {
            let ball = enumerate_ball(spec, *radius, ctx.exp_bound, DEFAULT_CAP)?;
            let wall = wall.as_deref().map(|w| parse_wall(gp, w)).transpose()?;
            let graph = export_ball(gp, &ball, wall.as_ref())?;
            out.push_str(&graph.render(export_format(*format)));
            Ok(())
        }
    }
    .expect("writing to a string");
    Ok((out, true))
}

fn export_format(f: Format) -> ExportFormat {
    match f {
        Format::Dot => ExportFormat::Dot,
        Format::Json => ExportFormat::Json,
    }
}

fn parse_wall(gp: &GraphProduct, text: &str) -> Result<WallId> {
    let (ty, rep) = split_pair(text)?;
    let ty = gp
        .spec()
        .index_of(ty.trim())
        .ok_or_else(|| Error::WordSyntax(format!("unknown generator `{ty}`")))?;
    Ok(WallId::new(gp, ty, &gp.parse_element(rep)?))
}

fn cox(ctx: &Context, cg: &CoxeterGroup, command: &Command) -> Result<(String, bool)> {
    let spec = cg.spec();
    let el = |w: &str| cg.parse_element(w);
    let mut out = String::new();
    let reflection = |text: &str| {
        let (ty, rep) = split_pair(text)?;
        let ty = spec
            .index_of(ty.trim())
            .ok_or_else(|| Error::WordSyntax(format!("unknown generator `{ty}`")))?;
        cg.reflection(&el(rep)?, ty)
    };
    match command {
        Command::Normalize { word } => writeln!(out, "{}", cg.format(&el(word)?)),
        Command::Mul { w1, w2 } => writeln!(out, "{}", cg.format(&cg.multiply(&el(w1)?, &el(w2)?)?)),
        Command::Inv { word } => writeln!(out, "{}", cg.format(&cg.invert(&el(word)?)?)),
        Command::Len { word } => writeln!(out, "{}", el(word)?.len()),
        Command::Dist { w1, w2 } => writeln!(out, "{}", cg.distance(&el(w1)?, &el(w2)?)?),
        Command::Descents { word, right } => {
            let x = el(word)?;
            let d = if *right { cg.right_descents(&x)? } else { cg.left_descents(&x)? };
            writeln!(out, "{}", spec.format_set(d))
        }
        Command::Project { base, types, x } => {
            let sector = CoxCoset::new(cg, &el(base)?, spec.parse_set(types)?);
            writeln!(out, "{}", cg.format(&cg.project(&el(x)?, &sector)?))
        }
        Command::Walls { w1, w2 } => {
            for t in cg.separating_reflections(&el(w1)?, &el(w2)?)? {
                writeln!(out, "reflection {}", cg.format_compact(t.element())).unwrap();
            }
            Ok(())
        }
        Command::Dial { wall, x } => {
            let t = reflection(wall)?;
            let side = match cg.reflection_side(&t, &el(x)?)? {
                ReflSide::Plus => "plus",
                ReflSide::Minus => "minus",
            };
            writeln!(out, "{side}")
        }
        Command::Intersect { p1, p2 } => {
            let parse = |text: &str| -> Result<CoxCoset> {
                let (conj, types) = split_pair(text)?;
                Ok(CoxCoset::new(cg, &el(conj)?, spec.parse_set(types)?))
            };
            let p = cg.intersect(&parse(p1)?, &parse(p2)?)?;
            writeln!(out, "conjugator={} types={}", cg.format_compact(p.base()), spec.format_set(p.types()))
        }
        Command::Cplus { types_i, gamma, types_j } => {
            let s = cg.c_plus(spec.parse_set(types_i)?, &el(gamma)?, spec.parse_set(types_j)?)?;
            writeln!(out, "base={} types={}", cg.format_compact(s.base()), spec.format_set(s.types()))
        }
        Command::Recognize { chambers } => {
            let text = read(chambers)?;
            let set = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .filter(|l| !l.is_empty())
                .map(el)
                .collect::<Result<Vec<_>>>()?;
            match cg.recognize(&set)? {
                Some((s, r)) => writeln!(
                    out,
                    "sector base={} types={} radius={r}",
                    cg.format_compact(s.base()),
                    spec.format_set(s.types())
                ),
                None => writeln!(out, "none"),
            }
        }
        Command::Verify { radius, trials, seed, instances } => {
            let rep = MatrixRep::new(integral_tits_rep(spec)?);
            let insts = match instances {
                Some(file) => verify::parse_cox_instances(cg, &read(file)?)?,
                None => {
                    let mut rng = verify::seeded_rng(*seed);
                    (0..*trials)
                        .map(|_| {
                            let i = verify::random_subset(cg.rank(), &mut rng);
                            let w = verify::random_cox_element(cg, 3, &mut rng)?;
                            let j = verify::random_subset(cg.rank(), &mut rng);
                            Ok((i, w, j))
                        })
                        .collect::<Result<Vec<_>>>()?
                }
            };
            let reports = insts
                .iter()
                .map(|(i, w, j)| verify::verify_cox_instance(cg, &rep, &ctx.label, *i, w, *j, Some(*radius), DEFAULT_CAP))
                .collect::<Result<Vec<_>>>()?;
            let ok = summary(&mut out, &reports);
            return Ok((out, ok));
        }
        Command::ExportBall { radius, format, wall } => {
            let t = wall.as_deref().map(reflection).transpose()?;
            let graph = cox_ball_graph(cg, *radius, t.as_ref())?;
            out.push_str(&graph.render(export_format(*format)));
            Ok(())
        }
    }
    .expect("writing to a string");
    Ok((out, true))
}

fn cox_ball_graph(
    cg: &CoxeterGroup,
    radius: usize,
    wall: Option<&crate::coxeter::Reflection>,
) -> Result<GraphExport> {
    let elems = cg.ball(GenSet::full(cg.rank()), radius)?;
    let index: std::collections::HashMap<&CoxWord, usize> =
        elems.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let dials = match wall {
        Some(t) => Some(
            elems
                .iter()
                .map(|w| cg.reflection_side(t, w).map(|s| i64::from(s == ReflSide::Minus)))
                .collect::<Result<Vec<_>>>()?,
        ),
        None => None,
    };
    let mut edges = BTreeSet::new();
    for (src, w) in elems.iter().enumerate() {
        for s in 0..cg.rank() {
            let v = cg.multiply(w, &CoxWord::letter(s))?;
            if let Some(&dst) = index.get(&v) {
                if src < dst {
                    edges.insert((src, dst, s));
                }
            }
        }
    }
    Ok(GraphExport {
        vertices: elems
            .iter()
            .enumerate()
            .map(|(id, w)| ExportVertex {
                id,
                word: cg.format(w),
                len: w.len(),
                dial: dials.as_ref().map(|d| d[id]),
            })
            .collect(),
        edges: edges
            .into_iter()
            .map(|(src, dst, s)| ExportEdge {
                src,
                dst,
                ty: cg.spec().name(s).to_string(),
                exp: 1,
                wall: dials.as_ref().map(|d| d[src] != d[dst]),
            })
            .collect(),
    })
}
