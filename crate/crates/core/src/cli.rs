//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on usage, I/O or parse errors, 2 on a
//! semantic negative (invalid family, not st-planar, invalid drawing,
//! roundtrip mismatch). Negatives print `reason: <code>` on stderr.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::arrangement::{count_regions, region_family, region_graph};
use crate::drawing::{
    assign_coordinates, check_dominance, compact, drawing_to_arrangement, extract_zones,
    render_svg, validate_upright_quad, GridDrawing, SvgOptions,
};
use crate::error::Error;
use crate::family::{
    build_graph, check_union_closed, check_well_graded, validate_family,
    verify_accessibility_extension, LearningGraph, SetFamily,
};
use crate::io;
use crate::recognize::{brute_force_recognize, canonical_form, census, recognize, BoundaryOrders};

#[derive(Debug, Parser)]
#[command(
    name = "uquad",
    version,
    about = "Learning spaces, st-planarity and upright-quad drawings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the learning-space axioms and derived properties of a family.
    Validate { family: PathBuf },
    /// Print the learning graph of a family.
    Graph {
        family: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Find the boundary orders of an st-planar learning space.
    Recognize {
        family: PathBuf,
        /// Use the factorial brute-force recognizer.
        #[arg(long)]
        oracle: bool,
    },
    /// Produce an upright-quad grid drawing of a family.
    Draw {
        family: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        compact: bool,
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        #[command(flatten)]
        style: Style,
        #[arg(long)]
        oracle: bool,
    },
    /// Region family of a quadrant arrangement.
    Regions {
        arrangement: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List the zones of a drawing.
    Zones { drawing: PathBuf },
    /// Convert a drawing to its canonical quadrant arrangement.
    ToArrangement {
        drawing: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that a drawing's arrangement reproduces the drawing's graph.
    Roundtrip { drawing: PathBuf },
    /// Enumerate the region families of all permutations of n elements.
    Census {
        #[arg(long = "n", value_name = "INT")]
        n: usize,
    },
    /// Render a drawing file as SVG.
    Render {
        drawing: PathBuf,
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        #[command(flatten)]
        style: Style,
    },
}

#[derive(Debug, clap::Args)]
pub struct Style {
    /// Label edges with elements and vertices with states.
    #[arg(long)]
    labels: bool,
    /// Pixels per grid unit.
    #[arg(long, value_name = "PX", default_value_t = 48, value_parser = clap::value_parser!(u32).range(1..))]
    unit: u32,
}

impl Style {
    fn options(&self) -> SvgOptions {
        SvgOptions {
            unit: self.unit,
            labels: self.labels,
        }
    }
}

enum Failure {
    /// Usage, I/O or parse problem.
    Error(String),
    /// A well-formed input with a negative answer.
    Negative {
        reason: &'static str,
        message: String,
    },
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::InvalidFamily(_) => Failure::Negative {
                reason: "invalid-family",
                message: err.to_string(),
            },
            Error::NotPlanar(_) | Error::InvalidDrawing(_) | Error::MalformedZone(_) => {
                Failure::Negative {
                    reason: "invalid-drawing",
                    message: err.to_string(),
                }
            }
            other => Failure::Error(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

struct Context<'a> {
    stdout: &'a mut dyn Write,
}

impl Context<'_> {
    fn print(&mut self, text: &str) -> Outcome {
        self.stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Error(format!("writing output: {e}")))
    }

    /// Writes to `path` if given, else to stdout.
    fn emit(&mut self, path: Option<&Path>, text: &str) -> Outcome {
        match path {
            Some(p) => {
                fs::write(p, text).map_err(|e| Failure::Error(format!("{}: {e}", p.display())))
            }
            None => self.print(text),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Error(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, result: crate::error::Result<T>) -> Result<T, Failure> {
    result.map_err(|e| match Failure::from(e) {
        Failure::Error(m) => Failure::Error(format!("{}: {m}", path.display())),
        neg => neg,
    })
}

fn load_family(path: &Path) -> Result<SetFamily, Failure> {
    with_path(path, io::parse_family(&read(path)?))
}

fn load_drawing(path: &Path) -> Result<(LearningGraph, GridDrawing), Failure> {
    with_path(path, io::parse_drawing(&read(path)?))
}

/// Loads a drawing and insists it passes the full validator.
fn load_valid_drawing(
    ctx: &mut Context,
    path: &Path,
) -> Result<(LearningGraph, GridDrawing), Failure> {
    let (g, d) = load_drawing(path)?;
    let mut report = validate_upright_quad(&d, &g);
    if report.is_ok() {
        report.extend(check_dominance(&d, &g));
    }
    if !report.is_ok() {
        ctx.print(&report.render(g.universe(), g.vertices()))?;
        return Err(Failure::Negative {
            reason: "invalid-drawing",
            message: format!("{} is not a valid upright-quad drawing", path.display()),
        });
    }
    Ok((g, d))
}

fn format_orders(family: &SetFamily, orders: &BoundaryOrders) -> String {
    let u = family.universe();
    let names = |o: &[usize]| o.iter().map(|&e| u.name(e)).collect::<Vec<_>>().join(" ");
    let pi = orders
        .permutation(u.len())
        .map(|p| p.to_string())
        .unwrap_or_default();
    format!(
        "x-order: {}\ny-order: {}\npermutation: {}\n",
        names(&orders.x_order),
        names(&orders.y_order),
        pi
    )
}

fn require_learning_space(family: &SetFamily) -> Outcome {
    let report = validate_family(family);
    if report.is_ok() {
        return Ok(());
    }
    Err(Failure::Negative {
        reason: "invalid-family",
        message: format!(
            "family is not a learning space\n{}",
            report.render(family.universe(), &[]).trim_end()
        ),
    })
}

fn find_orders(family: &SetFamily, oracle: bool) -> Result<BoundaryOrders, Failure> {
    require_learning_space(family)?;
    let found = if oracle {
        brute_force_recognize(family)?
    } else {
        recognize(family)?
    };
    found.ok_or(Failure::Negative {
        reason: "not-st-planar",
        message: String::new(),
    })
}

fn execute(command: Command, ctx: &mut Context) -> Outcome {
    match command {
        Command::Validate { family } => {
            let f = load_family(&family)?;
            let checks = [
                ("axioms", validate_family(&f)),
                ("union-closure", check_union_closed(&f)),
                ("well-graded", check_well_graded(&f)),
                (
                    "accessibility-extension",
                    verify_accessibility_extension(&f),
                ),
            ];
            let mut ok = true;
            let mut out = format!("states: {}\n", f.len());
            for (name, report) in &checks {
                if report.is_ok() {
                    out.push_str(&format!("{name}: ok\n"));
                } else {
                    ok = false;
                    out.push_str(&format!(
                        "{name}: violations: {}\n",
                        report.violations.len()
                    ));
                    out.push_str(&report.render(f.universe(), &[]));
                }
            }
            out.push_str(if ok {
                "learning space: yes\n"
            } else {
                "learning space: no\n"
            });
            ctx.print(&out)?;
            if ok {
                Ok(())
            } else {
                Err(Failure::Negative {
                    reason: "invalid-family",
                    message: "family is not a learning space".into(),
                })
            }
        }
        Command::Graph { family, output } => {
            let f = load_family(&family)?;
            require_learning_space(&f)?;
            let g = build_graph(&f)?;
            let u = g.universe();
            let mut out = format!("vertices {}\n", g.vertex_count());
            for (i, &s) in g.vertices().iter().enumerate() {
                out.push_str(&format!("{i} {}\n", u.format_state(s)));
            }
            out.push_str(&format!("edges {}\n", g.edge_count()));
            for e in g.edges() {
                out.push_str(&format!("{} {} {}\n", e.from, e.to, u.name(e.label)));
            }
            out.push_str(&format!("source {}\nsink {}\n", g.source(), g.sink()));
            ctx.emit(output.as_deref(), &out)
        }
        Command::Recognize { family, oracle } => {
            let f = load_family(&family)?;
            match find_orders(&f, oracle) {
                Ok(orders) => ctx.print(&format_orders(&f, &orders)),
                Err(Failure::Negative { reason, message }) if reason == "not-st-planar" => {
                    ctx.print("not st-planar\n")?;
                    Err(Failure::Negative { reason, message })
                }
                Err(other) => Err(other),
            }
        }
        Command::Draw {
            family,
            output,
            compact: do_compact,
            svg,
            style,
            oracle,
        } => {
            let f = load_family(&family)?;
            let orders = find_orders(&f, oracle)?;
            let g = build_graph(&f)?;
            let mut d = assign_coordinates(&f, &orders)?;
            if do_compact {
                d = compact(&d, &g)?;
            }
            if let Some(path) = &svg {
                ctx.emit(Some(path), &render_svg(&d, &g, &style.options()))?;
            }
            ctx.emit(output.as_deref(), &io::write_drawing(&g, &d))
        }
        Command::Regions {
            arrangement,
            output,
        } => {
            let text = read(&arrangement)?;
            let a = with_path(&arrangement, io::parse_arrangement(&text))?;
            let f = region_family(&a);
            debug_assert_eq!(f.len(), count_regions(&a));
            ctx.emit(output.as_deref(), &io::write_family(&f))
        }
        Command::Zones { drawing } => {
            let (g, d) = load_valid_drawing(ctx, &drawing)?;
            let zones = extract_zones(&d, &g)?;
            let u = g.universe();
            let mut out = format!("zones {}\n", zones.len());
            let list = |v: &[usize], prefix: char| {
                if v.is_empty() {
                    "-".to_string()
                } else {
                    v.iter()
                        .map(|i| format!("{prefix}{i}"))
                        .collect::<Vec<_>>()
                        .join(",")
                }
            };
            let opt = |e: Option<usize>| e.map_or("-".to_string(), |e| format!("e{e}"));
            for z in &zones {
                out.push_str(&format!(
                    "{}\tfaces={}\tedges={}\tleft={}\tright={}\n",
                    z.label.map_or("?", |l| u.name(l)),
                    list(&z.faces, 'f'),
                    list(&z.edges, 'e'),
                    opt(z.left_exterior),
                    opt(z.right_exterior),
                ));
            }
            ctx.print(&out)
        }
        Command::ToArrangement { drawing, output } => {
            let (g, d) = load_valid_drawing(ctx, &drawing)?;
            let a = drawing_to_arrangement(&d, &g)?;
            ctx.emit(output.as_deref(), &io::write_arrangement(&a))
        }
        Command::Roundtrip { drawing } => {
            let (g, d) = load_valid_drawing(ctx, &drawing)?;
            let a = drawing_to_arrangement(&d, &g)?;
            let back = region_graph(&a)?;
            let verdict = if back == g {
                "labeled-isomorphic"
            } else if g.universe().len() <= 8
                && canonical_form(&back.family())? == canonical_form(&g.family())?
            {
                "isomorphic"
            } else {
                ctx.print(&format!(
                    "permutation: {}\nroundtrip: mismatch\n",
                    a.permutation()
                ))?;
                return Err(Failure::Negative {
                    reason: "roundtrip-mismatch",
                    message: "region graph differs from the drawing's graph".into(),
                });
            };
            ctx.print(&format!(
                "permutation: {}\nroundtrip: {verdict}\n",
                a.permutation()
            ))
        }
        Command::Census { n } => {
            let report = census(n)?;
            ctx.print(&report.table())
        }
        Command::Render {
            drawing,
            svg,
            style,
        } => {
            let (g, d) = load_drawing(&drawing)?;
            ctx.emit(svg.as_deref(), &render_svg(&d, &g, &style.options()))
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let informational = matches!(
                err.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let rendered = err.render().to_string();
            if informational {
                let _ = stdout.write_all(rendered.as_bytes());
                return 0;
            }
            let _ = stderr.write_all(rendered.as_bytes());
            return 1;
        }
    };
    let mut ctx = Context { stdout };
    match execute(cli.command, &mut ctx) {
        Ok(()) => 0,
        Err(Failure::Error(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            1
        }
        Err(Failure::Negative { reason, message }) => {
            let _ = writeln!(stderr, "reason: {reason}");
            if !message.is_empty() {
                let _ = writeln!(stderr, "{message}");
            }
            2
        }
    }
}
