use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gasket_core::classify::{
    kappa, orbit_census, reduce_to_ground, reduced_form, root_quadruple, root_quadruples_with_curvature,
    super_integrality_class, RootQuadruple,
};
use gasket_core::completion::{complete, strong_integrality_from_three, TangentTriple};
use gasket_core::enumerate::{
    generate, locate_in_unit_square, location_is_unique, EnumerationBudget, GroupKind, Window,
};
use gasket_core::exact::rational::{parse_rational, rational_text, to_decimal};
use gasket_core::render::{render_svg, Fill, Label, RenderOptions, ResidueFilter};
use gasket_core::verify::{self, Suite};
use gasket_core::{
    descartes_defect, AugmentedMatrix, Circle, ConfigMatrix, DescartesQuadruple, Error, Integer, Orientation,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "gasket", version, about = "Exact Apollonian circle packings and super-packings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Descartes defect, divisor, orientation and root of a quadruple.
    Check(Quad),
    /// Reduction word to a permutation of ±(0,0,g,g).
    Reduce(Quad),
    /// Root quadruple of a packing, or all roots with a given bounding curvature.
    Root(RootArgs),
    /// Reduced form, kappa and super-integrality of a 4×3 matrix M.
    Classify(ClassifyArgs),
    /// Super-integral orbit census as CSV.
    Census,
    /// Both Descartes configurations through three tangent circles.
    Complete(CompleteArgs),
    /// Stream the circles of a packing or super-packing.
    Generate(GenerateArgs),
    /// Draw a packing or super-packing as SVG.
    Render(RenderArgs),
    /// Place a root quadruple's configuration in the unit square.
    Locate(Quad),
    /// Run seeded property suites and print a JSON report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Quad {
    /// Four integer curvatures, in any order.
    #[arg(num_args = 4, allow_negative_numbers = true, required = true)]
    curvatures: Vec<String>,
}

#[derive(Args)]
struct RootArgs {
    #[arg(num_args = 0..=4, allow_negative_numbers = true)]
    curvatures: Vec<String>,
    /// List the root quadruples (-N, b, c, d) instead.
    #[arg(long, value_name = "N", conflicts_with = "curvatures")]
    curvature: Option<u64>,
    /// Include imprimitive roots when listing.
    #[arg(long, requires = "curvature")]
    imprimitive: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Twelve entries of M, row by row: b, b·x, b·y for each circle.
    #[arg(num_args = 12, allow_negative_numbers = true, required = true)]
    entries: Vec<String>,
}

#[derive(Args)]
struct CompleteArgs {
    /// JSON file with an array of three {"bbar","b","bx","by"} objects; `-` for stdin.
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
}

#[derive(Args)]
struct Source {
    /// Start from the unit-square configuration of this root quadruple,
    /// e.g. `--root=-6,11,14,15`.
    #[arg(long, value_name = "A,B,C,D", allow_hyphen_values = true, conflicts_with = "config")]
    root: Option<String>,
    /// Start from a JSON array of four {"bbar","b","bx","by"} rows.
    #[arg(long, value_name = "FILE")]
    config: Option<String>,
    /// Apollonian packing only (no ⊥ generators).
    #[arg(long)]
    packing: bool,
    #[arg(long, value_name = "N")]
    max_curvature: u64,
    /// Longest generator word to explore.
    #[arg(long, value_name = "L")]
    max_length: Option<usize>,
    /// Clip to x0,x1,y0,y1.
    #[arg(long, value_name = "X0,X1,Y0,Y1", allow_hyphen_values = true)]
    window: Option<String>,
    /// Worker threads for frontier expansion.
    #[arg(long, env = "GASKET_THREADS", default_value_t = 1)]
    threads: usize,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value = "jsonl")]
    format: Format,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    source: Source,
    /// Keep curvatures ≡ R (mod M).
    #[arg(long = "mod", value_name = "M", requires = "residue")]
    modulus: Option<i64>,
    #[arg(long, value_name = "R", requires = "modulus", allow_negative_numbers = true)]
    residue: Option<i64>,
    /// Write curvatures at circle centers.
    #[arg(long)]
    labels: bool,
    /// Shade disks by nesting depth.
    #[arg(long)]
    depth_shade: bool,
    /// Draw the generating configuration darker.
    #[arg(long)]
    highlight_base: bool,
    #[arg(long, value_name = "FILE")]
    out: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(default_value = "all", value_parser = ["group", "forms", "packing", "appendix", "symmetry", "all"])]
    suite: String,
    #[arg(long, default_value_t = 20_260_101)]
    seed: u64,
}

enum Failure {
    Usage(String),
    Domain(Error),
    Io(io::Error),
    /// Output was written; the result itself is a failure.
    Reported,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Out = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_ints(v: &[String]) -> Result<Vec<Integer>, Failure> {
    v.iter().map(|s| s.trim().parse::<Integer>().map_err(|_| usage(format!("not an integer: {s:?}")))).collect()
}

fn quad_of(v: &[String]) -> Result<[Integer; 4], Failure> {
    let v = parse_ints(v)?;
    v.try_into().map_err(|_| usage("expected four curvatures"))
}

fn print_json(v: &Value) -> Out {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn quad_text(b: &[Integer; 4]) -> String {
    let v: Vec<String> = b.iter().map(|x| x.to_string()).collect();
    format!("({})", v.join(", "))
}

fn check(q: &Quad) -> Out {
    let b = quad_of(&q.curvatures)?;
    let defect = descartes_defect(&b);
    let mut sorted = b.clone();
    sorted.sort();
    let report = match DescartesQuadruple::new(b.clone()) {
        Ok(d) => {
            let positive = d.orientation() == Orientation::Positive;
            let pos = if positive { d.clone() } else { d.neg() };
            let mut v = json!({
                "quadruple": quad_text(&b),
                "sorted": quad_text(&sorted),
                "valid": true,
                "defect": defect.to_string(),
                "g": d.divisor().to_string(),
                "orientation": d.orientation().to_string(),
            });
            let key = if positive { "root" } else { "root_of_negation" };
            v[key] = json!(root_quadruple(&pos)?.to_string());
            v
        }
        Err(_) => json!({
            "quadruple": quad_text(&b),
            "sorted": quad_text(&sorted),
            "valid": false,
            "defect": defect.to_string(),
        }),
    };
    print_json(&report)?;
    if report["valid"] == json!(true) {
        Ok(())
    } else {
        Err(Failure::Reported)
    }
}

fn reduce(q: &Quad) -> Out {
    let d = DescartesQuadruple::new(quad_of(&q.curvatures)?)?;
    let r = reduce_to_ground(&d)?;
    print_json(&json!({
        "quadruple": d.to_string(),
        "word": r.word.to_string(),
        "ground": r.ground.to_string(),
        "sizes": r.sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
    }))
}

fn root(a: &RootArgs) -> Out {
    if let Some(n) = a.curvature {
        let roots: Vec<String> =
            root_quadruples_with_curvature(n, !a.imprimitive).iter().map(|r| r.to_string()).collect();
        return print_json(&json!({ "curvature": -(n as i128), "primitive": !a.imprimitive, "roots": roots }));
    }
    if a.curvatures.len() != 4 {
        return Err(usage("give four curvatures or --curvature N"));
    }
    let d = DescartesQuadruple::new(quad_of(&a.curvatures)?)?;
    let r = root_quadruple(&d)?;
    print_json(&json!({ "quadruple": d.to_string(), "root": r.to_string(), "ground_family": r.is_ground_family() }))
}

fn classify(a: &ClassifyArgs) -> Out {
    let v: Vec<_> =
        a.entries.iter().map(|s| parse_rational(s)).collect::<Result<_, _>>().map_err(|e| usage(e.to_string()))?;
    let rows: [[_; 3]; 4] = std::array::from_fn(|k| std::array::from_fn(|j| v[3 * k + j].clone()));
    let m = ConfigMatrix(rows);
    let w = m.to_augmented()?;
    if !w.is_valid() {
        return Err(Error::InvalidAugmented.into());
    }
    let class = super_integrality_class(&m)?;
    let mut report = json!({ "super_integrality": class });
    if m.is_integral() {
        let (word, label) = reduced_form(&m)?;
        report["reduced_form"] = json!(label.name());
        report["label"] = json!(label.to_string());
        report["word"] = json!(word.to_string());
        report["kappa"] = json!(kappa(&m)?.0);
    }
    print_json(&report)
}

fn complete_cmd(a: &CompleteArgs) -> Out {
    let text = read_input(&a.input)?;
    let circles: Vec<Circle> = serde_json::from_str(&text).map_err(|e| usage(format!("bad triple JSON: {e}")))?;
    let circles: [Circle; 3] = circles.try_into().map_err(|_| usage("expected exactly three circles"))?;
    let t = TangentTriple::new(circles)?;
    let integral = strong_integrality_from_three(&t)?;
    let pair = complete(&t)?;
    print_json(&json!({
        "strongly_integral_triple": integral,
        "completions": pair.iter().map(|w| json!({
            "curvatures": w.curvatures().iter().map(rational_text).collect::<Vec<_>>(),
            "rows": w,
        })).collect::<Vec<_>>(),
    }))
}

fn base_config(s: &Source) -> Result<AugmentedMatrix, Failure> {
    if let Some(r) = &s.root {
        let parts: Vec<String> = r.split(',').map(String::from).collect();
        let q = DescartesQuadruple::new(quad_of(&parts)?)?;
        return Ok(locate_in_unit_square(&RootQuadruple::new(q)?)?);
    }
    if let Some(path) = &s.config {
        let text = read_input(path)?;
        let rows: Vec<Circle> = serde_json::from_str(&text).map_err(|e| usage(format!("bad config JSON: {e}")))?;
        let rows: [Circle; 4] = rows.try_into().map_err(|_| usage("expected four rows"))?;
        return Ok(AugmentedMatrix::new(rows)?);
    }
    Ok(AugmentedMatrix::d1())
}

fn budget(s: &Source) -> Result<EnumerationBudget, Failure> {
    let mut b = EnumerationBudget::new(Integer::from(s.max_curvature)).map_err(|e| usage(e.to_string()))?;
    if let Some(w) = &s.window {
        b = b.with_window(w.parse::<Window>().map_err(|e| usage(e.to_string()))?);
    }
    if let Some(l) = s.max_length {
        b = b.with_max_word_length(l);
    }
    if s.threads == 0 {
        return Err(usage("--threads must be at least 1"));
    }
    Ok(b)
}

fn enumerate(s: &Source) -> Result<(AugmentedMatrix, gasket_core::enumerate::Enumeration), Failure> {
    let b = budget(s)?;
    let w = base_config(s)?;
    let kind = if s.packing { GroupKind::Apollonian } else { GroupKind::SuperApollonian };
    let e = generate(&w, &b, kind, s.threads)?;
    Ok((w, e))
}

fn generate_cmd(a: &GenerateArgs) -> Out {
    let (_, e) = enumerate(&a.source)?;
    let mut out = BufWriter::new(io::stdout().lock());
    match a.format {
        Format::Jsonl => {
            for p in e.iter() {
                let c = &p.circle;
                let v = json!({
                    "bbar": rational_text(&c.bbar),
                    "b": rational_text(&c.b),
                    "bx": rational_text(&c.bx),
                    "by": rational_text(&c.by),
                    "depth": p.depth,
                    "witness": p.witness.to_string(),
                });
                writeln!(out, "{v}")?;
            }
        }
        Format::Csv => {
            writeln!(out, "bbar,b,bx,by,depth,witness,center_x_approx,center_y_approx,radius_approx")?;
            for p in e.iter() {
                let c = &p.circle;
                let approx = match (c.center(), c.radius()) {
                    (Some((x, y)), Some(r)) => {
                        format!("{},{},{}", to_decimal(&x, 20), to_decimal(&y, 20), to_decimal(&r, 20))
                    }
                    _ => ",,".into(),
                };
                let row = [&c.bbar, &c.b, &c.bx, &c.by].map(rational_text).join(",");
                writeln!(out, "{row},{},{},{approx}", p.depth, p.witness)?;
            }
        }
    }
    out.flush()?;
    eprintln!("{} circles", e.len());
    Ok(())
}

fn render_cmd(a: &RenderArgs) -> Out {
    let window = match &a.source.window {
        Some(w) => w.parse::<Window>().map_err(|e| usage(e.to_string()))?,
        None => return Err(usage("render needs --window")),
    };
    let filter = match (a.modulus, a.residue) {
        (Some(m), Some(r)) => {
            Some(ResidueFilter::new(Integer::from(m), Integer::from(r)).map_err(|e| usage(e.to_string()))?)
        }
        _ => None,
    };
    let (base, e) = enumerate(&a.source)?;
    let mut opts = RenderOptions::new(window);
    opts.filter = filter;
    opts.label = if a.labels { Label::Curvature } else { Label::None };
    opts.fill = if a.depth_shade { Fill::DepthShading } else { Fill::None };
    opts.highlight = a.highlight_base.then_some(base);
    let svg = render_svg(e.circles(), &opts)?;
    match &a.out {
        Some(path) => fs::write(path, svg)?,
        None => io::stdout().lock().write_all(svg.as_bytes())?,
    }
    Ok(())
}

fn locate(q: &Quad) -> Out {
    let mut b = quad_of(&q.curvatures)?;
    b.sort();
    let r = RootQuadruple::new(DescartesQuadruple::new(b)?)?;
    let w = locate_in_unit_square(&r)?;
    let (x, y) = w.row(0).center().expect("bounding circle has a center");
    print_json(&json!({
        "root": r.to_string(),
        "rows": w,
        "center": [rational_text(&x), rational_text(&y)],
        "strongly_integral": w.is_strongly_integral(),
        "unique": location_is_unique((&x, &y)),
    }))
}

fn verify_cmd(a: &VerifyArgs) -> Out {
    let suite: Suite = a.suite.parse().map_err(|e: Error| usage(e.to_string()))?;
    let report = verify::run(suite, a.seed);
    print_json(&serde_json::to_value(&report).map_err(io::Error::from)?)?;
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Reported)
    }
}

fn run(cli: &Cli) -> Out {
    match &cli.command {
        Command::Check(q) => check(q),
        Command::Reduce(q) => reduce(q),
        Command::Root(a) => root(a),
        Command::Classify(a) => classify(a),
        Command::Census => {
            io::stdout().lock().write_all(orbit_census().to_csv().as_bytes())?;
            Ok(())
        }
        Command::Complete(a) => complete_cmd(a),
        Command::Generate(a) => generate_cmd(a),
        Command::Render(a) => render_cmd(a),
        Command::Locate(q) => locate(q),
        Command::Verify(a) => verify_cmd(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Reported) => ExitCode::from(1),
        Err(Failure::Domain(e @ Error::UnboundedBudget(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
