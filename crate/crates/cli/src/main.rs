//! Command-line surface for the right-triangle / circle-packing library.
//!
//! Subcommands mirror the library modules: `triple` for radius quadruples,
//! `tree` for the ternary tree of primitive triples, `dce` for Descartes
//! quadruple algebra, `pack` for Apollonian packing generation, `geom` for
//! the exact plane-geometry verifications, and `table` for root-quadruple
//! tabulation. Output defaults to machine-readable JSON with fractions as
//! exact `"p/q"` strings; `--format text` switches to human-readable lines.
//!
//! Exit codes: 0 success, 1 invalid input, 2 internal invariant violation.

use std::io::Write as _;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use pytri::descartes::{
    bilateral_family, inner_curvature, pt_quadruple, recognize_bilateral, reduce_to_root,
    reflect_int, symmetric_family, table_families, verify_dce_int, RootKind, RootQuadruple,
};
use pytri::geometry::{
    altitude_foot_on_nine_point, equi_system, nine_point_family, tangent_to_side_lines,
    verify_duals,
};
use pytri::packing::{
    circles_jsonl, detect_rectangles, generate, layout_root, render_svg, seed_packing,
    RenderOptions,
};
use pytri::pythagoras::{half_angle_tangents, p_sequence, triple_from_pseq, PythTriple};
use pytri::tree::{demote, enumerate, path_of, promote_triple, Branch, Demotion};

const DEFAULT_MAX_BOUND: u64 = 1_000_000;

#[derive(Parser)]
#[command(
    name = "pytri",
    about = "Right triangles, Pythagorean triples and Apollonian circle packings, exactly",
    version,
    after_help = "Negative curvatures may be passed directly (`pytri dce root -3 4 21 28`) \
                  or after a `--` separator (`pytri dce root -- -3 4 21 28`)."
)]
struct Cli {
    /// Output format (svg applies to `pack gen` only)
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Svg,
}

#[derive(Subcommand)]
enum Cmd {
    /// Inspect a single right triple
    #[command(subcommand)]
    Triple(TripleCmd),
    /// Walk the ternary tree of primitive triples
    #[command(subcommand)]
    Tree(TreeCmd),
    /// Descartes circle-equation algebra on curvature quadruples
    #[command(subcommand)]
    Dce(DceCmd),
    /// Generate and render Apollonian packings
    #[command(subcommand)]
    Pack(PackCmd),
    /// Verify the exact plane geometry behind a triple
    #[command(subcommand)]
    Geom(GeomCmd),
    /// Tabulate packing root quadruples
    #[command(subcommand)]
    Table(TableCmd),
}

#[derive(Subcommand)]
enum TripleCmd {
    /// Radii, sequence, half-angle tangents, area and curvatures
    Info {
        #[arg(value_parser = parse_bigint)]
        a: BigInt,
        #[arg(value_parser = parse_bigint)]
        b: BigInt,
        #[arg(value_parser = parse_bigint)]
        c: BigInt,
    },
}

#[derive(Subcommand)]
enum TreeCmd {
    /// The three children of a primitive triple
    Children {
        #[arg(value_parser = parse_bigint)]
        a: BigInt,
        #[arg(value_parser = parse_bigint)]
        b: BigInt,
        #[arg(value_parser = parse_bigint)]
        c: BigInt,
    },
    /// The parent of a primitive triple (the root has none)
    Parent {
        #[arg(value_parser = parse_bigint)]
        a: BigInt,
        #[arg(value_parser = parse_bigint)]
        b: BigInt,
        #[arg(value_parser = parse_bigint)]
        c: BigInt,
    },
    /// The branch path from the root to a primitive triple
    Path {
        #[arg(value_parser = parse_bigint)]
        a: BigInt,
        #[arg(value_parser = parse_bigint)]
        b: BigInt,
        #[arg(value_parser = parse_bigint)]
        c: BigInt,
    },
    /// All primitive triples with hypotenuse up to a bound
    Ls {
        #[arg(long, value_parser = parse_bigint)]
        max_c: BigInt,
    },
}

#[derive(Subcommand)]
enum DceCmd {
    /// Check the circle equation on four curvatures
    Verify {
        #[arg(value_parser = parse_bigint, allow_negative_numbers = true, num_args = 4)]
        k: Vec<BigInt>,
    },
    /// Replace one curvature by the other solution of the quadratic
    Reflect {
        #[arg(value_parser = parse_bigint, allow_negative_numbers = true, num_args = 4)]
        k: Vec<BigInt>,
        /// Position to reflect (0..=3)
        #[arg(long)]
        index: usize,
    },
    /// Reduce a quadruple to the root of its packing
    Root {
        #[arg(value_parser = parse_bigint, allow_negative_numbers = true, num_args = 4)]
        k: Vec<BigInt>,
    },
    /// Integer solution families of the circle equation
    #[command(subcommand)]
    Families(FamilyCmd),
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// Bilaterally symmetric quadruple [-mn, m(m+n), n(m+n), m²+mn+n²]
    Bilateral {
        #[arg(value_parser = parse_bigint)]
        m: BigInt,
        #[arg(value_parser = parse_bigint)]
        n: BigInt,
    },
    /// Doubly tangent quadruple [-a, b, c, c] from coprime t > 2k
    Symmetric {
        #[arg(value_parser = parse_bigint)]
        t: BigInt,
        #[arg(value_parser = parse_bigint)]
        k: BigInt,
    },
    /// The two fixed-gap one-parameter families at index k
    Pattern {
        #[arg(value_parser = parse_bigint)]
        k: BigInt,
    },
}

#[derive(Subcommand)]
enum PackCmd {
    /// Expand a packing breadth-first up to a curvature bound
    #[command(group(ArgGroup::new("seed").required(true).args(["triple", "root"])))]
    Gen {
        /// Seed from a right triple "a,b,c"
        #[arg(long, value_parser = parse_int_list::<3>)]
        triple: Option<[BigInt; 3]>,
        /// Seed from a curvature quadruple "k1,k2,k3,k4" (one negative)
        #[arg(long, value_parser = parse_int_list::<4>, allow_hyphen_values = true)]
        root: Option<[BigInt; 4]>,
        /// Largest curvature to keep (capped by PYTRI_MAX_BOUND)
        #[arg(long, value_parser = parse_bigint)]
        bound: BigInt,
        /// Also write an SVG rendering to this file
        #[arg(long)]
        svg: Option<std::path::PathBuf>,
        /// Pixel radius of the enclosing circle in SVG output
        #[arg(long, default_value_t = 500.0)]
        px: f64,
        /// Skip curvature labels in SVG output
        #[arg(long)]
        no_labels: bool,
    },
}

#[derive(Subcommand)]
enum GeomCmd {
    /// Run every exact geometric verification on a right triple
    Verify {
        #[arg(value_parser = parse_bigint)]
        a: BigInt,
        #[arg(value_parser = parse_bigint)]
        b: BigInt,
        #[arg(value_parser = parse_bigint)]
        c: BigInt,
    },
}

#[derive(Subcommand)]
enum TableCmd {
    /// Root quadruples of every primitive triple with hypotenuse <= bound
    Roots {
        #[arg(long, value_parser = parse_bigint)]
        max_c: BigInt,
    },
}

enum Failure {
    /// Bad input: exit code 1.
    Input(String),
    /// A mathematical invariant failed to verify: exit code 2.
    Internal(String),
}

fn input<T: std::fmt::Display>(e: T) -> Failure {
    Failure::Input(e.to_string())
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.parse::<BigInt>()
        .map_err(|_| format!("`{s}` is not an integer"))
}

fn parse_int_list<const N: usize>(s: &str) -> Result<[BigInt; N], String> {
    let parts: Vec<BigInt> = s
        .split(',')
        .map(|p| parse_bigint(p.trim()))
        .collect::<Result<_, _>>()?;
    parts
        .try_into()
        .map_err(|v: Vec<BigInt>| format!("expected {N} comma-separated integers, got {}", v.len()))
}

fn big_value(v: &BigInt) -> Value {
    v.to_i64()
        .map(Value::from)
        .unwrap_or_else(|| Value::from(v.to_string()))
}

fn bigs_value(vs: &[BigInt]) -> Value {
    Value::from(vs.iter().map(big_value).collect::<Vec<_>>())
}

fn triple_value(t: &PythTriple) -> Value {
    bigs_value(&[t.a().clone(), t.b().clone(), t.c().clone()])
}

fn root_value(root: &RootQuadruple) -> Value {
    let mut obj = json!({
        "root": bigs_value(root.entries()),
        "display": root.to_string(),
    });
    match root.kind() {
        RootKind::SelfReflecting => {
            obj["kind"] = Value::from("self-reflecting");
        }
        RootKind::Pair { e } => {
            obj["kind"] = Value::from("pair");
            obj["partner"] = big_value(e);
        }
    }
    obj
}

fn quad_from(k: &[BigInt]) -> [BigInt; 4] {
    [k[0].clone(), k[1].clone(), k[2].clone(), k[3].clone()]
}

fn main() -> ExitCode {
    match std::panic::catch_unwind(run) {
        Ok(code) => code,
        Err(_) => ExitCode::from(2),
    }
}

fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Cmd::Triple(TripleCmd::Info { a, b, c }) => triple_info(cli.format, a, b, c),
        Cmd::Tree(cmd) => tree_cmd(cli.format, cmd),
        Cmd::Dce(cmd) => dce_cmd(cli.format, cmd),
        Cmd::Pack(PackCmd::Gen {
            triple,
            root,
            bound,
            svg,
            px,
            no_labels,
        }) => pack_gen(cli.format, triple, root, bound, svg, *px, *no_labels),
        Cmd::Geom(GeomCmd::Verify { a, b, c }) => geom_verify(cli.format, a, b, c),
        Cmd::Table(TableCmd::Roots { max_c }) => table_roots(cli.format, max_c),
    }
}

/// Writes to stdout, exiting quietly when the reading end of a pipe has
/// closed (e.g. `pytri ... | head`).
fn write_stdout(s: &str) {
    let mut out = std::io::stdout().lock();
    let result = out.write_all(s.as_bytes()).and_then(|()| out.flush());
    if let Err(e) = result {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("cannot write to stdout: {e}");
    }
}

fn write_line(s: &str) {
    write_stdout(s);
    write_stdout("\n");
}

fn emit(format: Format, value: &Value, text: &str) -> Result<(), Failure> {
    match format {
        Format::Json => write_line(&value.to_string()),
        Format::Text => write_line(text),
        Format::Svg => {
            return Err(Failure::Input(
                "--format svg only applies to `pack gen`".into(),
            ))
        }
    }
    Ok(())
}

fn triple_info(format: Format, a: &BigInt, b: &BigInt, c: &BigInt) -> Result<(), Failure> {
    let t = PythTriple::new(a.clone(), b.clone(), c.clone()).map_err(input)?;
    let norm = t.normalize();
    let radii = t.radii();
    let quad = pt_quadruple(&t);
    let seq = p_sequence(&norm).map_err(input)?;
    let (tan_q, tan_qp) = half_angle_tangents(&norm).map_err(input)?;
    let value = json!({
        "triple": triple_value(&t),
        "primitive": t.is_primitive(),
        "normalized": triple_value(&norm),
        "radii": bigs_value(&radii),
        "area": big_value(&t.area()),
        "curvatures": bigs_value(&quad),
        "inner_curvature": big_value(&inner_curvature(&t)),
        "sequence": bigs_value(&seq.entries()),
        "tangents": [Value::from(tan_q.to_string()), Value::from(tan_qp.to_string())],
    });
    let text = format!(
        "triple {t}\n  primitive: {}\n  normalized: {norm}\n  radii: [{},{},{},{}]\n  area: {}\n  curvatures: [{},{},{},{}]\n  inner curvature: {}\n  sequence: {seq}\n  half-angle tangents: {tan_q}, {tan_qp}",
        t.is_primitive(),
        radii[0], radii[1], radii[2], radii[3],
        t.area(),
        quad[0], quad[1], quad[2], quad[3],
        inner_curvature(&t),
    );
    emit(format, &value, &text)
}

fn tree_triple(a: &BigInt, b: &BigInt, c: &BigInt) -> Result<PythTriple, Failure> {
    PythTriple::new(a.clone(), b.clone(), c.clone()).map_err(input)
}

fn tree_cmd(format: Format, cmd: &TreeCmd) -> Result<(), Failure> {
    match cmd {
        TreeCmd::Children { a, b, c } => {
            let t = tree_triple(a, b, c)?;
            let mut kids = Vec::new();
            for branch in Branch::ALL {
                kids.push((branch, promote_triple(&t, branch).map_err(input)?));
            }
            let value = json!({
                "triple": triple_value(&t),
                "children": Value::from(
                    kids.iter()
                        .map(|(br, kid)| json!({
                            "branch": br.letter().to_string(),
                            "triple": triple_value(kid),
                        }))
                        .collect::<Vec<_>>()
                ),
            });
            let text = kids
                .iter()
                .map(|(br, kid)| format!("{}: {kid}", br.letter()))
                .collect::<Vec<_>>()
                .join("\n");
            emit(format, &value, &text)
        }
        TreeCmd::Parent { a, b, c } => {
            let t = tree_triple(a, b, c)?;
            let seq = p_sequence(&t).map_err(input)?;
            match demote(&seq) {
                Demotion::Root => emit(
                    format,
                    &json!({ "triple": triple_value(&t), "root": true }),
                    "root (no parent)",
                ),
                Demotion::Parent(parent_seq, branch) => {
                    let (_, parent) = triple_from_pseq(&parent_seq);
                    let value = json!({
                        "triple": triple_value(&t),
                        "parent": triple_value(&parent),
                        "branch": branch.letter().to_string(),
                    });
                    let text = format!("parent {parent} via branch {}", branch.letter());
                    emit(format, &value, &text)
                }
            }
        }
        TreeCmd::Path { a, b, c } => {
            let t = tree_triple(a, b, c)?;
            let path = path_of(&t).map_err(input)?;
            emit(
                format,
                &json!({ "triple": triple_value(&t), "path": path.to_string() }),
                &format!("{path}"),
            )
        }
        TreeCmd::Ls { max_c } => {
            let mut triples = enumerate(max_c);
            triples.sort_by(|x, y| (x.c(), x.a()).cmp(&(y.c(), y.a())));
            let value = json!({
                "max_c": big_value(max_c),
                "count": triples.len(),
                "triples": Value::from(triples.iter().map(triple_value).collect::<Vec<_>>()),
            });
            let text = triples
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            emit(format, &value, &format!("{} triples\n{text}", triples.len()))
        }
    }
}

fn dce_cmd(format: Format, cmd: &DceCmd) -> Result<(), Failure> {
    match cmd {
        DceCmd::Verify { k } => {
            let quad = quad_from(k);
            let ok = verify_dce_int(&quad);
            emit(
                format,
                &json!({ "quadruple": bigs_value(&quad), "satisfies_dce": ok }),
                if ok { "satisfies the circle equation" } else { "does NOT satisfy the circle equation" },
            )
        }
        DceCmd::Reflect { k, index } => {
            let quad = quad_from(k);
            let reflected = reflect_int(&quad, *index).map_err(input)?;
            emit(
                format,
                &json!({
                    "quadruple": bigs_value(&quad),
                    "index": index,
                    "reflected": bigs_value(&reflected),
                }),
                &format!(
                    "[{},{},{},{}]",
                    reflected[0], reflected[1], reflected[2], reflected[3]
                ),
            )
        }
        DceCmd::Root { k } => {
            let quad = quad_from(k);
            let root = reduce_to_root(&quad).map_err(input)?;
            let mut value = root_value(&root);
            value["quadruple"] = bigs_value(&quad);
            if let Some((m, n)) = recognize_bilateral(root.entries()) {
                value["bilateral"] = json!([big_value(&m), big_value(&n)]);
            }
            emit(format, &value, &root.to_string())
        }
        DceCmd::Families(family) => {
            let (value, text) = match family {
                FamilyCmd::Bilateral { m, n } => {
                    let quad = bilateral_family(m, n).map_err(input)?;
                    (
                        json!({
                            "m": big_value(m),
                            "n": big_value(n),
                            "quadruple": bigs_value(&quad),
                        }),
                        format!("[{},{},{},{}]", quad[0], quad[1], quad[2], quad[3]),
                    )
                }
                FamilyCmd::Symmetric { t, k } => {
                    let quad = symmetric_family(t, k).map_err(input)?;
                    (
                        json!({
                            "t": big_value(t),
                            "k": big_value(k),
                            "quadruple": bigs_value(&quad),
                        }),
                        format!("[{},{},{},{}]", quad[0], quad[1], quad[2], quad[3]),
                    )
                }
                FamilyCmd::Pattern { k } => {
                    let fams = table_families(k).map_err(input)?;
                    (
                        json!({
                            "k": big_value(k),
                            "families": [bigs_value(&fams[0]), bigs_value(&fams[1])],
                        }),
                        fams.iter()
                            .map(|f| format!("[{},{},{},{}]", f[0], f[1], f[2], f[3]))
                            .collect::<Vec<_>>()
                            .join("\n"),
                    )
                }
            };
            emit(format, &value, &text)
        }
    }
}

fn max_bound() -> Result<BigInt, Failure> {
    match std::env::var("PYTRI_MAX_BOUND") {
        Ok(raw) => raw
            .parse::<BigInt>()
            .map_err(|_| Failure::Input(format!("PYTRI_MAX_BOUND=`{raw}` is not an integer"))),
        Err(_) => Ok(BigInt::from(DEFAULT_MAX_BOUND)),
    }
}

fn pack_gen(
    format: Format,
    triple: &Option<[BigInt; 3]>,
    root: &Option<[BigInt; 4]>,
    bound: &BigInt,
    svg_path: &Option<std::path::PathBuf>,
    px: f64,
    no_labels: bool,
) -> Result<(), Failure> {
    let cap = max_bound()?;
    if bound > &cap {
        return Err(Failure::Input(format!(
            "bound {bound} exceeds the safety cap {cap} (set PYTRI_MAX_BOUND to raise it)"
        )));
    }
    let seed = if let Some([a, b, c]) = triple {
        let t = PythTriple::new(a.clone(), b.clone(), c.clone()).map_err(input)?;
        seed_packing(&t)
    } else {
        let quad = root.as_ref().expect("clap group guarantees a seed");
        layout_root(quad).map_err(input)?
    };
    let packing = generate(&seed, bound).map_err(input)?;

    let opts = RenderOptions {
        enclosing_radius_px: px,
        labels: !no_labels,
        ..RenderOptions::default()
    };
    if let Some(path) = svg_path {
        let svg = render_svg(&packing, &opts)
            .map_err(|e| Failure::Internal(e.to_string()))?;
        let mut file = std::fs::File::create(path)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
        file.write_all(svg.as_bytes())
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
    }

    match format {
        Format::Json => write_stdout(&circles_jsonl(&packing)),
        Format::Svg => {
            let svg = render_svg(&packing, &opts)
                .map_err(|e| Failure::Internal(e.to_string()))?;
            write_stdout(&svg);
        }
        Format::Text => {
            let mut text = format!(
                "root {} bound {} circles {} quadruples {}",
                packing.root,
                packing.bound,
                packing.circles.len(),
                packing.quadruples.len()
            );
            for &i in &packing.sorted_indices() {
                let c = &packing.circles[i];
                let (x, y) = c.center();
                text += &format!("\n  k={} center=({}, {}) depth={}", c.k, x, y, c.depth);
            }
            for r in &detect_rectangles(&packing) {
                text += &format!(
                    "\n  rectangle [{},{},{},{}] -> triple {}",
                    r.curvatures[0], r.curvatures[1], r.curvatures[2], r.curvatures[3], r.triple
                );
            }
            write_line(&text);
        }
    }
    Ok(())
}

fn geom_verify(format: Format, a: &BigInt, b: &BigInt, c: &BigInt) -> Result<(), Failure> {
    let t = PythTriple::new(a.clone(), b.clone(), c.clone()).map_err(input)?;
    let report = verify_duals(&t);
    let equi_ok = equi_system(&t)
        .iter()
        .all(|circle| tangent_to_side_lines(&t, circle));
    let norm = t.normalize();
    let family = nine_point_family(&norm);
    let foot_ok = altitude_foot_on_nine_point(&norm);
    let all_ok = report.all_pass() && equi_ok && foot_ok;

    let value = json!({
        "triple": triple_value(&t),
        "dual_claims": {
            "leg_contacts_collinear": report.leg_contacts_collinear,
            "mirror_swaps_slant_contacts": report.mirror_swaps_slant_contacts,
            "shared_contact_set": report.shared_contact_set,
            "orthogonality_pattern": report.orthogonality_pattern,
        },
        "equi_circles_tangent_to_sides": equi_ok,
        "nine_point": {
            "children": Value::from(family.children.iter().map(triple_value).collect::<Vec<_>>()),
            "parent": family.parent.as_ref().map(triple_value).unwrap_or(Value::Null),
            "parent_raw": bigs_value(&family.parent_raw),
            "altitude_foot_on_circle": foot_ok,
        },
        "all_pass": all_ok,
    });
    let text = format!(
        "triple {t}\n  dual systems: {}\n  equi-circles tangent to side lines: {}\n  nine-point children: L={} M={} R={}\n  nine-point parent: {}\n  altitude foot on nine-point circle: {}",
        if report.all_pass() { "PASS" } else { report.first_failure().unwrap_or("FAIL") },
        if equi_ok { "PASS" } else { "FAIL" },
        family.children[0], family.children[1], family.children[2],
        family.parent.as_ref().map(|p| p.to_string()).unwrap_or_else(|| format!(
            "degenerate [{},{},{}]",
            family.parent_raw[0], family.parent_raw[1], family.parent_raw[2]
        )),
        if foot_ok { "PASS" } else { "FAIL" },
    );
    emit(format, &value, &text)?;
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Internal(
            "a geometric verification failed for valid input".into(),
        ))
    }
}

fn table_roots(format: Format, max_c: &BigInt) -> Result<(), Failure> {
    let mut by_root: std::collections::BTreeMap<[BigInt; 4], (RootQuadruple, Vec<PythTriple>)> =
        Default::default();
    let mut triples = enumerate(max_c);
    triples.sort_by(|x, y| (x.c(), x.a()).cmp(&(y.c(), y.a())));
    for t in triples {
        let root = reduce_to_root(&pt_quadruple(&t))
            .map_err(|e| Failure::Internal(format!("triple {t} produced a bad quadruple: {e}")))?;
        by_root
            .entry(root.entries().clone())
            .or_insert_with(|| (root, Vec::new()))
            .1
            .push(t);
    }
    let roots: Vec<&(RootQuadruple, Vec<PythTriple>)> = by_root.values().collect();
    let value = json!({
        "max_c": big_value(max_c),
        "count": roots.len(),
        "roots": Value::from(
            roots
                .iter()
                .map(|(root, triples)| {
                    let mut v = root_value(root);
                    v["triples"] =
                        Value::from(triples.iter().map(triple_value).collect::<Vec<_>>());
                    if let Some((m, n)) = recognize_bilateral(root.entries()) {
                        v["bilateral"] = json!([big_value(&m), big_value(&n)]);
                    }
                    v
                })
                .collect::<Vec<_>>()
        ),
    });
    let text = roots
        .iter()
        .map(|(root, triples)| {
            format!(
                "{root}  <=  {}",
                triples
                    .iter()
                    .map(|t| t.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        })
        .collect::<Vec<_>>()
        .join("\n");
    emit(format, &value, &format!("{} roots\n{text}", roots.len()))
}
