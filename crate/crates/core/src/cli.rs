//! The `cluster-nc` command line: argument parsing, output formatting and
//! exit codes (0 ok, 1 verification failed, 2 usage, 3 internal error).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cluster::{self, ClusterComplex, Face};
use crate::error::Error;
use crate::group::CoxeterGroup;
use crate::noncrossing::{Chain, EdgeLabel, NcLattice, NcmPoset};
use crate::roots::{RootId, RootSystem};
use crate::triangles::{self, IntPoly};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "cluster-nc", version, about = "Generalized cluster complexes and m-divisible noncrossing partitions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Positive roots, ρ-order, bipartition, exponents and Coxeter numbers.
    Roots(Common),
    /// The noncrossing partition lattice NC(γ).
    Nc(Common),
    /// The m-divisible noncrossing partitions NC_(m)(γ).
    Ncm {
        #[command(flatten)]
        common: Common,
        /// Print only the number of elements.
        #[arg(long)]
        count: bool,
    },
    /// Face counts f_{k,l} of the generalized cluster complex.
    FTriangle(Common),
    /// Möbius generating polynomial of NC_(m)(γ).
    MTriangle(Common),
    /// Maximal falling chains of NC_(m)(γ) and the facets they encode.
    FallingChains(Common),
    /// Test a set of colored roots for being a face.
    CheckFace {
        #[command(flatten)]
        common: Common,
        /// Comma-separated `+i@c` and `-j` tokens.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        face: String,
    },
    /// Compare both sides of the F = M identity.
    VerifyFm(Common),
}

#[derive(Args, Debug)]
pub struct Common {
    /// Root system, e.g. A2, B3, A1xA2.
    #[arg(long)]
    pub system: String,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub m: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: EXIT_OK }
    }
}

/// Parses `args` (including the program name), writes to `out` and `err`
/// and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::InvalidRank { .. }
        | Error::InvalidM(_)
        | Error::ColorOutOfRange { .. }
        | Error::NotAlmostPositive(_) => EXIT_USAGE,
        _ => EXIT_INTERNAL,
    }
}

fn load(system: &str) -> crate::Result<Arc<CoxeterGroup>> {
    let rs: RootSystem = system.parse()?;
    Ok(Arc::new(CoxeterGroup::new(Arc::new(rs))))
}

fn execute(cmd: &Command) -> crate::Result<Output> {
    match cmd {
        Command::Roots(c) => roots(c),
        Command::Nc(c) => nc(c),
        Command::Ncm { common, count } => ncm(common, *count),
        Command::FTriangle(c) => f_triangle(c),
        Command::MTriangle(c) => m_triangle(c),
        Command::FallingChains(c) => falling_chains(c),
        Command::CheckFace { common, face } => check_face(common, face),
        Command::VerifyFm(c) => verify_fm(c),
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn rho(root: RootId) -> usize {
    root.0 + 1
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn order_token(rs: &RootSystem, r: RootId) -> String {
    match rs.negative_simple_index(r) {
        Some(j) => format!("-{}", j + 1),
        None => format!("+{}", rho(r)),
    }
}

fn roots(c: &Common) -> crate::Result<Output> {
    let g = load(&c.system)?;
    let rs = g.root_system();
    let n = rs.rank();
    let plus: Vec<usize> = (0..n).filter(|&j| rs.is_in_plus(j)).map(|j| j + 1).collect();
    let minus: Vec<usize> = (0..n).filter(|&j| !rs.is_in_plus(j)).map(|j| j + 1).collect();
    let order: Vec<String> = rs.almost_positive().iter().map(|&r| order_token(rs, r)).collect();
    let components: Vec<Value> = rs
        .components()
        .iter()
        .map(|comp| {
            json!({
                "type": comp.cartan().to_string(),
                "coxeterNumber": comp.coxeter_number(),
                "exponents": comp.exponents(),
            })
        })
        .collect();
    let text = match c.format {
        Format::Json => json_text(&json!({
            "system": rs.spec().to_string(),
            "rank": n,
            "components": components,
            "bourbaki": (0..n).map(|j| rs.bourbaki_label(j)).collect::<Vec<_>>(),
            "plus": plus,
            "minus": minus,
            "positiveRoots": rs.positive_roots().map(|r| json!({"rho": rho(r), "coords": rs.coords(r)})).collect::<Vec<_>>(),
            "order": order,
        })),
        Format::Csv => {
            let mut s = String::from("rho,coords\n");
            for r in rs.positive_roots() {
                writeln!(s, "{},{}", rho(r), join(rs.coords(r), " ")).unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "system {}", rs.spec()).unwrap();
            for comp in rs.components() {
                writeln!(
                    s,
                    "component {}: h = {}, exponents {}",
                    comp.cartan(),
                    comp.coxeter_number(),
                    join(comp.exponents(), " ")
                )
                .unwrap();
            }
            writeln!(
                s,
                "simple roots σ1..σ{n} are Bourbaki nodes {}",
                join((0..n).map(|j| rs.bourbaki_label(j)), " ")
            )
            .unwrap();
            writeln!(s, "plus {}", join(&plus, " ")).unwrap();
            writeln!(s, "minus {}", join(&minus, " ")).unwrap();
            writeln!(s, "positive roots {}", rs.num_positive()).unwrap();
            for r in rs.positive_roots() {
                writeln!(s, "  ρ{} = ({})", rho(r), join(rs.coords(r), ",")).unwrap();
            }
            writeln!(s, "order {}", order.join(" < ")).unwrap();
            s
        }
    };
    Ok(Output::ok(text))
}

fn word(w: &[RootId]) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.iter().map(|&r| format!("R{}", rho(r))).collect()
    }
}

fn nc(c: &Common) -> crate::Result<Output> {
    let g = load(&c.system)?;
    let l = NcLattice::noncrossing(g);
    let words = l.words();
    let text = match c.format {
        Format::Json => json_text(&json!({
            "system": l.group().root_system().spec().to_string(),
            "elements": (0..l.len()).map(|i| json!({
                "rank": l.rank(i),
                "word": words[i].iter().map(|&r| rho(r)).collect::<Vec<_>>(),
                "perm": l.element(i).perm(),
            })).collect::<Vec<_>>(),
            "covers": l.covers().iter().map(|c| json!({
                "lower": c.lower, "upper": c.upper, "rootIndex": rho(c.label),
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut s = String::from("id,rank,word\n");
            for i in 0..l.len() {
                writeln!(s, "{i},{},{}", l.rank(i), word(&words[i])).unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "elements {}", l.len()).unwrap();
            writeln!(s, "rank profile {}", join(l.rank_profile(), " ")).unwrap();
            for i in 0..l.len() {
                writeln!(s, "{i} rank {} {}", l.rank(i), word(&words[i])).unwrap();
            }
            for c in l.covers() {
                writeln!(s, "{} -> {} R{}", c.lower, c.upper, rho(c.label)).unwrap();
            }
            s
        }
    };
    Ok(Output::ok(text))
}

fn tuple_text(p: &NcmPoset, words: &[Vec<RootId>], i: usize) -> String {
    format!("({})", join(p.tuple(i).iter().map(|&x| word(&words[x])), ","))
}

fn ncm(c: &Common, count: bool) -> crate::Result<Output> {
    let p = NcmPoset::noncrossing(load(&c.system)?, c.m)?;
    let words = p.lattice().words();
    let text = match (c.format, count) {
        (Format::Json, true) => json_text(&json!({ "count": p.len() })),
        (Format::Csv, true) => format!("count\n{}\n", p.len()),
        (Format::Text, true) => format!("{}\n", p.len()),
        (Format::Json, false) => json_text(&serde_json::to_value(p.export()).expect("export serializes")),
        (Format::Csv, false) => {
            let mut s = String::from("id,rank,tuple\n");
            for i in 0..p.len() {
                writeln!(s, "{i},{},\"{}\"", p.rank(i), tuple_text(&p, &words, i)).unwrap();
            }
            s
        }
        (Format::Text, false) => {
            let mut s = String::new();
            writeln!(s, "elements {}", p.len()).unwrap();
            writeln!(s, "rank profile {}", join(p.rank_profile(), " ")).unwrap();
            for i in 0..p.len() {
                writeln!(s, "{i} rank {} {}", p.rank(i), tuple_text(&p, &words, i)).unwrap();
            }
            for cv in p.covers() {
                writeln!(s, "{} -> {} {}", cv.lower, cv.upper, label_text(&p, &cv.label)).unwrap();
            }
            s
        }
    };
    Ok(Output::ok(text))
}

fn poly_output(c: &Common, name: &str, polys: &[(&str, &IntPoly)]) -> String {
    match c.format {
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("system".into(), json!(c.system.to_uppercase()));
            obj.insert("m".into(), json!(c.m));
            for (key, p) in polys {
                obj.insert((*key).into(), json!(triangles::poly_json(p)));
            }
            json_text(&Value::Object(obj))
        }
        Format::Csv => {
            let mut s = String::from("polynomial,xdeg,ydeg,coeff\n");
            for (key, p) in polys {
                for (dx, dy, v) in p.terms() {
                    writeln!(s, "{key},{dx},{dy},{v}").unwrap();
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (key, p) in polys {
                if *key == "polynomial" {
                    writeln!(s, "{name} = {p}").unwrap();
                } else {
                    writeln!(s, "{key}: {p}").unwrap();
                }
            }
            s
        }
    }
}

fn f_triangle(c: &Common) -> crate::Result<Output> {
    let cx = ClusterComplex::build(load(&c.system)?, c.m)?;
    let f = triangles::f_triangle(&cx.summary(None));
    Ok(Output::ok(poly_output(c, "F(x,y)", &[("polynomial", &f)])))
}

fn m_triangle(c: &Common) -> crate::Result<Output> {
    let p = NcmPoset::noncrossing(load(&c.system)?, c.m)?;
    let m = triangles::m_triangle(&p);
    let shifted = triangles::m_triangle_shifted(&p);
    Ok(Output::ok(poly_output(
        c,
        "M(x,y)",
        &[("polynomial", &m), ("shifted", &shifted)],
    )))
}

fn label_text(p: &NcmPoset, l: &EdgeLabel) -> String {
    let slots: Vec<String> = (1..=p.m())
        .map(|s| if s == l.slot { format!("R{}", rho(l.root)) } else { "1".into() })
        .collect();
    format!("({})", slots.join(","))
}

fn chain_face_tokens(p: &NcmPoset, chain: &Chain) -> Vec<String> {
    chain
        .labels
        .iter()
        .map(|l| format!("+{}@{}", rho(l.root), p.m() - l.slot + 1))
        .collect()
}

fn falling_chains(c: &Common) -> crate::Result<Output> {
    let p = NcmPoset::noncrossing(load(&c.system)?, c.m)?;
    let chains = p.maximal_falling_chains();
    for ch in &chains {
        p.chain_to_facet(ch)?;
    }
    let text = match c.format {
        Format::Json => json_text(&json!({
            "system": p.group().root_system().spec().to_string(),
            "m": c.m,
            "count": chains.len(),
            "chains": chains.iter().map(|ch| json!({
                "elements": ch.elements,
                "labels": ch.labels.iter().map(|l| json!({"slot": l.slot, "rootIndex": rho(l.root)})).collect::<Vec<_>>(),
                "face": chain_face_tokens(&p, ch).join(","),
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut s = String::from("labels,face\n");
            for ch in &chains {
                let labels = join(ch.labels.iter().map(|l| label_text(&p, l)), "->");
                writeln!(s, "\"{labels}\",\"{}\"", chain_face_tokens(&p, ch).join(",")).unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for ch in &chains {
                let labels = join(ch.labels.iter().map(|l| label_text(&p, l)), "->");
                writeln!(s, "{labels} | {}", chain_face_tokens(&p, ch).join(",")).unwrap();
            }
            s
        }
    };
    Ok(Output::ok(text))
}

fn check_face(c: &Common, text: &str) -> crate::Result<Output> {
    let g = load(&c.system)?;
    let rs = g.root_system().clone();
    let face = Face::parse(&rs, c.m, text)?;
    let p = NcmPoset::noncrossing(g.clone(), c.m)?;
    let cx = ClusterComplex::build(g.clone(), c.m)?;
    let factors = cluster::face_tuple_factors(&g, &face, c.m)?;
    let rank: usize = cluster::face_tuple(&g, &face, c.m)?
        .iter()
        .map(|w| g.absolute_length(w))
        .sum();
    let criterion = cluster::face_by_ncm_criterion(&p, &face)?;
    let pairwise = cx.is_face(&face)?;
    let slot_roots = |f: &Vec<RootId>| f.iter().map(|&r| rho(rs.positive_part(r))).collect::<Vec<_>>();
    let out = match c.format {
        Format::Json => json_text(&json!({
            "face": face.format(&rs),
            "tuple": factors.iter().map(slot_roots).collect::<Vec<_>>(),
            "rank": rank,
            "criterion": criterion,
            "pairwise": pairwise,
        })),
        Format::Csv => format!(
            "face,tuple,rank,criterion,pairwise\n\"{}\",\"{}\",{rank},{criterion},{pairwise}\n",
            face.format(&rs),
            tuple_words(&rs, &factors)
        ),
        Format::Text => format!(
            "face {{{}}}\ntuple {}\nrank {rank}\ncriterion {criterion}\npairwise {pairwise}\n",
            face.format(&rs),
            tuple_words(&rs, &factors)
        ),
    };
    Ok(Output {
        text: out,
        code: if criterion == pairwise { EXIT_OK } else { EXIT_INTERNAL },
    })
}

fn tuple_words(rs: &RootSystem, factors: &[Vec<RootId>]) -> String {
    let ws: Vec<String> = factors
        .iter()
        .map(|f| word(&f.iter().map(|&r| rs.positive_part(r)).collect::<Vec<_>>()))
        .collect();
    format!("({})", ws.join(","))
}

fn verify_fm(c: &Common) -> crate::Result<Output> {
    let report = triangles::verify_fm(load(&c.system)?, c.m)?;
    let mut text = poly_output(c, "", &[("lhs", &report.lhs), ("rhs", &report.rhs)]);
    match c.format {
        Format::Json => {
            let mut v: Value = serde_json::from_str(&text).expect("own json parses");
            v["holds"] = json!(report.holds);
            text = json_text(&v);
        }
        Format::Csv => {}
        Format::Text => {
            writeln!(text, "{}", if report.holds { "identity holds" } else { "identity FAILS" }).unwrap();
        }
    }
    Ok(Output {
        text,
        code: if report.holds { EXIT_OK } else { EXIT_FAILED },
    })
}
