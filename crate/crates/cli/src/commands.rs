use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use kpieri_core::verify::FiberReport;
use kpieri_core::{
    enumerate_x, enumerate_y, gorenstein_check, hilbert_level, labellings, markov_check, swap_relations, weyl_tuple,
    GeneratorTuple, InterlacingPattern, LeveledPattern, Limits, Orientation, WeylInvariant,
};
use serde::Serialize;

use crate::{Cli, Command, Format, GenSet, Shape};

pub struct Output {
    pub body: String,
    pub code: u8,
}

struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

fn render<T: Serialize>(format: Format, value: &T, text: String, table: Option<Table>) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string(value)? + "\n"),
        Format::Text => Ok(text),
        Format::Csv => {
            let Some(table) = table else {
                bail!("csv output is only available for gens, relations and hilbert");
            };
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&table.header)?;
            for row in &table.rows {
                w.write_record(row)?;
            }
            Ok(String::from_utf8(w.into_inner()?)?)
        }
    }
}

fn ok(body: String) -> Result<Output> {
    Ok(Output { body, code: 0 })
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn run(cli: &Cli) -> Result<Output> {
    let limits = Limits::new(cli.max_objects);
    let f = cli.output;
    match &cli.command {
        Command::Dim { m, r, s, level, witnesses } => dim(f, &limits, *m, r, s, *level, *witnesses),
        Command::Gens { shape, set } => gens(f, &limits, shape, *set),
        Command::Relations { shape, leveled } => relations(f, &limits, shape, *leveled),
        Command::Decompose { m, pattern, dual, level } => decompose(f, *m, pattern, *dual, *level),
        Command::Weyl { shape, i_set, j_set, pair } => weyl(f, shape, i_set, j_set, pair),
        Command::Markov { shape, leveled, max_degree } => markov(f, &limits, shape, *leveled, *max_degree),
        Command::Gorenstein { shape, leveled, max_degree, samples, seed } => {
            gorenstein(f, &limits, shape, *leveled, *max_degree, *samples, *seed)
        }
        Command::Hilbert { shape, level } => hilbert(f, &limits, shape, *level),
    }
}

#[derive(Serialize)]
struct DimReport<'a> {
    m: usize,
    r: &'a [u64],
    s: &'a [u64],
    #[serde(skip_serializing_if = "Option::is_none")]
    level: Option<u64>,
    dimension: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    witnesses: Option<Vec<Vec<String>>>,
}

fn dim(f: Format, limits: &Limits, m: usize, r: &[u64], s: &[u64], level: Option<u64>, list: bool) -> Result<Output> {
    let count = labellings(m, r, s, level, list, limits)?;
    let witnesses = count.witnesses.map(|ws| ws.iter().map(|w| w.iter().map(ToString::to_string).collect()).collect());
    let report = DimReport { m, r, s, level, dimension: count.dimension, witnesses };
    let mut text = format!("dimension {}\n", report.dimension);
    for w in report.witnesses.iter().flatten() {
        writeln!(text, "  edges {}", w.join(" | "))?;
    }
    ok(render(f, &report, text, None)?)
}

#[derive(Serialize)]
struct TupleRow {
    tuple: Vec<usize>,
    r: Vec<u64>,
    s: Vec<u64>,
}

#[derive(Serialize)]
struct GensReport {
    m: usize,
    a: usize,
    b: usize,
    set: &'static str,
    count: usize,
    tuples: Vec<TupleRow>,
}

fn gens(f: Format, limits: &Limits, shape: &Shape, set: GenSet) -> Result<Output> {
    let (tuples, name) = match set {
        GenSet::X => (enumerate_x(shape.m, shape.a, shape.b, limits)?, "X"),
        GenSet::Y => (enumerate_y(shape.m, shape.a, shape.b, limits)?, "Y"),
    };
    let rows: Vec<TupleRow> = tuples
        .iter()
        .map(|t| {
            let w = t.weights(false);
            TupleRow { tuple: t.entries().to_vec(), r: w.r, s: w.s }
        })
        .collect();
    let text =
        rows.iter().map(|row| format!("({})  r=({}) s=({})\n", join(&row.tuple), join(&row.r), join(&row.s))).collect();
    let table = Table {
        header: vec!["tuple", "r", "s"],
        rows: rows.iter().map(|row| vec![join(&row.tuple), join(&row.r), join(&row.s)]).collect(),
    };
    let report = GensReport { m: shape.m, a: shape.a, b: shape.b, set: name, count: rows.len(), tuples: rows };
    ok(render(f, &report, text, Some(table))?)
}

#[derive(Serialize)]
struct RelationsReport {
    m: usize,
    a: usize,
    b: usize,
    leveled: bool,
    count: usize,
    relations: Vec<String>,
}

fn relations(f: Format, limits: &Limits, shape: &Shape, leveled: bool) -> Result<Output> {
    let rels = swap_relations(shape.m, shape.a, shape.b, leveled, limits)?;
    let text = rels.iter().map(|r| format!("{r}\n")).collect();
    let table = Table {
        header: vec!["lhs_1", "lhs_2", "rhs_1", "rhs_2"],
        rows: rels
            .iter()
            .map(|r| [&r.lhs.0, &r.lhs.1, &r.rhs.0, &r.rhs.1].iter().map(|t| t.to_string()).collect())
            .collect(),
    };
    let report = RelationsReport {
        m: shape.m,
        a: shape.a,
        b: shape.b,
        leveled,
        count: rels.len(),
        relations: rels.iter().map(ToString::to_string).collect(),
    };
    ok(render(f, &report, text, Some(table))?)
}

#[derive(Serialize)]
struct GeneratorCount {
    generator: String,
    count: u64,
}

#[derive(Serialize)]
struct DecomposeReport {
    m: usize,
    orientation: &'static str,
    pattern: String,
    level: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    level_bound: Option<u64>,
    boundary_1: String,
    boundary_2: String,
    generators: Vec<GeneratorCount>,
}

fn decompose(f: Format, m: usize, pattern: &str, dual: bool, level: Option<u64>) -> Result<Output> {
    let orientation = if dual { Orientation::Dual } else { Orientation::Normal };
    let p = InterlacingPattern::parse(orientation, pattern).context("reading --pattern")?;
    if p.rank() != m {
        bail!("pattern has rank {}, but --m is {m}", p.rank());
    }
    let gens = match level {
        Some(k) => LeveledPattern::new(p.clone(), k)?.decompose(),
        None => kpieri_core::decompose(&p),
    };
    let report = DecomposeReport {
        m,
        orientation: if dual { "dual" } else { "normal" },
        pattern: p.to_string(),
        level: p.level(),
        level_bound: level,
        boundary_1: p.boundary_1().to_string(),
        boundary_2: p.boundary_2().to_string(),
        generators: gens.iter().map(|(g, &n)| GeneratorCount { generator: g.to_string(), count: n }).collect(),
    };
    let text = report.generators.iter().map(|g| format!("{} x{}\n", g.generator, g.count)).collect();
    ok(render(f, &report, text, None)?)
}

#[derive(Serialize)]
struct WeylReport {
    m: usize,
    a: usize,
    b: usize,
    invariant: String,
    tuple: Vec<usize>,
    r: Vec<u64>,
    s: Vec<u64>,
}

fn weyl(
    f: Format,
    shape: &Shape,
    i_set: &Option<Vec<usize>>,
    j_set: &Option<Vec<usize>>,
    pair: &Option<Vec<usize>>,
) -> Result<Output> {
    let (which, name) = match (i_set, j_set, pair) {
        (Some(i), None, None) => (WeylInvariant::ALegs(i.clone()), format!("Delta_I I={{{}}}", join(i))),
        (None, Some(j), None) => (WeylInvariant::BLegs(j.clone()), format!("Delta_J J={{{}}}", join(j))),
        (None, None, Some(p)) if p.len() == 2 => (WeylInvariant::Pair(p[0], p[1]), format!("P_{},{}", p[0], p[1])),
        (None, None, Some(_)) => bail!("--pair takes two indices `i,j`"),
        _ => bail!("give exactly one of --i-set, --j-set, --pair"),
    };
    let t: GeneratorTuple = weyl_tuple(shape.m, shape.a, shape.b, &which)?;
    let w = t.weights(false);
    let report =
        WeylReport { m: shape.m, a: shape.a, b: shape.b, invariant: name, tuple: t.entries().to_vec(), r: w.r, s: w.s };
    let text = format!("{} -> ({})  r=({}) s=({})\n", report.invariant, t, join(&report.r), join(&report.s));
    ok(render(f, &report, text, None)?)
}

#[derive(Serialize)]
struct MarkovReport {
    m: usize,
    a: usize,
    b: usize,
    leveled: bool,
    max_degree: usize,
    fibers: usize,
    largest_fiber: usize,
    all_connected: bool,
    reports: Vec<FiberReport>,
}

fn markov(f: Format, limits: &Limits, shape: &Shape, leveled: bool, max_degree: usize) -> Result<Output> {
    let reports = markov_check(shape.m, shape.a, shape.b, leveled, max_degree, limits)?;
    let all_connected = reports.iter().all(|r| r.connected);
    let mut text = format!(
        "{} fibers up to degree {max_degree}, {}\n",
        reports.len(),
        if all_connected { "all connected" } else { "DISCONNECTED fibers found" }
    );
    for r in reports.iter().filter(|r| !r.connected) {
        let (x, y) = r.disconnected_pair.as_ref().expect("disconnected fiber has a pair");
        writeln!(text, "  {} size {}: {} / {}", r.multidegree, r.fiber_size, join(x), join(y))?;
    }
    let report = MarkovReport {
        m: shape.m,
        a: shape.a,
        b: shape.b,
        leveled,
        max_degree,
        fibers: reports.len(),
        largest_fiber: reports.iter().map(|r| r.fiber_size).max().unwrap_or(0),
        all_connected,
        reports,
    };
    let body = render(f, &report, text, None)?;
    Ok(Output { body, code: if all_connected { 0 } else { 2 } })
}

#[allow(clippy::too_many_arguments)]
fn gorenstein(
    f: Format,
    limits: &Limits,
    shape: &Shape,
    leveled: bool,
    max_degree: usize,
    samples: usize,
    seed: u64,
) -> Result<Output> {
    let r = gorenstein_check(shape.m, shape.a, shape.b, leveled, max_degree, samples, seed, limits)?;
    let mut text = format!("gluing condition: {}\n", if r.condition_holds { "holds" } else { "fails" });
    for c in &r.comparisons {
        writeln!(
            text,
            "  edge {}: {}{} vs {}{}{}",
            c.position,
            c.left,
            c.left_level.map(|k| format!(" at level {k}")).unwrap_or_default(),
            c.right,
            c.right_level.map(|k| format!(" at level {k}")).unwrap_or_default(),
            if c.matches { "" } else { "  MISMATCH" }
        )?;
    }
    match (&r.witness_multidegree, r.witness_degree) {
        (Some(w), Some(d)) => writeln!(text, "interior witness: {w} (degree {d}, {} minimal)", r.minimal_interior)?,
        _ => writeln!(text, "interior witness: none found{}", if r.search_truncated { " (size guard)" } else { "" })?,
    }
    writeln!(
        text,
        "sampled p - w in S: {} ({} interior samples, seed {})",
        if r.sampled_interior_ok { "ok" } else { "FAILED" },
        r.samples_tested,
        r.seed
    )?;
    let violation = !r.degenerate && (!r.sampled_interior_ok || r.minimal_interior > 1);
    let body = render(f, &r, text, None)?;
    Ok(Output { body, code: if violation { 2 } else { 0 } })
}

#[derive(Serialize)]
struct LevelRow {
    level: u64,
    dimension: u64,
}

#[derive(Serialize)]
struct HilbertReport {
    m: usize,
    a: usize,
    b: usize,
    levels: Vec<LevelRow>,
}

fn hilbert(f: Format, limits: &Limits, shape: &Shape, level: u64) -> Result<Output> {
    let levels = (0..=level)
        .map(|k| Ok(LevelRow { level: k, dimension: hilbert_level(shape.m, shape.a, shape.b, k, limits)? }))
        .collect::<Result<Vec<_>>>()?;
    let text = levels.iter().map(|l| format!("K={} {}\n", l.level, l.dimension)).collect();
    let table = Table {
        header: vec!["level", "dimension"],
        rows: levels.iter().map(|l| vec![l.level.to_string(), l.dimension.to_string()]).collect(),
    };
    let report = HilbertReport { m: shape.m, a: shape.a, b: shape.b, levels };
    ok(render(f, &report, text, Some(table))?)
}
