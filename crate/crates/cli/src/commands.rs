use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use sombor_core::bounds::{check, fuzz_bounds, BoundId, BoundReport, FuzzConfig, Instance};
use sombor_core::closed_forms::{catalogue, sweep_verify, table_rows, verified_subset, Source, SweepRanges, Verdict};
use sombor_core::edgelist::{read_graph, to_edge_list, to_json};
use sombor_core::error::BoundError;
use sombor_core::ops::LinkSpec;
use sombor_core::report::{
    bounds_csv, bounds_jsonl, fmt_g17, summary_csv, table_csv, table_json, verify_csv, verify_json,
};
use sombor_core::{all_indices, Family, FamilySpec, Graph, IndexId};

use crate::{
    BoundsArgs, BoundsFormat, ComputeArgs, FamilyArgs, GenerateArgs, GraphFormat, ReportFormat, TableArgs, ValueFormat,
    VerifyArgs,
};

pub enum CliError {
    Input(String),
    Precondition(String),
    Io(String),
}

impl CliError {
    pub fn tag(&self) -> &'static str {
        match self {
            CliError::Input(_) => "input",
            CliError::Precondition(_) => "precondition",
            CliError::Io(_) => "io",
        }
    }

    pub fn message(&self) -> String {
        let (CliError::Input(m) | CliError::Precondition(m) | CliError::Io(m)) = self;
        m.replace('\n', " ")
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            _ => 2,
        }
    }
}

fn input<E: ToString>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

impl From<BoundError> for CliError {
    fn from(e: BoundError) -> Self {
        match e {
            BoundError::Precondition(_) => CliError::Precondition(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

type CliResult = Result<u8, CliError>;

const EXIT_VIOLATION: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

fn family_spec(args: &FamilyArgs) -> Result<FamilySpec, CliError> {
    let name = args
        .family
        .as_deref()
        .ok_or_else(|| CliError::Input("--family is required".into()))?;
    let family = Family::from_str(name).map_err(input)?;
    let n = args
        .n
        .ok_or_else(|| CliError::Input(format!("{name}: missing parameter n")))?;
    let spec = FamilySpec { family, n, m: args.m };
    spec.validate().map_err(input)?;
    Ok(spec)
}

fn family_graph(args: &FamilyArgs) -> Result<(Graph, String), CliError> {
    let spec = family_spec(args)?;
    let g = sombor_core::generate(&spec).map_err(input)?;
    let label = match spec.m {
        Some(m) if spec.family.takes_m() => format!("{} n={} m={m}", spec.family.cli_name(), spec.n),
        _ => format!("{} n={}", spec.family.cli_name(), spec.n),
    };
    Ok((g, label))
}

fn load_graph(input_path: &Option<PathBuf>, family: &FamilyArgs) -> Result<(Graph, String), CliError> {
    match input_path {
        Some(path) => Ok((read_graph(path).map_err(input)?, path.display().to_string())),
        None => family_graph(family),
    }
}

pub fn generate(args: GenerateArgs) -> CliResult {
    let (g, _) = family_graph(&args.family)?;
    let text = match args.format {
        GraphFormat::Edgelist => to_edge_list(&g),
        GraphFormat::Json => to_json(&g) + "\n",
    };
    let counts = format!("vertices={} edges={}", g.vertex_count(), g.edge_count());
    match &args.out {
        Some(path) => {
            emit(Some(path), &text)?;
            println!("{counts}");
        }
        None => {
            emit(None, &text)?;
            eprintln!("{counts}");
        }
    }
    Ok(0)
}

fn parse_indices(list: &str) -> Result<Vec<IndexId>, CliError> {
    if list.trim() == "all" {
        return Ok(IndexId::ALL.to_vec());
    }
    list.split(',')
        .map(|s| IndexId::from_str(s.trim()).map_err(input))
        .collect()
}

pub fn compute(args: ComputeArgs) -> CliResult {
    let (g, _) = load_graph(&args.input, &args.family)?;
    let ids = parse_indices(&args.indices)?;
    let values = all_indices(&g).map_err(input)?;
    let profile = g.degree_pair_profile().map_err(input)?;
    let text = match args.format {
        ValueFormat::Text => {
            let mut out = String::new();
            for id in &ids {
                out.push_str(&format!("{}\t{}\n", id.name(), fmt_g17(values[id].value)));
            }
            if args.profile {
                out.push_str(&format!("profile\t{profile}\n"));
            }
            out
        }
        ValueFormat::Json => {
            let mut obj = serde_json::Map::new();
            for id in &ids {
                let number = serde_json::Number::from_str(&fmt_g17(values[id].value)).expect("finite value");
                obj.insert(id.name().to_string(), number.into());
            }
            if args.profile {
                let classes: Vec<[usize; 3]> = profile.iter().map(|((a, b), c)| [a, b, c]).collect();
                obj.insert(
                    "profile".into(),
                    serde_json::to_value(classes).expect("integers serialize"),
                );
            }
            serde_json::to_string_pretty(&obj).expect("object serializes") + "\n"
        }
    };
    emit(None, &text)?;
    Ok(0)
}

fn parse_families(list: &str) -> Result<Vec<Family>, CliError> {
    match list.trim() {
        "all" => Ok(Family::ALL.to_vec()),
        "cactus" => Ok(Family::CACTUS_CHAINS.to_vec()),
        other => other
            .split(',')
            .map(|s| Family::from_str(s.trim()).map_err(input))
            .collect(),
    }
}

fn parse_source(s: &str) -> Result<Source, CliError> {
    Source::from_str(s.trim()).map_err(CliError::Input)
}

pub fn verify(args: VerifyArgs) -> CliResult {
    let families = parse_families(&args.families)?;
    let sources = match &args.sources {
        Some(list) => list.split(',').map(parse_source).collect::<Result<Vec<_>, _>>()?,
        None => Source::ALL.to_vec(),
    };
    let pool = if args.verified_only {
        verified_subset()
    } else {
        catalogue()
    };
    let cells: Vec<_> = pool
        .into_iter()
        .filter(|c| families.contains(&c.family) && sources.contains(&c.source))
        .collect();
    if cells.is_empty() {
        return Err(CliError::Input("no closed-form cells for the selected families".into()));
    }
    let ranges = SweepRanges { n: args.n, m: args.m };
    let rows = sweep_verify(&cells, &ranges, args.tol).map_err(input)?;
    let text = match args.format {
        ReportFormat::Csv => verify_csv(&rows),
        ReportFormat::Json => verify_json(&rows),
    };
    emit(args.out.as_deref(), &text)?;
    let mismatches = rows.iter().filter(|r| r.verdict == Verdict::Mismatch).count();
    eprintln!("cells={} rows={} mismatches={mismatches}", cells.len(), rows.len());
    Ok(if args.fail_on_mismatch && mismatches > 0 {
        EXIT_MISMATCH
    } else {
        0
    })
}

fn parse_monomer(s: &str) -> Result<Graph, CliError> {
    let parts: Vec<&str> = s.split(':').collect();
    let bad = || CliError::Input(format!("monomer {s:?}: expected family:n[:m]"));
    if !(2..=3).contains(&parts.len()) {
        return Err(bad());
    }
    let args = FamilyArgs {
        family: Some(parts[0].to_string()),
        n: Some(parts[1].parse().map_err(|_| bad())?),
        m: match parts.get(2) {
            Some(m) => Some(m.parse().map_err(|_| bad())?),
            None => None,
        },
    };
    Ok(family_graph(&args)?.0)
}

fn parse_anchor(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Input(format!("anchor {s:?}: expected x:y"));
    let (x, y) = s.split_once(':').ok_or_else(bad)?;
    Ok((x.parse().map_err(|_| bad())?, y.parse().map_err(|_| bad())?))
}

fn link_instance(args: &BoundsArgs) -> Result<(Instance, String), CliError> {
    let monomers = args
        .monomer
        .iter()
        .map(|s| parse_monomer(s))
        .collect::<Result<Vec<_>, _>>()?;
    let anchors = if args.anchor.is_empty() {
        vec![(0, 0); monomers.len()]
    } else {
        args.anchor
            .iter()
            .map(|s| parse_anchor(s))
            .collect::<Result<Vec<_>, _>>()?
    };
    let spec = LinkSpec::new(monomers, anchors.clone()).map_err(input)?;
    let anchors: Vec<String> = anchors.iter().map(|(x, y)| format!("{x}:{y}")).collect();
    let label = format!("link {} anchors {}", args.monomer.join(" "), anchors.join(" "));
    Ok((Instance::Link { spec }, label))
}

fn single_instance(bound: BoundId, args: &BoundsArgs) -> Result<(Instance, String), CliError> {
    if bound.is_link() {
        return link_instance(args);
    }
    let (graph, label) = load_graph(&args.input, &args.family)?;
    if bound.is_sandwich() {
        return Ok((Instance::Graph { graph }, label));
    }
    let edge = match args.edge.as_deref() {
        Some(&[u, v]) => (u, v),
        _ => return Err(CliError::Input(format!("{bound} needs --edge U V"))),
    };
    let label = format!("{label} e={}-{}", edge.0, edge.1);
    Ok((Instance::Edge { graph, edge }, label))
}

fn render_reports(reports: &[BoundReport], format: BoundsFormat) -> String {
    match format {
        BoundsFormat::Jsonl => bounds_jsonl(reports),
        BoundsFormat::Csv => bounds_csv(reports),
    }
}

pub fn bounds(args: BoundsArgs) -> CliResult {
    let reports = if args.check == "fuzz" {
        let seed = args
            .seed
            .ok_or_else(|| CliError::Input("fuzz needs an explicit --seed".into()))?;
        let config = FuzzConfig {
            seed,
            count: args.count,
            min_vertices: args.min_n,
            max_vertices: args.max_n,
        };
        let outcome = fuzz_bounds(&config)?;
        emit(None, &summary_csv(&outcome.summary))?;
        if let Some(path) = &args.out {
            emit(Some(path), &render_reports(&outcome.reports, args.format))?;
        }
        outcome.reports
    } else {
        let bound = BoundId::from_str(&args.check).map_err(CliError::Input)?;
        let (instance, label) = single_instance(bound, &args)?;
        let report = check(bound, &instance)?.described(label);
        let reports = vec![report];
        emit(args.out.as_deref(), &render_reports(&reports, args.format))?;
        reports
    };
    let counterexamples = reports.iter().filter(|r| r.is_counterexample()).count();
    if counterexamples > 0 {
        eprintln!("violations={counterexamples}");
        return Ok(EXIT_VIOLATION);
    }
    Ok(0)
}

pub fn table(args: TableArgs) -> CliResult {
    let source = parse_source(&args.which)?;
    let ranges = SweepRanges { n: args.n, m: args.m };
    let rows = table_rows(source, &ranges, args.tol).map_err(input)?;
    if rows.is_empty() {
        return Err(CliError::Input(format!(
            "no valid parameter points for {source} in the given ranges"
        )));
    }
    let text = match args.format {
        ReportFormat::Csv => table_csv(&rows),
        ReportFormat::Json => table_json(&rows),
    };
    emit(args.out.as_deref(), &text)?;
    Ok(0)
}
