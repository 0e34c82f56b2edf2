use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use serde_json::{json, Value};

use permclass::class5::{
    check_structure, count_class5, count_class5_indec, decompose, StructureCheck,
};
use permclass::enumerate::{big_to_json, count_avoiders, wilf_search};
use permclass::oeis::{oeis_get, Source};
use permclass::recurrence::{count_via_recurrence, RecurrenceTable};
use permclass::schroder::{phi, phi_inverse, SchroderPath};
use permclass::series::{gf_catalog, CatalogSeries, DEFAULT_ORDER};
use permclass::{
    checks, CountingSequence, Error, PatternClass, PatternSet, Permutation, SizeGuard,
};

/// Writes a line to stdout; a closed pipe is not an error worth reporting.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

/// Largest n the Wilf search runs at without --limit-override.
const SEARCH_LIMIT: usize = 8;

#[derive(Parser)]
#[command(
    name = "permclass",
    version,
    about = "Enumerate and cross-check five Wilf-equivalent triples of 4-letter patterns"
)]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Use the bundled OEIS fixtures (the default).
    #[arg(long, global = true, conflicts_with = "online")]
    offline: bool,
    /// Fetch OEIS b-files over the network, through the local cache.
    #[arg(long, global = true)]
    online: bool,
    /// Allow brute-force sizes beyond the built-in limits.
    #[arg(long, global = true)]
    limit_override: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Number of avoiders of one length.
    Count(CountArgs),
    /// Brute-force counting sequences for n = 0..=N.
    Sequence(SequenceArgs),
    /// Search all triples of 4-letter patterns for a counting sequence.
    Search(SearchArgs),
    /// Coefficients of a named generating function.
    Series(SeriesArgs),
    /// The permutation to Schroder path bijection and its inverse.
    Bijection(BijectionArgs),
    /// Direct counts and the structure decomposition for pi5.
    Class5(Class5Args),
    /// Counts from the first-entry recurrence (pi1, pi2, pi3).
    Recurrence(RecurrenceArgs),
    /// Run the acceptance suite; exit status 1 on any failure.
    Verify(VerifyArgs),
    /// Look up an OEIS b-file.
    Oeis(OeisArgs),
}

#[derive(Args)]
struct CountArgs {
    /// pi1..pi5
    #[arg(long, conflicts_with = "patterns")]
    class: Option<PatternClass>,
    /// Comma-separated patterns, e.g. 3241,3421,4321
    #[arg(long)]
    patterns: Option<String>,
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct SequenceArgs {
    /// "all" or a comma-separated list such as pi1,pi4
    #[arg(long, default_value = "all")]
    classes: String,
    #[arg(long, default_value_t = 8)]
    n: usize,
}

#[derive(Args)]
struct SearchArgs {
    /// An OEIS id or comma-separated terms starting at n = 0.
    #[arg(long, default_value = "A111279")]
    target: String,
    #[arg(long, default_value_t = 8)]
    n: usize,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long)]
    name: String,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    n: usize,
}

#[derive(Args)]
struct BijectionArgs {
    /// Only phi is provided.
    #[arg(long, default_value = "phi")]
    map: String,
    /// Permutation to map, e.g. "3 1 4 2".
    #[arg(long, required_unless_present = "inverse")]
    input: Option<String>,
    /// Map a Schroder path back to its permutation.
    #[arg(long, requires = "path")]
    inverse: bool,
    /// Path in N/D/E letters; use "" for the empty path.
    #[arg(long)]
    path: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Class5Args {
    #[arg(long, value_name = "N")]
    count: Option<usize>,
    #[arg(long, value_name = "PERM")]
    decompose: Option<String>,
    #[arg(long, value_name = "N")]
    indec: Option<usize>,
}

#[derive(Args)]
struct RecurrenceArgs {
    #[arg(long, default_value = "pi1")]
    class: PatternClass,
    #[arg(long, default_value_t = 8)]
    n: usize,
    /// Print the a_n(i), b_n(i) tables instead of the totals.
    #[arg(long)]
    tables: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated criterion numbers; all when omitted.
    #[arg(long)]
    only: Option<String>,
}

#[derive(Args)]
struct OeisArgs {
    #[arg(long)]
    id: String,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Network { .. } | Error::Io(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let format = cli.format;
    let guard = SizeGuard::with_override(cli.limit_override);
    let source = if cli.online {
        Source::Online
    } else {
        Source::Offline
    };
    match &cli.command {
        Command::Count(args) => count(args, guard, format),
        Command::Sequence(args) => sequence(args, guard, format),
        Command::Search(args) => search(args, cli.limit_override, source, format),
        Command::Series(args) => series(args, format),
        Command::Bijection(args) => bijection(args, format),
        Command::Class5(args) => class5(args, format),
        Command::Recurrence(args) => recurrence(args, format),
        Command::Verify(args) => verify(args, format),
        Command::Oeis(args) => oeis(args, source, format),
    }
}

fn parse_perm(s: &str) -> Result<Permutation, Error> {
    let s = s.trim();
    if !s.contains([' ', ',']) && s.len() > 1 {
        return Permutation::from_compact(s);
    }
    s.replace(',', " ").parse()
}

fn number(s: &str) -> Value {
    serde_json::from_str(s).expect("decimal integer")
}

fn print_json(v: &Value) {
    out!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

/// One named sequence of integers, indexed from `offset`.
fn print_sequence(name: &str, offset: i64, terms: &[String], format: Format) {
    match format {
        Format::Json => print_json(&json!({
            "name": name,
            "offset": offset,
            "terms": terms.iter().map(|t| number(t)).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            out!("n,value");
            for (i, t) in terms.iter().enumerate() {
                out!("{},{t}", offset + i as i64);
            }
        }
        Format::Table => {
            let width = (offset + terms.len() as i64).to_string().len().max(1);
            out!("{name}");
            for (i, t) in terms.iter().enumerate() {
                out!("{:>width$}  {t}", offset + i as i64);
            }
        }
    }
}

fn strings(v: &[BigUint]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn count(args: &CountArgs, guard: SizeGuard, format: Option<Format>) -> Outcome {
    guard.check(args.n)?;
    let (name, set) = match (&args.class, &args.patterns) {
        (Some(c), _) => (c.name().to_string(), c.patterns()),
        (None, Some(list)) => {
            let parts: Vec<&str> = list.split(',').map(str::trim).collect();
            let set = PatternSet::from_compact(&parts)?;
            (set.to_string(), set)
        }
        (None, None) => return Err(Failure::Usage("give --class or --patterns".into())),
    };
    let c = count_avoiders(args.n, &set);
    match format.unwrap_or(Format::Table) {
        Format::Json => print_json(&json!({ "name": name, "n": args.n, "count": c })),
        Format::Csv => out!("n,value\n{},{c}", args.n),
        Format::Table => out!("{c}"),
    }
    Ok(())
}

fn sequence(args: &SequenceArgs, guard: SizeGuard, format: Option<Format>) -> Outcome {
    let classes: Vec<PatternClass> = if args.classes.trim() == "all" {
        PatternClass::ALL.to_vec()
    } else {
        args.classes
            .split(',')
            .map(|s| s.trim().parse::<PatternClass>())
            .collect::<Result<_, _>>()?
    };
    let mut rows = Vec::new();
    for class in classes {
        let seq = permclass::enumerate::counting_sequence(&class.patterns(), args.n, guard)?;
        rows.push((class, seq));
    }
    match format.unwrap_or(Format::Table) {
        Format::Json => print_json(&Value::Array(
            rows.iter()
                .map(|(c, s)| json!({ "name": c.name(), "terms": s.values.iter().map(big_to_json).collect::<Vec<_>>() }))
                .collect(),
        )),
        Format::Csv => {
            out!("name,n,value");
            for (c, s) in &rows {
                for (n, v) in s.values.iter().enumerate() {
                    out!("{},{n},{v}", c.name());
                }
            }
        }
        Format::Table => {
            for (c, s) in &rows {
                out!("{}  {s}", c.name());
            }
        }
    }
    Ok(())
}

fn target_terms(target: &str, nmax: usize, source: Source) -> Result<CountingSequence, Failure> {
    if target.starts_with('A') {
        let seq = oeis_get(target, source)?;
        let values = (0..=nmax as i64)
            .map(|n| {
                seq.term(n)
                    .and_then(|t| BigUint::try_from(t.clone()).ok())
                    .ok_or_else(|| {
                        Failure::Usage(format!("{target} has no nonnegative term at n = {n}"))
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(CountingSequence { values });
    }
    let values = target
        .split(',')
        .map(|t| {
            t.trim().parse::<BigUint>().map_err(|_| {
                Failure::Usage(format!("target term {t:?} is not a nonnegative integer"))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CountingSequence { values })
}

fn search(
    args: &SearchArgs,
    limit_override: bool,
    source: Source,
    format: Option<Format>,
) -> Outcome {
    if args.n > SEARCH_LIMIT && !limit_override {
        return Err(Error::LimitExceeded {
            requested: args.n,
            limit: SEARCH_LIMIT,
        }
        .into());
    }
    let target = target_terms(&args.target, args.n, source)?;
    let report = wilf_search(args.n, &target)?;
    match format.unwrap_or(Format::Table) {
        Format::Json => print_json(&report.to_json()),
        Format::Csv => {
            out!("representative,orbit_size,class");
            for m in &report.matches {
                let class = m.class.map_or("", |c| c.name());
                out!("\"{}\",{},{class}", m.representative, m.orbit_size);
            }
        }
        Format::Table => {
            out!(
                "{} orbits ({} triples), {} matching {} for n <= {}",
                report.orbits_examined,
                report.orbit_size_total,
                report.matches.len(),
                report.target,
                report.nmax
            );
            for m in &report.matches {
                let class = m.class.map_or("-", |c| c.name());
                out!("{}  orbit size {}  {class}", m.representative, m.orbit_size);
            }
        }
    }
    Ok(())
}

fn series(args: &SeriesArgs, format: Option<Format>) -> Outcome {
    let format = format.unwrap_or(Format::Table);
    match gf_catalog(&args.name, args.n)? {
        CatalogSeries::Univariate(s) => {
            let terms: Vec<String> = s
                .integer_coefficients(&args.name)?
                .iter()
                .map(BigInt::to_string)
                .collect();
            print_sequence(&args.name, 0, &terms, format);
        }
        CatalogSeries::Bivariate(b) => {
            let mut rows: Vec<Vec<String>> = Vec::new();
            for n in 0..=b.order() {
                let row: Vec<String> = b.row(n).iter().map(|c| c.to_string()).collect();
                let end = row.iter().rposition(|c| c != "0").map_or(0, |i| i + 1);
                rows.push(row[..end].to_vec());
            }
            match format {
                Format::Json => print_json(&json!({
                    "name": args.name,
                    "terms": rows.iter().map(|r| r.iter().map(|c| number(c)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                })),
                Format::Csv => {
                    out!("n,k,value");
                    for (n, r) in rows.iter().enumerate() {
                        for (k, c) in r.iter().enumerate() {
                            out!("{n},{k},{c}");
                        }
                    }
                }
                Format::Table => {
                    out!(
                        "{} (row n lists the coefficients of y^0, y^1, ...)",
                        args.name
                    );
                    for (n, r) in rows.iter().enumerate() {
                        out!("{}", format!("{n:>3}  {}", r.join(" ")).trim_end());
                    }
                }
            }
        }
    }
    Ok(())
}

fn bijection(args: &BijectionArgs, format: Option<Format>) -> Outcome {
    if args.map != "phi" {
        return Err(Failure::Usage(format!(
            "unknown map {:?}; only phi is available",
            args.map
        )));
    }
    let (input, output) = if args.inverse {
        let text = args.path.as_deref().unwrap_or("");
        let path: SchroderPath = text.parse()?;
        (path.to_string(), phi_inverse(&path)?.to_string())
    } else {
        let p = parse_perm(args.input.as_deref().unwrap_or(""))?;
        (p.to_string(), phi(&p)?.to_string())
    };
    match format.unwrap_or(Format::Table) {
        Format::Json => print_json(
            &json!({ "map": "phi", "inverse": args.inverse, "input": input, "output": output }),
        ),
        Format::Csv => out!("input,output\n\"{input}\",\"{output}\""),
        Format::Table => out!("{output}"),
    }
    Ok(())
}

fn class5(args: &Class5Args, format: Option<Format>) -> Outcome {
    if let Some(text) = &args.decompose {
        let p = parse_perm(text)?;
        if p.is_empty() {
            return Err(Failure::Usage(
                "decompose needs a nonempty permutation".into(),
            ));
        }
        let d = decompose(&p);
        let violated = match check_structure(&p) {
            StructureCheck::Holds => Value::Null,
            StructureCheck::Violates(prop) => json!(prop.to_string()),
        };
        let mut v = serde_json::to_value(&d).expect("serializable");
        v["permutation"] = json!(p.to_string());
        v["avoids_pi5"] = json!(violated.is_null());
        v["violated_property"] = violated;
        match format.unwrap_or(Format::Json) {
            Format::Json => print_json(&v),
            Format::Csv => {
                out!("field,value");
                for (k, val) in v.as_object().expect("object") {
                    out!("{k},\"{val}\"");
                }
            }
            Format::Table => {
                for (k, val) in v.as_object().expect("object") {
                    out!("{k:<18} {val}");
                }
            }
        }
        return Ok(());
    }
    let (name, n, f): (&str, usize, fn(usize) -> BigUint) = match (args.count, args.indec) {
        (Some(n), _) => ("class5_count", n, count_class5),
        (None, Some(n)) => ("class5_indec", n, count_class5_indec),
        (None, None) => unreachable!("clap requires one of the group"),
    };
    let start = if name == "class5_indec" { 1 } else { 0 };
    let terms: Vec<String> = (start..=n).map(|k| f(k).to_string()).collect();
    print_sequence(name, start as i64, &terms, format.unwrap_or(Format::Table));
    Ok(())
}

fn recurrence(args: &RecurrenceArgs, format: Option<Format>) -> Outcome {
    let format = format.unwrap_or(Format::Csv);
    if !args.tables {
        let seq = count_via_recurrence(args.class, args.n)?;
        print_sequence(args.class.name(), 0, &strings(&seq.values), format);
        return Ok(());
    }
    let tables = RecurrenceTable::tables(args.class, args.n)?;
    match format {
        Format::Json => print_json(&Value::Array(
            tables
                .iter()
                .map(|t| {
                    json!({
                        "n": t.n,
                        "a": t.a.iter().map(big_to_json).collect::<Vec<_>>(),
                        "b": t.b.iter().map(big_to_json).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )),
        Format::Csv => {
            out!("n,i,a,b");
            for t in &tables {
                for (i, (a, b)) in t.a.iter().zip(&t.b).enumerate() {
                    out!("{},{},{a},{b}", t.n, i + 1);
                }
            }
        }
        Format::Table => {
            for t in &tables {
                out!("n = {:<3} a: {}", t.n, strings(&t.a).join(" "));
                out!("        b: {}", strings(&t.b).join(" "));
            }
        }
    }
    Ok(())
}

fn verify(args: &VerifyArgs, format: Option<Format>) -> Outcome {
    let ids: Vec<usize> = match &args.only {
        None => (1..=checks::count()).collect(),
        Some(list) => list
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|id| (1..=checks::count()).contains(id))
                    .ok_or_else(|| Failure::Usage(format!("no acceptance criterion {s:?}")))
            })
            .collect::<Result<_, _>>()?,
    };
    let format = format.unwrap_or(Format::Table);
    if format == Format::Csv {
        out!("id,name,passed,seconds");
    }
    let mut outcomes = Vec::new();
    for id in ids {
        let o = checks::run(id).expect("valid id");
        match format {
            Format::Table => out!("{o}"),
            Format::Csv => out!(
                "{},{},{},{:.3}",
                o.id,
                o.name,
                o.ok(),
                o.elapsed.as_secs_f64()
            ),
            Format::Json => {}
        }
        outcomes.push(o);
    }
    if format == Format::Json {
        print_json(&Value::Array(
            outcomes
                .iter()
                .map(|o| {
                    json!({
                        "id": o.id,
                        "name": o.name,
                        "passed": o.ok(),
                        "detail": o.detail,
                        "seconds": o.elapsed.as_secs_f64(),
                        "budget_seconds": o.budget.map(|b| b.as_secs()),
                    })
                })
                .collect(),
        ));
    }
    let failed = outcomes.iter().filter(|o| !o.ok()).count();
    if failed > 0 {
        return Err(Failure::Check(format!(
            "{failed} of {} criteria failed",
            outcomes.len()
        )));
    }
    Ok(())
}

fn oeis(args: &OeisArgs, source: Source, format: Option<Format>) -> Outcome {
    let seq = oeis_get(&args.id, source)?;
    let terms: Vec<String> = seq.terms.iter().map(BigInt::to_string).collect();
    print_sequence(&seq.id, seq.offset, &terms, format.unwrap_or(Format::Table));
    Ok(())
}
