//! `sr`: compute invariants of Stanley-Reisner rings and run the formula
//! verification suites from the command line.
//!
//! Exit status: 0 success, 1 a verification record failed, 2 the input could
//! not be parsed, 3 a precondition was not met, 4 the instance exceeds a
//! resource bound.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use stanley_reisner::formulas::{
    betti_from_h, degrees_from_h, oracle_sequence, verify_complex, verify_graph,
};
use stanley_reisner::generate::{
    parse_density, random_chordal, random_complex, random_quasi_forest, rng_from_seed,
};
use stanley_reisner::io::{complex_to_json, graph_to_json, parse_document, Document};
use stanley_reisner::report::{digest, seq};
use stanley_reisner::{
    alexander_dual, classify_resolution, dual_f_vector, hochster_betti, k_star, multiplicity,
    series_from_complex, Chordality, Error, FieldSpec, Graph, Record, SimplicialComplex,
    VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "sr",
    version,
    about = "Stanley-Reisner ring invariants and formula checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// f-vector of a complex (of the clique complex for a graph)
    Fvector(Common),
    /// h-vector of a complex
    Hvector(Common),
    /// Alexander dual, its f-vector and k*
    Dual(Common),
    /// Hilbert series, multiplicity and Hilbert polynomial
    Hilbert(Common),
    /// Graded Betti numbers from the oracle, the h-vector formula, or both
    Betti(BettiArgs),
    /// Chordality with a perfect elimination order or a chordless cycle
    Chordal(Common),
    /// Maximal cliques and the clique complex of a graph
    Clique(Common),
    /// Whether a complex is a quasi-forest, with a leaf order
    Quasiforest(Common),
    /// Run every applicable verification suite
    Verify(VerifyArgs),
    /// Generate a seeded instance document
    Gen(GenArgs),
}

#[derive(Args)]
struct Common {
    /// Path to a JSON document, `-` for stdin, or the document itself
    input: String,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Coefficient field: `q` or a prime
    #[arg(long, default_value = "q", value_parser = parse_field)]
    field: FieldSpec,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Formula,
    Both,
}

#[derive(Args)]
struct BettiArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t = Method::Oracle)]
    method: Method,
    /// Use the h-vector formula without confirming purity with the oracle
    #[arg(long)]
    assume_pure: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Chordal,
    Quasiforest,
    Complex,
}

#[derive(Args)]
struct GenSpec {
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    n: Option<usize>,
    /// Edge density for chordal graphs, `p/q` or a decimal
    #[arg(long, default_value = "1/2")]
    density: String,
    /// Number of facets for quasi-forests
    #[arg(long)]
    facets: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Instance document; omit when using --gen
    input: Option<String>,
    #[arg(long, value_enum)]
    gen: Option<Kind>,
    #[command(flatten)]
    spec: GenSpec,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    kind: Kind,
    #[command(flatten)]
    spec: GenSpec,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failed run: an error to report, or a verification failure whose output
/// has already been printed.
enum Failure {
    Error(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

type Run = Result<(), Failure>;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::VertexOutOfRange { .. } | Error::Loop(..) => 2,
        Error::GroundSetSize(n) if *n > 63 => 4,
        Error::GroundSetSize(_) => 2,
        Error::TooLarge { .. } => 4,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn read_input(input: &str) -> Result<Document, Error> {
    let text = if input.trim_start().starts_with('{') {
        input.to_string()
    } else if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(input).map_err(|e| Error::Parse(format!("{input}: {e}")))?
    };
    parse_document(&text)
}

fn read_complex(input: &str) -> Result<SimplicialComplex, Error> {
    Ok(match read_input(input)? {
        Document::Complex(c) => c,
        Document::Graph(g) => g.clique_complex(),
    })
}

fn read_graph(input: &str) -> Result<Graph, Error> {
    match read_input(input)? {
        Document::Graph(g) => Ok(g),
        Document::Complex(_) => Err(Error::Precondition("expected a graph document".into())),
    }
}

fn emit(format: Format, human: String, structured: Value) {
    match format {
        Format::Human => print!("{human}"),
        Format::Structured => println!("{structured}"),
    }
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn run(command: Command) -> Run {
    match command {
        Command::Fvector(c) => {
            let f = read_complex(&c.input)?.f_vector();
            emit(
                c.opts.format,
                format!("{}\n", seq(f.entries())),
                json!({ "f": f.entries() }),
            );
        }
        Command::Hvector(c) => {
            let h = read_complex(&c.input)?.h_vector();
            emit(
                c.opts.format,
                format!("{}\n", seq(h.entries())),
                json!({ "h": strings(h.entries()) }),
            );
        }
        Command::Dual(c) => dual(&c)?,
        Command::Hilbert(c) => hilbert(&c)?,
        Command::Betti(b) => betti(&b)?,
        Command::Chordal(c) => chordal(&c)?,
        Command::Clique(c) => {
            let g = read_graph(&c.input)?;
            let cliques: Vec<Vec<usize>> = g
                .maximal_cliques()
                .into_iter()
                .map(stanley_reisner::complex::vertices)
                .collect();
            let complex = complex_to_json(&g.clique_complex());
            emit(
                c.opts.format,
                format!("maximal cliques: {cliques:?}\nclique complex: {complex}\n"),
                json!({ "cliques": cliques, "complex": serde_json::from_str::<Value>(&complex).expect("valid json") }),
            );
        }
        Command::Quasiforest(c) => {
            let complex = read_complex(&c.input)?;
            let order = complex.leaf_order().map(|o| {
                o.into_iter()
                    .map(stanley_reisner::complex::vertices)
                    .collect::<Vec<_>>()
            });
            let human = match &order {
                Some(o) => format!("true\nleaf order: {o:?}\n"),
                None => "false\n".to_string(),
            };
            emit(
                c.opts.format,
                human,
                json!({ "quasi_forest": order.is_some(), "leaf_order": order }),
            );
        }
        Command::Verify(v) => verify(&v)?,
        Command::Gen(g) => println!("{}", generate(g.kind, &g.spec)?.to_json()),
    }
    Ok(())
}

fn dual(c: &Common) -> Run {
    let complex = read_complex(&c.input)?;
    let dual = alexander_dual(&complex);
    let n = complex.n();
    let f = complex.f_vector();
    let ks = k_star(&f, n).value();
    let ks_text = ks.map_or_else(|| "undefined".to_string(), |k| k.to_string());
    let doc = complex_to_json(&dual);
    emit(
        c.opts.format,
        format!(
            "dual: {doc}\ndual f-vector: {}\nk*: {ks_text}\n",
            seq(dual_f_vector(&f, n).entries())
        ),
        json!({
            "dual": serde_json::from_str::<Value>(&doc).expect("valid json"),
            "f": dual_f_vector(&f, n).entries(),
            "k_star": ks,
        }),
    );
    Ok(())
}

fn hilbert(c: &Common) -> Run {
    let complex = read_complex(&c.input)?;
    let series = series_from_complex(&complex)?;
    let e = multiplicity(&complex)?;
    let poly = series.hilbert_polynomial();
    emit(
        c.opts.format,
        format!(
            "series: {series}\ndimension: {}\nmultiplicity: {}\nhilbert polynomial: {poly}\n",
            series.dimension(),
            e.0
        ),
        json!({
            "numerator": strings(series.numerator.coeffs()),
            "denominator_exponent": series.denominator_exponent,
            "multiplicity": e.0,
            "hilbert_polynomial": strings(poly.coeffs()),
        }),
    );
    Ok(())
}

fn betti(args: &BettiArgs) -> Run {
    let complex = read_complex(&args.common.input)?;
    let field = args.common.opts.field;
    let format = args.common.opts.format;
    let n = complex.n();
    let codim = n - complex.krull_dim();
    let h = complex.h_vector();

    let oracle = match args.method {
        Method::Formula if args.assume_pure => None,
        _ => Some(hochster_betti(&complex, field)?),
    };
    let degrees: Option<Vec<usize>> = match &oracle {
        Some(table) => classify_resolution(table)
            .pure_degrees()
            .map(<[usize]>::to_vec),
        None => Some(degrees_from_h(&h, codim)),
    };
    let formula = match args.method {
        Method::Oracle => None,
        _ => match &degrees {
            Some(d) => Some(betti_from_h(&h, codim, d)?),
            None => {
                return Err(Error::Precondition(
                    "resolution is not pure; pass --assume-pure to apply the formula anyway".into(),
                )
                .into())
            }
        },
    };

    let mut human = String::new();
    let mut doc = serde_json::Map::new();
    if let Some(table) = oracle.as_ref().filter(|_| args.method != Method::Formula) {
        human.push_str(&table.diagram());
        doc.insert("table".into(), json!(table.triples()));
    }
    if let (Some(f), Some(d)) = (&formula, &degrees) {
        human.push_str(&format!("degrees: {}\nformula: {}\n", seq(d), seq(f)));
        doc.insert("degrees".into(), json!(d));
        doc.insert("formula".into(), json!(strings(f)));
    }
    let mut ok = true;
    if let (Method::Both, Some(table), Some(f), Some(d)) =
        (args.method, &oracle, &formula, &degrees)
    {
        let record = Record::compare(
            "betti-from-h",
            "pure-betti-formula",
            &digest(&complex_to_json(&complex)),
            seq(&oracle_sequence(table, d)),
            seq(f),
        );
        ok = record.passed();
        human.push_str(&format!("verdict: {}\n", record.verdict));
        doc.insert("verdict".into(), json!(record.verdict));
    }
    emit(format, human, Value::Object(doc));
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn chordal(c: &Common) -> Run {
    let g = match read_input(&c.input)? {
        Document::Graph(g) => g,
        Document::Complex(complex) => Graph::one_skeleton(&complex),
    };
    let (human, doc) = match g.chordality() {
        Chordality::Chordal { elimination_order } => (
            format!("true\nperfect elimination order: {elimination_order:?}\n"),
            json!({ "chordal": true, "elimination_order": elimination_order }),
        ),
        Chordality::NotChordal { cycle } => (
            format!("false\nchordless cycle: {cycle:?}\n"),
            json!({ "chordal": false, "cycle": cycle }),
        ),
    };
    emit(c.opts.format, human, doc);
    Ok(())
}

fn generate(kind: Kind, spec: &GenSpec) -> Result<Document, Error> {
    let seed = spec
        .seed
        .ok_or_else(|| Error::Precondition("--seed is required for generated instances".into()))?;
    let n = spec
        .n
        .ok_or_else(|| Error::Precondition("--n is required for generated instances".into()))?;
    Ok(match kind {
        Kind::Chordal => Document::Graph(random_chordal(n, parse_density(&spec.density)?, seed)?),
        Kind::Quasiforest => {
            let facets = spec.facets.unwrap_or((n / 2).max(1));
            Document::Complex(random_quasi_forest(n, facets, seed)?)
        }
        Kind::Complex => Document::Complex(random_complex(n, &mut rng_from_seed(seed))?),
    })
}

fn verify(v: &VerifyArgs) -> Run {
    let document = match (&v.input, v.gen) {
        (Some(input), None) => read_input(input)?,
        (None, Some(kind)) => generate(kind, &v.spec)?,
        _ => {
            return Err(Error::Precondition("give either an input document or --gen".into()).into())
        }
    };
    let field = v.opts.field;
    let report: VerificationReport = match &document {
        Document::Complex(c) => verify_complex(c, field)?,
        Document::Graph(g) => verify_graph(g, field)?,
    };
    match v.opts.format {
        Format::Human => {
            let label = match &document {
                Document::Complex(c) => complex_to_json(c),
                Document::Graph(g) => graph_to_json(g),
            };
            println!("instance: {label}");
            print!("{}", report.to_human());
        }
        Format::Structured => print!("{}", report.to_structured()),
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
