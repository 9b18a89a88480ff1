use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use flatlab::codes::{am_extended_check, am_original_check, CodeView, Side};
use flatlab::designs::design_report;
use flatlab::error::Error;
use flatlab::field::{parse_terms, Field};
use flatlab::flats::enumerate_flats;
use flatlab::func::dot;
use flatlab::metric::{
    boolean_word, covering_radius, is_extendable, metric_complement, ExtendMode, Extendability,
    WordSet,
};
use flatlab::spectra::{has_classical_walsh_spectrum, SpectrumReport};
use flatlab::VectorialFunc;

#[derive(Parser)]
#[command(name = "flatlab", version, about = "Spectral and combinatorial analysis of Boolean and vectorial functions")]
struct Cli {
    /// Worker count for exhaustive sweeps (default: FLATLAB_THREADS or 1)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Walsh and differential spectra with classification flags
    Analyze { file: PathBuf },
    /// Vanishing and nonvanishing flats with design verdicts
    Flats {
        file: PathBuf,
        /// Export one structure: 0 for the vanishing flats, hex v for NF_v
        #[arg(long)]
        v: Option<String>,
        /// Write the selected structure as an incidence file
        #[arg(long, requires = "v")]
        export: Option<PathBuf>,
    },
    /// Weight enumerators, support designs and Assmus-Mattson checks
    Code {
        file: PathBuf,
        #[command(flatten)]
        what: CodeWhat,
        /// Take supports from the dual code (with --support-design)
        #[arg(long)]
        dual: bool,
        /// Excepted weights S for the extended Assmus-Mattson check
        #[arg(long, value_delimiter = ',', requires = "am")]
        except: Vec<u64>,
    },
    /// Extendability of a bent function by one more bent coordinate
    Extend {
        file: PathBuf,
        #[arg(long, value_parser = ["exhaustive", "covering_radius", "family"])]
        mode: String,
    },
    /// Covering radius and metric complement of the associated code
    Metric {
        file: PathBuf,
        #[command(flatten)]
        what: MetricWhat,
        /// Allow exhaustive sweeps at lengths 17..=24
        #[arg(long)]
        allow_large: bool,
    },
    /// Generate a function file: univariate over GF(2^n) or Maiorana-McFarland
    Gen {
        /// Irreducible polynomial for GF(2^n), e.g. 0x5B
        #[arg(long, requires = "terms")]
        field_poly: Option<String>,
        /// Univariate term spec, e.g. "x3 + a11*x5 + 48"
        #[arg(long)]
        terms: Option<String>,
        /// Maiorana-McFarland bent function with identity pi and g = 0
        #[arg(long, conflicts_with_all = ["field_poly", "terms"])]
        mm: Option<usize>,
        /// Output path (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CodeWhat {
    /// Weight enumerator of C_F
    #[arg(long)]
    weights: bool,
    /// Design verdict for the supports of one weight class
    #[arg(long)]
    support_design: Option<usize>,
    /// Assmus-Mattson check at strength t
    #[arg(long)]
    am: Option<usize>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct MetricWhat {
    #[arg(long)]
    covering_radius: bool,
    #[arg(long)]
    complement: bool,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::DimensionTooLarge
        | Error::TooLarge
        | Error::LengthOverCap
        | Error::UnsupportedDimension => 3,
        Error::NonIntegerResult | Error::PartitionFails => 4,
        _ => 2,
    }
}

fn load_function(path: &PathBuf) -> Result<(VectorialFunc, String), Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let digest = format!("{:x}", Sha256::digest(text.as_bytes()));
    Ok((VectorialFunc::from_file_string(&text)?, digest))
}

fn design_json(s: &flatlab::designs::IncidenceStructure) -> Result<Value, Error> {
    let report = design_report(s)?;
    Ok(report.to_json())
}

fn run(cli: &Cli) -> Result<(), Error> {
    if let Some(t) = cli.threads {
        std::env::set_var("FLATLAB_THREADS", t.to_string());
    }
    let start = Instant::now();
    let (command, digest, parameters, payload): (&str, String, Value, Value) = match &cli.command {
        Command::Analyze { file } => {
            let (f, digest) = load_function(file)?;
            let report = SpectrumReport::analyze(&f);
            let mut payload = report.to_json();
            let classical = if report.is_apn {
                Some(has_classical_walsh_spectrum(&f)?)
            } else {
                None
            };
            payload["classical"] = json!(classical);
            ("analyze", digest, json!({}), payload)
        }
        Command::Flats { file, v, export } => {
            let (f, digest) = load_function(file)?;
            let family = enumerate_flats(&f)?;
            match v {
                Some(v_str) => {
                    let v = u32::from_str_radix(v_str.trim_start_matches("0x"), 16)
                        .map_err(|e| Error::Parse(format!("bad --v value: {e}")))?;
                    let s = if v == 0 { family.vf.clone() } else { family.nf_or_empty(v) };
                    if let Some(path) = export {
                        std::fs::write(path, s.to_file_string())
                            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                    }
                    let payload = json!({
                        "v": format!("{v:x}"),
                        "design": design_json(&s)?,
                        "blocks": s.block_count(),
                    });
                    ("flats", digest, json!({"v": format!("{v:x}")}), payload)
                }
                None => {
                    let mut nf = serde_json::Map::new();
                    for v in 1..1u32 << f.m() {
                        let s = family.nf_or_empty(v);
                        nf.insert(
                            format!("{v:x}"),
                            json!({"design": design_json(&s)?, "blocks": s.block_count()}),
                        );
                    }
                    let payload = json!({
                        "vf": {"design": design_json(&family.vf)?, "blocks": family.vf.block_count()},
                        "nf": nf,
                        "total_blocks": family.total_blocks(),
                    });
                    ("flats", digest, json!({}), payload)
                }
            }
        }
        Command::Code { file, what, dual, except } => {
            let (f, digest) = load_function(file)?;
            if what.weights {
                let code = CodeView::new(&f)?;
                let weights: Vec<Value> =
                    code.weight_enumerator().iter().map(|(w, c)| json!([w, c])).collect();
                let payload = json!({
                    "length": code.length(),
                    "dimension": code.dimension(),
                    "weights": weights,
                });
                ("code", digest, json!({"weights": true}), payload)
            } else if let Some(w) = what.support_design {
                let side = if *dual { Side::Dual } else { Side::Primal };
                let s = flatlab::codes::support_design(&f, w, side)?;
                let payload = json!({
                    "weight": w,
                    "dual": dual,
                    "design": design_json(&s)?,
                    "blocks": s.block_count(),
                });
                ("code", digest, json!({"support_design": w, "dual": dual}), payload)
            } else {
                let t = what.am.unwrap();
                let payload = if except.is_empty() {
                    let v = am_original_check(&f, t)?;
                    json!({
                        "variant": "original",
                        "pass": v.pass,
                        "t": v.t,
                        "d": v.d,
                        "d_dual": v.d_dual,
                        "weights_in_range": v.weights_in_range,
                        "allowed": v.allowed,
                    })
                } else {
                    let v = am_extended_check(&f, t, except)?;
                    json!({
                        "variant": "extended",
                        "pass": v.pass,
                        "t": v.t,
                        "checked_primal": v.checked_primal.iter().map(|(w, ok)| json!([w, ok])).collect::<Vec<_>>(),
                        "checked_dual": v.checked_dual.iter().map(|(w, ok)| json!([w, ok])).collect::<Vec<_>>(),
                    })
                };
                ("code", digest, json!({"am": t, "except": except}), payload)
            }
        }
        Command::Extend { file, mode } => {
            let (f, digest) = load_function(file)?;
            let m = match mode.as_str() {
                "exhaustive" => ExtendMode::Exhaustive,
                "covering_radius" => ExtendMode::CoveringRadius,
                _ => ExtendMode::Family,
            };
            let verdict = is_extendable(&f, m)?;
            let rho = if m == ExtendMode::CoveringRadius {
                Some(covering_radius(&WordSet::from_code(&f)?, false)?)
            } else {
                None
            };
            let (name, witness) = match &verdict {
                Extendability::Extendable(w) => ("extendable", Some(boolean_word(w)?)),
                Extendability::Lonely => ("lonely", None),
                Extendability::Unknown => ("unknown", None),
            };
            let payload = json!({
                "verdict": name,
                "witness": witness.map(|w| format!("{w:x}")),
                "rho": rho,
            });
            ("extend", digest, json!({"mode": mode}), payload)
        }
        Command::Metric { file, what, allow_large } => {
            let (f, digest) = load_function(file)?;
            let code = WordSet::from_code(&f)?;
            let payload = if what.covering_radius {
                json!({"rho": covering_radius(&code, *allow_large)?})
            } else {
                let complement = metric_complement(&code, *allow_large)?;
                json!({
                    "rho": covering_radius(&code, *allow_large)?,
                    "size": complement.len(),
                    "members": complement.members().iter().map(|w| format!("{w:x}")).collect::<Vec<_>>(),
                })
            };
            let params = json!({
                "covering_radius": what.covering_radius,
                "complement": what.complement,
                "allow_large": allow_large,
            });
            ("metric", digest, params, payload)
        }
        Command::Gen { field_poly, terms, mm, out } => {
            let f = if let Some(n) = mm {
                if n % 2 != 0 {
                    return Err(Error::OddDimension);
                }
                let h = n / 2;
                let table: Vec<u32> = (0..1usize << n)
                    .map(|xy| dot((xy & ((1 << h) - 1)) as u32, (xy >> h) as u32))
                    .collect();
                VectorialFunc::from_truth_table(*n, 1, table)?
            } else {
                let poly_str = field_poly
                    .as_ref()
                    .ok_or_else(|| Error::Parse("need --field-poly with --terms, or --mm".into()))?;
                let poly = u64::from_str_radix(poly_str.trim_start_matches("0x"), 16)
                    .map_err(|e| Error::Parse(format!("bad polynomial: {e}")))?;
                let n = (63 - poly.leading_zeros()) as usize;
                let field = Field::new(n, poly)?;
                field.univariate_to_table(&parse_terms(terms.as_ref().unwrap())?)?
            };
            let text = f.to_file_string();
            match out {
                Some(path) => std::fs::write(path, text)
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            return Ok(());
        }
    };
    let envelope = json!({
        "tool": "flatlab",
        "version": env!("CARGO_PKG_VERSION"),
        "input_sha256": digest,
        "command": command,
        "parameters": parameters,
        "payload": payload,
        "wall_time_ms": start.elapsed().as_millis() as u64,
    });
    let mut stdout = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut stdout, &envelope)
        .map_err(|e| Error::Parse(e.to_string()))?;
    writeln!(stdout).ok();
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(&cli) {
        eprintln!("error: {e}");
        std::process::exit(exit_code(&e));
    }
}
