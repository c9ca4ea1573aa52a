use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context as _;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use chirotrop::catalog::{embedded_classes, read_catalog};
use chirotrop::charts::verify_charts;
use chirotrop::dressian::{compute_chirotropical_dressian, ChiDressian, Context, FanReport};
use chirotrop::fan::check_two_determined;
use chirotrop::rays::{embedded_rays, ingest_rays, RayFile};
use chirotrop::realizability::{covering_check, fano_incompatibility_check, verify_48_counterexample, CheckReport};
use chirotrop::{expand_orbit, full_orbit, generate_three_term, Chirotope, ChirotopeSet, Error, RelationSet};

const EXIT_FORMAT: u8 = 2;
const EXIT_INGESTION: u8 = 3;
const EXIT_VERIFY: u8 = 4;
const EXIT_PURITY: u8 = 5;

#[derive(Parser)]
#[command(name = "chirotrop", version, about = "Chirotropical Dressians from ray data")]
struct Cli {
    /// Cap on worker threads.
    #[arg(long, global = true, env = "CHIROTROP_THREADS")]
    threads: Option<usize>,
    /// Emit machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the three-term Plücker relations.
    Relations {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Chirotope utilities.
    #[command(subcommand)]
    Chirotope(ChirotopeCmd),
    /// Compute chirotropical Dressians from a ray file.
    Dressian(DressianArgs),
    /// Re-run a realizability or structure check.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Chart checks for X^χ(3,6).
    #[command(subcommand)]
    Charts(ChartsCmd),
}

#[derive(Args)]
struct ChiSource {
    /// Sign string in lexicographic subset order, e.g. `++++-+...`.
    #[arg(long)]
    chirotope: Option<String>,
    /// Catalog file (one sign string per line).
    #[arg(long)]
    chirotope_file: Option<PathBuf>,
    /// Negative subsets, e.g. `(356,456)` or `+`.
    #[arg(long)]
    negative_triples: Option<String>,
    /// Every class of the embedded catalog for (k, n).
    #[arg(long)]
    all_classes: bool,
}

#[derive(Subcommand)]
enum ChirotopeCmd {
    /// Check the Grassmann–Plücker sign condition.
    Validate {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        src: ChiSource,
    },
    /// Expand classes under relabelling and reorientation.
    Orbit {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        src: ChiSource,
        /// Keep every reoriented copy instead of one per reorientation class.
        #[arg(long)]
        full: bool,
        /// Write the orbit here in catalog format.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct DressianArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    /// Ray file `k n m` + rows; defaults to the embedded rays when available.
    #[arg(long)]
    rays: Option<PathBuf>,
    #[command(flatten)]
    src: ChiSource,
    /// Directory for one fan file per chirotope and `summary.tsv`.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Fano cones are incompatible with every chirotope class.
    Fano {
        #[arg(long, default_value_t = 7)]
        n: usize,
        /// Class catalog; required for n = 8.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Every compatible ray pair is covered by some chirotope.
    Covering {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long)]
        rays: Option<PathBuf>,
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Allow the slow n = 7 run.
        #[arg(long)]
        extended: bool,
    },
    /// The rank-4 chirotope on 8 elements has a non-realizable cone.
    #[command(name = "counterexample-48")]
    Counterexample48,
    /// Every face of every class fan is a facet or a pairwise intersection.
    TwoDetermined {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long)]
        rays: Option<PathBuf>,
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ChartsCmd {
    /// Sign stability and exact parameter round-trip.
    Verify {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// An error carrying its exit code.
struct Failure {
    code: u8,
    err: anyhow::Error,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Ingestion(_) | Error::InvalidChirotope { .. } => EXIT_INGESTION,
            Error::Purity { .. } => EXIT_PURITY,
            Error::CorruptFace { .. } | Error::NonGeneric(_) => EXIT_VERIFY,
            _ => EXIT_FORMAT,
        };
        Self { code, err: e.into() }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(err: anyhow::Error) -> Self {
        Self { code: 1, err }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        set_threads(t);
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.err);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(feature = "parallel")]
fn set_threads(t: usize) {
    let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
}

#[cfg(not(feature = "parallel"))]
fn set_threads(_: usize) {}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Relations { k, n } => relations(*k, *n, cli.json),
        Command::Chirotope(c) => chirotope_cmd(c, cli.json),
        Command::Dressian(a) => dressian(a, cli.json),
        Command::Verify(v) => verify(v, cli.json),
        Command::Charts(ChartsCmd::Verify { samples, seed }) => {
            report(&verify_charts(*samples, *seed)?, cli.json)
        }
    }
}

fn relations(k: usize, n: usize, json: bool) -> Outcome {
    let rels = generate_three_term(k, n)?;
    if json {
        let rows: Vec<_> = rels
            .iter()
            .map(|r| serde_json::json!({ "base": r.base(), "quad": r.quad() }))
            .collect();
        println!("{}", serde_json::to_string_pretty(&rows).context("serialising relations")?);
    } else {
        for r in &rels {
            println!("{}", r.describe());
        }
        println!("{} relations", rels.len());
    }
    Ok(())
}

fn chirotopes(k: usize, n: usize, src: &ChiSource) -> Result<ChirotopeSet, Failure> {
    let given = [
        src.chirotope.is_some(),
        src.chirotope_file.is_some(),
        src.negative_triples.is_some(),
        src.all_classes,
    ]
    .iter()
    .filter(|b| **b)
    .count();
    if given != 1 {
        return Err(Error::InvalidParameter(
            "give exactly one of --chirotope, --chirotope-file, --negative-triples, --all-classes".into(),
        )
        .into());
    }
    if let Some(s) = &src.chirotope {
        return Ok(ChirotopeSet::new(k, n, vec![Chirotope::from_sign_string(k, n, s)?])?);
    }
    if let Some(s) = &src.negative_triples {
        return Ok(ChirotopeSet::new(k, n, vec![Chirotope::parse_negative_notation(k, n, s)?])?);
    }
    if let Some(p) = &src.chirotope_file {
        return Ok(read_catalog(p, k, n)?);
    }
    embedded_classes(k, n).ok_or_else(|| {
        Error::InvalidParameter(format!("no embedded catalog for ({k},{n}); use --chirotope-file")).into()
    })
}

fn ensure_valid(set: &ChirotopeSet, rels: &RelationSet) -> Outcome {
    for c in set.iter() {
        c.ensure_valid(rels)?;
    }
    Ok(())
}

fn chirotope_cmd(c: &ChirotopeCmd, json: bool) -> Outcome {
    match c {
        ChirotopeCmd::Validate { k, n, src } => {
            let set = chirotopes(*k, *n, src)?;
            let rels = RelationSet::new(*k, *n)?;
            let mut bad = Vec::new();
            for c in set.iter() {
                match c.first_violation(&rels)? {
                    None => println!("valid   {}", c.sign_string()),
                    Some(r) => {
                        println!("invalid {} at {}", c.sign_string(), r.describe());
                        bad.push(c.sign_string());
                    }
                }
            }
            if bad.is_empty() {
                Ok(())
            } else {
                Err(Failure {
                    code: EXIT_INGESTION,
                    err: anyhow::anyhow!("{} invalid chirotope(s)", bad.len()),
                })
            }
        }
        ChirotopeCmd::Orbit { k, n, src, full, out } => {
            let set = chirotopes(*k, *n, src)?;
            ensure_valid(&set, &RelationSet::new(*k, *n)?)?;
            let orbit = if *full { full_orbit(&set)? } else { expand_orbit(&set)? };
            if let Some(p) = out {
                fs::write(p, chirotrop::catalog::write_catalog(&orbit))
                    .with_context(|| format!("writing {}", p.display()))?;
            }
            if json {
                println!("{}", serde_json::json!({ "k": k, "n": n, "size": orbit.len() }));
            } else {
                println!("{} chirotopes", orbit.len());
            }
            Ok(())
        }
    }
}

fn load_rays(k: usize, n: usize, path: Option<&Path>) -> Result<RayFile, Failure> {
    let file = match path {
        Some(p) => ingest_rays(p)?,
        None => embedded_rays(k, n).ok_or_else(|| {
            Failure::from(Error::InvalidParameter(format!("no embedded rays for ({k},{n}); use --rays")))
        })?,
    };
    if (file.k, file.n) != (k, n) {
        return Err(Error::ShapeMismatch {
            expected_k: k,
            expected_n: n,
            k: file.k,
            n: file.n,
        }
        .into());
    }
    Ok(file)
}

fn prepare_out(dir: &Path) -> Outcome {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let probe = dir.join(".chirotrop-write-test");
    fs::write(&probe, b"").with_context(|| format!("{} is not writable", dir.display()))?;
    let _ = fs::remove_file(probe);
    Ok(())
}

#[derive(Serialize)]
struct SummaryRow {
    index: usize,
    chirotope: String,
    negatives: String,
    rays: usize,
    f_vector: Vec<usize>,
    pure: bool,
    two_determined: bool,
}

fn summary_row(index: usize, d: &ChiDressian) -> SummaryRow {
    SummaryRow {
        index,
        chirotope: d.chirotope.sign_string(),
        negatives: d.chirotope.negative_notation(),
        rays: d.fan.rays.len(),
        f_vector: d.fan.f_vector.clone(),
        pure: d.fan.pure,
        two_determined: d.fan.two_determined,
    }
}

fn summary_table(rows: &[SummaryRow]) -> String {
    let mut s = String::from("#\tchirotope\tnegatives\tf_vector\tpure\ttwo_determined\n");
    for r in rows {
        let f = r.f_vector.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        s.push_str(&format!(
            "{}\t{}\t{}\t({})\t{}\t{}\n",
            r.index, r.chirotope, r.negatives, f, r.pure, r.two_determined
        ));
    }
    s
}

fn compute_all(
    set: &ChirotopeSet,
    rays: &RayFile,
    ctx: &Context,
) -> Result<Vec<ChiDressian>, Failure> {
    // One pipeline per chirotope; each is internally parallel.
    set.iter()
        .map(|c| compute_chirotropical_dressian(&rays.rays, c, ctx).map_err(Failure::from))
        .collect()
}

fn dressian(a: &DressianArgs, json: bool) -> Outcome {
    if let Some(dir) = &a.out {
        prepare_out(dir)?;
    }
    let set = chirotopes(a.k, a.n, &a.src)?;
    let ctx = Context::new(a.k, a.n)?;
    ensure_valid(&set, &ctx.rels)?;
    let rays = load_rays(a.k, a.n, a.rays.as_deref())?;
    let fans = compute_all(&set, &rays, &ctx)?;
    let rows: Vec<SummaryRow> = fans.iter().enumerate().map(|(i, d)| summary_row(i + 1, d)).collect();
    if let Some(dir) = &a.out {
        for d in &fans {
            let path = dir.join(format!("{}.json", d.chirotope.sign_string()));
            let text = serde_json::to_string_pretty(&FanReport::from(d)).context("serialising fan")?;
            fs::write(&path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
        }
        fs::write(dir.join("summary.tsv"), summary_table(&rows)).context("writing summary")?;
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&rows).context("serialising summary")?);
    } else {
        print!("{}", summary_table(&rows));
    }
    Ok(())
}

fn report(r: &CheckReport, json: bool) -> Outcome {
    if json {
        println!("{}", serde_json::to_string_pretty(r).context("serialising report")?);
    } else {
        println!("{}: {}", r.name, r.summary);
        for d in &r.details {
            println!("  {d}");
        }
        for v in r.violations.iter().take(20) {
            println!("  violation: {v}");
        }
    }
    if r.passed {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_VERIFY,
            err: anyhow::anyhow!("{} failed", r.name),
        })
    }
}

fn classes_for(n: usize, catalog: Option<&Path>) -> Result<ChirotopeSet, Failure> {
    let set = match catalog {
        Some(p) => read_catalog(p, 3, n)?,
        None => embedded_classes(3, n).ok_or_else(|| {
            Failure::from(Error::InvalidParameter(format!(
                "no embedded catalog for (3,{n}); pass --catalog"
            )))
        })?,
    };
    ensure_valid(&set, &RelationSet::new(3, n)?)?;
    Ok(set)
}

fn verify(v: &VerifyCmd, json: bool) -> Outcome {
    match v {
        VerifyCmd::Fano { n, catalog } => {
            let classes = classes_for(*n, catalog.as_deref())?;
            report(&fano_incompatibility_check(*n, &classes)?, json)
        }
        VerifyCmd::Covering { n, rays, catalog, extended } => {
            if *n > 6 && !extended {
                return Err(Error::InvalidParameter(format!("covering for n = {n} needs --extended")).into());
            }
            let classes = classes_for(*n, catalog.as_deref())?;
            let rays = load_rays(3, *n, rays.as_deref())?;
            let xi = expand_orbit(&classes)?;
            report(&covering_check(&rays.rays, &xi, &RelationSet::new(3, *n)?)?, json)
        }
        VerifyCmd::Counterexample48 => report(&verify_48_counterexample()?, json),
        VerifyCmd::TwoDetermined { n, rays, catalog } => {
            let classes = classes_for(*n, catalog.as_deref())?;
            let rays = load_rays(3, *n, rays.as_deref())?;
            let ctx = Context::new(3, *n)?;
            let fans = compute_all(&classes, &rays, &ctx)?;
            let mut r = CheckReport::new(&format!("two-determined-{n}"));
            for (i, d) in fans.iter().enumerate() {
                let ok = check_two_determined(&d.fan) && d.fan.two_determined;
                r.details.push(format!("class {} {}: {}", i + 1, d.chirotope.negative_notation(), ok));
                if !ok {
                    r.fail(format!("class {} is not 2-determined", i + 1));
                }
            }
            r.summary = format!(
                "{} of {} fans 2-determined",
                fans.len() - r.violations.len(),
                fans.len()
            );
            report(&r, json)
        }
    }
}
