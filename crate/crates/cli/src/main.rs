//! `gonality` — classify quadratic forms over F_2, compute their orthogonal
//! groups, count points on curves, run the genus-5 census, and verify the
//! published point-count bounds.

use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use gonality_cli::formats::{self, render_summary_human};
use gonality_cli::runner::{self, CensusConfig, Q1Choice};
use gonality_cli::verify::{self, Scope};
use gonality_core::curvekit::count_points;
use gonality_core::groebner::{parse_poly, MultiPoly};
use gonality_core::orthgroup::{orth_fast, orth_naive, witt_strata, OrthGroup};
use gonality_core::quadform::{variable_names, QuadraticForm};

#[derive(Parser)]
#[command(
    name = "gonality",
    about = "Quadratic forms over F_2, orthogonal groups, and point bounds for curves of genus at most 5",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Ambient {
    /// Plane curves: variables x, y, z.
    P2,
    /// Space curves: variables x, y, z, w.
    P3,
    /// Nets of quadrics: variables v, w, x, y, z.
    P4,
}

impl Ambient {
    fn nvars(&self) -> u8 {
        match self {
            Ambient::P2 => 3,
            Ambient::P3 => 4,
            Ambient::P4 => 5,
        }
    }

    fn names(&self) -> &'static [char] {
        variable_names(self.nvars())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Naive,
    Fast,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a quadratic form: type, anatomy, normal form, point counts.
    Classify {
        /// The form, e.g. "vw + xy + z^2".
        form: String,
        #[arg(long, value_enum, default_value_t = Ambient::P4)]
        ambient: Ambient,
    },
    /// Compute the orthogonal group of a quadratic form.
    Orth {
        form: String,
        #[arg(long, value_enum, default_value_t = Method::Fast)]
        method: Method,
        /// Print the sorted element list (hex row masks).
        #[arg(long)]
        elements: bool,
        #[arg(long, value_enum, default_value_t = Ambient::P4)]
        ambient: Ambient,
    },
    /// Count projective points where all given forms vanish over F_{2^k}.
    Count {
        /// Extension degree k (field F_{2^k}).
        #[arg(long)]
        k: u8,
        #[arg(long, value_enum, default_value_t = Ambient::P4)]
        ambient: Ambient,
        /// One or more polynomials.
        #[arg(required = true)]
        forms: Vec<String>,
    },
    /// Run the exhaustive genus-5 scan and write the record file.
    Census {
        /// Base form: the type-III form (3), the type-IV form (4), or both.
        #[arg(long, default_value = "both")]
        q1: String,
        /// Worker threads (default: GONALITY_JOBS or available cores, max 8).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: PathBuf,
        /// Reuse completed work units from the journal.
        #[arg(long)]
        resume: bool,
        /// B-forms per work unit (journal flush granularity).
        #[arg(long, default_value_t = 2048)]
        chunk_size: usize,
    },
    /// Re-verify the published examples and derived bounds.
    Verify {
        #[arg(long, default_value = "all")]
        scope: String,
        /// Census record file for the census-derived entries.
        #[arg(long)]
        census: Option<PathBuf>,
    },
    /// Print the maximum-points table with provenance per cell.
    Tables {
        #[arg(long)]
        census: Option<PathBuf>,
    },
}

fn parse_form(input: &str, ambient: Ambient) -> Result<(QuadraticForm, MultiPoly)> {
    let poly = parse_poly(input, ambient.names()).map_err(|e| anyhow!("{}", e))?;
    let form = QuadraticForm::from_poly(&poly, ambient.nvars())
        .ok_or_else(|| anyhow!("not a quadratic form in {} variables", ambient.nvars()))?;
    if form.is_zero() {
        bail!("the zero form has no classification");
    }
    Ok((form, poly))
}

fn cmd_classify(form: &str, ambient: Ambient, format: Format) -> Result<()> {
    let (q, _) = parse_form(form, ambient)?;
    let anatomy = q.anatomy().map_err(|e| anyhow!("{}", e))?;
    let normal = q.normal_form().map_err(|e| anyhow!("{}", e))?;
    let mut counts = Vec::new();
    for k in 1..=4u8 {
        counts.push(q.count_proj_points(k).map_err(|e| anyhow!("{}", e))?);
    }
    match format {
        Format::Human => {
            println!("form: {}", q.render());
            println!("id: {}", q.hex_id());
            println!("type: {}", q.classify());
            println!("radical dimension: {}", anatomy.radical_basis.len());
            println!("singular subspace dimension: {}", anatomy.singular_basis.len());
            println!("singular locus projective dimension: {}", anatomy.sing_proj_dim);
            println!("normal form: {} with m = {}", normal.shape, normal.m);
            for (k, c) in (1..=4).zip(&counts) {
                println!("points over F_{}: {}", 1u32 << k, c);
            }
        }
        Format::Machine => {
            println!("form\t{}", q.render());
            println!("id\t{}", q.hex_id());
            println!("type\t{}", q.classify());
            println!("radical_dim\t{}", anatomy.radical_basis.len());
            println!("singular_dim\t{}", anatomy.singular_basis.len());
            println!("sing_proj_dim\t{}", anatomy.sing_proj_dim);
            println!("normal_shape\t{}", normal.shape);
            println!("normal_m\t{}", normal.m);
            for (k, c) in (1..=4).zip(&counts) {
                println!("points_k{}\t{}", k, c);
            }
        }
    }
    Ok(())
}

fn cmd_orth(form: &str, ambient: Ambient, method: Method, elements: bool, format: Format) -> Result<()> {
    let (q, _) = parse_form(form, ambient)?;
    let group: OrthGroup = match method {
        Method::Naive => orth_naive(&q),
        Method::Fast => orth_fast(&q)
            .map_err(|e| anyhow!("{} (try --method naive for anisotropic forms)", e))?,
    };
    let strata = witt_strata(&q);
    match format {
        Format::Human => {
            println!("form: {}", q.render());
            println!("order: {}", group.order());
            let sizes: Vec<usize> = strata.y_factors.iter().map(|f| f.len()).collect();
            println!("strata sizes: {:?}", sizes);
            println!("#Y: {}", strata.y_size());
            println!("candidate space: {}", strata.candidate_space(q.vars()));
        }
        Format::Machine => {
            println!("form\t{}", q.render());
            println!("order\t{}", group.order());
            println!("y_size\t{}", strata.y_size());
            println!("candidate_space\t{}", strata.candidate_space(q.vars()));
        }
    }
    if elements {
        for m in group.render() {
            println!("{}", m);
        }
    }
    Ok(())
}

fn cmd_count(k: u8, ambient: Ambient, forms: &[String], format: Format) -> Result<()> {
    let polys: Vec<MultiPoly> = forms
        .iter()
        .map(|s| parse_poly(s, ambient.names()).map_err(|e| anyhow!("{}", e)))
        .collect::<Result<_>>()?;
    let n = count_points(&polys, ambient.nvars() - 1, k).map_err(|e| anyhow!("{}", e))?;
    match format {
        Format::Human => println!("points over F_{}: {}", 1u32 << k, n),
        Format::Machine => println!("points\t{}", n),
    }
    Ok(())
}

fn cmd_census(
    q1: &str,
    jobs: Option<usize>,
    out: PathBuf,
    resume: bool,
    chunk_size: usize,
    format: Format,
) -> Result<()> {
    let q1_choice = match q1 {
        "3" | "iii" => Q1Choice::TypeIII,
        "4" | "iv" => Q1Choice::TypeIV,
        "both" => Q1Choice::Both,
        other => bail!("unknown --q1 value '{}' (expected 3, 4, or both)", other),
    };
    let config = CensusConfig {
        q1_choice,
        workers: jobs.unwrap_or_else(runner::default_workers),
        output_path: out,
        resume,
        chunk_size,
    };
    let outcome = runner::run_census(&config).context("census run failed")?;
    match format {
        Format::Human => {
            print!("{}", render_summary_human(&outcome.summary));
            println!(
                "max rational points: {}  pointless curves: {} (all with cubic points: {})",
                outcome.report.max_rational_points,
                outcome.report.pointless_curves,
                outcome.report.pointless_all_have_cubic_points
            );
            println!("records: {}", outcome.records.len());
            println!("written: {}", config.output_path.display());
        }
        Format::Machine => {
            print!("{}", formats::render_summary(&outcome.summary));
            println!("max_points\t{}", outcome.report.max_rational_points);
            println!("pointless\t{}", outcome.report.pointless_curves);
        }
    }
    Ok(())
}

fn cmd_verify(scope: &str, census: Option<PathBuf>, format: Format) -> Result<bool> {
    let scope = Scope::parse(scope)
        .ok_or_else(|| anyhow!("unknown scope '{}' (all, genus1..genus5, appendixA)", scope))?;
    let report = verify::run_verify(scope, census.as_deref())?;
    match format {
        Format::Human => print!("{}", verify::render_report_human(&report)),
        Format::Machine => print!("{}", verify::render_report_machine(&report)),
    }
    Ok(report.all_pass())
}

fn cmd_tables(census: Option<PathBuf>, format: Format) -> Result<()> {
    let records = match census {
        Some(p) => Some(runner::records_from_file(&p)?),
        None => None,
    };
    let rows = verify::build_table2(records.as_deref())?;
    match format {
        Format::Human => {
            println!(
                "{:>5} {:>8} {:>6}  {:<44} {}",
                "genus", "gonality", "N", "lower bound (witness)", "upper bound"
            );
            for r in &rows {
                println!(
                    "{:>5} {:>8} {:>6}  {:<44} {}{}",
                    r.genus,
                    r.gonality,
                    r.value,
                    r.lower_src,
                    r.upper_src,
                    if r.verified { "" } else { "  [unverified]" }
                );
            }
        }
        Format::Machine => {
            for r in &rows {
                println!(
                    "table2\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.genus,
                    r.gonality,
                    r.value,
                    if r.verified { "verified" } else { "unverified" },
                    r.lower_src,
                    r.upper_src
                );
            }
        }
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    let result: Result<bool> = match cli.cmd {
        Cmd::Classify { form, ambient } => cmd_classify(&form, ambient, cli.format).map(|_| true),
        Cmd::Orth { form, ambient, method, elements } => {
            cmd_orth(&form, ambient, method, elements, cli.format).map(|_| true)
        }
        Cmd::Count { k, ambient, forms } => cmd_count(k, ambient, &forms, cli.format).map(|_| true),
        Cmd::Census { q1, jobs, out, resume, chunk_size } => {
            cmd_census(&q1, jobs, out, resume, chunk_size, cli.format).map(|_| true)
        }
        Cmd::Verify { scope, census } => cmd_verify(&scope, census, cli.format),
        Cmd::Tables { census } => cmd_tables(census, cli.format).map(|_| true),
    };
    match result {
        Ok(true) => {}
        Ok(false) => std::process::exit(1),
        Err(e) => {
            eprintln!("error: {:#}", e);
            std::process::exit(2);
        }
    }
}
