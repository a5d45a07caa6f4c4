//! Command-line surface: bound certificates, the two bound tables, Molien
//! prefixes, power tables, class/character dumps, RD ladder lookups, and
//! the verification suites.
//!
//! Exit codes: 0 success, 1 check or pipeline failure, 2 usage error.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use molien_rd::engine::{self, EngineOptions};
use molien_rd::molien;
use molien_rd::oracle;
use molien_rd::psu3_data::{self, ClassType, TYPES};
use molien_rd::psu3_reps;
use molien_rd::rd_core::{Family, RdLadder};
use molien_rd::sl2_chars;
use std::path::PathBuf;

const LADDER_ENV: &str = "MOLIEN_RD_LADDER";

#[derive(Parser)]
#[command(
    name = "molien-rd",
    about = "Exact invariant-theoretic upper bounds on RD(PSU(2,q)) and RD(PSU(3,q))",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Psu2,
    Psu3,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Psu2 => Family::Psu2,
            FamilyArg::Psu3 => Family::Psu3,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct LadderArgs {
    /// Reproduce the published tables verbatim (documented mu overrides at
    /// q = 13, 16, 37 and the RD(6) <= 1 entry).
    #[arg(long)]
    paper_compat: bool,
    /// Ladder file overriding the bundled RD(n) bounds (also via MOLIEN_RD_LADDER).
    #[arg(long)]
    ladder_file: Option<PathBuf>,
}

impl LadderArgs {
    fn options(&self) -> Result<EngineOptions> {
        let path = self
            .ladder_file
            .clone()
            .or_else(|| std::env::var_os(LADDER_ENV).map(PathBuf::from));
        let ladder = match path {
            Some(p) => RdLadder::from_path(&p).with_context(|| "loading ladder file")?,
            None => RdLadder::from_default(),
        };
        Ok(EngineOptions {
            paper_compat: self.paper_compat,
            ladder,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline for one group and emit its bound certificate.
    Bound {
        family: FamilyArg,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        ladder: LadderArgs,
    },
    /// Emit a full bounds table for a family.
    Table {
        family: FamilyArg,
        #[arg(long)]
        q_min: Option<u64>,
        #[arg(long)]
        q_max: Option<u64>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Worker threads for row-parallel generation (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        ladder: LadderArgs,
    },
    /// Molien coefficients m_0..m_K of the smallest projective representation.
    Molien {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        q: u64,
        /// Defaults to 8 for psl2 and 6 for psu3.
        #[arg(long, default_value_t = 0)]
        max_degree: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// The type-by-type distribution of g -> g^k on PSU(3,q) classes.
    PowerTable {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The instantiated PSU(3,q) class-type table.
    DumpClasses {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Degrees of SL(2,q) irreducibles and the selected character's values.
    DumpChars {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Best recorded upper bound on RD(n).
    RdUpper {
        n: u64,
        #[command(flatten)]
        ladder: LadderArgs,
    },
    /// Run a verification suite; exits 1 on any failure.
    Verify {
        target: VerifyTarget,
        #[arg(long, default_value_t = 197)]
        q_max: u64,
        /// Enumeration budget for the brute-force oracle; raising it past
        /// 10^6 opts in to the expensive SU(3,7) run.
        #[arg(long, default_value_t = 1_000_000)]
        oracle_max_order: u64,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroupArg {
    Psl2,
    Psu3,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyTarget {
    PowerTables,
    Molien,
    Oracle,
    Chars,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            let report = serde_json::json!({
                "status": "error",
                "error": format!("{e:#}"),
            });
            eprintln!("{report}");
            std::process::exit(1);
        }
    }
}

fn init_jobs(jobs: Option<usize>) {
    if let Some(n) = jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Bound {
            family,
            q,
            format,
            ladder,
        } => cmd_bound(family.into(), q, format, &ladder.options()?),
        Command::Table {
            family,
            q_min,
            q_max,
            format,
            jobs,
            ladder,
        } => {
            init_jobs(jobs);
            cmd_table(family.into(), q_min, q_max, format, &ladder.options()?)
        }
        Command::Molien {
            group,
            q,
            max_degree,
            format,
        } => cmd_molien(group, q, max_degree, format),
        Command::PowerTable { q, k, format } => cmd_power_table(q, k, format),
        Command::DumpClasses { q, format } => cmd_dump_classes(q, format),
        Command::DumpChars { q, format } => cmd_dump_chars(q, format),
        Command::RdUpper { n, ladder } => {
            let opts = ladder.options()?;
            println!("{}", opts.effective_ladder().upper(n));
            Ok(())
        }
        Command::Verify {
            target,
            q_max,
            oracle_max_order,
            jobs,
        } => {
            init_jobs(jobs);
            cmd_verify(target, q_max, oracle_max_order)
        }
    }
}

fn cmd_bound(family: Family, q: u64, format: Format, opts: &EngineOptions) -> Result<()> {
    let row = engine::table_row(family, q, opts)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&row)?),
        _ => {
            let c = &row.certificate;
            println!(
                "{} q = {}: dim V = {}, bound {} via degrees {}",
                family_slug(family),
                q,
                row.dim_v,
                row.bound,
                row.degrees_string()
            );
            println!(
                "  product = {}, RD(product) = {}, mu = {}, bound-by-mu = {}",
                c.product, c.rd_of_product, row.mu, row.bound_mu
            );
            println!(
                "  blocker for r+1: {:?}; independence of chosen invariants assumed generic",
                c.blocker
            );
            if let Some(note) = &c.note {
                println!("  note: {note}");
            }
            if row.flagged {
                println!(
                    "  flagged: default mu differs from the published row (see --paper-compat)"
                );
            }
        }
    }
    Ok(())
}

fn family_slug(f: Family) -> &'static str {
    match f {
        Family::Psu2 => "psu2",
        Family::Psu3 => "psu3",
    }
}

fn cmd_table(
    family: Family,
    q_min: Option<u64>,
    q_max: Option<u64>,
    format: Format,
    opts: &EngineOptions,
) -> Result<()> {
    use rayon::prelude::*;
    let mut qs = engine::table_q_values(family);
    if let Some(lo) = q_min {
        qs.retain(|&q| q >= lo);
    }
    if let Some(hi) = q_max {
        qs.retain(|&q| q <= hi);
    }
    let rows: Vec<_> = qs
        .par_iter()
        .map(|&q| engine::table_row(family, q, opts))
        .collect();
    let mut failures = Vec::new();
    let mut ok_rows = Vec::new();
    for r in rows {
        match r {
            Ok(row) => ok_rows.push(row),
            Err(e) => failures.push(e.to_string()),
        }
    }
    match format {
        Format::Csv => {
            println!("{}", engine::CSV_HEADER);
            for row in &ok_rows {
                println!("{}", row.csv_line());
            }
        }
        Format::Json => println!("{}", serde_json::to_string_pretty(&ok_rows)?),
        Format::Text => {
            println!(
                "{:>5} {:>7} {:>7}  {:<12} {:>9} {:>9}  {}",
                "q", "dim V", "bound", "degrees", "mu", "bound-mu", "blocker"
            );
            for row in &ok_rows {
                println!(
                    "{:>5} {:>7} {:>7}  {:<12} {:>9} {:>9}  {:?}{}",
                    row.q,
                    row.dim_v,
                    row.bound,
                    row.degrees_string(),
                    row.mu,
                    row.bound_mu,
                    row.row_class,
                    if row.flagged { "  [flagged]" } else { "" }
                );
            }
        }
    }
    if !failures.is_empty() {
        bail!("{} row(s) failed: {}", failures.len(), failures.join("; "));
    }
    Ok(())
}

fn cmd_molien(group: GroupArg, q: u64, max_degree: u64, format: Format) -> Result<()> {
    let (kmax, label) = match group {
        GroupArg::Psl2 => (if max_degree == 0 { 8 } else { max_degree }, "psl2"),
        GroupArg::Psu3 => (if max_degree == 0 { 6 } else { max_degree }, "psu3"),
    };
    let coefficients = match group {
        GroupArg::Psl2 => sl2_chars::smallest_projective_character(q)?
            .molien_prefix(kmax as usize)
            .map_err(|e| anyhow!("{e}"))?
            .coefficients,
        GroupArg::Psu3 => engine::psu3_molien(q, kmax)?.coefficients,
    };
    match format {
        Format::Text => {
            let terms: Vec<String> = coefficients
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c != 0)
                .map(|(k, &c)| match (k, c) {
                    (0, c) => format!("{c}"),
                    (k, 1) => format!("t^{k}"),
                    (k, c) => format!("{c} t^{k}"),
                })
                .collect();
            println!("{}", terms.join(" + "));
        }
        _ => {
            println!(
                "{}",
                serde_json::json!({
                    "group": label,
                    "q": q,
                    "max_degree": kmax,
                    "coefficients": coefficients,
                })
            );
        }
    }
    Ok(())
}

fn cmd_power_table(q: u64, k: u64, format: Format) -> Result<()> {
    let dist = psu3_reps::power_distribution(q, k)?;
    let spec = psu3_data::class_spectrum(q)?;
    let present: Vec<usize> = (0..9).filter(|&i| spec.types[i].count > 0).collect();
    match format {
        Format::Json => {
            let entries: Vec<_> = present
                .iter()
                .map(|&col| {
                    let targets: Vec<_> = present
                        .iter()
                        .filter(|&&row| dist[row][col] > 0)
                        .map(|&row| {
                            serde_json::json!({
                                "type": TYPES[row].label(),
                                "classes": dist[row][col],
                            })
                        })
                        .collect();
                    serde_json::json!({
                        "source": TYPES[col].label(),
                        "count": spec.types[col].count,
                        "targets": targets,
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::json!({ "q": q, "k": k, "columns": entries })
            );
        }
        Format::Csv => {
            let header: Vec<&str> = present.iter().map(|&i| TYPES[i].label()).collect();
            println!("type,{}", header.join(","));
            println!(
                "count,{}",
                present
                    .iter()
                    .map(|&i| spec.types[i].count.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            for &row in &present {
                let cells: Vec<String> = present
                    .iter()
                    .map(|&col| dist[row][col].to_string())
                    .collect();
                println!("{},{}", TYPES[row].label(), cells.join(","));
            }
        }
        Format::Text => {
            println!("PSU(3,{q}) classes under g -> g^{k} (columns: source type)");
            print!("{:>8}", "");
            for &i in &present {
                print!("{:>8}", TYPES[i].label());
            }
            println!();
            print!("{:>8}", "count");
            for &i in &present {
                print!("{:>8}", spec.types[i].count);
            }
            println!();
            for &row in &present {
                print!("{:>8}", TYPES[row].label());
                for &col in &present {
                    print!("{:>8}", dist[row][col]);
                }
                println!();
            }
        }
    }
    Ok(())
}

fn cmd_dump_classes(q: u64, format: Format) -> Result<()> {
    let spec = psu3_data::class_spectrum(q)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&spec)?),
        _ => print!("{}", spec.render_text()),
    }
    Ok(())
}

fn cmd_dump_chars(q: u64, format: Format) -> Result<()> {
    let table = sl2_chars::sl2_character_table(q)?;
    let sel = sl2_chars::smallest_projective_character(q)?;
    let export_value = |v: &molien_rd::exact::CycNumber| {
        let m = v.minimized();
        serde_json::json!({
            "conductor": m.conductor(),
            "coords": m.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    };
    match format {
        Format::Json => {
            let labels: Vec<String> = table
                .data
                .classes
                .iter()
                .map(|c| format!("{:?}", c.label))
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({
                    "q": q,
                    "degrees": table.degrees(),
                    "selected_degree": sel.degree,
                    "classes": labels,
                    "selected_values": sel.values.iter().map(export_value).collect::<Vec<_>>(),
                }))?
            );
        }
        _ => {
            println!("SL(2,{q}): irreducible degrees {:?}", table.degrees());
            println!("selected character: degree {}", sel.degree);
            for (class, v) in table.data.classes.iter().zip(&sel.values) {
                let m = v.minimized();
                let coords: Vec<String> = m.coords().iter().map(|c| c.to_string()).collect();
                println!(
                    "  {:<14} conductor {:>4}  [{}]",
                    format!("{:?}", class.label),
                    m.conductor(),
                    coords.join(", ")
                );
            }
        }
    }
    Ok(())
}

fn cmd_verify(target: VerifyTarget, q_max: u64, oracle_max_order: u64) -> Result<()> {
    use rayon::prelude::*;
    let mut failures = 0usize;
    let mut report = |name: String, ok: bool| {
        println!("{} {}", if ok { "PASS" } else { "FAIL" }, name);
        if !ok {
            failures += 1;
        }
    };
    match target {
        VerifyTarget::PowerTables => {
            let results: Vec<(u64, Result<(), String>)> = psu3_data::prime_powers_upto(q_max)
                .par_iter()
                .map(|&q| {
                    let ctx = match psu3_reps::RepsContext::new(q) {
                        Ok(c) => c,
                        Err(e) => return (q, Err(e.to_string())),
                    };
                    for k in 2..=4u64 {
                        if let Err(e) = psu3_reps::power_distribution_with(&ctx, k) {
                            return (q, Err(e.to_string()));
                        }
                    }
                    (q, Ok(()))
                })
                .collect();
            for (q, r) in results {
                report(
                    format!(
                        "power tables q = {q} (k = 2..4, column sums + representative match){}",
                        r.as_ref()
                            .err()
                            .map(|e| format!(": {e}"))
                            .unwrap_or_default()
                    ),
                    r.is_ok(),
                );
            }
        }
        VerifyTarget::Molien => {
            let results: Vec<(u64, bool)> = psu3_data::prime_powers_upto(q_max)
                .par_iter()
                .map(|&q| {
                    let ok = engine::psu3_molien(q, 4)
                        .map(|pre| {
                            pre.coefficient(2) == 0
                                && pre.coefficient(3) == 0
                                && pre.coefficient(4) == molien::closed_form_m4(q)
                        })
                        .unwrap_or(false);
                    (q, ok)
                })
                .collect();
            for (q, ok) in results {
                report(format!("molien q = {q} (m2 = m3 = 0, m4 closed form)"), ok);
            }
        }
        VerifyTarget::Oracle => {
            for q in psu3_data::prime_powers_upto(q_max.min(11)) {
                if psu3_data::su3_order(q) > oracle_max_order {
                    continue;
                }
                let ok = verify_su3_oracle(q, oracle_max_order);
                report(format!("oracle SU(3,{q})/PSU(3,{q})"), ok);
            }
            for q in psu3_data::prime_powers_upto(q_max.min(13)) {
                if q < 4 || oracle::sl2_order(q) > oracle_max_order {
                    continue;
                }
                let ok = verify_sl2_oracle(q, oracle_max_order);
                report(format!("oracle SL(2,{q})"), ok);
            }
        }
        VerifyTarget::Chars => {
            let qs: Vec<u64> = psu3_data::prime_powers_upto(q_max.min(125))
                .into_iter()
                .filter(|&q| q >= 4)
                .collect();
            let results: Vec<(u64, bool)> = qs
                .par_iter()
                .map(|&q| {
                    let ok = sl2_chars::sl2_character_table(q)
                        .map(|t| {
                            t.degrees().iter().map(|d| d * d).sum::<u64>() == q * (q * q - 1)
                                && t.check_row_orthogonality().is_ok()
                                && t.check_column_orthogonality().is_ok()
                        })
                        .unwrap_or(false);
                    (q, ok)
                })
                .collect();
            for (q, ok) in results {
                report(format!("chars q = {q} (orthogonality + degree sum)"), ok);
            }
        }
    }
    if failures > 0 {
        bail!("{failures} verification check(s) failed");
    }
    Ok(())
}

fn verify_su3_oracle(q: u64, cap: u64) -> bool {
    let run = || -> Result<()> {
        let spec = psu3_data::class_spectrum(q)?;
        let d = psu3_data::gcd3(q);
        let su3 = oracle::enumerate_su3(q, cap).map_err(|e| anyhow!("{e}"))?;
        let su_part = su3.conjugacy_classes();
        let ctx = psu3_reps::RepsContext::new(q).map_err(|e| anyhow!("{e}"))?;
        let mut su_counts = [0u64; 9];
        for &r in &su_part.reps {
            let t = psu3_reps::identify_type(&ctx, &su3.elems[r as usize])
                .map_err(|e| anyhow!("{e}"))?;
            su_counts[t.index()] += 1;
        }
        for (i, ty) in TYPES.iter().enumerate() {
            let expected = match ty {
                ClassType::C6Prime => spec.types[i].count,
                _ => d * spec.types[i].count,
            };
            if su_counts[i] != expected {
                bail!("SU count mismatch for {ty:?}");
            }
        }
        let psu = oracle::quotient_by_center(&su3).map_err(|e| anyhow!("{e}"))?;
        let part = psu.conjugacy_classes();
        let types: Vec<ClassType> = part
            .reps
            .iter()
            .map(|&r| psu3_reps::identify_type(&ctx, &psu.elems[r as usize]).unwrap())
            .collect();
        for (cid, t) in types.iter().enumerate() {
            if part.centralizer_orders[cid] != spec.types[t.index()].centralizer {
                bail!("PSU centralizer mismatch for {t:?}");
            }
        }
        for k in 2..=6u64 {
            let dist = psu.power_distribution_oracle(&part, k);
            let mut agg = [[0u64; 9]; 9];
            for (src, st) in types.iter().enumerate() {
                for (dst, dt) in types.iter().enumerate() {
                    agg[dt.index()][st.index()] += dist[dst][src];
                }
            }
            let reps = psu3_reps::power_distribution_with(&ctx, k).map_err(|e| anyhow!("{e}"))?;
            if agg != reps {
                bail!("power distribution mismatch at k = {k}");
            }
        }
        Ok(())
    };
    run().is_ok()
}

fn verify_sl2_oracle(q: u64, cap: u64) -> bool {
    let run = || -> Result<()> {
        let data = sl2_chars::sl2_class_data(q)?;
        let group = oracle::enumerate_sl2(q, cap).map_err(|e| anyhow!("{e}"))?;
        let part = group.conjugacy_classes();
        if part.len() != data.classes.len() {
            bail!("class count");
        }
        let mut oracle_class = Vec::new();
        for class in &data.classes {
            let m = sl2_chars::label_matrix(&data, class.label);
            let cid = part.class_of[group
                .index_of(&m)
                .ok_or_else(|| anyhow!("representative missing"))?
                as usize];
            if part.sizes[cid as usize] != class.size
                || part.centralizer_orders[cid as usize] != class.centralizer
            {
                bail!("class data mismatch at {:?}", class.label);
            }
            oracle_class.push(cid);
        }
        for k in 2..=8u64 {
            let pm = group.power_map(&part, k);
            for (ci, class) in data.classes.iter().enumerate() {
                let predicted = data.power_label(class.label, k);
                if pm[oracle_class[ci] as usize] != oracle_class[data.index_of(predicted)] {
                    bail!("power map mismatch at {:?} k = {k}", class.label);
                }
            }
        }
        Ok(())
    };
    run().is_ok()
}
