use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use pinilot_core::invariants::{
    entry_abelian, entry_nilpotent, entry_soluble, is_p_nilpotent, is_p_soluble,
    is_p_supersoluble, is_prime, pi_of, sylow_entry,
};
use pinilot_core::pitheory::{
    entry_pi_property, has_pi_property, is_pi_normal, is_pi_supplemented, pi_property_failures,
};
use pinilot_core::{structure, BuildLimits, FiniteGroup, Subgroup, SubgroupLattice};
use pinilot_harness::format::{parse_cycles, read_group_file};
use pinilot_harness::run::{RunConfig, Selection, DEFAULT_VERIFY_MAX_ORDER};
use pinilot_harness::{run_corpus, CorpusReport};

#[derive(Parser)]
#[command(
    name = "pinilot",
    version,
    about = "Finite group analysis and p-nilpotency criterion checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a structural profile of one group file.
    Analyze {
        /// Group file (name/degree/gen directives).
        file: PathBuf,
        /// Restrict the per-prime section to this prime.
        #[arg(long)]
        p: Option<u32>,
    },
    /// Test a subgroup for the pi-property, pi-supplementation and
    /// pi-normality.
    PiCheck {
        /// Group file defining the ambient group.
        file: PathBuf,
        /// Subgroup generators as comma-separated cycle words, e.g.
        /// "(1 2)(3 4),(1 3)(2 4)".
        #[arg(long)]
        subgroup: String,
        /// Also print the witnessing pair (T, I) when pi-normal.
        #[arg(long)]
        witness: bool,
    },
    /// Run the criterion checks over the builtin corpus or a corpus
    /// directory, and write a report.
    Verify {
        /// Which family of checks to run.
        #[arg(long, default_value = "all", value_parser = ["A", "B", "remark1", "lemmas", "corollaries", "all"])]
        theorem: String,
        /// Directory of *.group files; replaces the builtin corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Skip corpus groups above this order (1..=512). Defaults to the
        /// PINILOT_MAX_ORDER environment variable, then 512.
        #[arg(long)]
        max_order: Option<usize>,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Report format.
        #[arg(long, default_value = "json", value_parser = ["json", "text"])]
        format: String,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn load(file: &PathBuf) -> Result<(String, Arc<FiniteGroup>), String> {
    let gf = read_group_file(file).map_err(|e| e.to_string())?;
    let group = gf
        .build(BuildLimits::with_max_order(512))
        .map_err(|e| e.to_string())?;
    Ok((gf.name, group))
}

fn lattice(group: &Arc<FiniteGroup>) -> Result<SubgroupLattice, String> {
    SubgroupLattice::build(group, pinilot_core::lattice::DEFAULT_LATTICE_CAP)
        .map_err(|e| e.to_string())
}

fn gens_line(sub: &Subgroup) -> String {
    if sub.gen_indices().is_empty() {
        return "()".to_string();
    }
    sub.gen_indices()
        .iter()
        .map(|&i| sub.parent().elem(i).to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn analyze(file: PathBuf, p_filter: Option<u32>) -> Result<(), String> {
    if let Some(p) = p_filter {
        if !is_prime(p as u64) {
            return Err(format!("--p {p} is not a prime"));
        }
    }
    let (name, group) = load(&file)?;
    let lat = lattice(&group)?;
    let full = lat.full_index();

    println!(
        "group {name}: order {}, degree {}",
        group.order(),
        group.degree()
    );
    let gen_text = group
        .gen_indices()
        .iter()
        .map(|&i| group.elem(i).to_string())
        .collect::<Vec<_>>()
        .join(", ");
    println!("generators: {gen_text}");
    println!(
        "abelian {} | nilpotent {} | soluble {}",
        yesno(entry_abelian(&lat, full)),
        yesno(entry_nilpotent(&lat, full)),
        yesno(entry_soluble(&lat, full))
    );
    let normal_count = lat.normal_entries().len();
    println!("subgroups {} ({normal_count} normal)", lat.len());
    let factors = lat
        .chief_factor_orders()
        .iter()
        .map(|f| f.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    println!("chief factor orders: {factors}");
    let without: Vec<u32> = (0..lat.len() as u32)
        .filter(|&i| !entry_pi_property(&lat, i))
        .collect();
    if without.is_empty() {
        println!("every subgroup has the pi-property");
    } else {
        let mut orders: Vec<u32> = without.iter().map(|&i| lat.order_of(i)).collect();
        orders.dedup();
        println!(
            "subgroups without the pi-property: {} (orders {})",
            without.len(),
            orders
                .iter()
                .map(|o| o.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        );
    }

    let primes = pi_of(group.order() as u64);
    for &p in primes.primes() {
        if p_filter.is_some_and(|want| want != p) {
            continue;
        }
        let sy = sylow_entry(&lat, p);
        println!(
            "p={p}: sylow order {}, {p}-nilpotent {}, {p}-soluble {}, {p}-supersoluble {}",
            lat.order_of(sy),
            yesno(is_p_nilpotent(&lat, p)),
            yesno(is_p_soluble(&lat, p)),
            yesno(is_p_supersoluble(&lat, p))
        );
    }
    if let Some(p) = p_filter {
        if group.order() as u64 % p as u64 != 0 {
            println!("p={p} does not divide the group order");
        }
    }
    Ok(())
}

fn pi_check(file: PathBuf, subgroup: String, witness: bool) -> Result<(), String> {
    let (name, group) = load(&file)?;
    let mut gens = Vec::new();
    for part in subgroup.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        gens.push(parse_cycles(group.degree(), part)?);
    }
    let sub =
        pinilot_core::subgroup::subgroup_from_perms(&group, &gens).map_err(|e| e.to_string())?;
    let lat = lattice(&group)?;

    println!(
        "subgroup of order {} in {name} (order {})",
        sub.order(),
        group.order()
    );
    println!("generators: {}", gens_line(&sub));
    println!(
        "normal: {}",
        yesno(structure::is_normal(&group, &sub).map_err(|e| e.to_string())?)
    );
    println!(
        "pi-property: {}",
        yesno(has_pi_property(&lat, &sub).map_err(|e| e.to_string())?)
    );
    let failures = pi_property_failures(&lat, &sub).map_err(|e| e.to_string())?;
    for f in &failures {
        println!(
            "  fails at chief pair |K|={}, |L|={}: intersection order {}, normalizer index {} \
             (offending primes {})",
            f.kernel_order,
            f.above_order,
            f.intersection_order,
            f.normalizer_index,
            f.offending_primes
                .primes()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        );
    }
    let supplemented = is_pi_supplemented(&lat, &sub).map_err(|e| e.to_string())?;
    println!("pi-supplemented: {}", yesno(supplemented.is_some()));
    let normality = is_pi_normal(&lat, &sub).map_err(|e| e.to_string())?;
    println!("pi-normal: {}", yesno(normality.is_some()));
    if witness {
        if let Some(w) = &normality {
            println!(
                "witness: T of order {} generated by {}",
                w.supplement.order(),
                gens_line(&w.supplement)
            );
            println!(
                "         I of order {} generated by {}",
                w.intermediate.order(),
                gens_line(&w.intermediate)
            );
        }
    }
    Ok(())
}

fn resolve_max_order(flag: Option<usize>) -> Result<usize, String> {
    let value = match flag {
        Some(v) => v,
        None => match std::env::var("PINILOT_MAX_ORDER") {
            Ok(raw) => raw
                .parse::<usize>()
                .map_err(|_| format!("PINILOT_MAX_ORDER is not a number: {raw:?}"))?,
            Err(_) => DEFAULT_VERIFY_MAX_ORDER,
        },
    };
    if value == 0 || value > 512 {
        return Err(format!("max order must be between 1 and 512, got {value}"));
    }
    Ok(value)
}

fn write_report(
    report: &CorpusReport,
    format: &str,
    out: Option<&PathBuf>,
) -> Result<(), String> {
    let emit = |w: &mut dyn std::io::Write| -> std::io::Result<()> {
        match format {
            "text" => report.write_text(w),
            _ => report.write_json(w),
        }
    };
    match out {
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .map_err(|e| format!("cannot create {}: {e}", path.display()))?;
            emit(&mut f).map_err(|e| e.to_string())?;
            println!("report written to {}", path.display());
            for (status, count) in &report.summary {
                println!("  {status:<24} {count}");
            }
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            emit(&mut lock).map_err(|e| e.to_string())?;
        }
    }
    Ok(())
}

fn verify(
    theorem: String,
    corpus: Option<PathBuf>,
    max_order: Option<usize>,
    jobs: usize,
    format: String,
    out: Option<PathBuf>,
) -> Result<ExitCode, String> {
    let selection = Selection::parse(&theorem).ok_or("unreachable: clap validated the value")?;
    if jobs == 0 {
        return Err("--jobs must be at least 1".to_string());
    }
    let cfg = RunConfig {
        max_order: resolve_max_order(max_order)?,
        selection,
        corpus_dir: corpus,
        jobs,
        ..RunConfig::default()
    };
    let report = run_corpus(&cfg).map_err(|e| e.to_string())?;
    write_report(&report, &format, out.as_ref())?;
    if report.has_unexpected_counterexamples() {
        eprintln!(
            "{} unexpected counterexample(s) found",
            report.counterexamples.len()
        );
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze { file, p } => analyze(file, p).map(|()| ExitCode::SUCCESS),
        Command::PiCheck {
            file,
            subgroup,
            witness,
        } => pi_check(file, subgroup, witness).map(|()| ExitCode::SUCCESS),
        Command::Verify {
            theorem,
            corpus,
            max_order,
            jobs,
            format,
            out,
        } => verify(theorem, corpus, max_order, jobs, format, out),
    };
    match outcome {
        Ok(code) => code,
        Err(msg) => fail(msg),
    }
}
