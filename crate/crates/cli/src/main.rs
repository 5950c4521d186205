use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use negaz4v::factorbase::FactorizationContext;
use negaz4v::gray::{gray_image, min_weights, z4_to_binary_gray, DEFAULT_MAX_BITS};
use negaz4v::negacode::{count_codes, count_selfdual, enumerate_all, enumerate_selfdual, CodeFile, NegacyclicCode};
use negaz4v_cli::report::Report;
use negaz4v_cli::suites;

#[derive(Parser)]
#[command(name = "negaz4v", version, about = "Negacyclic codes of length 2n over Z4 + vZ4")]
struct Cli {
    /// Odd n; codes have length 2n
    #[arg(long, global = true)]
    n: Option<i64>,
    /// Worker threads for minimum-weight searches
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Output file
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Monic basic irreducible factors of x^n - 1 over Z4
    Factor,
    /// Primitive idempotents of Z4[x]/(x^{2n} + 1)
    Idempotents,
    /// Number of negacyclic codes of length 2n
    Count {
        #[arg(long)]
        self_dual: bool,
    },
    /// Write codes as JSON lines
    Enumerate {
        #[arg(long)]
        self_dual: bool,
        /// Stop after this many codes
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Dual of a code file
    Dual {
        #[arg(long)]
        code: PathBuf,
    },
    /// Z4 generator matrix of the Gray image
    Gray {
        #[arg(long)]
        code: PathBuf,
        /// Also write the binary image of each generator
        #[arg(long)]
        binary: bool,
    },
    /// Exact minimum Lee and Euclidean weights of the Gray image
    Minweight {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_BITS)]
        max_bits: u32,
    },
    /// Run a verification suite
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Residue-field degree for the length-2 and ideal suites
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Recompute the length-14 example or the Mersenne counts
    Reproduce {
        #[arg(value_enum)]
        section: Section,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Rings,
    Length2,
    Ideals,
    Duality,
    Selfdual,
    Gray,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Section {
    /// Length 14: factors, idempotents, counts, self-dual stream, highlighted codes
    #[value(name = "sec6")]
    Length14,
    /// Self-dual counts for n = 2^p - 1, p = 3, 5, 7
    #[value(name = "thm61")]
    Mersenne,
}

enum Outcome {
    Done,
    Checks(Report),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Checks(report)) => {
            for line in &report.lines {
                println!("{line}");
            }
            for (label, t) in &report.timings {
                eprintln!("{label}: {:.2?}", t);
            }
            if report.passed() {
                println!("all checks passed");
                ExitCode::SUCCESS
            } else {
                println!("{} check(s) failed", report.failures.len());
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn context(cli: &Cli) -> anyhow::Result<Arc<FactorizationContext>> {
    let Some(n) = cli.n else { bail!("--n is required") };
    Ok(Arc::new(FactorizationContext::new(n)?))
}

fn load_code(path: &Path) -> anyhow::Result<NegacyclicCode> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file: CodeFile = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let ctx = Arc::new(FactorizationContext::new(file.n as i64)?);
    Ok(NegacyclicCode::from_file(&ctx, file)?)
}

fn sink(out: &Option<PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(std::io::stdout())),
    })
}

const ENUMERATE_ALL_BOUND: u64 = 1 << 20;

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Factor => {
            let ctx = context(cli)?;
            for f in ctx.factors() {
                println!("{f}");
            }
        }
        Command::Idempotents => {
            let ctx = context(cli)?;
            for e in ctx.idempotents() {
                println!("{e}");
            }
        }
        Command::Count { self_dual } => {
            let ctx = context(cli)?;
            if *self_dual {
                println!("{}", count_selfdual(&ctx));
            } else {
                println!("{}", count_codes(&ctx));
            }
        }
        Command::Enumerate { self_dual, limit } => {
            let ctx = context(cli)?;
            let limit = limit.unwrap_or(u64::MAX);
            let mut w = sink(&cli.out)?;
            let mut written = 0u64;
            if *self_dual {
                for code in enumerate_selfdual(&ctx).take(limit.min(usize::MAX as u64) as usize) {
                    writeln!(w, "{}", code.to_json())?;
                    written += 1;
                }
            } else {
                let total = count_codes(&ctx);
                if total > ENUMERATE_ALL_BOUND.into() && limit > ENUMERATE_ALL_BOUND {
                    bail!("{total} codes; pass --limit of at most {ENUMERATE_ALL_BOUND}");
                }
                for code in enumerate_all(&ctx).into_iter().take(limit as usize) {
                    writeln!(w, "{}", code.to_json())?;
                    written += 1;
                }
            }
            w.flush()?;
            eprintln!("{written} codes");
        }
        Command::Dual { code } => {
            let c = load_code(code)?;
            let d = c.dual();
            let mut w = sink(&cli.out)?;
            writeln!(w, "{}", d.to_json())?;
            w.flush()?;
            eprintln!("self-dual: {}", d == c);
        }
        Command::Gray { code, binary } => {
            let c = load_code(code)?;
            let img = gray_image(&c.to_z4_code()?)?;
            let mut w = sink(&cli.out)?;
            write!(w, "{img}")?;
            if *binary {
                writeln!(w, "binary image")?;
                for row in img.gens_order4().iter().chain(img.gens_order2()) {
                    let bits: Vec<String> = z4_to_binary_gray(row).iter().map(|b| b.to_string()).collect();
                    writeln!(w, "{}", bits.join(""))?;
                }
            }
            w.flush()?;
        }
        Command::Minweight { code, max_bits } => {
            let c = load_code(code)?;
            let img = gray_image(&c.to_z4_code()?)?;
            let p = min_weights(&img, cli.threads, *max_bits)?;
            println!("d_L={} d_E={} type={}", p.min_lee, p.min_euclidean, img.type_string());
        }
        Command::Verify { suite, m } => {
            let mut r = Report::new();
            let all = matches!(suite, Suite::All);
            if all || matches!(suite, Suite::Rings) {
                r.timed("rings", |r| suites::rings(r, &[1, 3, 7, 15]))?;
            }
            if all || matches!(suite, Suite::Length2) {
                r.timed("length2", |r| suites::length2(r, *m))?;
            }
            if all || matches!(suite, Suite::Ideals) {
                r.timed("ideals", |r| suites::ideals(r, *m))?;
            }
            if all || matches!(suite, Suite::Duality) {
                r.timed("duality", |r| suites::duality(r, 200))?;
            }
            if all || matches!(suite, Suite::Selfdual) {
                r.timed("selfdual", |r| suites::selfdual(r, 1000))?;
            }
            if all || matches!(suite, Suite::Gray) {
                r.timed("gray", |r| suites::gray(r, 20))?;
            }
            return Ok(Outcome::Checks(r));
        }
        Command::Reproduce { section } => {
            let mut r = Report::new();
            match section {
                Section::Length14 => suites::length14_example(&mut r, cli.threads)?,
                Section::Mersenne => suites::mersenne(&mut r)?,
            }
            return Ok(Outcome::Checks(r));
        }
    }
    Ok(Outcome::Done)
}
