//! One pass/fail line per acceptance criterion. Runs as a plain binary so the
//! lines are printed whatever the test runner's capture settings.

use std::process::Command;
use std::time::{Duration, Instant};

use negaz4v_cli::fixtures;
use negaz4v_cli::report::Report;
use negaz4v_cli::suites;

const SECOND: Duration = Duration::from_secs(1);
const MINUTE: Duration = Duration::from_secs(60);

struct Criterion {
    name: &'static str,
    budget: Duration,
    run: fn(&mut Report) -> anyhow::Result<()>,
}

fn factor_command(r: &mut Report) -> anyhow::Result<()> {
    let out = Command::new(env!("CARGO_BIN_EXE_negaz4v")).args(["factor", "--n", "7"]).output()?;
    let stdout = String::from_utf8(out.stdout)?;
    let lines: Vec<&str> = stdout.lines().collect();
    r.check("factor --n 7", out.status.success() && lines == fixtures::N7_FACTORS, || stdout.clone());
    Ok(())
}

fn flagship(r: &mut Report) -> anyhow::Result<()> {
    let threads = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(8);
    suites::flagship(r, threads)?;
    let slowest = r.timings.iter().map(|(_, t)| *t).max().unwrap_or_default();
    r.check("slowest code within 5 min", slowest <= 5 * MINUTE, || format!("{slowest:.2?}"));
    Ok(())
}

fn quasi_twist(r: &mut Report) -> anyhow::Result<()> {
    let mut scratch = Report::new();
    let codes = suites::selfdual_n7(&mut scratch)?;
    r.merge(scratch);
    suites::quasi_twist(r, &codes)
}

fn self_dual(r: &mut Report) -> anyhow::Result<()> {
    suites::selfdual_n1(r)?;
    suites::selfdual_n7(r).map(|_| ())
}

fn main() {
    let criteria = [
        Criterion { name: "factorization fixture", budget: SECOND, run: factor_command },
        Criterion { name: "idempotent fixture", budget: SECOND, run: suites::n7_fixtures },
        Criterion { name: "counting", budget: SECOND, run: suites::counts },
        Criterion { name: "length-2 oracle", budget: 10 * SECOND, run: |r| suites::length2(r, 1) },
        Criterion { name: "ideal table oracle", budget: 30 * SECOND, run: |r| suites::ideals(r, 1) },
        Criterion { name: "duality oracle", budget: 2 * MINUTE, run: |r| suites::duality(r, 200) },
        Criterion { name: "self-dual enumeration", budget: MINUTE, run: self_dual },
        Criterion { name: "Gray properties", budget: MINUTE, run: |r| suites::gray(r, 20) },
        Criterion { name: "flagship weights (36 codes)", budget: 180 * MINUTE, run: flagship },
        Criterion { name: "quasi-twist (339 codes)", budget: 5 * MINUTE, run: quasi_twist },
        Criterion {
            name: "n=31 stream spot check (1000 codes)",
            budget: 5 * MINUTE,
            run: |r| suites::selfdual_n31_prefix(r, 1000),
        },
    ];

    let mut failed = 0;
    for c in &criteria {
        let mut r = Report::new();
        let start = Instant::now();
        let result = (c.run)(&mut r);
        let elapsed = start.elapsed();
        let mut why = Vec::new();
        if let Err(e) = &result {
            why.push(format!("error: {e:#}"));
        }
        why.extend(r.failures.iter().cloned());
        if elapsed > c.budget {
            why.push(format!("over budget {:?}", c.budget));
        }
        let verdict = if why.is_empty() { "PASS" } else { "FAIL" };
        println!("{verdict} {} ({:.2?}, budget {:?})", c.name, elapsed, c.budget);
        for w in &why {
            println!("     {w}");
        }
        if !why.is_empty() {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
