//! `semimod`: command-line front end for the semimod library.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use semimod::budget::DEFAULT_BUDGET;
use semimod::coherence::{associativity_iso, symmetry_iso, triangle_check, uniqueness_up_to_iso};
use semimod::congruence::{congruence_closure, quotient};
use semimod::nat_coeq::{coequalizer_nat, naive_nat_classes, NatQuotient, NatQuotientShape, DEFAULT_BOUND_CAP};
use semimod::semiideal::Semiideal;
use semimod::tensor::{tensor_product_with_limit, DEFAULT_BOX_LIMIT};
use semimod::verify::{run_suite, Suite};
use semimod::{Budget, Error, FiniteCommMonoid};

#[derive(Parser, Debug)]
#[command(name = "semimod", version, about = "Commutative monoids as ℕ₀-semimodules")]
struct Cli {
    /// Emit JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    /// Label classes c0, c1, … instead of 0̄, 1̄, ….
    #[arg(long, global = true)]
    plain: bool,
    /// Work budget for enumerations and tensor boxes (default 10^7, or $SEMIMOD_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Period, footing, canonical generators and quotient of ⟨g1, g2, …⟩ ⊆ ℕ₀.
    Semiideal {
        #[arg(required = true)]
        generators: Vec<u64>,
    },
    /// Coequalizer of the multiplication maps a·, b·: ℕ₀ → ℕ₀.
    Coeq {
        a: u64,
        b: u64,
        /// Also show the classes of the naive relation on 0..=20.
        #[arg(long)]
        naive: bool,
        #[arg(long, default_value_t = DEFAULT_BOUND_CAP)]
        bound_cap: u64,
    },
    /// Quotient of a monoid by the congruence generated by pairs.
    Quotient {
        monoid: PathBuf,
        /// JSON list of pairs, e.g. '[[4,5],[1,2]]'.
        #[arg(long)]
        pairs: String,
    },
    /// Tensor product of two monoids.
    Tensor {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        check_coherence: bool,
    },
    /// Validate a monoid file.
    MonoidCheck { monoid: PathBuf },
    /// Run a self-check suite: paper-tables, oracles or coherence.
    Verify { suite: String },
}

enum Failure {
    Input(String),
    Budget(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Checks) => ExitCode::from(1),
    }
}

fn budget_limit(cli: &Cli) -> Result<u64, Failure> {
    if let Some(b) = cli.budget {
        return Ok(b);
    }
    match std::env::var("SEMIMOD_BUDGET") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("SEMIMOD_BUDGET is not a number: {v:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn box_limit(cli: &Cli) -> Result<u64, Failure> {
    let explicit = cli.budget.is_some() || std::env::var_os("SEMIMOD_BUDGET").is_some();
    let b = budget_limit(cli)?;
    Ok(if explicit { b } else { b.min(DEFAULT_BOX_LIMIT) })
}

fn read_monoid(path: &Path) -> Result<FiniteCommMonoid, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    Ok(FiniteCommMonoid::from_json_str(&text)?)
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Semiideal { generators } => semiideal(cli, generators),
        Command::Coeq { a, b, naive, bound_cap } => coeq(cli, *a, *b, *naive, *bound_cap),
        Command::Quotient { monoid, pairs } => quotient_cmd(cli, monoid, pairs),
        Command::Tensor {
            left,
            right,
            check_coherence,
        } => tensor(cli, left, right, *check_coherence),
        Command::MonoidCheck { monoid } => {
            let m = read_monoid(monoid)?;
            if cli.json {
                print_json(&json!({"valid": true, "size": m.size()}));
            } else {
                println!("valid commutative monoid with {} elements", m.size());
            }
            Ok(())
        }
        Command::Verify { suite } => verify(cli, suite),
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn class_label(cli: &Cli, n: u64) -> String {
    if cli.plain {
        format!("c{n}")
    } else {
        format!("{n}\u{0304}")
    }
}

/// Aligned `+` table with the same labels on both axes.
fn render_table(labels: &[String], table: &[Vec<String>]) -> String {
    let width = labels
        .iter()
        .chain(table.iter().flatten())
        .map(|s| s.chars().filter(|c| *c != '\u{0304}').count())
        .max()
        .unwrap_or(1);
    let pad = |s: &str| {
        let visible = s.chars().filter(|c| *c != '\u{0304}').count();
        format!("{}{}", " ".repeat(width - visible), s)
    };
    let mut out = String::new();
    out.push_str(&pad("+"));
    out.push_str(" |");
    for l in labels {
        out.push(' ');
        out.push_str(&pad(l));
    }
    out.push('\n');
    out.push_str(&"-".repeat((width + 1) * (labels.len() + 1) + 1));
    out.push('\n');
    for (l, row) in labels.iter().zip(table) {
        out.push_str(&pad(l));
        out.push_str(" |");
        for cell in row {
            out.push(' ');
            out.push_str(&pad(cell));
        }
        out.push('\n');
    }
    out
}

fn semiideal(cli: &Cli, generators: &[u64]) -> Result<(), Failure> {
    let m = Semiideal::new(generators)?;
    let s = m.summary();
    if cli.json {
        print_json(&serde_json::to_value(&s).expect("serializable"));
        return Ok(());
    }
    println!("generators:         {:?}", s.generators);
    println!("period:             {}", s.period);
    println!("footing:            {}", s.footing);
    println!("perc:               {{{} + {}n | n ≥ 0}} ∪ {{0}}", s.footing, s.period);
    println!("minimal generators: {:?}", s.minimal_generators);
    println!("cyclic:             {}", s.cyclic);
    println!("quotient ℕ₀/M:      ℤ/{}", s.period);
    Ok(())
}

fn coeq_json(q: &NatQuotient) -> Value {
    let steps: Vec<Value> = q
        .cert_b
        .iter()
        .map(|s| json!({"from": s.from, "to": s.to, "seed": [s.seed.0, s.seed.1], "shift": s.shift}))
        .collect();
    match q.shape {
        NatQuotientShape::SymbolicNat => json!({"quotient": "N0", "certA": q.cert_a, "certB": steps}),
        NatQuotientShape::Cyclic(c) => json!({
            "index": c.index,
            "period": c.period,
            "table": c.table(),
            "certA": q.check_certificate_a(),
            "certB": steps,
            "bound": q.bound_used,
        }),
    }
}

fn coeq(cli: &Cli, a: u64, b: u64, naive: bool, bound_cap: u64) -> Result<(), Failure> {
    let q = coequalizer_nat(a, b, bound_cap)?;
    let naive_classes = if naive && a != b {
        Some(naive_nat_classes(a, b, 20)?)
    } else {
        None
    };
    if cli.json {
        let mut v = coeq_json(&q);
        if let Some(classes) = &naive_classes {
            v["naive_classes"] = json!(classes);
        }
        print_json(&v);
        return Ok(());
    }
    if let Some(classes) = &naive_classes {
        println!("naive relation on 0..=20: {} classes", classes.len());
        for c in classes {
            println!("  {c:?}");
        }
        println!();
    }
    match q.shape {
        NatQuotientShape::SymbolicNat => {
            println!("quotient: ℕ₀ (the two maps are equal)");
        }
        NatQuotientShape::Cyclic(c) => {
            println!("quotient: C({}, {}) with {} classes", c.index, c.period, c.size());
            let labels: Vec<String> = (0..c.size()).map(|n| class_label(cli, n)).collect();
            let cells: Vec<Vec<String>> = c
                .table()
                .iter()
                .map(|row| row.iter().map(|&x| class_label(cli, x)).collect())
                .collect();
            print!("{}", render_table(&labels, &cells));
            println!(
                "certificate A (n ↦ class of n coequalizes the seeds): {}",
                if q.check_certificate_a() { "ok" } else { "FAILED" }
            );
            println!(
                "certificate B ({} ∼ {} in {} steps, bound {}): {}",
                c.index,
                c.index + c.period,
                q.cert_b.len(),
                q.bound_used,
                if q.check_certificate_b() { "ok" } else { "FAILED" }
            );
            for s in &q.cert_b {
                println!("  {} ∼ {}  from ({}, {}) + {}", s.from, s.to, s.seed.0, s.seed.1, s.shift);
            }
        }
    }
    Ok(())
}

fn monoid_labels(m: &FiniteCommMonoid) -> Vec<String> {
    m.elements().map(|x| m.label(x)).collect()
}

fn quotient_cmd(cli: &Cli, path: &Path, pairs: &str) -> Result<(), Failure> {
    let m = read_monoid(path)?;
    let pairs: Vec<(usize, usize)> =
        serde_json::from_str(pairs).map_err(|e| Failure::Input(format!("--pairs: {e}")))?;
    let c = congruence_closure(&m, &pairs)?;
    let q = quotient(&c);
    if cli.json {
        print_json(&json!({
            "classes": c.classes(),
            "size": q.monoid.size(),
            "add": q.monoid.table(),
        }));
        return Ok(());
    }
    println!("{} classes", c.num_classes());
    for (i, class) in c.classes().iter().enumerate() {
        let members: Vec<String> = class.iter().map(|&x| m.label(x)).collect();
        println!("  {} = {{{}}}", class_label(cli, i as u64), members.join(", "));
    }
    let labels: Vec<String> = (0..q.monoid.size() as u64).map(|n| class_label(cli, n)).collect();
    let cells: Vec<Vec<String>> = q
        .monoid
        .table()
        .iter()
        .map(|row| row.iter().map(|&x| class_label(cli, x as u64)).collect())
        .collect();
    print!("{}", render_table(&labels, &cells));
    Ok(())
}

fn tensor(cli: &Cli, left: &Path, right: &Path, check_coherence: bool) -> Result<(), Failure> {
    let m = read_monoid(left)?;
    let n = read_monoid(right)?;
    let limit = box_limit(cli)?;
    let t = tensor_product_with_limit(&m, &n, limit)?;

    let mut checks: Vec<(&str, bool)> = Vec::new();
    if check_coherence {
        let mut budget = Budget::new(budget_limit(cli)?);
        checks.push(("symmetry τ' ∘ τ = id", symmetry_iso(&m, &n, limit)?.verify()));
        checks.push(("associativity (M ⊗ N) ⊗ N ≅ M ⊗ (N ⊗ N)", associativity_iso(&m, &n, &n, limit)?.verify()));
        checks.push(("associativity (N ⊗ M) ⊗ M ≅ N ⊗ (M ⊗ M)", associativity_iso(&n, &m, &m, limit)?.verify()));
        checks.push(("triangle (k·m) ⊗ n = m ⊗ (k·n)", triangle_check(&t)));
        checks.push(("unique up to unique iso", uniqueness_up_to_iso(&m, &n, limit, &mut budget)?));
    }

    if cli.json {
        let mut v = json!({
            "size": t.monoid.size(),
            "add": t.monoid.table(),
            "bilinear": t.bilinear,
        });
        if check_coherence {
            v["coherence"] = checks.iter().map(|(name, ok)| (name.to_string(), json!(ok))).collect();
        }
        print_json(&v);
    } else {
        println!("M ⊗ N has {} elements", t.monoid.size());
        let labels: Vec<String> = (0..t.monoid.size()).map(|x| format!("t{x}")).collect();
        let cells: Vec<Vec<String>> = t
            .monoid
            .table()
            .iter()
            .map(|row| row.iter().map(|&x| format!("t{x}")).collect())
            .collect();
        print!("{}", render_table(&labels, &cells));
        println!();
        println!("m ⊗ n (rows m, columns n):");
        let (ml, nl) = (monoid_labels(&m), monoid_labels(&n));
        let width = ml.iter().chain(&nl).map(|s| s.chars().count()).max().unwrap_or(1).max(3);
        print!("{:>width$} |", "⊗");
        for l in &nl {
            print!(" {l:>width$}");
        }
        println!();
        for (x, l) in ml.iter().enumerate() {
            print!("{l:>width$} |");
            for y in n.elements() {
                print!(" {:>width$}", format!("t{}", t.tensor(x, y)));
            }
            println!();
        }
        for (name, ok) in &checks {
            println!("{}: {}", name, if *ok { "ok" } else { "FAILED" });
        }
    }
    if checks.iter().all(|(_, ok)| *ok) {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn verify(cli: &Cli, suite: &str) -> Result<(), Failure> {
    let suite: Suite = suite.parse()?;
    let checks = run_suite(suite, budget_limit(cli)?)?;
    if cli.json {
        print_json(&serde_json::to_value(&checks).expect("serializable"));
    } else {
        for c in &checks {
            println!("[{}] {} ({})", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
        }
    }
    if checks.iter().all(|c| c.passed) {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}
