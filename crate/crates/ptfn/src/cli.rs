//! Command-line front end. One subcommand per solver or analysis, each with
//! ascii, csv and json output. Tables go to stdout, diagnostics to stderr;
//! exit 0 on success, 1 on domain errors, 2 on usage errors.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::analysis::{advise_move, bench_compare, detect_period, MoveAdvice};
use crate::error::Error;
use crate::games::{GrundyTable, Label, PositionTable, SubtractionSet};
use crate::grid::{grid_cross_check, ptfn_two_pile, wythoff_sieve, GridRule, GridTable};
use crate::grundy::{grundy_table, labels_from_grundy, sum_label_xor};
use crate::oracle::minimax_label_1d;
use crate::sieve::{ptfn_misere, ptfn_normal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Ascii,
    Csv,
    Json,
}

#[derive(Parser)]
#[command(
    name = "ptfn",
    about = "Solvers for impartial subtraction games: PTFN sieve, Sprague-Grundy, Wythoff, misere",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve one pile under normal play with the PTFN sieve
    Solve {
        /// Comma-separated subtraction set, e.g. 1,3,7,8
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<i64>,
        /// Pile size
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Ascii)]
        format: OutputFormat,
    },
    /// Solve one pile under misere play (last player to move loses)
    Misere {
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<i64>,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Ascii)]
        format: OutputFormat,
    },
    /// Compute the Sprague-Grundy value table for one pile
    Grundy {
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<i64>,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Ascii)]
        format: OutputFormat,
    },
    /// Label a sum of games via the XOR rule; repeat --game SET:N per component
    Sum {
        /// Component game as SET:N, e.g. --game 1,3,7,8:21
        #[arg(long, required = true)]
        game: Vec<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Ascii)]
        format: OutputFormat,
    },
    /// Solve the sum of two subtraction games over a full position grid
    TwoPile {
        #[arg(long = "set-a", value_delimiter = ',', required = true)]
        set_a: Vec<i64>,
        #[arg(long)]
        na: u64,
        #[arg(long = "set-b", value_delimiter = ',', required = true)]
        set_b: Vec<i64>,
        #[arg(long)]
        nb: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Ascii)]
        format: OutputFormat,
    },
    /// Solve Wythoff's game over an n-by-n grid
    Wythoff {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Ascii)]
        format: OutputFormat,
    },
    /// Advise the player to move at a given position
    Advise {
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<i64>,
        /// Table size (position must be <= n)
        #[arg(long)]
        n: u64,
        /// Position to advise on
        #[arg(long)]
        pos: u64,
        /// Use misere play instead of normal
        #[arg(long)]
        misere: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Ascii)]
        format: OutputFormat,
    },
    /// Detect Grundy-sequence periodicity
    Period {
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<i64>,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Ascii)]
        format: OutputFormat,
    },
    /// Benchmark PTFN against the Sprague-Grundy solver
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<i64>,
        #[arg(long)]
        n: u64,
        /// Timing repetitions; minimum is reported
        #[arg(long, default_value_t = 3)]
        reps: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Ascii)]
        format: OutputFormat,
    },
    /// Cross-check solvers against independent methods
    Check {
        /// One-pile check: PTFN vs Sprague-Grundy vs minimax oracle
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<i64>>,
        #[arg(long)]
        n: Option<u64>,
        /// Two-pile check: grid sieve vs the XOR rule
        #[arg(long = "set-a", value_delimiter = ',')]
        set_a: Option<Vec<i64>>,
        #[arg(long = "set-b", value_delimiter = ',')]
        set_b: Option<Vec<i64>>,
        /// Wythoff check: grid sieve vs analytic golden-ratio pairs
        #[arg(long)]
        wythoff: bool,
    },
}

enum Failure {
    Domain(Error),
    Check(String),
    Io,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(_: std::io::Error) -> Self {
        Failure::Io
    }
}

type CmdResult = Result<(), Failure>;

/// Parses and executes one invocation. Returns the process exit code.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/version output on "errors" too
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                return 2;
            }
            let _ = write!(out, "{rendered}");
            return 0;
        }
    };
    match dispatch(cli.cmd, out) {
        Ok(()) => 0,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "check failed: {msg}");
            1
        }
        Err(Failure::Io) => 1,
    }
}

fn dispatch(cmd: Cmd, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Cmd::Solve { set, n, format } => {
            let set = SubtractionSet::new(&set)?;
            write_position_table(&ptfn_normal(&set, n)?, format, out)
        }
        Cmd::Misere { set, n, format } => {
            let set = SubtractionSet::new(&set)?;
            write_position_table(&ptfn_misere(&set, n)?, format, out)
        }
        Cmd::Grundy { set, n, format } => {
            let set = SubtractionSet::new(&set)?;
            write_grundy_table(&grundy_table(&set, n)?, format, out)
        }
        Cmd::Sum { game, format } => {
            let components = parse_components(&game)?;
            let label = sum_label_xor(&components)?;
            write_sum(&components, label, format, out)
        }
        Cmd::TwoPile {
            set_a,
            na,
            set_b,
            nb,
            format,
        } => {
            let sa = SubtractionSet::new(&set_a)?;
            let sb = SubtractionSet::new(&set_b)?;
            write_grid(&ptfn_two_pile(&sa, na, &sb, nb)?, format, out)
        }
        Cmd::Wythoff { n, format } => write_grid(&wythoff_sieve(n, n)?, format, out),
        Cmd::Advise {
            set,
            n,
            pos,
            misere,
            format,
        } => {
            let set = SubtractionSet::new(&set)?;
            let table = if misere {
                ptfn_misere(&set, n)?
            } else {
                ptfn_normal(&set, n)?
            };
            write_advice(pos, advise_move(&table, pos)?, format, out)
        }
        Cmd::Period { set, n, format } => {
            let set = SubtractionSet::new(&set)?;
            let report = detect_period(&grundy_table(&set, n)?)?;
            write_period(&set, n, report, format, out)
        }
        Cmd::Bench { set, n, reps, format } => {
            let set = SubtractionSet::new(&set)?;
            let report = bench_compare(&set, n, reps)?;
            write_bench(&report, format, out)
        }
        Cmd::Check {
            set,
            n,
            set_a,
            set_b,
            wythoff,
        } => run_check(set, n, set_a, set_b, wythoff, out),
    }
}

fn parse_components(specs: &[String]) -> Result<Vec<(SubtractionSet, u64)>, Failure> {
    let mut components = Vec::with_capacity(specs.len());
    for spec in specs {
        let (set_part, n_part) = spec.split_once(':').ok_or_else(|| {
            Failure::Check(format!("--game expects SET:N, got {spec:?}"))
        })?;
        let raw: Result<Vec<i64>, _> = set_part.split(',').map(str::parse).collect();
        let raw = raw.map_err(|_| Failure::Check(format!("bad set in --game {spec:?}")))?;
        let n: u64 = n_part
            .parse()
            .map_err(|_| Failure::Check(format!("bad pile size in --game {spec:?}")))?;
        components.push((SubtractionSet::new(&raw)?, n));
    }
    Ok(components)
}

fn set_json(set: &SubtractionSet) -> serde_json::Value {
    json!(set.moves())
}

fn write_position_table(
    table: &PositionTable,
    format: OutputFormat,
    out: &mut dyn Write,
) -> CmdResult {
    match format {
        OutputFormat::Ascii => {
            writeln!(
                out,
                "set={} n={} convention={}",
                table.set(),
                table.n(),
                table.convention()
            )?;
            let line: String = table.labels().iter().map(|l| l.to_string()).collect();
            writeln!(out, "{line}")?;
        }
        OutputFormat::Csv => {
            writeln!(out, "index,label")?;
            for (i, l) in table.labels().iter().enumerate() {
                writeln!(out, "{i},{l}")?;
            }
        }
        OutputFormat::Json => {
            let labels: Vec<String> = table.labels().iter().map(|l| l.to_string()).collect();
            let doc = json!({
                "rule": "subtraction",
                "set": set_json(table.set()),
                "convention": table.convention().to_string(),
                "n": table.n(),
                "labels": labels,
            });
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}

fn write_grundy_table(table: &GrundyTable, format: OutputFormat, out: &mut dyn Write) -> CmdResult {
    match format {
        OutputFormat::Ascii => {
            writeln!(out, "set={} n={} grundy values", table.set(), table.n())?;
            let line: Vec<String> = table.values().iter().map(|v| v.to_string()).collect();
            writeln!(out, "{}", line.join(" "))?;
        }
        OutputFormat::Csv => {
            writeln!(out, "index,value")?;
            for (i, v) in table.values().iter().enumerate() {
                writeln!(out, "{i},{v}")?;
            }
        }
        OutputFormat::Json => {
            let doc = json!({
                "rule": "subtraction",
                "set": set_json(table.set()),
                "convention": "normal",
                "n": table.n(),
                "values": table.values(),
            });
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}

fn write_sum(
    components: &[(SubtractionSet, u64)],
    label: Label,
    format: OutputFormat,
    out: &mut dyn Write,
) -> CmdResult {
    match format {
        OutputFormat::Ascii => {
            for (set, n) in components {
                writeln!(out, "component set={set} n={n}")?;
            }
            writeln!(out, "{label}")?;
        }
        OutputFormat::Csv => {
            writeln!(out, "label")?;
            writeln!(out, "{label}")?;
        }
        OutputFormat::Json => {
            let games: Vec<serde_json::Value> = components
                .iter()
                .map(|(set, n)| json!({ "set": set_json(set), "n": n }))
                .collect();
            let doc = json!({
                "rule": "sum",
                "convention": "normal",
                "games": games,
                "label": label.to_string(),
            });
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}

fn write_grid(grid: &GridTable, format: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let rule_name = match grid.rule() {
        GridRule::SumOfTwo { .. } => "sum_of_two",
        GridRule::Wythoff => "wythoff",
    };
    match format {
        OutputFormat::Ascii => {
            writeln!(out, "rule={} nA={} nB={}", rule_name, grid.n_a(), grid.n_b())?;
            for a in 0..=grid.n_a() {
                let line: String = grid
                    .row(a)
                    .iter()
                    .map(|l| if *l == Label::P { '.' } else { '#' })
                    .collect();
                writeln!(out, "{line}")?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "a,b,label")?;
            for a in 0..=grid.n_a() {
                for b in 0..=grid.n_b() {
                    writeln!(out, "{a},{b},{}", grid.label(a, b))?;
                }
            }
        }
        OutputFormat::Json => {
            let rows: Vec<Vec<String>> = (0..=grid.n_a())
                .map(|a| grid.row(a).iter().map(|l| l.to_string()).collect())
                .collect();
            let mut doc = json!({
                "rule": rule_name,
                "convention": "normal",
                "nA": grid.n_a(),
                "nB": grid.n_b(),
                "labels": rows,
            });
            if let GridRule::SumOfTwo { set_a, set_b } = grid.rule() {
                doc["setA"] = set_json(set_a);
                doc["setB"] = set_json(set_b);
            }
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}

fn write_advice(pos: u64, advice: MoveAdvice, format: OutputFormat, out: &mut dyn Write) -> CmdResult {
    match format {
        OutputFormat::Ascii => match advice {
            MoveAdvice::WinningMove(s) => writeln!(out, "position {pos}: take {s} chips")?,
            MoveAdvice::NoWinningMove => {
                writeln!(out, "position {pos}: no winning move (P-position)")?
            }
            MoveAdvice::NoLegalMove => writeln!(out, "position {pos}: no legal move")?,
        },
        OutputFormat::Csv => {
            writeln!(out, "position,outcome,amount")?;
            match advice {
                MoveAdvice::WinningMove(s) => writeln!(out, "{pos},winning_move,{s}")?,
                MoveAdvice::NoWinningMove => writeln!(out, "{pos},no_winning_move,")?,
                MoveAdvice::NoLegalMove => writeln!(out, "{pos},no_legal_move,")?,
            }
        }
        OutputFormat::Json => {
            let doc = match advice {
                MoveAdvice::WinningMove(s) => {
                    json!({ "position": pos, "outcome": "winning_move", "amount": s })
                }
                MoveAdvice::NoWinningMove => {
                    json!({ "position": pos, "outcome": "no_winning_move" })
                }
                MoveAdvice::NoLegalMove => {
                    json!({ "position": pos, "outcome": "no_legal_move" })
                }
            };
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}

fn write_period(
    set: &SubtractionSet,
    n: u64,
    report: Option<crate::analysis::PeriodReport>,
    format: OutputFormat,
    out: &mut dyn Write,
) -> CmdResult {
    match format {
        OutputFormat::Ascii => match report {
            Some(r) => writeln!(
                out,
                "set={set} n={n} preperiod={} period={} verified={}",
                r.preperiod, r.period, r.verified
            )?,
            None => writeln!(out, "set={set} n={n} no period found")?,
        },
        OutputFormat::Csv => {
            writeln!(out, "preperiod,period,verified")?;
            match report {
                Some(r) => writeln!(out, "{},{},{}", r.preperiod, r.period, r.verified)?,
                None => writeln!(out, ",,")?,
            }
        }
        OutputFormat::Json => {
            let doc = match report {
                Some(r) => json!({
                    "set": set_json(set),
                    "n": n,
                    "preperiod": r.preperiod,
                    "period": r.period,
                    "verified": r.verified,
                }),
                None => json!({ "set": set_json(set), "n": n, "period": null }),
            };
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}

fn write_bench(report: &crate::analysis::BenchReport, format: OutputFormat, out: &mut dyn Write) -> CmdResult {
    match format {
        OutputFormat::Ascii => {
            writeln!(out, "set={} n={}", report.set, report.n)?;
            writeln!(out, "ptfn_marks={}", report.ptfn_marks)?;
            writeln!(out, "sg_mex_evals={}", report.sg_mex_evals)?;
            writeln!(out, "ptfn_time_ns={}", report.ptfn_time.as_nanos())?;
            writeln!(out, "sg_time_ns={}", report.sg_time.as_nanos())?;
            writeln!(out, "agreement={}", report.agreement)?;
        }
        OutputFormat::Csv => {
            writeln!(
                out,
                "n,ptfn_marks,sg_mex_evals,ptfn_time_ns,sg_time_ns,agreement"
            )?;
            writeln!(
                out,
                "{},{},{},{},{},{}",
                report.n,
                report.ptfn_marks,
                report.sg_mex_evals,
                report.ptfn_time.as_nanos(),
                report.sg_time.as_nanos(),
                report.agreement
            )?;
        }
        OutputFormat::Json => {
            let doc = json!({
                "set": set_json(&report.set),
                "n": report.n,
                "ptfn_marks": report.ptfn_marks,
                "sg_mex_evals": report.sg_mex_evals,
                "ptfn_time_ns": report.ptfn_time.as_nanos() as u64,
                "sg_time_ns": report.sg_time.as_nanos() as u64,
                "agreement": report.agreement,
            });
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}

fn run_check(
    set: Option<Vec<i64>>,
    n: Option<u64>,
    set_a: Option<Vec<i64>>,
    set_b: Option<Vec<i64>>,
    wythoff: bool,
    out: &mut dyn Write,
) -> CmdResult {
    if wythoff {
        let n = n.unwrap_or(50);
        let grid = wythoff_sieve(n, n)?;
        let mismatches = grid_cross_check(&grid);
        if !mismatches.is_empty() {
            return Err(Failure::Check(format!(
                "wythoff sieve disagrees with analytic pairs at {} cells, first {:?}",
                mismatches.len(),
                mismatches[0]
            )));
        }
        writeln!(out, "ok: wythoff {n}x{n} matches analytic golden-ratio pairs")?;
        return Ok(());
    }
    if let (Some(a), Some(b)) = (set_a, set_b) {
        let sa = SubtractionSet::new(&a)?;
        let sb = SubtractionSet::new(&b)?;
        let n = n.unwrap_or(30);
        let grid = ptfn_two_pile(&sa, n, &sb, n)?;
        let mismatches = grid_cross_check(&grid);
        if !mismatches.is_empty() {
            return Err(Failure::Check(format!(
                "two-pile sieve disagrees with the XOR rule at {} cells, first {:?}",
                mismatches.len(),
                mismatches[0]
            )));
        }
        writeln!(out, "ok: two-pile {n}x{n} grid matches the XOR-of-Grundy rule")?;
        return Ok(());
    }
    let raw = set.ok_or_else(|| {
        Failure::Check("check needs --set, --set-a/--set-b, or --wythoff".to_string())
    })?;
    let set = SubtractionSet::new(&raw)?;
    let n = n.unwrap_or(200);
    let normal = ptfn_normal(&set, n)?;
    let via_grundy = labels_from_grundy(&grundy_table(&set, n)?);
    for i in 0..=n {
        if normal.label(i) != via_grundy.label(i) {
            return Err(Failure::Check(format!(
                "PTFN and Sprague-Grundy disagree at position {i}"
            )));
        }
    }
    writeln!(out, "ok: PTFN matches Sprague-Grundy labels up to {n}")?;
    let misere = ptfn_misere(&set, n)?;
    for i in 0..=n {
        if normal.label(i) != minimax_label_1d(&set, i, crate::games::PlayConvention::Normal) {
            return Err(Failure::Check(format!(
                "normal-play oracle disagrees at position {i}"
            )));
        }
        if misere.label(i) != minimax_label_1d(&set, i, crate::games::PlayConvention::Misere) {
            return Err(Failure::Check(format!(
                "misere oracle disagrees at position {i}"
            )));
        }
    }
    writeln!(out, "ok: PTFN matches the minimax oracle up to {n} (normal and misere)")?;
    Ok(())
}
