//! Command-line entry point.

use crate::format::{
    moves_to_entries, read_drawing, read_json, read_moves, to_json, write_text, DrawingFile, SchemeFile,
};
use crate::render::{render, render_move};
use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rotdraw_core::archdeacon::{count_nonplanar_k4, harary_hill, hill_climb, Climb};
use rotdraw_core::gen::{convex_drawing, cylindrical_drawing, perturb};
use rotdraw_core::map::{from_crossing_data, MapError};
use rotdraw_core::{apply_sequence, crossing_set_of, drawings_equivalent, gioan_transform, RotationScheme};
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

#[derive(Parser, Debug)]
#[command(name = "rotdraw", version, about = "Good drawings of complete graphs as combinatorial maps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Kind {
    Convex,
    Cylindrical,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a convex or cylindrical drawing, optionally perturbed by random moves.
    Generate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        /// Number of random moves applied after generation.
        #[arg(long, default_value_t = 0)]
        perturb: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Defaults to standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the crossing pairs forced by the rotation scheme of a scheme or drawing file.
    InferCrossings { file: PathBuf },
    /// Print the number of 4-subsets whose induced rotation is non-planar.
    CountK4 {
        #[arg(long)]
        scheme: PathBuf,
    },
    /// Search for schemes with few non-planar K4s, starting from the convex scheme.
    Hillclimb {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        /// Restart r uses seed + r.
        #[arg(long, default_value_t = 1)]
        restarts: u64,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        threads: Option<usize>,
        /// One row per restart.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Best scheme found, as a scheme file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute a move sequence turning one drawing into another with the same scheme.
    Transform {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay a move sequence and check that it reaches the target drawing.
    Verify {
        #[arg(long)]
        drawing: PathBuf,
        #[arg(long)]
        moves: PathBuf,
        #[arg(long)]
        target: PathBuf,
    },
    /// Write an SVG picture; with --moves, before and after panels of one move.
    Render {
        #[arg(long)]
        drawing: PathBuf,
        #[arg(long)]
        moves: Option<PathBuf>,
        /// Index of the move to show; earlier moves are applied first.
        #[arg(long, default_value_t = 0, requires = "moves")]
        step: usize,
        /// Face id pinned as the outer face.
        #[arg(long)]
        outer: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a drawing file and list every violated invariant.
    Validate { file: PathBuf },
}

/// Runs one command. Returns the process exit code: 0 on success, 1 on a
/// domain failure, 2 on a usage error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err:#}");
            1
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => write_text(path, text),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

pub fn execute(command: Command) -> Result<()> {
    match command {
        Command::Generate { kind, n, perturb: k, seed, out } => {
            let base = match kind {
                Kind::Convex => convex_drawing(n),
                Kind::Cylindrical => cylindrical_drawing(n),
            }?;
            let d = if k > 0 { perturb(&base, k, seed)?.drawing } else { base };
            emit(out.as_deref(), &to_json(&DrawingFile::from_drawing(&d)?))
        }
        Command::InferCrossings { file } => {
            let scheme = read_json::<SchemeFile>(&file)?.to_scheme()?;
            let mut stdout = std::io::stdout().lock();
            for (e, f) in crossing_set_of(&scheme) {
                writeln!(stdout, "[[{},{}],[{},{}]]", e.lo(), e.hi(), f.lo(), f.hi())?;
            }
            Ok(())
        }
        Command::CountK4 { scheme } => {
            let s = read_json::<SchemeFile>(&scheme)?.to_scheme()?;
            println!("{}", count_nonplanar_k4(&s));
            Ok(())
        }
        Command::Hillclimb { n, seed, budget, restarts, threads, csv, out } => {
            hillclimb(n, seed, budget, restarts, threads, csv.as_deref(), out.as_deref())
        }
        Command::Transform { from, to, out } => {
            let d1 = read_drawing(&from)?;
            let d2 = read_drawing(&to)?;
            let moves = gioan_transform(&d1, &d2)?;
            emit(out.as_deref(), &to_json(&moves_to_entries(&moves)))?;
            if out.is_some() {
                println!("{} moves", moves.len());
            }
            Ok(())
        }
        Command::Verify { drawing, moves, target } => {
            let d = read_drawing(&drawing)?;
            let t = read_drawing(&target)?;
            let seq = read_moves(&moves, d.n())?;
            let reached = apply_sequence(&d, &seq)?;
            if !drawings_equivalent(&reached, &t) {
                bail!("all {} moves apply but the result differs from the target", seq.len());
            }
            println!("ok: {} moves reach the target", seq.len());
            Ok(())
        }
        Command::Render { drawing, moves, step, outer, out } => {
            let d = read_drawing(&drawing)?;
            let svg = match moves {
                None => render(&d, outer)?,
                Some(path) => {
                    let seq = read_moves(&path, d.n())?;
                    let Some(&m) = seq.get(step) else {
                        bail!("step {step} is past the end of a {}-move sequence", seq.len());
                    };
                    render_move(&apply_sequence(&d, &seq[..step])?, m, outer)?
                }
            };
            emit(out.as_deref(), &svg)
        }
        Command::Validate { file } => {
            let data = read_json::<DrawingFile>(&file)?.to_data()?;
            match from_crossing_data(&data) {
                Ok(d) => {
                    println!("valid: n = {}, {} crossings, {} faces", d.n(), d.crossing_count(), d.faces().len());
                    Ok(())
                }
                Err(MapError::Invalid(report)) => {
                    for v in &report.violations {
                        eprintln!("{v}");
                    }
                    bail!("{} violations", report.violations.len())
                }
                Err(err) => Err(err).context("not a good drawing"),
            }
        }
    }
}

fn hillclimb(
    n: usize,
    seed: u64,
    budget: usize,
    restarts: u64,
    threads: Option<usize>,
    csv: Option<&Path>,
    out: Option<&Path>,
) -> Result<()> {
    if n < 4 {
        bail!("hillclimb needs n >= 4");
    }
    if budget == 0 || restarts == 0 {
        bail!("budget and restarts must be positive");
    }
    let start = RotationScheme::convex(n);
    let workers = threads
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()))
        .clamp(1, restarts as usize);
    let next = AtomicU64::new(0);
    let results: Mutex<Vec<(u64, Climb)>> = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let r = next.fetch_add(1, Ordering::Relaxed);
                if r >= restarts {
                    break;
                }
                let climb = hill_climb(&start, seed.wrapping_add(r), budget);
                results.lock().expect("no worker panics while holding the lock").push((r, climb));
            });
        }
    });
    let mut results = results.into_inner().expect("workers finished");
    results.sort_by_key(|(r, _)| *r);

    let bound = harary_hill(n as u64);
    if let Some(path) = csv {
        let mut text = String::from("restart,seed,n,budget,start_count,best_count,accepted,harary_hill,below_bound\n");
        for (r, c) in &results {
            text += &format!(
                "{r},{},{n},{budget},{},{},{},{bound},{}\n",
                seed.wrapping_add(*r),
                c.start_count,
                c.best.count,
                c.accepted,
                c.below_bound.len()
            );
        }
        write_text(path, &text)?;
    }
    for (r, c) in &results {
        for hit in &c.below_bound {
            eprintln!("restart {r}: scheme with count {} below H({n}) = {bound}", hit.count);
        }
    }
    let (r, best) = results
        .iter()
        .min_by_key(|(r, c)| (c.best.count, *r))
        .expect("at least one restart");
    println!("best {} (H({n}) = {bound}) from restart {r}, seed {}", best.best.count, seed.wrapping_add(*r));
    if let Some(path) = out {
        write_text(path, &to_json(&SchemeFile::from_scheme(&best.best.scheme)))?;
    }
    Ok(())
}
