//! Command-line frontend: every library operation behind a subcommand, with
//! JSON or aligned-text output and batch verification drivers.
//!
//! Exit codes: 0 success, 1 usage error, 2 theorem violation, 3 guard
//! overflow.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cbirk::heap::DEFAULT_IDEAL_GUARD;
use cbirk::polytope::{self, question81_probe};
use cbirk::projection::{reconstruct, Projection};
use cbirk::relations;
use cbirk::sorting::{self, c_sorting_word_blocks, heap_grid, singletons, SingletonTable};
use cbirk::transfer::{self, TransferCertificate};
use cbirk::{BigUint, CoxeterElement, Error, Heap, Permutation, Word};

#[derive(Parser)]
#[command(
    name = "cbirk",
    version,
    about = "Exact toolkit for c-Birkhoff polytopes and heap order polytopes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Rank of the group A_n (acts on n+1 letters).
    #[arg(long)]
    n: usize,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Cap on enumerations (order ideals, search frontiers).
    #[arg(long, default_value_t = DEFAULT_IDEAL_GUARD)]
    guard: usize,
}

#[derive(Subcommand)]
enum Command {
    /// List all c-singletons with their order ideals.
    Singletons {
        #[command(flatten)]
        common: Common,
        /// Coxeter word, e.g. 1432657 or 1,4,3,2,6,5,7.
        #[arg(long)]
        c: String,
    },
    /// Emit a heap: the grid heap of c, or the heap of a reduced word.
    Heap {
        #[command(flatten)]
        common: Common,
        #[arg(long, conflicts_with = "word")]
        c: Option<String>,
        #[arg(long)]
        word: Option<String>,
    },
    /// c-sorting word, divider blocks, and sortable/singleton status.
    Sortword {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        c: String,
        /// Permutation in one-line notation.
        #[arg(long)]
        perm: String,
    },
    /// Emit the affine relation families and verify them on every singleton.
    Relations {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        c: String,
    },
    /// Emit the projection cell order; with --perm, also the projected vector.
    Project {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        c: String,
        #[arg(long)]
        perm: Option<String>,
    },
    /// Print the unitriangular transfer matrix U_c.
    Umatrix {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        c: String,
    },
    /// Verify the transfer on every singleton; emits a certificate per element.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, conflicts_with = "sweep")]
        c: Option<String>,
        /// Run over all 2^(n-1) Coxeter elements of rank n.
        #[arg(long)]
        sweep: bool,
        /// Worker threads for the sweep.
        #[arg(long, default_value_t = 1)]
        parallel: usize,
    },
    /// Normalized volume of Birk(c) (= linear extensions of the heap).
    Volume {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        c: String,
    },
    /// Probe an arbitrary reduced word: order polytope vs. matrix hull.
    Q81 {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        word: String,
    },
    /// Full battery over all Coxeter elements of rank n: transfer, relations,
    /// and projection round trips.
    Sweep {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        parallel: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let _ = err.print();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(match err {
                Error::TheoremViolation(_) => 2,
                Error::GuardExceeded { .. } => 3,
                _ => 1,
            })
        }
    }
}

/// Rank ceilings: structural commands stop at rank 8, exhaustive sweeps at
/// rank 6 (2^(n-1) elements each with full verification).
fn check_rank(n: usize, sweep: bool) -> Result<(), Error> {
    let limit = if sweep { 6 } else { 8 };
    if n > limit {
        return Err(Error::GuardExceeded {
            what: if sweep {
                "sweeping all Coxeter elements"
            } else {
                "running a structural command"
            },
            limit,
        });
    }
    Ok(())
}

fn run(command: Command) -> Result<(), Error> {
    match &command {
        Command::Verify { common, sweep, .. } => check_rank(common.n, *sweep)?,
        Command::Sweep { common, .. } => check_rank(common.n, true)?,
        Command::Singletons { common, .. }
        | Command::Heap { common, .. }
        | Command::Sortword { common, .. }
        | Command::Relations { common, .. }
        | Command::Project { common, .. }
        | Command::Umatrix { common, .. }
        | Command::Volume { common, .. }
        | Command::Q81 { common, .. } => check_rank(common.n, false)?,
    }
    match command {
        Command::Singletons { common, c } => {
            let c = CoxeterElement::parse(&c, common.n)?;
            let pairs = singletons(&c, common.guard)?;
            match common.format {
                Format::Json => {
                    let items: Vec<_> = pairs
                        .iter()
                        .map(|(w, ideal)| {
                            json!({
                                "permutation": w.to_string(),
                                "length": w.length(),
                                "ideal": ideal.elements().collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    emit(&json!({ "c": c, "count": pairs.len(), "singletons": items }));
                }
                Format::Text => {
                    println!("{} c-singletons for c = {c}:", pairs.len());
                    for (w, ideal) in &pairs {
                        let elements: Vec<String> =
                            ideal.elements().map(|e| e.to_string()).collect();
                        println!("  {w}  ideal {{{}}}", elements.join(","));
                    }
                }
            }
            Ok(())
        }
        Command::Heap { common, c, word } => {
            let heap = match (c, word) {
                (Some(c), None) => heap_grid(&CoxeterElement::parse(&c, common.n)?),
                (None, Some(word)) => Heap::of_word(&Word::parse(&word, common.n)?)?,
                _ => {
                    return Err(Error::Parse(
                        "exactly one of --c or --word is required".into(),
                    ))
                }
            };
            match common.format {
                Format::Json => emit(&heap.to_json()),
                Format::Text => {
                    println!("length {} over s_1..s_{}", heap.len(), heap.rank());
                    println!("labels: {:?}", heap.labels());
                    println!("covers: {:?}", heap.covers());
                    if let Some(coords) = heap.coords() {
                        println!("coords: {coords:?}");
                    }
                }
            }
            Ok(())
        }
        Command::Sortword { common, c, perm } => {
            let c = CoxeterElement::parse(&c, common.n)?;
            let w = Permutation::parse(&perm)?;
            if w.rank() != common.n {
                return Err(Error::Parse(format!(
                    "permutation {perm} does not act on {} letters",
                    common.n + 1
                )));
            }
            let (word, blocks) = c_sorting_word_blocks(&c, &w);
            let sortable = sorting::is_c_sortable(&c, &w);
            let singleton = sorting::is_c_singleton(&c, &w);
            match common.format {
                Format::Json => emit(&json!({
                    "c": c,
                    "permutation": w.to_string(),
                    "sorting_word": word,
                    "blocks": blocks,
                    "c_sortable": sortable,
                    "c_singleton": singleton,
                })),
                Format::Text => {
                    let mut pretty = String::new();
                    for (idx, &letter) in word.letters().iter().enumerate() {
                        if idx > 0 && blocks[idx] != blocks[idx - 1] {
                            pretty.push('|');
                        }
                        pretty.push_str(&letter.to_string());
                    }
                    println!("sort_c({w}) = {pretty}");
                    println!("c-sortable: {sortable}");
                    println!("c-singleton: {singleton}");
                }
            }
            Ok(())
        }
        Command::Relations { common, c } => {
            let c = CoxeterElement::parse(&c, common.n)?;
            let rels = relations::independent_relation_set(&c);
            let rank = relations::relation_rank(&rels, common.n);
            let pairs = singletons(&c, common.guard)?;
            for (w, _) in &pairs {
                let x = w.matrix().to_matrix();
                for rel in &rels {
                    if !rel.holds_on(&x) {
                        return Err(Error::TheoremViolation(format!(
                            "relation {:?} fails on singleton {w} for c = {c}",
                            rel.tag
                        )));
                    }
                }
            }
            match common.format {
                Format::Json => emit(&json!({
                    "c": c,
                    "relations": rels.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                    "count": rels.len(),
                    "rank": rank,
                    "ambient_dim": (common.n + 1) * (common.n + 1),
                    "cut_dimension": (common.n + 1) * (common.n + 1) - rank,
                    "singletons_checked": pairs.len(),
                    "ok": true,
                })),
                Format::Text => {
                    println!(
                        "{} independent relations (rank {rank}) for c = {c}; all hold on {} singletons",
                        rels.len(),
                        pairs.len()
                    );
                }
            }
            Ok(())
        }
        Command::Project { common, c, perm } => {
            let c = CoxeterElement::parse(&c, common.n)?;
            let proj = Projection::new(&c);
            let vector = perm
                .map(|p| -> Result<Vec<String>, Error> {
                    let w = Permutation::parse(&p)?;
                    Ok(proj
                        .project_perm(&w)
                        .iter()
                        .map(ToString::to_string)
                        .collect())
                })
                .transpose()?;
            match common.format {
                Format::Json => emit(&json!({
                    "c": c,
                    "entries": proj.entries().iter().map(|&(i, j)| vec![i, j]).collect::<Vec<_>>(),
                    "vector": vector,
                })),
                Format::Text => {
                    println!("projection order for c = {c}:");
                    for (pos, &(i, j)) in proj.entries().iter().enumerate() {
                        println!("  #{:<3} ({i},{j})", pos + 1);
                    }
                    if let Some(v) = vector {
                        println!("projected vector: [{}]", v.join(","));
                    }
                }
            }
            Ok(())
        }
        Command::Umatrix { common, c } => {
            let c = CoxeterElement::parse(&c, common.n)?;
            let table = SingletonTable::with_guard(&c, common.guard)?;
            let u = transfer::compute_u(&table)?;
            match common.format {
                Format::Json => {
                    let rows: Vec<Vec<String>> = (0..u.rows())
                        .map(|r| u.row(r).iter().map(ToString::to_string).collect())
                        .collect();
                    emit(&json!({ "c": c, "size": u.rows(), "u": rows }));
                }
                Format::Text => print!("{u}"),
            }
            Ok(())
        }
        Command::Verify {
            common,
            c,
            sweep,
            parallel,
        } => {
            let elements = if sweep {
                CoxeterElement::all(common.n)
            } else {
                let word =
                    c.ok_or_else(|| Error::Parse("verify needs --c <word> or --sweep".into()))?;
                vec![CoxeterElement::parse(&word, common.n)?]
            };
            let guard = common.guard;
            let certificates = run_parallel(elements, parallel, move |c| certify(c, guard))?;
            match common.format {
                Format::Json => {
                    let items: Vec<_> = certificates.iter().map(certificate_json).collect();
                    emit(&json!(items));
                }
                Format::Text => {
                    for (cert, volume) in &certificates {
                        println!(
                            "c = {}: {} singletons, volume {volume}, ok",
                            cert.c, cert.checked_singletons
                        );
                    }
                }
            }
            Ok(())
        }
        Command::Volume { common, c } => {
            let c = CoxeterElement::parse(&c, common.n)?;
            let volume = polytope::normalized_volume(&heap_grid(&c), common.guard)?;
            match common.format {
                Format::Json => emit(&json!({ "c": c, "volume": volume.to_string() })),
                Format::Text => println!("{volume}"),
            }
            Ok(())
        }
        Command::Q81 { common, word } => {
            let word = Word::parse(&word, common.n)?;
            let report = question81_probe(&word, common.guard)?;
            match common.format {
                Format::Json => emit(&serde_json::to_value(&report).expect("serializable")),
                Format::Text => {
                    println!(
                        "word {}: {} ideals, {} distinct matrices, hull dim {} vs order-polytope dim {} -> {}",
                        report.word,
                        report.ideal_count,
                        report.distinct_matrices,
                        report.cloud_dim,
                        report.order_polytope_dim,
                        match report.verdict {
                            polytope::Verdict::PossibleEquivalent => "possible-equivalent",
                            polytope::Verdict::Counterexample => "counterexample",
                        }
                    );
                }
            }
            Ok(())
        }
        Command::Sweep { common, parallel } => {
            let elements = CoxeterElement::all(common.n);
            let guard = common.guard;
            let reports = run_parallel(elements, parallel, move |c| -> Result<_, Error> {
                let (cert, volume) = certify(c, guard)?;
                let rels = relations::independent_relation_set(c);
                let rank = relations::relation_rank(&rels, c.rank());
                let proj = Projection::new(c);
                let pairs = singletons(c, guard)?;
                for (w, _) in &pairs {
                    let x = w.matrix().to_matrix();
                    for rel in &rels {
                        if !rel.holds_on(&x) {
                            return Err(Error::TheoremViolation(format!(
                                "relation {:?} fails on {w} for c = {c}",
                                rel.tag
                            )));
                        }
                    }
                    let back = reconstruct(c, &proj, &proj.project(&x)?)?;
                    if back != x {
                        return Err(Error::TheoremViolation(format!(
                            "projection round trip fails on {w} for c = {c}"
                        )));
                    }
                }
                Ok((cert, volume, rels.len(), rank))
            })?;
            match common.format {
                Format::Json => {
                    let items: Vec<_> = reports
                        .iter()
                        .map(|(cert, volume, rel_count, rank)| {
                            let mut value = certificate_json(&(cert.clone(), volume.clone()));
                            value["relations"] = json!(rel_count);
                            value["relation_rank"] = json!(rank);
                            value
                        })
                        .collect();
                    emit(&json!(items));
                }
                Format::Text => {
                    for (cert, volume, rel_count, rank) in &reports {
                        println!(
                            "c = {}: {} singletons, volume {volume}, {rel_count} relations (rank {rank}), round trips ok",
                            cert.c, cert.checked_singletons
                        );
                    }
                }
            }
            Ok(())
        }
    }
}

fn certify(c: &CoxeterElement, guard: usize) -> Result<(TransferCertificate, BigUint), Error> {
    let table = SingletonTable::with_guard(c, guard)?;
    let cert = transfer::verify_main_theorem(&table)?;
    let volume = table.heap().count_linear_extensions(guard)?;
    Ok((cert, volume))
}

// volumes travel as strings; serde_json has no big-integer type
fn certificate_json((cert, volume): &(TransferCertificate, BigUint)) -> serde_json::Value {
    json!({
        "c": cert.c,
        "n": cert.n,
        "N": cert.size,
        "singletons": cert.checked_singletons,
        "volume": volume.to_string(),
        "ok": cert.vertex_bijection_ok,
    })
}

/// Maps `f` over `items` on up to `workers` threads, preserving input order
/// in the output.
fn run_parallel<T: Sync, U: Send>(
    items: Vec<T>,
    workers: usize,
    f: impl Fn(&T) -> Result<U, Error> + Sync,
) -> Result<Vec<U>, Error> {
    let workers = workers.max(1).min(items.len().max(1));
    if workers == 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(workers);
    let mut slots: Vec<Option<Result<U, Error>>> = Vec::new();
    slots.resize_with(items.len(), || None);
    std::thread::scope(|scope| {
        for (item_chunk, slot_chunk) in items.chunks(chunk).zip(slots.chunks_mut(chunk)) {
            let f = &f;
            scope.spawn(move || {
                for (item, slot) in item_chunk.iter().zip(slot_chunk.iter_mut()) {
                    *slot = Some(f(item));
                }
            });
        }
    });
    slots
        .into_iter()
        .map(|slot| slot.expect("every slot filled"))
        .collect()
}

fn emit(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("valid json")
    );
}
