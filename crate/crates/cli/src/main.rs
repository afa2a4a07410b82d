//! Command-line front end: compute bigraded homology tables, emit poset
//! and Hasse-graph JSON, and run the named verification suites.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use magh_core::graph::generate;
use magh_core::homology::{cell, kind_name, HomologyGroup};
use magh_core::paths::PathKind;
use magh_core::pk_sigma::{build_pk_sigma, PkSigmaSpec};
use magh_core::suites::{all_passed, run_suite};
use magh_core::{Family, Graph, Poset, RegularCw};

#[derive(Parser)]
#[command(name = "magh", about = "Exact integer magnitude homology of finite graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a bigraded homology table for a graph.
    Compute(ComputeArgs),
    /// Build posets and their Hasse-diagram graphs.
    Poset {
        #[command(subcommand)]
        cmd: PosetCmd,
        /// Write the JSON here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a named verification suite (or "all").
    Verify {
        suite: String,
        /// Worker threads for the suite computations.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Args)]
struct ComputeArgs {
    /// Graph JSON file: {"vertices": [...], "edges": [[i,j],...]}.
    #[arg(long, conflicts_with = "generator")]
    graph: Option<PathBuf>,
    /// Built-in family, e.g. star:4, path:3, complete:5, cycle:6.
    #[arg(long = "gen", value_name = "FAMILY:N")]
    generator: Option<String>,
    /// Homology theory: mh, emh, or dmh.
    #[arg(long, default_value = "mh")]
    kind: String,
    /// Largest homological degree; default |V| - 1.
    #[arg(long)]
    kmax: Option<usize>,
    /// Largest length grading; default the maximal self-avoiding length.
    #[arg(long)]
    lmax: Option<u32>,
    /// Restrict to one endpoint summand, as "a,b" vertex indices.
    #[arg(long)]
    endpoints: Option<String>,
    /// Write the result JSON here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Cache directory for per-cell results.
    #[arg(long, env = "MAGH_CACHE")]
    cache: Option<PathBuf>,
    /// Worker threads; default all cores.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum PosetCmd {
    /// The three-layer poset built from a 1-factorization and a
    /// fixed-point-free permutation of its blocks.
    PkSigma {
        #[arg(long)]
        k: usize,
        /// One-line permutation of 1..k-1, e.g. 2,3,1; default a cyclic
        /// shift.
        #[arg(long)]
        sigma: Option<String>,
        /// Blocks as pairs, e.g. "1-2,3-4;1-3,2-4;1-4,2-3"; default the
        /// round-robin 1-factorization.
        #[arg(long)]
        blocks: Option<String>,
    },
    /// A named built-in poset: rp2, moore-z3, moore-z5, lens-3-1, pk4,
    /// pk6.
    Corpus { name: String },
    /// Face poset of a regular CW complex given as cell JSON.
    FromCw { file: PathBuf },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> magh_core::Result<ExitCode> {
    match cli.cmd {
        Cmd::Compute(args) => cmd_compute(args),
        Cmd::Poset { cmd, out } => cmd_poset(cmd, out.as_deref()),
        Cmd::Verify { suite, jobs } => cmd_verify(&suite, jobs),
    }
}

fn set_jobs(jobs: Option<usize>) {
    if let Some(n) = jobs {
        // ignore failure when a global pool already exists (tests)
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn parse_generator(spec: &str) -> magh_core::Result<Graph> {
    let err = || magh_core::Error::InvalidGenerator(format!("expected FAMILY:N, got {spec:?}"));
    let (family, n) = spec.split_once(':').ok_or_else(err)?;
    let n: usize = n.parse().map_err(|_| err())?;
    let family = match family {
        "star" => Family::Star(n),
        "path" => Family::Path(n),
        "complete" => Family::Complete(n),
        "cycle" => Family::Cycle(n),
        other => {
            return Err(magh_core::Error::InvalidGenerator(format!(
                "unknown family {other:?}"
            )))
        }
    };
    generate(family)
}

fn load_graph(args: &ComputeArgs) -> magh_core::Result<Graph> {
    match (&args.graph, &args.generator) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| magh_core::Error::InvalidGraph(format!("{}: {e}", path.display())))?;
            let value: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| magh_core::Error::InvalidGraph(format!("{}: {e}", path.display())))?;
            Graph::from_json(&value)
        }
        (None, Some(spec)) => parse_generator(spec),
        _ => Err(magh_core::Error::InvalidGraph(
            "pass exactly one of --graph or --gen".into(),
        )),
    }
}

fn graph_id(g: &Graph) -> String {
    let mut h = Sha256::new();
    h.update(g.to_json().to_string().as_bytes());
    format!("{:x}", h.finalize())
}

fn cache_key(id: &str, kind: PathKind, k: usize, l: u32, ends: Option<(u32, u32)>) -> String {
    let mut h = Sha256::new();
    h.update(id.as_bytes());
    h.update(kind_name(kind).as_bytes());
    h.update(format!(":{k}:{l}:{ends:?}").as_bytes());
    format!("{:x}", h.finalize())
}

fn read_cached(dir: &Path, key: &str) -> Option<HomologyGroup> {
    let text = std::fs::read_to_string(dir.join(key).with_extension("json")).ok()?;
    let v: serde_json::Value = serde_json::from_str(&text).ok()?;
    let rank = v.get("rank")?.as_u64()? as usize;
    let torsion = v
        .get("torsion")?
        .as_array()?
        .iter()
        .map(|t| t.as_str().and_then(|s| s.parse().ok()))
        .collect::<Option<Vec<num_bigint::BigInt>>>()?;
    Some(HomologyGroup { rank, torsion })
}

fn write_cached(dir: &Path, key: &str, h: &HomologyGroup) -> magh_core::Result<()> {
    let io = |e: std::io::Error| magh_core::Error::InvalidGraph(format!("cache: {e}"));
    std::fs::create_dir_all(dir).map_err(io)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(h.to_json().to_string().as_bytes()).map_err(io)?;
    tmp.persist(dir.join(key).with_extension("json"))
        .map_err(|e| io(e.error))?;
    Ok(())
}

fn parse_endpoints(s: &str) -> magh_core::Result<(u32, u32)> {
    let err = || magh_core::Error::InvalidGraph(format!("expected --endpoints a,b, got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(err)?;
    Ok((
        a.trim().parse().map_err(|_| err())?,
        b.trim().parse().map_err(|_| err())?,
    ))
}

fn cmd_compute(args: ComputeArgs) -> magh_core::Result<ExitCode> {
    set_jobs(args.jobs);
    let g = load_graph(&args)?;
    let kind = PathKind::parse(&args.kind)?;
    let ends = args.endpoints.as_deref().map(parse_endpoints).transpose()?;
    let kmax = args.kmax.unwrap_or(g.vertex_count() - 1);
    let lmax = match args.lmax {
        Some(l) => l,
        None => magh_core::support_bounds(&g)?.l_max,
    };
    let id = graph_id(&g);

    let grid: Vec<(usize, u32)> = (0..=kmax)
        .flat_map(|k| (k as u32..=lmax).map(move |l| (k, l)))
        .collect();
    let computed: Vec<((usize, u32), HomologyGroup)> = grid
        .par_iter()
        .map(|&(k, l)| {
            let h = match &args.cache {
                Some(dir) => {
                    let key = cache_key(&id, kind, k, l, ends);
                    match read_cached(dir, &key) {
                        Some(h) => Ok(h),
                        None => {
                            let h = cell(&g, kind, k, l, ends)?;
                            write_cached(dir, &key, &h)?;
                            Ok(h)
                        }
                    }
                }
                None => cell(&g, kind, k, l, ends),
            }?;
            Ok(((k, l), h))
        })
        .collect::<magh_core::Result<_>>()?;

    let mut cells = serde_json::Map::new();
    for ((k, l), h) in computed {
        if !h.is_trivial() {
            cells.insert(format!("({k},{l})"), h.to_json());
        }
    }
    let result = serde_json::json!({
        "kind": kind_name(kind),
        "graph": id,
        "cells": cells,
    });
    emit(&result, args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn parse_sigma(s: &str) -> magh_core::Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| magh_core::Error::InvalidPkSigma(format!("bad sigma entry {t:?}")))
        })
        .collect()
}

fn parse_blocks(s: &str) -> magh_core::Result<Vec<Vec<(usize, usize)>>> {
    let err = |t: &str| magh_core::Error::InvalidPkSigma(format!("bad block pair {t:?}"));
    s.split(';')
        .map(|block| {
            block
                .split(',')
                .map(|pair| {
                    let (i, j) = pair.trim().split_once('-').ok_or_else(|| err(pair))?;
                    Ok((
                        i.parse().map_err(|_| err(pair))?,
                        j.parse().map_err(|_| err(pair))?,
                    ))
                })
                .collect()
        })
        .collect()
}

fn poset_bundle(p: &Poset) -> serde_json::Value {
    let bounded = p.adjoin_bounds();
    let parse = |s: String| serde_json::from_str::<serde_json::Value>(&s).expect("valid json");
    serde_json::json!({
        "poset": parse(p.to_json()),
        "bounded": parse(bounded.to_json()),
        "hasse_graph": bounded.hasse_graph().to_json(),
    })
}

fn cmd_poset(cmd: PosetCmd, out: Option<&Path>) -> magh_core::Result<ExitCode> {
    let value = match cmd {
        PosetCmd::PkSigma { k, sigma, blocks } => {
            let spec = match (sigma, blocks) {
                (None, None) => PkSigmaSpec::round_robin(k)?,
                (sigma, blocks) => {
                    let defaults = PkSigmaSpec::round_robin(k)?;
                    let sigma = sigma.as_deref().map(parse_sigma).transpose()?;
                    let blocks = blocks.as_deref().map(parse_blocks).transpose()?;
                    PkSigmaSpec::new(
                        k,
                        sigma.unwrap_or_else(|| defaults.sigma.clone()),
                        blocks.unwrap_or_else(|| defaults.blocks.clone()),
                    )?
                }
            };
            poset_bundle(&build_pk_sigma(spec)?.poset)
        }
        PosetCmd::Corpus { name } => poset_bundle(&magh_core::corpus::poset_by_name(&name)?),
        PosetCmd::FromCw { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| magh_core::Error::InvalidCw(format!("{}: {e}", file.display())))?;
            let cw = RegularCw::from_json(&text)?;
            poset_bundle(&cw.face_poset())
        }
    };
    emit(&value, out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(suite: &str, jobs: Option<usize>) -> magh_core::Result<ExitCode> {
    set_jobs(jobs);
    let reports = run_suite(suite)?;
    for r in &reports {
        println!("{}", r.to_json());
    }
    let ok = all_passed(&reports);
    println!(
        "{}",
        serde_json::json!({
            "suite": suite,
            "checks": reports.len(),
            "status": if ok { "pass" } else { "fail" },
        })
    );
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn emit(value: &serde_json::Value, out: Option<&Path>) -> magh_core::Result<()> {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    match out {
        Some(path) => std::fs::write(path, text + "\n")
            .map_err(|e| magh_core::Error::InvalidGraph(format!("{}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}
