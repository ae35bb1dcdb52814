//! Command-line front end: spectra, classification, generators, forbidden
//! scans, base typing, block-graph verdicts, exhaustive enumeration and the
//! theorem-verification harness.
//!
//! Exit codes: 0 success, 1 domain errors (bad graph, wrong cyclomatic
//! number), 2 usage errors, 3 when check-theorem finds a disagreement.

use clap::{Parser, Subcommand, ValueEnum};
use std::io::Read;
use trispec::classify::{verify_with, FamilyIndex};
use trispec::enumerate::{enumerate_connected, theorem_check};
use trispec::families::{generate, t3_quotient_partition, t4_quotient_partition, FamilySpec, FORBIDDEN_COUNT};
use trispec::graph::{distance_matrix, parse_graph6, write_graph6, Graph};
use trispec::rational::Rat;
use trispec::spectra::{char_poly, distance_spectrum, quotient_matrix};
use trispec::structure::{
    base_of, base_type, embeds_as_induced, is_block_graph, is_block_star, is_loose_block_graph, EmbedTarget,
};
use trispec::subgraph::scan_forbidden;

#[derive(Parser)]
#[command(name = "trispec", version, about = "Distance spectra of tricyclic graphs: classify, generate, verify")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the distance spectrum of each input graph.
    Spectrum {
        /// graph6 records; read from stdin (one per line) when absent.
        graphs: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Decide lambda_2 < -1/2 structurally for connected tricyclic graphs.
    Classify {
        graphs: Vec<String>,
        /// Also compute lambda_2 and report agreement with the verdict.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
        /// Strictness tolerance (default 1e-9; TRISPEC_TOL overrides).
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Emit a named family member.
    ///
    /// Families: t-general S T H1 H2 H3 H4 H5 | t1 S T | t2 P Q | t3 K |
    /// t4 T | t5 | t6 | t7 | f I | bg P Q | bga
    Generate {
        family: String,
        params: Vec<usize>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// List forbidden subgraphs found as distance-preserving induced
    /// subgraphs (JSON per input line).
    ScanForbidden {
        graphs: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Strip pendant vertices and type the tricyclic base.
    Base {
        graphs: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Block-graph tests and the lambda_2 < -1/2 block-graph verdict.
    Blockgraph {
        graphs: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate connected graphs up to isomorphism (graph6, one per line).
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Exact edge count filter.
        #[arg(long)]
        m: Option<usize>,
        /// Override the search-space guard (n = 9 tricyclic).
        #[arg(long)]
        allow_large: bool,
        /// Print a summary instead of the corpus.
        #[arg(long)]
        json: bool,
    },
    /// Exhaustively verify the characterization for all tricyclic orders up
    /// to --max-n; exits 3 on any disagreement.
    CheckTheorem {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long)]
        allow_large: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check the closed-form characteristic polynomial coefficients of the
    /// t3/t4 quotients over a parameter range.
    Polycheck {
        /// t3 or t4.
        family: String,
        /// Inclusive parameter range, e.g. 1..20.
        #[arg(long, default_value = "1..20")]
        range: String,
    },
}

fn main() {
    std::process::exit(run(Cli::parse()));
}

fn inputs(args: Vec<String>) -> Vec<String> {
    if !args.is_empty() {
        return args;
    }
    let mut buf = String::new();
    std::io::stdin().read_to_string(&mut buf).expect("readable stdin");
    buf.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect()
}

fn json_escape(s: &str) -> String {
    s.chars()
        .flat_map(|c| match c {
            '"' => vec!['\\', '"'],
            '\\' => vec!['\\', '\\'],
            c => vec![c],
        })
        .collect()
}

/// Eigenvalues print with twelve digits after the decimal point.
fn eig(x: f64) -> String {
    format!("{x:.12}")
}

fn default_tol() -> f64 {
    std::env::var("TRISPEC_TOL").ok().and_then(|s| s.parse().ok()).unwrap_or(trispec::classify::SPECTRAL_TOL)
}

fn emit_error(line: &str, err: &trispec::Error, json: bool) {
    if json {
        println!("{{\"graph6\":\"{}\",\"error\":\"{}\"}}", json_escape(line), json_escape(&err.to_string()));
    } else {
        eprintln!("error: {line}: {err}");
    }
}

/// Runs `f` per input line; any domain error turns the final exit code
/// into 1 but does not stop the stream.
fn per_graph(args: Vec<String>, json: bool, mut f: impl FnMut(&str, Graph) -> trispec::Result<()>) -> i32 {
    let mut code = 0;
    for line in inputs(args) {
        let out = parse_graph6(&line).and_then(|g| f(&line, g));
        if let Err(err) = out {
            emit_error(&line, &err, json);
            code = 1;
        }
    }
    code
}

fn run(cli: Cli) -> i32 {
    match cli.cmd {
        Cmd::Spectrum { graphs, json } => per_graph(graphs, json, |line, g| {
            let s = distance_spectrum(&g)?;
            let vals: Vec<String> = s.values().iter().map(|&x| eig(x)).collect();
            if json {
                println!("{{\"graph6\":\"{}\",\"eigenvalues\":[{}]}}", json_escape(line), vals.join(","));
            } else {
                println!("{}", vals.join(", "));
            }
            Ok(())
        }),
        Cmd::Classify { graphs, verify, json, tol } => {
            let tol = tol.unwrap_or_else(default_tol);
            let mut index: Option<(usize, FamilyIndex)> = None;
            per_graph(graphs, json, |line, g| {
                let n = g.n();
                if !matches!(&index, Some((m, _)) if *m == n) {
                    index = Some((n, FamilyIndex::new(n)));
                }
                let idx = &index.as_ref().expect("index built above").1;
                let v = if verify {
                    verify_with(&g, tol, idx)?
                } else {
                    trispec::classify::classify_with(&g, idx)?
                };
                if json {
                    let witness = v
                        .witness
                        .as_ref()
                        .map(|w| format!("\"{}\"", json_escape(&w.to_string())))
                        .unwrap_or_else(|| "null".into());
                    let reason = v
                        .reject_reason
                        .as_ref()
                        .map(|r| format!("\"{}\"", json_escape(&r.to_string())))
                        .unwrap_or_else(|| "null".into());
                    let l2 = v.lambda2.map(eig).unwrap_or_else(|| "null".into());
                    let agree = v.agreement.map(|a| a.to_string()).unwrap_or_else(|| "null".into());
                    println!(
                        "{{\"graph6\":\"{}\",\"accepted\":{},\"witness\":{},\"reject_reason\":{},\"lambda2\":{},\"agreement\":{},\"boundary_suspect\":{}}}",
                        json_escape(line), v.accepted, witness, reason, l2, agree, v.boundary_suspect
                    );
                } else {
                    let mut out = if v.accepted {
                        format!("accepted, witness {}", v.witness.as_ref().expect("accepted has witness"))
                    } else {
                        format!("rejected, reason {}", v.reject_reason.as_ref().expect("rejected has reason"))
                    };
                    if let Some(l2) = v.lambda2 {
                        out.push_str(&format!(
                            ", lambda2 {}, agreement {}",
                            eig(l2),
                            v.agreement.expect("verify fills agreement")
                        ));
                        if v.boundary_suspect {
                            out.push_str(", boundary-suspect");
                        }
                    }
                    println!("{out}");
                }
                Ok(())
            })
        }
        Cmd::Generate { family, params, format } => match parse_family(&family, &params) {
            Ok(spec) => match generate(&spec) {
                Ok(g) => {
                    match format {
                        GraphFormat::Graph6 => println!("{}", write_graph6(&g)),
                        GraphFormat::Dot => print!("{}", g.to_dot()),
                    }
                    0
                }
                Err(err) => {
                    eprintln!("error: {err}");
                    1
                }
            },
            Err(msg) => {
                eprintln!("usage error: {msg}");
                2
            }
        },
        Cmd::ScanForbidden { graphs, json: _ } => per_graph(graphs, true, |line, g| {
            let hits = scan_forbidden(&g)?;
            let items: Vec<String> = hits
                .iter()
                .map(|(i, occ)| {
                    let subset: Vec<String> = occ.subset.iter().map(usize::to_string).collect();
                    format!("{{\"pattern\":\"F_{i}\",\"subset\":[{}]}}", subset.join(","))
                })
                .collect();
            println!("{{\"graph6\":\"{}\",\"found\":[{}]}}", json_escape(line), items.join(","));
            Ok(())
        }),
        Cmd::Base { graphs, json } => per_graph(graphs, json, |line, g| {
            let base = base_of(&g)?;
            let bt = base_type(&base)?;
            let params: Vec<String> = bt.params.iter().map(usize::to_string).collect();
            if json {
                println!(
                    "{{\"graph6\":\"{}\",\"base\":\"{}\",\"label\":\"{}\",\"params\":[{}]}}",
                    json_escape(line),
                    json_escape(&write_graph6(&base)),
                    bt.label,
                    params.join(",")
                );
            } else {
                println!("base {} label {} params [{}]", write_graph6(&base), bt.label, params.join(","));
            }
            Ok(())
        }),
        Cmd::Blockgraph { graphs, json } => per_graph(graphs, json, |line, g| {
            let block_graph = is_block_graph(&g)?;
            let (star, loose, bg, bga, below) = if block_graph {
                let star = is_block_star(&g)?;
                let loose = is_loose_block_graph(&g)?;
                let bg = embeds_as_induced(&g, EmbedTarget::BgFamily)?;
                let bga = embeds_as_induced(&g, EmbedTarget::Bga)?;
                (star, loose, bg, bga, Some(star || loose || bg || bga))
            } else {
                (false, false, false, false, None)
            };
            if json {
                let below = below.map(|b| b.to_string()).unwrap_or_else(|| "null".into());
                println!(
                    "{{\"graph6\":\"{}\",\"block_graph\":{block_graph},\"block_star\":{star},\"loose\":{loose},\"embeds_bg\":{bg},\"embeds_bga\":{bga},\"lambda2_below\":{below}}}",
                    json_escape(line)
                );
            } else if let Some(below) = below {
                println!(
                    "block graph; star {star}, loose {loose}, embeds-bg {bg}, embeds-bga {bga}; lambda2 below -1/2: {below}"
                );
            } else {
                println!("not a block graph");
            }
            Ok(())
        }),
        Cmd::Enumerate { n, m, allow_large, json } => match enumerate_connected(n, m, allow_large) {
            Ok(classes) => {
                if json {
                    let m_str = m.map(|m| m.to_string()).unwrap_or_else(|| "null".into());
                    println!("{{\"n\":{n},\"m\":{m_str},\"classes\":{}}}", classes.len());
                } else {
                    for g in &classes {
                        println!("{}", write_graph6(g));
                    }
                }
                0
            }
            Err(err) => {
                eprintln!("error: {err}");
                1
            }
        },
        Cmd::CheckTheorem { max_n, allow_large, json } => match theorem_check(max_n, allow_large) {
            Ok(reports) => {
                let mut disagreed = false;
                for r in &reports {
                    disagreed |= !r.disagreements.is_empty();
                    if json {
                        let dis: Vec<String> =
                            r.disagreements.iter().map(|s| format!("\"{}\"", json_escape(s))).collect();
                        let bound: Vec<String> =
                            r.boundary_suspects.iter().map(|s| format!("\"{}\"", json_escape(s))).collect();
                        let def: Vec<String> =
                            r.deferred_k4_base.iter().map(|s| format!("\"{}\"", json_escape(s))).collect();
                        println!(
                            "{{\"n\":{},\"total\":{},\"accepted\":{},\"spectral_positive\":{},\"disagreements\":[{}],\"boundary_suspects\":[{}],\"deferred_k4_base\":[{}],\"chordal\":{},\"chordal_spectral_positive\":{},\"runtime_s\":{:.3}}}",
                            r.n,
                            r.total_graphs,
                            r.accepted,
                            r.spectral_positive,
                            dis.join(","),
                            bound.join(","),
                            def.join(","),
                            r.chordal.total,
                            r.chordal.spectral_positive,
                            r.runtime.as_secs_f64()
                        );
                    } else {
                        println!(
                            "n={}: classes={} accepted={} spectral={} deferred-k4={} disagreements={} boundary={} chordal={} runtime={:.3}s",
                            r.n,
                            r.total_graphs,
                            r.accepted,
                            r.spectral_positive,
                            r.deferred_k4_base.len(),
                            r.disagreements.len(),
                            r.boundary_suspects.len(),
                            r.chordal.total,
                            r.runtime.as_secs_f64()
                        );
                    }
                }
                if disagreed {
                    3
                } else {
                    0
                }
            }
            Err(err) => {
                eprintln!("error: {err}");
                1
            }
        },
        Cmd::Polycheck { family, range } => {
            let Some((lo, hi)) = parse_range(&range) else {
                eprintln!("usage error: --range expects A..B, got {range}");
                return 2;
            };
            let mut ok = 0usize;
            let mut total = 0usize;
            for v in lo..=hi {
                total += 1;
                let holds = match family.as_str() {
                    "t3" => t3_poly_holds(v),
                    "t4" => t4_poly_holds(v),
                    other => {
                        eprintln!("usage error: polycheck family must be t3 or t4, got {other}");
                        return 2;
                    }
                };
                match holds {
                    Ok(true) => ok += 1,
                    Ok(false) => eprintln!("identity fails at parameter {v}"),
                    Err(err) => {
                        eprintln!("error: {err}");
                        return 1;
                    }
                }
            }
            println!("{ok}/{total} coefficient identities hold");
            if ok == total {
                0
            } else {
                1
            }
        }
    }
}

fn parse_family(name: &str, params: &[usize]) -> Result<FamilySpec, String> {
    let need = |k: usize| -> Result<(), String> {
        if params.len() == k {
            Ok(())
        } else {
            Err(format!("family {name} expects {k} parameter(s), got {}", params.len()))
        }
    };
    match name {
        "t-general" => {
            need(7)?;
            Ok(FamilySpec::TGeneral {
                s: params[0],
                t: params[1],
                h: [params[2], params[3], params[4], params[5], params[6]],
            })
        }
        "t1" => {
            need(2)?;
            Ok(FamilySpec::T1Base { s: params[0], t: params[1] })
        }
        "t2" => {
            need(2)?;
            Ok(FamilySpec::T2Base { p: params[0], q: params[1] })
        }
        "t3" => {
            need(1)?;
            Ok(FamilySpec::T3 { k: params[0] })
        }
        "t4" => {
            need(1)?;
            Ok(FamilySpec::T4 { t: params[0] })
        }
        "t5" => {
            need(0)?;
            Ok(FamilySpec::T5)
        }
        "t6" => {
            need(0)?;
            Ok(FamilySpec::T6)
        }
        "t7" => {
            need(0)?;
            Ok(FamilySpec::T7)
        }
        "f" => {
            need(1)?;
            if (1..=FORBIDDEN_COUNT).contains(&params[0]) {
                Ok(FamilySpec::Forbidden { i: params[0] })
            } else {
                Err(format!("forbidden index must be 1..=13, got {}", params[0]))
            }
        }
        "bg" => {
            need(2)?;
            Ok(FamilySpec::Bg { p: params[0], q: params[1] })
        }
        "bga" => {
            need(0)?;
            Ok(FamilySpec::Bga)
        }
        other => Err(format!("unknown family {other}")),
    }
}

fn parse_range(s: &str) -> Option<(usize, usize)> {
    let (lo, hi) = s.split_once("..")?;
    let lo: usize = lo.parse().ok()?;
    let hi: usize = hi.trim_start_matches('=').parse().ok()?;
    (lo <= hi).then_some((lo, hi))
}

fn t3_poly_holds(k: usize) -> trispec::Result<bool> {
    if k == 0 {
        return Ok(true); // the quotient needs a nonempty pendant cell
    }
    let g = generate(&FamilySpec::T3 { k })?;
    let d = distance_matrix(&g)?;
    let q = quotient_matrix(&d, &t3_quotient_partition(k))?;
    let p = char_poly(&q)?;
    let kk = k as i128;
    let want = [1, -(2 * kk + 6), -(9 * kk + 31), -(10 * kk + 36), -(3 * kk + 12)];
    Ok(q.is_equitable()
        && p.integer_coeffs().as_deref() == Some(&want[..])
        && p.eval(Rat::new(-1, 2)?)? == Rat::new(-15, 16)?)
}

fn t4_poly_holds(t: usize) -> trispec::Result<bool> {
    if t == 0 {
        return Ok(true);
    }
    let g = generate(&FamilySpec::T4 { t })?;
    let d = distance_matrix(&g)?;
    let q = quotient_matrix(&d, &t4_quotient_partition(t))?;
    let p = char_poly(&q)?;
    let tt = t as i128;
    let want = [1, -(2 * tt + 1), -(15 * tt + 35), -(35 * tt + 91), -(26 * tt + 76), -(6 * tt + 20)];
    Ok(q.is_equitable()
        && p.integer_coeffs().as_deref() == Some(&want[..])
        && p.eval(Rat::new(-1, 2)?)? == Rat::new(-15, 32)?
        && p.eval(Rat::new(-3, 1)?)? == Rat::new(10, 1)?)
}
