//! Batch front-end: compute, cross-verify, and export the library's
//! quantities in text, JSON, or LaTeX.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use macq::graphs::{
    gparking_enumerate, inversion_poly, inversion_poly_recursive, parking_gen, sandpile_level,
    sandpile_level_gen, sandpile_recurrent, tutte, tutte_at, tutte_cumulant_form,
};
use macq::macdonald::{
    cumulant_by_definition, cumulant_combinatorial, cumulant_qsym, fully_colored, haglund,
    hook_kostka, CumulantProblem,
};
use macq::shapes::Partition;
use macq::symfunc::{QSymExpansion, SymFunc};
use macq::verify::{suite_axioms, suite_colored, suite_graphs, suite_hooks, suite_main, CheckReport, GraphSweepConfig};
use macq::{Error, MPoly, Multigraph};

#[derive(Parser)]
#[command(
    name = "macq",
    version,
    about = "Exact Macdonald polynomials, cumulants, and graph polynomials"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Parallel sweep width (default: available parallelism; env MACQ_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MacdonaldBasis {
    M,
    S,
    F,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CumulantBasis {
    M,
    S,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Def,
    Comb,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InvRoute {
    Tree,
    Tutte,
    Recursive,
    Cumulant,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Axioms,
    Main,
    Hooks,
    Graphs,
    Colored,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Transformed Macdonald polynomial of one shape.
    Macdonald {
        /// Partition, comma-separated parts, e.g. 2,1
        #[arg(short = 'l', long = "shape")]
        shape: String,
        #[arg(long, value_enum, default_value_t = MacdonaldBasis::M)]
        basis: MacdonaldBasis,
    },
    /// Macdonald cumulant of a tuple of partitions.
    Cumulant {
        /// Semicolon-separated partitions, e.g. "2,1;1,1"
        #[arg(short = 'l', long = "partitions")]
        partitions: String,
        #[arg(long, value_enum, default_value_t = CumulantBasis::M)]
        basis: CumulantBasis,
        /// def | comb | both (both diffs the two routes, exit 2 on mismatch)
        #[arg(long, value_enum, default_value_t = Route::Both)]
        route: Route,
    },
    /// Hook q,t-Kostka coefficient of a cumulant.
    HookKostka {
        #[arg(short = 'l', long = "partitions")]
        partitions: String,
        /// Leg length of the hook (n-s, 1^s).
        #[arg(short = 's', long = "leg")]
        s: usize,
    },
    /// Fully colored Macdonald polynomial: cumulant of the columns.
    FullyColored {
        #[arg(short = 'm', long = "shape")]
        shape: String,
    },
    /// Tutte polynomial of a multigraph (JSON file).
    Tutte {
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        /// 1,q | 1,1 | xy
        #[arg(long = "spec", default_value = "xy")]
        spec: String,
    },
    /// G-inversion polynomial by one or all of its four equivalent routes.
    InversionPoly {
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = InvRoute::All)]
        route: InvRoute,
    },
    /// G-parking functions and their weight generating function.
    Gparking {
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        /// List every parking function.
        #[arg(long)]
        list: bool,
    },
    /// Recurrent sandpile configurations and their level generating function.
    Sandpile {
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        #[arg(long)]
        list: bool,
    },
    /// Run an identity sweep and print a pass/fail table.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Sweep bound: total partition size (axioms/main/hooks/colored)
        /// or exhaustive vertex count (graphs).
        #[arg(long = "max-size")]
        max_size: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let threads = cli.threads.or_else(|| {
        std::env::var("MACQ_THREADS")
            .ok()
            .and_then(|s| s.parse().ok())
    });
    if let Some(n) = threads {
        if n == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(1);
        }
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }

    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let parts: Result<Vec<usize>, _> = s.split(',').map(|p| p.trim().parse::<usize>()).collect();
    let parts = parts.map_err(|_| Error::Invalid(format!("cannot parse partition '{s}'")))?;
    Partition::try_new(parts)
}

fn parse_partition_list(s: &str) -> Result<Vec<Partition>, Error> {
    s.split(';').map(parse_partition).collect()
}

fn load_graph(path: &PathBuf) -> Result<Multigraph, Error> {
    let data = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&data).map_err(|e| Error::Invalid(format!("bad graph JSON: {e}")))
}

fn print_symfunc(f: &SymFunc, format: Format, header: Option<serde_json::Value>) {
    match format {
        Format::Text => println!("{}", f.to_text()),
        Format::Latex => println!("{}", f.to_latex()),
        Format::Json => {
            let mut value = serde_json::to_value(f).unwrap();
            if let (Some(head), Some(obj)) = (header, value.as_object_mut()) {
                obj.insert("problem".into(), head);
            }
            println!("{}", serde_json::to_string(&value).unwrap());
        }
    }
}

fn print_qsym(f: &QSymExpansion, format: Format) {
    match format {
        Format::Text => println!("{}", f.to_text()),
        Format::Latex => println!("{}", f.to_latex()),
        Format::Json => println!("{}", serde_json::to_string(f).unwrap()),
    }
}

fn print_poly(p: &MPoly, format: Format, label: &str) {
    match format {
        Format::Text => println!("{p}"),
        Format::Latex => println!("{}", p.latex()),
        Format::Json => {
            println!(
                "{}",
                json!({ "quantity": label, "value": p, "string": p.to_string() })
            );
        }
    }
}

/// Machine-readable coefficient diff between two values of one identity.
fn emit_mismatch(identity: &str, sides: &[(&str, &SymFunc)]) -> ExitCode {
    let mut indices: Vec<Partition> = Vec::new();
    for (_, f) in sides {
        for idx in f.support() {
            if !indices.contains(&idx) {
                indices.push(idx);
            }
        }
    }
    indices.sort();
    let mut diff = Vec::new();
    for idx in indices {
        let values: Vec<String> = sides.iter().map(|(_, f)| f.coeff(&idx).to_string()).collect();
        if values.windows(2).any(|w| w[0] != w[1]) {
            diff.push(json!({
                "index": idx.to_string(),
                "values": sides.iter().map(|(n, _)| *n).zip(values.iter()).collect::<std::collections::BTreeMap<_,_>>(),
            }));
        }
    }
    println!(
        "{}",
        json!({ "identity": identity, "equal": false, "diff": diff })
    );
    ExitCode::from(2)
}

fn emit_poly_mismatch(identity: &str, sides: &[(&str, &MPoly)]) -> ExitCode {
    println!(
        "{}",
        json!({
            "identity": identity,
            "equal": false,
            "values": sides
                .iter()
                .map(|(n, p)| (n.to_string(), p.to_string()))
                .collect::<std::collections::BTreeMap<_, _>>(),
        })
    );
    ExitCode::from(2)
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let format = cli.format;
    match &cli.command {
        Command::Macdonald { shape, basis } => {
            let lambda = parse_partition(shape)?;
            match basis {
                MacdonaldBasis::M => print_symfunc(&haglund(&lambda), format, None),
                MacdonaldBasis::S => print_symfunc(&haglund(&lambda).to_schur(), format, None),
                MacdonaldBasis::F => {
                    let problem = CumulantProblem::new(vec![lambda])?;
                    print_qsym(&cumulant_qsym(&problem), format);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cumulant {
            partitions,
            basis,
            route,
        } => {
            let parts = parse_partition_list(partitions)?;
            let problem = CumulantProblem::new(parts.clone())?;
            let header = json!({ "partitions": parts });
            let to_basis = |f: SymFunc| match basis {
                CumulantBasis::M => f,
                CumulantBasis::S => f.to_schur(),
            };
            match route {
                Route::Comb => {
                    print_symfunc(&to_basis(cumulant_combinatorial(&problem)), format, Some(header));
                }
                Route::Def => {
                    print_symfunc(&to_basis(cumulant_by_definition(&problem)?), format, Some(header));
                }
                Route::Both => {
                    let comb = cumulant_combinatorial(&problem);
                    let def = match cumulant_by_definition(&problem) {
                        Ok(def) => def,
                        Err(Error::NonDivisible) => {
                            println!(
                                "{}",
                                json!({
                                    "identity": "cumulant definition divisibility",
                                    "equal": false,
                                    "diff": "division by (q-1)^(r-1) failed"
                                })
                            );
                            return Ok(ExitCode::from(2));
                        }
                        Err(e) => return Err(e),
                    };
                    if comb != def {
                        return Ok(emit_mismatch(
                            "cumulant routes",
                            &[("combinatorial", &comb), ("definition", &def)],
                        ));
                    }
                    print_symfunc(&to_basis(comb), format, Some(header));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::HookKostka { partitions, s } => {
            let parts = parse_partition_list(partitions)?;
            let problem = CumulantProblem::new(parts)?;
            if *s >= problem.degree().max(1) {
                return Err(Error::Invalid(format!(
                    "leg {s} out of range for degree {}",
                    problem.degree()
                )));
            }
            print_poly(&hook_kostka(&problem, *s), format, "hook-kostka");
            Ok(ExitCode::SUCCESS)
        }
        Command::FullyColored { shape } => {
            let mu = parse_partition(shape)?;
            if mu.is_empty() {
                return Err(Error::Invalid("shape must be nonempty".into()));
            }
            print_symfunc(&fully_colored(&mu), format, None);
            Ok(ExitCode::SUCCESS)
        }
        Command::Tutte { graph, spec } => {
            let g = load_graph(graph)?;
            match spec.as_str() {
                "xy" => {
                    let t = tutte(&g);
                    match format {
                        Format::Text | Format::Latex => println!("{}", t.to_xy_string()),
                        Format::Json => println!(
                            "{}",
                            json!({ "quantity": "tutte", "spec": "xy", "string": t.to_xy_string() })
                        ),
                    }
                }
                "1,q" => print_poly(&tutte_at(&g, &MPoly::one(), &MPoly::q()), format, "tutte(1,q)"),
                "1,1" => print_poly(&tutte_at(&g, &MPoly::one(), &MPoly::one()), format, "tutte(1,1)"),
                other => {
                    return Err(Error::Invalid(format!(
                        "unknown spec '{other}' (expected 1,q or 1,1 or xy)"
                    )))
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::InversionPoly { graph, route } => {
            let g = load_graph(graph)?;
            let value = |r: InvRoute| -> Result<MPoly, Error> {
                Ok(match r {
                    InvRoute::Tree => inversion_poly(&g),
                    InvRoute::Tutte => tutte_at(&g, &MPoly::one(), &MPoly::q()),
                    InvRoute::Recursive => inversion_poly_recursive(&g),
                    InvRoute::Cumulant => tutte_cumulant_form(&g)?,
                    InvRoute::All => unreachable!(),
                })
            };
            match route {
                InvRoute::All => {
                    let tree = value(InvRoute::Tree)?;
                    let tutte_route = value(InvRoute::Tutte)?;
                    let recursive = value(InvRoute::Recursive)?;
                    let cumulant = match tutte_cumulant_form(&g) {
                        Ok(p) => p,
                        Err(Error::NonDivisible) => {
                            return Ok(emit_poly_mismatch(
                                "inversion polynomial routes",
                                &[("tree", &tree), ("tutte", &tutte_route), ("recursive", &recursive)],
                            ))
                        }
                        Err(e) => return Err(e),
                    };
                    let all = [
                        ("tree", &tree),
                        ("tutte", &tutte_route),
                        ("recursive", &recursive),
                        ("cumulant", &cumulant),
                    ];
                    if all.iter().any(|(_, p)| *p != &tree) {
                        return Ok(emit_poly_mismatch("inversion polynomial routes", &all));
                    }
                    match format {
                        Format::Text => {
                            for (name, p) in all {
                                println!("{name}: {p}");
                            }
                        }
                        Format::Latex => println!("{}", tree.latex()),
                        Format::Json => println!(
                            "{}",
                            json!({
                                "quantity": "inversion-poly",
                                "routes": ["tree", "tutte", "recursive", "cumulant"],
                                "equal": true,
                                "value": tree,
                                "string": tree.to_string(),
                            })
                        ),
                    }
                }
                r => print_poly(&value(*r)?, format, "inversion-poly"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gparking { graph, list } => {
            let g = load_graph(graph)?;
            let gen = parking_gen(&g)?;
            let functions = gparking_enumerate(&g)?;
            match format {
                Format::Text => {
                    println!("count: {}", functions.len());
                    println!("generating function: {gen}");
                    if *list {
                        for f in &functions {
                            let vals: Vec<String> = f
                                .values()
                                .iter()
                                .map(|(v, x)| format!("f({v})={x}"))
                                .collect();
                            println!("{}  wt={}", vals.join(" "), f.weight(&g));
                        }
                    }
                }
                Format::Latex => println!("{}", gen.latex()),
                Format::Json => {
                    let items: Vec<serde_json::Value> = if *list {
                        functions
                            .iter()
                            .map(|f| {
                                json!({
                                    "values": f.values(),
                                    "weight": f.weight(&g),
                                })
                            })
                            .collect()
                    } else {
                        Vec::new()
                    };
                    println!(
                        "{}",
                        json!({
                            "quantity": "gparking",
                            "count": functions.len(),
                            "generating_function": gen,
                            "string": gen.to_string(),
                            "functions": items,
                        })
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sandpile { graph, list } => {
            let g = load_graph(graph)?;
            let gen = sandpile_level_gen(&g)?;
            let configs = sandpile_recurrent(&g)?;
            match format {
                Format::Text => {
                    println!("count: {}", configs.len());
                    println!("level generating function: {gen}");
                    if *list {
                        for u in &configs {
                            let vals: Vec<String> = u
                                .chips()
                                .iter()
                                .map(|(v, x)| format!("u({v})={x}"))
                                .collect();
                            println!("{}  level={}", vals.join(" "), sandpile_level(&g, u));
                        }
                    }
                }
                Format::Latex => println!("{}", gen.latex()),
                Format::Json => {
                    let items: Vec<serde_json::Value> = if *list {
                        configs
                            .iter()
                            .map(|u| {
                                json!({
                                    "chips": u.chips(),
                                    "level": sandpile_level(&g, u),
                                })
                            })
                            .collect()
                    } else {
                        Vec::new()
                    };
                    println!(
                        "{}",
                        json!({
                            "quantity": "sandpile",
                            "count": configs.len(),
                            "generating_function": gen,
                            "string": gen.to_string(),
                            "configurations": items,
                        })
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, max_size } => {
            let n = max_size.unwrap_or(6);
            let mut reports: Vec<CheckReport> = Vec::new();
            let run_graphs = || {
                let cfg = GraphSweepConfig {
                    exhaustive_vertices: n.clamp(1, 4),
                    ..GraphSweepConfig::default()
                };
                suite_graphs(&cfg)
            };
            match suite {
                Suite::Axioms => reports.extend(suite_axioms(n)),
                Suite::Main => reports.extend(suite_main(n, Some(n + 1))),
                Suite::Hooks => reports.extend(suite_hooks(n)),
                Suite::Graphs => reports.extend(run_graphs()),
                Suite::Colored => reports.extend(suite_colored(n)),
                Suite::All => {
                    reports.extend(suite_axioms(n));
                    reports.extend(suite_main(n, Some(n + 1)));
                    reports.extend(suite_hooks(n));
                    reports.extend(run_graphs());
                    reports.extend(suite_colored(n));
                }
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            match format {
                Format::Json => {
                    let rows: Vec<serde_json::Value> = reports
                        .iter()
                        .map(|r| {
                            json!({
                                "check": r.name,
                                "cases": r.cases,
                                "pass": r.passed(),
                                "failures": r.failures.iter().take(5).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        json!({ "suite": format!("{suite:?}").to_lowercase(), "checks": rows, "pass": failed == 0 })
                    );
                }
                _ => {
                    for r in &reports {
                        if r.passed() {
                            println!("PASS  {} ({} cases)", r.name, r.cases);
                        } else {
                            println!(
                                "FAIL  {} ({} cases, {} failures; first: {})",
                                r.name,
                                r.cases,
                                r.failures.len(),
                                r.failures.first().map(String::as_str).unwrap_or("")
                            );
                        }
                    }
                }
            }
            Ok(if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
    }
}
