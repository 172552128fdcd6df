//! Command-line front end for the `handlegraph` library.
//!
//! Exit codes: 0 success, 1 a verified claim failed, 2 usage or input error.

mod groups;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use handlegraph::enumeration::{
    census, enumerate_graphs, verify_free_edge_sharpness, verify_proposition, EnumBounds,
};
use handlegraph::group_theory::{classify_so3, gl2_torsion_search, theorem1_verdict, SO3Class};
use handlegraph::homology::PropositionVerdict;
use handlegraph::{
    automorphism_group, hopf_check, proposition_verdict, CycleBasis, Graph, IntMatrix,
};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "handlegraph",
    version,
    about = "Group actions on multigraphs and their integer homology"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Genus, automorphisms, homology matrices, Hopf checks and the
    /// faithfulness verdict for one graph file.
    Analyze {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive faithfulness and Hopf sweep over small multigraphs.
    VerifyProposition {
        #[command(flatten)]
        bounds: BoundsArgs,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also run the free-edge sharpness check.
        #[arg(long)]
        sharpness: bool,
    },
    /// Search for finite subgroups of GL(2, Z) among small-entry matrices.
    Gl2 {
        #[arg(long, default_value_t = 2)]
        entry_bound: i64,
        #[arg(long, default_value_t = 200)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Classify a finite group among the finite subgroups of SO(3).
    ClassifyGroup {
        /// Built-in name (Zn, Dk with k the order, A4, S4, A5, Q8, V4) or a
        /// multiplication-table JSON file.
        #[arg(long)]
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Classify the group and report the genus-level verdict for a
    /// homologically trivial action.
    Theorem1 {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// List isomorphism classes of connected multigraphs without free edges.
    Enumerate {
        #[command(flatten)]
        bounds: BoundsArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long, default_value_t = 4)]
    max_vertices: usize,
    #[arg(long, default_value_t = 6)]
    max_edges: usize,
    #[arg(long, default_value_t = 2)]
    min_genus: usize,
    #[arg(long, default_value_t = 4)]
    max_genus: usize,
}

impl BoundsArgs {
    fn bounds(&self) -> Result<EnumBounds, Failure> {
        EnumBounds::new(
            self.max_vertices,
            self.max_edges,
            self.min_genus,
            self.max_genus,
        )
        .map_err(|e| Failure::Usage(e.to_string()))
    }
}

enum Failure {
    /// A verified claim did not hold.
    Claim(String),
    Usage(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { path, json } => analyze(&path, json),
        Command::VerifyProposition {
            bounds,
            out,
            sharpness,
        } => verify(&bounds, out.as_deref(), sharpness),
        Command::Gl2 {
            entry_bound,
            cap,
            json,
        } => gl2(entry_bound, cap, json),
        Command::ClassifyGroup { group, json } => classify(&group, json),
        Command::Theorem1 { genus, group, json } => theorem1(genus, &group, json),
        Command::Enumerate { bounds, json } => enumerate(&bounds, json),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Claim(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

#[derive(Serialize)]
struct AutomorphismRow {
    map: handlegraph::GraphMap,
    matrix: IntMatrix,
    lefschetz: i64,
    hopf: handlegraph::HopfCheck,
}

fn analyze(path: &std::path::Path, json: bool) -> Result<(), Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let g = Graph::parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let verdict = proposition_verdict(&g).map_err(usage)?;
    let mut rows = Vec::new();
    if g.is_connected() {
        let basis = CycleBasis::new(&g).map_err(usage)?;
        for m in automorphism_group(&g).map_err(usage)?.elements() {
            let matrix: IntMatrix = basis.homology_matrix(&g, m).map_err(usage)?;
            rows.push(AutomorphismRow {
                lefschetz: 1 - matrix.trace(),
                hopf: hopf_check(&g, m).map_err(usage)?,
                map: m.clone(),
                matrix,
            });
        }
    }
    let hopf_ok = rows.iter().all(|r| r.hopf.equal);

    if json {
        print_json(&json!({
            "graph": &g,
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "connected": g.is_connected(),
            "euler_characteristic": g.euler_characteristic(),
            "genus": g.genus().ok(),
            "free_edges": g.free_edges(),
            "aut_order": verdict.aut_order,
            "automorphisms": rows,
            "hopf_all_equal": hopf_ok,
            "verdict": &verdict,
        }));
    } else {
        print_analysis(&g, &rows, &verdict, hopf_ok);
    }
    if verdict.is_violation() {
        return Err(Failure::Claim(
            "homology representation is not faithful although every hypothesis holds".into(),
        ));
    }
    if !hopf_ok {
        return Err(Failure::Claim(
            "Lefschetz number differs from fixed-set Euler characteristic".into(),
        ));
    }
    Ok(())
}

fn print_analysis(
    g: &Graph,
    rows: &[AutomorphismRow],
    verdict: &PropositionVerdict,
    hopf_ok: bool,
) {
    println!("graph: {}", g.to_json());
    println!(
        "vertices {}, edges {}, euler characteristic {}",
        g.vertex_count(),
        g.edge_count(),
        g.euler_characteristic()
    );
    match g.genus() {
        Ok(genus) => println!("genus: {genus}"),
        Err(_) => println!("genus: n/a (graph is not connected)"),
    }
    println!("free edges: {:?}", g.free_edges());
    if let Some(order) = verdict.aut_order {
        println!("|Aut|: {order}");
    }
    for (i, r) in rows.iter().enumerate() {
        println!(
            "  #{i} vertices {:?} darts {:?}  matrix {}  L = {}  chi(fixed) = {}{}  {}",
            r.map.vertex_map,
            r.map.dart_map,
            r.matrix,
            r.lefschetz,
            r.hopf.chi_fixed,
            if r.hopf.subdivided {
                " (subdivided)"
            } else {
                ""
            },
            if r.hopf.equal { "ok" } else { "MISMATCH" }
        );
    }
    if !rows.is_empty() {
        println!(
            "hopf checks: {}",
            if hopf_ok { "all pass" } else { "FAILED" }
        );
    }
    match verdict.kernel_order {
        Some(k) => println!("homology kernel order: {k}"),
        None => println!("homology kernel order: n/a"),
    }
    let note = if verdict.hypotheses_hold {
        "hypotheses hold"
    } else {
        "outside hypotheses"
    };
    println!(
        "faithful on H_1: {} ({note}; {})",
        verdict.holds, verdict.action
    );
}

fn verify(
    bounds: &BoundsArgs,
    out: Option<&std::path::Path>,
    sharpness: bool,
) -> Result<(), Failure> {
    let b = bounds.bounds()?;
    let report = verify_proposition(&b).map_err(usage)?;
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(&report).expect("serializable");
        fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    print!("{}", report.to_table());
    let mut ok = report.passed();
    if sharpness {
        let s = verify_free_edge_sharpness().map_err(usage)?;
        for c in &s.cases {
            println!(
                "sharpness: {} free edges {:?} kernel order {}",
                c.name, c.free_edges, c.kernel_order
            );
        }
        ok &= s.passed;
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Claim("verification found violations".into()))
    }
}

fn gl2(entry_bound: i64, cap: usize, json: bool) -> Result<(), Failure> {
    if !(1..=3).contains(&entry_bound) {
        return Err(usage(format!(
            "--entry-bound must be in 1..=3, got {entry_bound}"
        )));
    }
    if !(24..=10_000).contains(&cap) {
        return Err(usage(format!("--cap must be in 24..=10000, got {cap}")));
    }
    let report = gl2_torsion_search(entry_bound, cap).map_err(usage)?;
    if json {
        print_json(&report);
    } else {
        println!(
            "entry bound {}, closure cap {}",
            report.entry_bound, report.closure_cap
        );
        println!(
            "torsion elements: {} (by order {:?})",
            report.torsion_elements, report.torsion_order_counts
        );
        println!(
            "finite subgroup orders: {:?}",
            report.finite_subgroup_orders
        );
        println!("maximal finite subgroups:");
        for h in &report.maximal_subgroups {
            println!(
                "  order {:>2}  {}  generated by {} and {}",
                h.order, h.type_name, h.generators[0], h.generators[1]
            );
        }
        println!("maximal types: {}", report.maximal_types.join(", "));
        println!("max order: {}", report.max_order);
        println!("pairs abandoned as infinite: {}", report.infinite_pairs);
    }
    if report.matches_expected() {
        Ok(())
    } else {
        Err(Failure::Claim(format!(
            "maximal finite subgroups {:?} (max order {}) differ from D6 and D4",
            report.maximal_types, report.max_order
        )))
    }
}

fn classify(group_arg: &str, json: bool) -> Result<(), Failure> {
    let group = groups::load(group_arg).map_err(usage)?;
    let class = classify_so3(&group);
    if json {
        print_json(&json!({
            "order": group.order(),
            "class": class,
            "name": class.short_name(),
        }));
    } else {
        println!("order {}: {}", group.order(), class);
    }
    Ok(())
}

fn theorem1(genus: usize, group_arg: &str, json: bool) -> Result<(), Failure> {
    let group = groups::load(group_arg).map_err(usage)?;
    let class = classify_so3(&group);
    let verdict = theorem1_verdict(genus, class).ok();
    if json {
        print_json(&json!({
            "genus": genus,
            "order": group.order(),
            "class": class,
            "verdict": verdict,
        }));
    } else {
        println!("class: {class}");
        match verdict {
            Some(v) => println!("verdict: {v}"),
            None => {
                debug_assert_eq!(class, SO3Class::NotSO3);
                println!("verdict: none (NotSO3: not a finite subgroup of SO(3))")
            }
        }
    }
    Ok(())
}

fn enumerate(bounds: &BoundsArgs, json: bool) -> Result<(), Failure> {
    let b = bounds.bounds()?;
    let classes = enumerate_graphs(&b).map_err(usage)?;
    if json {
        print_json(&json!({
            "bounds": b,
            "classes": classes,
            "census": census(&classes),
        }));
    } else {
        for c in &classes {
            println!("{}\t{}", c.signature, c.graph.to_json());
        }
        println!("{} classes", classes.len());
    }
    Ok(())
}
