use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use serde_json::json;
use toric_ranks::complex::{face_ring, SimplicialComplex};
use toric_ranks::gale::{enumerate_faces, CyclicParams};
use toric_ranks::hilton::mixed_wedge_spectrum;
use toric_ranks::manifold::{connected_sum_homology, euler_characteristic, poincare_check, ConnectedSumSpec};
use toric_ranks::report::{counterexample, verdict};
use toric_ranks::{hilton::borel_model, min_relation_degree, Model, Spectrum, VerdictReport};

#[derive(Parser)]
#[command(name = "toric-ranks", version, about = "Face rings of cyclic polytopes and rational homotopy comparisons")]
struct Cli {
    /// Emit machine-readable JSON
    #[arg(long, global = true)]
    json: bool,

    /// Print only the essential result
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List faces of the cyclic polytope C(n, d)
    Faces {
        n: usize,
        d: usize,
        /// Largest face size to list (defaults to d)
        #[arg(long)]
        max_card: Option<usize>,
        /// Print counts per face size instead of the faces
        #[arg(long)]
        count: bool,
    },
    /// Minimal generators of the Stanley-Reisner ideal.
    /// SOURCE is `cyclic <n> <d>`, `polygon <m>` or `file <path>`
    Ideal {
        #[arg(required = true, num_args = 1..)]
        source: Vec<String>,
    },
    /// Smallest degree of a relation among relations
    Syzmin {
        #[arg(required = true, num_args = 1..)]
        source: Vec<String>,
    },
    /// Wedge-of-spheres model and its Hilton-Milnor sphere spectrum
    Wedge {
        #[arg(required = true, num_args = 1..)]
        source: Vec<String>,
        /// Show the spectrum up to this sphere dimension (defaults to the valid range)
        #[arg(long)]
        ceiling: Option<u64>,
    },
    /// Homology ranks of a connected sum such as "16*S5xS7 # 15*S6xS6"
    Homology { spec: String },
    /// Compare rational homotopy ranks of the moment-angle complex with a connected sum
    Verdict {
        #[arg(required = true, num_args = 1..)]
        source: Vec<String>,
        /// Connected sum to compare against
        #[arg(long = "vs")]
        target: String,
        /// Compare only in this degree
        #[arg(long)]
        q: Option<u64>,
    },
    /// Run the C(8,4) comparison against (#16 S5xS7) # (#15 S6xS6)
    Counterexample,
}

struct Source {
    descriptor: String,
    complex: SimplicialComplex,
}

fn load_source(args: &[String]) -> anyhow::Result<Source> {
    let num = |s: &str, what: &str| -> anyhow::Result<usize> {
        s.parse().with_context(|| format!("{what} must be a nonnegative integer, got {s:?}"))
    };
    let complex = match args.iter().map(String::as_str).collect::<Vec<_>>().as_slice() {
        ["cyclic", n, d] => SimplicialComplex::from_cyclic(CyclicParams::new(num(n, "n")?, num(d, "d")?)?),
        ["polygon", m] => SimplicialComplex::from_polygon(num(m, "m")?)?,
        ["file", path] => {
            let path = PathBuf::from(path);
            let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            SimplicialComplex::from_text(&text).with_context(|| format!("in {}", path.display()))?
        }
        _ => bail!("expected `cyclic <n> <d>`, `polygon <m>` or `file <path>`, got {:?}", args.join(" ")),
    };
    Ok(Source {
        descriptor: args.join(" "),
        complex,
    })
}

fn render_report(r: &VerdictReport, quiet: bool) -> String {
    let mut out = String::new();
    let row = r.comparison.q.and_then(|q| r.comparison.row(q));
    if quiet {
        match row {
            Some(row) => writeln!(out, "{} q={} ranks {} vs {}", r.verdict.as_str(), row.q, row.wedge, row.manifold),
            None => writeln!(out, "{}", r.verdict.as_str()),
        }
        .unwrap();
        return out;
    }
    let w = &mut out;
    writeln!(w, "complex:   {}", r.input.complex).unwrap();
    writeln!(w, "manifold:  {}", r.input.manifold).unwrap();
    for note in &r.input.notes {
        writeln!(w, "note:      {note}").unwrap();
    }
    writeln!(w, "\nideal: {} generators in {} variables", r.ideal.generator_count, r.ideal.variables).unwrap();
    writeln!(w, "  {}", r.ideal.generators.join(", ")).unwrap();
    writeln!(w, "\n|R_min| = {}   witness {}", r.rmin.degree, r.rmin.witness).unwrap();
    let wedge = r.wedge.wedge_spheres.iter().map(|(d, k)| format!("{k} x S^{d}")).collect::<Vec<_>>();
    writeln!(w, "\nwedge of spheres: {}", wedge.join(" v ")).unwrap();
    writeln!(w, "valid range: 3 <= q <= {}; pi_2 rank {}", r.wedge.q_max, r.wedge.degree_two_rank).unwrap();
    let spectrum = r.wedge.spectrum.iter().map(|(d, k)| format!("S^{d}: {k}")).collect::<Vec<_>>();
    writeln!(w, "loop-space splitting (dims <= {}): {}", r.wedge.q_max, spectrum.join(", ")).unwrap();
    writeln!(w, "\nhomology of {}:", r.manifold.spec).unwrap();
    for (k, rank) in &r.manifold.homology {
        writeln!(w, "  H_{k} = Z^{rank}").unwrap();
    }
    writeln!(
        w,
        "  Poincare duality: {}   Euler characteristic: {}",
        if r.manifold.poincare_duality { "holds" } else { "FAILS" },
        r.manifold.euler_characteristic
    )
    .unwrap();
    writeln!(w, "\nrational homotopy ranks (q in [{}, {}]):", r.comparison.admissible[0], r.comparison.admissible[1]).unwrap();
    writeln!(w, "  q  moment-angle  connected-sum").unwrap();
    for row in &r.comparison.ranks {
        let mark = if Some(row.q) == r.comparison.q { "  <-" } else { "" };
        writeln!(w, "  {:<2} {:>12}  {:>13}{mark}", row.q, row.wedge, row.manifold).unwrap();
    }
    for note in &r.comparison.notes {
        writeln!(w, "note: {note}").unwrap();
    }
    match r.comparison.q {
        Some(q) => writeln!(w, "\nverdict: {} at q = {q}", r.verdict.as_str()),
        None => writeln!(w, "\nverdict: {}", r.verdict.as_str()),
    }
    .unwrap();
    out
}

fn emit(cli: &Cli, value: serde_json::Value, text: String) {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&value).expect("json value"));
    } else {
        print!("{text}");
    }
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    match &cli.command {
        Command::Faces { n, d, max_card, count } => {
            let p = CyclicParams::new(*n, *d)?;
            let max_card = max_card.unwrap_or(*d);
            let faces = enumerate_faces(p, max_card)?;
            let counts: Vec<usize> = (1..=max_card).map(|k| faces.iter().filter(|f| f.len() == k).count()).collect();
            let mut text = String::new();
            if *count {
                if !cli.quiet {
                    writeln!(text, "{p}: faces by number of vertices").unwrap();
                }
                for (k, c) in counts.iter().enumerate() {
                    writeln!(text, "{}: {c}", k + 1).unwrap();
                }
            } else {
                for f in &faces {
                    writeln!(text, "{f}").unwrap();
                }
            }
            let mut value = json!({
                "polytope": { "n": n, "d": d },
                "max_card": max_card,
                "counts": counts,
            });
            if !*count {
                value["faces"] = json!(faces);
            }
            emit(cli, value, text);
        }
        Command::Ideal { source } => {
            let src = load_source(source)?;
            let ring = face_ring(&src.complex);
            let gens: Vec<String> = ring.generators().iter().map(ToString::to_string).collect();
            let mut text = String::new();
            if !cli.quiet {
                writeln!(text, "source: {}", src.complex.source()).unwrap();
                writeln!(text, "variables: {}", ring.variable_count()).unwrap();
                writeln!(text, "|I| = {}", ring.len()).unwrap();
                for (deg, k) in ring.degree_histogram() {
                    writeln!(text, "degree {deg}: {k} generators").unwrap();
                }
            }
            for g in &gens {
                writeln!(text, "{g}").unwrap();
            }
            let supports: Vec<_> = ring.generators().iter().map(|g| g.support().clone()).collect();
            let value = json!({
                "source": src.descriptor,
                "variables": ring.variable_count(),
                "generator_count": ring.len(),
                "generators": gens,
                "supports": supports,
                "degree_histogram": ring.degree_histogram(),
            });
            emit(cli, value, text);
        }
        Command::Syzmin { source } => {
            let src = load_source(source)?;
            let ring = face_ring(&src.complex);
            let rel = min_relation_degree(&ring)?;
            let witness = rel.display(&ring).to_string();
            let text = if cli.quiet {
                format!("{}\n", rel.degree)
            } else {
                format!("source: {}\n|R_min| = {}\nwitness: {witness}\n", src.complex.source(), rel.degree)
            };
            let value = json!({ "source": src.descriptor, "rmin": rel.degree, "witness": witness });
            emit(cli, value, text);
        }
        Command::Wedge { source, ceiling } => {
            let src = load_source(source)?;
            let ring = face_ring(&src.complex);
            let rel = min_relation_degree(&ring)?;
            let model: Model = borel_model(&ring, rel.degree as u64)?;
            let ceiling = ceiling.unwrap_or(model.q_max);
            let spectrum: Spectrum = mixed_wedge_spectrum(&model.sphere_dims, ceiling)?;
            let mut text = String::new();
            if !cli.quiet {
                writeln!(text, "source: {}", src.complex.source()).unwrap();
                writeln!(text, "|R_min| = {}, valid for 3 <= q <= {}", rel.degree, model.q_max).unwrap();
                writeln!(text, "pi_2 rank: {}", model.degree_two_rank()).unwrap();
            }
            writeln!(text, "{spectrum}").unwrap();
            let value = json!({
                "source": src.descriptor,
                "rmin": rel.degree,
                "q_max": model.q_max,
                "degree_two_rank": model.degree_two_rank(),
                "sphere_dims": model.sphere_dims,
                "ceiling": ceiling,
                "spectrum": spectrum.entries(),
            });
            emit(cli, value, text);
        }
        Command::Homology { spec } => {
            let spec: ConnectedSumSpec = spec.parse()?;
            let h = connected_sum_homology(&spec);
            let (dual, chi) = (poincare_check(&h), euler_characteristic(&h));
            let mut text = String::new();
            if !cli.quiet {
                writeln!(text, "{spec} (dimension {})", spec.dim()).unwrap();
            }
            for (k, r) in h.ranks() {
                writeln!(text, "H_{k} = Z^{r}").unwrap();
            }
            if !cli.quiet {
                writeln!(text, "Poincare duality: {}", if dual { "holds" } else { "FAILS" }).unwrap();
                writeln!(text, "Euler characteristic: {chi}").unwrap();
            }
            let value = json!({
                "spec": spec.to_string(),
                "dimension": spec.dim(),
                "homology": h.ranks(),
                "poincare_duality": dual,
                "euler_characteristic": chi,
            });
            emit(cli, value, text);
        }
        Command::Verdict { source, target, q } => {
            let src = load_source(source)?;
            let target: ConnectedSumSpec = target.parse()?;
            let report = verdict(&src.descriptor, &src.complex, &target, *q)?;
            return Ok(print_report(cli, &report));
        }
        Command::Counterexample => {
            let report = counterexample()?;
            return Ok(print_report(cli, &report));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_report(cli: &Cli, report: &VerdictReport) -> ExitCode {
    if cli.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", render_report(report, cli.quiet));
    }
    ExitCode::from(report.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
