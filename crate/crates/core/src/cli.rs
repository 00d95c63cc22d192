//! The `greechie` command line.
//!
//! Exit codes: 0 success, 1 invalid, malformed or unreadable input, 2 usage
//! error or unknown catalog key.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog::{catalog_list, lookup, CatalogEntry};
use crate::classify::{check_expectations, classify, format_profile};
use crate::concrete::ConcreteLogic;
use crate::diagram::{
    homogeneity, isomorphic, lattice_test, parse_diagram, to_json, to_text, validate,
    GreechieDiagram,
};
use crate::error::Error;
use crate::rational::{format_vector, to_canonical_string};
use crate::search::{enumerate, SearchSpec};
use crate::states::{
    is_full_by_criterion, is_full_by_definition, pure_states, signed_measure_dims, state_polytope,
    total_representation, two_valued_states, DEFAULT_DIM_CAP,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "greechie",
    version,
    about = "Greechie diagrams, their states, fullness and regularity"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Largest state-space dimension for vertex enumeration.
    #[arg(long, global = true, env = "GREECHIE_DIM_CAP", default_value_t = DEFAULT_DIM_CAP)]
    dim_cap: usize,
    #[command(subcommand)]
    command: Command,
}

/// Inputs are `catalog:<key>`, `-` for standard input, or a file path.
#[derive(Subcommand, Debug)]
enum Command {
    /// Check the diagram conditions and list every violation.
    Validate { input: String },
    /// Atom degrees, block sizes and the (n,m) profile.
    Homog { input: String },
    /// Enumerate the two-valued states.
    TwoValued { input: String },
    /// Enumerate the pure states as exact vectors.
    Pure { input: String },
    /// Equality rank, affine dimension and parametrization of the state polytope.
    Statespace { input: String },
    /// Fullness of the two-valued states, by both tests.
    Full { input: String },
    /// The concrete logic representing the diagram through its two-valued states.
    Totalrep { input: String },
    /// Regularity of a concrete logic (JSON) or of a diagram's total representation.
    Regular { input: String },
    /// Loops of order 3 and 4.
    Lattice { input: String },
    /// Search for an isomorphism between two diagrams.
    Iso { first: String, second: String },
    /// Built-in named diagrams.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Generate (3,3)-homogeneous diagrams on a given number of atoms.
    Search {
        /// Number of atoms (and blocks).
        #[arg(long)]
        atoms: usize,
        /// Keep diagrams containing triangles.
        #[arg(long)]
        allow_order3_loops: bool,
        #[arg(long, default_value_t = 60)]
        max_seconds: u64,
        #[arg(long, default_value_t = 50_000_000)]
        max_nodes: u64,
        /// Classify every diagram found.
        #[arg(long)]
        classify: bool,
    },
    /// Full classification, with expectation checks for catalog entries.
    Report { input: String },
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    /// List every entry.
    List,
    /// Print an entry's diagram in the file format.
    Show { key: String },
}

enum Failure {
    Input(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownCatalogKey(_) | Error::InvalidParameter(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<i32, Failure>;

struct Ctx<'a> {
    format: Format,
    dim_cap: usize,
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

enum Source {
    Catalog(Box<CatalogEntry>),
    Text(String),
}

impl Ctx<'_> {
    fn read(&mut self, input: &str) -> Result<Source, Failure> {
        if let Some(key) = input.strip_prefix("catalog:") {
            return Ok(Source::Catalog(Box::new(lookup(key)?)));
        }
        let mut text = String::new();
        if input == "-" {
            self.stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::Input(format!("standard input: {e}")))?;
        } else {
            text = std::fs::read_to_string(input)
                .map_err(|e| Failure::Input(format!("{input}: {e}")))?;
        }
        Ok(Source::Text(text))
    }

    fn diagram(&mut self, input: &str) -> Result<(GreechieDiagram, Option<CatalogEntry>), Failure> {
        match self.read(input)? {
            Source::Catalog(e) => Ok((e.diagram.clone(), Some(*e))),
            Source::Text(t) => Ok((parse_diagram(&t)?, None)),
        }
    }

    /// A diagram that must pass validation.
    fn valid_diagram(&mut self, input: &str) -> Result<GreechieDiagram, Failure> {
        let (d, _) = self.diagram(input)?;
        if let Some(v) = validate(&d).violations.first() {
            return Err(Failure::Input(format!("invalid diagram: {v}")));
        }
        Ok(d)
    }

    fn emit(&mut self, json: &Value, text: impl FnOnce() -> String) -> std::io::Result<()> {
        match self.format {
            Format::Json => writeln!(
                self.out,
                "{}",
                serde_json::to_string_pretty(json).expect("json value")
            ),
            Format::Text => write!(self.out, "{}", text()),
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure::Input(format!("write failed: {e}"))
}

fn labels_json(labels: Vec<&str>) -> Value {
    Value::Array(
        labels
            .into_iter()
            .map(|l| Value::String(l.to_string()))
            .collect(),
    )
}

fn cmd_validate(ctx: &mut Ctx, input: &str) -> Outcome {
    let (d, _) = ctx.diagram(input)?;
    let report = validate(&d);
    let json = json!({ "valid": report.is_valid(), "violations": report.violations });
    ctx.emit(&json, || {
        let mut s = if report.is_valid() {
            "valid\n".to_string()
        } else {
            format!("invalid: {} violation(s)\n", report.violations.len())
        };
        for v in &report.violations {
            s.push_str(&format!("  - {v}\n"));
        }
        s
    })
    .map_err(io)?;
    Ok(if report.is_valid() { 0 } else { 1 })
}

fn cmd_homog(ctx: &mut Ctx, input: &str) -> Outcome {
    let (d, _) = ctx.diagram(input)?;
    let h = homogeneity(&d);
    let json = json!({
        "homogeneous": h.homogeneous,
        "atom_degrees": h.atom_degrees,
        "block_sizes": h.block_sizes,
    });
    ctx.emit(&json, || {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        format!(
            "homogeneous: {}\natom degrees: {}\nblock sizes: {}\n",
            format_profile(h.homogeneous),
            join(&h.atom_degrees),
            join(&h.block_sizes)
        )
    })
    .map_err(io)?;
    Ok(0)
}

fn cmd_two_valued(ctx: &mut Ctx, input: &str) -> Outcome {
    let d = ctx.valid_diagram(input)?;
    let states = two_valued_states(&d);
    let json = json!({
        "count": states.len(),
        "states": states.iter().map(|f| labels_json(f.support_labels(&d))).collect::<Vec<_>>(),
    });
    ctx.emit(&json, || {
        let mut s = format!("{} two-valued state(s)\n", states.len());
        for f in &states {
            s.push_str(&format!("{{{}}}\n", f.support_labels(&d).join(", ")));
        }
        s
    })
    .map_err(io)?;
    Ok(0)
}

fn cmd_pure(ctx: &mut Ctx, input: &str) -> Outcome {
    let d = ctx.valid_diagram(input)?;
    let states = pure_states(&d, ctx.dim_cap)?;
    let json = json!({
        "atoms": d.atoms(),
        "count": states.len(),
        "states": states.iter().map(|s| s.to_json(&d)).collect::<Vec<_>>(),
    });
    ctx.emit(&json, || {
        let mut s = format!(
            "{} pure state(s) over atoms ({})\n",
            states.len(),
            d.atoms().join(", ")
        );
        for p in &states {
            s.push_str(&format_vector(p.values()));
            s.push('\n');
        }
        s
    })
    .map_err(io)?;
    Ok(0)
}

fn cmd_statespace(ctx: &mut Ctx, input: &str) -> Outcome {
    let (d, _) = ctx.diagram(input)?;
    let p = state_polytope(&d);
    let strings =
        |v: &[crate::rational::Rational]| v.iter().map(to_canonical_string).collect::<Vec<_>>();
    let json = json!({
        "atoms": d.atoms(),
        "equality_rank": p.equality_rank(),
        "equality_dim": p.equality_dim(),
        "affine_dim": p.affine_dim(),
        "implicit_zeros": p.implicit_zeros().iter().map(|&a| d.label(a)).collect::<Vec<_>>(),
        "base_point": (!p.is_empty()).then(|| strings(p.base_point())),
        "directions": p.directions().iter().map(|n| strings(n)).collect::<Vec<_>>(),
        "infeasibility_witness": p.infeasibility_witness().map(strings),
    });
    ctx.emit(&json, || {
        let mut s = format!(
            "atoms: {}\nequality rank: {}\nequality dimension: {}\naffine dimension: {}\n",
            d.atoms().join(" "),
            p.equality_rank(),
            p.equality_dim(),
            p.affine_dim()
        );
        if let Some(w) = p.infeasibility_witness() {
            s.push_str(&format!(
                "no state; block weights {} give a contradiction\n",
                format_vector(w)
            ));
            return s;
        }
        if !p.implicit_zeros().is_empty() {
            let z: Vec<&str> = p.implicit_zeros().iter().map(|&a| d.label(a)).collect();
            s.push_str(&format!("zero at every state: {}\n", z.join(" ")));
        }
        s.push_str(&format!("base point: {}\n", format_vector(p.base_point())));
        for (i, n) in p.directions().iter().enumerate() {
            s.push_str(&format!("direction {}: {}\n", i + 1, format_vector(n)));
        }
        s
    })
    .map_err(io)?;
    Ok(0)
}

fn cmd_full(ctx: &mut Ctx, input: &str) -> Outcome {
    let d = ctx.valid_diagram(input)?;
    let s2 = two_valued_states(&d);
    let (c, f) = (
        is_full_by_criterion(&d, &s2),
        is_full_by_definition(&d, &s2),
    );
    let json =
        json!({ "two_valued_count": s2.len(), "full_by_criterion": c, "full_by_definition": f });
    ctx.emit(&json, || {
        format!(
            "two-valued states: {}\nfull by atom-pair criterion: {c}\nfull by definition: {f}\n",
            s2.len()
        )
    })
    .map_err(io)?;
    Ok(0)
}

fn logic_text(e: &ConcreteLogic) -> String {
    let mut s = format!("ground: {}\n", e.ground().join(" "));
    for m in e.family() {
        s.push_str(&format!("member: {{{}}}\n", e.member_labels(m).join(",")));
    }
    s
}

fn cmd_totalrep(ctx: &mut Ctx, input: &str) -> Outcome {
    let d = ctx.valid_diagram(input)?;
    let e = total_representation(&d, &two_valued_states(&d))?;
    ctx.emit(&e.to_json(), || logic_text(&e)).map_err(io)?;
    Ok(0)
}

fn cmd_regular(ctx: &mut Ctx, input: &str) -> Outcome {
    let logic = match ctx.read(input)? {
        Source::Text(t) if is_concrete_logic_json(&t) => ConcreteLogic::from_json(&t)?,
        Source::Text(t) => {
            let d = parse_diagram(&t)?;
            if let Some(v) = validate(&d).violations.first() {
                return Err(Failure::Input(format!("invalid diagram: {v}")));
            }
            total_representation(&d, &two_valued_states(&d))?
        }
        Source::Catalog(e) => total_representation(&e.diagram, &two_valued_states(&e.diagram))?,
    };
    let s = signed_measure_dims(&logic)?;
    let regular = s.dim_annihilator + s.dim_v == s.ground_size;
    let json = json!({
        "ground_size": s.ground_size,
        "dim_v": s.dim_v,
        "dim_annihilator": s.dim_annihilator,
        "regular": regular,
    });
    ctx.emit(&json, || {
        format!(
            "ground size: {}\ndim V: {}\ndim annihilator: {}\nregular: {regular}\n",
            s.ground_size, s.dim_v, s.dim_annihilator
        )
    })
    .map_err(io)?;
    Ok(0)
}

fn is_concrete_logic_json(text: &str) -> bool {
    serde_json::from_str::<Value>(text).is_ok_and(|v| v.get("ground").is_some())
}

fn cmd_lattice(ctx: &mut Ctx, input: &str) -> Outcome {
    let (d, _) = ctx.diagram(input)?;
    let v = lattice_test(&d);
    let witness = v.witness.as_ref().map(|l| {
        json!({
            "order": l.order(),
            "blocks": l.blocks.iter().map(|&b| labels_json(d.block_labels(b))).collect::<Vec<_>>(),
        })
    });
    let json = json!({
        "omp_candidate": v.is_omp_candidate,
        "oml_candidate": v.is_oml_candidate,
        "witness": witness,
    });
    ctx.emit(&json, || {
        let mut s = format!(
            "no order-3 loop (OMP candidate): {}\nno order-3 or order-4 loop (lattice candidate): {}\n",
            v.is_omp_candidate, v.is_oml_candidate
        );
        if let Some(l) = &v.witness {
            s.push_str(&format!("loop {}\n", l.describe(&d)));
        }
        s
    })
    .map_err(io)?;
    Ok(0)
}

fn cmd_iso(ctx: &mut Ctx, first: &str, second: &str) -> Outcome {
    let (a, _) = ctx.diagram(first)?;
    let (b, _) = ctx.diagram(second)?;
    let iso = isomorphic(&a, &b);
    let pairs = iso.as_ref().map(|i| i.labeled_pairs(&a, &b));
    let json = json!({
        "isomorphic": iso.is_some(),
        "map": pairs.as_ref().map(|p| p.iter().map(|(x, y)| json!([x, y])).collect::<Vec<_>>()),
    });
    ctx.emit(&json, || match &pairs {
        None => "not isomorphic\n".to_string(),
        Some(p) => {
            let mut s = "isomorphic\n".to_string();
            for (x, y) in p {
                s.push_str(&format!("{x} -> {y}\n"));
            }
            s
        }
    })
    .map_err(io)?;
    Ok(0)
}

fn cmd_catalog(ctx: &mut Ctx, cmd: &CatalogCommand) -> Outcome {
    match cmd {
        CatalogCommand::List => {
            let entries = catalog_list();
            let json = Value::Array(
                entries
                    .iter()
                    .map(|e| {
                        json!({
                            "key": e.key,
                            "name": e.diagram.name(),
                            "atoms": e.diagram.atom_count(),
                            "blocks": e.diagram.block_count(),
                            "params": e.params.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>(),
                            "expectations": e.expectations,
                            "note": e.note,
                        })
                    })
                    .collect(),
            );
            ctx.emit(&json, || {
                let mut s = format!(
                    "{:<8} {:<14} {:>5} {:>6}\n",
                    "key", "name", "atoms", "blocks"
                );
                for e in &entries {
                    s.push_str(&format!(
                        "{:<8} {:<14} {:>5} {:>6}\n",
                        e.key,
                        e.diagram.name().unwrap_or("-"),
                        e.diagram.atom_count(),
                        e.diagram.block_count()
                    ));
                }
                s
            })
            .map_err(io)?;
        }
        CatalogCommand::Show { key } => {
            let e = lookup(key)?;
            ctx.emit(&to_json(&e.diagram), || to_text(&e.diagram))
                .map_err(io)?;
        }
    }
    Ok(0)
}

fn cmd_search(ctx: &mut Ctx, spec: SearchSpec) -> Outcome {
    let r = enumerate(&spec)?;
    let trailer = json!({
        "atoms": r.atom_count,
        "found": r.diagrams.len(),
        "nodes": r.nodes,
        "exhaustive": r.exhaustive,
    });
    match ctx.format {
        Format::Json => {
            let diagrams: Vec<Value> = r
                .diagrams
                .iter()
                .map(|f| json!({ "diagram": to_json(&f.diagram), "canonical_form": f.canonical_form, "classification": f.classification }))
                .collect();
            let mut doc = trailer;
            doc["diagrams"] = Value::Array(diagrams);
            writeln!(
                ctx.out,
                "{}",
                serde_json::to_string_pretty(&doc).expect("json value")
            )
            .map_err(io)?;
        }
        Format::Text => {
            for f in &r.diagrams {
                write!(ctx.out, "{}", to_text(&f.diagram)).map_err(io)?;
                if let Some(c) = &f.classification {
                    writeln!(
                        ctx.out,
                        "# {}",
                        serde_json::to_string(c).expect("json value")
                    )
                    .map_err(io)?;
                }
                writeln!(ctx.out).map_err(io)?;
            }
            writeln!(ctx.out, "{trailer}").map_err(io)?;
        }
    }
    Ok(0)
}

fn cmd_report(ctx: &mut Ctx, input: &str) -> Outcome {
    let (d, entry) = ctx.diagram(input)?;
    let c = classify(&d, ctx.dim_cap)?;
    let checks = entry
        .as_ref()
        .map(|e| check_expectations(&e.expectations, &c));
    let json = json!({
        "name": d.name(),
        "atoms": c.atoms,
        "blocks": c.blocks,
        "valid": c.valid,
        "homogeneous": c.homogeneous,
        "two_valued_count": c.two_valued_count,
        "pure_count": c.pure_count,
        "affine_dim": c.affine_dim,
        "full": c.full,
        "full_by_definition": c.full_by_definition,
        "regular": c.regular,
        "lattice_candidate": c.lattice_candidate,
        "expectations": checks,
    });
    let failed = checks.as_ref().is_some_and(|v| v.iter().any(|k| !k.pass));
    ctx.emit(&json, || {
        let mut s = String::new();
        if let Some(name) = d.name() {
            s.push_str(&format!("name: {name}\n"));
        }
        s.push_str(&format!(
            "atoms: {}\nblocks: {}\nvalid: {}\nhomogeneous: {}\ntwo_valued_count: {}\npure_count: {}\n\
             affine_dim: {}\nfull: {}\nfull_by_definition: {}\nregular: {}\nlattice_candidate: {}\n",
            c.atoms,
            c.blocks,
            c.valid,
            format_profile(c.homogeneous),
            c.two_valued_count,
            c.pure_count,
            c.affine_dim,
            c.full,
            c.full_by_definition,
            c.regular.map_or_else(|| "undefined".to_string(), |r| r.to_string()),
            c.lattice_candidate
        ));
        for k in checks.iter().flatten() {
            let verdict = if k.pass { "PASS" } else { "FAIL" };
            s.push_str(&format!(
                "{verdict} {}: expected {}, got {}\n",
                k.field, k.expected, k.actual
            ));
        }
        s
    })
    .map_err(io)?;
    if failed {
        Ok(1)
    } else {
        Ok(0)
    }
}

fn dispatch(ctx: &mut Ctx, command: Command) -> Outcome {
    match command {
        Command::Validate { input } => cmd_validate(ctx, &input),
        Command::Homog { input } => cmd_homog(ctx, &input),
        Command::TwoValued { input } => cmd_two_valued(ctx, &input),
        Command::Pure { input } => cmd_pure(ctx, &input),
        Command::Statespace { input } => cmd_statespace(ctx, &input),
        Command::Full { input } => cmd_full(ctx, &input),
        Command::Totalrep { input } => cmd_totalrep(ctx, &input),
        Command::Regular { input } => cmd_regular(ctx, &input),
        Command::Lattice { input } => cmd_lattice(ctx, &input),
        Command::Iso { first, second } => cmd_iso(ctx, &first, &second),
        Command::Catalog(c) => cmd_catalog(ctx, &c),
        Command::Search {
            atoms,
            allow_order3_loops,
            max_seconds,
            max_nodes,
            classify,
        } => {
            let mut spec = SearchSpec::new(atoms);
            spec.require_no_order3_loops = !allow_order3_loops;
            spec.time_budget = Duration::from_secs(max_seconds);
            spec.node_budget = max_nodes;
            spec.classify = classify;
            spec.dim_cap = ctx.dim_cap;
            cmd_search(ctx, spec)
        }
        Command::Report { input } => cmd_report(ctx, &input),
    }
}

/// Runs one command; returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut ctx = Ctx {
        format: cli.format,
        dim_cap: cli.dim_cap,
        stdin,
        out,
    };
    match dispatch(&mut ctx, cli.command) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
