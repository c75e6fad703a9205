//! Command-line front end.
//!
//! Exit codes: 0 success, 1 bad input, 2 size guard, 3 not switching
//! isomorphic, 4 reproduction mismatch.

use std::ffi::OsString;
use std::io::Write;
use std::sync::Arc;

use clap::{Parser, ValueEnum};
use serde_json::json;

use crate::classify::{automorphic_types, frustration_index, ClassReport, Classifier};
use crate::error::Error;
use crate::graph::Graph;
use crate::reference::{self, Tamper};
use crate::signed::{CycleSpectrum, CycleTable, Signature};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_GUARD: i32 = 2;
pub const EXIT_NOT_ISOMORPHIC: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// List every switching-isomorphism class
    Enumerate,
    /// Balance, cycle spectrum, frustration and canonical key of one signature
    Invariants,
    /// Decide switching isomorphism of two signatures, with a witness
    Equivalent,
    /// Canonical key of one signature
    Canonical,
    /// Frustration index and a minimal equivalent signature
    Frustration,
    /// Automorphic types of edge subsets
    Types,
    /// Check the library against the published reference values
    Reproduce,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "signed-graphs",
    version,
    about = "Signed graphs up to switching isomorphism"
)]
struct Args {
    command: Command,
    /// Builtin graph (`complete:6`, `cycle:5`, `path:4`, `petersen`, `heawood`) or `@file`
    #[arg(long)]
    graph: Option<String>,
    /// Signature as comma-separated `u-v` pairs; repeat for two
    #[arg(long = "sig", allow_hyphen_values = true)]
    sigs: Vec<String>,
    /// Longest cycle counted in spectra [default: min(n, 6)]
    #[arg(long)]
    max_cycle_len: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Edge-subset size for `types`
    #[arg(long)]
    size: Option<usize>,
    /// Maximum degree for `types`
    #[arg(long)]
    max_deg: Option<usize>,
    /// Corrupt one reference value (harness self-test for `reproduce`)
    #[arg(long, hide = true)]
    corrupt_golden: bool,
}

/// Validated invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub graph_spec: Option<String>,
    pub signatures: Vec<String>,
    pub max_cycle_len: Option<usize>,
    pub format: Format,
    pub workers: usize,
    pub size: Option<usize>,
    pub max_deg: Option<usize>,
    pub tamper: Tamper,
}

impl RunConfig {
    fn from_args(args: Args) -> Result<RunConfig, String> {
        let want = match args.command {
            Command::Equivalent => 2,
            Command::Invariants | Command::Canonical | Command::Frustration => 1,
            Command::Enumerate | Command::Types | Command::Reproduce => 0,
        };
        if args.sigs.len() != want {
            return Err(format!(
                "{:?} takes {want} --sig argument(s), got {}",
                args.command,
                args.sigs.len()
            ));
        }
        if args.command != Command::Reproduce && args.graph.is_none() {
            return Err("--graph is required".into());
        }
        if args.command == Command::Types && (args.size.is_none() || args.max_deg.is_none()) {
            return Err("types needs --size and --max-deg".into());
        }
        if args.workers == 0 {
            return Err("--workers must be at least 1".into());
        }
        Ok(RunConfig {
            command: args.command,
            graph_spec: args.graph,
            signatures: args.sigs,
            max_cycle_len: args.max_cycle_len,
            format: args.format,
            workers: args.workers,
            size: args.size,
            max_deg: args.max_deg,
            tamper: Tamper {
                corrupt_spectrum: args.corrupt_golden,
            },
        })
    }
}

/// Parses `args` (including the program name), runs the command writing its
/// report to `out`, and returns the exit code. Diagnostics go to stderr.
pub fn run<I, T>(args: I, out: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(args) => args,
        Err(e) if e.use_stderr() => {
            eprint!("{e}");
            return EXIT_INPUT;
        }
        Err(e) => {
            // --help and --version
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    let cfg = match RunConfig::from_args(args) {
        Ok(cfg) => cfg,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_INPUT;
        }
    };
    match execute(&cfg, out) {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::TooLarge(_) => EXIT_GUARD,
                _ => EXIT_INPUT,
            }
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

enum Failure {
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<i32, Failure>;

pub fn load_graph(spec: &str) -> Result<Graph, Error> {
    match spec.strip_prefix('@') {
        Some(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
            Graph::parse(&text)
        }
        None => reference::parse_builtin(spec),
    }
}

fn execute(cfg: &RunConfig, out: &mut impl Write) -> Outcome {
    if cfg.command == Command::Reproduce {
        return reproduce(cfg, out);
    }
    let spec = cfg.graph_spec.as_deref().expect("validated");
    let graph = Arc::new(load_graph(spec)?);
    let sigs = cfg
        .signatures
        .iter()
        .map(|s| Signature::parse(Arc::clone(&graph), s))
        .collect::<Result<Vec<_>, _>>()?;
    let ctx = Context {
        cfg,
        spec,
        graph,
        cycle_len: cfg.max_cycle_len,
    };
    match cfg.command {
        Command::Enumerate => ctx.enumerate(out),
        Command::Invariants => ctx.invariants(&sigs[0], out),
        Command::Equivalent => ctx.equivalent(&sigs[0], &sigs[1], out),
        Command::Canonical => ctx.canonical(&sigs[0], out),
        Command::Frustration => ctx.frustration(&sigs[0], out),
        Command::Types => ctx.types(out),
        Command::Reproduce => unreachable!(),
    }
}

struct Context<'a> {
    cfg: &'a RunConfig,
    spec: &'a str,
    graph: Arc<Graph>,
    cycle_len: Option<usize>,
}

fn spectrum_text(s: &CycleSpectrum) -> String {
    let parts: Vec<String> = s.counts().iter().map(|(k, c)| format!("{k}:{c}")).collect();
    parts.join(" ")
}

fn print_json(out: &mut impl Write, value: &serde_json::Value) -> std::io::Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(value).expect("json")
    )
}

impl Context<'_> {
    fn cycle_table(&self) -> Result<CycleTable, Error> {
        match self.cycle_len {
            Some(k) => CycleTable::new(&self.graph, k),
            None => Ok(CycleTable::with_default_len(&self.graph)),
        }
    }

    fn enumerate(&self, out: &mut impl Write) -> Outcome {
        let g = &self.graph;
        if g.cyclomatic_number() > crate::classify::MAX_COSET_BITS {
            return Err(Error::TooLarge(format!(
                "2^{} switching classes (limit 2^{})",
                g.cyclomatic_number(),
                crate::classify::MAX_COSET_BITS
            ))
            .into());
        }
        let table = self.cycle_table()?;
        let classifier = Classifier::new(Arc::clone(g))?;
        let mut classes = classifier.isomorphism_classes(self.cfg.workers)?;
        for class in &mut classes {
            class.spectrum = table.spectrum(class.canonical.bits());
        }
        match self.cfg.format {
            Format::Json => {
                let arr: Vec<_> = classes.iter().map(ClassReport::to_json).collect();
                print_json(out, &serde_json::Value::Array(arr))?;
            }
            Format::Text => {
                let labels = if g.vertex_count() == 6 && g.is_complete() {
                    reference::k6_class_labels(&classifier)?
                } else {
                    Default::default()
                };
                let label = |i: usize, c: &ClassReport| {
                    labels
                        .get(&c.canonical.bits().0)
                        .cloned()
                        .unwrap_or_else(|| format!("#{}", i + 1))
                };
                writeln!(
                    out,
                    "graph {}: n={} m={} c={}; {} switching classes; {} switching-isomorphism classes",
                    self.spec,
                    g.vertex_count(),
                    g.edge_count(),
                    g.component_count(),
                    1u128 << g.cyclomatic_number(),
                    classes.len()
                )?;
                let rows: Vec<(String, String)> = classes
                    .iter()
                    .map(|c| {
                        (
                            format!("{{{}}}", c.canonical_signature()),
                            format!("{{{}}}", c.min_rep),
                        )
                    })
                    .collect();
                let canon_w = rows
                    .iter()
                    .map(|r| r.0.len())
                    .max()
                    .unwrap_or(0)
                    .max("canonical".len());
                let min_w = rows
                    .iter()
                    .map(|r| r.1.len())
                    .max()
                    .unwrap_or(0)
                    .max("min_rep".len());
                writeln!(
                    out,
                    "{:<6} {:>12} {:>11}  {:<canon_w$} {:<min_w$} spectrum",
                    "class", "size", "frustration", "canonical", "min_rep"
                )?;
                for (i, (c, (canonical, min_rep))) in classes.iter().zip(&rows).enumerate() {
                    writeln!(
                        out,
                        "{:<6} {:>12} {:>11}  {canonical:<canon_w$} {min_rep:<min_w$} {}",
                        label(i, c),
                        c.class_size,
                        c.frustration,
                        spectrum_text(&c.spectrum)
                    )?;
                }
                writeln!(out)?;
                write!(out, "{:<7}", "")?;
                for (i, c) in classes.iter().enumerate() {
                    write!(out, "{:>5}", label(i, c))?;
                }
                writeln!(out)?;
                for k in 3..=table.max_len() {
                    write!(out, "{:<7}", format!("|C{k}-|"))?;
                    for c in &classes {
                        write!(out, "{:>5}", c.spectrum.count(k))?;
                    }
                    writeln!(out)?;
                }
            }
        }
        Ok(EXIT_OK)
    }

    fn invariants(&self, sig: &Signature, out: &mut impl Write) -> Outcome {
        let spectrum = self.cycle_table()?.spectrum(sig.bits());
        let (frustration, min_rep) = frustration_index(sig)?;
        let canonical = Classifier::new(Arc::clone(&self.graph))?.canonical_form(sig)?;
        let canonical = Signature::from_bits(Arc::clone(&self.graph), canonical.bits())?;
        let balanced = sig.is_balanced();
        match self.cfg.format {
            Format::Json => print_json(
                out,
                &json!({
                    "graph": self.spec,
                    "negative_edges": sig.to_string(),
                    "balanced": balanced,
                    "spectrum": spectrum,
                    "frustration": frustration,
                    "min_rep": min_rep.to_string(),
                    "canonical": canonical.to_string(),
                }),
            )?,
            Format::Text => {
                writeln!(out, "graph:          {}", self.spec)?;
                writeln!(out, "negative edges: {{{sig}}}")?;
                writeln!(out, "balanced:       {balanced}")?;
                writeln!(out, "spectrum:       {}", spectrum_text(&spectrum))?;
                writeln!(out, "frustration:    {frustration}")?;
                writeln!(out, "min rep:        {{{min_rep}}}")?;
                writeln!(out, "canonical:      {{{canonical}}}")?;
            }
        }
        Ok(EXIT_OK)
    }

    fn equivalent(&self, a: &Signature, b: &Signature, out: &mut impl Write) -> Outcome {
        let classifier = Classifier::new(Arc::clone(&self.graph))?;
        let witness = classifier.is_switching_isomorphic(a, b)?;
        let equivalent = a.is_switching_equivalent(b)?;
        match witness {
            Some(w) => {
                match self.cfg.format {
                    Format::Json => print_json(
                        out,
                        &json!({
                            "isomorphic": true,
                            "switching_equivalent": equivalent,
                            "permutation": w.perm.images(),
                            "switch_set": w.switch_set.to_vec(),
                        }),
                    )?,
                    Format::Text => {
                        writeln!(out, "switching isomorphic")?;
                        writeln!(out, "permutation: {:?}", w.perm.images())?;
                        writeln!(out, "switch set:  {:?}", w.switch_set.to_vec())?;
                        writeln!(out, "switching equivalent without relabeling: {equivalent}")?;
                    }
                }
                Ok(EXIT_OK)
            }
            None => {
                let table = self.cycle_table()?;
                let (sa, sb) = (table.spectrum(a.bits()), table.spectrum(b.bits()));
                match self.cfg.format {
                    Format::Json => print_json(
                        out,
                        &json!({
                            "isomorphic": false,
                            "spectra": [sa, sb],
                        }),
                    )?,
                    Format::Text => {
                        writeln!(out, "not switching isomorphic")?;
                        writeln!(out, "spectrum 1: {}", spectrum_text(&sa))?;
                        writeln!(out, "spectrum 2: {}", spectrum_text(&sb))?;
                    }
                }
                Ok(EXIT_NOT_ISOMORPHIC)
            }
        }
    }

    fn canonical(&self, sig: &Signature, out: &mut impl Write) -> Outcome {
        let key = Classifier::new(Arc::clone(&self.graph))?.canonical_form(sig)?;
        let key = Signature::from_bits(Arc::clone(&self.graph), key.bits())?;
        match self.cfg.format {
            Format::Json => print_json(
                out,
                &json!({ "graph": self.spec, "signature": sig.to_string(), "canonical": key.to_string() }),
            )?,
            Format::Text => writeln!(out, "{{{key}}}")?,
        }
        Ok(EXIT_OK)
    }

    fn frustration(&self, sig: &Signature, out: &mut impl Write) -> Outcome {
        let (size, rep) = frustration_index(sig)?;
        match self.cfg.format {
            Format::Json => print_json(
                out,
                &json!({ "graph": self.spec, "signature": sig.to_string(), "frustration": size, "min_rep": rep.to_string() }),
            )?,
            Format::Text => {
                writeln!(out, "frustration: {size}")?;
                writeln!(out, "min rep:     {{{rep}}}")?;
            }
        }
        Ok(EXIT_OK)
    }

    fn types(&self, out: &mut impl Write) -> Outcome {
        let (size, max_deg) = (self.cfg.size.unwrap(), self.cfg.max_deg.unwrap());
        let reps = automorphic_types(&self.graph, size, max_deg)?;
        let reps: Vec<String> = reps
            .into_iter()
            .map(|bits| Signature::from_bits(Arc::clone(&self.graph), bits).map(|s| s.to_string()))
            .collect::<Result<_, _>>()?;
        match self.cfg.format {
            Format::Json => print_json(
                out,
                &json!({ "graph": self.spec, "size": size, "max_deg": max_deg, "count": reps.len(), "representatives": reps }),
            )?,
            Format::Text => {
                writeln!(
                    out,
                    "{} automorphic types of size {size} with max degree {max_deg}",
                    reps.len()
                )?;
                for r in &reps {
                    writeln!(out, "  {{{r}}}")?;
                }
            }
        }
        Ok(EXIT_OK)
    }
}

fn reproduce(cfg: &RunConfig, out: &mut impl Write) -> Outcome {
    let items = reference::reproduce(cfg.workers, cfg.tamper)?;
    let failed = items.iter().filter(|i| !i.pass).count();
    match cfg.format {
        Format::Json => print_json(out, &serde_json::to_value(&items).expect("json"))?,
        Format::Text => {
            for i in &items {
                let verdict = if i.pass { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "{verdict}  {}: expected {}, got {}",
                    i.item, i.expected, i.got
                )?;
            }
            writeln!(
                out,
                "{} of {} checks passed",
                items.len() - failed,
                items.len()
            )?;
        }
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_MISMATCH })
}
