//! `spo`: command-line front end for spo-core.
//!
//! Structure arguments are file paths, or `@Name` for a catalog entry.
//! Exit status: 0 success or property holds, 1 property fails (witness on
//! stdout), 2 input error.

use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use spo_core::catalog;
use spo_core::classify::{Class, Classifier, Verdict};
use spo_core::commute;
use spo_core::constructs;
use spo_core::enumerate::{self, DEFAULT_CAP};
use spo_core::io;
use spo_core::refmat::entail::{self, DEFAULT_ASSIGNMENT_CAP};
use spo_core::refmat::formula::Formula;
use spo_core::refmat::{self, RefMatrix, SublatticeMode};
use spo_core::spectral::{self, SpectralEffect};
use spo_core::subalg;
use spo_core::{Elem, InvolutiveLattice, InvolutivePoset};

#[derive(Parser)]
#[command(
    name = "spo",
    version,
    about = "Finite involutive lattices, spectral effects and referential matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Class membership. Without --class, prints every class flag.
    Check {
        input: String,
        /// Class to test (repeatable), e.g. pkl, pom, spo, oml, kl, mpkl.
        #[arg(long = "class")]
        classes: Vec<String>,
    },
    /// Maximal Kleene subalgebras.
    Blocks { input: String },
    /// Every comparable pair lies in a common Kleene block.
    Tame { input: String },
    /// Search for a B6/B8 subalgebra or a B8*/B10 quotient.
    Forbidden { input: String },
    /// Commutation of two elements (names or indices).
    Commute { input: String, x: String, y: String },
    /// Constructions; results are printed in the structure format.
    Construct {
        #[command(subcommand)]
        which: Construct,
    },
    /// Effects over rational spaces.
    Spectral {
        #[command(subcommand)]
        which: Spectral,
    },
    /// Referential matrices.
    Refmat {
        #[command(subcommand)]
        which: Refmat,
    },
    /// All models of size n, optionally restricted to classes.
    Enumerate {
        n: usize,
        #[arg(long = "class")]
        classes: Vec<String>,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
    /// The built-in catalog.
    Catalog {
        #[command(subcommand)]
        which: CatalogCmd,
    },
    /// Hasse diagram in Graphviz DOT.
    Dot { input: String },
}

#[derive(Subcommand)]
enum Construct {
    /// New bottom and top adjoined.
    Sum { input: String },
    /// Direct product.
    Product { a: String, b: String },
    /// Moisil interval algebra of an orthomodular lattice.
    Moisil { input: String },
    /// Sharp elements as an involutive poset.
    Sh { input: String },
    /// The interval between 0_{x,y} and 1_{x,y}.
    Localizer { input: String, x: String, y: String },
    /// Sasaki tables; fails when the residuation law fails.
    Residual { input: String },
}

#[derive(Subcommand)]
enum Spectral {
    /// Spectral order; exit 1 when a is not below b.
    Leq { a: String, b: String },
    /// Join of two effects.
    Join { a: String, b: String },
    /// Meet of two effects.
    Meet { a: String, b: String },
    /// Complement 1 - a.
    Neg { a: String },
    /// Exit 0 when a is a projection.
    Sharp { a: String },
    /// Seeded random check of the lattice identities.
    Verify {
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum Refmat {
    /// Propositions and their values on each filter index.
    Build {
        input: String,
        /// Index filters by maximal Kleene sublattices only.
        #[arg(long)]
        blocks_only: bool,
    },
    /// Compare a structure with the poset of its propositions.
    Represent {
        input: String,
        /// Index filters by maximal Kleene sublattices only.
        #[arg(long)]
        blocks_only: bool,
    },
    /// Decide `premises |- conclusion`. `@two-state` names the two-index
    /// example matrix.
    Entail {
        input: String,
        conclusion: String,
        /// A premise formula (repeatable).
        #[arg(long = "premise")]
        premises: Vec<String>,
        /// Require the conclusion's variables to occur in the premises.
        #[arg(long)]
        structural: bool,
        /// Index filters by maximal Kleene sublattices only.
        #[arg(long)]
        blocks_only: bool,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
    Emit { name: String },
}

/// Input errors, reported with exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<(String, bool), InputError>;

fn load(input: &str) -> Result<InvolutivePoset, InputError> {
    if let Some(name) = input.strip_prefix('@') {
        return Ok(catalog::get(name)?.into_poset());
    }
    let text = fs::read_to_string(input).map_err(|e| InputError(format!("{input}: {e}")))?;
    io::parse(&text).map_err(|e| InputError(format!("{input}: {e}")))
}

fn load_lattice(input: &str) -> Result<InvolutiveLattice, InputError> {
    let p = load(input)?;
    InvolutiveLattice::try_lattice(p).map_err(|e| InputError(format!("{input}: {e}")))
}

fn load_effect(input: &str) -> Result<SpectralEffect, InputError> {
    let text = fs::read_to_string(input).map_err(|e| InputError(format!("{input}: {e}")))?;
    SpectralEffect::parse(&text).map_err(|e| InputError(format!("{input}: {e}")))
}

fn elem(p: &InvolutivePoset, tok: &str) -> Result<Elem, InputError> {
    p.find(tok)
        .ok_or_else(|| InputError(format!("no element `{tok}`")))
}

fn parse_classes(names: &[String]) -> Result<Vec<Class>, InputError> {
    names
        .iter()
        .map(|s| Class::from_name(s).ok_or_else(|| InputError(format!("unknown class `{s}`"))))
        .collect()
}

fn verdict_line(p: &InvolutivePoset, label: &str, v: &Verdict) -> String {
    match &v.witness {
        Some(w) if !v.holds => format!("{label}: no, witness {}\n", w.describe(p)),
        _ => format!("{label}: {}\n", if v.holds { "yes" } else { "no" }),
    }
}

fn names(p: &InvolutivePoset, xs: impl IntoIterator<Item = Elem>) -> String {
    xs.into_iter()
        .map(|e| p.label(e))
        .collect::<Vec<_>>()
        .join(" ")
}

fn check(input: &str, classes: &[String]) -> Outcome {
    let p = load(input)?;
    let classes = parse_classes(classes)?;
    let c = Classifier::new(&p);
    let mut out = String::new();
    if classes.is_empty() {
        for class in Class::ALL {
            out.push_str(&verdict_line(&p, class.name(), c.verdict(class)));
        }
        return Ok((out, true));
    }
    let mut ok = true;
    for class in classes {
        let v = c.verdict(class);
        ok &= v.holds;
        out.push_str(&verdict_line(&p, class.name(), v));
    }
    Ok((out, ok))
}

fn blocks(input: &str) -> Outcome {
    let l = load_lattice(input)?;
    let mut out = String::new();
    for b in subalg::kleene_blocks(&l) {
        writeln!(out, "{{{}}}", names(&l, b.members().iter())).unwrap();
    }
    Ok((out, true))
}

fn tame(input: &str) -> Outcome {
    let p = load(input)?;
    let v = match InvolutiveLattice::try_lattice(p.clone()) {
        Ok(l) => subalg::is_tame(&l),
        Err(_) => refmat::is_tame_poset(&p, subalg::DEFAULT_BUDGET)?,
    };
    Ok((verdict_line(&p, "tame", &v), v.holds))
}

fn forbidden(input: &str) -> Outcome {
    let l = load_lattice(input)?;
    match subalg::forbidden_configuration(&l, subalg::DEFAULT_BUDGET)? {
        None => Ok(("forbidden configuration: none\n".to_string(), true)),
        Some(w) => {
            let mut out = format!(
                "forbidden configuration: {} generated by ({}, {})\nsubalgebra: {{{}}}\n",
                w.kind.name(),
                l.label(w.generators.0),
                l.label(w.generators.1),
                names(&l, w.subuniverse.iter()),
            );
            if let Some(classes) = &w.congruence {
                let cls: Vec<String> = classes
                    .iter()
                    .map(|c| format!("{{{}}}", names(&l, c.iter().copied())))
                    .collect();
                writeln!(out, "congruence: {}", cls.join(" ")).unwrap();
            }
            Ok((out, false))
        }
    }
}

fn commute_cmd(input: &str, x: &str, y: &str) -> Outcome {
    let l = load_lattice(input)?;
    let (a, b) = (elem(&l, x)?, elem(&l, y)?);
    let r = commute::commutes_mpkl(&l, a, b);
    let yn = |v: bool| if v { "yes" } else { "no" };
    let out = format!(
        "C1: {}\nC2: {}\nC3: {}\nx = (x^y) v (x^y'): {}\nSg(x, y) distributive: {}\ncommutes: {}\n",
        yn(r.c1),
        yn(r.c2),
        yn(r.c3),
        yn(r.omp_commutes),
        yn(r.generated_distributive),
        yn(r.commutes()),
    );
    Ok((out, r.commutes()))
}

fn construct(which: &Construct) -> Outcome {
    let out = match which {
        Construct::Sum { input } => io::emit(&constructs::ordinal_sum(&load_lattice(input)?)),
        Construct::Product { a, b } => io::emit(&constructs::direct_product(
            &load_lattice(a)?,
            &load_lattice(b)?,
        )),
        Construct::Moisil { input } => {
            io::emit(&constructs::moisil_interval(&load_lattice(input)?)?.0)
        }
        Construct::Sh { input } => io::emit(&spo_core::classify::sh_poset(&load_lattice(input)?)),
        Construct::Localizer { input, x, y } => {
            let l = load_lattice(input)?;
            io::emit(&constructs::localizer(&l, elem(&l, x)?, elem(&l, y)?).lattice)
        }
        Construct::Residual { input } => return residual(input),
    };
    Ok((out, true))
}

fn residual(input: &str) -> Outcome {
    let l = load_lattice(input)?;
    let g = constructs::residual_groupoid(&l);
    let mut out = String::new();
    for (title, op) in [("odot", 0), ("arrow", 1)] {
        writeln!(out, "{title}").unwrap();
        for x in l.elements() {
            let row: Vec<String> = l
                .elements()
                .map(|y| l.label(if op == 0 { g.odot(x, y) } else { g.arrow(x, y) }))
                .collect();
            writeln!(out, "{} | {}", l.label(x), row.join(" ")).unwrap();
        }
    }
    let v = constructs::residuation_law(&l, &g);
    out.push_str(&verdict_line(&l, "residuation law", &v));
    Ok((out, v.holds))
}

fn spectral_cmd(which: &Spectral) -> Outcome {
    let yn = |v: bool| if v { "yes" } else { "no" };
    match which {
        Spectral::Leq { a, b } => {
            let holds = load_effect(a)?.leq(&load_effect(b)?)?;
            Ok((format!("leq: {}\n", yn(holds)), holds))
        }
        Spectral::Join { a, b } => Ok((load_effect(a)?.join(&load_effect(b)?)?.to_text(), true)),
        Spectral::Meet { a, b } => Ok((load_effect(a)?.meet(&load_effect(b)?)?.to_text(), true)),
        Spectral::Neg { a } => Ok((load_effect(a)?.complement().to_text(), true)),
        Spectral::Sharp { a } => {
            let holds = load_effect(a)?.is_sharp();
            Ok((format!("sharp: {}\n", yn(holds)), holds))
        }
        Spectral::Verify { samples, dim, seed } => {
            if *dim == 0 {
                return Err(InputError("dimension must be positive".into()));
            }
            let r = spectral::verify(*samples, *dim, *seed);
            let mut out = format!("samples {} dim {} seed {}\n", r.samples, r.dim, r.seed);
            for p in &r.properties {
                write!(
                    out,
                    "{}: {} tested, {} violations",
                    p.name, p.tested, p.violations
                )
                .unwrap();
                if let Some(i) = p.first_failure {
                    write!(out, " (first at sample {i})").unwrap();
                }
                out.push('\n');
            }
            write!(
                out,
                "canonical but not spectral: {} of {} pairs",
                r.canonical_not_spectral, r.canonical_pairs
            )
            .unwrap();
            if let Some(i) = r.first_canonical_not_spectral {
                write!(out, " (first at sample {i})").unwrap();
            }
            out.push('\n');
            Ok((out, r.passed()))
        }
    }
}

fn load_matrix(input: &str, blocks_only: bool) -> Result<RefMatrix, InputError> {
    if input == "@two-state" {
        return Ok(refmat::two_state_example());
    }
    let mode = if blocks_only {
        SublatticeMode::BlocksOnly
    } else {
        SublatticeMode::All
    };
    Ok(refmat::build_refmat(
        &load(input)?,
        mode,
        subalg::DEFAULT_BUDGET,
    )?)
}

fn refmat_cmd(which: &Refmat) -> Outcome {
    match which {
        Refmat::Build { input, blocks_only } => {
            let m = load_matrix(input, *blocks_only)?;
            let mut out = format!("indices {}\n", m.indices.join(" "));
            for p in &m.props {
                let vals: Vec<String> = p
                    .values
                    .iter()
                    .map(|v| v.map_or("-".to_string(), |t| t.to_string()))
                    .collect();
                writeln!(out, "{} | {}", p.label, vals.join(" ")).unwrap();
            }
            let ok = match m.check_definition() {
                Ok(()) => {
                    out.push_str("definition: ok\n");
                    true
                }
                Err(v) => {
                    writeln!(out, "definition: clause {} fails: {}", v.clause, v.detail).unwrap();
                    false
                }
            };
            Ok((out, ok))
        }
        Refmat::Represent { input, blocks_only } => {
            let m = load_matrix(input, *blocks_only)?;
            if m.origin.is_none() {
                return Err(InputError("matrix has no underlying structure".into()));
            }
            let r = refmat::representation_check(&m);
            let p = &m.origin.as_ref().unwrap().structure;
            let yn = |v: bool| if v { "yes" } else { "no" };
            let opt = |v: Option<bool>| v.map_or("n/a", yn);
            let mut out = String::new();
            match r.duplicate {
                Some((a, b)) => writeln!(
                    out,
                    "injective: no, witness ({}, {})",
                    p.label(a),
                    p.label(b)
                )
                .unwrap(),
                None => out.push_str("injective: yes\n"),
            }
            out.push_str(&verdict_line(p, "precsim implies leq", &r.forward));
            writeln!(out, "tame: {}", yn(r.tame)).unwrap();
            out.push_str(&verdict_line(p, "leq implies precsim", &r.converse));
            match r.transitivity_failure {
                Some((a, b, c)) => writeln!(
                    out,
                    "precsim transitive: no, witness ({})",
                    names(p, [a, b, c])
                )
                .unwrap(),
                None => out.push_str("precsim transitive: yes\n"),
            }
            writeln!(out, "S(A) is a UOP: {}", opt(r.s_is_uop)).unwrap();
            writeln!(
                out,
                "identity is an orthoisomorphism: {}",
                opt(r.identity_iso)
            )
            .unwrap();
            writeln!(out, "isomorphic: {}", opt(r.isomorphic)).unwrap();
            writeln!(out, "representation holds: {}", yn(r.holds())).unwrap();
            Ok((out, r.holds()))
        }
        Refmat::Entail {
            input,
            conclusion,
            premises,
            structural,
            blocks_only,
        } => {
            let m = load_matrix(input, *blocks_only)?;
            let phi = Formula::parse(conclusion)?;
            let gamma = premises
                .iter()
                .map(|s| Formula::parse(s))
                .collect::<Result<Vec<_>, _>>()?;
            let holds = if *structural {
                entail::entails_structural(&m, &gamma, &phi, DEFAULT_ASSIGNMENT_CAP)?
            } else {
                entail::entails(&m, &gamma, &phi, DEFAULT_ASSIGNMENT_CAP)?
            };
            let g: Vec<String> = gamma.iter().map(ToString::to_string).collect();
            let rel = if *structural { "|-*" } else { "|-" };
            let out = format!(
                "[{}] {rel} {phi}: {}\n",
                g.join(", "),
                if holds { "yes" } else { "no" }
            );
            Ok((out, holds))
        }
    }
}

fn enumerate_cmd(n: usize, classes: &[String], count: bool) -> Outcome {
    let classes = parse_classes(classes)?;
    let models = enumerate::enumerate_models(n, &classes, DEFAULT_CAP.max(n))?;
    let mut out = format!("# {} models\n", models.len());
    if !count {
        for m in &models {
            out.push('\n');
            out.push_str(&io::emit(m));
        }
    }
    Ok((out, true))
}

fn catalog_cmd(which: &CatalogCmd) -> Outcome {
    match which {
        CatalogCmd::List => {
            let mut out = String::new();
            for e in catalog::ENTRIES {
                writeln!(out, "{}\t{}\t{}", e.name, e.build().n(), e.summary).unwrap();
            }
            Ok((out, true))
        }
        CatalogCmd::Emit { name } => Ok((io::emit(catalog::get(name)?.poset()), true)),
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Check { input, classes } => check(&input, &classes),
        Command::Blocks { input } => blocks(&input),
        Command::Tame { input } => tame(&input),
        Command::Forbidden { input } => forbidden(&input),
        Command::Commute { input, x, y } => commute_cmd(&input, &x, &y),
        Command::Construct { which } => construct(&which),
        Command::Spectral { which } => spectral_cmd(&which),
        Command::Refmat { which } => refmat_cmd(&which),
        Command::Enumerate { n, classes, count } => enumerate_cmd(n, &classes, count),
        Command::Catalog { which } => catalog_cmd(&which),
        Command::Dot { input } => {
            let p = load(&input)?;
            let name = input
                .rsplit('/')
                .next()
                .unwrap_or(&input)
                .trim_start_matches('@');
            Ok((io::to_dot(&p, name), true))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
