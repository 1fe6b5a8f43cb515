//! Command-line front end. Exit codes: 0 success / equivalent / match,
//! 1 definitive negative, 2 usage or input error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::chartab::{character_table, CharacterTable};
use crate::detform::{factorization_check, regular_identity_check, Assignment, ExactValue, FactorizationReport, RegularIdentityReport};
use crate::error::{Error, Result};
use crate::group::{build_group_capped, conjugacy_classes, ElementId, FiniteGroup, GroupFamilySpec, IsoWitness};
use crate::io;
use crate::kchar::{
    equivalence_search, k_character_general, orthogonality_sum, parse_levels, regular_k_character,
    regular_k_tables_from_irreducibles, KCharTable,
};
use crate::recon::{
    extract_identity_and_inverses, extract_symmetrized_products, reconstruct_group, roundtrip, ClosedFormOracle,
    Reconstruction, SymmetrizedProducts,
};

#[derive(Parser, Debug)]
#[command(name = "groupchar", version, about = "Group characters, k-characters and group determinants")]
pub struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,
    /// Largest group order accepted.
    #[arg(long, global = true, default_value_t = crate::group::DEFAULT_MAX_ORDER)]
    pub max_order: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Pretty,
}

#[derive(Args, Debug, Clone)]
pub struct GroupSource {
    /// Group JSON file.
    #[arg(long, conflicts_with = "spec")]
    pub group: Option<PathBuf>,
    /// Family recipe such as `dihedral(8)` or `perms(4: (0 1 2), (0 1))`.
    #[arg(long)]
    pub spec: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build or load a group, validate it, optionally save it.
    Group {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Compute the character table.
    Chartab {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// k-character values: one tuple, or a whole table for k ≤ 3.
    Kchar {
        #[command(flatten)]
        source: GroupSource,
        /// Character index; omit with --regular.
        #[arg(long, required_unless_present = "regular")]
        character: Option<usize>,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Comma-separated element indices.
        #[arg(long)]
        tuple: Option<String>,
        /// Use the regular character.
        #[arg(long)]
        regular: bool,
        /// Only one tuple per simultaneous-conjugation orbit.
        #[arg(long)]
        orbits: bool,
    },
    /// Orthogonality sums Σ χᵢ⁽ᵏ⁾·conj(χⱼ⁽ᵏ⁾).
    Ortho {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long, requires = "j")]
        i: Option<usize>,
        #[arg(long, requires = "i")]
        j: Option<usize>,
        /// Defaults to 1, 2 and 3.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Group determinant checks at seeded rational points.
    Detcheck {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long, default_value_t = 20)]
        points: usize,
    },
    /// Rebuild a group from its regular 1-, 2-, 3-characters, or a table
    /// from a symmetrized-products file.
    Reconstruct {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long, conflicts_with_all = ["group", "spec"])]
        pairs: Option<PathBuf>,
        /// Also write the extracted products.
        #[arg(long)]
        save_pairs: Option<PathBuf>,
    },
    /// Search for a k-character table equivalence.
    Compare {
        /// Group file or family recipe.
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, default_value = "1,2,3")]
        levels: String,
    },
}

/// Rendered output and the exit code it implies.
pub struct Outcome {
    pub body: String,
    pub code: i32,
}

fn emit<T: Serialize>(value: &T, format: OutputFormat, success: bool) -> Result<Outcome> {
    let body = match format {
        OutputFormat::Json => serde_json::to_string(value)?,
        OutputFormat::Pretty => serde_json::to_string_pretty(value)?,
    };
    Ok(Outcome { body, code: if success { 0 } else { 1 } })
}

fn load(source: &GroupSource, max_order: usize) -> Result<FiniteGroup> {
    match (&source.group, &source.spec) {
        (Some(path), _) => io::load_group(path, max_order),
        (None, Some(spec)) => {
            let parsed: GroupFamilySpec = spec.parse()?;
            Ok(build_group_capped(&parsed, max_order)?.with_name(spec.clone()))
        }
        (None, None) => Err(Error::InvalidParameter("one of --group or --spec is required".into())),
    }
}

fn load_either(arg: &str, max_order: usize) -> Result<FiniteGroup> {
    if Path::new(arg).exists() {
        io::load_group(arg, max_order)
    } else {
        load(&GroupSource { group: None, spec: Some(arg.to_string()) }, max_order)
    }
}

fn parse_tuple(s: &str) -> Result<Vec<ElementId>> {
    s.split(',')
        .map(|x| x.trim().parse::<u32>().map(ElementId).map_err(|_| Error::InvalidParameter(format!("bad tuple `{s}`"))))
        .collect()
}

fn check_elements(g: &FiniteGroup, tuple: &[ElementId]) -> Result<()> {
    match tuple.iter().find(|x| x.index() >= g.order()) {
        Some(x) => Err(Error::InvalidParameter(format!("element {x} out of range for order {}", g.order()))),
        None => Ok(()),
    }
}

#[derive(Serialize)]
struct GroupSummary<'a> {
    name: &'a str,
    order: usize,
    abelian: bool,
    exponent: u32,
    classes: usize,
    table: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct KValue {
    character: Option<usize>,
    tuple: Vec<ElementId>,
    value: ExactValue,
}

#[derive(Serialize)]
struct OrthoEntry {
    i: usize,
    j: usize,
    k: usize,
    value: ExactValue,
}

#[derive(Serialize)]
struct DetcheckReport {
    seed: u64,
    factorization: Vec<FactorizationReport>,
    regular_identity: Vec<RegularIdentityReport>,
}

#[derive(Serialize)]
struct BareReconstruction {
    feasible: bool,
    table: Option<Vec<Vec<usize>>>,
    search_nodes: u64,
}

#[derive(Serialize)]
struct RoundtripReport {
    source: String,
    table: Vec<Vec<usize>>,
    witness: Option<IsoWitness>,
    search_nodes: u64,
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let (seed, fmt, cap) = (cli.seed, cli.output, cli.max_order);
    let table = |g: &FiniteGroup| -> Result<CharacterTable> { character_table(g, seed) };
    match &cli.command {
        Command::Group { source, save } => {
            let g = load(source, cap)?;
            if let Some(path) = save {
                io::save_group(path, &g)?;
            }
            let summary = GroupSummary {
                name: g.name(),
                order: g.order(),
                abelian: g.is_abelian(),
                exponent: g.exponent(),
                classes: conjugacy_classes(&g).len(),
                table: g.rows(),
            };
            emit(&summary, fmt, true)
        }
        Command::Chartab { source, save } => {
            let t = table(&load(source, cap)?)?;
            let text = io::chartab_to_json(&t);
            if let Some(path) = save {
                std::fs::write(path, &text)?;
            }
            let value: serde_json::Value = serde_json::from_str(&text)?;
            match fmt {
                OutputFormat::Json => Ok(Outcome { body: text, code: 0 }),
                OutputFormat::Pretty => emit(&value, fmt, true),
            }
        }
        Command::Kchar { source, character, k, tuple, regular, orbits } => {
            let g = load(source, cap)?;
            if let Some(tuple) = tuple {
                let tuple = parse_tuple(tuple)?;
                check_elements(&g, &tuple)?;
                let value = if *regular {
                    ExactValue::from(crate::num::Cyclotomic::from_integer(1, regular_k_character(&g, &tuple)?))
                } else {
                    let j = character.expect("clap enforces --character");
                    k_character_general(&table(&g)?, j, &tuple)?.into()
                };
                return emit(&KValue { character: if *regular { None } else { *character }, tuple, value }, fmt, true);
            }
            let t = table(&g)?;
            let kt: KCharTable = if *regular {
                if !(1..=3).contains(k) {
                    return Err(Error::InvalidParameter(format!("regular tables need k in 1..=3, got {k}")));
                }
                regular_k_tables_from_irreducibles(&t)?.swap_remove(k - 1)
            } else {
                KCharTable::build(&t, character.expect("clap enforces --character"), *k)?
            };
            let text = io::kchar_table_to_json(&kt, orbits.then_some(&g));
            match fmt {
                OutputFormat::Json => Ok(Outcome { body: text, code: 0 }),
                OutputFormat::Pretty => emit(&serde_json::from_str::<serde_json::Value>(&text)?, fmt, true),
            }
        }
        Command::Ortho { source, i, j, k } => {
            let t = table(&load(source, cap)?)?;
            let ks: Vec<usize> = match k {
                Some(k) => vec![*k],
                None => vec![1, 2, 3],
            };
            let pairs: Vec<(usize, usize)> = match (i, j) {
                (Some(i), Some(j)) => vec![(*i, *j)],
                _ => (0..t.len()).flat_map(|i| (0..t.len()).map(move |j| (i, j))).collect(),
            };
            let mut entries = Vec::new();
            let mut clean = true;
            for &k in &ks {
                for &(i, j) in &pairs {
                    let v = orthogonality_sum(&t, i, j, k)?;
                    clean &= i == j || v.is_zero();
                    entries.push(OrthoEntry { i, j, k, value: v.into() });
                }
            }
            emit(&entries, fmt, clean)
        }
        Command::Detcheck { source, points } => {
            let g = load(source, cap)?;
            let t = table(&g)?;
            let pts = Assignment::seeded_points(g.order(), seed, *points);
            let factorization = factorization_check(&t, &pts)?;
            let regular_identity = regular_identity_check(&g, &pts)?;
            let ok = factorization.iter().all(|r| r.matches) && regular_identity.iter().all(|r| r.matches);
            emit(&DetcheckReport { seed, factorization, regular_identity }, fmt, ok)
        }
        Command::Reconstruct { source, pairs, save_pairs } => {
            if let Some(path) = pairs {
                let p = SymmetrizedProducts::from_json(&io::read(path)?)?;
                if p.order() > cap {
                    return Err(Error::OrderTooLarge { order: p.order(), cap });
                }
                return match reconstruct_group(&p)? {
                    Reconstruction::Found(r) => emit(
                        &BareReconstruction { feasible: true, table: Some(r.table.rows()), search_nodes: r.search_nodes },
                        fmt,
                        true,
                    ),
                    Reconstruction::Infeasible { search_nodes } => {
                        emit(&BareReconstruction { feasible: false, table: None, search_nodes }, fmt, false)
                    }
                };
            }
            let g = load(source, cap)?;
            if let Some(path) = save_pairs {
                let oracle = ClosedFormOracle::new(&g);
                let (e, inv) = extract_identity_and_inverses(&oracle)?;
                std::fs::write(path, extract_symmetrized_products(&oracle, e, &inv)?.to_json())?;
            }
            let r = roundtrip(&g)?;
            let report = RoundtripReport {
                source: g.name().to_string(),
                table: r.table.rows(),
                witness: r.witness,
                search_nodes: r.search_nodes,
            };
            emit(&report, fmt, true)
        }
        Command::Compare { a, b, levels } => {
            let levels = parse_levels(levels)?;
            let ta = table(&load_either(a, cap)?)?;
            let tb = table(&load_either(b, cap)?)?;
            let verdict = equivalence_search(&ta, &tb, &levels)?;
            let ok = verdict.equivalent;
            emit(&verdict, fmt, ok)
        }
    }
}

/// Parses `args` (including the program name), runs, and writes to the
/// given streams. Returns the process exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match run(&cli) {
        Ok(o) => {
            let _ = writeln!(out, "{}", o.body);
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
