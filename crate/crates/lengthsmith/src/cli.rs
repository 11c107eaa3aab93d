//! Batch command-line front end.
//!
//! Every subcommand maps onto one library operation and prints canonical
//! JSON (sorted keys, two-space indent) so outputs are byte-stable and
//! golden-testable. Exit codes are deterministic: `0` on success, `1` when
//! a verification or comparison reports a failure, `2` on malformed input,
//! which is reported as a machine-readable error object.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::families::{FamilyFile, FamilyPresentation};
use crate::invariants::{
    catenary_bounded, catenary_element, compare_systems, delta_bounded, irreducible_length_sets,
    SystemSlice,
};
use crate::lengthsets::SetOfLengths;
use crate::monoid::{Factorization, MonoidElement, MonoidFile, MonoidPresentation, Weight};
use crate::realization::{
    realize_family, realize_single, system_of_lengths, verify_composition, verify_properties,
    RealizedFamily, RealizedMonoid, VerifyOptions,
};
use crate::zerosum::{minimal_atoms, zs_lengths, zs_system, GroupSpec, ZeroSumSequence};

/// Result of one invocation: what to print and how to exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutcome {
    pub exit_code: i32,
    pub stdout: String,
}

#[derive(Parser)]
#[command(
    name = "lengthsmith",
    version,
    about = "Realize prescribed systems of sets of lengths and compute factorization invariants",
    after_help = "Exit codes: 0 success, 1 verification/comparison failure, 2 malformed input."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the monoid realizing one target set of lengths
    Realize {
        /// target set, e.g. "2,3" (must lie in N>=2)
        #[arg(long)]
        set: String,
        /// also write the presentation to this file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the coproduct realizing a family of generator sets
    RealizeFamily {
        /// generators as semicolon-separated sets, e.g. "2,3;2,5"
        #[arg(long)]
        gens: Option<String>,
        /// family presentation file {"generators": [[2,3],[2,5]]}
        #[arg(long)]
        family: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Set of lengths of one element
    Lengths {
        #[arg(long)]
        monoid: PathBuf,
        /// element as an atom multiset, e.g. "u1,1:1,u1,2:1"
        #[arg(long)]
        atoms: Option<String>,
        /// element as a raw vector, e.g. "1,1,0,0" (membership-checked)
        #[arg(long, allow_hyphen_values = true)]
        vector: Option<String>,
    },
    /// All factorizations of one element
    Factorizations {
        #[arg(long)]
        monoid: PathBuf,
        #[arg(long)]
        atoms: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        vector: Option<String>,
    },
    /// Catenary degree of one element (--atoms/--vector) or of the bounded
    /// slice (--bound)
    Catenary {
        #[arg(long)]
        monoid: PathBuf,
        #[arg(long)]
        atoms: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        vector: Option<String>,
        #[arg(long)]
        bound: Option<String>,
    },
    /// Union of distance sets over the bounded slice
    Delta {
        #[arg(long)]
        monoid: PathBuf,
        #[arg(long)]
        bound: String,
    },
    /// All length sets observed on the bounded slice
    System {
        #[arg(long)]
        monoid: PathBuf,
        #[arg(long)]
        bound: String,
        /// additionally report the indecomposable length sets of the slice
        #[arg(long)]
        generators: bool,
    },
    /// Exhaustively verify the structural properties of a realized monoid
    /// (or the composition properties of a realized coproduct)
    Verify {
        #[arg(long)]
        monoid: PathBuf,
        /// slice bound (default: three times the largest atom weight)
        #[arg(long)]
        bound: Option<String>,
        /// radius of the root-closure coordinate box (default: adapted to
        /// the dimension)
        #[arg(long = "box")]
        box_radius: Option<i64>,
        /// largest root exponent for the root-closure test
        #[arg(long, default_value_t = 3)]
        max_root: u32,
        /// seed for sampled checks
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Family queries: validation, enumeration, membership, decomposition
    Family {
        #[arg(long)]
        gens: Option<String>,
        #[arg(long)]
        family: Option<PathBuf>,
        /// list all members with max <= bound
        #[arg(long)]
        enumerate: Option<u64>,
        /// membership witness for a set, e.g. "5,6,7"
        #[arg(long)]
        contains: Option<String>,
        /// all two-part decompositions of a member
        #[arg(long)]
        decompose: Option<String>,
        /// indecomposability of a member
        #[arg(long)]
        indecomposable: Option<String>,
    },
    /// Zero-sum sequence monoids over finite abelian groups
    Zerosum {
        /// group spec file {"group": [3], "g0": [[1],[2]]}
        #[arg(long)]
        spec: Option<PathBuf>,
        /// cyclic orders, e.g. "3" or "2,2"
        #[arg(long)]
        group: Option<String>,
        /// support elements, coordinates comma-separated, elements
        /// semicolon-separated, e.g. "0,1;1,0;1,1"
        #[arg(long)]
        g0: Option<String>,
        /// list the minimal zero-sum sequences
        #[arg(long)]
        atoms: bool,
        /// lengths of one sequence, e.g. '{"[1]": 3, "[2]": 3}'
        #[arg(long)]
        lengths: Option<String>,
        /// all length sets of sequences up to this length
        #[arg(long)]
        system: Option<u64>,
    },
    /// Compare two system slices (monoid file, group spec, or slice file)
    Compare {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        bound_a: Option<String>,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        bound_b: Option<String>,
    },
}

#[derive(Debug)]
struct CliError {
    kind: &'static str,
    message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            kind: "input",
            message: message.into(),
        }
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::input(e.to_string())
    }
}

fn canonical_json(value: &Value) -> String {
    // serde_json objects are ordered maps, so this is key-sorted
    let mut s = serde_json::to_string(value).expect("value serializes");
    s.push('\n');
    s
}

/// Runs one invocation and returns its output instead of printing, which
/// keeps the binary thin and the interface directly testable.
pub fn run<I, T>(args: I) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return CliOutcome {
                    exit_code: 0,
                    stdout: e.to_string(),
                };
            }
            return CliOutcome {
                exit_code: 2,
                stdout: canonical_json(&json!({
                    "error": {"kind": "usage", "message": e.to_string()}
                })),
            };
        }
    };
    match execute(cli.command) {
        Ok((value, exit_code)) => CliOutcome {
            exit_code,
            stdout: canonical_json(&value),
        },
        Err(e) => CliOutcome {
            exit_code: 2,
            stdout: canonical_json(&json!({
                "error": {"kind": e.kind, "message": e.message}
            })),
        },
    }
}

fn execute(command: Command) -> Result<(Value, i32), CliError> {
    match command {
        Command::Realize { set, out } => {
            let l = parse_set(&set)?;
            let realized = realize_single(&l)?;
            let value = serde_json::to_value(realized.presentation().to_file())?;
            write_out(&out, &value)?;
            Ok((value, 0))
        }
        Command::RealizeFamily { gens, family, out } => {
            let presentation = family_from_flags(gens, family)?;
            let realized = realize_family(&presentation);
            let value = serde_json::to_value(realized.presentation().to_file())?;
            write_out(&out, &value)?;
            Ok((value, 0))
        }
        Command::Lengths {
            monoid,
            atoms,
            vector,
        } => {
            let p = load_monoid(&monoid)?;
            let v = element_from_flags(&p, atoms, vector)?;
            let lengths = p.lengths(&v)?;
            Ok((serde_json::to_value(lengths)?, 0))
        }
        Command::Factorizations {
            monoid,
            atoms,
            vector,
        } => {
            let p = load_monoid(&monoid)?;
            let v = element_from_flags(&p, atoms, vector)?;
            let zs = p.factorizations(&v)?;
            Ok((serde_json::to_value(zs)?, 0))
        }
        Command::Catenary {
            monoid,
            atoms,
            vector,
            bound,
        } => {
            let p = load_monoid(&monoid)?;
            match (bound, atoms.is_some() || vector.is_some()) {
                (Some(bound), false) => {
                    let b = parse_bound(&bound)?;
                    Ok((json!(catenary_bounded(&p, b)), 0))
                }
                (None, true) => {
                    let v = element_from_flags(&p, atoms, vector)?;
                    let c = catenary_element(&p, &v)
                        .map_err(|e| CliError::input(e.to_string()))?;
                    Ok((json!(c), 0))
                }
                _ => Err(CliError::input(
                    "pass exactly one of --bound or an element (--atoms/--vector)",
                )),
            }
        }
        Command::Delta { monoid, bound } => {
            let p = load_monoid(&monoid)?;
            let b = parse_bound(&bound)?;
            Ok((serde_json::to_value(delta_bounded(&p, b))?, 0))
        }
        Command::System {
            monoid,
            bound,
            generators,
        } => {
            let p = load_monoid(&monoid)?;
            let b = parse_bound(&bound)?;
            if generators {
                let slice = SystemSlice::from_monoid(&p, b);
                let report = irreducible_length_sets(&slice);
                Ok((
                    json!({
                        "sets": serde_json::to_value(&slice.sets)?,
                        "generators": serde_json::to_value(&report.generators)?,
                        "generated": report.generated,
                    }),
                    0,
                ))
            } else {
                Ok((serde_json::to_value(system_of_lengths(&p, b))?, 0))
            }
        }
        Command::Verify {
            monoid,
            bound,
            box_radius,
            max_root,
            seed,
        } => {
            let p = load_monoid(&monoid)?;
            let b = match bound {
                Some(bound) => parse_bound(&bound)?,
                None => Weight::from_integer(3) * p.max_atom_grading(),
            };
            match p.meta().construction.as_deref() {
                Some("prop3.1") => {
                    let realized = RealizedMonoid::from_presentation(p)?;
                    let opts = VerifyOptions {
                        box_radius,
                        max_root,
                        seed,
                        ..VerifyOptions::default()
                    };
                    let report = verify_properties(&realized, b, &opts);
                    let code = if report.passed() { 0 } else { 1 };
                    Ok((serde_json::to_value(&report)?, code))
                }
                Some("coproduct") => {
                    let realized = RealizedFamily::from_presentation(p)?;
                    let report = verify_composition(&realized, b);
                    let code = if report.passed { 0 } else { 1 };
                    Ok((serde_json::to_value(&report)?, code))
                }
                other => Err(CliError::input(format!(
                    "monoid file does not carry a recognized construction tag (found {other:?})"
                ))),
            }
        }
        Command::Family {
            gens,
            family,
            enumerate,
            contains,
            decompose,
            indecomposable,
        } => {
            let presentation = family_from_flags(gens, family)?;
            let modes = [
                enumerate.is_some(),
                contains.is_some(),
                decompose.is_some(),
                indecomposable.is_some(),
            ]
            .iter()
            .filter(|&&m| m)
            .count();
            if modes > 1 {
                return Err(CliError::input(
                    "--enumerate, --contains, --decompose and --indecomposable are exclusive",
                ));
            }
            if let Some(bound) = enumerate {
                let members = presentation.enumerate(bound);
                return Ok((serde_json::to_value(members)?, 0));
            }
            if let Some(set) = contains {
                let l = parse_set(&set)?;
                let witness = presentation.contains(&l);
                return Ok((
                    json!({
                        "member": witness.is_some(),
                        "witness": serde_json::to_value(witness)?,
                    }),
                    0,
                ));
            }
            if let Some(set) = decompose {
                let l = parse_set(&set)?;
                let pairs = presentation.decompositions(&l)?;
                return Ok((serde_json::to_value(pairs)?, 0));
            }
            if let Some(set) = indecomposable {
                let l = parse_set(&set)?;
                return Ok((json!(presentation.is_indecomposable(&l)?), 0));
            }
            Ok((serde_json::to_value(FamilyFile::from(presentation))?, 0))
        }
        Command::Zerosum {
            spec,
            group,
            g0,
            atoms,
            lengths,
            system,
        } => {
            let spec = group_from_flags(spec, group, g0)?;
            let modes = [atoms, lengths.is_some(), system.is_some()]
                .iter()
                .filter(|&&m| m)
                .count();
            if modes != 1 {
                return Err(CliError::input(
                    "pass exactly one of --atoms, --lengths or --system",
                ));
            }
            if atoms {
                return Ok((serde_json::to_value(minimal_atoms(&spec))?, 0));
            }
            if let Some(seq_json) = lengths {
                let seq: ZeroSumSequence = serde_json::from_str(&seq_json)
                    .map_err(|e| CliError::input(format!("bad sequence: {e}")))?;
                let l = zs_lengths(&spec, &seq)?;
                return Ok((serde_json::to_value(l)?, 0));
            }
            let bound = system.expect("checked above");
            Ok((serde_json::to_value(zs_system(&spec, bound))?, 0))
        }
        Command::Compare {
            a,
            bound_a,
            b,
            bound_b,
        } => {
            let slice_a = load_slice(&a, bound_a.as_deref())?;
            let slice_b = load_slice(&b, bound_b.as_deref())?;
            let report = compare_systems(&slice_a, &slice_b);
            let code = if report.agree { 0 } else { 1 };
            Ok((serde_json::to_value(&report)?, code))
        }
    }
}

fn parse_set(s: &str) -> Result<SetOfLengths, CliError> {
    let elems = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| CliError::input(format!("bad length value {t:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    SetOfLengths::new(elems).map_err(|e| CliError::input(e.to_string()))
}

fn parse_bound(s: &str) -> Result<Weight, CliError> {
    let w = Weight::from_str(s).map_err(|_| CliError::input(format!("bad bound {s:?}")))?;
    if w <= Weight::zero() {
        return Err(CliError::input("bound must be positive"));
    }
    Ok(w)
}

fn write_out(out: &Option<PathBuf>, value: &Value) -> Result<(), CliError> {
    if let Some(path) = out {
        fs::write(path, canonical_json(value))
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn load_monoid(path: &Path) -> Result<MonoidPresentation, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    let file: MonoidFile = serde_json::from_str(&text)
        .map_err(|e| CliError::input(format!("bad monoid file: {e}")))?;
    MonoidPresentation::from_file(file).map_err(|e| CliError::input(e.to_string()))
}

fn family_from_flags(
    gens: Option<String>,
    family: Option<PathBuf>,
) -> Result<FamilyPresentation, CliError> {
    match (gens, family) {
        (Some(_), Some(_)) => Err(CliError::input("pass --gens or --family, not both")),
        (None, Some(path)) => {
            let text = fs::read_to_string(&path)
                .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
            let presentation: FamilyPresentation = serde_json::from_str(&text)
                .map_err(|e| CliError::input(format!("bad family file: {e}")))?;
            Ok(presentation)
        }
        (gens, None) => {
            let gens = gens.unwrap_or_default();
            let sets = gens
                .split(';')
                .filter(|t| !t.trim().is_empty())
                .map(parse_set)
                .collect::<Result<Vec<_>, _>>()?;
            FamilyPresentation::new(sets).map_err(|e| CliError::input(e.to_string()))
        }
    }
}

/// Parses "u1,1:1,u1,2:2" into an atom multiset. Labels contain commas, so
/// tokens are accumulated until one carries a `:count` suffix.
fn parse_atom_multiset(s: &str) -> Result<BTreeMap<String, u64>, CliError> {
    let mut out: BTreeMap<String, u64> = BTreeMap::new();
    let mut pending = String::new();
    for token in s.split(',') {
        match token.rsplit_once(':') {
            Some((head, count)) => {
                let mut label = pending.clone();
                label.push_str(head);
                pending.clear();
                let n: u64 = count
                    .trim()
                    .parse()
                    .map_err(|_| CliError::input(format!("bad multiplicity {count:?}")))?;
                *out.entry(label).or_insert(0) += n;
            }
            None => {
                pending.push_str(token);
                pending.push(',');
            }
        }
    }
    if !pending.is_empty() {
        return Err(CliError::input(format!(
            "dangling atom token {pending:?} (expected label:count)"
        )));
    }
    Ok(out)
}

fn element_from_flags(
    p: &MonoidPresentation,
    atoms: Option<String>,
    vector: Option<String>,
) -> Result<MonoidElement, CliError> {
    match (atoms, vector) {
        (Some(atoms), None) => {
            let multiset = parse_atom_multiset(&atoms)?;
            let z = Factorization::new(multiset);
            p.element_of(&z).map_err(|e| CliError::input(e.to_string()))
        }
        (None, Some(vector)) => {
            let coords = vector
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| CliError::input(format!("bad coordinate {t:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if coords.len() != p.dim() {
                return Err(CliError::input(format!(
                    "vector has {} coordinates, presentation expects {}",
                    coords.len(),
                    p.dim()
                )));
            }
            Ok(MonoidElement::new(coords))
        }
        _ => Err(CliError::input("pass exactly one of --atoms or --vector")),
    }
}

fn group_from_flags(
    spec: Option<PathBuf>,
    group: Option<String>,
    g0: Option<String>,
) -> Result<GroupSpec, CliError> {
    match (spec, group, g0) {
        (Some(path), None, None) => {
            let text = fs::read_to_string(&path)
                .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| CliError::input(format!("bad group spec: {e}")))
        }
        (None, Some(group), Some(g0)) => {
            let orders = group
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| {
                    t.trim()
                        .parse::<u64>()
                        .map_err(|_| CliError::input(format!("bad order {t:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let elems = g0
                .split(';')
                .filter(|t| !t.trim().is_empty())
                .map(|e| {
                    e.split(',')
                        .filter(|t| !t.trim().is_empty())
                        .map(|t| {
                            t.trim()
                                .parse::<u64>()
                                .map_err(|_| CliError::input(format!("bad residue {t:?}")))
                        })
                        .collect::<Result<Vec<u64>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            GroupSpec::new(orders, elems).map_err(|e| CliError::input(e.to_string()))
        }
        _ => Err(CliError::input(
            "pass --spec FILE, or both --group and --g0",
        )),
    }
}

/// Builds a slice from a monoid file (grading bound), a group spec
/// (sequence-length bound), or a stored slice file.
fn load_slice(path: &Path, bound: Option<&str>) -> Result<SystemSlice, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::input(format!("bad JSON in {}: {e}", path.display())))?;
    let obj = value
        .as_object()
        .ok_or_else(|| CliError::input("expected a JSON object"))?;
    if obj.contains_key("sets") {
        return serde_json::from_value(value)
            .map_err(|e| CliError::input(format!("bad slice file: {e}")));
    }
    let bound = bound.ok_or_else(|| {
        CliError::input(format!("{} needs an explicit bound", path.display()))
    })?;
    if obj.contains_key("atoms") {
        let file: MonoidFile = serde_json::from_value(value)
            .map_err(|e| CliError::input(format!("bad monoid file: {e}")))?;
        let p = MonoidPresentation::from_file(file).map_err(|e| CliError::input(e.to_string()))?;
        Ok(SystemSlice::from_monoid(&p, parse_bound(bound)?))
    } else if obj.contains_key("group") {
        let spec: GroupSpec = serde_json::from_value(value)
            .map_err(|e| CliError::input(format!("bad group spec: {e}")))?;
        let b: u64 = bound
            .parse()
            .map_err(|_| CliError::input(format!("bad sequence bound {bound:?}")))?;
        Ok(SystemSlice::from_zero_sum(&spec, b))
    } else {
        Err(CliError::input(
            "file is neither a monoid, a group spec, nor a slice",
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atom_multiset_parsing_handles_comma_labels() {
        let m = parse_atom_multiset("u1,1:1,u1,2:2").unwrap();
        assert_eq!(
            m,
            BTreeMap::from([("u1,1".to_string(), 1), ("u1,2".to_string(), 2)])
        );
        let m = parse_atom_multiset("b1.u2,3:4").unwrap();
        assert_eq!(m, BTreeMap::from([("b1.u2,3".to_string(), 4)]));
        assert!(parse_atom_multiset("u1,1").is_err());
    }

    #[test]
    fn bad_flags_exit_with_usage_error() {
        let outcome = run(["lengthsmith", "realize"]);
        assert_eq!(outcome.exit_code, 2);
        assert!(outcome.stdout.contains("\"kind\":\"usage\""));
    }

    #[test]
    fn bad_set_exits_with_input_error() {
        let outcome = run(["lengthsmith", "realize", "--set", "1,3"]);
        assert_eq!(outcome.exit_code, 2);
        assert!(outcome.stdout.contains("\"kind\":\"input\""));
    }
}
