//! Command-line front end.
//!
//! Exit codes: 0 = pass, 1 = assertion failure (a verified contract did not
//! hold), 2 = bad input or usage, 3 = resource cap exceeded.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Read;

use serde_json::json;

use crate::descriptor::{LatticePathJson, PosetInput, PosetJson, SemigroupDescriptor};
use crate::error::{Error, Result};
use crate::ideal;
use crate::kw;
use crate::poset::Primality;
use crate::report::{self, to_jsonl, RunReport, VerifyOptions};
use crate::resolution::{betti_oracle, Field};

const USAGE: &str = "\
nsg — exact arithmetic for numerical semigroups and their lattice-path classes

USAGE:
  nsg info INPUT
  nsg apery INPUT [--dot FILE]
  nsg betti INPUT [--method formula|oracle] [--field q|PRIME] [--out FILE]
  nsg kw construct INPUT
  nsg kw check INPUT P Q
  nsg kw path INPUT
  nsg kw determinantal INPUT
  nsg kw witness INPUT [--bound N]
  nsg poset decompose INPUT
  nsg poset check INPUT [--relaxed]
  nsg poset realize INPUT [--alpha N] [--x A,B,C] [--relaxed]
  nsg ideal gens INPUT [--json]
  nsg ideal tangent-cone INPUT [--json]
  nsg ideal cm INPUT
  nsg ideal obstruction INPUT
  nsg verify kw-betti [--budget N] [--field q|PRIME] [--jsonl FILE]
  nsg verify morales [--trials T] [--seed S] [--jsonl FILE]
  nsg verify apery [--budget N] [--jsonl FILE]
  nsg verify poset-roundtrip [--budget N] [--jsonl FILE]
  nsg verify all [--budget N] [--trials T] [--seed S] [--jsonl FILE]

INPUT is a path to a JSON descriptor, an inline JSON string, or '-' (stdin).
Semigroup descriptors: {\"type\":\"generators\",\"gens\":[5,8,17]}
                       {\"type\":\"kw\",\"p\":8,\"q\":17,\"x\":[1,2,3],\"y\":[4,3,2]}
Poset commands also accept {\"m\":5,\"covers\":[[0,3],[3,1],[0,2],[0,4]]}.
NSG_THREADS caps worker parallelism for the verify sweeps (default 1).
";

struct Flags {
    positional: Vec<String>,
    options: BTreeMap<String, String>,
    switches: BTreeSet<String>,
}

fn parse_flags(args: &[String], options: &[&str], switches: &[&str]) -> Result<Flags> {
    let mut flags = Flags {
        positional: Vec::new(),
        options: BTreeMap::new(),
        switches: BTreeSet::new(),
    };
    let mut it = args.iter().peekable();
    while let Some(arg) = it.next() {
        if let Some(name) = arg.strip_prefix("--") {
            if switches.contains(&name) {
                flags.switches.insert(name.to_string());
            } else if options.contains(&name) {
                let value = it
                    .next()
                    .ok_or_else(|| Error::input(format!("--{name} needs a value")))?;
                flags.options.insert(name.to_string(), value.clone());
            } else {
                return Err(Error::input(format!("unknown flag --{name}")));
            }
        } else {
            flags.positional.push(arg.clone());
        }
    }
    Ok(flags)
}

fn read_input(spec: &str) -> Result<String> {
    if spec == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::input(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else if spec.trim_start().starts_with('{') {
        Ok(spec.to_string())
    } else {
        std::fs::read_to_string(spec).map_err(|e| Error::input(format!("reading {spec}: {e}")))
    }
}

fn semigroup_input(spec: &str) -> Result<SemigroupDescriptor> {
    SemigroupDescriptor::parse(&read_input(spec)?)
}

fn write_output(path: &str, content: &str) -> Result<()> {
    std::fs::write(path, content).map_err(|e| Error::input(format!("writing {path}: {e}")))
}

fn parse_field(text: &str) -> Result<Field> {
    if text == "q" {
        Ok(Field::Rationals)
    } else {
        let p: u64 = text
            .parse()
            .map_err(|_| Error::input(format!("--field expects q or a prime, got {text}")))?;
        Ok(Field::Prime(p))
    }
}

fn parse_u64(flags: &Flags, name: &str, default: u64) -> Result<u64> {
    match flags.options.get(name) {
        None => Ok(default),
        Some(v) => v
            .parse()
            .map_err(|_| Error::input(format!("--{name} expects an integer, got {v}"))),
    }
}

fn need_input(flags: &Flags) -> Result<&String> {
    flags
        .positional
        .first()
        .ok_or_else(|| Error::input("missing INPUT argument".to_string()))
}

/// Entry point: returns the process exit code.
pub fn run(args: &[String]) -> i32 {
    match dispatch(args) {
        Ok(code) => code,
        Err(Error::Input(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("{USAGE}");
            2
        }
        Err(Error::Resource(msg)) => {
            eprintln!("error: resource cap exceeded: {msg}");
            3
        }
        Err(Error::Contract(msg)) => {
            eprintln!("error: contract violated: {msg}");
            1
        }
    }
}

fn dispatch(args: &[String]) -> Result<i32> {
    let Some(command) = args.first() else {
        return Err(Error::input("no command given".to_string()));
    };
    match command.as_str() {
        "help" | "--help" | "-h" => {
            println!("{USAGE}");
            Ok(0)
        }
        "info" => cmd_info(&args[1..]),
        "apery" => cmd_apery(&args[1..]),
        "betti" => cmd_betti(&args[1..]),
        "kw" => cmd_kw(&args[1..]),
        "poset" => cmd_poset(&args[1..]),
        "ideal" => cmd_ideal(&args[1..]),
        "verify" => cmd_verify(&args[1..]),
        other => Err(Error::input(format!("unknown command {other}"))),
    }
}

fn cmd_info(args: &[String]) -> Result<i32> {
    let flags = parse_flags(args, &[], &[])?;
    let s = semigroup_input(need_input(&flags)?)?.semigroup()?;
    println!("generators: {:?}", s.generators());
    println!("embedding dimension: {}", s.embedding_dimension());
    println!("multiplicity: {}", s.multiplicity());
    println!("frobenius: {}", s.frobenius());
    println!("genus: {}", s.genus());
    println!("apery: {:?}", s.apery());
    Ok(0)
}

fn cmd_apery(args: &[String]) -> Result<i32> {
    let flags = parse_flags(args, &["dot"], &[])?;
    let s = semigroup_input(need_input(&flags)?)?.semigroup()?;
    let poset = crate::poset::AperyPoset::of_semigroup(&s);
    let mut sorted = s.apery().to_vec();
    sorted.sort_unstable();
    println!("apery set: {sorted:?}");
    println!(
        "poset: {}",
        serde_json::to_string(&PosetJson::from(&poset)).expect("poset serializes")
    );
    if let Some(path) = flags.options.get("dot") {
        write_output(path, &poset.to_dot())?;
        eprintln!("wrote Hasse diagram to {path}");
    }
    Ok(0)
}

fn cmd_betti(args: &[String]) -> Result<i32> {
    let flags = parse_flags(args, &["method", "field", "out"], &[])?;
    let descriptor = semigroup_input(need_input(&flags)?)?;
    let method = flags
        .options
        .get("method")
        .map(String::as_str)
        .unwrap_or("oracle");
    let csv = match method {
        "formula" => {
            let n = descriptor.semigroup()?.embedding_dimension();
            let betti = kw::betti_formula(n)?;
            let mut out = String::from("i,degree,multiplicity\n");
            for (i, b) in betti.iter().enumerate() {
                out.push_str(&format!("{i},total,{b}\n"));
            }
            out
        }
        "oracle" => {
            let field = match flags.options.get("field") {
                Some(f) => parse_field(f)?,
                None => Field::Rationals,
            };
            let s = descriptor.semigroup()?;
            betti_oracle(&s, field)?.to_csv()
        }
        other => {
            return Err(Error::input(format!(
                "--method expects formula or oracle, got {other}"
            )))
        }
    };
    match flags.options.get("out") {
        Some(path) => write_output(path, &csv)?,
        None => print!("{csv}"),
    }
    Ok(0)
}

fn cmd_kw(args: &[String]) -> Result<i32> {
    let Some(sub) = args.first() else {
        return Err(Error::input("kw needs a subcommand".to_string()));
    };
    match sub.as_str() {
        "construct" => {
            let flags = parse_flags(&args[1..], &[], &[])?;
            let k = semigroup_input(need_input(&flags)?)?.kw()?;
            println!(
                "{}",
                json!({
                    "p": k.p(), "q": k.q(), "r": k.r(),
                    "x": k.x(), "y": k.y(), "h": k.h(),
                    "generators": k.semigroup().generators(),
                    "embedding_dimension": k.embedding_dimension(),
                })
            );
            Ok(0)
        }
        "check" => {
            let flags = parse_flags(&args[1..], &[], &[])?;
            if flags.positional.len() != 3 {
                return Err(Error::input("kw check INPUT P Q".to_string()));
            }
            let s = semigroup_input(&flags.positional[0])?.semigroup()?;
            let p: u64 = flags.positional[1]
                .parse()
                .map_err(|_| Error::input("P must be an integer".to_string()))?;
            let q: u64 = flags.positional[2]
                .parse()
                .map_err(|_| Error::input("Q must be an integer".to_string()))?;
            let answer = kw::is_kw(&s, p, q)?;
            println!("{answer}");
            Ok(0)
        }
        "path" => {
            let flags = parse_flags(&args[1..], &[], &[])?;
            let k = semigroup_input(need_input(&flags)?)?.kw()?;
            let path = k.lattice_path();
            println!(
                "{}",
                serde_json::to_string(&LatticePathJson {
                    p: path.p,
                    q: path.q,
                    corners: path.corners.clone(),
                })
                .expect("path serializes")
            );
            Ok(0)
        }
        "determinantal" => {
            let flags = parse_flags(&args[1..], &[], &[])?;
            let k = semigroup_input(need_input(&flags)?)?.kw()?;
            match k.determinantal_pattern() {
                Some((x, y)) => println!("true (x = {x}, y = {y})"),
                None => println!("false"),
            }
            Ok(0)
        }
        "witness" => {
            let flags = parse_flags(&args[1..], &["bound"], &[])?;
            let s = semigroup_input(need_input(&flags)?)?.semigroup()?;
            let bound = flags
                .options
                .get("bound")
                .map(|v| {
                    v.parse::<u64>()
                        .map_err(|_| Error::input("--bound expects an integer".to_string()))
                })
                .transpose()?;
            match kw::find_kw_witness(&s, bound)? {
                Some((p, q)) => println!("({p}, {q})"),
                None => println!("none within bound"),
            }
            Ok(0)
        }
        other => Err(Error::input(format!("unknown kw subcommand {other}"))),
    }
}

fn cmd_poset(args: &[String]) -> Result<i32> {
    let Some(sub) = args.first() else {
        return Err(Error::input("poset needs a subcommand".to_string()));
    };
    let mode_of = |flags: &Flags| {
        if flags.switches.contains("relaxed") {
            Primality::Relaxed
        } else {
            Primality::Strict
        }
    };
    match sub.as_str() {
        "decompose" => {
            let flags = parse_flags(&args[1..], &[], &[])?;
            let poset = PosetInput::parse(&read_input(need_input(&flags)?)?)?.poset()?;
            match poset.decompose() {
                Some(d) => println!(
                    "{}",
                    json!({ "p": d.p, "a": d.a, "ell0": d.ell0, "branches": d.branches })
                ),
                None => println!("none"),
            }
            Ok(0)
        }
        "check" => {
            let flags = parse_flags(&args[1..], &[], &["relaxed"])?;
            let poset = PosetInput::parse(&read_input(need_input(&flags)?)?)?.poset()?;
            let Some(data) = poset.decompose() else {
                println!("shape: no decomposition matches the chain-and-branches pattern");
                return Ok(0);
            };
            let check = data.check(mode_of(&flags))?;
            println!(
                "conditions: shape={} ybound={} congruence={} chain-lengths={}",
                check.conditions[0], check.conditions[1], check.conditions[2], check.conditions[3]
            );
            if let Some(y) = &check.y_sorted {
                println!("y: {y:?}");
            }
            if check.relaxed_warning {
                println!("warning: composite modulus accepted in relaxed mode");
            }
            for msg in &check.messages {
                println!("note: {msg}");
            }
            println!("passed: {}", check.passed());
            Ok(0)
        }
        "realize" => {
            let flags = parse_flags(&args[1..], &["alpha", "x"], &["relaxed"])?;
            let poset = PosetInput::parse(&read_input(need_input(&flags)?)?)?.poset()?;
            let data = poset.decompose().ok_or_else(|| {
                Error::input("poset does not match the chain-and-branches pattern".to_string())
            })?;
            let alpha = flags
                .options
                .get("alpha")
                .map(|v| {
                    v.parse::<u64>()
                        .map_err(|_| Error::input("--alpha expects an integer".to_string()))
                })
                .transpose()?;
            let x_seq = flags
                .options
                .get("x")
                .map(|v| {
                    v.split(',')
                        .map(|t| {
                            t.trim().parse::<u64>().map_err(|_| {
                                Error::input("--x expects comma-separated integers".to_string())
                            })
                        })
                        .collect::<Result<Vec<u64>>>()
                })
                .transpose()?;
            let k = data.realize(alpha, x_seq.as_deref(), mode_of(&flags))?;
            println!(
                "{}",
                json!({
                    "p": k.p(), "q": k.q(), "x": k.x(), "y": k.y(),
                    "generators": k.semigroup().generators(),
                })
            );
            Ok(0)
        }
        other => Err(Error::input(format!("unknown poset subcommand {other}"))),
    }
}

fn cmd_ideal(args: &[String]) -> Result<i32> {
    let Some(sub) = args.first() else {
        return Err(Error::input("ideal needs a subcommand".to_string()));
    };
    match sub.as_str() {
        "gens" => {
            let flags = parse_flags(&args[1..], &[], &["json"])?;
            let k = semigroup_input(need_input(&flags)?)?.kw()?;
            let ideal = ideal::defining_ideal(&k)?;
            if flags.switches.contains("json") {
                println!(
                    "{}",
                    serde_json::to_string(&ideal).expect("ideal serializes")
                );
            } else {
                println!("{}", ideal.printout());
            }
            Ok(0)
        }
        "tangent-cone" => {
            let flags = parse_flags(&args[1..], &[], &["json"])?;
            let k = semigroup_input(need_input(&flags)?)?.kw()?;
            let (cone, mu) = ideal::tangent_cone_ideal(&k)?;
            if flags.switches.contains("json") {
                println!("{}", json!({ "mu": mu, "generators": cone, }));
            } else {
                println!("mu: {mu}");
                println!("{}", cone.printout());
            }
            Ok(0)
        }
        "cm" => {
            let flags = parse_flags(&args[1..], &[], &[])?;
            let k = semigroup_input(need_input(&flags)?)?.kw()?;
            let report = ideal::cm_check(&k);
            println!("{}", report.summary);
            println!(
                "condition 1 (steps wide): {}; condition 2 (x1+y1 >= p-1): {}",
                report.condition1, report.condition2
            );
            Ok(0)
        }
        "obstruction" => {
            let flags = parse_flags(&args[1..], &[], &[])?;
            let k = semigroup_input(need_input(&flags)?)?.kw()?;
            let witness = ideal::find_cm_obstruction(&k)?;
            println!(
                "{}",
                ideal::binomial_to_string(&witness, k.embedding_dimension())
            );
            Ok(0)
        }
        other => Err(Error::input(format!("unknown ideal subcommand {other}"))),
    }
}

fn cmd_verify(args: &[String]) -> Result<i32> {
    let Some(sub) = args.first() else {
        return Err(Error::input("verify needs a subcommand".to_string()));
    };
    let flags = parse_flags(
        &args[1..],
        &["budget", "trials", "seed", "field", "jsonl"],
        &[],
    )?;
    let opts = VerifyOptions {
        seed: parse_u64(&flags, "seed", 0)?,
        budget: parse_u64(&flags, "budget", 150)?,
        trials: parse_u64(&flags, "trials", 50)? as usize,
        threads: report::threads_from_env(),
        mutate_betti_formula: false,
    };

    if sub == "kw-betti" {
        // per-instance records rather than one aggregate report
        let field = match flags.options.get("field") {
            Some(f) => parse_field(f)?,
            None => Field::Rationals,
        };
        let records = report::kw_betti_records(opts.budget, field, opts.threads)?;
        let mismatches = records.iter().filter(|r| !r.matches).count();
        if let Some(path) = flags.options.get("jsonl") {
            let mut out = String::new();
            for r in &records {
                out.push_str(&serde_json::to_string(r).expect("record serializes"));
                out.push('\n');
            }
            write_output(path, &out)?;
        }
        println!(
            "kw-betti: {} instances, {} mismatches (budget {})",
            records.len(),
            mismatches,
            opts.budget
        );
        for r in records.iter().filter(|r| !r.matches) {
            println!(
                "  mismatch: p={} q={} x={:?} y={:?}: betti {:?}, closed form {:?}",
                r.p, r.q, r.x, r.y, r.betti, r.expected
            );
        }
        return Ok(if mismatches == 0 { 0 } else { 1 });
    }

    let reports: Vec<RunReport> = match sub.as_str() {
        "morales" => vec![report::check_morales(&opts)],
        "apery" => vec![report::check_apery_formula(&opts)],
        "poset-roundtrip" => vec![report::check_poset_roundtrip(&opts)],
        "all" => report::verify_all(&opts),
        other => return Err(Error::input(format!("unknown verify subcommand {other}"))),
    };
    for r in &reports {
        println!(
            "{}: {} ({} ms)",
            r.command,
            match r.status {
                report::Status::Pass => "pass",
                report::Status::Fail => "FAIL",
                report::Status::Error => "ERROR",
            },
            r.timing_ms
        );
    }
    if let Some(path) = flags.options.get("jsonl") {
        write_output(path, &to_jsonl(&reports))?;
    }
    Ok(if reports.iter().all(|r| r.passed()) {
        0
    } else {
        1
    })
}
