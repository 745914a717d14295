//! `groth` — compute and verify double Grothendieck polynomials of the
//! classical types.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 invalid input, 3 rank guard
//! exceeded, 4 cross-check mismatch.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use groth::adjoint;
use groth::combinat;
use groth::error::Error;
use groth::genfun::{self, GTable};
use groth::localization::{self, PhiMatrix};
use groth::poly::{Family, Poly, TruncSeries, VarId};
use groth::verify;
use groth::weyl::{enumerate_by_length, GroupElt, SimpleRef, WeylLetter, WeylType};

#[derive(Parser)]
#[command(name = "groth", version, about = "double Grothendieck polynomials of types A/B/C/D")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute one named polynomial.
    Compute(ComputeArgs),
    /// Littlewood–Richardson expansion of a product of two classes.
    Lr(LrArgs),
    /// List the extended-EYD patterns of an element.
    Eyd(EydArgs),
    /// List Hecke words and their compatible sequences.
    Words(WordsArgs),
    /// Adjoint (boundary-class) polynomial.
    Adjoint(AdjointArgs),
    /// Localize a class at group elements.
    Localize(LocalizeArgs),
    /// Run a named verification suite (or `all`).
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct ElementArgs {
    /// Group type letter: A, B, C or D.
    #[arg(long = "type")]
    typ: String,
    /// Rank (window size; for type A this is n of S_n).
    #[arg(long)]
    rank: u32,
    /// Element as a reduced word, e.g. `2,1,0` or `1,1h` (1h is s_1̂).
    #[arg(long)]
    word: Option<String>,
    /// Element in window notation, e.g. `1,-2,3`.
    #[arg(long)]
    window: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Genfun,
    Eyd,
    Compat,
    Second,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    /// Double Grothendieck polynomial G^X_w(a,b;x) (type A: G^A_w(a,b)).
    Groth,
    /// K-Stanley symmetric function F^X_w(x) (types B/C/D).
    Stanley,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    elt: ElementArgs,
    #[arg(long, value_enum, default_value = "groth")]
    family: FamilyKind,
    #[arg(long, value_enum, default_value = "genfun")]
    method: Method,
    /// Truncation degree for --method second.
    #[arg(long, default_value = "4")]
    trunc: u32,
    /// Specializations like `beta=-1`, `a=0`, `b=0`, `x1=2` (repeatable).
    #[arg(long = "set")]
    sets: Vec<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Recompute by a second method and require exact equality.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct LrArgs {
    /// Group type letter: B, C or D (or A).
    #[arg(long = "type")]
    typ: String,
    #[arg(long)]
    rank: u32,
    /// First factor, as a reduced word.
    #[arg(long)]
    u: Option<String>,
    #[arg(long = "u-window")]
    u_window: Option<String>,
    /// Second factor, as a reduced word.
    #[arg(long)]
    v: Option<String>,
    #[arg(long = "v-window")]
    v_window: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct EydArgs {
    #[command(flatten)]
    elt: ElementArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write an SVG rendering of the patterns to this file.
    #[arg(long)]
    svg: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct WordsArgs {
    #[command(flatten)]
    elt: ElementArgs,
    /// Maximum Hecke word length (default: the h-factor count of the
    /// rank-n Stanley product).
    #[arg(long)]
    cap: Option<u32>,
}

#[derive(Args)]
struct AdjointArgs {
    #[command(flatten)]
    elt: ElementArgs,
    /// Upper end v of the relative adjoint H_{w,v}; default is the longest
    /// element (the plain adjoint polynomial).
    #[arg(long = "relative-to")]
    relative_to: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct LocalizeArgs {
    #[command(flatten)]
    elt: ElementArgs,
    /// Localize only at this window (default: the whole group).
    #[arg(long = "at")]
    at: Option<String>,
    /// Also evaluate the Prop. 11 word sum and require exact equality.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name (see `groth verify list`), or `all`.
    suite: String,
    /// Restrict a targeted suite (recurrence, gkm, vanishing, words) to one
    /// group type.
    #[arg(long = "type")]
    typ: Option<String>,
    #[arg(long)]
    rank: Option<u32>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::TooLarge(_) => 3,
                _ => 2,
            })
        }
    }
}

type R<T> = Result<T, Error>;

fn parse_type(letter: &str, rank: u32) -> R<WeylType> {
    let letter = WeylLetter::parse(letter)?;
    if rank == 0 || (letter == WeylLetter::D && rank < 2) {
        return Err(Error::Parse(format!("bad rank {rank} for type {letter}")));
    }
    Ok(WeylType::new(letter, rank))
}

fn parse_element(typ: WeylType, word: &Option<String>, window: &Option<String>) -> R<GroupElt> {
    match (word, window) {
        (Some(w), None) => {
            if w.trim() == "e" || w.trim().is_empty() {
                return Ok(GroupElt::identity(typ));
            }
            let gens = w
                .split(',')
                .map(|t| SimpleRef::parse(t.trim()))
                .collect::<R<Vec<_>>>()?;
            GroupElt::from_word(typ, &gens)
        }
        (None, Some(win)) => {
            let entries = win
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i32>()
                        .map_err(|_| Error::Parse(format!("bad window entry `{t}`")))
                })
                .collect::<R<Vec<_>>>()?;
            GroupElt::new(typ, entries)
        }
        _ => Err(Error::Parse("give exactly one of --word or --window".into())),
    }
}

fn apply_sets(p: &Poly, sets: &[String]) -> R<Poly> {
    let mut out = p.clone();
    for s in sets {
        let (key, val) = s
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad --set `{s}` (expected key=int)")))?;
        let val: i64 = val
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad --set value in `{s}`")))?;
        out = match key.trim() {
            "beta" | "β" => out.subst_beta_int(val),
            "a" => out.subst_family_int(Family::A, val),
            "b" => out.subst_family_int(Family::B, val),
            "x" => out.subst_family_int(Family::X, val),
            var => out.subst_var_int(VarId::parse(var)?, val),
        };
    }
    Ok(out)
}

fn groth_table(typ: WeylType) -> R<GTable> {
    if typ.letter == WeylLetter::A {
        GTable::a_double(typ.rank)
    } else {
        GTable::first_kind(typ)
    }
}

fn compute_groth(typ: WeylType, w: &GroupElt, method: Method, trunc: u32) -> R<Computed> {
    match method {
        Method::Genfun => Ok(Computed::Poly(groth_table(typ)?.get(w))),
        Method::Eyd => Ok(Computed::Poly(combinat::groth_via_eyd(w)?)),
        Method::Compat => {
            if typ.letter == WeylLetter::A {
                // emit in the (a, b) alphabets to match the genfun route
                let p = combinat::groth_a_via_compat(w, typ.rank - 1)?;
                let mut map = BTreeMap::new();
                for i in 1..typ.rank {
                    map.insert(VarId::x(i), Poly::var(VarId::a(i)));
                }
                Ok(Computed::Poly(p.subst(&map)))
            } else {
                Ok(Computed::Poly(combinat::groth_bcd_via_compat(w)?))
            }
        }
        Method::Second => {
            if typ.letter == WeylLetter::A {
                return Err(Error::Parse("the second definition exists for B/C/D".into()));
            }
            Ok(Computed::Series(genfun::second_kind_coeff(typ, trunc, w)?))
        }
    }
}

fn compute_stanley(typ: WeylType, w: &GroupElt, method: Method) -> R<Computed> {
    if typ.letter == WeylLetter::A {
        return Err(Error::Parse("K-Stanley functions exist for types B/C/D".into()));
    }
    match method {
        Method::Genfun => Ok(Computed::Poly(GTable::stanley(typ)?.get(w))),
        Method::Compat => Ok(Computed::Poly(combinat::stanley_via_compat(
            w,
            combinat::stanley_word_cap(typ),
        )?)),
        _ => Err(Error::Parse("stanley methods are genfun and compat".into())),
    }
}

enum Computed {
    Poly(Poly),
    Series(TruncSeries),
}

fn cmd_compute(args: ComputeArgs) -> R<ExitCode> {
    let typ = parse_type(&args.elt.typ, args.elt.rank)?;
    let w = parse_element(typ, &args.elt.word, &args.elt.window)?;
    let computed = match args.family {
        FamilyKind::Groth => compute_groth(typ, &w, args.method, args.trunc)?,
        FamilyKind::Stanley => compute_stanley(typ, &w, args.method)?,
    };
    if args.verify {
        let other = match (args.family, args.method) {
            (FamilyKind::Groth, Method::Eyd) => Some(compute_groth(typ, &w, Method::Genfun, args.trunc)?),
            (FamilyKind::Groth, Method::Genfun) => Some(compute_groth(typ, &w, Method::Eyd, args.trunc)?),
            (FamilyKind::Groth, Method::Compat) => Some(compute_groth(typ, &w, Method::Genfun, args.trunc)?),
            (FamilyKind::Stanley, Method::Compat) => Some(compute_stanley(typ, &w, Method::Genfun)?),
            (FamilyKind::Stanley, Method::Genfun) => Some(compute_stanley(typ, &w, Method::Compat)?),
            _ => None,
        };
        match (&computed, other) {
            (Computed::Poly(p), Some(Computed::Poly(q))) => {
                if *p != q {
                    eprintln!("cross-check mismatch");
                    return Ok(ExitCode::from(4));
                }
            }
            _ => return Err(Error::Parse("--verify is not available for this method".into())),
        }
    }
    match computed {
        Computed::Poly(p) => {
            let p = apply_sets(&p, &args.sets)?;
            match args.format {
                Format::Text => println!("{p}"),
                Format::Json => println!("{}", serde_json::to_string(&p.to_json()).unwrap()),
            }
        }
        Computed::Series(s) => {
            if !args.sets.is_empty() {
                return Err(Error::Parse("--set applies to polynomial methods".into()));
            }
            match args.format {
                Format::Text => println!("{s}"),
                Format::Json => {
                    let rows: Vec<serde_json::Value> = s
                        .terms()
                        .map(|(m, c)| {
                            serde_json::json!({
                                "coef": c.to_string(),
                                "beta": m.beta,
                                "vars": m.vars().iter().map(|&(v, e)| (v.to_string(), e)).collect::<BTreeMap<_,_>>(),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string(&rows).unwrap());
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_lr(args: LrArgs) -> R<ExitCode> {
    let typ = parse_type(&args.typ, args.rank)?;
    let u = parse_element(typ, &args.u, &args.u_window)?;
    let v = parse_element(typ, &args.v, &args.v_window)?;
    let m = PhiMatrix::build(typ)?;
    let coeffs = localization::lr_expand(&m, &u, &v)?;
    match args.format {
        Format::Json => println!("{}", serde_json::to_string(&localization::lr_json(&u, &v, &coeffs)).unwrap()),
        Format::Text => {
            let mut rows: Vec<_> = coeffs.iter().collect();
            rows.sort_by_key(|(w, _)| (w.length(), w.window().to_vec()));
            for (w, c) in rows {
                println!("{w}\t{c}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_eyd(args: EydArgs) -> R<ExitCode> {
    let typ = parse_type(&args.elt.typ, args.elt.rank)?;
    if typ.letter == WeylLetter::D && typ.rank % 2 == 1 {
        return Err(Error::Parse(
            "odd type-D ranks have no grid of their own; compute at the next even rank (x_{2m}=0 rule)".into(),
        ));
    }
    let w = parse_element(typ, &args.elt.word, &args.elt.window)?;
    let d = combinat::delta(typ)?;
    let pats = combinat::rsub(&d, &w);
    match args.format {
        Format::Json => {
            let rows: Vec<_> = pats.iter().map(|p| combinat::pattern_json(&d, p)).collect();
            println!("{}", serde_json::to_string(&rows).unwrap());
        }
        Format::Text => {
            for p in &pats {
                println!(
                    "boxes {:?} circles {:?}: {}",
                    p.boxes,
                    p.circles,
                    combinat::pattern_weight(&d, p)
                );
            }
        }
    }
    if let Some(path) = args.svg {
        std::fs::write(&path, combinat::patterns_svg(&d, &pats))
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_words(args: WordsArgs) -> R<ExitCode> {
    let typ = parse_type(&args.elt.typ, args.elt.rank)?;
    let w = parse_element(typ, &args.elt.word, &args.elt.window)?;
    let cap = args.cap.unwrap_or_else(|| combinat::stanley_word_cap(typ));
    let words = combinat::hecke_words(&w, cap);
    let rows: Vec<serde_json::Value> = words
        .iter()
        .map(|hw| {
            let compat = combinat::compatible_seqs(hw, typ, typ.rank);
            serde_json::json!({
                "word": hw.letters.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                "compatible": compat,
            })
        })
        .collect();
    println!("{}", serde_json::to_string(&rows).unwrap());
    Ok(ExitCode::SUCCESS)
}

fn cmd_adjoint(args: AdjointArgs) -> R<ExitCode> {
    let typ = parse_type(&args.elt.typ, args.elt.rank)?;
    let w = parse_element(typ, &args.elt.word, &args.elt.window)?;
    let table = groth_table(typ)?;
    let h = match &args.relative_to {
        None => adjoint::adjoint(&table, &w)?,
        Some(win) => {
            let v = parse_element(typ, &None, &Some(win.clone()))?;
            adjoint::adjoint_relative(&table, &w, &v)?
        }
    };
    match args.format {
        Format::Text => println!("{h}"),
        Format::Json => println!("{}", serde_json::to_string(&h.to_json()).unwrap()),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_localize(args: LocalizeArgs) -> R<ExitCode> {
    let typ = parse_type(&args.elt.typ, args.elt.rank)?;
    let w = parse_element(typ, &args.elt.word, &args.elt.window)?;
    let table = groth_table(typ)?;
    let g = table.get(&w);
    let points: Vec<GroupElt> = match &args.at {
        Some(win) => vec![parse_element(typ, &None, &Some(win.clone()))?],
        None => enumerate_by_length(typ)?,
    };
    let mut rows = Vec::new();
    for v in &points {
        let val = localization::phi(&g, v)?;
        if args.verify {
            let ws = localization::localize_words(typ, &w, v)?;
            if ws != val {
                eprintln!("cross-check mismatch at {v}");
                return Ok(ExitCode::from(4));
            }
        }
        rows.push(serde_json::json!({ "v": v.window(), "value": val.to_json() }));
    }
    println!("{}", serde_json::to_string(&rows).unwrap());
    Ok(ExitCode::SUCCESS)
}

/// Targeted localization checks for one (type, rank).
fn targeted_suite(name: &str, typ: WeylType) -> R<Option<Vec<verify::Check>>> {
    let which = match name {
        "recurrence" | "gkm" | "vanishing" | "words" => name,
        _ => return Ok(None),
    };
    let m = PhiMatrix::build(typ)?;
    let elts = enumerate_by_length(typ)?;
    let mut checks = Vec::new();
    for w in &elts {
        let ok = match which {
            "recurrence" => localization::recurrence_check(&m, w)?,
            "gkm" => localization::gkm_check(m.class(w))?,
            "vanishing" => elts
                .iter()
                .all(|v| w.bruhat_leq(v) || m.value(w, v).is_zero()),
            "words" => {
                let mut ok = true;
                for v in &elts {
                    ok &= localization::localize_words(typ, w, v)? == m.value(w, v);
                }
                ok
            }
            _ => unreachable!(),
        };
        checks.push(verify::Check::new(format!("{which} at {w}"), ok, ""));
    }
    Ok(Some(checks))
}

fn cmd_verify(args: VerifyArgs) -> R<ExitCode> {
    let names: Vec<&str> = verify::suites().iter().map(|(n, _)| *n).collect();
    if args.suite == "list" {
        for n in names {
            println!("{n}");
        }
        println!("recurrence|gkm|vanishing|words (with --type/--rank)");
        return Ok(ExitCode::SUCCESS);
    }
    if let (Some(t), Some(r)) = (&args.typ, args.rank) {
        let typ = parse_type(t, r)?;
        if let Some(checks) = targeted_suite(&args.suite, typ)? {
            let failed = checks.iter().filter(|c| !c.passed).count();
            for c in &checks {
                println!(
                    "[{}] {}: {}",
                    args.suite,
                    if c.passed { "pass" } else { "FAIL" },
                    c.name
                );
            }
            if failed > 0 {
                println!("{failed} check(s) failed");
                return Ok(ExitCode::from(1));
            }
            return Ok(ExitCode::SUCCESS);
        }
        return Err(Error::Parse(format!(
            "suite `{}` does not take --type/--rank",
            args.suite
        )));
    }
    let to_run: Vec<&str> = if args.suite == "all" {
        names
    } else if names.contains(&args.suite.as_str()) {
        vec![Box::leak(args.suite.clone().into_boxed_str())]
    } else {
        return Err(Error::Parse(format!(
            "unknown suite `{}` (try `groth verify list`)",
            args.suite
        )));
    };
    let mut failed = 0usize;
    for name in to_run {
        let checks = verify::run_suite(name).expect("known suite")?;
        for c in &checks {
            let tag = if c.passed {
                "pass"
            } else if c.report_only {
                "report"
            } else {
                failed += 1;
                "FAIL"
            };
            if c.detail.is_empty() {
                println!("[{name}] {tag}: {}", c.name);
            } else {
                println!("[{name}] {tag}: {} ({})", c.name, c.detail);
            }
        }
    }
    if failed > 0 {
        println!("{failed} check(s) failed");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> R<ExitCode> {
    match cli.cmd {
        Cmd::Compute(args) => cmd_compute(args),
        Cmd::Lr(args) => cmd_lr(args),
        Cmd::Eyd(args) => cmd_eyd(args),
        Cmd::Words(args) => cmd_words(args),
        Cmd::Adjoint(args) => cmd_adjoint(args),
        Cmd::Localize(args) => cmd_localize(args),
        Cmd::Verify(args) => cmd_verify(args),
    }
}
