//! `lieclass` command-line frontend.
//!
//! Every verb builds a single JSON payload. `--format json` prints it
//! verbatim; `--format table` renders the same payload as text.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lieclass::classifier::fixtures::{fixture_ids, reproduce_tables};
use lieclass::classifier::{
    classify_case1_all, classify_case2_all, classify_spheres_all, coincidences, mark_coincidences,
    passing, rational, semisimple, CandidatePair,
};
use lieclass::dynkin_index::{
    dynkin_index_big, pi3_cokernel, smith_invariants, su2_index, IntMatrix,
};
use lieclass::error::LieError;
use lieclass::geometry::{atlas, candidate_point_spaces, report, MultiplicityPair};
use lieclass::lie_data::{
    canonicalize, center, exponents, fundamental_dim, galois_involution, group_dimension,
    Canonical, Family, SimpleType,
};
use lieclass::rational_topology::{
    homotopy_ranks_free, homotopy_ranks_truncated, FreeAlgebraSpec, TruncatedAlgebraSpec,
};
use lieclass::rep_theory::{adjoint_weight, enumerate_irreps, DominantWeight, FieldType};
use num_bigint::BigUint;

const DEFAULT_RANK_CAP: u32 = 12;

#[derive(Parser)]
#[command(
    name = "lieclass",
    version,
    about = "Exact Lie theory computations and homogeneous space classification"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    #[value(alias = "text")]
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    R,
    C,
    H,
}

#[derive(Clone, Copy, ValueEnum)]
enum CaseArg {
    Auto,
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    Sphere,
    Semisimple,
}

#[derive(Subcommand)]
enum Command {
    /// Degrees of the primitive generators of H*(G; Q).
    Exponents { family: String, rank: u32 },
    /// Irreducible representations up to a complex dimension bound.
    Irreps {
        family: String,
        rank: u32,
        #[arg(long)]
        max_dim: u64,
        /// Keep only representations of this field type.
        #[arg(long, value_enum)]
        field: Option<FieldArg>,
    },
    /// Dynkin index: `index su2 <k>` or `index <type> <weight>`.
    Index { group: String, arg: String },
    /// Invariant factors and cokernel of an integer matrix.
    Pi3 {
        /// Rows separated by ';', entries by ','.
        #[arg(long)]
        matrix: String,
    },
    /// Rational homotopy ranks of a free or truncated cohomology algebra.
    Homotopy {
        /// Comma-separated generator degrees.
        #[arg(
            long,
            conflicts_with = "truncated",
            required_unless_present = "truncated"
        )]
        free: Option<String>,
        /// `a^m;d1,d2,...`
        #[arg(long)]
        truncated: Option<String>,
    },
    /// Homogeneous spaces with the rational cohomology of a product of spheres.
    Classify {
        #[arg(long, default_value = "SxS")]
        pattern: String,
        #[arg(long)]
        n1: Option<u32>,
        #[arg(long)]
        n2: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_RANK_CAP)]
        max_rank: u32,
        #[arg(long, value_enum, default_value_t = CaseArg::Auto)]
        case: CaseArg,
        /// Skip the integral filter.
        #[arg(long)]
        rational_only: bool,
    },
    /// Homogeneous rational spheres.
    Spheres {
        #[arg(long, default_value_t = DEFAULT_RANK_CAP)]
        max_rank: u32,
    },
    /// Admissibility checks for multiplicities of a quadrangle.
    Quadrangle {
        m1: u64,
        m2: u64,
        /// Also list homogeneous candidates for the point space.
        #[arg(long)]
        candidates: bool,
        #[arg(long, default_value_t = DEFAULT_RANK_CAP)]
        max_rank: u32,
    },
    /// Points (n1, n2 - n1) realized by homogeneous spaces.
    Atlas {
        #[arg(long, default_value_t = 25)]
        max: u64,
    },
    /// Static type tables as JSON.
    DumpTables {
        #[arg(long, default_value_t = DEFAULT_RANK_CAP)]
        max_rank: u32,
    },
    /// Recompute a fixture table and print the diff; `all` checks every fixture.
    VerifyFixtures { id: String },
}

/// Failure of a verb, mapped to an exit code.
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<LieError> for Failure {
    fn from(e: LieError) -> Self {
        match e {
            LieError::Parse { .. } | LieError::UnknownFamily(_) => Failure::Usage(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

/// Payload of a successful verb and whether it reports a problem.
struct Output {
    payload: Value,
    text: String,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli.command) {
        Ok(out) => {
            let body = match cli.format {
                Format::Json => to_json_text(&out.payload) + "\n",
                Format::Table => out.text,
            };
            // A closed pipe (e.g. `| head`) is not an error of the command.
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("rejected: {msg}");
            ExitCode::from(1)
        }
    }
}

fn to_json_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

fn run(cmd: &Command) -> Result<Output, Failure> {
    match cmd {
        Command::Exponents { family, rank } => cmd_exponents(family, *rank),
        Command::Irreps {
            family,
            rank,
            max_dim,
            field,
        } => cmd_irreps(family, *rank, *max_dim, *field),
        Command::Index { group, arg } => cmd_index(group, arg),
        Command::Pi3 { matrix } => cmd_pi3(matrix),
        Command::Homotopy { free, truncated } => {
            cmd_homotopy(free.as_deref(), truncated.as_deref())
        }
        Command::Classify {
            pattern,
            n1,
            n2,
            max_rank,
            case,
            rational_only,
        } => cmd_classify(pattern, *n1, *n2, *max_rank, *case, *rational_only),
        Command::Spheres { max_rank } => {
            cmd_classify("SxS", None, None, *max_rank, CaseArg::Sphere, false)
        }
        Command::Quadrangle {
            m1,
            m2,
            candidates,
            max_rank,
        } => cmd_quadrangle(*m1, *m2, *candidates, *max_rank),
        Command::Atlas { max } => cmd_atlas(*max),
        Command::DumpTables { max_rank } => cmd_dump_tables(*max_rank),
        Command::VerifyFixtures { id } => cmd_verify(id),
    }
}

fn done(payload: Value, text: String) -> Result<Output, Failure> {
    Ok(Output {
        payload,
        text,
        ok: true,
    })
}

/// Resolves `<family> <rank>`; `E 8`, `F 4`, `G 2` name exceptional types.
fn resolve_type(family: &str, rank: u32) -> Result<Canonical, Failure> {
    let f = family.trim();
    let fam: Family = match f.to_ascii_uppercase().as_str() {
        "E" | "F" | "G" => format!("{f}{rank}")
            .parse()
            .map_err(|_| LieError::InvalidType {
                family: f.to_string(),
                rank,
                reason: "no exceptional type of this rank".into(),
            })?,
        _ => f.parse()?,
    };
    Ok(canonicalize(fam, rank)?)
}

/// Exact JSON number for a big integer.
fn big_json(n: &BigUint) -> Value {
    serde_json::from_str(&n.to_string()).expect("integer literal")
}

fn alias_json(c: &Canonical) -> Value {
    match &c.alias {
        Some(a) => {
            json!({ "from": a.from, "to": a.to, "isomorphism": a.isomorphism, "label_map": a.label_map })
        }
        None => Value::Null,
    }
}

fn alias_text(c: &Canonical) -> String {
    match &c.alias {
        Some(a) => format!(
            "# {} = {} ({}), label map {}\n",
            a.from,
            a.to,
            a.isomorphism,
            join(&a.label_map, " ")
        ),
        None => String::new(),
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn cmd_exponents(family: &str, rank: u32) -> Result<Output, Failure> {
    let c = resolve_type(family, rank)?;
    let e = exponents(c.ty);
    let payload = json!({
        "alias": alias_json(&c),
        "exponents": e.degrees(),
    });
    done(
        payload,
        format!("{}{}\n", alias_text(&c), join(e.degrees(), " ")),
    )
}

fn cmd_irreps(
    family: &str,
    rank: u32,
    max_dim: u64,
    field: Option<FieldArg>,
) -> Result<Output, Failure> {
    let c = resolve_type(family, rank)?;
    let want = field.map(|f| match f {
        FieldArg::R => FieldType::R,
        FieldArg::C => FieldType::C,
        FieldArg::H => FieldType::H,
    });
    let irreps: Vec<_> = enumerate_irreps(c.ty, max_dim)
        .into_iter()
        .filter(|d| want.is_none_or(|w| d.field_type == w))
        .collect();
    let payload = json!({
        "type": c.ty,
        "alias": alias_json(&c),
        "max_dim": max_dim,
        "irreps": irreps,
    });
    let mut text = alias_text(&c);
    text.push_str(&format!("# {} irreps with dim_c <= {max_dim}\n", c.ty));
    text.push_str("weight\tlabel\tdim_c\tfield\tdim_r\tdim_h\tkernel\n");
    for d in &irreps {
        text.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            join(&d.weight.coeffs, ","),
            d.label,
            d.dim_c,
            d.field_type,
            d.dim_r,
            d.dim_h,
            d.kernel_order
        ));
    }
    done(payload, text)
}

fn cmd_index(group: &str, arg: &str) -> Result<Output, Failure> {
    if group.eq_ignore_ascii_case("su2") {
        let k: u64 = arg.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "parse error at position 0: expected a non-negative integer, found '{arg}'"
            ))
        })?;
        let j = su2_index(k);
        let payload = json!({ "group": "su2", "highest_weight": k, "index": j });
        return done(payload, format!("su2 {k}: {j}\n"));
    }
    let ty: SimpleType = group.parse()?;
    let c = canonicalize(ty.family, ty.rank)?;
    let raw = DominantWeight::parse(ty, arg)?;
    let w = match &c.alias {
        Some(a) => DominantWeight::new(c.ty, a.transcribe(&raw.coeffs))?,
        None => raw,
    };
    let j = dynkin_index_big(&w);
    let payload = json!({
        "group": c.ty,
        "alias": alias_json(&c),
        "weight": w,
        "label": w.to_string(),
        "index": big_json(&j),
    });
    done(
        payload,
        format!(
            "{}{} {} ({}): {j}\n",
            alias_text(&c),
            c.ty,
            w,
            join(&w.coeffs, ",")
        ),
    )
}

fn cmd_pi3(matrix: &str) -> Result<Output, Failure> {
    let m = IntMatrix::parse(matrix)?;
    let factors = smith_invariants(&m);
    let group = pi3_cokernel(&m);
    let factor_strings: Vec<String> = factors.iter().map(|d| d.to_string()).collect();
    let payload = json!({
        "matrix": m.to_string(),
        "invariant_factors": factor_strings,
        "group": group.to_string(),
    });
    let text = format!(
        "matrix: {m}\ninvariant factors: {}\n{group}\n",
        factor_strings.join(" ")
    );
    done(payload, text)
}

fn cmd_homotopy(free: Option<&str>, truncated: Option<&str>) -> Result<Output, Failure> {
    let (spec, ranks) = match (free, truncated) {
        (Some(f), _) => {
            let s = FreeAlgebraSpec::parse(f)?;
            let r = homotopy_ranks_free(&s);
            (json!({ "free": s }), r)
        }
        (None, Some(t)) => {
            let s = TruncatedAlgebraSpec::parse(t)?;
            let r = homotopy_ranks_truncated(&s);
            (json!({ "truncated": s }), r)
        }
        (None, None) => {
            return Err(Failure::Usage(
                "one of --free or --truncated is required".into(),
            ))
        }
    };
    let by_degree: Vec<Value> = ranks
        .0
        .iter()
        .map(|(d, r)| json!({ "degree": d, "rank": r }))
        .collect();
    let payload = json!({ "spec": spec, "ranks": by_degree, "total": ranks.total() });
    let text = render_generic(&payload);
    done(payload, text)
}

fn filter_degrees(
    rows: Vec<CandidatePair>,
    n1: Option<u32>,
    n2: Option<u32>,
) -> Vec<CandidatePair> {
    rows.into_iter()
        .filter(|r| {
            let mut res = r.residual.clone();
            res.sort_unstable();
            let hit = |n: Option<u32>| n.is_none_or(|n| res.contains(&n));
            hit(n1) && hit(n2)
        })
        .collect()
}

fn cmd_classify(
    pattern: &str,
    n1: Option<u32>,
    n2: Option<u32>,
    max_rank: u32,
    case: CaseArg,
    rational_only: bool,
) -> Result<Output, Failure> {
    let p: String = pattern
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .to_ascii_uppercase();
    if !matches!(p.as_str(), "SXS" | "S×S") {
        return Err(Failure::Usage(format!(
            "unsupported pattern '{pattern}'; expected SxS"
        )));
    }
    if let (Some(a), Some(b)) = (n1, n2) {
        if a > b {
            return Err(Failure::Usage(format!("--n1 {a} exceeds --n2 {b}")));
        }
    }
    let filter = |rows: Vec<CandidatePair>| {
        if rational_only {
            rational(rows)
        } else {
            passing(rows)
        }
    };
    let case = match case {
        CaseArg::Auto => match n1 {
            Some(n) if n % 2 == 1 => CaseArg::One,
            Some(_) => CaseArg::Two,
            None => CaseArg::Auto,
        },
        c => c,
    };
    let spheres = filter(classify_spheres_all(max_rank));
    let (label, mut rows) = match case {
        CaseArg::One => ("1", filter(classify_case1_all(max_rank))),
        CaseArg::Two => ("2", filter(classify_case2_all(max_rank))),
        CaseArg::Auto => {
            let mut r = filter(classify_case1_all(max_rank));
            r.extend(filter(classify_case2_all(max_rank)));
            ("auto", r)
        }
        CaseArg::Sphere => ("sphere", spheres.clone()),
        CaseArg::Semisimple => {
            let all = semisimple::classify_semisimple_all(max_rank);
            ("semisimple", filter(all))
        }
    };
    if matches!(case, CaseArg::One | CaseArg::Two | CaseArg::Auto) {
        mark_coincidences(&mut rows, &spheres);
    }
    let rows = filter_degrees(rows, n1, n2);
    let payload = json!({
        "pattern": "SxS",
        "case": label,
        "max_rank": max_rank,
        "n1": n1,
        "n2": n2,
        "integral_filter": !rational_only,
        "coincidences": coincidences(&rows),
        "rows": rows.iter().map(CandidatePair::to_json).collect::<Vec<_>>(),
    });
    let text = render_rows(&payload, &rows);
    done(payload, text)
}

fn render_rows(payload: &Value, rows: &[CandidatePair]) -> String {
    let mut text = format!(
        "# pattern {} case {} max_rank {} n1 {} n2 {} integral_filter {}: {} rows\n",
        payload["pattern"].as_str().unwrap_or_default(),
        payload["case"].as_str().unwrap_or_default(),
        payload["max_rank"],
        payload["n1"],
        payload["n2"],
        payload["integral_filter"],
        rows.len()
    );
    for (row, json) in rows
        .iter()
        .zip(payload["rows"].as_array().into_iter().flatten())
    {
        text.push_str(&format!(
            "{}\t[{} / {}]\tresidual {}\tcase {}\t{}\tindex {}\ttorsion {}\tpasses {}\n",
            row.quotient_name(),
            json_strings(&json["g"]).join("+"),
            or_dash(json_strings(&json["h"]).join("+"), "1"),
            join(&row.residual, ","),
            json["case"].as_str().unwrap_or_default(),
            json["feasible"].as_str().unwrap_or_default(),
            or_dash(join(&row.index, ","), "-"),
            json["torsion"].as_str().unwrap_or("none"),
            row.passes
        ));
        for w in json["witnesses"].as_array().into_iter().flatten() {
            text.push_str(&format!(
                "  witness: {} ({}) matrix {} pi3 {} kernel_order {} exclusion {} passes {}\n",
                w["module"].as_str().unwrap_or_default(),
                w["source"].as_str().unwrap_or_default(),
                or_dash(w["matrix"].as_str().unwrap_or_default().to_string(), "-"),
                w["pi3"].as_str().unwrap_or_default(),
                w["kernel_order"],
                w["exclusion"].as_str().unwrap_or("none"),
                w["passes"]
            ));
        }
        for n in json_strings(&json["curated_notes"]) {
            text.push_str(&format!("  note: {n}\n"));
        }
    }
    for c in json_strings(&payload["coincidences"]) {
        text.push_str(&format!("coincidence: {c}\n"));
    }
    text
}

fn or_dash(s: String, empty: &str) -> String {
    if s.is_empty() {
        empty.to_string()
    } else {
        s
    }
}

fn json_strings(v: &Value) -> Vec<String> {
    v.as_array()
        .into_iter()
        .flatten()
        .map(|x| {
            x.as_str()
                .map(str::to_string)
                .unwrap_or_else(|| x.to_string())
        })
        .collect()
}

fn cmd_quadrangle(m1: u64, m2: u64, candidates: bool, max_rank: u32) -> Result<Output, Failure> {
    let p = MultiplicityPair::new(m1, m2)?;
    let mut payload = serde_json::to_value(report(p)).expect("report serializes");
    if candidates {
        let q = candidate_point_spaces(p, max_rank)?;
        payload["point_space"] = q.to_json();
    }
    let text = render_generic(&payload);
    done(payload, text)
}

fn cmd_atlas(max: u64) -> Result<Output, Failure> {
    let points = atlas(max);
    let payload = json!({ "max": max, "points": points });
    let mut text = format!("# n1 gap mark double spaces (n1, gap <= {max})\n");
    for p in &points {
        text.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            p.n1,
            p.gap,
            serde_json::to_value(p.mark)
                .expect("mark serializes")
                .as_str()
                .unwrap_or_default(),
            if p.double { "double" } else { "single" },
            p.spaces.join(", ")
        ));
    }
    done(payload, text)
}

fn cmd_dump_tables(max_rank: u32) -> Result<Output, Failure> {
    let mut types = Vec::new();
    for t in SimpleType::all_canonical(max_rank) {
        let z = center(t);
        let fundamentals = (1..=t.rank_usize())
            .map(|i| fundamental_dim(t, i))
            .collect::<Result<Vec<u64>, LieError>>()?;
        types.push(json!({
            "type": t,
            "rank": t.rank,
            "exponents": exponents(t).degrees(),
            "dimension": group_dimension(t),
            "center": {
                "order": z.order(),
                "generators": z.generators().iter().map(|(g, k)| json!({ "name": g, "order": k })).collect::<Vec<_>>(),
            },
            "galois": galois_involution(t),
            "fundamental_dims": fundamentals,
            "adjoint": adjoint_weight(t),
        }));
    }
    let payload = json!({ "max_rank": max_rank, "types": types });
    let text = render_generic(&payload);
    done(payload, text)
}

fn cmd_verify(id: &str) -> Result<Output, Failure> {
    let ids: Vec<String> = if id == "all" {
        fixture_ids().into_iter().map(str::to_string).collect()
    } else {
        vec![id.to_string()]
    };
    let mut diffs = Vec::new();
    let mut text = String::new();
    let mut ok = true;
    for i in &ids {
        let d = reproduce_tables(i)?;
        ok &= d.is_empty();
        text.push_str(&format!(
            "{}: {} rows compared, {} missing, {} extra, {} changed\n",
            d.id,
            d.compared,
            d.missing.len(),
            d.extra.len(),
            d.changed.len()
        ));
        for m in &d.missing {
            text.push_str(&format!(
                "- {}\n",
                serde_json::to_string(m).expect("value serializes")
            ));
        }
        for e in &d.extra {
            text.push_str(&format!(
                "+ {}\n",
                serde_json::to_string(e).expect("value serializes")
            ));
        }
        for c in &d.changed {
            text.push_str(&format!(
                "~ {} {}: expected {} actual {}\n",
                c.key, c.field, c.expected, c.actual
            ));
        }
        diffs.push(serde_json::to_value(&d).expect("diff serializes"));
    }
    let payload = json!({ "diffs": diffs, "clean": ok });
    Ok(Output { payload, text, ok })
}

/// Indented `key: value` rendering of a JSON value.
fn render_generic(v: &Value) -> String {
    let mut out = String::new();
    generic_into(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.is_empty() => Some("[]".into()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            Some(a.iter().filter_map(scalar).collect::<Vec<_>>().join(" "))
        }
        _ => None,
    }
}

fn generic_into(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        generic_into(x, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        generic_into(x, indent + 1, out);
                    }
                }
            }
        }
        other => {
            if let Some(s) = scalar(other) {
                out.push_str(&format!("{pad}{s}\n"));
            }
        }
    }
}
