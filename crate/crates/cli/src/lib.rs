//! Command implementations behind the `holotriple` binary.

pub mod args;
pub mod records;

use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use holotriple::composition::CompositionKind;
use holotriple::connections::{
    alpha_canonical, alpha_distinguished, alpha_family, alpha_levi_civita, Connection, ConnectionKind,
    NomizuMap,
};
use holotriple::enveloping::{build_enveloping, ReductiveSplit};
use holotriple::holonomy::{self, expected, holonomy_algebra, holonomy_identity_check, ricci, TableRow};
use holotriple::jordan::{CubicJordan, JordanKind};
use holotriple::sts::{
    build_exceptional_type_with, load_sts, save_sts, verify_axioms, CrossConvention, Family, SymplecticTripleSystem,
    VerifyMode, HEAVY_M_DIM,
};
use holotriple::{Error, Matrix, Scalar};

use args::{CaseArgs, Cli, Command, ConnectionArg, ConnectionArgs, CrossArg, FamilyArg};
use records::*;

/// Exit statuses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    MathFailure = 1,
    Usage = 2,
    RefusedHeavy = 3,
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Math(String),
    Heavy(String),
}

impl Failure {
    pub fn status(&self) -> Status {
        match self {
            Failure::Usage(_) => Status::Usage,
            Failure::Math(_) => Status::MathFailure,
            Failure::Heavy(_) => Status::RefusedHeavy,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Math(m) | Failure::Heavy(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_) | Error::Parse { .. } | Error::Io(_) | Error::DimensionMismatch { .. } => {
                Failure::Usage(e.to_string())
            }
            Error::Invariant(_) | Error::Jacobi(..) | Error::Validation(_) => Failure::Math(e.to_string()),
        }
    }
}

type Outcome = Result<Status, Failure>;

/// Runs a parsed command, writing the report to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let mut text = String::new();
    let status = match &cli.command {
        Command::Verify { case, save } => cmd_verify(case, save.as_deref(), &mut text)?,
        Command::Holonomy { case, connection } => cmd_holonomy(case, connection, &mut text)?,
        Command::Curvature { case, connection, i, j } => cmd_curvature(case, connection, *i, *j, &mut text)?,
        Command::Ricci { case, connection } => cmd_ricci(case, connection, &mut text)?,
        Command::Table { all_light: _, cases, allow_heavy, json } => {
            cmd_table(cases, *allow_heavy, *json, &mut text)?
        }
    };
    out.write_all(text.as_bytes()).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(status)
}

fn verdict(passed: bool) -> Status {
    if passed {
        Status::Pass
    } else {
        Status::MathFailure
    }
}

fn pass_fail(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

fn emit_json<T: serde::Serialize>(record: &T, text: &mut String) {
    text.push_str(&serde_json::to_string_pretty(record).expect("records serialize"));
    text.push('\n');
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), |x| x.to_string())
}

pub fn parse_jordan(s: &str) -> Result<JordanKind, Failure> {
    let s = s.trim();
    let inner = s.strip_prefix("H3(").and_then(|r| r.strip_suffix(')')).unwrap_or(s);
    let kind = match inner.to_ascii_lowercase().as_str() {
        "scalar" | "g2" => return Ok(JordanKind::Scalar),
        "unarion" | "f4" => CompositionKind::Unarion,
        "binarion" | "e6" => CompositionKind::Binarion,
        "quaternion-split" | "quaternion" | "e7" => CompositionKind::QuaternionSplit,
        "zorn" | "octonion" | "e8" => CompositionKind::Zorn,
        _ => return Err(Failure::Usage(format!("unknown Jordan algebra `{s}`"))),
    };
    Ok(JordanKind::Hermitian(kind))
}

/// Parses a table case: a family label such as `special(w=2)`, or `g2` … `e8`.
pub fn parse_case(s: &str) -> Result<Family, Failure> {
    if let Some(f) = Family::from_label(s) {
        return Ok(f);
    }
    if matches!(s, "g2" | "f4" | "e6" | "e7" | "e8") {
        return parse_jordan(s).map(Family::Exceptional);
    }
    Err(Failure::Usage(format!("unknown case `{s}`")))
}

fn require<T: Copy>(v: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--family {family} requires {flag}")))
}

fn heavy_guard(m_dim: usize, allow: bool, what: &str) -> Result<(), Failure> {
    if m_dim >= HEAVY_M_DIM && !allow {
        return Err(Failure::Heavy(format!(
            "{what} has dim m = {m_dim}; pass --allow-heavy to compute it"
        )));
    }
    Ok(())
}

/// The system a case names, and its family when recognized.
pub struct LoadedCase {
    pub sts: SymplecticTripleSystem,
    pub family: Option<Family>,
}

pub fn load_case(case: &CaseArgs) -> Result<LoadedCase, Failure> {
    let family = match case.family {
        FamilyArg::Symplectic => Family::Symplectic { n: require(case.n, "--n", "symplectic")? },
        FamilyArg::Orthogonal => Family::Orthogonal { w: require(case.w, "--w", "orthogonal")? },
        FamilyArg::Special => Family::Special { w: require(case.w, "--w", "special")? },
        FamilyArg::Exceptional => {
            let j = case.jordan.as_deref().ok_or_else(|| Failure::Usage("--family exceptional requires --J".into()))?;
            Family::Exceptional(parse_jordan(j)?)
        }
        FamilyArg::File => {
            let path = case.path.as_ref().ok_or_else(|| Failure::Usage("--family file requires --path".into()))?;
            let sts = load_sts(path)?;
            let m_dim = 2 * sts.dim() + 3;
            heavy_guard(m_dim, case.allow_heavy, &format!("`{}`", path.display()))?;
            let family = sts.family();
            return Ok(LoadedCase { sts, family });
        }
    };
    heavy_guard(family.m_dim(), case.allow_heavy, &family.to_string())?;
    let sts = match (family, case.cross) {
        (Family::Exceptional(j), CrossArg::Literal) => {
            let jordan = match j {
                JordanKind::Scalar => CubicJordan::scalar(),
                JordanKind::Hermitian(c) => CubicJordan::hermitian(c),
            };
            build_exceptional_type_with(&jordan, CrossConvention::Literal)?
        }
        _ => family.build()?,
    };
    let family = sts.family();
    Ok(LoadedCase { sts, family })
}

fn mode(case: &CaseArgs) -> VerifyMode {
    if case.audit {
        VerifyMode::Audit
    } else {
        VerifyMode::Fast
    }
}

fn axiom_lines(report: &holotriple::sts::AxiomReport, text: &mut String) {
    for f in &report.failures {
        let w: Vec<String> = f.witness.iter().map(|k| k.to_string()).collect();
        let _ = writeln!(text, "  {} fails at ({})", f.axiom, w.join(", "));
    }
}

/// Downstream commands only run on systems that satisfy the axioms.
fn split_for_case(case: &CaseArgs) -> Result<(LoadedCase, ReductiveSplit), Failure> {
    let loaded = load_case(case)?;
    let report = verify_axioms(&loaded.sts, mode(case));
    if !report.passed() {
        let mut msg = format!("`{}` is not a symplectic triple system:\n", loaded.sts.label());
        axiom_lines(&report, &mut msg);
        return Err(Failure::Math(msg.trim_end().to_string()));
    }
    let split = ReductiveSplit::new(build_enveloping(&loaded.sts)?)?;
    Ok((loaded, split))
}

fn cmd_verify(case: &CaseArgs, save: Option<&Path>, text: &mut String) -> Outcome {
    let loaded = load_case(case)?;
    let t = &loaded.sts;
    if let Some(path) = save {
        save_sts(t, path)?;
    }
    let axioms = verify_axioms(t, mode(case));
    let simple = t.is_simple().unwrap_or(false);
    let jacobi = if simple && axioms.passed() {
        let g = build_enveloping(t)?;
        let rep = g.verify_jacobi(case.audit);
        JacobiRecord {
            checked: true,
            passed: rep.passed(),
            witnesses: rep.failures.iter().map(|&(i, j, k)| [i, j, k]).collect(),
        }
    } else {
        JacobiRecord { checked: false, passed: false, witnesses: vec![] }
    };
    let passed = axioms.passed() && simple && jacobi.passed;
    let rec = VerifyRecord { system: t.label().to_string(), dim: t.dim(), axioms, simple, jacobi, passed };
    if case.json {
        emit_json(&rec, text);
    } else {
        let _ = writeln!(text, "system   {} (dim {})", rec.system, rec.dim);
        let _ = writeln!(text, "axioms   {}", pass_fail(rec.axioms.passed()));
        axiom_lines(&rec.axioms, text);
        let _ = writeln!(text, "simple   {}", if rec.simple { "yes" } else { "no" });
        if rec.jacobi.checked {
            let _ = writeln!(text, "jacobi   {}", pass_fail(rec.jacobi.passed));
            for [i, j, k] in &rec.jacobi.witnesses {
                let _ = writeln!(text, "  fails on g(T) basis triple ({i}, {j}, {k})");
            }
        } else {
            let _ = writeln!(text, "jacobi   not checked");
        }
        let _ = writeln!(text, "result   {}", pass_fail(rec.passed));
    }
    Ok(verdict(rec.passed))
}

fn parse_scalar(s: &str, flag: &str) -> Result<Scalar, Failure> {
    s.trim().parse().map_err(|e| Failure::Usage(format!("{flag}: cannot parse `{s}`: {e}")))
}

pub fn parse_b_matrix(s: &str) -> Result<Matrix, Failure> {
    let rows: Vec<&str> = s.split(';').collect();
    if rows.len() != 3 {
        return Err(Failure::Usage("--b-matrix needs three rows separated by `;`".into()));
    }
    let mut m = Vec::with_capacity(3);
    for r in rows {
        let entries: Vec<&str> = r.split(',').collect();
        if entries.len() != 3 {
            return Err(Failure::Usage("--b-matrix rows need three entries separated by `,`".into()));
        }
        m.push(entries.iter().map(|e| parse_scalar(e, "--b-matrix")).collect::<Result<Vec<_>, _>>()?);
    }
    Ok(Matrix::from_rows(m))
}

fn make_alpha(split: &ReductiveSplit, c: &ConnectionArgs) -> Result<NomizuMap, Failure> {
    if c.connection != ConnectionArg::Family && (c.a.is_some() || c.b_matrix.is_some()) {
        return Err(Failure::Usage("--a and --b-matrix only apply to --connection family".into()));
    }
    Ok(match c.connection {
        ConnectionArg::LeviCivita => alpha_levi_civita(split),
        ConnectionArg::Distinguished => alpha_distinguished(split)?,
        ConnectionArg::Canonical => alpha_canonical(split)?,
        ConnectionArg::Family => {
            let a = c.a.as_deref().map_or(Ok(Scalar::zero()), |s| parse_scalar(s, "--a"))?;
            let b = c.b_matrix.as_deref().map_or(Ok(Matrix::zeros(3, 3)), parse_b_matrix)?;
            alpha_family(split, &a, &b)?
        }
    })
}

fn cmd_holonomy(case: &CaseArgs, c: &ConnectionArgs, text: &mut String) -> Outcome {
    let (loaded, split) = split_for_case(case)?;
    let conn = Connection::new(&split, make_alpha(&split, c)?)?;
    let hol = holonomy_algebra(&conn)?;
    let n = split.n();
    let inder = split.algebra().inder().dim();
    let (expected_dim, expected_center) = match conn.label() {
        ConnectionKind::LeviCivita => (Some(expected::hol_levi_civita(n)), Some(0)),
        ConnectionKind::Distinguished | ConnectionKind::Canonical => match loaded.family {
            Some(f) => (Some(expected::hol_torsion(f)), Some(expected::center_torsion(f))),
            None => (Some(3 + inder), None),
        },
        _ => (None, None),
    };
    let identity = match conn.label() {
        ConnectionKind::Distinguished | ConnectionKind::Canonical => Some(holonomy_identity_check(&conn, &hol)?),
        _ => None,
    };
    let passed = expected_dim.is_none_or(|d| d == hol.dim)
        && expected_center.is_none_or(|z| z == hol.center_dim)
        && identity.as_ref().is_none_or(|r| r.equal);
    let rec = HolonomyRecord {
        system: loaded.sts.label().to_string(),
        connection: conn.label().to_string(),
        m_dim: hol.m_dim,
        dim: hol.dim,
        center: hol.center_dim,
        contains_so: hol.contains_so,
        expected_dim,
        expected_center,
        identity,
        passed,
    };
    if case.json {
        emit_json(&rec, text);
    } else {
        let _ = writeln!(text, "system      {}", rec.system);
        let _ = writeln!(text, "connection  {}", rec.connection);
        let _ = writeln!(text, "dim m       {}", rec.m_dim);
        let _ = writeln!(text, "dim hol     {} (expected {})", rec.dim, opt(&rec.expected_dim));
        let _ = writeln!(text, "center      {} (expected {})", rec.center, opt(&rec.expected_center));
        let _ = writeln!(text, "so(m,g)     {}", if rec.contains_so { "yes" } else { "no" });
        if let Some(r) = &rec.identity {
            let _ = writeln!(
                text,
                "closed form {} (dim {})",
                if r.equal { "equal" } else { "different" },
                r.expected_dim
            );
        }
        let _ = writeln!(text, "result      {}", pass_fail(rec.passed));
    }
    Ok(verdict(rec.passed))
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| (0..m.cols()).map(|c| m[(r, c)].to_string()).collect()).collect()
}

fn cmd_curvature(case: &CaseArgs, c: &ConnectionArgs, i: usize, j: usize, text: &mut String) -> Outcome {
    let (loaded, split) = split_for_case(case)?;
    let md = split.m_dim();
    if i >= md || j >= md {
        return Err(Failure::Usage(format!("basis index out of range: dim m = {md}")));
    }
    let conn = Connection::new(&split, make_alpha(&split, c)?)?;
    let r = conn.compute_curvature(i, j);
    let rec = CurvatureRecord {
        system: loaded.sts.label().to_string(),
        connection: conn.label().to_string(),
        i,
        j,
        matrix: matrix_strings(&r),
    };
    if case.json {
        emit_json(&rec, text);
    } else {
        let _ = writeln!(text, "R(e_{i}, e_{j}) for the {} connection on {}", rec.connection, rec.system);
        let width = rec.matrix.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &rec.matrix {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            let _ = writeln!(text, "{}", cells.join(" "));
        }
    }
    Ok(Status::Pass)
}

fn cmd_ricci(case: &CaseArgs, c: &ConnectionArgs, text: &mut String) -> Outcome {
    let (loaded, split) = split_for_case(case)?;
    let conn = Connection::new(&split, make_alpha(&split, c)?)?;
    let data = ricci(&conn);
    let n = split.n();
    let expected = match (
        expected::ricci_constants(conn.label(), n),
        expected::scalar_curvature(conn.label(), n),
    ) {
        (Some((v, h)), Some(s)) => Some((v, h, s)),
        _ => None,
    };
    let passed = data.mixed_vanishes
        && expected.as_ref().is_none_or(|(v, h, s)| {
            data.vertical_constant.as_ref() == Some(v)
                && data.horizontal_constant.as_ref() == Some(h)
                && &data.scalar_curvature == s
        });
    let rec = RicciRecord {
        system: loaded.sts.label().to_string(),
        connection: conn.label().to_string(),
        n,
        vertical_constant: data.vertical_constant.as_ref().map(Scalar::to_string),
        horizontal_constant: data.horizontal_constant.as_ref().map(Scalar::to_string),
        mixed_vanishes: data.mixed_vanishes,
        scalar_curvature: data.scalar_curvature.to_string(),
        expected: expected.map(|(v, h, s)| ExpectedRicci {
            vertical: v.to_string(),
            horizontal: h.to_string(),
            scalar_curvature: s.to_string(),
        }),
        passed,
    };
    if case.json {
        emit_json(&rec, text);
    } else {
        let exp = |f: fn(&ExpectedRicci) -> &String| rec.expected.as_ref().map_or("-".to_string(), |e| f(e).clone());
        let or_np = |v: &Option<String>| v.as_ref().map_or("not proportional to g".into(), |c| format!("{c} g"));
        let _ = writeln!(text, "system      {}", rec.system);
        let _ = writeln!(text, "connection  {}", rec.connection);
        let _ = writeln!(text, "Ric on sp(1) = {} (expected {} g)", or_np(&rec.vertical_constant), exp(|e| &e.vertical));
        let _ = writeln!(text, "Ric on g1    = {} (expected {} g)", or_np(&rec.horizontal_constant), exp(|e| &e.horizontal));
        let _ = writeln!(text, "mixed block  {}", if rec.mixed_vanishes { "zero" } else { "nonzero" });
        let _ = writeln!(text, "scalar       {} (expected {})", rec.scalar_curvature, exp(|e| &e.scalar_curvature));
        let _ = writeln!(text, "result       {}", pass_fail(rec.passed));
    }
    Ok(verdict(rec.passed))
}

/// Every case with `dim m ≤ 35`.
pub fn light_cases() -> Vec<Family> {
    let mut v = Vec::new();
    v.extend((1..=8).map(|n| Family::Symplectic { n }));
    v.extend((1..=8).map(|w| Family::Special { w }));
    v.extend((3..=8).map(|w| Family::Orthogonal { w }));
    v.push(Family::Exceptional(JordanKind::Scalar));
    v.push(Family::Exceptional(JordanKind::Hermitian(CompositionKind::Unarion)));
    v
}

fn cmd_table(cases: &[String], allow_heavy: bool, json: bool, text: &mut String) -> Outcome {
    let selection = if cases.is_empty() {
        let mut v = light_cases();
        if allow_heavy {
            v.extend(
                [CompositionKind::Binarion, CompositionKind::QuaternionSplit, CompositionKind::Zorn]
                    .map(|c| Family::Exceptional(JordanKind::Hermitian(c))),
            );
        }
        v
    } else {
        cases.iter().map(|s| parse_case(s)).collect::<Result<Vec<_>, _>>()?
    };
    for f in &selection {
        heavy_guard(f.m_dim(), allow_heavy, &f.to_string())?;
    }
    let rows: Vec<TableRow> = holonomy::table_report(&selection)?;
    let passed = rows.iter().all(|r| r.passed);
    let rec = TableRecord { rows, passed };
    if json {
        emit_json(&rec, text);
    } else {
        let _ = writeln!(
            text,
            "{:<28} {:>3} {:>5}  {:>11}  {:>11}  {:>11}  {:>9}  {}",
            "case", "n", "dim m", "hol g", "hol S", "hol c", "center", "result"
        );
        for r in &rec.rows {
            let cell = |c: holonomy::Check| format!("{}/{}", c.computed, c.expected);
            let _ = writeln!(
                text,
                "{:<28} {:>3} {:>5}  {:>11}  {:>11}  {:>11}  {:>9}  {}",
                r.case,
                r.n,
                r.m_dim,
                cell(r.hol_levi_civita),
                cell(r.hol_distinguished),
                cell(r.hol_canonical),
                format!("{},{}", r.center_distinguished.computed, r.center_canonical.computed),
                pass_fail(r.passed)
            );
        }
        let _ = writeln!(text, "computed/expected; result {}", pass_fail(rec.passed));
    }
    Ok(verdict(rec.passed))
}
