//! The commands behind the `tropab` binary. Each returns its full output
//! and an exit code: 0 success, 1 a failed check, 2 unreadable input.

use std::fmt::Write;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use crate::curve::{self, Mark, MarkedCurve};
use crate::enumerate::{self, InvariantTable, SolutionSet};
use crate::exactmath::{format_rational, parse_rational};
use crate::io;
use crate::multiplicity;
use crate::torus::{sample_generic_points, CurveClass};
use crate::{svg, Error};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, code: 0 }
    }

    fn verdict(text: String, pass: bool) -> Output {
        Output { text, code: if pass { 0 } else { 1 } }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Io(_) => 2,
        _ => 1,
    }
}

impl From<Error> for Output {
    fn from(e: Error) -> Output {
        Output { text: format!("error: {e}\n"), code: exit_code(&e) }
    }
}

fn class_str(c: &CurveClass) -> String {
    format!("[[{}, {}], [{}, {}]]", c.m[0][0], c.m[0][1], c.m[1][0], c.m[1][1])
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn json_out(v: Value, pass: bool) -> Output {
    Output::verdict(io::pretty(&v), pass)
}

/// Structural checks of a curve file.
pub fn cmd_check(path: &Path, format: Format) -> Output {
    let mc = match io::read_curve(path) {
        Ok(mc) => mc,
        Err(e) => return e.into(),
    };
    let c = &mc.curve;
    let violations: Vec<String> = curve::validate(c).iter().map(|v| v.to_string()).collect();
    let defects = curve::balance_defects(c);
    let simple = curve::is_simple(c);
    let holonomy = curve::degree_class(c).ok();
    let crossings = curve::degree_class_by_crossings(c).ok();
    let gcd = curve::curve_gcd(c).ok();
    let genus = curve::genus(c);
    let pass = violations.is_empty() && defects.is_empty() && holonomy.is_some() && holonomy == crossings;
    if format == Format::Json {
        return json_out(
            json!({
                "vertices": c.num_vertices(),
                "edges": c.edges().len(),
                "genus": genus,
                "balanced": defects.is_empty(),
                "unbalanced_vertices": defects.iter().map(|(v, d)| json!({"vertex": v, "defect": d})).collect::<Vec<_>>(),
                "simple": simple.simple,
                "class": holonomy.map(|k| k.m),
                "class_by_crossings": crossings.map(|k| k.m),
                "gcd": gcd,
                "violations": violations,
                "pass": pass,
            }),
            pass,
        );
    }
    let mut s = String::new();
    let _ = writeln!(s, "vertices: {}", c.num_vertices());
    let _ = writeln!(s, "edges: {}", c.edges().len());
    let _ = writeln!(s, "genus: {genus}");
    let _ = writeln!(s, "balanced: {}", yes(defects.is_empty()));
    for (v, d) in &defects {
        let _ = writeln!(s, "  vertex {v}: slopes sum to ({}, {})", d[0], d[1]);
    }
    let _ =
        writeln!(s, "simple: {}{}", yes(simple.simple), simple.reason.map(|r| format!(" ({r})")).unwrap_or_default());
    let show = |k: Option<CurveClass>| k.map(|k| class_str(&k)).unwrap_or_else(|| "undefined".into());
    let _ = writeln!(s, "class: {}", show(holonomy));
    let _ = writeln!(s, "class by crossings: {}", show(crossings));
    let _ = writeln!(s, "gcd: {}", gcd.map(|g| g.to_string()).unwrap_or_else(|| "undefined".into()));
    if violations.is_empty() {
        let _ = writeln!(s, "violations: none");
    } else {
        let _ = writeln!(s, "violations:");
        for v in &violations {
            let _ = writeln!(s, "  {v}");
        }
    }
    let _ = writeln!(s, "verdict: {}", if pass { "PASS" } else { "FAIL" });
    Output::verdict(s, pass)
}

/// `"edge:t"`, e.g. `"0:3/2"`.
pub fn parse_mark(s: &str) -> crate::Result<Mark> {
    let (e, t) = s.split_once(':').ok_or_else(|| Error::Parse(format!("mark {s:?} is not edge:t")))?;
    let edge = e.trim().parse().map_err(|_| Error::Parse(format!("bad edge index in {s:?}")))?;
    Ok(Mark { edge, t: parse_rational(t)? })
}

/// Multiplicities of a curve file; `marks` replaces the file's marks.
pub fn cmd_mult(path: &Path, marks: Option<&[String]>, format: Format) -> Output {
    let mut mc = match io::read_curve(path) {
        Ok(mc) => mc,
        Err(e) => return e.into(),
    };
    if let Some(ms) = marks {
        match ms.iter().map(|m| parse_mark(m)).collect::<crate::Result<Vec<_>>>() {
            Ok(ms) => mc.marks = ms,
            Err(e) => return e.into(),
        }
    }
    let report = match multiplicity::report(&mc) {
        Ok(r) => r,
        Err(e) => return e.into(),
    };
    let agrees = report.theta.as_ref().map(|t| t.agrees());
    let pass = agrees.unwrap_or(true) && report.parity_ok;
    if format == Format::Json {
        return json_out(io::report_value(&report), pass);
    }
    let mut s = String::new();
    let vm: Vec<String> = report.vertex_multiplicities.iter().map(|m| m.to_string()).collect();
    let _ = writeln!(s, "vertex multiplicities: {}", vm.join(" "));
    let _ = writeln!(s, "m: {}", report.classical);
    let _ = writeln!(s, "m^q: {}", report.refined);
    let _ = writeln!(s, "gcd: {}", report.gcd);
    let _ = writeln!(s, "complex (gcd * m): {}", report.complex_by_product);
    let _ = writeln!(s, "parity: {}", if report.parity_ok { "ok" } else { "violated" });
    match &report.theta {
        Some(t) => {
            let _ = writeln!(s, "lattice torsion (smith form): {}", t.torsion);
            let _ = writeln!(s, "lattice torsion (maximal minors): {}", t.torsion_by_minors);
            let _ = writeln!(s, "weight product: {}", t.weight_product);
            let _ = writeln!(s, "complex (lattice): {}", t.by_theta);
            let _ = writeln!(s, "agreement: {}", t.agrees());
        }
        None => {
            let _ = writeln!(s, "complex (lattice): needs marks");
        }
    }
    Output::verdict(s, pass)
}

#[derive(Clone, Debug, Default)]
pub struct EnumerateArgs {
    pub torus: PathBuf,
    /// `"a,b,c,d"`; falls back to the class stored in the torus file.
    pub class: Option<String>,
    pub seed: u64,
    pub bound: Option<i64>,
    pub out: Option<PathBuf>,
    pub format: Format,
}

fn run_enumeration(args: &EnumerateArgs) -> crate::Result<SolutionSet> {
    let (t, stored) = io::parse_torus(&std::fs::read_to_string(&args.torus)?)?;
    let c = match (&args.class, stored) {
        (Some(s), _) => io::parse_class(s)?,
        (None, Some(c)) => c,
        (None, None) => return Err(Error::Parse("no class given and none in the torus file".into())),
    };
    let pts = sample_generic_points(&t, 2, args.seed);
    let set = enumerate::enumerate_genus2(&t, &c, &pts, args.bound.map(|k| [k, k]))?;
    if let Some(dir) = &args.out {
        io::write_solution_set(dir, &set)?;
    }
    Ok(set)
}

fn solution_set_text(set: &SolutionSet) -> String {
    let mut s = String::new();
    let p = set.torus.period();
    let _ = writeln!(
        s,
        "torus: [[{}, {}], [{}, {}]]",
        format_rational(&p[0][0]),
        format_rational(&p[0][1]),
        format_rational(&p[1][0]),
        format_rational(&p[1][1])
    );
    let _ = writeln!(s, "class: {}", class_str(&set.class));
    for (i, pt) in set.points.iter().enumerate() {
        let x = pt.coords();
        let _ = writeln!(s, "point {}: ({}, {})", i + 1, format_rational(&x[0]), format_rational(&x[1]));
    }
    let _ = writeln!(s, "winding bound: {:?} (certified {:?})", set.bound, set.certified_bound);
    let _ = writeln!(s, "torus generic: {}", yes(set.certificate.torus_generic));
    let _ = writeln!(s, "shapes: {}", set.shapes.len());
    let _ = writeln!(s, "solutions: {}", set.solutions.len());
    for (i, sol) in set.solutions.iter().enumerate() {
        let marks: Vec<String> =
            sol.marked.marks.iter().map(|m| format!("{}:{}", m.edge, format_rational(&m.t))).collect();
        let _ = writeln!(
            s,
            "  {:>3}  shape {}  gcd {}  m {}  complex {}  marks {}  m^q {}",
            i,
            sol.shape,
            sol.gcd,
            sol.classical,
            sol.complex(),
            marks.join(" "),
            sol.refined
        );
    }
    s
}

fn table_text(t: &InvariantTable) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "class: {}  genus: {}", class_str(&t.class), t.genus);
    for r in &t.per_gcd {
        let _ = writeln!(s, "gcd {}: {} solutions, N = {}, BG = {}", r.gcd, r.solutions, r.classical, r.refined);
    }
    let _ = writeln!(s, "M = {}", t.m);
    let _ = writeln!(s, "N = {}", t.n);
    let _ = writeln!(s, "BG = {}", t.bg);
    let _ = writeln!(s, "R = {}", t.r);
    s
}

pub fn cmd_enumerate(args: &EnumerateArgs) -> Output {
    match run_enumeration(args) {
        Ok(set) => match args.format {
            Format::Json => json_out(io::solution_set_value(&set), true),
            Format::Text => Output::ok(solution_set_text(&set)),
        },
        Err(e) => e.into(),
    }
}

pub fn cmd_invariants(args: &EnumerateArgs) -> Output {
    match run_enumeration(args) {
        Ok(set) => {
            let table = enumerate::assemble_invariants(&set);
            let pass = table.is_consistent();
            match args.format {
                Format::Json => json_out(io::invariant_table_value(&table), pass),
                Format::Text => Output::verdict(table_text(&table), pass),
            }
        }
        Err(e) => e.into(),
    }
}

/// Closed form against the series coefficients for `n = 1..=n_max`.
pub fn cmd_series(genus: usize, n_max: usize, format: Format) -> Output {
    if genus < 2 {
        return Error::Domain("genus must be at least 2".into()).into();
    }
    let rows = enumerate::eisenstein_table(genus, n_max);
    let pass = rows.iter().all(|r| r.closed_form == r.series);
    if format == Format::Json {
        let v = json!({
            "genus": genus,
            "rows": rows.iter().map(|r| json!({
                "n": r.n,
                "closed_form": r.closed_form.to_string(),
                "series": r.series.to_string(),
            })).collect::<Vec<_>>(),
            "ok": pass,
        });
        return json_out(v, pass);
    }
    let mut s = String::new();
    let _ = writeln!(s, "genus {genus}");
    for r in &rows {
        let _ = writeln!(s, "n = {:>2}: closed form {}  series {}", r.n, r.closed_form, r.series);
    }
    let _ = writeln!(s, "{}", if pass { "OK" } else { "MISMATCH" });
    Output::verdict(s, pass)
}

pub fn cmd_svg(path: &Path, out: &Path) -> Output {
    let mc: MarkedCurve = match io::read_curve(path) {
        Ok(mc) => mc,
        Err(e) => return e.into(),
    };
    if let Some(v) = curve::validate(&mc.curve).first() {
        return Error::Invalid(v.to_string()).into();
    }
    match std::fs::write(out, svg::render(&mc, &[])) {
        Ok(()) => Output::ok(format!("wrote {}\n", out.display())),
        Err(e) => Error::from(e).into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn marks_parse() {
        let m = parse_mark("2: 3/4").unwrap();
        assert_eq!((m.edge, format_rational(&m.t)), (2, "3/4".to_string()));
        assert!(parse_mark("2").is_err());
    }

    #[test]
    fn check_and_mult_on_a_catalog_curve() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        io::write_curve(&path, &catalog::double_theta_marked()).unwrap();
        let out = cmd_check(&path, Format::Text);
        assert_eq!(out.code, 0, "{}", out.text);
        assert!(out.text.contains("class: [[2, 0], [0, 2]]"));
        let out = cmd_mult(&path, None, Format::Text);
        assert_eq!(out.code, 0);
        assert!(out.text.contains("complex (lattice): 32"));
        assert!(out.text.contains("complex (gcd * m): 32"));
    }

    #[test]
    fn series_output() {
        let out = cmd_series(3, 8, Format::Text);
        assert_eq!(out.code, 0);
        assert!(out.text.ends_with("OK\n"));
        assert_eq!(cmd_series(1, 8, Format::Text).code, 1);
    }
}
