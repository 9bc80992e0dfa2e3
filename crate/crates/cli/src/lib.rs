//! Command implementations behind the `bisyz` binary. Each command returns a
//! [`Outcome`]: the human-readable text, a machine-readable [`RunReport`] and
//! the process exit code.

use std::fmt::Write as _;

use bisyz::exactnum::{format_rational, parse_rational};
use bisyz::hilbert::{dim_table, oracle_dims, DimRow};
use bisyz::resolution::{build_resolution_in, group_shifts, verify_complex, Check};
use bisyz::sample::random_instance;
use bisyz::syzygy::{is_syzygy, min_generators, syzygies_33};
use bisyz::verify::verify_instance;
use bisyz::{classify, resultant_21, BiDeg, Error, InputTriple, InstanceClass, Rational};
use serde::Serialize;
use thiserror::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_EXHAUSTED: i32 = 4;

pub const CSV_HEADER: &str = "m,n,h_syz_pred,h_syz,h_I_pred,h_I,e2_pred,e2";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InstanceError {
    #[error("line {line}: expected 6 coefficients, found {found}")]
    RowLength { line: usize, found: usize },
    #[error("line {line}: {msg}")]
    Coefficient { line: usize, msg: String },
    #[error("expected 3 coefficient rows, found {0}")]
    RowCount(usize),
}

/// Parses an instance file: three rows of six coefficients `a b c d e f`
/// (of `x^2z, xyz, y^2z, x^2w, xyw, y^2w`); blank lines and `#` comments
/// are ignored. Coefficients are integers or `num/den` in lowest terms.
pub fn parse_instance(text: &str) -> Result<InputTriple, InstanceError> {
    let mut rows: Vec<[Rational; 6]> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 6 {
            return Err(InstanceError::RowLength {
                line: k + 1,
                found: toks.len(),
            });
        }
        let mut row: Vec<Rational> = Vec::with_capacity(6);
        for t in toks {
            row.push(parse_rational(t).map_err(|e| InstanceError::Coefficient {
                line: k + 1,
                msg: format!("{t:?}: {e}"),
            })?);
        }
        rows.push(row.try_into().expect("six entries"));
    }
    let rows: [[Rational; 6]; 3] = rows.try_into().map_err(|r: Vec<_>| InstanceError::RowCount(r.len()))?;
    Ok(InputTriple::from_abcdef(&rows))
}

/// Canonical text of an instance, readable by [`parse_instance`].
pub fn format_instance(p: &InputTriple, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for l in c.lines() {
            let _ = writeln!(out, "# {l}");
        }
    }
    out.push_str("# a b c d e f: x^2z xyz y^2z x^2w xyw y^2w\n");
    for row in p.to_abcdef() {
        let cells: Vec<String> = row.iter().map(format_rational).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub at: Option<BiDeg>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorReport {
    pub degree: BiDeg,
    pub entries: String,
    pub is_syzygy: bool,
}

/// Machine-readable summary of one command run.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<InstanceClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resultant: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<GeneratorReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub table: Vec<DimRow>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub shifts: Vec<Vec<BiDeg>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub ranks: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl RunReport {
    fn new(command: &str) -> Self {
        RunReport {
            command: command.into(),
            verdict: Verdict::Pass,
            class: None,
            resultant: None,
            generators: Vec::new(),
            table: Vec::new(),
            shifts: Vec::new(),
            ranks: Vec::new(),
            checks: Vec::new(),
            first_failure: None,
            error: None,
        }
    }

    fn fail(&mut self, check: &str, at: Option<BiDeg>) {
        self.verdict = Verdict::Fail;
        if self.first_failure.is_none() {
            self.first_failure = Some(Failure {
                check: check.into(),
                at,
            });
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub text: String,
    pub report: RunReport,
    pub code: i32,
}

impl Outcome {
    fn new(text: String, report: RunReport) -> Self {
        let code = match report.verdict {
            Verdict::Pass => EXIT_PASS,
            Verdict::Fail => EXIT_MISMATCH,
        };
        Outcome { text, report, code }
    }

    fn error(command: &str, code: i32, msg: String) -> Self {
        let mut report = RunReport::new(command);
        report.fail("error", None);
        report.error = Some(msg.clone());
        Outcome {
            text: format!("error: {msg}\n"),
            report,
            code,
        }
    }

    fn degenerate(command: &str, resultant: Option<String>) -> Self {
        let mut o = Outcome::error(command, EXIT_DEGENERATE, "degenerate instance (resultant is zero)".into());
        o.report.class = Some(InstanceClass::Degenerate);
        o.report.resultant = resultant;
        o
    }
}

fn from_core(command: &str, e: Error) -> Outcome {
    match e {
        Error::DegenerateInput | Error::DegenerateClass => Outcome::degenerate(command, Some("0".into())),
        Error::GenerationExhausted(_) => Outcome::error(command, EXIT_EXHAUSTED, e.to_string()),
        Error::Poly(_) => Outcome::error(command, EXIT_PARSE, e.to_string()),
        _ => Outcome::error(command, EXIT_MISMATCH, e.to_string()),
    }
}

/// Runs `f` with the class and resultant of `p`, refusing degenerate input.
fn nondegenerate(
    command: &str,
    p: &InputTriple,
    f: impl FnOnce(InstanceClass, String) -> Result<Outcome, Error>,
) -> Outcome {
    let go = || -> Result<Outcome, Error> {
        let res = format_rational(&resultant_21(p)?.value);
        let cls = classify(p)?;
        if cls == InstanceClass::Degenerate {
            return Ok(Outcome::degenerate(command, Some(res)));
        }
        f(cls, res)
    };
    go().unwrap_or_else(|e| from_core(command, e))
}

pub fn cmd_classify(p: &InputTriple) -> Outcome {
    let go = || -> Result<Outcome, Error> {
        let res = format_rational(&resultant_21(p)?.value);
        let cls = classify(p)?;
        let mut report = RunReport::new("classify");
        report.class = Some(cls);
        report.resultant = Some(res.clone());
        let text = format!("class: {cls}\nresultant: {res}\n");
        let mut o = Outcome::new(text, report);
        if cls == InstanceClass::Degenerate {
            o.code = EXIT_DEGENERATE;
        }
        Ok(o)
    };
    go().unwrap_or_else(|e| from_core("classify", e))
}

pub fn cmd_syzygies(p: &InputTriple) -> Outcome {
    nondegenerate("syzygies", p, |cls, res| {
        let gens = min_generators(p)?;
        let mut report = RunReport::new("syzygies");
        report.class = Some(cls);
        report.resultant = Some(res);
        let mut text = format!("class: {cls}\nminimal generators:\n");
        for g in &gens.gens {
            let ok = is_syzygy(p, g);
            let _ = writeln!(text, "  {}  {}  {}", g.ambient(), g, if ok { "ok" } else { "NOT A SYZYGY" });
            if !ok {
                report.fail("is_syzygy", Some(g.ambient()));
            }
            report.generators.push(GeneratorReport {
                degree: g.ambient(),
                entries: g.to_string(),
                is_syzygy: ok,
            });
        }
        let (c1, c2) = syzygies_33(p)?;
        let _ = writeln!(text, "minor syzygies of bidegree (3,3):\n  C1 = {c1}\n  C2 = {c2}");
        Ok(Outcome::new(text, report))
    })
}

pub fn cmd_hilbert(p: &InputTriple, bx: BiDeg, csv: bool) -> Outcome {
    nondegenerate("hilbert", p, |cls, res| {
        let table = dim_table(p, bx)?;
        let mut report = RunReport::new("hilbert");
        report.class = Some(cls);
        report.resultant = Some(res);
        let mut text = String::new();
        if csv {
            let _ = writeln!(text, "{CSV_HEADER}");
        } else {
            let _ = writeln!(text, "class: {cls}");
            let _ = writeln!(
                text,
                "{:>3} {:>3} {:>10} {:>6} {:>8} {:>5} {:>7} {:>3}",
                "m", "n", "h_syz_pred", "h_syz", "h_I_pred", "h_I", "e2_pred", "e2"
            );
        }
        for r in &table.rows {
            if csv {
                let _ = writeln!(
                    text,
                    "{},{},{},{},{},{},{},{}",
                    r.m, r.n, r.h_syz_pred, r.h_syz, r.h_i_pred, r.h_i, r.e2_pred, r.e2
                );
            } else {
                let _ = writeln!(
                    text,
                    "{:>3} {:>3} {:>10} {:>6} {:>8} {:>5} {:>7} {:>3}{}",
                    r.m,
                    r.n,
                    r.h_syz_pred,
                    r.h_syz,
                    r.h_i_pred,
                    r.h_i,
                    r.e2_pred,
                    r.e2,
                    if r.matches() { "" } else { "  MISMATCH" }
                );
            }
        }
        let bad = table.mismatches().count();
        if let Some(at) = table.first_mismatch() {
            report.fail("Hilbert table", Some(at));
        }
        if !csv {
            let _ = writeln!(text, "mismatches: {bad}");
        }
        report.table = table.rows;
        Ok(Outcome::new(text, report))
    })
}

/// Marker for one cell: `.` no syzygies, `*` only Koszul syzygies, `#`
/// non-Koszul syzygies present.
pub fn picture_marker(p: &InputTriple, d: BiDeg) -> char {
    let (syz, _, e2) = oracle_dims(p, d);
    match (syz, e2) {
        (0, _) => '.',
        (_, 0) => '*',
        _ => '#',
    }
}

pub fn cmd_picture(p: &InputTriple, bx: BiDeg) -> Outcome {
    nondegenerate("picture", p, |cls, res| {
        let mut report = RunReport::new("picture");
        report.class = Some(cls);
        report.resultant = Some(res);
        let mut text = String::new();
        for n in (0..=bx.n).rev() {
            let row: Vec<String> = (0..=bx.m).map(|m| picture_marker(p, BiDeg::new(m, n)).to_string()).collect();
            let _ = writeln!(text, "{n:>2} | {}", row.join(" "));
        }
        let _ = writeln!(text, "   +-{}", "--".repeat(bx.m as usize + 1));
        let cols: Vec<String> = (0..=bx.m).map(|m| (m % 10).to_string()).collect();
        let _ = writeln!(text, "     {}   (m across, n up)", cols.join(" "));
        let _ = writeln!(text, "legend: . no syzygies   * Koszul syzygies only   # non-Koszul syzygies");
        Ok(Outcome::new(text, report))
    })
}

fn module_text(shifts: &[BiDeg]) -> String {
    if shifts.is_empty() {
        return "0".into();
    }
    group_shifts(shifts)
        .into_iter()
        .map(|(s, k)| {
            let base = format!("R({},{})", -s.m, -s.n);
            if k > 1 {
                format!("{base}^{k}")
            } else {
                base
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn check_line(c: &Check) -> String {
    let mut s = format!("{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
    if let Some(at) = c.first_failure {
        let _ = write!(s, " at {at}");
    }
    if !c.detail.is_empty() {
        let _ = write!(s, ": {}", c.detail);
    }
    s
}

pub fn cmd_resolution(p: &InputTriple, bx: BiDeg, verify: bool) -> Outcome {
    nondegenerate("resolution", p, |cls, res| {
        let r = build_resolution_in(p, bx)?;
        let cx = &r.complex;
        let mut report = RunReport::new("resolution");
        report.class = Some(cls);
        report.resultant = Some(res);
        let mut text = format!("class: {cls}\n");
        for (i, m) in cx.modules().iter().enumerate() {
            let _ = writeln!(text, "M{i}: {}", module_text(&m.sorted_shifts()));
        }
        report.ranks = cx.ranks();
        let ranks: Vec<String> = report.ranks.iter().map(usize::to_string).collect();
        let _ = writeln!(text, "ranks: {}", ranks.join(","));
        report.shifts = cx.modules().iter().map(|m| m.sorted_shifts()).collect();
        if verify {
            let v = verify_complex(cx, p, bx);
            for c in &v.checks {
                let _ = writeln!(text, "{}", check_line(c));
                if !c.passed {
                    report.fail(&c.name, c.first_failure);
                }
            }
            let _ = writeln!(text, "verdict: {}", if v.passed() { "pass" } else { "fail" });
            report.checks = v.checks;
        }
        Ok(Outcome::new(text, report))
    })
}

pub fn cmd_gen(cls: InstanceClass, seed: u64, bound: i64) -> Outcome {
    if bound < 1 {
        return Outcome::error("gen", EXIT_PARSE, format!("bound must be at least 1, got {bound}"));
    }
    match random_instance(cls, seed, bound) {
        Ok(p) => {
            let mut report = RunReport::new("gen");
            report.class = Some(cls);
            let comment = format!("{cls} instance, seed {seed}, bound {bound}");
            Outcome::new(format_instance(&p, Some(&comment)), report)
        }
        Err(e) => from_core("gen", e),
    }
}

pub fn cmd_verify(p: &InputTriple, bx: BiDeg) -> Outcome {
    match verify_instance(p, bx) {
        Ok(v) => {
            let mut report = RunReport::new("verify");
            report.class = Some(v.class);
            report.resultant = Some(v.resultant.clone());
            let mut text = format!("class: {}\nresultant: {}\n", v.class, v.resultant);
            for c in &v.checks {
                let _ = writeln!(text, "{}", check_line(c));
                if !c.passed {
                    report.fail(&c.name, c.first_failure);
                }
            }
            let _ = writeln!(text, "verdict: {}", if v.passed() { "pass" } else { "fail" });
            report.checks = v.checks;
            let mut o = Outcome::new(text, report);
            if v.class == InstanceClass::Degenerate {
                o.code = EXIT_DEGENERATE;
            }
            o
        }
        Err(e) => from_core("verify", e),
    }
}

/// Parses `MxN`.
pub fn parse_box(s: &str) -> Result<BiDeg, String> {
    let (m, n) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected MxN, got {s:?}"))?;
    let m: i32 = m.trim().parse().map_err(|e| format!("bad m in {s:?}: {e}"))?;
    let n: i32 = n.trim().parse().map_err(|e| format!("bad n in {s:?}: {e}"))?;
    if m < 0 || n < 0 {
        return Err(format!("box must be nonnegative, got {s:?}"));
    }
    Ok(BiDeg::new(m, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use bisyz::fixtures;

    #[test]
    fn instance_roundtrip() {
        for p in [fixtures::standard_example(), fixtures::generic(), fixtures::planted_zero()] {
            let text = format_instance(&p, Some("fixture"));
            assert_eq!(parse_instance(&text).unwrap(), p);
        }
    }

    #[test]
    fn instance_errors() {
        assert_eq!(
            parse_instance("1 0 0 0 0\n"),
            Err(InstanceError::RowLength { line: 1, found: 5 })
        );
        assert_eq!(parse_instance("1 0 0 0 0 0\n"), Err(InstanceError::RowCount(1)));
        assert!(matches!(
            parse_instance("2/4 0 0 0 0 0\n0 0 0 0 0 1\n1 0 0 0 0 0\n"),
            Err(InstanceError::Coefficient { line: 1, .. })
        ));
        let p = parse_instance("# c\n1 0 0 0 0 0 # x^2z\n\n0 0 0 0 0 1\n0 0 1 1 0 0\n").unwrap();
        assert_eq!(p, fixtures::standard_example());
    }

    #[test]
    fn box_parsing() {
        assert_eq!(parse_box("9x6"), Ok(BiDeg::new(9, 6)));
        assert!(parse_box("9").is_err());
        assert!(parse_box("-1x2").is_err());
    }
}
