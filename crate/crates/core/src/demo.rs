//! Worked decoding examples with frozen expected values.
//!
//! Each [`DemoCase`] names a code spec, an error pattern and the values the
//! decoders must reproduce. [`run_case`] compares everything and reports one
//! [`Check`] per expectation, so a tampered expectation shows up as a diff.

use std::fmt;
use std::time::{Duration, Instant};

use crate::codes::AlternantCode;
use crate::codespec::{CodeSpec, SpecError};
use crate::linalg::Vector;
use crate::pgz::{decode, Algorithm, DecodeReport};

pub const PRS13: &str = include_str!("../specs/prs13.toml");
pub const PRS7: &str = include_str!("../specs/prs7.toml");
pub const PRS31: &str = include_str!("../specs/prs31.toml");
pub const BCH31: &str = include_str!("../specs/bch31.toml");
pub const GRS32: &str = include_str!("../specs/grs32.toml");
pub const BCH121: &str = include_str!("../specs/bch121.toml");
pub const GOPPA19: &str = include_str!("../specs/goppa19.toml");
pub const GOPPA76: &str = include_str!("../specs/goppa76.toml");
pub const GOPPA_BINARY: &str = include_str!("../specs/goppa-binary.toml");

/// Builds one of the bundled specs.
pub fn bundled(spec: &str) -> Result<AlternantCode, SpecError> {
    CodeSpec::from_toml_str(spec)?.build()
}

/// One frozen value. Text values are compared against the library's own
/// rendering (compact matrices, coefficient lists, `a^k` elements).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expect {
    Length(usize),
    Dimension(usize),
    BlowRank(usize),
    Capacity(usize),
    Parameters(&'static str),
    Alpha(&'static str),
    Control(&'static str),
    Syndrome(&'static str),
    Hankel(&'static str),
    Errors(usize),
    Locator(&'static str),
    Evaluator(&'static str),
    /// Checked against every algorithm of the case.
    Positions(&'static str),
    Values(&'static str),
    Summary(Algorithm, &'static str),
}

#[derive(Clone, Debug)]
pub struct DemoCase {
    pub name: &'static str,
    pub spec: &'static str,
    pub algorithms: Vec<Algorithm>,
    /// Error entries as (position, element token over `K`).
    pub error: Vec<(usize, &'static str)>,
    pub expect: Vec<Expect>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub item: String,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Clone, Debug)]
pub struct CaseOutcome {
    pub name: &'static str,
    pub checks: Vec<Check>,
    /// Spec or decode errors that stopped the case.
    pub error: Option<String>,
    pub elapsed: Duration,
}

impl CaseOutcome {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(Check::passed)
    }
}

impl fmt::Display for CaseOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        writeln!(f, "{:<20} {status} ({} checks, {:.2?})", self.name, self.checks.len(), self.elapsed)?;
        if let Some(e) = &self.error {
            writeln!(f, "    error: {e}")?;
        }
        for c in self.checks.iter().filter(|c| !c.passed()) {
            writeln!(f, "    {}:\n      expected {}\n      actual   {}", c.item, c.expected, c.actual)?;
        }
        Ok(())
    }
}

pub fn run_case(case: &DemoCase) -> CaseOutcome {
    let start = Instant::now();
    let mut checks = Vec::new();
    let error = run_inner(case, &mut checks).err();
    CaseOutcome { name: case.name, checks, error, elapsed: start.elapsed() }
}

pub fn run_all(cases: &[DemoCase]) -> Vec<CaseOutcome> {
    cases.iter().map(run_case).collect()
}

fn run_inner(case: &DemoCase, checks: &mut Vec<Check>) -> Result<(), String> {
    let code = bundled(case.spec).map_err(|e| e.to_string())?;
    let base = code.base_field();
    let mut y = Vector::zeros(base, code.n());
    for &(pos, tok) in &case.error {
        if pos >= code.n() {
            return Err(format!("error position {pos} outside length {}", code.n()));
        }
        y.set(pos, base.parse_elem(tok).map_err(|e| e.to_string())?);
    }
    let reports: Vec<DecodeReport> = case
        .algorithms
        .iter()
        .map(|&alg| decode(alg, &y, &code).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let first = reports.first().ok_or("no algorithm to run")?;

    let mut push = |item: String, expected: String, actual: String| checks.push(Check { item, expected, actual });
    for exp in &case.expect {
        match *exp {
            Expect::Length(n) => push("n".into(), n.to_string(), code.n().to_string()),
            Expect::Dimension(k) => push("k".into(), k.to_string(), code.dimension().to_string()),
            Expect::BlowRank(r) => push("rank blow(H,K)".into(), r.to_string(), code.base_rank().to_string()),
            Expect::Capacity(t) => push("t".into(), t.to_string(), code.t().to_string()),
            Expect::Parameters(p) => push("parameters".into(), p.into(), code.parameters()),
            Expect::Alpha(a) => push("alpha".into(), a.into(), code.alpha().to_string()),
            Expect::Control(h) => push("H".into(), h.into(), code.control_matrix().to_compact()),
            Expect::Syndrome(s) => push("syndrome".into(), s.into(), first.syndrome.to_string()),
            Expect::Hankel(s) => {
                push("S".into(), s.into(), first.hankel.as_ref().map(|m| m.to_compact()).unwrap_or_else(|| "-".into()))
            }
            Expect::Errors(l) => push("l".into(), l.to_string(), first.errors.to_string()),
            Expect::Locator(p) => push(
                "L(z)".into(),
                p.into(),
                first.locator.as_ref().map(|p| p.coeff_list()).unwrap_or_else(|| "-".into()),
            ),
            Expect::Evaluator(p) => {
                let rep = reports.iter().find(|r| r.algorithm == Algorithm::Pgz).unwrap_or(first);
                push(
                    "E(z)".into(),
                    p.into(),
                    rep.evaluator.as_ref().map(|p| p.coeff_list()).unwrap_or_else(|| "-".into()),
                )
            }
            Expect::Positions(p) => {
                for rep in &reports {
                    push(format!("{} positions", rep.algorithm), p.into(), format!("{:?}", rep.positions));
                }
            }
            Expect::Values(v) => {
                for rep in &reports {
                    let shown: Vec<String> = rep.values.iter().map(|&x| base.show(x).to_string()).collect();
                    push(format!("{} values", rep.algorithm), v.into(), format!("[{}]", shown.join(", ")));
                }
            }
            Expect::Summary(alg, line) => {
                let actual = reports
                    .iter()
                    .find(|r| r.algorithm == alg)
                    .map(|r| r.summary_line())
                    .unwrap_or_else(|| format!("{alg} not run"));
                push(format!("{alg} summary"), line.into(), actual)
            }
        }
    }
    // y is the error itself, so a successful decode must return zero
    for rep in &reports {
        let ok = rep.corrected.as_ref().is_some_and(Vector::is_zero);
        push(format!("{} corrected", rep.algorithm), "zero".into(), if ok { "zero" } else { "nonzero" }.into());
    }
    Ok(())
}

/// The worked examples: two PRS(Z13, 8) walkthroughs, PRS(Z31, 20), BCH over
/// F32 and F243, the same F32 matrix as a GRS code, and two Goppa codes.
pub fn cases() -> Vec<DemoCase> {
    use Algorithm::{Pgz, Pgzm};
    vec![
        DemoCase {
            name: "prs13-one-error",
            spec: PRS13,
            algorithms: vec![Pgz, Pgzm],
            error: vec![(4, "3")],
            expect: vec![
                Expect::Parameters("[12,8,5]"),
                Expect::Alpha("[1, 2, 4, 8, 3, 6, 12, 11, 9, 5, 10, 7]"),
                Expect::Control(
                    "[[1, 2, 4, 8, 3, 6, 12, 11, 9, 5, 10, 7], \
                     [1, 4, 3, 12, 9, 10, 1, 4, 3, 12, 9, 10], \
                     [1, 8, 12, 5, 1, 8, 12, 5, 1, 8, 12, 5], \
                     [1, 3, 9, 1, 3, 9, 1, 3, 9, 1, 3, 9]]",
                ),
                Expect::Syndrome("[9, 1, 3, 9]"),
                Expect::Hankel("[[9, 1, 3], [1, 3, 9]]"),
                Expect::Errors(1),
                Expect::Locator("[10, 1]"),
                Expect::Evaluator("[9]"),
                Expect::Positions("[4]"),
                Expect::Values("[3]"),
                Expect::Summary(Pgz, "PGZ: Error positions [4], error values [3]"),
                Expect::Summary(Pgzm, "PGZm: Error positions [4], error values [3]"),
            ],
        },
        DemoCase {
            name: "prs13-two-errors",
            spec: PRS13,
            algorithms: vec![Pgz, Pgzm],
            error: vec![(4, "3"), (9, "7")],
            expect: vec![
                Expect::Syndrome("[5, 7, 7, 3]"),
                Expect::Hankel("[[5, 7, 7], [7, 7, 3]]"),
                Expect::Errors(2),
                Expect::Locator("[2, 5, 1]"),
                Expect::Evaluator("[5, 6]"),
                Expect::Positions("[4, 9]"),
                Expect::Values("[3, 7]"),
                Expect::Summary(Pgz, "PGZ: Error positions [4, 9], error values [3, 7]"),
            ],
        },
        DemoCase {
            name: "prs31",
            spec: PRS31,
            algorithms: vec![Pgz, Pgzm],
            error: vec![(9, "14"), (13, "28"), (14, "26"), (19, "23"), (22, "16")],
            expect: vec![
                Expect::Parameters("[30,20,11]"),
                Expect::Capacity(5),
                Expect::Errors(5),
                Expect::Positions("[9, 13, 14, 19, 22]"),
                Expect::Values("[14, 28, 26, 23, 16]"),
            ],
        },
        DemoCase {
            name: "bch31",
            spec: BCH31,
            algorithms: vec![Pgz, Pgzm],
            error: vec![(5, "1"), (19, "1"), (28, "1")],
            expect: vec![
                Expect::Length(31),
                Expect::Dimension(16),
                Expect::Capacity(3),
                Expect::Hankel("[[a^22, a^13, a^14, a^26], [a^13, a^14, a^26, a^19], [a^14, a^26, a^19, a^28]]"),
                Expect::Errors(3),
                Expect::Positions("[5, 19, 28]"),
                Expect::Values("[1, 1, 1]"),
            ],
        },
        DemoCase {
            name: "grs32",
            spec: GRS32,
            algorithms: vec![Pgz, Pgzm],
            error: vec![(8, "a^5"), (9, "1"), (26, "a^19")],
            expect: vec![
                Expect::Parameters("[31,25,7]"),
                Expect::Hankel("[[a^16, 1, a^30, a^14], [1, a^30, a^14, a^25], [a^30, a^14, a^25, a^28]]"),
                Expect::Positions("[8, 9, 26]"),
                Expect::Values("[a^5, 1, a^19]"),
            ],
        },
        DemoCase {
            name: "bch121",
            spec: BCH121,
            algorithms: vec![Pgz, Pgzm],
            error: vec![(2, "1"), (10, "1"), (33, "2"), (40, "2"), (113, "1")],
            expect: vec![
                Expect::Length(121),
                Expect::BlowRank(35),
                Expect::Dimension(86),
                Expect::Capacity(5),
                Expect::Positions("[2, 10, 33, 40, 113]"),
                Expect::Values("[1, 1, 2, 2, 1]"),
                Expect::Summary(Pgz, "PGZ: Error positions [2, 10, 33, 40, 113], error values [1, 1, 2, 2, 1]"),
            ],
        },
        DemoCase {
            name: "goppa19",
            spec: GOPPA19,
            algorithms: vec![Pgz, Pgzm],
            error: vec![(1, "1"), (5, "3"), (7, "4")],
            expect: vec![
                Expect::Length(19),
                Expect::BlowRank(12),
                Expect::Dimension(7),
                Expect::Capacity(3),
                Expect::Positions("[1, 5, 7]"),
                Expect::Values("[1, 3, 4]"),
                Expect::Summary(Pgz, "PGZ: Error positions [1, 5, 7], error values [1, 3, 4]"),
            ],
        },
        DemoCase {
            name: "goppa76",
            spec: GOPPA76,
            algorithms: vec![Pgzm, Pgz],
            error: vec![(10, "2"), (46, "2"), (56, "1"), (63, "1"), (67, "2")],
            expect: vec![
                Expect::Length(76),
                Expect::BlowRank(32),
                Expect::Dimension(44),
                Expect::Capacity(5),
                Expect::Positions("[10, 46, 56, 63, 67]"),
                Expect::Values("[2, 2, 1, 1, 2]"),
                Expect::Summary(Pgzm, "PGZm: Error positions [10, 46, 56, 63, 67], error values [2, 2, 1, 1, 2]"),
            ],
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_cases_pass() {
        for out in run_all(&cases()) {
            assert!(out.passed(), "{out}");
        }
    }

    #[test]
    fn tampered_expectation_is_caught() {
        let mut case = cases().remove(1);
        case.expect.push(Expect::Values("[3, 8]"));
        let out = run_case(&case);
        assert!(!out.passed());
        let bad: Vec<_> = out.checks.iter().filter(|c| !c.passed()).collect();
        assert_eq!(bad.len(), 2, "one per algorithm");
        assert_eq!(bad[0].actual, "[3, 7]");
        assert!(out.to_string().contains("expected [3, 8]"));
    }

    #[test]
    fn tampered_error_is_caught() {
        let mut case = cases().remove(0);
        case.error = vec![(5, "3")];
        assert!(!run_case(&case).passed());
    }

    #[test]
    fn bad_spec_reported() {
        let mut case = cases().remove(0);
        case.spec = "[field]\np = 4\n[code]\nkind = \"prs\"\nk = 2\n";
        let out = run_case(&case);
        assert!(out.error.unwrap().contains("not prime"));
    }
}
