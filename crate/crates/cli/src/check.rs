//! The `check` subcommand: oracle, recurrence and closed-form suites plus the
//! identity verifiers, each bounded by cardinality.

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::Serialize;
use whitney::closed::{
    ap_table, crown_closed_disagreements, crown_table, fence_table, FormulaVariant,
};
use whitney::families::{asymmetric_peak, crown, fence};
use whitney::poset::{whitney_oracle, OracleLimits};
use whitney::recurrences::{
    verify_crown_identities, verify_four_step, CrownSource, FenceTable, IdentityCheck,
};
use whitney::WhitneyTable;

use crate::{json, CmdResult, Failure};

/// Largest cardinality handed to the oracle.
const ORACLE_CARD: u64 = 24;

#[derive(Serialize)]
struct Check {
    name: String,
    normative: bool,
    passed: bool,
    cells: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

impl Check {
    fn from_identity(check: &IdentityCheck, label: &str) -> Self {
        Check {
            name: format!("{} [{label}]", check.name),
            normative: check.normative,
            passed: check.passed(),
            cells: check.cells_checked,
            detail: check
                .counterexample
                .as_ref()
                .map(|c| format!("n={} k={}: {} != {}", c.n, c.k, c.lhs, c.rhs)),
        }
    }
}

#[derive(Serialize)]
struct Report {
    max_n: u64,
    checks: Vec<Check>,
    passed: bool,
}

/// Compares tables cell by cell and names the first differing cell.
struct Suite {
    name: String,
    cells: usize,
    failure: Option<String>,
}

impl Suite {
    fn new(name: String) -> Self {
        Suite {
            name,
            cells: 0,
            failure: None,
        }
    }

    fn compare(&mut self, label: &str, got: &WhitneyTable, expected: &WhitneyTable) {
        if self.failure.is_some() {
            return;
        }
        let len = got.len().max(expected.len());
        for k in 0..len as i64 {
            let (a, b) = (got.get(k), expected.get(k));
            if a != b {
                self.failure = Some(format!("{label} k={k}: {a} != {b}"));
                return;
            }
            self.cells += 1;
        }
    }

    fn fail(&mut self, reason: String) {
        self.failure.get_or_insert(reason);
    }

    fn finish(self) -> Check {
        Check {
            name: self.name,
            normative: true,
            passed: self.failure.is_none(),
            cells: self.cells,
            detail: self.failure,
        }
    }
}

fn oracle(poset: &whitney::Poset) -> Result<WhitneyTable, Failure> {
    Ok(whitney_oracle(poset, &OracleLimits::default())?)
}

fn fence_suite(max_n: u64, fences: &FenceTable) -> Result<Check, Failure> {
    let mut suite = Suite::new(format!(
        "fence tables n<={max_n}: recurrence = closed forms, oracle for n<={}",
        max_n.min(ORACLE_CARD)
    ));
    let (mut a, mut b) = (BigUint::from(1u32), BigUint::from(1u32));
    for n in 0..=max_n {
        let row = fences.row(n);
        for variant in FormulaVariant::ALL {
            suite.compare(
                &format!("fence({n}) {variant:?}"),
                &fence_table(n, variant),
                &row,
            );
        }
        if n <= ORACLE_CARD {
            suite.compare(&format!("fence({n}) oracle"), &oracle(&fence(n))?, &row);
        }
        // total is F(n+2)
        (a, b) = (b.clone(), a + b);
        if row.total() != a {
            suite.fail(format!(
                "fence({n}) total {} != F({}) = {a}",
                row.total(),
                n + 2
            ));
        }
    }
    Ok(suite.finish())
}

fn crown_suite(max_n: u64, fences: &FenceTable) -> Result<Check, Failure> {
    let mut suite = Suite::new(format!(
        "crown tables 2<=n<={max_n}: closed form = recurrence, oracle for 2n<={ORACLE_CARD}"
    ));
    for n in 2..=max_n {
        let table = crown_table(n)?;
        suite.compare(
            &format!("crown({n}) recurrence"),
            &table,
            &fences.crown_row(n),
        );
        if 2 * n <= ORACLE_CARD {
            suite.compare(&format!("crown({n}) oracle"), &table, &oracle(&crown(n)?)?);
        }
    }
    Ok(suite.finish())
}

fn ap_suite(max_n: u64) -> Result<Check, Failure> {
    let card = max_n.min(ORACLE_CARD);
    let mut suite = Suite::new(format!(
        "asymmetric peaks mu+nu+1<={card}: closed form = oracle"
    ));
    for mu in 1..card {
        for nu in 1..card - mu {
            suite.compare(
                &format!("ap({mu},{nu})"),
                &ap_table(mu, nu)?,
                &oracle(&asymmetric_peak(mu, nu)?)?,
            );
        }
    }
    Ok(suite.finish())
}

fn experimental_crown(max_n: u64) -> Check {
    let disagreements = crown_closed_disagreements(max_n);
    let cells: usize = (2..=max_n).map(|n| 2 * n as usize + 1).sum();
    let edge_only = disagreements
        .iter()
        .all(|d| d.k <= 2 || d.k >= 2 * d.n as i64 - 2);
    let detail = disagreements.first().map(|d| {
        format!(
            "{} of {cells} cells disagree{}; first n={} k={}: {} vs {}",
            disagreements.len(),
            if edge_only {
                ", all with k<=2 or k>=2n-2"
            } else {
                ""
            },
            d.n,
            d.k,
            d.reference,
            d.experimental
        )
    });
    Check {
        name: format!("experimental crown formula vs reference, 2<=n<={max_n}"),
        normative: false,
        passed: disagreements.is_empty(),
        cells,
        detail,
    }
}

fn render_plain(report: &Report) -> String {
    let mut out = String::new();
    for check in &report.checks {
        let status = match (check.passed, check.normative) {
            (true, _) => "pass",
            (false, true) => "FAIL",
            (false, false) => "info",
        };
        let _ = write!(out, "{status:<5} {} ({} cells)", check.name, check.cells);
        if let Some(detail) = &check.detail {
            let _ = write!(out, "; {detail}");
        }
        out.push('\n');
    }
    let verdict = if report.passed { "pass" } else { "FAIL" };
    let _ = writeln!(out, "check: {verdict}");
    out
}

pub fn run(max_n: u64, as_json: bool) -> CmdResult {
    let fences = FenceTable::recursive(2 * max_n.max(2));
    let mut checks = vec![
        fence_suite(max_n, &fences)?,
        crown_suite(max_n, &fences)?,
        ap_suite(max_n)?,
        Check::from_identity(&verify_four_step(max_n), "closed form"),
    ];
    // crown identities reach c(n+2, .), so n+2 crowns must fit the oracle
    let oracle_n = max_n.min(ORACLE_CARD / 2 - 2);
    let by_oracle =
        verify_crown_identities(oracle_n, CrownSource::Oracle(OracleLimits::default()))?;
    let label = format!("oracle, n<={oracle_n}");
    checks.extend(by_oracle.iter().map(|c| Check::from_identity(c, &label)));
    let by_formula = verify_crown_identities(max_n, CrownSource::ClosedForm)?;
    let label = format!("closed form, n<={max_n}");
    checks.extend(by_formula.iter().map(|c| Check::from_identity(c, &label)));
    checks.push(experimental_crown(max_n));

    let passed = checks.iter().all(|c| c.passed || !c.normative);
    let report = Report {
        max_n,
        checks,
        passed,
    };
    let out = if as_json {
        json(&report)
    } else {
        render_plain(&report)
    };
    if passed {
        Ok(out)
    } else {
        let first = report
            .checks
            .iter()
            .find(|c| c.normative && !c.passed)
            .unwrap();
        Err(Failure::Validation {
            output: out,
            reason: format!("{}: {}", first.name, first.detail.as_deref().unwrap_or("")),
        })
    }
}
