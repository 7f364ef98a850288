//! Cross-checks of every counting identity and bijection over a grid of
//! `(ℓ, k)`, reported as a table.
//!
//! The report contains no timings or other run-dependent data, so identical
//! arguments render byte-identical output.

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::Serialize;

use crate::bijection::{join, sigma, split, tau};
use crate::enumerate::{count_by_type, enumerate_admissible};
use crate::error::{invalid, Limits, Result};
use crate::partition::{partitions_of, syt_sum, syt_sum_squares};
use crate::permutation::{count_avoiders, AvoiderMethod};
use crate::tableau::enumerate_syt;
use crate::weights::multiplicity;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub check: &'static str,
    pub ell: usize,
    pub k: Option<usize>,
    pub expected: String,
    pub observed: String,
    pub passed: bool,
    /// The first `(ℓ, k, λ)` or object that broke the identity.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub ell_max: usize,
    pub k_max: usize,
    pub passed: bool,
    pub checks: Vec<CheckRow>,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("check\tell\tk\texpected\tobserved\tstatus\twitness\n");
        for c in &self.checks {
            let k = c.k.map_or_else(|| "-".to_string(), |k| k.to_string());
            let status = if c.passed { "PASS" } else { "FAIL" };
            let witness = c.witness.as_deref().unwrap_or("-");
            writeln!(
                out,
                "{}\t{}\t{k}\t{}\t{}\t{status}\t{witness}",
                c.check, c.ell, c.expected, c.observed
            )
            .unwrap();
        }
        let ok = self.checks.iter().filter(|c| c.passed).count();
        writeln!(out, "# {ok}/{} checks passed", self.checks.len()).unwrap();
        out
    }
}

struct Rows(Vec<CheckRow>);

impl Rows {
    fn compare(&mut self, check: &'static str, ell: usize, k: Option<usize>, expected: impl ToString, observed: impl ToString) {
        let (expected, observed) = (expected.to_string(), observed.to_string());
        let passed = expected == observed;
        let witness = (!passed).then(|| match k {
            Some(k) => format!("ell={ell} k={k}"),
            None => format!("ell={ell}"),
        });
        self.0.push(CheckRow { check, ell, k, expected, observed, passed, witness });
    }

    /// A roundtrip over `total` objects; `witness` is the first failure.
    fn roundtrip(&mut self, check: &'static str, ell: usize, k: usize, total: usize, witness: Option<String>) {
        let passed = witness.is_none();
        self.0.push(CheckRow {
            check,
            ell,
            k: Some(k),
            expected: format!("{total}/{total}"),
            observed: if passed { format!("{total}/{total}") } else { "broken".into() },
            passed,
            witness: witness.map(|w| format!("ell={ell} k={k} {w}")),
        });
    }
}

/// Runs the full suite over `1 ≤ ℓ ≤ ell_max`, `2 ≤ k ≤ k_max`.
pub fn run(ell_max: usize, k_max: usize, limits: &Limits) -> Result<Report> {
    if ell_max == 0 {
        return invalid("ell-max must be at least 1");
    }
    if k_max < 2 {
        return invalid("k-max must be at least 2");
    }
    Limits::check("ell", ell_max, limits.max_enum_ell)?;
    Limits::check("k", k_max, limits.max_enum_k)?;
    Limits::check("ell for brute counting", ell_max, limits.max_perm_ell)?;

    let mut rows = Rows(Vec::new());
    for ell in 1..=ell_max {
        hook_vs_backtracking(&mut rows, ell, limits)?;
        for k in 2..=k_max {
            grid_point(&mut rows, ell, k, limits)?;
        }
    }
    let passed = rows.0.iter().all(|c| c.passed);
    Ok(Report { ell_max, k_max, passed, checks: rows.0 })
}

fn hook_vs_backtracking(rows: &mut Rows, ell: usize, limits: &Limits) -> Result<()> {
    let mut witness = None;
    let shapes = partitions_of(ell, ell)?;
    for shape in &shapes {
        let listed = enumerate_syt(shape, limits)?.len();
        if BigUint::from(listed) != shape.count_syt() && witness.is_none() {
            witness = Some(format!("ell={ell} lambda={shape}: hook {} vs listed {listed}", shape.count_syt()));
        }
    }
    let n = shapes.len();
    let passed = witness.is_none();
    rows.0.push(CheckRow {
        check: "hook-vs-backtracking",
        ell,
        k: None,
        expected: format!("{n}/{n}"),
        observed: if passed { format!("{n}/{n}") } else { "broken".into() },
        passed,
        witness,
    });
    Ok(())
}

fn grid_point(rows: &mut Rows, ell: usize, k: usize, limits: &Limits) -> Result<()> {
    let all = enumerate_admissible(ell, k, limits)?;
    let sc: Vec<_> = all.iter().filter(|z| z.is_self_conjugate()).cloned().collect();

    rows.compare("squaring", ell, Some(k), syt_sum_squares(ell, k)?, all.len());
    rows.compare("self-conjugate", ell, Some(k), syt_sum(ell, k)?, sc.len());

    let tally = count_by_type(ell, k, limits)?;
    let mut bad = None;
    for e in tally.entries() {
        let f = e.shape.count_syt();
        if e.admissible != &f * &f || e.self_conjugate != f {
            bad = Some(format!(
                "lambda={}: ({}, {}) vs ({}, {f})",
                e.shape,
                e.admissible,
                e.self_conjugate,
                &f * &f
            ));
            break;
        }
    }
    let n = tally.entries().len();
    rows.roundtrip("per-type", ell, k, n, bad);

    let mut bad = None;
    let mut tableaux = 0;
    'shapes: for shape in partitions_of(ell, k)? {
        for x in enumerate_syt(&shape, limits)? {
            tableaux += 1;
            let back = tau(&x, k).and_then(|z| sigma(&z));
            if back.as_ref() != Ok(&x) {
                bad = Some(format!("lambda={shape} tableau={:?}", x.rows()));
                break 'shapes;
            }
        }
    }
    rows.roundtrip("sigma-tau", ell, k, tableaux, bad);

    let bad = sc
        .iter()
        .find(|z| sigma(z).and_then(|x| tau(&x, k)).as_ref() != Ok(*z))
        .map(|z| format!("sequence={z}"));
    rows.roundtrip("tau-sigma", ell, k, sc.len(), bad);

    let bad = all
        .iter()
        .find(|z| split(z).and_then(|(a, b)| join(&a, &b)).as_ref() != Ok(*z))
        .map(|z| format!("sequence={z}"));
    rows.roundtrip("join-split", ell, k, all.len(), bad);

    let formula = count_avoiders(ell, k, AvoiderMethod::Formula, limits)?;
    let brute = count_avoiders(ell, k, AvoiderMethod::Brute, limits)?;
    let by_rsk = count_avoiders(ell, k, AvoiderMethod::Rsk, limits)?;
    rows.compare("avoiders-brute", ell, Some(k), &formula, brute);
    rows.compare("avoiders-rsk", ell, Some(k), &formula, by_rsk);

    rows.compare("multiplicity", ell, Some(k), all.len(), multiplicity(2 * ell, k, ell)?);
    Ok(())
}
