use std::fmt::{self, Write as _};

use latmult_core::bijection::{sigma, tau};
use latmult_core::enumerate::{count_admissible, count_by_type};
use latmult_core::partition::{partitions_of, syt_sum, syt_sum_squares};
use latmult_core::permutation::{count_avoiders, lds_length, rsk, AvoiderMethod};
use latmult_core::weights::{gamma, multiplicity, weight_pairings};
use latmult_core::{verify as suite, Error, LatticePath, Limits, Move, PathSequence, Permutation, StandardTableau};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::{ascii, AvoidMethod, CountCommand, Format, MapCommand, PathMethod, PermCommand};

pub struct Outcome {
    pub text: String,
    pub success: bool,
}

#[derive(Debug)]
pub enum Failure {
    Input(String),
    Guard(String),
    Internal(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Guard(_) => 3,
            Failure::Internal(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) | Failure::Guard(m) | Failure::Internal(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit { .. } => Failure::Guard(e.to_string()),
            Error::Internal(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Result<T> = std::result::Result<T, Failure>;

fn ok(text: String) -> Result<Outcome> {
    Ok(Outcome { text, success: true })
}

fn json_doc(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("values always serialize");
    s.push('\n');
    s
}

fn scalar(format: Format, v: Value, count: &BigUint) -> Result<Outcome> {
    match format {
        Format::Json => ok(json_doc(&v)),
        Format::Tsv => ok(format!("{count}\n")),
    }
}

fn shape_json(p: &latmult_core::Partition) -> Value {
    json!(p.parts())
}

pub fn count(cmd: CountCommand, format: Option<Format>, limits: &Limits) -> Result<Outcome> {
    let format = format.unwrap_or(Format::Tsv);
    match cmd {
        CountCommand::Tableaux { ell, max_height, per_shape } => {
            if max_height == 0 {
                return Err(Failure::Input("--max-height must be at least 1".into()));
            }
            let shapes = partitions_of(ell, max_height)?;
            let counts: Vec<BigUint> = shapes.iter().map(|s| s.count_syt()).collect();
            let total: BigUint = counts.iter().sum();
            match (format, per_shape) {
                (Format::Tsv, false) => ok(format!("{total}\n")),
                (Format::Tsv, true) => {
                    let mut out = String::from("lambda\tf\n");
                    for (s, f) in shapes.iter().zip(&counts) {
                        writeln!(out, "{s}\t{f}").unwrap();
                    }
                    writeln!(out, "# total {total}").unwrap();
                    ok(out)
                }
                (Format::Json, _) => {
                    let mut v = json!({
                        "ell": ell,
                        "max_height": max_height,
                        "count": total.to_string(),
                    });
                    if per_shape {
                        v["per_shape"] = shapes
                            .iter()
                            .zip(&counts)
                            .map(|(s, f)| json!({ "shape": shape_json(s), "f": f.to_string() }))
                            .collect();
                    }
                    ok(json_doc(&v))
                }
            }
        }
        CountCommand::Paths { grid, method } => path_count(grid.ell, grid.k, method, false, format, limits),
        CountCommand::SelfConjugate { grid, method } => path_count(grid.ell, grid.k, method, true, format, limits),
        CountCommand::Avoiders { grid, method } => {
            let m = match method {
                AvoidMethod::Brute => AvoiderMethod::Brute,
                AvoidMethod::Rsk => AvoiderMethod::Rsk,
                AvoidMethod::Formula => AvoiderMethod::Formula,
            };
            let c = count_avoiders(grid.ell, grid.k, m, limits)?;
            let v = json!({
                "ell": grid.ell,
                "k": grid.k,
                "method": format!("{method:?}").to_lowercase(),
                "count": c.to_string(),
            });
            scalar(format, v, &c)
        }
        CountCommand::Types { grid } => {
            let tally = count_by_type(grid.ell, grid.k, limits)?;
            match format {
                Format::Tsv => {
                    let mut out = String::from("lambda\tf\tf_squared\tbrute_admissible\tbrute_self_conjugate\n");
                    for e in tally.entries() {
                        let f = e.shape.count_syt();
                        writeln!(out, "{}\t{f}\t{}\t{}\t{}", e.shape, &f * &f, e.admissible, e.self_conjugate).unwrap();
                    }
                    ok(out)
                }
                Format::Json => {
                    let types: Vec<Value> = tally
                        .entries()
                        .iter()
                        .map(|e| {
                            let f = e.shape.count_syt();
                            json!({
                                "shape": shape_json(&e.shape),
                                "f": f.to_string(),
                                "f_squared": (&f * &f).to_string(),
                                "brute_admissible": e.admissible.to_string(),
                                "brute_self_conjugate": e.self_conjugate.to_string(),
                            })
                        })
                        .collect();
                    ok(json_doc(&json!({ "ell": grid.ell, "k": grid.k, "types": types })))
                }
            }
        }
    }
}

fn path_count(
    ell: usize,
    k: usize,
    method: PathMethod,
    self_conjugate: bool,
    format: Format,
    limits: &Limits,
) -> Result<Outcome> {
    let c = match (method, self_conjugate) {
        (PathMethod::Formula, false) => syt_sum_squares(ell, k)?,
        (PathMethod::Formula, true) => syt_sum(ell, k)?,
        (PathMethod::Brute, sc) => {
            let (all, s) = count_admissible(ell, k, limits)?;
            if sc {
                s
            } else {
                all
            }
        }
    };
    let v = json!({
        "ell": ell,
        "k": k,
        "method": format!("{method:?}").to_lowercase(),
        "self_conjugate": self_conjugate,
        "count": c.to_string(),
    });
    scalar(format, v, &c)
}

pub fn mult(n: usize, k: usize, ell: usize, format: Option<Format>) -> Result<Outcome> {
    let m = multiplicity(n, k, ell)?;
    let g = gamma(ell, n)?;
    let w = weight_pairings(k as i64, &g);
    match format.unwrap_or(Format::Json) {
        Format::Json => ok(json_doc(&json!({
            "n": n,
            "k": k,
            "ell": ell,
            "gamma": g.coeffs(),
            "pairings": w.pairings,
            "dominant": w.is_dominant(),
            "multiplicity": m.to_string(),
        }))),
        Format::Tsv => {
            let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
            ok(format!(
                "gamma\t{}\npairings\t{}\nmultiplicity\t{m}\n",
                join(g.coeffs()),
                join(&w.pairings)
            ))
        }
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(input: &str, what: &str) -> Result<T> {
    serde_json::from_str(input).map_err(|e| Failure::Input(format!("malformed {what} JSON: {e}")))
}

fn read_sequence(input: &str, halves: bool) -> Result<PathSequence> {
    if halves {
        let rows: Vec<String> = parse_json(input, "half-path array")?;
        let paths = rows
            .iter()
            .map(|h| {
                let moves = h
                    .chars()
                    .map(|c| match c {
                        'R' | 'r' => Ok(Move::R),
                        'U' | 'u' => Ok(Move::U),
                        other => Err(Failure::Input(format!("unexpected move {other:?} in {h:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(LatticePath::from_first_half(&moves)?)
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(PathSequence::new(paths)?);
    }
    if input.trim_start().starts_with('[') {
        let rows: Vec<LatticePath> = parse_json(input, "path array")?;
        Ok(PathSequence::new(rows)?)
    } else {
        parse_json(input, "path sequence")
    }
}

fn tableau_tsv(x: &StandardTableau) -> String {
    let mut out = String::new();
    for row in x.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        writeln!(out, "{}", cells.join("\t")).unwrap();
    }
    out
}

pub fn map(cmd: MapCommand, input: &str, format: Option<Format>) -> Result<Outcome> {
    let format = format.unwrap_or(Format::Json);
    match cmd {
        MapCommand::Tau { k, ascii: art } => {
            let x: StandardTableau = parse_json(input, "tableau")?;
            let k = k.unwrap_or(x.height().max(2));
            let z = tau(&x, k)?;
            if art {
                return ok(ascii::render(&z));
            }
            match format {
                Format::Json => ok(json_doc(&serde_json::to_value(&z).expect("sequences serialize"))),
                Format::Tsv => ok(z.paths().iter().map(|p| format!("{p}\n")).collect()),
            }
        }
        MapCommand::Sigma { halves, ascii: art } => {
            let z = read_sequence(input, halves)?;
            let x = sigma(&z)?;
            let body = match format {
                Format::Json => json_doc(&serde_json::to_value(&x).expect("tableaux serialize")),
                Format::Tsv => tableau_tsv(&x),
            };
            if art {
                ok(format!("{}\n{body}", ascii::render(&z)))
            } else {
                ok(body)
            }
        }
    }
}

pub fn verify(ell_max: usize, k_max: usize, format: Option<Format>, limits: &Limits) -> Result<Outcome> {
    let report = suite::run(ell_max, k_max, limits)?;
    let text = match format.unwrap_or(Format::Tsv) {
        Format::Tsv => report.to_tsv(),
        Format::Json => json_doc(&serde_json::to_value(&report).expect("reports serialize")),
    };
    Ok(Outcome { text, success: report.passed })
}

fn parse_word(word: &str) -> Result<Permutation> {
    if word.trim_start().starts_with('[') {
        parse_json(word, "permutation")
    } else {
        Ok(word.parse()?)
    }
}

pub fn perm(cmd: PermCommand, format: Option<Format>) -> Result<Outcome> {
    let format = format.unwrap_or(Format::Tsv);
    match cmd {
        PermCommand::Lds { word } => {
            let w = parse_word(&word)?;
            let n = lds_length(&w);
            match format {
                Format::Tsv => ok(format!("{n}\n")),
                Format::Json => ok(json_doc(&json!({ "word": w.word(), "lds": n }))),
            }
        }
        PermCommand::Rsk { word } => {
            let w = parse_word(&word)?;
            let (p, q) = rsk(&w);
            match format {
                Format::Tsv => ok(format!(
                    "shape\t{}\nP\t{}\nQ\t{}\n",
                    p.shape(),
                    serde_json::to_string(&p).expect("tableaux serialize"),
                    serde_json::to_string(&q).expect("tableaux serialize")
                )),
                Format::Json => ok(json_doc(&json!({
                    "word": w.word(),
                    "shape": shape_json(p.shape()),
                    "p": p,
                    "q": q,
                }))),
            }
        }
    }
}
