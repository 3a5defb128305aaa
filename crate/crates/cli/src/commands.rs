use num_bigint::BigUint;
use serde_json::{json, Value};

use implication_tables::monoid::{run_suite, SuiteConfig, VerificationReport, UNVERIFIED_CLAIMS};
use implication_tables::recurrence::by_recurrence;
use implication_tables::{
    brute_counts, catalan, closed_form, color_class_counts, enumerate_bracketings, evaluate,
    BruteBudget, CountVector, Error, Result, Semantics, SeriesName, TruthValue, Valuation,
};

use crate::output;
use crate::status;
use crate::{Format, Outcome};

fn ok(text: String) -> Result<Outcome> {
    Ok(Outcome {
        text,
        status: status::OK,
    })
}

fn unsupported_format(cmd: &str, format: Format) -> Error {
    Error::Domain(format!("{cmd} has no {format:?} output").to_lowercase())
}

/// Coefficients `1..=n` of `name` (for `I` these are all zero).
pub fn series(name: SeriesName, n: usize, format: Format) -> Result<Outcome> {
    let s = closed_form(name, n)?;
    let coeffs = s
        .to_integers()
        .ok_or_else(|| Error::Consistency(format!("{name} has non-integer coefficients")))?;
    let values: Vec<String> = coeffs[1..].iter().map(|c| c.to_string()).collect();
    let text = match format {
        Format::Plain => output::space_separated(&values),
        Format::Bfile => output::bfile(1, &values),
        Format::Csv => {
            let rows: Vec<Vec<String>> = values
                .iter()
                .enumerate()
                .map(|(i, v)| vec![(i + 1).to_string(), v.clone()])
                .collect();
            output::csv(&["n", name.label()], &rows)
        }
        Format::Json => {
            let mut doc = json!({
                "series": name.label(),
                "first_index": 1,
                "values": values,
            });
            if name == SeriesName::I {
                doc["constant_term"] = json!(coeffs[0].to_string());
            }
            output::json(&doc)
        }
    };
    ok(text)
}

pub fn table(
    n: usize,
    index: usize,
    sem: Semantics,
    budget: &BruteBudget,
    format: Format,
) -> Result<Outcome> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if n > budget.max_n(sem) {
        return Err(Error::Budget {
            n,
            max: budget.max_n(sem),
            semantics: sem.name(),
        });
    }
    let trees = enumerate_bracketings(n)?;
    let tree = trees.get(index).ok_or_else(|| Error::Range {
        index,
        valid: format!("0..={}", trees.len() - 1),
    })?;
    let mut rows = Vec::new();
    for v in implication_tables::logic::valuations(n, sem) {
        let value = evaluate(tree, &v, sem)?;
        rows.push((v, value));
    }
    let vars: Vec<String> = (1..=n).map(|i| format!("p{i}")).collect();
    let cells = |v: &Valuation, value: TruthValue| {
        let mut row: Vec<String> = v.0.iter().map(|x| x.to_string()).collect();
        row.push(value.to_string());
        row
    };
    let text = match format {
        Format::Plain => {
            let mut out = format!(
                "# {tree}  (bracketing {index} of 0..={}, {sem})\n",
                trees.len() - 1
            );
            let mut header: Vec<&str> = vars.iter().map(String::as_str).collect();
            header.push("value");
            let body: Vec<Vec<String>> = rows.iter().map(|(v, x)| cells(v, *x)).collect();
            out.push_str(&output::aligned(&header, &body));
            out
        }
        Format::Csv => {
            let mut header: Vec<&str> = vars.iter().map(String::as_str).collect();
            header.push("value");
            let body: Vec<Vec<String>> = rows.iter().map(|(v, x)| cells(v, *x)).collect();
            output::csv(&header, &body)
        }
        Format::Json => output::json(&json!({
            "formula": tree.to_string(),
            "index": index,
            "bracketings": trees.len(),
            "semantics": sem.name(),
            "rows": rows.iter().map(|(v, x)| json!({
                "valuation": v.0.iter().map(|t| t.code()).collect::<Vec<_>>(),
                "value": x.code(),
            })).collect::<Vec<_>>(),
        })),
        Format::Bfile => return Err(unsupported_format("table", format)),
    };
    ok(text)
}

/// Per-value counts for one `n` as produced by one path, in `t, f, u` order
/// (just `t, f` classically).
fn triple(c: &CountVector, sem: Semantics) -> Vec<BigUint> {
    let mut v = vec![c.t.clone(), c.f.clone()];
    if sem == Semantics::Kleene3 {
        v.push(c.u.clone());
    }
    v
}

fn show(v: &[BigUint]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn verify(
    n_max: usize,
    order: usize,
    sem: Semantics,
    budget: &BruteBudget,
    format: Format,
) -> Result<Outcome> {
    if n_max == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if order < n_max {
        return Err(Error::Domain(format!(
            "closed-form order {order} is below n = {n_max}"
        )));
    }
    let names = match sem {
        Semantics::Kleene3 => vec![SeriesName::T, SeriesName::F, SeriesName::U],
        Semantics::Classical2 => vec![SeriesName::R, SeriesName::S],
    };
    let closed: Vec<Vec<BigUint>> = names
        .iter()
        .map(|&name| {
            closed_form(name, order)?
                .to_naturals()
                .ok_or_else(|| Error::Consistency(format!("{name} is not a count series")))
        })
        .collect::<Result<_>>()?;
    let table = by_recurrence(sem, n_max)?;
    let brute_max = budget.max_n(sem).min(n_max);

    let mut all_agree = true;
    let mut records = Vec::new();
    for n in 1..=n_max {
        let rec = triple(table.row(n)?, sem);
        let cf: Vec<BigUint> = closed.iter().map(|c| c[n].clone()).collect();
        let brute = if n <= brute_max {
            Some(triple(&brute_counts(n, sem, budget)?, sem))
        } else {
            None
        };
        let agree = rec == cf && brute.as_ref().map_or(true, |b| *b == rec);
        all_agree &= agree;
        records.push((n, brute, rec, cf, table.row(n)?.g.clone(), agree));
    }

    let labels: &[&str] = match sem {
        Semantics::Kleene3 => &["t", "f", "u"],
        Semantics::Classical2 => &["r", "s"],
    };
    let text = match format {
        Format::Plain => {
            let mut out = format!(
                "{sem} logic, n = 1..={n_max}; brute force up to n = {brute_max}; counts as ({})\n",
                labels.join(",")
            );
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|(n, b, r, c, g, agree)| {
                    vec![
                        n.to_string(),
                        b.as_ref().map_or("-".to_string(), |b| show(b)),
                        show(r),
                        show(c),
                        g.to_string(),
                        if *agree { "yes" } else { "NO" }.to_string(),
                    ]
                })
                .collect();
            out.push_str(&output::aligned(
                &["n", "brute", "recurrence", "closed-form", "total", "agree"],
                &rows,
            ));
            out.push_str(if all_agree {
                "all paths agree\n"
            } else {
                "DISAGREEMENT\n"
            });
            out
        }
        Format::Csv => {
            let mut header = vec!["n"];
            header.extend_from_slice(labels);
            header.push("g");
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|(n, _, r, _, g, _)| {
                    let mut row = vec![n.to_string()];
                    row.extend(r.iter().map(|x| x.to_string()));
                    row.push(g.to_string());
                    row
                })
                .collect();
            output::csv(&header, &rows)
        }
        Format::Json => {
            let strs = |v: &[BigUint]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
            output::json(&json!({
                "semantics": sem.name(),
                "labels": labels,
                "agree": all_agree,
                "rows": records.iter().map(|(n, b, r, c, g, agree)| json!({
                    "n": n,
                    "brute": b.as_ref().map(|b| strs(b)),
                    "recurrence": strs(r),
                    "closed_form": strs(c),
                    "total": g.to_string(),
                    "expected_total": (BigUint::from(sem.radix()).pow(*n as u32) * catalan(*n)).to_string(),
                    "agree": agree,
                })).collect::<Vec<_>>(),
            }))
        }
        Format::Bfile => return Err(unsupported_format("verify", format)),
    };
    Ok(Outcome {
        text,
        status: if all_agree {
            status::OK
        } else {
            status::COUNTEREXAMPLE
        },
    })
}

fn report_json(r: &VerificationReport) -> Value {
    let mut v = json!({
        "claim": r.claim,
        "order": r.order,
        "cases": r.cases,
        "status": if r.is_verified() { "verified" } else { "counterexample" },
    });
    if let Some(w) = r.witness() {
        v["witness"] = json!({
            "case": w.case,
            "n": w.n,
            "lhs": w.lhs.to_string(),
            "rhs": w.rhs.to_string(),
            "relation": w.relation,
        });
    }
    v
}

pub fn monoid(cfg: &SuiteConfig, format: Format) -> Result<Outcome> {
    let reports = run_suite(cfg)?;
    let failures = reports.iter().filter(|r| !r.is_verified()).count();
    let text = match format {
        Format::Plain => {
            let mut out = String::new();
            for r in &reports {
                out.push_str(&format!("{r}\n"));
            }
            out.push_str("not checked:\n");
            for note in UNVERIFIED_CLAIMS {
                out.push_str(&format!("  - {note}\n"));
            }
            out.push_str(&format!(
                "{} claims, {} verified, {} with counterexamples\n",
                reports.len(),
                reports.len() - failures,
                failures
            ));
            out
        }
        Format::Json => output::json(&json!({
            "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
            "unverified": UNVERIFIED_CLAIMS,
            "counterexamples": failures,
        })),
        Format::Csv | Format::Bfile => return Err(unsupported_format("monoid", format)),
    };
    Ok(Outcome {
        text,
        status: if failures == 0 {
            status::OK
        } else {
            status::COUNTEREXAMPLE
        },
    })
}

pub fn colors(n: usize, sem: Semantics, budget: &BruteBudget, format: Format) -> Result<Outcome> {
    let classes = color_class_counts(n, sem, budget)?;
    // classical classes are the products RR, RS, SR, SS of the count series
    let products = if sem == Semantics::Classical2 {
        let r = closed_form(SeriesName::R, n)?;
        let s = closed_form(SeriesName::S, n)?;
        let pick = |v: TruthValue| if v == TruthValue::True { &r } else { &s };
        let mut m = std::collections::BTreeMap::new();
        for &(a, b) in classes.keys() {
            let c = pick(a).mul(pick(b)).coefficient(n)?.to_integer();
            m.insert((a, b), c.to_string());
        }
        Some(m)
    } else {
        None
    };
    let label = |v: TruthValue| if v == TruthValue::True { "R" } else { "S" };
    let total: BigUint = classes.values().sum();
    let mismatch = products.as_ref().is_some_and(|p| {
        classes
            .iter()
            .any(|(k, c)| p.get(k).map(String::as_str) != Some(c.to_string().as_str()))
    });
    // descending by value code so true comes first, as in RR, RS, SR, SS
    let ordered: Vec<_> = classes.iter().rev().collect();
    let text = match format {
        Format::Plain => {
            let mut header = vec!["left", "right", "count"];
            if products.is_some() {
                header.extend(["product", "series"]);
            }
            let rows: Vec<Vec<String>> = ordered
                .iter()
                .map(|((a, b), c)| {
                    let mut row = vec![a.to_string(), b.to_string(), c.to_string()];
                    if let Some(p) = &products {
                        row.push(p[&(*a, *b)].clone());
                        row.push(format!("{}{}", label(*a), label(*b)));
                    }
                    row
                })
                .collect();
            let mut out = format!("n = {n}, {sem}: entries by (left, right) value at the root\n");
            out.push_str(&output::aligned(&header, &rows));
            out.push_str(&format!("total  {total}\n"));
            out
        }
        Format::Csv => {
            let mut header = vec!["left", "right", "count"];
            if products.is_some() {
                header.push("product");
            }
            let rows: Vec<Vec<String>> = ordered
                .iter()
                .map(|((a, b), c)| {
                    let mut row = vec![a.to_string(), b.to_string(), c.to_string()];
                    if let Some(p) = &products {
                        row.push(p[&(*a, *b)].clone());
                    }
                    row
                })
                .collect();
            output::csv(&header, &rows)
        }
        Format::Json => output::json(&json!({
            "n": n,
            "semantics": sem.name(),
            "total": total.to_string(),
            "classes": ordered.iter().map(|((a, b), c)| {
                let mut v = json!({"left": a.code(), "right": b.code(), "count": c.to_string()});
                if let Some(p) = &products {
                    v["product"] = json!(p[&(*a, *b)]);
                }
                v
            }).collect::<Vec<_>>(),
        })),
        Format::Bfile => return Err(unsupported_format("colors", format)),
    };
    Ok(Outcome {
        text,
        status: if mismatch {
            status::COUNTEREXAMPLE
        } else {
            status::OK
        },
    })
}
