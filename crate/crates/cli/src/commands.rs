//! One function per subcommand. Each returns the text rendering, the JSON
//! document and the exit code; all numbers in JSON are decimal strings.

use std::fmt::Write;

use partav::asymptotics::{closed_form, predict, ratio_report, table_variant, ClosedForm, TABLE1};
use partav::containment::contains_oracle;
use partav::enumeration::{av_series_capped, d_count, ENUMERATION_CAP};
use partav::equivalence::{rook_equivalent, strict_representative, wilf_check};
use partav::gf::theta_recursive;
use partav::ratfunc::parse_ratfunc;
use partav::{gf_avoid, witness, Partition, RatFunc, Result};
use serde_json::{json, Value};

pub const SCHEMA_VERSION: &str = "1";

pub struct Report {
    pub text: String,
    pub json: Value,
    pub exit: u8,
}

fn doc(command: &str, mut body: Value) -> Value {
    body["schema_version"] = json!(SCHEMA_VERSION);
    body["command"] = json!(command);
    body
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

pub fn containment(alpha: &Partition, mu: &Partition, want_witness: bool, oracle: bool) -> Result<Report> {
    let answer = if oracle { contains_oracle(alpha, mu)? } else { partav::contains(alpha, mu) };
    let w = if want_witness && answer { witness(alpha, mu) } else { None };
    let mut text = answer.to_string();
    if let Some(w) = &w {
        write!(text, "\nrows: {}\ncols: {}", strings(&w.deleted_rows).join(","), strings(&w.deleted_cols).join(",")).unwrap();
    }
    let witness_json = w.map_or(Value::Null, |w| json!({ "rows": strings(&w.deleted_rows), "cols": strings(&w.deleted_cols) }));
    let json = doc(
        "contains",
        json!({
            "alpha": alpha.to_string(),
            "pattern": mu.to_string(),
            "method": if oracle { "oracle" } else { "greedy" },
            "contains": answer,
            "witness": witness_json,
        }),
    );
    Ok(Report { text, json, exit: if answer { 0 } else { 1 } })
}

/// Shared rendering of a count sweep starting at `n = 1`.
fn count_report(command: &str, mu: &Partition, counts: &[String], set: &str) -> Report {
    let text = counts.iter().enumerate().map(|(i, c)| format!("{} {c}", i + 1)).collect::<Vec<_>>().join("\n");
    let json = doc(
        command,
        json!({
            "pattern": mu.to_string(),
            "set": set,
            "n_min": "1",
            "n_max": counts.len().to_string(),
            "counts": counts,
        }),
    );
    Report { text, json, exit: 0 }
}

pub fn count_brute(mu: &Partition, n_max: u64, jobs: usize) -> Result<Report> {
    let s = av_series_capped(mu, n_max, ENUMERATION_CAP, jobs)?;
    Ok(count_report("count", mu, &strings(&s.counts), "avoiders"))
}

pub fn count_decomp(mu: &Partition, n_max: u64) -> Result<Report> {
    let counts = (1..=n_max).map(|n| d_count(mu, n)).collect::<Result<Vec<_>>>()?;
    Ok(count_report("count", mu, &strings(&counts), "d_set"))
}

/// Same output as `count --method brute`; the generating function is used
/// whenever it exists.
pub fn series(mu: &Partition, n_max: u64, jobs: usize) -> Result<Report> {
    if mu.is_super_strict() {
        let s = gf_avoid(mu)?.integer_series(n_max as usize)?;
        return Ok(count_report("count", mu, &strings(&s[1..]), "avoiders"));
    }
    eprintln!("note: {mu} is not super-strict; counting by enumeration");
    count_brute(mu, n_max, jobs)
}

pub fn gf(mu: &Partition, with_empty: bool) -> Result<Report> {
    let mut f = gf_avoid(mu)?;
    if with_empty {
        f = &f + &RatFunc::one();
    }
    let word = if mu.weight() >= 2 { Some(theta_recursive(mu)?.to_string()) } else { None };
    let json = doc(
        "gf",
        json!({
            "pattern": mu.to_string(),
            "with_empty": with_empty,
            "word": word,
            "gf": serde_json::to_value(&f).expect("ratfunc serializes"),
        }),
    );
    Ok(Report { text: f.to_string(), json, exit: 0 })
}

pub fn equiv(p: &Partition, q: &Partition, n_max: u64, jobs: usize) -> Result<Report> {
    let rook = rook_equivalent(p, q);
    let rp = strict_representative(p)?;
    let rq = strict_representative(q)?;
    let wilf = if jobs > 1 {
        let a = av_series_capped(p, n_max, ENUMERATION_CAP, jobs)?;
        let b = av_series_capped(q, n_max, ENUMERATION_CAP, jobs)?;
        a.counts == b.counts
    } else {
        wilf_check(p, q, n_max)?
    };
    let text = format!(
        "rook_equivalent: {rook}\nwilf_checked_to_{n_max}: {wilf}\nstrict_rep_p: {rp}\nstrict_rep_q: {rq}"
    );
    let json = doc(
        "equiv",
        json!({
            "p": p.to_string(),
            "q": q.to_string(),
            "rook_equivalent": rook,
            "wilf_checked_to": n_max.to_string(),
            "wilf_equal": wilf,
            "strict_rep_p": rp.to_string(),
            "strict_rep_q": rq.to_string(),
        }),
    );
    Ok(Report { text, json, exit: 0 })
}

pub fn asymptotics(mu: &Partition, ns: &[u64]) -> Result<Report> {
    let pred = predict(mu)?;
    let variant = table_variant(mu);
    let rows = ratio_report(mu, ns)?;
    let mut text = format!("prediction: {pred}");
    if let Some(v) = &variant {
        write!(text, "\ntable-variant: {v}").unwrap();
    }
    text.push_str("\nn observed predicted ratio source");
    for r in &rows {
        write!(text, "\n{} {} {:.6e} {:.6} {:?}", r.n, r.observed, r.predicted, r.ratio, r.source).unwrap();
    }
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "n": r.n.to_string(),
                "observed": r.observed.to_string(),
                "predicted": r.predicted.to_string(),
                "ratio": r.ratio.to_string(),
                "source": format!("{:?}", r.source),
            })
        })
        .collect();
    let json = doc(
        "asymptotics",
        json!({
            "pattern": mu.to_string(),
            "prediction": pred.to_string(),
            "table_variant": variant.map(|v| v.to_string()),
            "rows": json_rows,
        }),
    );
    Ok(Report { text, json, exit: 0 })
}

/// How a printed generating function relates to ours.
fn gf_convention(mu: &Partition, printed: &str) -> Result<&'static str> {
    let printed = parse_ratfunc(printed)?;
    if !mu.is_super_strict() {
        return Ok("unchecked");
    }
    let ours = gf_avoid(mu)?;
    Ok(if printed == ours {
        "without-empty"
    } else if printed == &ours + &RatFunc::one() {
        "with-empty"
    } else {
        "other"
    })
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

pub fn table(n_max: u64, jobs: usize) -> Result<Report> {
    let mut text = String::from("pattern formula series gf oeis");
    let mut rows = Vec::new();
    let mut all_ok = true;
    for row in TABLE1 {
        let mu = row.partition();
        let has_formula = !matches!(closed_form(&mu, 1), ClosedForm::Unsupported);
        let (formula, series) = if has_formula || mu.is_super_strict() {
            let brute = av_series_capped(&mu, n_max, ENUMERATION_CAP, jobs)?;
            let formula = has_formula.then(|| {
                (1..=n_max).all(|n| closed_form(&mu, n) == ClosedForm::Exact(u128::from(brute.counts[n as usize - 1])))
            });
            let series = if mu.is_super_strict() {
                let s = gf_avoid(&mu)?.integer_series(n_max as usize)?;
                Some(s[1..].iter().zip(&brute.counts).all(|(a, &b)| *a == b.into()))
            } else {
                None
            };
            (formula, series)
        } else {
            (None, None)
        };
        all_ok &= formula != Some(false) && series != Some(false);
        let formula = formula.map_or("unsupported", verdict);
        let series = series.map_or("-", verdict);
        let gf = row.gf.map(|g| gf_convention(&mu, g)).transpose()?.unwrap_or("-");
        write!(text, "\n{mu} {formula} {series} {gf} {}", row.oeis).unwrap();
        rows.push(json!({
            "pattern": mu.to_string(),
            "count": row.count,
            "formula": formula,
            "series": series,
            "gf": gf,
            "oeis": row.oeis,
        }));
    }
    let json = doc("table", json!({ "n_max": n_max.to_string(), "all_pass": all_ok, "rows": rows }));
    Ok(Report { text, json, exit: if all_ok { 0 } else { 1 } })
}
