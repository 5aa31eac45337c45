//! Bundled reference data, recomputed and compared on demand.

use std::path::Path;

use num_bigint::BigInt;
use periodic_syt::{
    build_transfer_system, char_poly, sink_tableau, source_tableau, Cell, CompatiblePair, PairSpec, PeriodicShape,
    Shape, Tableau, TransferLimits,
};
use serde_json::{json, Value};

use crate::error::{CliError, Kind};
use crate::report::Report;

pub const BUNDLED: &[(&str, &str)] = &[
    ("m4_1.json", include_str!("../fixtures/m4_1.json")),
    ("m5_1.json", include_str!("../fixtures/m5_1.json")),
    ("charpoly_row4.json", include_str!("../fixtures/charpoly_row4.json")),
    ("charpoly_row5.json", include_str!("../fixtures/charpoly_row5.json")),
    ("charpoly_row6.json", include_str!("../fixtures/charpoly_row6.json")),
    ("source_sink.json", include_str!("../fixtures/source_sink.json")),
    ("column_words.json", include_str!("../fixtures/column_words.json")),
];

fn bad(file: &str, what: &str) -> CliError {
    CliError::validation(format!("{file}: {what}"))
}

fn int(v: &Value) -> Option<BigInt> {
    v.as_number()?.to_string().parse().ok()
}

fn ints(v: &Value) -> Option<Vec<BigInt>> {
    v.as_array()?.iter().map(int).collect()
}

fn pair(file: &str, v: &Value) -> Result<CompatiblePair, CliError> {
    let spec = PairSpec::parse(&v.to_string())?;
    let w = spec.w.ok_or_else(|| bad(file, "spec has no \"w\""))?;
    Ok(CompatiblePair::new(PeriodicShape::new(spec.shape()?)?, w)?)
}

/// `[[row, first column, [entries...]], ...]`.
fn tableau(file: &str, v: &Value) -> Result<Tableau, CliError> {
    let rows = v.as_array().ok_or_else(|| bad(file, "tableau must be a list of rows"))?;
    let mut parsed: Vec<(i64, i64, Vec<u32>)> = Vec::new();
    for row in rows {
        let (Some(r), Some(c), Some(entries)) = (row[0].as_i64(), row[1].as_i64(), row[2].as_array()) else {
            return Err(bad(file, "rows are [row, first column, [entries]]"));
        };
        let entries: Option<Vec<u32>> = entries.iter().map(|e| e.as_u64().map(|x| x as u32)).collect();
        parsed.push((r, c, entries.ok_or_else(|| bad(file, "entries must be positive integers"))?));
    }
    let borrowed: Vec<(i64, i64, &[u32])> = parsed.iter().map(|(r, c, e)| (*r, *c, e.as_slice())).collect();
    Ok(Tableau::from_rows(&borrowed)?)
}

/// Recomputes one fixture; `Ok(None)` on agreement, `Ok(Some(detail))` on
/// a mismatch.
fn check(file: &str, f: &Value) -> Result<Option<String>, CliError> {
    let kind = f["kind"].as_str().ok_or_else(|| bad(file, "missing \"kind\""))?;
    let limits = TransferLimits { max_dim: 200 };
    match kind {
        "transfer_matrix" => {
            let ts = build_transfer_system(&pair(file, &f["spec"])?, limits)?;
            let expected: Option<Vec<Vec<BigInt>>> =
                f["matrix"].as_array().ok_or_else(|| bad(file, "missing matrix"))?.iter().map(ints).collect();
            let expected = expected.ok_or_else(|| bad(file, "matrix entries must be integers"))?;
            Ok((ts.matrix.to_rows() != expected).then(|| format!("computed\n{}", ts.matrix.to_grid())))
        }
        "charpoly" => {
            let ts = build_transfer_system(&pair(file, &f["spec"])?, limits)?;
            let p = char_poly(&ts.matrix)?;
            let expected = ints(&f["charpoly"]).ok_or_else(|| bad(file, "charpoly must be integers"))?;
            Ok((p.coefficients() != expected.as_slice()).then(|| format!("computed {p}")))
        }
        "source_sink" => {
            let shape: Shape = f["shape"]
                .as_array()
                .ok_or_else(|| bad(file, "missing shape"))?
                .iter()
                .map(|c| Some(Cell::new(c[0].as_i64()?, c[1].as_i64()?)))
                .collect::<Option<Shape>>()
                .ok_or_else(|| bad(file, "shape cells are [row, col]"))?;
            let (src, sink) = (source_tableau(&shape)?, sink_tableau(&shape)?);
            let mut diffs = Vec::new();
            if src != tableau(file, &f["source"])? {
                diffs.push(format!("source computed\n{}", src.to_grid()));
            }
            if sink != tableau(file, &f["sink"])? {
                diffs.push(format!("sink computed\n{}", sink.to_grid()));
            }
            Ok((!diffs.is_empty()).then(|| diffs.join("\n")))
        }
        "column_words" => {
            let cases = f["cases"].as_array().ok_or_else(|| bad(file, "missing cases"))?;
            let mut diffs = Vec::new();
            for (i, case) in cases.iter().enumerate() {
                let word = tableau(file, &case["tableau"])?.column_word();
                let expected: Option<Vec<u32>> =
                    case["word"].as_array().map(|w| w.iter().filter_map(|x| x.as_u64().map(|x| x as u32)).collect());
                if expected.as_ref() != Some(&word.0) {
                    diffs.push(format!("case {i}: computed {word}"));
                }
            }
            Ok((!diffs.is_empty()).then(|| diffs.join("\n")))
        }
        other => Err(bad(file, &format!("unknown kind {other:?}"))),
    }
}

fn load(dir: Option<&Path>) -> Result<Vec<(String, String)>, CliError> {
    let Some(dir) = dir else {
        return Ok(BUNDLED.iter().map(|(n, t)| (n.to_string(), t.to_string())).collect());
    };
    let read_err = |e: std::io::Error| CliError::validation(format!("{}: {e}", dir.display()));
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(read_err)? {
        let path = entry.map_err(read_err)?.path();
        if path.extension().is_some_and(|e| e == "json") {
            let name = path.file_name().unwrap_or_default().to_string_lossy().into_owned();
            files.push((name, std::fs::read_to_string(&path).map_err(read_err)?));
        }
    }
    files.sort();
    Ok(files)
}

pub fn run(dir: Option<&Path>) -> Result<Report, CliError> {
    let mut r = Report::new("fixtures");
    let mut results = Vec::new();
    for (file, text) in load(dir)? {
        let f: Value = serde_json::from_str(&text).map_err(|e| bad(&file, &e.to_string()))?;
        let name = f["name"].as_str().unwrap_or(&file).to_string();
        let mismatch = check(&file, &f)?;
        r.line(format!("{} {name}", if mismatch.is_none() { "PASS" } else { "FAIL" }));
        if let Some(d) = &mismatch {
            for l in d.lines() {
                r.line(format!("    {l}"));
            }
            r.fail(Kind::Inconsistent);
        }
        results.push(json!({ "file": file, "name": name, "pass": mismatch.is_none(), "detail": mismatch }));
    }
    r.set("passed", results.iter().all(|x| x["pass"] == true));
    r.set("fixtures", results);
    Ok(r)
}
