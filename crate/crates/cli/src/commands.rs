use std::io::Read;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use periodic_syt::json::{big, big_vec, cells};
use periodic_syt::recurrence::{charpoly_json, checked_windows, observed_valid_from};
use periodic_syt::symmetry::subset_json;
use periodic_syt::transfer::build_transfer_system_by_enumeration;
use periodic_syt::{
    build_syt_poset, build_transfer_system, char_poly, compress, count_syt, equivalence_partition,
    find_redundant_subsets, minimal_recurrence, recurrence_from_charpoly, sink_tableau, source_tableau,
    verify_recurrence, verify_row_identity, Cell, CompatiblePair, PairSpec, PeriodicShape, Recurrence, Shape,
    TransferLimits, TransferSystem,
};
use serde_json::{json, Value};

use crate::error::{CliError, Kind};
use crate::report::Report;
use crate::Method;

pub struct Context {
    pub spec: Option<PathBuf>,
    pub w: Option<u32>,
    pub limit_cells: usize,
    pub max_dim: usize,
}

impl Context {
    fn load(&self) -> Result<PairSpec, CliError> {
        let path = self.spec.as_ref().ok_or_else(|| CliError::validation("--spec is required"))?;
        let text = if path.as_os_str() == "-" {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::validation(e.to_string()))?;
            s
        } else {
            std::fs::read_to_string(path).map_err(|e| CliError::validation(format!("{}: {e}", path.display())))?
        };
        Ok(PairSpec::parse(&text)?)
    }

    fn shift(&self, spec: &PairSpec) -> Option<u32> {
        self.w.or(spec.w)
    }

    fn pair(&self) -> Result<CompatiblePair, CliError> {
        let spec = self.load()?;
        let w = self
            .shift(&spec)
            .ok_or_else(|| CliError::validation("no shift number: pass --w or set \"w\" in the spec"))?;
        let period = PeriodicShape::new(spec.shape()?)?;
        Ok(CompatiblePair::new(period, w)?)
    }

    fn limits(&self) -> TransferLimits {
        TransferLimits { max_dim: self.max_dim }
    }
}

fn cell(c: Cell) -> Value {
    json!([c.row, c.col])
}

pub fn shape_check(ctx: &Context) -> Result<Report, CliError> {
    let spec = ctx.load()?;
    let shape = spec.shape()?;
    let mut r = Report::new("shape-check");
    r.set("cells", cells(&shape));
    r.block("shape", &shape.to_ascii());
    let period = match PeriodicShape::new(shape) {
        Ok(p) => p,
        Err(e) => {
            r.set("valid", false);
            r.set("error", e.to_string());
            r.field("valid", format!("no ({e})"));
            r.fail(Kind::Validation);
            return Ok(r);
        }
    };
    r.set("valid", true);
    r.field("valid", "yes");
    r.set("a", cell(period.top_left()));
    r.set("b", cell(period.bottom_left()));
    r.field("a", period.top_left());
    r.field("b", period.bottom_left());
    let Some(w) = ctx.shift(&spec) else {
        r.line("no shift number given; pass --w to check compatibility");
        return Ok(r);
    };
    r.set("w", w);
    r.field("w", w);
    let step = period.shift_vector(w);
    r.set("shift_vector", cell(step));
    r.field("shift vector", step);
    if let Err(e) = period.compatibility(w) {
        r.set("compatible", false);
        r.set("reason", e.to_string());
        r.field("compatible", format!("no ({e})"));
        r.fail(Kind::Validation);
        return Ok(r);
    }
    r.set("compatible", true);
    r.field("compatible", "yes");
    let two = period.generate_shifted(w, 2)?;
    r.set("two_copies", cells(&two));
    r.block("two copies", &two.to_ascii());
    let pair = CompatiblePair::new(period, w)?;
    let g = pair.geometry()?;
    r.set("index_shape", cells(&g.index));
    r.set("coefficient_shape", cells(&g.coefficient));
    r.set("n0", g.n0);
    r.block("index shape", &g.index.to_ascii());
    r.block("coefficient shape", &g.coefficient.to_ascii());
    r.field("n0", g.n0);
    Ok(r)
}

pub fn count(ctx: &Context, (lo, hi): (usize, usize), method: Method) -> Result<Report, CliError> {
    let pair = ctx.pair()?;
    let mut r = Report::new("count");
    r.set("w", pair.w());
    r.set("method", format!("{method:?}").to_lowercase());
    let ts = match method {
        Method::Brute => None,
        _ => Some(build_transfer_system(&pair, ctx.limits())?),
    };
    if let Some(ts) = &ts {
        r.set("n0", ts.n0);
        r.field("n0", ts.n0);
        if method == Method::Transfer && lo < ts.n0 {
            return Err(periodic_syt::TransferError::BelowRange { n: lo, n0: ts.n0 }.into());
        }
    }
    let mut rows = Vec::new();
    let mut all_agree = true;
    r.line(format!("{:>4}  {}", "n", "count"));
    for n in lo..=hi {
        let brute = match method {
            Method::Transfer => None,
            // order-ideal counting; no enumeration, so no cell cap
            _ => Some(BigInt::from(count_syt(&pair.shifted(n)?))),
        };
        let transfer = match &ts {
            Some(ts) if n >= ts.n0 => Some(ts.count(n)?),
            _ => None,
        };
        let agree = match (&brute, &transfer) {
            (Some(a), Some(b)) => Some(a == b),
            _ => None,
        };
        if agree == Some(false) {
            all_agree = false;
        }
        let shown = |x: &Option<BigInt>| x.as_ref().map_or("-".to_string(), |v| v.to_string());
        match method {
            Method::Both => r.line(format!(
                "{n:>4}  brute {}  transfer {}  {}",
                shown(&brute),
                shown(&transfer),
                match agree {
                    Some(true) => "equal",
                    Some(false) => "MISMATCH",
                    None => "below n0",
                }
            )),
            _ => r.line(format!("{n:>4}  {}", shown(&brute.clone().or(transfer.clone())))),
        }
        let mut row = json!({ "n": n });
        if let Some(b) = &brute {
            row["brute"] = big(b);
        }
        if let Some(t) = &transfer {
            row["transfer"] = big(t);
        }
        if let Some(a) = agree {
            row["agree"] = a.into();
        }
        rows.push(row);
    }
    r.set("rows", rows);
    if method == Method::Both {
        r.set("all_agree", all_agree);
        if !all_agree {
            r.line("brute force and transfer counts disagree");
            r.fail(Kind::Inconsistent);
        }
    }
    Ok(r)
}

/// Best lumping among the found redundant subsets, checked before use.
fn best_compression(
    pair: &CompatiblePair,
    ts: &TransferSystem,
    budget: usize,
) -> Result<(Value, TransferSystem, usize), CliError> {
    let found = find_redundant_subsets(pair, budget)?;
    let best = found.first().ok_or_else(|| CliError::inconsistent("the empty subset was not accepted"))?;
    let part = equivalence_partition(ts, &best.subset);
    if !verify_row_identity(ts, &part)? {
        return Err(CliError::inconsistent(format!(
            "rows differ within a class of redundant subset {}",
            best.subset.cells()
        )));
    }
    let c = compress(ts, &part)?;
    Ok((subset_json(&best.subset, &part, Some(&c)), c, found.len()))
}

pub fn transfer(ctx: &Context, with_compression: bool, budget: usize, cross_check: bool) -> Result<Report, CliError> {
    let pair = ctx.pair()?;
    let ts = build_transfer_system(&pair, ctx.limits())?;
    let mut r = Report::new("transfer");
    if cross_check {
        let slow = build_transfer_system_by_enumeration(&pair, ctx.limits(), ctx.limit_cells)?;
        let same = slow == ts;
        r.set("cross_check", same);
        r.field("enumeration cross-check", if same { "agrees" } else { "MISMATCH" });
        if !same {
            r.fail(Kind::Inconsistent);
        }
    }
    r.set("system", ts.to_json());
    r.block("index shape", &ts.geometry.index.to_ascii());
    r.field("dim", ts.dim());
    r.field("n0", ts.n0);
    let basis: Vec<String> = ts.basis.iter().enumerate().map(|(i, b)| format!("{i}: {}", b.column_word())).collect();
    r.block("basis (column words)", &basis.join("\n"));
    r.block("matrix", &ts.matrix.to_grid());
    r.field("v0", ts.v0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
    if with_compression {
        let (payload, c, candidates) = best_compression(&pair, &ts, budget)?;
        r.set("compression", payload);
        r.field("redundant subsets found", candidates);
        r.field("compressed dim", c.dim());
        r.block("compressed matrix", &c.matrix.to_grid());
    }
    Ok(r)
}

fn recurrence_json(rec: &Recurrence, terms: &[BigInt], start: i64) -> Value {
    let mut v = rec.to_json();
    v["verified"] = verify_recurrence(rec, terms, start).into();
    v["checked_terms"] = checked_windows(rec, terms, start).into();
    v["observed_valid_from"] = json!(observed_valid_from(rec, terms, start));
    v
}

/// Char-poly recurrence of a system, verified on its own terms.
fn analyse(ts: &TransferSystem, len: usize, r: &mut Report, label: &str) -> Result<Value, CliError> {
    let p = char_poly(&ts.matrix)?;
    let proven = (ts.n0 + ts.dim()) as i64;
    let rec = recurrence_from_charpoly(&p, proven)?;
    let terms = ts.terms(len);
    let start = ts.n0 as i64;
    let verified = verify_recurrence(&rec, &terms, start);
    let minimal = minimal_recurrence(&terms, start)?;
    let mut out = json!({
        "n0": ts.n0,
        "dim": ts.dim(),
        "charpoly": charpoly_json(&p),
        "charpoly_text": p.to_string(),
        "recurrence": recurrence_json(&rec, &terms, start),
        "thresholds": {
            "proven": proven,
            "observed": observed_valid_from(&rec, &terms, start),
        },
        "terms": { "from": ts.n0, "values": big_vec(&terms) },
    });
    r.field(&format!("{label}characteristic polynomial"), &p);
    r.field(&format!("{label}recurrence"), &rec);
    if rec.trailing_zeros() > 0 {
        r.field(
            &format!("{label}order"),
            format!("{} ({} after dropping {} zero coefficients)", rec.order(), rec.effective_order(), rec.trailing_zeros()),
        );
    }
    r.field(
        &format!("{label}verified"),
        format!("{verified} on {} terms", checked_windows(&rec, &terms, start)),
    );
    r.field(
        &format!("{label}holds from"),
        format!(
            "n >= {} proven, n >= {} observed",
            proven,
            observed_valid_from(&rec, &terms, start).map_or("?".into(), |n| n.to_string())
        ),
    );
    if !verified {
        r.fail(Kind::Inconsistent);
    }
    match &minimal {
        Some(m) => {
            out["minimal"] = recurrence_json(m, &terms, start);
            r.field(&format!("{label}minimal recurrence"), m);
            if m.effective_order() > rec.effective_order() {
                r.fail(Kind::Inconsistent);
            }
        }
        None => {
            out["minimal"] = Value::Null;
            r.field(&format!("{label}minimal recurrence"), "not determined by the generated terms");
        }
    }
    Ok(out)
}

pub fn recurrence(ctx: &Context, terms: Option<usize>, with_compression: bool, budget: usize) -> Result<Report, CliError> {
    let pair = ctx.pair()?;
    let ts = build_transfer_system(&pair, ctx.limits())?;
    let len = terms.unwrap_or(2 * ts.dim() + 20);
    let mut r = Report::new("recurrence");
    r.set("w", pair.w());
    r.field("dim", ts.dim());
    r.field("n0", ts.n0);
    let full = analyse(&ts, len, &mut r, "")?;
    r.set("full", full);
    if with_compression {
        let (payload, c, _) = best_compression(&pair, &ts, budget)?;
        r.field("compressed dim", c.dim());
        let mut compressed = analyse(&c, len, &mut r, "compressed ")?;
        let same = c.terms(len) == ts.terms(len + 1)[1..];
        compressed["subset"] = payload["subset"].clone();
        compressed["classes"] = payload["classes"].clone();
        compressed["matches_uncompressed"] = same.into();
        r.field("compressed terms match", same);
        if !same {
            r.fail(Kind::Inconsistent);
        }
        r.set("compressed", compressed);
    }
    Ok(r)
}

pub fn poset(ctx: &Context, dot: Option<&Path>, max_tableaux: usize) -> Result<Report, CliError> {
    let shape: Shape = ctx.load()?.shape()?;
    let poset = build_syt_poset(&shape, max_tableaux)?;
    let src = source_tableau(&shape)?;
    let sink = sink_tableau(&shape)?;
    let (mins, maxs) = (poset.minimal(), poset.maximal());
    let word = |i: usize| poset.tableaux[i].column_word().0;
    let ok = mins.len() == 1
        && maxs.len() == 1
        && poset.tableaux[mins[0]] == src
        && poset.tableaux[maxs[0]] == sink;
    let mut r = Report::new("poset");
    r.set("size", poset.len());
    r.set("arcs", poset.arcs.len());
    r.set("minimal", mins.iter().map(|&i| word(i)).collect::<Vec<_>>());
    r.set("maximal", maxs.iter().map(|&i| word(i)).collect::<Vec<_>>());
    r.set("source", src.to_json());
    r.set("sink", sink.to_json());
    r.set("extremes_match", ok);
    r.field("tableaux", poset.len());
    r.field("covering arcs", poset.arcs.len());
    r.block("source", &src.to_grid());
    r.block("sink", &sink.to_grid());
    r.field("unique minimum is the source and maximum the sink", ok);
    if !ok {
        r.fail(Kind::Inconsistent);
    }
    if let Some(path) = dot {
        let marks: Vec<(usize, &str)> = mins.iter().map(|&i| (i, "source")).chain(maxs.iter().map(|&i| (i, "sink"))).collect();
        let text = poset.to_dot(&marks);
        if path.as_os_str() == "-" {
            r.line(text.trim_end());
            r.set("dot", text);
        } else {
            std::fs::write(path, text).map_err(|e| CliError::validation(format!("{}: {e}", path.display())))?;
            r.field("dot written to", path.display());
        }
    }
    Ok(r)
}
