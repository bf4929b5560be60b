use std::error::Error as StdError;
use std::fmt::Write as _;
use std::fs;

use broadcast_core::graph::{gamma_exact_with_budget, GraphExpr, ReportStatus};
use broadcast_core::pattern::{lattice_reception_profile_capped, min_density_search_traced};
use broadcast_core::{
    ball_bijection, ball_size, coverage, coverage_closed_form, delannoy, domination_lower_bound, genfunc_coefficients,
    is_dominating_tower, max_potential_d, reception_map, reception_table, shell_size, tuple_encode, verify_cycle_lemma,
    verify_torus_counterexample, vizing_scan, BroadcastSet, Error, FiniteGraph, GammaOutcome, GenFuncKind,
    GenFuncTable, GridDims, LatticePoint, Params, SublatticePattern, TowerPattern,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::report::Report;
use crate::Command;

type Result<T> = std::result::Result<T, Box<dyn StdError + Send + Sync>>;

fn params(t: u32, r: u32) -> Result<Params> {
    Ok(Params::new(t, r)?)
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>> {
    text.split(',')
        .map(|s| s.trim())
        .map(|s| s.parse::<T>().map_err(|_| format!("{what}: '{s}' is not a valid integer").into()))
        .collect()
}

fn parse_rows<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<Vec<T>>> {
    text.split(';').filter(|s| !s.trim().is_empty()).map(|row| parse_list(row, what)).collect()
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(T::to_string).collect()
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    strings(items).join(sep)
}

fn scalar(name: &str, inputs: &[(&str, String)], value: String) -> Report {
    let mut obj = serde_json::Map::new();
    for (k, v) in inputs {
        obj.insert(k.to_string(), json!(v.parse::<u64>().ok().map_or(json!(v), |n| json!(n))));
    }
    obj.insert(name.to_string(), json!(value));
    let mut header: Vec<&str> = inputs.iter().map(|(k, _)| *k).collect();
    header.push(name);
    let mut row: Vec<String> = inputs.iter().map(|(_, v)| v.clone()).collect();
    row.push(value.clone());
    Report::new(Value::Object(obj), &header, vec![row]).text(value)
}

pub fn execute(cmd: Command, progress: bool) -> Result<Report> {
    match cmd {
        Command::Shell { n, d } => {
            Ok(scalar("size", &[("n", n.to_string()), ("d", d.to_string())], shell_size(n, d).to_string()))
        }
        Command::Ball { n, d } => {
            Ok(scalar("size", &[("n", n.to_string()), ("d", d.to_string())], ball_size(n, d).to_string()))
        }
        Command::Delannoy { m, k } => {
            Ok(scalar("value", &[("m", m.to_string()), ("k", k.to_string())], delannoy(m, k).to_string()))
        }
        Command::Genfunc { kind, fixed, max_index } => genfunc(&kind, fixed, max_index),
        Command::Bijection { point, n, d } => bijection(&point, n, d),
        Command::Coverage { n, t, r } => {
            let p = params(t, r)?;
            let closed = match coverage_closed_form(n, p) {
                Ok(c) => Some(c.to_string()),
                Err(Error::ClosedFormDimension(_)) => None,
                Err(e) => return Err(e.into()),
            };
            let value = coverage(n, p).to_string();
            let json = json!({ "n": n, "t": t, "r": r, "coverage": value, "closed_form": closed });
            let row = vec![n.to_string(), t.to_string(), r.to_string(), value.clone(), closed.unwrap_or_default()];
            Ok(Report::new(json, &["n", "t", "r", "coverage", "closed_form"], vec![row]).text(value))
        }
        Command::LowerBound { dims, t, r } => {
            let p = params(t, r)?;
            let g = GridDims::new(parse_list(&dims, "--dims")?)?;
            let bound = domination_lower_bound(&g, p).to_string();
            let cov = coverage(g.n(), p).to_string();
            let json = json!({
                "dims": g.dims(), "t": t, "r": r,
                "vertices": g.volume().to_string(), "coverage": cov, "lower_bound": bound,
            });
            let row =
                vec![join(g.dims(), "x"), t.to_string(), r.to_string(), g.volume().to_string(), cov, bound.clone()];
            Ok(Report::new(json, &["dims", "t", "r", "vertices", "coverage", "lower_bound"], vec![row]).text(bound))
        }
        Command::MaxD { n, t, r } => {
            let p = params(t, r)?;
            let inputs = [("n", n.to_string()), ("t", t.to_string()), ("r", r.to_string())];
            Ok(scalar("max_d", &inputs, max_potential_d(n, p).to_string()))
        }
        Command::TowerCheck { t, r, d, e } => {
            let p = params(t, r)?;
            let tp = TowerPattern::new(d, e)?;
            let ok = is_dominating_tower(p, tp);
            let min = reception_table(p, tp).min_reception();
            let json = json!({ "pattern": tp.to_string(), "t": t, "r": r, "d": d, "e": e, "dominates": ok, "min_reception": min });
            let row = vec![t.to_string(), r.to_string(), d.to_string(), e.to_string(), ok.to_string(), min.to_string()];
            Ok(Report::new(json, &["t", "r", "d", "e", "dominates", "min_reception"], vec![row])
                .text(format!(
                    "{tp} {} for {p} (min reception {min})",
                    if ok { "dominates" } else { "does not dominate" }
                ))
                .verdict(ok))
        }
        Command::TowerTable { t, r, d, e } => {
            let p = params(t, r)?;
            let tp = TowerPattern::new(d, e)?;
            let profile = reception_table(p, tp);
            let mut header = vec!["row".to_string()];
            header.extend((0..d).map(|i| i.to_string()));
            let mut rows: Vec<Vec<String>> = profile
                .rows
                .iter()
                .flatten()
                .map(|row| std::iter::once(row.y.to_string()).chain(strings(&row.contributions)).collect())
                .collect();
            rows.push(std::iter::once("Sum".to_string()).chain(strings(&profile.receptions)).collect());
            let text = profile.to_text_table();
            let ok = profile.dominates();
            let mut report = Report::new(serde_json::to_value(&profile)?, &[], rows).text(text).verdict(ok);
            report.header = header;
            Ok(report)
        }
        Command::TowerSearch { t, r } => {
            let p = params(t, r)?;
            let trace = min_density_search_traced(p)?;
            let tp = trace.pattern;
            let row = vec![t.to_string(), r.to_string(), tp.d.to_string(), tp.e.to_string(), trace.ceiling.to_string()];
            Ok(Report::new(serde_json::to_value(&trace)?, &["t", "r", "d", "e", "ceiling"], vec![row])
                .text(format!("d={} e={}", tp.d, tp.e)))
        }
        Command::Table3 { tmax } => table3(tmax, progress),
        Command::LatticeCheck { t, r, basis, cap } => {
            let p = params(t, r)?;
            let rows: Vec<Vec<i64>> = parse_rows(&basis, "--basis")?;
            let n = rows.len();
            if n == 0 || rows.iter().any(|row| row.len() != n) {
                return Err(format!("--basis must be a square matrix, got {n} rows").into());
            }
            let columns: Vec<Vec<i64>> = (0..n).map(|j| rows.iter().map(|row| row[j]).collect()).collect();
            let sp = SublatticePattern::from_columns(&columns)?;
            let profile = lattice_reception_profile_capped(p, &sp, cap)?;
            let ok = profile.dominates();
            let min = profile.min_reception();
            let domain = sp.fundamental_domain();
            let json = json!({
                "pattern": sp.to_string(), "hnf": sp.basis(), "index": sp.index(),
                "t": t, "r": r, "dominates": ok, "min_reception": min,
                "receptions": domain.iter().zip(&profile.receptions)
                    .map(|(v, x)| json!({ "point": v, "reception": x })).collect::<Vec<_>>(),
            });
            let rows = domain.iter().zip(&profile.receptions).map(|(v, x)| vec![join(v, " "), x.to_string()]).collect();
            Ok(Report::new(json, &["point", "reception"], rows)
                .text(format!(
                    "{sp} index {} {} for {p} (min reception {min})",
                    sp.index(),
                    if ok { "dominates" } else { "does not dominate" }
                ))
                .verdict(ok))
        }
        Command::LatticeSearch3d { t, r, cap } => {
            let p = params(t, r)?;
            if progress {
                eprintln!("lattice-search3d: searching indices up to {cap} for {p}");
            }
            let found = broadcast_core::lattice_search_3d(p, cap)?;
            let json = json!({
                "t": t, "r": r, "cap": cap, "found": found.is_some(),
                "d": found.as_ref().map(|sp| sp.index()),
                "hnf": found.as_ref().map(|sp| sp.basis().to_vec()),
            });
            let d = found.as_ref().map(|sp| sp.index().to_string()).unwrap_or_default();
            let hnf = found.as_ref().map(|sp| sp.to_string()).unwrap_or_default();
            let text = match &found {
                Some(sp) => format!("d={} {sp}", sp.index()),
                None => format!("no dominating tower lattice with index <= {cap}"),
            };
            let row = vec![t.to_string(), r.to_string(), cap.to_string(), d, hnf];
            Ok(Report::new(json, &["t", "r", "cap", "d", "hnf"], vec![row]).text(text))
        }
        Command::Gamma { expr, t, r, size_cap, budget } => gamma(&expr, t, r, size_cap, budget),
        Command::CheckSet { expr, t, r, set } => check_set(&expr, t, r, &set),
        Command::VerifyLemma2 { t, r } => {
            let p = params(t, r)?;
            let rep = verify_cycle_lemma(p);
            let text = match rep.status {
                ReportStatus::NotApplicable => format!("not applicable: C_{} is not a simple cycle", rep.n),
                _ => format!(
                    "{}: gamma_{p}(C_{}) = {}, witness {{{}}} receptions [{}]",
                    status_word(rep.status),
                    rep.n,
                    rep.gamma.map_or("?".into(), |g| g.to_string()),
                    join(&rep.witness, ", "),
                    join(&rep.witness_receptions, ", ")
                ),
            };
            let row = vec![
                t.to_string(),
                r.to_string(),
                rep.n.to_string(),
                rep.gamma.map(|g| g.to_string()).unwrap_or_default(),
                rep.witness_dominates.to_string(),
                status_word(rep.status).into(),
            ];
            let exit = status_exit(rep.status);
            Ok(Report::new(
                serde_json::to_value(&rep)?,
                &["t", "r", "n", "gamma", "witness_dominates", "status"],
                vec![row],
            )
            .text(text)
            .exit(exit))
        }
        Command::VerifyTorus { t, r } => {
            let p = params(t, r)?;
            let rep = verify_torus_counterexample(p)?;
            let opt = |x: Option<usize>| x.map_or("?".into(), |g| g.to_string());
            let text = format!(
                "{}: gamma_{p}(C_{n} x C_{n}) = {} < gamma(C_{n})^2 = {}, min reception {} (predicted {})",
                status_word(rep.status),
                opt(rep.gamma_torus),
                opt(rep.vizing_bound),
                rep.min_reception,
                rep.predicted_min_reception,
                n = rep.n,
            );
            let row = vec![
                t.to_string(),
                r.to_string(),
                rep.n.to_string(),
                opt(rep.gamma_torus),
                opt(rep.gamma_cycle),
                rep.violates_vizing_analog.to_string(),
                rep.min_reception.to_string(),
                status_word(rep.status).into(),
            ];
            let header = ["t", "r", "n", "gamma_torus", "gamma_cycle", "violates", "min_reception", "status"];
            let exit = status_exit(rep.status);
            Ok(Report::new(serde_json::to_value(&rep)?, &header, vec![row]).text(text).exit(exit))
        }
        Command::VizingScan { pairs, t, r } => {
            let p = params(t, r)?;
            let src = fs::read_to_string(&pairs).map_err(|e| format!("cannot read {}: {e}", pairs.display()))?;
            let list = parse_pairs(&src)?;
            if progress {
                eprintln!("vizing-scan: {} pairs for {p}", list.len());
            }
            let rep = vizing_scan(&list, p);
            let cell = |b: Option<bool>| b.map(|x| x.to_string()).unwrap_or_default();
            let rows: Vec<Vec<String>> = rep
                .pairs
                .iter()
                .map(|pr| {
                    let g = pr.gammas.as_ref();
                    let num = |f: fn(&broadcast_core::graph::PairGammas) -> usize| {
                        g.map(|g| f(g).to_string()).unwrap_or_default()
                    };
                    vec![
                        pr.g.clone(),
                        pr.h.clone(),
                        num(|g| g.product_tr),
                        num(|g| g.product_t1),
                        num(|g| g.g_tr),
                        num(|g| g.h_tr),
                        num(|g| g.g_t1),
                        num(|g| g.h_t1),
                        cell(pr.conjecture1_g_h),
                        cell(pr.conjecture1_h_g),
                        cell(pr.conjecture2),
                        pr.error.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            let header = [
                "G", "H", "gxh_tr", "gxh_t1", "g_tr", "h_tr", "g_t1", "h_t1", "conj1_gh", "conj1_hg", "conj2", "error",
            ];
            let ok = rep.conjecture1_violations == 0 && rep.conjecture2_violations == 0;
            Ok(Report::new(serde_json::to_value(&rep)?, &header, rows).verdict(ok))
        }
    }
}

fn status_word(s: ReportStatus) -> &'static str {
    match s {
        ReportStatus::Pass => "pass",
        ReportStatus::Fail => "fail",
        ReportStatus::NotApplicable => "not-applicable",
    }
}

fn status_exit(s: ReportStatus) -> u8 {
    match s {
        ReportStatus::Pass => 0,
        ReportStatus::Fail => 1,
        ReportStatus::NotApplicable => 2,
    }
}

fn genfunc(kind: &str, fixed: Option<usize>, max_index: usize) -> Result<Report> {
    let k: GenFuncKind = kind.parse()?;
    let table = genfunc_coefficients(k, fixed, max_index)?;
    let json_coeffs: Value;
    let (header, rows, text): (&[&str], Vec<Vec<String>>, String) = match &table {
        GenFuncTable::Univariate(c) => {
            json_coeffs = json!(strings(c));
            let rows = c.iter().enumerate().map(|(i, x)| vec![i.to_string(), x.to_string()]).collect();
            (&["index", "coefficient"], rows, join(c, " "))
        }
        GenFuncTable::Bivariate(m) => {
            json_coeffs = json!(m.iter().map(|row| strings(row)).collect::<Vec<_>>());
            let rows = m
                .iter()
                .enumerate()
                .flat_map(|(i, row)| {
                    row.iter().enumerate().map(move |(j, x)| vec![i.to_string(), j.to_string(), x.to_string()])
                })
                .collect();
            let text = m.iter().map(|row| join(row, " ")).collect::<Vec<_>>().join("\n");
            (&["n", "d", "coefficient"], rows, text)
        }
    };
    let json = json!({ "kind": k.name(), "fixed": fixed, "max_index": max_index, "coefficients": json_coeffs });
    Ok(Report::new(json, header, rows).text(text))
}

fn bijection(point: &str, n: usize, d: usize) -> Result<Report> {
    let p = LatticePoint(parse_list(point, "--point")?);
    let image = ball_bijection(&p, n, d)?;
    let seq = tuple_encode(&p);
    let swapped = seq.swapped();
    let json = json!({
        "n": n, "d": d, "point": p, "tuples": seq.to_string(),
        "swapped": swapped.to_string(), "image": image,
    });
    let row = vec![join(&p.0, " "), seq.to_string(), swapped.to_string(), join(&image.0, " ")];
    let text = format!("({}) -> {seq} -> {swapped} -> ({})", join(&p.0, ","), join(&image.0, ","));
    Ok(Report::new(json, &["point", "tuples", "swapped", "image"], vec![row]).text(text))
}

/// Reciprocal minimum densities laid out with `t` down and `r` across.
pub fn table3_text(tmax: u32, grid: &[(u32, u32, TowerPattern)]) -> String {
    let cell = |s: &str| format!("{s:>5}");
    let mut out = cell("t\\r");
    for r in 1..=tmax {
        out += &cell(&r.to_string());
    }
    out.push('\n');
    for t in 1..=tmax {
        out += &cell(&t.to_string());
        for &(_, _, tp) in grid.iter().filter(|(tt, _, _)| *tt == t) {
            out += &cell(&tp.d.to_string());
        }
        out.push('\n');
    }
    out
}

fn table3(tmax: u32, progress: bool) -> Result<Report> {
    if tmax == 0 {
        return Err("--tmax must be at least 1".into());
    }
    let cells: Vec<(u32, u32)> = (1..=tmax).flat_map(|t| (1..=t).map(move |r| (t, r))).collect();
    let found: Vec<Result<TowerPattern>> = cells
        .par_iter()
        .map(|&(t, r)| {
            let tp = broadcast_core::min_density_search(params(t, r)?)?;
            if progress {
                eprintln!("table3: ({t},{r}) -> d={}", tp.d);
            }
            Ok(tp)
        })
        .collect();
    let mut grid = Vec::with_capacity(cells.len());
    for (&(t, r), tp) in cells.iter().zip(found) {
        grid.push((t, r, tp?));
    }
    let json = json!({
        "tmax": tmax,
        "entries": grid.iter().map(|(t, r, tp)| json!({ "t": t, "r": r, "d": tp.d, "e": tp.e })).collect::<Vec<_>>(),
    });
    let rows =
        grid.iter().map(|(t, r, tp)| vec![t.to_string(), r.to_string(), tp.d.to_string(), tp.e.to_string()]).collect();
    Ok(Report::new(json, &["t", "r", "d", "e"], rows).text(table3_text(tmax, &grid)))
}

/// Per-vertex receptions as a grid for graphs with 1- or 2-coordinate labels;
/// broadcast vertices are marked with `*`.
fn reception_grid(g: &FiniteGraph, rec: &[u64], set: &BroadcastSet) -> Option<String> {
    let dims = g.label(0).len();
    if dims > 2 {
        return None;
    }
    let extent = |c: usize| (0..g.order()).map(|v| g.label(v)[c]).max().unwrap_or(0) + 1;
    let (rows, cols) = if dims == 1 { (1, extent(0)) } else { (extent(0), extent(1)) };
    let cell = |v: usize| format!("{}{}", rec[v], if set.vertices().contains(&v) { "*" } else { "" });
    let width = (0..g.order()).map(|v| cell(v).len()).max().unwrap_or(1);
    let mut out = String::new();
    for a in 0..rows {
        let line: Vec<String> = (0..cols)
            .map(|b| {
                let label: Vec<usize> = if dims == 1 { vec![b] } else { vec![a, b] };
                g.vertex_by_label(&label).map_or(" ".repeat(width), |v| format!("{:>width$}", cell(v)))
            })
            .collect();
        let _ = writeln!(out, "{}", line.join(" ").trim_end());
    }
    Some(out)
}

fn labels_json(g: &FiniteGraph, set: &BroadcastSet) -> Value {
    json!(set.vertices().iter().map(|&v| g.label(v).to_vec()).collect::<Vec<_>>())
}

fn gamma(expr: &str, t: u32, r: u32, size_cap: Option<usize>, budget: u64) -> Result<Report> {
    let p = params(t, r)?;
    let e = GraphExpr::parse(expr)?;
    let g = e.build();
    let out = gamma_exact_with_budget(&g, p, size_cap.unwrap_or(g.order()), budget);
    let shown = match &out {
        GammaOutcome::Exact { witness, .. } => witness.clone(),
        GammaOutcome::CapExceeded { upper_bound, .. } => upper_bound.clone(),
    };
    let rec = reception_map(&g, &shown, t)?;
    let mut json = json!({
        "expression": e.to_string(), "params": p, "vertices": g.order(), "edges": g.edge_count(),
    });
    let obj = json.as_object_mut().expect("object literal");
    let (gamma_cell, status, text_head) = match &out {
        GammaOutcome::Exact { gamma, witness } => {
            obj.insert("status".into(), json!("exact"));
            obj.insert("gamma".into(), json!(gamma));
            obj.insert("witness".into(), json!(witness));
            obj.insert("witness_labels".into(), labels_json(&g, witness));
            (gamma.to_string(), "exact", format!("gamma_{p}({e}) = {gamma}"))
        }
        GammaOutcome::CapExceeded { reason, proven_lower_bound, upper_bound } => {
            obj.insert("status".into(), json!("cap-exceeded"));
            obj.insert("gamma".into(), Value::Null);
            obj.insert("reason".into(), serde_json::to_value(reason)?);
            obj.insert("proven_lower_bound".into(), json!(proven_lower_bound));
            obj.insert("upper_bound".into(), json!(upper_bound.len()));
            obj.insert("upper_bound_set".into(), json!(upper_bound));
            (
                String::new(),
                "cap-exceeded",
                format!(
                    "gamma_{p}({e}) not settled: {proven_lower_bound} <= gamma <= {} (search stopped)",
                    upper_bound.len()
                ),
            )
        }
    };
    obj.insert("receptions".into(), json!(rec));
    let mut text = text_head;
    text.push('\n');
    if let Some(grid) = reception_grid(&g, &rec, &shown) {
        text.push_str(&grid);
    }
    let row = vec![e.to_string(), t.to_string(), r.to_string(), gamma_cell, join(shown.vertices(), " "), status.into()];
    Ok(Report::new(json, &["expression", "t", "r", "gamma", "witness", "status"], vec![row]).text(text))
}

fn check_set(expr: &str, t: u32, r: u32, set: &str) -> Result<Report> {
    let p = params(t, r)?;
    let e = GraphExpr::parse(expr)?;
    let g = e.build();
    let labels: Vec<Vec<usize>> = parse_rows(set, "--set")?;
    let bs = BroadcastSet::from_labels(&g, &labels).ok_or_else(|| format!("--set names a vertex not in {e}"))?;
    let rec = reception_map(&g, &bs, t)?;
    let ok = rec.iter().all(|&x| x >= u64::from(r));
    let json = json!({
        "expression": e.to_string(), "params": p, "set": bs, "set_labels": labels_json(&g, &bs),
        "dominates": ok, "receptions": rec,
    });
    let rows = (0..g.order()).map(|v| vec![join(g.label(v), " "), rec[v].to_string()]).collect();
    let mut text = format!("{} for {p}\n", if ok { "dominating" } else { "not dominating" });
    if let Some(grid) = reception_grid(&g, &rec, &bs) {
        text.push_str(&grid);
    }
    Ok(Report::new(json, &["vertex", "reception"], rows).text(text).verdict(ok))
}

fn parse_pairs(src: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (lineno, raw) in src.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = if line.contains(',') {
            line.split(',').map(str::trim).collect()
        } else {
            line.split_whitespace().collect()
        };
        match parts.as_slice() {
            [g, h] if !g.is_empty() && !h.is_empty() => out.push((g.to_string(), h.to_string())),
            _ => return Err(format!("pairs file line {}: expected two graph expressions", lineno + 1).into()),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_file_formats() {
        let src = "# header\nC4, C4\nP2 P3  # trailing\n\n";
        assert_eq!(parse_pairs(src).unwrap(), vec![("C4".into(), "C4".into()), ("P2".into(), "P3".into())]);
        assert!(parse_pairs("C4\n").is_err());
    }

    #[test]
    fn list_parsing() {
        assert_eq!(parse_list::<i64>("0, 2,-3", "x").unwrap(), vec![0, 2, -3]);
        assert!(parse_list::<i64>("1,,2", "x").is_err());
        assert_eq!(parse_rows::<i64>("18,5;0,1", "x").unwrap(), vec![vec![18, 5], vec![0, 1]]);
    }
}
