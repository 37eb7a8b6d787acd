use std::collections::BTreeMap;

use cyclo_schur::combin::{enumerate_hook_multipartitions, enumerate_weights, HookProfile, Multipartition, WeightPair};
use cyclo_schur::golden;
use cyclo_schur::hecke::HeckeAlgebra;
use cyclo_schur::ring::SpecializationTarget;
use cyclo_schur::schur::SchurAlgebra;
use cyclo_schur::supermod::{filtration_multiplicities, PermSupermodule};
use cyclo_schur::supertab::{enumerate_sstd, hook_tableau};
use cyclo_schur::symm::count_standard;
use serde_json::{json, Value};

use crate::output::Report;
use crate::{CliError, Limits, ProfileArgs};

type Res<T> = Result<T, CliError>;

fn weights(args: &ProfileArgs, profile: &HookProfile) -> Res<Vec<WeightPair>> {
    if args.weights.is_empty() {
        return Ok(enumerate_weights(profile, args.n));
    }
    args.weights
        .iter()
        .map(|s| {
            let w: WeightPair = s.parse()?;
            w.check(profile)?;
            if w.size() != args.n {
                return Err(CliError::Config(format!("weight {w} has size {}, expected {}", w.size(), args.n)));
            }
            Ok(w)
        })
        .collect()
}

fn target(spec: &str, m: usize) -> Res<SpecializationTarget> {
    let t = SpecializationTarget::parse_spec(spec)?;
    t.validate()?;
    if t.num_params() < m {
        return Err(CliError::Config(format!("specialization '{spec}' gives {} of the {m} parameters", t.num_params())));
    }
    Ok(t)
}

fn generic(m: usize) -> SpecializationTarget {
    SpecializationTarget::generic(m, 0)
}

fn module_rank(profile: &HookProfile, w: &WeightPair) -> usize {
    filtration_multiplicities(profile, w).iter().map(|(lam, c)| c * count_standard(lam) as usize).sum()
}

fn check_module_limit(profile: &HookProfile, ws: &[WeightPair], limits: Limits) -> Res<()> {
    let total: usize = ws.iter().map(|w| module_rank(profile, w)).sum();
    if total > limits.module {
        return Err(CliError::Scale(format!("scale limit exceeded: dim ⊕M = {total} > {}", limits.module)));
    }
    Ok(())
}

fn schur(args: &ProfileArgs, limits: Limits) -> Res<SchurAlgebra> {
    let profile = args.profile()?;
    let ws = weights(args, &profile)?;
    Ok(SchurAlgebra::with_limits(&profile, args.n, ws, limits.hecke, limits.module)?)
}

fn profile_json(p: &HookProfile, n: usize) -> Value {
    json!({ "bk": p.bk, "bl": p.bl, "n": n })
}

pub fn hooks(args: &ProfileArgs) -> Res<Report> {
    let profile = args.profile()?;
    let shapes = enumerate_hook_multipartitions(&profile, args.n);
    let rows: Vec<Vec<String>> = shapes
        .iter()
        .map(|lam| Ok(vec![lam.to_string(), profile.split(lam)?.to_string()]))
        .collect::<Res<_>>()?;
    let list: Vec<Value> = rows.iter().map(|r| json!({ "shape": r[0], "split": r[1] })).collect();
    Ok(Report::new("hooks", json!({ "profile": profile_json(&profile, args.n), "count": shapes.len(), "shapes": list }))
        .table(&["shape", "split"], rows))
}

pub fn dim_hecke(m: usize, n: usize, limits: Limits) -> Res<Report> {
    if n == 0 {
        return Err(CliError::Config("--n must be positive".into()));
    }
    let h = HeckeAlgebra::with_limit(m, n, limits.hecke)?;
    let (dim, closed) = h.dim_check();
    Ok(Report::new("dim-hecke", json!({ "m": m, "n": n, "dim": dim, "closed": closed }))
        .table(&["m", "n", "dim", "closed"], vec![vec![m.to_string(), n.to_string(), dim.to_string(), closed.to_string()]])
        .text(format!("{dim}\n"))
        .ok(closed))
}

pub fn supermod(args: &ProfileArgs, limits: Limits) -> Res<Report> {
    let profile = args.profile()?;
    let ws = weights(args, &profile)?;
    check_module_limit(&profile, &ws, limits)?;
    let h = HeckeAlgebra::with_limit(profile.m(), args.n, limits.hecke)?;
    let mut list = Vec::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for w in &ws {
        let module = PermSupermodule::new(&h, &profile, w)?;
        let rank = module.basis_rank();
        ok &= rank == module.expected_rank();
        let mult = filtration_multiplicities(&profile, w);
        let mult_json: BTreeMap<String, usize> = mult.iter().map(|(l, c)| (l.to_string(), *c)).collect();
        let mult_text: Vec<String> = mult.iter().map(|(l, c)| format!("{l}:{c}")).collect();
        rows.push(vec![w.to_string(), module.parity.to_string(), rank.to_string(), mult_text.join(" ")]);
        list.push(json!({ "weight": w.to_string(), "parity": module.parity, "rank": rank, "multiplicities": mult_json }));
    }
    Ok(Report::new("supermod", json!({ "profile": profile_json(&profile, args.n), "weights": list }))
        .table(&["weight", "parity", "rank", "multiplicities"], rows)
        .ok(ok))
}

pub fn schur_dims(args: &ProfileArgs, spec: Option<&str>, limits: Limits) -> Res<Report> {
    let s = schur(args, limits)?;
    let tgt = spec.map(|sp| target(sp, s.profile.m())).transpose()?;
    let simple = tgt.as_ref().map(|t| s.simple_dims(t)).transpose()?;
    let (dim, formula, rank) = (s.dim(), s.dimension_formula(), s.basis_rank());
    let mut rows = Vec::new();
    let mut shapes = Vec::new();
    for lam in &s.shapes {
        let count: usize = s.weights.iter().map(|w| enumerate_sstd(lam, w, &s.profile).len()).sum();
        let f = simple.as_ref().map(|d| d[lam]);
        rows.push(vec![lam.to_string(), count.to_string(), (count * count).to_string(), f.map_or(String::new(), |d| d.to_string())]);
        shapes.push(json!({ "shape": lam.to_string(), "tableaux": count, "contribution": count * count, "simple_dim": f }));
    }
    let ok = dim == formula && rank == dim;
    let text = format!(
        "dim S = {dim}\nformula = {formula}\nbasis rank = {rank}\n{}",
        crate::output::Report::new("", Value::Null)
            .table(&["shape", "tableaux", "contribution", "simple_dim"], rows.clone())
            .render(crate::output::Format::Text)
            .map_err(CliError::Internal)?
    );
    Ok(Report::new(
        "schur-dims",
        json!({ "profile": profile_json(&s.profile, args.n), "spec": spec, "dim": dim, "formula": formula, "basis_rank": rank, "shapes": shapes }),
    )
    .table(&["shape", "tableaux", "contribution", "simple_dim"], rows)
    .text(text)
    .ok(ok))
}

pub fn schur_gram(args: &ProfileArgs, shape: &str, spec: Option<&str>, limits: Limits) -> Res<Report> {
    let s = schur(args, limits)?;
    let lam: Multipartition = shape.parse()?;
    let g = s.gram(&lam)?;
    let rank_generic = g.rank_at(&generic(s.profile.m()))?;
    let rank_spec = spec.map(|sp| target(sp, s.profile.m()).and_then(|t| Ok(g.rank_at(&t)?))).transpose()?;
    let names: Vec<String> = g.index.iter().map(|(t, _)| t.to_string()).collect();
    let entries: Vec<Vec<String>> = g.entries.iter().map(|r| r.iter().map(|p| p.to_string()).collect()).collect();
    let mut headers = vec!["tableau".to_string()];
    headers.extend(names.iter().cloned());
    let rows: Vec<Vec<String>> = names.iter().zip(&entries).map(|(n, r)| std::iter::once(n.clone()).chain(r.iter().cloned()).collect()).collect();
    let index: Vec<Value> = g.index.iter().map(|(t, w)| json!({ "tableau": t.to_string(), "weight": w.to_string() })).collect();
    let t0 = hook_tableau(&lam, &s.profile)?;
    let unit = g.index.iter().position(|(t, _)| *t == t0).is_some_and(|i| g.entries[i][i].is_one());
    let symmetric = g.is_symmetric();
    Ok(Report::new(
        "schur-gram",
        json!({
            "profile": profile_json(&s.profile, args.n),
            "shape": lam.to_string(),
            "index": index,
            "entries": entries,
            "symmetric": symmetric,
            "initial_entry_is_one": unit,
            "rank_generic": rank_generic,
            "spec": spec,
            "rank_spec": rank_spec,
        }),
    )
    .table(&headers, rows)
    .ok(symmetric && unit))
}

pub fn verify_cellular(args: &ProfileArgs, limits: Limits) -> Res<Report> {
    let s = schur(args, limits)?;
    let r = s.cellularity_check()?;
    let rows = vec![
        vec!["products".to_string(), r.products.to_string()],
        vec!["star_violations".to_string(), r.star_violations.len().to_string()],
        vec!["independence_violations".to_string(), r.independence_violations.len().to_string()],
        vec!["ideal_violations".to_string(), r.ideal_violations.len().to_string()],
    ];
    let mut payload = serde_json::to_value(&r).map_err(|e| CliError::Internal(e.to_string()))?;
    payload["profile"] = profile_json(&s.profile, args.n);
    Ok(Report::new("schur-verify-cellular", payload).table(&["check", "count"], rows).ok(r.passed()))
}

pub fn verify_duality(args: &ProfileArgs, spec: &str, limits: Limits) -> Res<Report> {
    let s = schur(args, limits)?;
    let t = target(spec, s.profile.m())?;
    let r = s.double_centralizer_check(&t)?;
    let mut payload = serde_json::to_value(&r).map_err(|e| CliError::Internal(e.to_string()))?;
    payload["profile"] = profile_json(&s.profile, args.n);
    payload["spec"] = json!(spec);
    payload["centralizes"] = json!(r.centralizes());
    let rows = vec![
        vec!["dim_v".to_string(), r.dim_v.to_string()],
        vec!["dim_schur".to_string(), r.dim_schur.to_string()],
        vec!["commutant_dim".to_string(), r.commutant_dim.to_string()],
        vec!["dim_hecke".to_string(), r.dim_hecke.to_string()],
        vec!["hecke_image_rank".to_string(), r.hecke_image_rank.to_string()],
        vec!["bicommutant_dim".to_string(), r.bicommutant_dim.to_string()],
        vec!["faithful".to_string(), r.faithful.to_string()],
        vec!["centralizes".to_string(), r.centralizes().to_string()],
    ];
    Ok(Report::new("schur-verify-duality", payload).table(&["quantity", "value"], rows).ok(r.centralizes()))
}

pub fn verify_all(args: &ProfileArgs, limits: Limits) -> Res<Report> {
    let profile = args.profile()?;
    let ws = weights(args, &profile)?;
    check_module_limit(&profile, &ws, limits)?;
    let h = HeckeAlgebra::with_limit(profile.m(), args.n, limits.hecke)?;
    let mut steps: Vec<(&str, bool, String)> = Vec::new();

    let (dim, closed) = h.dim_check();
    let (count, rank) = h.murphy_basis_check()?;
    steps.push(("hecke", closed && count == dim && rank == dim, format!("dim {dim}, {count} Murphy elements of rank {rank}")));

    let mut bad = Vec::new();
    for w in &ws {
        let module = PermSupermodule::new(&h, &profile, w)?;
        if module.basis_rank() != module.expected_rank() {
            bad.push(format!("rank {w}"));
        }
        if !module.intersection_check(&h) {
            bad.push(format!("intersection {w}"));
        }
        if !module.annihilator_check(&h) {
            bad.push(format!("annihilator {w}"));
        }
    }
    steps.push(("supermodules", bad.is_empty(), format!("{} weights, failures {bad:?}", ws.len())));

    let s = SchurAlgebra::with_limits(&profile, args.n, ws, limits.hecke, limits.module)?;
    let (sd, formula, srank) = (s.dim(), s.dimension_formula(), s.basis_rank());
    let member = s.membership_check()?;
    steps.push(("schur-basis", sd == formula && srank == sd && member, format!("dim {sd}, formula {formula}, rank {srank}")));

    let c = s.cellularity_check()?;
    let v = c.star_violations.len() + c.independence_violations.len() + c.ideal_violations.len();
    steps.push(("cellularity", c.passed(), format!("{} products, {v} violations", c.products)));

    let gen = generic(profile.m());
    let mut bad = Vec::new();
    for lam in &s.shapes {
        let g = s.gram(lam)?;
        let t0 = hook_tableau(lam, &profile)?;
        let unit = g.index.iter().position(|(t, _)| *t == t0).is_some_and(|i| g.entries[i][i].is_one());
        if !g.is_symmetric() || !unit || g.rank_at(&gen)? != g.index.len() {
            bad.push(lam.to_string());
        }
    }
    steps.push(("gram", bad.is_empty(), format!("{} shapes, failures {bad:?}", s.shapes.len())));

    let d = s.double_centralizer_check(&gen)?;
    steps.push((
        "duality",
        d.centralizes(),
        format!("End_H = {} of dim S {}, bicommutant {} of image {}, faithful {}", d.commutant_dim, d.dim_schur, d.bicommutant_dim, d.hecke_image_rank, d.faithful),
    ));

    let g = golden::suite();
    steps.push(("golden", g.iter().all(|r| r.pass), format!("{} examples", g.len())));

    let ok = steps.iter().all(|(_, p, _)| *p);
    let list: Vec<Value> = steps.iter().map(|(n, p, d)| json!({ "check": n, "pass": p, "detail": d })).collect();
    let rows = steps.iter().map(|(n, p, d)| vec![n.to_string(), if *p { "PASS" } else { "FAIL" }.to_string(), d.clone()]).collect();
    Ok(Report::new("verify-all", json!({ "profile": profile_json(&profile, args.n), "checks": list }))
        .table(&["check", "result", "detail"], rows)
        .ok(ok))
}

pub fn golden() -> Report {
    let results = golden::suite();
    let ok = results.iter().all(|r| r.pass);
    let mut text = String::new();
    for r in &results {
        text += &format!("{} {}\n", if r.pass { "PASS" } else { "FAIL" }, r.name);
        if !r.pass {
            text += &format!("--- expected\n{}+++ actual\n{}", r.expected, r.actual);
        }
    }
    let rows = results.iter().map(|r| vec![r.name.clone(), if r.pass { "PASS" } else { "FAIL" }.to_string()]).collect();
    let list: Vec<Value> = results
        .iter()
        .map(|r| if r.pass { json!({ "name": r.name, "pass": true }) } else { json!(r) })
        .collect();
    Report::new("golden", json!({ "examples": list })).table(&["example", "result"], rows).text(text).ok(ok)
}
