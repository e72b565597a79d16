use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};

use ordsize::constructions::{build_gr, cyclic_triangle_3graph};
use ordsize::hbuilder::{build_h, check_h};
use ordsize::hg::{io, random_hypergraph, Hypergraph};
use ordsize::order_size::{find_mf_subset, size_spectrum, SpectrumMode, DEFAULT_SPECTRUM_CAP};
use ordsize::search::{is_homogeneous, max_homogeneous_budgeted};
use ordsize::stepdown::{check_factorization, step_once, step_to_pairs};
use ordsize::structure::{main_structure, MainOutcome, StructureParams};
use ordsize::values::{
    count_values_lemma32, count_values_lemma33, f_general, f_lemma32, for_each_composition, g_r_table, transform_params,
    CubicParams, COMPOSITION_CAP,
};
use ordsize::verify::{run_acceptance, suite_appendix, suite_blowup, suite_eq1, suite_weights, AppendixParams, SuiteReport};
use ordsize::{Budget, Rational};

use crate::cli::{Command, GenKind, ValuesKind, VerifyKind};
use crate::output::{Outcome, Status};
use crate::settings::Settings;

/// Commands whose result depends on --seed.
pub fn uses_seed(c: &Command) -> bool {
    match c {
        Command::Gen { .. } | Command::Structure { .. } => true,
        Command::Spectrum { samples, f, .. } => samples.is_some() || f.is_some(),
        Command::Verify { suite } => !matches!(suite, VerifyKind::Acceptance { .. }),
        _ => false,
    }
}

pub fn run(c: &Command, s: &Settings) -> Result<Outcome> {
    match c {
        Command::Gen { kind } => gen(kind, s),
        Command::Spectrum { input, m, samples, f, cap } => spectrum(&load(input)?, *m, *samples, *f, *cap, s),
        Command::Homog { input } => homog(&load(input)?, s),
        Command::Stepdown { input, l, k } => stepdown(&load(input)?, *l, *k),
        Command::Buildh { r, m, f, sweep, step, check } => {
            if *sweep {
                buildh_sweep(*r, *m, *step)
            } else {
                buildh(*r, *m, f.expect("clap requires --f without --sweep"), *check)
            }
        }
        Command::Values { which } => values(which),
        Command::Structure { input, m, s: star, t, chain_len, theta, delta } => {
            let mut p = StructureParams::for_m(*m);
            if let Some(v) = star {
                p.s = *v;
                p.t = *v;
            }
            if let Some(v) = t {
                p.t = *v;
            }
            if let Some(v) = chain_len {
                p.chain_len = *v;
            }
            if let Some(v) = theta {
                p.theta = *v;
            }
            if let Some(v) = delta {
                p.delta = *v;
            }
            p.seed = s.seed;
            p.exact_limit = s.exact_limit;
            structure(&load(input)?, *m, &p, s)
        }
        Command::Verify { suite } => verify(suite, s),
        Command::Replay { .. } => unreachable!("replay is dispatched in main"),
    }
}

fn load(p: &Path) -> Result<Hypergraph> {
    io::load(p).with_context(|| format!("loading {}", p.display()))
}

/// `5`, `3..6` or `3..=6`, both ends inclusive.
pub fn parse_range(s: &str) -> Result<Vec<usize>> {
    let bad = || anyhow!(ordsize::Error::invalid(format!("bad range `{s}`; expected N or LO..HI")));
    let (lo, hi) = match s.split_once("..") {
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

pub fn parse_params(s: &str) -> Result<CubicParams<Rational>> {
    let vals: Vec<Rational> = s
        .split(',')
        .map(|t| t.trim().parse::<Rational>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| anyhow!(ordsize::Error::invalid(format!("bad parameter list `{s}`: {e}"))))?;
    let [a, b, c, d, e]: [Rational; 5] =
        vals.try_into().map_err(|_| anyhow!(ordsize::Error::invalid("expected five parameters a,b,c,d,e")))?;
    Ok(CubicParams::new(a, b, c, d, e))
}

fn graph_outcome(h: &Hypergraph, mut report: Value) -> Result<Outcome> {
    report["r"] = json!(h.r());
    report["n"] = json!(h.n());
    report["edges"] = json!(h.num_edges());
    let text = io::write_hg(h);
    let mut o = Outcome::new(report)?;
    o.files.push(("graph.hg".into(), text.clone().into_bytes()));
    o.stdout_override = Some(text);
    Ok(o)
}

fn gen(kind: &GenKind, s: &Settings) -> Result<Outcome> {
    match kind {
        GenKind::Cyclic { n } => {
            let h = cyclic_triangle_3graph(*n, s.seed)?;
            graph_outcome(&h, json!({"kind": "cyclic", "seed": s.seed}))
        }
        GenKind::Gr { n, r } => {
            let h = build_gr(*n, *r, s.seed)?.hypergraph()?;
            graph_outcome(&h, json!({"kind": "gr", "seed": s.seed}))
        }
        GenKind::Random { r, n, p } => {
            let h = random_hypergraph(*r, *n, *p, s.seed)?;
            graph_outcome(&h, json!({"kind": "random", "p": p, "seed": s.seed}))
        }
    }
}

fn spectrum(h: &Hypergraph, m: usize, samples: Option<u64>, f: Option<u64>, cap: Option<u64>, s: &Settings) -> Result<Outcome> {
    if let Some(f) = f {
        let budget = Budget::from_option(s.budget);
        let found = find_mf_subset(h, m, f, &budget, s.seed)?;
        let text = vec![match &found {
            Some(set) => format!("({m}, {f})-subset: {:?}", set.as_slice()),
            None => format!("no {m}-subset spans exactly {f} edges (exhaustive)"),
        }];
        let rows = found.iter().map(|set| vec![f.to_string(), format!("{:?}", set.as_slice())]).collect();
        let report = json!({"m": m, "f": f, "found": found.is_some(), "set": found, "evaluations": budget.used()});
        return Ok(Outcome::new(report)?.table(&["f", "set"], rows).text(text));
    }
    let mode = match samples {
        Some(count) => SpectrumMode::Sampled { count, seed: s.seed },
        None => SpectrumMode::Exhaustive,
    };
    let rep = size_spectrum(h, m, mode, cap.unwrap_or(DEFAULT_SPECTRUM_CAP))?;
    let rows = rep.witnesses.iter().map(|(f, set)| vec![f.to_string(), format!("{:?}", set.as_slice())]).collect();
    let claim = if samples.is_some() { "lower bound (sampled)" } else { "exact" };
    let text = vec![
        format!("m = {m}, {} subsets examined", rep.subsets_examined),
        format!("s(H; {m}) = {} ({claim})", rep.s()),
        format!("edge counts: {:?}", rep.achieved),
    ];
    let mut report = serde_json::to_value(&rep)?;
    report["s"] = json!(rep.s());
    Ok(Outcome::new(report)?.table(&["f", "witness"], rows).text(text))
}

fn homog(h: &Hypergraph, s: &Settings) -> Result<Outcome> {
    let budget = Budget::from_option(s.budget);
    let w = max_homogeneous_budgeted(h, s.exact_limit, &budget);
    let ok = is_homogeneous(h, w.set.as_slice(), w.kind);
    let text = vec![format!(
        "{:?} of size {} ({}): {:?}",
        w.kind,
        w.set.len(),
        if w.exact { "exact" } else { "heuristic" },
        w.set.as_slice()
    )];
    let report = json!({"size": w.set.len(), "witness": w, "verified": ok, "evaluations": budget.used()});
    let mut o = Outcome::new(report)?.text(text);
    if !ok {
        o = o.violation(json!({"homogeneous_check_failed": w}));
    } else if budget.exhausted() {
        o.status = Status::BudgetExhausted;
    }
    Ok(o)
}

fn stepdown(h: &Hypergraph, l: usize, k: Option<usize>) -> Result<Outcome> {
    let res = match k {
        None => step_once(h, l)?,
        Some(k) => step_to_pairs(h, k, l)?,
    };
    // the core already checked this; a second pass guards the report itself
    let check = check_factorization(h, &res);
    let mut text = vec![format!("X = {:?}", res.x), format!("χ on {}-subsets, {} ones", res.chi.arity, res.chi.ones.len())];
    for st in &res.transcript {
        text.push(format!("stage arity {} reversed {} length {}", st.arity, st.reversed, st.length));
    }
    let mut report = serde_json::to_value(&res)?;
    if let Some(g) = res.chi_graph() {
        report["chi_graph"] = serde_json::to_value(&g)?;
    }
    let rows = res.chi.ones.iter().map(|t| vec![format!("{t:?}")]).collect();
    let o = Outcome::new(report)?.table(&["chi_one"], rows).text(text);
    Ok(match check {
        Ok(()) => o,
        Err(e) => o.violation(json!({"error": e.to_string(), "x": res.x})),
    })
}

fn buildh(r: usize, m: usize, f: u128, check: bool) -> Result<Outcome> {
    let hc = build_h(r, m, f)?;
    let checks = check_h(&hc)?;
    let edges = hc.h.edges();
    let report = json!({
        "r": r,
        "m": m,
        "f": f,
        "d": hc.d,
        "edges": edges,
        "cert": hc.cert,
        "complemented": hc.complemented,
        "gap": hc.gap,
        "advisory": hc.advisory,
        "claims": hc.claims,
        "checks": checks,
    });
    let text = vec![
        format!("H on {} vertices, {} edges{}", hc.h.n(), edges.len(), if hc.complemented { ", complemented" } else { "" }),
        format!("weight {} (target {}): {}", checks.weight, hc.target_weight(), if checks.weight_ok { "ok" } else { "MISMATCH" }),
        format!("degrees {}, certificate {}, leaves {}", ok(checks.degrees_ok), ok(checks.cert_ok), ok(checks.leaves_ok)),
        format!("claims {}{}", ok(hc.claims.all_pass()), if hc.advisory { " (advisory: m < 5r²)" } else { "" }),
    ];
    let rows = edges.iter().map(|(a, b)| vec![a.to_string(), b.to_string()]).collect();
    let o = Outcome::new(report)?.table(&["u", "v"], rows).text(text);
    let claims_bad = hc.claims.in_range && !hc.claims.all_pass();
    Ok(if check && (!checks.all_pass() || claims_bad) {
        o.violation(json!({"r": r, "m": m, "f": f, "checks": checks, "claims": hc.claims}))
    } else {
        o
    })
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

fn buildh_sweep(r: usize, m: usize, step: Option<u128>) -> Result<Outcome> {
    let total = ordsize::combin::binom_u128(m as u64, r as u64).ok_or_else(|| ordsize::Error::invalid("C(m, r) overflows"))?;
    let half = total / 2;
    let step = step.unwrap_or((half / 200).max(1));
    if step == 0 {
        return Err(ordsize::Error::invalid("--step must be positive").into());
    }
    let mut rows = Vec::new();
    let mut bad = Vec::new();
    let (mut built, mut failed) = (0u64, 0u64);
    let mut f = 0u128;
    while f <= half {
        match build_h(r, m, f) {
            Ok(hc) => {
                let checks = check_h(&hc)?;
                let good = checks.all_pass() && (!hc.claims.in_range || hc.claims.all_pass());
                built += 1;
                if !good {
                    bad.push(json!({"f": f, "checks": checks, "claims": hc.claims}));
                }
                rows.push(vec![f.to_string(), "built".into(), good.to_string(), String::new()]);
            }
            Err(e @ (ordsize::Error::Precondition(_) | ordsize::Error::Invalid(_))) => {
                failed += 1;
                rows.push(vec![f.to_string(), "refused".into(), String::new(), e.to_string()]);
            }
            Err(e) => return Err(e.into()),
        }
        f += step;
    }
    let report = json!({
        "r": r, "m": m, "step": step, "total": total,
        "built": built, "refused": failed, "failing": bad.len(),
        "rows": rows.iter().map(|row| json!({"f": row[0], "status": row[1], "checks_pass": row[2], "error": row[3]})).collect::<Vec<_>>(),
    });
    let text = vec![format!("r = {r}, m = {m}: {built} built, {failed} refused, {} failing checks (step {step})", bad.len())];
    let o = Outcome::new(report)?.table(&["f", "status", "checks_pass", "error"], rows).text(text);
    Ok(if bad.is_empty() { o } else { o.violation(Value::Array(bad)) })
}

fn values(which: &ValuesKind) -> Result<Outcome> {
    match which {
        ValuesKind::Lemma32 { params, m } => {
            let p = parse_params(params)?;
            let mut reps = Vec::new();
            for m in parse_range(m)? {
                reps.push(count_values_lemma32(&p, m)?);
            }
            let rows = reps.iter().map(|r| vec![r.m.to_string(), r.count.to_string(), ratio(r.count, r.m)]).collect();
            let text = reps.iter().map(|r| format!("m = {:>2}: {} values", r.m, r.count)).collect();
            Ok(Outcome::new(&reps)?.table(&["m", "count", "count_over_m2"], rows).text(text))
        }
        ValuesKind::Lemma33 { m } => {
            let reps: Vec<_> = parse_range(m)?.into_iter().map(count_values_lemma33).collect();
            let rows = reps.iter().map(|r| vec![r.m.to_string(), r.count.to_string(), ratio(r.count, r.m)]).collect();
            let text = reps.iter().map(|r| format!("m = {:>2}: {} values", r.m, r.count)).collect();
            Ok(Outcome::new(&reps)?.table(&["m", "count", "count_over_m2"], rows).text(text))
        }
        ValuesKind::Identity { params, m } => identity(&parse_params(params)?, &parse_range(m)?),
        ValuesKind::GrTable { r, mmax } => gr_table(&parse_range(r)?, *mmax),
    }
}

fn ratio(count: u64, m: usize) -> String {
    if m == 0 {
        String::new()
    } else {
        format!("{:.4}", count as f64 / (m * m) as f64)
    }
}

fn identity(p: &CubicParams<Rational>, ms: &[usize]) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut bad = Vec::new();
    for &m in ms {
        if m > COMPOSITION_CAP {
            return Err(ordsize::Error::CapExceeded(format!("m = {m} above the composition cap {COMPOSITION_CAP}")).into());
        }
        let g = transform_params(p, m as u64);
        let (mut checked, mut wrong) = (0u64, 0u64);
        for_each_composition(m, &mut |x, _| {
            checked += 1;
            let (lhs, rhs) = (f_lemma32(p, x), f_general(&g, m as u64, x));
            if lhs != rhs {
                wrong += 1;
                if bad.len() < 20 {
                    bad.push(json!({"m": m, "x": x, "lemma32": lhs.to_string(), "general": rhs.to_string()}));
                }
            }
        });
        let gp = [&g.a, &g.b, &g.c, &g.d, &g.e].map(|v| v.to_string()).join(",");
        rows.push(vec![m.to_string(), gp, checked.to_string(), wrong.to_string()]);
    }
    let params = [&p.a, &p.b, &p.c, &p.d, &p.e].map(|v| v.to_string());
    let report = json!({
        "params": params,
        "rows": rows.iter().map(|r| json!({"m": r[0], "general": r[1], "checked": r[2], "mismatches": r[3]})).collect::<Vec<_>>(),
    });
    let text =
        rows.iter().map(|r| format!("m = {:>2}: general ({}) {} compositions, {} mismatches", r[0], r[1], r[2], r[3])).collect();
    let o = Outcome::new(report)?.table(&["m", "general_params", "checked", "mismatches"], rows).text(text);
    Ok(if bad.is_empty() { o } else { o.violation(Value::Array(bad)) })
}

fn gr_table(rs: &[usize], mmax: Option<usize>) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut bad = Vec::new();
    for &r in rs {
        if r < 2 {
            return Err(ordsize::Error::invalid("g_r needs r ≥ 2").into());
        }
        let top = mmax.unwrap_or(2 * r).max(2 * r);
        let table = g_r_table(r, top);
        let pow = (1u128 << r).to_string();
        if table[2 * r].0.to_string() != pow {
            bad.push(json!({"r": r, "g_r(2r)": table[2 * r].0.to_string(), "expected": pow}));
        }
        let ms: Vec<usize> = if mmax.is_some() { (0..=top).collect() } else { vec![2 * r] };
        for m in ms {
            let (g, parts) = &table[m];
            let parts = parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("+");
            rows.push(vec![r.to_string(), m.to_string(), g.to_string(), parts]);
        }
    }
    let report = json!({
        "rows": rows.iter().map(|r| json!({"r": r[0], "m": r[1], "g": r[2], "partition": r[3]})).collect::<Vec<_>>(),
    });
    let text = rows.iter().map(|r| format!("g_{}({}) = {}  [{}]", r[0], r[1], r[2], r[3])).collect();
    let o = Outcome::new(report)?.table(&["r", "m", "g", "partition"], rows).text(text);
    Ok(if bad.is_empty() { o } else { o.violation(Value::Array(bad)) })
}

fn structure(h: &Hypergraph, m: usize, p: &StructureParams, s: &Settings) -> Result<Outcome> {
    let budget = Budget::from_option(s.budget);
    let outcome = main_structure(h, m, p, &budget)?;
    let report = json!({"m": m, "params": p, "outcome": outcome});
    match &outcome {
        MainOutcome::Structure(ms) => {
            let check = ms.verify(h);
            let text = vec![
                format!("item {:?}{}", item_name(ms), if ms.complemented { " in the complement" } else { "" }),
                format!("checked triples: {:?}", ms.digest),
            ];
            let o = Outcome::new(report)?.text(text);
            Ok(match check {
                Ok(_) => o,
                Err(e) => o.violation(json!({"error": e.to_string(), "structure": ms})),
            })
        }
        MainOutcome::Homogeneous { witness, .. } => {
            let text =
                vec![format!("no structure; {:?} of size {}: {:?}", witness.kind, witness.set.len(), witness.set.as_slice())];
            Ok(Outcome::new(report)?.text(text))
        }
        MainOutcome::BudgetReport { used, .. } => {
            let mut o = Outcome::new(report)?.text(vec![format!("budget exhausted after {used} evaluations")]);
            o.status = Status::BudgetExhausted;
            Ok(o)
        }
    }
}

fn item_name(ms: &ordsize::structure::MainStructure) -> &'static str {
    match ms.item {
        ordsize::structure::Item::A(_) => "a",
        ordsize::structure::Item::B(_) => "b",
    }
}

fn suite_outcome(rep: SuiteReport) -> Result<Outcome> {
    let mut text = vec![format!(
        "{}: {} ({} cases, {} failures)",
        rep.suite,
        if rep.passed { "PASS" } else { "FAIL" },
        rep.cases,
        rep.failure_count
    )];
    text.extend(rep.notes.iter().map(|n| format!("  {n}")));
    text.extend(rep.failures.iter().map(|f| format!("  failure: {f}")));
    let rows = vec![vec![rep.suite.clone(), rep.passed.to_string(), rep.cases.to_string(), rep.failure_count.to_string()]];
    let witnesses = json!({"suite": rep.suite, "failures": rep.failures, "witnesses": rep.witnesses});
    let passed = rep.passed;
    let o = Outcome::new(&rep)?.table(&["suite", "passed", "cases", "failures"], rows).text(text);
    Ok(if passed { o } else { o.violation(witnesses) })
}

fn verify(suite: &VerifyKind, s: &Settings) -> Result<Outcome> {
    match suite {
        VerifyKind::Appendix { samples, colorings } => {
            let p = AppendixParams { gr_seeds: (s.seed..s.seed + colorings).collect(), samples: *samples, ..Default::default() };
            suite_outcome(suite_appendix(&p))
        }
        VerifyKind::Eq1 { trials } => suite_outcome(suite_eq1(*trials, s.seed)),
        VerifyKind::Blowup { instances } => suite_outcome(suite_blowup(*instances, s.seed)),
        VerifyKind::Weights { graphs } => suite_outcome(suite_weights(*graphs, s.seed)),
        VerifyKind::Acceptance { only } => {
            if let Some(&bad) = only.iter().find(|&&i| i == 0 || i > ordsize::verify::CRITERIA.len()) {
                bail!(ordsize::Error::invalid(format!("no criterion {bad}")));
            }
            let rep = run_acceptance(only)?;
            let mut text: Vec<String> = rep.criteria.iter().map(|c| c.line()).collect();
            text.push(format!("{} of {} criteria pass", rep.criteria.iter().filter(|c| c.passed).count(), rep.criteria.len()));
            let rows = rep
                .criteria
                .iter()
                .map(|c| {
                    vec![
                        c.id.to_string(),
                        c.passed.to_string(),
                        c.title.clone(),
                        c.report.failures.first().cloned().unwrap_or_default(),
                    ]
                })
                .collect();
            let failing: Vec<Value> = rep
                .criteria
                .iter()
                .filter(|c| !c.passed)
                .map(|c| json!({"id": c.id, "failures": c.report.failures, "witnesses": c.report.witnesses}))
                .collect();
            let o = Outcome::new(&rep)?.table(&["id", "passed", "title", "first_failure"], rows).text(text);
            Ok(if failing.is_empty() { o } else { o.violation(Value::Array(failing)) })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..6").unwrap(), vec![3, 4, 5, 6]);
        assert_eq!(parse_range("3..=4").unwrap(), vec![3, 4]);
        assert_eq!(parse_range("7").unwrap(), vec![7]);
        assert!(parse_range("6..3").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn params() {
        let p = parse_params("1,-1,1/2,0,3").unwrap();
        assert_eq!(p.c.to_string(), "1/2");
        assert_eq!(p.b.to_string(), "-1");
        assert!(parse_params("1,2,3").is_err());
    }
}
