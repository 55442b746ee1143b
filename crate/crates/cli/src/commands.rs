use num_bigint::BigInt;
use serde_json::{json, Value};

use iwalink_core::catalog::{bezout_certificate, bezout_link, torres_check, FamilyDelta};
use iwalink_core::greenberg::pseudonull_verdict;
use iwalink_core::repro::run_all;

use crate::render::{fields, table, Output};
use crate::source::{self, Source, FAMILIES};
use crate::{CliError, SourceArgs, TowerArgs};

fn optional<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or("undefined".to_string(), ToString::to_string)
}

pub fn invariants(args: &TowerArgs) -> Result<Output, CliError> {
    let tower = source::tower(args)?;
    let inv = tower.invariants()?;
    let reduced = tower.reduced().poly.to_string();
    let json = json!({
        "lambda": inv.lambda,
        "mu": inv.mu,
        "nu": inv.nu,
        "v": inv.v,
        "n0": inv.n0,
        "vanishing": inv.vanishing_levels,
        "reduced_poly": reduced,
    });
    let vanishing = if inv.vanishing_levels.is_empty() {
        "none".to_string()
    } else {
        inv.vanishing_levels.iter().map(u32::to_string).collect::<Vec<_>>().join(", ")
    };
    let text = fields(&[
        ("reduced polynomial", reduced.clone()),
        ("p", tower.p().to_string()),
        ("v", inv.v.to_string()),
        ("lambda", inv.lambda.to_string()),
        ("mu", inv.mu.to_string()),
        ("nu", optional(&inv.nu)),
        ("n0", inv.n0.to_string()),
        ("vanishing levels", vanishing),
    ]);
    Ok(Output { json, text })
}

pub fn orders(args: &TowerArgs, nmax: u32) -> Result<Output, CliError> {
    let tower = source::tower(args)?;
    let growth = tower.orders(nmax)?;
    let rows: Vec<Value> = growth
        .rows
        .iter()
        .map(|r| json!({"n": r.n, "order": r.order.to_string(), "e": r.e}))
        .collect();
    let cells: Vec<Vec<String>> = growth
        .rows
        .iter()
        .map(|r| vec![r.n.to_string(), r.order.to_string(), optional(&r.e)])
        .collect();
    Ok(Output {
        json: json!({ "rows": rows }),
        text: table(&["n", "order", "e"], &cells),
    })
}

pub fn family_list() -> Output {
    let json = json!({
        "families": FAMILIES
            .iter()
            .map(|(name, params, about)| json!({"name": name, "params": params, "description": about}))
            .collect::<Vec<_>>()
    });
    let width = FAMILIES.iter().map(|f| f.0.len()).max().unwrap_or(0);
    let text = FAMILIES
        .iter()
        .map(|(name, params, about)| {
            let params = if params.is_empty() { String::new() } else { format!(" [{params}]") };
            format!("{name:<width$}  {about}{params}\n")
        })
        .collect();
    Output { json, text }
}

pub fn family_make(args: &SourceArgs) -> Result<Output, CliError> {
    let fam = source::family(args)?;
    let (delta, reduced) = match &fam.delta {
        FamilyDelta::Link(d) => (Some(d.to_string()), None),
        FamilyDelta::Reduced { reduced, .. } => (None, Some(reduced.poly.to_string())),
    };
    let json = json!({
        "family": fam.kind.to_string(),
        "components": fam.components(),
        "delta": delta,
        "reduced_poly": reduced,
        "linking_number": fam.linking_number.as_ref().map(BigInt::to_string),
        "recommended_z": fam.recommended_z,
    });
    let z = fam
        .recommended_z
        .as_ref()
        .map(|z| z.iter().map(i64::to_string).collect::<Vec<_>>().join(","));
    let mut rows = vec![("family", fam.kind.to_string()), ("components", fam.components().to_string())];
    if let Some(d) = delta {
        rows.push(("delta", d));
    }
    if let Some(f) = reduced {
        rows.push(("reduced polynomial", f));
    }
    rows.push(("linking number", optional(&fam.linking_number)));
    rows.push(("recommended z", optional(&z)));
    Ok(Output { json, text: fields(&rows) })
}

pub fn torres(args: &SourceArgs, l12: Option<&str>) -> Result<Output, CliError> {
    let source = Source::from_args(args)?;
    let delta = source
        .link_delta()
        .ok_or_else(|| CliError::Usage("torres needs a two-variable link polynomial".into()))?;
    let l12: BigInt = match (l12, &source) {
        (Some(s), _) => s
            .parse()
            .map_err(|_| CliError::Usage(format!("--l12 must be an integer, got {s:?}")))?,
        (None, Source::Family(f)) => f
            .linking_number
            .clone()
            .ok_or_else(|| CliError::Usage("this family has no linking number; pass --l12".into()))?,
        (None, Source::Delta(_)) => return Err(CliError::Usage("--delta needs --l12".into())),
    };
    let verdict = torres_check(delta, &l12);
    let json = json!({"passed": verdict.passed, "reasons": verdict.reasons, "l12": l12.to_string()});
    let mut text = format!("Torres conditions {}\n", if verdict.passed { "hold" } else { "fail" });
    for r in &verdict.reasons {
        text += &format!("  {r}\n");
    }
    Ok(Output { json, text })
}

pub fn pseudonull(args: &SourceArgs) -> Result<Output, CliError> {
    let source = Source::from_args(args)?;
    let delta = source
        .link_delta()
        .ok_or_else(|| CliError::Usage("pseudonull needs a link polynomial, not a reduced family".into()))?;
    let v = pseudonull_verdict(delta)?;
    let witness = v.witness.as_ref().map(ToString::to_string);
    let json = json!({
        "verdict": v.verdict.as_str(),
        "witness": witness,
        "relies_on_caller_assertion": v.relies_on_caller_assertion,
    });
    let mut rows = vec![("verdict", v.verdict.as_str().to_string())];
    if let Some(w) = witness {
        rows.push(("witness", w));
    }
    rows.push(("relies on caller assertion", v.relies_on_caller_assertion.to_string()));
    Ok(Output { json, text: fields(&rows) })
}

pub fn bezout(m: u32, s: Option<u32>) -> Result<Output, CliError> {
    let cert = bezout_certificate(m)?;
    let link = s.map(|s| bezout_link(&cert, s)).transpose()?;
    let delta = link.as_ref().and_then(|f| f.link_delta()).map(ToString::to_string);
    let json = json!({
        "m": m,
        "N": cert.n.display_in("x"),
        "B": cert.b.display_in("x"),
        "F": cert.f.display_in("x"),
        "G": cert.g.display_in("x"),
        "resultant": cert.res.to_string(),
        "delta": delta,
    });
    let mut rows = vec![
        ("N", cert.n.display_in("x")),
        ("B", cert.b.display_in("x")),
        ("F", cert.f.display_in("x")),
        ("G", cert.g.display_in("x")),
        ("Res(N, B)", cert.res.to_string()),
    ];
    if let Some(d) = delta {
        rows.push(("delta", d));
    }
    Ok(Output { json, text: fields(&rows) })
}

pub fn repro() -> Result<Output, CliError> {
    let checks = run_all();
    let passed = checks.iter().all(|c| c.passed);
    let json = json!({
        "passed": passed,
        "checks": checks
            .iter()
            .map(|c| json!({"name": c.name, "expected": c.expected, "actual": c.actual, "passed": c.passed}))
            .collect::<Vec<_>>(),
    });
    let cells: Vec<Vec<String>> = checks
        .iter()
        .map(|c| {
            let status = if c.passed { "ok" } else { "FAIL" };
            vec![status.to_string(), c.name.clone(), c.actual.clone()]
        })
        .collect();
    let mut text = table(&["status", "check", "value"], &cells);
    let failed = checks.iter().filter(|c| !c.passed).count();
    text += &format!("{} of {} checks reproduced\n", checks.len() - failed, checks.len());
    let out = Output { json, text };
    if passed {
        Ok(out)
    } else {
        Err(CliError::Mismatch(out))
    }
}
