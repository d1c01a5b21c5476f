use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use gag_core::format::{model_to_json, serialize_model, ModelDocument};
use gag_core::regularity::{intra_witness, IntraWitness};
use gag_core::search::{self, canonicalize, SearchSpec};
use gag_core::subset::{
    generated_left_ideal, generated_right_ideal, generated_two_sided_ideal, sweep_cap_from_env,
};
use gag_core::theorems::formula::{Binding, Value};
use gag_core::theorems::{run_suite_configured, suite_exit_code, SuiteConfig, SuiteDocument};
use gag_core::{
    GammaGroupoid, IdealKind, Law, LawWitness, Status, Subset, TheoremId, TheoremReport,
};
use serde::Serialize;

use crate::input::load_model;
use crate::{CliError, EXIT_FAIL, EXIT_GUARD, EXIT_OK};

type Out<'a> = &'a mut dyn Write;

fn json_line(out: Out, value: &impl Serialize) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)
        .map_err(|e| CliError::Data(format!("serializing output: {e}")))?;
    writeln!(out)?;
    Ok(())
}

fn instance_count(g: &GammaGroupoid, law: Law) -> u64 {
    (g.order() as u64).pow(law.element_arity() as u32)
        * (g.gammas() as u64).pow(law.gamma_arity() as u32)
}

fn render_witness(g: &GammaGroupoid, w: &LawWitness) -> String {
    let (lhs, rhs) = w.law.evaluate(g, &w.elements, &w.gammas);
    let names = |xs: &[usize], f: &dyn Fn(usize) -> String| {
        xs.iter().map(|&x| f(x)).collect::<Vec<_>>().join(", ")
    };
    format!(
        "elements ({}), operators ({}): {} ≠ {}",
        names(&w.elements, &|x| g.element_name(x).to_string()),
        names(&w.gammas, &|k| g.gamma_name(k).to_string()),
        g.element_name(lhs),
        g.element_name(rhs)
    )
}

#[derive(Serialize)]
#[serde(rename_all = "kebab-case")]
struct LawReport {
    law: Law,
    holds: bool,
    instances: u64,
    violation: Option<LawWitness>,
}

#[derive(Serialize)]
#[serde(rename_all = "kebab-case")]
struct CheckDocument<'a> {
    model_hash: String,
    elements: Vec<String>,
    gammas: Vec<String>,
    laws: &'a [LawReport],
    left_identities: Vec<String>,
}

pub fn check(out: Out, model: &str, json: bool) -> Result<u8, CliError> {
    let g = load_model(model)?;
    let laws: Vec<LawReport> = Law::ALL
        .iter()
        .map(|&law| {
            let violation = g.violation(law);
            LawReport {
                law,
                holds: violation.is_none(),
                instances: instance_count(&g, law),
                violation,
            }
        })
        .collect();
    let identities: Vec<String> = g
        .left_identities()
        .into_iter()
        .map(|e| g.element_name(e).to_string())
        .collect();
    if json {
        json_line(
            out,
            &CheckDocument {
                model_hash: gag_core::theorems::model_hash(&g),
                elements: g.labels().elements.clone(),
                gammas: g.labels().gammas.clone(),
                laws: &laws,
                left_identities: identities.clone(),
            },
        )?;
    } else {
        writeln!(
            out,
            "order {} with {} operator{}",
            g.order(),
            g.gammas(),
            if g.gammas() == 1 { "" } else { "s" }
        )?;
        for l in &laws {
            writeln!(
                out,
                "{:<15} {:<5} ({} instances)",
                l.law.name(),
                l.holds,
                l.instances
            )?;
            if let Some(w) = &l.violation {
                writeln!(out, "  least violation: {}", render_witness(&g, w))?;
            }
        }
        let shown = if identities.is_empty() {
            "none".to_string()
        } else {
            identities.join(", ")
        };
        writeln!(out, "left identities: {shown}")?;
    }
    Ok(if laws[0].holds { EXIT_OK } else { EXIT_GUARD })
}

fn parse_elements(g: &GammaGroupoid, names: &[String]) -> Result<Subset, CliError> {
    let mut idx = Vec::new();
    for name in names.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        let found = g
            .labels()
            .elements
            .iter()
            .position(|e| e == name)
            .or_else(|| name.parse::<usize>().ok().filter(|&i| i < g.order()));
        match found {
            Some(i) => idx.push(i),
            None => return Err(CliError::Usage(format!("unknown element `{name}`"))),
        }
    }
    if idx.is_empty() {
        return Err(CliError::Usage(
            "--generated-from needs at least one element".into(),
        ));
    }
    Ok(Subset::from_elements(g.order(), idx)?)
}

#[derive(Serialize)]
#[serde(rename_all = "kebab-case")]
struct FamilyReport {
    kind: IdealKind,
    members: Vec<Subset>,
    rendered: Vec<String>,
    same_as: Vec<IdealKind>,
}

/// Hasse diagram of strict inclusion among `nodes`.
fn write_dot(
    out: Out,
    g: &GammaGroupoid,
    nodes: &[(Subset, Vec<IdealKind>)],
) -> Result<(), CliError> {
    writeln!(out, "digraph ideals {{")?;
    writeln!(out, "  rankdir=BT;")?;
    for (i, (s, kinds)) in nodes.iter().enumerate() {
        let kinds: Vec<_> = kinds.iter().map(|k| k.name()).collect();
        writeln!(
            out,
            "  n{i} [label=\"{}\\n{}\"];",
            s.display_with(g),
            kinds.join(", ")
        )?;
    }
    for (i, (a, _)) in nodes.iter().enumerate() {
        for (j, (b, _)) in nodes.iter().enumerate() {
            let covers = a != b
                && a.is_subset_of(*b)
                && !nodes
                    .iter()
                    .any(|(c, _)| c != a && c != b && a.is_subset_of(*c) && c.is_subset_of(*b));
            if covers {
                writeln!(out, "  n{i} -> n{j};")?;
            }
        }
    }
    writeln!(out, "}}")?;
    Ok(())
}

pub fn ideals(
    out: Out,
    model: &str,
    kind: Option<IdealKind>,
    generated_from: Option<&[String]>,
    dot: bool,
    json: bool,
) -> Result<u8, CliError> {
    let g = load_model(model)?;
    if let Some(names) = generated_from {
        let x = parse_elements(&g, names)?;
        let rows = [
            ("left", generated_left_ideal(&g, x)?),
            ("right", generated_right_ideal(&g, x)?),
            ("two-sided", generated_two_sided_ideal(&g, x)?),
        ];
        if json {
            let doc: BTreeMap<&str, Subset> = rows.iter().copied().collect();
            json_line(
                out,
                &serde_json::json!({ "generators": x, "generated": doc }),
            )?;
        } else {
            writeln!(out, "generated from {}:", x.display_with(&g))?;
            for (name, s) in rows {
                writeln!(out, "  {name:<10} {}", s.display_with(&g))?;
            }
        }
        return Ok(EXIT_OK);
    }

    let cap = sweep_cap_from_env();
    let all: Vec<(IdealKind, Vec<Subset>)> = IdealKind::ALL
        .iter()
        .filter(|k| kind.is_none() || kind == Some(**k))
        .map(|&k| Ok((k, k.family(&g, cap)?)))
        .collect::<Result<_, CliError>>()?;
    let reports: Vec<FamilyReport> = all
        .iter()
        .map(|(k, members)| FamilyReport {
            kind: *k,
            members: members.clone(),
            rendered: members.iter().map(|s| s.display_with(&g)).collect(),
            same_as: all
                .iter()
                .filter(|(k2, m2)| k2 != k && m2 == members)
                .map(|(k2, _)| *k2)
                .collect(),
        })
        .collect();

    if dot {
        let mut nodes: Vec<(Subset, Vec<IdealKind>)> = Vec::new();
        for (k, members) in &all {
            for &s in members {
                match nodes.iter_mut().find(|(t, _)| *t == s) {
                    Some((_, ks)) => ks.push(*k),
                    None => nodes.push((s, vec![*k])),
                }
            }
        }
        nodes.sort_by_key(|(s, _)| (s.len(), s.bits()));
        write_dot(out, &g, &nodes)?;
    } else if json {
        json_line(out, &serde_json::json!({ "families": reports }))?;
    } else {
        for r in &reports {
            let same = if r.same_as.is_empty() {
                String::new()
            } else {
                let names: Vec<_> = r.same_as.iter().map(|k| k.name()).collect();
                format!(" [same family as: {}]", names.join(", "))
            };
            writeln!(out, "{} ({}){same}", r.kind, r.members.len())?;
            for s in &r.rendered {
                writeln!(out, "  {s}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
#[serde(rename_all = "kebab-case")]
struct IntraEntry {
    element: String,
    witness: Option<IntraWitness>,
    certificate: Option<String>,
}

pub fn intra(out: Out, model: &str, json: bool) -> Result<u8, CliError> {
    let g = load_model(model)?;
    let mut entries = Vec::with_capacity(g.order());
    for a in 0..g.order() {
        let witness = intra_witness(&g, a)?;
        entries.push(IntraEntry {
            element: g.element_name(a).to_string(),
            witness,
            certificate: witness.map(|w| w.render(&g, a)),
        });
    }
    let regular = entries.iter().all(|e| e.witness.is_some());
    if json {
        json_line(
            out,
            &serde_json::json!({ "intra-regular": regular, "elements": entries }),
        )?;
    } else {
        for e in &entries {
            match &e.certificate {
                Some(c) => writeln!(out, "{c}")?,
                None => writeln!(out, "{}: not intra-regular", e.element)?,
            }
        }
        writeln!(out, "intra-regular: {}", if regular { "yes" } else { "no" })?;
    }
    Ok(EXIT_OK)
}

fn render_binding(g: &GammaGroupoid, b: &Binding) -> String {
    match b.value {
        Value::Element(x) => format!("{} = {}", b.var, g.element_name(x)),
        Value::Subset(s) => format!("{} = {}", b.var, s.display_with(g)),
    }
}

fn write_report_table(
    out: Out,
    g: &GammaGroupoid,
    reports: &[TheoremReport],
) -> Result<(), CliError> {
    writeln!(
        out,
        "{:<14} {:<8} {:>10}  note",
        "theorem", "status", "instances"
    )?;
    for r in reports {
        let note = match &r.status {
            Status::Skipped(reason) => reason.clone(),
            Status::Fail => {
                let failed: Vec<_> = r
                    .clauses
                    .iter()
                    .filter(|c| c.status == Status::Fail)
                    .map(|c| c.tag.as_str())
                    .collect();
                format!("failed: {}", failed.join("; "))
            }
            _ => String::new(),
        };
        writeln!(
            out,
            "{:<14} {:<8} {:>10}  {note}",
            r.theorem.as_str(),
            r.status.label(),
            r.instances_checked
        )?;
    }
    for r in reports {
        if let Some(ce) = &r.counterexample {
            writeln!(out)?;
            writeln!(out, "{} counterexample ({}):", r.theorem, ce.clause)?;
            for b in &ce.bindings {
                writeln!(out, "  {}", render_binding(g, b))?;
            }
            writeln!(out, "  violated: {}", ce.violated)?;
        }
    }
    let count = |label: &str| reports.iter().filter(|r| r.status.label() == label).count();
    writeln!(
        out,
        "\n{} pass, {} fail, {} vacuous, {} skipped",
        count("pass"),
        count("fail"),
        count("vacuous"),
        count("skipped")
    )?;
    Ok(())
}

pub fn verify(out: Out, model: &str, selection: &[TheoremId], json: bool) -> Result<u8, CliError> {
    let g = load_model(model)?;
    let config = SuiteConfig {
        sweep_cap: sweep_cap_from_env(),
    };
    let reports = run_suite_configured(&g, selection, config);
    let code = suite_exit_code(&reports) as u8;
    if json {
        json_line(out, &SuiteDocument::new(&g, reports))?;
    } else {
        write_report_table(out, &g, &reports)?;
    }
    Ok(code)
}

pub fn search(
    out: Out,
    spec: &SearchSpec,
    hunt: Option<TheoremId>,
    json: bool,
) -> Result<u8, CliError> {
    let started = Instant::now();
    let code = match hunt {
        None => {
            let e = search::enumerate(spec)?;
            if json {
                let models: Vec<_> = e
                    .models
                    .iter()
                    .map(|f| ModelDocument::from_model(&f.to_model()))
                    .collect();
                json_line(
                    out,
                    &serde_json::json!({
                        "order": spec.order,
                        "gammas": spec.gammas,
                        "axioms": spec.axioms,
                        "filter": spec.filter,
                        "count": e.models.len(),
                        "truncated": e.truncated,
                        "models": models,
                    }),
                )?;
            } else {
                for (i, f) in e.models.iter().enumerate() {
                    writeln!(out, "# model {}", i + 1)?;
                    write!(out, "{}", serialize_model(&f.to_model()))?;
                    writeln!(out)?;
                }
                writeln!(out, "count: {}", e.models.len())?;
                writeln!(out, "truncated: {}", e.truncated)?;
            }
            EXIT_OK
        }
        Some(theorem) => {
            let h = search::find_counterexample(spec, theorem)?;
            if json {
                let (model, report) = match &h.found {
                    Some((f, r)) => (Some(ModelDocument::from_model(&f.to_model())), Some(r)),
                    None => (None, None),
                };
                json_line(
                    out,
                    &serde_json::json!({
                        "theorem": theorem,
                        "searched": h.searched,
                        "truncated": h.truncated,
                        "model": model,
                        "report": report,
                    }),
                )?;
            } else {
                match &h.found {
                    Some((f, r)) => {
                        let g = f.to_model();
                        writeln!(
                            out,
                            "counterexample to {theorem} after {} models:",
                            h.searched
                        )?;
                        write!(out, "{}", serialize_model(&g))?;
                        writeln!(out)?;
                        write_report_table(out, &g, std::slice::from_ref(r))?;
                    }
                    None => writeln!(
                        out,
                        "no counterexample to {theorem} among {} models{}",
                        h.searched,
                        if h.truncated { " (truncated)" } else { "" }
                    )?,
                }
            }
            if h.found.is_some() {
                EXIT_FAIL
            } else {
                EXIT_OK
            }
        }
    };
    eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
    Ok(code)
}

pub fn canon(out: Out, model: &str, json: bool) -> Result<u8, CliError> {
    let g = load_model(model)?;
    let c = canonicalize(&g)?.to_model();
    if json {
        writeln!(out, "{}", model_to_json(&c))?;
    } else {
        write!(out, "{}", serialize_model(&c))?;
    }
    Ok(EXIT_OK)
}
