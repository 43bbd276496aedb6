//! Command implementations behind the `cayvol` binary: realize, analyze,
//! aut, export-dot, export-csv and verify, with stable exit codes
//! (0 success, 1 usage/parse, 2 precondition, 3 verification failure).

use crate::autgrp::{self, AutGroup};
use crate::cayley::{self, AssociativeBasisAlgebra};
use crate::error::{Error, Result};
use crate::evoalg::EvolutionAlgebra;
use crate::field::FieldSpec;
use crate::group::{self, FiniteGroup};
use crate::report::{matrix_strings, AutReport, Flags, Report, SCHEMA};
use crate::verify;
use std::collections::BTreeMap;
use std::time::Instant;

/// Group-order cap, overridable through `CAYVOL_MAX_ORDER`.
pub fn order_cap() -> usize {
    std::env::var("CAYVOL_MAX_ORDER")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(group::DEFAULT_ORDER_CAP)
}

/// Isomorphism-testing cap: 16 by default, raised to the explicit order
/// cap when `CAYVOL_MAX_ORDER` grants a bigger budget.
pub fn iso_cap() -> usize {
    std::env::var("CAYVOL_MAX_ORDER")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(group::DEFAULT_ISO_CAP)
}

pub struct RealizeArgs {
    pub group: String,
    pub field: String,
    pub gens: String,
    pub force: bool,
    pub extension: Option<String>,
    pub timings: bool,
}

#[derive(Debug)]
pub struct RealizeOutput {
    pub report: Report,
    pub algebra_json: String,
    pub weights_json: String,
}

fn parse_gens(g: &FiniteGroup, gens: &str) -> Result<Vec<usize>> {
    if gens == "auto" {
        return Ok(g.coprime_generating_set());
    }
    gens.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<usize>()
                .ok()
                .filter(|&i| i < g.order())
                .ok_or_else(|| Error::Parse(format!("bad generator index `{t}`")))
        })
        .collect()
}

/// Default scalar-extension target for the absolute-simplicity re-check.
fn default_extension(field: &FieldSpec) -> Result<FieldSpec> {
    match field {
        FieldSpec::Prime { p } => FieldSpec::extension(*p, 2, None),
        FieldSpec::Extension { p, m, .. } => FieldSpec::extension(*p, 2 * m, None),
        FieldSpec::Rational => Ok(FieldSpec::Rational),
    }
}

pub fn cmd_realize(args: &RealizeArgs) -> Result<RealizeOutput> {
    let mut timings: BTreeMap<String, u128> = BTreeMap::new();
    let field = FieldSpec::parse(&args.field)?;
    let g = group::build_group(&args.group, order_cap())?;
    let support = parse_gens(&g, &args.gens)?;

    let t = Instant::now();
    let f = cayley::realize(&g, &field, &support, args.force)?;
    timings.insert("realize".into(), t.elapsed().as_millis());

    let algebra = AssociativeBasisAlgebra::group_algebra(&g, &field);
    let x = algebra.cay(&f)?;

    let t = Instant::now();
    let (regular, det) = x.is_regular()?;
    let simple = x.is_simple()?;
    let degenerate = x.is_degenerate();
    timings.insert("analyze".into(), t.elapsed().as_millis());
    if !regular || !simple {
        return Err(Error::Verification(format!(
            "realization postcondition failed: regular = {regular}, simple = {simple} \
             (does the generating set generate the group?)"
        )));
    }

    let t = Instant::now();
    let aut = autgrp::automorphism_group(&x, order_cap())?;
    let recognized = match autgrp::recognize(&aut, &g, iso_cap()) {
        Ok(v) => v,
        Err(Error::OrderCap { .. }) => false,
        Err(e) => return Err(e),
    };
    timings.insert("aut".into(), t.elapsed().as_millis());

    // absolute simplicity at desk scale: determinant and strong
    // connectivity re-checked after extension of scalars
    let t = Instant::now();
    let target = match &args.extension {
        Some(spec) => FieldSpec::parse(spec)?,
        None => default_extension(&field)?,
    };
    let x_ext = x.extend_to(&target)?;
    let (ext_regular, ext_det) = x_ext.is_regular()?;
    if !ext_regular {
        return Err(Error::Verification(format!(
            "determinant vanished after extension to {target}: {ext_det}"
        )));
    }
    if !x_ext.is_simple()? {
        return Err(Error::Verification(format!(
            "algebra is no longer simple over {target}"
        )));
    }
    timings.insert("extension-check".into(), t.elapsed().as_millis());

    let mut weights = BTreeMap::new();
    for &i in f.support() {
        weights.insert(g.label(i).to_string(), f.value(i).to_string());
    }
    let report = Report {
        schema: SCHEMA.into(),
        command: "realize".into(),
        group: Some(args.group.clone()),
        group_order: Some(g.order()),
        field: field.to_string(),
        support: f.support().iter().map(|&i| g.label(i).to_string()).collect(),
        weights,
        matrix: matrix_strings(&x),
        flags: Flags {
            regular,
            degenerate,
            simple,
            absolutely_simple_checked: true,
        },
        determinant: det.to_string(),
        aut: Some(AutReport::from_group(
            &aut,
            recognized.then(|| args.group.clone()),
        )),
        timings_ms: args.timings.then_some(timings),
    };
    Ok(RealizeOutput {
        algebra_json: x.to_json(),
        weights_json: cayley::weight_to_json(&args.group, g.labels(), &f),
        report,
    })
}

fn load_algebra(path: &str) -> Result<EvolutionAlgebra> {
    let text = std::fs::read_to_string(path)?;
    EvolutionAlgebra::from_json(&text)
}

pub fn cmd_analyze(path: &str) -> Result<Report> {
    let x = load_algebra(path)?;
    let (regular, det) = x.is_regular()?;
    Ok(Report {
        schema: SCHEMA.into(),
        command: "analyze".into(),
        group: None,
        group_order: None,
        field: x.field.to_string(),
        support: Vec::new(),
        weights: BTreeMap::new(),
        matrix: matrix_strings(&x),
        flags: Flags {
            regular,
            degenerate: x.is_degenerate(),
            simple: x.is_simple()?,
            absolutely_simple_checked: false,
        },
        determinant: det.to_string(),
        aut: None,
        timings_ms: None,
    })
}

/// Candidate preset specs of the given order, tried in a fixed order when
/// recognizing an automorphism group without a target.
fn recognition_candidates(n: usize) -> Vec<String> {
    let mut specs = vec![format!("cyclic:{n}")];
    if n.is_multiple_of(2) && n >= 4 {
        specs.push(format!("dihedral:{}", n / 2));
    }
    for m in 2..=4usize {
        let fact: usize = (1..=m).product();
        if fact == n {
            specs.push(format!("symmetric:{m}"));
        }
        if m >= 3 && fact / 2 == n {
            specs.push(format!("alternating:{m}"));
        }
    }
    if n == 8 {
        specs.push("quaternion:8".into());
    }
    // abelian products: multisets of cyclic factors with the right product
    fn factorizations(n: usize, min: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for d in min..=n {
            if !n.is_multiple_of(d) {
                continue;
            }
            if d == n {
                out.push(vec![d]);
            } else {
                for mut rest in factorizations(n / d, d) {
                    rest.insert(0, d);
                    out.push(rest);
                }
            }
        }
        out
    }
    for factors in factorizations(n, 2) {
        if factors.len() >= 2 {
            let parts: Vec<String> = factors.iter().map(|d| format!("cyclic:{d}")).collect();
            specs.push(format!("product:{}", parts.join(",")));
        }
    }
    specs
}

fn recognize_any(aut: &AutGroup) -> Result<Option<String>> {
    let n = aut.order();
    if n > iso_cap() {
        return Ok(None);
    }
    for spec in recognition_candidates(n) {
        let Ok(candidate) = group::build_group(&spec, order_cap()) else {
            continue;
        };
        if autgrp::recognize(aut, &candidate, iso_cap())? {
            return Ok(Some(spec));
        }
    }
    Ok(None)
}

pub fn cmd_aut(path: &str) -> Result<Report> {
    let x = load_algebra(path)?;
    let (regular, det) = x.is_regular()?;
    let aut = autgrp::automorphism_group(&x, order_cap())?;
    let recognized = recognize_any(&aut)?;
    Ok(Report {
        schema: SCHEMA.into(),
        command: "aut".into(),
        group: None,
        group_order: None,
        field: x.field.to_string(),
        support: Vec::new(),
        weights: BTreeMap::new(),
        matrix: matrix_strings(&x),
        flags: Flags {
            regular,
            degenerate: x.is_degenerate(),
            simple: x.is_simple()?,
            absolutely_simple_checked: false,
        },
        determinant: det.to_string(),
        aut: Some(AutReport::from_group(&aut, recognized)),
        timings_ms: None,
    })
}

pub enum GraphFormat {
    Dot,
    Json,
}

pub fn cmd_export_dot(path: &str, weighted: bool, format: GraphFormat) -> Result<String> {
    let x = load_algebra(path)?;
    Ok(match (weighted, format) {
        (true, GraphFormat::Dot) => x.attached_weighted_graph().to_dot(Some(&x.basis)),
        (false, GraphFormat::Dot) => x.attached_graph().to_dot(Some(&x.basis)),
        (true, GraphFormat::Json) => x.attached_weighted_graph().to_json(),
        (false, GraphFormat::Json) => x.attached_graph().to_json(),
    })
}

pub fn cmd_export_csv(path: &str) -> Result<String> {
    let x = load_algebra(path)?;
    Ok(x.matrix.to_csv())
}

/// Runs a named verification suite, printing one line per case; returns
/// the rendered summary and whether everything passed.
pub fn cmd_verify(suite: &str, timings: bool) -> Result<(String, bool)> {
    let cases = verify::run_suite(suite)?;
    let mut text = String::new();
    let mut all_pass = true;
    for case in &cases {
        all_pass &= case.pass;
        let status = if case.pass { "PASS" } else { "FAIL" };
        if timings {
            text.push_str(&format!(
                "{status} [criterion {}] {} ({} ms): {}\n",
                case.criterion, case.id, case.millis, case.detail
            ));
        } else {
            text.push_str(&format!(
                "{status} [criterion {}] {}: {}\n",
                case.criterion, case.id, case.detail
            ));
        }
    }
    let passed = cases.iter().filter(|c| c.pass).count();
    text.push_str(&format!(
        "suite `{suite}`: {passed}/{} cases passed\n",
        cases.len()
    ));
    Ok((text, all_pass))
}
