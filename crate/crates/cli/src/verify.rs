//! Verification suites over diagram corpora.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, ValueEnum};
use lorenz_fiber::dynamics::{
    default_orbit_length, external_lemma_check, growth_rate, internal_lemma_check, orbit_trace,
    theorem_bound_check,
};
use lorenz_fiber::homology::char_poly;
use lorenz_fiber::spectra::{SpectrumReport, DEFAULT_TOL};
use lorenz_fiber::sweep::{map_ordered, ExecMode};
use lorenz_fiber::{
    enumerate_all, enumerate_family, monodromy_twist_route, LorenzLink, YoungDiagram,
};
use serde::Serialize;
use serde_json::json;

use crate::{parse_range, Failure};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Internal- and external-cell shadows.
    Lemmas,
    /// Dilatation bound and orbit growth rates.
    Bound,
    /// Transvection product against the Seifert-form monodromy.
    Crossroute,
}

#[derive(Args)]
pub struct VerifyArgs {
    suite: Suite,
    /// Check every diagram with at most this many cells.
    #[arg(long, conflicts_with_all = ["b", "k_max", "l"])]
    max_cells: Option<usize>,
    /// Family width; without it the family suites sweep b = 1..=3.
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long, value_parser = parse_range)]
    l: Option<(usize, usize)>,
    /// Write per-diagram results as JSON.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long)]
    sequential: bool,
}

#[derive(Serialize)]
struct Outcome {
    columns: Vec<usize>,
    checks: usize,
    violations: Vec<String>,
}

fn corpus(args: &VerifyArgs) -> Result<(Vec<YoungDiagram>, serde_json::Value), Failure> {
    if let Some(n) = args
        .max_cells
        .or((args.suite == Suite::Crossroute && args.b.is_none()).then_some(12))
    {
        if n == 0 {
            return Err(Failure::usage("--max-cells must be ≥ 1"));
        }
        return Ok((enumerate_all(n).collect(), json!({ "max_cells": n })));
    }
    let (b_lo, b_hi) = match args.b {
        Some(0) => return Err(Failure::usage("--b must be ≥ 1")),
        Some(b) => (b, b),
        None => (1, 3),
    };
    let k_max = args.k_max.unwrap_or(4);
    let (l_lo, l_hi) = args.l.unwrap_or((2, 6));
    let diagrams = (b_lo..=b_hi)
        .flat_map(|b| enumerate_family(b, k_max, l_lo, l_hi))
        .collect();
    Ok((
        diagrams,
        json!({ "b": [b_lo, b_hi], "k_max": k_max, "l": [l_lo, l_hi] }),
    ))
}

fn check(suite: Suite, d: &YoungDiagram) -> Outcome {
    let mut out = Outcome {
        columns: d.columns().to_vec(),
        checks: 0,
        violations: Vec::new(),
    };
    let link = match LorenzLink::new(d) {
        Ok(l) => l,
        Err(e) => {
            out.checks = 1;
            out.violations.push(format!("construction failed: {e}"));
            return out;
        }
    };
    match suite {
        Suite::Crossroute => {
            out.checks = 1;
            match monodromy_twist_route(&link.seifert) {
                Ok(m) if m == link.monodromy => {}
                Ok(_) => out
                    .violations
                    .push("transvection product differs from V⁻¹Vᵀ".into()),
                Err(e) => out
                    .violations
                    .push(format!("transvection product failed: {e}")),
            }
        }
        Suite::Lemmas => {
            let internal = internal_lemma_check(&link);
            out.checks += internal.checks;
            for v in &internal.violations {
                out.violations.push(format!(
                    "internal {}: H⁻¹e_d = {:?}, expected e_{}",
                    v.cell, v.image, v.nw
                ));
            }
            if let Ok(ext) = external_lemma_check(&link) {
                out.checks += ext.checks.len();
                for c in ext.checks.iter().filter(|c| !c.ok) {
                    let support: Vec<String> = c.support.iter().map(ToString::to_string).collect();
                    out.violations.push(format!(
                        "external {}: H⁻²e_c has l1 {} (k = {}), support [{}]{}",
                        c.cell,
                        c.l1,
                        ext.k,
                        support.join(" "),
                        if c.in_mixing_zone {
                            ""
                        } else {
                            " leaves the mixing zone"
                        }
                    ));
                }
            }
        }
        Suite::Bound => bound_checks(&link, &mut out),
    }
    out
}

fn bound_checks(link: &LorenzLink, out: &mut Outcome) {
    let fam = link.diagram.decompose();
    let spectrum =
        match char_poly(&link.monodromy.h).and_then(|p| SpectrumReport::new(&p, DEFAULT_TOL)) {
            Ok(s) => s,
            Err(e) => {
                out.checks += 1;
                out.violations.push(format!("spectrum failed: {e}"));
                return;
            }
        };
    if fam.k == 0 {
        out.checks += 1;
        if !spectrum.is_unit_root_only {
            out.violations.push(format!(
                "rectangle with rho = {}",
                spectrum.spectral_radius.value
            ));
        }
        return;
    }
    if fam.k == 1 {
        return;
    }
    out.checks += 1;
    match theorem_bound_check(link, spectrum.spectral_radius) {
        Ok(rep) if rep.margin >= -1e-9 => {}
        Ok(rep) => out.violations.push(format!(
            "log rho = {} exceeds bound {}",
            rep.log_rho, rep.bound
        )),
        Err(e) => out.violations.push(format!("bound check failed: {e}")),
    }
    let cap = (fam.k as f64).ln() / fam.l as f64 + 1e-6;
    let n = default_orbit_length(fam.l);
    for &cell in &link.seifert.basis.cells {
        out.checks += 1;
        match orbit_trace(&link.monodromy.h_inv, &link.seifert.basis.cells, cell, n)
            .and_then(|t| growth_rate(&t))
        {
            Ok(g) if g <= cap => {}
            Ok(g) => out
                .violations
                .push(format!("orbit of {cell} grows at rate {g} > {cap}")),
            Err(e) => out.violations.push(format!("orbit of {cell} failed: {e}")),
        }
    }
}

pub fn run(args: VerifyArgs, out: &mut impl Write) -> Result<(), Failure> {
    let start = Instant::now();
    let (diagrams, scope) = corpus(&args)?;
    let mode = if args.sequential {
        ExecMode::Sequential
    } else {
        ExecMode::default()
    };
    let outcomes = map_ordered(&diagrams, mode, |d| check(args.suite, d));
    let checks: usize = outcomes.iter().map(|o| o.checks).sum();
    let violations: usize = outcomes.iter().map(|o| o.violations.len()).sum();
    let wall = start.elapsed().as_secs_f64();
    let suite = serde_json::to_value(args.suite).expect("suite name");
    let name = suite.as_str().unwrap_or_default();
    writeln!(
        out,
        "suite {name}: {} diagrams, {checks} checks, {violations} violations",
        diagrams.len()
    )
    .map_err(Failure::compute)?;
    for o in outcomes.iter().filter(|o| !o.violations.is_empty()) {
        for v in &o.violations {
            let cols: Vec<String> = o.columns.iter().map(ToString::to_string).collect();
            writeln!(out, "  [{}] {v}", cols.join(",")).map_err(Failure::compute)?;
        }
    }
    eprintln!("verify {name}: wall time {wall:.3}s");
    if let Some(path) = &args.report {
        let report = json!({
            "suite": suite,
            "scope": scope,
            "diagrams": diagrams.len(),
            "checks": checks,
            "violations": violations,
            "wall_time_s": wall,
            "records": outcomes,
        });
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        std::fs::write(path, text + "\n")
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    }
    if violations > 0 {
        Err(Failure::compute(format!("{violations} violations")))
    } else {
        Ok(())
    }
}
