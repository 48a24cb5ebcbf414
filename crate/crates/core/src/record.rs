//! Flat per-diagram records for tables and reports.

use serde::{Serialize, Serializer};

use crate::diagram::YoungDiagram;
use crate::dynamics::{
    external_lemma_check, internal_lemma_check, theorem_bound_check, BoundReport, ExternalReport,
    InternalReport,
};
use crate::error::{Error, Result};
use crate::homology::{alexander_polynomial, char_poly};
use crate::link::LorenzLink;
use crate::poly::IntPolynomial;
use crate::spectra::{SpectrumReport, DEFAULT_TOL};

pub const CSV_HEADER: [&str; 20] = [
    "columns",
    "b",
    "l",
    "k",
    "cells",
    "strands",
    "crossings",
    "components",
    "euler",
    "betti1",
    "char_poly",
    "alexander",
    "rho",
    "rho_err",
    "mahler",
    "cyclotomic",
    "bound",
    "margin",
    "lemma_internal_ok",
    "lemma_external_ok",
];

/// Everything computed for one diagram. `bound` and `margin` are absent for
/// `k ≤ 1`, `lemma_external_ok` outside the family regime (`k = 0` or `l < 2`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisRecord {
    pub columns: Vec<usize>,
    pub b: usize,
    pub l: usize,
    pub k: usize,
    pub cells: usize,
    pub strands: usize,
    pub crossings: usize,
    pub components: usize,
    pub euler: i64,
    pub betti1: usize,
    pub char_poly: IntPolynomial,
    pub alexander: IntPolynomial,
    #[serde(serialize_with = "real")]
    pub rho: f64,
    #[serde(serialize_with = "real")]
    pub rho_err: f64,
    #[serde(serialize_with = "real")]
    pub mahler: f64,
    pub cyclotomic: bool,
    #[serde(serialize_with = "opt_real")]
    pub bound: Option<f64>,
    #[serde(serialize_with = "opt_real")]
    pub margin: Option<f64>,
    pub lemma_internal_ok: bool,
    pub lemma_external_ok: Option<bool>,
}

/// A record together with the intermediate objects it was derived from.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub link: LorenzLink,
    pub spectrum: SpectrumReport,
    pub alexander: IntPolynomial,
    pub bound: Option<BoundReport>,
    pub internal: InternalReport,
    pub external: Option<ExternalReport>,
}

impl Analysis {
    pub fn new(d: &YoungDiagram) -> Result<Self> {
        let link = LorenzLink::new(d)?;
        let cp = char_poly(&link.monodromy.h)?;
        let spectrum = SpectrumReport::new(&cp, DEFAULT_TOL)?;
        let alexander = alexander_polynomial(&link.seifert)?;
        let bound = match theorem_bound_check(&link, spectrum.spectral_radius) {
            Ok(b) => Some(b),
            Err(Error::BoundDegenerate { .. }) => None,
            Err(e) => return Err(e),
        };
        let internal = internal_lemma_check(&link);
        let external = match external_lemma_check(&link) {
            Ok(r) => Some(r),
            Err(Error::NotInFamilyRegime { .. }) => None,
            Err(e) => return Err(e),
        };
        Ok(Analysis {
            link,
            spectrum,
            alexander,
            bound,
            internal,
            external,
        })
    }

    pub fn record(&self) -> AnalysisRecord {
        let d = &self.link.diagram;
        let fam = d.decompose();
        let stats = &self.link.stats;
        AnalysisRecord {
            columns: d.columns().to_vec(),
            b: fam.b,
            l: fam.l,
            k: fam.k,
            cells: d.cell_count(),
            strands: self.link.braid.n,
            crossings: self.link.braid.crossings(),
            components: stats.boundary_components,
            euler: stats.euler,
            betti1: stats.betti1,
            char_poly: self.spectrum.poly.clone(),
            alexander: self.alexander.clone(),
            rho: self.spectrum.spectral_radius.value,
            rho_err: self.spectrum.spectral_radius.err,
            mahler: self.spectrum.mahler_measure.value,
            cyclotomic: self.spectrum.is_unit_root_only,
            bound: self.bound.as_ref().map(|b| b.bound),
            margin: self.bound.as_ref().map(|b| b.margin),
            lemma_internal_ok: self.internal.ok(),
            lemma_external_ok: self.external.as_ref().map(ExternalReport::ok),
        }
    }
}

pub fn analyze(d: &YoungDiagram) -> Result<AnalysisRecord> {
    Ok(Analysis::new(d)?.record())
}

/// `x` rounded to 12 significant digits.
pub fn round_real(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}")
        .parse()
        .expect("float formatting round-trips")
}

/// 12 significant digits; plain notation for moderate magnitudes, exponent otherwise.
pub fn format_real(x: f64) -> String {
    let r = round_real(x);
    if r == 0.0 {
        "0".into()
    } else if (1e-4..1e15).contains(&r.abs()) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

fn real<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(round_real(*x))
}

fn opt_real<S: Serializer>(x: &Option<f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(x) => s.serialize_some(&round_real(*x)),
        None => s.serialize_none(),
    }
}

fn bracketed<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    let inner: Vec<String> = xs.into_iter().map(|x| x.to_string()).collect();
    format!("[{}]", inner.join(","))
}

impl AnalysisRecord {
    /// Fields in [`CSV_HEADER`] order; absent values are empty strings.
    pub fn csv_fields(&self) -> Vec<String> {
        let opt = |x: Option<f64>| x.map(format_real).unwrap_or_default();
        vec![
            bracketed(&self.columns),
            self.b.to_string(),
            self.l.to_string(),
            self.k.to_string(),
            self.cells.to_string(),
            self.strands.to_string(),
            self.crossings.to_string(),
            self.components.to_string(),
            self.euler.to_string(),
            self.betti1.to_string(),
            bracketed(self.char_poly.coeffs()),
            bracketed(self.alexander.coeffs()),
            format_real(self.rho),
            format_real(self.rho_err),
            format_real(self.mahler),
            self.cyclotomic.to_string(),
            opt(self.bound),
            opt(self.margin),
            self.lemma_internal_ok.to_string(),
            self.lemma_external_ok
                .map(|b| b.to_string())
                .unwrap_or_default(),
        ]
    }
}
