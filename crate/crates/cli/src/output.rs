//! Rendering of analyses and records.

use lorenz_fiber::record::{format_real, Analysis, AnalysisRecord, CSV_HEADER};
use lorenz_fiber::IntMatrix;
use serde_json::{json, Value};

const PROXY_NOTE: &str =
    "rho is the homological dilatation, a lower bound for the geometric one; |chi| := cell count";

pub fn analysis_text(a: &Analysis, matrices: bool) -> String {
    let r = a.record();
    let fields = r.csv_fields();
    let width = CSV_HEADER
        .iter()
        .map(|h| h.len())
        .max()
        .unwrap_or(0)
        .max("log_dilatation_hom".len());
    let mut out = String::new();
    for (name, value) in CSV_HEADER.iter().zip(&fields) {
        let value = if value.is_empty() { "-" } else { value };
        out.push_str(&format!("{name:<width$}  {value}\n"));
    }
    out.push_str(&format!(
        "{:<width$}  {}\n",
        "log_dilatation_hom",
        format_real(a.spectrum.log_dilatation_hom)
    ));
    out.push_str(&format!(
        "{:<width$}  {}\n",
        "char_poly(t)", a.spectrum.poly
    ));
    out.push_str(&format!("{:<width$}  {}\n", "alexander(t)", a.alexander));
    if matrices {
        let word: Vec<String> = a.link.braid.word.iter().map(ToString::to_string).collect();
        out.push_str(&format!("\nword [{}]\n", word.join(",")));
        let basis: Vec<String> = a
            .link
            .seifert
            .basis
            .cells
            .iter()
            .map(ToString::to_string)
            .collect();
        out.push_str(&format!("basis {}\n", basis.join(" ")));
        for (name, m) in [
            ("V", &a.link.seifert.v),
            ("J", &a.link.seifert.j),
            ("H", &a.link.monodromy.h),
            ("H_inv", &a.link.monodromy.h_inv),
        ] {
            out.push_str(&format!("\n{name}\n{}", grid(m)));
        }
    }
    out.push_str(&format!("\nnote: {PROXY_NOTE}\n"));
    out
}

fn grid(m: &IntMatrix) -> String {
    let w = m
        .to_rows()
        .iter()
        .flatten()
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1);
    m.to_rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| format!("{x:>w$}"))
                .collect::<Vec<_>>()
                .join(" ")
                + "\n"
        })
        .collect()
}

pub fn analysis_json(a: &Analysis, matrices: bool) -> String {
    let mut v = serde_json::to_value(a.record()).expect("record serializes");
    let obj = v.as_object_mut().expect("record is an object");
    obj.insert(
        "log_dilatation_hom".into(),
        json!(lorenz_fiber::record::round_real(
            a.spectrum.log_dilatation_hom
        )),
    );
    if matrices {
        obj.insert("word".into(), json!(a.link.braid.word));
        obj.insert("basis".into(), json!(a.link.seifert.basis.cells));
        obj.insert("v".into(), json!(a.link.seifert.v));
        obj.insert("j".into(), json!(a.link.seifert.j));
        obj.insert("h".into(), json!(a.link.monodromy.h));
        obj.insert("h_inv".into(), json!(a.link.monodromy.h_inv));
    }
    obj.insert("note".into(), Value::from(PROXY_NOTE));
    serde_json::to_string_pretty(&v).expect("json") + "\n"
}

pub fn records_csv(records: &[AnalysisRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in records {
        w.write_record(r.csv_fields()).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn records_json_lines(records: &[AnalysisRecord]) -> String {
    records
        .iter()
        .map(|r| serde_json::to_string(r).expect("record serializes") + "\n")
        .collect()
}

pub fn records_table(records: &[AnalysisRecord]) -> String {
    let rows: Vec<Vec<String>> =
        std::iter::once(CSV_HEADER.iter().map(|h| h.to_string()).collect())
            .chain(records.iter().map(|r| {
                r.csv_fields()
                    .into_iter()
                    .map(|f| if f.is_empty() { "-".into() } else { f })
                    .collect()
            }))
            .collect();
    let widths: Vec<usize> = (0..CSV_HEADER.len())
        .map(|i| rows.iter().map(|r| r[i].chars().count()).max().unwrap_or(0))
        .collect();
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(f, &w)| format!("{f:<w$}"))
                .collect();
            cells.join("  ").trim_end().to_string() + "\n"
        })
        .collect()
}
