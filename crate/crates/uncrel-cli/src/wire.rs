//! Machine-readable output documents and the human-readable table. Complex
//! numbers serialize as `[re, im]` pairs; JSON floats round-trip exactly.

use serde::{Deserialize, Serialize};
use uncrel::{BoundReport, Complex64, ComplexVector, HermitianMatrix};

pub const SCHEMA: u32 = 1;

pub fn pair(c: Complex64) -> [f64; 2] {
    [c.re, c.im]
}

pub fn vector_pairs(v: &ComplexVector) -> Vec<[f64; 2]> {
    v.entries().iter().copied().map(pair).collect()
}

pub fn matrix_pairs(m: &HermitianMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.dim())
        .map(|r| m.row(r).iter().copied().map(pair).collect())
        .collect()
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentsDoc {
    pub mean_a: f64,
    pub mean_b: f64,
    pub var_a: f64,
    pub var_b: f64,
    pub overlap: [f64; 2],
    pub comm: [f64; 2],
    pub acov: f64,
    pub max_identity_error: f64,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub overlap1: [f64; 2],
    pub overlap2: [f64; 2],
    pub cross: [f64; 2],
    pub deficit_a: f64,
    pub deficit_b: f64,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundDoc {
    pub label: String,
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
    pub trivial: bool,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub schema: u32,
    pub moments: MomentsDoc,
    pub witness: Option<WitnessDoc>,
    pub bounds: Vec<BoundDoc>,
}

impl ReportDoc {
    pub fn from_report(r: &BoundReport) -> ReportDoc {
        ReportDoc {
            schema: SCHEMA,
            moments: MomentsDoc {
                mean_a: r.moments.mean_a,
                mean_b: r.moments.mean_b,
                var_a: r.moments.var_a,
                var_b: r.moments.var_b,
                overlap: pair(r.moments.overlap),
                comm: pair(r.moments.comm),
                acov: r.moments.acov,
                max_identity_error: r.moments.max_identity_error(),
            },
            witness: r.witness.as_ref().map(|w| WitnessDoc {
                overlap1: pair(w.overlap1),
                overlap2: pair(w.overlap2),
                cross: pair(w.cross),
                deficit_a: w.deficit_a,
                deficit_b: w.deficit_b,
            }),
            bounds: r
                .entries()
                .into_iter()
                .map(|(label, b)| BoundDoc {
                    label: label.to_string(),
                    lhs: b.lhs,
                    rhs: b.rhs,
                    gap: b.gap,
                    trivial: b.trivial,
                })
                .collect(),
        }
    }
}

fn fmt_complex(c: Complex64) -> String {
    format!("{:.5e} {} {:.5e}i", c.re, if c.im < 0.0 { "-" } else { "+" }, c.im.abs())
}

/// Table with 6 significant digits; the JSON document is the exact form.
pub fn render_table(r: &BoundReport) -> String {
    let mut out = String::new();
    let m = &r.moments;
    out.push_str("moments\n");
    out.push_str(&format!("  mean_a            {:>13.5e}\n", m.mean_a));
    out.push_str(&format!("  mean_b            {:>13.5e}\n", m.mean_b));
    out.push_str(&format!("  var_a             {:>13.5e}\n", m.var_a));
    out.push_str(&format!("  var_b             {:>13.5e}\n", m.var_b));
    out.push_str(&format!("  overlap           {}\n", fmt_complex(m.overlap)));
    out.push_str(&format!("  comm              {}\n", fmt_complex(m.comm)));
    out.push_str(&format!("  acov              {:>13.5e}\n", m.acov));
    if let Some(w) = &r.witness {
        out.push_str("witness\n");
        out.push_str(&format!("  overlap1          {}\n", fmt_complex(w.overlap1)));
        out.push_str(&format!("  overlap2          {}\n", fmt_complex(w.overlap2)));
        out.push_str(&format!("  cross             {}\n", fmt_complex(w.cross)));
        out.push_str(&format!("  deficit_a         {:>13.5e}\n", w.deficit_a));
        out.push_str(&format!("  deficit_b         {:>13.5e}\n", w.deficit_b));
    }
    out.push_str("bounds\n");
    out.push_str(&format!(
        "  {:<24} {:>13} {:>13} {:>13}  {}\n",
        "label", "lhs", "rhs", "gap", "trivial"
    ));
    for (label, b) in r.entries() {
        out.push_str(&format!(
            "  {:<24} {:>13.5e} {:>13.5e} {:>13.5e}  {}\n",
            label,
            b.lhs,
            b.rhs,
            b.gap,
            if b.trivial { "yes" } else { "no" }
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use uncrel::bounds::bound_report;
    use uncrel::scenarios::{pauli_operators, spin1_instance};
    use uncrel::Tolerances;

    fn qubit_report() -> BoundReport {
        let (sx, sy, _) = pauli_operators();
        let psi = ComplexVector::from_reals(&[1.0, 0.0]);
        let witness = ComplexVector::from_reals(&[0.0, 1.0]);
        bound_report(&sx, &sy, &psi, Some(&witness), &Tolerances::default()).unwrap()
    }

    #[test]
    fn report_doc_round_trips_exactly_through_json() {
        let inst = spin1_instance(0.4);
        let report = bound_report(
            &inst.a,
            &inst.b,
            &inst.state,
            Some(&inst.witness),
            &Tolerances::default(),
        )
        .unwrap();
        let doc = ReportDoc::from_report(&report);
        let text = serde_json::to_string(&doc).unwrap();
        let back: ReportDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(doc, back);
    }

    #[test]
    fn report_doc_lists_bounds_in_stable_order() {
        let doc = ReportDoc::from_report(&qubit_report());
        let labels: Vec<&str> = doc.bounds.iter().map(|b| b.label.as_str()).collect();
        assert_eq!(
            labels,
            vec![
                "robertson",
                "schrodinger",
                "generalized_robertson",
                "generalized_schrodinger",
                "generalized_sum",
                "mp_plus",
                "mp_minus"
            ]
        );
    }

    #[test]
    fn table_carries_every_bound_row_and_triviality() {
        let table = render_table(&qubit_report());
        assert!(table.contains("mp_plus"));
        assert!(table.contains("generalized_sum"));
        assert!(table.contains("yes") || table.contains("no"));
        // 6 significant digits
        assert!(table.contains("2.00000e0"), "{table}");
    }

    #[test]
    fn witness_block_is_omitted_without_witness() {
        let (sx, sy, _) = pauli_operators();
        let psi = ComplexVector::from_reals(&[1.0, 0.0]);
        let report = bound_report(&sx, &sy, &psi, None, &Tolerances::default()).unwrap();
        let doc = ReportDoc::from_report(&report);
        assert!(doc.witness.is_none());
        assert_eq!(doc.bounds.len(), 2);
        assert!(!render_table(&report).contains("witness\n"));
    }
}
