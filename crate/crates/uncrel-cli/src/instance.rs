//! Instance files: JSON with the dimension, the state, the observable pair,
//! and optionally a witness and tolerance overrides. Complex numbers are
//! `[re, im]` pairs.

use serde::Deserialize;
use std::path::Path;

use crate::{CliError, TolArgs};
use uncrel::linalg::inner;
use uncrel::{Complex64, ComplexVector, HermitianMatrix, Tolerances};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub dimension: usize,
    pub state: Vec<[f64; 2]>,
    #[serde(rename = "A")]
    pub a: Vec<Vec<[f64; 2]>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<[f64; 2]>>,
    pub witness: Option<Vec<[f64; 2]>>,
    pub tolerances: Option<ToleranceOverrides>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToleranceOverrides {
    pub herm: Option<f64>,
    pub orth: Option<f64>,
    pub norm: Option<f64>,
    pub gap: Option<f64>,
    pub trivial: Option<f64>,
}

/// Validated instance ready for evaluation.
#[derive(Debug)]
pub struct Instance {
    pub a: HermitianMatrix,
    pub b: HermitianMatrix,
    pub state: ComplexVector,
    pub witness: Option<ComplexVector>,
    pub tol: Tolerances,
}

pub fn load(path: &Path, flags: &TolArgs) -> Result<Instance, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let file: InstanceFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    build(file, flags)
}

pub fn build(file: InstanceFile, flags: &TolArgs) -> Result<Instance, CliError> {
    let d = file.dimension;
    if d < 2 {
        return Err(CliError::Input(format!(
            "dimension must be at least 2, got {d}"
        )));
    }
    let tol = resolve_tolerances(file.tolerances.as_ref(), flags);
    let state = vector("state", &file.state, d)?;
    let a = matrix("A", &file.a, d, tol.herm)?;
    let b = matrix("B", &file.b, d, tol.herm)?;
    let witness = match &file.witness {
        Some(w) => Some(vector("witness", w, d)?),
        None => None,
    };

    check_unit("state", &state, tol.norm)?;
    if let Some(w) = &witness {
        check_unit("witness", w, tol.norm)?;
        let overlap = inner(&state, w).map_err(CliError::from)?.norm();
        if overlap > tol.orth {
            return Err(CliError::Constraint(format!(
                "witness is not orthogonal to the state: overlap {overlap:.3e} exceeds {:.3e}",
                tol.orth
            )));
        }
    }
    Ok(Instance {
        a,
        b,
        state,
        witness,
        tol,
    })
}

fn resolve_tolerances(overrides: Option<&ToleranceOverrides>, flags: &TolArgs) -> Tolerances {
    let mut t = Tolerances::default();
    if let Some(o) = overrides {
        if let Some(v) = o.herm {
            t.herm = v;
        }
        if let Some(v) = o.orth {
            t.orth = v;
        }
        if let Some(v) = o.norm {
            t.norm = v;
        }
        if let Some(v) = o.gap {
            t.gap = v;
        }
        if let Some(v) = o.trivial {
            t.trivial = v;
        }
    }
    flags.resolve(t)
}

fn vector(name: &str, entries: &[[f64; 2]], d: usize) -> Result<ComplexVector, CliError> {
    if entries.len() != d {
        return Err(CliError::Input(format!(
            "{name} has {} entries, expected {d}",
            entries.len()
        )));
    }
    Ok(ComplexVector::new(
        entries.iter().map(|p| Complex64::new(p[0], p[1])).collect(),
    ))
}

fn matrix(
    name: &str,
    rows: &[Vec<[f64; 2]>],
    d: usize,
    herm_tol: f64,
) -> Result<HermitianMatrix, CliError> {
    if rows.len() != d {
        return Err(CliError::Input(format!(
            "matrix {name} has {} rows, expected {d}",
            rows.len()
        )));
    }
    for (r, row) in rows.iter().enumerate() {
        if row.len() != d {
            return Err(CliError::Input(format!(
                "matrix {name} row {r} has {} entries, expected {d}",
                row.len()
            )));
        }
    }
    let m = HermitianMatrix::from_rows(
        rows.iter()
            .map(|row| row.iter().map(|p| Complex64::new(p[0], p[1])).collect())
            .collect(),
    )
    .map_err(|e| CliError::Input(format!("matrix {name}: {e}")))?;
    let deviation = m.hermiticity_deviation();
    if deviation > herm_tol {
        return Err(CliError::Input(format!(
            "matrix {name} is not Hermitian: deviation {deviation:.3e} exceeds {herm_tol:.3e}"
        )));
    }
    Ok(m)
}

fn check_unit(name: &str, v: &ComplexVector, norm_tol: f64) -> Result<(), CliError> {
    let deviation = (v.norm() - 1.0).abs();
    if deviation > norm_tol {
        return Err(CliError::Constraint(format!(
            "{name} is not normalized: |norm - 1| = {deviation:.3e} exceeds {norm_tol:.3e}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn no_flags() -> TolArgs {
        TolArgs {
            tol: None,
            tol_orth: None,
            tol_norm: None,
            tol_gap: None,
        }
    }

    fn qubit_json() -> String {
        r#"{
            "dimension": 2,
            "state": [[1, 0], [0, 0]],
            "A": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]],
            "B": [[[0, 0], [0, -1]], [[0, 1], [0, 0]]],
            "witness": [[0, 0], [1, 0]]
        }"#
        .to_string()
    }

    fn parse(text: &str) -> Result<Instance, CliError> {
        let file: InstanceFile = serde_json::from_str(text).map_err(|e| {
            CliError::Input(e.to_string())
        })?;
        build(file, &no_flags())
    }

    #[test]
    fn valid_qubit_instance_loads() {
        let inst = parse(&qubit_json()).unwrap();
        assert_eq!(inst.state.dim(), 2);
        assert!(inst.witness.is_some());
        assert_eq!(inst.tol.orth, Tolerances::default().orth);
    }

    #[test]
    fn wrong_state_length_is_an_input_error() {
        let text = qubit_json().replace("\"state\": [[1, 0], [0, 0]]", "\"state\": [[1, 0]]");
        match parse(&text) {
            Err(CliError::Input(m)) => assert!(m.contains("state has 1 entries"), "{m}"),
            other => panic!("expected input error, got {other:?}"),
        }
    }

    #[test]
    fn non_hermitian_matrix_is_named() {
        let text = qubit_json().replace(
            "\"A\": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]",
            "\"A\": [[[0, 0], [1, 0]], [[0.5, 0], [0, 0]]]",
        );
        match parse(&text) {
            Err(CliError::Input(m)) => assert!(m.contains("matrix A is not Hermitian"), "{m}"),
            other => panic!("expected input error, got {other:?}"),
        }
    }

    #[test]
    fn unnormalized_state_is_a_constraint_error() {
        let text = qubit_json().replace("\"state\": [[1, 0], [0, 0]]", "\"state\": [[2, 0], [0, 0]]");
        match parse(&text) {
            Err(CliError::Constraint(m)) => assert!(m.contains("state is not normalized"), "{m}"),
            other => panic!("expected constraint error, got {other:?}"),
        }
    }

    #[test]
    fn non_orthogonal_witness_is_a_constraint_error() {
        let text = qubit_json().replace(
            "\"witness\": [[0, 0], [1, 0]]",
            "\"witness\": [[1, 0], [0, 0]]",
        );
        match parse(&text) {
            Err(CliError::Constraint(m)) => assert!(m.contains("not orthogonal"), "{m}"),
            other => panic!("expected constraint error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = qubit_json().replace("\"dimension\": 2", "\"dimension\": 2, \"extra\": 1");
        assert!(serde_json::from_str::<InstanceFile>(&text).is_err());
    }

    #[test]
    fn tolerance_precedence_is_granular_over_joint_over_file() {
        let text = qubit_json().replace(
            "\"dimension\": 2",
            "\"dimension\": 2, \"tolerances\": {\"orth\": 0.5, \"gap\": 0.25}",
        );
        let file: InstanceFile = serde_json::from_str(&text).unwrap();
        let flags = TolArgs {
            tol: Some(1e-3),
            tol_orth: Some(1e-5),
            tol_norm: None,
            tol_gap: None,
        };
        let inst = build(file, &flags).unwrap();
        assert_eq!(inst.tol.orth, 1e-5); // granular flag
        assert_eq!(inst.tol.gap, 1e-3); // joint flag beats the file's 0.25
        assert_eq!(inst.tol.norm, 1e-3);
        assert_eq!(inst.tol.herm, Tolerances::default().herm);
    }
}
