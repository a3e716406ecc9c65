use serde::{Deserialize, Serialize};

use super::generators::GeneratorBasis;
use super::roots::{root_diagram, RootVector};
use super::search::{search_raising_operators, SearchOutcome};
use super::structure::StructureConstants;
use super::triads::enumerate_canonical_triads;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TriadRecord {
    pub members: [[f64; 8]; 3],
    pub lambda: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantCheck {
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl InvariantCheck {
    fn new(name: &str, value: f64, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            value,
            tolerance,
            passed: value <= tolerance,
        }
    }
}

/// Everything the algebra module can say about itself, in exportable form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraReport {
    pub roots: Vec<[f64; 2]>,
    pub triads: Vec<TriadRecord>,
    pub checks: Vec<InvariantCheck>,
    pub search: SearchOutcome,
    pub distinct_lambdas: Vec<f64>,
}

impl AlgebraReport {
    pub fn failed_checks(&self) -> Vec<&InvariantCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

pub fn algebra_report(grid_resolution: f64) -> Result<AlgebraReport> {
    let basis = GeneratorBasis::standard();
    let f = StructureConstants::standard();
    let diagram = root_diagram(f)?;
    let triads = enumerate_canonical_triads(&diagram, f)?;
    let search = search_raising_operators(&diagram, f, grid_resolution)?;

    let root_dev = diagram
        .roots()
        .iter()
        .zip(RootVector::exact_roots())
        .map(|(a, b)| a.distance(&b))
        .fold(0.0, f64::max);
    let lambda_dev = triads
        .iter()
        .map(|t| (t.lambda - 1.0).abs().min((t.lambda - 2.0).abs()))
        .chain(
            search
                .solutions
                .iter()
                .map(|s| (s.lambda - 1.0).abs().min((s.lambda - 2.0).abs())),
        )
        .fold(0.0, f64::max);

    let mut distinct_lambdas: Vec<f64> = Vec::new();
    for l in triads
        .iter()
        .map(|t| t.lambda)
        .chain(search.solutions.iter().map(|s| s.lambda))
    {
        if !distinct_lambdas.iter().any(|d| (d - l).abs() < 1e-8) {
            distinct_lambdas.push(l);
        }
    }
    distinct_lambdas.sort_by(f64::total_cmp);

    let checks = vec![
        InvariantCheck::new(
            "basis_orthonormality",
            basis.orthonormality_deviation(),
            1e-10,
        ),
        InvariantCheck::new("antisymmetry", f.antisymmetry_residual(), 1e-10),
        InvariantCheck::new("jacobi", f.jacobi_residual(), 1e-9),
        InvariantCheck::new("reconstruction", f.reconstruction_residual(basis), 1e-10),
        InvariantCheck::new("root_hexagon", root_dev, 1e-10),
        InvariantCheck::new("lambda_in_1_2", lambda_dev, 1e-10),
        InvariantCheck::new(
            "two_lambda_classes",
            (distinct_lambdas.len() as f64 - 2.0).abs(),
            0.0,
        ),
    ];

    Ok(AlgebraReport {
        roots: diagram
            .roots()
            .iter()
            .map(|r| [r.alpha1, r.alpha2])
            .collect(),
        triads: triads
            .iter()
            .map(|t| TriadRecord {
                members: t.members.map(|m| m.coeffs),
                lambda: t.lambda,
            })
            .collect(),
        checks,
        search,
        distinct_lambdas,
    })
}
