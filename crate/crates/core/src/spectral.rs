//! Adjacency spectra, spectral expansion, mixing-lemma checks and the
//! constant-free non-malleability figure of merit `lambda^{3/2} / d`.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge_count_between, DenseGraph, VertexId, DENSE_MAX_VERTICES};

/// Numeric tolerances shared by the spectral code and its tests.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Input symmetry, absolute.
    pub symmetry: f64,
    /// Eigenvalue accuracy relative to the matrix scale.
    pub eigenvalue_rel: f64,
    /// Slack added to the mixing-lemma right-hand side.
    pub mixing_slack: f64,
    /// Trace check, relative to `n`.
    pub trace_rel: f64,
}

pub const TOLERANCES: Tolerances = Tolerances {
    symmetry: 1e-12,
    eigenvalue_rel: 1e-9,
    mixing_slack: 1e-9,
    trace_rel: 1e-6,
};

/// Eigenvalues sorted descending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Spectrum {
    pub n: usize,
    pub eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn largest(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn smallest(&self) -> f64 {
        self.eigenvalues[self.n - 1]
    }

    /// `max(|lambda_2|, |lambda_n|)`, or 0 for a single vertex.
    pub fn second_magnitude(&self) -> f64 {
        if self.n < 2 {
            return 0.0;
        }
        self.eigenvalues[1].abs().max(self.smallest().abs())
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }
}

fn to_matrix(n: usize, row_major: &[f64]) -> Result<DMatrix<f64>> {
    if row_major.len() != n * n {
        return Err(Error::DimensionMismatch {
            left: row_major.len(),
            right: n * n,
        });
    }
    if n == 0 || n > DENSE_MAX_VERTICES {
        return Err(Error::Capability(format!(
            "dense eigensolver handles 1..={DENSE_MAX_VERTICES} rows, got {n}"
        )));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if (row_major[i * n + j] - row_major[j * n + i]).abs() > TOLERANCES.symmetry {
                return Err(Error::Validation(format!("matrix is not symmetric at ({i}, {j})")));
            }
        }
    }
    Ok(DMatrix::from_row_slice(n, n, row_major))
}

/// Full spectrum of a symmetric `n x n` matrix given row-major.
pub fn eigenvalues(n: usize, row_major: &[f64]) -> Result<Spectrum> {
    let m = to_matrix(n, row_major)?;
    let mut eigenvalues: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    eigenvalues.sort_by(|a, b| b.total_cmp(a));
    Ok(Spectrum { n, eigenvalues })
}

/// Eigenvalues with unit eigenvectors (columns), sorted descending.
pub fn eigenpairs(n: usize, row_major: &[f64]) -> Result<(Vec<f64>, DMatrix<f64>)> {
    let m = to_matrix(n, row_major)?;
    let eig = SymmetricEigen::new(m);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = DMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    Ok((values, vectors))
}

pub fn graph_spectrum(g: &DenseGraph) -> Result<Spectrum> {
    eigenvalues(g.n(), &g.adjacency_f64())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpansionCert {
    pub lambda: f64,
    pub d: usize,
    pub n: usize,
    /// `lambda / d`.
    pub ratio: f64,
    pub connected: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

/// Spectral expansion `lambda = max(|lambda_2|, |lambda_n|)`.
///
/// Disconnected graphs are still certified (then `lambda = d`), with a warning.
pub fn expansion_lambda(g: &DenseGraph) -> Result<ExpansionCert> {
    let spectrum = graph_spectrum(g)?;
    Ok(expansion_from_spectrum(g, &spectrum))
}

pub fn expansion_from_spectrum(g: &DenseGraph, spectrum: &Spectrum) -> ExpansionCert {
    let d = g.d();
    // Clamp round-off so that 0 <= lambda <= d.
    let lambda = spectrum.second_magnitude().min(d as f64).max(0.0);
    let connected = g.is_connected();
    ExpansionCert {
        lambda,
        d,
        n: g.n(),
        ratio: lambda / d as f64,
        connected,
        warning: (!connected).then(|| "graph is disconnected; lambda equals d".to_string()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MixingCheck {
    /// `| |E(S,T)| - d|S||T|/n |`
    pub lhs: f64,
    /// `lambda * sqrt(|S||T|)`
    pub rhs: f64,
    pub holds: bool,
}

/// Evaluates both sides of the expander mixing lemma for one `(S, T)`.
pub fn mixing_check(g: &DenseGraph, lambda: f64, s: &[VertexId], t: &[VertexId]) -> Result<MixingCheck> {
    let e = edge_count_between(g, s, t)? as f64;
    let (s_len, t_len) = (s.len() as f64, t.len() as f64);
    let lhs = (e - g.d() as f64 * s_len * t_len / g.n() as f64).abs();
    let rhs = lambda * (s_len * t_len).sqrt();
    Ok(MixingCheck {
        lhs,
        rhs,
        holds: lhs <= rhs + TOLERANCES.mixing_slack,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FigureOfMerit {
    /// `lambda^{3/2} / d`, without the unknown leading constant.
    pub epsilon_star: f64,
    /// `n * lambda / (d^3 * max(ln d, 1))`; the asymptotic regime wants this large.
    pub precondition_ratio: f64,
}

/// Evaluates the theoretical bound as a figure of merit. The guarantee is
/// asymptotic with unspecified constants, so this is never a hard threshold.
pub fn nm_figure_of_merit(n: usize, d: usize, lambda: f64) -> FigureOfMerit {
    let d_f = d as f64;
    let log_d = d_f.ln().max(1.0);
    FigureOfMerit {
        epsilon_star: lambda.max(0.0).powf(1.5) / d_f,
        precondition_ratio: n as f64 * lambda / (d_f.powi(3) * log_d),
    }
}
