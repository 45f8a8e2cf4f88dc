use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::linalg::{energy, spectra_equal, Spectrum, DEFAULT_COMPARE_TOL};
use crate::metrics;

/// Energies within this distance count as equal.
pub const EQUIENERGY_TOL: f64 = 1e-6;

/// Spectra, energies and pairwise comparisons for a family of graphs.
#[derive(Clone, Debug, Serialize)]
pub struct ConstructionReport {
    pub labels: Vec<String>,
    #[serde(skip)]
    pub graphs: Vec<Graph>,
    pub graph6: Vec<String>,
    pub orders: Vec<usize>,
    pub spectra: Vec<Spectrum>,
    #[serde(serialize_with = "crate::linalg::rounded::list")]
    pub energies: Vec<f64>,
    #[serde(serialize_with = "crate::linalg::rounded::option")]
    pub expected_energy: Option<f64>,
    pub pairwise_cospectral: Vec<Vec<bool>>,
    pub equienergetic: bool,
    pub irreducible: Vec<bool>,
    pub notes: String,
}

impl ConstructionReport {
    pub fn build(
        graphs: Vec<(String, Graph)>,
        expected_energy: Option<f64>,
        notes: String,
    ) -> Result<Self> {
        if graphs.is_empty() {
            return Err(Error::Parameter(
                "a report needs at least one graph".to_string(),
            ));
        }
        let profiles = graphs
            .par_iter()
            .map(|(_, g)| {
                let p = metrics::profile(g)?;
                Ok((p.spectrum()?, p.eccentric_graph.is_connected()))
            })
            .collect::<Result<Vec<_>>>()?;
        let (spectra, irreducible): (Vec<Spectrum>, Vec<bool>) = profiles.into_iter().unzip();
        let energies: Vec<f64> = spectra.iter().map(energy).collect();
        let lo = energies.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = energies.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let pairwise_cospectral = spectra
            .iter()
            .map(|a| {
                spectra
                    .iter()
                    .map(|b| spectra_equal(a, b, DEFAULT_COMPARE_TOL))
                    .collect()
            })
            .collect();
        let (labels, graphs): (Vec<String>, Vec<Graph>) = graphs.into_iter().unzip();
        Ok(ConstructionReport {
            graph6: graphs.iter().map(graph::to_graph6).collect(),
            orders: graphs.iter().map(Graph::order).collect(),
            labels,
            graphs,
            spectra,
            energies,
            expected_energy,
            pairwise_cospectral,
            equienergetic: hi - lo < EQUIENERGY_TOL,
            irreducible,
            notes,
        })
    }

    /// True when no two distinct members share an ε-spectrum.
    pub fn pairwise_noncospectral(&self) -> bool {
        self.pairwise_cospectral
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &c)| i == j || !c))
    }

    /// Largest distance between a computed energy and the closed form.
    pub fn energy_error(&self) -> Option<f64> {
        self.expected_energy.map(|e| {
            self.energies
                .iter()
                .map(|x| (x - e).abs())
                .fold(0.0, f64::max)
        })
    }
}
