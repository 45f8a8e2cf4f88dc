//! Eigenvalue multisets grouped into (value, multiplicity) pairs.

use serde::de::Deserializer;
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

pub const DEFAULT_GROUP_TOL: f64 = 1e-6;
pub const DEFAULT_COMPARE_TOL: f64 = 1e-6;
pub const DEFAULT_INTEGRAL_TOL: f64 = 1e-6;

/// Eigenvalues grouped under a tolerance, sorted by value descending.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pairs: Vec<(f64, usize)>,
    /// Σ|x| over the raw members of each group, so that energy does not
    /// depend on how values near zero were merged.
    abs_mass: Vec<f64>,
    tol: f64,
}

impl Spectrum {
    /// Builds a spectrum from explicit pairs, merging values closer than
    /// `tol` after sorting.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (f64, usize)>, tol: f64) -> Spectrum {
        let values: Vec<f64> = pairs
            .into_iter()
            .flat_map(|(v, m)| std::iter::repeat_n(v, m))
            .collect();
        group(&values, tol)
    }

    pub fn pairs(&self) -> &[(f64, usize)] {
        &self.pairs
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Sum of multiplicities.
    pub fn order(&self) -> usize {
        self.pairs.iter().map(|&(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Representatives repeated by multiplicity, descending.
    pub fn values(&self) -> Vec<f64> {
        self.pairs
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
            .collect()
    }

    pub fn largest(&self) -> Option<f64> {
        self.pairs.first().map(|&(v, _)| v)
    }

    pub fn multiplicity_of(&self, value: f64, tol: f64) -> usize {
        self.pairs
            .iter()
            .filter(|&&(v, _)| (v - value).abs() <= tol)
            .map(|&(_, m)| m)
            .sum()
    }

    pub fn contains(&self, value: f64, tol: f64) -> bool {
        self.multiplicity_of(value, tol) > 0
    }
}

/// Single-linkage grouping: sorted neighbours at most `tol` apart share a
/// group, represented by its mean.
pub fn group(values: &[f64], tol: f64) -> Spectrum {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut pairs = Vec::new();
    let mut abs_mass = Vec::new();
    let mut start = 0;
    for i in 0..sorted.len() {
        let last = i + 1 == sorted.len() || sorted[i] - sorted[i + 1] > tol;
        if last {
            let members = &sorted[start..=i];
            let mean = members.iter().sum::<f64>() / members.len() as f64;
            pairs.push((mean, members.len()));
            abs_mass.push(members.iter().map(|x| x.abs()).sum());
            start = i + 1;
        }
    }
    Spectrum {
        pairs,
        abs_mass,
        tol,
    }
}

/// Sum of absolute eigenvalues counted with multiplicity.
pub fn energy(s: &Spectrum) -> f64 {
    s.abs_mass.iter().sum()
}

/// Largest deviation after pairing the two sorted value lists, or `None`
/// when the orders differ.
pub fn max_deviation(a: &Spectrum, b: &Spectrum) -> Option<f64> {
    if a.order() != b.order() {
        return None;
    }
    Some(
        a.values()
            .iter()
            .zip(b.values())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max),
    )
}

pub fn spectra_equal(a: &Spectrum, b: &Spectrum, tol: f64) -> bool {
    max_deviation(a, b).is_some_and(|d| d <= tol)
}

pub fn is_integral(s: &Spectrum, tol: f64) -> bool {
    s.pairs.iter().all(|&(v, _)| (v - v.round()).abs() <= tol)
}

/// Rounds to 12 significant digits and clears negative zero.
pub(crate) fn round12(x: f64) -> f64 {
    let r: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Serializers that write floats through [`round12`], so reported numbers
/// do not depend on last-bit rounding noise.
pub(crate) mod rounded {
    use serde::Serializer;

    use super::round12;

    pub fn scalar<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(round12(*x))
    }

    pub fn option<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(v) => s.serialize_some(&round12(*v)),
            None => s.serialize_none(),
        }
    }

    pub fn list<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(xs.iter().map(|&x| round12(x)))
    }
}

#[derive(Serialize, Deserialize)]
struct Entry {
    value: f64,
    multiplicity: usize,
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.pairs.len()))?;
        for &(value, multiplicity) in &self.pairs {
            seq.serialize_element(&Entry {
                value: round12(value),
                multiplicity,
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Spectrum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let entries = Vec::<Entry>::deserialize(deserializer)?;
        Ok(Spectrum::from_pairs(
            entries.into_iter().map(|e| (e.value, e.multiplicity)),
            DEFAULT_GROUP_TOL,
        ))
    }
}
