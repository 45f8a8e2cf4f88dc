use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::linalg::{self, is_integral, SquareMatrix, DEFAULT_INTEGRAL_TOL};
use crate::metrics;

pub const MAX_SCAN_N: usize = 300;
/// Per-parameter cap for the three-parameter complete-graph family.
pub const MAX_TRIPLE_PARAM: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IntegralFamily {
    /// `K₃ ⋁̇ K_n`; ε-integral iff `12n + 9` is a square.
    K3SvJoinKn,
    /// `K₁₁ ⋁̄ K_n`; ε-integral iff `44n + 3645` is a square.
    K11SeJoinKn,
    /// `K_n ∨ (K_m ∪ K_l)` over `m <= l`.
    JoinUnionComplete,
}

impl IntegralFamily {
    pub const ALL: [IntegralFamily; 3] = [
        IntegralFamily::K3SvJoinKn,
        IntegralFamily::K11SeJoinKn,
        IntegralFamily::JoinUnionComplete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IntegralFamily::K3SvJoinKn => "k3_svjoin_kn",
            IntegralFamily::K11SeJoinKn => "k11_sejoin_kn",
            IntegralFamily::JoinUnionComplete => "join_union_complete",
        }
    }
}

impl fmt::Display for IntegralFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IntegralFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IntegralFamily::ALL
            .into_iter()
            .find(|v| v.name() == s || v.name().replace('_', "-") == s)
            .ok_or_else(|| Error::Parameter(format!("unknown integral family {s:?}")))
    }
}

/// Numeric and arithmetic integrality verdicts for one family member.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanRow {
    pub params: Vec<usize>,
    pub order: usize,
    pub numeric_integral: bool,
    pub predicate: bool,
    /// Square root for the square tests, or the integer roots of the
    /// quotient polynomial for the complete-graph family.
    pub certificate: Option<Vec<i64>>,
    pub agrees: bool,
}

fn exact_sqrt(x: u64) -> Option<i64> {
    let r = x.isqrt();
    (r * r == x).then_some(r as i64)
}

fn complete(n: usize) -> Graph {
    graph::family(graph::Family::Complete, &[n]).expect("n >= 1")
}

/// Integer roots of a monic integer polynomial (lowest degree first) when
/// all its roots are integers, verified by exact re-expansion.
pub fn integer_roots(coeffs: &[i64]) -> Result<Option<Vec<i64>>> {
    let real: Vec<f64> = coeffs.iter().map(|&c| c as f64).collect();
    let roots = linalg::polynomial_roots(&real)?;
    if roots.iter().any(|z| z.im.abs() > 1e-6) {
        return Ok(None);
    }
    let mut rounded: Vec<i64> = roots.iter().map(|z| z.re.round() as i64).collect();
    rounded.sort_unstable_by(|a, b| b.cmp(a));
    let mut expanded = vec![1i64];
    for &r in &rounded {
        let mut next = vec![0i64; expanded.len() + 1];
        for (k, &c) in expanded.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= r * c;
        }
        expanded = next;
    }
    Ok((expanded == coeffs).then_some(rounded))
}

fn scan_one(family: IntegralFamily, params: Vec<usize>) -> Result<ScanRow> {
    let (g, predicate, certificate) = match family {
        IntegralFamily::K3SvJoinKn => {
            let n = params[0];
            let g = graph::subdivision_vertex_join(&complete(3), &complete(n))?;
            let cert = exact_sqrt(12 * n as u64 + 9);
            (g, cert.is_some(), cert.map(|r| vec![r]))
        }
        IntegralFamily::K11SeJoinKn => {
            let n = params[0];
            let g = graph::subdivision_edge_join(&complete(11), &complete(n))?;
            let cert = exact_sqrt(44 * n as u64 + 3645);
            (g, cert.is_some(), cert.map(|r| vec![r]))
        }
        IntegralFamily::JoinUnionComplete => {
            let (n, m, l) = (params[0], params[1], params[2]);
            let union = graph::disjoint_union([&complete(m), &complete(l)])?;
            let g = graph::join(&complete(n), &union);
            // Blocks K_n, K_m, K_l; the remaining eigenvalues are -1 and 0.
            let (n, m, l) = (n as f64, m as f64, l as f64);
            let f =
                SquareMatrix::from_rows(&[[n - 1.0, m, l], [n, 0.0, 2.0 * l], [n, 2.0 * m, 0.0]])?;
            let coeffs: Vec<i64> = linalg::characteristic_polynomial(&f)
                .iter()
                .map(|c| c.round() as i64)
                .collect();
            let cert = integer_roots(&coeffs)?;
            (g, cert.is_some(), cert)
        }
    };
    let spectrum = metrics::epsilon_spectrum(&g)?;
    let numeric_integral = is_integral(&spectrum, DEFAULT_INTEGRAL_TOL);
    Ok(ScanRow {
        params,
        order: g.order(),
        numeric_integral,
        predicate,
        certificate,
        agrees: numeric_integral == predicate,
    })
}

/// Checks every member of `family` with parameters in `range`. For the
/// complete-graph family all of `n`, `m`, `l` range over `range` with
/// `m <= l`.
pub fn integral_family_scan(
    family: IntegralFamily,
    range: RangeInclusive<usize>,
) -> Result<Vec<ScanRow>> {
    let (lo, hi) = (*range.start(), *range.end());
    if lo == 0 {
        return Err(Error::Parameter("scan parameters start at 1".to_string()));
    }
    let cap = match family {
        IntegralFamily::JoinUnionComplete => MAX_TRIPLE_PARAM,
        _ => MAX_SCAN_N,
    };
    if hi > cap {
        return Err(Error::Parameter(format!(
            "{family} scans are limited to parameters <= {cap}, got {hi}"
        )));
    }
    let params: Vec<Vec<usize>> = match family {
        IntegralFamily::JoinUnionComplete => range
            .clone()
            .flat_map(|n| {
                range
                    .clone()
                    .flat_map(move |m| (m..=hi).map(move |l| vec![n, m, l]))
            })
            .collect(),
        _ => range.map(|n| vec![n]).collect(),
    };
    params
        .into_par_iter()
        .map(|p| scan_one(family, p))
        .collect()
}
