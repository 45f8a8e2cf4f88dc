//! Closed-form ε-spectra of join-type operations on regular graphs, and
//! their comparison against the numerically computed spectra.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::linalg::{
    self, group, max_deviation, small_eigenvalues, Spectrum, SquareMatrix, DEFAULT_GROUP_TOL,
    DEFAULT_INTEGRAL_TOL,
};
use crate::metrics;

/// Tolerance for matching the largest adjacency eigenvalue to the degree.
const DEGREE_TOL: f64 = 1e-6;

/// Order, size, degree and adjacency spectrum of a regular graph.
#[derive(Clone, Debug, PartialEq)]
pub struct RegularGraphData {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub a_spectrum: Spectrum,
}

impl RegularGraphData {
    pub fn new(p: usize, q: usize, r: usize, a_spectrum: Spectrum) -> Result<Self> {
        if 2 * q != p * r {
            return Err(Error::Contract(format!(
                "2q = {} but pr = {}",
                2 * q,
                p * r
            )));
        }
        if a_spectrum.order() != p {
            return Err(Error::Contract(format!(
                "spectrum has {} values for {p} vertices",
                a_spectrum.order()
            )));
        }
        match a_spectrum.largest() {
            Some(top) if (top - r as f64).abs() <= DEGREE_TOL => {}
            other => {
                return Err(Error::Contract(format!(
                    "largest eigenvalue {other:?} differs from the degree {r}"
                )))
            }
        }
        Ok(RegularGraphData {
            p,
            q,
            r,
            a_spectrum,
        })
    }

    pub fn from_graph(g: &Graph) -> Result<Self> {
        let r = g
            .regularity()
            .ok_or_else(|| Error::Hypothesis(format!("{} is not regular", describe(g))))?;
        let a = group(
            &linalg::sym_eigenvalues(&g.adjacency_matrix())?,
            DEFAULT_GROUP_TOL,
        );
        RegularGraphData::new(g.order(), g.size(), r, a)
    }

    /// Adjacency eigenvalues with one copy of the degree removed.
    pub fn others(&self) -> Vec<f64> {
        let mut values = self.a_spectrum.values();
        values.remove(0);
        values
    }

    pub fn is_complete(&self) -> bool {
        self.r + 1 == self.p
    }

    /// A regular graph is connected exactly when its degree is a simple
    /// adjacency eigenvalue.
    pub fn is_connected(&self) -> bool {
        self.a_spectrum.multiplicity_of(self.r as f64, DEGREE_TOL) == 1
    }

    fn p_f(&self) -> f64 {
        self.p as f64
    }

    fn q_f(&self) -> f64 {
        self.q as f64
    }

    fn r_f(&self) -> f64 {
        self.r as f64
    }
}

fn describe(g: &Graph) -> String {
    g.label().map_or_else(|| g.to_graph6(), str::to_string)
}

fn collect(values: Vec<f64>) -> Spectrum {
    group(&values, DEFAULT_GROUP_TOL)
}

/// Roots of `a t² + b t + c` without cancellation, larger-magnitude root
/// first. Requires a nonnegative discriminant and `a != 0`.
pub fn stable_quadratic_roots(a: f64, b: f64, c: f64) -> (f64, f64) {
    let disc = (b * b - 4.0 * a * c).max(0.0);
    let sign = if b < 0.0 { -1.0 } else { 1.0 };
    let q = -(b + sign * disc.sqrt()) / 2.0;
    if q == 0.0 {
        (0.0, 0.0)
    } else {
        (q / a, c / q)
    }
}

/// The two values `μ = -3t + 4 - 4s` where `3t² + 4(s-1)t - 3s = 0`.
pub fn sv_join_pair(s: f64) -> (f64, f64) {
    let (t1, t2) = stable_quadratic_roots(3.0, 4.0 * (s - 1.0), -3.0 * s);
    (-3.0 * t1 + 4.0 - 4.0 * s, -3.0 * t2 + 4.0 - 4.0 * s)
}

/// The two values `μ = -3t` where `3t² - 4(1+λ)t - 3(λ+r) = 0`.
pub fn se_join_pair(lambda: f64, r: f64) -> (f64, f64) {
    let (t1, t2) = stable_quadratic_roots(3.0, -4.0 * (1.0 + lambda), -3.0 * (lambda + r));
    (-3.0 * t1, -3.0 * t2)
}

fn quotient_values<const N: usize>(rows: [[f64; N]; N]) -> Result<Vec<f64>> {
    small_eigenvalues(&SquareMatrix::from_rows(&rows)?)
}

fn shifted(d: &RegularGraphData) -> impl Iterator<Item = f64> {
    d.others().into_iter().map(|x| -2.0 * (1.0 + x))
}

fn require_connected(d: &RegularGraphData, name: &str) -> Result<()> {
    if d.is_connected() {
        Ok(())
    } else {
        Err(Error::Hypothesis(format!("{name} must be connected")))
    }
}

fn require_subdividable(d: &RegularGraphData, name: &str) -> Result<()> {
    if d.r < 2 {
        return Err(Error::Hypothesis(format!(
            "{name} must be r-regular with r >= 2, got r = {}",
            d.r
        )));
    }
    require_connected(d, name)
}

fn require_non_complete(d: &RegularGraphData, name: &str) -> Result<()> {
    if d.is_complete() {
        return Err(Error::Hypothesis(format!("{name} must not be complete")));
    }
    Ok(())
}

/// Adjacency spectrum of the line graph.
pub fn line_spectrum(d: &RegularGraphData) -> Result<Spectrum> {
    if d.r < 1 {
        return Err(Error::Contract("line spectrum needs r >= 1".to_string()));
    }
    if d.q < d.p {
        return Err(Error::Contract(format!(
            "line spectrum needs q >= p, got q = {} < p = {}",
            d.q, d.p
        )));
    }
    let r = d.r_f();
    let mut values = vec![2.0 * r - 2.0];
    values.extend(d.others().into_iter().map(|x| x + r - 2.0));
    values.extend(std::iter::repeat_n(-2.0, d.q - d.p));
    Ok(collect(values))
}

/// Adjacency spectrum of the second iterated line graph.
pub fn l2_spectrum(d: &RegularGraphData) -> Result<Spectrum> {
    if d.r < 3 {
        return Err(Error::Contract(format!(
            "second line spectrum needs r >= 3, got {}",
            d.r
        )));
    }
    let r = d.r_f();
    let mut values = vec![4.0 * r - 6.0];
    values.extend(d.others().into_iter().map(|x| x + 3.0 * r - 6.0));
    values.extend(std::iter::repeat_n(2.0 * r - 6.0, d.p * (d.r - 2) / 2));
    values.extend(std::iter::repeat_n(-2.0, d.p * d.r * (d.r - 2) / 2));
    Ok(collect(values))
}

pub fn complement_spectrum(d: &RegularGraphData) -> Spectrum {
    let mut values = vec![d.p_f() - d.r_f() - 1.0];
    values.extend(d.others().into_iter().map(|x| -(x + 1.0)));
    collect(values)
}

/// Regular data of the line graph.
pub fn line_data(d: &RegularGraphData) -> Result<RegularGraphData> {
    let spectrum = line_spectrum(d)?;
    let r = 2 * d.r - 2;
    RegularGraphData::new(d.q, d.q * r / 2, r, spectrum)
}

/// Regular data of the second iterated line graph.
pub fn l2_data(d: &RegularGraphData) -> Result<RegularGraphData> {
    let spectrum = l2_spectrum(d)?;
    let p = d.p * d.r * (d.r - 1) / 2;
    let r = 4 * d.r - 6;
    RegularGraphData::new(p, p * r / 2, r, spectrum)
}

/// ε-spectrum of the subdivision-vertex join `G₁ ⋁̇ G₂`.
pub fn predict_sv_join(d1: &RegularGraphData, d2: &RegularGraphData) -> Result<Spectrum> {
    require_subdividable(d1, "G1")?;
    require_connected(d2, "G2")?;
    let (p1, q1, r1) = (d1.p_f(), d1.q_f(), d1.r_f());
    let (p2, r2) = (d2.p_f(), d2.r_f());
    let mut values = vec![4.0; d1.q - d1.p];
    values.extend(shifted(d2));
    for lambda in d1.others() {
        let (a, b) = sv_join_pair(lambda + r1);
        values.extend([a, b]);
    }
    values.extend(quotient_values([
        [0.0, 3.0 * q1 - 3.0 * r1, 0.0],
        [3.0 * p1 - 6.0, 4.0 * q1 - 8.0 * r1 + 4.0, 2.0 * p2],
        [0.0, 2.0 * q1, 2.0 * (p2 - r2 - 1.0)],
    ])?);
    Ok(collect(values))
}

/// ε-spectrum of the subdivision-edge join `G₁ ⋁̄ G₂`.
pub fn predict_se_join(d1: &RegularGraphData, d2: &RegularGraphData) -> Result<Spectrum> {
    require_subdividable(d1, "G1")?;
    require_connected(d2, "G2")?;
    let (p1, q1, r1) = (d1.p_f(), d1.q_f(), d1.r_f());
    let (p2, r2) = (d2.p_f(), d2.r_f());
    let mut values = vec![0.0; d1.q - d1.p];
    values.extend(shifted(d2));
    for lambda in d1.others() {
        let (a, b) = se_join_pair(lambda, r1);
        values.extend([a, b]);
    }
    values.extend(quotient_values([
        [4.0 * (p1 - 1.0 - r1), 3.0 * (q1 - r1), 2.0 * p2],
        [3.0 * (p1 - 2.0), 0.0, 0.0],
        [2.0 * p1, 0.0, 2.0 * (p2 - r2 - 1.0)],
    ])?);
    Ok(collect(values))
}

/// ε-spectrum of `G ∨ K₁`.
pub fn predict_join_k1(d: &RegularGraphData) -> Result<Spectrum> {
    require_non_complete(d, "G")?;
    let k = d.p_f() - d.r_f() - 1.0;
    let root = (k * k + d.p_f()).sqrt();
    let mut values = vec![k + root, k - root];
    values.extend(shifted(d));
    Ok(collect(values))
}

/// ε-spectrum of `G ∨ G`.
pub fn predict_self_join(d: &RegularGraphData) -> Result<Spectrum> {
    require_non_complete(d, "G")?;
    let mut values = vec![2.0 * (d.p_f() - d.r_f() - 1.0); 2];
    for x in shifted(d) {
        values.extend([x, x]);
    }
    Ok(collect(values))
}

/// ε-spectrum of `G₀ ∨ (G₁ ∪ G₂)`.
///
/// Needs `G₀` non-complete: a complete `G₀` has eccentricity-1 vertices and a
/// different block structure.
pub fn predict_join_union(
    d0: &RegularGraphData,
    d1: &RegularGraphData,
    d2: &RegularGraphData,
) -> Result<Spectrum> {
    require_non_complete(d0, "G0")?;
    require_connected(d1, "G1")?;
    require_connected(d2, "G2")?;
    let mut values: Vec<f64> = shifted(d0).chain(shifted(d1)).chain(shifted(d2)).collect();
    let (p0, r0) = (d0.p_f(), d0.r_f());
    let (p1, r1) = (d1.p_f(), d1.r_f());
    let (p2, r2) = (d2.p_f(), d2.r_f());
    values.extend(quotient_values([
        [2.0 * (p0 - 1.0 - r0), 0.0, 0.0],
        [0.0, 2.0 * (p1 - 1.0 - r1), 2.0 * p2],
        [0.0, 2.0 * p1, 2.0 * (p2 - 1.0 - r2)],
    ])?);
    Ok(collect(values))
}

/// ε-spectrum of `G₀ ⋁̇ (G₁ ∪ G₂)`.
pub fn predict_sv_join_union(
    d0: &RegularGraphData,
    d1: &RegularGraphData,
    d2: &RegularGraphData,
) -> Result<Spectrum> {
    require_subdividable(d0, "G0")?;
    require_connected(d1, "G1")?;
    require_connected(d2, "G2")?;
    let (p0, q0, r0) = (d0.p_f(), d0.q_f(), d0.r_f());
    let (p1, r1) = (d1.p_f(), d1.r_f());
    let (p2, r2) = (d2.p_f(), d2.r_f());
    let mut values = vec![4.0; d0.q - d0.p];
    values.extend(shifted(d1).chain(shifted(d2)));
    for lambda in d0.others() {
        let (a, b) = sv_join_pair(lambda + r0);
        values.extend([a, b]);
    }
    values.extend(quotient_values([
        [0.0, 3.0 * (q0 - r0), 0.0, 0.0],
        [
            3.0 * (p0 - 2.0),
            4.0 * (q0 - 2.0 * r0 + 1.0),
            2.0 * p1,
            2.0 * p2,
        ],
        [0.0, 2.0 * q0, 2.0 * (p1 - r1 - 1.0), 2.0 * p2],
        [0.0, 2.0 * q0, 2.0 * p1, 2.0 * (p2 - r2 - 1.0)],
    ])?);
    Ok(collect(values))
}

/// ε-spectrum of `G₀ ⋁̄ (G₁ ∪ G₂)`.
pub fn predict_se_join_union(
    d0: &RegularGraphData,
    d1: &RegularGraphData,
    d2: &RegularGraphData,
) -> Result<Spectrum> {
    require_subdividable(d0, "G0")?;
    require_connected(d1, "G1")?;
    require_connected(d2, "G2")?;
    let (p0, q0, r0) = (d0.p_f(), d0.q_f(), d0.r_f());
    let (p1, r1) = (d1.p_f(), d1.r_f());
    let (p2, r2) = (d2.p_f(), d2.r_f());
    let mut values = vec![0.0; d0.q - d0.p];
    values.extend(shifted(d1).chain(shifted(d2)));
    for lambda in d0.others() {
        let (a, b) = se_join_pair(lambda, r0);
        values.extend([a, b]);
    }
    values.extend(quotient_values([
        [4.0 * (p0 - 1.0 - r0), 3.0 * (q0 - r0), 2.0 * p1, 2.0 * p2],
        [3.0 * (p0 - 2.0), 0.0, 0.0, 0.0],
        [2.0 * p0, 0.0, 2.0 * (p1 - 1.0 - r1), 2.0 * p2],
        [2.0 * p0, 0.0, 2.0 * p1, 2.0 * (p2 - 1.0 - r2)],
    ])?);
    Ok(collect(values))
}

/// Parameters `(p₁, q₁, r₁, p₂, r₂)` of a two-operand subdivision join.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct JoinParams {
    pub p1: i64,
    pub q1: i64,
    pub r1: i64,
    pub p2: i64,
    pub r2: i64,
}

impl JoinParams {
    pub fn new(p1: i64, q1: i64, r1: i64, p2: i64, r2: i64) -> Result<Self> {
        if r1 < 2 {
            return Err(Error::Hypothesis(format!("r1 must be >= 2, got {r1}")));
        }
        if 2 * q1 != p1 * r1 || p2 < 1 || r2 < 0 || r2 >= p2 || (p2 * r2) % 2 != 0 {
            return Err(Error::Parameter(format!(
                "({p1}, {q1}, {r1}, {p2}, {r2}) are not parameters of two regular graphs"
            )));
        }
        Ok(JoinParams { p1, q1, r1, p2, r2 })
    }

    pub fn from_data(d1: &RegularGraphData, d2: &RegularGraphData) -> Result<Self> {
        JoinParams::new(
            d1.p as i64,
            d1.q as i64,
            d1.r as i64,
            d2.p as i64,
            d2.r as i64,
        )
    }

    pub fn order(&self) -> i64 {
        self.p1 + self.q1 + self.p2
    }
}

/// ε-Wiener index of `G₁ ⋁̇ G₂` from the operand parameters.
pub fn wiener_sv_join(k: &JoinParams) -> Ratio<i64> {
    let JoinParams { p1, q1, r1, p2, r2 } = *k;
    Ratio::from_integer(q1 * (3 * p1 - 4 * r1 + 2 * q1 - 1) + p2 * (p2 + 2 * q1 - r2 - 1))
        - Ratio::new(3 * r1 * p1, 2)
}

/// ε-Wiener index of `G₁ ⋁̄ G₂` from the operand parameters.
pub fn wiener_se_join(k: &JoinParams) -> Ratio<i64> {
    let JoinParams { p1, q1, r1, p2, r2 } = *k;
    Ratio::from_integer(2 * p1 * p1 + p2 * p2 + 3 * q1 * (p1 - 1) - p2 * (r2 + 1))
        - Ratio::new(p1 * (4 - 4 * p2 + 7 * r1), 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JoinVariant {
    SvJoin,
    SeJoin,
}

/// Lower bound `2 W_ε / n` on the ε-spectral radius of the composite.
pub fn rho_bounds(variant: JoinVariant, k: &JoinParams) -> Ratio<i64> {
    let w = match variant {
        JoinVariant::SvJoin => wiener_sv_join(k),
        JoinVariant::SeJoin => wiener_se_join(k),
    };
    w * 2 / k.order()
}

/// The operations with a closed-form predictor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    SvJoin,
    SeJoin,
    JoinK1,
    SelfJoin,
    JoinUnion,
    SvJoinUnion,
    SeJoinUnion,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::SvJoin,
        Theorem::SeJoin,
        Theorem::JoinK1,
        Theorem::SelfJoin,
        Theorem::JoinUnion,
        Theorem::SvJoinUnion,
        Theorem::SeJoinUnion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::SvJoin => "sv-join",
            Theorem::SeJoin => "se-join",
            Theorem::JoinK1 => "join-k1",
            Theorem::SelfJoin => "self-join",
            Theorem::JoinUnion => "join-union",
            Theorem::SvJoinUnion => "sv-join-union",
            Theorem::SeJoinUnion => "se-join-union",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Theorem::JoinK1 | Theorem::SelfJoin => 1,
            Theorem::SvJoin | Theorem::SeJoin => 2,
            Theorem::JoinUnion | Theorem::SvJoinUnion | Theorem::SeJoinUnion => 3,
        }
    }

    /// Predicted ε-spectrum from operand data; `data.len()` must equal the
    /// arity.
    pub fn predict(self, data: &[RegularGraphData]) -> Result<Spectrum> {
        self.check_arity(data.len())?;
        match self {
            Theorem::SvJoin => predict_sv_join(&data[0], &data[1]),
            Theorem::SeJoin => predict_se_join(&data[0], &data[1]),
            Theorem::JoinK1 => predict_join_k1(&data[0]),
            Theorem::SelfJoin => predict_self_join(&data[0]),
            Theorem::JoinUnion => predict_join_union(&data[0], &data[1], &data[2]),
            Theorem::SvJoinUnion => predict_sv_join_union(&data[0], &data[1], &data[2]),
            Theorem::SeJoinUnion => predict_se_join_union(&data[0], &data[1], &data[2]),
        }
    }

    /// The composite graph the prediction describes.
    pub fn build(self, operands: &[Graph]) -> Result<Graph> {
        self.check_arity(operands.len())?;
        let union = || graph::disjoint_union([&operands[1], &operands[2]]);
        match self {
            Theorem::SvJoin => graph::subdivision_vertex_join(&operands[0], &operands[1]),
            Theorem::SeJoin => graph::subdivision_edge_join(&operands[0], &operands[1]),
            Theorem::JoinK1 => Ok(graph::join(&operands[0], &Graph::empty(1))),
            Theorem::SelfJoin => Ok(graph::join(&operands[0], &operands[0])),
            Theorem::JoinUnion => Ok(graph::join(&operands[0], &union()?)),
            Theorem::SvJoinUnion => graph::subdivision_vertex_join(&operands[0], &union()?),
            Theorem::SeJoinUnion => graph::subdivision_edge_join(&operands[0], &union()?),
        }
    }

    fn check_arity(self, got: usize) -> Result<()> {
        if got == self.arity() {
            Ok(())
        } else {
            Err(Error::Parameter(format!(
                "{} takes {} operand(s), got {got}",
                self.name(),
                self.arity()
            )))
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s || t.name().replace('-', "_") == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Theorem::ALL.iter().map(|t| t.name()).collect();
                Error::Parameter(format!("unknown theorem {s:?}; expected one of {names:?}"))
            })
    }
}

/// Predicted against computed ε-spectrum for one operand tuple.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub operands: Vec<String>,
    pub order: usize,
    pub predicted: Spectrum,
    pub computed: Spectrum,
    #[serde(serialize_with = "crate::linalg::rounded::option")]
    pub max_deviation: Option<f64>,
    pub tol: f64,
    pub pass: bool,
    pub integral: bool,
    #[serde(serialize_with = "crate::linalg::rounded::scalar")]
    pub energy: f64,
}

/// Builds the composite, computes its ε-spectrum, and compares it with the
/// closed form at tolerance `tol`.
pub fn verify(theorem: Theorem, operands: &[Graph], tol: f64) -> Result<VerificationReport> {
    theorem.check_arity(operands.len())?;
    let data = operands
        .iter()
        .map(RegularGraphData::from_graph)
        .collect::<Result<Vec<_>>>()?;
    let predicted = theorem.predict(&data)?;
    let built = theorem.build(operands)?;
    let computed = metrics::epsilon_spectrum(&built)?;
    let deviation = max_deviation(&predicted, &computed);
    Ok(VerificationReport {
        theorem,
        operands: operands.iter().map(describe).collect(),
        order: built.order(),
        pass: deviation.is_some_and(|d| d <= tol),
        max_deviation: deviation,
        tol,
        integral: linalg::is_integral(&computed, DEFAULT_INTEGRAL_TOL),
        energy: linalg::energy(&computed),
        predicted,
        computed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, line_graph, Family};
    use crate::linalg::{energy, is_integral, spectra_equal};

    fn data(kind: Family, params: &[usize]) -> RegularGraphData {
        RegularGraphData::from_graph(&family(kind, params).unwrap()).unwrap()
    }

    fn assert_values(s: &Spectrum, want: &[f64]) {
        let got = s.values();
        assert_eq!(got.len(), want.len(), "{got:?}");
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < 1e-9, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn stable_roots() {
        let (a, b) = stable_quadratic_roots(1.0, -3.0, 2.0);
        assert_eq!((a, b), (2.0, 1.0));
        let (a, b) = stable_quadratic_roots(1.0, 1e8, 1.0);
        assert!((a + 1e8).abs() < 1.0 && (b + 1e-8).abs() < 1e-20);
    }

    #[test]
    fn sv_pair_matches_closed_form() {
        for s in [0.0, 0.5, 1.0, 2.0, 3.7, 10.0] {
            let (a, b) = sv_join_pair(s);
            let root = (4.0 * s * s + s + 4.0).sqrt();
            let want = [2.0 * (1.0 - s) + root, 2.0 * (1.0 - s) - root];
            let mut got = [a, b];
            got.sort_by(|x, y| y.total_cmp(x));
            assert!((got[0] - want[0]).abs() < 1e-12 && (got[1] - want[1]).abs() < 1e-12);
        }
    }

    #[test]
    fn line_and_complement_spectra() {
        assert_values(
            &line_spectrum(&data(Family::Cycle, &[4])).unwrap(),
            &[2.0, 0.0, 0.0, -2.0],
        );
        assert_values(
            &line_spectrum(&data(Family::Prism, &[])).unwrap(),
            &[4.0, 2.0, 1.0, 1.0, -1.0, -1.0, -2.0, -2.0, -2.0],
        );
        assert_values(
            &line_spectrum(&data(Family::Complete, &[4])).unwrap(),
            &[4.0, 0.0, 0.0, 0.0, -2.0, -2.0],
        );
        let mut prism_l2 = vec![6.0, 4.0, 3.0, 3.0, 1.0, 1.0, 0.0, 0.0, 0.0];
        prism_l2.extend([-2.0; 9]);
        assert_values(&l2_spectrum(&data(Family::Prism, &[])).unwrap(), &prism_l2);
        let mut k33_l2 = vec![6.0, 3.0, 3.0, 3.0, 3.0, 0.0, 0.0, 0.0, 0.0];
        k33_l2.extend([-2.0; 9]);
        assert_values(
            &l2_spectrum(&data(Family::CompleteBipartite, &[3, 3])).unwrap(),
            &k33_l2,
        );
        assert!(l2_spectrum(&data(Family::Cycle, &[5])).is_err());
        assert!(line_spectrum(&data(Family::Complete, &[2])).is_err());

        let petersen = complement_spectrum(&data(Family::Petersen, &[]));
        assert_values(
            &petersen,
            &[6.0, 1.0, 1.0, 1.0, 1.0, -2.0, -2.0, -2.0, -2.0, -2.0],
        );
        assert_values(
            &complement_spectrum(&data(Family::Complete, &[4])),
            &[0.0; 4],
        );
    }

    #[test]
    fn l2_matches_built_graph() {
        for (kind, params) in [
            (Family::Prism, vec![]),
            (Family::CompleteBipartite, vec![3, 3]),
        ] {
            let g = family(kind, &params).unwrap();
            let built = RegularGraphData::from_graph(&line_graph(&line_graph(&g))).unwrap();
            let closed = l2_data(&data(kind, &params)).unwrap();
            assert_eq!((built.p, built.q, built.r), (closed.p, closed.q, closed.r));
            assert!(spectra_equal(&built.a_spectrum, &closed.a_spectrum, 1e-9));
        }
    }

    #[test]
    fn cone_and_self_join_closed_forms() {
        let c4 = data(Family::Cycle, &[4]);
        let s5 = 5f64.sqrt();
        assert_values(
            &predict_join_k1(&c4).unwrap(),
            &[1.0 + s5, 2.0, 1.0 - s5, -2.0, -2.0],
        );
        let pk = predict_join_k1(&data(Family::Petersen, &[])).unwrap();
        let s46 = 46f64.sqrt();
        assert_values(
            &pk,
            &[
                6.0 + s46,
                2.0,
                2.0,
                2.0,
                2.0,
                6.0 - s46,
                -4.0,
                -4.0,
                -4.0,
                -4.0,
                -4.0,
            ],
        );
        assert_values(
            &predict_self_join(&c4).unwrap(),
            &[2.0, 2.0, 2.0, 2.0, -2.0, -2.0, -2.0, -2.0],
        );
        assert!(matches!(
            predict_join_k1(&data(Family::Complete, &[4])),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn hypotheses_are_enforced() {
        let k2 = data(Family::Complete, &[2]);
        let k1 = data(Family::Complete, &[1]);
        assert!(matches!(
            predict_sv_join(&k2, &k1),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            predict_se_join(&k2, &k1),
            Err(Error::Hypothesis(_))
        ));
        let k3 = data(Family::Complete, &[3]);
        assert!(matches!(
            predict_join_union(&k3, &k1, &k1),
            Err(Error::Hypothesis(_))
        ));
        let p3 = family(Family::Path, &[3]).unwrap();
        assert!(matches!(
            RegularGraphData::from_graph(&p3),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn three_cycle_edge_join_pairs() {
        let s = predict_se_join(&data(Family::Cycle, &[3]), &data(Family::Complete, &[1])).unwrap();
        assert_eq!(s.order(), 7);
        assert_eq!(s.multiplicity_of(3.0, 1e-9), 2);
        assert_eq!(s.multiplicity_of(-3.0, 1e-9), 2);
    }

    #[test]
    fn integral_examples() {
        let k3 = data(Family::Complete, &[3]);
        let sv = predict_sv_join(&k3, &data(Family::Complete, &[6])).unwrap();
        assert!(is_integral(&sv, 1e-6));
        let se = predict_se_join(
            &data(Family::Complete, &[11]),
            &data(Family::Complete, &[45]),
        )
        .unwrap();
        assert!(is_integral(&se, 1e-6));
        assert_eq!(se.order(), 111);
    }

    #[test]
    fn wiener_formulas() {
        let c3k1 = JoinParams::new(3, 3, 2, 1, 0).unwrap();
        assert_eq!(wiener_sv_join(&c3k1), Ratio::from_integer(15));
        assert_eq!(wiener_se_join(&c3k1), Ratio::from_integer(15));
        assert_eq!(rho_bounds(JoinVariant::SvJoin, &c3k1), Ratio::new(30, 7));
        assert!(matches!(
            JoinParams::new(2, 1, 1, 1, 0),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn verify_small_cases() {
        let c4 = family(Family::Cycle, &[4]).unwrap();
        let k2 = family(Family::Complete, &[2]).unwrap();
        for t in [Theorem::SvJoin, Theorem::SeJoin] {
            let report = verify(t, &[c4.clone(), k2.clone()], 1e-6).unwrap();
            assert!(report.pass, "{report:?}");
            assert_eq!(report.order, 10);
        }
        let report = verify(Theorem::JoinK1, std::slice::from_ref(&c4), 1e-6).unwrap();
        assert!(report.pass);
        assert!((energy(&report.computed) - report.energy).abs() < 1e-12);
        assert!(matches!(
            verify(Theorem::JoinK1, &[], 1e-6),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn theorem_names_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.name().parse::<Theorem>().unwrap(), t);
        }
        assert_eq!("sv_join".parse::<Theorem>().unwrap(), Theorem::SvJoin);
        assert!("nope".parse::<Theorem>().is_err());
    }
}
