//! Equienergetic and ε-integral graph families.

mod cubic;
mod families;
mod report;
mod scan;

pub use cubic::{enumerate_cubic, noncospectral_cubic_pair};
pub use families::{
    equienergetic_pair_12t, equienergetic_pair_6t1, subdivision_join_family, JoinFamily,
};
pub use report::{ConstructionReport, EQUIENERGY_TOL};
pub use scan::{
    integer_roots, integral_family_scan, IntegralFamily, ScanRow, MAX_SCAN_N, MAX_TRIPLE_PARAM,
};
