//! Equitable partitions and their quotient matrices.

use super::SquareMatrix;
use crate::error::{Error, Result};

const EQUITABLE_TOL: f64 = 1e-9;

/// Ordered blocks of indices covering `0..order` exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    order: usize,
}

impl Partition {
    pub fn new(blocks: Vec<Vec<usize>>, order: usize) -> Result<Partition> {
        let mut seen = vec![false; order];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Input(format!("block {b} is empty")));
            }
            for &i in block {
                if i >= order {
                    return Err(Error::Input(format!("index {i} outside 0..{order}")));
                }
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::Input(format!("index {i} appears twice")));
                }
            }
        }
        if let Some(i) = seen.iter().position(|&s| !s) {
            return Err(Error::Input(format!("index {i} is not covered")));
        }
        Ok(Partition { blocks, order })
    }

    /// Consecutive blocks of the given sizes.
    pub fn from_sizes(sizes: &[usize]) -> Result<Partition> {
        let mut blocks = Vec::with_capacity(sizes.len());
        let mut next = 0;
        for &size in sizes {
            blocks.push((next..next + size).collect());
            next += size;
        }
        Partition::new(blocks, next)
    }

    pub fn singletons(order: usize) -> Partition {
        Partition {
            blocks: (0..order).map(|i| vec![i]).collect(),
            order,
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// Quotient matrix `F[X][Y]` = common row sum of `m` over columns `Y` for
/// rows in `X`.
pub fn quotient(m: &SquareMatrix, p: &Partition) -> Result<SquareMatrix> {
    if m.order() != p.order() {
        return Err(Error::Contract(format!(
            "partition of {} indices applied to a matrix of order {}",
            p.order(),
            m.order()
        )));
    }
    let k = p.len();
    let mut f = SquareMatrix::zeros(k);
    for (x, rows) in p.blocks().iter().enumerate() {
        for (y, cols) in p.blocks().iter().enumerate() {
            let sum = |i: usize| cols.iter().map(|&j| m.get(i, j)).sum::<f64>();
            let first = sum(rows[0]);
            let scale = 1.0 + first.abs();
            if let Some(&bad) = rows[1..]
                .iter()
                .find(|&&i| (sum(i) - first).abs() > EQUITABLE_TOL * scale)
            {
                return Err(Error::Partition {
                    row_block: x,
                    col_block: y,
                    row: bad,
                });
            }
            f.set(x, y, first);
        }
    }
    Ok(f)
}
