use crate::bits::{Bits, BoolMatrix};
use crate::error::{Error, Result};
use crate::instance::OmvInstance;

/// Online matrix-vector engine: one preprocessed square matrix, at most `N`
/// rounds, each answered before the next can be asked.
#[derive(Clone, Debug)]
pub struct OmvEngine {
    matrix: BoolMatrix,
    rounds_done: usize,
    limit: usize,
}

impl OmvEngine {
    pub fn new(matrix: BoolMatrix) -> Result<Self> {
        if matrix.n_rows() != matrix.n_cols() {
            return Err(Error::Dimension(format!(
                "OMv matrix must be square, got {}x{}",
                matrix.n_rows(),
                matrix.n_cols()
            )));
        }
        let limit = matrix.n_rows();
        Ok(OmvEngine {
            matrix,
            rounds_done: 0,
            limit,
        })
    }

    pub fn dim(&self) -> usize {
        self.limit
    }

    pub fn rounds_done(&self) -> usize {
        self.rounds_done
    }

    pub fn remaining(&self) -> usize {
        self.limit - self.rounds_done
    }

    /// Exact boolean product `M · v` for the next round.
    pub fn round(&mut self, v: &Bits) -> Result<Bits> {
        if self.rounds_done >= self.limit {
            return Err(Error::RoundsExhausted(self.rounds_done));
        }
        if v.len() != self.limit {
            return Err(Error::Dimension(format!(
                "round vector has length {}, engine dimension is {}",
                v.len(),
                self.limit
            )));
        }
        self.rounds_done += 1;
        Ok(self.matrix.mul_vec(v))
    }
}

/// Plays every round of an OMv instance and returns the answers.
pub fn solve_omv(inst: &OmvInstance) -> Result<Vec<Bits>> {
    let mut engine = OmvEngine::new(inst.matrix.clone())?;
    inst.rounds.iter().map(|v| engine.round(v)).collect()
}
