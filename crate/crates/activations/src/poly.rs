use crate::error::ActivationError;

/// One affine function `<slope, x> + intercept`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffinePiece {
    slope: Vec<f64>,
    intercept: f64,
}

impl AffinePiece {
    pub fn new(slope: Vec<f64>, intercept: f64) -> Result<AffinePiece, ActivationError> {
        if slope.iter().any(|c| !c.is_finite()) || !intercept.is_finite() {
            return Err(ActivationError::NonFiniteCoefficient);
        }
        Ok(AffinePiece { slope, intercept })
    }

    pub fn dimension(&self) -> usize {
        self.slope.len()
    }

    pub fn eval(&self, x: &[f64]) -> Result<f64, ActivationError> {
        if x.len() != self.slope.len() {
            return Err(ActivationError::DimensionMismatch {
                expected: self.slope.len(),
                got: x.len(),
            });
        }
        Ok(self
            .slope
            .iter()
            .zip(x)
            .fold(self.intercept, |acc, (c, v)| acc + c * v))
    }
}

/// Max-of-mins over affine pieces, the normal form of every continuous
/// piecewise-linear function.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticePolynomial {
    pieces: Vec<AffinePiece>,
    clauses: Vec<Vec<usize>>,
}

impl LatticePolynomial {
    pub fn new(
        pieces: Vec<AffinePiece>,
        clauses: Vec<Vec<usize>>,
    ) -> Result<LatticePolynomial, ActivationError> {
        if clauses.is_empty() {
            return Err(ActivationError::NoClauses);
        }
        for (ci, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(ActivationError::EmptyClause { clause: ci });
            }
            for &index in clause {
                if index >= pieces.len() {
                    return Err(ActivationError::PieceIndexOutOfRange {
                        clause: ci,
                        index,
                        pieces: pieces.len(),
                    });
                }
            }
        }
        Ok(LatticePolynomial { pieces, clauses })
    }

    pub fn pieces(&self) -> &[AffinePiece] {
        &self.pieces
    }

    pub fn clauses(&self) -> &[Vec<usize>] {
        &self.clauses
    }
}

/// Evaluates the max over clauses of the min over clause members.
pub fn lattice_poly_eval(p: &LatticePolynomial, x: &[f64]) -> Result<f64, ActivationError> {
    let mut best = f64::NEG_INFINITY;
    for clause in &p.clauses {
        let mut clause_min = f64::INFINITY;
        for &index in clause {
            clause_min = clause_min.min(p.pieces[index].eval(x)?);
        }
        best = best.max(clause_min);
    }
    Ok(best)
}
