use crate::ext_real::ExtReal;
use thiserror::Error;

/// A grid coordinate.  One-dimensional signals use `[i, 0]`.
pub type Point = [i64; 2];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SignalError {
    #[error("signals are 1- or 2-dimensional, got dims = {0}")]
    BadDims(usize),
    #[error("every extent must be positive, got {0:?}")]
    EmptyExtent(Vec<usize>),
    #[error("extents {extents:?} require {expected} samples, got {got}")]
    SampleCount {
        extents: Vec<usize>,
        expected: usize,
        got: usize,
    },
}

/// A finite d-dimensional grid of extended-real samples, d ∈ {1, 2},
/// stored row-major.  The domain of a signal with extents `[r, c]` is
/// `{0..r} × {0..c}`; reads outside it return `None` so that operators
/// can restrict their windows to the domain.
#[derive(Clone, Debug, PartialEq)]
pub struct Signal {
    dims: usize,
    extents: [usize; 2],
    data: Vec<ExtReal>,
}

impl Signal {
    pub fn new(dims: usize, extents: &[usize], data: Vec<ExtReal>) -> Result<Signal, SignalError> {
        if dims == 0 || dims > 2 || extents.len() != dims {
            return Err(SignalError::BadDims(dims.max(extents.len())));
        }
        if extents.iter().any(|&e| e == 0) {
            return Err(SignalError::EmptyExtent(extents.to_vec()));
        }
        let full = [extents[0], if dims == 2 { extents[1] } else { 1 }];
        let expected = full[0] * full[1];
        if data.len() != expected {
            return Err(SignalError::SampleCount {
                extents: extents.to_vec(),
                expected,
                got: data.len(),
            });
        }
        Ok(Signal {
            dims,
            extents: full,
            data,
        })
    }

    pub fn new_1d(data: Vec<ExtReal>) -> Result<Signal, SignalError> {
        let n = data.len();
        Signal::new(1, &[n], data)
    }

    pub fn from_f64_1d(samples: &[f64]) -> Signal {
        Signal::new_1d(samples.iter().map(|&v| ExtReal::from_f64(v)).collect())
            .expect("non-empty 1d sample list")
    }

    pub fn from_f64_2d(rows: usize, cols: usize, samples: &[f64]) -> Signal {
        Signal::new(
            2,
            &[rows, cols],
            samples.iter().map(|&v| ExtReal::from_f64(v)).collect(),
        )
        .expect("consistent 2d sample list")
    }

    /// A signal of the given shape with every sample equal to `value`.
    pub fn filled(dims: usize, extents: &[usize], value: ExtReal) -> Result<Signal, SignalError> {
        let count: usize = extents.iter().product();
        Signal::new(dims, extents, vec![value; count])
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    /// Extents in declaration order: `[n]` for 1D, `[rows, cols]` for 2D.
    pub fn extents(&self) -> &[usize] {
        &self.extents[..self.dims]
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn samples(&self) -> &[ExtReal] {
        &self.data
    }

    pub fn same_shape(&self, other: &Signal) -> bool {
        self.dims == other.dims && self.extents == other.extents
    }

    pub fn in_domain(&self, p: Point) -> bool {
        (0..self.extents[0] as i64).contains(&p[0]) && (0..self.extents[1] as i64).contains(&p[1])
    }

    /// The sample at `p`, or `None` when `p` lies outside the domain.
    pub fn get(&self, p: Point) -> Option<ExtReal> {
        if self.in_domain(p) {
            Some(self.data[p[0] as usize * self.extents[1] + p[1] as usize])
        } else {
            None
        }
    }

    /// The sample at an in-domain point.
    pub fn at(&self, p: Point) -> ExtReal {
        self.get(p)
            .unwrap_or_else(|| panic!("point {p:?} outside domain {:?}", self.extents()))
    }

    pub fn set(&mut self, p: Point, v: ExtReal) {
        assert!(
            self.in_domain(p),
            "point {p:?} outside domain {:?}",
            self.extents()
        );
        self.data[p[0] as usize * self.extents[1] + p[1] as usize] = v;
    }

    /// Row-major iteration over the domain.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        let [e0, e1] = self.extents;
        (0..e0 as i64).flat_map(move |i| (0..e1 as i64).map(move |j| [i, j]))
    }

    /// A signal of the same shape with samples produced by `op`.
    pub fn map(&self, op: impl Fn(ExtReal) -> ExtReal) -> Signal {
        Signal {
            dims: self.dims,
            extents: self.extents,
            data: self.data.iter().map(|&v| op(v)).collect(),
        }
    }

    /// Pointwise combination of two same-shaped signals.
    pub fn zip_map(&self, other: &Signal, op: impl Fn(ExtReal, ExtReal) -> ExtReal) -> Signal {
        assert!(
            self.same_shape(other),
            "shape mismatch: {:?} vs {:?}",
            self.extents(),
            other.extents()
        );
        Signal {
            dims: self.dims,
            extents: self.extents,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    /// True when every sample is finite.
    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Largest absolute finite difference against a same-shaped signal;
    /// differing infinities yield +∞.
    pub fn sup_distance(&self, other: &Signal) -> f64 {
        assert!(self.same_shape(other), "shape mismatch in sup_distance");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| match (a, b) {
                (ExtReal::Finite(x), ExtReal::Finite(y)) => (x - y).abs(),
                (x, y) if x == y => 0.0,
                _ => f64::INFINITY,
            })
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_checks_the_sample_count() {
        let err = Signal::new(1, &[3], vec![ExtReal::finite(0.0); 2]).unwrap_err();
        assert_eq!(
            err,
            SignalError::SampleCount {
                extents: vec![3],
                expected: 3,
                got: 2
            }
        );
        assert_eq!(
            Signal::new(3, &[1, 1, 1], vec![ExtReal::finite(0.0)]).unwrap_err(),
            SignalError::BadDims(3)
        );
        assert_eq!(
            Signal::new(2, &[0, 4], vec![]).unwrap_err(),
            SignalError::EmptyExtent(vec![0, 4])
        );
    }

    #[test]
    fn row_major_indexing() {
        let s = Signal::from_f64_2d(2, 3, &[0.0, 1.0, 2.0, 10.0, 11.0, 12.0]);
        assert_eq!(s.at([0, 2]), ExtReal::finite(2.0));
        assert_eq!(s.at([1, 0]), ExtReal::finite(10.0));
        assert_eq!(s.get([2, 0]), None);
        assert_eq!(s.get([0, -1]), None);
        assert_eq!(s.points().count(), 6);
    }

    #[test]
    fn one_dimensional_points_have_zero_second_coordinate() {
        let s = Signal::from_f64_1d(&[5.0, 6.0]);
        let pts: Vec<Point> = s.points().collect();
        assert_eq!(pts, vec![[0, 0], [1, 0]]);
        assert_eq!(s.extents(), &[2]);
    }

    #[test]
    fn sup_distance_sees_infinities() {
        let a = Signal::new_1d(vec![ExtReal::Bottom, ExtReal::finite(1.0)]).unwrap();
        let b = Signal::new_1d(vec![ExtReal::Bottom, ExtReal::finite(3.0)]).unwrap();
        assert_eq!(a.sup_distance(&b), 2.0);
        let c = Signal::new_1d(vec![ExtReal::Top, ExtReal::finite(1.0)]).unwrap();
        assert_eq!(a.sup_distance(&c), f64::INFINITY);
    }
}
