use crate::signal::Point;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructuringError {
    #[error("support must be non-empty")]
    EmptySupport,
    #[error("duplicate offset {0:?} in support")]
    DuplicateOffset(Point),
    #[error("structuring value at {0:?} must be finite")]
    NonFiniteValue(Point),
}

/// A finite-support map from offsets to finite reals; the parameter of
/// max-plus erosions and dilations.
#[derive(Clone, Debug, PartialEq)]
pub struct StructuringFunction {
    offsets: Vec<Point>,
    values: Vec<f64>,
}

impl StructuringFunction {
    pub fn new(pairs: &[(Point, f64)]) -> Result<StructuringFunction, StructuringError> {
        if pairs.is_empty() {
            return Err(StructuringError::EmptySupport);
        }
        let mut offsets = Vec::with_capacity(pairs.len());
        let mut values = Vec::with_capacity(pairs.len());
        for &(p, v) in pairs {
            if offsets.contains(&p) {
                return Err(StructuringError::DuplicateOffset(p));
            }
            if !v.is_finite() {
                return Err(StructuringError::NonFiniteValue(p));
            }
            offsets.push(p);
            values.push(v);
        }
        Ok(StructuringFunction { offsets, values })
    }

    pub fn from_pairs_1d(pairs: &[(i64, f64)]) -> StructuringFunction {
        let full: Vec<(Point, f64)> = pairs.iter().map(|&(d, v)| ([d, 0], v)).collect();
        StructuringFunction::new(&full).expect("valid 1d structuring function")
    }

    /// Flat (all-zero) structuring function on the given support.
    pub fn flat(offsets: &[Point]) -> StructuringFunction {
        let pairs: Vec<(Point, f64)> = offsets.iter().map(|&p| (p, 0.0)).collect();
        StructuringFunction::new(&pairs).expect("valid flat structuring function")
    }

    pub fn flat_1d(offsets: &[i64]) -> StructuringFunction {
        let pairs: Vec<(Point, f64)> = offsets.iter().map(|&d| ([d, 0], 0.0)).collect();
        StructuringFunction::new(&pairs).expect("valid flat 1d structuring function")
    }

    /// Unit mass at the origin: the neutral structuring function.
    pub fn point_mass_at_origin() -> StructuringFunction {
        StructuringFunction::new(&[([0, 0], 0.0)]).expect("point mass")
    }

    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Point, f64)> + '_ {
        self.offsets.iter().copied().zip(self.values.iter().copied())
    }

    pub fn offsets(&self) -> &[Point] {
        &self.offsets
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The reflected function b*(y) = b(−y).
    pub fn reflect(&self) -> StructuringFunction {
        StructuringFunction {
            offsets: self.offsets.iter().map(|p| [-p[0], -p[1]]).collect(),
            values: self.values.clone(),
        }
    }

    pub fn is_flat(&self) -> bool {
        self.values.iter().all(|&v| v == 0.0)
    }

    pub fn support_window(&self) -> Window {
        Window::new(&self.offsets).expect("support is a valid window")
    }
}

/// A finite set of offsets: the support of a flat operator.
#[derive(Clone, Debug, PartialEq)]
pub struct Window {
    offsets: Vec<Point>,
}

impl Window {
    pub fn new(offsets: &[Point]) -> Result<Window, StructuringError> {
        if offsets.is_empty() {
            return Err(StructuringError::EmptySupport);
        }
        let mut seen = Vec::with_capacity(offsets.len());
        for &p in offsets {
            if seen.contains(&p) {
                return Err(StructuringError::DuplicateOffset(p));
            }
            seen.push(p);
        }
        Ok(Window { offsets: seen })
    }

    pub fn new_1d(offsets: &[i64]) -> Window {
        let pts: Vec<Point> = offsets.iter().map(|&d| [d, 0]).collect();
        Window::new(&pts).expect("valid 1d window")
    }

    /// The stride window {0, …, r−1}^dims used by decimated operators.
    pub fn stride_window(dims: usize, r: usize) -> Window {
        assert!(r >= 1, "stride must be at least 1");
        assert!((1..=2).contains(&dims), "window dimension must be 1 or 2");
        let side = 0..r as i64;
        let offsets: Vec<Point> = if dims == 1 {
            side.map(|i| [i, 0]).collect()
        } else {
            side.flat_map(|i| (0..r as i64).map(move |j| [i, j])).collect()
        };
        Window::new(&offsets).expect("stride window is valid")
    }

    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    pub fn offsets(&self) -> &[Point] {
        &self.offsets
    }

    pub fn iter(&self) -> impl Iterator<Item = Point> + '_ {
        self.offsets.iter().copied()
    }

    pub fn to_flat(&self) -> StructuringFunction {
        StructuringFunction::flat(&self.offsets)
    }
}
