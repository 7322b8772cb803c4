use grid_core::{pointwise_leq, ExtReal, Signal, StructuringFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpKind {
    Erosion,
    Dilation,
    Opening,
    Closing,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MorphOpResult {
    pub output: Signal,
    pub op_kind: OpKind,
}

/// (ε_b f)(x) = inf over window offsets y with x+y in the domain of f(x+y) − b(y).
pub fn erode(f: &Signal, b: &StructuringFunction) -> Signal {
    let mut out = Vec::with_capacity(f.len());
    for x in f.points() {
        let mut acc = ExtReal::Top;
        for (y, w) in b.iter() {
            if let Some(v) = f.get([x[0] + y[0], x[1] + y[1]]) {
                acc = acc.min(v.add_offset(-w));
            }
        }
        out.push(acc);
    }
    Signal::new(f.dims(), f.extents(), out).expect("same shape as input")
}

/// (δ_b f)(x) = sup over window offsets y with x−y in the domain of f(x−y) + b(y).
pub fn dilate(f: &Signal, b: &StructuringFunction) -> Signal {
    let mut out = Vec::with_capacity(f.len());
    for x in f.points() {
        let mut acc = ExtReal::Bottom;
        for (y, w) in b.iter() {
            if let Some(v) = f.get([x[0] - y[0], x[1] - y[1]]) {
                acc = acc.max(v.add_offset(w));
            }
        }
        out.push(acc);
    }
    Signal::new(f.dims(), f.extents(), out).expect("same shape as input")
}

pub fn open(f: &Signal, b: &StructuringFunction) -> Signal {
    dilate(&erode(f, b), b)
}

pub fn close(f: &Signal, b: &StructuringFunction) -> Signal {
    erode(&dilate(f, b), b)
}

pub fn apply(f: &Signal, b: &StructuringFunction, op_kind: OpKind) -> MorphOpResult {
    let output = match op_kind {
        OpKind::Erosion => erode(f, b),
        OpKind::Dilation => dilate(f, b),
        OpKind::Opening => open(f, b),
        OpKind::Closing => close(f, b),
    };
    MorphOpResult { output, op_kind }
}

/// Checks the Galois law (δ_b g ≤ f) ⟺ (g ≤ ε_b f) on one triple.
pub fn adjunction_holds(b: &StructuringFunction, f: &Signal, g: &Signal) -> bool {
    assert!(f.same_shape(g), "adjunction_holds needs signals of the same shape");
    pointwise_leq(&dilate(g, b), f) == pointwise_leq(g, &erode(f, b))
}
