//! Layer descriptions and their JSON wire form.

use crate::error::LayerError;
use activations::SigSpecConfig;
use grid_core::{Point, StructuringFunction, Window};
use mmbb::{ApmoItem, Kernel};
use serde_json::{json, Value};

/// One layer of a network, by construction kind.
#[derive(Clone, Debug, PartialEq)]
pub enum LayerSpec {
    Type1 { structuring: StructuringFunction },
    Type2 { kernel: Kernel, epsilon: f64 },
    Type3 { window: Window },
    Cnn { features: SigSpecConfig, stride: usize, alpha: f64 },
    Apd { stride: usize, alpha: f64 },
    Apmo { items: Vec<ApmoItem>, stride: usize },
}

impl LayerSpec {
    pub fn validate(&self) -> Result<(), LayerError> {
        match self {
            LayerSpec::Type1 { .. } | LayerSpec::Type3 { .. } => Ok(()),
            LayerSpec::Type2 { epsilon, .. } => {
                if epsilon.is_finite() && *epsilon >= 0.0 {
                    Ok(())
                } else {
                    Err(LayerError::MalformedSpec(format!(
                        "regularisation {epsilon} must be a finite non-negative real"
                    )))
                }
            }
            LayerSpec::Cnn { stride, alpha, .. } | LayerSpec::Apd { stride, alpha } => {
                if *stride == 0 {
                    Err(LayerError::MalformedSpec("stride must be at least 1".into()))
                } else if !alpha.is_finite() {
                    Err(LayerError::MalformedSpec(format!("bias {alpha} must be finite")))
                } else {
                    Ok(())
                }
            }
            LayerSpec::Apmo { items, stride } => {
                if *stride == 0 {
                    Err(LayerError::MalformedSpec("stride must be at least 1".into()))
                } else if items.is_empty() {
                    Err(LayerError::MalformedSpec("an apmo layer needs at least one branch".into()))
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            LayerSpec::Type1 { structuring } => json!({
                "kind": "type1",
                "support": points_json(structuring.offsets()),
                "values": structuring.values(),
            }),
            LayerSpec::Type2 { kernel, epsilon } => json!({
                "kind": "type2",
                "support": points_json(kernel.support()),
                "weights": kernel.weights(),
                "epsilon": epsilon,
            }),
            LayerSpec::Type3 { window } => json!({
                "kind": "type3",
                "offsets": points_json(window.offsets()),
            }),
            LayerSpec::Cnn { features, stride, alpha } => json!({
                "kind": "cnn",
                "terms": features
                    .terms()
                    .iter()
                    .map(|(w, k)| {
                        json!({
                            "weight": w,
                            "support": points_json(k.support()),
                            "weights": k.weights(),
                        })
                    })
                    .collect::<Vec<_>>(),
                "bias": features.bias(),
                "stride": stride,
                "alpha": alpha,
            }),
            LayerSpec::Apd { stride, alpha } => json!({
                "kind": "apd",
                "stride": stride,
                "alpha": alpha,
            }),
            LayerSpec::Apmo { items, stride } => json!({
                "kind": "apmo",
                "items": items
                    .iter()
                    .map(|item| {
                        json!({
                            "support": points_json(item.structuring.offsets()),
                            "values": item.structuring.values(),
                            "bias": item.bias,
                        })
                    })
                    .collect::<Vec<_>>(),
                "stride": stride,
            }),
        }
    }

    pub fn from_json(value: &Value) -> Result<LayerSpec, LayerError> {
        let kind = value
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| malformed("missing kind"))?;
        let spec = match kind {
            "type1" => LayerSpec::Type1 {
                structuring: structuring_from(value)?,
            },
            "type2" => LayerSpec::Type2 {
                kernel: kernel_from(value)?,
                epsilon: float_field(value, "epsilon")?,
            },
            "type3" => {
                let offsets = points_from(value.get("offsets"), "offsets")?;
                LayerSpec::Type3 {
                    window: Window::new(&offsets)
                        .map_err(|e| malformed(&format!("bad window: {e}")))?,
                }
            }
            "cnn" => {
                let raw_terms = value
                    .get("terms")
                    .and_then(Value::as_array)
                    .ok_or_else(|| malformed("missing terms"))?;
                let mut terms = Vec::with_capacity(raw_terms.len());
                for term in raw_terms {
                    terms.push((float_field(term, "weight")?, kernel_from(term)?));
                }
                let features = SigSpecConfig::new(terms, float_field(value, "bias")?)
                    .map_err(|e| malformed(&format!("bad feature map: {e}")))?;
                LayerSpec::Cnn {
                    features,
                    stride: stride_field(value)?,
                    alpha: float_field(value, "alpha")?,
                }
            }
            "apd" => LayerSpec::Apd {
                stride: stride_field(value)?,
                alpha: float_field(value, "alpha")?,
            },
            "apmo" => {
                let raw_items = value
                    .get("items")
                    .and_then(Value::as_array)
                    .ok_or_else(|| malformed("missing items"))?;
                let mut items = Vec::with_capacity(raw_items.len());
                for item in raw_items {
                    items.push(ApmoItem {
                        structuring: structuring_from(item)?,
                        bias: float_field(item, "bias")?,
                    });
                }
                LayerSpec::Apmo {
                    items,
                    stride: stride_field(value)?,
                }
            }
            other => return Err(malformed(&format!("unknown kind {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn malformed(reason: &str) -> LayerError {
    LayerError::MalformedSpec(reason.to_string())
}

fn points_json(points: &[Point]) -> Vec<[i64; 2]> {
    points.to_vec()
}

fn points_from(value: Option<&Value>, field: &str) -> Result<Vec<Point>, LayerError> {
    let rows = value
        .and_then(Value::as_array)
        .ok_or_else(|| malformed(&format!("missing {field}")))?;
    rows.iter()
        .map(|row| {
            let pair = row.as_array().filter(|a| a.len() == 2);
            let pair = pair.ok_or_else(|| malformed(&format!("{field} entries must be [i, j]")))?;
            let i = pair[0].as_i64().ok_or_else(|| malformed("offsets must be integers"))?;
            let j = pair[1].as_i64().ok_or_else(|| malformed("offsets must be integers"))?;
            Ok([i, j])
        })
        .collect()
}

fn floats_from(value: Option<&Value>, field: &str) -> Result<Vec<f64>, LayerError> {
    let rows = value
        .and_then(Value::as_array)
        .ok_or_else(|| malformed(&format!("missing {field}")))?;
    rows.iter()
        .map(|v| v.as_f64().ok_or_else(|| malformed(&format!("{field} entries must be numbers"))))
        .collect()
}

fn float_field(value: &Value, field: &str) -> Result<f64, LayerError> {
    value
        .get(field)
        .and_then(Value::as_f64)
        .ok_or_else(|| malformed(&format!("missing {field}")))
}

fn stride_field(value: &Value) -> Result<usize, LayerError> {
    let stride = value
        .get("stride")
        .and_then(Value::as_u64)
        .ok_or_else(|| malformed("missing stride"))?;
    Ok(stride as usize)
}

fn paired(points: Vec<Point>, values: Vec<f64>, field: &str) -> Result<Vec<(Point, f64)>, LayerError> {
    if points.len() != values.len() {
        return Err(malformed(&format!("{field} length does not match the support")));
    }
    Ok(points.into_iter().zip(values).collect())
}

fn structuring_from(value: &Value) -> Result<StructuringFunction, LayerError> {
    let points = points_from(value.get("support"), "support")?;
    let values = floats_from(value.get("values"), "values")?;
    let pairs = paired(points, values, "values")?;
    StructuringFunction::new(&pairs).map_err(|e| malformed(&format!("bad structuring function: {e}")))
}

fn kernel_from(value: &Value) -> Result<Kernel, LayerError> {
    let points = points_from(value.get("support"), "support")?;
    let values = floats_from(value.get("weights"), "weights")?;
    let pairs = paired(points, values, "weights")?;
    Kernel::new(&pairs).map_err(|e| malformed(&format!("bad kernel: {e}")))
}
