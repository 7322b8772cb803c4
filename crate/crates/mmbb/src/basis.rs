use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use grid_core::{Alphabet, StructuringFunction};

use crate::char_matrix::char_matrix;
use crate::error::MmbbError;
use crate::kernel::Kernel;

pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

/// The deduplicated image of all alphabet patterns under the characteristic
/// matrix, listed in lexicographic order.
#[derive(Clone, Debug, PartialEq)]
pub struct VirtualBasis {
    elements: Vec<Vec<f64>>,
    kernel: Kernel,
    alphabet: Alphabet,
}

/// Smallest-denominator rational whose f64 value is exactly `x`, found by
/// walking continued-fraction convergents of the exact binary expansion.
pub fn snap_rational(x: f64) -> BigRational {
    let exact = BigRational::from_float(x).expect("snap_rational needs a finite input");
    let mut rem = exact.clone();
    let (mut h2, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k2, mut k1) = (BigInt::one(), BigInt::zero());
    loop {
        let a = rem.floor().to_integer();
        let h = &a * &h1 + &h2;
        let k = &a * &k1 + &k2;
        let convergent = BigRational::new(h.clone(), k.clone());
        if convergent.to_f64() == Some(x) {
            return convergent;
        }
        let frac = &rem - BigRational::from_integer(a);
        if frac.is_zero() {
            return exact;
        }
        rem = frac.recip();
        h2 = h1;
        h1 = h;
        k2 = k1;
        k1 = k;
    }
}

pub fn virtual_basis(k: &Kernel, a: &Alphabet) -> Result<VirtualBasis, MmbbError> {
    virtual_basis_with_cap(k, a, DEFAULT_ENUMERATION_CAP)
}

pub fn virtual_basis_with_cap(
    k: &Kernel,
    a: &Alphabet,
    cap: u128,
) -> Result<VirtualBasis, MmbbError> {
    char_matrix(k)?;
    let n = k.len();
    let q = a.len();
    let needed = (q as u128)
        .checked_pow(n as u32)
        .ok_or(MmbbError::CapExceeded { needed: u128::MAX, cap })?;
    if needed > cap {
        return Err(MmbbError::CapExceeded { needed, cap });
    }

    let weights: Vec<BigRational> = k.weights().iter().map(|&w| snap_rational(w)).collect();
    let levels: Vec<BigRational> = a.levels().iter().map(|&l| snap_rational(l)).collect();

    let mut seen: BTreeSet<Vec<BigRational>> = BTreeSet::new();
    let mut digits = vec![0usize; n];
    loop {
        let dot: BigRational = digits
            .iter()
            .zip(&weights)
            .map(|(&d, w)| w * &levels[d])
            .sum();
        let image: Vec<BigRational> = digits.iter().map(|&d| &levels[d] - &dot).collect();
        seen.insert(image);

        let mut pos = 0;
        loop {
            if pos == n {
                break;
            }
            digits[pos] += 1;
            if digits[pos] < q {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
        if pos == n {
            break;
        }
    }

    let elements: Vec<Vec<f64>> = seen
        .into_iter()
        .map(|v| {
            v.into_iter()
                .map(|r| r.to_f64().expect("basis coordinates stay in f64 range"))
                .collect()
        })
        .collect();
    Ok(VirtualBasis {
        elements,
        kernel: k.clone(),
        alphabet: a.clone(),
    })
}

impl VirtualBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Vec<f64>] {
        &self.elements
    }

    pub fn kernel(&self) -> &Kernel {
        &self.kernel
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// One structuring function per element, under the fixed bijection:
    /// coordinate `i` sits at offset −supportᵢ so that erosion reads f(x−xᵢ).
    pub fn erosion_structuring_functions(&self) -> Vec<StructuringFunction> {
        self.elements
            .iter()
            .map(|g| {
                let pairs: Vec<([i64; 2], f64)> = self
                    .kernel
                    .support()
                    .iter()
                    .zip(g)
                    .map(|(p, &v)| ([-p[0], -p[1]], v))
                    .collect();
                StructuringFunction::new(&pairs).expect("reflected support stays distinct")
            })
            .collect()
    }

    /// One element per row, coordinates comma-separated.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for g in &self.elements {
            for (i, v) in g.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{}", v);
            }
            out.push('\n');
        }
        out
    }
}
