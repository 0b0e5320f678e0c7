use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Real polynomial with coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Invalid("polynomial needs at least one coefficient".into()));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::Invalid("polynomial coefficients must be finite".into()));
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Index of the highest non-zero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| *c != T::zero())
    }

    pub fn eval(&self, t: T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, &c| acc * t + c)
    }

    /// Value with first and second derivative, by Horner's scheme.
    pub fn eval2(&self, t: T) -> (T, T, T) {
        let (mut f, mut d1, mut d2) = (T::zero(), T::zero(), T::zero());
        for &c in self.coeffs.iter().rev() {
            d2 = d2 * t + d1;
            d1 = d1 * t + f;
            f = f * t + c;
        }
        (f, d1, d2 + d2)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self { coeffs: vec![T::zero()] };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * T::from_usize(k).unwrap())
            .collect();
        Self { coeffs }
    }

    /// `q(t) = self(lambda t)`.
    pub fn time_scaled(&self, lambda: T) -> Self {
        let mut s = T::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| {
                let v = c * s;
                s = s * lambda;
                v
            })
            .collect();
        Self { coeffs }
    }

    pub fn max_abs_coeff(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |m, c| m.max(c.abs()))
    }
}
