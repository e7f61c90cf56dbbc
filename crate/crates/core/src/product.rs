//! Sign-tracked products of many real factors.

/// Product kept as `sign * exp(log_magnitude)` so long products neither
/// overflow nor underflow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLogProduct {
    log_magnitude: f64,
    negative: bool,
    zero: bool,
}

impl Default for SignedLogProduct {
    fn default() -> Self {
        Self::one()
    }
}

impl SignedLogProduct {
    pub fn one() -> Self {
        Self {
            log_magnitude: 0.0,
            negative: false,
            zero: false,
        }
    }

    pub fn mul(&mut self, factor: f64) {
        if factor == 0.0 {
            self.zero = true;
            return;
        }
        self.log_magnitude += factor.abs().ln();
        self.negative ^= factor < 0.0;
    }

    /// Divides by `factor`; the caller guarantees it is nonzero.
    pub fn div(&mut self, factor: f64) {
        debug_assert!(factor != 0.0);
        self.log_magnitude -= factor.abs().ln();
        self.negative ^= factor < 0.0;
    }

    pub fn negate(&mut self) {
        self.negative = !self.negative;
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    pub fn value(&self) -> f64 {
        if self.zero {
            return 0.0;
        }
        let mag = self.log_magnitude.exp();
        if self.negative {
            -mag
        } else {
            mag
        }
    }
}
