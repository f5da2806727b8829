/// Error-free (TwoSum) accumulation: the rounding error of every addition is
/// carried in a separate correction term, so the result does not depend on
/// the magnitude of the running total.
#[derive(Debug, Default, Clone, Copy)]
pub struct CompensatedSum {
    sum: f64,
    correction: f64,
}

impl CompensatedSum {
    pub const fn new() -> Self {
        Self {
            sum: 0.0,
            correction: 0.0,
        }
    }

    #[inline(always)]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        let bp = t - self.sum;
        self.correction += (self.sum - (t - bp)) + (x - bp);
        self.sum = t;
    }

    #[inline(always)]
    pub fn value(&self) -> f64 {
        self.sum + self.correction
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancelled_low_bits() {
        let mut s = CompensatedSum::new();
        for x in [1e16, 1.0, -1e16, 1.0] {
            s.add(x);
        }
        assert_eq!(s.value(), 2.0);
    }
}
