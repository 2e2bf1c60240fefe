use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Floating point scalar used by every numeric routine: `f32` or `f64`.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
    /// Slack allowed when checking that masses sum to one.
    ///
    /// `1e-9` for `f64`; for narrower types it widens to a few ulps of 1.
    fn sum_tolerance() -> Self {
        let ulps = Self::epsilon() * Self::lit(16.0);
        ulps.max(Self::lit(1e-9))
    }

    /// Converts an `f64` constant. Only used for literals that fit every scalar type.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn from_count(n: u32) -> Self {
        Self::from_u32(n).expect("count representable in scalar type")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_widens_for_f32() {
        assert_eq!(<f64 as Scalar>::sum_tolerance(), 1e-9);
        assert!(<f32 as Scalar>::sum_tolerance() > 1e-7);
    }
}
