use std::fmt;

use super::Dyadic;
use crate::error::{Error, Result};

/// Open interval `(lower, upper)` with dyadic endpoints and `lower < upper`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OpenInterval {
    lower: Dyadic,
    upper: Dyadic,
}

impl OpenInterval {
    pub fn new(lower: Dyadic, upper: Dyadic) -> Result<Self> {
        if lower >= upper {
            return Err(Error::EmptyInterval {
                lower: lower.to_string(),
                upper: upper.to_string(),
            });
        }
        Ok(OpenInterval { lower, upper })
    }

    pub(crate) fn new_unchecked(lower: Dyadic, upper: Dyadic) -> Self {
        debug_assert!(lower < upper);
        OpenInterval { lower, upper }
    }

    /// `(-2^k, 2^k)`.
    pub fn symmetric_pow2(k: i64) -> Self {
        OpenInterval::new_unchecked(-Dyadic::pow2(k), Dyadic::pow2(k))
    }

    pub fn lower(&self) -> &Dyadic {
        &self.lower
    }

    pub fn upper(&self) -> &Dyadic {
        &self.upper
    }

    pub fn width(&self) -> Dyadic {
        &self.upper - &self.lower
    }

    /// `log2(width)` when the width is a power of two.
    pub fn width_log2(&self) -> Option<i64> {
        self.width().log2_exact()
    }

    pub fn midpoint(&self) -> Dyadic {
        self.lower.midpoint(&self.upper)
    }

    /// Strict containment of a point.
    pub fn contains(&self, x: &Dyadic) -> bool {
        &self.lower < x && x < &self.upper
    }

    /// `other` lies within the closure of `self`.
    pub fn encloses(&self, other: &OpenInterval) -> bool {
        self.lower <= other.lower && other.upper <= self.upper
    }

    pub fn is_disjoint(&self, other: &OpenInterval) -> bool {
        self.upper <= other.lower || other.upper <= self.lower
    }

    /// Halves at the midpoint.
    pub fn bisect(&self) -> (OpenInterval, OpenInterval) {
        let m = self.midpoint();
        (
            OpenInterval::new_unchecked(self.lower.clone(), m.clone()),
            OpenInterval::new_unchecked(m, self.upper.clone()),
        )
    }
}

impl fmt::Debug for OpenInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.lower, self.upper)
    }
}

impl fmt::Display for OpenInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lower, self.upper)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty() {
        assert!(OpenInterval::new(Dyadic::one(), Dyadic::one()).is_err());
        assert!(OpenInterval::new(Dyadic::from(2), Dyadic::one()).is_err());
    }

    #[test]
    fn geometry() {
        let i = OpenInterval::symmetric_pow2(3);
        assert_eq!(i.width_log2(), Some(4));
        let (l, r) = i.bisect();
        assert_eq!(l.upper(), &Dyadic::zero());
        assert!(l.is_disjoint(&r));
        assert!(i.encloses(&l) && i.encloses(&r));
        assert!(!i.contains(&Dyadic::from(8)));
        assert!(i.contains(&Dyadic::new(-15, -1)));
        let odd = OpenInterval::new(Dyadic::zero(), Dyadic::from(3)).unwrap();
        assert_eq!(odd.width_log2(), None);
    }
}
