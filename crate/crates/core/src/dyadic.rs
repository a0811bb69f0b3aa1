//! Exact non-negative dyadic rationals `r / 2^k`.

use std::cmp::Ordering;
use std::fmt;

/// Largest exponent a value may carry.
pub const MAX_EXPONENT: u32 = 120;

/// A non-negative dyadic rational in lowest terms: the numerator is odd,
/// or the value is zero with exponent zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: u128,
    exp: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, exp: 0 };
    pub const ONE: Dyadic = Dyadic { num: 1, exp: 0 };

    /// `num / 2^exp`, normalized. Panics if `exp` exceeds [`MAX_EXPONENT`].
    pub fn new(num: u128, exp: u32) -> Self {
        assert!(exp <= MAX_EXPONENT, "dyadic exponent {exp} out of range");
        Dyadic { num, exp }.normalized()
    }

    fn normalized(mut self) -> Self {
        if self.num == 0 {
            return Dyadic::ZERO;
        }
        let tz = self.num.trailing_zeros().min(self.exp);
        self.num >>= tz;
        self.exp -= tz;
        self
    }

    pub fn numerator(self) -> u128 {
        self.num
    }

    pub fn exponent(self) -> u32 {
        self.exp
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    /// Numerator rescaled to exponent `exp` (which must be at least ours).
    fn scaled(self, exp: u32) -> u128 {
        debug_assert!(exp >= self.exp);
        self.num
            .checked_shl(exp - self.exp)
            .filter(|v| v >> (exp - self.exp) == self.num)
            .expect("dyadic numerator overflow")
    }

    pub fn checked_add(self, other: Dyadic) -> Option<Dyadic> {
        let exp = self.exp.max(other.exp);
        let num = self.scaled(exp).checked_add(other.scaled(exp))?;
        Some(Dyadic { num, exp }.normalized())
    }

    /// `self / 2^k`.
    pub fn halved(self, k: u32) -> Dyadic {
        if self.is_zero() {
            return self;
        }
        Dyadic::new(self.num, self.exp + k)
    }

    /// Renders as `r/2^k` in lowest terms.
    pub fn render(self) -> String {
        format!("{}/2^{}", self.num, self.exp)
    }

    /// Parses `r/2^k`.
    pub fn parse(text: &str) -> Option<Dyadic> {
        let (num, exp) = text.split_once("/2^")?;
        let num: u128 = num.parse().ok()?;
        let exp: u32 = exp.parse().ok()?;
        (exp <= MAX_EXPONENT).then(|| Dyadic::new(num, exp))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp = self.exp.max(other.exp);
        self.scaled(exp).cmp(&other.scaled(exp))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalizes() {
        assert_eq!(Dyadic::new(4, 3), Dyadic::new(1, 1));
        assert_eq!(Dyadic::new(0, 7), Dyadic::ZERO);
        assert_eq!(Dyadic::new(8, 3), Dyadic::ONE);
        assert_eq!(Dyadic::new(3, 2).render(), "3/2^2");
        assert_eq!(Dyadic::ZERO.render(), "0/2^0");
        assert_eq!(Dyadic::ONE.render(), "1/2^0");
    }

    #[test]
    fn adds_and_orders() {
        let half = Dyadic::new(1, 1);
        let quarter = Dyadic::new(1, 2);
        assert_eq!(half.checked_add(quarter), Some(Dyadic::new(3, 2)));
        assert_eq!(half.checked_add(half), Some(Dyadic::ONE));
        assert!(quarter < half && half < Dyadic::ONE);
        assert_eq!(Dyadic::ONE.halved(3), Dyadic::new(1, 3));
    }

    #[test]
    fn parse_round_trip_examples() {
        assert_eq!(Dyadic::parse("3/2^2"), Some(Dyadic::new(3, 2)));
        assert_eq!(Dyadic::parse("0.75"), None);
    }

    proptest! {
        #[test]
        fn addition_matches_integer_arithmetic(a in 0u64..1 << 20, b in 0u64..1 << 20, ea in 0u32..20, eb in 0u32..20) {
            let x = Dyadic::new(a as u128, ea);
            let y = Dyadic::new(b as u128, eb);
            let s = x.checked_add(y).unwrap();
            // Compare at a common denominator 2^40.
            let lhs = s.numerator() << (40 - s.exponent());
            let rhs = ((a as u128) << (40 - ea)) + ((b as u128) << (40 - eb));
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(Dyadic::parse(&s.render()), Some(s));
        }
    }
}
