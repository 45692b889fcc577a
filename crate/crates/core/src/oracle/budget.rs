use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

pub const DEFAULT_MAX_STATES: u64 = 100_000_000;

/// Caps the number of enumerated states across the calls that share it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleBudget {
    max_states: u64,
    used: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self::new(DEFAULT_MAX_STATES)
    }
}

impl OracleBudget {
    pub fn new(max_states: u64) -> Self {
        Self { max_states, used: 0 }
    }

    pub fn max_states(&self) -> u64 {
        self.max_states
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn remaining(&self) -> u64 {
        self.max_states - self.used
    }

    /// Reserves `states` or fails without consuming anything.
    pub fn charge(&mut self, states: &BigUint) -> Result<()> {
        match states.to_u64() {
            Some(s) if s <= self.remaining() => {
                self.used += s;
                Ok(())
            }
            _ => Err(Error::BudgetExceeded {
                needed: states.to_string(),
                limit: self.max_states,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charges_accumulate_and_refuse() {
        let mut b = OracleBudget::new(10);
        b.charge(&BigUint::from(6u32)).unwrap();
        assert_eq!(b.remaining(), 4);
        assert!(b.charge(&BigUint::from(5u32)).is_err());
        assert_eq!(b.used(), 6);
        b.charge(&BigUint::from(4u32)).unwrap();
        assert_eq!(b.remaining(), 0);
    }
}
