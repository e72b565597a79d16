use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

/// Evaluation counter shared by the searches. `None` means unlimited.
#[derive(Debug, Default)]
pub struct Budget {
    limit: Option<u64>,
    used: AtomicU64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit: Some(limit), used: AtomicU64::new(0) }
    }

    pub fn unlimited() -> Self {
        Budget { limit: None, used: AtomicU64::new(0) }
    }

    pub fn from_option(limit: Option<u64>) -> Self {
        Budget { limit, used: AtomicU64::new(0) }
    }

    pub fn limit(&self) -> Option<u64> {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    /// Charge `n` evaluations; fails once the limit is passed.
    pub fn spend(&self, n: u64) -> Result<()> {
        let total = self.used.fetch_add(n, Ordering::Relaxed) + n;
        match self.limit {
            Some(l) if total > l => Err(Error::BudgetExhausted(total)),
            _ => Ok(()),
        }
    }

    pub fn exhausted(&self) -> bool {
        matches!(self.limit, Some(l) if self.used() >= l)
    }
}
