//! The elimination degree cap, read from `RIGIDCURVE_BUDGET`.

use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: usize = 160;

/// Largest elimination degree any operation may attempt.
pub fn degree_budget() -> usize {
    std::env::var("RIGIDCURVE_BUDGET").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_BUDGET)
}

/// Fails with `ResourceBudget` when `needed` exceeds the budget.
pub fn check(what: &str, needed: usize) -> Result<()> {
    let budget = degree_budget();
    if needed > budget {
        return Err(Error::ResourceBudget(format!("{what} needs elimination degree {needed}, budget is {budget}")));
    }
    Ok(())
}
