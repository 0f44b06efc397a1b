use std::time::{Duration, Instant};

use crate::{Error, Result};

/// Size and time limits applied to the exhaustive searches.
#[derive(Debug, Clone)]
pub struct Limits {
    pub max_n: usize,
    pub budget: Option<Duration>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 16,
            budget: Some(Duration::from_secs(600)),
        }
    }
}

impl Limits {
    pub fn unbounded_time(max_n: usize) -> Self {
        Limits {
            max_n,
            budget: None,
        }
    }

    pub fn check(&self, what: &'static str, n: usize) -> Result<()> {
        // the searches pack subsets into a single u64
        let limit = self.max_n.min(64);
        if n > limit {
            return Err(Error::SizeLimitExceeded { what, n, limit });
        }
        Ok(())
    }

    pub(crate) fn clock(&self) -> Clock {
        Clock {
            deadline: self.budget.map(|b| (Instant::now() + b, b.as_secs())),
            ticks: 0,
        }
    }
}

/// Cheap deadline check for inner search loops.
#[derive(Clone)]
pub(crate) struct Clock {
    deadline: Option<(Instant, u64)>,
    ticks: u32,
}

impl Clock {
    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks % 4096 == 1 {
            if let Some((deadline, seconds)) = self.deadline {
                if Instant::now() > deadline {
                    return Err(Error::BudgetExceeded { seconds });
                }
            }
        }
        Ok(())
    }
}
