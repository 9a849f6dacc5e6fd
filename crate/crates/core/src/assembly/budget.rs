use std::time::{Duration, Instant};

/// Wall-clock allowance for the searches inside a construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget { deadline: None }
    }

    pub fn millis(ms: u64) -> Budget {
        Budget {
            deadline: Some(Instant::now() + Duration::from_millis(ms)),
        }
    }

    pub fn exhausted(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

impl Default for Budget {
    fn default() -> Budget {
        Budget::unlimited()
    }
}
