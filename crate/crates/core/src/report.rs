use serde::Serialize;

/// Outcome of one family of checks. Failures are data, not errors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), ..Default::default() }
    }

    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn fail(&mut self, msg: String) {
        self.failures.push(msg);
    }

    pub fn merge(&mut self, other: Check) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}
