use std::fmt;

/// One checked identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: Option<String>,
}

/// Pass/fail results of a batch of identity checks. Failures are data.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), checks: Vec::new() }
    }

    pub fn record(&mut self, label: impl Into<String>, passed: bool) {
        self.checks.push(Check { label: label.into(), passed, detail: None });
    }

    pub fn record_with(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { label: label.into(), passed, detail: Some(detail.into()) });
    }

    /// Records `Ok(true)` as a pass and anything else as a failure.
    pub fn record_result<E: fmt::Display>(&mut self, label: impl Into<String>, outcome: Result<bool, E>) {
        match outcome {
            Ok(passed) => self.record(label, passed),
            Err(e) => self.record_with(label, false, e.to_string()),
        }
    }

    pub fn extend(&mut self, other: Report) {
        let prefix = other.title;
        self.checks.extend(other.checks.into_iter().map(|mut c| {
            if !prefix.is_empty() {
                c.label = format!("{prefix}: {}", c.label);
            }
            c
        }));
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            match &c.detail {
                Some(d) => writeln!(f, "{tag} {} ({d})", c.label)?,
                None => writeln!(f, "{tag} {}", c.label)?,
            }
        }
        write!(f, "{}: {}/{} passed", self.title, self.passed_count(), self.checks.len())
    }
}
