use std::time::{Duration, Instant};

/// Outcome of a batch of checks; stdout gets the lines, stderr the timings.
#[derive(Debug, Default)]
pub struct Report {
    pub lines: Vec<String>,
    pub failures: Vec<String>,
    pub timings: Vec<(String, Duration)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn info(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    /// Records a check; the witness is only built on failure.
    pub fn check(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) -> bool {
        if ok {
            self.lines.push(format!("ok    {name}"));
        } else {
            let w = witness();
            self.lines.push(format!("FAIL  {name}: {w}"));
            self.failures.push(format!("{name}: {w}"));
        }
        ok
    }

    pub fn timed<T>(&mut self, label: &str, f: impl FnOnce(&mut Report) -> T) -> T {
        let start = Instant::now();
        let out = f(self);
        self.timings.push((label.to_string(), start.elapsed()));
        out
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: Report) {
        self.lines.extend(other.lines);
        self.failures.extend(other.failures);
        self.timings.extend(other.timings);
    }
}
