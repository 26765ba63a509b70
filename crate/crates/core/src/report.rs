//! Machine-readable pass/fail reports produced by the verification
//! commands.

use std::fmt;
use std::time::{Duration, Instant};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one verification sweep: a name, pass/fail, the list of
/// residuals or counterexamples, and the wall-clock time.
#[derive(Clone, Debug)]
pub struct Report {
    pub name: String,
    pub status: Status,
    pub details: Vec<String>,
    pub elapsed: Duration,
}

impl Report {
    /// Runs `body` against a fresh [`Checker`] and collects the result.
    pub fn run(name: &str, body: impl FnOnce(&mut Checker)) -> Report {
        let start = Instant::now();
        let mut checker = Checker {
            details: Vec::new(),
        };
        body(&mut checker);
        Report {
            name: name.to_string(),
            status: if checker.details.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            },
            details: checker.details,
            elapsed: start.elapsed(),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(
            f,
            "[{tag}] {} ({:.1} ms)",
            self.name,
            self.elapsed.as_secs_f64() * 1e3
        )?;
        for d in &self.details {
            write!(f, "\n    {d}")?;
        }
        Ok(())
    }
}

/// Accumulates failure details; an empty list means the report passes.
pub struct Checker {
    details: Vec<String>,
}

impl Checker {
    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.details.push(msg());
        }
    }

    pub fn fail(&mut self, msg: String) {
        self.details.push(msg);
    }

    pub fn failures(&self) -> usize {
        self.details.len()
    }
}
