use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;
use strongdiv::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    BoundedPass,
    Undecided,
}

impl Status {
    pub fn ok(self) -> bool {
        matches!(self, Status::Pass | Status::BoundedPass)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::BoundedPass => "BOUNDED-PASS",
            Status::Undecided => "UNDECIDED",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub claim_id: String,
    pub status: Status,
    pub witness: Value,
    pub bounds: Value,
    /// Arguments that reproduce this report.
    pub replay: Vec<String>,
    pub elapsed_ms: u64,
}

/// Collects reports for one invocation.
pub struct Sink {
    replay: Vec<String>,
    started: Instant,
    pub reports: Vec<Report>,
}

impl Sink {
    pub fn new(replay: Vec<String>) -> Self {
        Self {
            replay,
            started: Instant::now(),
            reports: Vec::new(),
        }
    }

    pub fn push(&mut self, claim_id: impl Into<String>, status: Status, witness: Value, bounds: Value) {
        let elapsed_ms = self.started.elapsed().as_millis() as u64;
        self.reports.push(Report {
            claim_id: claim_id.into(),
            status,
            witness,
            bounds,
            replay: self.replay.clone(),
            elapsed_ms,
        });
        self.started = Instant::now();
    }
}

pub fn status_of(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Resource(_) => EXIT_RESOURCE,
        Error::Domain(_) | Error::Precondition(_) | Error::Parse(_) => EXIT_USAGE,
    }
}
