//! Check reports: one entry per check id, with witnesses on failure.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn tag(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        }
    }
}

/// Basis elements (by their rendering in the named basis) at which a check
/// failed, together with the offending value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub basis: Vec<String>,
    pub value: String,
}

impl Witness {
    pub fn new(basis: Vec<String>, value: impl Into<String>) -> Self {
        Witness {
            basis,
            value: value.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckResult {
    pub fn pass(id: impl Into<String>) -> Self {
        CheckResult {
            check_id: id.into(),
            status: Status::Pass,
            witnesses: Vec::new(),
            note: None,
        }
    }

    pub fn fail(id: impl Into<String>, witness: Witness) -> Self {
        CheckResult {
            check_id: id.into(),
            status: Status::Fail,
            witnesses: vec![witness],
            note: None,
        }
    }

    pub fn skipped(id: impl Into<String>, note: impl Into<String>) -> Self {
        CheckResult {
            check_id: id.into(),
            status: Status::Skipped,
            witnesses: Vec::new(),
            note: Some(note.into()),
        }
    }

    /// Pass when `witness` is `None`, fail with it otherwise.
    pub fn from_witness(id: impl Into<String>, witness: Option<Witness>) -> Self {
        match witness {
            None => Self::pass(id),
            Some(w) => Self::fail(id, w),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// Appends `other` with every check id prefixed by `prefix.`.
    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.check_id = format!("{prefix}.{}", c.check_id);
            self.checks.push(c);
        }
    }

    /// No check failed (skipped checks do not count as failures).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    /// Every check is present and passed.
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check_id == id)
    }

    pub fn status(&self, id: &str) -> Option<Status> {
        self.get(id).map(|c| c.status)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let (mut pass, mut fail, mut skip) = (0, 0, 0);
        for c in &self.checks {
            match c.status {
                Status::Pass => pass += 1,
                Status::Fail => fail += 1,
                Status::Skipped => skip += 1,
            }
            let _ = write!(out, "{} {}", c.status.tag(), c.check_id);
            if let Some(note) = &c.note {
                let _ = write!(out, " ({note})");
            }
            out.push('\n');
            for w in &c.witnesses {
                let _ = writeln!(out, "     at ({}): {}", w.basis.join(", "), w.value);
            }
        }
        let _ = writeln!(out, "summary: {pass} passed, {fail} failed, {skip} skipped");
        out
    }

    /// Pretty JSON document `{"passed": bool, "checks": [...]}`.
    pub fn to_structured(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            passed: bool,
            checks: &'a [CheckResult],
        }
        let mut s = serde_json::to_string_pretty(&Doc {
            passed: self.passed(),
            checks: &self.checks,
        })
        .expect("report serialization cannot fail");
        s.push('\n');
        s
    }
}
