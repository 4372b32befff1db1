use serde::Serialize;

/// One verified claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub citation: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// Pass/fail record of a verification suite. `overall` is the conjunction of
/// all check verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), checks: Vec::new(), overall: true }
    }

    pub fn push(
        &mut self,
        id: impl Into<String>,
        citation: impl Into<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
        pass: bool,
    ) {
        self.checks.push(Check {
            id: id.into(),
            citation: citation.into(),
            expected: expected.into(),
            actual: actual.into(),
            pass,
        });
        self.overall &= pass;
    }

    /// Records a check whose verdict is string equality of expected and actual.
    pub fn push_eq(
        &mut self,
        id: impl Into<String>,
        citation: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
    ) {
        let (e, a) = (expected.to_string(), actual.to_string());
        let pass = e == a;
        self.push(id, citation, e, a, pass);
    }

    /// Appends every check of `other`, prefixing nothing.
    pub fn absorb(&mut self, other: VerificationReport) {
        for c in other.checks {
            self.overall &= c.pass;
            self.checks.push(c);
        }
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Recomputes `overall` from the checks.
    pub fn recompute(&mut self) {
        self.overall = self.checks.iter().all(|c| c.pass);
    }
}
