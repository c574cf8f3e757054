//! Clause-by-clause property reports shared by the exhaustive checkers.

use std::fmt;

/// The first failing tuple of a clause, by lexicographic index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub elements: Vec<usize>,
    pub labels: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Held on every one of `checked` tuples.
    Pass {
        checked: usize,
    },
    Fail(Witness),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseResult {
    pub id: String,
    pub statement: String,
    pub outcome: Outcome,
}

impl ClauseResult {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, Outcome::Pass { .. })
    }

    pub fn failed(&self) -> bool {
        matches!(self.outcome, Outcome::Fail(_))
    }

    pub fn skipped(&self) -> bool {
        matches!(self.outcome, Outcome::Skipped(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: String,
    pub clauses: Vec<ClauseResult>,
}

impl PropertyReport {
    pub fn new(name: impl Into<String>) -> Self {
        PropertyReport {
            name: name.into(),
            clauses: Vec::new(),
        }
    }

    pub fn push(&mut self, clause: ClauseResult) {
        self.clauses.push(clause);
    }

    /// True when no clause failed. Skipped clauses do not count against it.
    pub fn all_pass(&self) -> bool {
        !self.clauses.iter().any(ClauseResult::failed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClauseResult> {
        self.clauses.iter().filter(|c| c.failed())
    }

    pub fn clause(&self, id: &str) -> Option<&ClauseResult> {
        self.clauses.iter().find(|c| c.id == id)
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.name)?;
        for c in &self.clauses {
            match &c.outcome {
                Outcome::Pass { checked } => {
                    writeln!(f, "  [pass] {:<8} {} ({checked} cases)", c.id, c.statement)?
                }
                Outcome::Skipped(why) => {
                    writeln!(f, "  [skip] {:<8} {} ({why})", c.id, c.statement)?
                }
                Outcome::Fail(w) => writeln!(
                    f,
                    "  [FAIL] {:<8} {} at ({}): {}",
                    c.id,
                    c.statement,
                    w.labels.join(","),
                    w.detail
                )?,
            }
        }
        Ok(())
    }
}

/// Runs a clause over every `arity`-tuple of `0..n` in lexicographic order,
/// stopping at the first tuple whose check returns `Err(detail)`.
pub(crate) fn check_tuples<S, F>(
    id: &str,
    statement: &str,
    labels: &[S],
    arity: usize,
    mut check: F,
) -> ClauseResult
where
    S: AsRef<str>,
    F: FnMut(&[usize]) -> Result<(), String>,
{
    let n = labels.len();
    let mut tuple = vec![0usize; arity];
    let mut checked = 0usize;
    let outcome = 'outer: loop {
        if n == 0 && arity > 0 {
            break Outcome::Pass { checked };
        }
        checked += 1;
        if let Err(detail) = check(&tuple) {
            break Outcome::Fail(witness(labels, &tuple, detail));
        }
        // odometer increment, last coordinate fastest
        let mut i = arity;
        loop {
            if i == 0 {
                break 'outer Outcome::Pass { checked };
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < n {
                break;
            }
            tuple[i] = 0;
        }
    };
    ClauseResult {
        id: id.to_string(),
        statement: statement.to_string(),
        outcome,
    }
}

pub(crate) fn witness<S: AsRef<str>>(labels: &[S], elements: &[usize], detail: String) -> Witness {
    Witness {
        elements: elements.to_vec(),
        labels: elements
            .iter()
            .map(|&x| labels[x].as_ref().to_string())
            .collect(),
        detail,
    }
}

/// A clause decided elsewhere: `failure` is the witness, if any.
pub(crate) fn verdict(
    id: &str,
    statement: &str,
    checked: usize,
    failure: Option<Witness>,
) -> ClauseResult {
    ClauseResult {
        id: id.to_string(),
        statement: statement.to_string(),
        outcome: match failure {
            None => Outcome::Pass { checked },
            Some(w) => Outcome::Fail(w),
        },
    }
}

pub(crate) fn skipped(id: &str, statement: &str, why: &str) -> ClauseResult {
    ClauseResult {
        id: id.to_string(),
        statement: statement.to_string(),
        outcome: Outcome::Skipped(why.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn visits_every_tuple_in_order() {
        let labels = ["p", "q", "r"];
        let mut seen = Vec::new();
        let r = check_tuples("t", "all", &labels, 2, |t| {
            seen.push((t[0], t[1]));
            Ok(())
        });
        assert_eq!(r.outcome, Outcome::Pass { checked: 9 });
        assert_eq!(seen[0], (0, 0));
        assert_eq!(seen[1], (0, 1));
        assert_eq!(seen[8], (2, 2));
    }

    #[test]
    fn stops_at_first_failure() {
        let labels = ["p", "q", "r"];
        let r = check_tuples("t", "x<2", &labels, 1, |t| {
            if t[0] < 1 {
                Ok(())
            } else {
                Err("too big".into())
            }
        });
        match r.outcome {
            Outcome::Fail(w) => {
                assert_eq!(w.elements, vec![1]);
                assert_eq!(w.labels, vec!["q"]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn arity_zero_runs_once() {
        let labels = ["p"];
        let r = check_tuples("t", "const", &labels, 0, |_| Ok(()));
        assert_eq!(r.outcome, Outcome::Pass { checked: 1 });
    }
}
