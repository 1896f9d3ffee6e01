use std::fmt;

/// Outcome of a decision procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    True,
    False,
    Inconclusive,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn is_true(self) -> bool {
        self == Verdict::True
    }

    pub fn is_false(self) -> bool {
        self == Verdict::False
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// Whether a verdict is about points of the shift or about the chosen
/// presentation of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scope {
    PointLevel,
    PresentationLevel,
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scope::PointLevel => "point",
            Scope::PresentationLevel => "presentation",
        })
    }
}

/// A verdict together with the finite evidence backing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision<W> {
    pub verdict: Verdict,
    pub witness: Option<W>,
    pub scope: Scope,
}

impl<W> Decision<W> {
    pub fn yes() -> Self {
        Decision {
            verdict: Verdict::True,
            witness: None,
            scope: Scope::PointLevel,
        }
    }

    pub fn no(witness: Option<W>) -> Self {
        Decision {
            verdict: Verdict::False,
            witness,
            scope: Scope::PointLevel,
        }
    }

    pub fn with_scope(mut self, scope: Scope) -> Self {
        self.scope = scope;
        self
    }

    pub fn is_true(&self) -> bool {
        self.verdict.is_true()
    }
}
