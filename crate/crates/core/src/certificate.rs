use alloc::string::String;
use alloc::vec::Vec;

/// One relation instance and whether it held exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub passed: bool,
}

/// The outcome of auditing a module against its defining relations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificate {
    pub checks: Vec<RelationCheck>,
}

impl Certificate {
    pub fn record(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(RelationCheck { name: name.into(), passed });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn extend(&mut self, other: Certificate) {
        self.checks.extend(other.checks);
    }
}
