//! Named pass/fail checks collected by the verification operations.

use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::AlgebraElement;

/// One verified identity. `witness` renders the offending difference when
/// the check fails and is empty otherwise.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub witness: String,
}

impl Check {
    pub fn passed(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            ok: true,
            witness: String::new(),
        }
    }

    pub fn failed(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            ok: false,
            witness: witness.into(),
        }
    }

    /// Check that two algebra elements are structurally equal.
    pub fn equality(name: impl Into<String>, lhs: &AlgebraElement, rhs: &AlgebraElement) -> Self {
        let diff = lhs.sub(rhs);
        if diff.is_zero() {
            Check::passed(name)
        } else {
            Check::failed(name, alloc::format!("nonzero difference: {diff}"))
        }
    }

    /// Check that an element vanishes.
    pub fn vanishes(name: impl Into<String>, x: &AlgebraElement) -> Self {
        if x.is_zero() {
            Check::passed(name)
        } else {
            Check::failed(name, alloc::format!("nonzero value: {x}"))
        }
    }
}

/// A list of checks, passing iff all entries pass.
#[derive(Clone, Debug, Default)]
pub struct CheckList {
    pub checks: Vec<Check>,
}

impl CheckList {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok)
    }
}
