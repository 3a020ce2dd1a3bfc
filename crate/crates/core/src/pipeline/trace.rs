use std::collections::BTreeMap;

use serde::Serialize;

use super::Budgets;
use crate::local::Palette;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FlagKind {
    /// Part of the colouring fell back to a greedy colouring.
    Degraded,
    /// A measured quantity is a bound, not an exact value.
    Inexact,
    /// A set exceeded its configured size budget.
    OverBudget,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Flag {
    pub kind: FlagKind,
    pub message: String,
}

impl Flag {
    pub fn new(kind: FlagKind, message: impl Into<String>) -> Self {
        Flag {
            kind,
            message: message.into(),
        }
    }
}

/// One step of a pipeline run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Node {
    pub label: String,
    pub size: usize,
    pub branch: String,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, serde_json::Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub palettes: Vec<Palette>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<Flag>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<Node>,
}

impl Node {
    pub fn new(label: impl Into<String>, size: usize, branch: impl Into<String>) -> Self {
        Node {
            label: label.into(),
            size,
            branch: branch.into(),
            details: BTreeMap::new(),
            palettes: Vec::new(),
            flags: Vec::new(),
            children: Vec::new(),
        }
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        self.details.insert(
            key.to_string(),
            serde_json::to_value(value).expect("serialisable detail"),
        );
    }

    pub fn flag(&mut self, kind: FlagKind, message: impl Into<String>) {
        self.flags.push(Flag::new(kind, message));
    }

    /// All flags of this node and its descendants.
    pub fn all_flags(&self) -> Vec<Flag> {
        let mut out = self.flags.clone();
        for c in &self.children {
            out.extend(c.all_flags());
        }
        out
    }
}

/// Report of a pipeline run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trace {
    pub method: String,
    pub n: usize,
    pub colors: usize,
    pub budgets: Budgets,
    pub degraded: bool,
    pub flags: Vec<Flag>,
    pub root: Node,
}

impl Trace {
    pub fn new(method: &str, n: usize, colors: usize, budgets: &Budgets, root: Node) -> Self {
        let mut flags = root.all_flags();
        flags.sort();
        flags.dedup();
        Trace {
            method: method.to_string(),
            n,
            colors,
            budgets: budgets.clone(),
            degraded: flags.iter().any(|f| f.kind == FlagKind::Degraded),
            flags,
            root,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serialises")
    }
}
