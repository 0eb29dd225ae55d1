//! Pass/fail reports with reproducible witnesses.

use std::fmt;

use rayon::prelude::*;

use crate::exactla::{unflatten, Tensor, Vector};

/// First failing basis tuple and both evaluated sides.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomItem {
    pub axiom_id: String,
    pub passed: bool,
    pub witness: Option<Witness>,
    /// Extra context for failures that are not an equation between two sides.
    pub note: Option<String>,
}

impl AxiomItem {
    pub fn pass(id: impl Into<String>) -> Self {
        AxiomItem { axiom_id: id.into(), passed: true, witness: None, note: None }
    }

    pub fn fail(id: impl Into<String>, witness: Witness, note: Option<String>) -> Self {
        AxiomItem { axiom_id: id.into(), passed: false, witness: Some(witness), note }
    }
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct AxiomReport {
    pub items: Vec<AxiomItem>,
}

impl AxiomReport {
    /// Sorts items by axiom id.
    pub fn new(mut items: Vec<AxiomItem>) -> Self {
        items.sort_by(|a, b| a.axiom_id.cmp(&b.axiom_id));
        AxiomReport { items }
    }

    pub fn overall(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn item(&self, id: &str) -> Option<&AxiomItem> {
        self.items.iter().find(|i| i.axiom_id == id)
    }

    pub fn passed(&self, id: &str) -> bool {
        self.item(id).map(|i| i.passed).unwrap_or_else(|| panic!("no report item {id}"))
    }

    pub fn failed_ids(&self) -> Vec<&str> {
        self.items.iter().filter(|i| !i.passed).map(|i| i.axiom_id.as_str()).collect()
    }

    /// Merges reports, prefixing item ids.
    pub fn merge(parts: Vec<(&str, AxiomReport)>) -> Self {
        let mut items = Vec::new();
        for (prefix, r) in parts {
            for mut it in r.items {
                if !prefix.is_empty() {
                    it.axiom_id = format!("{prefix}{}", it.axiom_id);
                }
                items.push(it);
            }
        }
        AxiomReport::new(items)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "overall: {}", if self.overall() { "pass" } else { "FAIL" })?;
        for it in &self.items {
            write!(f, "  {:<40} {}", it.axiom_id, if it.passed { "pass" } else { "FAIL" })?;
            if let Some(w) = &it.witness {
                write!(f, "  at {:?}", w.tuple)?;
            }
            if let Some(n) = &it.note {
                write!(f, "  ({n})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn vec_str(v: &Vector) -> String {
    let parts: Vec<String> = v.coords().iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tuple {:?}: lhs {} rhs {}", self.tuple, vec_str(&self.lhs), vec_str(&self.rhs))
    }
}

/// Evaluates both sides of an identity on every basis tuple of `dims` in
/// lexicographic order and reports the first mismatch.
pub fn scan<F>(id: &str, dims: &[usize], f: F) -> AxiomItem
where
    F: Fn(&[usize]) -> (Tensor, Tensor) + Sync,
{
    let total: usize = dims.iter().product();
    let hit = (0..total).into_par_iter().find_map_first(|k| {
        let t = unflatten(k, dims);
        let (l, r) = f(&t);
        assert_eq!(l.legs().iter().map(|x| x.1).collect::<Vec<_>>(),
                   r.legs().iter().map(|x| x.1).collect::<Vec<_>>(),
                   "{id}: sides live in different spaces");
        if !l.terms().eq(r.terms()) {
            Some(Witness { tuple: t, lhs: l.to_vector(), rhs: r.to_vector() })
        } else {
            None
        }
    });
    match hit {
        None => AxiomItem::pass(id),
        Some(w) => AxiomItem::fail(id, w, None),
    }
}

/// A single comparison with no basis tuple.
pub fn compare(id: &str, lhs: Vector, rhs: Vector) -> AxiomItem {
    if lhs == rhs {
        AxiomItem::pass(id)
    } else {
        AxiomItem::fail(id, Witness { tuple: Vec::new(), lhs, rhs }, None)
    }
}
