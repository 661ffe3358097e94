//! Optional vertex labels such as `a1,c1,c2,a2`, so operations and text
//! output can use the same names as a drawing of the graph.

use crate::error::{usage, Result};
use gselc::form::Monomial;
use gselc::QuadraticForm;

#[derive(Debug, Clone, Default)]
pub struct NameTable {
    names: Vec<String>,
}

impl NameTable {
    /// Parses a comma-separated list; name `i` labels vertex `i`.
    pub fn parse(list: &str) -> Result<Self> {
        let names: Vec<String> = list.split(',').map(|s| s.trim().to_string()).collect();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.parse::<usize>().is_ok() {
                return Err(usage(format!(
                    "vertex name {name:?} must be non-empty and not a number"
                )));
            }
            if names[..i].contains(name) {
                return Err(usage(format!("vertex name {name:?} appears twice")));
            }
        }
        Ok(Self { names })
    }

    pub fn check_covers(&self, n: usize) -> Result<()> {
        if !self.names.is_empty() && self.names.len() != n {
            return Err(usage(format!(
                "{} names given for a graph on {n} vertices",
                self.names.len()
            )));
        }
        Ok(())
    }

    /// A vertex given by name or by index.
    pub fn resolve(&self, token: &str) -> Result<usize> {
        if let Ok(v) = token.parse() {
            return Ok(v);
        }
        self.names
            .iter()
            .position(|name| name == token)
            .ok_or_else(|| usage(format!("unknown vertex {token:?}")))
    }

    pub fn label(&self, v: usize) -> String {
        match self.names.get(v) {
            Some(name) => name.clone(),
            None => format!("x{v}"),
        }
    }

    /// Sorted monomial list, e.g. `x0*x1 + x2`, using names where known.
    pub fn render_form(&self, form: &QuadraticForm) -> String {
        let terms: Vec<String> = form
            .monomials()
            .into_iter()
            .map(|m| match m {
                Monomial::Linear(i) => self.label(i),
                Monomial::Quadratic(i, j) => format!("{}*{}", self.label(i), self.label(j)),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}
