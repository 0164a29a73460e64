//! Report structures and their text and JSON renderings.

use std::fmt::Write as _;

use sagbi_gb::sagbi::{RankKey, RankedGroup};
use sagbi_gb::OrderClass;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub weight: Vec<i64>,
    pub leading_monomials: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub is_basis: Option<bool>,
}

impl ClassEntry {
    pub fn new(cls: &OrderClass, names: &[String], is_basis: Option<bool>) -> Self {
        Self {
            weight: cls.weight.entries().to_vec(),
            leading_monomials: cls.leading_monomials(names),
            is_basis,
        }
    }

    fn text(&self) -> String {
        let weight: Vec<String> = self.weight.iter().map(i64::to_string).collect();
        let mut line = format!(
            "weight [{}] | leading {}",
            weight.join(", "),
            self.leading_monomials.join(", ")
        );
        if let Some(b) = self.is_basis {
            let _ = write!(line, " | basis {}", if b { "yes" } else { "no" });
        }
        line
    }

    /// Inverse of the text rendering of one class line.
    pub fn from_text(line: &str) -> Option<Self> {
        let mut parts = line.split(" | ");
        let weight = parts.next()?.strip_prefix("weight [")?.strip_suffix(']')?;
        let weight = weight
            .split(", ")
            .map(|w| w.parse().ok())
            .collect::<Option<Vec<i64>>>()?;
        let leading = parts.next()?.strip_prefix("leading ")?;
        let leading_monomials = leading.split(", ").map(str::to_string).collect();
        let is_basis = match parts.next() {
            None => None,
            Some("basis yes") => Some(true),
            Some("basis no") => Some(false),
            Some(_) => return None,
        };
        Some(Self {
            weight,
            leading_monomials,
            is_basis,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassListReport {
    pub command: String,
    pub variables: Vec<String>,
    pub classes: Vec<ClassEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound_warning: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalReport {
    pub command: String,
    pub variables: Vec<String>,
    pub universal: bool,
    pub classes_checked: usize,
    pub counterexample: Option<ClassEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound_warning: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankGroupEntry {
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<Vec<u64>>,
    pub classes: Vec<ClassEntry>,
}

impl RankGroupEntry {
    pub fn new(rank: usize, group: &RankedGroup, names: &[String]) -> Self {
        let (dim, degree, hilbert) = match &group.key {
            RankKey::Nicer { dim, degree } => (Some(*dim), Some(*degree), None),
            RankKey::Preferable(h) => (None, None, Some(h.values.clone())),
        };
        Self {
            rank,
            dim,
            degree,
            hilbert,
            classes: group
                .classes
                .iter()
                .map(|c| ClassEntry::new(c, names, None))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankReport {
    pub command: String,
    pub variables: Vec<String>,
    pub criterion: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert_bound: Option<u32>,
    pub groups: Vec<RankGroupEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound_warning: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Report {
    Classes(ClassListReport),
    Universal(UniversalReport),
    Rank(RankReport),
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = match self {
            Report::Classes(r) => serde_json::to_string_pretty(r),
            Report::Universal(r) => serde_json::to_string_pretty(r),
            Report::Rank(r) => serde_json::to_string_pretty(r),
        }
        .expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Classes(r) => {
                header(&mut out, &r.command, &r.variables, r.method.as_deref());
                let _ = writeln!(out, "classes: {}", r.classes.len());
                for c in &r.classes {
                    let _ = writeln!(out, "{}", c.text());
                }
                warning(&mut out, r.bound_warning.as_deref());
            }
            Report::Universal(r) => {
                header(&mut out, &r.command, &r.variables, r.method.as_deref());
                let _ = writeln!(out, "classes checked: {}", r.classes_checked);
                let _ = writeln!(out, "universal: {}", r.universal);
                if let Some(c) = &r.counterexample {
                    let _ = writeln!(out, "counterexample: {}", c.text());
                }
                warning(&mut out, r.bound_warning.as_deref());
            }
            Report::Rank(r) => {
                header(&mut out, &r.command, &r.variables, None);
                let _ = writeln!(out, "criterion: {}", r.criterion);
                if let Some(b) = r.hilbert_bound {
                    let _ = writeln!(out, "hilbert bound: {b}");
                }
                let _ = writeln!(out, "groups: {}", r.groups.len());
                for g in &r.groups {
                    let key = match (&g.dim, &g.degree, &g.hilbert) {
                        (Some(d), Some(v), _) => format!("dim {d}, degree {v}"),
                        (_, _, Some(h)) => {
                            let h: Vec<String> = h.iter().map(u64::to_string).collect();
                            format!("hilbert [{}]", h.join(", "))
                        }
                        _ => String::new(),
                    };
                    let _ = writeln!(
                        out,
                        "rank {}: {} ({} classes)",
                        g.rank,
                        key,
                        g.classes.len()
                    );
                    for c in &g.classes {
                        let _ = writeln!(out, "  {}", c.text());
                    }
                }
                warning(&mut out, r.bound_warning.as_deref());
            }
        }
        out
    }
}

fn header(out: &mut String, command: &str, variables: &[String], method: Option<&str>) {
    let _ = writeln!(out, "command: {command}");
    let _ = writeln!(out, "variables: {}", variables.join(", "));
    if let Some(m) = method {
        let _ = writeln!(out, "method: {m}");
    }
}

fn warning(out: &mut String, w: Option<&str>) {
    if let Some(w) = w {
        let _ = writeln!(out, "warning: {w}");
    }
}

/// Class lines of a text report, in order.
pub fn classes_from_text(text: &str) -> Vec<ClassEntry> {
    text.lines()
        .filter_map(|l| ClassEntry::from_text(l.trim_start()))
        .collect()
}
