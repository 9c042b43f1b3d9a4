//! JSON module files.
//!
//! ```json
//! {
//!   "algebra": "A(1)",
//!   "basis": [{"name": "x", "degree": 0}, {"name": "y", "degree": 1}],
//!   "actions": {"Sq1": [["x", "y"]]}
//! }
//! ```
//!
//! Targets are sums of basis names (`"a + b"`) or `"0"`; omitted entries are zero.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::f2linalg::F2Vector;
use crate::parse::{from_json_error, ParseError};

use super::{AlgebraTag, GradedModule, ModuleBuilder, ModuleError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisEntry {
    pub name: String,
    pub degree: i32,
}

/// The serialized form of a [`GradedModule`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub algebra: String,
    pub basis: Vec<BasisEntry>,
    #[serde(default)]
    pub actions: BTreeMap<String, Vec<(String, String)>>,
}

impl ModuleFile {
    pub fn from_module(m: &GradedModule) -> Self {
        let basis = m
            .basis()
            .iter()
            .map(|b| BasisEntry {
                name: b.name.clone(),
                degree: b.degree,
            })
            .collect();
        let mut actions = BTreeMap::new();
        for k in m.generators() {
            let table = m.generator_matrix(k);
            let entries: Vec<(String, String)> = (0..m.dim())
                .filter_map(|j| {
                    let image = table.column(j);
                    (!image.is_zero()).then(|| (m.basis()[j].name.clone(), m.format_vector(&image)))
                })
                .collect();
            actions.insert(format!("Sq{k}"), entries);
        }
        ModuleFile {
            algebra: m.tag().as_str().to_string(),
            basis,
            actions,
        }
    }

    /// Canonical text: one basis entry or action entry per line, actions in
    /// increasing degree.
    pub fn to_json(&self) -> String {
        let q = |s: &str| serde_json::to_string(s).expect("strings serialize");
        let mut out = String::from("{\n");
        out += &format!("  \"algebra\": {},\n", q(&self.algebra));
        out += "  \"basis\": [";
        for (i, b) in self.basis.iter().enumerate() {
            out += if i == 0 { "\n" } else { ",\n" };
            out += &format!("    {{\"name\": {}, \"degree\": {}}}", q(&b.name), b.degree);
        }
        out += if self.basis.is_empty() { "],\n" } else { "\n  ],\n" };
        let mut keys: Vec<&String> = self.actions.keys().collect();
        keys.sort_by_key(|k| (k.len(), k.as_str()));
        out += "  \"actions\": {";
        for (i, k) in keys.iter().enumerate() {
            out += if i == 0 { "\n" } else { ",\n" };
            out += &format!("    {}: [", q(k));
            for (e, (src, tgt)) in self.actions[*k].iter().enumerate() {
                out += if e == 0 { "\n" } else { ",\n" };
                out += &format!("      [{}, {}]", q(src), q(tgt));
            }
            out += if self.actions[*k].is_empty() { "]" } else { "\n    ]" };
        }
        out += if keys.is_empty() { "}\n" } else { "\n  }\n" };
        out += "}\n";
        out
    }

    /// Parses module text, reporting positions of syntax and name errors.
    pub fn parse(text: &str) -> Result<GradedModule, ModuleError> {
        let file: ModuleFile = serde_json::from_str(text).map_err(|e| from_json_error(&e))?;
        file.build_with_source(Some(text))
    }

    pub fn build(&self) -> Result<GradedModule, ModuleError> {
        self.build_with_source(None)
    }

    fn build_with_source(&self, text: Option<&str>) -> Result<GradedModule, ModuleError> {
        let locate = |needle: &str, msg: String| -> ModuleError {
            let quoted = serde_json::to_string(needle).unwrap_or_default();
            match text.and_then(|t| position(t, &quoted)) {
                Some((line, column)) => ParseError::new(line, column, msg).into(),
                None => ModuleError::Malformed(msg),
            }
        };
        let tag: AlgebraTag = self
            .algebra
            .parse()
            .map_err(|_| locate(&self.algebra, format!("unknown algebra '{}'", self.algebra)))?;
        let mut b = ModuleBuilder::new(tag);
        let mut names = HashMap::new();
        for e in &self.basis {
            if names.insert(e.name.clone(), b.add_basis(e.name.clone(), e.degree)).is_some() {
                return Err(locate(&e.name, format!("duplicate basis name '{}'", e.name)));
            }
        }
        let n = b.len();
        for (key, entries) in &self.actions {
            let k = key
                .strip_prefix("Sq")
                .and_then(|s| s.parse::<u32>().ok())
                .filter(|&k| tag.is_generator(k))
                .ok_or_else(|| locate(key, format!("'{key}' is not a generator of {tag}")))?;
            let mut seen = HashMap::new();
            for (src, tgt) in entries {
                let &s = names
                    .get(src)
                    .ok_or_else(|| locate(src, format!("unknown basis element '{src}'")))?;
                if seen.insert(s, ()).is_some() {
                    return Err(locate(src, format!("{key}({src}) given twice")));
                }
                let mut v = F2Vector::zeros(n);
                if tgt.trim() != "0" {
                    for term in tgt.split('+') {
                        let term = term.trim();
                        let &t = names
                            .get(term)
                            .ok_or_else(|| locate(tgt, format!("unknown basis element '{term}'")))?;
                        v.flip(t);
                    }
                }
                b.add_action_vector(k, s, v);
            }
        }
        b.build()
    }
}

impl GradedModule {
    pub fn to_json(&self) -> String {
        ModuleFile::from_module(self).to_json()
    }

    pub fn from_json(text: &str) -> Result<GradedModule, ModuleError> {
        ModuleFile::parse(text)
    }
}

/// 1-based line and column of the first occurrence of `needle`.
pub(crate) fn position(text: &str, needle: &str) -> Option<(usize, usize)> {
    let offset = text.find(needle)?;
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    Some((line, column))
}
