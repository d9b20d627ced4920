//! The ranking document formats.
//!
//! Text:
//!
//! ```text
//! # three firms on a river
//! universe: 1 2 3
//! class: {1,2,3} {1,2} {1,3}
//! class: {2,3} {1} {2} {3}
//! ```
//!
//! JSON mirrors it: `{"universe": ["1","2","3"], "classes": [[["1","2","3"], ...], ...]}`.
//! A document starting with `{` is read as JSON.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Coalition, CoalitionalRanking, Universe};

/// A parsed ranking together with the names of its individuals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankingDocument {
    pub universe: Universe,
    pub ranking: CoalitionalRanking,
}

impl RankingDocument {
    pub fn new(universe: Universe, ranking: CoalitionalRanking) -> Result<Self> {
        if universe.size() != ranking.n() {
            return Err(Error::UniverseMismatch {
                left: universe.size(),
                right: ranking.n(),
            });
        }
        Ok(Self { universe, ranking })
    }

    /// Uses the default names `1..n`.
    pub fn with_default_names(ranking: CoalitionalRanking) -> Self {
        Self {
            universe: Universe::new(ranking.n()).expect("rankings have a valid universe"),
            ranking,
        }
    }

    pub fn to_text(&self) -> String {
        render_ranking(&self.universe, &self.ranking)
    }

    pub fn to_json(&self) -> String {
        let doc = JsonDocument {
            universe: self.universe.names().to_vec(),
            classes: self
                .ranking
                .classes()
                .iter()
                .map(|class| {
                    class
                        .iter()
                        .map(|c| {
                            c.members()
                                .map(|x| self.universe.name(x).to_string())
                                .collect()
                        })
                        .collect()
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("document serializes")
    }
}

/// Reads either format.
pub fn parse_ranking(text: &str) -> Result<RankingDocument> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

/// Renders the text format; `parse_text` inverts it.
pub fn render_ranking(universe: &Universe, ranking: &CoalitionalRanking) -> String {
    let mut out = format!("universe: {}\n", universe.names().join(" "));
    for class in ranking.classes() {
        out.push_str("class:");
        for &c in class {
            out.push(' ');
            out.push_str(&universe.format_coalition(c));
        }
        out.push('\n');
    }
    out
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Strips a `#` comment, keeping the column numbering of what remains.
fn content(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// The text after `key:` if the line starts with it, and its column.
fn keyword<'a>(line: &'a str, key: &str) -> Option<(&'a str, usize)> {
    let trimmed = line.trim_start();
    let lead = line.chars().count() - trimmed.chars().count();
    let rest = trimmed.strip_prefix(key)?.trim_start();
    let rest = rest.strip_prefix(':')?;
    let column = line.chars().count() - rest.chars().count() + 1;
    debug_assert!(column > lead);
    Some((rest, column))
}

pub fn parse_text(text: &str) -> Result<RankingDocument> {
    let mut universe: Option<Universe> = None;
    let mut classes: Vec<Vec<Coalition>> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = content(raw);
        if line.trim().is_empty() {
            continue;
        }
        if let Some((rest, _)) = keyword(line, "universe") {
            if universe.is_some() {
                return Err(syntax(line_no, 1, "duplicate universe line"));
            }
            let names: Vec<&str> = rest.split_whitespace().collect();
            if names.is_empty() {
                return Err(syntax(
                    line_no,
                    line.chars().count() + 1,
                    "universe line names no individuals",
                ));
            }
            universe = Some(Universe::with_names(names)?);
        } else if let Some((rest, column)) = keyword(line, "class") {
            let Some(u) = &universe else {
                return Err(syntax(
                    line_no,
                    1,
                    "the universe line must come before class lines",
                ));
            };
            classes.push(parse_class(u, rest, line_no, column)?);
        } else {
            let column = line.chars().count() - line.trim_start().chars().count() + 1;
            let message = if universe.is_none() {
                "expected `universe:` line"
            } else {
                "expected `class:` line"
            };
            return Err(syntax(line_no, column, message));
        }
    }
    let Some(universe) = universe else {
        return Err(syntax(last_line.max(1), 1, "missing `universe:` line"));
    };
    if classes.is_empty() {
        return Err(syntax(last_line.max(1), 1, "no `class:` lines"));
    }
    let ranking = CoalitionalRanking::new(&universe, classes)?;
    Ok(RankingDocument { universe, ranking })
}

fn parse_class(
    universe: &Universe,
    rest: &str,
    line: usize,
    offset: usize,
) -> Result<Vec<Coalition>> {
    let chars: Vec<char> = rest.chars().collect();
    let col = |i: usize| offset + i;
    let mut class = Vec::new();
    let mut i = 0;
    loop {
        while i < chars.len() && chars[i].is_whitespace() {
            i += 1;
        }
        if i == chars.len() {
            break;
        }
        if chars[i] != '{' {
            return Err(syntax(
                line,
                col(i),
                format!("expected `{{`, found `{}`", chars[i]),
            ));
        }
        let open = i;
        i += 1;
        let mut mask = 0u32;
        let mut expect_name = true;
        loop {
            while i < chars.len() && chars[i].is_whitespace() {
                i += 1;
            }
            let Some(&ch) = chars.get(i) else {
                return Err(syntax(line, col(open), "unclosed `{`"));
            };
            match (ch, expect_name) {
                ('}', _) if mask == 0 && expect_name => {
                    if i == open + 1 || chars[open + 1..i].iter().all(|c| c.is_whitespace()) {
                        return Err(Error::EmptyCoalition);
                    }
                    return Err(syntax(line, col(i), "expected a name before `}`"));
                }
                ('}', false) => {
                    i += 1;
                    break;
                }
                (',', false) => {
                    expect_name = true;
                    i += 1;
                }
                (_, true) if !matches!(ch, '{' | '}' | ',') => {
                    let start = i;
                    while i < chars.len()
                        && !chars[i].is_whitespace()
                        && !matches!(chars[i], '{' | '}' | ',')
                    {
                        i += 1;
                    }
                    let name: String = chars[start..i].iter().collect();
                    let Some(x) = universe.index_of(&name) else {
                        return Err(Error::OutOfUniverse(format!("individual `{name}`")));
                    };
                    if mask & (1 << x) != 0 {
                        return Err(syntax(
                            line,
                            col(start),
                            format!("`{name}` listed twice in one coalition"),
                        ));
                    }
                    mask |= 1 << x;
                    expect_name = false;
                }
                _ => {
                    let want = if expect_name { "a name" } else { "`,` or `}`" };
                    return Err(syntax(
                        line,
                        col(i),
                        format!("expected {want}, found `{ch}`"),
                    ));
                }
            }
        }
        class.push(Coalition::from_mask(mask));
    }
    if class.is_empty() {
        return Err(syntax(
            line,
            col(chars.len()),
            "class line lists no coalitions",
        ));
    }
    Ok(class)
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDocument {
    universe: Vec<String>,
    classes: Vec<Vec<Vec<String>>>,
}

pub fn parse_json(text: &str) -> Result<RankingDocument> {
    let doc: JsonDocument =
        serde_json::from_str(text).map_err(|e| syntax(e.line(), e.column(), e.to_string()))?;
    let universe = Universe::with_names(doc.universe)?;
    let mut classes = Vec::with_capacity(doc.classes.len());
    for class in doc.classes {
        let mut out = Vec::with_capacity(class.len());
        for members in class {
            let mut ids = Vec::with_capacity(members.len());
            for name in &members {
                let x = universe
                    .index_of(name)
                    .ok_or_else(|| Error::OutOfUniverse(format!("individual `{name}`")))?;
                ids.push(x);
            }
            if ids.is_empty() {
                return Err(Error::EmptyCoalition);
            }
            let c = Coalition::try_from_members(universe.size(), ids.iter().copied())?;
            if c.len() != ids.len() {
                return Err(Error::DuplicateCoalition(format!(
                    "{members:?} repeats an individual"
                )));
            }
            out.push(c);
        }
        classes.push(out);
    }
    let ranking = CoalitionalRanking::new(&universe, classes)?;
    Ok(RankingDocument { universe, ranking })
}
