use crate::error::{Error, Result};

use super::Quiver;

/// Parses a quiver file: either JSON (`{"vertices": [...], "arrows": [...]}`)
/// or the line format
///
/// ```text
/// # comment
/// vertices 1 2 3
/// arrow a:1->2
/// arrow b:2->3
/// ```
///
/// `;` separates statements like a newline, and `arrows` may list several
/// arrows in one statement.
pub fn parse_quiver(text: &str) -> Result<Quiver> {
    if text.trim_start().starts_with('{') {
        return Quiver::from_json_str(text);
    }
    let mut labels: Option<Vec<i64>> = None;
    let mut arrows = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        for stmt in content.split(';') {
            let mut words = stmt.split_whitespace();
            let Some(keyword) = words.next() else {
                continue;
            };
            let err = |message: String| Error::Parse { line, message };
            match keyword {
                "vertices" => {
                    if labels.is_some() {
                        return Err(err("vertices declared twice".into()));
                    }
                    let ls = words
                        .map(|w| w.parse::<i64>().map_err(|_| err(format!("bad vertex label {w:?}"))))
                        .collect::<Result<Vec<_>>>()?;
                    labels = Some(ls);
                }
                "arrow" | "arrows" => {
                    let rest: Vec<&str> = words.collect();
                    let joined = rest.join(" ");
                    let specs: Vec<&str> =
                        joined.split([',', ' ']).filter(|s| !s.is_empty()).collect();
                    if specs.is_empty() {
                        return Err(err("arrow statement without arrows".into()));
                    }
                    for spec in specs {
                        arrows.push(parse_arrow(spec).map_err(err)?);
                    }
                }
                other => return Err(err(format!("unknown keyword {other:?}"))),
            }
        }
    }
    let labels = labels.ok_or(Error::Parse { line: 0, message: "missing vertices line".into() })?;
    Quiver::new(labels, arrows)
}

fn parse_arrow(spec: &str) -> std::result::Result<(String, i64, i64), String> {
    let (id, ends) = spec.split_once(':').ok_or_else(|| format!("arrow {spec:?} lacks ':'"))?;
    let (s, t) = ends.split_once("->").ok_or_else(|| format!("arrow {spec:?} lacks '->'"))?;
    if id.is_empty() {
        return Err(format!("arrow {spec:?} has an empty id"));
    }
    let s = s.parse::<i64>().map_err(|_| format!("bad source in {spec:?}"))?;
    let t = t.parse::<i64>().map_err(|_| format!("bad target in {spec:?}"))?;
    Ok((id.to_string(), s, t))
}
