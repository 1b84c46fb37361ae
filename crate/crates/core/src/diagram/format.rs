use super::{Component, Diagram, Event, Sign, WallKind};
use crate::{Error, Result};

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn parse_event(tok: &str, line: usize, column: usize) -> Result<Event> {
    let bad = |m: &str| syntax(line, column, format!("{m}: `{tok}`"));
    let mut chars = tok.chars();
    let head = chars.next().ok_or_else(|| bad("empty event"))?;
    let rest = chars.as_str();
    match head {
        'o' | 'u' => {
            let id: u32 = rest.parse().map_err(|_| bad("bad crossing id"))?;
            Ok(if head == 'o' { Event::Over(id) } else { Event::Under(id) })
        }
        'x' | 'y' | 'z' => {
            let mut it = rest.chars();
            let sign = it.next().and_then(Sign::from_symbol).ok_or_else(|| bad("expected + or -"))?;
            let pos = it
                .as_str()
                .strip_prefix('@')
                .ok_or_else(|| bad("expected @"))?
                .parse::<u32>()
                .map_err(|_| bad("bad position"))?;
            if pos == 0 {
                return Err(bad("positions start at 1"));
            }
            Ok(match head {
                'x' => Event::Wall { kind: WallKind::X, sign, pos },
                'y' => Event::Wall { kind: WallKind::Y, sign, pos },
                _ => Event::Vertex { sign, index: pos },
            })
        }
        _ => Err(bad("unknown event")),
    }
}

/// Whitespace separated tokens with their 1-based byte columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

/// Parses T3D text and validates the result.
pub fn parse_diagram(text: &str) -> Result<Diagram> {
    let mut d = Diagram::new();
    let mut header = false;
    for (n, raw) in text.lines().enumerate() {
        let ln = n + 1;
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokens(line);
        let Some(&(col, kw)) = toks.first() else { continue };
        if !header {
            if kw != "t3d" || toks.len() != 2 || toks[1].1 != "1" {
                return Err(syntax(ln, col, "expected header `t3d 1`"));
            }
            header = true;
            continue;
        }
        match kw {
            "crossing" => {
                if toks.len() != 4 || toks[2].1 != "sign" {
                    return Err(syntax(ln, col, "expected `crossing <id> sign <+|->`"));
                }
                let id: u32 = toks[1].1.parse().map_err(|_| syntax(ln, toks[1].0, "bad crossing id"))?;
                let sign = match toks[3].1 {
                    "+" => Sign::Plus,
                    "-" => Sign::Minus,
                    _ => return Err(syntax(ln, toks[3].0, "expected + or -")),
                };
                if d.crossings.insert(id, sign).is_some() {
                    return Err(syntax(ln, toks[1].0, format!("crossing {id} declared twice")));
                }
            }
            "component" => {
                if toks.len() < 3 || toks[2].1 != ":" {
                    return Err(syntax(ln, col, "expected `component <name> : <event>*`"));
                }
                let events = toks[3..]
                    .iter()
                    .map(|&(c, t)| parse_event(t, ln, c))
                    .collect::<Result<Vec<_>>>()?;
                d.components.push(Component::new(toks[1].1, events));
            }
            _ => return Err(syntax(ln, col, format!("unknown keyword `{kw}`"))),
        }
    }
    if !header {
        return Err(syntax(1, 1, "missing header `t3d 1`"));
    }
    d.check_valid()?;
    Ok(d)
}

pub fn serialize_diagram(d: &Diagram) -> String {
    let mut out = String::from("t3d 1\n");
    for (id, s) in &d.crossings {
        out.push_str(&format!("crossing {id} sign {}\n", s.symbol()));
    }
    for comp in &d.components {
        out.push_str(&format!("component {} :", comp.name));
        for e in &comp.events {
            out.push_str(&format!(" {e}"));
        }
        out.push('\n');
    }
    out
}
