//! Line-oriented space files.
//!
//! ```text
//! space E1
//! points a b c d
//! open
//! open a b
//! open b c
//! open a b c
//! ```
//!
//! `#` starts a comment. Witness blocks wrap a space block between a
//! `witness <kind> <id>` line and trailing `subset <name> [<p> ...]` lines.

use std::fmt::Write as _;
use std::sync::Arc;

use gtspace::{GroundSet, GtSpace, SetFamily, SpaceError, Subset, Witness};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("expected `space <name>`")]
    ExpectedSpace,
    #[error("space name missing")]
    MissingName,
    #[error("expected `points <p1> <p2> ...`")]
    ExpectedPoints,
    #[error("unexpected line `{0}`")]
    Unexpected(String),
    #[error("input holds {0} spaces; exactly one was expected")]
    NotOneSpace(usize),
    #[error("witness header needs a kind and an id")]
    BadWitness,
    #[error("subset line needs a name")]
    BadSubset,
    #[error(transparent)]
    Space(#[from] SpaceError),
}

/// A parse failure at a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct SyntaxError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// One `space` block with whatever wrapped it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    pub space: GtSpace,
    /// `(kind, id)` from a `witness` header.
    pub witness: Option<(String, String)>,
    pub subsets: Vec<(String, Subset)>,
}

fn err(line: usize, kind: impl Into<ParseErrorKind>) -> SyntaxError {
    SyntaxError { line, kind: kind.into() }
}

/// Nonempty lines with comments removed, as `(line number, tokens)`.
fn tokens(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = line.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

struct Pending {
    name: String,
    start: usize,
    ground: Arc<GroundSet>,
    opens: Vec<Subset>,
    witness: Option<(String, String)>,
    subsets: Vec<(String, Subset)>,
}

impl Pending {
    fn finish(self) -> Result<Block, SyntaxError> {
        let gamma: SetFamily = self.opens.into_iter().collect();
        let space = GtSpace::new(self.ground, gamma).map_err(|e| err(self.start, e))?;
        Ok(Block {
            name: self.name,
            space,
            witness: self.witness,
            subsets: self.subsets,
        })
    }
}

/// Parses any number of blocks.
pub fn parse_blocks(text: &str) -> Result<Vec<Block>, SyntaxError> {
    let mut out = Vec::new();
    let mut current: Option<Pending> = None;
    let mut header: Option<(String, String)> = None;
    let mut lines = tokens(text).peekable();
    while let Some((no, toks)) = lines.next() {
        match toks[0] {
            "witness" => {
                if let Some(p) = current.take() {
                    out.push(p.finish()?);
                }
                if toks.len() < 3 {
                    return Err(err(no, ParseErrorKind::BadWitness));
                }
                header = Some((toks[1].to_string(), toks[2..].join(" ")));
            }
            "space" => {
                if let Some(p) = current.take() {
                    out.push(p.finish()?);
                }
                if toks.len() != 2 {
                    return Err(err(no, ParseErrorKind::MissingName));
                }
                let Some((pno, ptoks)) = lines.next() else {
                    return Err(err(no + 1, ParseErrorKind::ExpectedPoints));
                };
                if ptoks[0] != "points" {
                    return Err(err(pno, ParseErrorKind::ExpectedPoints));
                }
                let ground = GroundSet::new(ptoks[1..].iter().copied()).map_err(|e| err(pno, SpaceError::from(e)))?;
                current = Some(Pending {
                    name: toks[1].to_string(),
                    start: no,
                    ground: Arc::new(ground),
                    opens: Vec::new(),
                    witness: header.take(),
                    subsets: Vec::new(),
                });
            }
            "open" | "subset" => {
                let Some(p) = current.as_mut() else {
                    return Err(err(no, ParseErrorKind::ExpectedSpace));
                };
                let is_open = toks[0] == "open";
                let names = if is_open { &toks[1..] } else { toks.get(2..).unwrap_or(&[]) };
                let set = p
                    .ground
                    .subset(names.iter().copied())
                    .map_err(|name| err(no, SpaceError::UnknownPoint(name)))?;
                if is_open {
                    if !p.subsets.is_empty() {
                        return Err(err(no, ParseErrorKind::Unexpected(toks.join(" "))));
                    }
                    p.opens.push(set);
                } else if toks.len() < 2 {
                    return Err(err(no, ParseErrorKind::BadSubset));
                } else {
                    p.subsets.push((toks[1].to_string(), set));
                }
            }
            _ if current.is_none() => return Err(err(no, ParseErrorKind::ExpectedSpace)),
            _ => return Err(err(no, ParseErrorKind::Unexpected(toks.join(" ")))),
        }
    }
    if let Some(p) = current.take() {
        out.push(p.finish()?);
    }
    if header.is_some() {
        return Err(err(text.lines().count(), ParseErrorKind::ExpectedSpace));
    }
    Ok(out)
}

/// Parses exactly one space.
pub fn parse_space(text: &str) -> Result<GtSpace, SyntaxError> {
    parse_named(text).map(|(_, s)| s)
}

/// Parses exactly one space and its name.
pub fn parse_named(text: &str) -> Result<(String, GtSpace), SyntaxError> {
    let mut blocks = parse_blocks(text)?;
    match blocks.len() {
        1 => {
            let b = blocks.pop().expect("one block");
            Ok((b.name, b.space))
        }
        0 => Err(err(1, ParseErrorKind::ExpectedSpace)),
        n => Err(err(1, ParseErrorKind::NotOneSpace(n))),
    }
}

fn names(space: &GtSpace, s: Subset) -> String {
    space.ground().names(s).iter().map(|n| format!(" {n}")).collect()
}

/// Renders a space; open lines follow canonical family order.
pub fn render_space(name: &str, space: &GtSpace) -> String {
    let mut out = format!("space {name}\npoints");
    for label in space.ground().labels() {
        let _ = write!(out, " {label}");
    }
    out.push('\n');
    for open in space.gamma().iter() {
        let _ = writeln!(out, "open{}", names(space, open));
    }
    out
}

/// Renders a witness block; the description becomes a trailing comment.
pub fn render_witness(name: &str, w: &Witness) -> String {
    let mut out = format!("witness {}\n", w.kind);
    out.push_str(&render_space(name, &w.space));
    for (label, set) in &w.subsets {
        let _ = writeln!(out, "subset {label}{}", names(&w.space, *set));
    }
    if !w.description.is_empty() {
        let _ = writeln!(out, "# {}", w.description);
    }
    out
}

/// Rebuilds a witness from a parsed block.
pub fn witness_from_block(block: &Block) -> Option<Witness> {
    let (kind, id) = block.witness.clone()?;
    Some(Witness {
        kind: format!("{kind} {id}"),
        space: block.space.clone(),
        subsets: block.subsets.clone(),
        description: String::new(),
    })
}
