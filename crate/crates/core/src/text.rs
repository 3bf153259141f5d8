//! The plain-text formats: elements, generator files and words.
//!
//! Element syntax (one-based throughout):
//!
//! ```text
//! t [1,3,2,4,5]                         transformation (image list)
//! p [5,4,0,2,6,0]                       partial permutation (0 = undefined)
//! b [[1,-1],[2],[3,-2,-3]]              bipartition (signed blocks; -k is the k-th bottom point)
//! r (1, (1 2)(3 4), 2)                  Rees 0-matrix element (i, group element, j)
//! r 0                                   the zero of a Rees 0-matrix semigroup
//! ```
//!
//! A generator file holds one element per line, `#` comments, an optional
//! `mode generic|regular|inverse` directive and, for Rees 0-matrix
//! semigroups, a context block that must precede the elements:
//!
//! ```text
//! rzms
//!   degree 3              # the group acts on 1..3
//!   I 2                   # number of rows i
//!   J 2                   # number of columns j
//!   group (1 2 3), (1 2)  # generators of the group
//!   P (), 0               # entries p_{1,1}, p_{1,2}: one P line per j
//!   P 0, (1 3)
//! end
//! ```

use std::fmt::Write as _;
use std::sync::Arc;

use crate::element::{Bipartition, Element, PartialPerm, RzmsContext, RzmsElement, Transformation};
use crate::engine::Mode;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// The contents of a generator file.
#[derive(Debug, Clone)]
pub struct GeneratorFile {
    /// The `mode` directive, if present.
    pub mode: Option<Mode>,
    /// The Rees 0-matrix context block, if present.
    pub context: Option<Arc<RzmsContext>>,
    /// The generators, in file order (labelled `x1, x2, …`).
    pub generators: Vec<Element>,
}

/// Formats a word as space-separated one-based generator labels, `x1 x3 x3`.
///
/// The empty word (only produced for a formal identity) prints as `1`.
pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    word.iter().map(|g| format!("x{}", g + 1)).collect::<Vec<_>>().join(" ")
}

/// Parses a word printed by [`format_word`].
pub fn parse_word(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text == "1" {
        return Ok(Vec::new());
    }
    text.split_whitespace()
        .map(|tok| match tok.strip_prefix('x').and_then(|k| k.parse::<usize>().ok()) {
            Some(k) if k >= 1 => Ok(k - 1),
            _ => Err(invalid(format!("bad generator label {tok:?}"))),
        })
        .collect()
}

fn invalid(message: impl Into<String>) -> Error {
    Error::Invalid(message.into())
}

/// A nested list of integers, as in `[[1,-1],[2]]`.
#[derive(Debug)]
enum Nested {
    Int(i64),
    List(Vec<Nested>),
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn nested(&mut self) -> Result<Nested> {
        self.skip_ws();
        match self.chars.peek() {
            Some('[') => {
                self.chars.next();
                let mut items = Vec::new();
                self.skip_ws();
                if self.chars.peek() == Some(&']') {
                    self.chars.next();
                    return Ok(Nested::List(items));
                }
                loop {
                    items.push(self.nested()?);
                    self.skip_ws();
                    match self.chars.next() {
                        Some(',') => continue,
                        Some(']') => return Ok(Nested::List(items)),
                        Some(c) => return Err(invalid(format!("expected ',' or ']', found {c:?}"))),
                        None => return Err(invalid("unterminated list")),
                    }
                }
            }
            _ => {
                let mut digits = String::new();
                if self.chars.peek() == Some(&'-') {
                    digits.push('-');
                    self.chars.next();
                }
                while let Some(&c) = self.chars.peek().filter(|c| c.is_ascii_digit()) {
                    digits.push(c);
                    self.chars.next();
                }
                digits.parse().map(Nested::Int).map_err(|_| invalid(format!("expected a number, found {digits:?}")))
            }
        }
    }

    fn end(&mut self) -> Result<()> {
        self.skip_ws();
        match self.chars.next() {
            None => Ok(()),
            Some(c) => Err(invalid(format!("unexpected trailing {c:?}"))),
        }
    }
}

fn parse_nested(text: &str) -> Result<Nested> {
    let mut cursor = Cursor { chars: text.chars().peekable() };
    let value = cursor.nested()?;
    cursor.end()?;
    Ok(value)
}

fn flat_list(value: Nested) -> Result<Vec<i64>> {
    match value {
        Nested::List(items) => items
            .into_iter()
            .map(|v| match v {
                Nested::Int(k) => Ok(k),
                Nested::List(_) => Err(invalid("expected a flat list of numbers")),
            })
            .collect(),
        Nested::Int(_) => Err(invalid("expected a list")),
    }
}

fn to_unsigned(list: Vec<i64>) -> Result<Vec<usize>> {
    list.into_iter()
        .map(|k| usize::try_from(k).map_err(|_| invalid(format!("negative entry {k}"))))
        .collect()
}

/// Splits `text` at commas that are not inside parentheses or brackets.
fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (k, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(text[start..k].trim());
                start = k + 1;
            }
            _ => {}
        }
    }
    parts.push(text[start..].trim());
    parts
}

/// Parses a permutation of `degree` points in cycle notation: `()`, `(1 2)(3 4 5)` or `(1,2)`.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    let text = text.trim();
    let mut cycles = Vec::new();
    let mut rest = text;
    if rest.is_empty() {
        return Err(invalid("empty permutation"));
    }
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| invalid(format!("bad permutation {text:?}")))?;
        let close = body.find(')').ok_or_else(|| invalid(format!("unclosed cycle in {text:?}")))?;
        let points = body[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| invalid(format!("bad cycle point {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = body[close + 1..].trim_start();
    }
    Permutation::from_cycles(degree, &cycles)
}

/// Parses one element. Rees 0-matrix elements need the `context` of their semigroup.
pub fn parse_element(text: &str, context: Option<&Arc<RzmsContext>>) -> Result<Element> {
    let text = text.trim();
    let (tag, body) = text.split_at(text.find(|c: char| c.is_whitespace() || c == '[' || c == '(').unwrap_or(text.len()));
    let body = body.trim();
    match tag {
        "t" => {
            let images = to_unsigned(flat_list(parse_nested(body)?)?)?;
            Ok(Element::Transformation(Transformation::from_one_based(&images)?))
        }
        "p" => {
            let images = to_unsigned(flat_list(parse_nested(body)?)?)?;
            Ok(Element::PartialPerm(PartialPerm::from_one_based(&images)?))
        }
        "b" => {
            let blocks = match parse_nested(body)? {
                Nested::List(items) => items.into_iter().map(flat_list).collect::<Result<Vec<_>>>()?,
                Nested::Int(_) => return Err(invalid("expected a list of blocks")),
            };
            let degree = blocks.iter().flatten().map(|p| p.unsigned_abs() as usize).max().unwrap_or(0);
            if degree == 0 {
                return Err(invalid("a bipartition needs at least one point"));
            }
            Ok(Element::Bipartition(Bipartition::from_blocks(degree, &blocks)?))
        }
        "r" => {
            let context = context.ok_or_else(|| invalid("Rees 0-matrix element without an rzms block"))?;
            if body == "0" {
                return Ok(Element::Rzms(RzmsElement::zero(context)));
            }
            let inner = body
                .strip_prefix('(')
                .and_then(|b| b.strip_suffix(')'))
                .ok_or_else(|| invalid(format!("expected (i, g, j), found {body:?}")))?;
            let parts = split_top_level(inner);
            if parts.len() != 3 {
                return Err(invalid(format!("expected (i, g, j), found {body:?}")));
            }
            let index = |s: &str, bound: usize, what: &str| match s.parse::<usize>() {
                Ok(k) if (1..=bound).contains(&k) => Ok(k - 1),
                _ => Err(invalid(format!("{what} index {s:?} not in 1..{bound}"))),
            };
            let i = index(parts[0], context.nr_rows(), "row")?;
            let g = parse_cycles(parts[1], context.degree())?;
            let j = index(parts[2], context.nr_cols(), "column")?;
            Ok(Element::Rzms(RzmsElement::new(context, i, g, j)?))
        }
        _ => Err(invalid(format!("unknown element kind {tag:?} (expected t, p, b or r)"))),
    }
}

fn parse_error(line: usize, e: Error) -> Error {
    match e {
        Error::Invalid(message) => Error::Parse { line, message },
        other => Error::Parse { line, message: other.to_string() },
    }
}

/// Parses the lines of an `rzms … end` block (without the delimiters).
fn parse_context(lines: &[(usize, &str)], end_line: usize) -> Result<Arc<RzmsContext>> {
    let (mut degree, mut rows, mut cols, mut group_text) = (None, None, None, None);
    let mut matrix_lines = Vec::new();
    for &(line, text) in lines {
        let (key, value) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        let value = value.trim();
        let number = || {
            value.parse::<usize>().map_err(|_| Error::Parse { line, message: format!("expected a number after {key}") })
        };
        match key {
            "degree" => degree = Some(number()?),
            "I" => rows = Some(number()?),
            "J" => cols = Some(number()?),
            "group" => group_text = Some((line, value)),
            "P" => matrix_lines.push((line, value)),
            _ => return Err(Error::Parse { line, message: format!("unknown rzms key {key:?}") }),
        }
    }
    let missing = |what: &str| Error::Parse { line: end_line, message: format!("rzms block lacks {what}") };
    let degree = degree.ok_or_else(|| missing("degree"))?;
    let rows = rows.ok_or_else(|| missing("I"))?;
    let cols = cols.ok_or_else(|| missing("J"))?;
    let group = match group_text {
        Some((_, "")) | None => Vec::new(),
        Some((line, text)) => split_top_level(text)
            .into_iter()
            .map(|c| parse_cycles(c, degree).map_err(|e| parse_error(line, e)))
            .collect::<Result<Vec<_>>>()?,
    };
    if matrix_lines.len() != cols {
        return Err(Error::Parse { line: end_line, message: format!("expected {cols} P lines, found {}", matrix_lines.len()) });
    }
    let mut matrix = Vec::with_capacity(cols);
    for (line, text) in matrix_lines {
        let entries = split_top_level(text);
        if entries.len() != rows {
            return Err(Error::Parse { line, message: format!("expected {rows} entries, found {}", entries.len()) });
        }
        let row = entries
            .into_iter()
            .map(|e| if e == "0" { Ok(None) } else { parse_cycles(e, degree).map(Some) })
            .collect::<Result<Vec<_>>>()
            .map_err(|e| parse_error(line, e))?;
        matrix.push(row);
    }
    RzmsContext::new(degree, group, rows, cols, matrix).map_err(|e| parse_error(end_line, e))
}

/// Parses a generator file. Errors carry one-based line numbers.
pub fn parse_file(text: &str) -> Result<GeneratorFile> {
    let mut file = GeneratorFile { mode: None, context: None, generators: Vec::new() };
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let mut k = 0;
    while k < lines.len() {
        let (line, text) = lines[k];
        if text == "rzms" {
            if file.context.is_some() || !file.generators.is_empty() {
                return Err(Error::Parse { line, message: "the rzms block must come once, before the elements".into() });
            }
            let end = (k + 1..lines.len())
                .find(|&m| lines[m].1 == "end")
                .ok_or_else(|| Error::Parse { line, message: "rzms block without end".into() })?;
            file.context = Some(parse_context(&lines[k + 1..end], lines[end].0)?);
            k = end + 1;
            continue;
        }
        if let Some(mode) = text.strip_prefix("mode") {
            if mode.starts_with(char::is_whitespace) || mode.is_empty() {
                if file.mode.is_some() {
                    return Err(Error::Parse { line, message: "repeated mode directive".into() });
                }
                file.mode = Some(mode.trim().parse().map_err(|e| parse_error(line, e))?);
                k += 1;
                continue;
            }
        }
        let x = parse_element(text, file.context.as_ref()).map_err(|e| parse_error(line, e))?;
        if let Some(first) = file.generators.first() {
            if !first.is_compatible(&x) {
                return Err(Error::Parse {
                    line,
                    message: format!("{} does not match the first generator ({})", x.describe(), first.describe()),
                });
            }
        }
        file.generators.push(x);
        k += 1;
    }
    if file.generators.is_empty() {
        return Err(Error::Parse { line: lines.last().map_or(1, |l| l.0), message: "no generators".into() });
    }
    Ok(file)
}

/// Formats a generator file so that [`parse_file`] reads it back.
pub fn format_file(file: &GeneratorFile) -> String {
    let mut out = String::new();
    if let Some(mode) = file.mode {
        let _ = writeln!(out, "mode {mode}");
    }
    if let Some(ctx) = &file.context {
        let _ = writeln!(out, "rzms");
        let _ = writeln!(out, "  degree {}", ctx.degree());
        let _ = writeln!(out, "  I {}", ctx.nr_rows());
        let _ = writeln!(out, "  J {}", ctx.nr_cols());
        let gens: Vec<String> = ctx.group_generators().iter().map(|g| g.to_string()).collect();
        let _ = writeln!(out, "  group {}", gens.join(", "));
        for j in 0..ctx.nr_cols() {
            let row: Vec<String> =
                (0..ctx.nr_rows()).map(|i| ctx.entry(j, i).map_or("0".to_string(), |p| p.to_string())).collect();
            let _ = writeln!(out, "  P {}", row.join(", "));
        }
        let _ = writeln!(out, "end");
    }
    for x in &file.generators {
        let _ = writeln!(out, "{x}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_round_trips() {
        for text in ["t [1,3,2,4,5]", "p [5,4,0,2,6,0]", "b [[1,-1],[2],[3,-2,-3]]"] {
            let x = parse_element(text, None).unwrap();
            assert_eq!(x.to_string(), text);
        }
    }

    #[test]
    fn bipartition_blocks_are_canonicalised() {
        let x = parse_element("b [[-2,-4],[1,-1],[2],[3],[4,-3],[5,6,-5,-6]]", None).unwrap();
        assert_eq!(x.to_string(), "b [[1,-1],[2],[3],[4,-3],[5,6,-5,-6],[-2,-4]]");
    }

    #[test]
    fn bad_elements_are_rejected() {
        for text in ["t [1,6,2]", "t [0,1]", "p [1,1]", "q [1]", "t [1,2", "b [[1],[1,-1]]", "r (1, (), 1)"] {
            assert!(parse_element(text, None).is_err(), "{text}");
        }
    }

    #[test]
    fn cycles() {
        let p = parse_cycles("(1 2)(3,4,5)", 5).unwrap();
        assert_eq!(p.to_string(), "(1 2)(3 4 5)");
        assert!(parse_cycles("()", 3).unwrap().is_identity());
        assert!(parse_cycles("(1 4)", 3).is_err());
        assert!(parse_cycles("1 2", 3).is_err());
    }

    #[test]
    fn words() {
        assert_eq!(format_word(&[0, 2, 2]), "x1 x3 x3");
        assert_eq!(parse_word("x1 x3 x3").unwrap(), vec![0, 2, 2]);
        assert_eq!(parse_word(&format_word(&[])).unwrap(), Vec::<usize>::new());
        assert!(parse_word("x0").is_err());
    }

    #[test]
    fn file_with_rzms_block_round_trips() {
        let text = "# a small example\nmode regular\nrzms\n  degree 3\n  I 2\n  J 2\n  group (1 2 3), (1 2)\n  P (), 0\n  P 0, (1 3)\nend\nr (1, (1 2), 2)\nr 0\n";
        let file = parse_file(text).unwrap();
        assert_eq!(file.mode, Some(Mode::Regular));
        assert_eq!(file.generators.len(), 2);
        let again = parse_file(&format_file(&file)).unwrap();
        assert_eq!(again.generators, file.generators);
        assert_eq!(format_file(&again), format_file(&file));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_file("t [1,2,3]\n\n# comment\nt [1,2]\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
        let err = parse_file("t [1,2]\nmode sideways\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_file("rzms\n degree 2\n I 1\n J 1\n group (1 2)\n P 0\nend\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 7, .. }), "{err}");
        assert!(matches!(parse_file("# nothing\n"), Err(Error::Parse { .. })));
    }
}
