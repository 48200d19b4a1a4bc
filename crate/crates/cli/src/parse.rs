//! The tangle language.
//!
//! ```text
//! width=<n> closed=<m> : X(p) X-(p) C(p) C-(p) ...
//! b: s<i> s<i>- ... close <m>
//! ```
//!
//! Tokens may span lines; `#` starts a comment that runs to the end of the line.

use tangle_model::{Gen, Slice, Tangle, TangleError};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message} (expected {expected})")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub expected: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: Pos,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { chars: text.chars().peekable(), pos: Pos { line: 1, column: 1 } }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.pos.line += 1;
            self.pos.column = 1;
        } else {
            self.pos.column += 1;
        }
        Some(c)
    }

    fn skip_blank(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c == '#' {
                while self.chars.peek().is_some_and(|&c| c != '\n') {
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn error(&self, at: Pos, message: impl Into<String>, expected: impl Into<String>) -> ParseError {
        ParseError { line: at.line, column: at.column, message: message.into(), expected: expected.into() }
    }

    fn found(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("unexpected {c:?}"),
            None => "unexpected end of input".into(),
        }
    }

    fn expect_char(&mut self, want: char, hint: &str) -> Result<(), ParseError> {
        if self.peek() == Some(want) {
            self.bump();
            Ok(())
        } else {
            let m = self.found();
            Err(self.error(self.pos, m, hint))
        }
    }

    fn word(&mut self) -> String {
        let mut w = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_alphabetic()) {
            w.push(c);
            self.bump();
        }
        w
    }

    fn expect_word(&mut self, want: &str) -> Result<(), ParseError> {
        let at = self.pos;
        let w = self.word();
        if w == want {
            Ok(())
        } else if w.is_empty() {
            let m = self.found();
            Err(self.error(at, m, format!("`{want}`")))
        } else {
            Err(self.error(at, format!("unexpected word `{w}`"), format!("`{want}`")))
        }
    }

    fn number(&mut self, hint: &str) -> Result<usize, ParseError> {
        let at = self.pos;
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.bump();
        }
        if digits.is_empty() {
            let m = self.found();
            return Err(self.error(at, m, hint));
        }
        digits.parse().map_err(|_| self.error(at, format!("number {digits} is too large"), hint))
    }
}

/// Parses either form. Admissibility is not checked here: whether a closure is
/// acceptable depends on the algebra the tangle is evaluated over.
pub fn parse_tangle(text: &str) -> Result<Tangle, ParseError> {
    let mut cur = Cursor::new(text);
    cur.skip_blank();
    let start = cur.pos;
    match cur.peek() {
        Some('w') => slice_form(&mut cur),
        Some('b') => braid_form(&mut cur),
        _ => {
            let m = cur.found();
            Err(cur.error(start, m, "`width=` or `b:`"))
        }
    }
}

fn end(cur: &mut Cursor) -> Result<(), ParseError> {
    cur.skip_blank();
    if cur.peek().is_some() {
        let m = cur.found();
        return Err(cur.error(cur.pos, m, "end of input"));
    }
    Ok(())
}

fn slice_form(cur: &mut Cursor) -> Result<Tangle, ParseError> {
    let header = cur.pos;
    cur.expect_word("width")?;
    cur.skip_blank();
    cur.expect_char('=', "`=`")?;
    cur.skip_blank();
    let width = cur.number("the width")?;
    cur.skip_blank();
    cur.expect_word("closed")?;
    cur.skip_blank();
    cur.expect_char('=', "`=`")?;
    cur.skip_blank();
    let closed = cur.number("the number of closed strands")?;
    cur.skip_blank();
    cur.expect_char(':', "`:`")?;
    if width == 0 {
        return Err(cur.error(header, "width must be at least 1", "a positive width"));
    }
    if closed > width {
        return Err(cur.error(header, format!("{closed} closed strands exceed width {width}"), "closed ≤ width"));
    }
    let mut slices = Vec::new();
    loop {
        cur.skip_blank();
        let at = cur.pos;
        let gen = match cur.peek() {
            None => break,
            Some('X') => Gen::X,
            Some('C') => Gen::C,
            Some(_) => {
                let m = cur.found();
                return Err(cur.error(at, m, "a slice `X(p)`, `X-(p)`, `C(p)` or `C-(p)`"));
            }
        };
        cur.bump();
        let gen = if cur.peek() == Some('-') {
            cur.bump();
            gen.inverse()
        } else {
            gen
        };
        cur.expect_char('(', "`(`")?;
        let pos = cur.number("a 1-based position")?;
        cur.expect_char(')', "`)`")?;
        let top = if gen.is_crossing() { pos + 1 } else { pos };
        if pos == 0 || top > width {
            let what = if gen.is_crossing() { "crossing" } else { "rotation" };
            return Err(cur.error(at, format!("{what} at position {pos} is out of range for width {width}"), format!("a position in 1..={}", if gen.is_crossing() { width - 1 } else { width })));
        }
        slices.push(Slice::new(gen, pos));
    }
    Tangle::new(width, slices, closed).map_err(|e| cur.error(header, e.to_string(), "a valid tangle"))
}

fn braid_form(cur: &mut Cursor) -> Result<Tangle, ParseError> {
    cur.expect_word("b")?;
    cur.skip_blank();
    cur.expect_char(':', "`:`")?;
    let word = generators(cur, true)?;
    let at = cur.pos;
    cur.expect_word("close")?;
    cur.skip_blank();
    let closed = cur.number("the number of closed strands")?;
    end(cur)?;
    let strands = word.iter().map(|g| g.unsigned_abs() as usize + 1).max().unwrap_or(1).max(closed);
    Tangle::braid(strands, &word, closed).map_err(|e: TangleError| cur.error(at, e.to_string(), "a valid closure"))
}

/// Generators `s<i>` / `s<i>-` up to `close` (braid form) or the end of input.
fn generators(cur: &mut Cursor, until_close: bool) -> Result<Vec<i32>, ParseError> {
    let mut word = Vec::new();
    loop {
        cur.skip_blank();
        let at = cur.pos;
        match cur.peek() {
            Some('s') => {
                cur.bump();
                let i = cur.number("a generator index")?;
                if i == 0 {
                    return Err(cur.error(at, "generator s0 does not exist", "an index ≥ 1"));
                }
                let neg = cur.peek() == Some('-');
                if neg {
                    cur.bump();
                }
                word.push(if neg { -(i as i32) } else { i as i32 });
            }
            Some('c') if until_close => return Ok(word),
            None if !until_close => return Ok(word),
            _ => {
                let m = cur.found();
                let hint = if until_close { "a generator `s<i>`, `s<i>-` or `close <m>`" } else { "a generator `s<i>` or `s<i>-`" };
                return Err(cur.error(at, m, hint));
            }
        }
    }
}

/// A bare braid word such as `s1 s2- s1`, as taken by `--knot`.
pub fn parse_braid_word(text: &str) -> Result<Vec<i32>, ParseError> {
    generators(&mut Cursor::new(text), false)
}
