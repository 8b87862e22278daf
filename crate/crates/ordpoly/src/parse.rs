//! Tiny cursor for the relation and inequality text formats.
//! Whitespace-insensitive; errors carry the 1-based column of the offending
//! character.

use crate::{Error, Result};

pub(crate) struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    pub fn col(&self) -> usize {
        self.pos + 1
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { msg: msg.into(), col: self.col() }
    }

    pub fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    pub fn peek_is(&mut self, c: char) -> bool {
        self.peek() == Some(c as u8)
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(b) if b == c as u8 => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(self.err(format!("expected `{c}`, found `{}`", b as char))),
            None => Err(self.err(format!("expected `{c}`, found end of input"))),
        }
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek_is(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            Ok(())
        } else {
            Err(self.err(format!("expected `{kw}`")))
        }
    }

    pub fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = self.eat('-');
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let v: i64 = digits.parse().map_err(|_| self.err("number out of range"))?;
        Ok(if neg { -v } else { v })
    }

    /// `( i , j )`
    pub fn pair(&mut self) -> Result<(usize, usize)> {
        self.expect('(')?;
        let i = self.integer()?;
        self.expect(',')?;
        let j = self.integer()?;
        self.expect(')')?;
        if i < 1 || j < 1 {
            return Err(self.err("elements are 1-based"));
        }
        Ok((i as usize, j as usize))
    }

    pub fn end(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(b) => Err(self.err(format!("unexpected trailing `{}`", b as char))),
        }
    }
}
