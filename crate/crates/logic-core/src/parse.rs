//! Recursive-descent parsers for the three surface dialects.
//!
//! Dialects are never inferred; the caller picks one. Shared conventions:
//! `! & | ->` with the usual precedences (`!` strongest, `->` weakest and
//! right-associative), `true`/`false`, parentheses. See the README for the
//! full grammars.

use crate::ast::{Dialect, FoFormula, Formula, HsFormula, PointFormula, Polarity, Rel};
use crate::build_length;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at {line}:{col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

/// Parses `text` in the given dialect. In the `fo` dialect the variables
/// `x` and `y` may occur free; anything else unbound is rejected.
pub fn parse(text: &str, dialect: Dialect) -> Result<Formula, ParseError> {
    match dialect {
        Dialect::Hs => parse_hs(text).map(Formula::Hs),
        Dialect::Point => parse_point(text).map(Formula::Point),
        Dialect::Fo => parse_fo_with_free(text, &["x", "y"]).map(Formula::Fo),
    }
}

pub fn parse_hs(text: &str) -> Result<HsFormula, ParseError> {
    let mut c = Cursor::new(text);
    let f = hs_imp(&mut c)?;
    c.expect_end()?;
    Ok(f)
}

pub fn parse_point(text: &str) -> Result<PointFormula, ParseError> {
    let mut c = Cursor::new(text);
    let mut scope = Vec::new();
    let f = pt_imp(&mut c, &mut scope)?;
    c.expect_end()?;
    Ok(f)
}

/// Parses an FO formula allowing exactly the listed variables to occur free.
pub fn parse_fo_with_free(text: &str, free: &[&str]) -> Result<FoFormula, ParseError> {
    let mut c = Cursor::new(text);
    let mut scope: Vec<String> = free.iter().map(|s| s.to_string()).collect();
    let f = fo_imp(&mut c, &mut scope)?;
    c.expect_end()?;
    Ok(f)
}

// ---------------------------------------------------------------- cursor

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        Cursor { chars: text.chars().collect(), pos: 0 }
    }

    fn line_col(&self) -> (usize, usize) {
        let mut line = 1;
        let mut col = 1;
        for &ch in &self.chars[..self.pos] {
            if ch == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        (line, col)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        let (line, col) = self.line_col();
        Err(ParseError { line, col, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    /// Consumes `tok` (after whitespace) if it is next; `tok` must not begin
    /// with an identifier character unless it is a whole word.
    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        let t: Vec<char> = tok.chars().collect();
        if self.chars.len() - self.pos < t.len() {
            return false;
        }
        if self.chars[self.pos..self.pos + t.len()] != t[..] {
            return false;
        }
        if tok.chars().next().unwrap().is_alphanumeric() {
            // whole-word match only
            if let Some(&next) = self.chars.get(self.pos + t.len()) {
                if is_ident_char(next) {
                    return false;
                }
            }
        }
        self.pos += t.len();
        true
    }

    fn expect(&mut self, tok: &str) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.err(format!("expected `{tok}`"))
        }
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos < self.chars.len() {
            self.err("unexpected trailing input")
        } else {
            Ok(())
        }
    }

    /// Reads an identifier (atoms, variables, keywords) or a braced
    /// letter-set atom `{a,b}` used for powerset alphabets.
    fn ident(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.chars.get(self.pos) {
            Some('{') => {
                self.pos += 1;
                while let Some(&ch) = self.chars.get(self.pos) {
                    self.pos += 1;
                    if ch == '}' {
                        return Ok(self.chars[start..self.pos].iter().collect());
                    }
                }
                self.err("unterminated `{` letter-set atom")
            }
            Some(&ch) if ch.is_alphabetic() || ch == '_' => {
                self.pos += 1;
                while let Some(&ch) = self.chars.get(self.pos) {
                    if is_ident_char(ch) {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                Ok(self.chars[start..self.pos].iter().collect())
            }
            _ => self.err("expected identifier"),
        }
    }
}

fn is_ident_char(ch: char) -> bool {
    ch.is_alphanumeric() || matches!(ch, '_' | '$' | '=' | '.' | '\'')
}

/// `lenN` sugar for the length-N formula.
fn len_sugar(name: &str) -> Option<usize> {
    let digits = name.strip_prefix("len")?;
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

// ---------------------------------------------------------------- hs

fn hs_imp(c: &mut Cursor) -> Result<HsFormula, ParseError> {
    let lhs = hs_or(c)?;
    if c.eat("->") {
        let rhs = hs_imp(c)?;
        Ok(HsFormula::implies(lhs, rhs))
    } else {
        Ok(lhs)
    }
}

fn hs_or(c: &mut Cursor) -> Result<HsFormula, ParseError> {
    let mut f = hs_and(c)?;
    while c.eat("|") {
        f = HsFormula::or(f, hs_and(c)?);
    }
    Ok(f)
}

fn hs_and(c: &mut Cursor) -> Result<HsFormula, ParseError> {
    let mut f = hs_unary(c)?;
    while c.eat("&") {
        f = HsFormula::and(f, hs_unary(c)?);
    }
    Ok(f)
}

fn hs_unary(c: &mut Cursor) -> Result<HsFormula, ParseError> {
    if c.eat("!") {
        return Ok(HsFormula::not(hs_unary(c)?));
    }
    match c.peek() {
        Some('<') => {
            c.expect("<")?;
            let name = c.ident()?;
            let rel = match Rel::from_name(&name) {
                Some(r) => r,
                None => return c.err(format!("unknown modality `{name}`")),
            };
            c.expect(">")?;
            Ok(HsFormula::Modal(rel, Polarity::Ex, Box::new(hs_unary(c)?)))
        }
        Some('[') => {
            c.expect("[")?;
            let name = c.ident()?;
            let rel = match Rel::from_name(&name) {
                Some(r) => r,
                None => return c.err(format!("unknown modality `{name}`")),
            };
            c.expect("]")?;
            Ok(HsFormula::Modal(rel, Polarity::Univ, Box::new(hs_unary(c)?)))
        }
        _ => hs_primary(c),
    }
}

fn hs_primary(c: &mut Cursor) -> Result<HsFormula, ParseError> {
    if c.eat("(") {
        let f = hs_imp(c)?;
        c.expect(")")?;
        return Ok(f);
    }
    if c.eat("true") {
        return Ok(HsFormula::True);
    }
    if c.eat("false") {
        return Ok(HsFormula::falsum());
    }
    let name = c.ident()?;
    if let Some(n) = len_sugar(&name) {
        if n == 0 {
            return c.err("len0 is not a formula");
        }
        return Ok(build_length(n).expect("n >= 1"));
    }
    Ok(HsFormula::Atom(name))
}

// ---------------------------------------------------------------- point

fn pt_imp(c: &mut Cursor, scope: &mut Vec<String>) -> Result<PointFormula, ParseError> {
    let lhs = pt_or(c, scope)?;
    if c.eat("->") {
        let rhs = pt_imp(c, scope)?;
        Ok(PointFormula::implies(lhs, rhs))
    } else {
        Ok(lhs)
    }
}

fn pt_or(c: &mut Cursor, scope: &mut Vec<String>) -> Result<PointFormula, ParseError> {
    let mut f = pt_and(c, scope)?;
    while c.eat("|") {
        f = PointFormula::or(f, pt_and(c, scope)?);
    }
    Ok(f)
}

fn pt_and(c: &mut Cursor, scope: &mut Vec<String>) -> Result<PointFormula, ParseError> {
    let mut f = pt_until(c, scope)?;
    while c.eat("&") {
        f = PointFormula::and(f, pt_until(c, scope)?);
    }
    Ok(f)
}

fn pt_until(c: &mut Cursor, scope: &mut Vec<String>) -> Result<PointFormula, ParseError> {
    let lhs = pt_unary(c, scope)?;
    if c.eat("U") {
        let rhs = pt_until(c, scope)?;
        Ok(PointFormula::until(lhs, rhs))
    } else if c.eat("S") {
        let rhs = pt_until(c, scope)?;
        Ok(PointFormula::since(lhs, rhs))
    } else {
        Ok(lhs)
    }
}

fn pt_unary(c: &mut Cursor, scope: &mut Vec<String>) -> Result<PointFormula, ParseError> {
    if c.eat("!") {
        return Ok(PointFormula::not(pt_unary(c, scope)?));
    }
    for (tok, make) in [
        ("X", PointFormula::next as fn(PointFormula) -> PointFormula),
        ("F", PointFormula::ev),
        ("G", PointFormula::alw),
        ("Y", PointFormula::prev),
        ("P", PointFormula::ev_past),
        ("H", PointFormula::alw_past),
    ] {
        if c.eat(tok) {
            return Ok(make(pt_unary(c, scope)?));
        }
    }
    for (tok, make) in [
        ("Ef", PointFormula::ExistsF as fn(Box<PointFormula>) -> PointFormula),
        ("Af", PointFormula::ForallF),
        ("E", PointFormula::Exists),
        ("A", PointFormula::Forall),
    ] {
        // quantifiers always carry explicit parentheses: E( ... )
        let save = c.pos;
        if c.eat(tok) {
            if c.eat("(") {
                let body = pt_imp(c, scope)?;
                c.expect(")")?;
                return Ok(make(Box::new(body)));
            }
            c.pos = save;
        }
    }
    if c.eat("down") {
        let var = c.ident()?;
        c.expect(".")?;
        scope.push(var.clone());
        let body = pt_imp(c, scope)?;
        scope.pop();
        return Ok(PointFormula::Bind(var, Box::new(body)));
    }
    pt_primary(c, scope)
}

fn pt_primary(c: &mut Cursor, scope: &mut Vec<String>) -> Result<PointFormula, ParseError> {
    if c.eat("(") {
        let f = pt_imp(c, scope)?;
        c.expect(")")?;
        return Ok(f);
    }
    if c.eat("true") {
        return Ok(PointFormula::True);
    }
    if c.eat("false") {
        return Ok(PointFormula::falsum());
    }
    let name = c.ident()?;
    if scope.contains(&name) {
        Ok(PointFormula::Var(name))
    } else {
        Ok(PointFormula::Atom(name))
    }
}

// ---------------------------------------------------------------- fo

fn fo_imp(c: &mut Cursor, scope: &mut Vec<String>) -> Result<FoFormula, ParseError> {
    let lhs = fo_or(c, scope)?;
    if c.eat("->") {
        let rhs = fo_imp(c, scope)?;
        Ok(FoFormula::implies(lhs, rhs))
    } else {
        Ok(lhs)
    }
}

fn fo_or(c: &mut Cursor, scope: &mut Vec<String>) -> Result<FoFormula, ParseError> {
    let mut f = fo_and(c, scope)?;
    while c.eat("|") {
        f = FoFormula::or(f, fo_and(c, scope)?);
    }
    Ok(f)
}

fn fo_and(c: &mut Cursor, scope: &mut Vec<String>) -> Result<FoFormula, ParseError> {
    let mut f = fo_unary(c, scope)?;
    while c.eat("&") {
        f = FoFormula::and(f, fo_unary(c, scope)?);
    }
    Ok(f)
}

fn fo_unary(c: &mut Cursor, scope: &mut Vec<String>) -> Result<FoFormula, ParseError> {
    if c.eat("!") {
        return Ok(FoFormula::not(fo_unary(c, scope)?));
    }
    for (tok, forall) in [("exists", false), ("forall", true)] {
        if c.eat(tok) {
            let var = c.ident()?;
            c.expect(".")?;
            scope.push(var.clone());
            let body = fo_imp(c, scope)?;
            scope.pop();
            return Ok(if forall {
                FoFormula::Forall(var, Box::new(body))
            } else {
                FoFormula::Exists(var, Box::new(body))
            });
        }
    }
    fo_primary(c, scope)
}

fn fo_primary(c: &mut Cursor, scope: &mut Vec<String>) -> Result<FoFormula, ParseError> {
    if c.eat("(") {
        let f = fo_imp(c, scope)?;
        c.expect(")")?;
        return Ok(f);
    }
    if c.eat("true") {
        return Ok(FoFormula::True);
    }
    if c.eat("false") {
        return Ok(FoFormula::not(FoFormula::True));
    }
    let name = c.ident()?;
    if c.eat("(") {
        // predicate application p(z)
        let var = c.ident()?;
        c.expect(")")?;
        check_bound(c, scope, &var)?;
        return Ok(FoFormula::Pred(name, var));
    }
    // comparison: >= and > are normalized by flipping the operands
    check_bound(c, scope, &name)?;
    if c.eat("<=") {
        let rhs = c.ident()?;
        check_bound(c, scope, &rhs)?;
        Ok(FoFormula::Le(name, rhs))
    } else if c.eat("<") {
        let rhs = c.ident()?;
        check_bound(c, scope, &rhs)?;
        Ok(FoFormula::Lt(name, rhs))
    } else if c.eat(">=") {
        let rhs = c.ident()?;
        check_bound(c, scope, &rhs)?;
        Ok(FoFormula::Le(rhs, name))
    } else if c.eat(">") {
        let rhs = c.ident()?;
        check_bound(c, scope, &rhs)?;
        Ok(FoFormula::Lt(rhs, name))
    } else {
        c.err("expected comparison operator after variable")
    }
}

fn check_bound(c: &Cursor, scope: &[String], var: &str) -> Result<(), ParseError> {
    if scope.iter().any(|v| v == var) {
        Ok(())
    } else {
        c.err(format!("unbound variable `{var}`"))
    }
}
