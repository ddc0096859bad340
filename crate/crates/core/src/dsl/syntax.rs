//! Tokens and expression trees for `.spbw` sources.

use num_bigint::BigInt;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl Pos {
    pub fn err(self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            col: self.col,
            msg: msg.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(&'static str),
    Eof,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

const SYMBOLS: [&str; 17] = [
    "->", "<=", "=", "(", ")", "[", "]", "{", "}", ",", ";", ":", "*", "+", "-", "^", "/",
];

pub fn lex(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' || (c == '/' && chars.get(i + 1) == Some(&'/')) {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Token {
                tok: Tok::Int(s.parse().expect("digits")),
                pos,
            });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Token { tok: Tok::Ident(s), pos });
            continue;
        }
        let rest: String = chars[i..(i + 2).min(chars.len())].iter().collect();
        match SYMBOLS.iter().find(|s| rest.starts_with(**s)) {
            Some(s) => {
                i += s.len();
                col += s.len();
                out.push(Token { tok: Tok::Sym(s), pos });
            }
            None => return Err(pos.err(format!("unexpected character `{}`", c))),
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        pos: Pos { line, col },
    });
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigInt),
    Name(String, Pos),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, Pos),
    Pow(Box<Expr>, i64, Pos),
}

pub struct Cursor {
    toks: Vec<Token>,
    at: usize,
}

impl Cursor {
    pub fn new(toks: Vec<Token>) -> Self {
        Cursor { toks, at: 0 }
    }

    pub fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    pub fn pos(&self) -> Pos {
        self.toks[self.at].pos
    }

    pub fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    pub fn at_eof(&self) -> bool {
        matches!(self.peek(), Tok::Eof)
    }

    pub fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Tok::Sym(t) if *t == s)
    }

    pub fn is_kw(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(t) if t == kw)
    }

    pub fn eat_sym(&mut self, s: &str) -> bool {
        if self.is_sym(s) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn expect_sym(&mut self, s: &str) -> Result<()> {
        if self.eat_sym(s) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{}`", s)))
        }
    }

    pub fn expect_kw(&mut self, kw: &str) -> Result<()> {
        if self.is_kw(kw) {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{}`", kw)))
        }
    }

    pub fn ident(&mut self) -> Result<(String, Pos)> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok((s, pos))
            }
            _ => Err(self.unexpected("a name")),
        }
    }

    pub fn unexpected(&self, wanted: &str) -> Error {
        let found = match self.peek() {
            Tok::Ident(s) => format!("`{}`", s),
            Tok::Int(n) => format!("`{}`", n),
            Tok::Sym(s) => format!("`{}`", s),
            Tok::Eof => "end of input".to_string(),
        };
        self.pos().err(format!("expected {}, found {}", wanted, found))
    }

    // expr := term (('+' | '-') term)*
    pub fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat_sym("+") {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat_sym("-") {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    // term := unary (('*' | '/') unary)*
    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat_sym("*") {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.is_sym("/") {
                let pos = self.pos();
                self.bump();
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), pos);
            } else {
                return Ok(lhs);
            }
        }
    }

    // unary := '-' unary | power
    fn unary(&mut self) -> Result<Expr> {
        if self.eat_sym("-") {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    // power := atom ('^' exponent)?, exponent := ['-'] INT | '(' ['-'] INT ')'
    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.is_sym("^") {
            return Ok(base);
        }
        let pos = self.pos();
        self.bump();
        let paren = self.eat_sym("(");
        let neg = self.eat_sym("-");
        let k = match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                i64::try_from(n).map_err(|_| pos.err("exponent too large"))?
            }
            _ => return Err(self.unexpected("an integer exponent")),
        };
        if paren {
            self.expect_sym(")")?;
        }
        Ok(Expr::Pow(Box::new(base), if neg { -k } else { k }, pos))
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Num(n))
            }
            Tok::Ident(s) => {
                self.bump();
                Ok(Expr::Name(s, pos))
            }
            Tok::Sym("(") => {
                self.bump();
                let e = self.expr()?;
                self.expect_sym(")")?;
                Ok(e)
            }
            _ => Err(self.unexpected("an expression")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Expr {
        let mut c = Cursor::new(lex(s).unwrap());
        let e = c.expr().unwrap();
        assert!(c.at_eof());
        e
    }

    fn name(s: &str) -> Box<Expr> {
        Box::new(Expr::Name(s.into(), Pos::default()))
    }

    fn strip(e: Expr) -> Expr {
        // positions are irrelevant for shape comparisons
        match e {
            Expr::Name(s, _) => Expr::Name(s, Pos::default()),
            Expr::Neg(a) => Expr::Neg(Box::new(strip(*a))),
            Expr::Add(a, b) => Expr::Add(Box::new(strip(*a)), Box::new(strip(*b))),
            Expr::Sub(a, b) => Expr::Sub(Box::new(strip(*a)), Box::new(strip(*b))),
            Expr::Mul(a, b) => Expr::Mul(Box::new(strip(*a)), Box::new(strip(*b))),
            Expr::Div(a, b, _) => Expr::Div(Box::new(strip(*a)), Box::new(strip(*b)), Pos::default()),
            Expr::Pow(a, k, _) => Expr::Pow(Box::new(strip(*a)), k, Pos::default()),
            e => e,
        }
    }

    #[test]
    fn precedence() {
        let e = strip(parse("a + b*c^2"));
        let want = Expr::Add(
            name("a"),
            Box::new(Expr::Mul(name("b"), Box::new(Expr::Pow(name("c"), 2, Pos::default())))),
        );
        assert_eq!(e, want);
        let e = strip(parse("-x^2"));
        assert_eq!(e, Expr::Neg(Box::new(Expr::Pow(name("x"), 2, Pos::default()))));
        let e = strip(parse("p^-1 * x"));
        assert_eq!(e, Expr::Mul(Box::new(Expr::Pow(name("p"), -1, Pos::default())), name("x")));
    }

    #[test]
    fn positions_and_comments() {
        let toks = lex("# header\n  ab -> 3 // tail\n").unwrap();
        assert_eq!(toks[0].pos, Pos { line: 2, col: 3 });
        assert_eq!(toks[1].tok, Tok::Sym("->"));
        assert_eq!(toks[2].tok, Tok::Int(BigInt::from(3)));
        let e = lex("a $ b").unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                line: 1,
                col: 3,
                msg: "unexpected character `$`".into()
            }
        );
    }
}
