//! The modal propositional language: formulas, sequents, theories, and the
//! ASCII concrete syntax.
//!
//! Grammar (tightest first): prefix operators `~`, `<name>`, `[name]`,
//! `!name`; `/\`; `\/` ; `->` (right-associative). Variables are
//! identifiers, constants are `@` followed by an element name, parentheses
//! group. Extra named binary operators are written infix in braces:
//! `p {meetk} q`, at the same precedence as `/\`. Sequents are
//! `LHS |- RHS`; theory files hold one sequent per line with `#` comments.

use std::fmt;

use crate::algebra::Algebra;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Var(String),
    Const(String),
    Meet(Box<Formula>, Box<Formula>),
    Join(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    PseudoNeg(Box<Formula>),
    Diamond(String, Box<Formula>),
    Box(String, Box<Formula>),
    ModalNeg(String, Box<Formula>),
    BinOp(String, Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(name: &str) -> Formula {
        Formula::Var(name.to_string())
    }

    pub fn cst(name: &str) -> Formula {
        Formula::Const(name.to_string())
    }

    pub fn meet(a: Formula, b: Formula) -> Formula {
        Formula::Meet(Box::new(a), Box::new(b))
    }

    pub fn join(a: Formula, b: Formula) -> Formula {
        Formula::Join(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn pneg(a: Formula) -> Formula {
        Formula::PseudoNeg(Box::new(a))
    }

    pub fn diamond(op: &str, a: Formula) -> Formula {
        Formula::Diamond(op.to_string(), Box::new(a))
    }

    pub fn boxed(op: &str, a: Formula) -> Formula {
        Formula::Box(op.to_string(), Box::new(a))
    }

    pub fn modal_neg(op: &str, a: Formula) -> Formula {
        Formula::ModalNeg(op.to_string(), Box::new(a))
    }

    pub fn binop(op: &str, a: Formula, b: Formula) -> Formula {
        Formula::BinOp(op.to_string(), Box::new(a), Box::new(b))
    }

    /// Nesting depth; atoms are depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Const(_) => 0,
            Formula::PseudoNeg(a)
            | Formula::Diamond(_, a)
            | Formula::Box(_, a)
            | Formula::ModalNeg(_, a) => 1 + a.depth(),
            Formula::Meet(a, b)
            | Formula::Join(a, b)
            | Formula::Implies(a, b)
            | Formula::BinOp(_, a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Variable names occurring in the formula, in first-occurrence order.
    pub fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Formula::Var(v) => {
                if !out.iter().any(|x| x == v) {
                    out.push(v.clone());
                }
            }
            Formula::Const(_) => {}
            Formula::PseudoNeg(a)
            | Formula::Diamond(_, a)
            | Formula::Box(_, a)
            | Formula::ModalNeg(_, a) => a.collect_vars(out),
            Formula::Meet(a, b)
            | Formula::Join(a, b)
            | Formula::Implies(a, b)
            | Formula::BinOp(_, a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Replaces every occurrence of variable `var` by `repl`.
    pub fn substitute(&self, var: &str, repl: &Formula) -> Formula {
        match self {
            Formula::Var(v) if v == var => repl.clone(),
            Formula::Var(_) | Formula::Const(_) => self.clone(),
            Formula::Meet(a, b) => Formula::meet(a.substitute(var, repl), b.substitute(var, repl)),
            Formula::Join(a, b) => Formula::join(a.substitute(var, repl), b.substitute(var, repl)),
            Formula::Implies(a, b) => {
                Formula::implies(a.substitute(var, repl), b.substitute(var, repl))
            }
            Formula::PseudoNeg(a) => Formula::pneg(a.substitute(var, repl)),
            Formula::Diamond(o, a) => Formula::diamond(o, a.substitute(var, repl)),
            Formula::Box(o, a) => Formula::boxed(o, a.substitute(var, repl)),
            Formula::ModalNeg(o, a) => Formula::modal_neg(o, a.substitute(var, repl)),
            Formula::BinOp(o, a, b) => {
                Formula::binop(o, a.substitute(var, repl), b.substitute(var, repl))
            }
        }
    }
}

/// A consequence pair `lhs ⊢ rhs`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sequent {
    pub lhs: Formula,
    pub rhs: Formula,
}

impl Sequent {
    pub fn new(lhs: Formula, rhs: Formula) -> Sequent {
        Sequent { lhs, rhs }
    }

    pub fn collect_vars(&self, out: &mut Vec<String>) {
        self.lhs.collect_vars(out);
        self.rhs.collect_vars(out);
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |- {}", self.lhs, self.rhs)
    }
}

/// An ordered list of sequents.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Theory {
    pub sequents: Vec<Sequent>,
}

impl Theory {
    pub fn new(sequents: Vec<Sequent>) -> Theory {
        Theory { sequents }
    }

    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        for s in &self.sequents {
            s.collect_vars(&mut out);
        }
        out
    }
}

// ---------------------------------------------------------------------------
// printing
// ---------------------------------------------------------------------------

// Precedence levels, loosest first: Implies < Join < Meet/BinOp < prefix/atom.
fn prec(f: &Formula) -> u8 {
    match f {
        Formula::Implies(..) => 0,
        Formula::Join(..) => 1,
        Formula::Meet(..) | Formula::BinOp(..) => 2,
        _ => 3,
    }
}

fn fmt_at(f: &Formula, min: u8, out: &mut String) {
    let p = prec(f);
    let parens = p < min;
    if parens {
        out.push('(');
    }
    match f {
        Formula::Var(v) => out.push_str(v),
        Formula::Const(c) => {
            out.push('@');
            out.push_str(c);
        }
        Formula::Meet(a, b) => {
            fmt_at(a, 2, out);
            out.push_str(" /\\ ");
            fmt_at(b, 3, out);
        }
        Formula::BinOp(o, a, b) => {
            fmt_at(a, 2, out);
            out.push_str(&format!(" {{{o}}} "));
            fmt_at(b, 3, out);
        }
        Formula::Join(a, b) => {
            fmt_at(a, 1, out);
            out.push_str(" \\/ ");
            fmt_at(b, 2, out);
        }
        Formula::Implies(a, b) => {
            fmt_at(a, 1, out);
            out.push_str(" -> ");
            fmt_at(b, 0, out);
        }
        Formula::PseudoNeg(a) => {
            out.push('~');
            fmt_at(a, 3, out);
        }
        Formula::Diamond(o, a) => {
            out.push_str(&format!("<{o}>"));
            fmt_at(a, 3, out);
        }
        Formula::Box(o, a) => {
            out.push_str(&format!("[{o}]"));
            fmt_at(a, 3, out);
        }
        Formula::ModalNeg(o, a) => {
            out.push_str(&format!("!{o} "));
            fmt_at(a, 3, out);
        }
    }
    if parens {
        out.push(')');
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        fmt_at(self, 0, &mut s);
        write!(f, "{s}")
    }
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Const(String),
    MeetSym,
    JoinSym,
    Arrow,
    Tilde,
    Diamond(String),
    BoxOp(String),
    Bang(String),
    Brace(String),
    LParen,
    RParen,
    Turnstile,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    toks: Vec<(usize, Tok)>,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

impl<'a> Lexer<'a> {
    fn run(src: &'a str) -> Result<Vec<(usize, Tok)>> {
        let mut lx = Lexer {
            src,
            pos: 0,
            toks: Vec::new(),
        };
        lx.lex()?;
        Ok(lx.toks)
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn take_name(&mut self, what: &str) -> Result<String> {
        let rest = self.rest();
        let end = rest.find(|c: char| !is_name_char(c)).unwrap_or(rest.len());
        if end == 0 {
            return Err(Error::Syntax {
                pos: self.pos,
                msg: format!("expected {what}"),
            });
        }
        let name = rest[..end].to_string();
        self.pos += end;
        Ok(name)
    }

    fn expect_char(&mut self, c: char) -> Result<()> {
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(Error::Syntax {
                pos: self.pos,
                msg: format!("expected `{c}`"),
            })
        }
    }

    fn lex(&mut self) -> Result<()> {
        while self.pos < self.src.len() {
            let start = self.pos;
            let rest = self.rest();
            let c = rest.chars().next().unwrap();
            if c.is_whitespace() {
                self.pos += c.len_utf8();
                continue;
            }
            let tok = if rest.starts_with("/\\") {
                self.pos += 2;
                Tok::MeetSym
            } else if rest.starts_with("\\/") {
                self.pos += 2;
                Tok::JoinSym
            } else if rest.starts_with("->") {
                self.pos += 2;
                Tok::Arrow
            } else if rest.starts_with("|-") {
                self.pos += 2;
                Tok::Turnstile
            } else if c == '~' {
                self.pos += 1;
                Tok::Tilde
            } else if c == '(' {
                self.pos += 1;
                Tok::LParen
            } else if c == ')' {
                self.pos += 1;
                Tok::RParen
            } else if c == '<' {
                self.pos += 1;
                let name = self.take_name("a modality name")?;
                self.expect_char('>')?;
                Tok::Diamond(name)
            } else if c == '[' {
                self.pos += 1;
                let name = self.take_name("a modality name")?;
                self.expect_char(']')?;
                Tok::BoxOp(name)
            } else if c == '!' {
                self.pos += 1;
                let name = self.take_name("a modality name")?;
                Tok::Bang(name)
            } else if c == '{' {
                self.pos += 1;
                let name = self.take_name("an operator name")?;
                self.expect_char('}')?;
                Tok::Brace(name)
            } else if c == '@' {
                self.pos += 1;
                let name = self.take_name("a constant name")?;
                Tok::Const(name)
            } else if is_ident_start(c) {
                Tok::Ident(self.take_name("an identifier")?)
            } else {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{c}`"),
                });
            };
            self.toks.push((start, tok));
        }
        Ok(())
    }
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    alg: &'a Algebra,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(_, t)| t.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn check_modality(&self, name: &str) -> Result<()> {
        if self.alg.is_modality(name) {
            Ok(())
        } else {
            Err(Error::UnknownModality(name.to_string()))
        }
    }

    fn parse_implies(&mut self) -> Result<Formula> {
        let lhs = self.parse_join()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.next();
            let rhs = self.parse_implies()?; // right-associative
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn parse_join(&mut self) -> Result<Formula> {
        let mut acc = self.parse_meet()?;
        while self.peek() == Some(&Tok::JoinSym) {
            self.next();
            let rhs = self.parse_meet()?;
            acc = Formula::join(acc, rhs);
        }
        Ok(acc)
    }

    fn parse_meet(&mut self) -> Result<Formula> {
        let mut acc = self.parse_prefix()?;
        loop {
            match self.peek() {
                Some(Tok::MeetSym) => {
                    self.next();
                    let rhs = self.parse_prefix()?;
                    acc = Formula::meet(acc, rhs);
                }
                Some(Tok::Brace(name)) => {
                    let name = name.clone();
                    if !self.alg.has_binary(&name) {
                        return Err(Error::UnknownOperator(name));
                    }
                    self.next();
                    let rhs = self.parse_prefix()?;
                    acc = Formula::binop(&name, acc, rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_prefix(&mut self) -> Result<Formula> {
        match self.peek().cloned() {
            Some(Tok::Tilde) => {
                self.next();
                Ok(Formula::pneg(self.parse_prefix()?))
            }
            Some(Tok::Diamond(name)) => {
                self.check_modality(&name)?;
                self.next();
                Ok(Formula::diamond(&name, self.parse_prefix()?))
            }
            Some(Tok::BoxOp(name)) => {
                self.check_modality(&name)?;
                self.next();
                Ok(Formula::boxed(&name, self.parse_prefix()?))
            }
            Some(Tok::Bang(name)) => {
                self.check_modality(&name)?;
                self.next();
                Ok(Formula::modal_neg(&name, self.parse_prefix()?))
            }
            _ => self.parse_atom(),
        }
    }

    fn parse_atom(&mut self) -> Result<Formula> {
        let pos = self.pos();
        match self.next() {
            Some(Tok::Ident(name)) => Ok(Formula::Var(name)),
            Some(Tok::Const(name)) => {
                self.alg
                    .lattice()
                    .elem(&name)
                    .map_err(|_| Error::UnknownConstant(name.clone()))?;
                Ok(Formula::Const(name))
            }
            Some(Tok::LParen) => {
                let f = self.parse_implies()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(f),
                    _ => Err(Error::Syntax {
                        pos,
                        msg: "unclosed parenthesis".into(),
                    }),
                }
            }
            other => Err(Error::Syntax {
                pos,
                msg: format!("expected a formula, found {other:?}"),
            }),
        }
    }
}

/// Parses a formula; constants and modality names are resolved against the
/// algebra.
pub fn parse_formula(text: &str, alg: &Algebra) -> Result<Formula> {
    let toks = Lexer::run(text)?;
    let mut p = Parser {
        toks,
        idx: 0,
        alg,
        end: text.len(),
    };
    let f = p.parse_implies()?;
    if p.idx != p.toks.len() {
        return Err(Error::Syntax {
            pos: p.pos(),
            msg: "trailing input after formula".into(),
        });
    }
    Ok(f)
}

/// Parses `LHS |- RHS`.
pub fn parse_sequent(text: &str, alg: &Algebra) -> Result<Sequent> {
    let toks = Lexer::run(text)?;
    let mut p = Parser {
        toks,
        idx: 0,
        alg,
        end: text.len(),
    };
    let lhs = p.parse_implies()?;
    match p.next() {
        Some(Tok::Turnstile) => {}
        _ => {
            return Err(Error::Syntax {
                pos: p.pos(),
                msg: "expected `|-`".into(),
            })
        }
    }
    let rhs = p.parse_implies()?;
    if p.idx != p.toks.len() {
        return Err(Error::Syntax {
            pos: p.pos(),
            msg: "trailing input after sequent".into(),
        });
    }
    Ok(Sequent::new(lhs, rhs))
}

/// Parses a theory file: one sequent per line, `#` comments, blank lines
/// ignored.
pub fn parse_theory(text: &str, alg: &Algebra) -> Result<Theory> {
    let mut sequents = Vec::new();
    for line in text.lines() {
        let line = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        if line.trim().is_empty() {
            continue;
        }
        sequents.push(parse_sequent(line, alg)?);
    }
    Ok(Theory::new(sequents))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{boolean2, builtin};

    #[test]
    fn parses_meet_with_constant() {
        let alg = builtin("belnap-t").unwrap();
        let f = parse_formula("p /\\ @f", &alg).unwrap();
        assert_eq!(f, Formula::meet(Formula::var("p"), Formula::cst("f")));
    }

    #[test]
    fn parses_diamond_over_join() {
        let alg = builtin("belnap-t").unwrap();
        let f = parse_formula("<conf>(p \\/ q)", &alg).unwrap();
        assert_eq!(
            f,
            Formula::diamond("conf", Formula::join(Formula::var("p"), Formula::var("q")))
        );
    }

    #[test]
    fn unknown_constant_rejected() {
        let alg = boolean2();
        let err = parse_formula("p -> @z", &alg).unwrap_err();
        assert!(matches!(err, Error::UnknownConstant(name) if name == "z"));
    }

    #[test]
    fn unknown_modality_rejected() {
        let alg = boolean2();
        let err = parse_formula("<conf> p", &alg).unwrap_err();
        assert!(matches!(err, Error::UnknownModality(name) if name == "conf"));
    }

    #[test]
    fn precedence_and_associativity() {
        let alg = builtin("belnap-t").unwrap();
        let f = parse_formula("~p /\\ q \\/ r -> s -> t0", &alg).unwrap();
        // ((~p /\ q) \/ r) -> (s -> t0)
        let expect = Formula::implies(
            Formula::join(
                Formula::meet(Formula::pneg(Formula::var("p")), Formula::var("q")),
                Formula::var("r"),
            ),
            Formula::implies(Formula::var("s"), Formula::var("t0")),
        );
        assert_eq!(f, expect);
    }

    #[test]
    fn prefix_binds_tighter_than_meet() {
        let alg = builtin("belnap-t").unwrap();
        let f = parse_formula("!neg p /\\ [conf] q", &alg).unwrap();
        assert_eq!(
            f,
            Formula::meet(
                Formula::modal_neg("neg", Formula::var("p")),
                Formula::boxed("conf", Formula::var("q"))
            )
        );
    }

    #[test]
    fn named_binop_parses() {
        let alg = builtin("belnap-t").unwrap();
        let f = parse_formula("p {meetk} q", &alg).unwrap();
        assert_eq!(
            f,
            Formula::binop("meetk", Formula::var("p"), Formula::var("q"))
        );
    }

    #[test]
    fn syntax_error_reports_position() {
        let alg = boolean2();
        let err = parse_formula("p /\\ )", &alg).unwrap_err();
        match err {
            Error::Syntax { pos, .. } => assert_eq!(pos, 5),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn print_parse_round_trip_examples() {
        let alg = builtin("belnap-t").unwrap();
        for text in [
            "p /\\ (q \\/ @top) -> ~r",
            "<mu><conf>p \\/ !neg (p -> q)",
            "[conf](p {joink} q)",
            "p \\/ (q \\/ r)",
            "(p -> q) -> r",
        ] {
            let f = parse_formula(text, &alg).unwrap();
            let printed = f.to_string();
            let back = parse_formula(&printed, &alg).unwrap();
            assert_eq!(f, back, "round trip through `{printed}`");
        }
    }

    #[test]
    fn sequent_and_theory_parsing() {
        let alg = builtin("belnap-t").unwrap();
        let s = parse_sequent("p /\\ q |- p", &alg).unwrap();
        assert_eq!(s.lhs, Formula::meet(Formula::var("p"), Formula::var("q")));
        let theory =
            parse_theory("# anchored pair\np |- @bot\n@bot |- p\n\n  # done\n", &alg).unwrap();
        assert_eq!(theory.sequents.len(), 2);
        assert_eq!(theory.vars(), vec!["p".to_string()]);
    }
}
