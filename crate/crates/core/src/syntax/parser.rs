use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;

use super::lexer::{Tok, Token};
use super::Location;
use crate::prob::parse_rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct SyntaxError {
    pub location: Location,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Name {
    pub text: String,
    pub loc: Location,
}

/// `X=V`, or the boolean shorthands `X` and `!X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct RawLit {
    pub subject: Name,
    pub value: Name,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum RawFormula {
    Lit(RawLit),
    Not(Box<RawFormula>),
    And(Box<RawFormula>, Box<RawFormula>),
    Or(Box<RawFormula>, Box<RawFormula>),
    Implies(Box<RawFormula>, Box<RawFormula>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum RawQuery {
    At(RawFormula, u32, Location),
    Not(Box<RawQuery>),
    And(Box<RawQuery>, Box<RawQuery>),
    Or(Box<RawQuery>, Box<RawQuery>),
    Implies(Box<RawQuery>, Box<RawQuery>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct RawOutcome {
    pub lits: Vec<RawLit>,
    pub weight: BigRational,
    pub loc: Location,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Stmt {
    Fluent { name: Name, values: Vec<Name> },
    Action { name: Name },
    Maxinst { value: u32, loc: Location },
    Initially { head: Vec<RawOutcome>, loc: Location },
    Causes { body: RawFormula, head: Vec<RawOutcome>, loc: Location },
    Performed { action: Name, instant: u32, prob: Option<BigRational>, loc: Location },
}

struct Parser<'t> {
    toks: &'t [Token],
    pos: usize,
}

type PResult<T> = Result<T, SyntaxError>;

impl<'t> Parser<'t> {
    fn peek(&self) -> &'t Token {
        &self.toks[self.pos]
    }

    fn peek_at(&self, n: usize) -> &'t Tok {
        let i = (self.pos + n).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn bump(&mut self) -> &'t Token {
        let t = &self.toks[self.pos];
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> PResult<T> {
        let t = self.peek();
        Err(SyntaxError {
            location: t.loc,
            message: alloc::format!("expected {expected}, found {}", t.tok.describe()),
        })
    }

    fn expect(&mut self, tok: Tok) -> PResult<Location> {
        if self.peek().tok == tok {
            Ok(self.bump().loc)
        } else {
            self.error(&tok.describe())
        }
    }

    fn eat(&mut self, tok: Tok) -> bool {
        if self.peek().tok == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn name(&mut self) -> PResult<Name> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let loc = self.bump().loc;
                Ok(Name { text: s.clone(), loc })
            }
            _ => self.error("an identifier"),
        }
    }

    fn nat(&mut self) -> PResult<u32> {
        match &self.peek().tok {
            Tok::Nat(s) => {
                let loc = self.peek().loc;
                let v = s.parse::<u32>().map_err(|_| SyntaxError {
                    location: loc,
                    message: alloc::format!("number `{s}` is too large"),
                })?;
                self.bump();
                Ok(v)
            }
            _ => self.error("a natural number"),
        }
    }

    fn prob(&mut self) -> PResult<BigRational> {
        let loc = self.peek().loc;
        let text = match &self.peek().tok {
            Tok::Decimal(d) => {
                self.bump();
                d.clone()
            }
            Tok::Nat(n) => {
                self.bump();
                if self.eat(Tok::Slash) {
                    match &self.peek().tok {
                        Tok::Nat(d) => {
                            self.bump();
                            alloc::format!("{n}/{d}")
                        }
                        _ => return self.error("a denominator"),
                    }
                } else {
                    n.clone()
                }
            }
            _ => return self.error("a probability"),
        };
        parse_rational(&text).map_err(|e| SyntaxError { location: loc, message: alloc::format!("{e}") })
    }

    fn lit(&mut self) -> PResult<RawLit> {
        if self.peek().tok == Tok::Bang {
            let bang = self.bump().loc;
            let subject = self.name()?;
            return Ok(RawLit { subject, value: Name { text: String::from("false"), loc: bang } });
        }
        let subject = self.name()?;
        if self.eat(Tok::Eq) {
            let value = self.name()?;
            Ok(RawLit { subject, value })
        } else {
            let loc = subject.loc;
            Ok(RawLit { subject, value: Name { text: String::from("true"), loc } })
        }
    }

    fn formula(&mut self) -> PResult<RawFormula> {
        let lhs = self.disjunction()?;
        if self.eat(Tok::Arrow) {
            let rhs = self.formula()?;
            return Ok(RawFormula::Implies(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> PResult<RawFormula> {
        let mut lhs = self.conjunction()?;
        while self.eat(Tok::Pipe) {
            let rhs = self.conjunction()?;
            lhs = RawFormula::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> PResult<RawFormula> {
        let mut lhs = self.unary()?;
        while self.eat(Tok::Amp) {
            let rhs = self.unary()?;
            lhs = RawFormula::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> PResult<RawFormula> {
        match self.peek().tok {
            // `!X` alone is the literal X=false; `!X=V` negates X=V.
            Tok::Bang if matches!(self.peek_at(1), Tok::Ident(_)) && *self.peek_at(2) != Tok::Eq => {
                Ok(RawFormula::Lit(self.lit()?))
            }
            Tok::Bang => {
                self.bump();
                Ok(RawFormula::Not(Box::new(self.unary()?)))
            }
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::Ident(_) => Ok(RawFormula::Lit(self.lit()?)),
            _ => self.error("a literal, `!` or `(`"),
        }
    }

    fn query(&mut self) -> PResult<RawQuery> {
        let lhs = self.query_disjunction()?;
        if self.eat(Tok::Arrow) {
            let rhs = self.query()?;
            return Ok(RawQuery::Implies(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn query_disjunction(&mut self) -> PResult<RawQuery> {
        let mut lhs = self.query_conjunction()?;
        while self.eat(Tok::Pipe) {
            let rhs = self.query_conjunction()?;
            lhs = RawQuery::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn query_conjunction(&mut self) -> PResult<RawQuery> {
        let mut lhs = self.query_unary()?;
        while self.eat(Tok::Amp) {
            let rhs = self.query_unary()?;
            lhs = RawQuery::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn query_unary(&mut self) -> PResult<RawQuery> {
        match self.peek().tok {
            Tok::Bang => {
                self.bump();
                Ok(RawQuery::Not(Box::new(self.query_unary()?)))
            }
            Tok::LParen => {
                self.bump();
                let q = self.query()?;
                self.expect(Tok::RParen)?;
                Ok(q)
            }
            Tok::LBracket => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RBracket)?;
                self.expect(Tok::At)?;
                let loc = self.peek().loc;
                let instant = self.nat()?;
                Ok(RawQuery::At(f, instant, loc))
            }
            _ => self.error("`[`, `!` or `(`"),
        }
    }

    fn outcomes(&mut self) -> PResult<Vec<RawOutcome>> {
        self.expect(Tok::LBrace)?;
        let mut out = Vec::new();
        loop {
            let loc = self.expect(Tok::LParen)?;
            self.expect(Tok::LBrace)?;
            let mut lits = Vec::new();
            if self.peek().tok != Tok::RBrace {
                lits.push(self.lit()?);
                while self.eat(Tok::Comma) {
                    lits.push(self.lit()?);
                }
            }
            self.expect(Tok::RBrace)?;
            self.expect(Tok::Comma)?;
            let weight = self.prob()?;
            self.expect(Tok::RParen)?;
            out.push(RawOutcome { lits, weight, loc });
            if !self.eat(Tok::Comma) {
                break;
            }
        }
        self.expect(Tok::RBrace)?;
        Ok(out)
    }

    fn statement(&mut self) -> PResult<Stmt> {
        let loc = self.peek().loc;
        match self.peek().tok {
            Tok::Fluent => {
                self.bump();
                let name = self.name()?;
                self.expect(Tok::TakesValues)?;
                self.expect(Tok::LBrace)?;
                let mut values = alloc::vec![self.name()?];
                while self.eat(Tok::Comma) {
                    values.push(self.name()?);
                }
                self.expect(Tok::RBrace)?;
                Ok(Stmt::Fluent { name, values })
            }
            Tok::Action => {
                self.bump();
                Ok(Stmt::Action { name: self.name()? })
            }
            Tok::Maxinst => {
                self.bump();
                Ok(Stmt::Maxinst { value: self.nat()?, loc })
            }
            Tok::InitiallyOneOf => {
                self.bump();
                Ok(Stmt::Initially { head: self.outcomes()?, loc })
            }
            Tok::Ident(_) if *self.peek_at(1) == Tok::PerformedAt => {
                let action = self.name()?;
                self.bump();
                let instant = self.nat()?;
                let prob = if self.eat(Tok::WithProb) { Some(self.prob()?) } else { None };
                Ok(Stmt::Performed { action, instant, prob, loc })
            }
            Tok::Ident(_) | Tok::Bang | Tok::LParen => {
                let body = self.formula()?;
                self.expect(Tok::CausesOneOf)?;
                Ok(Stmt::Causes { body, head: self.outcomes()?, loc })
            }
            _ => self.error("a statement"),
        }
    }
}

pub(crate) fn parse_statements(toks: &[Token]) -> PResult<Vec<Stmt>> {
    let mut p = Parser { toks, pos: 0 };
    let mut out = Vec::new();
    while p.peek().tok != Tok::Eof {
        out.push(p.statement()?);
    }
    Ok(out)
}

pub(crate) fn parse_query(toks: &[Token]) -> PResult<RawQuery> {
    let mut p = Parser { toks, pos: 0 };
    let q = p.query()?;
    if p.peek().tok != Tok::Eof {
        return p.error("end of query");
    }
    Ok(q)
}

pub(crate) fn parse_formula_only(toks: &[Token]) -> PResult<RawFormula> {
    let mut p = Parser { toks, pos: 0 };
    let f = p.formula()?;
    if p.peek().tok != Tok::Eof {
        return p.error("end of formula");
    }
    Ok(f)
}
