use alloc::string::String;
use alloc::vec::Vec;

use super::parser::SyntaxError;
use super::Location;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Nat(String),
    Decimal(String),
    Fluent,
    Action,
    Maxinst,
    TakesValues,
    CausesOneOf,
    InitiallyOneOf,
    PerformedAt,
    WithProb,
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Eq,
    Bang,
    Amp,
    Pipe,
    Arrow,
    At,
    Slash,
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        let s = match self {
            Tok::Ident(s) => return alloc::format!("identifier `{s}`"),
            Tok::Nat(s) | Tok::Decimal(s) => return alloc::format!("number `{s}`"),
            Tok::Fluent => "`fluent`",
            Tok::Action => "`action`",
            Tok::Maxinst => "`maxinst`",
            Tok::TakesValues => "`takes-values`",
            Tok::CausesOneOf => "`causes-one-of`",
            Tok::InitiallyOneOf => "`initially-one-of`",
            Tok::PerformedAt => "`performed-at`",
            Tok::WithProb => "`with-prob`",
            Tok::LBrace => "`{`",
            Tok::RBrace => "`}`",
            Tok::LParen => "`(`",
            Tok::RParen => "`)`",
            Tok::LBracket => "`[`",
            Tok::RBracket => "`]`",
            Tok::Comma => "`,`",
            Tok::Eq => "`=`",
            Tok::Bang => "`!`",
            Tok::Amp => "`&`",
            Tok::Pipe => "`|`",
            Tok::Arrow => "`->`",
            Tok::At => "`@`",
            Tok::Slash => "`/`",
            Tok::Eof => "end of input",
        };
        String::from(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Token {
    pub tok: Tok,
    pub loc: Location,
}

const KEYWORDS: [(&str, Tok); 8] = [
    ("initially-one-of", Tok::InitiallyOneOf),
    ("causes-one-of", Tok::CausesOneOf),
    ("takes-values", Tok::TakesValues),
    ("performed-at", Tok::PerformedAt),
    ("with-prob", Tok::WithProb),
    ("maxinst", Tok::Maxinst),
    ("fluent", Tok::Fluent),
    ("action", Tok::Action),
];

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>, SyntaxError> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut col = 1;
    let mut rest = src;
    while let Some(c) = rest.chars().next() {
        let loc = Location { line, column: col };
        if c == '\n' {
            line += 1;
            col = 1;
            rest = &rest[1..];
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            rest = &rest[c.len_utf8()..];
            continue;
        }
        if c == '%' {
            let end = rest.find('\n').unwrap_or(rest.len());
            col += rest[..end].chars().count();
            rest = &rest[end..];
            continue;
        }
        let (tok, len) = if c.is_ascii_alphabetic() {
            let ident_len = rest.find(|c: char| !is_ident_char(c)).unwrap_or(rest.len());
            let keyword = KEYWORDS.iter().find(|(kw, _)| {
                rest.starts_with(kw)
                    && !rest[kw.len()..].starts_with(is_ident_char)
                    && !rest[kw.len()..].starts_with('-')
            });
            match keyword {
                Some((kw, tok)) => (tok.clone(), kw.len()),
                None => (Tok::Ident(String::from(&rest[..ident_len])), ident_len),
            }
        } else if c.is_ascii_digit() {
            let int_len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            let after = &rest[int_len..];
            if after.starts_with('.') && after[1..].starts_with(|c: char| c.is_ascii_digit()) {
                let frac = after[1..].find(|c: char| !c.is_ascii_digit()).unwrap_or(after.len() - 1);
                let len = int_len + 1 + frac;
                (Tok::Decimal(String::from(&rest[..len])), len)
            } else {
                (Tok::Nat(String::from(&rest[..int_len])), int_len)
            }
        } else if rest.starts_with("->") {
            (Tok::Arrow, 2)
        } else {
            let tok = match c {
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                '=' => Tok::Eq,
                '!' => Tok::Bang,
                '&' => Tok::Amp,
                '|' => Tok::Pipe,
                '@' => Tok::At,
                '/' => Tok::Slash,
                _ => {
                    return Err(SyntaxError {
                        location: loc,
                        message: alloc::format!("unexpected character `{c}`"),
                    })
                }
            };
            (tok, 1)
        };
        out.push(Token { tok, loc });
        col += rest[..len].chars().count();
        rest = &rest[len..];
    }
    out.push(Token { tok: Tok::Eof, loc: Location { line, column: col } });
    Ok(out)
}
