//! Optical pipeline language.
//!
//! ```text
//! pipeline := [ element ( "|" element )* ]
//! element  := ident "(" arg ( "," arg )* ")"
//! arg      := number [ "deg" ] | axis
//! number   := [ "+" | "-" ] digits [ "." digits ] [ ( "e" | "E" ) [ "+" | "-" ] digits ]
//! axis     := "x" | "y"
//! ```
//!
//! Elements: `phase(δ)`, `atten(μ1, μ2)`, `rotate(θ)`, `squeeze45(λ)`,
//! `polarizer(x|y)`. Angles are radians unless suffixed with `deg`; the
//! attenuation and squeeze arguments are dimensionless and reject `deg`.
//!
//! The same lexer reads generator words for the `lorentz` command:
//! `Z(δ) R(θ) B(μ) S(λ) T(γ)`, separated by whitespace or `*`.

use std::fmt;

use poincare::lorentz::{Generator, GeneratorWord};
use poincare::polarization::{Axis, OpticalElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DslErrorCode {
    Syntax,
    UnknownElement,
    Arity,
    BadArgument,
}

impl DslErrorCode {
    pub fn as_str(&self) -> &'static str {
        match self {
            DslErrorCode::Syntax => "syntax",
            DslErrorCode::UnknownElement => "unknown_element",
            DslErrorCode::Arity => "arity",
            DslErrorCode::BadArgument => "bad_argument",
        }
    }
}

/// A parse failure with a 1-based source position.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("{}:{}: {message} [{}]", .line, .column, .code.as_str())]
pub struct DslError {
    pub code: DslErrorCode,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

impl Pos {
    fn error(self, code: DslErrorCode, message: impl Into<String>) -> DslError {
        DslError {
            code,
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Number { value: f64, degrees: bool },
    LParen,
    RParen,
    Comma,
    Pipe,
    Star,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Number { .. } => f.write_str("number"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Pipe => f.write_str("`|`"),
            Tok::Star => f.write_str("`*`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    src: &'a str,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            chars: src.char_indices().peekable(),
            src,
            line: 1,
            column: 1,
        }
    }

    fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            column: self.column,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let (_, c) = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().map(|&(_, c)| c)
    }

    fn offset(&mut self) -> usize {
        self.chars.peek().map_or(self.src.len(), |&(i, _)| i)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn digits(&mut self) -> usize {
        let mut n = 0;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
            n += 1;
        }
        n
    }

    fn number(&mut self, start: Pos) -> Result<Tok, DslError> {
        let begin = self.offset();
        if matches!(self.peek(), Some('+' | '-')) {
            self.bump();
        }
        let mut count = self.digits();
        if self.peek() == Some('.') {
            self.bump();
            count += self.digits();
        }
        if count == 0 {
            return Err(start.error(DslErrorCode::Syntax, "expected digits"));
        }
        if matches!(self.peek(), Some('e' | 'E')) {
            self.bump();
            if matches!(self.peek(), Some('+' | '-')) {
                self.bump();
            }
            if self.digits() == 0 {
                return Err(self.pos().error(DslErrorCode::Syntax, "expected exponent digits"));
            }
        }
        let end = self.offset();
        let text = &self.src[begin..end];
        let value: f64 = text
            .parse()
            .map_err(|_| start.error(DslErrorCode::Syntax, format!("invalid number `{text}`")))?;
        if !value.is_finite() {
            return Err(start.error(DslErrorCode::BadArgument, format!("number `{text}` is not finite")));
        }

        // optional unit suffix, possibly after whitespace
        self.skip_ws();
        let degrees = if self.src[self.offset()..].starts_with("deg")
            && !self.src[self.offset() + 3..]
                .chars()
                .next()
                .is_some_and(|c| c.is_alphanumeric() || c == '_')
        {
            for _ in 0..3 {
                self.bump();
            }
            true
        } else {
            false
        };
        Ok(Tok::Number { value, degrees })
    }

    fn next_token(&mut self) -> Result<(Tok, Pos), DslError> {
        self.skip_ws();
        let pos = self.pos();
        let Some(c) = self.peek() else {
            return Ok((Tok::End, pos));
        };
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '|' => Tok::Pipe,
            '*' | '·' => Tok::Star,
            c if c.is_ascii_digit() || matches!(c, '+' | '-' | '.') => return Ok((self.number(pos)?, pos)),
            c if c.is_alphabetic() || c == '_' => {
                let begin = self.offset();
                while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
                    self.bump();
                }
                let end = self.offset();
                return Ok((Tok::Ident(self.src[begin..end].to_string()), pos));
            }
            other => {
                return Err(pos.error(DslErrorCode::Syntax, format!("unexpected character `{other}`")));
            }
        };
        self.bump();
        Ok((tok, pos))
    }

    fn tokenize(mut self) -> Result<Vec<(Tok, Pos)>, DslError> {
        let mut out = Vec::new();
        loop {
            let (tok, pos) = self.next_token()?;
            let done = tok == Tok::End;
            out.push((tok, pos));
            if done {
                return Ok(out);
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum RawArg {
    Number { value: f64, degrees: bool },
    Ident(String),
}

struct RawCall {
    name: String,
    name_pos: Pos,
    args: Vec<(RawArg, Pos)>,
    close_pos: Pos,
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &(Tok, Pos) {
        &self.toks[self.at]
    }

    fn advance(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<Pos, DslError> {
        let (tok, pos) = self.advance();
        if tok == want {
            Ok(pos)
        } else {
            Err(pos.error(DslErrorCode::Syntax, format!("expected {want}, found {tok}")))
        }
    }

    fn call(&mut self) -> Result<RawCall, DslError> {
        let (tok, name_pos) = self.advance();
        let Tok::Ident(name) = tok else {
            return Err(name_pos.error(DslErrorCode::Syntax, format!("expected element name, found {tok}")));
        };
        self.expect(Tok::LParen)?;
        let mut args = Vec::new();
        loop {
            let (tok, pos) = self.advance();
            let arg = match tok {
                Tok::Number { value, degrees } => RawArg::Number { value, degrees },
                Tok::Ident(s) => RawArg::Ident(s),
                Tok::RParen if args.is_empty() => {
                    return Ok(RawCall {
                        name,
                        name_pos,
                        args,
                        close_pos: pos,
                    })
                }
                other => {
                    return Err(pos.error(DslErrorCode::Syntax, format!("expected argument, found {other}")));
                }
            };
            args.push((arg, pos));
            let (tok, pos) = self.advance();
            match tok {
                Tok::Comma => continue,
                Tok::RParen => {
                    return Ok(RawCall {
                        name,
                        name_pos,
                        args,
                        close_pos: pos,
                    })
                }
                other => {
                    return Err(pos.error(DslErrorCode::Syntax, format!("expected `,` or `)`, found {other}")));
                }
            }
        }
    }
}

fn check_arity(call: &RawCall, want: usize) -> Result<(), DslError> {
    if call.args.len() == want {
        Ok(())
    } else {
        Err(call.name_pos.error(
            DslErrorCode::Arity,
            format!(
                "`{}` takes {want} argument{}, got {}",
                call.name,
                if want == 1 { "" } else { "s" },
                call.args.len()
            ),
        ))
    }
}

/// Numeric argument; angles convert degrees, other quantities reject them.
fn number_arg(call: &RawCall, index: usize, angle: bool) -> Result<f64, DslError> {
    let (arg, pos) = &call.args[index];
    match arg {
        RawArg::Number { value, degrees: false } => Ok(*value),
        RawArg::Number { value, degrees: true } if angle => Ok(value.to_radians()),
        RawArg::Number { degrees: true, .. } => Err(pos.error(
            DslErrorCode::BadArgument,
            format!("`deg` is only valid on angles, not on `{}` arguments", call.name),
        )),
        RawArg::Ident(s) => Err(pos.error(
            DslErrorCode::BadArgument,
            format!("expected a number for `{}`, found `{s}`", call.name),
        )),
    }
}

/// Element names accepted by the pipeline language.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementName {
    Phase,
    Atten,
    Rotate,
    Squeeze45,
    Polarizer,
}

impl ElementName {
    pub const ALL: [ElementName; 5] = [
        ElementName::Phase,
        ElementName::Atten,
        ElementName::Rotate,
        ElementName::Squeeze45,
        ElementName::Polarizer,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ElementName::Phase => "phase",
            ElementName::Atten => "atten",
            ElementName::Rotate => "rotate",
            ElementName::Squeeze45 => "squeeze45",
            ElementName::Polarizer => "polarizer",
        }
    }

    fn from_ident(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|n| n.as_str() == s)
    }
}

/// One element of a parsed pipeline. Angles are stored in radians.
#[derive(Debug, Clone, PartialEq)]
pub struct ElementNode {
    pub name: ElementName,
    pub element: OpticalElement,
}

impl fmt::Display for ElementNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.element.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct PipelineAst {
    pub nodes: Vec<ElementNode>,
}

impl PipelineAst {
    pub fn elements(&self) -> impl Iterator<Item = &OpticalElement> {
        self.nodes.iter().map(|n| &n.element)
    }
}

/// Canonical text form; parsing it yields an identical AST.
impl fmt::Display for PipelineAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.nodes.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            n.fmt(f)?;
        }
        Ok(())
    }
}

fn resolve(call: &RawCall) -> Result<ElementNode, DslError> {
    let name = ElementName::from_ident(&call.name).ok_or_else(|| {
        call.name_pos.error(
            DslErrorCode::UnknownElement,
            format!(
                "unknown element `{}` (expected one of phase, atten, rotate, squeeze45, polarizer)",
                call.name
            ),
        )
    })?;
    let element = match name {
        ElementName::Phase => {
            check_arity(call, 1)?;
            OpticalElement::PhaseShift {
                delta: number_arg(call, 0, true)?,
            }
        }
        ElementName::Atten => {
            check_arity(call, 2)?;
            OpticalElement::Attenuate {
                mu1: number_arg(call, 0, false)?,
                mu2: number_arg(call, 1, false)?,
            }
        }
        ElementName::Rotate => {
            check_arity(call, 1)?;
            OpticalElement::Rotate {
                theta: number_arg(call, 0, true)?,
            }
        }
        ElementName::Squeeze45 => {
            check_arity(call, 1)?;
            OpticalElement::Squeeze45 {
                lambda: number_arg(call, 0, false)?,
            }
        }
        ElementName::Polarizer => {
            check_arity(call, 1)?;
            let (arg, pos) = &call.args[0];
            let axis = match arg {
                RawArg::Ident(s) if s == "x" => Axis::X,
                RawArg::Ident(s) if s == "y" => Axis::Y,
                _ => {
                    return Err(pos.error(DslErrorCode::BadArgument, "polarizer axis must be `x` or `y`"));
                }
            };
            OpticalElement::Polarizer(axis)
        }
    };
    let _ = call.close_pos;
    Ok(ElementNode { name, element })
}

pub fn parse_pipeline(text: &str) -> Result<PipelineAst, DslError> {
    let mut p = Parser {
        toks: Lexer::new(text).tokenize()?,
        at: 0,
    };
    let mut nodes = Vec::new();
    if p.peek().0 == Tok::End {
        return Ok(PipelineAst { nodes });
    }
    loop {
        let call = p.call()?;
        nodes.push(resolve(&call)?);
        let (tok, pos) = p.advance();
        match tok {
            Tok::Pipe => continue,
            Tok::End => return Ok(PipelineAst { nodes }),
            other => {
                return Err(pos.error(DslErrorCode::Syntax, format!("expected `|` or end of input, found {other}")));
            }
        }
    }
}

/// Parses a generator word such as `R(90deg) B(0.5) * Z(1)`.
pub fn parse_word(text: &str) -> Result<GeneratorWord, DslError> {
    let mut p = Parser {
        toks: Lexer::new(text).tokenize()?,
        at: 0,
    };
    let mut gens = Vec::new();
    loop {
        match p.peek().0 {
            Tok::End => break,
            Tok::Star if !gens.is_empty() => {
                p.advance();
                continue;
            }
            _ => {}
        }
        let call = p.call()?;
        let mut chars = call.name.chars();
        let symbol = match (chars.next(), chars.next()) {
            (Some(c), None) => c,
            _ => '?',
        };
        let angle = matches!(symbol.to_ascii_uppercase(), 'Z' | 'R');
        let generator = Generator::from_symbol(symbol, 0.0).ok_or_else(|| {
            call.name_pos.error(
                DslErrorCode::UnknownElement,
                format!("unknown generator `{}` (expected Z, R, B, S or T)", call.name),
            )
        })?;
        check_arity(&call, 1)?;
        let value = number_arg(&call, 0, angle)?;
        gens.push(Generator::from_symbol(generator.symbol(), value).expect("symbol already validated"));
    }
    Ok(GeneratorWord(gens))
}

/// Parses an angle such as `1.2`, `-0.5` or `60deg` into radians.
pub fn parse_angle(text: &str) -> Result<f64, DslError> {
    let toks = Lexer::new(text).tokenize()?;
    match toks.as_slice() {
        [(Tok::Number { value, degrees }, _), (Tok::End, _)] => {
            Ok(if *degrees { value.to_radians() } else { *value })
        }
        [(tok, pos), ..] => Err(pos.error(DslErrorCode::Syntax, format!("expected an angle, found {tok}"))),
        [] => unreachable!("tokenize always ends with End"),
    }
}
