//! Expression parser for scalars and for elements of either algebra.
//!
//! Grammar (whitespace-insensitive):
//!   expr   := term (('+' | '-') term)*
//!   term   := factor (('*' | '/')? factor)*      juxtaposition multiplies
//!   factor := '-' factor | atom ('^' exponent)?
//!   atom   := ident | integer | '(' expr ')'
//!   exponent := ['-'] integer | '(' ['-'] integer ('/' 2)? ')'
//!
//! Identifiers: `i`, `t`, `q`, `phiN` are scalars in every context;
//! `e`, `f`, `k` are the enveloping generators; `a`, `b`, `c`, `d`,
//! `sigma` the matrix ones.  Half-integer exponents are only valid on
//! scalar subexpressions, and division only by scalar-valued ones.
//! Errors carry the byte offset of the offending token.

use crate::algebra::a::{gen_a, gen_b, gen_c, gen_d, gen_sigma};
use crate::algebra::u::{gen_e, gen_f, gen_k};
use crate::algebra::{AElement, UElement};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Algebra {
    Enveloping,
    Matrix,
}

#[derive(Clone, PartialEq, Debug)]
enum Tok {
    Ident(String),
    Int(i64),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eof,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            b'-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            b'*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            b'/' => {
                toks.push((Tok::Slash, i));
                i += 1;
            }
            b'^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            b'(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            b')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &input[start..i];
                let n: i64 = text
                    .parse()
                    .map_err(|_| err(start, format!("integer literal too large: {}", text)))?;
                toks.push((Tok::Int(n), start));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(input[start..i].to_string()), start));
            }
            _ => {
                return Err(err(
                    i,
                    format!("unexpected character {:?}", input[i..].chars().next().unwrap()),
                ));
            }
        }
    }
    toks.push((Tok::Eof, input.len()));
    Ok(toks)
}

impl Lexer {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_pos(&self) -> usize {
        self.toks[self.pos].1
    }

    fn next(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<usize> {
        let (t, p) = self.next();
        if t == tok {
            Ok(p)
        } else {
            Err(err(p, format!("expected {}, found {:?}", what, t)))
        }
    }
}

/// A value mid-evaluation: scalar until a generator forces an algebra.
#[derive(Clone)]
enum Val {
    S(Scalar),
    U(UElement),
    A(AElement),
}

impl Val {
    fn promote_u(self) -> UElement {
        match self {
            Val::S(s) => UElement::one().scale(&s),
            Val::U(x) => x,
            Val::A(_) => unreachable!(),
        }
    }

    fn promote_a(self) -> AElement {
        match self {
            Val::S(s) => AElement::one().scale(&s),
            Val::A(x) => x,
            Val::U(_) => unreachable!(),
        }
    }
}

struct Parser {
    lx: Lexer,
    algebra: Option<Algebra>,
}

impl Parser {
    fn mul(&self, x: Val, y: Val, pos: usize) -> Result<Val> {
        Ok(match (x, y) {
            (Val::S(a), Val::S(b)) => Val::S(a.mul(&b)),
            (Val::S(a), Val::U(b)) => Val::U(b.scale(&a)),
            (Val::U(a), Val::S(b)) => Val::U(a.scale(&b)),
            (Val::U(a), Val::U(b)) => Val::U(a.mul(&b)),
            (Val::S(a), Val::A(b)) => Val::A(b.scale(&a)),
            (Val::A(a), Val::S(b)) => Val::A(a.scale(&b)),
            (Val::A(a), Val::A(b)) => Val::A(a.mul(&b)),
            _ => return Err(err(pos, "cannot mix generators of the two algebras")),
        })
    }

    fn add(&self, x: Val, y: Val, pos: usize, sub: bool) -> Result<Val> {
        let combine_s = |a: Scalar, b: Scalar| if sub { a.sub(&b) } else { a.add(&b) };
        Ok(match (x, y) {
            (Val::S(a), Val::S(b)) => Val::S(combine_s(a, b)),
            (Val::A(_), Val::U(_)) | (Val::U(_), Val::A(_)) => {
                return Err(err(pos, "cannot mix generators of the two algebras"))
            }
            (x @ (Val::U(_) | Val::S(_)), y @ (Val::U(_) | Val::S(_))) => {
                let a = x.promote_u();
                let b = y.promote_u();
                Val::U(if sub { a.sub(&b) } else { a.add(&b) })
            }
            (x, y) => {
                let a = x.promote_a();
                let b = y.promote_a();
                Val::A(if sub { a.sub(&b) } else { a.add(&b) })
            }
        })
    }

    fn invert(&self, v: Val, pos: usize) -> Result<Val> {
        match v {
            Val::S(s) => {
                let inv = s
                    .inv()
                    .map_err(|_| err(pos, "division by zero"))?;
                Ok(Val::S(inv))
            }
            Val::U(x) => {
                if x.num_terms() != 1 {
                    return Err(Error::NotInvertible(
                        "only single monomials can be inverted".into(),
                    ));
                }
                let (m, c) = x.terms().next().unwrap();
                if m.e != 0 || m.f != 0 {
                    return Err(Error::NotInvertible(format!(
                        "monomial {} is not invertible",
                        m
                    )));
                }
                let ci = c.inv().map_err(|_| err(pos, "division by zero"))?;
                Ok(Val::U(UElement::from_mono_scaled(
                    crate::algebra::u::UMono::new(0, 0, -m.k),
                    ci,
                )))
            }
            Val::A(x) => {
                if x.num_terms() != 1 {
                    return Err(Error::NotInvertible(
                        "only single monomials can be inverted".into(),
                    ));
                }
                let (m, c) = x.terms().next().unwrap();
                if m.a != 0 || m.b != 0 || m.c != 0 || m.d != 0 {
                    return Err(Error::NotInvertible(format!(
                        "monomial {} is not invertible",
                        m
                    )));
                }
                let ci = c.inv().map_err(|_| err(pos, "division by zero"))?;
                Ok(Val::A(AElement::from_mono_scaled(
                    crate::algebra::a::AMono::new(0, 0, 0, 0, m.s),
                    ci,
                )))
            }
        }
    }

    fn pow(&self, v: Val, num: i64, den: i64, pos: usize) -> Result<Val> {
        if den == 2 {
            let s = match v {
                Val::S(s) => s,
                _ => {
                    return Err(err(
                        pos,
                        "half-integer exponents are only defined for scalars",
                    ))
                }
            };
            let root = s.sqrt().map_err(|e| match e {
                Error::SqrtNotRepresentable(m) => Error::SqrtNotRepresentable(m),
                _ => err(pos, "square root not representable here"),
            })?;
            return Ok(Val::S(root.pow(num).map_err(|_| err(pos, "division by zero"))?));
        }
        match v {
            Val::S(s) => Ok(Val::S(
                s.pow(num).map_err(|_| err(pos, "division by zero"))?,
            )),
            el => {
                let (base, n) = if num < 0 {
                    (self.invert(el, pos)?, (-num) as u32)
                } else {
                    (el, num as u32)
                };
                Ok(match base {
                    Val::S(s) => Val::S(s.pow(n as i64).unwrap()),
                    Val::U(x) => Val::U(x.pow(n)),
                    Val::A(x) => Val::A(x.pow(n)),
                })
            }
        }
    }

    fn resolve_ident(&mut self, name: &str, pos: usize) -> Result<Val> {
        match name {
            "i" => return Ok(Val::S(Scalar::i())),
            "t" => return Ok(Val::S(Scalar::t_pow(1))),
            "q" => return Ok(Val::S(Scalar::q_pow(1))),
            _ => {}
        }
        if let Some(num) = name.strip_prefix("phi") {
            if let Ok(d) = num.parse::<u32>() {
                if d == 0 {
                    return Err(err(pos, "phi index must be positive"));
                }
                return Ok(Val::S(Scalar::phi(d)));
            }
        }
        let want = |have: &mut Option<Algebra>, is: Algebra, pos: usize| -> Result<()> {
            match have {
                None => {
                    *have = Some(is);
                    Ok(())
                }
                Some(a) if *a == is => Ok(()),
                Some(_) => Err(err(pos, format!("generator {} belongs to the other algebra", is_name(is)))),
            }
        };
        fn is_name(a: Algebra) -> &'static str {
            match a {
                Algebra::Enveloping => "the enveloping algebra",
                Algebra::Matrix => "the matrix algebra",
            }
        }
        match name {
            "e" => {
                want(&mut self.algebra, Algebra::Enveloping, pos)?;
                Ok(Val::U(gen_e()))
            }
            "f" => {
                want(&mut self.algebra, Algebra::Enveloping, pos)?;
                Ok(Val::U(gen_f()))
            }
            "k" => {
                want(&mut self.algebra, Algebra::Enveloping, pos)?;
                Ok(Val::U(gen_k(1)))
            }
            "a" => {
                want(&mut self.algebra, Algebra::Matrix, pos)?;
                Ok(Val::A(gen_a()))
            }
            "b" => {
                want(&mut self.algebra, Algebra::Matrix, pos)?;
                Ok(Val::A(gen_b()))
            }
            "c" => {
                want(&mut self.algebra, Algebra::Matrix, pos)?;
                Ok(Val::A(gen_c()))
            }
            "d" => {
                want(&mut self.algebra, Algebra::Matrix, pos)?;
                Ok(Val::A(gen_d()))
            }
            "sigma" => {
                want(&mut self.algebra, Algebra::Matrix, pos)?;
                Ok(Val::A(gen_sigma()))
            }
            _ => Err(err(pos, format!("unknown identifier {:?}", name))),
        }
    }

    fn parse_exponent(&mut self) -> Result<(i64, i64, usize)> {
        let start = self.lx.peek_pos();
        let parens = if *self.lx.peek() == Tok::LParen {
            self.lx.next();
            true
        } else {
            false
        };
        let neg = if *self.lx.peek() == Tok::Minus {
            self.lx.next();
            true
        } else {
            false
        };
        let (t, p) = self.lx.next();
        let n = match t {
            Tok::Int(n) => n,
            other => return Err(err(p, format!("expected integer exponent, found {:?}", other))),
        };
        let num = if neg { -n } else { n };
        let mut den = 1;
        if parens && *self.lx.peek() == Tok::Slash {
            self.lx.next();
            let (t, p) = self.lx.next();
            match t {
                Tok::Int(2) => den = 2,
                other => {
                    return Err(err(
                        p,
                        format!("exponent denominator must be 2, found {:?}", other),
                    ))
                }
            }
        }
        if parens {
            self.lx.expect(Tok::RParen, "`)` closing exponent")?;
        }
        Ok((num, den, start))
    }

    fn parse_atom(&mut self) -> Result<Val> {
        let (t, p) = self.lx.next();
        match t {
            Tok::Int(n) => Ok(Val::S(Scalar::from_int(n))),
            Tok::Ident(name) => self.resolve_ident(&name, p),
            Tok::LParen => {
                let v = self.parse_expr()?;
                self.lx.expect(Tok::RParen, "`)`")?;
                Ok(v)
            }
            other => Err(err(p, format!("expected a value, found {:?}", other))),
        }
    }

    fn parse_factor(&mut self) -> Result<Val> {
        if *self.lx.peek() == Tok::Minus {
            self.lx.next();
            let v = self.parse_factor()?;
            return Ok(match v {
                Val::S(s) => Val::S(s.neg()),
                Val::U(x) => Val::U(x.neg()),
                Val::A(x) => Val::A(x.neg()),
            });
        }
        let base = self.parse_atom()?;
        if *self.lx.peek() == Tok::Caret {
            self.lx.next();
            let (num, den, pos) = self.parse_exponent()?;
            return self.pow(base, num, den, pos);
        }
        Ok(base)
    }

    fn starts_factor(&self) -> bool {
        matches!(self.lx.peek(), Tok::Ident(_) | Tok::Int(_) | Tok::LParen)
    }

    fn parse_term(&mut self) -> Result<Val> {
        let mut acc = self.parse_factor()?;
        loop {
            let pos = self.lx.peek_pos();
            match self.lx.peek() {
                Tok::Star => {
                    self.lx.next();
                    let rhs = self.parse_factor()?;
                    acc = self.mul(acc, rhs, pos)?;
                }
                Tok::Slash => {
                    self.lx.next();
                    let rhs = self.parse_factor()?;
                    let inv = self.invert(rhs, pos)?;
                    acc = self.mul(acc, inv, pos)?;
                }
                _ if self.starts_factor() => {
                    let rhs = self.parse_factor()?;
                    acc = self.mul(acc, rhs, pos)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_expr(&mut self) -> Result<Val> {
        let mut acc = self.parse_term()?;
        loop {
            let pos = self.lx.peek_pos();
            match self.lx.peek() {
                Tok::Plus => {
                    self.lx.next();
                    let rhs = self.parse_term()?;
                    acc = self.add(acc, rhs, pos, false)?;
                }
                Tok::Minus => {
                    self.lx.next();
                    let rhs = self.parse_term()?;
                    acc = self.add(acc, rhs, pos, true)?;
                }
                _ => return Ok(acc),
            }
        }
    }
}

fn run(input: &str, context: Option<Algebra>) -> Result<Val> {
    let toks = lex(input)?;
    let mut p = Parser {
        lx: Lexer { toks, pos: 0 },
        algebra: context,
    };
    let v = p.parse_expr()?;
    let (t, pos) = p.lx.next();
    if t != Tok::Eof {
        return Err(err(pos, format!("unexpected trailing {:?}", t)));
    }
    Ok(v)
}

/// Parse an expression in the enveloping algebra's generators.
pub fn parse_u_element(input: &str) -> Result<UElement> {
    match run(input, Some(Algebra::Enveloping))? {
        Val::U(x) => Ok(x),
        Val::S(s) => Ok(UElement::one().scale(&s)),
        Val::A(_) => unreachable!(),
    }
}

/// Parse an expression in the matrix algebra's generators.
pub fn parse_a_element(input: &str) -> Result<AElement> {
    match run(input, Some(Algebra::Matrix))? {
        Val::A(x) => Ok(x),
        Val::S(s) => Ok(AElement::one().scale(&s)),
        Val::U(_) => unreachable!(),
    }
}

/// Parse a scalar-valued expression; generator names are rejected.
pub fn parse_scalar(input: &str) -> Result<Scalar> {
    let toks = lex(input)?;
    let mut p = Parser {
        lx: Lexer { toks, pos: 0 },
        algebra: None,
    };
    let start = p.lx.peek_pos();
    let v = p.parse_expr()?;
    let (t, pos) = p.lx.next();
    if t != Tok::Eof {
        return Err(err(pos, format!("unexpected trailing {:?}", t)));
    }
    match v {
        Val::S(s) => Ok(s),
        _ => Err(err(start, "expected a scalar expression, found generators")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::u::UMono;

    #[test]
    fn scalar_round_trips() {
        for src in [
            "t^(1/2)",
            "1 + t^(-1/2)",
            "i*t^2 - 3/4",
            "phi2^(1/2)*phi1^(3/2)",
            "q^(-2) + q",
            "(1+t^2)/(1-t^2)",
        ] {
            let s = parse_scalar(src).unwrap();
            let printed = format!("{}", s);
            let back = parse_scalar(&printed).unwrap();
            assert_eq!(s, back, "src={} printed={}", src, printed);
        }
    }

    #[test]
    fn scalar_identities() {
        assert_eq!(parse_scalar("q").unwrap(), Scalar::q_pow(1));
        assert_eq!(parse_scalar("-t^2").unwrap(), Scalar::q_pow(1));
        assert_eq!(parse_scalar("i^2").unwrap(), Scalar::from_int(-1));
        assert_eq!(
            parse_scalar("t^(1/2) * t^(1/2)").unwrap(),
            Scalar::t_pow(1)
        );
        // 1 - t^-2 = -phi1 with phi1 evaluated at t^-2
        assert_eq!(
            parse_scalar("1 - t^(-2)").unwrap(),
            parse_scalar("-phi1").unwrap()
        );
    }

    #[test]
    fn element_normal_forms() {
        // a d = sigma - t b c
        let x = parse_a_element("a*d + t*b*c").unwrap();
        assert_eq!(format!("{}", x), "sigma");
        // juxtaposition
        let y = parse_a_element("a d + t b c").unwrap();
        assert_eq!(x, y);
        // k^-1 in the enveloping algebra
        let z = parse_u_element("k^-1").unwrap();
        assert_eq!(z, crate::algebra::u::gen_k(-1));
        let w = parse_u_element("(k)^(-2) e").unwrap();
        assert_eq!(w.num_terms(), 1);
        let (m, _) = w.terms().next().unwrap();
        assert_eq!(*m, UMono::new(1, 0, -2));
    }

    #[test]
    fn division_rules() {
        let s = parse_scalar("1/(q - q^(-1))").unwrap();
        assert_eq!(s.mul(&parse_scalar("q - q^-1").unwrap()), Scalar::one());
        assert!(matches!(
            parse_a_element("1/b"),
            Err(Error::NotInvertible(_))
        ));
        assert!(matches!(
            parse_scalar("1/(1-1)"),
            Err(Error::Parse { .. })
        ));
        // sigma is its own inverse
        let s2 = parse_a_element("sigma^-1").unwrap();
        assert_eq!(s2, gen_sigma());
    }

    #[test]
    fn error_positions() {
        match parse_u_element("e + ?") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {:?}", other.map(|x| x.to_string())),
        }
        match parse_u_element("e + a") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {:?}", other.map(|x| x.to_string())),
        }
        match parse_scalar("t^(1/3)") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("expected parse error, got {:?}", other.map(|x| x.to_string())),
        }
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("(1+t").is_err());
    }

    use crate::algebra::a::gen_sigma;

    #[test]
    fn half_exponent_on_element_rejected() {
        assert!(parse_u_element("k^(1/2)").is_err());
    }

    #[test]
    fn mixed_scalar_element_arithmetic() {
        let x = parse_u_element("2 + e*f - q*f*e").unwrap();
        let direct = UElement::one()
            .scale(&Scalar::from_int(2))
            .add(&crate::algebra::u::gen_e().mul(&crate::algebra::u::gen_f()))
            .sub(
                &crate::algebra::u::gen_f()
                    .mul(&crate::algebra::u::gen_e())
                    .scale(&Scalar::q_pow(1)),
            );
        assert_eq!(x, direct);
    }
}
