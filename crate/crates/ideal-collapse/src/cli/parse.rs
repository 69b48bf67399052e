//! Recursive-descent parser for the system file format:
//!
//! ```text
//! field F5          # or Q, or F2^2
//! vars x y
//! f1 = x^2 + 2*y - 1
//! ```
//!
//! One expression grammar serves generators and witness polynomials:
//! expr := ["-"] term (("+"|"-") term)* ; term := factor ("*" factor)* ;
//! factor := coeff | IDENT ("^" INT)? | "(" expr ")" ;
//! coeff := INT | INT "/" INT (Q only). No implicit multiplication.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::fields::{FieldDescriptor, FieldElement};
use crate::locus::IdealSystem;
use crate::polys::{MultiPoly, UniPoly};

/// A parsed system plus the bookkeeping the CLI needs for diagnostics.
#[derive(Clone, Debug)]
pub struct SystemDocument {
    pub system: IdealSystem,
    pub generator_names: Vec<String>,
    /// (line, column) of each generator's defining expression.
    pub generator_locations: Vec<(usize, usize)>,
}

impl SystemDocument {
    pub fn generator_named(&self, name: &str) -> Result<&MultiPoly> {
        self.generator_names
            .iter()
            .position(|n| n == name)
            .map(|i| &self.system.generators[i])
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }
}

/// Field specification text: `Q`, `F<p>`, or `F<p>^<k>`.
pub fn parse_field_spec(spec: &str) -> Result<FieldDescriptor> {
    let bad = || Error::Syntax {
        line: 1,
        col: 1,
        expected: "field specification `Q`, `F<p>`, or `F<p>^<k>`".to_string(),
    };
    let spec = spec.trim();
    if spec == "Q" {
        return Ok(FieldDescriptor::rationals());
    }
    let rest = spec.strip_prefix('F').ok_or_else(bad)?;
    match rest.split_once('^') {
        None => {
            let p: u64 = rest.parse().map_err(|_| bad())?;
            FieldDescriptor::prime(p)
        }
        Some((p, k)) => {
            let p: u64 = p.parse().map_err(|_| bad())?;
            let k: usize = k.parse().map_err(|_| bad())?;
            FieldDescriptor::extension(p, k, None)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Eq,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    col: usize,
}

fn lex(line: &str, line_no: usize) -> Result<Vec<Spanned>> {
    let mut out = vec![];
    let chars: Vec<char> = line.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' => {
                i += 1;
            }
            '#' => break,
            '+' => {
                out.push(Spanned { tok: Tok::Plus, col });
                i += 1;
            }
            '-' => {
                out.push(Spanned { tok: Tok::Minus, col });
                i += 1;
            }
            '*' => {
                out.push(Spanned { tok: Tok::Star, col });
                i += 1;
            }
            '^' => {
                out.push(Spanned { tok: Tok::Caret, col });
                i += 1;
            }
            '/' => {
                out.push(Spanned { tok: Tok::Slash, col });
                i += 1;
            }
            '=' => {
                out.push(Spanned { tok: Tok::Eq, col });
                i += 1;
            }
            '(' => {
                out.push(Spanned { tok: Tok::LParen, col });
                i += 1;
            }
            ')' => {
                out.push(Spanned { tok: Tok::RParen, col });
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Spanned {
                    tok: Tok::Int(text.parse().unwrap()),
                    col,
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                {
                    i += 1;
                }
                out.push(Spanned {
                    tok: Tok::Ident(chars[start..i].iter().collect()),
                    col,
                });
            }
            _ => {
                return Err(Error::Syntax {
                    line: line_no,
                    col,
                    expected: format!("a token, found `{c}`"),
                })
            }
        }
    }
    Ok(out)
}

struct ExprParser<'a> {
    toks: &'a [Spanned],
    pos: usize,
    line: usize,
    field: &'a FieldDescriptor,
    var_names: &'a [String],
}

impl<'a> ExprParser<'a> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<&Spanned> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, expected: &str) -> Error {
        let col = self
            .peek()
            .map(|s| s.col)
            .unwrap_or_else(|| self.toks.last().map(|s| s.col + 1).unwrap_or(1));
        Error::Syntax {
            line: self.line,
            col,
            expected: expected.to_string(),
        }
    }

    fn nvars(&self) -> usize {
        self.var_names.len()
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let negate = matches!(self.peek().map(|s| &s.tok), Some(Tok::Minus));
        if negate {
            self.bump();
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg()?;
        }
        loop {
            match self.peek().map(|s| s.tok.clone()) {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.add(&rhs)?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.sub(&rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        while matches!(self.peek().map(|s| &s.tok), Some(Tok::Star)) {
            self.bump();
            let rhs = self.factor()?;
            acc = acc.mul(&rhs)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let spanned = match self.peek() {
            Some(s) => s.clone(),
            None => return Err(self.err("a coefficient, variable, or `(`")),
        };
        match spanned.tok {
            Tok::Int(n) => {
                self.bump();
                if matches!(self.peek().map(|s| &s.tok), Some(Tok::Slash)) {
                    let slash_col = self.peek().unwrap().col;
                    self.bump();
                    if !matches!(self.field, FieldDescriptor::Rationals) {
                        return Err(Error::FieldLiteral {
                            line: self.line,
                            col: slash_col,
                            message: format!(
                                "fraction coefficients are Q-only syntax; over {} write \
                                 inverse residues explicitly",
                                self.field
                            ),
                        });
                    }
                    let den = match self.bump().map(|s| s.tok.clone()) {
                        Some(Tok::Int(d)) => d,
                        _ => return Err(self.err("a denominator integer")),
                    };
                    use num_traits::Zero;
                    if den.is_zero() {
                        return Err(Error::FieldLiteral {
                            line: self.line,
                            col: slash_col,
                            message: "zero denominator".to_string(),
                        });
                    }
                    let c = self.field.from_ratio(&n, &den)?;
                    return Ok(self.constant(c));
                }
                let c = self.literal(&n)?;
                Ok(self.constant(c))
            }
            Tok::Ident(name) => {
                self.bump();
                let j = self
                    .var_names
                    .iter()
                    .position(|v| *v == name)
                    .ok_or(Error::UnknownVariable {
                        name: name.clone(),
                        line: self.line,
                        col: spanned.col,
                    })?;
                let mut p = MultiPoly::variable(self.field.clone(), self.nvars(), j);
                if matches!(self.peek().map(|s| &s.tok), Some(Tok::Caret)) {
                    self.bump();
                    let e = match self.bump().map(|s| s.tok.clone()) {
                        Some(Tok::Int(e)) => e,
                        _ => return Err(self.err("an exponent integer")),
                    };
                    use num_traits::ToPrimitive;
                    let e = e.to_u32().ok_or(Error::DegreeOverflow(u64::MAX))?;
                    p = p.pow(e)?;
                }
                Ok(p)
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                match self.bump().map(|s| s.tok.clone()) {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(self.err("`)`")),
                }
            }
            _ => Err(self.err("a coefficient, variable, or `(`")),
        }
    }

    fn constant(&self, c: FieldElement) -> MultiPoly {
        MultiPoly::constant(self.field.clone(), self.nvars(), c)
    }

    /// Integer literals: reduced mod p over F_p; base-p digit code over
    /// F_{p^k} (so every element has a literal and printing round-trips);
    /// exact integer over Q.
    fn literal(&self, n: &BigInt) -> Result<FieldElement> {
        match self.field {
            FieldDescriptor::Extension { p, degree, .. } => {
                use num_integer::Integer;
                use num_traits::ToPrimitive;
                let q = BigInt::from(p.pow(*degree as u32));
                let code = n.mod_floor(&q).to_u64().unwrap();
                self.field.from_code(code)
            }
            _ => Ok(self.field.from_bigint(n)),
        }
    }
}

/// Parse a single expression over the given field and variables.
pub fn parse_expr(
    text: &str,
    line_no: usize,
    field: &FieldDescriptor,
    var_names: &[String],
) -> Result<MultiPoly> {
    let toks = lex(text, line_no)?;
    let mut p = ExprParser {
        toks: &toks,
        pos: 0,
        line: line_no,
        field,
        var_names,
    };
    let poly = p.expr()?;
    if p.pos != toks.len() {
        return Err(p.err("`+`, `-`, `*`, or end of expression"));
    }
    Ok(poly)
}

/// Parse a univariate polynomial in the variable `T`, e.g. a witness.
pub fn parse_unipoly(text: &str, field: &FieldDescriptor) -> Result<UniPoly> {
    let names = vec!["T".to_string()];
    let p = parse_expr(text, 1, field, &names)?;
    let d = p.degree().max(0) as usize;
    let mut coeffs = vec![field.zero(); d + 1];
    for (m, c) in p.terms() {
        coeffs[m.0[0] as usize] = c.clone();
    }
    Ok(UniPoly::new(field.clone(), coeffs))
}

pub fn parse_document(text: &str) -> Result<SystemDocument> {
    let mut field: Option<FieldDescriptor> = None;
    let mut var_names: Vec<String> = vec![];
    let mut seen_vars = false;
    let mut generator_names = vec![];
    let mut generator_locations = vec![];
    let mut generators = vec![];

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let toks = lex(raw, line_no)?;
        if toks.is_empty() {
            continue;
        }
        let err_at = |col: usize, expected: &str| Error::Syntax {
            line: line_no,
            col,
            expected: expected.to_string(),
        };
        if field.is_none() {
            match &toks[0].tok {
                Tok::Ident(w) if w == "field" => {}
                _ => return Err(err_at(toks[0].col, "`field`")),
            }
            // re-lex the remainder as the raw spec text to allow F2^2
            let spec_text = raw.split('#').next().unwrap().trim_start();
            let spec_text = spec_text
                .strip_prefix("field")
                .unwrap_or(spec_text)
                .trim();
            if spec_text.is_empty() {
                return Err(err_at(toks[0].col + 5, "a field specification"));
            }
            let k = parse_field_spec(spec_text).map_err(|e| match e {
                Error::Syntax { .. } => err_at(
                    toks.get(1).map(|t| t.col).unwrap_or(toks[0].col + 6),
                    "field specification `Q`, `F<p>`, or `F<p>^<k>`",
                ),
                other => other,
            })?;
            field = Some(k);
            continue;
        }
        if !seen_vars {
            match &toks[0].tok {
                Tok::Ident(w) if w == "vars" => {}
                _ => return Err(err_at(toks[0].col, "`vars`")),
            }
            if toks.len() == 1 {
                return Err(err_at(toks[0].col + 4, "at least one variable name"));
            }
            for t in &toks[1..] {
                match &t.tok {
                    Tok::Ident(name) => {
                        if var_names.contains(name) {
                            return Err(Error::DuplicateVariableName(name.clone()));
                        }
                        var_names.push(name.clone());
                    }
                    _ => return Err(err_at(t.col, "a variable name")),
                }
            }
            seen_vars = true;
            continue;
        }
        // generator line: IDENT "=" expr
        let name = match &toks[0].tok {
            Tok::Ident(n) => n.clone(),
            _ => return Err(err_at(toks[0].col, "a generator name")),
        };
        if generator_names.contains(&name) {
            return Err(Error::DuplicateGeneratorName(name));
        }
        match toks.get(1).map(|t| &t.tok) {
            Some(Tok::Eq) => {}
            _ => {
                return Err(err_at(
                    toks.get(1).map(|t| t.col).unwrap_or(toks[0].col + 1),
                    "`=`",
                ))
            }
        }
        let expr_toks = &toks[2..];
        if expr_toks.is_empty() {
            return Err(err_at(toks[1].col + 1, "an expression"));
        }
        let mut p = ExprParser {
            toks: expr_toks,
            pos: 0,
            line: line_no,
            field: field.as_ref().unwrap(),
            var_names: &var_names,
        };
        let poly = p.expr()?;
        if p.pos != expr_toks.len() {
            return Err(p.err("`+`, `-`, `*`, or end of expression"));
        }
        generator_locations.push((line_no, expr_toks[0].col));
        generator_names.push(name);
        generators.push(poly);
    }

    let field = field.ok_or(Error::Syntax {
        line: 1,
        col: 1,
        expected: "`field` line".to_string(),
    })?;
    if !seen_vars {
        return Err(Error::Syntax {
            line: 2,
            col: 1,
            expected: "`vars` line".to_string(),
        });
    }
    let system = IdealSystem::new(field, var_names, generators)?;
    Ok(SystemDocument {
        system,
        generator_names,
        generator_locations,
    })
}

/// The spec-level entry point: text in, validated system out.
pub fn parse_system(text: &str) -> Result<IdealSystem> {
    parse_document(text).map(|d| d.system)
}
