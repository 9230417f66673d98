use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact_math::{FieldElem, Integer, MPoly, MathError, Rational, RationalFunction};
use crate::summation::{split_last, Factor, HyperTerm, LinearForm, ProductForm};

/// Largest literal exponent accepted.
const MAX_EXPONENT: i64 = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    Binomial,
    Factorial,
    Catalan,
}

impl Builtin {
    fn from_name(name: &str) -> Option<Self> {
        match name {
            "binomial" => Some(Builtin::Binomial),
            "factorial" => Some(Builtin::Factorial),
            "catalan" => Some(Builtin::Catalan),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Binomial => "binomial",
            Builtin::Factorial => "factorial",
            Builtin::Catalan => "catalan",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Builtin::Binomial => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Int(Integer),
    Sym(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Call(Builtin, Vec<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at column {col}: expected {expected}, found {found}")]
    Syntax { col: usize, expected: String, found: String },
    #[error("unknown symbol `{name}` at column {col}")]
    UnknownSymbol { col: usize, name: String },
    #[error("{builtin} takes {expected} argument(s) but {found} were given at column {col}")]
    Arity { col: usize, builtin: &'static str, expected: usize, found: usize },
    #[error("argument `{argument}` of {builtin} at column {col} is not integer-linear in the declared symbols")]
    Linearity { col: usize, builtin: &'static str, argument: String },
    #[error("at column {col}: {msg}")]
    Unsupported { col: usize, msg: String },
}

impl ParseError {
    pub fn column(&self) -> usize {
        match self {
            ParseError::Syntax { col, .. }
            | ParseError::UnknownSymbol { col, .. }
            | ParseError::Arity { col, .. }
            | ParseError::Linearity { col, .. }
            | ParseError::Unsupported { col, .. } => *col,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(Integer),
    Ident(String),
    Op(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "integer {n}"),
            Tok::Ident(s) => write!(f, "symbol `{s}`"),
            Tok::Op(c) => write!(f, "'{c}'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

/// Tokens with 1-based columns; `**` is read as `^`.
fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().expect("ascii digits")), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if c == '*' && chars.get(i + 1) == Some(&'*') {
            out.push((Tok::Op('^'), col));
            i += 2;
        } else if "+-*/^(),".contains(c) {
            out.push((Tok::Op(c), col));
            i += 1;
        } else {
            return Err(ParseError::Syntax { col, expected: "an expression".into(), found: format!("'{c}'") });
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    /// Declared symbols; `None` parses syntax only.
    symbols: Option<&'a [String]>,
}

const OPERAND: &str = "one of: integer, symbol, '(', '-'";

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn next(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if t.0 != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if *self.peek() == Tok::Op(c) {
            self.next();
            Ok(())
        } else {
            Err(ParseError::Syntax { col: self.col(), expected: format!("'{c}'"), found: self.peek().to_string() })
        }
    }

    fn checked(&self) -> bool {
        self.symbols.is_some()
    }

    fn add(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.mul()?;
        while let Tok::Op(op @ ('+' | '-')) = *self.peek() {
            let col = self.col();
            self.next();
            let rhs = self.mul()?;
            if self.checked() {
                for side in [&lhs, &rhs] {
                    if as_poly(side, self.symbols.unwrap()).is_none() {
                        return Err(ParseError::Unsupported {
                            col,
                            msg: format!("operands of '{op}' must be polynomials in the declared symbols"),
                        });
                    }
                }
            }
            lhs = if op == '+' { Expr::Add(lhs.into(), rhs.into()) } else { Expr::Sub(lhs.into(), rhs.into()) };
        }
        Ok(lhs)
    }

    fn mul(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while let Tok::Op(op @ ('*' | '/')) = *self.peek() {
            self.next();
            let rhs = self.unary()?;
            lhs = if op == '*' { Expr::Mul(lhs.into(), rhs.into()) } else { Expr::Div(lhs.into(), rhs.into()) };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Op('-') {
            self.next();
            return Ok(Expr::Neg(self.unary()?.into()));
        }
        self.pow()
    }

    fn pow(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Op('^') {
            return Ok(base);
        }
        let col = self.col();
        self.next();
        let exp_col = self.col();
        let exponent = self.unary()?;
        if let Some(symbols) = self.symbols {
            match int_literal(&exponent) {
                Some(e) => {
                    if e.abs() > MAX_EXPONENT {
                        return Err(ParseError::Unsupported {
                            col: exp_col,
                            msg: format!("exponent {e} is too large (limit {MAX_EXPONENT})"),
                        });
                    }
                }
                None => {
                    if constant_value(&base, symbols).is_none() {
                        return Err(ParseError::Unsupported {
                            col,
                            msg: "a symbolic exponent needs a constant base, as in (-1)^k".into(),
                        });
                    }
                    if linear_form(&exponent, symbols).is_none() {
                        return Err(ParseError::Unsupported {
                            col: exp_col,
                            msg: format!("exponent `{exponent}` is not integer-linear in the declared symbols"),
                        });
                    }
                }
            }
        }
        Ok(Expr::Pow(base.into(), exponent.into()))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (tok, col) = self.next();
        match tok {
            Tok::Int(n) => Ok(Expr::Int(n)),
            Tok::Op('(') => {
                let e = self.add()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) => {
                if *self.peek() == Tok::Op('(') {
                    return self.call(name, col);
                }
                if let Some(symbols) = self.symbols {
                    if !symbols.contains(&name) {
                        return Err(ParseError::UnknownSymbol { col, name });
                    }
                }
                Ok(Expr::Sym(name))
            }
            other => Err(ParseError::Syntax { col, expected: OPERAND.into(), found: other.to_string() }),
        }
    }

    fn call(&mut self, name: String, col: usize) -> Result<Expr, ParseError> {
        let builtin = Builtin::from_name(&name).ok_or_else(|| ParseError::Unsupported {
            col,
            msg: format!("unknown function `{name}` (known: binomial, factorial, catalan)"),
        })?;
        self.expect('(')?;
        let mut args = Vec::new();
        loop {
            let arg_col = self.col();
            let arg = self.add()?;
            if let Some(symbols) = self.symbols {
                if linear_form(&arg, symbols).is_none() {
                    return Err(ParseError::Linearity { col: arg_col, builtin: builtin.name(), argument: arg.to_string() });
                }
            }
            args.push(arg);
            match self.peek() {
                Tok::Op(',') => {
                    self.next();
                }
                Tok::Op(')') => {
                    self.next();
                    break;
                }
                other => {
                    return Err(ParseError::Syntax {
                        col: self.col(),
                        expected: "',' or ')'".into(),
                        found: other.to_string(),
                    })
                }
            }
        }
        if args.len() != builtin.arity() {
            return Err(ParseError::Arity { col, builtin: builtin.name(), expected: builtin.arity(), found: args.len() });
        }
        Ok(Expr::Call(builtin, args))
    }
}

fn parse_with(src: &str, symbols: Option<&[String]>) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(src)?, pos: 0, symbols };
    let e = p.add()?;
    if *p.peek() != Tok::End {
        return Err(ParseError::Syntax {
            col: p.col(),
            expected: "an operator or end of input".into(),
            found: p.peek().to_string(),
        });
    }
    Ok(e)
}

impl Expr {
    /// Syntax only: any identifier is a symbol and no restrictions apply.
    pub fn parse(src: &str) -> Result<Expr, ParseError> {
        parse_with(src, None)
    }

    /// As a rational function in `symbols`; builtins and symbolic
    /// exponents are rejected.
    pub fn to_field_elem(&self, symbols: &[String]) -> Result<FieldElem, MathError> {
        let n = symbols.len();
        let rec = |e: &Expr| e.to_field_elem(symbols);
        Ok(match self {
            Expr::Int(v) => FieldElem::from_rational(n, Rational::from_integer(v.clone())),
            Expr::Sym(s) => {
                let v = symbols
                    .iter()
                    .position(|x| x == s)
                    .ok_or_else(|| MathError::Usage(format!("unknown symbol `{s}`")))?;
                FieldElem::from_poly(MPoly::var(n, v))
            }
            Expr::Neg(a) => rec(a)?.neg(),
            Expr::Add(a, b) => rec(a)?.add(&rec(b)?),
            Expr::Sub(a, b) => rec(a)?.sub(&rec(b)?),
            Expr::Mul(a, b) => rec(a)?.mul(&rec(b)?),
            Expr::Div(a, b) => {
                let d = rec(b)?;
                if d.is_zero() {
                    return Err(MathError::Domain("division by zero".into()));
                }
                rec(a)?.div(&d)
            }
            Expr::Pow(a, x) => {
                let e = int_literal(x)
                    .filter(|e| e.abs() <= MAX_EXPONENT)
                    .ok_or_else(|| MathError::Usage("exponent must be a small integer literal".into()))?;
                let base = rec(a)?;
                if e < 0 && base.is_zero() {
                    return Err(MathError::Domain("negative power of zero".into()));
                }
                base.pow(e)
            }
            Expr::Call(b, _) => return Err(MathError::Usage(format!("{} is not a rational function", b.name()))),
        })
    }

    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Int(n) if n.is_negative() => 3,
            Expr::Pow(..) => 4,
            Expr::Int(_) | Expr::Sym(_) | Expr::Call(..) => 5,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let paren = self.prec() < min;
        if paren {
            write!(f, "(")?;
        }
        match self {
            Expr::Int(n) => write!(f, "{n}")?,
            Expr::Sym(s) => write!(f, "{s}")?,
            Expr::Neg(a) => {
                write!(f, "-")?;
                a.write(f, 3)?;
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write(f, 1)?;
                write!(f, "{}", if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                b.write(f, 2)?;
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.write(f, 2)?;
                write!(f, "{}", if matches!(self, Expr::Mul(..)) { "*" } else { "/" })?;
                b.write(f, 3)?;
            }
            Expr::Pow(a, b) => {
                a.write(f, 5)?;
                write!(f, "^")?;
                b.write(f, 3)?;
            }
            Expr::Call(b, args) => {
                write!(f, "{}(", b.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    a.write(f, 1)?;
                }
                write!(f, ")")?;
            }
        }
        if paren {
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Serialized with the fewest parentheses that parse back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

/// `n` or `-n` for an integer literal `n`.
fn int_literal(e: &Expr) -> Option<i64> {
    match e {
        Expr::Int(n) => n.to_i64(),
        Expr::Neg(a) => match a.as_ref() {
            Expr::Int(n) => n.to_i64().map(|v| -v),
            _ => None,
        },
        _ => None,
    }
}

/// Polynomial value over `symbols`, or `None` if the expression leaves the
/// polynomial subset (builtins, symbolic exponents, division by
/// non-constants, unknown symbols).
fn as_poly(e: &Expr, symbols: &[String]) -> Option<MPoly> {
    let n = symbols.len();
    Some(match e {
        Expr::Int(v) => MPoly::from_integer(n, v.clone()),
        Expr::Sym(s) => MPoly::var(n, symbols.iter().position(|x| x == s)?),
        Expr::Neg(a) => as_poly(a, symbols)?.neg(),
        Expr::Add(a, b) => as_poly(a, symbols)?.add(&as_poly(b, symbols)?),
        Expr::Sub(a, b) => as_poly(a, symbols)?.sub(&as_poly(b, symbols)?),
        Expr::Mul(a, b) => as_poly(a, symbols)?.mul(&as_poly(b, symbols)?),
        Expr::Div(a, b) => {
            let d = as_poly(b, symbols)?.as_constant()?;
            if d.is_zero() {
                return None;
            }
            as_poly(a, symbols)?.scale(&d.recip())
        }
        Expr::Pow(a, x) => {
            let e = int_literal(x)?;
            if e.abs() > MAX_EXPONENT {
                return None;
            }
            let base = as_poly(a, symbols)?;
            if e >= 0 {
                base.pow(e as u32)
            } else {
                let c = base.as_constant()?;
                if c.is_zero() {
                    return None;
                }
                MPoly::constant(n, crate::exact_math::mpoly::rational_pow(&c.recip(), e.unsigned_abs() as u32))
            }
        }
        Expr::Call(..) => return None,
    })
}

fn constant_value(e: &Expr, symbols: &[String]) -> Option<Rational> {
    as_poly(e, symbols)?.as_constant()
}

/// Integer-linear form over `symbols`.
fn linear_form(e: &Expr, symbols: &[String]) -> Option<LinearForm> {
    let p = as_poly(e, symbols)?;
    if p.total_degree().unwrap_or(0) > 1 {
        return None;
    }
    let n = symbols.len();
    let mut coeffs = vec![Integer::zero(); n];
    let mut constant = Integer::zero();
    for (exps, c) in p.terms() {
        if !c.is_integer() {
            return None;
        }
        match exps.iter().position(|&d| d == 1) {
            Some(v) => coeffs[v] = c.to_integer(),
            None => constant = c.to_integer(),
        }
    }
    Some(LinearForm::new(coeffs, constant))
}

fn lower(e: &Expr, symbols: &[String]) -> Result<ProductForm, MathError> {
    let unit = || ProductForm::new(symbols);
    if let Some(p) = as_poly(e, symbols) {
        return Ok(match p.as_constant() {
            Some(c) => unit().scaled(&c),
            None => unit().times(Factor::Poly(p), 1),
        });
    }
    let linear = |a: &Expr| {
        linear_form(a, symbols).ok_or_else(|| MathError::Usage(format!("`{a}` is not integer-linear")))
    };
    Ok(match e {
        Expr::Neg(a) => lower(a, symbols)?.scaled(&-Rational::one()),
        Expr::Mul(a, b) => lower(a, symbols)?.mul(&lower(b, symbols)?),
        Expr::Div(a, b) => lower(a, symbols)?.mul(&lower(b, symbols)?.pow(-1)?),
        Expr::Pow(a, x) => match int_literal(x) {
            Some(k) => lower(a, symbols)?.pow(k)?,
            None => {
                let base = constant_value(a, symbols)
                    .ok_or_else(|| MathError::Usage("a symbolic exponent needs a constant base".into()))?;
                unit().times(Factor::Power { base, exponent: linear(x)? }, 1)
            }
        },
        Expr::Call(b, args) => {
            let factor = match b {
                Builtin::Binomial => Factor::Binomial(linear(&args[0])?, linear(&args[1])?),
                Builtin::Factorial => Factor::Factorial(linear(&args[0])?),
                Builtin::Catalan => Factor::Catalan(linear(&args[0])?),
            };
            unit().times(factor, 1)
        }
        _ => return Err(MathError::Usage(format!("`{e}` is not a product of hypergeometric factors"))),
    })
}

/// A parsed summand together with its summation variable and parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermExpression {
    expr: Expr,
    variable: String,
    parameters: Vec<String>,
}

impl TermExpression {
    pub fn expr(&self) -> &Expr {
        &self.expr
    }

    pub fn variable(&self) -> &str {
        &self.variable
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    /// Parameters followed by the variable.
    pub fn symbols(&self) -> Vec<String> {
        let mut s = self.parameters.clone();
        s.push(self.variable.clone());
        s
    }

    /// Product form over [`Self::symbols`], used for direct evaluation.
    pub fn product_form(&self) -> Result<ProductForm, MathError> {
        lower(&self.expr, &self.symbols())
    }

    /// `t(x+1)/t(x)` for any declared symbol `x`, over the field of the
    /// remaining symbols.
    pub fn ratio_of(&self, variable: &str) -> Result<RationalFunction, MathError> {
        let symbols = self.symbols();
        let v = symbols
            .iter()
            .position(|s| s == variable)
            .ok_or_else(|| MathError::Usage(format!("`{variable}` is not a declared symbol")))?;
        let mut others = symbols.clone();
        others.remove(v);
        let field = crate::exact_math::CoefficientField::new(&others)?;
        let form = self.product_form()?;
        if v + 1 == symbols.len() {
            return Ok(HyperTerm::from_product(&form, variable, &others)?.ratio().clone());
        }
        let mut reordered = others.clone();
        reordered.push(variable.to_string());
        let form = form.with_symbols(&reordered)?;
        Ok(split_last(&form.shift_ratio(reordered.len() - 1)?, variable, &field))
    }

    /// The summand as a hypergeometric term in its variable.
    pub fn hyper_term(&self) -> Result<HyperTerm, MathError> {
        HyperTerm::from_product(&self.product_form()?, &self.variable, &self.parameters)
    }
}

impl fmt::Display for TermExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expr)
    }
}

/// Parse a summand in `variable` with the given parameters. Builtin
/// arguments must be integer-linear in the declared symbols.
pub fn parse_term(src: &str, variable: &str, parameters: &[String]) -> Result<TermExpression, ParseError> {
    let mut symbols = parameters.to_vec();
    symbols.push(variable.to_string());
    for (i, s) in symbols.iter().enumerate() {
        if symbols[..i].contains(s) || Builtin::from_name(s).is_some() || !is_identifier(s) {
            return Err(ParseError::Unsupported { col: 0, msg: format!("`{s}` cannot be declared as a symbol") });
        }
    }
    let expr = parse_with(src, Some(&symbols))?;
    Ok(TermExpression { expr, variable: variable.to_string(), parameters: parameters.to_vec() })
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_alphabetic() || c == '_') && chars.all(|c| c.is_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(p: &[&str]) -> Vec<String> {
        p.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_alternating_catalan_summand() {
        let src = "(-1)^i * binomial(2*i,i)/(i+1) * binomial(i+1, s-i)";
        let t = parse_term(src, "i", &params(&["s"])).unwrap();
        assert_eq!(t.to_string(), "(-1)^i*binomial(2*i, i)/(i + 1)*binomial(i + 1, s - i)");
    }

    #[test]
    fn rejects_quadratic_argument() {
        let err = parse_term("binomial(i^2, i)", "i", &[]).unwrap_err();
        match err {
            ParseError::Linearity { col, builtin, argument } => {
                assert_eq!((col, builtin, argument.as_str()), (10, "binomial", "i^2"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn constant_term() {
        let t = parse_term("1", "k", &[]).unwrap();
        assert_eq!(t.expr(), &Expr::Int(1.into()));
        assert!(t.ratio_of("k").unwrap().is_one());
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_term("binomial(k,", "k", &[]).unwrap_err();
        assert_eq!(err.column(), 12);
        assert!(matches!(parse_term("k + x", "k", &[]), Err(ParseError::UnknownSymbol { col: 5, .. })));
        assert!(matches!(parse_term("binomial(k)", "k", &[]), Err(ParseError::Arity { found: 1, .. })));
        assert!(matches!(parse_term("k^k", "k", &[]), Err(ParseError::Unsupported { .. })));
        assert!(matches!(parse_term("factorial(k) + 1", "k", &[]), Err(ParseError::Unsupported { .. })));
    }

    #[test]
    fn simple_ratios() {
        let r = |src: &str| parse_term(src, "k", &[]).unwrap().ratio_of("k").unwrap().to_string();
        assert_eq!(r("binomial(2*k,k)/(k+1)"), "(4*k + 2)/(k + 2)");
        assert_eq!(r("(-1)^k"), "-1");
        assert_eq!(r("factorial(k)"), "k + 1");
        assert_eq!(r("2**k * k"), "(2*k + 2)/(k)");
    }

    #[test]
    fn ratio_in_a_parameter() {
        let t = parse_term("binomial(n, k)", "k", &params(&["n"])).unwrap();
        // binomial(n+1, k) / binomial(n, k) = (n+1)/(n+1-k)
        let r = t.ratio_of("n").unwrap();
        assert_eq!(r.var(), "n");
        assert_eq!(r.field().params(), ["k"]);
        assert_eq!(r.to_string(), "(n + 1)/(n + (-k + 1))");
    }

    #[test]
    fn minimal_parentheses() {
        for src in ["-k^2", "(-k)^2", "a - (b - c)", "a/(b*c)", "a*-b", "2^-1", "--k", "a^b^c"] {
            let e = Expr::parse(src).unwrap();
            assert_eq!(e.to_string().replace(' ', ""), src.replace(' ', ""), "{src}");
        }
    }
}
