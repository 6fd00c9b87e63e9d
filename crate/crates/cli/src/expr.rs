//! Coefficient expressions.
//!
//! Document coefficients are either plain rationals (`"3"`, `"-5/3"`) or
//! small arithmetic expressions over named parameters (`"a"`, `"-a*b"`,
//! `"b^2"`, `"1/2*a + 1"`). Parameters are substituted from `--sample`
//! bindings before any checking happens.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := ('+' | '-')* atom ('^' uint)?
//! atom   := rational | name | '(' expr ')'
//! ```

use std::collections::BTreeMap;
use std::fmt;

use yamaguti::Scalar;

/// Parameter bindings for coefficient expressions.
pub type Params = BTreeMap<String, Scalar>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprError {
    Syntax {
        input: String,
        at: usize,
        expected: &'static str,
    },
    UnknownParameter {
        name: String,
    },
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprError::Syntax {
                input,
                at,
                expected,
            } => {
                write!(
                    f,
                    "invalid coefficient {input:?}: expected {expected} at offset {at}"
                )
            }
            ExprError::UnknownParameter { name } => {
                write!(
                    f,
                    "unbound parameter {name:?}; provide it via --sample {name}=<rational>"
                )
            }
        }
    }
}

impl std::error::Error for ExprError {}

/// Evaluates a coefficient expression under the given bindings.
pub fn eval(input: &str, params: &Params) -> Result<Scalar, ExprError> {
    let tokens: Vec<char> = input.chars().collect();
    let mut parser = Parser {
        input,
        tokens,
        pos: 0,
        params,
    };
    parser.skip_ws();
    let value = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.tokens.len() {
        return Err(parser.error("end of input"));
    }
    Ok(value)
}

struct Parser<'a> {
    input: &'a str,
    tokens: Vec<char>,
    pos: usize,
    params: &'a Params,
}

impl Parser<'_> {
    fn error(&self, expected: &'static str) -> ExprError {
        ExprError::Syntax {
            input: self.input.to_owned(),
            at: self.pos,
            expected,
        }
    }

    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<Scalar, ExprError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ExprError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
                acc = &acc * &self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar, ExprError> {
        self.skip_ws();
        let mut negate = false;
        while let Some(c) = self.peek() {
            match c {
                '-' => {
                    negate = !negate;
                    self.bump();
                }
                '+' => {
                    self.bump();
                }
                _ => break,
            }
            self.skip_ws();
        }
        let mut value = self.atom()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            // Legitimate tables stay at tiny degrees; a cap keeps a stray
            // huge exponent from blowing up the arithmetic.
            let exp = self.unsigned_integer()?;
            if exp > 64 {
                return Err(self.error("an exponent of at most 64"));
            }
            value = value.pow(exp);
        }
        Ok(if negate { -value } else { value })
    }

    fn atom(&mut self) -> Result<Scalar, ExprError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                let value = self.expr()?;
                self.skip_ws();
                if self.bump() != Some(')') {
                    return Err(self.error("closing parenthesis"));
                }
                Ok(value)
            }
            Some(c) if c.is_ascii_digit() => self.rational(),
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let name = self.name();
                match self.params.get(&name) {
                    Some(v) => Ok(v.clone()),
                    None => Err(ExprError::UnknownParameter { name }),
                }
            }
            _ => Err(self.error("a rational, parameter name, or parenthesized expression")),
        }
    }

    fn rational(&mut self) -> Result<Scalar, ExprError> {
        let numer = self.unsigned_bigdigits()?;
        self.skip_ws();
        if self.peek() == Some('/') {
            self.bump();
            self.skip_ws();
            let denom = self.unsigned_bigdigits()?;
            let literal = format!("{numer}/{denom}");
            literal
                .parse()
                .map_err(|_| self.error("a nonzero denominator"))
        } else {
            numer.parse().map_err(|_| self.error("digits"))
        }
    }

    fn unsigned_bigdigits(&mut self) -> Result<String, ExprError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("digits"));
        }
        Ok(self.tokens[start..self.pos].iter().collect())
    }

    fn unsigned_integer(&mut self) -> Result<u32, ExprError> {
        let digits = self.unsigned_bigdigits()?;
        digits.parse().map_err(|_| self.error("a small exponent"))
    }

    fn name(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        self.tokens[start..self.pos].iter().collect()
    }
}

/// Parses a `--sample` binding list (`a=1,b=-2/3`).
pub fn parse_bindings(list: &str) -> Result<Params, ExprError> {
    let mut params = Params::new();
    for piece in list.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let Some((name, value)) = piece.split_once('=') else {
            return Err(ExprError::Syntax {
                input: piece.to_owned(),
                at: 0,
                expected: "a name=value binding",
            });
        };
        let value: Scalar = value.trim().parse().map_err(|_| ExprError::Syntax {
            input: piece.to_owned(),
            at: 0,
            expected: "a rational value",
        })?;
        params.insert(name.trim().to_owned(), value);
    }
    Ok(params)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn plain_rationals() {
        let p = Params::new();
        assert_eq!(eval("3", &p).unwrap(), s(3));
        assert_eq!(eval("-5/3", &p).unwrap(), Scalar::new(-5, 3).unwrap());
        assert_eq!(eval(" 4/6 ", &p).unwrap(), Scalar::new(2, 3).unwrap());
    }

    #[test]
    fn parameters_and_products() {
        let p = parse_bindings("a=2, b=3").unwrap();
        assert_eq!(eval("a", &p).unwrap(), s(2));
        assert_eq!(eval("-a*b", &p).unwrap(), s(-6));
        assert_eq!(eval("b^2", &p).unwrap(), s(9));
        assert_eq!(eval("-a^2", &p).unwrap(), s(-4));
        assert_eq!(eval("1/2*a", &p).unwrap(), s(1));
        assert_eq!(eval("a + b - 1", &p).unwrap(), s(4));
        assert_eq!(eval("(a+b)^2", &p).unwrap(), s(25));
    }

    #[test]
    fn unbound_parameters_are_reported() {
        let p = Params::new();
        assert!(matches!(
            eval("a", &p),
            Err(ExprError::UnknownParameter { .. })
        ));
    }

    #[test]
    fn malformed_expressions_are_rejected() {
        let p = parse_bindings("a=1").unwrap();
        for bad in ["", "1+", "a b", "2^", "(a", "1/0", "2^4294967295", "2^65"] {
            assert!(eval(bad, &p).is_err(), "should reject {bad:?}");
        }
        assert_eq!(
            eval("2^64", &p).unwrap(),
            "18446744073709551616".parse().unwrap()
        );
        assert!(parse_bindings("a").is_err());
        assert!(parse_bindings("a=x").is_err());
    }

    #[test]
    fn binding_lists() {
        let p = parse_bindings("a=1,b=-2/3").unwrap();
        assert_eq!(p["a"], s(1));
        assert_eq!(p["b"], Scalar::new(-2, 3).unwrap());
    }
}
