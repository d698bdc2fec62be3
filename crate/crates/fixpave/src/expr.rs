//! Scalar expressions over named variables.
//!
//! Expressions are parsed once against a declared variable list and then
//! evaluated either at points (plain `f64` arithmetic) or over boxes
//! (natural interval extension, inheriting the outward rounding of the
//! interval layer). The grammar covers decimal constants, variables, `+ - *
//! /`, integer powers `x^n`, unary minus, and the calls `abs`, `sin`, `cos`,
//! `exp`, `min`, `max`.
//!
//! Precedence, tightest first: `^`, unary minus, `* /`, `+ -`; binary
//! operators associate left. Powers chain as `(x^2)^3` and their exponents
//! must be plain nonnegative integer literals.

use crate::interval::{Interval, IntervalError};

/// Unary operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnOp {
    Neg,
    Abs,
    Sin,
    Cos,
    Exp,
}

/// Binary operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Min,
    Max,
}

/// Expression tree; variables are indices into the owning [`Expr`]'s list.
#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    Const(f64),
    Var(usize),
    Un(UnOp, Box<Node>),
    Bin(BinOp, Box<Node>, Box<Node>),
    Pow(Box<Node>, u32),
}

/// A parsed expression bound to an ordered variable list.
#[derive(Debug, Clone, PartialEq)]
pub struct Expr {
    vars: Vec<String>,
    root: Node,
}

/// Parse-time errors; offsets are byte positions into the source text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable {name:?} at byte {offset}")]
    UnknownVariable { offset: usize, name: String },
    #[error("{name} takes {expected} argument(s), got {got} (at byte {offset})")]
    Arity {
        offset: usize,
        name: String,
        expected: usize,
        got: usize,
    },
}

/// Evaluation errors.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EvalError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by an interval containing zero")]
    DivisionByZeroInterval,
    #[error("environment has {got} value(s), expression needs {expected}")]
    MissingBinding { expected: usize, got: usize },
    #[error("evaluation left the finite range")]
    NonFinite,
}

impl From<IntervalError> for EvalError {
    fn from(e: IntervalError) -> EvalError {
        match e {
            IntervalError::DivisionByZeroInterval => EvalError::DivisionByZeroInterval,
            _ => EvalError::NonFinite,
        }
    }
}

/// Parses `text` against the declared variable list.
pub fn parse<S: AsRef<str>>(text: &str, variables: &[S]) -> Result<Expr, ParseError> {
    let vars: Vec<String> = variables.iter().map(|s| s.as_ref().to_owned()).collect();
    let mut p = Parser {
        text,
        pos: 0,
        vars: &vars,
    };
    let root = p.expr()?;
    p.expect_end()?;
    Ok(Expr { vars, root })
}

impl Expr {
    /// Builds an expression from a tree, for callers that assemble trees
    /// programmatically; variable indices are validated against the list.
    pub fn from_node(root: Node, vars: Vec<String>) -> Result<Expr, ParseError> {
        fn check(node: &Node, n: usize) -> bool {
            match node {
                Node::Const(_) => true,
                Node::Var(i) => *i < n,
                Node::Un(_, a) => check(a, n),
                Node::Bin(_, a, b) => check(a, n) && check(b, n),
                Node::Pow(a, _) => check(a, n),
            }
        }
        if !check(&root, vars.len()) {
            return Err(ParseError::Syntax {
                offset: 0,
                message: "variable index out of range".to_owned(),
            });
        }
        Ok(Expr { vars, root })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    /// The same expression under an outer unary minus.
    pub fn negated(&self) -> Expr {
        Expr {
            vars: self.vars.clone(),
            root: Node::Un(UnOp::Neg, Box::new(self.root.clone())),
        }
    }

    /// Evaluates at a point; `env` pairs with the variable list by position.
    pub fn eval_point(&self, env: &[f64]) -> Result<f64, EvalError> {
        if env.len() != self.vars.len() {
            return Err(EvalError::MissingBinding {
                expected: self.vars.len(),
                got: env.len(),
            });
        }
        eval_point_node(&self.root, env)
    }

    /// Natural interval extension over an interval environment.
    pub fn eval_interval(&self, env: &[Interval]) -> Result<Interval, EvalError> {
        if env.len() != self.vars.len() {
            return Err(EvalError::MissingBinding {
                expected: self.vars.len(),
                got: env.len(),
            });
        }
        eval_interval_node(&self.root, env)
    }

    /// Interval extension over a box whose dimensions pair with the
    /// variable list by position.
    pub fn eval_box(&self, b: &crate::interval::BoxN) -> Result<Interval, EvalError> {
        self.eval_interval(b.dims())
    }
}

fn finite(v: f64) -> Result<f64, EvalError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(EvalError::NonFinite)
    }
}

/// Scalar binary powering; mirrors the interval powering step for step so
/// point results always land inside interval results.
fn pow_scalar(x: f64, n: u32) -> f64 {
    let mut acc = 1.0;
    let mut base = x;
    let mut k = n;
    loop {
        if k % 2 == 1 {
            acc *= base;
        }
        k /= 2;
        if k == 0 {
            return acc;
        }
        base *= base;
    }
}

fn eval_point_node(node: &Node, env: &[f64]) -> Result<f64, EvalError> {
    match node {
        Node::Const(c) => finite(*c),
        Node::Var(i) => finite(env[*i]),
        Node::Un(op, a) => {
            let v = eval_point_node(a, env)?;
            finite(match op {
                UnOp::Neg => -v,
                UnOp::Abs => v.abs(),
                UnOp::Sin => v.sin(),
                UnOp::Cos => v.cos(),
                UnOp::Exp => v.exp(),
            })
        }
        Node::Bin(op, a, b) => {
            let x = eval_point_node(a, env)?;
            let y = eval_point_node(b, env)?;
            if *op == BinOp::Div && y == 0.0 {
                return Err(EvalError::DivisionByZero);
            }
            finite(match op {
                BinOp::Add => x + y,
                BinOp::Sub => x - y,
                BinOp::Mul => x * y,
                BinOp::Div => x / y,
                BinOp::Min => x.min(y),
                BinOp::Max => x.max(y),
            })
        }
        Node::Pow(a, n) => finite(pow_scalar(eval_point_node(a, env)?, *n)),
    }
}

fn eval_interval_node(node: &Node, env: &[Interval]) -> Result<Interval, EvalError> {
    match node {
        Node::Const(c) => {
            Interval::point(finite(*c)?).map_err(|_| EvalError::NonFinite)
        }
        Node::Var(i) => Ok(env[*i]),
        Node::Un(op, a) => {
            let v = eval_interval_node(a, env)?;
            Ok(match op {
                UnOp::Neg => v.neg(),
                UnOp::Abs => v.abs(),
                UnOp::Sin => v.sin(),
                UnOp::Cos => v.cos(),
                UnOp::Exp => v.exp()?,
            })
        }
        Node::Bin(op, a, b) => {
            let x = eval_interval_node(a, env)?;
            let y = eval_interval_node(b, env)?;
            Ok(match op {
                BinOp::Add => x.add(y)?,
                BinOp::Sub => x.sub(y)?,
                BinOp::Mul => x.mul(y)?,
                BinOp::Div => x.div(y)?,
                BinOp::Min => x.min(y),
                BinOp::Max => x.max(y),
            })
        }
        Node::Pow(a, n) => Ok(eval_interval_node(a, env)?.pow_int(*n)?),
    }
}

impl std::fmt::Display for Expr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fmt_node(&self.root, &self.vars, f)
    }
}

fn fmt_node(
    node: &Node,
    vars: &[String],
    f: &mut std::fmt::Formatter<'_>,
) -> std::fmt::Result {
    match node {
        Node::Const(c) => write!(f, "{c}"),
        Node::Var(i) => write!(f, "{}", vars[*i]),
        Node::Un(UnOp::Neg, a) => {
            write!(f, "-(")?;
            fmt_node(a, vars, f)?;
            write!(f, ")")
        }
        Node::Un(op, a) => {
            let name = match op {
                UnOp::Abs => "abs",
                UnOp::Sin => "sin",
                UnOp::Cos => "cos",
                UnOp::Exp => "exp",
                UnOp::Neg => unreachable!(),
            };
            write!(f, "{name}(")?;
            fmt_node(a, vars, f)?;
            write!(f, ")")
        }
        Node::Bin(op @ (BinOp::Min | BinOp::Max), a, b) => {
            write!(f, "{}(", if *op == BinOp::Min { "min" } else { "max" })?;
            fmt_node(a, vars, f)?;
            write!(f, ", ")?;
            fmt_node(b, vars, f)?;
            write!(f, ")")
        }
        Node::Bin(op, a, b) => {
            let sym = match op {
                BinOp::Add => "+",
                BinOp::Sub => "-",
                BinOp::Mul => "*",
                BinOp::Div => "/",
                _ => unreachable!(),
            };
            write!(f, "(")?;
            fmt_node(a, vars, f)?;
            write!(f, " {sym} ")?;
            fmt_node(b, vars, f)?;
            write!(f, ")")
        }
        Node::Pow(a, n) => {
            write!(f, "(")?;
            fmt_node(a, vars, f)?;
            write!(f, ")^{n}")
        }
    }
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num { value: f64, int_literal: bool },
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    vars: &'a [String],
}

impl<'a> Parser<'a> {
    fn syntax(&self, offset: usize, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            offset,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        let bytes = self.text.as_bytes();
        while self.pos < bytes.len() && (bytes[self.pos] as char).is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    /// Reads the token starting at the cursor; returns it with its offset
    /// and leaves the cursor after it.
    fn next_token(&mut self) -> Result<(Tok, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.text.as_bytes();
        if start >= bytes.len() {
            return Ok((Tok::End, start));
        }
        let c = bytes[start] as char;
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(t) = simple {
            self.pos += 1;
            return Ok((t, start));
        }
        if c.is_ascii_digit() {
            let mut end = start;
            let mut int_literal = true;
            while end < bytes.len() && (bytes[end] as char).is_ascii_digit() {
                end += 1;
            }
            if end < bytes.len() && bytes[end] == b'.' {
                int_literal = false;
                end += 1;
                let frac_start = end;
                while end < bytes.len() && (bytes[end] as char).is_ascii_digit() {
                    end += 1;
                }
                if end == frac_start {
                    return Err(self.syntax(end, "expected digits after decimal point"));
                }
            }
            if end < bytes.len() && (bytes[end] == b'e' || bytes[end] == b'E') {
                int_literal = false;
                let mut probe = end + 1;
                if probe < bytes.len() && (bytes[probe] == b'+' || bytes[probe] == b'-') {
                    probe += 1;
                }
                let exp_start = probe;
                while probe < bytes.len() && (bytes[probe] as char).is_ascii_digit() {
                    probe += 1;
                }
                if probe == exp_start {
                    return Err(self.syntax(probe, "expected digits in exponent"));
                }
                end = probe;
            }
            let value: f64 = self.text[start..end]
                .parse()
                .map_err(|_| self.syntax(start, "malformed number"))?;
            if !value.is_finite() {
                return Err(self.syntax(start, "number out of range"));
            }
            self.pos = end;
            return Ok((Tok::Num { value, int_literal }, start));
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut end = start;
            while end < bytes.len()
                && ((bytes[end] as char).is_ascii_alphanumeric() || bytes[end] == b'_')
            {
                end += 1;
            }
            self.pos = end;
            return Ok((Tok::Ident(self.text[start..end].to_owned()), start));
        }
        Err(self.syntax(start, format!("unexpected character {c:?}")))
    }

    fn peek(&mut self) -> Result<(Tok, usize), ParseError> {
        let save = self.pos;
        let t = self.next_token();
        self.pos = save;
        t
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        let (t, off) = self.peek()?;
        if t == Tok::End {
            Ok(())
        } else {
            Err(self.syntax(off, "unexpected trailing input"))
        }
    }

    fn expr(&mut self) -> Result<Node, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let (t, _) = self.peek()?;
            let op = match t {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.next_token()?;
            let rhs = self.term()?;
            lhs = Node::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<Node, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let (t, _) = self.peek()?;
            let op = match t {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.next_token()?;
            let rhs = self.unary()?;
            lhs = Node::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Node, ParseError> {
        let (t, _) = self.peek()?;
        if t == Tok::Minus {
            self.next_token()?;
            return Ok(Node::Un(UnOp::Neg, Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Node, ParseError> {
        let mut base = self.atom()?;
        loop {
            let (t, _) = self.peek()?;
            if t != Tok::Caret {
                return Ok(base);
            }
            self.next_token()?;
            let (t, off) = self.next_token()?;
            match t {
                Tok::Num {
                    value,
                    int_literal: true,
                } if value >= 0.0 && value <= f64::from(u32::MAX) && value.fract() == 0.0 => {
                    base = Node::Pow(Box::new(base), value as u32);
                }
                _ => {
                    return Err(
                        self.syntax(off, "exponent must be a nonnegative integer literal")
                    )
                }
            }
        }
    }

    fn atom(&mut self) -> Result<Node, ParseError> {
        let (t, off) = self.next_token()?;
        match t {
            Tok::Num { value, .. } => Ok(Node::Const(value)),
            Tok::LParen => {
                let inner = self.expr()?;
                let (t, off) = self.next_token()?;
                if t != Tok::RParen {
                    return Err(self.syntax(off, "expected ')'"));
                }
                Ok(inner)
            }
            Tok::Ident(name) => {
                let (next, _) = self.peek()?;
                if next == Tok::LParen {
                    self.call(&name, off)
                } else if let Some(i) = self.vars.iter().position(|v| v == &name) {
                    Ok(Node::Var(i))
                } else {
                    Err(ParseError::UnknownVariable { offset: off, name })
                }
            }
            Tok::End => Err(self.syntax(off, "expected an operand, found end of input")),
            other => Err(self.syntax(off, format!("expected an operand, found {other:?}"))),
        }
    }

    fn call(&mut self, name: &str, name_off: usize) -> Result<Node, ParseError> {
        let expected = match name {
            "abs" | "sin" | "cos" | "exp" => 1,
            "min" | "max" => 2,
            _ => {
                return Err(self.syntax(name_off, format!("unknown function {name:?}")));
            }
        };
        self.next_token()?; // consumes '('
        let mut args = vec![self.expr()?];
        loop {
            let (t, off) = self.next_token()?;
            match t {
                Tok::RParen => break,
                Tok::Comma => args.push(self.expr()?),
                _ => return Err(self.syntax(off, "expected ',' or ')' in argument list")),
            }
        }
        if args.len() != expected {
            return Err(ParseError::Arity {
                offset: name_off,
                name: name.to_owned(),
                expected,
                got: args.len(),
            });
        }
        let mut it = args.into_iter();
        Ok(match name {
            "abs" => Node::Un(UnOp::Abs, Box::new(it.next().unwrap())),
            "sin" => Node::Un(UnOp::Sin, Box::new(it.next().unwrap())),
            "cos" => Node::Un(UnOp::Cos, Box::new(it.next().unwrap())),
            "exp" => Node::Un(UnOp::Exp, Box::new(it.next().unwrap())),
            "min" => Node::Bin(
                BinOp::Min,
                Box::new(it.next().unwrap()),
                Box::new(it.next().unwrap()),
            ),
            "max" => Node::Bin(
                BinOp::Max,
                Box::new(it.next().unwrap()),
                Box::new(it.next().unwrap()),
            ),
            _ => unreachable!(),
        })
    }
}
