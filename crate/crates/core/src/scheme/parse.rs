use thiserror::Error;

use super::{ComplexScheme, Forest, Mark, Node, RealScheme};
use crate::sign::Sign;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("pseudo-line nested inside an oval at {pos}")]
    NestedPseudoLine { pos: usize },
    #[error("duplicate pseudo-line at {pos}")]
    DuplicatePseudoLine { pos: usize },
    #[error("sign suffix not allowed in a real scheme at {pos}")]
    UnexpectedSign { pos: usize },
    #[error("missing sign suffix at {pos}")]
    MissingSign { pos: usize },
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("degree {degree}: pseudo-line {} but degree is {}", if *present { "present" } else { "absent" }, if *degree % 2 == 1 { "odd" } else { "even" })]
    PseudoLineParity { degree: u32, present: bool },
    #[error("degree {degree} allows at most {max} components, got {components}")]
    TooManyComponents { degree: u32, components: u64, max: u64 },
}

/// Parses a real scheme such as `"<J + 1<4 + 1<22>>>"`.
pub fn parse_scheme(text: &str, degree: u32) -> Result<RealScheme, SchemeError> {
    let (pseudo_line, ovals) = Parser::<()>::new(text).scheme()?;
    Forest::new(degree, pseudo_line, ovals)
}

/// Parses a complex scheme such as `"<J + 1_-<4_+ + 0_- + 1_-<11_+ + 11_->>>"`.
pub fn parse_complex_scheme(text: &str, degree: u32) -> Result<ComplexScheme, SchemeError> {
    let (pseudo_line, ovals) = Parser::<Sign>::new(text).scheme()?;
    Forest::new(degree, pseudo_line, ovals)
}

trait ParseMark: Mark {
    fn from_sign(sign: Option<Sign>, pos: usize) -> Result<Self, SchemeError>;
}

impl ParseMark for () {
    fn from_sign(sign: Option<Sign>, pos: usize) -> Result<(), SchemeError> {
        match sign {
            None => Ok(()),
            Some(_) => Err(SchemeError::UnexpectedSign { pos }),
        }
    }
}

impl ParseMark for Sign {
    fn from_sign(sign: Option<Sign>, pos: usize) -> Result<Sign, SchemeError> {
        sign.ok_or(SchemeError::MissingSign { pos })
    }
}

struct Parser<M> {
    chars: Vec<char>,
    pos: usize,
    _mark: std::marker::PhantomData<M>,
}

impl<M: ParseMark> Parser<M> {
    fn new(text: &str) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            _mark: std::marker::PhantomData,
        }
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, SchemeError> {
        Err(SchemeError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<(), SchemeError> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => self.syntax(format!("expected '{c}', found '{x}'")),
            None => self.syntax(format!("expected '{c}', found end of input")),
        }
    }

    fn scheme(&mut self) -> Result<(bool, Vec<Node<M>>), SchemeError> {
        self.expect('<')?;
        let body = self.body(true)?;
        self.expect('>')?;
        if let Some(c) = self.peek() {
            return self.syntax(format!("trailing input starting with '{c}'"));
        }
        Ok(body)
    }

    fn body(&mut self, top: bool) -> Result<(bool, Vec<Node<M>>), SchemeError> {
        let mut pseudo_line = false;
        let mut nodes = Vec::new();
        let start = self.pos;
        let mut items = 0usize;
        let mut bare_zero = false;
        loop {
            items += 1;
            match self.peek() {
                Some('J') => {
                    let at = self.pos;
                    self.pos += 1;
                    if !top {
                        return Err(SchemeError::NestedPseudoLine { pos: at });
                    }
                    if pseudo_line {
                        return Err(SchemeError::DuplicatePseudoLine { pos: at });
                    }
                    pseudo_line = true;
                }
                Some(c) if c.is_ascii_digit() => {
                    let at = self.pos;
                    let count = self.count()?;
                    let sign = self.sign()?;
                    if self.peek() == Some('<') {
                        if count == 0 {
                            self.pos = at;
                            return self.syntax("a surrounding oval needs a positive count");
                        }
                        self.pos += 1;
                        let (_, inner) = self.body(false)?;
                        self.expect('>')?;
                        let mark = M::from_sign(sign, at)?;
                        for _ in 0..count {
                            nodes.push(Node::new(mark, inner.clone()));
                        }
                    } else {
                        if count == 0 && sign.is_none() {
                            bare_zero = true;
                        } else {
                            let mark = M::from_sign(sign, at)?;
                            nodes.extend((0..count).map(|_| Node::empty(mark)));
                        }
                    }
                }
                Some(c) => return self.syntax(format!("unexpected '{c}'")),
                None => return self.syntax("unexpected end of input"),
            }
            if self.peek() == Some('+') {
                self.pos += 1;
            } else {
                break;
            }
        }
        if bare_zero && items > 1 {
            self.pos = start;
            return self.syntax("'0' must be the whole body");
        }
        Ok((pseudo_line, nodes))
    }

    fn count(&mut self) -> Result<usize, SchemeError> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().or_else(|_| {
            self.pos = start;
            self.syntax("count out of range")
        })
    }

    fn sign(&mut self) -> Result<Option<Sign>, SchemeError> {
        if self.peek() != Some('_') {
            return Ok(None);
        }
        self.pos += 1;
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Ok(Some(Sign::Plus))
            }
            Some('-') | Some('\u{2212}') => {
                self.pos += 1;
                Ok(Some(Sign::Minus))
            }
            _ => self.syntax("expected '+' or '-' after '_'"),
        }
    }
}
