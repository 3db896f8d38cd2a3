//! Divisor literals: `3L - 2E1 - E4` over the plane, `2F + 1M - E3` over
//! `F_δ`. Whitespace is ignored and coefficients are integers or `p/q`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{DivisorClass, LatticeError, SurfaceModel};
use crate::Rational;

enum Symbol {
    Line,
    Fiber,
    Section,
    Exceptional(usize),
}

struct Cursor<'a> {
    chars: &'a [char],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }
}

pub(super) fn parse(text: &str, surface: SurfaceModel, n: usize) -> Result<DivisorClass, LatticeError> {
    let err = |message: String| LatticeError::Literal {
        literal: text.to_string(),
        message,
    };
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(err("empty literal".into()));
    }
    let mut cls = DivisorClass::zero(surface, n);
    if chars == ['0'] {
        return Ok(cls);
    }
    let mut cur = Cursor { chars: &chars, pos: 0 };
    let mut first = true;
    while cur.peek().is_some() {
        let negative = match cur.peek() {
            Some('+') => {
                cur.pos += 1;
                false
            }
            Some('-') => {
                cur.pos += 1;
                true
            }
            _ if first => false,
            Some(c) => return Err(err(format!("expected `+` or `-` before `{c}`"))),
            None => unreachable!(),
        };
        first = false;

        let mut coefficient = match cur.digits() {
            None => Rational::one(),
            Some(numer) => {
                let numer: BigInt = numer.parse().expect("ascii digits");
                if cur.peek() == Some('/') {
                    cur.pos += 1;
                    let denom: BigInt = cur
                        .digits()
                        .ok_or_else(|| err("missing denominator after `/`".into()))?
                        .parse()
                        .expect("ascii digits");
                    if denom.is_zero() {
                        return Err(err("zero denominator".into()));
                    }
                    Rational::new(numer, denom)
                } else {
                    Rational::from_integer(numer)
                }
            }
        };
        if negative {
            coefficient = -coefficient;
        }

        let letter = cur
            .peek()
            .ok_or_else(|| err("coefficient without a generator".into()))?;
        cur.pos += 1;
        let symbol = match letter.to_ascii_uppercase() {
            'L' => Symbol::Line,
            'F' => Symbol::Fiber,
            'M' => Symbol::Section,
            'E' => {
                let index = cur
                    .digits()
                    .ok_or_else(|| err("`E` must be followed by a point index".into()))?;
                let index: usize = index
                    .parse()
                    .map_err(|_| err(format!("point index `{index}` is too large")))?;
                if index == 0 || index > n {
                    return Err(err(format!("E{index} is out of range 1..={n}")));
                }
                Symbol::Exceptional(index)
            }
            c => return Err(err(format!("unexpected `{c}`"))),
        };

        match (symbol, surface) {
            (Symbol::Line, SurfaceModel::ProjectivePlane) => cls.base[0] += coefficient,
            (Symbol::Fiber, SurfaceModel::Hirzebruch { .. }) => cls.base[0] += coefficient,
            (Symbol::Section, SurfaceModel::Hirzebruch { .. }) => cls.base[1] += coefficient,
            (Symbol::Exceptional(i), _) => cls.exceptional[i - 1] -= coefficient,
            (Symbol::Line, s) => return Err(err(format!("`L` is not a generator over {s}"))),
            (_, s) => return Err(err(format!("`F`/`M` are not generators over {s}"))),
        }
    }
    Ok(cls)
}

pub(super) fn write(cls: &DivisorClass, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut terms: Vec<(Rational, String)> = Vec::new();
    match cls.surface {
        SurfaceModel::ProjectivePlane => terms.push((cls.base[0].clone(), "L".into())),
        SurfaceModel::Hirzebruch { .. } => {
            terms.push((cls.base[0].clone(), "F".into()));
            terms.push((cls.base[1].clone(), "M".into()));
        }
    }
    for (i, m) in cls.exceptional.iter().enumerate() {
        terms.push((-m.clone(), format!("E{}", i + 1)));
    }
    let mut wrote = false;
    for (coefficient, symbol) in terms.into_iter().filter(|(c, _)| !c.is_zero()) {
        let sign = match (wrote, coefficient.is_negative()) {
            (false, false) => "",
            (false, true) => "-",
            (true, false) => " + ",
            (true, true) => " - ",
        };
        let magnitude = coefficient.abs();
        if magnitude.is_one() {
            write!(f, "{sign}{symbol}")?;
        } else {
            write!(f, "{sign}{magnitude}{symbol}")?;
        }
        wrote = true;
    }
    if !wrote {
        f.write_str("0")?;
    }
    Ok(())
}
