//! Group expressions such as `Q8 x Z15` or `Heis3 x Z2`.
//!
//! ```text
//! expr := atom ("x" atom)*
//! atom := ("Z" | "D" | "Q" | "S") integer | "Heis" integer
//! ```
//!
//! Letters are case-insensitive and whitespace is ignored. The integer after
//! `D` and `Q` is the order of the group (`D6` has six elements), after `Z` the
//! order, after `S` the degree and after `Heis` the prime.

use std::fmt;
use std::str::FromStr;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{self, FiniteGroup, MAX_GROUP_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AtomKind {
    Cyclic,
    Dihedral,
    Quaternion,
    Symmetric,
    Heisenberg,
}

impl AtomKind {
    fn prefix(self) -> &'static str {
        match self {
            AtomKind::Cyclic => "Z",
            AtomKind::Dihedral => "D",
            AtomKind::Quaternion => "Q",
            AtomKind::Symmetric => "S",
            AtomKind::Heisenberg => "Heis",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Atom {
    pub kind: AtomKind,
    pub param: usize,
}

impl Atom {
    pub fn new(kind: AtomKind, param: usize) -> Self {
        Self { kind, param }
    }

    /// Checks the constructor's preconditions without building the table.
    pub fn validate(&self) -> Result<()> {
        let n = self.param;
        let bad = |why: String| Err(Error::InvalidParameter(format!("{self}: {why}")));
        match self.kind {
            AtomKind::Cyclic if n == 0 => bad("Z_n needs n >= 1".into()),
            AtomKind::Dihedral if n % 2 != 0 => bad("dihedral order must be even".into()),
            AtomKind::Dihedral if n < 6 => bad("dihedral order must be at least 6".into()),
            AtomKind::Quaternion if n % 4 != 0 => {
                bad("generalized quaternion order must be a multiple of 4".into())
            }
            AtomKind::Quaternion if n < 8 => {
                bad("generalized quaternion order must be at least 8".into())
            }
            AtomKind::Symmetric if !(1..=7).contains(&n) => bad("S_n needs 1 <= n <= 7".into()),
            AtomKind::Heisenberg if n == 2 || !arith::is_prime(n) => {
                bad("Heisenberg group needs an odd prime".into())
            }
            AtomKind::Heisenberg if n > 13 => bad("Heisenberg group needs p <= 13".into()),
            _ if self.order() > MAX_GROUP_ORDER => bad(format!(
                "order {} exceeds the table guard {MAX_GROUP_ORDER}",
                self.order()
            )),
            _ => Ok(()),
        }
    }

    pub fn order(&self) -> usize {
        match self.kind {
            AtomKind::Symmetric => arith::factorial(self.param),
            AtomKind::Heisenberg => self.param.pow(3),
            _ => self.param,
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        match self.kind {
            AtomKind::Cyclic => group::cyclic(self.param),
            AtomKind::Dihedral => group::dihedral(self.param),
            AtomKind::Quaternion => group::generalized_quaternion(self.param),
            AtomKind::Symmetric => group::symmetric(self.param),
            AtomKind::Heisenberg => group::heisenberg(self.param),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.prefix(), self.param)
    }
}

/// Parsed group expression. Products associate to the left.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    Atom(Atom),
    Product(Box<GroupExpr>, Box<GroupExpr>),
}

impl GroupExpr {
    pub fn atom(kind: AtomKind, param: usize) -> Self {
        GroupExpr::Atom(Atom::new(kind, param))
    }

    /// Left-nested product of the given factors.
    pub fn product_of(factors: impl IntoIterator<Item = GroupExpr>) -> Option<Self> {
        factors
            .into_iter()
            .reduce(|l, r| GroupExpr::Product(Box::new(l), Box::new(r)))
    }

    pub fn atoms(&self) -> Vec<Atom> {
        match self {
            GroupExpr::Atom(a) => vec![*a],
            GroupExpr::Product(l, r) => {
                let mut v = l.atoms();
                v.extend(r.atoms());
                v
            }
        }
    }

    pub fn order(&self) -> usize {
        self.atoms().iter().map(Atom::order).product()
    }

    /// Builds the group; its name and provenance are the normalized expression.
    pub fn build(&self) -> Result<FiniteGroup> {
        let order = self
            .atoms()
            .iter()
            .try_fold(1usize, |acc, a| acc.checked_mul(a.order()))
            .unwrap_or(usize::MAX);
        if order > MAX_GROUP_ORDER {
            return Err(Error::InvalidParameter(format!(
                "{self} has order beyond the table guard {MAX_GROUP_ORDER}"
            )));
        }
        let g = match self {
            GroupExpr::Atom(a) => a.build()?,
            GroupExpr::Product(l, r) => group::direct_product(&l.build()?, &r.build()?)?,
        };
        let text = self.to_string();
        Ok(g.with_name(text.clone()).with_provenance(text))
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Atom(a) => write!(f, "{a}"),
            GroupExpr::Product(l, r) => write!(f, "{l} x {r}"),
        }
    }
}

impl FromStr for GroupExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_group_expr(s)
    }
}

/// Parses and validates a group expression.
pub fn parse_group_expr(text: &str) -> Result<GroupExpr> {
    let mut p = Parser { text, pos: 0 };
    p.skip_ws();
    let mut expr = GroupExpr::Atom(p.atom()?);
    loop {
        p.skip_ws();
        match p.peek() {
            None => break,
            Some('x' | 'X' | '×') => {
                p.bump();
                let rhs = p.atom()?;
                expr = GroupExpr::Product(Box::new(expr), Box::new(GroupExpr::Atom(rhs)));
            }
            Some(c) => return Err(p.error(format!("expected 'x' or end of input, found {c:?}"))),
        }
    }
    for a in expr.atoms() {
        a.validate()?;
    }
    Ok(expr)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn error(&self, message: String) -> Error {
        Error::Syntax {
            offset: self.pos,
            message,
        }
    }

    fn atom(&mut self) -> Result<Atom> {
        self.skip_ws();
        let kind = match self.peek().map(|c| c.to_ascii_lowercase()) {
            Some('z') => AtomKind::Cyclic,
            Some('d') => AtomKind::Dihedral,
            Some('q') => AtomKind::Quaternion,
            Some('s') => AtomKind::Symmetric,
            Some('h') => {
                let rest = &self.text[self.pos..];
                if rest.len() >= 4 && rest[..4].eq_ignore_ascii_case("heis") {
                    self.pos += 3;
                    AtomKind::Heisenberg
                } else {
                    return Err(self.error("expected \"Heis\"".into()));
                }
            }
            Some(c) => return Err(self.error(format!("expected a group atom, found {c:?}"))),
            None => return Err(self.error("expected a group atom, found end of input".into())),
        };
        self.bump();
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.error(format!("expected an integer after {:?}", kind.prefix())));
        }
        let param = self.text[start..self.pos]
            .parse()
            .map_err(|_| Error::Syntax {
                offset: start,
                message: "integer too large".into(),
            })?;
        Ok(Atom::new(kind, param))
    }
}
