use std::fmt;

use crate::graph::{Color, TriGraph};
use crate::relation::Relation;
use crate::word::RowWord;

/// Relational expression over the three colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RelExpr {
    Atom(Color),
    /// Never empty; use [`RelExpr::union`].
    Union(Vec<RelExpr>),
    /// Left operand first: `Compose(B, A)` is a `B`-step followed by an `A`-step.
    Compose(Box<RelExpr>, Box<RelExpr>),
    /// Reflexive-transitive closure.
    Star(Box<RelExpr>),
    /// Transitive closure.
    Plus(Box<RelExpr>),
}

impl RelExpr {
    pub fn atom(color: Color) -> Self {
        RelExpr::Atom(color)
    }

    /// # Panics
    /// If `children` is empty.
    pub fn union<I: IntoIterator<Item = RelExpr>>(children: I) -> Self {
        let children: Vec<_> = children.into_iter().collect();
        assert!(!children.is_empty(), "union needs at least one operand");
        RelExpr::Union(children)
    }

    pub fn compose(left: RelExpr, right: RelExpr) -> Self {
        RelExpr::Compose(Box::new(left), Box::new(right))
    }

    pub fn star(inner: RelExpr) -> Self {
        RelExpr::Star(Box::new(inner))
    }

    pub fn plus(inner: RelExpr) -> Self {
        RelExpr::Plus(Box::new(inner))
    }

    pub fn eval<W: RowWord>(&self, g: &TriGraph<W>) -> Relation<W> {
        match self {
            RelExpr::Atom(c) => g.color(*c).clone(),
            RelExpr::Union(children) => {
                let mut it = children.iter();
                let first = it.next().expect("non-empty union").eval(g);
                it.fold(first, |acc, e| acc.union_unchecked(&e.eval(g)))
            }
            RelExpr::Compose(l, r) => l.eval(g).compose_unchecked(&r.eval(g)),
            RelExpr::Star(e) => e.eval(g).closure(true),
            RelExpr::Plus(e) => e.eval(g).closure(false),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            RelExpr::Union(c) if c.len() == 1 => c[0].precedence(),
            RelExpr::Union(_) => 0,
            RelExpr::Compose(..) => 1,
            _ => 2,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            f.write_str("(")?;
            self.fmt_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            RelExpr::Atom(c) => write!(f, "{c}"),
            RelExpr::Union(children) if children.len() == 1 => children[0].fmt_at(f, min),
            RelExpr::Union(children) => {
                for (i, e) in children.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" | ")?;
                    }
                    e.fmt_at(f, 1)?;
                }
                Ok(())
            }
            RelExpr::Compose(l, r) => {
                l.fmt_at(f, 1)?;
                r.fmt_at(f, 2)
            }
            RelExpr::Star(e) => {
                e.fmt_at(f, 2)?;
                f.write_str("*")
            }
            RelExpr::Plus(e) => {
                e.fmt_at(f, 2)?;
                f.write_str("+")
            }
        }
    }
}

/// ASCII rendering: juxtaposition composes, `|` unions, postfix `*`/`+`.
impl fmt::Display for RelExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}
