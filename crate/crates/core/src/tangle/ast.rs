use std::fmt;

/// A string diagram. `Compose` lists its steps top to bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TangleExpr {
    Gen(String),
    Id(String),
    Swap(String, String),
    Tensor(Vec<TangleExpr>),
    Compose(Vec<TangleExpr>),
}

impl TangleExpr {
    pub fn gen(name: &str) -> Self {
        TangleExpr::Gen(name.to_string())
    }

    pub fn id(object: &str) -> Self {
        TangleExpr::Id(object.to_string())
    }

    pub fn swap(a: &str, b: &str) -> Self {
        TangleExpr::Swap(a.to_string(), b.to_string())
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            TangleExpr::Tensor(xs) | TangleExpr::Compose(xs) => {
                1 + xs.iter().map(TangleExpr::size).sum::<usize>()
            }
            _ => 1,
        }
    }

    fn fmt_child(&self, parent_is_tensor: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let needs_parens = match self {
            TangleExpr::Compose(_) => true,
            TangleExpr::Tensor(_) => parent_is_tensor,
            _ => false,
        };
        if needs_parens {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for TangleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TangleExpr::Gen(name) => f.write_str(name),
            TangleExpr::Id(x) => write!(f, "id[{x}]"),
            TangleExpr::Swap(a, b) => write!(f, "swap[{a},{b}]"),
            TangleExpr::Tensor(xs) | TangleExpr::Compose(xs) => {
                let (sep, is_tensor) = match self {
                    TangleExpr::Tensor(_) => (" * ", true),
                    _ => (" ; ", false),
                };
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(sep)?;
                    }
                    x.fmt_child(is_tensor, f)?;
                }
                Ok(())
            }
        }
    }
}
