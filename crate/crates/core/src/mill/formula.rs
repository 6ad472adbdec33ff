use std::fmt;
use std::sync::Arc;

use crate::names::LabelId;

/// A MILL formula. Subformulas are shared, so cloning is cheap.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Unit,
    Atom(LabelId),
    Tensor(Arc<Formula>, Arc<Formula>),
    Lolli(Arc<Formula>, Arc<Formula>),
}

impl Formula {
    pub fn atom(label: impl Into<LabelId>) -> Self {
        Formula::Atom(label.into())
    }

    pub fn tensor(left: Formula, right: Formula) -> Self {
        Formula::Tensor(Arc::new(left), Arc::new(right))
    }

    pub fn lolli(antecedent: Formula, consequent: Formula) -> Self {
        Formula::Lolli(Arc::new(antecedent), Arc::new(consequent))
    }

    /// Right-nested tensor of the factors; `1` when there are none.
    pub fn tensor_all(factors: impl IntoIterator<Item = Formula>) -> Self {
        let factors: Vec<Formula> = factors.into_iter().collect();
        factors
            .into_iter()
            .rev()
            .reduce(|acc, f| Formula::tensor(f, acc))
            .unwrap_or(Formula::Unit)
    }

    /// Number of tensor and lollipop nodes.
    pub fn connectives(&self) -> usize {
        match self {
            Formula::Unit | Formula::Atom(_) => 0,
            Formula::Tensor(a, b) | Formula::Lolli(a, b) => 1 + a.connectives() + b.connectives(),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Lolli(..) => 0,
            Formula::Tensor(..) => 1,
            Formula::Unit | Formula::Atom(_) => 2,
        }
    }
}

/// Renders with the fewest parentheses the parser needs: `*` binds tighter
/// than `-o`, `*` associates to the left and `-o` to the right.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn operand(f: &mut fmt::Formatter<'_>, sub: &Formula, min: u8) -> fmt::Result {
            if sub.precedence() < min {
                write!(f, "({sub})")
            } else {
                write!(f, "{sub}")
            }
        }
        match self {
            Formula::Unit => f.write_str("1"),
            Formula::Atom(label) => f.write_str(label.as_str()),
            Formula::Tensor(a, b) => {
                operand(f, a, 1)?;
                f.write_str(" * ")?;
                operand(f, b, 2)
            }
            Formula::Lolli(a, b) => {
                operand(f, a, 1)?;
                f.write_str(" -o ")?;
                operand(f, b, 0)
            }
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Formula({self})")
    }
}

/// The concrete syntax of `formula`; see [`super::parse`] for the grammar.
pub fn print(formula: &Formula) -> String {
    formula.to_string()
}
