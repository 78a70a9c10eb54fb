use core::fmt;

/// Construction and validation failures for terms and maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermError {
    /// `Theta(index, s)` with `index < max(deg(s) - 1, 0)`.
    IndexConstraint { index: u32, sub_degree: i32 },
    /// An index at or above the system bound.
    IndexOutOfRange { index: u32, bound: u32 },
    /// A restricted system requires degree at most zero.
    DegreeTooLarge { degree: i32 },
    /// Binary terms need `K(index, s)` empty.
    KSetNotEmpty { index: u32 },
    /// A leaf that is not an element of the base order.
    LeafOutsideBase,
    /// Decrementing an index that is already zero.
    ZeroIndex,
    /// A map applied outside its domain.
    Domain(&'static str),
    /// A fixed point target broke one of its axioms during a recursion.
    Contract(&'static str),
}

impl fmt::Display for TermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermError::IndexConstraint { index, sub_degree } => write!(f, "index {index} is below the degree bound of its subterm (degree {sub_degree})"),
            TermError::IndexOutOfRange { index, bound } => {
                write!(f, "index {index} is not below {bound}")
            }
            TermError::DegreeTooLarge { degree } => {
                write!(f, "term of degree {degree} is not in a restricted system")
            }
            TermError::KSetNotEmpty { index } => {
                write!(f, "left subterm has a component of index at most {index}")
            }
            TermError::LeafOutsideBase => write!(f, "leaf is not an element of the base order"),
            TermError::ZeroIndex => write!(f, "cannot decrement index 0"),
            TermError::Domain(what) => write!(f, "argument outside the domain of {what}"),
            TermError::Contract(what) => write!(f, "fixed point contract violated: {what}"),
        }
    }
}
