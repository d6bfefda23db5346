//! Finite possibility spaces and rational-valued gambles.

use crate::rat::{format_rat, is_neg, is_pos, is_zero, rzero, Rat};
use num::Signed;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SpaceError {
    #[error("possibility space must be nonempty with unique atom labels")]
    BadAtoms,
    #[error("gamble length does not match the atom count of its space")]
    DimensionMismatch,
    #[error("operands live on different possibility spaces")]
    SpaceMismatch,
}

/// Finite possibility space: an ordered list of distinct atom labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Space {
    atoms: Arc<Vec<String>>,
}

impl Space {
    pub fn new<I, S>(atoms: I) -> Result<Space, SpaceError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        if atoms.is_empty() {
            return Err(SpaceError::BadAtoms);
        }
        for (i, a) in atoms.iter().enumerate() {
            if atoms[..i].contains(a) {
                return Err(SpaceError::BadAtoms);
            }
        }
        Ok(Space {
            atoms: Arc::new(atoms),
        })
    }

    /// Convenience space with atoms `w1..wn`.
    pub fn of_size(n: usize) -> Space {
        Space::new((1..=n).map(|i| format!("w{i}"))).expect("positive size")
    }

    pub fn dim(&self) -> usize {
        self.atoms.len()
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn atom_index(&self, label: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == label)
    }
}

/// A gamble: one exact rational payoff per atom.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gamble {
    space: Space,
    values: Vec<Rat>,
}

impl Gamble {
    pub fn new(space: &Space, values: Vec<Rat>) -> Result<Gamble, SpaceError> {
        if values.len() != space.dim() {
            return Err(SpaceError::DimensionMismatch);
        }
        Ok(Gamble {
            space: space.clone(),
            values,
        })
    }

    /// Integer-valued convenience constructor.
    pub fn from_ints(space: &Space, values: &[i64]) -> Gamble {
        Gamble::new(space, values.iter().map(|&v| crate::rat::rint(v)).collect())
            .expect("length checked by caller")
    }

    pub fn zero(space: &Space) -> Gamble {
        Gamble {
            space: space.clone(),
            values: vec![rzero(); space.dim()],
        }
    }

    /// Indicator of a single atom.
    pub fn indicator(space: &Space, atom: usize) -> Gamble {
        let mut values = vec![rzero(); space.dim()];
        values[atom] = crate::rat::rone();
        Gamble {
            space: space.clone(),
            values,
        }
    }

    /// Constant gamble `c` on every atom.
    pub fn constant(space: &Space, c: Rat) -> Gamble {
        Gamble {
            space: space.clone(),
            values: vec![c; space.dim()],
        }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(is_zero)
    }

    pub fn scale(&self, c: &Rat) -> Gamble {
        Gamble {
            space: self.space.clone(),
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    pub fn min_value(&self) -> Rat {
        self.values.iter().min().expect("nonempty space").clone()
    }

    pub fn max_value(&self) -> Rat {
        self.values.iter().max().expect("nonempty space").clone()
    }

    pub fn dot(&self, other: &Gamble) -> Rat {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b)
            .fold(rzero(), |a, b| a + b)
    }

    /// True when `self` and `other` generate the same ray (positive scalings
    /// of one another). The zero gamble is only ray-equal to itself.
    pub fn same_ray(&self, other: &Gamble) -> bool {
        if self.space != other.space {
            return false;
        }
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return true,
            (true, false) | (false, true) => return false,
            _ => {}
        }
        let mut scale: Option<Rat> = None;
        for (a, b) in self.values.iter().zip(&other.values) {
            match (is_zero(a), is_zero(b)) {
                (true, true) => {}
                (true, false) | (false, true) => return false,
                (false, false) => {
                    let s = b / a;
                    if !s.is_positive() {
                        return false;
                    }
                    match &scale {
                        None => scale = Some(s),
                        Some(prev) => {
                            if *prev != s {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Display normalization: scale so the first nonzero coordinate has
    /// absolute value 1. Presentation only, never semantic.
    pub fn ray_normalized(&self) -> Gamble {
        match self.values.iter().find(|v| !is_zero(v)) {
            None => self.clone(),
            Some(first) => {
                let s = first.abs().recip();
                self.scale(&s)
            }
        }
    }
}

impl fmt::Display for Gamble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rat(v))?;
        }
        write!(f, ")")
    }
}

impl Add for &Gamble {
    type Output = Gamble;
    fn add(self, rhs: &Gamble) -> Gamble {
        assert_eq!(self.space, rhs.space, "space mismatch");
        Gamble {
            space: self.space.clone(),
            values: self
                .values
                .iter()
                .zip(&rhs.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Gamble {
    type Output = Gamble;
    fn sub(self, rhs: &Gamble) -> Gamble {
        assert_eq!(self.space, rhs.space, "space mismatch");
        Gamble {
            space: self.space.clone(),
            values: self
                .values
                .iter()
                .zip(&rhs.values)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Gamble {
    type Output = Gamble;
    fn neg(self) -> Gamble {
        Gamble {
            space: self.space.clone(),
            values: self.values.iter().map(|v| -v.clone()).collect(),
        }
    }
}

/// Vector-order flags between two gambles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderFlags {
    /// pointwise `f >= g`
    pub geq: bool,
    /// `f >= g` and `f != g`
    pub gt: bool,
    /// uniformly greater: `min(f - g) > 0`
    pub uniform_gt: bool,
}

/// Computes the componentwise vector order flags for `f` against `g`.
pub fn vector_order(f: &Gamble, g: &Gamble) -> Result<OrderFlags, SpaceError> {
    if f.space != g.space {
        return Err(SpaceError::SpaceMismatch);
    }
    let d = f - g;
    let geq = d.values.iter().all(|v| !is_neg(v));
    let gt = geq && !d.is_zero();
    let uniform_gt = d.values.iter().all(is_pos);
    Ok(OrderFlags {
        geq,
        gt,
        uniform_gt,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn two() -> Space {
        Space::of_size(2)
    }

    #[test]
    fn space_rejects_duplicates() {
        assert!(Space::new(["a", "a"]).is_err());
        assert!(Space::new(Vec::<String>::new()).is_err());
    }

    #[test]
    fn order_flags_match_worked_examples() {
        let s = two();
        let f = Gamble::from_ints(&s, &[1, 2]);
        let g = Gamble::from_ints(&s, &[1, 1]);
        let o = vector_order(&f, &g).unwrap();
        assert!(o.geq && o.gt && !o.uniform_gt);

        let f = Gamble::from_ints(&s, &[2, 2]);
        let o = vector_order(&f, &g).unwrap();
        assert!(o.geq && o.gt && o.uniform_gt);

        let f = Gamble::from_ints(&s, &[1, 0]);
        let g = Gamble::from_ints(&s, &[0, 1]);
        let o = vector_order(&f, &g).unwrap();
        assert!(!o.geq && !o.gt && !o.uniform_gt);
    }

    #[test]
    fn ray_identity() {
        let s = two();
        let f = Gamble::from_ints(&s, &[1, 1]);
        let g = Gamble::from_ints(&s, &[2, 2]);
        let h = Gamble::from_ints(&s, &[-1, -1]);
        assert!(f.same_ray(&g));
        assert!(!f.same_ray(&h));
        assert!(Gamble::zero(&s).same_ray(&Gamble::zero(&s)));
        assert!(!Gamble::zero(&s).same_ray(&f));
    }

    #[test]
    fn ray_normalization_first_nonzero_unit() {
        let s = two();
        let f = Gamble::new(&s, vec![rat(-2, 1), rat(4, 1)]).unwrap();
        let n = f.ray_normalized();
        assert_eq!(n.values(), &[rat(-1, 1), rat(2, 1)]);
    }
}
