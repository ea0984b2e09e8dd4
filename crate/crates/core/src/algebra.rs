//! Formal rational linear combinations of diagrams, multiplied bilinearly
//! with the product of their carrier semigroup.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::diagrams::{HatElement, SetPartition};
use crate::error::{Error, Result};
use crate::exact_linalg::{ExactMatrix, Rational};
use crate::semigroups::{bullet_multiply, multiply_istar, multiply_pistar, star_multiply};
use crate::tensor_actions::{action_matrix_u, action_matrix_v, ActionSpace, Variant};

/// The semigroup whose algebra an element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Carrier {
    /// `C[I*_k]`.
    Istar,
    /// `C[PI*_k]`.
    Pistar,
    /// The contracted algebra of `PI*_k ∪ {0}` under ⋆: the zero is identified
    /// with `0` and never stored.
    Hat,
    /// `C[PI*_k]` under •.
    Tilde,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    carrier: Carrier,
    k: usize,
    terms: BTreeMap<SetPartition, Rational>,
}

impl AlgebraElement {
    pub fn zero(carrier: Carrier, k: usize) -> Self {
        Self {
            carrier,
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(carrier: Carrier, p: SetPartition) -> Self {
        let mut x = Self::zero(carrier, p.k());
        x.add_term(p, Rational::one());
        x
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SetPartition, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &SetPartition) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, p: SetPartition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.carrier != other.carrier {
            return Err(Error::Shape(format!(
                "cannot combine {:?} and {:?} elements",
                self.carrier, other.carrier
            )));
        }
        if self.k != other.k {
            return Err(Error::SizeMismatch {
                left: self.k,
                right: other.k,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        let mut out = Self::zero(self.carrier, self.k);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c * factor);
        }
        out
    }

    /// Bilinear extension of the carrier product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.carrier, self.k);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let product = match self.carrier {
                    Carrier::Istar => Some(multiply_istar(a, b)?),
                    Carrier::Pistar => Some(multiply_pistar(a, b)?),
                    Carrier::Tilde => Some(bullet_multiply(a, b)?),
                    Carrier::Hat => {
                        match star_multiply(
                            &HatElement::Diagram(a.clone()),
                            &HatElement::Diagram(b.clone()),
                        )? {
                            HatElement::Zero => None,
                            HatElement::Diagram(d) => Some(d),
                        }
                    }
                };
                if let Some(p) = product {
                    out.add_term(p, x * y);
                }
            }
        }
        Ok(out)
    }

    /// The operator of the element: `C[I*_k]` on `V^{⊗k}`, the other carriers
    /// on `U^{⊗k}` by their own rule.
    pub fn action_matrix(&self, space: &ActionSpace) -> Result<ExactMatrix> {
        let d = space.dimension();
        let mut out = ExactMatrix::zeros(d, d);
        for (p, c) in &self.terms {
            let m = match self.carrier {
                Carrier::Istar => action_matrix_v(p, space)?,
                Carrier::Pistar => action_matrix_u(p, space, Variant::Plain)?,
                Carrier::Hat => action_matrix_u(p, space, Variant::Hat)?,
                Carrier::Tilde => action_matrix_u(p, space, Variant::Tilde)?,
            };
            out = out.add(&m.scale(c))?;
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let magnitude = c.abs();
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}
