use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

/// A polynomial in one variable `u` with positive integer coefficients.
///
/// Displayed by descending exponent: `u^9 + 4u^4`, `2u`, `3`, or `0` for
/// the zero polynomial.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<u64, u64>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `coefficient · u^exponent`.
    pub fn monomial(coefficient: u64, exponent: u64) -> Self {
        let mut p = Self::zero();
        p.add_term(coefficient, exponent);
        p
    }

    pub fn add_term(&mut self, coefficient: u64, exponent: u64) {
        if coefficient > 0 {
            *self.terms.entry(exponent).or_insert(0) += coefficient;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponent: u64) -> u64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs by descending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.terms.iter().rev().map(|(&e, &c)| (e, c))
    }

    /// Value at `u = 1`, i.e. the sum of coefficients.
    pub fn eval_at_one(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Derivative at `u = 1`: `Σ coefficient · exponent`.
    pub fn derivative_at_one(&self) -> u64 {
        self.terms.iter().map(|(&e, &c)| e * c).sum()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match (c, e) {
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => f.write_str("u")?,
                (c, 1) => write!(f, "{c}u")?,
                (1, e) => write!(f, "u^{e}")?,
                (c, e) => write!(f, "{c}u^{e}")?,
            }
        }
        Ok(())
    }
}

impl core::ops::Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(c, e);
        }
        out
    }
}

/// A square matrix of polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolynomialMatrix {
    order: usize,
    entries: Vec<Polynomial>,
}

impl PolynomialMatrix {
    pub fn from_entries(order: usize, entries: Vec<Polynomial>) -> Self {
        assert_eq!(entries.len(), order * order, "polynomial matrix dimensions");
        PolynomialMatrix { order, entries }
    }

    /// `p · I_order`.
    pub fn scalar(order: usize, p: &Polynomial) -> Self {
        let entries = (0..order * order)
            .map(|idx| if idx / order == idx % order { p.clone() } else { Polynomial::zero() })
            .collect();
        PolynomialMatrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.order + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Polynomial]> {
        self.entries.chunks(self.order.max(1))
    }
}
