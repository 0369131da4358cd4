//! Finite quandles stored as operation tables.
//!
//! Elements of a quandle of order `k` are the integers `0..k`. The table
//! entry at `(x, y)` is `x ▷ y`; column `y` is the right translation
//! `x ↦ x ▷ y`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Default cap on the source order for homomorphism enumeration.
pub const DEFAULT_HOM_SOURCE_CAP: usize = 8;

/// The three quandle axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// `x ▷ x = x`.
    Idempotence = 1,
    /// Every right translation is a permutation.
    RightInvertibility = 2,
    /// `(x ▷ y) ▷ z = (x ▷ z) ▷ (y ▷ z)`.
    SelfDistributivity = 3,
}

impl Axiom {
    pub fn index(self) -> u8 {
        self as u8
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::Idempotence => "idempotence",
            Axiom::RightInvertibility => "right-translation bijectivity",
            Axiom::SelfDistributivity => "right self-distributivity",
        };
        write!(f, "axiom {} ({name})", self.index())
    }
}

/// A single failed axiom instance.
///
/// Witnesses: `[x]` for idempotence, `[y]` for the column that is not a
/// permutation, `[x, y, z]` for self-distributivity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// First violation of the given axiom, if any.
    pub fn first(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}

fn check_structure(table: &[Vec<usize>]) -> Result<usize> {
    let k = table.len();
    if k == 0 {
        return Err(Error::MalformedTable("table is empty".into()));
    }
    for (x, row) in table.iter().enumerate() {
        if row.len() != k {
            return Err(Error::MalformedTable(format!(
                "row {x} has {} entries, expected {k}",
                row.len()
            )));
        }
        if let Some((y, &v)) = row.iter().enumerate().find(|(_, &v)| v >= k) {
            return Err(Error::MalformedTable(format!(
                "entry ({x},{y}) = {v} is out of range 0..{k}"
            )));
        }
    }
    Ok(k)
}

/// Checks the three quandle axioms on a square table.
///
/// Structural problems (non-square, out-of-range entries) are reported as
/// an `Err`; axiom failures are collected in the report.
pub fn validate_quandle(table: &[Vec<usize>]) -> Result<ValidationReport> {
    let k = check_structure(table)?;
    let mut violations = Vec::new();

    for (x, row) in table.iter().enumerate() {
        if row[x] != x {
            violations.push(Violation { axiom: Axiom::Idempotence, witness: vec![x] });
        }
    }

    let mut seen = vec![false; k];
    for y in 0..k {
        seen.iter_mut().for_each(|s| *s = false);
        let mut bijective = true;
        for row in table {
            let v = row[y];
            if seen[v] {
                bijective = false;
                break;
            }
            seen[v] = true;
        }
        if !bijective {
            violations.push(Violation { axiom: Axiom::RightInvertibility, witness: vec![y] });
        }
    }

    for x in 0..k {
        for y in 0..k {
            for z in 0..k {
                let lhs = table[table[x][y]][z];
                let rhs = table[table[x][z]][table[y][z]];
                if lhs != rhs {
                    violations.push(Violation {
                        axiom: Axiom::SelfDistributivity,
                        witness: vec![x, y, z],
                    });
                }
            }
        }
    }

    Ok(ValidationReport { violations })
}

/// A validated finite quandle.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quandle {
    order: usize,
    // row-major, op[x * order + y] = x ▷ y
    op: Vec<usize>,
    // inv[z * order + y] = the unique x with x ▷ y = z
    inv: Vec<usize>,
}

impl fmt::Debug for Quandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Quandle").field("order", &self.order).field("table", &self.rows()).finish()
    }
}

impl Quandle {
    /// Builds a quandle from a table, rejecting structural errors and axiom
    /// violations.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let report = validate_quandle(&table)?;
        if let Some(v) = report.violations.into_iter().next() {
            return Err(Error::NotAQuandle { axiom: v.axiom.index(), witness: v.witness });
        }
        Ok(Self::from_valid_rows(table))
    }

    fn from_valid_rows(table: Vec<Vec<usize>>) -> Self {
        let order = table.len();
        let op: Vec<usize> = table.into_iter().flatten().collect();
        let mut inv = vec![0; order * order];
        for x in 0..order {
            for y in 0..order {
                inv[op[x * order + y] * order + y] = x;
            }
        }
        Quandle { order, op, inv }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `x ▷ y`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op[x * self.order + y]
    }

    /// The unique `x` with `x ▷ y = z`.
    #[inline]
    pub fn left_divide(&self, z: usize, y: usize) -> usize {
        self.inv[z * self.order + y]
    }

    /// Range-checked variant of [`Quandle::left_divide`].
    pub fn try_left_divide(&self, z: usize, y: usize) -> Result<usize> {
        self.check_element(z)?;
        self.check_element(y)?;
        Ok(self.left_divide(z, y))
    }

    pub fn check_element(&self, e: usize) -> Result<()> {
        if e < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { element: e, order: self.order })
        }
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.op.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// Column `y` as a permutation of the elements.
    pub fn right_translation(&self, y: usize) -> Vec<usize> {
        (0..self.order).map(|x| self.op(x, y)).collect()
    }

    /// True when `images` satisfies `images[x ▷ y] = images[x] ▷ images[y]`
    /// into `target`.
    pub fn is_hom_into(&self, target: &Quandle, images: &[usize]) -> bool {
        images.len() == self.order
            && images.iter().all(|&v| v < target.order)
            && (0..self.order).all(|x| {
                (0..self.order)
                    .all(|y| images[self.op(x, y)] == target.op(images[x], images[y]))
            })
    }
}

/// The dihedral quandle of order `n`: `x ▷ y = 2y − x mod n`.
pub fn dihedral(n: usize) -> Result<Quandle> {
    if n == 0 {
        return Err(Error::InvalidArgument("dihedral quandle order must be at least 1".into()));
    }
    let table = (0..n).map(|x| (0..n).map(|y| (2 * y + n - x) % n).collect()).collect();
    Ok(Quandle::from_valid_rows(table))
}

/// The trivial quandle of order `n`: `x ▷ y = x`.
pub fn trivial_quandle(n: usize) -> Result<Quandle> {
    if n == 0 {
        return Err(Error::InvalidArgument("trivial quandle order must be at least 1".into()));
    }
    let table = (0..n).map(|x| vec![x; n]).collect();
    Ok(Quandle::from_valid_rows(table))
}

/// A quandle together with an ordered list of basepoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointedQuandle {
    base: Quandle,
    basepoints: Vec<usize>,
}

impl PointedQuandle {
    pub fn new(base: Quandle, basepoints: Vec<usize>) -> Result<Self> {
        for &b in &basepoints {
            base.check_element(b)?;
        }
        Ok(PointedQuandle { base, basepoints })
    }

    pub fn base(&self) -> &Quandle {
        &self.base
    }

    pub fn basepoints(&self) -> &[usize] {
        &self.basepoints
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }
}

/// A set map between quandles, stored by its image array.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuandleMap {
    pub source_order: usize,
    pub target_order: usize,
    pub images: Vec<usize>,
}

impl QuandleMap {
    pub fn new(target_order: usize, images: Vec<usize>) -> Self {
        QuandleMap { source_order: images.len(), target_order, images }
    }

    pub fn identity(order: usize) -> Self {
        Self::new(order, (0..order).collect())
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &QuandleMap) -> QuandleMap {
        QuandleMap {
            source_order: inner.source_order,
            target_order: self.target_order,
            images: inner.images.iter().map(|&x| self.images[x]).collect(),
        }
    }
}

/// Enumerates `hom(X, Y)` in lexicographic order of image arrays.
pub fn enumerate_quandle_homs(source: &Quandle, target: &Quandle) -> Result<Vec<QuandleMap>> {
    enumerate_quandle_homs_capped(source, target, DEFAULT_HOM_SOURCE_CAP)
}

pub fn enumerate_quandle_homs_capped(
    source: &Quandle,
    target: &Quandle,
    source_cap: usize,
) -> Result<Vec<QuandleMap>> {
    let fixed = vec![None; source.order()];
    HomSearch::new(source, target, source_cap)?.run(fixed)
}

/// Enumerates pointed homomorphisms: maps sending basepoint `i` of the
/// source to basepoint `i` of the target.
pub fn enumerate_pointed_homs(
    source: &PointedQuandle,
    target: &PointedQuandle,
) -> Result<Vec<QuandleMap>> {
    enumerate_pointed_homs_capped(source, target, DEFAULT_HOM_SOURCE_CAP)
}

pub fn enumerate_pointed_homs_capped(
    source: &PointedQuandle,
    target: &PointedQuandle,
    source_cap: usize,
) -> Result<Vec<QuandleMap>> {
    if source.basepoints.len() != target.basepoints.len() {
        return Err(Error::ArityMismatch {
            expected: source.basepoints.len(),
            found: target.basepoints.len(),
        });
    }
    let search = HomSearch::new(&source.base, &target.base, source_cap)?;
    let mut fixed = vec![None; source.order()];
    for (&s, &t) in source.basepoints.iter().zip(&target.basepoints) {
        match fixed[s] {
            Some(prev) if prev != t => return Ok(Vec::new()),
            _ => fixed[s] = Some(t),
        }
    }
    search.run(fixed)
}

struct HomSearch<'a> {
    source: &'a Quandle,
    target: &'a Quandle,
    // checks[x]: pairs (a, b) whose law becomes fully defined once x is assigned
    checks: Vec<Vec<(usize, usize)>>,
}

impl<'a> HomSearch<'a> {
    fn new(source: &'a Quandle, target: &'a Quandle, cap: usize) -> Result<Self> {
        if source.order() > cap {
            return Err(Error::Capacity { what: "homomorphism source order", limit: cap });
        }
        let k = source.order();
        let mut checks = vec![Vec::new(); k];
        for a in 0..k {
            for b in 0..k {
                let last = a.max(b).max(source.op(a, b));
                checks[last].push((a, b));
            }
        }
        Ok(HomSearch { source, target, checks })
    }

    fn run(&self, fixed: Vec<Option<usize>>) -> Result<Vec<QuandleMap>> {
        let mut out = Vec::new();
        let mut images = vec![0; self.source.order()];
        self.extend(0, &fixed, &mut images, &mut out);
        Ok(out)
    }

    fn extend(
        &self,
        x: usize,
        fixed: &[Option<usize>],
        images: &mut Vec<usize>,
        out: &mut Vec<QuandleMap>,
    ) {
        if x == images.len() {
            out.push(QuandleMap::new(self.target.order(), images.clone()));
            return;
        }
        let candidates = match fixed[x] {
            Some(v) => v..v + 1,
            None => 0..self.target.order(),
        };
        for v in candidates {
            images[x] = v;
            let consistent = self.checks[x].iter().all(|&(a, b)| {
                images[self.source.op(a, b)] == self.target.op(images[a], images[b])
            });
            if consistent {
                self.extend(x + 1, fixed, images, out);
            }
        }
    }
}
