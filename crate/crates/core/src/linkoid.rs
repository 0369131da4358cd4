//! Linkoid diagrams as combinatorial data: arcs, signed crossings and the
//! ordered list of open components.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// An arc index, `0..arc_count`.
pub type Arc = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// A crossing: the under-strand enters on `under_in`, passes below `over`
/// and leaves on `under_out`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub under_in: Arc,
    pub over: Arc,
    pub under_out: Arc,
    pub sign: Sign,
}

impl Crossing {
    pub fn positive(under_in: Arc, over: Arc, under_out: Arc) -> Self {
        Crossing { under_in, over, under_out, sign: Sign::Positive }
    }

    pub fn negative(under_in: Arc, over: Arc, under_out: Arc) -> Self {
        Crossing { under_in, over, under_out, sign: Sign::Negative }
    }

    /// The coloring relation imposed by this crossing.
    ///
    /// Positive: `under_in ▷ over = under_out`.
    /// Negative: `under_out ▷ over = under_in`.
    pub fn relation(&self) -> Relation {
        match self.sign {
            Sign::Positive => Relation { a: self.under_in, b: self.over, c: self.under_out },
            Sign::Negative => Relation { a: self.under_out, b: self.over, c: self.under_in },
        }
    }
}

/// `color(a) ▷ color(b) = color(c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Relation {
    pub a: Arc,
    pub b: Arc,
    pub c: Arc,
}

/// Leg and head arcs of an open component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OpenComponent {
    pub leg: Arc,
    pub head: Arc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Chirality {
    /// The new crossing is `a ▷ a = a'`.
    OverFirst,
    /// The new crossing is `a ▷ a' = a'`.
    UnderFirst,
}

impl core::str::FromStr for Chirality {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "over_first" | "over-first" => Ok(Chirality::OverFirst),
            "under_first" | "under-first" => Ok(Chirality::UnderFirst),
            other => Err(Error::InvalidArgument(format!("unknown chirality `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkoidDiagram {
    arc_count: usize,
    crossings: Vec<Crossing>,
    open_components: Vec<OpenComponent>,
}

impl LinkoidDiagram {
    /// Builds a diagram after range-checking every arc reference.
    pub fn new(
        arc_count: usize,
        crossings: Vec<Crossing>,
        open_components: Vec<OpenComponent>,
    ) -> Result<Self> {
        let check = |arc: Arc| {
            if arc < arc_count {
                Ok(())
            } else {
                Err(Error::ArcOutOfRange { arc, arc_count })
            }
        };
        for c in &crossings {
            check(c.under_in)?;
            check(c.over)?;
            check(c.under_out)?;
        }
        for o in &open_components {
            check(o.leg)?;
            check(o.head)?;
        }
        Ok(LinkoidDiagram { arc_count, crossings, open_components })
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn open_components(&self) -> &[OpenComponent] {
        &self.open_components
    }

    /// Number of basepoints a pointed quandle needs to color this diagram.
    pub fn basepoint_arity(&self) -> usize {
        2 * self.open_components.len()
    }

    /// Basepoint arcs in order `l_1, h_1, …, l_n, h_n`.
    pub fn basepoint_arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.open_components.iter().flat_map(|o| [o.leg, o.head])
    }
}

/// One relation per crossing, in crossing order.
pub fn crossing_relations(d: &LinkoidDiagram) -> Vec<Relation> {
    d.crossings.iter().map(Crossing::relation).collect()
}

/// The 1-linkoid of type T̃(p,2).
///
/// Arc `i - 1` carries generator `x_i`. The first crossing gives
/// `x_2 ▷ x_{p+1} = x_p`, followed by `x_{i+2} ▷ x_{i+1} = x_i` for
/// `i = 1..p-1`. Leg is `x_1`, head is `x_{p+1}`.
pub fn torus_linkoid(p: usize) -> Result<LinkoidDiagram> {
    if p == 0 {
        return Err(Error::InvalidArgument("torus linkoid parameter p must be at least 1".into()));
    }
    let mut crossings = Vec::with_capacity(p);
    crossings.push(Crossing::positive(1, p, p - 1));
    for i in 1..p {
        crossings.push(Crossing::positive(i + 1, i, i - 1));
    }
    LinkoidDiagram::new(p + 1, crossings, alloc::vec![OpenComponent { leg: 0, head: p }])
}

/// Inserts a Reidemeister I kink on `arc`, splitting off a new arc `a'`
/// with index `arc_count`.
///
/// Heads sitting on `arc` move to `a'`; legs stay.
pub fn add_r1_kink(d: &LinkoidDiagram, arc: Arc, chirality: Chirality) -> Result<LinkoidDiagram> {
    if arc >= d.arc_count {
        return Err(Error::ArcOutOfRange { arc, arc_count: d.arc_count });
    }
    let split = d.arc_count;
    let mut crossings = d.crossings.clone();
    crossings.push(match chirality {
        Chirality::OverFirst => Crossing::positive(arc, arc, split),
        Chirality::UnderFirst => Crossing::positive(arc, split, split),
    });
    let open_components = d
        .open_components
        .iter()
        .map(|o| OpenComponent { leg: o.leg, head: if o.head == arc { split } else { o.head } })
        .collect();
    Ok(LinkoidDiagram { arc_count: split + 1, crossings, open_components })
}
