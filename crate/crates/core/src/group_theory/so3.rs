//! Recognition of the finite rotation groups and the graph-level
//! consequences for a homologically trivial action.

use std::fmt;

use serde::{Serialize, Serializer};

use super::finite_group::{is_isomorphic, FiniteGroup};
use crate::error::{Error, Result};

/// Isomorphism type of a finite subgroup of SO(3). `Dihedral` carries
/// the group order `2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SO3Class {
    Cyclic(usize),
    Dihedral(usize),
    Tetrahedral,
    Octahedral,
    Icosahedral,
    NotSO3,
}

impl SO3Class {
    pub fn order(&self) -> Option<usize> {
        match *self {
            SO3Class::Cyclic(n) | SO3Class::Dihedral(n) => Some(n),
            SO3Class::Tetrahedral => Some(12),
            SO3Class::Octahedral => Some(24),
            SO3Class::Icosahedral => Some(60),
            SO3Class::NotSO3 => None,
        }
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self, SO3Class::Cyclic(_))
    }

    /// Short type name with dihedral groups indexed by rotation count:
    /// `Dihedral(12)` is `D6`, the Klein four-group is `D2`.
    pub fn short_name(&self) -> String {
        match *self {
            SO3Class::Cyclic(n) => format!("Z{n}"),
            SO3Class::Dihedral(n) => format!("D{}", n / 2),
            SO3Class::Tetrahedral => "A4".into(),
            SO3Class::Octahedral => "S4".into(),
            SO3Class::Icosahedral => "A5".into(),
            SO3Class::NotSO3 => "NotSO3".into(),
        }
    }
}

impl fmt::Display for SO3Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SO3Class::Cyclic(n) => write!(f, "Cyclic({n})"),
            SO3Class::Dihedral(n) => write!(f, "Dihedral({n})"),
            SO3Class::Tetrahedral => write!(f, "Tetrahedral"),
            SO3Class::Octahedral => write!(f, "Octahedral"),
            SO3Class::Icosahedral => write!(f, "Icosahedral"),
            SO3Class::NotSO3 => write!(f, "NotSO3"),
        }
    }
}

impl Serialize for SO3Class {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn is_dihedral(g: &FiniteGroup) -> bool {
    let order = g.order();
    if order < 4 || !order.is_multiple_of(2) {
        return false;
    }
    let n = order / 2;
    let rotations: Vec<usize> = (0..order).filter(|&a| g.element_order(a) == n).collect();
    let involutions: Vec<usize> = (0..order).filter(|&a| g.element_order(a) == 2).collect();
    rotations.iter().any(|&r| {
        let cyclic = g.generated(&[r]);
        let r_inv = g.inverse(r);
        involutions
            .iter()
            .any(|&s| cyclic.binary_search(&s).is_err() && g.mul(g.mul(s, r), s) == r_inv)
    })
}

pub fn classify_so3(g: &FiniteGroup) -> SO3Class {
    if g.is_cyclic() {
        return SO3Class::Cyclic(g.order());
    }
    if is_dihedral(g) {
        return SO3Class::Dihedral(g.order());
    }
    let models = [
        (12, SO3Class::Tetrahedral, 4, true),
        (24, SO3Class::Octahedral, 4, false),
        (60, SO3Class::Icosahedral, 5, true),
    ];
    for (order, class, points, even) in models {
        if g.order() == order {
            let model = if even {
                FiniteGroup::alternating(points)
            } else {
                FiniteGroup::symmetric(points)
            };
            if is_isomorphic(g, &model).unwrap_or(false) {
                return class;
            }
        }
    }
    SO3Class::NotSO3
}

/// How many global fixed points on a 0-handle are available for
/// attaching 1-handles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AttachmentBound {
    /// A fixed circle: any number of attachment points.
    Unbounded,
    AtMostTwo,
}

/// Cyclic rotation groups fix an axis pointwise; every other finite
/// rotation group has at most two global fixed points.
pub fn attachment_bound(c: SO3Class) -> Result<AttachmentBound> {
    match c {
        SO3Class::NotSO3 => Err(Error::NotSO3),
        SO3Class::Cyclic(_) => Ok(AttachmentBound::Unbounded),
        SO3Class::Dihedral(_)
        | SO3Class::Tetrahedral
        | SO3Class::Octahedral
        | SO3Class::Icosahedral => Ok(AttachmentBound::AtMostTwo),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem1Verdict {
    /// Genus ≥ 2 forces a graph that is neither a segment nor a circle,
    /// which a group with at most two attachment points cannot act on
    /// homologically trivially.
    Contradiction,
    ConsistentCyclic,
    OutsideHypotheses,
}

impl fmt::Display for Theorem1Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem1Verdict::Contradiction => "Contradiction",
            Theorem1Verdict::ConsistentCyclic => "Consistent-Cyclic",
            Theorem1Verdict::OutsideHypotheses => "OutsideHypotheses",
        })
    }
}

impl Serialize for Theorem1Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn theorem1_verdict(genus: usize, c: SO3Class) -> Result<Theorem1Verdict> {
    let bound = attachment_bound(c)?;
    if genus <= 1 {
        return Ok(Theorem1Verdict::OutsideHypotheses);
    }
    Ok(match bound {
        AttachmentBound::Unbounded => Theorem1Verdict::ConsistentCyclic,
        AttachmentBound::AtMostTwo => Theorem1Verdict::Contradiction,
    })
}
