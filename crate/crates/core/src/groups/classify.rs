use std::collections::BTreeMap;

use super::{GroupError, GroupTable};

/// The groups of order dividing 16 that occur as inertial quotients of
/// blocks with defect group `C3 x C3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SmallGroupType {
    Trivial,
    C2,
    C2xC2,
    C4,
    C8,
    D8,
    Q8,
    SD16,
}

impl std::fmt::Display for SmallGroupType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SmallGroupType::Trivial => "1",
            SmallGroupType::C2 => "C2",
            SmallGroupType::C2xC2 => "C2xC2",
            SmallGroupType::C4 => "C4",
            SmallGroupType::C8 => "C8",
            SmallGroupType::D8 => "D8",
            SmallGroupType::Q8 => "Q8",
            SmallGroupType::SD16 => "SD16",
        };
        f.write_str(s)
    }
}

/// Identifies the group from its order, commutativity and the number of
/// elements of each order.
pub fn classify_small_group(g: &GroupTable) -> Result<SmallGroupType, GroupError> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for x in 0..g.order() {
        *counts.entry(g.element_order(x)).or_default() += 1;
    }
    let c: Vec<(usize, usize)> = counts.into_iter().collect();
    use SmallGroupType::*;
    let t = match (g.order(), g.is_abelian(), c.as_slice()) {
        (1, _, _) => Trivial,
        (2, _, _) => C2,
        (4, true, [(1, 1), (2, 3)]) => C2xC2,
        (4, true, [(1, 1), (2, 1), (4, 2)]) => C4,
        (8, true, [(1, 1), (2, 1), (4, 2), (8, 4)]) => C8,
        (8, false, [(1, 1), (2, 5), (4, 2)]) => D8,
        (8, false, [(1, 1), (2, 1), (4, 6)]) => Q8,
        (16, false, [(1, 1), (2, 5), (4, 6), (8, 4)]) => SD16,
        (order, _, _) => return Err(GroupError::Unclassified { order }),
    };
    Ok(t)
}
