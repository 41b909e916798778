use super::{cyclic, direct_product, semidirect, GroupAction, GroupTable};

/// `P = <r> x <s> = C3 x C3`, `E = <t> = C2` acting by inversion, and the
/// Frobenius group `H = P ⋊ E` of order 18.
#[derive(Clone, Debug)]
pub struct FrobeniusSetup {
    pub p: GroupTable,
    pub e: GroupTable,
    pub action: GroupAction,
    pub h: GroupTable,
    /// Index in `H` of each element of `P`.
    pub p_in_h: Vec<usize>,
    pub r: usize,
    pub s: usize,
    pub t: usize,
}

pub fn frobenius_c3xc3_c2() -> FrobeniusSetup {
    let p = direct_product(&cyclic(3, "r"), &cyclic(3, "s"));
    let e = cyclic(2, "t");
    let perms = vec![(0..p.order()).collect(), (0..p.order()).map(|x| p.inv(x)).collect()];
    let action = GroupAction::new(e.clone(), p.clone(), perms).expect("inversion is an automorphism of an abelian group");
    let h = semidirect(&action);
    let p_in_h = (0..p.order()).map(|x| x * e.order()).collect();
    let idx = |l: &str| h.index_of(l).expect("label present");
    FrobeniusSetup {
        r: idx("r"),
        s: idx("s"),
        t: idx("t"),
        p,
        e,
        action,
        h,
        p_in_h,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_of_h() {
        let f = frobenius_c3xc3_c2();
        let h = &f.h;
        assert_eq!(h.element_order(f.r), 3);
        assert_eq!(h.element_order(f.t), 2);
        assert_eq!(h.mul(f.r, f.s), h.mul(f.s, f.r));
        assert_eq!(h.conjugate(f.t, f.r), h.inv(f.r));
        assert_eq!(h.conjugate(f.t, f.s), h.inv(f.s));
        assert!(h.is_normal(&f.p_in_h));
        assert_eq!(h.generated(&[f.r, f.s, f.t]).len(), 18);
    }
}
