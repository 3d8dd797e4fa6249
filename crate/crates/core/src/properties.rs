//! Structural properties read off concrete tables.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::identity::{builtin, holds, Builtin};
use crate::linear::Biquasigroup;
use crate::table::{CayleyTable, Element};

/// Elements `a` with `a∘a = a`.
pub fn idempotents(t: &CayleyTable) -> Vec<Element> {
    (0..t.order()).filter(|&a| t.get(a, a) == a).collect()
}

/// `(left, right)` neutral elements, where they exist.
pub fn neutral_elements(t: &CayleyTable) -> (Option<Element>, Option<Element>) {
    let n = t.order();
    let mut left = (0..n).filter(|&e| (0..n).all(|x| t.get(e, x) == x));
    let mut right = (0..n).filter(|&e| (0..n).all(|x| t.get(x, e) == x));
    let (l, r) = (left.next(), right.next());
    if t.is_latin_square() {
        debug_assert!(left.next().is_none() && right.next().is_none());
    }
    (l, r)
}

/// The common value of the diagonal, if constant.
pub fn unipotency(t: &CayleyTable) -> Option<Element> {
    let q = t.get(0, 0);
    t.diagonal().all(|d| d == q).then_some(q)
}

fn single_satisfies(t: &CayleyTable, id: Builtin) -> Result<bool> {
    let biq = Biquasigroup::single(t.clone())?;
    Ok(holds(&biq, &builtin(id)))
}

/// Whether a quasigroup table satisfies the Ward law `(x∘z)∘(y∘z) = x∘y`.
pub fn is_ward(t: &CayleyTable) -> Result<bool> {
    single_satisfies(t, Builtin::E1)
}

pub fn is_medial(t: &CayleyTable) -> Result<bool> {
    single_satisfies(t, Builtin::MedialCirc)
}

pub fn is_paramedial(t: &CayleyTable) -> Result<bool> {
    single_satisfies(t, Builtin::ParamedialCirc)
}

pub fn is_left_modular(t: &CayleyTable) -> Result<bool> {
    single_satisfies(t, Builtin::LeftModular)
}

pub fn is_boolean_group(g: &FiniteGroup) -> bool {
    g.is_boolean()
}

/// Everything [`full_report`] computes, per operation.
///
/// Medial and paramedial are reported for each table on its own; whether
/// both tables are linear over one common group is not decided here.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub order: usize,
    pub idempotents_circ: Vec<Element>,
    pub idempotents_star: Vec<Element>,
    pub left_neutral_circ: Option<Element>,
    pub right_neutral_circ: Option<Element>,
    pub left_neutral_star: Option<Element>,
    pub right_neutral_star: Option<Element>,
    pub unipotent_circ: Option<Element>,
    pub unipotent_star: Option<Element>,
    pub commutative_circ: bool,
    pub commutative_star: bool,
    pub ward_circ: bool,
    pub ward_star: bool,
    pub medial_circ: bool,
    pub medial_star: bool,
    pub paramedial_circ: bool,
    pub paramedial_star: bool,
    pub left_modular_circ: bool,
    pub tables_equal: bool,
}

impl PropertyReport {
    /// `(key, value)` pairs in a fixed order, values rendered as text.
    pub fn fields(&self) -> Vec<(&'static str, String)> {
        fn opt(v: Option<Element>) -> String {
            v.map_or_else(|| "none".to_string(), |x| x.to_string())
        }
        fn set(v: &[Element]) -> String {
            let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            format!("{{{}}}", items.join(","))
        }
        vec![
            ("order", self.order.to_string()),
            ("idempotents_circ", set(&self.idempotents_circ)),
            ("idempotents_star", set(&self.idempotents_star)),
            ("left_neutral_circ", opt(self.left_neutral_circ)),
            ("right_neutral_circ", opt(self.right_neutral_circ)),
            ("left_neutral_star", opt(self.left_neutral_star)),
            ("right_neutral_star", opt(self.right_neutral_star)),
            ("unipotent_circ", opt(self.unipotent_circ)),
            ("unipotent_star", opt(self.unipotent_star)),
            ("commutative_circ", self.commutative_circ.to_string()),
            ("commutative_star", self.commutative_star.to_string()),
            ("ward_circ", self.ward_circ.to_string()),
            ("ward_star", self.ward_star.to_string()),
            ("medial_circ", self.medial_circ.to_string()),
            ("medial_star", self.medial_star.to_string()),
            ("paramedial_circ", self.paramedial_circ.to_string()),
            ("paramedial_star", self.paramedial_star.to_string()),
            ("left_modular_circ", self.left_modular_circ.to_string()),
            ("tables_equal", self.tables_equal.to_string()),
        ]
    }
}

pub fn full_report(biq: &Biquasigroup) -> PropertyReport {
    let (circ, star) = (biq.circ(), biq.star());
    let (left_neutral_circ, right_neutral_circ) = neutral_elements(circ);
    let (left_neutral_star, right_neutral_star) = neutral_elements(star);
    let swapped = Biquasigroup::new(star.clone(), star.clone()).expect("star is Latin");
    let on = |id| holds(biq, &builtin(id));
    let report = PropertyReport {
        order: biq.order(),
        idempotents_circ: idempotents(circ),
        idempotents_star: idempotents(star),
        left_neutral_circ,
        right_neutral_circ,
        left_neutral_star,
        right_neutral_star,
        unipotent_circ: unipotency(circ),
        unipotent_star: unipotency(star),
        commutative_circ: circ.is_commutative(),
        commutative_star: star.is_commutative(),
        ward_circ: on(Builtin::E1),
        ward_star: holds(&swapped, &builtin(Builtin::E1)),
        medial_circ: on(Builtin::MedialCirc),
        medial_star: on(Builtin::MedialStar),
        paramedial_circ: on(Builtin::ParamedialCirc),
        paramedial_star: on(Builtin::ParamedialStar),
        left_modular_circ: on(Builtin::LeftModular),
        tables_equal: circ == star,
    };
    debug_assert!(!report.ward_circ || report.unipotent_circ.is_some());
    report
}

/// Rejects tables that are not Latin, naming the first repeated value.
pub fn require_latin(t: &CayleyTable) -> Result<()> {
    match t.latin_violation() {
        Some(detail) => Err(Error::NotLatin { which: "input", detail }),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{catalog, ward_from_group, GroupName};

    fn zn_table(n: usize, f: impl Fn(usize, usize) -> usize) -> CayleyTable {
        CayleyTable::from_fn(n, f)
    }

    #[test]
    fn idempotent_examples() {
        assert_eq!(idempotents(&zn_table(5, |x, y| (x + y) % 5)), vec![0]);
        assert_eq!(idempotents(&zn_table(5, |x, y| (x + 5 - y) % 5)), vec![0]);
        assert_eq!(
            idempotents(&zn_table(5, |x, y| (3 * x + 3 * y) % 5)),
            vec![0, 1, 2, 3, 4]
        );
    }

    #[test]
    fn neutral_examples() {
        assert_eq!(neutral_elements(&zn_table(4, |x, y| (x + y) % 4)), (Some(0), Some(0)));
        assert_eq!(neutral_elements(&zn_table(4, |x, y| (x + 4 - y) % 4)), (None, Some(0)));
        assert_eq!(neutral_elements(&zn_table(4, |x, y| (y + 4 - x) % 4)), (Some(0), None));
    }

    #[test]
    fn unipotency_examples() {
        assert_eq!(unipotency(&zn_table(6, |x, y| (x + 6 - y) % 6)), Some(0));
        assert_eq!(unipotency(&zn_table(3, |x, y| (x + y) % 3)), None);
        assert_eq!(unipotency(&zn_table(5, |x, y| (3 * x + 3 * y) % 5)), None);
    }

    #[test]
    fn ward_examples() {
        let s3 = catalog(&GroupName::S3).unwrap();
        assert!(is_ward(&ward_from_group(&s3)).unwrap());
        assert!(!is_ward(&zn_table(5, |x, y| (x + y) % 5)).unwrap());
        assert!(is_ward(&zn_table(1, |_, _| 0)).unwrap());
        let not_latin = CayleyTable::new(2, vec![0, 1, 0, 1]).unwrap();
        assert!(is_ward(&not_latin).is_err());
    }

    #[test]
    fn report_subtraction_mod_5() {
        let sub = |x: usize, y: usize| (x + 5 - y) % 5;
        let r = full_report(&Biquasigroup::from_fns(5, sub, sub).unwrap());
        assert!(r.ward_circ && r.ward_star);
        assert_eq!((r.unipotent_circ, r.unipotent_star), (Some(0), Some(0)));
        assert_eq!(r.right_neutral_circ, Some(0));
        assert!(r.medial_circ && r.medial_star);
        assert!(r.tables_equal);
    }

    #[test]
    fn report_e9_example() {
        let r = full_report(&Biquasigroup::from_fns(5, |x, y| (x + y) % 5, |x, y| (x + 2 * y) % 5).unwrap());
        assert_eq!((r.left_neutral_circ, r.right_neutral_circ), (Some(0), Some(0)));
        assert_eq!((r.left_neutral_star, r.right_neutral_star), (None, Some(0)));
        assert_eq!((r.unipotent_circ, r.unipotent_star), (None, None));
    }

    #[test]
    fn report_s3_ward() {
        let s3 = catalog(&GroupName::S3).unwrap();
        let w = ward_from_group(&s3);
        let r = full_report(&Biquasigroup::single(w).unwrap());
        assert!(r.ward_circ && r.ward_star);
        assert!(!r.medial_circ);
        assert!(!r.left_modular_circ);
    }

    #[test]
    fn boolean_examples() {
        assert!(is_boolean_group(&catalog(&GroupName::Z2xZ2).unwrap()));
        assert!(!is_boolean_group(&catalog(&GroupName::Zn(4)).unwrap()));
        assert!(is_boolean_group(&catalog(&GroupName::Zn(2)).unwrap()));
    }
}
