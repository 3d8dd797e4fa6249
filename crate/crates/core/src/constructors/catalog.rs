//! Small groups with fixed canonical Cayley tables. Element 0 is always the
//! identity.
//!
//! * `Z_n`: addition mod n.
//! * `Z_2×Z_2`, `Z_2×Z_4`, `Z_2³`: tuples in lexicographic order, so
//!   `(a, b) ↦ a·|second| + b` (for `Z_2³`, the bits `4a + 2b + c`).
//! * `S3`: the permutations of `{0,1,2}` in lexicographic order
//!   `[012, 021, 102, 120, 201, 210]`, multiplied as `(p·q)(i) = p(q(i))`.
//! * `D4`: index `k < 4` is `r^k`, index `4 + k` is `r^k s`, with
//!   `s r = r⁻¹ s`.
//! * `Q8`: `1, -1, i, -i, j, -j, k, -k` in that order.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::table::{parse_blocks, CayleyTable};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupName {
    Zn(usize),
    Z2xZ2,
    Z2xZ4,
    Z2Cube,
    S3,
    D4,
    Q8,
    File(PathBuf),
}

impl GroupName {
    /// Every built-in group of order at most 8.
    pub fn catalog_up_to_8() -> Vec<GroupName> {
        let mut names: Vec<GroupName> = (1..=8).map(GroupName::Zn).collect();
        names.extend([
            GroupName::Z2xZ2,
            GroupName::Z2xZ4,
            GroupName::Z2Cube,
            GroupName::S3,
            GroupName::D4,
            GroupName::Q8,
        ]);
        names
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Zn(k) => write!(f, "zn:{k}"),
            GroupName::Z2xZ2 => f.write_str("z2xz2"),
            GroupName::Z2xZ4 => f.write_str("z2xz4"),
            GroupName::Z2Cube => f.write_str("z2cube"),
            GroupName::S3 => f.write_str("s3"),
            GroupName::D4 => f.write_str("d4"),
            GroupName::Q8 => f.write_str("q8"),
            GroupName::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl FromStr for GroupName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(k) = s.strip_prefix("zn:") {
            let k: usize = k.parse().map_err(|_| Error::UnknownGroup(s.to_string()))?;
            if k == 0 {
                return Err(Error::InvalidParameters("zn requires k >= 1".into()));
            }
            return Ok(GroupName::Zn(k));
        }
        if let Some(path) = s.strip_prefix("file:") {
            return Ok(GroupName::File(PathBuf::from(path)));
        }
        match s {
            "z2xz2" => Ok(GroupName::Z2xZ2),
            "z2xz4" => Ok(GroupName::Z2xZ4),
            "z2cube" | "z2xz2xz2" => Ok(GroupName::Z2Cube),
            "s3" => Ok(GroupName::S3),
            "d4" => Ok(GroupName::D4),
            "q8" => Ok(GroupName::Q8),
            _ => Err(Error::UnknownGroup(s.to_string())),
        }
    }
}

fn s3_table() -> CayleyTable {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    CayleyTable::from_fn(6, |p, q| {
        let prod = [0, 1, 2].map(|i| PERMS[p][PERMS[q][i]]);
        PERMS.iter().position(|&r| r == prod).expect("S3 is closed")
    })
}

fn d4_table() -> CayleyTable {
    CayleyTable::from_fn(8, |x, y| {
        let (i, a) = (x % 4, x / 4);
        let (j, b) = (y % 4, y / 4);
        let rot = if a == 0 { (i + j) % 4 } else { (i + 4 - j) % 4 };
        rot + 4 * (a ^ b)
    })
}

fn q8_table() -> CayleyTable {
    // Units 1, i, j, k as 0..4; products of units as (sign, unit).
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    CayleyTable::from_fn(8, |x, y| {
        let (ux, nx) = (x / 2, x % 2 == 1);
        let (uy, ny) = (y / 2, y % 2 == 1);
        let (neg, u) = UNIT[ux][uy];
        2 * u + usize::from(neg ^ nx ^ ny)
    })
}

/// The canonical group for `name`.
pub fn catalog(name: &GroupName) -> Result<FiniteGroup> {
    let table = match name {
        GroupName::Zn(0) => return Err(Error::InvalidParameters("zn requires k >= 1".into())),
        GroupName::Zn(k) => {
            let k = *k;
            CayleyTable::from_fn(k, |x, y| (x + y) % k)
        }
        GroupName::Z2xZ2 => CayleyTable::from_fn(4, |x, y| x ^ y),
        GroupName::Z2xZ4 => CayleyTable::from_fn(8, |x, y| {
            let (a, b) = (x / 4, x % 4);
            let (c, d) = (y / 4, y % 4);
            4 * ((a + c) % 2) + (b + d) % 4
        }),
        GroupName::Z2Cube => CayleyTable::from_fn(8, |x, y| x ^ y),
        GroupName::S3 => s3_table(),
        GroupName::D4 => d4_table(),
        GroupName::Q8 => q8_table(),
        GroupName::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let mut blocks = parse_blocks(&text, &path.display().to_string())?;
            if blocks.is_empty() {
                return Err(Error::Format {
                    path: path.display().to_string(),
                    line: 1,
                    column: 1,
                    message: "no table found".into(),
                });
            }
            blocks.swap_remove(0)
        }
    };
    FiniteGroup::from_table(table).ok_or(Error::NotAGroup)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_groups_are_groups_with_identity_zero() {
        for name in GroupName::catalog_up_to_8() {
            let g = catalog(&name).unwrap();
            assert_eq!(g.identity(), 0, "{name}");
        }
    }

    #[test]
    fn catalog_examples() {
        let z5 = catalog(&GroupName::Zn(5)).unwrap();
        assert_eq!(z5.order(), 5);
        assert!(z5.is_commutative());
        let s3 = catalog(&GroupName::S3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_commutative());
        let q8 = catalog(&GroupName::Q8).unwrap();
        assert_eq!(q8.center().len(), 2);
    }

    #[test]
    fn centers_by_brute_force() {
        let s3 = catalog(&GroupName::S3).unwrap();
        let brute: Vec<usize> = (0..6)
            .filter(|&c| (0..6).all(|x| s3.add(c, x) == s3.add(x, c)))
            .collect();
        assert_eq!(brute, vec![0]);
        assert_eq!(s3.center(), brute);
        assert_eq!(catalog(&GroupName::D4).unwrap().center().len(), 2);
    }

    #[test]
    fn automorphism_group_orders() {
        let expected = [
            (GroupName::Z2xZ2, 6),
            (GroupName::Z2xZ4, 8),
            (GroupName::Z2Cube, 168),
            (GroupName::S3, 6),
            (GroupName::D4, 8),
            (GroupName::Q8, 24),
            (GroupName::Zn(8), 4),
        ];
        for (name, count) in expected {
            assert_eq!(catalog(&name).unwrap().automorphisms().len(), count, "{name}");
        }
    }

    #[test]
    fn automorphisms_form_a_group() {
        for name in GroupName::catalog_up_to_8() {
            let g = catalog(&name).unwrap();
            let auts = g.automorphisms();
            assert!(auts[0].is_identity());
            assert!(auts.windows(2).all(|w| w[0] < w[1]));
            for p in &auts {
                assert!(auts.binary_search(&p.inverse()).is_ok(), "{name}");
                for q in &auts {
                    assert!(auts.binary_search(&p.compose(q)).is_ok(), "{name}");
                }
            }
        }
    }

    #[test]
    fn center_is_everything_iff_commutative() {
        for name in GroupName::catalog_up_to_8() {
            let g = catalog(&name).unwrap();
            assert_eq!(g.center().len() == g.order(), g.is_commutative(), "{name}");
        }
    }

    #[test]
    fn group_names_round_trip() {
        for name in GroupName::catalog_up_to_8() {
            assert_eq!(name.to_string().parse::<GroupName>().unwrap(), name);
        }
        assert!("zn:0".parse::<GroupName>().is_err());
        assert!("a5".parse::<GroupName>().is_err());
    }
}
