//! The group catalog and every named construction family.

mod catalog;
mod families;

pub use catalog::{catalog, GroupName};
pub use families::{
    construct, derived_group, e5_example, e7_example, e9_example, extend_e4, family_c71, family_c72, family_e8_zn,
    family_e9_zn, inverse_op_biq, t26_construct, ward_from_group, Family, FamilyParams,
};
