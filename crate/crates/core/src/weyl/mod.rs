//! Normal-form arithmetic in the Weyl algebra and its localization.

mod element;

pub use element::{
    right_structure_constant, structure_constant, BElement, Coeff, GradedElement, Homogeneous,
    Side, WeylElement,
};
