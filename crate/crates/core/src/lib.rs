//! Executable algebra of commutative monoids viewed as ℕ₀-semimodules.
//!
//! * [`monoid`], [`hom`], [`product`], [`free`]: finite monoids as addition
//!   tables, their homomorphisms, biproducts and free ℕ₀-vectors.
//! * [`congruence`]: congruence closure, quotients, coequalizers and kernel
//!   pairs on finite monoids.
//! * [`nat_coeq`]: coequalizers of multiplication maps on ℕ₀, with
//!   re-checkable certificates.
//! * [`semiideal`]: period, footing and canonical generators of semiideals of ℕ₀.
//! * [`tensor`], [`coherence`]: tensor products via presentations, and the
//!   associativity, symmetry and hom-adjunction isomorphisms.

pub mod budget;
pub mod catalog;
pub mod coherence;
pub mod congruence;
pub mod error;
pub mod free;
pub mod hom;
pub mod monoid;
pub mod nat_coeq;
pub mod presented;
pub mod product;
pub mod semiideal;
pub mod tensor;
pub mod union_find;
pub mod verify;

pub use budget::Budget;
pub use error::{Error, Result};
pub use hom::{enumerate_homs, hom_check, HomMonoid, MonoidHom};
pub use monoid::{validate_monoid, FiniteCommMonoid, MonoidJson, Orbit};
