//! An executable Stone-duality engine over finitely representable Boolean
//! algebras: finite algebras, finite–cofinite algebras, and their flat
//! products, together with their dual spaces, ideal lattices, and the
//! functors connecting them. Every operation is exact on this
//! representation class; nothing is approximated.

pub mod algebra;
pub mod catalog;
pub mod dz;
pub mod error;
pub mod hom;
pub mod ideal;
pub mod json;
pub mod laws;
pub mod mz;
pub mod space;
pub mod spaces;
pub mod tarski;

pub use algebra::{Algebra, AlgebraDescriptor, Block, BlockElement, Element, Universe};
pub use dz::{DzAlgebra, DzMorphism, Level, Verdict, Witness};
pub use error::{Error, Result};
pub use hom::Homomorphism;
pub use ideal::{Ideal, IdealBlock, IndexSet, JoinlessWitness, LbaPair, RefuterOutcome};
pub use laws::{LawConfig, Report};
pub use mz::{MBoolMorphism, MapLevels, MzPresentation};
pub use space::{CharKind, Character, FcDefault, MapBlock, PointMap, PointSet, PointSetBlock};
pub use spaces::{HatMap, PointId, SpaceBlock, SpaceMap, SpacePoint, SpacePresentation};
