//! Crepant star triangulations of reflexive lattice polytopes, Mori cones of
//! the resulting toric varieties and intersection rings of hypersurfaces.

pub mod arith;
pub mod chow;
pub mod cli;
pub mod error;
pub mod hodge;
pub mod hypersurface;
pub mod input;
pub mod ipsimplex;
pub mod kreuzer;
pub mod lp;
pub mod mori;
pub mod polytope;
pub mod triangulate;
pub mod words;

pub use error::{Error, Result};
