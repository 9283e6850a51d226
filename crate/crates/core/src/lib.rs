//! Cluster seeds, generalized minors and total positivity criteria for
//! (partial) flag varieties of simply-laced groups, in exact arithmetic.

pub mod error;
pub mod exactalg;
pub mod flagpos;
pub mod repmat;
pub mod rootsys;
pub mod seeds;
pub mod selfcheck;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/root-systems.md")]
    mod root_systems {}
    #[doc = include_str!("../../../book/src/minors.md")]
    mod minors {}
    #[doc = include_str!("../../../book/src/seeds.md")]
    mod seeds {}
    #[doc = include_str!("../../../book/src/positivity.md")]
    mod positivity {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
