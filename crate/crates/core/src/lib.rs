pub mod arith;
pub mod error;

pub use arith::{BigIntPoly, Dyadic, OpenInterval};
pub use error::{Error, Result};
pub mod descartes;
pub mod sturm;

pub use descartes::{sign_var_count, var, VarCount};
pub use sturm::{check_isolation, sturm_chain, sturm_count, SturmChain};
pub mod isolate;

pub use isolate::{
    cauchy_interval, dsc2, dsc_classic, isolate, isolate_observed, newton_snap, ActiveTask,
    Algorithm, Endpoint, Isolation, RootDescriptor, SubdivisionStats,
};
pub mod bench;
pub mod families;
pub mod par;

pub use families::{generate_family, Family};
pub use par::Execution;
