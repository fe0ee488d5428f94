//! Categories of partitions and the representation theory of easy quantum groups.

pub mod dsu;
pub mod error;
pub mod fusion;
pub mod partition;

pub use error::{Error, Result};
pub use partition::{Color, Corner, Partition};
pub mod categories;
pub mod limits;
pub mod linalg;
pub mod model;
pub mod structure;

pub use categories::{Builtin, Category, Membership};
pub use limits::Limits;
