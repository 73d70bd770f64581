//! Pattern avoidance in integer partitions: containment, exact enumeration,
//! rational generating functions and asymptotic counts.

pub mod asymptotics;
pub mod containment;
pub mod enumeration;
pub mod equivalence;
pub mod error;
pub mod gf;
pub mod partition;
pub mod ratfunc;
pub mod recurrence;
pub mod shape;

pub use asymptotics::{predict, Prediction};
pub use containment::{avoids, contains, witness, DeletionWitness};
pub use enumeration::CountSeries;
pub use equivalence::{FsMultiset, RookPoly};
pub use error::{Error, Result};
pub use gf::{gf_avoid, Op, ThetaWord};
pub use partition::{parse_partition, Partition, RectDecomp, ShapeClass};
pub use ratfunc::{rf_equal, IntPoly, RatFunc};
pub use shape::{shape_of, StrictShape};
