//! Delannoy paths avoiding peaks and valleys, North-East paths avoiding deep
//! valleys, and k-Schröder paths.
//!
//! * [`path`]: steps, paths, factor patterns, augmentation and regions.
//! * [`family`]: path families and the exhaustive search over them.
//! * [`counting`]: DP tables and closed-form sums with exact arithmetic.
//! * [`bijections`]: the maps `pi`, `delta`, `tau` and a bijectivity verifier.
//! * [`series`]: truncated power series and the k-Schröder generating functions.
//! * [`conjectures`]: comparisons against Dyck paths and inversion sequences.

pub mod bijections;
pub mod conjectures;
pub mod counting;
pub mod error;
pub mod family;
pub mod path;
pub mod series;

pub use error::{ConjectureError, CountError, MapError, PathError, SeriesError};
pub use family::{count_bruteforce, count_memoized, enumerate_paths, PathFamily};
pub use path::{LatticePath, Pattern, Point, Step};
