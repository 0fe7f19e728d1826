//! Uniformly distributed sequences of partitions of [0,1].
//!
//! Splitting the interval(s) of maximal length of a partition
//! homothetically to a fixed finite partition rho — Kakutani's
//! alpha-splitting when rho has two parts — and iterating from the
//! trivial partition produces a uniformly distributed sequence of
//! partitions. This crate builds those sequences in exact rational
//! arithmetic, measures their discrepancy, and turns them into
//! uniformly distributed point sequences by sequential random
//! reordering, with the van der Corput sequence and the lexicographic
//! order as reference constructions.
//!
//! Quick tour:
//!
//! ```
//! use kakutani::prelude::*;
//!
//! // Kakutani splitting with alpha = 1/3: kappa_2 = {0, 1/3, 5/9, 1}
//! let rule = SplitRule::kakutani(ratio(1, 3))?;
//! let kappa2 = iterate(&rule, 2)?;
//! assert_eq!(kappa2.breakpoints()[2], ratio(5, 9));
//!
//! // discrepancy of its points
//! let points = points_of(&kappa2, Convention::RightEndpoints);
//! let report = extreme_discrepancy(&points)?;
//! assert!(report.extreme <= ratio(1, 2));
//! # Ok::<(), kakutani::Error>(())
//! ```
//!
//! See the `examples/` directory for one runnable example per
//! capability: refinement, engine statistics, discrepancy convergence,
//! random reorderings, the van der Corput sequence and the
//! non-convergent starting partition.

pub mod analysis;
pub mod cli;
pub mod discrepancy;
pub mod engine;
pub mod error;
pub mod partition;
pub mod ratio;
pub mod rule;
pub mod sequences;
pub mod verify;

pub use error::{Error, Result};

/// The common imports.
pub mod prelude {
    pub use crate::analysis::{
        convergence_report, density_bounds_check, empirical_measure, counterexample_series,
    };
    pub use crate::discrepancy::{extreme_discrepancy, star_discrepancy, DiscrepancyReport};
    pub use crate::engine::{advance_to_count, kakutani, run, Refiner, StepStats};
    pub use crate::error::{Error, Result};
    pub use crate::partition::{
        full_subdivide, interval_address, iterate, points_of, refine_from, rho_refine,
        Convention, Interval, Partition, PointSet,
    };
    pub use crate::ratio::{parse_ratio, ratio, Ratio};
    pub use crate::rule::SplitRule;
    pub use crate::sequences::{
        lexicographic_reordering, prefix_discrepancy_series, sequential_random_reordering,
        van_der_corput, BlockEndpoints, PointSequence, Seed,
    };
}
