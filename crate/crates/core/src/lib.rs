//! Maximum Degree Contraction: can at most `k` edge contractions bring the
//! maximum degree of a graph down to `d`?
//!
//! The crate provides a brute-force oracle ([`solve_brute`]), an exact
//! branching solver for the red/blue labeled variant ([`solve_labeled`]), a
//! driver that combines it with universal families of labelings
//! ([`solve_fpt`]), hardness reductions that double as instance generators,
//! and file formats. Every `Yes` answer comes with a [`Certificate`] that can
//! be re-checked with [`verify_solution`].
//!
//! ```
//! use mdc_core::{solve_brute, verify_solution, BruteOptions, Graph, Instance};
//!
//! let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
//! let inst = Instance::new(star, 1, 2);
//! let out = solve_brute(&inst, &BruteOptions::default()).unwrap();
//! let cert = out.certificate.unwrap();
//! assert!(verify_solution(&inst, &cert));
//! ```

pub mod brute;
pub mod contraction;
pub mod fpt;
pub mod graph;
pub mod instance;
pub mod io;
pub mod labeled;
pub mod reductions;
pub mod universal;

pub use brute::{solve_brute, solve_labeled_brute, BruteError, BruteOptions, BruteOutcome};
pub use contraction::{
    contract_edge, contract_edge_set, contracted_max_degree, validate_witness, witness_stats,
    ContractionError, ContractionResult, WitnessStats, WitnessViolation,
};
pub use fpt::{family_parameter, solve_fpt, FptError, FptOptions, FptOutcome};
pub use graph::{Edge, Graph, GraphError, Vertex};
pub use instance::{
    check_labeled_solution, check_solution, disjoint_stars_precheck, precheck,
    verify_labeled_solution, verify_solution, Certificate, Instance, Label, LabelError,
    LabeledInstance, NoReason, Precheck, Violation,
};
pub use io::{InstanceFile, IoError};
pub use labeled::{
    apply_rr1, apply_rr2, apply_rr3, colorwise_contraction, node_count_bound, solve_labeled,
    valid_colorings, LabeledOptions, LabeledOutcome, SolverStats, ValidColoring,
    NODE_BOUND_EXPONENT,
};
pub use universal::{
    build_universal, is_universal, UniversalError, UniversalFamily, UniversalMode,
    UniversalOptions,
};
