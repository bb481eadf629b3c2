mod bridge;
mod density;
mod graph;
pub(crate) mod journey;
mod necessity;

pub use bridge::{bridge_windows, bridges, reduce_bridges, select_bridge_labels, BridgeWindows};
pub use density::{check_global_bounds, density, DensityReport};
pub use graph::{
    edge, validate, Class, Contact, Edge, Label, TemporalGraph, ValidationReport, Vertex, Violation,
};
pub use journey::{
    brute_force_arrival, earliest_arrival, enumerate_journeys, is_temporally_connected,
    reachability_graph, Branching, Journey, ReachabilityMatrix,
};
pub use necessity::{
    is_label_necessary, is_minimal, is_minimal_by_deletion, minimalize, necessary_contacts,
    redundant_contacts, spanning_branchings_union_check, RemovalOrder,
};
