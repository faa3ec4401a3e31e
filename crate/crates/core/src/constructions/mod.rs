//! Code families: Reed-Muller, generalized Reed-Muller, cyclic codes and
//! length doubling.

pub mod cyclic;
pub mod doubling;
pub mod reed_muller;

pub use cyclic::{
    cyclic_code, cyclic_csst_conditions, cyclotomic_cosets, eta_trace_generator, minkowski_sum, search_cyclic,
    trace_generating_set, CyclicConditions, CyclicDescription, CyclicSpec, ResolvedCyclic, SearchOutcome,
    SearchRecord, SplittingField,
};
pub use doubling::{double_code, phi_condition_check, Phi};
pub use reed_muller::{grm, grm_csst_classify, grm_trace_identity_check, reed_muller, rm_csst_threshold, GrmClassification, RmThreshold};
