//! Constructors and closed-form Ehrhart / h* formulas for the catalogued
//! polytope families, each designed to be cross-checked against the counting
//! engine.

mod basic;
mod counterexamples;
mod cyclic;
mod delta1q;
mod flow;
mod order;
mod pitman_stanley;
mod typey;
mod zonotope;

pub use basic::{
    birkhoff, cross_polytope, reeve, reeve_hform, sign_pattern_product, standard_simplex,
    standard_simplex_vrep, unit_cube,
};
pub use counterexamples::{mink1, mink2, smooth_reflexive_9, stored_counterexamples, StoredCounterexample};
pub use cyclic::{cyclic_polytope, higher_assemble, is_k_integral_simplex};
pub use delta1q::{base_r_simplex, delta_1q, payne, BaseRSimplex};
pub use flow::{cry, flow_polytope, kostant, lidskii_ehrhart, lidskii_ehrhart_multiset, tesler, FlowGraph};
pub use order::{antichain_ordinal_sum, chain_poset, fan_poset, order_polytope, order_pk_hstar, Poset};
pub use pitman_stanley::{ballot_index_set, pitman_stanley};
pub use typey::{draconian_sequences, typey_ehrhart, typey_vrep, BipartiteGraph};
pub use zonotope::{
    forest_count, gen_zonotope_ehrhart, regular_permutohedron, root_generators, zonotope_coeffs,
    zonotope_vrep,
};
