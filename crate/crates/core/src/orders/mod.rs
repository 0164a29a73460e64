//! Term-order equivalence classes and lattice-polytope measures used to rank
//! them.

mod cone;
mod lattice;

pub use cone::{
    cone_feasibility, cone_feasibility_with_objective, extract_weight_vectors, leading_tuple,
    LeadingTuple, OrderClass,
};
pub use lattice::{normalized_volume, polytope_dim, LatticePolytope};

pub(crate) use cone::validate_generators;
