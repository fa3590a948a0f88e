//! Bichain and split permutation graphs at desk scale.
//!
//! Generators for the X, Y and Z grids and their relatives, pivoting and
//! local complementation, exact rank-width and clique-width for small
//! graphs, class recognisers, canonical bipartite decomposition, letter
//! graph encodings and labelled antichain checks. Everything is exact and
//! meant for graphs of a few dozen vertices at most.

pub mod classes;
pub mod decomposition;
pub mod embed;
pub mod error;
pub mod graph;
pub mod grids;
pub mod io;
pub mod label;
pub mod letters;
pub mod named;
pub mod small;
pub mod transforms;
pub mod verify;
pub mod width;
pub mod wqo;

pub use embed::{are_isomorphic, enumerate_embeddings, find_embedding};
pub use error::{Error, Result};
pub use graph::{Bipartition, Embedding, Graph};
pub use grids::{Family, GridGraph};
pub use label::{LabelPoset, LabelledGraph};
