//! Tableau and permutation combinatorics: the index language of the whole
//! crate.

mod osp;
mod partition;
mod permutation;
mod subset;
mod tableau;

pub use osp::OrderedSetPartition;
pub use partition::{Composition, Partition};
pub use permutation::Permutation;
pub use subset::SubsetI;
pub use tableau::{
    cocharge, ct, ct_j, evacuation, q_tilde, rsk, rsk_inverse, CochargeTableau, StandardTableau,
    Tableau,
};
