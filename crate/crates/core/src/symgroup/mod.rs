//! Symmetric-group combinatorics and exact irreducible representations.

pub mod character;
pub mod coset;
pub mod partition;
pub mod perm;
pub mod tableau;

pub use character::{branching_multiplicity, class_representative_word, CharacterTable};
pub use coset::{min_coset_reps, multinomial, split_coset, validate_composition};
pub use partition::{vertical_strip_removals, Partition};
pub use perm::{length_and_reduced_word, Permutation};
pub use tableau::{seminormal_rep, standard_tableaux, SeminormalRep, StandardTableau};
