//! Partition combinatorics and symmetric-group characters.

mod characters;
mod partition;

pub use characters::{mn_character, CharacterCache};
pub use partition::{
    content_power_sum, content_sum, hooks_of, k_lambda, omega, partitions_of, z_mu, Hook, Partition,
};
