use thiserror::Error;

use crate::ring::Residue;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: Residue, modulus: u64 },

    #[error("invalid modulus {modulus}: {reason}")]
    InvalidModulus { modulus: u64, reason: &'static str },

    #[error("unsupported ring Z_{modulus}: {reason}")]
    UnsupportedRing { modulus: u64, reason: &'static str },

    #[error("map is not a bijection: {x1} and {x2} both map to {image}")]
    NotBijective {
        x1: Residue,
        x2: Residue,
        image: Residue,
    },

    #[error("invalid kind {0}: only the first and second kinds have an a = 0 closed form")]
    UnsupportedKind(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
