//! Level-two Fock space crystals.
//!
//! Bipartitions, their extended Young diagrams and natures, the good-node
//! crystal operators at `v = 1`, Uglov and FLOTW bipartitions, the charge
//! isomorphisms `Ψ`, and admissible residue sequences together with
//! exhaustive checkers for the Dipper–James–Murphy statement in level two.
//!
//! ```
//! use bicrystal::{Bipartition, Charge, CrystalParams, Modulus};
//!
//! let p = CrystalParams::new(Modulus::Finite(3), Charge::new(0, 1));
//! let bp: Bipartition = "6.1,2.2".parse().unwrap();
//! assert!(bicrystal::crystal::is_uglov(&bp, &p));
//! let adm = bicrystal::admissible::adm(&bp, &p).unwrap();
//! assert_eq!(adm.len(), bp.rank());
//! ```

pub mod admissible;
pub mod crystal;
pub mod diagrams;
pub mod isomorphism;

pub use crystal::{CrystalParams, FockVector};
pub use diagrams::{Bipartition, Charge, ExtNode, Modulus, Nature, NatureKind, Partition};
pub use isomorphism::{ChargeMove, MovePath};

/// Fock space vector with machine-integer coefficients.
pub type IntVector = FockVector<i64>;

/// Fock space vector with arbitrary-precision coefficients.
pub type BigVector = FockVector<num_bigint::BigInt>;

/// Residues are plain integers: in `0..e` for finite `e`, the content itself for `e = ∞`.
pub type Residue = i64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("window [{lo}, {hi}] does not contain the required range [{need_lo}, {need_hi}]")]
    WindowTooSmall {
        lo: i64,
        hi: i64,
        need_lo: i64,
        need_hi: i64,
    },
    #[error("nodes {0} and {1} have equal content in the same component")]
    Incomparable(ExtNode, ExtNode),
    #[error("charge {0} is not in the fundamental domain 0 <= s1 <= s2 < e")]
    NotFundamental(Charge),
    #[error("operation requires a finite e")]
    InfiniteE,
    #[error("{bp} is not an Uglov bipartition at charge {charge}")]
    NotUglov { bp: Bipartition, charge: Charge },
    #[error("{bp} is not FLOTW at charge {charge}")]
    NotFlotw { bp: Bipartition, charge: Charge },
    #[error("charges {0} and {1} are not in the same orbit")]
    DifferentOrbit(Charge, Charge),
    #[error("the expansion is zero")]
    ZeroExpansion,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
