//! Exact invariant-factor computations for the incidence between points and
//! subspaces of `PG(n,q)` and between points and flats of `AG(n,q)`.
//!
//! The crate has two independent routes to the same answers and a third layer
//! that explains why they agree:
//!
//! * [`invariants`] evaluates closed-form formulas for the multiset of p-adic
//!   elementary divisors of the incidence matrices (and Hamada's p-rank).
//! * [`snf`] computes exact integer Smith normal forms and p-local elementary
//!   divisors of the actual matrices built by [`incidence`], with no input
//!   from the formulas.
//! * [`charsum`] evaluates the underlying multiplicative character sums in a
//!   truncated unramified p-adic ring ([`gf`]) and checks their valuations
//!   (Jacobi sums, digit-carry counts, subspace coordinate sums).
//!
//! [`verify`] runs formula against oracle cell by cell and is what the CLI
//! and the acceptance suite drive.

pub mod charsum;
pub mod error;
pub mod geometry;
pub mod gf;
pub mod incidence;
pub mod invariants;
pub mod snf;
pub mod verify;

pub use error::Error;
pub use geometry::{AffineFlat, ProjectivePoint, Subspace};
pub use gf::{Field, FieldElement, FieldSpec, Ring, RingElement, RingSpec, Valuation};
pub use incidence::{IncidenceMatrix, MatrixMeta, Space};
pub use invariants::{InvariantSpectrum, TypeTuple};
pub use snf::{IntMatrix, SnfResult};
pub use verify::{GridConfig, GridOutcome, VerificationReport};

/// Factors `q` as a prime power `p^t`, or `None` when it is not one.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 0;
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            p = d;
            break;
        }
        d += 1;
    }
    if p == 0 {
        return Some((q, 1)); // q itself is prime
    }
    let mut rest = q;
    let mut t = 0;
    while rest % p == 0 {
        rest /= p;
        t += 1;
    }
    if rest == 1 {
        Some((p, t))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::prime_power;

    #[test]
    fn prime_power_factoring() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(97), Some((97, 1)));
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(100), None);
    }
}
