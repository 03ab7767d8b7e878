//! The discriminant-form criterion for two lattices to be mutual orthogonal
//! complements inside the K3 lattice `U^3 ⊕ E8^2`.

use super::disc::disc_forms_isomorphic;
use super::{invariants, GramMatrix};
use crate::arith::Int;

/// Result of comparing `s` with `t' = U ⊕ t`.
#[derive(Clone, Debug)]
pub struct DualityReport {
    pub rank_s: usize,
    pub rank_t_prime: usize,
    /// `rank s + rank t' = 22`.
    pub rank_ok: bool,
    pub signature_s: (usize, usize),
    pub signature_t_prime: (usize, usize),
    /// `sign s = (1, rank s - 1)` and `sign t' = (2, rank t' - 2)`.
    pub signature_ok: bool,
    /// `q_s ≅ -q_{t'}`; `None` when either side is degenerate.
    pub disc_anti_isometric: Option<bool>,
    /// Images of the generators of `A_s` under an anti-isometry.
    pub anti_isometry: Option<Vec<Vec<Int>>>,
    pub notes: Vec<String>,
}

impl DualityReport {
    /// The rank and discriminant-form checks.
    pub fn criterion_holds(&self) -> bool {
        self.rank_ok && self.disc_anti_isometric == Some(true)
    }

    /// Criterion plus the signature check.
    pub fn all_pass(&self) -> bool {
        self.criterion_holds() && self.signature_ok
    }

    /// First failing stage in the order rank, discriminant, signature.
    pub fn failed_stage(&self) -> Option<&'static str> {
        if !self.rank_ok {
            Some("rank")
        } else if self.disc_anti_isometric != Some(true) {
            Some("discriminant-form")
        } else if !self.signature_ok {
            Some("signature")
        } else {
            None
        }
    }
}

pub fn check_duality(s: &GramMatrix, t: &GramMatrix) -> DualityReport {
    let t_prime = GramMatrix::hyperbolic().direct_sum(t);
    let rank_s = s.dim();
    let rank_t_prime = t_prime.dim();
    let signature_s = s.signature();
    let signature_t_prime = t_prime.signature();
    let rank_ok = rank_s + rank_t_prime == 22;
    let signature_ok = rank_s >= 1 && signature_s == (1, rank_s - 1) && signature_t_prime == (2, rank_t_prime - 2);
    let mut notes = Vec::new();
    let (disc_anti_isometric, anti_isometry) = match (invariants(s), invariants(&t_prime)) {
        (Ok(a), Ok(b)) => {
            let phi = disc_forms_isomorphic(&a.disc_form, &b.disc_form, -1);
            (Some(phi.is_some()), phi)
        }
        (Err(e), _) => {
            notes.push(format!("s: {e}"));
            (None, None)
        }
        (_, Err(e)) => {
            notes.push(format!("U+t: {e}"));
            (None, None)
        }
    };
    DualityReport {
        rank_s,
        rank_t_prime,
        rank_ok,
        signature_s,
        signature_t_prime,
        signature_ok,
        disc_anti_isometric,
        anti_isometry,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_pair_has_anti_isometric_forms() {
        let r = check_duality(&GramMatrix::diagonal(&[2]), &GramMatrix::diagonal(&[-2]));
        assert_eq!(r.disc_anti_isometric, Some(true));
        assert!(!r.rank_ok);
        assert_eq!(r.failed_stage(), Some("rank"));
    }
}
