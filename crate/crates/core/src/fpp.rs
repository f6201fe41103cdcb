//! The fundamental-parallelepiped bound, the spherical Dirac ball, parabolic
//! data, and the induction certificate for parameters outside the FPP.

use std::collections::BTreeSet;

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lemma::{verify_lemma, LemmaReport, LemmaStatus};
use crate::rational::{int, Rational};
use crate::rootdata::{RootDatum, Weight};

pub use crate::rootdata::DiagramInvolution;

/// Every simple coordinate lies in `[0, 1]`.
pub fn in_fpp(datum: &RootDatum, w: &Weight) -> Result<bool> {
    datum.check(w)?;
    Ok(w.coords().iter().all(|c| !c.is_negative() && *c <= int(1)))
}

/// Simple indices with `<lambda, alpha^vee> > 1`, for dominant `lambda`.
pub fn fpp_violations(datum: &RootDatum, w: &Weight) -> Result<Vec<usize>> {
    datum.check(w)?;
    if !w.is_dominant() {
        return Err(Error::NotDominant);
    }
    Ok((0..datum.rank()).filter(|&i| w[i] > int(1)).collect())
}

/// `|lambda|^2 <= |rho|^2`.
pub fn in_dirac_ball(datum: &RootDatum, w: &Weight) -> Result<bool> {
    datum.check(w)?;
    Ok(datum.norm_squared(w) <= dirac_radius_squared(datum))
}

pub fn dirac_radius_squared(datum: &RootDatum) -> Rational {
    datum.norm_squared(&datum.rho())
}

/// A standard parabolic, recorded by which simple roots stay in the Levi.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ParabolicType {
    levi_simples: BTreeSet<usize>,
    removed: BTreeSet<usize>,
}

impl ParabolicType {
    pub fn from_removed(datum: &RootDatum, removed: impl IntoIterator<Item = usize>) -> Result<Self> {
        let removed: BTreeSet<usize> = removed.into_iter().collect();
        if let Some(&bad) = removed.iter().find(|&&i| i >= datum.rank()) {
            return Err(Error::InvalidParabolic(format!(
                "index {bad} out of range for rank {}",
                datum.rank()
            )));
        }
        let levi_simples = (0..datum.rank()).filter(|i| !removed.contains(i)).collect();
        Ok(Self { levi_simples, removed })
    }

    pub fn from_levi(datum: &RootDatum, levi: impl IntoIterator<Item = usize>) -> Result<Self> {
        let levi: BTreeSet<usize> = levi.into_iter().collect();
        if let Some(&bad) = levi.iter().find(|&&i| i >= datum.rank()) {
            return Err(Error::InvalidParabolic(format!(
                "index {bad} out of range for rank {}",
                datum.rank()
            )));
        }
        Self::from_removed(datum, (0..datum.rank()).filter(|i| !levi.contains(i)))
    }

    pub fn borel(datum: &RootDatum) -> Self {
        Self::from_removed(datum, 0..datum.rank()).expect("indices in range")
    }

    pub fn levi_simples(&self) -> &BTreeSet<usize> {
        &self.levi_simples
    }

    pub fn removed(&self) -> &BTreeSet<usize> {
        &self.removed
    }

    pub fn is_proper(&self) -> bool {
        !self.removed.is_empty()
    }

    fn check(&self, datum: &RootDatum) -> Result<()> {
        let n = self.levi_simples.len() + self.removed.len();
        if n != datum.rank() || self.levi_simples.iter().chain(&self.removed).any(|&i| i >= n) {
            return Err(Error::InvalidParabolic("does not partition the simple roots".into()));
        }
        Ok(())
    }
}

/// Half-sum of the positive roots of the Levi.
pub fn rho_levi(datum: &RootDatum, parabolic: &ParabolicType) -> Result<Weight> {
    parabolic.check(datum)?;
    Ok(datum.half_sum(|b| RootDatum::supported_on(b, parabolic.levi_simples())))
}

/// `rho_P = rho - rho_L`, the half-sum of the roots in `g/p`.
pub fn rho_p(datum: &RootDatum, parabolic: &ParabolicType) -> Result<Weight> {
    let rho_l = rho_levi(datum, parabolic)?;
    Ok(&datum.rho() - &rho_l)
}

/// Pairing with the coroot of every positive root outside the Levi is
/// nonnegative. Takes the already shifted parameter `lambda + rho_P`.
pub fn is_weakly_good(datum: &RootDatum, w: &Weight, parabolic: &ParabolicType) -> Result<bool> {
    datum.check(w)?;
    parabolic.check(datum)?;
    Ok(datum
        .positive_roots()
        .iter()
        .enumerate()
        .filter(|(_, b)| !RootDatum::supported_on(b, parabolic.levi_simples()))
        .all(|(k, _)| !datum.coroot_pairing(w, k).is_negative()))
}

/// Witness data for a dominant Hermitian parameter outside the FPP: the
/// violating simple root, the weight `mu` to twist by, and the parabolic
/// whose partial flag variety carries `O(mu)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InductionCertificate {
    pub alpha: usize,
    pub mu: Weight,
    pub parabolic: ParabolicType,
    pub lemma_checks: Vec<LemmaReport>,
}

impl InductionCertificate {
    pub fn all_checks_pass(&self) -> bool {
        self.lemma_checks.iter().all(|r| r.status == LemmaStatus::Pass)
    }
}

/// Picks the smallest violating index `alpha` and sets `mu` and the removed
/// simple roots by whether `delta` fixes `alpha`. The generation lemma is
/// checked at `lambda` for `alpha`, and when `delta(alpha) != alpha` also at
/// `lambda - varpi_alpha` for `delta(alpha)`.
pub fn induction_certificate(
    datum: &RootDatum,
    lambda: &Weight,
    delta: &DiagramInvolution,
) -> Result<InductionCertificate> {
    datum.check(lambda)?;
    let delta = DiagramInvolution::new(datum, delta.perm().to_vec())?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant);
    }
    if delta.apply(lambda) != *lambda {
        return Err(Error::NotHermitian);
    }
    let alpha = *fpp_violations(datum, lambda)?.first().ok_or(Error::NoViolation)?;
    let partner = delta.image(alpha);
    let varpi = datum.fundamental_weight(alpha)?;

    let mut lemma_checks = vec![verify_lemma(datum, alpha, lambda)?];
    let (mu, parabolic) = if partner == alpha {
        (varpi, ParabolicType::from_removed(datum, [alpha])?)
    } else {
        let lowered = lambda - &varpi;
        debug_assert_eq!(lowered[partner], lambda[alpha]);
        lemma_checks.push(verify_lemma(datum, partner, &lowered)?);
        let mu = &varpi + &datum.fundamental_weight(partner)?;
        (mu, ParabolicType::from_removed(datum, [alpha, partner])?)
    };
    Ok(InductionCertificate { alpha, mu, parabolic, lemma_checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn w(c: &[i64]) -> Weight {
        Weight::from_integers(c)
    }

    #[test]
    fn fpp_membership() {
        let g2 = RootDatum::build("G2").unwrap();
        assert!(in_fpp(&g2, &g2.zero_weight()).unwrap());
        assert!(in_fpp(&g2, &g2.rho()).unwrap());
        assert!(!in_fpp(&g2, &w(&[2, 0])).unwrap());
        assert!(!in_fpp(&g2, &w(&[-1, 0])).unwrap());
        assert!(in_fpp(&g2, &w(&[1])).is_err());
    }

    #[test]
    fn violations() {
        let g2 = RootDatum::build("G2").unwrap();
        assert!(fpp_violations(&g2, &g2.rho()).unwrap().is_empty());
        assert_eq!(fpp_violations(&g2, &w(&[2, 0])).unwrap(), vec![0]);
        assert_eq!(fpp_violations(&g2, &w(&[3, 2])).unwrap(), vec![0, 1]);
        assert_eq!(fpp_violations(&g2, &w(&[3, -1])), Err(Error::NotDominant));
    }

    #[test]
    fn dirac_ball() {
        let g2 = RootDatum::build("G2").unwrap();
        assert!(in_dirac_ball(&g2, &g2.rho()).unwrap());
        assert!(!in_dirac_ball(&g2, &g2.rho().scale(int(2))).unwrap());
        assert_eq!(dirac_radius_squared(&g2), int(14));
    }

    #[test]
    fn rho_p_examples() {
        let g2 = RootDatum::build("G2").unwrap();
        assert_eq!(rho_p(&g2, &ParabolicType::borel(&g2)).unwrap(), g2.rho());
        let whole = ParabolicType::from_removed(&g2, []).unwrap();
        assert!(!whole.is_proper());
        assert_eq!(rho_p(&g2, &whole).unwrap(), g2.zero_weight());
        let p = ParabolicType::from_removed(&g2, [0]).unwrap();
        let rp = rho_p(&g2, &p).unwrap();
        assert_eq!(g2.to_root_basis(&rp), vec![int(5), frac(5, 2)]);
        assert_eq!(g2.pairing(&rp, 1).unwrap(), int(0));
        assert!(ParabolicType::from_removed(&g2, [2]).is_err());
        assert!(ParabolicType::from_levi(&g2, [5]).is_err());
        assert_eq!(ParabolicType::from_levi(&g2, [1]).unwrap(), p);
    }

    #[test]
    fn weakly_good() {
        let a1 = RootDatum::build("A1").unwrap();
        assert!(!is_weakly_good(&a1, &w(&[-1]), &ParabolicType::borel(&a1)).unwrap());
        let g2 = RootDatum::build("G2").unwrap();
        let p = ParabolicType::from_removed(&g2, [0]).unwrap();
        // alpha1 + alpha2 has coroot alpha1^vee + 3 alpha2^vee: pairing 1 - 15 < 0
        assert!(!is_weakly_good(&g2, &w(&[1, -5]), &p).unwrap());
        // pairings 5, 2, 7, 4, 3 with the five coroots outside the Levi
        assert!(is_weakly_good(&g2, &w(&[5, -1]), &p).unwrap());
        // only coroots outside the Levi matter
        assert!(!is_weakly_good(&g2, &w(&[5, -1]), &ParabolicType::borel(&g2)).unwrap());
    }

    #[test]
    fn g2_certificate() {
        let g2 = RootDatum::build("G2").unwrap();
        let cert = induction_certificate(&g2, &w(&[2, 0]), &DiagramInvolution::identity(2)).unwrap();
        assert_eq!(cert.alpha, 0);
        assert_eq!(cert.mu, w(&[1, 0]));
        assert_eq!(cert.parabolic.removed(), &BTreeSet::from([0]));
        assert_eq!(cert.lemma_checks.len(), 1);
        assert!(cert.all_checks_pass());
    }

    #[test]
    fn a2_certificate_with_swap() {
        let a2 = RootDatum::build("A2").unwrap();
        let swap = DiagramInvolution::new(&a2, vec![1, 0]).unwrap();
        let cert = induction_certificate(&a2, &w(&[2, 2]), &swap).unwrap();
        assert_eq!(cert.alpha, 0);
        assert_eq!(cert.mu, w(&[1, 1]));
        assert_eq!(cert.parabolic.removed(), &BTreeSet::from([0, 1]));
        assert_eq!(cert.lemma_checks.len(), 2);
        assert_eq!(cert.lemma_checks[1].alpha, 1);
        assert_eq!(cert.lemma_checks[1].lambda, w(&[1, 2]));
        assert!(cert.all_checks_pass());
        assert_eq!(swap.apply(&cert.mu), cert.mu);
    }

    #[test]
    fn certificate_errors() {
        let a2 = RootDatum::build("A2").unwrap();
        let swap = DiagramInvolution::new(&a2, vec![1, 0]).unwrap();
        let id = DiagramInvolution::identity(2);
        assert_eq!(induction_certificate(&a2, &w(&[2, 0]), &swap), Err(Error::NotHermitian));
        assert_eq!(induction_certificate(&a2, &w(&[1, 1]), &swap), Err(Error::NoViolation));
        assert_eq!(induction_certificate(&a2, &w(&[3, -1]), &id), Err(Error::NotDominant));
        let g2 = RootDatum::build("G2").unwrap();
        let bogus = DiagramInvolution::new(&a2, vec![1, 0]).unwrap();
        assert!(matches!(
            induction_certificate(&g2, &w(&[2, 2]), &bogus),
            Err(Error::InvalidInvolution(_))
        ));
    }
}
