//! Weight sets of finite-dimensional irreducible representations.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::rootdata::{RootDatum, Weight};

pub const DEFAULT_WEIGHT_CAP: usize = 1_000_000;

/// The set of weights (without multiplicities) of `L(highest)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    highest: Weight,
    members: BTreeSet<Weight>,
}

impl WeightSystem {
    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    pub fn members(&self) -> &BTreeSet<Weight> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.members.contains(w)
    }

    /// Every weight other than the highest one.
    pub fn nonhighest_weights(&self) -> impl Iterator<Item = &Weight> {
        self.members.iter().filter(move |w| **w != self.highest)
    }

    pub fn dominant_members(&self) -> impl Iterator<Item = &Weight> {
        self.members.iter().filter(|w| w.is_dominant())
    }
}

pub fn weight_system(datum: &RootDatum, highest: &Weight) -> Result<WeightSystem> {
    weight_system_capped(datum, highest, DEFAULT_WEIGHT_CAP)
}

/// Dominant weights are found breadth-first by subtracting positive roots
/// while staying dominant; every dominant weight below `highest` in its
/// root-lattice coset is reached this way. Each is then expanded to its
/// Weyl orbit.
pub fn weight_system_capped(
    datum: &RootDatum,
    highest: &Weight,
    cap: usize,
) -> Result<WeightSystem> {
    datum.check(highest)?;
    if !highest.is_integral() {
        return Err(Error::NotIntegral);
    }
    if !highest.is_dominant() {
        return Err(Error::NotDominant);
    }
    let roots: Vec<Weight> = datum
        .positive_roots()
        .iter()
        .map(|b| datum.root_to_weight(b))
        .collect();

    let mut dominant = BTreeSet::new();
    dominant.insert(highest.clone());
    let mut queue = VecDeque::from([highest.clone()]);
    while let Some(mu) = queue.pop_front() {
        for beta in &roots {
            let nu = &mu - beta;
            if nu.is_dominant() && !dominant.contains(&nu) {
                dominant.insert(nu.clone());
                queue.push_back(nu);
            }
        }
        if dominant.len() > cap {
            return Err(Error::Overflow { cap });
        }
    }

    let mut members = BTreeSet::new();
    for mu in &dominant {
        orbit_from_dominant(datum, mu, &mut members, cap)?;
    }
    Ok(WeightSystem { highest: highest.clone(), members })
}

/// Walks down from a dominant weight by reflecting only at positive
/// coordinates, which visits each orbit element once per incoming edge.
fn orbit_from_dominant(
    datum: &RootDatum,
    dominant: &Weight,
    into: &mut BTreeSet<Weight>,
    cap: usize,
) -> Result<()> {
    let mut queue = VecDeque::from([dominant.clone()]);
    into.insert(dominant.clone());
    while let Some(w) = queue.pop_front() {
        for i in 0..datum.rank() {
            if w[i] > crate::rational::zero() {
                let mut v = w.clone();
                datum.reflect_in_place(&mut v, i);
                if into.insert(v.clone()) {
                    if into.len() > cap {
                        return Err(Error::Overflow { cap });
                    }
                    queue.push_back(v);
                }
            }
        }
    }
    Ok(())
}
