//! Infinitesimal characters as Weyl orbits of weights.
//!
//! Orbit equality is decided through dominant representatives. Full orbit
//! enumeration ([`weyl_orbit`]) is capped and only meant for small ranks.

use std::collections::{BTreeSet, VecDeque};

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::rational::is_negative_integer;
use crate::rootdata::{RootDatum, Weight, WeylWord};

pub const DEFAULT_ORBIT_CAP: usize = 100_000;

/// The character `chi_lambda`, identified by the dominant element of `W lambda`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InfinitesimalCharacter {
    dominant_rep: Weight,
}

impl InfinitesimalCharacter {
    pub fn of(datum: &RootDatum, w: &Weight) -> Result<Self> {
        Ok(Self { dominant_rep: dominant_representative(datum, w)?.0 })
    }

    pub fn dominant_rep(&self) -> &Weight {
        &self.dominant_rep
    }
}

/// Returns `(dom, word)` with `dom` dominant and `dom = word . w`.
///
/// Reflects at the first strictly negative coordinate until none remains;
/// zero coordinates are never touched.
pub fn dominant_representative(datum: &RootDatum, w: &Weight) -> Result<(Weight, WeylWord)> {
    datum.check(w)?;
    let mut cur = w.clone();
    let mut applied = Vec::new();
    while let Some(i) = (0..datum.rank()).find(|&i| cur[i].is_negative()) {
        datum.reflect_in_place(&mut cur, i);
        applied.push(i);
    }
    applied.reverse();
    Ok((cur, WeylWord(applied)))
}

pub fn same_infinitesimal_character(datum: &RootDatum, a: &Weight, b: &Weight) -> Result<bool> {
    datum.check(a)?;
    datum.check(b)?;
    if datum.norm_squared(a) != datum.norm_squared(b) {
        return Ok(false);
    }
    Ok(dominant_representative(datum, a)?.0 == dominant_representative(datum, b)?.0)
}

/// The full orbit `W w`, or [`Error::Overflow`] once it exceeds `cap`.
pub fn weyl_orbit(datum: &RootDatum, w: &Weight, cap: usize) -> Result<BTreeSet<Weight>> {
    Ok(weyl_orbit_with_words(datum, w, cap)?.into_iter().map(|(v, _)| v).collect())
}

/// Orbit elements paired with a word reaching each one from `w`, in
/// breadth-first (shortest word) order.
pub fn weyl_orbit_with_words(
    datum: &RootDatum,
    w: &Weight,
    cap: usize,
) -> Result<Vec<(Weight, WeylWord)>> {
    datum.check(w)?;
    if cap == 0 {
        return Err(Error::Overflow { cap });
    }
    let mut seen = BTreeSet::from([w.clone()]);
    let mut out = vec![(w.clone(), WeylWord::identity())];
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for i in 0..datum.rank() {
            let (ref cur, ref word) = out[k];
            let mut next = cur.clone();
            datum.reflect_in_place(&mut next, i);
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(Error::Overflow { cap });
                }
                let word = word.then(i);
                out.push((next, word));
                queue.push_back(out.len() - 1);
            }
        }
    }
    Ok(out)
}

/// No positive coroot pairs with `w` to a negative integer.
pub fn is_integrally_dominant(datum: &RootDatum, w: &Weight) -> Result<bool> {
    datum.check(w)?;
    Ok((0..datum.positive_roots().len())
        .all(|k| !is_negative_integer(&datum.coroot_pairing(w, k))))
}
