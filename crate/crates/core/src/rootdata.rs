//! Based root data of simple and semisimple type.
//!
//! Cartan convention: `cartan[i][j] = <alpha_i, alpha_j^vee>`, so row `i` of the
//! Cartan matrix is the simple root `alpha_i` written in the fundamental-weight
//! basis. The symmetrizer `d_j = (alpha_j, alpha_j) / 2` makes
//! `d_j * cartan[i][j] = (alpha_i, alpha_j)` symmetric; it is normalized so the
//! short simple roots of every simple component have squared length 2.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rational::{self, int, Rational};

const MAX_RANK: usize = 8;

/// A simple or semisimple Cartan type such as `G2` or `A1xA1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypeLabel {
    components: Vec<(char, usize)>,
}

impl TypeLabel {
    pub fn simple(series: char, rank: usize) -> Result<Self> {
        check_component(series, rank)?;
        Ok(Self { components: vec![(series, rank)] })
    }

    pub fn components(&self) -> &[(char, usize)] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.1).sum()
    }
}

fn check_component(series: char, rank: usize) -> Result<()> {
    let ok = match series {
        'A' => rank >= 1,
        'B' | 'C' => rank >= 2,
        'D' => rank >= 4,
        'E' => (6..=8).contains(&rank),
        'F' => rank == 4,
        'G' => rank == 2,
        _ => return Err(Error::UnknownType(series.to_string())),
    };
    if ok && rank <= MAX_RANK {
        Ok(())
    } else {
        Err(Error::RankOutOfRange { series, rank })
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownType(s.to_string());
        let mut components = Vec::new();
        for part in s.split(['x', '×', '+']) {
            let part = part.trim();
            let mut chars = part.chars();
            let series = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
            let digits = chars.as_str();
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(unknown());
            }
            let rank: usize = digits.parse().map_err(|_| unknown())?;
            check_component(series, rank)?;
            components.push((series, rank));
        }
        let label = Self { components };
        if label.rank() > MAX_RANK {
            return Err(Error::RankOutOfRange { series: label.components[0].0, rank: label.rank() });
        }
        Ok(label)
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (s, n)) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str("x")?;
            }
            write!(f, "{s}{n}")?;
        }
        Ok(())
    }
}

/// Gram matrix of the simple roots of one simple component, short roots of
/// squared length 2, Bourbaki numbering.
fn component_gram(series: char, n: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; n]; n];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match series {
        'A' => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 1..n {
                link(&mut g, i - 1, i, -1);
            }
        }
        'B' => {
            for i in 0..n - 1 {
                g[i][i] = 4;
            }
            g[n - 1][n - 1] = 2;
            for i in 1..n {
                link(&mut g, i - 1, i, -2);
            }
        }
        'C' => {
            for i in 0..n - 1 {
                g[i][i] = 2;
            }
            g[n - 1][n - 1] = 4;
            for i in 1..n - 1 {
                link(&mut g, i - 1, i, -1);
            }
            link(&mut g, n - 2, n - 1, -2);
        }
        'D' => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 1..n - 1 {
                link(&mut g, i - 1, i, -1);
            }
            link(&mut g, n - 3, n - 1, -1);
        }
        'E' => {
            for i in 0..n {
                g[i][i] = 2;
            }
            link(&mut g, 0, 2, -1);
            link(&mut g, 1, 3, -1);
            for i in 3..n {
                link(&mut g, i - 1, i, -1);
            }
        }
        'F' => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            link(&mut g, 0, 1, -2);
            link(&mut g, 1, 2, -2);
            link(&mut g, 2, 3, -1);
        }
        'G' => {
            g[0][0] = 2;
            g[1][1] = 6;
            link(&mut g, 0, 1, -3);
        }
        _ => unreachable!("validated by TypeLabel"),
    }
    g
}

/// A weight in the fundamental-weight basis: `coords[i] = <lambda, alpha_i^vee>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(#[serde(with = "rational::vec_as_str")] Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self(coords)
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![Rational::zero(); rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = int(1);
        w
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, k: Rational) -> Self {
        Self(self.0.iter().map(|c| c * k).collect())
    }
}

impl Index<usize> for Weight {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<Rational> for &Weight {
    type Output = Weight;
    fn mul(self, k: Rational) -> Weight {
        self.scale(k)
    }
}

/// A word in the simple reflections. The word `[i1, i2, ..., ik]` denotes
/// `s_i1 s_i2 ... s_ik`, so `s_ik` acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The inverse element, since every simple reflection is an involution.
    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// `s_i * self`: the new reflection acts last.
    pub fn then(&self, i: usize) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(i);
        v.extend_from_slice(&self.0);
        Self(v)
    }
}

/// A Cartan-matrix preserving involution of the simple-root indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiagramInvolution {
    perm: Vec<usize>,
}

impl DiagramInvolution {
    pub fn identity(rank: usize) -> Self {
        Self { perm: (0..rank).collect() }
    }

    /// Validates that `perm` is an involution preserving the Cartan matrix.
    pub fn new(datum: &RootDatum, perm: Vec<usize>) -> Result<Self> {
        let n = datum.rank();
        if perm.len() != n {
            return Err(Error::InvalidInvolution(format!(
                "expected {n} images, got {}",
                perm.len()
            )));
        }
        if let Some(&bad) = perm.iter().find(|&&p| p >= n) {
            return Err(Error::InvalidInvolution(format!("index {bad} out of range")));
        }
        if (0..n).any(|i| perm[perm[i]] != i) {
            return Err(Error::InvalidInvolution("not an involution".into()));
        }
        let c = datum.cartan();
        for i in 0..n {
            for j in 0..n {
                if c[perm[i]][perm[j]] != c[i][j] {
                    return Err(Error::InvalidInvolution(
                        "does not preserve the Cartan matrix".into(),
                    ));
                }
            }
        }
        Ok(Self { perm })
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn image(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `(delta lambda)_{delta(i)} = lambda_i`.
    pub fn apply(&self, w: &Weight) -> Weight {
        let mut out = w.clone();
        for (i, &p) in self.perm.iter().enumerate() {
            out.0[p] = w.0[i];
        }
        out
    }
}

/// JSON form of a root datum.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DatumDocument {
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    #[serde(with = "rational::vec_as_str")]
    pub symmetrizer: Vec<Rational>,
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    label: TypeLabel,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<Rational>,
    /// Positive roots in the simple-root basis, by height, simple roots first.
    positive_roots: Vec<Vec<i64>>,
    /// Matching coroots in the simple-coroot basis.
    positive_coroots: Vec<Vec<i64>>,
    /// `(beta, beta) / 2` for each positive root.
    half_norms: Vec<Rational>,
    /// `(C^T)^{-1}`: fundamental-weight coordinates to simple-root coordinates.
    to_roots: Matrix,
    involutions: Vec<DiagramInvolution>,
}

impl RootDatum {
    /// Builds the datum of a simple or semisimple type from its label.
    pub fn build(label: &str) -> Result<Self> {
        Self::from_label(label.parse()?)
    }

    pub fn from_label(label: TypeLabel) -> Result<Self> {
        let n = label.rank();
        let mut gram = vec![vec![0i64; n]; n];
        let mut offset = 0;
        for &(series, r) in label.components() {
            let g = component_gram(series, r);
            for i in 0..r {
                for j in 0..r {
                    gram[offset + i][offset + j] = g[i][j];
                }
            }
            offset += r;
        }
        let cartan = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();
        let symmetrizer = (0..n).map(|j| Rational::new(gram[j][j], 2)).collect();
        Self::from_cartan(label, cartan, symmetrizer)
    }

    /// Builds a datum from explicit Cartan data, validating every invariant.
    pub fn from_cartan(
        label: TypeLabel,
        cartan: Vec<Vec<i64>>,
        symmetrizer: Vec<Rational>,
    ) -> Result<Self> {
        let n = cartan.len();
        let invalid = |m: &str| Err(Error::InvalidCartan(m.to_string()));
        if n == 0 || cartan.iter().any(|r| r.len() != n) {
            return invalid("Cartan matrix must be square and nonempty");
        }
        if n != label.rank() {
            return invalid("Cartan matrix size does not match the type label");
        }
        if symmetrizer.len() != n || symmetrizer.iter().any(|d| !d.is_positive()) {
            return invalid("symmetrizer must have one positive entry per simple root");
        }
        for i in 0..n {
            if cartan[i][i] != 2 {
                return invalid("diagonal entries must be 2");
            }
            for j in 0..n {
                if i != j && cartan[i][j] > 0 {
                    return invalid("off-diagonal entries must be nonpositive");
                }
                if (cartan[i][j] == 0) != (cartan[j][i] == 0) {
                    return invalid("zero pattern must be symmetric");
                }
            }
        }
        let form: Matrix = (0..n)
            .map(|i| (0..n).map(|j| symmetrizer[j] * cartan[i][j]).collect())
            .collect();
        for i in 0..n {
            for j in 0..n {
                if form[i][j] != form[j][i] {
                    return invalid("symmetrized matrix is not symmetric");
                }
            }
        }
        if !linalg::is_positive_definite(&form) {
            return invalid("symmetrized matrix is not positive definite");
        }
        for comp in components(&cartan) {
            let min = comp.iter().map(|&j| symmetrizer[j]).min().expect("nonempty");
            if min != int(1) {
                return invalid("short simple roots of each component must have squared length 2");
            }
        }
        let cartan_q: Matrix = cartan
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        let to_roots = linalg::inverse(&linalg::transpose(&cartan_q))
            .ok_or_else(|| Error::InvalidCartan("singular Cartan matrix".into()))?;

        let positive_roots = closure_positive_roots(&cartan);
        let mut positive_coroots = Vec::with_capacity(positive_roots.len());
        let mut half_norms = Vec::with_capacity(positive_roots.len());
        for beta in &positive_roots {
            let mut norm = Rational::zero();
            for i in 0..n {
                for j in 0..n {
                    norm += form[i][j] * (beta[i] * beta[j]);
                }
            }
            let half = norm / 2;
            let mut co = Vec::with_capacity(n);
            for i in 0..n {
                let c = symmetrizer[i] * beta[i] / half;
                if !c.is_integer() {
                    return invalid("coroot is not integral");
                }
                co.push(c.to_integer());
            }
            positive_coroots.push(co);
            half_norms.push(half);
        }

        let mut datum = Self {
            label,
            cartan,
            symmetrizer,
            positive_roots,
            positive_coroots,
            half_norms,
            to_roots,
            involutions: Vec::new(),
        };
        datum.involutions = diagram_involutions(&datum.cartan);
        Ok(datum)
    }

    pub fn from_document(doc: &DatumDocument) -> Result<Self> {
        let label: TypeLabel = doc.type_label.parse()?;
        if doc.rank != doc.cartan.len() {
            return Err(Error::InvalidCartan("rank does not match Cartan matrix size".into()));
        }
        Self::from_cartan(label, doc.cartan.clone(), doc.symmetrizer.clone())
    }

    pub fn to_document(&self) -> DatumDocument {
        DatumDocument {
            type_label: self.label.to_string(),
            rank: self.rank(),
            cartan: self.cartan.clone(),
            symmetrizer: self.symmetrizer.clone(),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: DatumDocument = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_document(&doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("datum document serializes")
    }

    pub fn label(&self) -> &TypeLabel {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[Rational] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    /// `(beta, beta) / 2` for the positive root at `k`.
    pub fn root_half_norm(&self, k: usize) -> Rational {
        self.half_norms[k]
    }

    pub fn involution_candidates(&self) -> &[DiagramInvolution] {
        &self.involutions
    }

    /// Simple-index sets of the simple components, in index order.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components(&self.cartan)
    }

    /// Gram matrix `(alpha_i, alpha_j)` of the simple roots.
    pub fn simple_root_gram(&self) -> Vec<Vec<Rational>> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| self.symmetrizer[j] * self.cartan[i][j]).collect())
            .collect()
    }

    pub fn check(&self, w: &Weight) -> Result<()> {
        if w.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: self.rank(), got: w.rank() })
        }
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index, rank: self.rank() })
        }
    }

    pub fn zero_weight(&self) -> Weight {
        Weight::zero(self.rank())
    }

    pub fn fundamental_weight(&self, i: usize) -> Result<Weight> {
        self.check_index(i)?;
        Ok(Weight::fundamental(self.rank(), i))
    }

    /// The simple root `alpha_i` in fundamental-weight coordinates.
    pub fn simple_root(&self, i: usize) -> Result<Weight> {
        self.check_index(i)?;
        Ok(Weight::from_integers(&self.cartan[i]))
    }

    /// Converts integer simple-root coefficients to a weight.
    pub fn root_to_weight(&self, coeffs: &[i64]) -> Weight {
        let r: Vec<Rational> = coeffs.iter().map(|&c| int(c)).collect();
        self.from_root_basis(&r)
    }

    pub fn to_root_basis(&self, w: &Weight) -> Vec<Rational> {
        linalg::mat_vec(&self.to_roots, w.coords())
    }

    pub fn from_root_basis(&self, r: &[Rational]) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|i| (0..n).map(|j| r[j] * self.cartan[j][i]).sum())
                .collect(),
        )
    }

    /// `<lambda, alpha_j^vee>`.
    pub fn pairing(&self, w: &Weight, j: usize) -> Result<Rational> {
        self.check(w)?;
        self.check_index(j)?;
        Ok(w.0[j])
    }

    /// `<lambda, beta^vee>` for the positive root at index `k` of
    /// [`positive_roots`](Self::positive_roots).
    pub fn coroot_pairing(&self, w: &Weight, k: usize) -> Rational {
        self.positive_coroots[k]
            .iter()
            .zip(&w.0)
            .map(|(&c, x)| x * c)
            .sum()
    }

    /// The invariant form, via `(lambda, alpha_j) = d_j <lambda, alpha_j^vee>`.
    pub fn invariant_form(&self, a: &Weight, b: &Weight) -> Result<Rational> {
        self.check(a)?;
        self.check(b)?;
        let rb = self.to_root_basis(b);
        Ok((0..self.rank())
            .map(|j| a.0[j] * self.symmetrizer[j] * rb[j])
            .sum())
    }

    pub fn norm_squared(&self, w: &Weight) -> Rational {
        self.invariant_form(w, w).expect("weight of this datum")
    }

    /// Half-sum of positive roots, equal to the sum of fundamental weights.
    pub fn rho(&self) -> Weight {
        Weight(vec![int(1); self.rank()])
    }

    /// `rho` computed as the half-sum of positive roots.
    pub fn rho_from_roots(&self) -> Weight {
        self.half_sum(|_| true)
    }

    /// Half the sum of the positive roots selected by `keep`.
    pub(crate) fn half_sum(&self, keep: impl Fn(&[i64]) -> bool) -> Weight {
        let n = self.rank();
        let mut sum = vec![Rational::zero(); n];
        for beta in self.positive_roots.iter().filter(|b| keep(b)) {
            for i in 0..n {
                sum[i] += int(beta[i]);
            }
        }
        let half: Vec<Rational> = sum.into_iter().map(|s| s / 2).collect();
        self.from_root_basis(&half)
    }

    /// `s_i lambda = lambda - <lambda, alpha_i^vee> alpha_i`, in place.
    pub fn reflect_in_place(&self, w: &mut Weight, i: usize) {
        let c = w.0[i];
        if c.is_zero() {
            return;
        }
        for (x, &a) in w.0.iter_mut().zip(&self.cartan[i]) {
            *x -= c * a;
        }
    }

    pub fn reflect(&self, w: &Weight, i: usize) -> Result<Weight> {
        self.check(w)?;
        self.check_index(i)?;
        let mut out = w.clone();
        self.reflect_in_place(&mut out, i);
        Ok(out)
    }

    /// Applies `word` to `w`, rightmost reflection first.
    pub fn act(&self, word: &WeylWord, w: &Weight) -> Result<Weight> {
        self.check(w)?;
        for &i in word.indices() {
            self.check_index(i)?;
        }
        let mut out = w.clone();
        for &i in word.indices().iter().rev() {
            self.reflect_in_place(&mut out, i);
        }
        Ok(out)
    }

    /// Whether a positive root (given as simple-root coefficients) only
    /// involves the simple roots in `support`.
    pub(crate) fn supported_on(beta: &[i64], support: &BTreeSet<usize>) -> bool {
        beta.iter()
            .enumerate()
            .all(|(i, &k)| k == 0 || support.contains(&i))
    }
}

/// Connected components of the Dynkin diagram.
fn components(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cartan.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..n {
                if !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Positive roots by closure: `beta + alpha_j` is a root iff the
/// `alpha_j`-string through `beta` extends upward, i.e. `p - <beta, alpha_j^vee> > 0`
/// where `p` counts the roots `beta - alpha_j, beta - 2 alpha_j, ...`.
fn closure_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let simple: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut all: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut out = simple.clone();
    let mut level = simple;
    while !level.is_empty() {
        let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
        for beta in &level {
            for j in 0..n {
                let pair: i64 = (0..n).map(|i| beta[i] * cartan[i][j]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[j] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let is_simple_j = beta.iter().enumerate().all(|(i, &k)| k == i64::from(i == j));
                if !is_simple_j && p - pair > 0 {
                    let mut up = beta.clone();
                    up[j] += 1;
                    next.insert(up);
                }
            }
        }
        let mut level_roots: Vec<Vec<i64>> = next.into_iter().collect();
        level_roots.sort_by(|a, b| b.cmp(a));
        all.extend(level_roots.iter().cloned());
        out.extend(level_roots.iter().cloned());
        level = level_roots;
    }
    out
}

/// All Cartan-preserving involutive permutations, identity first.
fn diagram_involutions(cartan: &[Vec<i64>]) -> Vec<DiagramInvolution> {
    fn extend(
        cartan: &[Vec<i64>],
        perm: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        i: usize,
        out: &mut Vec<DiagramInvolution>,
    ) {
        let n = cartan.len();
        if i == n {
            out.push(DiagramInvolution { perm: perm.iter().map(|p| p.unwrap()).collect() });
            return;
        }
        if perm[i].is_some() {
            extend(cartan, perm, used, i + 1, out);
            return;
        }
        for t in i..n {
            if used[t] || perm[t].is_some() && t != i {
                continue;
            }
            perm[i] = Some(t);
            perm[t] = Some(i);
            used[i] = true;
            used[t] = true;
            let consistent = (0..n).all(|a| {
                (0..n).all(|b| match (perm[a], perm[b]) {
                    (Some(pa), Some(pb)) => cartan[pa][pb] == cartan[a][b],
                    _ => true,
                })
            });
            if consistent {
                extend(cartan, perm, used, i + 1, out);
            }
            used[i] = false;
            used[t] = false;
            perm[i] = None;
            perm[t] = None;
        }
    }
    let n = cartan.len();
    let mut out = Vec::new();
    extend(cartan, &mut vec![None; n], &mut vec![false; n], 0, &mut out);
    out.sort();
    out
}
