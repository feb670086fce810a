use serde::{Deserialize, Serialize};

use super::ConstructionError;

/// Rank `k`, sub-ranks `m` (class `E1`) and `l` (class `E2`), and class sizes.
///
/// Records produced by [`BiUniformParams::new`] have positive sub-ranks.
/// Duals may have a zero sub-rank or zero rank (e.g. the dual of a square
/// uniform representation), so the type itself only requires
/// `m, l <= k <= m + l`, `n1 >= m` and `n2 >= l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ParamsWire", into = "ParamsWire")]
pub struct BiUniformParams {
    k: usize,
    m: usize,
    l: usize,
    n1: usize,
    n2: usize,
}

#[derive(Serialize, Deserialize)]
struct ParamsWire {
    k: usize,
    m: usize,
    l: usize,
    n1: usize,
    n2: usize,
}

impl TryFrom<ParamsWire> for BiUniformParams {
    type Error = ConstructionError;
    fn try_from(w: ParamsWire) -> Result<Self, Self::Error> {
        BiUniformParams::new_allowing_zero(w.k, w.m, w.l, w.n1, w.n2)
    }
}

impl From<BiUniformParams> for ParamsWire {
    fn from(p: BiUniformParams) -> Self {
        ParamsWire { k: p.k, m: p.m, l: p.l, n1: p.n1, n2: p.n2 }
    }
}

impl BiUniformParams {
    /// `1 <= m, l <= k`, `m + l >= k`, `n1 >= m`, `n2 >= l`.
    pub fn new(k: usize, m: usize, l: usize, n1: usize, n2: usize) -> Result<Self, ConstructionError> {
        if m == 0 || l == 0 {
            return Err(ConstructionError::InvalidParams("sub-ranks must be at least 1".into()));
        }
        Self::new_allowing_zero(k, m, l, n1, n2)
    }

    pub fn new_allowing_zero(k: usize, m: usize, l: usize, n1: usize, n2: usize) -> Result<Self, ConstructionError> {
        let fail = |msg: String| Err(ConstructionError::InvalidParams(msg));
        if m > k || l > k {
            return fail(format!("sub-ranks m={m}, l={l} must not exceed k={k}"));
        }
        if m + l < k {
            return fail(format!("m + l = {} is below k = {k}", m + l));
        }
        if n1 < m || n2 < l {
            return fail(format!("class sizes ({n1}, {n2}) must be at least the sub-ranks ({m}, {l})"));
        }
        Ok(BiUniformParams { k, m, l, n1, n2 })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    /// Ground-set size.
    pub fn n(&self) -> usize {
        self.n1 + self.n2
    }

    /// `d = m + l - k`, the dimension of the intersection of the class spans.
    pub fn d(&self) -> usize {
        self.m + self.l - self.k
    }

    pub fn max_class(&self) -> usize {
        self.n1.max(self.n2)
    }

    pub fn has_positive_subranks(&self) -> bool {
        self.m >= 1 && self.l >= 1
    }

    /// The matroid is uniform of rank `k` on all `n1 + n2` elements: either
    /// `k = m = l`, or both classes are entirely independent.
    pub fn is_uniform(&self) -> bool {
        (self.k == self.m && self.k == self.l) || (self.m == self.n1 && self.l == self.n2)
    }

    /// Exchanges the roles of `(E1, m)` and `(E2, l)`.
    pub fn swapped(&self) -> Self {
        BiUniformParams { k: self.k, m: self.l, l: self.m, n1: self.n2, n2: self.n1 }
    }

    /// Dual matroid: `k* = n1 + n2 - k`, `m* = n1 + l - k`, `l* = n2 + m - k`.
    pub fn dual(&self) -> Self {
        BiUniformParams {
            k: self.n1 + self.n2 - self.k,
            m: self.n1 + self.l - self.k,
            l: self.n2 + self.m - self.k,
            n1: self.n1,
            n2: self.n2,
        }
    }

    /// Admissible `(|B ∩ E1|, |B ∩ E2|)` for a basis `B`, with `|B ∩ E1|`
    /// descending from `m` (i.e. `t1 = 0, 1, ..., d`).
    pub fn splits(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..=self.d()).map(move |t1| (self.m - t1, self.k - (self.m - t1)))
    }

    /// Number of constrained `k`-subsets, saturating at `u64::MAX`.
    pub fn constrained_subset_count(&self) -> u64 {
        self.splits()
            .map(|(a, b)| binomial(self.n1, a).saturating_mul(binomial(self.n2, b)))
            .fold(0u64, u64::saturating_add)
    }
}

impl std::fmt::Display for BiUniformParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "k={} m={} l={} n1={} n2={} (d={})", self.k, self.m, self.l, self.n1, self.n2, self.d())
    }
}

/// `C(n, r)`, saturating at `u64::MAX`.
pub fn binomial(n: usize, r: usize) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}
