//! Extended affine Weyl groups of `GL_n` (type Ã_{n-1}) and `GSp_2g` (type C̃_g).
//!
//! Elements are stored as a pair `(ν, w)` and act on `Z^n` by `v ↦ w·v + ν`,
//! where `(w·v)(w(k)) = v(k)`. The symplectic group is realized inside
//! `Z^{2g} ⋊ S_{2g}` as the elements commuting with the involution
//! `θ = (1,2g)(2,2g-1)…(g,g+1)`.
//!
//! The base alcove lies in the anti-dominant chamber. The positive roots are
//! `e_a - e_b` with `a < b` (upper triangular Borel).

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    /// `GL_n` together with the minuscule coweight `(1^(r), 0^(n-r))`.
    GeneralLinear { n: usize, r: usize },
    /// `GSp_2g`, with `μ = (1^(g), 0^(g))`.
    SymplecticSimilitude { g: usize },
}

/// Which group we compute in. Everything else (θ, μ, rank) is derived.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupContext {
    kind: GroupKind,
}

impl GroupContext {
    pub fn general_linear(n: usize, r: usize) -> Result<Self> {
        if n < 2 || r == 0 || r >= n {
            return Err(Error::InvalidContext(format!(
                "GL_n needs n >= 2 and 0 < r < n, got n={n}, r={r}"
            )));
        }
        Ok(GroupContext { kind: GroupKind::GeneralLinear { n, r } })
    }

    pub fn symplectic(g: usize) -> Result<Self> {
        if g == 0 {
            return Err(Error::InvalidContext("GSp_2g needs g >= 1".into()));
        }
        Ok(GroupContext { kind: GroupKind::SymplecticSimilitude { g } })
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    /// Size of the ambient `Z^n` (n for `GL_n`, 2g for `GSp_2g`).
    pub fn rank(&self) -> usize {
        match self.kind {
            GroupKind::GeneralLinear { n, .. } => n,
            GroupKind::SymplecticSimilitude { g } => 2 * g,
        }
    }

    /// Number of affine simple reflections: `s_0..s_{n-1}` or `s_0..s_g`.
    pub fn simple_reflection_count(&self) -> usize {
        match self.kind {
            GroupKind::GeneralLinear { n, .. } => n,
            GroupKind::SymplecticSimilitude { g } => g + 1,
        }
    }

    pub fn is_symplectic(&self) -> bool {
        matches!(self.kind, GroupKind::SymplecticSimilitude { .. })
    }

    pub fn genus(&self) -> Option<usize> {
        match self.kind {
            GroupKind::SymplecticSimilitude { g } => Some(g),
            GroupKind::GeneralLinear { .. } => None,
        }
    }

    /// `r`, the number of ones in `μ`.
    pub fn mu_weight(&self) -> usize {
        match self.kind {
            GroupKind::GeneralLinear { r, .. } => r,
            GroupKind::SymplecticSimilitude { g } => g,
        }
    }

    pub fn mu(&self) -> Vec<i64> {
        let r = self.mu_weight();
        (0..self.rank()).map(|k| i64::from(k < r)).collect()
    }

    /// The involution θ as a 0-based one-line permutation (symplectic only).
    pub fn theta(&self) -> Option<Vec<usize>> {
        let n = self.rank();
        self.is_symplectic().then(|| (0..n).map(|k| n - 1 - k).collect())
    }
}

impl fmt::Display for GroupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GroupKind::GeneralLinear { n, r } => write!(f, "GL_{n} (r={r})"),
            GroupKind::SymplecticSimilitude { g } => write!(f, "GSp_{}", 2 * g),
        }
    }
}

/// An element `t^ν w` of the extended affine Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtAffineElement {
    ctx: GroupContext,
    nu: Vec<i64>,
    // 0-based one-line notation: perm[k] = w(k)
    perm: Vec<usize>,
}

impl ExtAffineElement {
    /// Builds an element from a translation and a 0-based one-line permutation.
    pub fn new(ctx: GroupContext, nu: Vec<i64>, perm: Vec<usize>) -> Result<Self> {
        let n = ctx.rank();
        if nu.len() != n || perm.len() != n {
            return Err(Error::InvalidElement(format!(
                "expected vectors of length {n}, got nu={} perm={}",
                nu.len(),
                perm.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidElement(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if ctx.is_symplectic() {
            if (0..n).any(|k| perm[n - 1 - k] != n - 1 - perm[k]) {
                return Err(Error::InvalidElement(format!(
                    "finite part {perm:?} does not commute with theta"
                )));
            }
            let c = nu[0] + nu[n - 1];
            if (0..n).any(|k| nu[k] + nu[n - 1 - k] != c) {
                return Err(Error::InvalidElement(format!(
                    "translation {nu:?} is not a symplectic cocharacter"
                )));
            }
        }
        Ok(ExtAffineElement { ctx, nu, perm })
    }

    /// Same as [`ExtAffineElement::new`] but with a 1-based permutation.
    pub fn from_one_line(ctx: GroupContext, nu: Vec<i64>, w: &[usize]) -> Result<Self> {
        if w.contains(&0) {
            return Err(Error::InvalidElement("one-line notation is 1-based".into()));
        }
        Self::new(ctx, nu, w.iter().map(|&k| k - 1).collect())
    }

    pub fn identity(ctx: GroupContext) -> Self {
        let n = ctx.rank();
        ExtAffineElement { ctx, nu: vec![0; n], perm: (0..n).collect() }
    }

    pub fn translation(ctx: GroupContext, nu: Vec<i64>) -> Result<Self> {
        let n = ctx.rank();
        Self::new(ctx, nu, (0..n).collect())
    }

    /// The affine simple reflection `s_i`.
    ///
    /// For `GL_n`: `s_i = (i, i+1)` for `1 ≤ i < n` and `s_0 = t^(-1,0,…,0,1) (1,n)`.
    /// For `GSp_2g`: `s_i = (i,i+1)(2g+1-i,2g-i)` for `1 ≤ i < g`, `s_g = (g,g+1)`,
    /// and `s_0 = t^(-1,0,…,0,1) (1,2g)`.
    pub fn simple_reflection(ctx: GroupContext, i: usize) -> Result<Self> {
        if i >= ctx.simple_reflection_count() {
            return Err(Error::ReflectionOutOfRange { ctx, index: i });
        }
        let n = ctx.rank();
        let mut nu = vec![0; n];
        let mut perm: Vec<usize> = (0..n).collect();
        if i == 0 {
            nu[0] = -1;
            nu[n - 1] = 1;
            perm.swap(0, n - 1);
        } else {
            perm.swap(i - 1, i);
            if ctx.is_symplectic() && i < n / 2 {
                perm.swap(n - i, n - 1 - i);
            }
        }
        Ok(ExtAffineElement { ctx, nu, perm })
    }

    /// The length-zero generator `τ = t^(0^g,1^g) (1,g+1)(2,g+2)…(g,2g)` of Ω.
    pub fn tau(ctx: GroupContext) -> Result<Self> {
        let g = ctx.genus().ok_or(Error::NotSymplectic(ctx))?;
        let nu = (0..2 * g).map(|k| i64::from(k >= g)).collect();
        let perm = (0..2 * g).map(|k| (k + g) % (2 * g)).collect();
        Ok(ExtAffineElement { ctx, nu, perm })
    }

    /// `τ^k` for any integer `k` (using `τ^2 = t^(1,…,1)`).
    pub fn tau_power(ctx: GroupContext, k: i64) -> Result<Self> {
        let tau = Self::tau(ctx)?;
        let base = if k >= 0 { tau } else { tau.inverse() };
        let mut out = Self::identity(ctx);
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }

    pub fn context(&self) -> GroupContext {
        self.ctx
    }

    pub fn nu(&self) -> &[i64] {
        &self.nu
    }

    /// 0-based one-line notation of the finite part.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// 1-based one-line notation of the finite part.
    pub fn one_line(&self) -> Vec<usize> {
        self.perm.iter().map(|&k| k + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.nu.iter().all(|&v| v == 0) && self.perm.iter().enumerate().all(|(k, &p)| k == p)
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch(self.ctx, other.ctx));
        }
        let n = self.ctx.rank();
        let mut nu = self.nu.clone();
        for k in 0..n {
            nu[self.perm[k]] += other.nu[k];
        }
        let perm = other.perm.iter().map(|&k| self.perm[k]).collect();
        Ok(ExtAffineElement { ctx: self.ctx, nu, perm })
    }

    pub fn inverse(&self) -> Self {
        let n = self.ctx.rank();
        let mut perm = vec![0; n];
        for k in 0..n {
            perm[self.perm[k]] = k;
        }
        // x^{-1}(v) = w^{-1}(v - ν)
        let nu = (0..n).map(|k| -self.nu[self.perm[k]]).collect();
        ExtAffineElement { ctx: self.ctx, nu, perm }
    }

    /// Applies the element to a vector: `v ↦ w·v + ν`.
    pub fn act(&self, v: &[i64]) -> Vec<i64> {
        let mut out = self.nu.clone();
        for (k, &vk) in v.iter().enumerate() {
            out[self.perm[k]] += vk;
        }
        out
    }

    /// Length via the root-system formula
    /// `ℓ(w t^λ) = Σ_{α<0, wα>0} |⟨α,λ⟩ + 1| + Σ_{α<0, wα<0} |⟨α,λ⟩|`.
    ///
    /// For `GSp_2g` the type C roots are realized as the functionals
    /// `u_a - u_b`, taken once per θ-orbit.
    pub fn length(&self) -> usize {
        let n = self.ctx.rank();
        // x = t^ν w = w t^λ with λ = w^{-1}ν
        let lambda: Vec<i64> = (0..n).map(|k| self.nu[self.perm[k]]).collect();
        let symplectic = self.ctx.is_symplectic();
        let mut total: i64 = 0;
        for a in 0..n {
            for b in 0..a {
                // α = e_a - e_b is negative
                if symplectic && (a, b) > (n - 1 - b, n - 1 - a) {
                    continue;
                }
                let pairing = lambda[a] - lambda[b];
                if self.perm[a] < self.perm[b] {
                    total += (pairing + 1).abs();
                } else {
                    total += pairing.abs();
                }
            }
        }
        total as usize
    }

    /// `Σ_i x_i` over the alcove vertices `x_i = w·ω_i + ν`; an interior point of
    /// the image of the base alcove, scaled by `n`.
    fn barycenter(&self) -> Vec<i64> {
        let n = self.ctx.rank() as i64;
        let mut s: Vec<i64> = self.nu.iter().map(|&v| n * v).collect();
        for (k, &p) in self.perm.iter().enumerate() {
            s[p] -= n - 1 - k as i64;
        }
        s
    }

    /// Sign test: `s_i` is a left descent iff the wall of `s_i` separates the
    /// base alcove from `x·a`.
    fn descent_on_barycenter(s: &[i64], i: usize) -> bool {
        let n = s.len();
        if i == 0 {
            s[0] - s[n - 1] + (n as i64) < 0
        } else {
            s[i] - s[i - 1] < 0
        }
    }

    /// True iff `ℓ(s_i x) < ℓ(x)`.
    pub fn is_left_descent(&self, i: usize) -> bool {
        i < self.ctx.simple_reflection_count()
            && Self::descent_on_barycenter(&self.barycenter(), i)
    }

    /// Left descents in increasing order.
    pub fn left_descents(&self) -> Vec<usize> {
        let s = self.barycenter();
        (0..self.ctx.simple_reflection_count())
            .filter(|&i| Self::descent_on_barycenter(&s, i))
            .collect()
    }

    /// Greedy reduced word: repeatedly strip the smallest left descent.
    ///
    /// The result satisfies `x = s_{l_1} ⋯ s_{l_k} · ω` with `ω` of length 0.
    pub fn reduced_word(&self) -> ReducedWord {
        let n = self.ctx.rank();
        let count = self.ctx.simple_reflection_count();
        let mut bary = self.barycenter();
        let mut letters = Vec::new();
        while let Some(i) = (0..count).find(|&i| Self::descent_on_barycenter(&bary, i)) {
            letters.push(i);
            // apply s_i to the barycenter: linear part, then n·ν(s_i)
            if i == 0 {
                bary.swap(0, n - 1);
                bary[0] -= n as i64;
                bary[n - 1] += n as i64;
            } else {
                bary.swap(i - 1, i);
                if self.ctx.is_symplectic() && i < n / 2 {
                    bary.swap(n - i, n - 1 - i);
                }
            }
        }
        let mut omega = self.clone();
        for &i in &letters {
            omega = &Self::simple_reflection(self.ctx, i).expect("letter in range") * &omega;
        }
        ReducedWord { letters, omega }
    }

    /// The set of simple reflections occurring in a reduced word of the
    /// `W_a`-part of the element.
    pub fn support(&self) -> BTreeSet<usize> {
        self.reduced_word().letters.into_iter().collect()
    }

    /// Extended Bruhat order: equal Ω-parts and comparable `W_a`-parts.
    ///
    /// Walks one reduced word `s_1 ⋯ s_k` of `other` letter by letter; at each
    /// step `s` is a left descent of the remaining part `v`, and
    /// `u ≤ v ⟺ su ≤ sv` when `su < u`, else `u ≤ sv`.
    pub fn bruhat_leq(&self, other: &Self) -> bool {
        if self.ctx != other.ctx {
            return false;
        }
        let word = other.reduced_word();
        let mut u = self.clone();
        let mut len_u = u.length();
        let mut remaining = word.letters.len();
        if len_u > remaining {
            return false;
        }
        for &s in &word.letters {
            if u.is_left_descent(s) {
                u = &Self::simple_reflection(self.ctx, s).expect("letter in range") * &u;
                len_u -= 1;
            }
            remaining -= 1;
            if len_u > remaining {
                return false;
            }
        }
        u == word.omega
    }

    /// Number of fixed points of the finite part.
    pub fn fixed_point_count(&self) -> usize {
        self.perm.iter().enumerate().filter(|(k, &p)| *k == p).count()
    }

    /// Image in `π_1 ≅ Z`: `ν_1 + ν_2g` for `GSp_2g`, `Σ ν` for `GL_n`.
    /// Equal to `k` on `W_a τ^k`.
    pub fn omega_degree(&self) -> i64 {
        if self.ctx.is_symplectic() {
            self.nu[0] + self.nu[self.nu.len() - 1]
        } else {
            self.nu.iter().sum()
        }
    }

    pub fn in_affine_weyl_group(&self) -> bool {
        self.omega_degree() == 0
    }
}

impl Mul for &ExtAffineElement {
    type Output = ExtAffineElement;

    /// Panics on context mismatch; use [`ExtAffineElement::compose`] otherwise.
    fn mul(self, rhs: &ExtAffineElement) -> ExtAffineElement {
        self.compose(rhs).expect("multiplying elements of different groups")
    }
}

impl fmt::Display for ExtAffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{:?} {:?}", self.nu, self.one_line())
    }
}

/// A reduced expression `s_{l_1} ⋯ s_{l_k} · ω` with `ℓ(ω) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    pub letters: Vec<usize>,
    pub omega: ExtAffineElement,
}

impl ReducedWord {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn evaluate(&self) -> ExtAffineElement {
        let ctx = self.omega.context();
        let mut out = self.omega.clone();
        for &i in self.letters.iter().rev() {
            out = &ExtAffineElement::simple_reflection(ctx, i).expect("letter in range") * &out;
        }
        out
    }

    /// The exponent `k` with `ω = τ^k` (or the `π_1`-degree for `GL_n`).
    pub fn omega_degree(&self) -> i64 {
        self.omega.omega_degree()
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word: Vec<String> = self.letters.iter().map(|i| format!("s{i}")).collect();
        if word.is_empty() {
            write!(f, "e")?;
        } else {
            write!(f, "{}", word.join(" "))?;
        }
        write!(f, " · ω[{}]", self.omega.omega_degree())
    }
}

/// Evaluates `s_{l_1} ⋯ s_{l_k}` (left to right) in the given group.
pub fn evaluate_word(ctx: GroupContext, letters: &[usize]) -> Result<ExtAffineElement> {
    let mut out = ExtAffineElement::identity(ctx);
    for &i in letters {
        out = out.compose(&ExtAffineElement::simple_reflection(ctx, i)?)?;
    }
    Ok(out)
}
