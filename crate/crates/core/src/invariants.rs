//! Numerical invariants of KR strata and the superspecial classification.

use std::collections::{BTreeMap, BTreeSet};

use crate::alcove::{standard_vertex, ExtendedAlcove};
use crate::error::{Error, Result};
use crate::weyl::{ExtAffineElement, GroupContext};

/// The numbers `r_ij` of an alcove together with the derived `σ`, `σ'`, `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantTable {
    g: usize,
    /// `r[i][j]` for `0 ≤ i, j < 2g`; the diagonal holds the full cyclic sum.
    r: Vec<Vec<i64>>,
}

impl InvariantTable {
    pub fn genus(&self) -> usize {
        self.g
    }

    /// `r_ij` with both indices read modulo `2g`, so that `r_{2g,j} = r_{0j}`.
    pub fn r(&self, i: usize, j: usize) -> i64 {
        let n = 2 * self.g;
        self.r[i % n][j % n]
    }

    /// `σ_ji = g - r_{2g-i, 2g-j}` for `0 ≤ j < i ≤ g`.
    pub fn sigma(&self, j: usize, i: usize) -> i64 {
        debug_assert!(j < i && i <= self.g);
        self.g as i64 - self.r(2 * self.g - i, 2 * self.g - j)
    }

    /// `σ'_ij = j - i - r_{2g-i, 2g-j}` for `0 ≤ i < j ≤ g`.
    pub fn sigma_prime(&self, i: usize, j: usize) -> i64 {
        debug_assert!(i < j && j <= self.g);
        (j - i) as i64 - self.r(2 * self.g - i, 2 * self.g - j)
    }

    /// `d_ij = r_{2g-i, j} + j` for `0 ≤ i, j ≤ g`.
    pub fn d(&self, i: usize, j: usize) -> i64 {
        debug_assert!(i <= self.g && j <= self.g);
        self.r(2 * self.g - i, j) + j as i64
    }

    /// The entries `r_ij` for `g ≤ i ≤ 2g`, `0 ≤ j < 2g`, `i ≢ j`, which
    /// determine the alcove.
    pub fn determining_entries(&self) -> BTreeMap<(usize, usize), i64> {
        let n = 2 * self.g;
        let mut out = BTreeMap::new();
        for i in self.g..=n {
            for j in 0..n {
                if i % n != j {
                    out.insert((i, j), self.r(i, j));
                }
            }
        }
        out
    }

    /// Every `σ`, `σ'` and `d` value, keyed by a short name such as
    /// `sigma_0_2`, `sigma'_0_2` or `d_1_2`, in a fixed order.
    pub fn named_values(&self) -> Vec<(String, i64)> {
        let g = self.g;
        let mut out = Vec::new();
        for i in 0..=g {
            for j in 0..i {
                out.push((format!("sigma_{j}_{i}"), self.sigma(j, i)));
            }
        }
        for i in 0..=g {
            for j in i + 1..=g {
                out.push((format!("sigma'_{i}_{j}"), self.sigma_prime(i, j)));
            }
        }
        for i in 0..=g {
            for j in 0..=g {
                out.push((format!("d_{i}_{j}"), self.d(i, j)));
            }
        }
        out
    }
}

/// Computes `r_ij = Σ_{k=j+1}^{i} (ω_i(k) - x_i(k) + 1)` with `k` running
/// cyclically through `Z/2g`.
pub fn r_table(alcove: &ExtendedAlcove) -> Result<InvariantTable> {
    let ctx = alcove.context();
    let g = ctx.genus().ok_or(Error::NotSymplectic(ctx))?;
    if !alcove.is_mu_permissible() {
        return Err(Error::NotPermissible);
    }
    let n = 2 * g;
    let mut r = vec![vec![0i64; n]; n];
    for (i, row) in r.iter_mut().enumerate() {
        let omega = standard_vertex(n, i);
        let x = alcove.vertex(i);
        // term(k) for 1-based k lives at coordinate k-1
        let term = |k: usize| omega[(k + n - 1) % n] - x[(k + n - 1) % n] + 1;
        for (j, slot) in row.iter_mut().enumerate() {
            let steps = match (i + n - j) % n {
                0 => n,
                s => s,
            };
            *slot = (1..=steps).map(|t| term(j + t)).sum();
        }
    }
    Ok(InvariantTable { g, r })
}

/// Whether `x ↦ r_table(x)` is injective on the given alcoves.
pub fn invariants_separate(alcoves: &[ExtendedAlcove]) -> Result<bool> {
    let mut seen = BTreeSet::new();
    for a in alcoves {
        if !seen.insert(r_table(a)?.determining_entries()) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn genus_of(x: &ExtAffineElement) -> Result<usize> {
    x.context().genus().ok_or(Error::NotSymplectic(x.context()))
}

/// `{i ≤ ⌊g/2⌋ : x_i = τ_i and x_{g-i} = τ_{g-i}}`, read off alcove
/// coordinates.
pub fn superspecial_indices(x: &ExtAffineElement) -> Result<BTreeSet<usize>> {
    let g = genus_of(x)?;
    let ctx = x.context();
    let mine = ExtendedAlcove::of(x);
    let tau = ExtendedAlcove::of(&ExtAffineElement::tau(ctx)?);
    Ok((0..=g / 2)
        .filter(|&i| mine.vertex(i) == tau.vertex(i) && mine.vertex(g - i) == tau.vertex(g - i))
        .collect())
}

/// `{i ≤ ⌊g/2⌋ : support(x) avoids i and g - i}`.
pub fn superspecial_indices_by_support(x: &ExtAffineElement) -> Result<BTreeSet<usize>> {
    let g = genus_of(x)?;
    let support = x.support();
    Ok((0..=g / 2)
        .filter(|&i| !support.contains(&i) && !support.contains(&(g - i)))
        .collect())
}

pub fn is_supersingular(x: &ExtAffineElement) -> Result<bool> {
    Ok(!superspecial_indices(x)?.is_empty())
}

/// Length of the longest element of `W_{{i,g-i}}`: `2i² + (g-2i)(g-2i-1)/2`.
pub fn superspecial_stratum_dimension(g: usize, i: usize) -> usize {
    let m = g - 2 * i;
    2 * i * i + m * m.saturating_sub(1) / 2
}

/// The dimension of the union of superspecial KR strata and every `i`
/// attaining it.
pub fn superspecial_union_dimension(g: usize) -> (usize, Vec<usize>) {
    let dims: Vec<usize> = (0..=g / 2).map(|i| superspecial_stratum_dimension(g, i)).collect();
    let max = dims.iter().copied().max().unwrap_or(0);
    let argmax = (0..dims.len()).filter(|&i| dims[i] == max).collect();
    (max, argmax)
}

/// The longest element of `W_{{i,g-i}} = ⟨s_j : j ∉ {i, g-i}⟩`, times τ.
pub fn longest_element(ctx: GroupContext, i: usize) -> Result<ExtAffineElement> {
    let g = ctx.genus().ok_or(Error::NotSymplectic(ctx))?;
    if i > g / 2 {
        return Err(Error::IndexOutOfRange { index: i, max: g / 2 });
    }
    let gens: Vec<ExtAffineElement> = (0..=g)
        .filter(|&j| j != i && j != g - i)
        .map(|j| ExtAffineElement::simple_reflection(ctx, j))
        .collect::<Result<_>>()?;
    let mut w = ExtAffineElement::identity(ctx);
    let mut len = 0;
    // climb until no generator increases the length
    'climb: loop {
        for s in &gens {
            let next = s * &w;
            let next_len = next.length();
            if next_len > len {
                w = next;
                len = next_len;
                continue 'climb;
            }
        }
        break;
    }
    Ok(&w * &ExtAffineElement::tau(ctx)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::evaluate_word;

    fn sp(g: usize) -> GroupContext {
        GroupContext::symplectic(g).unwrap()
    }

    fn golden(word: &[usize]) -> [i64; 5] {
        let ctx = sp(3);
        let x = &evaluate_word(ctx, word).unwrap() * &ExtAffineElement::tau(ctx).unwrap();
        let t = r_table(&ExtendedAlcove::of(&x)).unwrap();
        [t.sigma(0, 2), t.sigma_prime(0, 2), t.sigma(0, 3), t.sigma_prime(0, 3), t.d(1, 2)]
    }

    #[test]
    fn genus_three_worked_example() {
        assert_eq!(golden(&[]), [2, 2, 3, 3, 2]);
        assert_eq!(golden(&[2, 3]), [2, 1, 3, 2, 3]);
        assert_eq!(golden(&[1]), [2, 2, 3, 3, 2]);
        assert_eq!(golden(&[0, 1]), [1, 2, 2, 3, 2]);
        assert_eq!(golden(&[2, 0, 1]), [1, 2, 2, 3, 3]);
    }

    #[test]
    fn diagonal_is_the_genus() {
        let ctx = sp(3);
        let x = &evaluate_word(ctx, &[2, 0, 1]).unwrap() * &ExtAffineElement::tau(ctx).unwrap();
        let t = r_table(&ExtendedAlcove::of(&x)).unwrap();
        for i in 0..6 {
            assert_eq!(t.r(i, i), 3);
        }
        assert_eq!(t.r(6, 2), t.r(0, 2));
    }

    #[test]
    fn r_table_rejects_non_permissible() {
        let ctx = sp(2);
        let two_mu: Vec<i64> = ctx.mu().iter().map(|v| 2 * v).collect();
        let t = ExtAffineElement::translation(ctx, two_mu).unwrap();
        assert_eq!(r_table(&ExtendedAlcove::of(&t)).unwrap_err(), Error::NotPermissible);
    }

    #[test]
    fn superspecial_extremes() {
        for g in 1..=5 {
            let ctx = sp(g);
            let tau = ExtAffineElement::tau(ctx).unwrap();
            let all: BTreeSet<usize> = (0..=g / 2).collect();
            assert_eq!(superspecial_indices(&tau).unwrap(), all);
            let t_mu = ExtAffineElement::translation(ctx, ctx.mu()).unwrap();
            assert!(superspecial_indices(&t_mu).unwrap().is_empty());
            assert!(!is_supersingular(&t_mu).unwrap());
        }
    }

    #[test]
    fn union_dimensions() {
        let expected = [0, 2, 3, 8, 10, 18];
        for g in 1..=6 {
            let (dim, argmax) = superspecial_union_dimension(g);
            assert_eq!(dim, expected[g - 1]);
            assert_eq!(argmax, vec![if g % 2 == 0 { g / 2 } else { 0 }]);
        }
    }

    #[test]
    fn longest_elements_for_genus_two() {
        let ctx = sp(2);
        let tau = ExtAffineElement::tau(ctx).unwrap();
        assert_eq!(longest_element(ctx, 1).unwrap(), &evaluate_word(ctx, &[0, 2]).unwrap() * &tau);
        assert_eq!(longest_element(ctx, 0).unwrap(), &evaluate_word(ctx, &[1]).unwrap() * &tau);
        assert!(longest_element(ctx, 2).is_err());
    }

    #[test]
    fn longest_element_lengths_match_closed_form() {
        for g in 1..=6 {
            for i in 0..=g / 2 {
                let w = longest_element(sp(g), i).unwrap();
                assert_eq!(w.length(), superspecial_stratum_dimension(g, i), "g={g} i={i}");
            }
        }
    }
}
