//! The μ-admissible set of `GSp_{2g}` with Iwahori level.
//!
//! The main enumeration walks alcove coordinates directly: pick `x_0`, then
//! lower one coordinate at a time up to `x_g`, and fill in `x_{g+1}, …,
//! x_{2g-1}` by duality. By the Kottwitz–Rapoport theorem the permissible
//! alcoves found this way are exactly the admissible ones; the Bruhat-cone
//! construction in [`enumerate_admissible_oracle`] checks that independently
//! for small `g`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::alcove::{standard_vertex, ExtendedAlcove};
use crate::error::{Error, Result};
use crate::invariants::{r_table, superspecial_indices, InvariantTable};
use crate::weyl::{ExtAffineElement, GroupContext, ReducedWord};

pub const MIN_GENUS: usize = 1;
/// Largest genus the enumerator accepts.
pub const MAX_GENUS: usize = 6;
/// Largest genus for the exponential Bruhat-cone oracle.
pub const MAX_ORACLE_GENUS: usize = 3;

/// One KR stratum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumRecord {
    pub element: ExtAffineElement,
    pub word: ReducedWord,
    pub alcove: ExtendedAlcove,
    pub dim: usize,
    pub p_rank: usize,
    pub superspecial_at: BTreeSet<usize>,
    pub r_table: InvariantTable,
}

impl StratumRecord {
    pub fn from_element(element: ExtAffineElement) -> Result<Self> {
        let alcove = ExtendedAlcove::of(&element);
        if !alcove.is_mu_permissible() {
            return Err(Error::NotPermissible);
        }
        Ok(StratumRecord {
            word: element.reduced_word(),
            dim: element.length(),
            p_rank: p_rank(&element),
            superspecial_at: superspecial_indices(&element)?,
            r_table: r_table(&alcove)?,
            alcove,
            element,
        })
    }

    pub fn is_supersingular(&self) -> bool {
        !self.superspecial_at.is_empty()
    }
}

fn check_genus(g: usize, max: usize) -> Result<GroupContext> {
    if !(MIN_GENUS..=max).contains(&g) {
        return Err(Error::GenusOutOfRange { g, min: MIN_GENUS, max });
    }
    GroupContext::symplectic(g)
}

/// `½ · #{i : w(i) = i}` for `x = t^ν w`.
pub fn p_rank(x: &ExtAffineElement) -> usize {
    x.fixed_point_count() / 2
}

/// Every μ-permissible alcove of `GSp_{2g}`, sorted by flattened coordinates.
pub fn permissible_alcoves(g: usize) -> Result<Vec<ExtendedAlcove>> {
    let ctx = check_genus(g, MAX_GENUS)?;
    let n = 2 * g;
    // x_0 ∈ {0,1}^n with x_0(j) + x_0(θj) = 1
    let starts: Vec<Vec<i64>> = (0u32..1 << g)
        .map(|mask| {
            let mut v = vec![0i64; n];
            for j in 0..g {
                let up = mask >> j & 1 == 1;
                v[if up { j } else { n - 1 - j }] = 1;
            }
            v
        })
        .collect();
    let mut out: Vec<ExtendedAlcove> = starts
        .into_par_iter()
        .flat_map_iter(|x0| {
            let mut found = Vec::new();
            let mut chain = vec![x0];
            descend(ctx, g, &mut chain, &mut found);
            found
        })
        .collect();
    out.par_sort_unstable_by_key(ExtendedAlcove::flat);
    Ok(out)
}

fn descend(ctx: GroupContext, g: usize, chain: &mut Vec<Vec<i64>>, found: &mut Vec<ExtendedAlcove>) {
    let n = 2 * g;
    let i = chain.len() - 1;
    if i == g {
        let xg = &chain[g];
        if (0..n).all(|j| xg[j] == -xg[n - 1 - j]) {
            let mut x = chain.clone();
            for k in g + 1..n {
                let dual = &chain[n - k];
                x.push((0..n).map(|j| -dual[n - 1 - j]).collect());
            }
            found.push(ExtendedAlcove::from_raw(ctx, x));
        }
        return;
    }
    let omega = standard_vertex(n, i + 1);
    for j in 0..n {
        let v = chain[i][j] - 1;
        if v < omega[j] || v > omega[j] + 1 {
            continue;
        }
        let mut next = chain[i].clone();
        next[j] = v;
        // ω_{i+1} also differs from ω_i in coordinate i
        if next[i] > omega[i] + 1 {
            continue;
        }
        chain.push(next);
        descend(ctx, g, chain, found);
        chain.pop();
    }
}

/// All KR strata for genus `g`, ordered by flattened alcove coordinates.
pub fn enumerate_admissible(g: usize) -> Result<Vec<StratumRecord>> {
    permissible_alcoves(g)?
        .into_par_iter()
        .map(|a| StratumRecord::from_element(a.element()?))
        .collect()
}

/// The admissible set as a union of Bruhat lower cones of the `2^g`
/// translations `t^{w(μ)}`, each cone obtained from all subwords of one
/// reduced word. Exponential; limited to `g ≤ 3`.
pub fn enumerate_admissible_oracle(g: usize) -> Result<BTreeSet<ExtAffineElement>> {
    let ctx = check_genus(g, MAX_ORACLE_GENUS)?;
    let mut out = BTreeSet::new();
    for m in maximal_elements(g)? {
        let word = m.reduced_word();
        let k = word.letters.len();
        let gens: Vec<ExtAffineElement> = word
            .letters
            .iter()
            .map(|&s| ExtAffineElement::simple_reflection(ctx, s))
            .collect::<Result<_>>()?;
        for mask in 0u32..1 << k {
            let mut x = ExtAffineElement::identity(ctx);
            for (b, s) in gens.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    x = &x * s;
                }
            }
            out.insert(&x * &word.omega);
        }
    }
    Ok(out)
}

/// The translations `t^{w(μ)}`: vectors in `{0,1}^{2g}` with
/// `ν_k + ν_{θ(k)} = 1`, in lexicographic order.
pub fn maximal_elements(g: usize) -> Result<Vec<ExtAffineElement>> {
    let ctx = check_genus(g, usize::MAX)?;
    let n = 2 * g;
    let mut out: Vec<ExtAffineElement> = (0u64..1 << g)
        .map(|mask| {
            let nu: Vec<i64> = (0..n)
                .map(|k| {
                    let j = k.min(n - 1 - k);
                    let up = mask >> j & 1 == 1;
                    i64::from(up == (k < g))
                })
                .collect();
            ExtAffineElement::translation(ctx, nu)
        })
        .collect::<Result<_>>()?;
    out.sort();
    Ok(out)
}

/// `∏_j (k_j + 1)` with `k_0 = 0` and `k_j = i_j - i_{j-1}` for
/// `J = {i_0 < … < i_r} ⊆ {0..g}`.
pub fn component_count_a_j(g: usize, j: &BTreeSet<usize>) -> Result<u64> {
    if j.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(&bad) = j.iter().find(|&&i| i > g) {
        return Err(Error::IndexOutOfRange { index: bad, max: g });
    }
    let idx: Vec<usize> = j.iter().copied().collect();
    Ok(idx.windows(2).map(|w| (w[1] - w[0]) as u64 + 1).product())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_admissible(1).unwrap().len(), 3);
        assert_eq!(enumerate_admissible(2).unwrap().len(), 13);
        assert_eq!(enumerate_admissible(3).unwrap().len(), 79);
    }

    #[test]
    fn genus_range_is_enforced() {
        assert!(matches!(enumerate_admissible(0), Err(Error::GenusOutOfRange { .. })));
        assert!(matches!(enumerate_admissible(7), Err(Error::GenusOutOfRange { .. })));
        assert!(matches!(enumerate_admissible_oracle(4), Err(Error::GenusOutOfRange { .. })));
    }

    #[test]
    fn output_is_sorted() {
        let recs = enumerate_admissible(3).unwrap();
        assert!(recs.windows(2).all(|w| w[0].alcove.flat() < w[1].alcove.flat()));
    }

    #[test]
    fn p_rank_extremes() {
        let ctx = GroupContext::symplectic(3).unwrap();
        assert_eq!(p_rank(&ExtAffineElement::tau(ctx).unwrap()), 0);
        assert_eq!(p_rank(&ExtAffineElement::translation(ctx, ctx.mu()).unwrap()), 3);
    }

    #[test]
    fn maximal_elements_have_full_length() {
        for g in 1..=5 {
            let ms = maximal_elements(g).unwrap();
            assert_eq!(ms.len(), 1 << g);
            assert!(ms.iter().all(|m| m.length() == g * (g + 1) / 2));
        }
    }

    #[test]
    fn a_j_component_counts() {
        assert_eq!(component_count_a_j(2, &set(&[0, 1, 2])).unwrap(), 4);
        assert_eq!(component_count_a_j(5, &set(&[0])).unwrap(), 1);
        assert_eq!(component_count_a_j(4, &set(&[0, 4])).unwrap(), 5);
        assert_eq!(component_count_a_j(4, &set(&[])).unwrap_err(), Error::EmptySet);
        assert!(component_count_a_j(2, &set(&[3])).is_err());
    }
}
