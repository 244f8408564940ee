//! Exact point counts and component counts.

pub mod coxeter;
pub mod mass;
pub mod poly;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::weyl::ExtAffineElement;

pub use coxeter::{FiniteCoxeterGroup, TwistedCoxeterDiagram};
pub use mass::{bernoulli, is_prime, lambda_mass, lambda_mass_rational, sp_order_mod_n, zeta_negative_odd};
pub use poly::QPolynomial;

/// `Σ_{w ∈ W, σ(w) = w} q^{ℓ(w)}` for the group of `diagram`.
pub fn twisted_flag_polynomial(diagram: &TwistedCoxeterDiagram) -> Result<QPolynomial> {
    Ok(diagram.enumerate()?.twisted_poincare())
}

/// `∏_{i=1}^{g} (1 - (-q)^i) / (1 - (-1)^i q)` as a polynomial in `q`.
pub fn unitary_flag_polynomial(g: usize) -> QPolynomial {
    let mut num = QPolynomial::one();
    let mut den = QPolynomial::one();
    for i in 1..=g {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        num = &num * &(&QPolynomial::one() - &QPolynomial::monomial(sign, i));
        den = &den * &(&QPolynomial::one() - &QPolynomial::monomial(sign, 1));
    }
    num.div_exact(&den).expect("the unitary flag product is a polynomial")
}

/// The even/odd product form of the unitary flag count:
/// `∏_{i=1}^{d} (q^{2i}-1)(q^{2i∓1}+1)/(q^2-1)` for `g = 2d` or `g = 2d+1`.
pub fn unitary_flag_polynomial_closed_form(g: usize) -> QPolynomial {
    let d = g / 2;
    let q2m1 = QPolynomial::from_i64(&[-1, 0, 1]);
    let mut out = QPolynomial::one();
    for i in 1..=d {
        let odd_exp = if g.is_multiple_of(2) { 2 * i - 1 } else { 2 * i + 1 };
        let factor = &(&QPolynomial::monomial(1, 2 * i) - &QPolynomial::one())
            * &(&QPolynomial::monomial(1, odd_exp) + &QPolynomial::one());
        out = &out * &factor.div_exact(&q2m1).expect("q^2-1 divides q^{2i}-1");
    }
    out
}

/// Number of `F_q`-rational Borel subgroups of the unitary group in `g`
/// variables.
pub fn unitary_flag_count(g: usize, q: u64) -> BigInt {
    unitary_flag_polynomial(g).evaluate_u64(q)
}

/// All non-empty σ-stable node subsets.
pub fn frobenius_stable_subsets(diagram: &TwistedCoxeterDiagram) -> Vec<BTreeSet<usize>> {
    diagram.stable_subsets()
}

fn genus_of(w: &ExtAffineElement) -> Result<usize> {
    w.context().genus().ok_or(Error::NotSymplectic(w.context()))
}

/// The σ-closure `K` of `support(w)` inside `{0..g}`, σ: `i ↦ g - i`.
pub fn stable_support(w: &ExtAffineElement) -> Result<BTreeSet<usize>> {
    let g = genus_of(w)?;
    Ok(w.support().into_iter().flat_map(|i| [i, g - i]).collect())
}

/// `J = {0..g} \ K` where `K` is the σ-closure of `support(w)`.
///
/// With the complement convention `W_J = ⟨s_j : j ∉ J⟩`, this is the
/// largest `J` (smallest σ-stable standard parabolic `W_J`) with `w ∈ W_J`.
/// The Ω-part of `w` is ignored.
pub fn minimal_stable_parabolic(w: &ExtAffineElement) -> Result<BTreeSet<usize>> {
    let g = genus_of(w)?;
    let k = stable_support(w)?;
    if k.len() == g + 1 {
        return Err(Error::NotSuperspecial);
    }
    Ok((0..=g).filter(|j| !k.contains(j)).collect())
}

/// The twisted diagram of `W_J = ⟨s_j : j ∉ J⟩` inside `C̃_g`.
pub fn parahoric_diagram(g: usize, j: &BTreeSet<usize>) -> Result<TwistedCoxeterDiagram> {
    if let Some(&bad) = j.iter().find(|&&x| x > g) {
        return Err(Error::IndexOutOfRange { index: bad, max: g });
    }
    let complement: BTreeSet<usize> = (0..=g).filter(|x| !j.contains(x)).collect();
    TwistedCoxeterDiagram::affine_c(g)?.restrict(&complement)
}

/// Dimension and number of irreducible components of the Deligne–Lusztig
/// variety `X(w)` in the twisted group of `diagram`, over `F_q`.
///
/// The component count is `#(G/P)(F_q)` for the smallest σ-stable standard
/// parabolic `P` whose Weyl group contains `w`.
pub fn dl_variety_stats(
    diagram: &TwistedCoxeterDiagram,
    word: &[usize],
    q: u64,
) -> Result<(usize, BigInt)> {
    let group = diagram.enumerate()?;
    let w = group.element_of_word(word)?;
    let closure = diagram.stable_closure(&group.support(w))?;
    let full = group.twisted_poincare().evaluate_u64(q);
    let sub = twisted_flag_polynomial(&diagram.restrict(&closure)?)?.evaluate_u64(q);
    let (count, rem) = full.div_rem(&sub);
    if !rem.is_zero() {
        return Err(Error::NonIntegral {
            context: "Deligne-Lusztig component count".into(),
            value: format!("{full}/{sub}"),
        });
    }
    Ok((group.length(w), count))
}

/// `#A_τ = #Λ_{g,1,N} · #(unitary flags)(F_p)`.
pub fn a_tau_count(g: usize, p: u64, n: u64) -> Result<BigInt> {
    Ok(lambda_mass(g, p, n)? * unitary_flag_count(g, p))
}

/// Number of connected components of the KR stratum of `w·τ^k`, for a
/// superspecial `w`:
/// `#Λ_{g,1,N} · #(unitary flags)(F_p) / #(G'_J/B'_J)(F_p)` with `J` from
/// [`minimal_stable_parabolic`].
pub fn kr_connected_components(w: &ExtAffineElement, p: u64, n: u64) -> Result<BigInt> {
    let g = genus_of(w)?;
    let j = minimal_stable_parabolic(w)?;
    let flags = twisted_flag_polynomial(&parahoric_diagram(g, &j)?)?.evaluate_u64(p);
    let total = a_tau_count(g, p, n)?;
    let (count, rem) = total.div_rem(&flags);
    if !rem.is_zero() {
        return Err(Error::NonIntegral {
            context: format!("component count of J = {j:?}"),
            value: format!("{total}/{flags}"),
        });
    }
    Ok(count)
}
