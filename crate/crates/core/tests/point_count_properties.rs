use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::Zero;

use krstrata::hermitian::{isotropic_flag_count, isotropic_point_count};
use krstrata::invariants::superspecial_indices;
use krstrata::point_counts::{
    a_tau_count, dl_variety_stats, frobenius_stable_subsets, kr_connected_components, lambda_mass,
    parahoric_diagram, sp_order_mod_n, twisted_flag_polynomial, unitary_flag_count,
    unitary_flag_polynomial, QPolynomial, TwistedCoxeterDiagram,
};
use krstrata::{enumerate_admissible, ExtAffineElement, GroupContext};

fn set(xs: &[usize]) -> BTreeSet<usize> {
    xs.iter().copied().collect()
}

#[test]
fn unitary_flag_product_is_the_twisted_poincare_sum() {
    for g in 1..=8 {
        let d = TwistedCoxeterDiagram::symmetric_group(g, true).unwrap();
        assert_eq!(twisted_flag_polynomial(&d).unwrap(), unitary_flag_polynomial(g), "g={g}");
    }
}

#[test]
fn untwisted_sum_is_the_classical_poincare_polynomial() {
    for n in 1..=6 {
        let d = TwistedCoxeterDiagram::symmetric_group(n, false).unwrap();
        let mut expected = QPolynomial::one();
        for k in 1..=n {
            expected = &expected * &QPolynomial::from_i64(&vec![1; k]);
        }
        assert_eq!(twisted_flag_polynomial(&d).unwrap(), expected, "n={n}");
    }
}

#[test]
fn stable_subsets_brute_force() {
    let d = TwistedCoxeterDiagram::affine_c(2).unwrap();
    let brute: Vec<BTreeSet<usize>> = (1u32..8)
        .map(|m| (0..3).filter(|i| m >> i & 1 == 1).collect::<BTreeSet<usize>>())
        .filter(|s| s.iter().all(|&i| s.contains(&(2 - i))))
        .collect();
    assert_eq!(frobenius_stable_subsets(&d), brute);
    assert_eq!(brute, vec![set(&[1]), set(&[0, 2]), set(&[0, 1, 2])]);

    let trivial = TwistedCoxeterDiagram::symmetric_group(5, false).unwrap();
    assert_eq!(frobenius_stable_subsets(&trivial).len(), 15);
}

#[test]
fn coprime_rotation_of_a_cycle_has_only_the_full_set() {
    for (r, s) in [(1, 1), (1, 2), (2, 3), (3, 4), (3, 5), (1, 6)] {
        let d = TwistedCoxeterDiagram::cycle(r + s, r).unwrap();
        let subsets = frobenius_stable_subsets(&d);
        assert_eq!(subsets, vec![(0..r + s).collect::<BTreeSet<_>>()], "r={r} s={s}");
    }
    // with a common factor there are more
    assert!(frobenius_stable_subsets(&TwistedCoxeterDiagram::cycle(4, 2).unwrap()).len() > 1);
}

/// Every element of the standard parabolic generated by `subset`, by
/// closure under right multiplication.
fn parabolic_elements(
    group: &krstrata::point_counts::FiniteCoxeterGroup,
    labels: &[usize],
    subset: &BTreeSet<usize>,
) -> HashSet<usize> {
    let gens: Vec<usize> = (0..labels.len()).filter(|&i| subset.contains(&labels[i])).collect();
    let mut seen = HashSet::from([0usize]);
    let mut todo = vec![0usize];
    while let Some(w) = todo.pop() {
        for &i in &gens {
            let y = group.right_multiply(w, i);
            if seen.insert(y) {
                todo.push(y);
            }
        }
    }
    seen
}

#[test]
fn irreducible_exactly_outside_proper_stable_parabolics() {
    let mut diagrams = Vec::new();
    for n in 2..=6 {
        diagrams.push(TwistedCoxeterDiagram::symmetric_group(n, true).unwrap());
        diagrams.push(TwistedCoxeterDiagram::symmetric_group(n, false).unwrap());
    }
    for g in 2..=4 {
        for i in 0..=g / 2 {
            diagrams.push(parahoric_diagram(g, &set(&[i, g - i])).unwrap());
        }
    }
    for d in diagrams {
        let group = d.enumerate().unwrap();
        let labels = d.labels().to_vec();
        let full: BTreeSet<usize> = labels.iter().copied().collect();
        let proper: Vec<HashSet<usize>> = frobenius_stable_subsets(&d)
            .into_iter()
            .filter(|s| *s != full)
            .map(|s| parabolic_elements(&group, &labels, &s))
            .collect();
        for w in 0..group.order() {
            // the empty parabolic is proper and contains only the identity
            let brute = w != 0 && !proper.iter().any(|p| p.contains(&w));
            let (dim, count) = dl_variety_stats(&d, &group.reduced_word(w), 2).unwrap();
            assert_eq!(dim, group.length(w));
            assert_eq!(count == BigInt::from(1), brute, "{labels:?} w={:?}", group.reduced_word(w));
        }
    }
}

#[test]
fn twisted_s3_examples() {
    let d = TwistedCoxeterDiagram::symmetric_group(3, true).unwrap();
    let (dim, count) = dl_variety_stats(&d, &[], 2).unwrap();
    assert_eq!((dim, count), (0, twisted_flag_polynomial(&d).unwrap().evaluate_u64(2)));
    assert_eq!(dl_variety_stats(&d, &[1, 2, 1], 5).unwrap(), (3, BigInt::from(1)));
    assert_eq!(dl_variety_stats(&d, &[1], 2).unwrap(), (1, BigInt::from(1)));
}

/// Counts ordered symplectic bases `(e_1..e_g, f_1..f_g)` of `(Z/N)^{2g}`.
fn symplectic_bases(g: usize, n: i64) -> u64 {
    let dim = 2 * g;
    let vectors: Vec<Vec<i64>> = (0..n.pow(dim as u32))
        .map(|mut k| {
            (0..dim)
                .map(|_| {
                    let d = k % n;
                    k /= n;
                    d
                })
                .collect()
        })
        .collect();
    // form: Σ_i a_i b_{g+i} - a_{g+i} b_i
    let omega = |a: &[i64], b: &[i64]| -> i64 {
        (0..g).map(|i| a[i] * b[g + i] - a[g + i] * b[i]).sum::<i64>().rem_euclid(n)
    };
    // choose e_1, f_1, e_2, f_2, ... in that order
    fn go(
        chosen: &mut Vec<usize>,
        g: usize,
        vectors: &[Vec<i64>],
        omega: &dyn Fn(&[i64], &[i64]) -> i64,
    ) -> u64 {
        if chosen.len() == 2 * g {
            return 1;
        }
        let k = chosen.len();
        let mut total = 0;
        for (idx, v) in vectors.iter().enumerate() {
            let ok = chosen.iter().enumerate().all(|(pos, &c)| {
                let want = if k % 2 == 1 && pos == k - 1 { 1 } else { 0 };
                omega(&vectors[c], v) == want
            });
            if ok {
                chosen.push(idx);
                total += go(chosen, g, vectors, omega);
                chosen.pop();
            }
        }
        total
    }
    go(&mut Vec::new(), g, &vectors, &omega)
}

#[test]
fn symplectic_group_order_matches_basis_count() {
    for (g, n) in [(1usize, 3i64), (1, 4), (1, 5), (2, 3)] {
        assert_eq!(
            sp_order_mod_n(g, n as u64).unwrap(),
            BigInt::from(symplectic_bases(g, n)),
            "g={g} N={n}"
        );
    }
}

#[test]
fn genus_one_mass_is_p_minus_one() {
    for p in [13u64, 37, 73, 2, 5, 7] {
        let expected = sp_order_mod_n(1, 3).unwrap() * BigInt::from(p - 1) / BigInt::from(24);
        assert_eq!(lambda_mass(1, p, 3).unwrap(), expected);
        assert_eq!(a_tau_count(1, p, 3).unwrap(), expected);
    }
}

#[test]
fn all_counts_are_integral_for_small_genus() {
    for g in 1..=4 {
        let ctx = GroupContext::symplectic(g).unwrap();
        let tau_inv = ExtAffineElement::tau(ctx).unwrap().inverse();
        let recs = enumerate_admissible(g).unwrap();
        // level 3 needs p coprime to 3, so p = 3 is run at level 4
        for (p, n) in [(2u64, 3u64), (3, 4), (5, 3)] {
            let mass = lambda_mass(g, p, n).unwrap();
            assert!(mass > BigInt::zero());
            let a_tau = a_tau_count(g, p, n).unwrap();
            for r in &recs {
                let w = &r.element * &tau_inv;
                let result = kr_connected_components(&w, p, n);
                if superspecial_indices(&r.element).unwrap().is_empty() {
                    assert!(result.is_err());
                } else {
                    let count = result.unwrap();
                    assert!(count > BigInt::zero() && count <= a_tau);
                }
            }
        }
    }
}

#[test]
fn parabolic_flag_counts_inside_the_finite_part_divide_the_unitary_count() {
    for g in 2..=4 {
        let d = TwistedCoxeterDiagram::affine_c(g).unwrap();
        for k in frobenius_stable_subsets(&d) {
            if k.contains(&0) || k.len() == g + 1 {
                continue;
            }
            let j: BTreeSet<usize> = (0..=g).filter(|x| !k.contains(x)).collect();
            let sub = twisted_flag_polynomial(&parahoric_diagram(g, &j).unwrap()).unwrap();
            for p in [2u64, 3] {
                let full = unitary_flag_count(g, p);
                assert!((full % sub.evaluate_u64(p)).is_zero(), "g={g} K={k:?} p={p}");
            }
        }
    }
}

#[test]
fn hermitian_oracle_matches_the_unitary_flag_count() {
    for (g, q) in [(1usize, 2u32), (2, 2), (2, 3), (3, 2), (3, 3), (4, 2)] {
        assert_eq!(
            BigInt::from(isotropic_flag_count(g, q).unwrap()),
            unitary_flag_count(g, u64::from(q)),
            "g={g} q={q}"
        );
    }
    assert_eq!(isotropic_point_count(3, 3).unwrap(), 28);
}
