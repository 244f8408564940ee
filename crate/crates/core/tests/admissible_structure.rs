use std::collections::{BTreeSet, HashSet};

use krstrata::admissible::{enumerate_admissible_oracle, maximal_elements, permissible_alcoves};
use krstrata::alcove::standard_vertex;
use krstrata::{enumerate_admissible, ExtAffineElement, ExtendedAlcove, GroupContext};

fn admissible_set(g: usize) -> BTreeSet<ExtAffineElement> {
    enumerate_admissible(g).unwrap().into_iter().map(|r| r.element).collect()
}

/// Every element obtained by evaluating a subword of one fixed reduced word
/// of `b`, times the Ω-part of `b`.
fn subword_cone(b: &ExtAffineElement) -> HashSet<ExtAffineElement> {
    let ctx = b.context();
    let word = b.reduced_word();
    let k = word.letters.len();
    (0u32..1 << k)
        .map(|mask| {
            let mut x = ExtAffineElement::identity(ctx);
            for (pos, &s) in word.letters.iter().enumerate() {
                if mask >> pos & 1 == 1 {
                    x = &x * &ExtAffineElement::simple_reflection(ctx, s).unwrap();
                }
            }
            &x * &word.omega
        })
        .collect()
}

#[test]
fn permissible_equals_admissible_for_small_genus() {
    for g in 1..=3 {
        assert_eq!(admissible_set(g), enumerate_admissible_oracle(g).unwrap(), "g={g}");
    }
}

#[test]
fn admissible_set_is_downward_closed() {
    for g in 1..=3 {
        let adm = admissible_set(g);
        let ctx = GroupContext::symplectic(g).unwrap();
        for x in &adm {
            for i in 0..=g {
                if x.is_left_descent(i) {
                    let s = ExtAffineElement::simple_reflection(ctx, i).unwrap();
                    assert!(adm.contains(&(&s * x)), "g={g} x={x} s_{i}");
                }
            }
        }
    }
}

#[test]
fn length_histogram_for_genus_two() {
    let mut hist = [0usize; 4];
    for r in enumerate_admissible(2).unwrap() {
        hist[r.dim] += 1;
    }
    let mut oracle = [0usize; 4];
    for x in enumerate_admissible_oracle(2).unwrap() {
        oracle[x.length()] += 1;
    }
    assert_eq!(hist, oracle);
    assert_eq!(hist, [1, 3, 5, 4]);
}

#[test]
fn extreme_lengths() {
    for g in 1..=4 {
        let recs = enumerate_admissible(g).unwrap();
        let top = g * (g + 1) / 2;
        assert_eq!(recs.iter().map(|r| r.dim).max(), Some(top));
        let tops: BTreeSet<_> = recs.iter().filter(|r| r.dim == top).map(|r| r.element.clone()).collect();
        let maximal: BTreeSet<_> = maximal_elements(g).unwrap().into_iter().collect();
        assert_eq!(tops, maximal);
        let zeros: Vec<_> = recs.iter().filter(|r| r.dim == 0).collect();
        assert_eq!(zeros.len(), 1);
        assert_eq!(zeros[0].element, ExtAffineElement::tau(GroupContext::symplectic(g).unwrap()).unwrap());
    }
}

#[test]
fn maximal_elements_are_the_weyl_orbit_of_mu() {
    // brute force: apply every permutation commuting with θ to μ
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }
    for g in 1..=4 {
        let n = 2 * g;
        let ctx = GroupContext::symplectic(g).unwrap();
        let mu = ctx.mu();
        let orbit: BTreeSet<Vec<i64>> = perms(n)
            .into_iter()
            .filter(|w| (0..n).all(|k| w[n - 1 - k] == n - 1 - w[k]))
            .map(|w| {
                let mut v = vec![0; n];
                for k in 0..n {
                    v[w[k]] = mu[k];
                }
                v
            })
            .collect();
        let got: BTreeSet<Vec<i64>> = maximal_elements(g).unwrap().iter().map(|m| m.nu().to_vec()).collect();
        assert_eq!(got, orbit, "g={g}");
        assert_eq!(got.len(), 1 << g);
    }
}

#[test]
fn bruhat_order_agrees_with_subword_oracle_for_genus_two() {
    let adm: Vec<_> = admissible_set(2).into_iter().collect();
    assert_eq!(adm.len(), 13);
    for b in &adm {
        let cone = subword_cone(b);
        for a in &adm {
            assert_eq!(a.bruhat_leq(b), cone.contains(a), "{a} <= {b}");
        }
    }
}

#[test]
fn bruhat_order_is_a_partial_order_on_genus_two() {
    let adm: Vec<_> = admissible_set(2).into_iter().collect();
    for a in &adm {
        assert!(a.bruhat_leq(a));
        for b in &adm {
            if a != b && a.bruhat_leq(b) {
                assert!(!b.bruhat_leq(a));
            }
            for c in &adm {
                if a.bruhat_leq(b) && b.bruhat_leq(c) {
                    assert!(a.bruhat_leq(c));
                }
            }
        }
    }
}

#[test]
fn tau_is_below_everything_and_everything_is_below_a_maximal_element() {
    for g in 1..=3 {
        let tau = ExtAffineElement::tau(GroupContext::symplectic(g).unwrap()).unwrap();
        let maximal = maximal_elements(g).unwrap();
        for x in admissible_set(g) {
            assert!(tau.bruhat_leq(&x));
            assert!(maximal.iter().any(|m| x.bruhat_leq(m)));
        }
    }
}

#[test]
fn support_avoids_zero_and_g_exactly_on_the_finite_parabolic() {
    for g in 2..=3 {
        let ctx = GroupContext::symplectic(g).unwrap();
        // W_{0,g} = ⟨s_1, …, s_{g-1}⟩ by closure under multiplication
        let gens: Vec<_> = (1..g).map(|i| ExtAffineElement::simple_reflection(ctx, i).unwrap()).collect();
        let mut group = HashSet::from([ExtAffineElement::identity(ctx)]);
        let mut frontier: Vec<_> = group.iter().cloned().collect();
        while let Some(x) = frontier.pop() {
            for s in &gens {
                let y = &x * s;
                if group.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        let tau_inv = ExtAffineElement::tau(ctx).unwrap().inverse();
        for x in admissible_set(g) {
            let w = &x * &tau_inv;
            let avoids = w.support().iter().all(|&i| i != 0 && i != g);
            assert_eq!(avoids, group.contains(&w), "g={g} x={x}");
        }
    }
}

#[test]
fn alcove_round_trip_and_duality() {
    for g in 1..=4 {
        let n = 2 * g;
        for a in permissible_alcoves(g).unwrap() {
            let x = a.element().unwrap();
            assert_eq!(ExtendedAlcove::of(&x), a);
            assert_eq!(a.duality_constant(), Some(1));
            for i in 0..n {
                let raised = a
                    .vertex(i)
                    .iter()
                    .zip(standard_vertex(n, i))
                    .filter(|(x, w)| **x - w == 1)
                    .count();
                assert_eq!(raised, g);
            }
        }
    }
}

#[test]
fn extended_indices_reproduce_the_duality_constant() {
    for a in permissible_alcoves(2).unwrap() {
        let n = 4i64;
        for i in -n..=2 * n {
            let xi = a.extended(i);
            let dual = a.extended(n - i);
            for j in 0..4 {
                assert_eq!(xi[j] + dual[3 - j], 0);
            }
        }
        assert_eq!(a.extended(-n), a.vertex(0).iter().map(|v| v + 1).collect::<Vec<_>>());
    }
}

#[test]
fn records_are_consistent() {
    for g in 1..=3 {
        for r in enumerate_admissible(g).unwrap() {
            assert_eq!(r.dim, r.element.length());
            assert_eq!(r.word.evaluate(), r.element);
            assert!(r.p_rank <= g);
            assert_eq!(r.alcove, ExtendedAlcove::of(&r.element));
        }
    }
}
