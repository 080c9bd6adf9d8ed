use stl_core::closed_forms::{
    ex_arcs_ck, ex_arcs_clique, ex_arcs_complete_digraph, ex_arcs_tournament, ex_le_ck, ex_m1_c3,
    le_cubic, le_digon_free, le_triangle_free, ExactValue, Quantity,
};
use stl_core::families::{enumerate_bk01_members, enumerate_fnk_members, gen_fnk_last};
use stl_core::invariants::{first_zagreb, laplacian_energy};

fn check_exact(v: ExactValue) -> i64 {
    assert!(v.denominator > 0);
    assert_eq!(i128::from(v.value) * v.denominator, v.numerator, "{v:?}");
    v.value
}

/// Energy of a chain of complete-digraph blocks with one-way domination,
/// straight from block sizes.
fn chain_energy(sizes: &[usize]) -> i64 {
    let mut le = 0;
    let mut after: usize = sizes.iter().sum();
    for &s in sizes {
        after -= s;
        let out = (s - 1 + after) as i64;
        le += s as i64 * out * out + (s * (s - 1)) as i64;
    }
    le
}

fn chain_arcs(sizes: &[usize]) -> i64 {
    let n: usize = sizes.iter().sum();
    let across = (n * n - sizes.iter().map(|s| s * s).sum::<usize>()) / 2;
    (across + sizes.iter().map(|s| s * (s - 1)).sum::<usize>()) as i64
}

fn fnk_sizes(n: usize, k: usize) -> Vec<usize> {
    let mut sizes = vec![k; n / k];
    if !n.is_multiple_of(k) {
        sizes.push(n % k);
    }
    sizes
}

/// Edges of the balanced complete k-partite graph.
fn turan_edges(n: usize, k: usize) -> i64 {
    let parts: Vec<usize> = (0..k).map(|i| n / k + usize::from(i < n % k)).collect();
    let mut e = 0;
    for i in 0..k {
        for j in i + 1..k {
            e += parts[i] * parts[j];
        }
    }
    e as i64
}

#[test]
fn every_formula_divides_exactly_up_to_ten_thousand() {
    for n in 1..=10_000 {
        check_exact(le_digon_free(n).unwrap());
        check_exact(le_triangle_free(n).unwrap());
        check_exact(ex_m1_c3(n).unwrap());
        for k in [1, 2, 3, 4, 5, 7, 10] {
            check_exact(le_cubic(n, k).unwrap());
            check_exact(ex_le_ck(n, k).unwrap());
            check_exact(ex_arcs_ck(n, k).unwrap());
            check_exact(ex_arcs_clique(n, k).unwrap());
            check_exact(ex_arcs_tournament(n, k).unwrap());
            check_exact(ex_arcs_complete_digraph(n, k).unwrap());
        }
    }
}

#[test]
fn cubic_form_reduces_to_the_small_cycle_forms() {
    for n in 1..=200 {
        assert_eq!(
            check_exact(le_cubic(n, 1).unwrap()),
            check_exact(le_digon_free(n).unwrap()),
            "n={n}"
        );
        assert_eq!(
            check_exact(le_cubic(n, 2).unwrap()),
            check_exact(le_triangle_free(n).unwrap()),
            "n={n}"
        );
        let n3 = n as i64;
        assert_eq!(
            le_digon_free(n).unwrap().value,
            n3 * (n3 - 1) * (2 * n3 - 1) / 6
        );
    }
}

#[test]
fn energy_and_zagreb_differ_by_the_digons() {
    for n in 1..=500 {
        let q = (n / 2) as i64;
        assert_eq!(
            le_triangle_free(n).unwrap().value - ex_m1_c3(n).unwrap().value,
            2 * q,
            "n={n}"
        );
    }
}

#[test]
fn energy_formula_matches_block_arithmetic_and_generator() {
    for k in 1..=10 {
        for n in k..=60 {
            let formula = ex_le_ck(n, k).unwrap().value;
            let sizes = fnk_sizes(n, k);
            assert_eq!(formula, chain_energy(&sizes), "n={n} k={k}");
            if k >= 3 {
                assert_eq!(
                    formula,
                    laplacian_energy(&gen_fnk_last(n, k).unwrap()),
                    "n={n} k={k}"
                );
            }
        }
    }
}

#[test]
fn arc_formula_matches_every_family_member() {
    for k in 3..=10 {
        for n in k..=60 {
            let formula = ex_arcs_ck(n, k).unwrap().value;
            assert_eq!(formula, chain_arcs(&fnk_sizes(n, k)), "n={n} k={k}");
            for g in enumerate_fnk_members(n, k).unwrap() {
                assert_eq!(g.arc_count() as i64, formula, "n={n} k={k}");
            }
        }
    }
}

#[test]
fn turan_forms_match_the_partite_count() {
    for n in 1..=80 {
        for k in 1..=12 {
            let t = turan_edges(n, k);
            let binom = (n * n.saturating_sub(1) / 2) as i64;
            assert_eq!(ex_arcs_clique(n, k).unwrap().value, t, "n={n} k={k}");
            assert_eq!(
                ex_arcs_complete_digraph(n, k).unwrap().value,
                binom + t,
                "n={n} k={k}"
            );
            assert_eq!(
                ex_arcs_tournament(n, k).unwrap().value,
                2 * t,
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn bipartite_chains_attain_the_triangle_free_values() {
    for n in 1..=16 {
        let le = le_triangle_free(n).unwrap().value;
        for g in enumerate_bk01_members(n).unwrap() {
            assert_eq!(laplacian_energy(&g), le, "n={n}");
        }
    }
    // The zagreb maximiser at n = 5 is the chain digon, digon, vertex.
    let g = stl_core::families::gen_fnk(5, 2, Some(3)).unwrap();
    assert_eq!(first_zagreb(&g), ex_m1_c3(5).unwrap().value);
}

#[test]
fn orders_below_the_block_size_give_the_complete_digraph() {
    for n in 1..=9 {
        let n3 = n as i64;
        assert_eq!(ex_le_ck(n, 10).unwrap().value, n3 * n3 * (n3 - 1));
        assert_eq!(ex_arcs_ck(n, 10).unwrap().value, n3 * (n3 - 1));
    }
}

#[test]
fn degenerate_parameters_are_errors() {
    assert!(ex_le_ck(0, 3).is_err());
    assert!(ex_le_ck(5, 0).is_err());
    assert!(Quantity::ExArcs.evaluate(5, 0).is_err());
    assert!(ex_m1_c3(0).is_err());
}

#[test]
fn pinned_values() {
    assert_eq!(ex_le_ck(4, 3).unwrap().value, 33);
    assert_eq!(ex_le_ck(5, 3).unwrap().value, 58);
    assert_eq!(ex_arcs_ck(4, 3).unwrap().value, 9);
    assert_eq!(ex_arcs_ck(5, 3).unwrap().value, 14);
    let le_c3: Vec<i64> = (2..=5)
        .map(|n| le_triangle_free(n).unwrap().value)
        .collect();
    assert_eq!(le_c3, [4, 10, 24, 44]);
    let le_c2: Vec<i64> = (2..=5).map(|n| le_digon_free(n).unwrap().value).collect();
    assert_eq!(le_c2, [1, 5, 14, 30]);
    assert_eq!(ex_m1_c3(4).unwrap().value, 20);
}
