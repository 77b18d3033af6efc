use expander_nmc::cayley::{LdGraph, LdParams};
use expander_nmc::graph::{build_cocktail_party, build_cycle, build_hypercube, build_random_regular, DenseGraph};
use expander_nmc::nmcode::{decode, encode, epsilon_from_max_flip, Bit};
use expander_nmc::spectral::{expansion_lambda, mixing_check};
use expander_nmc::tamper::{
    flip_prob_bruteforce, flip_prob_closed_form, preimage_index, worst_tampering_exhaustive, worst_tampering_search,
    Evaluator, SearchConfig, TamperPair,
};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph_strategy() -> impl Strategy<Value = DenseGraph> {
    prop_oneof![
        (3usize..=12).prop_map(|n| build_cycle(n).unwrap()),
        (1u32..=3).prop_map(|k| build_hypercube(k).unwrap()),
        (2usize..=6).prop_map(|k| build_cocktail_party(k).unwrap()),
        (any::<u64>(), 0usize..4).prop_map(|(seed, i)| {
            let (n, d) = [(6, 3), (10, 3), (12, 5), (9, 4)][i];
            build_random_regular(n, d, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
        }),
    ]
}

fn with_tables() -> impl Strategy<Value = (DenseGraph, Vec<usize>, Vec<usize>)> {
    graph_strategy().prop_flat_map(|g| {
        let n = g.n();
        (Just(g), prop::collection::vec(0..n, n), prop::collection::vec(0..n, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn closed_form_is_exact((g, l, r) in with_tables()) {
        let adv = TamperPair::tables(l, r);
        let t = flip_prob_closed_form(&g, &adv).unwrap();
        prop_assert_eq!(&t, &flip_prob_bruteforce(&g, &adv).unwrap().t);
        prop_assert!(t >= BigRational::zero() && t <= BigRational::one());
    }

    #[test]
    fn preimages_partition_the_domain((g, l, _r) in with_tables()) {
        let idx = preimage_index(&l).unwrap();
        prop_assert_eq!(idx.sizes().iter().sum::<usize>(), g.n());
        let mut all: Vec<usize> = (0..g.n()).flat_map(|v| idx.preimage(v).to_vec()).collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.n()).collect::<Vec<_>>());
        for v in 0..g.n() {
            prop_assert!(idx.preimage(v).iter().all(|&x| l[x] == v));
        }
    }

    #[test]
    fn round_trip(g in graph_strategy(), seed in any::<u64>(), bit in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = Bit::from(bit);
        let c = encode(&g, b, &mut rng).unwrap();
        prop_assert_eq!(decode(&g, c), b);
    }

    #[test]
    fn ld_round_trip(seed in any::<u64>(), bit in any::<bool>(), which in 0usize..3) {
        let (p, t) = [(3, 2), (5, 2), (5, 3)][which];
        let g = LdGraph::new(LdParams::new(p, t).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = Bit::from(bit);
        let c = encode(&g, b, &mut rng).unwrap();
        prop_assert_eq!(decode(&g, c), b);
    }

    #[test]
    fn mixing_lemma_holds(g in graph_strategy(), s_mask in any::<u16>(), t_mask in any::<u16>()) {
        let lambda = expansion_lambda(&g).unwrap().lambda;
        let pick = |mask: u16| (0..g.n()).filter(|&v| mask >> (v % 16) & 1 == 1).collect::<Vec<_>>();
        let check = mixing_check(&g, lambda, &pick(s_mask), &pick(t_mask)).unwrap();
        prop_assert!(check.holds, "{:?}", check);
    }

    #[test]
    fn search_never_below_half(seed in any::<u64>(), which in 0usize..3) {
        let g = [build_cycle(9).unwrap(), build_hypercube(3).unwrap(), build_cocktail_party(4).unwrap()][which].clone();
        let found = worst_tampering_search(&g, SearchConfig { iters: 50, restarts: 3 }, seed).unwrap();
        prop_assert!(found.t_best >= BigRational::new(1.into(), 2.into()));
        let pair = found.pair();
        prop_assert_eq!(found.t_best, flip_prob_bruteforce(&g, &pair).unwrap().t);
    }
}

#[test]
fn worst_case_epsilon_dominates_every_adversary() {
    let g = build_cycle(4).unwrap();
    let worst = worst_tampering_exhaustive(&g, Evaluator::ClosedForm).unwrap();
    let eps_max = epsilon_from_max_flip(&worst.t_max);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..500 {
        let adv = TamperPair::random_tables(4, &mut rng);
        let t = flip_prob_closed_form(&g, &adv).unwrap();
        assert!(t <= worst.t_max);
        assert!(epsilon_from_max_flip(&t) <= eps_max);
    }
    assert_eq!(
        worst_tampering_exhaustive(&g, Evaluator::BruteForce).unwrap(),
        expander_nmc::tamper::WorstCase {
            evaluator: Evaluator::BruteForce,
            ..worst
        }
    );
}

#[test]
fn triangle_worst_case() {
    let c3 = build_cycle(3).unwrap();
    let closed = worst_tampering_exhaustive(&c3, Evaluator::ClosedForm).unwrap();
    let brute = worst_tampering_exhaustive(&c3, Evaluator::BruteForce).unwrap();
    assert_eq!((&closed.left, &closed.right, &closed.t_max), (&brute.left, &brute.right, &brute.t_max));
    assert_eq!(closed.pairs_examined, 729);
    assert!(closed.t_max >= BigRational::new(1.into(), 2.into()));
}
