//! Randomized properties complementing the exhaustive small-degree tests:
//! round trips of the text formats, closure and bijection facts about
//! monotone maps at degrees the enumerated families never reach, the
//! subword-relation hierarchy on arbitrary word pairs, and sparseness of
//! substitution preimages of the chain words.

use proptest::prelude::*;

use fbplab_core::transform::{bar_map, hat_map, PartialMap};
use fbplab_core::word::{
    build_u_n_m, count_scattered_embeddings, in_jm, in_um, Identity, VariableId, Word,
};

const POOL: [&str; 4] = ["x", "y", "z", "t"];

fn arb_word(vars: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..vars, 0..=max_len).prop_map(|picks| {
        Word::from_symbols(
            picks
                .into_iter()
                .map(|i| VariableId::new(POOL[i]))
                .collect(),
        )
    })
}

/// Strictly increasing partial maps with `x <= x.alpha`: the injective,
/// order-preserving, extensive maps of arbitrary degree.
fn arb_monotone_injection(max_degree: usize) -> impl Strategy<Value = PartialMap> {
    (1..=max_degree).prop_flat_map(|m| {
        prop::collection::vec((any::<bool>(), 0usize..usize::MAX), m).prop_map(move |choices| {
            let mut image = vec![None; m];
            let mut floor = 0;
            for (x, (defined, pick)) in choices.into_iter().enumerate() {
                let lo = floor.max(x);
                if defined && lo < m {
                    let v = lo + pick % (m - lo);
                    image[x] = Some(v);
                    floor = v + 1;
                }
            }
            PartialMap::new(m, image).expect("image fits the base")
        })
    })
}

/// Weakly increasing total map with `x <= x.beta`, decoded from one raw pick
/// per point; the top point is forced onto itself.
fn monotone_total_from(n: usize, picks: Vec<usize>) -> PartialMap {
    let mut image = vec![None; n];
    let mut prev = 0;
    for (x, pick) in picks.into_iter().enumerate() {
        let lo = prev.max(x);
        let v = lo + pick % (n - lo);
        image[x] = Some(v);
        prev = v;
    }
    PartialMap::new(n, image).expect("image fits the base")
}

fn arb_monotone_total(max_degree: usize) -> impl Strategy<Value = PartialMap> {
    (1..=max_degree).prop_flat_map(|n| {
        prop::collection::vec(0usize..usize::MAX, n)
            .prop_map(move |picks| monotone_total_from(n, picks))
    })
}

fn arb_monotone_total_pair(max_degree: usize) -> impl Strategy<Value = (PartialMap, PartialMap)> {
    (1..=max_degree).prop_flat_map(|n| {
        let picks = prop::collection::vec(0usize..usize::MAX, n);
        (picks.clone(), picks)
            .prop_map(move |(a, b)| (monotone_total_from(n, a), monotone_total_from(n, b)))
    })
}

proptest! {
    #[test]
    fn word_text_round_trips(w in arb_word(4, 12)) {
        prop_assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn map_literal_round_trips(alpha in arb_monotone_injection(10)) {
        prop_assert_eq!(PartialMap::parse(&alpha.to_string()).unwrap(), alpha);
    }

    #[test]
    fn completing_a_monotone_injection_round_trips(alpha in arb_monotone_injection(10)) {
        let beta = bar_map(&alpha);
        let p = beta.properties();
        prop_assert!(p.total && p.order_preserving && p.extensive);
        prop_assert_eq!(beta.get(alpha.base_size()), Some(alpha.base_size()));
        prop_assert_eq!(hat_map(&beta).unwrap(), alpha);
    }

    #[test]
    fn restricting_a_monotone_total_map_round_trips(beta in arb_monotone_total(11)) {
        let alpha = hat_map(&beta).unwrap();
        let p = alpha.properties();
        prop_assert!(p.injective && p.order_preserving && p.extensive);
        prop_assert_eq!(bar_map(&alpha), beta);
    }

    #[test]
    fn monotone_total_maps_compose_closed((beta, gamma) in arb_monotone_total_pair(11)) {
        let p = beta.compose(&gamma).unwrap().properties();
        prop_assert!(p.total && p.order_preserving && p.extensive);
    }

    #[test]
    fn embedding_counts_match_brute_force(u in arb_word(2, 3), v in arb_word(2, 7)) {
        prop_assume!(!u.is_empty());
        let mut brute = 0;
        for mask in 0u32..1 << v.len() {
            if mask.count_ones() as usize != u.len() {
                continue;
            }
            let picked: Vec<&VariableId> = (0..v.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| &v.symbols()[i])
                .collect();
            if picked.iter().zip(u.symbols()).all(|(a, b)| **a == *b) {
                brute += 1;
            }
        }
        prop_assert_eq!(count_scattered_embeddings(&u, &v, 10_000), brute);
    }

    #[test]
    fn subword_relations_form_a_hierarchy(
        u in arb_word(3, 6),
        v in arb_word(3, 6),
        m in 1usize..=3,
    ) {
        let id = Identity::new(u, v);
        if in_jm(&id, m + 1) {
            prop_assert!(in_um(&id, m), "scattered equality must refine unambiguous equality");
        }
        if in_um(&id, m) {
            prop_assert!(in_jm(&id, m), "unambiguous equality must refine scattered equality");
        }
    }

    #[test]
    fn block_preimages_of_chain_words_are_sparse(
        (n, m, raw_cuts) in (2usize..=5, 1usize..=3).prop_flat_map(|(n, m)| {
            (Just(n), Just(m), prop::collection::vec(1usize..usize::MAX, 0..=n - 2))
        }),
    ) {
        let target = build_u_n_m(n, m).unwrap().word;
        let mut cuts: Vec<usize> = raw_cuts.iter().map(|c| 1 + c % (target.len() - 1)).collect();
        cuts.sort_unstable();
        cuts.dedup();
        cuts.push(target.len());

        let mut blocks = Vec::new();
        let mut start = 0;
        for cut in cuts {
            blocks.push(target.slice(start..cut));
            start = cut;
        }
        let mut seen: Vec<Word> = Vec::new();
        let mut preimage = Vec::new();
        for block in blocks {
            let k = seen.iter().position(|b| *b == block).unwrap_or_else(|| {
                seen.push(block);
                seen.len() - 1
            });
            preimage.push(VariableId::new(format!("b{k}")));
        }
        prop_assert!(seen.len() < n, "at most n-1 blocks were cut");
        prop_assert!(Word::from_symbols(preimage).is_sparse());
    }
}
