//! Randomized and property-based invariants that cut across modules.

use pmf_core::forcing::has_unique_pm;
use pmf_core::graph::{build_from_edge_list, build_generalized_petersen};
use pmf_core::matchings::{
    decode, encode, enumerate_perfect_matchings, parse_chain_expression, period, ChainWord, Letter,
};
use proptest::prelude::*;
use rand::{Rng as _, SeedableRng as _};
use rand_chacha::ChaCha8Rng;

#[test]
fn unique_pm_agrees_with_enumeration_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for round in 0..1000 {
        let nv = rng.gen_range(1..=14usize);
        let p = rng.gen_range(10..=45u32);
        let mut pairs = Vec::new();
        for a in 0..nv {
            for b in (a + 1)..nv {
                if rng.gen_range(0..100) < p {
                    pairs.push((a, b));
                }
            }
        }
        let g = build_from_edge_list(nv, &pairs).unwrap();
        let count = enumerate_perfect_matchings(&g).take(2).count();
        assert_eq!(
            has_unique_pm(&g),
            count == 1,
            "round {round}: vertices {nv}, edges {:?}",
            pairs
        );
    }
}

#[test]
fn decode_encode_is_identity_up_to_n20() {
    for n in 5..=20 {
        let g = build_generalized_petersen(n, 2).unwrap();
        for m in enumerate_perfect_matchings(&g) {
            let w = encode(&g, &m).unwrap();
            assert_eq!(decode(&g, &w).unwrap(), m, "n={n} word {w}");
        }
    }
}

fn rotations(letters: &[Letter]) -> std::collections::BTreeSet<Vec<char>> {
    (0..letters.len())
        .map(|s| {
            (0..letters.len())
                .map(|i| letters[(i + s) % letters.len()].as_char())
                .collect()
        })
        .collect()
}

proptest! {
    #[test]
    fn period_divides_length_and_counts_rotations(
        ab in prop::bool::ANY,
        raw in prop::collection::vec(prop::bool::ANY, 1..18),
    ) {
        let letters: Vec<Letter> = raw
            .iter()
            .map(|&first| match (ab, first) {
                (true, true) => Letter::A,
                (true, false) => Letter::B,
                (false, true) => Letter::C,
                (false, false) => Letter::D,
            })
            .collect();
        let w = ChainWord::new(letters.clone()).unwrap();
        let p = period(&w);
        prop_assert_eq!(w.len() % p, 0);
        prop_assert_eq!(rotations(&letters).len(), p);
    }

    #[test]
    fn expression_roundtrip(
        ab in prop::bool::ANY,
        raw in prop::collection::vec(prop::bool::ANY, 1..18),
    ) {
        let letters: Vec<Letter> = raw
            .iter()
            .map(|&first| match (ab, first) {
                (true, true) => Letter::A,
                (true, false) => Letter::B,
                (false, true) => Letter::C,
                (false, false) => Letter::D,
            })
            .collect();
        let w = ChainWord::new(letters).unwrap();
        let parsed = parse_chain_expression(&w.to_expression()).unwrap();
        prop_assert_eq!(parsed.letters(), w.letters());
        let parsed_plain = parse_chain_expression(&w.to_string()).unwrap();
        prop_assert_eq!(parsed_plain.letters(), w.letters());
    }
}
