//! The checks behind each suite. Builders return the specs in a fixed order;
//! the runner executes them in parallel and reassembles that order.

use std::collections::{BTreeMap, BTreeSet};

use super::{check, run_suite, CheckSpec, Outcome, SuiteConfig};
use crate::error::Result;
use crate::monoid::{
    adjoin_identity, band_identity_check, bounded_identity_theory, check_alphabet_chain,
    direct_product, enumerate_semigroup_tables, generator_isomorphism, is_isoterm_bounded,
    reversed_blocks, satisfies_identity, satisfies_identity_over, satisfies_identity_sampled,
    unitary_power_monoid, FiniteMonoid, IdentityCheck,
};
use crate::presentation::{
    catalan_presentation, complete_default, coxeter_group_model, enumerate_presented,
    extend_homomorphism, free_tree_presentation, hecke0_presentation, hecke0_via_unitary,
    lee_l3_presentation, lee_l4_presentation, lee_monoid_presentation, t_sequence, CoxeterDiagram,
    HomomorphismOutcome,
};
use crate::transform::{
    bar_map, build_gamma_n, catalan_number, catalan_of_digraph, digraph_analysis, enumerate_family,
    family_monoid, hat_map, FamilyKind,
};
use crate::word::{
    build_u_n_m, build_w_n, check_p1, check_p2, jm_signature, um_signature, zimin, Identity,
    VariableId, Word,
};

fn var_names(k: usize) -> Vec<VariableId> {
    const SHORT: [&str; 3] = ["x", "y", "z"];
    if k <= SHORT.len() {
        SHORT[..k].iter().map(VariableId::new).collect()
    } else {
        (1..=k).map(|i| VariableId::new(format!("x{i}"))).collect()
    }
}

/// Class ids by first appearance, so equal keys and only equal keys share an
/// id.
fn key_ids<K: Ord>(keys: &[K]) -> Vec<u32> {
    let mut ids: BTreeMap<&K, u32> = BTreeMap::new();
    keys.iter()
        .map(|k| {
            let next = ids.len() as u32;
            *ids.entry(k).or_insert(next)
        })
        .collect()
}

/// First pair of words on which the two partitions disagree.
fn partition_mismatch(words: &[Word], left: &[u32], right: &[u32]) -> Option<String> {
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            let l = left[i] == left[j];
            let r = right[i] == right[j];
            if l != r {
                return Some(format!(
                    "`{}` and `{}`: {} under evaluation, {} under subword data",
                    words[i],
                    words[j],
                    if l { "equal" } else { "distinct" },
                    if r { "equal" } else { "distinct" },
                ));
            }
        }
    }
    None
}

fn power_pair_identity(m: usize) -> Identity {
    let x = VariableId::new("x");
    let y = VariableId::new("y");
    let lhs = [vec![x.clone(); m + 1], vec![y.clone(); m + 1]].concat();
    let rhs = [vec![y; m + 1], vec![x; m + 1]].concat();
    Identity::new(Word::from_symbols(lhs), Word::from_symbols(rhs))
}

fn grade(all_ok: bool, total: usize, failures: Vec<String>) -> Outcome {
    let expected = format!("{total}/{total} hold");
    if all_ok {
        Outcome::compare(&expected, &expected)
    } else {
        Outcome::compare(expected, format!("failed: {}", failures.join("; ")))
    }
}

pub(crate) fn cardinalities(_cfg: &SuiteConfig) -> Vec<CheckSpec> {
    vec![
        check(
            "chain-maps",
            "order-preserving extensive total maps on an m-chain number the m-th Catalan number",
            "m=1..8",
            || {
                let expected: Vec<String> =
                    (1..=8).map(|m| catalan_number(m).to_string()).collect();
                let mut actual = Vec::new();
                for m in 1..=8 {
                    actual.push(enumerate_family(FamilyKind::C, m)?.len().to_string());
                }
                Ok(Outcome::compare(expected.join(","), actual.join(",")))
            },
        ),
        check(
            "chain-injections",
            "order-preserving extensive partial injections on an m-chain number the next Catalan number",
            "m=1..7",
            || {
                let expected: Vec<String> =
                    (1..=7).map(|m| catalan_number(m + 1).to_string()).collect();
                let mut actual = Vec::new();
                for m in 1..=7 {
                    actual.push(enumerate_family(FamilyKind::IC, m)?.len().to_string());
                }
                Ok(Outcome::compare(expected.join(","), actual.join(",")))
            },
        ),
        check(
            "six-element-models",
            "the order-preserving partial injections on 2 points and the top-fixing order-preserving maps on 3 points both have six elements",
            "POI at m=2; OPFixTop at m=3",
            || {
                let a = enumerate_family(FamilyKind::POI, 2)?.len();
                let b = enumerate_family(FamilyKind::OPFixTop, 3)?.len();
                Ok(Outcome::compare("6,6", format!("{a},{b}")))
            },
        ),
        check(
            "extensive-closure",
            "extensive total maps form a composition-closed monoid of size m!",
            "m=1..6",
            || {
                let expected: Vec<String> = (1..=6)
                    .map(|m| (1..=m as u128).product::<u128>().to_string())
                    .collect();
                let mut actual = Vec::new();
                for m in 1..=6 {
                    let maps = enumerate_family(FamilyKind::E, m)?;
                    let monoid = family_monoid(FamilyKind::E, m)?;
                    if monoid.size() != maps.len() {
                        actual.push(format!("{}≠{}", monoid.size(), maps.len()));
                    } else {
                        actual.push(monoid.size().to_string());
                    }
                }
                Ok(Outcome::compare(expected.join(","), actual.join(",")))
            },
        ),
    ]
}

pub(crate) fn bijection(_cfg: &SuiteConfig) -> Vec<CheckSpec> {
    vec![
        check(
            "into-the-next-chain",
            "completing a partial injection to a total map lands in the chain-map family one point up, keeping order preservation and extensivity",
            "m=1..6",
            || {
                let mut failures = Vec::new();
                let mut total = 0;
                for m in 1..=6 {
                    let targets: BTreeSet<String> = enumerate_family(FamilyKind::C, m + 1)?
                        .iter()
                        .map(|f| f.to_string())
                        .collect();
                    for alpha in enumerate_family(FamilyKind::IC, m)? {
                        total += 1;
                        let beta = bar_map(&alpha);
                        let p = beta.properties();
                        if !(p.total && p.order_preserving && p.extensive) {
                            failures.push(format!("{beta} lost a property (m={m})"));
                        } else if !targets.contains(&beta.to_string()) {
                            failures.push(format!("{beta} is not a chain map (m={m})"));
                        }
                    }
                }
                Ok(grade(failures.is_empty(), total, failures))
            },
        ),
        check(
            "mutually-inverse",
            "completion and restriction invert each other in both directions",
            "m=1..6",
            || {
                let mut failures = Vec::new();
                let mut total = 0;
                for m in 1..=6 {
                    for alpha in enumerate_family(FamilyKind::IC, m)? {
                        total += 1;
                        if hat_map(&bar_map(&alpha))? != alpha {
                            failures.push(format!("{alpha} does not round-trip (m={m})"));
                        }
                    }
                    for beta in enumerate_family(FamilyKind::C, m + 1)? {
                        total += 1;
                        let alpha = hat_map(&beta)?;
                        let p = alpha.properties();
                        if !(p.injective && p.order_preserving && p.extensive) {
                            failures.push(format!("{alpha} lost a property (m={m})"));
                        } else if bar_map(&alpha) != beta {
                            failures.push(format!("{beta} does not round-trip (m={m})"));
                        }
                    }
                }
                Ok(grade(failures.is_empty(), total, failures))
            },
        ),
        check(
            "paired-counts",
            "the two families paired by the bijection both have fourteen members at the pictured size",
            "m=3",
            || {
                let ic = enumerate_family(FamilyKind::IC, 3)?.len();
                let c = enumerate_family(FamilyKind::C, 4)?.len();
                Ok(Outcome::compare("14 and 14", format!("{ic} and {c}")))
            },
        ),
    ]
}

fn oracle_cells(cfg: &SuiteConfig, grid: &[(usize, usize, usize)]) -> Vec<(usize, usize, usize)> {
    match cfg.oracle {
        Some(c) => vec![(c.m, c.vars, c.len)],
        None => grid.to_vec(),
    }
}

pub(crate) fn jm_oracle(cfg: &SuiteConfig) -> Vec<CheckSpec> {
    let grid = [
        (2, 2, 6),
        (2, 3, 5),
        (3, 2, 6),
        (3, 3, 5),
        (4, 2, 6),
        (4, 3, 5),
    ];
    oracle_cells(cfg, &grid)
        .into_iter()
        .map(|(m, vars, len)| {
            check(
                format!("chain-maps-m{m}-v{vars}-l{len}"),
                format!(
                    "identities of the chain-map monoid on {m} points are exactly equality of scattered subwords up to length {}",
                    m - 1
                ),
                format!("m={m}, vars={vars}, max_len={len}"),
                move || {
                    let monoid = family_monoid(FamilyKind::C, m)?;
                    let frag = bounded_identity_theory(&monoid, &var_names(vars), len)?;
                    let words = frag.universe.words();
                    let keys: Vec<BTreeSet<Word>> = words
                        .iter()
                        .map(|w| jm_signature(w, m - 1).subwords)
                        .collect();
                    let sig_ids = key_ids(&keys);
                    let verdict = partition_mismatch(words, &frag.class_of, &sig_ids)
                        .unwrap_or_else(|| "identical word partitions".into());
                    Ok(Outcome::compare("identical word partitions", verdict))
                },
            )
        })
        .collect()
}

pub(crate) fn um_oracle(cfg: &SuiteConfig) -> Vec<CheckSpec> {
    let grid = [
        (2, 2, 6),
        (2, 3, 5),
        (3, 2, 6),
        (3, 3, 5),
        (4, 2, 6),
        (4, 3, 4),
    ];
    oracle_cells(cfg, &grid)
        .into_iter()
        .map(|(m, vars, len)| {
            check(
                format!("chain-injections-m{m}-v{vars}-l{len}"),
                format!(
                    "identities of the partial-injection monoid on {m} points are exactly equality of unambiguous subwords up to length {} with matching gap alphabets",
                    m - 1
                ),
                format!("m={m}, vars={vars}, max_len={len}"),
                move || {
                    let monoid = family_monoid(FamilyKind::IC, m)?;
                    let frag = bounded_identity_theory(&monoid, &var_names(vars), len)?;
                    let words = frag.universe.words();
                    let keys: Vec<_> = words
                        .iter()
                        .map(|w| {
                            let s = um_signature(w, m - 1);
                            (s.alphabet, s.unambiguous)
                        })
                        .collect();
                    let sig_ids = key_ids(&keys);
                    let verdict = partition_mismatch(words, &frag.class_of, &sig_ids)
                        .unwrap_or_else(|| "identical word partitions".into());
                    Ok(Outcome::compare("identical word partitions", verdict))
                },
            )
        })
        .collect()
}

const INCLUSION_UNIVERSES: [(usize, usize); 2] = [(2, 6), (3, 5)];

pub(crate) fn inclusions(_cfg: &SuiteConfig) -> Vec<CheckSpec> {
    let mut specs: Vec<CheckSpec> = (0..=3)
        .map(|m| {
            check(
                format!("scattered-refines-unambiguous-m{m}"),
                format!(
                    "words sharing scattered subwords up to length {} also share unambiguous subword data up to length {m}",
                    m + 1
                ),
                format!("m={m}; universes 2 vars len<=6 and 3 vars len<=5"),
                move || {
                    let mut witness = None;
                    'outer: for (vars, len) in INCLUSION_UNIVERSES {
                        let words =
                            crate::word::enumerate_words(&var_names(vars), len)?;
                        let mut by_scattered: BTreeMap<BTreeSet<Word>, Vec<usize>> =
                            BTreeMap::new();
                        for (i, w) in words.iter().enumerate() {
                            by_scattered
                                .entry(jm_signature(w, m + 1).subwords)
                                .or_default()
                                .push(i);
                        }
                        for group in by_scattered.values() {
                            let lead = um_signature(&words[group[0]], m);
                            for &i in &group[1..] {
                                if um_signature(&words[i], m) != lead {
                                    witness = Some(format!(
                                        "`{}` vs `{}`",
                                        words[group[0]], words[i]
                                    ));
                                    break 'outer;
                                }
                            }
                        }
                    }
                    let verdict =
                        witness.unwrap_or_else(|| "refinement holds on both universes".into());
                    Ok(Outcome::compare("refinement holds on both universes", verdict))
                },
            )
        })
        .collect();

    specs.push(check(
        "alphabet-level-agreement",
        "sharing scattered subwords of length one is the same relation as sharing alphabets",
        "universes 2 vars len<=6 and 3 vars len<=5",
        || {
            for (vars, len) in INCLUSION_UNIVERSES {
                let words = crate::word::enumerate_words(&var_names(vars), len)?;
                let j_keys: Vec<BTreeSet<Word>> =
                    words.iter().map(|w| jm_signature(w, 1).subwords).collect();
                let u_keys: Vec<_> = words
                    .iter()
                    .map(|w| {
                        let s = um_signature(w, 0);
                        (s.alphabet, s.unambiguous)
                    })
                    .collect();
                if let Some(diff) = partition_mismatch(&words, &key_ids(&j_keys), &key_ids(&u_keys))
                {
                    return Ok(Outcome::compare("the partitions coincide", diff));
                }
            }
            Ok(Outcome::compare(
                "the partitions coincide",
                "the partitions coincide",
            ))
        },
    ));

    specs.push(check(
        "power-witness-membership",
        "swapping two variable powers preserves unambiguous data at each level yet changes scattered subwords one level up",
        "x^{m+1} y^{m+1} vs y^{m+1} x^{m+1}, m=1..4",
        || {
            let mut failures = Vec::new();
            for m in 1..=4 {
                let id = power_pair_identity(m);
                if !crate::word::in_um(&id, m) {
                    failures.push(format!("m={m}: not in the unambiguous relation"));
                }
                if crate::word::in_jm(&id, m + 1) {
                    failures.push(format!("m={m}: scattered subwords fail to separate"));
                }
            }
            Ok(grade(failures.is_empty(), 4, failures))
        },
    ));

    specs.push(check(
        "power-witness-holds",
        "the power-swap identity holds in the partial-injection monoid at its own level",
        "m=2,3, exhaustive substitution",
        || {
            let mut failures = Vec::new();
            for m in 2..=3 {
                let monoid = family_monoid(FamilyKind::IC, m)?;
                if let IdentityCheck::Fails(sub) =
                    satisfies_identity(&monoid, &power_pair_identity(m))?
                {
                    failures.push(format!("m={m}: fails under {sub}"));
                }
            }
            Ok(grade(failures.is_empty(), 2, failures))
        },
    ));

    specs.push(check(
        "power-witness-fails-above",
        "the same identity finds a counterexample in the chain-map monoid one point up",
        "m=2,3, exhaustive substitution",
        || {
            for m in 2..=3 {
                let monoid = family_monoid(FamilyKind::C, m + 1)?;
                if let IdentityCheck::Holds = satisfies_identity(&monoid, &power_pair_identity(m))?
                {
                    return Ok(Outcome::compare(
                        "a counterexample substitution at every m",
                        format!("m={m}: no counterexample"),
                    ));
                }
            }
            Ok(Outcome::compare(
                "a counterexample substitution at every m",
                "a counterexample substitution at every m",
            ))
        },
    ));

    specs
}

pub(crate) fn word_machinery(cfg: &SuiteConfig) -> Vec<CheckSpec> {
    let samples = cfg.samples;
    let seed = cfg.seed;
    vec![
        check(
            "no-repeated-bigram",
            "chain words never repeat a two-letter factor",
            "n=1..5, m=1..4",
            || {
                let mut failures = Vec::new();
                for n in 1..=5 {
                    for m in 1..=4 {
                        if !check_p1(&build_u_n_m(n, m)?.word) {
                            failures.push(format!("n={n}, m={m}"));
                        }
                    }
                }
                Ok(grade(failures.is_empty(), 20, failures))
            },
        ),
        check(
            "separated-repeats",
            "consecutive occurrences of any variable in a chain word enclose at least n distinct variables",
            "n=1..5, m=1..4",
            || {
                let mut failures = Vec::new();
                for n in 1..=5 {
                    for m in 1..=4 {
                        if !check_p2(&build_u_n_m(n, m)?.word, n) {
                            failures.push(format!("n={n}, m={m}"));
                        }
                    }
                }
                Ok(grade(failures.is_empty(), 20, failures))
            },
        ),
        check(
            "chain-certificates",
            "each chain word's block alphabets descend onto the absorbed letter",
            "n=1..5, m=1..4, plus n=2 at m=3 and m=7",
            || {
                let x = Word::from_chars("x");
                let mut failures = Vec::new();
                let mut cells: Vec<(usize, usize)> =
                    (1..=5).flat_map(|n| (1..=4).map(move |m| (n, m))).collect();
                cells.push((2, 3));
                cells.push((2, 7));
                let total = cells.len();
                for (n, m) in cells {
                    let u = build_u_n_m(n, m)?;
                    if !check_alphabet_chain(&u.word, &u.blocks, &x)? {
                        failures.push(format!("n={n}, m={m}"));
                    }
                }
                Ok(grade(failures.is_empty(), total, failures))
            },
        ),
        check(
            "two-element-exhaustive",
            "the height-three chain word absorbs a trailing letter in every right-trivial semigroup on two elements",
            "all associative tables on two elements; 4096 substitutions each",
            || {
                let u = build_u_n_m(2, 3)?;
                let id = Identity::new(
                    u.word.clone(),
                    u.word.concat(&Word::from_chars("x")),
                );
                let tables = enumerate_semigroup_tables(2)?;
                let total = tables.len();
                let mut r_trivial = 0;
                let mut violations = Vec::new();
                for table in &tables {
                    let monoid = adjoin_identity(table, 2)?;
                    if !monoid.triviality().r_trivial {
                        continue;
                    }
                    r_trivial += 1;
                    if let IdentityCheck::Fails(sub) =
                        satisfies_identity_over(&monoid, &id, &[0, 1])?
                    {
                        violations.push(format!("table {table:?} under {sub}"));
                    }
                }
                let expected = "8 tables, 5 right-trivial, 0 violations".to_string();
                let actual = format!(
                    "{total} tables, {r_trivial} right-trivial, {} violations{}",
                    violations.len(),
                    if violations.is_empty() {
                        String::new()
                    } else {
                        format!(" ({})", violations.join("; "))
                    }
                );
                Ok(Outcome::compare(expected, actual))
            },
        ),
        check(
            "six-element-sampled",
            "the height-seven chain word absorbs a trailing letter in the six-element extensive-map monoid",
            format!("n=2, m=7; {samples} sampled substitutions"),
            move || {
                let u = build_u_n_m(2, 7)?;
                let id = Identity::new(
                    u.word.clone(),
                    u.word.concat(&Word::from_chars("x")),
                );
                let monoid = family_monoid(FamilyKind::E, 3)?;
                let expected = format!("no counterexample in {samples} samples");
                match satisfies_identity_sampled(&monoid, &id, samples, seed) {
                    IdentityCheck::Holds => Ok(Outcome::bounded(&expected, &expected)),
                    IdentityCheck::Fails(sub) => {
                        Ok(Outcome::bounded(expected, format!("fails under {sub}")))
                    }
                }
            },
        ),
    ]
}

pub(crate) fn isoterms(_cfg: &SuiteConfig) -> Vec<CheckSpec> {
    let sparse_cases: [(&str, &str, usize); 4] = [
        ("sparse-xtx", "x t x", 1),
        ("sparse-xt1xt2x", "x t1 x t2 x", 0),
        ("sparse-xytyx", "x y t y x", 0),
        ("sparse-xytxy", "x y t x y", 0),
    ];
    let mut specs: Vec<CheckSpec> = sparse_cases
        .into_iter()
        .map(|(id, text, fresh)| {
            check(
                id,
                "a sparse word admits no equivalent partner over the partial-injection monoid on four points",
                format!("word `{text}`, partner length <= |word|+1, {fresh} fresh variables"),
                move || {
                    let u = Word::parse(text)?;
                    if !u.is_sparse() {
                        return Ok(Outcome::compare(
                            "word is sparse",
                            "word is not sparse",
                        ));
                    }
                    let monoid = family_monoid(FamilyKind::IC, 4)?;
                    let verdict =
                        is_isoterm_bounded(&monoid, &u, Some(u.len() + 1), Some(fresh))?;
                    Ok(Outcome::bounded(
                        "sparse, with no equivalent partner in bounds",
                        if verdict.is_isoterm {
                            "sparse, with no equivalent partner in bounds".into()
                        } else {
                            verdict.describe()
                        },
                    ))
                },
            )
        })
        .collect();

    for (id, n, max_len) in [("zimin-2", 2, 7), ("zimin-3", 3, 5)] {
        specs.push(check(
            id,
            "the doubling word admits no equivalent partner over the six-element partial-injection model",
            format!("index {n}, partner length <= {max_len}, no fresh variables"),
            move || {
                let u = zimin(n)?;
                let monoid = family_monoid(FamilyKind::POI, 2)?;
                let verdict = is_isoterm_bounded(&monoid, &u, Some(max_len), Some(0))?;
                Ok(Outcome::bounded(
                    "no equivalent partner in bounds",
                    if verdict.is_isoterm {
                        "no equivalent partner in bounds".into()
                    } else {
                        verdict.describe()
                    },
                ))
            },
        ));
    }
    specs
}

pub(crate) fn free_tree(cfg: &SuiteConfig) -> Vec<CheckSpec> {
    let stretch = cfg.stretch;
    vec![
        check(
            "sizes-follow-the-recursion",
            "the idempotent tree presentations enumerate to the squaring-recursion sizes",
            "n=1..3",
            || {
                let expected: Result<Vec<String>> =
                    (1..=3).map(|n| Ok(t_sequence(n)?.to_string())).collect();
                let mut actual = Vec::new();
                for n in 1..=3 {
                    let rs = complete_default(&free_tree_presentation(n)?);
                    actual.push(enumerate_presented(&rs, 100)?.size.to_string());
                }
                Ok(Outcome::compare(expected?.join(","), actual.join(",")))
            },
        ),
        check(
            "stretch-size",
            "the fourth tree monoid reaches 1806 elements",
            "n=4",
            move || {
                if !stretch {
                    return Ok(Outcome::skipped("1806", "stretch checks disabled"));
                }
                let rs = complete_default(&free_tree_presentation(4)?);
                let size = enumerate_presented(&rs, 2_000)?.size;
                Ok(Outcome::compare(1806, size))
            },
        ),
        check(
            "onto-the-next-chain-monoid",
            "sending each tree generator to its chain-monoid namesake extends to a surjective homomorphism",
            "n=1..5",
            || {
                let mut failures = Vec::new();
                for n in 1..=5 {
                    let source = free_tree_presentation(n)?;
                    let rs = complete_default(&catalan_presentation(n + 1)?);
                    let target = enumerate_presented(&rs, 500)?.monoid;
                    let images = target.generator_indices().to_vec();
                    match extend_homomorphism(&source, &target, &images)? {
                        HomomorphismOutcome::Extends { surjective: true, .. } => {}
                        HomomorphismOutcome::Extends { .. } => {
                            failures.push(format!("n={n}: image is proper"))
                        }
                        HomomorphismOutcome::Violated { lhs, rhs } => {
                            failures.push(format!("n={n}: relation {lhs} = {rhs} broke"))
                        }
                    }
                }
                Ok(grade(failures.is_empty(), 5, failures))
            },
        ),
        check(
            "right-trivial",
            "tree monoids have singleton right ideals generator sets",
            "n=1..3",
            || {
                let mut failures = Vec::new();
                for n in 1..=3 {
                    let rs = complete_default(&free_tree_presentation(n)?);
                    let monoid = enumerate_presented(&rs, 100)?.monoid;
                    if !monoid.triviality().r_trivial {
                        failures.push(format!("n={n}"));
                    }
                }
                Ok(grade(failures.is_empty(), 3, failures))
            },
        ),
    ]
}

fn alternating_product(m: &FiniteMonoid, a: usize, b: usize, factors: usize) -> usize {
    let mut acc = m.identity_index();
    for i in 0..factors {
        acc = m.mul(acc, if i % 2 == 0 { a } else { b });
    }
    acc
}

pub(crate) fn hecke_lee(_cfg: &SuiteConfig) -> Vec<CheckSpec> {
    let sized: [(CoxeterDiagram, usize); 4] = [
        (CoxeterDiagram::I2(4), 8),
        (CoxeterDiagram::I2(5), 10),
        (CoxeterDiagram::A(3), 24),
        (CoxeterDiagram::B3, 48),
    ];
    vec![
        check(
            "idempotent-braid-sizes",
            "the idempotent-generator braid monoids match their group orders",
            "square, pentagon, tetrahedral, cube diagrams",
            move || {
                let expected: Vec<String> =
                    sized.iter().map(|(_, s)| s.to_string()).collect();
                let mut actual = Vec::new();
                for (d, _) in sized {
                    actual.push(hecke0_via_unitary(d)?.size().to_string());
                }
                Ok(Outcome::compare(expected.join(","), actual.join(",")))
            },
        ),
        check(
            "idempotent-braid-j-trivial",
            "each of those monoids has singleton two-sided ideal generator sets",
            "square, pentagon, tetrahedral, cube diagrams",
            move || {
                let mut failures = Vec::new();
                for (d, _) in sized {
                    if !hecke0_via_unitary(d)?.triviality().j_trivial {
                        failures.push(d.name());
                    }
                }
                Ok(grade(failures.is_empty(), 4, failures))
            },
        ),
        check(
            "two-route-agreement",
            "enumerating the braid presentation and closing subsets inside the group build the same monoid generator for generator",
            "five catalogued diagrams",
            || {
                let diagrams = [
                    CoxeterDiagram::A(2),
                    CoxeterDiagram::A(3),
                    CoxeterDiagram::I2(4),
                    CoxeterDiagram::I2(5),
                    CoxeterDiagram::B3,
                ];
                let mut failures = Vec::new();
                let mut capped = Vec::new();
                for d in diagrams {
                    let rs = complete_default(&hecke0_presentation(&d.matrix()?)?);
                    if !rs.is_complete() {
                        capped.push(d.name());
                        continue;
                    }
                    let presented = enumerate_presented(&rs, 200)?.monoid;
                    let unitary = hecke0_via_unitary(d)?;
                    let iso = generator_isomorphism(
                        &presented,
                        presented.generator_indices(),
                        &unitary,
                        unitary.generator_indices(),
                    );
                    if iso.is_none() {
                        failures.push(format!("{}: tables disagree", d.name()));
                        continue;
                    }
                    let p = hecke0_presentation(&d.matrix()?)?;
                    match extend_homomorphism(&p, &unitary, unitary.generator_indices())? {
                        HomomorphismOutcome::Extends { surjective: true, .. } => {}
                        _ => failures.push(format!("{}: presentation does not map onto", d.name())),
                    }
                }
                if !capped.is_empty() {
                    return Ok(Outcome::skipped(
                        "agreement on every completed diagram",
                        format!("completion capped for {}", capped.join(", ")),
                    ));
                }
                Ok(grade(failures.is_empty(), 5, failures))
            },
        ),
        check(
            "path-quotients",
            "braid generators along a path satisfy the chain-monoid relations, so the chain monoid is a quotient",
            "five catalogued diagrams onto their path-length chain monoids",
            || {
                let instances: [(CoxeterDiagram, usize); 5] = [
                    (CoxeterDiagram::A(2), 3),
                    (CoxeterDiagram::A(3), 4),
                    (CoxeterDiagram::I2(4), 3),
                    (CoxeterDiagram::I2(5), 3),
                    (CoxeterDiagram::B3, 4),
                ];
                let mut failures = Vec::new();
                for (d, chain) in instances {
                    let source = hecke0_presentation(&d.matrix()?)?;
                    let rs = complete_default(&catalan_presentation(chain)?);
                    let target = enumerate_presented(&rs, 500)?.monoid;
                    let images = target.generator_indices().to_vec();
                    match extend_homomorphism(&source, &target, &images)? {
                        HomomorphismOutcome::Extends { surjective: true, .. } => {}
                        HomomorphismOutcome::Extends { .. } => {
                            failures.push(format!("{}: image is proper", d.name()))
                        }
                        HomomorphismOutcome::Violated { lhs, rhs } => failures
                            .push(format!("{}: relation {lhs} = {rhs} broke", d.name())),
                    }
                }
                Ok(grade(failures.is_empty(), 5, failures))
            },
        ),
        check(
            "lee-to-dihedral",
            "the two-generator alternation presentations map onto the dihedral braid monoids",
            "n=4..8",
            || {
                let mut failures = Vec::new();
                for n in 4..=8 {
                    let source = lee_monoid_presentation(n)?;
                    let target = hecke0_via_unitary(CoxeterDiagram::I2(n as u32))?;
                    let images = target.generator_indices().to_vec();
                    match extend_homomorphism(&source, &target, &images)? {
                        HomomorphismOutcome::Extends { surjective: true, .. } => {}
                        _ => failures.push(format!("n={n}")),
                    }
                }
                Ok(grade(failures.is_empty(), 5, failures))
            },
        ),
        check(
            "dihedral-to-lee",
            "one diagram size up, the dihedral braid presentation maps onto the alternation monoid",
            "n=4..8",
            || {
                let mut failures = Vec::new();
                for n in 4..=8usize {
                    let source =
                        hecke0_presentation(&CoxeterDiagram::I2(n as u32 + 1).matrix()?)?;
                    let rs = complete_default(&lee_monoid_presentation(n)?);
                    let target = enumerate_presented(&rs, 64)?.monoid;
                    let images = target.generator_indices().to_vec();
                    match extend_homomorphism(&source, &target, &images)? {
                        HomomorphismOutcome::Extends { surjective: true, .. } => {}
                        _ => failures.push(format!("n={n}")),
                    }
                }
                Ok(grade(failures.is_empty(), 5, failures))
            },
        ),
        check(
            "alternating-collapse",
            "in the dihedral braid monoid, the n-factor alternation equals both alternations one factor longer",
            "n=4..8",
            || {
                let mut failures = Vec::new();
                for n in 4..=8usize {
                    let m = hecke0_via_unitary(CoxeterDiagram::I2(n as u32))?;
                    let [a, b] = m.generator_indices() else {
                        failures.push(format!("n={n}: generator count"));
                        continue;
                    };
                    let (a, b) = (*a, *b);
                    let base = alternating_product(&m, a, b, n);
                    if base != alternating_product(&m, b, a, n + 1)
                        || base != alternating_product(&m, a, b, n + 1)
                    {
                        failures.push(format!("n={n}"));
                    }
                }
                Ok(grade(failures.is_empty(), 5, failures))
            },
        ),
        check(
            "lee-semigroup-sizes",
            "the two catalogued alternation semigroups have six and eight elements",
            "fixed presentations",
            || {
                let l3 = enumerate_presented(&complete_default(&lee_l3_presentation()), 64)?;
                let l4 = enumerate_presented(&complete_default(&lee_l4_presentation()), 64)?;
                Ok(Outcome::compare("6,8", format!("{},{}", l3.size, l4.size)))
            },
        ),
    ]
}

fn unitary_carriers() -> Result<Vec<(&'static str, FiniteMonoid)>> {
    Ok(vec![
        (
            "three-point permutations",
            coxeter_group_model(CoxeterDiagram::A(2))?.group,
        ),
        ("five-element chain maps", family_monoid(FamilyKind::C, 3)?),
        (
            "order-preserving partial injections on two points",
            family_monoid(FamilyKind::POI, 2)?,
        ),
        (
            "square symmetries",
            coxeter_group_model(CoxeterDiagram::I2(4))?.group,
        ),
    ])
}

pub(crate) fn unitary(_cfg: &SuiteConfig) -> Vec<CheckSpec> {
    vec![
        check(
            "power-monoid-sizes",
            "identity-containing subsets under setwise product number two to the size minus one",
            "four carriers of sizes 6, 5, 6, 8",
            || {
                let mut expected = Vec::new();
                let mut actual = Vec::new();
                for (_, m) in unitary_carriers()? {
                    expected.push((1u64 << (m.size() - 1)).to_string());
                    actual.push(unitary_power_monoid(&m)?.size().to_string());
                }
                Ok(Outcome::compare(expected.join(","), actual.join(",")))
            },
        ),
        check(
            "power-monoid-j-trivial",
            "each of those subset monoids has singleton two-sided ideal generator sets",
            "four carriers of sizes 6, 5, 6, 8",
            || {
                let mut failures = Vec::new();
                for (name, m) in unitary_carriers()? {
                    if !unitary_power_monoid(&m)?.triviality().j_trivial {
                        failures.push(name.to_string());
                    }
                }
                Ok(grade(failures.is_empty(), 4, failures))
            },
        ),
        check(
            "group-sized-submonoids",
            "inside a group's subset monoid, the pairs {identity, involution} generate exactly group-order many subsets",
            "triangle, tetrahedral, square diagrams",
            || {
                let expected = "6,24,8";
                let mut actual = Vec::new();
                for d in [
                    CoxeterDiagram::A(2),
                    CoxeterDiagram::A(3),
                    CoxeterDiagram::I2(4),
                ] {
                    actual.push(hecke0_via_unitary(d)?.size().to_string());
                }
                Ok(Outcome::compare(expected, actual.join(",")))
            },
        ),
    ]
}

fn band_catalogue() -> Result<Vec<(&'static str, FiniteMonoid)>> {
    let sl2 = FiniteMonoid::from_table(vec![0, 1, 1, 1], 0, vec![1])?;
    let sl3 = FiniteMonoid::from_table(vec![0, 1, 2, 1, 1, 2, 2, 2, 2], 0, vec![1, 2])?;
    let left = FiniteMonoid::from_table(vec![0, 1, 2, 1, 1, 1, 2, 2, 2], 0, vec![1, 2])?;
    let right = FiniteMonoid::from_table(vec![0, 1, 2, 1, 1, 2, 2, 1, 2], 0, vec![1, 2])?;
    let mut rect = vec![0u32; 25];
    for i in 0..5 {
        rect[i] = i as u32;
        rect[i * 5] = i as u32;
    }
    for row in 0..2 {
        for col in 0..2 {
            for l in 0..2 {
                for k in 0..2 {
                    let a = 1 + row * 2 + col;
                    let b = 1 + k * 2 + l;
                    rect[a * 5 + b] = (1 + row * 2 + l) as u32;
                }
            }
        }
    }
    let rectangular = FiniteMonoid::from_table(rect, 0, vec![1, 2, 3, 4])?;
    Ok(vec![
        ("two-element semilattice", sl2),
        ("three-chain semilattice", sl3),
        ("left-zero pair with identity", left),
        ("right-zero pair with identity", right),
        ("2x2 rectangular band with identity", rectangular),
    ])
}

pub(crate) fn bands_digraphs(cfg: &SuiteConfig) -> Vec<CheckSpec> {
    let samples = cfg.samples;
    let seed = cfg.seed;
    vec![
        check(
            "deletion-on-bands",
            "in an idempotent monoid, a letter already present on both sides can be deleted between them",
            "five bands of at most five elements, four word shapes, exhaustive",
            || {
                let shapes = [
                    ("x y", "x", "x y"),
                    ("x y", "y", "y x"),
                    ("x y z", "z", "z y x"),
                    ("x y z", "y", "y z x"),
                ];
                let mut failures = Vec::new();
                let bands = band_catalogue()?;
                for (name, band) in &bands {
                    for (u, x, v) in shapes {
                        let ok = band_identity_check(
                            band,
                            &Word::parse(u)?,
                            &VariableId::new(x),
                            &Word::parse(v)?,
                        )?;
                        if !ok {
                            failures.push(format!("{name} on `{u}`/{x}/`{v}`"));
                        }
                    }
                }
                Ok(grade(failures.is_empty(), 20, failures))
            },
        ),
        check(
            "mirror-word-shape",
            "the mirrored chain word's head and tail use one alphabet, containing the absorbed letter",
            "n=2, m=6",
            || {
                let w = build_w_n(2, 6)?;
                let head: BTreeSet<VariableId> = w.head().alphabet().into_iter().collect();
                let tail: BTreeSet<VariableId> = w.tail().alphabet().into_iter().collect();
                let ok = head == tail && head.contains(&VariableId::new("x"));
                Ok(Outcome::compare(
                    "one shared alphabet containing x",
                    if ok {
                        "one shared alphabet containing x".into()
                    } else {
                        format!("head {} vars, tail {} vars", head.len(), tail.len())
                    },
                ))
            },
        ),
        check(
            "mirror-word-certificates",
            "the head certifies a descending alphabet chain and the reversed tail certifies the mirror chain",
            "n=2, m=6",
            || {
                let w = build_w_n(2, 6)?;
                let x = Word::from_chars("x");
                let head_ok = check_alphabet_chain(&w.head(), &w.head_blocks, &x)?;
                let tail = w.tail();
                let shifted: Vec<_> = w
                    .tail_blocks
                    .iter()
                    .map(|r| (r.start - w.split)..(r.end - w.split))
                    .collect();
                let tail_ok = check_alphabet_chain(
                    &tail.reversed(),
                    &reversed_blocks(tail.len(), &shifted),
                    &x,
                )?;
                Ok(Outcome::compare(
                    "both certificates hold",
                    match (head_ok, tail_ok) {
                        (true, true) => "both certificates hold".into(),
                        (h, t) => format!("head: {h}, reversed tail: {t}"),
                    },
                ))
            },
        ),
        check(
            "mirror-word-sampled",
            "inserting the extra letter between head and tail changes nothing over the mixed product monoid",
            format!("n=2, m=6; {samples} sampled substitutions"),
            move || {
                let w = build_w_n(2, 6)?;
                let lhs = w.head().concat(&Word::from_chars("x")).concat(&w.tail());
                let id = Identity::new(lhs, w.word.clone());
                let e3 = family_monoid(FamilyKind::E, 3)?;
                let sl2 = FiniteMonoid::from_table(vec![0, 1, 1, 1], 0, vec![1])?;
                let m = direct_product(&direct_product(&e3, &e3.dual())?, &sl2)?;
                let expected = format!("no counterexample in {samples} samples");
                match satisfies_identity_sampled(&m, &id, samples, seed) {
                    IdentityCheck::Holds => Ok(Outcome::bounded(&expected, &expected)),
                    IdentityCheck::Fails(sub) => {
                        Ok(Outcome::bounded(expected, format!("fails under {sub}")))
                    }
                }
            },
        ),
        check(
            "pendant-spine-analysis",
            "spines with pendant edges are acyclic with longest path one beyond the spine",
            "n=1..6",
            || {
                let mut failures = Vec::new();
                for n in 1..=6 {
                    let a = digraph_analysis(&build_gamma_n(n)?);
                    if !a.is_acyclic || a.longest_path_vertices != Some(n + 1) {
                        failures.push(format!("n={n}"));
                    }
                }
                Ok(grade(failures.is_empty(), 6, failures))
            },
        ),
        check(
            "pendant-spine-closures",
            "edge-collapse closures of the pendant spines stay right-trivial at the recorded sizes",
            "n=1..4",
            || {
                let expected = "3,13,71,461, all right-trivial";
                let mut sizes = Vec::new();
                let mut all_rt = true;
                for n in 1..=4 {
                    let m = catalan_of_digraph(&build_gamma_n(n)?)?;
                    sizes.push(m.size().to_string());
                    all_rt &= m.triviality().r_trivial;
                }
                let actual = format!(
                    "{}, {}",
                    sizes.join(","),
                    if all_rt {
                        "all right-trivial"
                    } else {
                        "right-triviality fails"
                    }
                );
                Ok(Outcome::compare(expected, actual))
            },
        ),
    ]
}

pub(crate) fn determinism(cfg: &SuiteConfig) -> Vec<CheckSpec> {
    super::SUITE_NAMES
        .iter()
        .filter(|name| **name != "determinism")
        .map(|name| {
            let cfg = cfg.clone();
            check(
                format!("repeat-{name}"),
                "running a suite twice under one configuration serializes byte for byte",
                format!("suite={name}"),
                move || {
                    let first = run_suite(name, &cfg)?.emit_json();
                    let second = run_suite(name, &cfg)?.emit_json();
                    Ok(Outcome::compare(
                        "byte-identical reports",
                        if first == second {
                            "byte-identical reports"
                        } else {
                            "reports differ between runs"
                        },
                    ))
                },
            )
        })
        .collect()
}
