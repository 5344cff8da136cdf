use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use fbplab_bench::{chain_monoid, chain_word, completed_chain_presentation, injection_monoid};
use fbplab_core::monoid::{bounded_identity_theory, satisfies_identity, unitary_power_monoid};
use fbplab_core::presentation::enumerate_presented;
use fbplab_core::transform::{enumerate_family, FamilyKind};
use fbplab_core::word::{jm_signature, um_signature, Identity, VariableId, Word};

fn family_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate chain maps, 7 points", |b| {
        b.iter(|| enumerate_family(FamilyKind::C, black_box(7)).unwrap())
    });
    c.bench_function("enumerate partial injections, 5 points", |b| {
        b.iter(|| enumerate_family(FamilyKind::IC, black_box(5)).unwrap())
    });
}

fn subword_signatures(c: &mut Criterion) {
    let w = chain_word(3, 4);
    c.bench_function("scattered subword signature, height-4 word", |b| {
        b.iter(|| jm_signature(black_box(&w), 3))
    });
    c.bench_function("unambiguous subword signature, height-4 word", |b| {
        b.iter(|| um_signature(black_box(&w), 3))
    });
}

fn identity_checks(c: &mut Criterion) {
    let chain = chain_monoid(4);
    let injections = injection_monoid(3);
    let id = Identity::new(
        Word::parse("x x x y y y").unwrap(),
        Word::parse("y y y x x x").unwrap(),
    );
    c.bench_function("exhaustive identity check, 14-element chain monoid", |b| {
        b.iter(|| satisfies_identity(black_box(&chain), black_box(&id)).unwrap())
    });
    let vars = [VariableId::new("x"), VariableId::new("y")];
    c.bench_function("identity fragment, 14-element injections, len 5", |b| {
        b.iter(|| bounded_identity_theory(black_box(&injections), &vars, 5).unwrap())
    });
}

fn presentations(c: &mut Criterion) {
    c.bench_function(
        "complete and enumerate the 42-element chain presentation",
        |b| {
            b.iter(|| {
                let rs = completed_chain_presentation(black_box(5));
                enumerate_presented(&rs, 100).unwrap()
            })
        },
    );
}

fn power_monoids(c: &mut Criterion) {
    let chain = chain_monoid(3);
    c.bench_function("unitary subset closure over 5 elements", |b| {
        b.iter(|| unitary_power_monoid(black_box(&chain)).unwrap())
    });
}

criterion_group!(
    benches,
    family_enumeration,
    subword_signatures,
    identity_checks,
    presentations,
    power_monoids
);
criterion_main!(benches);
