use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mdc_bench::{labeled, undecided};
use mdc_core::{
    solve_brute, solve_fpt, solve_labeled, solve_labeled_brute, BruteOptions, FptOptions,
    LabeledOptions, UniversalMode,
};

fn unlabeled(c: &mut Criterion) {
    let mut group = c.benchmark_group("mdc");
    group.sample_size(10);
    for (n, m, k) in [(8, 12, 2), (10, 16, 2), (12, 20, 3)] {
        let corpus = undecided(n, m, k, 2, 4);
        let label = format!("n{n}_m{m}_k{k}");
        group.bench_with_input(BenchmarkId::new("brute", &label), &corpus, |b, corpus| {
            b.iter(|| {
                for inst in corpus {
                    solve_brute(inst, &BruteOptions::default()).unwrap();
                }
            })
        });
        for (name, mode) in [
            ("fpt_exhaustive", UniversalMode::Exhaustive),
            ("fpt_constructed", UniversalMode::Constructed),
        ] {
            let opts = FptOptions::with_mode(mode);
            group.bench_with_input(BenchmarkId::new(name, &label), &corpus, |b, corpus| {
                b.iter(|| {
                    for inst in corpus {
                        solve_fpt(inst, &opts).unwrap();
                    }
                })
            });
        }
    }
    group.finish();
}

fn labeled_variant(c: &mut Criterion) {
    let mut group = c.benchmark_group("labeled_mdc");
    for (n, m, k) in [(10, 16, 2), (12, 20, 3)] {
        let corpus = labeled(&undecided(n, m, k, 2, 8), 4);
        let label = format!("n{n}_m{m}_k{k}");
        group.bench_with_input(BenchmarkId::new("labeled_brute", &label), &corpus, |b, corpus| {
            b.iter(|| {
                for li in corpus {
                    solve_labeled_brute(li, &BruteOptions::default()).unwrap();
                }
            })
        });
        for dedup in [false, true] {
            let name = if dedup { "labeled_dedup" } else { "labeled" };
            let opts = LabeledOptions { dedup_colorings: dedup };
            group.bench_with_input(BenchmarkId::new(name, &label), &corpus, |b, corpus| {
                b.iter(|| {
                    for li in corpus {
                        solve_labeled(li, &opts);
                    }
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, unlabeled, labeled_variant);
criterion_main!(benches);
