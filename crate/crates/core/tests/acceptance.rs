//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any failure.

mod common;

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{all_words, alphabet, random_word, text};
use rand::{rngs::StdRng, Rng, SeedableRng};
use simonk::attributes::{annotate, attributes, x_coordinates, Attribute};
use simonk::automaton::{build_subword_dfa, dfa_equivalent};
use simonk::normalizer::{normal_word, normalize_traced};
use simonk::oracle::{naive_shortlex, shortest_ranker_length, subwords_up_to};
use simonk::ranker::{canonical_rankers, enumerate_rankers, predecessor_dag};
use simonk::{equivalent, Coordinate, Direction, Letter, Position, Word};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn pos(i: usize) -> Position {
    Position::new(i).unwrap()
}

fn pairs<T: Coordinate>(attrs: impl IntoIterator<Item = Attribute<T>>) -> Vec<(T, T)> {
    attrs.into_iter().map(|a| (a.x, a.y)).collect()
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn best_of<F: FnMut()>(runs: usize, mut f: F) -> Duration {
    (0..runs)
        .map(|_| {
            let t = Instant::now();
            f();
            t.elapsed()
        })
        .min()
        .unwrap()
}

fn golden_pipeline() -> Outcome {
    let u = text("bacbaabada");
    let t = normalize_traced::<u32>(&u, 3).map_err(|e| e.to_string())?;
    let exact = pairs(attributes(&u));
    let expected = [
        (1, 2),
        (1, 2),
        (1, 1),
        (2, 2),
        (2, 3),
        (3, 2),
        (3, 1),
        (4, 2),
        (1, 1),
        (2, 1),
    ];
    check(exact == expected, || format!("attributes {exact:?}"))?;
    let aw = t.annotated.as_ref().ok_or("no annotation")?;
    let deleted: Vec<usize> = aw.deleted_positions().iter().map(|p| p.get()).collect();
    check(deleted == [6, 8], || format!("deleted {deleted:?}"))?;
    let blocks: Vec<(usize, usize)> = t.blocks.iter().map(|b| (b.start.get(), b.end.get())).collect();
    check(blocks == [(4, 5)], || format!("blocks {blocks:?}"))?;
    // Reduced positions 4..=5 are input positions 4 and 5.
    let survivors = aw.surviving_positions();
    check(survivors[3].get() == 4 && survivors[4].get() == 5, || {
        format!("survivors {survivors:?}")
    })?;
    let nf = t.normal_form.word().to_text();
    check(nf == "bacabbda", || format!("normal form {nf}"))?;
    let elapsed = best_of(20, || {
        std::hint::black_box(normal_word(std::hint::black_box(&u), 3));
    });
    check(elapsed < Duration::from_millis(1), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "bacbaabada -> {nf}, deleted {deleted:?}, block 4-5, {elapsed:?}"
    ))
}

fn attribute_rows() -> Outcome {
    let u = text("bacbaabada");
    let got = pairs(attributes(&u));
    let want = [
        (1, 2),
        (1, 2),
        (1, 1),
        (2, 2),
        (2, 3),
        (3, 2),
        (3, 1),
        (4, 2),
        (1, 1),
        (2, 1),
    ];
    check(got == want, || format!("bacbaabada {got:?}"))?;
    let u = text("abcabcdaefccabc");
    let got = pairs(attributes(&u));
    let want = [
        (1, 3),
        (1, 3),
        (1, 3),
        (2, 2),
        (2, 2),
        (2, 2),
        (1, 1),
        (2, 2),
        (1, 1),
        (1, 1),
        (2, 3),
        (3, 2),
        (2, 1),
        (2, 1),
        (3, 1),
    ];
    check(got == want, || format!("abcabcdaefccabc {got:?}"))?;
    let large_k = x_coordinates::<u32>(&u, 100).map_err(|e| e.to_string())?;
    check(large_k == [1, 1, 1, 2, 2, 2, 1, 2, 1, 1, 2, 3, 2, 2, 3], || {
        format!("x pass {large_k:?}")
    })?;
    Ok("both rows exact".into())
}

fn canonical_ranker() -> Outcome {
    let u = text("abcabcdaefccabc");
    let table = canonical_rankers(&u, Direction::X);
    let r = table.ranker(pos(15));
    let rendered = r.render(u.alphabet());
    check(rendered == "X:eac", || format!("canonical {rendered}"))?;
    let visits: Vec<usize> = r.visits(&u).unwrap_or_default().iter().map(|p| p.get()).collect();
    check(visits == [9, 13, 15], || format!("visits {visits:?}"))?;
    let all: Vec<String> = enumerate_rankers(&predecessor_dag(&u), pos(15), 100)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|r| r.render(u.alphabet()))
        .collect();
    check(all == ["X:dbc", "X:eac", "X:ebc", "X:fac", "X:fbc"], || {
        format!("R_15 {all:?}")
    })?;
    Ok(format!("{rendered} via {visits:?}, |R_15| = {}", all.len()))
}

fn three_way_agreement() -> Outcome {
    let start = Instant::now();
    let mut pairs_checked = 0u64;
    for (sigma, max_len) in [(2, 8), (3, 6)] {
        let words = all_words(&alphabet(sigma), max_len);
        for k in 0..=5 {
            // Subword sets are interned once per word; equal ids mean equal sets.
            let mut ids: HashMap<Vec<Vec<Letter>>, usize> = HashMap::new();
            let class: Vec<usize> = words
                .iter()
                .map(|u| {
                    let next = ids.len();
                    *ids.entry(subwords_up_to(u, k).unwrap().raw().to_vec()).or_insert(next)
                })
                .collect();
            for (i, u) in words.iter().enumerate() {
                for (j, v) in words.iter().enumerate().skip(i) {
                    let naive = class[i] == class[j];
                    let by_nf = equivalent(u, v, k);
                    let by_dfa = dfa_equivalent(u, v, k).map_err(|e| e.to_string())?;
                    check(naive == by_nf && naive == by_dfa, || {
                        format!("{u} vs {v} k={k}: naive {naive} nf {by_nf} dfa {by_dfa}")
                    })?;
                    pairs_checked += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{pairs_checked} unordered pairs, 0 disagreements, {:.1?}",
        elapsed
    ))
}

fn canonicity() -> Outcome {
    let words = all_words(&alphabet(3), 6);
    let mut checked = 0;
    for u in &words {
        for k in 1..=4 {
            let nf = normal_word(u, k);
            let naive = naive_shortlex(u, k).map_err(|e| e.to_string())?;
            check(nf == naive, || format!("{u} k={k}: nf {nf} naive {naive}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (word, k) cases, 0 mismatches"))
}

fn attribute_oracle() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut cases = 0;
    for _ in 0..1000 {
        let sigma = rng.gen_range(1..=4);
        let len = rng.gen_range(0..=12);
        let u = random_word(&mut rng, &alphabet(sigma), len);
        let bfs_x: Vec<usize> = u
            .positions()
            .map(|p| shortest_ranker_length(&u, p, Direction::X).unwrap())
            .collect();
        for k in 0..=6 {
            let cap = k.min(u.len()) + 2;
            let x = x_coordinates::<u32>(&u, k).map_err(|e| e.to_string())?;
            for (i, (&got, &want)) in x.iter().zip(&bfs_x).enumerate() {
                check(got as usize == want.min(cap), || {
                    format!("{u} k={k} x at {}: {got} vs {want}", i + 1)
                })?;
            }
            let aw = annotate::<u32>(&u, k).map_err(|e| e.to_string())?;
            let reduced = aw.reduced_word();
            for (p, (_, a)) in reduced.positions().zip(aw.survivors()) {
                let (wx, wy) = (
                    shortest_ranker_length(&reduced, p, Direction::X).unwrap(),
                    shortest_ranker_length(&reduced, p, Direction::Y).unwrap(),
                );
                check((a.x as usize, a.y as usize) == (wx, wy), || {
                    format!("{u} k={k} reduced {reduced} at {p}: {a} vs ({wx},{wy})")
                })?;
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} (word, k) cases, 0 mismatches"))
}

fn invariant_suite() -> Outcome {
    const CASES: usize = 10_000;
    let mut rng = StdRng::seed_from_u64(0xa11);
    let random = |rng: &mut StdRng, max_sigma: usize, max_len: usize| {
        let sigma = rng.gen_range(1..=max_sigma);
        let len = rng.gen_range(0..=max_len);
        random_word(rng, &alphabet(sigma), len)
    };

    for _ in 0..CASES {
        let u = random(&mut rng, 5, 40);
        let k = rng.gen_range(0..8);
        let nf = normal_word(&u, k);
        check(normal_word(&nf, k) == nf, || format!("idempotence: {u} k={k}"))?;
    }

    let mut compat = 0;
    let ab = alphabet(2);
    let small = all_words(&ab, 7);
    while compat < CASES {
        let k = rng.gen_range(1..=4);
        let u = &small[rng.gen_range(0..small.len())];
        let v = &small[rng.gen_range(0..small.len())];
        if !equivalent(u, v, k) {
            continue;
        }
        let (lp, lq) = (rng.gen_range(0..8), rng.gen_range(0..8));
        let p = random_word(&mut rng, &ab, lp);
        let q = random_word(&mut rng, &ab, lq);
        let (l, r) = (p.concat(u).concat(&q), p.concat(v).concat(&q));
        check(normal_word(&l, k) == normal_word(&r, k), || {
            format!("compatibility: {l} vs {r} k={k}")
        })?;
        compat += 1;
    }

    for _ in 0..CASES {
        let abc = alphabet(3);
        let (lu, lv) = (rng.gen_range(0..5), rng.gen_range(0..5));
        let u = random_word(&mut rng, &abc, lu);
        let v = random_word(&mut rng, &abc, lv);
        let k = rng.gen_range(0..6);
        let base = u.concat(&v).repeat(k);
        check(normal_word(&base, k) == normal_word(&base.concat(&u), k), || {
            format!("Simon identity: u={u} v={v} k={k}")
        })?;
    }

    for _ in 0..CASES {
        let u = random(&mut rng, 4, 60);
        let a = attributes(&u);
        for i in 1..u.len() {
            if u.letters()[i] == u.letters()[i - 1] {
                check(a[i].x != a[i - 1].x && a[i].y != a[i - 1].y, || {
                    format!("adjacency: {u} at {}", i + 1)
                })?;
            }
        }
    }

    for _ in 0..CASES {
        let u = random(&mut rng, 6, 60);
        let dag = predecessor_dag(&u);
        for p in u.positions() {
            let mut labels: Vec<Letter> = dag.predecessors(p).iter().map(|&q| u.at(q)).collect();
            let n = labels.len();
            labels.sort();
            labels.dedup();
            check(labels.len() == n && n <= u.alphabet().len(), || {
                format!("predecessor labels: {u} at {p}")
            })?;
        }
    }

    for _ in 0..CASES {
        let u = random(&mut rng, 5, 40);
        let k = rng.gen_range(0..8);
        let f = simonk::normalize(&u, k);
        check(
            f.attributes().iter().all(|a| a.x as usize + a.y as usize <= k + 1),
            || format!("x + y bound: {u} k={k}"),
        )?;
    }
    Ok(format!("6 properties x {CASES} cases, 0 violations"))
}

fn performance() -> Outcome {
    const K: usize = 10;
    let mut rng = StdRng::seed_from_u64(26);
    let sigma = alphabet(26);
    let mut per_letter = Vec::new();
    let mut at_million = Duration::ZERO;
    for (n, runs) in [(100_000, 7), (1_000_000, 5), (10_000_000, 3)] {
        let u: Word = random_word(&mut rng, &sigma, n);
        let t = best_of(runs, || {
            std::hint::black_box(normal_word(std::hint::black_box(&u), K));
        });
        if n == 1_000_000 {
            at_million = t;
        }
        per_letter.push((n, t.as_nanos() as f64 / n as f64));
    }
    let costs: Vec<f64> = per_letter.iter().map(|&(_, c)| c).collect();
    let ratio = costs.iter().cloned().fold(f64::MIN, f64::max) / costs.iter().cloned().fold(f64::MAX, f64::min);
    let report = per_letter
        .iter()
        .map(|(n, c)| format!("n={n}: {c:.1} ns/letter"))
        .collect::<Vec<_>>()
        .join(", ");
    check(ratio < 3.0, || format!("ratio {ratio:.2}; {report}"))?;
    check(at_million < Duration::from_secs(1), || {
        format!("n=10^6 took {at_million:?}")
    })?;
    Ok(format!(
        "{report}; spread {ratio:.2}x; n=10^6 in {at_million:.1?} (k={K})"
    ))
}

fn dfa_size_bound() -> Outcome {
    let mut instances = 0;
    for (sigma, max_len) in [(2, 8), (3, 6)] {
        for u in all_words(&alphabet(sigma), max_len) {
            for k in 0..=5 {
                let live = build_subword_dfa(&u, k).live_states();
                check(live <= k * u.len() + 2, || format!("{u} k={k}: {live} live states"))?;
                instances += 1;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..2000 {
        let len = rng.gen_range(0..=300);
        let sigma = alphabet(rng.gen_range(1..=26));
        let u = random_word(&mut rng, &sigma, len);
        let k = rng.gen_range(0..=40);
        let live = build_subword_dfa(&u, k).live_states();
        check(live <= k * u.len() + 2, || format!("{u} k={k}: {live} live states"))?;
        instances += 1;
    }
    Ok(format!("{instances} automata within k|u| + 2"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("golden pipeline", golden_pipeline),
        ("attribute rows", attribute_rows),
        ("canonical ranker", canonical_ranker),
        ("three-way decider agreement", three_way_agreement),
        ("canonicity", canonicity),
        ("attribute oracle", attribute_oracle),
        ("invariant suite", invariant_suite),
        ("performance", performance),
        ("dfa size bound", dfa_size_bound),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {}. {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
