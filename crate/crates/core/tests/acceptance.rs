//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! with its runtime and asserting the runtime limit.

use std::collections::HashSet;
use std::io::Write;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use brauerbox::blocks::{idempotent_from_character, linear_characters, project, GroupAlgebraElement};
use brauerbox::brauer::{brauer_quotient, green_correspondent, green_pipeline, green_trivial_source, marks_count, relative_trace, fixed_points};
use brauerbox::cli::construct::{self, f3};
use brauerbox::cli::labels::LinearLabels;
use brauerbox::cli::report::Timer;
use brauerbox::cli::run_named;
use brauerbox::ffla::{char_poly, factor_poly, min_poly, FpMatrix, FpPoly, PrimeField};
use brauerbox::modrep::{chop, hom_space, is_isomorphic, perm_rep, MatRep};
use brauerbox::permgrp::{all_subgroups, coset_action, normalizer, sylow, Perm, PermAction, PermGroup, SearchBound};

fn line(n: u32, title: &str, pass: bool, elapsed: Duration, limit_s: u64, detail: &str) {
    let text = format!(
        "criterion {n} {}: {title} | {detail} | {:.2}s (limit {limit_s}s)\n",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    // written past the test harness capture so the line always shows
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
}

fn finish(n: u32, title: &str, failures: &[String], start: Instant, limit_s: u64, detail: &str) {
    let elapsed = start.elapsed();
    let in_time = elapsed <= Duration::from_secs(limit_s);
    let pass = failures.is_empty() && in_time;
    let detail = if failures.is_empty() {
        detail.to_string()
    } else {
        format!("{detail}; failed: {}", failures.join("; "))
    };
    line(n, title, pass, elapsed, limit_s, &detail);
    assert!(failures.is_empty(), "criterion {n}: {failures:?}");
    assert!(in_time, "criterion {n} took {elapsed:?}");
}

fn check(failures: &mut Vec<String>, ok: bool, what: impl Into<String>) {
    if !ok {
        failures.push(what.into());
    }
}

fn iso(a: &MatRep, b: &MatRep) -> bool {
    is_isomorphic(a, b).unwrap().is_some()
}

#[test]
fn criterion_1_a8_green() {
    let start = Instant::now();
    let mut fails = Vec::new();
    let bound = SearchBound::default();
    let a8 = Arc::new(construct::a8());
    let p = sylow(&a8, 3, 0, bound).unwrap();
    check(&mut fails, p.order() == 9, format!("|P| = {}", p.order()));
    let hprime = Arc::new(normalizer(&a8, &p, bound).unwrap());
    check(&mut fails, hprime.order() == 72, format!("|H'| = {}", hprime.order()));
    let omega = perm_rep(&PermAction::natural(a8.clone()), f3());
    let bq = brauer_quotient(&omega, &p, &hprime).unwrap();
    check(&mut fails, bq.dim() == 2, format!("dim V(P) = {}", bq.dim()));
    let c = chop(&bq.quotient_rep, 0).unwrap();
    let labels = LinearLabels::new(&hprime, f3()).unwrap();
    let mut names: Vec<String> = c
        .items
        .iter()
        .map(|i| labels.identify(&i.module).unwrap().unwrap_or_default())
        .collect();
    names.sort();
    check(
        &mut fails,
        c.dims() == vec![1, 1] && c.items.len() == 2,
        format!("constituents {:?}", c.dims()),
    );
    check(&mut fails, names == ["1a", "1b"], format!("labels {names:?}"));
    let scenario = run_named("a8-green", bound, &mut Timer::new(false)).unwrap();
    check(&mut fails, scenario.passed(), "scenario a8-green");
    finish(
        1,
        "a8-green Brauer quotient of F3[Omega_8]",
        &fails,
        start,
        10,
        &format!("|P|=9, |H'|=72, dim V(P)={}, constituents {names:?}", bq.dim()),
    );
}

#[test]
fn criterion_2_cross_method() {
    let start = Instant::now();
    let mut fails = Vec::new();
    let a8 = Arc::new(construct::a8());
    let p = construct::sylow3();
    let hprime = Arc::new(normalizer(&a8, &p, SearchBound::default()).unwrap());
    let omega = perm_rep(&PermAction::natural(a8.clone()), f3());
    let fast = green_trivial_source(&omega, &p, &hprime).unwrap();
    check(&mut fails, fast.fast_path, "fast path not taken");
    let generic = brauer_quotient(&omega, &p, &hprime).unwrap().quotient_rep;
    let pipeline = green_pipeline(&omega, &p, &hprime, 0).unwrap().unwrap();
    check(&mut fails, iso(&fast.module, &generic), "fast vs generic");
    check(&mut fails, iso(&fast.module, &pipeline), "fast vs pipeline");
    check(&mut fails, iso(&generic, &pipeline), "generic vs pipeline");
    let labels = LinearLabels::new(&hprime, f3()).unwrap();
    let c = chop(&omega, 0).unwrap();
    let one = c.items.iter().find(|i| i.module.dim() == 1).unwrap().module.clone();
    let seven = c.items.iter().find(|i| i.module.dim() == 7).unwrap().module.clone();
    let f1 = green_correspondent(&one, &p, &hprime, 0).unwrap().module;
    let f7 = green_correspondent(&seven, &p, &hprime, 0).unwrap().module;
    let n1 = labels.identify(&f1).unwrap();
    let n7 = labels.identify(&f7).unwrap();
    check(&mut fails, n1.as_deref() == Some("1a"), format!("f'(1) = {n1:?}"));
    check(&mut fails, n7.as_deref() == Some("1b"), format!("f'(7) = {n7:?}"));
    check(&mut fails, iso(&f1, &labels.get("1a").unwrap().to_rep()), "f'(1) vs 1a");
    finish(
        2,
        "fast path, generic Brauer quotient and restrict-decompose-strip agree",
        &fails,
        start,
        30,
        &format!("dim {}, f'(1)={n1:?}, f'(7)={n7:?}", fast.module.dim()),
    );
}

#[test]
fn criterion_3_a8_f13() {
    let start = Instant::now();
    let mut fails = Vec::new();
    let out = run_named("a8-f13", SearchBound::default(), &mut Timer::new(false)).unwrap();
    for c in &out.checks {
        check(&mut fails, c.pass, format!("{}: expected {} got {}", c.name, c.expected, c.actual));
    }
    let v = |k: &str| out.value(k).cloned().unwrap_or_default();
    check(&mut fails, v("constituent_dims") == serde_json::json!([1, 7, 7, 13]), "28-point constituents");
    check(&mut fails, v("radical_layers") == serde_json::json!([1, 2, 1]), "radical layers");
    check(&mut fails, v("head_is_socle") == serde_json::json!(true), "head vs socle");
    finish(
        3,
        "a8-f13 Green correspondent of the 13-dimensional simple",
        &fails,
        start,
        120,
        &format!(
            "constituents {}, correspondent dim {}, radical layers {}, layer names {}",
            v("constituent_dims"),
            v("correspondent_dim"),
            v("radical_layers"),
            v("layer_names")
        ),
    );
}

#[test]
fn criterion_4_j4_local() {
    let start = Instant::now();
    let mut fails = Vec::new();
    let out = run_named("j4-local", SearchBound::default(), &mut Timer::new(false)).unwrap();
    for c in &out.checks {
        check(&mut fails, c.pass, format!("{}: expected {} got {}", c.name, c.expected, c.actual));
    }
    let v = |k: &str| out.value(k).cloned().unwrap_or_default();
    check(&mut fails, v("module_dim") == serde_json::json!(16), "dim F3[Ntilde\\N]");
    check(&mut fails, v("six_dim_multiplicities") == serde_json::json!([1, 1]), "two 6-dim constituents");
    check(
        &mut fails,
        v("projections") == serde_json::json!([["1a", "1a"], ["1c", "1d"]]),
        "projections",
    );
    finish(
        4,
        "j4-local permutation module of N on the cosets of Ntilde",
        &fails,
        start,
        60,
        &format!(
            "|N|={}, |Ntilde|={}, constituent dims {}, projections {}",
            v("n_order"),
            v("ntilde_order"),
            v("constituent_dims"),
            v("projections")
        ),
    );
}

fn random_subgroup(g: &PermGroup, k: usize, rng: &mut ChaCha8Rng) -> PermGroup {
    let gens: Vec<Perm> = (0..k).map(|_| g.random_element(rng)).collect();
    g.subgroup(gens).unwrap()
}

/// K-fixed right cosets of H, by listing every element of G.
fn brute_fixed_cosets(g: &PermGroup, h: &PermGroup, k: &PermGroup) -> usize {
    let helems = h.elements(1_000_000).unwrap();
    let hset: HashSet<Perm> = helems.iter().cloned().collect();
    let mut seen = HashSet::new();
    let mut count = 0;
    for x in g.elements(1_000_000).unwrap() {
        let key = helems.iter().map(|y| y.mul(&x)).min().unwrap();
        if !seen.insert(key) {
            continue;
        }
        if k.gens().iter().all(|s| hset.contains(&x.mul(s).mul(&x.inv()))) {
            count += 1;
        }
    }
    count
}

#[test]
fn criterion_5_marks_formula() {
    let start = Instant::now();
    let mut fails = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut orders = Vec::new();
    for _ in 0..100 {
        let n = rng.gen_range(3..=6);
        let s = PermGroup::symmetric(n);
        let g = Arc::new(random_subgroup(&s, rng.gen_range(1..=2), &mut rng));
        let h = Arc::new(random_subgroup(&g, rng.gen_range(1..=2), &mut rng));
        let k = Arc::new(random_subgroup(&g, rng.gen_range(0..=2), &mut rng));
        let marks = marks_count(&g, &h, &k).unwrap();
        let direct = brute_fixed_cosets(&g, &h, &k);
        check(
            &mut fails,
            marks == direct as u128,
            format!("|G|={} |H|={} |K|={}: marks {marks} vs {direct}", g.order(), h.order(), k.order()),
        );
        orders.push(g.order());
    }
    finish(
        5,
        "marks formula equals the direct fixed-coset count",
        &fails,
        start,
        60,
        &format!("100 triples, |G| up to {}", orders.iter().max().unwrap()),
    );
}

fn frobenius_instance(rng: &mut ChaCha8Rng) -> Option<(usize, usize)> {
    let n = rng.gen_range(3..=5);
    let s = PermGroup::symmetric(n);
    let g = Arc::new(random_subgroup(&s, 2, rng));
    let h = Arc::new(random_subgroup(&g, rng.gen_range(1..=2), rng));
    if g.order() / h.order() > 12 {
        return None;
    }
    let f = f3();
    let m = if rng.gen_bool(0.5) {
        MatRep::trivial(h.clone(), f)
    } else {
        perm_rep(&PermAction::natural(h.clone()), f)
    };
    let nmod = perm_rep(&PermAction::natural(g.clone()), f);
    let ind = m.induce(&g).unwrap();
    let lhs = hom_space(&ind, &nmod).unwrap().len();
    let rhs = hom_space(&m, &nmod.restrict(&h).unwrap()).unwrap().len();
    Some((lhs, rhs))
}

#[test]
fn criterion_6_invariant_suites() {
    let start = Instant::now();
    let mut fails = Vec::new();
    let bound = SearchBound::default();
    let f = f3();

    // chop: dimension conservation and seed independence
    let a8 = Arc::new(construct::a8());
    let local = construct::local_groups().unwrap();
    let omega8 = perm_rep(&PermAction::natural(a8.clone()), f);
    let omega28 = perm_rep(&coset_action(&a8, &construct::two_subset_stabilizer()).unwrap(), f);
    let omega16 = perm_rep(&coset_action(&local.n, &local.ntilde).unwrap(), f);
    let p = construct::sylow3();
    let hprime = Arc::new(normalizer(&a8, &p, bound).unwrap());
    let d8modc4 = green_trivial_source(&omega8, &p, &hprime).unwrap().module;
    let modules = [("Omega8", &omega8), ("Omega28", &omega28), ("Omega16", &omega16), ("d8modc4", &d8modc4)];
    for (name, m) in modules {
        let base = chop(m, 0).unwrap();
        check(&mut fails, base.total_dim() == m.dim(), format!("{name}: dims do not add up"));
        for seed in 1..5 {
            let c = chop(m, seed).unwrap();
            check(&mut fails, c.total_dim() == m.dim(), format!("{name} seed {seed}: dim"));
            check(&mut fails, c.same_as(&base).unwrap(), format!("{name} seed {seed}: constituents differ"));
        }
    }

    // Brauer quotient additivity
    let sum = omega8.direct_sum(&omega28).unwrap();
    let lhs = brauer_quotient(&sum, &p, &hprime).unwrap().quotient_rep;
    let rhs = brauer_quotient(&omega8, &p, &hprime)
        .unwrap()
        .quotient_rep
        .direct_sum(&brauer_quotient(&omega28, &p, &hprime).unwrap().quotient_rep)
        .unwrap();
    check(&mut fails, iso(&lhs, &rhs), "additivity on Omega8 + Omega28");
    let triv = MatRep::trivial(local.n.clone(), f);
    let sum = omega16.direct_sum(&triv).unwrap();
    let lhs = brauer_quotient(&sum, &local.p, &local.n).unwrap().quotient_rep;
    let rhs = brauer_quotient(&omega16, &local.p, &local.n)
        .unwrap()
        .quotient_rep
        .direct_sum(&brauer_quotient(&triv, &local.p, &local.n).unwrap().quotient_rep)
        .unwrap();
    check(&mut fails, iso(&lhs, &rhs), "additivity on Omega16 + k");

    // trace transitivity on random chains Q <= R <= P
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut chains = 0;
    while chains < 20 {
        let s6 = PermGroup::symmetric(6);
        let g = Arc::new(random_subgroup(&s6, 2, &mut rng));
        if g.order() % 9 != 0 {
            continue;
        }
        let syl = sylow(&g, 3, chains, bound).unwrap();
        let subs = all_subgroups(&syl, 10_000).unwrap();
        let r = &subs[rng.gen_range(0..subs.len())];
        let qs: Vec<&PermGroup> = subs.iter().filter(|q| q.is_subgroup_of(r)).collect();
        let q = qs[rng.gen_range(0..qs.len())];
        let h = random_subgroup(&g, 1, &mut rng);
        if g.order() / h.order() > 60 {
            continue;
        }
        let v = perm_rep(&coset_action(&g, &h).unwrap(), f);
        let vq = fixed_points(&v, q).unwrap();
        let direct = relative_trace(&v, q, &syl, &vq).unwrap();
        let via_r = relative_trace(&v, r, &syl, &relative_trace(&v, q, r, &vq).unwrap()).unwrap();
        check(
            &mut fails,
            direct.same_as(&via_r),
            format!("trace transitivity |Q|={} |R|={} |P|={}", q.order(), r.order(), syl.order()),
        );
        chains += 1;
    }

    // Frobenius reciprocity
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut instances = 0;
    while instances < 50 {
        if let Some((l, r)) = frobenius_instance(&mut rng) {
            check(&mut fails, l == r, format!("Frobenius reciprocity {l} vs {r}"));
            instances += 1;
        }
    }

    // idempotents of E = 2^3 over F3
    let chars = linear_characters(&local.e, f).unwrap();
    check(&mut fails, chars.len() == 8, format!("{} characters of E", chars.len()));
    let idems: Vec<GroupAlgebraElement> = chars.iter().map(|c| idempotent_from_character(c).unwrap()).collect();
    let mut total = GroupAlgebraElement::zero(local.e.clone(), f);
    for (i, a) in idems.iter().enumerate() {
        check(&mut fails, a.is_idempotent(), format!("e_{i} not idempotent"));
        for (j, b) in idems.iter().enumerate() {
            if i != j {
                check(&mut fails, a.mul(b).is_zero(), format!("e_{i} e_{j} != 0"));
            }
        }
        total = total.add(a);
    }
    check(&mut fails, total == GroupAlgebraElement::one(local.e.clone(), f), "idempotents do not sum to 1");
    let mut cgens = local.e.gens().to_vec();
    cgens.extend(local.p.gens().iter().cloned());
    let c = Arc::new(local.n.subgroup(cgens).unwrap());
    let res_h = omega16.restrict(&local.h).unwrap();
    let mut dims = 0;
    for e in &idems {
        let over_h = project(&res_h, e, &c).unwrap();
        let over_n = project(&omega16, e, &c).unwrap();
        check(&mut fails, over_h.subspace.same_as(&over_n.subspace), "projection depends on the ambient group");
        dims += over_h.module.dim();
    }
    check(&mut fails, dims == omega16.dim(), format!("projections add up to {dims}"));

    finish(
        6,
        "invariant suites (chop, additivity, trace transitivity, Frobenius reciprocity, idempotents)",
        &fails,
        start,
        120,
        "4 modules x 5 seeds, 2 sums, 20 chains, 50 reciprocity instances, 8 idempotents",
    );
}

fn poly_det(mut m: Vec<Vec<FpPoly>>) -> FpPoly {
    let n = m.len();
    if n == 1 {
        return m.remove(0).remove(0);
    }
    let f = m[0][0].field();
    let mut acc = FpPoly::zero(f);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<FpPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = m[0][j].mul(&poly_det(minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// `det(x I - A)` by cofactor expansion.
fn cofactor_char_poly(a: &FpMatrix) -> FpPoly {
    let f = a.field();
    let n = a.rows();
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = FpPoly::constant(f, f.neg(a.get(i, j)));
                    if i == j {
                        c.add(&FpPoly::x(f))
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    poly_det(m)
}

fn monic_polys(f: PrimeField, d: usize) -> Vec<FpPoly> {
    let p = f.p() as u64;
    (0..p.pow(d as u32))
        .map(|mut idx| {
            let mut c: Vec<i64> = (0..d)
                .map(|_| {
                    let v = (idx % p) as i64;
                    idx /= p;
                    v
                })
                .collect();
            c.push(1);
            FpPoly::new(f, c)
        })
        .collect()
}

/// Factorization by trial division with every monic polynomial of increasing degree.
fn trial_factor(g: &FpPoly) -> Vec<(FpPoly, usize)> {
    let f = g.field();
    let mut rest = g.monic();
    let mut out = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap() >= 1 {
        if 2 * d > rest.degree().unwrap() {
            out.push((rest.clone(), 1));
            break;
        }
        for q in monic_polys(f, d) {
            let mut k = 0;
            while rest.rem(&q).is_zero() {
                rest = rest.divrem(&q).unwrap().0;
                k += 1;
            }
            if k > 0 {
                out.push((q, k));
            }
        }
        d += 1;
    }
    // merge a leftover equal to an earlier factor
    let mut merged: Vec<(FpPoly, usize)> = Vec::new();
    for (q, k) in out {
        match merged.iter_mut().find(|(r, _)| *r == q) {
            Some(e) => e.1 += k,
            None => merged.push((q, k)),
        }
    }
    merged.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    merged
}

fn is_irreducible(q: &FpPoly) -> bool {
    let d = q.degree().unwrap();
    d >= 1 && (1..=d / 2).all(|k| monic_polys(q.field(), k).iter().all(|t| !q.rem(t).is_zero()))
}

fn random_matrix(f: PrimeField, n: usize, rng: &mut ChaCha8Rng) -> FpMatrix {
    let p = f.p() as i64;
    let data: Vec<i64> = (0..n * n).map(|_| rng.gen_range(0..p)).collect();
    FpMatrix::from_vec(f, n, n, data).unwrap()
}

/// Random matrix with repeated eigenstructure: a block-diagonal of copies conjugated by a random invertible.
fn structured_matrix(f: PrimeField, n: usize, rng: &mut ChaCha8Rng) -> FpMatrix {
    let k = rng.gen_range(1..=n.max(1).min(3));
    let b = random_matrix(f, k, rng);
    let mut blocks = Vec::new();
    let mut used = 0;
    while used + k <= n {
        blocks.push(b.clone());
        used += k;
    }
    while used < n {
        blocks.push(FpMatrix::identity(f, 1).scale(rng.gen_range(0..f.p())));
        used += 1;
    }
    let refs: Vec<&FpMatrix> = blocks.iter().collect();
    let d = FpMatrix::block_diag(&refs).unwrap();
    loop {
        let t = random_matrix(f, n, rng);
        if let Ok(ti) = t.inverse() {
            return &(&t * &d) * &ti;
        }
    }
}

#[test]
fn criterion_7_ffla_kernel() {
    let start = Instant::now();
    let mut fails = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let fields = [PrimeField::new(2).unwrap(), f3(), PrimeField::new(5).unwrap()];
    for i in 0..200 {
        let f = fields[i % 3];
        let n = rng.gen_range(1..=6);
        let a = if i % 2 == 0 { random_matrix(f, n, &mut rng) } else { structured_matrix(f, n, &mut rng) };
        let chi = cofactor_char_poly(&a);
        check(&mut fails, char_poly(&a).unwrap() == chi, format!("char poly #{i}"));
        let m = min_poly(&a).unwrap();
        check(&mut fails, m.leading() == 1, format!("min poly #{i} not monic"));
        check(&mut fails, chi.rem(&m).is_zero(), format!("min poly #{i} does not divide char poly"));
        check(&mut fails, m.eval_matrix(&a).unwrap().is_zero(), format!("min poly #{i} does not annihilate"));
        for (q, _) in trial_factor(&m) {
            let smaller = m.divrem(&q).unwrap().0;
            check(
                &mut fails,
                !smaller.eval_matrix(&a).unwrap().is_zero(),
                format!("min poly #{i} is not minimal"),
            );
        }
    }
    for i in 0..200 {
        let f = fields[i % 2];
        let p = f.p() as i64;
        let g = if i % 2 == 0 {
            let d = rng.gen_range(1..=12);
            let mut c: Vec<i64> = (0..d).map(|_| rng.gen_range(0..p)).collect();
            c.push(rng.gen_range(1..p));
            FpPoly::new(f, c)
        } else {
            // products of small random factors, with repeats
            let mut g = FpPoly::one(f);
            while g.degree().unwrap() < 8 {
                let d = rng.gen_range(1..=3);
                let mut c: Vec<i64> = (0..d).map(|_| rng.gen_range(0..p)).collect();
                c.push(1);
                let q = FpPoly::new(f, c);
                let e = rng.gen_range(1..=2);
                if g.degree().unwrap() + d * e > 12 {
                    break;
                }
                g = g.mul(&q.pow(e as u64));
            }
            if g.degree() == Some(0) {
                g = FpPoly::x(f);
            }
            g
        };
        let mut got = factor_poly(&g).unwrap();
        got.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        let expected = trial_factor(&g);
        check(&mut fails, got == expected, format!("factorization #{i} of {g}"));
        let mut prod = FpPoly::one(f);
        for (q, k) in &got {
            check(&mut fails, q.leading() == 1 && is_irreducible(q), format!("factor {q} of #{i}"));
            prod = prod.mul(&q.pow(*k as u64));
        }
        check(&mut fails, prod == g.monic(), format!("product of factors #{i}"));
    }
    finish(
        7,
        "min_poly and factor_poly against brute-force oracles",
        &fails,
        start,
        30,
        "200 matrices (dim <= 6, p in {2,3,5}), 200 polynomials (deg <= 12, p in {2,3})",
    );
}
