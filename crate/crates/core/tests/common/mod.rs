//! Helpers shared by the integration test targets.

#![allow(dead_code)]

use gentl::combinatorics::{enumerate_one_column, Modulus, Multipartition, Weight};
use gentl::klr::{CellContext, Letter};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn weight(residues: &[i64], e: u32) -> Weight {
    Weight::new(residues, Modulus::from_e(e)).expect("valid weight")
}

pub fn shape(heights: &[usize]) -> Multipartition {
    Multipartition::new(heights.to_vec()).expect("valid shape")
}

/// A factor of a product acting on the cell module.
#[derive(Debug, Clone)]
pub enum Op {
    L(Letter),
    E(Vec<i64>),
}

pub fn psi(r: usize) -> Op {
    Op::L(Letter::Psi(r))
}

pub fn y(k: usize) -> Op {
    Op::L(Letter::Y(k))
}

/// Applies a product written left to right, so the rightmost factor acts
/// first.
pub fn apply(ctx: &CellContext, product: &[Op], v: &[i64]) -> Vec<i64> {
    product.iter().rev().fold(v.to_vec(), |acc, op| match op {
        Op::L(l) => ctx.act(*l, &acc).expect("letter in range"),
        Op::E(i) => ctx.act_idempotent(i, &acc),
    })
}

pub fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: i64, a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| c * x).collect()
}

/// `xᵀ G z`.
pub fn pair(gram: &[Vec<i64>], x: &[i64], z: &[i64]) -> i64 {
    gram.iter().zip(x).map(|(row, xi)| xi * row.iter().zip(z).map(|(g, zj)| g * zj).sum::<i64>()).sum()
}

/// A random weight with `r` residues, all pairwise gaps above two.
pub fn random_weight(rng: &mut ChaCha8Rng, r: usize) -> Weight {
    loop {
        let e = match rng.gen_range(0..3) {
            0 => 0,
            _ => rng.gen_range(3 * r as u32..=12),
        };
        let span = if e == 0 { 12 } else { e as i64 };
        let residues: Vec<i64> = (0..r).map(|_| rng.gen_range(0..span)).collect();
        if let Ok(w) = Weight::new(&residues, Modulus::from_e(e)) {
            return w;
        }
    }
}

/// Outcome of a randomized run of the defining relations.
#[derive(Debug, Default)]
pub struct RelationReport {
    pub cases: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

/// Checks the defining relations of the KLR algebra on random vectors of
/// random cell modules with `n ≤ max_n`.
pub fn run_relation_cases(cases: usize, seed: u64, max_n: usize) -> RelationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = RelationReport::default();
    while report.cases < cases {
        let n = rng.gen_range(2..=max_n);
        let r = rng.gen_range(2..=3);
        let w = random_weight(&mut rng, r);
        let shapes = enumerate_one_column(n, r, 2);
        let lambda = shapes.choose(&mut rng).expect("non-empty poset").clone();
        let official_seed = rng.gen_range(0..3);
        let ctx = CellContext::new(&lambda, &w, official_seed).expect("context");
        let v: Vec<i64> = (0..ctx.dim()).map(|_| rng.gen_range(-2..=2)).collect();
        let idem = ctx.residue_of(rng.gen_range(0..ctx.dim())).clone();
        let r_idx = rng.gen_range(1..n);
        let context =
            format!("{lambda} weight {:?} e={} seed {official_seed} r={r_idx}", w.residues(), w.modulus());
        check_all(&ctx, &w, n, r_idx, &idem, &v, &mut rng, &context, &mut report);
        report.cases += 1;
    }
    report
}

#[allow(clippy::too_many_arguments)]
fn check_all(
    ctx: &CellContext,
    w: &Weight,
    n: usize,
    r: usize,
    idem: &[i64],
    v: &[i64],
    rng: &mut ChaCha8Rng,
    context: &str,
    report: &mut RelationReport,
) {
    let m = w.modulus();
    let e = Op::E(idem.to_vec());
    let mut check = |name: &str, lhs: Vec<i64>, rhs: Vec<i64>| {
        report.checks += 1;
        if lhs != rhs {
            report.failures.push(format!("{name} on {context}: {lhs:?} != {rhs:?}"));
        }
    };
    let ev = apply(ctx, std::slice::from_ref(&e), v);
    let (a, b) = (idem[r - 1], idem[r]);
    let same = m.same(a, b);

    // e(i) y_k = y_k e(i) and y_k y_l = y_l y_k
    let k = rng.gen_range(1..=n);
    let l = rng.gen_range(1..=n);
    check("idempotent-y", apply(ctx, &[e.clone(), y(k)], v), apply(ctx, &[y(k), e.clone()], v));
    check("y-commute", apply(ctx, &[y(k), y(l)], v), apply(ctx, &[y(l), y(k)], v));

    // ψ_r e(i) = e(s_r i) ψ_r
    let mut swapped = idem.to_vec();
    swapped.swap(r - 1, r);
    check("psi-idempotent", apply(ctx, &[psi(r), e.clone()], v), apply(ctx, &[Op::E(swapped), psi(r)], v));

    // ψ_r y_s = y_s ψ_r for s ≠ r, r+1
    let far_y: Vec<usize> = (1..=n).filter(|&s| s != r && s != r + 1).collect();
    if let Some(&s) = far_y.choose(rng) {
        check("psi-y-commute", apply(ctx, &[psi(r), y(s)], v), apply(ctx, &[y(s), psi(r)], v));
    }

    // ψ_r ψ_s = ψ_s ψ_r for |r - s| > 1
    let far_psi: Vec<usize> = (1..n).filter(|&s| s.abs_diff(r) > 1).collect();
    if let Some(&s) = far_psi.choose(rng) {
        check("psi-commute", apply(ctx, &[psi(r), psi(s)], v), apply(ctx, &[psi(s), psi(r)], v));
    }

    // ψ_r y_{r+1} e(i) = y_r ψ_r e(i) + δ e(i)
    let delta = if same { ev.clone() } else { vec![0; ev.len()] };
    check(
        "psi-y-crossing",
        apply(ctx, &[psi(r), y(r + 1), e.clone()], v),
        add(&apply(ctx, &[y(r), psi(r), e.clone()], v), &delta),
    );
    // y_{r+1} ψ_r e(i) = ψ_r y_r e(i) + δ e(i)
    check(
        "y-psi-crossing",
        apply(ctx, &[y(r + 1), psi(r), e.clone()], v),
        add(&apply(ctx, &[psi(r), y(r), e.clone()], v), &delta),
    );

    // ψ_r² e(i)
    let square = apply(ctx, &[psi(r), psi(r), e.clone()], v);
    let y_diff = sub(&apply(ctx, &[y(r + 1), e.clone()], v), &apply(ctx, &[y(r), e.clone()], v));
    let expected = if same {
        vec![0; ev.len()]
    } else if m.arrow(a, b) {
        y_diff
    } else if m.arrow(b, a) {
        scale(-1, &y_diff)
    } else {
        ev.clone()
    };
    check("psi-square", square, expected);

    // (ψ_r ψ_{r+1} ψ_r − ψ_{r+1} ψ_r ψ_{r+1}) e(i)
    if r + 1 < n {
        let c = idem[r + 1];
        let lhs = sub(
            &apply(ctx, &[psi(r), psi(r + 1), psi(r), e.clone()], v),
            &apply(ctx, &[psi(r + 1), psi(r), psi(r + 1), e.clone()], v),
        );
        let expected = if m.same(a, c) && m.arrow(a, b) {
            ev.clone()
        } else if m.same(a, c) && m.arrow(b, a) {
            scale(-1, &ev)
        } else {
            vec![0; ev.len()]
        };
        check("braid", lhs, expected);
    }

    // The Gram form is invariant: ⟨a x, z⟩ = ⟨x, a* z⟩ with ψ* = ψ, y* = y.
    let dim = ctx.dim();
    let gram: Vec<Vec<i64>> =
        (0..dim).map(|s| (0..dim).map(|t| ctx.gram_entry(s, t).expect("entry")).collect()).collect();
    let z: Vec<i64> = (0..dim).map(|_| rng.gen_range(-2..=2)).collect();
    for op in [psi(r), y(k)] {
        let lhs = pair(&gram, &apply(ctx, std::slice::from_ref(&op), v), &z);
        let rhs = pair(&gram, v, &apply(ctx, &[op], &z));
        check("gram-invariance", vec![lhs], vec![rhs]);
    }
}
