//! Acceptance suite. Runs every criterion, prints one line per criterion and
//! exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{run_relation_cases, shape, weight};
use gentl::cellular::{
    algebra_dimension, build_cell_datum, decomposition_matrix, dim_simple_decomp, dim_simple_gram,
    gram_matrices, GramOptions,
};
use gentl::combinatorics::{
    dominance_closed_form, dominance_leq, enumerate_one_column, standard_count, Multipartition, Tableau,
    Weight,
};
use gentl::coxeter::{official_set, validate_official, OfficialSet, Word};
use gentl::hecke::{surviving_shapes, ParamSpec};
use gentl::klr::CellContext;
use gentl::linalg::RatMatrix;

type Verdict = Result<String, String>;

struct Criterion {
    id: u8,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Verdict,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn dimension_formula() -> Verdict {
    let mut checked = 0;
    for r in 2..=5u128 {
        for n in 2..=6u128 {
            let sum: u128 = enumerate_one_column(n as usize, r as usize, 2)
                .iter()
                .map(|s| standard_count(s).pow(2))
                .sum();
            let formula = binomial(r, 2) * binomial(2 * n, n) + 2 * r - r * r;
            ensure(sum == formula, || format!("r={r} n={n}: sum {sum} vs formula {formula}"))?;
            let library = algebra_dimension(n as usize, r as usize).map_err(|e| e.to_string())?;
            ensure(library == formula, || format!("r={r} n={n}: library {library}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (r,n) pairs"))
}

fn oracle_agreement() -> Verdict {
    let (survivors, dim) = surviving_shapes(3, 3, &ParamSpec::generic(3)).map_err(|e| e.to_string())?;
    ensure(dim == 57, || format!("surviving dimension {dim}"))?;
    let got: BTreeSet<Vec<usize>> = survivors
        .iter()
        .map(|s| s.column_heights().ok_or_else(|| format!("{s} is not one-column")))
        .collect::<Result<_, _>>()?;
    let expected: BTreeSet<Vec<usize>> =
        enumerate_one_column(3, 3, 2).iter().map(|s| s.heights().to_vec()).collect();
    ensure(got == expected, || format!("survivors {got:?}"))?;
    Ok(format!("dimension {dim}, {} shapes", got.len()))
}

const EXPECTED_SHAPES: [[usize; 3]; 10] = [
    [1, 1, 1],
    [2, 1, 0],
    [1, 2, 0],
    [2, 0, 1],
    [1, 0, 2],
    [0, 2, 1],
    [3, 0, 0],
    [0, 1, 2],
    [0, 3, 0],
    [0, 0, 3],
];

/// Hand-encoded Hasse diagram, lower shape first, as indices into
/// `EXPECTED_SHAPES`.
const EXPECTED_COVERS: [(usize, usize); 13] =
    [(0, 1), (1, 2), (1, 3), (2, 4), (3, 5), (2, 5), (3, 4), (4, 7), (4, 6), (5, 7), (6, 8), (7, 8), (8, 9)];

fn poset_reproduction() -> Verdict {
    let shapes = enumerate_one_column(3, 3, 3);
    let got: BTreeSet<Vec<usize>> = shapes.iter().map(|s| s.heights().to_vec()).collect();
    let expected: BTreeSet<Vec<usize>> = EXPECTED_SHAPES.iter().map(|h| h.to_vec()).collect();
    ensure(shapes.len() == 10 && got == expected, || format!("shapes {got:?}"))?;

    let k = EXPECTED_SHAPES.len();
    let mut reach = vec![vec![false; k]; k];
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in &EXPECTED_COVERS {
        reach[a][b] = true;
    }
    for m in 0..k {
        for a in 0..k {
            for b in 0..k {
                if reach[a][m] && reach[m][b] {
                    reach[a][b] = true;
                }
            }
        }
    }
    let mps: Vec<Multipartition> = EXPECTED_SHAPES.iter().map(|h| shape(h)).collect();
    let mut relations = 0;
    for a in 0..k {
        for b in 0..k {
            let leq = dominance_leq(&mps[a], &mps[b]).map_err(|e| e.to_string())?;
            ensure(leq == reach[a][b], || format!("{} ⊴ {}: got {leq}", mps[a], mps[b]))?;
            relations += usize::from(leq);
        }
    }
    Ok(format!("10 shapes, {relations} relations"))
}

fn semisimple_identity() -> Verdict {
    let mut count = 0;
    for n in 1..=5usize {
        let gap = n.max(3) as i64;
        for r in [2usize, 3] {
            for g in [gap, gap + 2] {
                let residues: Vec<i64> = (0..r as i64).map(|c| c * g).collect();
                let w = weight(&residues, 0);
                let datum = build_cell_datum(n, &w, 0).map_err(|e| e.to_string())?;
                for gram in gram_matrices(&datum, GramOptions::default()).map_err(|e| e.to_string())? {
                    ensure(gram.is_identity(), || {
                        format!("Gram of {} at n={n}, {residues:?}", gram.shape())
                    })?;
                }
                let d = decomposition_matrix(&datum).map_err(|e| e.to_string())?;
                ensure(d.is_identity(), || format!("decomposition at n={n}, {residues:?}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} weights"))
}

fn non_semisimple_spot_check() -> Verdict {
    let w = weight(&[0, 3], 0);
    let hook = shape(&[1, 3]);
    let ctx = CellContext::new(&hook, &w, 0).map_err(|e| e.to_string())?;
    let t0 = Tableau::from_columns(&[vec![4], vec![1, 2, 3]]).map_err(|e| e.to_string())?;
    let i0 = ctx.tableaux().iter().position(|t| *t == t0).ok_or("t0 is not standard")?;
    let phi = ctx.gram_entry(i0, i0).map_err(|e| e.to_string())?;
    ensure(phi == 0, || format!("phi(t0,t0) = {phi}"))?;

    let datum = build_cell_datum(4, &w, 0).map_err(|e| e.to_string())?;
    let row = datum.position(&hook).ok_or("hook missing")?;
    let col = datum.position(&shape(&[0, 4])).ok_or("(0|1^4) missing")?;
    let rank = dim_simple_gram(&datum, row).map_err(|e| e.to_string())?;
    ensure(rank == 3, || format!("hook Gram rank {rank}"))?;
    let d = decomposition_matrix(&datum).map_err(|e| e.to_string())?;
    ensure(d.entry(row, col) == 1, || format!("decomposition entry {}", d.entry(row, col)))?;
    Ok("phi(t0,t0)=0, rank 3, entry 1".into())
}

fn weight_grid() -> Vec<Weight> {
    let grid: [(&[i64], u32); 13] = [
        (&[0, 3], 0),
        (&[0, 4], 0),
        (&[0, 5], 0),
        (&[0, 10], 0),
        (&[0, 3, 6], 0),
        (&[0, 4, 9], 0),
        (&[0, 5, 10], 0),
        (&[0, 4], 9),
        (&[0, 5], 11),
        (&[0, 4, 8], 13),
        (&[0, 3], 7),
        (&[0, 3], 6),
        (&[0, 3, 6], 9),
    ];
    grid.iter().map(|(res, e)| weight(res, *e)).collect()
}

fn cross_oracle() -> Verdict {
    let grid = weight_grid();
    let mut shapes = 0;
    for w in &grid {
        for n in 1..=4 {
            let datum = build_cell_datum(n, w, 0).map_err(|e| e.to_string())?;
            let d = decomposition_matrix(&datum).map_err(|e| e.to_string())?;
            let by_decomp = dim_simple_decomp(&datum, &d).map_err(|e| e.to_string())?;
            for (i, expected) in by_decomp.iter().enumerate() {
                let by_gram = dim_simple_gram(&datum, i).map_err(|e| e.to_string())? as u128;
                ensure(by_gram == *expected, || {
                    format!(
                        "{} at n={n}, weight {:?} e={}: Gram {by_gram}, decomposition {expected}",
                        datum.poset()[i],
                        w.residues(),
                        w.modulus()
                    )
                })?;
                shapes += 1;
            }
        }
    }
    Ok(format!("{} weights, {shapes} shapes", grid.len()))
}

fn dominance_forms() -> Verdict {
    let mut pairs = 0;
    for n in 1..=6 {
        for r in 2..=4 {
            let shapes = enumerate_one_column(n, r, 2);
            for a in &shapes {
                for b in &shapes {
                    let scan = dominance_leq(a, b).map_err(|e| e.to_string())?;
                    let closed = dominance_closed_form(a, b).map_err(|e| e.to_string())?;
                    ensure(scan == closed, || format!("{a} ⊴ {b}: scan {scan}, closed form {closed}"))?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn gram_rank(ctx: &CellContext) -> Result<usize, String> {
    let dim = ctx.dim();
    let entries: Vec<Vec<i64>> = (0..dim)
        .map(|s| (0..dim).map(|t| ctx.gram_entry(s, t)).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    Ok(RatMatrix::from_integers(&entries).map_err(|e| e.to_string())?.rank())
}

/// Two reference official sets for `((1²),(1²))`, keyed by the first
/// column of each tableau.
fn reference_sets(lambda: &Multipartition) -> Result<[OfficialSet; 2], String> {
    let tables: [[(&[usize; 2], &[usize]); 6]; 2] = [
        [
            (&[1, 3], &[]),
            (&[1, 2], &[2]),
            (&[1, 4], &[3]),
            (&[2, 3], &[1]),
            (&[2, 4], &[1, 3]),
            (&[3, 4], &[1, 3, 2]),
        ],
        [
            (&[1, 3], &[]),
            (&[1, 2], &[2]),
            (&[1, 4], &[3]),
            (&[2, 3], &[1]),
            (&[2, 4], &[3, 1]),
            (&[3, 4], &[3, 1, 2]),
        ],
    ];
    let build = |table: &[(&[usize; 2], &[usize]); 6]| -> Result<OfficialSet, String> {
        let words = official_set(lambda, 0)
            .tableaux()
            .iter()
            .map(|t| {
                let first = t.columns()[0].clone();
                table
                    .iter()
                    .find(|(col, _)| col.as_slice() == first.as_slice())
                    .map(|(_, w)| Word::new(w.to_vec()))
                    .ok_or_else(|| format!("no reference word for first column {first:?}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        OfficialSet::from_words(lambda, words).map_err(|e| e.to_string())
    };
    Ok([build(&tables[0])?, build(&tables[1])?])
}

fn official_sets() -> Verdict {
    let mut sets = 0;
    for n in 1..=6 {
        for r in 2..=4 {
            for lambda in enumerate_one_column(n, r, 2) {
                for seed in 0..4 {
                    ensure(validate_official(&official_set(&lambda, seed)), || {
                        format!("seed {seed} on {lambda}")
                    })?;
                    sets += 1;
                }
            }
        }
    }

    let lambda = shape(&[2, 2]);
    let reference = reference_sets(&lambda)?;
    for (k, set) in reference.iter().enumerate() {
        ensure(validate_official(set), || format!("reference set {} is invalid", k + 1))?;
    }
    let w = weight(&[0, 3], 0);
    let mut ranks = Vec::new();
    for seed in 0..3 {
        ranks.push(gram_rank(&CellContext::new(&lambda, &w, seed).map_err(|e| e.to_string())?)?);
    }
    for set in reference {
        ranks.push(gram_rank(&CellContext::with_official(&w, set).map_err(|e| e.to_string())?)?);
    }
    ensure(ranks.windows(2).all(|p| p[0] == p[1]), || format!("ranks differ: {ranks:?}"))?;

    // The module above is simple at every weight, so repeat on the hook,
    // whose Gram matrix is degenerate here.
    let hook = shape(&[1, 3]);
    let hook_ranks = (0..4)
        .map(|seed| gram_rank(&CellContext::new(&hook, &w, seed).map_err(|e| e.to_string())?))
        .collect::<Result<Vec<_>, _>>()?;
    ensure(hook_ranks.iter().all(|&k| k == 3), || format!("hook ranks {hook_ranks:?}"))?;
    Ok(format!(
        "{sets} generated sets valid, reference sets valid, rank {} on (1^2|1^2), rank 3 on (1|1^3)",
        ranks[0]
    ))
}

fn residue_example() -> Verdict {
    let w = weight(&[0, 3, 7], 0);
    let t =
        Tableau::from_columns(&[vec![1, 4, 5, 7, 8, 9], vec![2, 3, 6], vec![]]).map_err(|e| e.to_string())?;
    let res = t.residue_sequence(&w).map_err(|e| e.to_string())?;
    let expected = vec![0, 3, 2, -1, -2, 1, -3, -4, -5];
    ensure(res == expected, || format!("got {res:?}"))?;
    Ok(format!("{res:?}"))
}

fn relation_soundness() -> Verdict {
    let report = run_relation_cases(2000, 0x5eed, 5);
    ensure(report.failures.is_empty(), || {
        format!("{} failures, first: {}", report.failures.len(), report.failures[0])
    })?;
    ensure(report.cases >= 1000, || format!("only {} cases", report.cases))?;
    Ok(format!("{} cases, {} checks", report.cases, report.checks))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "dimension formula",
            budget: Some(Duration::from_secs(1)),
            run: dimension_formula,
        },
        Criterion {
            id: 2,
            name: "oracle agreement (3,3)",
            budget: Some(Duration::from_secs(60)),
            run: oracle_agreement,
        },
        Criterion { id: 3, name: "poset reproduction", budget: None, run: poset_reproduction },
        Criterion {
            id: 4,
            name: "semisimple Gram identity",
            budget: Some(Duration::from_secs(120)),
            run: semisimple_identity,
        },
        Criterion { id: 5, name: "non-semisimple spot check", budget: None, run: non_semisimple_spot_check },
        Criterion {
            id: 6,
            name: "cross-oracle consistency",
            budget: Some(Duration::from_secs(600)),
            run: cross_oracle,
        },
        Criterion {
            id: 7,
            name: "closed-form dominance",
            budget: Some(Duration::from_secs(10)),
            run: dominance_forms,
        },
        Criterion { id: 8, name: "official-set validity", budget: None, run: official_sets },
        Criterion { id: 9, name: "residue example", budget: None, run: residue_example },
        Criterion { id: 10, name: "KLR relation soundness", budget: None, run: relation_soundness },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let verdict = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match (verdict, c.budget) {
            (Ok(_), Some(budget)) if elapsed > budget => {
                Err(format!("took {elapsed:.2?}, budget {budget:.0?}"))
            }
            (v, _) => v,
        };
        match verdict {
            Ok(detail) => println!("PASS [{:>2}] {}: {detail} ({elapsed:.2?})", c.id, c.name),
            Err(why) => {
                failed += 1;
                println!("FAIL [{:>2}] {}: {why} ({elapsed:.2?})", c.id, c.name);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
