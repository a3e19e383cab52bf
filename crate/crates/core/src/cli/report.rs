use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Command, JobConfig};
use crate::cellular::{
    algebra_dimension, build_cell_datum, cell_dimension, decomposition_matrix, dim_simple_decomp,
    graded_dim_cell, gram_matrices, is_semisimple_params, is_semisimple_weight, CellDatum, GramOptions,
};
use crate::combinatorics::{dominance_leq, enumerate_one_column, Multipartition, Weight};
use crate::coxeter::official_set;
use crate::error::{Error, Result};
use crate::hecke::{seminormal_rep, surviving_shapes, verify_relations, ParamSpec};

/// Everything a run produces. Optional fields are omitted from JSON when
/// the command does not compute them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub command: String,
    pub n: usize,
    pub r: usize,
    pub e: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default)]
    pub shapes: Vec<ShapeReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poset: Option<PosetReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Vec<Vec<u8>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub total_dimension: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semisimple: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semisimple_params: Option<ParamsVerdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ShapeReport {
    pub heights: Vec<usize>,
    pub label: String,
    pub dim_cell: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_simple: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graded_dim: Option<BTreeMap<i64, u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tableaux: Option<Vec<Vec<Vec<usize>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub words: Option<Vec<Vec<usize>>>,
}

/// Elements in canonical order and the covering pairs `[lower, upper]`
/// as indices into `elements`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PosetReport {
    pub elements: Vec<String>,
    pub covers: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ParamsVerdict {
    pub q: String,
    pub v: Vec<String>,
    pub semisimple: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleReport {
    pub q: String,
    pub v: Vec<String>,
    pub surviving_shapes: Vec<String>,
    pub dimension: u64,
    pub expected_dimension: u64,
    pub relations_verified: bool,
    pub agrees: bool,
}

fn command_name(c: Command) -> &'static str {
    match c {
        Command::Poset => "poset",
        Command::Std => "std",
        Command::Ore => "ore",
        Command::Gram => "gram",
        Command::Decomp => "decomp",
        Command::Dims => "dims",
        Command::Semisimple => "semisimple",
        Command::OracleValidate => "oracle-validate",
        Command::All => "all",
    }
}

fn base_shape(shape: &Multipartition) -> ShapeReport {
    ShapeReport {
        heights: shape.heights().to_vec(),
        label: shape.label(),
        dim_cell: cell_dimension(shape) as u64,
        dim_simple: None,
        graded_dim: None,
        degrees: None,
        gram: None,
        tableaux: None,
        words: None,
    }
}

/// Computes the report for a validated configuration.
pub fn build_report(cfg: &JobConfig, weight: Option<&Weight>) -> Result<Report> {
    let mut report = Report {
        command: command_name(cfg.command).to_string(),
        n: cfg.n,
        r: cfg.r,
        e: cfg.e,
        weight: weight.map(|w| w.residues().to_vec()),
        seed: None,
        shapes: Vec::new(),
        poset: None,
        labels: None,
        decomposition: None,
        total_dimension: None,
        semisimple: None,
        semisimple_params: None,
        oracle: None,
    };
    let cell_shapes = enumerate_one_column(cfg.n, cfg.r, 2);
    match cfg.command {
        Command::Poset => {
            let elements = enumerate_one_column(cfg.n, cfg.r, cfg.max_components);
            report.shapes = elements.iter().map(base_shape).collect();
            report.poset = Some(poset_report(&elements)?);
        }
        Command::Std => {
            report.shapes = cell_shapes
                .iter()
                .map(|shape| {
                    let mut s = base_shape(shape);
                    let set = official_set(shape, cfg.official_seed);
                    s.tableaux = Some(set.tableaux().iter().map(|t| t.columns()).collect());
                    s
                })
                .collect();
        }
        Command::Ore => {
            report.seed = Some(cfg.official_seed);
            report.shapes = cell_shapes
                .iter()
                .map(|shape| {
                    let mut s = base_shape(shape);
                    let set = official_set(shape, cfg.official_seed);
                    s.tableaux = Some(set.tableaux().iter().map(|t| t.columns()).collect());
                    s.words = Some(set.words().iter().map(|w| w.letters().to_vec()).collect());
                    s
                })
                .collect();
        }
        Command::Gram => {
            let datum = datum(cfg, weight)?;
            report.seed = Some(cfg.official_seed);
            report.shapes = gram_shapes(cfg, &datum)?;
        }
        Command::Decomp => {
            let datum = datum(cfg, weight)?;
            fill_decomposition(&mut report, &datum)?;
        }
        Command::Dims => {
            let datum = datum(cfg, weight)?;
            fill_decomposition(&mut report, &datum)?;
            report.decomposition = None;
            report.labels = None;
            for (i, s) in report.shapes.iter_mut().enumerate() {
                s.graded_dim = Some(graded(&datum, i));
            }
            report.total_dimension = Some(algebra_dimension(cfg.n, cfg.r)? as u64);
        }
        Command::Semisimple => {
            let weight = weight.expect("checked by caller");
            report.semisimple = Some(is_semisimple_weight(cfg.n, weight));
            report.semisimple_params = params_verdict(cfg)?;
        }
        Command::OracleValidate => {
            report.oracle = Some(oracle_report(cfg)?);
        }
        Command::All => {
            let weight_ref = weight.expect("checked by caller");
            let datum = datum(cfg, weight)?;
            report.seed = Some(cfg.official_seed);
            report.poset = Some(poset_report(datum.poset())?);
            report.shapes = gram_shapes(cfg, &datum)?;
            let decomposition = decomposition_matrix(&datum)?;
            report.labels = Some(datum.poset().iter().map(Multipartition::label).collect());
            report.decomposition = Some(decomposition.entries().to_vec());
            report.total_dimension = Some(algebra_dimension(cfg.n, cfg.r)? as u64);
            report.semisimple = Some(is_semisimple_weight(cfg.n, weight_ref));
            report.semisimple_params = params_verdict(cfg)?;
            if cfg.params.is_some() {
                report.oracle = Some(oracle_report(cfg)?);
            }
        }
    }
    Ok(report)
}

fn datum(cfg: &JobConfig, weight: Option<&Weight>) -> Result<CellDatum> {
    let weight = weight.ok_or_else(|| Error::InvalidWeight("a weight is required".into()))?;
    build_cell_datum(cfg.n, weight, cfg.official_seed)
}

fn graded(datum: &CellDatum, i: usize) -> BTreeMap<i64, u64> {
    graded_dim_cell(datum, i).into_iter().map(|(d, m)| (d, m as u64)).collect()
}

fn gram_shapes(cfg: &JobConfig, datum: &CellDatum) -> Result<Vec<ShapeReport>> {
    let options = GramOptions { memo_cap: cfg.memo_cap(), ..GramOptions::default() };
    let grams = gram_matrices(datum, options)?;
    Ok(datum
        .poset()
        .iter()
        .zip(grams)
        .enumerate()
        .map(|(i, (shape, g))| {
            let mut s = base_shape(shape);
            s.dim_simple = Some(g.rank() as u64);
            s.degrees = Some(datum.degrees(i).to_vec());
            s.graded_dim = Some(graded(datum, i));
            s.gram = Some(g.entries().to_vec());
            s
        })
        .collect())
}

fn fill_decomposition(report: &mut Report, datum: &CellDatum) -> Result<()> {
    let decomposition = decomposition_matrix(datum)?;
    let dims = dim_simple_decomp(datum, &decomposition)?;
    report.shapes = datum
        .poset()
        .iter()
        .zip(dims)
        .map(|(shape, d)| {
            let mut s = base_shape(shape);
            s.dim_simple = Some(d as u64);
            s
        })
        .collect();
    report.labels = Some(datum.poset().iter().map(Multipartition::label).collect());
    report.decomposition = Some(decomposition.entries().to_vec());
    Ok(())
}

fn poset_report(elements: &[Multipartition]) -> Result<PosetReport> {
    let k = elements.len();
    let mut leq = vec![vec![false; k]; k];
    for a in 0..k {
        for b in 0..k {
            leq[a][b] = dominance_leq(&elements[a], &elements[b])?;
        }
    }
    let lt = |a: usize, b: usize| a != b && leq[a][b];
    let mut covers = Vec::new();
    for a in 0..k {
        for b in 0..k {
            if lt(a, b) && !(0..k).any(|c| lt(a, c) && lt(c, b)) {
                covers.push([a, b]);
            }
        }
    }
    Ok(PosetReport { elements: elements.iter().map(Multipartition::label).collect(), covers })
}

fn param_spec(cfg: &JobConfig) -> Result<ParamSpec> {
    match &cfg.params {
        Some(p) => {
            if p.v.len() != cfg.r {
                return Err(Error::InvalidInput(format!(
                    "{} v parameters given for r = {}",
                    p.v.len(),
                    cfg.r
                )));
            }
            ParamSpec::new(p.q.clone(), p.v.clone()).map_err(|e| Error::DegenerateParameters(e.to_string()))
        }
        None => Ok(ParamSpec::generic(cfg.r)),
    }
}

fn params_verdict(cfg: &JobConfig) -> Result<Option<ParamsVerdict>> {
    let Some(p) = &cfg.params else {
        return Ok(None);
    };
    let params = param_spec(cfg)?;
    let semisimple = is_semisimple_params(cfg.n, params.q(), params.v())
        .map_err(|e| Error::DegenerateParameters(e.to_string()))?;
    Ok(Some(ParamsVerdict {
        q: p.q.to_string(),
        v: p.v.iter().map(ToString::to_string).collect(),
        semisimple,
    }))
}

fn oracle_report(cfg: &JobConfig) -> Result<OracleReport> {
    let params = param_spec(cfg)?;
    let (survivors, dimension) = surviving_shapes(cfg.n, cfg.r, &params)?;
    let expected = algebra_dimension(cfg.n, cfg.r)?;
    let mut relations_verified = true;
    for shape in &survivors {
        relations_verified &= verify_relations(&seminormal_rep(shape, &params)?, &params);
    }
    let mut surviving_heights: Vec<Vec<usize>> =
        survivors.iter().filter_map(|s| s.column_heights()).collect();
    surviving_heights.sort();
    let mut expected_heights: Vec<Vec<usize>> =
        enumerate_one_column(cfg.n, cfg.r, 2).iter().map(|s| s.heights().to_vec()).collect();
    expected_heights.sort();
    let agrees = surviving_heights.len() == survivors.len()
        && surviving_heights == expected_heights
        && dimension == expected;
    Ok(OracleReport {
        q: params.q().to_string(),
        v: params.v().iter().map(ToString::to_string).collect(),
        surviving_shapes: survivors.iter().map(ToString::to_string).collect(),
        dimension: dimension as u64,
        expected_dimension: expected as u64,
        relations_verified,
        agrees,
    })
}
