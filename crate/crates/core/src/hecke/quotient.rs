use num::{BigRational, One, Zero};
use rayon::prelude::*;

use super::params::ParamSpec;
use super::seminormal::{seminormal_rep, SeminormalRep};
use super::shapes::{enumerate_multipartitions, GeneralMultipartition};
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;

/// An element of `H(r,1,n)` kept in factored form so that it can be
/// evaluated in any representation without expanding it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HeckeExpr {
    /// `T_{w_1} ⋯ T_{w_k}`; the empty word is the identity.
    Word(Vec<usize>),
    Sum(Vec<(BigRational, HeckeExpr)>),
    Product(Vec<HeckeExpr>),
}

impl HeckeExpr {
    fn scalar(c: BigRational) -> HeckeExpr {
        HeckeExpr::Sum(vec![(c, HeckeExpr::Word(Vec::new()))])
    }

    /// The matrix of this element in `rep`.
    pub fn evaluate(&self, rep: &SeminormalRep) -> RatMatrix {
        match self {
            HeckeExpr::Word(w) => rep.word_matrix(w),
            HeckeExpr::Sum(terms) => {
                terms.iter().fold(RatMatrix::zeros(rep.dim(), rep.dim()), |acc, (c, e)| {
                    acc.add(&e.evaluate(rep).scale(c)).expect("same size")
                })
            }
            HeckeExpr::Product(factors) => factors
                .iter()
                .fold(RatMatrix::identity(rep.dim()), |acc, e| acc.mul(&e.evaluate(rep)).expect("same size")),
        }
    }

    /// Largest generator index used.
    pub fn max_generator(&self) -> Option<usize> {
        match self {
            HeckeExpr::Word(w) => w.iter().copied().max(),
            HeckeExpr::Sum(terms) => terms.iter().filter_map(|(_, e)| e.max_generator()).max(),
            HeckeExpr::Product(fs) => fs.iter().filter_map(HeckeExpr::max_generator).max(),
        }
    }
}

/// One generator of the Temperley-Lieb ideal.
#[derive(Debug, Clone)]
pub struct QuotientGenerator {
    pub label: String,
    pub expr: HeckeExpr,
}

/// The central idempotents `E_0^{(1)}, ..., E_0^{(r)}` of `H_{0,1}` and
/// `E_1, ..., E_{n-2}` of the type `A_2` parabolics.
///
/// `E_i = a (T_iT_{i+1}T_i + T_iT_{i+1} + T_{i+1}T_i + T_i + T_{i+1} + 1)`
/// with `a = 1/((1+q)(1+q+q²))`. `E_0^{(j)}` is the polynomial in the
/// central elements `X_1 + X_2` and `X_1 X_2` of `H_{0,1}` (with `X_1 = T_0`,
/// `X_2 = q^{-1} T_1 T_0 T_1`) that is `1` on the module of `(2)` in
/// component `j` and `0` on every other irreducible module of `H(r,1,2)`.
pub fn quotient_idempotents(params: &ParamSpec, n: usize) -> Result<Vec<QuotientGenerator>> {
    let q = params.q();
    let one = BigRational::one();
    let norm = (&one + q) * (&one + q + q * q);
    if norm.is_zero() {
        return Err(Error::DegenerateParameters("(1+q)(1+q+q²) vanishes".into()));
    }
    let mut out = Vec::new();
    if n >= 2 {
        out.extend(type_b_idempotents(params)?);
    }
    let a = norm.recip();
    for i in 1..n.saturating_sub(1) {
        let j = i + 1;
        let words = [vec![i, j, i], vec![i, j], vec![j, i], vec![i], vec![j], vec![]];
        let expr = HeckeExpr::Sum(words.into_iter().map(|w| (a.clone(), HeckeExpr::Word(w))).collect());
        out.push(QuotientGenerator { label: format!("E_{i}"), expr });
    }
    Ok(out)
}

fn type_b_idempotents(params: &ParamSpec) -> Result<Vec<QuotientGenerator>> {
    let q_inv = params.q().recip();
    let e1 = HeckeExpr::Sum(vec![
        (BigRational::one(), HeckeExpr::Word(vec![0])),
        (q_inv.clone(), HeckeExpr::Word(vec![1, 0, 1])),
    ]);
    let e2 = HeckeExpr::Sum(vec![(q_inv, HeckeExpr::Word(vec![0, 1, 0, 1]))]);

    // Central characters of every irreducible module of H(r,1,2).
    let mut points = Vec::new();
    for shape in enumerate_multipartitions(2, params.r()) {
        let rep = seminormal_rep(&shape, params)?;
        let c1 = scalar_of(&e1.evaluate(&rep))
            .ok_or_else(|| Error::DegenerateParameters(format!("X1+X2 is not scalar on {shape}")))?;
        let c2 = scalar_of(&e2.evaluate(&rep))
            .ok_or_else(|| Error::DegenerateParameters(format!("X1X2 is not scalar on {shape}")))?;
        points.push((shape, c1, c2));
    }

    let mut out = Vec::new();
    for j in 1..=params.r() {
        let target = row_of_two(params.r(), j);
        let (_, t1, t2) = points.iter().find(|(s, _, _)| *s == target).expect("enumerated");
        let mut factors = Vec::new();
        for (shape, p1, p2) in &points {
            if *shape == target {
                continue;
            }
            let (coeff, value, offset) = if t1 != p1 {
                (&e1, t1 - p1, p1)
            } else if t2 != p2 {
                (&e2, t2 - p2, p2)
            } else {
                return Err(Error::DegenerateParameters(format!(
                    "{target} and {shape} share a central character"
                )));
            };
            let inv = value.recip();
            factors.push(HeckeExpr::Sum(vec![
                (inv.clone(), coeff.clone()),
                (-(offset * &inv), HeckeExpr::scalar(BigRational::one())),
            ]));
        }
        out.push(QuotientGenerator { label: format!("E_0^({j})"), expr: HeckeExpr::Product(factors) });
    }
    Ok(out)
}

fn row_of_two(r: usize, j: usize) -> GeneralMultipartition {
    let comps = (1..=r).map(|c| if c == j { vec![2] } else { Vec::new() }).collect();
    GeneralMultipartition::new(comps).expect("valid shape")
}

fn scalar_of(m: &RatMatrix) -> Option<BigRational> {
    let c = m.get(0, 0).clone();
    m.sub(&RatMatrix::identity(m.rows()).scale(&c)).ok()?.is_zero().then_some(c)
}

/// Shapes whose irreducible modules are killed by no generator of the
/// ideal, and the dimension `Σ (dim V_λ)²` of the quotient.
///
/// Only valid in the semisimple regime, where the two-sided ideal is the
/// sum of the matrix blocks on which some generator acts nonzero.
pub fn surviving_shapes(
    n: usize,
    r: usize,
    params: &ParamSpec,
) -> Result<(Vec<GeneralMultipartition>, u128)> {
    if params.r() != r {
        return Err(Error::ShapeMismatch(format!("{} parameters for r = {r}", params.r())));
    }
    if !params.is_semisimple(n) {
        return Err(Error::NotSemisimple("H(r,1,n) is not semisimple at these parameters".into()));
    }
    if !params.satisfies_quotient_restrictions() {
        return Err(Error::DegenerateParameters(
            "parameters violate v_i/v_j ∉ {1,q,q²} or (1+q)(1+q+q²) ≠ 0".into(),
        ));
    }
    let generators = quotient_idempotents(params, n)?;
    let verdicts: Vec<Option<(GeneralMultipartition, u128)>> = enumerate_multipartitions(n, r)
        .into_par_iter()
        .map(|shape| {
            let rep = seminormal_rep(&shape, params)?;
            let killed = generators.iter().any(|g| !g.expr.evaluate(&rep).is_zero());
            let dim = rep.dim() as u128;
            Ok((!killed).then_some((shape, dim)))
        })
        .collect::<Result<_>>()?;
    let survivors: Vec<(GeneralMultipartition, u128)> = verdicts.into_iter().flatten().collect();
    let dim = survivors.iter().map(|(_, d)| d * d).sum();
    Ok((survivors.into_iter().map(|(s, _)| s).collect(), dim))
}
