use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::sampler::{cells, draw_cell, random_cell, Cell};
use super::{BoundVar, Formula, FormulaError, Matrix, Quantifier, Relation, SamplerConfig};
use crate::lc_field::LcNumber;
use crate::transfer_ext::{eval_hyper, Binding};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    NotFalsified,
    Falsified,
    WitnessFound,
    WitnessNotFound,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::NotFalsified => "not-falsified",
            Verdict::Falsified => "falsified",
            Verdict::WitnessFound => "witness-found",
            Verdict::WitnessNotFound => "witness-not-found",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub verdict: Verdict,
    /// Number of matrix evaluations.
    pub samples_used: u64,
    /// Counterexample for `Falsified`, witness of the outer existential
    /// block for `WitnessFound`, otherwise empty.
    pub binding: Vec<(String, LcNumber)>,
    pub seed: u64,
    pub eq_tol: f64,
}

/// Evaluates the matrix of `f` under a full binding of its prefix.
pub fn evaluate_matrix(f: &Formula, binding: &[(String, LcNumber)], cfg: &SamplerConfig) -> Result<bool, FormulaError> {
    let mut env = Binding::new().with("eps", LcNumber::eps(cfg.field));
    for (k, v) in binding {
        env.insert(k, v.clone());
    }
    let mut ctx = Ctx::new(f, cfg);
    ctx.matrix(&f.matrix, &env)
}

enum Outcome {
    Holds(Vec<(String, LcNumber)>),
    Fails(Vec<(String, LcNumber)>),
    Unknown,
}

fn mix(a: u64, b: u64) -> u64 {
    // splitmix64 finalizer over a combined state.
    let mut z = a ^ b.wrapping_add(0x9E37_79B9_7F4A_7C15).wrapping_add(a << 6).wrapping_add(a >> 2);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

struct Ctx<'a> {
    f: &'a Formula,
    cfg: &'a SamplerConfig,
    /// Quantifier blocks as index ranges into the prefix.
    blocks: Vec<(usize, usize)>,
    evaluations: u64,
}

fn render(env: &Binding<LcNumber>) -> String {
    let parts: Vec<String> = env
        .iter()
        .filter(|(k, _)| k.as_str() != "eps")
        .map(|(k, v)| format!("{k} = {v}"))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn snapshot(env: &Binding<LcNumber>, prefix: &[BoundVar]) -> Vec<(String, LcNumber)> {
    prefix
        .iter()
        .filter_map(|q| env.get(&q.name).map(|v| (q.name.clone(), v.clone())))
        .collect()
}

impl<'a> Ctx<'a> {
    fn new(f: &'a Formula, cfg: &'a SamplerConfig) -> Self {
        let mut blocks = Vec::new();
        let mut start = 0;
        for i in 1..=f.prefix.len() {
            if i == f.prefix.len() || f.prefix[i].quantifier != f.prefix[start].quantifier {
                blocks.push((start, i));
                start = i;
            }
        }
        Ctx {
            f,
            cfg,
            blocks,
            evaluations: 0,
        }
    }

    fn matrix(&mut self, m: &Matrix, env: &Binding<LcNumber>) -> Result<bool, FormulaError> {
        Ok(match m {
            Matrix::Atom(a, rel, b) => {
                let wrap = |e| FormulaError::Evaluation {
                    binding: render(env),
                    source: e,
                };
                let lhs = eval_hyper(a, env, self.cfg.field).map_err(wrap)?;
                let rhs = eval_hyper(b, env, self.cfg.field).map_err(wrap)?;
                let ord = lhs.compare(&rhs);
                match rel {
                    Relation::Lt => ord == Ordering::Less,
                    Relation::Le => ord != Ordering::Greater,
                    Relation::Eq => ord == Ordering::Equal,
                }
            }
            Matrix::Not(x) => !self.matrix(x, env)?,
            Matrix::And(x, y) => self.matrix(x, env)? && self.matrix(y, env)?,
            Matrix::Or(x, y) => self.matrix(x, env)? || self.matrix(y, env)?,
            Matrix::Implies(x, y) => !self.matrix(x, env)? || self.matrix(y, env)?,
        })
    }

    /// Tuple `i` of a universal block: the first draws walk the cross
    /// product of stratification cells so every cell appears.
    fn forall_tuple(&self, vars: &[BoundVar], i: usize, rng: &mut ChaCha8Rng) -> Vec<LcNumber> {
        let w = &self.cfg.weights;
        let cell_sets: Vec<Vec<Cell>> = vars.iter().map(|v| cells(v.stratum, w)).collect();
        let product = cell_sets
            .iter()
            .try_fold(1usize, |acc, c| acc.checked_mul(c.len()))
            .filter(|p| *p <= self.cfg.samples);
        let widest = cell_sets.iter().map(Vec::len).max().unwrap_or(1);
        let chosen: Vec<Cell> = match product {
            Some(p) if i < p => {
                let mut rest = i;
                cell_sets
                    .iter()
                    .map(|c| {
                        let pick = c[rest % c.len()];
                        rest /= c.len();
                        pick
                    })
                    .collect()
            }
            None if i < widest => cell_sets.iter().map(|c| c[i % c.len()]).collect(),
            _ => cell_sets.iter().map(|c| random_cell(c, w, rng)).collect(),
        };
        chosen.into_iter().map(|c| draw_cell(c, self.cfg, rng)).collect()
    }

    /// Distinguished witness tuples: fixed constants plus sibling values,
    /// their halves and their squares, filtered by stratum.
    fn distinguished(&self, vars: &[BoundVar], env: &Binding<LcNumber>) -> Vec<Vec<LcNumber>> {
        let fc = self.cfg.field;
        let mut base = alloc::vec![
            LcNumber::zero(fc),
            LcNumber::one(fc),
            LcNumber::eps(fc),
            LcNumber::eps(fc).mul_ref(&LcNumber::eps(fc)),
        ];
        if let Ok(inv) = LcNumber::eps(fc).inv() {
            base.push(inv);
        }
        for q in &self.f.prefix {
            if let Some(v) = env.get(&q.name) {
                base.push(v.clone());
                base.push(v.scale(0.5));
                base.push(v.mul_ref(v));
            }
        }
        let per_var: Vec<Vec<LcNumber>> = vars
            .iter()
            .map(|q| {
                let mut c: Vec<LcNumber> = Vec::new();
                for v in base.iter().filter(|v| q.stratum.contains(v)) {
                    if !c.contains(v) {
                        c.push(v.clone());
                    }
                }
                c
            })
            .collect();

        let mut out: Vec<Vec<LcNumber>> = alloc::vec![Vec::new()];
        for c in &per_var {
            let mut next = Vec::new();
            for prefix in &out {
                for v in c {
                    let mut t = prefix.clone();
                    t.push(v.clone());
                    next.push(t);
                }
            }
            out = next;
            if out.len() > 4 * self.cfg.witness_pool.max(1) {
                out.truncate(4 * self.cfg.witness_pool.max(1));
            }
        }
        out
    }

    fn pool_tuple(&self, vars: &[BoundVar], path: u64, j: usize) -> Vec<LcNumber> {
        let mut rng = ChaCha8Rng::seed_from_u64(mix(path, j as u64));
        let w = &self.cfg.weights;
        vars.iter()
            .map(|q| {
                let cell = random_cell(&cells(q.stratum, w), w, &mut rng);
                draw_cell(cell, self.cfg, &mut rng)
            })
            .collect()
    }

    fn block(&mut self, level: usize, env: &mut Binding<LcNumber>, path: u64) -> Result<Outcome, FormulaError> {
        if level == self.blocks.len() {
            self.evaluations += 1;
            return Ok(if self.matrix(&self.f.matrix, env)? {
                Outcome::Holds(Vec::new())
            } else {
                Outcome::Fails(snapshot(env, &self.f.prefix))
            });
        }
        let (lo, hi) = self.blocks[level];
        let vars: Vec<BoundVar> = self.f.prefix[lo..hi].to_vec();
        match vars[0].quantifier {
            Quantifier::ForAll => {
                let mut unknown = false;
                for i in 0..self.cfg.samples {
                    let child = mix(path, i as u64);
                    let mut rng = ChaCha8Rng::seed_from_u64(child);
                    let tuple = self.forall_tuple(&vars, i, &mut rng);
                    for (q, v) in vars.iter().zip(tuple) {
                        env.insert(&q.name, v);
                    }
                    let r = self.block(level + 1, env, mix(child, level as u64 + 1));
                    for q in &vars {
                        env.remove(&q.name);
                    }
                    match r? {
                        Outcome::Fails(ce) => return Ok(Outcome::Fails(ce)),
                        Outcome::Unknown => unknown = true,
                        Outcome::Holds(_) => {}
                    }
                }
                Ok(if unknown { Outcome::Unknown } else { Outcome::Holds(Vec::new()) })
            }
            Quantifier::Exists => {
                let pool_path = mix(path, u64::MAX - level as u64);
                let fixed = self.distinguished(&vars, env);
                let n_fixed = fixed.len();
                let mut fixed = fixed.into_iter();
                // Pool tuples are drawn only once the fixed ones are exhausted.
                for j in 0..n_fixed + self.cfg.witness_pool {
                    let tuple = match fixed.next() {
                        Some(t) => t,
                        None => self.pool_tuple(&vars, pool_path, j - n_fixed),
                    };
                    let witness: Vec<(String, LcNumber)> =
                        vars.iter().map(|q| q.name.clone()).zip(tuple.iter().cloned()).collect();
                    for (q, v) in vars.iter().zip(tuple) {
                        env.insert(&q.name, v);
                    }
                    let r = self.block(level + 1, env, mix(path, j as u64 ^ 0xA5A5));
                    for q in &vars {
                        env.remove(&q.name);
                    }
                    if let Outcome::Holds(_) = r? {
                        return Ok(Outcome::Holds(witness));
                    }
                }
                Ok(Outcome::Unknown)
            }
        }
    }
}

/// Randomized falsification of `f`.
///
/// Universal blocks are instantiated with `cfg.samples` stratified tuples,
/// existential blocks with the distinguished candidates followed by a pool
/// of `cfg.witness_pool` random tuples. Every sample is seeded from
/// `cfg.seed` and its position, so the report depends only on the inputs
/// and the first falsifying sample in index order is the one reported.
pub fn check(f: &Formula, cfg: &SamplerConfig) -> Result<CheckReport, FormulaError> {
    cfg.validate().map_err(|e| FormulaError::Evaluation {
        binding: String::from("{}"),
        source: e.into(),
    })?;
    let mut ctx = Ctx::new(f, cfg);
    let mut env = Binding::new().with("eps", LcNumber::eps(cfg.field));
    let outcome = ctx.block(0, &mut env, mix(cfg.seed, 0x5EED))?;
    let leading_exists = f.prefix.first().map(|q| q.quantifier) == Some(Quantifier::Exists);
    let (verdict, binding) = match outcome {
        Outcome::Fails(ce) => {
            // A falsified verdict is only issued for a replayable binding.
            if evaluate_matrix(f, &ce, cfg)? {
                (Verdict::WitnessNotFound, Vec::new())
            } else {
                (Verdict::Falsified, ce)
            }
        }
        Outcome::Holds(w) if leading_exists => (Verdict::WitnessFound, w),
        Outcome::Holds(_) => (Verdict::NotFalsified, Vec::new()),
        Outcome::Unknown => (Verdict::WitnessNotFound, Vec::new()),
    };
    Ok(CheckReport {
        verdict,
        samples_used: ctx.evaluations,
        binding,
        seed: cfg.seed,
        eq_tol: cfg.field.eq_tol,
    })
}
