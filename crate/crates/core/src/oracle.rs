//! Brute-force reference implementations.
//!
//! These evaluate the probabilistic definitions literally, by enumerating
//! every event, and only read truth-table bits. They share no transform or
//! restriction code with the fast paths they are used to certify.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::function::{BooleanFunction, VariableSubset};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest `n` for sweeps over every function.
    pub max_exhaustive_n: usize,
    /// Largest `n` for exhaustive per-function sweeps.
    pub max_per_function_n: usize,
    pub rng_seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_exhaustive_n: 3,
            max_per_function_n: 4,
            rng_seed: 0x05EE_D1F1u64,
        }
    }
}

impl OracleConfig {
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.rng_seed)
    }

    /// `count` uniformly random `n`-variable functions, fully determined by
    /// the seed.
    pub fn random_functions(&self, n: usize, count: usize) -> Vec<BooleanFunction> {
        let mut rng = self.rng();
        (0..count)
            .map(|_| random_function(n, &mut rng))
            .collect()
    }
}

pub fn random_function(n: usize, rng: &mut impl Rng) -> BooleanFunction {
    let len = 1usize << n;
    let mut words: Vec<u64> = (0..len.div_ceil(64)).map(|_| rng.gen()).collect();
    if len < 64 {
        words[0] &= (1u64 << len) - 1;
    }
    BooleanFunction::from_words(n, words).expect("word count matches n")
}

/// Every `n`-variable function, `n <= 5`, in truth-table order.
pub fn all_functions(n: usize) -> impl Iterator<Item = BooleanFunction> {
    assert!((1..=5).contains(&n), "exhaustive sweeps are limited to n <= 5");
    let count = 1u64 << (1u64 << n);
    (0..count).map(move |table| {
        BooleanFunction::from_words(n, vec![table]).expect("single word holds the table")
    })
}

/// Index-bit of each variable of `T`, in increasing variable order.
fn variable_bits(n: usize, subset: &VariableSubset) -> Result<Vec<usize>> {
    if subset.n() != n {
        return Err(Error::SubsetArity {
            expected: n,
            actual: subset.n(),
        });
    }
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok((1..=n)
        .filter(|&j| subset.contains(j))
        .map(|j| 1usize << (n - j))
        .collect())
}

/// Spreads the bits of `pattern` (first listed variable most significant)
/// onto the given index bits.
fn spread(pattern: usize, bits: &[usize]) -> usize {
    bits.iter()
        .enumerate()
        .filter(|(k, _)| pattern >> (bits.len() - 1 - k) & 1 == 1)
        .fold(0, |acc, (_, b)| acc | b)
}

fn ratio(count: u64, log2_den: usize) -> Rational {
    Rational::new(count as i128, 1i128 << log2_den)
}

/// `Pr_{a <= chi_T, u}[f(u) != f(u xor a)]`, by enumerating every pair;
/// this is half of `inf_f(T)`.
pub fn influence_by_definition(f: &BooleanFunction, subset: &VariableSubset) -> Result<Rational> {
    let n = f.n();
    let bits = variable_bits(n, subset)?;
    let t = bits.len();
    let mut count = 0u64;
    for pattern in 0..(1usize << t) {
        let alpha = spread(pattern, &bits);
        for u in 0..(1usize << n) {
            if f.get(u) != f.get(u ^ alpha) {
                count += 1;
            }
        }
    }
    Ok(ratio(count, n + t))
}

/// `J_f(T) = E_y[(D_T f(y))^2]` with
/// `D_T f(y) = 2^-t sum_b (-1)^(wt(b) + f_b(y))`, `f_b` fixing `X_T` to `b`.
pub fn tal_influence_by_definition(f: &BooleanFunction, subset: &VariableSubset) -> Result<Rational> {
    let n = f.n();
    let bits = variable_bits(n, subset)?;
    let rest: Vec<usize> = (1..=n)
        .filter(|&j| !subset.contains(j))
        .map(|j| 1usize << (n - j))
        .collect();
    let t = bits.len();
    let mut total: i128 = 0;
    for y in 0..(1usize << rest.len()) {
        let y_point = spread(y, &rest);
        let mut d: i128 = 0;
        for beta in 0..(1usize << t) {
            let x = y_point | spread(beta, &bits);
            let exponent = beta.count_ones() as usize + f.get(x) as usize;
            d += if exponent % 2 == 0 { 1 } else { -1 };
        }
        total += d * d;
    }
    // total / (2^(2t) 2^(n-t))
    Ok(Rational::new(total, 1i128 << (n + t)))
}

/// `Pr_{x,y}[f(x) != f(Z(T,x,y))]` where `Z` takes `y` on `T` and `x`
/// elsewhere; only the bits of `y` on `T` matter, so they are enumerated.
pub fn fb_influence_by_sampling_free_enumeration(
    f: &BooleanFunction,
    subset: &VariableSubset,
) -> Result<Rational> {
    let n = f.n();
    let bits = variable_bits(n, subset)?;
    let t = bits.len();
    let on_t = bits.iter().fold(0, |acc, b| acc | b);
    let mut count = 0u64;
    for x in 0..(1usize << n) {
        for pattern in 0..(1usize << t) {
            let z = (x & !on_t) | spread(pattern, &bits);
            if f.get(x) != f.get(z) {
                count += 1;
            }
        }
    }
    Ok(ratio(count, n + t))
}

/// Ben-Or–Linial influence straight from the definition: the fraction of
/// assignments to the other variables leaving `f` non-constant on `T`.
pub fn bl_influence_by_definition(f: &BooleanFunction, subset: &VariableSubset) -> Result<Rational> {
    let n = f.n();
    let bits = variable_bits(n, subset)?;
    let rest: Vec<usize> = (1..=n)
        .filter(|&j| !subset.contains(j))
        .map(|j| 1usize << (n - j))
        .collect();
    let mut count = 0u64;
    for a in 0..(1usize << rest.len()) {
        let base = spread(a, &rest);
        let first = f.get(base);
        if (0..(1usize << bits.len())).any(|p| f.get(base | spread(p, &bits)) != first) {
            count += 1;
        }
    }
    Ok(ratio(count, rest.len()))
}

/// Degeneracy by pairwise comparison of all restrictions fixing `X_T`.
pub fn degenerate_by_definition(f: &BooleanFunction, subset: &VariableSubset) -> Result<bool> {
    let n = f.n();
    let bits = variable_bits(n, subset)?;
    let rest: Vec<usize> = (1..=n)
        .filter(|&j| !subset.contains(j))
        .map(|j| 1usize << (n - j))
        .collect();
    let table = |beta: usize| -> Vec<bool> {
        (0..(1usize << rest.len()))
            .map(|y| f.get(spread(beta, &bits) | spread(y, &rest)))
            .collect()
    };
    let reference = table(0);
    Ok((1..(1usize << bits.len())).all(|beta| table(beta) == reference))
}
