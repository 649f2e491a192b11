//! Hypercube view of influence: crossing paths between `supp(f)` and its
//! complement.
//!
//! For a shift `a` of weight `w`, `x_a` counts the points `u` with
//! `f(u) = 1` and `f(u xor a) = 0`. Every such pair is joined by `w!`
//! shortest paths, so the number of crossing paths is `n_a = w! x_a`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::function::BooleanFunction;
use crate::rational::{binomial, dyadic, factorial, Rational};
use crate::spectra::{autocorrelation, RealSpectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CensusMethod {
    /// Count the crossing pairs directly.
    Direct,
    /// `n_a = wt(a)! 2^(n-2) (1 - C_f(a))`.
    Autocorrelation,
}

/// Crossing-pair counts `x_a` for every shift `a`; path counts are derived.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCensus {
    n: usize,
    pairs: Vec<u64>,
}

impl PathCensus {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `x_a`.
    pub fn pairs(&self, alpha: usize) -> u64 {
        self.pairs[alpha]
    }

    pub fn all_pairs(&self) -> &[u64] {
        &self.pairs
    }

    /// `n_a = wt(a)! x_a`.
    pub fn paths(&self, alpha: usize) -> u128 {
        factorial(alpha.count_ones()) * self.pairs[alpha] as u128
    }

    /// `C_f(a) = 1 - n_a / (wt(a)! 2^(n-2))`, for checking against a
    /// computed auto-correlation spectrum.
    pub fn autocorrelation_value(&self, alpha: usize) -> Rational {
        // x_a / 2^(n-2) = 4 x_a / 2^n
        Rational::from_integer(1) - dyadic(4 * self.pairs[alpha] as i128, self.n as u32)
    }
}

pub fn path_census(f: &BooleanFunction, method: CensusMethod) -> PathCensus {
    let n = f.n();
    let pairs = match method {
        CensusMethod::Direct => (0..f.len())
            .map(|a| {
                (0..f.len())
                    .filter(|&u| f.get(u) && !f.get(u ^ a))
                    .count() as u64
            })
            .collect(),
        CensusMethod::Autocorrelation => pairs_from_autocorrelation(&autocorrelation(f)),
    };
    PathCensus { n, pairs }
}

fn pairs_from_autocorrelation(ac: &RealSpectrum) -> Vec<u64> {
    // x_a = 2^(n-2) (1 - C(a)) = (2^n - c_a) / 4 with c_a = 2^n C(a)
    let full = 1i64 << ac.log2_den();
    ac.numerators()
        .iter()
        .map(|&c| {
            let disagreements = full - c;
            debug_assert_eq!(disagreements % 4, 0);
            (disagreements / 4) as u64
        })
        .collect()
}

/// `e(A, A-bar)`: hypercube edges between `supp(f)` and its complement.
pub fn edge_boundary(f: &BooleanFunction) -> u64 {
    let n = f.n();
    (1..=n)
        .map(|j| {
            let bit = 1usize << (n - j);
            (0..f.len()).filter(|&u| f.get(u) && !f.get(u ^ bit)).count() as u64
        })
        .sum()
}

/// `t-inf(f)` from path counts:
/// `1 - (2^(n+t-2) C(n,t))^-1 sum_a C(n-wt(a), t-wt(a)) (2^(n-2) - n_a / wt(a)!)`.
pub fn t_influence_by_paths(f: &BooleanFunction, t: usize) -> Result<Rational> {
    let n = f.n();
    if t == 0 || t > n {
        return Err(Error::OutOfRange {
            name: "t",
            value: t,
            min: 1,
            max: n,
        });
    }
    let census = path_census(f, CensusMethod::Direct);
    Ok(census.t_influence(t))
}

impl PathCensus {
    pub fn t_influence(&self, t: usize) -> Rational {
        let n = self.n;
        // Scale everything by 4 so 2^(n-2) stays integral for n = 1.
        let sum: i128 = (0..self.pairs.len())
            .map(|a| {
                let w = a.count_ones() as i64;
                let supersets = binomial(n as i64 - w, t as i64 - w) as i128;
                let per_path = self.paths(a) / factorial(w as u32);
                supersets * ((1i128 << n) - 4 * per_path as i128)
            })
            .sum();
        let den = Rational::from_integer(binomial(n as i64, t as i64) as i128);
        Rational::from_integer(1) - dyadic(sum, (n + t) as u32) / den
    }
}

/// Checks `W_f(b)^2 = [b = 0] - 2^-(2n-2) sum_a (-1)^<a,b> n_a / wt(a)!`
/// for every `b`.
pub fn walsh_from_paths_check(f: &BooleanFunction) -> bool {
    let census = path_census(f, CensusMethod::Direct);
    let walsh = crate::spectra::walsh_spectrum(f);
    let n = f.n() as u32;
    (0..f.len()).all(|b| {
        let signed: i128 = (0..f.len())
            .map(|a| {
                let x = (census.paths(a) / factorial(a.count_ones())) as i128;
                if (a & b).count_ones() % 2 == 0 {
                    x
                } else {
                    -x
                }
            })
            .sum();
        let delta = if b == 0 {
            Rational::from_integer(1)
        } else {
            Rational::zero()
        };
        let rhs = delta - dyadic(signed * 4, 2 * n);
        let w = walsh.numerator(b) as i128;
        dyadic(w * w, 2 * n) == rhs
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::influence::{t_influence, AggregateAlgorithm};

    fn anf(expr: &str, n: usize) -> BooleanFunction {
        BooleanFunction::from_anf(expr, n).unwrap()
    }

    #[test]
    fn census_examples() {
        let x1 = anf("x1", 2);
        let census = path_census(&x1, CensusMethod::Direct);
        assert_eq!(census.paths(0b10), 2);
        assert_eq!(census.paths(0), 0);

        let bent = anf("x1*x2 + x3*x4", 4);
        for method in [CensusMethod::Direct, CensusMethod::Autocorrelation] {
            let census = path_census(&bent, method);
            assert_eq!(census.paths(0), 0);
            for a in 1..16usize {
                assert_eq!(census.paths(a), factorial(a.count_ones()) * 4);
            }
        }
    }

    #[test]
    fn census_methods_agree_n3() {
        for table in 0u64..256 {
            let f = BooleanFunction::from_words(3, vec![table]).unwrap();
            let direct = path_census(&f, CensusMethod::Direct);
            assert_eq!(direct, path_census(&f, CensusMethod::Autocorrelation));
            let ac = autocorrelation(&f);
            for a in 0..8 {
                assert_eq!(direct.autocorrelation_value(a), ac.value(a));
                assert_eq!(direct.paths(a) % factorial(a.count_ones()), 0);
            }
        }
    }

    #[test]
    fn edges() {
        assert_eq!(edge_boundary(&anf("x1", 2)), 2);
        assert_eq!(edge_boundary(&BooleanFunction::constant(3, true).unwrap()), 0);
        for n in 1..=6 {
            let par = BooleanFunction::parity(n).unwrap();
            assert_eq!(edge_boundary(&par), (n as u64) << (n - 1));
        }
    }

    #[test]
    fn path_expansion_examples() {
        assert_eq!(t_influence_by_paths(&anf("x1", 2), 1).unwrap(), Rational::new(1, 2));
        let zero = BooleanFunction::constant(3, false).unwrap();
        for t in 1..=3 {
            assert_eq!(t_influence_by_paths(&zero, t).unwrap(), Rational::zero());
        }
        assert!(t_influence_by_paths(&zero, 0).is_err());
        assert!(t_influence_by_paths(&zero, 4).is_err());
    }

    #[test]
    fn path_expansion_matches_t_influence_n1_n2() {
        for n in 1..=2 {
            for table in 0u64..(1 << (1 << n)) {
                let f = BooleanFunction::from_words(n, vec![table]).unwrap();
                for t in 1..=n {
                    assert_eq!(
                        t_influence_by_paths(&f, t).unwrap(),
                        t_influence(&f, t, AggregateAlgorithm::Spectral).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn walsh_from_paths() {
        assert!(walsh_from_paths_check(&BooleanFunction::constant(3, true).unwrap()));
        assert!(walsh_from_paths_check(&anf("x1*x2 + x3*x4", 4)));
        for table in 0u64..256 {
            let f = BooleanFunction::from_words(3, vec![table]).unwrap();
            assert!(walsh_from_paths_check(&f));
        }
    }
}
