//! Influence of variable sets.
//!
//! Every measure is available through at least two independent routes
//! (auto-correlation sums, Walsh mass, or a restriction scan over the
//! fibers of the complementary variables) and the routes agree exactly.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::function::{submasks, var_bit, BooleanFunction, VariableSubset};
use crate::rational::{binomial, dyadic, Rational};
use crate::spectra::{RealSpectrum, SpectralProfile, WeightDistribution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Measure {
    /// Auto-correlation influence `inf_f(T)`.
    Ac,
    /// Pseudo-influence `PI_f(T)`.
    Pseudo,
    /// Ben-Or and Linial.
    Bl,
    /// Gangopadhyay and Stanica: `(1 - C_f(chi_T)) / 2`.
    Gs,
    /// Fischer et al. / Blais.
    Fb,
    /// Flip probability under a random shift below `chi_T`.
    Mu,
}

impl Measure {
    pub const ALL: [Measure; 6] = [
        Measure::Ac,
        Measure::Pseudo,
        Measure::Bl,
        Measure::Gs,
        Measure::Fb,
        Measure::Mu,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Ac => "ac",
            Measure::Pseudo => "pi",
            Measure::Bl => "bl",
            Measure::Gs => "gs",
            Measure::Fb => "fb",
            Measure::Mu => "mu",
        }
    }

    pub fn from_name(name: &str) -> Option<Measure> {
        Measure::ALL.into_iter().find(|m| m.name() == name)
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfluenceValue {
    pub value: Rational,
    pub measure: Measure,
    pub subset: VariableSubset,
}

impl InfluenceValue {
    fn new(value: Rational, measure: Measure, subset: VariableSubset) -> Self {
        debug_assert!(value >= Rational::zero() && value <= Rational::from_integer(1));
        InfluenceValue {
            value,
            measure,
            subset,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InfluenceAlgorithm {
    /// `1 - 2^-t sum_{a <= chi_T} C_f(a)`.
    Autocorrelation,
    /// `sum_{supp(u) meets T} W_f(u)^2`.
    Walsh,
    /// `1 - 2^-(n-t) sum_a W_{f_a}(0)^2` over the fibers of `T-bar`; `O(2^n)`.
    Restriction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PseudoAlgorithm {
    Autocorrelation,
    Walsh,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AggregateAlgorithm {
    /// Average over all size-`t` subsets.
    Enumerate,
    /// Closed form in the weight distribution.
    Spectral,
}

fn check_level(n: usize, t: usize) -> Result<()> {
    if t == 0 || t > n {
        return Err(Error::OutOfRange {
            name: "t",
            value: t,
            min: 1,
            max: n,
        });
    }
    Ok(())
}

pub(crate) fn influence_from_autocorrelation(ac: &RealSpectrum, subset: &VariableSubset) -> Rational {
    let t = subset.len() as u32;
    let sum: i128 = submasks(subset.point())
        .map(|a| ac.numerator(a) as i128)
        .sum();
    Rational::from_integer(1) - dyadic(sum, t + ac.log2_den())
}

pub(crate) fn influence_from_walsh(walsh: &RealSpectrum, subset: &VariableSubset) -> Rational {
    let chi = subset.point();
    let mass: i128 = walsh
        .numerators()
        .iter()
        .enumerate()
        .filter(|(u, _)| u & chi != 0)
        .map(|(_, &w)| (w as i128) * (w as i128))
        .sum();
    dyadic(mass, 2 * walsh.log2_den())
}

fn influence_by_restriction(f: &BooleanFunction, subset: &VariableSubset) -> Result<Rational> {
    let t = subset.len() as u32;
    let full = 1i128 << t;
    let sum: i128 = f
        .fiber_weights(subset)?
        .into_iter()
        .map(|w| {
            let centred = full - 2 * w as i128;
            centred * centred
        })
        .sum();
    Ok(Rational::from_integer(1) - dyadic(sum, f.n() as u32 + t))
}

/// `inf_f(T)`.
pub fn influence(
    f: &BooleanFunction,
    subset: &VariableSubset,
    algorithm: InfluenceAlgorithm,
) -> Result<InfluenceValue> {
    subset.check_nonempty(f.n())?;
    let value = match algorithm {
        InfluenceAlgorithm::Autocorrelation => {
            influence_from_autocorrelation(&crate::spectra::autocorrelation(f), subset)
        }
        InfluenceAlgorithm::Walsh => {
            influence_from_walsh(&crate::spectra::walsh_spectrum(f), subset)
        }
        InfluenceAlgorithm::Restriction => influence_by_restriction(f, subset)?,
    };
    Ok(InfluenceValue::new(value, Measure::Ac, *subset))
}

/// `Pr_x[f(x) != f(x xor e_i)]`.
pub fn influence_variable(f: &BooleanFunction, i: usize) -> Result<InfluenceValue> {
    let subset = VariableSubset::from_indices(f.n(), &[i])?;
    let bit = var_bit(f.n(), i);
    let flips = (0..f.len()).filter(|&x| f.get(x) != f.get(x ^ bit)).count();
    Ok(InfluenceValue::new(
        dyadic(flips as i128, f.n() as u32),
        Measure::Ac,
        subset,
    ))
}

/// `N_{n,t,k} = C(n,t) - C(n-k,t)`: the number of size-`t` subsets of `[n]`
/// meeting a fixed size-`k` set.
pub fn subset_count(n: usize, t: usize, k: usize) -> Result<u128> {
    check_level(n, t)?;
    if k > n {
        return Err(Error::OutOfRange {
            name: "k",
            value: k,
            min: 0,
            max: n,
        });
    }
    Ok(binomial(n as i64, t as i64) - binomial((n - k) as i64, t as i64))
}

fn average(values: impl Iterator<Item = Rational>, count: usize) -> Rational {
    values.fold(Rational::zero(), |acc, v| acc + v) / Rational::from_integer(count as i128)
}

/// `t-inf(f) = C(n,t)^-1 sum_k N_{n,t,k} p_f(k)`.
pub(crate) fn t_influence_from_distribution(dist: &WeightDistribution, t: usize) -> Rational {
    let n = dist.n();
    let weighted: i128 = (0..=n)
        .map(|k| {
            let count = binomial(n as i64, t as i64) - binomial((n - k) as i64, t as i64);
            count as i128 * dist.numerators()[k]
        })
        .sum();
    dyadic(weighted, dist.log2_den()) / Rational::from_integer(binomial(n as i64, t as i64) as i128)
}

/// Average of `inf_f(T)` over all `#T = t`.
pub fn t_influence(f: &BooleanFunction, t: usize, algorithm: AggregateAlgorithm) -> Result<Rational> {
    check_level(f.n(), t)?;
    Ok(match algorithm {
        AggregateAlgorithm::Enumerate => {
            let subsets = VariableSubset::all_of_size(f.n(), t);
            let count = subsets.len();
            let values = subsets
                .iter()
                .map(|s| influence_by_restriction(f, s))
                .collect::<Result<Vec<_>>>()?;
            average(values.into_iter(), count)
        }
        AggregateAlgorithm::Spectral => {
            t_influence_from_distribution(&crate::spectra::weight_distribution(f), t)
        }
    })
}

pub(crate) fn pseudo_from_autocorrelation(ac: &RealSpectrum, subset: &VariableSubset) -> Rational {
    let t = subset.len() as u32;
    let sum: i128 = submasks(subset.point())
        .map(|a| {
            let c = ac.numerator(a) as i128;
            if a.count_ones() % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .sum();
    dyadic(sum, t + ac.log2_den())
}

pub(crate) fn pseudo_from_walsh(walsh: &RealSpectrum, subset: &VariableSubset) -> Rational {
    let chi = subset.point();
    let mass: i128 = walsh
        .numerators()
        .iter()
        .enumerate()
        .filter(|(u, _)| u & chi == chi)
        .map(|(_, &w)| (w as i128) * (w as i128))
        .sum();
    dyadic(mass, 2 * walsh.log2_den())
}

/// `PI_f(T)`.
pub fn pseudo_influence(
    f: &BooleanFunction,
    subset: &VariableSubset,
    algorithm: PseudoAlgorithm,
) -> Result<InfluenceValue> {
    subset.check_nonempty(f.n())?;
    let value = match algorithm {
        PseudoAlgorithm::Autocorrelation => {
            pseudo_from_autocorrelation(&crate::spectra::autocorrelation(f), subset)
        }
        PseudoAlgorithm::Walsh => pseudo_from_walsh(&crate::spectra::walsh_spectrum(f), subset),
    };
    Ok(InfluenceValue::new(value, Measure::Pseudo, *subset))
}

/// `t-PI(f) = C(n,t)^-1 sum_{k>=t} C(k,t) p_f(k)`.
pub(crate) fn t_pseudo_from_distribution(dist: &WeightDistribution, t: usize) -> Rational {
    let n = dist.n();
    let weighted: i128 = (t..=n)
        .map(|k| binomial(k as i64, t as i64) as i128 * dist.numerators()[k])
        .sum();
    dyadic(weighted, dist.log2_den()) / Rational::from_integer(binomial(n as i64, t as i64) as i128)
}

/// Average of `PI_f(T)` over all `#T = t`.
pub fn t_pseudo_influence(
    f: &BooleanFunction,
    t: usize,
    algorithm: AggregateAlgorithm,
) -> Result<Rational> {
    check_level(f.n(), t)?;
    Ok(match algorithm {
        AggregateAlgorithm::Enumerate => {
            let walsh = crate::spectra::walsh_spectrum(f);
            let subsets = VariableSubset::all_of_size(f.n(), t);
            average(
                subsets.iter().map(|s| pseudo_from_walsh(&walsh, s)),
                subsets.len(),
            )
        }
        AggregateAlgorithm::Spectral => {
            t_pseudo_from_distribution(&crate::spectra::weight_distribution(f), t)
        }
    })
}

/// Fraction of assignments to `T-bar` whose restriction is non-constant.
pub fn bl_influence(f: &BooleanFunction, subset: &VariableSubset) -> Result<InfluenceValue> {
    subset.check_nonempty(f.n())?;
    let t = subset.len();
    let full = 1u64 << t;
    let non_constant = f
        .fiber_weights(subset)?
        .into_iter()
        .filter(|&w| w != 0 && w != full)
        .count();
    Ok(InfluenceValue::new(
        dyadic(non_constant as i128, (f.n() - t) as u32),
        Measure::Bl,
        *subset,
    ))
}

pub fn t_bl_influence(f: &BooleanFunction, t: usize) -> Result<Rational> {
    check_level(f.n(), t)?;
    let subsets = VariableSubset::all_of_size(f.n(), t);
    let values = subsets
        .iter()
        .map(|s| bl_influence(f, s).map(|v| v.value))
        .collect::<Result<Vec<_>>>()?;
    Ok(average(values.into_iter(), subsets.len()))
}

/// `(1 - C_f(chi_T)) / 2 = Pr_x[f(x) != f(x xor chi_T)]`.
pub fn gs_influence(f: &BooleanFunction, subset: &VariableSubset) -> Result<InfluenceValue> {
    subset.check_nonempty(f.n())?;
    let chi = subset.point();
    let flips = (0..f.len()).filter(|&x| f.get(x) != f.get(x ^ chi)).count();
    Ok(InfluenceValue::new(
        dyadic(flips as i128, f.n() as u32),
        Measure::Gs,
        *subset,
    ))
}

/// `I_f(T) = 2^-(n-1-t) sum_b Var(f_b)` over the fibers of `T-bar`.
pub fn fb_influence(f: &BooleanFunction, subset: &VariableSubset) -> Result<InfluenceValue> {
    subset.check_nonempty(f.n())?;
    let t = subset.len() as u32;
    let full = 1i128 << t;
    let sum: i128 = f
        .fiber_weights(subset)?
        .into_iter()
        .map(|w| {
            let w = w as i128;
            w * (full - w)
        })
        .sum();
    // 2^-(n-1-t) * sum / 2^(2t)
    Ok(InfluenceValue::new(
        dyadic(sum, f.n() as u32 + t - 1),
        Measure::Fb,
        *subset,
    ))
}

pub(crate) fn mu_from_autocorrelation(ac: &RealSpectrum, subset: &VariableSubset) -> Rational {
    let t = subset.len() as u32;
    let full = 1i128 << ac.log2_den();
    let sum: i128 = submasks(subset.point())
        .map(|a| full - ac.numerator(a) as i128)
        .sum();
    dyadic(sum, t + ac.log2_den() + 1)
}

/// `mu_f(T) = 2^-t sum_{a <= chi_T} (1 - C_f(a)) / 2`.
pub fn mu_probability(f: &BooleanFunction, subset: &VariableSubset) -> Result<InfluenceValue> {
    subset.check_nonempty(f.n())?;
    Ok(InfluenceValue::new(
        mu_from_autocorrelation(&crate::spectra::autocorrelation(f), subset),
        Measure::Mu,
        *subset,
    ))
}

/// `inf_f(S u T) = inf_f(S) + inf_f(T) - cross`, with `cross` the Walsh mass
/// on points whose support meets both `S` and `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionDecomposition {
    pub union: Rational,
    pub first: Rational,
    pub second: Rational,
    pub cross: Rational,
}

impl UnionDecomposition {
    pub fn identity_holds(&self) -> bool {
        self.union == self.first + self.second - self.cross
    }
}

pub fn union_decomposition(
    f: &BooleanFunction,
    first: &VariableSubset,
    second: &VariableSubset,
) -> Result<UnionDecomposition> {
    first.check_nonempty(f.n())?;
    second.check_nonempty(f.n())?;
    let walsh = crate::spectra::walsh_spectrum(f);
    let (s, t) = (first.point(), second.point());
    let cross: i128 = walsh
        .numerators()
        .iter()
        .enumerate()
        .filter(|(u, _)| u & s != 0 && u & t != 0)
        .map(|(_, &w)| (w as i128) * (w as i128))
        .sum();
    Ok(UnionDecomposition {
        union: influence_from_walsh(&walsh, &first.union(second)),
        first: influence_from_walsh(&walsh, first),
        second: influence_from_walsh(&walsh, second),
        cross: dyadic(cross, 2 * walsh.log2_den()),
    })
}

/// Measures evaluated against cached spectra; the restriction scan is used
/// for `inf` until a spectrum is available.
impl SpectralProfile<'_> {
    pub fn influence(&self, subset: &VariableSubset) -> Result<InfluenceValue> {
        let f = self.function();
        subset.check_nonempty(f.n())?;
        Ok(InfluenceValue::new(
            influence_from_walsh(self.walsh(), subset),
            Measure::Ac,
            *subset,
        ))
    }

    pub fn pseudo_influence(&self, subset: &VariableSubset) -> Result<InfluenceValue> {
        subset.check_nonempty(self.function().n())?;
        Ok(InfluenceValue::new(
            pseudo_from_walsh(self.walsh(), subset),
            Measure::Pseudo,
            *subset,
        ))
    }

    pub fn mu_probability(&self, subset: &VariableSubset) -> Result<InfluenceValue> {
        subset.check_nonempty(self.function().n())?;
        Ok(InfluenceValue::new(
            mu_from_autocorrelation(self.autocorrelation(), subset),
            Measure::Mu,
            *subset,
        ))
    }

    pub fn measure(&self, measure: Measure, subset: &VariableSubset) -> Result<InfluenceValue> {
        let f = self.function();
        match measure {
            Measure::Ac => self.influence(subset),
            Measure::Pseudo => self.pseudo_influence(subset),
            Measure::Bl => bl_influence(f, subset),
            Measure::Gs => gs_influence(f, subset),
            Measure::Fb => fb_influence(f, subset),
            Measure::Mu => self.mu_probability(subset),
        }
    }

    pub fn t_influence(&self, t: usize) -> Result<Rational> {
        check_level(self.function().n(), t)?;
        Ok(t_influence_from_distribution(self.distribution(), t))
    }

    pub fn t_pseudo_influence(&self, t: usize) -> Result<Rational> {
        check_level(self.function().n(), t)?;
        Ok(t_pseudo_from_distribution(self.distribution(), t))
    }
}
