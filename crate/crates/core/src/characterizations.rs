//! Bent, resilient, PC(k) and junta characterisations, Fourier entropy and
//! spectral concentration.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::function::{var_bit, BooleanFunction, VariableSubset};
use crate::influence::{influence_from_walsh, t_influence_from_distribution};
use crate::rational::{binomial, dyadic, Rational};
use crate::spectra::SpectralProfile;

/// Flat spectrum: `W_f(a)^2 = 2^-n` for every `a`.
pub fn is_bent(f: &BooleanFunction) -> bool {
    SpectralProfile::new(f).is_bent()
}

/// `inf_f(T) = 1 - 2^-#T` for every nonempty `T`.
pub fn bent_by_influence(f: &BooleanFunction) -> bool {
    SpectralProfile::new(f).bent_by_influence()
}

/// Largest `m` such that `W_f` vanishes on every point of weight `<= m`;
/// `None` when `f` is unbalanced.
pub fn resiliency_order(f: &BooleanFunction) -> Option<usize> {
    SpectralProfile::new(f).resiliency_order()
}

/// Largest `k` such that `C_f(u) = 0` for all `1 <= wt(u) <= k`.
pub fn pc_order(f: &BooleanFunction) -> usize {
    SpectralProfile::new(f).pc_order()
}

impl SpectralProfile<'_> {
    pub fn is_bent(&self) -> bool {
        let n = self.function().n();
        n % 2 == 0
            && self
                .walsh()
                .numerators()
                .iter()
                .all(|&w| (w as i128) * (w as i128) == 1i128 << n)
    }

    pub fn bent_by_influence(&self) -> bool {
        let n = self.function().n();
        let one = Rational::from_integer(1);
        VariableSubset::all_nonempty(n).iter().all(|t| {
            influence_from_walsh(self.walsh(), t) == one - dyadic(1, t.len() as u32)
        })
    }

    pub fn resiliency_order(&self) -> Option<usize> {
        let walsh = self.walsh();
        let lowest_nonzero = walsh
            .numerators()
            .iter()
            .enumerate()
            .filter(|(_, &w)| w != 0)
            .map(|(a, _)| a.count_ones() as usize)
            .min()
            .expect("Parseval: some Walsh value is nonzero");
        lowest_nonzero.checked_sub(1)
    }

    pub fn pc_order(&self) -> usize {
        let n = self.function().n();
        let ac = self.autocorrelation();
        (1..ac.len())
            .filter(|&u| ac.numerator(u) != 0)
            .map(|u| u.count_ones() as usize - 1)
            .min()
            .unwrap_or(n)
    }

    pub fn fourier_entropy(&self) -> f64 {
        let log2_den = 2 * self.walsh().log2_den() as i32;
        let scale = 2f64.powi(-log2_den);
        -self
            .walsh()
            .numerators()
            .iter()
            .filter(|&&w| w != 0)
            .map(|&w| {
                let p = (w as f64) * (w as f64) * scale;
                p * p.log2()
            })
            .sum::<f64>()
    }
}

/// Closest junta on a fixed variable set and its distance from `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JuntaApproximation {
    /// Fraction of inputs where `f` and `junta` disagree.
    pub distance: Rational,
    /// `n`-variable function depending only on the chosen variables; each
    /// fiber takes the majority value of `f`, 0 on ties.
    pub junta: BooleanFunction,
}

/// Closest junta on `support`: `delta = 2^-#S sum_a min(E(f_a), 1 - E(f_a))`
/// where `f_a` fixes the variables of `S` to `a`. An empty `support` gives
/// the distance to the nearest constant.
pub fn junta_distance(f: &BooleanFunction, support: &VariableSubset) -> Result<JuntaApproximation> {
    support.check_arity(f.n())?;
    let n = f.n();
    let free = support.complement();
    let free_size = free.len() as u32;
    let weights = f.fiber_weights(&free)?;
    let fiber_len = 1u64 << free_size;
    let majority: Vec<bool> = weights.iter().map(|&w| 2 * w > fiber_len).collect();
    let disagreements: u64 = weights.iter().map(|&w| w.min(fiber_len - w)).sum();

    let fixed_bits: Vec<usize> = support.indices().iter().map(|&j| var_bit(n, j)).collect();
    let junta = BooleanFunction::from_fn_capped(
        n,
        |x| {
            let key = fixed_bits
                .iter()
                .fold(0usize, |k, &b| (k << 1) | (x & b != 0) as usize);
            majority[key]
        },
        n,
    )?;
    Ok(JuntaApproximation {
        distance: dyadic(disagreements as i128, n as u32),
        junta,
    })
}

/// Checks that the closest-junta distance on `support` is at most half the
/// influence of the remaining variables, `2 delta <= inf_f(S-bar)`.
pub fn junta_far_check(f: &BooleanFunction, support: &VariableSubset) -> Result<bool> {
    let delta = junta_distance(f, support)?.distance;
    let rest = support.complement();
    if rest.is_empty() {
        return Ok(delta.is_zero());
    }
    let inf = crate::influence::influence(f, &rest, crate::influence::InfluenceAlgorithm::Restriction)?;
    Ok(delta * Rational::from_integer(2) <= inf.value)
}

/// For an `s`-junta, checks `t-inf(f) <= 1 - C(n-s,t) / C(n,t)`.
pub fn junta_influence_bound_check(f: &BooleanFunction, s: usize, t: usize) -> Result<bool> {
    let n = f.n();
    if s > n {
        return Err(Error::OutOfRange {
            name: "s",
            value: s,
            min: 0,
            max: n,
        });
    }
    let relevant = f.relevant_variables().len();
    if relevant > s {
        return Err(Error::Domain(format!(
            "function depends on {relevant} variables, not an {s}-junta"
        )));
    }
    let t_inf = SpectralProfile::new(f).t_influence(t)?;
    Ok(t_inf <= junta_influence_bound(n, s, t))
}

/// `1 - C(n-s,t) / C(n,t)`.
pub fn junta_influence_bound(n: usize, s: usize, t: usize) -> Rational {
    Rational::from_integer(1)
        - Rational::new(
            binomial((n - s) as i64, t as i64) as i128,
            binomial(n as i64, t as i64) as i128,
        )
}

/// `H(f) = -sum_a W_f(a)^2 log2 W_f(a)^2`, in bits.
pub fn fourier_entropy(f: &BooleanFunction) -> f64 {
    SpectralProfile::new(f).fourier_entropy()
}

/// `rho_t(f) = (H(f) / n) / t-inf(f)`.
pub fn fei_ratio(f: &BooleanFunction, t: usize) -> Result<f64> {
    let profile = SpectralProfile::new(f);
    let t_inf = profile.t_influence(t)?;
    if t_inf.is_zero() {
        return Err(Error::Domain(
            "t-influence is zero, the entropy-influence ratio is undefined".into(),
        ));
    }
    let h = profile.fourier_entropy();
    Ok(h / f.n() as f64 / crate::rational::to_f64(&t_inf))
}

/// Least positive `k` with `k >= t - 1 + (n - t + 1)(1 - (1 - x)^(1/t))`,
/// `x = t-inf(f) / epsilon`; the Walsh mass on weights `>= k` is then at most
/// `epsilon`. The inequality is decided exactly, as
/// `((n - k) / (n - t + 1))^t <= 1 - x` for `k < n`.
pub fn concentration_threshold(f: &BooleanFunction, t: usize, epsilon: Rational) -> Result<usize> {
    let n = f.n();
    if t == 0 || t > n {
        return Err(Error::OutOfRange {
            name: "t",
            value: t,
            min: 1,
            max: n,
        });
    }
    let t_inf = t_influence_from_distribution(SpectralProfile::new(f).distribution(), t);
    if epsilon > Rational::from_integer(1) || epsilon < t_inf {
        return Err(Error::Domain(format!(
            "epsilon {epsilon} is outside [{t_inf}, 1]"
        )));
    }
    let x = if t_inf.is_zero() {
        Rational::zero()
    } else {
        t_inf / epsilon
    };
    let slack = Rational::from_integer(1) - x;
    let slack_num = BigInt::from(*slack.numer());
    let slack_den = BigInt::from(*slack.denom());
    let base_den = BigInt::from((n - t + 1) as u64).pow(t as u32);
    let k = (1..n)
        .find(|&k| {
            // (n - k)^t / (n - t + 1)^t <= num / den
            let lhs = BigInt::from((n - k) as u64).pow(t as u32) * &slack_den;
            let rhs = &slack_num * &base_den;
            lhs <= rhs
        })
        .unwrap_or(n);
    Ok(k)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharacterizationReport {
    pub is_bent: bool,
    pub resiliency_order: Option<usize>,
    pub pc_order: usize,
    pub entropy: f64,
    pub notes: Vec<String>,
}

pub fn characterize(f: &BooleanFunction) -> CharacterizationReport {
    SpectralProfile::new(f).characterize()
}

impl SpectralProfile<'_> {
    pub fn characterize(&self) -> CharacterizationReport {
        let f = self.function();
        let is_bent = self.is_bent();
        let resiliency_order = self.resiliency_order();
        let pc_order = self.pc_order();
        let mut notes = Vec::new();
        if f.is_constant() {
            notes.push("constant".to_string());
        }
        if f.is_balanced() {
            notes.push("balanced".to_string());
        }
        if is_bent {
            notes.push("bent".to_string());
        }
        if let Some(m) = resiliency_order.filter(|&m| m > 0) {
            notes.push(format!("{m}-resilient"));
        }
        if pc_order > 0 {
            notes.push(format!("pc({pc_order})"));
        }
        notes.push(format!("{}-junta", f.relevant_variables().len()));
        CharacterizationReport {
            is_bent,
            resiliency_order,
            pc_order,
            entropy: self.fourier_entropy(),
            notes,
        }
    }
}
