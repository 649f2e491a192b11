//! Walsh and auto-correlation spectra, spectral weight distribution, and
//! the Poisson-summation identities over coordinate subspaces.
//!
//! All transforms run on unnormalised integers; the normalising power of two
//! is carried alongside as `log2_den`, so no division ever happens.

use std::cell::OnceCell;
use std::ops::{Add, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::function::{submasks, BooleanFunction, VariableSubset};
use crate::rational::{dyadic, Rational};

/// Shifts above which the transform route beats direct auto-correlation.
const DIRECT_AUTOCORRELATION_MAX_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpectrumKind {
    Walsh,
    Autocorrelation,
    Fourier,
}

/// `2^n` exact values `numerators[a] / 2^log2_den`, indexed like truth tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealSpectrum {
    n: usize,
    kind: SpectrumKind,
    numerators: Vec<i64>,
    log2_den: u32,
}

impl RealSpectrum {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> SpectrumKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.numerators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numerators.is_empty()
    }

    /// Unreduced numerators over the common denominator `2^log2_den`.
    pub fn numerators(&self) -> &[i64] {
        &self.numerators
    }

    pub fn log2_den(&self) -> u32 {
        self.log2_den
    }

    pub fn numerator(&self, alpha: usize) -> i64 {
        self.numerators[alpha]
    }

    pub fn value(&self, alpha: usize) -> Rational {
        dyadic(self.numerators[alpha] as i128, self.log2_den)
    }

    pub fn values(&self) -> Vec<Rational> {
        (0..self.len()).map(|a| self.value(a)).collect()
    }

    /// Level sums of squared values, `sum_{wt(u)=k} value(u)^2`, as
    /// numerators over `2^(2 log2_den)`.
    fn squared_levels(&self) -> Vec<i128> {
        let mut levels = vec![0i128; self.n + 1];
        for (u, &v) in self.numerators.iter().enumerate() {
            levels[u.count_ones() as usize] += (v as i128) * (v as i128);
        }
        levels
    }

    /// Squared-value weight distribution; meaningful for Walsh spectra.
    pub fn weight_distribution(&self) -> WeightDistribution {
        debug_assert_eq!(self.kind, SpectrumKind::Walsh);
        WeightDistribution {
            n: self.n,
            numerators: self.squared_levels(),
            log2_den: 2 * self.log2_den,
        }
    }
}

/// In-place unnormalised Walsh-Hadamard butterfly:
/// `out[a] = sum_x in[x] (-1)^<x,a>`, `O(n 2^n)` additions.
pub fn fwht<T>(values: &mut [T]) -> Result<()>
where
    T: Copy + Add<Output = T> + Sub<Output = T>,
{
    let len = values.len();
    if !len.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(len));
    }
    let mut h = 1;
    while h < len {
        for block in values.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
    Ok(())
}

/// `psi_hat(a) = 2^-n sum_x psi(x) (-1)^<x,a>` for an integer-valued `psi`.
pub fn fourier_transform(psi: &[i64]) -> Result<RealSpectrum> {
    let mut numerators = psi.to_vec();
    fwht(&mut numerators)?;
    let n = psi.len().trailing_zeros() as usize;
    Ok(RealSpectrum {
        n,
        kind: SpectrumKind::Fourier,
        numerators,
        log2_den: n as u32,
    })
}

/// `psi(x) = sum_a psi_hat(a) (-1)^<a,x>`.
pub fn inverse_fourier(spectrum: &RealSpectrum) -> Vec<Rational> {
    let mut sums: Vec<i128> = spectrum.numerators.iter().map(|&v| v as i128).collect();
    fwht(&mut sums).expect("spectrum length is a power of two");
    sums.into_iter()
        .map(|s| dyadic(s, spectrum.log2_den))
        .collect()
}

/// `W_f(a) = 2^-n sum_x (-1)^(f(x) xor <x,a>)`.
pub fn walsh_spectrum(f: &BooleanFunction) -> RealSpectrum {
    let mut numerators: Vec<i64> = (0..f.len()).map(|x| f.sign(x)).collect();
    fwht(&mut numerators).expect("table length is a power of two");
    RealSpectrum {
        n: f.n(),
        kind: SpectrumKind::Walsh,
        numerators,
        log2_den: f.n() as u32,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AutocorrelationMethod {
    /// `O(4^n)` summation of `(-1)^(f(x) xor f(x xor a))`.
    Direct,
    /// Inverse transform of the squared Walsh spectrum, `O(n 2^n)`.
    WienerKhintchine,
}

/// `C_f(a) = 2^-n sum_x (-1)^(f(x) xor f(x xor a))`.
pub fn autocorrelation_spectrum(f: &BooleanFunction, method: AutocorrelationMethod) -> RealSpectrum {
    let n = f.n();
    let numerators = match method {
        AutocorrelationMethod::Direct => {
            let signs: Vec<i64> = (0..f.len()).map(|x| f.sign(x)).collect();
            (0..f.len())
                .map(|a| (0..f.len()).map(|x| signs[x] * signs[x ^ a]).sum())
                .collect()
        }
        AutocorrelationMethod::WienerKhintchine => {
            return autocorrelation_from_walsh(&walsh_spectrum(f));
        }
    };
    RealSpectrum {
        n,
        kind: SpectrumKind::Autocorrelation,
        numerators,
        log2_den: n as u32,
    }
}

/// `C_f(x) = sum_a W_f(a)^2 (-1)^<a,x>`.
fn autocorrelation_from_walsh(walsh: &RealSpectrum) -> RealSpectrum {
    let n = walsh.n;
    let mut squares: Vec<i128> = walsh
        .numerators
        .iter()
        .map(|&w| (w as i128) * (w as i128))
        .collect();
    fwht(&mut squares).expect("spectrum length is a power of two");
    // squares[x] = 2^n * sum_y s(y) s(y xor x), so the shift is exact.
    let numerators = squares.into_iter().map(|s| (s >> n) as i64).collect();
    RealSpectrum {
        n,
        kind: SpectrumKind::Autocorrelation,
        numerators,
        log2_den: n as u32,
    }
}

/// Auto-correlation by the method suited to the function's size.
pub fn autocorrelation(f: &BooleanFunction) -> RealSpectrum {
    let method = if f.n() > DIRECT_AUTOCORRELATION_MAX_N {
        AutocorrelationMethod::WienerKhintchine
    } else {
        AutocorrelationMethod::Direct
    };
    autocorrelation_spectrum(f, method)
}

/// Level probabilities `p_f(k) = sum_{wt(u)=k} W_f(u)^2`, `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    n: usize,
    numerators: Vec<i128>,
    log2_den: u32,
}

impl WeightDistribution {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self, k: usize) -> Rational {
        dyadic(self.numerators[k], self.log2_den)
    }

    pub fn probabilities(&self) -> Vec<Rational> {
        (0..=self.n).map(|k| self.p(k)).collect()
    }

    /// Numerators over `2^(2n)`.
    pub fn numerators(&self) -> &[i128] {
        &self.numerators
    }

    pub fn log2_den(&self) -> u32 {
        self.log2_den
    }

    /// `W^{>=k} = sum_{i>=k} p(i)`.
    pub fn tail(&self, k: usize) -> Result<Rational> {
        if k > self.n {
            return Err(Error::OutOfRange {
                name: "k",
                value: k,
                min: 0,
                max: self.n,
            });
        }
        Ok(dyadic(self.numerators[k..].iter().sum(), self.log2_den))
    }
}

pub fn weight_distribution(f: &BooleanFunction) -> WeightDistribution {
    walsh_spectrum(f).weight_distribution()
}

pub fn tail_weight(f: &BooleanFunction, k: usize) -> Result<Rational> {
    weight_distribution(f).tail(k)
}

/// `L_{1,t}(f) = sum_{wt(u)=t} |W_f(u)|`.
pub fn level_l1(f: &BooleanFunction, t: usize) -> Result<Rational> {
    if t > f.n() {
        return Err(Error::OutOfRange {
            name: "t",
            value: t,
            min: 0,
            max: f.n(),
        });
    }
    let walsh = walsh_spectrum(f);
    let total: i128 = walsh
        .numerators
        .iter()
        .enumerate()
        .filter(|(u, _)| u.count_ones() as usize == t)
        .map(|(_, w)| w.unsigned_abs() as i128)
        .sum();
    Ok(dyadic(total, walsh.log2_den))
}

/// Checks both subspace identities for `E = {x <= chi_{T-bar}}`:
///
/// * `sum_{w in E} W_f(w)^2 = (#E / 2^n) sum_{u in E-perp} C_f(u)`, where
///   `E-perp = {u <= chi_T}`;
/// * `sum_{w in E} W_f(w)^2 = 2^-(n-t) sum_a W_{f_a}(0)^2`, with `f_a` the
///   restriction fixing the variables outside `T` to `a`.
pub fn subspace_identity_check(f: &BooleanFunction, subset: &VariableSubset) -> Result<bool> {
    subset.check_nonempty(f.n())?;
    let n = f.n() as u32;
    let t = subset.len() as u32;
    let walsh = walsh_spectrum(f);
    let autocorr = autocorrelation(f);

    let mass: i128 = submasks(subset.complement().point())
        .map(|w| {
            let v = walsh.numerator(w) as i128;
            v * v
        })
        .sum();
    let mass = dyadic(mass, 2 * n);

    let ac_sum: i128 = submasks(subset.point())
        .map(|u| autocorr.numerator(u) as i128)
        .sum();
    // (2^(n-t) / 2^n) * ac_sum / 2^n
    let poisson = dyadic(ac_sum, n + t);

    let restricted: Rational = f
        .fiber_weights(subset)?
        .into_iter()
        .map(|w| {
            let centred = (1i128 << t) - 2 * w as i128;
            dyadic(centred * centred, 2 * t)
        })
        .fold(Rational::zero(), |acc, v| acc + v);
    let second_order = restricted / Rational::from_integer(1i128 << (n - t));

    Ok(mass == poisson && mass == second_order)
}

/// Lazily computed spectra of one function, shared by analyses that need
/// several of them.
#[derive(Debug)]
pub struct SpectralProfile<'a> {
    f: &'a BooleanFunction,
    walsh: OnceCell<RealSpectrum>,
    autocorrelation: OnceCell<RealSpectrum>,
    distribution: OnceCell<WeightDistribution>,
}

impl<'a> SpectralProfile<'a> {
    pub fn new(f: &'a BooleanFunction) -> Self {
        SpectralProfile {
            f,
            walsh: OnceCell::new(),
            autocorrelation: OnceCell::new(),
            distribution: OnceCell::new(),
        }
    }

    pub fn function(&self) -> &'a BooleanFunction {
        self.f
    }

    pub fn walsh(&self) -> &RealSpectrum {
        self.walsh.get_or_init(|| walsh_spectrum(self.f))
    }

    pub fn autocorrelation(&self) -> &RealSpectrum {
        self.autocorrelation.get_or_init(|| {
            if self.f.n() > DIRECT_AUTOCORRELATION_MAX_N || self.walsh.get().is_some() {
                autocorrelation_from_walsh(self.walsh())
            } else {
                autocorrelation_spectrum(self.f, AutocorrelationMethod::Direct)
            }
        })
    }

    pub fn distribution(&self) -> &WeightDistribution {
        self.distribution
            .get_or_init(|| self.walsh().weight_distribution())
    }
}
