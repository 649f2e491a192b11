//! Boolean functions as packed truth tables, and variable subsets.
//!
//! Index convention: for an `n`-variable function the truth-table index of
//! the assignment `(x_1, ..., x_n)` is `i = sum_j x_j * 2^(n - j)`, so `X_1`
//! is the most significant bit and `X_n` the least significant. The same
//! encoding is used for spectral indices (points of `F_2^n`), for the text
//! truth-table form (index 0 first) and for the hex form.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{dyadic, Rational};

/// Default upper bound on the variable count.
pub const DEFAULT_MAX_VARS: usize = 20;
/// Largest cap accepted by the capped constructors.
pub const HARD_MAX_VARS: usize = 30;

fn check_arity(n: usize, cap: usize) -> Result<()> {
    let cap = cap.min(HARD_MAX_VARS);
    if n == 0 || n > cap {
        return Err(Error::VariableCount { n, cap });
    }
    Ok(())
}

/// Bit position inside a truth-table index of the 1-based variable `j`.
#[inline]
pub(crate) fn var_bit(n: usize, j: usize) -> usize {
    1usize << (n - j)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: usize,
    words: Vec<u64>,
}

impl BooleanFunction {
    fn zeroed(n: usize) -> Self {
        let len = 1usize << n;
        BooleanFunction {
            n,
            words: vec![0; len.div_ceil(64)],
        }
    }

    /// Builds `f` with `f(i) = bits[i]`, using the default variable cap.
    pub fn from_bits(n: usize, bits: &[bool]) -> Result<Self> {
        Self::from_bits_capped(n, bits, DEFAULT_MAX_VARS)
    }

    pub fn from_bits_capped(n: usize, bits: &[bool], cap: usize) -> Result<Self> {
        check_arity(n, cap)?;
        let expected = 1usize << n;
        if bits.len() != expected {
            return Err(Error::TableLength {
                expected,
                actual: bits.len(),
            });
        }
        let mut f = Self::zeroed(n);
        for (i, _) in bits.iter().enumerate().filter(|(_, b)| **b) {
            f.words[i >> 6] |= 1 << (i & 63);
        }
        Ok(f)
    }

    /// Tabulates `eval` over all `2^n` indices.
    pub fn from_fn(n: usize, eval: impl Fn(usize) -> bool) -> Result<Self> {
        Self::from_fn_capped(n, eval, DEFAULT_MAX_VARS)
    }

    pub fn from_fn_capped(n: usize, eval: impl Fn(usize) -> bool, cap: usize) -> Result<Self> {
        check_arity(n, cap)?;
        let mut f = Self::zeroed(n);
        for i in 0..(1usize << n) {
            if eval(i) {
                f.words[i >> 6] |= 1 << (i & 63);
            }
        }
        Ok(f)
    }

    /// Truth table packed little-endian into words: bit `i & 63` of word
    /// `i >> 6` is `f(i)`. Unused high bits of the last word must be zero.
    pub fn from_words(n: usize, words: Vec<u64>) -> Result<Self> {
        check_arity(n, HARD_MAX_VARS)?;
        let len = 1usize << n;
        let expected = len.div_ceil(64);
        if words.len() != expected {
            return Err(Error::TableLength {
                expected: len,
                actual: words.len() * 64,
            });
        }
        let mut f = BooleanFunction { n, words };
        if len < 64 {
            f.words[0] &= (1u64 << len) - 1;
        }
        Ok(f)
    }

    /// Parses a truth table over `{0,1}`; `n` is inferred from the length.
    pub fn from_tt_str(s: &str) -> Result<Self> {
        parse_truth_table(s, DEFAULT_MAX_VARS)
    }

    pub fn from_hex(s: &str, n: usize) -> Result<Self> {
        parse_hex(s, n, DEFAULT_MAX_VARS)
    }

    pub fn from_anf(expr: &str, n: usize) -> Result<Self> {
        parse_anf(expr, n, DEFAULT_MAX_VARS)
    }

    pub fn constant(n: usize, value: bool) -> Result<Self> {
        Self::from_fn(n, |_| value)
    }

    /// `X_1 xor ... xor X_n`.
    pub fn parity(n: usize) -> Result<Self> {
        Self::from_fn(n, |x| x.count_ones() % 2 == 1)
    }

    /// `X_1 X_2 ... X_n`.
    pub fn and_all(n: usize) -> Result<Self> {
        Self::from_fn(n, |x| x == (1usize << n) - 1)
    }

    /// The linear function `<a, x>` for a point `a` in index encoding.
    pub fn linear(n: usize, a: usize) -> Result<Self> {
        Self::from_fn(n, |x| (x & a).count_ones() % 2 == 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of truth-table entries, `2^n`.
    pub fn len(&self) -> usize {
        1usize << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, x: usize) -> bool {
        (self.words[x >> 6] >> (x & 63)) & 1 == 1
    }

    /// `(-1)^f(x)`.
    #[inline]
    pub fn sign(&self, x: usize) -> i64 {
        if self.get(x) {
            -1
        } else {
            1
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |x| self.get(x))
    }

    pub fn to_bits(&self) -> Vec<bool> {
        self.bits().collect()
    }

    pub fn to_tt_string(&self) -> String {
        self.bits().map(|b| if b { '1' } else { '0' }).collect()
    }

    /// Hex form; only defined for `n >= 2`.
    pub fn to_hex(&self) -> Option<String> {
        if self.n < 2 {
            return None;
        }
        let digits = (0..self.len() / 4).map(|d| {
            let nibble = (0..4).fold(0u32, |acc, k| (acc << 1) | self.get(4 * d + k) as u32);
            char::from_digit(nibble, 16).unwrap()
        });
        Some(digits.collect())
    }

    /// `#supp(f)`.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// `E(f) = wt(f) / 2^n`.
    pub fn expectation(&self) -> Rational {
        dyadic(self.weight() as i128, self.n as u32)
    }

    /// `Var(f) = E(f) (1 - E(f))`.
    pub fn variance(&self) -> Rational {
        let w = self.weight() as i128;
        let len = self.len() as i128;
        dyadic(w * (len - w), 2 * self.n as u32)
    }

    pub fn is_constant(&self) -> bool {
        let w = self.weight();
        w == 0 || w == self.len() as u64
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.weight() == self.len() as u64
    }

    pub fn complement(&self) -> Self {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        if self.len() < 64 {
            words[0] &= (1u64 << self.len()) - 1;
        }
        BooleanFunction { n: self.n, words }
    }

    /// Pointwise xor; both functions must have the same arity.
    pub fn xor(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SubsetArity {
                expected: self.n,
                actual: other.n,
            });
        }
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a ^ b)
            .collect();
        Ok(BooleanFunction { n: self.n, words })
    }

    /// Fixes the variables in `fixed` to `assignment` (listed in increasing
    /// variable order) and returns the function of the remaining variables,
    /// which keep their relative order. Fixing every variable yields a
    /// 0-variable constant.
    pub fn restrict(&self, fixed: &VariableSubset, assignment: &[bool]) -> Result<Self> {
        fixed.check_arity(self.n)?;
        let fixed_vars = fixed.indices();
        if assignment.len() != fixed_vars.len() {
            return Err(Error::AssignmentLength {
                expected: fixed_vars.len(),
                actual: assignment.len(),
            });
        }
        let n = self.n;
        let base = fixed_vars
            .iter()
            .zip(assignment)
            .filter(|(_, a)| **a)
            .fold(0usize, |acc, (j, _)| acc | var_bit(n, *j));
        let free: Vec<usize> = fixed.complement().indices();
        let m = free.len();
        let mut out = Self::zeroed(m);
        for y in 0..(1usize << m) {
            let mut x = base;
            for (k, j) in free.iter().enumerate() {
                if y >> (m - 1 - k) & 1 == 1 {
                    x |= var_bit(n, *j);
                }
            }
            if self.get(x) {
                out.words[y >> 6] |= 1 << (y & 63);
            }
        }
        Ok(out)
    }

    /// True iff `f(x) = f(x xor gamma)` for every `gamma <= chi_T`, i.e. all
    /// restrictions obtained by fixing the variables of `T` coincide.
    pub fn is_degenerate_on(&self, subset: &VariableSubset) -> Result<bool> {
        subset.check_nonempty(self.n)?;
        // Invariance under each unit shift generates invariance under the
        // whole subcube below chi_T.
        for j in subset.indices() {
            let bit = var_bit(self.n, j);
            if (0..self.len()).any(|x| x & bit == 0 && self.get(x) != self.get(x | bit)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Weights of the restrictions obtained by fixing the variables outside
    /// `free` and leaving those in `free` open. Entry `k` belongs to the
    /// assignment of the fixed variables whose index (first fixed variable
    /// most significant) is `k`. Runs in `O(2^n)`.
    pub fn fiber_weights(&self, free: &VariableSubset) -> Result<Vec<u64>> {
        free.check_arity(self.n)?;
        let free_point = free.point();
        let fixed_point = free.complement().point();
        let mut weights: Vec<u64> = submasks(fixed_point)
            .map(|alpha| {
                submasks(free_point)
                    .filter(|beta| self.get(alpha | beta))
                    .count() as u64
            })
            .collect();
        // submasks() runs in decreasing order.
        weights.reverse();
        Ok(weights)
    }

    /// Variables the function actually depends on.
    pub fn relevant_variables(&self) -> VariableSubset {
        let mask = (1..=self.n)
            .filter(|&j| {
                let bit = var_bit(self.n, j);
                (0..self.len()).any(|x| x & bit == 0 && self.get(x) != self.get(x | bit))
            })
            .fold(0u64, |m, j| m | 1 << (j - 1));
        VariableSubset { n: self.n, mask }
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(n={}, {})", self.n, self.to_tt_string())
    }
}

/// A subset `T` of `[n]`; bit `j - 1` of `mask` is set iff `j` is in `T`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariableSubset {
    n: usize,
    mask: u64,
}

impl VariableSubset {
    pub fn new(n: usize, mask: u64) -> Result<Self> {
        if n > 63 || mask >> n != 0 {
            return Err(Error::SubsetMask { mask, n });
        }
        Ok(VariableSubset { n, mask })
    }

    /// Builds the subset from 1-based variable indices; duplicates are merged.
    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &j in indices {
            if j == 0 || j > n {
                return Err(Error::VariableIndex { index: j, n });
            }
            mask |= 1 << (j - 1);
        }
        Ok(VariableSubset { n, mask })
    }

    pub fn empty(n: usize) -> Self {
        VariableSubset { n, mask: 0 }
    }

    pub fn full(n: usize) -> Self {
        VariableSubset {
            n,
            mask: (1u64 << n) - 1,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// `#T`.
    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, j: usize) -> bool {
        j >= 1 && j <= self.n && self.mask >> (j - 1) & 1 == 1
    }

    /// 1-based members in increasing order.
    pub fn indices(&self) -> Vec<usize> {
        (1..=self.n).filter(|&j| self.contains(j)).collect()
    }

    /// `T-bar = [n] \ T`.
    pub fn complement(&self) -> Self {
        VariableSubset {
            n: self.n,
            mask: !self.mask & ((1u64 << self.n) - 1),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        VariableSubset {
            n: self.n,
            mask: self.mask | other.mask,
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.mask & !other.mask == 0
    }

    /// `chi_T` as a point of `F_2^n` in truth-table index encoding.
    pub fn point(&self) -> usize {
        self.indices()
            .into_iter()
            .fold(0usize, |acc, j| acc | var_bit(self.n, j))
    }

    /// Inverse of [`VariableSubset::point`]: the support of a point.
    pub fn from_point(n: usize, point: usize) -> Self {
        let mask = (1..=n)
            .filter(|&j| point & var_bit(n, j) != 0)
            .fold(0u64, |m, j| m | 1 << (j - 1));
        VariableSubset { n, mask }
    }

    /// All size-`t` subsets of `[n]` in increasing mask order.
    pub fn all_of_size(n: usize, t: usize) -> Vec<Self> {
        (0..1u64 << n)
            .filter(|m| m.count_ones() as usize == t)
            .map(|mask| VariableSubset { n, mask })
            .collect()
    }

    /// All nonempty subsets of `[n]` in increasing mask order.
    pub fn all_nonempty(n: usize) -> Vec<Self> {
        (1..1u64 << n).map(|mask| VariableSubset { n, mask }).collect()
    }

    pub(crate) fn check_arity(&self, n: usize) -> Result<()> {
        if self.n != n {
            return Err(Error::SubsetArity {
                expected: n,
                actual: self.n,
            });
        }
        Ok(())
    }

    pub(crate) fn check_nonempty(&self, n: usize) -> Result<()> {
        self.check_arity(n)?;
        if self.is_empty() {
            return Err(Error::EmptySubset);
        }
        Ok(())
    }
}

impl fmt::Debug for VariableSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VariableSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().iter().map(|j| j.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Enumerates all submasks of `mask` (including 0 and `mask` itself).
pub(crate) fn submasks(mask: usize) -> impl Iterator<Item = usize> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & mask)
        };
        Some(cur)
    })
}

pub fn parse_truth_table(s: &str, cap: usize) -> Result<BooleanFunction> {
    let bits = s
        .chars()
        .enumerate()
        .map(|(position, c)| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            found => Err(Error::TableCharacter { found, position }),
        })
        .collect::<Result<Vec<bool>>>()?;
    let len = bits.len();
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::TableLength {
            expected: len.next_power_of_two().max(2),
            actual: len,
        });
    }
    BooleanFunction::from_bits_capped(len.trailing_zeros() as usize, &bits, cap)
}

/// Parses the big-endian hex form: digit `d` carries table entries
/// `4d .. 4d+3`, most significant bit first. Requires `n >= 2`.
pub fn parse_hex(s: &str, n: usize, cap: usize) -> Result<BooleanFunction> {
    check_arity(n, cap)?;
    if n < 2 {
        return Err(Error::Hex("hex form requires n >= 2".into()));
    }
    let s = s.trim();
    let s = s
        .strip_prefix("0x")
        .or_else(|| s.strip_prefix("0X"))
        .unwrap_or(s);
    let expected = (1usize << n) / 4;
    if s.len() != expected {
        return Err(Error::Hex(format!(
            "expected {expected} hex digits for n = {n}, got {}",
            s.len()
        )));
    }
    let mut bits = Vec::with_capacity(1 << n);
    for c in s.chars() {
        let d = c
            .to_digit(16)
            .ok_or_else(|| Error::Hex(format!("invalid hex digit {c:?}")))?;
        bits.extend((0..4).rev().map(|k| d >> k & 1 == 1));
    }
    BooleanFunction::from_bits_capped(n, &bits, cap)
}

/// Parses an algebraic normal form:
///
/// ```text
/// expr := term ('+' term)*
/// term := '1' | var ('*' var)*
/// var  := 'x' integer        (1-based)
/// ```
///
/// Whitespace is ignored; `+` is xor and `*` is and.
pub fn parse_anf(expr: &str, n: usize, cap: usize) -> Result<BooleanFunction> {
    check_arity(n, cap)?;
    let monomials = AnfParser::new(expr, n).parse()?;
    let mut f = BooleanFunction::zeroed(n);
    for m in monomials {
        for x in 0..(1usize << n) {
            if x & m == m {
                f.words[x >> 6] ^= 1 << (x & 63);
            }
        }
    }
    Ok(f)
}

struct AnfParser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    n: usize,
    src: &'a str,
}

impl<'a> AnfParser<'a> {
    fn new(src: &'a str, n: usize) -> Self {
        let chars = src
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        AnfParser {
            chars,
            pos: 0,
            n,
            src,
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        let position = self
            .chars
            .get(self.pos)
            .map(|(i, _)| *i)
            .unwrap_or(self.src.len());
        Error::Anf {
            position,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    /// Returns the monomials as point masks (index encoding).
    fn parse(mut self) -> Result<Vec<usize>> {
        let mut terms = vec![self.term()?];
        while let Some(c) = self.peek() {
            if c != '+' {
                return Err(self.err(format!("expected '+', found {c:?}")));
            }
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<usize> {
        match self.peek() {
            Some('1') => {
                self.pos += 1;
                Ok(0)
            }
            Some('x') | Some('X') => {
                let mut mask = self.var()?;
                while self.peek() == Some('*') {
                    self.pos += 1;
                    mask |= self.var()?;
                }
                Ok(mask)
            }
            Some(c) => Err(self.err(format!("expected '1' or a variable, found {c:?}"))),
            None => Err(self.err("unexpected end of expression")),
        }
    }

    fn var(&mut self) -> Result<usize> {
        match self.peek() {
            Some('x') | Some('X') => self.pos += 1,
            Some(c) => return Err(self.err(format!("expected variable, found {c:?}"))),
            None => return Err(self.err("expected variable, found end of expression")),
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected variable index"));
        }
        let digits: String = self.chars[start..self.pos].iter().map(|(_, c)| c).collect();
        let index: usize = digits
            .parse()
            .map_err(|_| self.err(format!("variable index {digits} too large")))?;
        if index == 0 || index > self.n {
            return Err(Error::VariableIndex { index, n: self.n });
        }
        Ok(var_bit(self.n, index))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gs_example() -> BooleanFunction {
        // (1 + x1) x2 (x3 + x4)
        BooleanFunction::from_anf("x2*x3 + x2*x4 + x1*x2*x3 + x1*x2*x4", 4).unwrap()
    }

    #[test]
    fn bits_follow_index_convention() {
        let and2 = BooleanFunction::from_tt_str("0001").unwrap();
        assert_eq!(and2.n(), 2);
        assert!(and2.get(3));
        assert_eq!(and2.weight(), 1);
        let x1 = BooleanFunction::from_bits(1, &[false, true]).unwrap();
        assert!(!x1.get(0) && x1.get(1));
        let and3 = BooleanFunction::from_tt_str("00000001").unwrap();
        assert_eq!(and3, BooleanFunction::and_all(3).unwrap());
        assert_eq!(and3.weight(), 1);
    }

    #[test]
    fn bad_lengths_and_arity() {
        assert!(matches!(
            BooleanFunction::from_bits(2, &[true; 3]),
            Err(Error::TableLength { expected: 4, actual: 3 })
        ));
        assert!(matches!(
            BooleanFunction::from_bits(0, &[true]),
            Err(Error::VariableCount { .. })
        ));
        assert!(matches!(
            BooleanFunction::constant(21, false),
            Err(Error::VariableCount { n: 21, cap: 20 })
        ));
        assert!(BooleanFunction::from_tt_str("010").is_err());
        assert!(BooleanFunction::from_tt_str("01a1").is_err());
    }

    #[test]
    fn x1_is_most_significant() {
        let x1 = BooleanFunction::from_anf("x1", 3).unwrap();
        assert_eq!(x1.to_tt_string(), "00001111");
        let x3 = BooleanFunction::from_anf("x3", 3).unwrap();
        assert_eq!(x3.to_tt_string(), "01010101");
    }

    #[test]
    fn anf_examples() {
        let bent = BooleanFunction::from_anf("x1*x2 + x3*x4", 4).unwrap();
        assert_eq!(bent.weight(), 6);
        let one = BooleanFunction::from_anf("1", 2).unwrap();
        assert_eq!(one.weight(), 4);
        let par = BooleanFunction::from_anf(" x1 +x2+ x3 ", 3).unwrap();
        assert_eq!(par, BooleanFunction::parity(3).unwrap());
        assert_eq!(par.weight(), 4);
        // x1*x1 = x1, x1 + x1 = 0
        assert_eq!(
            BooleanFunction::from_anf("x1*x1", 2).unwrap(),
            BooleanFunction::from_anf("x1", 2).unwrap()
        );
        assert_eq!(BooleanFunction::from_anf("x1 + x1", 2).unwrap().weight(), 0);
    }

    #[test]
    fn anf_errors() {
        assert!(matches!(
            BooleanFunction::from_anf("x1 + x5", 4),
            Err(Error::VariableIndex { index: 5, n: 4 })
        ));
        assert!(matches!(
            BooleanFunction::from_anf("x0", 4),
            Err(Error::VariableIndex { index: 0, .. })
        ));
        for bad in ["", "x1 +", "x1 x2", "x", "x1 * ", "2", "x1 - x2"] {
            assert!(
                matches!(BooleanFunction::from_anf(bad, 4), Err(Error::Anf { .. })),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn hex_form() {
        let f = BooleanFunction::from_hex("8", 2).unwrap();
        assert_eq!(f.to_tt_string(), "1000");
        let g = BooleanFunction::from_hex("0x0f", 3).unwrap();
        assert_eq!(g.to_tt_string(), "00001111");
        assert_eq!(g.to_hex().unwrap(), "0f");
        assert!(BooleanFunction::from_hex("8", 1).is_err());
        assert!(BooleanFunction::from_hex("8g", 3).is_err());
        assert!(BooleanFunction::from_hex("888", 3).is_err());
    }

    #[test]
    fn weight_expectation_variance() {
        let and2 = BooleanFunction::and_all(2).unwrap();
        assert_eq!(and2.weight(), 1);
        assert_eq!(and2.expectation(), Rational::new(1, 4));
        assert_eq!(and2.variance(), Rational::new(3, 16));
        let zero = BooleanFunction::constant(2, false).unwrap();
        assert_eq!(zero.weight(), 0);
        assert_eq!(zero.expectation(), Rational::from_integer(0));
        assert_eq!(zero.variance(), Rational::from_integer(0));
        let par = BooleanFunction::parity(3).unwrap();
        assert_eq!(par.weight(), 4);
        assert_eq!(par.expectation(), Rational::new(1, 2));
        assert_eq!(par.variance(), Rational::new(1, 4));
    }

    #[test]
    fn restrict_examples() {
        let f = gs_example();
        let fixed = VariableSubset::from_indices(4, &[1, 2]).unwrap();
        let r = f.restrict(&fixed, &[false, true]).unwrap();
        assert_eq!(r, BooleanFunction::from_anf("x1 + x2", 2).unwrap());

        let same = f.restrict(&VariableSubset::empty(4), &[]).unwrap();
        assert_eq!(same, f);

        let and2 = BooleanFunction::and_all(2).unwrap();
        let r = and2
            .restrict(&VariableSubset::from_indices(2, &[1]).unwrap(), &[false])
            .unwrap();
        assert_eq!(r, BooleanFunction::constant(1, false).unwrap());

        assert!(matches!(
            and2.restrict(&VariableSubset::from_indices(2, &[1]).unwrap(), &[]),
            Err(Error::AssignmentLength { expected: 1, actual: 0 })
        ));
    }

    #[test]
    fn restrict_all_variables_gives_constant() {
        let and2 = BooleanFunction::and_all(2).unwrap();
        let r = and2.restrict(&VariableSubset::full(2), &[true, true]).unwrap();
        assert_eq!(r.n(), 0);
        assert!(r.get(0));
    }

    #[test]
    fn degeneracy_examples() {
        let f = BooleanFunction::from_anf("x1 + x2", 3).unwrap();
        assert!(f.is_degenerate_on(&VariableSubset::from_indices(3, &[3]).unwrap()).unwrap());
        assert!(!gs_example()
            .is_degenerate_on(&VariableSubset::from_indices(4, &[3, 4]).unwrap())
            .unwrap());
        let one = BooleanFunction::constant(3, true).unwrap();
        assert!(one.is_degenerate_on(&VariableSubset::full(3)).unwrap());
        assert_eq!(
            one.is_degenerate_on(&VariableSubset::empty(3)),
            Err(Error::EmptySubset)
        );
    }

    #[test]
    fn subset_points_and_order() {
        let t = VariableSubset::from_indices(4, &[1, 3]).unwrap();
        assert_eq!(t.mask(), 0b0101);
        assert_eq!(t.point(), 0b1010);
        assert_eq!(VariableSubset::from_point(4, 0b1010), t);
        assert_eq!(t.complement().indices(), vec![2, 4]);
        let pairs = VariableSubset::all_of_size(3, 2);
        let listed: Vec<Vec<usize>> = pairs.iter().map(|s| s.indices()).collect();
        assert_eq!(listed, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert!(VariableSubset::new(3, 0b1000).is_err());
        assert!(VariableSubset::from_indices(3, &[4]).is_err());
        assert_eq!(format!("{t}"), "{1,3}");
    }

    #[test]
    fn submask_enumeration() {
        let mut subs: Vec<usize> = submasks(0b101).collect();
        subs.sort();
        assert_eq!(subs, vec![0, 1, 4, 5]);
        assert_eq!(submasks(0).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn relevant_variables() {
        let f = BooleanFunction::from_anf("x1*x3", 4).unwrap();
        assert_eq!(f.relevant_variables().indices(), vec![1, 3]);
        assert!(BooleanFunction::constant(3, true)
            .unwrap()
            .relevant_variables()
            .is_empty());
    }
}
