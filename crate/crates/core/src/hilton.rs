//! Hilton-Milnor sphere counts for wedges of odd spheres.
//!
//! `Omega(S^{n_1} v ... v S^{n_k})` splits as a product of loop spaces of
//! spheres, one per basic product `w`, of dimension `sum_i a_i(w)(n_i - 1) + 1`.
//! The number of basic products of weight `w` on `k` letters is Witt's
//! necklace count `(1/w) sum_{d | w} mu(d) k^(w/d)`.
//!
//! All counts are exact and generic over the integer type, so callers can pick
//! `u64` for speed or `BigUint` when the counts outgrow machine words.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, FromPrimitive, ToPrimitive};

use crate::complex::FaceRingPresentation;
use crate::error::{invalid, Error, Result};

/// Unsigned exact integer type used for multiplicities.
pub trait Count:
    Clone + Ord + fmt::Debug + fmt::Display + Integer + CheckedAdd + CheckedMul + FromPrimitive + ToPrimitive
{
}

impl<T> Count for T where
    T: Clone + Ord + fmt::Debug + fmt::Display + Integer + CheckedAdd + CheckedMul + FromPrimitive + ToPrimitive
{
}

fn lift<T: Count>(x: u64) -> Result<T> {
    T::from_u64(x).ok_or(Error::Overflow("integer conversion"))
}

fn add<T: Count>(a: &T, b: &T) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow("sum"))
}

fn mul<T: Count>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow("product"))
}

fn pow<T: Count>(base: u64, exp: u64) -> Result<T> {
    let base = lift::<T>(base)?;
    (0..exp).try_fold(T::one(), |acc, _| mul(&acc, &base))
}

/// Exact `a / b`, failing if `b` does not divide `a`.
fn exact_div<T: Count>(a: &T, b: &T, what: &str) -> Result<T> {
    let (q, r) = a.div_rem(b);
    if !r.is_zero() {
        return Err(Error::Arithmetic(format!("{what}: {a} is not divisible by {b}")));
    }
    Ok(q)
}

pub(crate) fn divisors(n: u64) -> impl Iterator<Item = u64> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}

/// Möbius function.
pub fn moebius(n: u64) -> Result<i8> {
    if n < 1 {
        return invalid("the Möbius function is defined for n >= 1");
    }
    let mut rest = n;
    let mut sign = 1i8;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            rest /= p;
            if rest.is_multiple_of(p) {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if rest > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// Collects `sum mu(d) * term(d)` over the given divisors as a nonnegative
/// value, keeping positive and negative parts apart so unsigned types work.
fn moebius_sum<T: Count>(
    divs: impl Iterator<Item = u64>,
    mut term: impl FnMut(u64) -> Result<T>,
) -> Result<T> {
    let (mut plus, mut minus) = (T::zero(), T::zero());
    for d in divs {
        match moebius(d)? {
            0 => {}
            1 => plus = add(&plus, &term(d)?)?,
            _ => minus = add(&minus, &term(d)?)?,
        }
    }
    if plus < minus {
        return Err(Error::Arithmetic(format!("Möbius sum is negative ({plus} - {minus})")));
    }
    Ok(plus - minus)
}

/// Number of basic products of weight `w` on `k` generators.
pub fn basic_product_count<T: Count>(k: u64, w: u64) -> Result<T> {
    if k < 1 || w < 1 {
        return invalid(format!("basic product counts need k >= 1 and w >= 1, got k = {k}, w = {w}"));
    }
    let total = moebius_sum(divisors(w), |d| pow::<T>(k, w / d))?;
    exact_div(&total, &lift(w)?, "Witt formula")
}

fn binomial<T: Count>(n: u64, k: u64) -> Result<T> {
    let mut r = T::one();
    for i in 0..k {
        r = mul(&r, &lift(n - i)?)?;
        r = exact_div(&r, &lift(i + 1)?, "binomial")?;
    }
    Ok(r)
}

fn multinomial<T: Count>(parts: &[u64]) -> Result<T> {
    let mut total = 0;
    let mut r = T::one();
    for &p in parts {
        total += p;
        r = mul(&r, &binomial(total, p)?)?;
    }
    Ok(r)
}

/// Number of basic products with `a[i]` occurrences of generator `i`.
pub fn multigraded_basic_count<T: Count>(a: &[u64]) -> Result<T> {
    let weight: u64 = a.iter().sum();
    if weight == 0 {
        return invalid("exponent vector must have positive total weight");
    }
    let g = a.iter().fold(0, |g, &x| g.gcd(&x));
    let total = moebius_sum(divisors(g), |d| {
        let scaled: Vec<u64> = a.iter().map(|x| x / d).collect();
        multinomial::<T>(&scaled)
    })?;
    exact_div(&total, &lift(weight)?, "multigraded Witt formula")
}

/// Sphere dimension -> multiplicity, complete for all dimensions up to `ceiling`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereSpectrum<T> {
    entries: BTreeMap<u64, T>,
    ceiling: u64,
}

impl<T: Count> SphereSpectrum<T> {
    pub fn entries(&self) -> &BTreeMap<u64, T> {
        &self.entries
    }

    pub fn ceiling(&self) -> u64 {
        self.ceiling
    }

    pub fn multiplicity(&self, dim: u64) -> T {
        self.entries.get(&dim).cloned().unwrap_or_else(T::zero)
    }

    fn bump(&mut self, dim: u64, by: T) -> Result<()> {
        if by.is_zero() {
            return Ok(());
        }
        let slot = self.entries.entry(dim).or_insert_with(T::zero);
        *slot = add(slot, &by)?;
        Ok(())
    }
}

impl<T: Count> fmt::Display for SphereSpectrum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (dim, mult) in &self.entries {
            if !first {
                f.write_str(" x ")?;
            }
            first = false;
            write!(f, "(S^{dim})^{mult}")?;
        }
        if first {
            f.write_str("*")?;
        }
        write!(f, "  [dims <= {}]", self.ceiling)
    }
}

fn check_sphere_dim(dim: u64) -> Result<()> {
    if dim.is_multiple_of(2) {
        return Err(Error::Unsupported(format!(
            "even-dimensional sphere S^{dim}; only odd spheres are modeled"
        )));
    }
    if dim < 3 {
        return invalid(format!("sphere dimension must be at least 3, got {dim}"));
    }
    Ok(())
}

/// Hilton-Milnor spectrum of `count` copies of `S^sphere_dim`, truncated at `ceiling`.
pub fn wedge_spectrum<T: Count>(count: u64, sphere_dim: u64, ceiling: u64) -> Result<SphereSpectrum<T>> {
    check_sphere_dim(sphere_dim)?;
    if count < 1 {
        return invalid("a wedge needs at least one sphere");
    }
    let mut spectrum = SphereSpectrum {
        entries: BTreeMap::new(),
        ceiling,
    };
    let step = sphere_dim - 1;
    for w in (1..).take_while(|w| step * w < ceiling) {
        spectrum.bump(step * w + 1, basic_product_count(count, w)?)?;
    }
    Ok(spectrum)
}

/// Partitions of `total` into at most `max_len` parts, each at most `max_part`, parts nonincreasing.
fn partitions(total: u64, max_part: u64, max_len: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if total == 0 {
        out.push(prefix.clone());
        return;
    }
    if max_len == 0 {
        return;
    }
    for part in (1..=max_part.min(total)).rev() {
        prefix.push(part);
        partitions(total - part, part, max_len - 1, prefix, out);
        prefix.pop();
    }
}

/// Number of exponent vectors on `slots` generators whose nonzero entries are `parts`.
fn arrangements<T: Count>(slots: u64, parts: &[u64]) -> Result<T> {
    let mut r = T::one();
    for i in 0..parts.len() as u64 {
        r = mul(&r, &lift(slots - i)?)?;
    }
    let mut start = 0;
    while start < parts.len() {
        let run = parts[start..].iter().take_while(|&&p| p == parts[start]).count();
        for f in 1..=run as u64 {
            r = exact_div(&r, &lift(f)?, "arrangement count")?;
        }
        start += run;
    }
    Ok(r)
}

/// Hilton-Milnor spectrum of a wedge of odd spheres of possibly different dimensions.
///
/// Generators of equal dimension are grouped, so the work depends on the
/// number of distinct dimensions rather than the number of spheres.
pub fn mixed_wedge_spectrum<T: Count>(dims: &[u64], ceiling: u64) -> Result<SphereSpectrum<T>> {
    let mut classes: BTreeMap<u64, u64> = BTreeMap::new();
    for &d in dims {
        check_sphere_dim(d)?;
        *classes.entry(d - 1).or_default() += 1;
    }
    let classes: Vec<(u64, u64)> = classes.into_iter().collect();
    let mut spectrum = SphereSpectrum {
        entries: BTreeMap::new(),
        ceiling,
    };
    if ceiling == 0 {
        return Ok(spectrum);
    }

    struct Walk<'a> {
        classes: &'a [(u64, u64)],
    }

    impl Walk<'_> {
        /// Chooses an exponent partition for class `idx` onward; `parts` holds the
        /// exponents picked so far and `ways` the number of generator assignments.
        fn go<T: Count>(
            &self,
            idx: usize,
            budget: u64,
            grade: u64,
            parts: &mut Vec<u64>,
            ways: T,
            spectrum: &mut SphereSpectrum<T>,
        ) -> Result<()> {
            if idx == self.classes.len() {
                if !parts.is_empty() {
                    let count = mul(&multigraded_basic_count::<T>(parts)?, &ways)?;
                    spectrum.bump(grade + 1, count)?;
                }
                return Ok(());
            }
            let (step, slots) = self.classes[idx];
            for weight in 0..=budget / step {
                let mut options = Vec::new();
                partitions(weight, weight, slots, &mut Vec::new(), &mut options);
                for lambda in options {
                    let here = mul(&ways, &arrangements::<T>(slots, &lambda)?)?;
                    let mark = parts.len();
                    parts.extend_from_slice(&lambda);
                    self.go(idx + 1, budget - weight * step, grade + weight * step, parts, here, spectrum)?;
                    parts.truncate(mark);
                }
            }
            Ok(())
        }
    }

    Walk { classes: &classes }.go(0, ceiling - 1, 0, &mut Vec::new(), T::one(), &mut spectrum)?;
    Ok(spectrum)
}

/// Rank of `pi_q` tensored with the rationals for the product of spheres in `s`.
/// Each odd sphere `S^D` contributes rank one in degree `D` only.
pub fn rational_rank_wedge<T: Count>(s: &SphereSpectrum<T>, q: u64) -> Result<T> {
    if q > s.ceiling {
        return Err(Error::OutOfRange {
            what: "homotopy degree",
            value: q as i64,
            lo: 0,
            hi: s.ceiling as i64,
        });
    }
    Ok(s.multiplicity(q))
}

/// Wedge-of-spheres model for the homotopy of the Borel space (and hence of
/// the moment-angle complex) in degrees `3..=q_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeModel<T> {
    pub spectrum: SphereSpectrum<T>,
    /// Dimensions of the wedge summands, one per ideal generator.
    pub sphere_dims: Vec<u64>,
    pub facet_count: usize,
    pub q_max: u64,
    pub rmin: u64,
}

impl<T: Count> WedgeModel<T> {
    /// `pi_2` has rank equal to the number of facets.
    pub fn degree_two_rank(&self) -> usize {
        self.facet_count
    }

    pub fn rational_rank(&self, q: u64) -> Result<T> {
        if q < 3 || q > self.q_max {
            return Err(Error::OutOfRange {
                what: "homotopy degree",
                value: q as i64,
                lo: 3,
                hi: self.q_max as i64,
            });
        }
        rational_rank_wedge(&self.spectrum, q)
    }
}

/// Builds the wedge `V_j S^{|r_j| - 1}` over the ideal generators, valid up to `rmin - 2`.
pub fn borel_model<T: Count>(ring: &FaceRingPresentation, rmin: u64) -> Result<WedgeModel<T>> {
    if ring.len() < 2 {
        return Err(Error::NoRelations(ring.len()));
    }
    if rmin < 2 {
        return invalid(format!("relation degree must be at least 2, got {rmin}"));
    }
    let sphere_dims: Vec<u64> = ring.generators().iter().map(|g| g.degree() as u64 - 1).collect();
    let q_max = rmin - 2;
    Ok(WedgeModel {
        spectrum: mixed_wedge_spectrum(&sphere_dims, q_max)?,
        sphere_dims,
        facet_count: ring.variable_count(),
        q_max,
        rmin,
    })
}
