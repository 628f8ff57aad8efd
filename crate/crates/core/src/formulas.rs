//! Closed-form probabilities and the binomial identity behind them.
//!
//! Everything is exact. The two-tree formulas are generic over the integer
//! type so the parameter sweep can evaluate them in `i128` while the public
//! API returns big rationals.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::family::FamilySpec;
use crate::process::{exact_subset_dp, TreeDistribution};

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc = C(n, i) here, so the division is exact
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `sum_j C(l - j, m) C(q + j, n)` over every `j` with a nonzero summand,
/// i.e. `-q <= j <= l`. Equals `C(l + q + 1, m + n + 1)`.
pub fn vandermonde_sum(l: u64, m: u64, q: u64, n: u64) -> BigUint {
    (-(q as i64)..=l as i64)
        .map(|j| binomial((l as i64 - j) as u64, m as i64) * binomial((q as i64 + j) as u64, n as i64))
        .sum()
}

fn big(x: &BigUint) -> BigInt {
    BigInt::from(x.clone())
}

/// `P(K_n, k) = multinomial(n-1; n-2k, k, k-1) 2^(n-2k) / C(2n-2, n)`, zero
/// outside `1 <= k <= n/2`.
pub fn p_complete(n: u64, k: u64) -> BigRational {
    if k == 0 || 2 * k > n {
        return BigRational::zero();
    }
    // multinomial as C(n-1, k) * C(n-1-k, k-1)
    let multinomial = binomial(n - 1, k as i64) * binomial(n - 1 - k, k as i64 - 1);
    let numer = multinomial << (n - 2 * k) as usize;
    BigRational::new(big(&numer), big(&binomial(2 * n - 2, n as i64)))
}

/// The complete-bipartite formula exactly as published,
/// `(s+t) C(s,k) C(t,k) / (s t C(s+t, s))`.
///
/// This does not sum to one (for `K_{2,2}` it gives `2/3 + 1/6`); see
/// [`audit_complete_bipartite`]. Zero when `s` or `t` is zero.
pub fn p_complete_bipartite(s: u64, t: u64, k: u64) -> BigRational {
    if s == 0 || t == 0 {
        return BigRational::zero();
    }
    let numer = BigUint::from(s + t) * binomial(s, k as i64) * binomial(t, k as i64);
    let denom = BigUint::from(s * t) * binomial(s + t, s as i64);
    BigRational::new(big(&numer), big(&denom))
}

/// Published formula against the subset DP for one `K_{s,t}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteAudit {
    pub s: u64,
    pub t: u64,
    /// `(k, formula value)` for `1 <= k <= min(s, t)`.
    pub formula: Vec<(u64, BigRational)>,
    pub formula_sum: BigRational,
    pub oracle: TreeDistribution,
    /// Values of `k` where formula and oracle differ.
    pub mismatches: Vec<u64>,
}

impl BipartiteAudit {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Audits every `K_{s,t}` with `1 <= s <= t` and `s + t <= max_total`.
pub fn audit_complete_bipartite(max_total: u64) -> Result<Vec<BipartiteAudit>> {
    let mut rows = Vec::new();
    for s in 1..max_total {
        for t in s..=max_total - s {
            let g = FamilySpec::CompleteBipartite(s as usize, t as usize).construct()?;
            let oracle = exact_subset_dp(&g)?;
            let formula: Vec<(u64, BigRational)> =
                (1..=s.min(t)).map(|k| (k, p_complete_bipartite(s, t, k))).collect();
            let formula_sum = formula.iter().fold(BigRational::zero(), |acc, (_, p)| acc + p);
            let mismatches = formula
                .iter()
                .filter(|(k, p)| oracle.get(*k as usize) != *p)
                .map(|(k, _)| *k)
                .collect();
            rows.push(BipartiteAudit { s, t, formula, formula_sum, oracle, mismatches });
        }
    }
    Ok(rows)
}

fn frac<T: Integer + Clone + From<u64>>(n: u64, d: u64) -> Ratio<T> {
    Ratio::new(T::from(n), T::from(d))
}

pub(crate) fn p1_gs_in<T: Integer + Clone + From<u64>>(a: u64, b: u64, c: u64) -> Ratio<T> {
    frac::<T>(b, (b + c + 1) * (b + c)) + frac::<T>(b, (a + b + 1) * (a + b))
}

pub(crate) fn p1_gs_plus_in<T: Integer + Clone + From<u64>>(a: u64, b: u64, c: u64) -> Ratio<T> {
    frac::<T>(2 * b + c + 2, (b + c + 1) * (b + c + 2)) + frac::<T>(2 * b + a + 2, (b + a + 1) * (b + a + 2))
        - frac::<T>(1, a + 2 * b + c + 1)
}

pub(crate) fn p1_paw_in<T: Integer + Clone + From<u64>>(a: u64) -> Ratio<T> {
    frac::<T>(1, 6) - frac::<T>(1, a + 3) + frac::<T>(1, a + 1)
}

pub(crate) fn p1_di_in<T: Integer + Clone + From<u64>>(a: u64) -> Ratio<T> {
    frac::<T>(3, 10) - frac::<T>(2, a + 4) + frac::<T>(2, a + 2)
}

pub(crate) fn p1_k4_in<T: Integer + Clone + From<u64>>(a: u64) -> Ratio<T> {
    frac::<T>(2, 5) - frac::<T>(3, a + 5) + frac::<T>(3, a + 3)
}

/// `P(GS_{a,b,c}, 1) = b/((b+c+1)(b+c)) + b/((a+b+1)(a+b))`; needs `b >= 1`.
pub fn p1_gs(a: u64, b: u64, c: u64) -> Result<BigRational> {
    if b == 0 {
        return Err(Error::InvalidFamily(format!("gs:{a},{b},{c}: glued stars need b >= 1")));
    }
    Ok(p1_gs_in::<BigInt>(a, b, c))
}

/// `P(GS+_{a,b,c}, 1)`, the three-term formula. Also valid for `b = 0`
/// (two stars joined at their centres).
pub fn p1_gs_plus(a: u64, b: u64, c: u64) -> Result<BigRational> {
    Ok(p1_gs_plus_in::<BigInt>(a, b, c))
}

pub fn p1_paw(a: u64) -> BigRational {
    p1_paw_in::<BigInt>(a)
}

pub fn p1_di(a: u64) -> BigRational {
    p1_di_in::<BigInt>(a)
}

pub fn p1_k4(a: u64) -> BigRational {
    p1_k4_in::<BigInt>(a)
}

fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// One half of the unsimplified `P(GS, 2)` expression: orderings whose first
/// edge lies in the star with `own` private leaves, before the correction
/// for the empty prefix. `extra` is 1 when the centre-centre edge exists.
fn first_side_sum(own: u64, b: u64, other: u64, extra: u64) -> BigRational {
    let m = own + 2 * b + other + extra;
    let total = factorial(m);
    let mut acc = BigUint::zero();
    for i in 0..=b {
        for j in 0..=own {
            let rest = m - i - j - 1;
            acc += binomial(own, j as i64)
                * binomial(b, i as i64)
                * factorial(i + j)
                * BigUint::from(b + other - i)
                * factorial(rest);
        }
    }
    BigRational::new(big(&acc), big(&total))
}

/// `P(GS_{a,b,c}, 2)` by the double sums over the number of leaf (`j`) and
/// glue (`i`) edges drawn from one star before the first edge of the other,
/// minus the empty-prefix terms. Should equal `1 - p1_gs(a, b, c)`.
pub fn p2_gs_double_sum(a: u64, b: u64, c: u64) -> Result<BigRational> {
    if b == 0 {
        return Err(Error::InvalidFamily(format!("gs:{a},{b},{c}: glued stars need b >= 1")));
    }
    let m = a + 2 * b + c;
    Ok(first_side_sum(a, b, c, 0) - frac::<BigInt>(b + c, m) + first_side_sum(c, b, a, 0)
        - frac::<BigInt>(a + b, m))
}

/// The `GS+` analogue of [`p2_gs_double_sum`]: one more edge in the total
/// and in the tail factorial, and the correction terms over `m + 1`.
pub fn p2_gs_plus_double_sum(a: u64, b: u64, c: u64) -> BigRational {
    let m = a + 2 * b + c + 1;
    first_side_sum(a, b, c, 1) - frac::<BigInt>(b + c, m) + first_side_sum(c, b, a, 1) - frac::<BigInt>(a + b, m)
}

fn two_trees(p1: BigRational) -> TreeDistribution {
    let p2 = BigRational::one() - &p1;
    TreeDistribution::from_entries([(1, p1), (2, p2)])
}

/// Full distribution of a family member from its closed form.
///
/// `CompleteBipartite(s, t)` is answered only when it is a star or a
/// `K_{2,t} = GS_{0,t,0}`; the published general formula does not
/// normalise, so other sizes return [`Error::NoClosedForm`].
pub fn p1_family(spec: &FamilySpec) -> Result<TreeDistribution> {
    spec.validate()?;
    let u = |x: usize| x as u64;
    Ok(match *spec {
        FamilySpec::Star(_) | FamilySpec::Triangle => TreeDistribution::certain(1),
        FamilySpec::Gs(a, b, c) => two_trees(p1_gs(u(a), u(b), u(c))?),
        FamilySpec::GsPlus(a, b, c) => two_trees(p1_gs_plus(u(a), u(b), u(c))?),
        FamilySpec::Paw(a) => two_trees(p1_paw(u(a))),
        FamilySpec::Di(a) => two_trees(p1_di(u(a))),
        FamilySpec::K4(a) => two_trees(p1_k4(u(a))),
        FamilySpec::Complete(n) => {
            TreeDistribution::from_entries((1..=n / 2).map(|k| (k, p_complete(u(n), u(k)))))
        }
        FamilySpec::CompleteBipartite(..) => match spec.canonical() {
            FamilySpec::CompleteBipartite(s, t) => {
                return Err(Error::NoClosedForm(format!(
                    "kst:{s},{t}: the published K_(s,t) formula is not normalised; use the dp engine"
                )))
            }
            other => return p1_family(&other),
        },
    })
}
