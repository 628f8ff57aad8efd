//! Searching the two-tree families for non-isomorphic members with equal
//! probability profiles, and checking the known parametrized collisions.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::thread;

use num_rational::{BigRational, Ratio};
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::formulas::{p1_di_in, p1_family, p1_gs_in, p1_gs_plus_in, p1_k4_in, p1_paw_in};
use crate::graph::family::{FamilyKind, FamilySpec};
use crate::graph::iso::{are_isomorphic, ISOMORPHISM_VERTEX_LIMIT};
use crate::process::distribution::{fraction, RationalPair};
use crate::process::{exact_subset_dp, SUBSET_DP_VERTEX_LIMIT};

/// Largest `max_vertices` the formula engine accepts; keeps every
/// intermediate fraction well inside `i128`.
pub const SWEEP_VERTEX_LIMIT: usize = 10_000;

/// The exact sequence `(P(G,1), P(G,2), ...)`, up to the last nonzero term.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProfileKey {
    pub profile: Vec<BigRational>,
}

impl ProfileKey {
    /// `(p1, 1 - p1)`, trimmed if `p1 = 1`.
    pub fn two_tree(p1: BigRational) -> Self {
        let p2 = BigRational::one() - &p1;
        let mut profile = vec![p1];
        if p2 != BigRational::from_integer(0.into()) {
            profile.push(p2);
        }
        ProfileKey { profile }
    }

    pub fn of(spec: &FamilySpec) -> Result<Self> {
        Ok(ProfileKey { profile: p1_family(spec)?.profile() })
    }

    pub fn p1(&self) -> BigRational {
        self.profile.first().cloned().unwrap_or_else(|| BigRational::from_integer(0.into()))
    }
}

impl fmt::Display for ProfileKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.profile.iter().map(fraction).collect();
        write!(f, "{}", parts.join(", "))
    }
}

impl Serialize for ProfileKey {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.profile.iter().map(RationalPair::from))
    }
}

/// Triple of glued stars sharing `P(G,1)`, for `s` dividing `2t(t+1)`.
pub fn fam_a_triple(s: usize, t: usize) -> Result<(FamilySpec, FamilySpec, FamilySpec)> {
    if s == 0 || t == 0 {
        return Err(Error::InvalidArgument(format!("famA needs s, t >= 1 (got s={s}, t={t})")));
    }
    let twice = 2 * t * (t + 1);
    if !twice.is_multiple_of(s) {
        return Err(Error::Divisibility { s, t });
    }
    let r = twice / s;
    Ok((
        FamilySpec::Gs(r + 3 * t + 1, s, t).canonical(),
        FamilySpec::Gs(t, r + s + 2 * t + 1, t).canonical(),
        FamilySpec::Gs(3 * t + s + 1, r, t).canonical(),
    ))
}

/// Pair of glued stars sharing their profile, for `t >= 1`.
pub fn fam_b_pair(t: usize) -> Result<(FamilySpec, FamilySpec)> {
    if t == 0 {
        return Err(Error::InvalidArgument("famB needs t >= 1".into()));
    }
    Ok((
        FamilySpec::Gs(5 * t + 3, t, 2 * t).canonical(),
        FamilySpec::Gs(5 * t + 1, t + 1, 2 * t + 1).canonical(),
    ))
}

/// Every `(s, t)` whose famA triple contains `spec`.
fn fam_a_params(spec: &FamilySpec) -> Vec<(usize, usize)> {
    let FamilySpec::Gs(t, b, c) = spec.canonical() else { return Vec::new() };
    if t == 0 {
        return Vec::new();
    }
    let twice = 2 * t * (t + 1);
    let mut candidates = BTreeSet::new();
    candidates.insert(b);
    if c > 3 * t + 1 {
        candidates.insert(c - 3 * t - 1);
    }
    if c == t {
        candidates.extend((1..=twice).filter(|s| twice % s == 0));
    }
    candidates
        .into_iter()
        .filter(|&s| s >= 1)
        .filter(|&s| match fam_a_triple(s, t) {
            Ok((x, y, z)) => [x, y, z].contains(&spec.canonical()),
            Err(_) => false,
        })
        .map(|s| (s, t))
        .collect()
}

/// The `t` and side (0 or 1) of the famB pair containing `spec`, if any.
fn fam_b_param(spec: &FamilySpec) -> Option<(usize, usize)> {
    let FamilySpec::Gs(_, b, _) = spec.canonical() else { return None };
    let spec = spec.canonical();
    [(b, 0), (b.saturating_sub(1), 1)].into_iter().find(|&(t, side)| match fam_b_pair(t) {
        Ok((x, y)) => spec == if side == 0 { x } else { y },
        Err(_) => false,
    })
}

/// Which known parametrization relates members of a group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Explanation {
    #[serde(rename = "famA")]
    FamA,
    #[serde(rename = "famB")]
    FamB,
    #[serde(rename = "none")]
    None,
}

impl fmt::Display for Explanation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Explanation::FamA => "famA",
            Explanation::FamB => "famB",
            Explanation::None => "none",
        })
    }
}

/// Labels for a group: famA / famB when some pair of members is related
/// that way, plus none when some member is related to no other member.
pub fn explain(members: &[FamilySpec]) -> BTreeSet<Explanation> {
    let a: Vec<Vec<(usize, usize)>> = members.iter().map(fam_a_params).collect();
    let b: Vec<Option<(usize, usize)>> = members.iter().map(fam_b_param).collect();
    let mut labels = BTreeSet::new();
    let mut related = vec![false; members.len()];
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let mut hit = false;
            if a[i].iter().any(|p| a[j].contains(p)) {
                labels.insert(Explanation::FamA);
                hit = true;
            }
            if let (Some((ti, si)), Some((tj, sj))) = (b[i], b[j]) {
                if ti == tj && si != sj {
                    labels.insert(Explanation::FamB);
                    hit = true;
                }
            }
            if hit {
                related[i] = true;
                related[j] = true;
            }
        }
    }
    if related.iter().any(|r| !r) {
        labels.insert(Explanation::None);
    }
    labels
}

/// Whether every pair of members is provably non-isomorphic: by vertex or
/// edge count, degree sequence, or an isomorphism test on small graphs.
pub fn certify_non_isomorphic(members: &[FamilySpec]) -> Result<bool> {
    let graphs = members.iter().map(|s| s.construct()).collect::<Result<Vec<_>>>()?;
    let degrees: Vec<Vec<usize>> = graphs.iter().map(|g| g.degree_sequence()).collect();
    for i in 0..graphs.len() {
        for j in i + 1..graphs.len() {
            let (g, h) = (&graphs[i], &graphs[j]);
            if g.n() != h.n() || g.m() != h.m() || degrees[i] != degrees[j] {
                continue;
            }
            if g.n() > ISOMORPHISM_VERTEX_LIMIT || are_isomorphic(g, h)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Which families a sweep covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SweepFamily {
    Gs,
    GsPlus,
    Paw,
    Di,
    K4,
    All,
}

impl SweepFamily {
    fn covers(self, kind: FamilyKind) -> bool {
        match self {
            SweepFamily::Gs => kind == FamilyKind::Gs,
            SweepFamily::GsPlus => kind == FamilyKind::GsPlus,
            SweepFamily::Paw => kind == FamilyKind::Paw,
            SweepFamily::Di => kind == FamilyKind::Di,
            SweepFamily::K4 => kind == FamilyKind::K4,
            SweepFamily::All => matches!(
                kind,
                FamilyKind::Gs | FamilyKind::GsPlus | FamilyKind::Paw | FamilyKind::Di | FamilyKind::K4
            ),
        }
    }

    /// The tuple enumeration cut into rows (one per first parameter of the
    /// glued stars); rows are the unit of work handed to a thread.
    fn rows(self, max_vertices: usize) -> Vec<Row> {
        let mut rows = Vec::new();
        let kinds: &[SweepFamily] = match self {
            SweepFamily::All => {
                &[SweepFamily::Gs, SweepFamily::GsPlus, SweepFamily::Paw, SweepFamily::Di, SweepFamily::K4]
            }
            _ => std::slice::from_ref(&self),
        };
        for &kind in kinds {
            match kind {
                SweepFamily::Gs | SweepFamily::GsPlus => {
                    rows.extend((0..=max_vertices.saturating_sub(2)).map(|a| Row { kind, a }))
                }
                _ => rows.push(Row { kind, a: 0 }),
            }
        }
        rows
    }
}

impl fmt::Display for SweepFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepFamily::Gs => "gs",
            SweepFamily::GsPlus => "gsplus",
            SweepFamily::Paw => "paw",
            SweepFamily::Di => "di",
            SweepFamily::K4 => "k4",
            SweepFamily::All => "all",
        })
    }
}

impl FromStr for SweepFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "gs" => SweepFamily::Gs,
            "gsplus" | "gs+" => SweepFamily::GsPlus,
            "paw" => SweepFamily::Paw,
            "di" => SweepFamily::Di,
            "k4" => SweepFamily::K4,
            "all" => SweepFamily::All,
            other => return Err(Error::UnknownFamily(other.to_string())),
        })
    }
}

impl Serialize for SweepFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepEngine {
    Formula,
    Dp,
}

impl fmt::Display for SweepEngine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepEngine::Formula => "formula",
            SweepEngine::Dp => "dp",
        })
    }
}

impl FromStr for SweepEngine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "formula" => Ok(SweepEngine::Formula),
            "dp" => Ok(SweepEngine::Dp),
            other => Err(Error::InvalidArgument(format!("unknown sweep engine {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Row {
    kind: SweepFamily,
    a: usize,
}

impl Row {
    /// Canonical specs of this row that belong to the swept family.
    fn specs(self, max_vertices: usize, sweep: SweepFamily, mut f: impl FnMut(FamilySpec)) {
        let mut emit = |spec: FamilySpec| {
            let canon = spec.canonical();
            // aliases are swept under the family they belong to
            if canon == spec && sweep.covers(canon.kind()) {
                f(canon);
            }
        };
        let a = self.a;
        match self.kind {
            SweepFamily::Gs | SweepFamily::GsPlus => {
                // b = 0 (the double star) is outside both glued-star families
                let budget = max_vertices.saturating_sub(2 + a);
                for b in 1..=budget {
                    for c in a..=budget.saturating_sub(b) {
                        if a + b + c + 2 > max_vertices {
                            break;
                        }
                        emit(if self.kind == SweepFamily::Gs {
                            FamilySpec::Gs(a, b, c)
                        } else {
                            FamilySpec::GsPlus(a, b, c)
                        });
                    }
                }
            }
            SweepFamily::Paw => (0..=max_vertices.saturating_sub(4)).for_each(|a| emit(FamilySpec::Paw(a))),
            SweepFamily::Di => (0..=max_vertices.saturating_sub(4)).for_each(|a| emit(FamilySpec::Di(a))),
            SweepFamily::K4 => (0..=max_vertices.saturating_sub(4)).for_each(|a| emit(FamilySpec::K4(a))),
            SweepFamily::All => unreachable!("rows are per family"),
        }
    }
}

type Fast = Ratio<i128>;

fn fast_p1(spec: &FamilySpec) -> Fast {
    let u = |x: usize| x as u64;
    match *spec {
        FamilySpec::Gs(a, b, c) => p1_gs_in::<i128>(u(a), u(b), u(c)),
        FamilySpec::GsPlus(a, b, c) => p1_gs_plus_in::<i128>(u(a), u(b), u(c)),
        FamilySpec::Paw(a) => p1_paw_in::<i128>(u(a)),
        FamilySpec::Di(a) => p1_di_in::<i128>(u(a)),
        FamilySpec::K4(a) => p1_k4_in::<i128>(u(a)),
        _ => unreachable!("sweeps cover two-tree families only"),
    }
}

fn fast_hash(p: &Fast) -> u64 {
    let mut h = DefaultHasher::new();
    p.numer().hash(&mut h);
    p.denom().hash(&mut h);
    h.finish()
}

fn big(p: &Fast) -> BigRational {
    BigRational::new((*p.numer()).into(), (*p.denom()).into())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollisionGroup {
    pub profile: ProfileKey,
    /// Sorted canonical specs.
    pub members: Vec<FamilySpec>,
    pub explained_by: BTreeSet<Explanation>,
    /// False if some pair could not be shown non-isomorphic.
    pub certified: bool,
}

impl fmt::Display for CollisionGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = self.members.iter().map(|m| m.to_string()).collect();
        let labels: Vec<String> = self.explained_by.iter().map(|l| l.to_string()).collect();
        write!(
            f,
            "profile: {} | members: {} | explained_by: {}",
            self.profile,
            members.join(" "),
            labels.join(",")
        )?;
        if !self.certified {
            write!(f, " | uncertified")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollisionReport {
    pub family: SweepFamily,
    pub max_vertices: usize,
    pub engine: SweepEngine,
    pub workers: usize,
    /// Canonical parameter tuples examined.
    pub tuples: u64,
    pub groups: Vec<CollisionGroup>,
}

impl CollisionReport {
    pub fn find(&self, spec: &FamilySpec) -> Option<&CollisionGroup> {
        let spec = spec.canonical();
        self.groups.iter().find(|g| g.members.contains(&spec))
    }

    /// Whether some single group contains every spec in `specs`.
    pub fn has_group_with(&self, specs: &[FamilySpec]) -> bool {
        self.groups
            .iter()
            .any(|g| specs.iter().all(|s| g.members.contains(&s.canonical())))
    }
}

/// Header comment lines, then one group per line.
impl fmt::Display for CollisionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "# family={} max_vertices={} engine={} workers={} tuples={} groups={}",
            self.family,
            self.max_vertices,
            self.engine,
            self.workers,
            self.tuples,
            self.groups.len()
        )?;
        for g in &self.groups {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Runs `work` on rows `w, w + W, ...` for every worker `w` and returns
/// the per-worker results in worker order.
fn split_rows<T: Send>(rows: &[Row], workers: usize, work: impl Fn(Row, &mut Vec<T>) + Sync) -> Vec<T> {
    let parts: Vec<Vec<T>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let work = &work;
                scope.spawn(move || {
                    let mut out = Vec::new();
                    for row in rows.iter().skip(w).step_by(workers) {
                        work(*row, &mut out);
                    }
                    out
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("sweep worker panicked")).collect()
    });
    parts.into_iter().flatten().collect()
}

/// Enumerates every canonical member of `family` with at most
/// `max_vertices` vertices, groups equal profiles, and returns the groups of
/// two or more. The report does not depend on `workers`.
pub fn sweep(family: SweepFamily, max_vertices: usize, engine: SweepEngine, workers: usize) -> Result<CollisionReport> {
    if max_vertices < 4 {
        return Err(Error::InvalidArgument(format!("max_vertices must be at least 4 (got {max_vertices})")));
    }
    let limit = match engine {
        SweepEngine::Formula => SWEEP_VERTEX_LIMIT,
        SweepEngine::Dp => SUBSET_DP_VERTEX_LIMIT,
    };
    if max_vertices > limit {
        return Err(Error::TooManyVertices { vertices: max_vertices, limit });
    }
    let workers = workers.max(1);
    let rows = family.rows(max_vertices);

    let (tuples, buckets) = match engine {
        SweepEngine::Formula => formula_buckets(family, max_vertices, &rows, workers),
        SweepEngine::Dp => dp_buckets(family, max_vertices, &rows, workers)?,
    };

    let mut groups = Vec::new();
    for (profile, mut members) in buckets {
        if members.len() < 2 {
            continue;
        }
        members.sort();
        members.dedup();
        if members.len() < 2 {
            continue;
        }
        groups.push(CollisionGroup {
            profile,
            explained_by: explain(&members),
            certified: certify_non_isomorphic(&members)?,
            members,
        });
    }
    Ok(CollisionReport { family, max_vertices, engine, workers, tuples, groups })
}

/// Two passes: first collect a 64-bit hash of every profile to find the
/// hashes seen more than once, then recompute and keep only those tuples,
/// grouped by their exact profile. Memory stays at 8 bytes per tuple.
fn formula_buckets(
    family: SweepFamily,
    max_vertices: usize,
    rows: &[Row],
    workers: usize,
) -> (u64, BTreeMap<ProfileKey, Vec<FamilySpec>>) {
    let mut hashes: Vec<u64> = split_rows(rows, workers, |row, out| {
        row.specs(max_vertices, family, |spec| out.push(fast_hash(&fast_p1(&spec))))
    });
    let tuples = hashes.len() as u64;
    hashes.sort_unstable();
    let repeated: BTreeSet<u64> = hashes.windows(2).filter(|w| w[0] == w[1]).map(|w| w[0]).collect();
    drop(hashes);

    let mut candidates: Vec<(Fast, FamilySpec)> = split_rows(rows, workers, |row, out| {
        row.specs(max_vertices, family, |spec| {
            let p = fast_p1(&spec);
            if repeated.contains(&fast_hash(&p)) {
                out.push((p, spec));
            }
        })
    });
    candidates.sort();
    let mut buckets: BTreeMap<ProfileKey, Vec<FamilySpec>> = BTreeMap::new();
    for (p, spec) in candidates {
        buckets.entry(ProfileKey::two_tree(big(&p))).or_default().push(spec);
    }
    (tuples, buckets)
}

fn dp_buckets(
    family: SweepFamily,
    max_vertices: usize,
    rows: &[Row],
    workers: usize,
) -> Result<(u64, BTreeMap<ProfileKey, Vec<FamilySpec>>)> {
    let results: Vec<Result<(ProfileKey, FamilySpec)>> = split_rows(rows, workers, |row, out| {
        row.specs(max_vertices, family, |spec| {
            let profile = spec
                .construct()
                .and_then(|g| exact_subset_dp(&g))
                .map(|d| ProfileKey { profile: d.profile() });
            out.push(profile.map(|p| (p, spec)));
        })
    });
    let tuples = results.len() as u64;
    let mut buckets: BTreeMap<ProfileKey, Vec<FamilySpec>> = BTreeMap::new();
    for r in results {
        let (profile, spec) = r?;
        buckets.entry(profile).or_default().push(spec);
    }
    Ok((tuples, buckets))
}

/// One checked identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationItem {
    pub label: String,
    pub members: Vec<FamilySpec>,
    pub profiles: Vec<ProfileKey>,
    /// Every profile is exactly equal to the first.
    pub passed: bool,
}

impl fmt::Display for VerificationItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = self.members.iter().map(|m| m.to_string()).collect();
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} | {}", self.label, members.join(" "))?;
        match self.profiles.first() {
            Some(p) if self.passed => write!(f, " | profile: {p}"),
            _ => {
                let all: Vec<String> = self.profiles.iter().map(|p| format!("[{p}]")).collect();
                write!(f, " | profiles: {}", all.join(" "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationSummary {
    pub max_t: usize,
    pub items: Vec<VerificationItem>,
}

impl VerificationSummary {
    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationItem> {
        self.items.iter().filter(|i| !i.passed)
    }
}

impl fmt::Display for VerificationSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            writeln!(f, "{item}")?;
        }
        let failed = self.failures().count();
        writeln!(f, "# {} checked, {} failed", self.items.len(), failed)
    }
}

type Triple = (usize, usize, usize);

/// Glued stars joined at their centres, listed with equal profiles.
pub const KNOWN_GS_PLUS_PAIRS: [(Triple, Triple); 4] = [
    ((17, 3, 9), (10, 9, 10)),
    ((28, 5, 9), (26, 8, 8)),
    ((103, 15, 48), (63, 71, 32)),
    ((95, 23, 53), (53, 66, 52)),
];

/// Compares the exact profiles of `members`; errors become a failed item.
pub fn verify_group(label: impl Into<String>, members: &[FamilySpec]) -> VerificationItem {
    let profiles: Vec<ProfileKey> = members.iter().filter_map(|m| ProfileKey::of(m).ok()).collect();
    let passed = profiles.len() == members.len() && profiles.windows(2).all(|w| w[0] == w[1]);
    VerificationItem { label: label.into(), members: members.to_vec(), profiles, passed }
}

/// famA triples for all `s, t <= max_t` with `s | 2t(t+1)`, famB pairs for
/// `t <= max_t`, and the listed GS+ pairs.
pub fn verify_known(max_t: usize) -> VerificationSummary {
    let mut items = Vec::new();
    for t in 1..=max_t {
        for s in 1..=max_t {
            if let Ok((x, y, z)) = fam_a_triple(s, t) {
                items.push(verify_group(format!("famA s={s} t={t}"), &[x, y, z]));
            }
        }
    }
    for t in 1..=max_t {
        let (x, y) = fam_b_pair(t).expect("t >= 1");
        items.push(verify_group(format!("famB t={t}"), &[x, y]));
    }
    for ((a, b, c), (d, e, g)) in KNOWN_GS_PLUS_PAIRS {
        items.push(verify_group(
            format!("gsplus {a},{b},{c} / {d},{e},{g}"),
            &[FamilySpec::GsPlus(a, b, c).canonical(), FamilySpec::GsPlus(d, e, g).canonical()],
        ));
    }
    VerificationSummary { max_t, items }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn fam_a_examples() {
        let t11 = fam_a_triple(1, 1).unwrap();
        assert_eq!(t11, (FamilySpec::Gs(1, 1, 8), FamilySpec::Gs(1, 8, 1), FamilySpec::Gs(1, 4, 5)));
        let mut a: Vec<_> = [t11.0, t11.1, t11.2].into();
        let t41 = fam_a_triple(4, 1).unwrap();
        let mut b: Vec<_> = [t41.0, t41.1, t41.2].into();
        a.sort();
        b.sort();
        assert_eq!(a, b);
        assert_eq!(fam_a_triple(3, 1), Err(Error::Divisibility { s: 3, t: 1 }));
        assert_eq!(ProfileKey::of(&t11.0).unwrap().p1(), q(8, 45));
    }

    #[test]
    fn fam_b_examples() {
        assert_eq!(fam_b_pair(1).unwrap(), (FamilySpec::Gs(2, 1, 8), FamilySpec::Gs(3, 2, 6)));
        assert_eq!(fam_b_pair(2).unwrap(), (FamilySpec::Gs(4, 2, 13), FamilySpec::Gs(5, 3, 11)));
        let (x, y) = fam_b_pair(1).unwrap();
        assert_eq!(ProfileKey::of(&x).unwrap().p1(), q(17, 180));
        assert_eq!(ProfileKey::of(&x).unwrap(), ProfileKey::of(&y).unwrap());
    }

    #[test]
    fn parametrization_lookup() {
        let (x, y, z) = fam_a_triple(1, 1).unwrap();
        for m in [x, y, z] {
            assert!(fam_a_params(&m).contains(&(1, 1)), "{m}");
        }
        let (x, y) = fam_b_pair(3).unwrap();
        assert_eq!((fam_b_param(&x), fam_b_param(&y)), (Some((3, 0)), Some((3, 1))));
        assert_eq!(fam_b_param(&FamilySpec::Gs(1, 1, 1)), None);
        assert!(fam_a_params(&FamilySpec::GsPlus(1, 1, 8)).is_empty());
    }

    #[test]
    fn explanation_labels() {
        let (x, y, z) = fam_a_triple(1, 1).unwrap();
        assert_eq!(explain(&[x, y, z]), BTreeSet::from([Explanation::FamA]));
        let (u, v) = fam_b_pair(1).unwrap();
        assert_eq!(explain(&[u, v]), BTreeSet::from([Explanation::FamB]));
        assert_eq!(explain(&[x, y, u]), BTreeSet::from([Explanation::FamA, Explanation::None]));
        let p = [FamilySpec::GsPlus(10, 9, 10), FamilySpec::GsPlus(9, 3, 17)];
        assert_eq!(explain(&p), BTreeSet::from([Explanation::None]));
    }

    #[test]
    fn small_sweeps() {
        let r = sweep(SweepFamily::Gs, 15, SweepEngine::Formula, 1).unwrap();
        let g = r.find(&FamilySpec::Gs(8, 1, 1)).expect("triple found");
        assert!(r.has_group_with(&[FamilySpec::Gs(8, 1, 1), FamilySpec::Gs(1, 8, 1), FamilySpec::Gs(5, 4, 1)]));
        assert!(g.explained_by.contains(&Explanation::FamA));
        assert!(r.groups.iter().all(|g| g.certified && g.members.len() >= 2));
        assert!(sweep(SweepFamily::Paw, 20, SweepEngine::Formula, 1).unwrap().groups.is_empty());
        assert!(sweep(SweepFamily::Di, 50, SweepEngine::Formula, 2).unwrap().groups.is_empty());
    }

    #[test]
    fn sweep_errors() {
        assert_eq!("tree".parse::<SweepFamily>(), Err(Error::UnknownFamily("tree".into())));
        assert!(matches!(sweep(SweepFamily::Gs, 3, SweepEngine::Formula, 1), Err(Error::InvalidArgument(_))));
        assert_eq!(
            sweep(SweepFamily::Gs, 21, SweepEngine::Dp, 1),
            Err(Error::TooManyVertices { vertices: 21, limit: 20 })
        );
    }

    #[test]
    fn known_list_and_negative_control() {
        let summary = verify_known(5);
        assert!(summary.all_passed(), "{summary}");
        assert_eq!(summary.items.iter().filter(|i| i.label.starts_with("gsplus")).count(), 4);
        let bad = verify_group("control", &[FamilySpec::GsPlus(17, 3, 9), FamilySpec::GsPlus(10, 9, 9)]);
        assert!(!bad.passed);
    }

    #[test]
    fn text_form() {
        let r = sweep(SweepFamily::GsPlus, 60, SweepEngine::Formula, 1).unwrap();
        let g = r.find(&FamilySpec::GsPlus(17, 3, 9)).unwrap();
        assert_eq!(g.profile.p1(), q(32, 273));
        assert_eq!(
            g.to_string(),
            "profile: 32/273, 241/273 | members: gsplus:9,3,17 gsplus:10,9,10 | explained_by: none"
        );
    }
}
