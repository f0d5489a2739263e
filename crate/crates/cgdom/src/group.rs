//! Finite groups as Cayley tables, plus the group-theoretic queries the
//! domination bounds consume: centralizers, centers, maximal cyclic subgroups,
//! AC-ness, nilpotent (Sylow) decompositions.

use crate::mask::SubsetMask;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::borrow::Cow;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::path::Path;

/// Orders above this are rejected at construction; O(n^2) tables and
/// O(n^2)-O(n^3) scans stay desk-scale below it.
pub const DEFAULT_GROUP_CAP: usize = 4096;

/// Hard ceiling implied by the u16 element indices.
pub const MAX_GROUP_CAP: usize = u16::MAX as usize + 1;

const ASSOC_SAMPLE_TRIPLES: usize = 100_000;
const ASSOC_EXHAUSTIVE_LIMIT: usize = 512;
const ASSOC_SAMPLE_SEED: u64 = 0xA550C;
const MAX_REPORTED_VIOLATIONS: usize = 64;

#[derive(Debug, thiserror::Error)]
pub enum GroupError {
    #[error("group order {order} exceeds cap {cap}")]
    SizeLimit { order: usize, cap: usize },
    #[error("malformed table: {0}")]
    BadTable(String),
    #[error("not a group ({} violations; first: {})", .0.len(), .0.first().map(String::as_str).unwrap_or(""))]
    NotAGroup(Vec<String>),
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("expected an abelian group, got {0}")]
    NotAbelian(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
}

/// A finite group given by its full multiplication table.
///
/// Elements are indices `0..order`; labels are presentation-only and never
/// affect computation. Immutable after construction, safe to share across
/// threads.
#[derive(Clone)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u16>,
    identity: usize,
    inverse: Vec<u16>,
    labels: Option<Vec<String>>,
    descriptor: String,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupTable({}, order {})", self.descriptor, self.order)
    }
}

/// On-disk group format: `name`, `order`, row-major `table`, optional `labels`.
#[derive(Serialize, Deserialize)]
struct GroupFile {
    name: String,
    order: usize,
    table: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl GroupTable {
    /// Builds a table from row-major entries without checking the group axioms.
    ///
    /// Shape problems (size, cap, out-of-range entries) are errors; axiom
    /// violations are not — they are reported by [`GroupTable::validate`],
    /// which callers of untrusted tables must consult. If no two-sided
    /// identity exists, element 0 stands in so that `validate` can report it.
    pub fn from_rows(
        descriptor: impl Into<String>,
        rows: &[Vec<usize>],
        labels: Option<Vec<String>>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::BadTable("empty table".into()));
        }
        if order > cap.min(MAX_GROUP_CAP) {
            return Err(GroupError::SizeLimit { order, cap: cap.min(MAX_GROUP_CAP) });
        }
        let mut mul = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::BadTable(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for &v in row {
                if v >= order {
                    return Err(GroupError::BadTable(format!(
                        "entry {v} out of range in row {i}"
                    )));
                }
                mul.push(v as u16);
            }
        }
        if let Some(ref l) = labels {
            if l.len() != order {
                return Err(GroupError::BadTable(format!(
                    "{} labels for {order} elements",
                    l.len()
                )));
            }
        }
        Ok(Self::assemble(descriptor.into(), order, mul, labels))
    }

    /// Internal constructor from a flat table already known to be in range.
    pub(crate) fn from_flat(
        descriptor: String,
        order: usize,
        mul: Vec<u16>,
        labels: Option<Vec<String>>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        if order > cap.min(MAX_GROUP_CAP) {
            return Err(GroupError::SizeLimit { order, cap: cap.min(MAX_GROUP_CAP) });
        }
        debug_assert_eq!(mul.len(), order * order);
        Ok(Self::assemble(descriptor, order, mul, labels))
    }

    fn assemble(descriptor: String, order: usize, mul: Vec<u16>, labels: Option<Vec<String>>) -> Self {
        let at = |a: usize, b: usize| mul[a * order + b] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .unwrap_or(0);
        let inverse = (0..order)
            .map(|x| {
                (0..order)
                    .find(|&y| at(x, y) == identity)
                    .unwrap_or(x) as u16
            })
            .collect();
        GroupTable {
            order,
            mul,
            identity,
            inverse,
            labels,
            descriptor,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x] as usize
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> Cow<'_, str> {
        match &self.labels {
            Some(l) => Cow::Borrowed(&l[x]),
            None => Cow::Owned(format!("g{x}")),
        }
    }

    #[inline]
    pub fn commutes(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    /// All group-axiom violations: Latin-square rows/columns, identity,
    /// inverses, associativity. Empty result certifies a group.
    ///
    /// Associativity is scanned exhaustively for orders <= 512 and by a fixed
    /// seeded sample of 100 000 triples above that. At most 64 violations are
    /// listed verbatim; a final summary entry counts the rest.
    pub fn validate(&self) -> Vec<String> {
        let n = self.order;
        let mut out = Vec::new();
        let mut extra = 0usize;
        let mut push = |out: &mut Vec<String>, s: String| {
            if out.len() < MAX_REPORTED_VIOLATIONS {
                out.push(s);
            } else {
                extra += 1;
            }
        };
        let mut seen = vec![false; n];
        for r in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for c in 0..n {
                seen[self.mul(r, c)] = true;
            }
            if seen.iter().any(|&s| !s) {
                push(&mut out, format!("row {r} is not a permutation"));
            }
        }
        for c in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for r in 0..n {
                seen[self.mul(r, c)] = true;
            }
            if seen.iter().any(|&s| !s) {
                push(&mut out, format!("column {c} is not a permutation"));
            }
        }
        let e = self.identity;
        for x in 0..n {
            if self.mul(e, x) != x || self.mul(x, e) != x {
                push(&mut out, format!("identity violated at {x}"));
            }
        }
        for x in 0..n {
            if self.mul(x, self.inverse(x)) != e {
                push(&mut out, format!("inverse violated at {x}"));
            }
        }
        let mut assoc = |a: usize, b: usize, c: usize, out: &mut Vec<String>| {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                push(out, format!("associativity violated at ({a},{b},{c})"));
            }
        };
        if n <= ASSOC_EXHAUSTIVE_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        assoc(a, b, c, &mut out);
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(ASSOC_SAMPLE_SEED);
            for _ in 0..ASSOC_SAMPLE_TRIPLES {
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                let c = rng.gen_range(0..n);
                assoc(a, b, c, &mut out);
            }
        }
        if extra > 0 {
            out.push(format!("... and {extra} further violations"));
        }
        out
    }

    /// C(x) = {y : xy = yx}.
    pub fn centralizer(&self, x: usize) -> SubsetMask {
        assert!(x < self.order, "element index {x} out of range");
        SubsetMask::from_indices(self.order, (0..self.order).filter(|&y| self.commutes(x, y)))
    }

    /// Z(G), the intersection of all centralizers.
    pub fn center(&self) -> SubsetMask {
        SubsetMask::from_indices(
            self.order,
            (0..self.order).filter(|&x| (0..self.order).all(|y| self.commutes(x, y))),
        )
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (x + 1..self.order).all(|y| self.commutes(x, y)))
    }

    /// Smallest k >= 1 with x^k = e.
    pub fn element_order(&self, x: usize) -> usize {
        assert!(x < self.order, "element index {x} out of range");
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// The cyclic subgroup generated by x, as a mask.
    pub fn cyclic_subgroup(&self, x: usize) -> SubsetMask {
        let mut m = SubsetMask::singleton(self.order, self.identity);
        let mut y = x;
        while !m.contains(y) {
            m.insert(y);
            y = self.mul(y, x);
        }
        m
    }

    /// Map from element count to number of elements of that order.
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for x in 0..self.order {
            *h.entry(self.element_order(x)).or_insert(0) += 1;
        }
        h
    }

    /// Cyclic subgroups not properly contained in any other cyclic subgroup.
    /// Every element lies in at least one of them.
    pub fn maximal_cyclic_subgroups(&self) -> MaximalCyclicSubgroups {
        let mut distinct: Vec<SubsetMask> = Vec::new();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        for x in 0..self.order {
            let m = self.cyclic_subgroup(x);
            if seen.insert(m.to_vec()) {
                distinct.push(m);
            }
        }
        let maximal: Vec<SubsetMask> = distinct
            .iter()
            .filter(|m| {
                !distinct
                    .iter()
                    .any(|o| *m != o && m.is_subset_of(o))
            })
            .cloned()
            .collect();
        let center = self.center();
        let contained_in_center = maximal.iter().filter(|m| m.is_subset_of(&center)).count();
        MaximalCyclicSubgroups {
            subgroups: maximal,
            contained_in_center,
        }
    }

    /// Deduplicated {C(x) : x in G}, in first-occurrence order of x.
    pub fn distinct_centralizers(&self) -> Vec<SubsetMask> {
        let mut out = Vec::new();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        for x in 0..self.order {
            let c = self.centralizer(x);
            if seen.insert(c.to_vec()) {
                out.push(c);
            }
        }
        out
    }

    /// Does the given subset commute elementwise?
    pub fn subset_is_abelian(&self, subset: &SubsetMask) -> bool {
        let members = subset.to_vec();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                if !self.commutes(x, y) {
                    return false;
                }
            }
        }
        true
    }

    /// Is the subset closed under multiplication (hence a subgroup)?
    pub fn subset_is_subgroup(&self, subset: &SubsetMask) -> bool {
        if !subset.contains(self.identity) {
            return false;
        }
        let members = subset.to_vec();
        members
            .iter()
            .all(|&x| members.iter().all(|&y| subset.contains(self.mul(x, y))))
    }

    /// True iff every centralizer of a noncentral element is abelian.
    /// Abelian groups return true vacuously.
    pub fn is_ac_group(&self) -> bool {
        let center = self.center();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        for x in 0..self.order {
            if center.contains(x) {
                continue;
            }
            let c = self.centralizer(x);
            if seen.insert(c.to_vec()) && !self.subset_is_abelian(&c) {
                return false;
            }
        }
        true
    }

    /// Closure of a subset under multiplication.
    pub fn closure(&self, seed: &SubsetMask) -> SubsetMask {
        let mut m = seed.clone();
        m.insert(self.identity);
        let mut frontier: Vec<usize> = m.to_vec();
        while let Some(x) = frontier.pop() {
            for y in m.to_vec() {
                for z in [self.mul(x, y), self.mul(y, x)] {
                    if !m.contains(z) {
                        m.insert(z);
                        frontier.push(z);
                    }
                }
            }
        }
        m
    }

    /// Sylow decomposition test: for each prime p | n, the elements of p-power
    /// order must form a subgroup. For Cayley-table groups this characterizes
    /// nilpotence; the masks returned are the (normal) Sylow subgroups.
    pub fn nilpotent_decomposition(&self) -> Option<Vec<(u64, SubsetMask)>> {
        let n = self.order as u64;
        if n == 1 {
            return Some(Vec::new());
        }
        let orders: Vec<usize> = (0..self.order).map(|x| self.element_order(x)).collect();
        let mut out = Vec::new();
        let mut product = 1u64;
        for p in prime_factors(n) {
            let mask = SubsetMask::from_indices(
                self.order,
                (0..self.order).filter(|&x| is_power_of(orders[x] as u64, p)),
            );
            if !self.subset_is_subgroup(&mask) {
                return None;
            }
            product *= mask.len() as u64;
            out.push((p, mask));
        }
        if product != n {
            return None;
        }
        Some(out)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotent_decomposition().is_some()
    }

    /// Componentwise product on pairs, row-major by the left factor.
    pub fn direct_product(a: &GroupTable, b: &GroupTable, cap: usize) -> Result<GroupTable, GroupError> {
        let order = a
            .order
            .checked_mul(b.order)
            .ok_or(GroupError::SizeLimit { order: usize::MAX, cap })?;
        if order > cap.min(MAX_GROUP_CAP) {
            return Err(GroupError::SizeLimit { order, cap: cap.min(MAX_GROUP_CAP) });
        }
        let nb = b.order;
        let mut mul = vec![0u16; order * order];
        for a1 in 0..a.order {
            for b1 in 0..b.order {
                let row = a1 * nb + b1;
                for a2 in 0..a.order {
                    let am = a.mul(a1, a2);
                    for b2 in 0..b.order {
                        mul[row * order + a2 * nb + b2] = (am * nb + b.mul(b1, b2)) as u16;
                    }
                }
            }
        }
        let labels = Some(
            (0..a.order)
                .flat_map(|x| {
                    (0..b.order).map(move |y| (x, y))
                })
                .map(|(x, y)| format!("({},{})", a.label(x), b.label(y)))
                .collect(),
        );
        GroupTable::from_flat(
            format!("direct({},{})", a.descriptor, b.descriptor),
            order,
            mul,
            labels,
            cap,
        )
    }

    /// Extracts the Cayley table of a subgroup given by a closed mask.
    /// Elements are re-indexed in ascending order of their original index.
    pub fn subgroup_table(&self, subset: &SubsetMask, descriptor: impl Into<String>) -> GroupTable {
        assert!(
            self.subset_is_subgroup(subset),
            "subgroup_table requires a multiplicatively closed subset"
        );
        let members = subset.to_vec();
        let mut local = vec![u16::MAX; self.order];
        for (i, &x) in members.iter().enumerate() {
            local[x] = i as u16;
        }
        let m = members.len();
        let mut mul = vec![0u16; m * m];
        for (i, &x) in members.iter().enumerate() {
            for (j, &y) in members.iter().enumerate() {
                mul[i * m + j] = local[self.mul(x, y)];
            }
        }
        let labels = Some(members.iter().map(|&x| self.label(x).into_owned()).collect());
        GroupTable::from_flat(descriptor.into(), m, mul, labels, MAX_GROUP_CAP)
            .expect("subgroup no larger than parent")
    }

    /// The complete derived-invariant bundle used by the formula gates.
    pub fn compute_invariants(&self) -> GroupInvariants {
        let n = self.order;
        let center = self.center();
        let center_size = center.len();
        let is_abelian = center_size == n;
        let mut cent_masks: Vec<SubsetMask> = Vec::new();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut m_excess = 0usize;
        let mut d_excess = 0usize;
        let mut order2 = 0usize;
        for x in 0..n {
            let c = self.centralizer(x);
            let sz = c.len();
            if !center.contains(x) {
                let excess = sz - center_size;
                m_excess = m_excess.max(excess);
                d_excess = if d_excess == 0 { excess } else { d_excess.min(excess) };
                if sz == 2 {
                    order2 += 1;
                }
            }
            if seen.insert(c.to_vec()) {
                cent_masks.push(c);
            }
        }
        let nacent_count = cent_masks
            .iter()
            .filter(|c| !self.subset_is_abelian(c))
            .count();
        let is_ac = cent_masks
            .iter()
            .filter(|c| c.len() < n)
            .all(|c| self.subset_is_abelian(c));
        let mc = self.maximal_cyclic_subgroups();
        GroupInvariants {
            order: n,
            center,
            center_size,
            is_abelian,
            least_prime: least_prime_factor(n as u64),
            cent_count: cent_masks.len(),
            nacent_count,
            order2_centralizer_count: order2,
            max_cyclic_count: mc.subgroups.len(),
            max_cyclic_central: mc.contained_in_center,
            max_centralizer_excess: m_excess,
            min_centralizer_excess: d_excess,
            is_ac_group: is_ac,
            is_nilpotent: self.is_nilpotent(),
        }
    }

    /// Some(p) iff the group is abelian and every non-identity element has
    /// order exactly p.
    pub fn elementary_abelian_prime(&self) -> Option<u64> {
        if !self.is_abelian() || self.order == 1 {
            return None;
        }
        let p = self.element_order((self.identity + 1) % self.order);
        (is_prime(p as u64)
            && (0..self.order)
                .all(|x| x == self.identity || self.element_order(x) == p))
        .then_some(p as u64)
    }

    /// Order, center size and element-order histogram; stands in for
    /// isomorphism when matching the handful of named small groups.
    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint {
            order: self.order,
            center_size: self.center().len(),
            order_histogram: self.order_histogram().into_iter().collect(),
        }
    }

    /// Structural generalized-dihedral detection: the closure A of the
    /// non-involutions must be an abelian index-2 subgroup inverted by (and
    /// disjoint from) the remaining involutions.
    pub fn detect_generalized_dihedral(&self) -> Option<GeneralizedDihedral> {
        let n = self.order;
        let seed = SubsetMask::from_indices(
            n,
            (0..n).filter(|&x| x == self.identity || self.mul(x, x) != self.identity),
        );
        let a = self.closure(&seed);
        if a.len() * 2 != n || !self.subset_is_abelian(&a) {
            return None;
        }
        let outside: Vec<usize> = a.complement().to_vec();
        if outside
            .iter()
            .any(|&x| self.mul(x, x) != self.identity)
        {
            return None;
        }
        // x a x^{-1} = a^{-1} for the flip part follows, but verify directly.
        let x = outside[0];
        for y in a.iter() {
            let conj = self.mul(self.mul(x, y), self.inverse(x));
            if conj != self.inverse(y) {
                return None;
            }
        }
        let odd_order = a.len() % 2 == 1;
        Some(GeneralizedDihedral {
            abelian_part: a,
            flip: x,
            odd_order,
        })
    }

    pub fn to_json(&self) -> String {
        let rows = (0..self.order)
            .map(|r| (0..self.order).map(|c| self.mul(r, c)).collect())
            .collect();
        serde_json::to_string_pretty(&GroupFile {
            name: self.descriptor.clone(),
            order: self.order,
            table: rows,
            labels: self.labels.clone(),
        })
        .expect("group file serialization")
    }

    /// Parses the group file format and validates the axioms; any violation is
    /// an error.
    pub fn from_json(text: &str, cap: usize) -> Result<GroupTable, GroupError> {
        let file: GroupFile = serde_json::from_str(text)?;
        if file.table.len() != file.order {
            return Err(GroupError::BadTable(format!(
                "declared order {} but table has {} rows",
                file.order,
                file.table.len()
            )));
        }
        let g = GroupTable::from_rows(file.name, &file.table, file.labels, cap)?;
        let violations = g.validate();
        if !violations.is_empty() {
            return Err(GroupError::NotAGroup(violations));
        }
        Ok(g)
    }

    pub fn load(path: impl AsRef<Path>, cap: usize) -> Result<GroupTable, GroupError> {
        Self::from_json(&std::fs::read_to_string(path)?, cap)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), GroupError> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }
}

pub struct MaximalCyclicSubgroups {
    pub subgroups: Vec<SubsetMask>,
    /// How many of them lie inside the center (the U in the T - U bound).
    pub contained_in_center: usize,
}

impl MaximalCyclicSubgroups {
    pub fn count(&self) -> usize {
        self.subgroups.len()
    }
}

/// Everything the closed-form bounds need to know about one group.
#[derive(Debug, Clone, Serialize)]
pub struct GroupInvariants {
    pub order: usize,
    pub center: SubsetMask,
    pub center_size: usize,
    pub is_abelian: bool,
    /// Smallest prime divisor of |G| (1 for the trivial group).
    pub least_prime: u64,
    /// |cent(G)|: number of distinct element-centralizers.
    pub cent_count: usize,
    /// Number of non-abelian element-centralizers (G itself included).
    pub nacent_count: usize,
    /// t: number of distinct centralizers of order 2.
    pub order2_centralizer_count: usize,
    /// T: number of maximal cyclic subgroups.
    pub max_cyclic_count: usize,
    /// U: maximal cyclic subgroups contained in the center.
    pub max_cyclic_central: usize,
    /// M = max over noncentral x of |C(x)| - |Z(G)| (0 for abelian).
    pub max_centralizer_excess: usize,
    /// d = min over noncentral x of |C(x)| - |Z(G)| (0 for abelian).
    pub min_centralizer_excess: usize,
    pub is_ac_group: bool,
    pub is_nilpotent: bool,
}

/// Isomorphism stand-in for the named small groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub center_size: usize,
    pub order_histogram: Vec<(usize, usize)>,
}

impl Fingerprint {
    pub fn is_s3(&self) -> bool {
        self.order == 6 && self.center_size == 1
    }

    pub fn is_d8(&self) -> bool {
        self.order == 8 && self.center_size == 2 && self.order_histogram == [(1, 1), (2, 5), (4, 2)]
    }

    pub fn is_q8(&self) -> bool {
        self.order == 8 && self.center_size == 2 && self.order_histogram == [(1, 1), (2, 1), (4, 6)]
    }

    /// Equality witnesses for the Haji bound.
    pub fn is_haji_equality_case(&self) -> bool {
        self.is_s3() || self.is_d8() || self.is_q8()
    }
}

/// Outcome of the structural generalized-dihedral check.
#[derive(Debug, Clone)]
pub struct GeneralizedDihedral {
    /// The abelian index-2 subgroup A.
    pub abelian_part: SubsetMask,
    /// An involution outside A acting on it by inversion.
    pub flip: usize,
    /// |A| odd, i.e. the group is D(A) of order 2m with m odd.
    pub odd_order: bool,
}

pub fn least_prime_factor(n: u64) -> u64 {
    if n <= 1 {
        return 1;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 1;
    }
    n
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && least_prime_factor(n) == n
}

/// Returns Some(p) when n = p^k for a prime p and k >= 1.
pub fn prime_power_base(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let p = least_prime_factor(n);
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    (m == 1).then_some(p)
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn cap() -> usize {
        DEFAULT_GROUP_CAP
    }

    #[test]
    fn validate_constructor_output_is_clean() {
        assert!(families::cyclic(6, cap()).unwrap().validate().is_empty());
    }

    #[test]
    fn validate_reports_identity_violation() {
        // no two-sided identity exists, so 0 stands in and gets reported
        let rows = vec![vec![1usize, 0], vec![1, 0]];
        let g = GroupTable::from_rows("broken", &rows, None, cap()).unwrap();
        let violations = g.validate();
        assert!(violations.iter().any(|v| v.contains("identity violated at 0")), "{violations:?}");

        // a relabeled Z2 (identity at index 1) is detected and valid
        let rows = vec![vec![1usize, 0], vec![0, 1]];
        let g = GroupTable::from_rows("z2-swapped", &rows, None, cap()).unwrap();
        assert_eq!(g.identity(), 1);
        assert!(g.validate().is_empty());
    }

    #[test]
    fn validate_flags_nonassociative_latin_square() {
        let rows = vec![vec![0usize, 1, 2], vec![1, 2, 0], vec![2, 1, 0]];
        let g = GroupTable::from_rows("quasigroup", &rows, None, cap()).unwrap();
        assert!(!g.validate().is_empty());
    }

    #[test]
    fn centralizers_small_groups() {
        let s3 = families::symmetric(3, cap()).unwrap();
        let z = s3.center();
        assert_eq!(z.len(), 1);
        // a transposition: C = {e, x}
        let x = (0..6).find(|&x| s3.element_order(x) == 2).unwrap();
        assert_eq!(s3.centralizer(x).to_vec(), vec![s3.identity(), x]);

        let c12 = families::cyclic(12, cap()).unwrap();
        assert_eq!(c12.centralizer(5).len(), 12);
        assert_eq!(c12.center().len(), 12);

        let q8 = families::generalized_quaternion(8, cap()).unwrap();
        assert_eq!(q8.center().len(), 2);
        let i = (0..8).find(|&x| q8.element_order(x) == 4).unwrap();
        assert_eq!(q8.centralizer(i).len(), 4);
    }

    #[test]
    fn element_orders() {
        let q8 = families::generalized_quaternion(8, cap()).unwrap();
        assert_eq!(q8.element_order(q8.identity()), 1);
        let minus_one = (0..8).find(|&x| q8.element_order(x) == 2).unwrap();
        assert_eq!(q8.element_order(minus_one), 2);
        let c12 = families::cyclic(12, cap()).unwrap();
        assert_eq!(c12.element_order(1), 12);
    }

    #[test]
    fn maximal_cyclics() {
        let q8 = families::generalized_quaternion(8, cap()).unwrap();
        let mc = q8.maximal_cyclic_subgroups();
        assert_eq!((mc.count(), mc.contained_in_center), (3, 0));
        assert!(mc.subgroups.iter().all(|m| m.len() == 4));

        let c6 = families::cyclic(6, cap()).unwrap();
        let mc = c6.maximal_cyclic_subgroups();
        assert_eq!((mc.count(), mc.contained_in_center), (1, 1));

        let d8 = families::dihedral(8, cap()).unwrap();
        let mc = d8.maximal_cyclic_subgroups();
        assert_eq!((mc.count(), mc.contained_in_center), (5, 0));
    }

    #[test]
    fn maximal_cyclics_cover_group() {
        for g in [
            families::symmetric(4, cap()).unwrap(),
            families::dihedral(10, cap()).unwrap(),
            families::heisenberg(3, cap()).unwrap(),
        ] {
            let mc = g.maximal_cyclic_subgroups();
            let mut union = SubsetMask::empty(g.order());
            for m in &mc.subgroups {
                union.union_with(m);
            }
            assert_eq!(union.len(), g.order(), "{}", g.descriptor());
        }
    }

    #[test]
    fn distinct_centralizer_counts() {
        let s3 = families::symmetric(3, cap()).unwrap();
        assert_eq!(s3.distinct_centralizers().len(), 5);
        let ab = families::abelian_product(&[2, 4], cap()).unwrap();
        assert_eq!(ab.distinct_centralizers().len(), 1);
        let a4 = families::alternating(4, cap()).unwrap();
        assert_eq!(a4.distinct_centralizers().len(), 6);
    }

    #[test]
    fn ac_group_examples() {
        assert!(families::symmetric(3, cap()).unwrap().is_ac_group());
        assert!(families::generalized_quaternion(8, cap()).unwrap().is_ac_group());
        assert!(!families::symmetric(4, cap()).unwrap().is_ac_group());
    }

    #[test]
    fn nilpotent_decompositions() {
        let d8 = families::dihedral(8, cap()).unwrap();
        let z3 = families::cyclic(3, cap()).unwrap();
        let g = GroupTable::direct_product(&d8, &z3, cap()).unwrap();
        let dec = g.nilpotent_decomposition().unwrap();
        let sizes: Vec<(u64, usize)> = dec.iter().map(|(p, m)| (*p, m.len())).collect();
        assert_eq!(sizes, vec![(2, 8), (3, 3)]);

        assert!(families::symmetric(3, cap()).unwrap().nilpotent_decomposition().is_none());

        let h = families::heisenberg(3, cap()).unwrap();
        let dec = h.nilpotent_decomposition().unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec[0].1.len(), 27);
    }

    #[test]
    fn sylow_masks_are_normal() {
        let d8 = families::dihedral(8, cap()).unwrap();
        let z3 = families::cyclic(3, cap()).unwrap();
        let g = GroupTable::direct_product(&d8, &z3, cap()).unwrap();
        for (_, mask) in g.nilpotent_decomposition().unwrap() {
            for x in 0..g.order() {
                for y in mask.iter() {
                    let conj = g.mul(g.mul(x, y), g.inverse(x));
                    assert!(mask.contains(conj));
                }
            }
        }
    }

    #[test]
    fn direct_product_examples() {
        let z2 = families::cyclic(2, cap()).unwrap();
        let z3 = families::cyclic(3, cap()).unwrap();
        let g = GroupTable::direct_product(&z2, &z3, cap()).unwrap();
        assert!(g.validate().is_empty());
        let hist: Vec<(usize, usize)> = g.order_histogram().into_iter().collect();
        assert_eq!(hist, vec![(1, 1), (2, 1), (3, 2), (6, 2)]);

        let e = families::cyclic(1, cap()).unwrap();
        let s3 = families::symmetric(3, cap()).unwrap();
        let g = GroupTable::direct_product(&e, &s3, cap()).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(g.mul(a, b), s3.mul(a, b));
            }
        }

        let q8 = families::generalized_quaternion(8, cap()).unwrap();
        let h27 = families::heisenberg(3, cap()).unwrap();
        let g = GroupTable::direct_product(&q8, &h27, cap()).unwrap();
        assert_eq!(g.order(), 216);
        assert_eq!(g.center().len(), 6);
    }

    #[test]
    fn direct_product_respects_cap() {
        let c = families::cyclic(100, cap()).unwrap();
        let err = GroupTable::direct_product(&c, &c, cap()).unwrap_err();
        assert!(matches!(err, GroupError::SizeLimit { order: 10000, .. }));
    }

    #[test]
    fn invariants_s3_q8_heisenberg() {
        let inv = families::symmetric(3, cap()).unwrap().compute_invariants();
        assert_eq!(inv.center_size, 1);
        assert_eq!(inv.least_prime, 2);
        assert_eq!(inv.cent_count, 5);
        assert_eq!(inv.order2_centralizer_count, 3);
        assert_eq!(inv.max_cyclic_count, 4);
        assert_eq!(inv.max_cyclic_central, 0);
        assert_eq!(inv.max_centralizer_excess, 2);
        assert_eq!(inv.min_centralizer_excess, 1);
        assert!(inv.is_ac_group);
        assert!(!inv.is_nilpotent);

        let inv = families::generalized_quaternion(8, cap()).unwrap().compute_invariants();
        assert_eq!(inv.center_size, 2);
        assert_eq!(inv.cent_count, 4);
        assert_eq!(inv.order2_centralizer_count, 0);
        assert_eq!(inv.max_cyclic_count, 3);
        assert_eq!(inv.max_centralizer_excess, 2);
        assert_eq!(inv.min_centralizer_excess, 2);
        assert!(inv.is_ac_group && inv.is_nilpotent);

        let inv = families::heisenberg(3, cap()).unwrap().compute_invariants();
        assert_eq!(inv.order, 27);
        assert_eq!(inv.center_size, 3);
        assert_eq!(inv.max_centralizer_excess, 6);
        assert_eq!(inv.min_centralizer_excess, 6);
        assert_eq!(inv.least_prime, 3);
    }

    #[test]
    fn center_is_intersection_of_centralizers() {
        for g in [
            families::symmetric(4, cap()).unwrap(),
            families::dihedral(12, cap()).unwrap(),
            families::heisenberg(3, cap()).unwrap(),
        ] {
            let mut inter = SubsetMask::full(g.order());
            for x in 0..g.order() {
                inter.intersect_with(&g.centralizer(x));
            }
            assert_eq!(inter, g.center());
            let z = g.center();
            for x in 0..g.order() {
                let c = g.centralizer(x);
                assert!(z.is_subset_of(&c));
                assert_eq!(z.contains(x), c.len() == g.order());
                assert_eq!(g.order() % c.len(), 0);
            }
        }
    }

    #[test]
    fn generalized_dihedral_detection() {
        let s3 = families::symmetric(3, cap()).unwrap();
        let gd = s3.detect_generalized_dihedral().unwrap();
        assert_eq!(gd.abelian_part.len(), 3);
        assert!(gd.odd_order);

        let d8 = families::dihedral(8, cap()).unwrap();
        let gd = d8.detect_generalized_dihedral().unwrap();
        assert_eq!(gd.abelian_part.len(), 4);
        assert!(!gd.odd_order);

        assert!(families::generalized_quaternion(8, cap()).unwrap().detect_generalized_dihedral().is_none());
        assert!(families::symmetric(4, cap()).unwrap().detect_generalized_dihedral().is_none());
        assert!(families::heisenberg(3, cap()).unwrap().detect_generalized_dihedral().is_none());
    }

    #[test]
    fn group_file_roundtrip() {
        let g = families::dihedral(10, cap()).unwrap();
        let json = g.to_json();
        let back = GroupTable::from_json(&json, cap()).unwrap();
        assert_eq!(back.order(), 10);
        assert_eq!(back.descriptor(), g.descriptor());
        for a in 0..10 {
            for b in 0..10 {
                assert_eq!(g.mul(a, b), back.mul(a, b));
            }
        }
    }

    #[test]
    fn group_file_rejects_non_group() {
        let json = r#"{"name":"bad","order":3,"table":[[0,1,2],[1,2,0],[2,1,0]]}"#;
        assert!(matches!(
            GroupTable::from_json(json, cap()),
            Err(GroupError::NotAGroup(_))
        ));
    }

    #[test]
    fn arithmetic_helpers() {
        assert_eq!(least_prime_factor(12), 2);
        assert_eq!(least_prime_factor(35), 5);
        assert!(is_prime(13) && !is_prime(1) && !is_prime(9));
        assert_eq!(prime_power_base(27), Some(3));
        assert_eq!(prime_power_base(8), Some(2));
        assert_eq!(prime_power_base(12), None);
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
    }
}
