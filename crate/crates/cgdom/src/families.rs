//! Constructors for every group family the verification corpus draws on.
//!
//! Canonical element orderings (fixed so that witness sets and file output are
//! reproducible):
//! - `cyclic(n)`: exponents 0..n-1 of the generator.
//! - `abelian(n1,..,nk)`: tuples, row-major by the left factor.
//! - `dihedral(2n)` and `gendihedral(A)`: the rotation part A first (in A's
//!   own order), then the reflections x*a in the same order of a.
//! - `quaternion(2^m)`: powers of a, then b*a^i.
//! - `symmetric(n)` / `alternating(n)`: permutations sorted lexicographically
//!   by one-line notation; composition is (f*g)(x) = f(g(x)).
//! - `heisenberg(p)`: upper unitriangular matrices as (a,b,c) triples in
//!   lexicographic order, c fastest.
//! - `pgl2(q)` / `psl2(q)`: fractional linear maps as permutations of the
//!   projective line (0..q-1 then inf), sorted lexicographically.
//! - `perm(...)`: breadth-first discovery order from the identity.

use crate::group::{is_prime, GroupError, GroupTable, MAX_GROUP_CAP};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

pub fn cyclic(n: u64, cap: usize) -> Result<GroupTable, GroupError> {
    if n == 0 {
        return Err(GroupError::BadParameter("cyclic(0) is not a group".into()));
    }
    let n = usize::try_from(n).map_err(|_| GroupError::SizeLimit { order: usize::MAX, cap })?;
    let mut mul = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            mul[i * n + j] = ((i + j) % n) as u16;
        }
    }
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    GroupTable::from_flat(format!("cyclic({n})"), n, mul, Some(labels), cap)
}

pub fn abelian_product(factors: &[u64], cap: usize) -> Result<GroupTable, GroupError> {
    if factors.is_empty() {
        return Err(GroupError::BadParameter("abelian product needs at least one factor".into()));
    }
    let mut g = cyclic(factors[0], cap)?;
    for &f in &factors[1..] {
        g = GroupTable::direct_product(&g, &cyclic(f, cap)?, cap)?;
    }
    // relabel as flat tuples and normalize the descriptor
    let order = g.order();
    let mut radices = factors.to_vec();
    radices.reverse();
    let labels: Vec<String> = (0..order)
        .map(|mut i| {
            let mut digits = Vec::with_capacity(factors.len());
            for &r in &radices {
                digits.push((i as u64 % r).to_string());
                i /= r as usize;
            }
            digits.reverse();
            format!("({})", digits.join(","))
        })
        .collect();
    let rows: Vec<Vec<usize>> = (0..order)
        .map(|a| (0..order).map(|b| g.mul(a, b)).collect())
        .collect();
    GroupTable::from_rows(
        format!(
            "abelian({})",
            factors.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
        ),
        &rows,
        Some(labels),
        cap,
    )
}

/// The semidirect product of an abelian group A with an order-2 element
/// acting by inversion. Reduces to the usual dihedral group for cyclic A.
pub fn generalized_dihedral(a: &GroupTable, cap: usize) -> Result<GroupTable, GroupError> {
    if !a.is_abelian() {
        return Err(GroupError::NotAbelian(a.descriptor().to_string()));
    }
    let n = a.order();
    let order = 2 * n;
    if order > cap.min(MAX_GROUP_CAP) {
        return Err(GroupError::SizeLimit { order, cap: cap.min(MAX_GROUP_CAP) });
    }
    let mut mul = vec![0u16; order * order];
    for i in 0..n {
        let ii = a.inverse(i);
        for j in 0..n {
            mul[i * order + j] = a.mul(i, j) as u16;
            mul[i * order + (n + j)] = (n + a.mul(ii, j)) as u16;
            mul[(n + i) * order + j] = (n + a.mul(i, j)) as u16;
            mul[(n + i) * order + (n + j)] = a.mul(ii, j) as u16;
        }
    }
    let labels = (0..n)
        .map(|i| a.label(i).into_owned())
        .chain((0..n).map(|i| format!("x*{}", a.label(i))))
        .collect();
    GroupTable::from_flat(
        format!("gendihedral({})", a.descriptor()),
        order,
        mul,
        Some(labels),
        cap,
    )
}

/// Dihedral group of the given (even) order, at least 6.
pub fn dihedral(order: u64, cap: usize) -> Result<GroupTable, GroupError> {
    if order % 2 != 0 || order < 6 {
        return Err(GroupError::BadParameter(format!(
            "dihedral order must be even and >= 6, got {order}"
        )));
    }
    let n = (order / 2) as usize;
    let order = order as usize;
    if order > cap.min(MAX_GROUP_CAP) {
        return Err(GroupError::SizeLimit { order, cap: cap.min(MAX_GROUP_CAP) });
    }
    let mut mul = vec![0u16; order * order];
    for i in 0..n {
        for j in 0..n {
            mul[i * order + j] = ((i + j) % n) as u16;
            mul[i * order + (n + j)] = (n + (n + j - i) % n) as u16;
            mul[(n + i) * order + j] = (n + (i + j) % n) as u16;
            mul[(n + i) * order + (n + j)] = ((n + j - i) % n) as u16;
        }
    }
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "r".to_string(),
            _ => format!("r^{i}"),
        })
        .chain((0..n).map(|i| match i {
            0 => "s".to_string(),
            1 => "sr".to_string(),
            _ => format!("sr^{i}"),
        }))
        .collect();
    GroupTable::from_flat(format!("dihedral({order})"), order, mul, Some(labels), cap)
}

/// Generalized quaternion group of order 2^m, m >= 3. Has a unique involution.
pub fn generalized_quaternion(order: u64, cap: usize) -> Result<GroupTable, GroupError> {
    if order < 8 || !order.is_power_of_two() {
        return Err(GroupError::BadParameter(format!(
            "generalized quaternion order must be 2^m with m >= 3, got {order}"
        )));
    }
    let order = order as usize;
    if order > cap.min(MAX_GROUP_CAP) {
        return Err(GroupError::SizeLimit { order, cap: cap.min(MAX_GROUP_CAP) });
    }
    let n = order / 2;
    let half = n / 2;
    let mut mul = vec![0u16; order * order];
    for i in 0..n {
        for j in 0..n {
            mul[i * order + j] = ((i + j) % n) as u16;
            mul[i * order + (n + j)] = (n + (n + j - i) % n) as u16;
            mul[(n + i) * order + j] = (n + (i + j) % n) as u16;
            mul[(n + i) * order + (n + j)] = ((half + n + j - i) % n) as u16;
        }
    }
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "a".to_string(),
            _ => format!("a^{i}"),
        })
        .chain((0..n).map(|i| match i {
            0 => "b".to_string(),
            _ => format!("ba^{i}"),
        }))
        .collect();
    GroupTable::from_flat(format!("quaternion({order})"), order, mul, Some(labels), cap)
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(factorial(n));
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                rec(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

fn parity_even(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            v = p[v];
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

/// Cycle notation with custom point names; identity prints as "()".
pub fn cycle_notation(p: &[usize], name: impl Fn(usize) -> String) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cyc = Vec::new();
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            cyc.push(name(v));
            v = p[v];
        }
        out.push('(');
        out.push_str(&cyc.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Parses cycle notation like "(0 1 2)(3 4)"; points not mentioned are fixed.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Vec<usize>, GroupError> {
    let mut p: Vec<usize> = (0..degree).collect();
    let trimmed = text.trim();
    if trimmed == "()" || trimmed.is_empty() {
        return Ok(p);
    }
    let mut rest = trimmed;
    while !rest.is_empty() {
        let open = rest
            .find('(')
            .ok_or_else(|| GroupError::BadParameter(format!("bad cycle notation: {text}")))?;
        let close = rest[open..]
            .find(')')
            .ok_or_else(|| GroupError::BadParameter(format!("unclosed cycle in: {text}")))?
            + open;
        let body = &rest[open + 1..close];
        let points: Vec<usize> = body
            .split(|c: char| c == ' ' || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| GroupError::BadParameter(format!("bad point '{s}' in {text}")))
            })
            .collect::<Result<_, _>>()?;
        for &pt in &points {
            if pt >= degree {
                return Err(GroupError::BadParameter(format!(
                    "point {pt} exceeds degree {degree}"
                )));
            }
        }
        for i in 0..points.len() {
            p[points[i]] = points[(i + 1) % points.len()];
        }
        rest = &rest[close + 1..];
    }
    Ok(p)
}

fn perms_to_table(
    descriptor: String,
    perms: Vec<Vec<usize>>,
    cap: usize,
    name: impl Fn(usize) -> String,
) -> Result<GroupTable, GroupError> {
    let order = perms.len();
    if order > cap.min(MAX_GROUP_CAP) {
        return Err(GroupError::SizeLimit { order, cap: cap.min(MAX_GROUP_CAP) });
    }
    let pos: HashMap<&[usize], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let k = perms[0].len();
    let mut mul = vec![0u16; order * order];
    let mut scratch = vec![0usize; k];
    for (i, f) in perms.iter().enumerate() {
        for (j, g) in perms.iter().enumerate() {
            for (x, slot) in scratch.iter_mut().enumerate() {
                *slot = f[g[x]];
            }
            mul[i * order + j] = *pos
                .get(scratch.as_slice())
                .expect("composition stays inside the closed set") as u16;
        }
    }
    let labels = perms.iter().map(|p| cycle_notation(p, &name)).collect();
    GroupTable::from_flat(descriptor, order, mul, Some(labels), cap)
}

pub fn symmetric(n: u64, cap: usize) -> Result<GroupTable, GroupError> {
    if !(1..=7).contains(&n) {
        return Err(GroupError::BadParameter(format!(
            "symmetric degree must be 1..=7, got {n}"
        )));
    }
    let perms = all_permutations(n as usize);
    perms_to_table(format!("symmetric({n})"), perms, cap, |v| v.to_string())
}

pub fn alternating(n: u64, cap: usize) -> Result<GroupTable, GroupError> {
    if !(1..=7).contains(&n) {
        return Err(GroupError::BadParameter(format!(
            "alternating degree must be 1..=7, got {n}"
        )));
    }
    let perms: Vec<Vec<usize>> = all_permutations(n as usize)
        .into_iter()
        .filter(|p| parity_even(p))
        .collect();
    perms_to_table(format!("alternating({n})"), perms, cap, |v| v.to_string())
}

/// Upper unitriangular 3x3 matrices over F_p: order p^3, center of size p.
pub fn heisenberg(p: u64, cap: usize) -> Result<GroupTable, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::BadParameter(format!("heisenberg needs a prime, got {p}")));
    }
    let order = (p * p * p) as usize;
    if order > cap.min(MAX_GROUP_CAP) {
        return Err(GroupError::SizeLimit { order, cap: cap.min(MAX_GROUP_CAP) });
    }
    let p = p as usize;
    let idx = |a: usize, b: usize, c: usize| (a * p + b) * p + c;
    let mut mul = vec![0u16; order * order];
    let mut labels = vec![String::new(); order];
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                labels[idx(a, b, c)] = format!("({a},{b},{c})");
                for a2 in 0..p {
                    for b2 in 0..p {
                        for c2 in 0..p {
                            mul[idx(a, b, c) * order + idx(a2, b2, c2)] =
                                idx((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p) as u16;
                        }
                    }
                }
            }
        }
    }
    GroupTable::from_flat(format!("heisenberg({})", p), order, mul, Some(labels), cap)
}

/// Finite field of order q = p^k for tiny q, with lookup-table arithmetic.
/// Elements are base-p digit strings read as integers; the modulus is the
/// lexicographically first irreducible monic polynomial.
struct SmallField {
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
}

impl SmallField {
    fn new(q: u64) -> Result<SmallField, GroupError> {
        let p = crate::group::prime_power_base(q)
            .ok_or_else(|| GroupError::BadParameter(format!("{q} is not a prime power")))?;
        if q > 64 {
            return Err(GroupError::BadParameter(format!("field order {q} too large")));
        }
        let q = q as usize;
        let p = p as usize;
        let k = {
            let mut k = 0;
            let mut m = q;
            while m > 1 {
                m /= p;
                k += 1;
            }
            k
        };
        let digits = |mut x: usize| -> Vec<usize> {
            let mut d = vec![0; k];
            for slot in d.iter_mut() {
                *slot = x % p;
                x /= p;
            }
            d
        };
        let value = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &v| acc * p + v) };
        // polynomial helpers over F_p, little-endian coefficient vectors
        let pmul = |a: &[usize], b: &[usize]| -> Vec<usize> {
            let mut r = vec![0; a.len() + b.len() - 1];
            for (i, &x) in a.iter().enumerate() {
                for (j, &y) in b.iter().enumerate() {
                    r[i + j] = (r[i + j] + x * y) % p;
                }
            }
            r
        };
        let modulus: Vec<usize> = if k == 1 {
            vec![0, 1]
        } else {
            // monic t^k + lower; first one with no nontrivial monic divisor
            let monics = |deg: usize| -> Vec<Vec<usize>> {
                (0..p.pow(deg as u32))
                    .map(|c| {
                        let mut poly = digits(c);
                        poly.truncate(deg);
                        while poly.len() < deg {
                            poly.push(0);
                        }
                        poly.push(1);
                        poly
                    })
                    .collect()
            };
            let divides = |d: &[usize], f: &[usize]| -> bool {
                // polynomial remainder f mod d (d monic)
                let mut r = f.to_vec();
                while r.len() >= d.len() {
                    let lead = *r.last().unwrap();
                    if lead != 0 {
                        let shift = r.len() - d.len();
                        for (i, &dc) in d.iter().enumerate() {
                            r[shift + i] = (r[shift + i] + p * p - lead * dc % p) % p;
                        }
                    }
                    r.pop();
                }
                r.iter().all(|&c| c == 0)
            };
            monics(k)
                .into_iter()
                .find(|f| {
                    (1..=k / 2).all(|deg| monics(deg).iter().all(|d| !divides(d, f)))
                })
                .expect("an irreducible polynomial of each degree exists")
        };
        let reduce = |poly: Vec<usize>| -> usize {
            let mut r = poly;
            while r.len() > k {
                let lead = r.pop().unwrap();
                if lead != 0 {
                    let shift = r.len() - k;
                    for i in 0..k {
                        r[shift + i] = (r[shift + i] + p * p - lead * modulus[i] % p) % p;
                    }
                }
            }
            while r.len() < k {
                r.push(0);
            }
            value(&r)
        };
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                add[a * q + b] = value(&sum) as u8;
                mul[a * q + b] = reduce(pmul(&da, &db)) as u8;
            }
        }
        Ok(SmallField { q, add, mul })
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    fn neg(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.add(a, b) == 0).unwrap()
    }

    fn inv(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.mul(a, b) == 1).unwrap()
    }
}

fn projective_linear(q: u64, psl: bool, cap: usize) -> Result<GroupTable, GroupError> {
    let f = SmallField::new(q)?;
    let q = f.q;
    let squares: std::collections::HashSet<usize> = (1..q).map(|x| f.mul(x, x)).collect();
    let inf = q;
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut seen: std::collections::HashSet<Vec<usize>> = std::collections::HashSet::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    let det = f.add(f.mul(a, d), f.neg(f.mul(b, c)));
                    if det == 0 || (psl && !squares.contains(&det)) {
                        continue;
                    }
                    let mut img = Vec::with_capacity(q + 1);
                    for z in 0..q {
                        let num = f.add(f.mul(a, z), b);
                        let den = f.add(f.mul(c, z), d);
                        img.push(if den == 0 { inf } else { f.mul(num, f.inv(den)) });
                    }
                    img.push(if c == 0 { inf } else { f.mul(a, f.inv(c)) });
                    if seen.insert(img.clone()) {
                        perms.push(img);
                    }
                }
            }
        }
    }
    perms.sort();
    let name = move |v: usize| if v == inf { "inf".to_string() } else { v.to_string() };
    let kind = if psl { "psl2" } else { "pgl2" };
    perms_to_table(format!("{kind}({q})"), perms, cap, name)
}

/// PGL(2,q) as fractional linear maps permuting the projective line.
pub fn pgl2(q: u64, cap: usize) -> Result<GroupTable, GroupError> {
    projective_linear(q, false, cap)
}

/// PSL(2,q): the maps whose matrix determinant is a square.
pub fn psl2(q: u64, cap: usize) -> Result<GroupTable, GroupError> {
    projective_linear(q, true, cap)
}

/// Breadth-first closure of a set of permutations under composition.
/// Elements are ordered by discovery, identity first.
pub fn perm_closure(generators: &[Vec<usize>], cap: usize) -> Result<GroupTable, GroupError> {
    if generators.is_empty() {
        return Err(GroupError::BadParameter("need at least one generator".into()));
    }
    let k = generators[0].len();
    for g in generators {
        if g.len() != k {
            return Err(GroupError::BadParameter("generators act on different degrees".into()));
        }
        let mut seen = vec![false; k];
        for &v in g {
            if v >= k || seen[v] {
                return Err(GroupError::BadParameter(format!("{g:?} is not a permutation")));
            }
            seen[v] = true;
        }
    }
    let cap = cap.min(MAX_GROUP_CAP);
    let identity: Vec<usize> = (0..k).collect();
    let mut elems = vec![identity.clone()];
    let mut pos: HashMap<Vec<usize>, usize> = HashMap::new();
    pos.insert(identity, 0);
    let mut head = 0;
    while head < elems.len() {
        let current = elems[head].clone();
        head += 1;
        for g in generators {
            let composed: Vec<usize> = (0..k).map(|x| current[g[x]]).collect();
            if !pos.contains_key(&composed) {
                if elems.len() >= cap {
                    return Err(GroupError::SizeLimit { order: elems.len() + 1, cap });
                }
                pos.insert(composed.clone(), elems.len());
                elems.push(composed);
            }
        }
    }
    let descriptor = format!(
        "perm({k}:{})",
        generators
            .iter()
            .map(|g| cycle_notation(g, |v| v.to_string()))
            .collect::<Vec<_>>()
            .join(",")
    );
    perms_to_table(descriptor, elems, cap, |v| v.to_string())
}

/// Declarative family selector: what the CLI, the corpus manifest and the
/// cache key all share.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Cyclic { n: u64 },
    AbelianProduct { factors: Vec<u64> },
    Dihedral { order: u64 },
    GeneralizedDihedral { abelian: Vec<u64> },
    GeneralizedQuaternion { order: u64 },
    Symmetric { n: u64 },
    Alternating { n: u64 },
    Heisenberg { p: u64 },
    Pgl2 { q: u64 },
    Psl2 { q: u64 },
    PermClosure { degree: usize, generators: Vec<String> },
    Direct { parts: Vec<FamilySpec> },
    File { path: String },
}

impl FamilySpec {
    pub fn build(&self, cap: usize) -> Result<GroupTable, GroupError> {
        match self {
            FamilySpec::Cyclic { n } => cyclic(*n, cap),
            FamilySpec::AbelianProduct { factors } => abelian_product(factors, cap),
            FamilySpec::Dihedral { order } => dihedral(*order, cap),
            FamilySpec::GeneralizedDihedral { abelian } => {
                generalized_dihedral(&abelian_product(abelian, cap)?, cap)
            }
            FamilySpec::GeneralizedQuaternion { order } => generalized_quaternion(*order, cap),
            FamilySpec::Symmetric { n } => symmetric(*n, cap),
            FamilySpec::Alternating { n } => alternating(*n, cap),
            FamilySpec::Heisenberg { p } => heisenberg(*p, cap),
            FamilySpec::Pgl2 { q } => pgl2(*q, cap),
            FamilySpec::Psl2 { q } => psl2(*q, cap),
            FamilySpec::PermClosure { degree, generators } => {
                let perms: Vec<Vec<usize>> = generators
                    .iter()
                    .map(|s| parse_cycles(s, *degree))
                    .collect::<Result<_, _>>()?;
                perm_closure(&perms, cap)
            }
            FamilySpec::Direct { parts } => {
                if parts.is_empty() {
                    return Err(GroupError::BadParameter("direct product needs parts".into()));
                }
                let mut g = parts[0].build(cap)?;
                for part in &parts[1..] {
                    g = GroupTable::direct_product(&g, &part.build(cap)?, cap)?;
                }
                Ok(g)
            }
            FamilySpec::File { path } => GroupTable::load(path, cap),
        }
    }

    /// Group order when it is known without building (permutation closures
    /// and files are not).
    pub fn order_hint(&self) -> Option<u64> {
        Some(match self {
            FamilySpec::Cyclic { n } => *n,
            FamilySpec::AbelianProduct { factors } => factors.iter().product(),
            FamilySpec::Dihedral { order } => *order,
            FamilySpec::GeneralizedDihedral { abelian } => 2 * abelian.iter().product::<u64>(),
            FamilySpec::GeneralizedQuaternion { order } => *order,
            FamilySpec::Symmetric { n } => (1..=*n).product(),
            FamilySpec::Alternating { n } => ((1..=*n).product::<u64>() / 2).max(1),
            FamilySpec::Heisenberg { p } => p * p * p,
            FamilySpec::Pgl2 { q } => q * q * q - q,
            FamilySpec::Psl2 { q } => (q * q * q - q) / if q % 2 == 0 { 1 } else { 2 },
            FamilySpec::PermClosure { .. } | FamilySpec::File { .. } => return None,
            FamilySpec::Direct { parts } => {
                let mut product = 1u64;
                for part in parts {
                    product *= part.order_hint()?;
                }
                product
            }
        })
    }

    /// One-token rendering; identical to the descriptor the built table carries.
    pub fn descriptor(&self) -> String {
        match self {
            FamilySpec::Cyclic { n } => format!("cyclic({n})"),
            FamilySpec::AbelianProduct { factors } => format!(
                "abelian({})",
                factors.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
            ),
            FamilySpec::Dihedral { order } => format!("dihedral({order})"),
            FamilySpec::GeneralizedDihedral { abelian } => format!(
                "gendihedral(abelian({}))",
                abelian.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
            ),
            FamilySpec::GeneralizedQuaternion { order } => format!("quaternion({order})"),
            FamilySpec::Symmetric { n } => format!("symmetric({n})"),
            FamilySpec::Alternating { n } => format!("alternating({n})"),
            FamilySpec::Heisenberg { p } => format!("heisenberg({p})"),
            FamilySpec::Pgl2 { q } => format!("pgl2({q})"),
            FamilySpec::Psl2 { q } => format!("psl2({q})"),
            FamilySpec::PermClosure { degree, generators } => {
                format!("perm({degree}:{})", generators.join(","))
            }
            FamilySpec::Direct { parts } => format!(
                "direct({})",
                parts.iter().map(FamilySpec::descriptor).collect::<Vec<_>>().join(",")
            ),
            FamilySpec::File { path } => format!("file({path})"),
        }
    }

    /// Parses the descriptor grammar, e.g. "direct(dihedral(8),cyclic(3))".
    pub fn parse_descriptor(text: &str) -> Result<FamilySpec, GroupError> {
        let text = text.trim();
        let bad = || GroupError::BadParameter(format!("cannot parse group spec '{text}'"));
        let open = text.find('(').ok_or_else(bad)?;
        if !text.ends_with(')') {
            return Err(bad());
        }
        let name = &text[..open];
        let body = &text[open + 1..text.len() - 1];
        let split_top = |body: &str| -> Vec<String> {
            let mut depth = 0usize;
            let mut parts = Vec::new();
            let mut cur = String::new();
            for ch in body.chars() {
                match ch {
                    '(' => {
                        depth += 1;
                        cur.push(ch);
                    }
                    ')' => {
                        depth -= 1;
                        cur.push(ch);
                    }
                    ',' if depth == 0 => {
                        parts.push(std::mem::take(&mut cur));
                    }
                    _ => cur.push(ch),
                }
            }
            if !cur.is_empty() {
                parts.push(cur);
            }
            parts
        };
        let ints = |body: &str| -> Result<Vec<u64>, GroupError> {
            split_top(body)
                .iter()
                .map(|s| s.trim().parse::<u64>().map_err(|_| bad()))
                .collect()
        };
        let single = |body: &str| -> Result<u64, GroupError> {
            body.trim().parse::<u64>().map_err(|_| bad())
        };
        Ok(match name {
            "cyclic" => FamilySpec::Cyclic { n: single(body)? },
            "abelian" | "abelian_product" => FamilySpec::AbelianProduct { factors: ints(body)? },
            "dihedral" => FamilySpec::Dihedral { order: single(body)? },
            "gendihedral" | "generalized_dihedral" => {
                let inner = Self::parse_descriptor(body)?;
                match inner {
                    FamilySpec::AbelianProduct { factors } => {
                        FamilySpec::GeneralizedDihedral { abelian: factors }
                    }
                    FamilySpec::Cyclic { n } => FamilySpec::GeneralizedDihedral { abelian: vec![n] },
                    _ => return Err(GroupError::BadParameter(
                        "gendihedral takes an abelian(...) or cyclic(...) argument".into(),
                    )),
                }
            }
            "quaternion" | "generalized_quaternion" => {
                FamilySpec::GeneralizedQuaternion { order: single(body)? }
            }
            "symmetric" => FamilySpec::Symmetric { n: single(body)? },
            "alternating" => FamilySpec::Alternating { n: single(body)? },
            "heisenberg" => FamilySpec::Heisenberg { p: single(body)? },
            "pgl2" => FamilySpec::Pgl2 { q: single(body)? },
            "psl2" => FamilySpec::Psl2 { q: single(body)? },
            "perm" => {
                let colon = body.find(':').ok_or_else(bad)?;
                let degree = body[..colon].trim().parse::<usize>().map_err(|_| bad())?;
                FamilySpec::PermClosure {
                    degree,
                    generators: split_top(&body[colon + 1..]),
                }
            }
            "direct" => FamilySpec::Direct {
                parts: split_top(body)
                    .iter()
                    .map(|s| Self::parse_descriptor(s))
                    .collect::<Result<_, _>>()?,
            },
            "file" => FamilySpec::File { path: body.to_string() },
            _ => return Err(bad()),
        })
    }

    /// CLI form: a family name plus integer (or cycle) parameters.
    pub fn parse_cli(name: &str, params: &[String]) -> Result<FamilySpec, GroupError> {
        let bad = |msg: &str| GroupError::BadParameter(msg.to_string());
        let one = || -> Result<u64, GroupError> {
            if params.len() != 1 {
                return Err(bad(&format!("{name} takes exactly one integer parameter")));
            }
            params[0]
                .parse()
                .map_err(|_| bad(&format!("bad integer '{}'", params[0])))
        };
        let many = || -> Result<Vec<u64>, GroupError> {
            if params.is_empty() {
                return Err(bad(&format!("{name} needs at least one integer parameter")));
            }
            params
                .iter()
                .map(|s| s.parse().map_err(|_| bad(&format!("bad integer '{s}'"))))
                .collect()
        };
        Ok(match name.replace('-', "_").as_str() {
            "cyclic" => FamilySpec::Cyclic { n: one()? },
            "abelian" | "abelian_product" => FamilySpec::AbelianProduct { factors: many()? },
            "dihedral" => FamilySpec::Dihedral { order: one()? },
            "gendihedral" | "generalized_dihedral" => {
                FamilySpec::GeneralizedDihedral { abelian: many()? }
            }
            "quaternion" | "generalized_quaternion" => {
                FamilySpec::GeneralizedQuaternion { order: one()? }
            }
            "symmetric" => FamilySpec::Symmetric { n: one()? },
            "alternating" => FamilySpec::Alternating { n: one()? },
            "heisenberg" => FamilySpec::Heisenberg { p: one()? },
            "pgl2" => FamilySpec::Pgl2 { q: one()? },
            "psl2" => FamilySpec::Psl2 { q: one()? },
            "perm" | "perm_closure" => {
                if params.is_empty() {
                    return Err(bad("perm-closure needs generator cycles"));
                }
                let degree = params
                    .iter()
                    .flat_map(|s| {
                        s.split(|c: char| !c.is_ascii_digit())
                            .filter(|t| !t.is_empty())
                            .map(|t| t.parse::<usize>().unwrap_or(0))
                    })
                    .max()
                    .unwrap_or(0)
                    + 1;
                FamilySpec::PermClosure {
                    degree,
                    generators: params.to_vec(),
                }
            }
            "file" => {
                if params.len() != 1 {
                    return Err(bad("file takes exactly one path"));
                }
                FamilySpec::File { path: params[0].clone() }
            }
            other => return Err(bad(&format!("unknown family '{other}'"))),
        })
    }
}
