//! Finite groups as Cayley tables: presets, structural queries (orders,
//! center, conjugacy classes, quotients), generating-set search and
//! small-order isomorphism testing.
//!
//! Groups are tables, not presentations: everything downstream needs
//! constant-time products. The identity always sits at index 0.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::path::Path;

/// Default cap on the order of constructed groups.
pub const DEFAULT_ORDER_CAP: usize = 24;
/// Default cap for brute-force isomorphism testing.
pub const DEFAULT_ISO_CAP: usize = 16;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<Vec<usize>>,
    labels: Vec<String>,
    orders: Vec<usize>,
    inverses: Vec<usize>,
}

/// On-disk table format: `{"order": n, "table": [[...]], "labels": [...]}`
/// with the identity first.
#[derive(Serialize, Deserialize)]
struct TableFile {
    order: usize,
    table: Vec<Vec<usize>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates the Latin-square, identity and associativity laws before
    /// accepting a table.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::GroupInvariant("empty table".into()));
        }
        if labels.len() != n {
            return Err(Error::GroupInvariant(format!(
                "{} labels for order {n}",
                labels.len()
            )));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::GroupInvariant(format!("row {i} has wrong length")));
            }
            if row.iter().any(|&v| v >= n) {
                return Err(Error::GroupInvariant(format!("row {i} has out-of-range entry")));
            }
        }
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                if seen_row[table[i][j]] {
                    return Err(Error::GroupInvariant(format!("row {i} repeats an element")));
                }
                seen_row[table[i][j]] = true;
                if seen_col[table[j][i]] {
                    return Err(Error::GroupInvariant(format!("column {i} repeats an element")));
                }
                seen_col[table[j][i]] = true;
            }
            if table[0][i] != i || table[i][0] != i {
                return Err(Error::GroupInvariant(
                    "identity is not at index 0".into(),
                ));
            }
        }
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if table[table[a][b]][c] != table[a][table[b][c]] {
                            return Err(Error::GroupInvariant(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        }
        let mut g = FiniteGroup {
            n,
            table,
            labels,
            orders: Vec::new(),
            inverses: Vec::new(),
        };
        g.orders = (0..n).map(|i| g.compute_order(i)).collect();
        g.inverses = (0..n)
            .map(|i| (0..n).find(|&j| g.table[i][j] == 0).unwrap())
            .collect();
        Ok(g)
    }

    fn compute_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut t = 1;
        while x != 0 {
            x = self.table[x][g];
            t += 1;
        }
        t
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverses[i]
    }

    /// Least t >= 1 with g^t = identity.
    pub fn element_order(&self, g: usize) -> usize {
        self.orders[g]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    // -- presets ------------------------------------------------------------

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse("cyclic group order must be >= 1".into()));
        }
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let labels = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g{i}"),
            })
            .collect();
        FiniteGroup::from_table(table, labels)
    }

    /// Dihedral group of order 2n: rotations r^i then reflections r^i s.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::Parse("dihedral parameter must be >= 1".into()));
        }
        let idx = |i: usize, a: usize| a * n + i;
        let mut table = vec![vec![0usize; 2 * n]; 2 * n];
        for a in 0..2usize {
            for i in 0..n {
                for b in 0..2usize {
                    for j in 0..n {
                        // (r^i s^a)(r^j s^b) = r^(i + (-1)^a j) s^(a xor b)
                        let k = if a == 0 { (i + j) % n } else { (i + n - j % n) % n };
                        table[idx(i, a)][idx(j, b)] = idx(k, a ^ b);
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(2 * n);
        for i in 0..n {
            labels.push(match i {
                0 => "e".to_string(),
                1 => "r".to_string(),
                _ => format!("r{i}"),
            });
        }
        for i in 0..n {
            labels.push(match i {
                0 => "s".to_string(),
                1 => "rs".to_string(),
                _ => format!("r{i}s"),
            });
        }
        FiniteGroup::from_table(table, labels)
    }

    /// Symmetric group on n letters, permutations in lexicographic one-line
    /// order (the identity comes first). Product is composition:
    /// (p*q)(x) = p(q(x)).
    pub fn symmetric(n: usize) -> Result<Self> {
        let perms = permutations(n);
        Self::from_permutations(perms)
    }

    /// Alternating group on n letters (even permutations, lex order).
    pub fn alternating(n: usize) -> Result<Self> {
        let perms: Vec<Vec<usize>> = permutations(n)
            .into_iter()
            .filter(|p| permutation_is_even(p))
            .collect();
        Self::from_permutations(perms)
    }

    fn from_permutations(perms: Vec<Vec<usize>>) -> Result<Self> {
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p);
        let m = perms.len();
        let mut table = vec![vec![0usize; m]; m];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                let comp: Vec<usize> = (0..p.len()).map(|x| p[q[x]]).collect();
                table[i][j] = index(&comp).ok_or_else(|| {
                    Error::GroupInvariant("permutation set not closed".into())
                })?;
            }
        }
        let labels = perms
            .iter()
            .map(|p| p.iter().map(|d| d.to_string()).collect::<String>())
            .collect();
        FiniteGroup::from_table(table, labels)
    }

    /// Quaternion group of order 8: 1, -1, i, -i, j, -j, k, -k.
    pub fn quaternion8() -> Result<Self> {
        // base symbols 0:1, 1:i, 2:j, 3:k with sign bit
        // products of the symbols: (sign, symbol)
        const BASE: [[(i8, usize); 4]; 4] = [
            [(1, 0), (1, 1), (1, 2), (1, 3)],
            [(1, 1), (-1, 0), (1, 3), (-1, 2)],
            [(1, 2), (-1, 3), (-1, 0), (1, 1)],
            [(1, 3), (1, 2), (-1, 1), (-1, 0)],
        ];
        let idx = |sign: i8, sym: usize| 2 * sym + usize::from(sign < 0);
        let mut table = vec![vec![0usize; 8]; 8];
        for s1 in [1i8, -1] {
            for u in 0..4 {
                for s2 in [1i8, -1] {
                    for v in 0..4 {
                        let (bs, bu) = BASE[u][v];
                        table[idx(s1, u)][idx(s2, v)] = idx(s1 * s2 * bs, bu);
                    }
                }
            }
        }
        let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        FiniteGroup::from_table(table, labels)
    }

    /// Direct product; element (a, b) gets index a * |H| + b.
    pub fn product(&self, other: &FiniteGroup) -> Result<Self> {
        let (n1, n2) = (self.n, other.n);
        let idx = |a: usize, b: usize| a * n2 + b;
        let mut table = vec![vec![0usize; n1 * n2]; n1 * n2];
        for a in 0..n1 {
            for b in 0..n2 {
                for c in 0..n1 {
                    for d in 0..n2 {
                        table[idx(a, b)][idx(c, d)] = idx(self.mul(a, c), other.mul(b, d));
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(n1 * n2);
        for a in 0..n1 {
            for b in 0..n2 {
                labels.push(format!("({},{})", self.labels[a], other.labels[b]));
            }
        }
        FiniteGroup::from_table(table, labels)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let file: TableFile = serde_json::from_str(&text)?;
        if file.table.len() != file.order {
            return Err(Error::GroupInvariant(format!(
                "declared order {} but table has {} rows",
                file.order,
                file.table.len()
            )));
        }
        let labels = file
            .labels
            .unwrap_or_else(|| (0..file.order).map(|i| format!("g{i}")).collect());
        FiniteGroup::from_table(file.table, labels)
    }

    pub fn to_table_json(&self) -> String {
        let file = TableFile {
            order: self.n,
            table: self.table.clone(),
            labels: Some(self.labels.clone()),
        };
        serde_json::to_string_pretty(&file).expect("table serializes")
    }

    // -- structural queries ---------------------------------------------------

    /// Elements commuting with everything.
    pub fn center(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&z| (0..self.n).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Orbits under conjugation, each sorted, listed by least member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut classes = Vec::new();
        for k in 0..self.n {
            if seen[k] {
                continue;
            }
            let mut class = BTreeSet::new();
            for g in 0..self.n {
                class.insert(self.mul(self.mul(self.inv(g), k), g));
            }
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// Closure of `s` under multiplication.
    pub fn closure(&self, s: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.n];
        in_set[0] = true;
        let mut frontier: Vec<usize> = vec![0];
        for &g in s {
            if !in_set[g] {
                in_set[g] = true;
                frontier.push(g);
            }
        }
        while let Some(x) = frontier.pop() {
            for &g in s {
                let y = self.mul(x, g);
                if !in_set[y] {
                    in_set[y] = true;
                    frontier.push(y);
                }
                let z = self.mul(g, x);
                if !in_set[z] {
                    in_set[z] = true;
                    frontier.push(z);
                }
            }
        }
        (0..self.n).filter(|&i| in_set[i]).collect()
    }

    pub fn generates(&self, s: &[usize]) -> bool {
        !s.is_empty() && self.closure(s).len() == self.n
    }

    /// A generating set containing two elements of coprime order, preferring
    /// genuine non-identity coprime pairs, then minimal size, then the
    /// lexicographically least sorted index tuple. Falls back to the identity
    /// (order 1) as one half of the pair when no genuine pair exists.
    pub fn coprime_generating_set(&self) -> Vec<usize> {
        if self.n == 1 {
            return vec![0];
        }
        let has_coprime_pair = |s: &[usize]| {
            s.iter().enumerate().any(|(idx, &a)| {
                s[idx + 1..]
                    .iter()
                    .any(|&b| gcd(self.element_order(a), self.element_order(b)) == 1)
            })
        };
        // a genuine pair avoids the identity
        let genuine_exists = (1..self.n).any(|a| {
            (a + 1..self.n).any(|b| gcd(self.element_order(a), self.element_order(b)) == 1)
        });
        if genuine_exists {
            let pool: Vec<usize> = (1..self.n).collect();
            for size in 2..=pool.len() {
                if let Some(s) = first_subset(&pool, size, &mut |s: &[usize]| {
                    has_coprime_pair(s) && self.generates(s)
                }) {
                    return s;
                }
            }
        }
        // fallback: identity plus a minimal generating set
        for size in 1..self.n {
            let pool: Vec<usize> = (1..self.n).collect();
            if let Some(mut s) = first_subset(&pool, size, &mut |s: &[usize]| self.generates(s)) {
                s.insert(0, 0);
                return s;
            }
        }
        (0..self.n).collect()
    }

    /// Smallest generating set (by size, then lex on sorted index tuples).
    pub fn minimal_generating_set(&self) -> Vec<usize> {
        if self.n == 1 {
            return vec![0];
        }
        let pool: Vec<usize> = (1..self.n).collect();
        for size in 1..=pool.len() {
            if let Some(s) = first_subset(&pool, size, &mut |s: &[usize]| self.generates(s)) {
                return s;
            }
        }
        unreachable!("the whole group generates itself")
    }

    pub fn is_subgroup(&self, h: &[usize]) -> bool {
        let set: BTreeSet<usize> = h.iter().copied().collect();
        set.contains(&0)
            && set
                .iter()
                .all(|&a| set.iter().all(|&b| set.contains(&self.mul(a, b))))
    }

    pub fn is_normal(&self, h: &[usize]) -> bool {
        self.is_subgroup(h)
            && h.iter().all(|&x| {
                (0..self.n).all(|g| h.contains(&self.mul(self.mul(g, x), self.inv(g))))
            })
    }

    /// Coset group G/N for a verified normal subgroup N.
    pub fn quotient(&self, normal: &[usize]) -> Result<FiniteGroup> {
        if !self.is_subgroup(normal) {
            return Err(Error::NotSubgroup(format!("{normal:?}")));
        }
        if !self.is_normal(normal) {
            return Err(Error::NotNormal(format!("{normal:?}")));
        }
        let nset: BTreeSet<usize> = normal.iter().copied().collect();
        let mut coset_of = vec![usize::MAX; self.n];
        let mut reps: Vec<usize> = Vec::new();
        for g in 0..self.n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for &x in &nset {
                coset_of[self.mul(g, x)] = id;
            }
        }
        let m = reps.len();
        let mut table = vec![vec![0usize; m]; m];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i][j] = coset_of[self.mul(a, b)];
            }
        }
        let labels = reps.iter().map(|&r| format!("[{}]", self.labels[r])).collect();
        FiniteGroup::from_table(table, labels)
    }

    /// Brute-force isomorphism test: maps a minimal generating set of `self`
    /// onto order-compatible tuples of `other` and propagates through words.
    /// Returns a verified witness when one exists.
    pub fn isomorphic(&self, other: &FiniteGroup, cap: usize) -> Result<Option<Vec<usize>>> {
        if self.n != other.n {
            return Ok(None);
        }
        if self.n > cap {
            return Err(Error::OrderCap {
                order: self.n,
                cap,
            });
        }
        // order-profile pruning: the multisets of element orders must match
        let mut prof1: Vec<usize> = self.orders.clone();
        let mut prof2: Vec<usize> = other.orders.clone();
        prof1.sort_unstable();
        prof2.sort_unstable();
        if prof1 != prof2 {
            return Ok(None);
        }
        let gens = self.minimal_generating_set();
        let mut images = vec![0usize; gens.len()];
        if self.search_images(other, &gens, &mut images, 0) {
            let map = self.propagate_map(other, &gens, &images).expect("verified map");
            return Ok(Some(map));
        }
        Ok(None)
    }

    fn search_images(
        &self,
        other: &FiniteGroup,
        gens: &[usize],
        images: &mut Vec<usize>,
        depth: usize,
    ) -> bool {
        if depth == gens.len() {
            return self.propagate_map(other, gens, images).is_some();
        }
        for cand in 0..other.n {
            if other.element_order(cand) != self.element_order(gens[depth]) {
                continue;
            }
            images[depth] = cand;
            if self.search_images(other, gens, images, depth + 1) {
                return true;
            }
        }
        false
    }

    /// Extends gens -> images to a full map by BFS over words; returns the
    /// map only if it is a verified bijective homomorphism.
    fn propagate_map(
        &self,
        other: &FiniteGroup,
        gens: &[usize],
        images: &[usize],
    ) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.n];
        map[0] = 0;
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            for (g_pos, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                let img = other.mul(map[x], images[g_pos]);
                if map[y] == usize::MAX {
                    map[y] = img;
                    queue.push(y);
                } else if map[y] != img {
                    return None;
                }
            }
        }
        if map.iter().any(|&v| v == usize::MAX) {
            return None;
        }
        let mut seen = vec![false; self.n];
        for &v in &map {
            if seen[v] {
                return None;
            }
            seen[v] = true;
        }
        for a in 0..self.n {
            for b in 0..self.n {
                if map[self.mul(a, b)] != other.mul(map[a], map[b]) {
                    return None;
                }
            }
        }
        Some(map)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next permutation in lex order
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

fn permutation_is_even(p: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// First subset of `pool` (ascending indices) of the given size, in
/// lexicographic order, satisfying the predicate.
fn first_subset(
    pool: &[usize],
    size: usize,
    pred: &mut dyn FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    let mut combo: Vec<usize> = (0..size).collect();
    if size > pool.len() {
        return None;
    }
    loop {
        let subset: Vec<usize> = combo.iter().map(|&i| pool[i]).collect();
        if pred(&subset) {
            return Some(subset);
        }
        // advance the combination
        let mut i = size;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if combo[i] != i + pool.len() - size {
                break;
            }
            if i == 0 {
                return None;
            }
        }
        combo[i] += 1;
        for j in i + 1..size {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

/// Parses a group spec string and builds the group, enforcing the order cap.
///
/// Specs: `cyclic:n`, `dihedral:n`, `symmetric:n`, `alternating:n`,
/// `quaternion:8`, `product:<spec>,<spec>[,...]`, `table:<file>`.
pub fn build_group(spec: &str, cap: usize) -> Result<FiniteGroup> {
    let g = parse_spec(spec.trim())?;
    if g.order() > cap {
        return Err(Error::OrderCap {
            order: g.order(),
            cap,
        });
    }
    Ok(g)
}

fn parse_spec(spec: &str) -> Result<FiniteGroup> {
    let err = || Error::Parse(format!("unknown group spec `{spec}`"));
    if let Some(rest) = spec.strip_prefix("cyclic:") {
        return FiniteGroup::cyclic(rest.parse().map_err(|_| err())?);
    }
    if let Some(rest) = spec.strip_prefix("dihedral:") {
        return FiniteGroup::dihedral(rest.parse().map_err(|_| err())?);
    }
    if let Some(rest) = spec.strip_prefix("symmetric:") {
        return FiniteGroup::symmetric(rest.parse().map_err(|_| err())?);
    }
    if let Some(rest) = spec.strip_prefix("alternating:") {
        return FiniteGroup::alternating(rest.parse().map_err(|_| err())?);
    }
    if let Some(rest) = spec.strip_prefix("quaternion:") {
        if rest != "8" {
            return Err(Error::Parse("only quaternion:8 is supported".into()));
        }
        return FiniteGroup::quaternion8();
    }
    if let Some(rest) = spec.strip_prefix("product:") {
        let parts = split_product(rest)?;
        let mut groups = parts.iter().map(|p| parse_spec(p));
        let first = groups.next().ok_or_else(err)??;
        return groups.try_fold(first, |acc, g| acc.product(&g?));
    }
    if let Some(rest) = spec.strip_prefix("table:") {
        return FiniteGroup::from_file(Path::new(rest));
    }
    Err(err())
}

/// Splits `product:` arguments on commas that separate whole specs
/// (`product:` operands themselves contain commas).
fn split_product(s: &str) -> Result<Vec<String>> {
    let mut parts = Vec::new();
    let mut rest = s;
    loop {
        if !rest.starts_with("product:") {
            match rest.split_once(',') {
                Some((head, tail)) => {
                    parts.push(head.to_string());
                    rest = tail;
                }
                None => {
                    parts.push(rest.to_string());
                    break;
                }
            }
            continue;
        }
        // a nested product consumes everything: fold it as the final operand
        parts.push(rest.to_string());
        break;
    }
    if parts.len() < 2 {
        return Err(Error::Parse(format!("product needs at least two factors: `{s}`")));
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_orders() {
        assert_eq!(build_group("symmetric:3", 24).unwrap().order(), 6);
        assert_eq!(build_group("dihedral:4", 24).unwrap().order(), 8);
        assert_eq!(build_group("quaternion:8", 24).unwrap().order(), 8);
        assert_eq!(build_group("alternating:4", 24).unwrap().order(), 12);
        let p = build_group("product:cyclic:2,cyclic:3", 24).unwrap();
        assert_eq!(p.order(), 6);
        let c6 = build_group("cyclic:6", 24).unwrap();
        assert!(p.isomorphic(&c6, 16).unwrap().is_some());
        let triple = build_group("product:cyclic:2,cyclic:2,cyclic:2", 24).unwrap();
        assert_eq!(triple.order(), 8);
        assert!(build_group("symmetric:5", 24).is_err());
    }

    #[test]
    fn element_orders() {
        let c6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(c6.element_order(0), 1);
        assert_eq!(c6.element_order(1), 6);
        let s3 = FiniteGroup::symmetric(3).unwrap();
        // a transposition: one-line "021" swaps the last two letters
        let t = s3.index_of_label("021").unwrap();
        assert_eq!(s3.element_order(t), 2);
        // Lagrange over the presets
        for g in [
            FiniteGroup::cyclic(8).unwrap(),
            FiniteGroup::dihedral(6).unwrap(),
            FiniteGroup::quaternion8().unwrap(),
            FiniteGroup::alternating(4).unwrap(),
        ] {
            for i in 0..g.order() {
                assert_eq!(g.order() % g.element_order(i), 0);
            }
        }
    }

    #[test]
    fn centers() {
        let c6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(c6.center().len(), 6);
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.center(), vec![0]);
        let q8 = FiniteGroup::quaternion8().unwrap();
        // oracle: exhaustive commutation scan
        let brute: Vec<usize> = (0..8)
            .filter(|&z| (0..8).all(|g| q8.mul(z, g) == q8.mul(g, z)))
            .collect();
        assert_eq!(q8.center(), brute);
        assert_eq!(brute, vec![0, 1]); // {1, -1}
    }

    #[test]
    fn conjugacy_class_shapes() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        assert!(c4.conjugacy_classes().iter().all(|c| c.len() == 1));
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let mut sizes: Vec<usize> = s3.conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        let d4 = FiniteGroup::dihedral(4).unwrap();
        assert_eq!(d4.conjugacy_classes().len(), 5);
        // identity is always a singleton and sizes divide the order
        for g in [s3, d4] {
            let classes = g.conjugacy_classes();
            assert_eq!(classes[0], vec![0]);
            for c in classes {
                assert_eq!(g.order() % c.len(), 0);
            }
        }
    }

    #[test]
    fn generation() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let all: Vec<usize> = (0..8).collect();
        assert!(d4.generates(&all));
        let c2 = FiniteGroup::cyclic(2).unwrap();
        assert!(!c2.generates(&[0]));
        // the rotation alone: closure has 4 elements
        assert_eq!(d4.closure(&[1]).len(), 4);
        assert!(!d4.generates(&[1]));
    }

    #[test]
    fn coprime_generating_sets() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let s = s3.coprime_generating_set();
        assert!(s3.generates(&s));
        let orders: Vec<usize> = s.iter().map(|&x| s3.element_order(x)).collect();
        assert!(orders.contains(&2) && orders.contains(&3));
        assert!(!s.contains(&0));

        let c2 = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(c2.coprime_generating_set(), vec![0, 1]);

        let d4 = FiniteGroup::dihedral(4).unwrap();
        let s = d4.coprime_generating_set();
        assert!(s.contains(&0)); // all non-identity orders are powers of 2
        assert!(d4.generates(&s));

        // the invariant: generated + a coprime pair, for every preset
        for g in [
            FiniteGroup::cyclic(6).unwrap(),
            FiniteGroup::dihedral(6).unwrap(),
            FiniteGroup::quaternion8().unwrap(),
            FiniteGroup::alternating(4).unwrap(),
        ] {
            let s = g.coprime_generating_set();
            assert!(g.generates(&s));
            let pair = s.iter().enumerate().any(|(i, &a)| {
                s[i + 1..]
                    .iter()
                    .any(|&b| gcd(g.element_order(a), g.element_order(b)) == 1)
            });
            assert!(pair, "no coprime pair in {s:?}");
        }
    }

    #[test]
    fn quotients() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let q = s3.quotient(&s3.center()).unwrap();
        assert_eq!(q.order(), 6);
        assert!(q.isomorphic(&s3, 16).unwrap().is_some());

        let c4 = FiniteGroup::cyclic(4).unwrap();
        let q = c4.quotient(&[0, 2]).unwrap();
        assert!(q.isomorphic(&FiniteGroup::cyclic(2).unwrap(), 16).unwrap().is_some());

        let q8 = FiniteGroup::quaternion8().unwrap();
        let q = q8.quotient(&q8.center()).unwrap();
        assert_eq!(q.order(), 4);
        let klein = FiniteGroup::cyclic(2).unwrap().product(&FiniteGroup::cyclic(2).unwrap()).unwrap();
        assert!(q.isomorphic(&klein, 16).unwrap().is_some());

        // a non-normal subgroup of S3: generated by one transposition
        let t = s3.index_of_label("021").unwrap();
        assert!(s3.quotient(&[0, t]).is_err());
    }

    #[test]
    fn isomorphism_tests() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let klein = FiniteGroup::cyclic(2).unwrap().product(&FiniteGroup::cyclic(2).unwrap()).unwrap();
        assert!(c4.isomorphic(&klein, 16).unwrap().is_none());

        let c6 = FiniteGroup::cyclic(6).unwrap();
        let p = FiniteGroup::cyclic(2).unwrap().product(&FiniteGroup::cyclic(3).unwrap()).unwrap();
        let witness = c6.isomorphic(&p, 16).unwrap().unwrap();
        // witness is a bijective homomorphism
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(witness[c6.mul(a, b)], p.mul(witness[a], witness[b]));
            }
        }

        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert!(s3.isomorphic(&c6, 16).unwrap().is_none());

        // reflexive and symmetric over a small catalog
        let catalog = [
            FiniteGroup::cyclic(4).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::quaternion8().unwrap(),
        ];
        for g in &catalog {
            assert!(g.isomorphic(g, 16).unwrap().is_some());
        }
        assert!(catalog[1].isomorphic(&catalog[2], 16).unwrap().is_none());
        assert!(catalog[2].isomorphic(&catalog[1], 16).unwrap().is_none());
    }

    #[test]
    fn table_rejects_bad_input() {
        // this table breaks associativity but is a Latin square with identity:
        // row0/col0 identity, then a 5-element "cheat"
        let bad = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let labels = (0..5).map(|i| format!("g{i}")).collect();
        assert!(FiniteGroup::from_table(bad, labels).is_err());

        assert!(build_group("cyclic:30", 24).is_err());
        assert!(build_group("nope:3", 24).is_err());
    }
}
