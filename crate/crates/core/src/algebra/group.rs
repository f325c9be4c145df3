use crate::error::{Error, Result};
use std::collections::HashMap;
use std::hash::Hash;

/// Largest group produced by closure; guards against runaway generator sets.
pub const MAX_GROUP_ORDER: usize = 1 << 14;

/// Finite group stored as a multiplication table on `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
    identity: usize,
    names: Vec<String>,
    generators: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from a full table, checking the group axioms.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || names.len() != n {
            return Err(Error::InvalidGroup(format!("{} names for a table with {n} rows", names.len())));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n || row.iter().any(|&v| v >= n) {
                return Err(Error::InvalidGroup(format!("row {i} is not a map into the element set")));
            }
            flat.extend_from_slice(row);
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| flat[e * n + a] == a && flat[a * n + e] == a))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[a] = (0..n)
                .find(|&b| flat[a * n + b] == identity && flat[b * n + a] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {} has no inverse", names[a])))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if flat[flat[a * n + b] * n + c] != flat[a * n + flat[b * n + c]] {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        Ok(Self { n, table: flat, inv, identity, names, generators: Vec::new() })
    }

    /// Closes `gens` under an associative multiplication. Returns the group
    /// together with the concrete element behind each id (id 0 is `identity`).
    pub fn from_closure<T, M, N>(gens: &[T], identity: T, mul: M, name: N) -> Result<(Self, Vec<T>)>
    where
        T: Clone + Eq + Hash,
        M: Fn(&T, &T) -> T,
        N: Fn(&T) -> String,
    {
        let mut elems = vec![identity];
        let mut index: HashMap<T, usize> = HashMap::new();
        index.insert(elems[0].clone(), 0);
        let mut gen_ids = Vec::new();
        for g in gens {
            let id = *index.entry(g.clone()).or_insert_with(|| {
                elems.push(g.clone());
                elems.len() - 1
            });
            gen_ids.push(id);
        }
        let mut frontier = 0;
        while frontier < elems.len() {
            let a = elems[frontier].clone();
            for g in gens {
                let p = mul(&a, g);
                if !index.contains_key(&p) {
                    if elems.len() >= MAX_GROUP_ORDER {
                        return Err(Error::InvalidGroup(format!("closure exceeds {MAX_GROUP_ORDER} elements")));
                    }
                    index.insert(p.clone(), elems.len());
                    elems.push(p);
                }
            }
            frontier += 1;
        }
        let n = elems.len();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let p = mul(&elems[a], &elems[b]);
                table[a * n + b] = *index
                    .get(&p)
                    .ok_or_else(|| Error::InvalidGroup("generated set is not closed under products".into()))?;
            }
        }
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            if let Some(b) = (0..n).find(|&b| table[a * n + b] == 0) {
                inv[a] = b;
            } else {
                return Err(Error::InvalidGroup("generated monoid is not a group".into()));
            }
        }
        let names = elems.iter().map(&name).collect();
        Ok((Self { n, table, inv, identity: 0, names, generators: gen_ids }, elems))
    }

    /// Group generated by permutations of `0..degree`.
    pub fn from_permutations(gens: &[Vec<usize>]) -> Result<(Self, Vec<Vec<usize>>)> {
        let degree = gens.first().map_or(0, Vec::len);
        for g in gens {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&v| v >= degree || std::mem::replace(&mut seen[v], true)) {
                return Err(Error::InvalidGroup(format!("{g:?} is not a permutation of 0..{degree}")));
            }
        }
        // (a * b)(i) = a(b(i)): apply b first.
        let (mut group, elems) = Self::from_closure(
            gens,
            (0..degree).collect(),
            |a: &Vec<usize>, b: &Vec<usize>| b.iter().map(|&i| a[i]).collect(),
            |p| format!("{p:?}"),
        )?;
        group.names = group.word_names();
        Ok((group, elems))
    }

    /// Shortest words in the recorded generators: powers `0, 1, 2, …` for a
    /// single generator, otherwise `e` and products such as `g1g2`.
    fn word_names(&self) -> Vec<String> {
        let gens = self.generators.clone();
        let mut names = vec![String::new(); self.n];
        let mut power = vec![0usize; self.n];
        let mut seen = vec![false; self.n];
        seen[self.identity] = true;
        let mut queue = std::collections::VecDeque::from([self.identity]);
        names[self.identity] = if gens.len() == 1 { "0".into() } else { "e".into() };
        while let Some(a) = queue.pop_front() {
            for (k, &g) in gens.iter().enumerate() {
                let p = self.mul(a, g);
                if !std::mem::replace(&mut seen[p], true) {
                    power[p] = power[a] + 1;
                    names[p] = if gens.len() == 1 {
                        power[p].to_string()
                    } else if a == self.identity {
                        format!("g{}", k + 1)
                    } else {
                        format!("{}g{}", names[a], k + 1)
                    };
                    queue.push_back(p);
                }
            }
        }
        names
    }

    pub fn cyclic(d: usize) -> Self {
        assert!(d >= 1);
        let table = (0..d).map(|a| (0..d).map(|b| (a + b) % d).collect()).collect();
        let mut g = Self::from_table((0..d).map(|a| a.to_string()).collect(), table).expect("cyclic table");
        if d > 1 {
            g.generators = vec![1];
        }
        g
    }

    /// Direct product; element `(a, b)` has id `a * |h| + b`.
    pub fn direct_product(g: &Self, h: &Self) -> Self {
        let (n, m) = (g.n, h.n);
        let mut table = vec![0; n * m * n * m];
        for a in 0..n * m {
            for b in 0..n * m {
                table[a * n * m + b] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
            }
        }
        let inv = (0..n * m).map(|a| g.inv(a / m) * m + h.inv(a % m)).collect();
        let names = (0..n * m).map(|a| format!("({},{})", g.name(a / m), h.name(a % m))).collect();
        let mut generators: Vec<usize> = g.generators.iter().map(|&a| a * m + h.identity).collect();
        generators.extend(h.generators.iter().map(|&b| g.identity * m + b));
        Self { n: n * m, table, inv, identity: g.identity * m + h.identity, names, generators }
    }

    pub fn order(&self) -> usize {
        self.n
    }
    pub fn identity(&self) -> usize {
        self.identity
    }
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }
    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }
    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Generators recorded at construction; all non-identity elements if none were.
    pub fn generators(&self) -> Vec<usize> {
        if self.generators.is_empty() {
            self.elements().filter(|&a| a != self.identity).collect()
        } else {
            self.generators.clone()
        }
    }

    pub fn with_generators(mut self, gens: Vec<usize>) -> Result<Self> {
        if gens.iter().any(|&g| g >= self.n) {
            return Err(Error::InvalidGroup("generator id out of range".into()));
        }
        let mut seen = vec![false; self.n];
        seen[self.identity] = true;
        let mut stack = vec![self.identity];
        while let Some(a) = stack.pop() {
            for &g in &gens {
                let p = self.mul(a, g);
                if !std::mem::replace(&mut seen[p], true) {
                    stack.push(p);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidGroup("generators do not generate the group".into()));
        }
        self.generators = gens;
        Ok(self)
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut p = a;
        while p != self.identity {
            p = self.mul(p, a);
            k += 1;
        }
        k
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_central(&self, a: usize) -> bool {
        self.elements().all(|b| self.commute(a, b))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.is_central(a))
    }

    /// `k` with `j^k = x`, if `x` lies in the cyclic subgroup generated by `j`.
    pub fn log(&self, j: usize, x: usize) -> Option<usize> {
        let mut p = self.identity;
        for k in 0..self.element_order(j) {
            if p == x {
                return Some(k);
            }
            p = self.mul(p, j);
        }
        None
    }

    /// Quotient by the cyclic subgroup generated by a central element. Returns
    /// the quotient, the projection, and the cosets (each sorted, so the first
    /// entry is a canonical representative).
    pub fn quotient_by_central(&self, j: usize) -> Result<(Self, Vec<usize>, Vec<Vec<usize>>)> {
        if !self.is_central(j) {
            return Err(Error::InvalidGroup(format!("{} is not central", self.name(j))));
        }
        let sub: Vec<usize> = (0..self.element_order(j)).map(|k| self.pow(j, k)).collect();
        let mut proj = vec![usize::MAX; self.n];
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for a in self.elements() {
            if proj[a] == usize::MAX {
                let mut c: Vec<usize> = sub.iter().map(|&s| self.mul(a, s)).collect();
                c.sort_unstable();
                for &x in &c {
                    proj[x] = cosets.len();
                }
                cosets.push(c);
            }
        }
        let m = cosets.len();
        let table: Vec<Vec<usize>> =
            (0..m).map(|a| (0..m).map(|b| proj[self.mul(cosets[a][0], cosets[b][0])]).collect()).collect();
        let names = cosets.iter().map(|c| self.name(c[0]).to_string()).collect();
        let mut q = Self::from_table(names, table)?;
        if !self.generators.is_empty() {
            let mut gens: Vec<usize> = self.generators.iter().map(|&g| proj[g]).filter(|&g| g != q.identity).collect();
            gens.dedup();
            q = q.with_generators(gens)?;
        }
        Ok((q, proj, cosets))
    }
}
