//! Ext over A(1) from scratch, shared with the library only through the
//! module tables it is compared against.
//!
//! A(1) is rebuilt as the algebra of operators generated by `Sq^1`, `Sq^2`
//! on `F2[x1, x2, x3, x4]` (degree-one generators, `Sq^k x^a = C(a, k) x^{a+k}`),
//! a cyclic module as its quotient by a left ideal, and the resolution with
//! sparse elimination.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use sqpd::gradmod::GradedModule;

pub type Set = BTreeSet<usize>;

pub fn xor(a: &mut Set, b: &Set) {
    for &x in b {
        if !a.remove(&x) {
            a.insert(x);
        }
    }
}

/// Echelon rows keyed by their largest entry, each remembering which inputs it combines.
#[derive(Default, Clone)]
pub struct Echelon {
    pub rows: BTreeMap<usize, (Set, Set)>,
}

impl Echelon {
    /// Reduces `v`; returns the remainder and the combination of stored inputs used.
    pub fn reduce(&self, v: &Set) -> (Set, Set) {
        let mut v = v.clone();
        let mut combo = Set::new();
        while let Some(&top) = v.iter().next_back() {
            match self.rows.get(&top) {
                Some((row, c)) => {
                    xor(&mut v, row);
                    xor(&mut combo, c);
                }
                None => break,
            }
        }
        // keep reducing below the first unmatched pivot
        let mut rest = Set::new();
        while let Some(&top) = v.iter().next_back() {
            match self.rows.get(&top) {
                Some((row, c)) => {
                    xor(&mut v, row);
                    xor(&mut combo, c);
                }
                None => {
                    v.remove(&top);
                    rest.insert(top);
                }
            }
        }
        (rest, combo)
    }

    /// Inserts `v` labelled as input `label`; false if it was dependent.
    pub fn insert(&mut self, v: &Set, label: usize) -> bool {
        let (rest, mut combo) = self.reduce(v);
        if rest.is_empty() {
            return false;
        }
        combo.insert(label);
        let top = *rest.iter().next_back().unwrap();
        self.rows.insert(top, (rest, combo));
        true
    }
}

pub type Mono = [u8; 4];

pub fn binom_odd(n: u32, k: u32) -> bool {
    k <= n && (n & k) == k
}

pub fn sq_mono(k: u32, m: &Mono, out: &mut BTreeSet<Mono>) {
    fn go(k: u32, i: usize, m: &Mono, cur: &mut Mono, out: &mut BTreeSet<Mono>) {
        if i == 4 {
            if k == 0 && !out.remove(cur) {
                out.insert(*cur);
            }
            return;
        }
        for ki in 0..=k {
            if binom_odd(m[i] as u32, ki) {
                cur[i] = m[i] + ki as u8;
                go(k - ki, i + 1, m, cur, out);
            }
        }
        cur[i] = m[i];
    }
    let mut cur = *m;
    go(k, 0, m, &mut cur, out);
}

pub fn sq_poly(k: u32, p: &BTreeSet<Mono>) -> BTreeSet<Mono> {
    let mut out = BTreeSet::new();
    for m in p {
        let mut part = BTreeSet::new();
        sq_mono(k, m, &mut part);
        for x in part {
            if !out.remove(&x) {
                out.insert(x);
            }
        }
    }
    out
}

/// A(1) as operators: basis words, degrees and structure constants.
pub struct OracleA1 {
    pub words: Vec<Vec<u32>>,
    pub degree: Vec<u32>,
    /// `mul[i][j]`: coordinates of `b_i b_j`.
    pub mul: Vec<Vec<Set>>,
}

impl OracleA1 {
    pub fn build() -> OracleA1 {
        let mut inputs = Vec::new();
        for a in 0..=4u8 {
            for b in 0..=4u8 {
                for c in 0..=3u8 {
                    for d in 0..=2u8 {
                        if a + b + c + d <= 8 {
                            inputs.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        let mut index: HashMap<(usize, Mono), usize> = HashMap::new();
        let mut operator = |word: &[u32]| -> Set {
            let mut v = Set::new();
            for (n, m) in inputs.iter().enumerate() {
                let mut p = BTreeSet::from([*m]);
                for &k in word.iter().rev() {
                    p = sq_poly(k, &p);
                }
                for x in p {
                    let len = index.len();
                    let id = *index.entry((n, x)).or_insert(len);
                    v.insert(id);
                }
            }
            v
        };
        // words in Sq1, Sq2 by degree; keep the independent ones
        let mut by_degree: Vec<Vec<Vec<u32>>> = vec![vec![vec![]]];
        for d in 1..=7u32 {
            let mut ws = Vec::new();
            for k in [1u32, 2] {
                if d >= k {
                    for w in &by_degree[(d - k) as usize] {
                        let mut x = vec![k];
                        x.extend(w);
                        ws.push(x);
                    }
                }
            }
            by_degree.push(ws);
        }
        let mut words = Vec::new();
        let mut degree = Vec::new();
        let mut spans: Vec<Echelon> = Vec::new();
        for (d, ws) in by_degree.iter().enumerate() {
            let mut e = Echelon::default();
            for w in ws {
                let label = words.len();
                if e.insert(&operator(w), label) {
                    words.push(w.clone());
                    degree.push(d as u32);
                }
            }
            spans.push(e);
        }
        let n = words.len();
        let mut mul = vec![vec![Set::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let d = (degree[i] + degree[j]) as usize;
                if d >= spans.len() {
                    continue;
                }
                let mut w = words[i].clone();
                w.extend(&words[j]);
                let (rest, combo) = spans[d].reduce(&operator(&w));
                assert!(rest.is_empty(), "products stay in the span");
                mul[i][j] = combo;
            }
        }
        OracleA1 { words, degree, mul }
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn index_of(&self, word: &[u32]) -> usize {
        self.words.iter().position(|w| w == word).unwrap()
    }
}

/// A module: basis degrees plus the action of every A(1) basis element.
pub struct OracleModule {
    pub degrees: Vec<i32>,
    /// `act[i][v]`: basis element `i` of A(1) applied to basis vector `v`.
    pub act: Vec<Vec<Set>>,
}

impl OracleModule {
    /// From `Sq^1`, `Sq^2` tables, composing along each basis word.
    pub fn from_tables(alg: &OracleA1, degrees: Vec<i32>, sq1: Vec<Set>, sq2: Vec<Set>) -> Self {
        let apply = |k: u32, v: &Set| -> Set {
            let table = if k == 1 { &sq1 } else { &sq2 };
            let mut out = Set::new();
            for &x in v {
                xor(&mut out, &table[x]);
            }
            out
        };
        let act = alg
            .words
            .iter()
            .map(|w| {
                (0..degrees.len())
                    .map(|v| {
                        let mut x = Set::from([v]);
                        for &k in w.iter().rev() {
                            x = apply(k, &x);
                        }
                        x
                    })
                    .collect()
            })
            .collect();
        OracleModule { degrees, act }
    }

    pub fn from_library(alg: &OracleA1, m: &GradedModule) -> Self {
        let table = |k: u32| -> Vec<Set> {
            let s = m.sq_matrix(k).unwrap();
            (0..m.dim()).map(|j| s.column(j).ones().collect()).collect()
        };
        let degrees = (0..m.dim()).map(|i| m.degree_of(i)).collect();
        OracleModule::from_tables(alg, degrees, table(1), table(2))
    }

    /// `A(1) / A(1){r}` for a basis element `r`, from the regular representation.
    pub fn cyclic_quotient(alg: &OracleA1, r: usize) -> Self {
        let n = alg.dim();
        let mut ideal = Echelon::default();
        for i in 0..n {
            ideal.insert(&alg.mul[i][r], i);
        }
        let mut reps: Vec<usize> = Vec::new();
        let mut ext = ideal.clone();
        for i in 0..n {
            if ext.insert(&Set::from([i]), n + i) {
                reps.push(i);
            }
        }
        // coordinates of an A(1) element modulo the ideal, over reps
        let mut solver = Echelon::default();
        for (pos, &i) in reps.iter().enumerate() {
            solver.insert(&Set::from([i]), pos);
        }
        for (k, row) in ideal.rows.values().enumerate() {
            solver.insert(&row.0, reps.len() + k);
        }
        let coords = |v: &Set| -> Set {
            let (rest, combo) = solver.reduce(v);
            assert!(rest.is_empty());
            combo.into_iter().filter(|&c| c < reps.len()).collect()
        };
        let act = (0..n)
            .map(|i| reps.iter().map(|&b| coords(&alg.mul[i][b])).collect())
            .collect();
        let degrees = reps.iter().map(|&i| alg.degree[i] as i32).collect();
        OracleModule { degrees, act }
    }

    pub fn dim_in(&self, t: i32) -> usize {
        self.degrees.iter().filter(|&&d| d == t).count()
    }

    pub fn basis_in(&self, t: i32) -> Vec<usize> {
        (0..self.degrees.len()).filter(|&i| self.degrees[i] == t).collect()
    }
}

/// Free stage: generator degrees and the images of the generators, stored
/// over the whole target basis (module indices, or `(g, i)` pairs flattened).
pub struct Stage {
    pub gens: Vec<i32>,
    pub diff: Vec<Set>,
}

pub enum Tgt<'a> {
    Module(&'a OracleModule),
    Free,
}

pub fn free_basis(alg: &OracleA1, gens: &[i32], t: i32) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (g, &d) in gens.iter().enumerate() {
        for i in 0..alg.dim() {
            if d + alg.degree[i] as i32 == t {
                out.push((g, i));
            }
        }
    }
    out
}

pub fn pair_id(alg: &OracleA1, g: usize, i: usize) -> usize {
    g * alg.dim() + i
}

/// Image under `d` of basis element `(g, i)` of a stage: `b_i · d(g)`.
pub fn image(alg: &OracleA1, stage: &Stage, target: &Tgt<'_>, g: usize, i: usize) -> Set {
    let mut out = Set::new();
    for &x in &stage.diff[g] {
        match target {
            Tgt::Module(m) => xor(&mut out, &m.act[i][x]),
            Tgt::Free => {
                let (h, b) = (x / alg.dim(), x % alg.dim());
                for &l in &alg.mul[i][b] {
                    xor(&mut out, &Set::from([pair_id(alg, h, l)]));
                }
            }
        }
    }
    out
}

pub struct OracleResolution {
    pub stages: Vec<Stage>,
}

pub fn resolve(alg: &OracleA1, m: &OracleModule, s_max: usize, t_max: i32) -> OracleResolution {
    let lo = *m.degrees.iter().min().unwrap();
    let mut stages: Vec<Stage> = Vec::new();
    for s in 0..=s_max {
        let mut stage = Stage {
            gens: Vec::new(),
            diff: Vec::new(),
        };
        for t in lo..=t_max {
            // vectors to cover, in the target's coordinates
            let to_cover: Vec<Set> = if s == 0 {
                m.basis_in(t).into_iter().map(|v| Set::from([v])).collect()
            } else {
                let prev = &stages[s - 1];
                let beyond = if s == 1 { Tgt::Module(m) } else { Tgt::Free };
                let cols = free_basis(alg, &prev.gens, t);
                let mut e = Echelon::default();
                let mut kernel = Vec::new();
                for (c, &(g, i)) in cols.iter().enumerate() {
                    let v = image(alg, prev, &beyond, g, i);
                    let (rest, mut combo) = e.reduce(&v);
                    if rest.is_empty() {
                        combo.insert(c);
                        kernel.push(combo.iter().map(|&k| pair_id(alg, cols[k].0, cols[k].1)).collect());
                    } else {
                        e.insert(&v, c);
                    }
                }
                kernel
            };
            let target = if s == 0 { Tgt::Module(m) } else { Tgt::Free };
            let mut span = Echelon::default();
            let mut label = 0;
            for (g, i) in free_basis(alg, &stage.gens, t) {
                span.insert(&image(alg, &stage, &target, g, i), label);
                label += 1;
            }
            for v in to_cover {
                if span.insert(&v, label) {
                    label += 1;
                    stage.gens.push(t);
                    stage.diff.push(v);
                }
            }
        }
        stages.push(stage);
    }
    OracleResolution { stages }
}

impl OracleResolution {
    pub fn dim(&self, s: usize, t: i32) -> usize {
        self.stages[s].gens.iter().filter(|&&g| g == t).count()
    }

    /// `Σ_s (-1)^s dim F_s(t)` against `dim M(t) ± dim ker d_S(t)`.
    pub fn euler_holds(&self, alg: &OracleA1, m: &OracleModule, t: i32) -> bool {
        let s_max = self.stages.len() - 1;
        let mut chi: i64 = 0;
        for (s, st) in self.stages.iter().enumerate() {
            let n = free_basis(alg, &st.gens, t).len() as i64;
            chi += if s % 2 == 0 { n } else { -n };
        }
        let last = &self.stages[s_max];
        let target = if s_max == 0 { Tgt::Module(m) } else { Tgt::Free };
        let mut e = Echelon::default();
        let cols = free_basis(alg, &last.gens, t);
        let mut rank = 0;
        for (c, &(g, i)) in cols.iter().enumerate() {
            if e.insert(&image(alg, last, &target, g, i), c) {
                rank += 1;
            }
        }
        let ker = (cols.len() - rank) as i64;
        let sign = if s_max.is_multiple_of(2) { 1 } else { -1 };
        chi == m.dim_in(t) as i64 + sign * ker
    }
}

pub fn trivial() -> OracleModule {
    OracleModule {
        degrees: vec![0],
        act: Vec::new(),
    }
}

pub fn with_trivial_action(alg: &OracleA1, m: OracleModule) -> OracleModule {
    let n = m.degrees.len();
    let act = (0..alg.dim())
        .map(|i| (0..n).map(|v| if alg.degree[i] == 0 { Set::from([v]) } else { Set::new() }).collect())
        .collect();
    OracleModule { act, ..m }
}

pub fn shifted(m: OracleModule, by: i32) -> OracleModule {
    OracleModule {
        degrees: m.degrees.iter().map(|d| d + by).collect(),
        act: m.act,
    }
}

pub fn sum(a: OracleModule, b: OracleModule) -> OracleModule {
    let n = a.degrees.len();
    let mut degrees = a.degrees.clone();
    degrees.extend(&b.degrees);
    let act = a
        .act
        .into_iter()
        .zip(b.act)
        .map(|(x, y)| {
            let mut col = x;
            col.extend(y.into_iter().map(|s| s.into_iter().map(|v| v + n).collect()));
            col
        })
        .collect();
    OracleModule { degrees, act }
}
