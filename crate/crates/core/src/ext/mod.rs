//! Minimal free resolutions over A(1) and Ext charts.
//!
//! The resolution is built one internal degree at a time. In stage `s` and
//! degree `t`, the part of `ker d_{s-1}` in degree `t` is compared with the
//! image of the generators already chosen; every kernel vector not yet
//! covered becomes a new generator. Chosen this way, no generator maps to a
//! combination involving a generator of the same degree, so the number of
//! stage-`s` generators in degree `t` is `dim Ext^{s,t}(M, F2)`.

mod render;

use std::collections::{BTreeMap, HashMap};

use crate::f2linalg::{F2Matrix, F2Vector, Span};
use crate::gradmod::{AlgebraTag, GradedModule, ModuleError};
use crate::steenrod::a1;

pub use render::{render_chart, ChartFormat};

/// A free A(1)-module, described by its generator degrees.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FreeModule {
    pub generators: Vec<i32>,
}

impl FreeModule {
    /// Basis of degree `t`: pairs `(generator, A(1) basis index)`.
    pub fn basis_in(&self, t: i32) -> Vec<(usize, usize)> {
        let alg = a1();
        let mut out = Vec::new();
        for (g, &tg) in self.generators.iter().enumerate() {
            let e = t - tg;
            if !(0..=alg.top_degree() as i32).contains(&e) {
                continue;
            }
            out.extend(alg.indices_in_degree(e as u32).map(|i| (g, i)));
        }
        out
    }

    pub fn dim_in(&self, t: i32) -> usize {
        self.basis_in(t).len()
    }
}

/// Either the module being resolved or a free stage.
enum Target<'a> {
    Module(&'a GradedModule),
    Free(&'a FreeModule),
}

impl Target<'_> {
    fn dim_in(&self, t: i32) -> usize {
        match self {
            Target::Module(m) => m.dim_in(t),
            Target::Free(f) => f.dim_in(t),
        }
    }

    /// `b_i · v` for `v` of degree `t`, landing in degree `t + |b_i|`.
    fn act(&self, i: usize, t: i32, v: &F2Vector, ops: &[F2Matrix]) -> F2Vector {
        let alg = a1();
        let u = t + alg.degree_of(i) as i32;
        match self {
            Target::Module(m) => {
                let src = m.range(t);
                let dst = m.range(u);
                let mut full = F2Vector::zeros(m.dim());
                for j in v.ones() {
                    full.flip(src.start + j);
                }
                let image = ops[i].mul_vec(&full);
                F2Vector::from_indices(dst.len(), image.ones().map(|r| r - dst.start))
            }
            Target::Free(f) => {
                let from = f.basis_in(t);
                let to: HashMap<(usize, usize), usize> =
                    f.basis_in(u).into_iter().enumerate().map(|(k, x)| (x, k)).collect();
                let mut out = F2Vector::zeros(to.len());
                for j in v.ones() {
                    let (g, b) = from[j];
                    for l in alg.product(i, b).ones() {
                        out.flip(to[&(g, l)]);
                    }
                }
                out
            }
        }
    }
}

/// One stage `F_s` with its differential `d_s: F_s -> F_{s-1}` (or onto
/// the module for `s = 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionStage {
    pub s: u32,
    pub free: FreeModule,
    /// Image of each generator, in the target's degree-`t_g` coordinates.
    pub differential: Vec<F2Vector>,
}

impl ResolutionStage {
    pub fn generator_degrees(&self) -> &[i32] {
        &self.free.generators
    }
}

/// A minimal resolution through internal degree `t_max`.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub module: GradedModule,
    pub t_max: i32,
    pub stages: Vec<ResolutionStage>,
}

fn module_ops(m: &GradedModule) -> Vec<F2Matrix> {
    (0..a1().dim()).map(|i| m.a1_basis_matrix(i)).collect()
}

/// Matrix of `d` on the degree-`t` part of a stage, columns indexed by `stage.basis_in(t)`.
fn differential_matrix(stage: &ResolutionStage, target: &Target<'_>, t: i32, ops: &[F2Matrix]) -> F2Matrix {
    let rows = target.dim_in(t);
    let cols: Vec<F2Vector> = stage
        .free
        .basis_in(t)
        .into_iter()
        .map(|(g, i)| target.act(i, stage.free.generators[g], &stage.differential[g], ops))
        .collect();
    F2Matrix::from_columns(rows, &cols)
}

/// Computes a minimal free resolution of `m` over A(1) for stages
/// `0..=s_max`, exact through internal degree `t_max`.
pub fn minimal_resolution(m: &GradedModule, s_max: u32, t_max: i32) -> Result<Resolution, ModuleError> {
    if m.tag() != AlgebraTag::A1 {
        return Err(ModuleError::RequiresA1);
    }
    let ops = module_ops(m);
    let mut stages: Vec<ResolutionStage> = Vec::new();
    let Some((lo, _)) = m.degree_range() else {
        let stages = (0..=s_max)
            .map(|s| ResolutionStage {
                s,
                free: FreeModule::default(),
                differential: Vec::new(),
            })
            .collect();
        return Ok(Resolution {
            module: m.clone(),
            t_max,
            stages,
        });
    };
    for s in 0..=s_max {
        let mut stage = ResolutionStage {
            s,
            free: FreeModule::default(),
            differential: Vec::new(),
        };
        let prev = s.checked_sub(1).map(|p| &stages[p as usize]);
        let target = match prev {
            None => Target::Module(m),
            Some(p) => Target::Free(&p.free),
        };
        let before = s.checked_sub(2).map(|p| &stages[p as usize]);
        for t in lo + s as i32..=t_max {
            // what must be covered in degree t
            let to_cover: Vec<F2Vector> = match prev {
                None => (0..m.dim_in(t)).map(|j| F2Vector::unit(m.dim_in(t), j)).collect(),
                Some(p) => {
                    let beyond = match before {
                        None => Target::Module(m),
                        Some(b) => Target::Free(&b.free),
                    };
                    differential_matrix(p, &beyond, t, &ops).kernel_basis()
                }
            };
            if to_cover.is_empty() {
                continue;
            }
            let mut image = Span::new(target.dim_in(t));
            for col in differential_matrix(&stage, &target, t, &ops).transpose().row_iter() {
                image.insert(col);
            }
            for v in to_cover {
                if image.insert(&v) {
                    stage.free.generators.push(t);
                    stage.differential.push(v);
                }
            }
        }
        stages.push(stage);
    }
    Ok(Resolution {
        module: m.clone(),
        t_max,
        stages,
    })
}

impl Resolution {
    fn target(&self, s: u32) -> Target<'_> {
        match s {
            0 => Target::Module(&self.module),
            _ => Target::Free(&self.stages[s as usize - 1].free),
        }
    }

    /// Matrix of `d_s` in internal degree `t`.
    pub fn differential_in(&self, s: u32, t: i32) -> F2Matrix {
        let ops = module_ops(&self.module);
        differential_matrix(&self.stages[s as usize], &self.target(s), t, &ops)
    }

    /// `d_{s-1} ∘ d_s = 0` in every stage and degree.
    pub fn composites_vanish(&self) -> bool {
        let lo = self.module.degree_range().map_or(0, |(lo, _)| lo);
        (1..self.stages.len() as u32).all(|s| {
            (lo..=self.t_max).all(|t| {
                let a = self.differential_in(s - 1, t);
                let b = self.differential_in(s, t);
                b.cols() == 0 || a.mul(&b).is_zero()
            })
        })
    }

    /// No generator's image involves a generator of the same degree.
    pub fn is_minimal(&self) -> bool {
        self.stages.iter().skip(1).all(|st| {
            let prev = &self.stages[st.s as usize - 1].free;
            st.free.generators.iter().zip(&st.differential).all(|(&t, v)| {
                let basis = prev.basis_in(t);
                v.ones().all(|j| basis[j].1 != 0)
            })
        })
    }

    /// Exactness: the image of `d_s` equals `ker d_{s-1}` (or all of the
    /// module for `s = 0`) in degree `t`.
    pub fn is_exact_at(&self, s: u32, t: i32) -> bool {
        let d = self.differential_in(s, t);
        let kernel_dim = if s == 0 {
            self.module.dim_in(t)
        } else {
            self.differential_in(s - 1, t).kernel_basis().len()
        };
        d.rank() == kernel_dim
    }

    pub fn chart(&self) -> ExtChart {
        let mut dims = BTreeMap::new();
        for st in &self.stages {
            for &t in &st.free.generators {
                *dims.entry((st.s, t)).or_insert(0) += 1;
            }
        }
        ExtChart {
            s_max: self.stages.len().saturating_sub(1) as u32,
            t_max: self.t_max,
            dims,
        }
    }
}

/// Dimensions of `Ext^{s,t}_{A(1)}(M, F2)` for `s <= s_max`, `t <= t_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtChart {
    pub s_max: u32,
    pub t_max: i32,
    /// Nonzero entries only.
    pub dims: BTreeMap<(u32, i32), usize>,
}

impl ExtChart {
    pub fn dim(&self, s: u32, t: i32) -> usize {
        self.dims.get(&(s, t)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }
}

pub fn ext_chart(m: &GradedModule, s_max: u32, t_max: i32) -> Result<ExtChart, ModuleError> {
    Ok(minimal_resolution(m, s_max, t_max)?.chart())
}

/// `dim Ext^{s,s}` for `0 <= s <= s_max`.
pub fn e2_diagonal(m: &GradedModule, s_max: u32) -> Result<Vec<usize>, ModuleError> {
    let chart = ext_chart(m, s_max, s_max as i32)?;
    Ok((0..=s_max).map(|s| chart.dim(s, s as i32)).collect())
}
