//! Independent homological oracle for tests.
//!
//! Modules are quiver representations over the prime field `F_p`
//! (`p = 2^31 − 1`): a vector space per vertex and a matrix per arrow
//! `v → v+1`.  The algebra enters only through its projectives, read off
//! from the Kupisch series as spaces of paths killed at length `c_v`.
//! Syzygies are kernels of projective covers, `Hom` dimensions are
//! nullities of the intertwining equations and
//! `Ext^1(M, A) = hom(ΩM, A) − hom(P(M), A) + hom(M, A)`.  Nothing here
//! uses the library's resolution formulas or combinatorial criteria.

#![allow(dead_code)]

const P: u64 = 2_147_483_647;

fn inv(a: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a % P, P - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % P;
        }
        base = base * base % P;
        e >>= 1;
    }
    acc
}

/// Dense matrix with `rows × cols` entries in `F_p`.
#[derive(Clone, Debug)]
pub struct Mat {
    rows: usize,
    cols: usize,
    a: Vec<Vec<u64>>,
}

impl Mat {
    fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, a: vec![vec![0; cols]; rows] }
    }

    fn from_columns(rows: usize, cols: &[Vec<u64>]) -> Self {
        let mut m = Self::zero(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..rows {
                m.a[i][j] = c[i];
            }
        }
        m
    }

    fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.a[i][j]).collect()
    }

    fn apply(&self, v: &[u64]) -> Vec<u64> {
        (0..self.rows)
            .map(|i| (0..self.cols).fold(0, |s, j| (s + self.a[i][j] * v[j]) % P))
            .collect()
    }

    /// Reduced row echelon form; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| self.a[i][c] != 0) else { continue };
            self.a.swap(r, p);
            let s = inv(self.a[r][c]);
            for x in self.a[r].iter_mut() {
                *x = *x * s % P;
            }
            for i in 0..self.rows {
                if i != r && self.a[i][c] != 0 {
                    let f = self.a[i][c];
                    for j in 0..self.cols {
                        self.a[i][j] = (self.a[i][j] + P - f * self.a[r][j] % P) % P;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        pivots
    }

    fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the null space, as column vectors.
    fn nullspace(&self) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let pivots = m.rref();
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![0; self.cols];
                v[free] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = (P - m.a[r][free]) % P;
                }
                v
            })
            .collect()
    }
}

/// Coordinates of `v` in the basis given by the independent columns of `b`.
fn solve(b: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
    let rows = v.len();
    let mut cols = b.to_vec();
    cols.push(v.to_vec());
    let mut m = Mat::from_columns(rows, &cols);
    let pivots = m.rref();
    assert!(!pivots.contains(&b.len()), "vector outside the subspace");
    let mut x = vec![0; b.len()];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = m.a[r][b.len()];
    }
    x
}

/// A Nakayama algebra given by its quiver and Kupisch series.
#[derive(Clone, Debug)]
pub struct Algebra {
    /// Kupisch series `c_0, …, c_{n−1}`.
    pub c: Vec<usize>,
    /// Cyclic quiver (otherwise linear `0 → 1 → … → n−1`).
    pub cyclic: bool,
}

/// A representation: spaces per vertex and arrow matrices.
#[derive(Clone, Debug)]
pub struct Rep {
    dims: Vec<usize>,
    /// `maps[v]`: `dims[v+1] × dims[v]`; absent for the missing arrow of a
    /// linear quiver.
    maps: Vec<Option<Mat>>,
}

impl Algebra {
    /// Builds the algebra.
    pub fn new(c: &[usize], cyclic: bool) -> Self {
        Self { c: c.to_vec(), cyclic }
    }

    fn n(&self) -> usize {
        self.c.len()
    }

    fn has_arrow(&self, v: usize) -> bool {
        self.cyclic || v + 1 < self.n()
    }

    fn next(&self, v: usize) -> usize {
        (v + 1) % self.n()
    }

    fn prev(&self, v: usize) -> Option<usize> {
        if v > 0 {
            Some(v - 1)
        } else if self.cyclic {
            Some(self.n() - 1)
        } else {
            None
        }
    }

    /// Representation of a uniserial module with top `a` and length `len`:
    /// paths of length `0..len` from `a`.
    fn uniserial(&self, a: usize, len: usize) -> Rep {
        let n = self.n();
        let mut dims = vec![0; n];
        let mut slot = Vec::with_capacity(len);
        for l in 0..len {
            let v = (a + l) % n;
            slot.push(dims[v]);
            dims[v] += 1;
        }
        let mut maps: Vec<Option<Mat>> =
            (0..n).map(|v| self.has_arrow(v).then(|| Mat::zero(dims[self.next(v)], dims[v]))).collect();
        for l in 0..len.saturating_sub(1) {
            let v = (a + l) % n;
            if let Some(m) = maps[v].as_mut() {
                m.a[slot[l + 1]][slot[l]] = 1;
            }
        }
        Rep { dims, maps }
    }

    /// Indecomposable projective at `a`.
    pub fn projective(&self, a: usize) -> Rep {
        assert!(self.cyclic || a + self.c[a] <= self.n(), "series leaves the quiver");
        self.uniserial(a, self.c[a])
    }

    /// Simple module at `a`.
    pub fn simple(&self, a: usize) -> Rep {
        self.uniserial(a, 1)
    }

    fn direct_sum(&self, parts: &[Rep]) -> Rep {
        let n = self.n();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|r| r.dims[v]).sum()).collect();
        let maps = (0..n)
            .map(|v| {
                self.has_arrow(v).then(|| {
                    let w = self.next(v);
                    let mut m = Mat::zero(dims[w], dims[v]);
                    let (mut ro, mut co) = (0, 0);
                    for r in parts {
                        let pm = r.maps[v].as_ref().unwrap();
                        for i in 0..pm.rows {
                            for j in 0..pm.cols {
                                m.a[ro + i][co + j] = pm.a[i][j];
                            }
                        }
                        ro += r.dims[w];
                        co += r.dims[v];
                    }
                    m
                })
            })
            .collect();
        Rep { dims, maps }
    }

    /// Generators of the top: at each vertex, standard vectors completing
    /// the image of the incoming arrow.
    fn top_generators(&self, m: &Rep) -> Vec<(usize, Vec<u64>)> {
        let mut gens = Vec::new();
        for v in 0..self.n() {
            let mut span: Vec<Vec<u64>> = match self.prev(v).and_then(|u| m.maps[u].as_ref()) {
                Some(f) => (0..f.cols).map(|j| f.column(j)).collect(),
                None => Vec::new(),
            };
            let mut rank = Mat::from_columns(m.dims[v], &span).rank();
            for e in 0..m.dims[v] {
                let mut x = vec![0; m.dims[v]];
                x[e] = 1;
                span.push(x.clone());
                let r = Mat::from_columns(m.dims[v], &span).rank();
                if r > rank {
                    rank = r;
                    gens.push((v, x));
                } else {
                    span.pop();
                }
            }
        }
        gens
    }

    /// Projective cover (as a direct sum of indecomposables) and syzygy.
    pub fn cover_and_syzygy(&self, m: &Rep) -> (Rep, Rep) {
        let n = self.n();
        let gens = self.top_generators(m);
        let parts: Vec<Rep> = gens.iter().map(|(v, _)| self.projective(*v)).collect();
        let cover = self.direct_sum(&parts);
        // Columns of π_w: image of each basis path of the cover at w.
        let mut cols: Vec<Vec<Vec<u64>>> = (0..n).map(|_| Vec::new()).collect();
        for (v, x) in &gens {
            let mut cur = x.clone();
            let mut at = *v;
            for l in 0..self.c[*v] {
                if l > 0 {
                    cur = match m.maps[(at + n - 1) % n].as_ref() {
                        Some(f) => f.apply(&cur),
                        None => vec![0; m.dims[at]],
                    };
                }
                cols[at].push(cur.clone());
                at = (at + 1) % n;
            }
        }
        let kernels: Vec<Vec<Vec<u64>>> =
            (0..n).map(|w| Mat::from_columns(m.dims[w], &cols[w]).nullspace()).collect();
        let dims: Vec<usize> = kernels.iter().map(Vec::len).collect();
        let maps = (0..n)
            .map(|v| {
                self.has_arrow(v).then(|| {
                    let w = self.next(v);
                    let f = cover.maps[v].as_ref().unwrap();
                    let images: Vec<Vec<u64>> =
                        kernels[v].iter().map(|y| solve(&kernels[w], &f.apply(y))).collect();
                    Mat::from_columns(dims[w], &images)
                })
            })
            .collect();
        (cover, Rep { dims, maps })
    }

    /// `dim Hom(M, N)`.
    pub fn hom(&self, m: &Rep, nrep: &Rep) -> usize {
        let n = self.n();
        let mut offset = vec![0; n + 1];
        for v in 0..n {
            offset[v + 1] = offset[v] + m.dims[v] * nrep.dims[v];
        }
        let unknowns = offset[n];
        if unknowns == 0 {
            return 0;
        }
        // g_v stored row-major: entry (r, s) of the dims_N × dims_M block.
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for v in 0..n {
            if !self.has_arrow(v) {
                continue;
            }
            let w = self.next(v);
            let (fm, fn_) = (m.maps[v].as_ref().unwrap(), nrep.maps[v].as_ref().unwrap());
            // (N_f g_v − g_w M_f)[r][s] = 0 for r < dims_N(w), s < dims_M(v).
            for r in 0..nrep.dims[w] {
                for s in 0..m.dims[v] {
                    let mut eq = vec![0u64; unknowns];
                    for t in 0..nrep.dims[v] {
                        let idx = offset[v] + t * m.dims[v] + s;
                        eq[idx] = (eq[idx] + fn_.a[r][t]) % P;
                    }
                    for t in 0..m.dims[w] {
                        let idx = offset[w] + r * m.dims[w] + t;
                        eq[idx] = (eq[idx] + P - fm.a[t][s]) % P;
                    }
                    rows.push(eq);
                }
            }
        }
        if rows.is_empty() {
            return unknowns;
        }
        let mat = Mat { rows: rows.len(), cols: unknowns, a: rows };
        unknowns - mat.rank()
    }

    /// `dim Hom(M, A)`.
    pub fn hom_to_regular(&self, m: &Rep) -> usize {
        (0..self.n()).map(|j| self.hom(m, &self.projective(j))).sum()
    }
}

impl Rep {
    /// Total dimension.
    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// Projective dimension and `dim Ext^ℓ(S, A)` for `ℓ ≤ pdim` of a simple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleProfile {
    /// `None` when infinite.
    pub pdim: Option<usize>,
    /// `Ext^ℓ(S, A)` for `0 ≤ ℓ ≤ pdim` (empty when infinite).
    pub ext: Vec<usize>,
}

impl SimpleProfile {
    /// `k`-regularity.
    pub fn regular(&self, k: usize) -> bool {
        self.pdim == Some(k) && self.ext[..k].iter().all(|&e| e == 0) && self.ext[k] == 1
    }
}

/// Profile of `S_i`.  Projective dimensions of simples over a Nakayama
/// algebra of rank `n` are at most `2n − 2` when finite, so a nonzero
/// syzygy beyond stage `2n` means infinite dimension.
pub fn simple_profile(alg: &Algebra, i: usize) -> SimpleProfile {
    let bound = 2 * alg.n() + 1;
    let mut syz = vec![alg.simple(i)];
    let mut covers = Vec::new();
    loop {
        let (cover, next) = alg.cover_and_syzygy(syz.last().unwrap());
        covers.push(cover);
        if next.dim() == 0 {
            break;
        }
        if syz.len() > bound {
            return SimpleProfile { pdim: None, ext: Vec::new() };
        }
        syz.push(next);
    }
    let pdim = syz.len() - 1;
    let homs: Vec<usize> = syz.iter().map(|m| alg.hom_to_regular(m)).collect();
    let mut ext = vec![homs[0]];
    for l in 1..=pdim {
        ext.push(homs[l] + homs[l - 1] - alg.hom_to_regular(&covers[l - 1]));
    }
    SimpleProfile { pdim: Some(pdim), ext }
}
