//! The orthogonal Lie algebra so(k1+k2+k3) with its six-module block
//! decomposition, structure constants, and the general Ricci formula used as
//! a numeric oracle against the closed forms in [`crate::ricci`].
//!
//! The Killing form of so(n) is `B(X, Y) = (n-2) tr(XY)`; basis elements are
//! the scaled skew pairs `(E_ab - E_ba) / sqrt(2(n-2))`, which are
//! (-B)-orthonormal. Structure quantities are computed in double precision:
//! this module's role is cross-validation, exactness lives in the solver.

use std::collections::BTreeMap;
use std::fmt;

use crate::ricci::{MetricParams, RicciComponents};

/// Labels for the six invariant modules of the decomposition: the three
/// diagonal blocks and the three off-diagonal strips.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModuleLabel {
    M1,
    M2,
    M3,
    M12,
    M13,
    M23,
}

pub const MODULES: [ModuleLabel; 6] = [
    ModuleLabel::M1,
    ModuleLabel::M2,
    ModuleLabel::M3,
    ModuleLabel::M12,
    ModuleLabel::M13,
    ModuleLabel::M23,
];

impl ModuleLabel {
    pub fn index(self) -> usize {
        match self {
            ModuleLabel::M1 => 0,
            ModuleLabel::M2 => 1,
            ModuleLabel::M3 => 2,
            ModuleLabel::M12 => 3,
            ModuleLabel::M13 => 4,
            ModuleLabel::M23 => 5,
        }
    }
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ModuleLabel::M1 => "1",
            ModuleLabel::M2 => "2",
            ModuleLabel::M3 => "3",
            ModuleLabel::M12 => "12",
            ModuleLabel::M13 => "13",
            ModuleLabel::M23 => "23",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("invalid block sizes ({0}, {1}, {2}): each must be >= 2 and the total >= 7")]
    InvalidBlocks(u32, u32, u32),
}

/// Block sizes `(k1, k2, k3)` with the derived dimensions of the six modules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupSpec {
    pub k1: u32,
    pub k2: u32,
    pub k3: u32,
    pub n: u32,
}

impl GroupSpec {
    pub fn new(k1: u32, k2: u32, k3: u32) -> Result<Self, LieError> {
        let n = k1 + k2 + k3;
        if k1 < 2 || k2 < 2 || k3 < 2 || n < 7 {
            return Err(LieError::InvalidBlocks(k1, k2, k3));
        }
        Ok(GroupSpec { k1, k2, k3, n })
    }

    /// Module dimensions in the order (1, 2, 3, 12, 13, 23).
    pub fn dims(&self) -> [u32; 6] {
        let (k1, k2, k3) = (self.k1, self.k2, self.k3);
        [
            k1 * (k1 - 1) / 2,
            k2 * (k2 - 1) / 2,
            k3 * (k3 - 1) / 2,
            k1 * k2,
            k1 * k3,
            k2 * k3,
        ]
    }

    pub fn dim_so_n(&self) -> u32 {
        self.n * (self.n - 1) / 2
    }

    /// Which diagonal block a matrix index belongs to (0, 1, or 2).
    fn block_of(&self, idx: u32) -> u32 {
        if idx < self.k1 {
            0
        } else if idx < self.k1 + self.k2 {
            1
        } else {
            2
        }
    }

    fn module_of_pair(&self, a: u32, b: u32) -> ModuleLabel {
        match (self.block_of(a), self.block_of(b)) {
            (0, 0) => ModuleLabel::M1,
            (1, 1) => ModuleLabel::M2,
            (2, 2) => ModuleLabel::M3,
            (0, 1) | (1, 0) => ModuleLabel::M12,
            (0, 2) | (2, 0) => ModuleLabel::M13,
            _ => ModuleLabel::M23,
        }
    }
}

/// One (-B)-unit basis element: the skew pair `(E_ab - E_ba) * norm_factor`
/// with `a < b`, labeled by the module its index pair lands in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisElement {
    pub row: u32,
    pub col: u32,
    pub module_label: ModuleLabel,
    pub norm_factor: f64,
}

/// The full basis of so(n) with a pair-index lookup for bracket expansion.
#[derive(Debug, Clone)]
pub struct Basis {
    pub spec: GroupSpec,
    pub elements: Vec<BasisElement>,
    index: BTreeMap<(u32, u32), usize>,
}

/// Builds the (-B)-orthonormal basis, ordered by module then by index pair.
pub fn build_basis(spec: &GroupSpec) -> Basis {
    let norm = 1.0 / (2.0 * f64::from(spec.n - 2)).sqrt();
    let mut elements = Vec::with_capacity(spec.dim_so_n() as usize);
    for module in MODULES {
        for a in 0..spec.n {
            for b in (a + 1)..spec.n {
                if spec.module_of_pair(a, b) == module {
                    elements.push(BasisElement {
                        row: a,
                        col: b,
                        module_label: module,
                        norm_factor: norm,
                    });
                }
            }
        }
    }
    let index = elements
        .iter()
        .enumerate()
        .map(|(i, e)| ((e.row, e.col), i))
        .collect();
    Basis { spec: *spec, elements, index }
}

impl Basis {
    /// Expansion coefficients of the commutator `[e_i, e_j]` in the basis.
    ///
    /// For skew pairs the commutator has at most two nonzero coefficients;
    /// distinct pairs sharing exactly one matrix index give exactly one.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<(usize, f64)> {
        let (x, y) = (&self.elements[i], &self.elements[j]);
        // [E_ab - E_ba, E_cd - E_dc] = d_bc (E_ad - E_da) + d_ad (E_bc - E_cb)
        //                            - d_ac (E_bd - E_db) - d_bd (E_ac - E_ca)
        let (a, b, c, d) = (x.row, x.col, y.row, y.col);
        let scale = x.norm_factor; // one factor survives renormalization
        let mut out: Vec<(usize, f64)> = Vec::with_capacity(2);
        let mut push = |p: u32, q: u32, coeff: f64| {
            if p == q {
                return;
            }
            let (key, sign) = if p < q { ((p, q), 1.0) } else { ((q, p), -1.0) };
            let idx = self.index[&key];
            let c = coeff * sign * scale;
            if let Some(entry) = out.iter_mut().find(|(k, _)| *k == idx) {
                entry.1 += c;
                return;
            }
            out.push((idx, c));
        };
        if b == c {
            push(a, d, 1.0);
        }
        if a == d {
            push(b, c, 1.0);
        }
        if a == c {
            push(b, d, -1.0);
        }
        if b == d {
            push(a, c, -1.0);
        }
        out.retain(|(_, c)| *c != 0.0);
        out
    }
}

/// The nonnegative structure quantities: for each unordered module triple,
/// the sum of squared bracket coefficients between those modules.
#[derive(Debug, Clone)]
pub struct TripleProducts {
    table: BTreeMap<[ModuleLabel; 3], f64>,
}

impl TripleProducts {
    /// Looks up a triple in any argument order.
    pub fn get(&self, i: ModuleLabel, j: ModuleLabel, k: ModuleLabel) -> f64 {
        let mut key = [i, j, k];
        key.sort();
        self.table.get(&key).copied().unwrap_or(0.0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[ModuleLabel; 3], &f64)> {
        self.table.iter()
    }

    /// CSV export, one row `i,j,k,value` per unordered triple.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,k,value\n");
        for (key, v) in &self.table {
            out.push_str(&format!("{},{},{},{:.17e}\n", key[0], key[1], key[2], v));
        }
        out
    }
}

/// Computes the full triple-product table by brute force over all basis
/// pairs. The ordered sums are accumulated first and checked for the
/// permutation symmetry the quantities must satisfy.
pub fn triple_products(spec: &GroupSpec) -> TripleProducts {
    let basis = build_basis(spec);
    let m = basis.elements.len();
    // ordered accumulation T[i][j][k]
    let mut ordered = [[[0.0f64; 6]; 6]; 6];
    for alpha in 0..m {
        let mi = basis.elements[alpha].module_label.index();
        for beta in 0..m {
            let mj = basis.elements[beta].module_label.index();
            for (gamma, coeff) in basis.bracket(alpha, beta) {
                let mk = basis.elements[gamma].module_label.index();
                ordered[mi][mj][mk] += coeff * coeff;
            }
        }
    }
    let mut table = BTreeMap::new();
    for (i, mi) in MODULES.iter().enumerate() {
        for (j, mj) in MODULES.iter().enumerate().skip(i) {
            for (k, mk) in MODULES.iter().enumerate().skip(j) {
                let perms = [
                    ordered[i][j][k],
                    ordered[i][k][j],
                    ordered[j][i][k],
                    ordered[j][k][i],
                    ordered[k][i][j],
                    ordered[k][j][i],
                ];
                let v = perms[0];
                for p in perms {
                    debug_assert!(
                        (p - v).abs() <= 1e-9 * v.abs().max(1.0),
                        "triple product not symmetric at ({mi},{mj},{mk})"
                    );
                }
                table.insert([*mi, *mj, *mk], v);
            }
        }
    }
    TripleProducts { table }
}

/// Ricci components from the general formula over the triple products:
///
/// `r_k = 1/(2 x_k) + 1/(4 d_k) sum_{j,i} (x_k / (x_j x_i)) (kji)
///               - 1/(2 d_k) sum_{j,i} (x_j / (x_k x_i)) (jki)`
///
/// with both sums over all ordered module pairs (j, i).
pub fn ricci_general(
    spec: &GroupSpec,
    tp: &TripleProducts,
    x: &MetricParams,
) -> Result<RicciComponents, crate::ricci::MetricError> {
    let xs = x.as_array();
    if xs.iter().any(|&v| v <= 0.0 || !v.is_finite()) {
        return Err(crate::ricci::MetricError::DegenerateMetric);
    }
    let dims = spec.dims();
    let mut r = [0.0f64; 6];
    for (ki, mk) in MODULES.iter().enumerate() {
        let dk = f64::from(dims[ki]);
        let mut sum_kji = 0.0;
        let mut sum_jki = 0.0;
        for (ji, mj) in MODULES.iter().enumerate() {
            for (ii, mi) in MODULES.iter().enumerate() {
                let t = tp.get(*mk, *mj, *mi);
                if t == 0.0 {
                    continue;
                }
                sum_kji += xs[ki] / (xs[ji] * xs[ii]) * t;
                sum_jki += xs[ji] / (xs[ki] * xs[ii]) * t;
            }
        }
        r[ki] = 1.0 / (2.0 * xs[ki]) + sum_kji / (4.0 * dk) - sum_jki / (2.0 * dk);
    }
    Ok(RicciComponents::from_array(r))
}
