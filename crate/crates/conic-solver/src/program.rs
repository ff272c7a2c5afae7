use nalgebra::{DMatrix, DVector};
use serde_json::json;

use crate::cone::{ConeSpec, VarLayout};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

/// Conic linear program: optimize ⟨c, x⟩ subject to A x = b, x ∈ K.
/// Row labels are carried for presolve and infeasibility diagnostics.
#[derive(Clone, Debug)]
pub struct ConicProgram {
    pub cone: ConeSpec,
    pub sense: Sense,
    pub c: DVector<f64>,
    pub a: DMatrix<f64>,
    pub b: DVector<f64>,
    pub row_labels: Vec<String>,
}

impl ConicProgram {
    pub fn num_rows(&self) -> usize {
        self.a.nrows()
    }

    pub fn num_vars(&self) -> usize {
        self.a.ncols()
    }

    pub fn layout(&self) -> VarLayout {
        self.cone.layout()
    }

    /// Objective vector in minimization convention.
    pub(crate) fn c_min(&self) -> DVector<f64> {
        match self.sense {
            Sense::Minimize => self.c.clone(),
            Sense::Maximize => -self.c.clone(),
        }
    }

    /// Maps an internal minimization objective value back to the
    /// program's sense.
    pub(crate) fn value_from_min(&self, v: f64) -> f64 {
        match self.sense {
            Sense::Minimize => v,
            Sense::Maximize => -v,
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        let n = self.cone.total_dim();
        if self.c.len() != n {
            return Err(format!("objective length {} != cone dimension {n}", self.c.len()));
        }
        if self.a.ncols() != n {
            return Err(format!("A has {} columns, cone dimension is {n}", self.a.ncols()));
        }
        if self.a.nrows() != self.b.len() || self.a.nrows() != self.row_labels.len() {
            return Err("row count mismatch between A, b, and labels".into());
        }
        if self.b.iter().any(|v| !v.is_finite()) || self.c.iter().any(|v| !v.is_finite()) {
            return Err("non-finite data".into());
        }
        if self.a.iter().any(|v| !v.is_finite()) {
            return Err("non-finite constraint matrix".into());
        }
        Ok(())
    }

    /// Debug dump of (A, b, c, cone) as JSON, with A in coordinate
    /// triplets. The schema is documented in `docs/conic_dump.md`.
    pub fn to_debug_json(&self) -> serde_json::Value {
        let mut triplets = Vec::new();
        for i in 0..self.a.nrows() {
            for j in 0..self.a.ncols() {
                let v = self.a[(i, j)];
                if v != 0.0 {
                    triplets.push(json!([i, j, v]));
                }
            }
        }
        json!({
            "format": "conic-program/1",
            "sense": match self.sense { Sense::Minimize => "minimize", Sense::Maximize => "maximize" },
            "cone": {
                "psd_block_sizes": self.cone.psd_block_sizes,
                "nonneg_length": self.cone.nonneg_length,
            },
            "svec_offdiag_scale": "sqrt2",
            "c": self.c.as_slice(),
            "b": self.b.as_slice(),
            "a_triplets": triplets,
            "row_labels": self.row_labels,
        })
    }
}

/// Incremental construction of a `ConicProgram`. Coefficients address
/// matrix entries (unordered pairs counted once) or orthant
/// coordinates; the √2 svec bookkeeping is handled here.
pub struct ProgramBuilder {
    layout: VarLayout,
    sense: Sense,
    c: DVector<f64>,
    rows: Vec<DVector<f64>>,
    rhs: Vec<f64>,
    labels: Vec<String>,
}

impl ProgramBuilder {
    pub fn new(cone: ConeSpec, sense: Sense) -> Self {
        let layout = cone.layout();
        let n = layout.total_dim();
        ProgramBuilder {
            layout,
            sense,
            c: DVector::zeros(n),
            rows: Vec::new(),
            rhs: Vec::new(),
            labels: Vec::new(),
        }
    }

    pub fn layout(&self) -> &VarLayout {
        &self.layout
    }

    /// Adds w·X_ij to the objective (block entry, unordered pair once).
    pub fn objective_entry(&mut self, block: usize, i: usize, j: usize, w: f64) {
        let coord = self.layout.psd_coord(block, i, j);
        self.c[coord] += w * VarLayout::entry_scale(i, j);
    }

    pub fn objective_nonneg(&mut self, k: usize, w: f64) {
        let coord = self.layout.nonneg_coord(k);
        self.c[coord] += w;
    }

    pub fn begin_row(&mut self, label: impl Into<String>, rhs: f64) {
        self.rows.push(DVector::zeros(self.layout.total_dim()));
        self.rhs.push(rhs);
        self.labels.push(label.into());
    }

    /// Adds w·X_ij to the row begun last.
    pub fn row_entry(&mut self, block: usize, i: usize, j: usize, w: f64) {
        let coord = self.layout.psd_coord(block, i, j);
        let row = self.rows.last_mut().expect("begin_row first");
        row[coord] += w * VarLayout::entry_scale(i, j);
    }

    pub fn row_nonneg(&mut self, k: usize, w: f64) {
        let coord = self.layout.nonneg_coord(k);
        let row = self.rows.last_mut().expect("begin_row first");
        row[coord] += w;
    }

    pub fn build(self) -> ConicProgram {
        let n = self.layout.total_dim();
        let p = self.rows.len();
        let mut a = DMatrix::zeros(p, n);
        for (i, row) in self.rows.iter().enumerate() {
            a.row_mut(i).copy_from(&row.transpose());
        }
        let program = ConicProgram {
            cone: self.layout.cone().clone(),
            sense: self.sense,
            c: self.c,
            a,
            b: DVector::from_vec(self.rhs),
            row_labels: self.labels,
        };
        debug_assert!(program.validate().is_ok());
        program
    }
}
