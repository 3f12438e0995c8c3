//! Generator matrices as column multisets over GF(q)^k, span/rank machinery,
//! and the k = 2 balancing transforms.

use std::io::{BufRead, Write};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::FieldSpec;

/// A rank-k column multiset over GF(q)^k. Columns are stored with explicit
/// multiplicities; sampling weights need the counts and memory stays
/// proportional to the number of distinct columns.
#[derive(Debug, Clone)]
pub struct GeneratorMatrix {
    pub field: Arc<FieldSpec>,
    pub k: usize,
    /// Distinct columns with multiplicity >= 1.
    pub columns: Vec<(Vec<u32>, usize)>,
    /// Total column count (sum of multiplicities).
    pub n: usize,
}

/// Incremental row-reduction state: rows are kept with distinct pivot
/// positions and unit pivots, so adding a vector or testing membership is
/// O(k^2) with exact field arithmetic.
#[derive(Debug, Clone)]
pub struct SpanState {
    field: Arc<FieldSpec>,
    k: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl SpanState {
    pub fn new(field: Arc<FieldSpec>, k: usize) -> Self {
        SpanState {
            field,
            k,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [u32]) {
        let f = &self.field;
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c != 0 {
                for j in 0..self.k {
                    v[j] = f.sub(v[j], f.mul(c, row[j]));
                }
            }
        }
    }

    /// Add a vector to the span; returns true if the rank increased.
    pub fn add(&mut self, v: &[u32]) -> bool {
        debug_assert_eq!(v.len(), self.k);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        match w.iter().position(|&c| c != 0) {
            None => false,
            Some(piv) => {
                let f = &self.field;
                let inv = f.inv(w[piv]);
                for c in w.iter_mut() {
                    *c = f.mul(*c, inv);
                }
                self.rows.push(w);
                self.pivots.push(piv);
                true
            }
        }
    }

    /// True iff the target lies in the span of the added vectors.
    pub fn contains(&self, target: &[u32]) -> bool {
        debug_assert_eq!(target.len(), self.k);
        let mut w = target.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&c| c == 0)
    }

    pub fn contains_unit(&self, i: usize) -> bool {
        let mut w = vec![0u32; self.k];
        w[i] = 1;
        self.contains(&w)
    }
}

/// True iff `target` lies in the GF(q)-span of `vectors`.
pub fn span_contains(
    field: &Arc<FieldSpec>,
    k: usize,
    vectors: &[Vec<u32>],
    target: &[u32],
) -> Result<bool> {
    if target.len() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            got: target.len(),
        });
    }
    let mut st = SpanState::new(field.clone(), k);
    for v in vectors {
        if v.len() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                got: v.len(),
            });
        }
        st.add(v);
    }
    Ok(st.contains(target))
}

/// Column multiplicities of a k = 2 matrix grouped by collinearity class:
/// <e_1>, <e_2>, and <(1, beta^i)> for i in 0..q-1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoDimProfile {
    pub x1: usize,
    pub x2: usize,
    /// a[i] counts the columns collinear with (1, beta^i)^T; length q - 1.
    pub a: Vec<usize>,
    pub x: usize,
}

impl GeneratorMatrix {
    /// Validates the type invariants: no zero column, multiplicities >= 1,
    /// n >= k and full rank k.
    pub fn new(
        field: Arc<FieldSpec>,
        k: usize,
        columns: Vec<(Vec<u32>, usize)>,
    ) -> Result<GeneratorMatrix> {
        let mut merged: Vec<(Vec<u32>, usize)> = Vec::new();
        for (v, mult) in columns {
            if v.len() != k {
                return Err(Error::DimensionMismatch {
                    expected: k,
                    got: v.len(),
                });
            }
            assert!(mult >= 1, "multiplicity must be >= 1");
            assert!(v.iter().any(|&c| c != 0), "zero column not allowed");
            match merged.iter_mut().find(|(w, _)| *w == v) {
                Some((_, m)) => *m += mult,
                None => merged.push((v, mult)),
            }
        }
        let n: usize = merged.iter().map(|(_, m)| m).sum();
        if n < k {
            return Err(Error::RankDeficient { k });
        }
        let mut st = SpanState::new(field.clone(), k);
        for (v, _) in &merged {
            st.add(v);
        }
        if st.rank() != k {
            return Err(Error::RankDeficient { k });
        }
        Ok(GeneratorMatrix {
            field,
            k,
            columns: merged,
            n,
        })
    }

    /// Columns expanded to multiplicity (n entries).
    pub fn expanded(&self) -> Vec<&[u32]> {
        let mut out = Vec::with_capacity(self.n);
        for (v, mult) in &self.columns {
            for _ in 0..*mult {
                out.push(v.as_slice());
            }
        }
        out
    }

    /// Classify columns of a k = 2 matrix up to collinearity (Remark-1
    /// equivalence): x = n always holds.
    pub fn profile_k2(&self) -> Result<TwoDimProfile> {
        if self.k != 2 {
            return Err(Error::WrongDimension {
                expected: 2,
                got: self.k,
            });
        }
        let f = &self.field;
        let mut x1 = 0;
        let mut x2 = 0;
        let mut a = vec![0usize; (f.q() - 1) as usize];
        for (v, mult) in &self.columns {
            if v[1] == 0 {
                x1 += mult;
            } else if v[0] == 0 {
                x2 += mult;
            } else {
                let slope = f.div(v[1], v[0]);
                a[f.discrete_log(slope) as usize] += mult;
            }
        }
        Ok(TwoDimProfile {
            x1,
            x2,
            a,
            x: self.n,
        })
    }

    /// Concatenate G with its copy in which the weight-1 classes <e_1> and
    /// <e_2> are swapped. The result has x1 = x2 = x1(G) + x2(G).
    pub fn balance_info_columns(&self) -> Result<GeneratorMatrix> {
        if self.k != 2 {
            return Err(Error::WrongDimension {
                expected: 2,
                got: self.k,
            });
        }
        let mut cols = self.columns.clone();
        for (v, mult) in &self.columns {
            let swapped = if v[1] == 0 {
                vec![0, v[0]]
            } else if v[0] == 0 {
                vec![v[1], 0]
            } else {
                v.clone()
            };
            cols.push((swapped, *mult));
        }
        GeneratorMatrix::new(self.field.clone(), 2, cols)
    }

    /// Concatenate G with its copy in which the slope classes i and j are
    /// swapped. Rejects a_i = a_j, where the swap gives no strict
    /// improvement.
    pub fn balance_slope_columns(&self, i: usize, j: usize) -> Result<GeneratorMatrix> {
        if self.k != 2 {
            return Err(Error::WrongDimension {
                expected: 2,
                got: self.k,
            });
        }
        assert!(i != j, "class indices must differ");
        let prof = self.profile_k2()?;
        if prof.a[i] == prof.a[j] {
            return Err(Error::EqualSlopeClasses {
                i,
                j,
                a: prof.a[i],
            });
        }
        let f = &self.field;
        let mut cols = self.columns.clone();
        for (v, mult) in &self.columns {
            let swapped = if v[0] != 0 && v[1] != 0 {
                let class = f.discrete_log(f.div(v[1], v[0])) as usize;
                if class == i {
                    vec![v[0], f.mul(v[0], f.beta_pow(j as i64))]
                } else if class == j {
                    vec![v[0], f.mul(v[0], f.beta_pow(i as i64))]
                } else {
                    v.clone()
                }
            } else {
                v.clone()
            };
            cols.push((swapped, *mult));
        }
        GeneratorMatrix::new(self.field.clone(), 2, cols)
    }

    /// Plain-text matrix format: line 1 `q k n`, then k rows of n element
    /// values; `#`-prefixed lines are comments. Multiplicities are expanded
    /// on disk.
    pub fn write_text<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "{} {} {}", self.field.q(), self.k, self.n)?;
        let cols = self.expanded();
        for r in 0..self.k {
            let row: Vec<String> = cols.iter().map(|c| c[r].to_string()).collect();
            writeln!(w, "{}", row.join(" "))?;
        }
        Ok(())
    }

    pub fn read_text<R: BufRead>(r: R) -> Result<GeneratorMatrix> {
        let mut lines = r
            .lines()
            .collect::<std::io::Result<Vec<_>>>()?
            .into_iter()
            .filter(|l| !l.trim_start().starts_with('#') && !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::MatrixFormat("empty file".into()))?;
        let parts: Vec<u64> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::MatrixFormat(format!("bad header: {header}"))))
            .collect::<Result<_>>()?;
        let [q, k, n] = parts[..] else {
            return Err(Error::MatrixFormat("header must be `q k n`".into()));
        };
        let (k, n) = (k as usize, n as usize);
        let field = Arc::new(FieldSpec::build_from_order(q)?);
        let mut rows = Vec::with_capacity(k);
        for _ in 0..k {
            let line = lines
                .next()
                .ok_or_else(|| Error::MatrixFormat("missing row".into()))?;
            let row: Vec<u32> = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<u64>()
                        .ok()
                        .filter(|&v| v < q)
                        .map(|v| v as u32)
                        .ok_or_else(|| Error::MatrixFormat(format!("bad element: {t}")))
                })
                .collect::<Result<_>>()?;
            if row.len() != n {
                return Err(Error::MatrixFormat(format!(
                    "row has {} entries, expected {n}",
                    row.len()
                )));
            }
            rows.push(row);
        }
        let columns = (0..n)
            .map(|j| ((0..k).map(|r| rows[r][j]).collect::<Vec<u32>>(), 1))
            .collect();
        GeneratorMatrix::new(field, k, columns)
    }

    pub fn read_file(path: &std::path::Path) -> Result<GeneratorMatrix> {
        let f = std::fs::File::open(path)?;
        GeneratorMatrix::read_text(std::io::BufReader::new(f))
    }

    pub fn write_file(&self, path: &std::path::Path) -> Result<()> {
        let f = std::fs::File::create(path)?;
        self.write_text(std::io::BufWriter::new(f))
    }
}

/// The Example-1 fixture: columns e_1, e_2, e_1, e_2, (1,1)^T over GF(q).
pub fn example1_matrix(field: Arc<FieldSpec>) -> GeneratorMatrix {
    GeneratorMatrix::new(
        field,
        2,
        vec![
            (vec![1, 0], 2),
            (vec![0, 1], 2),
            (vec![1, 1], 1),
        ],
    )
    .expect("fixture is full rank")
}
