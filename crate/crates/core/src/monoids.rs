//! Commutative monoids: free `N^k`, finitely generated abelian groups
//! `Z^a ⊕ Z/m₁ ⊕ …`, and finite Cayley tables.

use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Law, Result};

/// Canonical element: an integer vector for free/group kinds (torsion
/// coordinates reduced), a single index for tables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MonoidElem(pub SmallVec<[i32; 4]>);

impl MonoidElem {
    pub fn new(coords: &[i32]) -> Self {
        MonoidElem(SmallVec::from_slice(coords))
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum MonoidDescriptor {
    Free {
        rank: usize,
    },
    Group {
        #[serde(default)]
        free_rank: usize,
        #[serde(default)]
        torsion: Vec<u32>,
    },
    Table {
        table: Vec<Vec<usize>>,
        #[serde(default)]
        identity: usize,
    },
    /// `{0, 1, …, cap}` with `x ⊕ y = min(x + y, cap)`.
    TruncAdd {
        cap: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonoidKind {
    Free { rank: usize },
    Group { free_rank: usize, torsion: Vec<u32> },
    Table { table: Vec<Vec<usize>>, identity: usize },
}

/// `(s, t, u)` with `s + t = s + u`, `t ≠ u`.
pub type CancelWitness = (MonoidElem, MonoidElem, MonoidElem);
/// `(s, t, n)` with `n·s = n·t`, `s ≠ t`, `n` minimal for that pair.
pub type TorsionWitness = (MonoidElem, MonoidElem, u32);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monoid {
    kind: MonoidKind,
    label: String,
    cancel_witness: Option<CancelWitness>,
    torsion_witness: Option<TorsionWitness>,
}

impl fmt::Display for Monoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

impl Monoid {
    pub fn make(desc: &MonoidDescriptor) -> Result<Monoid> {
        match desc {
            MonoidDescriptor::Free { rank } => Ok(Self::free(*rank)),
            MonoidDescriptor::Group { free_rank, torsion } => {
                Self::group(*free_rank, torsion.clone())
            }
            MonoidDescriptor::Table { table, identity } => {
                Self::table(table.clone(), *identity, format!("table({})", table.len()))
            }
            MonoidDescriptor::TruncAdd { cap } => Self::trunc_add(*cap),
        }
    }

    pub fn free(rank: usize) -> Monoid {
        let label = match rank {
            1 => "N".to_string(),
            k => format!("N^{k}"),
        };
        Monoid {
            kind: MonoidKind::Free { rank },
            label,
            cancel_witness: None,
            torsion_witness: None,
        }
    }

    pub fn group(free_rank: usize, torsion: Vec<u32>) -> Result<Monoid> {
        if torsion.iter().any(|&m| m < 2) {
            return Err(Error::InvalidDescriptor(
                "torsion orders must be at least 2".into(),
            ));
        }
        let mut parts = Vec::new();
        match free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        parts.extend(torsion.iter().map(|m| format!("Z/{m}")));
        if parts.is_empty() {
            parts.push("0".into());
        }
        let torsion_witness = torsion.first().map(|&m| {
            let dim = free_rank + torsion.len();
            let mut s = vec![0; dim];
            s[free_rank] = 1;
            (MonoidElem::new(&s), MonoidElem::new(&vec![0; dim]), m)
        });
        Ok(Monoid {
            kind: MonoidKind::Group { free_rank, torsion },
            label: parts.join(" x "),
            cancel_witness: None,
            torsion_witness,
        })
    }

    /// Validates commutativity, associativity and the identity law
    /// exhaustively, then computes both structural flags by scanning.
    pub fn table(table: Vec<Vec<usize>>, identity: usize, label: String) -> Result<Monoid> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n) || identity >= n {
            return Err(Error::InvalidDescriptor(
                "table must be a nonempty square with an in-range identity".into(),
            ));
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return Err(Error::InvalidDescriptor("table entry out of range".into()));
        }
        for i in 0..n {
            if table[identity][i] != i {
                return Err(Error::AxiomViolation {
                    law: Law::Identity,
                    i: identity,
                    j: i,
                    k: table[identity][i],
                });
            }
            for j in 0..n {
                if table[i][j] != table[j][i] {
                    return Err(Error::AxiomViolation {
                        law: Law::Commutativity,
                        i,
                        j,
                        k: 0,
                    });
                }
                for k in 0..n {
                    if table[table[i][j]][k] != table[i][table[j][k]] {
                        return Err(Error::AxiomViolation {
                            law: Law::Associativity,
                            i,
                            j,
                            k,
                        });
                    }
                }
            }
        }
        let mut m = Monoid {
            kind: MonoidKind::Table { table, identity },
            label,
            cancel_witness: None,
            torsion_witness: None,
        };
        m.cancel_witness = m.scan_cancellative();
        m.torsion_witness = m.scan_torsion(n as u32);
        Ok(m)
    }

    pub fn trunc_add(cap: usize) -> Result<Monoid> {
        let table = (0..=cap)
            .map(|x| (0..=cap).map(|y| (x + y).min(cap)).collect())
            .collect();
        let elems: Vec<String> = (0..=cap).map(|x| x.to_string()).collect();
        Self::table(table, 0, format!("trunc-add{{{}}}", elems.join(",")))
    }

    pub fn kind(&self) -> &MonoidKind {
        &self.kind
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Length of the coordinate vector of each element.
    pub fn dim(&self) -> usize {
        match &self.kind {
            MonoidKind::Free { rank } => *rank,
            MonoidKind::Group { free_rank, torsion } => free_rank + torsion.len(),
            MonoidKind::Table { .. } => 1,
        }
    }

    /// Number of elements, if finite.
    pub fn size(&self) -> Option<usize> {
        match &self.kind {
            MonoidKind::Free { rank } => (*rank == 0).then_some(1),
            MonoidKind::Group { free_rank, torsion } => {
                (*free_rank == 0).then(|| torsion.iter().map(|&m| m as usize).product())
            }
            MonoidKind::Table { table, .. } => Some(table.len()),
        }
    }

    pub fn identity(&self) -> MonoidElem {
        match &self.kind {
            MonoidKind::Table { identity, .. } => MonoidElem::new(&[*identity as i32]),
            _ => MonoidElem(SmallVec::from_elem(0, self.dim())),
        }
    }

    #[inline]
    pub fn combine(&self, a: &MonoidElem, b: &MonoidElem) -> MonoidElem {
        match &self.kind {
            MonoidKind::Free { .. } => {
                MonoidElem(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
            }
            MonoidKind::Group { free_rank, torsion } => MonoidElem(
                a.0.iter()
                    .zip(&b.0)
                    .enumerate()
                    .map(|(i, (x, y))| {
                        if i < *free_rank {
                            x + y
                        } else {
                            (x + y).rem_euclid(torsion[i - free_rank] as i32)
                        }
                    })
                    .collect(),
            ),
            MonoidKind::Table { table, .. } => {
                MonoidElem::new(&[table[a.0[0] as usize][b.0[0] as usize] as i32])
            }
        }
    }

    /// `n·s`, with `0·s` the identity.
    pub fn multiple(&self, n: u32, s: &MonoidElem) -> MonoidElem {
        let mut acc = self.identity();
        for _ in 0..n {
            acc = self.combine(&acc, s);
        }
        acc
    }

    pub fn is_canonical(&self, x: &MonoidElem) -> bool {
        if x.0.len() != self.dim() {
            return false;
        }
        match &self.kind {
            MonoidKind::Free { .. } => x.0.iter().all(|&c| c >= 0),
            MonoidKind::Group { free_rank, torsion } => x.0[*free_rank..]
                .iter()
                .zip(torsion)
                .all(|(&c, &m)| c >= 0 && (c as u32) < m),
            MonoidKind::Table { table, .. } => x.0[0] >= 0 && (x.0[0] as usize) < table.len(),
        }
    }

    fn table_elems(&self) -> Vec<MonoidElem> {
        match &self.kind {
            MonoidKind::Table { table, .. } => {
                (0..table.len()).map(|i| MonoidElem::new(&[i as i32])).collect()
            }
            _ => Vec::new(),
        }
    }

    // Triples in reverse lexicographic order; the first hit is the
    // lexicographically greatest violating (s, t, u).
    fn scan_cancellative(&self) -> Option<CancelWitness> {
        let elems = self.table_elems();
        for s in elems.iter().rev() {
            for (ti, t) in elems.iter().enumerate().rev() {
                for u in elems[ti + 1..].iter().rev() {
                    if self.combine(s, t) == self.combine(s, u) {
                        return Some((s.clone(), t.clone(), u.clone()));
                    }
                }
            }
        }
        None
    }

    fn scan_torsion(&self, max_n: u32) -> Option<TorsionWitness> {
        let elems = self.table_elems();
        for (si, s) in elems.iter().enumerate().rev() {
            for t in elems[..si].iter().rev() {
                let (mut ns, mut nt) = (s.clone(), t.clone());
                for n in 1..=max_n {
                    if ns == nt {
                        return Some((s.clone(), t.clone(), n));
                    }
                    ns = self.combine(&ns, s);
                    nt = self.combine(&nt, t);
                }
            }
        }
        None
    }

    /// Torsion scan with an explicit exponent bound (tables only).
    pub fn torsion_scan_with_bound(&self, max_n: u32) -> Option<TorsionWitness> {
        match &self.kind {
            MonoidKind::Table { .. } => self.scan_torsion(max_n),
            _ => self.torsion_witness.clone(),
        }
    }

    pub fn is_cancellative(&self) -> (bool, Option<CancelWitness>) {
        (self.cancel_witness.is_none(), self.cancel_witness.clone())
    }

    pub fn is_torsion_free(&self) -> (bool, Option<TorsionWitness>) {
        (self.torsion_witness.is_none(), self.torsion_witness.clone())
    }

    /// Cancellative and torsion-free.
    pub fn is_ct(&self) -> bool {
        self.cancel_witness.is_none() && self.torsion_witness.is_none()
    }

    /// Free/group: every element whose coordinates have magnitude at most
    /// `bound`; tables: every element. Lexicographic order.
    pub fn elements_up_to(&self, bound: u32) -> Vec<MonoidElem> {
        let b = bound as i32;
        let ranges: Vec<(i32, i32)> = match &self.kind {
            MonoidKind::Table { .. } => return self.table_elems(),
            MonoidKind::Free { rank } => vec![(0, b); *rank],
            MonoidKind::Group { free_rank, torsion } => {
                let mut r = vec![(-b, b); *free_rank];
                r.extend(torsion.iter().map(|&m| (0, (m as i32 - 1).min(b))));
                r
            }
        };
        let mut out = vec![MonoidElem(SmallVec::new())];
        for (lo, hi) in ranges {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (lo..=hi).map(move |c| {
                        let mut v = prefix.clone();
                        v.0.push(c);
                        v
                    })
                })
                .collect();
        }
        out
    }

    /// `3`, `-1`, `(1,0)`; tables use the element index.
    pub fn fmt_elem(&self, x: &MonoidElem) -> String {
        if x.0.len() == 1 {
            x.0[0].to_string()
        } else {
            let parts: Vec<String> = x.0.iter().map(|c| c.to_string()).collect();
            format!("({})", parts.join(","))
        }
    }
}
