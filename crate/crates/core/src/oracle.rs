//! Exhaustive rotation-system enumeration for small bouquets and dipoles.
//!
//! This is the ground truth the recurrences are checked against: it only
//! uses face tracing and Euler's formula. Darts are dense integers with
//! edge `i` owning darts `2i` and `2i + 1`, so the edge involution is
//! `d ^ 1`. In a dipole the even darts sit at the first vertex and the odd
//! darts at the second.

use std::thread;

use num_bigint::BigUint;

use crate::distributions::{expected_total, GenusDistribution};
use crate::error::{Error, Result};
use crate::family::Family;

/// Largest `n` enumerated by default.
pub const DEFAULT_BOUQUET_CEILING: u64 = 6;
pub const DEFAULT_DIPOLE_CEILING: u64 = 8;

/// Environment variable that raises both enumeration ceilings.
pub const CEILING_ENV: &str = "GENUSLAB_ORACLE_CEILING";

/// Darts are tracked in a `u64` bitmap while tracing.
const MAX_DARTS: usize = 64;

/// Per-vertex cyclic orders of darts together with the edge pairing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rotations: Vec<Vec<usize>>,
    involution: Vec<usize>,
}

impl RotationSystem {
    pub fn new(rotations: Vec<Vec<usize>>, involution: Vec<usize>) -> Result<Self> {
        let darts = involution.len();
        let mut seen = vec![false; darts];
        for &d in rotations.iter().flatten() {
            if d >= darts {
                return Err(Error::InvalidRotation(format!("dart {d} out of range 0..{darts}")));
            }
            if std::mem::replace(&mut seen[d], true) {
                return Err(Error::InvalidRotation(format!("dart {d} appears twice")));
            }
        }
        if let Some(d) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidRotation(format!("dart {d} missing from rotations")));
        }
        for (d, &e) in involution.iter().enumerate() {
            if e >= darts || e == d || involution[e] != d {
                return Err(Error::InvalidRotation(format!(
                    "edge pairing is not a fixed-point-free involution at dart {d}"
                )));
            }
        }
        Ok(Self { rotations, involution })
    }

    /// One-vertex system with edge pairing `2i ↔ 2i+1`.
    pub fn bouquet(rotation: Vec<usize>) -> Result<Self> {
        let darts = rotation.len();
        Self::new(vec![rotation], (0..darts).map(|d| d ^ 1).collect())
    }

    /// Two-vertex system; even darts belong on the first vertex, odd on the
    /// second.
    pub fn dipole(first: Vec<usize>, second: Vec<usize>) -> Result<Self> {
        if first.iter().any(|d| d % 2 != 0) || second.iter().any(|d| d % 2 != 1) {
            return Err(Error::InvalidRotation("dipole darts on the wrong vertex".into()));
        }
        let darts = first.len() + second.len();
        Self::new(vec![first, second], (0..darts).map(|d| d ^ 1).collect())
    }

    pub fn vertices(&self) -> usize {
        self.rotations.len()
    }

    pub fn edges(&self) -> usize {
        self.involution.len() / 2
    }

    /// Rotation successor of every dart.
    pub fn successor(&self) -> Vec<usize> {
        let mut succ = vec![0; self.involution.len()];
        for rot in &self.rotations {
            for (i, &d) in rot.iter().enumerate() {
                succ[d] = rot[(i + 1) % rot.len()];
            }
        }
        succ
    }

    /// Number of faces: cycles of `σ∘α` (apply the edge involution, then
    /// step to the rotation successor).
    pub fn trace_faces(&self) -> usize {
        let succ = self.successor();
        count_cycles(self.involution.len(), |d| succ[self.involution[d]])
    }

    /// Cycles of `α∘σ`, which is conjugate to `σ∘α`.
    pub fn trace_faces_reversed(&self) -> usize {
        let succ = self.successor();
        count_cycles(self.involution.len(), |d| self.involution[succ[d]])
    }

    pub fn genus(&self) -> Result<u64> {
        genus_from_faces(self.vertices() as u64, self.edges() as u64, self.trace_faces() as u64)
    }
}

fn count_cycles(len: usize, step: impl Fn(usize) -> usize) -> usize {
    let mut visited = vec![false; len];
    let mut cycles = 0;
    for start in 0..len {
        if visited[start] {
            continue;
        }
        cycles += 1;
        let mut d = start;
        while !visited[d] {
            visited[d] = true;
            d = step(d);
        }
    }
    cycles
}

/// Face count for the successor array of a one- or two-vertex system with
/// involution `d ^ 1`. `darts` must not exceed 64.
#[inline]
fn trace_faces_fast(succ: &[usize]) -> u32 {
    let darts = succ.len();
    let mut unvisited: u64 = if darts == MAX_DARTS { u64::MAX } else { (1u64 << darts) - 1 };
    let mut faces = 0;
    while unvisited != 0 {
        let start = unvisited.trailing_zeros() as usize;
        faces += 1;
        let mut d = start;
        loop {
            unvisited &= !(1u64 << d);
            d = succ[d ^ 1];
            if d == start {
                break;
            }
        }
    }
    faces
}

/// Genus from Euler's formula `V − E + F = 2 − 2g`.
pub fn genus_from_faces(vertices: u64, edges: u64, faces: u64) -> Result<u64> {
    let twice = (2 + edges) as i128 - vertices as i128 - faces as i128;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::InvalidEmbedding { vertices, edges, faces });
    }
    Ok((twice / 2) as u64)
}

/// Genus histogram of every labeled embedding of a family member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EmbeddingCensus {
    pub family: Family,
    pub n: u64,
    pub counts: Vec<BigUint>,
    pub total: BigUint,
}

impl EmbeddingCensus {
    pub fn to_distribution(&self) -> Result<GenusDistribution> {
        GenusDistribution::new(self.family, self.n, self.counts.clone())
    }
}

/// Enumeration ceilings per family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ceilings {
    pub bouquet: u64,
    pub dipole: u64,
}

impl Default for Ceilings {
    fn default() -> Self {
        Self { bouquet: DEFAULT_BOUQUET_CEILING, dipole: DEFAULT_DIPOLE_CEILING }
    }
}

impl Ceilings {
    /// Defaults, raised to the value of `GENUSLAB_ORACLE_CEILING` when it
    /// is set to an integer. The variable never lowers a ceiling.
    pub fn from_env() -> Self {
        Self::with_override(std::env::var(CEILING_ENV).ok().and_then(|v| v.trim().parse().ok()))
    }

    pub fn with_override(raise_to: Option<u64>) -> Self {
        let d = Self::default();
        match raise_to {
            Some(c) => Self { bouquet: d.bouquet.max(c), dipole: d.dipole.max(c) },
            None => d,
        }
    }

    pub fn for_family(&self, family: Family) -> u64 {
        match family {
            Family::Bouquet => self.bouquet,
            Family::Dipole => self.dipole,
        }
    }
}

/// A pinned prefix of the first vertex's rotation: dart 0 followed by the
/// given second dart. Shards partition the enumeration.
#[derive(Debug, Clone, Copy)]
struct Shard {
    second: Option<usize>,
}

fn shards(family: Family, n: usize) -> Vec<Shard> {
    let first_vertex_darts: Vec<usize> = match family {
        Family::Bouquet => (1..2 * n).collect(),
        Family::Dipole => (1..n).map(|i| 2 * i).collect(),
    };
    if first_vertex_darts.is_empty() {
        vec![Shard { second: None }]
    } else {
        first_vertex_darts.into_iter().map(|d| Shard { second: Some(d) }).collect()
    }
}

/// Lexicographic successor permutation in place; `false` once exhausted.
fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let Some(i) = (0..xs.len() - 1).rev().find(|&i| xs[i] < xs[i + 1]) else {
        return false;
    };
    let j = (i + 1..xs.len()).rev().find(|&j| xs[j] > xs[i]).expect("pivot exists");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

fn set_cycle(succ: &mut [usize], rotation: &[usize]) {
    for (i, &d) in rotation.iter().enumerate() {
        succ[d] = rotation[(i + 1) % rotation.len()];
    }
}

/// Histogram (and trace count) for one shard.
fn enumerate_shard(family: Family, n: usize, shard: Shard) -> Result<(Vec<u64>, u64)> {
    let darts = 2 * n;
    let max_genus = family.max_genus(n as u64) as usize;
    let vertices = family.vertices();
    let mut hist = vec![0u64; max_genus + 1];
    let mut traced = 0u64;
    let mut succ = vec![0usize; darts];
    let mut record = |succ: &[usize]| -> Result<()> {
        let faces = trace_faces_fast(succ) as u64;
        let g = genus_from_faces(vertices, n as u64, faces)? as usize;
        if g > max_genus {
            return Err(Error::InvalidEmbedding { vertices, edges: n as u64, faces });
        }
        hist[g] += 1;
        traced += 1;
        Ok(())
    };

    let prefix: Vec<usize> = std::iter::once(0).chain(shard.second).collect();
    let first_rest: Vec<usize> = match family {
        Family::Bouquet => (1..darts).filter(|d| Some(*d) != shard.second).collect(),
        Family::Dipole => (1..n).map(|i| 2 * i).filter(|d| Some(*d) != shard.second).collect(),
    };
    let mut rotation = prefix.clone();
    let mut rest = first_rest;
    match family {
        Family::Bouquet => loop {
            rotation.truncate(prefix.len());
            rotation.extend_from_slice(&rest);
            set_cycle(&mut succ, &rotation);
            record(&succ)?;
            if !next_permutation(&mut rest) {
                break;
            }
        },
        Family::Dipole => {
            let second_rest_init: Vec<usize> = (1..n).map(|i| 2 * i + 1).collect();
            let mut other = Vec::with_capacity(n);
            loop {
                rotation.truncate(prefix.len());
                rotation.extend_from_slice(&rest);
                set_cycle(&mut succ, &rotation);
                let mut second_rest = second_rest_init.clone();
                loop {
                    other.clear();
                    other.push(1);
                    other.extend_from_slice(&second_rest);
                    set_cycle(&mut succ, &other);
                    record(&succ)?;
                    if !next_permutation(&mut second_rest) {
                        break;
                    }
                }
                if !next_permutation(&mut rest) {
                    break;
                }
            }
        }
    }
    Ok((hist, traced))
}

/// Genus distribution of `B_n` or `D_n` by tracing every labeled
/// embedding, with each vertex's first dart pinned. Shards are spread over
/// `parallelism` worker threads; the result does not depend on it.
pub fn oracle_distribution(family: Family, n: u64, parallelism: usize) -> Result<EmbeddingCensus> {
    oracle_distribution_with(family, n, parallelism, Ceilings::default())
}

pub fn oracle_distribution_with(
    family: Family,
    n: u64,
    parallelism: usize,
    ceilings: Ceilings,
) -> Result<EmbeddingCensus> {
    if n == 0 {
        return Err(Error::DomainTooSmall { n, min: 1 });
    }
    let ceiling = ceilings.for_family(family);
    if n > ceiling || 2 * n as usize > MAX_DARTS {
        return Err(Error::AboveCeiling { family, n, ceiling: ceiling.min(MAX_DARTS as u64 / 2) });
    }
    let nu = n as usize;
    let shards = shards(family, nu);
    let workers = parallelism.clamp(1, shards.len());

    let partials: Vec<Result<(Vec<u64>, u64)>> = if workers == 1 {
        shards.iter().map(|&s| enumerate_shard(family, nu, s)).collect()
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let mine: Vec<Shard> = shards.iter().copied().skip(w).step_by(workers).collect();
                    scope.spawn(move || {
                        mine.into_iter()
                            .map(|s| enumerate_shard(family, nu, s))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("enumeration worker panicked"))
                .collect()
        })
    };

    let mut hist = vec![0u64; family.max_genus(n) as usize + 1];
    let mut traced = 0u64;
    for part in partials {
        let (h, t) = part?;
        hist.iter_mut().zip(&h).for_each(|(acc, x)| *acc += x);
        traced += t;
    }
    let total = expected_total(family, n);
    assert_eq!(
        BigUint::from(traced),
        total,
        "enumeration of {family} n = {n} traced {traced} embeddings"
    );
    Ok(EmbeddingCensus {
        family,
        n,
        counts: hist.into_iter().map(BigUint::from).collect(),
        total,
    })
}
