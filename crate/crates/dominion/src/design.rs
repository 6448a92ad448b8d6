//! 2-(v,k,λ) block designs: construction, validation, transformation, and
//! the on-disk text format.
//!
//! A design is `v` points plus a list of `b` blocks (point bitsets of size
//! `k`) in which every pair of distinct points lies in exactly `λ` blocks.
//! Validation recomputes `λ` and `r` from raw incidence and never trusts a
//! constructor.
//!
//! Canonical form: constructors that assemble blocks from scratch sort the
//! block list lexicographically. [`Design::dual`] is the one exception — its
//! block order carries the point↔block correspondence (new point `j`'s pencil
//! must be old block `j`), so it preserves pencil order; re-sorting would
//! break both that contract and the double-dual identity.

use crate::bitset::BitSet;
use crate::field::{Field, FieldError};
use thiserror::Error;

/// A set of points of one design: a bitset with capacity `v`.
pub type PointSet = BitSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DesignError {
    #[error("design needs at least 2 points, got {0}")]
    TooFewPoints(usize),
    #[error("design has no blocks")]
    NoBlocks,
    #[error("block {index} has {size} points, expected constant block size {expected}")]
    NonConstantBlockSize {
        index: usize,
        size: usize,
        expected: usize,
    },
    #[error("block size {k} outside 2..={v}")]
    BlockSizeOutOfRange { k: usize, v: usize },
    #[error("point pair ({x},{y}) lies in {count} blocks, expected λ = {lambda}")]
    PairCoverage {
        x: usize,
        y: usize,
        count: u64,
        lambda: u64,
    },
    #[error("point {x} lies in {count} blocks, expected r = {r}")]
    NonConstantReplication { x: usize, count: u64, r: u64 },
    #[error("λ(v-1) = {num} is not divisible by k-1 = {den}")]
    ReplicationNotIntegral { num: u64, den: u64 },
    #[error("double counting failed: bk = {bk} but vr = {vr}")]
    CountIdentity { bk: u64, vr: u64 },
    #[error("b = {b} < v = {v}: no 2-design satisfies this, input data is corrupt")]
    FisherViolation { b: u64, v: u64 },
    #[error("operation requires a symmetric design (b = v), got b = {b}, v = {v}")]
    NotSymmetric { b: u64, v: u64 },
    #[error("block index {index} out of range ({b} blocks)")]
    BlockIndexOutOfRange { index: usize, b: usize },
    #[error("complement needs v - k >= 2, got v = {v}, k = {k}")]
    ComplementTooSmall { v: u64, k: u64 },
    #[error("constructors need v > k, got v = {v}, k = {k}")]
    BlockIsWholePointSet { v: u64, k: u64 },
    #[error("{q} is not a prime power")]
    NotPrimePower { q: u64 },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("base block {index} is empty")]
    EmptyBaseBlock { index: usize },
    #[error("base block {index} contains point {point} >= v = {v}")]
    BasePointOutOfRange {
        index: usize,
        point: usize,
        v: usize,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("header says {field} = {stated} but blocks give {computed}")]
    HeaderMismatch {
        field: &'static str,
        stated: u64,
        computed: u64,
    },
}

/// The parameter record (v, k, λ, b, r) of a validated design.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct DesignParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub b: u64,
    pub r: u64,
}

impl std::fmt::Display for DesignParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "2-({},{},{}) with b = {}, r = {}",
            self.v, self.k, self.lambda, self.b, self.r
        )
    }
}

/// A validated 2-design.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Design {
    v: usize,
    blocks: Vec<BitSet>,
    params: DesignParams,
}

impl Design {
    /// Validates the raw blocks and stores them sorted (canonical form).
    pub fn from_blocks(v: usize, mut blocks: Vec<BitSet>) -> Result<Design, DesignError> {
        blocks.sort();
        Design::from_blocks_ordered(v, blocks)
    }

    /// Validates the raw blocks and keeps the given order.
    pub fn from_blocks_ordered(v: usize, blocks: Vec<BitSet>) -> Result<Design, DesignError> {
        let params = Design::validate(v, &blocks)?;
        Ok(Design { v, blocks, params })
    }

    /// Full parameter validation of a raw point count + block list.
    ///
    /// Checks constant block size, exact pair coverage λ over all C(v,2)
    /// pairs, constant replication r with r(k-1) = λ(v-1), the double count
    /// bk = vr, and Fisher's inequality b >= v.
    pub fn validate(v: usize, blocks: &[BitSet]) -> Result<DesignParams, DesignError> {
        if v < 2 {
            return Err(DesignError::TooFewPoints(v));
        }
        if blocks.is_empty() {
            return Err(DesignError::NoBlocks);
        }
        let k = blocks[0].count_ones();
        for (index, block) in blocks.iter().enumerate() {
            assert_eq!(
                block.capacity(),
                v,
                "block {index} has capacity {} instead of v = {v}",
                block.capacity()
            );
            let size = block.count_ones();
            if size != k {
                return Err(DesignError::NonConstantBlockSize {
                    index,
                    size,
                    expected: k,
                });
            }
        }
        if k < 2 || k > v {
            return Err(DesignError::BlockSizeOutOfRange { k, v });
        }

        // λ from the first pair, then every pair checked against it.
        let coverage = |x: usize, y: usize| -> u64 {
            blocks
                .iter()
                .filter(|bl| bl.contains(x) && bl.contains(y))
                .count() as u64
        };
        let lambda = coverage(0, 1);
        for x in 0..v {
            for y in (x + 1)..v {
                let count = coverage(x, y);
                if count != lambda {
                    return Err(DesignError::PairCoverage {
                        x,
                        y,
                        count,
                        lambda,
                    });
                }
            }
        }
        // k >= 2 guarantees some covered pair, so lambda >= 1 here.
        debug_assert!(lambda >= 1);

        // Replication: counted per point, then tied to λ(v-1)/(k-1).
        let num = lambda * (v as u64 - 1);
        let den = k as u64 - 1;
        if num % den != 0 {
            return Err(DesignError::ReplicationNotIntegral { num, den });
        }
        let r = num / den;
        for x in 0..v {
            let count = blocks.iter().filter(|bl| bl.contains(x)).count() as u64;
            if count != r {
                return Err(DesignError::NonConstantReplication { x, count, r });
            }
        }

        let b = blocks.len() as u64;
        let (bk, vr) = (b * k as u64, v as u64 * r);
        if bk != vr {
            return Err(DesignError::CountIdentity { bk, vr });
        }
        if b < v as u64 {
            return Err(DesignError::FisherViolation { b, v: v as u64 });
        }

        Ok(DesignParams {
            v: v as u64,
            k: k as u64,
            lambda,
            b,
            r,
        })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn params(&self) -> DesignParams {
        self.params
    }

    pub fn blocks(&self) -> &[BitSet] {
        &self.blocks
    }

    pub fn block(&self, index: usize) -> &BitSet {
        &self.blocks[index]
    }

    /// b = v.
    pub fn is_symmetric(&self) -> bool {
        self.params.b == self.params.v
    }

    /// Replaces every block B by X∖B; a 2-(v, v-k, b-2r+λ) design.
    pub fn complement(&self) -> Result<Design, DesignError> {
        let p = self.params;
        if p.v - p.k < 2 {
            return Err(DesignError::ComplementTooSmall { v: p.v, k: p.k });
        }
        let blocks = self.blocks.iter().map(|bl| bl.complement()).collect();
        let out = Design::from_blocks(self.v, blocks)
            .expect("complement of a valid design must validate");
        debug_assert_eq!(out.params.lambda, p.b + p.lambda - 2 * p.r);
        Ok(out)
    }

    /// Residual design: drop block `b0` and its points; remaining blocks keep
    /// their traces outside `b0` (duplicates, if any, stay distinct entries).
    /// Returns the design together with the map new point index → old point
    /// index. Requires a symmetric input; the result is 2-(v-k, k-λ, λ).
    pub fn residual(&self, b0: usize) -> Result<(Design, Vec<usize>), DesignError> {
        let p = self.params;
        if !self.is_symmetric() {
            return Err(DesignError::NotSymmetric { b: p.b, v: p.v });
        }
        if b0 >= self.blocks.len() {
            return Err(DesignError::BlockIndexOutOfRange {
                index: b0,
                b: self.blocks.len(),
            });
        }
        let removed = &self.blocks[b0];
        let mapping: Vec<usize> = (0..self.v).filter(|&x| !removed.contains(x)).collect();
        let mut new_index = vec![usize::MAX; self.v];
        for (ni, &old) in mapping.iter().enumerate() {
            new_index[old] = ni;
        }
        let new_v = mapping.len();
        let blocks: Vec<BitSet> = self
            .blocks
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != b0)
            .map(|(_, bl)| {
                BitSet::from_indices(
                    new_v,
                    bl.iter_ones()
                        .filter(|&x| !removed.contains(x))
                        .map(|x| new_index[x]),
                )
            })
            .collect();
        let out = Design::from_blocks(new_v, blocks)?;
        debug_assert_eq!(
            (out.params.v, out.params.k, out.params.lambda),
            (p.v - p.k, p.k - p.lambda, p.lambda)
        );
        Ok((out, mapping))
    }

    /// Dual of a symmetric design: points and blocks swap roles. New block
    /// `x` is the pencil of old point `x`, so new point `j`'s pencil equals
    /// old block `j`'s point set, and `dual(dual(d)) == d` exactly.
    pub fn dual(&self) -> Result<Design, DesignError> {
        let p = self.params;
        if !self.is_symmetric() {
            return Err(DesignError::NotSymmetric { b: p.b, v: p.v });
        }
        let b = self.blocks.len();
        let blocks: Vec<BitSet> = (0..self.v)
            .map(|x| {
                BitSet::from_indices(
                    b,
                    self.blocks
                        .iter()
                        .enumerate()
                        .filter(|(_, bl)| bl.contains(x))
                        .map(|(j, _)| j),
                )
            })
            .collect();
        Design::from_blocks_ordered(b, blocks)
    }

    /// Serializes to the design text format (see the module docs of
    /// [`crate::cli`] and the README): header `v k lambda b`, then one line
    /// of strictly increasing point indices per block.
    pub fn encode(&self) -> String {
        let p = self.params;
        let mut out = format!("{} {} {} {}\n", p.v, p.k, p.lambda, p.b);
        for block in &self.blocks {
            let indices: Vec<String> = block.iter_ones().map(|i| i.to_string()).collect();
            out.push_str(&indices.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the design text format, preserving block order. `#` starts a
    /// comment line; blank lines are ignored. Errors carry 1-based line
    /// numbers.
    pub fn decode(text: &str) -> Result<Design, DesignError> {
        let parse_err = |line: usize, message: String| DesignError::Parse { line, message };
        let mut data_lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_no, header) = data_lines
            .next()
            .ok_or_else(|| parse_err(1, "empty design file".into()))?;
        let fields: Vec<u64> = header
            .split_whitespace()
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| parse_err(header_no, format!("bad header token '{t}'")))
            })
            .collect::<Result<_, _>>()?;
        let [v, k, lambda, b] = fields[..] else {
            return Err(parse_err(
                header_no,
                format!("header needs 4 fields 'v k lambda b', got {}", fields.len()),
            ));
        };
        if v < 2 || v > 1_000_000 {
            return Err(parse_err(header_no, format!("unreasonable v = {v}")));
        }

        let mut blocks = Vec::with_capacity(b as usize);
        for _ in 0..b {
            let (line_no, line) = data_lines.next().ok_or_else(|| {
                parse_err(
                    header_no,
                    format!("expected {b} block lines, found {}", blocks.len()),
                )
            })?;
            let mut block = BitSet::new(v as usize);
            let mut prev: Option<usize> = None;
            for tok in line.split_whitespace() {
                let idx: usize = tok
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("bad point index '{tok}'")))?;
                if idx >= v as usize {
                    return Err(parse_err(line_no, format!("point {idx} >= v = {v}")));
                }
                if let Some(p) = prev {
                    if idx <= p {
                        return Err(parse_err(
                            line_no,
                            format!("indices must be strictly increasing, {idx} after {p}"),
                        ));
                    }
                }
                prev = Some(idx);
                block.insert(idx);
            }
            if block.count_ones() != k as usize {
                return Err(parse_err(
                    line_no,
                    format!("block has {} points, header says k = {k}", block.count_ones()),
                ));
            }
            blocks.push(block);
        }
        if let Some((line_no, _)) = data_lines.next() {
            return Err(parse_err(line_no, "trailing data after last block".into()));
        }

        let design = Design::from_blocks_ordered(v as usize, blocks)?;
        let p = design.params;
        for (field, stated, computed) in
            [("lambda", lambda, p.lambda), ("b", b, p.b), ("k", k, p.k)]
        {
            if stated != computed {
                return Err(DesignError::HeaderMismatch {
                    field,
                    stated,
                    computed,
                });
            }
        }
        Ok(design)
    }
}

/// Splits a prime power `q` into `(p, e)`.
pub(crate) fn prime_power(q: u64) -> Result<(u64, u32), DesignError> {
    if q < 2 {
        return Err(DesignError::NotPrimePower { q });
    }
    let p = (2..=q).find(|d| q % d == 0).unwrap();
    let mut e = 0u32;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    if rest != 1 {
        return Err(DesignError::NotPrimePower { q });
    }
    Ok((p, e))
}

/// The projective plane PG(2,q): a 2-(q²+q+1, q+1, 1) design.
///
/// Points are the normalized nonzero vectors of GF(q)³ (first nonzero
/// coordinate scaled to 1); blocks are the 2-dimensional subspaces, realized
/// as the zero sets of normalized linear forms.
pub fn projective_plane(q: u64) -> Result<Design, DesignError> {
    let (p, e) = prime_power(q)?;
    let f = Field::new(p, e)?;
    let points = normalized_triples(&f);
    let v = points.len();
    debug_assert_eq!(v as u64, q * q + q + 1);

    let blocks: Vec<BitSet> = normalized_triples(&f)
        .iter()
        .map(|line| {
            BitSet::from_indices(
                v,
                points.iter().enumerate().filter_map(|(i, pt)| {
                    let dot = (0..3).fold(f.zero(), |acc, c| {
                        f.add(&acc, &f.mul(&line[c], &pt[c]))
                    });
                    f.is_zero(&dot).then_some(i)
                }),
            )
        })
        .collect();
    let d = Design::from_blocks(v, blocks)?;
    debug_assert_eq!(
        (d.params.v, d.params.k, d.params.lambda),
        (q * q + q + 1, q + 1, 1)
    );
    Ok(d)
}

/// Normalized projective triples over `f`, in a fixed deterministic order:
/// (1,a,b), then (0,1,c), then (0,0,1).
fn normalized_triples(f: &Field) -> Vec<[crate::field::FieldElement; 3]> {
    let els = f.elements();
    let one = f.one();
    let zero = f.zero();
    let mut out = Vec::with_capacity((f.order() * f.order() + f.order() + 1) as usize);
    for a in &els {
        for b in &els {
            out.push([one.clone(), a.clone(), b.clone()]);
        }
    }
    for c in &els {
        out.push([zero.clone(), one.clone(), c.clone()]);
    }
    out.push([zero.clone(), zero.clone(), one.clone()]);
    out
}

/// The affine plane AG(2,q): a 2-(q², q, 1) design with b = q² + q.
///
/// Points are GF(q)²; blocks are the lines y = mx + c plus the verticals
/// x = c.
pub fn affine_plane(q: u64) -> Result<Design, DesignError> {
    let (p, e) = prime_power(q)?;
    let f = Field::new(p, e)?;
    let els = f.elements();
    let qu = q as usize;
    let v = qu * qu;
    let index = |x: &crate::field::FieldElement, y: &crate::field::FieldElement| {
        f.value(x) as usize * qu + f.value(y) as usize
    };

    let mut blocks = Vec::with_capacity(v + qu);
    for m in &els {
        for c in &els {
            blocks.push(BitSet::from_indices(
                v,
                els.iter().map(|x| index(x, &f.add(&f.mul(m, x), c))),
            ));
        }
    }
    for c in &els {
        blocks.push(BitSet::from_indices(v, els.iter().map(|y| index(c, y))));
    }
    let d = Design::from_blocks(v, blocks)?;
    debug_assert_eq!(
        (d.params.v, d.params.k, d.params.lambda, d.params.b),
        (q * q, q, 1, q * q + q)
    );
    Ok(d)
}

/// Development of base blocks under the cyclic group Z_v: every translate
/// B + i (mod v), with short orbits deduplicated. The result must validate
/// as a 2-design; otherwise the failing pair and its coverage are reported.
pub fn cyclic_design(v: usize, base_blocks: &[Vec<usize>]) -> Result<Design, DesignError> {
    if v < 3 {
        return Err(DesignError::TooFewPoints(v));
    }
    let mut blocks = Vec::new();
    for (index, base) in base_blocks.iter().enumerate() {
        if base.is_empty() {
            return Err(DesignError::EmptyBaseBlock { index });
        }
        if let Some(&point) = base.iter().find(|&&pt| pt >= v) {
            return Err(DesignError::BasePointOutOfRange { index, point, v });
        }
        let mut orbit: Vec<BitSet> = (0..v)
            .map(|shift| BitSet::from_indices(v, base.iter().map(|&pt| (pt + shift) % v)))
            .collect();
        orbit.sort();
        orbit.dedup();
        blocks.extend(orbit);
    }
    Design::from_blocks(v, blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fano() -> Design {
        cyclic_design(7, &[vec![0, 1, 3]]).unwrap()
    }

    pub(crate) fn paley_biplane() -> Design {
        cyclic_design(11, &[vec![1, 3, 4, 5, 9]]).unwrap()
    }

    #[test]
    fn fano_parameters() {
        let d = fano();
        assert_eq!(
            d.params(),
            DesignParams {
                v: 7,
                k: 3,
                lambda: 1,
                b: 7,
                r: 3
            }
        );
        assert!(d.is_symmetric());
    }

    #[test]
    fn projective_planes_validate() {
        for q in [2u64, 3, 4, 5] {
            let d = projective_plane(q).unwrap();
            let p = d.params();
            assert_eq!((p.v, p.k, p.lambda, p.b), (q * q + q + 1, q + 1, 1, q * q + q + 1));
            assert!(d.is_symmetric());
        }
    }

    #[test]
    fn projective_plane_blocks_pairwise_meet_once() {
        let d = projective_plane(4).unwrap();
        for (i, a) in d.blocks().iter().enumerate() {
            for b in &d.blocks()[i + 1..] {
                assert_eq!(a.intersection_count(b), 1);
            }
        }
    }

    #[test]
    fn affine_planes_validate() {
        for q in [2u64, 3, 4, 5] {
            let d = affine_plane(q).unwrap();
            let p = d.params();
            assert_eq!((p.v, p.k, p.lambda, p.b, p.r), (q * q, q, 1, q * q + q, q + 1));
            assert!(!d.is_symmetric());
        }
    }

    #[test]
    fn affine_plane_2_is_all_pairs() {
        let d = affine_plane(2).unwrap();
        assert_eq!(d.b(), 6);
        let mut seen: Vec<Vec<usize>> = d.blocks().iter().map(|b| b.indices()).collect();
        seen.sort();
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn affine_plane_4_parallel_classes() {
        // The 20 blocks split into 5 classes of 4 pairwise disjoint lines.
        let d = affine_plane(4).unwrap();
        let mut assigned: Vec<Option<usize>> = vec![None; d.b()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..d.b() {
            if assigned[i].is_some() {
                continue;
            }
            let class_id = classes.len();
            let mut class = vec![i];
            assigned[i] = Some(class_id);
            for j in (i + 1)..d.b() {
                if assigned[j].is_none() && !d.block(i).intersects(d.block(j)) {
                    // Parallelism is transitive in an affine plane.
                    assert!(class.iter().all(|&m| !d.block(m).intersects(d.block(j))));
                    class.push(j);
                    assigned[j] = Some(class_id);
                }
            }
            classes.push(class);
        }
        assert_eq!(classes.len(), 5);
        assert!(classes.iter().all(|c| c.len() == 4));
    }

    #[test]
    fn cyclic_fano_matches_projective_parameters() {
        assert_eq!(fano().params(), projective_plane(2).unwrap().params());
    }

    #[test]
    fn paley_biplane_validates() {
        let d = paley_biplane();
        assert_eq!(
            d.params(),
            DesignParams {
                v: 11,
                k: 5,
                lambda: 2,
                b: 11,
                r: 5
            }
        );
    }

    #[test]
    fn cyclic_sts13() {
        let d = cyclic_design(13, &[vec![0, 1, 4], vec![0, 2, 7]]).unwrap();
        let p = d.params();
        assert_eq!((p.v, p.k, p.lambda, p.b), (13, 3, 1, 26));
    }

    #[test]
    fn cyclic_sts15_short_orbit() {
        let d = cyclic_design(15, &[vec![0, 1, 4], vec![0, 2, 9], vec![0, 5, 10]]).unwrap();
        let p = d.params();
        assert_eq!((p.v, p.k, p.lambda, p.b, p.r), (15, 3, 1, 35, 7));
    }

    #[test]
    fn cyclic_rejects_non_design() {
        let err = cyclic_design(8, &[vec![0, 1, 3]]).unwrap_err();
        assert!(matches!(err, DesignError::PairCoverage { .. }), "{err}");
    }

    #[test]
    fn complement_of_fano_is_biplane() {
        let c = fano().complement().unwrap();
        let p = c.params();
        assert_eq!((p.v, p.k, p.lambda), (7, 4, 2));
        assert_eq!(c.complement().unwrap(), fano());
    }

    #[test]
    fn complement_of_affine_plane() {
        let c = affine_plane(3).unwrap().complement().unwrap();
        assert_eq!(c.params().lambda, 12 - 8 + 1);
        assert_eq!(c.params().k, 6);
    }

    #[test]
    fn complement_requires_room() {
        // 2-(3,2,1): all pairs on three points; v - k = 1 leaves no room.
        let d = Design::from_blocks(
            3,
            vec![
                BitSet::from_indices(3, [0, 1]),
                BitSet::from_indices(3, [0, 2]),
                BitSet::from_indices(3, [1, 2]),
            ],
        )
        .unwrap();
        assert!(matches!(
            d.complement().unwrap_err(),
            DesignError::ComplementTooSmall { .. }
        ));
    }

    #[test]
    fn residual_of_fano_is_ag22() {
        let (res, mapping) = fano().residual(0).unwrap();
        assert_eq!(res.params(), affine_plane(2).unwrap().params());
        assert_eq!(mapping.len(), 4);
    }

    #[test]
    fn residual_of_pg23_parameters() {
        let d = projective_plane(3).unwrap();
        let (res, _) = d.residual(5).unwrap();
        let p = res.params();
        assert_eq!((p.v, p.k, p.lambda, p.b), (9, 3, 1, 12));
    }

    #[test]
    fn residual_of_paley_biplane() {
        let (res, _) = paley_biplane().residual(3).unwrap();
        let p = res.params();
        assert_eq!((p.v, p.k, p.lambda, p.b), (6, 3, 2, 10));
    }

    #[test]
    fn residual_requires_symmetric() {
        let d = affine_plane(2).unwrap();
        assert!(matches!(
            d.residual(0).unwrap_err(),
            DesignError::NotSymmetric { .. }
        ));
    }

    #[test]
    fn dual_pencil_contract_and_involution() {
        for d in [fano(), paley_biplane(), projective_plane(3).unwrap()] {
            let dual = d.dual().unwrap();
            assert_eq!(dual.params(), d.params());
            // New point j's pencil is old block j's point set.
            for j in 0..dual.v() {
                let pencil: Vec<usize> = dual
                    .blocks()
                    .iter()
                    .enumerate()
                    .filter(|(_, bl)| bl.contains(j))
                    .map(|(x, _)| x)
                    .collect();
                assert_eq!(pencil, d.block(j).indices());
            }
            assert_eq!(dual.dual().unwrap(), d);
        }
    }

    #[test]
    fn symmetric_blocks_meet_in_lambda_points() {
        for d in [fano(), paley_biplane(), projective_plane(3).unwrap()] {
            let lambda = d.params().lambda as usize;
            for (i, a) in d.blocks().iter().enumerate() {
                for b in &d.blocks()[i + 1..] {
                    assert_eq!(a.intersection_count(b), lambda);
                }
            }
        }
    }

    #[test]
    fn validate_rejects_deleted_block() {
        let d = fano();
        let broken: Vec<BitSet> = d.blocks()[1..].to_vec();
        assert!(matches!(
            Design::validate(7, &broken).unwrap_err(),
            DesignError::PairCoverage { .. }
        ));
    }

    #[test]
    fn validate_rejects_ragged_blocks() {
        let blocks = vec![
            BitSet::from_indices(4, [0, 1]),
            BitSet::from_indices(4, [1, 2, 3]),
        ];
        assert!(matches!(
            Design::validate(4, &blocks).unwrap_err(),
            DesignError::NonConstantBlockSize { index: 1, .. }
        ));
    }

    #[test]
    fn validate_reports_fisher_violation() {
        // A single block covering every pair once: consistent pair counts,
        // but b = 1 < v, which no 2-design achieves.
        let blocks = vec![BitSet::from_indices(4, [0, 1, 2, 3])];
        assert_eq!(
            Design::validate(4, &blocks).unwrap_err(),
            DesignError::FisherViolation { b: 1, v: 4 }
        );
    }

    #[test]
    fn encode_header_and_roundtrip() {
        let d = affine_plane(2).unwrap();
        let text = d.encode();
        assert!(text.starts_with("4 2 1 6\n"));
        assert_eq!(Design::decode(&text).unwrap(), d);

        let dual = paley_biplane().dual().unwrap();
        assert_eq!(Design::decode(&dual.encode()).unwrap(), dual);
    }

    #[test]
    fn decode_reports_line_numbers() {
        let text = "# comment\n7 3 1 7\n0 1 3\n1 2 4\n2 3 5\n3 4 6\n0 4 5\n1 5 6\n0 2\n";
        let err = Design::decode(text).unwrap_err();
        match err {
            DesignError::Parse { line, ref message } => {
                assert_eq!(line, 9);
                assert!(message.contains("k = 3"), "{message}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn decode_rejects_header_mismatch() {
        let d = fano();
        let text = d.encode().replacen("7 3 1 7", "7 3 2 7", 1);
        assert!(matches!(
            Design::decode(&text).unwrap_err(),
            DesignError::HeaderMismatch { field: "lambda", .. }
        ));
    }

    #[test]
    fn constructor_blocks_are_sorted() {
        for d in [fano(), projective_plane(3).unwrap(), affine_plane(3).unwrap()] {
            assert!(d.blocks().windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn not_prime_power_rejected() {
        assert!(matches!(
            projective_plane(6).unwrap_err(),
            DesignError::NotPrimePower { q: 6 }
        ));
        assert!(matches!(
            affine_plane(10).unwrap_err(),
            DesignError::NotPrimePower { q: 10 }
        ));
    }
}
