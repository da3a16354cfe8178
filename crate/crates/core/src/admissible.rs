//! Periods, connectedness of removable nodes, admissible residue sequences
//! and the checkers built on them.
//!
//! At a charge in the fundamental domain, `Adm(λ)` is built by repeatedly
//! removing a class of removable nodes of one residue: the class of the
//! largest normal removable node under the closure of `(1)`- and
//! `(2)`-connectedness. Elsewhere `λ` is first moved to the fundamental
//! domain with `Ψ`.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::Serialize;

use crate::crystal::{
    apply_sequence, is_flotw, is_uglov, normal_removable_nodes, precedes, residues_of, CrystalParams,
};
use crate::diagrams::{nature_at, node_cmp, node_key, sufficient_window, Bipartition, ExtNode, NatureKind};
use crate::isomorphism::{psi, reduce_to_fundamental, MovePath};
use crate::{Error, IntVector, Residue, Result};

fn finite_e(p: &CrystalParams) -> Result<i64> {
    p.e.finite().ok_or(Error::InfiniteE)
}

fn require_fundamental(p: &CrystalParams) -> Result<i64> {
    let e = finite_e(p)?;
    if !p.in_fundamental_domain() {
        return Err(Error::NotFundamental(p.charge));
    }
    Ok(e)
}

/// A chain of `e` nodes of the vertical boundary inside the Young diagram,
/// with contents increasing by one and components weakly increasing.
pub fn find_period(bp: &Bipartition, p: &CrystalParams) -> Result<Option<Vec<ExtNode>>> {
    let e = finite_e(p)? as usize;
    let mut slots: BTreeMap<(i64, u8), ExtNode> = BTreeMap::new();
    for c in [1u8, 2] {
        let l = bp.comp(c);
        for a in 1..=l.len() {
            let n = ExtNode::new(a, l.part(a), c);
            slots.insert((n.content(p.charge), c), n);
        }
    }
    fn extend(
        chain: &mut Vec<ExtNode>,
        slots: &BTreeMap<(i64, u8), ExtNode>,
        e: usize,
        charge: crate::Charge,
    ) -> bool {
        if chain.len() == e {
            return true;
        }
        let last = *chain.last().unwrap();
        let k = last.content(charge) + 1;
        for c in last.c..=2 {
            if let Some(n) = slots.get(&(k, c)) {
                chain.push(*n);
                if extend(chain, slots, e, charge) {
                    return true;
                }
                chain.pop();
            }
        }
        false
    }
    for n in slots.values() {
        let mut chain = vec![*n];
        if extend(&mut chain, &slots, e, p.charge) {
            return Ok(Some(chain));
        }
    }
    Ok(None)
}

pub fn has_period(bp: &Bipartition, p: &CrystalParams) -> Result<bool> {
    Ok(find_period(bp, p)?.is_some())
}

/// `g1 <_s g2` removable nodes of one residue are `(1)`-connected when
/// removing `g2` creates a period.
pub fn one_connected(bp: &Bipartition, g1: &ExtNode, g2: &ExtNode, p: &CrystalParams) -> Result<bool> {
    finite_e(p)?;
    if !bp.is_removable(g1) || !bp.is_removable(g2) {
        return Err(Error::Precondition(format!("{g1} and {g2} must both be removable from {bp}")));
    }
    if p.residue(g1) != p.residue(g2) {
        return Err(Error::Precondition(format!("{g1} and {g2} have different residues")));
    }
    if node_cmp(g1, g2, p.charge)? != std::cmp::Ordering::Less {
        return Err(Error::Precondition(format!("{g1} is not smaller than {g2}")));
    }
    has_period(&bp.without(g2), p)
}

/// The `(2)`-connected partner of a removable node, when the FLOTW
/// inequality through it is an equality.
pub fn two_connected(bp: &Bipartition, g1: &ExtNode, p: &CrystalParams) -> Result<Option<ExtNode>> {
    let e = require_fundamental(p)?;
    if !bp.is_removable(g1) {
        return Err(Error::Precondition(format!("{g1} is not removable from {bp}")));
    }
    let s = p.charge;
    let (shift, other) = match g1.c {
        1 => ((s.s2 - s.s1) as usize, 2u8),
        _ => ((e + s.s1 - s.s2) as usize, 1u8),
    };
    let a = g1.a + shift;
    let b = bp.comp(other).part(a);
    Ok((b == g1.b).then(|| ExtNode::new(a, b, other)))
}

/// The largest normal removable node over all residues.
pub fn adm_seed(bp: &Bipartition, p: &CrystalParams) -> Option<ExtNode> {
    residues_of(&bp.removable_nodes(), p)
        .into_iter()
        .flat_map(|j| normal_removable_nodes(bp, j, p))
        .max_by_key(|n| node_key(n, p.charge))
}

/// Removable nodes of the seed's residue in the seed's class, increasing.
pub fn removable_class(bp: &Bipartition, seed: &ExtNode, p: &CrystalParams) -> Result<Vec<ExtNode>> {
    require_fundamental(p)?;
    if adm_seed(bp, p).as_ref() != Some(seed) {
        return Err(Error::Precondition(format!(
            "{seed} is not the largest normal removable node of {bp}"
        )));
    }
    let j = p.residue(seed);
    let candidates: Vec<ExtNode> = bp.removable_nodes().into_iter().filter(|n| p.residue(n) == j).collect();
    let mut class = vec![*seed];
    let mut grew = true;
    while grew {
        grew = false;
        for x in &candidates {
            if class.contains(x) {
                continue;
            }
            let mut joined = false;
            for y in &class {
                let (lo, hi) = if node_key(x, p.charge) < node_key(y, p.charge) { (x, y) } else { (y, x) };
                if two_connected(bp, x, p)? == Some(*y)
                    || two_connected(bp, y, p)? == Some(*x)
                    || one_connected(bp, lo, hi, p)?
                {
                    joined = true;
                    break;
                }
            }
            if joined {
                class.push(*x);
                grew = true;
            }
        }
    }
    class.sort_by_key(|n| node_key(n, p.charge));
    Ok(class)
}

/// Classes removed while computing `Adm`, first removed first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmTrace {
    pub bp: Bipartition,
    pub classes: Vec<(Residue, Vec<ExtNode>)>,
}

impl AdmTrace {
    /// The residue sequence, oldest residue first.
    pub fn sequence(&self) -> Vec<Residue> {
        self.classes
            .iter()
            .rev()
            .flat_map(|(j, cl)| std::iter::repeat_n(*j, cl.len()))
            .collect()
    }
}

pub fn adm_flotw_trace(bp: &Bipartition, p: &CrystalParams) -> Result<AdmTrace> {
    if !is_flotw(bp, p)? {
        return Err(Error::NotFlotw {
            bp: bp.clone(),
            charge: p.charge,
        });
    }
    let mut cur = bp.clone();
    let mut classes = Vec::new();
    while !cur.is_empty() {
        let seed = adm_seed(&cur, p)
            .ok_or_else(|| Error::Internal(format!("{cur} has no normal removable node")))?;
        let class = removable_class(&cur, &seed, p)?;
        for n in class.iter().rev() {
            cur = cur.without(n);
        }
        if !is_flotw(&cur, p)? {
            return Err(Error::Internal(format!("removing the class {class:?} left {cur}, not FLOTW")));
        }
        classes.push((p.residue(&seed), class));
    }
    Ok(AdmTrace {
        bp: bp.clone(),
        classes,
    })
}

/// `Adm` at a charge in the fundamental domain.
pub fn adm_flotw(bp: &Bipartition, p: &CrystalParams) -> Result<Vec<Residue>> {
    Ok(adm_flotw_trace(bp, p)?.sequence())
}

/// `Adm` of an Uglov bipartition at any charge, with the path and image used.
pub fn adm_with_trace(bp: &Bipartition, p: &CrystalParams) -> Result<(MovePath, AdmTrace)> {
    let e = finite_e(p)?;
    if !is_uglov(bp, p) {
        return Err(Error::NotUglov {
            bp: bp.clone(),
            charge: p.charge,
        });
    }
    let path = reduce_to_fundamental(p.charge, e);
    let image = psi(bp, &path)?;
    let trace = adm_flotw_trace(&image, &p.with_charge(path.end()))?;
    Ok((path, trace))
}

/// The admissible residue sequence, oldest residue first.
pub fn adm(bp: &Bipartition, p: &CrystalParams) -> Result<Vec<Residue>> {
    Ok(adm_with_trace(bp, p)?.1.sequence())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DjmReport {
    pub bp: Bipartition,
    pub adm: Vec<Residue>,
    pub expansion: IntVector,
    pub max: Option<Bipartition>,
    pub pass: bool,
}

/// Expands `Adm(bp)` from the empty bipartition (first residue acts first)
/// and checks that `bp` is the strict `⪯_s`-maximum of the support.
pub fn verify_djm_forward(bp: &Bipartition, p: &CrystalParams) -> Result<DjmReport> {
    let seq = adm(bp, p)?;
    let expansion: IntVector = apply_sequence(&seq, p);
    let max = expansion.max_support(p.charge).cloned();
    let pass = expansion.coeff(bp) != 0 && expansion.support().all(|m| m == bp || precedes(m, bp, p.charge));
    Ok(DjmReport {
        bp: bp.clone(),
        adm: seq,
        expansion,
        max,
        pass,
    })
}

/// All words of length `n` over `0..e`, in lexicographic order.
pub fn all_words(n: usize, e: i64) -> Vec<Vec<Residue>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..e).map(move |j| {
                    let mut v = w.clone();
                    v.push(j);
                    v
                })
            })
            .collect();
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConverseWitness {
    pub word: Vec<Residue>,
    pub max: Bipartition,
}

/// The `⪯_s`-maximum of the monomial for `word`, if it is not Uglov.
pub fn converse_check_word(word: &[Residue], p: &CrystalParams) -> Option<ConverseWitness> {
    let v: IntVector = apply_sequence(word, p);
    let m = v.max_support(p.charge)?;
    (!is_uglov(m, p)).then(|| ConverseWitness {
        word: word.to_vec(),
        max: m.clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConverseReport {
    pub n: usize,
    pub words: usize,
    pub nonzero: usize,
    pub counterexamples: Vec<ConverseWitness>,
    pub pass: bool,
}

/// Runs every residue word of length `n` and checks that no monomial has a
/// non-Uglov strict maximum.
pub fn verify_djm_converse(n: usize, p: &CrystalParams) -> Result<ConverseReport> {
    let e = finite_e(p)?;
    let words = all_words(n, e);
    let mut nonzero = 0;
    let mut counterexamples = Vec::new();
    for w in &words {
        let v: IntVector = apply_sequence(w, p);
        if let Some(m) = v.max_support(p.charge) {
            nonzero += 1;
            if !is_uglov(m, p) {
                counterexamples.push(ConverseWitness {
                    word: w.clone(),
                    max: m.clone(),
                });
            }
        }
    }
    Ok(ConverseReport {
        n,
        words: words.len(),
        nonzero,
        pass: counterexamples.is_empty(),
        counterexamples,
    })
}

/// Shapes admitting a row-standard tableau with residue sequence `word`:
/// the entry `k` sits in a node of residue `word[k-1]`.
pub fn row_standard_shapes(word: &[Residue], p: &CrystalParams) -> BTreeSet<Bipartition> {
    let n = word.len();
    // Row lengths per component; rows may be filled in any order, so the
    // intermediate states are compositions.
    type State = (Vec<usize>, Vec<usize>);
    fn repair_cost(rows: &[usize]) -> usize {
        let mut best = 0;
        let mut cost = 0;
        for &r in rows.iter().rev() {
            best = best.max(r);
            cost += best - r;
        }
        cost
    }
    let mut layer: HashSet<State> = HashSet::from([(vec![0; n], vec![0; n])]);
    for (k, &j) in word.iter().enumerate() {
        let left = n - k - 1;
        let mut next = HashSet::new();
        for (r1, r2) in &layer {
            for c in [1u8, 2] {
                let rows = if c == 1 { r1 } else { r2 };
                for (a, &row) in rows.iter().enumerate().take(n) {
                    let node = ExtNode::new(a + 1, row + 1, c);
                    if p.residue(&node) != j {
                        continue;
                    }
                    let mut s = (r1.clone(), r2.clone());
                    if c == 1 {
                        s.0[a] += 1;
                    } else {
                        s.1[a] += 1;
                    }
                    if repair_cost(&s.0) + repair_cost(&s.1) <= left {
                        next.insert(s);
                    }
                }
            }
        }
        layer = next;
    }
    layer
        .into_iter()
        .filter_map(|(r1, r2)| Bipartition::from_parts(&r1, &r2).ok())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub bp: Bipartition,
    pub adm: Vec<Residue>,
    pub shapes: Vec<Bipartition>,
    pub pass: bool,
}

/// Every other shape with a row-standard tableau of residue sequence
/// `Adm(bp)` is strictly below `bp`, and `bp` itself is one of them.
pub fn verify_djm_corollary(bp: &Bipartition, p: &CrystalParams) -> Result<CorollaryReport> {
    let seq = adm(bp, p)?;
    let shapes = row_standard_shapes(&seq, p);
    let pass = shapes.contains(bp) && shapes.iter().all(|m| m == bp || precedes(m, bp, p.charge));
    Ok(CorollaryReport {
        bp: bp.clone(),
        adm: seq,
        shapes: shapes.into_iter().collect(),
        pass,
    })
}

/// Checks on the top class of a FLOTW bipartition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PfReport {
    pub bp: Bipartition,
    pub class: Vec<ExtNode>,
    /// Removing the `k` smallest class nodes keeps FLOTW, for every `k`.
    pub remove_smallest_flotw: bool,
    /// Removing the `k` largest class nodes keeps FLOTW, for every `k`.
    pub remove_largest_flotw: bool,
    /// The seed is above every addable node of its residue.
    pub seed_above_addable: bool,
    /// The seed is above every non-removable vertical-boundary node of its residue.
    pub seed_above_boundary: bool,
    /// As `seed_above_boundary`, comparing contents only.
    pub seed_above_boundary_by_content: bool,
    /// The class minimum is above every addable node of its residue.
    pub min_above_addable: bool,
    pub min_above_boundary: bool,
}

fn boundary_nodes_above(bp: &Bipartition, g: &ExtNode, p: &CrystalParams) -> Vec<ExtNode> {
    let j = p.residue(g);
    let k = node_key(g, p.charge);
    let mut out = Vec::new();
    for c in [1u8, 2] {
        let l = bp.comp(c);
        let mut a = 1;
        loop {
            let n = ExtNode::new(a, l.part(a), c);
            if n.content(p.charge) < k.0 {
                break;
            }
            if p.residue(&n) == j && !bp.is_removable(&n) && node_key(&n, p.charge) > k {
                out.push(n);
            }
            a += 1;
        }
    }
    out
}

fn addable_above(bp: &Bipartition, g: &ExtNode, p: &CrystalParams) -> bool {
    let j = p.residue(g);
    bp.addable_nodes()
        .iter()
        .any(|n| p.residue(n) == j && node_key(n, p.charge) > node_key(g, p.charge))
}

pub fn pf_checks(bp: &Bipartition, p: &CrystalParams) -> Result<Option<PfReport>> {
    if !is_flotw(bp, p)? {
        return Err(Error::NotFlotw {
            bp: bp.clone(),
            charge: p.charge,
        });
    }
    let Some(seed) = adm_seed(bp, p) else {
        return Ok(None);
    };
    let class = removable_class(bp, &seed, p)?;
    let (mut remove_smallest_flotw, mut remove_largest_flotw) = (true, true);
    for k in 0..class.len() {
        let mut cur = bp.clone();
        for n in class[..=k].iter().rev() {
            cur = cur.without(n);
        }
        remove_smallest_flotw &= is_flotw(&cur, p)?;
        let mut cur = bp.clone();
        for n in class[k..].iter().rev() {
            cur = cur.without(n);
        }
        remove_largest_flotw &= is_flotw(&cur, p)?;
    }
    let above_seed = boundary_nodes_above(bp, &seed, p);
    let min = class[0];
    Ok(Some(PfReport {
        bp: bp.clone(),
        remove_smallest_flotw,
        remove_largest_flotw,
        seed_above_addable: !addable_above(bp, &seed, p),
        seed_above_boundary: above_seed.is_empty(),
        seed_above_boundary_by_content: above_seed.iter().all(|n| n.content(p.charge) == seed.content(p.charge)),
        min_above_addable: !addable_above(bp, &min, p),
        min_above_boundary: boundary_nodes_above(bp, &min, p).is_empty(),
        class,
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropbReport {
    pub bp: Bipartition,
    pub residue: Residue,
    /// The normal removable nodes matching the top class, increasing.
    pub eta: Vec<ExtNode>,
    pub no_addable_above: bool,
    pub bh_excludes_bv: bool,
    pub pass: bool,
}

/// For an Uglov bipartition with top class of size `r` and residue `j`, the
/// `r` largest normal removable `j`-nodes `η₁ < … < η_r` must have no addable
/// `j`-node above `η₁`, and a non-virtual `Bh` `j`-node above `η₁` excludes
/// any `Bv` `j`-node above `η₁`.
pub fn propb_checks(bp: &Bipartition, p: &CrystalParams) -> Result<Option<PropbReport>> {
    let (_, trace) = adm_with_trace(bp, p)?;
    let Some((j, class)) = trace.classes.first() else {
        return Ok(None);
    };
    let normal = normal_removable_nodes(bp, *j, p);
    if normal.len() < class.len() {
        return Ok(Some(PropbReport {
            bp: bp.clone(),
            residue: *j,
            eta: normal,
            no_addable_above: false,
            bh_excludes_bv: false,
            pass: false,
        }));
    }
    let eta = normal[normal.len() - class.len()..].to_vec();
    let k = node_key(&eta[0], p.charge);
    let no_addable_above = !addable_above(bp, &eta[0], p);
    let (lo, hi) = sufficient_window(bp, p.charge);
    let (mut bh, mut bv) = (false, false);
    for content in k.0.max(lo - 1)..=hi + 1 {
        if p.e.residue(content) != *j {
            continue;
        }
        for c in [1u8, 2] {
            let (nat, node) = nature_at(bp, p.charge, content, c);
            if node_key(&node, p.charge) <= k {
                continue;
            }
            match nat.kind {
                NatureKind::Bh if !nat.is_virtual => bh = true,
                NatureKind::Bv => bv = true,
                _ => {}
            }
        }
    }
    let bh_excludes_bv = !(bh && bv);
    Ok(Some(PropbReport {
        bp: bp.clone(),
        residue: *j,
        eta,
        no_addable_above,
        bh_excludes_bv,
        pass: no_addable_above && bh_excludes_bv,
    }))
}
