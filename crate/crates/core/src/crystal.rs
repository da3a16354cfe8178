//! The Fock space at `v = 1`, good nodes, Uglov and FLOTW bipartitions.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagrams::{node_key, order_uglov, Bipartition, Charge, ExtNode, Modulus};
use crate::{Error, Residue, Result};

/// `e` together with the charge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CrystalParams {
    pub e: Modulus,
    pub charge: Charge,
}

impl CrystalParams {
    pub const fn new(e: Modulus, charge: Charge) -> Self {
        CrystalParams { e, charge }
    }

    pub fn residue(&self, node: &ExtNode) -> Residue {
        node.residue(self.charge, self.e)
    }

    pub fn with_charge(&self, charge: Charge) -> Self {
        CrystalParams { e: self.e, charge }
    }

    /// True when `0 ≤ s1 ≤ s2 < e`.
    pub fn in_fundamental_domain(&self) -> bool {
        match self.e {
            Modulus::Finite(e) => 0 <= self.charge.s1 && self.charge.s1 <= self.charge.s2 && self.charge.s2 < e,
            Modulus::Infinite => false,
        }
    }
}

/// A finite integer combination of bipartitions. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVector<C> {
    terms: BTreeMap<Bipartition, C>,
}

impl<C: Clone + Zero + One> Default for FockVector<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Clone + Zero + One> FockVector<C> {
    pub fn zero() -> Self {
        FockVector { terms: BTreeMap::new() }
    }

    pub fn basis(bp: Bipartition) -> Self {
        let mut v = Self::zero();
        v.terms.insert(bp, C::one());
        v
    }

    /// Adds `c · bp`.
    pub fn add_term(&mut self, bp: Bipartition, c: C) {
        let sum = match self.terms.get(&bp) {
            Some(x) => x.clone() + c,
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&bp);
        } else {
            self.terms.insert(bp, sum);
        }
    }

    pub fn coeff(&self, bp: &Bipartition) -> C {
        self.terms.get(bp).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Bipartition, &C)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Bipartition> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Rank shared by the support, or `None` for the zero vector.
    pub fn rank(&self) -> Option<usize> {
        self.terms.keys().next().map(|b| b.rank())
    }

    /// The `⪯_s`-largest element of the support.
    pub fn max_support(&self, charge: Charge) -> Option<&Bipartition> {
        self.terms.keys().max_by(|x, y| order_uglov(x, y, charge))
    }
}

#[derive(Serialize, Deserialize)]
struct Term<B, C> {
    bp: B,
    coeff: C,
}

impl<C: Serialize> Serialize for FockVector<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter().map(|(bp, coeff)| Term { bp, coeff }))
    }
}

impl<'de, C> Deserialize<'de> for FockVector<C>
where
    C: Deserialize<'de> + Clone + Zero + One,
{
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms: Vec<Term<Bipartition, C>> = Vec::deserialize(d)?;
        let mut v = FockVector::zero();
        let mut rank = None;
        for t in terms {
            if *rank.get_or_insert(t.bp.rank()) != t.bp.rank() {
                return Err(D::Error::custom("all terms of a Fock vector must share one rank"));
            }
            v.add_term(t.bp, t.coeff);
        }
        Ok(v)
    }
}

/// `f_j`: adds every addable node of residue `j`.
pub fn f_action<C: Clone + Zero + One>(v: &FockVector<C>, j: Residue, p: &CrystalParams) -> FockVector<C> {
    let mut out = FockVector::zero();
    for (bp, c) in v.iter() {
        for n in bp.addable_nodes() {
            if p.residue(&n) == j {
                out.add_term(bp.with(&n), c.clone());
            }
        }
    }
    out
}

/// `e_j`: removes every removable node of residue `j`.
pub fn e_action<C: Clone + Zero + One>(v: &FockVector<C>, j: Residue, p: &CrystalParams) -> FockVector<C> {
    let mut out = FockVector::zero();
    for (bp, c) in v.iter() {
        for n in bp.removable_nodes() {
            if p.residue(&n) == j {
                out.add_term(bp.without(&n), c.clone());
            }
        }
    }
    out
}

/// Applies `f_{seq[0]}` first, then `f_{seq[1]}`, and so on, to the empty bipartition.
pub fn apply_sequence<C: Clone + Zero + One>(seq: &[Residue], p: &CrystalParams) -> FockVector<C> {
    let mut v = FockVector::basis(Bipartition::empty());
    for &j in seq {
        v = f_action(&v, j, p);
        if v.is_zero() {
            break;
        }
    }
    v
}

/// `⪯_s`-maximum of the support of `f_{j_1} ⋯ f_{j_n} · ∅`, where the last letter acts first.
pub fn max_of_monomial(word: &[Residue], p: &CrystalParams) -> Result<Bipartition> {
    let rev: Vec<Residue> = word.iter().rev().copied().collect();
    let v: FockVector<i64> = apply_sequence(&rev, p);
    v.max_support(p.charge).cloned().ok_or(Error::ZeroExpansion)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Addable,
    Removable,
}

/// Addable and removable `j`-nodes read in increasing `<_s` order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureWord {
    pub j: Residue,
    pub entries: Vec<(ExtNode, Sign)>,
}

impl SignatureWord {
    pub fn removable(&self) -> Vec<ExtNode> {
        self.nodes(Sign::Removable)
    }

    pub fn addable(&self) -> Vec<ExtNode> {
        self.nodes(Sign::Addable)
    }

    fn nodes(&self, s: Sign) -> Vec<ExtNode> {
        self.entries.iter().filter(|e| e.1 == s).map(|e| e.0).collect()
    }
}

pub fn signature_word(bp: &Bipartition, j: Residue, p: &CrystalParams) -> SignatureWord {
    let mut entries: Vec<(ExtNode, Sign)> = bp
        .addable_nodes()
        .into_iter()
        .filter(|n| p.residue(n) == j)
        .map(|n| (n, Sign::Addable))
        .chain(
            bp.removable_nodes()
                .into_iter()
                .filter(|n| p.residue(n) == j)
                .map(|n| (n, Sign::Removable)),
        )
        .collect();
    entries.sort_by_key(|e| node_key(&e.0, p.charge));
    SignatureWord { j, entries }
}

/// Cancels adjacent (removable, addable) pairs until none remain.
/// The result reads `A…A R…R`: the normal addable then the normal removable nodes.
pub fn reduce_word(w: &SignatureWord) -> SignatureWord {
    let mut stack: Vec<(ExtNode, Sign)> = Vec::with_capacity(w.entries.len());
    for &e in &w.entries {
        if e.1 == Sign::Addable && stack.last().is_some_and(|t| t.1 == Sign::Removable) {
            stack.pop();
        } else {
            stack.push(e);
        }
    }
    SignatureWord { j: w.j, entries: stack }
}

/// Normal removable `j`-nodes in increasing order.
pub fn normal_removable_nodes(bp: &Bipartition, j: Residue, p: &CrystalParams) -> Vec<ExtNode> {
    reduce_word(&signature_word(bp, j, p)).removable()
}

/// Normal addable `j`-nodes in increasing order.
pub fn normal_addable_nodes(bp: &Bipartition, j: Residue, p: &CrystalParams) -> Vec<ExtNode> {
    reduce_word(&signature_word(bp, j, p)).addable()
}

/// The largest normal addable `j`-node.
pub fn good_addable_node(bp: &Bipartition, j: Residue, p: &CrystalParams) -> Option<ExtNode> {
    normal_addable_nodes(bp, j, p).last().copied()
}

/// The smallest normal removable `j`-node.
pub fn good_removable_node(bp: &Bipartition, j: Residue, p: &CrystalParams) -> Option<ExtNode> {
    normal_removable_nodes(bp, j, p).first().copied()
}

/// Removes the `count` greatest normal removable `j`-nodes. `None` if there are fewer.
pub fn remove_greatest_normal(bp: &Bipartition, j: Residue, count: usize, p: &CrystalParams) -> Option<Bipartition> {
    let normal = normal_removable_nodes(bp, j, p);
    if count > normal.len() {
        return None;
    }
    let mut cur = bp.clone();
    for n in &normal[normal.len() - count..] {
        cur = cur.without(n);
    }
    Some(cur)
}

/// Distinct residues carried by the given nodes, ascending.
pub(crate) fn residues_of(nodes: &[ExtNode], p: &CrystalParams) -> Vec<Residue> {
    let set: BTreeSet<Residue> = nodes.iter().map(|n| p.residue(n)).collect();
    set.into_iter().collect()
}

/// Removes good nodes until reaching the empty bipartition, always using the
/// smallest residue that admits one. Returns the residues in removal order
/// (youngest first), or `None` when the peel gets stuck.
pub fn peel(bp: &Bipartition, p: &CrystalParams) -> Option<Vec<Residue>> {
    let mut cur = bp.clone();
    let mut seq = Vec::with_capacity(bp.rank());
    while !cur.is_empty() {
        let step = residues_of(&cur.removable_nodes(), p)
            .into_iter()
            .find_map(|j| good_removable_node(&cur, j, p).map(|g| (j, g)));
        let (j, g) = step?;
        cur = cur.without(&g);
        seq.push(j);
    }
    Some(seq)
}

/// Adds good nodes along `seq`, first entry first. `None` if some step has no good node.
pub fn rebuild(seq: &[Residue], p: &CrystalParams) -> Option<Bipartition> {
    let mut cur = Bipartition::empty();
    for &j in seq {
        let g = good_addable_node(&cur, j, p)?;
        cur = cur.with(&g);
    }
    Some(cur)
}

/// Whether `bp` lies in the connected component of the empty bipartition.
///
/// Good-node removal never leaves a connected component and each component
/// has a single highest-weight vertex, so any peel decides membership.
pub fn is_uglov(bp: &Bipartition, p: &CrystalParams) -> bool {
    peel(bp, p).is_some()
}

/// Uglov bipartitions of each rank `0..=n`, by closure under good-node addition.
pub fn uglov_layers(n: usize, p: &CrystalParams) -> Vec<BTreeSet<Bipartition>> {
    let mut layers = vec![BTreeSet::from([Bipartition::empty()])];
    for _ in 0..n {
        let next: BTreeSet<Bipartition> = layers
            .last()
            .unwrap()
            .iter()
            .flat_map(|bp| good_children(bp, p).into_iter().map(|(_, c)| c))
            .collect();
        layers.push(next);
    }
    layers
}

/// Uglov bipartitions of rank exactly `n`.
pub fn enumerate_uglov(n: usize, p: &CrystalParams) -> BTreeSet<Bipartition> {
    uglov_layers(n, p).pop().unwrap()
}

fn good_children(bp: &Bipartition, p: &CrystalParams) -> Vec<(Residue, Bipartition)> {
    residues_of(&bp.addable_nodes(), p)
        .into_iter()
        .filter_map(|j| good_addable_node(bp, j, p).map(|g| (j, bp.with(&g))))
        .collect()
}

/// Edges `(λ, f̃_j λ, j)` of the crystal graph on Uglov bipartitions of rank below `n`.
pub fn crystal_edges(n: usize, p: &CrystalParams) -> Vec<(Bipartition, Bipartition, Residue)> {
    let layers = uglov_layers(n, p);
    let mut out = Vec::new();
    for layer in layers.iter().take(n) {
        for bp in layer {
            for (j, child) in good_children(bp, p) {
                out.push((bp.clone(), child, j));
            }
        }
    }
    out
}

/// DOT rendering of the crystal graph up to rank `n`.
pub fn crystal_dot(n: usize, p: &CrystalParams) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph crystal {{");
    let _ = writeln!(out, "  // e = {}, s = {}", p.e, p.charge);
    for layer in uglov_layers(n, p) {
        for bp in layer {
            let _ = writeln!(out, "  \"{bp}\";");
        }
    }
    for (from, to, j) in crystal_edges(n, p) {
        let _ = writeln!(out, "  \"{from}\" -> \"{to}\" [label=\"{j}\"];");
    }
    out.push_str("}\n");
    out
}

/// Non-recursive membership test for charges in the fundamental domain.
pub fn is_flotw(bp: &Bipartition, p: &CrystalParams) -> Result<bool> {
    let e = p.e.finite().ok_or(Error::InfiniteE)?;
    if !p.in_fundamental_domain() {
        return Err(Error::NotFundamental(p.charge));
    }
    let s = p.charge;
    let (l1, l2) = (&bp.c1, &bp.c2);
    let d12 = (s.s2 - s.s1) as usize;
    let d21 = (e + s.s1 - s.s2) as usize;
    let rows = l1.len().max(l2.len()) + 1;
    for i in 1..=rows {
        if l1.part(i) < l2.part(i + d12) || l2.part(i) < l1.part(i + d21) {
            return Ok(false);
        }
    }
    let mut by_size: BTreeMap<usize, BTreeSet<Residue>> = BTreeMap::new();
    for c in [1u8, 2] {
        let l = bp.comp(c);
        for a in 1..=l.len() {
            let n = ExtNode::new(a, l.part(a), c);
            by_size.entry(n.b).or_default().insert(p.residue(&n));
        }
    }
    Ok(by_size.values().all(|r| (r.len() as i64) < e))
}

/// Orders bipartitions by `⪯_s`, smallest first.
pub fn sort_uglov(v: &mut [Bipartition], charge: Charge) {
    v.sort_by(|x, y| order_uglov(x, y, charge));
}

/// `⪯_s`-comparison helper returning whether `x ≺_s y`.
pub fn precedes(x: &Bipartition, y: &Bipartition, charge: Charge) -> bool {
    order_uglov(x, y, charge) == Ordering::Less
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntVector;

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    fn p3() -> CrystalParams {
        CrystalParams::new(Modulus::Finite(3), Charge::new(0, 1))
    }

    #[test]
    fn f_on_empty() {
        let v = f_action(&IntVector::basis(Bipartition::empty()), 0, &p3());
        assert_eq!(v.len(), 1);
        assert_eq!(v.coeff(&bp("1,-")), 1);
        let p2 = CrystalParams::new(Modulus::Finite(2), Charge::new(0, 0));
        let v = f_action(&IntVector::basis(Bipartition::empty()), 0, &p2);
        assert_eq!(v.len(), 2);
        assert_eq!(v.coeff(&bp("-,1")), 1);
    }

    #[test]
    fn e_on_small() {
        let v = e_action(&IntVector::basis(bp("1,-")), 0, &p3());
        assert_eq!(v, IntVector::basis(Bipartition::empty()));
        for j in 0..3 {
            assert!(e_action(&IntVector::basis(Bipartition::empty()), j, &p3()).is_zero());
        }
    }

    #[test]
    fn coefficients_accumulate() {
        let p2 = CrystalParams::new(Modulus::Finite(2), Charge::new(0, 0));
        let v: IntVector = apply_sequence(&[0, 0], &p2);
        assert_eq!(v.coeff(&bp("1,1")), 2);
        assert_eq!(v.len(), 1);
    }

    #[test]
    fn word_of_class_example() {
        let p = CrystalParams::new(Modulus::Finite(3), Charge::new(0, 2));
        let w = signature_word(&bp("3.1.1,3.2.2.1.1"), 1, &p);
        let want: Vec<ExtNode> = vec![(5, 1, 2).into(), (3, 1, 1).into(), (3, 2, 2).into(), (1, 3, 2).into()];
        assert_eq!(w.removable(), want);
    }

    #[test]
    fn reduce_cases() {
        let r = |v: &[Sign]| SignatureWord {
            j: 0,
            entries: v.iter().enumerate().map(|(i, s)| (ExtNode::new(i + 1, 1, 1), *s)).collect(),
        };
        use Sign::*;
        assert!(reduce_word(&r(&[Removable, Addable])).entries.is_empty());
        assert_eq!(reduce_word(&r(&[Addable, Removable])).entries.len(), 2);
        assert!(reduce_word(&r(&[Removable, Removable, Addable, Addable])).entries.is_empty());
    }

    #[test]
    fn good_nodes_on_empty() {
        assert_eq!(good_addable_node(&Bipartition::empty(), 0, &p3()), Some((1, 1, 1).into()));
        assert_eq!(good_addable_node(&Bipartition::empty(), 2, &p3()), None);
        assert_eq!(good_removable_node(&bp("1,-"), 0, &p3()), Some((1, 1, 1).into()));
        assert_eq!(good_removable_node(&Bipartition::empty(), 0, &p3()), None);
    }

    #[test]
    fn uglov_examples() {
        assert!(is_uglov(&bp("6.1,2.2"), &p3()));
        let p = CrystalParams::new(Modulus::Finite(3), Charge::new(0, 2));
        assert!(is_uglov(&bp("3.1.1,3.2.2.1.1"), &p));
        assert!(is_uglov(&Bipartition::empty(), &p));
        let q = CrystalParams::new(Modulus::Finite(3), Charge::new(0, 0));
        assert!(!is_uglov(&bp("1.1.1,-"), &q));
        assert!(!is_flotw(&bp("1.1.1,-"), &q).unwrap());
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_uglov(0, &p3()).len(), 1);
        let one: Vec<Bipartition> = enumerate_uglov(1, &p3()).into_iter().collect();
        assert_eq!(one, vec![bp("-,1"), bp("1,-")]);
        assert!(enumerate_uglov(11, &p3()).contains(&bp("6.1,2.2")));
    }

    #[test]
    fn flotw_examples() {
        let p = CrystalParams::new(Modulus::Finite(3), Charge::new(0, 2));
        assert!(is_flotw(&bp("3.1.1,3.2.2.1.1"), &p).unwrap());
        assert!(is_flotw(&bp("3.2.2.1.1,3.3.1"), &p3()).unwrap());
        let bad = CrystalParams::new(Modulus::Finite(3), Charge::new(1, 0));
        assert_eq!(is_flotw(&bp("1,-"), &bad), Err(Error::NotFundamental(Charge::new(1, 0))));
        let inf = CrystalParams::new(Modulus::Infinite, Charge::new(0, 1));
        assert_eq!(is_flotw(&bp("1,-"), &inf), Err(Error::InfiniteE));
    }

    #[test]
    fn monomial_max() {
        assert_eq!(max_of_monomial(&[0], &p3()).unwrap(), bp("1,-"));
        assert_eq!(max_of_monomial(&[2], &p3()), Err(Error::ZeroExpansion));
    }

    #[test]
    fn infinite_e() {
        let p = CrystalParams::new(Modulus::Infinite, Charge::new(0, 1));
        let layer = enumerate_uglov(2, &p);
        assert!(layer.iter().all(|b| is_uglov(b, &p)));
        assert_eq!(peel(&bp("1,1"), &p).map(|s| s.len()), Some(2));
    }

    #[test]
    fn dot_output() {
        let d = crystal_dot(2, &p3());
        assert!(d.starts_with("digraph crystal {"));
        assert!(d.contains("\"-,-\" -> \"1,-\" [label=\"0\"];"));
    }

    #[test]
    fn vector_json() {
        let mut v = IntVector::zero();
        v.add_term(bp("1,-"), 2);
        v.add_term(bp("-,1"), 1);
        let j = serde_json::to_string(&v).unwrap();
        assert_eq!(j, r#"[{"bp":{"c1":[],"c2":[1]},"coeff":1},{"bp":{"c1":[1],"c2":[]},"coeff":2}]"#);
        let back: IntVector = serde_json::from_str(&j).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<IntVector>(r#"[{"bp":{"c1":[1],"c2":[]},"coeff":1},{"bp":{"c1":[],"c2":[]},"coeff":1}]"#).is_err());
    }

    #[test]
    fn bigint_vector() {
        use num_bigint::BigInt;
        let v: crate::BigVector = apply_sequence(&[0, 1, 2], &p3());
        let w: IntVector = apply_sequence(&[0, 1, 2], &p3());
        assert_eq!(v.len(), w.len());
        for (b, c) in w.iter() {
            assert_eq!(v.coeff(b), BigInt::from(*c));
        }
    }
}
