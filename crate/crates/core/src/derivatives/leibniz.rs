use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::exactalg::RatFunc;
use crate::heckeaff::{central_character_decomp, induce, induce_levi, AffineModule, CentralCharacter};
use crate::symgroup::coset::validate_composition;

use super::affine::{bz, bz_multi};
use super::report::{DerivativeReport, Summand};

/// `Some(j)` when `r = q^j`.
pub fn is_q_power(r: &RatFunc, q: &RatFunc) -> Option<i32> {
    match q.as_constant() {
        None => {
            let j = r.numerator().degree()? as i32 - r.denominator().degree()? as i32;
            (q.pow(j)? == *r).then_some(j)
        }
        Some(_) => (-128..=128).find(|&j| q.pow(j).as_ref() == Some(r)),
    }
}

/// Refuse factor lists in which eigenvalues of two different factors
/// differ by a power of `q`: their blocks would not be separated.
pub fn check_block_separation(factors: &[AffineModule]) -> Result<()> {
    let spectra: Vec<Vec<RatFunc>> = factors
        .iter()
        .map(|f| Ok(central_character_decomp(f)?.into_iter().flat_map(|(c, _)| c.merged()).collect()))
        .collect::<Result<_>>()?;
    for a in 0..factors.len() {
        for b in a + 1..factors.len() {
            let q = factors[a].q();
            for x in &spectra[a] {
                for y in &spectra[b] {
                    let ratio = x.div(y).ok_or(Error::ZeroEntry("eigenvalue".into()))?;
                    if let Some(j) = is_q_power(&ratio, q) {
                        return Err(Error::IndistinguishableBlocks(format!(
                            "factor {} eigenvalue {x} is q^{j} times factor {} eigenvalue {y}",
                            a + 1,
                            b + 1
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

type Inventory = BTreeMap<CentralCharacter, usize>;

fn add_inventory(acc: &mut Inventory, m: &AffineModule) -> Result<()> {
    for (c, d) in central_character_decomp(m)? {
        *acc.entry(c).or_default() += d;
    }
    Ok(())
}

fn add_traces(acc: &mut Option<Vec<RatFunc>>, m: &AffineModule) -> Result<()> {
    let t = m.trace_signature()?;
    *acc = Some(match acc.take() {
        None => t,
        Some(a) => a.iter().zip(&t).map(|(x, y)| x.add(y)).collect(),
    });
    Ok(())
}

fn label(c: &CentralCharacter) -> String {
    if c.blocks.iter().all(Vec::is_empty) {
        "()".into()
    } else {
        c.to_string()
    }
}

fn summands(inv: &Inventory) -> Vec<Summand> {
    inv.iter().map(|(c, &d)| Summand::new(label(c), 1, d)).collect()
}

/// Tuples `𝐢` with `0 ≤ i_k ≤ n_k` and `Σ i_k = i`, in lexicographic order.
pub fn index_tuples(comp: &[usize], i: usize) -> Vec<Vec<usize>> {
    fn go(comp: &[usize], left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        match comp.split_first() {
            None => {
                if left == 0 {
                    out.push(cur.clone());
                }
            }
            Some((&n, rest)) => {
                for k in 0..=n.min(left) {
                    cur.push(k);
                    go(rest, left - k, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(comp, i, &mut Vec::new(), &mut out);
    out
}

fn describe_input(comp: &[usize], factors: &[AffineModule]) -> Result<String> {
    let parts: Vec<String> = factors
        .iter()
        .map(|f| {
            let inv = central_character_decomp(f)?;
            let cc: Vec<String> = inv.iter().map(|(c, d)| format!("{}^{d}", label(c))).collect();
            Ok(format!("dim {} [{}]", f.dim(), cc.join(" ")))
        })
        .collect::<Result<_>>()?;
    Ok(format!("comp {comp:?}; {}", parts.join("; ")))
}

fn validate(comp: &[usize], factors: &[AffineModule], i: usize) -> Result<usize> {
    let n: usize = comp.iter().sum();
    validate_composition(n, comp)?;
    if factors.len() != comp.len() {
        return Err(Error::RankMismatch { expected: comp.len(), found: factors.len() });
    }
    for (f, &c) in factors.iter().zip(comp) {
        if f.rank() != c || !f.is_full() {
            return Err(Error::RankMismatch { expected: c, found: f.rank() });
        }
    }
    if i > n {
        return Err(Error::IndexOutOfRange { index: i as i64, bound: n });
    }
    Ok(n)
}

/// Compare `BZ_i(ind σ)` with `⊕_𝐢 ind BZ_𝐢(σ)` by block inventories and
/// trace signatures.
pub fn leibniz_verify(comp: &[usize], factors: &[AffineModule], i: usize) -> Result<DerivativeReport> {
    let n = validate(comp, factors, i)?;
    check_block_separation(factors)?;
    let lhs = bz(&induce(comp, factors)?, i)?;
    let sigma = AffineModule::outer_all(factors)?;
    let mut rhs_inv = Inventory::new();
    let mut rhs_traces = None;
    let mut rhs_dim = 0;
    let mut checks = Certificate::default();
    checks.record("lhs relations", lhs.relation_certificate().all_passed());
    for idx in index_tuples(comp, i) {
        let piece = bz_multi(&sigma, &idx)?;
        if piece.dim() == 0 {
            continue;
        }
        let piece = if n == i { piece } else { induce_levi(&piece, &[n - i])? };
        checks.record(format!("rhs relations {idx:?}"), piece.relation_certificate().all_passed());
        rhs_dim += piece.dim();
        add_inventory(&mut rhs_inv, &piece)?;
        add_traces(&mut rhs_traces, &piece)?;
    }
    checks.record("dimensions", lhs.dim() == rhs_dim);
    if lhs.dim() > 0 && rhs_dim > 0 {
        checks.record("trace signature", Some(lhs.trace_signature()?) == rhs_traces);
    }
    let mut lhs_inv = Inventory::new();
    add_inventory(&mut lhs_inv, &lhs)?;
    Ok(DerivativeReport::new(
        describe_input(comp, factors)?,
        alloc::vec![i],
        lhs.dim(),
        summands(&lhs_inv),
        summands(&rhs_inv),
        checks,
    ))
}

/// Compare the restriction of `ind σ` to `H_{n−i} ⊗ H_i` with
/// `⊕_𝐢 ind (twisted res σ)`, by block inventories and trace signatures.
pub fn mackey_verify(comp: &[usize], factors: &[AffineModule], i: usize) -> Result<DerivativeReport> {
    let n = validate(comp, factors, i)?;
    let target: Vec<usize> = [n - i, i].into_iter().filter(|&c| c > 0).collect();
    let lhs = induce(comp, factors)?.restrict_to_levi(&target)?;
    let mut rhs_inv = Inventory::new();
    let mut rhs_traces = None;
    let mut rhs_dim = 0;
    let mut checks = Certificate::default();
    for idx in index_tuples(comp, i) {
        // Restrict each factor to (n_k − i_k, i_k), then gather the left
        // pieces before the right ones.
        let mut pieces = Vec::new();
        let mut lefts = Vec::new();
        let mut rights = Vec::new();
        for ((f, &c), &k) in factors.iter().zip(comp).zip(&idx) {
            let sub: Vec<usize> = [c - k, k].into_iter().filter(|&x| x > 0).collect();
            pieces.push(f.restrict_to_levi(&sub)?);
            let base = lefts.len() + rights.len();
            match (c - k > 0, k > 0) {
                (true, true) => {
                    lefts.push(base);
                    rights.push(base + 1);
                }
                (true, false) => lefts.push(base),
                (false, true) => rights.push(base),
                (false, false) => {}
            }
        }
        let mut order = lefts;
        order.extend(rights);
        let twisted = AffineModule::outer_all(&pieces)?.reorder_blocks(&order)?;
        let piece = induce_levi(&twisted, &target)?;
        checks.record(format!("rhs relations {idx:?}"), piece.relation_certificate().all_passed());
        rhs_dim += piece.dim();
        add_inventory(&mut rhs_inv, &piece)?;
        add_traces(&mut rhs_traces, &piece)?;
    }
    checks.record("dimensions", lhs.dim() == rhs_dim);
    checks.record("trace signature", Some(lhs.trace_signature()?) == rhs_traces);
    let mut lhs_inv = Inventory::new();
    add_inventory(&mut lhs_inv, &lhs)?;
    Ok(DerivativeReport::new(
        describe_input(comp, factors)?,
        alloc::vec![n - i, i],
        lhs.dim(),
        summands(&lhs_inv),
        summands(&rhs_inv),
        checks,
    ))
}
