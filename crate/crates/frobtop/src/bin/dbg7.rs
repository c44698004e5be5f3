// Unknown-linear-map solvability for the bracket-vs-B homotopy, over
// identity-shape knobs: pass structure, rhs prefix/shift, sigma.
use std::collections::BTreeMap;

use frobtop::barcomplex::*;
use frobtop::conventions::Conventions;
use frobtop::exactlin::{solve_linear, Rat, SparseMatrix};
use frobtop::frobenius::{builtin_projective, builtin_sphere, FrobeniusModel};
use frobtop::stringops::StringOps;
use num::{One, Zero};

fn sgn(e: i64) -> Rat { if e.rem_euclid(2) == 1 { -Rat::one() } else { Rat::one() } }

fn solvable(model: &FrobeniusModel, shape: (i64, i64, i64, i64, i64), cutoff: i64) -> bool {
    let (sig, p, q, x2_da, x2_c) = shape;
    let conv = Conventions::default();
    let ops = StringOps::new(model, &conv);
    let kind = ComplexKind::FullHochschild;
    let m = model.m;

    let mut pairs = Vec::new();
    for da in 0..=cutoff {
        for wa in enumerate_basis(model, kind, da) {
            for db in 0..=(cutoff - da) {
                for wb in enumerate_basis(model, kind, db) {
                    pairs.push((wa.clone(), wb.clone(), da, db));
                }
            }
        }
    }
    let pindex: BTreeMap<(BarWord, BarWord), usize> = pairs
        .iter()
        .enumerate()
        .map(|(i, (a, b, _, _))| ((a.clone(), b.clone()), i))
        .collect();
    let mut unknowns: BTreeMap<(usize, BarWord), usize> = BTreeMap::new();
    let mut order = Vec::new();
    for (idx, (_, _, da, db)) in pairs.iter().enumerate() {
        let dtot = da + db + 2 - m;
        if dtot < 0 { continue; }
        for w in enumerate_basis(model, kind, dtot) {
            unknowns.insert((idx, w.clone()), order.len());
            order.push((idx, w));
        }
    }
    let mut entries: Vec<((usize, BarWord), usize, Rat)> = Vec::new();
    let mut rhs_map: BTreeMap<(usize, BarWord), Rat> = BTreeMap::new();
    for (idx, (wa, wb, da, db)) in pairs.iter().enumerate() {
        let a = Chain::word(wa.clone());
        let b = Chain::word(wb.clone());
        // rhs of the identity
        let mut rhs = ops.lie_bracket(&a, &b).unwrap();
        rhs.add_chain(&connes_for(model, kind, &ops.bullet(&a, &b)), &-sgn(da + p));
        rhs.add_chain(
            &ops.bullet(&b, &connes_for(model, kind, &a)),
            &-sgn((db + 1 + q) * (da + 1 + q)),
        );
        rhs.add_chain(&ops.bullet(&a, &connes_for(model, kind, &b)), &Rat::one());
        for (v, c) in rhs.iter() {
            rhs_map.insert((idx, v.clone()), c.clone());
        }
        // b o H
        let dtot = da + db + 2 - m;
        if dtot >= 0 {
            for w in enumerate_basis(model, kind, dtot) {
                let col = unknowns[&(idx, w.clone())];
                for (v, c) in differential_for(model, kind, &Chain::word(w.clone())).iter() {
                    entries.push(((idx, v.clone()), col, c.clone()));
                }
            }
        }
        // sigma * H o D with pass structure: (bا,b) slot sign
        // (-1)^{x2_da*da + x2_c}; second slot fixed baseline (-1)^{da}
        let mut dterms: Vec<(BarWord, BarWord, Rat)> = Vec::new();
        let lin = |bits: i64, da: i64, db: i64| -> i64 {
            (bits & 1) + ((bits >> 1) & 1) * da + ((bits >> 2) & 1) * db
        };
        for (v, c) in differential_for(model, kind, &a).iter() {
            dterms.push((v.clone(), wb.clone(), c * &sgn(lin(x2_da, *da, *db))));
        }
        for (v, c) in differential_for(model, kind, &b).iter() {
            dterms.push((wa.clone(), v.clone(), c * &sgn(lin(x2_c, *da, *db))));
        }
        for (ta, tb, c) in dterms {
            let Some(&src) = pindex.get(&(ta, tb)) else { continue };
            let d2 = word_degree(model, &pairs[src].0) + word_degree(model, &pairs[src].1) + 2 - m;
            if d2 < 0 { continue; }
            for w in enumerate_basis(model, kind, d2) {
                let col = unknowns[&(src, w.clone())];
                entries.push(((idx, w.clone()), col, &c * &sgn(sig)));
            }
        }
    }
    let mut row_index: BTreeMap<(usize, BarWord), usize> = BTreeMap::new();
    for ((t, v), _, _) in &entries {
        let next = row_index.len();
        row_index.entry((*t, v.clone())).or_insert(next);
    }
    for (t, v) in rhs_map.keys() {
        let next = row_index.len();
        row_index.entry((*t, v.clone())).or_insert(next);
    }
    let mut mat = SparseMatrix::new(row_index.len(), order.len());
    for ((t, v), col, c) in entries {
        mat.add(row_index[&(t, v)], col, c).unwrap();
    }
    let mut rv = vec![Rat::zero(); row_index.len()];
    for ((t, v), c) in rhs_map {
        rv[row_index[&(t, v)]] = c;
    }
    solve_linear(&mat, &rv).unwrap().is_some()
}

fn main() {
    let s2 = builtin_sphere(2).unwrap();
    let s3 = builtin_sphere(3).unwrap();
    let cp = builtin_projective(2).unwrap();
    let _pq = ();
    for sig in 0..2i64 {
        for pa in 0..8i64 {
            for pb in 0..8i64 {
                let r2 = solvable(&s2, (sig, s2.m, s2.m, pa, pb), 7);
                if !r2 { continue; }
                let r3 = solvable(&s3, (sig, s3.m, s3.m, pa, pb), 7);
                if !r3 { continue; }
                let rc = solvable(&cp, (sig, cp.m, cp.m, pa, pb), 6);
                println!("sig={sig} pa={pa:03b} pb={pb:03b}: s2={r2} s3={r3} cp={rc}");
            }
        }
    }
    println!("done");
}
