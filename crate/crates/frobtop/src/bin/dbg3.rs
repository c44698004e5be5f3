// Solve for the three-argument homotopy as an unknown linear map on a
// degree block, then print its values on elementary triples.
use std::collections::BTreeMap;

use frobtop::barcomplex::*;
use frobtop::conventions::Conventions;
use frobtop::exactlin::{solve_linear, Rat, SparseMatrix};
use frobtop::frobenius::builtin_sphere;
use frobtop::stringops::StringOps;
use num::{One, Zero};

fn sgn(e: i64) -> Rat { if e.rem_euclid(2) == 1 { -Rat::one() } else { Rat::one() } }

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let sigma_odd: bool = args.get(1).map(|s| s == "1").unwrap_or(true);
    let pp: i64 = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(0); // P = pp0 + pp1*m encoded 0..3
    let qq: i64 = args.get(3).map(|s| s.parse().unwrap()).unwrap_or(0);
    let x2: i64 = args.get(4).map(|s| s.parse().unwrap()).unwrap_or(0);
    let x3: i64 = args.get(5).map(|s| s.parse().unwrap()).unwrap_or(0);
    let quiet = args.get(6).map(|s| s == "q").unwrap_or(false);
    let model = builtin_sphere(2).unwrap();
    let conv = Conventions::default();
    let ops_raw = StringOps::new(&model, &conv);
    let twist: i64 = std::env::var("STAR_TWIST").map(|v| v.parse().unwrap()).unwrap_or(0);
    let kind = ComplexKind::FullHochschild;
    let m = model.m;
    let cutoff: i64 = args.get(7).map(|s| s.parse().unwrap()).unwrap_or(6);
    let dec = |v: i64, m: i64| (v & 1) + (v >> 1) * m;

    // unknowns: H[(ta,tb,tg) -> w] for all triples with total degree <= cutoff,
    // w of degree dsum + 2 - 2m
    let mut triples = Vec::new();
    for da in 0..=cutoff {
        for wa in enumerate_basis(&model, kind, da) {
            for db in 0..=(cutoff - da) {
                for wb in enumerate_basis(&model, kind, db) {
                    for dg in 0..=(cutoff - da - db) {
                        for wg in enumerate_basis(&model, kind, dg) {
                            triples.push((wa.clone(), wb.clone(), wg.clone(), da, db, dg));
                        }
                    }
                }
            }
        }
    }
    let mut unknowns: BTreeMap<(usize, BarWord), usize> = BTreeMap::new();
    let mut unknown_list = Vec::new();
    for (t_idx, (_, _, _, da, db, dg)) in triples.iter().enumerate() {
        let dtot = da + db + dg + 2 - 2 * m;
        if dtot < 0 { continue; }
        for w in enumerate_basis(&model, kind, dtot) {
            let key = (t_idx, w.clone());
            unknowns.insert(key.clone(), unknown_list.len());
            unknown_list.push(key);
        }
    }
    if !quiet { println!("{} triples, {} unknowns", triples.len(), unknown_list.len()); }

    // equations: for each triple, for each word of degree dtot-1:
    //   sum_w b_{v,w} H[w,T] + sigma * sum_{T'} H[v,T'] D[T',T] = LHS_{v,T}
    // D on triples: ba x b x g, (-1)^{da} a x bb x g, (-1)^{da+db} a x b x bg
    let sigma = if sigma_odd { -Rat::one() } else { Rat::one() };
    let mut rows: BTreeMap<(usize, BarWord), usize> = BTreeMap::new();
    let mut entries: Vec<((usize, BarWord), usize, Rat)> = Vec::new();
    let mut rhs_map: BTreeMap<(usize, BarWord), Rat> = BTreeMap::new();
    let tindex: BTreeMap<(BarWord, BarWord, BarWord), usize> = triples
        .iter()
        .enumerate()
        .map(|(i, (a, b, g, _, _, _))| ((a.clone(), b.clone(), g.clone()), i))
        .collect();

    for (t_idx, (wa, wb, wg, da, db, dg)) in triples.iter().enumerate() {
        let a = Chain::word(wa.clone());
        let b = Chain::word(wb.clone());
        let g = Chain::word(wg.clone());
        // LHS
        // qq bits: 0 -> m-shift on term3; 1,2,3 -> quadratic cross terms v1,v2,v3
        let sshift = if qq & 1 != 0 { m } else { 0 };
        let v1 = (pp >> 0) & 1;
        let v2 = (pp >> 1) & 1;
        let v3 = (pp >> 2) & 1;
        let star = |x: &Chain, y: &Chain| -> Chain {
            let dy = y.degree(&model).unwrap_or(0);
            ops_raw.star(x, y).scaled(&sgn(twist * (dy + 1)))
        };
        let mut lhs = star(&g, &ops_raw.bullet(&a, &b))
            .scaled(&sgn(v1 * da * db));
        lhs.add_chain(&ops_raw.bullet(&star(&g, &a), &b), &-sgn(v2 * da * dg));
        lhs.add_chain(
            &ops_raw.bullet(&a, &star(&g, &b)),
            &-sgn((da + sshift) * (dg + 1 + sshift) + v3 * db * dg),
        );
        for (v, c) in lhs.iter() {
            rhs_map.insert((t_idx, v.clone()), c.clone());
        }
        // b o H: for each unknown H[w, T], b(w) contributes
        let dtot = da + db + dg + 2 - 2 * m;
        if dtot >= 0 {
            for w in enumerate_basis(&model, kind, dtot) {
                let col = unknowns[&(t_idx, w.clone())];
                let bw = differential_for(&model, kind, &Chain::word(w.clone()));
                for (v, c) in bw.iter() {
                    entries.push(((t_idx, v.clone()), col, c.clone()));
                }
            }
        }
        // sigma * H o D
        // passes in the gamma-first reading: the gamma slot is free, the
        // alpha slot passes gamma, the beta slot passes gamma and alpha
        let mut dterms: Vec<(BarWord, BarWord, BarWord, Rat)> = Vec::new();
        for (v, c) in differential_for(&model, kind, &g).iter() {
            dterms.push((wa.clone(), wb.clone(), v.clone(), c.clone()));
        }
        for (v, c) in differential_for(&model, kind, &a).iter() {
            dterms.push((v.clone(), wb.clone(), wg.clone(), c * &sgn(dg + x2)));
        }
        for (v, c) in differential_for(&model, kind, &b).iter() {
            dterms.push((wa.clone(), v.clone(), wg.clone(), c * &sgn(dg + da + x3)));
        }
        for (ta, tb, tg, c) in dterms {
            let Some(&src) = tindex.get(&(ta, tb, tg)) else { continue };
            let d2 = word_degree(&model, &triples[src].0)
                + word_degree(&model, &triples[src].1)
                + word_degree(&model, &triples[src].2)
                + 2 - 2 * m;
            if d2 < 0 { continue; }
            for w in enumerate_basis(&model, kind, d2) {
                let col = unknowns[&(src, w.clone())];
                entries.push(((t_idx, w.clone()), col, &c * &sigma));
            }
        }
        let _ = &mut rows;
    }
    // assemble
    let mut row_index: BTreeMap<(usize, BarWord), usize> = BTreeMap::new();
    for ((t, v), _, _) in &entries {
        let next = row_index.len();
        row_index.entry((*t, v.clone())).or_insert(next);
    }
    for (t, v) in rhs_map.keys() {
        let next = row_index.len();
        row_index.entry((*t, v.clone())).or_insert(next);
    }
    let nrows = row_index.len();
    let ncols = unknown_list.len();
    let mut mat = SparseMatrix::new(nrows, ncols);
    for ((t, v), col, c) in entries {
        let r = row_index[&(t, v)];
        mat.add(r, col, c).unwrap();
    }
    let mut rhs = vec![Rat::zero(); nrows];
    for ((t, v), c) in rhs_map {
        rhs[row_index[&(t, v)]] = c;
    }
    if !quiet { println!("system {} x {}", nrows, ncols); }
    match solve_linear(&mat, &rhs).unwrap() {
        None => {
            println!("NO sigma_odd={sigma_odd} P={pp} Q={qq} x2={x2} x3={x3}");
            // certificate: left null vector of the matrix pairing nontrivially with rhs
            let mut tm = SparseMatrix::new(ncols, nrows);
            for (r, c, v) in mat.entries() {
                tm.add(c, r, v.clone()).unwrap();
            }
            let lkernel = frobtop::exactlin::kernel_basis(&tm);
            let row_names: BTreeMap<usize, (usize, BarWord)> =
                row_index.iter().map(|(k, &v)| (v, k.clone())).collect();
            for y in lkernel.vectors() {
                let mut pair = Rat::zero();
                for (i, c) in y.iter().enumerate() {
                    pair += c * &rhs[i];
                }
                if !pair.is_zero() {
                    println!("certificate (pairs to {pair}):");
                    for (i, c) in y.iter().enumerate() {
                        if !c.is_zero() {
                            let (t, v) = &row_names[&i];
                            let (wa, wb, wg, _, _, _) = &triples[*t];
                            println!(
                                "  {} x eq[triple=({}, {}, {}), word={}] rhs={}",
                                c,
                                render_word(&model, wa),
                                render_word(&model, wb),
                                render_word(&model, wg),
                                render_word(&model, v),
                                rhs[i]
                            );
                            for (r2, c2, v2) in mat.entries() {
                                if r2 == i {
                                    let (ut, uw) = &unknown_list[c2];
                                    let (ua, ub, ug, _, _, _) = &triples[*ut];
                                    println!(
                                        "      M: {} * H[({}, {}, {}) -> {}]",
                                        v2,
                                        render_word(&model, ua),
                                        render_word(&model, ub),
                                        render_word(&model, ug),
                                        render_word(&model, uw)
                                    );
                                }
                            }
                        }
                    }
                    break;
                }
            }
        }
        Some(x) => {
            println!("SOLUTION sigma_odd={sigma_odd} P={pp} Q={qq} x2={x2} x3={x3}");
            if quiet { return; }
            println!("nonzero values on elementary triples:");
            for (k, (t_idx, w)) in unknown_list.iter().enumerate() {
                if !x[k].is_zero() {
                    let (wa, wb, wg, _, _, _) = &triples[*t_idx];
                    println!(
                        "  h({}, {}, {}) ∋ {} {}",
                        render_word(&model, wa),
                        render_word(&model, wb),
                        render_word(&model, wg),
                        x[k],
                        render_word(&model, w)
                    );
                }
            }
        }
    }
}
