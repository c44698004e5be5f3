// Fit the rotation-homotopy identity: find scalars x2..x6 and a map
// theta with D theta + sig theta b = veeB + x2 B_t vee + x3 S+ + x4 S-
//   + x5 tau veeB + x6 tau B_t vee
use std::collections::BTreeMap;

use frobtop::barcomplex::*;
use frobtop::conventions::Conventions;
use frobtop::exactlin::{solve_linear, Rat, SparseMatrix};
use frobtop::frobenius::{builtin_projective, builtin_sphere, FrobeniusModel};
use frobtop::homology::{enumerate_telem, tensor_differential, SpaceId};
use frobtop::stringops::{StringOps, TensorChain};
use num::{One, Zero};

fn sgn(e: i64) -> Rat { if e.rem_euclid(2) == 1 { -Rat::one() } else { Rat::one() } }

fn fit(model: &FrobeniusModel, sig: i64, cutoff: i64, fixed: Option<[i64; 5]>) -> Option<Vec<Rat>> {
    let conv = Conventions::default();
    let ops = StringOps::new(model, &conv);
    let kind = ComplexKind::ReducedHochschild;
    let id2 = SpaceId::tensor(kind, 2);
    let m = model.m;

    let mut words = Vec::new();
    for d in 0..=cutoff {
        words.extend(enumerate_basis(model, kind, d));
    }
    let windex: BTreeMap<BarWord, usize> =
        words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let mut unknowns: BTreeMap<(usize, Vec<CyclicWord>), usize> = BTreeMap::new();
    let mut order = Vec::new();
    for (i, w) in words.iter().enumerate() {
        let dt = word_degree(model, w) + 3 - m;
        if dt < 2 { continue; }
        for e in enumerate_telem(model, id2, dt) {
            unknowns.insert((i, e.clone()), order.len());
            order.push(());
        }
    }
    let nx = 5; // scalar unknowns x2..x6
    let x_base = order.len();

    let mut entries: Vec<((usize, Vec<CyclicWord>), usize, Rat)> = Vec::new();
    let mut rhs_map: BTreeMap<(usize, Vec<CyclicWord>), Rat> = BTreeMap::new();
    for (i, w) in words.iter().enumerate() {
        let c = Chain::word(w.clone());
        let dw = word_degree(model, w);
        // candidate terms
        let vee_b = ops.vee(&connes_for(model, kind, &c));
        let v = ops.vee(&c);
        let mut bt = TensorChain::zero(2);
        for (f, cc) in v.iter() {
            let d1 = word_degree(model, &f[0].0);
            for (w2, c2) in connes_for(model, kind, &Chain::word(f[0].0.clone())).iter() {
                bt.add(vec![(w2.clone(), 0), f[1].clone()], cc * c2);
            }
            for (w2, c2) in connes_for(model, kind, &Chain::word(f[1].0.clone())).iter() {
                bt.add(vec![f[0].clone(), (w2.clone(), 0)], cc * c2 * &sgn(d1));
            }
        }
        let bt = bt.project_reduced();
        let h = ops.h_swap(&c);
        let s_plus = {
            let mut t = h.clone();
            t.add_scaled(&ops.tau(&h), &Rat::one());
            t
        };
        let s_minus = h.sub(&ops.tau(&h));
        let tau_veeb = ops.tau(&vee_b);
        let tau_bt = ops.tau(&bt);
        // rhs = vee_b stays on the right; x-terms move left (negated)
        for (f, cc) in vee_b.iter() {
            rhs_map.insert((i, f.clone()), cc.clone());
        }
        match fixed {
            None => {
                for (k, term) in [&bt, &s_plus, &s_minus, &tau_veeb, &tau_bt].iter().enumerate() {
                    for (f, cc) in term.iter() {
                        entries.push(((i, f.clone()), x_base + k, -cc.clone()));
                    }
                }
            }
            Some(xs) => {
                // move fixed terms to the rhs directly
                for (k, term) in [&bt, &s_plus, &s_minus, &tau_veeb, &tau_bt].iter().enumerate() {
                    if xs[k] == 0 { continue; }
                    for (f, cc) in term.iter() {
                        let slot = rhs_map.entry((i, f.clone())).or_insert_with(Rat::zero);
                        *slot += cc * &Rat::from_integer(xs[k].into());
                    }
                }
                rhs_map.retain(|_, v| !v.is_zero());
            }
        }
        // D theta
        let dt = dw + 3 - m;
        if dt >= 2 {
            for e in enumerate_telem(model, id2, dt) {
                let col = unknowns[&(i, e.clone())];
                for (t2, c2) in tensor_differential(model, &conv, id2, &e) {
                    entries.push(((i, t2), col, c2));
                }
            }
        }
        // sig theta b
        for (w2, c2) in differential_for(model, kind, &c).iter() {
            let Some(&src) = windex.get(w2) else { continue };
            let dt2 = word_degree(model, w2) + 3 - m;
            if dt2 < 2 { continue; }
            for e in enumerate_telem(model, id2, dt2) {
                let col = unknowns[&(src, e.clone())];
                entries.push(((i, e), col, c2 * &sgn(sig)));
            }
        }
    }
    let mut rows: BTreeMap<(usize, Vec<CyclicWord>), usize> = BTreeMap::new();
    for (k, _, _) in &entries {
        let next = rows.len();
        rows.entry(k.clone()).or_insert(next);
    }
    for k in rhs_map.keys() {
        let next = rows.len();
        rows.entry(k.clone()).or_insert(next);
    }
    let mut mat = SparseMatrix::new(rows.len(), x_base + nx);
    for (k, col, cc) in entries {
        mat.add(rows[&k], col, cc).unwrap();
    }
    let mut rv = vec![Rat::zero(); rows.len()];
    for (k, cc) in rhs_map {
        rv[rows[&k]] = cc;
    }
    solve_linear(&mat, &rv).unwrap().map(|x| x[x_base..].to_vec())
}

fn main() {
    let models = [
        ("sphere2", builtin_sphere(2).unwrap(), 8i64),
        ("sphere3", builtin_sphere(3).unwrap(), 8),
        ("cp2", builtin_projective(2).unwrap(), 7),
    ];
    for (name, model, cutoff) in &models {
        for sig in 0..2 {
            for x2 in -2i64..=2 {
                for x3 in -2i64..=2 {
                    for x4 in [-1i64, 0, 1] {
                        let xs = [x2, x3, x4, 0, 0];
                        if fit(model, sig, *cutoff, Some(xs)).is_some() {
                            println!("{name} sig={sig} feasible xs={xs:?}");
                        }
                    }
                }
            }
        }
    }
}
