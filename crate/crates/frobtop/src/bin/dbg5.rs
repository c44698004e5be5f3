// For each triple, determine which (pass2, pass3) in {+1,-1}^2 make
// b(LHS) = sigma * LHS o D hold; print the constraint pattern.
use frobtop::barcomplex::*;
use frobtop::conventions::Conventions;
use frobtop::exactlin::Rat;
use frobtop::frobenius::builtin_sphere;
use frobtop::stringops::StringOps;
use num::One;

fn sgn(e: i64) -> Rat { if e.rem_euclid(2) == 1 { -Rat::one() } else { Rat::one() } }

fn main() {
    let model = builtin_sphere(2).unwrap();
    let conv = Conventions::default();
    let ops = StringOps::new(&model, &conv);
    let kind = ComplexKind::FullHochschild;
    let m = model.m;
    let lhs = |a: &Chain, b: &Chain, g: &Chain| -> Chain {
        let (Some(da), Some(dg)) = (a.degree(&model), g.degree(&model)) else {
            return Chain::zero();
        };
        let mut out = ops.star(g, &ops.bullet(a, b));
        out.add_chain(&ops.bullet(&ops.star(g, a), b), &-Rat::one());
        out.add_chain(&ops.bullet(a, &ops.star(g, b)), &-sgn((da + m) * (dg + 1 + m)));
        out
    };
    for da in 0..=7i64 {
        for wa in enumerate_basis(&model, kind, da) {
            let a = Chain::word(wa.clone());
            for db in 0..=(7 - da) {
                for wb in enumerate_basis(&model, kind, db) {
                    let b = Chain::word(wb.clone());
                    for dg in 0..=(7 - da - db) {
                        for wg in enumerate_basis(&model, kind, dg) {
                            let g = Chain::word(wg.clone());
                            let bl = differential_for(&model, kind, &lhs(&a, &b, &g));
                            let t1 = lhs(&differential_for(&model, kind, &a), &b, &g);
                            let t2 = lhs(&a, &differential_for(&model, kind, &b), &g);
                            let t3 = lhs(&a, &b, &differential_for(&model, kind, &g));
                            if t1.is_zero() && t2.is_zero() && t3.is_zero() && bl.is_zero() {
                                continue;
                            }
                            // gamma-first passes: t3 free, t1 gets (dg+1), t2 gets (dg+da+1)
                            let s1v = if (dg + 1).rem_euclid(2) == 1 { -1i64 } else { 1 };
                            let s2v = if (dg + da + 1).rem_euclid(2) == 1 { -1i64 } else { 1 };
                            let sig: i64 = std::env::args().nth(1).map(|s| s.parse().unwrap()).unwrap_or(1);
                            let mut ok = false;
                            {
                                let mut combo = t1.scaled(&Rat::from_integer((sig * s1v).into()));
                                combo.add_chain(&t2, &Rat::from_integer((sig * s2v).into()));
                                combo.add_chain(&t3, &Rat::from_integer(sig.into()));
                                if bl.sub(&combo).is_zero() {
                                    ok = true;
                                }
                            }
                            if !ok {
                                println!(
                                    "STILL BAD a={:10} b={:10} g={:12} da={} db={} dg={}",
                                    render_word(&model, &wa),
                                    render_word(&model, &wb),
                                    render_word(&model, &wg),
                                    da, db, dg
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}
