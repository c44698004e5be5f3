use frobtop::barcomplex::*;
use frobtop::conventions::{par, Conventions};
use frobtop::frobenius::builtin_sphere;
use frobtop::stringops::*;

fn main() {
    let s = builtin_sphere(2).unwrap();
    let mut conv = Conventions::default();
    conv.assoc3_chainmap = par(0, 0);
    let ops = StringOps::new(&s, &conv);
    let w = |t: &str| Chain::word(parse_word(&s, t).unwrap());
    let kind = ComplexKind::FullHochschild;
    // enumerate small triples and print mismatch pattern
    let mut shown = 0;
    for da in 0..=5i64 {
        for wa in enumerate_basis(&s, kind, da) {
            for db in 0..=(5 - da) {
                for wb in enumerate_basis(&s, kind, db) {
                    for dc in 0..=(5 - da - db) {
                        for wc in enumerate_basis(&s, kind, dc) {
                            let (a, b, g) = (Chain::word(wa.clone()), Chain::word(wb.clone()), Chain::word(wc.clone()));
                            let sft = 2i64; // bracket shift m
                            let lhs = {
                                let mut l = ops.star(&g, &ops.bullet(&a, &b));
                                l.add_chain(&ops.bullet(&ops.star(&g, &a), &b), &-num::BigRational::from_integer(1.into()));
                                let e = (da + sft) * (dc + 1 + sft);
                                let sgn = if e.rem_euclid(2) == 1 { -num::BigRational::from_integer(1.into()) } else { num::BigRational::from_integer(1.into()) };
                                l.add_chain(&ops.bullet(&a, &ops.star(&g, &b)), &-sgn);
                                l
                            };
                            let bh = differential_for(&s, kind, &ops.homotopy_assoc3(&a, &b, &g).unwrap());
                            let mut hd = ops.homotopy_assoc3(&differential_for(&s, kind, &a), &b, &g).unwrap();
                            let s1 = if da.rem_euclid(2) == 1 { -num::BigRational::from_integer(1.into()) } else { num::BigRational::from_integer(1.into()) };
                            hd.add_chain(&ops.homotopy_assoc3(&a, &differential_for(&s, kind, &b), &g).unwrap(), &s1);
                            let s2 = if (da + db).rem_euclid(2) == 1 { -num::BigRational::from_integer(1.into()) } else { num::BigRational::from_integer(1.into()) };
                            hd.add_chain(&ops.homotopy_assoc3(&a, &b, &differential_for(&s, kind, &g)).unwrap(), &s2);
                            let mut rhs = bh;
                            rhs.add_chain(&hd, &num::BigRational::from_integer((-1i64).into()));
                            let diff = lhs.sub(&rhs);
                            if !diff.is_zero() && shown < 8 {
                                println!("a={} b={} g={} : lhs={} rhs={} diff={}",
                                    render_word(&s, &wa), render_word(&s, &wb), render_word(&s, &wc),
                                    render_chain(&s, &lhs), render_chain(&s, &rhs), render_chain(&s, &diff));
                                shown += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    let _ = w;
    if shown == 0 { println!("all pass at cutoff 5 with cm=(0,0)"); }
}
