// monomial-coefficient search for the three-argument homotopy exponent
use frobtop::barcomplex::*;
use frobtop::frobenius::{builtin_projective, builtin_sphere, FrobeniusModel};
use num::{BigRational, One, Zero};

type Rat = BigRational;

fn sgn(e: i64) -> Rat {
    if e.rem_euclid(2) == 1 { -Rat::one() } else { Rat::one() }
}

// homotopy with exponent = sum of selected monomials
fn h3(model: &FrobeniusModel, mask: u32, a: &Chain, b: &Chain, g: &Chain) -> Chain {
    let mut out = Chain::zero();
    for (wg, cg) in g.iter() {
        let l = wg.len();
        for (wa, ca) in a.iter() {
            let da = word_degree(model, wa);
            let la = block_degree(model, &wa.letters);
            for (wb, cb) in b.iter() {
                let db = word_degree(model, wb);
                let lb = block_degree(model, &wb.letters);
                for i in 0..l {
                    let ei = model.eps_mul(wg.letters[i], wa.head);
                    if ei.is_zero() { continue; }
                    for j in i + 1..l {
                        let ej = model.eps_mul(wg.letters[j], wb.head);
                        if ej.is_zero() { continue; }
                        let li = letter_degree(model, wg.letters[i]);
                        let lj = letter_degree(model, wg.letters[j]);
                        let mid = block_degree(model, &wg.letters[i + 1..j]);
                        let suf = block_degree(model, &wg.letters[j + 1..]);
                        let pre = block_degree(model, &wg.letters[..i]);
                        let mons = [
                            1i64, da, db, li, lj, mid, suf, pre, la, lb,
                            da * (mid + lb + suf), db * suf, da * suf, db * la,
                            mid * suf, suf * pre, mid * pre,
                        ];
                        let mut e = 0i64;
                        for (k, m) in mons.iter().enumerate() {
                            if mask & (1 << k) != 0 { e += m; }
                        }
                        let s = sgn(e);
                        let mut letters = Vec::new();
                        letters.extend_from_slice(&wg.letters[..i]);
                        letters.extend_from_slice(&wa.letters);
                        letters.extend_from_slice(&wg.letters[i + 1..j]);
                        letters.extend_from_slice(&wb.letters);
                        letters.extend_from_slice(&wg.letters[j + 1..]);
                        out.add(BarWord::new(wg.head, letters), ca * cb * cg * &ei * &ej * &s);
                    }
                }
            }
        }
    }
    out
}

fn check(model: &FrobeniusModel, mask: u32, x2: i64, x3: i64, cm_odd: bool, cutoff: i64) -> bool {
    let kind = ComplexKind::FullHochschild;
    let m = model.m;
    for da in 0..=cutoff {
        for wa in enumerate_basis(model, kind, da) {
            let a = Chain::word(wa);
            for db in 0..=(cutoff - da) {
                for wb in enumerate_basis(model, kind, db) {
                    let b = Chain::word(wb);
                    for dg in 0..=(cutoff - da - db) {
                        for wg in enumerate_basis(model, kind, dg) {
                            let g = Chain::word(wg);
                            let mut lhs = {
                                let mut l = crate_star(model, &g, &crate_bullet(model, &a, &b));
                                l.add_chain(&crate_bullet(model, &crate_star(model, &g, &a), &b), &-Rat::one());
                                let e = (da + m) * (dg + 1 + m);
                                l.add_chain(&crate_bullet(model, &a, &crate_star(model, &g, &b)), &-sgn(e));
                                l
                            };
                            let dg2 = dg; // gamma degree in scope
                            let bh = differential_for(model, kind, &h3(model, mask, &a, &b, &g));
                            // gamma-first passes: gamma free, alpha gets dg+1, beta dg+da+1
                            let mut hd = h3(model, mask, &a, &b, &differential_for(model, kind, &g));
                            hd.add_chain(
                                &h3(model, mask, &differential_for(model, kind, &a), &b, &g),
                                &sgn(dg2 + x2),
                            );
                            hd.add_chain(
                                &h3(model, mask, &a, &differential_for(model, kind, &b), &g),
                                &sgn(dg2 + da + x3),
                            );
                            let cm = if cm_odd { -Rat::one() } else { Rat::one() };
                            let mut rhs = bh;
                            rhs.add_chain(&hd, &cm);
                            lhs.add_chain(&rhs, &-Rat::one());
                            if !lhs.is_zero() { return false; }
                        }
                    }
                }
            }
        }
    }
    true
}

// star and bullet with the frozen conventions
fn crate_star(model: &FrobeniusModel, a: &Chain, b: &Chain) -> Chain {
    let conv = frobtop::conventions::Conventions::default();
    frobtop::stringops::StringOps::new(model, &conv).star(a, b)
}
fn crate_bullet(model: &FrobeniusModel, a: &Chain, b: &Chain) -> Chain {
    let conv = frobtop::conventions::Conventions::default();
    frobtop::stringops::StringOps::new(model, &conv).bullet(a, b)
}

fn main() {
    let s2 = builtin_sphere(2).unwrap();
    let s3 = builtin_sphere(3).unwrap();
    let cp = builtin_projective(2).unwrap();
    let mut found = Vec::new();
    for mask in 0u32..(1 << 17) {
        for x2 in 0..2i64 {
            for x3 in 0..2i64 {
                for cm_odd in [false, true] {
                    if check(&s2, mask, x2, x3, cm_odd, 4)
                        && check(&s3, mask, x2, x3, cm_odd, 4)
                        && check(&cp, mask, x2, x3, cm_odd, 4)
                        && check(&s2, mask, x2, x3, cm_odd, 6)
                        && check(&cp, mask, x2, x3, cm_odd, 6)
                        && check(&s2, mask, x2, x3, cm_odd, 8)
                        && check(&s3, mask, x2, x3, cm_odd, 7)
                        && check(&cp, mask, x2, x3, cm_odd, 7)
                    {
                        println!("bits={:?} x2={x2} x3={x3} cm_odd={cm_odd}",
                            (0..17).filter(|k| mask & (1 << k) != 0).collect::<Vec<_>>());
                        found.push(mask);
                    }
                }
            }
        }
    }
    println!("{} survivors", found.len());
}
