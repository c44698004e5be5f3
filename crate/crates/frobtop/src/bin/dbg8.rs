// Monomial search for the rotation-insertion homotopy signs under the
// corrected bracket-vs-B identity.
use frobtop::barcomplex::*;
use frobtop::conventions::Conventions;
use frobtop::exactlin::Rat;
use frobtop::frobenius::{builtin_projective, builtin_sphere, FrobeniusModel};
use frobtop::stringops::StringOps;
use num::{One, Zero};

fn sgn(e: i64) -> Rat { if e.rem_euclid(2) == 1 { -Rat::one() } else { Rat::one() } }

// one summand: rotate `a` at letter i, insert `b` at letter j>i
fn summand(model: &FrobeniusModel, mask: u32, extra: i64, a: &Chain, b: &Chain) -> Chain {
    let mut out = Chain::zero();
    for (wa, ca) in a.iter() {
        let eps_head = model.eps(wa.head).clone();
        if eps_head.is_zero() { continue; }
        let n = wa.len();
        let da = word_degree(model, wa);
        for (wb, cb) in b.iter() {
            let db = word_degree(model, wb);
            for i in 0..n {
                for j in i + 1..n {
                    let eps_j = model.eps_mul(wa.letters[j], wb.head);
                    if eps_j.is_zero() { continue; }
                    let pre = block_degree(model, &wa.letters[..i]);
                    let tail = block_degree(model, &wa.letters[j + 1..]);
                    let rot = block_degree(model, &wa.letters[i..]) * pre;
                    let mid = block_degree(model, &wa.letters[i + 1..j]);
                    let suft = tail + pre;
                    let mons = [
                        1i64, da, db, da * db, rot, mid, suft,
                        tail, pre, db * suft, db * mid, db * pre, db * tail,
                    ];
                    let mut e = extra;
                    for (k, mv) in mons.iter().enumerate() {
                        if mask & (1 << k) != 0 { e += mv; }
                    }
                    let s = sgn(e);
                    let mut letters = Vec::new();
                    letters.extend_from_slice(&wa.letters[i + 1..j]);
                    letters.extend_from_slice(&wb.letters);
                    letters.extend_from_slice(&wa.letters[j + 1..]);
                    letters.extend_from_slice(&wa.letters[..i]);
                    out.add(BarWord::new(wa.letters[i], letters), ca * cb * &eps_head * &eps_j * &s);
                }
            }
        }
    }
    out
}

fn check(model: &FrobeniusModel, mask: u32, psi_extra_bits: u32, cutoff: i64) -> bool {
    let conv = Conventions::default();
    let ops = StringOps::new(model, &conv);
    let kind = ComplexKind::FullHochschild;
    let m = model.m;
    for da in 0..=cutoff {
        for wa in enumerate_basis(model, kind, da) {
            let a = Chain::word(wa);
            for db in 0..=(cutoff - da) {
                for wb in enumerate_basis(model, kind, db) {
                    let b = Chain::word(wb);
                    let h = |x: &Chain, y: &Chain| -> Chain {
                        let dx = x.degree(model).unwrap_or(0);
                        let dy = y.degree(model).unwrap_or(0);
                        let psi_mons = [1i64, dx, dy, dx * dy];
                        let mut pe = 0i64;
                        for (k, mv) in psi_mons.iter().enumerate() {
                            if psi_extra_bits & (1 << k) != 0 { pe += mv; }
                        }
                        let mut out = summand(model, mask, 0, x, y);
                        out.add_chain(&summand(model, mask, pe, y, x), &Rat::one());
                        out
                    };
                    let bh = differential_for(model, kind, &h(&a, &b));
                    let mut hd = h(&differential_for(model, kind, &a), &b);
                    hd.add_chain(&h(&a, &differential_for(model, kind, &b)), &sgn(da + 1));
                    let mut lhs = bh;
                    lhs.add_chain(&hd, &Rat::one());

                    let mut rhs = ops.lie_bracket(&a, &b).unwrap();
                    rhs.add_chain(&connes_for(model, kind, &ops.bullet(&a, &b)), &-sgn(da + m));
                    rhs.add_chain(
                        &ops.bullet(&b, &connes_for(model, kind, &a)),
                        &-sgn((db + 1 + m) * (da + 1 + m)),
                    );
                    rhs.add_chain(&ops.bullet(&a, &connes_for(model, kind, &b)), &Rat::one());
                    if !lhs.sub(&rhs).is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn main() {
    let s2 = builtin_sphere(2).unwrap();
    let s3 = builtin_sphere(3).unwrap();
    let cp = builtin_projective(2).unwrap();
    let mut n = 0;
    for mask in 0u32..(1 << 13) {
        for pe in 0u32..(1 << 4) {
            if check(&s2, mask, pe, 5)
                && check(&s3, mask, pe, 5)
                && check(&cp, mask, pe, 5)
                && check(&s2, mask, pe, 7)
                && check(&cp, mask, pe, 7)
                && check(&s2, mask, pe, 8)
                && check(&s3, mask, pe, 8)
                && check(&cp, mask, pe, 8)
            {
                println!(
                    "phi bits={:?} psi extra bits={:?}",
                    (0..13).filter(|k| mask & (1 << k) != 0).collect::<Vec<_>>(),
                    (0..4).filter(|k| pe & (1 << k) != 0).collect::<Vec<_>>()
                );
                n += 1;
            }
        }
    }
    println!("{n} survivors");
}
