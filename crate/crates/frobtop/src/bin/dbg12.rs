// composition-sign scan for the double-swap homotopy identity
use frobtop::barcomplex::*;
use frobtop::conventions::Conventions;
use frobtop::exactlin::Rat;
use frobtop::frobenius::{builtin_projective, builtin_sphere, FrobeniusModel};
use frobtop::homology::{tensor_differential, SpaceId};
use frobtop::stringops::{StringOps, TensorChain};
use num::One;

fn sgn(e: i64) -> Rat { if e.rem_euclid(2) == 1 { -Rat::one() } else { Rat::one() } }

fn check(model: &FrobeniusModel, s1: i64, s2: i64, scm: i64, cutoff: i64) -> bool {
    let conv = Conventions::default();
    let ops = StringOps::new(model, &conv);
    let kind = ComplexKind::ReducedHochschild;
    let id3 = SpaceId::tensor(kind, 3);
    let tau_h = |c: &Chain| ops.tau(&ops.h_swap(c));
    for d in 0..=cutoff {
        for w in enumerate_basis(model, kind, d) {
            let ch = Chain::word(w);
            let phi = |x: &Chain| ops.sigma(&ops.homotopy_cogerst(x));
            let mut lhs = {
                let t = phi(&ch);
                let mut out = TensorChain::zero(3);
                for (f, cc) in t.iter() {
                    for (t2, c2) in tensor_differential(model, &conv, id3, f) {
                        out.add(t2, &c2 * cc);
                    }
                }
                out
            };
            lhs.add_scaled(&phi(&differential_for(model, kind, &ch)), &sgn(scm));
            let th = tau_h(&ch);
            let mut rhs = ops.vee_first_factor(&th);
            let v = ops.vee(&ch);
            let mut th_first = TensorChain::zero(3);
            let mut th_second = TensorChain::zero(3);
            for (f, cc) in v.iter() {
                for (g, cg) in tau_h(&Chain::word(f[0].0.clone())).iter() {
                    th_first.add(vec![g[0].clone(), g[1].clone(), f[1].clone()], cc * cg);
                }
                for (g, cg) in tau_h(&Chain::word(f[1].0.clone())).iter() {
                    th_second.add(vec![f[0].clone(), g[0].clone(), g[1].clone()], cc * cg);
                }
            }
            rhs.add_scaled(&ops.tau_at(&th_first, 1), &sgn(s1));
            rhs.add_scaled(&th_second, &sgn(s2));
            let diff = lhs.project_reduced().sub(&rhs.project_reduced());
            if !diff.is_zero() {
                return false;
            }
        }
    }
    true
}

fn main() {
    let s2m = builtin_sphere(2).unwrap();
    let s3m = builtin_sphere(3).unwrap();
    let cpm = builtin_projective(2).unwrap();
    for s1 in 0..2i64 {
        for s2 in 0..2i64 {
            for scm in 0..2i64 {
                if check(&s2m, s1, s2, scm, 8) && check(&s3m, s1, s2, scm, 8) && check(&cpm, s1, s2, scm, 7) {
                    println!("s1={s1} s2={s2} scm={scm}");
                }
            }
        }
    }
    println!("done");
}
