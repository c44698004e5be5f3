// joint search over the residual pass/tau knobs against the full chain
// suite at cutoff 7
use frobtop::conventions::{par, Conventions, Par};
use frobtop::frobenius::{builtin_projective, builtin_sphere};
use frobtop::verify::{run_chain_suite, SuiteConfig};

const PARS: [Par; 4] = [par(0, 0), par(1, 0), par(0, 1), par(1, 1)];

fn main() {
    let s2 = builtin_sphere(2).unwrap();
    let s3 = builtin_sphere(3).unwrap();
    let cp = builtin_projective(2).unwrap();
    for oppass in PARS {
        for opc in PARS {
            for (ts, tc) in [(par(0, 1), par(1, 0)), (par(0, 0), par(1, 1))] {
                for hcm in PARS {
                    for sym in PARS {
                        let mut conv = Conventions::default();
                        conv.oppass = oppass;
                        conv.oppass_const = opc;
                        conv.tau_shift = ts;
                        conv.tau_const = tc;
                        conv.h_chainmap = hcm;
                        conv.cobracket_sym = sym;
                        let ok = |model: &frobtop::frobenius::FrobeniusModel, cutoff| {
                            let cfg = SuiteConfig { cutoff, conv: conv.clone(), samples: 0, ..SuiteConfig::default() };
                            run_chain_suite(model, &cfg).iter().all(|e| e.status != "fail")
                        };
                        if ok(&s2, 7) && ok(&s3, 7) && ok(&cp, 6) {
                            println!(
                                "oppass={oppass:?} opc={opc:?} tau=({ts:?},{tc:?}) hcm={hcm:?} sym={sym:?}"
                            );
                        }
                    }
                }
            }
        }
    }
    println!("done");
}
