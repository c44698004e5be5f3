use frobtop::frobenius::{builtin_projective, builtin_sphere};
use frobtop::verify::{run_suites, Suite, SuiteConfig};

fn main() {
    let which = std::env::args().nth(1).unwrap_or_else(|| "all".into());
    let cutoff: i64 = std::env::args().nth(2).map(|s| s.parse().unwrap()).unwrap_or(8);
    let suites = Suite::parse(&which).expect("suite name");
    for model in [
        builtin_sphere(2).unwrap(),
        builtin_sphere(3).unwrap(),
        builtin_projective(2).unwrap(),
    ] {
        let cfg = SuiteConfig { cutoff, ..SuiteConfig::default() };
        let t0 = std::time::Instant::now();
        let report = run_suites(&model, &cfg, &suites);
        let mut fails = 0;
        for e in &report.entries {
            if e.status == "fail" {
                println!("  [FAIL] {} {} :: {}", model.name, e.id, e.witness.clone().unwrap_or_default());
                fails += 1;
            }
            if e.status == "skipped" {
                println!("  [skip] {} {} :: {}", model.name, e.id, e.witness.clone().unwrap_or_default());
            }
        }
        println!(
            "{}: {} entries, {} failed ({:?})",
            model.name,
            report.entries.len(),
            fails,
            t0.elapsed()
        );
    }
}
