//! Compiles the unary successor machine and runs the emulating system next to
//! the machine itself.

use multiway::tm::{compile_tm, initial_string, run, t1, TapeConfiguration};
use multiway::{evolve, EvolveOptions};

fn main() -> multiway::Result<()> {
    let tm = t1();
    let m = compile_tm(&tm)?;
    println!("{}", m.to_rule_file(&[]));
    let n = 3;
    let trace = run(&tm, TapeConfiguration::input(&tm, n)?, 1000).expect("halts");
    let g = evolve(&m.with_init(initial_string(&tm, n)?), EvolveOptions::new(trace.len() + 1));
    for (d, cfg) in trace.iter().enumerate() {
        let states: Vec<String> = g.layer(d).map(|id| m.render(g.state(id))).collect();
        println!("{d:>2}  machine {:<14} system {}", cfg.render(&tm), states.join(" "));
    }
    Ok(())
}
