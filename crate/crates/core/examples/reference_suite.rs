// Runs the built-in verification suite.

use sqpd::models::reference_suite;

pub fn run_example() -> String {
    let r = reference_suite();
    let mut out = r.render();
    out += &format!("overall: {}\n", if r.passed() { "PASS" } else { "FAIL" });
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
