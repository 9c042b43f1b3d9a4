// Reading and writing module and algebra files, with located errors.

use sqpd::gradmod::GradedModule;
use sqpd::models::corpus;
use sqpd::spda::PresentedAlgebra;

pub fn run_example() -> String {
    let mut out = String::new();
    for (name, text) in corpus() {
        let same = if text.contains("\"generators\"") {
            PresentedAlgebra::from_json(&text).unwrap().to_json() == text
        } else {
            GradedModule::from_json(&text).unwrap().to_json() == text
        };
        out += &format!("{name}: {} lines, round trip {same}\n", text.lines().count());
    }
    let bad = "{\n  \"generators\": [{\"name\": \"x\", \"degree\": 1}],\n  \"relations\": [\"x^3 + y\"]\n}";
    match PresentedAlgebra::from_json(bad) {
        Err(e) => out += &format!("error: {e}\n"),
        Ok(_) => out += "unexpectedly parsed\n",
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
