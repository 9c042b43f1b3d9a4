//! The shipped JSON files are exactly what the exporters write, and they
//! parse back to the same objects. Set `SQPD_BLESS=1` to rewrite them.

use std::path::PathBuf;

use sqpd::gradmod::GradedModule;
use sqpd::models::corpus;
use sqpd::spda::PresentedAlgebra;

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

#[test]
fn corpus_matches_exporters() {
    let bless = std::env::var_os("SQPD_BLESS").is_some();
    for (name, text) in corpus() {
        let path = data_dir().join(name);
        if bless {
            std::fs::write(&path, &text).unwrap();
        }
        let on_disk = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(on_disk, text, "{name} is stale");
    }
}

#[test]
fn corpus_round_trips() {
    for (name, text) in corpus() {
        if text.contains("\"generators\"") {
            let p = PresentedAlgebra::from_json(&text).unwrap();
            assert_eq!(p.to_json(), text, "{name}");
        } else {
            let m = GradedModule::from_json(&text).unwrap();
            assert_eq!(m.to_json(), text, "{name}");
        }
    }
}
