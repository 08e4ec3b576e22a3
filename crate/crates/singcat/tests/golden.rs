//! Demo reports compared byte for byte against `tests/golden`.
//! Set `SINGCAT_BLESS=1` to rewrite the golden files.

use std::process::Command;

use singcat::demo::DEMOS;

#[test]
fn demos_match_golden_files() {
    let bless = std::env::var_os("SINGCAT_BLESS").is_some();
    for name in DEMOS {
        let out = Command::new(env!("CARGO_BIN_EXE_singcat")).args(["demo", name]).output().unwrap();
        assert_eq!(out.status.code(), Some(0), "demo {name}: {}", String::from_utf8_lossy(&out.stderr));
        let path = format!("{}/tests/golden/{name}.json", env!("CARGO_MANIFEST_DIR"));
        if bless {
            std::fs::write(&path, &out.stdout).unwrap();
            continue;
        }
        let golden = std::fs::read(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
        assert!(golden == out.stdout, "demo {name} differs from {path}");
    }
}

#[test]
fn every_demo_reports_pass_or_uncertified() {
    for name in DEMOS {
        let r = singcat::demo::run(name).unwrap();
        let status = r.status().as_str();
        assert!(status == "pass" || (*name == "reduce-n2" && status == "uncertified"), "demo {name}: {status}");
    }
}
