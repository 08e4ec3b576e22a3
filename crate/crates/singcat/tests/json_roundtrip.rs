use std::fs;

use proptest::prelude::*;
use serde_json::{json, Value};
use singcat::json;
use singcat_core::{tensor_with_koszul, Base, KoszulAlgebra, MatrixFactorization, PerfectComplex, Ring, RingMatrix};

fn fixture(name: &str) -> (String, Value) {
    let text = fs::read_to_string(format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap();
    let value = serde_json::from_str(&text).unwrap();
    (text, value)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

#[test]
fn canonical_fixtures_round_trip_byte_for_byte() {
    for name in ["eisenbud.json", "invalid.json", "eisenbud_y.json"] {
        let (text, v) = fixture(name);
        assert_eq!(pretty(&json::module_to_json(&json::parse_module(&v).unwrap())), text, "{name}");
    }
    for name in ["eisenbud_mf.json", "eisenbud_mf_y.json"] {
        let (text, v) = fixture(name);
        assert_eq!(pretty(&json::mf_to_json(&json::parse_mf(&v).unwrap())), text, "{name}");
    }
    for name in ["two_term.json", "integers.json"] {
        let (text, v) = fixture(name);
        assert_eq!(pretty(&json::complex_to_json(&json::parse_complex(&v).unwrap())), text, "{name}");
    }
    let (text, v) = fixture("identity.json");
    assert_eq!(pretty(&json::morphism_to_json(&json::parse_morphism(&v).unwrap())), text);
    let (text, v) = fixture("mult_x.json");
    assert_eq!(pretty(&json::mf_morphism_to_json(&json::parse_mf_morphism(&v).unwrap())), text);
}

#[test]
fn ring_descriptors() {
    for v in [
        json!({"base": "QQ", "vars": ["x", "y"]}),
        json!({"base": "ZZ", "vars": []}),
        json!({"base": {"Fp": 5}, "vars": ["t"]}),
        json!({"base": "QQ", "vars": ["t"], "quotient": "t^2 + 1"}),
    ] {
        assert_eq!(json::ring_to_json(&json::parse_ring(&v).unwrap()), v);
    }
    let r = json::parse_ring(&json!({"base": {"Fp": 7}, "vars": ["x"]})).unwrap();
    assert_eq!(r.format(&r.parse("8*x").unwrap()), "x");
}

#[test]
fn schema_errors_carry_pointers() {
    let cases = [
        (json!({"base": "RR", "vars": []}), "/base"),
        (json!({"vars": []}), ""),
        (json!({"base": "QQ", "vars": [1]}), "/vars/0"),
        (json!({"base": {"Fp": "five"}}), "/base/Fp"),
    ];
    for (v, pointer) in cases {
        assert_eq!(json::parse_ring(&v).unwrap_err().pointer, pointer, "{v}");
    }

    let (_, mut m) = fixture("eisenbud.json");
    m["differentials"]["-1"]["entries"][0][0] = json!("x +");
    assert_eq!(json::parse_module(&m).unwrap_err().pointer, "/differentials/-1/entries/0/0");

    let (_, mut m) = fixture("eisenbud.json");
    m["ranks"]["0"] = json!(2);
    let e = json::parse_module(&m).unwrap_err();
    assert_eq!(e.pointer, "/differentials/-1");
    assert!(e.message.contains("2×1"), "{e}");

    let (_, mut m) = fixture("eisenbud.json");
    m["ranks"] = json!({"top": 1});
    assert_eq!(json::parse_module(&m).unwrap_err().pointer, "/ranks/top");

    let (_, mut m) = fixture("eisenbud.json");
    m["homotopies"] = json!([]);
    assert_eq!(json::parse_module(&m).unwrap_err().pointer, "/homotopies");

    let (_, mut m) = fixture("eisenbud.json");
    m["potentials"] = json!([]);
    assert_eq!(json::parse_module(&m).unwrap_err().pointer, "/potentials");

    let (_, mut x) = fixture("eisenbud_mf.json");
    x["p1"]["entries"] = json!([["x", "1"]]);
    assert_eq!(json::parse_mf(&x).unwrap_err().pointer, "/p1/entries/0");

    let (_, mut phi) = fixture("identity.json");
    phi["target"]["ring"]["base"] = json!("ZZ");
    assert_eq!(json::parse_morphism(&phi).unwrap_err().pointer, "/target");

    let (_, mut chi) = fixture("mult_x.json");
    chi["parity"] = json!(2);
    assert_eq!(json::parse_mf_morphism(&chi).unwrap_err().pointer, "/parity");
}

#[test]
fn parsing_does_not_validate() {
    let (_, v) = fixture("invalid.json");
    let m = json::parse_module(&v).unwrap();
    assert!(!m.validate().is_valid());
    let r = Ring::polynomial(Base::Rationals, &["x"]).unwrap();
    let one = RingMatrix::identity(&r, 1);
    let bad = MatrixFactorization::unchecked(&r, r.parse("x^2").unwrap(), one.clone(), one).unwrap();
    let parsed = json::parse_mf(&json::mf_to_json(&bad)).unwrap();
    assert_eq!(parsed, bad);
    assert!(!parsed.validate().is_valid());
}

fn entry(ring: &Ring, c: (i8, i8, i8)) -> String {
    let p = ring.parse(&format!("{}*x^2 + {}*x*y + {}", c.0, c.1, c.2)).unwrap();
    ring.format(&p)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generated_modules_round_trip(
        coeffs in proptest::collection::vec((-3i8..=3, -3i8..=3, -3i8..=3), 6),
        rows in 1usize..=2,
        cols in 1usize..=3,
        n in 1usize..=2,
    ) {
        let ring = Ring::polynomial(Base::Rationals, &["x", "y"]).unwrap();
        let cells: Vec<Vec<String>> = (0..rows).map(|i| (0..cols).map(|j| entry(&ring, coeffs[(i * cols + j) % 6])).collect()).collect();
        let refs: Vec<Vec<&str>> = cells.iter().map(|r| r.iter().map(String::as_str).collect()).collect();
        let slices: Vec<&[&str]> = refs.iter().map(Vec::as_slice).collect();
        let d = RingMatrix::parse(&ring, &slices).unwrap();
        let pots = (0..n).map(|i| ring.parse(&entry(&ring, coeffs[5 - i]))).collect::<Result<Vec<_>, _>>().unwrap();
        let alg = KoszulAlgebra::new(&ring, pots).unwrap();
        let m = tensor_with_koszul(&alg, &PerfectComplex::two_term(-1, &d)).unwrap();
        let v = json::module_to_json(&m);
        let back = json::parse_module(&v).unwrap();
        prop_assert_eq!(&back, &m);
        let text = pretty(&v);
        prop_assert_eq!(pretty(&json::module_to_json(&json::parse_module(&serde_json::from_str(&text).unwrap()).unwrap())), text);
        prop_assert_eq!(json::parse_complex(&json::complex_to_json(m.complex())).unwrap(), m.complex().clone());
    }
}
