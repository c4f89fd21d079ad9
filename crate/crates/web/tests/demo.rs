use bandinv_web::demo;
use serde_json::Value;

fn json(s: Result<String, String>) -> Value {
    serde_json::from_str(&s.expect("demo call succeeds")).unwrap()
}

#[test]
fn sequence_view() {
    let v = json(demo::sequence("1,1,1", "gf:2", 9, "sliding"));
    assert_eq!(v["bits"], "101101101");
    assert_eq!(v["singular_orders"], serde_json::json!([2, 5, 8]));
    assert_eq!(v["runs"][0], serde_json::json!([1, 1]));
    assert_eq!(v["ops"]["generate"]["mul"], 27);
    assert_eq!(v["best_effort"], false);

    let v = json(demo::sequence("1,1,0", "rational", 4, "naive"));
    assert_eq!(v["k"], 1);
    assert_eq!(v["reversed"], true);
}

#[test]
fn sequence_rejects_bad_input() {
    assert!(demo::sequence("1,2", "gf:5", 3, "sliding")
        .unwrap_err()
        .contains("odd"));
    assert!(demo::sequence("1,1,1", "gf:9", 3, "sliding").is_err());
    assert!(demo::sequence("1,1,1", "gf:2", 0, "sliding").is_err());
    assert!(demo::sequence("1,1,1", "gf:2", demo::MAX_N_NAIVE + 1, "naive").is_err());
    assert!(demo::sequence("1,1,1", "gf:2", 3, "dense").is_err());
    assert!(demo::sequence("1,1,1", "gf:2", 3, "quick").is_err());
}

#[test]
fn comparison_view() {
    let v = json(demo::compare_ops("2,1,3,1,4,1,5", "gf:7", 2000));
    assert_eq!(v["agree"], true);
    assert_eq!(v["k_eff"], 3);
    assert_eq!(v["sliding"]["generate"]["mul"], 3 * 7 * 2000);
    let s = v["sliding"]["eliminate"]["mul"].as_u64().unwrap();
    let n = v["naive"]["eliminate"]["mul"].as_u64().unwrap();
    assert!(n > s);
}

#[test]
fn verify_view() {
    let v = json(demo::verify("gf:5", 50, 3, 12, 1));
    assert_eq!(v["passed"], 50);
    assert_eq!(v["counterexample"], Value::Null);
    assert!(demo::verify("gf:5", 0, 3, 12, 1).is_err());
}
