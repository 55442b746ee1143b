use std::process::{Command, Output};

use serde_json::Value;

fn iwalink(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iwalink"))
        .args(args)
        .env_remove("IWALINK_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = iwalink(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

const C4: &[&str] = &["invariants", "--delta", "t1*t2+1", "--r", "2", "--z", "1,2", "--p", "2", "--json"];

#[test]
fn c4_invariants_json() {
    let out = iwalink(C4);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"lambda\":2,\"mu\":0,\"n0\":3,\"nu\":-2,\"reduced_poly\":\"t^4-t^3+t-1\",\"v\":1,\"vanishing\":[]}\n"
    );
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let base = stdout(&iwalink(C4));
    for threads in ["0", "1", "3"] {
        let out = Command::new(env!("CARGO_BIN_EXE_iwalink"))
            .args(C4)
            .env("IWALINK_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(stdout(&out), base);
    }
    assert_eq!(stdout(&iwalink(C4)), base);
}

#[test]
fn figure1_orders_grow_linearly() {
    let v = json(&["orders", "--family", "figure1", "--m", "1", "--z", "1,1", "--p", "3", "--nmax", "4", "--json"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    for row in rows {
        let n = row["n"].as_u64().unwrap();
        assert_eq!(row["e"].as_u64(), Some(5 * n));
        assert!(row["order"].is_string());
    }
    assert_eq!(rows[4]["order"], "3486784401");
}

#[test]
fn orders_with_component_polynomial() {
    let v = json(&[
        "orders", "--delta", "t1*t2+1", "--r", "2", "--z", "1,2", "--p", "2", "--knot-polys", "t^2-t+1;1",
        "--nmax", "3", "--json",
    ]);
    let orders: Vec<&str> = v["rows"].as_array().unwrap().iter().map(|r| r["order"].as_str().unwrap()).collect();
    assert_eq!(orders, ["1", "3", "12", "48"]);
}

#[test]
fn vanishing_orders_have_null_exponent() {
    let v = json(&["orders", "--family", "conway", "--a", "2", "--b", "1", "--p", "2", "--nmax", "3", "--json"]);
    assert_eq!(v["rows"][2]["order"], "0");
    assert!(v["rows"][2]["e"].is_null());
    let inv = json(&["invariants", "--family", "conway", "--a", "2", "--b", "1", "--p", "2", "--json"]);
    assert!(inv["nu"].is_null());
    assert_eq!(inv["vanishing"], serde_json::json!([2]));
}

#[test]
fn pseudonull_conway() {
    let v = json(&["pseudonull", "--family", "conway", "--a", "4", "--b", "6", "--p", "2", "--json"]);
    assert_eq!(v["verdict"], "PseudonullByThm42");
    let out = iwalink(&["pseudonull", "--family", "conway", "--a", "4", "--b", "6", "--p", "2"]);
    assert!(stdout(&out).contains("PseudonullByThm42"));
}

#[test]
fn pseudonull_knot() {
    let v = json(&["pseudonull", "--delta", "t^2-t+1", "--r", "1", "--json"]);
    assert_eq!(v["verdict"], "NotPseudonullKnot");
}

#[test]
fn torres_and_family() {
    let v = json(&["torres", "--family", "c4", "--json"]);
    assert_eq!(v["passed"], true);
    let v = json(&["torres", "--delta", "t1+t2", "--r", "2", "--l12", "3", "--json"]);
    assert_eq!(v["passed"], false);
    let v = json(&["family", "make", "--family", "c4", "--json"]);
    assert_eq!(v["delta"], "t1*t2+1");
    assert_eq!(v["linking_number"], "2");
    let v = json(&["family", "list", "--json"]);
    assert_eq!(v["families"].as_array().unwrap().len(), 7);
}

#[test]
fn bezout_certificate() {
    let v = json(&["bezout", "--m", "2", "--json"]);
    assert_eq!(v["resultant"].as_str().unwrap().trim_start_matches('-'), "4");
    assert!(v["delta"].is_null());
    let v = json(&["invariants", "--family", "bezout", "--m", "3", "--s", "1", "--p", "2", "--json"]);
    assert_eq!((v["lambda"].as_u64(), v["mu"].as_u64()), (Some(2), Some(3)));
}

#[test]
fn repro_passes() {
    let out = iwalink(&["repro"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let v = json(&["repro", "--json"]);
    assert_eq!(v["passed"], true);
}

#[test]
fn usage_errors_exit_2() {
    let out = iwalink(&["invariants", "--delta", "t1*t2+", "--r", "2", "--p", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 6"));
    assert_eq!(iwalink(&[]).status.code(), Some(2));
    assert_eq!(iwalink(&["invariants", "--family", "nope", "--p", "2"]).status.code(), Some(2));
    assert_eq!(iwalink(&["invariants", "--delta", "t1", "--p", "2"]).status.code(), Some(2));
    assert_eq!(iwalink(&["orders", "--family", "c4", "--nmax", "x", "--p", "2"]).status.code(), Some(2));
}

#[test]
fn domain_errors_exit_1() {
    let out = iwalink(&["invariants", "--delta", "t1-t2", "--r", "2", "--z", "1,1", "--p", "2", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["error"]["code"], "zero_polynomial");
    let out = iwalink(&["invariants", "--delta", "t1*t2+1", "--r", "2", "--z", "2,4", "--p", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = iwalink(&["invariants", "--delta", "t1*t2+1", "--r", "2", "--p", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let out = iwalink(&["invariants", "--delta", "t1*t2*t3+1", "--r", "3", "--z", "1,1,2", "--p", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("base_unavailable"));
}

#[test]
fn negative_direction_entries() {
    let v = json(&["invariants", "--family", "conway", "--a", "1", "--b", "1", "--z", "2,-1", "--p", "2", "--json"]);
    assert!(v["lambda"].is_u64());
}
