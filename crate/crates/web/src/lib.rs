//! wasm-bindgen exports for the static demo page in `www/`.

pub mod demo;

use wasm_bindgen::prelude::*;

fn js_err(e: String) -> JsValue {
    JsValue::from_str(&e)
}

/// JSON: `{n, k, k_eff, reversed, bits, singular_orders, runs, ops, best_effort}`.
#[wasm_bindgen]
pub fn sequence(stencil: &str, field: &str, n: usize, algo: &str) -> Result<String, JsValue> {
    demo::sequence(stencil, field, n, algo).map_err(js_err)
}

/// JSON: `{n, k_eff, agree, sliding, naive, budget}`.
#[wasm_bindgen]
pub fn compare_ops(stencil: &str, field: &str, n: usize) -> Result<String, JsValue> {
    demo::compare_ops(stencil, field, n).map_err(js_err)
}

/// JSON: `{total, passed, counterexample}`.
#[wasm_bindgen]
pub fn verify(
    field: &str,
    count: usize,
    max_k: usize,
    n: usize,
    seed: u32,
) -> Result<String, JsValue> {
    demo::verify(field, count, max_k, n, u64::from(seed)).map_err(js_err)
}
