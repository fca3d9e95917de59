//! Browser bindings. Every function takes JSON text and returns JSON text:
//! `{"ok": <result>}` or `{"error": <message>}`.

use serde_json::{json, Value};
use vava_core::graph::{edge_ideal, vv_vanishes_graph};
use vava_core::io;
use vava_core::jacobian::{jacobian_matrix, minors_ideal, DEFAULT_MINOR_BUDGET};
use vava_core::vv::vv_vanishes;
use vava_core::{Result, RingContext};
use wasm_bindgen::prelude::wasm_bindgen;

fn wrap(r: Result<Value>) -> String {
    match r {
        Ok(v) => json!({ "ok": v }),
        Err(e) => json!({ "error": e.to_string() }),
    }
    .to_string()
}

/// VV vanishing of the pair `{"J": ideal, "I": ideal}` with rendered witnesses.
#[wasm_bindgen]
pub fn vv_report(pair_json: &str) -> String {
    wrap((|| {
        let p = io::parse_pair(pair_json)?;
        let rep = vv_vanishes(&p.j, &p.i)?;
        let rendered: Vec<(u32, Vec<String>)> = rep
            .witnesses
            .iter()
            .map(|(t, ws)| (*t, ws.iter().map(|w| p.ctx.render(w)).collect()))
            .collect();
        Ok(json!({"report": rep, "witnesses": rendered}))
    })())
}

/// Graph classification of `sub ⊆ host` with its witness, if any.
#[wasm_bindgen]
pub fn classify_graphs(sub_json: &str, host_json: &str) -> String {
    wrap((|| {
        let sub = io::parse_graph(sub_json)?;
        let host = io::parse_graph(host_json)?;
        let class = vv_vanishes_graph(&sub, &host)?;
        let ctx = RingContext::standard(host.n())?;
        let witness = class.witness(host.n()).map(|w| ctx.render(&w));
        let ideals = json!({
            "J": edge_ideal(&sub).render(&ctx),
            "I": edge_ideal(&host).render(&ctx),
        });
        Ok(json!({"classification": class, "witness": witness, "ideals": ideals}))
    })())
}

/// The ideal of `r`-minors of the Jacobian matrix of a monomial ideal.
#[wasm_bindgen]
pub fn jacobian_minors(ideal_json: &str, r: usize) -> String {
    wrap((|| {
        let named = io::parse_ideal(ideal_json)?;
        let theta = jacobian_matrix(&named.ideal)?;
        let rep = minors_ideal(&theta, r, DEFAULT_MINOR_BUDGET)?;
        Ok(json!({
            "minors_ideal": rep.term_minors.render(&named.ctx),
            "evaluated": rep.evaluated,
            "pruned": rep.pruned,
            "zero": rep.zero,
        }))
    })())
}
