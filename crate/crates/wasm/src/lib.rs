//! Browser bindings. Every export takes plain arguments and returns a JSON
//! string; the page in `www/` draws it.

use lorenz_core::braids::{
    artin_string, braid_index, emit_braid_word, lorenz_braid, positive_braid_genus, torus_matches,
};
use lorenz_core::families::{family_instance, verify_instance, Certificate, FamilyInstance};
use lorenz_core::farey::{tree_levels, Side, TreeLevel};
use lorenz_core::words::parse_word;
use lorenz_core::{FiniteWord, PeriodicWord};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Deeper trees are legal but unreadable on a page.
pub const MAX_DRAWN_DEPTH: usize = 7;

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

#[derive(Serialize)]
struct Tree {
    side: Side,
    levels: Vec<TreeLevel>,
}

pub fn farey_tree_json(side: &str, depth: usize) -> Result<String, String> {
    let side = match side {
        "minus" => Side::Minus,
        "plus" => Side::Plus,
        other => return Err(format!("unknown side {other:?}, expected minus or plus")),
    };
    if depth > MAX_DRAWN_DEPTH {
        return Err(format!(
            "depth {depth} is more than the demo draws ({MAX_DRAWN_DEPTH})"
        ));
    }
    let levels = tree_levels(side, depth).map_err(|e| e.to_string())?;
    Ok(to_json(&Tree { side, levels }))
}

#[derive(Serialize)]
struct Braid {
    strands: usize,
    left_strands: usize,
    permutation: Vec<usize>,
    /// The shifted word sitting at each strand position, in order.
    labels: Vec<PeriodicWord>,
    crossings: usize,
    components: usize,
    cycles: Vec<Vec<usize>>,
    genus: Option<usize>,
    braid_index: Option<usize>,
    artin_word: String,
    torus_candidates: Vec<(u64, u64)>,
}

/// Orbits separated by whitespace or commas, each `(LRR…)` or `LRR…0`.
pub fn braid_json(words: &str) -> Result<String, String> {
    let orbits = words
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| parse_word(t).and_then(|p| p.word.cyclic_class()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let b = lorenz_braid(&orbits).map_err(|e| e.to_string())?;
    let total: usize = orbits.iter().map(|o| o.period()).sum();
    if total > 60 {
        return Err(format!("{total} strands is more than the demo draws (60)"));
    }

    let mut labels: Vec<PeriodicWord> = orbits
        .iter()
        .flat_map(|o| (0..o.period()).map(|k| o.rotate(k)))
        .collect();
    labels.sort();
    let genus = positive_braid_genus(&b).ok();
    let index = (orbits.len() == 1).then(|| braid_index(&orbits[0]));
    let torus_candidates = match (index, genus) {
        (Some(i), Some(g)) => torus_matches(i as u64, g as u64, 200),
        _ => Vec::new(),
    };
    Ok(to_json(&Braid {
        strands: b.n,
        left_strands: b.left_strands,
        permutation: b.perm.clone(),
        labels,
        crossings: b.crossing_count(),
        components: b.cycle_count(),
        cycles: b.cycles(),
        genus,
        braid_index: index,
        artin_word: artin_string(&emit_braid_word(&b)),
        torus_candidates,
    }))
}

#[derive(Serialize)]
struct Explored {
    instance: FamilyInstance,
    orbit: PeriodicWord,
    l_maximal_product: FiniteWord,
    certificate: Certificate,
}

pub fn family_json(id: u8, k: u32, n: u32, mirror: bool) -> Result<String, String> {
    let inst = family_instance(id, k.into(), n.into()).map_err(|e| e.to_string())?;
    let inst = if mirror {
        inst.mirror().map_err(|e| e.to_string())?
    } else {
        inst
    };
    let orbit = inst.product.cyclic_class().map_err(|e| e.to_string())?;
    let l_maximal_product =
        lorenz_core::words::canonical_l_maximal(&orbit).map_err(|e| e.to_string())?;
    let certificate = verify_instance(&inst).map_err(|e| e.to_string())?;
    Ok(to_json(&Explored {
        instance: inst,
        orbit,
        l_maximal_product,
        certificate,
    }))
}

#[wasm_bindgen]
pub fn farey_tree(side: &str, depth: usize) -> Result<String, JsValue> {
    farey_tree_json(side, depth).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn braid(words: &str) -> Result<String, JsValue> {
    braid_json(words).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn family(id: u8, k: u32, n: u32, mirror: bool) -> Result<String, JsValue> {
    family_json(id, k, n, mirror).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn tree() {
        let v = parse(&farey_tree_json("minus", 2).unwrap());
        assert_eq!(
            v["levels"][2]["words"],
            serde_json::json!(["L0", "LRL0", "LR0", "LRR0"])
        );
        assert!(farey_tree_json("sideways", 2).is_err());
        assert!(farey_tree_json("plus", 12).is_err());
    }

    #[test]
    fn trefoil() {
        let v = parse(&braid_json("(LRRLR)").unwrap());
        assert_eq!(v["permutation"], serde_json::json!([4, 5, 1, 2, 3]));
        assert_eq!(v["labels"][0], "(LRLRR)");
        assert_eq!(v["labels"][4], "(RRLRL)");
        assert_eq!(v["torus_candidates"], serde_json::json!([[2, 3]]));
        let v = parse(&braid_json("(LR), LRR0").unwrap());
        assert_eq!(v["components"], 2);
        assert!(braid_json("LRQ0").is_err());
        assert!(braid_json("").is_err());
    }

    #[test]
    fn families() {
        let v = parse(&family_json(1, 1, 2, false).unwrap());
        assert_eq!(v["instance"]["product"], "LRLRLRLRLLRL0");
        assert_eq!(v["certificate"]["issued"], true);
        let v = parse(&family_json(1, 1, 2, true).unwrap());
        assert_eq!(v["instance"]["s"], "RL0");
        assert!(family_json(5, 1, 3, false).is_err());
    }
}
