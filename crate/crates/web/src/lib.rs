//! Browser bindings. Each export is a thin wrapper over a plain function
//! that returns `Result<String, String>`, so the logic is testable natively.

use matroid_perspective::commands::{compatible_text, table_text, tutte_text};
use matroid_perspective::input::InputDocument;
use matroid_perspective::setcore::GroundSet;
use matroid_perspective::tutte::Method;
use wasm_bindgen::prelude::*;

fn parse(input: &str) -> Result<InputDocument, String> {
    InputDocument::parse(input).map_err(|e| e.to_string())
}

/// Applies a space-separated element order such as `3 1 2 5 4`; blank keeps
/// the document's own order.
fn reorder(mut doc: InputDocument, order: &str) -> Result<InputDocument, String> {
    if order.trim().is_empty() {
        return Ok(doc);
    }
    let positions = order
        .split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| format!("bad element {t:?} in order")))
        .collect::<Result<Vec<_>, _>>()?;
    doc.ground = GroundSet::with_order(positions).map_err(|e| e.to_string())?;
    Ok(doc)
}

pub fn polynomial(input: &str, method: &str) -> Result<String, String> {
    let method: Method = method
        .parse()
        .map_err(|e: matroid_perspective::error::Error| e.to_string())?;
    tutte_text(&parse(input)?, method).map_err(|e| e.to_string())
}

pub fn table(input: &str, order: &str) -> Result<String, String> {
    table_text(&reorder(parse(input)?, order)?).map_err(|e| e.to_string())
}

pub fn compatible(input: &str, order: &str) -> Result<String, String> {
    compatible_text(&reorder(parse(input)?, order)?).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn tutte_polynomial(input: &str, method: &str) -> Result<String, JsValue> {
    polynomial(input, method).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn bijection_table(input: &str, order: &str) -> Result<String, JsValue> {
    table(input, order).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn compatible_sets(input: &str, order: &str) -> Result<String, JsValue> {
    compatible(input, order).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    const PAIR: &str =
        "elements: 5\nmatroid M circuits: {1,2,3} {3,4,5} {1,2,4,5}\nmatroid N circuits: {1} {2,3} {3,4,5} {2,4,5}\n";

    #[test]
    fn polynomial_is_order_free() {
        let p = polynomial(PAIR, "rank-gen").unwrap();
        assert_eq!(p, "x^2*z + x^2 + x*y + 2*x*z + 2*x + y^2 + y*z + 2*y + z + 1\n");
        assert!(polynomial(PAIR, "nope").is_err());
    }

    #[test]
    fn reordering_changes_rows_not_size() {
        let natural = table(PAIR, "").unwrap();
        let reversed = table(PAIR, "5 4 3 2 1").unwrap();
        assert_ne!(natural, reversed);
        assert_eq!(natural.lines().count(), reversed.lines().count());
        assert_eq!(compatible(PAIR, "1 2 3 4 5").unwrap(), compatible(PAIR, "").unwrap());
    }

    #[test]
    fn bad_order_is_reported() {
        assert!(table(PAIR, "1 2 x").unwrap_err().contains("x"));
        assert!(table(PAIR, "1 2 3").is_err());
    }
}
