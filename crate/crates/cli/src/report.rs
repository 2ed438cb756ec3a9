//! Plain-text rendering of JSON reports.

use serde_json::Value;

/// One `key: value` line per top-level field. Scalars print bare, lists of
/// scalars print as `[a, b]`, anything deeper prints as compact JSON.
pub fn render(report: &Value) -> String {
    let Value::Object(map) = report else {
        return format!("{}\n", inline(report));
    };
    let mut out = String::new();
    for (key, value) in map {
        out.push_str(key);
        out.push_str(": ");
        out.push_str(&inline(value));
        out.push('\n');
    }
    out
}

fn inline(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        Value::Array(items) if items.iter().all(is_scalar) => {
            let parts: Vec<String> = items.iter().map(inline).collect();
            format!("[{}]", parts.join(", "))
        }
        other if is_scalar(other) => other.to_string(),
        other => serde_json::to_string(other).expect("values serialize"),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn renders_lines() {
        let v = json!({"a": 1, "b": "x", "c": [1, 2], "d": [[1]], "e": null});
        assert_eq!(render(&v), "a: 1\nb: x\nc: [1, 2]\nd: [[1]]\ne: -\n");
    }
}
