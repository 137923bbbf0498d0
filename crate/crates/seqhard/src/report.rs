//! Rendering of key-value reports as text lines or a JSON object.

use serde_json::{Map, Value};

use crate::formats::KeyValues;

fn json_value(v: &str) -> Value {
    if let Ok(i) = v.parse::<i64>() {
        Value::from(i)
    } else if let Ok(u) = v.parse::<u64>() {
        Value::from(u)
    } else {
        Value::from(v)
    }
}

pub fn to_json(kv: &KeyValues) -> Value {
    Value::Object(kv.iter().map(|(k, v)| (k.to_string(), json_value(v))).collect::<Map<_, _>>())
}

pub fn render(kv: &KeyValues, json: bool) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(&to_json(kv)).expect("string map serializes");
        s.push('\n');
        s
    } else {
        kv.render()
    }
}
