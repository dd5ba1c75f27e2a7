//! The closed set of builtin calls every transpiler target implements.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Builtin {
    pub name: &'static str,
    pub arity: usize,
    pub summary: &'static str,
}

pub const BUILTINS: &[Builtin] = &[
    Builtin { name: "LENGTH", arity: 1, summary: "number of items in a list or map, or Unicode scalar values in a string" },
    Builtin { name: "APPEND", arity: 2, summary: "append a value to a list in place" },
    Builtin { name: "REMOVE_AT", arity: 2, summary: "remove and return the list item at an index" },
    Builtin { name: "SUBSTRING", arity: 3, summary: "characters from start (inclusive) to end (exclusive)" },
    Builtin { name: "TO_STRING", arity: 1, summary: "display form of a value" },
    Builtin { name: "TO_INT", arity: 1, summary: "integer from a string, float (truncating) or bool" },
    Builtin { name: "FLOOR", arity: 1, summary: "largest integer not above a number" },
    Builtin { name: "MAX", arity: 2, summary: "larger of two values" },
    Builtin { name: "MIN", arity: 2, summary: "smaller of two values" },
    Builtin { name: "ABS", arity: 1, summary: "absolute value" },
    Builtin { name: "SORTED", arity: 1, summary: "new list in ascending order (stable)" },
    Builtin { name: "CONTAINS", arity: 2, summary: "list membership, substring test, or map key test" },
    Builtin { name: "KEYS", arity: 1, summary: "list of map keys in insertion order" },
    Builtin { name: "GET", arity: 2, summary: "map value for a key, or none when absent" },
    Builtin { name: "PUT", arity: 3, summary: "set a map entry in place" },
    Builtin { name: "NEW_MAP", arity: 0, summary: "a fresh empty map" },
];

pub fn builtin(name: &str) -> Option<&'static Builtin> {
    BUILTINS.iter().find(|b| b.name == name)
}

pub fn is_builtin(name: &str) -> bool {
    builtin(name).is_some()
}
