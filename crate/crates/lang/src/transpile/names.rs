//! Identifier mapping. UniCode names that collide with a target keyword or
//! with a name the emitted runtime relies on get the `uc_v_` prefix; since
//! `uc_` is reserved in UniCode the mapping is invertible.

use super::TargetLanguage;

pub const RESERVED_PREFIX: &str = "uc_";
const MANGLE_PREFIX: &str = "uc_v_";

const PYTHON: &[&str] = &[
    "False", "None", "True", "and", "as", "assert", "async", "await", "break", "class", "continue", "def", "del",
    "elif", "else", "except", "finally", "for", "from", "global", "if", "import", "in", "is", "lambda", "nonlocal",
    "not", "or", "pass", "raise", "return", "try", "while", "with", "yield", "match", "case", "abs", "bool",
    "dict", "float", "int", "isinstance", "len", "list", "math", "max", "min", "print", "range", "repr", "sorted",
    "str", "sys", "check", "candidate",
];

const JAVASCRIPT: &[&str] = &[
    "arguments", "await", "break", "case", "catch", "class", "const", "continue", "debugger", "default", "delete",
    "do", "else", "enum", "eval", "export", "extends", "false", "finally", "for", "function", "if", "implements",
    "import", "in", "instanceof", "interface", "let", "new", "null", "package", "private", "protected", "public",
    "return", "static", "super", "switch", "this", "throw", "true", "try", "typeof", "undefined", "var", "void",
    "while", "with", "yield", "Array", "BigInt", "Error", "Map", "Math", "Number", "NaN", "Infinity", "Object",
    "String", "Symbol", "console", "process", "require", "module", "globalThis",
];

const CPP: &[&str] = &[
    "alignas", "alignof", "and", "and_eq", "asm", "auto", "bitand", "bitor", "bool", "break", "case", "catch",
    "char", "char8_t", "char16_t", "char32_t", "class", "compl", "concept", "const", "consteval", "constexpr",
    "constinit", "const_cast", "continue", "co_await", "co_return", "co_yield", "decltype", "default", "delete",
    "do", "double", "dynamic_cast", "else", "enum", "explicit", "export", "extern", "false", "float", "for",
    "friend", "goto", "if", "inline", "int", "long", "mutable", "namespace", "new", "noexcept", "not", "not_eq",
    "nullptr", "operator", "or", "or_eq", "private", "protected", "public", "register", "reinterpret_cast",
    "requires", "return", "short", "signed", "sizeof", "static", "static_assert", "static_cast", "struct",
    "switch", "template", "this", "thread_local", "throw", "true", "try", "typedef", "typeid", "typename",
    "union", "unsigned", "using", "virtual", "void", "volatile", "wchar_t", "while", "xor", "xor_eq", "main",
    "std", "Value", "List", "Map", "NULL", "assert", "exit", "abort",
];

const RUST: &[&str] = &[
    "as", "async", "await", "break", "const", "continue", "crate", "dyn", "else", "enum", "extern", "false", "fn",
    "for", "gen", "if", "impl", "in", "let", "loop", "match", "mod", "move", "mut", "pub", "ref", "return", "self",
    "Self", "static", "struct", "super", "trait", "true", "type", "unsafe", "use", "where", "while", "abstract",
    "become", "box", "do", "final", "macro", "override", "priv", "typeof", "unsized", "virtual", "yield", "try",
    "main", "std", "core", "Value", "Rc", "RefCell", "Vec", "String", "Some", "None", "Ok", "Err", "Option",
    "Result", "Box",
];

const GO: &[&str] = &[
    "break", "case", "chan", "const", "continue", "default", "defer", "else", "fallthrough", "for", "func", "go",
    "goto", "if", "import", "interface", "map", "package", "range", "return", "select", "struct", "switch", "type",
    "var", "main", "init", "any", "append", "bool", "byte", "cap", "clear", "close", "complex", "copy", "delete",
    "error", "false", "float32", "float64", "imag", "int", "int8", "int16", "int32", "int64", "iota", "len", "make",
    "max", "min", "new", "nil", "panic", "print", "println", "real", "recover", "rune", "string", "true", "uint",
    "uint8", "uint16", "uint32", "uint64", "uintptr", "Value", "List", "Map", "fmt", "os", "math", "strconv",
    "strings", "sort", "bufio",
];

const JAVA: &[&str] = &[
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class", "const", "continue",
    "default", "do", "double", "else", "enum", "extends", "final", "finally", "float", "for", "goto", "if",
    "implements", "import", "instanceof", "int", "interface", "long", "native", "new", "package", "private",
    "protected", "public", "return", "short", "static", "strictfp", "super", "switch", "synchronized", "this",
    "throw", "throws", "transient", "try", "void", "volatile", "while", "true", "false", "null", "var", "yield",
    "record", "sealed", "permits", "_", "main", "Main", "Value", "String", "Object", "Math", "System", "List",
    "Map", "java",
];

fn table(target: TargetLanguage) -> &'static [&'static str] {
    match target {
        TargetLanguage::Python => PYTHON,
        TargetLanguage::Javascript => JAVASCRIPT,
        TargetLanguage::Cpp => CPP,
        TargetLanguage::Go => GO,
        TargetLanguage::RustT => RUST,
        TargetLanguage::Java => JAVA,
    }
}

pub fn is_reserved(target: TargetLanguage, name: &str) -> bool {
    table(target).contains(&name)
}

/// Target spelling of a UniCode identifier.
pub fn mangle(target: TargetLanguage, name: &str) -> String {
    if is_reserved(target, name) {
        format!("{MANGLE_PREFIX}{name}")
    } else {
        name.to_string()
    }
}

/// Inverse of [`mangle`] for any target.
pub fn unmangle(name: &str) -> &str {
    name.strip_prefix(MANGLE_PREFIX).unwrap_or(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mangling_is_invertible_and_selective() {
        assert_eq!(mangle(TargetLanguage::Python, "len"), "uc_v_len");
        assert_eq!(mangle(TargetLanguage::Python, "total"), "total");
        assert_eq!(mangle(TargetLanguage::Go, "string"), "uc_v_string");
        assert_eq!(mangle(TargetLanguage::RustT, "string"), "string");
        for target in TargetLanguage::ALL {
            for name in ["main", "len", "x", "Value", "class"] {
                assert_eq!(unmangle(&mangle(target, name)), name);
            }
        }
    }
}
