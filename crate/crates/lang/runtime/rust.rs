// unicode-runtime: begin
#![allow(dead_code, unused_mut, unused_variables, unused_assignments, unreachable_code, non_snake_case)]
use std::cell::RefCell;
use std::rc::Rc;

#[derive(Clone, Debug)]
enum Value {
    None,
    Bool(bool),
    Int(i64),
    Float(f64),
    Str(Rc<str>),
    List(Rc<RefCell<Vec<Value>>>),
    Map(Rc<RefCell<Vec<(Value, Value)>>>),
}

fn uc_fail(message: String) -> ! {
    use std::io::Write;
    let _ = std::io::stdout().flush();
    eprintln!("runtime error: {}", message);
    std::process::exit(1)
}

fn uc_type(a: &Value) -> &'static str {
    match a {
        Value::None => "none",
        Value::Bool(_) => "bool",
        Value::Int(_) => "int",
        Value::Float(_) => "float",
        Value::Str(_) => "string",
        Value::List(_) => "list",
        Value::Map(_) => "map",
    }
}

fn uc_str(s: &str) -> Value {
    Value::Str(Rc::from(s))
}

fn uc_list(items: Vec<Value>) -> Value {
    Value::List(Rc::new(RefCell::new(items)))
}

fn uc_new_map() -> Value {
    Value::Map(Rc::new(RefCell::new(Vec::new())))
}

fn uc_num(a: &Value) -> Option<f64> {
    match a {
        Value::Int(i) => Some(*i as f64),
        Value::Float(f) => Some(*f),
        _ => None,
    }
}

fn uc_truthy(a: Value) -> bool {
    match &a {
        Value::None => false,
        Value::Bool(b) => *b,
        Value::Int(i) => *i != 0,
        Value::Float(f) => *f != 0.0,
        Value::Str(s) => !s.is_empty(),
        Value::List(l) => !l.borrow().is_empty(),
        Value::Map(m) => !m.borrow().is_empty(),
    }
}

fn uc_equal(a: &Value, b: &Value) -> bool {
    match (a, b) {
        (Value::Int(x), Value::Int(y)) => x == y,
        (Value::Int(_) | Value::Float(_), Value::Int(_) | Value::Float(_)) => uc_num(a) == uc_num(b),
        (Value::None, Value::None) => true,
        (Value::Bool(x), Value::Bool(y)) => x == y,
        (Value::Str(x), Value::Str(y)) => x == y,
        (Value::List(x), Value::List(y)) => {
            let (x, y) = (x.borrow(), y.borrow());
            x.len() == y.len() && x.iter().zip(y.iter()).all(|(p, q)| uc_equal(p, q))
        }
        (Value::Map(x), Value::Map(y)) => {
            let (x, y) = (x.borrow(), y.borrow());
            x.len() == y.len()
                && x.iter().all(|(k, v)| y.iter().find(|(k2, _)| uc_equal(k, k2)).map_or(false, |(_, v2)| uc_equal(v, v2)))
        }
        _ => false,
    }
}

fn uc_compare(a: &Value, b: &Value) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    match (a, b) {
        (Value::Int(x), Value::Int(y)) => x.cmp(y),
        (Value::Int(_) | Value::Float(_), Value::Int(_) | Value::Float(_)) => {
            let (x, y) = (uc_num(a).unwrap(), uc_num(b).unwrap());
            if x < y {
                Ordering::Less
            } else if x > y {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        }
        (Value::Str(x), Value::Str(y)) => x.as_bytes().cmp(y.as_bytes()),
        (Value::Bool(x), Value::Bool(y)) => x.cmp(y),
        (Value::List(x), Value::List(y)) => {
            let (x, y) = (x.borrow(), y.borrow());
            for (p, q) in x.iter().zip(y.iter()) {
                if !uc_equal(p, q) {
                    return uc_compare(p, q);
                }
            }
            x.len().cmp(&y.len())
        }
        _ => uc_fail(format!("cannot order {} and {}", uc_type(a), uc_type(b))),
    }
}

fn uc_format_float(f: f64) -> String {
    if f.is_nan() {
        return "nan".to_string();
    }
    if f.is_infinite() {
        return if f > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let sci = format!("{:e}", f.abs());
    let (mantissa, exponent) = sci.split_once('e').unwrap();
    let exponent: i32 = exponent.parse().unwrap();
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let sign = if f.is_sign_negative() { "-" } else { "" };
    let body = if (-4..16).contains(&exponent) {
        if exponent >= 0 {
            let point = exponent as usize + 1;
            let mut whole = digits.chars().take(point).collect::<String>();
            while whole.len() < point {
                whole.push('0');
            }
            let frac = if digits.len() > point { digits[point..].to_string() } else { "0".to_string() };
            format!("{}.{}", whole, frac)
        } else {
            format!("0.{}{}", "0".repeat((-exponent - 1) as usize), digits)
        }
    } else {
        let rest = if digits.len() > 1 { format!(".{}", &digits[1..]) } else { String::new() };
        format!("{}{}e{}{:02}", &digits[..1], rest, if exponent < 0 { '-' } else { '+' }, exponent.abs())
    };
    format!("{}{}", sign, body)
}

fn uc_quote(s: &str) -> String {
    let mut out = String::from("\"");
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn uc_render(a: &Value, nested: bool) -> String {
    match a {
        Value::None => "none".to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Int(i) => i.to_string(),
        Value::Float(f) => uc_format_float(*f),
        Value::Str(s) => {
            if nested {
                uc_quote(s)
            } else {
                s.to_string()
            }
        }
        Value::List(l) => {
            let parts: Vec<String> = l.borrow().iter().map(|v| uc_render(v, true)).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Map(m) => {
            let parts: Vec<String> =
                m.borrow().iter().map(|(k, v)| format!("{}: {}", uc_render(k, true), uc_render(v, true))).collect();
            format!("{{{}}}", parts.join(", "))
        }
    }
}

fn uc_format(a: Value) -> String {
    uc_render(&a, false)
}

fn uc_checked(r: Option<i64>) -> Value {
    match r {
        Some(i) => Value::Int(i),
        None => uc_fail("integer overflow".to_string()),
    }
}

fn uc_need_num(a: &Value, b: &Value, op: &str) -> (f64, f64) {
    match (uc_num(a), uc_num(b)) {
        (Some(x), Some(y)) => (x, y),
        _ => uc_fail(format!("unsupported operands for {}: {} and {}", op, uc_type(a), uc_type(b))),
    }
}

fn uc_add(a: Value, b: Value) -> Value {
    match (&a, &b) {
        (Value::Int(x), Value::Int(y)) => uc_checked(x.checked_add(*y)),
        (Value::Str(x), Value::Str(y)) => uc_str(&format!("{}{}", x, y)),
        (Value::List(x), Value::List(y)) => {
            let mut items = x.borrow().clone();
            items.extend(y.borrow().iter().cloned());
            uc_list(items)
        }
        _ => {
            let (x, y) = uc_need_num(&a, &b, "+");
            Value::Float(x + y)
        }
    }
}

fn uc_sub(a: Value, b: Value) -> Value {
    if let (Value::Int(x), Value::Int(y)) = (&a, &b) {
        return uc_checked(x.checked_sub(*y));
    }
    let (x, y) = uc_need_num(&a, &b, "-");
    Value::Float(x - y)
}

fn uc_mul(a: Value, b: Value) -> Value {
    if let (Value::Int(x), Value::Int(y)) = (&a, &b) {
        return uc_checked(x.checked_mul(*y));
    }
    let (x, y) = uc_need_num(&a, &b, "*");
    Value::Float(x * y)
}

fn uc_div(a: Value, b: Value) -> Value {
    let (x, y) = uc_need_num(&a, &b, "/");
    if y == 0.0 {
        uc_fail("division by zero".to_string());
    }
    Value::Float(x / y)
}

fn uc_mod(a: Value, b: Value) -> Value {
    let (x, y) = uc_need_num(&a, &b, "MOD");
    if y == 0.0 {
        uc_fail("modulo by zero".to_string());
    }
    if let (Value::Int(p), Value::Int(q)) = (&a, &b) {
        if *q == -1 {
            return Value::Int(0);
        }
        let mut r = p % q;
        if r != 0 && ((r < 0) != (*q < 0)) {
            r += q;
        }
        return Value::Int(r);
    }
    let mut r = x % y;
    if r != 0.0 && ((r < 0.0) != (y < 0.0)) {
        r += y;
    }
    if r == 0.0 {
        r = 0.0f64.copysign(y);
    }
    Value::Float(r)
}

fn uc_neg(a: Value) -> Value {
    match a {
        Value::Int(i) => uc_checked(i.checked_neg()),
        Value::Float(f) => Value::Float(-f),
        other => uc_fail(format!("cannot negate {}", uc_type(&other))),
    }
}

fn uc_not(a: Value) -> Value {
    Value::Bool(!uc_truthy(a))
}

fn uc_eq(a: Value, b: Value) -> Value {
    Value::Bool(uc_equal(&a, &b))
}

fn uc_ne(a: Value, b: Value) -> Value {
    Value::Bool(!uc_equal(&a, &b))
}

fn uc_lt(a: Value, b: Value) -> Value {
    Value::Bool(uc_compare(&a, &b).is_lt())
}

fn uc_le(a: Value, b: Value) -> Value {
    Value::Bool(uc_compare(&a, &b).is_le())
}

fn uc_gt(a: Value, b: Value) -> Value {
    Value::Bool(uc_compare(&a, &b).is_gt())
}

fn uc_ge(a: Value, b: Value) -> Value {
    Value::Bool(uc_compare(&a, &b).is_ge())
}

fn uc_need_int(a: &Value, what: &str) -> i64 {
    match a {
        Value::Int(i) => *i,
        Value::Bool(b) => *b as i64,
        other => uc_fail(format!("{} must be an integer, not {}", what, uc_type(other))),
    }
}

fn uc_position(i: i64, len: usize) -> usize {
    let n = len as i64;
    let j = if i < 0 { i + n } else { i };
    if j < 0 || j >= n {
        uc_fail(format!("index {} out of range", i));
    }
    j as usize
}

fn uc_check_key(key: &Value) {
    if matches!(key, Value::List(_) | Value::Map(_)) {
        uc_fail(format!("unhashable map key: {}", uc_type(key)));
    }
}

fn uc_index(c: Value, i: Value) -> Value {
    match &c {
        Value::List(l) => {
            let l = l.borrow();
            l[uc_position(uc_need_int(&i, "list index"), l.len())].clone()
        }
        Value::Str(s) => {
            let chars: Vec<char> = s.chars().collect();
            uc_str(&chars[uc_position(uc_need_int(&i, "string index"), chars.len())].to_string())
        }
        Value::Map(m) => {
            uc_check_key(&i);
            match m.borrow().iter().find(|(k, _)| uc_equal(k, &i)) {
                Some((_, v)) => v.clone(),
                None => uc_fail(format!("missing map key {}", uc_render(&i, true))),
            }
        }
        other => uc_fail(format!("cannot index {}", uc_type(other))),
    }
}

fn uc_set_index(c: Value, i: Value, v: Value) {
    match &c {
        Value::List(l) => {
            let mut l = l.borrow_mut();
            let j = uc_position(uc_need_int(&i, "list index"), l.len());
            l[j] = v;
        }
        Value::Map(m) => {
            uc_check_key(&i);
            let mut m = m.borrow_mut();
            match m.iter_mut().find(|(k, _)| uc_equal(k, &i)) {
                Some(entry) => entry.1 = v,
                None => m.push((i, v)),
            }
        }
        other => uc_fail(format!("cannot assign into {}", uc_type(other))),
    }
}

fn uc_step(s: Value) -> Value {
    match s {
        Value::Int(0) => uc_fail("FOR loop step must not be zero".to_string()),
        Value::Int(_) => s,
        _ => uc_fail("FOR loop bounds must be integers".to_string()),
    }
}

fn uc_range_ok(i: Value, to: Value, step: Value) -> bool {
    match (i, to, step) {
        (Value::Int(i), Value::Int(t), Value::Int(s)) => {
            if s > 0 {
                i <= t
            } else {
                i >= t
            }
        }
        _ => uc_fail("FOR loop bounds must be integers".to_string()),
    }
}

fn uc_iter(c: Value) -> Value {
    match &c {
        Value::List(_) => c,
        Value::Str(s) => uc_list(s.chars().map(|ch| uc_str(&ch.to_string())).collect()),
        Value::Map(m) => uc_list(m.borrow().iter().map(|(k, _)| k.clone()).collect()),
        other => uc_fail(format!("cannot iterate over {}", uc_type(other))),
    }
}

fn uc_output(a: Value) {
    println!("{}", uc_format(a));
}

fn uc_input() -> Value {
    let mut line = String::new();
    match std::io::stdin().read_line(&mut line) {
        Ok(0) | Err(_) => Value::None,
        Ok(_) => {
            while line.ends_with('\n') || line.ends_with('\r') {
                line.pop();
            }
            uc_str(&line)
        }
    }
}

fn uc_length(a: Value) -> Value {
    match &a {
        Value::Str(s) => Value::Int(s.chars().count() as i64),
        Value::List(l) => Value::Int(l.borrow().len() as i64),
        Value::Map(m) => Value::Int(m.borrow().len() as i64),
        other => uc_fail(format!("LENGTH of {}", uc_type(other))),
    }
}

fn uc_append(l: Value, v: Value) -> Value {
    match &l {
        Value::List(items) => items.borrow_mut().push(v),
        other => uc_fail(format!("APPEND to {}", uc_type(other))),
    }
    Value::None
}

fn uc_remove_at(l: Value, i: Value) -> Value {
    match &l {
        Value::List(items) => {
            let mut items = items.borrow_mut();
            let j = uc_position(uc_need_int(&i, "list index"), items.len());
            items.remove(j)
        }
        other => uc_fail(format!("REMOVE_AT from {}", uc_type(other))),
    }
}

fn uc_slice(a: &Value, b: &Value, n: usize) -> (usize, usize) {
    let clamp = |i: i64| -> usize {
        let len = n as i64;
        let i = if i < 0 { i + len } else { i };
        i.clamp(0, len) as usize
    };
    let lo = clamp(uc_need_int(a, "slice bound"));
    let hi = clamp(uc_need_int(b, "slice bound"));
    (lo, hi.max(lo))
}

fn uc_substring(s: Value, a: Value, b: Value) -> Value {
    match &s {
        Value::Str(text) => {
            let chars: Vec<char> = text.chars().collect();
            let (lo, hi) = uc_slice(&a, &b, chars.len());
            uc_str(&chars[lo..hi].iter().collect::<String>())
        }
        Value::List(items) => {
            let items = items.borrow();
            let (lo, hi) = uc_slice(&a, &b, items.len());
            uc_list(items[lo..hi].to_vec())
        }
        other => uc_fail(format!("SUBSTRING of {}", uc_type(other))),
    }
}

fn uc_to_string(a: Value) -> Value {
    uc_str(&uc_format(a))
}

fn uc_to_int(a: Value) -> Value {
    match &a {
        Value::Int(_) => a,
        Value::Bool(b) => Value::Int(*b as i64),
        Value::Float(f) => {
            let t = f.trunc();
            if !t.is_finite() || t >= 9223372036854775808.0 || t < -9223372036854775808.0 {
                uc_fail("cannot convert float to int".to_string());
            }
            Value::Int(t as i64)
        }
        Value::Str(s) => {
            let t = s.trim();
            let digits = t.strip_prefix('+').or_else(|| t.strip_prefix('-')).unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
                uc_fail(format!("invalid integer literal: {}", s));
            }
            match t.strip_prefix('+').unwrap_or(t).parse::<i64>() {
                Ok(i) => Value::Int(i),
                Err(_) => uc_fail("integer overflow".to_string()),
            }
        }
        other => uc_fail(format!("TO_INT of {}", uc_type(other))),
    }
}

fn uc_floor(a: Value) -> Value {
    match &a {
        Value::Int(_) => a,
        Value::Float(f) => uc_to_int(Value::Float(f.floor())),
        Value::Bool(_) => uc_to_int(a),
        other => uc_fail(format!("FLOOR of {}", uc_type(other))),
    }
}

fn uc_max(a: Value, b: Value) -> Value {
    if uc_compare(&b, &a).is_gt() {
        b
    } else {
        a
    }
}

fn uc_min(a: Value, b: Value) -> Value {
    if uc_compare(&b, &a).is_lt() {
        b
    } else {
        a
    }
}

fn uc_abs(a: Value) -> Value {
    match a {
        Value::Int(i) => uc_checked(i.checked_abs()),
        Value::Float(f) => Value::Float(f.abs()),
        other => uc_fail(format!("ABS of {}", uc_type(&other))),
    }
}

fn uc_sorted(a: Value) -> Value {
    let mut items = match uc_iter(a) {
        Value::List(l) => l.borrow().clone(),
        _ => unreachable!(),
    };
    items.sort_by(uc_compare);
    uc_list(items)
}

fn uc_contains(c: Value, v: Value) -> Value {
    match &c {
        Value::List(items) => Value::Bool(items.borrow().iter().any(|item| uc_equal(item, &v))),
        Value::Str(s) => match &v {
            Value::Str(needle) => Value::Bool(s.contains(&**needle)),
            _ => uc_fail("CONTAINS on a string needs a string".to_string()),
        },
        Value::Map(m) => {
            uc_check_key(&v);
            Value::Bool(m.borrow().iter().any(|(k, _)| uc_equal(k, &v)))
        }
        other => uc_fail(format!("CONTAINS on {}", uc_type(other))),
    }
}

fn uc_keys(m: Value) -> Value {
    match &m {
        Value::Map(_) => uc_iter(m),
        other => uc_fail(format!("KEYS of {}", uc_type(other))),
    }
}

fn uc_get(m: Value, k: Value) -> Value {
    match &m {
        Value::Map(entries) => {
            uc_check_key(&k);
            entries.borrow().iter().find(|(key, _)| uc_equal(key, &k)).map(|(_, v)| v.clone()).unwrap_or(Value::None)
        }
        other => uc_fail(format!("GET from {}", uc_type(other))),
    }
}

fn uc_put(m: Value, k: Value, v: Value) -> Value {
    match &m {
        Value::Map(_) => uc_set_index(m, k, v),
        other => uc_fail(format!("PUT into {}", uc_type(other))),
    }
    Value::None
}
// unicode-runtime: end
