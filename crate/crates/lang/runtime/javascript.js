// unicode-runtime: begin
"use strict";

class UcMap {
  constructor() {
    this.keys = [];
    this.vals = [];
  }
}

const UC_MIN = -(2n ** 63n);
const UC_MAX = 2n ** 63n - 1n;

function uc_fail(message) {
  process.stderr.write("runtime error: " + message + "\n");
  process.exit(1);
}

function uc_type(a) {
  if (a === null || a === undefined) return "none";
  if (typeof a === "boolean") return "bool";
  if (typeof a === "bigint") return "int";
  if (typeof a === "number") return "float";
  if (typeof a === "string") return "string";
  if (Array.isArray(a)) return "list";
  return "map";
}

function uc_checked(r) {
  if (r < UC_MIN || r > UC_MAX) uc_fail("integer overflow");
  return r;
}

function uc_chars(s) {
  return Array.from(s);
}

function uc_is_num(a) {
  return typeof a === "bigint" || typeof a === "number";
}

function uc_truthy(a) {
  switch (uc_type(a)) {
    case "none": return false;
    case "bool": return a;
    case "int": return a !== 0n;
    case "float": return a !== 0;
    case "string": return a.length > 0;
    case "list": return a.length > 0;
    default: return a.keys.length > 0;
  }
}

function uc_equal(a, b) {
  if (typeof a === "bigint" && typeof b === "bigint") return a === b;
  if (uc_is_num(a) && uc_is_num(b)) return Number(a) === Number(b);
  const t = uc_type(a);
  if (t !== uc_type(b)) return false;
  if (t === "none") return true;
  if (t === "list") return a.length === b.length && a.every((x, i) => uc_equal(x, b[i]));
  if (t === "map") {
    return a.keys.length === b.keys.length && a.keys.every((k, i) => {
      const j = uc_find(b, k);
      return j >= 0 && uc_equal(a.vals[i], b.vals[j]);
    });
  }
  return a === b;
}

function uc_compare(a, b) {
  if (typeof a === "bigint" && typeof b === "bigint") return a < b ? -1 : a > b ? 1 : 0;
  if (uc_is_num(a) && uc_is_num(b)) {
    const x = Number(a), y = Number(b);
    return x < y ? -1 : x > y ? 1 : 0;
  }
  const t = uc_type(a);
  if (t === "string" && uc_type(b) === "string") {
    const x = uc_chars(a), y = uc_chars(b);
    for (let i = 0; i < x.length && i < y.length; i++) {
      const p = x[i].codePointAt(0), q = y[i].codePointAt(0);
      if (p !== q) return p < q ? -1 : 1;
    }
    return x.length < y.length ? -1 : x.length > y.length ? 1 : 0;
  }
  if (t === "bool" && uc_type(b) === "bool") return Number(a) - Number(b);
  if (t === "list" && uc_type(b) === "list") {
    for (let i = 0; i < a.length && i < b.length; i++) {
      if (!uc_equal(a[i], b[i])) return uc_compare(a[i], b[i]);
    }
    return a.length < b.length ? -1 : a.length > b.length ? 1 : 0;
  }
  uc_fail("cannot order " + uc_type(a) + " and " + uc_type(b));
}

function uc_format_float(f) {
  if (Number.isNaN(f)) return "nan";
  if (!Number.isFinite(f)) return f > 0 ? "inf" : "-inf";
  const sign = f < 0 || Object.is(f, -0) ? "-" : "";
  const [mantissa, exp] = Math.abs(f).toExponential().split("e");
  const exponent = parseInt(exp, 10);
  const digits = mantissa.replace(".", "");
  if (exponent >= -4 && exponent < 16) {
    if (exponent >= 0) {
      const point = exponent + 1;
      const whole = digits.slice(0, point).padEnd(point, "0");
      const frac = digits.length > point ? digits.slice(point) : "0";
      return sign + whole + "." + frac;
    }
    return sign + "0." + "0".repeat(-exponent - 1) + digits;
  }
  const rest = digits.length > 1 ? "." + digits.slice(1) : "";
  const mag = String(Math.abs(exponent)).padStart(2, "0");
  return sign + digits[0] + rest + "e" + (exponent < 0 ? "-" : "+") + mag;
}

function uc_quote(s) {
  let out = '"';
  for (const c of s) {
    if (c === '"') out += '\\"';
    else if (c === "\\") out += "\\\\";
    else if (c === "\n") out += "\\n";
    else if (c === "\t") out += "\\t";
    else if (c === "\r") out += "\\r";
    else out += c;
  }
  return out + '"';
}

function uc_render(a, nested) {
  switch (uc_type(a)) {
    case "none": return "none";
    case "bool": return a ? "true" : "false";
    case "int": return a.toString();
    case "float": return uc_format_float(a);
    case "string": return nested ? uc_quote(a) : a;
    case "list": return "[" + a.map((x) => uc_render(x, true)).join(", ") + "]";
    default:
      return "{" + a.keys.map((k, i) => uc_render(k, true) + ": " + uc_render(a.vals[i], true)).join(", ") + "}";
  }
}

function uc_format(a) {
  return uc_render(a, false);
}

function uc_need_num(a, b, op) {
  if (!uc_is_num(a) || !uc_is_num(b)) {
    uc_fail("unsupported operands for " + op + ": " + uc_type(a) + " and " + uc_type(b));
  }
}

function uc_add(a, b) {
  if (typeof a === "bigint" && typeof b === "bigint") return uc_checked(a + b);
  if (typeof a === "string" && typeof b === "string") return a + b;
  if (Array.isArray(a) && Array.isArray(b)) return a.concat(b);
  uc_need_num(a, b, "+");
  return Number(a) + Number(b);
}

function uc_sub(a, b) {
  if (typeof a === "bigint" && typeof b === "bigint") return uc_checked(a - b);
  uc_need_num(a, b, "-");
  return Number(a) - Number(b);
}

function uc_mul(a, b) {
  if (typeof a === "bigint" && typeof b === "bigint") return uc_checked(a * b);
  uc_need_num(a, b, "*");
  return Number(a) * Number(b);
}

function uc_div(a, b) {
  uc_need_num(a, b, "/");
  if (Number(b) === 0) uc_fail("division by zero");
  return Number(a) / Number(b);
}

function uc_mod(a, b) {
  uc_need_num(a, b, "MOD");
  if (Number(b) === 0) uc_fail("modulo by zero");
  if (typeof a === "bigint" && typeof b === "bigint") {
    let r = a % b;
    if (r !== 0n && (r < 0n) !== (b < 0n)) r += b;
    return r;
  }
  const x = Number(a), y = Number(b);
  let r = x % y;
  if (r !== 0 && (r < 0) !== (y < 0)) r += y;
  if (r === 0) r = y < 0 ? -0 : 0;
  return r;
}

function uc_neg(a) {
  if (typeof a === "bigint") return uc_checked(-a);
  if (typeof a === "number") return -a;
  uc_fail("cannot negate " + uc_type(a));
}

function uc_not(a) { return !uc_truthy(a); }
function uc_eq(a, b) { return uc_equal(a, b); }
function uc_ne(a, b) { return !uc_equal(a, b); }
function uc_lt(a, b) { return uc_compare(a, b) < 0; }
function uc_le(a, b) { return uc_compare(a, b) <= 0; }
function uc_gt(a, b) { return uc_compare(a, b) > 0; }
function uc_ge(a, b) { return uc_compare(a, b) >= 0; }

function uc_need_int(a, what) {
  if (typeof a === "bigint") return a;
  if (typeof a === "boolean") return a ? 1n : 0n;
  uc_fail(what + " must be an integer, not " + uc_type(a));
}

function uc_position(i, n) {
  const j = i < 0n ? i + BigInt(n) : i;
  if (j < 0n || j >= BigInt(n)) uc_fail("index " + i + " out of range");
  return Number(j);
}

function uc_check_key(key) {
  const t = uc_type(key);
  if (t === "list" || t === "map") uc_fail("unhashable map key: " + t);
}

function uc_find(m, key) {
  for (let i = 0; i < m.keys.length; i++) if (uc_equal(m.keys[i], key)) return i;
  return -1;
}

function uc_index(c, i) {
  const t = uc_type(c);
  if (t === "list") return c[uc_position(uc_need_int(i, "list index"), c.length)];
  if (t === "string") {
    const chars = uc_chars(c);
    return chars[uc_position(uc_need_int(i, "string index"), chars.length)];
  }
  if (t === "map") {
    uc_check_key(i);
    const j = uc_find(c, i);
    if (j < 0) uc_fail("missing map key " + uc_render(i, true));
    return c.vals[j];
  }
  uc_fail("cannot index " + t);
}

function uc_set_index(c, i, v) {
  const t = uc_type(c);
  if (t === "list") {
    c[uc_position(uc_need_int(i, "list index"), c.length)] = v;
  } else if (t === "map") {
    uc_check_key(i);
    const j = uc_find(c, i);
    if (j >= 0) c.vals[j] = v;
    else {
      c.keys.push(i);
      c.vals.push(v);
    }
  } else {
    uc_fail("cannot assign into " + t);
  }
}

function uc_step(s) {
  if (typeof s !== "bigint") uc_fail("FOR loop bounds must be integers");
  if (s === 0n) uc_fail("FOR loop step must not be zero");
  return s;
}

function uc_range_ok(i, to, step) {
  if (typeof i !== "bigint" || typeof to !== "bigint") uc_fail("FOR loop bounds must be integers");
  return step > 0n ? i <= to : i >= to;
}

function uc_iter(c) {
  const t = uc_type(c);
  if (t === "list") return c;
  if (t === "string") return uc_chars(c);
  if (t === "map") return c.keys.slice();
  uc_fail("cannot iterate over " + t);
}

function uc_output(a) {
  process.stdout.write(uc_format(a) + "\n");
}

let uc_lines = null;
function uc_input() {
  if (uc_lines === null) {
    const text = require("fs").readFileSync(0, "utf8");
    uc_lines = text.split("\n");
    if (uc_lines[uc_lines.length - 1] === "") uc_lines.pop();
  }
  if (uc_lines.length === 0) return null;
  return uc_lines.shift().replace(/\r$/, "");
}

function uc_length(a) {
  const t = uc_type(a);
  if (t === "string") return BigInt(uc_chars(a).length);
  if (t === "list") return BigInt(a.length);
  if (t === "map") return BigInt(a.keys.length);
  uc_fail("LENGTH of " + t);
}

function uc_append(l, v) {
  if (!Array.isArray(l)) uc_fail("APPEND to " + uc_type(l));
  l.push(v);
  return null;
}

function uc_remove_at(l, i) {
  if (!Array.isArray(l)) uc_fail("REMOVE_AT from " + uc_type(l));
  const j = uc_position(uc_need_int(i, "list index"), l.length);
  return l.splice(j, 1)[0];
}

function uc_slice(a, b, n) {
  const clamp = (i) => {
    let j = Number(i < 0n ? i + BigInt(n) : i);
    return Math.min(Math.max(j, 0), n);
  };
  const lo = clamp(uc_need_int(a, "slice bound"));
  const hi = clamp(uc_need_int(b, "slice bound"));
  return [lo, Math.max(lo, hi)];
}

function uc_substring(s, a, b) {
  const t = uc_type(s);
  if (t === "string") {
    const chars = uc_chars(s);
    const [lo, hi] = uc_slice(a, b, chars.length);
    return chars.slice(lo, hi).join("");
  }
  if (t === "list") {
    const [lo, hi] = uc_slice(a, b, s.length);
    return s.slice(lo, hi);
  }
  uc_fail("SUBSTRING of " + t);
}

function uc_to_string(a) {
  return uc_format(a);
}

function uc_to_int(a) {
  const t = uc_type(a);
  if (t === "int") return a;
  if (t === "bool") return a ? 1n : 0n;
  if (t === "float") {
    if (!Number.isFinite(a)) uc_fail("cannot convert float to int");
    return uc_checked(BigInt(Math.trunc(a)));
  }
  if (t === "string") {
    const s = a.trim();
    if (!/^[+-]?[0-9]+$/.test(s)) uc_fail("invalid integer literal: " + a);
    return uc_checked(BigInt(s.replace(/^\+/, "")));
  }
  uc_fail("TO_INT of " + t);
}

function uc_floor(a) {
  const t = uc_type(a);
  if (t === "int") return a;
  if (t === "float") return uc_to_int(Math.floor(a));
  if (t === "bool") return uc_to_int(a);
  uc_fail("FLOOR of " + t);
}

function uc_max(a, b) { return uc_compare(b, a) > 0 ? b : a; }
function uc_min(a, b) { return uc_compare(b, a) < 0 ? b : a; }

function uc_abs(a) {
  if (typeof a === "bigint") return a < 0n ? uc_neg(a) : a;
  if (typeof a === "number") return Math.abs(a);
  uc_fail("ABS of " + uc_type(a));
}

function uc_sorted(a) {
  return uc_iter(a).slice().sort(uc_compare);
}

function uc_contains(c, v) {
  const t = uc_type(c);
  if (t === "list") return c.some((x) => uc_equal(x, v));
  if (t === "string") {
    if (typeof v !== "string") uc_fail("CONTAINS on a string needs a string");
    return c.includes(v);
  }
  if (t === "map") {
    uc_check_key(v);
    return uc_find(c, v) >= 0;
  }
  uc_fail("CONTAINS on " + t);
}

function uc_keys(m) {
  if (uc_type(m) !== "map") uc_fail("KEYS of " + uc_type(m));
  return m.keys.slice();
}

function uc_get(m, k) {
  if (uc_type(m) !== "map") uc_fail("GET from " + uc_type(m));
  uc_check_key(k);
  const j = uc_find(m, k);
  return j < 0 ? null : m.vals[j];
}

function uc_put(m, k, v) {
  if (uc_type(m) !== "map") uc_fail("PUT into " + uc_type(m));
  uc_set_index(m, k, v);
  return null;
}

function uc_new_map() {
  return new UcMap();
}
// unicode-runtime: end
