// unicode-runtime: begin
import java.io.BufferedReader;
import java.io.IOException;
import java.io.InputStreamReader;
import java.math.BigDecimal;
import java.nio.charset.StandardCharsets;
import java.util.ArrayList;
import java.util.Arrays;

final class Value {
    static final int NONE = 0, BOOL = 1, INT = 2, FLOAT = 3, STR = 4, LIST = 5, MAP = 6;
    static final Value NULL = new Value(NONE);
    static final Value TRUE = new Value(BOOL);
    static final Value FALSE = new Value(BOOL);

    final int tag;
    long i;
    double f;
    String s;
    ArrayList<Value> items;
    ArrayList<Value> keys;

    private Value(int tag) {
        this.tag = tag;
    }

    static Value ofBool(boolean b) {
        return b ? TRUE : FALSE;
    }

    static Value ofInt(long i) {
        Value v = new Value(INT);
        v.i = i;
        return v;
    }

    static Value ofFloat(double f) {
        Value v = new Value(FLOAT);
        v.f = f;
        return v;
    }

    static Value ofStr(String s) {
        Value v = new Value(STR);
        v.s = s;
        return v;
    }

    static Value ofList(ArrayList<Value> items) {
        Value v = new Value(LIST);
        v.items = items;
        return v;
    }

    static Value newMap() {
        Value v = new Value(MAP);
        v.keys = new ArrayList<>();
        v.items = new ArrayList<>();
        return v;
    }
}

final class UcError extends RuntimeException {
    UcError(String message) {
        super(message);
    }
}

public class Main {
    static final BufferedReader uc_stdin = new BufferedReader(new InputStreamReader(System.in, StandardCharsets.UTF_8));

    static Value uc_fail(String message) {
        System.out.flush();
        System.err.println("runtime error: " + message);
        System.exit(1);
        throw new UcError(message);
    }

    static String uc_type(Value a) {
        switch (a.tag) {
            case Value.NONE: return "none";
            case Value.BOOL: return "bool";
            case Value.INT: return "int";
            case Value.FLOAT: return "float";
            case Value.STR: return "string";
            case Value.LIST: return "list";
            default: return "map";
        }
    }

    static Value uc_list(Value... items) {
        return Value.ofList(new ArrayList<>(Arrays.asList(items)));
    }

    static Value uc_new_map() {
        return Value.newMap();
    }

    static boolean uc_is_num(Value a) {
        return a.tag == Value.INT || a.tag == Value.FLOAT;
    }

    static double uc_num(Value a) {
        return a.tag == Value.INT ? (double) a.i : a.f;
    }

    static int[] uc_chars(String s) {
        return s.codePoints().toArray();
    }

    static boolean uc_truthy(Value a) {
        switch (a.tag) {
            case Value.NONE: return false;
            case Value.BOOL: return a == Value.TRUE;
            case Value.INT: return a.i != 0;
            case Value.FLOAT: return a.f != 0.0;
            case Value.STR: return !a.s.isEmpty();
            case Value.LIST: return !a.items.isEmpty();
            default: return !a.keys.isEmpty();
        }
    }

    static boolean uc_equal(Value a, Value b) {
        if (a.tag == Value.INT && b.tag == Value.INT) return a.i == b.i;
        if (uc_is_num(a) && uc_is_num(b)) return uc_num(a) == uc_num(b);
        if (a.tag != b.tag) return false;
        switch (a.tag) {
            case Value.NONE: return true;
            case Value.BOOL: return a == b;
            case Value.STR: return a.s.equals(b.s);
            case Value.LIST: {
                if (a.items.size() != b.items.size()) return false;
                for (int k = 0; k < a.items.size(); k++)
                    if (!uc_equal(a.items.get(k), b.items.get(k))) return false;
                return true;
            }
            default: {
                if (a.keys.size() != b.keys.size()) return false;
                for (int k = 0; k < a.keys.size(); k++) {
                    int j = uc_find(b, a.keys.get(k));
                    if (j < 0 || !uc_equal(a.items.get(k), b.items.get(j))) return false;
                }
                return true;
            }
        }
    }

    static int uc_compare(Value a, Value b) {
        if (a.tag == Value.INT && b.tag == Value.INT) return Long.compare(a.i, b.i);
        if (uc_is_num(a) && uc_is_num(b)) {
            double x = uc_num(a), y = uc_num(b);
            return x < y ? -1 : x > y ? 1 : 0;
        }
        if (a.tag == Value.STR && b.tag == Value.STR) {
            int[] x = uc_chars(a.s), y = uc_chars(b.s);
            for (int k = 0; k < x.length && k < y.length; k++)
                if (x[k] != y[k]) return x[k] < y[k] ? -1 : 1;
            return Integer.compare(x.length, y.length);
        }
        if (a.tag == Value.BOOL && b.tag == Value.BOOL) return Boolean.compare(a == Value.TRUE, b == Value.TRUE);
        if (a.tag == Value.LIST && b.tag == Value.LIST) {
            for (int k = 0; k < a.items.size() && k < b.items.size(); k++) {
                if (uc_equal(a.items.get(k), b.items.get(k))) continue;
                return uc_compare(a.items.get(k), b.items.get(k));
            }
            return Integer.compare(a.items.size(), b.items.size());
        }
        uc_fail("cannot order " + uc_type(a) + " and " + uc_type(b));
        return 0;
    }

    static String uc_format_float(double f) {
        if (Double.isNaN(f)) return "nan";
        if (Double.isInfinite(f)) return f > 0 ? "inf" : "-inf";
        String sign = (Double.doubleToRawLongBits(f) < 0) ? "-" : "";
        String digits;
        int exponent;
        if (f == 0.0) {
            digits = "0";
            exponent = 0;
        } else {
            BigDecimal d = new BigDecimal(Double.toString(Math.abs(f))).stripTrailingZeros();
            digits = d.unscaledValue().toString();
            exponent = digits.length() - 1 - d.scale();
        }
        StringBuilder body = new StringBuilder();
        if (exponent >= -4 && exponent < 16) {
            if (exponent >= 0) {
                int point = exponent + 1;
                String whole = digits.length() > point ? digits.substring(0, point) : digits;
                body.append(whole);
                for (int k = whole.length(); k < point; k++) body.append('0');
                body.append('.').append(digits.length() > point ? digits.substring(point) : "0");
            } else {
                body.append("0.");
                for (int k = 0; k < -exponent - 1; k++) body.append('0');
                body.append(digits);
            }
        } else {
            body.append(digits.charAt(0));
            if (digits.length() > 1) body.append('.').append(digits.substring(1));
            body.append(String.format("e%s%02d", exponent < 0 ? "-" : "+", Math.abs(exponent)));
        }
        return sign + body;
    }

    static String uc_quote(String s) {
        StringBuilder out = new StringBuilder("\"");
        for (int k = 0; k < s.length(); k++) {
            char c = s.charAt(k);
            switch (c) {
                case '"': out.append("\\\""); break;
                case '\\': out.append("\\\\"); break;
                case '\n': out.append("\\n"); break;
                case '\t': out.append("\\t"); break;
                case '\r': out.append("\\r"); break;
                default: out.append(c);
            }
        }
        return out.append('"').toString();
    }

    static String uc_render(Value a, boolean nested) {
        switch (a.tag) {
            case Value.NONE: return "none";
            case Value.BOOL: return a == Value.TRUE ? "true" : "false";
            case Value.INT: return Long.toString(a.i);
            case Value.FLOAT: return uc_format_float(a.f);
            case Value.STR: return nested ? uc_quote(a.s) : a.s;
            case Value.LIST: {
                StringBuilder out = new StringBuilder("[");
                for (int k = 0; k < a.items.size(); k++) {
                    if (k > 0) out.append(", ");
                    out.append(uc_render(a.items.get(k), true));
                }
                return out.append(']').toString();
            }
            default: {
                StringBuilder out = new StringBuilder("{");
                for (int k = 0; k < a.keys.size(); k++) {
                    if (k > 0) out.append(", ");
                    out.append(uc_render(a.keys.get(k), true)).append(": ").append(uc_render(a.items.get(k), true));
                }
                return out.append('}').toString();
            }
        }
    }

    static String uc_format(Value a) {
        return uc_render(a, false);
    }

    static void uc_need_num(Value a, Value b, String op) {
        if (!uc_is_num(a) || !uc_is_num(b))
            uc_fail("unsupported operands for " + op + ": " + uc_type(a) + " and " + uc_type(b));
    }

    static Value uc_add(Value a, Value b) {
        if (a.tag == Value.INT && b.tag == Value.INT) {
            try {
                return Value.ofInt(Math.addExact(a.i, b.i));
            } catch (ArithmeticException e) {
                return uc_fail("integer overflow");
            }
        }
        if (a.tag == Value.STR && b.tag == Value.STR) return Value.ofStr(a.s + b.s);
        if (a.tag == Value.LIST && b.tag == Value.LIST) {
            ArrayList<Value> items = new ArrayList<>(a.items);
            items.addAll(b.items);
            return Value.ofList(items);
        }
        uc_need_num(a, b, "+");
        return Value.ofFloat(uc_num(a) + uc_num(b));
    }

    static Value uc_sub(Value a, Value b) {
        if (a.tag == Value.INT && b.tag == Value.INT) {
            try {
                return Value.ofInt(Math.subtractExact(a.i, b.i));
            } catch (ArithmeticException e) {
                return uc_fail("integer overflow");
            }
        }
        uc_need_num(a, b, "-");
        return Value.ofFloat(uc_num(a) - uc_num(b));
    }

    static Value uc_mul(Value a, Value b) {
        if (a.tag == Value.INT && b.tag == Value.INT) {
            try {
                return Value.ofInt(Math.multiplyExact(a.i, b.i));
            } catch (ArithmeticException e) {
                return uc_fail("integer overflow");
            }
        }
        uc_need_num(a, b, "*");
        return Value.ofFloat(uc_num(a) * uc_num(b));
    }

    static Value uc_div(Value a, Value b) {
        uc_need_num(a, b, "/");
        if (uc_num(b) == 0.0) uc_fail("division by zero");
        return Value.ofFloat(uc_num(a) / uc_num(b));
    }

    static Value uc_mod(Value a, Value b) {
        uc_need_num(a, b, "MOD");
        if (uc_num(b) == 0.0) uc_fail("modulo by zero");
        if (a.tag == Value.INT && b.tag == Value.INT) return Value.ofInt(Math.floorMod(a.i, b.i));
        double x = uc_num(a), y = uc_num(b);
        double r = x % y;
        if (r != 0.0 && ((r < 0) != (y < 0))) r += y;
        if (r == 0.0) r = Math.copySign(0.0, y);
        return Value.ofFloat(r);
    }

    static Value uc_neg(Value a) {
        if (a.tag == Value.INT) {
            if (a.i == Long.MIN_VALUE) return uc_fail("integer overflow");
            return Value.ofInt(-a.i);
        }
        if (a.tag == Value.FLOAT) return Value.ofFloat(-a.f);
        return uc_fail("cannot negate " + uc_type(a));
    }

    static Value uc_not(Value a) { return Value.ofBool(!uc_truthy(a)); }
    static Value uc_eq(Value a, Value b) { return Value.ofBool(uc_equal(a, b)); }
    static Value uc_ne(Value a, Value b) { return Value.ofBool(!uc_equal(a, b)); }
    static Value uc_lt(Value a, Value b) { return Value.ofBool(uc_compare(a, b) < 0); }
    static Value uc_le(Value a, Value b) { return Value.ofBool(uc_compare(a, b) <= 0); }
    static Value uc_gt(Value a, Value b) { return Value.ofBool(uc_compare(a, b) > 0); }
    static Value uc_ge(Value a, Value b) { return Value.ofBool(uc_compare(a, b) >= 0); }

    static long uc_need_int(Value a, String what) {
        if (a.tag == Value.INT) return a.i;
        if (a.tag == Value.BOOL) return a == Value.TRUE ? 1 : 0;
        uc_fail(what + " must be an integer, not " + uc_type(a));
        return 0;
    }

    static int uc_position(long i, int n) {
        long j = i < 0 ? i + n : i;
        if (j < 0 || j >= n) uc_fail("index " + i + " out of range");
        return (int) j;
    }

    static void uc_check_key(Value key) {
        if (key.tag == Value.LIST || key.tag == Value.MAP) uc_fail("unhashable map key: " + uc_type(key));
    }

    static int uc_find(Value m, Value key) {
        for (int k = 0; k < m.keys.size(); k++)
            if (uc_equal(m.keys.get(k), key)) return k;
        return -1;
    }

    static Value uc_index(Value c, Value i) {
        if (c.tag == Value.LIST) return c.items.get(uc_position(uc_need_int(i, "list index"), c.items.size()));
        if (c.tag == Value.STR) {
            int[] chars = uc_chars(c.s);
            return Value.ofStr(new String(chars, uc_position(uc_need_int(i, "string index"), chars.length), 1));
        }
        if (c.tag == Value.MAP) {
            uc_check_key(i);
            int j = uc_find(c, i);
            if (j < 0) uc_fail("missing map key " + uc_render(i, true));
            return c.items.get(j);
        }
        return uc_fail("cannot index " + uc_type(c));
    }

    static void uc_set_index(Value c, Value i, Value v) {
        if (c.tag == Value.LIST) {
            c.items.set(uc_position(uc_need_int(i, "list index"), c.items.size()), v);
        } else if (c.tag == Value.MAP) {
            uc_check_key(i);
            int j = uc_find(c, i);
            if (j >= 0) {
                c.items.set(j, v);
            } else {
                c.keys.add(i);
                c.items.add(v);
            }
        } else {
            uc_fail("cannot assign into " + uc_type(c));
        }
    }

    static Value uc_step(Value s) {
        if (s.tag != Value.INT) uc_fail("FOR loop bounds must be integers");
        if (s.i == 0) uc_fail("FOR loop step must not be zero");
        return s;
    }

    static boolean uc_range_ok(Value i, Value to, Value step) {
        if (i.tag != Value.INT || to.tag != Value.INT) uc_fail("FOR loop bounds must be integers");
        return step.i > 0 ? i.i <= to.i : i.i >= to.i;
    }

    static Value uc_iter(Value c) {
        if (c.tag == Value.LIST) return c;
        ArrayList<Value> items = new ArrayList<>();
        if (c.tag == Value.STR) {
            for (int cp : uc_chars(c.s)) items.add(Value.ofStr(new String(Character.toChars(cp))));
        } else if (c.tag == Value.MAP) {
            items.addAll(c.keys);
        } else {
            uc_fail("cannot iterate over " + uc_type(c));
        }
        return Value.ofList(items);
    }

    static void uc_output(Value a) {
        System.out.print(uc_format(a) + "\n");
    }

    static Value uc_input() {
        try {
            String line = uc_stdin.readLine();
            if (line == null) return Value.NULL;
            return Value.ofStr(line);
        } catch (IOException e) {
            return Value.NULL;
        }
    }

    static Value uc_length(Value a) {
        if (a.tag == Value.STR) return Value.ofInt(uc_chars(a.s).length);
        if (a.tag == Value.LIST) return Value.ofInt(a.items.size());
        if (a.tag == Value.MAP) return Value.ofInt(a.keys.size());
        return uc_fail("LENGTH of " + uc_type(a));
    }

    static Value uc_append(Value l, Value v) {
        if (l.tag != Value.LIST) uc_fail("APPEND to " + uc_type(l));
        l.items.add(v);
        return Value.NULL;
    }

    static Value uc_remove_at(Value l, Value i) {
        if (l.tag != Value.LIST) uc_fail("REMOVE_AT from " + uc_type(l));
        return l.items.remove(uc_position(uc_need_int(i, "list index"), l.items.size()));
    }

    static int uc_clamp(long i, int n) {
        if (i < 0) i += n;
        if (i < 0) i = 0;
        if (i > n) i = n;
        return (int) i;
    }

    static Value uc_substring(Value s, Value a, Value b) {
        if (s.tag == Value.STR) {
            int[] chars = uc_chars(s.s);
            int lo = uc_clamp(uc_need_int(a, "slice bound"), chars.length);
            int hi = Math.max(lo, uc_clamp(uc_need_int(b, "slice bound"), chars.length));
            return Value.ofStr(new String(chars, lo, hi - lo));
        }
        if (s.tag == Value.LIST) {
            int lo = uc_clamp(uc_need_int(a, "slice bound"), s.items.size());
            int hi = Math.max(lo, uc_clamp(uc_need_int(b, "slice bound"), s.items.size()));
            return Value.ofList(new ArrayList<>(s.items.subList(lo, hi)));
        }
        return uc_fail("SUBSTRING of " + uc_type(s));
    }

    static Value uc_to_string(Value a) {
        return Value.ofStr(uc_format(a));
    }

    static Value uc_to_int(Value a) {
        if (a.tag == Value.INT) return a;
        if (a.tag == Value.BOOL) return Value.ofInt(a == Value.TRUE ? 1 : 0);
        if (a.tag == Value.FLOAT) {
            double t = a.f < 0 ? Math.ceil(a.f) : Math.floor(a.f);
            if (Double.isNaN(t) || Double.isInfinite(t) || t >= 9223372036854775808.0 || t < -9223372036854775808.0)
                uc_fail("cannot convert float to int");
            return Value.ofInt((long) t);
        }
        if (a.tag == Value.STR) {
            String t = a.s.strip();
            if (!t.matches("[+-]?[0-9]+")) uc_fail("invalid integer literal: " + a.s);
            try {
                return Value.ofInt(Long.parseLong(t.startsWith("+") ? t.substring(1) : t));
            } catch (NumberFormatException e) {
                return uc_fail("integer overflow");
            }
        }
        return uc_fail("TO_INT of " + uc_type(a));
    }

    static Value uc_floor(Value a) {
        if (a.tag == Value.INT) return a;
        if (a.tag == Value.FLOAT) return uc_to_int(Value.ofFloat(Math.floor(a.f)));
        if (a.tag == Value.BOOL) return uc_to_int(a);
        return uc_fail("FLOOR of " + uc_type(a));
    }

    static Value uc_max(Value a, Value b) { return uc_compare(b, a) > 0 ? b : a; }
    static Value uc_min(Value a, Value b) { return uc_compare(b, a) < 0 ? b : a; }

    static Value uc_abs(Value a) {
        if (a.tag == Value.INT) return a.i < 0 ? uc_neg(a) : a;
        if (a.tag == Value.FLOAT) return Value.ofFloat(Math.abs(a.f));
        return uc_fail("ABS of " + uc_type(a));
    }

    static Value uc_sorted(Value a) {
        ArrayList<Value> items = new ArrayList<>(uc_iter(a).items);
        items.sort(Main::uc_compare);
        return Value.ofList(items);
    }

    static Value uc_contains(Value c, Value v) {
        if (c.tag == Value.LIST) {
            for (Value item : c.items)
                if (uc_equal(item, v)) return Value.TRUE;
            return Value.FALSE;
        }
        if (c.tag == Value.STR) {
            if (v.tag != Value.STR) uc_fail("CONTAINS on a string needs a string");
            return Value.ofBool(c.s.contains(v.s));
        }
        if (c.tag == Value.MAP) {
            uc_check_key(v);
            return Value.ofBool(uc_find(c, v) >= 0);
        }
        return uc_fail("CONTAINS on " + uc_type(c));
    }

    static Value uc_keys(Value m) {
        if (m.tag != Value.MAP) uc_fail("KEYS of " + uc_type(m));
        return uc_iter(m);
    }

    static Value uc_get(Value m, Value k) {
        if (m.tag != Value.MAP) uc_fail("GET from " + uc_type(m));
        uc_check_key(k);
        int j = uc_find(m, k);
        return j < 0 ? Value.NULL : m.items.get(j);
    }

    static Value uc_put(Value m, Value k, Value v) {
        if (m.tag != Value.MAP) uc_fail("PUT into " + uc_type(m));
        uc_set_index(m, k, v);
        return Value.NULL;
    }
// unicode-runtime: end
