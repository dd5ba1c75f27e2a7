// unicode-runtime: begin
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

struct Value;
using List = std::vector<Value>;
using Map = std::vector<std::pair<Value, Value>>;

struct Value {
    std::variant<std::monostate, bool, int64_t, double, std::string, std::shared_ptr<List>, std::shared_ptr<Map>> v;
};

[[noreturn]] static void uc_fail(const std::string& message) {
    std::fflush(stdout);
    std::cerr << "runtime error: " << message << std::endl;
    std::exit(1);
}

static Value uc_int(int64_t i) { Value r; r.v = i; return r; }
static Value uc_float(double f) { Value r; r.v = f; return r; }
static Value uc_bool(bool b) { Value r; r.v = b; return r; }
static Value uc_str(const std::string& s) { Value r; r.v = s; return r; }
static Value uc_list(List items) { Value r; r.v = std::make_shared<List>(std::move(items)); return r; }
static Value uc_new_map() { Value r; r.v = std::make_shared<Map>(); return r; }

static bool uc_is_none(const Value& a) { return a.v.index() == 0; }
static bool uc_is_bool(const Value& a) { return a.v.index() == 1; }
static bool uc_is_int(const Value& a) { return a.v.index() == 2; }
static bool uc_is_float(const Value& a) { return a.v.index() == 3; }
static bool uc_is_str(const Value& a) { return a.v.index() == 4; }
static bool uc_is_list(const Value& a) { return a.v.index() == 5; }
static bool uc_is_map(const Value& a) { return a.v.index() == 6; }
static bool uc_is_num(const Value& a) { return uc_is_int(a) || uc_is_float(a); }
static int64_t uc_i(const Value& a) { return std::get<int64_t>(a.v); }
static double uc_f(const Value& a) { return uc_is_int(a) ? (double)uc_i(a) : std::get<double>(a.v); }
static const std::string& uc_s(const Value& a) { return std::get<std::string>(a.v); }
static List& uc_l(const Value& a) { return *std::get<std::shared_ptr<List>>(a.v); }
static Map& uc_m(const Value& a) { return *std::get<std::shared_ptr<Map>>(a.v); }

static const char* uc_type(const Value& a) {
    static const char* names[] = {"none", "bool", "int", "float", "string", "list", "map"};
    return names[a.v.index()];
}

static std::vector<std::string> uc_chars(const std::string& s) {
    std::vector<std::string> out;
    for (size_t i = 0; i < s.size();) {
        unsigned char c = (unsigned char)s[i];
        size_t n = c < 0x80 ? 1 : c < 0xE0 ? 2 : c < 0xF0 ? 3 : 4;
        out.push_back(s.substr(i, n));
        i += n;
    }
    return out;
}

static bool uc_truthy(const Value& a) {
    switch (a.v.index()) {
        case 0: return false;
        case 1: return std::get<bool>(a.v);
        case 2: return uc_i(a) != 0;
        case 3: return std::get<double>(a.v) != 0.0;
        case 4: return !uc_s(a).empty();
        case 5: return !uc_l(a).empty();
        default: return !uc_m(a).empty();
    }
}

static bool uc_equal(const Value& a, const Value& b) {
    if (uc_is_num(a) && uc_is_num(b)) {
        if (uc_is_int(a) && uc_is_int(b)) return uc_i(a) == uc_i(b);
        return uc_f(a) == uc_f(b);
    }
    if (a.v.index() != b.v.index()) return false;
    switch (a.v.index()) {
        case 0: return true;
        case 1: return std::get<bool>(a.v) == std::get<bool>(b.v);
        case 4: return uc_s(a) == uc_s(b);
        case 5: {
            const List& x = uc_l(a);
            const List& y = uc_l(b);
            if (x.size() != y.size()) return false;
            for (size_t i = 0; i < x.size(); i++)
                if (!uc_equal(x[i], y[i])) return false;
            return true;
        }
        default: {
            const Map& x = uc_m(a);
            const Map& y = uc_m(b);
            if (x.size() != y.size()) return false;
            for (const auto& kv : x) {
                bool found = false;
                for (const auto& other : y)
                    if (uc_equal(kv.first, other.first)) { found = uc_equal(kv.second, other.second); break; }
                if (!found) return false;
            }
            return true;
        }
    }
}

static int uc_compare(const Value& a, const Value& b) {
    if (uc_is_num(a) && uc_is_num(b)) {
        if (uc_is_int(a) && uc_is_int(b)) return uc_i(a) < uc_i(b) ? -1 : uc_i(a) > uc_i(b) ? 1 : 0;
        double x = uc_f(a), y = uc_f(b);
        return x < y ? -1 : x > y ? 1 : 0;
    }
    if (uc_is_str(a) && uc_is_str(b)) {
        int c = uc_s(a).compare(uc_s(b));
        return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    if (uc_is_list(a) && uc_is_list(b)) {
        const List& x = uc_l(a);
        const List& y = uc_l(b);
        for (size_t i = 0; i < x.size() && i < y.size(); i++) {
            if (uc_equal(x[i], y[i])) continue;
            return uc_compare(x[i], y[i]);
        }
        return x.size() < y.size() ? -1 : x.size() > y.size() ? 1 : 0;
    }
    if (uc_is_bool(a) && uc_is_bool(b)) return (int)std::get<bool>(a.v) - (int)std::get<bool>(b.v);
    uc_fail(std::string("cannot order ") + uc_type(a) + " and " + uc_type(b));
}

static std::string uc_format_float(double f) {
    if (std::isnan(f)) return "nan";
    if (std::isinf(f)) return f > 0 ? "inf" : "-inf";
    char buf[64];
    for (int precision = 1; precision <= 17; precision++) {
        std::snprintf(buf, sizeof buf, "%.*e", precision - 1, f);
        if (std::strtod(buf, nullptr) == f) break;
    }
    std::string text(buf);
    bool negative = text[0] == '-';
    if (negative) text = text.substr(1);
    size_t e = text.find('e');
    std::string mantissa = text.substr(0, e);
    int exponent = std::atoi(text.c_str() + e + 1);
    std::string digits;
    for (char c : mantissa)
        if (c != '.') digits += c;
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::string out;
    if (exponent >= -4 && exponent < 16) {
        if (exponent >= 0) {
            std::string whole = digits.substr(0, std::min(digits.size(), (size_t)exponent + 1));
            while ((int)whole.size() < exponent + 1) whole += '0';
            std::string frac = digits.size() > (size_t)exponent + 1 ? digits.substr(exponent + 1) : "0";
            out = whole + "." + frac;
        } else {
            out = "0." + std::string(-exponent - 1, '0') + digits;
        }
    } else {
        out = digits.substr(0, 1);
        if (digits.size() > 1) out += "." + digits.substr(1);
        char exp[16];
        std::snprintf(exp, sizeof exp, "e%c%02d", exponent < 0 ? '-' : '+', std::abs(exponent));
        out += exp;
    }
    return (negative ? "-" : "") + out;
}

static std::string uc_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    return out + "\"";
}

static std::string uc_format(const Value& a, bool nested = false) {
    switch (a.v.index()) {
        case 0: return "none";
        case 1: return std::get<bool>(a.v) ? "true" : "false";
        case 2: return std::to_string(uc_i(a));
        case 3: return uc_format_float(std::get<double>(a.v));
        case 4: return nested ? uc_quote(uc_s(a)) : uc_s(a);
        case 5: {
            std::string out = "[";
            const List& items = uc_l(a);
            for (size_t i = 0; i < items.size(); i++) out += (i ? ", " : "") + uc_format(items[i], true);
            return out + "]";
        }
        default: {
            std::string out = "{";
            const Map& entries = uc_m(a);
            for (size_t i = 0; i < entries.size(); i++)
                out += (i ? ", " : "") + uc_format(entries[i].first, true) + ": " + uc_format(entries[i].second, true);
            return out + "}";
        }
    }
}

static Value uc_checked(__int128 r) {
    if (r > std::numeric_limits<int64_t>::max() || r < std::numeric_limits<int64_t>::min()) uc_fail("integer overflow");
    return uc_int((int64_t)r);
}

static void uc_need_num(const Value& a, const Value& b, const char* op) {
    if (!uc_is_num(a) || !uc_is_num(b))
        uc_fail(std::string("unsupported operands for ") + op + ": " + uc_type(a) + " and " + uc_type(b));
}

static Value uc_add(const Value& a, const Value& b) {
    if (uc_is_str(a) && uc_is_str(b)) return uc_str(uc_s(a) + uc_s(b));
    if (uc_is_list(a) && uc_is_list(b)) {
        List items = uc_l(a);
        items.insert(items.end(), uc_l(b).begin(), uc_l(b).end());
        return uc_list(items);
    }
    uc_need_num(a, b, "+");
    if (uc_is_int(a) && uc_is_int(b)) return uc_checked((__int128)uc_i(a) + uc_i(b));
    return uc_float(uc_f(a) + uc_f(b));
}

static Value uc_sub(const Value& a, const Value& b) {
    uc_need_num(a, b, "-");
    if (uc_is_int(a) && uc_is_int(b)) return uc_checked((__int128)uc_i(a) - uc_i(b));
    return uc_float(uc_f(a) - uc_f(b));
}

static Value uc_mul(const Value& a, const Value& b) {
    uc_need_num(a, b, "*");
    if (uc_is_int(a) && uc_is_int(b)) return uc_checked((__int128)uc_i(a) * uc_i(b));
    return uc_float(uc_f(a) * uc_f(b));
}

static Value uc_div(const Value& a, const Value& b) {
    uc_need_num(a, b, "/");
    if (uc_f(b) == 0.0) uc_fail("division by zero");
    return uc_float(uc_f(a) / uc_f(b));
}

static Value uc_mod(const Value& a, const Value& b) {
    uc_need_num(a, b, "MOD");
    if (uc_f(b) == 0.0) uc_fail("modulo by zero");
    if (uc_is_int(a) && uc_is_int(b)) {
        int64_t x = uc_i(a), y = uc_i(b);
        if (y == -1) return uc_int(0);
        int64_t r = x % y;
        if (r != 0 && ((r < 0) != (y < 0))) r += y;
        return uc_int(r);
    }
    double x = uc_f(a), y = uc_f(b);
    double r = std::fmod(x, y);
    if (r != 0.0 && ((r < 0) != (y < 0))) r += y;
    if (r == 0.0) r = std::copysign(0.0, y);
    return uc_float(r);
}

static Value uc_neg(const Value& a) {
    if (uc_is_int(a)) return uc_checked(-(__int128)uc_i(a));
    if (uc_is_float(a)) return uc_float(-std::get<double>(a.v));
    uc_fail(std::string("cannot negate ") + uc_type(a));
}

static Value uc_not(const Value& a) { return uc_bool(!uc_truthy(a)); }
static Value uc_eq(const Value& a, const Value& b) { return uc_bool(uc_equal(a, b)); }
static Value uc_ne(const Value& a, const Value& b) { return uc_bool(!uc_equal(a, b)); }
static Value uc_lt(const Value& a, const Value& b) { return uc_bool(uc_compare(a, b) < 0); }
static Value uc_le(const Value& a, const Value& b) { return uc_bool(uc_compare(a, b) <= 0); }
static Value uc_gt(const Value& a, const Value& b) { return uc_bool(uc_compare(a, b) > 0); }
static Value uc_ge(const Value& a, const Value& b) { return uc_bool(uc_compare(a, b) >= 0); }

static int64_t uc_need_int(const Value& a, const char* what) {
    if (uc_is_int(a)) return uc_i(a);
    if (uc_is_bool(a)) return std::get<bool>(a.v) ? 1 : 0;
    uc_fail(std::string(what) + " must be an integer, not " + uc_type(a));
}

static size_t uc_position(int64_t i, size_t length) {
    int64_t n = (int64_t)length;
    int64_t j = i < 0 ? i + n : i;
    if (j < 0 || j >= n) uc_fail("index " + std::to_string(i) + " out of range");
    return (size_t)j;
}

static Map::iterator uc_find(Map& m, const Value& key) {
    for (auto it = m.begin(); it != m.end(); ++it)
        if (uc_equal(it->first, key)) return it;
    return m.end();
}

static void uc_check_key(const Value& key) {
    if (uc_is_list(key) || uc_is_map(key)) uc_fail(std::string("unhashable map key: ") + uc_type(key));
}

static Value uc_index(const Value& c, const Value& i) {
    if (uc_is_list(c)) return uc_l(c)[uc_position(uc_need_int(i, "list index"), uc_l(c).size())];
    if (uc_is_str(c)) {
        std::vector<std::string> chars = uc_chars(uc_s(c));
        return uc_str(chars[uc_position(uc_need_int(i, "string index"), chars.size())]);
    }
    if (uc_is_map(c)) {
        uc_check_key(i);
        auto it = uc_find(uc_m(c), i);
        if (it == uc_m(c).end()) uc_fail("missing map key " + uc_format(i, true));
        return it->second;
    }
    uc_fail(std::string("cannot index ") + uc_type(c));
}

static void uc_set_index(const Value& c, const Value& i, const Value& v) {
    if (uc_is_list(c)) {
        uc_l(c)[uc_position(uc_need_int(i, "list index"), uc_l(c).size())] = v;
    } else if (uc_is_map(c)) {
        uc_check_key(i);
        Map& m = uc_m(c);
        auto it = uc_find(m, i);
        if (it == m.end()) m.emplace_back(i, v); else it->second = v;
    } else {
        uc_fail(std::string("cannot assign into ") + uc_type(c));
    }
}

static Value uc_step(const Value& s) {
    if (!uc_is_int(s)) uc_fail("FOR loop bounds must be integers");
    if (uc_i(s) == 0) uc_fail("FOR loop step must not be zero");
    return s;
}

static bool uc_range_ok(const Value& i, const Value& to, const Value& step) {
    if (!uc_is_int(i) || !uc_is_int(to)) uc_fail("FOR loop bounds must be integers");
    return uc_i(step) > 0 ? uc_i(i) <= uc_i(to) : uc_i(i) >= uc_i(to);
}

static Value uc_iter(const Value& c) {
    if (uc_is_list(c)) return c;
    List items;
    if (uc_is_str(c)) {
        for (const std::string& ch : uc_chars(uc_s(c))) items.push_back(uc_str(ch));
    } else if (uc_is_map(c)) {
        for (const auto& kv : uc_m(c)) items.push_back(kv.first);
    } else {
        uc_fail(std::string("cannot iterate over ") + uc_type(c));
    }
    return uc_list(items);
}

static void uc_output(const Value& a) { std::cout << uc_format(a) << "\n"; }

static Value uc_input() {
    std::string line;
    if (!std::getline(std::cin, line)) return Value();
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return uc_str(line);
}

static Value uc_length(const Value& a) {
    if (uc_is_str(a)) return uc_int((int64_t)uc_chars(uc_s(a)).size());
    if (uc_is_list(a)) return uc_int((int64_t)uc_l(a).size());
    if (uc_is_map(a)) return uc_int((int64_t)uc_m(a).size());
    uc_fail(std::string("LENGTH of ") + uc_type(a));
}

static Value uc_append(const Value& l, const Value& v) {
    if (!uc_is_list(l)) uc_fail(std::string("APPEND to ") + uc_type(l));
    uc_l(l).push_back(v);
    return Value();
}

static Value uc_remove_at(const Value& l, const Value& i) {
    if (!uc_is_list(l)) uc_fail(std::string("REMOVE_AT from ") + uc_type(l));
    List& items = uc_l(l);
    size_t j = uc_position(uc_need_int(i, "list index"), items.size());
    Value out = items[j];
    items.erase(items.begin() + (long)j);
    return out;
}

static std::pair<size_t, size_t> uc_slice(const Value& a, const Value& b, size_t n) {
    auto clamp = [n](int64_t i) -> size_t {
        int64_t len = (int64_t)n;
        if (i < 0) i += len;
        if (i < 0) i = 0;
        if (i > len) i = len;
        return (size_t)i;
    };
    size_t lo = clamp(uc_need_int(a, "slice bound"));
    size_t hi = clamp(uc_need_int(b, "slice bound"));
    return {lo, std::max(lo, hi)};
}

static Value uc_substring(const Value& s, const Value& a, const Value& b) {
    if (uc_is_str(s)) {
        std::vector<std::string> chars = uc_chars(uc_s(s));
        auto range = uc_slice(a, b, chars.size());
        std::string out;
        for (size_t i = range.first; i < range.second; i++) out += chars[i];
        return uc_str(out);
    }
    if (uc_is_list(s)) {
        auto range = uc_slice(a, b, uc_l(s).size());
        return uc_list(List(uc_l(s).begin() + (long)range.first, uc_l(s).begin() + (long)range.second));
    }
    uc_fail(std::string("SUBSTRING of ") + uc_type(s));
}

static Value uc_to_string(const Value& a) { return uc_str(uc_format(a)); }

static Value uc_to_int(const Value& a) {
    if (uc_is_int(a)) return a;
    if (uc_is_bool(a)) return uc_int(std::get<bool>(a.v) ? 1 : 0);
    if (uc_is_float(a)) {
        double f = std::trunc(std::get<double>(a.v));
        if (!std::isfinite(f) || f >= 9223372036854775808.0 || f < -9223372036854775808.0) uc_fail("cannot convert float to int");
        return uc_int((int64_t)f);
    }
    if (uc_is_str(a)) {
        std::string s = uc_s(a);
        size_t start = s.find_first_not_of(" \t\n\r\f\v");
        size_t end = s.find_last_not_of(" \t\n\r\f\v");
        if (start == std::string::npos) uc_fail("invalid integer literal");
        s = s.substr(start, end - start + 1);
        size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) uc_fail("invalid integer literal: " + uc_s(a));
        __int128 r = 0;
        for (; i < s.size(); i++) {
            if (s[i] < '0' || s[i] > '9') uc_fail("invalid integer literal: " + uc_s(a));
            r = r * 10 + (s[i] - '0');
            if (r > ((__int128)1 << 64)) uc_fail("integer overflow");
        }
        return uc_checked(s[0] == '-' ? -r : r);
    }
    uc_fail(std::string("TO_INT of ") + uc_type(a));
}

static Value uc_floor(const Value& a) {
    if (uc_is_int(a)) return a;
    if (uc_is_float(a)) return uc_to_int(uc_float(std::floor(std::get<double>(a.v))));
    if (uc_is_bool(a)) return uc_to_int(a);
    uc_fail(std::string("FLOOR of ") + uc_type(a));
}

static Value uc_max(const Value& a, const Value& b) { return uc_compare(b, a) > 0 ? b : a; }
static Value uc_min(const Value& a, const Value& b) { return uc_compare(b, a) < 0 ? b : a; }

static Value uc_abs(const Value& a) {
    if (uc_is_int(a)) return uc_i(a) < 0 ? uc_neg(a) : a;
    if (uc_is_float(a)) return uc_float(std::fabs(std::get<double>(a.v)));
    uc_fail(std::string("ABS of ") + uc_type(a));
}

static Value uc_sorted(const Value& a) {
    List items = uc_l(uc_iter(a));
    std::stable_sort(items.begin(), items.end(), [](const Value& x, const Value& y) { return uc_compare(x, y) < 0; });
    return uc_list(items);
}

static Value uc_contains(const Value& c, const Value& v) {
    if (uc_is_list(c)) {
        for (const Value& item : uc_l(c))
            if (uc_equal(item, v)) return uc_bool(true);
        return uc_bool(false);
    }
    if (uc_is_str(c)) {
        if (!uc_is_str(v)) uc_fail("CONTAINS on a string needs a string");
        return uc_bool(uc_s(c).find(uc_s(v)) != std::string::npos);
    }
    if (uc_is_map(c)) {
        uc_check_key(v);
        return uc_bool(uc_find(uc_m(c), v) != uc_m(c).end());
    }
    uc_fail(std::string("CONTAINS on ") + uc_type(c));
}

static Value uc_keys(const Value& m) {
    if (!uc_is_map(m)) uc_fail(std::string("KEYS of ") + uc_type(m));
    return uc_iter(m);
}

static Value uc_get(const Value& m, const Value& k) {
    if (!uc_is_map(m)) uc_fail(std::string("GET from ") + uc_type(m));
    uc_check_key(k);
    auto it = uc_find(uc_m(m), k);
    return it == uc_m(m).end() ? Value() : it->second;
}

static Value uc_put(const Value& m, const Value& k, const Value& v) {
    if (!uc_is_map(m)) uc_fail(std::string("PUT into ") + uc_type(m));
    uc_set_index(m, k, v);
    return Value();
}
// unicode-runtime: end
