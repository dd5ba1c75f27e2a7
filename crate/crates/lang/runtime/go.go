// unicode-runtime: begin
package main

import (
	"bufio"
	"fmt"
	"math"
	"os"
	"sort"
	"strconv"
	"strings"
)

type Value = any

type List struct{ items []Value }

type Map struct {
	keys []Value
	vals []Value
}

var uc_stdin = bufio.NewReader(os.Stdin)
var uc_stdout = bufio.NewWriter(os.Stdout)

func uc_fail(message string) {
	uc_stdout.Flush()
	fmt.Fprintln(os.Stderr, "runtime error: "+message)
	os.Exit(1)
}

func uc_type(a Value) string {
	switch a.(type) {
	case nil:
		return "none"
	case bool:
		return "bool"
	case int64:
		return "int"
	case float64:
		return "float"
	case string:
		return "string"
	case *List:
		return "list"
	case *Map:
		return "map"
	}
	return "unknown"
}

func uc_list(items ...Value) Value { return &List{items: append([]Value{}, items...)} }

func uc_new_map() Value { return &Map{} }

func uc_num(a Value) (float64, bool) {
	switch x := a.(type) {
	case int64:
		return float64(x), true
	case float64:
		return x, true
	}
	return 0, false
}

func uc_truthy(a Value) bool {
	switch x := a.(type) {
	case nil:
		return false
	case bool:
		return x
	case int64:
		return x != 0
	case float64:
		return x != 0
	case string:
		return x != ""
	case *List:
		return len(x.items) > 0
	case *Map:
		return len(x.keys) > 0
	}
	return false
}

func uc_equal(a, b Value) bool {
	if x, ok := a.(int64); ok {
		if y, ok := b.(int64); ok {
			return x == y
		}
	}
	if x, ok := uc_num(a); ok {
		if y, ok := uc_num(b); ok {
			return x == y
		}
		return false
	}
	switch x := a.(type) {
	case nil:
		return b == nil
	case bool:
		y, ok := b.(bool)
		return ok && x == y
	case string:
		y, ok := b.(string)
		return ok && x == y
	case *List:
		y, ok := b.(*List)
		if !ok || len(x.items) != len(y.items) {
			return false
		}
		for i := range x.items {
			if !uc_equal(x.items[i], y.items[i]) {
				return false
			}
		}
		return true
	case *Map:
		y, ok := b.(*Map)
		if !ok || len(x.keys) != len(y.keys) {
			return false
		}
		for i, k := range x.keys {
			j := uc_find(y, k)
			if j < 0 || !uc_equal(x.vals[i], y.vals[j]) {
				return false
			}
		}
		return true
	}
	return false
}

func uc_compare(a, b Value) int {
	if x, ok := a.(int64); ok {
		if y, ok := b.(int64); ok {
			if x < y {
				return -1
			} else if x > y {
				return 1
			}
			return 0
		}
	}
	if x, ok := uc_num(a); ok {
		if y, ok := uc_num(b); ok {
			if x < y {
				return -1
			} else if x > y {
				return 1
			}
			return 0
		}
	}
	switch x := a.(type) {
	case string:
		if y, ok := b.(string); ok {
			return strings.Compare(x, y)
		}
	case bool:
		if y, ok := b.(bool); ok {
			if x == y {
				return 0
			} else if y {
				return -1
			}
			return 1
		}
	case *List:
		if y, ok := b.(*List); ok {
			for i := 0; i < len(x.items) && i < len(y.items); i++ {
				if !uc_equal(x.items[i], y.items[i]) {
					return uc_compare(x.items[i], y.items[i])
				}
			}
			if len(x.items) < len(y.items) {
				return -1
			} else if len(x.items) > len(y.items) {
				return 1
			}
			return 0
		}
	}
	uc_fail("cannot order " + uc_type(a) + " and " + uc_type(b))
	return 0
}

func uc_format_float(f float64) string {
	if math.IsNaN(f) {
		return "nan"
	}
	if math.IsInf(f, 0) {
		if f > 0 {
			return "inf"
		}
		return "-inf"
	}
	sign := ""
	if math.Signbit(f) {
		sign = "-"
	}
	sci := strconv.FormatFloat(math.Abs(f), 'e', -1, 64)
	parts := strings.SplitN(sci, "e", 2)
	exponent, _ := strconv.Atoi(parts[1])
	digits := strings.ReplaceAll(parts[0], ".", "")
	var body string
	if exponent >= -4 && exponent < 16 {
		if exponent >= 0 {
			point := exponent + 1
			whole := digits
			if len(whole) > point {
				whole = whole[:point]
			}
			for len(whole) < point {
				whole += "0"
			}
			frac := "0"
			if len(digits) > point {
				frac = digits[point:]
			}
			body = whole + "." + frac
		} else {
			body = "0." + strings.Repeat("0", -exponent-1) + digits
		}
	} else {
		body = digits[:1]
		if len(digits) > 1 {
			body += "." + digits[1:]
		}
		expSign := "+"
		if exponent < 0 {
			expSign = "-"
			exponent = -exponent
		}
		body += fmt.Sprintf("e%s%02d", expSign, exponent)
	}
	return sign + body
}

func uc_quote(s string) string {
	var b strings.Builder
	b.WriteByte('"')
	for _, c := range s {
		switch c {
		case '"':
			b.WriteString("\\\"")
		case '\\':
			b.WriteString("\\\\")
		case '\n':
			b.WriteString("\\n")
		case '\t':
			b.WriteString("\\t")
		case '\r':
			b.WriteString("\\r")
		default:
			b.WriteRune(c)
		}
	}
	b.WriteByte('"')
	return b.String()
}

func uc_render(a Value, nested bool) string {
	switch x := a.(type) {
	case nil:
		return "none"
	case bool:
		if x {
			return "true"
		}
		return "false"
	case int64:
		return strconv.FormatInt(x, 10)
	case float64:
		return uc_format_float(x)
	case string:
		if nested {
			return uc_quote(x)
		}
		return x
	case *List:
		parts := make([]string, len(x.items))
		for i, item := range x.items {
			parts[i] = uc_render(item, true)
		}
		return "[" + strings.Join(parts, ", ") + "]"
	case *Map:
		parts := make([]string, len(x.keys))
		for i, k := range x.keys {
			parts[i] = uc_render(k, true) + ": " + uc_render(x.vals[i], true)
		}
		return "{" + strings.Join(parts, ", ") + "}"
	}
	return "?"
}

func uc_format(a Value) string { return uc_render(a, false) }

func uc_need_num(a, b Value, op string) (float64, float64) {
	x, ok1 := uc_num(a)
	y, ok2 := uc_num(b)
	if !ok1 || !ok2 {
		uc_fail("unsupported operands for " + op + ": " + uc_type(a) + " and " + uc_type(b))
	}
	return x, y
}

func uc_ints(a, b Value) (int64, int64, bool) {
	x, ok1 := a.(int64)
	y, ok2 := b.(int64)
	return x, y, ok1 && ok2
}

func uc_overflow() Value {
	uc_fail("integer overflow")
	return nil
}

func uc_add(a, b Value) Value {
	if x, y, ok := uc_ints(a, b); ok {
		r := x + y
		if (r > x) != (y > 0) {
			return uc_overflow()
		}
		return r
	}
	if x, ok := a.(string); ok {
		if y, ok := b.(string); ok {
			return x + y
		}
	}
	if x, ok := a.(*List); ok {
		if y, ok := b.(*List); ok {
			items := append(append([]Value{}, x.items...), y.items...)
			return &List{items: items}
		}
	}
	x, y := uc_need_num(a, b, "+")
	return x + y
}

func uc_sub(a, b Value) Value {
	if x, y, ok := uc_ints(a, b); ok {
		r := x - y
		if (r < x) != (y > 0) {
			return uc_overflow()
		}
		return r
	}
	x, y := uc_need_num(a, b, "-")
	return x - y
}

func uc_mul(a, b Value) Value {
	if x, y, ok := uc_ints(a, b); ok {
		if x == 0 || y == 0 {
			return int64(0)
		}
		r := x * y
		if r/y != x || (x == -1 && y == math.MinInt64) || (y == -1 && x == math.MinInt64) {
			return uc_overflow()
		}
		return r
	}
	x, y := uc_need_num(a, b, "*")
	return x * y
}

func uc_div(a, b Value) Value {
	x, y := uc_need_num(a, b, "/")
	if y == 0 {
		uc_fail("division by zero")
	}
	return x / y
}

func uc_mod(a, b Value) Value {
	x, y := uc_need_num(a, b, "MOD")
	if y == 0 {
		uc_fail("modulo by zero")
	}
	if p, q, ok := uc_ints(a, b); ok {
		if q == -1 {
			return int64(0)
		}
		r := p % q
		if r != 0 && ((r < 0) != (q < 0)) {
			r += q
		}
		return r
	}
	r := math.Mod(x, y)
	if r != 0 && ((r < 0) != (y < 0)) {
		r += y
	}
	if r == 0 {
		r = math.Copysign(0, y)
	}
	return r
}

func uc_neg(a Value) Value {
	switch x := a.(type) {
	case int64:
		if x == math.MinInt64 {
			return uc_overflow()
		}
		return -x
	case float64:
		return -x
	}
	uc_fail("cannot negate " + uc_type(a))
	return nil
}

func uc_not(a Value) Value     { return !uc_truthy(a) }
func uc_eq(a, b Value) Value   { return uc_equal(a, b) }
func uc_ne(a, b Value) Value   { return !uc_equal(a, b) }
func uc_lt(a, b Value) Value   { return uc_compare(a, b) < 0 }
func uc_le(a, b Value) Value   { return uc_compare(a, b) <= 0 }
func uc_gt(a, b Value) Value   { return uc_compare(a, b) > 0 }
func uc_ge(a, b Value) Value   { return uc_compare(a, b) >= 0 }

func uc_need_int(a Value, what string) int64 {
	switch x := a.(type) {
	case int64:
		return x
	case bool:
		if x {
			return 1
		}
		return 0
	}
	uc_fail(what + " must be an integer, not " + uc_type(a))
	return 0
}

func uc_position(i int64, n int) int {
	j := i
	if j < 0 {
		j += int64(n)
	}
	if j < 0 || j >= int64(n) {
		uc_fail("index " + strconv.FormatInt(i, 10) + " out of range")
	}
	return int(j)
}

func uc_check_key(key Value) {
	switch key.(type) {
	case *List, *Map:
		uc_fail("unhashable map key: " + uc_type(key))
	}
}

func uc_find(m *Map, key Value) int {
	for i, k := range m.keys {
		if uc_equal(k, key) {
			return i
		}
	}
	return -1
}

func uc_index(c, i Value) Value {
	switch x := c.(type) {
	case *List:
		return x.items[uc_position(uc_need_int(i, "list index"), len(x.items))]
	case string:
		chars := []rune(x)
		return string(chars[uc_position(uc_need_int(i, "string index"), len(chars))])
	case *Map:
		uc_check_key(i)
		j := uc_find(x, i)
		if j < 0 {
			uc_fail("missing map key " + uc_render(i, true))
		}
		return x.vals[j]
	}
	uc_fail("cannot index " + uc_type(c))
	return nil
}

func uc_set_index(c, i, v Value) {
	switch x := c.(type) {
	case *List:
		x.items[uc_position(uc_need_int(i, "list index"), len(x.items))] = v
	case *Map:
		uc_check_key(i)
		if j := uc_find(x, i); j >= 0 {
			x.vals[j] = v
		} else {
			x.keys = append(x.keys, i)
			x.vals = append(x.vals, v)
		}
	default:
		uc_fail("cannot assign into " + uc_type(c))
	}
}

func uc_step(s Value) Value {
	x, ok := s.(int64)
	if !ok {
		uc_fail("FOR loop bounds must be integers")
	}
	if x == 0 {
		uc_fail("FOR loop step must not be zero")
	}
	return s
}

func uc_range_ok(i, to, step Value) bool {
	x, ok1 := i.(int64)
	t, ok2 := to.(int64)
	if !ok1 || !ok2 {
		uc_fail("FOR loop bounds must be integers")
	}
	if step.(int64) > 0 {
		return x <= t
	}
	return x >= t
}

func uc_iter(c Value) Value {
	switch x := c.(type) {
	case *List:
		return x
	case string:
		items := []Value{}
		for _, r := range x {
			items = append(items, string(r))
		}
		return &List{items: items}
	case *Map:
		return &List{items: append([]Value{}, x.keys...)}
	}
	uc_fail("cannot iterate over " + uc_type(c))
	return nil
}

func uc_output(a Value) {
	uc_stdout.WriteString(uc_format(a))
	uc_stdout.WriteByte('\n')
	uc_stdout.Flush()
}

func uc_input() Value {
	line, err := uc_stdin.ReadString('\n')
	if err != nil && line == "" {
		return nil
	}
	return strings.TrimRight(line, "\r\n")
}

func uc_length(a Value) Value {
	switch x := a.(type) {
	case string:
		return int64(len([]rune(x)))
	case *List:
		return int64(len(x.items))
	case *Map:
		return int64(len(x.keys))
	}
	uc_fail("LENGTH of " + uc_type(a))
	return nil
}

func uc_append(l, v Value) Value {
	x, ok := l.(*List)
	if !ok {
		uc_fail("APPEND to " + uc_type(l))
	}
	x.items = append(x.items, v)
	return nil
}

func uc_remove_at(l, i Value) Value {
	x, ok := l.(*List)
	if !ok {
		uc_fail("REMOVE_AT from " + uc_type(l))
	}
	j := uc_position(uc_need_int(i, "list index"), len(x.items))
	out := x.items[j]
	x.items = append(x.items[:j], x.items[j+1:]...)
	return out
}

func uc_slice(a, b Value, n int) (int, int) {
	clamp := func(i int64) int {
		if i < 0 {
			i += int64(n)
		}
		if i < 0 {
			i = 0
		}
		if i > int64(n) {
			i = int64(n)
		}
		return int(i)
	}
	lo := clamp(uc_need_int(a, "slice bound"))
	hi := clamp(uc_need_int(b, "slice bound"))
	if hi < lo {
		hi = lo
	}
	return lo, hi
}

func uc_substring(s, a, b Value) Value {
	switch x := s.(type) {
	case string:
		chars := []rune(x)
		lo, hi := uc_slice(a, b, len(chars))
		return string(chars[lo:hi])
	case *List:
		lo, hi := uc_slice(a, b, len(x.items))
		return &List{items: append([]Value{}, x.items[lo:hi]...)}
	}
	uc_fail("SUBSTRING of " + uc_type(s))
	return nil
}

func uc_to_string(a Value) Value { return uc_format(a) }

func uc_to_int(a Value) Value {
	switch x := a.(type) {
	case int64:
		return x
	case bool:
		return uc_need_int(x, "")
	case float64:
		t := math.Trunc(x)
		if math.IsNaN(t) || t >= 9223372036854775808.0 || t < -9223372036854775808.0 {
			uc_fail("cannot convert float to int")
		}
		return int64(t)
	case string:
		t := strings.TrimSpace(x)
		digits := strings.TrimLeft(t, "+-")
		if len(t)-len(digits) > 1 || digits == "" || strings.IndexFunc(digits, func(r rune) bool { return r < '0' || r > '9' }) >= 0 {
			uc_fail("invalid integer literal: " + x)
		}
		n, err := strconv.ParseInt(strings.TrimPrefix(t, "+"), 10, 64)
		if err != nil {
			uc_fail("integer overflow")
		}
		return n
	}
	uc_fail("TO_INT of " + uc_type(a))
	return nil
}

func uc_floor(a Value) Value {
	switch x := a.(type) {
	case int64:
		return x
	case float64:
		return uc_to_int(math.Floor(x))
	case bool:
		return uc_to_int(x)
	}
	uc_fail("FLOOR of " + uc_type(a))
	return nil
}

func uc_max(a, b Value) Value {
	if uc_compare(b, a) > 0 {
		return b
	}
	return a
}

func uc_min(a, b Value) Value {
	if uc_compare(b, a) < 0 {
		return b
	}
	return a
}

func uc_abs(a Value) Value {
	switch x := a.(type) {
	case int64:
		if x < 0 {
			return uc_neg(x)
		}
		return x
	case float64:
		return math.Abs(x)
	}
	uc_fail("ABS of " + uc_type(a))
	return nil
}

func uc_sorted(a Value) Value {
	items := append([]Value{}, uc_iter(a).(*List).items...)
	sort.SliceStable(items, func(i, j int) bool { return uc_compare(items[i], items[j]) < 0 })
	return &List{items: items}
}

func uc_contains(c, v Value) Value {
	switch x := c.(type) {
	case *List:
		for _, item := range x.items {
			if uc_equal(item, v) {
				return true
			}
		}
		return false
	case string:
		needle, ok := v.(string)
		if !ok {
			uc_fail("CONTAINS on a string needs a string")
		}
		return strings.Contains(x, needle)
	case *Map:
		uc_check_key(v)
		return uc_find(x, v) >= 0
	}
	uc_fail("CONTAINS on " + uc_type(c))
	return nil
}

func uc_keys(m Value) Value {
	if _, ok := m.(*Map); !ok {
		uc_fail("KEYS of " + uc_type(m))
	}
	return uc_iter(m)
}

func uc_get(m, k Value) Value {
	x, ok := m.(*Map)
	if !ok {
		uc_fail("GET from " + uc_type(m))
	}
	uc_check_key(k)
	if j := uc_find(x, k); j >= 0 {
		return x.vals[j]
	}
	return nil
}

func uc_put(m, k, v Value) Value {
	if _, ok := m.(*Map); !ok {
		uc_fail("PUT into " + uc_type(m))
	}
	uc_set_index(m, k, v)
	return nil
}
// unicode-runtime: end
