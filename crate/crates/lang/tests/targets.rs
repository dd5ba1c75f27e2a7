//! Runs transpiled programs on every installed toolchain and compares the
//! output with the expected display text. Targets whose toolchain is
//! missing are reported and skipped.

mod common;

use unicoder_lang::parse;
use unicoder_lang::transpile::{transpile_driver, DriverCase, TargetLanguage, TranspileOptions};
use unicoder_lang::Expr;

const TOUR: &str = r#"// exercises every construct of the executable subset
FUNCTION tour()
    SET xs TO [3, 1, 2]
    APPEND(xs, 10)
    OUTPUT xs
    OUTPUT SORTED(xs)
    OUTPUT xs[-1] + xs[0]
    SET xs[1] TO "one"
    OUTPUT xs
    OUTPUT REMOVE_AT(xs, 1)
    OUTPUT LENGTH(xs)
    SET grid TO [[1, 2], [3, 4]]
    SET grid[1][0] TO 30
    OUTPUT grid
    SET total TO 0
    FOR i FROM 1 TO 10 STEP 3 DO
        SET total TO total + i
    END FOR
    OUTPUT total
    FOR j FROM 3 TO 1 STEP -1 DO
        OUTPUT j
    END FOR
    FOR EACH c IN "héllo" DO
        IF c == "l" THEN
            OUTPUT "L"
        ELSE IF c == "é" THEN
            OUTPUT "E"
        ELSE
            OUTPUT c
        END IF
    END FOR
    SET m TO NEW_MAP()
    PUT(m, "b", 2)
    PUT(m, "a", [1, "x"])
    PUT(m, "b", 3)
    OUTPUT m
    OUTPUT KEYS(m)
    OUTPUT GET(m, "zz")
    OUTPUT CONTAINS(m, "a") AND NOT CONTAINS(xs, 99)
    OUTPUT CONTAINS("haystack", "st")
    OUTPUT 7 / 2
    OUTPUT -7 MOD 3
    OUTPUT 7 MOD -3
    OUTPUT 5.5 MOD 2
    OUTPUT 1 / 3
    OUTPUT 10000000000000000.0
    OUTPUT 0.0001
    OUTPUT 0.00001
    OUTPUT 2.0 * 3
    OUTPUT FLOOR(-2.5)
    OUTPUT TO_INT(" -42 ") + TO_INT(3.9)
    OUTPUT TO_STRING(12) + "!"
    OUTPUT SUBSTRING("abcdef", 1, -1)
    OUTPUT SUBSTRING([1, 2, 3, 4], 2, 10)
    OUTPUT MAX(2, 9.5) + MIN(-1, 4) + ABS(-3)
    OUTPUT [1, 2] + [3]
    OUTPUT [1, 2] < [1, 3]
    OUTPUT "abc" < "abd"
    OUTPUT 1 == 1.0
    OUTPUT [1, [2.5, "q\"t"]] == [1, [2.5, "q\"t"]]
    OUTPUT [TRUE, FALSE, "tab\there"]
    SET k TO 0
    WHILE k < 3 DO
        SET k TO k + 1
    END WHILE
    OUTPUT fib(k + 7)
    OUTPUT echo()
END FUNCTION

// the third read hits end of input
FUNCTION echo()
    SET lines TO [0, 0, 0]
    INPUT lines[0]
    INPUT lines[1]
    INPUT lines[2]
    RETURN lines
END FUNCTION

FUNCTION fib(n)
    IF n < 2 THEN
        RETURN n
    END IF
    RETURN fib(n - 1) + fib(n - 2)
END FUNCTION
"#;

const TOUR_OUTPUT: &str = r#"[3, 1, 2, 10]
[1, 2, 3, 10]
13
[3, "one", 2, 10]
one
3
[[1, 2], [30, 4]]
22
3
2
1
h
E
L
L
o
{"b": 3, "a": [1, "x"]}
["b", "a"]
none
true
true
3.5
2
-2
1.5
0.3333333333333333
1e+16
0.0001
1e-05
6.0
-3
-39
12!
bcde
[3, 4]
11.5
[1, 2, 3]
true
true
true
true
[true, false, "tab\there"]
55
["first", "second", none]
none
"#;

fn installed_targets() -> Vec<TargetLanguage> {
    TargetLanguage::ALL
        .into_iter()
        .filter(|t| {
            let ok = common::installed(*t);
            if !ok {
                eprintln!("skipping {t}: toolchain not installed");
            }
            ok
        })
        .collect()
}

#[test]
fn tour_agrees_on_every_installed_target() {
    let ast = parse(TOUR).unwrap();
    for target in installed_targets() {
        let emitted = transpile_driver(&ast, target, &TranspileOptions::default(), &[vec![]]).unwrap();
        let out = common::run(target, &emitted.code, "first\r\nsecond\n");
        assert!(out.success, "{target}: {}\n{}", out.stderr, emitted.code);
        assert_eq!(out.stdout, TOUR_OUTPUT, "{target}");
    }
}

#[test]
fn add_and_fib_with_driver_cases() {
    let ast = parse("FUNCTION add(a, b)\n    RETURN a + b\nEND FUNCTION\n").unwrap();
    let cases: Vec<DriverCase> = vec![vec![Expr::int(2), Expr::int(3)], vec![Expr::int(-4), Expr::int(4)]];
    for target in installed_targets() {
        let emitted = transpile_driver(&ast, target, &TranspileOptions::default(), &cases).unwrap();
        assert_eq!(emitted.entry_symbol, "add");
        let out = common::run(target, &emitted.code, "");
        assert_eq!(out.stdout, "5\n0\n", "{target}: {}", out.stderr);
    }
}

#[test]
fn runtime_errors_exit_nonzero() {
    let programs = [
        "FUNCTION f()\n    RETURN 1 / 0\nEND FUNCTION\n",
        "FUNCTION f()\n    RETURN [1][5]\nEND FUNCTION\n",
        "FUNCTION f()\n    RETURN 1 < \"a\"\nEND FUNCTION\n",
        "FUNCTION f()\n    FOR i FROM 1 TO 3 STEP 0 DO\n        OUTPUT i\n    END FOR\nEND FUNCTION\n",
    ];
    for src in programs {
        let ast = parse(src).unwrap();
        for target in installed_targets() {
            let emitted = transpile_driver(&ast, target, &TranspileOptions::default(), &[vec![]]).unwrap();
            let out = common::run(target, &emitted.code, "");
            assert!(!out.success, "{target} accepted {src}");
            assert!(out.stdout.is_empty(), "{target}: {}", out.stdout);
        }
    }
}

#[test]
fn int_overflow_is_an_error_outside_python() {
    let ast = parse("FUNCTION f()\n    RETURN 9223372036854775807 + 1\nEND FUNCTION\n").unwrap();
    for target in installed_targets() {
        let emitted = transpile_driver(&ast, target, &TranspileOptions::default(), &[vec![]]).unwrap();
        let out = common::run(target, &emitted.code, "");
        if target == TargetLanguage::Python {
            assert_eq!(out.stdout, "9223372036854775808\n");
        } else {
            assert!(!out.success, "{target}: {}", out.stdout);
        }
    }
}
