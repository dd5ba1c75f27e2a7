"""Independent reference implementations of the corpus programs.

Running this script rewrites manifest.json with the expected stdout of every
case. The implementations are written directly in Python and share nothing
with the transpiler or its runtime.
"""

import json
import math
import os
import sys


def show(value, nested=False):
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        if not nested:
            return value
        body = value.replace("\\", "\\\\").replace('"', '\\"')
        body = body.replace("\n", "\\n").replace("\t", "\\t").replace("\r", "\\r")
        return '"' + body + '"'
    if isinstance(value, list):
        return "[" + ", ".join(show(v, True) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(show(k, True) + ": " + show(v, True) for k, v in value.items()) + "}"
    raise TypeError(type(value))


def add(a, b):
    return a + b


def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def max_of_list(xs):
    return max(xs)


def string_reverse(text):
    return text[::-1]


def factorial(n):
    return math.factorial(n) if n > 1 else 1


def count_primes(limit):
    if limit < 2:
        return 0
    sieve = [True] * (limit + 1)
    sieve[0] = sieve[1] = False
    for p in range(2, int(limit ** 0.5) + 1):
        if sieve[p]:
            for multiple in range(p * p, limit + 1, p):
                sieve[multiple] = False
    return sum(sieve)


def gcd(a, b):
    return math.gcd(a, b)


def sum_of_digits(n):
    return sum(int(d) for d in str(n)) if n > 0 else 0


def count_vowels(text):
    return sum(1 for c in text if c.lower() in "aeiou")


def is_palindrome(text):
    return text == text[::-1]


def bubble_sort(xs):
    return sorted(xs)


def binary_search(xs, target):
    return xs.index(target) if target in xs else -1


def fizzbuzz(n):
    out = []
    for i in range(1, n + 1):
        word = ("Fizz" if i % 3 == 0 else "") + ("Buzz" if i % 5 == 0 else "")
        out.append(word or str(i))
    return out


def word_frequencies(words):
    counts = {}
    for w in words:
        counts[w] = counts.get(w, 0) + 1
    return counts


def two_sum(nums, target):
    best = None
    for j in range(len(nums)):
        for i in range(j):
            if nums[i] + nums[j] == target:
                return [i, j]
    return []


def running_mean(xs):
    return [sum(xs[: i + 1]) / (i + 1) for i in range(len(xs))]


def celsius_to_fahrenheit(temps):
    return [c * 9 / 5 + 32 for c in temps]


def flatten(nested):
    return [x for inner in nested for x in inner]


def char_histogram(text):
    letters = sorted(set(text) - {" "})
    return [c + ":" + str(text.count(c)) for c in letters]


def collatz_steps(n):
    steps = 0
    while n != 1:
        n = n // 2 if n % 2 == 0 else 3 * n + 1
        steps += 1
    return steps


def matrix_transpose(matrix):
    return [list(col) for col in zip(*matrix)]


def remove_duplicates(xs):
    return list(dict.fromkeys(xs))


def number_to_binary(n):
    return bin(n)[2:]


def count_words(text):
    return len([w for w in text.split(" ") if w])


def merge_sorted(a, b):
    return sorted(a + b)


def pascal_row(n):
    return [math.comb(n, k) for k in range(n + 1)]


def second_largest(xs):
    distinct = sorted(set(xs))
    return distinct[-2] if len(distinct) > 1 else distinct[0]


def grade_summary(scores):
    return [min(scores), max(scores), int(sum(scores) / len(scores))]


def rotate_left(xs, steps):
    if not xs:
        return xs
    k = steps % len(xs)
    return xs[k:] + xs[:k]


def running_total_io(stdin):
    lines = stdin.split("\n")
    count = int(lines[0])
    total = 0
    printed = []
    for i in range(1, count + 1):
        total += int(lines[i])
        printed.append("after %d: %d" % (i, total))
    return printed, total


CASES = {
    "add": [[2, 3], [-4, 4], [1.5, 2.25], ["uni", "code"]],
    "fib": [[0], [1], [10], [50]],
    "max_of_list": [[[3, 9, 2]], [[-5, -2, -9]], [[1.5, 0.5, 1.25]]],
    "string_reverse": [["hello"], [""], ["héllo wörld"]],
    "factorial": [[0], [5], [20]],
    "count_primes": [[1], [10], [100]],
    "gcd": [[12, 18], [-21, 14], [7, 0]],
    "sum_of_digits": [[0], [12345], [9999]],
    "count_vowels": [["Universal Code"], ["rhythm"], [""]],
    "is_palindrome": [["racecar"], ["abca"], [""]],
    "bubble_sort": [[[5, 1, 4, 2, 8]], [[]], [[2.5, -1, 2]]],
    "binary_search": [[[1, 3, 5, 7, 9], 7], [[1, 3, 5, 7, 9], 4], [[], 1]],
    "fizzbuzz": [[15], [1]],
    "word_frequencies": [[["to", "be", "or", "not", "to", "be"]], [[]]],
    "two_sum": [[[2, 7, 11, 15], 9], [[3, 2, 4], 6], [[1, 2], 7]],
    "running_mean": [[[1, 2, 3, 4]], [[10, 0, 5]]],
    "celsius_to_fahrenheit": [[[0, 100, -40, 36.6]]],
    "flatten": [[[[1, 2], [], [3, [4]]]], [[]]],
    "char_histogram": [["hello world"], ["aab ba"]],
    "collatz_steps": [[1], [6], [27]],
    "matrix_transpose": [[[[1, 2, 3], [4, 5, 6]]], [[[7]]]],
    "remove_duplicates": [[[3, 1, 3, 2, 1]], [["a", "b", "a"]]],
    "number_to_binary": [[0], [5], [1024]],
    "count_words": [["the quick  brown fox"], [""], ["  spaced  "]],
    "merge_sorted": [[[1, 4, 9], [2, 3, 10, 11]], [[], [1]]],
    "pascal_row": [[0], [4], [10]],
    "second_largest": [[[4, 9, 9, 2]], [[5, 5]]],
    "grade_summary": [[[88, 92, 79]], [[100]]],
    "rotate_left": [[[1, 2, 3, 4, 5], 2], [[1, 2, 3], 7], [[], 3]],
}

IO_CASES = {
    "running_total_io": ["3\n10\n-4\n7\n", "0\n"],
}


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    programs = []
    for name, cases in CASES.items():
        func = globals()[name]
        entries = [{"args": args, "expected": show(func(*json.loads(json.dumps(args)))) + "\n"} for args in cases]
        programs.append({"id": name, "file": "programs/" + name + ".uc", "entry": name, "cases": entries})
    for name, inputs in IO_CASES.items():
        entries = []
        for stdin in inputs:
            printed, result = globals()[name](stdin)
            expected = "".join(line + "\n" for line in printed) + show(result) + "\n"
            entries.append({"args": [], "stdin": stdin, "expected": expected})
        programs.append({"id": name, "file": "programs/" + name + ".uc", "entry": name, "cases": entries})
    for program in programs:
        if not os.path.exists(os.path.join(here, program["file"])):
            sys.exit("missing " + program["file"])
    with open(os.path.join(here, "manifest.json"), "w") as out:
        json.dump({"programs": programs}, out, indent=2, ensure_ascii=False)
        out.write("\n")
    print("wrote %d programs" % len(programs))


if __name__ == "__main__":
    main()
