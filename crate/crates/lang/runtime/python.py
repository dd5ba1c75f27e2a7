# unicode-runtime: begin
import math
import sys


def uc_quote(text):
    escaped = text.replace("\\", "\\\\").replace('"', '\\"')
    escaped = escaped.replace("\n", "\\n").replace("\t", "\\t").replace("\r", "\\r")
    return '"' + escaped + '"'


def uc_format(value, nested=False):
    if value is None:
        return "none"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, str):
        return uc_quote(value) if nested else value
    if isinstance(value, list):
        return "[" + ", ".join(uc_format(item, True) for item in value) + "]"
    if isinstance(value, dict):
        pairs = (uc_format(k, True) + ": " + uc_format(v, True) for k, v in value.items())
        return "{" + ", ".join(pairs) + "}"
    return str(value)


def uc_range(start, stop, step=1):
    if step == 0:
        raise ValueError("FOR loop step must not be zero")
    return range(start, stop + 1, step) if step > 0 else range(start, stop - 1, step)


def uc_floor(value):
    return math.floor(value)


def uc_put(mapping, key, value):
    mapping[key] = value


def uc_input():
    line = sys.stdin.readline()
    if not line:
        return None
    return line.rstrip("\r\n")
# unicode-runtime: end
