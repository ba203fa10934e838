"""Line-oriented session files.

::

    # comment
    params = t
    genus = 1
    f = x^3 + (1/4)*(t^2 + 4*t - 4)*x^2 + (1/2)*t*(t - 1)*x + (1/4)*(t - 1)^2
    divisor.T = points (0, (t - 1)/2)
    divisor.D = (x^2 - x, 0)
    gens.I = x^5 ; y^2 - x^3 - 1
    task ncontact T
    task add T T --engine both

Everything is parsed and validated before any task runs.
"""
from __future__ import annotations

import shlex
from dataclasses import dataclass, field

from .curve import HyperCurve, PointDivisor
from .errors import ParseError
from .mumford import MumfordRep, mumford_from_points
from .parsing import parse_field, parse_poly, parse_upoly


def split_top(text, sep):
    """Split on ``sep`` outside parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    return parts


def read_keyvals(text):
    """Yield (lineno, key, value) for ``key = value`` lines and
    (lineno, 'task', rest) for ``task`` lines."""
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("task ") or line == "task":
            yield no, "task", line[4:].strip()
            continue
        if "=" not in line:
            raise ParseError(f"line {no}: expected 'key = value'", raw, 0)
        key, _, value = line.partition("=")
        yield no, key.strip(), value.strip()


def parse_pair(text):
    """'(a, b)' -> ('a', 'b')."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ParseError("expected '(first, second)'", text, 0)
    parts = split_top(s[1:-1], ",")
    if len(parts) != 2:
        raise ParseError("expected exactly two comma-separated entries", text, 0)
    return parts[0], parts[1]


def parse_points(text):
    """'(x1, y1), (x2, y2)' or '(x1, y1) (x2, y2)' -> list of string pairs."""
    out = []
    depth, start = 0, None
    for i, ch in enumerate(text):
        if ch == "(":
            if depth == 0:
                start = i
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                out.append(parse_pair(text[start:i + 1]))
            if depth < 0:
                raise ParseError("unbalanced ')'", text, i)
        elif depth == 0 and ch not in " ,\t":
            raise ParseError(f"unexpected {ch!r} between points", text, i)
    if depth:
        raise ParseError("unbalanced '('", text, len(text))
    return out


@dataclass
class Session:
    params: tuple = ()
    genus: int | None = None
    f_text: str | None = None
    divisor_texts: dict = field(default_factory=dict)
    gens_texts: dict = field(default_factory=dict)
    tasks: list = field(default_factory=list)
    _curve: HyperCurve | None = None
    divisors: dict = field(default_factory=dict)
    gens: dict = field(default_factory=dict)

    @property
    def curve(self):
        if self._curve is None:
            if self.genus is None or self.f_text is None:
                raise ParseError("no curve declared (need genus and f)", "", 0)
            self._curve = HyperCurve(self.genus, parse_upoly(self.f_text, self.params))
        return self._curve

    def finalize(self):
        """Parse every declared object; raises on the first problem."""
        if self.f_text is not None or self.genus is not None:
            self.curve  # noqa: B018
        for name, text in self.divisor_texts.items():
            self.divisors[name] = self.divisor(text)
        for name, text in self.gens_texts.items():
            self.gens[name] = [parse_poly(g, self.params) for g in split_top(text, ";")]
        for name, args in self.tasks:
            if name not in TASKS:
                raise ParseError(f"unknown task {name!r}", name, 0)
            if name != "groebner":
                for arg in _positionals(args):
                    self.divisor(arg)
        return self

    def point(self, text):
        xs, ys = parse_pair(text)
        return self.curve.point(parse_field(xs, self.params), parse_field(ys, self.params))

    def divisor(self, text):
        """A named divisor, 'points ...', or a Mumford pair '(u, v)'."""
        text = text.strip()
        if text in self.divisors:
            return self.divisors[text]
        if text.startswith("points"):
            pts = [self.point(f"({a}, {b})") for a, b in parse_points(text[6:])]
            return mumford_from_points(PointDivisor.of(self.curve, *pts))
        if text.startswith("("):
            us, vs = parse_pair(text)
            return MumfordRep(parse_upoly(us, self.params), parse_upoly(vs, self.params), self.curve)
        raise ParseError(f"undefined divisor {text!r}", text, 0)


def _positionals(args):
    """Task arguments that are not ``--option value`` pairs."""
    out, skip = [], False
    for a in args:
        if skip:
            skip = False
        elif a.startswith("--"):
            skip = True
        else:
            out.append(a)
    return out


TASKS = ("groebner", "mumford", "add", "reduce", "leitenberger", "ncontact", "quasitoric")


def parse_params(text):
    return tuple(p.strip() for p in text.split(",") if p.strip())


def parse_session(text, finalize=True):
    s = Session()
    for no, key, value in read_keyvals(text):
        if key == "params":
            s.params = parse_params(value)
        elif key == "genus":
            try:
                s.genus = int(value)
            except ValueError:
                raise ParseError(f"line {no}: genus must be an integer", value, 0) from None
        elif key == "f":
            s.f_text = value
        elif key.startswith("divisor."):
            s.divisor_texts[key[8:]] = value
        elif key.startswith("gens."):
            s.gens_texts[key[5:]] = value
        elif key == "task":
            parts = shlex.split(value)
            if not parts:
                raise ParseError(f"line {no}: empty task", value, 0)
            s.tasks.append((parts[0], parts[1:]))
        else:
            raise ParseError(f"line {no}: unknown key {key!r}", key, 0)
    return s.finalize() if finalize else s
