"""Rainbow colour system: parameters, colours, shades, and the forbidden-triple table.

The edge palette consists of tinted greens g_1..g_T (1-based), superscripted
greens G0^0..G0^{G-1} (all "tint 0"), whites w_0..w_{W-1}, reds r_0..r_{R-1}
and optionally the plain yellow y.  Shades of yellow y_S are subsets of the
supergreen index set, represented as integer bitmasks in [0, 2**G).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

__all__ = [
    "InvalidDimensionError",
    "InvalidColourError",
    "Colour",
    "RainbowParams",
    "Rule",
    "TripleRuleTable",
    "paper_params",
    "default_table",
    "classical_pair_table",
    "tint_green",
    "super_green",
    "white",
    "red",
    "PLAIN_YELLOW",
    "colour_to_str",
    "colour_from_str",
    "params_to_json",
    "params_from_json",
    "full_shade",
    "shade_members",
]


class InvalidDimensionError(ValueError):
    pass


class InvalidColourError(ValueError):
    pass


# Colour kinds.  "g" = tinted green, "G" = superscripted green, "w" = white,
# "r" = red, "y" = plain yellow.
_KINDS = ("g", "G", "w", "r", "y")


@dataclass(frozen=True, order=True)
class Colour:
    kind: str
    index: int = 0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise InvalidColourError(f"unknown colour kind {self.kind!r}")

    @property
    def is_green(self) -> bool:
        return self.kind in ("g", "G")

    @property
    def is_red(self) -> bool:
        return self.kind == "r"

    @property
    def is_white(self) -> bool:
        return self.kind == "w"

    def __repr__(self):
        return colour_to_str(self)


def tint_green(i: int) -> Colour:
    return Colour("g", i)


def super_green(t: int) -> Colour:
    return Colour("G", t)


def white(i: int) -> Colour:
    return Colour("w", i)


def red(i: int) -> Colour:
    return Colour("r", i)


PLAIN_YELLOW = Colour("y", 0)


def colour_to_str(c: Colour) -> str:
    """Render a colour in the wire grammar: g1, G0<t>, w0, r5, y."""
    if c.kind == "y":
        return "y"
    if c.kind == "G":
        return f"G0{c.index}"
    return f"{c.kind}{c.index}"


def colour_from_str(s: str) -> Colour:
    if s == "y":
        return PLAIN_YELLOW
    if s.startswith("G0"):
        body = s[2:]
        if not body.isdigit():
            raise InvalidColourError(f"bad supergreen literal {s!r}")
        return super_green(int(body))
    if s and s[0] in ("g", "w", "r") and s[1:].isdigit():
        return Colour(s[0], int(s[1:]))
    raise InvalidColourError(f"bad colour literal {s!r}")


@dataclass(frozen=True)
class RainbowParams:
    """Counts describing one rainbow palette instance.

    tint_count defaults to n-2; supergreen indices double as the shade
    universe (shades are subsets of range(supergreen_count)).
    """

    n: int
    tint_count: int = -1  # -1 means n - 2
    supergreen_count: int = 0
    white_count: int = 0
    red_count: int = 0
    include_plain_yellow: bool = False

    def __post_init__(self):
        if self.n < 3:
            raise InvalidDimensionError(f"dimension n must be >= 3, got {self.n}")
        if self.tint_count == -1:
            object.__setattr__(self, "tint_count", self.n - 2)
        for name in ("tint_count", "supergreen_count", "white_count", "red_count"):
            if getattr(self, name) < 0:
                raise InvalidDimensionError(f"{name} must be >= 0")

    @property
    def shade_count(self) -> int:
        return 1 << self.supergreen_count

    def is_valid_colour(self, c: Colour) -> bool:
        if c.kind == "g":
            return 1 <= c.index <= self.tint_count
        if c.kind == "G":
            return 0 <= c.index < self.supergreen_count
        if c.kind == "w":
            return 0 <= c.index < self.white_count
        if c.kind == "r":
            return 0 <= c.index < self.red_count
        return self.include_plain_yellow and c.index == 0

    def check_colour(self, c: Colour) -> None:
        if not self.is_valid_colour(c):
            raise InvalidColourError(f"colour {c!r} out of range for {self}")

    def colours(self) -> list[Colour]:
        """All edge colours in canonical order (tints, supergreens, whites, reds, y)."""
        out = [tint_green(i) for i in range(1, self.tint_count + 1)]
        out += [super_green(t) for t in range(self.supergreen_count)]
        out += [white(i) for i in range(self.white_count)]
        out += [red(i) for i in range(self.red_count)]
        if self.include_plain_yellow:
            out.append(PLAIN_YELLOW)
        return out

    def is_valid_shade(self, s: int) -> bool:
        return 0 <= s < self.shade_count


def full_shade(params: RainbowParams) -> int:
    return params.shade_count - 1


def shade_members(shade: int) -> tuple[int, ...]:
    return tuple(t for t in range(shade.bit_length()) if shade >> t & 1)


def paper_params(n: int) -> tuple[int, int]:
    """The paired parameters (alpha, beta) = (3*2^n, (alpha+1)(alpha+2)/2)."""
    if n < 3:
        raise InvalidDimensionError(f"dimension n must be >= 3, got {n}")
    alpha = 3 * 2**n
    beta = (alpha + 1) * (alpha + 2) // 2
    return alpha, beta


@dataclass(frozen=True)
class Rule:
    """A predicate over an unordered triple of colours; True means forbidden."""

    rule_id: str
    predicate: Callable[[Colour, Colour, Colour], bool] = field(compare=False)
    enabled: bool = True

    def matches(self, a: Colour, b: Colour, c: Colour) -> bool:
        return self.enabled and self.predicate(a, b, c)


def _sorted_triple(a: Colour, b: Colour, c: Colour) -> tuple[Colour, Colour, Colour]:
    x, y, z = sorted((a, b, c))
    return x, y, z


def _rule_all_green(a, b, c):
    return a.is_green and b.is_green and c.is_green


def _rule_tint_pair_white(a, b, c):
    # (g_i, g_i, w_j) for every tint i and every white j.
    for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
        if x.kind == "g" and y.kind == "g" and x.index == y.index and z.is_white:
            return True
    return False


def _rule_supergreens_w0(a, b, c):
    # (g^j_0, g^k_0, w_0) for all j, k.
    for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
        if x.kind == "G" and y.kind == "G" and z == white(0):
            return True
    return False


def _rule_red_repeat(a, b, c):
    # (r_i, r_i, r_j) for all i, j, including i = j.
    if not (a.is_red and b.is_red and c.is_red):
        return False
    return len({a.index, b.index, c.index}) < 3


class TripleRuleTable:
    """Ordered list of forbidden-triple rules, evaluated on unordered triples."""

    def __init__(self, params: RainbowParams, rules: Iterable[Rule]):
        self.params = params
        self.rules = list(rules)

    def is_forbidden(self, a: Colour, b: Colour, c: Colour) -> bool:
        for col in (a, b, c):
            self.params.check_colour(col)
        return any(r.matches(a, b, c) for r in self.rules)

    def rule_ids(self) -> list[str]:
        return [r.rule_id for r in self.rules]

    def to_json(self) -> list[dict]:
        return [{"id": r.rule_id, "enabled": r.enabled} for r in self.rules]


def default_table(params: RainbowParams) -> TripleRuleTable:
    """The default rule table: (1a) three greens, (1b) matching tint pair with
    any white, (2) two supergreens with w_0, (4) repeated red index in a red
    triangle.  Rule (3) is omitted; see classical_pair_table."""
    return TripleRuleTable(
        params,
        [
            Rule("1a", _rule_all_green),
            Rule("1b", _rule_tint_pair_white),
            Rule("2", _rule_supergreens_w0),
            Rule("4", _rule_red_repeat),
        ],
    )


def _pair_decode(m: int, count: int) -> tuple[int, int] | None:
    """m-th unordered pair (k, l), k <= l, from range(count), lex order."""
    idx = 0
    for k in range(count):
        width = count - k
        if m < idx + width:
            return k, k + (m - idx)
        idx += width
    return None


def classical_pair_table(params: RainbowParams) -> TripleRuleTable:
    """Opt-in variant with doubly-indexed reds: red m stands for the m-th
    unordered pair {k, l} of supergreen indices and (g^i_0, g^j_0, r_m) is
    forbidden unless {i, j} = {k, l}."""

    G = params.supergreen_count

    def rule3(a, b, c):
        for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
            if x.kind == "G" and y.kind == "G" and z.is_red:
                pair = _pair_decode(z.index, G)
                if pair is None or pair != tuple(sorted((x.index, y.index))):
                    return True
        return False

    base = default_table(params)
    rules = list(base.rules)
    rules.insert(3, Rule("3", rule3))
    return TripleRuleTable(params, rules)


def make_table(params: RainbowParams, variant: str = "default") -> TripleRuleTable:
    if variant == "default":
        return default_table(params)
    if variant == "classical":
        return classical_pair_table(params)
    raise ValueError(f"unknown table variant {variant!r}")


def params_to_json(params: RainbowParams, table: TripleRuleTable | None = None) -> dict:
    doc = {
        "n": params.n,
        "tints": params.tint_count,
        "supergreens": params.supergreen_count,
        "whites": params.white_count,
        "reds": params.red_count,
        "plain_yellow": params.include_plain_yellow,
    }
    if table is not None:
        doc["rules"] = table.to_json()
    return doc


def params_from_json(doc: dict) -> tuple[RainbowParams, TripleRuleTable]:
    params = RainbowParams(
        n=doc["n"],
        tint_count=doc.get("tints", -1),
        supergreen_count=doc.get("supergreens", 0),
        white_count=doc.get("whites", 0),
        red_count=doc.get("reds", 0),
        include_plain_yellow=doc.get("plain_yellow", False),
    )
    ids = [r["id"] for r in doc.get("rules", [])] or ["1a", "1b", "2", "4"]
    table = classical_pair_table(params) if "3" in ids else default_table(params)
    enabled = {r["id"]: r.get("enabled", True) for r in doc.get("rules", [])}
    table = TripleRuleTable(
        params,
        [Rule(r.rule_id, r.predicate, enabled.get(r.rule_id, True)) for r in table.rules],
    )
    return params, table
