"""Nested summations with affine integer bounds.

A :class:`BoundSystem` lists summation variables outermost first; each
variable has lower and upper bounds that are affine in the parameters and in
the variables summed further out.  The system is symbolic in the
parameters, so one system per rank is compiled once into plain nested
``for`` loops and reused for every input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping


class Affine:
    """Integer affine form ``const + sum coeff * symbol``."""

    __slots__ = ("const", "terms")

    def __init__(self, const: int = 0, terms: Mapping[str, int] | None = None):
        self.const = int(const)
        self.terms = {k: int(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def sym(cls, name: str) -> Affine:
        return cls(0, {name: 1})

    @staticmethod
    def lift(x) -> Affine:
        return x if isinstance(x, Affine) else Affine(x)

    def __add__(self, other):
        other = Affine.lift(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return Affine(self.const + other.const, terms)

    __radd__ = __add__

    def __neg__(self):
        return Affine(-self.const, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-Affine.lift(other))

    def __rsub__(self, other):
        return Affine.lift(other) - self

    def __mul__(self, c: int):
        return Affine(self.const * c, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        other = Affine.lift(other)
        return self.const == other.const and self.terms == other.terms

    def __hash__(self):
        return hash((self.const, tuple(sorted(self.terms.items()))))

    def symbols(self) -> set[str]:
        return set(self.terms)

    def evaluate(self, env: Mapping[str, int]) -> int:
        return self.const + sum(v * env[k] for k, v in self.terms.items())

    def code(self) -> str:
        parts = []
        for k in sorted(self.terms):
            v = self.terms[k]
            if v == 1:
                parts.append(f"+{k}")
            elif v == -1:
                parts.append(f"-{k}")
            else:
                parts.append(f"{v:+d}*{k}")
        if self.const or not parts:
            parts.append(f"{self.const:+d}")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    def __repr__(self):
        return f"Affine({self.code()})"


@dataclass(frozen=True)
class Bound:
    """``expr / div`` rounded inwards (ceil for lower, floor for upper bounds)."""

    expr: Affine
    div: int = 1


@dataclass
class BoundSystem:
    variables: list[str]
    params: list[str]
    lower: dict[str, list[Bound]] = field(default_factory=dict)
    upper: dict[str, list[Bound]] = field(default_factory=dict)
    # parameter-only expressions that must be >= 0 for a non-empty sum
    conditions: list[Affine] = field(default_factory=list)
    _count_fn: object = field(default=None, repr=False, compare=False)
    _enum_fn: object = field(default=None, repr=False, compare=False)

    def add_lower(self, var: str, expr, div: int = 1):
        self.lower.setdefault(var, []).append(Bound(Affine.lift(expr), div))

    def add_upper(self, var: str, expr, div: int = 1):
        self.upper.setdefault(var, []).append(Bound(Affine.lift(expr), div))

    def validate(self):
        """Every bound may only use parameters and variables summed further out."""
        known = set(self.params)
        for v in self.variables:
            if not self.lower.get(v) or not self.upper.get(v):
                raise ValueError(f"variable {v} is not bounded on both sides")
            for b in self.lower[v] + self.upper[v]:
                bad = b.expr.symbols() - known
                if bad:
                    raise ValueError(f"bound of {v} uses {sorted(bad)} before they are summed")
            known.add(v)
        for c in self.conditions:
            bad = c.symbols() - set(self.params)
            if bad:
                raise ValueError(f"condition uses non-parameters {sorted(bad)}")

    def clause_sets(self) -> dict[str, tuple[frozenset, frozenset]]:
        """Lower/upper clause sets per variable, for comparing two systems."""
        return {
            v: (frozenset((b.expr, b.div) for b in self.lower[v]),
                frozenset((b.expr, b.div) for b in self.upper[v]))
            for v in self.variables
        }

    # --- code generation ---

    @staticmethod
    def _bound_code(bounds: list[Bound], lower: bool) -> str:
        items = []
        for b in dict.fromkeys(bounds):
            e = b.expr.code()
            if b.div == 1:
                items.append(e)
            elif lower:
                items.append(f"(-((-({e}))//{b.div}))")
            else:
                items.append(f"(({e})//{b.div})")
        if len(items) == 1:
            return items[0]
        return ("max(" if lower else "min(") + ", ".join(items) + ")"

    # Python allows at most 20 statically nested blocks, so long loop nests
    # are split into chained functions of at most _CHUNK loops each.
    _CHUNK = 16

    def _gen(self, enum: bool) -> str:
        self.validate()
        name = "_enum" if enum else "_count"
        vs = self.variables
        chunks = [vs[i : i + self._CHUNK] for i in range(0, len(vs), self._CHUNK)] or [[]]
        lines = []
        for c, chunk in enumerate(chunks):
            outer = [v for ch in chunks[:c] for v in ch]
            fname = name if c == 0 else f"{name}_{c}"
            args = ", ".join(["P"] + outer)
            lines.append(f"def {fname}({args}):")
            if c == 0:
                for p in self.params:
                    lines.append(f"    {p} = P[{p!r}]")
                for cond in self.conditions:
                    lines.append(f"    if ({cond.code()}) < 0:")
                    lines.append("        return" + ("" if enum else " 0"))
            else:
                for p in self.params:
                    lines.append(f"    {p} = P[{p!r}]")
            last_chunk = c == len(chunks) - 1
            ind = "    "
            if not enum:
                lines.append(f"{ind}total = 0")
            if not chunk:
                lines.append(f"{ind}yield ()" if enum else f"{ind}return 1")
                continue
            loop_vars = chunk if (enum or not last_chunk) else chunk[:-1]
            for v in loop_vars:
                lo = self._bound_code(self.lower[v], True)
                hi = self._bound_code(self.upper[v], False)
                lines.append(f"{ind}for {v} in range({lo}, ({hi}) + 1):")
                ind += "    "
            if last_chunk:
                if enum:
                    lines.append(f"{ind}yield ({', '.join(vs)},)")
                else:
                    v = chunk[-1]
                    lo = self._bound_code(self.lower[v], True)
                    hi = self._bound_code(self.upper[v], False)
                    lines.append(f"{ind}d = ({hi}) - ({lo}) + 1")
                    lines.append(f"{ind}if d > 0:")
                    lines.append(f"{ind}    total += d")
            else:
                call = f"{name}_{c + 1}({', '.join(['P'] + outer + chunk)})"
                lines.append(f"{ind}yield from {call}" if enum else f"{ind}total += {call}")
            if not enum:
                lines.append("    return total")
        return "\n".join(lines)

    def source(self) -> str:
        return self._gen(enum=False)

    def enum_source(self) -> str:
        return self._gen(enum=True)

    def _compile(self, src: str, name: str):
        ns: dict = {}
        exec(compile(src, f"<bounds:{name}>", "exec"), ns)
        return ns[name]

    def count(self, params: Mapping[str, int]) -> int:
        if self._count_fn is None:
            self._count_fn = self._compile(self.source(), "_count")
        return self._count_fn(params)

    def enumerate(self, params: Mapping[str, int]) -> Iterable[tuple[int, ...]]:
        """Points in summation order (lexicographic in the variable list)."""
        if self._enum_fn is None:
            self._enum_fn = self._compile(self.enum_source(), "_enum")
        return self._enum_fn(params) or ()

    def count_interpreted(self, params: Mapping[str, int]) -> int:
        """Slow reference evaluation without code generation."""
        self.validate()
        if any(c.evaluate(params) < 0 for c in self.conditions):
            return 0
        env = dict(params)

        def lo(v):
            return max(-((-b.expr.evaluate(env)) // b.div) for b in self.lower[v])

        def hi(v):
            return min(b.expr.evaluate(env) // b.div for b in self.upper[v])

        def rec(depth):
            if depth == len(self.variables):
                return 1
            v = self.variables[depth]
            total = 0
            for x in range(lo(v), hi(v) + 1):
                env[v] = x
                total += rec(depth + 1)
            return total

        return rec(0)


def derive_from_entries(variables: list[str], params: list[str], entries: Iterable[Affine]) -> BoundSystem:
    """Nested-sum system from entry non-negativity.

    Each inequality ``entry >= 0`` is attached to the innermost variable it
    contains, which makes the nested sum count the lattice points exactly.
    Entries without variables become parameter conditions.
    """
    pos = {v: i for i, v in enumerate(variables)}
    bs = BoundSystem(list(variables), list(params))
    seen = set()
    for e in entries:
        if e in seen:
            continue
        seen.add(e)
        vs = [v for v in e.terms if v in pos]
        if not vs:
            if e.terms or e.const < 0:
                bs.conditions.append(e)
            continue
        inner = max(vs, key=pos.__getitem__)
        c = e.terms[inner]
        rest = e - Affine(0, {inner: c})
        if c > 0:
            bs.add_lower(inner, -rest, c)
        else:
            bs.add_upper(inner, rest, -c)
    return bs
