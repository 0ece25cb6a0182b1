"""Function specs over GF(p^n): monomials, polynomials, named exponent
families, and Dickson polynomial maps.

Exponents of named families are stored unreduced; reduction mod q-1
happens inside pow at evaluation time, so reports keep the literal d.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .field import Field


class FamilyError(ValueError):
    """A named family's applicability condition failed."""


@dataclass(frozen=True)
class Monomial:
    d: int


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple  # ascending degree, element indices


@dataclass(frozen=True)
class Terms:
    terms: tuple  # ((coeff index, exponent), ...) for sparse high-degree maps


@dataclass(frozen=True)
class DicksonMap:
    m: int


@dataclass(frozen=True)
class Family:
    name: str
    k: int | None = None
    u: int | None = None


FunctionSpec = Monomial | Polynomial | Terms | DicksonMap | Family


# ---------------------------------------------------------------------------
# Named families.  Each entry maps a family name to (conditions, exponent):
# conditions(field, fam) returns [(description, satisfied), ...] and
# exponent(field, fam) the literal exponent (or a Terms spec).
# ---------------------------------------------------------------------------

def _hrs_exponent(field: Field, item: int, k):
    p, n, q = field.p, field.n, field.q
    if item == 1:
        return 3
    if item == 2:
        return q - 2
    if item == 3:
        return (q - 1) // 2 - 1
    if item == 4:
        return (q + 1) // 4 + (q - 1) // 2
    if item == 5:
        return (q + 1) // 4
    if item == 6:
        return (2 * q - 1) // 4
    if item == 7:
        return q - 3
    if item == 8:
        return p ** (n // 2) + 2
    if item == 9:
        return (5 ** k + 1) // 2
    raise FamilyError(f"unknown hrs item {item}")


def hrs_conditions(field: Field, item: int, k=None):
    """Applicability conditions of each known odd-p APN exponent item."""
    p, n, q = field.p, field.n, field.q
    if item == 1:
        return [("p > 3", p > 3)]
    if item == 2:
        # stated per-p, but the inverse map is 4-uniform when p^n = 1 (mod 3)
        # (x^2 + x + 1 then splits, adding two roots over x = 0, -a), so the
        # honest condition is on the field size
        return [("p > 2", p > 2), ("p^n = 2 (mod 3)", q % 3 == 2)]
    if item == 3:
        return [("p = 3 or 7 (mod 20)", p % 20 in (3, 7)),
                ("p^n > 7", q > 7), ("p^n != 27", q != 27),
                ("n odd", n % 2 == 1)]
    if item == 4:
        return [("p^n = 3 (mod 8)", q % 8 == 3),
                ("exponent != 2 (quadratic case is planar)",
                 (q + 1) // 4 + (q - 1) // 2 != 2)]
    if item == 5:
        return [("p^n = 7 (mod 8)", q % 8 == 7),
                ("exponent != 2 (quadratic case is planar)",
                 (q + 1) // 4 != 2)]
    if item == 6:
        return [("p^n = 2 (mod 3)", q % 3 == 2),
                ("(2p^n - 1)/4 is an integer", (2 * q - 1) % 4 == 0)]
    if item == 7:
        return [("p = 3", p == 3), ("n > 1", n > 1), ("n odd", n % 2 == 1)]
    if item == 8:
        return [("n even", n % 2 == 0),
                ("p^(n/2) = 1 (mod 3)", n % 2 == 0 and p ** (n // 2) % 3 == 1)]
    if item == 9:
        return [("p = 5", p == 5), ("k given", k is not None),
                ("gcd(2n, k) = 1", k is not None and math.gcd(2 * n, k) == 1)]
    raise FamilyError(f"unknown hrs item {item}")


def _dobbertin_exponent(field: Field, which: str) -> int:
    n = field.n
    if which == "a":
        d = (3 ** ((n + 1) // 2) - 1) // 2
    else:
        d = (3 ** (n + 1) - 1) // 8
    if n % 4 == 1:
        d += (3 ** n - 1) // 2
    return d


def _leducq_exponent(field: Field, level: int) -> int:
    n = field.n
    num = 5 ** (n + 1) - 1
    den = 5 ** ((n + 1) // 2 ** level) + 1
    return num // (2 * den) + (5 ** n - 1) // 4


def family_conditions(field: Field, fam: Family):
    """Applicability predicate of a named family as (description, ok) pairs."""
    p, n = field.p, field.n
    name, k = fam.name, fam.k
    if name == "gold":
        return [("k given", k is not None), ("k >= 1", k is not None and k >= 1)]
    if name == "square":
        return []
    if name == "inverse":
        return []
    if name == "pn3":
        return [("p = 3", p == 3), ("n >= 2", n >= 2)]
    if name == "halfgold":
        return [("p odd", p > 2), ("k given", k is not None),
                ("k >= 1", k is not None and k >= 1)]
    if name == "tnph":
        return [("p = 3", p == 3), ("n >= 2", n >= 2)]
    if name.startswith("hrs"):
        return hrs_conditions(field, int(name[3:]), k)
    if name == "dobbertin-a" or name == "dobbertin-b":
        return [("p = 3", p == 3), ("n odd", n % 2 == 1)]
    if name == "leducq5":
        lvl = k if k is not None else 1
        return [("p = 5", p == 5), ("level in {1, 2}", lvl in (1, 2)),
                ("n = -1 (mod 2^level)", lvl in (1, 2) and n % 2 ** lvl == 2 ** lvl - 1)]
    if name == "zhawang5":
        return [("p = 5", p == 5), ("n odd", n % 2 == 1)]
    if name == "trinomial":
        return [("p = 3", p == 3), ("u given", fam.u is not None),
                ("u nonzero", fam.u not in (None, 0))]
    raise FamilyError(f"unknown family {name!r}")


def family_exponent(field: Field, fam: Family):
    """Literal exponent of the family (a Terms spec for the trinomial).

    Raises FamilyError naming the first failed applicability condition.
    """
    for desc, ok in family_conditions(field, fam):
        if not ok:
            raise FamilyError(f"family {fam.name!r} not applicable: {desc}")
    p, n = field.p, field.n
    name, k = fam.name, fam.k
    if name == "gold":
        return p ** k + 1
    if name == "square":
        return 2
    if name == "inverse":
        return field.q - 2
    if name == "pn3":
        return 3 ** n - 3
    if name == "halfgold":
        return (p ** k + 1) // 2
    if name == "tnph":
        return (3 ** n + 3) // 2
    if name.startswith("hrs"):
        return _hrs_exponent(field, int(name[3:]), k)
    if name == "dobbertin-a":
        return _dobbertin_exponent(field, "a")
    if name == "dobbertin-b":
        return _dobbertin_exponent(field, "b")
    if name == "leducq5":
        return _leducq_exponent(field, k if k is not None else 1)
    if name == "zhawang5":
        return (5 ** n - 1) // 4 + (5 ** ((n + 1) // 2) - 1) // 2
    if name == "trinomial":
        u = fam.u % field.q
        u2 = field.mul(u, u)
        return Terms(((1, 10), (field.neg(u), 6), (field.neg(u2), 2)))
    raise FamilyError(f"unknown family {name!r}")


def resolve(field: Field, func: FunctionSpec) -> FunctionSpec:
    """Replace a Family by its concrete Monomial/Terms against the field."""
    if isinstance(func, Family):
        d = family_exponent(field, func)
        return d if isinstance(d, Terms) else Monomial(d)
    if isinstance(func, Monomial) and func.d < 1:
        raise ValueError("monomial exponent must be >= 1")
    if isinstance(func, Polynomial) and len(func.coeffs) > field.q:
        raise ValueError("polynomial degree must be < q")
    return func


def evaluate(field: Field, func: FunctionSpec, x: int) -> int:
    """Exact value F(x); monomials via pow, polynomials via Horner."""
    f = resolve(field, func)
    if isinstance(f, Monomial):
        return field.pow(x, f.d)
    if isinstance(f, Polynomial):
        acc = 0
        for c in reversed(f.coeffs):
            acc = field.add(field.mul(acc, x), c)
        return acc
    if isinstance(f, Terms):
        acc = 0
        for c, e in f.terms:
            acc = field.add(acc, field.mul(c, field.pow(x, e)))
        return acc
    if isinstance(f, DicksonMap):
        return dickson_eval(field, f.m, x)
    raise TypeError(f"cannot evaluate {f!r}")


@lru_cache(maxsize=512)
def _table_cached(field: Field, f: FunctionSpec):
    if isinstance(f, Monomial):
        t = field.pow_range(f.d)
    elif isinstance(f, Polynomial):
        acc = np.zeros(field.q, dtype=np.int64)
        for c in reversed(f.coeffs):
            acc = field.add_vec(field.mul_vec(acc, field._x), np.int64(c))
        t = acc
    elif isinstance(f, Terms):
        acc = np.zeros(field.q, dtype=np.int64)
        for c, e in f.terms:
            acc = field.add_vec(acc, field.mul_vec(np.int64(c), field.pow_range(e)))
        t = acc
    elif isinstance(f, DicksonMap):
        t = dickson_table(field, f.m)
    else:
        raise TypeError(f"cannot tabulate {f!r}")
    t.setflags(write=False)
    return t


def value_table(field: Field, func: FunctionSpec):
    """Vector of F(x) over all element indices (cached per field/function)."""
    return _table_cached(field, resolve(field, func))


def _dickson_reduce(field: Field, m: int) -> int:
    if m >= field.q * field.q:
        period = math.lcm(field.q - 1, field.q + 1)
        m %= period
    return m


def dickson_eval(field: Field, m: int, x: int) -> int:
    """Dickson polynomial D_m (second parameter 1) at x, by the recurrence
    D_0 = 2, D_1 = x, D_{i+1} = x*D_i - D_{i-1}."""
    if m < 0:
        raise ValueError("m must be non-negative")
    m = _dickson_reduce(field, m)
    two = 2 % field.p
    if m == 0:
        return two
    prev, cur = two, x
    for _ in range(m - 1):
        prev, cur = cur, field.sub(field.mul(x, cur), prev)
    return cur


def dickson_table(field: Field, m: int):
    """Vector of D_m over every element index."""
    if m < 0:
        raise ValueError("m must be non-negative")
    m = _dickson_reduce(field, m)
    two = 2 % field.p
    if m == 0:
        return np.full(field.q, two, dtype=np.int64)
    x = field._x
    prev = np.full(field.q, two, dtype=np.int64)
    cur = x.copy()
    for _ in range(m - 1):
        prev, cur = cur, field.sub_vec(field.mul_vec(x, cur), prev)
    return cur


def is_permutation(field: Field, func: FunctionSpec) -> bool:
    """True iff x -> F(x) is a bijection of the field."""
    counts = np.bincount(value_table(field, func), minlength=field.q)
    return bool((counts == 1).all())


def function_dict(func: FunctionSpec) -> dict:
    """Canonical JSON-able description of a function spec."""
    if isinstance(func, Monomial):
        return {"monomial": func.d}
    if isinstance(func, Polynomial):
        return {"poly": list(func.coeffs)}
    if isinstance(func, Terms):
        return {"terms": [[c, e] for c, e in func.terms]}
    if isinstance(func, DicksonMap):
        return {"dickson": func.m}
    if isinstance(func, Family):
        out = {"family": func.name}
        if func.k is not None:
            out["k"] = func.k
        if func.u is not None:
            out["u"] = func.u
        return out
    raise TypeError(f"cannot serialize {func!r}")
