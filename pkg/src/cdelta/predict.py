"""Closed-form predictions for c-differential uniformities.

Every predictor returns a Prediction whose applicability conditions are
machine-checked: if any condition fails the prediction is inapplicable
(the harness reports SKIP and still measures the point empirically).
Predictions never guess outside their stated conditions.
"""

import math
from dataclasses import dataclass, field as dc_field

from .field import Field

EXACT = "exact"
LOWER = "lower_bound"
UPPER = "upper_bound"
CLASS = "class"

PCN = "PcN"
APCN = "APcN"
NOT_PCN = "NotPcN"


@dataclass
class Prediction:
    kind: str                    # exact | lower_bound | upper_bound | class
    value: int | None = None
    klass: str | None = None     # PcN | APcN | NotPcN for kind == class
    conditions: tuple = ()
    source: str = ""
    extras: dict = dc_field(default_factory=dict)

    @property
    def applicable(self) -> bool:
        return all(ok for _, ok in self.conditions)

    def failed_conditions(self) -> list:
        return [desc for desc, ok in self.conditions if not ok]

    def consistent_with(self, delta: int) -> bool:
        """Does an observed uniformity satisfy this prediction?"""
        if self.kind == EXACT:
            return delta == self.value
        if self.kind == LOWER:
            return delta >= self.value
        if self.kind == UPPER:
            return delta <= self.value
        if self.kind == CLASS:
            if self.klass == PCN:
                return delta == 1
            if self.klass == APCN:
                return delta == 2
            if self.klass == NOT_PCN:
                return delta >= 2
        raise ValueError(f"unknown prediction kind {self.kind!r}")

    def describe(self) -> str:
        if self.kind == CLASS:
            return f"class:{self.klass}"
        mark = {EXACT: "=", LOWER: ">=", UPPER: "<="}[self.kind]
        return f"{mark}{self.value}"


def gcd_closed_form(p: int, k: int, n: int) -> int:
    """gcd(p^k + 1, p^n - 1) without computing the gcd.

    For p = 2 it is (2^gcd(2k,n) - 1)/(2^gcd(k,n) - 1); for odd p it is 2
    when n/gcd(n,k) is odd and p^gcd(k,n) + 1 when it is even.
    """
    g = math.gcd(n, k)
    if p == 2:
        return (2 ** math.gcd(2 * k, n) - 1) // (2 ** g - 1)
    return 2 if (n // g) % 2 == 1 else p ** g + 1


def predict_gold(field: Field, k: int, c: int | None = None) -> Prediction:
    """c-differential uniformity of x^(2^k+1) over GF(2^n), c != 1.

    Generic c: 2^d + 1 with d = gcd(n, k), valid when m = n/d >= 3 for n
    odd (always true) and m >= 4 for n even.  When (1-c)^(2^k-1) = 1 the
    normalized equation degenerates to z^(2^k+1) = const and the exact
    value is gcd(2^k + 1, 2^n - 1) with no m-condition.
    """
    if field.p != 2:
        raise ValueError("gold predictor requires p = 2")
    n = field.n
    if not (2 <= k < n) or n < 3:
        raise ValueError("requires 2 <= k < n and n >= 3")
    if c == 1:
        raise ValueError("c = 1 is the classical case, not covered")
    d = math.gcd(n, k)
    m = n // d
    extras = {"d": d, "m": m}
    if c is not None and field.pow(field.sub(1, c), 2 ** k - 1) == 1:
        val = gcd_closed_form(2, k, n)
        return Prediction(EXACT, value=val, source="gold",
                          conditions=(("(1-c)^(2^k-1) = 1 (linear case)", True),),
                          extras={**extras, "degenerate_c": True})
    mcond = (m >= 3) if n % 2 == 1 else (m >= 4)
    return Prediction(EXACT, value=2 ** d + 1, source="gold",
                      conditions=(("m >= 3 (n odd) or m >= 4 (n even)", mcond),),
                      extras=extras)


def gold_degenerate_c(field: Field, k: int, c: int) -> bool:
    """True when c falls in the linear case of the gold reduction."""
    return field.pow(field.sub(1, c), 2 ** k - 1) == 1


def predict_gold_root_counts(n: int, k: int) -> dict:
    """Predicted multiplicities of root counts of z^(2^k+1) + z + beta.

    d = gcd(n, k) = 1: the full distribution {0: M0, 1: M1, 3: M3}.
    d > 1: only the top count 2^d + 1 is predicted, with multiplicity
    (2^((m-1)d) - 1)/(2^(2d) - 1) for m = n/d odd and
    (2^((m-1)d) - 2^d)/(2^(2d) - 1) for m even; other sizes are left
    unpredicted.  The branch condition is the parity of m (for d = 1 that
    coincides with the parity of n).
    """
    if not 1 <= k < n:
        raise ValueError("k must satisfy 1 <= k < n")
    d = math.gcd(n, k)
    m = n // d
    if d == 1:
        if n % 2 == 1:
            return {0: (2 ** n + 1) // 3, 1: 2 ** (n - 1) - 1,
                    3: (2 ** (n - 1) - 1) // 3}
        return {0: (2 ** n - 1) // 3, 1: 2 ** (n - 1),
                3: (2 ** (n - 1) - 2) // 3}
    if m % 2 == 1:
        top = (2 ** ((m - 1) * d) - 1) // (2 ** (2 * d) - 1)
    else:
        top = (2 ** ((m - 1) * d) - 2 ** d) // (2 ** (2 * d) - 1)
    return {2 ** d + 1: top}


def predict_pn3(field: Field, c: int) -> Prediction:
    """c-differential uniformity of x^(3^n-3) over GF(3^n).

    c = 0: exactly 2.  c = -1: 6 when n = 0 (mod 4), else 4 (stated for
    n >= 2, but at n = 2 the exponent coincides with (3^n+3)/2 whose
    c = -1 value is 2, so the 4-branch carries an n >= 3 condition).
    Other c != 1: upper bound 5, with 4 attained for some c for every
    n >= 3 and 5 attained for n = 0 (mod 4).
    """
    if field.p != 3:
        raise ValueError("predictor requires p = 3")
    n = field.n
    if n < 2:
        raise ValueError("requires n >= 2")
    if c == 1:
        raise ValueError("c = 1 not covered for this family")
    if c == 0:
        return Prediction(EXACT, value=2, source="pn3")
    if c == field.p - 1:  # c = -1 scalar
        if n % 4 == 0:
            return Prediction(EXACT, value=6, source="pn3")
        return Prediction(EXACT, value=4, source="pn3",
                          conditions=(("n >= 3 (n = 2 gives 2, matching the "
                                       "(3^n+3)/2 family)", n >= 3),))
    return Prediction(UPPER, value=5, source="pn3",
                      extras={"attains_4": n >= 3, "attains_5": n % 4 == 0})


def predict_halfgold(p: int, n: int, k: int) -> Prediction:
    """x^((p^k+1)/2) at c = -1: PcN iff 2n/gcd(2n,k) is odd, otherwise
    uniformity (p^gcd(k,n) + 1)/2.

    extras carry the max-preimage parameter ell (half-gcd maximum) and
    the two PcN predicates: the operative one (2n/gcd(2n,k) odd) and the
    weaker n/gcd(n,k)-odd variant, which disagree for odd k; divergences
    are reported as findings, never silently resolved.
    """
    if p == 2:
        raise ValueError("requires odd p")
    if not (1 <= k < n) or n < 3:
        raise ValueError("requires 1 <= k < n and n >= 3")
    operative = (2 * n // math.gcd(2 * n, k)) % 2 == 1
    literal = (n // math.gcd(n, k)) % 2 == 1
    ell = max(gcd_closed_form(p, k, n) // 2,
              math.gcd(p ** k + 1, p ** n + 1) // 2)
    extras = {"pcn_operative": operative, "pcn_n_over_gcd_odd": literal,
              "predicates_diverge": operative != literal, "ell": ell}
    if operative:
        return Prediction(CLASS, klass=PCN, source="halfgold", extras=extras)
    return Prediction(EXACT, value=(p ** math.gcd(k, n) + 1) // 2,
                      source="halfgold", extras=extras)


def predict_3n3half(n: int, c_sign: int) -> Prediction:
    """x^((3^n+3)/2) over GF(3^n): PcN/APcN at c = -1 by the parity of n;
    uniformity 1 (n even) or 4 (n odd) at c = 1.

    extras expose gcd((3^n-3)/2, 3^(2n)-1), which is 1 / 4 / 8 according
    to n even / n = 3 (mod 4) / n = 1 (mod 4).
    """
    if n < 2:
        raise ValueError("requires n >= 2")
    if c_sign not in (1, -1):
        raise ValueError("c must be 1 or -1 for this predictor")
    if n % 2 == 0:
        gcd_lower = 1
    elif n % 4 == 3:
        gcd_lower = 4
    else:
        gcd_lower = 8
    extras = {"gcd_lower_family": gcd_lower}
    if c_sign == -1:
        klass = PCN if n % 2 == 1 else APCN
        return Prediction(CLASS, klass=klass, source="tnph", extras=extras)
    return Prediction(EXACT, value=1 if n % 2 == 0 else 4, source="tnph",
                      extras=extras)


def predict_prior_results(field: Field, case: str, k: int | None = None,
                          c: int | None = None) -> Prediction:
    """Earlier baseline results on monomials and the p = 3 trinomial.

    i:   x^2 is APcN for every c != 1.
    ii:  x^(p^k+1), p odd, is never PcN for c != 1; when (1-c)^(p^k-1) = 1
         and n/gcd(n,k) is even, the uniformity is at least p^g + 1.
    iii: p = 3, x^((3^k+1)/2) at c = -1; reported via predict_halfgold's
         two predicates.
    iv:  x^10 - u*x^6 - u^2*x^2 over GF(3^n) has uniformity >= 2, c != 1.
    """
    p, n = field.p, field.n
    if case == "i":
        return Prediction(EXACT, value=2, source="prior-i",
                          conditions=(("c != 1", c != 1),))
    if case == "ii":
        if k is None or c is None:
            raise ValueError("case ii needs k and c")
        g = math.gcd(n, k)
        cond_c = field.pow(field.sub(1, c), p ** k - 1) == 1
        cond_even = (n // g) % 2 == 0
        if cond_c and cond_even:
            return Prediction(LOWER, value=p ** g + 1, source="prior-ii",
                              conditions=(("p odd", p > 2), ("c != 1", c != 1)),
                              extras={"not_pcn": True})
        return Prediction(CLASS, klass=NOT_PCN, source="prior-ii",
                          conditions=(("p odd", p > 2), ("c != 1", c != 1)),
                          extras={"lower_bound_condition_met": False})
    if case == "iii":
        if k is None:
            raise ValueError("case iii needs k")
        return predict_halfgold(p, n, k)
    if case == "iv":
        return Prediction(LOWER, value=2, source="prior-iv",
                          conditions=(("p = 3", p == 3), ("c != 1", c != 1)))
    raise ValueError(f"unknown prior-results case {case!r}")


def _two_adic(m: int) -> int:
    t = 0
    while m % 2 == 0:
        m //= 2
        t += 1
    return t


def cgm_preimage_formula(field: Field, d: int, x0: int) -> int:
    """Predicted |D_d^{-1}(D_d(x0))| over GF(p^n), p odd.

    With m = gcd(d, q-1), l = gcd(d, q+1), 2^r exactly dividing q^2 - 1,
    and 2^t exactly dividing d, the size is:
      m    if eta(x0^2 - 4) = +1 and D_d(x0) != +-2
      l    if eta(x0^2 - 4) = -1 and D_d(x0) != +-2
      m/2  if eta(x0^2 - 4) = +1, 1 <= t <= r - 2, D_d(x0) = -2
      l/2  if eta(x0^2 - 4) = -1, 1 <= t <= r - 2, D_d(x0) = -2
      (m + l)/2 otherwise.
    """
    if field.p == 2:
        raise ValueError("requires odd p")
    from .functions import dickson_eval

    q = field.q
    m = math.gcd(d, q - 1)
    lbar = math.gcd(d, q + 1)
    r = _two_adic(q * q - 1)
    t = _two_adic(d) if d > 0 else 0
    disc = field.sub(field.mul(x0, x0), 4 % field.p)
    eta = field.quadratic_character(disc)
    val = dickson_eval(field, d, x0)
    two = 2 % field.p
    minus_two = field.neg(two)
    if val not in (two, minus_two):
        if eta == 1:
            return m
        if eta == -1:
            return lbar
    if val == minus_two and 1 <= t <= r - 2:
        if eta == 1:
            return m // 2
        if eta == -1:
            return lbar // 2
    return (m + lbar) // 2


_HRS_EXACT = {1, 2, 3, 4, 5, 6, 7, 8, 9}


def predict_hrs_apn(field: Field, family: str, k: int | None = None) -> Prediction:
    """Classical (c = 1) uniformity claims for the known APN exponent
    families over odd characteristic.

    hrs1..hrs9, leducq5 (level via k), zhawang5: exactly 2.
    dobbertin-a / dobbertin-b: at most 2 (sharpened to exactly 2 in later
    work, but 2 is not attained at the planar points n = 1, 3).
    """
    from .functions import Family, family_conditions

    fam = Family(family, k=k)
    conds = tuple(family_conditions(field, fam))
    if family.startswith("hrs"):
        return Prediction(EXACT, value=2, source=family, conditions=conds)
    if family in ("dobbertin-a", "dobbertin-b"):
        return Prediction(UPPER, value=2, source=family, conditions=conds,
                          extras={"sharpened_to_exact_for_large_n": True})
    if family in ("leducq5", "zhawang5"):
        return Prediction(EXACT, value=2, source=family, conditions=conds)
    raise ValueError(f"unknown APN family {family!r}")
