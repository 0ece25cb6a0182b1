"""Exhaustive c-differential spectra and auxiliary distributions.

The core count is delta_c(a, b) = #{x : F(x+a) - c*F(x) = b}.  The
uniformity scan builds one histogram row per shift a; for monomials all
rows with a != 0 share the a = 1 row's histogram through the scaling
x -> u*x, so an O(q) fast path replaces the O(q^2) scan.  The full scan
stays available and the two are cross-checked in the test suite.
"""

from dataclasses import dataclass, field as dc_field

import numpy as np

from .field import Field
from .functions import (FunctionSpec, Monomial, function_dict, resolve,
                        value_table, dickson_table)

DEFAULT_BUDGET = 1 << 30
WITNESS_CAP = 16


class BudgetError(RuntimeError):
    """Requested scan exceeds the operation budget."""


@dataclass
class SpectrumReport:
    p: int
    n: int
    modulus: tuple
    function: dict
    c: int
    delta: int
    histogram: dict          # solution count -> number of (a, b) pairs
    witnesses: tuple         # ((a, b), ...) attaining delta, index order
    a_range_note: str
    # computation metadata, not part of the report's identity
    method: str = dc_field(default="full", compare=False)

    @property
    def rows_scanned(self) -> int:
        q = self.p ** self.n
        return q if "a = 0 included" in self.a_range_note else q - 1


@dataclass
class DistributionReport:
    sizes: dict              # size -> frequency
    total: int
    max_size: int
    note: str = ""
    zero_point: int | None = None   # separately-reported size at index 0


def classify(report_or_delta) -> str:
    """PcN for uniformity 1, APcN for 2, else '(c,delta)-uniform'."""
    delta = report_or_delta.delta if isinstance(report_or_delta, SpectrumReport) \
        else int(report_or_delta)
    if delta == 1:
        return "PcN"
    if delta == 2:
        return "APcN"
    return f"(c,{delta})-uniform"


def delta_count(field: Field, func: FunctionSpec, c: int, a: int, b: int) -> int:
    """Exact number of solutions x of F(x+a) - c*F(x) = b."""
    ft = value_table(field, func)
    vals = field.sub_vec(ft[field.x_plus(a)], field.mul_vec(np.int64(c), ft))
    return int((vals == b).sum())


def _hist_from_counts(counts):
    # counts: per-b solution counts of one or more rows; histogram over pairs
    return np.bincount(counts.ravel())


def _row_counts(field, ft, cft, a):
    b_vals = field.sub_vec(ft[field.x_plus(a)], cft)
    return np.bincount(b_vals, minlength=field.q)


def _fast_uniformity(field: Field, func, c: int, witness_cap: int):
    q = field.q
    mono = resolve(field, func)
    d = mono.d
    ft = value_table(field, func)
    cft = field.mul_vec(np.int64(c), ft)

    row1 = _row_counts(field, ft, cft, 1)
    hist = _hist_from_counts(row1) * (q - 1)
    delta = int(row1.max())
    row0 = None
    if c != 1:
        row0 = np.bincount(field.mul_vec(np.int64(field.sub(1, c)), ft),
                           minlength=q)
        h0 = _hist_from_counts(row0)
        if h0.size > hist.size:
            h0[: hist.size] += hist
            hist = h0
        else:
            hist[: h0.size] += h0
        delta = max(delta, int(row0.max()))

    witnesses = []
    if row0 is not None and row0.max() == delta:
        for b in np.flatnonzero(row0 == delta)[:witness_cap]:
            witnesses.append((0, int(b)))
    b1 = [int(b) for b in np.flatnonzero(row1 == delta)]
    if b1:
        for a in range(1, q):
            if len(witnesses) >= witness_cap:
                break
            ud = field.pow(a, d)
            bs = sorted(field.mul(ud, b) for b in b1)
            for b in bs:
                if len(witnesses) >= witness_cap:
                    break
                witnesses.append((a, b))
    return delta, hist, witnesses[:witness_cap]


def _full_uniformity(field: Field, func, c: int, witness_cap: int):
    q = field.q
    ft = value_table(field, func)
    cft = field.mul_vec(np.int64(c), ft)
    a_start = 1 if c == 1 else 0
    a_all = np.arange(a_start, q, dtype=np.int64)
    block = field.block_rows()

    def block_counts(a_vals):
        xa = field.add_outer(a_vals)
        b_matrix = field.sub_vec(ft[xa], cft[None, :])
        m = a_vals.size
        offsets = (np.arange(m, dtype=np.int64) * q)[:, None]
        flat = np.bincount((b_matrix + offsets).ravel(), minlength=m * q)
        return flat.reshape(m, q)

    delta = 0
    hist = np.zeros(1, dtype=np.int64)
    for start in range(0, a_all.size, block):
        counts = block_counts(a_all[start:start + block])
        h = _hist_from_counts(counts)
        if h.size > hist.size:
            h[: hist.size] += hist
            hist = h
        else:
            hist[: h.size] += h
        delta = max(delta, int(counts.max()))

    witnesses = []
    for start in range(0, a_all.size, block):
        a_vals = a_all[start:start + block]
        counts = block_counts(a_vals)
        rows, cols = np.nonzero(counts == delta)
        for r, b in zip(rows, cols):
            witnesses.append((int(a_vals[r]), int(b)))
            if len(witnesses) >= witness_cap:
                break
        if len(witnesses) >= witness_cap:
            break
    return delta, hist, witnesses


def uniformity(field: Field, func: FunctionSpec, c: int, method: str = "auto",
               witness_cap: int = WITNESS_CAP) -> SpectrumReport:
    """Scan all shifts a (a != 0 only when c = 1) and return the spectrum.

    method: "auto" takes the monomial fast path when the function is a
    power map, "fast" forces it, "full" forces the O(q^2) scan.
    """
    resolved = resolve(field, func)
    is_mono = isinstance(resolved, Monomial)
    if method == "fast" and not is_mono:
        raise ValueError("fast path requires a monomial function")
    use_fast = is_mono and method in ("auto", "fast")
    if use_fast:
        delta, hist, wits = _fast_uniformity(field, func, c, witness_cap)
    else:
        delta, hist, wits = _full_uniformity(field, func, c, witness_cap)
    histogram = {int(cnt): int(mult) for cnt, mult in enumerate(hist) if mult}
    note = "a = 0 included" if c != 1 else "a != 0 only (c = 1)"
    return SpectrumReport(p=field.p, n=field.n, modulus=field.modulus,
                          function=function_dict(func), c=int(c), delta=delta,
                          histogram=histogram, witnesses=tuple(wits),
                          a_range_note=note,
                          method="fast" if use_fast else "full")


def sweep_cost(field: Field, func: FunctionSpec, n_c: int) -> int:
    """Estimated table operations for a sweep over n_c values of c."""
    per_c = field.q if isinstance(resolve(field, func), Monomial) \
        else field.q * field.q
    return per_c * n_c


def sweep(field: Field, func: FunctionSpec, c_values="all", *,
          exclude_one: bool = True, exclude_zero: bool = False,
          budget: int | None = None) -> list:
    """One SpectrumReport per c, in deterministic order.

    c_values "all" scans every field element, honoring the exclusion
    flags; an explicit iterable is used as given.
    """
    if c_values == "all":
        cs = [c for c in range(field.q)
              if not (exclude_one and c == 1) and not (exclude_zero and c == 0)]
    else:
        cs = [int(c) for c in c_values]
    limit = DEFAULT_BUDGET if budget is None else budget
    cost = sweep_cost(field, func, len(cs))
    if cost > limit:
        raise BudgetError(
            f"sweep cost ~{cost} ops exceeds budget {limit}; "
            f"pass an explicit sample of c values (seeded) instead")
    return [uniformity(field, func, c) for c in cs]


def gold_equation_distribution(field: Field, k: int) -> DistributionReport:
    """Distribution of root counts of z^(2^k+1) + z + beta over beta != 0.

    One pass over z buckets beta = z^(2^k+1) + z; the multiplicity of each
    beta is its root count.  beta = 0 is reported separately via
    zero_point; it is always 2, since z^(2^k+1) + z = z * (z+1)^(2^k) has
    the distinct roots {0, 1}.
    """
    if field.p != 2:
        raise ValueError("gold equation distribution requires p = 2")
    if not 1 <= k < field.n:
        raise ValueError("k must satisfy 1 <= k < n")
    q = field.q
    vals = field.add_vec(field.pow_range(2 ** k + 1), field._x)
    per_beta = np.bincount(vals, minlength=q)
    dist = np.bincount(per_beta[1:])
    sizes = {int(s): int(f) for s, f in enumerate(dist) if f}
    return DistributionReport(sizes=sizes, total=q - 1,
                              max_size=int(per_beta[1:].max()),
                              note=f"roots of z^(2^{k}+1) + z + beta, beta != 0",
                              zero_point=int(per_beta[0]))


def dickson_preimage_distribution(field: Field, m: int) -> DistributionReport:
    """Distribution of |D_m^{-1}(D_m(x0))| over all x0 in the field."""
    if field.p == 2:
        raise ValueError("Dickson preimage analysis requires odd p")
    vals = dickson_table(field, m)
    img_counts = np.bincount(vals, minlength=field.q)
    fibers = img_counts[vals]
    dist = np.bincount(fibers)
    sizes = {int(s): int(f) for s, f in enumerate(dist) if f}
    return DistributionReport(sizes=sizes, total=field.q,
                              max_size=int(fibers.max()),
                              note=f"fiber sizes of D_{m}")


def dickson_fiber_sizes(field: Field, m: int):
    """Per-x0 fiber size |D_m^{-1}(D_m(x0))| as a vector."""
    vals = dickson_table(field, m)
    return np.bincount(vals, minlength=field.q)[vals]


def jacobsthal_sum(field: Field, a2: int, a1: int, a0: int) -> int:
    """Character sum over the field of eta(a2*x^2 + a1*x + a0), a2 != 0."""
    if field.p == 2:
        raise ValueError("Jacobsthal sums require odd characteristic")
    if a2 == 0:
        raise ValueError("quadratic coefficient a2 must be nonzero")
    x = field._x
    vals = field.add_vec(
        field.add_vec(field.mul_vec(np.int64(a2), field.pow_range(2)),
                      field.mul_vec(np.int64(a1), x)),
        np.int64(a0))
    return int(field.eta_table[vals].sum())
