"""Finite fields GF(p^n) with exact arithmetic on integer-indexed elements.

An element is an integer in [0, q), q = p^n, encoding the coefficient
vector (a_0, ..., a_{n-1}) of its polynomial-basis representation as
sum a_i * p^i (a_0 least significant).  Index 0 is the additive identity,
index 1 the multiplicative identity, and prime-subfield scalars s have
index s.

Multiplication runs on log/antilog tables keyed to a fixed primitive
element when q <= TABLE_LIMIT; a polynomial-reduction route (carry-less
for p = 2, schoolbook with per-coefficient mod p otherwise) exists on
every field and is used when tables are disabled.
"""

from functools import lru_cache

import numpy as np

TABLE_LIMIT = 1 << 22
SIZE_LIMIT = 1 << 22


class FieldError(ValueError):
    """Invalid field parameters: bad characteristic, modulus, or size."""


class SizeLimitError(FieldError):
    """Requested field exceeds the configured size limit."""


def is_prime(m: int) -> bool:
    """Trial-division primality check, adequate for desk-scale p."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def prime_factors(m: int) -> list[int]:
    """Distinct prime factors of m, ascending."""
    out = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out.append(m)
    return out


# ---------------------------------------------------------------------------
# Polynomial helpers over F_p.  Coefficient lists are ascending-degree.
# ---------------------------------------------------------------------------

def _ptrim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, m, p):
    # m is monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        t = a[-1]
        if t:
            shift = len(a) - 1 - dm
            for i in range(dm):
                a[shift + i] = (a[shift + i] - t * m[i]) % p
        a.pop()
    return _ptrim(a)


def _pgcd(a, b, p):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        inv_lead = pow(b[-1], p - 2, p)
        bm = [(c * inv_lead) % p for c in b]
        a, b = b, _pmod(a, bm, p)
    return a


def _ppowmod(base, e, m, p):
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _frobenius_chain(f, p, n):
    # chain[i] = x^(p^i) mod f, for i = 0..n
    chain = [[0, 1]]
    for _ in range(n):
        chain.append(_ppowmod(chain[-1], p, f, p))
    return chain


def _is_irreducible(f, p) -> bool:
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    chain = _frobenius_chain(f, p, n)
    if chain[n] != [0, 1]:
        return False
    for r in prime_factors(n):
        g = list(chain[n // r])
        # g - x
        while len(g) < 2:
            g.append(0)
        g[1] = (g[1] - 1) % p
        if len(_pgcd(g, f, p)) != 1:
            return False
    return True


def _x_is_primitive(f, p, n) -> bool:
    # f must be irreducible; checks ord(x mod f) == p^n - 1
    q1 = p ** n - 1
    if n == 1 and f[0] % p == 0:
        return False  # x = 0, not a unit
    for r in prime_factors(q1):
        if _ppowmod([0, 1], q1 // r, f, p) == [1]:
            return False
    return True


def find_primitive_modulus(p: int, n: int) -> list[int]:
    """Smallest monic primitive polynomial of degree n over F_p.

    Candidates are ordered by the ascending-coefficient tuple read as a
    base-p integer, so the result is reproducible across runs.
    """
    if not is_prime(p):
        raise FieldError(f"p = {p} is not prime")
    if n < 1:
        raise FieldError("degree must be >= 1")
    if p ** n > SIZE_LIMIT:
        raise SizeLimitError(f"p^n = {p ** n} exceeds size limit {SIZE_LIMIT}")
    for low in range(p ** n):
        coeffs = [(low // p ** i) % p for i in range(n)] + [1]
        if _is_irreducible(coeffs, p) and _x_is_primitive(coeffs, p, n):
            return coeffs
    raise FieldError(f"no primitive polynomial found for p={p}, n={n}")


class Field:
    """A concrete GF(p^n): modulus, generator, tables, and arithmetic."""

    def __init__(self, p: int, n: int, modulus=None, tables=None):
        if not is_prime(p):
            raise FieldError(f"p = {p} is not prime")
        if n < 1:
            raise FieldError("degree must be >= 1")
        q = p ** n
        if q > SIZE_LIMIT:
            raise SizeLimitError(f"p^n = {q} exceeds size limit {SIZE_LIMIT}")
        self.p, self.n, self.q = p, n, q

        if modulus is None:
            modulus = find_primitive_modulus(p, n)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1:
            raise FieldError("modulus has wrong degree")
        if modulus[-1] != 1:
            raise FieldError("modulus is not monic")
        if not _is_irreducible(list(modulus), p):
            raise FieldError("modulus is reducible")
        self.modulus = modulus

        self._pows = np.array([p ** i for i in range(n)], dtype=np.int64)
        self._mod_mask = None
        if p == 2:
            self._mod_mask = sum(c << i for i, c in enumerate(modulus))

        self.generator = self._find_generator()
        self.has_tables = (q <= TABLE_LIMIT) if tables is None else bool(tables)
        self._log = self._alog = None
        if self.has_tables:
            self._build_tables()
        self._x = np.arange(q, dtype=np.int64)
        self._xplus = {}
        self._eta = None
        self._trace = None

    # -- construction internals ---------------------------------------------

    def _idx_to_poly(self, idx):
        p = self.p
        return _ptrim([(idx // p ** i) % p for i in range(self.n)])

    def _poly_to_idx(self, poly):
        return sum(c * self.p ** i for i, c in enumerate(poly))

    def _find_generator(self) -> int:
        x_idx = self.p if self.n > 1 else (-self.modulus[0]) % self.p
        if x_idx != 0 and self._order_notables(x_idx) == self.q - 1:
            return x_idx
        for idx in range(1, self.q):
            if self._order_notables(idx) == self.q - 1:
                return idx
        raise FieldError("no primitive element found")  # unreachable

    def _order_notables(self, a: int) -> int:
        o = self.q - 1
        for r in prime_factors(self.q - 1):
            while o % r == 0 and self._pow_poly(a, o // r) == 1:
                o //= r
        return o

    def _mul_by_x(self, idx: int) -> int:
        p, n = self.p, self.n
        if p == 2:
            idx <<= 1
            if idx & (1 << n):
                idx ^= self._mod_mask
            return idx
        digs = [(idx // p ** i) % p for i in range(n)]
        t = digs[-1]
        new = [0] + digs[:-1]
        if t:
            for i in range(n):
                new[i] = (new[i] - t * self.modulus[i]) % p
        return sum(new[i] * p ** i for i in range(n))

    def _build_tables(self):
        q = self.q
        alog = np.empty(q - 1, dtype=np.int64)
        g = self.generator
        x_idx = self.p if self.n > 1 else (-self.modulus[0]) % self.p
        a = 1
        if g == x_idx and self.n > 1:
            for i in range(q - 1):
                alog[i] = a
                a = self._mul_by_x(a)
        elif self.n == 1:
            for i in range(q - 1):
                alog[i] = a
                a = (a * g) % self.p
        else:
            gp = self._idx_to_poly(g)
            ap = [1]
            for i in range(q - 1):
                alog[i] = self._poly_to_idx(ap)
                ap = _pmod(_pmul(ap, gp, self.p), list(self.modulus), self.p)
        log = np.full(q, -1, dtype=np.int64)
        log[alog] = np.arange(q - 1, dtype=np.int64)
        self._alog, self._log = alog, log

    # -- scalar arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.n == 1:
            return (a + b) % self.p
        p = self.p
        out, shift = 0, 1
        for _ in range(self.n):
            out += ((a % p + b % p) % p) * shift
            a //= p
            b //= p
            shift *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out, shift = 0, 1
        for _ in range(self.n):
            out += ((-(a % p)) % p) * shift
            a //= p
            shift *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b)) if self.p != 2 else a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.has_tables:
            return int(self._alog[(self._log[a] + self._log[b]) % (self.q - 1)])
        return self.mul_poly(a, b)

    def mul_poly(self, a: int, b: int) -> int:
        """Multiplication by polynomial reduction, independent of the tables."""
        if a == 0 or b == 0:
            return 0
        if self.p == 2:
            r = 0
            top = 1 << self.n
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= self._mod_mask
            return r
        prod = _pmul(self._idx_to_poly(a), self._idx_to_poly(b), self.p)
        return self._poly_to_idx(_pmod(prod, list(self.modulus), self.p))

    def _pow_poly(self, a: int, e: int) -> int:
        if a == 0:
            return 1 if e == 0 else 0
        e %= self.q - 1
        r, base = 1, a
        while e:
            if e & 1:
                r = self.mul_poly(r, base)
            base = self.mul_poly(base, base)
            e >>= 1
        return r

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("exponent must be non-negative")
        if a == 0:
            return 1 if e == 0 else 0
        if self.has_tables:
            return int(self._alog[(self._log[a] * (e % (self.q - 1))) % (self.q - 1)])
        return self._pow_poly(a, e)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.has_tables:
            return int(self._alog[(self.q - 1 - self._log[a]) % (self.q - 1)])
        return self._pow_poly(a, self.q - 2)

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ValueError("order of zero is undefined")
        o = self.q - 1
        for r in prime_factors(self.q - 1):
            while o % r == 0 and self.pow(a, o // r) == 1:
                o //= r
        return o

    def trace(self, x: int) -> int:
        """Absolute trace sum x^(p^i), i = 0..n-1; a prime-subfield scalar."""
        acc, t = x, x
        for _ in range(self.n - 1):
            t = self.pow(t, self.p)
            acc = self.add(acc, t)
        return acc

    def relative_trace(self, x: int, d: int) -> int:
        """Trace into the subfield F_{p^d}; requires d | n."""
        if d < 1 or self.n % d != 0:
            raise ValueError(f"d = {d} does not divide n = {self.n}")
        acc, t = x, x
        step = self.p ** d
        for _ in range(self.n // d - 1):
            t = self.pow(t, step)
            acc = self.add(acc, t)
        return acc

    def quadratic_character(self, x: int) -> int:
        """0 at 0, +1 on nonzero squares, -1 on non-squares (p odd)."""
        if self.p == 2:
            raise FieldError("quadratic character needs odd characteristic")
        if x == 0:
            return 0
        s = self.pow(x, (self.q - 1) // 2)
        if s == 1:
            return 1
        if s == self.p - 1:
            return -1
        raise AssertionError("x^((q-1)/2) outside {1, -1}")

    # -- vectorized arithmetic (requires tables for mul/pow) ------------------

    def _dig(self, arr):
        arr = np.asarray(arr, dtype=np.int64)
        out = np.empty(arr.shape + (self.n,), dtype=np.int64)
        v = arr.copy()
        for i in range(self.n):
            out[..., i] = v % self.p
            v //= self.p
        return out

    def _undig(self, digs):
        return digs @ self._pows

    def add_vec(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(np.asarray(a, np.int64), np.asarray(b, np.int64))
        return self._undig((self._dig(a) + self._dig(b)) % self.p)

    def sub_vec(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(np.asarray(a, np.int64), np.asarray(b, np.int64))
        return self._undig((self._dig(a) - self._dig(b)) % self.p)

    def add_outer(self, a_arr, x_arr=None):
        """Index matrix of a + x over the cartesian product (rows a, cols x)."""
        x_arr = self._x if x_arr is None else np.asarray(x_arr, np.int64)
        a_arr = np.asarray(a_arr, np.int64)
        if self.p == 2:
            return a_arr[:, None] ^ x_arr[None, :]
        da = self._dig(a_arr)[:, None, :]
        dx = self._dig(x_arr)[None, :, :]
        return self._undig((da + dx) % self.p)

    def mul_vec(self, a, b):
        a = np.asarray(a, np.int64)
        b = np.asarray(b, np.int64)
        if not self.has_tables:
            av, bv = np.broadcast_arrays(a, b)
            return np.array([self.mul(int(x), int(y))
                             for x, y in zip(av.ravel(), bv.ravel())],
                            dtype=np.int64).reshape(av.shape)
        la, lb = self._log[a], self._log[b]
        prod = self._alog[(la + lb) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, prod)

    def pow_vec(self, arr, e: int):
        arr = np.asarray(arr, np.int64)
        if e < 0:
            raise ValueError("exponent must be non-negative")
        if e == 0:
            return np.ones_like(arr)
        if not self.has_tables:
            return np.array([self.pow(int(x), e) for x in arr.ravel()],
                            dtype=np.int64).reshape(arr.shape)
        er = e % (self.q - 1)
        vals = self._alog[(self._log[arr] * er) % (self.q - 1)]
        return np.where(arr == 0, 0, vals)

    def pow_range(self, e: int):
        """Value table of x^e over every element index."""
        return self.pow_vec(self._x, e)

    def x_plus(self, a: int):
        """Index permutation x -> x + a over the whole field.

        Small shifts are cached (the fast path hits a = 0, 1 constantly);
        the cache is capped so sweeping a over a large field stays O(q).
        """
        got = self._xplus.get(a)
        if got is None:
            got = self.add_vec(self._x, np.int64(a))
            got.setflags(write=False)
            if len(self._xplus) < 64:
                self._xplus[a] = got
        return got

    @property
    def eta_table(self):
        """Quadratic character per index: 0 at 0, else +-1 (p odd)."""
        if self.p == 2:
            raise FieldError("quadratic character needs odd characteristic")
        if self._eta is None:
            eta = np.empty(self.q, dtype=np.int64)
            eta[0] = 0
            if self.has_tables:
                eta[1:] = np.where(self._log[1:] % 2 == 0, 1, -1)
            else:
                for i in range(1, self.q):
                    eta[i] = self.quadratic_character(i)
            eta.setflags(write=False)
            self._eta = eta
        return self._eta

    @property
    def trace_table(self):
        if self._trace is None:
            if self.has_tables:
                acc = self._x.copy()
                t = self._x
                for _ in range(self.n - 1):
                    t = self.pow_vec(t, self.p)
                    acc = self.add_vec(acc, t)
            else:
                acc = np.array([self.trace(i) for i in range(self.q)], np.int64)
            acc.setflags(write=False)
            self._trace = acc
        return self._trace

    def block_rows(self, cell_budget: int = 1 << 21) -> int:
        """Row count per block for matrix scans, bounding temp memory."""
        per_row = self.q if self.p == 2 else self.q * self.n
        return max(1, cell_budget // per_row)

    # -- misc -----------------------------------------------------------------

    def element_str(self, idx: int) -> str:
        if idx == 0:
            return "0"
        terms = []
        for i, c in enumerate(self._idx_to_poly(idx)):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                x = "x" if i == 1 else f"x^{i}"
                terms.append(x if c == 1 else f"{c}{x}")
        return "+".join(terms)

    def modulus_str(self) -> str:
        return ",".join(str(c) for c in self.modulus)

    def __repr__(self):
        return f"Field(p={self.p}, n={self.n}, modulus={list(self.modulus)})"


@lru_cache(maxsize=None)
def _build_field(p, n, modulus, tables):
    return Field(p, n, modulus=None if modulus is None else list(modulus),
                 tables=tables)


def build_field(p: int, n: int, modulus=None, tables=None) -> Field:
    """Construct (or fetch the cached) GF(p^n).

    With no modulus the deterministic default from find_primitive_modulus
    is used, so the generator is x.  A user modulus must be monic, degree
    n, and irreducible; primitivity is not required and the generator is
    then the smallest-index element of full order.
    """
    key = None if modulus is None else tuple(int(c) for c in modulus)
    return _build_field(p, n, key, tables)


def parse_modulus(text: str) -> list[int]:
    """Parse the comma-separated ascending-coefficient modulus format."""
    return [int(t) for t in text.split(",")]
