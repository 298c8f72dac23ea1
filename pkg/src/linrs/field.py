"""Finite fields GF(p^m) with exp/log/Zech tables.

Elements are ints: ``x = sum(c_i * p**i)`` encodes the residue class
``sum(c_i * X**i)`` modulo the defining polynomial, so ``0`` and ``1`` are
the field's zero and one and ``p`` is the primitive element pi (for m > 1).
Polynomials are coefficient lists, low degree first: x^4+x+1 is
``[1, 1, 0, 0, 1]``.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .errors import ConsistencyError, ParameterError, BudgetError
from .params import FieldParams, is_prime, prime_factors

FIELD_CAP = 2 ** 24


def _polymulmod(a, b, f, p):
    m = len(f) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # f is monic
    for deg in range(len(prod) - 1, m - 1, -1):
        c = prod[deg]
        if c:
            for t in range(m + 1):
                prod[deg - m + t] = (prod[deg - m + t] - c * f[t]) % p
    out = prod[:m] + [0] * (m - len(prod[:m]))
    return out


def _x_pow_mod(n, f, p):
    m = len(f) - 1
    result = [1] + [0] * (m - 1)
    base = _polymulmod([0, 1], [1], f, p) if m > 1 else [(-f[0]) % p]
    while n:
        if n & 1:
            result = _polymulmod(result, base, f, p)
        base = _polymulmod(base, base, f, p)
        n >>= 1
    return result


def is_primitive_poly(f, p: int) -> bool:
    """True iff monic ``f`` has a root generating GF(p^m)^*.

    Checked as: X has multiplicative order exactly p^m - 1 modulo f.
    """
    f = [int(c) % p for c in f]
    m = len(f) - 1
    if m < 1 or f[-1] != 1 or f[0] == 0:
        return False
    order = p ** m - 1
    one = [1] + [0] * (m - 1)
    if _x_pow_mod(order, f, p) != one:
        return False
    return all(_x_pow_mod(order // ell, f, p) != one for ell in prime_factors(order))


def find_primitive_poly(p: int, m: int, cap: int = FIELD_CAP) -> list[int]:
    """Smallest primitive monic polynomial of degree m over Z/p.

    Candidates are ordered by the integer ``sum(c_i * p**i)`` of their
    lower coefficients, so x^4+x+1 precedes x^4+x^3+1.
    """
    if not is_prime(p):
        raise ParameterError(f"p must be prime, got {p}")
    if m < 1:
        raise ParameterError(f"m must be positive, got {m}")
    if p ** m > cap:
        raise BudgetError(f"field size {p}^{m} exceeds cap {cap}", p ** m, cap)
    for n in range(p ** m):
        low = [(n // p ** i) % p for i in range(m)]
        f = low + [1]
        if is_primitive_poly(f, p):
            return f
    raise ConsistencyError(f"no primitive polynomial of degree {m} over F_{p}")


class GF:
    """The field GF(p^m) defined by a primitive polynomial.

    Parameters
    ----------
    p : int
        Characteristic (prime).
    m : int
        Extension degree.
    modulus : sequence of int, optional
        Monic primitive polynomial, low degree first.  Defaults to
        :func:`find_primitive_poly`.
    """

    def __init__(self, p: int, m: int, modulus=None, cap: int = FIELD_CAP):
        if not is_prime(p):
            raise ParameterError(f"p must be prime, got {p}")
        if m < 1:
            raise ParameterError(f"m must be positive, got {m}")
        if p ** m > cap:
            raise BudgetError(f"field size {p}^{m} exceeds cap {cap}", p ** m, cap)
        if modulus is None:
            modulus = find_primitive_poly(p, m, cap)
        else:
            modulus = [int(c) for c in modulus]
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ParameterError(
                    f"modulus must be monic of degree {m}: {modulus}")
            if not is_primitive_poly(modulus, p):
                raise ParameterError(
                    f"modulus {modulus} is not primitive over F_{p}")
        self.p = p
        self.m = m
        self.order = p ** m
        self.modulus = tuple(modulus)
        self._build_tables()

    # table construction

    def _times_x(self, v: int) -> int:
        p, m = self.p, self.m
        top = v // p ** (m - 1)
        v = (v % p ** (m - 1)) * p
        if top:
            digits = self.to_digits(v)
            digits = [(c - top * f) % p for c, f in zip(digits, self.modulus)]
            v = self.from_digits(digits)
        return v

    def _build_tables(self):
        q = self.order
        n = q - 1
        exp = [0] * n
        log = [-1] * q
        v = 1
        for i in range(n):
            if log[v] != -1:
                raise ConsistencyError("defining polynomial is not primitive")
            exp[i] = v
            log[v] = i
            v = self._times_x(v)
        if v != 1:
            raise ConsistencyError("pi does not have order p^m - 1")
        self.exp_table = exp
        self.log_table = log
        self.pi = exp[1 % n] if n > 0 else 1
        self.minus_one = exp[n // 2] if self.p != 2 else 1
        if self.p != 2:
            zech = [-1] * n
            for i in range(n):
                s = self._add_digits(1, exp[i])
                zech[i] = log[s]
            self._zech = zech

    # representation

    def to_digits(self, x: int) -> list[int]:
        """Coefficient vector (low degree first) of element ``x``."""
        p = self.p
        out = []
        for _ in range(self.m):
            x, c = divmod(x, p)
            out.append(c)
        return out

    def from_digits(self, digits) -> int:
        x = 0
        for c in reversed(list(digits)):
            x = x * self.p + int(c) % self.p
        return x

    def digits_array(self, values) -> np.ndarray:
        """Vectorised :meth:`to_digits`; shape ``values.shape + (m,)``."""
        values = np.asarray(values, dtype=np.int64)
        powers = self.p ** np.arange(self.m, dtype=np.int64)
        return (values[..., None] // powers) % self.p

    def from_digits_array(self, digits) -> np.ndarray:
        powers = self.p ** np.arange(self.m, dtype=np.int64)
        return (np.asarray(digits, dtype=np.int64) % self.p) @ powers

    def _add_digits(self, x: int, y: int) -> int:
        return self.from_digits(
            a + b for a, b in zip(self.to_digits(x), self.to_digits(y)))

    @property
    def elements(self) -> range:
        return range(self.order)

    # arithmetic

    def add(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        if x == 0:
            return y
        if y == 0:
            return x
        n = self.order - 1
        lx = self.log_table[x]
        z = self._zech[(self.log_table[y] - lx) % n]
        if z < 0:
            return 0
        return self.exp_table[(lx + z) % n]

    def neg(self, x: int) -> int:
        if self.p == 2 or x == 0:
            return x
        return self.mul(x, self.minus_one)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self.exp_table[(self.log_table[x] + self.log_table[y]) % (self.order - 1)]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.exp_table[(-self.log_table[x]) % (self.order - 1)]

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, n: int) -> int:
        if x == 0:
            if n < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if n == 0 else 0
        return self.exp_table[(self.log_table[x] * n) % (self.order - 1)]

    def frobenius(self, x: int, t: int) -> int:
        """x ** (p ** t).  Exponent t is reduced mod m first."""
        t %= self.m
        if x == 0 or t == 0:
            return x
        n = self.order - 1
        return self.exp_table[(self.log_table[x] * pow(self.p, t, n)) % n]

    def mul_array(self, x, y) -> np.ndarray:
        """Elementwise product of integer-encoded arrays."""
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        exp = np.asarray(self.exp_table, dtype=np.int64)
        log = np.asarray(self.log_table, dtype=np.int64)
        out = exp[(log[x] + log[y]) % (self.order - 1)]
        return np.where((x == 0) | (y == 0), 0, out)

    def multiplicative_order(self, x: int) -> int:
        if x == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.order - 1
        order = n
        for ell in prime_factors(n) if n > 1 else []:
            while order % ell == 0 and self.pow(x, order // ell) == 1:
                order //= ell
        return order

    def __repr__(self):
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"


class Subfield:
    """The copy of F_{p^e} inside a GF(p^m), as the fixed field of x -> x^(p^e).

    Elements keep their big-field integer encoding; arithmetic delegates to
    the parent field.
    """

    def __init__(self, parent: GF, e: int):
        if parent.m % e:
            raise ParameterError(f"e={e} does not divide m={parent.m}")
        self.parent = parent
        self.e = e
        self.order = parent.p ** e
        step = (parent.order - 1) // (self.order - 1)
        self.generator = parent.exp_table[step % (parent.order - 1)]
        self.elements = sorted([0] + [parent.exp_table[i * step] for i in range(self.order - 1)])
        self._members = frozenset(self.elements)
        self.add = parent.add
        self.sub = parent.sub
        self.neg = parent.neg
        self.mul = parent.mul
        self.inv = parent.inv

    def __contains__(self, x: int) -> bool:
        return x in self._members

    def __repr__(self):
        return f"Subfield(F_{self.parent.p}^{self.e} in {self.parent!r})"


class FieldContext(GF):
    """GF(p^m) together with the parameters (d, k) and the F_{p^e} structure.

    Attributes
    ----------
    params : FieldParams
    subfield : Subfield
        Embedded F_{p^e}.
    subfield_basis : tuple of int
        ``(1, pi, ..., pi^(m/e - 1))``, a basis of F_{p^m} over F_{p^e}.
    """

    def __init__(self, params: FieldParams, modulus=None, cap: int = FIELD_CAP):
        super().__init__(params.p, params.m, modulus, cap)
        self.params = params
        self.e = params.e
        self.d = params.d
        self.k = params.k
        s = params.s
        self.subfield = Subfield(self, self.e)
        self.subfield_basis = tuple(self.pow(self.pi, i) for i in range(s))
        self._build_coordinates()

    def _build_coordinates(self):
        # F_p-basis {omega^t * pi^i}: column i*e + t of B holds its digits.
        e, s, p = self.e, self.params.s, self.p
        omega = self.subfield.generator
        self._omega_powers = [self.pow(omega, t) for t in range(e)]
        cols = []
        for i in range(s):
            for t in range(e):
                cols.append(self.to_digits(self.mul(self._omega_powers[t], self.subfield_basis[i])))
        B = linalg.transpose(cols)
        prime = GF(p, 1)
        try:
            Binv = linalg.inverse(B, prime)
        except ValueError:
            raise ConsistencyError("subfield basis is not linearly independent") from None
        self._coord_inv = np.asarray(Binv, dtype=np.int64)

    def coords_over_subfield(self, x: int) -> list[int]:
        """Coordinates of x in ``subfield_basis``, entries in :attr:`subfield`."""
        c = (self._coord_inv @ np.asarray(self.to_digits(x), dtype=np.int64)) % self.p
        e = self.e
        out = []
        for i in range(self.params.s):
            acc = 0
            for t in range(e):
                # constants of F_p are encoded as themselves
                ct = int(c[i * e + t])
                if ct:
                    acc = self.add(acc, self.mul(ct, self._omega_powers[t]))
            out.append(acc)
        return out

    def from_coords(self, coords) -> int:
        acc = 0
        for c, b in zip(coords, self.subfield_basis):
            if c:
                acc = self.add(acc, self.mul(c, b))
        return acc

    def trace_to_subfield(self, x: int) -> int:
        """Relative trace sum_{i < m/e} x^(p^(e i)), an element of F_{p^e}."""
        acc = 0
        for i in range(self.params.s):
            acc = self.add(acc, self.frobenius(x, self.e * i))
        return acc

    def __repr__(self):
        return f"FieldContext({self.params}, modulus={list(self.modulus)})"


def field_build(params: FieldParams, modulus_override=None, cap: int = FIELD_CAP) -> FieldContext:
    return FieldContext(params, modulus_override, cap)
