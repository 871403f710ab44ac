"""Weighted-graded polynomial rings and the hypersurface quotient R = Q[x]/(f).

Monomials are exponent tuples, polynomials are sparse dicts mapping
exponent tuples to nonzero Fractions.  A :class:`WeightedRing` fixes
variable names, positive integer weights d_i, and a weighted-homogeneous
polynomial f of degree d >= 2; elements of the quotient are kept in a
canonical normal form (remainder of division by f under the fixed
monomial order), so equality in R is literal equality of representatives.

The monomial order is weighted-degree first, ties broken lexicographically
with the first variable greatest.  Any order would do, since a single
polynomial is a Groebner basis of the principal ideal it generates;
fixing one makes normal forms and report files reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence, Union

Monomial = tuple  # tuple[int, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


class Polynomial:
    """A sparse multivariate polynomial over Q.

    ``terms`` maps exponent tuples to nonzero coefficients; the zero
    polynomial has an empty dict.  Instances are immutable by convention.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        self.nvars = nvars
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mon, c in terms.items():
                if len(mon) != nvars:
                    raise ValueError(f"exponent tuple {mon} has wrong length")
                c = _coerce(c)
                if c:
                    clean[tuple(mon)] = c
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: _coerce(c)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): _ONE})

    @classmethod
    def monomial(cls, exps: Monomial, c=1) -> "Polynomial":
        return cls(len(exps), {tuple(exps): _coerce(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for mon, c in other.terms.items():
            s = out.get(mon, _ZERO) + c
            if s:
                out[mon] = s
            else:
                out.pop(mon, None)
        p = Polynomial.__new__(Polynomial)
        p.nvars = self.nvars
        p.terms = out
        return p

    def __neg__(self) -> "Polynomial":
        p = Polynomial.__new__(Polynomial)
        p.nvars = self.nvars
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c) -> "Polynomial":
        c = _coerce(c)
        p = Polynomial.__new__(Polynomial)
        p.nvars = self.nvars
        p.terms = {} if not c else {m: v * c for m, v in self.terms.items()}
        return p

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mon = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(mon, _ZERO) + c1 * c2
                if s:
                    out[mon] = s
                else:
                    out.pop(mon, None)
        p = Polynomial.__new__(Polynomial)
        p.nvars = self.nvars
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def partial(self, index: int) -> "Polynomial":
        """Formal partial derivative with respect to variable ``index``."""
        out: dict[Monomial, Fraction] = {}
        for mon, c in self.terms.items():
            e = mon[index]
            if e:
                lowered = list(mon)
                lowered[index] = e - 1
                out[tuple(lowered)] = c * e
        p = Polynomial.__new__(Polynomial)
        p.nvars = self.nvars
        p.terms = out
        return p

    def __repr__(self):
        return f"Polynomial({self.terms!r})"


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


class WeightedRing:
    """The graded ring Q[x_1..x_n]/(f) with deg x_i = weights[i].

    f must be weighted-homogeneous of degree d >= 2; this is validated at
    construction because the entire graded pipeline depends on it.
    omega_i = d_i/d and delta = omega_1 + ... + omega_n - 1 are kept as
    exact Fractions (delta enters the degree-shift formulas downstream).
    """

    def __init__(self, variable_names: Sequence[str], weights: Sequence[int],
                 f: Union[Polynomial, str]):
        names = list(variable_names)
        if len(set(names)) != len(names) or not names:
            raise ValueError("variable names must be nonempty and distinct")
        if len(weights) != len(names):
            raise ValueError("one weight per variable required")
        if any((not isinstance(w, int)) or w <= 0 for w in weights):
            raise ValueError("weights must be positive integers")
        self.variable_names = names
        self.weights = list(weights)
        self.nvars = len(names)
        if isinstance(f, str):
            from .parser import parse_polynomial
            f = parse_polynomial(f, names)
        if f.nvars != self.nvars:
            raise ValueError("f has the wrong number of variables")
        if f.is_zero():
            raise ValueError("f must be nonzero")
        degrees = {self.weighted_degree(m) for m in f.terms}
        if len(degrees) != 1:
            raise ValueError(f"f is not weighted-homogeneous: degrees {sorted(degrees)}")
        self.d = degrees.pop()
        if self.d < 2:
            raise ValueError("f must have weighted degree at least 2")
        self.f = f
        self.omega = [Fraction(w, self.d) for w in self.weights]
        self.delta = sum(self.omega, Fraction(0)) - 1
        self.lead_monomial_f = max(f.terms, key=self.order_key)
        self.lead_coeff_f = f.terms[self.lead_monomial_f]
        self._monomial_cache: dict[int, list[Monomial]] = {}
        self._basis_cache: dict[int, list[Monomial]] = {}
        # degree-indexed scratch caches used by the graded machinery
        self.scratch: dict = {}

    # -- grading and order ----------------------------------------------

    def weighted_degree(self, mon: Monomial) -> int:
        return sum(e * w for e, w in zip(mon, self.weights))

    def order_key(self, mon: Monomial):
        return (self.weighted_degree(mon), mon)

    def poly_weighted_degree(self, p: Polynomial) -> int | None:
        """Weighted degree of a homogeneous polynomial, None for 0."""
        degrees = {self.weighted_degree(m) for m in p.terms}
        if not degrees:
            return None
        if len(degrees) != 1:
            raise ValueError("polynomial is not homogeneous")
        return degrees.pop()

    def monomials_of_weight(self, w: int) -> list[Monomial]:
        """All ambient monomials of weighted degree w, largest first."""
        if w < 0:
            return []
        cached = self._monomial_cache.get(w)
        if cached is not None:
            return cached
        out: list[Monomial] = []
        exps = [0] * self.nvars

        def rec(i: int, remaining: int):
            if i == self.nvars - 1:
                if remaining % self.weights[i] == 0:
                    exps[i] = remaining // self.weights[i]
                    out.append(tuple(exps))
                    exps[i] = 0
                return
            wi = self.weights[i]
            for e in range(remaining // wi + 1):
                exps[i] = e
                rec(i + 1, remaining - e * wi)
            exps[i] = 0

        rec(0, w)
        out.sort(key=self.order_key, reverse=True)
        self._monomial_cache[w] = out
        return out

    def graded_basis(self, w: int) -> list[Monomial]:
        """Monomial basis of the graded piece R_w (normal-form monomials)."""
        cached = self._basis_cache.get(w)
        if cached is None:
            lead = self.lead_monomial_f
            cached = [m for m in self.monomials_of_weight(w) if not _divides(lead, m)]
            self._basis_cache[w] = cached
        return cached

    # -- quotient elements ----------------------------------------------

    def normal_form(self, p: Polynomial) -> "QuotientElement":
        """Canonical remainder of p under division by f."""
        rem = Polynomial(self.nvars, p.terms)
        lead, lc = self.lead_monomial_f, self.lead_coeff_f
        while True:
            reducible = [m for m in rem.terms if _divides(lead, m)]
            if not reducible:
                break
            m = max(reducible, key=self.order_key)
            c = rem.terms[m]
            shift = tuple(a - b for a, b in zip(m, lead))
            rem = rem - Polynomial.monomial(shift, c / lc) * self.f
        return QuotientElement(self, rem)

    def element(self, value) -> "QuotientElement":
        """Coerce a string, Polynomial, or rational into R."""
        if isinstance(value, QuotientElement):
            if value.ring is not self:
                raise ValueError("element belongs to a different ring")
            return value
        if isinstance(value, str):
            from .parser import parse_polynomial
            value = parse_polynomial(value, self.variable_names)
        if not isinstance(value, Polynomial):
            value = Polynomial.constant(self.nvars, value)
        return self.normal_form(value)

    def zero(self) -> "QuotientElement":
        return QuotientElement(self, Polynomial.zero(self.nvars))

    def one(self) -> "QuotientElement":
        return QuotientElement(self, Polynomial.constant(self.nvars, 1))

    def variable(self, index: int) -> "QuotientElement":
        return self.element(Polynomial.variable(self.nvars, index))

    # -- printing ---------------------------------------------------------

    def monomial_str(self, mon: Monomial) -> str:
        parts = []
        for name, e in zip(self.variable_names, mon):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def poly_str(self, p: Polynomial) -> str:
        """Deterministic grammar-compatible rendering, largest term first."""
        if p.is_zero():
            return "0"
        chunks: list[str] = []
        for mon in sorted(p.terms, key=self.order_key, reverse=True):
            c = p.terms[mon]
            mon_s = self.monomial_str(mon)
            mag = abs(c)
            if not mon_s:
                body = str(mag)
            elif mag == 1:
                body = mon_s
            else:
                body = f"{mag}*{mon_s}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self):
        pairs = ", ".join(f"{n}:{w}" for n, w in zip(self.variable_names, self.weights))
        return f"WeightedRing({pairs}; f = {self.poly_str(self.f)})"


class QuotientElement:
    """An element of R = Q[x]/(f), stored as its canonical normal form."""

    __slots__ = ("ring", "rep")

    def __init__(self, ring: WeightedRing, rep: Polynomial):
        self.ring = ring
        self.rep = rep

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def __eq__(self, other):
        if not isinstance(other, QuotientElement):
            return NotImplemented
        return self.ring is other.ring and self.rep == other.rep

    def __hash__(self):
        return hash((id(self.ring), self.rep))

    def _check_ring(self, other: "QuotientElement"):
        if self.ring is not other.ring:
            raise ValueError("elements of different rings")

    def __add__(self, other: "QuotientElement") -> "QuotientElement":
        self._check_ring(other)
        return QuotientElement(self.ring, self.rep + other.rep)

    def __sub__(self, other: "QuotientElement") -> "QuotientElement":
        self._check_ring(other)
        return QuotientElement(self.ring, self.rep - other.rep)

    def __neg__(self) -> "QuotientElement":
        return QuotientElement(self.ring, -self.rep)

    def __mul__(self, other):
        if isinstance(other, QuotientElement):
            self._check_ring(other)
            return self.ring.normal_form(self.rep * other.rep)
        return QuotientElement(self.ring, self.rep.scale(other))

    __rmul__ = __mul__

    def scale(self, c) -> "QuotientElement":
        return QuotientElement(self.ring, self.rep.scale(c))

    def weighted_degree(self) -> int | None:
        """Degree of a homogeneous element; None for zero."""
        return self.ring.poly_weighted_degree(self.rep)

    def is_homogeneous(self) -> bool:
        degrees = {self.ring.weighted_degree(m) for m in self.rep.terms}
        return len(degrees) <= 1

    def homogeneous_components(self) -> dict[int, "QuotientElement"]:
        """Split into weighted-homogeneous pieces, keyed by degree."""
        buckets: dict[int, dict[Monomial, Fraction]] = {}
        for mon, c in self.rep.terms.items():
            buckets.setdefault(self.ring.weighted_degree(mon), {})[mon] = c
        return {w: QuotientElement(self.ring, Polynomial(self.ring.nvars, t))
                for w, t in sorted(buckets.items())}

    def component(self, w: int) -> "QuotientElement":
        terms = {m: c for m, c in self.rep.terms.items()
                 if self.ring.weighted_degree(m) == w}
        return QuotientElement(self.ring, Polynomial(self.ring.nvars, terms))

    def __str__(self):
        return self.ring.poly_str(self.rep)

    def __repr__(self):
        return f"<{self} in R>"


def apply_derivation(coeffs: Sequence[QuotientElement], r: QuotientElement) -> QuotientElement:
    """Apply the derivation sum(c_i d/dx_i) to r and reduce mod f.

    The caller is responsible for the coefficients describing a derivation
    that preserves (f); the value on a canonical representative is then
    the value on the class.
    """
    ring = r.ring
    total = Polynomial.zero(ring.nvars)
    for i, c in enumerate(coeffs):
        if c.is_zero():
            continue
        total = total + c.rep * r.rep.partial(i)
    return ring.normal_form(total)
