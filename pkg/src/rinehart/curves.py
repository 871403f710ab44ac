"""Monomial curve singularities R = k[Gamma] and their graded rank-one modules.

Everything here is exact integer enumeration.  A numerical semigroup
Gamma (gcd of generators 1, so the gap set H is finite) determines the
derivation module of k[Gamma]: it is generated by the Euler derivation E
together with t^w E for w in

    Gamma1 = { w in H : w + (Gamma \\ {0}) is contained in Gamma }.

A graded rank-one torsion-free module is k[Lambda] for a set Lambda with
Gamma <= Lambda <= N_0 and Gamma + Lambda <= Lambda, stored by its finite
complement.  Whether k[Lambda] carries a connection is decided by

    S = { lam in Lambda : lam + Gamma1 not contained in Lambda }:

no connection for |S| >= 2, exactly the scalars nabla_E = E - c with
c = the unique element of S for |S| = 1, and all scalars c for S empty.
A brute-force search over non-scalar potentials doubles as an
independent oracle for that trichotomy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .exactmath import ExactMatrix


@dataclass(frozen=True)
class Semigroup:
    generators: tuple[int, ...]
    gaps: tuple[int, ...]
    frobenius: int            # -1 when Gamma = N_0
    gamma1: tuple[int, ...]

    def contains(self, n: int) -> bool:
        return n >= 0 and (n > self.frobenius or n not in self._gap_set)

    @property
    def _gap_set(self) -> frozenset:
        return frozenset(self.gaps)

    def derivation_degrees(self) -> tuple[int, ...]:
        """Degrees of the generators of Der(k[Gamma]): E and t^w E."""
        return (0,) + self.gamma1


def analyze_semigroup(generators: Sequence[int]) -> Semigroup:
    """Gaps, Frobenius number, and Gamma1 by enumeration."""
    gens = sorted(set(int(g) for g in generators))
    if not gens or gens[0] <= 0:
        raise ValueError("generators must be positive integers")
    g = 0
    for x in gens:
        g = gcd(g, x)
    if g != 1:
        raise ValueError(f"gcd of generators is {g}, not 1; gaps would be infinite")
    smallest = gens[0]
    # grow the table until a run of `smallest` consecutive members appears;
    # beyond that point every integer is in the semigroup
    bound = max(gens) + 1
    while True:
        member = [False] * (bound + 1)
        member[0] = True
        for n in range(1, bound + 1):
            for x in gens:
                if x <= n and member[n - x]:
                    member[n] = True
                    break
        run = 0
        stop = None
        for n in range(bound + 1):
            run = run + 1 if member[n] else 0
            if run == smallest:
                stop = n
                break
        if stop is not None:
            break
        bound *= 2
    gaps = tuple(n for n in range(stop + 1) if not member[n])
    frobenius = gaps[-1] if gaps else -1
    gamma1 = []
    for w in gaps:
        # w + gamma > frobenius is automatic; only small gamma need checking
        ok = all(member[w + gamma] if w + gamma <= stop else True
                 for gamma in range(1, stop + 1) if member[gamma])
        if ok:
            gamma1.append(w)
    return Semigroup(tuple(gens), gaps, frobenius, tuple(gamma1))


@dataclass(frozen=True)
class LambdaModule:
    """The module k[Lambda], with Lambda given by its finite complement."""

    semigroup: Semigroup
    complement: tuple[int, ...]

    def __post_init__(self):
        comp = tuple(sorted(set(int(n) for n in self.complement)))
        object.__setattr__(self, "complement", comp)
        if any(n < 0 for n in comp):
            raise ValueError("the complement lives inside the nonnegative integers")
        bad = [n for n in comp if self.semigroup.contains(n)]
        if bad:
            raise ValueError(f"Lambda must contain Gamma; complement hits {bad}")
        # Gamma + Lambda <= Lambda, checked by enumeration over the finite window
        top = (max(comp, default=0) + max(self.semigroup.generators)
               + max(self.semigroup.frobenius, 0) + 1)
        for lam in range(top + 1):
            if not self.contains(lam):
                continue
            for g in range(1, top - lam + 1):
                if self.semigroup.contains(g) and not self.contains(lam + g):
                    raise ValueError(
                        f"Gamma + Lambda leaves Lambda: {g} + {lam} = {g + lam}")

    def contains(self, n: int) -> bool:
        return n >= 0 and n not in self.complement

    def obstruction_set(self) -> tuple[int, ...]:
        """S = { lam in Lambda : lam + Gamma1 not contained in Lambda }."""
        gamma1 = self.semigroup.gamma1
        if not gamma1:
            return ()
        top = max(self.complement, default=-1)
        out = []
        for lam in range(top + 1):
            if self.contains(lam) and any(not self.contains(lam + w) for w in gamma1):
                out.append(lam)
        return tuple(out)

    def transporter(self, bound: int) -> list[int]:
        """Exponents a <= bound with a + Lambda <= Lambda (End(M) degrees)."""
        top = max(self.complement, default=-1)
        out = []
        for a in range(bound + 1):
            if not self.contains(a):
                continue
            if all(not self.contains(lam) or self.contains(a + lam)
                   for lam in range(top + 1)):
                out.append(a)
        return out


@dataclass(frozen=True)
class Trichotomy:
    kind: str                     # "all_scalars" | "unique" | "none"
    obstruction_set: tuple[int, ...]
    c: Fraction | None            # the forced scalar in the "unique" case

    @property
    def admits_connection(self) -> bool:
        return self.kind != "none"

    def admits(self, c: Fraction) -> bool:
        if self.kind == "all_scalars":
            return True
        if self.kind == "unique":
            return c == self.c
        return False


def classify_connections(module: LambdaModule) -> Trichotomy:
    """The connection trichotomy driven by the obstruction set S.

    For an admissible c the connection acts by nabla_E(t^lam) =
    (lam - c) t^lam, and nabla_{t^w E} = t^w nabla_E for w in Gamma1.
    """
    s = module.obstruction_set()
    if len(s) == 0:
        return Trichotomy("all_scalars", s, None)
    if len(s) == 1:
        return Trichotomy("unique", s, Fraction(s[0]))
    return Trichotomy("none", s, None)


def default_degree_bound(module: LambdaModule, c: Fraction = Fraction(0)) -> int:
    """Stabilization bound: past it C^0 = C^1 = 1 and d0 is injective."""
    sg = module.semigroup
    c_part = max(1, int(c) if c == int(c) else int(c) + 1)
    return (max(sg.frobenius, 0) + max(sg.gamma1, default=0)
            + max(sg.generators) + c_part + 1)


@dataclass(frozen=True)
class CurveDegreeRecord:
    degree: int
    dim_c0: int
    dim_c1: int
    rank_d0: int
    dim_h0: int
    dim_h1: int


@dataclass
class CurveCohomology:
    module: LambdaModule
    c: Fraction
    bound: int
    records: list[CurveDegreeRecord]

    @property
    def h1_all_zero(self) -> bool:
        return all(r.dim_h1 == 0 for r in self.records)

    def h1_total(self) -> int:
        return sum(r.dim_h1 for r in self.records)


def curve_cohomology(module: LambdaModule, c: Fraction, bound: int | None = None) -> CurveCohomology:
    """Per-degree cohomology of the twisted complex for nabla_E = E - c.

    C^0_lam = k for lam in Lambda; C^1_lam = k for lam in Lambda \\ S via
    the value on E (values on t^w E are forced by torsion-freeness);
    d0 acts as multiplication by (lam - c); C^i = 0 for i >= 2 because
    Hom(/\\^2 g, End(M)) is Hom from a torsion module into a torsion-free
    one.  The verdict is reported per degree, with no interpolation.
    """
    c = Fraction(c)
    tri = classify_connections(module)
    if not tri.admits(c):
        raise ValueError(f"c = {c} does not define a connection on this module")
    if bound is None:
        bound = default_degree_bound(module, c)
    s = set(module.obstruction_set())
    records = []
    for lam in range(bound + 1):
        in_lambda = module.contains(lam)
        dim_c0 = 1 if in_lambda else 0
        dim_c1 = 1 if in_lambda and lam not in s else 0
        nonzero = dim_c0 and dim_c1 and Fraction(lam) != c
        rank = 1 if nonzero else 0
        dim_h0 = dim_c0 - rank
        dim_h1 = dim_c1 - rank
        records.append(CurveDegreeRecord(lam, dim_c0, dim_c1, rank, dim_h0, dim_h1))
    return CurveCohomology(module, c, bound, records)


@dataclass(frozen=True)
class BruteForceResult:
    exists: bool
    bound: int
    scalar_freedom: bool          # may the constant term be chosen freely
    forced_constant: Fraction | None


def brute_force_connection_search(module: LambdaModule, degree_bound: int | None = None) -> BruteForceResult:
    """Oracle: search nabla_E = E + p over general graded potentials.

    p ranges over Q-combinations of transporter elements t^a, a up to the
    bound, not merely constants.  The membership constraints "every
    nabla_{t^w E} = t^w nabla_E maps the truncation of M into itself"
    form an exact linear system in the coefficients of p; a connection
    exists on the truncation exactly when the system is consistent.
    """
    if degree_bound is None:
        degree_bound = default_degree_bound(module) + max(module.semigroup.gamma1,
                                                          default=0) + 1
    sg = module.semigroup
    exponents = module.transporter(degree_bound)
    columns = {a: t for t, a in enumerate(exponents)}
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    witnesses = list(sg.gamma1) + [0]
    for lam in range(degree_bound + 1):
        if not module.contains(lam):
            continue
        for w in witnesses:
            # nabla_{t^w E}(t^lam) = lam t^{w+lam} + sum_a p_a t^{w+lam+a}
            if not module.contains(w + lam):
                row = [Fraction(0)] * len(exponents)
                if 0 in columns:
                    row[columns[0]] = Fraction(1)
                rows.append(row)
                rhs.append(Fraction(-lam))
            for a in exponents:
                if a and w + lam + a <= degree_bound and not module.contains(w + lam + a):
                    row = [Fraction(0)] * len(exponents)
                    row[columns[a]] = Fraction(1)
                    rows.append(row)
                    rhs.append(Fraction(0))
    if not rows:
        return BruteForceResult(True, degree_bound, True, None)
    matrix = ExactMatrix(len(rows), len(exponents), rows)
    solution = matrix.solve(rhs)
    if solution is None:
        return BruteForceResult(False, degree_bound, False, None)
    # the constant term of p is free iff some kernel vector moves it
    free = any(v[columns[0]] for v in matrix.kernel_basis())
    forced = None if free else -solution[columns[0]]
    return BruteForceResult(True, degree_bound, free, forced)


def curvature_vanishes_symbolically(module: LambdaModule, c: Fraction, bound: int) -> bool:
    """Check K(t^a E ^ t^b E) = 0 on every basis element t^lam, exactly.

    nabla_{t^a E}(t^lam) = (lam - c) t^{a + lam}; the curvature on a pair
    of derivation generators applied to t^lam expands to exact rational
    coefficients that must cancel termwise.
    """
    c = Fraction(c)
    degrees = [0] + list(module.semigroup.gamma1)
    for ai in degrees:
        for bi in degrees:
            if ai >= bi:
                continue
            for lam in range(bound + 1):
                if not module.contains(lam):
                    continue
                # [nabla_a, nabla_b](t^lam): first b then a, minus a then b
                first = (lam - c) * ((lam + bi) - c)   # t^{a+b+lam}
                second = (lam - c) * ((lam + ai) - c)
                commutator = first - second
                bracket_part = (bi - ai) * (lam - c)
                if commutator - bracket_part != 0:
                    return False
    return True
