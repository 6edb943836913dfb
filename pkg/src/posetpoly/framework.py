"""One recursion, many invariants.

Every invariant here is computed by the same scheme: start from a base
value on the empty poset, and for nonempty P apply a linear operator to
the sum of the invariant over the complements of the nonempty ideals
with order-preserving labels.  A spec either applies one operator to the
whole sum, or applies a size-indexed operator to each summand.  The
order polynomial, both Eulerian forms, and a truncated quasi-symmetric
refinement are all instances.

The quasi-symmetric carrier is a polynomial in x_1..x_N, stored as a map
from exponent vectors to rational coefficients.  The shift operator S
moves every variable up one slot, dropping whatever falls off the end;
the building-block operator for m is sum_k x_k^m S^k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from typing import Callable, Mapping

from posetpoly.invariants import order_poly_recursive
from posetpoly.localized import LocalizedRatio
from posetpoly.polynomials import RationalLike, UniPoly, _as_fraction, delta_inverse
from posetpoly.posets import (
    LabeledPoset,
    canonical_key,
    induced_subposet,
    iter_bits,
    omega_natural_ideals,
)

__all__ = [
    "QSymTruncated",
    "qsym_direct",
    "shift_operator",
    "lambda_operator",
    "InvariantSpec",
    "run_invariant",
    "omega_spec",
    "etilde_spec",
    "eulerian_spec",
    "qsym_spec",
    "qsym_recursive",
    "qsym_specialization_check",
    "quasi_symmetry_check",
]

_LAMBDA = UniPoly((0, 1))
_ONE_MINUS_LAMBDA = UniPoly((1, -1))


class QSymTruncated:
    """A polynomial in x_1..x_nvars over Q, keyed by exponent vectors."""

    __slots__ = ("nvars", "_terms")

    nvars: int
    _terms: Mapping[tuple[int, ...], Fraction]

    def __init__(
        self, nvars: int, terms: Mapping[tuple[int, ...], RationalLike] | None = None
    ) -> None:
        if nvars < 1:
            raise ValueError("need at least one variable")
        cleaned: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {nvars} variables")
            value = _as_fraction(coeff)
            if value:
                cleaned[tuple(exps)] = value
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", cleaned)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QSymTruncated is immutable")

    @classmethod
    def zero(cls, nvars: int) -> QSymTruncated:
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> QSymTruncated:
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def variable(cls, nvars: int, index: int) -> QSymTruncated:
        """x_index, with index counted from 1."""
        if not 1 <= index <= nvars:
            raise ValueError(f"variable index {index} out of range")
        exps = tuple(1 if k == index - 1 else 0 for k in range(nvars))
        return cls(nvars, {exps: 1})

    def terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self._terms.items(), reverse=True)

    def coefficient(self, exps: tuple[int, ...]) -> Fraction:
        return self._terms.get(exps, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSymTruncated):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def _check_compatible(self, other: QSymTruncated) -> None:
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")

    def __add__(self, other: QSymTruncated) -> QSymTruncated:
        if not isinstance(other, QSymTruncated):
            return NotImplemented
        self._check_compatible(other)
        merged = dict(self._terms)
        for exps, coeff in other._terms.items():
            merged[exps] = merged.get(exps, Fraction(0)) + coeff
        return QSymTruncated(self.nvars, merged)

    def __neg__(self) -> QSymTruncated:
        return QSymTruncated(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: QSymTruncated) -> QSymTruncated:
        if not isinstance(other, QSymTruncated):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: RationalLike) -> QSymTruncated:
        value = _as_fraction(scalar)
        return QSymTruncated(self.nvars, {e: c * value for e, c in self._terms.items()})

    __rmul__ = __mul__

    def specialize_ones(self) -> Fraction:
        """The value with every variable set to 1."""
        return sum(self._terms.values(), Fraction(0))

    def render(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exps, coeff in self.terms():
            factors = [
                f"x{k + 1}" + (f"^{e}" if e > 1 else "")
                for k, e in enumerate(exps)
                if e
            ]
            monomial = "·".join(factors) if factors else "1"
            if coeff == 1 and factors:
                pieces.append(monomial)
            elif coeff == -1 and factors:
                pieces.append(f"-{monomial}")
            elif factors:
                pieces.append(f"{coeff}·{monomial}")
            else:
                pieces.append(str(coeff))
        out = pieces[0]
        for piece in pieces[1:]:
            out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return out

    def __repr__(self) -> str:
        return f"QSymTruncated({self.nvars}, {dict(self.terms())!r})"

    def __str__(self) -> str:
        return self.render()


def shift_operator(q: QSymTruncated, steps: int = 1) -> QSymTruncated:
    """Move every variable up by steps slots, truncating past x_nvars."""
    if steps < 0:
        raise ValueError("shift must be nonnegative")
    if steps == 0:
        return q
    n = q.nvars
    shifted: dict[tuple[int, ...], Fraction] = {}
    for exps, coeff in q._terms.items():
        if any(exps[n - steps :]):
            continue  # pushed out of the window
        moved = (0,) * steps + exps[: n - steps]
        shifted[moved] = shifted.get(moved, Fraction(0)) + coeff
    return QSymTruncated(n, shifted)


def lambda_operator(q: QSymTruncated, m: int) -> QSymTruncated:
    """sum over k of x_k^m times the k-fold shift of q."""
    if m < 1:
        raise ValueError("operator index must be positive")
    n = q.nvars
    out: dict[tuple[int, ...], Fraction] = {}
    for k in range(1, n + 1):
        for exps, coeff in shift_operator(q, k)._terms.items():
            bumped = tuple(e + m if j == k - 1 else e for j, e in enumerate(exps))
            out[bumped] = out.get(bumped, Fraction(0)) + coeff
    return QSymTruncated(n, out)


def qsym_direct(lp: LabeledPoset, nvars: int) -> QSymTruncated:
    """Sum the monomial of every order- and label-compatible map into
    {1..nvars}: weakly increasing along the order, strictly where the
    label decreases."""
    n = lp.size
    if n == 0:
        return QSymTruncated.one(nvars)
    pairs = []
    for x in range(n):
        for y in iter_bits(lp.poset.above[x]):
            pairs.append((x, y, lp.omega[x] > lp.omega[y]))
    accumulated: dict[tuple[int, ...], Fraction] = {}
    for f in product(range(1, nvars + 1), repeat=n):
        ok = True
        for x, y, strict in pairs:
            if f[x] > f[y] or (strict and f[x] == f[y]):
                ok = False
                break
        if ok:
            exps = [0] * nvars
            for v in f:
                exps[v - 1] += 1
            key = tuple(exps)
            accumulated[key] = accumulated.get(key, Fraction(0)) + 1
    return QSymTruncated(nvars, accumulated)


@dataclass(frozen=True)
class InvariantSpec:
    """A recursion instance: base value plus either one operator applied
    to the sum over ideal complements, or a size-indexed operator family
    applied summand by summand."""

    name: str
    carrier: type
    base: object
    operator: Callable[[object], object] | None = None
    family: Callable[[int], Callable[[object], object]] | None = None

    def __post_init__(self) -> None:
        if (self.operator is None) == (self.family is None):
            raise ValueError("specify exactly one of operator or family")
        if not isinstance(self.base, self.carrier):
            raise TypeError(
                f"base value of {self.name!r} is {type(self.base).__name__}, "
                f"expected {self.carrier.__name__}"
            )


_RUN_MEMO: dict[tuple[str, object], object] = {}


def run_invariant(spec: InvariantSpec, lp: LabeledPoset) -> object:
    """Evaluate the spec's recursion; values are shared per spec name."""
    key = (spec.name, canonical_key(lp))
    cached = _RUN_MEMO.get(key)
    if cached is not None:
        return cached
    if lp.size == 0:
        value = spec.base
    else:
        full = lp.poset.full_mask
        terms = []
        for ideal in omega_natural_ideals(lp):
            if ideal == 0:
                continue
            child = run_invariant(spec, induced_subposet(lp, full ^ ideal))
            if spec.family is not None:
                child = spec.family(ideal.bit_count())(child)
            terms.append(child)
        total = terms[0]
        for term in terms[1:]:
            total = total + term
        value = spec.operator(total) if spec.operator is not None else total
    if not isinstance(value, spec.carrier):
        raise TypeError(
            f"operator of {spec.name!r} produced {type(value).__name__}, "
            f"expected {spec.carrier.__name__}"
        )
    _RUN_MEMO[key] = value
    return value


def omega_spec() -> InvariantSpec:
    return InvariantSpec(
        name="omega",
        carrier=UniPoly,
        base=UniPoly([1]),
        operator=delta_inverse,
    )


def etilde_spec() -> InvariantSpec:
    return InvariantSpec(
        name="etilde",
        carrier=LocalizedRatio,
        base=LocalizedRatio(UniPoly([1]), 1),
        operator=lambda value: LocalizedRatio(_LAMBDA, 1) * value,
    )


def eulerian_spec() -> InvariantSpec:
    def member(m: int) -> Callable[[UniPoly], UniPoly]:
        factor = _LAMBDA * _ONE_MINUS_LAMBDA ** (m - 1)
        return lambda value: factor * value

    return InvariantSpec(
        name="eulerian",
        carrier=UniPoly,
        base=UniPoly([1]),
        family=member,
    )


def qsym_spec(nvars: int) -> InvariantSpec:
    return InvariantSpec(
        name=f"qsym:{nvars}",
        carrier=QSymTruncated,
        base=QSymTruncated.one(nvars),
        family=lambda m: (lambda value: lambda_operator(value, m)),
    )


def qsym_recursive(lp: LabeledPoset, nvars: int) -> QSymTruncated:
    value = run_invariant(qsym_spec(nvars), lp)
    assert isinstance(value, QSymTruncated)
    return value


def qsym_specialization_check(lp: LabeledPoset, nvars: int) -> bool:
    """All variables set to 1 must reproduce the order polynomial at nvars."""
    direct = qsym_direct(lp, nvars)
    return direct.specialize_ones() == order_poly_recursive(lp)(nvars)


def quasi_symmetry_check(q: QSymTruncated) -> bool:
    """Coefficients may depend only on the sequence of nonzero exponents:
    every choice of that many variable slots must carry the same one."""
    coefficients: dict[tuple[int, ...], set[Fraction]] = {}
    occupied: dict[tuple[int, ...], int] = {}
    for exps, coeff in q.terms():
        word = tuple(e for e in exps if e)
        coefficients.setdefault(word, set()).add(coeff)
        occupied[word] = occupied.get(word, 0) + 1
    for word, seen in coefficients.items():
        if len(seen) != 1:
            return False
        if occupied[word] != comb(q.nvars, len(word)):
            return False
    return True
