"""Sparse symmetric functions with exact integer coefficients.

A SymFunc is a finite integer combination of basis elements indexed by
partitions, in either the elementary basis or the power-sum basis.
Coefficients are Python ints, so nothing ever overflows or rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb
from types import MappingProxyType
from typing import Iterable, Mapping

from .compositions import Partition


class Basis(Enum):
    ELEMENTARY = "e"
    POWERSUM = "p"


def term_sort_key(lam: Partition):
    """Canonical term order: total degree descending, then the index
    partitions in descending lexicographic order."""
    return (-sum(lam), tuple(-p for p in lam))


def _validated_terms(terms) -> dict[Partition, int]:
    clean: dict[Partition, int] = {}
    for lam, c in terms.items():
        lam = tuple(lam)
        if any(p < 1 for p in lam):
            raise ValueError(f"partition parts must be positive: {lam}")
        if any(a < b for a, b in zip(lam, lam[1:])):
            raise ValueError(f"partition key must be weakly decreasing: {lam}")
        if not isinstance(c, int) or isinstance(c, bool):
            raise TypeError(f"coefficients must be int, got {c!r}")
        if c:
            clean[lam] = c
    return clean


class SymFunc:
    """Immutable sparse symmetric function.

    terms maps partitions to nonzero integer coefficients; zero
    coefficients are dropped on construction.  Arithmetic stays inside
    one basis and raises on a mismatch.
    """

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: Basis, terms: Mapping[Partition, int] | None = None):
        if not isinstance(basis, Basis):
            raise TypeError(f"expected a Basis member, got {basis!r}")
        self.basis = basis
        self._terms = _validated_terms(terms or {})

    @classmethod
    def zero(cls, basis: Basis) -> "SymFunc":
        return cls(basis, {})

    @property
    def terms(self) -> Mapping[Partition, int]:
        return MappingProxyType(self._terms)

    def coefficient(self, lam: Iterable[int]) -> int:
        return self._terms.get(tuple(lam), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def support(self) -> tuple[Partition, ...]:
        """Index partitions with nonzero coefficient, in term order."""
        return tuple(sorted(self._terms, key=term_sort_key))

    def sorted_terms(self) -> tuple[tuple[Partition, int], ...]:
        return tuple((lam, self._terms[lam]) for lam in self.support())

    def _check_basis(self, other: "SymFunc") -> None:
        if self.basis is not other.basis:
            raise ValueError(
                f"cannot combine {self.basis.value}-basis and "
                f"{other.basis.value}-basis functions"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.basis is other.basis and self._terms == other._terms

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        self._check_basis(other)
        out = dict(self._terms)
        for lam, c in other._terms.items():
            new = out.get(lam, 0) + c
            if new:
                out[lam] = new
            else:
                del out[lam]
        return SymFunc(self.basis, out)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "SymFunc":
        return self.scale(-1)

    def scale(self, c: int) -> "SymFunc":
        if not isinstance(c, int) or isinstance(c, bool):
            raise TypeError(f"scalar must be int, got {c!r}")
        if c == 0:
            return SymFunc.zero(self.basis)
        return SymFunc(self.basis, {lam: c * v for lam, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, SymFunc):
            return NotImplemented
        self._check_basis(other)
        if self.basis is not Basis.ELEMENTARY:
            raise ValueError("products are implemented in the elementary basis only")
        out: dict[Partition, int] = {}
        for lam, a in self._terms.items():
            for mu, b in other._terms.items():
                key = tuple(sorted(lam + mu, reverse=True))
                new = out.get(key, 0) + a * b
                if new:
                    out[key] = new
                else:
                    del out[key]
        return SymFunc(self.basis, out)

    def __rmul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __repr__(self) -> str:
        return f"SymFunc({self.basis.value!r}, {render_text(self)!r})"


def monomial(basis: Basis, lam: Iterable[int], coeff: int = 1) -> SymFunc:
    """Single term coeff * basis_lam."""
    return SymFunc(basis, {tuple(lam): coeff})


# ------------------------------------------------------- basis conversion

# Per-process caches for the elementary-basis images of power sums.
# Conversion cost is dominated by repeated small products, so caching
# per degree and per partition pays off across a scan.
_POWER_IMAGE: dict[int, SymFunc] = {}
_POWER_PARTITION_IMAGE: dict[Partition, SymFunc] = {}


def _power_image(m: int) -> SymFunc:
    """Elementary-basis image of the degree-m power sum.

    Newton's recurrence: p_m = sum_{i=1}^{m-1} (-1)^(i-1) e_i p_(m-i)
    + (-1)^(m-1) m e_m, starting from p_1 = e_1.
    """
    cached = _POWER_IMAGE.get(m)
    if cached is not None:
        return cached
    if m == 1:
        image = monomial(Basis.ELEMENTARY, (1,))
    else:
        image = monomial(Basis.ELEMENTARY, (m,), (-1) ** (m - 1) * m)
        for i in range(1, m):
            step = monomial(Basis.ELEMENTARY, (i,), (-1) ** (i - 1))
            image = image + step * _power_image(m - i)
    _POWER_IMAGE[m] = image
    return image


def _power_partition_image(lam: Partition) -> SymFunc:
    cached = _POWER_PARTITION_IMAGE.get(lam)
    if cached is not None:
        return cached
    image = monomial(Basis.ELEMENTARY, ())
    for part in lam:
        image = image * _power_image(part)
    _POWER_PARTITION_IMAGE[lam] = image
    return image


def p_to_e(f: SymFunc) -> SymFunc:
    """Rewrite a power-sum-basis function in the elementary basis."""
    if f.basis is not Basis.POWERSUM:
        raise ValueError("p_to_e expects a power-sum-basis input")
    out: dict[Partition, int] = {}
    for lam, c in f.terms.items():
        for mu, d in _power_partition_image(lam).terms.items():
            new = out.get(mu, 0) + c * d
            if new:
                out[mu] = new
            else:
                del out[mu]
    return SymFunc(Basis.ELEMENTARY, out)


# ------------------------------------------------------------ positivity

@dataclass(frozen=True)
class EPositivityReport:
    """Outcome of an elementary-basis positivity check.

    witnesses lists the strictly negative terms in canonical term
    order; empty exactly when positive is True.
    """

    positive: bool
    witnesses: tuple[tuple[Partition, int], ...]


def is_e_positive(f: SymFunc) -> EPositivityReport:
    if f.basis is not Basis.ELEMENTARY:
        raise ValueError("positivity check expects an elementary-basis input")
    witnesses = tuple(
        (lam, c) for lam, c in f.sorted_terms() if c < 0
    )
    return EPositivityReport(positive=not witnesses, witnesses=witnesses)


def principal_specialization(f: SymFunc, k: int) -> int:
    """Evaluate with k variables set to 1 and the rest to 0.

    In the elementary basis e_m contributes comb(k, m) per part; in the
    power-sum basis every part contributes k.
    """
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError(f"k must be int, got {k!r}")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    total = 0
    for lam, c in f.terms.items():
        if f.basis is Basis.ELEMENTARY:
            v = 1
            for part in lam:
                v *= comb(k, part)
        else:
            v = k ** len(lam)
        total += c * v
    return total


# ----------------------------------------------------------- rendering

def _subscript(lam: Partition) -> str:
    if any(p >= 10 for p in lam):
        body = ",".join(str(p) for p in lam)
    else:
        body = "".join(str(p) for p in lam)
    return body if len(body) == 1 else "{" + body + "}"


def render_latex(f: SymFunc) -> str:
    """Compact LaTeX-style expansion, e.g. 54e_6+16e_{51}+26e_{42}+2e_{222}.

    Terms follow term_sort_key; single-character subscripts are left
    unbraced, everything else is braced, and parts of 10 or more are
    comma-separated inside the braces.
    """
    return _render(f, plus="+", minus="-", lead_minus="-")


def render_text(f: SymFunc) -> str:
    """Same expansion with spaced separators for terminal output."""
    return _render(f, plus=" + ", minus=" - ", lead_minus="-")


def _render(f: SymFunc, plus: str, minus: str, lead_minus: str) -> str:
    if f.is_zero():
        return "0"
    letter = f.basis.value
    pieces = []
    for idx, (lam, c) in enumerate(f.sorted_terms()):
        mag = abs(c)
        if lam:
            body = f"{letter}_{_subscript(lam)}"
            if mag != 1:
                body = f"{mag}{body}"
        else:
            body = str(mag)
        if idx == 0:
            pieces.append(body if c > 0 else lead_minus + body)
        else:
            pieces.append((plus if c > 0 else minus) + body)
    return "".join(pieces)


def to_json_dict(f: SymFunc) -> dict:
    """JSON-ready form with deterministic term order."""
    return {
        "basis": f.basis.value,
        "terms": [[list(lam), c] for lam, c in f.sorted_terms()],
    }


def from_json_dict(data: dict) -> SymFunc:
    basis = Basis(data["basis"])
    return SymFunc(basis, {tuple(lam): c for lam, c in data["terms"]})
