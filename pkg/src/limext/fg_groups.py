"""Finitely generated abelian groups in invariant-factor normal form.

A finitely generated abelian group is Z^r + Z/d1 + ... + Z/dk with
d1 | d2 | ... | dk, and that normal form is unique.  :class:`GroupStructure`
stores exactly this data, so group equality is literal equality of the
normalized fields and no isomorphism testing is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from .errors import DimensionError, DomainError
from .matrices import IntMatrix, smith_normal_form
from .numutil import prime_factors


@dataclass(frozen=True)
class GroupStructure:
    """Isomorphism type of a finitely generated abelian group.

    ``invariant_factors`` is the divisibility chain (each factor >= 2).
    Build one from an arbitrary bag of cyclic orders with
    :meth:`from_factors`, which merges them primewise:

    >>> GroupStructure.from_factors([2, 3])
    GroupStructure(free_rank=0, invariant_factors=(6,))
    >>> GroupStructure.from_factors([2, 4]).invariant_factors
    (2, 4)
    >>> print(GroupStructure(free_rank=2, invariant_factors=(2, 6)))
    Z^2 x C2 x C6

    The trivial group prints as 0:

    >>> print(GroupStructure())
    0
    """

    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise DomainError("free rank must be nonnegative")
        for d in self.invariant_factors:
            if d < 2:
                raise DomainError("invariant factors must be >= 2")
        for a, b in zip(self.invariant_factors, self.invariant_factors[1:]):
            if b % a:
                raise DomainError(
                    f"invariant factors must form a divisibility chain, got {a} before {b}"
                )

    @classmethod
    def from_factors(cls, factors, free_rank: int = 0) -> "GroupStructure":
        """Normalize arbitrary cyclic orders into the invariant-factor chain.

        Zero factors count toward the free rank; order-1 factors vanish.
        """
        exponents: dict[int, list[int]] = {}
        rank = free_rank
        for d in factors:
            d = abs(int(d))
            if d == 0:
                rank += 1
                continue
            if d == 1:
                continue
            for p, e in prime_factors(d).items():
                exponents.setdefault(p, []).append(e)
        depth = max((len(v) for v in exponents.values()), default=0)
        chain = []
        for i in range(depth):
            # i-th largest exponent of each prime multiplies into the i-th
            # largest invariant factor.
            f = 1
            for p, es in exponents.items():
                es_sorted = sorted(es, reverse=True)
                if i < len(es_sorted):
                    f *= p ** es_sorted[i]
            chain.append(f)
        chain.reverse()
        return cls(free_rank=rank, invariant_factors=tuple(chain))

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        return prod(self.invariant_factors) if self.invariant_factors else 1

    def torsion(self) -> "GroupStructure":
        return GroupStructure(0, self.invariant_factors)

    def is_p_group(self, p: int) -> bool:
        return self.free_rank == 0 and all(
            set(prime_factors(d)) <= {p} for d in self.invariant_factors
        )

    def p_exponents(self, p: int) -> tuple[int, ...]:
        """Exponent partition of the p-primary part, sorted descending."""
        out = []
        for d in self.invariant_factors:
            e = prime_factors(d).get(p, 0)
            if e:
                out.append(e)
        return tuple(sorted(out, reverse=True))

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"C{d}" for d in self.invariant_factors)
        return " x ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {
            "free_rank": str(self.free_rank),
            "invariant_factors": [str(d) for d in self.invariant_factors],
        }

    @classmethod
    def from_json(cls, data: dict) -> "GroupStructure":
        return cls.from_factors(
            [int(d) for d in data.get("invariant_factors", [])],
            free_rank=int(data.get("free_rank", 0)),
        )


TRIVIAL_GROUP = GroupStructure()


@dataclass(frozen=True)
class GroupPresentation:
    """A group given by generators and integer relation rows.

    Each row of ``relations`` is one relation among the ``generators``
    standard generators of Z^n; the presented group is Z^n modulo the row
    span.

    >>> pres = GroupPresentation(2, IntMatrix.from_rows([[2, 0]]))
    >>> print(pres.structure())
    Z x C2
    """

    generators: int
    relations: IntMatrix

    def __post_init__(self):
        if self.relations.cols != self.generators:
            raise DimensionError(
                f"relation matrix has {self.relations.cols} columns "
                f"but there are {self.generators} generators"
            )

    def structure(self) -> GroupStructure:
        # Rows of the relation matrix become columns of the presenting map.
        return cokernel_structure(self.relations.transpose())


def cokernel_structure(m: IntMatrix) -> GroupStructure:
    """Structure of Z^rows / (column span of m).

    >>> print(cokernel_structure(IntMatrix.from_rows([[2, 4], [6, 8]])))
    C2 x C4
    >>> cokernel_structure(IntMatrix.zero(2, 3)).free_rank
    2
    """
    _, d, _ = smith_normal_form(m)
    diag = d.diagonal_entries()
    rank = sum(1 for x in diag if x != 0)
    return GroupStructure(
        free_rank=m.rows - rank,
        invariant_factors=tuple(x for x in diag if x >= 2),
    )


def direct_sum(*groups: GroupStructure) -> GroupStructure:
    """Direct sum, renormalized to the invariant-factor chain.

    >>> direct_sum(GroupStructure.from_factors([2]), GroupStructure.from_factors([3]))
    GroupStructure(free_rank=0, invariant_factors=(6,))
    """
    factors = []
    rank = 0
    for g in groups:
        rank += g.free_rank
        factors.extend(g.invariant_factors)
    return GroupStructure.from_factors(factors, free_rank=rank)


def finite_coefficients(a: GroupStructure, m: int) -> tuple[GroupStructure, GroupStructure]:
    """The pair (A/mA, m-torsion of A) for a finitely generated A.

    Both are finite, and |A/mA| = |mA-torsion| * m^free_rank: each Z summand
    contributes Z/m to the quotient and nothing to the torsion, while a Z/d
    summand contributes Z/gcd(d, m) to both.

    >>> q, t = finite_coefficients(GroupStructure.from_factors([4]), 2)
    >>> print(q, "|", t)
    C2 | C2
    """
    if m < 1:
        raise DomainError("modulus must be >= 1 (m = 0 rejected)")
    quotient = [m] * a.free_rank + [gcd(d, m) for d in a.invariant_factors]
    torsion = [gcd(d, m) for d in a.invariant_factors]
    return GroupStructure.from_factors(quotient), GroupStructure.from_factors(torsion)
