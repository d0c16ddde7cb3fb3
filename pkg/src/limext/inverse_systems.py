"""Inverse systems of free finitely generated groups and their derived limits.

The representable class is: finitely many arbitrary square transition
matrices with nonzero determinant (the prefix), followed by an eventually
periodic diagonal tail.  Nonzero determinants mean every transition map has
finite cokernel, and a diagonal tail splits the system into rank-1
coordinate systems, where the derived limit is completely classified.

The restriction to diagonal tails is deliberate: for a general matrix tail
the recursive classification needs to decide whether a connecting map has
finite image, and no procedure for that decision is available.  For diagonal
tails the connecting map never arises and every advertised output is
provably correct.  General finite-description matrix tails are rejected
with a clear diagnostic at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .descriptors import (
    CONTINUUM,
    ExtCardinal,
    GroupDescriptor,
    PrimeMultiplicity,
    ZERO_CARDINAL,
)
from .errors import DomainError, InvalidSystemError
from .fg_groups import GroupStructure, cokernel_structure
from .matrices import IntMatrix
from .numutil import prime_factors
from .rank1 import eprofile_from_multipliers, ext_to_z


@dataclass(frozen=True)
class InverseSystemSpec:
    """A constant-rank inverse system: matrix prefix plus periodic diagonal tail.

    Transition maps point down the tower (each matrix maps the next group to
    the previous one).  ``tail_diagonals`` lists one diagonal vector per step
    of the period, cycling forever.

    >>> spec = InverseSystemSpec.build(rank=1, prefix=[], tail=[[5]])
    >>> spec.tail_diagonals
    ((5,),)
    """

    rank: int
    prefix: tuple[IntMatrix, ...]
    tail_diagonals: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, rank: int, prefix, tail) -> "InverseSystemSpec":
        return cls(
            rank=int(rank),
            prefix=tuple(
                m if isinstance(m, IntMatrix) else IntMatrix.from_rows(m)
                for m in prefix
            ),
            tail_diagonals=tuple(tuple(int(d) for d in vec) for vec in tail),
        )

    def coordinate_period(self, j: int) -> tuple[int, ...]:
        return tuple(vec[j] for vec in self.tail_diagonals)

    def to_json(self) -> dict:
        return {
            "rank": str(self.rank),
            "prefix": [m.to_json() for m in self.prefix],
            "tail": {
                "period": str(len(self.tail_diagonals)),
                "diagonals": [[str(d) for d in vec] for vec in self.tail_diagonals],
            },
        }

    @classmethod
    def from_json(cls, data: dict) -> "InverseSystemSpec":
        tail = data["tail"]
        diagonals = [[int(d) for d in vec] for vec in tail["diagonals"]]
        if "period" in tail and int(tail["period"]) != len(diagonals):
            raise InvalidSystemError("declared period does not match diagonal count")
        return cls.build(
            rank=int(data["rank"]),
            prefix=[IntMatrix.from_json(m) for m in data.get("prefix", [])],
            tail=diagonals,
        )


@dataclass(frozen=True)
class ValidatedSystem:
    """A system spec with checked invariants and cokernel metadata attached."""

    spec: InverseSystemSpec
    cokernel_structures: tuple[GroupStructure, ...]
    cokernel_orders: tuple[int, ...]
    cokernel_prime_support: tuple[int, ...]
    # The unique prime p when every transition cokernel is a p-group and at
    # least one is nontrivial; None otherwise.
    p_group_prime: int | None


def validate_system(spec: InverseSystemSpec) -> ValidatedSystem:
    """Check all invariants and attach cokernel metadata.

    >>> v = validate_system(InverseSystemSpec.build(1, [], [[5]]))
    >>> v.p_group_prime
    5
    >>> validate_system(InverseSystemSpec.build(2, [], [[1, 6]])).p_group_prime is None
    True
    """
    r = spec.rank
    if r < 1:
        raise InvalidSystemError("rank must be >= 1")
    if not spec.tail_diagonals:
        raise InvalidSystemError("tail period must have length >= 1")
    structures = []
    orders = []
    for m in spec.prefix:
        if m.rows != r or m.cols != r:
            raise InvalidSystemError(
                f"prefix matrix is {m.rows}x{m.cols}, expected {r}x{r}"
            )
        det = m.determinant()
        if det == 0:
            raise InvalidSystemError(
                "prefix matrix has zero determinant (infinite cokernel)"
            )
        structures.append(cokernel_structure(m))
        orders.append(abs(det))
    for vec in spec.tail_diagonals:
        if len(vec) != r:
            raise InvalidSystemError(
                f"tail diagonal has length {len(vec)}, expected {r}"
            )
        if any(d == 0 for d in vec):
            raise InvalidSystemError("tail diagonal entries must be nonzero")
        structures.append(GroupStructure.from_factors([abs(d) for d in vec]))
        orders.append(prod(abs(d) for d in vec))
    support = set()
    for n in orders:
        if n > 1:
            support |= set(prime_factors(n))
    return ValidatedSystem(
        spec=spec,
        cokernel_structures=tuple(structures),
        cokernel_orders=tuple(orders),
        cokernel_prime_support=tuple(sorted(support)),
        p_group_prime=next(iter(support)) if len(support) == 1 else None,
    )


def _as_validated(system) -> ValidatedSystem:
    if isinstance(system, ValidatedSystem):
        return system
    return validate_system(system)


def drop_prefix(spec: InverseSystemSpec, k: int) -> InverseSystemSpec:
    """Remove the first k prefix maps; a cofinal subsystem, so the derived
    limit is unchanged."""
    if k < 0 or k > len(spec.prefix):
        raise DomainError(
            f"cannot drop {k} maps from a prefix of length {len(spec.prefix)}"
        )
    return InverseSystemSpec(spec.rank, spec.prefix[k:], spec.tail_diagonals)


def lim_structure(system) -> GroupStructure:
    """The inverse limit: free of rank = number of unit tail coordinates.

    A coordinate whose period entries are all +-1 carries a constant system
    with limit Z; a coordinate with any entry of absolute value >= 2 has
    trivial limit, because the intersection of the d^k Z is zero.  The
    prefix maps are injective and do not change the answer.

    >>> print(lim_structure(InverseSystemSpec.build(2, [], [[1, 6]])))
    Z
    """
    v = _as_validated(system)
    spec = v.spec
    units = sum(
        1
        for j in range(spec.rank)
        if all(abs(d) == 1 for d in spec.coordinate_period(j))
    )
    return GroupStructure(free_rank=units)


def is_mittag_leffler(system) -> bool:
    """Whether the images stabilize.

    For this representable family that happens exactly when every tail entry
    is a unit, which is also exactly when the derived limit vanishes.

    >>> is_mittag_leffler(InverseSystemSpec.build(2, [], [[1, -1]]))
    True
    >>> is_mittag_leffler(InverseSystemSpec.build(1, [], [[5]]))
    False
    """
    v = _as_validated(system)
    return all(
        abs(d) == 1 for vec in v.spec.tail_diagonals for d in vec
    )


@dataclass(frozen=True)
class Lim1Class:
    """Isomorphism class of a derived limit: Q^rational + Pruefer summands.

    Nonzero derived limits of countable systems of finitely generated groups
    always have continuum-many Q summands, so ``rational`` is zero or the
    continuum; the Pruefer multiplicities are finite and bounded by the rank.
    """

    rational: ExtCardinal = ZERO_CARDINAL
    pruefer: PrimeMultiplicity = PrimeMultiplicity()

    def __post_init__(self):
        if self.pruefer.has_continuum():
            raise DomainError("Pruefer multiplicities of a rank-classified "
                              "derived limit are finite")
        if self.rational not in (ZERO_CARDINAL, CONTINUUM):
            raise DomainError("rational part is zero or continuum")
        if self.rational.is_zero and not self.pruefer.is_zero:
            raise DomainError("a nonzero derived limit has continuum rational part")

    @property
    def is_zero(self) -> bool:
        return self.rational.is_zero and self.pruefer.is_zero

    def multiplicity(self, p: int) -> int:
        return self.pruefer.at(p).value

    def __add__(self, other: "Lim1Class") -> "Lim1Class":
        return Lim1Class(self.rational + other.rational, self.pruefer + other.pruefer)

    def to_descriptor(self) -> GroupDescriptor:
        return GroupDescriptor.build(rational=self.rational, pruefer=self.pruefer)

    @classmethod
    def from_descriptor(cls, d: GroupDescriptor) -> "Lim1Class":
        if not d.is_divisible():
            raise DomainError("derived-limit class has only Q and Pruefer blocks")
        return cls(d.rational, d.pruefer)

    def to_json(self) -> dict:
        return {"rational": self.rational.to_json(), "pruefer": self.pruefer.to_json()}


ZERO_LIM1 = Lim1Class()


def lim1_classify(system, strategy: str = "recursive") -> Lim1Class:
    """Classify the derived limit of the system.

    Two independent routes:

    * ``recursive`` peels off the last coordinate of the diagonal tail; for
      a diagonal system the connecting map between the layers vanishes, so
      the class of the whole is the sum of the class of the rank-(r-1)
      subsystem and the rank-1 quotient system, classified directly from its
      multiplier sequence.
    * ``ext_oracle`` dualizes each coordinate: the colimit of the dual maps
      is a rank-1 subgroup of Q whose Ext group against Z is the derived
      limit of that coordinate.

    The prefix never contributes: dropping finitely many stages is cofinal.

    >>> c = lim1_classify(InverseSystemSpec.build(1, [], [[5]]))
    >>> c.rational.is_continuum, c.multiplicity(5), c.multiplicity(3)
    (True, 0, 1)
    >>> lim1_classify(InverseSystemSpec.build(2, [], [[1, 1]])).is_zero
    True
    """
    v = _as_validated(system)
    if strategy == "recursive":
        cols = [v.spec.coordinate_period(j) for j in range(v.spec.rank)]
        return _classify_recursive(cols)
    if strategy == "ext_oracle":
        return _classify_ext_oracle(v.spec)
    raise DomainError(f"unknown strategy {strategy!r}")


def _classify_rank_one(multipliers) -> Lim1Class:
    # Rank-1 system Z <- Z <- ... with the period multipliers repeating: if
    # they are all units the system is constant up to sign and the derived
    # limit vanishes; otherwise the derived limit is the quotient of the
    # profinite completion along the inverted primes, a continuum Q-space
    # plus one Pruefer summand at every prime NOT dividing the multipliers.
    inverted = set()
    for a in multipliers:
        a = abs(a)
        if a > 1:
            inverted |= set(prime_factors(a))
    if not inverted:
        return ZERO_LIM1
    return Lim1Class(
        rational=CONTINUUM,
        pruefer=PrimeMultiplicity.build(1, {p: 0 for p in inverted}),
    )


def _classify_recursive(cols) -> Lim1Class:
    first = _classify_rank_one(cols[-1])
    if len(cols) == 1:
        return first
    # Diagonal tail: the sequence of the subsystem, the whole system, and
    # the rank-1 quotient splits, so the parameters add.
    return _classify_recursive(cols[:-1]) + first


def _classify_ext_oracle(spec: InverseSystemSpec) -> Lim1Class:
    total = GroupDescriptor.build()
    for j in range(spec.rank):
        profile = eprofile_from_multipliers([], spec.coordinate_period(j))
        total = total + ext_to_z(profile)
    return Lim1Class.from_descriptor(total)
