"""Classification of p-local submodules of Q^r and kernel-structure synthesis.

A finitely described submodule of Q^r is given by tagged generators: a
``local`` generator g spans the Z_(p)-line through g, a ``divisible``
generator spans the full Q-line (equivalently, a generator with any prime
other than p inverted, since the Z_(p)-span of such an orbit is already the
Q-line).  When the generators span Q^r rationally, the submodule is an
extension of Q^t by a free Z_(p)-module of rank s with s + t = r, and this
module computes (s, t) by the projection induction: kill the divisible span
with a rational functional, classify the rank-1 image, recurse on the
kernel.

The same (s, t) data feeds the closed-form kernel structure: the divisible
part is one copy of Q/Z-minus-its-p-part per s and one full Q/Z per t, plus
an undetermined finite p-group placeholder that is carried explicitly and
never given an invented order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .descriptors import GroupDescriptor, PrimeMultiplicity
from .errors import DomainError, SpanError
from .fg_groups import GroupStructure, TRIVIAL_GROUP
from .numutil import require_prime, vp

LOCAL = "local"
DIVISIBLE = "divisible"


@dataclass(frozen=True)
class TaggedGenerator:
    vector: tuple[Fraction, ...]
    tag: str

    def __post_init__(self):
        if self.tag not in (LOCAL, DIVISIBLE):
            raise DomainError(f"unknown generator tag {self.tag!r}")
        if all(x == 0 for x in self.vector):
            raise DomainError("generators must be nonzero")


@dataclass(frozen=True)
class TaggedGenerators:
    """Finitely many tagged generators of a submodule of Q^rank.

    >>> gens = TaggedGenerators.build(2, 5, [([1, 0], "local"), ([0, 1], "divisible")])
    >>> classify_submodule(gens)
    STPair(s=1, t=1, finite_part=GroupStructure(free_rank=0, invariant_factors=()))
    """

    rank: int
    prime: int
    generators: tuple[TaggedGenerator, ...]

    @classmethod
    def build(cls, rank: int, prime: int, generators) -> "TaggedGenerators":
        rank = int(rank)
        if rank < 1:
            raise DomainError("ambient rank must be >= 1")
        prime = require_prime(int(prime))
        gens = []
        for vec, tag in generators:
            vec = tuple(Fraction(x) for x in vec)
            if len(vec) != rank:
                raise DomainError(
                    f"generator has {len(vec)} coordinates, expected {rank}"
                )
            gens.append(TaggedGenerator(vec, tag))
        return cls(rank, prime, tuple(gens))

    def to_json(self) -> dict:
        return {
            "rank": str(self.rank),
            "prime": str(self.prime),
            "generators": [
                {
                    "vector": [
                        str(x.numerator) if x.denominator == 1
                        else f"{x.numerator}/{x.denominator}"
                        for x in g.vector
                    ],
                    "tag": g.tag,
                }
                for g in self.generators
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TaggedGenerators":
        return cls.build(
            int(data["rank"]),
            int(data["prime"]),
            [(g["vector"], g["tag"]) for g in data["generators"]],
        )


@dataclass(frozen=True)
class STPair:
    """The invariants of an extension of Q^t by Z_(p)^s, plus finite data.

    ``finite_part`` is the torsion: the trivial group for a submodule of
    Q^r (torsion free), or None when only "some finite p-group" is known.
    """

    s: int
    t: int
    finite_part: GroupStructure | None = TRIVIAL_GROUP

    def to_json(self) -> dict:
        out = {"s": str(self.s), "t": str(self.t)}
        if self.finite_part is None:
            out["finite_part"] = "undetermined finite p-group"
        else:
            out["finite_part"] = self.finite_part.to_json()
        return out


# ---------------------------------------------------------------------------
# Exact rational linear algebra on tuples of Fractions.


def _echelon_basis(vectors):
    """Row-reduce; returns (basis rows in echelon form, pivot columns)."""
    basis = []
    pivots = []
    for vec in vectors:
        v = list(vec)
        for row, col in zip(basis, pivots):
            if v[col]:
                c = v[col] / row[col]
                v = [a - c * b for a, b in zip(v, row)]
        lead = next((i for i, a in enumerate(v) if a), None)
        if lead is not None:
            basis.append(v)
            pivots.append(lead)
    return basis, pivots


def _rational_rank(vectors) -> int:
    return len(_echelon_basis(vectors)[0])


def _functional_vanishing_on(basis, dim):
    """A nonzero functional on Q^dim vanishing on the span of the basis rows."""
    rows, pivots = _echelon_basis(basis)
    free_col = next(i for i in range(dim) if i not in pivots)
    # Back-substitute so that <functional, row> = 0 for every basis row.
    functional = [Fraction(0)] * dim
    functional[free_col] = Fraction(1)
    for row, col in reversed(list(zip(rows, pivots))):
        functional[col] = -sum(
            row[i] * functional[i] for i in range(dim) if i != col
        ) / row[col]
    return functional


def _vp_fraction(x: Fraction, p: int) -> int:
    return vp(x.numerator, p) - vp(x.denominator, p)


def classify_submodule(gens: TaggedGenerators) -> STPair:
    """The (s, t) type of the submodule spanned by tagged generators.

    t is the dimension of the rational span of the divisible generators and
    s = r - t, computed by induction: choose a functional vanishing on the
    divisible span, classify the projected rank-1 image (always a free
    Z_(p)-line, generated by the projected local generator of minimal
    valuation), and recurse on the intersection with the kernel hyperplane.

    >>> gens = TaggedGenerators.build(
    ...     2, 3, [([1, 1], "divisible"), ([1, 0], "local"), ([0, 1], "local")])
    >>> classify_submodule(gens)
    STPair(s=1, t=1, finite_part=GroupStructure(free_rank=0, invariant_factors=()))
    """
    p = gens.prime
    vectors = [(g.vector, g.tag) for g in gens.generators]
    if _rational_rank([v for v, _ in vectors]) != gens.rank:
        raise SpanError(
            "generators do not span Q^rank rationally",
            citation="full rational span precondition",
        )
    dim = gens.rank
    s = 0
    while True:
        divisible = [v for v, tag in vectors if tag == DIVISIBLE]
        div_basis, _ = _echelon_basis(divisible)
        t = len(div_basis)
        if t == dim:
            return STPair(s=s, t=t, finite_part=TRIVIAL_GROUP)

        functional = _functional_vanishing_on(div_basis, dim)
        images = [
            (i, sum(f * x for f, x in zip(functional, v)))
            for i, (v, tag) in enumerate(vectors)
            if tag == LOCAL
        ]
        nonzero = [(i, w) for i, w in images if w != 0]
        # Full span + functional kills all divisible generators, so some
        # local generator survives the projection.
        pivot_index, pivot_value = min(
            nonzero, key=lambda iw: _vp_fraction(iw[1], p)
        )
        s += 1

        # Intersection with the kernel hyperplane: divisible generators all
        # lie in it already; local generators are corrected by a Z_(p)-
        # multiple of the pivot generator (the ratio has nonnegative
        # p-valuation by minimality, so the span is unchanged).
        pivot_vec = vectors[pivot_index][0]
        image = dict(images)
        new_vectors = []
        for i, (v, tag) in enumerate(vectors):
            if i == pivot_index:
                continue
            if tag == LOCAL:
                c = image[i] / pivot_value
                v = tuple(a - c * b for a, b in zip(v, pivot_vec))
            new_vectors.append((v, tag))

        # Re-embed the hyperplane as Q^(dim-1) by deleting a coordinate on
        # which the functional is nonzero; on the kernel that coordinate is
        # determined by the others.
        drop = next(i for i, f in enumerate(functional) if f != 0)
        vectors = [
            (v[:drop] + v[drop + 1:], tag)
            for v, tag in new_vectors
            if any(x != 0 for x in v[:drop] + v[drop + 1:])
        ]
        dim -= 1


def extension_shape(r: int, s: int) -> dict:
    """Shape record for the degree-two cohomology of the kernel sheaf.

    The torsion is a finite p-group of undetermined order; the torsion-free
    quotient is an extension of Q^(r-s) by Z_(p)^s.  Whether that extension
    splits is not decided (and not claimed).

    >>> extension_shape(3, 1)["divisible_quotient_rank"]
    2
    """
    if s < 0 or r < 0 or s > r:
        raise DomainError("need 0 <= s <= r")
    return {
        "r": r,
        "s": s,
        "t": r - s,
        "torsion": "finite p-group of undetermined order",
        "local_free_rank": s,
        "divisible_quotient_rank": r - s,
        "extension_splits": "not decided",
    }


@dataclass(frozen=True)
class KernelStructure:
    """Structure of the kernel of reduction to the special fiber.

    The divisible part is (Q/Z')^s + (Q/Z)^t relative to ``prime`` (the
    apostrophe marking the removal of the p-primary part); ``descriptor``
    encodes it as Pruefer multiplicities.  The finite p-group summand P is
    undetermined and carried as a flag, never an invented order.
    """

    prime: int
    s: int
    t: int
    descriptor: GroupDescriptor
    undetermined_finite_p_part: bool = True

    @property
    def is_finite(self) -> bool:
        return self.s == 0 and self.t == 0

    def corank(self, l: int) -> int:
        return self.descriptor.pruefer.at(l).value

    def display(self) -> str:
        parts = []
        if self.s:
            parts.append("(Q/Z')" + (f"^{self.s}" if self.s > 1 else ""))
        if self.t:
            parts.append("(Q/Z)" + (f"^{self.t}" if self.t > 1 else ""))
        parts.append("P")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "p": str(self.prime),
            "s": str(self.s),
            "t": str(self.t),
            "descriptor": self.descriptor.to_json(),
            "undetermined_finite_p_part": self.undetermined_finite_p_part,
            "display": self.display(),
        }


def kernel_structure(s: int, t: int, p: int) -> KernelStructure:
    """The closed-form kernel structure (Q/Z')^s + (Q/Z)^t + P.

    The corank at a prime l != p is s + t; at p it is t; so the p-corank is
    strictly smaller than the l-corank unless both vanish, enforced through
    the constraint that t > 0 requires s > 0.

    >>> k = kernel_structure(1, 2, 19)
    >>> k.display()
    "(Q/Z') + (Q/Z)^2 + P"
    >>> k.corank(3), k.corank(19)
    (3, 2)
    """
    require_prime(p)
    if s < 0 or t < 0:
        raise DomainError("s and t must be nonnegative")
    if t > 0 and s == 0:
        raise DomainError(
            "t > 0 with s = 0 violates the kernel-structure constraint",
            citation="p-corank strictly below l-corank unless both vanish",
        )
    descriptor = GroupDescriptor.build(
        pruefer=PrimeMultiplicity.build(s + t, {p: t})
    )
    return KernelStructure(prime=p, s=s, t=t, descriptor=descriptor)
