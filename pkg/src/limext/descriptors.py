"""Descriptors for the infinite abelian groups used throughout the package.

A :class:`GroupDescriptor` is a formal direct sum of basic blocks:

====================  =========================================
field                 block
====================  =========================================
``free_rank``         copies of Z
``cyclic``            Z/m factors (invariant-factor chain)
``local``             copies of Z localized at a prime, Z_(p)
``inverted``          copies of Z[S^-1] for a finite prime set S
``rational``          copies of Q (possibly continuum many)
``pruefer``           copies of the Pruefer group Q_l/Z_l per l
``padic``             copies of the p-adic integers Z_p,
                      regarded as an abstract group
====================  =========================================

Multiplicities are plain counts except for ``rational`` and ``pruefer``,
which may be the cardinality of the continuum.  Equality of descriptors is
literal equality of the normalized fields; no isomorphism testing between
different block expressions is attempted.  Two documented identifications
are built into the encoding rather than decided at runtime: Q/Z is the
Pruefer multiplicity function with constant value 1, and uniquely divisible
groups of continuum cardinality (such as the quotient of Z_p by the
localization Z_(p), or Q_p as an abstract group) are ``rational`` with
continuum multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError
from .fg_groups import GroupStructure
from .numutil import require_prime


@dataclass(frozen=True)
class ExtCardinal:
    """A finite count or the cardinality of the continuum (value None).

    >>> ExtCardinal(3) + ExtCardinal(4)
    ExtCardinal(value=7)
    >>> ExtCardinal(3) + CONTINUUM == CONTINUUM
    True
    >>> CONTINUUM * 0 == ExtCardinal(0)
    True
    """

    value: int | None = 0

    def __post_init__(self):
        if self.value is not None and self.value < 0:
            raise DomainError("cardinal must be nonnegative")

    @property
    def is_continuum(self) -> bool:
        return self.value is None

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def __add__(self, other: "ExtCardinal") -> "ExtCardinal":
        if self.is_continuum or other.is_continuum:
            return CONTINUUM
        return ExtCardinal(self.value + other.value)

    def __mul__(self, other) -> "ExtCardinal":
        other = as_cardinal(other)
        if self.is_zero or other.is_zero:
            return ExtCardinal(0)
        if self.is_continuum or other.is_continuum:
            return CONTINUUM
        return ExtCardinal(self.value * other.value)

    __rmul__ = __mul__

    def __str__(self):
        return "continuum" if self.is_continuum else str(self.value)

    def to_json(self):
        return "continuum" if self.is_continuum else self.value

    @classmethod
    def from_json(cls, data) -> "ExtCardinal":
        if data == "continuum":
            return CONTINUUM
        return cls(int(data))


CONTINUUM = ExtCardinal(None)
ZERO_CARDINAL = ExtCardinal(0)


def as_cardinal(x) -> ExtCardinal:
    if isinstance(x, ExtCardinal):
        return x
    if x == "continuum":
        return CONTINUUM
    return ExtCardinal(int(x))


@dataclass(frozen=True)
class PrimeMultiplicity:
    """A function prime -> ExtCardinal with finite description.

    ``default`` is the value at all but finitely many primes; ``exceptions``
    lists the primes where the value differs.  Q/Z is default 1; the
    prime-to-p part Q/Z' is default 1 with exception p -> 0.

    >>> qz = PrimeMultiplicity.build(1)
    >>> qz.at(97)
    ExtCardinal(value=1)
    >>> qz_prime = PrimeMultiplicity.build(1, {5: 0})
    >>> (qz + qz_prime).at(5)
    ExtCardinal(value=1)
    """

    default: ExtCardinal = ZERO_CARDINAL
    exceptions: tuple[tuple[int, ExtCardinal], ...] = ()

    @classmethod
    def build(cls, default=0, exceptions=None) -> "PrimeMultiplicity":
        default = as_cardinal(default)
        cleaned = {}
        for p, v in (exceptions or {}).items():
            p = require_prime(int(p), "exception prime")
            v = as_cardinal(v)
            if v != default:
                cleaned[p] = v
        return cls(default, tuple(sorted(cleaned.items())))

    def at(self, p: int) -> ExtCardinal:
        for q, v in self.exceptions:
            if q == p:
                return v
        return self.default

    @property
    def is_zero(self) -> bool:
        return self.default.is_zero and not self.exceptions

    def __add__(self, other: "PrimeMultiplicity") -> "PrimeMultiplicity":
        primes = {p for p, _ in self.exceptions} | {p for p, _ in other.exceptions}
        return PrimeMultiplicity.build(
            self.default + other.default,
            {p: self.at(p) + other.at(p) for p in primes},
        )

    def scale(self, c) -> "PrimeMultiplicity":
        c = as_cardinal(c)
        return PrimeMultiplicity.build(
            self.default * c, {p: v * c for p, v in self.exceptions}
        )

    def has_continuum(self) -> bool:
        return self.default.is_continuum or any(v.is_continuum for _, v in self.exceptions)

    def to_json(self) -> dict:
        return {
            "default": self.default.to_json(),
            "exceptions": {str(p): v.to_json() for p, v in self.exceptions},
        }

    @classmethod
    def from_json(cls, data: dict) -> "PrimeMultiplicity":
        return cls.build(
            ExtCardinal.from_json(data.get("default", 0)),
            {int(p): ExtCardinal.from_json(v) for p, v in data.get("exceptions", {}).items()},
        )


ZERO_MULTIPLICITY = PrimeMultiplicity()


@dataclass(frozen=True)
class GroupDescriptor:
    free_rank: int = 0
    cyclic: tuple[int, ...] = ()
    local: tuple[tuple[int, int], ...] = ()
    inverted: tuple[tuple[tuple[int, ...], int], ...] = ()
    rational: ExtCardinal = ZERO_CARDINAL
    pruefer: PrimeMultiplicity = field(default_factory=PrimeMultiplicity)
    padic: tuple[tuple[int, int], ...] = ()

    @classmethod
    def build(
        cls,
        free_rank: int = 0,
        cyclic=(),
        local=None,
        inverted=(),
        rational=0,
        pruefer=None,
        padic=None,
    ) -> "GroupDescriptor":
        """Normalizing constructor; use this instead of the raw dataclass.

        >>> GroupDescriptor.build(cyclic=[2, 3]).cyclic
        (6,)
        >>> GroupDescriptor.build(local={5: 0}).is_zero()
        True
        """
        if free_rank < 0:
            raise DomainError("free rank must be nonnegative")
        cyc = GroupStructure.from_factors(cyclic)
        if cyc.free_rank:
            raise DomainError("cyclic moduli must be nonzero")
        loc = _clean_prime_counts(local)
        pad = _clean_prime_counts(padic)
        inv: dict[tuple[int, ...], int] = {}
        for primes, count in inverted:
            count = int(count)
            if count < 0:
                raise DomainError("multiplicities must be nonnegative")
            if count == 0:
                continue
            key = tuple(sorted({require_prime(int(q), "inverted prime") for q in primes}))
            if not key:
                raise DomainError("inverted prime set must be nonempty")
            inv[key] = inv.get(key, 0) + count
        if pruefer is None:
            pruefer = ZERO_MULTIPLICITY
        elif not isinstance(pruefer, PrimeMultiplicity):
            pruefer = PrimeMultiplicity.build(0, dict(pruefer))
        return cls(
            free_rank=free_rank,
            cyclic=cyc.invariant_factors,
            local=loc,
            inverted=tuple(sorted(inv.items())),
            rational=as_cardinal(rational),
            pruefer=pruefer,
            padic=pad,
        )

    # -- convenience block constructors ------------------------------------

    @classmethod
    def free(cls, n: int = 1) -> "GroupDescriptor":
        return cls.build(free_rank=n)

    @classmethod
    def cyclic_group(cls, m: int) -> "GroupDescriptor":
        return cls.build(cyclic=[m])

    @classmethod
    def localized(cls, p: int, n: int = 1) -> "GroupDescriptor":
        return cls.build(local={p: n})

    @classmethod
    def s_inverted(cls, primes, n: int = 1) -> "GroupDescriptor":
        return cls.build(inverted=[(tuple(primes), n)])

    @classmethod
    def rationals(cls, count=1) -> "GroupDescriptor":
        return cls.build(rational=count)

    @classmethod
    def pruefer_group(cls, p: int, n=1) -> "GroupDescriptor":
        return cls.build(pruefer={p: n})

    @classmethod
    def q_mod_z(cls) -> "GroupDescriptor":
        return cls.build(pruefer=PrimeMultiplicity.build(1))

    @classmethod
    def q_mod_z_prime_to(cls, p: int) -> "GroupDescriptor":
        """Q/Z with the p-primary part removed, i.e. Q modulo Z[1/p]."""
        return cls.build(pruefer=PrimeMultiplicity.build(1, {p: 0}))

    @classmethod
    def padic_integers(cls, p: int, n: int = 1) -> "GroupDescriptor":
        return cls.build(padic={p: n})

    @classmethod
    def from_structure(cls, g: GroupStructure) -> "GroupDescriptor":
        return cls.build(free_rank=g.free_rank, cyclic=g.invariant_factors)

    # -- algebra ------------------------------------------------------------

    def __add__(self, other: "GroupDescriptor") -> "GroupDescriptor":
        inv: dict[tuple[int, ...], int] = dict(self.inverted)
        for k, c in other.inverted:
            inv[k] = inv.get(k, 0) + c
        return GroupDescriptor.build(
            free_rank=self.free_rank + other.free_rank,
            cyclic=self.cyclic + other.cyclic,
            local=_merge_counts(self.local, other.local),
            inverted=tuple(inv.items()),
            rational=self.rational + other.rational,
            pruefer=self.pruefer + other.pruefer,
            padic=_merge_counts(self.padic, other.padic),
        )

    def scale(self, n: int) -> "GroupDescriptor":
        if n < 0:
            raise DomainError("multiplicities must be nonnegative")
        if n == 0:
            return ZERO_DESCRIPTOR
        return GroupDescriptor.build(
            free_rank=self.free_rank * n,
            cyclic=self.cyclic * n,
            local={p: c * n for p, c in self.local},
            inverted=[(k, c * n) for k, c in self.inverted],
            rational=self.rational * n,
            pruefer=self.pruefer.scale(n),
            padic={p: c * n for p, c in self.padic},
        )

    def is_zero(self) -> bool:
        return self == ZERO_DESCRIPTOR

    def is_divisible(self) -> bool:
        """Whether every block is divisible (only Q and Pruefer blocks)."""
        return not (self.free_rank or self.cyclic or self.local
                    or self.inverted or self.padic)

    def has_continuum(self) -> bool:
        return self.rational.is_continuum or self.pruefer.has_continuum()

    def local_count(self, p: int) -> int:
        return dict(self.local).get(p, 0)

    def padic_count(self, p: int) -> int:
        return dict(self.padic).get(p, 0)

    def corank(self, l: int) -> ExtCardinal:
        """Number of Pruefer summands at l (the l-corank of the torsion part)."""
        return self.pruefer.at(l)

    def finite_part(self) -> GroupStructure:
        return GroupStructure(0, self.cyclic)

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"C{m}" for m in self.cyclic)
        parts.extend(_pow(f"Z_({p})", c) for p, c in self.local)
        for primes, c in self.inverted:
            prod = 1
            for q in primes:
                prod *= q
            parts.append(_pow(f"Z[1/{prod}]", c))
        if not self.rational.is_zero:
            parts.append(_pow("Q", self.rational))
        if not self.pruefer.is_zero:
            if self.pruefer.default.is_zero:
                parts.extend(
                    _pow(f"Pruefer({p})", v) for p, v in self.pruefer.exceptions
                    if not v.is_zero
                )
            else:
                exc = ", ".join(f"{p} -> {v}" for p, v in self.pruefer.exceptions)
                base = f"Pruefer(all primes -> {self.pruefer.default}"
                parts.append(base + (f"; {exc})" if exc else ")"))
        parts.extend(_pow(f"Zp({p})", c) for p, c in self.padic)
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {
            "free_rank": str(self.free_rank),
            "cyclic": [str(m) for m in self.cyclic],
            "local": {str(p): str(c) for p, c in self.local},
            "inverted": [
                {"primes": [str(q) for q in primes], "count": str(c)}
                for primes, c in self.inverted
            ],
            "rational": self.rational.to_json(),
            "pruefer": self.pruefer.to_json(),
            "padic": {str(p): str(c) for p, c in self.padic},
        }

    @classmethod
    def from_json(cls, data: dict) -> "GroupDescriptor":
        return cls.build(
            free_rank=int(data.get("free_rank", 0)),
            cyclic=[int(m) for m in data.get("cyclic", [])],
            local={int(p): int(c) for p, c in data.get("local", {}).items()},
            inverted=[
                ([int(q) for q in item["primes"]], int(item["count"]))
                for item in data.get("inverted", [])
            ],
            rational=ExtCardinal.from_json(data.get("rational", 0)),
            pruefer=PrimeMultiplicity.from_json(data.get("pruefer", {})),
            padic={int(p): int(c) for p, c in data.get("padic", {}).items()},
        )


def _pow(base: str, count) -> str:
    count = as_cardinal(count)
    if count.is_continuum:
        return f"{base}^continuum"
    if count.value == 1:
        return base
    return f"{base}^{count.value}"


def _clean_prime_counts(mapping) -> tuple[tuple[int, int], ...]:
    out = {}
    for p, c in (mapping or {}).items() if isinstance(mapping, dict) else (mapping or ()):
        p = require_prime(int(p), "block prime")
        c = int(c)
        if c < 0:
            raise DomainError("multiplicities must be nonnegative")
        if c:
            out[p] = out.get(p, 0) + c
    return tuple(sorted(out.items()))


def _merge_counts(a, b) -> dict:
    out = dict(a)
    for p, c in b:
        out[p] = out.get(p, 0) + c
    return out


ZERO_DESCRIPTOR = GroupDescriptor.build()
