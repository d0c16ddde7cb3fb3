"""Shared oracles and random generators for the test suite.

The oracles here compute in explicit finite groups and towers, independently
of the descriptor block tables they are used to check.
"""

from __future__ import annotations

from math import gcd

from limext import GroupDescriptor, GroupStructure, IntMatrix, InverseSystemSpec
from limext.descriptors import CONTINUUM, PrimeMultiplicity


class ExplicitCyclic:
    """Z/m with exhaustive element-level computations."""

    def __init__(self, m: int):
        self.m = m
        self.elements = frozenset(range(m))

    def mult_image(self, subset, n: int) -> frozenset:
        return frozenset((n * x) % self.m for x in subset)

    def torsion_subgroup(self, n: int) -> frozenset:
        return frozenset(x for x in self.elements if (n * x) % self.m == 0)

    def max_divisible_subgroup(self, p: int) -> frozenset:
        # The descending chain G >= pG >= p^2 G ... stabilizes at the largest
        # subgroup on which multiplication by p is onto.
        current = self.elements
        while True:
            nxt = self.mult_image(current, p)
            if nxt == current:
                return current
            current = nxt

    def quotient_order(self, p: int, j: int) -> int:
        return self.m // len(self.mult_image(self.elements, p ** j))

    def torsion_order(self, p: int, j: int) -> int:
        return len(self.torsion_subgroup(p ** j))


def finite_tower_limit(groups, maps):
    """Limit data of a truncated tower of finite abelian groups.

    ``groups[i]`` is a set; ``maps[i]`` sends an element of groups[i+1] to
    groups[i].  Returns (stable_image_sizes, mittag_leffler, limit_size) for
    the bottom half of the truncation: the image of the deepest level inside
    each level, whether those images had already stabilized by the middle of
    the truncation (the Mittag-Leffler evidence), and the bottom stable size.
    For towers of subsets of a fixed finite group the stable system is
    eventually constant, so once images stop moving the bottom size is the
    cardinality of the limit of the full tower and the derived limit
    vanishes.
    """
    depth = len(groups)

    def image_at(level, source):
        deep = set(groups[source])
        for step in range(source - 1, level - 1, -1):
            deep = {maps[step](x) for x in deep}
        return frozenset(deep)

    # Only the bottom third of the truncation has enough headroom above it
    # for the image chain to have settled; stabilization evidence is that
    # the deepest two sources give the same image there.
    bottom = max(1, depth // 3)
    sizes = []
    stabilized = []
    for i in range(bottom):
        next_deepest = image_at(i, depth - 2)
        deepest = image_at(i, depth - 1)
        sizes.append(len(deepest))
        stabilized.append(next_deepest == deepest)
    return sizes, all(stabilized), sizes[0]


def subgroup_closure(m_factors, generators) -> frozenset:
    """Subgroup of Z/d1 + ... + Z/dk generated by tuples, by naive closure."""
    elems = {tuple(0 for _ in m_factors)}
    frontier = [tuple(g) for g in generators]
    elems.update(frontier)
    changed = True
    while changed:
        changed = False
        current = list(elems)
        for a in current:
            for g in frontier:
                s = tuple((x + y) % d for x, y, d in zip(a, g, m_factors))
                if s not in elems:
                    elems.add(s)
                    changed = True
    return frozenset(elems)


def all_quotient_structures(m_factors) -> set[GroupStructure]:
    """Isomorphism classes of quotients of Z/d1 + Z/d2 (+ ...), brute force.

    Every subgroup of a 2-generated finite abelian group is 2-generated, so
    enumerating subgroups generated by element pairs is exhaustive for up to
    two factors.  Quotient structures come from Smith normal form of an
    augmented relation matrix, an independent code path from the partition
    enumeration under test.
    """
    from limext import cokernel_structure

    k = len(m_factors)
    assert k <= 2
    elements = [()]
    for d in m_factors:
        elements = [e + (x,) for e in elements for x in range(d)]
    subgroups = set()
    for a in elements:
        for b in elements:
            subgroups.add(subgroup_closure(m_factors, [a, b]))
    out = set()
    for sub in subgroups:
        relation_rows = [
            [m_factors[i] if i == j else 0 for j in range(k)] for i in range(k)
        ]
        relation_rows.extend(list(g) for g in sub)
        out.add(cokernel_structure(IntMatrix.from_rows(relation_rows).transpose()))
    return out


# ---------------------------------------------------------------------------
# Random generators (plain random.Random; seeds documented at use sites).


def random_matrix(rng, rows, cols, bound=50) -> IntMatrix:
    return IntMatrix.from_rows(
        [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]
    )


def random_nonsingular(rng, n, bound=30) -> IntMatrix:
    while True:
        m = random_matrix(rng, n, n, bound)
        if m.determinant() != 0:
            return m


def random_unimodular(rng, n, ops=6) -> IntMatrix:
    rows = IntMatrix.identity(n).to_rows()
    for _ in range(ops):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        q = rng.randint(-3, 3)
        for k in range(n):
            rows[i][k] += q * rows[j][k]
    if rng.random() < 0.5 and n > 1:
        rows[0], rows[1] = rows[1], rows[0]
    return IntMatrix.from_rows(rows)


def random_unimodular_with_inverse(rng, n, ops=6):
    """(W, W_inverse), built from elementary operations and their inverses."""
    w = IntMatrix.identity(n).to_rows()
    w_inv = IntMatrix.identity(n).to_rows()
    for _ in range(ops):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        q = rng.randint(-3, 3)
        # W <- E W with E adding q * row j to row i; W^-1 <- W^-1 E^-1.
        for k in range(n):
            w[i][k] += q * w[j][k]
        for row in w_inv:
            row[j] -= q * row[i]
    return IntMatrix.from_rows(w), IntMatrix.from_rows(w_inv)


BLOCK_KINDS = (
    "free", "cyclic", "local", "inverted", "rational",
    "rational_continuum", "pruefer", "padic",
)


def random_descriptor(rng, max_blocks=3, primes=(2, 3, 5, 7)) -> GroupDescriptor:
    """A descriptor assembled from a few random blocks.

    Pruefer multiplicities stay finite (the Tate functor refuses continuum
    Pruefer blocks by design); the rational part may be continuum.
    """
    g = GroupDescriptor.build()
    for _ in range(rng.randint(0, max_blocks)):
        kind = rng.choice(BLOCK_KINDS)
        n = rng.randint(1, 3)
        p = rng.choice(primes)
        if kind == "free":
            g = g + GroupDescriptor.free(n)
        elif kind == "cyclic":
            g = g + GroupDescriptor.cyclic_group(rng.randint(2, 360))
        elif kind == "local":
            g = g + GroupDescriptor.localized(p, n)
        elif kind == "inverted":
            s = rng.sample(primes, rng.randint(1, 2))
            g = g + GroupDescriptor.s_inverted(s, n)
        elif kind == "rational":
            g = g + GroupDescriptor.rationals(n)
        elif kind == "rational_continuum":
            g = g + GroupDescriptor.rationals(CONTINUUM)
        elif kind == "pruefer":
            if rng.random() < 0.3:
                g = g + GroupDescriptor.build(pruefer=PrimeMultiplicity.build(1, {p: 0}))
            else:
                g = g + GroupDescriptor.pruefer_group(p, n)
        elif kind == "padic":
            g = g + GroupDescriptor.padic_integers(p, n)
    return g


def random_system(rng, max_rank=4, bound=30, single_prime=None) -> InverseSystemSpec:
    """A random validated-shape inverse system spec.

    With ``single_prime`` set, all prefix determinants and tail entries are
    (signed) powers of that prime, so every transition cokernel is a p-group.
    """
    r = rng.randint(1, max_rank)
    prefix = []
    for _ in range(rng.randint(0, 3)):
        if single_prime:
            rows = [[0] * r for _ in range(r)]
            for i in range(r):
                rows[i][i] = rng.choice([-1, 1]) * single_prime ** rng.randint(0, 2)
                for j in range(i + 1, r):
                    rows[i][j] = rng.randint(-3, 3)
            prefix.append(IntMatrix.from_rows(rows))
        else:
            prefix.append(random_nonsingular(rng, r, bound=10))
    period = rng.randint(1, 3)
    tail = []
    for _ in range(period):
        if single_prime:
            vec = [
                rng.choice([-1, 1]) * single_prime ** rng.randint(0, 2)
                for _ in range(r)
            ]
        else:
            vec = []
            for _ in range(r):
                d = 0
                while d == 0:
                    d = rng.randint(-bound, bound)
                vec.append(d)
        tail.append(vec)
    return InverseSystemSpec.build(r, prefix, tail)


def vp_int(n: int, p: int) -> int:
    n = abs(n)
    v = 0
    while n and n % p == 0:
        n //= p
        v += 1
    return v


def naive_gcd_list(xs) -> int:
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g
