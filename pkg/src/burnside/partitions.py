"""Integer partitions and compositions: enumeration, multiplicity profiles,
multinomials, lexicographic order, padding.

Partitions are weakly decreasing tuples of positive integers; compositions
are arbitrary tuples of positive integers.  Conversion between the two is
always explicit (sort a composition to get a partition), never implicit.
All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

from math import factorial, prod


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    The empty partition is allowed (the unique partition of 0).  Tuple
    comparison coincides with lexicographic comparison of partitions of
    equal weight, since no partition is a proper prefix of another one of
    the same weight.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        for j, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be >= 1, got {p}")
            if j and parts[j - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self):
        return f"Partition({tuple(self)})"


Composition = tuple  # ordered parts, not necessarily monotone


def as_composition(parts) -> Composition:
    """Validate a tuple of positive integers as a composition."""
    parts = tuple(int(p) for p in parts)
    for p in parts:
        if p < 1:
            raise ValueError(f"composition parts must be >= 1, got {p}")
    return parts


def composition_to_partition(alpha) -> Partition:
    """Sort a composition descending into the partition of the same weight."""
    return Partition(sorted(as_composition(alpha), reverse=True))


def enumerate_partitions(i: int) -> list[Partition]:
    """All partitions of i, in strictly descending lexicographic order.

    The first element is (i), the last (1,...,1).  For i = 0 the list holds
    the single empty partition.
    """
    if i < 0:
        raise ValueError(f"cannot partition a negative integer: {i}")
    if i == 0:
        return [Partition()]
    out = []
    cur = [i]
    while True:
        out.append(Partition(cur))
        # find rightmost part > 1, decrement it, redistribute the remainder
        j = len(cur) - 1
        while j >= 0 and cur[j] == 1:
            j -= 1
        if j < 0:
            return out
        rest = len(cur) - j  # the decremented unit plus the trailing ones
        cur[j] -= 1
        del cur[j + 1:]
        while rest > 0:
            nxt = min(cur[-1], rest)
            cur.append(nxt)
            rest -= nxt


def alpha(mu: Partition) -> tuple[int, ...]:
    """Multiplicity profile: run lengths of equal parts, largest part first.

    The entries sum to the length of mu.
    """
    if len(mu) == 0:
        raise ValueError("alpha is undefined for the empty partition")
    counts = []
    run = 1
    for j in range(1, len(mu)):
        if mu[j] == mu[j - 1]:
            run += 1
        else:
            counts.append(run)
            run = 1
    counts.append(run)
    return tuple(counts)


def multinomial(mu: Partition) -> int:
    """The exact integer l! / (a_1! ... a_k!) where l = len(mu), a = alpha(mu)."""
    if len(mu) == 0:
        raise ValueError("multinomial is undefined for the empty partition")
    num = factorial(len(mu))
    den = prod(factorial(a) for a in alpha(mu))
    assert num % den == 0
    return num // den


def pad(mu: Partition, n: int) -> Partition:
    """Extend a partition of i <= n to a partition of n by inserting n-i.

    Returns mu unchanged when i = n.
    """
    mu = Partition(mu)
    i = mu.weight
    if i > n:
        raise ValueError(f"cannot pad a partition of {i} to weight {n}")
    if i == n:
        return mu
    return Partition(sorted(mu + (n - i,), reverse=True))


def lex_compare(mu: Partition, nu: Partition) -> int:
    """Compare partitions of equal weight: -1, 0 or 1.

    The first differing part decides; missing trailing parts count as 0.
    """
    mu, nu = Partition(mu), Partition(nu)
    if mu.weight != nu.weight:
        raise ValueError(f"lex_compare needs equal weights, got {mu.weight} and {nu.weight}")
    for a, b in zip(mu, nu):
        if a != b:
            return 1 if a > b else -1
    if len(mu) != len(nu):
        return 1 if len(mu) > len(nu) else -1
    return 0


def format_partition(mu) -> str:
    """Render as comma-separated parts in brackets, e.g. [3,1,1]."""
    return "[" + ",".join(str(p) for p in mu) + "]"


def parse_partition(text: str) -> Partition:
    """Parse the bracket format accepted on the command line, e.g. [3,1,1]."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    s = s.strip()
    if not s:
        return Partition()
    try:
        parts = tuple(int(tok) for tok in s.split(","))
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    return Partition(parts)
