"""Arithmetic in the subring of the Burnside ring of S_n spanned by the
classes [P_mu] of ordered-set-partition actions, mu running over the
partitions of n.

A basis class [P_mu] is the S_n-set of tuples of pairwise disjoint subsets
of {1..n} whose j-th block has size mu_j.  Elements of the ring are integer
linear combinations of basis classes with a fixed ambient n; basis keys are
always partitions of n (shorter partitions are padded on construction).

Products of basis classes expand over contingency tables: the orbits of
P_mu x P_nu are classified by the matrix of block-intersection sizes, so
[P_mu]*[P_nu] is the sum of [P_gamma] over all nonnegative integer matrices
with row sums mu and column sums nu, where gamma collects the nonzero
entries.  Rows and columns are labelled by tuple position, so each matrix
counts exactly one orbit and no symmetry quotient is needed.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial, prod

from .partitions import (
    Partition,
    alpha,
    composition_to_partition,
    enumerate_partitions,
    format_partition,
    multinomial,
    pad,
)


class SchurElement:
    """An integer linear combination of basis classes for a fixed ambient n.

    Immutable; zero coefficients are never stored, so equality is plain
    comparison of the ambient and the coefficient map.
    """

    __slots__ = ("ambient", "coeffs")

    def __init__(self, ambient: int, coeffs=None):
        if ambient < 1:
            raise ValueError(f"ambient must be >= 1, got {ambient}")
        clean = {}
        for key, c in (coeffs or {}).items():
            key = Partition(key)
            if key.weight != ambient:
                raise ValueError(f"basis key {key} is not a partition of {ambient}")
            c = int(c)
            if c:
                clean[key] = clean.get(key, 0) + c
                if not clean[key]:
                    del clean[key]
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SchurElement is immutable")

    @classmethod
    def zero(cls, n: int) -> SchurElement:
        return cls(n, {})

    @classmethod
    def one(cls, n: int) -> SchurElement:
        """The ring identity [P_(n)], the class of the one-point set."""
        return cls(n, {Partition((n,)): 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> list[tuple[Partition, int]]:
        """(key, coefficient) pairs in descending lexicographic key order."""
        return [(mu, self.coeffs[mu]) for mu in sorted(self.coeffs, reverse=True)]

    def __eq__(self, other):
        return (
            isinstance(other, SchurElement)
            and self.ambient == other.ambient
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ambient, frozenset(self.coeffs.items())))

    def __add__(self, other):
        self._check_ambient(other)
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, 0) + c
        return SchurElement(self.ambient, out)

    def __neg__(self):
        return SchurElement(self.ambient, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SchurElement(self.ambient, {k: c * other for k, c in self.coeffs.items()})
        if isinstance(other, SchurElement):
            return schur_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def _check_ambient(self, other):
        if not isinstance(other, SchurElement):
            raise TypeError(f"expected SchurElement, got {type(other).__name__}")
        if self.ambient != other.ambient:
            raise ValueError(f"ambient mismatch: n={self.ambient} vs n={other.ambient}")

    def render(self) -> str:
        """Text form: signed terms in descending lex key order, e.g.
        ``+1*[P(2,2)] -1*[P(2,1,1)] @ n=4``.  The zero element renders as ``0``.
        """
        if self.is_zero():
            return "0"
        bits = []
        for mu, c in self.terms():
            sign = "+" if c > 0 else "-"
            body = ",".join(str(p) for p in mu)
            bits.append(f"{sign}{abs(c)}*[P({body})]")
        return " ".join(bits) + f" @ n={self.ambient}"

    def to_json(self) -> dict:
        return {
            "n": self.ambient,
            "terms": [
                {"partition": list(mu), "coefficient": c} for mu, c in self.terms()
            ],
        }

    def __repr__(self):
        return f"<SchurElement {self.render()}>"


def basis_element(mu, n: int) -> SchurElement:
    """The basis class of mu padded to ambient n."""
    mu = Partition(mu)
    if mu.weight > n:
        raise ValueError(f"partition weight {mu.weight} exceeds ambient {n}")
    return SchurElement(n, {pad(mu, n): 1})


def _row_fills(total, bounds):
    """Weak compositions of `total` with entry j bounded by bounds[j],
    in ascending lexicographic order."""
    if len(bounds) == 1:
        if total <= bounds[0]:
            yield (total,)
        return
    rest = bounds[1:]
    cap = sum(rest)
    for first in range(max(0, total - cap), min(total, bounds[0]) + 1):
        for tail in _row_fills(total - first, rest):
            yield (first,) + tail


@lru_cache(maxsize=None)
def _basis_product(mu: tuple, nu: tuple) -> dict:
    """Expand [P_mu]*[P_nu] (mu, nu partitions of the same n) as
    {gamma: multiplicity} by enumerating contingency tables with margins
    mu and nu, row by row in row-major lexicographic order."""
    n = sum(mu)
    if mu == (n,):
        return {Partition(nu): 1}
    if nu == (n,):
        return {Partition(mu): 1}
    out: dict[Partition, int] = {}
    cols = list(nu)

    def fill(r: int, entries: list[int]):
        if r == len(mu):
            gamma = Partition(sorted(entries, reverse=True))
            out[gamma] = out.get(gamma, 0) + 1
            return
        for row in _row_fills(mu[r], tuple(cols)):
            mark = len(entries)
            for j, e in enumerate(row):
                cols[j] -= e
                if e:
                    entries.append(e)
            fill(r + 1, entries)
            del entries[mark:]
            for j, e in enumerate(row):
                cols[j] += e

    fill(0, [])
    return out


def schur_mul(a: SchurElement, b: SchurElement) -> SchurElement:
    """Bilinear extension of the contingency-table basis product."""
    a._check_ambient(b)
    out: dict[Partition, int] = {}
    for mu, ca in a.coeffs.items():
        for nu, cb in b.coeffs.items():
            c = ca * cb
            for gamma, mult in _basis_product(tuple(mu), tuple(nu)).items():
                out[gamma] = out.get(gamma, 0) + c * mult
    return SchurElement(a.ambient, out)


@lru_cache(maxsize=None)
def sigma(i: int, n: int) -> SchurElement:
    """The class of the i-th symmetric power of {1..n}.

    Equals the sum over partitions mu of i with at most n parts of the basis
    class of the multiplicity profile of mu (sorted into a partition).
    """
    if n < 1:
        raise ValueError(f"ambient must be >= 1, got {n}")
    if i < 0:
        raise ValueError(f"power must be >= 0, got {i}")
    if i == 0:
        return SchurElement.one(n)
    total = SchurElement.zero(n)
    for mu in enumerate_partitions(i):
        if mu.length <= n:
            total = total + basis_element(composition_to_partition(alpha(mu)), n)
    return total


@lru_cache(maxsize=None)
def recursive_lambda(i: int, n: int) -> SchurElement:
    """The i-th exterior-power class of {1..n}, computed by the defining
    recursion -(-1)^i l_i = sum_{j<i} (-1)^j l_j s_{i-j} of the structure
    opposite to the symmetric powers.

    For i > n the recursion must collapse to zero; that is a theorem, so it
    is asserted rather than assumed.
    """
    if n < 1:
        raise ValueError(f"ambient must be >= 1, got {n}")
    if i < 0:
        raise ValueError(f"power must be >= 0, got {i}")
    if i == 0:
        return SchurElement.one(n)
    total = SchurElement.zero(n)
    for j in range(i):
        term = recursive_lambda(j, n) * sigma(i - j, n)
        total = total + (term if j % 2 == 0 else -term)
    result = total if i % 2 == 1 else -total
    if i > n:
        assert result.is_zero(), f"lambda^{i} at n={n} must vanish, got {result.render()}"
    return result


def closed_lambda(i: int, n: int) -> SchurElement:
    """The i-th exterior-power class of {1..n} by the closed formula:
    (-1)^i sum over mu |- i of (-1)^len(mu) * multinomial(mu) * [P_mu]."""
    if n < 1:
        raise ValueError(f"ambient must be >= 1, got {n}")
    if i < 0:
        raise ValueError(f"power must be >= 0, got {i}")
    if i == 0:
        return SchurElement.one(n)
    if i > n:
        return SchurElement.zero(n)
    out: dict[Partition, int] = {}
    for mu in enumerate_partitions(i):
        sign = -1 if (i + mu.length) % 2 else 1
        out[pad(mu, n)] = sign * multinomial(mu)
    return SchurElement(n, out)


def degree(mu, n: int, k: int) -> int:
    """Grading of a basis key, defined for 2k < n: the one-point class has
    degree 0, a key containing the part n-j (1 <= j <= k) has degree j, and
    everything else sits in the top bucket k+1."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if 2 * k >= n:
        raise ValueError(f"degree requires 2k < n, got k={k}, n={n}")
    mu = Partition(mu)
    if mu.weight != n:
        raise ValueError(f"{mu} is not a partition of {n}")
    if mu == (n,):
        return 0
    for j in range(1, k + 1):
        if n - j in mu:
            return j
    return k + 1


def leading_term_check(kappa1, kappa2, n: int, k: int) -> dict:
    """Check the graded leading-term property of a basis product.

    Writing each key as its largest part (the padding block) plus a tail,
    the product of two basis classes of degrees m, m' with m+m' <= n/2 must
    contain the concatenation class (the merged tails, repadded) with
    coefficient exactly 1, with every other term of degree < m+m'.
    Returns a report dict; report["ok"] is the verdict.
    """
    kappa1, kappa2 = pad(Partition(kappa1), n), pad(Partition(kappa2), n)
    m1 = degree(kappa1, n, k)
    m2 = degree(kappa2, n, k)
    if m1 + m2 > n // 2:
        raise ValueError(
            f"degree sum {m1}+{m2} is outside the graded regime (> {n // 2})"
        )
    tail1 = Partition(kappa1[1:])
    tail2 = Partition(kappa2[1:])
    concat = pad(Partition(sorted(tail1 + tail2, reverse=True)), n)
    product = _basis_product(tuple(kappa1), tuple(kappa2))
    coefficient = product.get(concat, 0)
    violations = []
    for key, c in product.items():
        if key == concat:
            continue
        d = degree(key, n, k)
        if d >= m1 + m2:
            violations.append(
                {"key": list(key), "coefficient": c, "degree": d}
            )
    violations.sort(key=lambda v: v["key"], reverse=True)
    return {
        "kappa1": list(kappa1),
        "kappa2": list(kappa2),
        "degrees": [m1, m2],
        "concatenation": list(concat),
        "coefficient": coefficient,
        "violations": violations,
        "ok": coefficient == 1 and not violations,
    }


def basis_cardinality(mu) -> int:
    """Number of points of the basis G-set for a partition of n: n!/prod(mu_j!)."""
    mu = Partition(mu)
    return factorial(mu.weight) // prod(factorial(p) for p in mu)


def cardinality(x: SchurElement) -> int:
    """Underlying point count, extended linearly; a ring homomorphism to Z."""
    return sum(c * basis_cardinality(mu) for mu, c in x.coeffs.items())
