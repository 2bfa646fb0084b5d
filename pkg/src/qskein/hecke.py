"""The Hecke algebra of the braid group, in the positive permutation
braid basis.

Basis elements are labelled by permutations in one-line notation; a
braid word acts on the right one letter at a time through the quadratic
relation x^-1*s_i - x*s_i^-1 = z.  On top of the algebra sit the full
symmetrizer-style sums a_n and b_n, the row/column products E, the
quasi-idempotents e_lambda, and the cabling operations used to decorate
braids by partitions.
"""

from __future__ import annotations

import warnings
from fractions import Fraction

from .linear import SCALAR_LIKE, add_term, as_scalar, format_sum
from .partitions import Partition, hook_content_product, transpose_permutation
from .perms import Perm, all_perms, identity, inverse, inversions, reduced_word, swap_positions
from .scalars import LaurentPoly, Scalar

# S_n sums refuse to enumerate beyond this many strands; raise it at your
# own risk (terms grow like n!)
ENUMERATION_CAP = 8


class BraidWord:
    """A braid word: strand count plus signed generator letters.

    Letter j > 0 is the positive crossing of strands j, j+1; j < 0 its
    inverse.  Text form is whitespace-separated signed integers.
    """

    __slots__ = ("strand_count", "letters")

    def __init__(self, strand_count: int, letters=()):
        letters = tuple(int(j) for j in letters)
        if strand_count < 1:
            raise ValueError("braid needs at least one strand")
        for j in letters:
            if j == 0 or abs(j) > strand_count - 1:
                raise ValueError(f"letter {j} out of range for {strand_count} strands")
        self.strand_count = strand_count
        self.letters = letters

    @classmethod
    def from_text(cls, text: str, strand_count: int | None = None) -> "BraidWord":
        parts = text.split()
        letters = []
        for p in parts:
            try:
                j = int(p)
            except ValueError:
                raise ValueError(f"bad braid letter {p!r}") from None
            letters.append(j)
        if strand_count is None:
            strand_count = max((abs(j) for j in letters), default=0) + 1
        return cls(strand_count, letters)

    @property
    def writhe(self) -> int:
        return sum(1 if j > 0 else -1 for j in self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strand_count, [-j for j in reversed(self.letters)])

    def concat(self, other: "BraidWord") -> "BraidWord":
        if self.strand_count != other.strand_count:
            raise ValueError("strand counts differ")
        return BraidWord(self.strand_count, self.letters + other.letters)

    def permutation(self) -> Perm:
        perm = identity(self.strand_count)
        for j in self.letters:
            perm = swap_positions(perm, abs(j) - 1)
        return perm

    def __eq__(self, other) -> bool:
        if not isinstance(other, BraidWord):
            return NotImplemented
        return (self.strand_count, self.letters) == (other.strand_count, other.letters)

    def __hash__(self):
        return hash((self.strand_count, self.letters))

    def __str__(self) -> str:
        return " ".join(str(j) for j in self.letters)

    def __repr__(self) -> str:
        return f"BraidWord({self.strand_count}, {self.letters!r})"


class HeckeElement:
    """Scalar combination of positive permutation braids on n strands."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        data = {}
        if terms:
            for pi, c in terms.items():
                c = as_scalar(c)
                if c:
                    data[pi] = c
        self.n = n
        self.terms = data

    @classmethod
    def _from(cls, n: int, terms: dict) -> "HeckeElement":
        obj = object.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    @classmethod
    def unit(cls, n: int) -> "HeckeElement":
        return cls._from(n, {identity(n): Scalar.one()})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, pi: Perm) -> Scalar:
        c = self.terms.get(pi)
        return c if c is not None else Scalar.zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, HeckeElement):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, SCALAR_LIKE):
            c = as_scalar(other)
            if not c:
                return not self.terms
            return self.terms == {identity(self.n): c}
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        if isinstance(other, SCALAR_LIKE):
            other = HeckeElement(self.n, {identity(self.n): other})
        if not isinstance(other, HeckeElement):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("strand counts differ")
        acc = dict(self.terms)
        for k, c in other.terms.items():
            add_term(acc, k, c)
        return HeckeElement._from(self.n, acc)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, SCALAR_LIKE):
            other = HeckeElement(self.n, {identity(self.n): other})
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return HeckeElement._from(self.n, {k: -c for k, c in self.terms.items()})

    def scale(self, c) -> "HeckeElement":
        c = as_scalar(c)
        if not c:
            return HeckeElement._from(self.n, {})
        return HeckeElement._from(self.n, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SCALAR_LIKE):
            return self.scale(other)
        if isinstance(other, HeckeElement):
            return mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, SCALAR_LIKE):
            return self.scale(other)
        return NotImplemented

    def right_letter(self, j: int) -> "HeckeElement":
        """Multiply on the right by one braid letter."""
        i = abs(j) - 1
        if j == 0 or i >= self.n - 1:
            raise ValueError(f"letter {j} out of range for {self.n} strands")
        acc: dict[Perm, Scalar] = {}
        if j > 0:
            for pi, c in self.terms.items():
                flipped = swap_positions(pi, i)
                if pi[i] < pi[i + 1]:
                    add_term(acc, flipped, c)
                else:
                    add_term(acc, pi, c.mul_poly(_XZ))
                    add_term(acc, flipped, c.mul_monomial(2, 0, 0))
        else:
            for pi, c in self.terms.items():
                flipped = swap_positions(pi, i)
                if pi[i] < pi[i + 1]:
                    add_term(acc, flipped, c.mul_monomial(-2, 0, 0))
                    add_term(acc, pi, -c.mul_poly(_XINVZ))
                else:
                    add_term(acc, flipped, c)
        return HeckeElement._from(self.n, acc)

    def right_word(self, letters) -> "HeckeElement":
        out = self
        for j in letters:
            out = out.right_letter(j)
        return out

    def sorted_terms(self):
        return [(k, self.terms[k]) for k in sorted(self.terms)]

    def __str__(self) -> str:
        return format_sum(self.sorted_terms(), _format_perm)

    def __repr__(self) -> str:
        return f"HeckeElement({self.n}, {self.terms!r})"


_XZ = LaurentPoly({(1, 0, 1): 1, (1, 0, -1): -1})        # x(s - s^-1)
_XINVZ = LaurentPoly({(-1, 0, 1): 1, (-1, 0, -1): -1})   # x^-1(s - s^-1)


def _format_perm(pi: Perm) -> str:
    return "w[" + " ".join(str(p + 1) for p in pi) + "]"


def from_word(w: BraidWord) -> HeckeElement:
    """Image of a braid word in the Hecke algebra."""
    return HeckeElement.unit(w.strand_count).right_word(w.letters)


def mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product, reducing through the braid word of each basis term of b."""
    if a.n != b.n:
        raise ValueError("strand counts differ")
    acc: dict[Perm, Scalar] = {}
    for rho, c in b.terms.items():
        piece = a.right_word(i + 1 for i in reduced_word(rho))
        for pi, c2 in piece.terms.items():
            add_term(acc, pi, c2 * c)
    return HeckeElement._from(a.n, acc)


def tensor(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Juxtaposition: b's strands are appended after a's."""
    n = a.n + b.n
    acc: dict[Perm, Scalar] = {}
    for pi, c1 in a.terms.items():
        for rho, c2 in b.terms.items():
            key = pi + tuple(r + a.n for r in rho)
            acc[key] = c1 * c2
    return HeckeElement._from(n, acc)


def _check_cap(n: int) -> None:
    if n > ENUMERATION_CAP:
        raise ValueError(
            f"enumeration over {n} strands exceeds the cap {ENUMERATION_CAP}; "
            "raise hecke.ENUMERATION_CAP to force it"
        )


def a_element(n: int) -> HeckeElement:
    """Sum of all basis braids weighted by (x^-1 s)^length."""
    if n < 1:
        raise ValueError("need at least one strand")
    _check_cap(n)
    terms = {}
    for pi in all_perms(n):
        l = inversions(pi)
        terms[pi] = Scalar.monomial(-l, 0, l)
    return HeckeElement._from(n, terms)


def b_element(n: int) -> HeckeElement:
    """Sum of all basis braids weighted by (-x^-1 s^-1)^length."""
    if n < 1:
        raise ValueError("need at least one strand")
    _check_cap(n)
    terms = {}
    for pi in all_perms(n):
        l = inversions(pi)
        terms[pi] = Scalar.monomial(-l, 0, -l, (-1) ** (l & 1))
    return HeckeElement._from(n, terms)


_e_cache: dict[Partition, HeckeElement] = {}


def e_lambda(lam: Partition) -> HeckeElement:
    """The quasi-idempotent for a partition: row sums conjugated against
    column sums, e^2 = alpha * e."""
    if lam.size < 1:
        raise ValueError("partition must be nonempty")
    out = _e_cache.get(lam)
    if out is not None:
        return out
    if lam.size > ENUMERATION_CAP:
        warnings.warn(f"e_lambda on {lam.size} strands builds >{ENUMERATION_CAP}! terms")
    acc = a_element(lam.parts[0])
    for r in lam.parts[1:]:
        acc = tensor(acc, a_element(r))
    cols = lam.transpose().parts
    bcc = b_element(cols[0])
    for c in cols[1:]:
        bcc = tensor(bcc, b_element(c))
    # Basis labels are position-to-strand maps, so the braid whose strands
    # carry row cell i to column cell pi(i) is labelled by the inverse.
    word = [i + 1 for i in reduced_word(inverse(transpose_permutation(lam)))]
    out = acc.right_word(word)
    out = mul(out, bcc)
    out = out.right_word(-j for j in reversed(word))
    _e_cache[lam] = out
    return out


def alpha(lam: Partition) -> Scalar:
    """The eigenvalue in e_lambda^2 = alpha * e_lambda."""
    return Scalar.from_poly(hook_content_product(lam))


def cable_word(w: BraidWord, k: int) -> BraidWord:
    """Replace every strand by k parallel strands."""
    if k < 1:
        raise ValueError("cable width must be positive")
    letters: list[int] = []
    for j in w.letters:
        i = abs(j)
        p = (i - 1) * k
        block = [p + 1 + a + b for a in range(k) for b in range(k - 1, -1, -1)]
        if j < 0:
            block = [-c for c in reversed(block)]
        letters += block
    return BraidWord(w.strand_count * k, letters)


def decorate(w: BraidWord, lam: Partition) -> HeckeElement:
    """Cable a braid word by |lam| and attach a normalized idempotent to
    every cabled strand."""
    k = lam.size
    if k < 1:
        raise ValueError("decoration partition must be nonempty")
    cab = from_word(cable_word(w, k))
    block = e_lambda(lam).scale(Scalar.one() / alpha(lam))
    deco = block
    for _ in range(w.strand_count - 1):
        deco = tensor(deco, block)
    return mul(cab, deco)
