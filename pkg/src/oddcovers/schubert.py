"""Cohomology of the Grassmannian of lines G(2,n) in the Schubert basis.

Classes are integer combinations of basis elements sigma_{a,b} with
n-2 >= a >= b >= 0 (the 2 x (n-2) box). Multiplication is the two-row Pieri
rule for special classes, extended to arbitrary classes through Giambelli's
identity sigma_{a,b} = sigma_a sigma_b - sigma_{a+1} sigma_{b-1}; this is a
complete rule set for lines, so no general Littlewood-Richardson machinery
is needed. Anything leaving the box is annihilated at insertion time, which
is the cohomological truth and makes small-n vanishing automatic.

Coefficients are Python ints, hence arbitrary precision throughout.
"""

from .combinat import binom_int, catalan


class SchubertVector:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 2:
            raise ValueError("ambient G(2,n) needs n >= 2")
        clean = {}
        for (a, b), c in (terms or {}).items():
            if b < 0 or a < b:
                raise ValueError("invalid partition (%d,%d)" % (a, b))
            if c != 0 and a <= n - 2:
                clean[(a, b)] = clean.get((a, b), 0) + c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v != 0})

    def __setattr__(self, *args):
        raise AttributeError("SchubertVector is immutable")

    @staticmethod
    def unit(n: int):
        return SchubertVector(n, {(0, 0): 1})

    @staticmethod
    def basis(a: int, b: int, n: int):
        """The basis class sigma_{a,b}; zero if it falls outside the box."""
        return SchubertVector(n, {(a, b): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self):
        return {a + b for a, b in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def _check_ambient(self, other):
        if self.n != other.n:
            raise ValueError("mismatched ambient Grassmannians G(2,%d) vs G(2,%d)" % (self.n, other.n))

    def __add__(self, other):
        if not isinstance(other, SchubertVector):
            return NotImplemented
        self._check_ambient(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return SchubertVector(self.n, terms)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, c):
        if not isinstance(c, int):
            return NotImplemented
        return SchubertVector(self.n, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, SchubertVector):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items()))))

    def pieri(self, c: int):
        """Multiply by the special class sigma_c (horizontal-strip rule)."""
        if c < 0:
            raise ValueError("pieri requires c >= 0")
        box = self.n - 2
        out = {}
        for (a, b), coeff in self.terms.items():
            for j in range(c + 1):
                na, nb = a + c - j, b + j
                if nb <= a and na <= box:
                    out[(na, nb)] = out.get((na, nb), 0) + coeff
        return SchubertVector(self.n, out)

    def __mul__(self, other):
        if not isinstance(other, SchubertVector):
            return NotImplemented
        self._check_ambient(other)
        result = SchubertVector(self.n)
        for (a, b), coeff in self.terms.items():
            part = other.pieri(a).pieri(b)
            if b >= 1:
                part = part - other.pieri(a + 1).pieri(b - 1)
            result = result + coeff * part
        return result

    def __pow__(self, g: int):
        if g < 0:
            raise ValueError("negative power of a cohomology class")
        result = SchubertVector.unit(self.n)
        base = self
        while g:
            if g & 1:
                result = result * base
            base = base * base
            g >>= 1
        return result

    def top_eval(self) -> int:
        """Coefficient of the point class sigma_{n-2,n-2}; input must be
        homogeneous of top degree (or zero)."""
        if self.is_zero():
            return 0
        top = 2 * (self.n - 2)
        if self.degrees() != {top}:
            raise ValueError("top_eval on a class not of top degree %d" % top)
        return self.terms.get((self.n - 2, self.n - 2), 0)

    def __repr__(self):
        if self.is_zero():
            return "SchubertVector(0; n=%d)" % self.n
        body = " + ".join(
            "%d*s[%d,%d]" % (c, a, b) for (a, b), c in sorted(self.terms.items())
        )
        return "SchubertVector(%s; n=%d)" % (body, self.n)


def pieri_special(v: SchubertVector, c: int) -> SchubertVector:
    return v.pieri(c)


def giambelli(a: int, b: int, n: int) -> SchubertVector:
    """sigma_{a,b} built from special classes: sigma_a sigma_b - sigma_{a+1} sigma_{b-1}."""
    if not (a >= b >= 0):
        raise ValueError("giambelli requires a >= b >= 0")
    if a > n - 2:
        raise ValueError("sigma_{%d,%d} outside the box of G(2,%d)" % (a, b, n))
    unit = SchubertVector.unit(n)
    result = unit.pieri(a).pieri(b)
    if b >= 1:
        result = result - unit.pieri(a + 1).pieri(b - 1)
    return result


def top_eval(v: SchubertVector) -> int:
    return v.top_eval()


def grassmannian_degree(n: int) -> int:
    """Degree of G(2,n) in the Pluecker embedding: sigma_1^(2(n-2)) evaluated on the point class."""
    if n < 2:
        raise ValueError("needs n >= 2")
    v = SchubertVector.unit(n)
    for _ in range(2 * (n - 2)):
        v = v.pieri(1)
    return v.top_eval()


def sigma12_power(g: int, m: int) -> int:
    """Top intersection sigma_1^(2m) sigma_2^(2g-m) in G(2,2g+2), 0 <= m <= 2g."""
    if not 0 <= m <= 2 * g:
        raise ValueError("need 0 <= m <= 2g")
    v = SchubertVector.unit(2 * g + 2)
    for _ in range(2 * m):
        v = v.pieri(1)
    for _ in range(2 * g - m):
        v = v.pieri(2)
    return v.top_eval()


def catalan_alternating_sum(g: int, m: int) -> int:
    """Alternating binomial-Catalan sum equal to sigma12_power(g, m)."""
    if not 0 <= m <= 2 * g:
        raise ValueError("need 0 <= m <= 2g")
    return sum(
        (-1) ** i * binom_int(2 * g - m, i) * catalan(2 * g - i)
        for i in range(2 * g - m + 1)
    )


def alt_catalan_schubert(g: int, n4: int = 16, n5: int = 16) -> int:
    """Top evaluation of (n4*sigma_{4,0} + n5*sigma_{3,1})^g in G(2,2g+2)."""
    if g < 0:
        raise ValueError("g must be nonnegative")
    n = 2 * g + 2
    v = n4 * SchubertVector.basis(4, 0, n) + n5 * SchubertVector.basis(3, 1, n)
    return (v ** g).top_eval()
