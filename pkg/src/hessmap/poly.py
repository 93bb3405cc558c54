"""Sparse multivariate polynomials with exact coefficients.

A :class:`MultiPoly` maps exponent tuples to nonzero scalars.  Scalars are
ints, Fractions or :class:`~hessmap.exact.Cyc` values, always kept in the
normal form of :func:`~hessmap.exact.canonical`, so equal polynomials have
identical term dictionaries.  Terms are listed in descending graded
lexicographic order.  Variables are positional (index 0 is ``x1`` in text).
"""

from fractions import Fraction
from itertools import combinations_with_replacement
from operator import add as _add

from .errors import ArityMismatch, ParseError, ScalarMismatch
from .exact import Cyc, canonical, format_rational, scalar_from_json, scalar_to_json

__all__ = ["MultiPoly", "monomials", "parse", "grlex_key"]


def grlex_key(exp):
    return (sum(exp), exp)


def monomials(nvars, degree):
    """All exponent tuples of the given total degree, in descending grlex order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


def _kind_of(c):
    return c.order if isinstance(c, Cyc) else None


class MultiPoly:
    __slots__ = ("nvars", "_terms", "_kind", "_hash")

    def __init__(self, nvars, terms=None):
        if not isinstance(nvars, int) or nvars < 1:
            raise ValueError("nvars must be a positive integer")
        acc = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, dict) else terms
            for exp, c in items:
                exp = tuple(int(e) for e in exp)
                if len(exp) != nvars or any(e < 0 for e in exp):
                    raise ArityMismatch(f"bad exponent {exp} for {nvars} variables")
                acc[exp] = acc[exp] + c if exp in acc else c
        self.nvars = nvars
        self._terms = _clean(acc)
        self._kind = None
        self._hash = None
        self._check_kind()

    @classmethod
    def _raw(cls, nvars, terms):
        # trusted constructor: terms already canonical and nonzero
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._kind = None
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars):
        return cls.constant(nvars, 1)

    @classmethod
    def var(cls, nvars, i, power=1):
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = power
        return cls._raw(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exp, c=1):
        exp = tuple(exp)
        return cls(len(exp), {exp: c})

    @classmethod
    def variables(cls, nvars):
        return tuple(cls.var(nvars, i) for i in range(nvars))

    # -- structure ---------------------------------------------------------
    def terms(self):
        """``(exponent, coefficient)`` pairs in descending grlex order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def as_dict(self):
        return dict(self._terms)

    def __iter__(self):
        return iter(self.terms())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def scalar_kind(self):
        """``None`` for rational coefficients, else the cyclotomic order."""
        return self._check_kind()

    def _check_kind(self):
        if self._kind is None:
            kind = False
            for c in self._terms.values():
                k = _kind_of(c)
                if k is not None:
                    if kind not in (False, k):
                        raise ScalarMismatch("mixed cyclotomic orders in one polynomial")
                    kind = k
            self._kind = kind
        return self._kind or None

    def is_rational(self):
        return self.scalar_kind() is None

    def degree(self):
        """Total degree, or ``None`` for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self):
        return len({sum(e) for e in self._terms}) <= 1

    def is_monomial(self):
        return len(self._terms) == 1

    def coefficient(self, exp):
        return self._terms.get(tuple(exp), 0)

    def monomial_form(self):
        """``(coefficient, exponent)`` if ``self`` has exactly one term, else ``None``."""
        if len(self._terms) != 1:
            return None
        (exp, c), = self._terms.items()
        return c, exp

    def leading_term(self):
        exp = max(self._terms, key=grlex_key)
        return exp, self._terms[exp]

    def support(self):
        return sorted(self._terms, key=grlex_key, reverse=True)

    # -- arithmetic --------------------------------------------------------
    def _compatible(self, other):
        if not isinstance(other, MultiPoly):
            return False
        if other.nvars != self.nvars:
            raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")
        a, b = self.scalar_kind(), other.scalar_kind()
        if a is not None and b is not None and a != b:
            raise ScalarMismatch(f"Q(zeta_{a}) vs Q(zeta_{b}) coefficients")
        return True

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            self._compatible(other)
            return other
        if isinstance(other, (int, Fraction, Cyc)):
            return MultiPoly.constant(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc[e] + c if e in acc else c
        return MultiPoly._raw(self.nvars, _clean(acc))

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = canonical(c)
        if c == 0:
            return MultiPoly.zero(self.nvars)
        if self.scalar_kind() is not None and isinstance(c, Cyc) and c.order != self.scalar_kind():
            raise ScalarMismatch("scalar field mismatch in scale")
        return MultiPoly._raw(self.nvars, _clean({e: v * c for e, v in self._terms.items()}))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyc)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._compatible(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        acc = {}
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple(map(_add, e1, e2))
                v = c1 * c2
                if e in acc:
                    acc[e] += v
                else:
                    acc[e] = v
        return MultiPoly._raw(self.nvars, _clean(acc))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Cyc)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction, Cyc)):
            if c == 0:
                raise ZeroDivisionError("division of a polynomial by zero")
            return self.scale(1 / Fraction(c) if not isinstance(c, Cyc) else c.inverse())
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = MultiPoly.one(self.nvars)
        if k == 0:
            return result
        if len(self._terms) == 1:
            (e, c), = self._terms.items()
            return MultiPoly._raw(self.nvars, _clean({tuple(x * k for x in e): c ** k}))
        base = self
        while True:
            if k & 1:
                result = result * base
            k >>= 1
            if not k:
                return result
            base = base * base

    # -- calculus and substitution -----------------------------------------
    def diff(self, i):
        """Formal partial derivative with respect to variable ``i`` (0-based)."""
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range for {self.nvars} variables")
        out = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                ne = e[:i] + (k - 1,) + e[i + 1:]
                out[ne] = c * k
        return MultiPoly._raw(self.nvars, _clean(out))

    def substitute(self, images):
        """Replace variable ``i`` by the polynomial ``images[i]`` (all on the same ring)."""
        if len(images) != self.nvars:
            raise ArityMismatch(f"need {self.nvars} images, got {len(images)}")
        m = images[0].nvars
        if any(q.nvars != m for q in images):
            raise ArityMismatch("images live in different rings")
        powers = [[MultiPoly.one(m)] for _ in images]

        def power(i, k):
            cache = powers[i]
            while len(cache) <= k:
                cache.append(cache[-1] * images[i])
            return cache[k]

        result = MultiPoly.zero(m)
        acc = {}
        for e, c in self._terms.items():
            t = MultiPoly.constant(m, c)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            for te, tc in t._terms.items():
                acc[te] = acc[te] + tc if te in acc else tc
        result = MultiPoly._raw(m, _clean(acc))
        result._check_kind()
        return result

    def substitute_linear(self, A):
        """``p(A x)``: each ``x_i`` becomes ``sum_j A[i][j] x_j``."""
        n = self.nvars
        if len(A) != n or any(len(row) != n for row in A):
            raise ArityMismatch(f"substitution matrix must be {n}x{n}")
        images = []
        for row in A:
            terms = {}
            for j, a in enumerate(row):
                e = [0] * n
                e[j] = 1
                terms[tuple(e)] = a
            images.append(MultiPoly(n, terms))
        return self.substitute(images)

    def evaluate(self, point):
        if len(point) != self.nvars:
            raise ArityMismatch("point dimension mismatch")
        total = 0
        for e, c in self._terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x ** k
            total = total + v
        return canonical(total) if isinstance(total, (int, Fraction, Cyc)) else total

    # -- variable bookkeeping ----------------------------------------------
    def extend(self, nvars):
        """Embed into a ring with more variables (new ones appended at the end)."""
        if nvars < self.nvars:
            raise ArityMismatch("cannot shrink the variable count with extend")
        pad = (0,) * (nvars - self.nvars)
        return MultiPoly._raw(nvars, {e + pad: c for e, c in self._terms.items()})

    def collect(self, indices):
        """Group terms by their exponents in ``indices``.

        Returns a dict mapping the exponent sub-tuple (over ``indices``) to the
        coefficient polynomial in the remaining variables, in their original
        relative order.
        """
        indices = list(indices)
        rest = [i for i in range(self.nvars) if i not in set(indices)]
        if not rest:
            raise ArityMismatch("collect needs at least one remaining variable")
        groups = {}
        for e, c in self._terms.items():
            key = tuple(e[i] for i in indices)
            groups.setdefault(key, {})[tuple(e[i] for i in rest)] = c
        return {k: MultiPoly._raw(len(rest), v) for k, v in groups.items()}

    def coefficient_of_power(self, i, k):
        """Coefficient of ``x_i^k`` as a polynomial in the other variables."""
        return self.collect([i]).get((k,), MultiPoly.zero(self.nvars - 1))

    def map_coefficients(self, fn):
        return MultiPoly(self.nvars, {e: fn(c) for e, c in self._terms.items()})

    # -- comparison and I/O -------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction, Cyc)):
            c = canonical(other)
            if c == 0:
                return not self._terms
            return self._terms == {(0,) * self.nvars: c}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MultiPoly({format_poly(self)!r}, nvars={self.nvars})"

    def to_json(self):
        kind = self.scalar_kind()
        return {
            "nvars": self.nvars,
            "scalar": "rational" if kind is None else {"cyclotomic": kind},
            "terms": [{"exp": list(e), "coeff": scalar_to_json(c)} for e, c in self.terms()],
        }

    @classmethod
    def from_json(cls, obj):
        nvars = int(obj["nvars"])
        p = cls(nvars, [(t["exp"], scalar_from_json(t["coeff"])) for t in obj["terms"]])
        scalar = obj.get("scalar", "rational")
        if scalar != "rational":
            want = int(scalar["cyclotomic"])
            if p.scalar_kind() not in (None, want):
                raise ScalarMismatch("declared scalar field does not match coefficients")
        return p

    @classmethod
    def parse(cls, text, nvars=None):
        return parse(text, nvars)


def _clean(acc):
    out = {}
    for e, c in acc.items():
        c = canonical(c)
        if c != 0:
            out[e] = c
    return out


# ---------------------------------------------------------------------------
# text format

def _format_cyc(c):
    return f"(z{c.order}: {', '.join(format_rational(a) for a in c.coeffs)})"


def _format_monomial(exp):
    parts = []
    for i, k in enumerate(exp):
        if k == 1:
            parts.append(f"x{i + 1}")
        elif k > 1:
            parts.append(f"x{i + 1}^{k}")
    return "*".join(parts)


def format_poly(p):
    if p.is_zero():
        return "0"
    pieces = []
    for idx, (exp, c) in enumerate(p.terms()):
        mono = _format_monomial(exp)
        if isinstance(c, Cyc):
            sign, body = "+", _format_cyc(c) + ("*" + mono if mono else "")
        else:
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = format_rational(a)
            elif a == 1:
                body = mono
            else:
                body = f"{format_rational(a)}*{mono}"
        if idx == 0:
            pieces.append(("-" if sign == "-" else "") + body)
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ParseError(msg, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def uint(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an unsigned integer")
        return int(self.text[start:self.pos])

    def rational(self):
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        num = self.uint()
        if self.peek() == "/":
            self.pos += 1
            den = self.uint()
            if den == 0:
                self.error("zero denominator")
            return Fraction(sign * num, den)
        return Fraction(sign * num)

    def cyc(self):
        self.expect("(")
        self.expect("z")
        order = self.uint()
        if order < 1:
            self.error("cyclotomic order must be positive")
        self.expect(":")
        coeffs = [self.rational()]
        while self.peek() == ",":
            self.pos += 1
            coeffs.append(self.rational())
        self.expect(")")
        return Cyc(order, coeffs)

    def term(self, factors):
        # returns (coefficient, {var_index: exponent})
        ch = self.peek()
        coeff = Fraction(1)
        if ch == "(":
            coeff = self.cyc()
        elif ch.isdigit():
            coeff = self.rational()
        elif ch != "x":
            self.error("expected a term")
        if ch != "x":
            if self.peek() != "*":
                return coeff, factors
            self.pos += 1
        while True:
            self.expect("x")
            idx = self.uint()
            if idx < 1:
                self.error("variables are numbered from x1")
            k = 1
            if self.peek() == "^":
                self.pos += 1
                k = self.uint()
            factors[idx] = factors.get(idx, 0) + k
            if self.peek() != "*":
                return coeff, factors
            self.pos += 1

    def poly(self):
        raw = []
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        while True:
            c, f = self.term({})
            raw.append((sign, c, f))
            ch = self.peek()
            if ch in "+-" and ch:
                sign = -1 if ch == "-" else 1
                self.pos += 1
                continue
            if ch:
                self.error(f"unexpected character {ch!r}")
            return raw


def parse(text, nvars=None):
    """Parse the text grammar (``3/2*x1^2*x2 - x3``) into a :class:`MultiPoly`."""
    if not isinstance(text, str):
        raise ParseError("polynomial text must be a string")
    parser = _Parser(text)
    if not parser.peek():
        parser.error("empty polynomial")
    raw = parser.poly()
    top = max((max(f) for _, _, f in raw if f), default=0)
    if nvars is None:
        nvars = max(top, 1)
    elif top > nvars:
        raise ParseError(f"variable x{top} exceeds nvars={nvars}")
    terms = []
    for sign, c, f in raw:
        e = [0] * nvars
        for i, k in f.items():
            e[i - 1] += k
        terms.append((tuple(e), c * sign if isinstance(c, Cyc) else sign * c))
    return MultiPoly(nvars, terms)
