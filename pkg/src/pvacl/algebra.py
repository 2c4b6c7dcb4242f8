"""Differential polynomial algebra V and the quotient spaces V_n.

A monomial of V is a sorted tuple of variables ``(name, order)`` where the
variable ``(u, m)`` stands for the m-th derivative of the generator ``u``.
Repeated variables encode powers, so ``u**2 * u'`` is
``(('u', 0), ('u', 0), ('u', 1))``.  The empty tuple is the unit.

Polynomials in the indeterminates lambda_1..lambda_n with coefficients in V
are stored by :class:`LambdaPoly` as a map ``(exponents, monomial) -> coeff``.
The class represents the free ring V[lambda_1..lambda_n]; :func:`normalize`
produces the canonical representative of the class of an element in
V_n = V[lambda_1..lambda_n] / <d + lambda_1 + ... + lambda_n>, which is the
unique representative free of lambda_n.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb
from operator import add

Monomial = tuple  # tuple[tuple[str, int], ...]
ONE: Monomial = ()


def _frac(c):
    """Exact coefficient: an int when integral, else a Fraction."""
    if type(c) is int:
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _acc(d: dict, key, c) -> None:
    """Accumulate ``c`` into ``d[key]``, dropping zero entries."""
    s = d.get(key, 0) + c
    if s:
        if type(s) is Fraction and s.denominator == 1:
            s = s.numerator
        d[key] = s
    else:
        d.pop(key, None)


# ---------------------------------------------------------------------------
# monomials


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b))


def mono_var(name: str, order: int = 0) -> Monomial:
    return ((name, order),)


def mono_degree(a: Monomial) -> int:
    return len(a)


@lru_cache(maxsize=None)
def mono_derive(a: Monomial) -> tuple:
    """Derivative of a monomial as a tuple of ``(monomial, int coeff)``."""
    out: dict = {}
    for i, (g, m) in enumerate(a):
        if i and a[i - 1] == (g, m):
            continue  # handled with multiplicity below
        mult = a.count((g, m))
        rest = list(a)
        rest.remove((g, m))
        rest.append((g, m + 1))
        _acc(out, tuple(sorted(rest)), mult)
    return tuple(out.items())


@lru_cache(maxsize=None)
def mono_derive_k(a: Monomial, k: int) -> tuple:
    """k-th derivative of a monomial as a tuple of ``(monomial, int coeff)``."""
    if k == 0:
        return ((a, 1),)
    prev = mono_derive_k(a, k - 1)
    out: dict = {}
    for m, c in prev:
        for m2, c2 in mono_derive(m):
            _acc(out, m2, c * c2)
    return tuple(out.items())


def _var_str(g: str, m: int) -> str:
    if m <= 3:
        return g + "'" * m
    return f"{g}[{m}]"


def mono_str(a: Monomial) -> str:
    if not a:
        return "1"
    parts = []
    i = 0
    while i < len(a):
        j = i
        while j < len(a) and a[j] == a[i]:
            j += 1
        s = _var_str(*a[i])
        if j - i > 1:
            s += f"^{j - i}"
        parts.append(s)
        i = j
    return "*".join(parts)


def mono_sort_key(a: Monomial):
    return (len(a), a)


def _coeff_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _join_terms(pieces: list) -> str:
    """Join ``(coeff, body)`` pairs into a signed sum; body '' means scalar."""
    if not pieces:
        return "0"
    out = []
    for idx, (c, body) in enumerate(pieces):
        neg = c < 0
        a = -c if neg else c
        if body == "":
            txt = _coeff_str(a)
        elif a == 1:
            txt = body
        else:
            txt = f"{_coeff_str(a)}*{body}"
        if idx == 0:
            out.append(("-" if neg else "") + txt)
        else:
            out.append((" - " if neg else " + ") + txt)
    return "".join(out)


# ---------------------------------------------------------------------------
# DiffPoly


class DiffPoly:
    """Element of the differential polynomial algebra V over the rationals."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for m, c in dict(terms).items():
                if c:
                    t[tuple(m)] = _frac(c)
        self._terms = t
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "DiffPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def var(cls, name: str, order: int = 0) -> "DiffPoly":
        return cls._raw({mono_var(name, order): 1})

    @classmethod
    def const(cls, c) -> "DiffPoly":
        return cls._raw({ONE: _frac(c)} if c else {})

    @classmethod
    def monomial(cls, mono: Monomial, c=1) -> "DiffPoly":
        return cls._raw({tuple(mono): _frac(c)} if c else {})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other):
        other = _as_diffpoly(other)
        t = dict(self._terms)
        for m, c in other._terms.items():
            _acc(t, m, c)
        return DiffPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return DiffPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_as_diffpoly(other))

    def __rsub__(self, other):
        return _as_diffpoly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return DiffPoly()
            return DiffPoly._raw({m: _frac(c * other) for m, c in self._terms.items()})
        if not isinstance(other, DiffPoly):
            return NotImplemented
        t: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                _acc(t, mono_mul(m1, m2), c1 * c2)
        return DiffPoly._raw(t)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = DiffPoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = DiffPoly.const(other)
        if not isinstance(other, DiffPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def derive(self, k: int = 1) -> "DiffPoly":
        return derive(self, k)

    def degree(self) -> int:
        return max((len(m) for m in self._terms), default=-1)

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda mc: mono_sort_key(mc[0]))

    def __str__(self):
        pieces = [(c, "" if not m else mono_str(m)) for m, c in self.sorted_terms()]
        return _join_terms(pieces)

    def __repr__(self):
        return f"DiffPoly({self})"


def _as_diffpoly(x) -> DiffPoly:
    if isinstance(x, DiffPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return DiffPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a differential polynomial")


def derive(p: DiffPoly, k: int = 1) -> DiffPoly:
    """The derivation d applied ``k`` times; ``d u^(m) = u^(m+1)``."""
    t: dict = {}
    for m, c in p._terms.items():
        for m2, c2 in mono_derive_k(m, k):
            _acc(t, m2, c * c2)
    return DiffPoly._raw(t)


def monomials_up_to(generators, max_degree: int, max_order: int) -> list:
    """All monomials in the given generators of degree <= max_degree and
    derivative order <= max_order, in canonical order."""
    vars_ = sorted((g, m) for g in generators for m in range(max_order + 1))
    out = [ONE]
    frontier = [ONE]
    for _ in range(max_degree):
        nxt = []
        for mono in frontier:
            start = vars_.index(mono[-1]) if mono else 0
            for v in vars_[start:]:
                nxt.append(mono + (v,))
        out.extend(nxt)
        frontier = nxt
    return sorted(out, key=mono_sort_key)


# ---------------------------------------------------------------------------
# polynomials in lambda with V coefficients


@lru_cache(maxsize=None)
def _multinomial_expansion(nvars: int, e: int) -> tuple:
    """(x_1+...+x_nvars)^e as a tuple of ``(exponent tuple, coeff)``."""
    if nvars == 0:
        return (((), 1),) if e == 0 else ()
    out = []
    for head in range(e, -1, -1):
        for rest, c in _multinomial_expansion(nvars - 1, e - head):
            out.append(((head,) + rest, c * comb(e, head)))
    return tuple(out)


def _add_exp(a: tuple, b: tuple) -> tuple:
    return tuple(map(add, a, b))


class LambdaPoly:
    """Polynomial in lambda_1..lambda_nvars with coefficients in V.

    Terms are keyed by ``(exponent tuple, monomial)``.  Arithmetic is in the
    free polynomial ring; use :func:`normalize` to pass to V_n.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        t = {}
        if terms:
            for (e, m), c in dict(terms).items():
                e = tuple(e)
                if len(e) != nvars:
                    raise ValueError("exponent length does not match the number of variables")
                if c:
                    t[(e, tuple(m))] = _frac(c)
        self._terms = t
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "LambdaPoly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "LambdaPoly":
        return cls._raw(nvars, {})

    @classmethod
    def from_diffpoly(cls, p: DiffPoly, nvars: int) -> "LambdaPoly":
        z = (0,) * nvars
        return cls._raw(nvars, {(z, m): c for m, c in p._terms.items()})

    @classmethod
    def lam(cls, i: int, nvars: int) -> "LambdaPoly":
        """The indeterminate lambda_i (1-based)."""
        e = [0] * nvars
        e[i - 1] = 1
        return cls._raw(nvars, {(tuple(e), ONE): 1})

    @classmethod
    def scalar(cls, c, nvars: int) -> "LambdaPoly":
        return cls._raw(nvars, {((0,) * nvars, ONE): _frac(c)} if c else {})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def _check(self, other: "LambdaPoly"):
        if other.nvars != self.nvars:
            raise ValueError("lambda polynomials with different numbers of variables")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, DiffPoly)):
            other = _lift(other, self.nvars)
        self._check(other)
        t = dict(self._terms)
        for k, c in other._terms.items():
            _acc(t, k, c)
        return LambdaPoly._raw(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return LambdaPoly._raw(self.nvars, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, DiffPoly)):
            other = _lift(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return _lift(other, self.nvars) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LambdaPoly.zero(self.nvars)
            return LambdaPoly._raw(self.nvars, {k: _frac(c * other) for k, c in self._terms.items()})
        if isinstance(other, DiffPoly):
            other = LambdaPoly.from_diffpoly(other, self.nvars)
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        self._check(other)
        t: dict = {}
        for (e1, m1), c1 in self._terms.items():
            for (e2, m2), c2 in other._terms.items():
                _acc(t, (_add_exp(e1, e2), mono_mul(m1, m2)), c1 * c2)
        return LambdaPoly._raw(self.nvars, t)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = LambdaPoly.scalar(1, self.nvars)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, DiffPoly)):
            other = _lift(other, self.nvars)
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def derive_coeffs(self, k: int = 1) -> "LambdaPoly":
        """Apply d to the V-coefficients (lambda's are constants for d)."""
        t: dict = {}
        for (e, m), c in self._terms.items():
            for m2, c2 in mono_derive_k(m, k):
                _acc(t, (e, m2), c * c2)
        return LambdaPoly._raw(self.nvars, t)

    def lambda_degree(self) -> int:
        return max((sum(e) for e, _ in self._terms), default=-1)

    def coefficient(self, exps) -> DiffPoly:
        exps = tuple(exps)
        return DiffPoly._raw({m: c for (e, m), c in self._terms.items() if e == exps})

    def is_lambda_free(self) -> bool:
        return all(not any(e) for e, _ in self._terms)

    def to_diffpoly(self) -> DiffPoly:
        """The V-element of a lambda-free polynomial."""
        if not self.is_lambda_free():
            raise ValueError("polynomial still depends on the lambda variables")
        return DiffPoly._raw({m: c for (_, m), c in self._terms.items()})

    def substitute(self, images, nvars: int) -> "LambdaPoly":
        """Substitute lambda_i -> images[i], a linear form given as a tuple of
        ``nvars`` rational coefficients in the new variables."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        t: dict = {}
        get = t.get
        pow_cache: dict = {}
        exp_cache: dict = {}
        for (e, m), c in self._terms.items():
            partial = exp_cache.get(e)
            if partial is None:
                partial = {(0,) * nvars: 1}
                for i, k in enumerate(e):
                    if not k:
                        continue
                    key = (i, k)
                    if key not in pow_cache:
                        pow_cache[key] = _linear_power(images[i], k, nvars)
                    nxt: dict = {}
                    for e1, c1 in partial.items():
                        for e2, c2 in pow_cache[key].items():
                            _acc(nxt, _add_exp(e1, e2), c1 * c2)
                    partial = nxt
                exp_cache[e] = partial
            for e1, c1 in partial.items():
                key = (e1, m)
                t[key] = get(key, 0) + c * c1
        t = {key: _demote(v) for key, v in t.items() if v}
        return LambdaPoly._raw(nvars, t)

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(),
                      key=lambda kc: (tuple(-x for x in kc[0][0]), mono_sort_key(kc[0][1])))

    def __str__(self):
        if not self._terms:
            return "0"
        groups: dict = {}
        for (e, m), c in self._terms.items():
            groups.setdefault(e, {})[m] = c
        pieces = []
        for e in sorted(groups, key=lambda e: (-sum(e), tuple(-x for x in e))):
            lam = _lam_str(e, self.nvars)
            coeff = DiffPoly._raw(groups[e])
            if not lam:
                pieces.append(str(coeff))
            elif len(coeff._terms) == 1 and ONE in coeff._terms:
                c = coeff._terms[ONE]
                pieces.append(lam if c == 1 else ("-" + lam if c == -1 else f"{_coeff_str(c)}*{lam}"))
            else:
                pieces.append(f"({coeff})*{lam}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self):
        return f"LambdaPoly[{self.nvars}]({self})"


def _lam_str(e: tuple, nvars: int) -> str:
    parts = []
    for i, k in enumerate(e):
        if not k:
            continue
        name = "λ" if nvars == 1 else f"λ{i + 1}"
        parts.append(name if k == 1 else f"{name}^{k}")
    return "*".join(parts)


def _lift(x, nvars: int) -> LambdaPoly:
    if isinstance(x, LambdaPoly):
        return x
    if isinstance(x, DiffPoly):
        return LambdaPoly.from_diffpoly(x, nvars)
    return LambdaPoly.scalar(x, nvars)


def _linear_power(form, k: int, nvars: int) -> dict:
    """(sum_j form[j] * lambda_j)^k as a dict exponent -> coeff."""
    support = [j for j, a in enumerate(form) if a]
    out: dict = {}
    for sub, c in _multinomial_expansion(len(support), k):
        e = [0] * nvars
        coeff = c
        for j, s in zip(support, sub):
            e[j] = s
            if s:
                coeff *= form[j] ** s
        _acc(out, tuple(e), coeff)
    return out


# ---------------------------------------------------------------------------
# the quotient V_n


@lru_cache(maxsize=None)
def _normal_table(n: int, k: int) -> tuple:
    """Expansion of lambda_n^k in V_n as ``(j, exponents, coeff)``: the term
    coeff * lambda^exponents * d^j, exponents over lambda_1..lambda_{n-1}."""
    # lambda_n^k w = (-1)^k sum_j C(k,j) L'^(k-j) d^j w, L' = lambda_1+..+lambda_{n-1}
    sgn = -1 if k % 2 else 1
    return tuple((j, e2, sgn * comb(k, j) * c2)
                 for j in range(k + 1) for e2, c2 in _multinomial_expansion(n - 1, k - j))


def _demote(c):
    return c.numerator if type(c) is Fraction and c.denominator == 1 else c


def normalize(raw: LambdaPoly, n: int | None = None) -> LambdaPoly:
    """Canonical representative of ``raw`` in V_n, free of lambda_n.

    Uses lambda_n = -lambda_1 - ... - lambda_{n-1} - d, where d acts on the
    V-coefficient.  For n = 1 this is lambda_1 = -d.  Powers of lambda_n are
    eliminated by Horner's rule so that like terms merge at every step.
    """
    if n is None:
        n = raw.nvars
    if n != raw.nvars:
        raise ValueError(f"expected a polynomial in {n} variables, got {raw.nvars}")
    if n == 0:
        raise ValueError("V_0 is not represented")
    by_power: dict = {}
    for (e, m), c in raw._terms.items():
        by_power.setdefault(e[-1], []).append(((e[:-1], m), c))
    if not by_power:
        return LambdaPoly._raw(n, {})
    units = [tuple(1 if i == j else 0 for i in range(n - 1)) for j in range(n - 1)]
    res: dict = {}
    for k in range(max(by_power), -1, -1):
        if res:
            # res <- (-lambda_1 - ... - lambda_{n-1} - d) res
            nxt: dict = {}
            get = nxt.get
            for (head, m), c in res.items():
                for u in units:
                    key = (tuple(map(add, head, u)), m)
                    nxt[key] = get(key, 0) - c
                for m2, c2 in mono_derive(m):
                    key = (head, m2)
                    nxt[key] = get(key, 0) - c * c2
            res = nxt
        get = res.get
        for key, c in by_power.get(k, ()):
            res[key] = get(key, 0) + c
        res = {key: v for key, v in res.items() if v}
    t = {(head + (0,), m): _demote(v) for (head, m), v in res.items()}
    return LambdaPoly._raw(n, t)


def normalize_by_expansion(raw: LambdaPoly, n: int | None = None) -> LambdaPoly:
    """Reference for :func:`normalize`: expands every power of lambda_n
    binomially instead of by Horner's rule."""
    if n is None:
        n = raw.nvars
    if n != raw.nvars:
        raise ValueError(f"expected a polynomial in {n} variables, got {raw.nvars}")
    if n == 0:
        raise ValueError("V_0 is not represented")
    t: dict = {}
    get = t.get
    for (e, m), c in raw._terms.items():
        k = e[-1]
        if k == 0:
            key = (e, m)
            t[key] = get(key, 0) + c
            continue
        head = e[:-1]
        for j, e2, cj in _normal_table(n, k):
            ders = mono_derive_k(m, j)
            if not ders:
                continue
            new_e = tuple(map(add, head, e2)) + (0,)
            cc = c * cj
            for m3, c3 in ders:
                key = (new_e, m3)
                t[key] = get(key, 0) + cc * c3
    t = {key: _demote(v) for key, v in t.items() if v}
    return LambdaPoly._raw(n, t)


def is_normal(p: LambdaPoly) -> bool:
    return all(e[-1] == 0 for e, _ in p._terms) if p.nvars else True


def total_derivative_class(p: LambdaPoly) -> LambdaPoly:
    """The class of d(p) in V_n, i.e. -(lambda_1+...+lambda_n) p."""
    return normalize(p.derive_coeffs())


# ---------------------------------------------------------------------------
# the substitution pairing


def _scalar_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            _acc(out, _add_exp(e1, e2), c1 * c2)
    return out


def apply_shifted_derivative(mono: Monomial, shift, power: int, nvars: int) -> list:
    """Expand (L + d)^power acting on a monomial, L = sum shift[j] lambda_j.

    Returns a list of ``(scalar exponent dict, monomial, coeff)`` triples
    flattened to ``((exponent, monomial), coeff)`` pairs.
    """
    out: dict = {}
    for t in range(power + 1):
        lam = _linear_power(shift, power - t, nvars)
        binom = comb(power, t)
        for m2, c2 in mono_derive_k(mono, t):
            for e, c in lam.items():
                _acc(out, (e, m2), binom * c2 * c)
    return list(out.items())


def pair_substitute(factors, shifts, nvars: int) -> dict:
    """Resolve auxiliary variables x_1..x_r in a tensor of r factors.

    ``factors[i]`` maps ``(lambda exponents, x exponents, monomial)`` to a
    coefficient; it is the i-th tensor factor written as a polynomial in the
    global lambda's and the auxiliary x's with V-coefficients.  ``shifts[j]``
    is the linear form Lambda_j (a tuple of ``nvars`` coefficients).  Every
    power x_j^p, wherever it occurs, becomes (Lambda_j + d)^p acting on the
    V-coefficient of factor j.

    Returns a dict mapping a tuple of r monomials (the tensor factors) to a
    scalar polynomial ``{lambda exponents: coeff}``.
    """
    r = len(factors)
    if len(shifts) != r:
        raise ValueError("one shift per tensor factor is required")
    for f in factors:
        for _, x, _ in f:
            if len(x) != r:
                raise ValueError("unbound auxiliary variable")
    # group the product by (monomials, total x exponent)
    grouped: dict = {}
    zero_lam = (0,) * nvars
    partial = {((), (0,) * r): {zero_lam: 1}}
    for f in factors:
        nxt: dict = {}
        for (monos, xs), scal in partial.items():
            for (lam, x, mono), c in f.items():
                key = (monos + (mono,), _add_exp(xs, x))
                bucket = nxt.setdefault(key, {})
                for e, c0 in scal.items():
                    _acc(bucket, _add_exp(e, lam), c0 * c)
        partial = nxt
    grouped = partial
    out: dict = {}
    for (monos, xs), scal in grouped.items():
        if not scal:
            continue
        expanded = [apply_shifted_derivative(monos[j], shifts[j], xs[j], nvars) for j in range(r)]
        for combo in product(*expanded):
            lam = zero_lam
            coeff = 1
            ms = []
            for (e, m), c in combo:
                lam = _add_exp(lam, e)
                coeff *= c
                ms.append(m)
            key = tuple(ms)
            bucket = out.setdefault(key, {})
            for e, c0 in scal.items():
                _acc(bucket, _add_exp(e, lam), c0 * coeff)
    return {k: v for k, v in out.items() if v}


def scalar_times(scal: dict, p: LambdaPoly) -> LambdaPoly:
    """Multiply a LambdaPoly by a scalar polynomial ``{exponents: coeff}``."""
    t: dict = {}
    for e1, c1 in scal.items():
        for (e2, m), c2 in p._terms.items():
            _acc(t, (_add_exp(e1, e2), m), c1 * c2)
    return LambdaPoly._raw(p.nvars, t)


def expand_tensor(vs) -> list:
    """Expand a tuple of DiffPolys into ``(monomial tuple, coeff)`` pairs."""
    out = [((), 1)]
    for v in vs:
        v = _as_diffpoly(v)
        out = [(ms + (m,), c * c2) for ms, c in out for m, c2 in v._terms.items()]
    return out
