"""Exact arithmetic in finite fields built as towers of extensions.

A field is either the prime field F_p or an extension of a previously
built field by a monic irreducible modulus.  Every element is an integer
code in [0, order): writing an extension element as
c_0 + c_1*a + ... + c_{k-1}*a^(k-1) with coefficients in the field below
(a is a root of the modulus), its code is the mixed-radix integer
sum(code(c_i) * q_below**i).  Code 0 is always the additive identity and
code 1 the multiplicative identity, in every field of the tower.

When no modulus is supplied, each extension step uses the smallest monic
irreducible polynomial of the requested degree, where candidates are
compared coefficient-wise from the highest degree down, by element code.
This makes field construction fully deterministic across runs.
"""

from __future__ import annotations

import itertools

# Extension fields up to this order precompute full operation tables.
_TABLE_LIMIT = 64


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk-scale inputs)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Poly:
    """Polynomial over a finite field.

    Coefficients are element codes, lowest degree first, with no trailing
    zeros (the zero polynomial has an empty coefficient tuple and degree -1).
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "FiniteField", coeffs) -> None:
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int) or not 0 <= c < field.order:
                raise ValueError(f"coefficient {c!r} is not a code in [0, {field.order})")
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def evaluate(self, code: int) -> int:
        """Evaluate at a field element given by its code (Horner)."""
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, code), c)
        return acc

    def is_irreducible(self) -> bool:
        """Trial division by every monic polynomial of degree <= deg/2."""
        if self.degree < 1:
            return False
        F = self.field
        for d in range(1, self.degree // 2 + 1):
            for tail in itertools.product(range(F.order), repeat=d):
                divisor = list(reversed(tail)) + [1]
                if not _poly_mod(F, list(self.coeffs), divisor):
                    return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                x = "x" if i == 1 else f"x^{i}"
                terms.append(x if c == 1 else f"{c}*{x}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Poly({self} over {self.field!r})"


def _poly_mod(field: "FiniteField", a: list, b: list) -> list:
    """Remainder of a modulo b; coefficient lists of codes, b monic."""
    r = list(a)
    db = len(b) - 1
    while len(r) - 1 >= db:
        c = r[-1]
        if c:
            shift = len(r) - 1 - db
            for j in range(db):
                r[shift + j] = field.sub(r[shift + j], field.mul(c, b[j]))
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return r


class FiniteField:
    """A finite field, possibly an extension of another FiniteField.

    Instances are immutable after construction and safe to share.  All
    arithmetic operates on integer element codes.  Two fields compare
    equal when they have the same characteristic and the same tower of
    (degree, modulus) steps, so structurally identical fields built in
    different runs are interchangeable.
    """

    __slots__ = (
        "characteristic", "base", "modulus", "extension_degree",
        "total_degree", "order", "tower", "_add_t", "_mul_t", "_neg_t", "_inv_t",
    )

    def __init__(self, p: int, *, _base: "FiniteField | None" = None,
                 _modulus: "Poly | None" = None) -> None:
        if _base is None:
            if not is_prime(p):
                raise ValueError(f"characteristic {p} is not prime")
            self.characteristic = p
            self.base = None
            self.modulus = None
            self.extension_degree = None
            self.total_degree = 1
            self.order = p
            self.tower = ()
        else:
            k = _modulus.degree
            self.characteristic = _base.characteristic
            self.base = _base
            self.modulus = _modulus
            self.extension_degree = k
            self.total_degree = _base.total_degree * k
            self.order = _base.order ** k
            self.tower = _base.tower + ((k, _modulus.coeffs),)
        self._add_t = self._mul_t = self._neg_t = self._inv_t = None
        if self.base is not None and self.order <= _TABLE_LIMIT:
            self._build_tables()

    # -- construction -------------------------------------------------

    def extension(self, degree: int, modulus=None) -> "FiniteField":
        """Extend this field by a monic irreducible modulus of the given degree.

        With modulus=None the deterministic default modulus is used.  A
        supplied modulus may be a Poly over this field or a list of
        coefficient codes, constant term first.
        """
        if degree < 1:
            raise ValueError(f"extension degree must be >= 1, got {degree}")
        if modulus is None:
            modulus = self.default_modulus(degree)
        elif not isinstance(modulus, Poly):
            modulus = Poly(self, modulus)
        if modulus.field != self:
            raise ValueError("modulus is not a polynomial over this field")
        if modulus.degree != degree:
            raise ValueError(
                f"modulus degree {modulus.degree} does not match requested degree {degree}")
        if not modulus.is_monic:
            raise ValueError(f"modulus {modulus} is not monic")
        if not modulus.is_irreducible():
            raise ValueError(f"modulus {modulus} is reducible")
        return FiniteField(self.characteristic, _base=self, _modulus=modulus)

    def default_modulus(self, degree: int) -> Poly:
        """Smallest monic irreducible of the degree, high-degree-first order."""
        for tail in itertools.product(range(self.order), repeat=degree):
            poly = Poly(self, list(reversed(tail)) + [1])
            if poly.is_irreducible():
                return poly
        raise RuntimeError(f"no irreducible polynomial of degree {degree} found")

    # -- element codes ------------------------------------------------

    def element(self, code: int) -> "FieldElement":
        return FieldElement(self, code)

    def elements(self) -> range:
        return range(self.order)

    def _digits(self, code: int) -> list:
        q = self.base.order
        out = []
        for _ in range(self.extension_degree):
            out.append(code % q)
            code //= q
        return out

    def _encode(self, digits) -> int:
        q = self.base.order
        code = 0
        for d in reversed(digits):
            code = code * q + d
        return code

    # -- arithmetic on codes -------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.base is None:
            return (a + b) % self.characteristic
        if self._add_t is not None:
            return self._add_t[a * self.order + b]
        B = self.base
        return self._encode([B.add(x, y) for x, y in zip(self._digits(a), self._digits(b))])

    def neg(self, a: int) -> int:
        if self.base is None:
            return -a % self.characteristic
        if self._neg_t is not None:
            return self._neg_t[a]
        B = self.base
        return self._encode([B.neg(x) for x in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.base is None:
            return (a * b) % self.characteristic
        if self._mul_t is not None:
            return self._mul_t[a * self.order + b]
        return self._mul_generic(a, b)

    def _mul_generic(self, a: int, b: int) -> int:
        B = self.base
        k = self.extension_degree
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    if y:
                        prod[i + j] = B.add(prod[i + j], B.mul(x, y))
        mod = self.modulus.coeffs
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(k):
                    prod[i - k + j] = B.sub(prod[i - k + j], B.mul(c, mod[j]))
        return self._encode(prod[:k])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative inverse")
        if self.base is None:
            return pow(a, self.characteristic - 2, self.characteristic)
        if self._inv_t is not None:
            return self._inv_t[a]
        return self.pow(a, self.order - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def _build_tables(self) -> None:
        q = self.order
        self._neg_t = [self._encode([self.base.neg(x) for x in self._digits(a)])
                       for a in range(q)]
        add_t = [0] * (q * q)
        mul_t = [0] * (q * q)
        for a in range(q):
            da = self._digits(a)
            for b in range(a, q):
                s = self._encode([self.base.add(x, y) for x, y in zip(da, self._digits(b))])
                add_t[a * q + b] = add_t[b * q + a] = s
                m = self._mul_generic(a, b)
                mul_t[a * q + b] = mul_t[b * q + a] = m
        self._add_t = add_t
        self._mul_t = mul_t
        inv_t = [0] * q
        for a in range(1, q):
            inv_t[a] = self.pow(a, q - 2)
        self._inv_t = inv_t

    # -- identity -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteField):
            return NotImplemented
        return self.characteristic == other.characteristic and self.tower == other.tower

    def __hash__(self) -> int:
        return hash((self.characteristic, self.tower))

    def __repr__(self) -> str:
        if self.base is None:
            return f"GF({self.order})"
        return f"GF({self.order})=GF({self.base.order})[x]/({self.modulus})"


class FieldElement:
    """An element of a FiniteField: an integer code plus its owning field.

    Arithmetic between elements of different fields raises ValueError.
    """

    __slots__ = ("field", "code")

    def __init__(self, field: FiniteField, code: int) -> None:
        if not isinstance(code, int) or not 0 <= code < field.order:
            raise ValueError(f"code {code!r} is not in [0, {field.order})")
        self.field = field
        self.code = code

    def _check(self, other) -> "FieldElement":
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise ValueError("operands belong to different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.add(self.code, other.code))

    def __sub__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.sub(self.code, other.code))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.mul(self.code, other.code))

    def __truediv__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.mul(self.code, self.field.inv(other.code)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.code, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.code == other.code

    def __hash__(self) -> int:
        return hash((self.field, self.code))

    def __repr__(self) -> str:
        return f"FieldElement({self.code} in {self.field!r})"


def field_create(p: int, degrees, moduli=None) -> FiniteField:
    """Build a tower field F_p -> F_p^d1 -> ... for the given extension degrees.

    moduli, when given, must list one monic irreducible polynomial per step
    (Poly over the field below, or its coefficient codes constant term
    first).  Omitted moduli default to the deterministic smallest choice.
    """
    degrees = list(degrees)
    if moduli is not None and len(moduli) != len(degrees):
        raise ValueError(f"expected {len(degrees)} moduli, got {len(moduli)}")
    field = FiniteField(p)
    for i, d in enumerate(degrees):
        field = field.extension(d, None if moduli is None else moduli[i])
    return field


def _companion_of(f: Poly):
    """Companion matrix of a monic polynomial, without irreducibility checks."""
    from .linalg import MatrixGF

    F = f.field
    k = f.degree
    rows = []
    for i in range(k - 1):
        row = [0] * k
        row[i + 1] = 1
        rows.append(row)
    rows.append([F.neg(c) for c in f.coeffs[:-1]])
    return MatrixGF(F, rows)


def companion_matrix(f: Poly):
    """k x k companion matrix of a monic irreducible polynomial of degree k.

    Superdiagonal ones, last row the negated coefficients of f below the
    leading term.  The matrices sum(v_i * P**i) form a field with q**k
    elements inside the k x k matrices over f's field.
    """
    if f.degree < 1:
        raise ValueError("polynomial must have degree >= 1")
    if not f.is_monic:
        raise ValueError(f"{f} is not monic")
    if not f.is_irreducible():
        raise ValueError(f"{f} is reducible")
    return _companion_of(f)


def _embed_code(ext: FiniteField, P, code: int):
    """Matrix image sum(v_i * P**i) of an extension element given by code."""
    from .linalg import MatrixGF

    k = ext.extension_degree
    base = ext.base
    acc = MatrixGF.zeros(base, k, k)
    power = MatrixGF.identity(base, k)
    digits = ext._digits(code)
    for i, d in enumerate(digits):
        if d:
            acc = acc + power.scale(d)
        if i + 1 < len(digits):
            power = power @ P
    return acc


def embed_element(x: FieldElement, P):
    """Represent an extension-field element as a k x k matrix over the base.

    x must live in a degree-k extension whose modulus has companion matrix
    P over the base field.  The map is a ring isomorphism onto the matrix
    field generated by P: 0 goes to the zero matrix, 1 to the identity.
    """
    ext = x.field
    if ext.base is None:
        raise ValueError("element does not belong to an extension field")
    if P.field != ext.base or P != _companion_of(ext.modulus):
        raise ValueError("matrix is not the companion matrix of the extension modulus")
    return _embed_code(ext, P, x.code)
