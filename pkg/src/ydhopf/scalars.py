"""Prime fields, finite abelian groups and their characters."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import prod

from .errors import EmptyOrderList, MismatchedGroup, NonPrimeModulus, NoSuchRoot

GroupElement = tuple[int, ...]


def is_prime(n: int) -> bool:
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


@dataclass(frozen=True)
class Field:
    """The prime field F_p. Elements are plain ints in [0, p)."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise NonPrimeModulus(f"modulus {self.p!r} is not prime")
        if self.p <= 10_000:
            for a in range(1, self.p):
                if a * pow(a, self.p - 2, self.p) % self.p != 1:
                    raise NonPrimeModulus(f"{a} has no inverse mod {self.p}")

    def __call__(self, value: int) -> Scalar:
        return Scalar(int(value) % self.p, self)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, self.p - 2, self.p)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a % self.p, e, self.p)

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        k, x = 1, a
        while x != 1:
            x = x * a % self.p
            k += 1
        return k


def field_init(p: int) -> Field:
    return Field(p)


@dataclass(frozen=True)
class Scalar:
    value: int
    field: Field

    def __post_init__(self):
        if not 0 <= self.value < self.field.p:
            raise ValueError(f"{self.value} is not a canonical residue mod {self.field.p}")

    def _coerce(self, other) -> int:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise MismatchedGroup("scalars from different fields")
            return other.value
        return int(other) % self.field.p

    def __add__(self, other):
        return Scalar(self.field.add(self.value, self._coerce(other)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field.sub(self.value, self._coerce(other)), self.field)

    def __rsub__(self, other):
        return Scalar(self.field.sub(self._coerce(other), self.value), self.field)

    def __neg__(self):
        return Scalar(self.field.neg(self.value), self.field)

    def __mul__(self, other):
        return Scalar(self.field.mul(self.value, self._coerce(other)), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field.mul(self.value, self.field.inv(self._coerce(other))), self.field)

    def __pow__(self, e: int):
        return Scalar(self.field.pow(self.value, e), self.field)

    def inverse(self) -> Scalar:
        return Scalar(self.field.inv(self.value), self.field)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.field.p})"


def primitive_root_of_unity(f: Field, n: int) -> Scalar:
    """Smallest element of F_p^x with multiplicative order exactly n."""
    if n < 1 or (f.p - 1) % n != 0:
        raise NoSuchRoot(f"no element of order {n} in F_{f.p}^x")
    for a in range(1, f.p):
        if f.order(a) == n:
            return f(a)
    raise NoSuchRoot(f"no element of order {n} in F_{f.p}^x")  # unreachable for prime p


@dataclass(frozen=True)
class Group:
    """Finite abelian group Z_{n_1} x ... x Z_{n_r}, written additively."""

    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(n) for n in self.orders)
        if not orders:
            raise EmptyOrderList("a group needs at least one cyclic factor")
        if any(n < 1 for n in orders):
            raise ValueError(f"cyclic orders must be >= 1, got {orders}")
        object.__setattr__(self, "orders", orders)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def size(self) -> int:
        return prod(self.orders)

    @property
    def identity(self) -> GroupElement:
        return (0,) * self.rank

    @cached_property
    def elements(self) -> tuple[GroupElement, ...]:
        return tuple(itertools.product(*(range(n) for n in self.orders)))

    @cached_property
    def generators(self) -> tuple[GroupElement, ...]:
        return tuple(tuple(int(i == j) % self.orders[j] for j in range(self.rank))
                     for i in range(self.rank))

    def element(self, g) -> GroupElement:
        g = tuple(int(x) for x in g)
        if len(g) != self.rank:
            raise MismatchedGroup(f"element {g} does not belong to a rank-{self.rank} group")
        return tuple(x % n for x, n in zip(g, self.orders))

    def contains(self, g) -> bool:
        return len(g) == self.rank and all(0 <= x < n for x, n in zip(g, self.orders))

    def add(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return tuple((a + b) % n for a, b, n in zip(g, h, self.orders))

    def neg(self, g: GroupElement) -> GroupElement:
        return tuple((-a) % n for a, n in zip(g, self.orders))

    def sub(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return self.add(g, self.neg(h))

    def sum(self, elems) -> GroupElement:
        out = self.identity
        for g in elems:
            out = self.add(out, g)
        return out


def group_build(orders) -> Group:
    return Group(tuple(orders))


@dataclass(frozen=True)
class Character:
    """A homomorphism G -> F_p^x given by its values on the cyclic generators."""

    group: Group
    field: Field
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) % self.field.p for v in self.images)
        if len(images) != self.group.rank:
            raise MismatchedGroup(
                f"character needs {self.group.rank} images, got {len(images)}")
        for v, n in zip(images, self.group.orders):
            if v == 0 or pow(v, n, self.field.p) != 1:
                raise NoSuchRoot(f"{v} is not an {n}-th root of unity in F_{self.field.p}")
        object.__setattr__(self, "images", images)

    def __call__(self, g) -> int:
        if not self.group.contains(tuple(g)):
            raise MismatchedGroup(f"{tuple(g)} is not an element of Z{self.group.orders}")
        out = 1
        for v, e in zip(self.images, g):
            out = out * pow(v, e, self.field.p) % self.field.p
        return out


def character_eval(chi: Character, g) -> Scalar:
    return chi.field(chi(g))
