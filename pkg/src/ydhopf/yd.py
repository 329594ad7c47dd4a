"""Yetter-Drinfeld modules over kG for finite abelian G, and linear maps between tensor words.

Over kG a comodule is a G-grading, so each object stores one degree per basis
vector plus one action matrix per cyclic generator of G. Tensor words are
tuples of objects; the empty tuple is the unit object. Basis indices of a
word are leftmost-major (the leftmost factor is the most significant digit).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import prod
from typing import Sequence, Union

import numpy as np
import scipy.sparse as sp

from .errors import (GradingActionClash, MismatchedContext, NonCommutingAction,
                     ShapeMismatch, WrongActionOrder)
from .linalg import inverse
from .report import Witness
from .scalars import Field, Group, GroupElement


def _matpow(a: np.ndarray, e: int, p: int) -> np.ndarray:
    out = np.eye(a.shape[0], dtype=np.int64)
    base = a % p
    while e:
        if e & 1:
            out = out @ base % p
        base = base @ base % p
        e >>= 1
    return out


class YDObject:
    """A finite-dimensional Yetter-Drinfeld module over kG."""

    def __init__(self, name: str, field: Field, group: Group, degrees, action=None,
                 validate: bool = True):
        self.name = str(name)
        self.field = field
        self.group = group
        self.degrees: tuple[GroupElement, ...] = tuple(group.element(d) for d in degrees)
        dim = len(self.degrees)
        if action is None:
            action = [np.eye(dim, dtype=np.int64) for _ in range(group.rank)]
        action = tuple(np.asarray(a, dtype=np.int64).reshape(dim, dim) % field.p
                       if dim else np.zeros((0, 0), dtype=np.int64) for a in action)
        if len(action) != group.rank:
            raise ShapeMismatch(f"need {group.rank} action matrices, got {len(action)}")
        for a in action:
            a.setflags(write=False)
        self.action = action
        if validate:
            self.validate()

    @property
    def dim(self) -> int:
        return len(self.degrees)

    def validate(self) -> None:
        p = self.field.p
        for j, a in enumerate(self.action):
            n = self.group.orders[j]
            if not np.array_equal(_matpow(a, n, p), np.eye(self.dim, dtype=np.int64)):
                raise WrongActionOrder(
                    f"action of generator {j} on '{self.name}' does not have order dividing {n}")
            rows, cols = np.nonzero(a)
            for r, c in zip(rows, cols):
                if self.degrees[r] != self.degrees[c]:
                    raise GradingActionClash(
                        f"action of generator {j} on '{self.name}' maps basis {c} "
                        f"(degree {self.degrees[c]}) into basis {r} (degree {self.degrees[r]})")
        for j, a in enumerate(self.action):
            for k in range(j + 1, len(self.action)):
                b = self.action[k]
                if not np.array_equal(a @ b % p, b @ a % p):
                    raise NonCommutingAction(
                        f"actions of generators {j} and {k} on '{self.name}' do not commute")

    def act(self, g) -> np.ndarray:
        """Matrix of the group element g (any integer exponent vector)."""
        g = tuple(int(x) for x in g)
        return self._act_cache(tuple(x % n for x, n in zip(g, self.group.orders)))

    def _act_cache(self, g: GroupElement) -> np.ndarray:
        cache = self.__dict__.setdefault("_acts", {})
        if g not in cache:
            out = np.eye(self.dim, dtype=np.int64)
            for a, e in zip(self.action, g):
                out = out @ _matpow(a, e, self.field.p) % self.field.p
            out.setflags(write=False)
            cache[g] = out
        return cache[g]

    @cached_property
    def key(self):
        return (self.name, self.field.p, self.group.orders, self.degrees,
                tuple(a.tobytes() for a in self.action))

    def __eq__(self, other):
        return isinstance(other, YDObject) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def renamed(self, name: str) -> YDObject:
        return YDObject(name, self.field, self.group, self.degrees, self.action, validate=False)

    def same_structure(self, other: YDObject) -> bool:
        """Equal degrees and action matrices, ignoring the name."""
        return self.key[1:] == other.key[1:]

    def __repr__(self):
        return f"YDObject({self.name!r}, dim={self.dim})"


def yd_module_build(degrees, action, field: Field, group: Group, name: str = "M") -> YDObject:
    return YDObject(name, field, group, degrees, action)


def unit_object(field: Field, group: Group) -> YDObject:
    return YDObject("I", field, group, [group.identity])


def plain_object(name: str, field: Field, group: Group, dim: int) -> YDObject:
    """Trivially graded object with trivial action; its braiding is the flip."""
    return YDObject(name, field, group, [group.identity] * dim)


Word = tuple[YDObject, ...]
WordLike = Union[YDObject, Sequence[YDObject]]


def as_word(x: WordLike) -> Word:
    if isinstance(x, YDObject):
        return (x,)
    return tuple(x)


def word_dim(word: Word) -> int:
    return prod(o.dim for o in word)


def word_name(word: Word) -> str:
    return "⊗".join(o.name for o in word) if word else "I"


def check_context(*words: Word) -> tuple[Field, Group] | None:
    ctx = None
    for w in words:
        for o in w:
            c = (o.field, o.group)
            if ctx is None:
                ctx = c
            elif c != ctx:
                raise MismatchedContext(
                    f"'{o.name}' lives over F_{o.field.p}, Z{o.group.orders}; expected "
                    f"F_{ctx[0].p}, Z{ctx[1].orders}")
    return ctx


def word_degrees(word: Word, group: Group) -> list[GroupElement]:
    degs = [group.identity]
    for o in word:
        degs = [group.add(a, b) for a in degs for b in o.degrees]
    return degs


def word_action(word: Word, g, p: int) -> sp.csr_matrix:
    out = sp.identity(1, dtype=np.int64, format="csr")
    for o in word:
        out = sp.kron(out, sp.csr_matrix(o.act(g)), format="csr")
    return out


def unravel(index: int, word: Word) -> tuple[int, ...]:
    dims = [o.dim for o in word]
    out = []
    for d in reversed(dims):
        out.append(index % d)
        index //= d
    return tuple(reversed(out))


class LinearMorphism:
    """A linear map between tensor words, stored as a sparse (codim x dim) matrix over F_p."""

    def __init__(self, domain: WordLike, codomain: WordLike, matrix, field: Field | None = None):
        self.domain = as_word(domain)
        self.codomain = as_word(codomain)
        ctx = check_context(self.domain, self.codomain)
        if field is None:
            if ctx is None:
                raise ValueError("field required for maps between unit words")
            field = ctx[0]
        self.field = field
        m = sp.csr_matrix(matrix, dtype=np.int64)
        shape = (word_dim(self.codomain), word_dim(self.domain))
        if m.shape != shape:
            raise ShapeMismatch(f"matrix shape {m.shape} does not match {shape} for "
                                f"{word_name(self.domain)} -> {word_name(self.codomain)}")
        m.data %= field.p
        m.eliminate_zeros()
        m.sort_indices()
        self.matrix = m

    @property
    def p(self) -> int:
        return self.field.p

    def dense(self) -> np.ndarray:
        return self.matrix.toarray()

    def then(self, other: LinearMorphism) -> LinearMorphism:
        """other after self."""
        if other.domain != self.codomain:
            raise ShapeMismatch(f"cannot compose {self!r} with {other!r}")
        return LinearMorphism(self.domain, other.codomain, _mulmod(other.matrix, self.matrix, self.p),
                              self.field)

    def tensor(self, other: LinearMorphism) -> LinearMorphism:
        m = sp.kron(self.matrix, other.matrix, format="csr")
        m.data %= self.p
        return LinearMorphism(self.domain + other.domain, self.codomain + other.codomain, m,
                              self.field)

    def entries(self) -> list[tuple[int, int, int]]:
        coo = self.matrix.tocoo()
        out = sorted(zip(coo.row.tolist(), coo.col.tolist(), coo.data.tolist()))
        return [(r, c, v) for r, c, v in out if v]

    def __call__(self, vector) -> np.ndarray:
        return self.matrix @ np.asarray(vector, dtype=np.int64) % self.p

    def column(self, j: int) -> np.ndarray:
        return self.matrix[:, [j]].toarray().ravel()

    def __repr__(self):
        return f"LinearMorphism({word_name(self.domain)} -> {word_name(self.codomain)})"


def _mulmod(a: sp.csr_matrix, b: sp.csr_matrix, p: int) -> sp.csr_matrix:
    m = (a @ b).tocsr()
    m.data %= p
    m.eliminate_zeros()
    return m


def identity(word: WordLike, field: Field | None = None) -> LinearMorphism:
    word = as_word(word)
    n = word_dim(word)
    return LinearMorphism(word, word, sp.identity(n, dtype=np.int64, format="csr"), field)


def from_dense(domain: WordLike, codomain: WordLike, matrix, field: Field | None = None) -> LinearMorphism:
    return LinearMorphism(domain, codomain, np.asarray(matrix, dtype=np.int64), field)


def _flip(nx: int, ny: int) -> sp.csr_matrix:
    """Permutation X⊗Y -> Y⊗X on index spaces."""
    cols = np.arange(nx * ny)
    i, j = np.divmod(cols, ny)
    rows = j * nx + i
    return sp.csr_matrix((np.ones(nx * ny, dtype=np.int64), (rows, cols)), shape=(nx * ny, nx * ny))


def _degree_twist(x: Word, y: Word, group: Group, p: int, sign: int) -> sp.csr_matrix:
    """v⊗w ↦ v⊗(sign·deg v)·w on X⊗Y."""
    nx, ny = word_dim(x), word_dim(y)
    degs = word_degrees(x, group)
    out = sp.csr_matrix((nx * ny, nx * ny), dtype=np.int64)
    for d in sorted(set(degs)):
        proj = sp.csr_matrix(
            (np.ones(degs.count(d), dtype=np.int64),
             ([i for i, e in enumerate(degs) if e == d], [i for i, e in enumerate(degs) if e == d])),
            shape=(nx, nx))
        g = tuple(sign * a for a in d)
        out = out + sp.kron(proj, word_action(y, g, p), format="csr")
    out = out.tocsr()
    out.data %= p
    return out


def braiding(x: WordLike, y: WordLike) -> LinearMorphism:
    """c_{X,Y}: X⊗Y -> Y⊗X, v⊗w ↦ (deg v)·w ⊗ v."""
    x, y = as_word(x), as_word(y)
    ctx = check_context(x, y)
    if ctx is None:
        raise MismatchedContext("braiding of two unit words needs a context")
    f, g = ctx
    m = _mulmod(_flip(word_dim(x), word_dim(y)), _degree_twist(x, y, g, f.p, 1), f.p)
    return LinearMorphism(x + y, y + x, m, f)


def braiding_inverse(x: WordLike, y: WordLike) -> LinearMorphism:
    """c_{X,Y}^{-1}: Y⊗X -> X⊗Y, w⊗v ↦ v ⊗ (deg v)^{-1}·w."""
    x, y = as_word(x), as_word(y)
    ctx = check_context(x, y)
    if ctx is None:
        raise MismatchedContext("braiding of two unit words needs a context")
    f, g = ctx
    m = _mulmod(_degree_twist(x, y, g, f.p, -1), _flip(word_dim(y), word_dim(x)), f.p)
    return LinearMorphism(y + x, x + y, m, f)


def tensor_object(x: YDObject, y: YDObject, name: str | None = None) -> YDObject:
    check_context((x,), (y,))
    if y.dim == 1 and y.name == "I" and y.degrees == (y.group.identity,):
        return x
    if x.dim == 1 and x.name == "I" and x.degrees == (x.group.identity,):
        return y
    degrees = word_degrees((x, y), x.group)
    action = [np.kron(a, b) % x.field.p for a, b in zip(x.action, y.action)]
    return YDObject(name or f"{x.name}⊗{y.name}", x.field, x.group, degrees, action)


def dual_object(x: YDObject, name: str | None = None) -> YDObject:
    """Left dual: dual basis in degrees -deg, action by the inverse transpose."""
    p = x.field.p
    action = [inverse(a, p).T.copy() for a in x.action]
    degrees = [x.group.neg(d) for d in x.degrees]
    return YDObject(name or f"{x.name}*", x.field, x.group, degrees, action)


def morphism_witness(f: LinearMorphism, g: LinearMorphism) -> Witness | None:
    """None when f == g entrywise, else the first differing entry."""
    if f.domain != g.domain or f.codomain != g.codomain:
        if f.matrix.shape != g.matrix.shape:
            raise ShapeMismatch(f"cannot compare {f!r} with {g!r}")
        raise ShapeMismatch(f"cannot compare {f!r} with {g!r}: different tensor words")
    diff = (f.matrix - g.matrix).tocoo()
    mask = diff.data % f.p != 0
    if not mask.any():
        return None
    rows, cols = diff.row[mask], diff.col[mask]
    order = np.lexsort((rows, cols))
    r, c = int(rows[order[0]]), int(cols[order[0]])
    return Witness(unravel(r, f.codomain), unravel(c, f.domain),
                   int(f.matrix[r, c]) % f.p, int(g.matrix[r, c]) % f.p)


def morphism_equal(f: LinearMorphism, g: LinearMorphism) -> bool:
    return morphism_witness(f, g) is None


def word_degree_array(word: Word, group: Group) -> np.ndarray:
    """Degrees of the basis of a word as an (n, rank) integer array."""
    out = np.zeros((1, group.rank), dtype=np.int64)
    orders = np.asarray(group.orders, dtype=np.int64)
    for o in word:
        d = np.asarray(o.degrees, dtype=np.int64).reshape(o.dim, group.rank)
        out = ((out[:, None, :] + d[None, :, :]) % orders).reshape(-1, group.rank)
    return out


def is_yd_morphism(f: LinearMorphism) -> bool:
    ctx = check_context(f.domain, f.codomain)
    if ctx is None:
        return True
    field, group = ctx
    ddeg = word_degree_array(f.domain, group)
    cdeg = word_degree_array(f.codomain, group)
    coo = f.matrix.tocoo()
    if np.any(ddeg[coo.col] != cdeg[coo.row]):
        return False
    for gen in group.generators:
        lhs = _mulmod(f.matrix, word_action(f.domain, gen, field.p), field.p)
        rhs = _mulmod(word_action(f.codomain, gen, field.p), f.matrix, field.p)
        if (lhs != rhs).nnz:
            return False
    return True


def symmetric_pair_check(x: WordLike, y: WordLike) -> bool:
    x, y = as_word(x), as_word(y)
    if not x or not y:
        return True
    return morphism_equal(braiding(x, y).then(braiding(y, x)), identity(x + y))


def check_yd_condition(m: YDObject):
    """Evaluate both sides of the Yetter-Drinfeld compatibility on kG⊗M."""
    from .ydcheck import yd_condition_report
    return yd_condition_report(m)
