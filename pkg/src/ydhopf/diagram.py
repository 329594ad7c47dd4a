"""String-diagram terms: a small IR, type inference, evaluation and a text syntax.

Compose(a, b) means "b after a", matching the top-to-bottom reading of tangles.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Union

import numpy as np
import scipy.sparse as sp

from .errors import ExpressionSyntaxError, TypeMismatch, UnboundGenerator
from .linalg import left_inverse
from .scalars import Field
from .yd import (LinearMorphism, Word, WordLike, YDObject, as_word, braiding, braiding_inverse,
                 identity, word_dim, word_name)


@dataclass(frozen=True)
class Id:
    word: Word


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Compose:
    first: Expr
    second: Expr


@dataclass(frozen=True)
class Tensor:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Braid:
    x: Word
    y: Word


@dataclass(frozen=True)
class BraidInv:
    """Inverse braiding Y⊗X -> X⊗Y."""
    x: Word
    y: Word


Expr = Union[Id, Gen, Compose, Tensor, Braid, BraidInv]


def idw(*objs: YDObject) -> Id:
    return Id(tuple(objs))


def braid(x: WordLike, y: WordLike) -> Braid:
    return Braid(as_word(x), as_word(y))


def braid_inv(x: WordLike, y: WordLike) -> BraidInv:
    return BraidInv(as_word(x), as_word(y))


def seq(*exprs: Expr) -> Expr:
    """Stack expressions top to bottom."""
    out = exprs[0]
    for e in exprs[1:]:
        out = Compose(out, e)
    return out


def par(*exprs: Expr) -> Expr:
    """Place expressions side by side."""
    out = exprs[0]
    for e in exprs[1:]:
        out = Tensor(out, e)
    return out


class GeneratorEnv(Mapping):
    """Frozen mapping from generator names to morphisms."""

    def __init__(self, field: Field, gens: Mapping[str, LinearMorphism] | None = None):
        self.field = field
        self._gens = MappingProxyType(dict(gens or {}))

    def __getitem__(self, name):
        return self._gens[name]

    def __iter__(self):
        return iter(self._gens)

    def __len__(self):
        return len(self._gens)

    def with_gens(self, **gens: LinearMorphism) -> GeneratorEnv:
        merged = dict(self._gens)
        for k, v in gens.items():
            if k in merged and merged[k] is not v:
                raise ValueError(f"generator '{k}' already bound")
            merged[k] = v
        return GeneratorEnv(self.field, merged)

    def extend(self, gens: Mapping[str, LinearMorphism]) -> GeneratorEnv:
        return self.with_gens(**dict(gens))


def _kind(e: Expr) -> str:
    return type(e).__name__


def expr_validate(e: Expr, env: Mapping[str, LinearMorphism], path: tuple[str, ...] = ()) -> tuple[Word, Word]:
    if isinstance(e, Id):
        return e.word, e.word
    if isinstance(e, Gen):
        if e.name not in env:
            raise UnboundGenerator(f"generator '{e.name}' is not bound")
        f = env[e.name]
        return f.domain, f.codomain
    if isinstance(e, Braid):
        return e.x + e.y, e.y + e.x
    if isinstance(e, BraidInv):
        return e.y + e.x, e.x + e.y
    if isinstance(e, Compose):
        d1, c1 = expr_validate(e.first, env, path + ("Compose.first",))
        d2, c2 = expr_validate(e.second, env, path + ("Compose.second",))
        if c1 != d2:
            raise TypeMismatch(f"codomain {word_name(c1)} does not match domain {word_name(d2)}",
                               path)
        return d1, c2
    if isinstance(e, Tensor):
        d1, c1 = expr_validate(e.left, env, path + ("Tensor.left",))
        d2, c2 = expr_validate(e.right, env, path + ("Tensor.right",))
        return d1 + d2, c1 + c2
    raise TypeMismatch(f"unknown expression node {e!r}", path)


def expr_evaluate(e: Expr, env: GeneratorEnv | Mapping[str, LinearMorphism],
                  field: Field | None = None) -> LinearMorphism:
    expr_validate(e, env)
    if field is None:
        field = env.field if isinstance(env, GeneratorEnv) else None
    memo: dict[int, LinearMorphism] = {}
    return _eval(e, env, field, memo)


def _eval(e: Expr, env, field, memo) -> LinearMorphism:
    key = id(e)
    if key in memo:
        return memo[key]
    if isinstance(e, Id):
        out = identity(e.word, field)
    elif isinstance(e, Gen):
        out = env[e.name]
    elif isinstance(e, Braid):
        out = braiding(e.x, e.y) if e.x and e.y else identity(e.x + e.y, field)
    elif isinstance(e, BraidInv):
        out = braiding_inverse(e.x, e.y) if e.x and e.y else identity(e.x + e.y, field)
    elif isinstance(e, Compose):
        out = _eval(e.first, env, field, memo).then(_eval(e.second, env, field, memo))
    else:
        out = _eval(e.left, env, field, memo).tensor(_eval(e.right, env, field, memo))
    memo[key] = out
    return out


def solve_left_inverse(f: LinearMorphism) -> LinearMorphism:
    """g with g∘f = id (two-sided inverse when f is square)."""
    g = left_inverse(f.dense(), f.p)
    return LinearMorphism(f.codomain, f.domain, g, f.field)


def scale(f: LinearMorphism, c: int) -> LinearMorphism:
    return LinearMorphism(f.domain, f.codomain, f.matrix * (c % f.p), f.field)


def add(f: LinearMorphism, g: LinearMorphism) -> LinearMorphism:
    if f.domain != g.domain or f.codomain != g.codomain:
        raise TypeMismatch(f"cannot add {f!r} and {g!r}")
    return LinearMorphism(f.domain, f.codomain, f.matrix + g.matrix, f.field)


def zero(domain: WordLike, codomain: WordLike, field: Field) -> LinearMorphism:
    domain, codomain = as_word(domain), as_word(codomain)
    return LinearMorphism(domain, codomain,
                          sp.csr_matrix((word_dim(codomain), word_dim(domain)), dtype=np.int64), field)


# text syntax

_TOKEN = re.compile(r"\s*(?:(?P<punct>[()\[\];*,⊗])|(?P<name>[^\s()\[\];*,⊗]+))")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExpressionSyntaxError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        out.append(m.group("punct") or m.group("name"))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str, objects: Mapping[str, YDObject]):
        self.toks = _tokenize(text)
        self.i = 0
        self.objects = objects

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, want: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise ExpressionSyntaxError("unexpected end of expression")
        if want is not None and tok != want:
            raise ExpressionSyntaxError(f"expected {want!r}, got {tok!r}")
        self.i += 1
        return tok

    def parse(self) -> Expr:
        e = self.expr()
        if self.peek() is not None:
            raise ExpressionSyntaxError(f"trailing input at {self.peek()!r}")
        return e

    def expr(self) -> Expr:
        e = self.tens()
        while self.peek() == ";":
            self.take()
            e = Compose(e, self.tens())
        return e

    def tens(self) -> Expr:
        e = self.atom()
        while self.peek() in ("*", "⊗"):
            self.take()
            e = Tensor(e, self.atom())
        return e

    def word(self) -> Word:
        objs = []
        while True:
            name = self.take()
            if name in ("I", "1") and not objs and self.peek() in ("]", ","):
                return ()
            if name not in self.objects:
                raise UnboundGenerator(f"object '{name}' is not bound")
            objs.append(self.objects[name])
            if self.peek() in ("*", "⊗"):
                self.take()
                continue
            return tuple(objs)

    def atom(self) -> Expr:
        tok = self.take()
        if tok == "(":
            e = self.expr()
            self.take(")")
            return e
        if tok in ("id", "c", "cinv") and self.peek() == "[":
            self.take("[")
            x = self.word()
            if tok == "id":
                self.take("]")
                return Id(x)
            self.take(",")
            y = self.word()
            self.take("]")
            return Braid(x, y) if tok == "c" else BraidInv(x, y)
        if tok in "()[];*,⊗":
            raise ExpressionSyntaxError(f"unexpected {tok!r}")
        return Gen(tok)


def parse_expr(text: str, objects: Mapping[str, YDObject]) -> Expr:
    return _Parser(text, objects).parse()


def format_expr(e: Expr) -> str:
    if isinstance(e, Id):
        return f"id[{'*'.join(o.name for o in e.word) or 'I'}]"
    if isinstance(e, Gen):
        return e.name
    if isinstance(e, (Braid, BraidInv)):
        head = "c" if isinstance(e, Braid) else "cinv"
        x = "*".join(o.name for o in e.x) or "I"
        y = "*".join(o.name for o in e.y) or "I"
        return f"{head}[{x},{y}]"
    if isinstance(e, Compose):
        return f"({format_expr(e.first)} ; {format_expr(e.second)})"
    return f"({format_expr(e.left)} * {format_expr(e.right)})"
