"""JSON expression ASTs and canonical JSON serialization.

Node shapes (single-key objects):

  lie      {"gen": {"i":3,"j":1,"sigma":"a1"}} | {"bracket":[A,B]}
           | {"add":[...]} | {"scale":{"coef":"3/4","arg":A}}
  assoc    {"word":[letter,...]} | {"mul":[...]} | {"add":[...]} | {"scale":...}
  poisson  {"gen":...} | {"lambda":[A,B]} | {"mul":[...]} | {"add":[...]}
           | {"scale":...}   (a {"grading":{"k":..,"q":..},"expr":...}
           envelope is accepted at the top level by the CLI)
  cohom    {"gen":...} | {"cup":[...]} | {"add":[...]} | {"scale":...}

Decorations are element literals of the group backend; coefficients are
exact rationals written "p/q" or "p".  Serialized outputs are sorted by
the per-module canonical orders so identical inputs yield identical bytes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List

from .assoc import AssocContext, AssocElement
from .cohomology import CohomContext, CohomElement
from .errors import ParseError
from .lie import LieContext, LieElement
from .poisson import PoissonContext, PoissonElement

_AST_DOC = "see the expression AST schema in the README"


def parse_coefficient(raw) -> Fraction:
    if isinstance(raw, bool):
        raise ParseError(f"bad coefficient {raw!r}")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad coefficient {raw!r}") from exc
    raise ParseError(f"bad coefficient {raw!r}")


def format_coefficient(c: Fraction) -> str:
    return str(c)


def _node_kind(node, allowed) -> str:
    if not isinstance(node, dict) or len(node) != 1:
        raise ParseError(f"expression node must be a single-key object; {_AST_DOC}")
    (kind,) = node.keys()
    if kind not in allowed:
        raise ParseError(f"unknown node kind {kind!r}; expected one of {sorted(allowed)}")
    return kind


def _parse_triple(obj, group):
    if not isinstance(obj, dict) or set(obj) != {"i", "j", "sigma"}:
        raise ParseError('generator needs fields {"i", "j", "sigma"}')
    try:
        i, j = int(obj["i"]), int(obj["j"])
    except (TypeError, ValueError) as exc:
        raise ParseError("generator indices must be integers") from exc
    return i, j, group.parse_element(str(obj["sigma"]))


def _triple_jsonable(group, i, j, uid):
    return {"i": i, "j": j, "sigma": group.format_element(group.element_by_uid(uid))}


# -- lie ---------------------------------------------------------------------


def eval_lie(node, ctx: LieContext) -> LieElement:
    kind = _node_kind(node, {"gen", "bracket", "add", "scale"})
    body = node[kind]
    if kind == "gen":
        i, j, sigma = _parse_triple(body, ctx.group)
        return ctx.generator(i, j, sigma)
    if kind == "bracket":
        if not isinstance(body, list) or len(body) != 2:
            raise ParseError("bracket needs exactly two operands")
        return ctx.bracket(eval_lie(body[0], ctx), eval_lie(body[1], ctx))
    if kind == "add":
        if not isinstance(body, list):
            raise ParseError("add needs a list of operands")
        out = ctx.zero()
        for child in body:
            out = out + eval_lie(child, ctx)
        return out
    coef, arg = _parse_scale(body)
    return eval_lie(arg, ctx).scale(coef)


def _parse_scale(body):
    if not isinstance(body, dict) or set(body) != {"coef", "arg"}:
        raise ParseError('scale needs fields {"coef", "arg"}')
    return parse_coefficient(body["coef"]), body["arg"]


def lie_jsonable(x: LieElement) -> List[dict]:
    group = x.ctx.group
    return [
        {
            "top": i,
            "word": [_triple_jsonable(group, i, j, uid) for j, uid in w],
            "coef": format_coefficient(c),
        }
        for i, w, c in x.terms()
    ]


# -- assoc -------------------------------------------------------------------


def eval_assoc(node, ctx: AssocContext) -> AssocElement:
    kind = _node_kind(node, {"word", "mul", "add", "scale"})
    body = node[kind]
    if kind == "word":
        if not isinstance(body, list):
            raise ParseError("word needs a list of letters")
        letters = []
        for obj in body:
            i, j, sigma = _parse_triple(obj, ctx.group)
            letters.append(ctx.letter(i, j, sigma))
        return ctx.word(letters)
    if kind == "mul":
        if not isinstance(body, list):
            raise ParseError("mul needs a list of operands")
        out = ctx.one()
        for child in body:
            out = out * eval_assoc(child, ctx)
        return out
    if kind == "add":
        if not isinstance(body, list):
            raise ParseError("add needs a list of operands")
        out = ctx.zero()
        for child in body:
            out = out + eval_assoc(child, ctx)
        return out
    coef, arg = _parse_scale(body)
    return eval_assoc(arg, ctx).scale(coef)


def assoc_jsonable(x: AssocElement) -> List[dict]:
    group = x.ctx.group
    return [
        {
            "word": [_triple_jsonable(group, i, j, uid) for i, j, uid in w],
            "coef": format_coefficient(c),
        }
        for w, c in x.sorted_terms()
    ]


# -- poisson -----------------------------------------------------------------


def eval_poisson(node, ctx: PoissonContext) -> PoissonElement:
    kind = _node_kind(node, {"gen", "lambda", "mul", "add", "scale"})
    body = node[kind]
    if kind == "gen":
        i, j, sigma = _parse_triple(body, ctx.group)
        return ctx.generator(i, j, sigma)
    if kind == "lambda":
        if not isinstance(body, list) or len(body) != 2:
            raise ParseError("lambda needs exactly two operands")
        return ctx.bracket(eval_poisson(body[0], ctx), eval_poisson(body[1], ctx))
    if kind == "mul":
        if not isinstance(body, list):
            raise ParseError("mul needs a list of operands")
        out = ctx.one()
        for child in body:
            out = out * eval_poisson(child, ctx)
        return out
    if kind == "add":
        if not isinstance(body, list):
            raise ParseError("add needs a list of operands")
        out = ctx.zero()
        for child in body:
            out = out + eval_poisson(child, ctx)
        return out
    coef, arg = _parse_scale(body)
    return eval_poisson(arg, ctx).scale(coef)


def poisson_jsonable(x: PoissonElement) -> List[dict]:
    group = x.ctx.group
    out = []
    for mono, c in x.sorted_terms():
        out.append(
            {
                "degree": x.ctx.monomial_degree(mono),
                "factors": [
                    {
                        "top": block,
                        "word": [
                            _triple_jsonable(group, block, j, uid) for j, uid in word
                        ],
                    }
                    for block, word in mono
                ],
                "coef": format_coefficient(c),
            }
        )
    return out


# -- cohomology --------------------------------------------------------------


def eval_cohom(node, ctx: CohomContext) -> CohomElement:
    kind = _node_kind(node, {"gen", "cup", "add", "scale"})
    body = node[kind]
    if kind == "gen":
        i, j, sigma = _parse_triple(body, ctx.group)
        if i < j:
            i, j, sigma = j, i, ctx.group.invert(sigma)
        return ctx.generator(i, j, sigma)
    if kind == "cup":
        if not isinstance(body, list):
            raise ParseError("cup needs a list of operands")
        out = ctx.one()
        for child in body:
            out = out * eval_cohom(child, ctx)
        return out
    if kind == "add":
        if not isinstance(body, list):
            raise ParseError("add needs a list of operands")
        out = ctx.zero()
        for child in body:
            out = out + eval_cohom(child, ctx)
        return out
    coef, arg = _parse_scale(body)
    return eval_cohom(arg, ctx).scale(coef)


def cohom_jsonable(x: CohomElement) -> List[dict]:
    group = x.ctx.group
    return [
        {
            "monomial": [_triple_jsonable(group, i, j, uid) for i, j, uid in m],
            "coef": format_coefficient(c),
        }
        for m, c in x.sorted_terms()
    ]
