"""Program DSL (parser, printer, evaluator), example programs, and rendering.

Grammar
-------
::

    expr        := 'do' VAR '<-' alt_expr ';' expr        -- binder body extends right
                 | alt_expr
    alt_expr    := choice_expr ( '[~]' choice_expr )*     -- left-associative
    choice_expr := primary ( '<|' PROB '|>' primary )*    -- left-assoc, binds tighter
    primary     := 'ret' value
                 | 'uniform' value '[' value-list ']'
                 | 'arbitrary' value '[' value-list ']'
                 | '(' expr ')'
    value       := 'true' | 'false' | INT | SYMBOL | VAR
                 | '(' value '==' value ')'
    value-list  := ( value (',' value)* )?
    PROB        := INT ( '/' INT )?                       -- must lie in [0, 1]

Symbols are identifiers starting with an uppercase letter (the Monty Hall
doors are ``A``, ``B``, ``C``); variables start with a lowercase letter.
A nested binder on the left of ``<-`` needs parentheses.  Every variable
must be bound by an enclosing ``do``; this is checked at parse time.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .dist import (
    Dist,
    Outcome,
    outcome_tag,
    outcomes_equal,
    render_dist,
    render_outcome,
)
from .gcm import GcmVal, alt_gcm, bind_gcm, choice_gcm, ret_gcm
from .necset import NECSet
from .prob import Prob, ProbError, prob_make, render_rational

Pos = Tuple[int, int]


@dataclass
class SourceError(Exception):
    """A positioned parse/scope/type error."""

    kind: str  # syntax | unbound-variable | type
    line: int
    column: int
    message: str

    def __str__(self) -> str:
        return f"line {self.line}, col {self.column}: {self.kind}: {self.message}"


# --- AST ---------------------------------------------------------------

_NOPOS: Pos = (0, 0)


@dataclass(frozen=True)
class Lit:
    value: Outcome
    pos: Pos = field(default=_NOPOS, compare=False, repr=False)


@dataclass(frozen=True)
class Var:
    name: str
    pos: Pos = field(default=_NOPOS, compare=False, repr=False)


@dataclass(frozen=True)
class Eq:
    left: "ValueExpr"
    right: "ValueExpr"
    pos: Pos = field(default=_NOPOS, compare=False, repr=False)


ValueExpr = Union[Lit, Var, Eq]


@dataclass(frozen=True)
class Ret:
    value: ValueExpr
    pos: Pos = field(default=_NOPOS, compare=False, repr=False)


@dataclass(frozen=True)
class Choice:
    prob: Prob
    left: "Expr"
    right: "Expr"
    pos: Pos = field(default=_NOPOS, compare=False, repr=False)


@dataclass(frozen=True)
class Alt:
    left: "Expr"
    right: "Expr"
    pos: Pos = field(default=_NOPOS, compare=False, repr=False)


@dataclass(frozen=True)
class Bind:
    var: str
    bound: "Expr"
    body: "Expr"
    pos: Pos = field(default=_NOPOS, compare=False, repr=False)


@dataclass(frozen=True)
class Uniform:
    default: ValueExpr
    items: Tuple[ValueExpr, ...]
    pos: Pos = field(default=_NOPOS, compare=False, repr=False)


@dataclass(frozen=True)
class Arbitrary:
    default: ValueExpr
    items: Tuple[ValueExpr, ...]
    pos: Pos = field(default=_NOPOS, compare=False, repr=False)


Expr = Union[Ret, Choice, Alt, Bind, Uniform, Arbitrary]

KEYWORDS = {"ret", "do", "uniform", "arbitrary", "true", "false"}


# --- Tokenizer ---------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: Pos


def _tokenize(text: str) -> List[_Token]:
    toks: List[_Token] = []
    line, col, i = 1, 1, 0
    n = len(text)

    def err(msg: str) -> SourceError:
        return SourceError("syntax", line, col, msg)

    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            col += 1
            i += 1
            continue
        start = (line, col)
        two = text[i : i + 2]
        three = text[i : i + 3]
        if three == "[~]":
            toks.append(_Token("ALT", three, start))
            i += 3
            col += 3
            continue
        if two == "<|":
            toks.append(_Token("LCHOICE", two, start))
            i += 2
            col += 2
            continue
        if two == "|>":
            toks.append(_Token("RCHOICE", two, start))
            i += 2
            col += 2
            continue
        if two == "<-":
            toks.append(_Token("ARROW", two, start))
            i += 2
            col += 2
            continue
        if two == "==":
            toks.append(_Token("EQEQ", two, start))
            i += 2
            col += 2
            continue
        if ch in "()[],;/":
            kind = {
                "(": "LPAREN",
                ")": "RPAREN",
                "[": "LBRACKET",
                "]": "RBRACKET",
                ",": "COMMA",
                ";": "SEMI",
                "/": "SLASH",
            }[ch]
            toks.append(_Token(kind, ch, start))
            i += 1
            col += 1
            continue
        if ch.isdigit() or (ch == "-" and i + 1 < n and text[i + 1].isdigit()):
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Token("INT", text[i:j], start))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if word in KEYWORDS:
                kind = word.upper()
            elif word[0].isupper():
                kind = "SYMBOL"
            else:
                kind = "VAR"
            toks.append(_Token(kind, word, start))
            col += j - i
            i = j
            continue
        raise err(f"unexpected character {ch!r}")
    toks.append(_Token("EOF", "", (line, col)))
    return toks


# --- Parser ------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: List[_Token]) -> None:
        self.toks = tokens
        self.i = 0

    def peek(self) -> _Token:
        return self.toks[self.i]

    def next(self) -> _Token:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise self.err(f"expected {what}, found {tok.text or 'end of input'!r}")
        return self.next()

    def err(self, msg: str) -> SourceError:
        tok = self.peek()
        return SourceError("syntax", tok.pos[0], tok.pos[1], msg)

    def parse_expr(self) -> Expr:
        tok = self.peek()
        if tok.kind == "DO":
            self.next()
            var = self.expect("VAR", "a variable name")
            self.expect("ARROW", "'<-'")
            bound = self.parse_alt()
            self.expect("SEMI", "';'")
            body = self.parse_expr()
            return Bind(var.text, bound, body, pos=tok.pos)
        return self.parse_alt()

    def parse_alt(self) -> Expr:
        left = self.parse_choice()
        while self.peek().kind == "ALT":
            op = self.next()
            right = self.parse_choice()
            left = Alt(left, right, pos=op.pos)
        return left

    def parse_choice(self) -> Expr:
        left = self.parse_primary()
        while self.peek().kind == "LCHOICE":
            op = self.next()
            p = self.parse_prob()
            self.expect("RCHOICE", "'|>'")
            right = self.parse_primary()
            left = Choice(p, left, right, pos=op.pos)
        return left

    def parse_prob(self) -> Prob:
        tok = self.expect("INT", "a probability")
        num = int(tok.text)
        den = 1
        if self.peek().kind == "SLASH":
            self.next()
            den_tok = self.expect("INT", "a denominator")
            den = int(den_tok.text)
        try:
            return prob_make(num, den)
        except ProbError as exc:
            raise SourceError("syntax", tok.pos[0], tok.pos[1], str(exc)) from exc

    def parse_primary(self) -> Expr:
        tok = self.peek()
        if tok.kind == "RET":
            self.next()
            return Ret(self.parse_value(), pos=tok.pos)
        if tok.kind in ("UNIFORM", "ARBITRARY"):
            self.next()
            default = self.parse_value()
            self.expect("LBRACKET", "'['")
            items: List[ValueExpr] = []
            if self.peek().kind != "RBRACKET":
                items.append(self.parse_value())
                while self.peek().kind == "COMMA":
                    self.next()
                    items.append(self.parse_value())
            self.expect("RBRACKET", "']'")
            node = Uniform if tok.kind == "UNIFORM" else Arbitrary
            return node(default, tuple(items), pos=tok.pos)
        if tok.kind == "LPAREN":
            self.next()
            inner = self.parse_expr()
            self.expect("RPAREN", "')'")
            return inner
        raise self.err(f"expected an expression, found {tok.text or 'end of input'!r}")

    def parse_value(self) -> ValueExpr:
        tok = self.peek()
        if tok.kind == "TRUE":
            self.next()
            return Lit(True, pos=tok.pos)
        if tok.kind == "FALSE":
            self.next()
            return Lit(False, pos=tok.pos)
        if tok.kind == "INT":
            self.next()
            return Lit(int(tok.text), pos=tok.pos)
        if tok.kind == "SYMBOL":
            self.next()
            return Lit(tok.text, pos=tok.pos)
        if tok.kind == "VAR":
            self.next()
            return Var(tok.text, pos=tok.pos)
        if tok.kind == "LPAREN":
            self.next()
            left = self.parse_value()
            if self.peek().kind == "EQEQ":
                self.next()
                right = self.parse_value()
                self.expect("RPAREN", "')'")
                return Eq(left, right, pos=tok.pos)
            self.expect("RPAREN", "')'")
            return left
        raise self.err(f"expected a value, found {tok.text or 'end of input'!r}")


def _check_scope(e: Expr, bound: frozenset) -> None:
    if isinstance(e, Ret):
        _check_value_scope(e.value, bound)
    elif isinstance(e, (Choice, Alt)):
        _check_scope(e.left, bound)
        _check_scope(e.right, bound)
    elif isinstance(e, Bind):
        _check_scope(e.bound, bound)
        _check_scope(e.body, bound | {e.var})
    elif isinstance(e, (Uniform, Arbitrary)):
        _check_value_scope(e.default, bound)
        for item in e.items:
            _check_value_scope(item, bound)
    else:
        raise TypeError(f"not an expression: {e!r}")


def _check_value_scope(v: ValueExpr, bound: frozenset) -> None:
    if isinstance(v, Var):
        if v.name not in bound:
            raise SourceError(
                "unbound-variable", v.pos[0], v.pos[1], f"unbound variable {v.name!r}"
            )
    elif isinstance(v, Eq):
        _check_value_scope(v.left, bound)
        _check_value_scope(v.right, bound)


def parse(text: str) -> Expr:
    """Parse a program; raises SourceError with a position on failure."""
    parser = _Parser(_tokenize(text))
    expr = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "EOF":
        raise parser.err(f"unexpected trailing input {tok.text!r}")
    _check_scope(expr, frozenset())
    return expr


# --- Printer -----------------------------------------------------------

_LEVEL_EXPR, _LEVEL_ALT, _LEVEL_CHOICE, _LEVEL_PRIMARY = 0, 1, 2, 3


def _level(e: Expr) -> int:
    if isinstance(e, Bind):
        return _LEVEL_EXPR
    if isinstance(e, Alt):
        return _LEVEL_ALT
    if isinstance(e, Choice):
        return _LEVEL_CHOICE
    return _LEVEL_PRIMARY


def render_value_expr(v: ValueExpr) -> str:
    if isinstance(v, Lit):
        return render_outcome(v.value)
    if isinstance(v, Var):
        return v.name
    return f"({render_value_expr(v.left)} == {render_value_expr(v.right)})"


def render_expr(e: Expr) -> str:
    """Pretty-print with minimal parentheses; parse(render_expr(e)) == e."""
    return _render_at(e, _LEVEL_EXPR)


def _render_at(e: Expr, need: int) -> str:
    text = _render_raw(e)
    if _level(e) < need:
        return f"({text})"
    return text


def _render_raw(e: Expr) -> str:
    if isinstance(e, Ret):
        return f"ret {render_value_expr(e.value)}"
    if isinstance(e, Bind):
        return (
            f"do {e.var} <- {_render_at(e.bound, _LEVEL_ALT)}; "
            f"{_render_at(e.body, _LEVEL_EXPR)}"
        )
    if isinstance(e, Alt):
        return f"{_render_at(e.left, _LEVEL_ALT)} [~] {_render_at(e.right, _LEVEL_CHOICE)}"
    if isinstance(e, Choice):
        return (
            f"{_render_at(e.left, _LEVEL_CHOICE)} <|{e.prob}|> "
            f"{_render_at(e.right, _LEVEL_PRIMARY)}"
        )
    if isinstance(e, Uniform):
        items = ", ".join(render_value_expr(v) for v in e.items)
        return f"uniform {render_value_expr(e.default)} [{items}]"
    if isinstance(e, Arbitrary):
        items = ", ".join(render_value_expr(v) for v in e.items)
        return f"arbitrary {render_value_expr(e.default)} [{items}]"
    raise TypeError(f"not an expression: {e!r}")


# --- Evaluator ---------------------------------------------------------

_ATOM_TAGS = {0, 1, 2}  # bool, int, symbol


def eval_value(v: ValueExpr, env: Dict[str, Outcome]) -> Outcome:
    if isinstance(v, Lit):
        return v.value
    if isinstance(v, Var):
        if v.name not in env:
            raise SourceError(
                "unbound-variable", v.pos[0], v.pos[1], f"unbound variable {v.name!r}"
            )
        return env[v.name]
    if isinstance(v, Eq):
        left = eval_value(v.left, env)
        right = eval_value(v.right, env)
        lt, rt = outcome_tag(left), outcome_tag(right)
        if lt not in _ATOM_TAGS or rt not in _ATOM_TAGS or lt != rt:
            raise SourceError(
                "type",
                v.pos[0],
                v.pos[1],
                f"cannot compare {render_outcome(left)} and {render_outcome(right)}",
            )
        return outcomes_equal(left, right)
    raise TypeError(f"not a value expression: {v!r}")


def eval_expr(e: Expr, env: Optional[Dict[str, Outcome]] = None) -> GcmVal:
    """Compositional evaluation in the combined-choice monad."""
    env = env or {}
    if isinstance(e, Ret):
        return ret_gcm(eval_value(e.value, env))
    if isinstance(e, Choice):
        return choice_gcm(e.prob, eval_expr(e.left, env), eval_expr(e.right, env))
    if isinstance(e, Alt):
        return alt_gcm(eval_expr(e.left, env), eval_expr(e.right, env))
    if isinstance(e, Bind):
        bound = eval_expr(e.bound, env)
        return bind_gcm(bound, lambda a: eval_expr(e.body, {**env, e.var: a}))
    if isinstance(e, Uniform):
        return uniform(eval_value(e.default, env), [eval_value(v, env) for v in e.items])
    if isinstance(e, Arbitrary):
        return arbitrary(eval_value(e.default, env), [eval_value(v, env) for v in e.items])
    raise TypeError(f"not an expression: {e!r}")


def run(text: str) -> GcmVal:
    return eval_expr(parse(text))


# --- Library programs --------------------------------------------------


def uniform(default: Outcome, values: Sequence[Outcome]) -> GcmVal:
    """Uniformly random element of `values` (`default` if empty)."""
    if not values:
        return ret_gcm(default)
    if len(values) == 1:
        return ret_gcm(values[0])
    head, rest = values[0], values[1:]
    return choice_gcm(prob_make(1, len(values)), ret_gcm(head), uniform(default, rest))


def arbitrary(default: Outcome, values: Sequence[Outcome]) -> GcmVal:
    """Nondeterministically chosen element of `values` (`default` if empty)."""
    if not values:
        return ret_gcm(default)
    if len(values) == 1:
        return ret_gcm(values[0])
    return alt_gcm(ret_gcm(values[0]), arbitrary(default, values[1:]))


def bcoin(p: Prob) -> GcmVal:
    """Biased coin: true with probability p."""
    return choice_gcm(p, ret_gcm(True), ret_gcm(False))


def arb() -> GcmVal:
    """Arbitrary boolean."""
    return alt_gcm(ret_gcm(True), ret_gcm(False))


def coinarb(p: Prob) -> GcmVal:
    """Flip a p-biased coin, then compare with an arbitrary boolean."""
    return bind_gcm(bcoin(p), lambda c: bind_gcm(arb(), lambda a: ret_gcm(a == c)))


def coinarb_source(p: Prob) -> str:
    """The coinarb program as DSL source text."""
    return (
        f"do c <- ret true <|{p}|> ret false; "
        "do a <- ret true [~] ret false; ret (a == c)"
    )


ARB_SOURCE = "ret true [~] ret false"

DOORS: Tuple[str, ...] = ("A", "B", "C")


def _without(xs: Sequence[str], removed: Sequence[str]) -> List[str]:
    return [x for x in xs if x not in removed]


def monty(strategy: str) -> GcmVal:
    """The full game over three doors; `strategy` is 'stick' or 'switch'.

    The car is hidden nondeterministically, the player picks uniformly,
    the host teases by opening a nondeterministic goat door, and the
    strategy maps (picked, teased) to a final door.  The result is the
    distribution set of "player wins".
    """
    doors = list(DOORS)
    default = doors[0]

    hide = arbitrary(default, doors)
    pick = uniform(default, doors)

    def tease(h: str, p: str) -> GcmVal:
        return arbitrary(default, _without(doors, [h, p]))

    if strategy == "stick":
        def strat(p: str, t: str) -> GcmVal:
            return ret_gcm(p)
    elif strategy == "switch":
        def strat(p: str, t: str) -> GcmVal:
            remaining = _without(doors, [p, t])
            return ret_gcm(remaining[0] if remaining else default)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")

    return bind_gcm(
        hide,
        lambda h: bind_gcm(
            pick,
            lambda p: bind_gcm(
                tease(h, p),
                lambda t: bind_gcm(strat(p, t), lambda s: ret_gcm(s == h)),
            ),
        ),
    )


# --- Rendering of monadic values ---------------------------------------


def _structured_outcome(x: Outcome):
    tag = outcome_tag(x)
    if tag in _ATOM_TAGS:
        return x
    if tag == Dist.ORDER_TAG:
        return {"dist": _structured_dist(x)}
    return {"necset": _structured_necset(x)}


def _structured_dist(d: Dist) -> list:
    return [[_structured_outcome(k), render_rational(w)] for k, w in d.entries]


def _structured_necset(v: NECSet) -> list:
    return [_structured_dist(d) for d in v.generators]


def render(v: GcmVal, fmt: str = "text") -> str:
    """Render a monadic value; equal values render byte-identically.

    text: one generator per line, in canonical order.
    structured: JSON array of generators, each an array of [key, weight] pairs.
    """
    if fmt == "text":
        return "\n".join(render_dist(d) for d in v.generators)
    if fmt == "structured":
        return json.dumps(_structured_necset(v), separators=(",", ":"), sort_keys=True)
    raise ValueError(f"unknown format {fmt!r}")
