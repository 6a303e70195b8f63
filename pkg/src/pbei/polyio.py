"""Text and JSON serialization of polynomials.

Text grammar (whitespace allowed between tokens)::

    poly  := ["-"] term (("+" | "-") term)*
    term  := coef | [coef "*"] var ("*" var)*
    coef  := INT ["/" INT]
    var   := ("x" | "y") INDEX ["^" INT]

Indices are 1-based vertex labels; ``0`` is the zero polynomial.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import QQ, CoefficientField, Polynomial


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>[xy])(?P<idx>\d+)|(?P<op>[-+*/^]))")


def _tokens(text: str):
    pos = 0
    text = text.replace("−", "-")
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            ws = len(text[pos:]) - len(text[pos:].lstrip())
            raise PolynomialSyntaxError(f"unexpected character {text[pos + ws]!r}", pos + ws)
        start = m.start(m.lastgroup) if m.lastgroup != "idx" else m.start("var")
        if m.group("num") is not None:
            out.append(("num", int(m.group("num")), start))
        elif m.group("var") is not None:
            out.append(("var", (m.group("var"), int(m.group("idx"))), m.start("var")))
        else:
            out.append(("op", m.group("op"), start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


def parse_polynomial(text: str, n: int, fld: CoefficientField = QQ) -> Polynomial:
    """Parse the strict text form into a polynomial on ``2n`` variables."""
    toks = _tokens(text)
    k = 0

    def peek():
        return toks[k]

    def take(kind, value=None):
        nonlocal k
        t = toks[k]
        if t[0] != kind or (value is not None and t[1] != value):
            want = value if value is not None else kind
            got = "end of input" if t[0] == "end" else repr(t[1])
            raise PolynomialSyntaxError(f"expected {want}, got {got}", t[2])
        k += 1
        return t

    terms: dict = {}
    sign = 1
    if peek()[:2] == ("op", "-"):
        take("op")
        sign = -1
    elif peek()[:2] == ("op", "+"):
        raise PolynomialSyntaxError("leading '+'", peek()[2])
    if peek()[0] == "end":
        raise PolynomialSyntaxError("empty polynomial", peek()[2])
    while True:
        coef = Fraction(1)
        exps = [0] * (2 * n)
        have_factor = False
        if peek()[0] == "num":
            num = take("num")[1]
            if peek()[:2] == ("op", "/"):
                take("op")
                tok = take("num")
                if tok[1] == 0:
                    raise PolynomialSyntaxError("zero denominator", tok[2])
                coef = Fraction(num, tok[1])
            else:
                coef = Fraction(num)
            have_factor = True
            if peek()[:2] == ("op", "*"):
                take("op")
                if peek()[0] != "var":
                    raise PolynomialSyntaxError("expected variable after '*'", peek()[2])
        while peek()[0] == "var":
            _, (letter, idx), p = take("var")
            if not 1 <= idx <= n:
                raise PolynomialSyntaxError(f"variable index {idx} out of range 1..{n}", p)
            power = 1
            if peek()[:2] == ("op", "^"):
                take("op")
                power = take("num")[1]
            exps[(idx - 1) + (n if letter == "y" else 0)] += power
            have_factor = True
            if peek()[:2] == ("op", "*"):
                take("op")
                if peek()[0] != "var":
                    raise PolynomialSyntaxError("expected variable after '*'", peek()[2])
            else:
                break
        if not have_factor:
            t = peek()
            raise PolynomialSyntaxError("expected term", t[2])
        m = tuple(exps)
        terms[m] = terms.get(m, 0) + sign * coef
        t = peek()
        if t[0] == "end":
            break
        if t[:2] in (("op", "+"), ("op", "-")):
            take("op")
            sign = 1 if t[1] == "+" else -1
            continue
        raise PolynomialSyntaxError(f"unexpected {t[1]!r}", t[2])
    return Polynomial(terms, 2 * n, fld)


def _format_coef(c, fld: CoefficientField) -> str:
    if fld.characteristic:
        return str(int(c))
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(m, n: int | None = None) -> str:
    if n is None:
        n = len(m) // 2
    off = len(m) - 2 * n
    parts = []
    for k in range(off):
        if m[k]:
            parts.append(f"t{k + 1}" + (f"^{m[k]}" if m[k] > 1 else ""))
    for k in range(2 * n):
        e = m[off + k]
        if e:
            name = f"x{k + 1}" if k < n else f"y{k - n + 1}"
            parts.append(name + (f"^{e}" if e > 1 else ""))
    return "*".join(parts)


def format_polynomial(f: Polynomial, n: int | None = None) -> str:
    """Text form with terms in decreasing lex order."""
    if not f.terms:
        return "0"
    out = []
    p = f.field.characteristic
    for k, (m, c) in enumerate(f.sorted_terms()):
        neg = False
        if not p and c < 0:
            neg, c = True, -c
        mono = format_monomial(m, n)
        cs = _format_coef(c, f.field)
        if not mono:
            body = cs
        elif cs == "1":
            body = mono
        else:
            body = f"{cs}*{mono}"
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


def polynomial_to_json(f: Polynomial) -> list[dict]:
    return [{"coef": _format_coef(c, f.field), "exp": list(m)} for m, c in f.sorted_terms()]


def polynomial_from_json(data: list[dict], nvars: int, fld: CoefficientField = QQ) -> Polynomial:
    if not isinstance(data, list):
        raise ValueError("polynomial JSON must be a list of terms")
    terms: dict = {}
    for pos, term in enumerate(data):
        if not isinstance(term, dict) or set(term) != {"coef", "exp"}:
            raise PolynomialSyntaxError("term must have exactly 'coef' and 'exp'", pos)
        exp = term["exp"]
        if not isinstance(exp, list) or len(exp) != nvars or not all(isinstance(e, int) and e >= 0 for e in exp):
            raise PolynomialSyntaxError(f"'exp' must be {nvars} nonnegative integers", pos)
        try:
            c = Fraction(str(term["coef"]).replace("−", "-"))
        except (ValueError, ZeroDivisionError):
            raise PolynomialSyntaxError(f"bad coefficient {term['coef']!r}", pos) from None
        m = tuple(exp)
        terms[m] = terms.get(m, 0) + c
    return Polynomial(terms, nvars, fld)
