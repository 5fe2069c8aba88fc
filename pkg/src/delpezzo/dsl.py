"""Line-oriented text formats: mutation scripts, hypersurface instances,
quiver definitions and intersection expressions.

Script grammar (one statement per line, '#' starts a comment):

    ambient Y d=<n>
    axiom <decomposition>
    serre_rotate left|right at <i>..<j>
    triangle_exchange at <i> support E|D direction <k>
    swap at <i>
    fiber_rebase at <i> shift +F|-F
    opaque_transpose at <i> left|right
    expand_blowup at <i> center <name> codim <c>
    expect <decomposition>

A decomposition literal is `<node, node, ...>` with node syntax
O(aH+bE), O_E(aH+bE), O(ah+bD), O_D(ah+bD) or CAT(name); class syntax is a
signed integer combination of the two symbols of one basis, or 0.  Parse
errors report line and column.
"""

from __future__ import annotations

import re
from fractions import Fraction
from importlib import resources

from .errors import InstanceFormatError, ScriptSyntaxError
from .intersection import (BASIS_HE, BASIS_hD, DivisorClass, he, hd, rewrite)
from .mutations import MutationRule, ReplayScript
from .quivers import Quiver
from .sod import (Decomposition, LineBundle, SodNode, TwistedStructureSheaf,
                  node_text, standard_opaque)
from .wps import NodalHypersurface, WeightedSpace, enumerate_monomials

_NODE_RE = re.compile(r"^(O_E|O_D|O|CAT)\((.*)\)$")
_TERM_RE = re.compile(r"([+-]?)(\d*)([HEhD])")


def parse_class(text: str, line: int = 0, col: int = 0) -> DivisorClass:
    """Parse '2H-E', '-h', 'D-2h' or '0' into a divisor class."""
    text = text.strip()
    if text in ("0", "-0", "+0"):
        return he(0, 0)
    pos = 0
    coeffs: dict[str, int] = {}
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None or (pos > 0 and m.group(1) == ""):
            raise ScriptSyntaxError(line, col + pos,
                                    "a signed term like 2H, -E or +D")
        sign = -1 if m.group(1) == "-" else 1
        mag = int(m.group(2)) if m.group(2) else 1
        sym = m.group(3)
        coeffs[sym] = coeffs.get(sym, 0) + sign * mag
        pos = m.end()
    symbols = set(coeffs)
    if symbols <= {"H", "E"}:
        return he(coeffs.get("H", 0), coeffs.get("E", 0))
    if symbols <= {"h", "D"}:
        return hd(coeffs.get("h", 0), coeffs.get("D", 0))
    raise ScriptSyntaxError(line, col, "a class over one basis, {H,E} or {h,D}")


def parse_node(token: str, d: int | None, line: int = 0, col: int = 0) -> SodNode:
    m = _NODE_RE.match(token)
    if m is None:
        raise ScriptSyntaxError(line, col, "a node like O(H-E), O_E(E), CAT(A_C)")
    head, body = m.groups()
    if head == "CAT":
        if not re.fullmatch(r"[A-Za-z0-9_*']+", body):
            raise ScriptSyntaxError(line, col, "a category name")
        return standard_opaque(body)
    cls = parse_class(body, line, col + len(head) + 1)
    if cls.basis_id != BASIS_HE:
        if d is None:
            raise ScriptSyntaxError(line, col,
                                    "an {H,E} class (no degree in scope)")
        cls = rewrite(cls, BASIS_HE, d)
    if head == "O":
        return LineBundle(cls)
    return TwistedStructureSheaf(head[-1], cls)


class _Line:
    """Whitespace tokens of one source line with column positions."""

    def __init__(self, number: int, text: str):
        self.number = number
        self.tokens: list[tuple[str, int]] = [
            (m.group(0), m.start() + 1) for m in re.finditer(r"\S+", text)]
        self.pos = 0

    def peek(self) -> tuple[str, int] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected: str | None = None) -> tuple[str, int]:
        tok = self.peek()
        if tok is None:
            last_col = self.tokens[-1][1] + len(self.tokens[-1][0]) if self.tokens else 1
            raise ScriptSyntaxError(self.number, last_col, expected or "more input")
        self.pos += 1
        if expected is not None and tok[0] != expected:
            raise ScriptSyntaxError(self.number, tok[1], f"'{expected}'")
        return tok

    def take_int(self, what: str) -> int:
        tok, col = self.take(None)
        if not re.fullmatch(r"-?\d+", tok):
            raise ScriptSyntaxError(self.number, col, what)
        return int(tok)

    def done(self) -> None:
        tok = self.peek()
        if tok is not None:
            raise ScriptSyntaxError(self.number, tok[1], "end of line")


def _strip_comment(text: str) -> str:
    return text.split("#", 1)[0]


def _parse_decomposition(ln: _Line, d: int | None, ambient: str) -> Decomposition:
    # the literal is the rest of the line: rejoin and split on <, ',', >
    tok = ln.peek()
    if tok is None:
        raise ScriptSyntaxError(ln.number, 1, "a decomposition literal")
    text = " ".join(t for t, _ in ln.tokens[ln.pos:])
    col = tok[1]
    ln.pos = len(ln.tokens)
    if not (text.startswith("<") and text.endswith(">")):
        raise ScriptSyntaxError(ln.number, col, "a literal of the form <...>")
    inner = text[1:-1].strip()
    if not inner:
        raise ScriptSyntaxError(ln.number, col + 1, "at least one node")
    nodes = [parse_node(part.strip(), d, ln.number, col)
             for part in inner.split(",")]
    return Decomposition(ambient, tuple(nodes))


def _parse_rule(keyword: str, ln: _Line) -> MutationRule:
    if keyword == "serre_rotate":
        direction, dcol = ln.take()
        if direction not in ("left", "right"):
            raise ScriptSyntaxError(ln.number, dcol, "'left' or 'right'")
        ln.take("at")
        span, col = ln.take()
        m = re.fullmatch(r"(\d+)\.\.(\d+)", span)
        if m is None:
            raise ScriptSyntaxError(ln.number, col, "a block like 1..2")
        ln.done()
        return MutationRule("serre_rotate", int(m.group(1)),
                            position_end=int(m.group(2)), direction=direction)
    if keyword == "triangle_exchange":
        ln.take("at")
        pos = ln.take_int("a position")
        ln.take("support")
        support, scol = ln.take()
        if support not in ("E", "D"):
            raise ScriptSyntaxError(ln.number, scol, "'E' or 'D'")
        ln.take("direction")
        direction = ln.take_int("a direction in 1..3")
        ln.done()
        return MutationRule("triangle_exchange", pos, support=support,
                            direction=direction)
    if keyword == "swap":
        ln.take("at")
        pos = ln.take_int("a position")
        ln.done()
        return MutationRule("swap", pos)
    if keyword == "fiber_rebase":
        ln.take("at")
        pos = ln.take_int("a position")
        ln.take("shift")
        shift, scol = ln.take()
        if shift not in ("+F", "-F"):
            raise ScriptSyntaxError(ln.number, scol, "'+F' or '-F'")
        ln.done()
        return MutationRule("fiber_rebase", pos, shift=shift)
    if keyword == "opaque_transpose":
        ln.take("at")
        pos = ln.take_int("a position")
        direction, dcol = ln.take()
        if direction not in ("left", "right"):
            raise ScriptSyntaxError(ln.number, dcol, "'left' or 'right'")
        ln.done()
        return MutationRule("opaque_transpose", pos, direction=direction)
    if keyword == "expand_blowup":
        ln.take("at")
        pos = ln.take_int("a position")
        ln.take("center")
        center, _ = ln.take()
        ln.take("codim")
        codim = ln.take_int("a codimension")
        ln.done()
        return MutationRule("expand_blowup", pos, center=center, codim=codim)
    raise AssertionError(keyword)


_RULE_KEYWORDS = ("serre_rotate", "triangle_exchange", "swap", "fiber_rebase",
                  "opaque_transpose", "expand_blowup")


def parse_script(text: str, name: str = "script") -> ReplayScript:
    """Parse a mutation script; the first error reports line and column."""
    lines = [_Line(i, _strip_comment(raw))
             for i, raw in enumerate(text.splitlines(), start=1)]
    lines = [ln for ln in lines if ln.tokens]
    if not lines:
        raise ScriptSyntaxError(1, 1, "a header line 'ambient Y d=<n>'")
    header = lines[0]
    header.take("ambient")
    header.take("Y")
    tok, col = header.take()
    m = re.fullmatch(r"d=(\d+)", tok)
    if m is None:
        raise ScriptSyntaxError(header.number, col, "d=<n>")
    d = int(m.group(1))
    header.done()
    ambient = f"Y{d}"

    axioms: list[Decomposition] = []
    rules: list[MutationRule] = []
    expected: Decomposition | None = None
    display_basis = BASIS_HE
    for ln in lines[1:]:
        if expected is not None:
            tok, col = ln.tokens[0]
            raise ScriptSyntaxError(ln.number, col, "nothing after 'expect'")
        keyword, col = ln.take()
        if keyword == "axiom":
            if rules:
                raise ScriptSyntaxError(ln.number, col,
                                        "axioms before the first rule")
            axioms.append(_parse_decomposition(ln, d, ambient))
        elif keyword == "expect":
            raw = " ".join(t for t, _ in ln.tokens[ln.pos:])
            bodies = re.findall(r"O(?:_[ED])?\(([^)]*)\)", raw)
            if any(re.search(r"[hD]", body) for body in bodies):
                display_basis = BASIS_hD
            expected = _parse_decomposition(ln, d, ambient)
        elif keyword in _RULE_KEYWORDS:
            rules.append(_parse_rule(keyword, ln))
        else:
            raise ScriptSyntaxError(ln.number, col,
                                    "axiom, expect or a rule keyword")
    if not axioms:
        raise ScriptSyntaxError(lines[-1].number, 1, "at least one axiom line")
    if expected is None:
        raise ScriptSyntaxError(lines[-1].number, 1, "a final expect line")
    return ReplayScript(name, d, tuple(axioms), tuple(rules), expected,
                        display_basis)


def render_script(script: ReplayScript) -> str:
    """Canonical text of a script; parsing it back gives an equal structure."""
    basis = script.display_basis
    d = script.d

    def dec_text(dec: Decomposition) -> str:
        return "<" + ", ".join(node_text(n, basis, d) for n in dec.nodes) + ">"

    out = [f"ambient Y d={script.d}"]
    out += [f"axiom {dec_text(a)}" for a in script.axioms]
    out += [r.text() for r in script.rules]
    out.append(f"expect {dec_text(script.expected)}")
    return "\n".join(out) + "\n"


def builtin_script_names() -> list[str]:
    files = resources.files("delpezzo") / "data"
    return sorted(p.name[:-4] for p in files.iterdir() if p.name.endswith(".sod"))


def load_builtin_script(name: str) -> ReplayScript:
    base = name[:-4] if name.endswith(".sod") else name
    path = resources.files("delpezzo") / "data" / f"{base}.sod"
    if not path.is_file():
        raise InstanceFormatError(
            f"no builtin script {name!r}; available: "
            + ", ".join(builtin_script_names()))
    return parse_script(path.read_text(), name=base)


# -- hypersurface instances (.hyp) ------------------------------------------

def _parse_fraction(tok: str, line: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise InstanceFormatError(f"line {line}: bad rational {tok!r}") from None


def parse_instance(text: str):
    """Parse a .hyp file into (space, degree, nodes, coefficients or None)."""
    weights = degree = None
    nodes: list[tuple[Fraction, ...]] = []
    coeffs: list[Fraction] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = _strip_comment(raw).split()
        if not parts:
            continue
        key, rest = parts[0], parts[1:]
        if key == "weights":
            weights = tuple(int(w) for w in rest)
        elif key == "degree":
            if len(rest) != 1:
                raise InstanceFormatError(f"line {lineno}: degree takes one value")
            degree = int(rest[0])
        elif key == "node":
            nodes.append(tuple(_parse_fraction(t, lineno) for t in rest))
        elif key == "coeffs":
            coeffs = [_parse_fraction(t, lineno) for t in rest]
        else:
            raise InstanceFormatError(
                f"line {lineno}: expected weights, degree, node or coeffs")
    if weights is None or degree is None:
        raise InstanceFormatError("instance needs 'weights' and 'degree' lines")
    space = WeightedSpace(weights)
    n = len(space.weights)
    for p in nodes:
        if len(p) != n:
            raise InstanceFormatError(f"node {p} has {len(p)} coordinates, "
                                      f"expected {n}")
    if coeffs is not None:
        expected = len(enumerate_monomials(space, degree))
        if len(coeffs) != expected:
            raise InstanceFormatError(
                f"coeffs line has {len(coeffs)} values, expected {expected}")
    return space, degree, nodes, coeffs


def render_instance(hyp: NodalHypersurface) -> str:
    out = ["weights " + " ".join(str(w) for w in hyp.ambient.weights),
           f"degree {hyp.degree}"]
    out += ["node " + " ".join(str(c) for c in p) for p in hyp.nodes]
    out.append("coeffs " + " ".join(str(c) for c in hyp.coefficients))
    return "\n".join(out) + "\n"


# -- quiver definitions -------------------------------------------------------

def parse_quiver(text: str) -> Quiver:
    """Quiver file: 'vertices ...', 'arrow <name> <src> <dst>' and
    'relation <arrow names...>' lines."""
    vertices: list[str] = []
    arrows: list[tuple[str, str, str]] = []
    relations: list[tuple[str, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = _strip_comment(raw).split()
        if not parts:
            continue
        key, rest = parts[0], parts[1:]
        if key == "vertices":
            vertices.extend(rest)
        elif key == "arrow":
            if len(rest) != 3:
                raise InstanceFormatError(
                    f"line {lineno}: arrow takes name, source, target")
            arrows.append((rest[1], rest[2], rest[0]))
        elif key == "relation":
            if not rest:
                raise InstanceFormatError(f"line {lineno}: empty relation")
            relations.append(tuple(rest))
        else:
            raise InstanceFormatError(
                f"line {lineno}: expected vertices, arrow or relation")
    if not vertices:
        raise InstanceFormatError("quiver needs a 'vertices' line")
    return Quiver.build(vertices, arrows, relations)


# -- intersection expressions -------------------------------------------------

def parse_intersection_expr(text: str) -> list[DivisorClass]:
    """Parse a degree-3 product like '(H-E)^3' or 'H^2*E' into factors."""
    factors: list[DivisorClass] = []
    pos = 0
    text = text.replace(" ", "")
    while pos < len(text):
        if factors:
            if text[pos] == "*":
                pos += 1
            elif text[pos] not in "(":
                pass
        if pos < len(text) and text[pos] == "(":
            end = text.find(")", pos)
            if end < 0:
                raise InstanceFormatError("unbalanced parenthesis")
            try:
                cls = parse_class(text[pos + 1:end])
            except ScriptSyntaxError as exc:
                raise InstanceFormatError(str(exc)) from None
            pos = end + 1
        else:
            m = re.match(r"-?\d*[HEhD]", text[pos:])
            if m is None:
                raise InstanceFormatError(
                    f"expected a class factor at {text[pos:]!r}")
            try:
                cls = parse_class(m.group(0))
            except ScriptSyntaxError as exc:
                raise InstanceFormatError(str(exc)) from None
            pos += m.end()
        power = 1
        if pos < len(text) and text[pos] == "^":
            m = re.match(r"\^(\d+)", text[pos:])
            if m is None:
                raise InstanceFormatError("expected an integer power after ^")
            power = int(m.group(1))
            pos += m.end()
        factors.extend([cls] * power)
    if len(factors) != 3:
        raise InstanceFormatError(
            f"intersection products are trilinear; got {len(factors)} factors")
    return factors
