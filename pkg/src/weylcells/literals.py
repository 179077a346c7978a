"""Element literal grammar shared by the CLI and the test fixtures.

    w:0,1,2,1        word in the generators s_0..s_n (empty after w: is e)
    t:[a1,...,an]    translation by sum a_i lambda_i
    t:[...]*w:...    products, evaluated left to right
    [v1,...,vn]      family-A window (accepted only where a window is expected)
"""

from __future__ import annotations

from . import affine_group as ag
from .affine_group import GroupElement
from .root_system import RootSystem


class LiteralError(ValueError):
    pass


def _parse_int_list(body: str, what: str) -> list[int]:
    if not body.strip():
        return []
    try:
        return [int(tok.strip()) for tok in body.split(",")]
    except ValueError:
        raise LiteralError(f"unparseable {what}: {body!r}") from None


def parse_element(system: RootSystem, text: str) -> GroupElement:
    g = ag.identity(system)
    for token in text.split("*"):
        token = token.strip()
        if token.startswith("w:"):
            letters = _parse_int_list(token[2:], "generator word")
            for i in letters:
                if not 0 <= i <= system.rank:
                    raise LiteralError(
                        f"generator index {i} out of range 0..{system.rank} in {token!r}"
                    )
            g = ag.multiply(g, ag.from_word(system, letters))
        elif token.startswith("t:"):
            body = token[2:].strip()
            if not (body.startswith("[") and body.endswith("]")):
                raise LiteralError(f"translation literal needs brackets: {token!r}")
            coeffs = _parse_int_list(body[1:-1], "translation coefficients")
            if len(coeffs) != system.rank:
                raise LiteralError(
                    f"translation needs {system.rank} coefficients, got {len(coeffs)}"
                )
            g = ag.multiply(g, ag.translation_from_exponents(system, coeffs))
        else:
            raise LiteralError(f"unparseable element token: {token!r}")
    return g


def format_element(g: GroupElement) -> str:
    """Canonical literal from the normal form; parse round-trips it."""
    system = g.system
    coeffs = system.weight_coefficients(g.translation)
    finite = GroupElement(system, ag.zero_vector(system.dim), g.matrix)
    _, letters = ag.reduced_word(finite)
    t_part = "t:[" + ",".join(str(c) for c in coeffs) + "]"
    w_part = "w:" + ",".join(str(i) for i in letters)
    if any(coeffs) and letters:
        return t_part + "*" + w_part
    if any(coeffs):
        return t_part
    return w_part


def parse_window(text: str) -> list[int]:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise LiteralError(f"window literal needs brackets: {text!r}")
    values = _parse_int_list(text[1:-1], "window")
    if not values:
        raise LiteralError("window cannot be empty")
    return values
