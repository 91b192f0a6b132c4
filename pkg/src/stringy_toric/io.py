"""Text formats for polytopes and fans, and JSON-safe conversion of results.

Polytope files come in two flavours:

``matrix``
    First line ``d n``, then ``n`` rows of ``d`` integers (one vertex per row).
``palp``
    First line ``r c`` (trailing text ignored), then an ``r x c`` integer matrix.
    With ``r < c`` the columns are the vertices, with ``r > c`` the rows are.
    A square matrix is read as one vertex per row, with a warning.

Fan files::

    rays d n
    <n rows of d integers>
    cones m
    <m lines of ray indices, 0-based>
    divisor NAME a_1 ... a_n      (optional, repeatable; coefficients may be p/q)

Lines starting with ``#`` are ignored.  The divisor name ``K`` is reserved for
the anticanonical divisor (all coefficients 1), which is always present.
"""

import warnings
from fractions import Fraction

from .fan import Fan, TorusDivisor
from .lattice import primitive
from .polytope import Polytope

MAX_DIM = 8


class InputError(ValueError):
    pass


def _lines(text: str) -> list:
    out = []
    for raw in text.replace("\r\n", "\n").replace("\r", "\n").split("\n"):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def _ints(line: str, where: str) -> list:
    try:
        return [int(t) for t in line.split()]
    except ValueError:
        raise InputError(f"non-integer entry in {where}: {line!r}") from None


def _leading_ints(line: str, count: int, where: str) -> list:
    tokens = line.split()
    try:
        vals = [int(t) for t in tokens[:count]]
    except ValueError:
        raise InputError(f"malformed {where}: {line!r}") from None
    if len(vals) < count:
        raise InputError(f"malformed {where}: {line!r}")
    return vals


def _read_block(lines, start, fmt):
    """Parse one polytope starting at ``lines[start]``; return it and the
    index of the next unread line."""
    if start >= len(lines):
        raise InputError("missing header")
    if fmt == "matrix":
        header = _ints(lines[start], "header")
        if len(header) != 2:
            raise InputError(f"malformed header: {lines[start]!r}")
        rows_n, cols_n = header[1], header[0]
    elif fmt == "palp":
        rows_n, cols_n = _leading_ints(lines[start], 2, "header")
    else:
        raise InputError(f"unknown format {fmt!r}")
    if rows_n <= 0 or cols_n <= 0:
        raise InputError("header sizes must be positive")
    body = lines[start + 1 : start + 1 + rows_n]
    if len(body) != rows_n:
        raise InputError(f"expected {rows_n} rows, found {len(body)}")
    matrix = []
    for line in body:
        row = _ints(line, "matrix row")
        if len(row) != cols_n:
            raise InputError(f"ragged row: expected {cols_n} entries, got {len(row)}")
        matrix.append(row)
    if fmt == "palp":
        if rows_n < cols_n:
            vertices = [tuple(col) for col in zip(*matrix)]
        else:
            if rows_n == cols_n:
                warnings.warn("square PALP matrix read with one vertex per row")
            vertices = [tuple(r) for r in matrix]
    else:
        vertices = [tuple(r) for r in matrix]
    if len(vertices[0]) > MAX_DIM:
        raise InputError(f"dimension {len(vertices[0])} exceeds the supported maximum {MAX_DIM}")
    return Polytope(vertices), start + 1 + rows_n


def parse_polytope(text: str, fmt: str = "matrix") -> Polytope:
    lines = _lines(text)
    P, end = _read_block(lines, 0, fmt)
    if end != len(lines):
        raise InputError("trailing data after the matrix")
    return P


def parse_polytopes(text: str, fmt: str = "matrix") -> list:
    """A stream of concatenated polytope blocks."""
    lines = _lines(text)
    out, i = [], 0
    while i < len(lines):
        P, i = _read_block(lines, i, fmt)
        out.append(P)
    return out


def emit_polytope(P: Polytope, fmt: str = "matrix", orientation: str = "columns") -> str:
    """Serialize lattice vertices; ``orientation`` only matters for ``palp``."""
    if not P.is_lattice:
        raise ValueError("only lattice polytopes can be written")
    V = [list(v) for v in P.vertices]
    d, n = P.ambient_dim, P.n_vertices
    if fmt == "matrix":
        rows = V
        header = f"{d} {n}"
    elif fmt == "palp":
        if n < d:
            # either orientation would be read back transposed
            raise ValueError("PALP needs at least as many vertices as coordinates")
        if orientation == "columns" and d < n:
            rows = [list(c) for c in zip(*V)]
            header = f"{d} {n}"
        elif orientation == "rows" or d >= n:
            rows = V
            header = f"{n} {d}"
        else:
            raise ValueError(f"unknown orientation {orientation!r}")
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return "\n".join([header] + [" ".join(map(str, r)) for r in rows]) + "\n"


def parse_fan(text: str):
    """Return ``(fan, divisors)`` where ``divisors`` maps names to
    :class:`TorusDivisor` and always contains ``"K"``."""
    lines = _lines(text)
    if not lines or not lines[0].startswith("rays"):
        raise InputError("fan file must start with 'rays d n'")
    head = lines[0].split()
    if len(head) != 3:
        raise InputError(f"malformed rays header: {lines[0]!r}")
    d, n = _ints(" ".join(head[1:]), "rays header")
    rays = []
    for line in lines[1 : 1 + n]:
        row = _ints(line, "ray")
        if len(row) != d:
            raise InputError(f"ray has {len(row)} entries, expected {d}")
        if not any(row):
            raise InputError("zero ray")
        p = primitive(row)
        if p != tuple(row):
            warnings.warn(f"ray {row} replaced by its primitive generator {list(p)}")
        rays.append(p)
    if len(rays) != n:
        raise InputError(f"expected {n} rays, found {len(rays)}")
    i = 1 + n
    if i >= len(lines) or not lines[i].startswith("cones"):
        raise InputError("missing 'cones m' line")
    parts = lines[i].split()
    if len(parts) != 2:
        raise InputError(f"malformed cones header: {lines[i]!r}")
    m = _ints(parts[1], "cones header")[0]
    cones = []
    for line in lines[i + 1 : i + 1 + m]:
        idx = _ints(line, "cone")
        if any(not 0 <= j < n for j in idx):
            raise InputError(f"cone index out of range in {line!r}")
        cones.append(idx)
    if len(cones) != m:
        raise InputError(f"expected {m} cones, found {len(cones)}")
    fan = Fan(rays, cones)
    divisors = {"K": TorusDivisor.anticanonical(fan)}
    for line in lines[i + 1 + m :]:
        parts = line.split()
        if parts[0] != "divisor" or len(parts) != n + 2:
            raise InputError(f"malformed divisor line: {line!r}")
        name = parts[1]
        if name in divisors:
            raise InputError(f"divisor name {name!r} is reserved or repeated")
        try:
            coeffs = tuple(Fraction(t) for t in parts[2:])
        except ValueError:
            raise InputError(f"bad divisor coefficient in {line!r}") from None
        divisors[name] = TorusDivisor(coeffs, name)
    return fan, divisors


def emit_fan(fan: Fan, divisors=None) -> str:
    out = [f"rays {fan.dim} {len(fan.rays)}"]
    out += [" ".join(map(str, r)) for r in fan.rays]
    out.append(f"cones {len(fan.max_cones)}")
    out += [" ".join(map(str, sorted(c))) for c in fan.max_cones]
    for name, D in (divisors or {}).items():
        if name != "K":
            out.append(f"divisor {name} " + " ".join(str(a) for a in D.coefficients))
    return "\n".join(out) + "\n"


def rational(x) -> str:
    """Exact string for a rational value: ``"p/q"`` or ``"n"``."""
    return str(Fraction(x))


def jsonable(x):
    """Recursively convert results into JSON-safe values.  Fractions become
    ``"p/q"`` strings; plain ints stay JSON integers."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return rational(x)
    if isinstance(x, dict):
        return {str(k) if not isinstance(k, str) else k: jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, frozenset, set)):
        items = sorted(x) if isinstance(x, (frozenset, set)) else x
        return [jsonable(v) for v in items]
    raise TypeError(f"cannot serialize {type(x).__name__}")
