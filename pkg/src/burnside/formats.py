"""Readers and writers for the on-disk exchange formats.

Covers MeatAxe-style text (mode 1 fixed-format matrices, mode 5 free-format
matrices, mode 12 permutation lists), a JSON wrapper for extension-field
matrices, table-of-marks and character-table JSON, straight-line program
text, and the E(n) expression language for cyclotomic values.  Permutation
images are 1-based on disk and 0-based in memory.  Every parser reports a
line and column on failure.
"""

from __future__ import annotations

import json
import re

from .chartab import CharacterRow, CharacterTable
from .cyclotomic import Cyclotomic
from .ffield import ExtField, FFMatrix, PrimeField
from .permgroup import Perm
from .slp import INV, MUL, POW, SLProgram
from .tom import TableOfMarks

__all__ = [
    "ParseError",
    "parse_chartab",
    "parse_cyclotomic",
    "parse_ext_matrix",
    "parse_fixed_vector",
    "parse_meataxe",
    "parse_slp",
    "parse_tom",
    "write_census_report",
    "write_chartab",
    "write_ext_matrix",
    "write_fixed_vector",
    "write_meataxe",
    "write_slp",
    "write_tom",
]


class ParseError(ValueError):
    """Input text does not conform to a format."""

    def __init__(self, message, line=None, col=None):
        where = ""
        if line is not None:
            where = f" at line {line}"
            if col is not None:
                where += f", column {col}"
        super().__init__(message + where)
        self.line = line
        self.col = col


_INT = re.compile(r"[+-]?\d+\Z")


def _is_int(tok: str) -> bool:
    return bool(_INT.match(tok))


def _tokens(lines, start):
    for lineno, line in enumerate(lines[start:], start + 1):
        for m in re.finditer(r"\S+", line):
            yield lineno, m.start() + 1, m.group()


# ---------------------------------------------------------------------------
# MeatAxe-style text


def parse_meataxe(text: str):
    """Matrix (modes 1 and 5) or permutation list (mode 12).

    Header is four integers `mode q rows cols`.  Mode 1: rows*cols digits in
    row-major order with arbitrary line breaks, each below q (q prime, <= 9).
    Mode 5: rows*cols whitespace-separated integers reduced mod q (q prime).
    Mode 12: q = 1 and `cols` permutations of degree `rows`, one image per
    token in permutation-major order.
    """
    lines = text.splitlines()
    if not lines or not lines[0].split():
        raise ParseError("missing header", 1, 1)
    head = lines[0].split()
    if len(head) != 4 or not all(_is_int(t) for t in head):
        raise ParseError("header must be four integers: mode q rows cols", 1, 1)
    mode, q, rows, cols = (int(t) for t in head)
    if mode not in (1, 5, 12):
        raise ParseError(f"unsupported mode {mode}", 1, 1)
    if rows < 0 or cols < 0:
        raise ParseError("dimensions must be nonnegative", 1, 1)
    if mode == 12:
        if q != 1:
            raise ParseError("mode 12 requires q = 1", 1, 1)
        return _parse_perms(lines, rows, cols)
    try:
        field = PrimeField(q)
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1) from None
    if mode == 1:
        if q > 9:
            raise ParseError("mode 1 requires q <= 9", 1, 1)
        return _parse_mode1(lines, field, rows, cols)
    return _parse_mode5(lines, field, rows, cols)


def _parse_mode1(lines, field, rows, cols):
    need = rows * cols
    entries = []
    for lineno, line in enumerate(lines[1:], 2):
        for col, ch in enumerate(line, 1):
            if ch.isspace():
                continue
            if not ch.isdigit():
                raise ParseError(f"unexpected character {ch!r}", lineno, col)
            if len(entries) == need:
                raise ParseError("more digits than rows*cols", lineno, col)
            v = int(ch)
            if v >= field.q:
                raise ParseError(f"digit {v} not below field size {field.q}", lineno, col)
            entries.append(v)
    if len(entries) != need:
        raise ParseError(f"expected {need} digits, found {len(entries)}", len(lines), 1)
    return FFMatrix(field, rows, cols, entries)


def _parse_mode5(lines, field, rows, cols):
    need = rows * cols
    entries = []
    for lineno, col, tok in _tokens(lines, 1):
        if not _is_int(tok):
            raise ParseError(f"expected an integer, found {tok!r}", lineno, col)
        if len(entries) == need:
            raise ParseError("more entries than rows*cols", lineno, col)
        entries.append(int(tok) % field.p)
    if len(entries) != need:
        raise ParseError(f"expected {need} entries, found {len(entries)}", len(lines), 1)
    return FFMatrix(field, rows, cols, entries)


def _parse_perms(lines, degree, count):
    stream = []
    for lineno, col, tok in _tokens(lines, 1):
        if not _is_int(tok):
            raise ParseError(f"expected an integer, found {tok!r}", lineno, col)
        stream.append((lineno, col, int(tok)))
    if len(stream) != degree * count:
        raise ParseError(
            f"expected {degree * count} images, found {len(stream)}", len(lines), 1
        )
    perms = []
    for c in range(count):
        images = []
        seen = set()
        for r in range(degree):
            lineno, col, v = stream[c * degree + r]
            if not 1 <= v <= degree:
                raise ParseError(f"image {v} outside 1..{degree}", lineno, col)
            if v in seen:
                raise ParseError(f"repeated image {v}", lineno, col)
            seen.add(v)
            images.append(v - 1)
        perms.append(Perm(images))
    return perms


def write_meataxe(obj, mode: int | None = None) -> str:
    """Inverse of parse_meataxe; `obj` is an FFMatrix or a list of Perm."""
    if isinstance(obj, FFMatrix):
        field = obj.field
        if field.k != 1:
            raise ValueError("extension-field matrices use the JSON wrapper format")
        if mode is None:
            mode = 1 if field.q <= 9 else 5
        if mode == 1:
            if field.q > 9:
                raise ValueError("mode 1 requires q <= 9")
            body = [
                "".join(str(v) for v in obj.row(i)) for i in range(obj.rows)
            ]
        elif mode == 5:
            body = [
                " ".join(str(v) for v in obj.row(i)) for i in range(obj.rows)
            ]
        else:
            raise ValueError(f"matrices cannot be written in mode {mode}")
        head = f"{mode} {field.q} {obj.rows} {obj.cols}"
        return "\n".join([head] + body) + "\n"
    perms = list(obj)
    if mode not in (None, 12):
        raise ValueError(f"permutations cannot be written in mode {mode}")
    if not perms:
        raise ValueError("nothing to write: empty permutation list")
    degree = perms[0].degree
    if any(p.degree != degree for p in perms):
        raise ValueError("permutations must share one degree")
    body = [str(x + 1) for p in perms for x in p.images]
    return "\n".join([f"12 1 {degree} {len(perms)}"] + body) + "\n"


# ---------------------------------------------------------------------------
# JSON helpers


def _load_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def _require(data, key, kinds, what):
    if key not in data:
        raise ParseError(f"{what}: missing field {key!r}", 1, 1)
    if not isinstance(data[key], kinds):
        raise ParseError(f"{what}: field {key!r} has the wrong type", 1, 1)
    return data[key]


# ---------------------------------------------------------------------------
# extension-field matrices (blow-up inputs)


def parse_ext_matrix(text: str) -> FFMatrix:
    """Matrix over GF(p^k) from the JSON wrapper.

    Fields: p, k, rows, cols, entries (rows of coefficient lists in
    ascending degree), optional modulus (ascending, monic, length k+1).
    """
    data = _load_json(text)
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object", 1, 1)
    p = _require(data, "p", int, "ext matrix")
    k = _require(data, "k", int, "ext matrix")
    rows = _require(data, "rows", int, "ext matrix")
    cols = _require(data, "cols", int, "ext matrix")
    body = _require(data, "entries", list, "ext matrix")
    modulus = data.get("modulus")
    try:
        field = ExtField(p, k, tuple(modulus) if modulus is not None else None)
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1) from None
    if len(body) != rows:
        raise ParseError(f"expected {rows} entry rows, found {len(body)}", 1, 1)
    entries = []
    for i, row in enumerate(body):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"entry row {i + 1} must be a list of {cols} scalars", 1, 1)
        for j, scalar in enumerate(row):
            if not isinstance(scalar, list) or len(scalar) > k or not all(
                isinstance(c, int) for c in scalar
            ):
                raise ParseError(
                    f"entry ({i + 1},{j + 1}) must be a coefficient list of length <= {k}",
                    1,
                    1,
                )
            entries.append(field.from_coeffs(scalar))
    return FFMatrix(field, rows, cols, entries)


def write_ext_matrix(m: FFMatrix) -> str:
    field = m.field
    if field.k == 1:
        raise ValueError("prime-field matrices use the MeatAxe text format")
    data = {
        "p": field.p,
        "k": field.k,
        "modulus": list(field.modulus),
        "rows": m.rows,
        "cols": m.cols,
        "entries": [
            [list(field.coeffs(m[i, j])) for j in range(m.cols)]
            for i in range(m.rows)
        ],
    }
    return json.dumps(data, indent=1) + "\n"


# ---------------------------------------------------------------------------
# tables of marks


def parse_tom(text: str) -> TableOfMarks:
    """Table of marks from JSON: n_classes, orders, sparse 1-based marks
    triples [i, j, m] with j <= i, and optional per-class SLP texts."""
    data = _load_json(text)
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object", 1, 1)
    n = _require(data, "n_classes", int, "tom")
    orders = _require(data, "orders", list, "tom")
    triples = _require(data, "marks", list, "tom")
    if n < 1:
        raise ParseError("tom: n_classes must be positive", 1, 1)
    if len(orders) != n or not all(isinstance(o, int) for o in orders):
        raise ParseError(f"tom: orders must be {n} integers", 1, 1)
    dense = [[0] * n for _ in range(n)]
    seen = set()
    for t in triples:
        if not (isinstance(t, list) and len(t) == 3 and all(isinstance(x, int) for x in t)):
            raise ParseError(f"tom: marks entry {t!r} is not an [i, j, m] triple", 1, 1)
        i, j, m = t
        if not 1 <= i <= n or not 1 <= j <= n:
            raise ParseError(f"tom: marks position ({i},{j}) outside 1..{n}", 1, 1)
        if j > i:
            raise ParseError(f"tom: mark ({i},{j}) above the diagonal", 1, 1)
        if (i, j) in seen:
            raise ParseError(f"tom: duplicate mark for ({i},{j})", 1, 1)
        seen.add((i, j))
        dense[i - 1][j - 1] = m
    slps = None
    if data.get("slps") is not None:
        texts = data["slps"]
        if not isinstance(texts, list) or not all(isinstance(s, str) for s in texts):
            raise ParseError("tom: slps must be a list of program texts", 1, 1)
        if len(texts) != n:
            raise ParseError(f"tom: expected {n} programs, found {len(texts)}", 1, 1)
        # every class program reads the same generator list, so align all
        # programs to the widest inferred input count
        progs = [parse_slp(s) for s in texts]
        width = max(p.n_inputs for p in progs)
        slps = tuple(SLProgram(width, p.statements, p.returns) for p in progs)
    try:
        return TableOfMarks(n, tuple(orders), tuple(tuple(r) for r in dense), slps)
    except ValueError as exc:
        raise ParseError(f"tom: {exc}", 1, 1) from None


def write_tom(tom: TableOfMarks) -> str:
    triples = [
        [i + 1, j + 1, tom.marks[i][j]]
        for i in range(tom.n)
        for j in range(i + 1)
        if tom.marks[i][j]
    ]
    data = {
        "n_classes": tom.n,
        "orders": list(tom.orders),
        "marks": triples,
    }
    if tom.slps is not None:
        data["slps"] = [write_slp(p) for p in tom.slps]
    return json.dumps(data, indent=1) + "\n"


# ---------------------------------------------------------------------------
# fixed vectors


def parse_fixed_vector(text: str) -> list:
    data = _load_json(text)
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object", 1, 1)
    values = _require(data, "values", list, "fixed vector")
    if not all(isinstance(v, int) for v in values):
        raise ParseError("fixed vector: values must be integers", 1, 1)
    return values


def write_fixed_vector(values) -> str:
    return json.dumps({"values": list(values)}) + "\n"


# ---------------------------------------------------------------------------
# straight-line programs


_SLP_MUL = re.compile(r"r(\d+)\s*=\s*r(\d+)\s*\*\s*r(\d+)\Z")
_SLP_POW = re.compile(r"r(\d+)\s*=\s*r(\d+)\s*\^\s*([+-]?\d+)\Z")


def parse_slp(text: str, n_inputs: int | None = None) -> SLProgram:
    """Program from one statement per line plus a final `return` line.

    Statements are `rK = rI * rJ`, `rK = rI^-1`, `rK = rI^E`.  Slots read
    before being assigned are inputs; when n_inputs is not given it is
    inferred as the largest such slot (at least 1).  A bare `return` encodes
    the empty result list.
    """
    statements = []
    returns = None
    defined = set()
    max_input = 1

    def operand(slot):
        nonlocal max_input
        if slot not in defined:
            max_input = max(max_input, slot)

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if returns is not None:
            raise ParseError("statement after return", lineno, 1)
        if line == "return" or line.startswith("return "):
            rest = line[len("return") :].strip()
            if not rest:
                returns = ()
                continue
            slots = []
            for part in rest.split(","):
                part = part.strip()
                m = re.fullmatch(r"r(\d+)", part)
                if not m:
                    raise ParseError(f"bad return slot {part!r}", lineno, 1)
                slot = int(m.group(1))
                operand(slot)
                slots.append(slot)
            returns = tuple(slots)
            continue
        m = _SLP_MUL.match(line)
        if m:
            tgt, a, b = (int(g) for g in m.groups())
            operand(a)
            operand(b)
            statements.append((tgt, MUL, a, b))
            defined.add(tgt)
            continue
        m = _SLP_POW.match(line)
        if m:
            tgt, a, e = (int(g) for g in m.groups())
            operand(a)
            statements.append((tgt, INV, a) if e == -1 else (tgt, POW, a, e))
            defined.add(tgt)
            continue
        raise ParseError(f"unrecognized statement {line!r}", lineno, 1)
    if returns is None:
        raise ParseError("missing return line", max(1, len(text.splitlines())), 1)
    if n_inputs is None:
        n_inputs = max_input
    try:
        return SLProgram(n_inputs, tuple(statements), returns)
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1) from None


def write_slp(prog: SLProgram) -> str:
    lines = []
    for st in prog.statements:
        if st[1] == MUL:
            lines.append(f"r{st[0]} = r{st[2]} * r{st[3]}")
        elif st[1] == INV:
            lines.append(f"r{st[0]} = r{st[2]}^-1")
        else:
            lines.append(f"r{st[0]} = r{st[2]}^{st[3]}")
    if prog.returns:
        lines.append("return " + ", ".join(f"r{s}" for s in prog.returns))
    else:
        lines.append("return")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# cyclotomic expressions


class _ExprParser:
    """Recursive descent for: expr := term (('+'|'-') term)*;
    term := factor ('*' factor)*;
    factor := int | int '/' int | 'E(' int ')' ('^' int)? | '(' expr ')' | '-' factor
    """

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message):
        before = self.text[: self.pos]
        line = before.count("\n") + 1
        col = self.pos - (before.rfind("\n") + 1) + 1
        raise ParseError(message, line, col)

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self, signed=False):
        self.ws()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or not self.text[start:self.pos].lstrip("+-"):
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def expr(self):
        value = self.term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                value = value + self.term()
            elif ch == "-":
                self.pos += 1
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.factor()
        while self.peek() == "*":
            self.pos += 1
            value = value * self.factor()
        return value

    def factor(self):
        ch = self.peek()
        if ch == "-":
            self.pos += 1
            return -self.factor()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            self.take(")")
            return value
        if ch == "E":
            self.pos += 1
            self.take("(")
            at = self.pos
            n = self.integer(signed=True)
            if n < 1:
                self.pos = at
                self.error(f"E({n}): level must be positive")
            self.take(")")
            e = 1
            if self.peek() == "^":
                self.pos += 1
                e = self.integer(signed=True)
            return Cyclotomic.zeta(n, e)
        if ch.isdigit():
            num = self.integer()
            if self.peek() == "/":
                self.pos += 1
                at = self.pos
                den = self.integer()
                if den == 0:
                    self.pos = at
                    self.error("division by zero")
                return Cyclotomic(1, (num,)) / den
            return Cyclotomic(1, (num,))
        self.error("expected a value")


def parse_cyclotomic(text: str) -> Cyclotomic:
    parser = _ExprParser(text)
    value = parser.expr()
    if parser.peek():
        parser.error("unexpected trailing text")
    return value


# ---------------------------------------------------------------------------
# character tables


def parse_chartab(text: str) -> CharacterTable:
    """Character table from JSON: name, n_classes, optional class_names,
    irreducibles as rows of E(n)-expression strings, optional prime."""
    data = _load_json(text)
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object", 1, 1)
    name = _require(data, "name", str, "character table")
    n = _require(data, "n_classes", int, "character table")
    body = _require(data, "irreducibles", list, "character table")
    class_names = data.get("class_names") or ()
    if class_names and (
        not isinstance(class_names, list)
        or not all(isinstance(c, str) for c in class_names)
    ):
        raise ParseError("character table: class_names must be strings", 1, 1)
    prime = data.get("prime")
    if prime is not None and not isinstance(prime, int):
        raise ParseError("character table: prime must be an integer", 1, 1)
    rows = []
    for i, row in enumerate(body, 1):
        if not isinstance(row, list) or len(row) != n or not all(
            isinstance(s, str) for s in row
        ):
            raise ParseError(
                f"character table: row {i} must be {n} expression strings", 1, 1
            )
        values = []
        for j, expr in enumerate(row, 1):
            try:
                values.append(parse_cyclotomic(expr))
            except ParseError as exc:
                raise ParseError(f"row {i}, entry {j}: {exc}", 1, 1) from None
        try:
            rows.append(CharacterRow(tuple(values)))
        except ValueError as exc:
            raise ParseError(f"character table: row {i}: {exc}", 1, 1) from None
    try:
        return CharacterTable(name, tuple(rows), tuple(class_names), prime)
    except ValueError as exc:
        raise ParseError(f"character table: {exc}", 1, 1) from None


def write_chartab(table: CharacterTable) -> str:
    data = {
        "name": table.name,
        "n_classes": table.n_classes,
    }
    if table.class_names:
        data["class_names"] = list(table.class_names)
    data["irreducibles"] = [
        [str(v) for v in row.values] for row in table.rows
    ]
    if table.prime is not None:
        data["prime"] = table.prime
    return json.dumps(data, indent=1) + "\n"


# ---------------------------------------------------------------------------
# census reports


def write_census_report(report) -> str:
    data = {
        "q": report.q,
        "dim": report.dim,
        "fixed": list(report.fixed),
        "decomp": list(report.decomp),
        "nonzeropos": list(report.nonzeropos),
        "staborders": list(report.staborders),
        "regular_orbits": report.regular_orbits,
    }
    return json.dumps(data, indent=1) + "\n"
