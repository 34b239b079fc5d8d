"""Exact JSON payloads: parsing for the CLI input schemas, serialization back.

Rational numbers cross the boundary as "p/q" strings (or bare integer
literals on input) so no precision is ever lost.  Parsing is strict:
unknown fields, floats, booleans in numeric positions, ragged matrices
and shape mismatches are all rejected with the offending field named.
"""

import json
import re
from fractions import Fraction

from .algebra import FiniteDimAlgebra, Involution, InvolutiveOrder
from .errors import InvalidInputError
from .hermitian import HermitianModule
from .hodge import PolarisedComplexStructure
from .lattice import ZLattice

_RATIONAL = re.compile(r"-?\d+(/\d+)?\Z")


def parse_rational(value, where):
    if isinstance(value, bool):
        raise InvalidInputError("%s: expected a rational, got a boolean" % where)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL.match(value):
        try:
            return Fraction(value)
        except ZeroDivisionError:
            raise InvalidInputError("%s: zero denominator" % where)
    raise InvalidInputError(
        "%s: expected an integer or a 'p/q' string, got %r" % (where, value))


def parse_int(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInputError("%s: expected an integer, got %r" % (where, value))
    return value


def parse_vector(value, where, length=None):
    if not isinstance(value, list):
        raise InvalidInputError("%s: expected a list of rationals" % where)
    if length is not None and len(value) != length:
        raise InvalidInputError(
            "%s: expected %d entries, got %d" % (where, length, len(value)))
    return tuple(parse_rational(x, "%s[%d]" % (where, i))
                 for i, x in enumerate(value))


def parse_matrix(value, where, rows=None, cols=None):
    if not isinstance(value, list) or not value:
        raise InvalidInputError("%s: expected a nonempty list of rows" % where)
    if rows is not None and len(value) != rows:
        raise InvalidInputError(
            "%s: expected %d rows, got %d" % (where, rows, len(value)))
    width = cols if cols is not None else None
    out = []
    for i, row in enumerate(value):
        if not isinstance(row, list):
            raise InvalidInputError("%s[%d]: expected a list" % (where, i))
        if width is None:
            width = len(row)
        out.append(parse_vector(row, "%s[%d]" % (where, i), width))
    return tuple(out)


def serialize_rational(x):
    return str(Fraction(x))


def rational_matrix_json(M):
    return [[serialize_rational(x) for x in row] for row in M]


def int_matrix_json(M):
    return [[int(x) for x in row] for row in M]


def _as_object(data, fields):
    if not isinstance(data, dict):
        raise InvalidInputError("input: expected a JSON object")
    for key in data:
        if key not in fields:
            raise InvalidInputError("input: unexpected field %r" % key)
    for key in fields:
        if key not in data:
            raise InvalidInputError("%s: missing required field" % key)
    return data


def load_payload(text):
    try:
        return json.loads(text)
    except ValueError as exc:
        raise InvalidInputError("input: not valid JSON (%s)" % exc)


def parse_lattice(data):
    data = _as_object(data, ("gram",))
    gram = parse_matrix(data["gram"], "gram")
    if len(gram[0]) != len(gram):
        raise InvalidInputError("gram: expected a square matrix")
    return ZLattice(gram)


def _parse_algebra_fields(data):
    d = parse_int(data["dim"], "dim")
    if d < 1:
        raise InvalidInputError("dim: expected a positive integer")
    raw = data["structure_constants"]
    if not isinstance(raw, list) or len(raw) != d:
        raise InvalidInputError("structure_constants: expected %d planes" % d)
    structure = tuple(
        parse_matrix(plane, "structure_constants[%d]" % i, rows=d, cols=d)
        for i, plane in enumerate(raw)
    )
    one = parse_vector(data["one"], "one", d)
    algebra = FiniteDimAlgebra(structure, one)
    involution = Involution(algebra, parse_matrix(data["involution"], "involution", rows=d, cols=d))
    return algebra, involution


_ALGEBRA_FIELDS = ("dim", "structure_constants", "one", "involution")


def parse_algebra(data):
    """Algebra with involution; entries may be any rationals."""
    data = _as_object(data, _ALGEBRA_FIELDS)
    return _parse_algebra_fields(data)


def parse_order(data):
    """Involutive order: the algebra schema with integrality enforced."""
    data = _as_object(data, _ALGEBRA_FIELDS)
    algebra, involution = _parse_algebra_fields(data)
    return InvolutiveOrder(algebra, involution)


def parse_hermitian(data):
    data = _as_object(data, _ALGEBRA_FIELDS + ("action", "form"))
    algebra, involution = _parse_algebra_fields(
        {k: data[k] for k in _ALGEBRA_FIELDS})
    order = InvolutiveOrder(algebra, involution)
    d = order.dim
    raw_action = data["action"]
    if not isinstance(raw_action, list) or len(raw_action) != d:
        raise InvalidInputError("action: expected %d matrices" % d)
    if not raw_action or not isinstance(raw_action[0], list) or not raw_action[0]:
        raise InvalidInputError("action: expected a list of square matrices")
    N = len(raw_action[0])
    action = tuple(
        parse_matrix(mat, "action[%d]" % i, rows=N, cols=N)
        for i, mat in enumerate(raw_action)
    )
    raw_form = data["form"]
    if not isinstance(raw_form, list) or len(raw_form) != N:
        raise InvalidInputError("form: expected an %dx%d table" % (N, N))
    form = []
    for a, row in enumerate(raw_form):
        if not isinstance(row, list) or len(row) != N:
            raise InvalidInputError("form[%d]: expected %d entries" % (a, N))
        form.append(tuple(
            parse_vector(v, "form[%d][%d]" % (a, b), d) for b, v in enumerate(row)
        ))
    return HermitianModule(order, action, tuple(form))


def parse_hodge(data):
    data = _as_object(data, ("g", "J", "psi"))
    g = parse_int(data["g"], "g")
    if g < 1:
        raise InvalidInputError("g: expected a positive integer")
    J = parse_matrix(data["J"], "J", rows=2 * g, cols=2 * g)
    psi = parse_matrix(data["psi"], "psi", rows=2 * g, cols=2 * g)
    return PolarisedComplexStructure(J, psi)


def dumps(payload):
    """Deterministic rendering: fixed key order, two-space indent, newline."""
    return json.dumps(payload, indent=2) + "\n"
