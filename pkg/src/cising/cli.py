"""Job-file front end.

A job is a small JSON document declaring a ring, a polynomial map, and
optionally a point, a module presentation, or a DG module.  The command —
given on the command line, optionally echoed in the file — picks which
computation runs.  Reports are deterministic: the same job bytes produce
byte-identical output, and every report embeds the SHA-256 digest of the
job file so golden tests catch input drift.

Exit codes: 0 success; 1 parse or validation problem; 2 mathematical
precondition violated (point off the zero locus, inhomogeneous input, not a
regular sequence, nonzero linear part); 3 resource cap exceeded.
"""

import argparse
import hashlib
import json
import sys
from fractions import Fraction

from .chevalley import ce_cohomology, chevalley_cochain, extract_bracket
from .ciext import (
    DEFAULT_MAX_WIDTH,
    DGModule,
    GradedModulePresentation,
    coherence_report,
    default_window,
    ext_module,
    hstar_dims,
    minimal_resolution,
    minimize_dg,
    residue_field_module,
)
from .errors import (
    GradingError,
    NotRegularSequenceError,
    OffLocusError,
    ParseError,
    ReduceVariablesError,
    ResourceLimitError,
    ValidationError,
)
from .polyring import (
    DEFAULT_MAX_MONOMIALS,
    PolyRing,
    RingPresentation,
    hilbert_function,
    square_zero_filtration,
    tower_ring,
)
from .tangentlie import hessian_direct, hessian_snake, tangent_lie

COMMANDS = ("tangent", "chevalley", "resolve", "ext", "fgcheck",
            "tower", "squarezero", "minimize")

_TOP_KEYS = {"command", "variables", "weights", "order", "map", "point",
             "module", "dg", "degree", "window", "n"}

_DEGREE_DEFAULTS = {"chevalley": 8, "resolve": 10, "ext": 10,
                    "fgcheck": 10, "tower": 10, "minimize": 10}

_MAX_DEGREE = 64
_MAX_N = 64


# ---------------------------------------------------------------------------
# job loading and validation
# ---------------------------------------------------------------------------


def load_job(path):
    """Read a job file; returns ``(data, sha256-hex-digest)``."""
    try:
        with open(path, "rb") as handle:
            raw = handle.read()
    except OSError as err:
        raise ParseError(f"cannot read job file: {err}") from err
    digest = hashlib.sha256(raw).hexdigest()
    try:
        data = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, ValueError) as err:
        raise ParseError(f"job file is not valid JSON: {err}") from err
    if not isinstance(data, dict):
        raise ParseError("job file must be a JSON object")
    return data, digest


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


def _as_fraction(value):
    if _is_int(value):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise ValueError(f"not a rational: {value!r}")


class _JobChecker:
    """Collects validation findings for one job without running it."""

    def __init__(self, data, command, options):
        self.data = data
        self.command = command
        self.options = options
        self.findings = []
        self.ring = None

    def note(self, message):
        self.findings.append(message)

    def run(self):
        for key in sorted(set(self.data) - _TOP_KEYS):
            self.note(f"unknown field {key!r}")
        self._check_command()
        self._check_ring()
        self._check_map()
        self._check_point()
        self._check_module()
        self._check_dg()
        self._check_parameters()
        return self.findings

    def _check_command(self):
        declared = self.data.get("command")
        if declared is None:
            return
        if declared not in COMMANDS:
            self.note(f"unknown command {declared!r}")
        elif self.command is not None and declared != self.command:
            self.note(f"job file declares command {declared!r} but "
                      f"{self.command!r} was requested")

    def _check_ring(self):
        variables = self.data.get("variables")
        if not isinstance(variables, list) or not variables \
                or not all(isinstance(v, str) for v in variables):
            self.note("'variables' must be a nonempty list of names")
            return
        weights = self.data.get("weights")
        if weights is not None:
            if not isinstance(weights, list) \
                    or len(weights) != len(variables) \
                    or not all(_is_int(w) and w >= 1 for w in weights):
                self.note("'weights' must list a positive integer per variable")
                weights = None
        order = self.options.order or self.data.get("order") or "grevlex"
        if order not in ("grevlex", "lex"):
            self.note(f"unknown monomial order {order!r}")
            order = "grevlex"
        try:
            self.ring = PolyRing(variables, weights=weights, order=order)
        except (ParseError, ValidationError) as err:
            self.note(str(err))

    def _parse_all(self, field, strings):
        out = []
        for k, text in enumerate(strings):
            if not isinstance(text, str):
                self.note(f"{field}[{k}] must be a polynomial string")
                return None
            try:
                out.append(self.ring.parse(text))
            except ParseError as err:
                self.note(f"{field}[{k}]: {err}")
                return None
        return out

    def _check_map(self):
        polys = self.data.get("map")
        if polys is None:
            if self.command not in (None, "minimize"):
                self.note("'map' is required for this command")
            return
        if not isinstance(polys, list):
            self.note("'map' must be a list of polynomial strings")
            return
        if self.ring is not None:
            self._parse_all("map", polys)

    def _check_point(self):
        point = self.data.get("point")
        if point is None:
            return
        if not isinstance(point, list):
            self.note("'point' must be a list of rationals")
            return
        for k, value in enumerate(point):
            try:
                _as_fraction(value)
            except (ValueError, ZeroDivisionError):
                self.note(f"point[{k}] is not a rational: {value!r}")
        if self.ring is not None and len(point) != self.ring.nvars:
            self.note(f"point has {len(point)} coordinates for "
                      f"{self.ring.nvars} variables")

    def _check_module(self):
        module = self.data.get("module")
        if module is None:
            return
        if not isinstance(module, dict):
            self.note("'module' must be an object with twists and relations")
            return
        for key in sorted(set(module) - {"twists", "relations"}):
            self.note(f"unknown module field {key!r}")
        twists = module.get("twists")
        if not isinstance(twists, list) or not twists \
                or not all(_is_int(t) for t in twists):
            self.note("module 'twists' must be a nonempty list of integers")
            return
        relations = module.get("relations", [])
        if not isinstance(relations, list):
            self.note("module 'relations' must be a list of columns")
            return
        for k, column in enumerate(relations):
            if not isinstance(column, list) or len(column) != len(twists):
                self.note(f"relation column {k} must list one entry per "
                          f"generator ({len(twists)})")
                return
            if self.ring is not None:
                if self._parse_all(f"relations[{k}]", column) is None:
                    return

    def _check_dg(self):
        dg = self.data.get("dg")
        if dg is None:
            if self.command == "minimize":
                self.note("'dg' is required for minimize")
            return
        if not isinstance(dg, dict):
            self.note("'dg' must be an object with degrees and matrix")
            return
        for key in sorted(set(dg) - {"degrees", "matrix"}):
            self.note(f"unknown dg field {key!r}")
        degrees = dg.get("degrees")
        if not isinstance(degrees, list) or not all(_is_int(d) for d in degrees):
            self.note("dg 'degrees' must be a list of integers")
            return
        matrix = dg.get("matrix")
        n = len(degrees)
        if not isinstance(matrix, list) or len(matrix) != n \
                or not all(isinstance(row, list) and len(row) == n
                           for row in matrix):
            self.note(f"dg 'matrix' must be a {n} by {n} list of rows")
            return
        if self.ring is None:
            return
        if any(w != 2 for w in self.ring.weights):
            self.note("dg rings must give every variable weight 2")
            return
        self._parse_all("dg matrix", [p for row in matrix for p in row])

    def _check_parameters(self):
        degree = self.options.degree
        if degree is None:
            degree = self.data.get("degree")
            if degree is not None and not _is_int(degree):
                self.note("'degree' must be an integer")
                degree = None
        if degree is not None and not 0 <= degree <= _MAX_DEGREE:
            self.note(f"degree {degree} outside 0..{_MAX_DEGREE}")
            degree = None
        n = self.options.n
        if n is None:
            n = self.data.get("n")
            if n is not None and not _is_int(n):
                self.note("'n' must be an integer")
                n = None
        if n is not None and not 1 <= n <= _MAX_N:
            self.note(f"n = {n} outside 1..{_MAX_N}")
        window = self.options.window
        if window is None:
            window = self.data.get("window")
            if window is not None and (
                    not isinstance(window, list) or len(window) != 2
                    or not all(_is_int(w) for w in window)):
                self.note("'window' must be a pair of integers")
                window = None
        if window is not None:
            lo, hi = window
            top = degree if degree is not None \
                else _DEGREE_DEFAULTS.get(self.command or "", 10)
            if lo > hi:
                self.note(f"window start {lo} exceeds end {hi}")
            elif lo < 2 or hi < lo + 2:
                self.note(f"window [{lo}, {hi}] too narrow: need "
                          "start >= 2 and end >= start + 2")
            elif hi > top:
                self.note(f"window end {hi} exceeds computed degree {top}")


def validate_job(data, command=None, options=None):
    """All validation findings for a job, without running it."""
    options = options or _Options()
    return _JobChecker(data, command, options).run()


# ---------------------------------------------------------------------------
# effective options
# ---------------------------------------------------------------------------


class _Options:
    """Command-line overrides plus resource caps."""

    __slots__ = ("fmt", "degree", "window", "order", "n",
                 "max_monomials", "max_width")

    def __init__(self, fmt="text", degree=None, window=None, order=None,
                 n=None, max_monomials=DEFAULT_MAX_MONOMIALS,
                 max_width=DEFAULT_MAX_WIDTH):
        self.fmt = fmt
        self.degree = degree
        self.window = window
        self.order = order
        self.n = n
        self.max_monomials = max_monomials
        self.max_width = max_width


def _effective_degree(command, data, options):
    degree = options.degree
    if degree is None:
        degree = data.get("degree", _DEGREE_DEFAULTS.get(command, 10))
    if not _is_int(degree) or not 0 <= degree <= _MAX_DEGREE:
        raise ValidationError(f"degree {degree!r} outside 0..{_MAX_DEGREE}")
    return degree


def _effective_window(data, options, top):
    window = options.window
    if window is None:
        window = data.get("window")
    if window is None:
        return default_window(top)
    if not isinstance(window, (list, tuple)) or len(window) != 2:
        raise ValidationError("'window' must be a pair of integers")
    return (int(window[0]), int(window[1]))


def _effective_n(data, options):
    n = options.n
    if n is None:
        n = data.get("n", 2)
    if not _is_int(n) or not 1 <= n <= _MAX_N:
        raise ValidationError(f"n = {n!r} outside 1..{_MAX_N}")
    return n


def _build_ring(data, options):
    variables = data.get("variables")
    if not isinstance(variables, list) or not variables:
        raise ValidationError("'variables' must be a nonempty list of names")
    weights = data.get("weights")
    order = options.order or data.get("order") or "grevlex"
    if order not in ("grevlex", "lex"):
        raise ValidationError(f"unknown monomial order {order!r}")
    return PolyRing(variables, weights=weights, order=order)


def _parse_map(ring, data, required=True):
    polys = data.get("map")
    if polys is None:
        if required:
            raise ValidationError("'map' is required for this command")
        return []
    if not isinstance(polys, list):
        raise ValidationError("'map' must be a list of polynomial strings")
    return [ring.parse(text) for text in polys]


def _parse_point(ring, data):
    point = data.get("point")
    if point is None:
        return [Fraction(0)] * ring.nvars
    if not isinstance(point, list) or len(point) != ring.nvars:
        raise ValidationError(
            f"'point' must list {ring.nvars} rational coordinates")
    try:
        return [_as_fraction(value) for value in point]
    except (ValueError, ZeroDivisionError) as err:
        raise ValidationError(f"bad point coordinate: {err}") from err


def _parse_module(rp, data):
    module = data.get("module")
    if module is None:
        return residue_field_module(rp)
    if not isinstance(module, dict) or "twists" not in module:
        raise ValidationError("'module' must be an object with 'twists'")
    twists = module["twists"]
    relations = module.get("relations", [])
    columns = [[rp.ring.parse(text) for text in column]
               for column in relations]
    return GradedModulePresentation(rp, twists, columns)


def _parse_dg(ring, data):
    dg = data.get("dg")
    if not isinstance(dg, dict) or "degrees" not in dg or "matrix" not in dg:
        raise ValidationError("'dg' must be an object with degrees and matrix")
    degrees = [int(d) for d in dg["degrees"]]
    matrix = [[ring.parse(text) for text in row] for row in dg["matrix"]]
    return DGModule(ring=ring, degrees=degrees, differential=matrix)


# ---------------------------------------------------------------------------
# command handlers: each returns (result, cross_checks)
# ---------------------------------------------------------------------------


def _matrix_strings(mat):
    return [[str(entry) for entry in row] for row in mat.rows]


def _columns_to_rows(columns, nrows):
    return [[str(column[r]) for column in columns] for r in range(nrows)]


def _run_tangent(data, options):
    ring = _build_ring(data, options)
    polys = _parse_map(ring, data)
    point = _parse_point(ring, data)
    fiber, direct = hessian_direct(polys, point)
    snake_fiber, snaked = hessian_snake(polys, point)
    agree = direct == snaked and fiber.jacobian == snake_fiber.jacobian
    bracket_tables = [
        [[str(direct[a][b][c]) for b in range(fiber.g1_dim)]
         for a in range(fiber.g1_dim)]
        for c in range(fiber.g2_dim)]
    result = {
        "point": [str(c) for c in fiber.point],
        "jacobian": _matrix_strings(fiber.jacobian),
        "g1_dim": fiber.g1_dim,
        "g2_dim": fiber.g2_dim,
        "kernel_basis": [[str(c) for c in vec] for vec in fiber.kernel],
        "bracket": bracket_tables,
    }
    return result, {"direct = snake": agree}


def _run_chevalley(data, options):
    ring = _build_ring(data, options)
    polys = _parse_map(ring, data)
    point = _parse_point(ring, data)
    degree = _effective_degree("chevalley", data, options)
    lie = tangent_lie(polys, point)
    ce = chevalley_cochain(lie)
    dims = ce_cohomology(ce, degree)
    result = {
        "even_generators": ce.even_count,
        "odd_generators": ce.odd_count,
        "differentials": [str(q) for q in ce.differentials],
        "degree": degree,
        "cohomology": [dims.row(p) for p in range(ce.odd_count + 1)],
        "positive_cohomology_vanishes": all(
            value == 0 for p in range(1, ce.odd_count + 1)
            for value in dims.row(p)),
    }
    return result, {"bracket round trip": extract_bracket(ce) == lie.bracket}


def _presentation_and_module(data, options):
    ring = _build_ring(data, options)
    ideal = _parse_map(ring, data)
    rp = RingPresentation(ring, ideal, max_monomials=options.max_monomials)
    module = _parse_module(rp, data)
    return rp, module


def _complex_composes_to_zero(rp, res):
    for i in range(1, res.length):
        outer = res.differential(i)
        for column in res.differential(i + 1):
            acc = [rp.ring.zero()] * res.betti[i - 1]
            for k, coefficient in enumerate(column):
                for r, entry in enumerate(outer[k]):
                    acc[r] = acc[r] + coefficient * entry
            if any(not rp.normal_form(p).is_zero() for p in acc):
                return False
    return True


def _run_resolve(data, options):
    rp, module = _presentation_and_module(data, options)
    degree = _effective_degree("resolve", data, options)
    res = minimal_resolution(rp, module, degree,
                             max_width=options.max_width,
                             max_monomials=options.max_monomials)
    result = {
        "length": res.length,
        "betti": list(res.betti),
        "twists": [list(t) for t in res.twists],
        "differentials": [
            _columns_to_rows(res.differential(i), res.betti[i - 1])
            for i in range(1, res.length + 1)],
    }
    checks = {
        "differentials compose to zero": _complex_composes_to_zero(rp, res),
        "no unit entries": res.is_minimal(),
    }
    return result, checks


def _operators_commute(ext):
    for j in range(len(ext.operators)):
        for l in range(j + 1, len(ext.operators)):
            for i in range(max(0, ext.top_degree - 3)):
                left = ext.operators[l][i + 2].mul(ext.operators[j][i])
                right = ext.operators[j][i + 2].mul(ext.operators[l][i])
                if left != right:
                    return False
    return True


def _run_ext(data, options):
    rp, module = _presentation_and_module(data, options)
    degree = _effective_degree("ext", data, options)
    ext = ext_module(rp, module, degree, max_width=options.max_width,
                     max_monomials=options.max_monomials)
    result = {
        "dims": list(ext.dims),
        "betti": list(ext.resolution.betti),
        "operators": [[_matrix_strings(op) for op in family]
                      for family in ext.operators],
    }
    return result, {"operators commute": _operators_commute(ext)}


def _run_fgcheck(data, options):
    rp, module = _presentation_and_module(data, options)
    degree = _effective_degree("fgcheck", data, options)
    window = _effective_window(data, options, degree)
    report = coherence_report(rp, module, window,
                              max_width=options.max_width,
                              max_monomials=options.max_monomials)
    verdict = report.verdict
    result = {
        "betti": list(report.betti),
        "dims": list(report.dims),
        "verdict": verdict.status,
        "window": list(verdict.window),
        "generator_degrees": list(verdict.generator_degrees),
        "certificate": verdict.certificate,
    }
    return result, {"operators commute": _operators_commute(report.ext)}


def _run_tower(data, options):
    ring = _build_ring(data, options)
    gens = _parse_map(ring, data)
    degree = _effective_degree("tower", data, options)
    n = _effective_n(data, options)
    tower = tower_ring(ring, gens, n, max_monomials=options.max_monomials)
    ambient = RingPresentation(ring, [], max_monomials=options.max_monomials)
    values = hilbert_function(tower, degree)
    ambient_values = hilbert_function(ambient, degree)
    agree = [d for d in range(degree + 1)
             if values[:d + 1] == ambient_values[:d + 1]]
    result = {
        "n": n,
        "hilbert": values,
        "ambient_hilbert": ambient_values,
        "agrees_with_ambient_through": max(agree, default=-1),
    }
    return result, {}


def _run_squarezero(data, options):
    ring = _build_ring(data, options)
    gens = _parse_map(ring, data)
    n = _effective_n(data, options)
    stages = square_zero_filtration(ring, gens, n,
                                    max_monomials=options.max_monomials)
    return ({"n": n, "stages": stages},
            {"all stages square to zero": all(stages)})


def _run_minimize(data, options):
    ring = _build_ring(data, options)
    dg = _parse_dg(ring, data)
    degree = _effective_degree("minimize", data, options)
    outcome = minimize_dg(dg, through=degree)
    minimal = outcome.minimal
    lo = min(dg.degrees, default=0) - 1
    preserved = hstar_dims(dg, lo, degree) == hstar_dims(minimal, lo, degree)
    no_units = all(p.constant_coefficient() == 0
                   for row in minimal.differential for p in row)
    result = {
        "input_degrees": list(dg.degrees),
        "minimal_degrees": list(minimal.degrees),
        "minimal_differential": [[str(p) for p in row]
                                 for row in minimal.differential],
        "perfect": outcome.perfect,
        "hstar": [[t, outcome.hstar[t]] for t in sorted(outcome.hstar)],
    }
    checks = {"cohomology preserved": preserved, "no unit entries": no_units}
    return result, checks


_HANDLERS = {
    "tangent": _run_tangent,
    "chevalley": _run_chevalley,
    "resolve": _run_resolve,
    "ext": _run_ext,
    "fgcheck": _run_fgcheck,
    "tower": _run_tower,
    "squarezero": _run_squarezero,
    "minimize": _run_minimize,
}


# ---------------------------------------------------------------------------
# report rendering
# ---------------------------------------------------------------------------


def _render_json(report):
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _aligned(rows, indent="  "):
    """Rows of cells -> lines with columns padded to equal width."""
    if not rows:
        return [indent + "(empty)"]
    ncols = max(len(row) for row in rows)
    widths = [max((len(str(row[c])) for row in rows if c < len(row)),
                  default=0) for c in range(ncols)]
    lines = []
    for row in rows:
        cells = [str(cell).rjust(widths[c]) for c, cell in enumerate(row)]
        lines.append((indent + "  ".join(cells)).rstrip())
    return lines


def _csv(values):
    return ", ".join(str(v) for v in values) if values else "(none)"


def _bool(value):
    return "true" if value else "false"


def _text_tangent(result, lines):
    lines.append(f"point: {_csv(result['point'])}")
    lines.append("jacobian:")
    lines.extend(_aligned(result["jacobian"]))
    lines.append(f"degree 1 dimension: {result['g1_dim']}")
    lines.append(f"degree 2 dimension: {result['g2_dim']}")
    lines.append("kernel basis (rows):")
    lines.extend(_aligned(result["kernel_basis"]))
    for c, table in enumerate(result["bracket"]):
        lines.append(f"bracket, output coordinate {c + 1}:")
        lines.extend(_aligned(table))


def _text_chevalley(result, lines):
    lines.append(f"even generators: {result['even_generators']}")
    lines.append(f"odd generators: {result['odd_generators']}")
    lines.append("differentials:")
    for q in result["differentials"]:
        lines.append(f"  {q}")
    lines.append(f"cohomology dimensions through degree {result['degree']} "
                 "(one row per exterior degree):")
    lines.extend(_aligned(result["cohomology"]))
    lines.append("positive cohomology vanishes: "
                 + _bool(result["positive_cohomology_vanishes"]))


def _text_resolve(result, lines):
    lines.append(f"length: {result['length']}")
    lines.append("betti numbers: " + _csv(result["betti"]))
    lines.append("generator twists per step:")
    for i, twists in enumerate(result["twists"]):
        lines.append(f"  step {i}: {_csv(twists)}")
    for i, rows in enumerate(result["differentials"]):
        lines.append(f"differential {i + 1}:")
        lines.extend(_aligned(rows))


def _text_ext(result, lines):
    lines.append("dimensions: " + _csv(result["dims"]))
    lines.append("betti numbers: " + _csv(result["betti"]))
    for j, family in enumerate(result["operators"]):
        for i, matrix in enumerate(family):
            lines.append(f"operator {j + 1}, degree {i} -> {i + 2}:")
            lines.extend(_aligned(matrix))


def _text_fgcheck(result, lines):
    lines.append("betti numbers: " + _csv(result["betti"]))
    lines.append("dimensions: " + _csv(result["dims"]))
    lines.append(f"verdict: {result['verdict']}")
    lines.append(f"window: {result['window'][0]}..{result['window'][1]}")
    lines.append("generator degrees: " + _csv(result["generator_degrees"]))
    certificate = result["certificate"]
    if certificate is None:
        lines.append("certificate: (none)")
    else:
        lines.append("certificate:")
        for key in sorted(certificate):
            value = certificate[key]
            rendered = _csv(value) if isinstance(value, list) else str(value)
            lines.append(f"  {key}: {rendered}")


def _text_tower(result, lines):
    lines.append(f"n: {result['n']}")
    lines.append("hilbert function: " + _csv(result["hilbert"]))
    lines.append("ambient hilbert function: " + _csv(result["ambient_hilbert"]))
    lines.append("agrees with ambient through degree: "
                 + str(result["agrees_with_ambient_through"]))


def _text_squarezero(result, lines):
    lines.append(f"n: {result['n']}")
    lines.append("stages: " + _csv([_bool(s) for s in result["stages"]]))


def _text_minimize(result, lines):
    lines.append("input degrees: " + _csv(result["input_degrees"]))
    lines.append("minimal degrees: " + _csv(result["minimal_degrees"]))
    lines.append("minimal differential:")
    lines.extend(_aligned(result["minimal_differential"]))
    lines.append(f"perfect: {_bool(result['perfect'])}")
    lines.append("cohomology dimensions:")
    lines.extend(_aligned([["degree", "dim"]] + result["hstar"]))


def _text_validate(result, lines):
    findings = result["findings"]
    if not findings:
        lines.append("findings: none")
    else:
        lines.append(f"findings: {len(findings)}")
        for k, finding in enumerate(findings):
            lines.append(f"  {k + 1}. {finding}")


_TEXT_SECTIONS = {
    "tangent": _text_tangent,
    "chevalley": _text_chevalley,
    "resolve": _text_resolve,
    "ext": _text_ext,
    "fgcheck": _text_fgcheck,
    "tower": _text_tower,
    "squarezero": _text_squarezero,
    "minimize": _text_minimize,
    "validate": _text_validate,
}


def _render_text(report):
    lines = [f"command: {report['command']}",
             f"input sha256: {report['input_sha256']}"]
    _TEXT_SECTIONS[report["command"]](report["result"], lines)
    checks = report["cross_checks"]
    if checks:
        lines.append("cross-checks:")
        for key in checks:
            lines.append(f"  {key}: {_bool(checks[key])}")
    lines.append("status: ok")
    return "\n".join(lines) + "\n"


def _render(report, fmt):
    return _render_json(report) if fmt == "json" else _render_text(report)


# ---------------------------------------------------------------------------
# entry points
# ---------------------------------------------------------------------------


def run_job(command, path, options=None):
    """Execute one job; returns ``(exit_code, rendered_report)``.

    Raises the package exceptions on bad input; :func:`main` maps them onto
    exit codes and stderr messages.
    """
    options = options or _Options()
    data, digest = load_job(path)
    if command == "validate":
        declared = data.get("command")
        check_command = declared if declared in COMMANDS else None
        findings = validate_job(data, check_command, options)
        report = {
            "command": "validate",
            "input_sha256": digest,
            "result": {"findings": findings},
            "cross_checks": {},
        }
        return 0, _render(report, options.fmt)
    declared = data.get("command")
    if declared is not None and declared != command:
        raise ValidationError(
            f"job file declares command {declared!r} but {command!r} "
            "was requested")
    result, checks = _HANDLERS[command](data, options)
    report = {
        "command": command,
        "input_sha256": digest,
        "result": result,
        "cross_checks": checks,
    }
    return 0, _render(report, options.fmt)


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _parse_window_flag(text):
    parts = text.split(":")
    if len(parts) != 2:
        raise ParseError(f"window must look like D0:D, got {text!r}")
    try:
        return [int(parts[0]), int(parts[1])]
    except ValueError as err:
        raise ParseError(f"window must be integers D0:D, got {text!r}") from err


def build_parser():
    parser = _ArgumentParser(
        prog="cising",
        description="Exact computations with graded quotient rings: "
                    "tangent brackets, cochain cohomology, minimal "
                    "resolutions, operator actions, and finite-generation "
                    "checks.")
    parser.add_argument("command", choices=COMMANDS + ("validate",),
                        help="what to compute")
    parser.add_argument("jobfile", help="path to a JSON job file")
    parser.add_argument("--format", choices=("text", "json"), default="text",
                        help="report rendering (default text)")
    parser.add_argument("--degree", type=int, default=None,
                        help="degree bound override")
    parser.add_argument("--window", default=None,
                        help="verdict window as D0:D")
    parser.add_argument("--order", choices=("grevlex", "lex"), default=None,
                        help="monomial order override")
    parser.add_argument("--n", type=int, default=None,
                        help="thickening order override")
    parser.add_argument("--max-monomials", type=int,
                        default=DEFAULT_MAX_MONOMIALS,
                        help="cap on tracked monomials per basis run")
    parser.add_argument("--max-width", type=int, default=DEFAULT_MAX_WIDTH,
                        help="cap on resolution width")
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        options = _Options(
            fmt=args.format,
            degree=args.degree,
            window=_parse_window_flag(args.window) if args.window else None,
            order=args.order,
            n=args.n,
            max_monomials=args.max_monomials,
            max_width=args.max_width,
        )
        code, rendered = run_job(args.command, args.jobfile, options)
    except (ParseError, ValidationError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (GradingError, OffLocusError, NotRegularSequenceError,
            ReduceVariablesError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ResourceLimitError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    sys.stdout.write(rendered)
    return code


if __name__ == "__main__":
    sys.exit(main())
