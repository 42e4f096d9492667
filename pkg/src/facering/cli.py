"""Command-line front end.

    facering analyze <file>
    facering certify <file> --suite duality,lefschetz [--seed N] [--k N] [--gamma FILE] [--json PATH]
    facering experiment moment-curve <file> --params 1,2,3,4
    facering corpus list
    facering corpus run <suite> [--jobs N]

Exit codes: 0 all checks passed or were report-only, 1 some check failed,
2 usage or parse error, 3 mode error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import platform
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources

from . import __version__
from .algebra.artinian import ArtinianAlgebra
from .algebra.coords import explicit, generic, moment_curve, symbolic
from .algebra.gorenstein import gorensteinify, monomial_ideal
from .arith.fields import PrimeField, default_field, is_prime, make_field
from .certify.anisotropy import certify_char2_anisotropy
from .certify.certificate import FAIL, PASS, REPORT, Certificate, fingerprint
from .certify.checks import (
    LefschetzQuery,
    certify_biased_pairing,
    certify_hall_laman,
    certify_hard_lefschetz,
    certify_top_heavy,
    check_g_vector,
    check_poincare_duality,
    random_linear_form,
)
from .certify.experiments import moment_curve_probe
from .certify.identities import identity_suite
from .errors import DomainError, ModeError
from .simplicial.complex import SimplicialComplex
from .simplicial.homology import chain_from_labels, cycle_space, fundamental_class, pseudomanifold_check
from .simplicial.invariants import cm_check, fhg_vectors

FIELD_ENV = "FACERING_DEFAULT_FIELD"
SUITES = ("duality", "lefschetz", "top-heavy", "biased", "hall-laman", "anisotropy", "identities", "g-vector")


class DocumentError(ValueError):
    """Malformed complex document; `location` points into the JSON."""

    def __init__(self, location, message):
        super().__init__(f"{location}: {message}")
        self.location = location


def large_prime():
    """The prime behind characteristic 0 documents: $FACERING_DEFAULT_FIELD
    when set, else 2^61 - 1."""
    raw = os.environ.get(FIELD_ENV)
    if not raw:
        return default_field(0).p
    try:
        p = int(raw, 0) if not raw.startswith("2^") else _power_expr(raw)
    except ValueError as exc:
        raise DocumentError(f"${FIELD_ENV}", f"cannot read {raw!r}") from exc
    if not is_prime(p):
        raise DocumentError(f"${FIELD_ENV}", f"{p} is not prime")
    return p


def _power_expr(raw):
    # forms like 2^61-1 or 2^31-1
    base, _, rest = raw.partition("^")
    exp, sign, off = rest.partition("-")
    value = int(base) ** int(exp)
    return value - int(off) if sign else value


# ------------------------------------------------------------------ documents
@dataclass
class ComplexDocument:
    name: str
    vertices: list
    facets: list
    cycle: object = "fundamental"
    field: dict = field(default_factory=lambda: {"characteristic": 0})
    coordinates: object = "generic"
    note: str | None = None

    @classmethod
    def from_json(cls, data, where="document"):
        if not isinstance(data, dict):
            raise DocumentError(where, "expected a JSON object")
        for key in ("name", "vertices", "facets"):
            if key not in data:
                raise DocumentError(f"{where}.{key}", "missing")
        verts = data["vertices"]
        if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
            raise DocumentError(f"{where}.vertices", "expected a list of label strings")
        if len(set(verts)) != len(verts):
            raise DocumentError(f"{where}.vertices", "labels are not unique")
        facets = data["facets"]
        if not isinstance(facets, list) or not facets:
            raise DocumentError(f"{where}.facets", "expected a nonempty list of facets")
        for i, f in enumerate(facets):
            if not isinstance(f, list) or not f:
                raise DocumentError(f"{where}.facets[{i}]", "facets must be nonempty label lists")
            for j, v in enumerate(f):
                if v not in verts:
                    raise DocumentError(f"{where}.facets[{i}][{j}]", f"unknown vertex {v!r}")
        used = {v for f in facets for v in f}
        unused = [v for v in verts if v not in used]
        if unused:
            raise DocumentError(f"{where}.vertices", f"vertices {unused} lie in no facet")
        fld = data.get("field", {"characteristic": 0})
        if not isinstance(fld, dict) or not isinstance(fld.get("characteristic", 0), int):
            raise DocumentError(f"{where}.field", "expected {characteristic, extension_degree}")
        char = fld.get("characteristic", 0)
        if char != 0 and not is_prime(char):
            raise DocumentError(f"{where}.field.characteristic", f"{char} is neither 0 nor prime")
        ext = fld.get("extension_degree", 1)
        if not isinstance(ext, int) or ext < 1:
            raise DocumentError(f"{where}.field.extension_degree", "must be a positive integer")
        doc = cls(
            name=str(data["name"]),
            vertices=list(verts),
            facets=[list(f) for f in facets],
            cycle=data.get("cycle", "fundamental"),
            field=dict(fld),
            coordinates=data.get("coordinates", "generic"),
            note=data.get("note"),
        )
        doc._check_coordinates(where)
        doc._check_cycle(where)
        return doc

    def _check_coordinates(self, where):
        c = self.coordinates
        loc = f"{where}.coordinates"
        if isinstance(c, list):
            if not c or not all(isinstance(r, list) and len(r) == len(self.vertices) for r in c):
                raise DocumentError(loc, f"explicit matrix needs rows of length {len(self.vertices)}")
            if len(c) != self.complex().d:
                raise DocumentError(loc, f"explicit matrix needs {self.complex().d} rows")
            return
        if not isinstance(c, str):
            raise DocumentError(loc, "expected a mode string or a matrix")
        if c in ("generic", "symbolic") or c.startswith("generic:"):
            if c.startswith("generic:") and not c[8:].lstrip("-").isdigit():
                raise DocumentError(loc, "generic seed must be an integer")
            if c == "symbolic" and self.field.get("characteristic", 0) == 0:
                raise DocumentError(loc, "symbolic coordinates need a prime characteristic")
            return
        if c.startswith("moment-curve:"):
            try:
                params = json.loads(c[len("moment-curve:"):])
            except json.JSONDecodeError as exc:
                raise DocumentError(loc, "moment-curve parameters must be a JSON list") from exc
            if not isinstance(params, list) or len(params) != len(self.vertices):
                raise DocumentError(loc, "one moment-curve parameter per vertex")
            return
        raise DocumentError(loc, f"unknown coordinates value {c!r}")

    def _check_cycle(self, where):
        c = self.cycle
        if c is None or c == "fundamental":
            return
        if isinstance(c, dict):
            for key, v in c.items():
                labels = key.split(",")
                if any(x not in self.vertices for x in labels):
                    raise DocumentError(f"{where}.cycle[{key!r}]", "unknown vertex")
                if not isinstance(v, int):
                    raise DocumentError(f"{where}.cycle[{key!r}]", "coefficients must be integers")
            return
        raise DocumentError(f"{where}.cycle", "expected 'fundamental', null or a face -> coefficient map")

    # -------------------------------------------------------------- derived
    def complex(self):
        return SimplicialComplex(self.facets, vertices=self.vertices)

    @property
    def characteristic(self):
        return self.field.get("characteristic", 0)

    @property
    def is_symbolic(self):
        return self.coordinates == "symbolic"

    def domain(self):
        """Field of the numeric coordinates, or the base of the symbolic ones."""
        char = self.characteristic
        ext = self.field.get("extension_degree")
        if char == 0:
            return PrimeField(large_prime())
        if self.is_symbolic:
            if ext not in (None, 1):
                raise ModeError("symbolic coordinates are taken over a prime field")
            return PrimeField(char)
        if ext is None:
            return default_field(2) if char == 2 else PrimeField(char)
        return make_field(char, ext)

    def coords(self, seed=0):
        c = self.complex()
        dom = self.domain()
        kind = self.coordinates
        if isinstance(kind, list):
            return explicit(kind, dom, seed=seed)
        if kind == "symbolic":
            return symbolic(c.d, c.n, dom)
        if kind.startswith("generic"):
            s = int(kind[8:]) if kind.startswith("generic:") else seed
            return generic(c.d, c.n, dom, s)
        return moment_curve(json.loads(kind[len("moment-curve:"):]), c.d, dom, seed)

    def cycle_chain(self, dom=None):
        """The cycle over the prime field of the document (or `dom`), or None."""
        c = self.complex()
        dom = dom or self.domain()
        if self.cycle is None:
            return None
        if self.cycle == "fundamental":
            return fundamental_class(c, dom)
        return chain_from_labels(c, self.cycle, dom, dimension=c.dim)

    def to_json(self):
        out = {
            "name": self.name,
            "vertices": list(self.vertices),
            "facets": [list(f) for f in self.facets],
            "cycle": self.cycle,
            "field": dict(sorted(self.field.items())),
            "coordinates": self.coordinates,
        }
        if self.note:
            out["note"] = self.note
        return out

    def dumps(self):
        """Canonical text: one facet per line, keys in a fixed order."""
        data = self.to_json()
        lines = ["{"]
        items = list(data.items())
        for i, (key, value) in enumerate(items):
            tail = "," if i < len(items) - 1 else ""
            if key == "facets":
                inner = ",\n".join("    " + json.dumps(f) for f in value)
                lines.append(f'  "facets": [\n{inner}\n  ]{tail}')
            else:
                lines.append(f"  {json.dumps(key)}: {json.dumps(value)}{tail}")
        lines.append("}")
        return "\n".join(lines) + "\n"


def load_document(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise DocumentError(path, f"cannot read: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from exc
    return ComplexDocument.from_json(data, where=os.path.basename(path))


def load_gamma(path, ambient: SimplicialComplex):
    """Γ from a JSON file {"facets": [[labels]]}; [] is void, [[]] is {∅}."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DocumentError(path, f"cannot read Γ: {exc}") from exc
    return parse_gamma(data.get("facets") if isinstance(data, dict) else data, ambient, path)


def parse_gamma(facets, ambient, where="gamma"):
    if not isinstance(facets, list):
        raise DocumentError(where, "Γ must be a list of facets")
    for i, f in enumerate(facets):
        if not isinstance(f, list) or any(v not in ambient.index for v in f):
            raise DocumentError(f"{where}[{i}]", "Γ facets must be label lists of the complex")
    used = [v for v in ambient.vertices if any(v in f for f in facets)]
    return SimplicialComplex(facets, vertices=used)


# ------------------------------------------------------------------ corpus
def corpus_names():
    root = resources.files("facering.data") / "corpus"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def corpus_document(name):
    root = resources.files("facering.data") / "corpus"
    path = root / f"{name}.json"
    if not path.is_file():
        raise LookupError(f"no corpus entry named {name!r}; try `corpus list`")
    return ComplexDocument.from_json(json.loads(path.read_text()), where=f"{name}.json")


# ------------------------------------------------------------------ reports
@dataclass
class RunReport:
    name: str
    certificates: list = field(default_factory=list)
    environment: dict = field(default_factory=dict)
    analysis: dict | None = None

    @property
    def exit_code(self):
        return 1 if any(c.verdict == FAIL for c in self.certificates) else 0

    def to_json(self):
        out = {"name": self.name, "environment": self.environment}
        if self.analysis is not None:
            out["analysis"] = self.analysis
        out["certificates"] = [c.to_json() for c in self.certificates]
        return out

    def table(self):
        rows = [(c.check, c.verdict, _summary(c), _bound_text(c), f"{c.runtime_ms:.1f}") for c in self.certificates]
        head = ("check", "verdict", "witness", "error bound", "ms")
        widths = [max(len(r[i]) for r in rows + [head]) for i in range(5)]
        fmt = "  ".join("{:<%d}" % w for w in widths)
        lines = [f"== {self.name}", fmt.format(*head)]
        lines += [fmt.format(*r) for r in rows]
        return "\n".join(lines)


def _bound_text(c: Certificate):
    b = c.error_probability_bound
    if b == 0:
        return "0"
    return f"2^{b.numerator.bit_length() - b.denominator.bit_length()}"


_SUMMARY_KEYS = ("k", "ranks", "pairing_ranks", "gram_rank", "rank", "rank_over_squares", "dims_B", "routes_agree", "reason", "computed_verdict", "violated_clause")


def _summary(c: Certificate):
    parts = []
    for key in _SUMMARY_KEYS:
        if key in c.witness:
            parts.append(f"{key}={json.dumps(c.witness[key], separators=(',', ':'), default=str)}")
    text = " ".join(parts)
    return text if len(text) <= 70 else text[:67] + "..."


def environment(seed):
    return {"facering": __version__, "python": platform.python_version(), "master_seed": seed}


def task_seed(master, *parts):
    """Per-task seed derived from the master seed."""
    h = hashlib.sha256(":".join([str(master), *map(str, parts)]).encode()).digest()
    return int.from_bytes(h[:4], "big")


def not_applicable(check, reason, doc, seed):
    fp = {"document": doc.name, "seed": seed}
    return Certificate(check, REPORT, {"reason": reason}, fp, 0, seed, 0.0)


# ------------------------------------------------------------------ analyze
def analyze(doc: ComplexDocument, seed=0):
    c = doc.complex()
    dom = doc.domain()
    small = PrimeField(dom.characteristic)
    f, h, g = fhg_vectors(c)
    pm = pseudomanifold_check(c, small)
    cm = cm_check(c, small, 2) if not c.is_void else {"is_cm": False, "is_s_cm": False}
    out = {
        "name": doc.name,
        "dimension": c.dim,
        "f": f,
        "h": h,
        "g": g,
        "is_pure": c.is_pure(),
        "is_pseudomanifold": pm["is_pseudomanifold"],
        "orientable": pm["orientable"],
        "connected_fundamental": pm["connected_fundamental"],
        "top_cycle_space_dim": len(cycle_space(c, small)),
        "cohen_macaulay": cm["is_cm"],
        "doubly_cohen_macaulay": cm["is_s_cm"],
        "field": dom.describe(),
    }
    alg = ArtinianAlgebra(c, doc.coords(seed))
    out["dims_A"] = alg.dims()
    lev = alg.socle_and_level()
    out["socle_dims"] = lev["socle_dims"]
    out["level"] = lev["is_level"]
    mu = _cycle_or_none(doc, dom)
    if mu is not None:
        out["dims_B"] = gorensteinify(alg, mu).dims()
    else:
        out["dims_B"] = None
    return out


def _cycle_or_none(doc, dom):
    try:
        return doc.cycle_chain(dom)
    except DomainError:
        return None


def cmd_analyze(doc: ComplexDocument, seed=0) -> RunReport:
    return RunReport(doc.name, [], environment(seed), analysis=analyze(doc, seed))


# ------------------------------------------------------------------ certify
def parse_suite(text):
    items = []
    for raw in text.split(","):
        raw = raw.strip()
        if not raw:
            continue
        name, _, arg = raw.partition(":")
        if name not in SUITES:
            raise DocumentError("--suite", f"unknown check {name!r}; choose from {', '.join(SUITES)}")
        items.append((name, arg or None))
    if not items:
        raise DocumentError("--suite", "empty suite")
    return items


def _gamma_from_arg(arg, c, gamma):
    """Γ for biased/hall-laman: an inline face list overrides --gamma.

    "none" is the void complex (K = B), "empty" is {∅} (K = maximal ideal),
    otherwise facets separated by "/" with labels separated by ".".
    """
    if arg is None:
        return gamma
    if arg == "none":
        return None
    if arg == "empty":
        return SimplicialComplex([()])
    facets = [f.split(".") for f in arg.split("/")]
    return parse_gamma(facets, c, "--suite")


def validate_modes(doc: ComplexDocument, suite, k):
    """Raise ModeError before any computation when a check cannot run."""
    d = doc.complex().d
    for name, _ in suite:
        if name == "anisotropy":
            if doc.characteristic != 2:
                raise ModeError("anisotropy needs a characteristic 2 document")
            if k is not None and 2 * k == d and not doc.is_symbolic:
                raise ModeError(
                    "anisotropy at the middle degree is not decidable over a perfect field: "
                    "use symbolic coordinates over GF(2)(V)"
                )
        if name == "identities":
            if not doc.is_symbolic:
                raise ModeError("the identity suite needs symbolic coordinates")
            if d % 2:
                raise ModeError("the identity suite needs even d")
        if name in ("duality", "lefschetz", "top-heavy", "biased", "hall-laman") and doc.is_symbolic:
            raise ModeError(f"{name} runs over numeric coordinates; use generic:<seed>")


def _degrees(k, d, upto):
    if k is not None:
        return [k]
    return list(range(upto + 1))


def run_checks(doc: ComplexDocument, suite, seed=0, k=None, gamma=None):
    c = doc.complex()
    dom = doc.domain()
    d = c.d
    certs = []
    mu = _cycle_or_none(doc, dom)
    needs_cycle = {"duality", "lefschetz", "top-heavy", "biased", "hall-laman", "anisotropy", "identities"}
    alg = g = None
    for name, arg in suite:
        if name == "g-vector":
            certs.append(check_g_vector(c))
            continue
        if name in needs_cycle and mu is None:
            certs.append(not_applicable(name, "the document has no top cycle", doc, seed))
            continue
        if name == "identities":
            certs += identity_suite(c, mu, dom, seed=seed)
            continue
        if alg is None:
            alg = ArtinianAlgebra(c, doc.coords(seed))
            g = gorensteinify(alg, mu)
        if name == "duality":
            certs.append(check_poincare_duality(g, seed))
        elif name == "lefschetz":
            certs.append(certify_hard_lefschetz(LefschetzQuery(g, k=k, mode="generic", seed=seed)))
        elif name == "top-heavy":
            for kk in _degrees(k, d, d // 2):
                certs.append(certify_top_heavy(alg, [mu], kk, seed=seed))
        elif name == "biased":
            gm = _gamma_from_arg(arg, c, gamma)
            for kk in _degrees(k, d, d // 2):
                certs.append(certify_biased_pairing(g, gm, kk, seed))
        elif name == "hall-laman":
            gm = _gamma_from_arg(arg, c, gamma)
            ell = random_linear_form(g.dom, g.n, seed)
            for kk in _degrees(k, d, d // 2):
                certs.append(certify_hall_laman(g, monomial_ideal(g, gm, [kk]), kk, ell, seed))
        elif name == "anisotropy":
            top = d // 2 if doc.is_symbolic else (d - 1) // 2
            for kk in _degrees(k, d, top):
                certs.append(certify_char2_anisotropy(g, kk, seed=seed))
    return certs


def cmd_certify(doc: ComplexDocument, suite_text, seed=0, k=None, gamma=None) -> RunReport:
    suite = parse_suite(suite_text)
    validate_modes(doc, suite, k)
    return RunReport(doc.name, run_checks(doc, suite, seed, k, gamma), environment(seed))


def cmd_experiment_moment_curve(doc: ComplexDocument, params, seed=0) -> RunReport:
    c = doc.complex()
    dom = doc.domain()
    mu = doc.cycle_chain(dom)
    if mu is None:
        raise DomainError("the moment-curve probe needs a top cycle")
    return RunReport(f"{doc.name} (moment curve)", moment_curve_probe(c, mu, params, dom, seed), environment(seed))


def _corpus_task(args):
    name, suite_text, seed = args
    doc = corpus_document(name)
    suite = parse_suite(suite_text)
    try:
        validate_modes(doc, suite, None)
    except ModeError as exc:
        return name, [not_applicable(s, str(exc), doc, seed) for s, _ in suite]
    s = task_seed(seed, name)
    return name, run_checks(doc, suite, s)


def cmd_corpus(action, suite_text=None, seed=0, jobs=1, names=None) -> RunReport:
    names = names or corpus_names()
    if action == "list":
        rows = []
        for n in names:
            doc = corpus_document(n)
            c = doc.complex()
            rows.append({"name": n, "vertices": c.n, "facets": len(c.facets), "d": c.d, "characteristic": doc.characteristic, "coordinates": doc.coordinates if isinstance(doc.coordinates, str) else "explicit"})
        return RunReport("corpus", [], environment(seed), analysis={"entries": rows})
    if action != "run":
        raise DocumentError("corpus", f"unknown action {action!r}")
    parse_suite(suite_text)
    tasks = [(n, suite_text, seed) for n in names]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_corpus_task, tasks))
    else:
        results = [_corpus_task(t) for t in tasks]
    certs = []
    summary = []
    for name, cs in sorted(results):
        for cert in cs:
            cert.input_fingerprint = dict(cert.input_fingerprint, corpus_entry=name)
            certs.append(cert)
        summary.append({"name": name, "verdicts": [c.verdict for c in cs]})
    return RunReport(f"corpus run {suite_text}", certs, environment(seed), analysis={"summary": summary})


# ------------------------------------------------------------------ main
def _parser():
    p = argparse.ArgumentParser(prog="facering", description="Artinian reductions of face rings and their certificates.")
    p.add_argument("--json", metavar="PATH", help="also write the report as JSON")
    p.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
    sub = p.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", help="invariants of a complex document")
    a.add_argument("file")
    c = sub.add_parser("certify", help="run certification checks")
    c.add_argument("file")
    c.add_argument("--suite", required=True, help=f"comma-separated checks: {', '.join(SUITES)}")
    c.add_argument("--k", type=int, default=None, help="restrict to one degree")
    c.add_argument("--gamma", help="JSON file with the facets of Γ")
    e = sub.add_parser("experiment", help="report-only probes")
    e.add_argument("kind", choices=["moment-curve"])
    e.add_argument("file")
    e.add_argument("--params", required=True, help="comma-separated distinct integers, one per vertex")
    k = sub.add_parser("corpus", help="the bundled corpus")
    k.add_argument("action", choices=["list", "run"])
    k.add_argument("suite", nargs="?")
    k.add_argument("--jobs", type=int, default=1)
    for q in (a, c, e, k):
        q.add_argument("--json", metavar="PATH", default=argparse.SUPPRESS, help="also write the report as JSON")
        q.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="master seed")
    return p


def _emit(report: RunReport, json_path, out):
    if report.analysis is not None and "entries" in report.analysis:
        rows = report.analysis["entries"]
        print(f"{'name':<20} {'d':>2} {'n':>3} {'facets':>6}  char  coordinates", file=out)
        for r in rows:
            print(f"{r['name']:<20} {r['d']:>2} {r['vertices']:>3} {r['facets']:>6}  {r['characteristic']:>4}  {r['coordinates']}", file=out)
    elif report.analysis is not None:
        print(f"== {report.name}", file=out)
        for key, value in report.analysis.items():
            print(f"{key}: {json.dumps(value, default=str)}", file=out)
    if report.certificates:
        print(report.table(), file=out)
    if json_path:
        with open(json_path, "w") as fh:
            json.dump(report.to_json(), fh, indent=2, sort_keys=True)
            fh.write("\n")


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.command == "analyze":
            report = cmd_analyze(load_document(args.file), args.seed)
        elif args.command == "certify":
            doc = load_document(args.file)
            gamma = load_gamma(args.gamma, doc.complex()) if args.gamma else None
            report = cmd_certify(doc, args.suite, args.seed, args.k, gamma)
        elif args.command == "experiment":
            params = _int_list(args.params)
            report = cmd_experiment_moment_curve(load_document(args.file), params, args.seed)
        else:
            if args.action == "run" and not args.suite:
                raise DocumentError("corpus run", "missing suite")
            report = cmd_corpus(args.action, args.suite, args.seed, args.jobs)
    except ModeError as exc:
        print(f"mode error: {exc}", file=sys.stderr)
        return 3
    except (DocumentError, LookupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args.json, out)
    return report.exit_code


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise DocumentError("--params", "expected comma-separated integers") from exc


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
