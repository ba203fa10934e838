"""Command-line front end (``hcag``)."""
from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from .contact import (DEFAULT_MAX_TORSION, chord_divisor, homogenize_relation,
                      quasitoric_certificate, torsion_order, weak_contact)
from .curve import AffinePoint
from .errors import (CertificateFailure, ClubViolated, HcagError, NotTorsion, ParseError,
                     PreconditionViolated)
from .groebner import buchberger
from .leitenberger import club_check, extract_b, ideal_power_generators
from .mumford import cantor_compose, cantor_reduce, divisor_support, gb_add
from .parsing import parse_field, parse_poly
from .poly import LEX1, weighted2
from .session import Session, parse_params, parse_session
from .verify import all_pass, verify_all

EXIT_OK, EXIT_PARSE, EXIT_COMPUTE, EXIT_MISMATCH, EXIT_VERIFY = 0, 2, 3, 4, 5


class Mismatch(Exception):
    pass


class VerificationFailed(Exception):
    pass


# -- output ------------------------------------------------------------------

def _color_enabled():
    mode = os.environ.get("HCAG_COLOR", "auto").lower()
    return mode != "never" and sys.stdout.isatty()


_COLORS = {"PASS": "green", "VERIFIED": "green", "MATCH": "green",
           "FAIL": "red", "FAILED": "red", "MISMATCH": "red", "ERRATUM": "yellow"}


def _paint(word):
    if _color_enabled() and word in _COLORS:
        return click.style(word, fg=_COLORS[word])
    return word


def _render(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                lines.extend(_render(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_paint(str(v))}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render(item, indent + 1))
            else:
                lines.append(f"{pad}{_paint(str(item))}")
    else:
        lines.append(pad + str(obj))
    return lines


def emit(payload, as_json):
    if as_json:
        click.echo(json.dumps(payload, indent=2))
    else:
        for line in _render(payload):
            click.echo(line)


# -- session handling ----------------------------------------------------------

def load_session(session_file, params, genus, f):
    if session_file:
        s = parse_session(Path(session_file).read_text(), finalize=False)
    else:
        s = Session()
    if params is not None:
        s.params = parse_params(params)
    if genus is not None:
        s.genus = genus
    if f is not None:
        s.f_text = f
    return s.finalize()


def session_options(fn):
    fn = click.option("--json", "as_json", is_flag=True, help="Structured output.")(fn)
    fn = click.option("--f", "f_text", default=None, help="Right-hand side f(x) of y^2 = f(x).")(fn)
    fn = click.option("--genus", type=int, default=None)(fn)
    fn = click.option("--params", default=None, help="Comma-separated parameter names.")(fn)
    fn = click.option("--session", "session_file", type=click.Path(exists=True, dir_okay=False),
                      default=None, help="Session file with curve and divisor declarations.")(fn)
    return fn


def _guard(body):
    """Run body(); map library errors to exit codes."""
    try:
        code = body()
    except ParseError as exc:
        click.echo(f"parse error: {exc}", err=True)
        code = EXIT_PARSE
    except Mismatch as exc:
        click.echo(f"engine mismatch: {exc}", err=True)
        code = EXIT_MISMATCH
    except (PreconditionViolated, NotTorsion, CertificateFailure, ClubViolated,
            VerificationFailed) as exc:
        click.echo(f"verification failure: {type(exc).__name__}: {exc}", err=True)
        code = EXIT_VERIFY
    except HcagError as exc:
        click.echo(f"compute error: {type(exc).__name__}: {exc}", err=True)
        code = EXIT_COMPUTE
    sys.exit(code or EXIT_OK)


# -- task bodies (shared by subcommands and ``run``) -----------------------------

def _pair(rep):
    return {"u": str(rep.u), "v": str(rep.v)}


def task_groebner(s, generators, order="lex1", ideal=None):
    gens = list(s.gens[ideal]) if ideal else []
    if ideal and ideal not in s.gens:
        raise ParseError(f"undefined ideal {ideal!r}", ideal, 0)
    gens += [parse_poly(g, s.params) for g in generators]
    if not gens:
        raise ParseError("no generators given", "", 0)
    mo = LEX1 if order == "lex1" else weighted2(s.genus or 1)
    gb = buchberger(gens, mo)
    return {"order": order, "basis": gb.to_strs()}


def task_mumford(s, divisor):
    rep = s.divisor(divisor)
    support = [{"factor": str(p), "v": str(v), "multiplicity": e}
               for p, v, e in divisor_support(rep)]
    return {"mumford": _pair(rep), "support": support}


def task_add(s, d1, d2, engine="both"):
    a, b = s.divisor(d1), s.divisor(d2)
    out = {}
    if engine in ("gb", "both"):
        total, u_o = gb_add(a, b)
        out["gb"] = {**_pair(total), "u_o": str(u_o), "reduced": _pair(cantor_reduce(total))}
    if engine in ("cantor", "both"):
        total = cantor_compose(a, b)
        out["cantor"] = {**_pair(total), "reduced": _pair(cantor_reduce(total))}
    if engine == "both":
        same = out["gb"]["reduced"] == out["cantor"]["reduced"]
        out["verdict"] = "MATCH" if same else "MISMATCH"
    return out


def task_reduce(s, divisor):
    return {"reduced": _pair(cantor_reduce(s.divisor(divisor)))}


def task_leitenberger(s, divisor, k=1):
    rep = s.divisor(divisor)
    lrep = extract_b(ideal_power_generators(rep, k))
    prim = lrep.primitive
    return {"u": str(lrep.u), "b0": str(lrep.b.b0), "b1": str(lrep.b.b1),
            "scale": str(lrep.scale), "primitive_b0": str(prim.b0), "primitive_b1": str(prim.b1),
            "wdeg": lrep.lead_wdeg(), "club": club_check(lrep)}


def _cert_payload(cert, param):
    out = {"n": cert.n, "b0": str(cert.b.b0), "b1": str(cert.b.b1), "u": str(cert.u),
           "scalar": str(cert.r), "certificate": "VERIFIED" if cert.verify() else "FAILED"}
    rel = homogenize_relation(cert, param)
    out["relation"] = {"degree": rel.degree,
                       "h1": str(rel.h1), "h2": str(rel.h2), "h3": str(rel.h3),
                       "F1": str(rel.F1), "F2": str(rel.F2), "F3": str(rel.F3),
                       "identity": "VERIFIED" if rel.verify() else "FAILED"}
    return out


def _homog_param(s):
    return "t" if "t" in s.params or not s.params else s.params[0]


def task_ncontact(s, divisor, n=None, max_torsion=DEFAULT_MAX_TORSION):
    rep = s.divisor(divisor)
    order = torsion_order(rep, max_torsion)
    if order is None:
        raise NotTorsion(f"no torsion order <= {max_torsion}")
    if n is not None and n != order:
        raise NotTorsion(f"order is {order}, not {n}")
    cert = weak_contact(rep, order)
    return {"order": order, **_cert_payload(cert, _homog_param(s))}


def _point_of(rep):
    if rep.u.deg() != 1:
        raise PreconditionViolated("slope mode needs a single point")
    x0 = -rep.u.coeff(0)
    return AffinePoint(x0, rep.v(x0))


def task_quasitoric(s, divisor, n, r_values=None):
    rep = s.divisor(divisor)
    param = _homog_param(s)
    if not r_values:
        if rep.u.deg() == 1:
            try:
                cert = weak_contact(rep, n)
            except NotTorsion as exc:
                raise PreconditionViolated(str(exc)) from None
        else:
            cert = quasitoric_certificate(rep, n)
        return {"certificates": [_cert_payload(cert, param)]}
    P = _point_of(rep)
    ip = AffinePoint(P.x, -P.y)
    certs = []
    for rv in r_values:
        slope = parse_field(rv, s.params)
        cert = quasitoric_certificate(chord_divisor(s.curve, ip, slope), n)
        certs.append({"r": rv, **_cert_payload(cert, param)})
    return {"certificates": certs}


def _check_verdicts(payload):
    text = json.dumps(payload)
    if '"FAILED"' in text:
        raise VerificationFailed("an identity failed")
    if '"MISMATCH"' in text:
        raise Mismatch("gb and cantor engines disagree")


# -- click commands ------------------------------------------------------------

@click.group()
@click.version_option(package_name="artifact")
def main():
    """Exact Groebner-basis and Mumford-representation tools for hyperelliptic curves."""


@main.command()
@session_options
@click.argument("generators", nargs=-1)
@click.option("--order", type=click.Choice(["lex1", "w2"]), default="lex1")
@click.option("--ideal", default=None, help="Name of a gens.NAME entry in the session.")
def groebner(session_file, params, genus, f_text, as_json, generators, order, ideal):
    """Reduced Groebner basis of GENERATORS."""
    def body():
        s = load_session(session_file, params, genus, f_text)
        emit(task_groebner(s, generators, order, ideal), as_json)
    _guard(body)


@main.command()
@session_options
@click.argument("divisor")
def mumford(session_file, params, genus, f_text, as_json, divisor):
    """Mumford pair and support of DIVISOR ('points (x, y) ...', '(u, v)' or a name)."""
    def body():
        s = load_session(session_file, params, genus, f_text)
        emit(task_mumford(s, divisor), as_json)
    _guard(body)


@main.command()
@session_options
@click.argument("d1")
@click.argument("d2")
@click.option("--engine", type=click.Choice(["gb", "cantor", "both"]), default="both")
def add(session_file, params, genus, f_text, as_json, d1, d2, engine):
    """Add two divisors with the Groebner engine, Cantor's algorithm, or both."""
    def body():
        s = load_session(session_file, params, genus, f_text)
        payload = task_add(s, d1, d2, engine)
        emit(payload, as_json)
        _check_verdicts(payload)
    _guard(body)


@main.command()
@session_options
@click.argument("divisor")
def reduce(session_file, params, genus, f_text, as_json, divisor):
    """Reduced representative of DIVISOR."""
    def body():
        s = load_session(session_file, params, genus, f_text)
        emit(task_reduce(s, divisor), as_json)
    _guard(body)


@main.command()
@session_options
@click.argument("divisor")
@click.option("--k", "k", type=int, default=1, show_default=True, help="Multiple of the divisor.")
def leitenberger(session_file, params, genus, f_text, as_json, divisor, k):
    """Minimal weighted-order element b for k * DIVISOR."""
    def body():
        s = load_session(session_file, params, genus, f_text)
        emit(task_leitenberger(s, divisor, k), as_json)
    _guard(body)


@main.command()
@session_options
@click.argument("divisor")
@click.option("--n", "n", type=int, default=None, help="Expected torsion order.")
@click.option("--max-torsion", type=int, default=DEFAULT_MAX_TORSION, show_default=True)
def ncontact(session_file, params, genus, f_text, as_json, divisor, n, max_torsion):
    """Weak n-contact curve for a torsion point."""
    def body():
        s = load_session(session_file, params, genus, f_text)
        payload = task_ncontact(s, divisor, n, max_torsion)
        emit(payload, as_json)
        _check_verdicts(payload)
    _guard(body)


@main.command()
@session_options
@click.argument("divisor")
@click.option("--n", "n", type=int, required=True)
@click.option("--r", "r_list", default=None,
              help="Comma-separated slopes; builds the chord divisor through the negated point.")
def quasitoric(session_file, params, genus, f_text, as_json, divisor, n, r_list):
    """Quasi-toric relations of type (2, n, 2)."""
    def body():
        s = load_session(session_file, params, genus, f_text)
        rs = [r.strip() for r in r_list.split(",")] if r_list else None
        payload = task_quasitoric(s, divisor, n, rs)
        emit(payload, as_json)
        _check_verdicts(payload)
    _guard(body)


@main.command("verify-paper")
@click.option("--fixtures", type=click.Path(exists=True, file_okay=False), default=None,
              help="Directory of fixture files (defaults to the bundled set).")
@click.option("--json", "as_json", is_flag=True)
def verify_paper(fixtures, as_json):
    """Replay the bundled worked examples and diff against the printed values."""
    def body():
        checks = verify_all(fixtures)
        if as_json:
            emit({"checks": [c.as_dict() for c in checks], "ok": all_pass(checks)}, True)
        else:
            for c in checks:
                click.echo(c.line().replace(c.status, _paint(c.status), 1))
            n_fail = sum(c.status == "FAIL" for c in checks)
            click.echo(f"{len(checks)} checks, {n_fail} failed")
        return EXIT_OK if all_pass(checks) else EXIT_VERIFY
    _guard(body)


def _split_opts(args, names):
    """Separate ``--opt value`` pairs from positionals for session tasks."""
    pos, kw = [], {}
    it = iter(args)
    for a in it:
        if a in names:
            kw[names[a]] = next(it, None)
        else:
            pos.append(a)
    return pos, kw


def run_task(s, name, args):
    pos, kw = _split_opts(args, {"--order": "order", "--ideal": "ideal", "--engine": "engine",
                                 "--k": "k", "--n": "n", "--max-torsion": "max_torsion",
                                 "--r": "r_values"})
    for key in ("k", "n", "max_torsion"):
        if key in kw:
            kw[key] = int(kw[key])
    if "r_values" in kw:
        kw["r_values"] = [r.strip() for r in kw["r_values"].split(",")]
    if name == "groebner":
        return task_groebner(s, pos, **kw)
    fn = {"mumford": task_mumford, "add": task_add, "reduce": task_reduce,
          "leitenberger": task_leitenberger, "ncontact": task_ncontact,
          "quasitoric": task_quasitoric}[name]
    return fn(s, *pos, **kw)


@main.command()
@click.option("--session", "session_file", type=click.Path(exists=True, dir_okay=False),
              required=True)
@click.option("--json", "as_json", is_flag=True)
def run(session_file, as_json):
    """Run the tasks declared in a session file, in order."""
    def body():
        s = load_session(session_file, None, None, None)
        results = []
        for name, args in s.tasks:
            try:
                payload = run_task(s, name, args)
            except TypeError as exc:
                raise ParseError(f"bad arguments for task {name}: {exc}", name, 0) from None
            results.append({"task": " ".join([name, *args]), "result": payload})
        emit({"tasks": results}, as_json)
        _check_verdicts(results)
    _guard(body)


if __name__ == "__main__":
    main()
