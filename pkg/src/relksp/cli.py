"""Batch command line: ``relksp COMMAND [NAMES...] [--doc FILE] [flags]``.

Bindings come from a document read from ``--doc`` (or standard input when
the command needs one).  Each command prints a single report object; the
exit code is 0 when every verification in it holds, 1 when one fails or an
operation raises, 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import replace
from typing import Callable, Dict, List, Optional

from .completion import complete_row_via_excision, localize_matrix, patch_symplectic, verify_completion
from .document import (
    Document,
    format_row,
    format_word,
    parse_document,
    parse_element,
    print_document,
)
from .elementary import SYMPLECTIC, UnimodularRow, homotopy_word, reduce_to_principal, whitehead_word, word_eval
from .errors import DocumentSyntaxError, RelKspError, SizeMismatch, UnknownBinding
from .lifts import lift_alt, lift_matrix, lift_row, project
from .matrices import Matrix, apply_hom, det, inverse, is_alternating, is_relative, is_symplectic, perp, pfaffian, predicates
from .rings import EvalAt, Excision, ProjectPi
from .steinberg import kernel_check, steinberg_phi, steinberg_phi_esd, symbol_build
from .suites import SUITES, run_suite
from .witt import (
    AltRep,
    EquivCertificate,
    check_equiv,
    extract_block,
    hyperbolic_H,
    search_equiv,
    witt_inverse_rep,
    witt_pf,
    witt_perp,
)


class UsageError(Exception):
    pass


class Context:
    def __init__(self, args, doc: Optional[Document]):
        self.args = args
        self.doc = doc

    @property
    def names(self) -> List[str]:
        return self.args.names

    def need(self, lo: int, hi: Optional[int] = None) -> List[str]:
        hi = lo if hi is None else hi
        n = len(self.names)
        if not lo <= n <= hi:
            want = str(lo) if lo == hi else f"{lo} to {hi}"
            raise UsageError(f"{self.args.command} takes {want} argument(s), got {n}")
        return self.names + [None] * (hi - n)

    def matrix(self, name) -> Matrix:
        return self.doc.get(name, "matrix").value

    def ideal(self, name):
        return None if name is None else self.doc.get(name, "ideal").value

    def alt(self, name, ideal=None) -> AltRep:
        return AltRep(self.matrix(name), ideal)

    def row(self, name, ideal=None) -> UnimodularRow:
        v = self.doc.get(name, "row").value
        return replace(v, ideal=ideal) if ideal is not None else v

    def word(self, name):
        return self.doc.get(name, "word").value

    def stword(self, name):
        return self.doc.get(name, "stword").value

    def element(self, text, ring=None):
        """A bound ``elem`` name or a literal in the document ring."""
        R = ring or self.doc.ring
        if self.doc is not None and text in self.doc.bindings:
            b = self.doc.get(text, "elem")
            if b.ring != R:
                raise SizeMismatch(f"{text} lives in {b.ring}, expected {R}")
            return b.value
        return parse_element(text, R)


def _report(result=None, **verified) -> dict:
    out = {}
    if result is not None:
        out["result"] = result
    out["verified"] = {k: bool(v) for k, v in verified.items()}
    return out


# ---------------------------------------------------------------------------
# commands


def cmd_pfaffian(ctx):
    (a,) = ctx.need(1)
    A = ctx.matrix(a)
    R = A.ring
    pf = pfaffian(A)
    return _report(R.fmt(pf), squared_is_det=R.eq(R.mul(pf, pf), det(A)))


def cmd_det(ctx):
    (a,) = ctx.need(1)
    A = ctx.matrix(a)
    return _report(A.ring.fmt(det(A)))


def cmd_predicate(ctx):
    a, kind, extra = ctx.need(2, 3)
    A = ctx.matrix(a)
    arg = None
    if extra is not None:
        arg = ctx.ideal(extra) if kind == "relative" else ctx.matrix(extra)
    elif kind == "relative":
        raise UsageError("predicate relative needs an ideal")
    value = predicates(A, kind, arg)
    return _report(value, **{kind: value})


def cmd_eval(ctx):
    (w,) = ctx.need(1)
    W = ctx.word(w)
    M = word_eval(W)
    checks = {"inverse_word": M @ word_eval(W.inverse()) == Matrix.identity(W.ring, W.size)}
    if W.family == SYMPLECTIC:
        checks["symplectic"] = is_symplectic(M)
    return _report(M.fmt(), **checks)


def cmd_lift_row(ctx):
    v, i = ctx.need(2)
    I = ctx.ideal(i)
    row = ctx.row(v, I)
    L = lift_row(row)
    pi = ProjectPi(L.ring)
    back = all(row.ring.eq(pi(x), y) for x, y in zip(L.entries, row.entries))
    return _report(format_row(L), projects_back=back, relative=L.is_relative())


def cmd_lift_matrix(ctx):
    a, i = ctx.need(2)
    A, I = ctx.matrix(a), ctx.ideal(i)
    kind = ctx.args.kind
    if kind == "alt":
        L = lift_alt(A, I)
    else:
        L = lift_matrix(A, I, kind)
    checks = {"projects_back": project(L) == A}
    if kind == "sl":
        checks["det_one"] = L.ring.is_one(det(L))
    elif kind == "sp":
        checks["symplectic"] = is_symplectic(L)
    return _report(L.fmt(), **checks)


def cmd_project(ctx):
    (a,) = ctx.need(1)
    A = ctx.matrix(a)
    if not isinstance(A.ring, Excision):
        raise SizeMismatch(f"{a} is not over an excision ring")
    return _report(project(A).fmt())


def cmd_whitehead(ctx):
    (g,) = ctx.need(1)
    G = ctx.matrix(g)
    W = whitehead_word(G)
    return _report(format_word(W), evaluates_to_block=word_eval(W) == perp(G, inverse(G)))


def cmd_homotopy(ctx):
    (w,) = ctx.need(1)
    W = ctx.word(w)
    H = homotopy_word(W)
    M = word_eval(H)
    P = H.ring
    at0 = apply_hom(EvalAt(P, P.base.zero), M) == Matrix.identity(W.ring, W.size)
    at1 = apply_hom(EvalAt(P, P.base.one), M) == word_eval(W)
    return _report(format_word(H), identity_at_0=at0, original_at_1=at1)


def cmd_reduce_principal(ctx):
    v, i = ctx.need(2)
    row = ctx.row(v, ctx.ideal(i))
    W, v2 = reduce_to_principal(row)
    R = row.ring
    image = W.apply_to_vector(row.entries)
    return {
        "result": {"word": format_word(W), "row": format_row(v2), "ideal": v2.ideal.fmt()},
        "verified": {"image": all(R.eq(x, y) for x, y in zip(image, v2.entries)), "relative": v2.is_relative()},
    }


def cmd_complete(ctx):
    v, i = ctx.need(2)
    row = ctx.row(v, ctx.ideal(i))
    res = complete_row_via_excision(row, budget=ctx.args.budget)
    return {
        "result": {"gamma": res.gamma.fmt(), "lifted_row": format_row(res.lifted_row), "word": format_word(res.word)},
        "verified": {"completion": verify_completion(row, res.gamma)},
    }


def cmd_patch(ctx):
    a1, a2, i = ctx.need(2, 3)
    if ctx.args.s is None or ctx.args.t is None:
        raise UsageError("patch needs --s and --t")
    R = ctx.doc.ring
    s, t = ctx.element(ctx.args.s, R), ctx.element(ctx.args.t, R)
    A1, A2 = ctx.matrix(a1), ctx.matrix(a2)
    alpha = patch_symplectic(s, t, A1, A2, ctx.ideal(i))
    checks = {
        "localizes_to_first": localize_matrix(alpha, s) == A1,
        "localizes_to_second": localize_matrix(alpha, t) == A2,
        "symplectic": is_symplectic(alpha),
    }
    if i is not None:
        checks["relative"] = is_relative(alpha, ctx.ideal(i))
    return _report(alpha.fmt(), **checks)


def cmd_witt_perp(ctx):
    a, b, i = ctx.need(2, 3)
    I = ctx.ideal(i)
    A, B = ctx.alt(a, I), ctx.alt(b, I)
    C = witt_perp(A, B)
    R = C.ring
    return _report(C.matrix.fmt(), pfaffian_multiplicative=R.eq(C.pf, R.mul(A.pf, B.pf)))


def cmd_witt_inv(ctx):
    a, i = ctx.need(1, 2)
    A = ctx.alt(a, ctx.ideal(i))
    inv = witt_inverse_rep(A)
    checks = {"alternating": is_alternating(inv.matrix)}
    if A.pfaffian_one:
        checks["pfaffian_one"] = inv.pfaffian_one
    return _report(inv.matrix.fmt(), **checks)


def cmd_witt_pf(ctx):
    a, i = ctx.need(2)
    I = ctx.ideal(i)
    A = ctx.alt(a, I)
    pf = witt_pf(A)
    R = A.ring
    return _report(R.fmt(pf), congruent_to_one=I.member(R.sub(pf, R.one)))


def cmd_hyperbolic(ctx):
    a, i = ctx.need(1, 2)
    H = hyperbolic_H(ctx.matrix(a), ctx.ideal(i))
    return _report(H.matrix.fmt(), alternating=is_alternating(H.matrix))


def cmd_check_equiv(ctx):
    a, b, w, i = ctx.need(3, 4)
    I = ctx.ideal(i)
    A, B, W = ctx.alt(a, I), ctx.alt(b, I), ctx.word(w)
    t2 = W.size - 2 * (A.half + B.half)
    if t2 < 0 or t2 % 2:
        raise SizeMismatch(f"certificate word of size {W.size} does not fit")
    ok = check_equiv(A, B, EquivCertificate(t2 // 2, W))
    return _report(ok, equivalent=ok)


def cmd_search_equiv(ctx):
    a, b, i = ctx.need(2, 3)
    I = ctx.ideal(i)
    A, B = ctx.alt(a, I), ctx.alt(b, I)
    cert = search_equiv(A, B, budget=ctx.args.budget)
    return {
        "result": {"t": cert.t, "word": format_word(cert.word)},
        "verified": {"equivalent": check_equiv(A, B, cert)},
    }


def cmd_extract_block(ctx):
    d, t1, t2, i = ctx.need(3, 4)
    I = ctx.ideal(i)
    T1, T2 = ctx.alt(t1, I), ctx.alt(t2, I)
    beta = extract_block(ctx.matrix(d), T1, T2)
    return _report(beta.fmt(), congruence=beta.transpose() @ T1.matrix @ beta == T2.matrix)


def cmd_symbol(ctx):
    kind, r, s = ctx.need(2, 3)
    R = ctx.doc.ring
    rv = ctx.element(r, R)
    sv = ctx.element(s, R) if s is not None else None
    W = symbol_build(kind, R, rv, sv, ctx.args.i, ctx.args.j)
    M = steinberg_phi(W)
    checks = {}
    if kind in ("curly", "square"):
        checks["in_kernel"] = kernel_check(W)
    elif kind == "sw":
        checks["monomial"] = all(sum(1 for x in row if not R.is_zero(x)) == 1 for row in M.rows)
    else:
        checks["diagonal"] = all(R.is_zero(M.rows[a][b]) for a in range(M.nrows) for b in range(M.ncols) if a != b)
    return {"result": {"word": W.fmt(), "phi": M.fmt()}, "verified": checks}


def cmd_phi(ctx):
    (w,) = ctx.need(1)
    W = ctx.stword(w)
    M = steinberg_phi(W)
    return _report(M.fmt(), matches_transvections=M == steinberg_phi_esd(W))


def cmd_kernel_check(ctx):
    (w,) = ctx.need(1)
    ok = kernel_check(ctx.stword(w))
    return _report(ok, in_kernel=ok)


def cmd_print(ctx):
    ctx.need(0)
    text = print_document(ctx.doc)
    return _report(text, round_trip=parse_document(text) == ctx.doc)


def cmd_suite(ctx):
    (name,) = ctx.need(1)
    if name != "all" and name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    results = run_suite(name, ctx.args.seed, ctx.args.trials)
    checks = {}
    for res in results:
        for c in res.checks:
            checks[f"{res.name}/{c.name}"] = c.passed
    return {
        "result": [r.to_dict() for r in results],
        "verified": checks,
    }


COMMANDS: Dict[str, Callable] = {
    "pfaffian": cmd_pfaffian,
    "det": cmd_det,
    "predicate": cmd_predicate,
    "eval": cmd_eval,
    "lift-row": cmd_lift_row,
    "lift-matrix": cmd_lift_matrix,
    "project": cmd_project,
    "whitehead": cmd_whitehead,
    "homotopy": cmd_homotopy,
    "reduce-principal": cmd_reduce_principal,
    "complete": cmd_complete,
    "patch": cmd_patch,
    "witt-perp": cmd_witt_perp,
    "witt-inv": cmd_witt_inv,
    "witt-pf": cmd_witt_pf,
    "hyperbolic": cmd_hyperbolic,
    "check-equiv": cmd_check_equiv,
    "search-equiv": cmd_search_equiv,
    "extract-block": cmd_extract_block,
    "symbol": cmd_symbol,
    "phi": cmd_phi,
    "kernel-check": cmd_kernel_check,
    "print": cmd_print,
    "suite": cmd_suite,
}

NO_DOCUMENT = {"suite"}


# ---------------------------------------------------------------------------
# output


def _plain(obj, prefix="") -> List[str]:
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            key = f"{prefix}.{k}" if prefix else str(k)
            lines.extend(_plain(v, key))
    elif isinstance(obj, list):
        for n, v in enumerate(obj):
            lines.extend(_plain(v, f"{prefix}[{n}]"))
    else:
        if isinstance(obj, bool):
            obj = "true" if obj else "false"
        text = str(obj)
        if "\n" in text:
            lines.append(f"{prefix}:")
            lines.extend("  " + ln for ln in text.rstrip("\n").split("\n"))
        else:
            lines.append(f"{prefix}: {text}")
    return lines


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2)
    return "\n".join(_plain(report))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="relksp", description="Exact relative symplectic K-theory toolkit.")
    p.add_argument("command", choices=sorted(COMMANDS), metavar="COMMAND",
                   help="one of: " + ", ".join(COMMANDS))
    p.add_argument("names", nargs="*", help="binding names, literals or a suite name")
    p.add_argument("--doc", help="document file ('-' for standard input)")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.add_argument("--kind", choices=("sl", "sp", "alt"), default=None, help="lift-matrix check")
    p.add_argument("--s", help="first localization element for patch")
    p.add_argument("--t", help="second localization element for patch")
    p.add_argument("--i", type=int, default=None, help="symbol row index")
    p.add_argument("--j", type=int, default=None, help="symbol column index")
    return p


def _load_document(args) -> Document:
    if args.doc is None or args.doc == "-":
        text = sys.stdin.read()
    else:
        with open(args.doc, encoding="utf-8") as fh:
            text = fh.read()
    doc = parse_document(text)
    if doc.ring is None:
        raise DocumentSyntaxError("document declares no ring", 1, 1)
    return doc


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_intermixed_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    report = {"command": args.command}
    start = time.perf_counter()
    try:
        doc = None if args.command in NO_DOCUMENT else _load_document(args)
        report.update(COMMANDS[args.command](Context(args, doc)))
        code = 0 if all(report["verified"].values()) else 1
        report["passed"] = code == 0
    except (UsageError, DocumentSyntaxError, UnknownBinding, OSError) as exc:
        report["error"] = getattr(exc, "code", "UsageError")
        report["message"] = str(exc)
        report["passed"] = False
        code = 2
    except (RelKspError, ValueError, ZeroDivisionError) as exc:
        report["error"] = getattr(exc, "code", type(exc).__name__)
        report["message"] = str(exc)
        report["passed"] = False
        code = 1
    print(render(report, args.format))
    print(f"elapsed {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
