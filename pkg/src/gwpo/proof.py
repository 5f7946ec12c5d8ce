"""Proof and certificate serialization.

A proof is line-oriented text: a verdict line (``YES``, ``MAYBE`` or
``TIMEOUT``), then for positive verdicts a parameter block and the
obligation trace.  The parameter block is self-contained — feeding a
whole proof file back through ``parse_certificate`` reconstructs the
certificate, which is how ``verify`` consumes the output of ``prove``.

Rendering is deterministic: identical certificates produce
byte-identical text.  Entries are ordered by (arity, name); linear
entries print as sums (``s_A(x) = x + 1``), max/plus entries as
``max{...}`` with constant-only branches folded together and the
leading constant dropped when some branch always reaches it (so
``max{1, x + 1}`` prints as ``x + 1`` but ``max{0, x - 1}`` keeps both
branches).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .algebra import LinearPolyInterpretation, MaxPlusInterpretation
from .orders import Status
from .search import TEMPLATES, Certificate, CertificateError, SearchResult
from .terms import BANG_MARK, TUPLE_MARK, Symbol
from .triples import Precedence

_ARG_NAMES = ("x", "y", "z", "w")


def _arg_name(i: int) -> str:
    return _ARG_NAMES[i] if i < len(_ARG_NAMES) else f"x{i + 1}"


def _arg_list(arity: int) -> list[str]:
    return [_arg_name(i) for i in range(arity)]


# -- rendering ----------------------------------------------------------


def _render_linear(entry: tuple[int, tuple[int, ...]], arity: int) -> str:
    const, coeffs = entry
    pieces = []
    for coeff, name in zip(coeffs, _arg_list(arity)):
        if coeff == 0:
            continue
        pieces.append(name if coeff == 1 else f"{coeff}*{name}")
    if const or not pieces:
        pieces.append(str(const))
    return " + ".join(pieces)


def _render_maxplus(entry: tuple[int, tuple[tuple[int, int], ...]], arity: int) -> str:
    base, argspecs = entry
    constant = max([base] + [c for b, c in argspecs if b == 0])
    branches = []
    for (b, c), name in zip(argspecs, _arg_list(arity)):
        if b == 0:
            continue
        if c == 0:
            branches.append(name)
        elif c > 0:
            branches.append(f"{name} + {c}")
        else:
            branches.append(f"{name} - {-c}")
    # a branch with offset >= the constant reaches it at every argument
    if branches and any(c >= constant for b, c in argspecs if b == 1):
        if len(branches) == 1:
            return branches[0]
        return "max{" + ", ".join(branches) + "}"
    if not branches:
        return str(constant)
    return "max{" + ", ".join([str(constant)] + branches) + "}"


def _symbol_order(sym: Symbol) -> tuple[int, str]:
    return (sym.arity, sym.name)


def _entry_lines(cert: Certificate) -> list[str]:
    lines = [f"template {cert.template}"]
    if cert.interp_a is not None:
        for sym in sorted(cert.interp_a.entries, key=_symbol_order):
            head = sym.name + "_A"
            if sym.arity:
                head += "(" + ", ".join(_arg_list(sym.arity)) + ")"
            lines.append(f"{head} = {_render_linear(cert.interp_a.entries[sym], sym.arity)}")
    if cert.interp_b is not None:
        for sym in sorted(cert.interp_b.entries, key=_symbol_order):
            head = sym.name + "_B"
            if sym.arity:
                head += "(" + ", ".join(_arg_list(sym.arity)) + ")"
            lines.append(f"{head} = {_render_maxplus(cert.interp_b.entries[sym], sym.arity)}")
    if cert.precedence is not None:
        for sym in sorted(cert.precedence.ranks, key=_symbol_order):
            lines.append(f"rank({sym.name}) = {cert.precedence.ranks[sym]}")
    if cert.status is not None:
        for sym in sorted(cert.status.entries, key=_symbol_order):
            inner = ", ".join(str(p) for p in cert.status.entries[sym])
            lines.append(f"status({sym.name}) = [{inner}]")
    return lines


@dataclass(frozen=True)
class Proof:
    """A rendered-ready proving outcome.

    ``verdict`` is "terminating", "unknown", or "timeout"; ``tried`` is
    the candidate count behind an exhaustion note; ``budget`` the time
    limit behind a timeout note.
    """

    verdict: str
    template: str
    certificate: Certificate | None = None
    tried: int = 0
    budget: float | None = None


def proof_from_search(result: SearchResult, template: str, budget: float | None) -> Proof:
    if result.outcome == "found":
        return Proof("terminating", template, result.certificate)
    if result.outcome == "timeout":
        return Proof("timeout", template, None, result.tried, budget)
    return Proof("unknown", template, None, result.tried, None)


def emit_proof(proof: Proof) -> str:
    """Deterministic line rendering of a proof."""
    if proof.verdict == "timeout":
        budget = "" if proof.budget is None else f" of {_fmt_seconds(proof.budget)}"
        return f"TIMEOUT\ntime budget{budget} exhausted before the search space\n"
    if proof.verdict == "unknown":
        return (
            "MAYBE\n"
            f"search space of template {proof.template} exhausted:"
            f" {proof.tried} candidates, no certificate\n"
        )
    cert = proof.certificate
    if cert is None:
        raise ValueError("terminating proof without certificate")
    lines = ["YES"]
    lines.extend(_entry_lines(cert))
    lines.append("obligations")
    for entry in cert.obligations:
        chain = ", ".join(entry.chain) if entry.chain else "-"
        lines.append(f"{entry.required} {entry.rule.lhs} -> {entry.rule.rhs}  [{chain}]")
    return "\n".join(lines) + "\n"


def _fmt_seconds(value: float) -> str:
    text = f"{value:.3f}".rstrip("0").rstrip(".")
    return f"{text} s"


# -- parsing certificates back ------------------------------------------

_HEAD_RE = re.compile(r"^([^\s_()=]+)_([AB])(?:\((.*?)\))?$")
_RANK_RE = re.compile(r"^rank\(([^\s()]+)\)$")
_STATUS_RE = re.compile(r"^status\(([^\s()]+)\)$")
_LINEAR_TERM_RE = re.compile(r"^(?:(\d+)\*)?([A-Za-z]\w*)$")
_BRANCH_RE = re.compile(r"^([A-Za-z]\w*)(?:\s*([+-])\s*(\d+))?$")


def _symbol_for(name: str, arity: int) -> Symbol:
    marked = TUPLE_MARK in name or BANG_MARK in name
    return Symbol(name, arity, marked)


def _parse_linear_expr(
    expr: str, args: list[str], where: str
) -> tuple[int, tuple[int, ...]]:
    const = 0
    coeffs = [0] * len(args)
    for piece in expr.split("+"):
        piece = piece.strip()
        if piece.isdigit():
            const += int(piece)
            continue
        m = _LINEAR_TERM_RE.match(piece)
        if not m or m.group(2) not in args:
            raise CertificateError(f"{where}: cannot read linear term {piece!r}")
        coeffs[args.index(m.group(2))] += int(m.group(1) or 1)
    return (const, tuple(coeffs))


def _parse_maxplus_expr(
    expr: str, args: list[str], where: str
) -> tuple[int, tuple[tuple[int, int], ...]]:
    expr = expr.strip()
    if expr.startswith("max{") and expr.endswith("}"):
        branches = [p.strip() for p in expr[4:-1].split(",")]
    else:
        branches = [expr]
    base = 0
    specs: list[tuple[int, int]] = [(0, 0)] * len(args)
    saw_const = False
    for branch in branches:
        if re.fullmatch(r"\d+", branch):
            base = max(base, int(branch))
            saw_const = True
            continue
        m = _BRANCH_RE.match(branch)
        if not m or m.group(1) not in args:
            raise CertificateError(f"{where}: cannot read max/plus branch {branch!r}")
        offset = 0
        if m.group(2):
            offset = int(m.group(3))
            if m.group(2) == "-":
                offset = -offset
        specs[args.index(m.group(1))] = (1, offset)
    if not saw_const and not branches:
        raise CertificateError(f"{where}: empty max/plus expression")
    return (base, tuple(specs))


def parse_certificate(text: str) -> Certificate:
    """Rebuild a certificate from a parameter block (or a whole proof).

    Verdict lines are skipped and everything from an ``obligations``
    line on is ignored, so a proof emitted by the prover parses as the
    certificate it embeds.
    """
    template: str | None = None
    linear: dict[str, tuple[list[str], str]] = {}
    maxplus: dict[str, tuple[list[str], str]] = {}
    ranks: dict[str, int] = {}
    statuses: dict[str, tuple[int, ...]] = {}

    for raw in text.splitlines():
        line = raw.strip()
        if not line or line in ("YES", "MAYBE", "TIMEOUT"):
            continue
        if line == "obligations":
            break
        if line.startswith("template "):
            template = line[len("template "):].strip()
            continue
        if "=" not in line:
            continue
        head, expr = (part.strip() for part in line.split("=", 1))
        rank_m = _RANK_RE.match(head)
        if rank_m:
            if not re.fullmatch(r"\d+", expr):
                raise CertificateError(f"precedence: bad rank for {rank_m.group(1)}")
            ranks[rank_m.group(1)] = int(expr)
            continue
        status_m = _STATUS_RE.match(head)
        if status_m:
            inner = expr.strip()
            if not (inner.startswith("[") and inner.endswith("]")):
                raise CertificateError(f"status: bad positions for {status_m.group(1)}")
            body = inner[1:-1].strip()
            positions = tuple(int(p.strip()) for p in body.split(",")) if body else ()
            statuses[status_m.group(1)] = positions
            continue
        head_m = _HEAD_RE.match(head)
        if not head_m:
            raise CertificateError(f"parameters: cannot read line {raw.strip()!r}")
        name, layer, arglist = head_m.group(1), head_m.group(2), head_m.group(3)
        args = [a.strip() for a in arglist.split(",")] if arglist else []
        (linear if layer == "A" else maxplus)[name] = (args, expr)

    if template is None:
        raise CertificateError("template: missing 'template' line")
    if template not in TEMPLATES:
        raise CertificateError(f"template: unknown template {template!r}")

    interp_a = None
    if linear:
        entries_a = {}
        for name, (args, expr) in linear.items():
            sym = _symbol_for(name, len(args))
            entries_a[sym] = _parse_linear_expr(expr, args, f"interp_a: {name}")
        interp_a = LinearPolyInterpretation(entries_a)

    interp_b = None
    precedence = None
    if template in ("wpo", "kbo-like"):
        if maxplus:
            raise CertificateError(
                f"interp_b: template {template} takes a precedence, not a max/plus layer"
            )
        if ranks:
            by_arity = {s.name: s for s in (interp_a.entries if interp_a else ())}
            precedence = Precedence(
                {by_arity.get(n, _symbol_for(n, 0)): r for n, r in ranks.items()}
            )
    else:
        if ranks:
            raise CertificateError(
                f"precedence: template {template} takes a max/plus layer, not ranks"
            )
        if maxplus:
            entries_b = {}
            for name, (args, expr) in maxplus.items():
                sym = _symbol_for(name, len(args))
                entries_b[sym] = _parse_maxplus_expr(expr, args, f"interp_b: {name}")
            interp_b = MaxPlusInterpretation(entries_b)

    status = None
    if statuses:
        by_name = {}
        if interp_a is not None:
            by_name.update({s.name: s for s in interp_a.entries})
        if interp_b is not None:
            by_name.update({s.name: s for s in interp_b.entries})
        entries = {}
        for name, positions in statuses.items():
            if name not in by_name:
                raise CertificateError(f"status: unknown symbol {name}")
            entries[by_name[name]] = positions
        status = Status(entries)

    kind = "dp" if template in ("wpo", "gwpo", "spo") else "direct"
    return Certificate(
        template=template,
        kind=kind,
        interp_a=interp_a,
        interp_b=interp_b,
        precedence=precedence,
        status=status,
    )
