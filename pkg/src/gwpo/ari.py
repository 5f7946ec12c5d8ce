"""Problem files in the ARI s-expression format.

A problem file is a sequence of s-expressions::

    (format TRS)
    (fun f 2) (fun a 0)
    (rule (f x a) x)

``(format TRS)`` must come first; ``fun`` declares a symbol with its
arity; identifiers that are not declared functions are variables.
``;`` starts a comment running to the end of the line.  Constants may
be written bare (``a``) or applied (``(a)``); they print bare.

``parse_ari`` raises :class:`ParseError` with a machine-readable code
and the source position: ``syntax`` for malformed input, ``arity`` for
a symbol used with the wrong argument count, ``variable-lhs`` and
``fresh-rhs-variable`` for the rule well-formedness violations.

The characters ``#`` and ``!`` are reserved for generated symbols
(dependency-pair roots and root markers) and are rejected in input
identifiers, so generated names can never collide with declared ones.
"""

from __future__ import annotations

from .terms import App, Rule, Signature, Symbol, TRS, Term, TermError, Var

RESERVED_CHARS = "#!"


class ParseError(TermError):
    """Problem-file rejection; ``code``, 1-based ``line`` and ``col``."""

    def __init__(self, code: str, message: str, line: int, col: int):
        super().__init__(code, f"{line}:{col}: {message}")
        self.line = line
        self.col = col


# -- tokenizer ----------------------------------------------------------


class _Token:
    __slots__ = ("text", "line", "col")

    def __init__(self, text: str, line: int, col: int):
        self.text = text
        self.line = line
        self.col = col


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
        elif ch in " \t\r":
            col += 1
            i += 1
        elif ch == ";":
            while i < n and text[i] != "\n":
                i += 1
        elif ch in "()":
            tokens.append(_Token(ch, line, col))
            col += 1
            i += 1
        else:
            start = i
            start_col = col
            while i < n and text[i] not in " \t\r\n();":
                i += 1
                col += 1
            tokens.append(_Token(text[start:i], line, start_col))
    return tokens


# s-expressions are represented as _Token leaves and lists of them;
# a list remembers the position of its opening parenthesis.


class _SExpr(list):
    __slots__ = ("line", "col")

    def __init__(self, line: int, col: int):
        super().__init__()
        self.line = line
        self.col = col


def _read_sexprs(tokens: list[_Token]) -> list:
    out: list = []
    stack: list[_SExpr] = []
    for tok in tokens:
        if tok.text == "(":
            node = _SExpr(tok.line, tok.col)
            if stack:
                stack[-1].append(node)
            else:
                out.append(node)
            stack.append(node)
        elif tok.text == ")":
            if not stack:
                raise ParseError("syntax", "unbalanced ')'", tok.line, tok.col)
            stack.pop()
        else:
            if stack:
                stack[-1].append(tok)
            else:
                out.append(tok)
    if stack:
        open_ = stack[-1]
        raise ParseError("syntax", "unclosed '('", open_.line, open_.col)
    return out


# -- parsing ------------------------------------------------------------


def _check_identifier(name: str, line: int, col: int) -> None:
    for ch in RESERVED_CHARS:
        if ch in name:
            raise ParseError(
                "syntax",
                f"character {ch!r} is reserved for generated symbols: {name}",
                line,
                col,
            )


def _parse_term(node, sig: Signature) -> Term:
    if isinstance(node, _Token):
        _check_identifier(node.text, node.line, node.col)
        if node.text in sig:
            sym = sig.symbol(node.text)
            if sym.arity != 0:
                raise ParseError(
                    "arity",
                    f"symbol {sym.name} has arity {sym.arity}, got 0 arguments",
                    node.line,
                    node.col,
                )
            return App(sym, ())
        return Var(node.text)
    if not node:
        raise ParseError("syntax", "empty term", node.line, node.col)
    head = node[0]
    if not isinstance(head, _Token):
        raise ParseError("syntax", "expected a symbol", head.line, head.col)
    _check_identifier(head.text, head.line, head.col)
    if head.text not in sig:
        raise ParseError(
            "syntax", f"undeclared function symbol: {head.text}", head.line, head.col
        )
    sym = sig.symbol(head.text)
    args = [_parse_term(a, sig) for a in node[1:]]
    if len(args) != sym.arity:
        raise ParseError(
            "arity",
            f"symbol {sym.name} has arity {sym.arity}, got {len(args)} arguments",
            head.line,
            head.col,
        )
    return App(sym, args)


def parse_term(text: str, sig: Signature) -> Term:
    """Parse one standalone term against ``sig``.

    Same syntax as inside a ``rule`` form: identifiers not declared in
    the signature are variables.
    """
    nodes = _read_sexprs(_tokenize(text))
    if len(nodes) != 1:
        raise ParseError(
            "syntax", f"expected exactly one term, got {len(nodes)}", 1, 1
        )
    return _parse_term(nodes[0], sig)


def _expect_form(node, tag: str | None = None):
    if isinstance(node, _Token):
        raise ParseError(
            "syntax", f"expected a parenthesized form, got {node.text!r}",
            node.line, node.col,
        )
    if not node or not isinstance(node[0], _Token):
        raise ParseError("syntax", "expected a form tag", node.line, node.col)
    if tag is not None and node[0].text != tag:
        raise ParseError(
            "syntax", f"expected ({tag} ...), got ({node[0].text} ...)",
            node.line, node.col,
        )
    return node


def parse_ari(text: str) -> TRS:
    """Parse a problem file into a rewrite system."""
    forms = _read_sexprs(_tokenize(text))
    if not forms:
        raise ParseError("syntax", "empty problem file", 1, 1)

    header = _expect_form(forms[0], "format")
    if len(header) != 2 or not isinstance(header[1], _Token) or header[1].text != "TRS":
        raise ParseError("syntax", "header must be (format TRS)", header.line, header.col)

    symbols: list[Symbol] = []
    names: set[str] = set()
    rules_src: list = []
    seen_rule = False
    for node in forms[1:]:
        form = _expect_form(node)
        tag = form[0].text
        if tag == "fun":
            if seen_rule:
                raise ParseError(
                    "syntax", "function declarations must precede rules",
                    form.line, form.col,
                )
            if len(form) != 3 or not isinstance(form[1], _Token) or not isinstance(form[2], _Token):
                raise ParseError(
                    "syntax", "expected (fun <name> <arity>)", form.line, form.col
                )
            name_tok, arity_tok = form[1], form[2]
            _check_identifier(name_tok.text, name_tok.line, name_tok.col)
            if not arity_tok.text.isdigit():
                raise ParseError(
                    "syntax", f"arity must be a natural number: {arity_tok.text}",
                    arity_tok.line, arity_tok.col,
                )
            if name_tok.text in names:
                raise ParseError(
                    "syntax", f"duplicate declaration of {name_tok.text}",
                    name_tok.line, name_tok.col,
                )
            names.add(name_tok.text)
            symbols.append(Symbol(name_tok.text, int(arity_tok.text)))
        elif tag == "rule":
            if len(form) != 3:
                raise ParseError(
                    "syntax", "expected (rule <lhs> <rhs>)", form.line, form.col
                )
            seen_rule = True
            rules_src.append(form)
        elif tag == "format":
            raise ParseError("syntax", "duplicate (format ...) header", form.line, form.col)
        else:
            raise ParseError("syntax", f"unknown form ({tag} ...)", form.line, form.col)

    sig = Signature(symbols)
    rules: list[Rule] = []
    for form in rules_src:
        lhs = _parse_term(form[1], sig)
        rhs = _parse_term(form[2], sig)
        try:
            rules.append(Rule(lhs, rhs))
        except TermError as exc:
            raise ParseError(exc.code, str(exc), form.line, form.col) from None
    return TRS(sig, rules)


# -- printing -----------------------------------------------------------


def _print_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if not t.args:
        return t.sym.name
    return "(" + " ".join([t.sym.name] + [_print_term(a) for a in t.args]) + ")"


def print_ari(trs: TRS) -> str:
    """Render a rewrite system; ``parse_ari`` on the result is identity."""
    lines = ["(format TRS)"]
    for sym in trs.signature:
        lines.append(f"(fun {sym.name} {sym.arity})")
    for rule in trs.rules:
        lines.append(f"(rule {_print_term(rule.lhs)} {_print_term(rule.rhs)})")
    return "\n".join(lines) + "\n"
