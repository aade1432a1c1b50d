"""Identity catalog: line grammar, parser, renderer.

One record per line, comments from '#':

    check <kind>[ assoc] <id>: <lhs> == <rhs>
    check relationZero <id>: <expr>
    check zhuMember <id>: <elem> rank <d> bound <W>

Kinds: product, eigen, twisted, commutator, relationZero, zhuMember,
boundaryPoly.  State atoms vac, vactw, exp(lam), u; h(i,n) and element
modes E[n] apply by juxtaposition.  Element atoms S(i,j;r,s), omega(i),
omega, H(i), J(i), Eu(i,j), Et(i,j), Lambda(i,j); wmode(j,m)@X,
Hmode(j,m)@X, Smode(i,j;r,s;m)@X and wmode(m)@X build the m-th mode image
of X inside an element expression; star(a,b)/circ(a,b) are the level-zero
products; w1(i)/H3(i) are the formal boundary letters of word records.
Scalars are rationals extended by lam(i), zeta(i), xi(i), eps and
binom(.,.); mode indices are integer-linear in l, m, eps.  The index
variables i, j, k denote pairwise distinct generators, instantiated by
the suite runner.
"""

import re
from fractions import Fraction

KINDS = ("product", "eigen", "twisted", "commutator", "relationZero",
         "zhuMember", "boundaryPoly")

_TOKEN_RE = re.compile(
    r"(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>==|[-+*/^@()\[\];,:])|(?P<ws>\s+)")

INDEX_VARS = ("i", "j", "k")
MODE_VARS = ("l", "m", "eps")
SCALAR_FUNS = ("lam", "zeta", "xi")
ELEMENT_FUNS = {"S": None, "omega": 1, "H": 1, "J": 1, "Eu": 2, "Et": 2,
                "Lambda": 2}
BUILTINS = ("derive", "eliminate", "special", "gchain")


class CatalogError(ValueError):
    def __init__(self, msg, line=None, col=None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = " at line %d" % line
            if col is not None:
                where += ", column %d" % col
        super().__init__(msg + where)


def _tokenize(text, lineno):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise CatalogError("bad character %r" % text[pos], lineno, pos + 1)
        if m.lastgroup == "num":
            out.append(("num", int(m.group()), pos))
        elif m.lastgroup == "name":
            out.append(("name", m.group(), pos))
        elif m.lastgroup == "op":
            out.append(("op", m.group(), pos))
        pos = m.end()
    out.append(("end", None, pos))
    return out


class Record:
    __slots__ = ("id", "kind", "assoc", "lhs", "rhs", "meta")

    def __init__(self, rid, kind, assoc, lhs, rhs, meta=None):
        self.id = rid
        self.kind = kind
        self.assoc = assoc
        self.lhs = lhs
        self.rhs = rhs
        self.meta = meta or {}

    def __repr__(self):
        return "Record(%s)" % self.id


class Parser:
    def __init__(self, tokens, lineno):
        self.toks = tokens
        self.pos = 0
        self.lineno = lineno

    def peek(self, ahead=0):
        return self.toks[min(self.pos + ahead, len(self.toks) - 1)]

    def next(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise CatalogError(msg, self.lineno, tok[2] + 1)

    def expect(self, kind, value=None):
        t = self.next()
        if t[0] != kind or (value is not None and t[1] != value):
            self.fail("expected %s%s, found %r"
                      % (kind, " %r" % value if value else "", t[1]), t)
        return t

    def accept(self, kind, value=None):
        t = self.peek()
        if t[0] == kind and (value is None or t[1] == value):
            self.pos += 1
            return t
        return None

    # -- integer-linear index expressions ------------------------------------

    def iexpr(self):
        const = 0
        lin = {}
        sign = -1 if self.accept("op", "-") else 1
        while True:
            t = self.peek()
            if t[0] == "num":
                self.next()
                if self.accept("op", "*"):
                    v = self.expect("name")
                    if v[1] not in MODE_VARS:
                        self.fail("expected a mode variable", v)
                    lin[v[1]] = lin.get(v[1], 0) + sign * t[1]
                else:
                    const += sign * t[1]
            elif t[0] == "name" and t[1] in MODE_VARS:
                self.next()
                lin[t[1]] = lin.get(t[1], 0) + sign
            else:
                self.fail("expected an index term")
            if self.accept("op", "+"):
                sign = 1
            elif self.accept("op", "-"):
                sign = -1
            else:
                break
        return ("iexp", const, tuple(sorted((k, v) for k, v in lin.items()
                                            if v)))

    def index_atom(self):
        t = self.next()
        if t[0] == "num":
            return t[1]  # concrete generator index (rendered states, CLI)
        if t[0] != "name" or t[1] not in INDEX_VARS:
            self.fail("expected an index variable, found %r" % (t[1],), t)
        return t[1]

    # -- scalars ---------------------------------------------------------------

    def _scalar_ahead(self, ahead=0):
        t = self.peek(ahead)
        return (t[0] == "num"
                or (t[0] == "name" and (t[1] in SCALAR_FUNS
                                        or t[1] in ("binom", "eps"))))

    def _scalar_factor(self):
        t = self.peek()
        if t[0] == "num":
            self.next()
            val = Fraction(t[1])
            if self.accept("op", "/"):
                val /= self.expect("num")[1]
            node = ("num", val)
        elif t[0] == "name" and t[1] == "binom":
            self.next()
            self.expect("op", "(")
            a = self.iexpr()
            self.expect("op", ",")
            b = self.iexpr()
            self.expect("op", ")")
            node = ("binom", a, b)
        elif t[0] == "name" and t[1] in SCALAR_FUNS:
            self.next()
            self.expect("op", "(")
            idx = self.index_atom()
            self.expect("op", ")")
            node = ("svar", t[1], idx)
        elif t[0] == "name" and t[1] == "eps":
            self.next()
            node = ("svar", "eps", None)
        elif t[0] == "op" and t[1] == "(":
            self.next()
            node = self._scalar_sum()
            self.expect("op", ")")
        else:
            self.fail("expected a scalar")
        if self.accept("op", "^"):
            node = ("spow", node, self.expect("num")[1])
        return node

    def _scalar_term(self):
        node = self._scalar_factor()
        while True:
            if (self.peek()[0] == "op" and self.peek()[1] == "*"
                    and self._scalar_or_paren(1)):
                self.next()
                node = ("smul", node, self._scalar_factor())
            else:
                return node

    def _scalar_or_paren(self, ahead):
        t = self.peek(ahead)
        return self._scalar_ahead(ahead) or (t[0] == "op" and t[1] == "(")

    def _scalar_sum(self):
        sign = -1 if self.accept("op", "-") else 1
        node = self._scalar_term()
        if sign < 0:
            node = ("smul", ("num", Fraction(-1)), node)
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.next()
                rhs = self._scalar_term()
                if t[1] == "-":
                    rhs = ("smul", ("num", Fraction(-1)), rhs)
                node = ("sadd", node, rhs)
            else:
                return node

    # -- general expressions -----------------------------------------------------

    def expr(self):
        node = self.term()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.next()
                rhs = self.term()
                if t[1] == "-":
                    rhs = ("scale", ("num", Fraction(-1)), rhs)
                node = ("add", node, rhs)
            else:
                return node

    def term(self):
        neg = False
        while self.accept("op", "-"):
            neg = not neg
        scalar = None
        if self._scalar_or_paren(0):
            save = self.pos
            try:
                cand = self._scalar_term()
            except CatalogError:
                cand = None
                self.pos = save
            if cand is not None:
                if self.accept("op", "*"):
                    scalar = cand
                elif cand[0] == "num" and not self._atom_ahead():
                    return ("znum", -cand[1] if neg else cand[1])
                else:
                    self.pos = save
        chain = [self.atom()]
        while self._atom_ahead():
            chain.append(self.atom())
        node = chain[-1]
        for op in reversed(chain[:-1]):
            node = ("apply", op, node)
        if scalar is not None:
            node = ("scale", scalar, node)
        if neg:
            node = ("scale", ("num", Fraction(-1)), node)
        return node

    def _atom_ahead(self):
        t = self.peek()
        if t[0] == "name":
            return (t[1] in ("vac", "vactw", "exp", "u", "h", "w1", "H3",
                             "star", "circ", "comm", "wmode", "Hmode",
                             "Smode") or t[1] in ELEMENT_FUNS
                    or t[1] in BUILTINS)
        return t[0] == "op" and t[1] == "("

    def _mode_arg(self):
        """Mode argument for h(): iexpr or a half-integer literal."""
        sign = -1 if self.accept("op", "-") else 1
        t = self.peek()
        if t[0] == "num" and self.peek(1) == ("op", "/", self.peek(1)[2]):
            num = self.next()[1]
            self.expect("op", "/")
            den = self.expect("num")[1]
            return ("frac", Fraction(sign * num, den))
        # rebuild sign for iexpr
        if sign < 0:
            self.pos -= 1
        return self.iexpr()

    def atom(self):
        t = self.peek()
        if t[0] == "op" and t[1] == "(":
            self.next()
            node = self.expr()
            self.expect("op", ")")
            return self._postfix(node)
        if t[0] != "name":
            self.fail("expected an atom, found %r" % (t[1],))
        name = t[1]
        self.next()
        if name in ("vac", "vactw", "u"):
            return (name,)
        if name == "exp":
            self.expect("op", "(")
            self.expect("name", "lam")
            self.expect("op", ")")
            return ("expl",)
        if name == "h":
            self.expect("op", "(")
            gen = self.index_atom()
            self.expect("op", ",")
            mode = self._mode_arg()
            self.expect("op", ")")
            if self.accept("op", "^"):
                return ("hpow", gen, mode, self.expect("num")[1])
            return ("h", gen, mode)
        if name in ("w1", "H3"):
            self.expect("op", "(")
            gen = self.index_atom()
            self.expect("op", ")")
            return (name, gen)
        if name in ("star", "circ"):
            self.expect("op", "(")
            a = self.expr()
            self.expect("op", ",")
            b = self.expr()
            self.expect("op", ")")
            return self._postfix((name, a, b))
        if name == "comm":
            self.expect("op", "(")
            a = self.atom()
            self.expect("op", ",")
            b = self.atom()
            self.expect("op", ")")
            return ("comm", a, b)
        if name in BUILTINS:
            self.expect("op", "(")
            t2 = self.next()
            if t2[0] not in ("name", "num"):
                self.fail("expected a builtin argument", t2)
            self.expect("op", ")")
            return ("builtin", name, str(t2[1]))
        if name in ("wmode", "Hmode", "Smode"):
            self.expect("op", "(")
            args = []
            if name == "Smode":
                args.append(self.index_atom())
                self.expect("op", ",")
                args.append(self.index_atom())
                self.expect("op", ";")
                args.append(self.expect("num")[1])
                self.expect("op", ",")
                args.append(self.expect("num")[1])
                self.expect("op", ";")
            elif name == "Hmode" or (self.peek()[0] == "name"
                                     and self.peek()[1] in INDEX_VARS):
                args.append(self.index_atom())
                self.expect("op", ",")
            mode = self.iexpr()
            self.expect("op", ")")
            self.expect("op", "@")
            target = self.atom()
            return (name, tuple(args), mode, target)
        if name in ELEMENT_FUNS:
            if name == "S":
                self.expect("op", "(")
                i = self.index_atom()
                self.expect("op", ",")
                j = self.index_atom()
                self.expect("op", ";")
                r = self.expect("num")[1]
                self.expect("op", ",")
                s = self.expect("num")[1]
                self.expect("op", ")")
                node = ("gen", "S", (i, j, r, s))
            elif name == "omega" and not (self.peek()[0] == "op"
                                          and self.peek()[1] == "("):
                node = ("gen", "omega", ())
            else:
                self.expect("op", "(")
                idx = [self.index_atom()]
                for _ in range(ELEMENT_FUNS[name] - 1):
                    self.expect("op", ",")
                    idx.append(self.index_atom())
                self.expect("op", ")")
                node = ("gen", name, tuple(idx))
            return self._postfix(node)
        self.fail("unknown atom %r" % name, t)

    def _postfix(self, node):
        while self.accept("op", "["):
            mode = self.iexpr()
            self.expect("op", "]")
            node = ("mode", node, mode)
        return node


def parse_line(line, lineno=0):
    p = Parser(_tokenize(line, lineno), lineno)
    p.expect("name", "check")
    kind = p.expect("name")[1]
    if kind not in KINDS:
        p.fail("unknown record kind %r" % kind)
    assoc = bool(p.accept("name", "assoc"))
    rid = p.expect("name")[1]
    p.expect("op", ":")
    if kind == "relationZero":
        rec = Record(rid, kind, assoc, p.expr(), None)
    elif kind == "zhuMember":
        lhs = p.expr()
        p.expect("name", "rank")
        rank = p.expect("num")[1]
        p.expect("name", "bound")
        bound = p.expect("num")[1]
        rec = Record(rid, kind, assoc, lhs, None,
                     {"rank": rank, "bound": bound})
    else:
        lhs = p.expr()
        p.expect("op", "==")
        if (kind == "boundaryPoly" and lhs[0] == "builtin"
                and lhs[1] != "derive"):
            rhs = ("poly", p._scalar_sum())
        else:
            rhs = p.expr()
        rec = Record(rid, kind, assoc, lhs, rhs)
    p.expect("end")
    _check_indices(rec, lineno)
    return rec


def parse_catalog(text):
    """Parse catalog text; raises CatalogError with line/column on the
    first problem, including duplicated record ids."""
    records = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        rec = parse_line(line, lineno)
        if rec.id in seen:
            raise CatalogError("duplicate record id %r (first at line %d)"
                               % (rec.id, seen[rec.id]), lineno)
        seen[rec.id] = lineno
        records.append(rec)
    return records


def _leaves(node):
    yield node
    if isinstance(node, tuple):
        for x in node:
            yield from _leaves(x)


def _check_indices(rec, lineno):
    used = set()
    for part in (rec.lhs, rec.rhs):
        if part is None:
            continue
        for x in _leaves(part):
            if isinstance(x, str) and x in INDEX_VARS:
                used.add(x)
            if (isinstance(x, tuple) and x and x[0] == "gen"
                    and x[1] in ("S", "Eu", "Et", "Lambda")
                    and x[2][0] == x[2][1]):
                raise CatalogError("paired indices must be distinct", lineno)
    rec.meta["indices"] = tuple(sorted(used))


# -- rendering -------------------------------------------------------------------


def render_iexpr(ix):
    if ix[0] == "frac":
        return str(ix[1])
    _, const, lin = ix
    parts = []
    for name, c in lin:
        if c == 1:
            parts.append(name)
        elif c == -1:
            parts.append("-" + name)
        else:
            parts.append("%d*%s" % (c, name))
    if const or not parts:
        parts.append(str(const))
    out = parts[0]
    for pc in parts[1:]:
        out += pc if pc.startswith("-") else "+" + pc
    return out


def render(node):
    kind = node[0]
    if kind == "poly":
        return render(node[1])
    if kind == "num":
        return str(node[1])
    if kind == "znum":
        return str(node[1])
    if kind == "svar":
        return node[1] if node[2] is None else "%s(%s)" % (node[1], node[2])
    if kind == "binom":
        return "binom(%s,%s)" % (render_iexpr(node[1]), render_iexpr(node[2]))
    if kind == "spow":
        return "%s^%d" % (render(node[1]), node[2])
    if kind == "smul":
        if node[1] == ("num", Fraction(-1)):
            return "-%s" % render(node[2])
        return "%s*%s" % (render(node[1]), render(node[2]))
    if kind == "sadd":
        lhs, rhs = render(node[1]), render(node[2])
        if rhs.startswith("-"):
            return "(%s-%s)" % (lhs, rhs[1:])
        return "(%s+%s)" % (lhs, rhs)
    if kind in ("vac", "vactw", "u"):
        return kind
    if kind == "expl":
        return "exp(lam)"
    if kind == "h":
        return "h(%s,%s)" % (node[1], render_iexpr(node[2]))
    if kind == "hpow":
        return "h(%s,%s)^%d" % (node[1], render_iexpr(node[2]), node[3])
    if kind in ("w1", "H3"):
        return "%s(%s)" % (kind, node[1])
    if kind == "gen":
        name, idx = node[1], node[2]
        if name == "S":
            return "S(%s,%s;%d,%d)" % idx
        if name == "omega" and not idx:
            return "omega"
        return "%s(%s)" % (name, ",".join(str(x) for x in idx))
    if kind == "mode":
        return "%s[%s]" % (render(node[1]), render_iexpr(node[2]))
    if kind in ("wmode", "Hmode", "Smode"):
        args, mode, target = node[1], node[2], node[3]
        if kind == "Smode":
            head = "Smode(%s,%s;%d,%d;%s)" % (args[0], args[1], args[2],
                                              args[3], render_iexpr(mode))
        elif args:
            head = "%s(%s,%s)" % (kind, args[0], render_iexpr(mode))
        else:
            head = "wmode(%s)" % render_iexpr(mode)
        return "%s@%s" % (head, render(target))
    if kind in ("star", "circ"):
        return "%s(%s, %s)" % (kind, render(node[1]), render(node[2]))
    if kind == "comm":
        return "comm(%s, %s)" % (render(node[1]), render(node[2]))
    if kind == "builtin":
        return "%s(%s)" % (node[1], node[2])
    if kind == "apply":
        return "%s %s" % (render(node[1]), render(node[2]))
    if kind == "scale":
        inner = render(node[2])
        if node[2][0] == "add":
            inner = "(%s)" % inner
        if node[1] == ("num", Fraction(-1)):
            return "-%s" % inner
        return "%s*%s" % (render(node[1]), inner)
    if kind == "add":
        rhs = render(node[2])
        lhs = render(node[1])
        if rhs.startswith("-"):
            return "%s - %s" % (lhs, rhs[1:])
        return "%s + %s" % (lhs, rhs)
    raise ValueError("cannot render %r" % (node,))


def render_record(rec):
    head = "check %s%s %s: " % (rec.kind, " assoc" if rec.assoc else "",
                                rec.id)
    if rec.kind == "relationZero":
        return head + render(rec.lhs)
    if rec.kind == "zhuMember":
        return head + "%s rank %d bound %d" % (
            render(rec.lhs), rec.meta["rank"], rec.meta["bound"])
    return head + "%s == %s" % (render(rec.lhs), render(rec.rhs))
