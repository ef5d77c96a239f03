"""Group elements of a Coxeter system via the exact geometric representation.

An element is the pair of matrices (action on simple-root coordinates, and
the same for the inverse), with exact field entries.  The representation is
faithful, so matrix equality decides group equality, descent sets fall out
of root signs, and lengths come from a ShortLex normal-form walk.  Balls,
reduced-expression enumeration, braid closures and minimal coset
representatives are all built on top of that engine, with size caps that
turn non-termination on infinite groups into clean errors.
"""

import math

from . import _kernel as K
from . import algebra
from .algebra import AlgReal
from . import diagram as diagram_mod

DEFAULT_BALL_CAP = 10**6
DEFAULT_WORDS_CAP = 10**5
DEFAULT_NF_CAP = 10**6

__all__ = [
    "CoxeterGroup",
    "GroupElement",
    "Ball",
    "group_for",
    "parse_word",
    "format_word",
    "CapExceededError",
    "MixedSignRootError",
    "NonReducedWordError",
    "GroupMismatchError",
]


class CapExceededError(RuntimeError):
    """A configured size or iteration cap was hit."""

    def __init__(self, message, **info):
        super().__init__(message)
        self.info = info


class MixedSignRootError(RuntimeError):
    """A root image had mixed coordinate signs: internal corruption."""


class NonReducedWordError(ValueError):
    """A word required to be reduced admits a nil move."""


class GroupMismatchError(ValueError):
    """Elements of different groups were combined."""


def _root_vec_sign(vec):
    """+1 for a positive root, -1 for a negative one; mixed signs raise."""
    pos = neg = False
    for e in vec:
        s = e.sign()
        if s > 0:
            pos = True
        elif s < 0:
            neg = True
    if pos and neg:
        raise MixedSignRootError("root image has mixed coordinate signs")
    if pos:
        return 1
    if neg:
        return -1
    raise MixedSignRootError("root image is the zero vector")


class CoxeterGroup:
    """Shared context for one diagram: field, form, generator actions."""

    def __init__(self, diagram):
        self.diagram = diagram
        self.n = diagram.rank
        self.field = algebra.field_for(diagram)
        self.gram = algebra.gram(diagram, self.field)
        # sparse generator data: for s, the non-commuting columns j with the
        # exact coefficient -2*(alpha_s | alpha_j)
        minus_two = self.field.rational(-2)
        self._nbr = []
        for s in range(self.n):
            row = []
            for j in range(self.n):
                if j == s:
                    continue
                g = self.gram.entry(s, j)
                if not g.is_zero():
                    row.append((j, minus_two * g))
            self._nbr.append(tuple(row))
        zero, one = self.field.zero, self.field.one
        self._id_cols = tuple(
            tuple(one if i == j else zero for i in range(self.n)) for j in range(self.n)
        )
        self._identity = GroupElement(self, self._id_cols, self._id_cols)
        self._identity._len = 0
        self._identity._nf = ()

    # -- generator actions on column matrices --------------------------------

    def _rmul_gen(self, cols, s):
        """Columns of w -> columns of w*s."""
        cs = cols[s]
        new = list(cols)
        for j, coeff in self._nbr[s]:
            colj = cols[j]
            new[j] = tuple(
                colj[i] if cs[i].is_zero() else colj[i] + coeff * cs[i]
                for i in range(self.n)
            )
        new[s] = tuple(-x for x in cs)
        return tuple(new)

    def _lmul_gen(self, cols, s):
        """Columns of w -> columns of s*w (row operation on row s)."""
        nbr = self._nbr[s]
        new = []
        for col in cols:
            acc = -col[s]
            for k, coeff in nbr:
                if not col[k].is_zero():
                    acc = acc + coeff * col[k]
            c2 = list(col)
            c2[s] = acc
            new.append(tuple(c2))
        return tuple(new)

    def _mat_mul(self, a, b):
        """Columns of the product: (a @ b) column j = a applied to b's column j."""
        n = self.n
        mp = self.field._mp_low
        field = self.field
        rows_nums = [[a[k][i].nums for k in range(n)] for i in range(n)]
        rows_dens = [[a[k][i].den for k in range(n)] for i in range(n)]
        out = []
        for j in range(n):
            bn = [e.nums for e in b[j]]
            bd = [e.den for e in b[j]]
            col = []
            for i in range(n):
                nums, den = K.dot_mod(rows_nums[i], rows_dens[i], bn, bd, mp)
                col.append(AlgReal._new(field, nums, den))
            out.append(tuple(col))
        return tuple(out)

    # -- public surface -------------------------------------------------------

    @property
    def identity(self):
        return self._identity

    def generator(self, s):
        return self._identity.right_mul_gen(s)

    def element_of(self, word):
        """Product of generators in word order (leftmost applied first)."""
        cols = self._id_cols
        icols = self._id_cols
        for s in word:
            if not 0 <= s < self.n:
                raise IndexError(f"generator index {s} out of range")
            cols = self._rmul_gen(cols, s)
            icols = self._lmul_gen(icols, s)
        return GroupElement(self, cols, icols)

    def ball(self, radius, cap=DEFAULT_BALL_CAP):
        """All elements of length <= radius, with counts per length (BFS)."""
        if radius < 0:
            raise ValueError("radius must be >= 0")
        seen = {self._id_cols: self._identity}
        elements = [self._identity]
        counts = [1]
        frontier = [self._identity]
        for k in range(1, radius + 1):
            new = []
            for el in frontier:
                for s in range(self.n):
                    cols = self._rmul_gen(el.cols, s)
                    if cols in seen:
                        continue
                    if len(seen) >= cap:
                        raise CapExceededError(
                            f"ball exceeded cap of {cap} elements",
                            cap=cap,
                            radius=k,
                        )
                    cand = GroupElement(self, cols, self._lmul_gen(el.icols, s))
                    cand._len = k
                    seen[cols] = cand
                    new.append(cand)
            if not new:
                break
            counts.append(len(new))
            elements.extend(new)
            frontier = new
        return Ball(self, radius, elements, counts)

    def weak_leq(self, v, w):
        """Right weak order: v <= w iff the lengths add along v * (v^-1 w)."""
        if v.group is not self or w.group is not self:
            raise GroupMismatchError("elements belong to a different group")
        lv = v.length()
        lw = w.length()
        if lv > lw:
            return False
        if lv == lw:
            return v == w
        return lv + (v.inverse() * w).length() == lw

    def reduced_expressions(self, w, cap=DEFAULT_WORDS_CAP):
        """All reduced expressions of w, by recursion over right descents."""
        memo = {}
        total = [0]

        def rec(el):
            cached = memo.get(el)
            if cached is not None:
                return cached
            if el.length() == 0:
                result = ((),)
            else:
                out = []
                for s in el.right_descents():
                    for sub in rec(el.right_mul_gen(s)):
                        out.append(sub + (s,))
                total[0] += len(out)
                if total[0] > cap:
                    raise CapExceededError(
                        f"reduced-expression enumeration exceeded cap of {cap}", cap=cap
                    )
                result = tuple(out)
            memo[el] = result
            return result

        return sorted(rec(w))

    def count_reduced_expressions(self, w):
        memo = {}

        def rec(el):
            if el.length() == 0:
                return 1
            cached = memo.get(el)
            if cached is not None:
                return cached
            total = sum(rec(el.right_mul_gen(s)) for s in el.right_descents())
            memo[el] = total
            return total

        return rec(w)

    def braid_closure(self, word, cap=DEFAULT_WORDS_CAP):
        """BFS closure of a reduced word under braid moves.

        Words with an adjacent equal pair admit a nil move, which cannot
        happen when the input is reduced; encountering one raises
        NonReducedWordError.
        """
        word = tuple(word)
        for s in word:
            if not 0 <= s < self.n:
                raise IndexError(f"generator index {s} out of range")
        seen = {word}
        queue = [word]
        labels = self.diagram.labels
        while queue:
            cur = queue.pop()
            for i in range(len(cur) - 1):
                s, t = cur[i], cur[i + 1]
                if s == t:
                    raise NonReducedWordError(
                        f"nil move applies at position {i}: word is not reduced"
                    )
                m = labels[s][t]
                if math.isinf(m) or i + m > len(cur):
                    continue
                m = int(m)
                if all(cur[i + k] == (s if k % 2 == 0 else t) for k in range(m)):
                    flip = tuple(t if k % 2 == 0 else s for k in range(m))
                    new = cur[:i] + flip + cur[i + m :]
                    if new not in seen:
                        if len(seen) >= cap:
                            raise CapExceededError(
                                f"braid closure exceeded cap of {cap}", cap=cap
                            )
                        seen.add(new)
                        queue.append(new)
        return frozenset(seen)

    def min_coset_reps(self, J, K, radius, cap=DEFAULT_BALL_CAP):
        """Elements of the parabolic W_J with no right descent in K, length <= radius.

        These are the minimal coset representatives of W_J modulo W_K,
        truncated at the given length.
        """
        J = sorted(set(J))
        K = sorted(set(K))
        if not set(K) <= set(J):
            raise ValueError("K must be a subset of J")
        if J and not (0 <= J[0] and J[-1] < self.n):
            raise ValueError("J contains out-of-range indices")
        sub = diagram_mod.subdiagram(self.diagram, J)
        subgroup = group_for(sub)
        kpos = {J.index(k) for k in K}
        out = []
        for el in subgroup.ball(radius, cap).elements:
            if el.right_descents() & kpos:
                continue
            word = tuple(J[t] for t in el.shortlex_nf())
            lifted = self.element_of(word)
            lifted._len = el.length()
            lifted._nf = word
            out.append(lifted)
        out.sort(key=lambda e: (e.length(), e.shortlex_nf()))
        return out

    def __repr__(self):
        return f"CoxeterGroup({self.diagram!r})"


class GroupElement:
    """Immutable group element; equality and hashing via the exact matrix."""

    __slots__ = ("group", "cols", "icols", "_len", "_nf", "_hash", "_rdes")

    def __init__(self, group, cols, icols):
        self.group = group
        self.cols = cols
        self.icols = icols
        self._len = None
        self._nf = None
        self._hash = None
        self._rdes = None

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.group is other.group and self.cols == other.cols

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.cols)
        return self._hash

    def is_identity(self):
        return self.cols == self.group._id_cols

    def right_mul_gen(self, s):
        g = self.group
        return GroupElement(g, g._rmul_gen(self.cols, s), g._lmul_gen(self.icols, s))

    def left_mul_gen(self, s):
        g = self.group
        return GroupElement(g, g._lmul_gen(self.cols, s), g._rmul_gen(self.icols, s))

    def __mul__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        if other.group is not self.group:
            raise GroupMismatchError("elements belong to different groups")
        g = self.group
        return GroupElement(
            g, g._mat_mul(self.cols, other.cols), g._mat_mul(other.icols, self.icols)
        )

    def inverse(self):
        el = GroupElement(self.group, self.icols, self.cols)
        el._len = self._len
        return el

    def right_descents(self):
        """Generators s with w(alpha_s) negative, i.e. l(ws) < l(w)."""
        if self._rdes is None:
            self._rdes = frozenset(
                s for s in range(self.group.n) if _root_vec_sign(self.cols[s]) < 0
            )
        return self._rdes

    def left_descents(self):
        return frozenset(
            s for s in range(self.group.n) if _root_vec_sign(self.icols[s]) < 0
        )

    def shortlex_nf(self, cap=DEFAULT_NF_CAP):
        """Lexicographically smallest reduced word, built by stripping the
        smallest left descent."""
        if self._nf is None:
            g = self.group
            cols, icols = self.cols, self.icols
            word = []
            while True:
                if len(word) > cap:
                    raise CapExceededError(
                        f"normal-form walk exceeded {cap} steps", cap=cap
                    )
                s = None
                for t in range(g.n):
                    if _root_vec_sign(icols[t]) < 0:
                        s = t
                        break
                if s is None:
                    if cols != g._id_cols:
                        raise MixedSignRootError(
                            "element with no left descent is not the identity"
                        )
                    break
                word.append(s)
                cols = g._lmul_gen(cols, s)
                icols = g._rmul_gen(icols, s)
            self._nf = tuple(word)
            self._len = len(word)
        return self._nf

    def length(self):
        if self._len is None:
            self.shortlex_nf()
        return self._len

    def support(self):
        """Generators used by every reduced expression."""
        return frozenset(self.shortlex_nf())

    def word_str(self):
        names = self.group.diagram.names
        return " ".join(names[s] for s in self.shortlex_nf()) or "e"

    def __repr__(self):
        return f"<{self.word_str()}>"


class Ball:
    """BFS ball: elements in discovery order plus counts per length."""

    def __init__(self, group, radius, elements, counts):
        self.group = group
        self.radius = radius
        self.elements = elements
        self.counts = counts

    def of_length(self, k):
        start = sum(self.counts[:k])
        if k >= len(self.counts):
            return []
        return self.elements[start : start + self.counts[k]]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


_GROUPS = {}


def group_for(diagram):
    """Shared CoxeterGroup per diagram (groups are immutable contexts)."""
    g = _GROUPS.get(diagram)
    if g is None:
        g = CoxeterGroup(diagram)
        _GROUPS[diagram] = g
    return g


def parse_word(diagram, text):
    """Word from space-separated generator names; a single run of one-letter
    names may be written without spaces ("stuvw"), and a bare "e" (when no
    generator has that name) is the empty word."""
    tokens = text.split()
    if not tokens:
        return ()
    index = diagram._index
    if len(tokens) == 1 and tokens[0] not in index:
        token = tokens[0]
        if token == "e":
            return ()
        if all(ch in index for ch in token):
            return tuple(index[ch] for ch in token)
    out = []
    for tok in tokens:
        if tok not in index:
            raise diagram_mod.DiagramError(f"unknown generator {tok!r} in word")
        out.append(index[tok])
    return tuple(out)


def format_word(diagram, word):
    return " ".join(diagram.names[s] for s in word) or "e"
