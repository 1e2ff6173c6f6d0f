"""Decoration-group backends: finite tables, the rank-2 lattice, and
genus-g surface groups with the word problem solved by Dehn's algorithm.

All algebra layers consume the same small interface: exact multiplication,
inversion, equality, canonical forms, and breadth-first balls.

* ``FiniteGroup`` -- explicit multiplication table, fully validated at load
  (closure, two-sided identity, inverses, associativity on all triples).
* ``LatticeGroup`` -- the free abelian group on two generators (genus 1).
* ``SurfaceGroup`` -- the one-relator presentation
  < a1, b1, .., ag, bg | [a1,b1]...[ag,bg] > for genus g >= 2.  Words are
  kept freely reduced and Dehn-reduced: any subword matching more than half
  of a cyclic conjugate of the relator (or its inverse) is replaced by the
  inverse of the complement, which strictly shortens the word.  The
  presentation is C'(1/6) small cancellation, so by Greendlinger's lemma a
  nonempty Dehn-reduced word is never trivial; this decides the word
  problem.

Dehn-reduced words are not unique normal forms, so element identity goes
through an interning registry: each equivalence class receives a stable
integer uid (assigned deterministically, in the order classes are first
seen), used for hashing and ordering by the algebra layers.  Registry
lookups are cheap: candidate classes are bucketed by the abelianization
image, and only same-bucket representatives are compared via the word
problem.

Contexts are mutable only through the interning registry and are not
synchronized; confine each context to a single thread.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import ParseError, ResourceLimitError

Payload = Tuple


@dataclass(frozen=True, eq=False)
class GroupElement:
    """An interned group element; equality and hashing go through the uid,
    so distinct spellings of one element compare equal once canonicalized."""

    ctx: "GroupContext" = field(repr=False)
    payload: Payload
    uid: int

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupElement)
            and self.ctx is other.ctx
            and self.uid == other.uid
        )

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.uid))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return self.ctx.multiply(self, other)

    def inverse(self) -> "GroupElement":
        return self.ctx.invert(self)

    def __str__(self) -> str:
        return self.ctx.format_element(self)

    def __repr__(self) -> str:
        return f"<{self.ctx.kind} {self.ctx.format_element(self)}>"


class GroupContext:
    """Base class: interning registry plus the backend hook methods."""

    kind = "abstract"

    def __init__(self) -> None:
        self._uid_by_payload: Dict[Payload, int] = {}
        self._reps: List[Payload] = []

    # -- backend hooks -------------------------------------------------

    def _reduce(self, payload: Payload) -> Payload:
        raise NotImplementedError

    def _mul_payload(self, a: Payload, b: Payload) -> Payload:
        raise NotImplementedError

    def _inv_payload(self, a: Payload) -> Payload:
        raise NotImplementedError

    def _identity_payload(self) -> Payload:
        raise NotImplementedError

    def _generator_payloads(self) -> List[Payload]:
        raise NotImplementedError

    def _length(self, payload: Payload) -> int:
        raise NotImplementedError

    def _payload_key(self, payload: Payload):
        raise NotImplementedError

    def _find_equal_uid(self, payload: Payload) -> Optional[int]:
        # payloads are unique per class unless a backend overrides this
        return None

    def _register(self, payload: Payload, uid: int) -> None:
        pass

    # -- interning -----------------------------------------------------

    def _intern(self, payload: Payload) -> GroupElement:
        uid = self._uid_by_payload.get(payload)
        if uid is None:
            uid = self._find_equal_uid(payload)
            if uid is None:
                uid = len(self._reps)
                self._reps.append(payload)
                self._register(payload, uid)
            self._uid_by_payload[payload] = uid
        return GroupElement(self, self._reps[uid], uid)

    def element_by_uid(self, uid: int) -> GroupElement:
        return GroupElement(self, self._reps[uid], uid)

    # -- public API ----------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return False

    @property
    def order(self) -> Optional[int]:
        return None

    def canonicalize(self, raw: Iterable) -> GroupElement:
        """Canonical element for a raw backend word/payload."""
        return self._intern(self._reduce(tuple(raw)))

    def identity(self) -> GroupElement:
        return self._intern(self._identity_payload())

    def multiply(self, x: GroupElement, y: GroupElement) -> GroupElement:
        self._check(x)
        self._check(y)
        return self._intern(self._reduce(self._mul_payload(x.payload, y.payload)))

    def invert(self, x: GroupElement) -> GroupElement:
        self._check(x)
        return self._intern(self._reduce(self._inv_payload(x.payload)))

    def equals(self, x: GroupElement, y: GroupElement) -> bool:
        self._check(x)
        self._check(y)
        return x.uid == y.uid

    def is_identity(self, x: GroupElement) -> bool:
        return self.equals(x, self.identity())

    def sort_key(self, x: GroupElement):
        """(word length, canonical word) -- the deterministic order."""
        return (self._length(x.payload), self._payload_key(x.payload))

    def _check(self, x: GroupElement) -> None:
        if not isinstance(x, GroupElement) or x.ctx is not self:
            raise ValueError("group backend mismatch")

    def enumerate_ball(
        self, radius: int, max_size: Optional[int] = None
    ) -> List[GroupElement]:
        """All elements of word length <= radius, sorted by (length, word).

        Breadth-first over the generator set with registry deduplication;
        new classes at each depth are interned in sorted order.
        """
        if radius < 0:
            raise ValueError("radius must be >= 0")
        ident = self.identity()
        ball = [ident]
        seen = {ident.uid}
        frontier = [ident]
        gens = [self._intern(self._reduce(p)) for p in self._generator_payloads()]
        for _ in range(radius):
            candidates = sorted(
                {
                    self._reduce(self._mul_payload(x.payload, g.payload))
                    for x in frontier
                    for g in gens
                },
                key=lambda p: (self._length(p), self._payload_key(p)),
            )
            new: List[GroupElement] = []
            for payload in candidates:
                el = self._intern(payload)
                if el.uid not in seen:
                    seen.add(el.uid)
                    new.append(el)
                    if max_size is not None and len(ball) + len(new) > max_size:
                        raise ResourceLimitError(
                            f"ball exceeds the configured cap of {max_size} elements"
                        )
            if not new:
                break
            ball.extend(new)
            frontier = new
        return ball

    def parse_element(self, text: str) -> GroupElement:
        raise NotImplementedError

    def format_element(self, x: GroupElement) -> str:
        raise NotImplementedError


# ---------------------------------------------------------------------------
# finite backend


class FiniteGroup(GroupContext):
    kind = "finite"

    def __init__(self, names: Sequence[str], table: Sequence[Sequence[int]]):
        super().__init__()
        names = tuple(names)
        n = len(names)
        if n == 0:
            raise ValueError("finite group needs at least one element")
        if len(set(names)) != n:
            raise ValueError("element names must be distinct")
        if len(table) != n or any(len(row) != n for row in table):
            raise ValueError("multiplication table must be square of matching size")
        tbl = tuple(tuple(int(v) for v in row) for row in table)
        for row in tbl:
            for v in row:
                if not 0 <= v < n:
                    raise ValueError("table entry out of range (closure fails)")
        ident = None
        for e in range(n):
            if all(tbl[e][j] == j and tbl[j][e] == j for j in range(n)):
                ident = e
                break
        if ident is None:
            raise ValueError("table has no two-sided identity")
        inverses = []
        for i in range(n):
            inv = next(
                (j for j in range(n) if tbl[i][j] == ident and tbl[j][i] == ident),
                None,
            )
            if inv is None:
                raise ValueError(f"element {names[i]!r} has no inverse")
            inverses.append(inv)
        for a in range(n):
            for b in range(n):
                ab = tbl[a][b]
                for c in range(n):
                    if tbl[ab][c] != tbl[a][tbl[b][c]]:
                        raise ValueError("table is not associative")
        self.names = names
        self.table = tbl
        self._ident = ident
        self._inverses = inverses
        self._name_to_idx = {name: i for i, name in enumerate(names)}
        for i in range(n):
            self._intern((i,))  # uid == table index, deterministically

    @property
    def is_finite(self) -> bool:
        return True

    @property
    def order(self) -> int:
        return len(self.names)

    def elements(self) -> List[GroupElement]:
        return [self.element_by_uid(i) for i in range(len(self.names))]

    def _reduce(self, payload):
        (i,) = payload
        if not 0 <= i < len(self.names):
            raise ParseError("element index out of range")
        return (i,)

    def _mul_payload(self, a, b):
        return (self.table[a[0]][b[0]],)

    def _inv_payload(self, a):
        return (self._inverses[a[0]],)

    def _identity_payload(self):
        return (self._ident,)

    def _generator_payloads(self):
        others = [i for i in range(len(self.names)) if i != self._ident]
        others.sort(key=lambda i: self.names[i])
        return [(i,) for i in others]

    def _length(self, payload):
        return 0 if payload[0] == self._ident else 1

    def _payload_key(self, payload):
        return self.names[payload[0]]

    def parse_element(self, text: str) -> GroupElement:
        idx = self._name_to_idx.get(text.strip())
        if idx is None:
            raise ParseError(f"unknown element name {text!r}")
        return self.element_by_uid(idx)

    def format_element(self, x: GroupElement) -> str:
        return self.names[x.payload[0]]


# ---------------------------------------------------------------------------
# lattice backend (genus 1)

_LATTICE_RE = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


class LatticeGroup(GroupContext):
    kind = "lattice"

    def _reduce(self, payload):
        m, n = payload
        return (int(m), int(n))

    def _mul_payload(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def _inv_payload(self, a):
        return (-a[0], -a[1])

    def _identity_payload(self):
        return (0, 0)

    def _generator_payloads(self):
        return [(1, 0), (-1, 0), (0, 1), (0, -1)]

    def _length(self, payload):
        return abs(payload[0]) + abs(payload[1])

    def _payload_key(self, payload):
        return payload

    def parse_element(self, text: str) -> GroupElement:
        m = _LATTICE_RE.fullmatch(text.strip())
        if m is None:
            raise ParseError(f"lattice element must look like '(m,n)', got {text!r}")
        return self.canonicalize((int(m.group(1)), int(m.group(2))))

    def format_element(self, x: GroupElement) -> str:
        return f"({x.payload[0]},{x.payload[1]})"


# ---------------------------------------------------------------------------
# surface backend (genus >= 2)


def _free_reduce(word: Sequence[int]) -> Tuple[int, ...]:
    out: List[int] = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def _inverse_word(word: Sequence[int]) -> Tuple[int, ...]:
    return tuple(-letter for letter in reversed(word))


_SURFACE_TOKEN = re.compile(r"([ab])(\d+)(\^-1)?")


class SurfaceGroup(GroupContext):
    """Genus-g surface group; letters a_i -> 2i-1, b_i -> 2i, inverses negated."""

    kind = "surface"

    def __init__(self, genus: int):
        if genus < 2:
            raise ValueError("surface genus must be >= 2")
        super().__init__()
        self.genus = genus
        relator: List[int] = []
        for i in range(1, genus + 1):
            a, b = 2 * i - 1, 2 * i
            relator += [a, b, -a, -b]
        self.relator = tuple(relator)
        self._half = 2 * genus  # half the relator length 4g
        self._table = self._build_dehn_table()
        self._buckets: Dict[Tuple[int, ...], List[int]] = {}

    def _build_dehn_table(self) -> Dict[Tuple[int, ...], Tuple[int, ...]]:
        """Map every cyclic subword longer than half the relator (over all
        cyclic conjugates of the relator and its inverse) to the inverse of
        its complement, which is strictly shorter."""
        table: Dict[Tuple[int, ...], Tuple[int, ...]] = {}
        full = len(self.relator)
        for base in (self.relator, _inverse_word(self.relator)):
            for shift in range(full):
                rot = base[shift:] + base[:shift]
                for ln in range(self._half + 1, full + 1):
                    sub = rot[:ln]
                    if sub not in table:
                        table[sub] = _inverse_word(rot[ln:])
        return table

    def _reduce(self, payload):
        word = _free_reduce(self._validate_letters(payload))
        full = len(self.relator)
        while True:
            hit = None
            for pos in range(len(word)):
                top = min(full, len(word) - pos)
                for ln in range(top, self._half, -1):
                    repl = self._table.get(word[pos : pos + ln])
                    if repl is not None:
                        hit = (pos, ln, repl)
                        break
                if hit:
                    break
            if hit is None:
                return word
            pos, ln, repl = hit
            word = _free_reduce(word[:pos] + repl + word[pos + ln :])

    def _validate_letters(self, payload) -> Tuple[int, ...]:
        limit = 2 * self.genus
        for letter in payload:
            if not isinstance(letter, int) or letter == 0 or abs(letter) > limit:
                raise ParseError(f"letter {letter!r} is not valid for genus {self.genus}")
        return tuple(payload)

    def _mul_payload(self, a, b):
        return a + b

    def _inv_payload(self, a):
        return _inverse_word(a)

    def _identity_payload(self):
        return ()

    def _generator_payloads(self):
        out = []
        for idx in range(1, 2 * self.genus + 1):
            out.append((idx,))
            out.append((-idx,))
        return out

    def _length(self, payload):
        return len(payload)

    def _payload_key(self, payload):
        return tuple(
            (abs(letter) * 2 + (0 if letter > 0 else 1)) for letter in payload
        )

    def _abelianized(self, payload) -> Tuple[int, ...]:
        counts = [0] * (2 * self.genus)
        for letter in payload:
            counts[abs(letter) - 1] += 1 if letter > 0 else -1
        return tuple(counts)

    def _find_equal_uid(self, payload):
        for uid in self._buckets.get(self._abelianized(payload), []):
            if not self._reduce(payload + _inverse_word(self._reps[uid])):
                return uid
        return None

    def _register(self, payload, uid):
        self._buckets.setdefault(self._abelianized(payload), []).append(uid)

    def is_trivial_word(self, raw: Iterable[int]) -> bool:
        """Word problem on raw letter sequences, without interning."""
        return not self._reduce(tuple(raw))

    def parse_element(self, text: str) -> GroupElement:
        text = text.strip()
        if text in ("", "e", "1"):
            return self.identity()
        letters: List[int] = []
        for token in text.split():
            m = _SURFACE_TOKEN.fullmatch(token)
            if m is None:
                raise ParseError(f"unknown letter {token!r}")
            idx = int(m.group(2))
            if not 1 <= idx <= self.genus:
                raise ParseError(
                    f"letter index {idx} exceeds genus {self.genus} in {token!r}"
                )
            letter = 2 * idx - 1 if m.group(1) == "a" else 2 * idx
            letters.append(-letter if m.group(3) else letter)
        return self.canonicalize(letters)

    def format_element(self, x: GroupElement) -> str:
        if not x.payload:
            return "e"
        tokens = []
        for letter in x.payload:
            idx = (abs(letter) + 1) // 2
            base = "a" if abs(letter) % 2 == 1 else "b"
            tokens.append(f"{base}{idx}" + ("^-1" if letter < 0 else ""))
        return " ".join(tokens)


# ---------------------------------------------------------------------------
# construction helpers


def cyclic_group(m: int, names: Optional[Sequence[str]] = None) -> FiniteGroup:
    if names is None:
        names = ["e"] + [f"g{i}" if i > 1 else "g" for i in range(1, m)]
    table = [[(i + j) % m for j in range(m)] for i in range(m)]
    return FiniteGroup(names, table)


def group_from_spec(spec: dict) -> GroupContext:
    """Build a context from the JSON group-spec object."""
    kind = spec.get("kind")
    if kind == "finite":
        return FiniteGroup(spec["elements"], spec["table"])
    if kind == "lattice":
        return LatticeGroup()
    if kind == "surface":
        return SurfaceGroup(int(spec["genus"]))
    raise ParseError(f"unknown group kind {kind!r}")


_BUILTINS = {
    "trivial": lambda: cyclic_group(1),
    "C2": lambda: cyclic_group(2),
    "C3": lambda: cyclic_group(3),
    "lattice": lambda: LatticeGroup(),
}


def load_group(name_or_path: str) -> GroupContext:
    """Resolve a builtin name (trivial | C2 | C3 | lattice | surface:g) or a
    JSON group-spec file path."""
    builder = _BUILTINS.get(name_or_path)
    if builder is not None:
        return builder()
    if name_or_path.startswith("surface:"):
        try:
            genus = int(name_or_path.split(":", 1)[1])
        except ValueError as exc:
            raise ParseError(f"bad surface genus in {name_or_path!r}") from exc
        return SurfaceGroup(genus)
    try:
        with open(name_or_path, "r", encoding="utf-8") as fh:
            spec = json.load(fh)
    except OSError as exc:
        raise ParseError(f"not a builtin group or readable spec file: {name_or_path!r}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in group spec {name_or_path!r}: {exc}") from exc
    return group_from_spec(spec)
