"""Exact projective linear algebra over the rationals.

Points and hyperplanes are homogeneous vectors of `Fraction`. Brackets are
determinants of dim+1 labelled points, stored in a canonical sorted form with
the permutation sign split off.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

Scalar = Fraction


class DegenerateInput(ValueError):
    """A join/meet produced the zero vector."""


class AffineNormalizationError(ValueError):
    """A point at infinity was used where an affine point is needed."""


class RatioUndefined(ZeroDivisionError):
    """The cutter passes through the end point of the segment."""


class ArityError(ValueError):
    pass


class UnknownLabel(KeyError):
    pass


def _frac_vec(xs: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in xs)


@dataclass(frozen=True)
class HomCoords:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", _frac_vec(self.coords))
        if len(self.coords) not in (3, 4):
            raise ArityError(f"expected 3 or 4 homogeneous coordinates, got {len(self.coords)}")
        if not any(self.coords):
            raise DegenerateInput("zero vector is not a projective point")

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def affine(self) -> tuple[Fraction, ...]:
        w = self.coords[-1]
        if w == 0:
            raise AffineNormalizationError(f"point {self.coords} is at infinity")
        return tuple(c / w for c in self.coords)

    def __iter__(self):
        return iter(self.coords)


@dataclass(frozen=True)
class HyperplaneCoords:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _frac_vec(self.coeffs))
        if len(self.coeffs) not in (3, 4):
            raise ArityError(f"expected 3 or 4 coefficients, got {len(self.coeffs)}")
        if not any(self.coeffs):
            raise DegenerateInput("zero vector is not a hyperplane")

    @property
    def dim(self) -> int:
        return len(self.coeffs) - 1

    def __iter__(self):
        return iter(self.coeffs)


def point(*xs) -> HomCoords:
    return HomCoords(tuple(xs))


def hyperplane(*xs) -> HyperplaneCoords:
    return HyperplaneCoords(tuple(xs))


@dataclass(frozen=True)
class Configuration:
    dim: int
    points: Mapping[str, HomCoords] = field(default_factory=dict)

    def __post_init__(self):
        if self.dim not in (2, 3):
            raise ValueError("dimension must be 2 or 3")
        pts = {}
        for k, v in self.points.items():
            if not isinstance(v, HomCoords):
                v = HomCoords(tuple(v))
            if v.dim != self.dim:
                raise ArityError(f"point {k} has dimension {v.dim}, config has {self.dim}")
            pts[k] = v
        object.__setattr__(self, "points", pts)

    def __getitem__(self, label: str) -> HomCoords:
        try:
            return self.points[label]
        except KeyError:
            raise UnknownLabel(label) from None

    def __contains__(self, label) -> bool:
        return label in self.points

    def labels(self) -> list[str]:
        return sorted(self.points, key=label_key)

    def with_points(self, extra: Mapping[str, HomCoords]) -> "Configuration":
        pts = dict(self.points)
        pts.update(extra)
        return Configuration(self.dim, pts)


# -- label order -------------------------------------------------------------

_CHUNK = re.compile(r"\d+|\D+")


def label_key(label: str):
    """Numeric-aware order: "2" < "10", digits before letters."""
    out = []
    for chunk in _CHUNK.findall(label):
        if chunk.isdigit():
            out.append((0, int(chunk), chunk))
        else:
            out.append((1, 0, chunk))
    return tuple(out)


def sort_labels(labels: Iterable[str]) -> list[str]:
    return sorted(labels, key=label_key)


# -- brackets ----------------------------------------------------------------

class _ZeroType:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "Zero"

    def __bool__(self):
        return False


Zero = _ZeroType()


@dataclass(frozen=True, order=False)
class Bracket:
    labels: tuple[str, ...]
    sign: int = 1

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"repeated label in bracket {self.labels}")
        if self.sign not in (1, -1):
            raise ValueError("bracket sign must be +1 or -1")

    @property
    def key(self) -> tuple[str, ...]:
        return self.labels

    def __str__(self):
        s = "[" + " ".join(self.labels) + "]"
        return s if self.sign == 1 else "-" + s


def permutation_sign(seq: Sequence) -> int:
    """Sign of the sorting permutation, via inversion count."""
    keys = [label_key(x) for x in seq]
    inv = 0
    for i in range(len(keys)):
        for j in range(i + 1, len(keys)):
            if keys[i] > keys[j]:
                inv += 1
    return -1 if inv % 2 else 1


def normalize_bracket(raw_labels: Sequence[str], dim: int | None = None):
    """Canonical (sorted labels, sign) or `Zero` for a repeated label."""
    raw = tuple(raw_labels)
    if dim is not None and len(raw) != dim + 1:
        raise ArityError(f"bracket {list(raw)} needs {dim + 1} labels in dimension {dim}")
    if len(raw) not in (3, 4):
        raise ArityError(f"bracket {list(raw)} must have 3 or 4 labels")
    if len(set(raw)) != len(raw):
        return Zero
    return Bracket(tuple(sort_labels(raw)), permutation_sign(raw))


def det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(rows)
    if n == 1:
        return Fraction(rows[0][0])
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    # Laplace along the first row; only used for n == 4
    total = Fraction(0)
    for j, a in enumerate(rows[0]):
        if a == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * a * det(minor)
    return total


def eval_bracket(config: Configuration, b) -> Fraction:
    if b is Zero:
        return Fraction(0)
    if not isinstance(b, Bracket):
        b = normalize_bracket(b, config.dim)
        if b is Zero:
            return Fraction(0)
    if len(b.labels) != config.dim + 1:
        raise ArityError(f"bracket {b} has wrong arity for dimension {config.dim}")
    rows = [tuple(config[x].coords) for x in b.labels]
    return b.sign * det(rows)


def bracket_value(config: Configuration, *labels: str) -> Fraction:
    """Determinant of the labelled rows in the order given."""
    if len(set(labels)) != len(labels):
        return Fraction(0)
    return det([tuple(config[x].coords) for x in labels])


# -- pairing, joins, meets ----------------------------------------------------

def pairing(h: HyperplaneCoords, p: HomCoords) -> Fraction:
    hc, pc = tuple(h), tuple(p)
    if len(hc) != len(pc):
        raise ArityError("dimension mismatch in pairing")
    return sum((a * b for a, b in zip(hc, pc)), Fraction(0))


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _complement(rows):
    """Vector x with <x, y> = det(rows + [y]) for every y."""
    n = len(rows) + 1
    out = []
    for i in range(n):
        e = [Fraction(0)] * n
        e[i] = Fraction(1)
        out.append(det([tuple(r) for r in rows] + [tuple(e)]))
    return tuple(out)


def _nonzero(vec, what):
    if not any(vec):
        raise DegenerateInput(f"{what} of dependent input")
    return vec


def join2(p: HomCoords, q: HomCoords) -> HyperplaneCoords:
    if p.dim != 2 or q.dim != 2:
        raise ArityError("join2 is planar")
    return HyperplaneCoords(_nonzero(_cross(p.coords, q.coords), "join2"))


def meet2(l: HyperplaneCoords, m: HyperplaneCoords) -> HomCoords:
    if l.dim != 2 or m.dim != 2:
        raise ArityError("meet2 is planar")
    return HomCoords(_nonzero(_cross(l.coeffs, m.coeffs), "meet2"))


def join3(p: HomCoords, q: HomCoords, r: HomCoords) -> HyperplaneCoords:
    if not p.dim == q.dim == r.dim == 3:
        raise ArityError("join3 is spatial")
    return HyperplaneCoords(_nonzero(_complement([p.coords, q.coords, r.coords]), "join3"))


def meet_plane_line(h: HyperplaneCoords, p: HomCoords, q: HomCoords) -> HomCoords:
    hp, hq = pairing(h, p), pairing(h, q)
    vec = tuple(hq * a - hp * b for a, b in zip(p.coords, q.coords))
    return HomCoords(_nonzero(vec, "meet_plane_line"))


def meet3(h1: HyperplaneCoords, h2: HyperplaneCoords, h3: HyperplaneCoords) -> HomCoords:
    if not h1.dim == h2.dim == h3.dim == 3:
        raise ArityError("meet3 is spatial")
    return HomCoords(_nonzero(_complement([h1.coeffs, h2.coeffs, h3.coeffs]), "meet3"))


def span(config: Configuration, labels: Sequence[str]) -> HyperplaneCoords:
    """Line (2D) or plane (3D) through the labelled points."""
    pts = [config[x] for x in labels]
    if len(pts) != config.dim:
        raise ArityError(f"need {config.dim} points to span a hyperplane, got {len(pts)}")
    return join2(*pts) if config.dim == 2 else join3(*pts)


def primitive(vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Scale a homogeneous vector to coprime integers (keeps numbers small)."""
    den = 1
    for x in vec:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise DegenerateInput("zero vector")
    return tuple(Fraction(x // g) for x in ints)


def proportional(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    n = len(u)
    return all(u[i] * v[j] == u[j] * v[i] for i in range(n) for j in range(i + 1, n))


# -- identities --------------------------------------------------------------

def gp_residual(config: Configuration, a: str, b: str, c: str, d: str, e: str) -> Fraction:
    br = lambda *xs: bracket_value(config, *xs)
    return br(a, b, c) * br(a, d, e) - br(a, b, d) * br(a, c, e) + br(a, b, e) * br(a, c, d)


def oriented_ratio(cutter: HyperplaneCoords, a: str, b: str, config: Configuration) -> Fraction:
    """Directed ratio |AZ|/|ZB| where Z is the cutter's trace on line AB."""
    ah = HomCoords(config[a].affine())
    bh = HomCoords(config[b].affine())
    den = pairing(cutter, bh)
    if den == 0:
        raise RatioUndefined(f"cutter passes through {b}")
    return -pairing(cutter, ah) / den
