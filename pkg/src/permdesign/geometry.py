"""Finite geometries over GF(q): subspace enumeration, classical groups as
permutation groups, and the three block-design families built from them
(projective, affine, and the affine subfamily cut out by a symplectic form).

Point indexing is fixed and documented: the vector (v_0, .., v_{d-1}) has
index sum(v_i * q^i), and a projective point is represented by the vector of
smallest index on its line.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import prod

from .config import point_limit
from .gf import field
from .group import GroupWithChain, StructureContradiction
from .incidence import IncidenceStructure
from .perm import Permutation


class SizeLimitError(RuntimeError):
    """Requested geometry exceeds the configured point-count limit."""


def gaussian_coefficient(n, k, q):
    """Number of k-subspaces of an n-space over GF(q); exact integers via the
    product formula.  Out-of-range k gives 0 by convention."""
    if k < 0 or k > n:
        return 0
    num = prod(q ** n - q ** j for j in range(k))
    den = prod(q ** k - q ** j for j in range(k))
    if num % den:
        raise StructureContradiction("Gaussian coefficient not integral")
    return num // den


def vector_index(vec, q):
    value = 0
    for c in reversed(vec):
        value = value * q + c
    return value


def index_vector(idx, d, q):
    out = []
    for _ in range(d):
        out.append(idx % q)
        idx //= q
    return tuple(out)


def all_vectors(d, q):
    return [index_vector(i, d, q) for i in range(q ** d)]


@dataclass(frozen=True)
class SubspaceList:
    """All i-subspaces of GF(q)^d as canonical reduced-row-echelon bases."""

    d: int
    i: int
    q: int
    canonical_matrices: tuple


def enumerate_subspaces(d, q, i, limit=None):
    """Every i-subspace exactly once, via its unique RREF basis: choose the
    pivot columns, then run over all assignments of the free entries."""
    if not 1 <= i <= d:
        raise ValueError(f"need 1 <= i <= d, got i={i}, d={d}")
    limit = point_limit() if limit is None else limit
    if q ** d > limit:
        raise SizeLimitError(f"q^d = {q ** d} exceeds the point limit {limit}")
    gf = field(q)
    matrices = []
    for pivots in combinations(range(d), i):
        free = [(r, c) for r in range(i) for c in range(pivots[r] + 1, d)
                if c not in pivots]
        for values in product(range(q), repeat=len(free)):
            mat = [[0] * d for _ in range(i)]
            for r, pc in enumerate(pivots):
                mat[r][pc] = 1
            for (r, c), val in zip(free, values):
                mat[r][c] = val
            matrices.append(tuple(tuple(row) for row in mat))
    expected = gaussian_coefficient(d, i, q)
    if len(matrices) != expected:
        raise StructureContradiction(
            f"subspace count {len(matrices)} != Gaussian coefficient {expected}")
    return SubspaceList(d=d, i=i, q=q, canonical_matrices=tuple(matrices))


def span_vectors(gf, rows):
    """All vectors in the row space, as a sorted tuple (by index)."""
    d = len(rows[0])
    out = set()
    for coeffs in product(range(gf.q), repeat=len(rows)):
        vec = [0] * d
        for c, row in zip(coeffs, rows):
            if c:
                for j in range(d):
                    vec[j] = gf.add(vec[j], gf.mul(c, row[j]))
        out.add(tuple(vec))
    return tuple(sorted(out, key=lambda v: vector_index(v, gf.q)))


def _mat_vec(gf, vec, mat):
    # row vector times matrix (right action)
    d = len(mat)
    out = [0] * len(mat[0])
    for r in range(d):
        c = vec[r]
        if c:
            row = mat[r]
            for j in range(len(row)):
                out[j] = gf.add(out[j], gf.mul(c, row[j]))
    return tuple(out)


def _identity_matrix(d):
    return [[1 if r == c else 0 for c in range(d)] for r in range(d)]


def _gl_generator_matrices(d, q):
    """Elementary transvections I + lam*E_st for lam in a GF(p)-basis of
    GF(q), plus diag(w, 1, .., 1) for a primitive element w when q > 2."""
    gf = field(q)
    basis = [gf.p ** j for j in range(gf.e)]  # 1, x, x^2, ...
    mats = []
    for s in range(d):
        for t in range(d):
            if s == t:
                continue
            for lam in basis:
                m = _identity_matrix(d)
                m[s][t] = lam
                mats.append(tuple(tuple(row) for row in m))
    if q > 2:
        m = _identity_matrix(d)
        m[0][0] = gf.generator
        mats.append(tuple(tuple(row) for row in m))
    return mats


def gl_order(d, q):
    return prod(q ** d - q ** j for j in range(d))


def agl_order(d, q):
    return q ** d * gl_order(d, q)


def pgl_order(d, q):
    return gl_order(d, q) // (q - 1)


def sp_order(m, q):
    return q ** (m * m) * prod(q ** (2 * j) - 1 for j in range(1, m + 1))


def _vector_perm(gf, d, image_of):
    return Permutation([vector_index(image_of(index_vector(i, d, gf.q)), gf.q)
                        for i in range(gf.q ** d)])


def _line_representatives(gf, d):
    """Projective points as minimal-index vector representatives, in index
    order."""
    q = gf.q
    reps = []
    seen = set()
    for i in range(1, q ** d):
        if i in seen:
            continue
        v = index_vector(i, d, q)
        line = {vector_index(tuple(gf.mul(c, x) for x in v), q)
                for c in range(1, q)}
        seen |= line
        reps.append(min(line))
    return reps


def _symplectic_form(gf, u, v):
    """Alternating form with hyperbolic pairs on coordinates (2j, 2j+1)."""
    total = 0
    for j in range(0, len(u), 2):
        total = gf.add(total, gf.mul(u[j], v[j + 1]))
        total = gf.sub(total, gf.mul(u[j + 1], v[j]))
    return total


def symplectic_form(u, v, q):
    return _symplectic_form(field(q), u, v)


def _sp_generator_maps(gf, m):
    """Symplectic transvections x -> x + lam*f(x, v)*v for every nonzero v
    and lam in a GF(p)-basis; correctness is enforced by the order assertion
    on the generated group."""
    d = 2 * m
    basis = [gf.p ** j for j in range(gf.e)]
    maps = []
    for vi in range(1, gf.q ** d):
        v = index_vector(vi, d, gf.q)
        for lam in basis:
            def image(x, v=v, lam=lam):
                c = gf.mul(lam, _symplectic_form(gf, x, v))
                return tuple(gf.add(a, gf.mul(c, b)) for a, b in zip(x, v))
            maps.append(image)
    return maps


def _translations(gf, d):
    maps = []
    for j in range(d):
        e_j = tuple(1 if c == j else 0 for c in range(d))

        def image(x, t=e_j):
            return tuple(gf.add(a, b) for a, b in zip(x, t))
        maps.append(image)
    return maps


def classical_group_generators(family, dim, q, domain="vectors", limit=None):
    """GL / PGL / AGL / Sp as permutation groups on their natural domains,
    with the chain order asserted against the closed-form order formula.

    GL and Sp act on all q^dim vectors by default ("nonzero" restricts the
    domain); PGL acts on projective points; AGL on all vectors.
    """
    limit = point_limit() if limit is None else limit
    gf = field(q)
    if q ** dim > limit:
        raise SizeLimitError(f"q^dim = {q ** dim} exceeds the point limit {limit}")

    def from_maps(maps, expected_order):
        perms = [_vector_perm(gf, dim, f) for f in maps]
        if domain == "nonzero" and family in ("GL", "Sp"):
            objs = list(range(1, q ** dim))
            perms = [Permutation([p.images[x] - 1 for x in objs]) for p in perms]
        group = GroupWithChain(tuple(perms))
        if group.order() != expected_order:
            raise StructureContradiction(
                f"{family}({dim},{q}) chain order {group.order()} != "
                f"formula {expected_order}")
        return group

    if family == "GL":
        mats = _gl_generator_matrices(dim, q)
        return from_maps([lambda x, m=m: _mat_vec(gf, x, m) for m in mats],
                         gl_order(dim, q))
    if family == "AGL":
        mats = _gl_generator_matrices(dim, q)
        maps = [lambda x, m=m: _mat_vec(gf, x, m) for m in mats]
        maps += _translations(gf, dim)
        return from_maps(maps, agl_order(dim, q))
    if family == "PGL":
        reps = _line_representatives(gf, dim)
        rep_pos = {r: i for i, r in enumerate(reps)}
        mats = _gl_generator_matrices(dim, q)
        perms = []
        for m in mats:
            images = []
            for r in reps:
                w = _mat_vec(gf, index_vector(r, dim, q), m)
                line = {vector_index(tuple(gf.mul(c, x) for x in w), q)
                        for c in range(1, q)}
                images.append(rep_pos[min(line)])
            perms.append(Permutation(images))
        group = GroupWithChain(tuple(perms))
        if group.order() != pgl_order(dim, q):
            raise StructureContradiction(
                f"PGL({dim},{q}) chain order {group.order()} != formula "
                f"{pgl_order(dim, q)}")
        return group
    if family == "Sp":
        if dim % 2:
            raise ValueError("symplectic groups need even dimension")
        return from_maps(_sp_generator_maps(gf, dim // 2), sp_order(dim // 2, q))
    raise ValueError(f"unknown family {family!r}")


def build_PG(d, q, i, limit=None):
    """Projective design: points are the 1-subspaces of GF(q)^(d+1), blocks
    the point sets of the (i+1)-subspaces, group PGL_{d+1}(q)."""
    if d < 2 or not 1 <= i <= d - 1:
        raise ValueError(f"need d >= 2 and 1 <= i <= d-1, got d={d}, i={i}")
    gf = field(q)
    dim = d + 1
    reps = _line_representatives(gf, dim)
    rep_pos = {r: j for j, r in enumerate(reps)}
    subs = enumerate_subspaces(dim, q, i + 1, limit)
    blocks = []
    for mat in subs.canonical_matrices:
        pts = set()
        for vec in span_vectors(gf, mat):
            idx = vector_index(vec, q)
            if idx == 0:
                continue
            line = {vector_index(tuple(gf.mul(c, x) for x in vec), q)
                    for c in range(1, q)}
            pts.add(rep_pos[min(line)])
        blocks.append(sorted(pts))
    structure = IncidenceStructure(v=len(reps), blocks=blocks)
    group = classical_group_generators("PGL", dim, q, limit=limit)
    return structure, group


def build_AG(d, q, i, limit=None):
    """Affine design: points are the vectors of GF(q)^d, blocks all cosets
    U + v of all i-subspaces U, group AGL_d(q)."""
    if d < 2 or not 1 <= i <= d - 1:
        raise ValueError(f"need d >= 2 and 1 <= i <= d-1, got d={d}, i={i}")
    gf = field(q)
    subs = enumerate_subspaces(d, q, i, limit)
    blocks = []
    for mat in subs.canonical_matrices:
        base = span_vectors(gf, mat)
        seen = set()
        for shift_idx in range(q ** d):
            t = index_vector(shift_idx, d, q)
            coset = frozenset(
                vector_index(tuple(gf.add(a, b) for a, b in zip(vec, t)), q)
                for vec in base)
            if coset not in seen:
                seen.add(coset)
                blocks.append(sorted(coset))
    structure = IncidenceStructure(v=q ** d, blocks=blocks)
    group = classical_group_generators("AGL", d, q, limit=limit)
    return structure, group


def parallel_classes(structure, q, d):
    """Partition of an affine design's blocks into coset families of one
    subspace each: two blocks are parallel iff they are translates."""
    gf = field(q)
    classes = {}
    for j, block in enumerate(structure.blocks):
        base = index_vector(block[0], d, q)
        key = frozenset(
            vector_index(tuple(gf.sub(index_vector(p, d, q)[c], base[c])
                               for c in range(d)), q)
            for p in block)
        classes.setdefault(key, []).append(j)
    return sorted(classes.values())


def build_symplectic_subdesign(m, q, limit=None):
    """Points are the vectors of GF(q)^(2m); blocks the cosets of the
    non-degenerate 2-subspaces of the standard alternating form; group the
    translations extended by Sp_{2m}(q)."""
    if m < 2:
        raise ValueError(f"need m >= 2, got m={m}")
    gf = field(q)
    d = 2 * m
    subs = enumerate_subspaces(d, q, 2, limit)
    blocks = []
    for mat in subs.canonical_matrices:
        if _symplectic_form(gf, mat[0], mat[1]) == 0:
            continue  # degenerate: the form vanishes on the plane
        base = span_vectors(gf, mat)
        seen = set()
        for shift_idx in range(q ** d):
            t = index_vector(shift_idx, d, q)
            coset = frozenset(
                vector_index(tuple(gf.add(a, b) for a, b in zip(vec, t)), q)
                for vec in base)
            if coset not in seen:
                seen.add(coset)
                blocks.append(sorted(coset))
    structure = IncidenceStructure(v=q ** d, blocks=blocks)
    maps = _sp_generator_maps(gf, m) + _translations(gf, d)
    perms = [_vector_perm(gf, d, f) for f in maps]
    group = GroupWithChain(tuple(perms))
    expected = q ** d * sp_order(m, q)
    if group.order() != expected:
        raise StructureContradiction(
            f"translation-symplectic group order {group.order()} != {expected}")
    return structure, group
