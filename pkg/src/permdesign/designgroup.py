"""Group actions on incidence structures: preservation checks, stabilizers
via the disjoint point/block union action, flag-transitivity, and the
local-primitivity verdict."""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import is_quasiprimitive, primitivity_status
from .group import (EnumerationLimitError, GroupWithChain,
                    StructureContradiction, induced_action)
from .perm import Permutation


class PreservationError(ValueError):
    """The group does not permute the block set of the structure."""


class TrivialDesignError(ValueError):
    """Every block is incident with every point; such structures are
    classified separately and excluded from design verdicts."""


class RepeatedBlockError(ValueError):
    """Group verdicts need distinct blocks; the induced index action of a
    repeated block is not well defined."""


@dataclass(frozen=True)
class LocalPrimitivityReport:
    flag_transitive: bool
    point_transitive: bool
    block_transitive: bool
    point_local_primitive: bool
    block_local_primitive: bool
    point_primitive: bool
    block_quasiprimitive: bool | None  # None when the order limit was exceeded
    stabilizer_bound_ok: bool
    notes: tuple = ()

    @property
    def locally_primitive(self):
        return self.point_local_primitive and self.block_local_primitive

    def to_json_dict(self):
        out = {
            "flag_transitive": self.flag_transitive,
            "point_transitive": self.point_transitive,
            "block_transitive": self.block_transitive,
            "point_local_primitive": self.point_local_primitive,
            "block_local_primitive": self.block_local_primitive,
            "point_primitive": self.point_primitive,
            "block_quasiprimitive": ("unknown" if self.block_quasiprimitive is None
                                     else self.block_quasiprimitive),
            "stabilizer_bound_ok": self.stabilizer_bound_ok,
            "notes": list(self.notes),
        }
        return out


class DesignAction:
    """A group acting on an incidence structure, with the block action and
    the disjoint-union action (points 0..v-1, block j at vertex v+j) built
    once and shared by the verdict operations.

    Block stabilizers are point stabilizers of block vertices in the union
    action, reusing the one well-tested stabilizer primitive."""

    def __init__(self, group, structure):
        if group.degree != structure.v:
            raise PreservationError(
                f"group degree {group.degree} != point count {structure.v}")
        if structure.has_repeated_blocks():
            raise RepeatedBlockError(
                "group verdicts require distinct blocks")
        self.group = group
        self.structure = structure
        self._block_index = {blk: j for j, blk in enumerate(structure.blocks)}
        try:
            self.block_action = induced_action(
                group, structure.blocks,
                lambda blk, g: tuple(sorted(g.images[p] for p in blk)))
        except ValueError as exc:
            raise PreservationError(
                f"group does not preserve the block set: {exc}") from exc
        v, b = structure.v, structure.b
        union_gens = []
        for g, img in zip(group.generators, self.block_action.image.generators):
            union_gens.append(Permutation(
                tuple(g.images) + tuple(v + j for j in img.images)))
        self.union_group = GroupWithChain(tuple(union_gens))
        self._stabilizers = {}  # vertex -> union stabilizer, built once

    def block_image_of(self, g):
        """Index permutation induced on blocks by an arbitrary group element."""
        images = []
        for blk in self.structure.blocks:
            target = tuple(sorted(g.images[p] for p in blk))
            j = self._block_index.get(target)
            if j is None:
                raise PreservationError("element does not preserve the block set")
            images.append(j)
        return Permutation(images)

    def point_orbit_representatives(self):
        remaining = set(range(self.structure.v))
        reps = []
        while remaining:
            p = min(remaining)
            reps.append(p)
            remaining -= self.group.orbit(p)
        return reps

    def block_orbit_representatives(self):
        image = self.block_action.image
        remaining = set(range(self.structure.b))
        reps = []
        while remaining:
            j = min(remaining)
            reps.append(j)
            remaining -= image.orbit(j)
        return reps

    def point_stabilizer_union(self, point):
        if point not in self._stabilizers:
            self._stabilizers[point] = self.union_group.point_stabilizer(point)
        return self._stabilizers[point]

    def block_stabilizer_union(self, block_index):
        return self.point_stabilizer_union(self.structure.v + block_index)

    def block_stabilizer(self, block_index):
        """Setwise stabilizer of a block, as a group on the original points."""
        stab = self.block_stabilizer_union(block_index)
        v = self.structure.v
        gens = [Permutation(g.images[:v]) for g in stab.generators]
        restricted = GroupWithChain(tuple(gens))
        if restricted.order() != stab.order():
            raise StructureContradiction(
                "union action not faithful on points")
        return restricted

    def local_point_action(self, point):
        """Stabilizer of a point acting on the blocks through it."""
        stab = self.point_stabilizer_union(point)
        v = self.structure.v
        incident = [v + j for j in self.structure.blocks_through(point)]
        return induced_action(stab, incident, lambda x, g: g.images[x])

    def local_block_action(self, block_index):
        """Stabilizer of a block acting on the points of that block."""
        stab = self.block_stabilizer_union(block_index)
        return induced_action(stab, self.structure.blocks[block_index],
                              lambda x, g: g.images[x])

    def is_point_transitive(self):
        return len(self.group.orbit(0)) == self.structure.v

    def is_block_transitive(self):
        return len(self.block_action.image.orbit(0)) == self.structure.b

    def is_flag_transitive(self):
        """Computed along both local routes (block-transitive with transitive
        block-local actions, and point-transitive with transitive point-local
        actions), which must agree."""
        via_blocks = self.is_block_transitive() and all(
            self.local_block_action(j).image.is_transitive()
            for j in self.block_orbit_representatives())
        via_points = self.is_point_transitive() and all(
            self.local_point_action(p).image.is_transitive()
            for p in self.point_orbit_representatives())
        if via_blocks != via_points:
            raise StructureContradiction(
                "the two flag-transitivity computations disagree")
        return via_blocks

    def stabilizer_bound_holds(self):
        """Strict bound |G| < |G_a|^3 / |G_ab|^2 on the canonical flag
        (first block, its smallest point)."""
        alpha = self.structure.blocks[0][0]
        beta_vertex = self.structure.v + 0
        g_alpha = self.point_stabilizer_union(alpha)
        g_alpha_beta = g_alpha.point_stabilizer(beta_vertex)
        lhs = self.group.order() * g_alpha_beta.order() ** 2
        rhs = g_alpha.order() ** 3
        return lhs < rhs

    def local_primitivity_report(self, limit=None, strict=True):
        """Full verdict record.  With strict=True (the default) a locally
        primitive action that fails to be flag-transitive and point-primitive
        raises, since that combination is mathematically impossible; the
        analyzer passes strict=False and reports instead."""
        if self.structure.is_trivial():
            raise TrivialDesignError(
                "every block is incident with every point")
        notes = []
        point_transitive = self.is_point_transitive()
        block_transitive = self.is_block_transitive()
        flag_transitive = self.is_flag_transitive()

        point_local = True
        for p in self.point_orbit_representatives():
            status = primitivity_status(self.local_point_action(p).image)
            if status != "primitive":
                point_local = False
                notes.append(f"stabilizer of point {p} is {status} "
                             "on its incident blocks")
                break
        block_local = True
        for j in self.block_orbit_representatives():
            status = primitivity_status(self.local_block_action(j).image)
            if status != "primitive":
                block_local = False
                notes.append(f"stabilizer of block {j} is {status} "
                             "on its points")
                break

        point_primitive = primitivity_status(self.group) == "primitive"
        try:
            block_quasiprimitive = is_quasiprimitive(self.block_action.image,
                                                     limit)
        except EnumerationLimitError:
            block_quasiprimitive = None
            notes.append("block quasiprimitivity unknown: order limit exceeded")
        bound_ok = self.stabilizer_bound_holds()

        report = LocalPrimitivityReport(
            flag_transitive=flag_transitive,
            point_transitive=point_transitive,
            block_transitive=block_transitive,
            point_local_primitive=point_local,
            block_local_primitive=block_local,
            point_primitive=point_primitive,
            block_quasiprimitive=block_quasiprimitive,
            stabilizer_bound_ok=bound_ok,
            notes=tuple(notes),
        )
        if strict and report.locally_primitive and not (
                flag_transitive and point_primitive):
            raise StructureContradiction(
                "locally primitive action that is not flag-transitive and "
                "point-primitive")
        return report


def block_stabilizer(group, structure, block_index):
    return DesignAction(group, structure).block_stabilizer(block_index)


def point_block_actions(group, structure, point, block_index):
    """Restricted actions (G_a on the blocks through a, G_b on the points
    of b) as ActionImage objects."""
    action = DesignAction(group, structure)
    return (action.local_point_action(point),
            action.local_block_action(block_index))


def is_flag_transitive(group, structure):
    return DesignAction(group, structure).is_flag_transitive()


def is_locally_primitive(group, structure, limit=None, strict=True):
    return DesignAction(group, structure).local_primitivity_report(
        limit, strict=strict)
