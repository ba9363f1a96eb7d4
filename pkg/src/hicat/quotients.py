"""Factoring-through ideals and the resulting quotient models.

Two ideals are built here: the ideal of morphisms factoring through the
projective-injective objects of the module model, and the ideal of
morphisms factoring through an arrow from a shifted projective to a
projective image in the cyclic model with restricted extensions.  Since
all hom spaces are at most one-dimensional and composition scalars are
0/1, a single middle object (or a single admissible arrow) suffices to
witness membership in the ideal; closure under composition is verified
by tests rather than assumed.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .exangles import Exangle, realize
from .models import (
    MODULE,
    RELATIVE_F,
    BasisMorphism,
    CategoryModel,
    MorphismMatrix,
)
from .tuples import IndexTuple

OBJECT_CLASS = "through-object-class"
ARROW_CLASS = "through-arrow-class"


@dataclass(frozen=True)
class IdealSpec:
    """A factoring-through ideal of a base model.

    Either an object class (morphisms factoring through a member object)
    or an arrow class (morphisms factoring through an admissible arrow).
    """
    base: CategoryModel
    kind: str
    class_objects: frozenset[IndexTuple] | None = None
    class_arrows: frozenset[tuple[IndexTuple, IndexTuple]] | None = None


def projinj_ideal(model: CategoryModel) -> IdealSpec:
    """The object-class ideal of projective-injective objects of a module model."""
    if model.kind != MODULE:
        raise ValueError(f"projective-injective ideal needs a module model, got {model.kind}")
    cls = frozenset(a for a in model.objects
                    if model.classify(a).projective and model.classify(a).injective)
    return IdealSpec(base=model, kind=OBJECT_CLASS, class_objects=cls)


def injproj_ideal(model: CategoryModel) -> IdealSpec:
    """The arrow-class ideal from shifted projectives to projective images."""
    if model.kind != RELATIVE_F:
        raise ValueError(f"arrow ideal needs the restricted cyclic model, got {model.kind}")
    sources = [a for a in model.objects if model.classify(a).shifted_projective]
    targets = [a for a in model.objects if model.classify(a).projective_image]
    arrows = frozenset((z1, z2) for z1 in sources for z2 in targets
                       if model.hom_dim(z1, z2) == 1)
    return IdealSpec(base=model, kind=ARROW_CLASS, class_arrows=arrows)


def factors_through(model: CategoryModel, f: BasisMorphism, ideal: IdealSpec) -> bool:
    """Whether a basis morphism lies in the ideal.

    Object class: some class object z admits basis morphisms source -> z -> target
    with nonzero composite.  Arrow class: some admissible arrow z1 -> z2 fits into
    source -> z1 -> z2 -> target with all partial composites nonzero.
    """
    src, tgt = f.source, f.target
    if ideal.kind == OBJECT_CLASS:
        for z in sorted(ideal.class_objects):
            if model.hom_dim(src, z) and model.hom_dim(z, tgt) \
                    and model.compose_scalar(src, z, tgt):
                return True
        return False
    for z1, z2 in sorted(ideal.class_arrows):
        if not (model.hom_dim(src, z1) and model.hom_dim(z2, tgt)):
            continue
        if model.compose_scalar(src, z1, z2) and model.compose_scalar(src, z2, tgt):
            return True
    return False


@dataclass(frozen=True)
class QuotientModel:
    """An ideal quotient of a base model.

    The hom table keeps exactly the basis morphisms outside the ideal;
    extensions and realized exangles are inherited from the base, with
    middle summands that became zero objects deleted.
    """
    base: CategoryModel
    ideal: IdealSpec
    killed: frozenset[tuple[IndexTuple, IndexTuple]]
    zero_objects: tuple[IndexTuple, ...]

    @property
    def objects(self) -> tuple[IndexTuple, ...]:
        return self.base.objects

    @cached_property
    def nonzero_objects(self) -> tuple[IndexTuple, ...]:
        dead = set(self.zero_objects)
        return tuple(a for a in self.base.objects if a not in dead)

    def hom_dim(self, src: IndexTuple, tgt: IndexTuple) -> int:
        if self.base.hom_dim(src, tgt) == 0 or (src, tgt) in self.killed:
            return 0
        return 1

    def ext_dim(self, b: IndexTuple, a: IndexTuple) -> int:
        return self.base.ext_dim(b, a)

    def compose_scalar(self, x: IndexTuple, y: IndexTuple, z: IndexTuple) -> int:
        if self.hom_dim(x, y) == 0 or self.hom_dim(y, z) == 0:
            raise ValueError(f"no surviving basis morphisms along {x} -> {y} -> {z}")
        if self.base.compose_scalar(x, y, z) == 0 or (x, z) in self.killed:
            return 0
        return 1

    def exangle(self, b: IndexTuple, a: IndexTuple) -> Exangle:
        """Image of the base exangle with zero-object middle summands deleted."""
        return strip_zero_summands(realize(self.base, b, a), set(self.zero_objects))


def quotient(model: CategoryModel, ideal: IdealSpec) -> QuotientModel:
    """Build the quotient of a model by a factoring-through ideal."""
    if ideal.base is not model and ideal.base != model:
        raise ValueError("ideal was built over a different base model")
    killed = set()
    for src in model.objects:
        for tgt in model.objects:
            if model.hom_dim(src, tgt) and \
                    factors_through(model, BasisMorphism(src, tgt), ideal):
                killed.add((src, tgt))
    zero = tuple(a for a in model.objects if (a, a) in killed)
    return QuotientModel(base=model, ideal=ideal,
                         killed=frozenset(killed), zero_objects=zero)


def strip_zero_summands(e: Exangle, dead: set[IndexTuple]) -> Exangle:
    """Delete middle summands in the dead set, restricting the matrices."""
    keep_per_level = [[j for j, lbl in enumerate(level) if lbl not in dead]
                      for level in e.middles]
    new_middles = tuple(tuple(level[j] for j in keep)
                        for level, keep in zip(e.middles, keep_per_level))
    col_keep = [list(range(1))] + keep_per_level  # X_a column always survives
    row_keep = keep_per_level + [list(range(1))]  # X_b row always survives
    new_diffs = []
    for diff, rows, cols in zip(e.differentials, row_keep, col_keep):
        entries = tuple(tuple(diff.entries[i][j] for j in cols) for i in rows)
        new_diffs.append(MorphismMatrix(tuple(diff.source[j] for j in cols),
                                        tuple(diff.target[i] for i in rows),
                                        entries))
    return Exangle(model=e.model, x0=e.x0, xlast=e.xlast,
                   middles=new_middles, differentials=tuple(new_diffs),
                   extension_marker=e.extension_marker)
