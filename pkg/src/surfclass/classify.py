"""Classification of compact surfaces by orientability, genus, boundary."""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import Complex, euler_characteristic
from .connectivity import component_subcomplexes, components
from .errors import EmptyComplex, InvalidSurface, NotSurface
from .orientation import OrientationWitness, orient2
from .surface import is_surface


@dataclass(frozen=True)
class SurfaceType:
    """The classification triple plus the Euler characteristic."""

    orientable: bool
    genus: int
    boundary: int
    euler: int

    def name(self) -> str:
        """Conventional name, unique per homeomorphism type."""
        g, b = self.genus, self.boundary
        if self.orientable:
            if b == 0:
                return "S2" if g == 0 else "T2" if g == 1 else f"F{g}"
            return f"F_{{{g},{b}}}"
        if b == 0:
            return "RP2" if g == 1 else "Kl" if g == 2 else f"N{g}"
        return f"N_{{{g},{b}}}"


def genus(euler: int, orientable: bool, boundary: int) -> int:
    """Solve the Euler formula for the genus; raise if no surface fits."""
    if boundary < 0:
        raise InvalidSurface("negative boundary count")
    rest = 2 - euler - boundary
    if orientable:
        if rest < 0 or rest % 2:
            raise InvalidSurface(
                f"no orientable surface has chi={euler} with {boundary} boundary circles"
            )
        return rest // 2
    if rest < 1:
        raise InvalidSurface(
            f"no non-orientable surface has chi={euler} with {boundary} boundary circles"
        )
    return rest


def classify_component(cx: Complex) -> SurfaceType:
    """Classify one connected surface component."""
    chk = is_surface(cx)
    if not chk.surface:
        raise NotSurface("not a surface", defect=chk.defect)
    orientable = isinstance(orient2(cx), OrientationWitness)
    chi = euler_characteristic(cx)
    b = chk.boundary_count or 0
    return SurfaceType(orientable, genus(chi, orientable, b), b, chi)


def classify_surface(cx: Complex) -> list[SurfaceType]:
    """Classify every connected component, in component order.

    Raises NotSurface naming the first failing component.
    """
    out = []
    for i, sub in enumerate(component_subcomplexes(cx)):
        try:
            out.append(classify_component(sub))
        except NotSurface as exc:
            raise NotSurface(
                f"component {i} is not a surface: {exc.defect}",
                component=i,
                defect=exc.defect,
            ) from None
    return out


def is_sphere(cx: Complex) -> bool:
    """Connected, locally planar everywhere, and chi = 2."""
    try:
        if components(cx).count() != 1:
            return False
    except EmptyComplex:
        return False
    if not is_surface(cx).surface:
        return False
    return euler_characteristic(cx) == 2


def is_disk(cx: Complex) -> bool:
    """Connected, locally planar, nonempty boundary, and chi = 1."""
    try:
        if components(cx).count() != 1:
            return False
    except EmptyComplex:
        return False
    chk = is_surface(cx)
    if not chk.surface or chk.closed:
        return False
    return euler_characteristic(cx) == 1
