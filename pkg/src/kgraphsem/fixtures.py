"""Named example presentations and the name parser behind `example`.

The catalog covers the standard small cases: one vertex with loops (one or
several colors), cyclic permutation graphs, graphs with a proper hereditary
part (both the non-cofinal and the cofinal "funnel" kind), and the
eventually periodic two-color bridge rays.
"""

from __future__ import annotations

import re

from .errors import ExampleError
from .model import KGraphPresentation, RayPresentation


def o2() -> KGraphPresentation:
    """One vertex, two loops of one color."""
    return KGraphPresentation(k=1, vertices=("v",), matrices=(((2,),),))


def circle1() -> KGraphPresentation:
    """One vertex, one loop."""
    return KGraphPresentation(k=1, vertices=("v",), matrices=(((1,),),))


def torus(*loop_counts: int) -> KGraphPresentation:
    """One vertex with n_i loops of color i, one count per color."""
    if not loop_counts:
        raise ExampleError("torus needs at least one loop count")
    return KGraphPresentation(
        k=len(loop_counts),
        vertices=("v",),
        matrices=tuple(((n,),) for n in loop_counts),
    )


def cycle(k: int, n: int) -> KGraphPresentation:
    """n vertices in a directed cycle; every color uses the same rotation."""
    if n < 1:
        raise ExampleError("cycle needs at least one vertex")
    if k < 1:
        raise ExampleError("cycle needs at least one color")
    p = tuple(
        tuple(1 if c == (r + 1) % n else 0 for c in range(n)) for r in range(n)
    )
    return KGraphPresentation(
        k=k,
        vertices=tuple(f"v{i}" for i in range(n)),
        matrices=(p,) * k,
    )


def hereditary2() -> KGraphPresentation:
    """Two vertices; b is hereditary but a is never absorbed (not cofinal)."""
    return KGraphPresentation(
        k=1, vertices=("a", "b"), matrices=(((1, 1), (0, 2)),)
    )


def funnel2() -> KGraphPresentation:
    """Two vertices; everything funnels into the doubling loop at b."""
    return KGraphPresentation(
        k=1, vertices=("a", "b"), matrices=(((0, 1), (0, 2)),)
    )


def funnel3() -> KGraphPresentation:
    """Three vertices funneling into a 2-cycle; cofinal and stably finite."""
    return KGraphPresentation(
        k=1,
        vertices=("a", "b", "c"),
        matrices=(((0, 1, 0), (0, 0, 1), (0, 1, 0)),),
    )


def funnel2c() -> KGraphPresentation:
    """Two-color version of the funnel; both colors share one matrix."""
    m = ((0, 1), (0, 2))
    return KGraphPresentation(k=2, vertices=("a", "b"), matrices=(m, m))


def bridge(
    b_counts, r_counts, prefix_length: int = 0
) -> RayPresentation:
    """Two-color ray with one vertex per level and 1x1 blocks.

    b_counts and r_counts list the per-level edge counts of the two colors
    over one prefix-plus-period window; levels beyond the window repeat the
    periodic part.
    """
    b_counts = tuple(int(x) for x in b_counts)
    r_counts = tuple(int(x) for x in r_counts)
    if len(b_counts) != len(r_counts):
        raise ExampleError("bridge needs equally long count lists")
    if not b_counts:
        raise ExampleError("bridge needs at least one level")
    if not 0 <= prefix_length < len(b_counts):
        raise ExampleError("bridge prefix must leave a nonempty period")
    return RayPresentation(
        k=2,
        level_sizes=(1,) * len(b_counts),
        blocks=(
            tuple(((x,),) for x in b_counts),
            tuple(((x,),) for x in r_counts),
        ),
        prefix_length=prefix_length,
        period=len(b_counts) - prefix_length,
    )


_PLAIN = {
    "o2": o2,
    "circle1": circle1,
    "hereditary2": hereditary2,
    "funnel2": funnel2,
    "funnel3": funnel3,
    "funnel2c": funnel2c,
}

_TORUS = re.compile(r"torus\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)\Z")
_CYCLE = re.compile(r"cycle\(\s*(\d+)\s*,\s*(\d+)\s*\)\Z")
_BRIDGE = re.compile(
    r"bridge\(\s*b\s*=\s*\[([0-9,\s]*)\]\s*,\s*r\s*=\s*\[([0-9,\s]*)\]"
    r"(?:\s*,\s*prefix\s*=\s*(\d+))?\s*\)\Z"
)


def _int_list(text: str) -> tuple[int, ...]:
    items = [part.strip() for part in text.split(",") if part.strip()]
    return tuple(int(part) for part in items)


def named(name: str):
    """Build the example for a catalog name like "cycle(2,3)".

    Accepted: o2, circle1, hereditary2, funnel2, funnel3, funnel2c,
    torus(n1,...,nk), cycle(k,n), bridge(b=[...],r=[...]) with an optional
    ,prefix=n inside the parentheses.
    """
    name = name.strip()
    if name in _PLAIN:
        return _PLAIN[name]()
    m = _TORUS.match(name)
    if m:
        return torus(*_int_list(m.group(1)))
    m = _CYCLE.match(name)
    if m:
        return cycle(int(m.group(1)), int(m.group(2)))
    m = _BRIDGE.match(name)
    if m:
        prefix = int(m.group(3)) if m.group(3) else 0
        try:
            return bridge(_int_list(m.group(1)), _int_list(m.group(2)), prefix)
        except ExampleError:
            raise
        except ValueError as exc:
            raise ExampleError(f"bad bridge specification: {exc}") from exc
    raise ExampleError(f"unknown example {name!r}")
