"""DOT diagrams of module quivers on the canonical path basis.

One node per basis path, labeled with its target vertex; an arrow-labeled
edge wherever appending that arrow stays inside the basis.  Nodes of equal
path length share a rank, so the generator sits on top and the picture
reads like the usual hand-drawn module diagrams.
"""

from __future__ import annotations

from .algebra import Algebra, ModuleSpec
from .quiver import Path


def module_quiver_dot(algebra: Algebra, spec: ModuleSpec) -> str:
    paths = algebra.module_basis(spec)
    index = {p: k for k, p in enumerate(paths)}
    lines = [
        f"// module {spec.describe()}",
        "digraph module {",
        "  rankdir=TB;",
        '  node [shape=circle];',
    ]
    by_length: dict[int, list[Path]] = {}
    for p in paths:
        by_length.setdefault(p.length, []).append(p)
    for length in sorted(by_length):
        group = "; ".join(
            f'n{index[p]} [label="{p.target}"]' for p in by_length[length]
        )
        lines.append(f"  {{ rank=same; {group}; }}")
    for p in paths:
        for a in algebra.quiver.out_arrows(p.target):
            grown = Path(p.source, a.target, p.word + (a.id,))
            k = index.get(grown)
            if k is not None:
                lines.append(f'  n{index[p]} -> n{k} [label="{a.id}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
