#!/usr/bin/env python3
"""Write the reference diagrams as DOT files into out/.

Emits the three small quivers, the module category at (d, n) = (2, 3)
with irreducible arrows, and the almost-positive category at the same
parameters.
"""
import sys
from pathlib import Path

sys.path.insert(0, "src")

from hicat.emit import EmitSpec, emit
from hicat.models import almost_positive_model, module_model
from hicat.tuples import build_quiver


def main() -> int:
    out = Path("out")
    out.mkdir(exist_ok=True)
    quiver_spec = EmitSpec(fmt="dot", content="quiver")
    cat_spec = EmitSpec(fmt="dot", content="category", arrows="irreducible-only")
    for d, n in ((1, 3), (2, 3), (3, 3)):
        emit(build_quiver(d, n), quiver_spec, out / f"quiver_{d}_{n}.dot")
    emit(module_model(2, 3), cat_spec, out / "module_2_3.dot")
    emit(almost_positive_model(2, 3), cat_spec, out / "almost_positive_2_3.dot")
    print(f"wrote {len(list(out.glob('*.dot')))} DOT files to {out}/")
    return 0


if __name__ == "__main__":
    sys.exit(main())
