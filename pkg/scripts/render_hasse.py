"""Write Hasse diagrams of the small orders as DOT files, and PNGs if Graphviz is on PATH.

Usage: python3 scripts/render_hasse.py [outdir] [--max-degree 3]
"""

import argparse
import shutil
import subprocess
from pathlib import Path

from permfaces.cli import hasse_dot
from permfaces.order import OrderKind, build_order
from permfaces.tree import build_tree_order


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("outdir", nargs="?", default="hasse")
    p.add_argument("--max-degree", type=int, default=3)
    args = p.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    dot = shutil.which("dot")
    for n in range(1, args.max_degree + 1):
        for kind in OrderKind:
            for basis, build in (("pword", build_order), ("tree", build_tree_order)):
                name = f"{basis}-{kind.value}-{n}"
                path = out / f"{name}.dot"
                path.write_text(hasse_dot(build(n, kind), name))
                if dot:
                    subprocess.run([dot, "-Tpng", str(path), "-o", str(path.with_suffix(".png"))], check=True)
                print(path)


if __name__ == "__main__":
    main()
