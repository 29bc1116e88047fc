#!/usr/bin/env python3
"""Regenerate the desk-scale figures: both five-shape families, their
unit-square partitions, and a digitized-angle path.

Writes into ./out/ (override with FIGURE_DIR).
"""
import json
import os
import pathlib
import sys

from pixelwedge import (
    AngleSpec,
    RenderOptions,
    Slopes,
    digitize_angle_path,
    enumerate_shapes,
    partition_unit_square,
    render_partition,
    render_pixelset,
)

FAMILIES = {
    "steep": Slopes(2, 1, -3, 1),     # slope 2 meeting slope -3
    "shallow": Slopes(3, -1, -1, 2),  # slope -3 meeting slope -1/2
}


def main() -> int:
    outdir = pathlib.Path(os.environ.get("FIGURE_DIR", "out"))
    outdir.mkdir(parents=True, exist_ok=True)
    for name, slopes in FAMILIES.items():
        shapes = enumerate_shapes(slopes, 4)
        for shape in shapes:
            stem = outdir / f"{name}_class{shape.index}"
            stem.with_suffix(".txt").write_bytes(
                render_pixelset(shape.bitmap, RenderOptions(format="ascii"))
            )
            stem.with_suffix(".pbm").write_bytes(
                render_pixelset(shape.bitmap, RenderOptions(format="pbm"))
            )
        cells = partition_unit_square(slopes)
        (outdir / f"{name}_partition.svg").write_bytes(
            render_partition(cells, RenderOptions(format="svg", scale=512))
        )
        (outdir / f"{name}_partition.json").write_bytes(
            render_partition(cells, RenderOptions(format="json"))
        )
        spec = AngleSpec(*slopes.as_tuple(), corner=("0.3", "0.7"))
        path = digitize_angle_path(spec, 6)
        (outdir / f"{name}_angle_path.json").write_text(
            json.dumps([list(v) for v in path]) + "\n"
        )
        print(f"{name}: {len(shapes)} classes, partition + path written")
    print(f"figures in {outdir}/")
    return 0


if __name__ == "__main__":
    sys.exit(main())
