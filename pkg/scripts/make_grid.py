#!/usr/bin/env python3
"""
Write the Classification Sweep Grid
===================================
Writes the JSON grid consumed by `dynportraits sweep --grid`: every point in
{0, +-1, +-1/2, +-2, +-1/3, 3/2, 5/2}, 0 <= M <= 3, 1 <= N <= 4, d in {2, 3}.
"""

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import structlog

from core.portraits import acceptance_grid

logger = structlog.get_logger()


def write_grid(output: Path, max_degree: int | None = None) -> int:
    """Write the grid to `output`; returns the number of entries"""
    tasks = acceptance_grid()
    if max_degree is not None:
        tasks = [task for task in tasks if task.d <= max_degree]
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(json.dumps([asdict(task) for task in tasks], indent=2) + "\n", encoding="utf-8")
    logger.info("grid_written", path=str(output), entries=len(tasks))
    return len(tasks)


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Write the classification sweep grid")
    parser.add_argument("--output", type=Path, default=Path("grid.json"), help="Output JSON file")
    parser.add_argument("--max-degree", type=int, default=None, help="Drop entries with larger d")
    args = parser.parse_args()

    count = write_grid(args.output, args.max_degree)
    print(f"Wrote {count} grid entries to {args.output}")
